use perfectnum_core::eulerian::{enumerate_a228059, euler_report, verify_no_perfect};
use perfectnum_core::{spf_sieve, ExactRatio, Natural, Verdict};

const TERMS: [u64; 9] = [45, 405, 2205, 26325, 236925, 1380825, 1660725, 35698725, 3138290325];

/// Records by scanning every odd number, using only a smallest-prime-factor
/// table: `(value, |sigma - 2 value|)`.
fn scan(limit: u64) -> Vec<(u64, u64)> {
    let table = spf_sieve(limit).unwrap();
    let mut out: Vec<(u64, u64)> = Vec::new();
    for x in (3..=limit).step_by(2) {
        let f = table.factor(x);
        let odd: Vec<&(u32, u32)> = f.iter().filter(|(_, e)| e % 2 == 1).collect();
        let [&(q, k)] = odd[..] else { continue };
        if q % 4 != 1 || k % 4 != 1 || f.len() == 1 {
            continue;
        }
        let sigma: u64 = f
            .iter()
            .map(|&(p, e)| (0..=e).map(|i| (p as u64).pow(i)).sum::<u64>())
            .product();
        let dev = sigma.abs_diff(2 * x);
        if out.last().is_none_or(|&(v, d)| (dev as u128) * (v as u128) < (d as u128) * (x as u128)) {
            out.push((x, dev));
        }
    }
    out
}

fn pairs(limit: u64) -> Vec<(u64, u64)> {
    enumerate_a228059(limit)
        .unwrap()
        .iter()
        .map(|t| {
            let v = u64::try_from(&t.decomposition.value).unwrap();
            let dev = &t.closeness * &ExactRatio::from_integer(v);
            assert!(dev.is_integer());
            (v, u64::try_from(dev.numer()).unwrap())
        })
        .collect()
}

#[test]
fn enumeration_matches_scan_to_ten_million() {
    let scanned = scan(10_000_000);
    assert_eq!(pairs(10_000_000), scanned);
    let values: Vec<u64> = scanned.iter().map(|p| p.0).collect();
    assert_eq!(values, TERMS[..7]);
}

#[test]
fn nine_terms_and_their_reports() {
    let terms = enumerate_a228059(3_138_290_325).unwrap();
    let values: Vec<Natural> = terms.iter().map(|t| t.decomposition.value.clone()).collect();
    assert_eq!(values, TERMS.map(Natural::from));
    assert!(terms.windows(2).all(|w| w[1].closeness < w[0].closeness));
    for t in &terms {
        let d = &t.decomposition;
        assert!(d.n > Natural::from(1u32));
        assert_eq!(d.euler_part() * d.non_euler_part(), d.value);
        let r = euler_report(t).unwrap();
        assert!(!r.has_violation(), "term {}", t.index);
        assert_eq!(r.sorli.verdict, Verdict::Pass);
        assert_eq!(r.dris.verdict, if t.index == 1 { Verdict::Fail } else { Verdict::Pass });
        assert!(r.biconditional.agreement());
        assert_eq!(r.closeness, t.closeness);
    }
}

#[test]
fn nothing_new_up_to_four_billion() {
    assert_eq!(enumerate_a228059(4_000_000_000).unwrap().len(), 9);
    assert_eq!(verify_no_perfect(4_000_000_000), Ok(true));
}
