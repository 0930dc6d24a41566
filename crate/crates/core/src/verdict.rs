use core::fmt;

/// Outcome of one heuristic item.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
    /// A quantity computed and shown, with no claim attached to it.
    Reported,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::NotApplicable => "NOT_APPLICABLE",
            Verdict::Reported => "REPORTED",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A verdict plus whether it is a claim the tool stands behind.
///
/// Theorems that apply to every instance are asserted, so a FAIL is a bug.
/// Conjectures and theorems that only hold for genuine odd perfect numbers
/// are evaluated on candidates but not asserted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Check {
    pub verdict: Verdict,
    pub asserted: bool,
}

impl Check {
    pub fn asserted(ok: bool) -> Self {
        Self {
            verdict: Verdict::from_bool(ok),
            asserted: true,
        }
    }

    pub fn evaluated(ok: bool) -> Self {
        Self {
            verdict: Verdict::from_bool(ok),
            asserted: false,
        }
    }

    pub fn reported() -> Self {
        Self {
            verdict: Verdict::Reported,
            asserted: false,
        }
    }

    pub fn not_applicable() -> Self {
        Self {
            verdict: Verdict::NotApplicable,
            asserted: false,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// An asserted item that failed.
    pub fn is_violation(&self) -> bool {
        self.asserted && self.verdict == Verdict::Fail
    }
}
