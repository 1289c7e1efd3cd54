//! Comparison tolerances shared by every module.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Relative slack for `left <= right` checks: `compare * max(1, scale)`.
    pub compare: f64,
    /// Relative band used to flag equality cases.
    pub equality: f64,
    /// Absolute slack below which a conjecture slack counts as a violation.
    pub slack: f64,
    /// Largest floating magnitude tolerated in the exact-rank zero block,
    /// relative to `max(1, mu_1)`.
    pub zero_block: f64,
}

pub const DEFAULT_COMPARE: f64 = 1e-7;

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { compare: DEFAULT_COMPARE, equality: 1e-6, slack: 1e-6, zero_block: 1e-6 }
    }
}

impl Tolerances {
    /// Rescales everything so that `compare` becomes `compare`. Only affects
    /// classification, never computed values.
    pub fn with_compare(compare: f64) -> Self {
        let factor = compare / DEFAULT_COMPARE;
        let d = Tolerances::default();
        Tolerances { compare, equality: d.equality * factor, slack: d.slack * factor, zero_block: d.zero_block }
    }

    #[inline]
    pub fn le(&self, left: f64, right: f64) -> bool {
        left <= right + self.compare * left.abs().max(right.abs()).max(1.0)
    }

    #[inline]
    pub fn approx_eq(&self, left: f64, right: f64) -> bool {
        (left - right).abs() <= self.equality * left.abs().max(right.abs()).max(1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scaled_comparisons() {
        let t = Tolerances::default();
        assert!(t.le(1.0, 1.0));
        assert!(t.le(1.0 + 5e-8, 1.0));
        assert!(!t.le(1.0 + 5e-7, 1.0));
        assert!(t.le(1e6 + 0.05, 1e6));
        assert!(t.approx_eq(2.0, 2.0 + 1e-6));
        assert!(!t.approx_eq(2.0, 2.0 + 1e-5));
        let loose = Tolerances::with_compare(1e-5);
        assert!((loose.slack - 1e-4).abs() < 1e-18);
        assert!(loose.le(1.0 + 5e-6, 1.0));
    }
}
