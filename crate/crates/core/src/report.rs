//! Machine-readable verification reports and deviation metrics.

use crate::matrix::Matrix;
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};

/// Outcome of comparing two scalars or matrices.
#[derive(Clone, Debug)]
pub struct Deviation {
    /// Deviation as a float, for thresholding. 0.0 on exact equality.
    pub value: f64,
    /// Exact rendering of the worst deviation ("0" on exact equality).
    pub display: String,
    pub passed: bool,
}

impl Deviation {
    pub fn exact_pass() -> Self {
        Deviation {
            value: 0.0,
            display: "0".into(),
            passed: true,
        }
    }

    pub fn merge(self, other: Deviation) -> Deviation {
        let worst = if other.value > self.value { other } else { self };
        Deviation {
            passed: worst.passed,
            ..worst
        }
    }
}

/// Compare two scalars. With `tolerance: None` the backend must be exact and
/// the check is exact equality; with `Some(tol)` the relative deviation
/// |l - r| / max(1, |l|, |r|) must stay within `tol`.
pub fn compare_scalars<T: Scalar>(lhs: &T, rhs: &T, tolerance: Option<f64>) -> Deviation {
    let diff = lhs.clone() - rhs.clone();
    match tolerance {
        None => {
            let passed = diff.is_zero();
            Deviation {
                value: if passed { 0.0 } else { diff.abs_f64() },
                display: if passed { "0".into() } else { format!("{diff}") },
                passed,
            }
        }
        Some(tol) => {
            let scale = 1.0_f64.max(lhs.abs_f64()).max(rhs.abs_f64());
            let rel = diff.abs_f64() / scale;
            Deviation {
                value: rel,
                display: format!("{rel:e}"),
                passed: rel <= tol,
            }
        }
    }
}

/// Entrywise comparison; the report carries the worst entry.
pub fn compare_matrices<T: Scalar>(
    lhs: &Matrix<T>,
    rhs: &Matrix<T>,
    tolerance: Option<f64>,
) -> Deviation {
    debug_assert_eq!((lhs.rows(), lhs.cols()), (rhs.rows(), rhs.cols()));
    let mut worst = Deviation::exact_pass();
    for (a, b) in lhs.entries().zip(rhs.entries()) {
        worst = worst.merge(compare_scalars(a, b, tolerance));
    }
    worst
}

/// One verified identity instance, serializable as JSON.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub dims: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub backend: String,
    /// Tolerance actually applied; absent on exact backends.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    /// Rendered exactly ("0", "5/3") on exact backends, in scientific
    /// notation on float backends.
    pub max_abs_deviation: String,
    pub passed: bool,
}

impl IdentityReport {
    pub fn new<T: Scalar>(
        identity: impl Into<String>,
        dims: String,
        seed: Option<u64>,
        tolerance: Option<f64>,
        dev: Deviation,
    ) -> Self {
        IdentityReport {
            identity: identity.into(),
            dims,
            seed,
            backend: T::BACKEND.into(),
            tolerance,
            max_abs_deviation: dev.display,
            passed: dev.passed,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn exact_comparison() {
        let a = Rational::from_int(3);
        let b = Rational::new(6.into(), 2.into());
        assert!(compare_scalars(&a, &b, None).passed);
        let c = Rational::new(1.into(), 3.into());
        let dev = compare_scalars(&a, &c, None);
        assert!(!dev.passed);
        assert_eq!(dev.display, "8/3");
    }

    #[test]
    fn float_comparison_uses_relative_deviation() {
        let dev = compare_scalars(&1.0e6, &(1.0e6 + 1.0e-4), Some(1e-9));
        assert!(dev.passed);
        let dev = compare_scalars(&1.0, &1.1, Some(1e-9));
        assert!(!dev.passed);
    }

    #[test]
    fn report_json_roundtrip() {
        let report = IdentityReport::new::<Rational>(
            "classical",
            "A 2x4, B 4x2".into(),
            Some(7),
            None,
            Deviation::exact_pass(),
        );
        let json = serde_json::to_string(&report).unwrap();
        let back: IdentityReport = serde_json::from_str(&json).unwrap();
        assert_eq!(report, back);
    }
}
