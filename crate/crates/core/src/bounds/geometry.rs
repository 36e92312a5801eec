//! Systolic area, minimal volume entropy and group counting in terms of the
//! KW-complexity.

use std::f64::consts::{LN_2, PI};

use serde::Serialize;

use super::{BoundReport, BoundsError, Estimate};

/// Bounds on the systolic area of a group of complexity `kw`.
///
/// The upper bound is `kw^3 / (27 pi)`. The lower bound is `kw / 576` for
/// groups of zero free index and the universal `pi / 16` otherwise; the
/// universal value is always reported as an extra.
pub fn systolic_bounds(kw: u64, zero_free_index: bool) -> Result<BoundReport, BoundsError> {
    if kw < 3 {
        return Err(BoundsError::OutOfRange("kw must be >= 3".into()));
    }
    let k = kw as f64;
    let upper = Estimate::real(k * k * k / (27.0 * PI));
    let universal = Estimate::real(PI / 16.0);
    let report = if zero_free_index {
        BoundReport::new(Estimate::real(k / 576.0), "systolic area: kw / 576 (zero free index)", upper, "systolic area: kw^3 / (27 pi)")
    } else {
        BoundReport::new(universal.clone(), "systolic area: pi / 16 (non-free groups)", upper, "systolic area: kw^3 / (27 pi)")
    };
    Ok(report.with_extra("universal_lower", universal, "pi / 16 for every non-free group"))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntropyBound {
    /// `(1/3) ln(kw) kw^(3/2)`.
    pub stated: f64,
    /// `(1/3) ln(kw - 1) kw^(3/2)`, from the entropy of a graph of degree
    /// at most `kw - 1`.
    pub sharper: f64,
}

/// Upper bound on the minimal volume entropy of a non-free group.
pub fn entropy_upper(kw: u64) -> Result<EntropyBound, BoundsError> {
    if kw < 3 {
        return Err(BoundsError::OutOfRange("kw must be >= 3".into()));
    }
    let k = kw as f64;
    let scale = k.powf(1.5) / 3.0;
    Ok(EntropyBound {
        stated: scale * k.ln(),
        sharper: scale * (k - 1.0).ln(),
    })
}

/// Minimal volume entropy of the free group of rank `n`: `3(n-1) ln 2`.
pub fn free_entropy(n: u64) -> Result<f64, BoundsError> {
    if n < 1 {
        return Err(BoundsError::OutOfRange("rank must be >= 1".into()));
    }
    Ok(3.0 * (n - 1) as f64 * LN_2)
}

/// Base-2 exponents of bounds on the number of groups of zero free index
/// and complexity at most `t`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GroupCount {
    /// `3 t^3 log_2 t`.
    pub exponent: f64,
    /// `t^3 log_2(t^3 / 6)`, the sharper intermediate exponent.
    pub sharper_exponent: f64,
}

pub fn group_count_log2(t: f64) -> Result<GroupCount, BoundsError> {
    if t.is_nan() || t < 2.0 || !t.is_finite() {
        return Err(BoundsError::OutOfRange("T must be a finite real >= 2".into()));
    }
    let t3 = t * t * t;
    Ok(GroupCount {
        exponent: 3.0 * t3 * t.log2(),
        sharper_exponent: t3 * (t3 / 6.0).log2(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn systolic_at_six() {
        let r = systolic_bounds(6, true).unwrap();
        assert!(rel(r.lower.value, 1.0 / 96.0) < 1e-12);
        assert!(rel(r.upper.value, 8.0 / PI) < 1e-12);
        let r = systolic_bounds(6, false).unwrap();
        assert!(rel(r.lower.value, 0.196_349_540_849_362_08) < 1e-12);
        assert!(systolic_bounds(2, true).is_err());
    }

    #[test]
    fn entropy_and_counts() {
        assert_eq!(free_entropy(1).unwrap(), 0.0);
        assert!(rel(free_entropy(2).unwrap(), 3.0 * 2f64.ln()) < 1e-15);
        let e = entropy_upper(6).unwrap();
        assert!((e.stated - 8.7778).abs() < 1e-4);
        assert!(e.sharper < e.stated);
        assert_eq!(group_count_log2(2.0).unwrap().exponent, 24.0);
        assert!((group_count_log2(6.0).unwrap().exponent - 1675.0557).abs() < 1e-3);
        assert!(group_count_log2(1.5).is_err());
    }
}
