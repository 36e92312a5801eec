//! Bounds for products, free products and finite-index subgroups.
//!
//! Only upper bounds combine. Lower bounds fall back to floors that hold
//! whatever the factors are: 1 for every group, 3 for non-trivial groups and
//! 6 for non-free groups. A report certifies that its group is non-trivial
//! when its integer lower bound is at least 2.

use super::{BoundReport, Estimate};

fn certifies_nontrivial(r: &BoundReport) -> bool {
    r.lower.integer.is_some_and(|l| l >= 2)
}

fn combine_upper(a: &Estimate, b: &Estimate, f: impl Fn(f64, f64) -> f64, g: impl Fn(i64, i64) -> i64) -> Estimate {
    let value = f(a.value, b.value);
    match (a.integer, b.integer) {
        (Some(x), Some(y)) => Estimate {
            value,
            error: a.error + b.error,
            integer: Some(g(x, y)),
        },
        _ => Estimate::upper(value),
    }
}

fn floor_report(floor: i64, source: &str, upper: Estimate, upper_source: &str) -> BoundReport {
    let floor = match upper.integer {
        Some(u) => floor.min(u),
        None => floor,
    };
    BoundReport::new(Estimate::exact(floor), source, upper, upper_source)
}

/// `KW(G1 x G2) <= KW(G1) KW(G2)`. A product of two non-trivial groups
/// contains `Z^2` or torsion, so it is not free.
pub fn combine_product(b1: &BoundReport, b2: &BoundReport) -> BoundReport {
    let upper = combine_upper(&b1.upper, &b2.upper, |x, y| x * y, |x, y| x * y);
    let (floor, source) = if certifies_nontrivial(b1) && certifies_nontrivial(b2) {
        (6, "product of non-trivial groups is not free: 6")
    } else {
        (1, "every group: 1")
    };
    floor_report(floor, source, upper, "product: KW(G1) KW(G2)")
}

/// `KW(G1 * G2) <= KW(G1) + KW(G2) - 3 + a`, where `a = 0` when both
/// factors are declared non-free and `a = 1` otherwise. Freeness is the
/// caller's claim; it is not checked.
pub fn combine_free_product(b1: &BoundReport, b2: &BoundReport, free_flags: (bool, bool)) -> BoundReport {
    let a = if free_flags.0 || free_flags.1 { 1 } else { 0 };
    let upper = combine_upper(
        &b1.upper,
        &b2.upper,
        |x, y| x + y - 3.0 + a as f64,
        |x, y| x + y - 3 + a,
    );
    let (floor, source) = if !free_flags.0 || !free_flags.1 {
        (6, "free product with a non-free factor is not free: 6")
    } else if certifies_nontrivial(b1) && certifies_nontrivial(b2) {
        (3, "non-trivial group: 3")
    } else {
        (1, "every group: 1")
    };
    let upper_source = if a == 0 {
        "free product of non-free groups: KW(G1) + KW(G2) - 3"
    } else {
        "free product with a free factor: KW(G1) + KW(G2) - 2"
    };
    floor_report(floor, source, upper, upper_source)
}

/// `KW(H) <= k KW(G)` for a subgroup `H` of index `k`.
pub fn subgroup_bound(b: &BoundReport, index: u64) -> BoundReport {
    let k = index as f64;
    let upper = match b.upper.integer {
        Some(u) => Estimate {
            value: k * b.upper.value,
            error: k * b.upper.error,
            integer: Some(index as i64 * u),
        },
        None => Estimate::upper(k * b.upper.value),
    };
    floor_report(1, "every group: 1", upper, "subgroup of index k: k KW(G)")
}
