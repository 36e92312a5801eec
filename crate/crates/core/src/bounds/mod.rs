//! Closed-form bounds on the KW-complexity (the least vertex count of a
//! 2-complex with a given fundamental group) and the geometric quantities
//! derived from it.
//!
//! Real-valued bounds carry a double-precision value, an absolute error
//! estimate, and the integer bound they imply (ceiling for lower bounds,
//! floor for upper bounds, since the complexity is an integer).

mod classes;
mod combine;
mod geometry;
mod groups;

use serde::Serialize;
use thiserror::Error;

pub use classes::{
    chromatic_number, cyclic_bounds, finite_abelian_bounds, free_abelian_bounds, kw_free, kw_free_bounds,
    kw_surface, surface_bounds, z2_sum_bounds,
};
pub use combine::{combine_free_product, combine_product, subgroup_bound};
pub use geometry::{entropy_upper, free_entropy, group_count_log2, systolic_bounds, EntropyBound, GroupCount};
pub use groups::{
    artin_large_bounds, artin_large_upper, betti_floor, coxeter_large_bounds, coxeter_large_upper, evaluate, k_a, k_c,
    multi_relator_bounds, one_relator_bounds, raag_bounds, racg_bounds, GroupSpec, LowerBranch,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("invariant factors must form a divisibility chain n1 | n2 | ...: {0:?}")]
    NotAChain(Vec<u64>),
    #[error("Coxeter matrix: {0}")]
    Matrix(String),
}

/// A real bound with its rounding error and implied integer bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Estimate {
    pub value: f64,
    /// Absolute error bound on `value`.
    pub error: f64,
    pub integer: Option<i64>,
}

impl Estimate {
    pub fn exact(k: i64) -> Self {
        Estimate {
            value: k as f64,
            error: 0.0,
            integer: Some(k),
        }
    }

    /// A lower bound; the integer part is the smallest integer that is
    /// certainly at least the true value minus the error.
    pub fn lower(value: f64) -> Self {
        let error = rounding_error(value);
        Estimate {
            value,
            error,
            integer: Some((value - error).ceil() as i64),
        }
    }

    pub fn upper(value: f64) -> Self {
        let error = rounding_error(value);
        Estimate {
            value,
            error,
            integer: Some((value + error).floor() as i64),
        }
    }

    /// A real value that does not bound an integer quantity.
    pub fn real(value: f64) -> Self {
        Estimate {
            value,
            error: rounding_error(value),
            integer: None,
        }
    }

    pub fn with_integer(mut self, k: i64) -> Self {
        self.integer = Some(k);
        self
    }
}

/// A few dozen flops of relative error; every evaluator here is shorter.
fn rounding_error(value: f64) -> f64 {
    64.0 * f64::EPSILON * value.abs().max(1.0)
}

/// A secondary value reported next to a bound: a variant formula, an exact
/// value known for the group, or a construction size.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NamedValue {
    pub name: String,
    pub value: Estimate,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub lower: Estimate,
    pub upper: Estimate,
    pub lower_source: String,
    pub upper_source: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub extras: Vec<NamedValue>,
}

impl BoundReport {
    pub fn new(lower: Estimate, lower_source: &str, upper: Estimate, upper_source: &str) -> Self {
        BoundReport {
            lower,
            upper,
            lower_source: lower_source.to_string(),
            upper_source: upper_source.to_string(),
            extras: Vec::new(),
        }
    }

    pub fn exact(k: i64, source: &str) -> Self {
        BoundReport::new(Estimate::exact(k), source, Estimate::exact(k), source)
    }

    pub fn with_extra(mut self, name: &str, value: Estimate, source: &str) -> Self {
        self.extras.push(NamedValue {
            name: name.to_string(),
            value,
            source: source.to_string(),
        });
        self
    }

    pub fn extra(&self, name: &str) -> Option<&Estimate> {
        self.extras.iter().find(|e| e.name == name).map(|e| &e.value)
    }

    /// `lower <= upper`, allowing for the stated errors.
    pub fn is_consistent(&self) -> bool {
        self.lower.value - self.lower.error <= self.upper.value + self.upper.error
            && match (self.lower.integer, self.upper.integer) {
                (Some(l), Some(u)) => l <= u,
                _ => true,
            }
    }
}

/// Least `k >= a/2` with `(2k - a)^2 >= d`, i.e. `ceil((a + sqrt(d)) / 2)`.
pub(crate) fn ceil_half_sum_sqrt(a: u64, d: u64) -> u64 {
    use num_integer::Roots;
    let s = d.sqrt();
    let s = if s * s == d { s } else { s + 1 };
    (a + s).div_ceil(2)
}

/// Least `c >= 0` with `c^3 >= x`.
pub(crate) fn ceil_cbrt(x: u128) -> u64 {
    use num_integer::Roots;
    let c = x.cbrt();
    if c * c * c >= x {
        c as u64
    } else {
        c as u64 + 1
    }
}
