//! Exhaustive enumeration of small 2-complexes up to isomorphism, and
//! certification of least vertex counts.
//!
//! General complexes are generated level by level, adding one simplex at a
//! time and keeping one canonical representative per isomorphism class.
//! Closed surfaces are found by a separate backtracking search that closes
//! open edges one triangle at a time.

mod certify;
mod general;
mod surfaces;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::complex::Complex2;
use crate::homology::{homology, HomologyProfile};

pub use certify::{certify_min_vertices, certify_min_vertices_with, freeness_screen, CertResult, FreenessVerdict, LevelSummary, Property};
pub use general::naive_count;
pub use surfaces::{closed_surfaces, SurfaceQuery};

/// Largest vertex count accepted without `allow_over_cap`.
pub const HARD_CAP: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("max_vertices {requested} exceeds the cap {cap}; pass the over-cap acknowledgment to proceed")]
    CapExceeded { requested: usize, cap: usize },
    #[error("invalid constraints: {0}")]
    Invalid(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("thread pool: {0}")]
    Threads(String),
}

/// A condition on `H_*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HomologyFilter {
    TorsionNontrivial,
    /// Some invariant factor of the torsion of `H_1` is divisible by this.
    TorsionContains(u64),
    TorsionFree,
    B1AtLeast(usize),
    B2AtLeast(usize),
}

impl HomologyFilter {
    pub fn accepts(&self, h: &HomologyProfile) -> bool {
        use num_traits::Zero;
        match *self {
            HomologyFilter::TorsionNontrivial => !h.h1_torsion.is_trivial(),
            HomologyFilter::TorsionContains(p) => h
                .h1_torsion
                .invariant_factors
                .iter()
                .any(|f| (f % num_bigint::BigInt::from(p)).is_zero()),
            HomologyFilter::TorsionFree => h.h1_torsion.is_trivial(),
            HomologyFilter::B1AtLeast(k) => h.b1 >= k,
            HomologyFilter::B2AtLeast(k) => h.b2 >= k,
        }
    }
}

impl fmt::Display for HomologyFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologyFilter::TorsionNontrivial => write!(f, "torsion"),
            HomologyFilter::TorsionContains(p) => write!(f, "torsion:{p}"),
            HomologyFilter::TorsionFree => write!(f, "torsion-free"),
            HomologyFilter::B1AtLeast(k) => write!(f, "b1>={k}"),
            HomologyFilter::B2AtLeast(k) => write!(f, "b2>={k}"),
        }
    }
}

impl FromStr for HomologyFilter {
    type Err = SearchError;

    /// `torsion`, `torsion:<p>`, `torsion-free`, `b1>=<k>`, `b2>=<k>`.
    fn from_str(s: &str) -> Result<Self, SearchError> {
        let err = || SearchError::Parse(s.to_string());
        let s = s.trim();
        Ok(match s {
            "torsion" => HomologyFilter::TorsionNontrivial,
            "torsion-free" => HomologyFilter::TorsionFree,
            _ => {
                if let Some(p) = s.strip_prefix("torsion:") {
                    HomologyFilter::TorsionContains(p.parse().map_err(|_| err())?)
                } else if let Some(k) = s.strip_prefix("b1>=") {
                    HomologyFilter::B1AtLeast(k.parse().map_err(|_| err())?)
                } else if let Some(k) = s.strip_prefix("b2>=") {
                    HomologyFilter::B2AtLeast(k.parse().map_err(|_| err())?)
                } else {
                    return Err(err());
                }
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationConstraints {
    pub min_vertices: usize,
    pub max_vertices: usize,
    pub require_connected: bool,
    /// Every vertex and edge lies in a triangle.
    pub require_pure2: bool,
    pub require_closed_surface: bool,
    /// Only with `require_closed_surface`.
    pub orientable: Option<bool>,
    pub euler_characteristic: Option<i64>,
    pub homology_filter: Option<HomologyFilter>,
    pub allow_over_cap: bool,
}

impl EnumerationConstraints {
    pub fn up_to(max_vertices: usize) -> Self {
        EnumerationConstraints {
            min_vertices: 1,
            max_vertices,
            require_connected: false,
            require_pure2: false,
            require_closed_surface: false,
            orientable: None,
            euler_characteristic: None,
            homology_filter: None,
            allow_over_cap: false,
        }
    }

    pub fn exactly(n: usize) -> Self {
        EnumerationConstraints {
            min_vertices: n,
            ..Self::up_to(n)
        }
    }

    pub fn connected(mut self) -> Self {
        self.require_connected = true;
        self
    }

    pub fn pure2(mut self) -> Self {
        self.require_pure2 = true;
        self
    }

    pub fn closed_surface(mut self, orientable: Option<bool>, euler: Option<i64>) -> Self {
        self.require_closed_surface = true;
        self.orientable = orientable;
        self.euler_characteristic = euler;
        self
    }

    pub fn with_homology(mut self, f: HomologyFilter) -> Self {
        self.homology_filter = Some(f);
        self
    }

    pub fn over_cap(mut self) -> Self {
        self.allow_over_cap = true;
        self
    }

    fn check(&self) -> Result<(), SearchError> {
        if !self.allow_over_cap && self.max_vertices > HARD_CAP {
            return Err(SearchError::CapExceeded {
                requested: self.max_vertices,
                cap: HARD_CAP,
            });
        }
        if self.min_vertices == 0 || self.min_vertices > self.max_vertices {
            return Err(SearchError::Invalid(format!(
                "vertex range {}..={} is empty or starts at 0",
                self.min_vertices, self.max_vertices
            )));
        }
        if self.orientable.is_some() && !self.require_closed_surface {
            return Err(SearchError::Invalid("orientability needs the closed-surface constraint".into()));
        }
        Ok(())
    }

    /// Checks everything except what the generator already guarantees.
    fn accepts(&self, k: &Complex2) -> bool {
        if self.require_connected && !k.is_connected() {
            return false;
        }
        if let Some(chi) = self.euler_characteristic {
            let (v, e, t) = k.f_vector();
            if v as i64 - e as i64 + t as i64 != chi {
                return false;
            }
        }
        if let Some(f) = &self.homology_filter {
            if !f.accepts(&homology(k)) {
                return false;
            }
        }
        true
    }
}

/// How enumeration work is scheduled. Results do not depend on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Parallelism {
    #[default]
    Serial,
    /// A dedicated pool of this many worker threads.
    Threads(usize),
}

impl Parallelism {
    pub(crate) fn run<R: Send>(self, f: impl FnOnce() -> R + Send) -> Result<R, SearchError> {
        match self {
            Parallelism::Serial => Ok(f()),
            Parallelism::Threads(n) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(n.max(1))
                    .build()
                    .map_err(|e| SearchError::Threads(e.to_string()))?;
                Ok(pool.install(f))
            }
        }
    }

    pub(crate) fn is_parallel(self) -> bool {
        matches!(self, Parallelism::Threads(_))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EnumerationStats {
    /// Candidate complexes canonicalized (general search) or search nodes
    /// visited (surface search).
    pub examined: u64,
    /// `(vertex count, classes emitted)`.
    pub per_vertex_count: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    /// Canonical representatives, by vertex count and then canonical key.
    pub complexes: Vec<Complex2>,
    pub stats: EnumerationStats,
}

/// One canonical representative of every isomorphism class meeting `c`.
pub fn enumerate(c: &EnumerationConstraints, par: Parallelism) -> Result<Enumeration, SearchError> {
    c.check()?;
    let mut out = Enumeration {
        complexes: Vec::new(),
        stats: EnumerationStats::default(),
    };
    for n in c.min_vertices..=c.max_vertices {
        let (found, examined) = if c.require_closed_surface {
            let q = SurfaceQuery {
                vertices: n,
                orientable: c.orientable,
                euler_characteristic: c.euler_characteristic,
            };
            closed_surfaces(&q, par)?
        } else {
            general::level_classes(n, c.require_pure2, par)?
        };
        out.stats.examined += examined;
        let kept: Vec<Complex2> = found
            .into_iter()
            .map(|k| k.to_complex())
            .filter(|k| (!c.require_pure2 || general::is_pure2(k)) && c.accepts(k))
            .collect();
        out.stats.per_vertex_count.push((n, kept.len()));
        out.complexes.extend(kept);
    }
    Ok(out)
}
