//! Least vertex counts for properties of complexes, and a sufficient test
//! for free fundamental groups.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::complex::Complex2;
use crate::homology::{homology, is_collapsible_to_graph};
use crate::presentation::{edge_path_presentation, tietze_simplify};

use super::{enumerate, EnumerationConstraints, HomologyFilter, Parallelism, SearchError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FreenessVerdict {
    Free,
    NonFree,
    Undecided,
}

/// Move budget for the Tietze pass of [`freeness_screen`].
const TIETZE_BUDGET: usize = 10_000;

/// `NonFree` when `H_1` has torsion; `Free` when the complex collapses to a
/// graph or its edge-path presentation simplifies to one without relators;
/// `Undecided` otherwise. A disconnected complex is screened component by
/// component through its vertex 0 only, so callers pass connected complexes.
pub fn freeness_screen(k: &Complex2) -> FreenessVerdict {
    if !homology(k).h1_torsion.is_trivial() {
        return FreenessVerdict::NonFree;
    }
    if is_collapsible_to_graph(k) {
        return FreenessVerdict::Free;
    }
    match edge_path_presentation(k, 0) {
        Ok(p) if tietze_simplify(&p, TIETZE_BUDGET).presentation.relators.is_empty() => FreenessVerdict::Free,
        _ => FreenessVerdict::Undecided,
    }
}

/// A property whose least vertex count is certified by search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    /// Fundamental group screened as not free.
    NonFree,
    Homology(HomologyFilter),
    ClosedSurface { orientable: Option<bool>, euler_characteristic: i64 },
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::NonFree => write!(f, "non-free"),
            Property::Homology(h) => write!(f, "{h}"),
            Property::ClosedSurface {
                orientable,
                euler_characteristic,
            } => {
                write!(f, "surface:chi={euler_characteristic}")?;
                match orientable {
                    Some(true) => write!(f, ",orientable"),
                    Some(false) => write!(f, ",non-orientable"),
                    None => Ok(()),
                }
            }
        }
    }
}

impl FromStr for Property {
    type Err = SearchError;

    /// `non-free`, `surface:chi=<k>[,orientable|,non-orientable]`, or a
    /// homology filter.
    fn from_str(s: &str) -> Result<Self, SearchError> {
        let s = s.trim();
        if s == "non-free" {
            return Ok(Property::NonFree);
        }
        if let Some(rest) = s.strip_prefix("surface:chi=") {
            let err = || SearchError::Parse(s.to_string());
            let (chi, orientable) = match rest.split_once(',') {
                None => (rest, None),
                Some((c, "orientable")) => (c, Some(true)),
                Some((c, "non-orientable")) => (c, Some(false)),
                Some(_) => return Err(err()),
            };
            return Ok(Property::ClosedSurface {
                orientable,
                euler_characteristic: chi.parse().map_err(|_| err())?,
            });
        }
        Ok(Property::Homology(s.parse()?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelSummary {
    pub vertices: usize,
    pub classes: usize,
    pub matches: usize,
    pub undecided: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertResult {
    pub property: String,
    pub minimal_vertex_count: Option<usize>,
    /// The first match at the least level, in canonical order.
    pub witness: Option<Complex2>,
    /// Every complex below the least level was decided not to match.
    pub exhaustively_checked_below: bool,
    pub complexes_examined: u64,
    /// Complexes the freeness screen could not decide.
    pub undecided: Vec<Complex2>,
    pub levels: Vec<LevelSummary>,
}

/// Constraints for one level of the scan.
///
/// Only connected complexes are scanned: a wedge at one vertex of the
/// components keeps `H_*` and the free-product structure of `pi_1` with fewer
/// vertices. For non-freeness and torsion or `b2` conditions the scan is
/// further restricted to pure complexes: an edge in no triangle only adds a
/// free factor `Z` to `pi_1` and a free summand to `H_1`.
fn level_constraints(property: &Property, n: usize) -> EnumerationConstraints {
    let c = EnumerationConstraints::exactly(n).connected().over_cap();
    match property {
        Property::ClosedSurface {
            orientable,
            euler_characteristic,
        } => c.closed_surface(*orientable, Some(*euler_characteristic)),
        Property::NonFree => c.pure2(),
        Property::Homology(h) => {
            let c = c.with_homology(*h);
            match h {
                HomologyFilter::B1AtLeast(_) | HomologyFilter::TorsionFree => c,
                _ => c.pure2(),
            }
        }
    }
}

/// Scans vertex counts `n_start..=max_vertices` upward and stops at the
/// first level containing a complex with the property.
pub fn certify_min_vertices(
    property: &Property,
    n_start: usize,
    max_vertices: usize,
    allow_over_cap: bool,
    par: Parallelism,
) -> Result<CertResult, SearchError> {
    certify_min_vertices_with(property, n_start, max_vertices, allow_over_cap, par, |_| {})
}

/// [`certify_min_vertices`], calling `on_level` after each vertex count.
pub fn certify_min_vertices_with(
    property: &Property,
    n_start: usize,
    max_vertices: usize,
    allow_over_cap: bool,
    par: Parallelism,
    mut on_level: impl FnMut(&LevelSummary),
) -> Result<CertResult, SearchError> {
    if !allow_over_cap && max_vertices > super::HARD_CAP {
        return Err(SearchError::CapExceeded {
            requested: max_vertices,
            cap: super::HARD_CAP,
        });
    }
    let mut result = CertResult {
        property: property.to_string(),
        minimal_vertex_count: None,
        witness: None,
        exhaustively_checked_below: true,
        complexes_examined: 0,
        undecided: Vec::new(),
        levels: Vec::new(),
    };
    for n in n_start.max(1)..=max_vertices {
        let e = enumerate(&level_constraints(property, n), par)?;
        result.complexes_examined += e.stats.examined;
        let mut summary = LevelSummary {
            vertices: n,
            classes: e.complexes.len(),
            matches: 0,
            undecided: 0,
        };
        for k in e.complexes {
            let hit = match property {
                Property::NonFree => match freeness_screen(&k) {
                    FreenessVerdict::NonFree => true,
                    FreenessVerdict::Free => false,
                    FreenessVerdict::Undecided => {
                        summary.undecided += 1;
                        result.undecided.push(k);
                        continue;
                    }
                },
                // The enumeration already applied the filter.
                _ => true,
            };
            if hit {
                summary.matches += 1;
                result.witness.get_or_insert(k);
            }
        }
        let found = summary.matches > 0;
        if summary.undecided > 0 {
            result.exhaustively_checked_below = false;
        }
        on_level(&summary);
        result.levels.push(summary);
        if found {
            result.minimal_vertex_count = Some(n);
            break;
        }
    }
    Ok(result)
}
