//! Explicit complexes: surfaces, bouquets, Möbius telescopes, disks spelling
//! words, and the complexes built from them for one-relator, right-angled,
//! large-type Artin/Coxeter and cyclic groups.

mod artin;
mod basic;
mod disk;
mod relator;
mod right_angled;
mod telescope;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{Complex2, VertexId};
use crate::gluing::GlueError;
use crate::homology::{H1Basis, HomologyError, LoopClass};
use crate::word::WordError;

pub use artin::{artin_large_complex, coxeter_large_complex};
pub use basic::{bouquet, genus2_surface, minimal_rp2, minimal_torus, moebius_band, punctured_torus};
pub use disk::{attach_disk, ArcPlan, AttachedDisk, DiskStyle, word_disk, word_path, WordDisk};
pub use relator::{multi_relator_complex, one_relator_power_complex, Relation};
pub use right_angled::{raag_complex, racg_complex};
pub use telescope::{cyclic_complex, cyclic_complex_marked, dyadic_curve, telescope, telescope_depth};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Glue(#[from] GlueError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("no simplicial disk exists for boundary {0:?}")]
    NoDisk(Vec<VertexId>),
    #[error("no identification of the capping triangles is simplicial")]
    NoIdentification,
}

/// A complex with a base vertex and named closed edge paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedComplex {
    pub complex: Complex2,
    pub base_vertex: VertexId,
    pub marked_paths: BTreeMap<String, Vec<VertexId>>,
}

impl MarkedComplex {
    pub fn new(complex: Complex2, base_vertex: VertexId) -> Self {
        MarkedComplex {
            complex,
            base_vertex,
            marked_paths: BTreeMap::new(),
        }
    }

    pub fn with_path(mut self, name: impl Into<String>, path: Vec<VertexId>) -> Self {
        self.marked_paths.insert(name.into(), path);
        self
    }

    pub fn path(&self, name: &str) -> Result<&[VertexId], HomologyError> {
        self.marked_paths
            .get(name)
            .map(Vec::as_slice)
            .ok_or_else(|| HomologyError::UnknownPath(name.to_string()))
    }

    /// `H1`-class of a named path.
    pub fn loop_class(&self, name: &str) -> Result<LoopClass, HomologyError> {
        H1Basis::new(&self.complex).class_of(self.path(name)?)
    }
}

/// Symmetric Coxeter matrix on `n` generators. Off-diagonal entries are
/// `Some(m)` with `m >= 2`, or `None` for infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterMatrix {
    n: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

/// File form: `{"n": 3, "m": [[1, 2, 3], [2, 3, 0]]}` with 1-based generator
/// indices; `0` and omitted pairs mean infinity.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoxeterMatrixJson {
    pub n: usize,
    #[serde(default)]
    pub m: Vec<[u64; 3]>,
}

impl CoxeterMatrix {
    pub fn new(n: usize) -> Self {
        CoxeterMatrix {
            n,
            entries: BTreeMap::new(),
        }
    }

    /// Sets `m_ij` (0-based, `i != j`); `0` means infinity.
    pub fn set(&mut self, i: usize, j: usize, m: u64) -> Result<(), ConstructionError> {
        if i == j || i >= self.n || j >= self.n {
            return Err(ConstructionError::InvalidArgument(format!(
                "pair ({i},{j}) invalid for {} generators",
                self.n
            )));
        }
        if m == 1 {
            return Err(ConstructionError::InvalidArgument(format!(
                "m_{{{i},{j}}} = 1 is not allowed off the diagonal"
            )));
        }
        let key = (i.min(j), i.max(j));
        if m == 0 {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, m);
        }
        Ok(())
    }

    pub fn with(mut self, i: usize, j: usize, m: u64) -> Self {
        self.set(i, j, m).expect("valid entry");
        self
    }

    /// All pairs commuting: the complete graph.
    pub fn all_commuting(n: usize) -> Self {
        let mut c = CoxeterMatrix::new(n);
        for i in 0..n {
            for j in i + 1..n {
                c.entries.insert((i, j), 2);
            }
        }
        c
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Option<u64> {
        self.entries.get(&(i.min(j), i.max(j))).copied()
    }

    /// Finite off-diagonal entries `(i, j, m_ij)` with `i < j`, ascending.
    pub fn finite_pairs(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &m)| (i, j, m))
    }

    pub fn finite_count(&self) -> usize {
        self.entries.len()
    }

    pub fn from_json(value: &CoxeterMatrixJson) -> Result<Self, ConstructionError> {
        let mut c = CoxeterMatrix::new(value.n);
        for &[i, j, m] in &value.m {
            if i == 0 || j == 0 {
                return Err(ConstructionError::InvalidArgument(
                    "generator indices in matrix files are 1-based".into(),
                ));
            }
            c.set(i as usize - 1, j as usize - 1, m)?;
        }
        Ok(c)
    }

    pub fn to_json(&self) -> CoxeterMatrixJson {
        CoxeterMatrixJson {
            n: self.n,
            m: self
                .finite_pairs()
                .map(|(i, j, m)| [i as u64 + 1, j as u64 + 1, m])
                .collect(),
        }
    }
}

pub(crate) fn checked(k: Complex2) -> Complex2 {
    debug_assert!(k.validate().is_simplicial(), "{:?}", k.validate());
    k
}
