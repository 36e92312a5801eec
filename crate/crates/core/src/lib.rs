//! Simplicial 2-complexes with few vertices realizing prescribed fundamental
//! groups.
//!
//! The crate builds explicit complexes (surfaces, one-relator presentations,
//! right-angled Artin and Coxeter groups, cyclic and abelian groups), glues
//! them along subcomplexes, computes invariants of the result and evaluates
//! the known upper and lower bounds on the minimal vertex count.

pub mod complex;
pub mod constructions;

pub use complex::{Complex2, ComplexError, Edge, SurfaceReport, Triangle, VertexId};
pub mod bounds;
pub mod canonical;
pub mod gluing;
pub mod homology;
pub mod presentation;
pub mod search;
pub mod snf;
pub mod word;

pub use canonical::{canonical_form, is_isomorphic, CanonicalComplex};
pub use gluing::{glue, glue_along, identify_curves, Embedding, GlueError, GlueResult};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/complexes.md")]
    mod complexes {}
    #[doc = include_str!("../../../book/src/gluing.md")]
    mod gluing {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
