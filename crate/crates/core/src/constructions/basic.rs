use crate::complex::{Complex2, Edge, Triangle, VertexId};
use crate::gluing::{cycle_complex, glue_along, GlueError, GlueResult};

use super::{checked, ConstructionError, MarkedComplex};

/// Wedge of `n` triangle-circles at vertex 0. Circle `i` runs
/// `0 -> 2i+1 -> 2i+2 -> 0` and is marked `a{i+1}`.
pub fn bouquet(n: usize) -> Result<MarkedComplex, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::InvalidArgument("bouquet needs n >= 1".into()));
    }
    let mut edges = Vec::new();
    for i in 0..n as VertexId {
        let (x, y) = (2 * i + 1, 2 * i + 2);
        edges.extend([Edge::new(0, x), Edge::new(x, y), Edge::new(y, 0)]);
    }
    let mut m = MarkedComplex::new(Complex2::new(2 * n + 1, edges, []), 0);
    for i in 0..n as VertexId {
        m = m.with_path(format!("a{}", i + 1), vec![0, 2 * i + 1, 2 * i + 2]);
    }
    Ok(m)
}

/// Vertex `i` of the 7-vertex torus; the triangles are the translates of
/// `{0,1,3}` and `{0,2,3}` modulo 7.
fn torus_triangles() -> Vec<[VertexId; 3]> {
    (0..7)
        .flat_map(|i| [[i, (i + 1) % 7, (i + 3) % 7], [i, (i + 2) % 7, (i + 3) % 7]])
        .collect()
}

/// The 7-vertex torus. Its 1-skeleton is the complete graph.
pub fn minimal_torus() -> Complex2 {
    checked(Complex2::from_triangles(7, &torus_triangles()))
}

/// The 7-vertex torus with generating circles `a1 = (0,1,2)` and `a2 = (0,3,6)`,
/// which meet only at the base vertex 0.
pub(crate) fn marked_torus() -> MarkedComplex {
    MarkedComplex::new(minimal_torus(), 0)
        .with_path("a1", vec![0, 1, 2])
        .with_path("a2", vec![0, 3, 6])
}

/// The 6-vertex projective plane.
pub fn minimal_rp2() -> Complex2 {
    checked(Complex2::from_triangles(
        6,
        &[
            [0, 1, 5],
            [0, 5, 3],
            [0, 3, 2],
            [0, 2, 4],
            [0, 4, 1],
            [1, 5, 2],
            [5, 3, 4],
            [3, 2, 1],
            [2, 4, 5],
            [4, 1, 3],
        ],
    ))
}

/// The projective plane with the non-face circle `(0,3,4)` marked as the
/// generator loop `a1`.
pub(crate) fn marked_rp2() -> MarkedComplex {
    MarkedComplex::new(minimal_rp2(), 0).with_path("a1", vec![0, 3, 4])
}

/// The projective plane minus the triangle `{0,3,5}`. Marked paths: `core`
/// (`0 -> 2 -> 1`) and `boundary` (`0 -> 3 -> 5`), whose class is twice
/// that of the core.
pub fn moebius_band() -> MarkedComplex {
    let band = minimal_rp2().without_triangles(&[Triangle::new(0, 3, 5)]);
    MarkedComplex::new(checked(band), 0)
        .with_path("core", MOEBIUS_CORE.to_vec())
        .with_path("boundary", MOEBIUS_BOUNDARY.to_vec())
}

pub(crate) const MOEBIUS_CORE: [VertexId; 3] = [0, 2, 1];
pub(crate) const MOEBIUS_BOUNDARY: [VertexId; 3] = [0, 3, 5];

/// The 7-vertex torus minus the square `0,1,4,3` (two triangles and their
/// diagonal `{1,3}`); its boundary is the 4-cycle `0 -> 1 -> 4 -> 3`.
pub fn punctured_torus() -> MarkedComplex {
    let t = minimal_torus()
        .without_triangles(&[Triangle::new(0, 1, 3), Triangle::new(1, 3, 4)])
        .without_edges(&[Edge::new(1, 3)]);
    MarkedComplex::new(checked(t), 0).with_path("boundary", vec![0, 1, 4, 3])
}

/// Glues two punctured tori along their boundary squares, matching `x_i`
/// with `y_{i+shift}`.
pub(crate) fn genus2_gluing(shift: usize) -> Result<GlueResult, GlueError> {
    let x = punctured_torus();
    let square = x.path("boundary").expect("marked").to_vec();
    let into_y: Vec<VertexId> = (0..4).map(|t| square[(t + shift) % 4]).collect();
    glue_along(&x.complex, &x.complex, &cycle_complex(4), &square, &into_y)
}

/// Closed orientable genus-2 surface on 10 vertices.
pub fn genus2_surface() -> Complex2 {
    checked(genus2_gluing(1).expect("shifted gluing is simplicial").complex)
}
