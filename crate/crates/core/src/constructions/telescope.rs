//! Möbius telescopes, dyadic curves and the cyclic-group complexes.

use crate::complex::{Complex2, Edge, VertexId};
use crate::gluing::{cycle_complex, glue_along};

use super::basic::{moebius_band, MOEBIUS_BOUNDARY, MOEBIUS_CORE};
use super::disk::{attach_disk, ArcPlan};
use super::{checked, ConstructionError, MarkedComplex};

/// Smallest `k` with `m < 2^(k+1)`, i.e. `floor(log2 m)`.
pub fn telescope_depth(m: u64) -> u32 {
    assert!(m >= 1);
    63 - m.leading_zeros()
}

/// Glues `k` Möbius bands in a tower on top of the closed 3-edge path
/// `gamma0` of `base`: the core of band `i` goes onto the boundary of band
/// `i-1` (onto `gamma0` for `i = 0`), base vertices all at `gamma0[0]`.
/// Returns the complex and the curves `c_0 = gamma0, c_1, ..., c_k`, where
/// `c_{i+1}` is the boundary of band `i`.
pub(crate) fn grow_telescope(
    base: &Complex2,
    gamma0: [VertexId; 3],
    k: u32,
) -> Result<(Complex2, Vec<[VertexId; 3]>), ConstructionError> {
    let band = moebius_band().complex;
    let mut acc = base.clone();
    let mut curves = vec![gamma0];
    for _ in 0..k {
        let top = *curves.last().expect("nonempty");
        let glued = glue_along(&acc, &band, &cycle_complex(3), &top, &MOEBIUS_CORE)?;
        debug_assert!(glued.condition2);
        let next = MOEBIUS_BOUNDARY.map(|v| glued.y_map[v as usize]);
        acc = glued.complex;
        curves.push(next);
    }
    Ok((acc, curves))
}

/// Tower of `k` Möbius bands. Marked paths: `c0 .. c{k}` (the curve `c_i`
/// has class `2^i` times that of `c0`), with aliases `gamma{i}` for
/// `i < k` and `dM{i}` for the boundary of band `i`. For `k = 0` the result
/// is the bare circle `c0`.
pub fn telescope(k: u32) -> Result<MarkedComplex, ConstructionError> {
    let circle = Complex2::new(3, [Edge::new(0, 1), Edge::new(1, 2), Edge::new(0, 2)], []);
    let (complex, curves) = grow_telescope(&circle, [0, 1, 2], k)?;
    let mut m = MarkedComplex::new(checked(complex), 0);
    for (i, c) in curves.iter().enumerate() {
        m = m.with_path(format!("c{i}"), c.to_vec());
        if i < k as usize {
            m = m.with_path(format!("gamma{i}"), c.to_vec());
        }
        if i > 0 {
            m = m.with_path(format!("dM{}", i - 1), c.to_vec());
        }
    }
    Ok(m)
}

/// Concatenation of the curves `c_d` over the binary digits `d` of `m`,
/// ascending. `curves` must be `c_0 .. c_k` with `k = floor(log2 m)`.
pub(crate) fn xi_from_curves(m: u64, curves: &[[VertexId; 3]]) -> Result<Vec<VertexId>, ConstructionError> {
    if m == 0 {
        return Err(ConstructionError::InvalidArgument("m must be positive".into()));
    }
    let k = telescope_depth(m) as usize;
    if curves.len() != k + 1 {
        return Err(ConstructionError::InvalidArgument(format!(
            "m = {m} needs a telescope of depth {k}, got {}",
            curves.len().saturating_sub(1)
        )));
    }
    Ok((0..=k)
        .filter(|d| m >> d & 1 == 1)
        .flat_map(|d| curves[d])
        .collect())
}

/// The dyadic curve of `m` in a telescope built by [`telescope`] of depth
/// at least `floor(log2 m)`.
pub fn dyadic_curve(m: u64, t: &MarkedComplex) -> Result<Vec<VertexId>, ConstructionError> {
    if m == 0 {
        return Err(ConstructionError::InvalidArgument("m must be positive".into()));
    }
    let k = telescope_depth(m) as usize;
    let mut curves = Vec::new();
    while curves.len() <= k {
        let c = t.marked_paths.get(&format!("c{}", curves.len())).ok_or_else(|| {
            ConstructionError::InvalidArgument(format!("m = {m} needs a telescope of depth {k}"))
        })?;
        curves.push([c[0], c[1], c[2]]);
    }
    xi_from_curves(m, &curves)
}

/// Cap plan: a single triangle on a 3-edge curve, otherwise fewest arcs.
pub(crate) fn cap_plan(k: &Complex2, path: &[VertexId]) -> Result<ArcPlan, ConstructionError> {
    if path.len() == 3 && !k.has_triangle(path[0], path[1], path[2]) {
        return Ok(ArcPlan::SingleTriangle);
    }
    ArcPlan::minimal(path).ok_or_else(|| ConstructionError::NoDisk(path.to_vec()))
}

/// Telescope capped along the dyadic curve of `m`, with `xi` marked.
/// `m = 1` gives the single vertex.
pub fn cyclic_complex_marked(m: u64) -> Result<MarkedComplex, ConstructionError> {
    match m {
        0 => Err(ConstructionError::InvalidArgument("m must be positive".into())),
        1 => Ok(MarkedComplex::new(Complex2::point(), 0)),
        _ => {
            let t = telescope(telescope_depth(m))?;
            let xi = dyadic_curve(m, &t)?;
            let plan = cap_plan(&t.complex, &xi)?;
            let capped = attach_disk(&t.complex, &xi, &plan)?;
            let mut out = MarkedComplex::new(capped.complex, 0);
            out.marked_paths = t.marked_paths;
            Ok(out.with_path("xi", xi))
        }
    }
}

/// Complex with fundamental group `Z/m`.
pub fn cyclic_complex(m: u64) -> Result<Complex2, ConstructionError> {
    Ok(cyclic_complex_marked(m)?.complex)
}
