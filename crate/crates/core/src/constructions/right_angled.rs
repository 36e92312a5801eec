//! Complexes for right-angled Artin and Coxeter groups.

use crate::complex::VertexId;
use crate::gluing::{cycle_complex, glue_along};

use super::basic::{marked_rp2, marked_torus};
use super::{bouquet, checked, ConstructionError, CoxeterMatrix, MarkedComplex};
use crate::complex::{Complex2, Edge};

fn require_right_angled(m: &CoxeterMatrix) -> Result<(), ConstructionError> {
    match m.finite_pairs().find(|&(_, _, x)| x != 2) {
        Some((i, j, x)) => Err(ConstructionError::InvalidArgument(format!(
            "m_{{{},{}}} = {x}; only 2 and infinity are allowed",
            i + 1,
            j + 1
        ))),
        None => Ok(()),
    }
}

/// Wedge of two triangle-circles: base 0, circle `(0,1,2)` and circle `(0,3,4)`.
fn wedge_of_two_circles() -> Complex2 {
    Complex2::new(
        5,
        [
            Edge::new(0, 1),
            Edge::new(1, 2),
            Edge::new(0, 2),
            Edge::new(0, 3),
            Edge::new(3, 4),
            Edge::new(0, 4),
        ],
        [],
    )
}

fn circle(m: &MarkedComplex, generator: usize) -> Vec<VertexId> {
    m.path(&format!("a{}", generator + 1)).expect("generator circle").to_vec()
}

/// Glues one 7-vertex torus per commuting pair onto the bouquet, the torus
/// circles `a1`, `a2` going to the circles of `a_i`, `a_j` (`i < j`).
fn add_tori(mut acc: MarkedComplex, m: &CoxeterMatrix) -> Result<MarkedComplex, ConstructionError> {
    let torus = marked_torus();
    let wedge = wedge_of_two_circles();
    let mut into_y = circle(&torus, 0);
    into_y.extend(&circle(&torus, 1)[1..]);
    for (i, j, _) in m.finite_pairs() {
        let mut into_x = circle(&acc, i);
        into_x.extend(&circle(&acc, j)[1..]);
        let glued = glue_along(&acc.complex, &torus.complex, &wedge, &into_x, &into_y)?;
        acc.complex = glued.complex;
    }
    Ok(acc)
}

/// Glues one 6-vertex projective plane per generator along its circle.
pub(crate) fn add_projective_planes(mut acc: MarkedComplex, n: usize) -> Result<MarkedComplex, ConstructionError> {
    let rp2 = marked_rp2();
    let into_y = circle(&rp2, 0);
    for i in 0..n {
        let into_x = circle(&acc, i);
        let glued = glue_along(&acc.complex, &rp2.complex, &cycle_complex(3), &into_x, &into_y)?;
        acc.complex = glued.complex;
    }
    Ok(acc)
}

/// Bouquet plus one torus per commuting pair: `2n + 2m + 1` vertices for
/// `m` commuting pairs.
pub fn raag_complex(m: &CoxeterMatrix) -> Result<MarkedComplex, ConstructionError> {
    require_right_angled(m)?;
    let acc = add_tori(bouquet(m.n())?, m)?;
    Ok(MarkedComplex {
        complex: checked(acc.complex),
        ..acc
    })
}

/// The right-angled Artin complex with a projective plane on every
/// generator circle: `5n + 2m + 1` vertices.
pub fn racg_complex(m: &CoxeterMatrix) -> Result<MarkedComplex, ConstructionError> {
    require_right_angled(m)?;
    let acc = add_projective_planes(bouquet(m.n())?, m.n())?;
    let acc = add_tori(acc, m)?;
    Ok(MarkedComplex {
        complex: checked(acc.complex),
        ..acc
    })
}
