//! Artin and Coxeter groups of large type (all finite `m_ij >= 3`).

use crate::complex::Complex2;
use crate::word::Word;

use super::disk::DiskStyle;
use super::relator::{relation_complex, union_over_bouquet, SideSpec};
use super::right_angled::add_projective_planes;
use super::{checked, ConstructionError, CoxeterMatrix, MarkedComplex};

fn require_large(m: &CoxeterMatrix) -> Result<(), ConstructionError> {
    if m.n() == 0 {
        return Err(ConstructionError::InvalidArgument("no generators".into()));
    }
    match m.finite_pairs().find(|&(_, _, x)| x < 3) {
        Some((i, j, x)) => Err(ConstructionError::InvalidArgument(format!(
            "m_{{{},{}}} = {x}; large type needs every finite entry >= 3",
            i + 1,
            j + 1
        ))),
        None => Ok(()),
    }
}

/// Relation complex for the braid relation of length `mij` between `a_i` and `a_j`.
/// Even `2k`: `(a_i a_j)^k = (a_j a_i)^k`. Odd `2k+1`: the caps run along
/// the dyadic curve of `k` followed by the circle of `a_i` (resp. `a_j`).
fn braid_piece(n: usize, i: usize, j: usize, mij: u64) -> Result<Complex2, ConstructionError> {
    let k = mij / 2;
    let tails = if mij % 2 == 1 { (Some(i), Some(j)) } else { (None, None) };
    let side = |a: usize, b: usize, tail| SideSpec {
        word: Word::from_pairs(&[(a, 1), (b, 1)]),
        mult: k,
        tail,
        style: DiskStyle::Lean,
    };
    relation_complex(n, &side(i, j, tails.0), &side(j, i, tails.1))
}

/// Complex with fundamental group the Artin group of `m`.
pub fn artin_large_complex(m: &CoxeterMatrix) -> Result<Complex2, ConstructionError> {
    require_large(m)?;
    let pieces = m
        .finite_pairs()
        .map(|(i, j, x)| braid_piece(m.n(), i, j, x))
        .collect::<Result<Vec<_>, _>>()?;
    union_over_bouquet(m.n(), pieces)
}

/// The Artin complex with a projective plane on every generator circle.
pub fn coxeter_large_complex(m: &CoxeterMatrix) -> Result<Complex2, ConstructionError> {
    let a = artin_large_complex(m)?;
    let mut marked = super::bouquet(m.n())?;
    marked.complex = a;
    let with_planes: MarkedComplex = add_projective_planes(marked, m.n())?;
    Ok(checked(with_planes.complex))
}
