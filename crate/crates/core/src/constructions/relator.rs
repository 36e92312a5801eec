//! Complexes for presentations `< a_1..a_n | w_i^{m_i} = v_i^{m_i} >`.
//!
//! Each side of a relation is the bouquet with a disk spelling the word,
//! minus a marked triangle at the base vertex, a Möbius telescope grown on
//! the boundary of that triangle, and a disk capping the dyadic curve. A
//! triangle of each cap through the base vertex is removed and the two
//! triangle boundaries are identified.

use crate::complex::{Complex2, Triangle, VertexId};
use crate::gluing::{glue_along, identify_curves};
use crate::word::{Word, WordError};

use super::disk::{attach_disk, word_disk, word_path, ArcPlan, DiskStyle};
use super::telescope::{cap_plan, grow_telescope, telescope_depth, xi_from_curves};
use super::{bouquet, checked, ConstructionError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub w: Word,
    pub v: Word,
    pub m: u64,
}

impl Relation {
    pub fn new(w: Word, v: Word, m: u64) -> Self {
        Relation { w, v, m }
    }
}

/// One side: the cap curve is `xi(mult)` followed by the circle of `tail`.
#[derive(Clone, Debug)]
pub(crate) struct SideSpec {
    pub word: Word,
    pub mult: u64,
    pub tail: Option<usize>,
    pub style: DiskStyle,
}

struct Side {
    complex: Complex2,
    /// Cap triangles through the base vertex, read from it counterclockwise.
    candidates: Vec<[VertexId; 3]>,
}

fn build_side(n: usize, spec: &SideSpec, ring_cap: bool) -> Result<Side, ConstructionError> {
    let w = &spec.word;
    w.check_generators(n)?;
    if w.is_empty() {
        return Err(WordError::TooShort(w.to_string()).into());
    }
    if !w.is_cyclically_reduced() {
        return Err(WordError::NotCyclicallyReduced(w.to_string()).into());
    }
    let (punctured, gamma0) = if w.len() == 1 {
        let p = word_path(w);
        (bouquet(n)?.complex, [p[0], p[1], p[2]])
    } else {
        let disk = word_disk(n, w, spec.style)?;
        let d = disk.marked.path("delta_p").expect("marked");
        (
            disk.marked.complex.without_triangles(&[disk.delta_p]),
            [d[0], d[1], d[2]],
        )
    };
    let (grown, curves) = grow_telescope(&punctured, gamma0, telescope_depth(spec.mult))?;
    let mut xi = xi_from_curves(spec.mult, &curves)?;
    if let Some(g) = spec.tail {
        xi.extend(word_path(&Word::from_pairs(&[(g, 1)])));
    }
    let mut plan = cap_plan(&grown, &xi)?;
    if ring_cap {
        plan = junction_at_base(&xi, plan);
    }
    let cap = attach_disk(&grown, &xi, &plan)?;
    let bouquet_top = 2 * n as VertexId;
    let candidates = cap
        .oriented
        .iter()
        .filter_map(|t| {
            let i = t.iter().position(|&v| v == 0)?;
            let r = [t[i], t[(i + 1) % 3], t[(i + 2) % 3]];
            (r[1] > bouquet_top && r[2] > bouquet_top).then_some(r)
        })
        .collect();
    Ok(Side {
        complex: cap.complex,
        candidates,
    })
}

/// A ring plan with an arc starting at the base vertex, so that the cap has a
/// triangle spanned by the base and two interior vertices.
fn junction_at_base(xi: &[VertexId], plan: ArcPlan) -> ArcPlan {
    if let ArcPlan::Ring(s) = &plan {
        if s.len() >= 2 && s[0] == 0 {
            return plan;
        }
    }
    [ArcPlan::Ring(vec![0, 1]), ArcPlan::two_edge(xi.len())]
        .into_iter()
        .find(|p| p.is_valid(xi))
        .unwrap_or(plan)
}

/// Builds the complex for `xi_w = xi_v` given both side descriptions.
/// Single-triangle caps are tried first; when both corners of every such
/// pair touch common bouquet vertices, the caps get an interior vertex.
pub(crate) fn relation_complex(
    n: usize,
    w_side: &SideSpec,
    v_side: &SideSpec,
) -> Result<Complex2, ConstructionError> {
    match identify_caps(n, w_side, v_side, false) {
        Err(ConstructionError::NoIdentification) => identify_caps(n, w_side, v_side, true),
        r => r,
    }
}

fn identify_caps(
    n: usize,
    w_side: &SideSpec,
    v_side: &SideSpec,
    ring_cap: bool,
) -> Result<Complex2, ConstructionError> {
    let a = build_side(n, w_side, ring_cap)?;
    let b = build_side(n, v_side, ring_cap)?;
    let s = bouquet(n)?.complex;
    let ids: Vec<VertexId> = (0..s.vertex_count() as VertexId).collect();
    for t1 in &a.candidates {
        for t2 in &b.candidates {
            let x = a.complex.without_triangles(&[Triangle::new(t1[0], t1[1], t1[2])]);
            let y = b.complex.without_triangles(&[Triangle::new(t2[0], t2[1], t2[2])]);
            let Ok(union) = glue_along(&x, &y, &s, &ids, &ids) else { continue };
            let c2: Vec<VertexId> = t2.iter().map(|&v| union.y_map[v as usize]).collect();
            let phi: Vec<(VertexId, VertexId)> = t1.iter().copied().zip(c2.iter().copied()).collect();
            if let Ok(q) = identify_curves(&union.complex, t1, &c2, &phi) {
                return Ok(checked(q.complex));
            }
        }
    }
    Err(ConstructionError::NoIdentification)
}

fn relation_sides(r: &Relation) -> (SideSpec, SideSpec) {
    let side = |word: &Word| SideSpec {
        word: word.clone(),
        mult: r.m,
        tail: None,
        style: DiskStyle::TwoEdgeArcs,
    };
    (side(&r.w), side(&r.v))
}

/// Complex with fundamental group `< a_1..a_n | w^m = v^m >`.
pub fn one_relator_power_complex(n: usize, w: &Word, v: &Word, m: u64) -> Result<Complex2, ConstructionError> {
    multi_relator_complex(n, &[Relation::new(w.clone(), v.clone(), m)])
}

/// Glues one relation complex per relation along the common bouquet.
pub fn multi_relator_complex(n: usize, relations: &[Relation]) -> Result<Complex2, ConstructionError> {
    let pieces = relations
        .iter()
        .map(|r| {
            if r.m < 2 {
                return Err(ConstructionError::InvalidArgument(format!("exponent {} < 2", r.m)));
            }
            let (ws, vs) = relation_sides(r);
            relation_complex(n, &ws, &vs)
        })
        .collect::<Result<Vec<_>, _>>()?;
    union_over_bouquet(n, pieces)
}

/// Union of complexes that all contain the bouquet on vertices `0..=2n`.
pub(crate) fn union_over_bouquet(n: usize, pieces: Vec<Complex2>) -> Result<Complex2, ConstructionError> {
    let s = bouquet(n)?.complex;
    let ids: Vec<VertexId> = (0..s.vertex_count() as VertexId).collect();
    let mut acc = s.clone();
    for piece in pieces {
        acc = glue_along(&acc, &piece, &s, &ids, &ids)?.complex;
    }
    Ok(checked(acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::homology;
    use crate::presentation::{abelianization, edge_path_presentation, Presentation};

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn check(n: usize, w: &str, v: &str, m: u64) -> Complex2 {
        let k = one_relator_power_complex(n, &word(w), &word(v), m).unwrap();
        assert!(k.validate().is_empty());
        let expected = abelianization(&Presentation::from_relations(
            n,
            &[(word(w).pow(m as usize), word(v).pow(m as usize))],
        ));
        let got = abelianization(&edge_path_presentation(&k, 0).unwrap());
        assert_eq!(got, expected, "w={w} v={v} m={m}");
        k
    }

    #[test]
    fn commutator_power() {
        let k = check(2, "a1 a2", "a2 a1", 2);
        assert_eq!(homology(&k).b1, 2);
    }

    #[test]
    fn orientation_detected_by_abelianization() {
        check(2, "a1 a2", "a1", 3);
        check(1, "a1", "a1^-1", 2);
        check(1, "a1", "a1", 3);
        check(2, "a1 a2 a1^-1 a2", "a2", 4);
        check(3, "a1 a2 a3", "a3^-1 a2", 5);
    }

    #[test]
    fn invalid_inputs() {
        assert!(one_relator_power_complex(2, &word("a1 a2"), &word("a2 a1"), 1).is_err());
        assert!(one_relator_power_complex(2, &word("a1 a1^-1"), &word("a2"), 2).is_err());
        assert!(one_relator_power_complex(1, &word("a2"), &word("a1"), 2).is_err());
    }
}
