//! Canonical labelings of 2-complexes.
//!
//! Vertices are first partitioned by iterated colour refinement (neighbour
//! colours along edges and colour pairs across triangles). Remaining ties are
//! broken by individualizing each vertex of the first non-singleton cell in
//! turn; the lexicographically smallest relabeled complex over all leaves is
//! the canonical form.

use crate::complex::{Complex2, VertexId};

/// A complete isomorphism invariant: two complexes are isomorphic iff their
/// canonical forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalComplex {
    key: Vec<u32>,
}

impl CanonicalComplex {
    /// The canonically relabeled complex.
    pub fn to_complex(&self) -> Complex2 {
        let n = self.key[0] as usize;
        let ne = self.key[1] as usize;
        let edges = &self.key[2..2 + 2 * ne];
        let tris = &self.key[2 + 2 * ne..];
        Complex2::new(
            n,
            edges
                .chunks(2)
                .map(|c| crate::complex::Edge::new(c[0], c[1])),
            tris.chunks(3)
                .map(|c| crate::complex::Triangle::new(c[0], c[1], c[2])),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.key[0] as usize
    }
}

struct Incidence {
    adj: Vec<Vec<VertexId>>,
    tri: Vec<Vec<[VertexId; 2]>>,
}

impl Incidence {
    fn new(k: &Complex2) -> Self {
        let mut tri = vec![Vec::new(); k.vertex_count()];
        for t in k.triangles() {
            let [a, b, c] = t.vertices();
            tri[a as usize].push([b, c]);
            tri[b as usize].push([a, c]);
            tri[c as usize].push([a, b]);
        }
        Incidence {
            adj: k.neighbors(),
            tri,
        }
    }
}

fn class_count(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Refines `colors` to the coarsest equitable-style partition reachable by
/// signature iteration. Colours are ranks of sorted signatures, so the
/// result depends only on the isomorphism type of the coloured complex.
fn refine(inc: &Incidence, colors: &mut [u32]) {
    let mut classes = class_count(colors);
    loop {
        let sigs: Vec<(u32, Vec<u32>, Vec<[u32; 2]>)> = (0..colors.len())
            .map(|v| {
                let mut nb: Vec<u32> = inc.adj[v].iter().map(|&w| colors[w as usize]).collect();
                nb.sort_unstable();
                let mut tr: Vec<[u32; 2]> = inc.tri[v]
                    .iter()
                    .map(|&[a, b]| {
                        let (x, y) = (colors[a as usize], colors[b as usize]);
                        if x <= y {
                            [x, y]
                        } else {
                            [y, x]
                        }
                    })
                    .collect();
                tr.sort_unstable();
                (colors[v], nb, tr)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        for (v, s) in sigs.iter().enumerate() {
            colors[v] = distinct.binary_search(s).expect("present") as u32;
        }
        if distinct.len() == classes {
            return;
        }
        classes = distinct.len();
    }
}

fn encode(k: &Complex2, perm: &[u32]) -> Vec<u32> {
    let mut edges: Vec<[u32; 2]> = k
        .edges()
        .iter()
        .map(|e| {
            let [a, b] = e.vertices();
            let mut x = [perm[a as usize], perm[b as usize]];
            x.sort_unstable();
            x
        })
        .collect();
    edges.sort_unstable();
    let mut tris: Vec<[u32; 3]> = k
        .triangles()
        .iter()
        .map(|t| {
            let [a, b, c] = t.vertices();
            let mut x = [perm[a as usize], perm[b as usize], perm[c as usize]];
            x.sort_unstable();
            x
        })
        .collect();
    tris.sort_unstable();
    let mut key = Vec::with_capacity(2 + 2 * edges.len() + 3 * tris.len());
    key.push(k.vertex_count() as u32);
    key.push(edges.len() as u32);
    key.extend(edges.iter().flatten());
    key.extend(tris.iter().flatten());
    key
}

fn search(
    k: &Complex2,
    inc: &Incidence,
    mut colors: Vec<u32>,
    best: &mut Option<(Vec<u32>, Vec<u32>)>,
) {
    refine(inc, &mut colors);
    let n = colors.len();
    let mut size = vec![0usize; n];
    for &c in &colors {
        size[c as usize] += 1;
    }
    let Some(target) = (0..n).find(|&c| size[c] > 1) else {
        let key = encode(k, &colors);
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            *best = Some((key, colors));
        }
        return;
    };
    let target = target as u32;
    for v in 0..n {
        if colors[v] != target {
            continue;
        }
        let child: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(w, &c)| if c > target || (c == target && w != v) { c + 1 } else { c })
            .collect();
        search(k, inc, child, best);
    }
}

/// Canonical form together with the labeling `perm` (vertex `v` of `k`
/// becomes `perm[v]` in the canonical complex).
pub fn canonical_labeling(k: &Complex2) -> (CanonicalComplex, Vec<VertexId>) {
    let inc = Incidence::new(k);
    let mut best = None;
    search(k, &inc, vec![0; k.vertex_count()], &mut best);
    let (key, perm) = best.unwrap_or_else(|| (encode(k, &[]), Vec::new()));
    (CanonicalComplex { key }, perm)
}

pub fn canonical_form(k: &Complex2) -> CanonicalComplex {
    canonical_labeling(k).0
}

pub fn is_isomorphic(a: &Complex2, b: &Complex2) -> bool {
    a.f_vector() == b.f_vector() && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_point() {
        let empty = Complex2::new(0, [], []);
        assert_eq!(canonical_form(&empty).to_complex(), empty);
        assert_eq!(canonical_form(&Complex2::point()).vertex_count(), 1);
    }

    #[test]
    fn path_relabelings_agree() {
        let p1 = Complex2::from_simplices(
            3,
            [crate::Edge::new(0, 1), crate::Edge::new(1, 2)],
            [],
        );
        let p2 = p1.relabel(&[1, 0, 2]);
        assert_ne!(p1, p2);
        assert_eq!(canonical_form(&p1), canonical_form(&p2));
    }

    #[test]
    fn labeling_maps_to_form() {
        let k = Complex2::from_triangles(4, &[[0, 1, 2], [1, 2, 3]]);
        let (form, perm) = canonical_labeling(&k);
        assert_eq!(k.relabel(&perm), form.to_complex());
    }
}
