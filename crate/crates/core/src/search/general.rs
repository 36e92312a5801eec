//! Level-by-level generation of all 2-complexes on a fixed vertex set.
//!
//! Level `L` holds the isomorphism classes with `L` simplices above the
//! vertices (or `L` triangles, for pure complexes). Every class at level
//! `L + 1` arises from some class at level `L` by adding one simplex, so
//! deduplicating each level by canonical form visits every class once.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::canonical::{canonical_form, CanonicalComplex};
use crate::complex::{Complex2, Edge, Triangle, VertexId};

use super::{Parallelism, SearchError};

fn triples(n: usize) -> impl Iterator<Item = [VertexId; 3]> {
    let n = n as VertexId;
    (0..n).flat_map(move |a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c])))
}

fn pairs(n: usize) -> impl Iterator<Item = [VertexId; 2]> {
    let n = n as VertexId;
    (0..n).flat_map(move |a| (a + 1..n).map(move |b| [a, b]))
}

fn children(k: &Complex2, pure2: bool) -> Vec<Complex2> {
    let n = k.vertex_count();
    let edges = k.edges().iter().copied();
    let tris = k.triangles().iter().copied();
    let mut out = Vec::new();
    if !pure2 {
        for [a, b] in pairs(n).filter(|&[a, b]| !k.has_edge(a, b)) {
            out.push(Complex2::new(n, edges.clone().chain([Edge::new(a, b)]), tris.clone()));
        }
    }
    for [a, b, c] in triples(n).filter(|&[a, b, c]| !k.has_triangle(a, b, c)) {
        let t = Triangle::new(a, b, c);
        if pure2 {
            out.push(Complex2::new(n, edges.clone().chain(t.edges()), tris.clone().chain([t])));
        } else if t.edges().iter().all(|e| k.has_edge(e.vertices()[0], e.vertices()[1])) {
            out.push(Complex2::new(n, edges.clone(), tris.clone().chain([t])));
        }
    }
    out
}

fn next_level(level: &[CanonicalComplex], pure2: bool, par: Parallelism) -> (Vec<CanonicalComplex>, u64) {
    let expand = |c: &CanonicalComplex| -> Vec<CanonicalComplex> {
        children(&c.to_complex(), pure2).iter().map(canonical_form).collect()
    };
    let keys: Vec<Vec<CanonicalComplex>> = if par.is_parallel() {
        level.par_iter().map(expand).collect()
    } else {
        level.iter().map(expand).collect()
    };
    let examined = keys.iter().map(|v| v.len() as u64).sum();
    let set: BTreeSet<CanonicalComplex> = keys.into_iter().flatten().collect();
    (set.into_iter().collect(), examined)
}

/// Every isomorphism class of complexes on exactly `n` vertices (built from
/// triangles only when `pure2`), with the number of candidates examined.
pub(crate) fn level_classes(n: usize, pure2: bool, par: Parallelism) -> Result<(Vec<CanonicalComplex>, u64), SearchError> {
    par.run(|| {
        let mut level = vec![canonical_form(&Complex2::new(n, [], []))];
        let mut all = level.clone();
        let mut examined = 1;
        loop {
            let (next, seen) = next_level(&level, pure2, par);
            examined += seen;
            if next.is_empty() {
                break;
            }
            all.extend(next.iter().cloned());
            level = next;
        }
        (all, examined)
    })
}

/// Every vertex and every edge lies in a triangle, and there is a triangle.
pub(crate) fn is_pure2(k: &Complex2) -> bool {
    if k.triangle_count() == 0 {
        return false;
    }
    let mut covered_v = vec![false; k.vertex_count()];
    let mut covered_e = BTreeSet::new();
    for t in k.triangles() {
        for v in t.vertices() {
            covered_v[v as usize] = true;
        }
        covered_e.extend(t.edges());
    }
    covered_v.iter().all(|&c| c) && covered_e.len() == k.edge_count()
}

/// Number of isomorphism classes on exactly `n` vertices, computed without
/// canonical forms: every labeled complex is reduced to its least encoding
/// over all `n!` relabelings. Only practical for `n <= 5`.
pub fn naive_count(n: usize, pure2: bool, connected: bool) -> usize {
    let all_pairs: Vec<[VertexId; 2]> = pairs(n).collect();
    let all_triples: Vec<[VertexId; 3]> = triples(n).collect();
    let perms = permutations(n);
    let mut classes = BTreeSet::new();
    for tmask in 0u64..1 << all_triples.len() {
        let tris: Vec<[VertexId; 3]> = (0..all_triples.len())
            .filter(|i| tmask >> i & 1 == 1)
            .map(|i| all_triples[i])
            .collect();
        let forced: BTreeSet<[VertexId; 2]> = tris
            .iter()
            .flat_map(|&[a, b, c]| [[a, b], [a, c], [b, c]])
            .collect();
        let free: Vec<[VertexId; 2]> = all_pairs.iter().copied().filter(|e| !forced.contains(e)).collect();
        let extra_masks = if pure2 { 1u64 } else { 1 << free.len() };
        for emask in 0..extra_masks {
            let mut edges = forced.clone();
            edges.extend((0..free.len()).filter(|i| emask >> i & 1 == 1).map(|i| free[i]));
            let k = Complex2::new(
                n,
                edges.iter().map(|&[a, b]| Edge::new(a, b)),
                tris.iter().map(|&[a, b, c]| Triangle::new(a, b, c)),
            );
            if (pure2 && !is_pure2(&k)) || (connected && !k.is_connected()) {
                continue;
            }
            let least = perms
                .iter()
                .map(|p| relabeled_key(&edges, &tris, p))
                .min()
                .expect("at least one permutation");
            classes.insert(least);
        }
    }
    classes.len()
}

fn relabeled_key(edges: &BTreeSet<[VertexId; 2]>, tris: &[[VertexId; 3]], p: &[VertexId]) -> (Vec<[VertexId; 2]>, Vec<[VertexId; 3]>) {
    let mut e: Vec<[VertexId; 2]> = edges
        .iter()
        .map(|&[a, b]| {
            let (x, y) = (p[a as usize], p[b as usize]);
            [x.min(y), x.max(y)]
        })
        .collect();
    e.sort_unstable();
    let mut t: Vec<[VertexId; 3]> = tris
        .iter()
        .map(|&[a, b, c]| {
            let mut x = [p[a as usize], p[b as usize], p[c as usize]];
            x.sort_unstable();
            x
        })
        .collect();
    t.sort_unstable();
    (e, t)
}

fn permutations(n: usize) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    let mut cur: Vec<VertexId> = (0..n as VertexId).collect();
    fn heap(k: usize, cur: &mut Vec<VertexId>, out: &mut Vec<Vec<VertexId>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            cur.swap(j, k - 1);
        }
    }
    heap(n, &mut cur, &mut out);
    out
}
