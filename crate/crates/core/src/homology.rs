//! Integral homology, homology classes of loops and collapsibility.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::complex::{Complex2, Edge, Triangle, VertexId};
use crate::snf::{mat_vec, smith_normal_form, smith_normal_form_big};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("path is empty")]
    EmptyPath,
    #[error("{{{0},{1}}} is not an edge of the complex")]
    NotAnEdge(VertexId, VertexId),
    #[error("unknown marked path {0:?}")]
    UnknownPath(String),
}

/// A finitely generated abelian group `Z^r + Z/d1 + ... + Z/dk` with `d1 | d2 | ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            invariant_factors: Vec::new(),
        }
    }

    /// `Z/m` (trivial for `m = 1`).
    pub fn cyclic(m: u64) -> Self {
        Self::from_factors(0, &[m])
    }

    /// Normalizes arbitrary cyclic orders into invariant factors.
    pub fn from_factors(free_rank: usize, orders: &[u64]) -> Self {
        let rows: Vec<Vec<i64>> = orders
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let mut r = vec![0; orders.len()];
                r[i] = d as i64;
                r
            })
            .collect();
        let s = smith_normal_form(&rows, orders.len(), false);
        let mut extra = orders.len() - s.rank();
        extra += free_rank;
        AbelianGroup {
            free_rank: extra,
            invariant_factors: s.torsion(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn big_to_json(x: &BigInt) -> serde_json::Value {
    match i64::try_from(x) {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::from(x.to_string()),
    }
}

impl Serialize for AbelianGroup {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("AbelianGroup", 3)?;
        st.serialize_field("free_rank", &self.free_rank)?;
        let factors: Vec<serde_json::Value> = self.invariant_factors.iter().map(big_to_json).collect();
        st.serialize_field("invariant_factors", &factors)?;
        st.serialize_field("display", &self.to_string())?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub b0: usize,
    pub b1: usize,
    pub b2: usize,
    /// Torsion part of `H1` (free rank zero).
    pub h1_torsion: AbelianGroup,
}

impl HomologyProfile {
    pub fn h1(&self) -> AbelianGroup {
        AbelianGroup {
            free_rank: self.b1,
            invariant_factors: self.h1_torsion.invariant_factors.clone(),
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.b0 as i64 - self.b1 as i64 + self.b2 as i64
    }
}

fn edge_index(k: &Complex2) -> BTreeMap<Edge, usize> {
    k.edges().iter().enumerate().map(|(i, e)| (*e, i)).collect()
}

/// `d1`: rows are vertices, columns are edges `[a,b]` with `a < b` mapped to `b - a`.
pub fn boundary_1(k: &Complex2) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; k.edge_count()]; k.vertex_count()];
    for (j, e) in k.edges().iter().enumerate() {
        let [a, b] = e.vertices();
        m[a as usize][j] -= 1;
        m[b as usize][j] += 1;
    }
    m
}

/// `d2`: rows are edges, columns are triangles `[a,b,c]` mapped to `[b,c] - [a,c] + [a,b]`.
pub fn boundary_2(k: &Complex2) -> Vec<Vec<i64>> {
    let idx = edge_index(k);
    let mut m = vec![vec![0; k.triangle_count()]; k.edge_count()];
    for (j, t) in k.triangles().iter().enumerate() {
        let [a, b, c] = t.vertices();
        m[idx[&Edge::new(b, c)]][j] += 1;
        m[idx[&Edge::new(a, c)]][j] -= 1;
        m[idx[&Edge::new(a, b)]][j] += 1;
    }
    m
}

pub fn homology(k: &Complex2) -> HomologyProfile {
    let (s0, s1, s2) = k.f_vector();
    let r1 = smith_normal_form(&boundary_1(k), s1, false).rank();
    let d2 = smith_normal_form(&boundary_2(k), s2, false);
    let r2 = d2.rank();
    HomologyProfile {
        b0: s0 - r1,
        b1: s1 - r1 - r2,
        b2: s2 - r2,
        h1_torsion: AbelianGroup {
            free_rank: 0,
            invariant_factors: d2.torsion(),
        },
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `b1 <= C(s0-1, 2)` and `b2 <= C(s0-1, 3)`.
pub fn betti_bound_check(k: &Complex2) -> bool {
    let h = homology(k);
    let n = k.vertex_count().saturating_sub(1);
    (h.b1 as u128) <= binomial(n, 2) && (h.b2 as u128) <= binomial(n, 3)
}

/// Signed edge chain of a closed vertex path `path[0] -> path[1] -> ... -> path[0]`.
pub fn path_chain(k: &Complex2, path: &[VertexId]) -> Result<Vec<BigInt>, HomologyError> {
    if path.is_empty() {
        return Err(HomologyError::EmptyPath);
    }
    let idx = edge_index(k);
    let mut x = vec![BigInt::zero(); k.edge_count()];
    for i in 0..path.len() {
        let (a, b) = (path[i], path[(i + 1) % path.len()]);
        if path.len() == 1 {
            break;
        }
        let e = Edge::try_new(a, b).ok_or(HomologyError::NotAnEdge(a, b))?;
        let j = *idx.get(&e).ok_or(HomologyError::NotAnEdge(a, b))?;
        if a < b {
            x[j] += 1;
        } else {
            x[j] -= 1;
        }
    }
    Ok(x)
}

/// `H1`-class of a loop: free coordinates plus torsion residues.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoopClass {
    #[serde(serialize_with = "ser_bigs")]
    pub free: Vec<BigInt>,
    /// `(residue, modulus)` per invariant factor.
    #[serde(serialize_with = "ser_pairs")]
    pub torsion: Vec<(BigInt, BigInt)>,
}

fn ser_bigs<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    v.iter().map(big_to_json).collect::<Vec<_>>().serialize(s)
}

fn ser_pairs<S: Serializer>(v: &[(BigInt, BigInt)], s: S) -> Result<S::Ok, S::Error> {
    v.iter()
        .map(|(a, b)| [big_to_json(a), big_to_json(b)])
        .collect::<Vec<_>>()
        .serialize(s)
}

impl LoopClass {
    pub fn is_zero(&self) -> bool {
        self.free.iter().all(Zero::is_zero) && self.torsion.iter().all(|(r, _)| r.is_zero())
    }

    /// `c * self`, reducing torsion residues.
    pub fn scale(&self, c: i64) -> LoopClass {
        LoopClass {
            free: self.free.iter().map(|x| x * c).collect(),
            torsion: self
                .torsion
                .iter()
                .map(|(r, d)| ((r * c).mod_floor(d), d.clone()))
                .collect(),
        }
    }
}

/// A fixed basis of `H1(K)` in which loop classes are expressed.
pub struct H1Basis {
    edges: usize,
    /// `Q1^-1` of the Smith form of `d1`.
    q1_inv: Vec<Vec<BigInt>>,
    r1: usize,
    /// `P2` of the Smith form of the cycle-coordinate image of `d2`.
    p2: Vec<Vec<BigInt>>,
    diag2: Vec<BigInt>,
    complex: Complex2,
}

impl H1Basis {
    pub fn new(k: &Complex2) -> H1Basis {
        let s1 = smith_normal_form(&boundary_1(k), k.edge_count(), true);
        let r1 = s1.rank();
        let q1_inv = s1.q_inv.expect("tracked");
        let d2 = boundary_2(k);
        let big_d2: Vec<Vec<BigInt>> = d2
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        // Columns of Q1 beyond r1 span ker d1; coordinates there are rows r1.. of Q1^-1.
        let t = k.triangle_count();
        let image: Vec<Vec<BigInt>> = q1_inv[r1..]
            .iter()
            .map(|row| {
                (0..t)
                    .map(|j| row.iter().zip(&big_d2).map(|(a, r)| a * &r[j]).sum())
                    .collect()
            })
            .collect();
        let s2 = smith_normal_form_big(&image, t, true);
        H1Basis {
            edges: k.edge_count(),
            q1_inv,
            r1,
            p2: s2.p.expect("tracked"),
            diag2: s2.diagonal,
            complex: k.clone(),
        }
    }

    pub fn class_of_chain(&self, x: &[BigInt]) -> LoopClass {
        assert_eq!(x.len(), self.edges);
        let y = mat_vec(&self.q1_inv, x);
        debug_assert!(y[..self.r1].iter().all(Zero::is_zero), "chain is not a cycle");
        let z = mat_vec(&self.p2, &y[self.r1..]);
        let mut free = Vec::new();
        let mut torsion = Vec::new();
        for (i, zi) in z.into_iter().enumerate() {
            match self.diag2.get(i) {
                Some(d) if d.is_one() => {}
                Some(d) => torsion.push((zi.mod_floor(d), d.clone())),
                None => free.push(zi),
            }
        }
        LoopClass { free, torsion }
    }

    pub fn class_of(&self, path: &[VertexId]) -> Result<LoopClass, HomologyError> {
        Ok(self.class_of_chain(&path_chain(&self.complex, path)?))
    }
}

/// Whether `a` is an integer multiple `c * b` for the given `c`.
pub fn is_multiple(a: &LoopClass, b: &LoopClass, c: i64) -> bool {
    &b.scale(c) == a
}

/// Primitive generator test for classes in a group `Z` (no torsion, rank one).
pub fn is_unit(a: &LoopClass) -> bool {
    a.torsion.is_empty() && a.free.len() == 1 && a.free[0].abs().is_one()
}

/// Repeatedly removes a triangle together with a free edge (an edge in exactly
/// one triangle). Since such a pair stays collapsible once it becomes so, the
/// set of triangles removed does not depend on the order, and this decides
/// collapsibility to a graph exactly.
pub fn is_collapsible_to_graph(k: &Complex2) -> bool {
    collapse_triangles(k).is_empty()
}

/// Triangles left after all edge-triangle collapses.
pub fn collapse_triangles(k: &Complex2) -> BTreeSet<Triangle> {
    let mut remaining: BTreeSet<Triangle> = k.triangles().clone();
    let mut degree: BTreeMap<Edge, usize> = BTreeMap::new();
    for t in &remaining {
        for e in t.edges() {
            *degree.entry(e).or_default() += 1;
        }
    }
    let mut by_edge: BTreeMap<Edge, Vec<Triangle>> = BTreeMap::new();
    for t in &remaining {
        for e in t.edges() {
            by_edge.entry(e).or_default().push(*t);
        }
    }
    let mut stack: Vec<Edge> = degree.iter().filter(|(_, &d)| d == 1).map(|(e, _)| *e).collect();
    while let Some(e) = stack.pop() {
        if degree[&e] != 1 {
            continue;
        }
        let t = *by_edge[&e]
            .iter()
            .find(|t| remaining.contains(t))
            .expect("degree one");
        remaining.remove(&t);
        for f in t.edges() {
            let d = degree.get_mut(&f).expect("present");
            *d -= 1;
            if *d == 1 {
                stack.push(f);
            }
        }
    }
    remaining
}
