//! Gluing complexes along common subcomplexes and identifying boundary curves.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use crate::complex::{Complex2, Edge, Triangle, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GlueError {
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("embeddings have different source complexes")]
    SourceMismatch,
    #[error("vertices {a} and {b} of Z are joined by {count} distinct edges in the glued complex")]
    DuplicateEdge { a: VertexId, b: VertexId, count: usize },
    #[error("simplices {x:?} of X and {y:?} of Y meet in {common:?}, which is not a simplex of Z")]
    NonSimplexIntersection {
        x: Vec<VertexId>,
        y: Vec<VertexId>,
        common: Vec<VertexId>,
    },
    #[error("curve identification precondition failed: {0}")]
    Curve(String),
    #[error("simplex {0:?} collapses under the identification")]
    Degenerate(Vec<VertexId>),
    #[error("simplices {0:?} and {1:?} become the same simplex under the identification")]
    Collision(Vec<VertexId>, Vec<VertexId>),
}

/// A simplicial embedding `source -> target` given by an injective vertex map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    source: Complex2,
    target: Complex2,
    vertex_map: Vec<VertexId>,
}

impl Embedding {
    pub fn new(
        source: Complex2,
        target: Complex2,
        vertex_map: Vec<VertexId>,
    ) -> Result<Embedding, GlueError> {
        if vertex_map.len() != source.vertex_count() {
            return Err(GlueError::InvalidEmbedding(format!(
                "vertex map has {} entries for {} source vertices",
                vertex_map.len(),
                source.vertex_count()
            )));
        }
        let mut seen = BTreeSet::new();
        for &v in &vertex_map {
            if !target.has_vertex(v) {
                return Err(GlueError::InvalidEmbedding(format!("vertex {v} not in target")));
            }
            if !seen.insert(v) {
                return Err(GlueError::InvalidEmbedding(format!("vertex {v} hit twice")));
            }
        }
        let f = |v: VertexId| vertex_map[v as usize];
        for e in source.edges() {
            let [a, b] = e.vertices();
            if !target.has_edge(f(a), f(b)) {
                return Err(GlueError::InvalidEmbedding(format!(
                    "edge {e} maps to non-edge {{{},{}}}",
                    f(a),
                    f(b)
                )));
            }
        }
        for t in source.triangles() {
            let [a, b, c] = t.vertices();
            if !target.has_triangle(f(a), f(b), f(c)) {
                return Err(GlueError::InvalidEmbedding(format!("triangle {t} maps to a non-triangle")));
            }
        }
        Ok(Embedding {
            source,
            target,
            vertex_map,
        })
    }

    pub fn source(&self) -> &Complex2 {
        &self.source
    }

    pub fn target(&self) -> &Complex2 {
        &self.target
    }

    pub fn vertex_map(&self) -> &[VertexId] {
        &self.vertex_map
    }

    fn image_edges(&self) -> BTreeSet<Edge> {
        self.source
            .edges()
            .iter()
            .map(|e| map_edge(e, &self.vertex_map))
            .collect()
    }

    fn image_triangles(&self) -> BTreeSet<Triangle> {
        self.source
            .triangles()
            .iter()
            .map(|t| map_triangle(t, &self.vertex_map))
            .collect()
    }

    /// Whether every target simplex with 1-skeleton in the image lies in the
    /// image. Only triangles can fail this.
    pub fn is_maximal(&self) -> bool {
        let edges = self.image_edges();
        let tris = self.image_triangles();
        self.target
            .triangles()
            .iter()
            .all(|t| !t.edges().iter().all(|e| edges.contains(e)) || tris.contains(t))
    }
}

fn map_edge(e: &Edge, f: &[VertexId]) -> Edge {
    let [a, b] = e.vertices();
    Edge::new(f[a as usize], f[b as usize])
}

fn map_triangle(t: &Triangle, f: &[VertexId]) -> Triangle {
    let [a, b, c] = t.vertices();
    Triangle::new(f[a as usize], f[b as usize], f[c as usize])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueResult {
    pub complex: Complex2,
    /// No two distinct edges of the result join the same pair of `Z` vertices.
    pub condition1: bool,
    /// One of the embeddings is maximal.
    pub condition2: bool,
    /// The sufficient conditions did not both hold and the result was
    /// accepted by checking simplex intersections directly.
    pub directly_validated: bool,
    /// For [`glue`]: where each vertex of `Y` went in the result.
    pub y_map: Vec<VertexId>,
}

/// Pushout vertex map for `Y`: images of `Z` go to their `X` partners, the
/// rest are appended after the vertices of `X` in ascending order.
fn pushout_map(i: &Embedding, j: &Embedding) -> Vec<VertexId> {
    let y = &j.target;
    let mut map = vec![VertexId::MAX; y.vertex_count()];
    for (z, &yv) in j.vertex_map.iter().enumerate() {
        map[yv as usize] = i.vertex_map[z];
    }
    let mut next = i.target.vertex_count() as VertexId;
    for slot in map.iter_mut() {
        if *slot == VertexId::MAX {
            *slot = next;
            next += 1;
        }
    }
    map
}

/// The pseudo-pushout simplices of `Y \ Z`, already in pushout ids.
fn y_outside(j: &Embedding, map: &[VertexId]) -> (Vec<Edge>, Vec<Triangle>) {
    let z_edges = j.image_edges();
    let z_tris = j.image_triangles();
    let edges = j
        .target
        .edges()
        .iter()
        .filter(|e| !z_edges.contains(e))
        .map(|e| map_edge(e, map))
        .collect();
    let tris = j
        .target
        .triangles()
        .iter()
        .filter(|t| !z_tris.contains(t))
        .map(|t| map_triangle(t, map))
        .collect();
    (edges, tris)
}

/// Counts edges between pairs of `Z` vertices in the pseudo-pushout and
/// reports the first pair joined more than once.
pub fn check_condition1(i: &Embedding, j: &Embedding) -> Result<(), GlueError> {
    let map = pushout_map(i, j);
    let z_in_x: BTreeSet<VertexId> = i.vertex_map.iter().copied().collect();
    let mut count: BTreeMap<Edge, usize> = BTreeMap::new();
    for e in i.target.edges() {
        if e.vertices().iter().all(|v| z_in_x.contains(v)) {
            *count.entry(*e).or_default() += 1;
        }
    }
    let (y_edges, _) = y_outside(j, &map);
    for e in y_edges {
        if e.vertices().iter().all(|v| z_in_x.contains(v)) {
            *count.entry(e).or_default() += 1;
        }
    }
    match count.into_iter().find(|(_, c)| *c > 1) {
        Some((e, c)) => {
            let [a, b] = e.vertices();
            Err(GlueError::DuplicateEdge { a, b, count: c })
        }
        None => Ok(()),
    }
}

/// Checks that every simplex of `X \ Z` meets every simplex of `Y \ Z` in a
/// simplex of `Z` (or not at all).
pub fn direct_validation(i: &Embedding, j: &Embedding) -> Result<(), GlueError> {
    let map = pushout_map(i, j);
    let z_edges = i.image_edges();
    let z_tris = i.image_triangles();
    let in_z = |s: &[VertexId]| match s.len() {
        0 | 1 => true,
        2 => z_edges.contains(&Edge::new(s[0], s[1])),
        _ => z_tris.contains(&Triangle::new(s[0], s[1], s[2])),
    };
    let x_simplices: Vec<Vec<VertexId>> = i
        .target
        .edges()
        .iter()
        .filter(|e| !z_edges.contains(e))
        .map(|e| e.vertices().to_vec())
        .chain(
            i.target
                .triangles()
                .iter()
                .filter(|t| !z_tris.contains(t))
                .map(|t| t.vertices().to_vec()),
        )
        .collect();
    let (y_edges, y_tris) = y_outside(j, &map);
    let y_simplices: Vec<Vec<VertexId>> = y_edges
        .iter()
        .map(|e| e.vertices().to_vec())
        .chain(y_tris.iter().map(|t| t.vertices().to_vec()))
        .collect();
    for x in &x_simplices {
        for y in &y_simplices {
            let common: Vec<VertexId> = x.iter().copied().filter(|v| y.contains(v)).collect();
            if !in_z(&common) {
                return Err(GlueError::NonSimplexIntersection {
                    x: x.clone(),
                    y: y.clone(),
                    common,
                });
            }
        }
    }
    Ok(())
}

/// Glues `X = i.target` and `Y = j.target` along the common source `Z`.
pub fn glue(i: &Embedding, j: &Embedding) -> Result<GlueResult, GlueError> {
    if i.source != j.source {
        return Err(GlueError::SourceMismatch);
    }
    check_condition1(i, j)?;
    let condition2 = i.is_maximal() || j.is_maximal();
    if !condition2 {
        direct_validation(i, j)?;
    } else {
        debug_assert!(direct_validation(i, j).is_ok());
    }
    let map = pushout_map(i, j);
    let x = &i.target;
    let y = &j.target;
    let complex = Complex2::new(
        x.vertex_count() + y.vertex_count() - i.source.vertex_count(),
        x.edges()
            .iter()
            .copied()
            .chain(y.edges().iter().map(|e| map_edge(e, &map))),
        x.triangles()
            .iter()
            .copied()
            .chain(y.triangles().iter().map(|t| map_triangle(t, &map))),
    );
    debug_assert!(complex.validate().is_simplicial());
    Ok(GlueResult {
        complex,
        condition1: true,
        condition2,
        directly_validated: !condition2,
        y_map: map,
    })
}

/// Convenience wrapper building both embeddings from vertex lists.
pub fn glue_along(
    x: &Complex2,
    y: &Complex2,
    z: &Complex2,
    into_x: &[VertexId],
    into_y: &[VertexId],
) -> Result<GlueResult, GlueError> {
    let i = Embedding::new(z.clone(), x.clone(), into_x.to_vec())?;
    let j = Embedding::new(z.clone(), y.clone(), into_y.to_vec())?;
    glue(&i, &j)
}

/// The closed edge path through `path` as a 1-complex on `path.len()`
/// vertices (vertex `k` is `path[k]`), for use as a gluing source.
pub fn cycle_complex(len: usize) -> Complex2 {
    let n = len as VertexId;
    Complex2::new(len, (0..n).map(|k| Edge::new(k, (k + 1) % n)), [])
}

fn check_closed_path(k: &Complex2, c: &[VertexId], name: &str) -> Result<(), GlueError> {
    if c.len() < 3 {
        return Err(GlueError::Curve(format!("{name} has fewer than 3 vertices")));
    }
    let distinct: BTreeSet<_> = c.iter().collect();
    if distinct.len() != c.len() {
        return Err(GlueError::Curve(format!("{name} is not simple")));
    }
    for idx in 0..c.len() {
        let (a, b) = (c[idx], c[(idx + 1) % c.len()]);
        if !k.has_edge(a, b) {
            return Err(GlueError::Curve(format!("{name}: {{{a},{b}}} is not an edge")));
        }
    }
    Ok(())
}

/// Quotient of `k` identifying `c2` with `c1` through `phi` (pairs
/// `(c1 vertex, c2 vertex)`). Vertices on both curves must be fixed by
/// `phi`. Removed vertices are compacted away; survivors keep their relative
/// order. Returns the quotient together with the old-to-new vertex map.
pub fn identify_curves(
    k: &Complex2,
    c1: &[VertexId],
    c2: &[VertexId],
    phi: &[(VertexId, VertexId)],
) -> Result<GlueResult, GlueError> {
    check_closed_path(k, c1, "first curve")?;
    check_closed_path(k, c2, "second curve")?;
    if c1.len() != c2.len() {
        return Err(GlueError::Curve("curves have different lengths".into()));
    }
    let mut fwd: HashMap<VertexId, VertexId> = HashMap::new();
    let mut back: HashMap<VertexId, VertexId> = HashMap::new();
    for &(a, b) in phi {
        if !c1.contains(&a) || !c2.contains(&b) {
            return Err(GlueError::Curve(format!("pair ({a},{b}) is not curve-to-curve")));
        }
        if fwd.insert(a, b).is_some() || back.insert(b, a).is_some() {
            return Err(GlueError::Curve(format!("correspondence is not a bijection at ({a},{b})")));
        }
    }
    if fwd.len() != c1.len() {
        return Err(GlueError::Curve("correspondence does not cover the curve".into()));
    }
    let len = c1.len();
    let images: Vec<VertexId> = c1.iter().map(|a| fwd[a]).collect();
    let start = c2.iter().position(|&v| v == images[0]).expect("on curve");
    let forward = (0..len).all(|t| c2[(start + t) % len] == images[t]);
    let backward = (0..len).all(|t| c2[(start + len - t) % len] == images[t]);
    if !forward && !backward {
        return Err(GlueError::Curve("correspondence does not respect cyclic order".into()));
    }
    for (&a, &b) in &fwd {
        let on_both_a = c2.contains(&a);
        let on_both_b = c1.contains(&b);
        if (on_both_a || on_both_b) && a != b {
            return Err(GlueError::Curve(format!(
                "curves share vertex {} which is not fixed",
                if on_both_a { a } else { b }
            )));
        }
    }
    // Merge c2 vertices into their c1 partners, then compact.
    let n = k.vertex_count();
    let mut target: Vec<VertexId> = (0..n as VertexId).collect();
    for (&b, &a) in &back {
        target[b as usize] = a;
    }
    let mut new_id = vec![0; n];
    let mut next = 0;
    for v in 0..n {
        if target[v] as usize == v {
            new_id[v] = next;
            next += 1;
        }
    }
    let q: Vec<VertexId> = (0..n).map(|v| new_id[target[v] as usize]).collect();
    let intended: BTreeSet<Edge> = (0..len)
        .map(|t| Edge::new(c2[t], c2[(t + 1) % len]))
        .collect();
    let mut edges: BTreeMap<Edge, Edge> = BTreeMap::new();
    for e in k.edges() {
        let [a, b] = e.vertices();
        let image = Edge::try_new(q[a as usize], q[b as usize])
            .ok_or_else(|| GlueError::Degenerate(e.vertices().to_vec()))?;
        if intended.contains(e) {
            continue;
        }
        if let Some(prev) = edges.insert(image, *e) {
            return Err(GlueError::Collision(prev.vertices().to_vec(), e.vertices().to_vec()));
        }
    }
    for e in &intended {
        let [a, b] = e.vertices();
        let image = Edge::new(q[a as usize], q[b as usize]);
        if !edges.contains_key(&image) {
            return Err(GlueError::Curve(format!("edge {e} has no partner on the first curve")));
        }
    }
    let mut tris: BTreeMap<Triangle, Triangle> = BTreeMap::new();
    for t in k.triangles() {
        let [a, b, c] = t.vertices();
        let image = Triangle::try_new(q[a as usize], q[b as usize], q[c as usize])
            .ok_or_else(|| GlueError::Degenerate(t.vertices().to_vec()))?;
        if let Some(prev) = tris.insert(image, *t) {
            return Err(GlueError::Collision(prev.vertices().to_vec(), t.vertices().to_vec()));
        }
    }
    let complex = Complex2::new(next as usize, edges.into_keys(), tris.into_keys());
    debug_assert!(complex.validate().is_simplicial());
    Ok(GlueResult {
        complex,
        condition1: true,
        condition2: false,
        directly_validated: true,
        y_map: q,
    })
}

/// [`identify_curves`] with `c1[t]` matched to `c2[t]`.
pub fn identify_aligned(
    k: &Complex2,
    c1: &[VertexId],
    c2: &[VertexId],
) -> Result<GlueResult, GlueError> {
    let phi: Vec<(VertexId, VertexId)> = c1.iter().copied().zip(c2.iter().copied()).collect();
    identify_curves(k, c1, c2, &phi)
}
