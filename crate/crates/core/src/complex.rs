//! Finite simplicial complexes of dimension at most two.
//!
//! A [`Complex2`] stores its vertices as the dense range `0..vertex_count`,
//! its edges as sorted pairs and its triangles as sorted triples. Two edges on
//! the same pair of vertices cannot coexist, so "at most one edge between two
//! vertices" holds by construction inside a single complex. Downward closure is
//! *not* enforced by the raw constructor; [`Complex2::validate`] reports it.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Vertex identifier, dense in `0..vertex_count`.
pub type VertexId = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("complex is not a valid simplicial complex: {0}")]
    Invalid(String),
    #[error("vertex {0} is not in the complex")]
    NoSuchVertex(VertexId),
    #[error("degenerate simplex {0:?}: repeated vertex")]
    Degenerate(Vec<VertexId>),
    #[error("complex is disconnected")]
    Disconnected,
    #[error("malformed complex JSON: {0}")]
    Json(String),
}

/// An edge, stored with `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge([VertexId; 2]);

impl Edge {
    /// Panics if `a == b`.
    pub fn new(a: VertexId, b: VertexId) -> Self {
        Self::try_new(a, b).expect("edge endpoints must be distinct")
    }

    pub fn try_new(a: VertexId, b: VertexId) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge([a, b])),
            std::cmp::Ordering::Greater => Some(Edge([b, a])),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn vertices(&self) -> [VertexId; 2] {
        self.0
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0[0] == v || self.0[1] == v
    }

    /// The endpoint that is not `v`; `v` must be an endpoint.
    pub fn other(&self, v: VertexId) -> VertexId {
        if self.0[0] == v {
            self.0[1]
        } else {
            self.0[0]
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0[0], self.0[1])
    }
}

/// A triangle, stored with sorted corners.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle([VertexId; 3]);

impl Triangle {
    /// Panics on repeated corners.
    pub fn new(a: VertexId, b: VertexId, c: VertexId) -> Self {
        Self::try_new(a, b, c).expect("triangle corners must be distinct")
    }

    pub fn try_new(a: VertexId, b: VertexId, c: VertexId) -> Option<Self> {
        let mut v = [a, b, c];
        v.sort_unstable();
        if v[0] == v[1] || v[1] == v[2] {
            None
        } else {
            Some(Triangle(v))
        }
    }

    pub fn vertices(&self) -> [VertexId; 3] {
        self.0
    }

    pub fn edges(&self) -> [Edge; 3] {
        let [a, b, c] = self.0;
        [Edge([a, b]), Edge([a, c]), Edge([b, c])]
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    /// The corner opposite to edge `e`; `e` must be an edge of the triangle.
    pub fn opposite(&self, e: Edge) -> VertexId {
        *self
            .0
            .iter()
            .find(|v| !e.contains(**v))
            .expect("edge belongs to triangle")
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.0[0], self.0[1], self.0[2])
    }
}

/// A finite simplicial complex of dimension at most two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Complex2 {
    vertex_count: usize,
    edges: BTreeSet<Edge>,
    triangles: BTreeSet<Triangle>,
}

/// A subcomplex relabeled to dense ids, with the map back to the parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subcomplex {
    pub complex: Complex2,
    /// `parent_ids[i]` is the parent vertex of local vertex `i`.
    pub parent_ids: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    VertexOutOfRange { simplex: Vec<VertexId> },
    MissingEdge { triangle: Triangle, edge: Edge },
    Disconnected { components: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexOutOfRange { simplex } => {
                write!(f, "simplex {simplex:?} uses a vertex outside the vertex range")
            }
            Violation::MissingEdge { triangle, edge } => {
                write!(f, "closure: edge {edge} of triangle {triangle} is missing")
            }
            Violation::Disconnected { components } => {
                write!(f, "complex has {components} connected components")
            }
        }
    }
}

/// Result of [`Complex2::validate`]. Empty means a valid connected complex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    /// Closure holds (connectivity may still fail).
    pub fn is_simplicial(&self) -> bool {
        self.violations
            .iter()
            .all(|v| matches!(v, Violation::Disconnected { .. }))
    }

    pub fn is_connected(&self) -> bool {
        !self
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Disconnected { .. }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceReport {
    pub is_closed_surface: bool,
    pub orientable: Option<bool>,
    pub euler_characteristic: i64,
    /// Orientable genus `g` or non-orientable genus `q`, for closed surfaces.
    pub genus: Option<u32>,
}

impl Complex2 {
    /// Raw constructor. Nothing is checked beyond the edge/triangle
    /// representation; use [`validate`](Self::validate) for closure.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = Edge>,
        triangles: impl IntoIterator<Item = Triangle>,
    ) -> Self {
        Complex2 {
            vertex_count,
            edges: edges.into_iter().collect(),
            triangles: triangles.into_iter().collect(),
        }
    }

    /// Builds the downward closure of the given triangles and edges.
    pub fn from_simplices(
        vertex_count: usize,
        edges: impl IntoIterator<Item = Edge>,
        triangles: impl IntoIterator<Item = Triangle>,
    ) -> Self {
        let triangles: BTreeSet<Triangle> = triangles.into_iter().collect();
        let mut edges: BTreeSet<Edge> = edges.into_iter().collect();
        edges.extend(triangles.iter().flat_map(|t| t.edges()));
        Complex2 {
            vertex_count,
            edges,
            triangles,
        }
    }

    pub fn from_triangles(vertex_count: usize, triangles: &[[VertexId; 3]]) -> Self {
        Self::from_simplices(
            vertex_count,
            [],
            triangles.iter().map(|&[a, b, c]| Triangle::new(a, b, c)),
        )
    }

    pub fn point() -> Self {
        Complex2::new(1, [], [])
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    /// `(s0, s1, s2)`.
    pub fn f_vector(&self) -> (usize, usize, usize) {
        (self.vertex_count, self.edges.len(), self.triangles.len())
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.vertex_count as VertexId
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn triangles(&self) -> &BTreeSet<Triangle> {
        &self.triangles
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        (v as usize) < self.vertex_count
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        Edge::try_new(a, b).is_some_and(|e| self.edges.contains(&e))
    }

    pub fn has_triangle(&self, a: VertexId, b: VertexId, c: VertexId) -> bool {
        Triangle::try_new(a, b, c).is_some_and(|t| self.triangles.contains(&t))
    }

    pub fn dimension(&self) -> usize {
        if !self.triangles.is_empty() {
            2
        } else if !self.edges.is_empty() {
            1
        } else {
            0
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let n = self.vertex_count as VertexId;
        for e in &self.edges {
            if e.0[1] >= n {
                violations.push(Violation::VertexOutOfRange {
                    simplex: e.0.to_vec(),
                });
            }
        }
        for t in &self.triangles {
            if t.0[2] >= n {
                violations.push(Violation::VertexOutOfRange {
                    simplex: t.0.to_vec(),
                });
            }
            for e in t.edges() {
                if !self.edges.contains(&e) {
                    violations.push(Violation::MissingEdge { triangle: *t, edge: e });
                }
            }
        }
        let components = self.component_count();
        if components != 1 {
            violations.push(Violation::Disconnected { components });
        }
        ValidationReport { violations }
    }

    pub(crate) fn require_simplicial(&self) -> Result<(), ComplexError> {
        let report = self.validate();
        match report
            .violations
            .iter()
            .find(|v| !matches!(v, Violation::Disconnected { .. }))
        {
            Some(v) => Err(ComplexError::Invalid(v.to_string())),
            None => Ok(()),
        }
    }

    /// Adjacency lists of the 1-skeleton, each sorted ascending.
    pub fn neighbors(&self) -> Vec<Vec<VertexId>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for e in &self.edges {
            let [a, b] = e.0;
            if (b as usize) < self.vertex_count {
                adj[a as usize].push(b);
                adj[b as usize].push(a);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Number of connected components of the 1-skeleton (0 for the empty complex).
    pub fn component_count(&self) -> usize {
        let adj = self.neighbors();
        let mut seen = vec![false; self.vertex_count];
        let mut count = 0;
        for s in 0..self.vertex_count {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        queue.push_back(w as usize);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// `s0 - s1 + s2`.
    pub fn euler_characteristic(&self) -> Result<i64, ComplexError> {
        self.require_simplicial()?;
        Ok(self.vertex_count as i64 - self.edges.len() as i64 + self.triangles.len() as i64)
    }

    /// Map from each edge to the triangles containing it.
    pub fn edge_triangles(&self) -> BTreeMap<Edge, Vec<Triangle>> {
        let mut map: BTreeMap<Edge, Vec<Triangle>> =
            self.edges.iter().map(|e| (*e, Vec::new())).collect();
        for t in &self.triangles {
            for e in t.edges() {
                map.entry(e).or_default().push(*t);
            }
        }
        map
    }

    /// Induced subcomplex on the given simplices, relabeled densely in
    /// ascending parent order.
    fn extract(
        &self,
        vertices: BTreeSet<VertexId>,
        edges: impl IntoIterator<Item = Edge>,
        triangles: impl IntoIterator<Item = Triangle>,
    ) -> Subcomplex {
        let parent_ids: Vec<VertexId> = vertices.into_iter().collect();
        let local: BTreeMap<VertexId, VertexId> = parent_ids
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as VertexId))
            .collect();
        let edges = edges
            .into_iter()
            .map(|e| Edge::new(local[&e.0[0]], local[&e.0[1]]));
        let triangles = triangles
            .into_iter()
            .map(|t| Triangle::new(local[&t.0[0]], local[&t.0[1]], local[&t.0[2]]));
        Subcomplex {
            complex: Complex2::new(parent_ids.len(), edges, triangles),
            parent_ids,
        }
    }

    /// Closed star of `v`: all simplices containing `v` together with their faces.
    pub fn star(&self, v: VertexId) -> Result<Subcomplex, ComplexError> {
        if !self.has_vertex(v) {
            return Err(ComplexError::NoSuchVertex(v));
        }
        let tris: Vec<Triangle> = self.triangles.iter().filter(|t| t.contains(v)).copied().collect();
        let mut edges: BTreeSet<Edge> = self.edges.iter().filter(|e| e.contains(v)).copied().collect();
        edges.extend(tris.iter().flat_map(|t| t.edges()));
        let mut verts = BTreeSet::from([v]);
        verts.extend(edges.iter().flat_map(|e| e.0));
        Ok(self.extract(verts, edges, tris))
    }

    /// Link of `v`: faces of star simplices that avoid `v`.
    pub fn link(&self, v: VertexId) -> Result<Subcomplex, ComplexError> {
        if !self.has_vertex(v) {
            return Err(ComplexError::NoSuchVertex(v));
        }
        let mut verts = BTreeSet::new();
        let mut edges = BTreeSet::new();
        for e in self.edges.iter().filter(|e| e.contains(v)) {
            verts.insert(e.other(v));
        }
        for t in self.triangles.iter().filter(|t| t.contains(v)) {
            let rest: Vec<VertexId> = t.0.iter().copied().filter(|&w| w != v).collect();
            verts.extend(rest.iter().copied());
            edges.insert(Edge::new(rest[0], rest[1]));
        }
        Ok(self.extract(verts, edges, []))
    }

    /// True when the complex is a 1-dimensional single cycle through every vertex.
    pub fn is_single_cycle(&self) -> bool {
        self.vertex_count >= 3
            && self.triangles.is_empty()
            && self.edges.len() == self.vertex_count
            && self.neighbors().iter().all(|n| n.len() == 2)
            && self.is_connected()
    }

    pub fn classify_surface(&self) -> SurfaceReport {
        let euler = self.vertex_count as i64 - self.edges.len() as i64 + self.triangles.len() as i64;
        let edge_tris = self.edge_triangles();
        let closed = self.vertex_count > 0
            && self.is_connected()
            && edge_tris.values().all(|ts| ts.len() == 2)
            && self
                .vertices()
                .all(|v| self.link(v).is_ok_and(|l| l.complex.is_single_cycle()));
        if !closed {
            return SurfaceReport {
                is_closed_surface: false,
                orientable: None,
                euler_characteristic: euler,
                genus: None,
            };
        }
        let orientable = self.orientation().is_some();
        let genus = if orientable { (2 - euler) / 2 } else { 2 - euler };
        SurfaceReport {
            is_closed_surface: true,
            orientable: Some(orientable),
            euler_characteristic: euler,
            genus: Some(genus as u32),
        }
    }

    /// A coherent orientation of the triangles, if one exists. Each triangle
    /// maps to `+1` (sorted corner order) or `-1` (reversed). Only meaningful
    /// for pseudo-manifolds; edges in more than two triangles make it `None`.
    pub fn orientation(&self) -> Option<BTreeMap<Triangle, i8>> {
        let edge_tris = self.edge_triangles();
        if edge_tris.values().any(|ts| ts.len() > 2) {
            return None;
        }
        let mut sign: BTreeMap<Triangle, i8> = BTreeMap::new();
        for &start in &self.triangles {
            if sign.contains_key(&start) {
                continue;
            }
            sign.insert(start, 1);
            let mut queue = VecDeque::from([start]);
            while let Some(t) = queue.pop_front() {
                let st = sign[&t];
                for e in t.edges() {
                    for &u in &edge_tris[&e] {
                        if u == t {
                            continue;
                        }
                        // Coherent neighbours induce opposite orientations on `e`.
                        let want = -st * edge_sign(t, e) * edge_sign(u, e);
                        match sign.get(&u) {
                            Some(&s) if s != want => return None,
                            Some(_) => {}
                            None => {
                                sign.insert(u, want);
                                queue.push_back(u);
                            }
                        }
                    }
                }
            }
        }
        Some(sign)
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[VertexId]) -> Complex2 {
        assert_eq!(perm.len(), self.vertex_count);
        Complex2::new(
            self.vertex_count,
            self.edges
                .iter()
                .map(|e| Edge::new(perm[e.0[0] as usize], perm[e.0[1] as usize])),
            self.triangles.iter().map(|t| {
                Triangle::new(
                    perm[t.0[0] as usize],
                    perm[t.0[1] as usize],
                    perm[t.0[2] as usize],
                )
            }),
        )
    }

    /// Disjoint union; vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Complex2) -> Complex2 {
        let off = self.vertex_count as VertexId;
        Complex2::new(
            self.vertex_count + other.vertex_count,
            self.edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|e| Edge([e.0[0] + off, e.0[1] + off]))),
            self.triangles.iter().copied().chain(
                other
                    .triangles
                    .iter()
                    .map(|t| Triangle([t.0[0] + off, t.0[1] + off, t.0[2] + off])),
            ),
        )
    }

    /// Removes the given triangles (their faces stay).
    pub fn without_triangles(&self, remove: &[Triangle]) -> Complex2 {
        let mut out = self.clone();
        for t in remove {
            out.triangles.remove(t);
        }
        out
    }

    /// Removes the given edges without touching triangles; the result may
    /// violate closure.
    pub fn without_edges(&self, remove: &[Edge]) -> Complex2 {
        let mut out = self.clone();
        for e in remove {
            out.edges.remove(e);
        }
        out
    }

    /// 2-skeleton of the nerve of the open-star cover `{St(v)}`.
    ///
    /// Open stars are represented by the set of simplices they contain; a
    /// family of vertices spans a nerve simplex iff their open stars share a
    /// simplex.
    pub fn star_cover_nerve(&self) -> Complex2 {
        let n = self.vertex_count;
        // Simplex ids: vertices, then edges, then triangles.
        let mut open_star: Vec<BTreeSet<usize>> = (0..n).map(|v| BTreeSet::from([v])).collect();
        for (i, e) in self.edges.iter().enumerate() {
            for v in e.0 {
                open_star[v as usize].insert(n + i);
            }
        }
        let base = n + self.edges.len();
        for (i, t) in self.triangles.iter().enumerate() {
            for v in t.0 {
                open_star[v as usize].insert(base + i);
            }
        }
        let meets = |vs: &[usize]| -> bool {
            let (first, rest) = vs.split_first().expect("non-empty");
            open_star[*first]
                .iter()
                .any(|s| rest.iter().all(|&w| open_star[w].contains(s)))
        };
        let mut edges = Vec::new();
        let mut triangles = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if !meets(&[a, b]) {
                    continue;
                }
                edges.push(Edge::new(a as VertexId, b as VertexId));
                for c in b + 1..n {
                    if meets(&[a, b, c]) {
                        triangles.push(Triangle::new(a as VertexId, b as VertexId, c as VertexId));
                    }
                }
            }
        }
        Complex2::new(n, edges, triangles)
    }

    pub fn to_json_value(&self) -> ComplexJson {
        ComplexJson {
            vertices: self.vertex_count,
            edges: self.edges.iter().map(|e| e.0).collect(),
            triangles: self.triangles.iter().map(|t| t.0).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    /// Loads the interchange format, re-deriving the closure and rejecting
    /// any triangle whose edges are not listed.
    pub fn from_json_value(value: &ComplexJson) -> Result<Complex2, ComplexError> {
        let n = value.vertices;
        let mut edges = BTreeSet::new();
        for &[a, b] in &value.edges {
            if a as usize >= n || b as usize >= n {
                return Err(ComplexError::Json(format!("edge [{a},{b}] out of range")));
            }
            let e = Edge::try_new(a, b).ok_or_else(|| ComplexError::Degenerate(vec![a, b]))?;
            if !edges.insert(e) {
                return Err(ComplexError::Json(format!("duplicate edge {e}")));
            }
        }
        let mut triangles = BTreeSet::new();
        for &[a, b, c] in &value.triangles {
            if [a, b, c].iter().any(|&v| v as usize >= n) {
                return Err(ComplexError::Json(format!("triangle [{a},{b},{c}] out of range")));
            }
            let t = Triangle::try_new(a, b, c)
                .ok_or_else(|| ComplexError::Degenerate(vec![a, b, c]))?;
            if !triangles.insert(t) {
                return Err(ComplexError::Json(format!("duplicate triangle {t}")));
            }
        }
        let k = Complex2::new(n, edges, triangles);
        k.require_simplicial()?;
        Ok(k)
    }

    pub fn from_json(text: &str) -> Result<Complex2, ComplexError> {
        let value: ComplexJson =
            serde_json::from_str(text).map_err(|e| ComplexError::Json(e.to_string()))?;
        Self::from_json_value(&value)
    }
}

impl Serialize for Complex2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json_value().serialize(s)
    }
}

/// `+1` if `e` is traversed low-to-high by the sorted cyclic order of `t`.
fn edge_sign(t: Triangle, e: Edge) -> i8 {
    let [a, b, c] = t.0;
    // Sorted cyclic order a -> b -> c -> a.
    match e.0 {
        [x, y] if (x, y) == (a, b) || (x, y) == (b, c) => 1,
        [x, y] if (x, y) == (a, c) => -1,
        _ => unreachable!("edge not in triangle"),
    }
}

/// JSON interchange form: `{"vertices": N, "edges": [[a,b],...], "triangles": [[a,b,c],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: usize,
    pub edges: Vec<[VertexId; 2]>,
    pub triangles: Vec<[VertexId; 3]>,
}
