//! Backtracking search for closed connected surfaces on `n` vertices.
//!
//! The search starts from the triangle `{0,1,2}` and repeatedly closes the
//! least edge lying in a single triangle. The third vertex is an already
//! used vertex or the least unused one, which removes relabelings of the
//! unused vertices. Every extension keeps each edge in at most two triangles
//! and each vertex link a disjoint union of paths or a single cycle; with a
//! prescribed orientation the new triangle must also induce the opposite
//! direction on every edge it shares.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::{canonical_form, CanonicalComplex};
use crate::complex::{Complex2, VertexId};

use super::{Parallelism, SearchError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceQuery {
    pub vertices: usize,
    pub orientable: Option<bool>,
    pub euler_characteristic: Option<i64>,
}

#[derive(Clone)]
struct State {
    n: usize,
    /// Triangles through each edge.
    deg: Vec<u8>,
    /// `dir[a*n+b]`: some triangle runs `a -> b`.
    dir: Vec<bool>,
    tri: Vec<bool>,
    tris: Vec<[u8; 3]>,
    open: usize,
    used: usize,
}

impl State {
    fn start(n: usize) -> State {
        let mut s = State {
            n,
            deg: vec![0; n * n],
            dir: vec![false; n * n],
            tri: vec![false; n * n * n],
            tris: Vec::new(),
            open: 0,
            used: 3,
        };
        s.add(0, 1, 2);
        s
    }

    fn e(&self, a: usize, b: usize) -> usize {
        a * self.n + b
    }

    fn t(&self, a: usize, b: usize, c: usize) -> usize {
        let mut v = [a, b, c];
        v.sort_unstable();
        (v[0] * self.n + v[1]) * self.n + v[2]
    }

    fn deg(&self, a: usize, b: usize) -> u8 {
        self.deg[self.e(a, b)]
    }

    /// Adds the oriented triangle `a -> b -> c`.
    fn add(&mut self, a: usize, b: usize, c: usize) {
        for (x, y) in [(a, b), (b, c), (c, a)] {
            let (i, j) = (self.e(x, y), self.e(y, x));
            self.deg[i] += 1;
            self.deg[j] += 1;
            if self.deg[i] == 1 {
                self.open += 1;
            } else {
                self.open -= 1;
            }
            self.dir[i] = true;
        }
        let t = self.t(a, b, c);
        self.tri[t] = true;
        self.tris.push([a as u8, b as u8, c as u8]);
    }

    fn remove_last(&mut self) {
        let [a, b, c] = self.tris.pop().expect("non-empty").map(usize::from);
        for (x, y) in [(a, b), (b, c), (c, a)] {
            let (i, j) = (self.e(x, y), self.e(y, x));
            self.deg[i] -= 1;
            self.deg[j] -= 1;
            if self.deg[i] == 1 {
                self.open += 1;
            } else {
                self.open -= 1;
            }
            self.dir[i] = false;
        }
        let t = self.t(a, b, c);
        self.tri[t] = false;
    }

    /// Least edge in exactly one triangle, with the direction that triangle
    /// gives it.
    fn least_open_edge(&self) -> Option<(usize, usize)> {
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.deg(a, b) == 1 {
                    return Some(if self.dir[self.e(a, b)] { (a, b) } else { (b, a) });
                }
            }
        }
        None
    }

    /// The link of `v` is a disjoint union of paths, or one cycle.
    fn link_ok(&self, v: usize) -> bool {
        let n = self.n;
        let members: Vec<usize> = (0..n).filter(|&u| u != v && self.deg(v, u) > 0).collect();
        let mut seen = vec![false; n];
        let mut components = 0;
        let mut has_cycle = false;
        for &s in &members {
            if seen[s] {
                continue;
            }
            components += 1;
            let mut stack = vec![s];
            seen[s] = true;
            let mut all_closed = true;
            while let Some(u) = stack.pop() {
                if self.deg(v, u) != 2 {
                    all_closed = false;
                }
                for &w in &members {
                    if !seen[w] && self.tri[self.t(v, u, w)] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            has_cycle |= all_closed;
        }
        !has_cycle || components == 1
    }

    /// Adds `b -> a -> w` across the open edge `a -> b` if the constraints allow it.
    fn try_close(&mut self, a: usize, b: usize, w: usize, oriented: bool) -> bool {
        if self.tri[self.t(a, b, w)] || self.deg(a, w) >= 2 || self.deg(b, w) >= 2 {
            return false;
        }
        if oriented && (self.dir[self.e(a, w)] || self.dir[self.e(w, b)]) {
            return false;
        }
        let fresh = w == self.used;
        self.add(b, a, w);
        if fresh {
            self.used += 1;
        }
        if [a, b, w].iter().all(|&v| self.link_ok(v)) {
            true
        } else {
            self.remove_last();
            if fresh {
                self.used -= 1;
            }
            false
        }
    }

    fn undo_close(&mut self, w: usize) {
        self.remove_last();
        if w + 1 == self.used && !(0..self.n).any(|u| u != w && self.deg(w, u) > 0) {
            self.used -= 1;
        }
    }

    fn complex(&self) -> Complex2 {
        let tris: Vec<[VertexId; 3]> = self.tris.iter().map(|t| t.map(VertexId::from)).collect();
        Complex2::from_triangles(self.n, &tris)
    }
}

struct Ctx {
    target_triangles: Option<usize>,
    max_triangles: usize,
    oriented: bool,
    orientable: Option<bool>,
}

impl Ctx {
    fn hopeless(&self, s: &State) -> bool {
        let cap = self.target_triangles.unwrap_or(self.max_triangles);
        if s.tris.len() > cap {
            return true;
        }
        let remaining = cap - s.tris.len();
        s.open > 3 * remaining || s.n - s.used > remaining
    }

    fn accept(&self, s: &State) -> Option<CanonicalComplex> {
        if s.used < s.n || self.target_triangles.is_some_and(|t| t != s.tris.len()) {
            return None;
        }
        let k = s.complex();
        if self.orientable == Some(false) && k.classify_surface().orientable != Some(false) {
            return None;
        }
        Some(canonical_form(&k))
    }

    fn candidates(&self, s: &State) -> Vec<usize> {
        let limit = if s.used < s.n { s.used + 1 } else { s.n };
        (0..limit).collect()
    }

    fn dfs(&self, s: &mut State, found: &mut Vec<CanonicalComplex>) -> u64 {
        let mut nodes = 1;
        let Some((a, b)) = s.least_open_edge() else {
            found.extend(self.accept(s));
            return nodes;
        };
        if self.hopeless(s) {
            return nodes;
        }
        for w in self.candidates(s) {
            if w == a || w == b || !s.try_close(a, b, w, self.oriented) {
                continue;
            }
            nodes += self.dfs(s, found);
            s.undo_close(w);
        }
        nodes
    }

    /// States reached after `depth` closing steps, in search order.
    fn frontier(&self, s: State, depth: usize, found: &mut Vec<CanonicalComplex>, nodes: &mut u64) -> Vec<State> {
        let mut level = vec![s];
        for _ in 0..depth {
            let mut next = Vec::new();
            for mut st in level {
                *nodes += 1;
                let Some((a, b)) = st.least_open_edge() else {
                    found.extend(self.accept(&st));
                    continue;
                };
                if self.hopeless(&st) {
                    continue;
                }
                for w in self.candidates(&st) {
                    if w != a && w != b && st.try_close(a, b, w, self.oriented) {
                        next.push(st.clone());
                        st.undo_close(w);
                    }
                }
            }
            level = next;
        }
        level
    }
}

/// Canonical forms of the closed connected surfaces on exactly `q.vertices`
/// vertices meeting the query, with the number of search nodes visited.
pub fn closed_surfaces(q: &SurfaceQuery, par: Parallelism) -> Result<(Vec<CanonicalComplex>, u64), SearchError> {
    let n = q.vertices;
    if !(4..=64).contains(&n) {
        return Ok((Vec::new(), 0));
    }
    let target_triangles = match q.euler_characteristic {
        Some(chi) => {
            let f2 = 2 * (n as i64 - chi);
            if f2 < 4 || 3 * f2 / 2 > (n * (n - 1) / 2) as i64 || (q.orientable == Some(true) && chi % 2 != 0) {
                return Ok((Vec::new(), 0));
            }
            Some(f2 as usize)
        }
        None => None,
    };
    let ctx = Ctx {
        target_triangles,
        max_triangles: n * (n - 1) / 3,
        oriented: q.orientable == Some(true),
        orientable: q.orientable,
    };
    par.run(|| {
        let mut found = Vec::new();
        let mut nodes = 0;
        let frontier = ctx.frontier(State::start(n), 3, &mut found, &mut nodes);
        let run = |mut s: State| {
            let mut f = Vec::new();
            let count = ctx.dfs(&mut s, &mut f);
            (f, count)
        };
        let parts: Vec<(Vec<CanonicalComplex>, u64)> = if par.is_parallel() {
            frontier.into_par_iter().map(run).collect()
        } else {
            frontier.into_iter().map(run).collect()
        };
        for (f, count) in parts {
            found.extend(f);
            nodes += count;
        }
        let set: BTreeSet<CanonicalComplex> = found.into_iter().collect();
        (set.into_iter().collect(), nodes)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::is_isomorphic;
    use crate::constructions::{minimal_rp2, minimal_torus};

    fn query(n: usize, orientable: Option<bool>, chi: Option<i64>) -> Vec<Complex2> {
        let q = SurfaceQuery {
            vertices: n,
            orientable,
            euler_characteristic: chi,
        };
        closed_surfaces(&q, Parallelism::Serial)
            .unwrap()
            .0
            .iter()
            .map(|c| c.to_complex())
            .collect()
    }

    #[test]
    fn tetrahedron_boundary_is_the_only_four_vertex_surface() {
        let s = query(4, None, None);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].f_vector(), (4, 6, 4));
    }

    #[test]
    fn spheres_on_few_vertices() {
        // Triangulated 2-spheres: 1 on 5 vertices, 2 on 6, 5 on 7.
        assert_eq!(query(5, Some(true), Some(2)).len(), 1);
        assert_eq!(query(6, Some(true), Some(2)).len(), 2);
        assert_eq!(query(7, Some(true), Some(2)).len(), 5);
    }

    #[test]
    fn projective_plane_on_six_vertices() {
        let s = query(6, Some(false), Some(1));
        assert_eq!(s.len(), 1);
        assert!(is_isomorphic(&s[0], &minimal_rp2()));
        assert!(query(5, Some(false), Some(1)).is_empty());
    }

    #[test]
    fn torus_on_seven_vertices() {
        let s = query(7, Some(true), Some(0));
        assert_eq!(s.len(), 1);
        assert!(is_isomorphic(&s[0], &minimal_torus()));
        assert!(query(6, Some(true), Some(0)).is_empty());
    }
}
