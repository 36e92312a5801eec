//! Random complexes and gluing problems shared by the test targets.

use rand::rngs::StdRng;
use rand::Rng;

use kwcomplex::{Complex2, Edge, Embedding, Triangle, VertexId};

pub fn random_complex(rng: &mut StdRng, n: usize, p_tri: f64, p_edge: f64) -> Complex2 {
    let n = n as VertexId;
    let mut tris = Vec::new();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p_edge) {
                edges.push(Edge::new(a, b));
            }
            for c in b + 1..n {
                if rng.gen_bool(p_tri) {
                    let t = Triangle::new(a, b, c);
                    edges.extend(t.edges());
                    tris.push(t);
                }
            }
        }
    }
    Complex2::new(n as usize, edges, tris)
}

/// A random gluing problem `(i, j)` with `Z` a random subcomplex of `X`
/// placed randomly inside a random `Y`.
pub fn random_gluing(rng: &mut StdRng) -> (Embedding, Embedding) {
    let nx = rng.gen_range(4..=7);
    let x = random_complex(rng, nx, 0.25, 0.3);
    let s = rng.gen_range(2..=4.min(nx));
    let mut verts: Vec<VertexId> = (0..nx as VertexId).collect();
    for i in 0..s {
        let j = rng.gen_range(i..nx);
        verts.swap(i, j);
    }
    let mut into_x = verts[..s].to_vec();
    into_x.sort_unstable();
    let pos = |v: VertexId| into_x.iter().position(|&u| u == v).map(|p| p as VertexId);
    let z_edges: Vec<Edge> = x
        .edges()
        .iter()
        .filter_map(|e| {
            let [a, b] = e.vertices();
            Some(Edge::new(pos(a)?, pos(b)?))
        })
        .filter(|_| rng.gen_bool(0.8))
        .collect();
    let z_tris: Vec<Triangle> = x
        .triangles()
        .iter()
        .filter_map(|t| {
            let [a, b, c] = t.vertices();
            Some(Triangle::new(pos(a)?, pos(b)?, pos(c)?))
        })
        .filter(|t| t.edges().iter().all(|e| z_edges.contains(e)))
        .filter(|_| rng.gen_bool(0.7))
        .collect();
    let z = Complex2::new(s, z_edges.clone(), z_tris.clone());
    let ny = s + rng.gen_range(1..=3);
    let mut slots: Vec<VertexId> = (0..ny as VertexId).collect();
    for i in 0..s {
        let j = rng.gen_range(i..ny);
        slots.swap(i, j);
    }
    let into_y = slots[..s].to_vec();
    let extra = random_complex(rng, ny, 0.2, 0.3);
    let y = Complex2::new(
        ny,
        extra.edges().iter().copied().chain(z_edges.iter().map(|e| {
            let [a, b] = e.vertices();
            Edge::new(into_y[a as usize], into_y[b as usize])
        })),
        extra.triangles().iter().copied().chain(z_tris.iter().map(|t| {
            let [a, b, c] = t.vertices();
            Triangle::new(into_y[a as usize], into_y[b as usize], into_y[c as usize])
        })),
    );
    let i = Embedding::new(z.clone(), x, into_x).expect("Z is a subcomplex of X");
    let j = Embedding::new(z, y, into_y).expect("Z is placed inside Y");
    (i, j)
}

