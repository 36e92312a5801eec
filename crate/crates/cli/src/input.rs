//! Reading complexes, matrices, relator files and embeddings.

use std::fs;
use std::io::Read;

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;
use serde_json::Value;

use kwcomplex::complex::ComplexJson;
use kwcomplex::constructions::{CoxeterMatrix, CoxeterMatrixJson, Relation};
use kwcomplex::word::Word;
use kwcomplex::{Complex2, VertexId};

/// Contents of `path`, or of standard input for `-`.
pub fn read_text(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn read_json(path: &str) -> Result<Value> {
    let text = read_text(path)?;
    serde_json::from_str(&text).with_context(|| format!("parsing JSON from {path}"))
}

/// A bare complex, or the `complex` field of a command result (so that the
/// output of one command can be piped into another).
pub fn complex_from_value(v: &Value) -> Result<Complex2> {
    let inner = if v.get("vertices").is_some() {
        v
    } else if let Some(c) = v.pointer("/payload/complex").or_else(|| v.get("complex")) {
        c
    } else {
        bail!("no complex found: expected {{\"vertices\", \"edges\", \"triangles\"}} or a result with payload.complex");
    };
    let json: ComplexJson = serde_json::from_value(inner.clone()).context("complex JSON")?;
    Ok(Complex2::from_json_value(&json)?)
}

pub fn load_complex(path: &str) -> Result<Complex2> {
    complex_from_value(&read_json(path)?)
}

pub fn load_matrix(path: &str) -> Result<CoxeterMatrix> {
    let json: CoxeterMatrixJson = serde_json::from_value(read_json(path)?).context("matrix JSON {\"n\", \"m\"}")?;
    Ok(CoxeterMatrix::from_json(&json)?)
}

#[derive(Deserialize)]
struct RelationJson {
    w: String,
    v: String,
    m: u64,
}

#[derive(Deserialize)]
struct RelatorFile {
    generators: usize,
    relations: Vec<RelationJson>,
}

/// `{"generators": n, "relations": [{"w": "a1 a2", "v": "a2 a1", "m": 2}, ...]}`,
/// one relation `w^m = v^m` per entry.
pub fn load_relations(path: &str) -> Result<(usize, Vec<Relation>)> {
    let file: RelatorFile = serde_json::from_value(read_json(path)?).context("relator file JSON")?;
    if file.relations.is_empty() {
        bail!("relator file lists no relations");
    }
    let relations = file
        .relations
        .iter()
        .map(|r| {
            let w: Word = r.w.parse().map_err(|e| anyhow!("word {:?}: {e}", r.w))?;
            let v: Word = r.v.parse().map_err(|e| anyhow!("word {:?}: {e}", r.v))?;
            Ok(Relation::new(w, v, r.m))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((file.generators, relations))
}

/// Gluing data `{"z_vertices": N, "into_x": [...], "into_y": [...]}`, with an
/// optional explicit `"z"` complex.
#[derive(Deserialize)]
pub struct EmbeddingFile {
    pub z_vertices: usize,
    pub into_x: Vec<VertexId>,
    pub into_y: Vec<VertexId>,
    #[serde(default)]
    pub z: Option<ComplexJson>,
}

pub fn load_embedding(path: &str) -> Result<EmbeddingFile> {
    let e: EmbeddingFile = serde_json::from_value(read_json(path)?).context("embedding JSON")?;
    if e.into_x.len() != e.z_vertices || e.into_y.len() != e.z_vertices {
        bail!(
            "embedding lists {} and {} images for {} vertices of Z",
            e.into_x.len(),
            e.into_y.len(),
            e.z_vertices
        );
    }
    Ok(e)
}

/// The explicit `z`, or else every simplex on `0..z_vertices` whose images
/// are simplices of both `x` and `y`.
pub fn resolve_z(e: &EmbeddingFile, x: &Complex2, y: &Complex2) -> Result<Complex2> {
    if let Some(z) = &e.z {
        let z = Complex2::from_json_value(z)?;
        if z.vertex_count() != e.z_vertices {
            bail!("z has {} vertices, z_vertices says {}", z.vertex_count(), e.z_vertices);
        }
        return Ok(z);
    }
    let (fx, fy) = (&e.into_x, &e.into_y);
    let n = e.z_vertices as VertexId;
    let mut edges = Vec::new();
    let mut triangles = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let (ia, ib) = (a as usize, b as usize);
            if x.has_edge(fx[ia], fx[ib]) && y.has_edge(fy[ia], fy[ib]) {
                edges.push(kwcomplex::Edge::new(a, b));
            }
            for c in b + 1..n {
                let ic = c as usize;
                if x.has_triangle(fx[ia], fx[ib], fx[ic]) && y.has_triangle(fy[ia], fy[ib], fy[ic]) {
                    triangles.push(kwcomplex::Triangle::new(a, b, c));
                }
            }
        }
    }
    Ok(Complex2::new(e.z_vertices, edges, triangles))
}
