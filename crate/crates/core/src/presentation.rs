//! Edge-path presentations of fundamental groups and their simplification.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::complex::{Complex2, Edge, VertexId};
use crate::homology::AbelianGroup;
use crate::snf::smith_normal_form;
use crate::word::{Letter, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("complex is disconnected")]
    Disconnected,
    #[error("base vertex {0} is not in the complex")]
    NoSuchVertex(VertexId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generator_count: usize,
    pub relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generator_count: usize, relators: Vec<Word>) -> Self {
        debug_assert!(relators
            .iter()
            .all(|r| r.check_generators(generator_count).is_ok()));
        Presentation {
            generator_count,
            relators,
        }
    }

    /// Presentation whose relators are `w_i v_i^-1` for each relation `w_i = v_i`.
    pub fn from_relations(generator_count: usize, relations: &[(Word, Word)]) -> Self {
        Self::new(
            generator_count,
            relations.iter().map(|(w, v)| w.concat(&v.inverse())).collect(),
        )
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (1..=self.generator_count).map(|i| format!("a{i}")).collect();
        let rels: Vec<String> = self.relators.iter().map(Word::to_string).collect();
        write!(f, "< {} | {} >", gens.join(", "), rels.join(", "))
    }
}

#[derive(Serialize)]
struct PresentationJson {
    generator_count: usize,
    relators: Vec<String>,
}

impl Serialize for Presentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PresentationJson {
            generator_count: self.generator_count,
            relators: self.relators.iter().map(Word::to_string).collect(),
        }
        .serialize(s)
    }
}

/// Edge-path presentation relative to a breadth-first spanning tree rooted
/// at `base` (neighbours visited in ascending order). Generators are the
/// non-tree edges in ascending order, oriented from lower to higher id; each
/// triangle `[a,b,c]` contributes the relator read along `a -> b -> c -> a`.
pub fn edge_path_presentation(
    k: &Complex2,
    base: VertexId,
) -> Result<Presentation, PresentationError> {
    if !k.has_vertex(base) {
        return Err(PresentationError::NoSuchVertex(base));
    }
    let adj = k.neighbors();
    let mut seen = vec![false; k.vertex_count()];
    let mut tree = BTreeSet::new();
    seen[base as usize] = true;
    let mut queue = VecDeque::from([base]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v as usize] {
            if !seen[w as usize] {
                seen[w as usize] = true;
                tree.insert(Edge::new(v, w));
                queue.push_back(w);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(PresentationError::Disconnected);
    }
    let generators: BTreeMap<Edge, usize> = k
        .edges()
        .iter()
        .filter(|e| !tree.contains(e))
        .enumerate()
        .map(|(i, e)| (*e, i))
        .collect();
    let step = |a: VertexId, b: VertexId| -> Option<Letter> {
        generators
            .get(&Edge::new(a, b))
            .map(|&g| Letter::new(g, if a < b { 1 } else { -1 }))
    };
    let relators = k
        .triangles()
        .iter()
        .map(|t| {
            let [a, b, c] = t.vertices();
            Word::new([step(a, b), step(b, c), step(c, a)].into_iter().flatten().collect())
        })
        .collect();
    Ok(Presentation::new(generators.len(), relators))
}

pub fn abelianization(p: &Presentation) -> AbelianGroup {
    let rows: Vec<Vec<i64>> = p
        .relators
        .iter()
        .map(|r| r.exponent_sums(p.generator_count))
        .collect();
    let s = smith_normal_form(&rows, p.generator_count, false);
    AbelianGroup {
        free_rank: p.generator_count - s.rank(),
        invariant_factors: s.torsion(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TietzeOutcome {
    pub presentation: Presentation,
    pub moves: usize,
}

/// Greedy Tietze simplification: reduce relators cyclically, drop trivial
/// and repeated relators, and eliminate a generator that occurs exactly once
/// in the shortest relator containing such a generator. Stops after
/// `move_budget` moves or when no move applies.
pub fn tietze_simplify(p: &Presentation, move_budget: usize) -> TietzeOutcome {
    let mut gens = p.generator_count;
    let mut rels: Vec<Word> = p.relators.clone();
    let mut moves = 0;
    while moves < move_budget {
        // Free and cyclic cancellation.
        if let Some(i) = rels.iter().position(|r| r.cyclic_reduce() != *r) {
            rels[i] = rels[i].cyclic_reduce();
            moves += 1;
            continue;
        }
        if let Some(i) = rels.iter().position(Word::is_empty) {
            rels.remove(i);
            moves += 1;
            continue;
        }
        let mut seen = BTreeSet::new();
        if let Some(i) = rels
            .iter()
            .position(|r| !seen.insert(r.cyclic_normal_form()))
        {
            rels.remove(i);
            moves += 1;
            continue;
        }
        let candidate = rels
            .iter()
            .enumerate()
            .flat_map(|(i, r)| {
                (0..gens)
                    .filter(|&g| r.occurrences(g) == 1)
                    .map(move |g| (r.len(), i, g))
            })
            .min();
        let Some((_, i, g)) = candidate else { break };
        let r = rels.remove(i);
        let pos = r.letters().iter().position(|l| l.generator == g).expect("occurs");
        let rotated = r.rotate(pos);
        // rotated = g^e x, so g = x^-1 when e = +1 and g = x when e = -1.
        let x = Word::new(rotated.letters()[1..].to_vec());
        let value = if rotated.letters()[0].inverse { x } else { x.inverse() };
        rels = rels
            .iter()
            .map(|w| substitute(w, g, &value))
            .collect();
        gens -= 1;
        moves += 1;
    }
    TietzeOutcome {
        presentation: Presentation::new(gens, rels),
        moves,
    }
}

/// Replaces generator `g` by `value` and renumbers generators above `g` down by one.
fn substitute(w: &Word, g: usize, value: &Word) -> Word {
    let shift = |l: Letter| Letter {
        generator: if l.generator > g { l.generator - 1 } else { l.generator },
        inverse: l.inverse,
    };
    let value: Vec<Letter> = value.letters().iter().map(|&l| shift(l)).collect();
    let value_inv: Vec<Letter> = value.iter().rev().map(|l| l.inv()).collect();
    let mut out = Vec::new();
    for &l in w.letters() {
        if l.generator == g {
            out.extend_from_slice(if l.inverse { &value_inv } else { &value });
        } else {
            out.push(shift(l));
        }
    }
    Word::new(out).free_reduce()
}
