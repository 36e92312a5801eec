//! Triangulated disks attached along closed edge paths.
//!
//! The boundary `b_0 .. b_{L-1}` of the disk is cut into consecutive arcs.
//! Each arc gets one new interior vertex joined to every boundary vertex of
//! the arc; consecutive interior vertices are joined across the shared arc
//! endpoint, and the interior polygon they span is triangulated. A boundary
//! vertex may occur several times along the path, but never twice inside one
//! closed arc, so no two simplices of the disk land on the same simplex.

use std::collections::BTreeSet;

use crate::complex::{Complex2, Triangle, VertexId};
use crate::word::Word;

use super::{bouquet, checked, ConstructionError, MarkedComplex};

/// How the boundary of a disk is cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArcPlan {
    /// A single triangle on a 3-edge boundary; no interior vertex.
    SingleTriangle,
    /// Start positions of the arcs, strictly increasing.
    Ring(Vec<usize>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DiskStyle {
    /// Arcs of two boundary edges each (the last may have one).
    #[default]
    TwoEdgeArcs,
    /// As few arcs as possible.
    Lean,
}

impl ArcPlan {
    pub fn two_edge(len: usize) -> ArcPlan {
        ArcPlan::Ring((0..len).step_by(2).collect())
    }

    pub fn interior_vertices(&self) -> usize {
        match self {
            ArcPlan::SingleTriangle => 0,
            ArcPlan::Ring(s) => s.len(),
        }
    }

    /// Fewest arcs for the given boundary images.
    pub fn minimal(images: &[VertexId]) -> Option<ArcPlan> {
        let len = images.len();
        if len < 3 {
            return None;
        }
        let distinct: BTreeSet<_> = images.iter().collect();
        if distinct.len() == len {
            return Some(ArcPlan::Ring(vec![0]));
        }
        let mut best: Option<Vec<usize>> = None;
        for start in 0..len {
            let Some(starts) = greedy_from(images, start) else { continue };
            let plan = ArcPlan::Ring(sorted(starts.clone()));
            if !plan.is_valid(images) {
                continue;
            }
            if best.as_ref().is_none_or(|b| starts.len() < b.len()) {
                best = Some(starts);
            }
        }
        if let Some(b) = best {
            return Some(ArcPlan::Ring(sorted(b)));
        }
        // Every greedy plan had two arcs with equal junction images; split one.
        let starts = greedy_from(images, 0)?;
        let (a, b) = (starts[0], starts[1]);
        if b - a < 2 {
            return None;
        }
        let plan = ArcPlan::Ring(sorted(vec![a, a + 1, b]));
        plan.is_valid(images).then_some(plan)
    }

    /// Whether attaching along `images` with this plan is simplicial.
    pub fn is_valid(&self, images: &[VertexId]) -> bool {
        let len = images.len();
        match self {
            ArcPlan::SingleTriangle => {
                len == 3 && images[0] != images[1] && images[1] != images[2] && images[0] != images[2]
            }
            ArcPlan::Ring(starts) => {
                if starts.is_empty() || starts.windows(2).any(|w| w[0] >= w[1]) || starts[starts.len() - 1] >= len {
                    return false;
                }
                if starts.len() == 1 {
                    let d: BTreeSet<_> = images.iter().collect();
                    return d.len() == len && len >= 3;
                }
                for (j, &s) in starts.iter().enumerate() {
                    let e = if j + 1 < starts.len() { starts[j + 1] } else { starts[0] + len };
                    let arc: Vec<VertexId> = (s..=e).map(|p| images[p % len]).collect();
                    let d: BTreeSet<_> = arc.iter().collect();
                    if d.len() != arc.len() {
                        return false;
                    }
                }
                if starts.len() == 2 {
                    return images[starts[0]] != images[starts[1]];
                }
                true
            }
        }
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// Greedy maximal arcs starting at `start`, as positions modulo `len`.
fn greedy_from(images: &[VertexId], start: usize) -> Option<Vec<usize>> {
    let len = images.len();
    let mut starts = Vec::new();
    let mut pos = start;
    while pos < start + len {
        starts.push(pos % len);
        let mut seen = BTreeSet::from([images[pos % len]]);
        let mut end = pos;
        while end < start + len {
            let next = images[(end + 1) % len];
            if !seen.insert(next) {
                break;
            }
            end += 1;
        }
        if end == pos {
            return None;
        }
        pos = end;
    }
    Some(starts)
}

/// A disk attached to a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttachedDisk {
    pub complex: Complex2,
    /// New interior vertices in ring order.
    pub ring: Vec<VertexId>,
    /// Disk triangles with corners listed counterclockwise with respect to
    /// the boundary direction.
    pub oriented: Vec<[VertexId; 3]>,
}

/// Attaches a disk to `k` with boundary following the closed path `boundary`.
pub fn attach_disk(
    k: &Complex2,
    boundary: &[VertexId],
    plan: &ArcPlan,
) -> Result<AttachedDisk, ConstructionError> {
    let len = boundary.len();
    let no_disk = || ConstructionError::NoDisk(boundary.to_vec());
    if !plan.is_valid(boundary) {
        return Err(no_disk());
    }
    for p in 0..len {
        if !k.has_edge(boundary[p], boundary[(p + 1) % len]) {
            return Err(no_disk());
        }
    }
    let mut oriented = Vec::new();
    let mut ring = Vec::new();
    let mut n = k.vertex_count() as VertexId;
    match plan {
        ArcPlan::SingleTriangle => {
            if k.has_triangle(boundary[0], boundary[1], boundary[2]) {
                return Err(no_disk());
            }
            oriented.push([boundary[0], boundary[1], boundary[2]]);
        }
        ArcPlan::Ring(starts) => {
            let r = starts.len();
            ring = (0..r as VertexId).map(|j| n + j).collect();
            n += r as VertexId;
            let b = |p: usize| boundary[p % len];
            for (j, &s) in starts.iter().enumerate() {
                let e = if j + 1 < r { starts[j + 1] } else { starts[0] + len };
                for p in s..e {
                    oriented.push([b(p), b(p + 1), ring[j]]);
                }
                if r > 1 {
                    oriented.push([b(e), ring[(j + 1) % r], ring[j]]);
                }
            }
            if r == 2 {
                // The two junction triangles share the single interior edge.
                debug_assert_eq!(oriented.iter().filter(|t| t.contains(&ring[0]) && t.contains(&ring[1])).count(), 2);
            }
            for j in 1..r.saturating_sub(1) {
                oriented.push([ring[0], ring[j], ring[j + 1]]);
            }
        }
    }
    let triangles = oriented.iter().map(|&[a, b, c]| Triangle::new(a, b, c));
    let complex = Complex2::from_simplices(
        n as usize,
        k.edges().iter().copied(),
        k.triangles().iter().copied().chain(triangles),
    );
    if complex.triangle_count() != k.triangle_count() + oriented.len() {
        return Err(no_disk());
    }
    Ok(AttachedDisk {
        complex: checked(complex),
        ring,
        oriented,
    })
}

/// Closed path spelling `w` over the circles of [`bouquet`]: a positive
/// letter `a_i` runs `0 -> 2i+1 -> 2i+2`, a negative one runs backwards.
pub fn word_path(w: &Word) -> Vec<VertexId> {
    w.letters()
        .iter()
        .flat_map(|l| {
            let (x, y) = (2 * l.generator as VertexId + 1, 2 * l.generator as VertexId + 2);
            if l.inverse {
                [0, y, x]
            } else {
                [0, x, y]
            }
        })
        .collect()
}

/// The bouquet with a disk spelling `w` attached, and the marked triangle at
/// the base vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordDisk {
    /// Marked paths: `w` (the disk boundary) and `delta_p` (the boundary of
    /// the marked triangle, read from the base vertex so that it represents `w`).
    pub marked: MarkedComplex,
    pub delta_p: Triangle,
    pub interior_vertices: usize,
    /// Triangles of the disk, oriented along the boundary.
    pub oriented: Vec<[VertexId; 3]>,
}

/// Word disk over `n` generators. `w` must be cyclically reduced with
/// length at least 2.
pub fn word_disk(n: usize, w: &Word, style: DiskStyle) -> Result<WordDisk, ConstructionError> {
    w.check_generators(n)?;
    if w.len() < 2 {
        return Err(crate::word::WordError::TooShort(w.to_string()).into());
    }
    if !w.is_cyclically_reduced() {
        return Err(crate::word::WordError::NotCyclicallyReduced(w.to_string()).into());
    }
    let base = bouquet(n)?;
    let path = word_path(w);
    let plan = match style {
        DiskStyle::TwoEdgeArcs => ArcPlan::two_edge(path.len()),
        DiskStyle::Lean => ArcPlan::minimal(&path).ok_or_else(|| ConstructionError::NoDisk(path.clone()))?,
    };
    let disk = attach_disk(&base.complex, &path, &plan)?;
    let last = path.len() - 1;
    let [_, _, u] = *disk
        .oriented
        .iter()
        .find(|t| t[0] == path[last] && t[1] == path[0] && disk.ring.contains(&t[2]))
        .expect("outer triangle on the closing edge");
    let delta_p = Triangle::new(path[last], path[0], u);
    let mut marked = MarkedComplex::new(disk.complex, 0);
    marked.marked_paths = base.marked_paths;
    marked = marked
        .with_path("w", path.clone())
        .with_path("delta_p", vec![0, u, path[last]]);
    Ok(WordDisk {
        marked,
        delta_p,
        interior_vertices: disk.ring.len(),
        oriented: disk.oriented,
    })
}
