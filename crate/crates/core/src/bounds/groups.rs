//! Right-angled, large-type and one-relator families, and evaluation of a
//! symbolic group description.

use serde::Serialize;

use crate::constructions::{CoxeterMatrix, Relation};
use crate::presentation::{abelianization, Presentation};
use crate::word::Word;

use super::classes::{
    cyclic_bounds, finite_abelian_bounds, free_abelian_bounds, kw_free, kw_free_bounds, surface_bounds, z2_sum_bounds,
};
use super::{BoundReport, BoundsError, Estimate};

/// Which constraint the lower bound of a right-angled family comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerBranch {
    /// At most `(k-1)(k-2)/2` independent generators.
    Generators,
    /// At most `(k-1)(k-2)(k-3)/6` relations.
    Relations,
}

/// `m <= (n/6)(sqrt(8n+1) - 3)`, decided in integers as
/// `(6m + 3n)^2 <= n^2 (8n + 1)`.
fn below_curve(n: u64, m: u64) -> bool {
    let (n, m) = (n as u128, m as u128);
    (6 * m + 3 * n).pow(2) <= n * n * (8 * n + 1)
}

/// Real root `t >= 3` of `(t-1)(t-2)(t-3) = 6r`, with the least integer at
/// or above it.
fn relation_root(r: u64) -> (f64, u64) {
    // With s = t - 2 the equation is s^3 - s = 6r; Newton from the right
    // decreases monotonically to the root.
    let target = 6.0 * r as f64;
    let mut s = target.cbrt() + 1.0;
    for _ in 0..200 {
        let next = s - (s * s * s - s - target) / (3.0 * s * s - 1.0);
        if next >= s {
            break;
        }
        s = next;
    }
    let t = s + 2.0;
    let fits = |k: u64| {
        let k = k as u128;
        k >= 3 && (k - 1) * (k - 2) * (k - 3) >= 6 * r as u128
    };
    let mut k = (t.floor() as u64).max(3).saturating_sub(1).max(3);
    while !fits(k) {
        k += 1;
    }
    (t, k)
}

fn check_relations(n: u64, m: u64) -> Result<(), BoundsError> {
    if n < 1 {
        return Err(BoundsError::OutOfRange("n must be >= 1".into()));
    }
    if m > n * (n - 1) / 2 {
        return Err(BoundsError::OutOfRange(format!("m = {m} exceeds n(n-1)/2 for n = {n}")));
    }
    Ok(())
}

fn generators_lower(n: u64) -> Result<Estimate, BoundsError> {
    let value = (((8 * n + 1) as f64).sqrt() + 3.0) / 2.0;
    Ok(Estimate::lower(value).with_integer(kw_free(n)? as i64))
}

fn branch_lower(n: u64, m: u64, relations: u64) -> Result<(Estimate, LowerBranch), BoundsError> {
    if below_curve(n, m) {
        Ok((generators_lower(n)?, LowerBranch::Generators))
    } else {
        let (t, k) = relation_root(relations);
        Ok((Estimate::lower(t).with_integer(k as i64), LowerBranch::Relations))
    }
}

/// Lower bound for a right-angled Artin group with `n` generators and `m`
/// commutations. Above the curve the value is the real root of
/// `(t-1)(t-2)(t-3) = 6m`.
pub fn k_a(n: u64, m: u64) -> Result<(Estimate, LowerBranch), BoundsError> {
    check_relations(n, m)?;
    branch_lower(n, m, m)
}

/// As [`k_a`], counting the `n` relations `a_i^2` as well above the curve.
pub fn k_c(n: u64, m: u64) -> Result<(Estimate, LowerBranch), BoundsError> {
    check_relations(n, m)?;
    branch_lower(n, m, m + n)
}

fn branch_name(b: LowerBranch) -> &'static str {
    match b {
        LowerBranch::Generators => "generators: (sqrt(8n+1) + 3) / 2",
        LowerBranch::Relations => "relations: root of (t-1)(t-2)(t-3) = 6r",
    }
}

pub fn raag_bounds(n: u64, m: u64) -> Result<BoundReport, BoundsError> {
    let (lower, branch) = k_a(n, m)?;
    let mf = m as f64;
    Ok(BoundReport::new(
        lower,
        branch_name(branch),
        Estimate::exact((2 * (n + m) + 1) as i64),
        "right-angled Artin: 2(n + m) + 1",
    )
    .with_extra("cbrt_6m_plus_2", Estimate::lower((6.0 * mf + 2.0).cbrt()), "relations branch written as (6m + 2)^(1/3)")
    .with_extra("cbrt_6m_then_plus_2", Estimate::lower((6.0 * mf).cbrt() + 2.0), "relations branch written as (6m)^(1/3) + 2"))
}

pub fn racg_bounds(n: u64, m: u64) -> Result<BoundReport, BoundsError> {
    let (lower, branch) = k_c(n, m)?;
    let r = (m + n) as f64;
    Ok(BoundReport::new(
        lower,
        branch_name(branch),
        Estimate::exact((5 * n + 2 * m + 1) as i64),
        "right-angled Coxeter: 5n + 2m + 1",
    )
    .with_extra("cbrt_6r_then_plus_2", Estimate::lower((6.0 * r).cbrt() + 2.0), "relations branch written as (6(m + n))^(1/3) + 2")
    .with_extra("universal_non_free", Estimate::exact(6), "every non-free group"))
}

/// Least `k` with `b1 <= (k-1)(k-2)/2`; the first Betti number of a
/// 2-complex on `k` vertices is at most that.
pub fn betti_floor(b1: u64) -> u64 {
    if b1 == 0 {
        1
    } else {
        kw_free(b1).expect("b1 >= 1")
    }
}

fn require_large(m: &CoxeterMatrix) -> Result<(), BoundsError> {
    if m.n() == 0 {
        return Err(BoundsError::Matrix("no generators".into()));
    }
    match m.finite_pairs().find(|&(_, _, x)| x < 3) {
        Some((i, j, x)) => Err(BoundsError::Matrix(format!(
            "m_{{{},{}}} = {x}; large type needs finite entries >= 3",
            i + 1,
            j + 1
        ))),
        None => Ok(()),
    }
}

/// `(8 (sum_even log2 m + sum_odd log2(m - 1)) + 2n - r + 1, 8 log2(mu) + 2n - r + 1)`,
/// accumulated in logarithms.
fn large_upper_parts(m: &CoxeterMatrix) -> (f64, f64) {
    let (mut refined, mut mu) = (0.0, 0.0);
    for (_, _, x) in m.finite_pairs() {
        let xf = x as f64;
        refined += if x % 2 == 0 { xf.log2() } else { (xf - 1.0).log2() };
        mu += xf.log2();
    }
    let tail = 2.0 * m.n() as f64 - m.finite_count() as f64 + 1.0;
    (8.0 * refined + tail, 8.0 * mu + tail)
}

pub fn artin_large_upper(m: &CoxeterMatrix) -> Result<f64, BoundsError> {
    require_large(m)?;
    Ok(large_upper_parts(m).0)
}

pub fn coxeter_large_upper(m: &CoxeterMatrix) -> Result<f64, BoundsError> {
    Ok(artin_large_upper(m)? + 3.0 * m.n() as f64)
}

/// Components of the graph on the generators joined by odd entries; each
/// component is one conjugacy class of generators.
fn odd_components(m: &CoxeterMatrix) -> u64 {
    let mut parent: Vec<usize> = (0..m.n()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (i, j, x) in m.finite_pairs() {
        if x % 2 == 1 {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            parent[a] = b;
        }
    }
    (0..m.n()).filter(|&i| find(&mut parent, i) == i).count() as u64
}

pub fn artin_large_bounds(m: &CoxeterMatrix) -> Result<BoundReport, BoundsError> {
    require_large(m)?;
    let (refined, mu) = large_upper_parts(m);
    let n = m.n() as u64;
    let report = if m.finite_count() == 0 {
        kw_free_bounds(n)?
    } else {
        // A finite entry gives a central element of a dihedral Artin
        // subgroup, hence Z^2, so the group is not free.
        let floor = betti_floor(odd_components(m)).max(6) as i64;
        BoundReport::new(
            Estimate::exact(floor),
            "max(Betti floor, 6 for non-free groups)",
            Estimate::upper(refined),
            "large-type Artin: 8(sum log2 m_ij, odd m_ij replaced by m_ij - 1) + 2n - r + 1",
        )
    };
    Ok(report.with_extra("mu_form_upper", Estimate::upper(mu), "8 log2(mu) + 2n - r + 1"))
}

pub fn coxeter_large_bounds(m: &CoxeterMatrix) -> Result<BoundReport, BoundsError> {
    require_large(m)?;
    let (refined, mu) = large_upper_parts(m);
    let extra = 3.0 * m.n() as f64;
    Ok(BoundReport::new(
        Estimate::exact(6),
        "non-free (torsion): 6",
        Estimate::upper(refined + extra),
        "large-type Coxeter: Artin bound + 3n",
    )
    .with_extra("mu_form_upper", Estimate::upper(mu + extra), "8 log2(mu) + 5n - r + 1"))
}

/// Floor from the abelianization: torsion means non-free (at least 6),
/// otherwise the Betti floor.
fn presentation_floor(p: &Presentation) -> (i64, &'static str) {
    let ab = abelianization(p);
    let betti = betti_floor(ab.free_rank as u64) as i64;
    if ab.invariant_factors.is_empty() {
        (betti, "Betti floor of the abelianization")
    } else {
        (betti.max(6), "torsion in the abelianization: not free, at least 6")
    }
}

fn relator_presentation(n: u64, relations: &[Relation]) -> Presentation {
    let pairs: Vec<(Word, Word)> = relations
        .iter()
        .map(|r| (r.w.pow(r.m as usize), r.v.pow(r.m as usize)))
        .collect();
    Presentation::from_relations(n as usize, &pairs)
}

fn check_relator_inputs(n: u64, relations: &[Relation]) -> Result<(), BoundsError> {
    if n < 1 || relations.is_empty() {
        return Err(BoundsError::OutOfRange("need n >= 1 and at least one relation".into()));
    }
    if let Some(r) = relations.iter().find(|r| r.m < 1) {
        return Err(BoundsError::OutOfRange(format!("exponent {} < 1", r.m)));
    }
    Ok(())
}

/// `8 log2 m + 2n + (3/2)(l + l') + 5` for `< a_1..a_n | w^m = v^m >`.
pub fn one_relator_bounds(n: u64, w: &Word, v: &Word, m: u64) -> Result<BoundReport, BoundsError> {
    let rel = [Relation::new(w.clone(), v.clone(), m)];
    check_relator_inputs(n, &rel)?;
    let lengths = (w.len() + v.len()) as f64;
    let base = 8.0 * (m as f64).log2() + 2.0 * n as f64 + 1.5 * lengths;
    let (floor, source) = presentation_floor(&relator_presentation(n, &rel));
    Ok(BoundReport::new(
        Estimate::exact(floor),
        source,
        Estimate::upper(base + 5.0),
        "one relation: 8 log2 m + 2n + (3/2)(l + l') + 5",
    )
    .with_extra("plus_two_form", Estimate::upper(base + 2.0), "the same with constant 2, as used when summing relations"))
}

/// `sum_i (8 log2 m_i + (3/2)(l_i + l'_i)) + 2n + r + 1`.
pub fn multi_relator_bounds(n: u64, relations: &[Relation]) -> Result<BoundReport, BoundsError> {
    check_relator_inputs(n, relations)?;
    let r = relations.len() as f64;
    let body: f64 = relations
        .iter()
        .map(|x| 8.0 * (x.m as f64).log2() + 1.5 * (x.w.len() + x.v.len()) as f64)
        .sum();
    let nf = n as f64;
    let (floor, source) = presentation_floor(&relator_presentation(n, relations));
    let piecewise = body + r * (2.0 * nf + 5.0) - (r - 1.0) * (2.0 * nf + 1.0);
    Ok(BoundReport::new(
        Estimate::exact(floor),
        source,
        Estimate::upper(body + 2.0 * nf + r + 1.0),
        "relations: sum(8 log2 m_i + (3/2)(l_i + l'_i)) + 2n + r + 1",
    )
    .with_extra(
        "piecewise_upper",
        Estimate::upper(piecewise),
        "sum of one-relation bounds minus the shared bouquet (2n + 1 per extra piece)",
    ))
}

/// Symbolic description of a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Free(u64),
    Cyclic(u64),
    FiniteAbelian(Vec<u64>),
    FreeAbelian(u64),
    SurfaceOrientable(u64),
    SurfaceNonOrientable(u64),
    Raag(CoxeterMatrix),
    Racg(CoxeterMatrix),
    ArtinLarge(CoxeterMatrix),
    CoxeterLarge(CoxeterMatrix),
    OneRelatorPower { n: u64, w: Word, v: Word, m: u64 },
    MultiRelator { n: u64, relations: Vec<Relation> },
    Z2Sum(u64),
}

fn right_angled_count(m: &CoxeterMatrix) -> Result<u64, BoundsError> {
    match m.finite_pairs().find(|&(_, _, x)| x != 2) {
        Some((i, j, x)) => Err(BoundsError::Matrix(format!(
            "m_{{{},{}}} = {x}; right-angled needs every finite entry = 2",
            i + 1,
            j + 1
        ))),
        None => Ok(m.finite_count() as u64),
    }
}

pub fn evaluate(spec: &GroupSpec) -> Result<BoundReport, BoundsError> {
    match spec {
        GroupSpec::Free(n) => kw_free_bounds(*n),
        GroupSpec::Cyclic(m) => cyclic_bounds(*m),
        GroupSpec::FiniteAbelian(f) => finite_abelian_bounds(f),
        GroupSpec::FreeAbelian(n) => free_abelian_bounds(*n),
        GroupSpec::SurfaceOrientable(g) => surface_bounds(*g, true),
        GroupSpec::SurfaceNonOrientable(q) => surface_bounds(*q, false),
        GroupSpec::Raag(m) => raag_bounds(m.n() as u64, right_angled_count(m)?),
        GroupSpec::Racg(m) => racg_bounds(m.n() as u64, right_angled_count(m)?),
        GroupSpec::ArtinLarge(m) => artin_large_bounds(m),
        GroupSpec::CoxeterLarge(m) => coxeter_large_bounds(m),
        GroupSpec::OneRelatorPower { n, w, v, m } => one_relator_bounds(*n, w, v, *m),
        GroupSpec::MultiRelator { n, relations } => multi_relator_bounds(*n, relations),
        GroupSpec::Z2Sum(n) => z2_sum_bounds(*n),
    }
}
