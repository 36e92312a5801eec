//! The `construct` target and `bounds` group-spec grammars.

use anyhow::{anyhow, bail, Context, Result};

use kwcomplex::bounds::{evaluate, BoundReport, GroupSpec};
use kwcomplex::constructions::{
    artin_large_complex, bouquet, coxeter_large_complex, cyclic_complex_marked, genus2_surface, minimal_rp2,
    minimal_torus, moebius_band, multi_relator_complex, one_relator_power_complex, punctured_torus, raag_complex,
    racg_complex, telescope, MarkedComplex,
};

use crate::input::{load_matrix, load_relations};

fn number<T: std::str::FromStr>(what: &str, s: &str) -> Result<T> {
    s.trim().parse().map_err(|_| anyhow!("{what}: expected a non-negative integer, got {s:?}"))
}

fn relations_spec(path: &str) -> Result<GroupSpec> {
    let (n, mut relations) = load_relations(path)?;
    Ok(if relations.len() == 1 {
        let r = relations.remove(0);
        GroupSpec::OneRelatorPower {
            n: n as u64,
            w: r.w,
            v: r.v,
            m: r.m,
        }
    } else {
        GroupSpec::MultiRelator {
            n: n as u64,
            relations,
        }
    })
}

/// `free:n | cyclic:m | abelian:d1,d2,... | free-abelian:n | z2sum:n |
/// surface:+g | surface:-q | raag:file | racg:file | artin-large:file |
/// coxeter-large:file | one-relator:file`.
pub fn parse_group_spec(s: &str) -> Result<GroupSpec> {
    let (kind, arg) = s
        .split_once(':')
        .ok_or_else(|| anyhow!("group spec {s:?} has no ':'; expected e.g. cyclic:4"))?;
    Ok(match kind {
        "free" => GroupSpec::Free(number("free", arg)?),
        "cyclic" => GroupSpec::Cyclic(number("cyclic", arg)?),
        "abelian" => GroupSpec::FiniteAbelian(
            arg.split(',').map(|d| number("abelian", d)).collect::<Result<Vec<u64>>>()?,
        ),
        "free-abelian" => GroupSpec::FreeAbelian(number("free-abelian", arg)?),
        "z2sum" => GroupSpec::Z2Sum(number("z2sum", arg)?),
        "surface" => {
            if let Some(g) = arg.strip_prefix('+') {
                GroupSpec::SurfaceOrientable(number("surface genus", g)?)
            } else if let Some(q) = arg.strip_prefix('-') {
                GroupSpec::SurfaceNonOrientable(number("surface genus", q)?)
            } else {
                bail!("surface spec needs a sign: surface:+g (orientable) or surface:-q");
            }
        }
        "raag" => GroupSpec::Raag(load_matrix(arg)?),
        "racg" => GroupSpec::Racg(load_matrix(arg)?),
        "artin-large" => GroupSpec::ArtinLarge(load_matrix(arg)?),
        "coxeter-large" => GroupSpec::CoxeterLarge(load_matrix(arg)?),
        "one-relator" => relations_spec(arg)?,
        _ => bail!("unknown group kind {kind:?}"),
    })
}

pub struct Built {
    pub name: String,
    pub marked: MarkedComplex,
    /// Bounds for the fundamental group of the result.
    pub group: Option<GroupSpec>,
}

/// `torus | rp2 | moebius | punctured-torus | genus2 | bouquet:n | cyclic:m |
/// telescope:k | raag:file | racg:file | artin-large:file | coxeter-large:file |
/// one-relator:file`.
pub fn build(target: &str) -> Result<Built> {
    let (kind, arg) = match target.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None => (target, None),
    };
    let need = || arg.ok_or_else(|| anyhow!("construct target {kind:?} needs an argument, e.g. {kind}:3"));
    let plain = |k| MarkedComplex::new(k, 0);
    let (marked, group) = match kind {
        "torus" => (plain(minimal_torus()), Some(GroupSpec::SurfaceOrientable(1))),
        "rp2" => (plain(minimal_rp2()), Some(GroupSpec::Cyclic(2))),
        "genus2" => (plain(genus2_surface()), Some(GroupSpec::SurfaceOrientable(2))),
        "moebius" => (moebius_band(), Some(GroupSpec::Free(1))),
        "punctured-torus" => (punctured_torus(), Some(GroupSpec::Free(2))),
        "bouquet" => {
            let n: u64 = number("bouquet", need()?)?;
            (bouquet(n as usize)?, Some(GroupSpec::Free(n)))
        }
        "cyclic" => {
            let m: u64 = number("cyclic", need()?)?;
            (cyclic_complex_marked(m)?, Some(GroupSpec::Cyclic(m)))
        }
        "telescope" => (telescope(number("telescope", need()?)?)?, Some(GroupSpec::Free(1))),
        "raag" => {
            let m = load_matrix(need()?)?;
            (raag_complex(&m)?, Some(GroupSpec::Raag(m)))
        }
        "racg" => {
            let m = load_matrix(need()?)?;
            (racg_complex(&m)?, Some(GroupSpec::Racg(m)))
        }
        "artin-large" => {
            let m = load_matrix(need()?)?;
            (plain(artin_large_complex(&m)?), Some(GroupSpec::ArtinLarge(m)))
        }
        "coxeter-large" => {
            let m = load_matrix(need()?)?;
            (plain(coxeter_large_complex(&m)?), Some(GroupSpec::CoxeterLarge(m)))
        }
        "one-relator" => {
            let spec = relations_spec(need()?)?;
            let k = match &spec {
                GroupSpec::OneRelatorPower { n, w, v, m } => one_relator_power_complex(*n as usize, w, v, *m)?,
                GroupSpec::MultiRelator { n, relations } => multi_relator_complex(*n as usize, relations)?,
                _ => unreachable!(),
            };
            (plain(k), Some(spec))
        }
        _ => bail!("unknown construct target {target:?}"),
    };
    Ok(Built {
        name: target.to_string(),
        marked,
        group,
    })
}

pub fn bounds_for(group: &GroupSpec) -> Result<BoundReport> {
    evaluate(group).context("evaluating bounds")
}
