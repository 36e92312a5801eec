//! Free, surface, abelian and cyclic groups.

use super::{ceil_cbrt, ceil_half_sum_sqrt, BoundReport, BoundsError, Estimate};

fn out_of_range(msg: impl Into<String>) -> BoundsError {
    BoundsError::OutOfRange(msg.into())
}

/// Least `k` with `n <= (k-1)(k-2)/2`: the complete graph on `k` vertices
/// with a vertex star contracted is a bouquet of that many circles.
pub fn kw_free(n: u64) -> Result<u64, BoundsError> {
    if n < 1 {
        return Err(out_of_range("free rank must be >= 1"));
    }
    Ok(ceil_half_sum_sqrt(3, 1 + 8 * n))
}

pub fn kw_free_bounds(n: u64) -> Result<BoundReport, BoundsError> {
    let k = kw_free(n)? as i64;
    Ok(BoundReport::exact(k, "free group: ceil((3 + sqrt(1 + 8n)) / 2)"))
}

/// The "chromatic number" of a closed surface in the ceiling form
/// `ceil((7 + sqrt(1 + 48g)) / 2)` (orientable) or
/// `ceil((7 + sqrt(1 + 24q)) / 2)` (non-orientable), with the exceptions
/// 10 for orientable genus 2 and 8, 9 for non-orientable genus 2, 3. In this
/// form it is the vertex count of a minimal triangulation; the graph
/// colouring number uses the floor instead.
pub fn chromatic_number(genus: u64, orientable: bool) -> Result<u64, BoundsError> {
    if genus == 0 {
        return Err(out_of_range("genus must be >= 1; the sphere has trivial group"));
    }
    Ok(match (orientable, genus) {
        (true, 2) => 10,
        (true, g) => ceil_half_sum_sqrt(7, 1 + 48 * g),
        (false, 2) => 8,
        (false, 3) => 9,
        (false, q) => ceil_half_sum_sqrt(7, 1 + 24 * q),
    })
}

/// KW-complexity of a closed surface group: the chromatic number, except 9
/// for the orientable genus-2 surface.
pub fn kw_surface(genus: u64, orientable: bool) -> Result<u64, BoundsError> {
    if orientable && genus == 2 {
        return Ok(9);
    }
    chromatic_number(genus, orientable)
}

pub fn surface_bounds(genus: u64, orientable: bool) -> Result<BoundReport, BoundsError> {
    let kw = kw_surface(genus, orientable)? as i64;
    let chr = chromatic_number(genus, orientable)? as i64;
    let source = if orientable && genus == 2 {
        "orientable genus 2: 9 (below the chromatic number 10)"
    } else if orientable {
        "orientable surface: chromatic number ceil((7 + sqrt(1 + 48g)) / 2)"
    } else {
        "non-orientable surface: chromatic number ceil((7 + sqrt(1 + 24q)) / 2), 8 for q=2, 9 for q=3"
    };
    Ok(BoundReport::exact(kw, source).with_extra(
        "chromatic_number",
        Estimate::exact(chr),
        "Heawood formula with its exceptions",
    ))
}

/// `ceil((3n(n-1))^(1/3)) + 2 <= KW(Z^n) <= n^2 + n + 1`.
pub fn free_abelian_bounds(n: u64) -> Result<BoundReport, BoundsError> {
    if n < 1 {
        return Err(out_of_range("rank must be >= 1"));
    }
    let lower = ceil_cbrt(3 * n as u128 * (n as u128 - 1)) as i64 + 2;
    let upper = (n * n + n + 1) as i64;
    let mut r = BoundReport::new(
        Estimate::exact(lower),
        "free abelian: ceil((3n(n-1))^(1/3)) + 2",
        Estimate::exact(upper),
        "free abelian: n^2 + n + 1 (2-skeleton of the n-torus)",
    );
    if n == 1 {
        r = r.with_extra("kw_free", Estimate::exact(3), "Z is free of rank 1");
    }
    Ok(r)
}

const NON_FREE_FLOOR: &str = "non-free groups: every complex on at most 5 vertices has free fundamental group";

/// `(4/3) n^(2/3) + 1 <= KW((Z/2)^n) <= n^2 + 4n + 1`.
pub fn z2_sum_bounds(n: u64) -> Result<BoundReport, BoundsError> {
    if n < 1 {
        return Err(out_of_range("n must be >= 1"));
    }
    let raw = 4.0 / 3.0 * (n as f64).powf(2.0 / 3.0) + 1.0;
    // Least k with 27(k-1)^3 >= 64 n^2; c^3 is an integer, so rounding the
    // quotient up changes nothing.
    let c = ceil_cbrt((64 * n as u128 * n as u128).div_ceil(27));
    let lower = Estimate {
        integer: Some(c as i64 + 1),
        ..Estimate::lower(raw)
    };
    let mut r = BoundReport::new(
        lower,
        "sum of Z/2: (4/3) n^(2/3) + 1",
        Estimate::exact((n * n + 4 * n + 1) as i64),
        "sum of Z/2: n^2 + 4n + 1",
    );
    r = r.with_extra("non_free_floor", Estimate::exact(6), NON_FREE_FLOOR);
    if n == 1 {
        r = r.with_extra("kw_exact", Estimate::exact(6), "Z/2: the 6-vertex projective plane is minimal");
    }
    Ok(r)
}

/// `(12 log_3 m)^(1/3) <= KW(Z/m) <= 4 log_2 m + 4`.
pub fn cyclic_bounds(m: u64) -> Result<BoundReport, BoundsError> {
    if m < 2 {
        return Err(out_of_range("cyclic order must be >= 2"));
    }
    let mf = m as f64;
    let mut r = BoundReport::new(
        Estimate::lower((12.0 * mf.log(3.0)).cbrt()),
        "cyclic: (12 log_3 m)^(1/3)",
        Estimate::upper(4.0 * mf.log2() + 4.0),
        "cyclic: 4 log_2 m + 4 (Moebius telescope capped by a disk)",
    )
    .with_extra(
        "per_factor_upper",
        Estimate::upper(3.0 * mf.log2() + 8.0),
        "cyclic factor estimate 3 log_2 m + 8 used for finite abelian groups",
    )
    .with_extra("non_free_floor", Estimate::exact(6), NON_FREE_FLOOR);
    match m {
        2 => r = r.with_extra("kw_exact", Estimate::exact(6), "Z/2: the 6-vertex projective plane is minimal"),
        4 => {
            r = r.with_extra(
                "direct_disk_upper",
                Estimate::exact(11),
                "Z/4: attaching a disk directly along the doubled curve",
            )
        }
        _ => {}
    }
    Ok(r)
}

/// Bounds for `Z/n_1 + ... + Z/n_s` with `n_i | n_{i+1}` and every `n_i >= 2`.
pub fn finite_abelian_bounds(factors: &[u64]) -> Result<BoundReport, BoundsError> {
    if factors.is_empty() || factors.iter().any(|&f| f < 2) {
        return Err(out_of_range("invariant factors must be >= 2 and non-empty"));
    }
    if factors.windows(2).any(|w| w[1] % w[0] != 0) {
        return Err(BoundsError::NotAChain(factors.to_vec()));
    }
    let s = factors.len() as f64;
    let log2_order: f64 = factors.iter().map(|&f| (f as f64).log2()).sum();
    let log3_order = log2_order / 3f64.log2();
    let mut r = BoundReport::new(
        Estimate::lower((12.0 * log3_order).cbrt()),
        "finite abelian: (12 log_3 |G|)^(1/3)",
        Estimate::upper((3.0 / s * log2_order + 8.0).powf(s)),
        "finite abelian: ((3/s) log_2 |G| + 8)^s",
    );
    let product = |f: &dyn Fn(f64) -> f64| factors.iter().map(|&n| f(n as f64)).product::<f64>();
    r = r
        .with_extra(
            "product_of_cyclic_uppers",
            Estimate::upper(product(&|n| 4.0 * n.log2() + 4.0)),
            "product of the cyclic upper bounds 4 log_2 n_i + 4",
        )
        .with_extra(
            "product_of_factor_estimates",
            Estimate::upper(product(&|n| 3.0 * n.log2() + 8.0)),
            "product of the factor estimates 3 log_2 n_i + 8",
        )
        .with_extra("non_free_floor", Estimate::exact(6), NON_FREE_FLOOR);
    if factors.iter().all(|&f| f == 2) {
        let n = factors.len() as u64;
        r = r.with_extra(
            "z2_sum_upper",
            Estimate::exact((n * n + 4 * n + 1) as i64),
            "sum of Z/2: n^2 + 4n + 1",
        );
    }
    Ok(r)
}
