use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use kwcomplex::bounds::{
    artin_large_bounds, coxeter_large_bounds, cyclic_bounds, finite_abelian_bounds, free_abelian_bounds, k_a, k_c,
    kw_free, one_relator_bounds, raag_bounds, racg_bounds, surface_bounds, z2_sum_bounds, BoundReport,
};
use kwcomplex::canonical::{canonical_form, is_isomorphic};
use kwcomplex::constructions::{cyclic_complex, one_relator_power_complex, raag_complex, CoxeterMatrix};
use kwcomplex::gluing::{check_condition1, direct_validation};
use kwcomplex::homology::homology;
use kwcomplex::word::{Letter, Word};
use kwcomplex::{glue, Complex2, Edge, Triangle, VertexId};

mod common;
use common::random_gluing;

/// A complex on `n` vertices with the triangles and extra edges picked by
/// the masks (in lexicographic order of vertex triples and pairs).
fn complex_from_masks(n: usize, tri_mask: u64, edge_mask: u64) -> Complex2 {
    let n = n as VertexId;
    let (mut edges, mut tris) = (Vec::new(), Vec::new());
    let (mut ti, mut ei) = (0, 0);
    for a in 0..n {
        for b in a + 1..n {
            if edge_mask >> (ei % 64) & 1 == 1 {
                edges.push(Edge::new(a, b));
            }
            ei += 1;
            for c in b + 1..n {
                if tri_mask >> (ti % 64) & 1 == 1 {
                    let t = Triangle::new(a, b, c);
                    edges.extend(t.edges());
                    tris.push(t);
                }
                ti += 1;
            }
        }
    }
    Complex2::new(n as usize, edges, tris)
}

fn any_complex() -> impl Strategy<Value = Complex2> {
    (1usize..=7, any::<u64>(), any::<u64>()).prop_map(|(n, t, e)| complex_from_masks(n, t, e))
}

fn consistent(r: &BoundReport) -> bool {
    r.is_consistent() && r.extras.iter().all(|e| e.value.value.is_finite())
}

fn word_strategy(n: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..n, prop::bool::ANY), 1..=4)
        .prop_map(|ls| Word::new(ls.into_iter().map(|(g, pos)| Letter::new(g, if pos { 1 } else { -1 })).collect()))
}

fn large_matrix() -> impl Strategy<Value = CoxeterMatrix> {
    (2usize..=6).prop_flat_map(|n| {
        prop::collection::vec(prop_oneof![Just(0u64), 3u64..=12], n * (n - 1) / 2).prop_map(move |ms| {
            let mut c = CoxeterMatrix::new(n);
            let mut it = ms.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    c.set(i, j, it.next().unwrap()).unwrap();
                }
            }
            c
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_form_ignores_labels(k in any_complex(), seed in any::<u64>()) {
        let mut perm: Vec<VertexId> = (0..k.vertex_count() as VertexId).collect();
        let mut rng = StdRng::seed_from_u64(seed);
        rand::seq::SliceRandom::shuffle(&mut perm[..], &mut rng);
        let relabeled = k.relabel(&perm);
        prop_assert_eq!(canonical_form(&relabeled), canonical_form(&k));
        prop_assert_eq!(relabeled.f_vector(), k.f_vector());
    }

    #[test]
    fn euler_poincare(k in any_complex()) {
        let h = homology(&k);
        prop_assert_eq!(k.euler_characteristic().unwrap(), h.b0 as i64 - h.b1 as i64 + h.b2 as i64);
        prop_assert_eq!(h.b0, k.component_count());
    }

    #[test]
    fn nerve_reproduces_complex(k in any_complex()) {
        let n = k.star_cover_nerve();
        prop_assert_eq!(&n, &k);
        prop_assert_eq!(n.star_cover_nerve(), n);
    }

    #[test]
    fn sufficient_conditions_imply_valid_gluing(seed in any::<u64>()) {
        let (i, j) = random_gluing(&mut StdRng::seed_from_u64(seed));
        if check_condition1(&i, &j).is_ok() && (i.is_maximal() || j.is_maximal()) {
            prop_assert!(direct_validation(&i, &j).is_ok());
        }
    }

    #[test]
    fn gluing_is_symmetric_and_additive(seed in any::<u64>()) {
        let (i, j) = random_gluing(&mut StdRng::seed_from_u64(seed));
        let (z, x, y) = (i.source(), i.target(), j.target());
        match (glue(&i, &j), glue(&j, &i)) {
            (Ok(a), Ok(b)) => {
                prop_assert!(is_isomorphic(&a.complex, &b.complex));
                prop_assert!(a.complex.validate().is_simplicial());
                let f = a.complex.f_vector();
                let (fx, fy, fz) = (x.f_vector(), y.f_vector(), z.f_vector());
                prop_assert_eq!(f, (fx.0 + fy.0 - fz.0, fx.1 + fy.1 - fz.1, fx.2 + fy.2 - fz.2));
                let chi = |k: &Complex2| k.euler_characteristic().unwrap();
                prop_assert_eq!(chi(&a.complex), chi(x) + chi(y) - chi(z));
            }
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "asymmetric outcome: {:?} vs {:?}", a.is_ok(), b.is_ok()),
        }
    }

    #[test]
    fn one_relator_construction_within_bound(
        (n, w, v) in (1usize..=3).prop_flat_map(|n| (Just(n), word_strategy(n), word_strategy(n))),
        m in 2u64..=6,
    ) {
        let k = one_relator_power_complex(n, &w, &v, m);
        prop_assume!(k.is_ok());
        let k = k.unwrap();
        let r = one_relator_bounds(n as u64, &w, &v, m).unwrap();
        prop_assert!(k.validate().is_empty());
        prop_assert!(k.vertex_count() as f64 <= r.upper.value + r.upper.error + 1e-9);
    }

    #[test]
    fn large_type_bounds_consistent(c in large_matrix()) {
        prop_assert!(consistent(&artin_large_bounds(&c).unwrap()));
        prop_assert!(consistent(&coxeter_large_bounds(&c).unwrap()));
    }
}

/// Least `v` such that a graph on `v` vertices can have first Betti number `n`.
fn kw_free_brute(n: u64) -> u64 {
    (1..).find(|&v: &u64| v * v.saturating_sub(1) / 2 + 1 >= v + n).unwrap()
}

#[test]
fn kw_free_matches_graph_count() {
    for n in 1..=500 {
        assert_eq!(kw_free(n).unwrap(), kw_free_brute(n), "n = {n}");
    }
}

#[test]
fn lower_never_exceeds_upper() {
    for n in 1..=100u64 {
        assert!(consistent(&free_abelian_bounds(n).unwrap()), "free abelian {n}");
        assert!(consistent(&z2_sum_bounds(n).unwrap()), "z2 sum {n}");
        for m in 0..=n * (n - 1) / 2 {
            assert!(consistent(&raag_bounds(n, m).unwrap()), "raag {n} {m}");
            assert!(consistent(&racg_bounds(n, m).unwrap()), "racg {n} {m}");
        }
    }
    for m in 2..=100u64 {
        assert!(consistent(&cyclic_bounds(m).unwrap()), "cyclic {m}");
        assert!(consistent(&finite_abelian_bounds(&[2, 2 * m]).unwrap()), "abelian 2,{}", 2 * m);
    }
    for g in 1..=100u64 {
        assert!(consistent(&surface_bounds(g, true).unwrap()), "orientable {g}");
        assert!(consistent(&surface_bounds(g, false).unwrap()), "non-orientable {g}");
    }
}

#[test]
fn right_angled_lower_bound_is_monotone_and_k_a_continuous() {
    for n in 2..=60u64 {
        for (f, name) in [(k_a as fn(u64, u64) -> _, "k_a"), (k_c, "k_c")] {
            let values: Vec<f64> = (0..=n * (n - 1) / 2).map(|m| f(n, m).unwrap().0.value).collect();
            for (m, w) in values.windows(2).enumerate() {
                assert!(w[1] >= w[0] - 1e-9, "{name}({n}, {m}) decreases");
                if name == "k_a" {
                    assert!(w[1] - w[0] <= 0.75, "{name}({n}, {m}) jumps by {}", w[1] - w[0]);
                }
            }
        }
    }
}

#[test]
fn constructions_meet_their_bounds() {
    for m in 2..=200u64 {
        let k = cyclic_complex(m).unwrap();
        let r = cyclic_bounds(m).unwrap();
        assert!(k.vertex_count() as i64 <= r.upper.integer.unwrap(), "cyclic {m}");
        assert!(k.vertex_count() as i64 >= r.lower.integer.unwrap(), "cyclic {m}");
    }
    for n in 1..=6usize {
        let c = CoxeterMatrix::all_commuting(n);
        let k = raag_complex(&c).unwrap().complex;
        let r = raag_bounds(n as u64, (n * (n - 1) / 2) as u64).unwrap();
        assert_eq!(k.vertex_count() as i64, r.upper.integer.unwrap());
    }
}
