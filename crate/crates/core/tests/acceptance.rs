//! One PASS/FAIL line per acceptance criterion. Run with
//! `cargo test -p kwcomplex --test acceptance -- --nocapture` to see them.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::SeedableRng;

mod common;
use common::random_gluing;

use kwcomplex::bounds::{
    artin_large_bounds, chromatic_number, coxeter_large_bounds, cyclic_bounds, entropy_upper, free_abelian_bounds,
    free_entropy, group_count_log2, kw_free, kw_surface, multi_relator_bounds, one_relator_bounds, systolic_bounds,
    z2_sum_bounds, BoundReport,
};
use kwcomplex::canonical::{canonical_form, is_isomorphic};
use kwcomplex::constructions::{
    artin_large_complex, coxeter_large_complex, cyclic_complex, dyadic_curve, genus2_surface, minimal_rp2,
    minimal_torus, multi_relator_complex, one_relator_power_complex, punctured_torus, raag_complex, racg_complex,
    telescope, CoxeterMatrix, Relation,
};
use kwcomplex::gluing::{check_condition1, cycle_complex, direct_validation};
use kwcomplex::homology::{homology, is_collapsible_to_graph, is_unit, AbelianGroup, H1Basis};
use kwcomplex::presentation::{abelianization, edge_path_presentation, Presentation};
use kwcomplex::search::{closed_surfaces, enumerate, freeness_screen, EnumerationConstraints, FreenessVerdict, Parallelism, SurfaceQuery};
use kwcomplex::word::Word;
use kwcomplex::{glue_along, Complex2, Edge, Embedding, GlueError, Triangle, VertexId};

/// Slack allowed when comparing an integer vertex count with a real bound.
const BOUND_SLACK: f64 = 1e-9;
/// Relative tolerance for the geometric evaluators.
const GEOMETRY_REL_TOL: f64 = 1e-12;
/// Random gluings meeting both sufficient conditions.
const RANDOM_GLUINGS: usize = 1000;
const RANDOM_SEED: u64 = 0x006b_772d_676c_7565;

struct Outcome {
    pass: bool,
    detail: String,
    /// A failure that is understood and recorded; the remaining parts of
    /// the criterion must still hold.
    accepted_failure: bool,
}

impl Outcome {
    fn from_checks(checks: Vec<(bool, String)>) -> Outcome {
        let pass = checks.iter().all(|c| c.0);
        let detail = checks
            .into_iter()
            .map(|(ok, s)| if ok { s } else { format!("FAILED: {s}") })
            .collect::<Vec<_>>()
            .join("; ");
        Outcome {
            pass,
            detail,
            accepted_failure: false,
        }
    }
}

type Corpus = Vec<(String, Complex2)>;

fn word(s: &str) -> Word {
    s.parse().unwrap()
}

fn ab(k: &Complex2) -> AbelianGroup {
    abelianization(&edge_path_presentation(k, 0).unwrap())
}

fn within(s0: usize, r: &BoundReport) -> bool {
    s0 as f64 <= r.upper.value + r.upper.error + BOUND_SLACK
}

fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        ((a - b) / b).abs()
    }
}

fn c1_canonical(corpus: &mut Corpus) -> Outcome {
    let t = minimal_torus();
    let ts = t.classify_surface();
    let p = minimal_rp2();
    let ps = p.classify_surface();
    let ph = homology(&p);
    corpus.push(("minimal_torus".into(), t.clone()));
    corpus.push(("minimal_rp2".into(), p.clone()));
    Outcome::from_checks(vec![
        (t.f_vector() == (7, 21, 14), format!("torus f = {:?}", t.f_vector())),
        (
            ts.is_closed_surface && ts.orientable == Some(true) && ts.genus == Some(1),
            format!("torus surface {:?} genus {:?}", ts.orientable, ts.genus),
        ),
        (t.edge_count() == 7 * 6 / 2, "torus 1-skeleton K7".into()),
        (p.f_vector() == (6, 15, 10), format!("rp2 f = {:?}", p.f_vector())),
        (
            ps.is_closed_surface && ps.orientable == Some(false) && ps.genus == Some(1),
            "rp2 non-orientable q=1".into(),
        ),
        (ph.h1_torsion == AbelianGroup::cyclic(2), format!("rp2 torsion {}", ph.h1_torsion)),
    ])
}

fn c2_genus2(corpus: &mut Corpus) -> Outcome {
    let x = punctured_torus();
    let square = x.path("boundary").unwrap().to_vec();
    let shifted: Vec<VertexId> = (0..4).map(|t| square[(t + 1) % 4]).collect();
    let z = cycle_complex(4);
    let good = glue_along(&x.complex, &x.complex, &z, &square, &shifted);
    let bad = glue_along(&x.complex, &x.complex, &z, &square, &square);
    let mut checks = Vec::new();
    match good {
        Ok(r) => {
            let s = r.complex.classify_surface();
            checks.push((
                r.complex.validate().is_empty()
                    && r.complex.vertex_count() == 10
                    && s.is_closed_surface
                    && s.orientable == Some(true)
                    && s.genus == Some(2),
                format!("shifted: {:?} genus {:?}", r.complex.f_vector(), s.genus),
            ));
            checks.push((is_isomorphic(&r.complex, &genus2_surface()), "matches genus2_surface()".into()));
            corpus.push(("genus2".into(), r.complex));
        }
        Err(e) => checks.push((false, format!("shifted gluing rejected: {e}"))),
    }
    // x_1 = y_1 and x_3 = y_3 are the first and third corners of the square.
    let pair = Edge::new(square[0], square[2]);
    match bad {
        Err(GlueError::DuplicateEdge { a, b, count }) => checks.push((
            Edge::new(a, b) == pair && count == 2,
            format!("aligned: duplicate edge {{{a},{b}}} x{count}"),
        )),
        other => checks.push((false, format!("aligned gluing gave {other:?}"))),
    }
    Outcome::from_checks(checks)
}

fn c3_gluing_conditions(corpus: &mut Corpus) -> Outcome {
    let mut rng = StdRng::seed_from_u64(RANDOM_SEED);
    let (mut accepted, mut attempts, mut failures) = (0, 0, 0);
    while accepted < RANDOM_GLUINGS && attempts < 200 * RANDOM_GLUINGS {
        attempts += 1;
        let (i, j) = random_gluing(&mut rng);
        if check_condition1(&i, &j).is_err() || !(i.is_maximal() || j.is_maximal()) {
            continue;
        }
        accepted += 1;
        if direct_validation(&i, &j).is_err() {
            failures += 1;
        }
        if accepted % 100 == 0 {
            let r = kwcomplex::glue(&i, &j).unwrap();
            if r.complex.is_connected() {
                corpus.push((format!("random gluing {accepted}"), r.complex));
            }
        }
    }
    // Boundary of the tetrahedron from two pairs of faces along its 1-skeleton.
    let sk1 = Complex2::new(4, Complex2::from_triangles(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).edges().iter().copied(), []);
    let x = Complex2::from_triangles(4, &[[0, 1, 2], [0, 1, 3]]).disjoint_union(&Complex2::new(0, [], []));
    let x = Complex2::new(4, x.edges().iter().copied().chain(sk1.edges().iter().copied()), x.triangles().iter().copied());
    let y = Complex2::new(4, sk1.edges().iter().copied(), [Triangle::new(0, 2, 3), Triangle::new(1, 2, 3)]);
    let id: Vec<VertexId> = (0..4).collect();
    let ei = Embedding::new(sk1.clone(), x, id.clone()).unwrap();
    let ej = Embedding::new(sk1, y, id).unwrap();
    let maximal = (ei.is_maximal(), ej.is_maximal());
    let direct = direct_validation(&ei, &ej).is_ok();
    let glued = kwcomplex::glue(&ei, &ej);
    let sphere_ok = matches!(&glued, Ok(r) if r.directly_validated && r.complex.f_vector() == (4, 6, 4));
    if let Ok(r) = glued {
        corpus.push(("tetrahedron boundary".into(), r.complex));
    }
    Outcome::from_checks(vec![
        (
            accepted == RANDOM_GLUINGS && failures == 0,
            format!("{accepted} gluings meeting (1)+(2) from {attempts} draws, {failures} failed direct validation"),
        ),
        (
            maximal == (false, false) && direct && sphere_ok,
            format!("tetrahedron boundary: maximal {maximal:?}, direct validation {direct}"),
        ),
    ])
}

fn right_angled_matrix(n: usize, mask: u32) -> CoxeterMatrix {
    let mut m = CoxeterMatrix::new(n);
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                m.set(i, j, 2).unwrap();
            }
            bit += 1;
        }
    }
    m
}

fn c4_right_angled(corpus: &mut Corpus) -> Outcome {
    let (mut total, mut bad) = (0, Vec::new());
    for n in 1..=5usize {
        let pairs = n * (n - 1) / 2;
        for mask in 0..1u32 << pairs {
            let m = right_angled_matrix(n, mask);
            let e = m.finite_count();
            let a = raag_complex(&m).unwrap().complex;
            let c = racg_complex(&m).unwrap().complex;
            total += 1;
            let ok = a.vertex_count() == 2 * n + 2 * e + 1
                && c.vertex_count() == 5 * n + 2 * e + 1
                && a.validate().is_empty()
                && c.validate().is_empty()
                && homology(&a).h1() == AbelianGroup::free(n);
            if !ok {
                bad.push(format!("n={n} mask={mask:b}"));
            }
            if mask == (1 << pairs) - 1 || mask == 0 {
                corpus.push((format!("raag n={n} m={e}"), a));
                corpus.push((format!("racg n={n} m={e}"), c));
            }
        }
    }
    Outcome::from_checks(vec![(
        bad.is_empty(),
        format!("{total} matrices with n <= 5, mismatches {bad:?}"),
    )])
}

fn c5_telescope(corpus: &mut Corpus) -> Outcome {
    let mut checks = Vec::new();
    for k in 0..=6u32 {
        let t = telescope(k).unwrap();
        let h = homology(&t.complex);
        let basis = H1Basis::new(&t.complex);
        let c0 = basis.class_of(t.path("c0").unwrap()).unwrap();
        let mut ok = t.complex.vertex_count() == 3 * k as usize + 3 && h.h1() == AbelianGroup::free(1) && is_unit(&c0);
        for i in 0..=k {
            let ci = basis.class_of(t.path(&format!("c{i}")).unwrap()).unwrap();
            ok &= ci == c0.scale(1 << i);
        }
        for m in 2..1u64 << (k + 1) {
            let xi = dyadic_curve(m, &t).unwrap();
            ok &= basis.class_of(&xi).unwrap() == c0.scale(m as i64);
        }
        checks.push((ok, format!("k={k}")));
        corpus.push((format!("telescope {k}"), t.complex));
    }
    let all = checks.iter().all(|c| c.0);
    Outcome::from_checks(vec![(
        all,
        format!("k = 0..6: s0 = 3k+3, H1 = Z, [c_i] = 2^i [c_0], [xi(m)] = m [c_0]; failing {:?}", checks.iter().filter(|c| !c.0).map(|c| &c.1).collect::<Vec<_>>()),
    )])
}

fn c6_cyclic(corpus: &mut Corpus) -> Outcome {
    let mut bad = Vec::new();
    let mut worst = f64::INFINITY;
    for m in 2..=64u64 {
        let k = cyclic_complex(m).unwrap();
        let bound = 4.0 * (m as f64).log2() + 4.0;
        worst = worst.min(bound - k.vertex_count() as f64);
        let ok = k.validate().is_empty()
            && homology(&k).h1() == AbelianGroup::cyclic(m)
            && k.vertex_count() as f64 <= bound + BOUND_SLACK;
        if !ok {
            bad.push(m);
        }
        corpus.push((format!("cyclic {m}"), k));
    }
    let rp2 = canonical_form(&cyclic_complex(2).unwrap()) == canonical_form(&minimal_rp2());
    Outcome::from_checks(vec![
        (bad.is_empty(), format!("m = 2..64 valid with H1 = Z/m and s0 <= 4 log2 m + 4 (least slack {worst:.3}); failing {bad:?}")),
        (rp2, "cyclic_complex(2) has the canonical form of minimal_rp2()".into()),
    ])
}

enum Spec {
    One(usize, &'static str, &'static str, u64),
    Multi(usize, Vec<(&'static str, &'static str, u64)>),
    Artin(CoxeterMatrix),
    Coxeter(CoxeterMatrix),
}

fn braid_words(i: usize, j: usize, mij: u64) -> (Word, Word) {
    let k = (mij / 2) as usize;
    let mut l = Word::from_pairs(&[(i, 1), (j, 1)]).pow(k);
    let mut r = Word::from_pairs(&[(j, 1), (i, 1)]).pow(k);
    if mij % 2 == 1 {
        l = l.concat(&Word::from_pairs(&[(i, 1)]));
        r = r.concat(&Word::from_pairs(&[(j, 1)]));
    }
    (l, r)
}

fn artin_presentation(m: &CoxeterMatrix, coxeter: bool) -> Presentation {
    let mut rels: Vec<(Word, Word)> = m.finite_pairs().map(|(i, j, x)| braid_words(i, j, x)).collect();
    if coxeter {
        rels.extend((0..m.n()).map(|i| (Word::from_pairs(&[(i, 1)]).pow(2), Word::empty())));
    }
    Presentation::from_relations(m.n(), &rels)
}

fn c7_battery(corpus: &mut Corpus) -> Outcome {
    let battery = vec![
        Spec::One(2, "a1 a2", "a2 a1", 2),
        Spec::One(2, "a1 a2", "a1", 3),
        Spec::One(1, "a1", "a1^-1", 2),
        Spec::One(3, "a1 a2 a3", "a3^-1 a2", 5),
        Spec::One(2, "a1 a2 a1^-1 a2", "a2", 4),
        Spec::One(2, "a1 a2 a1 a2^-1 a1 a2", "a2 a1", 32),
        Spec::One(3, "a1 a2 a3 a1 a2 a3", "a3", 17),
        Spec::Multi(2, vec![("a1 a2", "a2 a1", 2), ("a1", "a2", 3)]),
        Spec::Multi(3, vec![("a1 a2", "a2 a1", 2), ("a2 a3", "a3 a2", 2), ("a1", "a3^-1", 5)]),
        Spec::Artin(CoxeterMatrix::new(2).with(0, 1, 3)),
        Spec::Artin(CoxeterMatrix::new(3).with(0, 1, 4).with(1, 2, 5)),
        Spec::Artin(CoxeterMatrix::new(3).with(0, 1, 3).with(1, 2, 6).with(0, 2, 7)),
        Spec::Artin(CoxeterMatrix::new(2).with(0, 1, 32)),
        Spec::Coxeter(CoxeterMatrix::new(3).with(0, 1, 3).with(1, 2, 5)),
        Spec::Coxeter(CoxeterMatrix::new(2).with(0, 1, 8)),
    ];
    let mut failing = Vec::new();
    let mut plus_two_slack = f64::INFINITY;
    let count = battery.len();
    for (idx, spec) in battery.into_iter().enumerate() {
        let (k, expected, report) = match &spec {
            Spec::One(n, w, v, m) => {
                let (w, v) = (word(w), word(v));
                let k = one_relator_power_complex(*n, &w, &v, *m).unwrap();
                let p = Presentation::from_relations(*n, &[(w.pow(*m as usize), v.pow(*m as usize))]);
                let r = one_relator_bounds(*n as u64, &w, &v, *m).unwrap();
                if let Some(e) = r.extra("plus_two_form") {
                    plus_two_slack = plus_two_slack.min(e.value - k.vertex_count() as f64);
                }
                (k, abelianization(&p), r)
            }
            Spec::Multi(n, rels) => {
                let relations: Vec<Relation> = rels.iter().map(|(w, v, m)| Relation::new(word(w), word(v), *m)).collect();
                let k = multi_relator_complex(*n, &relations).unwrap();
                let pairs: Vec<(Word, Word)> = relations
                    .iter()
                    .map(|r| (r.w.pow(r.m as usize), r.v.pow(r.m as usize)))
                    .collect();
                (k, abelianization(&Presentation::from_relations(*n, &pairs)), multi_relator_bounds(*n as u64, &relations).unwrap())
            }
            Spec::Artin(m) => (
                artin_large_complex(m).unwrap(),
                abelianization(&artin_presentation(m, false)),
                artin_large_bounds(m).unwrap(),
            ),
            Spec::Coxeter(m) => (
                coxeter_large_complex(m).unwrap(),
                abelianization(&artin_presentation(m, true)),
                coxeter_large_bounds(m).unwrap(),
            ),
        };
        let ok = k.validate().is_empty() && ab(&k) == expected && within(k.vertex_count(), &report);
        if !ok {
            failing.push(format!("#{idx}: s0={} bound={:.2} H1 {} vs {}", k.vertex_count(), report.upper.value, ab(&k), expected));
        }
        corpus.push((format!("battery {idx}"), k));
    }
    Outcome::from_checks(vec![(
        failing.is_empty(),
        format!("{count} specs valid, abelianizations agree, s0 within the stated bounds (least slack vs the +2 one-relator form {plus_two_slack:.2}); failing {failing:?}"),
    )])
}

fn c8_formulas() -> Outcome {
    let fa2 = free_abelian_bounds(2).unwrap();
    let fa3 = free_abelian_bounds(3).unwrap();
    let c4 = cyclic_bounds(4).unwrap();
    let ints = |r: &BoundReport| (r.lower.integer, r.upper.integer);
    Outcome::from_checks(vec![
        (kw_free(1).unwrap() == 3, "KW(Z) = 3".into()),
        (
            [(1, true, 7), (2, true, 9), (2, false, 8), (3, false, 9)]
                .iter()
                .all(|&(g, o, v)| kw_surface(g, o).unwrap() == v),
            "kw_surface g=1,2 -> 7,9; q=2,3 -> 8,9".into(),
        ),
        (chromatic_number(2, true).unwrap() == 10, "chromatic value for genus 2 is 10".into()),
        (ints(&fa2) == (Some(4), Some(7)), format!("free abelian 2: {:?}", ints(&fa2))),
        (ints(&fa3) == (Some(5), Some(13)), format!("free abelian 3: {:?}", ints(&fa3))),
        (
            c4.upper.integer == Some(12) && c4.extra("direct_disk_upper").and_then(|e| e.integer) == Some(11),
            "Z/4 upper 12, direct disk 11".into(),
        ),
        (z2_sum_bounds(2).unwrap().upper.integer == Some(13), "(Z/2)^2 upper 13".into()),
    ])
}

fn c9_geometry() -> Outcome {
    let s = systolic_bounds(6, true).unwrap();
    let entropy = [
        (3, 1.902_852_301_792_692),
        (4, 3.696_784_962_986_375),
        (6, 8.777_792_882_817_504),
        (8, 15.684_130_295_496_755),
        (10, 24.271_378_000_706_003),
    ];
    let free = [
        (1, 0.0),
        (2, 2.079_441_541_679_835_9),
        (3, 4.158_883_083_359_671_9),
        (5, 8.317_766_166_719_343),
        (10, 18.714_973_875_118_523),
    ];
    let counts = [
        (2.0, 24.0),
        (3.0, 128.381_962_558_413_65),
        (6.0, 1_675.055_700_467_309_2),
        (7.5, 3_679.033_410_067_031),
        (10.0, 9_965.784_284_662_087),
    ];
    Outcome::from_checks(vec![
        (
            rel(s.lower.value, 1.0 / 96.0) < GEOMETRY_REL_TOL && rel(s.upper.value, 8.0 / std::f64::consts::PI) < GEOMETRY_REL_TOL,
            "systolic(6) = (1/96, 8/pi)".into(),
        ),
        (
            entropy.iter().all(|&(k, v)| rel(entropy_upper(k).unwrap().stated, v) < GEOMETRY_REL_TOL),
            "entropy_upper at 3,4,6,8,10".into(),
        ),
        (
            free.iter().all(|&(n, v)| rel(free_entropy(n).unwrap(), v) < GEOMETRY_REL_TOL),
            "free_entropy at 1,2,3,5,10".into(),
        ),
        (
            counts.iter().all(|&(t, v)| rel(group_count_log2(t).unwrap().exponent, v) < GEOMETRY_REL_TOL),
            "group_count_log2 at 2,3,6,7.5,10".into(),
        ),
    ])
}

fn c10_search() -> Outcome {
    let e = enumerate(&EnumerationConstraints::up_to(5).connected(), Parallelism::Serial).unwrap();
    let total = e.complexes.len();
    let torsion_free = e.complexes.iter().all(|k| homology(k).h1_torsion.is_trivial());
    let non_collapsible: Vec<&Complex2> = e.complexes.iter().filter(|k| !is_collapsible_to_graph(k)).collect();
    let verdicts: Vec<FreenessVerdict> = e.complexes.iter().map(freeness_screen).collect();
    let all_free = verdicts.iter().all(|v| *v == FreenessVerdict::Free);
    let undecided = verdicts.iter().filter(|v| **v == FreenessVerdict::Undecided).count();
    let smallest_bad = non_collapsible.iter().map(|k| k.vertex_count()).min();
    let sphere = Complex2::from_triangles(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]);
    let sphere_is_counterexample = non_collapsible.iter().any(|k| is_isomorphic(k, &sphere));

    let q = SurfaceQuery {
        vertices: 7,
        orientable: Some(true),
        euler_characteristic: Some(0),
    };
    let (tori, _) = closed_surfaces(&q, Parallelism::Threads(4)).unwrap();
    let torus_ok = tori.len() == 1 && tori[0] == canonical_form(&minimal_torus());

    let nerve_ok = e.complexes.iter().all(|k| {
        let n = k.star_cover_nerve();
        n == *k && n.star_cover_nerve() == n
    });

    let literal = torsion_free && non_collapsible.is_empty() && undecided == 0;
    let intended = torsion_free && all_free && undecided == 0;
    let mut o = Outcome::from_checks(vec![
        (
            literal,
            format!(
                "(a) literal: {total} connected complexes on <= 5 vertices, torsion-free {torsion_free}, {} not collapsible to a graph (smallest on {smallest_bad:?} vertices, tetrahedron boundary among them: {sphere_is_counterexample})",
                non_collapsible.len()
            ),
        ),
        (intended, format!("(a) freeness screen: all Free {all_free}, Undecided {undecided}")),
        (torus_ok, format!("(b) {} orientable chi=0 class on 7 vertices, equal to minimal_torus()", tori.len())),
        (nerve_ok, format!("(c) nerve(K) = K and nerve idempotent on all {total}")),
    ]);
    o.accepted_failure = !literal && sphere_is_counterexample && intended && torus_ok && nerve_ok;
    o
}

fn c11_coherence(corpus: &Corpus) -> Outcome {
    let mut bad = Vec::new();
    for (name, k) in corpus {
        let h = homology(k);
        let chi = k.euler_characteristic().unwrap();
        if ab(k) != h.h1() || chi != h.euler_characteristic() || h.b0 != 1 {
            bad.push(name.clone());
        }
    }
    Outcome::from_checks(vec![(
        bad.is_empty(),
        format!("{} constructed complexes: edge-path abelianization = H1, chi = b0 - b1 + b2; failing {bad:?}", corpus.len()),
    )])
}

#[test]
fn acceptance() {
    let mut corpus: Corpus = Vec::new();
    let mut rows: Vec<(u32, &str, Duration, Duration, Outcome)> = Vec::new();
    let secs = Duration::from_secs;
    macro_rules! run {
        ($n:expr, $name:expr, $limit:expr, $body:expr) => {{
            let t = Instant::now();
            let o = $body;
            rows.push(($n, $name, t.elapsed(), $limit, o));
        }};
    }
    run!(1, "canonical complexes", secs(1), c1_canonical(&mut corpus));
    run!(2, "genus-2 gluing", secs(1), c2_genus2(&mut corpus));
    run!(3, "gluing sufficiency vs necessity", secs(10), c3_gluing_conditions(&mut corpus));
    run!(4, "right-angled vertex counts", secs(30), c4_right_angled(&mut corpus));
    run!(5, "telescope algebra", secs(10), c5_telescope(&mut corpus));
    run!(6, "cyclic complexes", secs(60), c6_cyclic(&mut corpus));
    run!(7, "relator and large-type battery", secs(120), c7_battery(&mut corpus));
    run!(8, "bound formulas", secs(1), c8_formulas());
    run!(9, "geometric evaluators", secs(1), c9_geometry());
    run!(10, "search certifications", secs(600), c10_search());
    let t = Instant::now();
    let o = c11_coherence(&corpus);
    rows.push((11, "cross-oracle coherence", t.elapsed(), secs(120), o));

    let mut unexpected = Vec::new();
    for (n, name, took, limit, o) in &rows {
        let in_time = took <= limit;
        let pass = o.pass && in_time;
        let status = if pass { "PASS" } else { "FAIL" };
        let time_note = if in_time { String::new() } else { format!(" over the {limit:?} limit") };
        println!("{status} {n:>2} {name}: {} [{took:.2?}{time_note}]", o.detail);
        if !pass && !(o.accepted_failure && in_time) {
            unexpected.push(*n);
        }
    }
    assert!(unexpected.is_empty(), "criteria failed: {unexpected:?}");
}
