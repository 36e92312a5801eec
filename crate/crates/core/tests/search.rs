use kwcomplex::canonical::{canonical_form, is_isomorphic};
use kwcomplex::constructions::{genus2_surface, minimal_rp2, minimal_torus};
use kwcomplex::homology::betti_bound_check;
use kwcomplex::search::*;
use kwcomplex::complex::Violation;

fn surfaces(n: usize, orientable: Option<bool>, chi: i64, par: Parallelism) -> Vec<kwcomplex::CanonicalComplex> {
    let q = SurfaceQuery {
        vertices: n,
        orientable,
        euler_characteristic: Some(chi),
    };
    closed_surfaces(&q, par).unwrap().0
}

// Counts from the published census of combinatorial surfaces on few vertices.
#[test]
fn census_counts_on_eight_vertices() {
    let par = Parallelism::Threads(4);
    assert_eq!(surfaces(8, Some(true), 2, par).len(), 14);
    assert_eq!(surfaces(8, Some(true), 0, par).len(), 7);
    assert_eq!(surfaces(7, Some(false), 1, par).len(), 3);
    assert_eq!(surfaces(8, Some(false), 1, par).len(), 16);
    assert_eq!(surfaces(8, Some(false), 0, par).len(), 6);
    assert!(surfaces(7, Some(false), 0, par).is_empty());
}

#[test]
fn unoriented_query_is_union_of_both_kinds() {
    let par = Parallelism::Threads(2);
    let all = surfaces(8, None, 0, par);
    let mut split = surfaces(8, Some(true), 0, par);
    split.extend(surfaces(8, Some(false), 0, par));
    split.sort();
    assert_eq!(all, split);
}

#[test]
fn genus_two_needs_ten_vertices() {
    let property: Property = "surface:chi=-2,orientable".parse().unwrap();
    let r = certify_min_vertices(&property, 4, 10, true, Parallelism::Threads(4)).unwrap();
    assert_eq!(r.minimal_vertex_count, Some(10));
    assert!(r.exhaustively_checked_below);
    let last = r.levels.last().unwrap();
    assert_eq!(last.matches, 865);
    let w = r.witness.unwrap();
    let report = w.classify_surface();
    assert_eq!((report.orientable, report.genus), (Some(true), Some(2)));
    let all = surfaces(10, Some(true), -2, Parallelism::Threads(4));
    assert!(all.contains(&canonical_form(&genus2_surface())));
}

#[test]
fn over_cap_needs_acknowledgment() {
    let property: Property = "surface:chi=-2,orientable".parse().unwrap();
    let e = certify_min_vertices(&property, 4, 10, false, Parallelism::Serial).unwrap_err();
    assert_eq!(e, SearchError::CapExceeded { requested: 10, cap: 8 });
}

#[test]
fn torus_certified_at_seven() {
    let property: Property = "surface:chi=0,orientable".parse().unwrap();
    let r = certify_min_vertices(&property, 1, 8, false, Parallelism::Threads(4)).unwrap();
    assert_eq!(r.minimal_vertex_count, Some(7));
    assert!(is_isomorphic(r.witness.as_ref().unwrap(), &minimal_torus()));
}

#[test]
fn non_free_certified_at_six() {
    let r = certify_min_vertices(&Property::NonFree, 1, 6, false, Parallelism::Threads(4)).unwrap();
    assert_eq!(r.minimal_vertex_count, Some(6));
    assert!(r.exhaustively_checked_below);
    assert!(r.undecided.is_empty());
    assert_eq!(r.levels.last().unwrap().matches, 1);
    assert!(is_isomorphic(r.witness.as_ref().unwrap(), &minimal_rp2()));
}

#[test]
fn b2_needs_four_vertices() {
    let r = certify_min_vertices(&"b2>=1".parse().unwrap(), 1, 6, false, Parallelism::Serial).unwrap();
    assert_eq!(r.minimal_vertex_count, Some(4));
    assert_eq!(r.witness.unwrap().f_vector(), (4, 6, 4));
}

#[test]
fn parallel_matches_serial() {
    for c in [
        EnumerationConstraints::up_to(5),
        EnumerationConstraints::up_to(6).connected().pure2(),
        EnumerationConstraints::exactly(7).closed_surface(None, None),
    ] {
        let a = enumerate(&c, Parallelism::Serial).unwrap();
        let b = enumerate(&c, Parallelism::Threads(3)).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn enumerated_complexes_are_valid_and_distinct() {
    let e = enumerate(&EnumerationConstraints::up_to(5), Parallelism::Threads(4)).unwrap();
    let mut keys: Vec<_> = e.complexes.iter().map(canonical_form).collect();
    let total = keys.len();
    keys.sort();
    keys.dedup();
    assert_eq!(keys.len(), total);
    for k in &e.complexes {
        let report = k.validate();
        if k.is_connected() {
            assert!(report.is_empty());
        } else {
            assert!(report.violations.iter().all(|v| matches!(v, Violation::Disconnected { .. })));
        }
        assert!(betti_bound_check(k));
    }
}

#[test]
fn five_vertex_count_matches_naive_enumerator() {
    for pure2 in [false, true] {
        let mut c = EnumerationConstraints::exactly(5).connected();
        if pure2 {
            c = c.pure2();
        }
        let e = enumerate(&c, Parallelism::Threads(4)).unwrap();
        assert_eq!(e.complexes.len(), naive_count(5, pure2, true), "pure2={pure2}");
    }
}

#[test]
fn homology_filter_restricts_enumeration() {
    let c = EnumerationConstraints::up_to(6)
        .connected()
        .pure2()
        .with_homology(HomologyFilter::TorsionContains(2));
    let e = enumerate(&c, Parallelism::Threads(4)).unwrap();
    assert_eq!(e.complexes.len(), 1);
    assert_eq!(e.stats.per_vertex_count.last(), Some(&(6, 1)));
}
