//! Published values, recomputed with the ungraded subspace calculus.

mod common;

use common::{alg, orbit_by_diagram, orbit_by_label};
use lieorb::liealg::Subspace;
use lieorb::orbits::{dynkin_test, orbit_dimension, WeightedDynkinDiagram};
use lieorb::reach::analyze;
use lieorb::Q;

#[test]
fn e7_a3_a2_worked_example() {
    let l = alg("E7");
    let o = orbit_by_diagram(&l, &[0, 0, 0, 1, 0, 1, 0]);
    let ge = l.centralizer(&o.triple.e).unwrap();
    assert_eq!(ge.dim(), 35);
    let g = o.grading(&l).unwrap();
    assert_eq!(g.dim(0) + g.dim(1), 35);
    let d = l.derived_subalgebra(&ge).unwrap();
    assert_eq!(d.dim(), 33);
    assert!(!d.contains(&o.triple.e));
    assert_eq!(d.intersect(&g.piece(2)).unwrap().dim(), 7);
    let (dim, w) = l.quotient_with_action(&ge, &d, &o.triple.h).unwrap();
    assert_eq!((dim, w), (2, vec![0, 2]));
}

#[test]
fn derived_is_an_ideal_of_the_centralizer() {
    let l = alg("E7");
    let o = orbit_by_diagram(&l, &[0, 0, 0, 1, 0, 1, 0]);
    let ge = l.centralizer(&o.triple.e).unwrap();
    let d = l.derived_subalgebra(&ge).unwrap();
    assert!(ge.contains_subspace(&d));
    for x in ge.basis() {
        for y in d.basis() {
            assert!(d.contains_vec(&l.bracket_vec(x, y)));
        }
    }
}

#[test]
fn g2_bullet_pair() {
    // the orbit with dim g_e = 6; named A1 in the bullet list and Ã1 in Bourbaki-based naming
    let l = alg("G2");
    let o = orbit_by_diagram(&l, &[1, 0]);
    let ge = l.centralizer(&o.triple.e).unwrap();
    assert_eq!(ge.dim(), 6);
    assert_eq!(l.derived_subalgebra(&ge).unwrap().dim(), 5);
    assert_eq!(orbit_dimension(&l, &o).unwrap(), 8);
}

#[test]
fn f4_a2t_a1_bullet_pair() {
    let l = alg("F4");
    let o = orbit_by_label(&l, "Ã2+A1");
    let ge = l.centralizer(&o.triple.e).unwrap();
    assert_eq!(ge.dim(), 16);
    assert_eq!(l.derived_subalgebra(&ge).unwrap().dim(), 15);
}

#[test]
fn e8_a3_a1_centralizer() {
    let l = alg("E8");
    let o = orbit_by_label(&l, "A3+A1");
    assert_eq!(l.centralizer(&o.triple.e).unwrap().dim(), 84);
    let a = analyze(&l, &o).unwrap();
    assert_eq!((a.dim_ge, a.dim_derived), (84, 83));
    assert!(a.e_spans_quotient());
}

#[test]
fn e6_d4_a1_quotient() {
    let l = alg("E6");
    let o = orbit_by_label(&l, "D4(a1)");
    let ge = l.centralizer(&o.triple.e).unwrap();
    let d = l.derived_subalgebra(&ge).unwrap();
    assert_eq!(l.quotient_with_action(&ge, &d, &o.triple.h).unwrap(), (5, vec![0, 0, 2, 2, 2]));
}

#[test]
fn e8_regular_quotient() {
    let l = alg("E8");
    let o = orbit_by_label(&l, "E8");
    let ge = l.centralizer(&o.triple.e).unwrap();
    assert_eq!(ge.dim(), 8);
    let d = l.derived_subalgebra(&ge).unwrap();
    assert_eq!(d.dim(), 0);
    let (dim, w) = l.quotient_with_action(&ge, &d, &o.triple.h).unwrap();
    assert_eq!((dim, w), (8, vec![2, 14, 22, 26, 34, 38, 46, 58]));
    assert_eq!(orbit_dimension(&l, &o).unwrap(), 240);
}

#[test]
fn e8_minimal_diagram_passes_dynkin_test() {
    let l = alg("E8");
    let d = WeightedDynkinDiagram::new(8, &[0, 0, 0, 0, 0, 0, 0, 1]).unwrap();
    assert!(dynkin_test(&l, &d, 25, 1).unwrap());
}

#[test]
fn reachable_analyses_from_tables() {
    let e6 = alg("E6");
    let a = analyze(&e6, &orbit_by_label(&e6, "2A2+A1")).unwrap();
    assert!(a.reachable && a.strongly_reachable);

    let e7 = alg("E7");
    let a = analyze(&e7, &orbit_by_label(&e7, "A4+A1")).unwrap();
    assert!(a.reachable && !a.strongly_reachable);
    assert_eq!((a.dim_ce, a.ce_weights.clone()), (2, vec![0, 0]));

    let a = analyze(&e7, &orbit_by_label(&e7, "A3+A2")).unwrap();
    assert!(!a.reachable);
    assert_eq!((a.dim_ge, a.dim_derived, a.dim_ce, a.ce_weights.clone()), (35, 33, 2, vec![0, 2]));
    assert_eq!(a.degree(2).unwrap().dim_derived, 7);
}

#[test]
fn closure_of_g1e_for_a_reachable_orbit() {
    let l = alg("E7");
    let o = orbit_by_label(&l, "A4+A1");
    let ge = l.centralizer(&o.triple.e).unwrap();
    let g = o.grading(&l).unwrap();
    let g1e = g.piece(1).intersect(&ge).unwrap();
    let positive = Subspace::<Q>::span(
        l.dim(),
        g.degrees().filter(|&k| k >= 1).flat_map(|k| g.indices(k).to_vec()).map(|i| lieorb::Element::<Q>::basis(l.dim(), i).coeffs),
    );
    let ge_pos = positive.intersect(&ge).unwrap();
    let closure = l.subalgebra_closure(&g1e.basis_elements(), Some(&ge_pos)).unwrap();
    assert_eq!(closure, ge_pos);
}
