use std::collections::HashMap;

use num_complex::Complex64;
use nsstqft::diagram::fixtures::{self, component};
use nsstqft::diagram::schema::DiagramSpec;
use nsstqft::diagram::{
    check_cohomology_compatibility, evaluate, evaluate_raw, CapKind, CupKind, Slice, SlicedDiagram,
    Strand,
};
use nsstqft::linalg::{identity, kron, residual, CMatrix};
use nsstqft::repcat::{categorical_dimension, make_valpha, ColorLabel};
use nsstqft::{Error, RootParams};

fn v(re: f64, im: f64) -> ColorLabel {
    ColorLabel::Valpha(Complex64::new(re, im))
}

fn comps(list: &[(&str, ColorLabel)]) -> Vec<nsstqft::diagram::Component> {
    list.iter().map(|(n, c)| component(n, c.clone(), None)).collect()
}

#[test]
fn id_slice_typechecks() {
    let d = SlicedDiagram::new(comps(&[("K", v(0.3, 0.0))]), vec![Strand::up(0)], vec![Slice::Id]).unwrap();
    let words = d.typecheck().unwrap();
    assert_eq!(words.len(), 2);
    assert_eq!(words[1], vec![Strand::up(0)]);
}

#[test]
fn clashing_cap_is_a_type_error() {
    let r = SlicedDiagram::closed(
        comps(&[("K", v(0.3, 0.0))]),
        vec![Slice::cup(0, 0, CupKind::Coev), Slice::Id, Slice::cap(0, CapKind::Ev)],
    );
    match r {
        Err(Error::Type { slice, .. }) => assert_eq!(slice, 2),
        other => panic!("expected a type error, got {other:?}"),
    }
}

#[test]
fn unknot_evaluates_to_categorical_dimension() {
    for r in [2, 3, 5] {
        let ctx = RootParams::new(r).unwrap();
        let d = fixtures::unknot(v(0.37, 0.1), None);
        assert!(d.is_closed());
        let m = evaluate(&ctx, &d).unwrap();
        assert_eq!(m.matrix.shape(), (1, 1));
        let expected = categorical_dimension(&make_valpha(&ctx, Complex64::new(0.37, 0.1)).unwrap());
        assert!((m.matrix[(0, 0)] - expected).norm() < 1e-10);
        assert!(m.matrix[(0, 0)].norm() < 1e-10);
    }
}

#[test]
fn curls_are_twists() {
    for r in [2, 3, 5, 7] {
        let ctx = RootParams::new(r).unwrap();
        let alpha = Complex64::new(0.42, -0.05);
        let theta = ctx.twist_scalar(alpha).unwrap();
        let n = r as usize;
        let pos = evaluate_raw(&ctx, &fixtures::curl(ColorLabel::Valpha(alpha), 1)).unwrap();
        assert!(residual(&pos, &(identity(n) * theta)) < 1e-10);
        let neg = evaluate_raw(&ctx, &fixtures::curl(ColorLabel::Valpha(alpha), -1)).unwrap();
        assert!(residual(&neg, &(identity(n) / theta)) < 1e-10);
        // With framing 0 requested the curl is straightened out.
        let mut d = fixtures::curl(ColorLabel::Valpha(alpha), 1);
        d.components[0].framing = Some(0);
        assert!(residual(&evaluate(&ctx, &d).unwrap().matrix, &identity(n)) < 1e-10);
    }
}

#[test]
fn zigzag_is_identity() {
    let ctx = RootParams::new(5).unwrap();
    let m = evaluate_raw(&ctx, &fixtures::zigzag(v(1.3, 0.2))).unwrap();
    assert!(residual(&m, &identity(5)) < 1e-10);
}

fn open(components: Vec<nsstqft::diagram::Component>, source: Vec<Strand>, slices: Vec<Slice>) -> SlicedDiagram {
    SlicedDiagram::new(components, source, slices).unwrap()
}

#[test]
fn reidemeister_two_and_three() {
    let ctx = RootParams::new(3).unwrap();
    let cs = comps(&[("A", v(0.2, 0.0)), ("B", v(-0.7, 0.1)), ("C", v(1.1, 0.0))]);
    let src = vec![Strand::up(0), Strand::down(1), Strand::up(2)];
    let r2 = open(cs.clone(), src.clone(), vec![Slice::braid(1, 1), Slice::braid(1, -1)]);
    assert!(residual(&evaluate_raw(&ctx, &r2).unwrap(), &identity(27)) < 1e-10);
    let lhs = open(cs.clone(), src.clone(), vec![Slice::braid(0, 1), Slice::braid(1, 1), Slice::braid(0, 1)]);
    let rhs = open(cs, src, vec![Slice::braid(1, 1), Slice::braid(0, 1), Slice::braid(1, 1)]);
    let (a, b) = (evaluate_raw(&ctx, &lhs).unwrap(), evaluate_raw(&ctx, &rhs).unwrap());
    assert!(residual(&a, &b) < 1e-10);
}

#[test]
fn functoriality_and_monoidality() {
    let ctx = RootParams::new(3).unwrap();
    let cs = comps(&[("A", v(0.2, 0.0)), ("B", v(0.55, 0.0))]);
    let src = vec![Strand::up(0), Strand::up(1)];
    let d1 = open(cs.clone(), src.clone(), vec![Slice::braid(0, 1)]);
    let d2 = open(cs, d1.target.clone(), vec![Slice::braid(0, -1), Slice::braid(0, 1)]);
    let both = d1.then(&d2).unwrap();
    let m1 = evaluate_raw(&ctx, &d1).unwrap();
    let m2 = evaluate_raw(&ctx, &d2).unwrap();
    assert!(residual(&evaluate_raw(&ctx, &both).unwrap(), &(&m2 * &m1)) < 1e-10);

    let c1 = fixtures::curl(v(0.3, 0.0), 1);
    let c2 = fixtures::zigzag(v(-0.4, 0.0));
    let side = c1.beside(&c2).unwrap();
    let expected = kron(&evaluate_raw(&ctx, &c1).unwrap(), &evaluate_raw(&ctx, &c2).unwrap());
    assert!(residual(&evaluate_raw(&ctx, &side).unwrap(), &expected) < 1e-10);
}

#[test]
fn coupon_slides_past_identity_and_cups() {
    let ctx = RootParams::new(3).unwrap();
    let cs = comps(&[("A", v(0.2, 0.0)), ("B", v(0.55, 0.0))]);
    let m = CMatrix::from_fn(3, 3, |i, j| Complex64::new((i + 2 * j) as f64, i as f64 - j as f64));
    let coupon = Slice::Coupon {
        pos: 0,
        inputs: vec![Strand::up(0)],
        outputs: vec![Strand::up(0)],
        matrix: m,
    };
    let early = open(
        cs.clone(),
        vec![Strand::up(0)],
        vec![coupon.clone(), Slice::Id, Slice::cup(1, 1, CupKind::Coev)],
    );
    let late = open(
        cs,
        vec![Strand::up(0)],
        vec![Slice::cup(1, 1, CupKind::Coev), Slice::Id, coupon],
    );
    let (a, b) = (evaluate_raw(&ctx, &early).unwrap(), evaluate_raw(&ctx, &late).unwrap());
    assert!(residual(&a, &b) < 1e-12);
}

#[test]
fn cohomology_compatibility_examples() {
    let ctx = RootParams::new(2).unwrap();
    let alpha = Complex64::new(0.3, 0.0);
    let d = fixtures::unknot(ColorLabel::Valpha(alpha), None);
    assert!(check_cohomology_compatibility(&ctx, &d, &[alpha + 1.0]));
    assert!(!check_cohomology_compatibility(&ctx, &d, &[alpha]));
    let s = fixtures::unknot(ColorLabel::Sigma(1), None);
    assert!(check_cohomology_compatibility(&ctx, &s, &[Complex64::new(0.0, 0.0)]));
}

#[test]
fn writhe_and_linking() {
    let (_, trefoil) = &fixtures::trefoil_variants(v(0.3, 0.0))[0];
    assert_eq!(trefoil.writhes().unwrap(), vec![3]);
    let hopf = fixtures::hopf(v(0.3, 0.0), v(0.6, 0.0));
    assert_eq!(hopf.linking_matrix().unwrap(), vec![vec![0, 1], vec![1, 0]]);
    assert_eq!(hopf.writhes().unwrap(), vec![0, 0]);
    let (_, fig8) = &fixtures::figure_eight_variants(v(0.3, 0.0))[0];
    assert_eq!(fig8.writhes().unwrap(), vec![0]);
}

#[test]
fn schema_round_trip() {
    let (_, d) = fixtures::trefoil_variants(v(1.0 / 3.0, 0.0)).remove(1);
    let spec = DiagramSpec::from(&d);
    let text = serde_json::to_string_pretty(&spec).unwrap();
    assert!(text.contains("width-changes"));
    let back = DiagramSpec::parse(&text).unwrap().build(&HashMap::new()).unwrap();
    assert_eq!(back, d);
}

#[test]
fn schema_errors_name_the_field() {
    let text = r#"{"components": [{"name": "K"}], "width-changes": [{"kind": "cup", "pos": 0}]}"#;
    match DiagramSpec::parse(text) {
        Err(Error::Schema(msg)) => assert!(msg.contains("width-changes"), "{msg}"),
        other => panic!("{other:?}"),
    }
}
