use num_complex::Complex64;
use nsstqft::diagram::fixtures::{self, braid_closure, with_framings};
use nsstqft::invariant::fixtures as sf;
use nsstqft::invariant::schema::SurgerySpec;
use nsstqft::invariant::{
    computability_check, f_prime, f_prime_all_cuts, handle_slide, handle_slide_with, linking_data,
    z_invariant, z_invariant_with, SlideMode, SurgeryPresentation,
};
use nsstqft::repcat::ColorLabel;
use nsstqft::{Error, Exec, RootParams};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1e-300)
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
}

#[test]
fn unknot_is_modified_dimension() {
    for r in [2, 3, 5, 6] {
        let ctx = RootParams::new(r).unwrap();
        let alpha = c(0.31, 0.07);
        let d = fixtures::unknot(ColorLabel::Valpha(alpha), Some(0));
        let v = f_prime(&ctx, &d, 0).unwrap();
        assert!(close(v, ctx.mdim(alpha).unwrap(), 1e-10), "r={r}");
    }
}

#[test]
fn split_unlink_vanishes() {
    let ctx = RootParams::new(3).unwrap();
    let a = ColorLabel::Valpha(c(0.4, 0.0));
    let d = fixtures::unlink(&[a.clone(), a]);
    for cut in [0, 1] {
        assert!(f_prime(&ctx, &d, cut).unwrap().norm() < 1e-10);
    }
}

#[test]
fn non_projective_cut_is_a_domain_error() {
    let ctx = RootParams::new(3).unwrap();
    let d = fixtures::unknot(ColorLabel::Sigma(1), None);
    assert!(matches!(f_prime(&ctx, &d, 0), Err(Error::Domain(_))));
}

#[test]
fn trefoil_and_figure_eight_diagrams_agree() {
    for r in [2, 3, 5] {
        let ctx = RootParams::new(r).unwrap();
        let color = ColorLabel::Valpha(c(0.29, 0.03));
        for family in [fixtures::trefoil_variants(color.clone()), fixtures::figure_eight_variants(color.clone())] {
            let values: Vec<Complex64> = family.iter().map(|(_, d)| f_prime(&ctx, d, 0).unwrap()).collect();
            for (k, v) in values.iter().enumerate() {
                assert!(rel(*v, values[0]) < 1e-9, "r={r} variant {}: {v} vs {}", family[k].0, values[0]);
            }
        }
    }
}

#[test]
fn trefoil_is_not_the_unknot() {
    let ctx = RootParams::new(3).unwrap();
    let alpha = c(0.29, 0.0);
    let (_, t) = &fixtures::trefoil_variants(ColorLabel::Valpha(alpha))[0];
    let v = f_prime(&ctx, t, 0).unwrap();
    assert!(rel(v, ctx.mdim(alpha).unwrap()) > 1e-3);
}

#[test]
fn cut_choice_does_not_matter() {
    for r in [2, 3, 5] {
        let ctx = RootParams::new(r).unwrap();
        let hopf = with_framings(
            fixtures::hopf(ColorLabel::Valpha(c(0.3, 0.0)), ColorLabel::Valpha(c(-0.45, 0.1))),
            &[0, 0],
        );
        let three = with_framings(
            braid_closure(
                3,
                &[(0, 1), (0, 1), (1, -1), (1, -1), (1, -1)],
                &[ColorLabel::Valpha(c(0.2, 0.0)), ColorLabel::Valpha(c(0.65, -0.05))],
            )
            .unwrap(),
            &[1, -2],
        );
        for d in [hopf, three] {
            let cuts = f_prime_all_cuts(&ctx, &d).unwrap();
            assert!(cuts.len() >= 2);
            for (_, v) in &cuts {
                assert!(rel(*v, cuts[0].1) < 1e-9, "r={r}: {cuts:?}");
            }
        }
    }
}

#[test]
fn framing_change_multiplies_by_twist() {
    let ctx = RootParams::new(5).unwrap();
    let alpha = c(0.23, 0.0);
    let (_, d) = fixtures::trefoil_variants(ColorLabel::Valpha(alpha)).remove(0);
    let mut d1 = d.clone();
    d1.components[0].framing = Some(1);
    let ratio = f_prime(&ctx, &d1, 0).unwrap() / f_prime(&ctx, &d, 0).unwrap();
    assert!(rel(ratio, ctx.twist_scalar(alpha).unwrap()) < 1e-10);
}

#[test]
fn linking_data_examples() {
    let zero = linking_data(&sf::framed_unknot(0, c(0.5, 0.0))).unwrap();
    assert_eq!((zero.signature_pair, zero.nullity), ((0, 0), 1));
    let pos = linking_data(&sf::framed_unknot(3, c(2.0 / 3.0, 0.0))).unwrap();
    assert_eq!((pos.signature_pair, pos.nullity), ((1, 0), 0));
    let hopf = linking_data(&sf::hopf2((0, 0), (c(0.5, 0.0), c(0.5, 0.0)))).unwrap();
    assert_eq!(hopf.matrix, vec![vec![0, 1], vec![1, 0]]);
    assert_eq!((hopf.signature_pair, hopf.sigma), ((1, 1), 0));
}

#[test]
fn computability_examples() {
    let ctx = RootParams::new(3).unwrap();
    assert!(computability_check(&ctx, &sf::colored_unknot(3, c(0.3, 0.0))));
    assert!(computability_check(&ctx, &sf::framed_unknot(0, c(0.5, 0.0))));
    for mu in [0.5, 0.25, 0.7] {
        assert!(!computability_check(&ctx, &sf::framed_unknot(1, c(mu, 0.0))));
    }
    assert!(matches!(
        z_invariant(&ctx, &sf::framed_unknot(1, c(0.5, 0.0))),
        Err(Error::NotComputable(_))
    ));
}

#[test]
fn colored_unknot_in_s3() {
    for r in [2, 3, 5] {
        let ctx = RootParams::new(r).unwrap();
        let alpha = c(0.41, -0.02);
        let z = z_invariant(&ctx, &sf::colored_unknot(r, alpha)).unwrap();
        let expected = ctx.constants().eta * ctx.mdim(alpha).unwrap();
        assert!(close(z.z, expected, 1e-10));
    }
}

#[test]
fn s1xs2_closed_form() {
    for r in [2, 3, 5] {
        let ctx = RootParams::new(r).unwrap();
        let beta = c(0.37, 0.05);
        let z = z_invariant(&ctx, &sf::s1xs2(beta)).unwrap();
        let k = ctx.constants();
        let sum: Complex64 = ctx
            .h_r_set()
            .iter()
            .map(|&h| ctx.mdim(beta + h as f64).unwrap().powi(2))
            .sum();
        assert!(close(z.z, k.eta * k.lambda * sum, 1e-10), "r={r}");
        assert_eq!((z.m, z.linking.nullity), (1, 1));
    }
}

#[test]
fn two_normalizations_agree() {
    for r in [2, 3, 5] {
        let ctx = RootParams::new(r).unwrap();
        let mut cases: Vec<SurgeryPresentation> = sf::slide_family().into_iter().map(|(_, sp)| sp).collect();
        cases.push(sf::lens_7_1(2));
        cases.push(sf::lens_7_2(3));
        cases.push(sf::s1xs2(c(0.21, 0.0)));
        for sp in cases {
            let z = z_invariant(&ctx, &sp).unwrap();
            assert!(close(z.z, z.z_defi, 1e-9), "r={r}");
        }
    }
}

#[test]
fn lift_shift_invariance() {
    for r in [2, 3, 5] {
        let ctx = RootParams::new(r).unwrap();
        for (name, sp) in sf::slide_family() {
            let base = z_invariant(&ctx, &sp).unwrap().z;
            for comp in 0..2 {
                let mut shifted = sp.clone();
                shifted.meridians[comp] += 2.0;
                let shifted = SurgeryPresentation::new(
                    shifted.diagram,
                    shifted.surgery,
                    shifted.meridians,
                    shifted.signature_defect,
                )
                .unwrap();
                let z = z_invariant(&ctx, &shifted).unwrap().z;
                assert!(close(z, base, 1e-8), "r={r} {name} comp {comp}: {z} vs {base}");
            }
        }
    }
}

#[test]
fn handle_slides_preserve_z() {
    for r in [2, 3, 5] {
        let ctx = RootParams::new(r).unwrap();
        for (name, sp) in sf::slide_family() {
            let base = z_invariant(&ctx, &sp).unwrap().z;
            for (i, j) in [(0, 1), (1, 0)] {
                let slid = handle_slide(&sp, i, j).unwrap();
                assert!(computability_check(&ctx, &slid), "{name}");
                let z = z_invariant(&ctx, &slid).unwrap().z;
                assert!(close(z, base, 1e-8), "r={r} {name} slide {i} over {j}: {z} vs {base}");
            }
        }
    }
}


#[test]
fn slide_framing_arithmetic() {
    let sp = sf::unlink2((3, 5), (c(2.0 / 3.0, 0.0), c(2.0 / 5.0, 0.0)));
    let slid = handle_slide(&sp, 0, 1).unwrap();
    assert_eq!(slid.framings(), vec![8, 5]);
    let lk = linking_data(&slid).unwrap();
    assert_eq!(lk.matrix[0][1].abs(), 5);
}

#[test]
fn slide_then_inverse_slide() {
    let ctx = RootParams::new(3).unwrap();
    let sp = sf::hopf2((2, 3), (c(2.0 / 5.0, 0.0), c(-4.0 / 5.0, 0.0)));
    let base = z_invariant(&ctx, &sp).unwrap().z;
    let once = handle_slide_with(&sp, 0, 1, SlideMode::Add).unwrap();
    let twice = handle_slide_with(&once, 0, 1, SlideMode::Subtract).unwrap();
    let lk0 = linking_data(&sp).unwrap();
    let lk2 = linking_data(&twice).unwrap();
    assert_eq!(lk2.matrix[0][0], lk0.matrix[0][0]);
    let z = z_invariant(&ctx, &twice).unwrap().z;
    assert!(close(z, base, 1e-8));
}

#[test]
fn sequential_and_parallel_agree_bitwise() {
    let ctx = RootParams::new(5).unwrap();
    let sp = sf::hopf2((2, 3), (c(2.0 / 5.0, 0.0), c(-4.0 / 5.0, 0.0)));
    let a = z_invariant_with(&ctx, &sp, Exec::Sequential).unwrap();
    let b = z_invariant_with(&ctx, &sp, Exec::Parallel).unwrap();
    assert_eq!(a.z, b.z);
}

#[test]
fn surgery_schema_round_trip() {
    let ctx = RootParams::new(3).unwrap();
    let sp = sf::lens_7_2(1);
    let text = serde_json::to_string(&SurgerySpec::from(&sp)).unwrap();
    let back = SurgerySpec::parse(&text).unwrap().build(&ctx, None).unwrap();
    assert_eq!(back, sp);
}
