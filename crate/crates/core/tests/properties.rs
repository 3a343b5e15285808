use num_complex::Complex64;
use nsstqft::diagram::fixtures as dfx;
use nsstqft::diagram::{evaluate_raw, Slice, SlicedDiagram, Strand};
use nsstqft::invariant::fixtures as sf;
use nsstqft::invariant::{f_prime, z_invariant, SurgeryPresentation};
use nsstqft::linalg::{identity, kron, residual};
use nsstqft::repcat::{braiding_matrix, duality_maps, make_valpha, tensor, twist_matrix, ColorLabel};
use nsstqft::tqftdim::graphs::random_generic;
use nsstqft::tqftdim::{graded_dimension, triple_admissible};
use nsstqft::{Degree, RootParams};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn root() -> impl Strategy<Value = i64> {
    prop::sample::select(vec![2i64, 3, 5, 6, 7])
}

fn small_root() -> impl Strategy<Value = i64> {
    prop::sample::select(vec![2i64, 3, 5])
}

/// Complex values at distance at least 0.05 from the integers.
fn generic() -> impl Strategy<Value = Complex64> {
    (-2.0f64..2.0, 0.05f64..0.95, -0.3f64..0.3).prop_map(|(n, f, im)| Complex64::new(n.floor() + f, im))
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quantum_number_is_odd(r in root(), x in generic()) {
        let ctx = RootParams::new(r).unwrap();
        prop_assert!((ctx.q_num(x) + ctx.q_num(-x)).norm() < 1e-10);
    }

    #[test]
    fn mdim_is_periodic_and_even(r in root(), a in generic(), k in -3i64..=3) {
        let ctx = RootParams::new(r).unwrap();
        let d = ctx.mdim(a).unwrap();
        prop_assert!(close(d, ctx.mdim(a + (2 * r * k) as f64).unwrap(), 1e-9));
        prop_assert!(close(d, ctx.mdim(-a).unwrap(), 1e-9));
    }

    #[test]
    fn h_r_is_symmetric(r in root()) {
        let ctx = RootParams::new(r).unwrap();
        let h = ctx.h_r_set();
        prop_assert_eq!(h.len() as i64, r);
        prop_assert!(h.iter().all(|x| h.contains(&-x) && (x + r - 1) % 2 == 0));
    }

    #[test]
    fn degree_addition_is_mod_two(x in generic(), y in generic(), k in -4i64..=4) {
        let a = Degree(x).add(Degree(y));
        prop_assert!(a.eq_mod2(Degree(x + y + (2 * k) as f64), 1e-9));
        prop_assert!(Degree(x).add(Degree(x).neg()).is_integral(1e-9));
    }

    #[test]
    fn valpha_relations_and_zigzags(r in small_root(), a in generic(), b in generic()) {
        let ctx = RootParams::new(r).unwrap();
        let (va, vb) = (make_valpha(&ctx, a).unwrap(), make_valpha(&ctx, b).unwrap());
        prop_assert!(va.relation_residual() < 1e-10);
        prop_assert!(tensor(&va, &vb.dual()).relation_residual() < 1e-10);
        prop_assert!(duality_maps(&va).zigzag_residual() < 1e-10);
        let t = twist_matrix(&va);
        prop_assert!(residual(&t, &(identity(va.dim()) * t[(0, 0)])) < 1e-10);
        prop_assert!(close(t[(0, 0)], ctx.twist_scalar(a).unwrap(), 1e-10));
    }

    #[test]
    fn yang_baxter(r in small_root(), a in generic(), b in generic(), d in generic()) {
        let ctx = RootParams::new(r).unwrap();
        let (a, b, d) = (make_valpha(&ctx, a).unwrap(), make_valpha(&ctx, b).unwrap().dual(), make_valpha(&ctx, d).unwrap());
        let n = r as usize;
        let lhs = kron(&braiding_matrix(&b, &d), &identity(n))
            * kron(&identity(n), &braiding_matrix(&a, &d))
            * kron(&braiding_matrix(&a, &b), &identity(n));
        let rhs = kron(&identity(n), &braiding_matrix(&a, &b))
            * kron(&braiding_matrix(&a, &d), &identity(n))
            * kron(&identity(n), &braiding_matrix(&b, &d));
        prop_assert!(residual(&lhs, &rhs) < 1e-10);
    }

    #[test]
    fn reidemeister_two_and_three(r in small_root(), a in generic(), b in generic(), d in generic()) {
        let ctx = RootParams::new(r).unwrap();
        let comps: Vec<_> = [("A", a), ("B", b), ("C", d)]
            .into_iter()
            .map(|(n, x)| dfx::component(n, ColorLabel::Valpha(x), None))
            .collect();
        let src = vec![Strand::up(0), Strand::down(1), Strand::up(2)];
        let r2 = SlicedDiagram::new(comps.clone(), src.clone(), vec![Slice::braid(0, 1), Slice::braid(0, -1)]).unwrap();
        prop_assert!(residual(&evaluate_raw(&ctx, &r2).unwrap(), &identity((r * r * r) as usize)) < 1e-10);
        let lhs = SlicedDiagram::new(comps.clone(), src.clone(), vec![Slice::braid(0, 1), Slice::braid(1, 1), Slice::braid(0, 1)]).unwrap();
        let rhs = SlicedDiagram::new(comps, src, vec![Slice::braid(1, 1), Slice::braid(0, 1), Slice::braid(1, 1)]).unwrap();
        prop_assert!(residual(&evaluate_raw(&ctx, &lhs).unwrap(), &evaluate_raw(&ctx, &rhs).unwrap()) < 1e-10);
    }

    #[test]
    fn unknot_is_modified_dimension(r in root(), a in generic(), f in -2i64..=2) {
        let ctx = RootParams::new(r).unwrap();
        let v = f_prime(&ctx, &dfx::unknot(ColorLabel::Valpha(a), Some(f)), 0).unwrap();
        let expected = ctx.mdim(a).unwrap() * ctx.twist_scalar(a).unwrap().powi(f as i32);
        prop_assert!(close(v, expected, 1e-9));
    }

    #[test]
    fn triple_degrees(r in root(), a in generic(), b in generic(), k in -2i64..=2, h in 0usize..7) {
        let ctx = RootParams::new(r).unwrap();
        let hr = ctx.h_r_set();
        let s = hr[h % hr.len()] + 2 * ctx.rprime() * k;
        let c = Complex64::new(s as f64, 0.0) - a - b;
        prop_assume!(ctx.in_cdot(c));
        let degrees = triple_admissible(&ctx, a, b, c).unwrap();
        let expected = if r % 2 == 1 { 1 } else { 2 };
        prop_assert_eq!(degrees.len(), expected);
        prop_assert!(degrees.contains(&k));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn lift_shift_leaves_z_unchanged(r in small_root(), mu in generic(), f in prop::sample::select(vec![0i64, 3, 5])) {
        let ctx = RootParams::new(r).unwrap();
        let sp = sf::framed_unknot(f, mu);
        prop_assume!(nsstqft::invariant::computability_check(&ctx, &sp));
        let base = z_invariant(&ctx, &sp).unwrap();
        let shifted = SurgeryPresentation::new(sp.diagram.clone(), sp.surgery.clone(), vec![mu + 2.0], 0).unwrap();
        prop_assert!(close(z_invariant(&ctx, &shifted).unwrap().z, base.z, 1e-8));
        prop_assert!(close(base.z, base.z_defi, 1e-9));
    }

    #[test]
    fn graded_dimension_is_symmetric(r in root(), seed in any::<u64>()) {
        let ctx = RootParams::new(r).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_generic(&ctx, 3, 0, &mut rng);
        let gd = graded_dimension(&ctx, &g).unwrap();
        for (k, d) in &gd.coefficients {
            prop_assert_eq!(gd.coefficients.get(&-k), Some(d));
        }
    }
}
