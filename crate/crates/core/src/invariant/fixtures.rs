//! Surgery presentations used in tests, benches and the self-test.

use num_complex::Complex64;

use crate::diagram::fixtures::{braid_closure, hopf_chain, unknot, unlink, with_framings};
use crate::repcat::ColorLabel;

use super::SurgeryPresentation;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn placeholder(n: usize) -> Vec<ColorLabel> {
    vec![ColorLabel::Valpha(c(0.5, 0.0)); n]
}

/// `f`-framed unknot with meridian value `mu`.
pub fn framed_unknot(f: i64, mu: Complex64) -> SurgeryPresentation {
    let d = unknot(ColorLabel::Valpha(mu), Some(f));
    SurgeryPresentation::new(d, vec![0], vec![mu], 0).expect("framed unknot")
}

/// `S¹×S²` as the 0-framed unknot, with class `beta` on the `S¹` factor.
pub fn s1xs2(beta: Complex64) -> SurgeryPresentation {
    framed_unknot(0, beta)
}

/// `S³` containing an unknot colored `V_α` (empty surgery link).
pub fn colored_unknot(ctx_r: i64, alpha: Complex64) -> SurgeryPresentation {
    let d = unknot(ColorLabel::Valpha(alpha), Some(0));
    let degree = alpha + (ctx_r - 1) as f64;
    SurgeryPresentation::new(d, vec![], vec![degree], 0).expect("colored unknot")
}

/// `S³` containing a 0-framed knot given as a braid closure, colored `V_α`.
pub fn colored_knot(ctx_r: i64, n: usize, word: &[(usize, i8)], alpha: Complex64) -> SurgeryPresentation {
    let d = braid_closure(n, word, &[ColorLabel::Valpha(alpha)]).expect("knot closure");
    let d = with_framings(d, &[0]);
    let degree = alpha + (ctx_r - 1) as f64;
    SurgeryPresentation::new(d, vec![], vec![degree], 0).expect("colored knot")
}

/// Two-component unlink with framings `(f1, f2)`.
pub fn unlink2(f: (i64, i64), mu: (Complex64, Complex64)) -> SurgeryPresentation {
    let d = with_framings(unlink(&placeholder(2)), &[f.0, f.1]);
    SurgeryPresentation::new(d, vec![0, 1], vec![mu.0, mu.1], 0).expect("unlink")
}

/// Positive Hopf link with framings `(f1, f2)`.
pub fn hopf2(f: (i64, i64), mu: (Complex64, Complex64)) -> SurgeryPresentation {
    let d = with_framings(hopf_chain(&placeholder(2)).expect("hopf"), &[f.0, f.1]);
    SurgeryPresentation::new(d, vec![0, 1], vec![mu.0, mu.1], 0).expect("hopf")
}

/// `L(7,1)` as the 7-framed unknot, class `2j/7`.
pub fn lens_7_1(j: i64) -> SurgeryPresentation {
    framed_unknot(7, c(2.0 * j as f64 / 7.0, 0.0))
}

/// `L(7,2)` as the Hopf chain with framings `(4, 2)`; the class on the first
/// meridian is `2j/7` and on the second `−4·(2j/7)`.
pub fn lens_7_2(j: i64) -> SurgeryPresentation {
    let mu1 = 2.0 * j as f64 / 7.0;
    hopf2((4, 2), (c(mu1, 0.0), c(-4.0 * mu1, 0.0)))
}

/// Two-component presentations on which handle slides are exercised.
pub fn slide_family() -> Vec<(&'static str, SurgeryPresentation)> {
    vec![
        ("unlink (3,5)", unlink2((3, 5), (c(2.0 / 3.0, 0.0), c(2.0 / 5.0, 0.0)))),
        ("hopf (2,3)", hopf2((2, 3), (c(2.0 / 5.0, 0.0), c(-4.0 / 5.0, 0.0)))),
        ("unlink (0,0)", unlink2((0, 0), (c(0.37, 0.11), c(-0.61, 0.05)))),
    ]
}
