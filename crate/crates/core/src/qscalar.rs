//! Complex scalars at the root of unity `q = exp(iπ/r)`.
//!
//! Every quantity in the crate is a `Complex64`; [`RootParams`] carries the
//! order `r` together with the tolerances used for "is an integer" tests and
//! for approximate equality.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A quantum scalar.
pub type QScalar = Complex64;

pub const DEFAULT_EPSILON_INT: f64 = 1e-9;
pub const DEFAULT_TOL: f64 = 1e-9;

/// The root-of-unity context.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootParams {
    r: i64,
    rprime: i64,
    s: i64,
    /// Distance below which a complex number counts as an integer.
    pub epsilon_int: f64,
    /// Relative tolerance for complex equality.
    pub tol: f64,
}

/// The global normalisation constants.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Constants {
    pub lambda: QScalar,
    pub eta: QScalar,
    pub delta: QScalar,
    pub delta_plus: QScalar,
    pub delta_minus: QScalar,
}

impl RootParams {
    pub fn new(r: i64) -> Result<Self> {
        if r < 2 || r % 4 == 0 {
            return Err(Error::InvalidRoot(r));
        }
        let rprime = if r % 2 == 1 { r } else { r / 2 };
        Ok(Self {
            r,
            rprime,
            s: r.rem_euclid(4),
            epsilon_int: DEFAULT_EPSILON_INT,
            tol: DEFAULT_TOL,
        })
    }

    pub fn with_tolerances(mut self, epsilon_int: f64, tol: f64) -> Self {
        self.epsilon_int = epsilon_int;
        self.tol = tol;
        self
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn rprime(&self) -> i64 {
        self.rprime
    }

    /// `s ∈ {1,2,3}` with `s ≡ r mod 4`.
    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn is_odd(&self) -> bool {
        self.r % 2 == 1
    }

    /// `q^x = exp(iπx/r)`.
    pub fn q_pow(&self, x: Complex64) -> QScalar {
        (Complex64::i() * PI * x / self.r as f64).exp()
    }

    pub fn q_pow_re(&self, x: f64) -> QScalar {
        self.q_pow(Complex64::new(x, 0.0))
    }

    /// `{x} = q^x − q^{−x}`.
    pub fn q_num(&self, x: Complex64) -> QScalar {
        self.q_pow(x) - self.q_pow(-x)
    }

    /// Quantum integer `[x] = {x}/{1}`.
    pub fn q_int(&self, x: Complex64) -> QScalar {
        self.q_num(x) / self.q_num(Complex64::new(1.0, 0.0))
    }

    /// `{n}! = {1}{2}…{n}`.
    pub fn q_factorial(&self, n: usize) -> QScalar {
        (1..=n).fold(Complex64::new(1.0, 0.0), |acc, k| {
            acc * self.q_num(Complex64::new(k as f64, 0.0))
        })
    }

    /// Nearest integer to `x` when `x` is within `epsilon_int` of one.
    pub fn near_integer(&self, x: Complex64) -> Option<i64> {
        let n = x.re.round();
        if (x.re - n).abs() <= self.epsilon_int && x.im.abs() <= self.epsilon_int {
            Some(n as i64)
        } else {
            None
        }
    }

    /// Membership in `(ℂ∖ℤ) ∪ rℤ`, the index set of the simple projective `V_α`.
    pub fn in_cdot(&self, alpha: Complex64) -> bool {
        match self.near_integer(alpha) {
            None => true,
            Some(n) => n % self.r == 0,
        }
    }

    pub fn check_cdot(&self, alpha: Complex64) -> Result<()> {
        if self.in_cdot(alpha) {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "alpha = {} lies in Z \\ {}Z, outside the projective index set",
                fmt_c(alpha),
                self.r
            )))
        }
    }

    /// Modified dimension `d(α) = (−1)^{r−1} r{α}/{rα}`, with the removable
    /// singularity on `rℤ` filled in by its limit `(−1)^{r−1}(−1)^{m(1−r)}`.
    pub fn mdim(&self, alpha: Complex64) -> Result<QScalar> {
        let sign_r = if self.r % 2 == 1 { 1.0 } else { -1.0 };
        match self.near_integer(alpha) {
            Some(n) if n % self.r == 0 => {
                let m = n / self.r;
                let e = (m * (1 - self.r)).rem_euclid(2);
                let v = if e == 0 { sign_r } else { -sign_r };
                Ok(Complex64::new(v, 0.0))
            }
            Some(_) => {
                self.check_cdot(alpha)?;
                unreachable!()
            }
            None => {
                let r = self.r as f64;
                Ok(sign_r * r * self.q_num(alpha) / self.q_num(alpha * r))
            }
        }
    }

    /// `λ, η, δ, Δ₊, Δ₋`.
    pub fn constants(&self) -> Constants {
        let r = self.r as f64;
        let rp = (self.rprime as f64).sqrt();
        let lambda = Complex64::new(rp / (r * r), 0.0);
        let eta = Complex64::new(1.0 / (r * rp), 0.0);
        let delta = self.q_pow_re(-1.5)
            * (Complex64::new(0.0, -((self.s + 1) as f64) * PI / 4.0)).exp();
        Constants {
            lambda,
            eta,
            delta,
            delta_plus: delta / lambda,
            delta_minus: Complex64::new(1.0, 0.0) / (delta * lambda),
        }
    }

    /// `H_r = {1−r, 3−r, …, r−1}`.
    pub fn h_r_set(&self) -> Vec<i64> {
        (0..self.r).map(|i| 1 - self.r + 2 * i).collect()
    }

    /// Approximate equality `|a − b| ≤ tol·max(1, |a|, |b|)`.
    pub fn approx_eq(&self, a: Complex64, b: Complex64) -> bool {
        (a - b).norm() <= self.tol * 1f64.max(a.norm()).max(b.norm())
    }

    /// Twist scalar of `V_α`: `θ = q^{(α² − (r−1)²)/2}`.
    pub fn twist_scalar(&self, alpha: Complex64) -> Result<QScalar> {
        self.check_cdot(alpha)?;
        let rm1 = (self.r - 1) as f64;
        Ok(self.q_pow((alpha * alpha - rm1 * rm1) / 2.0))
    }
}

/// An element of `ℂ/2ℤ`, stored as a complex representative.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Degree(pub Complex64);

impl Degree {
    pub fn new(x: Complex64) -> Self {
        Degree(x)
    }

    pub fn zero() -> Self {
        Degree(Complex64::new(0.0, 0.0))
    }

    pub fn from_int(n: i64) -> Self {
        Degree(Complex64::new(n as f64, 0.0))
    }

    pub fn add(self, other: Degree) -> Degree {
        Degree(self.0 + other.0)
    }

    pub fn neg(self) -> Degree {
        Degree(-self.0)
    }

    /// Equality modulo `2ℤ`, within `eps` on representatives.
    pub fn eq_mod2(self, other: Degree, eps: f64) -> bool {
        let d = (self.0 - other.0) / 2.0;
        (d.re - d.re.round()).abs() <= eps && d.im.abs() <= eps
    }

    /// `true` when the class lies in `ℤ/2ℤ`.
    pub fn is_integral(self, eps: f64) -> bool {
        (self.0.re - self.0.re.round()).abs() <= eps && self.0.im.abs() <= eps
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod 2", fmt_c(self.0))
    }
}

pub(crate) fn fmt_c(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn rejects_bad_orders() {
        assert_eq!(RootParams::new(4), Err(Error::InvalidRoot(4)));
        assert_eq!(RootParams::new(8), Err(Error::InvalidRoot(8)));
        assert!(RootParams::new(1).is_err());
        for r in [2, 3, 5, 6, 7, 9, 10] {
            let p = RootParams::new(r).unwrap();
            assert_eq!(p.s(), r % 4);
            assert_eq!(p.rprime(), if r % 2 == 1 { r } else { r / 2 });
        }
    }

    #[test]
    fn q_pow_examples() {
        let p2 = RootParams::new(2).unwrap();
        assert!(close(p2.q_pow(c(2.0)), c(-1.0)));
        let p3 = RootParams::new(3).unwrap();
        assert!(close(p3.q_pow(c(0.0)), c(1.0)));
        let p5 = RootParams::new(5).unwrap();
        assert!(close(p5.q_pow(c(2.5)), Complex64::i()));
    }

    #[test]
    fn q_num_examples() {
        let p3 = RootParams::new(3).unwrap();
        assert!(close(p3.q_num(c(0.0)), c(0.0)));
        for r in [2, 3, 5, 7] {
            let p = RootParams::new(r).unwrap();
            assert!(p.q_num(c(r as f64)).norm() < 1e-12);
        }
        let p2 = RootParams::new(2).unwrap();
        assert!(close(p2.q_num(c(1.0)), Complex64::new(0.0, 2.0)));
    }

    #[test]
    fn mdim_examples() {
        let p2 = RootParams::new(2).unwrap();
        // −2·sin(π/4)/sin(π/2)
        let expected = -2.0 * (PI / 4.0).sin() / (PI / 2.0).sin();
        assert!(close(p2.mdim(c(0.5)).unwrap(), c(expected)));
        assert!(close(c(expected), c(-(2f64.sqrt()))));
        let p3 = RootParams::new(3).unwrap();
        assert!(close(p3.mdim(c(0.0)).unwrap(), c(1.0)));
        assert!(matches!(p3.mdim(c(1.0)), Err(Error::Domain(_))));
    }

    #[test]
    fn mdim_limit_matches_nearby_values() {
        for r in [2, 3, 5, 6, 7] {
            let p = RootParams::new(r).unwrap();
            for m in -2..=2 {
                let at = p.mdim(c((r * m) as f64)).unwrap();
                let near = p.mdim(c((r * m) as f64 + 1e-6)).unwrap();
                assert!((at - near).norm() < 1e-4, "r={r} m={m}: {at} vs {near}");
            }
        }
    }

    #[test]
    fn constants_examples() {
        let p3 = RootParams::new(3).unwrap();
        let k = p3.constants();
        assert!(close(k.lambda, c(3f64.sqrt() / 9.0)));
        assert!(close(k.eta, c(1.0 / (3.0 * 3f64.sqrt()))));

        let p2 = RootParams::new(2).unwrap();
        let k = p2.constants();
        let expected = p2.q_pow(c(-1.5)) * Complex64::new(0.0, -3.0 * PI / 4.0).exp();
        assert_eq!(p2.s(), 2);
        assert!(close(k.delta, expected));

        for r in [2, 3, 5, 6, 7] {
            let k = RootParams::new(r).unwrap().constants();
            assert!(close(k.lambda * k.delta_plus * k.lambda * k.delta_minus, c(1.0)));
            assert!(close(k.delta, k.lambda * k.delta_plus));
            assert!(close(c(1.0) / k.delta, k.lambda * k.delta_minus));
        }
    }

    #[test]
    fn h_r_examples() {
        assert_eq!(RootParams::new(2).unwrap().h_r_set(), vec![-1, 1]);
        assert_eq!(RootParams::new(3).unwrap().h_r_set(), vec![-2, 0, 2]);
        assert_eq!(RootParams::new(5).unwrap().h_r_set(), vec![-4, -2, 0, 2, 4]);
    }

    #[test]
    fn degree_mod2() {
        let a = Degree(Complex64::new(0.5, 0.25));
        assert!(a.eq_mod2(Degree(Complex64::new(2.5, 0.25)), 1e-9));
        assert!(!a.eq_mod2(Degree(Complex64::new(1.5, 0.25)), 1e-9));
        assert!(Degree::from_int(3).is_integral(1e-9));
    }
}
