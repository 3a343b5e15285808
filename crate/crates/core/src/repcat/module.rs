use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{diag, identity, inverse, kron, pow, residual, CMatrix};
use crate::qscalar::{fmt_c, Degree, RootParams};

/// Structured tag recording how a module was built.
#[derive(Clone, Debug, PartialEq)]
pub enum ModuleLabel {
    Trivial,
    Valpha(Complex64),
    /// One-dimensional module with the given integer `H`-weight
    /// (`2kr′` for `σ^k`, `r` for `ε`).
    Invertible(i64),
    SimpleS(u32),
    Dual(Box<ModuleLabel>),
    Tensor(Box<ModuleLabel>, Box<ModuleLabel>),
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleLabel::Trivial => write!(f, "C"),
            ModuleLabel::Valpha(a) => write!(f, "V({})", fmt_c(*a)),
            ModuleLabel::Invertible(w) => write!(f, "C_{w}"),
            ModuleLabel::SimpleS(j) => write!(f, "S_{j}"),
            ModuleLabel::Dual(m) => write!(f, "{m}*"),
            ModuleLabel::Tensor(a, b) => write!(f, "({a} ⊗ {b})"),
        }
    }
}

/// Colors that may be assigned to strands of a diagram.
#[derive(Clone, Debug, PartialEq)]
pub enum ColorLabel {
    /// Simple projective `V_α`, `α ∈ (ℂ∖ℤ) ∪ rℤ`.
    Valpha(Complex64),
    /// `σ^k = ℂ_{2kr′}`.
    Sigma(i64),
    /// `ε = ℂ_r`.
    Epsilon,
    /// Finite-dimensional simple module of highest weight `j`, `0 ≤ j ≤ r−1`.
    Simple(u32),
}

impl ColorLabel {
    pub fn module(&self, ctx: &RootParams) -> Result<WeightModule> {
        match self {
            ColorLabel::Valpha(a) => make_valpha(ctx, *a),
            ColorLabel::Sigma(k) => Ok(make_invertible(ctx, *k)),
            ColorLabel::Epsilon => Ok(make_epsilon(ctx)),
            ColorLabel::Simple(j) => make_simple(ctx, *j),
        }
    }

    pub fn dim(&self, ctx: &RootParams) -> usize {
        match self {
            ColorLabel::Valpha(_) => ctx.r() as usize,
            ColorLabel::Sigma(_) | ColorLabel::Epsilon => 1,
            ColorLabel::Simple(j) => *j as usize + 1,
        }
    }

    /// Degree in `ℂ/2ℤ` of the colouring module.
    pub fn degree(&self, ctx: &RootParams) -> Degree {
        match self {
            ColorLabel::Valpha(a) => Degree(*a + (ctx.r() - 1) as f64),
            ColorLabel::Sigma(_) => Degree::zero(),
            ColorLabel::Epsilon => Degree::from_int(ctx.r() % 2),
            ColorLabel::Simple(j) => Degree::from_int(*j as i64),
        }
    }

    /// Simple projective colors are exactly the `V_α` with `α` in the index set.
    pub fn is_simple_projective(&self, ctx: &RootParams) -> bool {
        match self {
            ColorLabel::Valpha(a) => ctx.in_cdot(*a),
            // S_{r-1} is isomorphic to V_0 but is only used through Valpha(0).
            _ => false,
        }
    }
}

impl fmt::Display for ColorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColorLabel::Valpha(a) => write!(f, "V({})", fmt_c(*a)),
            ColorLabel::Sigma(k) => write!(f, "sigma^{k}"),
            ColorLabel::Epsilon => write!(f, "epsilon"),
            ColorLabel::Simple(j) => write!(f, "S_{j}"),
        }
    }
}

/// A finite-dimensional weight module in a weight basis.
///
/// `H` is diagonal with entries `weights`, and `K = q^H`.
#[derive(Clone, Debug)]
pub struct WeightModule {
    pub ctx: RootParams,
    pub weights: Vec<Complex64>,
    pub e: CMatrix,
    pub f: CMatrix,
    pub k: CMatrix,
    pub h: CMatrix,
    pub degree: Degree,
    pub label: ModuleLabel,
}

impl WeightModule {
    fn from_ladder(
        ctx: &RootParams,
        weights: Vec<Complex64>,
        e: CMatrix,
        f: CMatrix,
        degree: Degree,
        label: ModuleLabel,
    ) -> Self {
        let h = diag(&weights);
        let kd: Vec<Complex64> = weights.iter().map(|w| ctx.q_pow(*w)).collect();
        WeightModule {
            ctx: *ctx,
            k: diag(&kd),
            h,
            weights,
            e,
            f,
            degree,
            label,
        }
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn k_inv(&self) -> CMatrix {
        let d: Vec<Complex64> = self.weights.iter().map(|w| self.ctx.q_pow(-*w)).collect();
        diag(&d)
    }

    /// The dual module, acting by `x ↦ S(x)^T` on the dual basis:
    /// `S(E) = −EK⁻¹`, `S(F) = −KF`, `S(K) = K⁻¹`, `S(H) = −H`.
    pub fn dual(&self) -> WeightModule {
        let kinv = self.k_inv();
        let weights: Vec<Complex64> = self.weights.iter().map(|w| -*w).collect();
        WeightModule {
            ctx: self.ctx,
            e: -(&self.e * &kinv).transpose(),
            f: -(&self.k * &self.f).transpose(),
            k: kinv.transpose(),
            h: -self.h.transpose(),
            weights,
            degree: self.degree.neg(),
            label: ModuleLabel::Dual(Box::new(self.label.clone())),
        }
    }

    /// Maximum residual over the defining relations of the algebra and the
    /// weight-module conditions.
    pub fn relation_residual(&self) -> f64 {
        let ctx = &self.ctx;
        let q = ctx.q_pow_re(1.0);
        let q2 = q * q;
        let (e, f, k, h) = (&self.e, &self.f, &self.k, &self.h);
        let kinv = match inverse(k) {
            Some(m) => m,
            None => return f64::INFINITY,
        };
        let n = self.dim();
        let zero = CMatrix::zeros(n, n);
        let r = ctx.r() as usize;
        let qk: Vec<Complex64> = self.weights.iter().map(|w| ctx.q_pow(*w)).collect();
        let checks = [
            residual(&(k * e * &kinv), &(e * q2)),
            residual(&(k * f * &kinv), &(f / q2)),
            residual(&(e * f - f * e), &((k - &kinv) / (q - 1.0 / q))),
            residual(&(h * k), &(k * h)),
            residual(&(h * e - e * h), &(e * Complex64::new(2.0, 0.0))),
            residual(&(h * f - f * h), &(f * Complex64::new(-2.0, 0.0))),
            residual(&pow(e, r), &zero),
            residual(&pow(f, r), &zero),
            residual(k, &diag(&qk)),
            residual(h, &diag(&self.weights)),
        ];
        checks.into_iter().fold(0.0, f64::max)
    }

    /// `true` when every weight is congruent to the degree modulo `2ℤ`.
    pub fn weights_match_degree(&self) -> bool {
        self.weights
            .iter()
            .all(|w| Degree(*w).eq_mod2(self.degree, 1e-9))
    }
}

/// Ladder module with highest weight `mu` and `dim` weight vectors
/// `v_i = F^i v_0`; `E v_i = [i][mu − i + 1] v_{i−1}`.
fn ladder(ctx: &RootParams, mu: Complex64, dim: usize) -> (Vec<Complex64>, CMatrix, CMatrix) {
    let weights: Vec<Complex64> = (0..dim).map(|i| mu - 2.0 * i as f64).collect();
    let mut e = CMatrix::zeros(dim, dim);
    let mut f = CMatrix::zeros(dim, dim);
    for i in 0..dim.saturating_sub(1) {
        f[(i + 1, i)] = Complex64::new(1.0, 0.0);
    }
    for i in 1..dim {
        let fi = i as f64;
        e[(i - 1, i)] = ctx.q_int(Complex64::new(fi, 0.0)) * ctx.q_int(mu - fi + 1.0);
    }
    (weights, e, f)
}

/// The `r`-dimensional simple projective module `V_α` of highest weight `α + r − 1`.
pub fn make_valpha(ctx: &RootParams, alpha: Complex64) -> Result<WeightModule> {
    ctx.check_cdot(alpha)?;
    let r = ctx.r() as usize;
    let mu = alpha + (r - 1) as f64;
    let (weights, e, f) = ladder(ctx, mu, r);
    Ok(WeightModule::from_ladder(
        ctx,
        weights,
        e,
        f,
        Degree(mu),
        ModuleLabel::Valpha(alpha),
    ))
}

/// The `(j+1)`-dimensional simple module `S_j` of highest weight `j`.
pub fn make_simple(ctx: &RootParams, j: u32) -> Result<WeightModule> {
    if j as i64 > ctx.r() - 1 {
        return Err(Error::Domain(format!(
            "highest weight j = {j} exceeds r - 1 = {}",
            ctx.r() - 1
        )));
    }
    let mu = Complex64::new(j as f64, 0.0);
    let (weights, e, f) = ladder(ctx, mu, j as usize + 1);
    Ok(WeightModule::from_ladder(
        ctx,
        weights,
        e,
        f,
        Degree(mu),
        ModuleLabel::SimpleS(j),
    ))
}

fn one_dim(ctx: &RootParams, weight: i64, label: ModuleLabel) -> WeightModule {
    WeightModule::from_ladder(
        ctx,
        vec![Complex64::new(weight as f64, 0.0)],
        CMatrix::zeros(1, 1),
        CMatrix::zeros(1, 1),
        Degree::from_int(weight.rem_euclid(2)),
        label,
    )
}

/// `σ^k = ℂ_{2kr′}`.
pub fn make_invertible(ctx: &RootParams, k: i64) -> WeightModule {
    let w = 2 * k * ctx.rprime();
    one_dim(ctx, w, ModuleLabel::Invertible(w))
}

/// `ε = ℂ_r`.
pub fn make_epsilon(ctx: &RootParams) -> WeightModule {
    one_dim(ctx, ctx.r(), ModuleLabel::Invertible(ctx.r()))
}

/// The unit object `ℂ` (weight 0).
pub fn trivial(ctx: &RootParams) -> WeightModule {
    one_dim(ctx, 0, ModuleLabel::Trivial)
}

/// Tensor product through the coproduct
/// `Δ(E) = E⊗K + 1⊗E`, `Δ(F) = F⊗1 + K⁻¹⊗F`, `Δ(K) = K⊗K`, `Δ(H) = H⊗1 + 1⊗H`.
pub fn tensor(a: &WeightModule, b: &WeightModule) -> WeightModule {
    let ia = identity(a.dim());
    let ib = identity(b.dim());
    let weights = a
        .weights
        .iter()
        .flat_map(|x| b.weights.iter().map(move |y| *x + *y))
        .collect();
    WeightModule {
        ctx: a.ctx,
        e: kron(&a.e, &b.k) + kron(&ia, &b.e),
        f: kron(&a.f, &ib) + kron(&a.k_inv(), &b.f),
        k: kron(&a.k, &b.k),
        h: kron(&a.h, &ib) + kron(&ia, &b.h),
        weights,
        degree: a.degree.add(b.degree),
        label: ModuleLabel::Tensor(Box::new(a.label.clone()), Box::new(b.label.clone())),
    }
}
