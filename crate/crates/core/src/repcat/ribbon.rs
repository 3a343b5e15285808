//! Braiding, twist and duality for weight modules.
//!
//! The R-matrix is `R = q^{H⊗H/2} Σ_{n=0}^{r−1} {1}^{2n}/{n}! q^{n(n−1)/2} E^n ⊗ F^n`,
//! the braiding is `c_{A,B} = τ∘R`, and the pivotal element is `K^{1−r}`.

use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{diag, identity, inverse, kron, swap, CMatrix};
use crate::qscalar::{QScalar, RootParams};

use super::module::{tensor, trivial, WeightModule};
use super::morphism::MorphismMatrix;

/// `R` acting on `A ⊗ B`.
pub fn r_matrix(a: &WeightModule, b: &WeightModule) -> CMatrix {
    let ctx = &a.ctx;
    let r = ctx.r() as usize;
    let (na, nb) = (a.dim(), b.dim());
    let one = Complex64::new(1.0, 0.0);
    let q1 = ctx.q_num(one);
    let mut sum = CMatrix::zeros(na * nb, na * nb);
    let mut en = identity(na);
    let mut fn_ = identity(nb);
    let mut q1pow = one;
    for n in 0..r {
        if n > 0 {
            en = &en * &a.e;
            fn_ = &fn_ * &b.f;
            q1pow *= q1 * q1;
        }
        let coeff = q1pow / ctx.q_factorial(n) * ctx.q_pow_re((n * n.saturating_sub(1)) as f64 / 2.0);
        sum += kron(&en, &fn_) * coeff;
    }
    let hh: Vec<Complex64> = a
        .weights
        .iter()
        .flat_map(|x| b.weights.iter().map(move |y| ctx.q_pow(*x * *y / 2.0)))
        .collect();
    diag(&hh) * sum
}

/// Matrix of `c_{A,B}: A⊗B → B⊗A`.
pub fn braiding_matrix(a: &WeightModule, b: &WeightModule) -> CMatrix {
    swap(a.dim(), b.dim()) * r_matrix(a, b)
}

/// Matrix of `c_{B,A}^{−1}: A⊗B → B⊗A` (the negative crossing).
pub fn braiding_inverse_matrix(a: &WeightModule, b: &WeightModule) -> Result<CMatrix> {
    inverse(&braiding_matrix(b, a)).ok_or_else(|| Error::Domain("singular braiding".into()))
}

pub fn braiding(a: &WeightModule, b: &WeightModule) -> MorphismMatrix {
    MorphismMatrix {
        source: Arc::new(tensor(a, b)),
        target: Arc::new(tensor(b, a)),
        matrix: braiding_matrix(a, b),
        grading_shift: 0,
    }
}

/// Diagonal of the pivotal element `g = K^{1−r}` on a weight basis.
pub fn pivotal_diagonal(m: &WeightModule) -> Vec<Complex64> {
    let e = (1 - m.ctx.r()) as f64;
    m.weights.iter().map(|w| m.ctx.q_pow(*w * e)).collect()
}

/// Raw duality vectors, indexed in the Kronecker convention.
#[derive(Clone, Debug)]
pub struct DualityVectors {
    /// `coev: ℂ → V⊗V*`, `1 ↦ Σ v_i⊗v_i*`.
    pub coev: CMatrix,
    /// `ev: V*⊗V → ℂ`, `f⊗v ↦ f(v)`.
    pub ev: CMatrix,
    /// `coev′: ℂ → V*⊗V`, `1 ↦ Σ v_i*⊗g⁻¹v_i`.
    pub coev_p: CMatrix,
    /// `ev′: V⊗V* → ℂ`, `v⊗f ↦ f(gv)`.
    pub ev_p: CMatrix,
}

impl DualityVectors {
    pub fn new(m: &WeightModule) -> Self {
        let n = m.dim();
        let g = pivotal_diagonal(m);
        let mut coev = CMatrix::zeros(n * n, 1);
        let mut ev = CMatrix::zeros(1, n * n);
        let mut coev_p = CMatrix::zeros(n * n, 1);
        let mut ev_p = CMatrix::zeros(1, n * n);
        for i in 0..n {
            coev[(i * n + i, 0)] = Complex64::new(1.0, 0.0);
            ev[(0, i * n + i)] = Complex64::new(1.0, 0.0);
            coev_p[(i * n + i, 0)] = Complex64::new(1.0, 0.0) / g[i];
            ev_p[(0, i * n + i)] = g[i];
        }
        Self { coev, ev, coev_p, ev_p }
    }
}

/// The four duality morphisms of a module.
#[derive(Clone, Debug)]
pub struct DualityMaps {
    pub coev: MorphismMatrix,
    pub ev: MorphismMatrix,
    pub coev_p: MorphismMatrix,
    pub ev_p: MorphismMatrix,
}

impl DualityMaps {
    /// Max residual of the four zig-zag identities.
    pub fn zigzag_residual(&self) -> f64 {
        let v = &self.coev.target; // V ⊗ V*
        let n = match &v.label {
            super::ModuleLabel::Tensor(_, _) => (v.dim() as f64).sqrt().round() as usize,
            _ => unreachable!(),
        };
        let id = identity(n);
        let vecs = DualityVectors {
            coev: self.coev.matrix.clone(),
            ev: self.ev.matrix.clone(),
            coev_p: self.coev_p.matrix.clone(),
            ev_p: self.ev_p.matrix.clone(),
        };
        zigzags(&vecs, n)
            .iter()
            .map(|m| crate::linalg::residual(m, &id))
            .fold(0.0, f64::max)
    }
}

/// The four zig-zag composites, each of which should be the identity.
pub(crate) fn zigzags(v: &DualityVectors, n: usize) -> [CMatrix; 4] {
    let id = identity(n);
    [
        // (id_V ⊗ ev)(coev ⊗ id_V)
        kron(&id, &v.ev) * kron(&v.coev, &id),
        // (ev ⊗ id_V*)(id_V* ⊗ coev)
        kron(&v.ev, &id) * kron(&id, &v.coev),
        // (ev′ ⊗ id_V)(id_V ⊗ coev′)
        kron(&v.ev_p, &id) * kron(&id, &v.coev_p),
        // (id_V* ⊗ ev′)(coev′ ⊗ id_V*)
        kron(&id, &v.ev_p) * kron(&v.coev_p, &id),
    ]
}

pub fn duality_maps(m: &WeightModule) -> DualityMaps {
    let v = DualityVectors::new(m);
    let unit = Arc::new(trivial(&m.ctx));
    let dual = m.dual();
    let v_vd = Arc::new(tensor(m, &dual));
    let vd_v = Arc::new(tensor(&dual, m));
    let mk = |s: &Arc<WeightModule>, t: &Arc<WeightModule>, mat: CMatrix| MorphismMatrix {
        source: s.clone(),
        target: t.clone(),
        matrix: mat,
        grading_shift: 0,
    };
    DualityMaps {
        coev: mk(&unit, &v_vd, v.coev),
        ev: mk(&vd_v, &unit, v.ev),
        coev_p: mk(&unit, &vd_v, v.coev_p),
        ev_p: mk(&v_vd, &unit, v.ev_p),
    }
}

/// Quantum trace of the identity, `ev′∘coev = tr(K^{1−r})`.
pub fn categorical_dimension(m: &WeightModule) -> QScalar {
    pivotal_diagonal(m).into_iter().sum()
}

/// `θ_A = (id ⊗ ev′)(c_{A,A} ⊗ id)(id ⊗ coev)`, computed as a pivotal-weighted
/// right partial trace of the braiding.
pub fn twist_matrix(a: &WeightModule) -> CMatrix {
    let n = a.dim();
    let c = braiding_matrix(a, a);
    let g = pivotal_diagonal(a);
    let mut out = CMatrix::zeros(n, n);
    for j in 0..n {
        for x in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..n {
                acc += c[(j * n + i, x * n + i)] * g[i];
            }
            out[(j, x)] = acc;
        }
    }
    out
}

/// The left-handed closure `(ev ⊗ id)(id ⊗ c_{A,A})(coev′ ⊗ id)`; equal to the
/// twist in a ribbon category.
pub fn left_twist_matrix(a: &WeightModule) -> CMatrix {
    let n = a.dim();
    let c = braiding_matrix(a, a);
    let g = pivotal_diagonal(a);
    let mut out = CMatrix::zeros(n, n);
    for j in 0..n {
        for x in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..n {
                acc += c[(i * n + j, i * n + x)] / g[i];
            }
            out[(j, x)] = acc;
        }
    }
    out
}

pub fn twist(a: &WeightModule) -> MorphismMatrix {
    let m = Arc::new(a.clone());
    MorphismMatrix {
        source: m.clone(),
        target: m,
        matrix: twist_matrix(a),
        grading_shift: 0,
    }
}

/// Twist scalar of `V_α`.
pub fn twist_scalar(ctx: &RootParams, alpha: Complex64) -> Result<QScalar> {
    ctx.twist_scalar(alpha)
}
