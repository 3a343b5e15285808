use std::collections::BTreeMap;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{max_abs, CMatrix};
use crate::qscalar::RootParams;

use super::module::{make_invertible, tensor, WeightModule};

/// A morphism `source ⊗ σ^k → target` given by its matrix in weight bases.
///
/// `grading_shift` is the degree `k` in the graded Hom space.
#[derive(Clone, Debug)]
pub struct MorphismMatrix {
    pub source: Arc<WeightModule>,
    pub target: Arc<WeightModule>,
    pub matrix: CMatrix,
    pub grading_shift: i64,
}

impl MorphismMatrix {
    pub fn new(source: Arc<WeightModule>, target: Arc<WeightModule>, matrix: CMatrix) -> Result<Self> {
        Self::graded(source, target, matrix, 0)
    }

    pub fn graded(
        source: Arc<WeightModule>,
        target: Arc<WeightModule>,
        matrix: CMatrix,
        grading_shift: i64,
    ) -> Result<Self> {
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(Error::Domain(format!(
                "matrix shape {:?} does not match {} -> {}",
                matrix.shape(),
                source.label,
                target.label
            )));
        }
        Ok(Self {
            source,
            target,
            matrix,
            grading_shift,
        })
    }

    pub fn identity(m: Arc<WeightModule>) -> Self {
        let n = m.dim();
        Self {
            source: m.clone(),
            target: m,
            matrix: CMatrix::identity(n, n),
            grading_shift: 0,
        }
    }

    /// `other ∘ self` with the graded convention: degrees add.
    pub fn then(&self, other: &MorphismMatrix) -> Result<Self> {
        if other.source.dim() != self.target.dim() {
            return Err(Error::Domain("composition of non-composable morphisms".into()));
        }
        Ok(Self {
            source: self.source.clone(),
            target: other.target.clone(),
            matrix: &other.matrix * &self.matrix,
            grading_shift: self.grading_shift + other.grading_shift,
        })
    }

    /// Max residual of `x_target·M − M·x_source⊗σ^k` over `E, F, K, H`.
    pub fn equivariance_residual(&self) -> f64 {
        let ctx = &self.source.ctx;
        let src = if self.grading_shift == 0 {
            (*self.source).clone()
        } else {
            tensor(&self.source, &make_invertible(ctx, self.grading_shift))
        };
        let m = &self.matrix;
        let t = &self.target;
        [
            max_abs(&(&t.e * m - m * &src.e)),
            max_abs(&(&t.f * m - m * &src.f)),
            max_abs(&(&t.k * m - m * &src.k)),
            max_abs(&(&t.h * m - m * &src.h)),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    /// Scalar `s` with `matrix ≈ s·Id` and the max deviation.
    pub fn scalar_part(&self) -> (Complex64, f64) {
        crate::linalg::scalar_part(&self.matrix)
    }
}

/// Graded dimension of `ℍom(V_α, V_β)`: one-dimensional in degree `k` exactly
/// when `β − α = 2kr′`.
pub fn hom_dimension(ctx: &RootParams, alpha: Complex64, beta: Complex64) -> Result<BTreeMap<i64, usize>> {
    ctx.check_cdot(alpha)?;
    ctx.check_cdot(beta)?;
    let x = (beta - alpha) / (2 * ctx.rprime()) as f64;
    let mut out = BTreeMap::new();
    if let Some(k) = ctx.near_integer(x) {
        out.insert(k, 1);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcat::make_valpha;

    #[test]
    fn hom_dimension_examples() {
        let c = RootParams::new(3).unwrap();
        let a = Complex64::new(0.3, 0.2);
        assert_eq!(hom_dimension(&c, a, a).unwrap(), BTreeMap::from([(0, 1)]));
        assert_eq!(hom_dimension(&c, a, a + 6.0).unwrap(), BTreeMap::from([(1, 1)]));
        assert!(hom_dimension(&c, a, a + 1.0).unwrap().is_empty());
        assert!(hom_dimension(&c, Complex64::new(1.0, 0.0), a).is_err());
    }

    #[test]
    fn graded_identity_is_equivariant() {
        // V_α ⊗ σ ≅ V_{α+2r′}: the identity matrix is a degree-one morphism.
        for r in [2i64, 3, 5, 6] {
            let c = RootParams::new(r).unwrap();
            let a = Complex64::new(0.41, 0.0);
            let src = Arc::new(make_valpha(&c, a).unwrap());
            let tgt = Arc::new(make_valpha(&c, a + (2 * c.rprime()) as f64).unwrap());
            let n = src.dim();
            let m = MorphismMatrix::graded(src, tgt, CMatrix::identity(n, n), 1).unwrap();
            let res = m.equivariance_residual();
            assert!(res < 1e-10, "r={r}: {res}");
        }
    }
}
