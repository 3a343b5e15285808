//! The renormalized link invariant, surgery presentations and the closed
//! 3-manifold invariants `N` and `Z`.

pub mod fixtures;
mod fprime;
pub mod schema;
mod slide;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde::Serialize;

use crate::diagram::SlicedDiagram;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::qscalar::{Degree, QScalar, RootParams};
use crate::repcat::ColorLabel;

pub use fprime::{cut_open, f_prime, f_prime_all_cuts, one_one_tangle};
pub use slide::{handle_slide, handle_slide_with, reverse_component, SlideMode};

/// A framed link `L` together with a colored graph `T` in one diagram, and
/// a cohomology class given by its values on meridians.
#[derive(Clone, Debug, PartialEq)]
pub struct SurgeryPresentation {
    pub diagram: SlicedDiagram,
    /// Diagram components forming the surgery link, in order.
    pub surgery: Vec<usize>,
    /// Meridian value of every diagram component.
    pub meridians: Vec<Complex64>,
    pub signature_defect: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LinkingData {
    pub matrix: Vec<Vec<i64>>,
    /// Numbers of positive and negative eigenvalues.
    pub signature_pair: (usize, usize),
    pub sigma: i64,
    pub nullity: usize,
}

impl SurgeryPresentation {
    /// Surgery components must carry explicit framings; their colors are
    /// placeholders that the Kirby expansion overwrites.
    pub fn new(
        mut diagram: SlicedDiagram,
        surgery: Vec<usize>,
        meridians: Vec<Complex64>,
        signature_defect: i64,
    ) -> Result<Self> {
        if meridians.len() != diagram.components.len() {
            return Err(Error::Schema(format!(
                "{} meridian values for {} components",
                meridians.len(),
                diagram.components.len()
            )));
        }
        for &i in &surgery {
            let c = diagram
                .components
                .get_mut(i)
                .ok_or_else(|| Error::Schema(format!("surgery component {i} does not exist")))?;
            if c.framing.is_none() {
                return Err(Error::Schema(format!("surgery component {:?} needs a framing", c.name)));
            }
            c.color = ColorLabel::Valpha(meridians[i]);
        }
        Ok(SurgeryPresentation {
            diagram,
            surgery,
            meridians,
            signature_defect,
        })
    }

    pub fn framings(&self) -> Vec<i64> {
        self.surgery
            .iter()
            .map(|&i| self.diagram.components[i].framing.expect("surgery framing"))
            .collect()
    }

    /// Components of the colored graph `T`.
    pub fn graph_components(&self) -> Vec<usize> {
        (0..self.diagram.components.len())
            .filter(|i| !self.surgery.contains(i))
            .collect()
    }
}

/// Linking matrix of the surgery link (framings on the diagonal) and its
/// signature.
pub fn linking_data(sp: &SurgeryPresentation) -> Result<LinkingData> {
    let lk = sp.diagram.linking_matrix()?;
    let framings = sp.framings();
    let m = sp.surgery.len();
    let mut matrix = vec![vec![0i64; m]; m];
    for (a, &i) in sp.surgery.iter().enumerate() {
        for (b, &j) in sp.surgery.iter().enumerate() {
            matrix[a][b] = if a == b { framings[a] } else { lk[i][j] };
        }
    }
    let (p, s) = signature(&matrix);
    Ok(LinkingData {
        sigma: p as i64 - s as i64,
        nullity: m - p - s,
        signature_pair: (p, s),
        matrix,
    })
}

fn signature(matrix: &[Vec<i64>]) -> (usize, usize) {
    let m = matrix.len();
    if m == 0 {
        return (0, 0);
    }
    let a = DMatrix::from_fn(m, m, |i, j| matrix[i][j] as f64);
    let scale = a.iter().fold(1.0f64, |acc, x| acc.max(x.abs()));
    let eig = SymmetricEigen::new(a).eigenvalues;
    let eps = 1e-9 * scale * m as f64;
    let p = eig.iter().filter(|&&x| x > eps).count();
    let s = eig.iter().filter(|&&x| x < -eps).count();
    (p, s)
}

/// Why a presentation is not computable, if it is not.
pub fn check_computable(ctx: &RootParams, sp: &SurgeryPresentation) -> Result<()> {
    let eps = ctx.epsilon_int;
    let used = sp.diagram.used_components()?;
    let graph = sp.graph_components();
    for &t in &graph {
        let c = &sp.diagram.components[t];
        if used[t] && !c.color.degree(ctx).eq_mod2(Degree(sp.meridians[t]), eps) {
            return Err(Error::NotComputable(format!(
                "color {} of {:?} has degree {} but the meridian value is {}",
                c.color,
                c.name,
                c.color.degree(ctx),
                Degree(sp.meridians[t])
            )));
        }
    }
    if sp.surgery.is_empty() {
        let admissible = graph.iter().any(|&t| {
            used[t]
                && (sp.diagram.components[t].color.is_simple_projective(ctx)
                    || !Degree(sp.meridians[t]).is_integral(eps))
        });
        if !admissible {
            return Err(Error::NotComputable(
                "empty surgery link and no projective color or non-integral value on the graph".into(),
            ));
        }
        return Ok(());
    }
    for &i in &sp.surgery {
        if Degree(sp.meridians[i]).is_integral(eps) {
            return Err(Error::NotComputable(format!(
                "meridian value of {:?} is integral",
                sp.diagram.components[i].name
            )));
        }
    }
    let lk = sp.diagram.linking_matrix()?;
    for &i in &sp.surgery {
        let mut total = Complex64::new(0.0, 0.0);
        for (j, mu) in sp.meridians.iter().enumerate() {
            let coeff = if i == j {
                sp.diagram.components[i].framing.expect("surgery framing")
            } else {
                lk[i][j]
            };
            total += *mu * coeff as f64;
        }
        if !Degree(total).eq_mod2(Degree::zero(), eps) {
            return Err(Error::NotComputable(format!(
                "the class does not vanish on the preferred parallel of {:?}",
                sp.diagram.components[i].name
            )));
        }
    }
    Ok(())
}

pub fn computability_check(ctx: &RootParams, sp: &SurgeryPresentation) -> bool {
    check_computable(ctx, sp).is_ok()
}

/// Both normalizations of the closed invariant, with the ingredients.
#[derive(Clone, Debug, PartialEq)]
pub struct ZValue {
    /// `ηλ^m δ^{−σ+n} F′(L ∪ T)`.
    pub z: QScalar,
    /// `ηλ^{b₁} δ^n N`.
    pub z_defi: QScalar,
    /// `N = F′(L ∪ T)/(Δ₊^p Δ₋^s)`.
    pub n_invariant: QScalar,
    /// `F′` of the Kirby-colored link.
    pub f_prime: QScalar,
    pub linking: LinkingData,
    pub m: usize,
    pub defect: i64,
    /// Component that was cut open.
    pub cut: usize,
}

pub fn z_invariant(ctx: &RootParams, sp: &SurgeryPresentation) -> Result<ZValue> {
    z_invariant_with(ctx, sp, Exec::default())
}

/// `Z` by term-by-term Kirby expansion; terms may run in parallel and are
/// summed in a fixed order.
pub fn z_invariant_with(ctx: &RootParams, sp: &SurgeryPresentation, exec: Exec) -> Result<ZValue> {
    check_computable(ctx, sp)?;
    let linking = linking_data(sp)?;
    let used = sp.diagram.used_components()?;
    let cut = sp
        .graph_components()
        .into_iter()
        .find(|&t| used[t] && sp.diagram.components[t].color.is_simple_projective(ctx))
        .or_else(|| sp.surgery.first().copied())
        .ok_or_else(|| Error::NotComputable("no simple projective edge to cut".into()))?;

    let m = sp.surgery.len();
    let hr = ctx.h_r_set();
    let r = hr.len();
    let terms = r.pow(m as u32);
    let lifts: Vec<Complex64> = sp.surgery.iter().map(|&i| sp.meridians[i]).collect();
    let values = exec.map_range(terms, |t| -> Result<QScalar> {
        let mut d = sp.diagram.clone();
        let mut weight = Complex64::new(1.0, 0.0);
        let mut idx = t;
        for (a, &i) in sp.surgery.iter().enumerate() {
            let k = hr[idx % r];
            idx /= r;
            let alpha = lifts[a] + k as f64;
            weight *= ctx.mdim(alpha)?;
            d.components[i].color = ColorLabel::Valpha(alpha);
        }
        Ok(weight * f_prime(ctx, &d, cut)?)
    });
    let mut fp = Complex64::new(0.0, 0.0);
    for v in values {
        fp += v?;
    }
    let k = ctx.constants();
    let (p, s) = linking.signature_pair;
    let n = sp.signature_defect;
    let z = k.eta * k.lambda.powi(m as i32) * k.delta.powi((n - linking.sigma) as i32) * fp;
    let n_invariant = fp / (k.delta_plus.powi(p as i32) * k.delta_minus.powi(s as i32));
    let z_defi = k.eta * k.lambda.powi(linking.nullity as i32) * k.delta.powi(n as i32) * n_invariant;
    Ok(ZValue {
        z,
        z_defi,
        n_invariant,
        f_prime: fp,
        linking,
        m,
        defect: n,
        cut,
    })
}
