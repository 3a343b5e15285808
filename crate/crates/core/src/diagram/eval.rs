use std::collections::HashMap;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{scalar_part, CMatrix, Sparse};
use crate::qscalar::RootParams;
use crate::repcat::{
    braiding_inverse_matrix, braiding_matrix, tensor, trivial, twist_matrix, ColorLabel,
    DualityVectors, MorphismMatrix, WeightModule,
};

use super::{CapKind, CupKind, Orientation, Slice, SlicedDiagram, Strand};

const CUTOFF: f64 = 1e-300;

/// Slice-by-slice evaluator with per-diagram caches of modules and local maps.
pub struct Evaluator<'a> {
    ctx: RootParams,
    diagram: &'a SlicedDiagram,
    modules: Vec<Option<(Arc<WeightModule>, Arc<WeightModule>)>>,
    duality: HashMap<usize, DualityVectors>,
    braids: HashMap<(Strand, Strand, i8), Sparse>,
    peak: f64,
}

impl<'a> Evaluator<'a> {
    pub fn new(ctx: &RootParams, diagram: &'a SlicedDiagram) -> Result<Self> {
        let used = diagram.used_components()?;
        let modules = diagram
            .components
            .iter()
            .zip(used)
            .map(|(c, u)| {
                if !u {
                    return Ok(None);
                }
                let m = c.color.module(ctx)?;
                let d = m.dual();
                Ok(Some((Arc::new(m), Arc::new(d))))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Evaluator {
            ctx: *ctx,
            diagram,
            modules,
            duality: HashMap::new(),
            braids: HashMap::new(),
            peak: 1.0,
        })
    }

    pub fn module(&self, s: Strand) -> &Arc<WeightModule> {
        let (up, down) = self.modules[s.component]
            .as_ref()
            .expect("module of a used component");
        match s.orientation {
            Orientation::Up => up,
            Orientation::Down => down,
        }
    }

    fn dims(&self, word: &[Strand]) -> Vec<usize> {
        word.iter().map(|s| self.module(*s).dim()).collect()
    }

    fn duality(&mut self, component: usize) -> &DualityVectors {
        let m = self.modules[component].as_ref().expect("used").0.clone();
        self.duality
            .entry(component)
            .or_insert_with(|| DualityVectors::new(&m))
    }

    fn braid(&mut self, a: Strand, b: Strand, sign: i8) -> Result<&Sparse> {
        if !self.braids.contains_key(&(a, b, sign)) {
            let (ma, mb) = (self.module(a).clone(), self.module(b).clone());
            let m = if sign > 0 {
                braiding_matrix(&ma, &mb)
            } else {
                braiding_inverse_matrix(&ma, &mb)?
            };
            self.braids.insert((a, b, sign), Sparse::from_dense(&m, CUTOFF));
        }
        Ok(&self.braids[&(a, b, sign)])
    }

    /// Matrix of the diagram from `source` to `target`, in blackboard framing.
    pub fn run(&mut self) -> Result<CMatrix> {
        let words = self.diagram.typecheck()?;
        let src_dim: usize = self.dims(&self.diagram.source).iter().product();
        // State is a (current word) x (source) matrix, stored row-major.
        let mut state = vec![Complex64::new(0.0, 0.0); src_dim * src_dim];
        for i in 0..src_dim {
            state[i * src_dim + i] = Complex64::new(1.0, 0.0);
        }
        for (n, slice) in self.diagram.slices.iter().enumerate() {
            let word = &words[n];
            let dims = self.dims(word);
            let (pos, width, local) = match slice {
                Slice::Id => continue,
                Slice::Braid { pos, sign } => {
                    let l = self.braid(word[*pos], word[pos + 1], *sign)?.clone();
                    (*pos, 2, l)
                }
                Slice::Cup { pos, component, kind } => {
                    let v = self.duality(*component);
                    let m = match kind {
                        CupKind::Coev => &v.coev,
                        CupKind::CoevPivotal => &v.coev_p,
                    };
                    (*pos, 0, Sparse::from_dense(m, CUTOFF))
                }
                Slice::Cap { pos, kind } => {
                    let v = self.duality(word[*pos].component);
                    let m = match kind {
                        CapKind::Ev => &v.ev,
                        CapKind::EvPivotal => &v.ev_p,
                    };
                    (*pos, 2, Sparse::from_dense(m, CUTOFF))
                }
                Slice::Coupon { pos, inputs, outputs, matrix } => {
                    let din: usize = self.dims(inputs).iter().product();
                    let dout: usize = self.dims(outputs).iter().product();
                    if matrix.nrows() != dout || matrix.ncols() != din {
                        return Err(Error::Type {
                            slice: n,
                            message: format!(
                                "coupon matrix is {}x{}, expected {dout}x{din}",
                                matrix.nrows(),
                                matrix.ncols()
                            ),
                        });
                    }
                    (*pos, inputs.len(), Sparse::from_dense(matrix, CUTOFF))
                }
            };
            state = apply_local(&state, &dims, pos, width, &local, src_dim);
            self.peak = state.iter().map(|z| z.norm()).fold(self.peak, f64::max);
        }
        let tgt_dim: usize = self.dims(&self.diagram.target).iter().product();
        Ok(CMatrix::from_row_slice(tgt_dim, src_dim, &state))
    }

    /// Largest entry seen in any intermediate state of the last `run`, a
    /// scale for the rounding error in its result.
    pub fn peak_magnitude(&self) -> f64 {
        self.peak
    }

    /// Twist scalar of a component's color.
    pub fn twist_scalar(&self, component: usize) -> Result<Complex64> {
        match &self.diagram.components[component].color {
            ColorLabel::Valpha(a) => self.ctx.twist_scalar(*a),
            _ => {
                let m = self.modules[component].as_ref().expect("used").0.clone();
                let (s, res) = scalar_part(&twist_matrix(&m));
                if res > 1e-8 {
                    return Err(Error::NotScalar { residual: res });
                }
                Ok(s)
            }
        }
    }

    /// Product of `θ^{f−w}` over components with an explicit framing.
    pub fn framing_factor(&self) -> Result<Complex64> {
        let writhes = self.diagram.writhes()?;
        let mut out = Complex64::new(1.0, 0.0);
        for (i, c) in self.diagram.components.iter().enumerate() {
            if let (Some(f), Some(_)) = (c.framing, &self.modules[i]) {
                let delta = f - writhes[i];
                if delta != 0 {
                    out *= self.twist_scalar(i)?.powi(delta as i32);
                }
            }
        }
        Ok(out)
    }
}

/// Apply `local` to the factors `pos..pos+width` of a state whose row index
/// runs over the word with factor dimensions `dims`.
fn apply_local(
    state: &[Complex64],
    dims: &[usize],
    pos: usize,
    width: usize,
    local: &Sparse,
    src_dim: usize,
) -> Vec<Complex64> {
    let left: usize = dims[..pos].iter().product();
    let right: usize = dims[pos + width..].iter().product::<usize>() * src_dim;
    let m_in = local.cols;
    let m_out = local.rows;
    debug_assert_eq!(left * m_in * right, state.len());
    let mut out = vec![Complex64::new(0.0, 0.0); left * m_out * right];
    for l in 0..left {
        let src = &state[l * m_in * right..(l + 1) * m_in * right];
        let dst = &mut out[l * m_out * right..(l + 1) * m_out * right];
        for &(o, i, v) in &local.entries {
            let s = &src[i * right..(i + 1) * right];
            let d = &mut dst[o * right..(o + 1) * right];
            for (x, y) in d.iter_mut().zip(s) {
                *x += v * y;
            }
        }
    }
    out
}

/// Raw matrix of a diagram in blackboard framing.
pub fn evaluate_raw(ctx: &RootParams, d: &SlicedDiagram) -> Result<CMatrix> {
    Evaluator::new(ctx, d)?.run()
}

/// The morphism assigned to a diagram, with framing corrections applied.
pub fn evaluate(ctx: &RootParams, d: &SlicedDiagram) -> Result<MorphismMatrix> {
    let mut ev = Evaluator::new(ctx, d)?;
    let m = ev.run()? * ev.framing_factor()?;
    let word_module = |w: &[Strand]| -> Arc<WeightModule> {
        let mut it = w.iter();
        match it.next() {
            None => Arc::new(trivial(ctx)),
            Some(first) => {
                let mut acc = (**ev.module(*first)).clone();
                for s in it {
                    acc = tensor(&acc, ev.module(*s));
                }
                Arc::new(acc)
            }
        }
    };
    Ok(MorphismMatrix {
        source: word_module(&d.source),
        target: word_module(&d.target),
        matrix: m,
        grading_shift: 0,
    })
}
