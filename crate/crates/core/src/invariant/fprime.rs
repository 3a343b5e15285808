use crate::diagram::{CapKind, Evaluator, Orientation, Slice, SlicedDiagram};
use crate::error::{Error, Result};
use crate::linalg::{max_abs, scalar_part, CMatrix};
use crate::qscalar::{QScalar, RootParams};
use crate::repcat::{pivotal_diagonal, ColorLabel};

/// Re-route a closed diagram so that the first cap of `cut` is replaced by
/// an arc running over every other strand to the right edge and up to the
/// top. Returns the open diagram and the orientation of its left end.
pub fn cut_open(d: &SlicedDiagram, cut: usize) -> Result<(SlicedDiagram, Orientation)> {
    if !d.is_closed() {
        return Err(Error::Domain("the renormalized invariant needs a closed diagram".into()));
    }
    let words = d.typecheck()?;
    let (n, pos, kind) = d
        .slices
        .iter()
        .enumerate()
        .find_map(|(n, s)| match s {
            Slice::Cap { pos, kind } if words[n][*pos].component == cut => Some((n, *pos, *kind)),
            _ => None,
        })
        .ok_or_else(|| Error::Domain(format!("component {cut} does not occur in the diagram")))?;
    let width = words[n].len();
    let mut slices: Vec<Slice> = d.slices[..n].to_vec();
    for p in pos..width - 2 {
        slices.push(Slice::braid(p + 1, 1));
        slices.push(Slice::braid(p, 1));
    }
    slices.extend(d.slices[n + 1..].iter().cloned());
    let open = SlicedDiagram::new(d.components.clone(), Vec::new(), slices)?;
    let left = match kind {
        CapKind::Ev => Orientation::Down,
        CapKind::EvPivotal => Orientation::Up,
    };
    Ok((open, left))
}

/// The cut-open 1-1 tangle of `d` at `cut`, as an endomorphism of the cut
/// color module, in blackboard framing.
pub fn one_one_tangle(ctx: &RootParams, d: &SlicedDiagram, cut: usize) -> Result<CMatrix> {
    Ok(tangle_with_scale(ctx, d, cut)?.0)
}

/// The 1-1 tangle and the peak intermediate magnitude of its evaluation.
fn tangle_with_scale(ctx: &RootParams, d: &SlicedDiagram, cut: usize) -> Result<(CMatrix, f64)> {
    let (open, left) = cut_open(d, cut)?;
    let m = d.components[cut].color.module(ctx)?;
    let dim = m.dim();
    let mut ev = Evaluator::new(ctx, &open)?;
    let x = ev.run()?;
    debug_assert_eq!(x.nrows(), dim * dim);
    let g = pivotal_diagonal(&m);
    let t = match left {
        Orientation::Up => CMatrix::from_fn(dim, dim, |j, i| x[(j * dim + i, 0)]),
        Orientation::Down => CMatrix::from_fn(dim, dim, |j, i| x[(i * dim + j, 0)] * g[i]),
    };
    Ok((t, ev.peak_magnitude()))
}

/// The renormalized invariant `F′ = d(α)·⟨T⟩` of a closed diagram, cutting
/// the component `cut`, which must carry a simple projective color.
pub fn f_prime(ctx: &RootParams, d: &SlicedDiagram, cut: usize) -> Result<QScalar> {
    let alpha = match &d.components.get(cut).map(|c| &c.color) {
        Some(ColorLabel::Valpha(a)) if ctx.in_cdot(*a) => *a,
        Some(c) => {
            return Err(Error::Domain(format!(
                "cut component is colored {c}, which is not simple projective"
            )))
        }
        None => return Err(Error::Domain(format!("no component {cut}"))),
    };
    let (t, peak) = tangle_with_scale(ctx, d, cut)?;
    let (s, res) = scalar_part(&t);
    if res > ctx.tol * max_abs(&t).max(peak) {
        return Err(Error::NotScalar { residual: res });
    }
    let framing = Evaluator::new(ctx, d)?.framing_factor()?;
    Ok(ctx.mdim(alpha)? * s * framing)
}

/// `F′` cut at every simple projective component, in component order.
pub fn f_prime_all_cuts(ctx: &RootParams, d: &SlicedDiagram) -> Result<Vec<(usize, QScalar)>> {
    let used = d.used_components()?;
    d.components
        .iter()
        .enumerate()
        .filter(|(i, c)| used[*i] && c.color.is_simple_projective(ctx))
        .map(|(i, _)| Ok((i, f_prime(ctx, d, i)?)))
        .collect()
}
