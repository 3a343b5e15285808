use crate::diagram::{BoundaryWord, CapKind, CupKind, Orientation, Slice, SlicedDiagram, Strand};
use crate::error::{Error, Result};

use super::SurgeryPresentation;

/// Whether the slid component picks up `+[j]` or `−[j]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlideMode {
    /// Whichever the first usable band position gives.
    Auto,
    Add,
    Subtract,
}

/// Side of each `j`-strand, relative to its direction of travel, on which
/// the push-off runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

struct Plan {
    level: usize,
    /// Left position of the adjacent `(i, j)` pair at `level`.
    pos: usize,
    side: Side,
    add: bool,
}

/// Slide component `i` over component `j` (both surgery components).
pub fn handle_slide(sp: &SurgeryPresentation, i: usize, j: usize) -> Result<SurgeryPresentation> {
    handle_slide_with(sp, i, j, SlideMode::Auto)
}

pub fn handle_slide_with(
    sp: &SurgeryPresentation,
    i: usize,
    j: usize,
    mode: SlideMode,
) -> Result<SurgeryPresentation> {
    if i == j || !sp.surgery.contains(&i) || !sp.surgery.contains(&j) {
        return Err(Error::Domain(format!(
            "handle slide needs two distinct surgery components, got {i} and {j}"
        )));
    }
    match plan(&sp.diagram, i, j, mode)? {
        Some(p) => slide(sp, i, j, p),
        None if mode != SlideMode::Auto => {
            let flipped = reverse_component(sp, j)?;
            match plan(&flipped.diagram, i, j, mode)? {
                Some(p) => slide(&flipped, i, j, p),
                None => Err(Error::Geometry("no band position realizes the requested slide".into())),
            }
        }
        None => Err(Error::Geometry(format!(
            "components {i} and {j} are never adjacent in the diagram"
        ))),
    }
}

fn plan(d: &SlicedDiagram, i: usize, j: usize, mode: SlideMode) -> Result<Option<Plan>> {
    let words = d.typecheck()?;
    for (level, w) in words.iter().enumerate() {
        for p in 0..w.len().saturating_sub(1) {
            let (a, b) = (w[p], w[p + 1]);
            let (si, sj, i_left) = if a.component == i && b.component == j {
                (a, b, true)
            } else if a.component == j && b.component == i {
                (b, a, false)
            } else {
                continue;
            };
            let add = si.orientation != sj.orientation;
            if (mode == SlideMode::Add && !add) || (mode == SlideMode::Subtract && add) {
                continue;
            }
            // The push-off must sit between the two strands on the page.
            let copy_page_left = i_left;
            let side = match (sj.orientation, copy_page_left) {
                (Orientation::Up, true) | (Orientation::Down, false) => Side::Left,
                _ => Side::Right,
            };
            return Ok(Some(Plan { level, pos: p, side, add }));
        }
    }
    Ok(None)
}

/// Reverse the orientation of one component; its meridian value changes sign.
pub fn reverse_component(sp: &SurgeryPresentation, j: usize) -> Result<SurgeryPresentation> {
    let d = &sp.diagram;
    let flip = |s: &Strand| {
        if s.component == j {
            Strand { component: j, orientation: s.orientation.flip() }
        } else {
            *s
        }
    };
    let words = d.typecheck()?;
    let mut slices = Vec::with_capacity(d.slices.len());
    for (n, s) in d.slices.iter().enumerate() {
        slices.push(match s {
            Slice::Cup { pos, component, kind } if *component == j => Slice::cup(
                *pos,
                j,
                match kind {
                    CupKind::Coev => CupKind::CoevPivotal,
                    CupKind::CoevPivotal => CupKind::Coev,
                },
            ),
            Slice::Cap { pos, kind } if words[n][*pos].component == j => Slice::cap(
                *pos,
                match kind {
                    CapKind::Ev => CapKind::EvPivotal,
                    CapKind::EvPivotal => CapKind::Ev,
                },
            ),
            Slice::Coupon { inputs, outputs, .. }
                if inputs.iter().chain(outputs).any(|s| s.component == j) =>
            {
                return Err(Error::Geometry("cannot reverse a component through a coupon".into()))
            }
            other => other.clone(),
        });
    }
    let diagram = SlicedDiagram::new(d.components.clone(), d.source.iter().map(flip).collect(), slices)?;
    let mut meridians = sp.meridians.clone();
    meridians[j] = -meridians[j];
    let mut out = sp.clone();
    out.diagram = diagram;
    out.meridians = meridians;
    Ok(out)
}

/// Expansion of one old strand into its new strands, in page order.
fn block(s: Strand, i: usize, j: usize, side: Side, add: bool) -> Vec<Strand> {
    if s.component != j {
        return vec![s];
    }
    let copy = Strand {
        component: i,
        orientation: if add { s.orientation } else { s.orientation.flip() },
    };
    let copy_left = matches!(
        (side, s.orientation),
        (Side::Left, Orientation::Up) | (Side::Right, Orientation::Down)
    );
    if copy_left {
        vec![copy, s]
    } else {
        vec![s, copy]
    }
}

fn offsets(w: &BoundaryWord, j: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(w.len() + 1);
    let mut acc = 0;
    for s in w {
        out.push(acc);
        acc += if s.component == j { 2 } else { 1 };
    }
    out.push(acc);
    out
}

fn slide(sp: &SurgeryPresentation, i: usize, j: usize, plan: Plan) -> Result<SurgeryPresentation> {
    let d = &sp.diagram;
    let words = d.typecheck()?;
    let lk = d.linking_matrix()?;
    let writhes = d.writhes()?;
    let fi = d.components[i].framing.expect("surgery framing");
    let fj = d.components[j].framing.expect("surgery framing");
    let Plan { level, pos: band_pos, side, add } = plan;
    let blk = |s: Strand| block(s, i, j, side, add);

    if d.source.iter().any(|s| s.component == j) {
        return Err(Error::Geometry("cannot slide over an open component".into()));
    }
    let mut slices = Vec::new();
    for n in 0..=d.slices.len() {
        let w = &words[n];
        let off = offsets(w, j);
        if n == level {
            let (p, q) = (band_pos, band_pos + 1);
            let jpos = if w[p].component == j { p } else { q };
            // Full twists between j and its push-off fix the push-off's
            // linking with j to the framing.
            let excess = fj - writhes[j];
            let sign: i8 = if excess > 0 { 1 } else { -1 };
            for _ in 0..2 * excess.unsigned_abs() {
                slices.push(Slice::braid(off[jpos], sign));
            }
            // Band between the strand of i and the adjacent push-off strand.
            let left = if jpos == p { off[p] + 1 } else { off[p] };
            let mut expanded: Vec<Strand> = Vec::new();
            for s in w {
                expanded.extend(blk(*s));
            }
            let (a, b) = (expanded[left], expanded[left + 1]);
            if a.component != i || b.component != i || a.orientation == b.orientation {
                return Err(Error::Geometry("band endpoints are not compatible".into()));
            }
            slices.push(Slice::cap(left, CapKind::with_left(a.orientation)));
            slices.push(Slice::cup(left, i, CupKind::with_left(a.orientation)));
        }
        if n == d.slices.len() {
            break;
        }
        match &d.slices[n] {
            Slice::Id => slices.push(Slice::Id),
            Slice::Braid { pos, sign } => {
                let (wa, wb) = (blk(w[*pos]).len(), blk(w[pos + 1]).len());
                let base = off[*pos];
                for xi in (0..wa).rev() {
                    for t in 0..wb {
                        slices.push(Slice::braid(base + xi + t, *sign));
                    }
                }
            }
            Slice::Cup { pos, component, kind } => {
                let at = off[*pos];
                if *component == j {
                    let [a, b] = kind.strands(j);
                    let (ba, bb) = (blk(a), blk(b));
                    let mut new_word = ba.clone();
                    new_word.extend(bb);
                    // Outer pair first, then the inner pair between them.
                    slices.push(Slice::cup(at, new_word[0].component, CupKind::with_left(new_word[0].orientation)));
                    slices.push(Slice::cup(at + 1, new_word[1].component, CupKind::with_left(new_word[1].orientation)));
                } else {
                    slices.push(Slice::cup(at, *component, *kind));
                }
            }
            Slice::Cap { pos, kind } => {
                let at = off[*pos];
                if w[*pos].component == j {
                    let ba = blk(w[*pos]);
                    slices.push(Slice::cap(at + 1, CapKind::with_left(ba[1].orientation)));
                    slices.push(Slice::cap(at, CapKind::with_left(ba[0].orientation)));
                } else {
                    slices.push(Slice::cap(at, *kind));
                }
            }
            Slice::Coupon { pos, inputs, outputs, matrix } => {
                if inputs.iter().chain(outputs).any(|s| s.component == j) {
                    return Err(Error::Geometry("cannot push a component off through a coupon".into()));
                }
                slices.push(Slice::Coupon {
                    pos: off[*pos],
                    inputs: inputs.clone(),
                    outputs: outputs.clone(),
                    matrix: matrix.clone(),
                });
            }
        }
    }
    let mut components = d.components.clone();
    let e: i64 = if add { 1 } else { -1 };
    components[i].framing = Some(fi + fj + 2 * e * lk[i][j]);
    let diagram = SlicedDiagram::new(components, d.source.clone(), slices)?;
    let mut meridians = sp.meridians.clone();
    meridians[j] = sp.meridians[j] - sp.meridians[i] * e as f64;
    SurgeryPresentation::new(diagram, sp.surgery.clone(), meridians, sp.signature_defect)
}
