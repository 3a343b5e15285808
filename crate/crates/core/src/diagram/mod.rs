//! Sliced diagrams of colored ribbon tangles and their evaluation.
//!
//! A diagram is read bottom to top. Each slice acts on a boundary word of
//! oriented strands; an upward strand of component `c` carries the color
//! module of `c`, a downward one its dual.

mod eval;
pub mod fixtures;
pub mod schema;

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::qscalar::{Degree, RootParams};
use crate::repcat::ColorLabel;

pub use eval::{evaluate, evaluate_raw, Evaluator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Up,
    Down,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Up => Orientation::Down,
            Orientation::Down => Orientation::Up,
        }
    }
}

/// One entry of a boundary word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Strand {
    pub component: usize,
    pub orientation: Orientation,
}

impl Strand {
    pub fn up(component: usize) -> Self {
        Strand { component, orientation: Orientation::Up }
    }

    pub fn down(component: usize) -> Self {
        Strand { component, orientation: Orientation::Down }
    }
}

pub type BoundaryWord = Vec<Strand>;

/// Which duality map a cup realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CupKind {
    /// `coev: ℂ → V⊗V*`, creates `[up, down]`.
    #[serde(rename = "coev")]
    Coev,
    /// `coev′: ℂ → V*⊗V`, creates `[down, up]`.
    #[serde(rename = "coev'")]
    CoevPivotal,
}

/// Which duality map a cap realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CapKind {
    /// `ev: V*⊗V → ℂ`, consumes `[down, up]`.
    #[serde(rename = "ev")]
    Ev,
    /// `ev′: V⊗V* → ℂ`, consumes `[up, down]`.
    #[serde(rename = "ev'")]
    EvPivotal,
}

impl CupKind {
    pub fn strands(self, component: usize) -> [Strand; 2] {
        match self {
            CupKind::Coev => [Strand::up(component), Strand::down(component)],
            CupKind::CoevPivotal => [Strand::down(component), Strand::up(component)],
        }
    }

    /// The cup whose two strands leave with the given left orientation.
    pub fn with_left(o: Orientation) -> Self {
        match o {
            Orientation::Up => CupKind::Coev,
            Orientation::Down => CupKind::CoevPivotal,
        }
    }
}

impl CapKind {
    pub fn with_left(o: Orientation) -> Self {
        match o {
            Orientation::Down => CapKind::Ev,
            Orientation::Up => CapKind::EvPivotal,
        }
    }

    fn left(self) -> Orientation {
        match self {
            CapKind::Ev => Orientation::Down,
            CapKind::EvPivotal => Orientation::Up,
        }
    }
}

/// An elementary layer of a sliced diagram.
#[derive(Clone, Debug, PartialEq)]
pub enum Slice {
    Id,
    /// Crossing of the strands at `pos` and `pos+1`. Sign `+1` is the
    /// braiding `c` (left strand passes over), `−1` its inverse.
    Braid { pos: usize, sign: i8 },
    Cup { pos: usize, component: usize, kind: CupKind },
    Cap { pos: usize, kind: CapKind },
    /// A box replacing `inputs` (starting at `pos`) with `outputs`; `matrix`
    /// is the linear map between the corresponding tensor products.
    Coupon {
        pos: usize,
        inputs: Vec<Strand>,
        outputs: Vec<Strand>,
        matrix: CMatrix,
    },
}

impl Slice {
    pub fn braid(pos: usize, sign: i8) -> Self {
        Slice::Braid { pos, sign }
    }

    pub fn cup(pos: usize, component: usize, kind: CupKind) -> Self {
        Slice::Cup { pos, component, kind }
    }

    pub fn cap(pos: usize, kind: CapKind) -> Self {
        Slice::Cap { pos, kind }
    }
}

/// Bookkeeping for one link or graph component.
#[derive(Clone, Debug, PartialEq)]
pub struct Component {
    pub name: String,
    pub color: ColorLabel,
    /// Target framing; `None` keeps the blackboard framing.
    pub framing: Option<i64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SlicedDiagram {
    pub source: BoundaryWord,
    pub target: BoundaryWord,
    pub slices: Vec<Slice>,
    pub components: Vec<Component>,
}

/// A crossing located in a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub slice: usize,
    /// Component of the left incoming strand.
    pub left: usize,
    /// Component of the right incoming strand.
    pub right: usize,
    /// Oriented crossing sign.
    pub sign: i64,
}

impl SlicedDiagram {
    /// A diagram on the given components, with `target` inferred from the slices.
    pub fn new(components: Vec<Component>, source: BoundaryWord, slices: Vec<Slice>) -> Result<Self> {
        let mut d = SlicedDiagram {
            source,
            target: Vec::new(),
            slices,
            components,
        };
        let words = d.words()?;
        d.target = words.last().cloned().unwrap_or_default();
        Ok(d)
    }

    /// A closed diagram.
    pub fn closed(components: Vec<Component>, slices: Vec<Slice>) -> Result<Self> {
        let d = Self::new(components, Vec::new(), slices)?;
        if !d.target.is_empty() {
            return Err(Error::Type {
                slice: d.slices.len(),
                message: format!("diagram is not closed: {} open strands", d.target.len()),
            });
        }
        Ok(d)
    }

    pub fn is_closed(&self) -> bool {
        self.source.is_empty() && self.target.is_empty()
    }

    pub fn component_index(&self, name: &str) -> Option<usize> {
        self.components.iter().position(|c| c.name == name)
    }

    /// All boundary words, from the source (index 0) to after the last slice.
    fn words(&self) -> Result<Vec<BoundaryWord>> {
        let mut out = Vec::with_capacity(self.slices.len() + 1);
        let mut w = self.source.clone();
        for s in &self.source {
            self.check_component(0, s.component)?;
        }
        out.push(w.clone());
        for (n, s) in self.slices.iter().enumerate() {
            w = self.apply_slice(n, s, w)?;
            out.push(w.clone());
        }
        Ok(out)
    }

    /// Slice-by-slice composability check, returning the word sequence.
    pub fn typecheck(&self) -> Result<Vec<BoundaryWord>> {
        let words = self.words()?;
        if words.last() != Some(&self.target) {
            return Err(Error::Type {
                slice: self.slices.len(),
                message: "final word differs from the declared target".into(),
            });
        }
        Ok(words)
    }

    fn check_component(&self, slice: usize, c: usize) -> Result<()> {
        if c >= self.components.len() {
            return Err(Error::Type {
                slice,
                message: format!("unknown component {c}"),
            });
        }
        Ok(())
    }

    fn apply_slice(&self, n: usize, s: &Slice, mut w: BoundaryWord) -> Result<BoundaryWord> {
        let err = |message: String| Error::Type { slice: n, message };
        match s {
            Slice::Id => {}
            Slice::Braid { pos, sign } => {
                if pos + 1 >= w.len() {
                    return Err(err(format!("braid at {pos} on a word of width {}", w.len())));
                }
                if sign.abs() != 1 {
                    return Err(err(format!("braid sign must be ±1, got {sign}")));
                }
                w.swap(*pos, pos + 1);
            }
            Slice::Cup { pos, component, kind } => {
                self.check_component(n, *component)?;
                if *pos > w.len() {
                    return Err(err(format!("cup at {pos} on a word of width {}", w.len())));
                }
                let [a, b] = kind.strands(*component);
                w.insert(*pos, b);
                w.insert(*pos, a);
            }
            Slice::Cap { pos, kind } => {
                if pos + 1 >= w.len() {
                    return Err(err(format!("cap at {pos} on a word of width {}", w.len())));
                }
                let (a, b) = (w[*pos], w[pos + 1]);
                if a.component != b.component {
                    return Err(err(format!(
                        "cap joins components {} and {}",
                        a.component, b.component
                    )));
                }
                if a.orientation == b.orientation || a.orientation != kind.left() {
                    return Err(err(format!(
                        "cap {:?} applied to orientations ({:?}, {:?})",
                        kind, a.orientation, b.orientation
                    )));
                }
                w.drain(*pos..pos + 2);
            }
            Slice::Coupon { pos, inputs, outputs, .. } => {
                if pos + inputs.len() > w.len() || w[*pos..pos + inputs.len()] != inputs[..] {
                    return Err(err("coupon inputs do not match the incoming word".into()));
                }
                for o in outputs {
                    self.check_component(n, o.component)?;
                }
                w.splice(*pos..pos + inputs.len(), outputs.iter().copied());
            }
        }
        Ok(w)
    }

    /// Every crossing with its oriented sign.
    pub fn crossings(&self) -> Result<Vec<Crossing>> {
        let words = self.words()?;
        let mut out = Vec::new();
        for (n, s) in self.slices.iter().enumerate() {
            if let Slice::Braid { pos, sign } = s {
                let (a, b) = (words[n][*pos], words[n][pos + 1]);
                let o = if a.orientation == b.orientation { 1 } else { -1 };
                out.push(Crossing {
                    slice: n,
                    left: a.component,
                    right: b.component,
                    sign: *sign as i64 * o,
                });
            }
        }
        Ok(out)
    }

    /// Blackboard writhe of each component.
    pub fn writhes(&self) -> Result<Vec<i64>> {
        let mut w = vec![0; self.components.len()];
        for c in self.crossings()? {
            if c.left == c.right {
                w[c.left] += c.sign;
            }
        }
        Ok(w)
    }

    /// Pairwise linking numbers (zero on the diagonal).
    pub fn linking_matrix(&self) -> Result<Vec<Vec<i64>>> {
        let n = self.components.len();
        let mut twice = vec![vec![0i64; n]; n];
        for c in self.crossings()? {
            if c.left != c.right {
                twice[c.left][c.right] += c.sign;
                twice[c.right][c.left] += c.sign;
            }
        }
        let mut out = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                if twice[i][j] % 2 != 0 {
                    return Err(Error::Geometry(format!(
                        "components {i} and {j} cross an odd number of times"
                    )));
                }
                out[i][j] = twice[i][j] / 2;
            }
        }
        Ok(out)
    }

    /// Components that actually occur in some word of the diagram.
    pub fn used_components(&self) -> Result<Vec<bool>> {
        let mut used = vec![false; self.components.len()];
        for w in self.words()? {
            for s in w {
                used[s.component] = true;
            }
        }
        Ok(used)
    }

    /// Replace the color of a component.
    pub fn with_color(mut self, component: usize, color: ColorLabel) -> Self {
        self.components[component].color = color;
        self
    }

    /// Vertical composition: `self` first, then `other`.
    pub fn then(&self, other: &SlicedDiagram) -> Result<SlicedDiagram> {
        if self.components != other.components || self.target != other.source {
            return Err(Error::Type {
                slice: self.slices.len(),
                message: "diagrams do not compose".into(),
            });
        }
        let mut slices = self.slices.clone();
        slices.extend(other.slices.iter().cloned());
        SlicedDiagram::new(self.components.clone(), self.source.clone(), slices)
    }

    /// Horizontal juxtaposition, `self` on the left.
    pub fn beside(&self, other: &SlicedDiagram) -> Result<SlicedDiagram> {
        let off = self.components.len();
        let shift = |s: &Strand| Strand { component: s.component + off, ..*s };
        let mut components = self.components.clone();
        components.extend(other.components.iter().cloned());
        let mut source = self.source.clone();
        source.extend(other.source.iter().map(shift));
        // Run `self` with the other source idle on the right, then `other`
        // with the finished left part idle.
        let mut slices = self.slices.clone();
        let left_width = self.target.len();
        for s in &other.slices {
            slices.push(match s {
                Slice::Id => Slice::Id,
                Slice::Braid { pos, sign } => Slice::braid(pos + left_width, *sign),
                Slice::Cup { pos, component, kind } => Slice::cup(pos + left_width, component + off, *kind),
                Slice::Cap { pos, kind } => Slice::cap(pos + left_width, *kind),
                Slice::Coupon { pos, inputs, outputs, matrix } => Slice::Coupon {
                    pos: pos + left_width,
                    inputs: inputs.iter().map(shift).collect(),
                    outputs: outputs.iter().map(shift).collect(),
                    matrix: matrix.clone(),
                },
            });
        }
        SlicedDiagram::new(components, source, slices)
    }
}

/// `true` iff every used component's color has degree equal to its meridian value.
pub fn check_cohomology_compatibility(
    ctx: &RootParams,
    d: &SlicedDiagram,
    meridian_values: &[Complex64],
) -> bool {
    if meridian_values.len() != d.components.len() {
        return false;
    }
    d.components
        .iter()
        .zip(meridian_values)
        .all(|(c, m)| c.color.degree(ctx).eq_mod2(Degree(*m), ctx.epsilon_int))
}

impl fmt::Display for SlicedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self
            .components
            .iter()
            .map(|c| format!("{}:{}", c.name, c.color))
            .collect();
        write!(
            f,
            "diagram [{}] with {} slices, {} -> {} strands",
            names.join(", "),
            self.slices.len(),
            self.source.len(),
            self.target.len()
        )
    }
}
