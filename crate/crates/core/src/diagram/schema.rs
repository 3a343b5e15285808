//! JSON form of sliced diagrams.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json::{ColorSpec, ComplexSpec};
use crate::linalg::CMatrix;
use crate::repcat::ColorLabel;

use super::{CapKind, Component, CupKind, Orientation, Slice, SlicedDiagram, Strand};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentSpec {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<ColorSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub framing: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StrandSpec {
    pub component: String,
    pub orientation: Orientation,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum SliceSpec {
    Id,
    Braid {
        pos: usize,
        sign: i8,
    },
    Cup {
        pos: usize,
        component: String,
        map: CupKind,
    },
    Cap {
        pos: usize,
        map: CapKind,
    },
    Coupon {
        pos: usize,
        inputs: Vec<StrandSpec>,
        outputs: Vec<StrandSpec>,
        /// Row-major matrix entries.
        matrix: Vec<Vec<ComplexSpec>>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramSpec {
    pub components: Vec<ComponentSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub source: Vec<StrandSpec>,
    #[serde(rename = "width-changes")]
    pub slices: Vec<SliceSpec>,
    /// Component to cut open when computing the renormalized invariant.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cut: Option<String>,
}

impl DiagramSpec {
    /// Build the diagram; components without a color take one from `fill`.
    pub fn build(&self, fill: &HashMap<String, ColorLabel>) -> Result<SlicedDiagram> {
        let mut names = HashMap::new();
        let mut components = Vec::with_capacity(self.components.len());
        for (i, c) in self.components.iter().enumerate() {
            if names.insert(c.name.clone(), i).is_some() {
                return Err(Error::Schema(format!("duplicate component name {:?}", c.name)));
            }
            let color = match (&c.color, fill.get(&c.name)) {
                (_, Some(f)) => f.clone(),
                (Some(s), None) => s.color()?,
                (None, None) => {
                    return Err(Error::Schema(format!("component {:?} has no color", c.name)))
                }
            };
            components.push(Component {
                name: c.name.clone(),
                color,
                framing: c.framing,
            });
        }
        let lookup = |n: &str| {
            names
                .get(n)
                .copied()
                .ok_or_else(|| Error::Schema(format!("unknown component {n:?}")))
        };
        let strand = |s: &StrandSpec| -> Result<Strand> {
            Ok(Strand {
                component: lookup(&s.component)?,
                orientation: s.orientation,
            })
        };
        let source = self.source.iter().map(strand).collect::<Result<Vec<_>>>()?;
        let mut slices = Vec::with_capacity(self.slices.len());
        for s in &self.slices {
            slices.push(match s {
                SliceSpec::Id => Slice::Id,
                SliceSpec::Braid { pos, sign } => Slice::braid(*pos, *sign),
                SliceSpec::Cup { pos, component, map } => Slice::cup(*pos, lookup(component)?, *map),
                SliceSpec::Cap { pos, map } => Slice::cap(*pos, *map),
                SliceSpec::Coupon { pos, inputs, outputs, matrix } => {
                    let rows = matrix.len();
                    let cols = matrix.first().map_or(0, Vec::len);
                    if matrix.iter().any(|r| r.len() != cols) {
                        return Err(Error::Schema("ragged coupon matrix".into()));
                    }
                    let mut m = CMatrix::zeros(rows, cols);
                    for (i, row) in matrix.iter().enumerate() {
                        for (j, z) in row.iter().enumerate() {
                            m[(i, j)] = z.value()?;
                        }
                    }
                    Slice::Coupon {
                        pos: *pos,
                        inputs: inputs.iter().map(strand).collect::<Result<_>>()?,
                        outputs: outputs.iter().map(strand).collect::<Result<_>>()?,
                        matrix: m,
                    }
                }
            });
        }
        SlicedDiagram::new(components, source, slices)
    }

    pub fn cut_index(&self, d: &SlicedDiagram) -> Result<Option<usize>> {
        self.cut
            .as_ref()
            .map(|n| {
                d.component_index(n)
                    .ok_or_else(|| Error::Schema(format!("unknown cut component {n:?}")))
            })
            .transpose()
    }

    pub fn parse(text: &str) -> Result<Self> {
        crate::json::from_str(text)
    }
}

impl From<&SlicedDiagram> for DiagramSpec {
    fn from(d: &SlicedDiagram) -> Self {
        let name = |c: usize| d.components[c].name.clone();
        let strand = |s: &Strand| StrandSpec {
            component: name(s.component),
            orientation: s.orientation,
        };
        DiagramSpec {
            components: d
                .components
                .iter()
                .map(|c| ComponentSpec {
                    name: c.name.clone(),
                    color: Some((&c.color).into()),
                    framing: c.framing,
                })
                .collect(),
            source: d.source.iter().map(strand).collect(),
            slices: d
                .slices
                .iter()
                .map(|s| match s {
                    Slice::Id => SliceSpec::Id,
                    Slice::Braid { pos, sign } => SliceSpec::Braid { pos: *pos, sign: *sign },
                    Slice::Cup { pos, component, kind } => SliceSpec::Cup {
                        pos: *pos,
                        component: name(*component),
                        map: *kind,
                    },
                    Slice::Cap { pos, kind } => SliceSpec::Cap { pos: *pos, map: *kind },
                    Slice::Coupon { pos, inputs, outputs, matrix } => SliceSpec::Coupon {
                        pos: *pos,
                        inputs: inputs.iter().map(strand).collect(),
                        outputs: outputs.iter().map(strand).collect(),
                        matrix: (0..matrix.nrows())
                            .map(|i| (0..matrix.ncols()).map(|j| matrix[(i, j)].into()).collect())
                            .collect(),
                    },
                })
                .collect(),
            cut: None,
        }
    }
}
