//! JSON form of decorated trivalent graphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json::{ColorSpec, ComplexSpec};

use super::{Edge, TrivalentGraph, Vertex};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum VertexSpec {
    Internal { order: usize },
    External { color: ColorSpec },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSpec {
    pub tail: usize,
    pub head: usize,
    pub grading: ComplexSpec,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSpec {
    #[serde(default)]
    pub vertices: Vec<VertexSpec>,
    #[serde(default)]
    pub edges: Vec<EdgeSpec>,
    /// Gradings of vertex-free circle components.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub loops: Vec<ComplexSpec>,
}

impl GraphSpec {
    pub fn parse(text: &str) -> Result<Self> {
        crate::json::from_str(text)
    }

    pub fn build(&self) -> Result<TrivalentGraph> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                Ok(match v {
                    VertexSpec::Internal { order } => Vertex::Internal { order: *order },
                    VertexSpec::External { color } => Vertex::External { color: color.color()? },
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| {
                for end in [e.tail, e.head] {
                    if end >= vertices.len() {
                        return Err(Error::Schema(format!("at `edges[{i}]`: no vertex {end}")));
                    }
                }
                Ok(Edge {
                    tail: e.tail,
                    head: e.head,
                    grading: e.grading.value()?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let loops = self.loops.iter().map(ComplexSpec::value).collect::<Result<Vec<_>>>()?;
        Ok(TrivalentGraph { vertices, edges, loops })
    }
}

impl From<&TrivalentGraph> for GraphSpec {
    fn from(g: &TrivalentGraph) -> Self {
        GraphSpec {
            vertices: g
                .vertices
                .iter()
                .map(|v| match v {
                    Vertex::Internal { order } => VertexSpec::Internal { order: *order },
                    Vertex::External { color } => VertexSpec::External { color: color.into() },
                })
                .collect(),
            edges: g
                .edges
                .iter()
                .map(|e| EdgeSpec {
                    tail: e.tail,
                    head: e.head,
                    grading: e.grading.into(),
                })
                .collect(),
            loops: g.loops.iter().map(|&w| w.into()).collect(),
        }
    }
}
