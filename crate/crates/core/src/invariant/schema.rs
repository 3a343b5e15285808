//! JSON form of surgery presentations.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::diagram::schema::DiagramSpec;
use crate::error::{Error, Result};
use crate::json::{ColorSpec, ComplexSpec};
use crate::qscalar::RootParams;
use crate::repcat::ColorLabel;

use super::SurgeryPresentation;

/// A diagram given inline or as a path relative to the surgery file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DiagramRef {
    Inline(Box<DiagramSpec>),
    Path(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurgerySpec {
    pub diagram: DiagramRef,
    /// Names of the components forming the surgery link.
    pub surgery: Vec<String>,
    pub framings: BTreeMap<String, i64>,
    /// Meridian values; graph components default to the degree of their color.
    pub meridians: BTreeMap<String, ComplexSpec>,
    /// Colors of graph components, overriding those in the diagram.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub colors: BTreeMap<String, ColorSpec>,
    #[serde(default)]
    pub defect: i64,
}

impl SurgerySpec {
    pub fn parse(text: &str) -> Result<Self> {
        crate::json::from_str(text)
    }

    pub fn load_diagram(&self, base: Option<&Path>) -> Result<DiagramSpec> {
        match &self.diagram {
            DiagramRef::Inline(d) => Ok((**d).clone()),
            DiagramRef::Path(p) => {
                let path = base.map_or_else(|| Path::new(p).to_path_buf(), |b| b.join(p));
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::Schema(format!("cannot read diagram {}: {e}", path.display())))?;
                DiagramSpec::parse(&text)
            }
        }
    }

    pub fn build(&self, ctx: &RootParams, base: Option<&Path>) -> Result<SurgeryPresentation> {
        let spec = self.load_diagram(base)?;
        let mut fill: HashMap<String, ColorLabel> = HashMap::new();
        for (name, c) in &self.colors {
            fill.insert(name.clone(), c.color()?);
        }
        for name in &self.surgery {
            let mu = self
                .meridians
                .get(name)
                .ok_or_else(|| Error::Schema(format!("surgery component {name:?} has no meridian value")))?;
            fill.insert(name.clone(), ColorLabel::Valpha(mu.value()?));
        }
        let mut d = spec.build(&fill)?;
        let mut surgery = Vec::with_capacity(self.surgery.len());
        for name in &self.surgery {
            let i = d
                .component_index(name)
                .ok_or_else(|| Error::Schema(format!("unknown surgery component {name:?}")))?;
            let f = self
                .framings
                .get(name)
                .ok_or_else(|| Error::Schema(format!("surgery component {name:?} has no framing")))?;
            d.components[i].framing = Some(*f);
            surgery.push(i);
        }
        for name in self.framings.keys().chain(self.meridians.keys()).chain(self.colors.keys()) {
            if d.component_index(name).is_none() {
                return Err(Error::Schema(format!("unknown component {name:?}")));
            }
        }
        let meridians = d
            .components
            .iter()
            .map(|c| match self.meridians.get(&c.name) {
                Some(m) => m.value(),
                None => Ok(c.color.degree(ctx).0),
            })
            .collect::<Result<Vec<_>>>()?;
        SurgeryPresentation::new(d, surgery, meridians, self.defect)
    }
}

impl From<&SurgeryPresentation> for SurgerySpec {
    fn from(sp: &SurgeryPresentation) -> Self {
        let mut diagram = DiagramSpec::from(&sp.diagram);
        for &i in &sp.surgery {
            diagram.components[i].color = None;
            diagram.components[i].framing = None;
        }
        let name = |i: usize| sp.diagram.components[i].name.clone();
        SurgerySpec {
            diagram: DiagramRef::Inline(Box::new(diagram)),
            surgery: sp.surgery.iter().map(|&i| name(i)).collect(),
            framings: sp
                .surgery
                .iter()
                .map(|&i| (name(i), sp.diagram.components[i].framing.expect("framing")))
                .collect(),
            meridians: sp
                .meridians
                .iter()
                .enumerate()
                .map(|(i, m)| (name(i), (*m).into()))
                .collect(),
            colors: BTreeMap::new(),
            defect: sp.signature_defect,
        }
    }
}
