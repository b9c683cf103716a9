//! JSON forms of the core objects. Every serializer iterates ordered
//! containers, so a given value always produces the same bytes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::efl::EflInstance;
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};
use crate::ideal::{CIDecomposition, MonomialIdeal};
use crate::monomial::{Monomial, VarRegistry};

/// `{"variables": ["x", ...], "generators": [{"x": 2, ...}, ...]}`.
/// Variable order in `variables` is the registry order; exponent keys sort
/// alphabetically inside each generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub variables: Vec<String>,
    pub generators: Vec<BTreeMap<String, u32>>,
}

impl IdealJson {
    pub fn from_ideal(m: &MonomialIdeal) -> IdealJson {
        let registry = m.registry();
        IdealJson {
            variables: registry.names().to_vec(),
            generators: m
                .generators()
                .iter()
                .map(|g| {
                    g.exponents()
                        .iter()
                        .map(|&(v, e)| (registry.name(v).to_string(), e))
                        .collect()
                })
                .collect(),
        }
    }

    /// Minimalizes on the way in, so redundant generator lists are accepted.
    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        let registry = VarRegistry::from_names(self.variables.iter().cloned())
            .map_err(|e| Error::Malformed(format!("bad variable list: {e}")))?;
        let registry = std::sync::Arc::new(registry);
        let mut gens = Vec::with_capacity(self.generators.len());
        for (i, exps) in self.generators.iter().enumerate() {
            let mut pairs = Vec::with_capacity(exps.len());
            for (name, &e) in exps {
                let v = registry.id_of(name).ok_or_else(|| {
                    Error::Malformed(format!(
                        "generator {i} uses {name:?}, which is not in the variable list"
                    ))
                })?;
                if e == 0 {
                    return Err(Error::Malformed(format!(
                        "generator {i} gives {name:?} exponent 0; omit the variable instead"
                    )));
                }
                pairs.push((v, e));
            }
            gens.push(Monomial::from_exponents(registry.clone(), pairs)?);
        }
        MonomialIdeal::new(registry, gens)
    }
}

/// `{"n": 6, "edges": [[1,2], ...]}` with 1-based endpoints, smaller first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: u32,
    pub edges: Vec<(u32, u32)>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> GraphJson {
        GraphJson {
            n: g.n(),
            edges: g.edges().collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().copied())
    }
}

/// Clique-union instance: the clique list plus the graph it spans.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceJson {
    pub k: u32,
    pub cliques: Vec<Vec<u32>>,
    pub graph: GraphJson,
}

impl InstanceJson {
    pub fn from_instance(inst: &EflInstance) -> InstanceJson {
        InstanceJson {
            k: inst.k(),
            cliques: inst.cliques().to_vec(),
            graph: GraphJson::from_graph(inst.graph()),
        }
    }

    /// Rebuilds the instance from the cliques; the stored graph must agree
    /// with the one the cliques span.
    pub fn to_instance(&self) -> Result<EflInstance> {
        let inst = EflInstance::new(self.k, self.cliques.clone())?;
        if self.graph.to_graph()? != *inst.graph() {
            return Err(Error::Malformed(
                "graph field does not match the union of the cliques".into(),
            ));
        }
        Ok(inst)
    }
}

/// Vertex-to-color map plus the checked properness flag and the color
/// classes listed in color order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringJson {
    pub num_colors: u32,
    pub colors: BTreeMap<u32, u32>,
    pub proper: bool,
    pub configuration: Vec<Vec<u32>>,
}

impl ColoringJson {
    pub fn from_coloring(c: &Coloring, g: &Graph) -> Result<ColoringJson> {
        let mut colors = BTreeMap::new();
        for v in 1..=g.n() {
            colors.insert(v, c.color(v)?);
        }
        Ok(ColoringJson {
            num_colors: c.num_colors(),
            colors,
            proper: c.is_proper(g)?,
            configuration: c.configuration(),
        })
    }
}

/// Generator indices of the pairwise-coprime part and the rest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub ci: Vec<usize>,
    pub others: Vec<usize>,
}

impl DecompositionJson {
    pub fn from_decomposition(d: &CIDecomposition) -> DecompositionJson {
        DecompositionJson {
            ci: d.ci.clone(),
            others: d.others.clone(),
        }
    }
}

fn syntax_error(e: serde_json::Error) -> Error {
    let message = e.to_string();
    let message = message
        .split(" at line ")
        .next()
        .unwrap_or(&message)
        .to_string();
    Error::Parse {
        line: e.line(),
        message,
    }
}

pub fn ideal_from_json(text: &str) -> Result<MonomialIdeal> {
    let parsed: IdealJson = serde_json::from_str(text).map_err(syntax_error)?;
    parsed.to_ideal()
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let parsed: GraphJson = serde_json::from_str(text).map_err(syntax_error)?;
    parsed.to_graph()
}

pub fn instance_from_json(text: &str) -> Result<EflInstance> {
    let parsed: InstanceJson = serde_json::from_str(text).map_err(syntax_error)?;
    parsed.to_instance()
}

/// Syntactic check only; `CliqueCover::validate` does the rest against a
/// specific graph.
pub fn cover_from_json(text: &str) -> Result<crate::bridge::CliqueCover> {
    serde_json::from_str(text).map_err(syntax_error)
}
