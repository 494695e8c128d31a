//! One-page layouts for the graph families that admit one for every weighting.

mod contraction;
mod cycles;
mod k23;
mod tree;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Vertex, WeightedGraph};
use crate::layout::Layout;
use crate::structures::{Caterpillar, CyclePlusCaterpillar, LeggedCycle, Quadrangle, RootedTree, TriangleCaterpillars};

pub use contraction::{
    layout_k4_minus_e, layout_triangle_case, transfer_by_contraction, transfer_by_contraction_traced, TransferStrategy,
};
pub use cycles::{layout_cycle, layout_cycle_plus_caterpillar, layout_legged_cycle, layout_quadrangle};
pub use k23::{k23_parts, layout_k23};
pub use tree::{caterpillar_ordering_with, layout_caterpillar, layout_tree, layout_tree_traced, TreeStep};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Tree,
    Caterpillar,
    Cycle,
    LeggedCycle,
    CyclePlusCaterpillar,
    Quadrangle,
    Triangle,
    K23,
    K4MinusE,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Tree,
        Family::Caterpillar,
        Family::Cycle,
        Family::LeggedCycle,
        Family::CyclePlusCaterpillar,
        Family::Quadrangle,
        Family::Triangle,
        Family::K23,
        Family::K4MinusE,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Tree => "tree",
            Family::Caterpillar => "caterpillar",
            Family::Cycle => "cycle",
            Family::LeggedCycle => "legged-cycle",
            Family::CyclePlusCaterpillar => "cycle+caterpillar",
            Family::Quadrangle => "quadrangle",
            Family::Triangle => "triangle",
            Family::K23 => "K23",
            Family::K4MinusE => "K4-e",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('\u{2212}', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.tag().to_ascii_lowercase() == norm)
            .ok_or_else(|| {
                let tags: Vec<&str> = Family::ALL.iter().map(|f| f.tag()).collect();
                Error::parse("family", format!("unknown family {s:?}; expected one of {}", tags.join(", ")))
            })
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// A named landmark of a construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Anchor {
    Vertex(Vertex),
    Edge([Vertex; 2]),
    Vertices(Vec<Vertex>),
    Label(String),
}

/// A constructed one-page layout with the landmarks the construction used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionReport {
    pub layout: Layout,
    pub family: Family,
    pub anchors: BTreeMap<String, Anchor>,
}

impl ConstructionReport {
    fn new(g: &WeightedGraph, order: Vec<Vertex>, family: Family) -> Result<Self> {
        let ordering = crate::ordering::VertexOrdering::new(order)
            .map_err(|e| Error::Structure(format!("construction produced a non-permutation: {e}")))?;
        Ok(ConstructionReport {
            layout: Layout::one_page(g.clone(), ordering)?,
            family,
            anchors: BTreeMap::new(),
        })
    }

    fn anchor(mut self, name: &str, a: Anchor) -> Self {
        self.anchors.insert(name.to_owned(), a);
        self
    }

    pub fn anchors_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.anchors).expect("anchors serialize")
    }
}

/// An annotated family instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyInstance {
    Tree(RootedTree),
    Caterpillar(Caterpillar, Vertex),
    Cycle(WeightedGraph, Vertex),
    LeggedCycle(LeggedCycle),
    CyclePlusCaterpillar(CyclePlusCaterpillar),
    Quadrangle(Quadrangle),
    Triangle(TriangleCaterpillars),
    K23(WeightedGraph),
    K4MinusE(WeightedGraph),
}

impl FamilyInstance {
    pub fn family(&self) -> Family {
        match self {
            FamilyInstance::Tree(_) => Family::Tree,
            FamilyInstance::Caterpillar(..) => Family::Caterpillar,
            FamilyInstance::Cycle(..) => Family::Cycle,
            FamilyInstance::LeggedCycle(_) => Family::LeggedCycle,
            FamilyInstance::CyclePlusCaterpillar(_) => Family::CyclePlusCaterpillar,
            FamilyInstance::Quadrangle(_) => Family::Quadrangle,
            FamilyInstance::Triangle(_) => Family::Triangle,
            FamilyInstance::K23(_) => Family::K23,
            FamilyInstance::K4MinusE(_) => Family::K4MinusE,
        }
    }

    pub fn graph(&self) -> &WeightedGraph {
        match self {
            FamilyInstance::Tree(t) => t.graph(),
            FamilyInstance::Caterpillar(c, _) => c.graph(),
            FamilyInstance::Cycle(g, _) | FamilyInstance::K23(g) | FamilyInstance::K4MinusE(g) => g,
            FamilyInstance::LeggedCycle(l) => l.graph(),
            FamilyInstance::CyclePlusCaterpillar(c) => c.graph(),
            FamilyInstance::Quadrangle(q) => q.graph(),
            FamilyInstance::Triangle(t) => t.graph(),
        }
    }

    /// Runs the family's constructor.
    pub fn construct(&self) -> Result<ConstructionReport> {
        match self {
            FamilyInstance::Tree(t) => layout_tree(t),
            FamilyInstance::Caterpillar(c, r) => layout_caterpillar(c, *r),
            FamilyInstance::Cycle(g, v) => layout_cycle(g, *v),
            FamilyInstance::LeggedCycle(l) => layout_legged_cycle(l),
            FamilyInstance::CyclePlusCaterpillar(c) => layout_cycle_plus_caterpillar(c),
            FamilyInstance::Quadrangle(q) => layout_quadrangle(q),
            FamilyInstance::Triangle(t) => layout_triangle_case(t),
            FamilyInstance::K23(g) => layout_k23(g),
            FamilyInstance::K4MinusE(g) => layout_k4_minus_e(g),
        }
    }
}

/// Heaviest edge among `ids` (ties to the smallest id).
pub(crate) fn heaviest(rk: &[u32], ids: impl IntoIterator<Item = EdgeId>) -> Option<EdgeId> {
    ids.into_iter().max_by_key(|&e| (rk[e], std::cmp::Reverse(e)))
}

pub(crate) fn edge_anchor(g: &WeightedGraph, e: EdgeId) -> Anchor {
    Anchor::Edge([g.edge(e).u, g.edge(e).v])
}
