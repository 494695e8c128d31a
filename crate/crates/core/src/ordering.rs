use crate::error::{Error, Result};
use crate::graph::Vertex;

/// A linear order of the vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexOrdering {
    order: Vec<Vertex>,
    pos: Vec<usize>,
}

impl VertexOrdering {
    /// Builds an ordering; `order` must be a permutation of `0..order.len()`.
    pub fn new(order: Vec<Vertex>) -> Result<Self> {
        let n = order.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(Error::Ordering(format!("vertex {v} out of range 0..{n}")));
            }
            if pos[v] != usize::MAX {
                return Err(Error::Ordering(format!("vertex {v} appears twice")));
            }
            pos[v] = i;
        }
        Ok(VertexOrdering { order, pos })
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering {
            order: (0..n).collect(),
            pos: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn positions(&self) -> &[usize] {
        &self.pos
    }

    pub fn position(&self, v: Vertex) -> usize {
        self.pos[v]
    }

    pub fn at(&self, i: usize) -> Vertex {
        self.order[i]
    }

    pub fn precedes(&self, a: Vertex, b: Vertex) -> bool {
        self.pos[a] < self.pos[b]
    }

    pub fn reversed(&self) -> Self {
        let mut order = self.order.clone();
        order.reverse();
        VertexOrdering::new(order).expect("reversal keeps a permutation")
    }
}
