//! Matching weights on `K_{n,n}` and the grid argument for its lower bound.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Vertex, WeightedGraph};
use crate::ordering::VertexOrdering;

/// `K_{n,n}` on `A = 0..n`, `B = n..2n`. The matching `M_i` joins `a_j` with
/// `b_{(j+i) mod n}` and has weight `i`, so every vertex sees each weight
/// `1..=n` exactly once.
pub fn gen_knn_weights(n: usize) -> Result<WeightedGraph> {
    if n == 0 {
        return Err(Error::Precondition("K_{n,n} needs n >= 1".into()));
    }
    let mut es = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 0..n {
            es.push((j, n + (j + i) % n, i as i64));
        }
    }
    WeightedGraph::from_int_edges(2 * n, &es)
}

/// Smallest integer `k` with `k^2 - (3n/2) k + n^2/4 <= 0`, i.e.
/// `ceil((3 - sqrt 5) / 4 * n)`.
pub fn knn_lower_bound(n: usize) -> usize {
    let n = n as i128;
    (0..).find(|&k: &i128| 4 * k * k - 6 * n * k + n * n <= 0).unwrap() as usize
}

/// Binary matrix with one row per weight level (row 0 is the lightest) and
/// one column per vertex of the later part, in spine order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridMatrix {
    rows: usize,
    cols: usize,
    cells: Vec<Vec<bool>>,
}

impl GridMatrix {
    /// `cells[row][col]`; every row must have the same length.
    pub fn new(cells: Vec<Vec<bool>>) -> Result<Self> {
        let rows = cells.len();
        let cols = cells.first().map_or(0, Vec::len);
        if let Some(r) = cells.iter().position(|r| r.len() != cols) {
            return Err(Error::Precondition(format!("grid row {r} has {} cells, expected {cols}", cells[r].len())));
        }
        Ok(GridMatrix { rows, cols, cells })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.cells[row][col]
    }

    pub fn ones(&self) -> usize {
        self.cells.iter().flatten().filter(|&&c| c).count()
    }

    /// `rows = 2 * cols` and every column holds exactly `cols` ones.
    pub fn is_knn_shaped(&self) -> bool {
        self.rows == 2 * self.cols
            && (0..self.cols).all(|c| (0..self.rows).filter(|&r| self.cells[r][c]).count() == self.cols)
    }

    /// Matrix of a separated sub-layout: columns are the `right` vertices in
    /// order, rows the dense weight ranks of `g`, and a cell is set when the
    /// column vertex has an edge of that weight to a `left` vertex.
    pub fn from_separated(g: &WeightedGraph, left: &[Vertex], right: &[Vertex]) -> Self {
        let rk = g.ranks();
        let rows = rk.iter().max().map_or(0, |&r| r as usize + 1);
        let mut cells = vec![vec![false; right.len()]; rows];
        for (c, &b) in right.iter().enumerate() {
            for &(a, e) in g.neighbors(b) {
                if left.contains(&a) {
                    cells[rk[e] as usize][c] = true;
                }
            }
        }
        GridMatrix { rows, cols: right.len(), cells }
    }
}

/// A sub-layout whose `left` vertices all precede its `right` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparatedSub {
    pub left: Vec<Vertex>,
    pub right: Vec<Vertex>,
}

/// For `K_{n,n}` with `A = 0..n`, `B = n..2n` (n even) under `ord`: the
/// `n/2` first vertices of one part and the `n/2` last of the other, chosen
/// so that one group entirely precedes the other.
pub fn separated_sublayout(n: usize, ord: &VertexOrdering) -> Result<SeparatedSub> {
    if n == 0 || n % 2 != 0 || ord.len() != 2 * n {
        return Err(Error::Precondition("need an even n >= 2 and an ordering of 2n vertices".into()));
    }
    let half = n / 2;
    let in_a = |v: Vertex| v < n;
    let seq = ord.order();
    let mut seen = 0;
    let t = seq
        .iter()
        .position(|&v| {
            seen += usize::from(in_a(v));
            seen == half
        })
        .unwrap()
        + 1;
    let late_b: Vec<Vertex> = seq[t..].iter().copied().filter(|&v| !in_a(v)).collect();
    if late_b.len() >= half {
        Ok(SeparatedSub {
            left: seq[..t].iter().copied().filter(|&v| in_a(v)).collect(),
            right: late_b[late_b.len() - half..].to_vec(),
        })
    } else {
        let early_b: Vec<Vertex> = seq[..t].iter().copied().filter(|&v| !in_a(v)).take(half).collect();
        Ok(SeparatedSub {
            left: early_b,
            right: seq[t..].iter().copied().filter(|&v| in_a(v)).collect(),
        })
    }
}

/// The weighted `K_{n,n}` restricted to the separated sub-layout of `ord`,
/// with that sub-layout and its grid. Vertex `i` of the returned graph is
/// `sub.left ++ sub.right` at index `i`.
pub fn knn_grid(n: usize, ord: &VertexOrdering) -> Result<(WeightedGraph, SeparatedSub, GridMatrix)> {
    let g = gen_knn_weights(n)?;
    let sub = separated_sublayout(n, ord)?;
    let grid = GridMatrix::from_separated(&g, &sub.left, &sub.right);
    let verts: Vec<Vertex> = sub.left.iter().chain(&sub.right).copied().collect();
    let (h, _) = g.induced(&verts);
    Ok((h, sub, grid))
}

/// Outcome of peeling a grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridPeel {
    /// Number of peeling steps until the grid is empty.
    pub k: usize,
    /// Cells `(row, col)` removed at each step.
    pub steps: Vec<Vec<(usize, usize)>>,
    /// A strictly decreasing path of length `k`: columns increase and rows
    /// (weights) decrease along it.
    pub path: Vec<(usize, usize)>,
}

/// Repeatedly removes every set cell whose top-left region (strictly heavier
/// rows, strictly earlier columns) holds no set cell.
pub fn grid_peel(m: &GridMatrix) -> GridPeel {
    let mut live: Vec<Vec<bool>> = m.cells.clone();
    let mut layer = vec![vec![0usize; m.cols]; m.rows];
    let mut steps: Vec<Vec<(usize, usize)>> = Vec::new();
    let in_region = |r: usize, c: usize, r2: usize, c2: usize| r2 > r && c2 < c;
    loop {
        let mut step = Vec::new();
        for r in 0..m.rows {
            for c in 0..m.cols {
                if !live[r][c] {
                    continue;
                }
                let blocked = (r + 1..m.rows).any(|r2| (0..c).any(|c2| live[r2][c2]));
                if !blocked {
                    step.push((r, c));
                }
            }
        }
        if step.is_empty() {
            break;
        }
        for &(r, c) in &step {
            live[r][c] = false;
            layer[r][c] = steps.len() + 1;
        }
        steps.push(step);
    }
    let k = steps.len();
    let mut path = Vec::with_capacity(k);
    if let Some(&last) = steps.last().and_then(|s| s.first()) {
        path.push(last);
        for i in (1..k).rev() {
            let (r, c) = *path.last().unwrap();
            let prev = steps[i - 1]
                .iter()
                .copied()
                .find(|&(r2, c2)| in_region(r, c, r2, c2))
                .expect("a cell peeled at step i+1 was blocked by one peeled at step i");
            path.push(prev);
        }
        path.reverse();
    }
    GridPeel { k, steps, path }
}
