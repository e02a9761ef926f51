//! The discretized unordered configuration space `UD^n(G)`: cubes are sets of
//! `n` pairwise disjoint closed cells (vertices and edges) of `G`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::ComplexError;
use crate::graph::Graph;
use crate::matrix::IntegerMatrix;
use crate::tree::MorseTree;

/// A cube of `UD^n(G)`: occupied vertices plus moving edges, both sorted.
/// Its dimension is the number of edges.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Cell {
    pub fn new(mut vertices: Vec<usize>, mut edges: Vec<usize>) -> Self {
        vertices.sort_unstable();
        edges.sort_unstable();
        Self { vertices, edges }
    }

    pub fn dimension(&self) -> usize {
        self.edges.len()
    }

    pub fn strands(&self) -> usize {
        self.vertices.len() + self.edges.len()
    }

    /// True when every vertex and edge endpoint is distinct.
    pub fn is_disjoint_in(&self, graph: &Graph) -> bool {
        let mut used = vec![false; graph.vertex_count()];
        let mut mark = |v: usize| -> bool {
            if v >= used.len() || used[v] {
                false
            } else {
                used[v] = true;
                true
            }
        };
        self.vertices.iter().all(|&v| mark(v))
            && self.edges.iter().all(|&e| {
                let (a, b) = graph.edge(e);
                mark(a) && mark(b)
            })
    }

    /// Face obtained by collapsing the edge at `position` onto vertex `v`.
    pub fn collapse(&self, position: usize, v: usize) -> Cell {
        let mut edges = self.edges.clone();
        edges.remove(position);
        let mut vertices = self.vertices.clone();
        let at = vertices.binary_search(&v).unwrap_or_else(|i| i);
        vertices.insert(at, v);
        Cell { vertices, edges }
    }
}

/// `UD^n(G)` with cells listed per dimension in lexicographic order of
/// `(vertices, edges)` and integer boundary matrices.
#[derive(Clone, Debug)]
pub struct CubicalComplex {
    strands: usize,
    graph: Graph,
    orientation: Vec<usize>,
    cells: Vec<Vec<Cell>>,
    boundaries: Vec<IntegerMatrix>,
}

impl CubicalComplex {
    /// Builds the complex with edges oriented from smaller to larger vertex index.
    pub fn build(graph: &Graph, strands: usize) -> Result<Self, ComplexError> {
        let identity: Vec<usize> = (0..graph.vertex_count()).collect();
        Self::build_oriented(graph, strands, &identity)
    }

    /// Builds the complex over the tree's graph, orienting edges by walk order.
    pub fn from_tree(tree: &MorseTree, strands: usize) -> Result<Self, ComplexError> {
        Self::build_oriented(tree.graph(), strands, tree.order())
    }

    /// Builds the complex; `order[v]` ranks vertex `v` for edge orientation.
    ///
    /// The boundary of a cube with edges `e_1 < ... < e_d` (by edge index) is
    /// `sum_i (-1)^(i-1) (c[e_i -> high end] - c[e_i -> low end])`.
    pub fn build_oriented(graph: &Graph, strands: usize, order: &[usize]) -> Result<Self, ComplexError> {
        if strands == 0 {
            return Err(ComplexError::NoStrands);
        }
        if strands > graph.vertex_count() {
            return Err(ComplexError::EmptyComplex { strands, vertices: graph.vertex_count() });
        }
        if order.len() != graph.vertex_count() {
            return Err(ComplexError::OrderLength { found: order.len(), expected: graph.vertex_count() });
        }

        let mut cells = enumerate_cells(graph, strands);
        for list in &mut cells {
            list.sort_unstable();
        }
        while cells.len() > 1 && cells.last().is_some_and(|c| c.is_empty()) {
            cells.pop();
        }

        let mut boundaries = Vec::with_capacity(cells.len().saturating_sub(1));
        for d in 1..cells.len() {
            let faces = &cells[d - 1];
            let mut triplets = Vec::with_capacity(cells[d].len() * 2 * d);
            for (col, cell) in cells[d].iter().enumerate() {
                for (pos, &e) in cell.edges.iter().enumerate() {
                    let (u, v) = graph.edge(e);
                    let (high, low) = if order[u] > order[v] { (u, v) } else { (v, u) };
                    let sign: i64 = if pos % 2 == 0 { 1 } else { -1 };
                    let hi_row = faces.binary_search(&cell.collapse(pos, high)).expect("face present");
                    let lo_row = faces.binary_search(&cell.collapse(pos, low)).expect("face present");
                    triplets.push((hi_row, col, BigInt::from(sign)));
                    triplets.push((lo_row, col, BigInt::from(-sign)));
                }
            }
            boundaries.push(IntegerMatrix::from_triplets(faces.len(), cells[d].len(), triplets));
        }

        Ok(Self { strands, graph: graph.clone(), orientation: order.to_vec(), cells, boundaries })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Vertex ranks used to orient edges.
    pub fn orientation(&self) -> &[usize] {
        &self.orientation
    }

    /// Highest dimension with at least one cell.
    pub fn dimension(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn cells(&self, d: usize) -> &[Cell] {
        self.cells.get(d).map_or(&[], |c| c.as_slice())
    }

    pub fn cell_index(&self, cell: &Cell) -> Option<usize> {
        self.cells.get(cell.dimension())?.binary_search(cell).ok()
    }

    /// Cell counts per dimension, up to the top dimension with cells.
    pub fn counts(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.len()).collect()
    }

    /// Cell counts padded with zeros up to dimension `max_dim`.
    pub fn counts_to(&self, max_dim: usize) -> Vec<usize> {
        (0..=max_dim).map(|d| self.cells(d).len()).collect()
    }

    /// `d_d`, mapping `d`-chains to `(d-1)`-chains; a zero matrix outside
    /// the range `1..=dimension()`.
    pub fn boundary(&self, d: usize) -> IntegerMatrix {
        if d >= 1 && d <= self.boundaries.len() {
            self.boundaries[d - 1].clone()
        } else {
            let rows = if d == 0 { 0 } else { self.cells(d - 1).len() };
            IntegerMatrix::zeros(rows, self.cells(d).len())
        }
    }

    pub fn boundary_ref(&self, d: usize) -> Option<&IntegerMatrix> {
        if d >= 1 {
            self.boundaries.get(d - 1)
        } else {
            None
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(d, c)| if d % 2 == 0 { c.len() as i64 } else { -(c.len() as i64) })
            .sum()
    }

    /// Components of the 1-skeleton.
    pub fn connected_components(&self) -> usize {
        let vertices = self.cells(0).len();
        let mut uf = UnionFind::new(vertices);
        if let Some(b) = self.boundary_ref(1) {
            let mut ends: Vec<Vec<usize>> = vec![Vec::new(); b.cols()];
            for (row, col, _) in b.iter() {
                ends[col].push(row);
            }
            for pair in ends {
                uf.union(pair[0], pair[1]);
            }
        }
        uf.count()
    }
}

/// Backtracking over pairwise disjoint closed cells, vertices before edges.
fn enumerate_cells(graph: &Graph, strands: usize) -> Vec<Vec<Cell>> {
    let vertex_count = graph.vertex_count();
    let items = vertex_count + graph.edge_count();
    let mut by_dim: Vec<Vec<Cell>> = vec![Vec::new(); strands + 1];
    let mut occupied = vec![false; vertex_count];
    let mut chosen: Vec<usize> = Vec::with_capacity(strands);

    fn recurse(
        graph: &Graph,
        start: usize,
        items: usize,
        strands: usize,
        occupied: &mut Vec<bool>,
        chosen: &mut Vec<usize>,
        by_dim: &mut Vec<Vec<Cell>>,
    ) {
        if chosen.len() == strands {
            let v = graph.vertex_count();
            let vertices: Vec<usize> = chosen.iter().copied().filter(|&i| i < v).collect();
            let edges: Vec<usize> = chosen.iter().copied().filter(|&i| i >= v).map(|i| i - v).collect();
            by_dim[edges.len()].push(Cell { vertices, edges });
            return;
        }
        let remaining = strands - chosen.len();
        for item in start..items {
            if items - item < remaining {
                break;
            }
            let v = graph.vertex_count();
            if item < v {
                if occupied[item] {
                    continue;
                }
                occupied[item] = true;
                chosen.push(item);
                recurse(graph, item + 1, items, strands, occupied, chosen, by_dim);
                chosen.pop();
                occupied[item] = false;
            } else {
                let (a, b) = graph.edge(item - v);
                if occupied[a] || occupied[b] {
                    continue;
                }
                occupied[a] = true;
                occupied[b] = true;
                chosen.push(item);
                recurse(graph, item + 1, items, strands, occupied, chosen, by_dim);
                chosen.pop();
                occupied[a] = false;
                occupied[b] = false;
            }
        }
    }

    recurse(graph, 0, items, strands, &mut occupied, &mut chosen, &mut by_dim);
    by_dim
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), components: n }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
            self.components -= 1;
        }
    }

    pub(crate) fn count(&self) -> usize {
        self.components
    }
}
