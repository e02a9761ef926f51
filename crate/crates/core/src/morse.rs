//! The Farley–Sabalka discrete gradient on `UD^n(G)`.
//!
//! A vertex `v` of a cell is *unblocked* when `v` is not the root and the tree
//! edge `e(v)` toward the root misses every other vertex and edge of the cell.
//! The principal reduction of a cell replaces its smallest unblocked vertex
//! (in walk order) by `e(v)`. The matching pairs each cell that is not already
//! the image of a lower-dimensional cell with its principal reduction.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::complex::{Cell, CubicalComplex};
use crate::error::TopologyError;
use crate::graph::Graph;
use crate::homology::prepare;
use crate::tree::{morse_spanning_tree, MorseTree};

fn occupancy(cell: &Cell, tree: &MorseTree) -> Vec<bool> {
    let mut occupied = vec![false; tree.graph().vertex_count()];
    for &v in &cell.vertices {
        occupied[v] = true;
    }
    for &e in &cell.edges {
        let (a, b) = tree.graph().edge(e);
        occupied[a] = true;
        occupied[b] = true;
    }
    occupied
}

/// Unblocked vertices of `cell`, sorted by walk order.
pub fn reduction_vertex_candidates(cell: &Cell, tree: &MorseTree) -> Vec<usize> {
    let occupied = occupancy(cell, tree);
    let mut candidates: Vec<usize> = cell
        .vertices
        .iter()
        .copied()
        .filter(|&v| tree.parent(v).is_some_and(|p| !occupied[p]))
        .collect();
    candidates.sort_unstable_by_key(|&v| tree.order()[v]);
    candidates
}

/// The elementary reduction from the smallest unblocked vertex, if any.
pub fn principal_reduction(cell: &Cell, tree: &MorseTree) -> Option<Cell> {
    let v = *reduction_vertex_candidates(cell, tree).first()?;
    let e = tree.edge_toward_root(v)?;
    let vertices = cell.vertices.iter().copied().filter(|&w| w != v).collect();
    let mut edges = cell.edges.clone();
    edges.push(e);
    Some(Cell::new(vertices, edges))
}

/// The discrete vector field `W` together with its critical cells.
#[derive(Clone, Debug)]
pub struct MorseMatching {
    complex: CubicalComplex,
    tree: MorseTree,
    /// `up[d][i]`: index of `W(cell i)` among the `(d+1)`-cells.
    up: Vec<Vec<Option<usize>>>,
    /// `down[d][j]`: the `(d-1)`-cell matched with `d`-cell `j`.
    down: Vec<Vec<Option<usize>>>,
    critical: Vec<Vec<usize>>,
    collisions: Vec<(usize, usize)>,
}

impl MorseMatching {
    /// Builds and validates the matching; `complex` must live over `tree.graph()`.
    pub fn build(complex: &CubicalComplex, tree: &MorseTree) -> Result<Self, TopologyError> {
        let matching = Self::build_unchecked(complex, tree)?;
        matching.validate()?;
        Ok(matching)
    }

    /// Builds the matching without running the validator.
    pub fn build_unchecked(complex: &CubicalComplex, tree: &MorseTree) -> Result<Self, TopologyError> {
        if complex.graph() != tree.graph() {
            return Err(TopologyError::TreeMismatch);
        }
        let top = complex.dimension();
        let mut up: Vec<Vec<Option<usize>>> = (0..=top).map(|d| vec![None; complex.cells(d).len()]).collect();
        let mut down: Vec<Vec<Option<usize>>> = (0..=top).map(|d| vec![None; complex.cells(d).len()]).collect();
        let mut collisions = Vec::new();

        for d in 0..=top {
            for (i, cell) in complex.cells(d).iter().enumerate() {
                if down[d][i].is_some() {
                    continue;
                }
                let Some(reduced) = principal_reduction(cell, tree) else { continue };
                let j = complex.cell_index(&reduced).ok_or_else(|| {
                    TopologyError::InvalidMatching(format!("reduction of {cell:?} is not a cell"))
                })?;
                if down[d + 1][j].is_some() {
                    collisions.push((d, i));
                    continue;
                }
                up[d][i] = Some(j);
                down[d + 1][j] = Some(i);
            }
        }

        let critical = (0..=top)
            .map(|d| (0..complex.cells(d).len()).filter(|&i| up[d][i].is_none() && down[d][i].is_none()).collect())
            .collect();

        Ok(Self { complex: complex.clone(), tree: tree.clone(), up, down, critical, collisions })
    }

    pub fn complex(&self) -> &CubicalComplex {
        &self.complex
    }

    pub fn tree(&self) -> &MorseTree {
        &self.tree
    }

    /// `W_d(i)` as a `(d+1)`-cell index.
    pub fn pair(&self, d: usize, i: usize) -> Option<usize> {
        self.up.get(d)?.get(i).copied().flatten()
    }

    /// The cell matched downward with `d`-cell `j`, if `j` is in the image of `W`.
    pub fn matched_from(&self, d: usize, j: usize) -> Option<usize> {
        self.down.get(d)?.get(j).copied().flatten()
    }

    /// All pairs of `W_d` as `(d-cell, (d+1)-cell)`.
    pub fn pairs(&self, d: usize) -> Vec<(usize, usize)> {
        self.up.get(d).map_or_else(Vec::new, |row| {
            row.iter().enumerate().filter_map(|(i, j)| j.map(|j| (i, j))).collect()
        })
    }

    pub fn critical(&self, d: usize) -> &[usize] {
        self.critical.get(d).map_or(&[], |c| c.as_slice())
    }

    /// Number of critical cells per dimension `0..=complex.dimension()`.
    pub fn critical_counts(&self) -> Vec<usize> {
        self.critical.iter().map(Vec::len).collect()
    }

    /// Checks injectivity, regular faces, `im W_d ∩ dom W_(d+1) = ∅` and the
    /// absence of closed non-stationary gradient paths.
    pub fn validate(&self) -> Result<(), TopologyError> {
        if let Some(&(d, i)) = self.collisions.first() {
            return Err(TopologyError::InvalidMatching(format!(
                "W_{d} is not injective: {:?} reduces onto an already matched cell",
                self.complex.cells(d)[i]
            )));
        }
        for d in 0..self.up.len() {
            for (i, j) in self.pairs(d) {
                let sigma = &self.complex.cells(d)[i];
                let tau = &self.complex.cells(d + 1)[j];
                if !is_regular_face(sigma, tau, &self.complex) {
                    return Err(TopologyError::InvalidMatching(format!(
                        "{sigma:?} is not a collapse of {tau:?}"
                    )));
                }
                if self.up.get(d + 1).is_some_and(|row| row[j].is_some()) {
                    return Err(TopologyError::InvalidMatching(format!(
                        "{tau:?} is both in the image of W_{d} and the domain of W_{}",
                        d + 1
                    )));
                }
            }
            self.check_acyclic(d)?;
        }
        Ok(())
    }

    /// Kahn's algorithm on arcs `sigma -> sigma'` where `sigma'` is a
    /// `d`-face of `W(sigma)` other than `sigma`.
    fn check_acyclic(&self, d: usize) -> Result<(), TopologyError> {
        let cells = self.complex.cells(d);
        let mut arcs: Vec<Vec<usize>> = vec![Vec::new(); cells.len()];
        let mut indegree = vec![0usize; cells.len()];
        for (i, j) in self.pairs(d) {
            let tau = &self.complex.cells(d + 1)[j];
            for face in faces(tau, &self.complex) {
                let k = self.complex.cell_index(&face).expect("face of a cell is a cell");
                if k != i {
                    arcs[i].push(k);
                    indegree[k] += 1;
                }
            }
        }
        let mut queue: VecDeque<usize> = (0..cells.len()).filter(|&i| indegree[i] == 0).collect();
        let mut seen = 0;
        while let Some(i) = queue.pop_front() {
            seen += 1;
            for &k in &arcs[i] {
                indegree[k] -= 1;
                if indegree[k] == 0 {
                    queue.push_back(k);
                }
            }
        }
        if seen == cells.len() {
            Ok(())
        } else {
            Err(TopologyError::InvalidMatching(format!("closed gradient path among {d}-cells")))
        }
    }
}

fn faces(tau: &Cell, complex: &CubicalComplex) -> Vec<Cell> {
    let mut out = Vec::with_capacity(2 * tau.dimension());
    for (pos, &e) in tau.edges.iter().enumerate() {
        let (a, b) = complex.graph().edge(e);
        out.push(tau.collapse(pos, a));
        out.push(tau.collapse(pos, b));
    }
    out
}

fn is_regular_face(sigma: &Cell, tau: &Cell, complex: &CubicalComplex) -> bool {
    sigma.dimension() + 1 == tau.dimension() && faces(tau, complex).iter().any(|f| f == sigma)
}

/// Critical 1-cell count predicted for `UD^n(g)`:
/// `|D| + sum over tree vertices v with deg(v) > 2 of
/// sum_{i=2}^{deg(v)-1} [C(n+deg(v)-2, n-1) - C(n+deg(v)-i-1, n-1)]`,
/// with degrees taken in the Morse tree of the prepared graph.
pub fn morse_generator_count(g: &Graph, strands: usize) -> Result<BigUint, TopologyError> {
    let tree = morse_spanning_tree(g, strands)?;
    Ok(generator_count_for_tree(&tree, strands))
}

pub fn generator_count_for_tree(tree: &MorseTree, strands: usize) -> BigUint {
    let mut total = BigUint::from(tree.deleted_edges().len());
    if strands == 0 {
        return total;
    }
    let k = strands - 1;
    for v in 0..tree.graph().vertex_count() {
        let deg = tree.tree_degree(v);
        if deg <= 2 {
            continue;
        }
        let top = binomial(strands + deg - 2, k);
        for i in 2..deg {
            total += &top - binomial(strands + deg - i - 1, k);
        }
    }
    total
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// Prepares `g` for `strands` points, builds its Morse tree and complex, and
/// returns the validated matching.
pub fn analyze(g: &Graph, strands: usize, auto_subdivide: bool) -> Result<MorseMatching, TopologyError> {
    let prepared = prepare(g, strands, auto_subdivide)?;
    let tree = morse_spanning_tree(&prepared, strands)?;
    let complex = CubicalComplex::from_tree(&tree, strands)?;
    MorseMatching::build(&complex, &tree)
}
