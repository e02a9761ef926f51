//! Rooted spanning trees with the plane-walk vertex numbering used by the
//! discrete Morse matching.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::GraphError;
use crate::graph::Graph;

/// A spanning tree `T` of a graph, rooted at a tree leaf `*`, with vertices
/// numbered in order of first encounter on a walk around `T`.
///
/// The plane embedding is fixed by sorting each vertex's children by index,
/// so the walk numbering is the depth-first preorder with ascending children.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorseTree {
    graph: Graph,
    root: usize,
    tree_edges: Vec<usize>,
    deleted_edges: Vec<usize>,
    order: Vec<usize>,
    by_order: Vec<usize>,
    parent: Vec<Option<usize>>,
    parent_edge: Vec<Option<usize>>,
    tree_degree: Vec<usize>,
}

impl MorseTree {
    /// Validates `tree_edges` (edge indices of `graph`) as a spanning tree in
    /// which `root` and every endpoint of every non-tree edge are leaves.
    pub fn new(graph: Graph, root: usize, tree_edges: &[usize]) -> Result<Self, GraphError> {
        let n = graph.vertex_count();
        if root >= n || !graph.is_connected() {
            return Err(GraphError::NotSpanningTree);
        }
        let mut in_tree = vec![false; graph.edge_count()];
        for &e in tree_edges {
            if e >= graph.edge_count() || in_tree[e] {
                return Err(GraphError::NotSpanningTree);
            }
            in_tree[e] = true;
        }
        if tree_edges.len() + 1 != n {
            return Err(GraphError::NotSpanningTree);
        }

        let mut children: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let mut tree_degree = vec![0; n];
        for &e in tree_edges {
            let (u, v) = graph.edge(e);
            children[u].push((v, e));
            children[v].push((u, e));
            tree_degree[u] += 1;
            tree_degree[v] += 1;
        }
        for list in &mut children {
            list.sort_unstable();
        }

        let mut order = vec![usize::MAX; n];
        let mut by_order = Vec::with_capacity(n);
        let mut parent = vec![None; n];
        let mut parent_edge = vec![None; n];
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            if order[v] != usize::MAX {
                return Err(GraphError::NotSpanningTree);
            }
            order[v] = by_order.len();
            by_order.push(v);
            for &(w, e) in children[v].iter().rev() {
                if Some(w) != parent[v] {
                    parent[w] = Some(v);
                    parent_edge[w] = Some(e);
                    stack.push(w);
                }
            }
        }
        if by_order.len() != n {
            return Err(GraphError::NotSpanningTree);
        }
        if n > 1 && tree_degree[root] != 1 {
            return Err(GraphError::RootNotLeaf(root));
        }

        let deleted_edges: Vec<usize> = (0..graph.edge_count()).filter(|&e| !in_tree[e]).collect();
        for &e in &deleted_edges {
            let (u, v) = graph.edge(e);
            if tree_degree[u] != 1 || tree_degree[v] != 1 {
                return Err(GraphError::DeletedEdgeEndpoint(e));
            }
        }
        let mut tree_edges = tree_edges.to_vec();
        tree_edges.sort_unstable();

        Ok(Self {
            graph,
            root,
            tree_edges,
            deleted_edges,
            order,
            by_order,
            parent,
            parent_edge,
            tree_degree,
        })
    }

    /// The graph the tree spans (possibly a subdivision of the input).
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn tree_edges(&self) -> &[usize] {
        &self.tree_edges
    }

    pub fn deleted_edges(&self) -> &[usize] {
        &self.deleted_edges
    }

    /// Walk number of each vertex.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Vertices listed by walk number.
    pub fn by_order(&self) -> &[usize] {
        &self.by_order
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// The tree edge `e(v)` leaving `v` toward the root; `None` for the root.
    pub fn edge_toward_root(&self, v: usize) -> Option<usize> {
        self.parent_edge[v]
    }

    pub fn tree_degree(&self, v: usize) -> usize {
        self.tree_degree[v]
    }

    /// Endpoints of edge `e` as `(initial, terminal)`: the initial vertex has
    /// the larger walk number.
    pub fn orient(&self, e: usize) -> (usize, usize) {
        let (u, v) = self.graph.edge(e);
        if self.order[u] > self.order[v] {
            (u, v)
        } else {
            (v, u)
        }
    }
}

/// Prepares `g` for `strands` points and builds its Morse tree.
///
/// The root is the smallest-index vertex of degree 1. When there is none, the
/// smallest edge `(u, v)` is replaced by a path `u ... a b ... v`, the edge
/// `a b` is left out of the tree and `a` becomes the root. The tree is grown
/// depth-first with neighbors in ascending order; every other non-tree edge
/// `(x, y)` is likewise replaced by `x ... p q ... y` with `p q` deleted.
/// The stubs `u ... a` and `x ... p` have length `max(1, strands - 1)`, so
/// the endpoints of deleted edges are tree leaves and the tree itself is
/// sufficiently subdivided whenever `g` is. All modifications are
/// subdivisions, so the result is homeomorphic to `g`.
pub fn morse_spanning_tree(g: &Graph, strands: usize) -> Result<MorseTree, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if g.vertex_count() == 1 {
        return MorseTree::new(g.clone(), 0, &[]);
    }
    let stub = strands.saturating_sub(1).max(1);
    let split_extra = 2 * stub;

    let degrees = g.degrees();
    let (graph, root, forced) = match degrees.iter().position(|&d| d == 1) {
        Some(leaf) => (g.clone(), leaf, None),
        None => {
            let mut extra = vec![0; g.edge_count()];
            extra[0] = split_extra;
            let prepared = g.subdivide_edges(&extra);
            // New vertices run u -> v starting at index V.
            let a = g.vertex_count() + stub - 1;
            let middle = prepared.edge_index(a, a + 1).expect("middle edge exists");
            (prepared, a, Some(middle))
        }
    };

    // Depth-first spanning tree.
    let inc = graph.incidence();
    let mut visited = vec![false; graph.vertex_count()];
    let mut in_tree = vec![false; graph.edge_count()];
    let mut stack = vec![(root, 0usize)];
    visited[root] = true;
    while let Some(&mut (v, ref mut next)) = stack.last_mut() {
        if *next == inc[v].len() {
            stack.pop();
            continue;
        }
        let e = inc[v][*next];
        *next += 1;
        if Some(e) == forced {
            continue;
        }
        let (a, b) = graph.edge(e);
        let w = if a == v { b } else { a };
        if !visited[w] {
            visited[w] = true;
            in_tree[e] = true;
            stack.push((w, 0));
        }
    }

    let split: Vec<bool> = (0..graph.edge_count()).map(|e| !in_tree[e] && Some(e) != forced).collect();
    let extra: Vec<usize> = split.iter().map(|&s| if s { split_extra } else { 0 }).collect();
    let prepared = graph.subdivide_edges(&extra);

    let mut tree_edges = Vec::new();
    let mut fresh = graph.vertex_count();
    for (e, &(u, v)) in graph.edges().iter().enumerate() {
        if split[e] {
            let path: Vec<usize> = core::iter::once(u)
                .chain(fresh..fresh + split_extra)
                .chain(core::iter::once(v))
                .collect();
            fresh += split_extra;
            for (i, w) in path.windows(2).enumerate() {
                if i != stub {
                    tree_edges.push(prepared.edge_index(w[0], w[1]).expect("path edge"));
                }
            }
        } else if in_tree[e] {
            tree_edges.push(prepared.edge_index(u, v).expect("kept edge"));
        }
    }
    MorseTree::new(prepared, root, &tree_edges)
}
