//! Finite simple graphs and the combinatorics that feed configuration spaces:
//! essential vertices, maximal degree-2 chains, subdivision, homeomorphism
//! classes, line and opposite graphs.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::GraphError;

/// A finite simple undirected graph with a canonical, sorted edge list.
///
/// Edges are stored as `(u, v)` with `u < v`; the edge index of an edge is its
/// position in [`Graph::edges`], which every other module relies on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated edges and out-of-range endpoints.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut canon = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::EndpointOutOfRange { u, v, vertex_count });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            canon.push(if u < v { (u, v) } else { (v, u) });
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self { vertex_count, edges: canon })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self { vertex_count, edges: Vec::new() }
    }

    pub fn path(vertex_count: usize) -> Self {
        let edges: Vec<_> = (1..vertex_count).map(|i| (i - 1, i)).collect();
        Self { vertex_count, edges }
    }

    /// Cycle on `vertex_count >= 3` vertices.
    pub fn cycle(vertex_count: usize) -> Self {
        assert!(vertex_count >= 3, "a simple cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..vertex_count).map(|i| (i - 1, i)).collect();
        edges.push((0, vertex_count - 1));
        Self::new(vertex_count, &edges).expect("cycle is simple")
    }

    /// Star with center 0 and `legs` leaves `1..=legs`.
    pub fn star(legs: usize) -> Self {
        let edges: Vec<_> = (1..=legs).map(|i| (0, i)).collect();
        Self { vertex_count: legs + 1, edges }
    }

    pub fn complete(vertex_count: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..vertex_count {
            for v in u + 1..vertex_count {
                edges.push((u, v));
            }
        }
        Self { vertex_count, edges }
    }

    pub fn complete_bipartite(left: usize, right: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..left {
            for v in 0..right {
                edges.push((u, left + v));
            }
        }
        Self::new(left + right, &edges).expect("bipartite graph is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Neighbor lists, each sorted by vertex index.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Incident edge indices per vertex, ordered by the neighbor's index.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.vertex_count];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push((v, i));
            inc[v].push((u, i));
        }
        inc.into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.into_iter().map(|(_, e)| e).collect()
            })
            .collect()
    }

    pub fn component_count(&self) -> usize {
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count];
        let mut count = 0;
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Connected and non-empty.
    pub fn is_connected(&self) -> bool {
        self.vertex_count > 0 && self.component_count() == 1
    }

    fn require_connected(&self) -> Result<(), GraphError> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(GraphError::Disconnected)
        }
    }

    /// First Betti number `E - V + components`.
    pub fn cycle_rank(&self) -> usize {
        self.edges.len() + self.component_count() - self.vertex_count
    }

    /// Vertices whose degree is not 2, leaves and isolated vertices included.
    pub fn essential_vertices(&self) -> Vec<usize> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d != 2)
            .map(|(v, _)| v)
            .collect()
    }

    /// Decomposes the edge set into maximal chains whose interior vertices
    /// have degree 2.
    ///
    /// Chains are discovered from essential vertices in index order, walking
    /// incident edges in neighbor order; components without essential
    /// vertices (cycles) come last, starting at their smallest vertex.
    pub fn chains(&self) -> Vec<Chain> {
        let deg = self.degrees();
        let inc = self.incidence();
        let mut used = vec![false; self.edges.len()];
        let mut chains = Vec::new();

        let other = |e: usize, v: usize| {
            let (a, b) = self.edges[e];
            if a == v {
                b
            } else {
                a
            }
        };

        let walk = |start: usize, first: usize, used: &mut Vec<bool>| {
            let mut vertices = vec![start];
            let mut edges = vec![first];
            used[first] = true;
            let mut cur = other(first, start);
            loop {
                vertices.push(cur);
                if deg[cur] != 2 || cur == start {
                    break;
                }
                let next = inc[cur].iter().copied().find(|&e| !used[e]);
                match next {
                    Some(e) => {
                        used[e] = true;
                        edges.push(e);
                        cur = other(e, cur);
                    }
                    None => break,
                }
            }
            Chain { vertices, edges }
        };

        for v in 0..self.vertex_count {
            if deg[v] == 2 {
                continue;
            }
            for &e in &inc[v] {
                if !used[e] {
                    chains.push(walk(v, e, &mut used));
                }
            }
        }
        for (v, edges) in inc.iter().enumerate() {
            if let Some(&e) = edges.iter().find(|&&e| !used[e]) {
                chains.push(walk(v, e, &mut used));
            }
        }
        chains
    }

    /// Number of maximal degree-2 chains between essential vertices, i.e. the
    /// edge count of the smoothed graph. A bare cycle has none.
    pub fn count_distinct_paths(&self) -> Result<usize, GraphError> {
        self.require_connected()?;
        let deg = self.degrees();
        Ok(self.chains().iter().filter(|c| deg[c.vertices[0]] != 2).count())
    }

    /// Checks the two subdivision conditions for `strands` points: every chain
    /// between distinct essential vertices has length at least `strands - 1`
    /// and every cycle has length at least `strands + 1`.
    pub fn sufficiency_report(&self, strands: usize) -> Result<SufficiencyReport, GraphError> {
        self.require_connected()?;
        let deg = self.degrees();
        let mut violations = Vec::new();
        for chain in self.chains() {
            let (a, b) = (chain.vertices[0], *chain.vertices.last().unwrap());
            if a != b && deg[a] != 2 && chain.len() + 1 < strands {
                violations.push(Violation::ShortPath {
                    vertices: chain.vertices,
                    length: chain.edges.len(),
                    required: strands - 1,
                });
            }
        }
        // Shortest cycle through each edge; distinct short ones are reported.
        let adj = self.adjacency();
        let mut seen_cycles: Vec<Vec<usize>> = Vec::new();
        for &(u, v) in &self.edges {
            if let Some(path) = shortest_path_avoiding(&adj, u, v) {
                let length = path.len();
                if length < strands + 1 {
                    let mut key = path.clone();
                    key.sort_unstable();
                    if !seen_cycles.contains(&key) {
                        seen_cycles.push(key);
                        violations.push(Violation::ShortCycle {
                            vertices: path,
                            length,
                            required: strands + 1,
                        });
                    }
                }
            }
        }
        Ok(SufficiencyReport { strands, violations })
    }

    pub fn is_sufficiently_subdivided(&self, strands: usize) -> Result<bool, GraphError> {
        Ok(self.sufficiency_report(strands)?.is_sufficient())
    }

    /// Replaces every edge `i` by a path with `extra[i]` new interior vertices.
    /// Original vertices keep their indices; new ones are appended edge by edge.
    pub fn subdivide_edges(&self, extra: &[usize]) -> Graph {
        assert_eq!(extra.len(), self.edges.len());
        let mut next = self.vertex_count;
        let mut edges = Vec::with_capacity(self.edges.len() + extra.iter().sum::<usize>());
        for (&(u, v), &k) in self.edges.iter().zip(extra) {
            let mut prev = u;
            for _ in 0..k {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, v));
        }
        Graph::new(next, &edges).expect("subdivision of a simple graph is simple")
    }

    /// Smallest homeomorphic subdivision satisfying both sufficiency
    /// conditions for `strands` points.
    ///
    /// Each deficient chain receives exactly its deficit; additions are spread
    /// evenly over the chain's edges, remainders going to the lexicographically
    /// earliest edges.
    pub fn sufficiently_subdivide(&self, strands: usize) -> Result<Graph, GraphError> {
        self.require_connected()?;
        let deg = self.degrees();
        let mut extra = vec![0usize; self.edges.len()];
        for chain in self.chains() {
            let closed = chain.vertices[0] == *chain.vertices.last().unwrap();
            let open_between_essentials = !closed && deg[chain.vertices[0]] != 2;
            let required = if closed {
                strands + 1
            } else if open_between_essentials {
                strands.saturating_sub(1)
            } else {
                0
            };
            let deficit = required.saturating_sub(chain.len());
            if deficit == 0 {
                continue;
            }
            let mut edges = chain.edges.clone();
            edges.sort_unstable();
            let k = edges.len();
            for (pos, &e) in edges.iter().enumerate() {
                extra[e] += deficit / k + usize::from(pos < deficit % k);
            }
        }
        Ok(self.subdivide_edges(&extra))
    }

    pub fn homeomorphism_type(&self) -> Result<HomeoType, GraphError> {
        self.require_connected()?;
        let cycle_rank = self.cycle_rank();
        let deg = self.degrees();
        let branching: Vec<usize> = deg.iter().copied().filter(|&d| d >= 3).collect();
        let tag = if cycle_rank == 0 && branching.is_empty() {
            HomeoTag::Interval
        } else if cycle_rank == 1 && deg.iter().all(|&d| d == 2) {
            HomeoTag::Circle
        } else if cycle_rank == 0 && branching == [3] {
            HomeoTag::Star3
        } else if cycle_rank == 0 {
            HomeoTag::Tree
        } else if cycle_rank == 1 {
            HomeoTag::OneCycle
        } else {
            HomeoTag::Other
        };
        Ok(HomeoType { tag, cycle_rank })
    }

    /// One vertex per edge; two are adjacent when the edges share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for i in 0..self.edges.len() {
            let (a, b) = self.edges[i];
            for j in i + 1..self.edges.len() {
                let (c, d) = self.edges[j];
                if a == c || a == d || b == c || b == d {
                    edges.push((i, j));
                }
            }
        }
        Graph { vertex_count: self.edges.len(), edges }
    }

    /// The complement graph.
    pub fn opposite(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.vertex_count {
            for v in u + 1..self.vertex_count {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph { vertex_count: self.vertex_count, edges }
    }

    /// Subgraph induced on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(vertices.len(), &edges).expect("induced subgraph is simple")
    }
}

/// Shortest `u`–`v` path not using the edge `{u, v}`, as a vertex list.
fn shortest_path_avoiding(adj: &[Vec<usize>], u: usize, v: usize) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; adj.len()];
    parent[u] = u;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if (x == u && y == v) || parent[y] != usize::MAX {
                continue;
            }
            parent[y] = x;
            if y == v {
                let mut path = vec![v];
                let mut cur = v;
                while cur != u {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(y);
        }
    }
    None
}

/// A maximal walk through degree-2 vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    /// Visited vertices; first and last coincide for closed chains.
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Chain {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Chain between distinct essential vertices shorter than `strands - 1`.
    ShortPath { vertices: Vec<usize>, length: usize, required: usize },
    /// Cycle shorter than `strands + 1`.
    ShortCycle { vertices: Vec<usize>, length: usize, required: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SufficiencyReport {
    pub strands: usize,
    pub violations: Vec<Violation>,
}

impl SufficiencyReport {
    pub fn is_sufficient(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HomeoTag {
    Interval,
    Circle,
    Star3,
    Tree,
    OneCycle,
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HomeoType {
    pub tag: HomeoTag,
    pub cycle_rank: usize,
}
