#![allow(dead_code)]

use gbw_core::Graph;

pub fn h_tree() -> Graph {
    Graph::new(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap()
}

pub fn lollipop() -> Graph {
    Graph::new(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()
}

pub fn theta() -> Graph {
    Graph::new(5, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]).unwrap()
}

pub fn figure_eight() -> Graph {
    Graph::new(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap()
}

/// Named connected graphs used across the tests.
pub fn corpus() -> Vec<(&'static str, Graph)> {
    vec![
        ("P4", Graph::path(4)),
        ("star3", Graph::star(3)),
        ("star4", Graph::star(4)),
        ("H", h_tree()),
        ("C4", Graph::cycle(4)),
        ("C5", Graph::cycle(5)),
        ("lollipop", lollipop()),
        ("theta", theta()),
        ("fig8", figure_eight()),
        ("K4", Graph::complete(4)),
        ("K5", Graph::complete(5)),
        ("K33", Graph::complete_bipartite(3, 3)),
    ]
}

/// Tree from a Prüfer sequence over `seq.len() + 2` vertices.
pub fn prufer_tree(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::new();
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges).unwrap()
}

/// All simple graphs on `v` vertices, indexed by edge bitmask.
pub fn all_graphs(v: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
    (0..1u32 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            Graph::new(v, &edges).unwrap()
        })
        .collect()
}

/// One representative per isomorphism class: the graph whose edge list is
/// lexicographically least over all relabelings.
pub fn isomorphism_classes(v: usize) -> Vec<Graph> {
    let perms = permutations(v);
    let mut reps: Vec<Graph> = Vec::new();
    for g in all_graphs(v) {
        let canon = perms
            .iter()
            .map(|p| {
                let edges: Vec<_> = g.edges().iter().map(|&(a, b)| (p[a], p[b])).collect();
                Graph::new(v, &edges).unwrap()
            })
            .min_by(|a, b| a.edges().cmp(b.edges()))
            .unwrap();
        if !reps.contains(&canon) {
            reps.push(canon);
        }
    }
    reps
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}
