//! Embedding a right-angled Artin group `A(Γ)` into the subgroup of a pure
//! braid group generated by the squares `ψ_j = σ_j^2`.
//!
//! Generator `g_i` (0-based) starts as `ψ_{2i+1}`. Every pair of generators
//! that must not commute is then coupled with a fresh free pair
//! `ψ_{k+2}, ψ_{k+3}` far to the right of everything used so far.

use alloc::vec;
use alloc::vec::Vec;

use crate::braid::BraidWord;
use crate::error::EmbedError;
use crate::graph::Graph;

/// `2V + 3 (C(V, 2) - E)`.
pub fn strand_bound(gamma: &Graph) -> usize {
    let v = gamma.vertex_count();
    let opposite_edges = v * v.saturating_sub(1) / 2 - gamma.edge_count();
    2 * v + 3 * opposite_edges
}

/// Which braids play the role of `ψ_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PsiKind {
    /// `ψ_j = σ_j^2`.
    #[default]
    Square,
    /// `ψ_j = σ_j σ_{j+1}`, outside the pure braid group. Needs one more
    /// index of separation per block.
    Shifted,
}

impl PsiKind {
    fn letters(self, j: usize) -> [i32; 2] {
        match self {
            PsiKind::Square => [j as i32, j as i32],
            PsiKind::Shifted => [j as i32, j as i32 + 1],
        }
    }

    /// Largest `σ` index touched by `ψ_j`.
    fn reach(self, j: usize) -> usize {
        match self {
            PsiKind::Square => j,
            PsiKind::Shifted => j + 1,
        }
    }
}

/// One coupling step: generators `u`, `v` received `ψ_{u_index}`, `ψ_{v_index}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Allocation {
    pub u: usize,
    pub v: usize,
    pub u_index: usize,
    pub v_index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingMap {
    gamma: Graph,
    strands: usize,
    kind: PsiKind,
    /// `ψ` indices making up each image, left to right.
    psi_indices: Vec<Vec<usize>>,
    allocation: Vec<Allocation>,
    images: Vec<BraidWord>,
}

impl EmbeddingMap {
    pub fn gamma(&self) -> &Graph {
        &self.gamma
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn kind(&self) -> PsiKind {
        self.kind
    }

    pub fn images(&self) -> &[BraidWord] {
        &self.images
    }

    /// `ψ` indices of each image; empty for user-supplied maps.
    pub fn psi_indices(&self) -> &[Vec<usize>] {
        &self.psi_indices
    }

    pub fn allocation(&self) -> &[Allocation] {
        &self.allocation
    }

    /// A map given directly by braid words, one per vertex of `gamma`.
    pub fn from_images(gamma: Graph, images: Vec<BraidWord>) -> Result<Self, EmbedError> {
        if images.len() != gamma.vertex_count() {
            return Err(EmbedError::ImageCount { expected: gamma.vertex_count(), found: images.len() });
        }
        let strands = images.first().map_or(1, BraidWord::strands);
        if images.iter().any(|w| w.strands() != strands) {
            return Err(EmbedError::StrandMismatch);
        }
        Ok(Self { gamma, strands, kind: PsiKind::Square, psi_indices: Vec::new(), allocation: Vec::new(), images })
    }
}

pub fn build_embedding(gamma: &Graph) -> EmbeddingMap {
    build_embedding_with(gamma, PsiKind::Square)
}

pub fn build_embedding_with(gamma: &Graph, kind: PsiKind) -> EmbeddingMap {
    let v = gamma.vertex_count();
    let (stride, gap) = match kind {
        PsiKind::Square => (2, 2),
        PsiKind::Shifted => (3, 3),
    };
    let mut psi_indices: Vec<Vec<usize>> = (0..v).map(|i| vec![stride * i + 1]).collect();
    let mut k = if v == 0 { 0 } else { stride * (v - 1) + 1 };
    let mut allocation = Vec::new();
    for &(a, b) in gamma.opposite().edges() {
        let (ia, ib) = (k + gap, k + gap + 1);
        psi_indices[a].push(ia);
        psi_indices[b].push(ib);
        allocation.push(Allocation { u: a, v: b, u_index: ia, v_index: ib });
        k = ib;
    }
    let strands = if v == 0 { 1 } else { kind.reach(k) + 1 };
    let images = psi_indices
        .iter()
        .map(|idx| {
            let letters = idx.iter().flat_map(|&j| kind.letters(j)).collect();
            BraidWord::new(strands, letters).expect("indices below the strand count")
        })
        .collect();
    EmbeddingMap { gamma: gamma.clone(), strands, kind, psi_indices, allocation, images }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCheck {
    pub i: usize,
    pub j: usize,
    pub should_commute: bool,
    /// Whether the commutator of the images is the identity braid.
    pub commutes: bool,
}

impl PairCheck {
    pub fn passed(&self) -> bool {
        self.should_commute == self.commutes
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub strands: usize,
    pub bound: usize,
    pub pure: Vec<bool>,
    pub pairs: Vec<PairCheck>,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.strands <= self.bound.max(1) && self.pure.iter().all(|&p| p) && self.pairs.iter().all(PairCheck::passed)
    }
}

/// The pair `(i, j)` with `i < j`, compared against `Γ`.
pub fn check_pair(m: &EmbeddingMap, i: usize, j: usize) -> PairCheck {
    let c = m.images[i].commutator(&m.images[j]).expect("same strand count");
    PairCheck { i, j, should_commute: m.gamma.has_edge(i, j), commutes: c.is_identity() }
}

/// Evaluates every check without failing.
pub fn check_embedding(m: &EmbeddingMap) -> EmbeddingReport {
    let v = m.gamma.vertex_count();
    let pairs = (0..v).flat_map(|i| (i + 1..v).map(move |j| (i, j))).map(|(i, j)| check_pair(m, i, j)).collect();
    EmbeddingReport {
        strands: m.strands,
        bound: strand_bound(&m.gamma),
        pure: m.images.iter().map(BraidWord::is_pure).collect(),
        pairs,
    }
}

/// Images of adjacent generators commute, images of non-adjacent ones do
/// not, every image is pure and the strand count is within the bound.
pub fn verify_embedding(m: &EmbeddingMap) -> Result<EmbeddingReport, EmbedError> {
    let report = check_embedding(m);
    if report.strands > report.bound.max(1) {
        return Err(EmbedError::BoundExceeded { strands: report.strands, bound: report.bound });
    }
    if let Some(i) = report.pure.iter().position(|&p| !p) {
        return Err(EmbedError::NotPure(i));
    }
    if let Some(p) = report.pairs.iter().find(|p| !p.passed()) {
        return Err(EmbedError::PairFailed { i: p.i, j: p.j, should_commute: p.should_commute });
    }
    Ok(report)
}

/// Target of the chain `B_n(G) -> A(Γ) -> P_l` with `Γ = op(L(G))`; the
/// target does not depend on `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainTarget {
    pub strands: usize,
    pub gamma: Graph,
    pub braid_strands: usize,
}

pub fn gbg_chain_target(g: &Graph, strands: usize) -> ChainTarget {
    let gamma = g.line_graph().opposite();
    let braid_strands = strand_bound(&gamma);
    ChainTarget { strands, gamma, braid_strands }
}
