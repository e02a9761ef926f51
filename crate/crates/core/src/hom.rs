//! Checks on candidate homomorphisms `B_n -> A(Γ)` given by the images
//! `λ_i` of the standard generators `σ_i`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::HomError;
use crate::graph::Graph;
use crate::raag::{Commutation, Letter, RaagWord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCandidate {
    strands: usize,
    gamma: Graph,
    images: Vec<RaagWord>,
}

/// A defining relation of `B_n`, with 1-based generator indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1}`
    Braid { i: usize },
    /// `σ_i σ_j = σ_j σ_i` with `j - i >= 2`
    Commute { i: usize, j: usize },
}

impl HomCandidate {
    /// `images[i]` is the image of `σ_{i+1}`.
    pub fn new(strands: usize, gamma: Graph, images: Vec<RaagWord>) -> Result<Self, HomError> {
        if strands < 2 {
            return Err(HomError::TooFewStrands(strands));
        }
        if images.len() != strands - 1 {
            return Err(HomError::ImageCount { strands, expected: strands - 1, found: images.len() });
        }
        if let Some(i) = images.iter().position(|w| *w.graph() != gamma) {
            return Err(HomError::GraphMismatch(i));
        }
        Ok(Self { strands, gamma, images })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn gamma(&self) -> &Graph {
        &self.gamma
    }

    pub fn images(&self) -> &[RaagWord] {
        &self.images
    }

    /// Every image conjugated by `p`.
    pub fn conjugate(&self, p: &RaagWord) -> Result<Self, crate::error::WordError> {
        let images = self
            .images
            .iter()
            .map(|w| p.concat(w)?.concat(&p.inverse()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { strands: self.strands, gamma: self.gamma.clone(), images })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub holds: bool,
    pub first_failure: Option<Relation>,
}

/// Whether the images satisfy every braid relation in `A(Γ)`.
pub fn check_relations(h: &HomCandidate) -> RelationCheck {
    let comm = Commutation::new(&h.gamma);
    let words: Vec<&[Letter]> = h.images.iter().map(|w| w.letters()).collect();
    let failure = relations(words.len()).find(|r| !relation_holds(&comm, &words, *r));
    RelationCheck { holds: failure.is_none(), first_failure: failure }
}

fn relations(generators: usize) -> impl Iterator<Item = Relation> {
    let braid = (1..generators).map(|i| Relation::Braid { i });
    let commute = (1..=generators).flat_map(move |i| (i + 2..=generators).map(move |j| Relation::Commute { i, j }));
    braid.chain(commute)
}

fn relation_holds(comm: &Commutation, words: &[&[Letter]], r: Relation) -> bool {
    match r {
        Relation::Braid { i } => braid_holds(comm, words[i - 1], words[i]),
        Relation::Commute { i, j } => commute_holds(comm, words[i - 1], words[j - 1]),
    }
}

fn product(parts: &[&[Letter]]) -> Vec<Letter> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

fn braid_holds(comm: &Commutation, a: &[Letter], b: &[Letter]) -> bool {
    comm.normal_form(&product(&[a, b, a])) == comm.normal_form(&product(&[b, a, b]))
}

fn commute_holds(comm: &Commutation, a: &[Letter], b: &[Letter]) -> bool {
    comm.normal_form(&product(&[a, b])) == comm.normal_form(&product(&[b, a]))
}

/// The matrix `ε_k(λ_i)`: one row per generator `k` of `A(Γ)`, one column per
/// image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentProfile {
    pub rows: Vec<Vec<i64>>,
    pub columns_equal: bool,
}

pub fn exponent_profile(h: &HomCandidate) -> ExponentProfile {
    let rows: Vec<Vec<i64>> = (0..h.gamma.vertex_count())
        .map(|k| h.images.iter().map(|w| w.exponent_sum(k)).collect())
        .collect();
    let columns_equal = rows.iter().all(|row| row.windows(2).all(|p| p[0] == p[1]));
    ExponentProfile { rows, columns_equal }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConclusionReport {
    pub relations: RelationCheck,
    /// All images have the same normal form; vacuous when relations fail.
    pub images_equal: bool,
    pub columns_equal: bool,
    /// Supports of the cyclically reduced images agree.
    pub supports_equal: bool,
    /// The `h` parts of the cyclically reduced images agree.
    pub h_parts_equal: bool,
    /// Supports of the `ĥ` parts agree.
    pub h_hat_supports_equal: bool,
}

impl ConclusionReport {
    /// A relation-passing candidate whose images differ.
    pub fn is_counterexample(&self) -> bool {
        self.relations.holds && !(self.images_equal && self.columns_equal)
    }
}

/// For `n > 4`, a homomorphism `B_n -> A(Γ)` sends all `σ_i` to one element;
/// this evaluates that conclusion on `h`.
pub fn conclusion_check(h: &HomCandidate) -> Result<ConclusionReport, HomError> {
    if h.strands <= 4 {
        return Err(HomError::HypothesisUnmet(h.strands));
    }
    let relations = check_relations(h);
    let profile = exponent_profile(h);
    if !relations.holds {
        return Ok(ConclusionReport {
            relations,
            images_equal: true,
            columns_equal: profile.columns_equal,
            supports_equal: true,
            h_parts_equal: true,
            h_hat_supports_equal: true,
        });
    }
    let forms: Vec<RaagWord> = h.images.iter().map(RaagWord::normal_form).collect();
    let cores: Vec<RaagWord> = h.images.iter().map(|w| w.cyclic_reduce().1).collect();
    let splits: Vec<(RaagWord, RaagWord)> =
        cores.iter().map(|c| c.split_h_hat().expect("cyclically reduced")).collect();
    let all_same = |v: &[Vec<Letter>]| v.windows(2).all(|p| p[0] == p[1]);
    let supports: Vec<Vec<Letter>> = cores.iter().map(|c| support_key(&c.support())).collect();
    let h_parts: Vec<Vec<Letter>> = splits.iter().map(|(h, _)| h.normal_form().letters().to_vec()).collect();
    let h_hat_supports: Vec<Vec<Letter>> = splits.iter().map(|(_, hh)| support_key(&hh.support())).collect();
    Ok(ConclusionReport {
        relations,
        images_equal: forms.windows(2).all(|p| p[0].letters() == p[1].letters()),
        columns_equal: profile.columns_equal,
        supports_equal: all_same(&supports),
        h_parts_equal: all_same(&h_parts),
        h_hat_supports_equal: all_same(&h_hat_supports),
    })
}

fn support_key(s: &[usize]) -> Vec<Letter> {
    s.iter().map(|&g| Letter::new(g, 1)).collect()
}

/// Distinct elements of `A(Γ)` with a representative of length at most
/// `max_len`, as normal forms, shortest first.
pub fn elements_up_to(gamma: &Graph, max_len: usize) -> Vec<RaagWord> {
    let comm = Commutation::new(gamma);
    let letters: Vec<Letter> = (0..gamma.vertex_count())
        .flat_map(|g| [Letter::new(g, 1), Letter::new(g, -1)])
        .collect();
    let mut seen: BTreeSet<Vec<Letter>> = BTreeSet::new();
    let mut frontier: Vec<Vec<Letter>> = vec![Vec::new()];
    seen.insert(Vec::new());
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &letters {
                let mut x = w.clone();
                x.push(l);
                let nf = comm.normal_form(&x);
                if seen.insert(nf.clone()) {
                    next.push(nf);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Vec<Letter>> = seen.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out.into_iter()
        .map(|l| RaagWord::new(gamma.clone(), l).expect("generators in range"))
        .collect()
}

/// Pairwise relation tables over a fixed element list, for exhaustive
/// searches over image tuples.
#[derive(Clone, Debug)]
pub struct SweepTables {
    gamma: Graph,
    elements: Vec<RaagWord>,
    braid: Vec<bool>,
    commute: Vec<bool>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    /// Image tuples whose relations were evaluated.
    pub candidates: u64,
    pub relation_passing: u64,
    pub counterexamples: Vec<HomCandidate>,
}

impl SweepReport {
    pub fn merge(&mut self, other: SweepReport) {
        self.candidates += other.candidates;
        self.relation_passing += other.relation_passing;
        self.counterexamples.extend(other.counterexamples);
    }
}

impl SweepTables {
    pub fn new(gamma: &Graph, max_len: usize) -> Self {
        let elements = elements_up_to(gamma, max_len);
        let comm = Commutation::new(gamma);
        let m = elements.len();
        let mut braid = vec![false; m * m];
        let mut commute = vec![false; m * m];
        for a in 0..m {
            for b in 0..m {
                let (x, y) = (elements[a].letters(), elements[b].letters());
                braid[a * m + b] = braid_holds(&comm, x, y);
                commute[a * m + b] = commute_holds(&comm, x, y);
            }
        }
        Self { gamma: gamma.clone(), elements, braid, commute }
    }

    pub fn elements(&self) -> &[RaagWord] {
        &self.elements
    }

    /// All tuples with `λ_1 = elements[first]`. Candidates are counted as
    /// the full number of tuples; pruning on the pair tables is exact.
    pub fn run_from(&self, first: usize, strands: usize) -> SweepReport {
        let m = self.elements.len();
        let k = strands - 1;
        let mut report = SweepReport { candidates: (m as u64).pow(k.saturating_sub(1) as u32), ..Default::default() };
        let mut chosen = vec![first];
        self.extend(&mut chosen, k, strands, &mut report);
        report
    }

    pub fn run(&self, strands: usize) -> SweepReport {
        let mut report = SweepReport::default();
        for first in 0..self.elements.len() {
            report.merge(self.run_from(first, strands));
        }
        report
    }

    fn extend(&self, chosen: &mut Vec<usize>, k: usize, strands: usize, report: &mut SweepReport) {
        let m = self.elements.len();
        if chosen.len() == k {
            report.relation_passing += 1;
            let images = chosen.iter().map(|&i| self.elements[i].clone()).collect();
            let h = HomCandidate::new(strands, self.gamma.clone(), images).expect("well-formed");
            // Recheck from scratch rather than trusting the tables.
            let confirmed = check_relations(&h).holds;
            let equal = chosen.iter().all(|&i| i == chosen[0]);
            let columns = exponent_profile(&h).columns_equal;
            if !confirmed || !equal || !columns {
                report.counterexamples.push(h);
            }
            return;
        }
        let last = *chosen.last().expect("nonempty");
        for next in 0..m {
            if !self.braid[last * m + next] {
                continue;
            }
            let far = chosen.len().saturating_sub(1);
            if chosen[..far].iter().all(|&c| self.commute[c * m + next]) {
                chosen.push(next);
                self.extend(chosen, k, strands, report);
                chosen.pop();
            }
        }
    }
}

/// Every tuple of images of length at most `max_len` over `gamma`.
pub fn sweep(gamma: &Graph, strands: usize, max_len: usize) -> Result<SweepReport, HomError> {
    if strands < 2 {
        return Err(HomError::TooFewStrands(strands));
    }
    Ok(SweepTables::new(gamma, max_len).run(strands))
}
