//! Which graph braid groups `B_n(G)` are classical braid groups `B_{n'}`.
//!
//! `B_n(G) ≅ B_{n'}` exactly when one of these holds:
//!
//! 1. `n' = 1`, `n >= 1`, `G` homeomorphic to an interval;
//! 2. `n' = n = 1`, `G` a tree;
//! 3. `n' = 2`, `n = 1`, `G` with exactly one embedded cycle;
//! 4. `n' = n = 2`, `G` homeomorphic to `K_{3,1}`;
//! 5. `n' = 2`, `n >= 1`, `G` homeomorphic to a circle.
//!
//! When several clauses apply, the smallest case number is reported.

use alloc::format;
use alloc::string::String;

use crate::complex::CubicalComplex;
use crate::error::{ComplexError, GraphError, TopologyError};
use crate::graph::{Graph, HomeoTag};
use crate::homology::{homology, prepare, HomologySummary};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    IsBraidGroup { n_prime: usize, case: u8 },
    NotBraidGroup { reason: String },
}

impl Verdict {
    pub fn is_braid_group(&self) -> bool {
        matches!(self, Verdict::IsBraidGroup { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationResult {
    pub verdict: Verdict,
    /// `H_1(UD^n(G))` when a cross-check was run.
    pub evidence: Option<HomologySummary>,
}

/// Applicable case numbers, ascending.
pub fn applicable_cases(g: &Graph, strands: usize) -> Result<alloc::vec::Vec<u8>, TopologyError> {
    let ht = g.homeomorphism_type()?;
    let mut cases = alloc::vec::Vec::new();
    if ht.tag == HomeoTag::Interval {
        cases.push(1);
    }
    if strands == 1 && ht.cycle_rank == 0 {
        cases.push(2);
    }
    if strands == 1 && ht.cycle_rank == 1 {
        cases.push(3);
    }
    if strands == 2 && ht.tag == HomeoTag::Star3 {
        cases.push(4);
    }
    if ht.tag == HomeoTag::Circle {
        cases.push(5);
    }
    Ok(cases)
}

pub fn classify(g: &Graph, strands: usize) -> Result<ClassificationResult, TopologyError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    if strands == 0 {
        return Err(ComplexError::NoStrands.into());
    }
    if strands >= 2 && g.vertex_count() < strands {
        return Err(ComplexError::EmptyComplex { strands, vertices: g.vertex_count() }.into());
    }
    let cases = applicable_cases(g, strands)?;
    let verdict = match cases.first() {
        Some(&case) => Verdict::IsBraidGroup { n_prime: if case <= 2 { 1 } else { 2 }, case },
        None => Verdict::NotBraidGroup { reason: negative_reason(g, strands)? },
    };
    Ok(ClassificationResult { verdict, evidence: None })
}

fn negative_reason(g: &Graph, strands: usize) -> Result<String, TopologyError> {
    let ht = g.homeomorphism_type()?;
    Ok(if strands == 1 {
        format!("free of rank {} >= 2", ht.cycle_rank)
    } else if ht.cycle_rank == 0 {
        String::from("tree braid group with b_1 > 1")
    } else {
        String::from("b_1 > 1 or torsion in H_1")
    })
}

/// Classifies and compares with `H_1(UD^n(G))` on a sufficient subdivision:
/// `n' = 1` needs `H_1 = 0`, `n' = 2` needs `H_1 = Z`, and a negative
/// verdict needs `H_1` different from both.
pub fn betti_cross_check(g: &Graph, strands: usize) -> Result<ClassificationResult, TopologyError> {
    let mut result = classify(g, strands)?;
    let prepared = prepare(g, strands, true)?;
    let complex = CubicalComplex::build(&prepared, strands)?;
    let h1 = homology(&complex, 1);
    let consistent = match &result.verdict {
        Verdict::IsBraidGroup { n_prime: 1, .. } => h1.betti == 0 && h1.torsion.is_empty(),
        Verdict::IsBraidGroup { .. } => h1.betti == 1 && h1.torsion.is_empty(),
        Verdict::NotBraidGroup { .. } => h1.betti >= 2 || !h1.torsion.is_empty(),
    };
    if !consistent {
        return Err(TopologyError::CrossCheck(format!(
            "verdict {:?} but b_1 = {} with torsion {:?}",
            result.verdict, h1.betti, h1.torsion
        )));
    }
    result.evidence = Some(h1);
    Ok(result)
}
