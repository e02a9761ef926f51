//! Integer homology through Smith normal form.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::complex::CubicalComplex;
use crate::error::TopologyError;
use crate::graph::Graph;
use crate::matrix::IntegerMatrix;

/// Above this fill ratio elimination runs on a dense copy.
pub const DENSE_FILL_THRESHOLD: f64 = 0.25;

/// Diagonal of the Smith normal form: `d_1 | d_2 | ... | d_rank`, all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub invariant_factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    if m.fill() > DENSE_FILL_THRESHOLD {
        smith_normal_form_dense(m)
    } else {
        smith_normal_form_sparse(m)
    }
}

pub fn smith_normal_form_sparse(m: &IntegerMatrix) -> SmithForm {
    diagonalize(SparseWork::new(m))
}

pub fn smith_normal_form_dense(m: &IntegerMatrix) -> SmithForm {
    diagonalize(DenseWork::new(m))
}

/// Elimination storage. Column operations are only ever applied while the
/// pivot column is otherwise empty, so they reduce to edits of the pivot row.
trait Workspace {
    /// Nonzero entry of least absolute value; ties by row, then column.
    fn pivot(&self) -> Option<(usize, usize)>;
    fn get(&self, r: usize, c: usize) -> BigInt;
    fn set(&mut self, r: usize, c: usize, value: BigInt);
    fn col_support(&self, c: usize) -> Vec<usize>;
    fn row_support(&self, r: usize) -> Vec<usize>;
    /// `row[target] -= q * row[source]`.
    fn row_sub(&mut self, target: usize, source: usize, q: &BigInt);
}

fn diagonalize<W: Workspace>(mut work: W) -> SmithForm {
    let mut diagonal = Vec::new();
    'outer: while let Some((r, c)) = work.pivot() {
        let p = work.get(r, c);
        let mut residue = false;
        for i in work.col_support(c) {
            if i == r {
                continue;
            }
            let q = work.get(i, c) / &p;
            if !q.is_zero() {
                work.row_sub(i, r, &q);
            }
            residue |= !work.get(i, c).is_zero();
        }
        if residue {
            continue 'outer;
        }
        for j in work.row_support(r) {
            if j == c {
                continue;
            }
            let rem = work.get(r, j) % &p;
            residue |= !rem.is_zero();
            work.set(r, j, rem);
        }
        if residue {
            continue 'outer;
        }
        work.set(r, c, BigInt::zero());
        diagonal.push(p.abs());
    }
    SmithForm { invariant_factors: divisibility_chain(diagonal) }
}

/// Rewrites a diagonal into an equivalent one whose entries divide each other.
fn divisibility_chain(mut d: Vec<BigInt>) -> Vec<BigInt> {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            if g != d[i] {
                let l = &d[i] / &g * &d[j];
                d[i] = g;
                d[j] = l;
            }
        }
    }
    d
}

struct SparseWork {
    rows: Vec<BTreeMap<usize, BigInt>>,
    cols: Vec<BTreeSet<usize>>,
}

impl SparseWork {
    fn new(m: &IntegerMatrix) -> Self {
        let mut rows = alloc::vec![BTreeMap::new(); m.rows()];
        let mut cols = alloc::vec![BTreeSet::new(); m.cols()];
        for (r, c, v) in m.iter() {
            rows[r].insert(c, v.clone());
            cols[c].insert(r);
        }
        Self { rows, cols }
    }
}

impl Workspace for SparseWork {
    fn pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(BigInt, usize, usize)> = None;
        for (r, row) in self.rows.iter().enumerate() {
            for (&c, v) in row {
                let a = v.abs();
                if best.as_ref().is_none_or(|(b, _, _)| a < *b) {
                    best = Some((a, r, c));
                }
            }
        }
        best.map(|(_, r, c)| (r, c))
    }

    fn get(&self, r: usize, c: usize) -> BigInt {
        self.rows[r].get(&c).cloned().unwrap_or_default()
    }

    fn set(&mut self, r: usize, c: usize, value: BigInt) {
        if value.is_zero() {
            self.rows[r].remove(&c);
            self.cols[c].remove(&r);
        } else {
            self.rows[r].insert(c, value);
            self.cols[c].insert(r);
        }
    }

    fn col_support(&self, c: usize) -> Vec<usize> {
        self.cols[c].iter().copied().collect()
    }

    fn row_support(&self, r: usize) -> Vec<usize> {
        self.rows[r].keys().copied().collect()
    }

    fn row_sub(&mut self, target: usize, source: usize, q: &BigInt) {
        let source_row: Vec<(usize, BigInt)> = self.rows[source].iter().map(|(&c, v)| (c, v.clone())).collect();
        for (c, v) in source_row {
            let value = self.get(target, c) - q * v;
            self.set(target, c, value);
        }
    }
}

struct DenseWork {
    a: Vec<Vec<BigInt>>,
}

impl DenseWork {
    fn new(m: &IntegerMatrix) -> Self {
        Self { a: m.to_dense() }
    }
}

impl Workspace for DenseWork {
    fn pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(BigInt, usize, usize)> = None;
        for (r, row) in self.a.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let a = v.abs();
                if best.as_ref().is_none_or(|(b, _, _)| a < *b) {
                    best = Some((a, r, c));
                }
            }
        }
        best.map(|(_, r, c)| (r, c))
    }

    fn get(&self, r: usize, c: usize) -> BigInt {
        self.a[r][c].clone()
    }

    fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.a[r][c] = value;
    }

    fn col_support(&self, c: usize) -> Vec<usize> {
        (0..self.a.len()).filter(|&r| !self.a[r][c].is_zero()).collect()
    }

    fn row_support(&self, r: usize) -> Vec<usize> {
        (0..self.a[r].len()).filter(|&c| !self.a[r][c].is_zero()).collect()
    }

    fn row_sub(&mut self, target: usize, source: usize, q: &BigInt) {
        for c in 0..self.a[source].len() {
            if !self.a[source][c].is_zero() {
                let delta = q * &self.a[source][c];
                self.a[target][c] -= delta;
            }
        }
    }
}

/// `H_d` of a chain complex as free rank plus torsion coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologySummary {
    pub dimension: usize,
    pub betti: usize,
    /// Invariant factors greater than one, each dividing the next.
    pub torsion: Vec<BigInt>,
}

/// `H_d(c; Z)` from the ranks of `d_d` and the Smith form of `d_(d+1)`.
pub fn homology(c: &CubicalComplex, d: usize) -> HomologySummary {
    let incoming = c.boundary_ref(d).map_or(0, |b| smith_normal_form(b).rank());
    let outgoing = c.boundary_ref(d + 1).map(smith_normal_form);
    summarize(c, d, incoming, outgoing.as_ref())
}

/// Homology in every dimension `0..=c.dimension()`.
pub fn homology_all(c: &CubicalComplex) -> Vec<HomologySummary> {
    let forms: Vec<Option<SmithForm>> =
        (0..=c.dimension() + 1).map(|d| c.boundary_ref(d).map(smith_normal_form)).collect();
    homology_from_forms(c, &forms)
}

/// Homology from precomputed Smith forms, `forms[d]` being that of the
/// boundary map out of dimension `d` (absent when the map is empty), for
/// `d` in `0..=c.dimension() + 1`.
pub fn homology_from_forms(c: &CubicalComplex, forms: &[Option<SmithForm>]) -> Vec<HomologySummary> {
    assert_eq!(forms.len(), c.dimension() + 2, "one form per boundary map");
    (0..=c.dimension())
        .map(|d| {
            let incoming = forms[d].as_ref().map_or(0, SmithForm::rank);
            summarize(c, d, incoming, forms[d + 1].as_ref())
        })
        .collect()
}

fn summarize(c: &CubicalComplex, d: usize, incoming_rank: usize, outgoing: Option<&SmithForm>) -> HomologySummary {
    let cycles = c.cells(d).len() - incoming_rank;
    let boundaries = outgoing.map_or(0, SmithForm::rank);
    HomologySummary {
        dimension: d,
        betti: cycles - boundaries,
        torsion: outgoing.map(SmithForm::torsion).unwrap_or_default(),
    }
}

/// `b_1(UD^n(g))`. Unless `auto_subdivide` is set, `g` must already be
/// sufficiently subdivided for `strands >= 2`.
pub fn first_betti(g: &Graph, strands: usize, auto_subdivide: bool) -> Result<usize, TopologyError> {
    let prepared = prepare(g, strands, auto_subdivide)?;
    let complex = CubicalComplex::build(&prepared, strands)?;
    Ok(homology(&complex, 1).betti)
}

/// Checks (or enforces, when `auto_subdivide`) sufficient subdivision.
pub fn prepare(g: &Graph, strands: usize, auto_subdivide: bool) -> Result<Graph, TopologyError> {
    if strands < 2 {
        if !g.is_connected() {
            return Err(crate::error::GraphError::Disconnected.into());
        }
        return Ok(g.clone());
    }
    if auto_subdivide {
        return Ok(g.sufficiently_subdivide(strands)?);
    }
    let report = g.sufficiency_report(strands)?;
    if report.is_sufficient() {
        Ok(g.clone())
    } else {
        Err(TopologyError::Insufficient { strands, violations: report.violations.len() })
    }
}
