//! Braid words and the left-greedy (Garside) normal form.
//!
//! Simple elements are positive permutation braids, stored as the
//! permutation sending the starting position of each strand to its final
//! position. Products are read left to right: in `A B` the braid `A` acts
//! first.

use alloc::vec::Vec;
use core::fmt;

use crate::error::WordError;
use crate::raag::{parse_token, write_runs, MAX_TOKEN_EXPONENT};

/// A permutation of `{0, .., n-1}` with `self[p]` the image of `p`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// Panics unless `images` is a permutation.
    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = alloc::vec![false; images.len()];
        for &p in &images {
            assert!(p < images.len() && !seen[p], "not a permutation");
            seen[p] = true;
        }
        Self(images)
    }

    /// The transposition of `i` and `i + 1` (0-based).
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(i, i + 1);
        p
    }

    /// `p -> n - 1 - p`, the permutation of the half twist.
    pub fn reversal(n: usize) -> Self {
        Self((0..n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&p| other.0[p]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p] = i;
        }
        Permutation(inv)
    }

    /// Conjugation by the half twist.
    fn flip(&self) -> Permutation {
        let n = self.0.len();
        Permutation((0..n).map(|p| n - 1 - self.0[n - 1 - p]).collect())
    }

    /// Starting set: `i` with `σ_i` a left divisor of the permutation braid.
    fn starts_with(&self, i: usize) -> bool {
        self.0[i] > self.0[i + 1]
    }

    /// Finishing set membership, given the inverse permutation.
    fn ends_with(inverse: &[usize], i: usize) -> bool {
        inverse[i] > inverse[i + 1]
    }

    /// A positive word (0-based generator indices) for the permutation braid.
    fn positive_word(&self) -> Vec<usize> {
        let mut p = self.0.clone();
        let mut out = Vec::new();
        while let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) {
            out.push(i);
            p.swap(i, i + 1);
        }
        out
    }
}

/// One-line notation, 1-based: `[2 1 3]`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", p + 1)?;
        }
        f.write_str("]")
    }
}

/// A word in the braid group `B_n`; letters are signed 1-based generator
/// indices, `+i` for `σ_i` and `-i` for `σ_i^-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, WordError> {
        if strands == 0 {
            return Err(WordError::OutOfRange { index: 0, min: 1, max: i64::MAX });
        }
        for &l in &letters {
            check_index(l.unsigned_abs() as i64, strands)?;
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        Self { strands: strands.max(1), letters: Vec::new() }
    }

    /// Parses tokens `s<i>`, `s<i>^-1` or `s<i>^<e>` with `1 <= i < n`; a lone
    /// `1` is the identity.
    pub fn parse(text: &str, strands: usize) -> Result<Self, WordError> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" {
                continue;
            }
            let (i, e) = parse_token(token, 's')?;
            check_index(i, strands)?;
            let sign = if e < 0 { -1 } else { 1 };
            letters.extend(core::iter::repeat_n(sign * i as i32, e.unsigned_abs() as usize));
        }
        Self::new(strands, letters)
    }

    /// `σ_i^e`
    pub fn sigma_power(i: usize, e: i64, strands: usize) -> Result<Self, WordError> {
        check_index(i as i64, strands)?;
        if e.abs() > MAX_TOKEN_EXPONENT {
            return Err(WordError::ExponentTooLarge(e));
        }
        let sign = if e < 0 { -1 } else { 1 };
        Ok(Self { strands, letters: core::iter::repeat_n(sign * i as i32, e.unsigned_abs() as usize).collect() })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, WordError> {
        if self.strands != other.strands {
            return Err(WordError::GroupMismatch);
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> BraidWord {
        Self { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// `self * other * self^-1 * other^-1`
    pub fn commutator(&self, other: &BraidWord) -> Result<BraidWord, WordError> {
        self.concat(other)?.concat(&self.inverse())?.concat(&other.inverse())
    }

    /// Image in the symmetric group under `σ_i -> (i i+1)`.
    pub fn permutation_image(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        // Position -> strand; track where each strand goes.
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            for x in p.0.iter_mut() {
                if *x == i {
                    *x = i + 1;
                } else if *x == i + 1 {
                    *x = i;
                }
            }
        }
        p
    }

    pub fn normal_form(&self) -> GarsideNormalForm {
        GarsideNormalForm::of(self)
    }

    pub fn is_identity(&self) -> bool {
        self.normal_form().is_identity()
    }

    pub fn is_pure(&self) -> bool {
        self.permutation_image().is_identity()
    }

    /// Equality in `B_n`.
    pub fn equals(&self, other: &BraidWord) -> bool {
        self.strands == other.strands && self.normal_form() == other.normal_form()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut runs: Vec<(usize, i64)> = Vec::new();
        for &l in &self.letters {
            let g = l.unsigned_abs() as usize;
            let s = l.signum() as i64;
            match runs.last_mut() {
                Some((h, e)) if *h == g && e.signum() == s => *e += s,
                _ => runs.push((g, s)),
            }
        }
        write_runs(f, 's', 0, &runs)
    }
}

/// `ψ_i = σ_i^2` in `B_n`.
pub fn psi(i: usize, strands: usize) -> Result<BraidWord, WordError> {
    BraidWord::sigma_power(i, 2, strands)
}

fn check_index(i: i64, strands: usize) -> Result<(), WordError> {
    if i < 1 || i >= strands as i64 {
        return Err(WordError::OutOfRange { index: i, min: 1, max: strands as i64 - 1 });
    }
    Ok(())
}

/// `Δ^k A_1 ... A_r` with `k` maximal, every `A_j` a proper nontrivial
/// permutation braid, and every pair `(A_j, A_{j+1})` left-weighted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GarsideNormalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<Permutation>,
}

impl GarsideNormalForm {
    pub fn of(word: &BraidWord) -> Self {
        let n = word.strands;
        let delta = Permutation::reversal(n);
        // Each Δ^-1 is pushed to the far left, conjugating everything it
        // passes; a factor is flipped once per later negative letter.
        let mut raw: Vec<(Permutation, usize)> = Vec::with_capacity(word.letters.len());
        let mut negatives = 0usize;
        for &l in &word.letters {
            let i = l.unsigned_abs() as usize - 1;
            if l > 0 {
                raw.push((Permutation::transposition(n, i), negatives));
            } else {
                negatives += 1;
                // Δ σ_i^-1: Δ with its last crossing at (i, i+1) removed.
                raw.push((delta.then(&Permutation::transposition(n, i)), negatives));
            }
        }
        let mut factors: Vec<Permutation> = raw
            .into_iter()
            .map(|(p, seen)| if (negatives - seen) % 2 == 1 { p.flip() } else { p })
            .collect();

        left_weight(&mut factors);

        let mut delta_power = -(negatives as i64);
        let leading = factors.iter().take_while(|f| **f == delta).count();
        delta_power += leading as i64;
        factors.drain(..leading);
        while factors.last().is_some_and(|f| f.is_identity()) {
            factors.pop();
        }
        Self { strands: n, delta_power, factors }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Number of factors after the `Δ` power.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// A braid word spelling out this normal form.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta: Vec<i32> = Permutation::reversal(n).positive_word().iter().map(|&i| i as i32 + 1).collect();
        let mut letters = Vec::new();
        for _ in 0..self.delta_power.unsigned_abs() {
            if self.delta_power > 0 {
                letters.extend_from_slice(&delta);
            } else {
                letters.extend(delta.iter().rev().map(|l| -l));
            }
        }
        for f in &self.factors {
            letters.extend(f.positive_word().iter().map(|&i| i as i32 + 1));
        }
        BraidWord { strands: n, letters }
    }

    /// Whether the form satisfies its structural invariants.
    pub fn is_well_formed(&self) -> bool {
        let delta = Permutation::reversal(self.strands);
        let proper = self.factors.iter().all(|f| !f.is_identity() && *f != delta);
        proper && self.factors.windows(2).all(|w| is_left_weighted(&w[0], &w[1]))
    }
}

/// `D^k | p_1 | p_2 | ...`
impl fmt::Display for GarsideNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.delta_power)?;
        for p in &self.factors {
            write!(f, " | {p}")?;
        }
        Ok(())
    }
}

fn is_left_weighted(a: &Permutation, b: &Permutation) -> bool {
    let inv = a.inverse();
    (0..a.len().saturating_sub(1)).all(|i| !b.starts_with(i) || Permutation::ends_with(&inv.0, i))
}

/// Makes adjacent pairs left-weighted by moving crossings leftward until no
/// pair changes.
fn left_weight(factors: &mut [Permutation]) {
    let Some(n) = factors.first().map(|f| f.len()) else { return };
    loop {
        let mut changed = false;
        for j in 0..factors.len().saturating_sub(1) {
            let (left, right) = factors.split_at_mut(j + 1);
            let a = &mut left[j];
            let b = &mut right[0];
            let mut a_inv = a.inverse();
            while let Some(i) = (0..n - 1).find(|&i| b.starts_with(i) && !Permutation::ends_with(&a_inv.0, i)) {
                // a := a σ_i, b := σ_i^-1 b
                for x in a.0.iter_mut() {
                    if *x == i {
                        *x = i + 1;
                    } else if *x == i + 1 {
                        *x = i;
                    }
                }
                b.0.swap(i, i + 1);
                a_inv.0.swap(i, i + 1);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
}
