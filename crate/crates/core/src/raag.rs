//! Right-angled Artin groups `A(Γ)`: one generator per vertex of `Γ`, and
//! two generators commute exactly when their vertices are adjacent.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::UnionFind;
use crate::error::WordError;
use crate::graph::Graph;

/// Largest `|e|` accepted for a `g<k>^<e>` token.
pub const MAX_TOKEN_EXPONENT: i64 = 1 << 20;

/// One generator to the power `±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub exponent: i8,
}

impl Letter {
    pub fn new(generator: usize, exponent: i8) -> Self {
        debug_assert!(exponent == 1 || exponent == -1);
        Self { generator, exponent }
    }

    pub fn inverse(self) -> Self {
        Self { generator: self.generator, exponent: -self.exponent }
    }
}

/// Adjacency test on the defining graph as a dense table.
#[derive(Clone, Debug)]
pub struct Commutation {
    size: usize,
    table: Vec<bool>,
}

impl Commutation {
    pub fn new(graph: &Graph) -> Self {
        let size = graph.vertex_count();
        let mut table = vec![false; size * size];
        for &(u, v) in graph.edges() {
            table[u * size + v] = true;
            table[v * size + u] = true;
        }
        Self { size, table }
    }

    /// Whether distinct generators `a` and `b` commute.
    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.table[a * self.size + b]
    }

    /// Free reduction up to commutation: `x ... x^-1` cancels whenever every
    /// letter in between commutes with `x`.
    pub fn reduce(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
        'next: for &x in letters {
            for j in (0..out.len()).rev() {
                let y = out[j];
                if y.generator == x.generator {
                    if y.exponent == -x.exponent {
                        out.remove(j);
                        continue 'next;
                    }
                    break;
                }
                if !self.commute(y.generator, x.generator) {
                    break;
                }
            }
            out.push(x);
        }
        out
    }

    /// Lexicographically least rearrangement of `letters` by commutations:
    /// repeatedly take the smallest letter that can be moved to the front.
    pub fn lex_least(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut rest = letters.to_vec();
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let mut best: Option<usize> = None;
            for i in 0..rest.len() {
                if self.movable_to_front(&rest, i) && best.is_none_or(|b| rest[i] < rest[b]) {
                    best = Some(i);
                }
            }
            let i = best.expect("the first letter is always movable");
            out.push(rest.remove(i));
        }
        out
    }

    /// Reduced and then lexicographically least; equal group elements give
    /// identical output.
    pub fn normal_form(&self, letters: &[Letter]) -> Vec<Letter> {
        self.lex_least(&self.reduce(letters))
    }

    fn movable_to_front(&self, letters: &[Letter], i: usize) -> bool {
        let g = letters[i].generator;
        letters[..i].iter().all(|y| y.generator != g && self.commute(y.generator, g))
    }

    fn movable_to_end(&self, letters: &[Letter], i: usize) -> bool {
        let g = letters[i].generator;
        letters[i + 1..].iter().all(|y| y.generator != g && self.commute(y.generator, g))
    }

    /// A pair `(i, j)` with `letters[i]` movable to the front and its inverse
    /// `letters[j]` movable to the end, choosing the smallest front letter.
    fn conjugating_pair(&self, letters: &[Letter]) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in 0..letters.len() {
            if !self.movable_to_front(letters, i) {
                continue;
            }
            let inv = letters[i].inverse();
            let found = (i + 1..letters.len()).find(|&j| letters[j] == inv && self.movable_to_end(letters, j));
            if let Some(j) = found {
                if best.is_none_or(|(b, _)| letters[i] < letters[b]) {
                    best = Some((i, j));
                }
            }
        }
        best
    }
}

/// A word in `A(Γ)`, stored letter by letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaagWord {
    graph: Graph,
    letters: Vec<Letter>,
}

impl RaagWord {
    pub fn new(graph: Graph, letters: Vec<Letter>) -> Result<Self, WordError> {
        for l in &letters {
            if l.generator >= graph.vertex_count() {
                return Err(out_of_range(l.generator as i64, &graph));
            }
            if l.exponent != 1 && l.exponent != -1 {
                return Err(WordError::ExponentTooLarge(l.exponent as i64));
            }
        }
        Ok(Self { graph, letters })
    }

    pub fn identity(graph: Graph) -> Self {
        Self { graph, letters: Vec::new() }
    }

    pub fn generator(graph: Graph, k: usize) -> Result<Self, WordError> {
        Self::from_powers(graph, &[(k, 1)])
    }

    /// `g_{k1}^{e1} g_{k2}^{e2} ...`
    pub fn from_powers(graph: Graph, powers: &[(usize, i64)]) -> Result<Self, WordError> {
        let mut letters = Vec::new();
        for &(k, e) in powers {
            if k >= graph.vertex_count() {
                return Err(out_of_range(k as i64, &graph));
            }
            push_power(&mut letters, k, e)?;
        }
        Ok(Self { graph, letters })
    }

    /// Parses whitespace-separated tokens `g<k>`, `g<k>^-1` or `g<k>^<e>`
    /// (0-based `k`); a lone `1` is the identity.
    pub fn parse(graph: Graph, text: &str) -> Result<Self, WordError> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" {
                continue;
            }
            let (k, e) = parse_token(token, 'g')?;
            if k < 0 || k as usize >= graph.vertex_count() {
                return Err(out_of_range(k, &graph));
            }
            push_power(&mut letters, k as usize, e)?;
        }
        Ok(Self { graph, letters })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn with_letters(&self, letters: Vec<Letter>) -> Self {
        Self { graph: self.graph.clone(), letters }
    }

    fn commutation(&self) -> Commutation {
        Commutation::new(&self.graph)
    }

    pub fn concat(&self, other: &RaagWord) -> Result<RaagWord, WordError> {
        if self.graph != other.graph {
            return Err(WordError::GroupMismatch);
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(self.with_letters(letters))
    }

    pub fn inverse(&self) -> RaagWord {
        self.with_letters(self.letters.iter().rev().map(|l| l.inverse()).collect())
    }

    /// `self * other * self^-1 * other^-1`
    pub fn commutator(&self, other: &RaagWord) -> Result<RaagWord, WordError> {
        self.concat(other)?.concat(&self.inverse())?.concat(&other.inverse())
    }

    /// The reduced, shortlex-least representative of this element.
    pub fn normal_form(&self) -> RaagWord {
        self.with_letters(self.commutation().normal_form(&self.letters))
    }

    /// Equality in `A(Γ)`; words over different graphs are never equal.
    pub fn equals(&self, other: &RaagWord) -> bool {
        self.graph == other.graph && self.normal_form().letters == other.normal_form().letters
    }

    pub fn is_identity(&self) -> bool {
        self.commutation().reduce(&self.letters).is_empty()
    }

    /// The exponent sum `ε_k`.
    pub fn exponent_sum(&self, k: usize) -> i64 {
        self.letters.iter().filter(|l| l.generator == k).map(|l| l.exponent as i64).sum()
    }

    /// Generators occurring in the reduced word, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.commutation().reduce(&self.letters).iter().map(|l| l.generator).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Generators outside the support adjacent to every support generator.
    pub fn link(&self) -> Vec<usize> {
        let supp = self.support();
        let comm = self.commutation();
        (0..self.graph.vertex_count())
            .filter(|v| !supp.contains(v) && supp.iter().all(|&s| comm.commute(s, *v)))
            .collect()
    }

    /// `(p, w')` with `self = p w' p^-1`, `w'` cyclically reduced and in
    /// normal form.
    pub fn cyclic_reduce(&self) -> (RaagWord, RaagWord) {
        let comm = self.commutation();
        let mut core = comm.reduce(&self.letters);
        let mut conj = Vec::new();
        while let Some((i, j)) = comm.conjugating_pair(&core) {
            conj.push(core[i]);
            core.remove(j);
            core.remove(i);
        }
        (self.with_letters(comm.normal_form(&conj)), self.with_letters(comm.lex_least(&core)))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        let comm = self.commutation();
        comm.conjugating_pair(&comm.reduce(&self.letters)).is_none()
    }

    /// Splits the reduced word by the connected components of the opposite
    /// of the support-induced subgraph; factors ordered by smallest generator.
    pub fn pure_factors(&self) -> Result<Vec<RaagWord>, WordError> {
        let comm = self.commutation();
        let reduced = comm.reduce(&self.letters);
        if comm.conjugating_pair(&reduced).is_some() {
            return Err(WordError::NotCyclicallyReduced);
        }
        let mut supp: Vec<usize> = reduced.iter().map(|l| l.generator).collect();
        supp.sort_unstable();
        supp.dedup();

        let mut uf = UnionFind::new(supp.len());
        for a in 0..supp.len() {
            for b in a + 1..supp.len() {
                if !comm.commute(supp[a], supp[b]) {
                    uf.union(a, b);
                }
            }
        }
        // Components keyed by their smallest member, which comes first in `supp`.
        let mut slot = vec![usize::MAX; supp.len()];
        let mut count = 0;
        for a in 0..supp.len() {
            let r = uf.find(a);
            if slot[r] == usize::MAX {
                slot[r] = count;
                count += 1;
            }
        }
        let mut factors = vec![Vec::new(); count];
        for l in &reduced {
            let a = supp.binary_search(&l.generator).expect("in support");
            factors[slot[uf.find(a)]].push(*l);
        }
        Ok(factors.into_iter().map(|f| self.with_letters(comm.lex_least(&f))).collect())
    }

    /// `(h, ĥ)`: `h` collects the pure factors whose support meets
    /// `{k : ε_k ≠ 0}`, `ĥ` the others.
    pub fn split_h_hat(&self) -> Result<(RaagWord, RaagWord), WordError> {
        let factors = self.pure_factors()?;
        let mut h = Vec::new();
        let mut h_hat = Vec::new();
        for f in factors {
            let hits = f.letters.iter().any(|l| self.exponent_sum(l.generator) != 0);
            if hits {
                h.extend_from_slice(&f.letters);
            } else {
                h_hat.extend_from_slice(&f.letters);
            }
        }
        Ok((self.with_letters(h), self.with_letters(h_hat)))
    }

    /// Drops letters whose generator is not in `keep`. The result lies in the
    /// special subgroup `A(Γ[keep])` of the same group.
    pub fn delete_generators(&self, keep: &[usize]) -> RaagWord {
        self.with_letters(self.letters.iter().copied().filter(|l| keep.contains(&l.generator)).collect())
    }
}

impl fmt::Display for RaagWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let runs: Vec<(usize, i64)> = runs(&self.letters);
        write_runs(f, 'g', 0, &runs)
    }
}

pub(crate) fn runs(letters: &[Letter]) -> Vec<(usize, i64)> {
    let mut out: Vec<(usize, i64)> = Vec::new();
    for l in letters {
        match out.last_mut() {
            Some((g, e)) if *g == l.generator && e.signum() == l.exponent as i64 => *e += l.exponent as i64,
            _ => out.push((l.generator, l.exponent as i64)),
        }
    }
    out
}

/// Tokens `x<k + offset>` or `x<k + offset>^<e>`; `1` for the empty word.
pub(crate) fn write_runs(f: &mut fmt::Formatter<'_>, prefix: char, offset: usize, runs: &[(usize, i64)]) -> fmt::Result {
    if runs.is_empty() {
        return f.write_str("1");
    }
    for (i, &(g, e)) in runs.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        if e == 1 {
            write!(f, "{prefix}{}", g + offset)?;
        } else {
            write!(f, "{prefix}{}^{e}", g + offset)?;
        }
    }
    Ok(())
}

/// Splits `x<k>` / `x<k>^<e>` into `(k, e)`.
pub(crate) fn parse_token(token: &str, prefix: char) -> Result<(i64, i64), WordError> {
    let malformed = || WordError::Malformed(token.to_string());
    let body = token.strip_prefix(prefix).ok_or_else(malformed)?;
    let (index, exp) = match body.split_once('^') {
        Some((i, e)) => (i, Some(e)),
        None => (body, None),
    };
    if index.is_empty() || !index.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed());
    }
    let k: i64 = index.parse().map_err(|_| malformed())?;
    let e = match exp {
        None => 1,
        Some(e) => {
            let digits = e.strip_prefix('-').unwrap_or(e);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            let v: i64 = e.parse().map_err(|_| WordError::ExponentTooLarge(i64::MAX))?;
            if v.abs() > MAX_TOKEN_EXPONENT {
                return Err(WordError::ExponentTooLarge(v));
            }
            v
        }
    };
    Ok((k, e))
}

fn push_power(letters: &mut Vec<Letter>, k: usize, e: i64) -> Result<(), WordError> {
    if e.abs() > MAX_TOKEN_EXPONENT {
        return Err(WordError::ExponentTooLarge(e));
    }
    let sign = if e < 0 { -1 } else { 1 };
    letters.extend(core::iter::repeat_n(Letter::new(k, sign), e.unsigned_abs() as usize));
    Ok(())
}

fn out_of_range(index: i64, graph: &Graph) -> WordError {
    WordError::OutOfRange { index, min: 0, max: graph.vertex_count() as i64 - 1 }
}
