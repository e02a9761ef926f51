//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.
//!
//! Run alone with `cargo test -p gbw --test acceptance`; pass criterion
//! numbers as arguments to run a subset.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use gbw::cli::all_graphs;
use gbw_core::braid::{psi, BraidWord};
use gbw_core::classify::{betti_cross_check, classify, Verdict};
use gbw_core::embed::{build_embedding, strand_bound, verify_embedding};
use gbw_core::hom::SweepTables;
use gbw_core::homology::{first_betti, homology_all, HomologySummary};
use gbw_core::morse::{analyze, morse_generator_count};
use gbw_core::raag::{Commutation, Letter, RaagWord};
use gbw_core::{CubicalComplex, Graph};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))
}

fn h_tree() -> Graph {
    Graph::new(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap()
}

fn lollipop() -> Graph {
    Graph::new(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()
}

fn theta() -> Graph {
    Graph::new(5, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]).unwrap()
}

fn figure_eight() -> Graph {
    Graph::new(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap()
}

fn no_torsion(h: &[HomologySummary]) -> bool {
    h.iter().all(|x| x.torsion.is_empty())
}

fn bettis(h: &[HomologySummary]) -> Vec<usize> {
    h.iter().map(|x| x.betti).collect()
}

fn c1() -> Outcome {
    let start = Instant::now();
    let c = CubicalComplex::build(&Graph::star(3), 2).map_err(|e| e.to_string())?;
    let h = homology_all(&c);
    ensure(c.counts_to(2) == [6, 6, 0], || format!("counts {:?}", c.counts_to(2)))?;
    ensure(bettis(&h) == [1, 1] && no_torsion(&h), || format!("homology {h:?}"))?;
    within(start, Duration::from_secs(1))?;
    Ok("UD^2(K_{3,1}): counts (6, 6, 0), b = (1, 1), no torsion".into())
}

fn c2() -> Outcome {
    let start = Instant::now();
    let p4 = Graph::path(4);
    let c = CubicalComplex::build(&p4, 2).map_err(|e| e.to_string())?;
    let h = homology_all(&c);
    ensure(c.counts_to(2) == [6, 6, 1], || format!("counts {:?}", c.counts_to(2)))?;
    ensure(h[1].betti == 0 && no_torsion(&h), || format!("homology {h:?}"))?;
    let v = classify(&p4, 2).map_err(|e| e.to_string())?.verdict;
    ensure(v == Verdict::IsBraidGroup { n_prime: 1, case: 1 }, || format!("verdict {v:?}"))?;
    within(start, Duration::from_secs(1))?;
    Ok("UD^2(P_4): counts (6, 6, 1), b_1 = 0, B_2(P_4) = B_1 (case 1)".into())
}

fn c3() -> Outcome {
    let sub3 = Graph::star(3).sufficiently_subdivide(3).map_err(|e| e.to_string())?;
    let cases = [("star_3", Graph::star(3), 2, 1u64), ("star_4", Graph::star(4), 2, 3), ("star_3 subdivided", sub3, 3, 3), ("H-tree", h_tree(), 2, 2)];
    let mut seen = Vec::new();
    for (name, g, n, expected) in cases {
        let formula = morse_generator_count(&g, n).map_err(|e| e.to_string())?.to_u64().unwrap();
        let m = analyze(&g, n, false).map_err(|e| e.to_string())?;
        let critical = m.critical_counts().get(1).copied().unwrap_or(0) as u64;
        let b1 = first_betti(&g, n, false).map_err(|e| e.to_string())? as u64;
        ensure(formula == expected && critical == expected && b1 == expected, || {
            format!("{name}, n={n}: formula {formula}, critical {critical}, b_1 {b1}, expected {expected}")
        })?;
        seen.push(format!("{name}:{expected}"));
    }
    Ok(format!("formula = critical 1-cells = b_1 for {}", seen.join(", ")))
}

fn c4() -> Outcome {
    let yes = |n_prime, case| Verdict::IsBraidGroup { n_prime, case };
    let positives = [
        ("P_6", Graph::path(6), 3, yes(1, 1)),
        ("K_{3,1}", Graph::star(3), 1, yes(1, 2)),
        ("lollipop", lollipop(), 1, yes(2, 3)),
        ("K_{3,1}", Graph::star(3), 2, yes(2, 4)),
        ("C_9", Graph::cycle(9), 5, yes(2, 5)),
    ];
    for (name, g, n, want) in positives {
        let r = betti_cross_check(&g, n).map_err(|e| format!("{name}, n={n}: {e}"))?;
        ensure(r.verdict == want, || format!("{name}, n={n}: {:?}, expected {want:?}", r.verdict))?;
    }
    let sub = Graph::star(3).sufficiently_subdivide(3).map_err(|e| e.to_string())?;
    let negatives = [
        ("K_{3,1} subdivided", sub, 3),
        ("H-tree", h_tree(), 2),
        ("figure-eight", figure_eight(), 1),
        ("K_5", Graph::complete(5), 2),
    ];
    for (name, g, n) in negatives {
        let r = betti_cross_check(&g, n).map_err(|e| format!("{name}, n={n}: {e}"))?;
        ensure(!r.verdict.is_braid_group(), || format!("{name}, n={n}: {:?}", r.verdict))?;
    }
    Ok("cases 1-5 and 4 negatives agree with H_1".into())
}

fn c5() -> Outcome {
    let start = Instant::now();
    let k5 = CubicalComplex::build(&Graph::complete(5), 2).map_err(|e| e.to_string())?;
    ensure(k5.counts_to(2) == [10, 30, 15], || format!("K_5 counts {:?}", k5.counts_to(2)))?;
    ensure(k5.euler_characteristic() == -5, || format!("K_5 χ = {}", k5.euler_characteristic()))?;
    let h5 = homology_all(&k5);
    let k33 = CubicalComplex::build(&Graph::complete_bipartite(3, 3), 2).map_err(|e| e.to_string())?;
    let h33 = homology_all(&k33);
    ensure(!h5[1].torsion.is_empty(), || format!("K_5 H_1 {:?}", h5[1]))?;
    ensure(!h33[1].torsion.is_empty(), || format!("K_{{3,3}} H_1 {:?}", h33[1]))?;
    within(start, Duration::from_secs(5))?;
    Ok(format!("H_1 torsion K_5 {:?}, K_{{3,3}} {:?}; K_5 census (10, 30, 15), χ = -5", h5[1].torsion, h33[1].torsion))
}

fn corpus() -> Vec<(&'static str, Graph)> {
    vec![
        ("P_4", Graph::path(4)),
        ("star_3", Graph::star(3)),
        ("star_4", Graph::star(4)),
        ("H-tree", h_tree()),
        ("C_4", Graph::cycle(4)),
        ("C_5", Graph::cycle(5)),
        ("lollipop", lollipop()),
        ("theta", theta()),
        ("figure-eight", figure_eight()),
        ("K_4", Graph::complete(4)),
        ("K_5", Graph::complete(5)),
        ("K_{3,3}", Graph::complete_bipartite(3, 3)),
    ]
}

fn c6() -> Outcome {
    let mut runs: Vec<(&str, Graph, usize)> = Vec::new();
    for (name, g) in corpus() {
        runs.push((name, g.clone(), 1));
        runs.push((name, g, 2));
    }
    for (name, g) in [("star_3", Graph::star(3)), ("H-tree", h_tree()), ("lollipop", lollipop()), ("C_5", Graph::cycle(5)), ("theta", theta())] {
        runs.push((name, g, 3));
    }
    for (name, g, n) in &runs {
        let ctx = |e: String| format!("{name}, n={n}: {e}");
        let m = analyze(g, *n, true).map_err(|e| ctx(e.to_string()))?;
        m.validate().map_err(|e| ctx(e.to_string()))?;
        let crit = m.critical_counts();
        let alternating: i64 = crit.iter().enumerate().map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
        let chi = m.complex().euler_characteristic();
        ensure(alternating == chi, || ctx(format!("Σ(-1)^d critical = {alternating}, χ = {chi}")))?;
        let h = homology_all(m.complex());
        for x in &h {
            let c = crit.get(x.dimension).copied().unwrap_or(0);
            ensure(c >= x.betti, || ctx(format!("dimension {}: {c} critical < b = {}", x.dimension, x.betti)))?;
        }
    }
    Ok(format!("{} complexes: matchings valid, Euler identity, weak Morse inequalities", runs.len()))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative per isomorphism class of graphs on `v` vertices.
fn isomorphism_classes(v: usize) -> Vec<Graph> {
    let perms = permutations(v);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for g in all_graphs(v) {
        let canon = perms
            .iter()
            .map(|p| {
                let mut e: Vec<(usize, usize)> = g.edges().iter().map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b]))).collect();
                e.sort_unstable();
                e
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(g);
        }
    }
    out
}

fn c7() -> Outcome {
    let start = Instant::now();
    let bounds = [(Graph::path(2), 4), (Graph::empty(2), 7), (Graph::path(3), 9), (Graph::cycle(4), 14)];
    for (g, want) in &bounds {
        let m = build_embedding(g);
        ensure(strand_bound(g) == *want && m.strands() == *want, || {
            format!("{:?}: bound {}, strands {}, expected {want}", g.edges(), strand_bound(g), m.strands())
        })?;
    }
    let mut classes = 0;
    let mut four = 0;
    for v in 1..=4 {
        for g in isomorphism_classes(v) {
            let m = build_embedding(&g);
            let r = verify_embedding(&m).map_err(|e| format!("{} vertices {:?}: {e}", v, g.edges()))?;
            ensure(r.passed() && r.strands <= strand_bound(&g).max(1), || format!("{:?}: {r:?}", g.edges()))?;
            classes += 1;
            four += usize::from(v == 4);
        }
    }
    ensure(four == 11, || format!("{four} classes on 4 vertices"))?;
    within(start, Duration::from_secs(30))?;
    Ok(format!("{classes} graphs on 1-4 vertices ({four} on 4) embed; bounds 4, 7, 9, 14"))
}

fn random_braid(rng: &mut ChaCha8Rng, n: usize, len: usize) -> Vec<i32> {
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect()
}

fn braid_relator(rng: &mut ChaCha8Rng, n: usize) -> Vec<i32> {
    let i = rng.gen_range(1..n as i32);
    let mut r = match rng.gen_range(0..3) {
        0 => vec![i, -i],
        1 if i + 1 < n as i32 => vec![i, i + 1, i, -(i + 1), -i, -(i + 1)],
        _ => {
            let far: Vec<i32> = (1..n as i32).filter(|j| (j - i).abs() >= 2).collect();
            if far.is_empty() {
                vec![-i, i]
            } else {
                let j = far[rng.gen_range(0..far.len())];
                vec![i, j, -i, -j]
            }
        }
    };
    if rng.gen_bool(0.5) {
        r = r.iter().rev().map(|x| -x).collect();
    }
    r
}

fn raag_relator(rng: &mut ChaCha8Rng, g: &Graph) -> Vec<Letter> {
    let v = g.vertex_count();
    let a = rng.gen_range(0..v);
    let e = if rng.gen_bool(0.5) { 1 } else { -1 };
    let neighbours: Vec<usize> = (0..v).filter(|&b| g.has_edge(a, b)).collect();
    if neighbours.is_empty() || rng.gen_bool(0.3) {
        return vec![Letter::new(a, e), Letter::new(a, -e)];
    }
    let b = neighbours[rng.gen_range(0..neighbours.len())];
    let f = if rng.gen_bool(0.5) { 1 } else { -1 };
    vec![Letter::new(a, e), Letter::new(b, f), Letter::new(a, -e), Letter::new(b, -f)]
}

fn relator_trials() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6277);
    for trial in 0..500 {
        let n = rng.gen_range(2..=7);
        let len = rng.gen_range(0..=40);
        let word = random_braid(&mut rng, n, len);
        let rel = braid_relator(&mut rng, n);
        let at = rng.gen_range(0..=word.len());
        let mut longer = word.clone();
        longer.splice(at..at, rel);
        let a = BraidWord::new(n, word).unwrap();
        let b = BraidWord::new(n, longer).unwrap();
        ensure(a.normal_form() == b.normal_form(), || format!("braid trial {trial}: {a} vs {b}"))?;
    }
    let graphs: Vec<Graph> = (1..=5).flat_map(isomorphism_classes).collect();
    for trial in 0..500 {
        let g = &graphs[rng.gen_range(0..graphs.len())];
        let v = g.vertex_count();
        let len = rng.gen_range(0..=40);
        let word: Vec<Letter> =
            (0..len).map(|_| Letter::new(rng.gen_range(0..v), if rng.gen_bool(0.5) { 1 } else { -1 })).collect();
        let rel = raag_relator(&mut rng, g);
        let at = rng.gen_range(0..=word.len());
        let mut longer = word.clone();
        longer.splice(at..at, rel);
        let a = RaagWord::new(g.clone(), word).unwrap();
        let b = RaagWord::new(g.clone(), longer).unwrap();
        ensure(a.normal_form() == b.normal_form(), || format!("RAAG trial {trial}: {a} vs {b}"))?;
    }
    Ok(())
}

fn tits_pattern() -> Result<(), String> {
    for n in 2..=9 {
        for i in 1..n {
            for j in i + 1..n {
                let c = psi(i, n).unwrap().commutator(&psi(j, n).unwrap()).unwrap();
                ensure(c.is_identity() == (j - i >= 2), || format!("n={n}: [ψ_{i}, ψ_{j}] identity = {}", c.is_identity()))?;
            }
        }
    }
    Ok(())
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n as u32).collect())
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.0[x as usize] != x {
            let up = self.0[self.0[x as usize] as usize];
            self.0[x as usize] = up;
            x = up;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.0[hi as usize] = lo;
        }
    }
}

/// Letter code `2g` for `g^-1` and `2g + 1` for `g`, so that numeric order of
/// big-endian codes is the shortlex order of words of one length.
fn letter_of(code: u32) -> Letter {
    Letter::new(code as usize / 2, if code % 2 == 1 { 1 } else { -1 })
}

fn code_of(l: &Letter) -> u32 {
    2 * l.generator as u32 + u32::from(l.exponent == 1)
}

/// Checks the normal form of every word of length at most `max_len` over `g`
/// against the shortlex-least word reachable by swaps of commuting neighbours
/// and deletions of adjacent inverse pairs.
///
/// Words of one length are grouped into swap classes by union-find. A class
/// holding a word with an adjacent inverse pair inherits the answer of the
/// shorter word, and all such shorter words must agree. A class without one
/// answers with its smallest member.
fn raag_oracle_check(g: &Graph, max_len: usize) -> Result<u64, String> {
    let base = 2 * g.vertex_count() as u32;
    let comm = Commutation::new(g);
    let commuting = |a: u32, b: u32| a / 2 != b / 2 && comm.commute(a as usize / 2, b as usize / 2);
    // Answers for lengths L - 1 and L - 2, as (length, code).
    let mut previous: [(Vec<u8>, Vec<u32>); 2] = [(vec![], vec![]), (vec![], vec![])];
    let mut checked = 0u64;
    for len in 0..=max_len {
        let pow: Vec<u32> = (0..=len as u32).map(|k| base.pow(k)).collect();
        let count = pow[len] as usize;
        let digit = |w: u32, p: usize| w / pow[len - 1 - p] % base;
        let mut uf = UnionFind::new(count);
        for w in 0..count as u32 {
            for p in 0..len.saturating_sub(1) {
                let (a, b) = (digit(w, p), digit(w, p + 1));
                if a < b && commuting(a, b) {
                    let swapped = w + (b - a) * pow[len - 1 - p] - (b - a) * pow[len - 2 - p];
                    uf.union(w, swapped);
                }
            }
        }
        let (shorter_len, shorter_code) = &previous[1];
        let mut ans_len = vec![u8::MAX; count];
        let mut ans_code = vec![0u32; count];
        for w in 0..count as u32 {
            let mut cand = (len as u8, w);
            for p in 0..len.saturating_sub(1) {
                if digit(w, p) ^ 1 == digit(w, p + 1) {
                    let removed = (w / pow[len - p] * pow[len - 2 - p] + w % pow[len - 2 - p]) as usize;
                    cand = (shorter_len[removed], shorter_code[removed]);
                    break;
                }
            }
            let r = uf.find(w) as usize;
            let cur = (ans_len[r], ans_code[r]);
            ans_len[r] = cand.0;
            ans_code[r] = cand.1;
            if cur.0 == u8::MAX {
                continue;
            }
            let (cur_cancels, cand_cancels) = ((cur.0 as usize) < len, (cand.0 as usize) < len);
            if cur_cancels && cand_cancels {
                ensure(cur == cand, || format!("oracle disagreement at length {len}"))?;
            } else if cur_cancels || (!cand_cancels && cur.1 < cand.1) {
                ans_len[r] = cur.0;
                ans_code[r] = cur.1;
            }
        }
        // Non-root slots are unused so far; overwrite them with the class answer.
        for w in 0..count as u32 {
            let r = uf.find(w) as usize;
            ans_len[w as usize] = ans_len[r];
            ans_code[w as usize] = ans_code[r];
        }
        drop(uf);
        let mut letters = Vec::with_capacity(len);
        for w in 0..count as u32 {
            letters.clear();
            letters.extend((0..len).map(|p| letter_of(digit(w, p))));
            let nf = comm.normal_form(&letters);
            let code = nf.iter().fold(0u32, |acc, l| acc * base + code_of(l));
            let want = (ans_len[w as usize], ans_code[w as usize]);
            ensure((nf.len() as u8, code) == want, || {
                format!("{:?}: word {letters:?} has normal form {nf:?}, oracle ({}, {})", g.edges(), want.0, want.1)
            })?;
            checked += 1;
        }
        previous.swap(0, 1);
        previous[0] = (ans_len, ans_code);
    }
    Ok(checked)
}

fn c8() -> Outcome {
    relator_trials()?;
    tits_pattern()?;
    let mut words = 0;
    let classes = isomorphism_classes(4);
    for g in &classes {
        words += raag_oracle_check(g, 8)?;
    }
    Ok(format!(
        "500 + 500 relator insertions, Tits pattern n <= 9, {words} RAAG words (length <= 8, {} graphs on 4 vertices) match the oracle",
        classes.len()
    ))
}

fn c9() -> Outcome {
    let start = Instant::now();
    let mut graphs = 0;
    let (mut candidates, mut passing) = (0u64, 0u64);
    for v in 1..=3 {
        for g in all_graphs(v) {
            let r = SweepTables::new(&g, 3).run(5);
            ensure(r.counterexamples.is_empty(), || {
                format!("{:?}: {} counterexamples, first {:?}", g.edges(), r.counterexamples.len(), r.counterexamples[0].images())
            })?;
            graphs += 1;
            candidates += r.candidates;
            passing += r.relation_passing;
        }
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!("{graphs} labeled graphs, {candidates} tuples, {passing} homomorphisms, all with one image"))
}

/// Joins two leaves of `t` by an edge, so that the new edge is the only one
/// outside the spanning tree `t` and both its endpoints are leaves of `t`.
fn leaf_pairs(t: &Graph) -> Vec<(usize, usize)> {
    let deg = t.degrees();
    let leaves: Vec<usize> = (0..t.vertex_count()).filter(|&v| deg[v] == 1).collect();
    leaves.iter().enumerate().flat_map(|(i, &a)| leaves[i + 1..].iter().map(move |&b| (a, b))).collect()
}

fn c10() -> Outcome {
    let sub = Graph::star(3).sufficiently_subdivide(3).map_err(|e| e.to_string())?;
    let (mut lines, mut failures) = (Vec::new(), Vec::new());
    for (name, t) in [("star_3 subdivided", sub), ("H-tree", h_tree())] {
        let old = first_betti(&t, 2, false).map_err(|e| e.to_string())?;
        for (a, b) in leaf_pairs(&t) {
            let mut edges = t.edges().to_vec();
            edges.push((a, b));
            let g = Graph::new(t.vertex_count(), &edges).map_err(|e| e.to_string())?;
            let new = first_betti(&g, 2, true).map_err(|e| e.to_string())?;
            let need = old + if old >= 1 { 2 } else { 1 };
            if new < need {
                failures.push(format!("{name}+({a},{b}): b_1 {old} -> {new}, need {need}"));
            }
            lines.push(format!("{name}+({a},{b}): {old}->{new}"));
        }
    }
    ensure(failures.is_empty(), || format!("{} of {} edges fall short: {}", failures.len(), lines.len(), failures.join(", ")))?;
    Ok(lines.join(", "))
}

/// Criteria that fail for mathematical reasons. They still print FAIL but do
/// not change the exit status.
const KNOWN_FAILURES: &[(usize, &str)] = &[(
    10,
    "joining two leaves of a tree adds V - 2 one-cells and E - 2 two-cells for two strands, \
     so χ drops by exactly one and b_1 grows by exactly one; the +2 bound cannot hold",
)];

fn main() {
    let criteria: [Criterion; 10] = [
        ("UD^2(K_{3,1}) census and homology", c1),
        ("UD^2(P_4) census and classification", c2),
        ("generator formula vs critical cells vs b_1", c3),
        ("classification suite", c4),
        ("non-planar torsion", c5),
        ("Morse matching validity", c6),
        ("RAAG embedding into pure braids", c7),
        ("word problem engines", c8),
        ("homomorphism sweep", c9),
        ("adding a deleted edge raises b_1", c10),
    ];
    let selected: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let k = i + 1;
        if !selected.is_empty() && !selected.contains(&k) {
            continue;
        }
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let t = start.elapsed();
        match result {
            Ok(detail) => println!("criterion {k:>2} PASS  {name}: {detail} [{t:.2?}]"),
            Err(why) => match KNOWN_FAILURES.iter().find(|(n, _)| *n == k) {
                Some((_, reason)) => println!("criterion {k:>2} FAIL  {name}: {why} [{t:.2?}]\n              known failure: {reason}"),
                None => {
                    failed += 1;
                    println!("criterion {k:>2} FAIL  {name}: {why} [{t:.2?}]");
                }
            },
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
