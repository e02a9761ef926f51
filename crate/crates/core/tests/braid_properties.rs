//! Garside normal form against the Artin action of `B_n` on the free group,
//! which is faithful.

use gbw_core::braid::{psi, BraidWord};
use proptest::prelude::*;

/// Freely reduced word in `F_n`; letters `±(k + 1)`.
type Free = Vec<i32>;

fn push_reduced(w: &mut Free, x: i32) {
    if w.last() == Some(&-x) {
        w.pop();
    } else {
        w.push(x);
    }
}

fn substitute(w: &Free, images: &[Free]) -> Free {
    let mut out = Vec::new();
    for &x in w {
        let img = &images[x.unsigned_abs() as usize - 1];
        if x > 0 {
            img.iter().for_each(|&y| push_reduced(&mut out, y));
        } else {
            img.iter().rev().for_each(|&y| push_reduced(&mut out, -y));
        }
    }
    out
}

/// Images of the free generators under the automorphism of `word`.
fn artin_action(word: &BraidWord) -> Vec<Free> {
    let n = word.strands();
    let mut images: Vec<Free> = (1..=n as i32).map(|k| vec![k]).collect();
    for &l in word.letters() {
        let i = l.unsigned_abs() as i32;
        let mut phi: Vec<Free> = (1..=n as i32).map(|k| vec![k]).collect();
        if l > 0 {
            phi[i as usize - 1] = vec![i, i + 1, -i];
            phi[i as usize] = vec![i];
        } else {
            phi[i as usize - 1] = vec![i + 1];
            phi[i as usize] = vec![-(i + 1), i, i + 1];
        }
        images = images.iter().map(|w| substitute(w, &phi)).collect();
    }
    images
}

fn artin_identity(word: &BraidWord) -> bool {
    artin_action(word).iter().enumerate().all(|(k, w)| *w == vec![k as i32 + 1])
}

fn word_strategy(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((1..n as i32, any::<bool>()), 0..=max_len).prop_map(move |ls| {
            BraidWord::new(n, ls.into_iter().map(|(i, s)| if s { i } else { -i }).collect()).unwrap()
        })
    })
}

fn relators(n: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for i in 1..n as i32 {
        out.push(vec![i, -i]);
        out.push(vec![-i, i]);
        if i + 1 < n as i32 {
            out.push(vec![i, i + 1, i, -(i + 1), -i, -(i + 1)]);
        }
        for j in i + 2..n as i32 {
            out.push(vec![i, j, -i, -j]);
        }
    }
    out
}

#[test]
fn artin_oracle_sanity() {
    assert!(artin_identity(&BraidWord::parse("s1 s2 s1 s2^-1 s1^-1 s2^-1", 3).unwrap()));
    assert!(!artin_identity(&BraidWord::parse("s1^2", 3).unwrap()));
    let c = psi(1, 5).unwrap().commutator(&psi(3, 5).unwrap()).unwrap();
    assert!(artin_identity(&c));
}

#[test]
fn exhaustive_short_words_in_b4() {
    // Every word of length <= 5: identity iff the Artin action is trivial,
    // and the normal form determines the action.
    let mut seen: std::collections::HashMap<String, Vec<Free>> = Default::default();
    let letters = [1, -1, 2, -2, 3, -3];
    let mut frontier: Vec<Vec<i32>> = vec![vec![]];
    for _ in 0..=5 {
        let mut next = Vec::new();
        for w in &frontier {
            let b = BraidWord::new(4, w.clone()).unwrap();
            let nf = b.normal_form();
            assert!(nf.is_well_formed());
            assert_eq!(nf.is_identity(), artin_identity(&b), "{b}");
            let action = artin_action(&b);
            let prev = seen.entry(nf.to_string()).or_insert_with(|| action.clone());
            assert_eq!(*prev, action, "{b}");
            for &l in &letters {
                let mut x = w.clone();
                x.push(l);
                next.push(x);
            }
        }
        frontier = next;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn relator_insertion(w in word_strategy(7, 40), pos in any::<prop::sample::Index>(), pick in any::<prop::sample::Index>()) {
        let n = w.strands();
        let rels = relators(n);
        let r = &rels[pick.index(rels.len())];
        let at = pos.index(w.len() + 1);
        let mut letters = w.letters().to_vec();
        letters.splice(at..at, r.iter().copied());
        let v = BraidWord::new(n, letters).unwrap();
        prop_assert_eq!(w.normal_form(), v.normal_form());
    }

    #[test]
    fn inverse_cancels(w in word_strategy(7, 30)) {
        prop_assert!(w.concat(&w.inverse()).unwrap().is_identity());
        prop_assert!(w.inverse().concat(&w).unwrap().is_identity());
    }

    #[test]
    fn permutation_is_a_homomorphism(u in word_strategy(6, 20), seed in any::<u64>()) {
        let n = u.strands();
        let v = BraidWord::new(n, (0..(seed % 15)).map(|k| ((seed >> k) % (n as u64 - 1)) as i32 + 1).collect()).unwrap();
        let uv = u.concat(&v).unwrap();
        prop_assert_eq!(uv.permutation_image(), u.permutation_image().then(&v.permutation_image()));
    }

    #[test]
    fn agrees_with_artin_action(u in word_strategy(5, 10), v in word_strategy(5, 10)) {
        if u.strands() == v.strands() {
            let same = u.equals(&v);
            let q = u.concat(&v.inverse()).unwrap();
            prop_assert_eq!(same, artin_identity(&q));
        }
        let nf = u.normal_form();
        prop_assert!(nf.is_well_formed());
        prop_assert_eq!(nf.to_word().normal_form(), nf.clone());
        prop_assert_eq!(nf.is_identity(), artin_identity(&u));
    }
}
