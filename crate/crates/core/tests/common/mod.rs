//! Seeded generators shared by the integration tests.

#![allow(dead_code)]

use pogp::{OrderMode, Pogp, Symbol, Word};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_word<R: Rng>(rng: &mut R, k: u32, n: usize) -> Word {
    let letters = (0..n).map(|_| rng.gen_range(1..=k)).collect();
    Word::new(letters, k).expect("letters in range")
}

/// Dense ranks 1..=m for `len` letters, with repeats allowed.
fn dense_ranks<R: Rng>(rng: &mut R, len: usize) -> Vec<u32> {
    let raw: Vec<u32> = (0..len).map(|_| rng.gen_range(1..=len as u32)).collect();
    let mut distinct = raw.clone();
    distinct.sort();
    distinct.dedup();
    raw.iter()
        .map(|r| distinct.binary_search(r).unwrap() as u32 + 1)
        .collect()
}

fn render(symbols: &[Symbol], cuts: &[bool]) -> String {
    let mut s = String::new();
    for (i, sym) in symbols.iter().enumerate() {
        if i > 0 && cuts[i - 1] {
            s.push('-');
        }
        s.push_str(&sym.to_string());
    }
    s
}

/// A random pattern of at most `max_len` letters over up to three prime
/// classes, parsed from its text under a random order mode.
pub fn random_pattern<R: Rng>(rng: &mut R, max_len: usize) -> (Pogp, OrderMode) {
    let len = rng.gen_range(1..=max_len);
    let n_classes = rng.gen_range(1..=len.min(3));
    let mut classes: Vec<u32> = (0..n_classes as u32).collect();
    classes.extend((n_classes..len).map(|_| rng.gen_range(0..n_classes as u32)));
    classes.shuffle(rng);

    let mut symbols = vec![Symbol::new(0, 0); len];
    for c in 0..n_classes as u32 {
        let slots: Vec<usize> = (0..len).filter(|&i| classes[i] == c).collect();
        for (slot, rank) in slots.iter().zip(dense_ranks(rng, slots.len())) {
            symbols[*slot] = Symbol::new(c, rank);
        }
    }
    let cuts: Vec<bool> = (1..len).map(|_| rng.gen_bool(0.4)).collect();
    let text = render(&symbols, &cuts);

    let mode = match (n_classes, rng.gen_range(0..3)) {
        (1, _) | (_, 0) => OrderMode::Incomparable,
        (_, 1) => OrderMode::Shuffle,
        _ => {
            let p = symbols[rng.gen_range(0..len)];
            let others: Vec<Symbol> = symbols.iter().copied().filter(|s| s.class != p.class).collect();
            let q = *others.choose(rng).unwrap();
            OrderMode::Explicit(vec![(p, q)])
        }
    };
    let p = Pogp::parse(&text, &mode).unwrap_or_else(|e| panic!("{text}: {e}"));
    (p, mode)
}

/// A random hyphen-free single-class pattern.
pub fn random_block<R: Rng>(rng: &mut R, max_len: usize) -> Pogp {
    let len = rng.gen_range(1..=max_len);
    let ranks = dense_ranks(rng, len);
    Pogp::plain(&[&ranks]).unwrap()
}

/// A random two-class pattern with `r1` distinct primed letters and `r2`
/// distinct double-primed letters, each class in its own block. With
/// `shuffle`, an unprimed dominating letter sits between the blocks.
pub fn random_two_class<R: Rng>(rng: &mut R, r1: u32, r2: u32, shuffle: bool) -> Pogp {
    let block = |rng: &mut R, class: u32, r: u32| {
        let mut ranks: Vec<u32> = (1..=r).collect();
        ranks.shuffle(rng);
        ranks.iter().map(|&x| Symbol::new(class, x).to_string()).collect::<String>()
    };
    let (a, b) = (block(rng, 1, r1), block(rng, 2, r2));
    let (first, second) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
    let (text, mode) = if shuffle {
        (format!("{first}-1-{second}"), OrderMode::Shuffle)
    } else {
        (format!("{first}-{second}"), OrderMode::Incomparable)
    };
    Pogp::parse(&text, &mode).unwrap()
}

/// Largest set of pairwise position-disjoint occurrences, by exhaustive
/// search.
pub fn exhaustive_mnd(occurrences: &[Vec<usize>]) -> usize {
    fn go(occ: &[Vec<usize>], used: &mut Vec<bool>, from: usize) -> usize {
        let mut best = 0;
        for i in from..occ.len() {
            if occ[i].iter().all(|&p| !used[p]) {
                for &p in &occ[i] {
                    used[p] = true;
                }
                best = best.max(1 + go(occ, used, i + 1));
                for &p in &occ[i] {
                    used[p] = false;
                }
            }
        }
        best
    }
    let width = occurrences.iter().flatten().max().map_or(0, |m| m + 1);
    go(occurrences, &mut vec![false; width], 0)
}
