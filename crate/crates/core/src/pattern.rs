//! Partially ordered generalized patterns.
//!
//! A pattern is a list of hyphen-separated blocks of [`Symbol`]s together
//! with a strict partial order on the symbols. The textual notation follows
//! the prime convention: the number of primes on a letter picks its
//! comparability class and the digits give its rank inside the class, so
//! `1'-2-1''` has three symbols in three classes. Letters of one class are
//! totally ordered by rank; letters of different classes are related only
//! through the [`OrderMode`] used when parsing.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;

use crate::error::PatternError;

/// One pattern letter: a comparability class and a rank inside it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    /// Number of primes; 0 is the unprimed class.
    pub class: u32,
    /// Value of the letter inside its class, starting at 1.
    pub rank: u32,
}

impl Symbol {
    pub const fn new(class: u32, rank: u32) -> Self {
        Symbol { class, rank }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank >= 10 {
            write!(f, "({})", self.rank)?;
        } else {
            write!(f, "{}", self.rank)?;
        }
        for _ in 0..self.class {
            f.write_str("'")?;
        }
        Ok(())
    }
}

/// How two symbols relate under a pattern's order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// A transitively closed strict partial order on a finite set of symbols.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderRelation {
    carrier: Vec<Symbol>,
    less: BTreeSet<(Symbol, Symbol)>,
}

impl OrderRelation {
    /// Builds the order generated by the within-class rank order plus the
    /// given cross pairs `(p, q)` meaning `p < q`.
    pub fn generate(
        carrier: &BTreeSet<Symbol>,
        extra: &[(Symbol, Symbol)],
    ) -> Result<Self, PatternError> {
        let carrier: Vec<Symbol> = carrier.iter().copied().collect();
        let index: BTreeMap<Symbol, usize> =
            carrier.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let m = carrier.len();
        let mut rel = vec![vec![false; m]; m];
        for (i, p) in carrier.iter().enumerate() {
            for (j, q) in carrier.iter().enumerate() {
                if p.class == q.class && p.rank < q.rank {
                    rel[i][j] = true;
                }
            }
        }
        for (p, q) in extra {
            let i = *index
                .get(p)
                .ok_or_else(|| PatternError::UnknownSymbol(p.to_string()))?;
            let j = *index
                .get(q)
                .ok_or_else(|| PatternError::UnknownSymbol(q.to_string()))?;
            rel[i][j] = true;
        }
        for via in 0..m {
            for i in 0..m {
                if rel[i][via] {
                    let row = rel[via].clone();
                    for (cell, reach) in rel[i].iter_mut().zip(row) {
                        *cell |= reach;
                    }
                }
            }
        }
        if let Some(i) = (0..m).find(|&i| rel[i][i]) {
            return Err(PatternError::Cycle(carrier[i].to_string()));
        }
        let mut less = BTreeSet::new();
        for i in 0..m {
            for j in 0..m {
                if rel[i][j] {
                    less.insert((carrier[i], carrier[j]));
                }
            }
        }
        Ok(OrderRelation { carrier, less })
    }

    pub fn carrier(&self) -> &[Symbol] {
        &self.carrier
    }

    /// All strict pairs `(p, q)` with `p < q`.
    pub fn pairs(&self) -> impl Iterator<Item = &(Symbol, Symbol)> {
        self.less.iter()
    }

    pub fn less(&self, p: Symbol, q: Symbol) -> bool {
        self.less.contains(&(p, q))
    }

    pub fn relation(&self, p: Symbol, q: Symbol) -> Relation {
        if p == q {
            Relation::Equal
        } else if self.less(p, q) {
            Relation::Less
        } else if self.less(q, p) {
            Relation::Greater
        } else {
            Relation::Incomparable
        }
    }

    /// Pairs that relate symbols of different classes.
    pub fn cross_pairs(&self) -> impl Iterator<Item = &(Symbol, Symbol)> {
        self.less.iter().filter(|(p, q)| p.class != q.class)
    }
}

/// How cross-class order is decided when parsing a pattern.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum OrderMode {
    /// Letters of different classes are unrelated.
    #[default]
    Incomparable,
    /// Every unprimed letter is greater than every primed letter.
    Shuffle,
    /// Cross-class pairs are supplied explicitly, `p < q`.
    Explicit(Vec<(Symbol, Symbol)>),
}

impl OrderMode {
    /// Parses an explicit order spec such as `1'<2,1''<2` or `1'<2<1''`.
    pub fn parse_explicit(spec: &str) -> Result<Self, PatternError> {
        let mut pairs = Vec::new();
        for chain in spec.split(',').map(str::trim).filter(|c| !c.is_empty()) {
            let parts: Vec<&str> = chain.split('<').map(str::trim).collect();
            if parts.len() < 2 {
                return Err(PatternError::BadOrderSpec(chain.to_string()));
            }
            let mut symbols = Vec::with_capacity(parts.len());
            for part in parts {
                let letters = parse_block(part, 0)?;
                if letters.len() != 1 {
                    return Err(PatternError::BadOrderSpec(chain.to_string()));
                }
                symbols.push(letters[0]);
            }
            pairs.extend(symbols.windows(2).map(|w| (w[0], w[1])));
        }
        Ok(OrderMode::Explicit(pairs))
    }
}

/// A partially ordered generalized pattern.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pogp {
    blocks: Vec<Vec<Symbol>>,
    order: OrderRelation,
}

/// Broad shape of a pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternKind {
    /// One comparability class: an ordinary generalized pattern.
    Plain,
    /// Hyphen-free single-class blocks in pairwise incomparable classes.
    Multi,
    /// `t0-a1-t1-...-as-ts` with every `a_i` above every letter of every `t_j`.
    Shuffle,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternClass {
    pub kind: PatternKind,
    /// Number of blocks; for shuffle patterns the number of `t_j` blocks.
    pub block_count: usize,
    /// Class sizes `r_c`, in block order for multi and shuffle patterns.
    pub class_sizes: Vec<u32>,
}

impl Pogp {
    /// Builds a pattern from blocks and cross-class pairs. Ranks in each
    /// class must form a gap-free range.
    pub fn new(
        blocks: Vec<Vec<Symbol>>,
        cross: &[(Symbol, Symbol)],
    ) -> Result<Self, PatternError> {
        if blocks.is_empty() {
            return Err(PatternError::Empty);
        }
        if let Some(i) = blocks.iter().position(Vec::is_empty) {
            return Err(PatternError::EmptyBlock(i));
        }
        if blocks.iter().flatten().any(|s| s.rank == 0) {
            return Err(PatternError::ZeroRank);
        }
        let carrier: BTreeSet<Symbol> = blocks.iter().flatten().copied().collect();
        for (class, ranks) in ranks_by_class(&carrier) {
            let lo = ranks[0];
            if ranks.iter().enumerate().any(|(i, &r)| r != lo + i as u32) {
                return Err(PatternError::NonContiguousRanks {
                    class,
                    ranks,
                    expected_start: lo,
                });
            }
        }
        let order = OrderRelation::generate(&carrier, cross)?;
        Ok(Pogp { blocks, order })
    }

    /// Builds a single-class pattern from blocks of plain ranks.
    pub fn plain(blocks: &[&[u32]]) -> Result<Self, PatternError> {
        let blocks = blocks
            .iter()
            .map(|b| b.iter().map(|&r| Symbol::new(0, r)).collect())
            .collect();
        Pogp::new(blocks, &[])
    }

    /// Parses the prime notation, e.g. `1'2'-3-1''` or `(10)2-1`.
    pub fn parse(text: &str, mode: &OrderMode) -> Result<Self, PatternError> {
        if text.is_empty() {
            return Err(PatternError::Empty);
        }
        let mut blocks = Vec::new();
        let mut offset = 0;
        for (i, part) in text.split('-').enumerate() {
            if part.is_empty() {
                return Err(PatternError::EmptyBlock(i));
            }
            blocks.push(parse_block(part, offset)?);
            offset += part.len() + 1;
        }
        let carrier: BTreeSet<Symbol> = blocks.iter().flatten().copied().collect();
        let multi_class = carrier.iter().any(|s| s.class != 0);
        for (class, ranks) in ranks_by_class(&carrier) {
            // Unprimed letters in shuffle or explicit notation may be
            // numbered above the letters they dominate, as in 1'-2-1''.
            let offset_ok = class == 0 && multi_class && *mode != OrderMode::Incomparable;
            let start = if offset_ok { ranks[0] } else { 1 };
            if ranks.iter().enumerate().any(|(i, &r)| r != start + i as u32) {
                return Err(PatternError::NonContiguousRanks {
                    class,
                    ranks,
                    expected_start: start,
                });
            }
        }
        let cross: Vec<(Symbol, Symbol)> = match mode {
            OrderMode::Incomparable => Vec::new(),
            OrderMode::Shuffle => {
                let mut pairs = Vec::new();
                for p in carrier.iter().filter(|s| s.class != 0) {
                    for q in carrier.iter().filter(|s| s.class == 0) {
                        pairs.push((*p, *q));
                    }
                }
                pairs
            }
            OrderMode::Explicit(pairs) => pairs.clone(),
        };
        Pogp::new(blocks, &cross)
    }

    pub fn blocks(&self) -> &[Vec<Symbol>] {
        &self.blocks
    }

    pub fn order(&self) -> &OrderRelation {
        &self.order
    }

    /// Total number of letters, counting repetitions.
    pub fn len(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_hyphen_free(&self) -> bool {
        self.blocks.len() == 1
    }

    pub fn require_hyphen_free(&self) -> Result<(), PatternError> {
        if self.is_hyphen_free() {
            Ok(())
        } else {
            Err(PatternError::HyphenatedPattern(self.to_string()))
        }
    }

    /// The letters in reading order, hyphens dropped.
    pub fn letters(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.blocks.iter().flatten().copied()
    }

    /// Ranks used by each class, sorted.
    pub fn classes(&self) -> BTreeMap<u32, Vec<u32>> {
        ranks_by_class(&self.order.carrier.iter().copied().collect())
    }

    /// Reverses the block list and each block.
    pub fn reversed(&self) -> Pogp {
        let blocks = self
            .blocks
            .iter()
            .rev()
            .map(|b| b.iter().rev().copied().collect())
            .collect();
        Pogp {
            blocks,
            order: self.order.clone(),
        }
    }

    /// Inverts every strict pair. Ranks are mirrored inside each class so
    /// that rank order keeps agreeing with the order relation.
    pub fn complemented(&self) -> Pogp {
        let bounds: BTreeMap<u32, (u32, u32)> = self
            .classes()
            .into_iter()
            .map(|(c, r)| (c, (r[0], r[r.len() - 1])))
            .collect();
        let mirror = |s: Symbol| {
            let (lo, hi) = bounds[&s.class];
            Symbol::new(s.class, lo + hi - s.rank)
        };
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&s| mirror(s)).collect())
            .collect();
        let mut carrier: Vec<Symbol> = self.order.carrier.iter().map(|&s| mirror(s)).collect();
        carrier.sort();
        let less = self
            .order
            .less
            .iter()
            .map(|&(p, q)| (mirror(q), mirror(p)))
            .collect();
        Pogp {
            blocks,
            order: OrderRelation { carrier, less },
        }
    }

    /// Length of the longest strict chain of distinct symbols.
    pub fn chain_height(&self) -> usize {
        let carrier = &self.order.carrier;
        let mut height: BTreeMap<Symbol, usize> = BTreeMap::new();
        // Repeated relaxation; the carrier is tiny.
        let mut changed = true;
        for s in carrier {
            height.insert(*s, 1);
        }
        while changed {
            changed = false;
            for &(p, q) in &self.order.less {
                let candidate = height[&p] + 1;
                if candidate > height[&q] {
                    height.insert(q, candidate);
                    changed = true;
                }
            }
        }
        height.values().copied().max().unwrap_or(0)
    }

    /// Block `i` as a standalone single-class pattern with ranks from 1.
    pub fn block_as_pattern(&self, i: usize) -> Result<Pogp, PatternError> {
        let block = &self.blocks[i];
        let classes: BTreeSet<u32> = block.iter().map(|s| s.class).collect();
        if classes.len() != 1 {
            return Err(PatternError::BadOrderSpec(format!(
                "block {} mixes classes",
                i
            )));
        }
        let lo = block.iter().map(|s| s.rank).min().unwrap_or(1);
        let ranks: Vec<u32> = block.iter().map(|s| s.rank - lo + 1).collect();
        Pogp::plain(&[&ranks])
    }

    pub fn classify(&self) -> PatternClass {
        let classes = self.classes();
        if classes.len() == 1 {
            let sizes = classes.values().map(|r| r.len() as u32).collect();
            return PatternClass {
                kind: PatternKind::Plain,
                block_count: self.blocks.len(),
                class_sizes: sizes,
            };
        }
        let other = PatternClass {
            kind: PatternKind::Other,
            block_count: self.blocks.len(),
            class_sizes: classes.values().map(|r| r.len() as u32).collect(),
        };
        let block_class = |b: &[Symbol]| -> Option<u32> {
            let c = b[0].class;
            b.iter().all(|s| s.class == c).then_some(c)
        };
        let Some(per_block) = self
            .blocks
            .iter()
            .map(|b| block_class(b))
            .collect::<Option<Vec<u32>>>()
        else {
            return other;
        };

        let distinct = |cs: &[u32]| cs.iter().collect::<BTreeSet<_>>().len() == cs.len();
        let size_of = |c: u32| classes[&c].len() as u32;

        if distinct(&per_block) && self.order.cross_pairs().next().is_none() {
            return PatternClass {
                kind: PatternKind::Multi,
                block_count: self.blocks.len(),
                class_sizes: per_block.iter().map(|&c| size_of(c)).collect(),
            };
        }

        // Shuffle: odd positions hold single dominating letters.
        let n = self.blocks.len();
        if n >= 3 && n % 2 == 1 {
            let taus: Vec<u32> = per_block.iter().step_by(2).copied().collect();
            let tops: Vec<Symbol> = self.blocks.iter().skip(1).step_by(2).map(|b| b[0]).collect();
            let single_tops = self.blocks.iter().skip(1).step_by(2).all(|b| b.len() == 1);
            let top_classes: BTreeSet<u32> = tops.iter().map(|s| s.class).collect();
            let tau_letters: BTreeSet<Symbol> = self.blocks.iter().step_by(2).flatten().copied().collect();
            let dominates = tops
                .iter()
                .all(|&a| tau_letters.iter().all(|&t| self.order.less(t, a)));
            let tau_cross_free = self.order.cross_pairs().all(|(p, q)| {
                !(tau_letters.contains(p) && tau_letters.contains(q))
            });
            let tops_apart = top_classes.iter().all(|c| !taus.contains(c));
            if single_tops && dominates && distinct(&taus) && tau_cross_free && tops_apart {
                return PatternClass {
                    kind: PatternKind::Shuffle,
                    block_count: taus.len(),
                    class_sizes: taus.iter().map(|&c| size_of(c)).collect(),
                };
            }
        }
        other
    }

    /// All ordinary generalized patterns whose joint avoidance is
    /// equivalent to avoiding `self`, deduplicated and sorted.
    pub fn expand(&self) -> Vec<Pogp> {
        let carrier = self.order.carrier();
        let d = carrier.len();
        let mut out = BTreeSet::new();
        let mut values = vec![0u32; d];
        self.expand_rec(0, d as u32, &mut values, &mut out);
        out.into_iter().collect()
    }

    fn expand_rec(&self, idx: usize, max: u32, values: &mut [u32], out: &mut BTreeSet<Pogp>) {
        let carrier = self.order.carrier();
        if idx == carrier.len() {
            let used: BTreeSet<u32> = values.iter().copied().collect();
            if used.iter().enumerate().any(|(i, &v)| v != i as u32 + 1) {
                return;
            }
            let index: BTreeMap<Symbol, u32> = carrier.iter().copied().zip(values.iter().copied()).collect();
            let blocks = self
                .blocks
                .iter()
                .map(|b| b.iter().map(|s| Symbol::new(0, index[s])).collect())
                .collect();
            if let Ok(p) = Pogp::new(blocks, &[]) {
                out.insert(p);
            }
            return;
        }
        let me = carrier[idx];
        for v in 1..=max {
            let ok = (0..idx).all(|j| match self.order.relation(carrier[j], me) {
                Relation::Less => values[j] < v,
                Relation::Greater => values[j] > v,
                _ => true,
            });
            if ok {
                values[idx] = v;
                self.expand_rec(idx + 1, max, values, out);
            }
        }
    }
}

impl fmt::Display for Pogp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            for s in block {
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

/// Number of ordinary patterns a two-class shuffle or multi-pattern with
/// class sizes `r1`, `r2` expands to. Arguments are swapped if `r1 < r2`.
pub fn expansion_count(r1: u32, r2: u32) -> BigUint {
    let (r1, r2) = if r1 < r2 { (r2, r1) } else { (r1, r2) };
    let binom = |n: u32, k: u32| num_integer::binomial(BigUint::from(n), BigUint::from(k));
    (0..=r2)
        .map(|i| binom(r1, i) * binom(r2, i) * binom(r1 + r2 - i, r1))
        .sum()
}

/// Number of ways to merge a chain of `r1` letters with an incomparable
/// chain of `r2` letters into one total order where letters from
/// different chains may coincide. This is the Delannoy number
/// `sum_i C(r1, i) C(r2, i) 2^i`, and it is what [`Pogp::expand`]
/// produces for two-class shuffle and multi-patterns. It agrees with
/// [`expansion_count`] when `min(r1, r2) = 1` and is smaller otherwise.
pub fn interleaving_count(r1: u32, r2: u32) -> BigUint {
    let binom = |n: u32, k: u32| num_integer::binomial(BigUint::from(n), BigUint::from(k));
    (0..=r1.min(r2))
        .map(|i| binom(r1, i) * binom(r2, i) * (BigUint::from(1u32) << i))
        .sum()
}

fn ranks_by_class(carrier: &BTreeSet<Symbol>) -> BTreeMap<u32, Vec<u32>> {
    let mut out: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for s in carrier {
        out.entry(s.class).or_default().push(s.rank);
    }
    out
}

fn parse_block(text: &str, base: usize) -> Result<Vec<Symbol>, PatternError> {
    let bytes: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let rank: u32 = match bytes[i] {
            c @ '0'..='9' => {
                i += 1;
                c.to_digit(10).unwrap()
            }
            '(' => {
                let close = bytes[i..]
                    .iter()
                    .position(|&c| c == ')')
                    .ok_or(PatternError::UnterminatedRank)?;
                let digits: String = bytes[i + 1..i + close].iter().collect();
                if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
                    return Err(PatternError::UnexpectedChar {
                        ch: '(',
                        offset: base + i,
                    });
                }
                i += close + 1;
                digits.parse().map_err(|_| PatternError::UnexpectedChar {
                    ch: '(',
                    offset: base + i,
                })?
            }
            ch => {
                return Err(PatternError::UnexpectedChar {
                    ch,
                    offset: base + i,
                })
            }
        };
        if rank == 0 {
            return Err(PatternError::ZeroRank);
        }
        let mut class = 0;
        while i < bytes.len() && bytes[i] == '\'' {
            class += 1;
            i += 1;
        }
        out.push(Symbol::new(class, rank));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shuffle(text: &str) -> Pogp {
        Pogp::parse(text, &OrderMode::Shuffle).unwrap()
    }

    fn plain(text: &str) -> Pogp {
        Pogp::parse(text, &OrderMode::Incomparable).unwrap()
    }

    fn names(ps: &[Pogp]) -> Vec<String> {
        ps.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn parses_shuffle_example() {
        let p = shuffle("1'-2-1''");
        assert_eq!(p.blocks().len(), 3);
        let classes = p.classes();
        assert_eq!(classes[&0], vec![2]);
        assert_eq!(classes[&1], vec![1]);
        assert_eq!(classes[&2], vec![1]);
        let two = Symbol::new(0, 2);
        assert!(p.order().less(Symbol::new(1, 1), two));
        assert!(p.order().less(Symbol::new(2, 1), two));
        assert_eq!(
            p.order().relation(Symbol::new(1, 1), Symbol::new(2, 1)),
            Relation::Incomparable
        );
        assert_eq!(p.to_string(), "1'-2-1''");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Pogp::parse("1''3''", &OrderMode::Incomparable),
            Err(PatternError::NonContiguousRanks { class: 2, .. })
        ));
        assert_eq!(
            Pogp::parse("1--2", &OrderMode::Incomparable),
            Err(PatternError::EmptyBlock(1))
        );
        assert_eq!(Pogp::parse("", &OrderMode::Incomparable), Err(PatternError::Empty));
        assert_eq!(Pogp::parse("10", &OrderMode::Incomparable), Err(PatternError::ZeroRank));
        assert!(Pogp::parse("2", &OrderMode::Incomparable).is_err());
        assert!(Pogp::parse("1a", &OrderMode::Incomparable).is_err());
        let cyclic = OrderMode::parse_explicit("1'<1'',1''<1'").unwrap();
        assert!(matches!(
            Pogp::parse("1'-1''", &cyclic),
            Err(PatternError::Cycle(_))
        ));
        let against_rank = OrderMode::parse_explicit("2<1").unwrap();
        assert!(matches!(
            Pogp::parse("12", &against_rank),
            Err(PatternError::Cycle(_))
        ));
    }

    #[test]
    fn multi_digit_ranks() {
        let blocks: Vec<u32> = (1..=11).collect();
        let p = Pogp::plain(&[&blocks]).unwrap();
        let text = p.to_string();
        assert_eq!(text, "123456789(10)(11)");
        assert_eq!(plain(&text), p);
    }

    #[test]
    fn explicit_order_closes_transitively() {
        let mode = OrderMode::parse_explicit("1'<1<1''").unwrap();
        let p = Pogp::parse("1'-1-1''", &mode).unwrap();
        assert!(p.order().less(Symbol::new(1, 1), Symbol::new(2, 1)));
        assert_eq!(p.chain_height(), 3);
    }

    #[test]
    fn chain_heights() {
        assert_eq!(shuffle("1'-2-1''").chain_height(), 2);
        assert_eq!(plain("123").chain_height(), 3);
        assert_eq!(plain("1-1'2'").chain_height(), 2);
        assert_eq!(plain("11").chain_height(), 1);
    }

    #[test]
    fn classification() {
        let c = shuffle("1'-2-1''").classify();
        assert_eq!(c.kind, PatternKind::Shuffle);
        assert_eq!(c.block_count, 2);
        assert_eq!(c.class_sizes, vec![1, 1]);
        assert_eq!(plain("1'-1''").classify().kind, PatternKind::Multi);
        assert_eq!(plain("12-3-1").classify().kind, PatternKind::Plain);
        let m = plain("12-1'2'3'");
        assert_eq!(m.classify().class_sizes, vec![2, 3]);
        // The same blocks without dominance are a multi-pattern.
        assert_eq!(plain("1'-1-1''").classify().kind, PatternKind::Multi);
        // A block mixing classes is neither.
        assert_eq!(plain("11'").classify().kind, PatternKind::Other);
        let c = shuffle("1'2'-3-1''").classify();
        assert_eq!((c.kind, c.class_sizes), (PatternKind::Shuffle, vec![2, 1]));
    }

    #[test]
    fn bijections_on_patterns() {
        assert_eq!(plain("12").complemented(), plain("21"));
        assert_eq!(plain("12-3-1").reversed(), plain("1-3-21"));
        let p = shuffle("1'2'-3-1''");
        assert_eq!(p.reversed().reversed(), p);
        assert_eq!(p.complemented().complemented(), p);
        // Complement of a shuffle pattern makes the middle letter the least.
        let c = p.complemented();
        assert!(c.order().less(Symbol::new(0, 3), Symbol::new(1, 1)));
        assert_eq!(c.to_string(), "2'1'-3-1''");
    }

    #[test]
    fn expands_paper_examples() {
        assert_eq!(names(&shuffle("1'-2-1''").expand()), ["1-2-1", "1-3-2", "2-3-1"]);
        let mut five = names(&shuffle("1'2'-3-1''").expand());
        five.sort();
        assert_eq!(five, ["12-3-1", "12-3-2", "12-4-3", "13-4-2", "23-4-1"]);
        // Merging two 2-chains: 6 interleavings, 6 with one tie, 1 with two.
        assert_eq!(plain("1'2'-1''2''").expand().len(), 13);
        assert_eq!(plain("12").expand(), vec![plain("12")]);
    }

    #[test]
    fn expansion_count_values() {
        assert_eq!(expansion_count(1, 1), BigUint::from(3u32));
        assert_eq!(expansion_count(2, 1), BigUint::from(5u32));
        assert_eq!(expansion_count(1, 2), BigUint::from(5u32));
        assert_eq!(expansion_count(2, 2), BigUint::from(19u32));
        // 1*1*10 + 3*2*4 + 3*1*1
        assert_eq!(expansion_count(3, 2), BigUint::from(37u32));
    }

    #[test]
    fn interleaving_count_values() {
        let small: Vec<u32> = [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)]
            .iter()
            .map(|&(a, b)| interleaving_count(a, b).try_into().unwrap())
            .collect();
        assert_eq!(small, [3, 5, 13, 25, 63]);
        assert_eq!(interleaving_count(2, 3), interleaving_count(3, 2));
    }
}
