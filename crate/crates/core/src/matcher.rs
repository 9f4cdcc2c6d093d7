//! Occurrence search for [`Pogp`]s in words.
//!
//! An occurrence picks strictly increasing positions, one per pattern
//! letter. Letters inside a block map to consecutive positions; a hyphen
//! allows (but does not require) a gap. Equal symbols force equal word
//! letters, `p < q` forces a strict rise, and incomparable symbols are free.

use crate::error::PatternError;
use crate::pattern::{Pogp, Relation};
use crate::word::Word;

/// A pattern flattened into position-indexed constraints.
#[derive(Clone, Debug)]
pub(crate) struct Matcher {
    block_lens: Vec<usize>,
    /// `tail[b]` is the number of letters in blocks `b..`.
    tail: Vec<usize>,
    /// `rel[i][j]` for pattern positions `j < i`.
    rel: Vec<Vec<Relation>>,
}

impl Matcher {
    pub(crate) fn new(p: &Pogp) -> Self {
        let letters: Vec<_> = p.letters().collect();
        let rel = (0..letters.len())
            .map(|i| {
                (0..i)
                    .map(|j| p.order().relation(letters[j], letters[i]))
                    .collect()
            })
            .collect();
        let block_lens: Vec<usize> = p.blocks().iter().map(Vec::len).collect();
        let mut tail = vec![0; block_lens.len() + 1];
        for b in (0..block_lens.len()).rev() {
            tail[b] = tail[b + 1] + block_lens[b];
        }
        Matcher {
            block_lens,
            tail,
            rel,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.tail[0]
    }

    /// Visits every occurrence in lexicographic order until `visit`
    /// returns `false`. With `last_start` set, only occurrences whose final
    /// block starts there are visited. Returns `false` if stopped early.
    pub(crate) fn search<F>(&self, word: &[u32], last_start: Option<usize>, visit: &mut F) -> bool
    where
        F: FnMut(&[usize]) -> bool,
    {
        let mut chosen = Vec::with_capacity(self.len());
        self.extend(word, 0, 0, last_start, &mut chosen, visit)
    }

    fn extend<F>(
        &self,
        word: &[u32],
        block: usize,
        min_start: usize,
        last_start: Option<usize>,
        chosen: &mut Vec<usize>,
        visit: &mut F,
    ) -> bool
    where
        F: FnMut(&[usize]) -> bool,
    {
        if block == self.block_lens.len() {
            return visit(chosen);
        }
        let n = word.len();
        if n < min_start + self.tail[block] {
            return true;
        }
        let len = self.block_lens[block];
        let last_len = self.block_lens[self.block_lens.len() - 1];
        let is_last = block + 1 == self.block_lens.len();
        // Inclusive range of admissible starts for this block.
        let (lo, hi) = match last_start {
            Some(s) if is_last => (s.max(min_start), s),
            Some(s) => match s.checked_sub(self.tail[block] - last_len) {
                Some(hi) => (min_start, hi),
                None => return true,
            },
            None => (min_start, n - self.tail[block]),
        };
        if is_last && last_start.is_some_and(|s| s < min_start || s + len > n) {
            return true;
        }
        for start in lo..=hi {
            let base = chosen.len();
            let mut ok = true;
            for pos in start..start + len {
                if !self.consistent(word, chosen, pos) {
                    ok = false;
                    break;
                }
                chosen.push(pos);
            }
            if ok && !self.extend(word, block + 1, start + len, last_start, chosen, visit) {
                chosen.truncate(base);
                return false;
            }
            chosen.truncate(base);
        }
        true
    }

    fn consistent(&self, word: &[u32], chosen: &[usize], pos: usize) -> bool {
        let i = chosen.len();
        let here = word[pos];
        chosen.iter().enumerate().all(|(j, &q)| {
            let there = word[q];
            match self.rel[i][j] {
                Relation::Equal => there == here,
                Relation::Less => there < here,
                Relation::Greater => there > here,
                Relation::Incomparable => true,
            }
        })
    }

    pub(crate) fn contains(&self, word: &[u32]) -> bool {
        !self.search(word, None, &mut |_| false)
    }

    /// Whether some occurrence uses the final position of `word`.
    pub(crate) fn contains_ending_at_last(&self, word: &[u32]) -> bool {
        let last = *self.block_lens.last().unwrap();
        if word.len() < self.len() {
            return false;
        }
        !self.search(word, Some(word.len() - last), &mut |_| false)
    }

    pub(crate) fn occurrences(&self, word: &[u32]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.search(word, None, &mut |occ| {
            out.push(occ.to_vec());
            true
        });
        out
    }

    /// Exactly one occurrence, sitting on the rightmost positions.
    pub(crate) fn quasi_avoided_by(&self, word: &[u32]) -> bool {
        let mut seen = 0usize;
        let mut terminal = false;
        let m = self.len();
        self.search(word, None, &mut |occ| {
            seen += 1;
            terminal = occ[0] + m == word.len();
            seen < 2
        });
        seen == 1 && terminal
    }

    /// Greedy maximum number of pairwise disjoint occurrences of a
    /// hyphen-free pattern.
    pub(crate) fn max_disjoint(&self, word: &[u32]) -> usize {
        let m = self.len();
        let mut count = 0;
        let mut next_free = 0;
        let mut start = 0;
        while start + m <= word.len() {
            if start >= next_free && !self.search(word, Some(start), &mut |_| false) {
                count += 1;
                next_free = start + m;
                start = next_free;
            } else {
                start += 1;
            }
        }
        count
    }
}

/// All occurrences of `p` in `w`, each a sorted list of positions
/// (0-based); the list is in lexicographic order.
pub fn occurrences(w: &Word, p: &Pogp) -> Vec<Vec<usize>> {
    Matcher::new(p).occurrences(w.letters())
}

pub fn contains(w: &Word, p: &Pogp) -> bool {
    Matcher::new(p).contains(w.letters())
}

pub fn avoids(w: &Word, p: &Pogp) -> bool {
    !contains(w, p)
}

/// Whether `w` has exactly one occurrence of the hyphen-free pattern `p`,
/// located on the `|p|` rightmost letters.
pub fn quasi_avoids(w: &Word, p: &Pogp) -> Result<bool, PatternError> {
    p.require_hyphen_free()?;
    Ok(Matcher::new(p).quasi_avoided_by(w.letters()))
}

/// Maximum number of non-overlapping occurrences of the hyphen-free
/// pattern `p`. Occurrences overlap when they share a position.
pub fn mnd(w: &Word, p: &Pogp) -> Result<usize, PatternError> {
    p.require_hyphen_free()?;
    Ok(Matcher::new(p).max_disjoint(w.letters()))
}
