//! Brute-force ground truth by exhaustive enumeration of `[k]^n`.
//!
//! Every count here comes from walking words one letter at a time. Each
//! visited prefix costs one word-step against a [`Budget`]; running out is
//! an error, never a truncated answer.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::error::OracleError;
use crate::matcher::Matcher;
use crate::pattern::Pogp;

/// Default enumeration cap in word-steps.
pub const DEFAULT_ENUM_CAP: u64 = 100_000_000;

/// Upper bound on word-steps for a single oracle call.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub cap: u64,
}

impl Budget {
    pub const fn new(cap: u64) -> Self {
        Budget { cap }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_ENUM_CAP)
    }
}

/// Avoider counts `a(n; k)` for `n = 0..=N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub pattern: Pogp,
    pub k: u32,
    pub counts: Vec<BigUint>,
}

/// Histogram of the maximum number of non-overlapping occurrences over
/// all words in `[k]^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MndTable {
    pub pattern: Pogp,
    pub k: u32,
    pub n: usize,
    pub histogram: BTreeMap<usize, BigUint>,
}

impl MndTable {
    pub fn get(&self, s: usize) -> BigUint {
        self.histogram.get(&s).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.histogram.values().sum()
    }
}

struct Steps {
    used: u64,
    cap: u64,
    k: u32,
    n: usize,
}

impl Steps {
    fn new(budget: Budget, k: u32, n: usize) -> Self {
        Steps {
            used: 0,
            cap: budget.cap,
            k,
            n,
        }
    }

    fn take(&mut self) -> Result<(), OracleError> {
        self.used += 1;
        if self.used > self.cap {
            Err(OracleError::BudgetExceeded {
                cap: self.cap,
                k: self.k,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }
}

/// Number of words in `[k]^n` avoiding `p`.
pub fn count_avoiders(p: &Pogp, k: u32, n: usize, budget: Budget) -> Result<BigUint, OracleError> {
    Ok(avoider_series(p, k, n, budget)?.counts.swap_remove(n))
}

/// Avoider counts for every length up to `max_n`, from one pruned walk.
///
/// A prefix that already contains `p` cannot extend to an avoider, so the
/// walk only descends through avoiding prefixes. Appending a letter can
/// only create occurrences that end on it, which is all that is checked.
pub fn avoider_series(p: &Pogp, k: u32, max_n: usize, budget: Budget) -> Result<CountTable, OracleError> {
    let matcher = Matcher::new(p);
    let mut counts = vec![0u64; max_n + 1];
    let mut steps = Steps::new(budget, k, max_n);
    let mut word = Vec::with_capacity(max_n);
    walk_avoiders(&matcher, k, max_n, &mut word, &mut counts, &mut steps)?;
    Ok(CountTable {
        pattern: p.clone(),
        k,
        counts: counts.into_iter().map(BigUint::from).collect(),
    })
}

fn walk_avoiders(
    matcher: &Matcher,
    k: u32,
    max_n: usize,
    word: &mut Vec<u32>,
    counts: &mut [u64],
    steps: &mut Steps,
) -> Result<(), OracleError> {
    steps.take()?;
    counts[word.len()] += 1;
    if word.len() == max_n {
        return Ok(());
    }
    for letter in 1..=k {
        word.push(letter);
        if !matcher.contains_ending_at_last(word) {
            walk_avoiders(matcher, k, max_n, word, counts, steps)?;
        }
        word.pop();
    }
    Ok(())
}

/// Calls `visit` on every word of `[k]^n`, charging one step per word.
fn for_each_word<F>(k: u32, n: usize, budget: Budget, mut visit: F) -> Result<(), OracleError>
where
    F: FnMut(&[u32]),
{
    let total = (k as u64).checked_pow(n as u32);
    if total.is_none_or(|t| t > budget.cap) {
        return Err(OracleError::BudgetExceeded { cap: budget.cap, k, n });
    }
    if k == 0 {
        if n == 0 {
            visit(&[]);
        }
        return Ok(());
    }
    let mut word = vec![1u32; n];
    loop {
        visit(&word);
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if word[i] < k {
                word[i] += 1;
                break;
            }
            word[i] = 1;
        }
    }
}

/// Number of words in `[k]^n` that quasi-avoid the hyphen-free pattern `p`.
pub fn count_quasi_avoiders(p: &Pogp, k: u32, n: usize, budget: Budget) -> Result<BigUint, OracleError> {
    p.require_hyphen_free()?;
    let matcher = Matcher::new(p);
    let mut count = 0u64;
    for_each_word(k, n, budget, |w| {
        if matcher.quasi_avoided_by(w) {
            count += 1;
        }
    })?;
    Ok(BigUint::from(count))
}

/// Exact distribution of the non-overlapping occurrence count over `[k]^n`.
pub fn mnd_distribution(p: &Pogp, k: u32, n: usize, budget: Budget) -> Result<MndTable, OracleError> {
    p.require_hyphen_free()?;
    let matcher = Matcher::new(p);
    let mut raw: BTreeMap<usize, u64> = BTreeMap::new();
    for_each_word(k, n, budget, |w| {
        *raw.entry(matcher.max_disjoint(w)).or_default() += 1;
    })?;
    Ok(MndTable {
        pattern: p.clone(),
        k,
        n,
        histogram: raw.into_iter().map(|(s, c)| (s, BigUint::from(c))).collect(),
    })
}

/// First length at which two patterns' avoider counts differ for one `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub k: u32,
    pub n: usize,
    pub left: BigUint,
    pub right: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    EquivalentWithinBudget,
    Counterexample(Mismatch),
}

/// Per-alphabet comparison results of [`equiv_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivReport {
    pub max_k: u32,
    pub max_n: usize,
    /// One entry per `k = 1..=max_k`; `None` means the counts agree.
    pub per_k: Vec<(u32, Option<Mismatch>)>,
}

impl EquivReport {
    /// Equivalent only if the counts agree for every checked `k`.
    pub fn verdict(&self) -> Verdict {
        match self.per_k.iter().find_map(|(_, m)| m.clone()) {
            Some(m) => Verdict::Counterexample(m),
            None => Verdict::EquivalentWithinBudget,
        }
    }

    pub fn is_equivalent(&self) -> bool {
        self.verdict() == Verdict::EquivalentWithinBudget
    }
}

/// Compares avoider counts of `p` and `q` for `1 <= k <= max_k` and
/// `0 <= n <= max_n`.
pub fn equiv_check(p: &Pogp, q: &Pogp, max_k: u32, max_n: usize, budget: Budget) -> Result<EquivReport, OracleError> {
    let mut per_k = Vec::new();
    for k in 1..=max_k {
        let left = avoider_series(p, k, max_n, budget)?.counts;
        let right = avoider_series(q, k, max_n, budget)?.counts;
        let mismatch = left
            .iter()
            .zip(&right)
            .position(|(a, b)| a != b)
            .map(|n| Mismatch {
                k,
                n,
                left: left[n].clone(),
                right: right[n].clone(),
            });
        per_k.push((k, mismatch));
    }
    Ok(EquivReport { max_k, max_n, per_k })
}
