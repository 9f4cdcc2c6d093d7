//! Acceptance suite: one line per criterion, non-zero exit if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use pogp::gf::{self, GfProvider};
use pogp::oracle::{self, Budget};
use pogp::verify::equivalence_claims;
use pogp::{avoids, expansion_count, mnd, occurrences, quasi_avoids, KnownPattern, OrderMode, Pogp, Series, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

const SEED: u64 = 0x5eed_2024;
const RANDOM_INSTANCES: usize = 1200;

fn budget() -> Budget {
    Budget::default()
}

fn word(s: &str) -> Word {
    Word::parse(s, None).unwrap()
}

fn pat(s: &str) -> Pogp {
    Pogp::parse(s, &OrderMode::Incomparable).unwrap()
}

fn shuffle(s: &str) -> Pogp {
    Pogp::parse(s, &OrderMode::Shuffle).unwrap()
}

fn ints(s: &Series) -> Result<Vec<BigInt>, String> {
    s.to_integers().map_err(|e| e.to_string())
}

fn oracle_ints(p: &Pogp, k: u32, n: usize) -> Result<Vec<BigInt>, String> {
    let t = oracle::avoider_series(p, k, n, budget()).map_err(|e| e.to_string())?;
    Ok(t.counts.into_iter().map(BigInt::from).collect())
}

fn names(ps: &[Pogp]) -> BTreeSet<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn c1_worked_examples() -> Outcome {
    ensure!(occurrences(&word("113425"), &pat("1-1'2'")).len() == 7, "113425 / 1-1'2'");
    ensure!(occurrences(&word("31421"), &shuffle("1'-2-1''")).len() == 5, "31421 / 1'-2-1''");
    let p = pat("1123");
    for (w, expected) in [("5112234", true), ("5223411", false), ("1123345", false)] {
        ensure!(quasi_avoids(&word(w), &p).unwrap() == expected, "quasi {w}");
    }
    ensure!(mnd(&word("33211"), &pat("21")).unwrap() == 1, "mnd 33211");
    ensure!(mnd(&word("13211143211"), &pat("21")).unwrap() == 3, "mnd 13211143211");
    let e = names(&shuffle("1'-2-1''").expand());
    ensure!(e == ["1-2-1", "1-3-2", "2-3-1"].map(String::from).into(), "expand 1'-2-1'': {e:?}");
    let e = names(&shuffle("1'2'-3-1''").expand());
    let want = ["12-3-1", "12-3-2", "12-4-3", "13-4-2", "23-4-1"].map(String::from).into();
    ensure!(e == want, "expand 1'2'-3-1'': {e:?}");
    Ok(())
}

fn c2_eq1_triple() -> Outcome {
    for k in 1..=5 {
        let closed = ints(&gf::gf_eq1(k, 12).map_err(|e| e.to_string())?)?;
        let shuf = ints(&gf::shuffle_same(&GfProvider::unit(), k, 12).map_err(|e| e.to_string())?)?;
        let rec = gf::eq1_recurrence(k, 12);
        ensure!(closed == shuf, "closed form vs shuffle recurrence at k={k}");
        ensure!(closed == rec, "closed form vs coefficient recurrence at k={k}");
    }
    let p = shuffle("1'-2-1''");
    for k in 1..=3 {
        let closed = ints(&gf::gf_eq1(k, 8).map_err(|e| e.to_string())?)?;
        ensure!(closed == oracle_ints(&p, k, 8)?, "closed form vs oracle at k={k}");
    }
    Ok(())
}

fn c3_registry() -> Outcome {
    for known in KnownPattern::ALL {
        for k in 1..=3 {
            let f = ints(&gf::gf_known(known, k, 8).map_err(|e| e.to_string())?)?;
            ensure!(f == oracle_ints(&known.pattern(), k, 8)?, "A_{known} at k={k}");
            if known == KnownPattern::OneThenRise {
                for n in 1..=8u32 {
                    let closed = BigInt::from(k)
                        * num_integer::binomial(BigInt::from(n + k - 2), BigInt::from(n - 1));
                    ensure!(f[n as usize] == closed, "1-1'2' closed count at k={k}, n={n}");
                }
            }
        }
    }
    Ok(())
}

fn c4_quasi_identity() -> Outcome {
    for known in KnownPattern::ALL.into_iter().filter(|p| p.pattern().is_hyphen_free()) {
        let p = known.pattern();
        for k in 1..=3 {
            let a = gf::gf_known(known, k, 8).map_err(|e| e.to_string())?;
            let q = ints(&gf::quasi_transform(&a, k).map_err(|e| e.to_string())?)?;
            let av = ints(&a)?;
            for n in 1..=8 {
                let oracle = oracle::count_quasi_avoiders(&p, k, n, budget()).map_err(|e| e.to_string())?;
                ensure!(q[n] == BigInt::from(oracle), "A*_{known} vs oracle at k={k}, n={n}");
                ensure!(q[n] == BigInt::from(k) * &av[n - 1] - &av[n], "a* identity for {known} at k={k}, n={n}");
            }
        }
    }
    Ok(())
}

fn c5_multipattern() -> Outcome {
    let rise = GfProvider::known(KnownPattern::Rise);
    let p = pat("12-1'2'");
    for k in 1..=3 {
        let want = oracle_ints(&p, k, 8)?;
        let m = ints(&gf::multipattern(&[rise.clone(), rise.clone()], k, 8).map_err(|e| e.to_string())?)?;
        let d = ints(&gf::descent_multipattern(k, 2, 8).map_err(|e| e.to_string())?)?;
        let pd = ints(&gf::prefix_decomposition(&rise, &rise, k, 8).map_err(|e| e.to_string())?)?;
        ensure!(m == want, "multipattern vs oracle at k={k}");
        ensure!(d == want, "descent closed form vs oracle at k={k}");
        ensure!(pd == want, "prefix decomposition vs oracle at k={k}");
    }
    Ok(())
}

fn c6_shuffle() -> Outcome {
    let blocks: [(&str, GfProvider); 3] = [
        ("1", GfProvider::unit()),
        ("12", GfProvider::known(KnownPattern::Rise)),
        ("21", GfProvider::known(KnownPattern::Descent)),
    ];
    let primed = |text: &str, primes: &str| text.chars().map(|c| format!("{c}{primes}")).collect::<String>();
    for (t, tau) in &blocks {
        for (v, nu) in &blocks {
            let left = primed(t, "'");
            let right = primed(v, "''");
            let top = left.len().max(right.len()) / 2 + 1;
            let p = shuffle(&format!("{left}-{top}-{right}"));
            for k in 1..=3 {
                let f = ints(&gf::shuffle_general(tau, nu, k, 7).map_err(|e| e.to_string())?)?;
                ensure!(f == oracle_ints(&p, k, 7)?, "shuffle {p} at k={k}");
                let g = ints(&gf::shuffle_general(nu, tau, k, 7).map_err(|e| e.to_string())?)?;
                ensure!(f == g, "shuffle symmetry for ({t}, {v}) at k={k}");
            }
        }
    }
    Ok(())
}

fn c7_mnd() -> Outcome {
    for known in [
        KnownPattern::Rise,
        KnownPattern::Descent,
        KnownPattern::P122,
        KnownPattern::P212,
        KnownPattern::P123,
    ] {
        let p = known.pattern();
        for k in 1..=3 {
            let a = gf::gf_known(known, k, 7).map_err(|e| e.to_string())?;
            let y = gf::mnd_gf(&a, k, 7).map_err(|e| e.to_string())?;
            let slices: Vec<Vec<BigInt>> = (0..=7).map(|s| ints(&y.slice(s))).collect::<Result<_, _>>()?;
            for n in 0..=7 {
                let h = oracle::mnd_distribution(&p, k, n, budget()).map_err(|e| e.to_string())?;
                for (s, slice) in slices.iter().enumerate() {
                    ensure!(slice[n] == BigInt::from(h.get(s)), "{known} at k={k}, n={n}, s={s}");
                }
            }
            let total = ints(&y.at_y_one())?;
            for (n, t) in total.iter().enumerate() {
                ensure!(*t == BigInt::from(k).pow(n as u32), "y=1 collapse for {known} at k={k}, n={n}");
            }
        }
    }
    for known in [KnownPattern::Rise, KnownPattern::P122, KnownPattern::P212, KnownPattern::P123] {
        for k in 1..=3 {
            let a = gf::gf_known(known, k, 10).map_err(|e| e.to_string())?;
            let y = gf::mnd_gf(&a, k, 10).map_err(|e| e.to_string())?;
            let shown = gf::mnd_displayed_form(known, k, 10, 10).map_err(|e| e.to_string())?;
            ensure!(y == shown, "displayed form of the {known} distribution at k={k}");
        }
    }
    Ok(())
}

fn c8_expansion_count() -> Outcome {
    let pinned = [((1, 1), 3u32), ((2, 1), 5), ((2, 2), 19)];
    for ((r1, r2), v) in pinned {
        ensure!(expansion_count(r1, r2) == BigUint::from(v), "expansion_count({r1},{r2}) != {v}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut failures = Vec::new();
    for (r1, r2) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
        let formula = expansion_count(r1, r2);
        for _ in 0..10 {
            let with_top = rng.gen_bool(0.5);
            let p = common::random_two_class(&mut rng, r1, r2, with_top);
            let got = p.expand().len();
            if BigUint::from(got) != formula {
                failures.push(format!("({r1},{r2}) {p}: enumerated {got}, formula {formula}"));
                break;
            }
        }
    }
    ensure!(failures.is_empty(), "{}", failures.join("; "));
    Ok(())
}

fn c9_equivalences() -> Outcome {
    for (l, r, mode) in equivalence_claims() {
        let p = Pogp::parse(l, &mode).map_err(|e| e.to_string())?;
        let q = Pogp::parse(r, &mode).map_err(|e| e.to_string())?;
        let report = oracle::equiv_check(&p, &q, 3, 6, budget()).map_err(|e| e.to_string())?;
        ensure!(report.is_equivalent(), "{l} vs {r}: {:?}", report.verdict());
    }
    let rev = |s: &str| pat(s).reversed();
    let p = pat("122-1'2'");
    let report = oracle::equiv_check(&p, &rev("122-1'2'"), 3, 6, budget()).map_err(|e| e.to_string())?;
    ensure!(report.is_equivalent(), "reversal of 122-1'2'");
    Ok(())
}

fn c10_invariants() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..RANDOM_INSTANCES {
        let (p, _) = common::random_pattern(&mut rng, 4);
        let k = rng.gen_range(1..=4);
        let n = rng.gen_range(0..=8);
        let w = common::random_word(&mut rng, k, n);
        let base = avoids(&w, &p);
        ensure!(base == avoids(&w.reversed(), &p.reversed()), "#{i}: reversal, {w} / {p}");
        ensure!(base == avoids(&w.complemented(), &p.complemented()), "#{i}: complement, {w} / {p}");
        if k <= 3 && n <= 7 {
            let all = p.expand().iter().all(|q| avoids(&w, q));
            ensure!(base == all, "#{i}: expansion, {w} / {p}");
        }
        let small_k = k.min(3);
        let lo = oracle_ints(&p, small_k, 5)?;
        let hi = oracle_ints(&p, small_k + 1, 5)?;
        for m in 0..=5 {
            ensure!(lo[m] <= hi[m], "#{i}: k-monotonicity for {p}");
            if m > 0 {
                ensure!(lo[m] <= &lo[m - 1] * small_k, "#{i}: prefix bound for {p}");
            }
            if (small_k as usize) < p.chain_height() {
                ensure!(lo[m] == BigInt::from(small_k).pow(m as u32), "#{i}: chain height for {p}");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("worked examples", c1_worked_examples, Duration::from_secs(1)),
        ("1'-2-1'' closed form, recurrences, oracle", c2_eq1_triple, Duration::from_secs(10)),
        ("registry vs oracle", c3_registry, Duration::from_secs(60)),
        ("quasi-avoidance identity", c4_quasi_identity, Duration::from_secs(60)),
        ("multi-pattern formulas", c5_multipattern, Duration::from_secs(60)),
        ("shuffle formulas and symmetry", c6_shuffle, Duration::from_secs(120)),
        ("non-overlapping occurrence distribution", c7_mnd, Duration::from_secs(120)),
        ("expansion count formula", c8_expansion_count, Duration::from_secs(10)),
        ("asserted equivalences", c9_equivalences, Duration::from_secs(120)),
        ("random invariants", c10_invariants, Duration::from_secs(120)),
    ];
    let mut failed = 0;
    for (i, (name, check, bound)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let verdict = match result {
            Ok(()) if elapsed <= bound => "PASS".to_string(),
            Ok(()) => format!("FAIL (over the {:.0} s bound)", bound.as_secs_f64()),
            Err(e) => format!("FAIL ({e})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("criterion {:>2} {name}: {verdict} [{:.2} s]", i + 1, elapsed.as_secs_f64());
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
