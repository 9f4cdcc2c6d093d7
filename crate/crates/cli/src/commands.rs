use std::io::Write;

use num_bigint::BigUint;
use pogp::gf::{self, GfProvider};
use pogp::oracle::{self, Budget, Verdict, DEFAULT_ENUM_CAP};
use pogp::verify::{self, Group, Registry, VerifyConfig};
use pogp::{GfError, KnownPattern, OracleError, OrderMode, PatternError, Pogp, WordError, Word};

use crate::report::Report;
use crate::{Cli, Command, Engine, OrderArg, PatternArgs};

pub const CAP_ENV: &str = "POGP_ENUM_CAP";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Budget(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Budget(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Budget(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<PatternError> for CliError {
    fn from(e: PatternError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<WordError> for CliError {
    fn from(e: WordError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            OracleError::Pattern(p) => p.into(),
        }
    }
}

impl From<GfError> for CliError {
    fn from(e: GfError) -> Self {
        match e {
            GfError::Oracle(o) => o.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn budget(cli: &Cli) -> Result<Budget, CliError> {
    if let Some(cap) = cli.cap {
        return Ok(Budget::new(cap));
    }
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Budget::new)
            .map_err(|_| CliError::Usage(format!("{CAP_ENV} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(Budget::new(DEFAULT_ENUM_CAP)),
    }
}

fn order_mode(args: &PatternArgs) -> Result<OrderMode, CliError> {
    match (args.order, &args.order_spec) {
        (OrderArg::Explicit, Some(spec)) => Ok(OrderMode::parse_explicit(spec)?),
        (OrderArg::Explicit, None) => Err(CliError::Usage("--order explicit needs --order-spec".into())),
        (_, Some(_)) => Err(CliError::Usage("--order-spec requires --order explicit".into())),
        (OrderArg::Incomparable, None) => Ok(OrderMode::Incomparable),
        (OrderArg::Shuffle, None) => Ok(OrderMode::Shuffle),
    }
}

fn parse_pattern(args: &PatternArgs) -> Result<Pogp, CliError> {
    Ok(Pogp::parse(&args.pattern, &order_mode(args)?)?)
}

/// Runs the parsed command and returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    let budget = budget(cli)?;
    let (report, code) = match &cli.command {
        Command::Count { pattern, k, n, quasi } => {
            let p = parse_pattern(pattern)?;
            let count = if *quasi {
                oracle::count_quasi_avoiders(&p, *k, *n, budget)?
            } else {
                oracle::count_avoiders(&p, *k, *n, budget)?
            };
            let mut r = Report::new("count", &["count"])
                .meta("pattern", &p)
                .meta("k", k)
                .meta("n", n)
                .meta("kind", if *quasi { "quasi-avoiders" } else { "avoiders" });
            r.row([count]);
            r.scalar = true;
            (r, 0)
        }
        Command::Series { pattern, k, max_n, engine } => {
            let p = parse_pattern(pattern)?;
            let (counts, source) = series(&p, *k, *max_n, *engine, budget)?;
            let mut r = Report::new("series", &["n", "count"])
                .meta("pattern", &p)
                .meta("k", k)
                .meta("engine", source);
            for (n, c) in counts.iter().enumerate() {
                r.row([n.to_string(), c.to_string()]);
            }
            (r, 0)
        }
        Command::Expand { pattern } => {
            let p = parse_pattern(pattern)?;
            let expanded = p.expand();
            let mut r = Report::new("expand", &["pattern"])
                .meta("source", &p)
                .meta("count", expanded.len());
            for q in &expanded {
                r.row([q]);
            }
            (r, 0)
        }
        Command::Equiv { pattern, other, max_k, max_n } => {
            let p = parse_pattern(pattern)?;
            let q = Pogp::parse(other, &order_mode(pattern)?)?;
            let report = oracle::equiv_check(&p, &q, *max_k, *max_n, budget)?;
            let mut r = Report::new("equiv", &["k", "status", "n", "left", "right"])
                .meta("left_pattern", &p)
                .meta("right_pattern", &q)
                .meta("max_n", max_n);
            for (k, m) in &report.per_k {
                match m {
                    None => r.row([k.to_string(), "agree".into(), String::new(), String::new(), String::new()]),
                    Some(m) => r.row([
                        k.to_string(),
                        "differ".into(),
                        m.n.to_string(),
                        m.left.to_string(),
                        m.right.to_string(),
                    ]),
                }
            }
            let verdict = report.verdict();
            let r = match &verdict {
                Verdict::EquivalentWithinBudget => r.meta("verdict", "equivalent within budget"),
                Verdict::Counterexample(m) => {
                    eprintln!(
                        "counterexample: k={}, n={}: {} avoiders of {p}, {} avoiders of {q}",
                        m.k, m.n, m.left, m.right
                    );
                    r.meta("verdict", "counterexample")
                }
            };
            (r, if report.is_equivalent() { 0 } else { 2 })
        }
        Command::Mnd { pattern, k, n, gf, y_degree, word } => {
            let p = parse_pattern(pattern)?;
            if let Some(w) = word {
                let w = Word::parse(w, None)?;
                let value = pogp::mnd(&w, &p)?;
                let mut r = Report::new("mnd", &["mnd"]).meta("pattern", &p).meta("word", &w);
                r.row([value]);
                r.scalar = true;
                (r, 0)
            } else {
                let (k, n) = (k.unwrap_or_default(), n.unwrap_or_default());
                let rows = if *gf {
                    mnd_by_gf(&p, k, n, *y_degree)?
                } else {
                    oracle::mnd_distribution(&p, k, n, budget)?.histogram.into_iter().collect()
                };
                let mut r = Report::new("mnd", &["s", "count"])
                    .meta("pattern", &p)
                    .meta("k", k)
                    .meta("n", n)
                    .meta("engine", if *gf { "gf" } else { "oracle" });
                for (s, c) in rows {
                    r.row([s.to_string(), c.to_string()]);
                }
                (r, 0)
            }
        }
        Command::Match { pattern, word, k } => {
            let p = parse_pattern(pattern)?;
            let w = Word::parse(word, *k)?;
            let occ = pogp::occurrences(&w, &p);
            let mut r = Report::new("match", &["positions"])
                .meta("pattern", &p)
                .meta("word", &w)
                .meta("count", occ.len());
            for o in occ {
                r.row([o.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(" ")]);
            }
            (r, 0)
        }
        Command::Verify { max_k, max_n, only, inject_fault } => {
            let only = only
                .as_deref()
                .map(|g| g.parse::<Group>().map_err(CliError::Usage))
                .transpose()?;
            let mut registry = Registry::standard();
            if let Some(name) = inject_fault {
                let known: KnownPattern = name.parse()?;
                registry = registry.with_override(known, verify::corrupted(known));
            }
            let cfg = VerifyConfig { max_k: *max_k, max_n: *max_n, only, budget };
            let outcomes = verify::run(&cfg, &registry)?;
            let mut r = Report::new("verify", &["group", "check", "status", "detail"])
                .meta("max_k", max_k)
                .meta("max_n", max_n);
            for o in &outcomes {
                let detail = o.failure.as_ref().map(|f| f.to_string()).unwrap_or_default();
                r.row([o.group.name(), &o.name, if o.passed() { "pass" } else { "FAIL" }, &detail]);
            }
            let failed = outcomes.iter().find_map(|o| o.failure.as_ref());
            if let Some(f) = failed {
                eprintln!("verification failed: {f}");
            }
            let passed = outcomes.iter().filter(|o| o.passed()).count();
            let r = r.meta("passed", passed).meta("total", outcomes.len());
            (r, if failed.is_some() { 2 } else { 0 })
        }
    };
    report.render(cli.format, out)?;
    Ok(code)
}

fn series(p: &Pogp, k: u32, order: usize, engine: Engine, budget: Budget) -> Result<(Vec<BigUint>, String), CliError> {
    let provider = match engine {
        Engine::Oracle => None,
        Engine::Gf => {
            let found = gf::provider_for(p);
            if found.is_none() {
                eprintln!("notice: no formula covers {p}; using the oracle");
            }
            found
        }
    };
    match provider {
        Some(g) => {
            let s = g.series(k, order)?;
            let counts = s.to_counts().map_err(GfError::from)?;
            Ok((counts, format!("gf {}", g.name())))
        }
        None => Ok((oracle::avoider_series(p, k, order, budget)?.counts, "oracle".into())),
    }
}

fn mnd_by_gf(p: &Pogp, k: u32, n: usize, y_degree: usize) -> Result<Vec<(usize, BigUint)>, CliError> {
    let provider: GfProvider = gf::provider_for(p)
        .ok_or_else(|| CliError::Usage(format!("no formula covers {p}; drop --gf to enumerate")))?;
    let a = provider.series(k, n)?;
    let y = gf::mnd_gf(&a, k, y_degree)?;
    let mut rows = Vec::new();
    for s in 0..=y_degree.min(n) {
        let c = y.slice(s).to_counts().map_err(GfError::from)?;
        if c[n] != BigUint::default() {
            rows.push((s, c[n].clone()));
        }
    }
    Ok(rows)
}
