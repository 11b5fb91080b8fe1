//! Command-line front end: every counting, classification, and
//! identity-verification operation, with plain or JSON output.
//!
//! Exit codes: 0 on success (for `verify`, only when the identity holds;
//! a well-formed but non-holding identity exits 1), 2 on argument or
//! domain errors, 3 when a size or sieve limit is exceeded.

use std::collections::{HashMap, HashSet};
use std::env;
use std::fs;
use std::process::ExitCode;

use coprime_counts::arith::MobiusTable;
use coprime_counts::classify::{
    alpha_status, alpha_status_to_n, count_coprime_free_subsets_limited,
    count_pairwise_coprime_subsets_limited, is_coprime_free, is_coprime_free_with_perm,
    is_pairwise_coprime, is_pairwise_coprime_with_perm, PairwiseMethod,
};
use coprime_counts::counting::{
    coprime_element_count, f_alpha, f_incremental, f_interval, f_set, phi_alpha, phi_interval,
    phi_set,
};
use coprime_counts::identities::{mertens_bound, mertens_pair, mertens_triple, scaled_mertens};
use coprime_counts::oracle::{
    brute_count_limited, PredicateKind, SubsetPredicate, DEFAULT_ENUM_LIMIT,
};
use coprime_counts::{Error, IdentityReport, IntSet};

const USAGE: &str = "\
coprime-counts: exact subset counts and Mertens identities over integer sets

Usage: coprime-counts [--json] [--sieve-limit L] <command> [options]

Commands:
  mobius <N>                                   Mobius mu(N)
  mertens <N>                                  Mertens M(N)
  phi --set S --n N [--alpha A]                subsets relatively prime to n
  f --set S [--alpha A] [--incremental [--perm-seed K]]
                                               relatively prime subsets
  interval --l L --m M [--n N] [--alpha A]     interval fast paths
  coprime-count --set S --n N                  elements of S coprime to n
  classify --set S --alpha A [--n N]           All | None | Mixed
  pairwise --set S [--free] [--method sqrt|incremental|direct]
                                               pairwise-coprime (or -free) test
  pairwise-count --set S [--free]              count such subsets
  verify --identity pair --m M --n N           Mertens pair identity
  verify --identity triple --l L --m M --n N   Mertens triple identity
  verify --identity bound --set S              Mertens lower bound
  verify --identity scaled --set S --b B       scaled-set identity (a = sup S)
  oracle --set S --pred relprime|relprime-to-n|pairwise|coprime-free
         [--n N] [--alpha A]                   brute-force subset count

Sets: inline comma-separated (\"2,3,4\") or @FILE with one integer per
line (blank lines and # comments ignored). COPRIME_COUNTS_MAX_ENUM
overrides the subset-enumeration size cap (default 20).
";

struct Failure {
    message: String,
    code: u8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure {
            code: if e.is_limit() { 3 } else { 2 },
            message: e.to_string(),
        }
    }
}

fn usage_error(message: impl Into<String>) -> Failure {
    Failure {
        message: message.into(),
        code: 2,
    }
}

type CliResult<T> = Result<T, Failure>;

const VALUE_FLAGS: &[&str] = &[
    "set",
    "n",
    "alpha",
    "l",
    "m",
    "b",
    "perm-seed",
    "method",
    "identity",
    "pred",
    "sieve-limit",
];
const SWITCH_FLAGS: &[&str] = &["json", "free", "incremental", "help"];
const GLOBAL_FLAGS: &[&str] = &["json", "sieve-limit", "help"];

struct Args {
    positionals: Vec<String>,
    values: HashMap<&'static str, String>,
    switches: HashSet<&'static str>,
}

impl Args {
    fn parse(raw: &[String]) -> CliResult<Args> {
        let mut positionals = Vec::new();
        let mut values = HashMap::new();
        let mut switches = HashSet::new();
        let mut i = 0;
        while i < raw.len() {
            let token = &raw[i];
            if token == "-h" {
                switches.insert("help");
            } else if let Some(body) = token.strip_prefix("--") {
                let (name, inline) = match body.split_once('=') {
                    Some((n, v)) => (n, Some(v.to_string())),
                    None => (body, None),
                };
                if let Some(&canon) = SWITCH_FLAGS.iter().find(|&&f| f == name) {
                    if inline.is_some() {
                        return Err(usage_error(format!("--{name} takes no value")));
                    }
                    switches.insert(canon);
                } else if let Some(&canon) = VALUE_FLAGS.iter().find(|&&f| f == name) {
                    let value = match inline {
                        Some(v) => v,
                        None => {
                            i += 1;
                            raw.get(i)
                                .cloned()
                                .ok_or_else(|| usage_error(format!("--{name} requires a value")))?
                        }
                    };
                    if values.insert(canon, value).is_some() {
                        return Err(usage_error(format!("--{name} given more than once")));
                    }
                } else {
                    return Err(usage_error(format!("unknown flag --{name}")));
                }
            } else {
                positionals.push(token.clone());
            }
            i += 1;
        }
        Ok(Args {
            positionals,
            values,
            switches,
        })
    }

    fn has(&self, switch: &str) -> bool {
        self.switches.contains(switch)
    }

    fn value(&self, name: &str) -> Option<&str> {
        self.values.get(name).map(String::as_str)
    }

    fn u64_opt(&self, name: &str) -> CliResult<Option<u64>> {
        match self.value(name) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| usage_error(format!("--{name} expects a nonnegative integer, got {v:?}"))),
        }
    }

    fn u64_required(&self, name: &str) -> CliResult<u64> {
        self.u64_opt(name)?
            .ok_or_else(|| usage_error(format!("missing required --{name}")))
    }

    fn alpha_opt(&self) -> CliResult<Option<usize>> {
        Ok(self.u64_opt("alpha")?.map(|a| a as usize))
    }

    /// Rejects flags that this command does not understand.
    fn expect_only(&self, command: &str, allowed: &[&str]) -> CliResult<()> {
        for name in self.values.keys().copied().chain(self.switches.iter().copied()) {
            if !allowed.contains(&name) && !GLOBAL_FLAGS.contains(&name) {
                return Err(usage_error(format!("--{name} is not valid for `{command}`")));
            }
        }
        Ok(())
    }
}

/// `--set` accepts an inline comma-separated list or `@path` to the
/// one-integer-per-line file format.
fn load_set(args: &Args) -> CliResult<IntSet> {
    let spec = args
        .value("set")
        .ok_or_else(|| usage_error("missing required --set"))?;
    if let Some(path) = spec.strip_prefix('@') {
        let text = fs::read_to_string(path)
            .map_err(|e| usage_error(format!("cannot read set file {path}: {e}")))?;
        Ok(IntSet::from_lines(&text)?)
    } else {
        Ok(spec.parse()?)
    }
}

/// Builds the Möbius table: `--sieve-limit` when given, otherwise exactly
/// what the invocation needs.
fn build_table(args: &Args, needed: u64) -> CliResult<MobiusTable> {
    let limit = match args.u64_opt("sieve-limit")? {
        Some(l) => l,
        None => needed.max(1),
    };
    Ok(MobiusTable::new(limit)?)
}

fn enumeration_limit() -> CliResult<usize> {
    match env::var("COPRIME_COUNTS_MAX_ENUM") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage_error(format!("invalid COPRIME_COUNTS_MAX_ENUM value {v:?}"))),
        Err(env::VarError::NotPresent) => Ok(DEFAULT_ENUM_LIMIT),
        Err(env::VarError::NotUnicode(_)) => {
            Err(usage_error("COPRIME_COUNTS_MAX_ENUM is not valid unicode"))
        }
    }
}

/// Deterministic permutation of `0..len` from a seed (splitmix64 driving
/// Fisher-Yates), so repeated invocations emit identical bytes.
fn seeded_permutation(len: usize, seed: u64) -> Vec<usize> {
    let mut state = seed;
    let mut next = move || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    let mut perm: Vec<usize> = (0..len).collect();
    for i in (1..len).rev() {
        let j = (next() % (i as u64 + 1)) as usize;
        perm.swap(i, j);
    }
    perm
}

enum Output {
    /// A single value; JSON renders it as a string field to keep
    /// arbitrarily large counts lossless for consumers.
    Value(String),
    Bool(bool),
    Report(IdentityReport),
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn render(output: &Output, json: bool) -> String {
    match output {
        Output::Value(v) => {
            if json {
                format!("{{\"value\":{}}}", json_string(v))
            } else {
                v.clone()
            }
        }
        Output::Bool(b) => {
            if json {
                format!("{{\"value\":{b}}}")
            } else {
                b.to_string()
            }
        }
        Output::Report(r) => {
            if json {
                format!(
                    "{{\"lhs\":{},\"rhs\":{},\"case\":{},\"holds\":{}}}",
                    r.lhs,
                    r.rhs_expected,
                    json_string(&r.case_label),
                    r.holds
                )
            } else {
                r.holds.to_string()
            }
        }
    }
}

fn parse_method(args: &Args) -> CliResult<PairwiseMethod> {
    match args.value("method") {
        None | Some("sqrt") => Ok(PairwiseMethod::SqrtForm),
        Some("incremental") => Ok(PairwiseMethod::Incremental),
        Some("direct") => Ok(PairwiseMethod::Direct),
        Some(other) => Err(usage_error(format!(
            "--method must be sqrt, incremental, or direct, got {other:?}"
        ))),
    }
}

fn positional_u64(args: &Args, what: &str) -> CliResult<u64> {
    if args.positionals.len() != 1 {
        return Err(usage_error(format!("expected exactly one argument: {what}")));
    }
    args.positionals[0]
        .parse()
        .map_err(|_| usage_error(format!("{what} must be a nonnegative integer")))
}

fn run_command(command: &str, args: &Args) -> CliResult<Output> {
    match command {
        "mobius" => {
            args.expect_only("mobius", &[])?;
            let n = positional_u64(args, "N")?;
            let table = build_table(args, n)?;
            Ok(Output::Value(table.mu(n)?.to_string()))
        }
        "mertens" => {
            args.expect_only("mertens", &[])?;
            let n = positional_u64(args, "N")?;
            let table = build_table(args, n)?;
            Ok(Output::Value(table.mertens(n)?.to_string()))
        }
        "phi" => {
            args.expect_only("phi", &["set", "n", "alpha"])?;
            let set = load_set(args)?;
            let n = args.u64_required("n")?;
            let table = build_table(args, n)?;
            let count = match args.alpha_opt()? {
                None => phi_set(&table, &set, n)?,
                Some(alpha) => phi_alpha(&table, &set, n, alpha)?,
            };
            Ok(Output::Value(count.to_string()))
        }
        "f" => {
            args.expect_only("f", &["set", "alpha", "incremental", "perm-seed"])?;
            let set = load_set(args)?;
            let table = build_table(args, set.sup())?;
            let alpha = args.alpha_opt()?;
            let count = if args.has("incremental") {
                let perm = match args.u64_opt("perm-seed")? {
                    None => (0..set.len()).collect(),
                    Some(seed) => seeded_permutation(set.len(), seed),
                };
                f_incremental(&table, &set, &perm, alpha)?
            } else {
                match alpha {
                    None => f_set(&table, &set)?,
                    Some(alpha) => f_alpha(&table, &set, alpha)?,
                }
            };
            Ok(Output::Value(count.to_string()))
        }
        "interval" => {
            args.expect_only("interval", &["l", "m", "n", "alpha"])?;
            let l = args.u64_required("l")?;
            let m = args.u64_required("m")?;
            let alpha = args.alpha_opt()?;
            let count = match args.u64_opt("n")? {
                None => {
                    let table = build_table(args, m)?;
                    f_interval(&table, l, m, alpha)?
                }
                Some(n) => {
                    let table = build_table(args, n)?;
                    phi_interval(&table, l, m, n, alpha)?
                }
            };
            Ok(Output::Value(count.to_string()))
        }
        "coprime-count" => {
            args.expect_only("coprime-count", &["set", "n"])?;
            let set = load_set(args)?;
            let n = args.u64_required("n")?;
            let table = build_table(args, n)?;
            Ok(Output::Value(coprime_element_count(&table, &set, n)?.to_string()))
        }
        "classify" => {
            args.expect_only("classify", &["set", "alpha", "n"])?;
            let set = load_set(args)?;
            let alpha = args
                .alpha_opt()?
                .ok_or_else(|| usage_error("missing required --alpha"))?;
            let status = match args.u64_opt("n")? {
                None => {
                    let table = build_table(args, set.sup())?;
                    alpha_status(&table, &set, alpha)?
                }
                Some(n) => {
                    let table = build_table(args, n)?;
                    alpha_status_to_n(&table, &set, alpha, n)?
                }
            };
            Ok(Output::Value(status.to_string()))
        }
        "pairwise" => {
            args.expect_only("pairwise", &["set", "free", "method", "perm-seed"])?;
            let set = load_set(args)?;
            let method = parse_method(args)?;
            let needed = match method {
                PairwiseMethod::Direct => 1,
                _ => set.sup(),
            };
            let table = build_table(args, needed)?;
            let result = match (method, args.u64_opt("perm-seed")?) {
                (PairwiseMethod::Incremental, Some(seed)) => {
                    let perm = seeded_permutation(set.len(), seed);
                    if args.has("free") {
                        is_coprime_free_with_perm(&table, &set, &perm)?
                    } else {
                        is_pairwise_coprime_with_perm(&table, &set, &perm)?
                    }
                }
                _ => {
                    if args.has("free") {
                        is_coprime_free(&table, &set, method)?
                    } else {
                        is_pairwise_coprime(&table, &set, method)?
                    }
                }
            };
            Ok(Output::Bool(result))
        }
        "pairwise-count" => {
            args.expect_only("pairwise-count", &["set", "free"])?;
            let set = load_set(args)?;
            let table = build_table(args, set.sup())?;
            let limit = enumeration_limit()?;
            let count = if args.has("free") {
                count_coprime_free_subsets_limited(&table, &set, limit)?
            } else {
                count_pairwise_coprime_subsets_limited(&table, &set, limit)?
            };
            Ok(Output::Value(count.to_string()))
        }
        "verify" => {
            args.expect_only("verify", &["identity", "set", "l", "m", "n", "b"])?;
            let identity = args
                .value("identity")
                .ok_or_else(|| usage_error("missing required --identity"))?;
            let report = match identity {
                "pair" => {
                    let m = args.u64_required("m")?;
                    let n = args.u64_required("n")?;
                    let table = build_table(args, n)?;
                    mertens_pair(&table, m, n)?
                }
                "triple" => {
                    let l = args.u64_required("l")?;
                    let m = args.u64_required("m")?;
                    let n = args.u64_required("n")?;
                    let table = build_table(args, n)?;
                    mertens_triple(&table, l, m, n)?
                }
                "bound" => {
                    let set = load_set(args)?;
                    let table = build_table(args, set.sup())?;
                    mertens_bound(&table, &set)?
                }
                "scaled" => {
                    let set = load_set(args)?;
                    let b = args.u64_required("b")?;
                    let a = set.sup();
                    let c = a.checked_mul(b).ok_or_else(|| {
                        usage_error(format!("{a} * {b} overflows"))
                    })?;
                    let table = build_table(args, c)?;
                    scaled_mertens(&table, &set, a, b)?
                }
                other => {
                    return Err(usage_error(format!(
                        "--identity must be pair, triple, bound, or scaled, got {other:?}"
                    )))
                }
            };
            Ok(Output::Report(report))
        }
        "oracle" => {
            args.expect_only("oracle", &["set", "pred", "n", "alpha"])?;
            let set = load_set(args)?;
            let kind = match args.value("pred") {
                Some("relprime") => PredicateKind::RelPrime,
                Some("relprime-to-n") => PredicateKind::RelPrimeToN(args.u64_required("n")?),
                Some("pairwise") => PredicateKind::PairwiseCoprime,
                Some("coprime-free") => PredicateKind::CoprimeFree,
                Some(other) => {
                    return Err(usage_error(format!(
                        "--pred must be relprime, relprime-to-n, pairwise, or coprime-free, got {other:?}"
                    )))
                }
                None => return Err(usage_error("missing required --pred")),
            };
            let pred = match args.alpha_opt()? {
                None => SubsetPredicate::new(kind),
                Some(alpha) => SubsetPredicate::with_cardinality(kind, alpha),
            };
            let limit = enumeration_limit()?;
            Ok(Output::Value(brute_count_limited(&set, &pred, limit)?.to_string()))
        }
        other => Err(usage_error(format!(
            "unknown command {other:?}; run with --help for usage"
        ))),
    }
}

fn run(raw: &[String]) -> CliResult<ExitCode> {
    let args = Args::parse(raw)?;
    if args.has("help") {
        print!("{USAGE}");
        return Ok(ExitCode::SUCCESS);
    }
    let Some(command) = args.positionals.first().cloned() else {
        return Err(usage_error("no command given; run with --help for usage"));
    };
    let args = Args {
        positionals: args.positionals[1..].to_vec(),
        values: args.values,
        switches: args.switches,
    };
    // Only mobius/mertens take a positional argument.
    if !matches!(command.as_str(), "mobius" | "mertens") && !args.positionals.is_empty() {
        return Err(usage_error(format!(
            "unexpected argument {:?} for `{command}`",
            args.positionals[0]
        )));
    }
    let output = run_command(&command, &args)?;
    println!("{}", render(&output, args.has("json")));
    match output {
        Output::Report(r) if !r.holds => Ok(ExitCode::FAILURE),
        _ => Ok(ExitCode::SUCCESS),
    }
}

fn main() -> ExitCode {
    let raw: Vec<String> = env::args().skip(1).collect();
    match run(&raw) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
