//! Command-line front end. [`run`] takes the full argument vector and
//! returns the exit status with everything that would be printed, so the
//! binary is a thin wrapper and tests can drive commands in-process.
//!
//! Exit statuses: 0 query answered, 1 a `paper-suite` check failed, 2 bad flags,
//! 3 unparsable input, 4 unreadable file, 5 frame or valuation rejected,
//! 6 size limit exceeded.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::calculus::{
    check_derivation, instantiate, prove_with, Derivation, Meta, ProofOutcome, SchemaId, SearchLimits, System,
    DEFAULT_K_MAX,
};
use crate::formula::{parse_formula, parse_pair, ConsequencePair, Formula, ParseError};
use crate::frame::{builtin, enumerate_routley_ifs, FrameError, FrameSpec, RoutleyFrame};
use crate::random::{self, DerivationGen, DEFAULT_SEED};
use crate::semantics::{
    check_condition, find_countermodel, valid_in_frame, Condition, FrameVerdict, InfoModel, SemanticsError, Valuation,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SUITE_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_IO: i32 = 4;
pub const EXIT_INVALID: i32 = 5;
pub const EXIT_LIMIT: i32 = 6;

#[derive(Debug, Parser)]
#[command(name = "routley", version, about = "Routley information frames: support, validity, countermodels, proofs")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Seed for randomized corpora.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a formula or a pair `lhs |- rhs` and print it back.
    Parse { input: String },
    /// Load a frame file and report every broken frame law.
    FrameCheck { path: String },
    /// Print a built-in frame (or a frame file).
    FrameShow { name: String },
    /// Support of a formula at one state.
    Eval {
        /// Built-in frame name or a JSON/TOML frame file.
        #[arg(long)]
        frame: String,
        /// JSON object from atoms to state lists, inline or as a file.
        #[arg(long)]
        valuation: String,
        /// State name.
        #[arg(long)]
        state: String,
        #[arg(long)]
        formula: String,
    },
    /// Validity of a pair on a frame, over all valuations.
    Valid {
        /// Built-in frame name or a JSON/TOML frame file.
        #[arg(long)]
        frame: String,
        #[arg(long)]
        pair: String,
    },
    /// Smallest countermodel up to a frame size.
    Countermodel {
        #[arg(long)]
        pair: String,
        /// Largest frame size tried.
        #[arg(long, default_value_t = 6)]
        max_size: usize,
    },
    /// Bounded proof search.
    Prove {
        /// DLL, DLLR, DLLR_DN, CLASSICAL, LinDLLR, KL or LRIF.
        #[arg(long)]
        system: System,
        #[arg(long)]
        pair: String,
        /// Maximum derivation height.
        #[arg(long, default_value_t = 4)]
        depth: usize,
        /// Largest index tried for the indexed axiom families.
        #[arg(long, default_value_t = DEFAULT_K_MAX)]
        k_max: u32,
        /// Goal expansions before giving up with `unknown`.
        #[arg(long, default_value_t = 100_000)]
        max_expansions: usize,
    },
    /// Check a derivation file (indented text or JSON).
    Check {
        /// DLL, DLLR, DLLR_DN, CLASSICAL, LinDLLR, KL or LRIF.
        #[arg(long)]
        system: System,
        /// Derivation file, indented text or JSON.
        #[arg(long)]
        derivation: String,
        /// Largest index tried for the indexed axiom families.
        #[arg(long, default_value_t = DEFAULT_K_MAX)]
        k_max: u32,
    },
    /// Membership in Kalman logic.
    DecideKl {
        #[arg(long)]
        pair: String,
    },
    /// List or count Routley frames of one size.
    Enumerate {
        /// Number of states, including e and i.
        #[arg(long)]
        size: usize,
        /// One representative per isomorphism class.
        #[arg(long)]
        up_to_iso: bool,
        /// Print only the number of frames.
        #[arg(long)]
        count_only: bool,
    },
    /// Re-run the pinned regression examples.
    PaperSuite,
}

/// What a command printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::new(EXIT_PARSE, format!("parse error: {e}"))
    }
}

impl From<FrameError> for Failure {
    fn from(e: FrameError) -> Self {
        let code = match e {
            FrameError::LimitExceeded { .. } => EXIT_LIMIT,
            _ => EXIT_INVALID,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<SemanticsError> for Failure {
    fn from(e: SemanticsError) -> Self {
        Failure::new(EXIT_INVALID, e.to_string())
    }
}

type CmdResult = Result<String, Failure>;

pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.use_stderr() {
                true => Output { code: EXIT_USAGE, stdout: String::new(), stderr: text },
                false => Output { code: EXIT_OK, stdout: text, stderr: String::new() },
            };
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.workers {
        if n == 0 {
            return Output { code: EXIT_USAGE, stdout: String::new(), stderr: "--workers must be positive\n".into() };
        }
        builder = builder.num_threads(n);
    }
    let pool = match builder.build() {
        Ok(pool) => pool,
        Err(e) => return Output { code: EXIT_USAGE, stdout: String::new(), stderr: format!("{e}\n") },
    };
    let (code, result) = pool.install(|| dispatch(&cli));
    match result {
        Ok(mut stdout) => {
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Output { code, stdout, stderr: String::new() }
        }
        Err(f) => Output { code: f.code, stdout: String::new(), stderr: format!("error: {}\n", f.message) },
    }
}

fn dispatch(cli: &Cli) -> (i32, CmdResult) {
    let json = cli.json;
    let result = match &cli.command {
        Command::Parse { input } => parse_cmd(input, json),
        Command::FrameCheck { path } => return frame_check(path, json),
        Command::FrameShow { name } => frame_show(name, json),
        Command::Eval { frame, valuation, state, formula } => eval_cmd(frame, valuation, state, formula, json),
        Command::Valid { frame, pair } => valid_cmd(frame, pair, json),
        Command::Countermodel { pair, max_size } => countermodel_cmd(pair, *max_size, json),
        Command::Prove { system, pair, depth, k_max, max_expansions } => {
            prove_cmd(*system, pair, *depth, *k_max, *max_expansions, json)
        }
        Command::Check { system, derivation, k_max } => check_cmd(*system, derivation, *k_max, json),
        Command::DecideKl { pair } => decide_kl_cmd(pair, json),
        Command::Enumerate { size, up_to_iso, count_only } => enumerate_cmd(*size, *up_to_iso, *count_only, json),
        Command::PaperSuite => return paper_suite_cmd(cli.seed, json),
    };
    (EXIT_OK, result)
}

fn to_json(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values serialize")
}

fn read_file(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::new(EXIT_IO, format!("cannot read `{path}`: {e}")))
}

fn read_spec(path: &str) -> Result<FrameSpec, Failure> {
    let text = read_file(path)?;
    let is_toml = Path::new(path).extension().is_some_and(|ext| ext.eq_ignore_ascii_case("toml"));
    let spec = if is_toml { FrameSpec::from_toml(&text) } else { FrameSpec::from_json(&text) };
    spec.map_err(|e| Failure::new(EXIT_PARSE, format!("`{path}`: {e}")))
}

/// Built-in names first, then files.
fn load_frame(name: &str) -> Result<RoutleyFrame, Failure> {
    match builtin(name) {
        Ok(frame) => Ok(frame),
        Err(FrameError::UnknownBuiltin(_)) => Ok(read_spec(name)?.load()?),
        Err(e) => Err(e.into()),
    }
}

fn load_valuation(frame: &RoutleyFrame, arg: &str) -> Result<Valuation, Failure> {
    let text = if arg.trim_start().starts_with('{') { arg.to_owned() } else { read_file(arg)? };
    let map: BTreeMap<String, Vec<String>> =
        serde_json::from_str(&text).map_err(|e| Failure::new(EXIT_PARSE, format!("valuation: {e}")))?;
    Ok(Valuation::from_names(frame, &map)?)
}

fn render_valuation(frame: &RoutleyFrame, valuation: &Valuation) -> String {
    valuation
        .iter()
        .map(|(atom, p)| format!("{atom} = {}", frame.render_set(p.members())))
        .collect::<Vec<_>>()
        .join("; ")
}

fn parse_cmd(input: &str, json: bool) -> CmdResult {
    let (kind, rendered, atoms, depth) = if input.contains("|-") || input.contains('⊢') {
        let pair = parse_pair(input)?;
        let depth = pair.lhs.depth().max(pair.rhs.depth());
        ("pair", pair.render(), pair.atoms(), depth)
    } else {
        let f = parse_formula(input)?;
        ("formula", f.render(), f.atoms(), f.depth())
    };
    Ok(if json {
        to_json(&json!({ "kind": kind, "rendered": rendered, "atoms": atoms, "depth": depth }))
    } else {
        rendered
    })
}

fn frame_check(path: &str, json: bool) -> (i32, CmdResult) {
    let frame = match builtin(path) {
        Ok(frame) => Ok(frame),
        Err(FrameError::UnknownBuiltin(_)) => read_spec(path).and_then(|spec| spec.to_frame().map_err(Failure::from)),
        Err(e) => Err(e.into()),
    };
    let frame = match frame {
        Ok(frame) => frame,
        Err(f) => return (f.code, Err(f)),
    };
    let mut violations = frame.validate_proto();
    if violations.is_empty() {
        violations = frame.star_violations();
    }
    let code = if violations.is_empty() { EXIT_OK } else { EXIT_INVALID };
    let out = if json {
        let list: Vec<Value> = violations
            .iter()
            .map(|v| json!({ "kind": format!("{:?}", v.kind), "states": v.witness.iter().map(|&s| frame.name(s)).collect::<Vec<_>>() }))
            .collect();
        to_json(&json!({ "routley_frame": violations.is_empty(), "states": frame.size(), "violations": list }))
    } else if violations.is_empty() {
        format!("ok: Routley frame with {} states", frame.size())
    } else {
        let mut out = String::from("not a Routley frame\n");
        for v in &violations {
            let _ = writeln!(out, "  {}", v.describe(&frame));
        }
        out
    };
    (code, Ok(out))
}

fn frame_show(name: &str, json: bool) -> CmdResult {
    let frame = load_frame(name)?;
    if json {
        return Ok(to_json(&serde_json::to_value(FrameSpec::from_frame(&frame)).expect("spec serializes")));
    }
    let mut out = format!("{frame}\n");
    let filters: Vec<String> = frame.proper_filters().iter().map(|p| frame.render_set(p.members())).collect();
    let _ = write!(out, "proper filters: {}", filters.join(" "));
    Ok(out)
}

fn eval_cmd(frame: &str, valuation: &str, state: &str, formula: &str, json: bool) -> CmdResult {
    let frame = load_frame(frame)?;
    let valuation = load_valuation(&frame, valuation)?;
    let s = frame.state(state).ok_or_else(|| Failure::new(EXIT_INVALID, format!("unknown state `{state}`")))?;
    let f = parse_formula(formula)?;
    let model = InfoModel::new(&frame, valuation);
    let supported = model.supports(s, &f)?;
    let prop = model.proposition(&f)?.members();
    Ok(if json {
        to_json(&json!({
            "state": state,
            "formula": f.render(),
            "supported": supported,
            "proposition": prop.iter().map(|s| frame.name(s)).collect::<Vec<_>>(),
        }))
    } else {
        format!(
            "{state} {} {}\n||{}|| = {}",
            if supported { "supports" } else { "does not support" },
            f.render(),
            f.render(),
            frame.render_set(prop)
        )
    })
}

fn verdict_json(frame: &RoutleyFrame, pair: &ConsequencePair, verdict: &FrameVerdict) -> Value {
    match verdict {
        FrameVerdict::Valid => json!({ "pair": pair.render(), "valid": true }),
        FrameVerdict::Invalid { valuation, witness } => json!({
            "pair": pair.render(),
            "valid": false,
            "valuation": valuation.to_names(frame),
            "witness": frame.name(*witness),
        }),
    }
}

fn verdict_text(frame: &RoutleyFrame, verdict: &FrameVerdict) -> String {
    match verdict {
        FrameVerdict::Valid => "valid".into(),
        FrameVerdict::Invalid { valuation, witness } => {
            format!("invalid\nvaluation: {}\nwitness: {}", render_valuation(frame, valuation), frame.name(*witness))
        }
    }
}

fn valid_cmd(frame: &str, pair: &str, json: bool) -> CmdResult {
    let frame = load_frame(frame)?;
    let pair = parse_pair(pair)?;
    let verdict = valid_in_frame(&frame, &pair);
    Ok(if json { to_json(&verdict_json(&frame, &pair, &verdict)) } else { verdict_text(&frame, &verdict) })
}

fn countermodel_cmd(pair: &str, max_size: usize, json: bool) -> CmdResult {
    let pair = parse_pair(pair)?;
    let found = find_countermodel(&pair, max_size)?;
    if json {
        let record = found.as_ref().map(|c| serde_json::to_value(c.to_record()).expect("record serializes"));
        return Ok(to_json(&json!({
            "pair": pair.render(),
            "max_size": max_size,
            "found": found.is_some(),
            "countermodel": record,
        })));
    }
    Ok(match found {
        None => format!("no countermodel with at most {max_size} states"),
        Some(c) => format!(
            "countermodel on {} states\nframe: {}\nvaluation: {}\nwitness: {}",
            c.frame.size(),
            c.frame,
            render_valuation(&c.frame, &c.valuation),
            c.frame.name(c.witness)
        ),
    })
}

fn prove_cmd(system: System, pair: &str, depth: usize, k_max: u32, max_expansions: usize, json: bool) -> CmdResult {
    if depth == 0 {
        return Err(Failure::new(EXIT_USAGE, "--depth must be positive"));
    }
    let pair = parse_pair(pair)?;
    let limits = SearchLimits { max_expansions, ..SearchLimits::new(depth, k_max) };
    let outcome = prove_with(system, &pair, limits);
    if json {
        let derivation = outcome.derivation().map(|d| serde_json::to_value(d).expect("derivation serializes"));
        return Ok(to_json(&json!({
            "system": system.name(),
            "pair": pair.render(),
            "depth": depth,
            "k_max": k_max,
            "result": if outcome.is_proved() { "proved" } else { "unknown" },
            "derivation": derivation,
        })));
    }
    Ok(match outcome {
        ProofOutcome::Proved(d) => format!("proved\n{}", d.to_text()),
        ProofOutcome::Unknown => "unknown".into(),
    })
}

fn check_cmd(system: System, path: &str, k_max: u32, json: bool) -> CmdResult {
    let text = read_file(path)?;
    let d: Derivation = if text.trim_start().starts_with('{') {
        serde_json::from_str(&text).map_err(|e| Failure::new(EXIT_PARSE, format!("derivation: {e}")))?
    } else {
        Derivation::from_text(&text).map_err(|e| Failure::new(EXIT_PARSE, format!("derivation: {e}")))?
    };
    let errors = check_derivation(system, &d, k_max).err().unwrap_or_default();
    Ok(if json {
        to_json(&json!({
            "system": system.name(),
            "conclusion": d.conclusion.render(),
            "valid": errors.is_empty(),
            "errors": errors.iter().map(|e| json!({ "path": e.path, "message": e.kind.to_string() })).collect::<Vec<_>>(),
        }))
    } else if errors.is_empty() {
        format!("valid {} derivation of {}", system.name(), d.conclusion.render())
    } else {
        let mut out = String::from("invalid\n");
        for e in &errors {
            let _ = writeln!(out, "  {e}");
        }
        out
    })
}

fn decide_kl_cmd(pair: &str, json: bool) -> CmdResult {
    let pair = parse_pair(pair)?;
    let frame = builtin("ikl")?;
    let verdict = valid_in_frame(&frame, &pair);
    Ok(if json { to_json(&verdict_json(&frame, &pair, &verdict)) } else { verdict_text(&frame, &verdict) })
}

fn enumerate_cmd(size: usize, up_to_iso: bool, count_only: bool, json: bool) -> CmdResult {
    let frames = enumerate_routley_ifs(size, up_to_iso)?;
    if count_only {
        let count = frames.count();
        return Ok(if json {
            to_json(&json!({ "size": size, "up_to_iso": up_to_iso, "count": count }))
        } else {
            count.to_string()
        });
    }
    if json {
        let specs: Vec<Value> =
            frames.map(|f| serde_json::to_value(FrameSpec::from_frame(&f)).expect("spec serializes")).collect();
        return Ok(to_json(&Value::Array(specs)));
    }
    Ok(frames.map(|f| f.to_string()).collect::<Vec<_>>().join("\n"))
}

/// One pinned example: its name and whether it reproduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteCheck {
    pub name: String,
    pub passed: bool,
}

fn upsets(frame: &RoutleyFrame, atoms: &[(&str, &str)]) -> Valuation {
    atoms.iter().fold(Valuation::new(), |v, (atom, gen)| {
        let s = frame.state(gen).expect("named state exists");
        v.with(atom, frame.principal_upset(s).expect("generator above e"))
    })
}

fn invalid_at(frame: &RoutleyFrame, valuation: Valuation, pair: &str, witness: Option<&str>) -> bool {
    let pair = parse_pair(pair).expect("pinned pair parses");
    let model = InfoModel::new(frame, valuation);
    match (model.counter_state(&pair), witness) {
        (Ok(Some(_)), None) => true,
        (Ok(Some(_)), Some(w)) => {
            let w = frame.state(w).expect("named state exists");
            model.supports(w, &pair.lhs) == Ok(true) && model.supports(w, &pair.rhs) == Ok(false)
        }
        _ => false,
    }
}

/// The pinned regression examples plus a seeded soundness sample.
pub fn paper_suite(seed: u64) -> Vec<SuiteCheck> {
    let mut checks = Vec::new();
    let mut check = |name: &str, passed: bool| checks.push(SuiteCheck { name: name.into(), passed });
    let left = builtin("fig1_left").expect("built-in frame");
    let right = builtin("fig1_right").expect("built-in frame");
    let n5 = builtin("fig2_n5").expect("built-in frame");
    let ikl = builtin("ikl").expect("built-in frame");

    check(
        "fig1_left: ~~p |- p fails with V(p) = ^v",
        invalid_at(&left, upsets(&left, &[("p", "v")]), "~~p |- p", None),
    );
    check(
        "fig1_right: p |- ~~p fails with V(p) = ^v",
        invalid_at(&right, upsets(&right, &[("p", "v")]), "p |- ~~p", None),
    );
    check(
        "fig1_right: ~p & ~q |- ~(p | q) fails with V(p) = ^t, V(q) = ^u",
        invalid_at(&right, upsets(&right, &[("p", "t"), ("q", "u")]), "~p & ~q |- ~(p | q)", None),
    );
    check(
        "fig2_n5: distributivity fails at w",
        invalid_at(&n5, upsets(&n5, &[("p", "w"), ("q", "t"), ("r", "v")]), "p & (q | r) |- p & q | p & r", Some("w")),
    );
    check("fig1_left violates s** <= s", !check_condition(&left, Condition::Dn2));
    check("fig1_right violates s <= s**", !check_condition(&right, Condition::Dn1));
    for frame in [&left, &right, &n5, &ikl] {
        for cond in Condition::ALL {
            let agree = check_condition(frame, cond) == valid_in_frame(frame, &cond.characteristic_pair()).is_valid();
            check(&format!("{cond:?} condition matches its pair on a {}-state frame", frame.size()), agree);
        }
    }
    check("ikl has three proper filters", ikl.proper_filters().len() == 3);
    check("KA is Kalman-valid", crate::calculus::decide_kl(&parse_pair("p & ~p |- q | ~q").expect("parses")));
    check("DN2 is Kalman-valid", crate::calculus::decide_kl(&parse_pair("~~p |- p").expect("parses")));
    check("p |- q is not Kalman-valid", !crate::calculus::decide_kl(&parse_pair("p |- q").expect("parses")));
    let pq: BTreeMap<Meta, Formula> = [(Meta::Alpha, Formula::atom("p")), (Meta::Beta, Formula::atom("q"))].into();
    check(
        "L2 at k = 0 is KA",
        instantiate(SchemaId::L2, &pq, Some(0)).ok() == instantiate(SchemaId::Ka, &pq, None).ok(),
    );
    let proves =
        |sys, text: &str| crate::calculus::prove(sys, &parse_pair(text).expect("parses"), 3, DEFAULT_K_MAX).is_proved();
    check("DLLR proves DM2", proves(System::Dllr, "~p & ~q |- ~(p | q)"));
    check("LRIF proves DM1", proves(System::Lrif, "~(p & q) |- ~p | ~q"));
    let dn2 = parse_pair("~~p |- p").expect("parses");
    check(
        "LRIF leaves ~~p |- p unproved and a countermodel exists",
        !proves(System::Lrif, "~~p |- p") && matches!(find_countermodel(&dn2, 6), Ok(Some(_))),
    );
    check("one Routley frame on two states", enumerate_routley_ifs(2, false).map(|f| f.count()).ok() == Some(1));

    let mut rng = random::rng(seed);
    let atoms = random::atom_names(2);
    let chains: Vec<RoutleyFrame> =
        (2..=5).flat_map(|n| enumerate_routley_ifs(n, true).expect("small sizes")).filter(|f| f.is_linear()).collect();
    let sound = (0..50).all(|_| {
        let d = DerivationGen::new(&mut rng, System::LinDllr, atoms.clone(), 1, 2).derivation(3);
        check_derivation(System::LinDllr, &d, 2).is_ok()
            && chains.iter().all(|f| valid_in_frame(f, &d.conclusion).is_valid())
    });
    check("random LinDLLR derivations hold on linear frames", sound);
    checks
}

fn paper_suite_cmd(seed: u64, json: bool) -> (i32, CmdResult) {
    let checks = paper_suite(seed);
    let failed = checks.iter().filter(|c| !c.passed).count();
    let code = if failed == 0 { EXIT_OK } else { EXIT_SUITE_FAILED };
    let out = if json {
        to_json(&json!({
            "seed": seed,
            "passed": checks.len() - failed,
            "failed": failed,
            "checks": checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed })).collect::<Vec<_>>(),
        }))
    } else {
        let mut out = String::new();
        for c in &checks {
            let _ = writeln!(out, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
        }
        let _ = write!(out, "{} of {} checks passed", checks.len() - failed, checks.len());
        out
    };
    (code, Ok(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Output {
        run(std::iter::once("routley").chain(args.iter().copied()))
    }

    #[test]
    fn spec_examples() {
        let out = run_args(&["valid", "--frame", "fig2_n5", "--pair", "p & (q | r) |- (p & q) | (p & r)"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.starts_with("invalid"));
        let out = run_args(&["decide-kl", "--pair", "p & ~p |- q | ~q"]);
        assert_eq!((out.code, out.stdout.as_str()), (0, "valid\n"));
        let out = run_args(&["enumerate", "--size", "2", "--count-only"]);
        assert_eq!((out.code, out.stdout.as_str()), (0, "1\n"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["valid", "--frame", "ikl"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["parse", "p &"]).code, EXIT_PARSE);
        assert_eq!(run_args(&["frame-show", "/nonexistent/frame.json"]).code, EXIT_IO);
        assert_eq!(run_args(&["enumerate", "--size", "9"]).code, EXIT_LIMIT);
        let bad =
            run_args(&["eval", "--frame", "ikl", "--valuation", r#"{"p": ["t"]}"#, "--state", "i", "--formula", "p"]);
        assert_eq!(bad.code, EXIT_INVALID);
        assert_eq!(run_args(&["--help"]).code, EXIT_OK);
    }

    #[test]
    fn eval_reports_support() {
        let out = run_args(&[
            "--json",
            "eval",
            "--frame",
            "fig1_right",
            "--valuation",
            r#"{"p": ["v", "i"]}"#,
            "--state",
            "i",
            "--formula",
            "~~p",
        ]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let value: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(value["supported"], true);
        assert_eq!(value["proposition"], json!(["i"]));
    }

    #[test]
    fn suite_passes() {
        let checks = paper_suite(DEFAULT_SEED);
        assert!(checks.iter().all(|c| c.passed), "{:?}", checks.iter().filter(|c| !c.passed).collect::<Vec<_>>());
    }
}
