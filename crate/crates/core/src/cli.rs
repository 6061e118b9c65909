//! The `negtrans` command line.
//!
//! Exit status: 0 for success, a proof or a passing suite; 1 for a
//! refutation or a failing check; 2 when the bounds ran out; 64 for usage
//! errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::formula::Formula;
use crate::kernel::{Kernel, Verdict, DEFAULT_FO_DEPTH};
use crate::kripke::{curated_lookup, find_countermodel, FrameCatalog, SearchBounds};
use crate::proofsearch::Logic;
use crate::rewrite::{builtin_ruleset, enumerate_all_paths, standard_path, RuleSet, SimplificationPath};
use crate::syntax::parse;
use crate::translations::{apply_translation, builtin, translations_related, BotClause, ClauseStatus};
use crate::verify::{run_all, CheckResult, Status, Summary, VerifyConfig, CHECKS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    /// One JSON record per line.
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    Standard,
    Enumerate,
}

#[derive(Debug, Parser)]
#[command(name = "negtrans", version, about = "Negative translations and their simplifications")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    pub output: Output,
    /// Seed for generated corpora.
    #[arg(long, default_value_t = 1, global = true)]
    pub seed: u64,
    #[command(flatten)]
    pub bounds: BoundArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    /// Largest Kripke frame tried.
    #[arg(long, default_value_t = 4, global = true)]
    pub max_worlds: usize,
    /// Largest domain per world.
    #[arg(long, default_value_t = 2, global = true)]
    pub max_domain: usize,
    /// Try every rooted poset rather than chains, forks and the diamond.
    #[arg(long, global = true)]
    pub all_frames: bool,
    /// Depth bound for first-order proof search.
    #[arg(long, default_value_t = DEFAULT_FO_DEPTH, global = true)]
    pub depth: usize,
}

impl BoundArgs {
    fn search(&self) -> SearchBounds {
        SearchBounds {
            max_worlds: self.max_worlds,
            max_domain: self.max_domain,
            catalog: if self.all_frames { FrameCatalog::Full } else { FrameCatalog::Standard },
            constant_domain: false,
        }
    }

    fn kernel(&self) -> Kernel {
        Kernel::new(self.depth, self.search())
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply a built-in translation.
    Translate {
        #[arg(long, short)]
        translation: String,
        /// Translate `bot` to itself instead of like an atom.
        #[arg(long)]
        bot_literal: bool,
        formula: String,
    },
    /// Run a rule set on a formula.
    Simplify {
        /// A built-in name, or `@file` in the rule-set text format.
        #[arg(long, short)]
        rules: String,
        #[arg(long, value_enum, default_value_t = Strategy::Standard)]
        strategy: Strategy,
        /// Apply the Kolmogorov translation first.
        #[arg(long)]
        from_source: bool,
        /// Node budget for `--strategy enumerate`.
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        formula: String,
    },
    /// Decide or search for a proof.
    Prove {
        #[arg(long, short, default_value = "intuitionistic")]
        logic: Logic,
        formula: String,
    },
    /// Search for a finite Kripke model refuting a formula.
    Countermodel {
        /// `intuitionistic` or `minimal`.
        #[arg(long, short, default_value = "intuitionistic")]
        logic: Logic,
        formula: String,
    },
    /// Compare two translations clause by clause in IL.
    Related { first: String, second: String },
    /// Run the verification suite, or one check.
    Verify {
        #[arg(default_value = "all")]
        check: String,
    },
}

struct Out<'a> {
    mode: Output,
    w: &'a mut dyn Write,
}

impl Out<'_> {
    fn text(&mut self, line: impl AsRef<str>) {
        if self.mode == Output::Text {
            let _ = writeln!(self.w, "{}", line.as_ref());
        }
    }

    fn record(&mut self, value: serde_json::Value) {
        if self.mode == Output::Machine {
            let _ = writeln!(self.w, "{value}");
        }
    }
}

#[derive(Debug)]
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn formula(text: &str) -> Result<Formula, Usage> {
    parse(text).map_err(|e| Usage(format!("cannot parse `{text}`: {e}")))
}

fn ruleset(spec: &str) -> Result<RuleSet, Usage> {
    match spec.strip_prefix('@') {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Usage(format!("{path}: {e}")))?;
            Ok(RuleSet::from_text(path, &text)?)
        }
        None => Ok(builtin_ruleset(spec)?),
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{rendered}") } else { write!(out, "{rendered}") };
            return code;
        }
    };
    let mut o = Out { mode: cli.output, w: out };
    match execute(&cli, &mut o) {
        Ok(code) => code,
        Err(Usage(message)) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli, o: &mut Out<'_>) -> Result<i32, Usage> {
    match &cli.command {
        Command::Translate { translation, bot_literal, formula: text } => {
            let mut t = builtin(translation)?;
            if *bot_literal {
                t = t.with_bot(BotClause::Literal);
            }
            let f = formula(text)?;
            let result = apply_translation(&t, &f);
            o.text(result.to_string());
            o.record(json!({"command": "translate", "translation": t.name, "input": f.to_string(), "result": result.to_string()}));
            Ok(EXIT_OK)
        }
        Command::Simplify { rules, strategy, from_source, budget, formula: text } => {
            let rs = ruleset(rules)?;
            let mut f = formula(text)?;
            if *from_source {
                f = apply_translation(&builtin("kolmogorov")?, &f);
            }
            match strategy {
                Strategy::Standard => {
                    let path = standard_path(&f, &rs);
                    print_path(o, &rs, &path);
                }
                Strategy::Enumerate => {
                    let paths = enumerate_all_paths(&f, &rs, *budget)?;
                    o.text(format!("{} maximal path(s)", paths.len()));
                    for (i, p) in paths.iter().enumerate() {
                        o.text(format!("path {} (length {}): {}", i + 1, p.len(), p.end()));
                    }
                    let paths: Vec<_> = paths.iter().map(path_record).collect();
                    o.record(json!({"command": "simplify", "rules": rs.name, "strategy": "enumerate", "paths": paths}));
                }
            }
            Ok(EXIT_OK)
        }
        Command::Prove { logic, formula: text } => {
            let f = formula(text)?;
            let v = cli.bounds.kernel().valid(&f, *logic);
            Ok(report_verdict(o, "prove", &f, *logic, &v))
        }
        Command::Countermodel { logic, formula: text } => {
            let f = formula(text)?;
            let goal = match logic {
                Logic::Classical => return Err(Usage("countermodels are for intuitionistic or minimal logic".into())),
                Logic::Intuitionistic => f.clone(),
                Logic::Minimal => f.expand_neg().replace_bot(&Formula::atom("falsum")),
            };
            let bounds = cli.bounds.search();
            match find_countermodel(&goal, &bounds)? {
                Some(m) => {
                    o.text(format!("refuted by a {}-world model:", m.model.worlds()));
                    o.text(m.to_string().trim_end());
                    o.record(
                        json!({"command": "countermodel", "formula": f.to_string(), "result": "refuted", "model": m}),
                    );
                    Ok(EXIT_REFUTED)
                }
                None => {
                    let curated = curated_lookup(&f);
                    o.text(format!("no countermodel up to {} worlds, domain {}", bounds.max_worlds, bounds.max_domain));
                    if let Some(c) = curated {
                        o.text(format!("curated item {}: {}", c.item, c.status));
                    }
                    o.record(json!({"command": "countermodel", "formula": f.to_string(), "result": "unknown", "curated": curated}));
                    Ok(EXIT_UNKNOWN)
                }
            }
        }
        Command::Related { first, second } => {
            let (t1, t2) = (builtin(first)?, builtin(second)?);
            let rel = translations_related(&t1, &t2, &cli.bounds.kernel());
            for c in &rel.clauses {
                let status = match c.status {
                    ClauseStatus::Equivalent => "equivalent",
                    ClauseStatus::Inequivalent => "inequivalent",
                    ClauseStatus::Unknown => "unknown",
                };
                o.text(format!("{:<8} {:<13} {}  vs  {}", c.clause.name(), status, c.left, c.right));
            }
            o.text(if rel.related { "related" } else { "not related" });
            o.record(json!({"command": "related", "first": t1.name, "second": t2.name, "relation": rel}));
            Ok(if rel.related {
                EXIT_OK
            } else if rel.clauses.iter().any(|c| c.status == ClauseStatus::Inequivalent) {
                EXIT_REFUTED
            } else {
                EXIT_UNKNOWN
            })
        }
        Command::Verify { check } => {
            let only: Vec<&str> = if check == "all" { vec![] } else { vec![check.as_str()] };
            if !only.is_empty() && !CHECKS.iter().any(|(id, _)| id == check) {
                let ids: Vec<&str> = CHECKS.iter().map(|(id, _)| *id).collect();
                return Err(Usage(format!("unknown check `{check}`; expected all or one of: {}", ids.join(", "))));
            }
            let cfg = VerifyConfig { seed: cli.seed, kernel: cli.bounds.kernel(), ..VerifyConfig::default() };
            let summary = run_all(&cfg, &only, &mut |r| emit_check(o, r));
            emit_summary(o, &summary);
            Ok(if summary.failed() { EXIT_REFUTED } else { EXIT_OK })
        }
    }
}

fn path_record(p: &SimplificationPath) -> serde_json::Value {
    json!({
        "length": p.len(),
        "nodes": p.nodes.iter().map(|n| n.to_string()).collect::<Vec<_>>(),
        "steps": p.steps.iter().map(|s| json!({"position": s.position, "rule": s.rule.to_string(), "id": s.id})).collect::<Vec<_>>(),
    })
}

fn print_path(o: &mut Out<'_>, rs: &RuleSet, path: &SimplificationPath) {
    o.text(path.start().to_string());
    for (step, node) in path.steps.iter().zip(&path.nodes[1..]) {
        o.text(format!("  [{}] {}", step.rule, node));
    }
    o.text(format!("{} step(s)", path.len()));
    o.text(path.end().to_string());
    let mut record = path_record(path);
    record["command"] = json!("simplify");
    record["rules"] = json!(rs.name);
    record["strategy"] = json!("standard");
    record["result"] = json!(path.end().to_string());
    o.record(record);
}

fn report_verdict(o: &mut Out<'_>, command: &str, f: &Formula, logic: Logic, v: &Verdict) -> i32 {
    let (word, code) = match v {
        Verdict::Valid { .. } => ("Proved", EXIT_OK),
        Verdict::Invalid { .. } => ("Refuted", EXIT_REFUTED),
        Verdict::Unknown { .. } => ("Unknown", EXIT_UNKNOWN),
    };
    match v {
        Verdict::Valid { depth } => o.text(format!("{word} ({}, depth {depth})", logic.name())),
        Verdict::Invalid { witness: Some(m) } => {
            o.text(format!("{word} ({}); countermodel:", logic.name()));
            o.text(m.to_string().trim_end());
        }
        Verdict::Invalid { witness: None } => o.text(format!("{word} ({})", logic.name())),
        Verdict::Unknown { bound } => {
            o.text(format!("{word} ({}): no proof to depth {bound} and no countermodel within bounds", logic.name()));
            if let Some(c) = curated_lookup(f) {
                o.text(format!("curated item {}: {}", c.item, c.status));
            }
        }
    }
    o.record(
        json!({"command": command, "logic": logic.name(), "formula": f.to_string(), "result": word, "verdict": v}),
    );
    code
}

/// Prints one check result.
fn emit_check(o: &mut Out<'_>, r: &CheckResult) {
    o.text(format!(
        "{:<22} {:<26} {:>6} instances  {:>6} ms  ({})",
        r.id,
        r.status.name(),
        r.checked,
        r.wall_ms,
        r.anchor
    ));
    for e in r.failures() {
        o.text(format!("    FAIL [{}] {} : {}", e.claim, e.instance, e.verdict));
    }
    for g in &r.gaps {
        o.text(format!("    gap: item {} {}: {}", g.item, g.schema, g.status));
    }
    o.record(json!({
        "id": r.id,
        "anchor": r.anchor,
        "status": r.status,
        "evidence": r.evidence.len(),
        "checked": r.checked,
        "wall_ms": r.wall_ms,
        "claims": r.claims,
        "gaps": r.gaps,
        "failures": r.failures().collect::<Vec<_>>(),
    }));
}

fn emit_summary(o: &mut Out<'_>, s: &Summary) {
    for name in &s.unmapped {
        o.text(format!("unmapped result: {name}"));
    }
    let gaps: Vec<u8> = s.gaps().iter().map(|g| g.item).collect();
    o.text(s.line());
    if !gaps.is_empty() {
        o.text(format!("documented gaps (curated, not machine-refuted): items {gaps:?}"));
    }
    o.record(json!({
        "summary": s.line(),
        "pass": s.count(Status::Pass),
        "fail": s.count(Status::Fail),
        "documented_gap": s.count(Status::PassWithDocumentedGaps),
        "gap_items": gaps,
        "unmapped": s.unmapped,
    }));
}
