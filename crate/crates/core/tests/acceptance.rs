//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines show up in plain `cargo test` output.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use negtrans::formula::{BinOp, Quantifier, Symbol};
use negtrans::proofsearch::Logic;
use negtrans::rewrite::{builtin_ruleset, Negs, RewriteRule, Side};
use negtrans::verify::{
    run_all, CheckResult, ExpectedIl, Status, Summary, VerifyConfig, EQUIV_ITEMS, FIGURE_NONMAXIMAL, IDENTITIES,
    LENGTH_RULESETS, NONMAXIMAL_DIVERGENT, SUBMAXIMAL_RULESETS,
};
use negtrans::{parse, Formula};

// Pinned tolerances.
const SUITE_BUDGET: Duration = Duration::from_secs(60);
const FO_ITEM_US: u128 = 1_000_000;
const PROPOSITIONAL: usize = 500;
const QUANTIFIED: usize = 200;
const AVIGAD: usize = 200;
const LENGTH_MISMATCHES: usize = 0;
const IDENTITY_MISMATCHES: usize = 0;
const SMALL_SYMBOLS: usize = 6;
const ITEM20_WORLDS: usize = 2;
const ITEM20_DOMAIN: usize = 2;

struct Run {
    summary: Summary,
    elapsed: Duration,
}

impl Run {
    fn check(&self, id: &str) -> &CheckResult {
        self.summary.results.iter().find(|r| r.id == id).expect("check ran")
    }
}

struct Line {
    id: &'static str,
    ok: bool,
    detail: String,
}

fn equiv_il(run: &Run) -> Line {
    let r = run.check("lemma-equiv");
    let all_items = (1..=22).all(|i| r.claim_holds(&format!("item-{i}")));
    // Each IL-valid item, both directions, timed here rather than read back.
    let kernel = VerifyConfig::default().kernel;
    let mut slowest = 0;
    for item in EQUIV_ITEMS.iter().filter(|i| i.expected == ExpectedIl::Proved) {
        let (l, rt) = item.formulas();
        for f in [Formula::imp(l.clone(), rt.clone()), Formula::imp(rt, l)] {
            let start = Instant::now();
            let valid = kernel.valid(&f, Logic::Intuitionistic).is_valid();
            let us = start.elapsed().as_micros();
            slowest = slowest.max(if valid { us } else { u128::MAX });
        }
    }
    let gaps: Vec<u8> = r.gaps.iter().map(|g| g.item).collect();
    let item20 = EQUIV_ITEMS[19].expected;
    let pinned = matches!(item20, ExpectedIl::RefutedByCountermodel { worlds, domain }
        if worlds == ITEM20_WORLDS && domain == ITEM20_DOMAIN);
    let ok = all_items && slowest < FO_ITEM_US && pinned && gaps == [17, 18] && run.elapsed < SUITE_BUDGET;
    Line {
        id: "equiv-il",
        ok,
        detail: format!(
            "items 1-22 as expected: {all_items}; slowest IL item {slowest} us (< {FO_ITEM_US}); item 20 model <= {ITEM20_WORLDS} worlds/domain {ITEM20_DOMAIN}; documented gaps {gaps:?}; suite {:.1?} (< {SUITE_BUDGET:?})",
            run.elapsed
        ),
    }
}

fn maximal(run: &Run) -> Line {
    let r = run.check("simplification-props");
    let per_connective = RewriteRule::candidates(Side::Inside, Negs::Double, Symbol::Bin(BinOp::And)).len();
    let per_quantifier = RewriteRule::candidates(Side::Outside, Negs::Single, Symbol::Quant(Quantifier::Exists)).len();
    let rules = r.tally("rules-valid");
    let ok = ["rules-valid", "four-maximal", "quantifier-rejections", "maximality"].iter().all(|c| r.claim_holds(c))
        && rules.held == 16
        && per_connective <= 27
        && per_quantifier <= 6;
    Line {
        id: "maximal-simplifications",
        ok,
        detail: format!(
            "{} of 16 rules valid; exactly r1-r4 maximal: {}; {} quantifier rejections each countermodeled or curated; candidates {per_connective}/connective, {per_quantifier}/quantifier",
            rules.held,
            r.claim_holds("four-maximal"),
            r.tally("quantifier-rejections").held,
        ),
    }
}

fn lengths(run: &Run) -> Line {
    let r = run.check("path-lemmas");
    let t = r.tally("standard-length");
    let per_set = PROPOSITIONAL + QUANTIFIED;
    let ok = t.violated == LENGTH_MISMATCHES && t.held == LENGTH_RULESETS.len() * per_set;
    Line {
        id: "standard-length",
        ok,
        detail: format!(
            "{} rule sets x {per_set} sources: {} exact, {} mismatches (tolerance {LENGTH_MISMATCHES})",
            LENGTH_RULESETS.len(),
            t.held,
            t.violated
        ),
    }
}

fn corollaries(run: &Run) -> Line {
    let r = run.check("path-lemmas");
    let claims = [
        "length-bound",
        "longest-confluence",
        "no-revisit",
        "step-equivalence",
        "figure-divergence",
        "nonmaximal-figure",
        "nonmaximal-divergence",
    ];
    let printed_as_figure = FIGURE_NONMAXIMAL.iter().all(|s| parse(s).map(|f| f.to_string() == *s).unwrap_or(false));
    let ok = claims.iter().all(|c| r.claim_holds(c)) && printed_as_figure;
    let small = r.tally("length-bound").held / SUBMAXIMAL_RULESETS.len();
    Line {
        id: "longest-paths",
        ok,
        detail: format!(
            "{small} sources with <= {SMALL_SYMBOLS} symbols x {} sets: bound {}, confluence {}, no revisit {}; non-maximal figure reproduced node for node: {} (its paths rejoin); divergence on {NONMAXIMAL_DIVERGENT}: {}",
            SUBMAXIMAL_RULESETS.len(),
            r.claim_holds("length-bound"),
            r.claim_holds("longest-confluence"),
            r.claim_holds("no-revisit"),
            r.claim_holds("nonmaximal-figure") && printed_as_figure,
            r.claim_holds("nonmaximal-divergence"),
        ),
    }
}

fn identities(run: &Run) -> Line {
    let r = run.check("translation-props");
    let mut bad = 0;
    let mut total = 0;
    for (rs, _) in IDENTITIES.iter().copied().chain([("r1_minus_and", "avigad_m_prime")]) {
        let t = r.tally(&format!("identity-{rs}"));
        bad += t.violated;
        total += t.held + t.violated;
    }
    // The Gödel row adds one relatedness instance.
    let expected = IDENTITIES.len() * (PROPOSITIONAL + QUANTIFIED) + PROPOSITIONAL + 1;
    let ok = bad == IDENTITY_MISMATCHES && total == expected;
    Line {
        id: "translation-identities",
        ok,
        detail: format!(
            "{} identities over {total} instances, {bad} mismatches (tolerance {IDENTITY_MISMATCHES})",
            IDENTITIES.len() + 1
        ),
    }
}

fn round_trip(run: &Run) -> Line {
    let t = run.check("translation-props").tally("round-trip");
    let ml = run.check("ml-monads");
    let ok = t.violated == 0 && t.held == PROPOSITIONAL * 11 && ml.claim_holds("r1-imp");
    Line {
        id: "soundness-round-trip",
        ok,
        detail: format!(
            "{} of {} (10 translations in IL + kuroda_ml in ML, {PROPOSITIONAL} formulas); r1 implication rule refuted in ML: {}",
            t.held,
            PROPOSITIONAL * 11,
            ml.claim_holds("r1-imp")
        ),
    }
}

fn avigad(run: &Run) -> Line {
    let t = run.check("translation-props").tally("avigad");
    // Per formula: the lemma, (1) against four translations, M <-> M', and
    // (2) for the tautologies.
    let ok = t.violated == 0 && t.held >= AVIGAD * 6;
    Line {
        id: "avigad",
        ok,
        detail: format!("{} instances on {AVIGAD} NNF formulas, {} violations", t.held, t.violated),
    }
}

fn monads(run: &Run) -> Line {
    let r = run.check("ml-monads");
    let c = r.tally("monad-connectives");
    let q = r.tally("monad-quantifiers");
    let ok =
        r.claim_holds("monad-connectives") && r.claim_holds("monad-quantifiers") && c.held == 4 * 5 && q.held == 4 * 2;
    Line {
        id: "monads",
        ok,
        detail: format!(
            "4 monads: {} connective and {} quantifier schemas of r1~ and r3' proved in ML",
            c.held, q.held
        ),
    }
}

fn kernel(run: &Run) -> Line {
    let r = run.check("kernel");
    let ok = ["glivenko", "ipc-vs-kripke", "monotone"].iter().all(|c| r.claim_holds(c));
    Line {
        id: "kernel-cross-checks",
        ok,
        detail: format!(
            "Glivenko {}/{PROPOSITIONAL}; IPC vs Kripke {}/{PROPOSITIONAL}; monotone on {} model sets",
            r.tally("glivenko").held,
            r.tally("ipc-vs-kripke").held,
            r.tally("monotone").held
        ),
    }
}

fn main() -> ExitCode {
    assert_eq!(builtin_ruleset("r1").unwrap().rules().len(), 4);
    let cfg = VerifyConfig {
        propositional: PROPOSITIONAL,
        quantified: QUANTIFIED,
        small_symbols: SMALL_SYMBOLS,
        ..VerifyConfig::default()
    };
    let start = Instant::now();
    let summary = run_all(&cfg, &[], &mut |_| {});
    let run = Run { summary, elapsed: start.elapsed() };
    let lines = [
        equiv_il(&run),
        maximal(&run),
        lengths(&run),
        corollaries(&run),
        identities(&run),
        round_trip(&run),
        avigad(&run),
        monads(&run),
        kernel(&run),
    ];
    for l in &lines {
        println!("{} {:<24} {}", if l.ok { "PASS" } else { "FAIL" }, l.id, l.detail);
    }
    println!("{}", run.summary.line());
    let failed: Vec<&str> =
        run.summary.results.iter().filter(|r| r.status == Status::Fail).map(|r| r.id.as_str()).collect();
    if lines.iter().all(|l| l.ok) && failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failing checks: {failed:?}");
        ExitCode::FAILURE
    }
}
