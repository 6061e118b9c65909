use std::collections::{BTreeMap, BTreeSet};

use negtrans::kripke::{check_monotone, find_countermodel, Fact, KripkeModel, SearchBounds};
use negtrans::proofsearch::{prove, prove_cpc, prove_ipc, prove_minimal, Logic};
use negtrans::rewrite::{builtin_ruleset, expected_length, standard_path, RuleSet, BUILTIN_RULESETS};
use negtrans::translations::{apply_translation, builtin, dual, nnf, NnfFormula, BUILTIN_NAMES};
use negtrans::verify::{gen_formulas, GeneratorConfig, LENGTH_RULESETS};
use negtrans::{parse, Formula, Term};
use proptest::prelude::*;

const ATOMS: [&str; 3] = ["P", "Q", "R"];

fn prop_formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        6 => prop::sample::select(&ATOMS[..]).prop_map(Formula::atom),
        1 => Just(Formula::Bot),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::neg),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::imp(a, b)),
        ]
    })
}

/// Closed formulas over unary `A`, `B` and nullary `P`, variables `x`, `y`.
fn fo_formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        (prop::sample::select(vec!["A", "B"]), prop::sample::select(vec!["x", "y"]))
            .prop_map(|(p, x)| Formula::pred(p, vec![Term::var(x)])),
        Just(Formula::atom("P")),
    ];
    let body = leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::neg),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::imp(a, b)),
            (any::<bool>(), prop::sample::select(vec!["x", "y"]), inner).prop_map(|(all, x, a)| {
                if all {
                    Formula::forall(x, a)
                } else {
                    Formula::exists(x, a)
                }
            }),
        ]
    });
    body.prop_map(|f| f.free_vars().into_iter().fold(f, |acc, x| Formula::forall(x, acc)))
}

/// The parser renames a binder that shadows an enclosing one.
fn shadows(f: &Formula, bound: &mut Vec<String>) -> bool {
    match f.as_quant() {
        Some((_, x, body)) => {
            if bound.iter().any(|b| b == x) {
                return true;
            }
            bound.push(x.to_string());
            let s = shadows(body, bound);
            bound.pop();
            s
        }
        None => f.children().into_iter().any(|c| shadows(c, bound)),
    }
}

fn any_formula() -> impl Strategy<Value = Formula> {
    prop_oneof![prop_formula(), fo_formula().prop_filter("no shadowed binder", |f| !shadows(f, &mut vec![]))]
}

fn nnf_formula() -> impl Strategy<Value = NnfFormula> {
    prop_formula().prop_map(|f| nnf(&f))
}

// Independent oracle: truth-table evaluation.
fn eval(f: &Formula, v: &BTreeSet<String>) -> bool {
    match f {
        Formula::Atom(p, _) => v.contains(p),
        Formula::Bot => false,
        Formula::Top => true,
        Formula::Neg(a) => !eval(a, v),
        Formula::And(a, b) => eval(a, v) && eval(b, v),
        Formula::Or(a, b) => eval(a, v) || eval(b, v),
        Formula::Imp(a, b) => !eval(a, v) || eval(b, v),
        Formula::Forall(..) | Formula::Exists(..) => unreachable!("propositional only"),
    }
}

fn one_world(v: &BTreeSet<String>) -> KripkeModel {
    KripkeModel {
        order: vec![vec![true]],
        domains: vec![BTreeSet::from([0])],
        valuation: v.iter().map(|p| Fact { world: 0, predicate: p.clone(), args: vec![] }).collect(),
    }
}

/// A chain of `n` worlds with each atom true from some world on.
fn chain(n: usize, from: &[usize]) -> KripkeModel {
    let order = (0..n).map(|w| (0..n).map(|v| w <= v).collect()).collect();
    let mut valuation = BTreeSet::new();
    for (atom, &start) in ATOMS.iter().zip(from) {
        for w in start..n {
            valuation.insert(Fact { world: w, predicate: atom.to_string(), args: vec![] });
        }
    }
    KripkeModel { order, domains: vec![BTreeSet::from([0]); n], valuation }
}

fn ruleset() -> impl Strategy<Value = RuleSet> {
    prop::sample::select(&BUILTIN_RULESETS[..]).prop_map(|n| builtin_ruleset(n).unwrap())
}

fn length_ruleset() -> impl Strategy<Value = RuleSet> {
    prop::sample::select(&LENGTH_RULESETS[..]).prop_map(|n| builtin_ruleset(n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_parse_round_trip(f in any_formula()) {
        prop_assert_eq!(parse(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn reparse_is_a_fixed_point(f in fo_formula()) {
        let once = parse(&f.to_string()).unwrap();
        prop_assert!(!shadows(&once, &mut vec![]));
        prop_assert_eq!(parse(&once.to_string()).unwrap(), once);
    }

    #[test]
    fn kolmogorov_keeps_connective_counts(f in prop_oneof![prop_formula(), fo_formula()]) {
        let ko = apply_translation(&builtin("kolmogorov").unwrap(), &f.expand_neg());
        let (a, b) = (f.expand_neg().count_connectives(), ko.count_connectives());
        prop_assert_eq!((a.and, a.or, a.imp, a.forall, a.exists), (b.and, b.or, b.imp, b.forall, b.exists));
    }

    #[test]
    fn expand_neg_idempotent(f in prop_formula()) {
        let e = f.expand_neg();
        prop_assert!(!e.contains_neg());
        prop_assert_eq!(e.expand_neg(), e);
    }

    #[test]
    fn kuroda_is_double_negation_without_quantifiers(f in prop_formula()) {
        let k = apply_translation(&builtin("kuroda").unwrap(), &f);
        prop_assert_eq!(prove_ipc(&Formula::iff(k, Formula::dneg(f))).unwrap().is_proved(), true);
    }

    #[test]
    fn dual_is_an_involution(a in nnf_formula()) {
        prop_assert_eq!(dual(&dual(&a)), a.clone());
        let f = a.to_formula();
        // No implication; negation only on literals.
        let mut ok = true;
        f.visit(&mut |g| match g {
            Formula::Imp(..) => ok = false,
            Formula::Neg(x) => ok &= x.is_atomic(),
            _ => {}
        });
        prop_assert!(ok);
    }

    #[test]
    fn nnf_is_classically_equivalent(f in prop_formula()) {
        let n = nnf(&f).to_formula();
        for bits in 0u8..8 {
            let v: BTreeSet<String> = ATOMS.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, a)| a.to_string()).collect();
            prop_assert_eq!(eval(&f, &v), eval(&n, &v));
        }
    }

    #[test]
    fn logics_are_nested(f in prop_formula()) {
        let (m, i, c) = (prove_minimal(&f).unwrap(), prove_ipc(&f).unwrap(), prove_cpc(&f).unwrap());
        prop_assert!(!m.is_proved() || i.is_proved());
        prop_assert!(!i.is_proved() || c.is_proved());
    }

    #[test]
    fn classical_decision_matches_truth_tables(f in prop_formula()) {
        let tautology = (0u8..8).all(|bits| {
            let v = ATOMS.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, a)| a.to_string()).collect();
            eval(&f, &v)
        });
        prop_assert_eq!(prove_cpc(&f).unwrap().is_proved(), tautology);
    }

    #[test]
    fn one_world_forcing_is_classical(f in prop_formula(), bits in 0u8..8) {
        let v: BTreeSet<String> = ATOMS.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, a)| a.to_string()).collect();
        let m = one_world(&v);
        prop_assert_eq!(m.forces(0, &BTreeMap::new(), &f).unwrap(), eval(&f, &v));
    }

    #[test]
    fn forcing_is_monotone(f in prop_formula(), n in 1usize..4, from in prop::collection::vec(0usize..4, 3)) {
        let m = chain(n, &from);
        prop_assert!(check_monotone(&m));
        let env = BTreeMap::new();
        for w in 0..n {
            for v in w..n {
                if m.forces(w, &env, &f).unwrap() {
                    prop_assert!(m.forces(v, &env, &f).unwrap());
                }
            }
        }
    }

    #[test]
    fn ipc_refutation_has_a_countermodel(f in prop_formula()) {
        let bounds = SearchBounds { max_worlds: 5, ..SearchBounds::default() };
        let proved = prove_ipc(&f).unwrap().is_proved();
        let model = find_countermodel(&f, &bounds).unwrap();
        // Small formulas: refutations show up within five worlds.
        prop_assert_eq!(proved, model.is_none());
        if let Some(cm) = model {
            prop_assert!(!cm.model.forces(cm.world, &BTreeMap::new(), &f).unwrap());
        }
    }

    #[test]
    fn standard_length_counts_symbols(f in any_formula(), rs in length_ruleset()) {
        let ko = apply_translation(&builtin("kolmogorov").unwrap(), &f);
        prop_assert_eq!(standard_path(&ko, &rs).len(), expected_length(&f, &rs));
    }

    #[test]
    fn ruleset_text_round_trip(rs in ruleset()) {
        let back = RuleSet::from_text(&rs.name, &rs.to_text()).unwrap();
        prop_assert_eq!(back.rules(), rs.rules());
    }

    #[test]
    fn generator_is_deterministic(seed in any::<u64>()) {
        let cfg = GeneratorConfig::quantified(seed);
        let a = gen_formulas(&cfg, 20);
        prop_assert_eq!(&a, &gen_formulas(&cfg, 20));
        prop_assert!(a.iter().all(|f| f.free_vars().is_empty()));
    }

    #[test]
    fn translations_print_parseable(f in any_formula(), name in prop::sample::select(&BUILTIN_NAMES[..])) {
        let t = apply_translation(&builtin(name).unwrap(), &f);
        prop_assert_eq!(parse(&t.to_string()).unwrap(), t);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fo_proof_excludes_countermodel(f in fo_formula()) {
        if prove(&f, Logic::Intuitionistic, 8).unwrap().is_proved() {
            let bounds = SearchBounds { max_worlds: 3, max_domain: 2, ..SearchBounds::default() };
            prop_assert!(find_countermodel(&f, &bounds).unwrap().is_none());
        }
    }

    #[test]
    fn cli_translate_output_reparses(f in any_formula(), name in prop::sample::select(&BUILTIN_NAMES[..])) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = negtrans::cli::run(["negtrans", "translate", "-t", name, &f.to_string()], &mut out, &mut err);
        prop_assert_eq!(code, 0);
        let text = String::from_utf8(out).unwrap();
        let want = apply_translation(&builtin(name).unwrap(), &f);
        prop_assert_eq!(parse(text.trim()).unwrap(), want);
    }
}
