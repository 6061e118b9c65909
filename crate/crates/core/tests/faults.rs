//! The suite has to notice broken inputs, not only pass on good ones.

use negtrans::rewrite::{builtin_ruleset, RuleSet};
use negtrans::verify::{check_simplification_props, Status, VerifyConfig};

fn corrupted_r1(extra: &str) -> RuleSet {
    let text = builtin_ruleset("r1").unwrap().to_text() + extra;
    RuleSet::from_text("r1", &text).unwrap()
}

#[test]
fn injected_quantifier_rule_fails_simplification_props() {
    // Drops the inner double negation under the universal: not IL-valid.
    let bad = corrupted_r1("~~forall x. ~~A => ~~forall x. A\n");
    let mut cfg = VerifyConfig::default();
    cfg.claimed_maximal[0] = bad;
    let r = check_simplification_props(&cfg);
    assert_eq!(r.status, Status::Fail);
    assert!(!r.claim_holds("rules-valid"));
    assert!(!r.claim_holds("four-maximal"));
}

#[test]
fn missing_rule_fails_maximality() {
    let mut cfg = VerifyConfig::default();
    cfg.claimed_maximal[1] = builtin_ruleset("r2_minus_or").unwrap();
    let r = check_simplification_props(&cfg);
    assert_eq!(r.status, Status::Fail);
    assert!(!r.claim_holds("maximality"));
}
