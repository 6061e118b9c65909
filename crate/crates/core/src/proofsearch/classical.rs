//! Truth-table evaluation, 64 valuations per machine word.

use std::collections::BTreeMap;

use crate::formula::Formula;

/// Atoms beyond this make the table too large to enumerate.
pub const MAX_ATOMS: usize = 24;

pub(crate) fn atoms(f: &Formula) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    f.visit(&mut |g| {
        if let Formula::Atom(..) = g {
            let key = g.to_string();
            let next = out.len();
            out.entry(key).or_insert(next);
        }
    });
    out
}

fn eval(f: &Formula, atoms: &BTreeMap<String, usize>, words: &[u64]) -> u64 {
    match f {
        Formula::Atom(..) => words[atoms[&f.to_string()]],
        Formula::Bot => 0,
        Formula::Top => !0,
        Formula::Neg(a) => !eval(a, atoms, words),
        Formula::And(a, b) => eval(a, atoms, words) & eval(b, atoms, words),
        Formula::Or(a, b) => eval(a, atoms, words) | eval(b, atoms, words),
        Formula::Imp(a, b) => !eval(a, atoms, words) | eval(b, atoms, words),
        Formula::Forall(..) | Formula::Exists(..) => unreachable!("quantified input"),
    }
}

/// Whether `f` is true under every valuation of its atoms. Returns a
/// falsifying valuation (atom names set true) otherwise.
pub(crate) fn tautology(f: &Formula) -> Result<(), Vec<String>> {
    let table = atoms(f);
    let n = table.len();
    let total: u64 = 1 << n;
    let chunks = total.div_ceil(64);
    let mut words = vec![0u64; n];
    for chunk in 0..chunks {
        for (i, w) in words.iter_mut().enumerate() {
            *w = (0..64u64).filter(|bit| ((chunk * 64 + bit) >> i) & 1 == 1).fold(0, |acc, bit| acc | (1 << bit));
        }
        let valid_bits = if total - chunk * 64 >= 64 { !0u64 } else { (1u64 << (total - chunk * 64)) - 1 };
        let value = eval(f, &table, &words) & valid_bits;
        if value != valid_bits {
            let bit = (!value & valid_bits).trailing_zeros() as u64;
            let row = chunk * 64 + bit;
            return Err(table.iter().filter(|&(_, &i)| (row >> i) & 1 == 1).map(|(name, _)| name.clone()).collect());
        }
    }
    Ok(())
}
