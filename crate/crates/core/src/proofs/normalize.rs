//! Normalized proofs extracted from closure traces.

use std::collections::hash_map::Entry;
use std::collections::{BTreeSet, HashMap};

use crate::closure::{decide_predictive_entailment, ClosureTrace, EntailmentStatus};
use crate::error::{Error, Result};
use crate::timed::{Implication, Theory, TimedAttribute};

use super::{Justification, Proof, RuleSetName};

/// A normalized proof of `f`, or `None` when `sigma` does not entail it.
pub fn prove_by_closure(sigma: &Theory, f: &Implication) -> Result<Option<Proof>> {
    let verdict = decide_predictive_entailment(sigma, f)?;
    if verdict.status != EntailmentStatus::Entailed {
        return Ok(None);
    }
    normalized_from_trace(sigma, f, &verdict.trace).map(Some)
}

/// Builds the five-phase proof of `f` from a trace seeded with its
/// antecedent. Only the firings needed for the consequent are kept, in
/// trace order.
pub fn normalized_from_trace(sigma: &Theory, f: &Implication, trace: &ClosureTrace) -> Result<Proof> {
    let a = &f.antecedent;
    if &trace.seed != a || !f.consequent.is_subset(&trace.final_set) {
        return Err(Error::InvalidInput("trace does not derive the formula".into()));
    }

    let mut producer: HashMap<TimedAttribute, usize> = HashMap::new();
    for (n, firing) in trace.firings.iter().enumerate() {
        for &x in &firing.added {
            producer.entry(x).or_insert(n);
        }
    }
    let mut used: BTreeSet<usize> = BTreeSet::new();
    let mut pending: Vec<TimedAttribute> = f.consequent.difference(a).into_iter().collect();
    while let Some(x) = pending.pop() {
        let n = *producer
            .get(&x)
            .ok_or_else(|| Error::InvalidInput(format!("trace never derives {x}")))?;
        if used.insert(n) {
            let firing = &trace.firings[n];
            let src = sigma
                .get(firing.source)
                .ok_or_else(|| Error::InvalidInput("trace cites a missing formula".into()))?;
            for y in src.antecedent.shift(firing.shift)? {
                if !a.contains(&y) {
                    pending.push(y);
                }
            }
        }
    }
    let chain: Vec<(usize, i64)> = used
        .iter()
        .map(|&n| (trace.firings[n].source, trace.firings[n].shift))
        .collect();

    let mut proof = Proof::new(sigma.clone(), RuleSetName::Normalized);
    let sources: BTreeSet<usize> = chain.iter().map(|&(k, _)| k).collect();
    let mut hyp_step = HashMap::new();
    for &k in &sources {
        hyp_step.insert(k, proof.push(sigma.formulas[k].clone(), Justification::Hyp(k)));
    }
    let mut shf_step = HashMap::new();
    for &(k, i) in &chain {
        if let Entry::Vacant(slot) = shf_step.entry((k, i)) {
            slot.insert(proof.push(sigma.formulas[k].shift(i)?, Justification::Shf(hyp_step[&k], i)));
        }
    }
    let mut prev = proof.push(Implication::new(a.clone(), a.clone()), Justification::Ref);
    let mut acc = a.clone();
    for &(k, i) in &chain {
        let inst = shf_step[&(k, i)];
        acc = acc.union(&proof.formula(inst).consequent);
        prev = proof.push(Implication::new(a.clone(), acc.clone()), Justification::Acc(prev, inst));
    }
    proof.push(f.clone(), Justification::Pro(prev));
    Ok(proof)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proofs::{check_proof, CheckResult};
    use crate::textio::{parse_implication, parse_theory};

    fn theory(text: &str) -> Theory {
        parse_theory(text).unwrap().theory
    }

    #[test]
    fn subset_sum_accumulation() {
        let s = theory("{y@0} => {y@5}\n{y@0} => {y@7}\n{y@0} => {y@11}");
        let f = parse_implication("{y@0} => {y@31}").unwrap();
        let p = prove_by_closure(&s, &f).unwrap().unwrap();
        assert_eq!(check_proof(&p), CheckResult::Valid);
        let shifts: Vec<(usize, i64)> = p
            .steps
            .iter()
            .filter_map(|s| match s.justification {
                Justification::Shf(h, i) => match p.steps[h].justification {
                    Justification::Hyp(k) => Some((k, i)),
                    _ => None,
                },
                _ => None,
            })
            .collect();
        assert_eq!(shifts, [(0, 0), (0, 5), (0, 10), (0, 15), (2, 20)]);
        let last_acc = &p.steps[p.len() - 2].formula;
        assert_eq!(last_acc.to_string(), "{y@0} => {y@0, y@5, y@10, y@15, y@20, y@31}");
    }

    #[test]
    fn trivial_projection() {
        let s = theory("{a@0} => {b@1}");
        let f = parse_implication("{a@0, c@2} => {c@2}").unwrap();
        let p = prove_by_closure(&s, &f).unwrap().unwrap();
        assert_eq!(p.len(), 2);
        assert!(check_proof(&p).is_valid());
    }

    #[test]
    fn weather_basis_projection() {
        let s = theory(
            "{Wm@0} => {Tc@4}\n{Wl@0} => {Wm@1, Tc@3}\n{Rn@0, Rn@3} => {Tc@3}\n{Rn@0, Wm@2} => {Tc@3}\n{Tc@0, Rn@5} => {Tc@5}",
        );
        let f = parse_implication("{Wl@0} => {Tc@3}").unwrap();
        let p = prove_by_closure(&s, &f).unwrap().unwrap();
        assert!(check_proof(&p).is_valid());
        assert!(p.len() <= 6);
    }

    #[test]
    fn refuted_query_gives_none() {
        let s = theory("{y@0} => {y@5}\n{y@0} => {y@7}\n{y@0} => {y@11}");
        let f = parse_implication("{y@0} => {y@13}").unwrap();
        assert_eq!(prove_by_closure(&s, &f).unwrap(), None);
    }
}
