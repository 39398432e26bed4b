//! Rule mining from timed data and redundancy removal.
//!
//! Candidate rules `A ⇒ B` are built from frequent sets `S = A ∪ B` anchored
//! at time 0 with `u(S) ≤ maxspan`, split so that `u(A) ≤ l(B)`.
//!
//! Support of a set is its number of embeddings (shifts `i` with `S+i ⊆ M`).
//! Confidence of `A ⇒ B` is `support(A ∪ B)` divided by the number of
//! embeddings of `A` whose whole rule window `[i + l(A ∪ B), i + u(A ∪ B)]`
//! lies inside the observation horizon. Embeddings too close to the end of the
//! data cannot confirm or refute the consequent and are not counted, so a
//! rule with confidence 1 has no counterexample inside the horizon.

use std::collections::HashSet;

use num_rational::Ratio;
use rayon::prelude::*;

use crate::closure::{decide_predictive_entailment, EntailmentStatus};
use crate::error::{Error, Result};
use crate::semantics::embeddings;
use crate::timed::{Attr, AttributeSet, Implication, Theory, TimedAttribute};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiningParams {
    pub maxspan: i64,
    pub min_support: usize,
    pub min_confidence: Ratio<u64>,
    pub max_antecedent: usize,
    pub max_consequent: usize,
    /// Worker threads for candidate evaluation; 1 runs sequentially.
    pub jobs: usize,
}

impl MiningParams {
    pub fn new(maxspan: i64, min_support: usize, min_confidence: Ratio<u64>) -> Result<Self> {
        let p = MiningParams {
            maxspan,
            min_support,
            min_confidence,
            max_antecedent: 3,
            max_consequent: 3,
            jobs: 1,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.maxspan < 0 {
            return Err(Error::InvalidParams("maxspan must be non-negative".into()));
        }
        if self.min_support < 1 {
            return Err(Error::InvalidParams("minimum support must be at least 1".into()));
        }
        let c = self.min_confidence;
        if *c.numer() == 0 || c > Ratio::from_integer(1) {
            return Err(Error::InvalidParams("minimum confidence must lie in (0, 1]".into()));
        }
        if self.max_antecedent < 1 || self.max_consequent < 1 {
            return Err(Error::InvalidParams("size caps must be at least 1".into()));
        }
        if self.max_antecedent + self.max_consequent > 16 {
            return Err(Error::InvalidParams("rules may have at most 16 atoms".into()));
        }
        if self.jobs < 1 {
            return Err(Error::InvalidParams("jobs must be at least 1".into()));
        }
        Ok(())
    }
}

/// Parses `1`, `0.9` or `9/10`.
pub fn parse_confidence(text: &str) -> Result<Ratio<u64>> {
    let bad = || Error::InvalidParams(format!("invalid confidence {text:?}"));
    let text = text.trim();
    let r = if let Some((n, d)) = text.split_once('/') {
        let n: u64 = n.trim().parse().map_err(|_| bad())?;
        let d: u64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        Ratio::new(n, d)
    } else if let Some((int, frac)) = text.split_once('.') {
        if frac.is_empty() || frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let scale = 10u64.pow(frac.len() as u32);
        let frac: u64 = frac.parse().map_err(|_| bad())?;
        let n = int.checked_mul(scale).and_then(|x| x.checked_add(frac)).ok_or_else(bad)?;
        Ratio::new(n, scale)
    } else {
        Ratio::from_integer(text.parse().map_err(|_| bad())?)
    };
    if *r.numer() == 0 || r > Ratio::from_integer(1) {
        return Err(Error::InvalidParams(format!("confidence {text} is outside (0, 1]")));
    }
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinedRule {
    pub rule: Implication,
    pub support: usize,
    pub confidence: Ratio<u64>,
}

/// Number of shifts `i` with `S + i ⊆ M`.
pub fn support(m: &AttributeSet, s: &AttributeSet) -> Result<usize> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(embeddings(s, m).count())
}

fn par_map<T, R, F>(pool: Option<&rayon::ThreadPool>, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match pool {
        Some(pool) => pool.install(|| items.par_iter().map(&f).collect()),
        None => items.iter().map(f).collect(),
    }
}

/// Mines with the horizon taken from the bounds of `m`.
pub fn mine(m: &AttributeSet, params: &MiningParams) -> Result<Vec<MinedRule>> {
    match m.bounds() {
        Ok((lo, hi)) => mine_within(m, lo, hi, params),
        Err(_) => {
            params.validate()?;
            Ok(Vec::new())
        }
    }
}

/// Mines rules from `m` observed over the time range `[lo, hi]`.
pub fn mine_within(m: &AttributeSet, lo: i64, hi: i64, params: &MiningParams) -> Result<Vec<MinedRule>> {
    params.validate()?;
    if m.is_empty() {
        return Ok(Vec::new());
    }
    let pool = if params.jobs > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(params.jobs)
                .build()
                .map_err(|e| Error::InvalidParams(e.to_string()))?,
        )
    } else {
        None
    };
    let pool = pool.as_ref();

    let mut attrs: Vec<Attr> = m.iter().map(|a| a.attr).collect();
    attrs.sort();
    attrs.dedup();
    let items: Vec<TimedAttribute> = attrs
        .iter()
        .flat_map(|&a| (0..=params.maxspan).map(move |t| TimedAttribute::new(a, t)))
        .collect();
    let max_size = params.max_antecedent + params.max_consequent;

    // Level-wise growth of frequent sets containing a time-0 atom.
    let seeds: Vec<AttributeSet> = attrs
        .iter()
        .map(|&a| std::iter::once(TimedAttribute::new(a, 0)).collect())
        .collect();
    let mut level: Vec<(AttributeSet, usize)> = par_map(pool, &seeds, |s| (s.clone(), embeddings(s, m).count()))
        .into_iter()
        .filter(|(_, n)| *n >= params.min_support)
        .collect();
    let mut frequent: Vec<(AttributeSet, usize)> = Vec::new();
    let mut seen: HashSet<AttributeSet> = level.iter().map(|(s, _)| s.clone()).collect();
    while !level.is_empty() {
        let mut candidates = Vec::new();
        for (s, _) in &level {
            if s.len() >= max_size {
                continue;
            }
            for it in &items {
                if s.contains(it) {
                    continue;
                }
                let mut t = s.clone();
                t.insert(*it);
                if seen.insert(t.clone()) {
                    candidates.push(t);
                }
            }
        }
        frequent.append(&mut level);
        level = par_map(pool, &candidates, |s| (s.clone(), embeddings(s, m).count()))
            .into_iter()
            .filter(|(_, n)| *n >= params.min_support)
            .collect();
    }

    let per_set = par_map(pool, &frequent, |(s, n)| split_rules(m, lo, hi, s, *n, params));
    let mut rules: Vec<MinedRule> = per_set.into_iter().flatten().collect();
    rules.sort_by(|a, b| a.rule.cmp(&b.rule));
    Ok(rules)
}

/// All admissible splits of a frequent set into `A ⇒ B` meeting the confidence bound.
fn split_rules(m: &AttributeSet, lo: i64, hi: i64, s: &AttributeSet, sup: usize, params: &MiningParams) -> Vec<MinedRule> {
    let atoms: Vec<TimedAttribute> = s.iter().copied().collect();
    let (ls, us) = match s.bounds() {
        Ok(b) => b,
        Err(_) => return Vec::new(),
    };
    let n = atoms.len();
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) - 1 {
        let (a, b): (AttributeSet, AttributeSet) = {
            let mut a = AttributeSet::new();
            let mut b = AttributeSet::new();
            for (k, &x) in atoms.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    a.insert(x);
                } else {
                    b.insert(x);
                }
            }
            (a, b)
        };
        if a.len() > params.max_antecedent || b.len() > params.max_consequent {
            continue;
        }
        let rule = Implication::new(a, b);
        if !rule.is_predictive() || rule.antecedent.lower() != Some(0) {
            continue;
        }
        let observable = embeddings(&rule.antecedent, m)
            .filter(|&i| {
                ls.checked_add(i).is_some_and(|x| x >= lo) && us.checked_add(i).is_some_and(|x| x <= hi)
            })
            .count();
        if observable == 0 {
            continue;
        }
        let confidence = Ratio::new(sup as u64, observable as u64);
        if confidence >= params.min_confidence {
            out.push(MinedRule {
                rule,
                support: sup,
                confidence,
            });
        }
    }
    out
}

pub fn rules_to_theory(rules: &[MinedRule]) -> Theory {
    rules.iter().map(|r| r.rule.clone()).collect()
}

fn ratio_text(r: Ratio<u64>) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Tab-separated sidecar report: rule, support, confidence.
pub fn report_tsv(rules: &[MinedRule]) -> String {
    let mut out = String::from("rule\tsupport\tconfidence\n");
    for r in rules {
        out.push_str(&format!("{}\t{}\t{}\n", r.rule, r.support, ratio_text(r.confidence)));
    }
    out
}

/// Removes, in one pass over the input order, every formula entailed by the
/// formulas still present. The result entails everything removed and none of
/// its formulas is entailed by the others.
pub fn reduce_theory(sigma: &Theory) -> Result<Theory> {
    sigma.require_predictive()?;
    let mut current = sigma.clone();
    let mut j = 0;
    while j < current.len() {
        let rest = current.without(j);
        let v = decide_predictive_entailment(&rest, &current.formulas[j])?;
        if v.status == EntailmentStatus::Entailed {
            current = rest;
        } else {
            j += 1;
        }
    }
    Ok(current)
}
