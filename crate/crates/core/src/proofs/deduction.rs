//! Deduction theorem: from a proof that uses an assumption `∅ ⇒ A`, build a
//! proof without it whose antecedent collects the shifted copies of `A`.

use crate::error::{Error, Result};
use crate::timed::{AttributeSet, Implication};

use super::{check_proof, CheckResult, Justification, Proof, RuleSetName};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeductionWitness {
    /// Distinct shifts `i` such that the copies `A + i` are needed, ascending.
    pub shifts: Vec<i64>,
    /// Proof of `⋃ (A + i) ∪ C ⇒ D` over the theory without the assumption,
    /// where `C ⇒ D` is the input's conclusion.
    pub proof: Proof,
}

/// `p` must be a valid `AX_CUT_SHF` proof whose theory contains the
/// assumption `∅ ⇒ A` at index `assumption`.
///
/// Every step `C ⇒ D` becomes `C ∪ U ⇒ D` with `U` a union of shifted
/// copies of `A`: axioms and hypotheses start with `U = A`, (Cut) joins the
/// copies of both premises and (Shf) shifts them along.
pub fn extract_deduction_witness(p: &Proof, assumption: usize) -> Result<DeductionWitness> {
    if p.rule_set != RuleSetName::AxCutShf {
        return Err(Error::InvalidInput("deduction witness needs an AX_CUT_SHF proof".into()));
    }
    if let CheckResult::Invalid { step, reason } = check_proof(p) {
        return Err(Error::InvalidInput(format!("step {step}: {reason}")));
    }
    let assumed = p
        .theory
        .get(assumption)
        .ok_or_else(|| Error::InvalidInput(format!("theory has no formula {}", assumption + 1)))?;
    if !assumed.antecedent.is_empty() {
        return Err(Error::InvalidInput("assumption must have an empty antecedent".into()));
    }
    let a = &assumed.consequent;
    let sigma = p.theory.without(assumption);
    let remap = |k: usize| if k > assumption { k - 1 } else { k };

    let mut out = Proof::new(sigma, RuleSetName::AxCutShf);
    // Per input step: output step index, shift list and the union of copies.
    let mut done: Vec<(usize, Vec<i64>, AttributeSet)> = Vec::with_capacity(p.len());
    for step in &p.steps {
        let phi = &step.formula;
        let entry = match step.justification {
            Justification::Ax => {
                let idx = out.push(
                    Implication::new(phi.antecedent.union(a), phi.consequent.clone()),
                    Justification::Ax,
                );
                (idx, vec![0], a.clone())
            }
            Justification::Hyp(k) if k == assumption => {
                let idx = out.push(Implication::new(a.clone(), a.clone()), Justification::Ax);
                (idx, vec![0], a.clone())
            }
            Justification::Hyp(k) => {
                let hyp = out.push(phi.clone(), Justification::Hyp(remap(k)));
                let wide = phi.antecedent.union(a);
                let ax = out.push(Implication::new(wide.clone(), phi.antecedent.clone()), Justification::Ax);
                let idx = out.push(Implication::new(wide, phi.consequent.clone()), Justification::Cut(ax, hyp));
                (idx, vec![0], a.clone())
            }
            Justification::Cut(q, r) => {
                let (qi, qs, qu) = &done[q];
                let (ri, rs, ru) = &done[r];
                let u = qu.union(ru);
                let idx = out.push(
                    Implication::new(phi.antecedent.union(&u), phi.consequent.clone()),
                    Justification::Cut(*qi, *ri),
                );
                let shifts = qs.iter().chain(rs).copied().collect();
                (idx, shifts, u)
            }
            Justification::Shf(q, i) => {
                let (qi, qs, qu) = &done[q];
                let shifted = out.formula(*qi).shift(i)?;
                let idx = out.push(shifted, Justification::Shf(*qi, i));
                let shifts = qs
                    .iter()
                    .map(|s| s.checked_add(i).ok_or(Error::IntegerOverflow { shift: i }))
                    .collect::<Result<Vec<_>>>()?;
                (idx, shifts, qu.shift(i)?)
            }
            j => {
                return Err(Error::InvalidInput(format!(
                    "{} is not an AX_CUT_SHF rule",
                    j.kind().name()
                )))
            }
        };
        done.push(entry);
    }
    let (_, mut shifts, _) = done.pop().expect("checked proofs are non-empty");
    shifts.sort_unstable();
    shifts.dedup();
    Ok(DeductionWitness { shifts, proof: out })
}

/// `⋃ (A + i)` over the given shifts.
pub fn union_of_shifts(a: &AttributeSet, shifts: &[i64]) -> Result<AttributeSet> {
    let mut u = AttributeSet::new();
    for &i in shifts {
        u.extend(a.shift(i)?);
    }
    Ok(u)
}
