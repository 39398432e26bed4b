use super::rules::check_instance;
use super::{Justification, Proof, RuleKind, RuleSetName};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckResult {
    Valid,
    /// `step` is 1-based; 0 refers to the proof as a whole.
    Invalid { step: usize, reason: String },
}

impl CheckResult {
    pub fn is_valid(&self) -> bool {
        matches!(self, CheckResult::Valid)
    }
}

fn invalid(step: usize, reason: impl Into<String>) -> CheckResult {
    CheckResult::Invalid {
        step: step + 1,
        reason: reason.into(),
    }
}

/// Checks every step against the proof's theory and rule set.
pub fn check_proof(p: &Proof) -> CheckResult {
    if p.steps.is_empty() {
        return CheckResult::Invalid {
            step: 0,
            reason: "proof has no steps".into(),
        };
    }
    for (n, step) in p.steps.iter().enumerate() {
        let kind = step.justification.kind();
        if !p.rule_set.allows(kind) {
            return invalid(n, format!("rule {} is not part of {}", kind.name(), p.rule_set));
        }
        let premise_ids = step.justification.premises();
        if let Some(&bad) = premise_ids.iter().find(|&&k| k >= n) {
            return invalid(n, format!("premise {} does not precede the step", bad + 1));
        }
        let premises: Vec<_> = premise_ids.iter().map(|&k| &p.steps[k].formula).collect();
        if let Err(reason) = check_instance(&step.formula, &step.justification, &premises, &p.theory) {
            return invalid(n, reason);
        }
    }
    if p.rule_set == RuleSetName::Normalized {
        if let Err((n, reason)) = check_phases(p) {
            return invalid(n, reason);
        }
    }
    CheckResult::Valid
}

/// Phase order of a normalized derivation: hypotheses, their shifts, one
/// reflexive step, an accumulation chain, and a final projection.
fn check_phases(p: &Proof) -> Result<(), (usize, String)> {
    let steps = &p.steps;
    let mut n = 0;
    while n < steps.len() && steps[n].justification.kind() == RuleKind::Hyp {
        n += 1;
    }
    let hyp_end = n;
    while n < steps.len() && steps[n].justification.kind() == RuleKind::Shf {
        if let Justification::Shf(src, _) = steps[n].justification {
            if src >= hyp_end {
                return Err((n, "Shf must be applied to a hypothesis".into()));
            }
        }
        n += 1;
    }
    let shf_end = n;
    if n >= steps.len() || steps[n].justification.kind() != RuleKind::Ref {
        return Err((n.min(steps.len() - 1), "expected the reflexive step A ⇒ A".into()));
    }
    n += 1;
    while n < steps.len() && steps[n].justification.kind() == RuleKind::Acc {
        if let Justification::Acc(prev, q) = steps[n].justification {
            if prev != n - 1 {
                return Err((n, "Acc must extend the preceding step".into()));
            }
            if q >= shf_end {
                return Err((n, "Acc must use a hypothesis or one of its shifts".into()));
            }
        }
        n += 1;
    }
    match steps.get(n).map(|s| s.justification) {
        Some(Justification::Pro(prev)) if prev == n - 1 => {}
        Some(_) => return Err((n, "expected the final Pro step".into())),
        None => return Err((steps.len() - 1, "proof does not end with Pro".into())),
    }
    if n + 1 != steps.len() {
        return Err((n + 1, "steps after the final Pro".into()));
    }
    Ok(())
}
