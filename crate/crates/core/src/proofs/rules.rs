//! Rule instances: computing conclusions and checking claimed ones.

use crate::error::{Error, Result};
use crate::timed::{AttributeSet, Implication, Theory};

use super::Justification;

/// A rule together with its premises and parameters.
#[derive(Debug, Clone, Copy)]
pub enum RuleApp<'a> {
    /// `A ∪ B ⇒ A`.
    Ax { a: &'a AttributeSet, b: &'a AttributeSet },
    /// `A ⇒ A`.
    Ref { a: &'a AttributeSet },
    /// From `A ⇒ B` and `B ∪ C ⇒ D` infer `A ∪ C ⇒ D`.
    Cut { p: &'a Implication, q: &'a Implication },
    /// From `A ⇒ B` infer `A+i ⇒ B+i`.
    Shf { p: &'a Implication, i: i64 },
    /// From `A ⇒ B` and `C ⇒ D` infer `A ∪ (C \ B) ⇒ D`.
    Sim { p: &'a Implication, q: &'a Implication },
    /// From `A ⇒ B+i` and `B ∪ C ⇒ D` infer `A ∪ (C+i) ⇒ D+i`.
    CutI { p: &'a Implication, q: &'a Implication, i: i64 },
    /// From `A ⇒ B+i` and `C ⇒ D` infer `A ∪ ((C \ B)+i) ⇒ D+i`.
    SimI { p: &'a Implication, q: &'a Implication, i: i64 },
    /// From `A ⇒ B ∪ C` and `C ⇒ D ∪ E` infer `A ⇒ B ∪ C ∪ D ∪ E`.
    Acc { p: &'a Implication, q: &'a Implication },
    /// From `A ⇒ B ∪ C` infer `A ⇒ B`.
    Pro { p: &'a Implication, b: &'a AttributeSet },
    /// From `A ⇒ B` and `A ⇒ C` infer `A ⇒ B ∪ C`.
    Add { p: &'a Implication, q: &'a Implication },
    /// From `A ⇒ C` infer `A ∪ B ⇒ C`.
    Wea { p: &'a Implication, b: &'a AttributeSet },
    /// From `B ⇒ C` infer `A ∪ B ⇒ A ∪ C`.
    Aug { p: &'a Implication, a: &'a AttributeSet },
    /// From `A ⇒ B` and `B ⇒ C` infer `A ⇒ C`.
    Tra { p: &'a Implication, q: &'a Implication },
}

fn mismatch<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::RuleMismatch(msg.into()))
}

/// The conclusion determined by a rule application. Schema-valued rules use
/// the smallest instance, e.g. `C := q.antecedent \ p.consequent` for (Cut).
pub fn apply_rule(app: RuleApp<'_>) -> Result<Implication> {
    match app {
        RuleApp::Ax { a, b } => Ok(Implication::new(a.union(b), a.clone())),
        RuleApp::Ref { a } => Ok(Implication::new(a.clone(), a.clone())),
        RuleApp::Cut { p, q } => {
            if !p.consequent.is_subset(&q.antecedent) {
                return mismatch("Cut: consequent of the first premise is not in the antecedent of the second");
            }
            let c = q.antecedent.difference(&p.consequent);
            Ok(Implication::new(p.antecedent.union(&c), q.consequent.clone()))
        }
        RuleApp::Shf { p, i } => p.shift(i),
        RuleApp::Sim { p, q } => Ok(Implication::new(
            p.antecedent.union(&q.antecedent.difference(&p.consequent)),
            q.consequent.clone(),
        )),
        RuleApp::CutI { p, q, i } => {
            let b = p.consequent.shift(i.checked_neg().ok_or(Error::IntegerOverflow { shift: i })?)?;
            if !b.is_subset(&q.antecedent) {
                return mismatch("CutI: shifted consequent of the first premise is not in the antecedent of the second");
            }
            let c = q.antecedent.difference(&b).shift(i)?;
            Ok(Implication::new(p.antecedent.union(&c), q.consequent.shift(i)?))
        }
        RuleApp::SimI { p, q, i } => {
            let b = p.consequent.shift(i.checked_neg().ok_or(Error::IntegerOverflow { shift: i })?)?;
            let c = q.antecedent.difference(&b).shift(i)?;
            Ok(Implication::new(p.antecedent.union(&c), q.consequent.shift(i)?))
        }
        RuleApp::Acc { p, q } => {
            if !q.antecedent.is_subset(&p.consequent) {
                return mismatch("Acc: antecedent of the second premise is not in the consequent of the first");
            }
            Ok(Implication::new(p.antecedent.clone(), p.consequent.union(&q.consequent)))
        }
        RuleApp::Pro { p, b } => {
            if !b.is_subset(&p.consequent) {
                return mismatch("Pro: projected set is not in the consequent");
            }
            Ok(Implication::new(p.antecedent.clone(), b.clone()))
        }
        RuleApp::Add { p, q } => {
            if p.antecedent != q.antecedent {
                return mismatch("Add: premises have different antecedents");
            }
            Ok(Implication::new(p.antecedent.clone(), p.consequent.union(&q.consequent)))
        }
        RuleApp::Wea { p, b } => Ok(Implication::new(p.antecedent.union(b), p.consequent.clone())),
        RuleApp::Aug { p, a } => Ok(Implication::new(a.union(&p.antecedent), a.union(&p.consequent))),
        RuleApp::Tra { p, q } => {
            if q.antecedent != p.consequent {
                return mismatch("Tra: antecedent of the second premise differs from the consequent of the first");
            }
            Ok(Implication::new(p.antecedent.clone(), q.consequent.clone()))
        }
    }
}

fn require(cond: bool, msg: &str) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

/// `lo ⊆ x ⊆ hi`.
fn between(lo: &AttributeSet, x: &AttributeSet, hi: &AttributeSet) -> bool {
    lo.is_subset(x) && x.is_subset(hi)
}

fn shifted(s: &AttributeSet, i: i64) -> std::result::Result<AttributeSet, String> {
    s.shift(i).map_err(|e| e.to_string())
}

/// Checks that `phi` is an instance of the justification's rule over the
/// given premises. Schema-valued rules accept every admissible choice of
/// their free sets.
pub(crate) fn check_instance(
    phi: &Implication,
    just: &Justification,
    premises: &[&Implication],
    theory: &Theory,
) -> std::result::Result<(), String> {
    let (a, b) = (&phi.antecedent, &phi.consequent);
    match *just {
        Justification::Hyp(k) => {
            let f = theory
                .get(k)
                .ok_or_else(|| format!("hypothesis {} does not exist", k + 1))?;
            require(f == phi, "formula differs from the cited hypothesis")
        }
        Justification::Ax => require(b.is_subset(a), "Ax: consequent is not contained in the antecedent"),
        Justification::Ref => require(a == b, "Ref: antecedent and consequent differ"),
        Justification::Cut(..) => {
            let (p, q) = (premises[0], premises[1]);
            require(p.consequent.is_subset(&q.antecedent), "Cut: B is not contained in B ∪ C")?;
            require(b == &q.consequent, "Cut: consequent differs from D")?;
            let lo = p.antecedent.union(&q.antecedent.difference(&p.consequent));
            let hi = p.antecedent.union(&q.antecedent);
            require(between(&lo, a, &hi), "Cut: antecedent is not A ∪ C")
        }
        Justification::Shf(_, i) => {
            let expect = premises[0].shift(i).map_err(|e| e.to_string())?;
            require(&expect == phi, "Shf: formula is not the shifted premise")
        }
        Justification::Sim(..) => {
            let expect = apply_rule(RuleApp::Sim {
                p: premises[0],
                q: premises[1],
            })
            .map_err(|e| e.to_string())?;
            require(&expect == phi, "Sim: formula is not A ∪ (C \\ B) ⇒ D")
        }
        Justification::CutI(_, _, i) => {
            let (p, q) = (premises[0], premises[1]);
            let base = shifted(&p.consequent, i.checked_neg().ok_or("shift overflow")?)?;
            require(base.is_subset(&q.antecedent), "CutI: B is not contained in B ∪ C")?;
            require(b == &shifted(&q.consequent, i)?, "CutI: consequent differs from D+i")?;
            let lo = p
                .antecedent
                .union(&shifted(&q.antecedent.difference(&base), i)?);
            let hi = p.antecedent.union(&shifted(&q.antecedent, i)?);
            require(between(&lo, a, &hi), "CutI: antecedent is not A ∪ (C+i)")
        }
        Justification::SimI(_, _, i) => {
            let expect = apply_rule(RuleApp::SimI {
                p: premises[0],
                q: premises[1],
                i,
            })
            .map_err(|e| e.to_string())?;
            require(&expect == phi, "SimI: formula is not A ∪ ((C \\ B)+i) ⇒ D+i")
        }
        Justification::Acc(..) => {
            let (p, q) = (premises[0], premises[1]);
            require(a == &p.antecedent, "Acc: antecedent differs from the first premise")?;
            require(q.antecedent.is_subset(&p.consequent), "Acc: C is not contained in B ∪ C")?;
            require(
                between(&p.consequent, b, &p.consequent.union(&q.consequent)),
                "Acc: consequent is not B ∪ C ∪ D",
            )
        }
        Justification::Pro(_) => {
            let p = premises[0];
            require(a == &p.antecedent, "Pro: antecedent differs from the premise")?;
            require(b.is_subset(&p.consequent), "Pro: consequent is not part of the premise consequent")
        }
        Justification::Add(..) => {
            let (p, q) = (premises[0], premises[1]);
            require(p.antecedent == q.antecedent, "Add: premises have different antecedents")?;
            require(a == &p.antecedent, "Add: antecedent differs from the premises")?;
            require(b == &p.consequent.union(&q.consequent), "Add: consequent is not B ∪ C")
        }
        Justification::Wea(_) => {
            let p = premises[0];
            require(p.antecedent.is_subset(a), "Wea: antecedent does not extend the premise")?;
            require(b == &p.consequent, "Wea: consequent differs from the premise")
        }
        Justification::Aug(_) => {
            let p = premises[0];
            require(p.antecedent.is_subset(a), "Aug: B is not contained in A ∪ B")?;
            let extra = a.difference(&p.antecedent);
            let core = extra.union(&p.consequent);
            require(core.is_subset(b), "Aug: consequent is not A ∪ C")?;
            require(b.difference(&core).is_subset(&p.antecedent), "Aug: consequent is not A ∪ C")
        }
        Justification::Tra(..) => {
            let (p, q) = (premises[0], premises[1]);
            require(q.antecedent == p.consequent, "Tra: premises do not chain")?;
            require(a == &p.antecedent && b == &q.consequent, "Tra: formula is not A ⇒ C")
        }
    }
}
