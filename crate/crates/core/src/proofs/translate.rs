//! Rewriting proofs between rule systems by expanding each step into a short
//! derivation in the target system.

use crate::error::{Error, Result};
use crate::timed::{AttributeSet, Implication};

use super::{Justification, Proof, RuleSetName};

fn imp(a: AttributeSet, b: AttributeSet) -> Implication {
    Implication::new(a, b)
}

/// Translates a proof into the target rule system with the same conclusion.
///
/// Supported targets are `AX_CUT_SHF`, `AX_CUTI`, `REF_SIMI` and `EXTENDED`
/// from any source, `AX_CUT` when no proper shift is needed, and
/// `NORMALIZED` only from a normalized proof.
pub fn translate(p: &Proof, target: RuleSetName) -> Result<Proof> {
    match target {
        RuleSetName::AxCutShf => to_ax_cut_shf(p),
        RuleSetName::AxCutI => to_ax_cuti(&to_ax_cut_shf(p)?),
        RuleSetName::RefSimI => to_ref_simi(&to_ax_cut_shf(p)?),
        RuleSetName::AxCut => to_ax_cut(&to_ax_cut_shf(p)?),
        RuleSetName::Extended => Ok(Proof {
            rule_set: RuleSetName::Extended,
            ..p.clone()
        }),
        RuleSetName::Normalized if p.rule_set == RuleSetName::Normalized => Ok(p.clone()),
        RuleSetName::Normalized => Err(Error::InvalidParams(
            "translation into NORMALIZED is only supported from normalized proofs; use prove".into(),
        )),
    }
}

fn to_ax_cut_shf(p: &Proof) -> Result<Proof> {
    let mut out = Proof::new(p.theory.clone(), RuleSetName::AxCutShf);
    let mut map = Vec::with_capacity(p.len());
    for step in &p.steps {
        let phi = step.formula.clone();
        let f = |k: usize| &p.steps[k].formula;
        let idx = match step.justification {
            Justification::Hyp(k) => out.push(phi, Justification::Hyp(k)),
            Justification::Ax | Justification::Ref => out.push(phi, Justification::Ax),
            Justification::Cut(a, b) | Justification::Tra(a, b) => out.push(phi, Justification::Cut(map[a], map[b])),
            Justification::Shf(a, i) => out.push(phi, Justification::Shf(map[a], i)),
            Justification::Pro(a) => {
                let ax = out.push(imp(f(a).consequent.clone(), phi.consequent.clone()), Justification::Ax);
                out.push(phi, Justification::Cut(map[a], ax))
            }
            Justification::Acc(a, b) => {
                let (x, g) = (&f(a).consequent, &f(b).consequent);
                let ax = out.push(imp(g.union(x), phi.consequent.clone()), Justification::Ax);
                let mid = out.push(imp(x.clone(), phi.consequent.clone()), Justification::Cut(map[b], ax));
                out.push(phi, Justification::Cut(map[a], mid))
            }
            Justification::Wea(a) => {
                let ax = out.push(imp(phi.antecedent.clone(), f(a).antecedent.clone()), Justification::Ax);
                out.push(phi, Justification::Cut(ax, map[a]))
            }
            Justification::Add(a, b) => {
                let (pb, qc) = (&f(a).consequent, &f(b).consequent);
                let both = pb.union(qc);
                let ax = out.push(imp(both.clone(), both.clone()), Justification::Ax);
                let mid = out.push(imp(f(a).antecedent.union(pb), both), Justification::Cut(map[b], ax));
                out.push(phi, Justification::Cut(map[a], mid))
            }
            Justification::Aug(a) => {
                let c = &f(a).consequent;
                let ax = out.push(imp(c.union(&phi.antecedent), phi.consequent.clone()), Justification::Ax);
                out.push(phi, Justification::Cut(map[a], ax))
            }
            Justification::Sim(a, b) => sim_expansion(&mut out, map[a], f(a), map[b], f(b), phi),
            Justification::CutI(a, b, i) => {
                let s = out.push(f(b).shift(i)?, Justification::Shf(map[b], i));
                out.push(phi, Justification::Cut(map[a], s))
            }
            Justification::SimI(a, b, i) => {
                let shifted = f(b).shift(i)?;
                let s = out.push(shifted.clone(), Justification::Shf(map[b], i));
                sim_expansion(&mut out, map[a], f(a), s, &shifted, phi)
            }
        };
        map.push(idx);
    }
    Ok(out)
}

/// (Sim) from `p: A ⇒ B` and `q: C ⇒ D` via `B ∪ C ⇒ C`, `B ∪ C ⇒ D`.
fn sim_expansion(out: &mut Proof, pi: usize, p: &Implication, qi: usize, q: &Implication, phi: Implication) -> usize {
    let bc = p.consequent.union(&q.antecedent);
    let ax = out.push(imp(bc.clone(), q.antecedent.clone()), Justification::Ax);
    let mid = out.push(imp(bc, q.consequent.clone()), Justification::Cut(ax, qi));
    out.push(phi, Justification::Cut(pi, mid))
}

fn to_ax_cuti(p: &Proof) -> Result<Proof> {
    let mut out = Proof::new(p.theory.clone(), RuleSetName::AxCutI);
    let mut map = Vec::with_capacity(p.len());
    for step in &p.steps {
        let phi = step.formula.clone();
        let idx = match step.justification {
            Justification::Cut(a, b) => out.push(phi, Justification::CutI(map[a], map[b], 0)),
            Justification::Shf(a, i) => {
                let empty = out.push(Implication::default(), Justification::Ax);
                out.push(phi, Justification::CutI(empty, map[a], i))
            }
            j @ (Justification::Hyp(_) | Justification::Ax) => out.push(phi, j),
            j => return Err(unexpected(j)),
        };
        map.push(idx);
    }
    Ok(out)
}

fn to_ref_simi(p: &Proof) -> Result<Proof> {
    let mut out = Proof::new(p.theory.clone(), RuleSetName::RefSimI);
    let mut map = Vec::with_capacity(p.len());
    for step in &p.steps {
        let phi = step.formula.clone();
        let idx = match step.justification {
            Justification::Hyp(k) => out.push(phi, Justification::Hyp(k)),
            Justification::Ax => {
                let x = out.push(imp(phi.antecedent.clone(), phi.antecedent.clone()), Justification::Ref);
                let y = out.push(imp(phi.consequent.clone(), phi.consequent.clone()), Justification::Ref);
                out.push(phi, Justification::SimI(x, y, 0))
            }
            Justification::Cut(a, b) => {
                let (pa, qb) = (&p.steps[a].formula, &p.steps[b].formula);
                let x = &phi.antecedent;
                let rx = out.push(imp(x.clone(), x.clone()), Justification::Ref);
                let r0 = out.push(Implication::default(), Justification::Ref);
                let drop = out.push(imp(x.clone(), AttributeSet::new()), Justification::SimI(rx, r0, 0));
                let core = imp(
                    pa.antecedent.union(&qb.antecedent.difference(&pa.consequent)),
                    qb.consequent.clone(),
                );
                let s = out.push(core, Justification::SimI(map[a], map[b], 0));
                out.push(phi, Justification::SimI(drop, s, 0))
            }
            Justification::Shf(a, i) => {
                let r0 = out.push(Implication::default(), Justification::Ref);
                out.push(phi, Justification::SimI(r0, map[a], i))
            }
            j => return Err(unexpected(j)),
        };
        map.push(idx);
    }
    Ok(out)
}

fn to_ax_cut(p: &Proof) -> Result<Proof> {
    let mut out = Proof::new(p.theory.clone(), RuleSetName::AxCut);
    let mut map = Vec::with_capacity(p.len());
    for step in &p.steps {
        let idx = match step.justification {
            Justification::Shf(a, 0) => {
                let c = step.formula.consequent.clone();
                let ax = out.push(imp(c.clone(), c), Justification::Ax);
                out.push(step.formula.clone(), Justification::Cut(map[a], ax))
            }
            Justification::Shf(..) => {
                return Err(Error::RuleMismatch("proof needs a proper time shift, which AX_CUT lacks".into()))
            }
            Justification::Cut(a, b) => out.push(step.formula.clone(), Justification::Cut(map[a], map[b])),
            j @ (Justification::Hyp(_) | Justification::Ax) => out.push(step.formula.clone(), j),
            j => return Err(unexpected(j)),
        };
        map.push(idx);
    }
    Ok(out)
}

fn unexpected(j: Justification) -> Error {
    Error::RuleMismatch(format!("unexpected {} step after expansion", j.kind().name()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proofs::{check_proof, prove_by_closure, CheckResult};
    use crate::textio::{parse_implication, parse_theory};
    use crate::timed::Theory;

    fn theory(text: &str) -> Theory {
        parse_theory(text).unwrap().theory
    }

    fn all_targets_valid(p: &Proof) {
        for target in [
            RuleSetName::AxCutShf,
            RuleSetName::AxCutI,
            RuleSetName::RefSimI,
            RuleSetName::Extended,
        ] {
            let t = translate(p, target).unwrap();
            assert_eq!(check_proof(&t), CheckResult::Valid, "{target}");
            assert_eq!(t.conclusion(), p.conclusion());
        }
    }

    #[test]
    fn normalized_subset_sum_translates() {
        let s = theory("{y@0} => {y@5}\n{y@0} => {y@7}\n{y@0} => {y@11}");
        let p = prove_by_closure(&s, &parse_implication("{y@0} => {y@31}").unwrap())
            .unwrap()
            .unwrap();
        all_targets_valid(&p);
        assert!(translate(&p, RuleSetName::AxCut).is_err());
    }

    #[test]
    fn derived_rules_translate() {
        let s = theory("{a@0} => {b@1}\n{b@0, c@0} => {d@0}\n{a@0} => {e@2}");
        let text = "\
1. {a@0} => {b@1}  [Hyp 1]
2. {b@0, c@0} => {d@0}  [Hyp 2]
3. {a@0, c@1} => {d@1}  [SimI 1 2 1]
4. {a@0, c@1} => {d@1}  [CutI 1 2 1]
5. {a@0, c@1, z@0} => {d@1}  [Wea 4]
6. {a@0} => {e@2}  [Hyp 3]
7. {a@0} => {b@1, e@2}  [Add 1 6]
8. {a@0} => {e@2}  [Pro 7]
9. {a@0, q@0} => {e@2, q@0}  [Aug 8]
10. {b@1, c@1} => {d@1}  [Shf 2 1]
11. {a@0, c@1} => {d@1}  [Sim 1 10]
12. {a@0} => {a@0}  [Ref]
13. {a@0} => {a@0, b@1}  [Acc 12 1]
14. {a@0, b@1} => {b@1}  [Ax]
15. {a@0} => {b@1}  [Tra 13 14]
";
        let p = crate::proofs::parse_proof(text, s, RuleSetName::Extended).unwrap();
        assert_eq!(check_proof(&p), CheckResult::Valid);
        all_targets_valid(&p);
    }

    #[test]
    fn shift_free_proof_translates_to_ax_cut() {
        let s = theory("{a@0} => {b@0}\n{b@0} => {c@0}");
        let p = prove_by_closure(&s, &parse_implication("{a@0} => {c@0}").unwrap())
            .unwrap()
            .unwrap();
        let t = translate(&p, RuleSetName::AxCut).unwrap();
        assert_eq!(check_proof(&t), CheckResult::Valid);
    }
}
