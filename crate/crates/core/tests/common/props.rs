//! Property suites shared by the regular test target and the acceptance run.
//! Each suite runs `cases` generated inputs on a fixed seed.

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use tai::closure::{bounded_closure, decide_predictive_entailment, pseudo_lin_closure, EntailmentStatus};
use tai::grounding::Window;
use tai::proofs::{check_proof, format_proof, parse_proof, prove_by_closure, translate, Justification, Proof, RuleSetName};
use tai::semantics::{check_validity, violating_shifts};
use tai::{Attr, AttributeSet, Implication, Theory, TimedAttribute};

use super::gen::NAMES;
use super::oracle;

pub type Suite = fn(u32) -> Result<(), String>;

/// Name and runner of every suite.
pub const SUITES: [(&str, Suite); 9] = [
    ("shift laws", shift_laws),
    ("closure laws, predictive", closure_laws_predictive),
    ("closure laws, windowed", closure_laws_windowed),
    ("shift equivariance of closure", shift_equivariance),
    ("validity shift invariance", validity_shift_invariance),
    ("predictivity under Shf and Cut", predictivity_preservation),
    ("proof round trip", proof_round_trip),
    ("rule-set equivalence", rule_set_equivalence),
    ("entailment iff proof", entailment_iff_proof),
];

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn attr(k: usize) -> Attr {
    Attr::new(NAMES[k]).unwrap()
}

fn build(atoms: Vec<(usize, i64)>) -> AttributeSet {
    atoms.into_iter().map(|(k, t)| TimedAttribute::new(attr(k), t)).collect()
}

fn set_range(lo: i64, hi: i64, min: usize, max: usize) -> impl Strategy<Value = AttributeSet> {
    prop::collection::vec((0..4usize, lo..=hi), min..=max).prop_map(build)
}

fn formula(lo: i64, hi: i64) -> impl Strategy<Value = Implication> {
    (set_range(lo, hi, 0, 3), set_range(lo, hi, 0, 2)).prop_map(|(a, b)| Implication::new(a, b))
}

fn predictive() -> impl Strategy<Value = Implication> {
    (-4i64..=4, 0i64..=3, 0i64..=3)
        .prop_flat_map(|(base, cut, extra)| {
            (
                set_range(base, base + cut, 1, 3),
                set_range(base + cut, base + cut + extra, 1, 2),
            )
        })
        .prop_map(|(a, b)| Implication::new(a, b))
}

fn predictive_theory() -> impl Strategy<Value = Theory> {
    prop::collection::vec(predictive(), 0..=5).prop_map(Theory::new)
}

fn general_theory() -> impl Strategy<Value = Theory> {
    prop::collection::vec(formula(-3, 3), 0..=4).prop_map(Theory::new)
}

fn run<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    runner(cases).run(&strategy, test).map_err(|e| e.to_string())
}

fn closure_upto(sigma: &Theory, a: &AttributeSet, max: i64) -> AttributeSet {
    pseudo_lin_closure(sigma, a, max).unwrap().final_set.restrict(i64::MIN, max)
}

const WINDOW: Window = Window { lo: -5, hi: 5 };

fn windowed(sigma: &Theory, a: &AttributeSet, w: Window) -> Result<AttributeSet, TestCaseError> {
    let (trace, saturated) = bounded_closure(sigma, a, w, 10_000).unwrap();
    prop_assert!(saturated);
    Ok(trace.final_set)
}

pub fn shift_laws(cases: u32) -> Result<(), String> {
    let s = || set_range(-6, 6, 0, 8);
    run(cases, (s(), s(), s(), -20i64..=20, -20i64..=20), |(m, x, y, i, j)| {
        let n = m.union(&x);
        // monotony
        prop_assert!(m.shift(i).unwrap().is_subset(&n.shift(i).unwrap()));
        // associativity
        prop_assert_eq!(m.shift(i).unwrap().shift(j).unwrap(), m.shift(i + j).unwrap());
        // unions and intersections
        let family = [&m, &x, &y];
        let mut cup = AttributeSet::new();
        let mut cap = m.clone();
        let mut cup_shifted = AttributeSet::new();
        let mut cap_shifted = m.shift(i).unwrap();
        for s in family {
            cup = cup.union(s);
            cap = cap.intersection(s);
            cup_shifted = cup_shifted.union(&s.shift(i).unwrap());
            cap_shifted = cap_shifted.intersection(&s.shift(i).unwrap());
        }
        prop_assert_eq!(cup.shift(i).unwrap(), cup_shifted);
        prop_assert_eq!(cap.shift(i).unwrap(), cap_shifted);
        Ok(())
    })
}

pub fn closure_laws_predictive(cases: u32) -> Result<(), String> {
    let strategy = (predictive_theory(), set_range(0, 4, 1, 3), set_range(0, 4, 0, 3), 0i64..=6);
    run(cases, strategy, |(sigma, a, x, d)| {
        let b = a.union(&x);
        let max = b.upper().unwrap() + d;
        let ca = closure_upto(&sigma, &a, max);
        prop_assert!(a.is_subset(&ca));
        prop_assert!(ca.is_subset(&closure_upto(&sigma, &b, max)));
        prop_assert_eq!(closure_upto(&sigma, &ca, max), ca);
        Ok(())
    })
}

pub fn closure_laws_windowed(cases: u32) -> Result<(), String> {
    let strategy = (general_theory(), set_range(-5, 5, 0, 3), set_range(-5, 5, 0, 3));
    run(cases, strategy, |(sigma, a, x)| {
        let b = a.union(&x);
        let ca = windowed(&sigma, &a, WINDOW)?;
        prop_assert!(a.is_subset(&ca));
        prop_assert!(ca.is_subset(&windowed(&sigma, &b, WINDOW)?));
        prop_assert_eq!(windowed(&sigma, &ca, WINDOW)?, ca.clone());
        prop_assert_eq!(ca, oracle::window_fixpoint(&sigma, &a, WINDOW.lo, WINDOW.hi));
        Ok(())
    })
}

pub fn shift_equivariance(cases: u32) -> Result<(), String> {
    let strategy = (general_theory(), predictive_theory(), set_range(-5, 5, 1, 3), -30i64..=30, 0i64..=6);
    run(cases, strategy, |(general, pred, a, j, d)| {
        let base = windowed(&general, &a, WINDOW)?;
        let moved = windowed(&general, &a.shift(j).unwrap(), WINDOW.shift(j).unwrap())?;
        prop_assert_eq!(moved, base.shift(j).unwrap());

        let max = a.upper().unwrap() + d;
        let base = closure_upto(&pred, &a, max);
        let moved = closure_upto(&pred, &a.shift(j).unwrap(), max + j);
        prop_assert_eq!(moved, base.shift(j).unwrap());
        Ok(())
    })
}

pub fn validity_shift_invariance(cases: u32) -> Result<(), String> {
    let strategy = (set_range(-6, 6, 0, 14), formula(-3, 3), -25i64..=25);
    run(cases, strategy, |(m, f, j)| {
        let r = check_validity(&m, &f);
        prop_assert_eq!(check_validity(&m.shift(j).unwrap(), &f).holds, r.holds);
        prop_assert_eq!(check_validity(&m, &f.shift(j).unwrap()).holds, r.holds);
        if f.antecedent.is_empty() {
            prop_assert_eq!(r.holds, f.consequent.is_empty());
        } else {
            let expected = oracle::violating_shifts(&m, &f);
            prop_assert_eq!(r.holds, expected.is_empty());
            prop_assert_eq!(r.counterexample_shift, expected.first().copied());
            prop_assert_eq!(violating_shifts(&m, &f), expected);
            let moved = check_validity(&m.shift(j).unwrap(), &f).counterexample_shift;
            prop_assert_eq!(moved, r.counterexample_shift.map(|i| i + j));
        }
        Ok(())
    })
}

pub fn predictivity_preservation(cases: u32) -> Result<(), String> {
    let extra = || prop::collection::vec((0..4usize, 0i64..=3), 0..=2);
    let strategy = (predictive(), extra(), prop::collection::vec((0..4usize, 0i64..=3), 1..=2), -10i64..=10);
    run(cases, strategy, |(p, c_raw, d_raw, i)| {
        // q = B ∪ C ⇒ D with u(C) ≤ l(B) and D after both.
        let lb = p.consequent.lower().unwrap();
        let c = build(c_raw.into_iter().map(|(k, t)| (k, lb - t)).collect());
        let q_ante = p.consequent.union(&c);
        let top = q_ante.upper().unwrap();
        let d = build(d_raw.into_iter().map(|(k, t)| (k, top + t)).collect());
        let q = Implication::new(q_ante, d);
        prop_assert!(q.is_predictive());

        let mut proof = Proof::new(Theory::new(vec![p.clone(), q.clone()]), RuleSetName::AxCutShf);
        let h1 = proof.push(p.clone(), Justification::Hyp(0));
        let h2 = proof.push(q.clone(), Justification::Hyp(1));
        let cut = Implication::new(p.antecedent.union(&c), q.consequent.clone());
        let k = proof.push(cut.clone(), Justification::Cut(h1, h2));
        proof.push(cut.shift(i).unwrap(), Justification::Shf(k, i));
        let s1 = proof.push(p.shift(i).unwrap(), Justification::Shf(h1, i));
        let s2 = proof.push(q.shift(i).unwrap(), Justification::Shf(h2, i));
        proof.push(cut.shift(i).unwrap(), Justification::Cut(s1, s2));
        prop_assert!(check_proof(&proof).is_valid(), "{}", format_proof(&proof));
        for step in &proof.steps {
            prop_assert!(step.formula.is_predictive(), "{}", step.formula);
        }
        Ok(())
    })
}

/// Predictive instance whose query is entailed: `B` is drawn from the closure.
fn entailed_instance() -> impl Strategy<Value = (Theory, Implication)> {
    (predictive_theory(), set_range(0, 3, 1, 3), 0i64..=6, any::<u64>()).prop_map(|(sigma, a, d, mask)| {
        let ua = a.upper().unwrap();
        let pool: Vec<TimedAttribute> = closure_upto(&sigma, &a, ua + d)
            .restrict(ua, ua + d)
            .into_iter()
            .collect();
        let mut b: AttributeSet = pool
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> (k % 64) & 1 == 1)
            .map(|(_, x)| *x)
            .collect();
        if b.is_empty() {
            b.insert(*pool.last().unwrap());
        }
        (sigma, Implication::new(a, b))
    })
}

pub fn proof_round_trip(cases: u32) -> Result<(), String> {
    run(cases, entailed_instance(), |(sigma, f)| {
        let proof = prove_by_closure(&sigma, &f).unwrap().expect("entailed by construction");
        prop_assert!(check_proof(&proof).is_valid(), "{}", format_proof(&proof));
        prop_assert_eq!(proof.conclusion(), Some(&f));
        let text = format_proof(&proof);
        let parsed = parse_proof(&text, sigma.clone(), RuleSetName::Normalized).unwrap();
        prop_assert_eq!(&parsed, &proof);
        prop_assert_eq!(format_proof(&parsed), text);
        Ok(())
    })
}

pub fn rule_set_equivalence(cases: u32) -> Result<(), String> {
    run(cases, entailed_instance(), |(sigma, f)| {
        let proof = prove_by_closure(&sigma, &f).unwrap().expect("entailed by construction");
        let base = translate(&proof, RuleSetName::AxCutShf).unwrap();
        prop_assert!(check_proof(&base).is_valid());
        for target in [RuleSetName::AxCutI, RuleSetName::RefSimI] {
            for source in [&proof, &base] {
                let t = translate(source, target).unwrap();
                prop_assert_eq!(t.rule_set, target);
                let verdict = check_proof(&t);
                prop_assert!(verdict.is_valid(), "{target}: {verdict:?}\n{}", format_proof(&t));
                prop_assert_eq!(t.conclusion(), Some(&f));
            }
        }
        Ok(())
    })
}

pub fn entailment_iff_proof(cases: u32) -> Result<(), String> {
    let strategy = (predictive_theory(), set_range(0, 3, 1, 3), prop::collection::vec((0..4usize, 0i64..=6), 1..=3));
    run(cases, strategy, |(sigma, a, b_raw)| {
        let ua = a.upper().unwrap();
        let b = build(b_raw.into_iter().map(|(k, t)| (k, ua + t)).collect());
        let f = Implication::new(a, b);
        let entailed = decide_predictive_entailment(&sigma, &f).unwrap().status == EntailmentStatus::Entailed;
        match prove_by_closure(&sigma, &f).unwrap() {
            Some(p) => {
                prop_assert!(entailed);
                prop_assert!(check_proof(&p).is_valid());
                prop_assert_eq!(p.conclusion(), Some(&f));
            }
            None => prop_assert!(!entailed),
        }
        Ok(())
    })
}
