//! Validity of formulas in finite timed datasets.
//!
//! `M ⊨ A ⇒ B` when `A+i ⊆ M` implies `B+i ⊆ M` for every integer `i`.
//! With `A = ∅` and `B ≠ ∅` every shift embeds the antecedent, so no finite
//! `M` satisfies the formula: such formulas always fail here.

use crate::timed::{AttributeSet, Implication, Theory};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModelCheckResult {
    pub holds: bool,
    /// Smallest shift `i` with `A+i ⊆ M` and `B+i ⊄ M`. For an empty
    /// antecedent, the smallest non-negative such shift.
    pub counterexample_shift: Option<i64>,
}

impl ModelCheckResult {
    const HOLDS: ModelCheckResult = ModelCheckResult {
        holds: true,
        counterexample_shift: None,
    };

    fn fails(i: i64) -> Self {
        ModelCheckResult {
            holds: false,
            counterexample_shift: Some(i),
        }
    }
}

/// `S + i ⊆ M`; an unrepresentable shift is never contained.
pub fn embeds_at(s: &AttributeSet, i: i64, m: &AttributeSet) -> bool {
    s.iter().all(|a| a.shift(i).is_ok_and(|b| m.contains(&b)))
}

/// Shifts `i` with `S + i ⊆ M`, ascending. `S` must be non-empty.
pub fn embeddings<'a>(s: &'a AttributeSet, m: &'a AttributeSet) -> impl Iterator<Item = i64> + 'a {
    let pivot = s.first().copied();
    pivot
        .into_iter()
        .flat_map(move |p| m.times_of(p.attr).filter_map(move |t| t.checked_sub(p.time)))
        .filter(move |&i| embeds_at(s, i, m))
}

pub fn check_validity(m: &AttributeSet, f: &Implication) -> ModelCheckResult {
    if f.antecedent.is_empty() {
        if f.consequent.is_empty() {
            return ModelCheckResult::HOLDS;
        }
        // At most |M| shifts can embed a non-empty set.
        let mut i = 0i64;
        while embeds_at(&f.consequent, i, m) {
            i += 1;
        }
        return ModelCheckResult::fails(i);
    }
    for i in embeddings(&f.antecedent, m) {
        if !embeds_at(&f.consequent, i, m) {
            return ModelCheckResult::fails(i);
        }
    }
    ModelCheckResult::HOLDS
}

/// Every shift `i` with `A+i ⊆ M` and `B+i ⊄ M`, ascending. Empty for an
/// empty antecedent, where the violating shifts are unbounded.
pub fn violating_shifts(m: &AttributeSet, f: &Implication) -> Vec<i64> {
    if f.antecedent.is_empty() {
        return Vec::new();
    }
    embeddings(&f.antecedent, m)
        .filter(|&i| !embeds_at(&f.consequent, i, m))
        .collect()
}

/// Like [`check_validity`], but only shifts whose image of `A ∪ B` lies in
/// `[lo, hi]` are considered. Observations outside the horizon are unknown
/// rather than absent.
pub fn check_validity_within(m: &AttributeSet, f: &Implication, lo: i64, hi: i64) -> ModelCheckResult {
    let Ok((l, u)) = f.atoms().bounds() else {
        return ModelCheckResult::HOLDS;
    };
    let inside = |i: i64| {
        l.checked_add(i).is_some_and(|x| x >= lo) && u.checked_add(i).is_some_and(|x| x <= hi)
    };
    if f.antecedent.is_empty() {
        let (Some(start), Some(end)) = (lo.checked_sub(l), hi.checked_sub(u)) else {
            return ModelCheckResult::HOLDS;
        };
        for i in start..=end {
            if !embeds_at(&f.consequent, i, m) {
                return ModelCheckResult::fails(i);
            }
        }
        return ModelCheckResult::HOLDS;
    }
    for i in embeddings(&f.antecedent, m) {
        if inside(i) && !embeds_at(&f.consequent, i, m) {
            return ModelCheckResult::fails(i);
        }
    }
    ModelCheckResult::HOLDS
}

pub fn check_theory_validity(m: &AttributeSet, theory: &Theory) -> Vec<(Implication, ModelCheckResult)> {
    theory
        .iter()
        .map(|f| (f.clone(), check_validity(m, f)))
        .collect()
}

/// True when `M` is a model of every formula.
pub fn is_model(m: &AttributeSet, theory: &Theory) -> bool {
    theory.iter().all(|f| check_validity(m, f).holds)
}

/// Shift-free validity: `A ⊄ M` or `B ⊆ M`.
pub fn check_pl_validity(m: &AttributeSet, f: &Implication) -> bool {
    !f.antecedent.is_subset(m) || f.consequent.is_subset(m)
}

pub fn intersect_models(m1: &AttributeSet, m2: &AttributeSet) -> AttributeSet {
    m1.intersection(m2)
}
