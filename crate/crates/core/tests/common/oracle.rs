//! Brute-force reference computations, written without the library's
//! closure, grounding or embedding code.

use std::collections::BTreeSet;

use tai::{AttributeSet, Implication, Theory, TimedAttribute};

type Atom = (&'static str, i64);

fn atoms(s: &AttributeSet) -> BTreeSet<Atom> {
    s.iter().map(|a| (a.attr.as_str(), a.time)).collect()
}

fn contains_shifted(m: &BTreeSet<Atom>, s: &BTreeSet<Atom>, i: i64) -> bool {
    s.iter().all(|&(y, t)| m.contains(&(y, t + i)))
}

fn lo_hi(s: &BTreeSet<Atom>) -> Option<(i64, i64)> {
    let lo = s.iter().map(|a| a.1).min()?;
    let hi = s.iter().map(|a| a.1).max()?;
    Some((lo, hi))
}

/// Least superset of `a` closed under every shifted formula whose atoms
/// fall inside `[lo, hi]`, consequent atoms outside the window dropped.
pub fn window_fixpoint(sigma: &Theory, a: &AttributeSet, lo: i64, hi: i64) -> AttributeSet {
    let mut m = atoms(a);
    let formulas: Vec<(BTreeSet<Atom>, BTreeSet<Atom>)> = sigma
        .iter()
        .map(|f| (atoms(&f.antecedent), atoms(&f.consequent)))
        .collect();
    loop {
        let before = m.len();
        for (e, f) in &formulas {
            let Some((fl, fu)) = lo_hi(f) else { continue };
            let (from, to) = match lo_hi(e) {
                Some((el, eu)) => (lo - el, hi - eu),
                None => (lo - fu, hi - fl),
            };
            for i in from..=to {
                if contains_shifted(&m, e, i) {
                    for &(y, t) in f {
                        if lo <= t + i && t + i <= hi {
                            m.insert((y, t + i));
                        }
                    }
                }
            }
        }
        if m.len() == before {
            break;
        }
    }
    m.into_iter()
        .map(|(y, t)| TimedAttribute::new(tai::Attr::new(y).unwrap(), t))
        .collect()
}

/// All violating shifts, scanning every shift that could embed `A`.
pub fn violating_shifts(m: &AttributeSet, f: &Implication) -> Vec<i64> {
    let (ma, fa, fb) = (atoms(m), atoms(&f.antecedent), atoms(&f.consequent));
    let (Some((ml, mu)), Some((al, au))) = (lo_hi(&ma), lo_hi(&fa)) else {
        return Vec::new();
    };
    (ml - au - 1..=mu - al + 1)
        .filter(|&i| contains_shifted(&ma, &fa, i) && !contains_shifted(&ma, &fb, i))
        .collect()
}

/// Number of shifts embedding `s` in `m`.
pub fn support(m: &AttributeSet, s: &AttributeSet) -> usize {
    let (ma, sa) = (atoms(m), atoms(s));
    let (Some((ml, mu)), Some((sl, su))) = (lo_hi(&ma), lo_hi(&sa)) else {
        return 0;
    };
    (ml - su..=mu - sl).filter(|&i| contains_shifted(&ma, &sa, i)).count()
}

/// Breadth-first search over reachable sums.
pub fn subset_sum_reachable(values: &[u64], target: u64) -> bool {
    let mut seen = vec![false; target as usize + 1];
    let mut frontier = vec![0u64];
    seen[0] = true;
    while let Some(s) = frontier.pop() {
        for &v in values {
            let t = s + v;
            if v > 0 && t <= target && !seen[t as usize] {
                seen[t as usize] = true;
                frontier.push(t);
            }
        }
    }
    seen[target as usize]
}
