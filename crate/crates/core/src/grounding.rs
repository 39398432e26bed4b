//! Finite shift-instantiations of theories and classical closure.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::timed::{AttributeSet, Implication, Theory, TimedAttribute};

/// Which formula a grounded instance came from and by how much it was shifted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Provenance {
    pub source: usize,
    pub shift: i64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GroundedTheory {
    pub theory: Theory,
    pub provenance: Vec<Provenance>,
}

impl GroundedTheory {
    pub fn len(&self) -> usize {
        self.theory.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theory.is_empty()
    }

    fn push(&mut self, sigma: &Theory, source: usize, shift: i64) -> Result<()> {
        self.theory.push(sigma.formulas[source].shift(shift)?);
        self.provenance.push(Provenance { source, shift });
        Ok(())
    }
}

/// Closed integer interval of time points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Window> {
        if lo > hi {
            return Err(Error::InvalidWindow(format!("{lo} > {hi}")));
        }
        Ok(Window { lo, hi })
    }

    pub fn contains(&self, t: i64) -> bool {
        self.lo <= t && t <= self.hi
    }

    pub fn contains_set(&self, s: &AttributeSet) -> bool {
        s.iter().all(|a| self.contains(a.time))
    }

    /// Number of time points, saturating.
    pub fn width(&self) -> u64 {
        (self.hi as i128 - self.lo as i128 + 1).min(u64::MAX as i128) as u64
    }

    pub fn shift(&self, j: i64) -> Result<Window> {
        let over = Error::IntegerOverflow { shift: j };
        Ok(Window {
            lo: self.lo.checked_add(j).ok_or(over.clone())?,
            hi: self.hi.checked_add(j).ok_or(over)?,
        })
    }
}

/// Instances `E+i ⇒ F+i` with `l(A) − l(E) ≤ i ≤ u(B) − l(F)`, in theory
/// order and ascending shifts.
pub fn ground_predictive(sigma: &Theory, a: &AttributeSet, b: &AttributeSet) -> Result<GroundedTheory> {
    sigma.require_predictive()?;
    let (la, _) = a.bounds()?;
    let (_, ub) = b.bounds()?;
    let mut out = GroundedTheory::default();
    for (k, f) in sigma.iter().enumerate() {
        let (le, _) = f.antecedent.bounds()?;
        let (lf, _) = f.consequent.bounds()?;
        let from = la.checked_sub(le).ok_or(Error::IntegerOverflow { shift: -le })?;
        let to = ub.checked_sub(lf).ok_or(Error::IntegerOverflow { shift: -lf })?;
        for i in from..=to {
            out.push(sigma, k, i)?;
        }
    }
    Ok(out)
}

/// Instances whose time points all lie in the window. A formula without atoms
/// contributes its unshifted copy once.
pub fn ground_window(sigma: &Theory, window: Window) -> Result<GroundedTheory> {
    let mut out = GroundedTheory::default();
    for (k, f) in sigma.iter().enumerate() {
        match f.atoms().bounds() {
            Err(_) => out.push(sigma, k, 0)?,
            Ok((l, u)) => {
                let from = window.lo as i128 - l as i128;
                let to = window.hi as i128 - u as i128;
                for i in from..=to {
                    out.push(sigma, k, i as i64)?;
                }
            }
        }
    }
    Ok(out)
}

/// Least superset of `a` closed under the formulas of `gamma` read without
/// shifts. Linear in the size of `gamma` using per-formula counters.
pub fn classical_closure(gamma: &Theory, a: &AttributeSet) -> AttributeSet {
    let mut count: Vec<usize> = gamma.iter().map(|f| f.antecedent.len()).collect();
    let mut list: HashMap<TimedAttribute, Vec<usize>> = HashMap::new();
    for (k, f) in gamma.iter().enumerate() {
        for &x in &f.antecedent {
            list.entry(x).or_default().push(k);
        }
    }
    let mut closure = a.clone();
    let mut update: Vec<TimedAttribute> = a.iter().copied().collect();
    let fire = |k: usize, closure: &mut AttributeSet, update: &mut Vec<TimedAttribute>| {
        for &y in &gamma.formulas[k].consequent {
            if closure.insert(y) {
                update.push(y);
            }
        }
    };
    for (k, &c) in count.iter().enumerate() {
        if c == 0 {
            fire(k, &mut closure, &mut update);
        }
    }
    while let Some(x) = update.pop() {
        if let Some(ks) = list.get(&x) {
            for &k in ks {
                count[k] -= 1;
                if count[k] == 0 {
                    fire(k, &mut closure, &mut update);
                }
            }
        }
    }
    closure
}

/// Reference implementation of [`classical_closure`] by repeated scanning.
pub fn naive_classical_closure(gamma: &Theory, a: &AttributeSet) -> AttributeSet {
    let mut closure = a.clone();
    loop {
        let before = closure.len();
        for f in gamma {
            if f.antecedent.is_subset(&closure) {
                closure.extend(f.consequent.iter().copied());
            }
        }
        if closure.len() == before {
            return closure;
        }
    }
}

/// Checks that every grounded instance is its source shifted by the recorded amount.
pub fn provenance_consistent(sigma: &Theory, g: &GroundedTheory) -> bool {
    g.theory.len() == g.provenance.len()
        && g.theory.iter().zip(&g.provenance).all(|(f, p)| {
            sigma
                .get(p.source)
                .and_then(|src| src.shift(p.shift).ok())
                .is_some_and(|s: Implication| &s == f)
        })
}
