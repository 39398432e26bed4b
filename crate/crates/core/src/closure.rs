//! Temporal closure and entailment.
//!
//! For predictive theories [`pseudo_lin_closure`] computes the closure of a
//! seed restricted to a finite time range with per-shift counters, touching
//! every timed attribute at most once. General theories are handled by a
//! windowed forward-chaining fixpoint with explicit budgets, which may answer
//! [`EntailmentStatus::Unknown`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::grounding::Window;
use crate::semantics::{embeddings, is_model};
use crate::timed::{Attr, AttributeSet, Implication, Theory, TimedAttribute};

/// One application of `E ⇒ F` shifted by `shift`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Firing {
    pub source: usize,
    pub shift: i64,
    /// Atoms of `F + shift` that were new at firing time. May be empty.
    pub added: AttributeSet,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClosureStats {
    /// Rounds of the fixpoint iteration; zero for the counter-based closure.
    pub rounds: usize,
    /// Shifted instances allocated by the counter-based closure.
    pub instances: usize,
    /// Atoms taken from the update queue.
    pub updates: usize,
    pub max_updates_per_atom: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureTrace {
    pub seed: AttributeSet,
    pub final_set: AttributeSet,
    pub firings: Vec<Firing>,
    pub stats: ClosureStats,
}

impl ClosureTrace {
    fn trivial(seed: &AttributeSet) -> Self {
        ClosureTrace {
            seed: seed.clone(),
            final_set: seed.clone(),
            firings: Vec::new(),
            stats: ClosureStats::default(),
        }
    }

    /// Re-applies the firings to the seed. Fails if some firing's antecedent
    /// is not yet available, if it adds atoms outside its consequent or
    /// already present, or if the result differs from `final_set`.
    pub fn replay(&self, sigma: &Theory) -> Result<()> {
        let mut state = self.seed.clone();
        for (n, firing) in self.firings.iter().enumerate() {
            let f = sigma
                .get(firing.source)
                .ok_or_else(|| Error::InvalidInput(format!("firing {n}: unknown formula")))?
                .shift(firing.shift)?;
            if !f.antecedent.is_subset(&state) {
                return Err(Error::InvalidInput(format!("firing {n}: antecedent not derived")));
            }
            if !firing.added.is_subset(&f.consequent) || !firing.added.intersection(&state).is_empty() {
                return Err(Error::InvalidInput(format!("firing {n}: bad added set")));
            }
            state.extend(firing.added.iter().copied());
        }
        if state != self.final_set {
            return Err(Error::InvalidInput("replay does not reach the final set".into()));
        }
        Ok(())
    }
}

/// Closure of `a` under a predictive theory, exact on the time range
/// `[l(a), max]`. Atoms beyond `max` may appear in the result.
///
/// Every instance `E+i ⇒ F+i` with `l(a) − l(E) ≤ i ≤ max − l(F)` gets a
/// counter of unmatched antecedent atoms. Atoms are processed in ascending
/// time order; an instance fires when its counter drops to zero.
pub fn pseudo_lin_closure(sigma: &Theory, a: &AttributeSet, max: i64) -> Result<ClosureTrace> {
    sigma.require_predictive()?;
    let (la, ua) = a.bounds()?;
    if max < ua {
        return Err(Error::MaxTooSmall { max, upper: ua });
    }

    // Per formula: first shift and one counter per shift.
    let mut first_shift = Vec::with_capacity(sigma.len());
    let mut count: Vec<Vec<u32>> = Vec::with_capacity(sigma.len());
    let mut list: HashMap<TimedAttribute, Vec<(u32, i64)>> = HashMap::new();
    let mut instances = 0usize;
    for (k, f) in sigma.iter().enumerate() {
        let (le, _) = f.antecedent.bounds()?;
        let (lf, _) = f.consequent.bounds()?;
        let from = la.checked_sub(le).ok_or(Error::IntegerOverflow { shift: -le })?;
        let to = max.checked_sub(lf).ok_or(Error::IntegerOverflow { shift: -lf })?;
        first_shift.push(from);
        if to < from {
            count.push(Vec::new());
            continue;
        }
        let n = usize::try_from(to as i128 - from as i128 + 1)
            .map_err(|_| Error::InvalidParams("time range too large".into()))?;
        count.push(vec![f.antecedent.len() as u32; n]);
        instances += n;
        for i in from..=to {
            for x in &f.antecedent {
                list.entry(x.shift(i)?).or_default().push((k as u32, i));
            }
        }
    }

    let mut m = a.clone();
    let mut update: BTreeSet<(i64, Attr)> = a.iter().map(|x| (x.time, x.attr)).collect();
    let mut touched: HashMap<TimedAttribute, usize> = HashMap::new();
    let mut firings = Vec::new();
    let mut updates = 0usize;
    while let Some((time, attr)) = update.pop_first() {
        let y = TimedAttribute::new(attr, time);
        updates += 1;
        *touched.entry(y).or_default() += 1;
        let Some(entries) = list.get(&y) else { continue };
        for &(k, i) in entries {
            let k = k as usize;
            let slot = &mut count[k][(i - first_shift[k]) as usize];
            *slot -= 1;
            if *slot > 0 {
                continue;
            }
            let mut added = AttributeSet::new();
            for z in sigma.formulas[k].consequent.shift(i)? {
                if m.insert(z) {
                    update.insert((z.time, z.attr));
                    added.insert(z);
                }
            }
            firings.push(Firing {
                source: k,
                shift: i,
                added,
            });
        }
    }

    Ok(ClosureTrace {
        seed: a.clone(),
        final_set: m,
        firings,
        stats: ClosureStats {
            rounds: 0,
            instances,
            updates,
            max_updates_per_atom: touched.values().copied().max().unwrap_or(0),
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntailmentStatus {
    Entailed,
    NotEntailed,
    Unknown,
}

impl fmt::Display for EntailmentStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EntailmentStatus::Entailed => "ENTAILED",
            EntailmentStatus::NotEntailed => "NOT ENTAILED",
            EntailmentStatus::Unknown => "UNKNOWN",
        })
    }
}

/// Limits a verdict was computed under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Budget {
    /// Counter-based closure up to time `max`.
    Predictive { max: i64 },
    /// Windowed fixpoint iteration.
    Bounded { window: Window, max_rounds: usize },
}

/// Evidence for a negative answer: the closure reached a fixpoint and is a
/// model of the whole theory that violates the query at shift 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationCertificate {
    pub rounds: usize,
    pub model: AttributeSet,
    pub missing: AttributeSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntailmentVerdict {
    pub status: EntailmentStatus,
    pub trace: ClosureTrace,
    pub certificate: Option<SaturationCertificate>,
    pub budget: Budget,
}

/// Decides `sigma ⊢ f` for predictive inputs. Never answers `Unknown`.
pub fn decide_predictive_entailment(sigma: &Theory, f: &Implication) -> Result<EntailmentVerdict> {
    sigma.require_predictive()?;
    if !f.is_predictive() {
        return Err(Error::NotPredictiveQuery);
    }
    let (_, max) = f.consequent.bounds()?;
    let trace = pseudo_lin_closure(sigma, &f.antecedent, max)?;
    let missing = f.consequent.difference(&trace.final_set);
    let (status, certificate) = if missing.is_empty() {
        (EntailmentStatus::Entailed, None)
    } else {
        let cert = SaturationCertificate {
            rounds: 0,
            model: trace.final_set.clone(),
            missing,
        };
        (EntailmentStatus::NotEntailed, Some(cert))
    };
    Ok(EntailmentVerdict {
        status,
        trace,
        certificate,
        budget: Budget::Predictive { max },
    })
}

/// Shifts `i` at which `E + i` embeds into `m`, ascending. For `E = ∅` these
/// are the shifts that move some atom of `F` into the window.
fn candidate_shifts(f: &Implication, m: &AttributeSet, window: Window) -> Vec<i64> {
    if f.antecedent.is_empty() {
        let Ok((l, u)) = f.consequent.bounds() else {
            return Vec::new();
        };
        let from = window.lo as i128 - u as i128;
        let to = window.hi as i128 - l as i128;
        (from.max(i64::MIN as i128)..=to.min(i64::MAX as i128))
            .map(|i| i as i64)
            .collect()
    } else {
        embeddings(&f.antecedent, m).collect()
    }
}

/// Iterates `M ↦ M ∪ ⋃ { F+i | E ⇒ F ∈ sigma, E+i ⊆ M }`, keeping atoms inside
/// the window. Returns the trace and whether a round added nothing before
/// `max_rounds` rounds ran out.
///
/// Rounds are synchronous: antecedents are matched against the set at the
/// start of the round. Firings are recorded in theory order, shifts
/// ascending, and only when they add something.
pub fn bounded_closure(
    sigma: &Theory,
    a: &AttributeSet,
    window: Window,
    max_rounds: usize,
) -> Result<(ClosureTrace, bool)> {
    if !window.contains_set(a) {
        return Err(Error::InvalidWindow(format!(
            "seed {a} is not inside [{}, {}]",
            window.lo, window.hi
        )));
    }
    let mut m = a.clone();
    let mut firings = Vec::new();
    let mut saturated = false;
    let mut rounds = 0;
    while rounds < max_rounds {
        rounds += 1;
        let mut next = m.clone();
        for (k, f) in sigma.iter().enumerate() {
            for i in candidate_shifts(f, &m, window) {
                let mut added = AttributeSet::new();
                for z in &f.consequent {
                    let Ok(z) = z.shift(i) else { continue };
                    if window.contains(z.time) && next.insert(z) {
                        added.insert(z);
                    }
                }
                if !added.is_empty() {
                    firings.push(Firing {
                        source: k,
                        shift: i,
                        added,
                    });
                }
            }
        }
        if next.len() == m.len() {
            saturated = true;
            break;
        }
        m = next;
    }
    let trace = ClosureTrace {
        seed: a.clone(),
        final_set: m,
        firings,
        stats: ClosureStats {
            rounds,
            ..ClosureStats::default()
        },
    };
    Ok((trace, saturated))
}

/// Budget for [`decide_general_entailment`]. Unset fields take defaults.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneralOptions {
    pub window: Option<Window>,
    /// Window padding in multiples of the largest formula span.
    pub k: i64,
    pub max_rounds: Option<usize>,
}

impl Default for GeneralOptions {
    fn default() -> Self {
        GeneralOptions {
            window: None,
            k: 4,
            max_rounds: None,
        }
    }
}

/// `[min l − k·span, max u + k·span]` over the time points of the query and
/// the theory, where `span` is the largest formula span in the theory.
pub fn default_window(sigma: &Theory, f: &Implication, k: i64) -> Result<Window> {
    let times = sigma
        .iter()
        .chain(std::iter::once(f))
        .flat_map(|g| g.antecedent.iter().chain(g.consequent.iter()))
        .map(|x| x.time);
    let (lo, hi) = times.fold((None, None), |(lo, hi): (Option<i64>, Option<i64>), t| {
        (Some(lo.map_or(t, |l| l.min(t))), Some(hi.map_or(t, |h| h.max(t))))
    });
    let (lo, hi) = (lo.unwrap_or(0), hi.unwrap_or(0));
    let span = sigma.iter().map(Implication::span).max().unwrap_or(0);
    let pad = k
        .checked_mul(span)
        .ok_or(Error::InvalidParams("window padding overflows".into()))?;
    let overflow = || Error::InvalidParams("window bounds overflow".into());
    Window::new(
        lo.checked_sub(pad).ok_or_else(overflow)?,
        hi.checked_add(pad).ok_or_else(overflow)?,
    )
}

/// `10 · |sigma| · width`, at least one round.
pub fn default_max_rounds(sigma: &Theory, window: Window) -> usize {
    let rounds = 10u128 * sigma.len() as u128 * window.width() as u128;
    rounds.clamp(1, usize::MAX as u128) as usize
}

/// Semi-decision of `sigma ⊢ f` for arbitrary theories.
///
/// `Entailed` when the windowed closure of the antecedent covers the
/// consequent. `NotEntailed` only when the iteration saturated and the final
/// set is a model of `sigma`, which makes it a countermodel. Otherwise
/// `Unknown`.
pub fn decide_general_entailment(
    sigma: &Theory,
    f: &Implication,
    opts: GeneralOptions,
) -> Result<EntailmentVerdict> {
    if opts.k < 0 {
        return Err(Error::InvalidParams("k must be non-negative".into()));
    }
    let window = match opts.window {
        Some(w) => w,
        None => default_window(sigma, f, opts.k)?,
    };
    if !window.contains_set(&f.antecedent) || !window.contains_set(&f.consequent) {
        return Err(Error::InvalidWindow(format!(
            "query {f} is not inside [{}, {}]",
            window.lo, window.hi
        )));
    }
    let max_rounds = opts
        .max_rounds
        .unwrap_or_else(|| default_max_rounds(sigma, window));
    let budget = Budget::Bounded { window, max_rounds };

    if f.consequent.is_subset(&f.antecedent) {
        return Ok(EntailmentVerdict {
            status: EntailmentStatus::Entailed,
            trace: ClosureTrace::trivial(&f.antecedent),
            certificate: None,
            budget,
        });
    }
    let (trace, saturated) = bounded_closure(sigma, &f.antecedent, window, max_rounds)?;
    let missing = f.consequent.difference(&trace.final_set);
    let (status, certificate) = if missing.is_empty() {
        (EntailmentStatus::Entailed, None)
    } else if saturated && is_model(&trace.final_set, sigma) {
        let cert = SaturationCertificate {
            rounds: trace.stats.rounds,
            model: trace.final_set.clone(),
            missing,
        };
        (EntailmentStatus::NotEntailed, Some(cert))
    } else {
        (EntailmentStatus::Unknown, None)
    };
    Ok(EntailmentVerdict {
        status,
        trace,
        certificate,
        budget,
    })
}

/// Predictive decision when both theory and query are predictive, the
/// bounded semi-decision otherwise.
pub fn decide_entailment(sigma: &Theory, f: &Implication, opts: GeneralOptions) -> Result<EntailmentVerdict> {
    if sigma.is_predictive() && f.is_predictive() {
        decide_predictive_entailment(sigma, f)
    } else {
        decide_general_entailment(sigma, f, opts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::{parse_implication, parse_theory};

    fn set(pairs: &[(&str, i64)]) -> AttributeSet {
        AttributeSet::from_pairs(pairs.iter().copied()).unwrap()
    }

    fn theory(text: &str) -> Theory {
        parse_theory(text).unwrap().theory
    }

    fn ys(times: &[i64]) -> AttributeSet {
        times.iter().map(|&t| TimedAttribute::new(Attr::new("y").unwrap(), t)).collect()
    }

    const SUBSET_SUM: &str = "{y@0} => {y@5}\n{y@0} => {y@7}\n{y@0} => {y@11}";
    const COMPLETION: &str = "{x@0} => {c@1}\n{x@0} => {d@2}\n{c@2} => {y@0}\n{d@1} => {y@0}";

    #[test]
    fn subset_sum_closure() {
        let t = pseudo_lin_closure(&theory(SUBSET_SUM), &ys(&[0]), 31).unwrap();
        let reachable = [
            0, 5, 7, 10, 11, 12, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31,
        ];
        assert_eq!(t.final_set.restrict(0, 31), ys(&reachable));
        assert_eq!(t.stats.max_updates_per_atom, 1);
        t.replay(&theory(SUBSET_SUM)).unwrap();
    }

    #[test]
    fn pseudo_lin_preconditions() {
        let s = theory(SUBSET_SUM);
        assert_eq!(
            pseudo_lin_closure(&s, &ys(&[0, 4]), 3),
            Err(Error::MaxTooSmall { max: 3, upper: 4 })
        );
        assert_eq!(pseudo_lin_closure(&s, &AttributeSet::new(), 3), Err(Error::EmptySet));
        assert_eq!(
            pseudo_lin_closure(&theory(COMPLETION), &set(&[("x", 0)]), 3),
            Err(Error::NotPredictive { index: 2 })
        );
    }

    #[test]
    fn empty_theory_closure_is_seed() {
        let a = set(&[("a", 0), ("b", 3)]);
        let t = pseudo_lin_closure(&Theory::default(), &a, 10).unwrap();
        assert_eq!(t.final_set, a);
        assert!(t.firings.is_empty());
    }

    #[test]
    fn predictive_decisions() {
        let s = theory(SUBSET_SUM);
        let yes = decide_predictive_entailment(&s, &parse_implication("{y@0} => {y@31}").unwrap()).unwrap();
        assert_eq!(yes.status, EntailmentStatus::Entailed);
        let no = decide_predictive_entailment(&s, &parse_implication("{y@0} => {y@13}").unwrap()).unwrap();
        assert_eq!(no.status, EntailmentStatus::NotEntailed);
        assert_eq!(no.certificate.unwrap().missing, ys(&[13]));
        assert_eq!(
            decide_predictive_entailment(&s, &parse_implication("{y@3} => {y@1}").unwrap()),
            Err(Error::NotPredictiveQuery)
        );
    }

    #[test]
    fn completion_example() {
        let s = theory(COMPLETION);
        let (t, saturated) = bounded_closure(&s, &set(&[("x", 0)]), Window::new(-1, 2).unwrap(), 100).unwrap();
        assert!(saturated);
        assert_eq!(
            t.final_set,
            set(&[("y", -1), ("x", 0), ("c", 1), ("y", 1), ("d", 2)])
        );
        t.replay(&s).unwrap();
        let q = parse_implication("{x@0} => {y@0}").unwrap();
        let opts = GeneralOptions {
            window: Some(Window::new(-1, 2).unwrap()),
            ..GeneralOptions::default()
        };
        let v = decide_general_entailment(&s, &q, opts).unwrap();
        assert_eq!(v.status, EntailmentStatus::NotEntailed);
        assert_eq!(decide_general_entailment(&s, &q, GeneralOptions::default()).unwrap().status, EntailmentStatus::NotEntailed);
    }

    #[test]
    fn remark_example() {
        let s = theory("{x@1} => {y@2}\n{y@5} => {z@2}");
        let (t, saturated) = bounded_closure(&s, &set(&[("x", 4)]), Window::new(0, 6).unwrap(), 100).unwrap();
        assert!(saturated);
        assert!(t.final_set.contains(&TimedAttribute::new(Attr::new("y").unwrap(), 5)));
        assert!(t.final_set.contains(&TimedAttribute::new(Attr::new("z").unwrap(), 2)));
        let v = decide_general_entailment(
            &s,
            &parse_implication("{x@4} => {z@2}").unwrap(),
            GeneralOptions {
                window: Some(Window::new(0, 6).unwrap()),
                ..GeneralOptions::default()
            },
        )
        .unwrap();
        assert_eq!(v.status, EntailmentStatus::Entailed);
    }

    #[test]
    fn empty_antecedent_fires_everywhere() {
        let s = theory("{} => {y@0}");
        let (t, saturated) = bounded_closure(&s, &AttributeSet::new(), Window::new(0, 3).unwrap(), 10).unwrap();
        assert!(saturated);
        assert_eq!(t.final_set, ys(&[0, 1, 2, 3]));
        // No finite closure is a model, so refutation is never certified.
        let v = decide_general_entailment(&s, &parse_implication("{} => {z@0}").unwrap(), GeneralOptions::default()).unwrap();
        assert_eq!(v.status, EntailmentStatus::Unknown);
    }

    #[test]
    fn trivial_query_needs_no_rounds() {
        let s = theory(COMPLETION);
        let v = decide_general_entailment(&s, &parse_implication("{a@0, b@1} => {b@1}").unwrap(), GeneralOptions::default()).unwrap();
        assert_eq!(v.status, EntailmentStatus::Entailed);
        assert_eq!(v.trace.stats.rounds, 0);
    }

    #[test]
    fn round_budget_exhaustion_is_unknown() {
        let s = theory("{y@0} => {y@1}\n{y@2} => {y@0}");
        let q = parse_implication("{y@0} => {z@0}").unwrap();
        let v = decide_general_entailment(
            &s,
            &q,
            GeneralOptions {
                max_rounds: Some(1),
                ..GeneralOptions::default()
            },
        )
        .unwrap();
        assert_eq!(v.status, EntailmentStatus::Unknown);
    }

    #[test]
    fn default_budget() {
        let s = theory(COMPLETION);
        let q = parse_implication("{x@0} => {y@0}").unwrap();
        let w = default_window(&s, &q, 4).unwrap();
        assert_eq!(w, Window::new(-8, 10).unwrap());
        assert_eq!(default_max_rounds(&s, w), 10 * 4 * 19);
    }
}
