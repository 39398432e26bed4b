//! Hardness instances from unbounded subset sum, a dynamic-programming oracle
//! for them, and export of entailment questions to linear temporal logic.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::timed::{Attr, AttributeSet, Implication, Theory, TimedAttribute};

pub const DEFAULT_DP_CAP: u64 = 1_000_000;

/// Is `target` a non-negative integer combination of `values`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetSumInstance {
    pub values: Vec<u64>,
    pub target: u64,
}

impl SubsetSumInstance {
    /// Parses `5,7,11`; an empty string gives no values.
    pub fn parse_values(text: &str) -> Result<Vec<u64>> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Vec::new());
        }
        text.split(',')
            .map(|v| {
                v.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidParams(format!("invalid value {:?}", v.trim())))
            })
            .collect()
    }
}

fn as_time(v: u64) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::InvalidParams(format!("{v} exceeds the time range")))
}

/// `{y@0} ⇒ {y@j}` for every value `j`, and the query `{y@0} ⇒ {y@z}`.
pub fn gen_subset_sum_theory(inst: &SubsetSumInstance) -> Result<(Theory, Implication)> {
    let y = Attr::new("y")?;
    let single = |t: i64| -> AttributeSet { std::iter::once(TimedAttribute::new(y, t)).collect() };
    let mut theory = Theory::default();
    for &v in &inst.values {
        theory.push(Implication::new(single(0), single(as_time(v)?)));
    }
    let query = Implication::new(single(0), single(as_time(inst.target)?));
    Ok((theory, query))
}

/// Reachability of every amount up to the target.
pub fn solve_subset_sum_dp(inst: &SubsetSumInstance, cap: u64) -> Result<bool> {
    if inst.target > cap {
        return Err(Error::CapExceeded {
            target: inst.target,
            cap,
        });
    }
    let z = usize::try_from(inst.target).map_err(|_| Error::CapExceeded {
        target: inst.target,
        cap,
    })?;
    let values: Vec<usize> = inst
        .values
        .iter()
        .filter(|&&v| v > 0 && v <= inst.target)
        .map(|&v| v as usize)
        .collect();
    let mut reach = vec![false; z + 1];
    reach[0] = true;
    for s in 1..=z {
        reach[s] = values.iter().any(|&v| v <= s && reach[s - v]);
    }
    Ok(reach[z])
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OperatorCounts {
    pub always: usize,
    pub next: usize,
    pub previous: usize,
    /// Longest chain of `X`, equal to the largest positive time point.
    pub max_next_depth: u64,
    /// Longest chain of `Y`, equal to the largest absolute negative time point.
    pub max_previous_depth: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LtlDocument {
    /// `#` comment lines describing the evaluation convention.
    pub header: String,
    pub formula: String,
    pub counts: OperatorCounts,
}

impl LtlDocument {
    pub fn text(&self) -> String {
        format!("{}{}\n", self.header, self.formula)
    }
}

/// `y@i` as an `i`-fold `X` chain (`Y` for negative `i`).
fn render_atom(out: &mut String, a: &TimedAttribute, counts: &mut OperatorCounts) {
    let depth = a.time.unsigned_abs();
    let op = if a.time >= 0 { "X" } else { "Y" };
    if a.time >= 0 {
        counts.next += depth as usize;
        counts.max_next_depth = counts.max_next_depth.max(depth);
    } else {
        counts.previous += depth as usize;
        counts.max_previous_depth = counts.max_previous_depth.max(depth);
    }
    for _ in 0..depth {
        out.push('(');
        out.push_str(op);
        out.push(' ');
    }
    out.push_str(a.attr.as_str());
    for _ in 0..depth {
        out.push(')');
    }
}

/// Left-nested conjunction; `true` for the empty set.
fn render_set(out: &mut String, s: &AttributeSet, counts: &mut OperatorCounts) {
    let atoms: Vec<&TimedAttribute> = s.iter().collect();
    match atoms.len() {
        0 => out.push_str("true"),
        n => {
            for _ in 1..n {
                out.push('(');
            }
            render_atom(out, atoms[0], counts);
            for a in &atoms[1..] {
                out.push_str(" & ");
                render_atom(out, a, counts);
                out.push(')');
            }
        }
    }
}

/// `G (A -> B)`.
pub fn render_implication(f: &Implication, counts: &mut OperatorCounts) -> String {
    let mut out = String::from("G (");
    counts.always += 1;
    render_set(&mut out, &f.antecedent, counts);
    out.push_str(" -> ");
    render_set(&mut out, &f.consequent, counts);
    out.push(')');
    out
}

/// The conjunction of all theory formulas and the negated query. The result
/// is satisfiable at position 0 exactly when the theory does not entail the
/// query.
pub fn export_ltl(sigma: &Theory, query: &Implication) -> LtlDocument {
    let mut counts = OperatorCounts::default();
    let mut formula = String::new();
    for f in sigma {
        formula.push_str(&render_implication(f, &mut counts));
        formula.push_str(" &\n");
    }
    let q = render_implication(query, &mut counts);
    let _ = write!(formula, "!({q})");
    let header = format!(
        "# {} theory formula(s) and one negated query\n\
         # evaluated at position 0 of a two-sided infinite trace (Y looks one step back)\n\
         # satisfiable iff the theory does not entail the query\n",
        sigma.len()
    );
    LtlDocument {
        header,
        formula,
        counts,
    }
}
