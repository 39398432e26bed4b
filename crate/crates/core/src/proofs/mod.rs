//! Proofs as numbered step sequences and their checking.
//!
//! Each step carries a formula and a justification citing earlier steps.
//! Premise indices are 0-based in memory and 1-based in the text format.

mod check;
mod deduction;
mod normalize;
mod rules;
mod text;
mod translate;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::timed::{Implication, Theory};

pub use check::{check_proof, CheckResult};
pub use deduction::{extract_deduction_witness, union_of_shifts, DeductionWitness};
pub use normalize::{normalized_from_trace, prove_by_closure};
pub use rules::{apply_rule, RuleApp};
pub use text::{format_proof, parse_proof};
pub use translate::translate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Justification {
    /// Formula number `k` of the theory.
    Hyp(usize),
    Ax,
    Ref,
    Cut(usize, usize),
    Shf(usize, i64),
    Sim(usize, usize),
    CutI(usize, usize, i64),
    SimI(usize, usize, i64),
    Acc(usize, usize),
    Pro(usize),
    Add(usize, usize),
    Wea(usize),
    Aug(usize),
    Tra(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleKind {
    Hyp,
    Ax,
    Ref,
    Cut,
    Shf,
    Sim,
    CutI,
    SimI,
    Acc,
    Pro,
    Add,
    Wea,
    Aug,
    Tra,
}

impl RuleKind {
    pub fn name(self) -> &'static str {
        match self {
            RuleKind::Hyp => "Hyp",
            RuleKind::Ax => "Ax",
            RuleKind::Ref => "Ref",
            RuleKind::Cut => "Cut",
            RuleKind::Shf => "Shf",
            RuleKind::Sim => "Sim",
            RuleKind::CutI => "CutI",
            RuleKind::SimI => "SimI",
            RuleKind::Acc => "Acc",
            RuleKind::Pro => "Pro",
            RuleKind::Add => "Add",
            RuleKind::Wea => "Wea",
            RuleKind::Aug => "Aug",
            RuleKind::Tra => "Tra",
        }
    }
}

impl Justification {
    pub fn kind(&self) -> RuleKind {
        match self {
            Justification::Hyp(_) => RuleKind::Hyp,
            Justification::Ax => RuleKind::Ax,
            Justification::Ref => RuleKind::Ref,
            Justification::Cut(..) => RuleKind::Cut,
            Justification::Shf(..) => RuleKind::Shf,
            Justification::Sim(..) => RuleKind::Sim,
            Justification::CutI(..) => RuleKind::CutI,
            Justification::SimI(..) => RuleKind::SimI,
            Justification::Acc(..) => RuleKind::Acc,
            Justification::Pro(_) => RuleKind::Pro,
            Justification::Add(..) => RuleKind::Add,
            Justification::Wea(_) => RuleKind::Wea,
            Justification::Aug(_) => RuleKind::Aug,
            Justification::Tra(..) => RuleKind::Tra,
        }
    }

    /// Indices of the cited steps.
    pub fn premises(&self) -> Vec<usize> {
        match *self {
            Justification::Hyp(_) | Justification::Ax | Justification::Ref => vec![],
            Justification::Shf(p, _)
            | Justification::Pro(p)
            | Justification::Wea(p)
            | Justification::Aug(p) => vec![p],
            Justification::Cut(p, q)
            | Justification::Sim(p, q)
            | Justification::CutI(p, q, _)
            | Justification::SimI(p, q, _)
            | Justification::Acc(p, q)
            | Justification::Add(p, q)
            | Justification::Tra(p, q) => vec![p, q],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofStep {
    pub formula: Implication,
    pub justification: Justification,
}

/// Named rule systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleSetName {
    /// (Ax), (Cut), (Shf).
    AxCutShf,
    /// (Ax) and (Cut_i); plain (Cut) is accepted as the case i = 0.
    AxCutI,
    /// (Ref) and (Sim_i); plain (Sim) is accepted as the case i = 0.
    RefSimI,
    /// (Ax) and (Cut) without shifts.
    AxCut,
    /// (Ref), (Shf), (Acc), (Pro) arranged in the five normalized phases.
    Normalized,
    /// Every rule, no ordering constraints.
    Extended,
}

impl RuleSetName {
    pub const ALL: [RuleSetName; 6] = [
        RuleSetName::AxCutShf,
        RuleSetName::AxCutI,
        RuleSetName::RefSimI,
        RuleSetName::AxCut,
        RuleSetName::Normalized,
        RuleSetName::Extended,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleSetName::AxCutShf => "AX_CUT_SHF",
            RuleSetName::AxCutI => "AX_CUTI",
            RuleSetName::RefSimI => "REF_SIMI",
            RuleSetName::AxCut => "AX_CUT",
            RuleSetName::Normalized => "NORMALIZED",
            RuleSetName::Extended => "EXTENDED",
        }
    }

    /// Justification kinds admitted by the rule set. Hypotheses are always allowed.
    pub fn allows(self, kind: RuleKind) -> bool {
        use RuleKind::*;
        match self {
            RuleSetName::AxCutShf => matches!(kind, Hyp | Ax | Cut | Shf),
            RuleSetName::AxCutI => matches!(kind, Hyp | Ax | CutI | Cut),
            RuleSetName::RefSimI => matches!(kind, Hyp | Ref | SimI | Sim),
            RuleSetName::AxCut => matches!(kind, Hyp | Ax | Cut),
            RuleSetName::Normalized => matches!(kind, Hyp | Shf | Ref | Acc | Pro),
            RuleSetName::Extended => true,
        }
    }
}

impl fmt::Display for RuleSetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleSetName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RuleSetName::ALL
            .into_iter()
            .find(|r| r.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParams(format!("unknown rule set {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proof {
    pub steps: Vec<ProofStep>,
    pub theory: Theory,
    pub rule_set: RuleSetName,
}

impl Proof {
    pub fn new(theory: Theory, rule_set: RuleSetName) -> Self {
        Proof {
            steps: Vec::new(),
            theory,
            rule_set,
        }
    }

    /// Formula of the last step.
    pub fn conclusion(&self) -> Option<&Implication> {
        self.steps.last().map(|s| &s.formula)
    }

    /// Appends a step and returns its index.
    pub fn push(&mut self, formula: Implication, justification: Justification) -> usize {
        self.steps.push(ProofStep {
            formula,
            justification,
        });
        self.steps.len() - 1
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn formula(&self, index: usize) -> &Implication {
        &self.steps[index].formula
    }
}
