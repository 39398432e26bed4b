//! Proof text format: one step per line,
//!
//! ```text
//! 3. {y@0} => {y@10}  [Cut 1 2]
//! ```
//!
//! Step numbers, premise references and hypothesis numbers are 1-based.
//! Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::textio::parse_implication;
use crate::timed::Theory;

use super::{Justification, Proof, RuleSetName};

fn rule_text(j: &Justification) -> String {
    let name = j.kind().name();
    match *j {
        Justification::Hyp(k) => format!("{name} {}", k + 1),
        Justification::Ax | Justification::Ref => name.to_string(),
        Justification::Shf(a, i) => format!("{name} {} {i}", a + 1),
        Justification::CutI(a, b, i) | Justification::SimI(a, b, i) => format!("{name} {} {} {i}", a + 1, b + 1),
        Justification::Pro(a) | Justification::Wea(a) | Justification::Aug(a) => format!("{name} {}", a + 1),
        Justification::Cut(a, b)
        | Justification::Sim(a, b)
        | Justification::Acc(a, b)
        | Justification::Add(a, b)
        | Justification::Tra(a, b) => format!("{name} {} {}", a + 1, b + 1),
    }
}

pub fn format_proof(p: &Proof) -> String {
    let mut out = String::new();
    for (n, step) in p.steps.iter().enumerate() {
        let _ = writeln!(out, "{}. {}  [{}]", n + 1, step.formula, rule_text(&step.justification));
    }
    out
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn parse_rule(text: &str, line: usize, column: usize) -> Result<Justification> {
    let mut tokens = text.split_whitespace();
    let name = tokens
        .next()
        .ok_or_else(|| syntax(line, column, "missing rule name"))?;
    let args: Vec<&str> = tokens.collect();
    let step_ref = |k: usize| -> Result<usize> {
        let raw = args[k];
        match raw.parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n - 1),
            _ => Err(syntax(line, column, format!("invalid step reference {raw:?}"))),
        }
    };
    let shift = |k: usize| -> Result<i64> {
        args[k]
            .parse::<i64>()
            .map_err(|_| syntax(line, column, format!("invalid shift {:?}", args[k])))
    };
    let arity = match name {
        "Ax" | "Ref" => 0,
        "Hyp" | "Pro" | "Wea" | "Aug" => 1,
        "Cut" | "Shf" | "Sim" | "Acc" | "Add" | "Tra" => 2,
        "CutI" | "SimI" => 3,
        other => return Err(syntax(line, column, format!("unknown rule {other:?}"))),
    };
    if args.len() != arity {
        return Err(syntax(
            line,
            column,
            format!("{name} takes {arity} argument(s), found {}", args.len()),
        ));
    }
    Ok(match name {
        "Ax" => Justification::Ax,
        "Ref" => Justification::Ref,
        "Hyp" => Justification::Hyp(step_ref(0)?),
        "Pro" => Justification::Pro(step_ref(0)?),
        "Wea" => Justification::Wea(step_ref(0)?),
        "Aug" => Justification::Aug(step_ref(0)?),
        "Cut" => Justification::Cut(step_ref(0)?, step_ref(1)?),
        "Shf" => Justification::Shf(step_ref(0)?, shift(1)?),
        "Sim" => Justification::Sim(step_ref(0)?, step_ref(1)?),
        "Acc" => Justification::Acc(step_ref(0)?, step_ref(1)?),
        "Add" => Justification::Add(step_ref(0)?, step_ref(1)?),
        "Tra" => Justification::Tra(step_ref(0)?, step_ref(1)?),
        "CutI" => Justification::CutI(step_ref(0)?, step_ref(1)?, shift(2)?),
        "SimI" => Justification::SimI(step_ref(0)?, step_ref(1)?, shift(2)?),
        _ => unreachable!(),
    })
}

pub fn parse_proof(text: &str, theory: Theory, rule_set: RuleSetName) -> Result<Proof> {
    let mut proof = Proof::new(theory, rule_set);
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        let body = content.trim();
        let dot = body
            .find('.')
            .ok_or_else(|| syntax(line, indent + 1, "expected step number"))?;
        let number: usize = body[..dot]
            .trim()
            .parse()
            .map_err(|_| syntax(line, indent + 1, "expected step number"))?;
        if number != proof.len() + 1 {
            return Err(syntax(
                line,
                indent + 1,
                format!("expected step {}, found {number}", proof.len() + 1),
            ));
        }
        let open = body
            .rfind('[')
            .ok_or_else(|| syntax(line, indent + body.len() + 1, "expected '[' rule ']'"))?;
        if !body.ends_with(']') || open < dot {
            return Err(syntax(line, indent + body.len(), "expected '[' rule ']' at end of line"));
        }
        let formula_text = &body[dot + 1..open];
        let formula = parse_implication(formula_text).map_err(|e| match e {
            Error::Syntax { column, message, .. } => syntax(line, indent + dot + 1 + column, message),
            other => other,
        })?;
        let justification = parse_rule(&body[open + 1..body.len() - 1], line, indent + open + 2)?;
        proof.push(formula, justification);
    }
    Ok(proof)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::parse_theory;

    #[test]
    fn round_trip() {
        let text = "\
1. {y@0} => {y@5}  [Hyp 1]
2. {y@5} => {y@10}  [Shf 1 5]
3. {y@0} => {y@10}  [Cut 1 2]
4. {} => {}  [Ax]
5. {y@0} => {y@10}  [CutI 3 4 0]
6. {y@-5} => {y@0}  [SimI 4 1 -5]
";
        let t = parse_theory("{y@0} => {y@5}").unwrap().theory;
        let p = parse_proof(text, t, RuleSetName::Extended).unwrap();
        assert_eq!(p.steps[5].justification, Justification::SimI(3, 0, -5));
        assert_eq!(format_proof(&p), text);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header\n\n1. {a@0} => {a@0}  [Ref]  # reflexive\n";
        let p = parse_proof(text, Theory::default(), RuleSetName::RefSimI).unwrap();
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn malformed_lines() {
        let t = Theory::default;
        assert!(parse_proof("2. {} => {}  [Ax]\n", t(), RuleSetName::AxCutShf).is_err());
        assert!(parse_proof("1. {} => {}  Ax\n", t(), RuleSetName::AxCutShf).is_err());
        assert!(parse_proof("1. {} => {}  [Cut 1]\n", t(), RuleSetName::AxCutShf).is_err());
        assert!(parse_proof("1. {} => {}  [Hyp 0]\n", t(), RuleSetName::AxCutShf).is_err());
        assert!(parse_proof("1. {} => {}  [Foo]\n", t(), RuleSetName::AxCutShf).is_err());
        match parse_proof("1. {a@} => {}  [Ax]\n", t(), RuleSetName::AxCutShf) {
            Err(Error::Syntax { line, .. }) => assert_eq!(line, 1),
            other => panic!("{other:?}"),
        }
    }
}
