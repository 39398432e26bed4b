//! Text formats: `.tai` theories and CSV timed datasets.
//!
//! Theory grammar:
//!
//! ```text
//! theory  := [formula (SEP formula)*]       SEP is a newline or ';'
//! formula := set "=>" set
//! set     := "{" [atom ("," atom)*] "}"
//! atom    := IDENT "@" SIGNED_INT
//! ```
//!
//! `#` starts a comment running to the end of the line. Line breaks inside a
//! formula are plain whitespace; a formula ends at its closing `}`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::timed::{Attr, AttributeSet, Implication, Theory, TimedAttribute};

/// A 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

/// Source range of one parsed formula, end position exclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: Pos,
    pub end: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Warning {
    /// An atom listed twice in one set; the copy is dropped.
    DuplicateAtom { pos: Pos, atom: TimedAttribute },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoryDocument {
    pub theory: Theory,
    pub spans: Vec<Span>,
    pub warnings: Vec<Warning>,
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pos: Pos,
    warnings: Vec<Warning>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            chars: text.chars().peekable(),
            pos: Pos { line: 1, column: 1 },
            warnings: Vec::new(),
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.pos.line += 1;
            self.pos.column = 1;
        } else {
            self.pos.column += 1;
        }
        Some(c)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            line: self.pos.line,
            column: self.pos.column,
            message: message.into(),
        })
    }

    fn skip_comment(&mut self) {
        while let Some(c) = self.peek() {
            if c == '\n' {
                break;
            }
            self.bump();
        }
    }

    /// Skips blanks and comments; line breaks too when `newlines` is set.
    fn skip_ws(&mut self, newlines: bool) {
        while let Some(c) = self.peek() {
            match c {
                '#' => self.skip_comment(),
                '\n' if newlines => {
                    self.bump();
                }
                c if c != '\n' && c.is_whitespace() => {
                    self.bump();
                }
                _ => break,
            }
        }
    }

    /// Skips whitespace, comments and formula separators.
    fn skip_separators(&mut self) {
        loop {
            self.skip_ws(true);
            if self.peek() == Some(';') {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => self.error(format!("expected '{want}', found '{c}'")),
            None => self.error(format!("expected '{want}', found end of input")),
        }
    }

    fn ident(&mut self) -> Result<Attr> {
        let mut name = String::new();
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
            Some(c) => return self.error(format!("expected attribute name, found '{c}'")),
            None => return self.error("expected attribute name, found end of input"),
        }
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                name.push(c);
                self.bump();
            } else {
                break;
            }
        }
        Attr::new(&name)
    }

    fn signed_int(&mut self) -> Result<i64> {
        let start = self.pos;
        let mut text = String::new();
        if let Some(c @ ('+' | '-')) = self.peek() {
            text.push(c);
            self.bump();
        }
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                text.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if !text.ends_with(|c: char| c.is_ascii_digit()) {
            return self.error("expected an integer time point");
        }
        text.parse::<i64>().map_err(|_| Error::Syntax {
            line: start.line,
            column: start.column,
            message: format!("time point {text} out of range"),
        })
    }

    fn atom(&mut self) -> Result<TimedAttribute> {
        let attr = self.ident()?;
        self.skip_ws(true);
        self.expect('@')?;
        self.skip_ws(true);
        let time = self.signed_int()?;
        Ok(TimedAttribute::new(attr, time))
    }

    fn set(&mut self) -> Result<AttributeSet> {
        self.expect('{')?;
        let mut set = AttributeSet::new();
        self.skip_ws(true);
        if self.peek() == Some('}') {
            self.bump();
            return Ok(set);
        }
        loop {
            self.skip_ws(true);
            let pos = self.pos;
            let atom = self.atom()?;
            if !set.insert(atom) {
                self.warnings.push(Warning::DuplicateAtom { pos, atom });
            }
            self.skip_ws(true);
            match self.peek() {
                Some(',') => {
                    self.bump();
                }
                Some('}') => {
                    self.bump();
                    return Ok(set);
                }
                Some(c) => return self.error(format!("expected ',' or '}}', found '{c}'")),
                None => return self.error("unterminated set"),
            }
        }
    }

    fn implication(&mut self) -> Result<Implication> {
        let antecedent = self.set()?;
        self.skip_ws(true);
        self.expect('=')?;
        self.expect('>')?;
        self.skip_ws(true);
        let consequent = self.set()?;
        Ok(Implication::new(antecedent, consequent))
    }

    /// After a formula only blanks, a comment, a separator or the end may follow.
    fn end_of_formula(&mut self) -> Result<()> {
        self.skip_ws(false);
        match self.peek() {
            None | Some('\n') | Some(';') => Ok(()),
            Some(c) => self.error(format!("expected newline or ';' after formula, found '{c}'")),
        }
    }
}

pub fn parse_theory(text: &str) -> Result<TheoryDocument> {
    let mut p = Parser::new(text);
    let mut formulas = Vec::new();
    let mut spans = Vec::new();
    loop {
        p.skip_separators();
        if p.peek().is_none() {
            break;
        }
        let start = p.pos;
        let f = p.implication()?;
        let end = p.pos;
        p.end_of_formula()?;
        formulas.push(f);
        spans.push(Span { start, end });
    }
    Ok(TheoryDocument {
        theory: Theory::new(formulas),
        spans,
        warnings: p.warnings,
    })
}

/// Parses exactly one formula; surrounding whitespace, comments and separators are allowed.
pub fn parse_implication(text: &str) -> Result<Implication> {
    let doc = parse_theory(text)?;
    match doc.theory.formulas.len() {
        1 => Ok(doc.theory.formulas.into_iter().next().unwrap()),
        0 => Err(Error::Syntax {
            line: 1,
            column: 1,
            message: "expected a formula".into(),
        }),
        _ => {
            let start = doc.spans[1].start;
            Err(Error::Syntax {
                line: start.line,
                column: start.column,
                message: "expected a single formula".into(),
            })
        }
    }
}

/// Parses a single set such as `{x@0, y@1}`.
pub fn parse_set(text: &str) -> Result<AttributeSet> {
    let mut p = Parser::new(text);
    p.skip_ws(true);
    let set = p.set()?;
    p.skip_ws(true);
    match p.peek() {
        None => Ok(set),
        Some(c) => p.error(format!("unexpected '{c}' after set")),
    }
}

/// One formula per line in canonical atom order.
pub fn serialize_theory(theory: &Theory) -> String {
    let mut out = String::new();
    for f in theory {
        out.push_str(&f.to_string());
        out.push('\n');
    }
    out
}

/// Boolean timed table: rows keyed by time point.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DatasetTable {
    pub time_column: String,
    pub header: Vec<Attr>,
    pub rows: BTreeMap<i64, BTreeSet<Attr>>,
}

impl DatasetTable {
    /// `{ y@t | y present at t }`.
    pub fn to_timed_set(&self) -> AttributeSet {
        self.rows
            .iter()
            .flat_map(|(&t, attrs)| attrs.iter().map(move |&a| TimedAttribute::new(a, t)))
            .collect()
    }

    /// First and last time point of the table.
    pub fn horizon(&self) -> Option<(i64, i64)> {
        let lo = *self.rows.keys().next()?;
        let hi = *self.rows.keys().next_back()?;
        Some((lo, hi))
    }
}

fn csv_syntax(e: &csv::Error) -> Error {
    let line = e.position().map(|p| p.line() as usize).unwrap_or(0);
    Error::Syntax {
        line,
        column: 1,
        message: e.to_string(),
    }
}

pub fn ingest_csv(text: &str) -> Result<DatasetTable> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut records = reader.records();

    let header = match records.next() {
        Some(r) => r.map_err(|e| csv_syntax(&e))?,
        None => {
            return Err(Error::Syntax {
                line: 1,
                column: 1,
                message: "missing header row".into(),
            })
        }
    };
    let header_line = header.position().map(|p| p.line() as usize).unwrap_or(1);
    let mut table = DatasetTable {
        time_column: header.get(0).unwrap_or("").to_string(),
        ..DatasetTable::default()
    };
    for (k, cell) in header.iter().enumerate().skip(1) {
        let attr = Attr::new(cell).map_err(|_| Error::Syntax {
            line: header_line,
            column: k + 1,
            message: format!("invalid attribute name {cell:?}"),
        })?;
        if table.header.contains(&attr) {
            return Err(Error::Syntax {
                line: header_line,
                column: k + 1,
                message: format!("attribute {cell} listed twice"),
            });
        }
        table.header.push(attr);
    }

    for record in records {
        let record = record.map_err(|e| csv_syntax(&e))?;
        let line = record.position().map(|p| p.line() as usize).unwrap_or(0);
        let time_cell = record.get(0).unwrap_or("");
        let time: i64 = time_cell.parse().map_err(|_| Error::Syntax {
            line,
            column: 1,
            message: format!("invalid time point {time_cell:?}"),
        })?;
        let mut present = BTreeSet::new();
        for (k, cell) in record.iter().enumerate().skip(1) {
            match cell {
                "1" | "x" | "X" => {
                    present.insert(table.header[k - 1]);
                }
                "0" | "" => {}
                other => {
                    return Err(Error::UnknownCellValue {
                        value: other.to_string(),
                        line,
                        column: k + 1,
                    })
                }
            }
        }
        if table.rows.insert(time, present).is_some() {
            return Err(Error::DuplicateTimePoint { time, line });
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(pairs: &[(&str, i64)]) -> AttributeSet {
        AttributeSet::from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn parses_single_formula() {
        let f = parse_implication("{x@-1, y@0} => {z@1}").unwrap();
        assert_eq!(f.antecedent, set(&[("x", -1), ("y", 0)]));
        assert_eq!(f.consequent, set(&[("z", 1)]));
    }

    #[test]
    fn parses_empty_antecedent() {
        let f = parse_implication("{} => {y@0}").unwrap();
        assert!(f.antecedent.is_empty());
        assert_eq!(f.consequent, set(&[("y", 0)]));
    }

    #[test]
    fn newline_and_semicolon_separate() {
        let doc = parse_theory("{y@0} => {y@5}\n{y@0} => {y@7}").unwrap();
        assert_eq!(doc.theory.len(), 2);
        let doc = parse_theory("{a@0}=>{b@+1}; {b@0}=>{c@1};\n\n# done\n").unwrap();
        assert_eq!(doc.theory.len(), 2);
        assert_eq!(doc.theory.formulas[0].consequent, set(&[("b", 1)]));
    }

    #[test]
    fn formula_may_span_lines() {
        let doc = parse_theory("{a@0,\n b@1}\n  =>\n {c@2} # tail\n{c@0} => {d@0}").unwrap();
        assert_eq!(doc.theory.len(), 2);
        assert_eq!(doc.spans[0].start, Pos { line: 1, column: 1 });
        assert_eq!(doc.spans[1].start, Pos { line: 5, column: 1 });
    }

    #[test]
    fn duplicate_atom_is_a_warning() {
        let doc = parse_theory("{a@0, a@0} => {b@1}").unwrap();
        assert_eq!(doc.theory.formulas[0].antecedent.len(), 1);
        assert_eq!(doc.warnings.len(), 1);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_theory("{a@0} => {b@1}\n{a@0} -> {b@1}") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 7)),
            other => panic!("{other:?}"),
        }
        assert!(parse_theory("{a@0} => {b@1} {c@0} => {d@0}").is_err());
        assert!(parse_theory("{a@} => {b@1}").is_err());
        assert!(parse_theory("{a@0 => {b@1}").is_err());
        assert!(parse_theory("{9a@0} => {b@1}").is_err());
        assert!(parse_theory("{a@99999999999999999999} => {}").is_err());
    }

    #[test]
    fn serialization_is_canonical() {
        let t = Theory::new(vec![
            Implication::new(set(&[("y", 0)]), set(&[("y", 5)])),
            Implication::new(AttributeSet::new(), AttributeSet::new()),
            Implication::new(set(&[("b", 1), ("a", 0)]), set(&[("c", 2)])),
        ]);
        assert_eq!(
            serialize_theory(&t),
            "{y@0} => {y@5}\n{} => {}\n{a@0, b@1} => {c@2}\n"
        );
        assert_eq!(parse_theory(&serialize_theory(&t)).unwrap().theory, t);
    }

    #[test]
    fn parse_set_alone() {
        assert_eq!(parse_set(" {x@0, y@-2} ").unwrap(), set(&[("x", 0), ("y", -2)]));
        assert!(parse_set("{x@0} z").is_err());
    }

    #[test]
    fn csv_basic() {
        let t = ingest_csv("day,a,b\n3,x,\n1,1,0\n").unwrap();
        assert_eq!(t.header.len(), 2);
        assert_eq!(t.rows.len(), 2);
        assert_eq!(t.to_timed_set(), set(&[("a", 1), ("a", 3)]));
        assert_eq!(t.horizon(), Some((1, 3)));
    }

    #[test]
    fn csv_header_only() {
        let t = ingest_csv("t,a,b\n").unwrap();
        assert!(t.rows.is_empty());
        assert_eq!(t.horizon(), None);
    }

    #[test]
    fn csv_errors() {
        assert_eq!(
            ingest_csv("t,a\n1,x\n1,\n"),
            Err(Error::DuplicateTimePoint { time: 1, line: 3 })
        );
        assert_eq!(
            ingest_csv("t,a\n1,yes\n"),
            Err(Error::UnknownCellValue {
                value: "yes".into(),
                line: 2,
                column: 2
            })
        );
        assert!(matches!(ingest_csv("t,a\nq,x\n"), Err(Error::Syntax { .. })));
        assert!(matches!(ingest_csv("t,a\n1,x,x\n"), Err(Error::Syntax { .. })));
        assert!(matches!(ingest_csv(""), Err(Error::Syntax { .. })));
    }
}
