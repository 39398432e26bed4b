//! Timed attributes, attribute sets, implications and theories.
//!
//! A [`TimedAttribute`] `y@i` pairs an attribute symbol with a relative time
//! point. Sets of them are shifted in time by adding a constant to every time
//! point; all shifts are checked and report overflow instead of wrapping.

use std::cmp::Ordering;
use std::collections::{btree_set, BTreeSet, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};

/// An interned attribute symbol.
///
/// Equality and hashing use the identity of the interned string, ordering is
/// lexicographic on the symbol text.
#[derive(Clone, Copy)]
pub struct Attr(&'static str);

fn interner() -> &'static Mutex<HashSet<&'static str>> {
    static INTERNER: OnceLock<Mutex<HashSet<&'static str>>> = OnceLock::new();
    INTERNER.get_or_init(|| Mutex::new(HashSet::new()))
}

/// Checks `[A-Za-z_][A-Za-z0-9_]*`.
pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Attr {
    pub fn new(name: &str) -> Result<Attr> {
        if !is_identifier(name) {
            return Err(Error::InvalidAttribute(name.to_string()));
        }
        let mut table = interner().lock().unwrap_or_else(|e| e.into_inner());
        if let Some(existing) = table.get(name) {
            return Ok(Attr(existing));
        }
        let leaked: &'static str = Box::leak(name.to_string().into_boxed_str());
        table.insert(leaked);
        Ok(Attr(leaked))
    }

    pub fn as_str(&self) -> &'static str {
        self.0
    }
}

impl PartialEq for Attr {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.0, other.0)
    }
}

impl Eq for Attr {}

impl Hash for Attr {
    fn hash<H: Hasher>(&self, state: &mut H) {
        (self.0.as_ptr() as usize).hash(state);
    }
}

impl Ord for Attr {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            Ordering::Equal
        } else {
            self.0.cmp(other.0)
        }
    }
}

impl PartialOrd for Attr {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Attr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

impl fmt::Display for Attr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

/// Attribute `attr` observed at relative time `time`.
///
/// Ordered by attribute symbol, then by time.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TimedAttribute {
    pub attr: Attr,
    pub time: i64,
}

impl TimedAttribute {
    pub fn new(attr: Attr, time: i64) -> Self {
        TimedAttribute { attr, time }
    }

    pub fn shift(self, j: i64) -> Result<Self> {
        let time = self
            .time
            .checked_add(j)
            .ok_or(Error::IntegerOverflow { shift: j })?;
        Ok(TimedAttribute { attr: self.attr, time })
    }
}

impl fmt::Debug for TimedAttribute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.attr, self.time)
    }
}

impl fmt::Display for TimedAttribute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.attr, self.time)
    }
}

/// A finite set of timed attributes kept in canonical order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AttributeSet(BTreeSet<TimedAttribute>);

impl AttributeSet {
    pub fn new() -> Self {
        AttributeSet(BTreeSet::new())
    }

    /// Builds a set from `(symbol, time)` pairs.
    pub fn from_pairs<'a, I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, i64)>,
    {
        pairs
            .into_iter()
            .map(|(name, time)| Ok(TimedAttribute::new(Attr::new(name)?, time)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn insert(&mut self, a: TimedAttribute) -> bool {
        self.0.insert(a)
    }

    pub fn contains(&self, a: &TimedAttribute) -> bool {
        self.0.contains(a)
    }

    pub fn iter(&self) -> btree_set::Iter<'_, TimedAttribute> {
        self.0.iter()
    }

    pub fn first(&self) -> Option<&TimedAttribute> {
        self.0.first()
    }

    pub fn is_subset(&self, other: &AttributeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &AttributeSet) -> AttributeSet {
        AttributeSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &AttributeSet) -> AttributeSet {
        AttributeSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &AttributeSet) -> AttributeSet {
        AttributeSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn extend<I: IntoIterator<Item = TimedAttribute>>(&mut self, iter: I) {
        self.0.extend(iter)
    }

    /// All elements of this set carrying the given attribute, ascending in time.
    pub fn times_of(&self, attr: Attr) -> impl Iterator<Item = i64> + '_ {
        self.0
            .range(TimedAttribute::new(attr, i64::MIN)..=TimedAttribute::new(attr, i64::MAX))
            .map(|a| a.time)
    }

    /// The time shift `{ y@(i+j) | y@i in self }`.
    pub fn shift(&self, j: i64) -> Result<AttributeSet> {
        if j == 0 {
            return Ok(self.clone());
        }
        self.0.iter().map(|a| a.shift(j)).collect()
    }

    /// Lowest time point, `None` on the empty set.
    pub fn lower(&self) -> Option<i64> {
        self.0.iter().map(|a| a.time).min()
    }

    /// Greatest time point, `None` on the empty set.
    pub fn upper(&self) -> Option<i64> {
        self.0.iter().map(|a| a.time).max()
    }

    /// `(l(S), u(S))`.
    pub fn bounds(&self) -> Result<(i64, i64)> {
        match (self.lower(), self.upper()) {
            (Some(l), Some(u)) => Ok((l, u)),
            _ => Err(Error::EmptySet),
        }
    }

    /// Keeps only elements whose time lies in `[lo, hi]`.
    pub fn restrict(&self, lo: i64, hi: i64) -> AttributeSet {
        AttributeSet(
            self.0
                .iter()
                .filter(|a| lo <= a.time && a.time <= hi)
                .copied()
                .collect(),
        )
    }
}

impl FromIterator<TimedAttribute> for AttributeSet {
    fn from_iter<I: IntoIterator<Item = TimedAttribute>>(iter: I) -> Self {
        AttributeSet(iter.into_iter().collect())
    }
}

impl IntoIterator for AttributeSet {
    type Item = TimedAttribute;
    type IntoIter = btree_set::IntoIter<TimedAttribute>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a AttributeSet {
    type Item = &'a TimedAttribute;
    type IntoIter = btree_set::Iter<'a, TimedAttribute>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for AttributeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for AttributeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `antecedent => consequent`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Implication {
    pub antecedent: AttributeSet,
    pub consequent: AttributeSet,
}

impl Implication {
    pub fn new(antecedent: AttributeSet, consequent: AttributeSet) -> Self {
        Implication {
            antecedent,
            consequent,
        }
    }

    /// Non-empty sides and `u(antecedent) <= l(consequent)`.
    pub fn is_predictive(&self) -> bool {
        match (self.antecedent.upper(), self.consequent.lower()) {
            (Some(u), Some(l)) => u <= l,
            _ => false,
        }
    }

    pub fn shift(&self, j: i64) -> Result<Implication> {
        Ok(Implication {
            antecedent: self.antecedent.shift(j)?,
            consequent: self.consequent.shift(j)?,
        })
    }

    /// Both sides together.
    pub fn atoms(&self) -> AttributeSet {
        self.antecedent.union(&self.consequent)
    }

    /// `u(A ∪ B) - l(A ∪ B)`, zero when the formula has no atoms.
    pub fn span(&self) -> i64 {
        match self.atoms().bounds() {
            Ok((l, u)) => u - l,
            Err(_) => 0,
        }
    }
}

impl fmt::Display for Implication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} => {}", self.antecedent, self.consequent)
    }
}

impl fmt::Debug for Implication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An ordered list of formulas. Duplicates may be stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Theory {
    pub formulas: Vec<Implication>,
}

impl Theory {
    pub fn new(formulas: Vec<Implication>) -> Self {
        Theory { formulas }
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    pub fn push(&mut self, f: Implication) {
        self.formulas.push(f);
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Implication> {
        self.formulas.iter()
    }

    pub fn get(&self, index: usize) -> Option<&Implication> {
        self.formulas.get(index)
    }

    pub fn is_predictive(&self) -> bool {
        self.formulas.iter().all(Implication::is_predictive)
    }

    /// Fails with the index of the first non-predictive formula.
    pub fn require_predictive(&self) -> Result<()> {
        match self.formulas.iter().position(|f| !f.is_predictive()) {
            Some(index) => Err(Error::NotPredictive { index }),
            None => Ok(()),
        }
    }

    /// Equality as sets of formulas: order and duplicates are ignored.
    pub fn set_eq(&self, other: &Theory) -> bool {
        let a: BTreeSet<&Implication> = self.formulas.iter().collect();
        let b: BTreeSet<&Implication> = other.formulas.iter().collect();
        a == b
    }

    /// The theory with the formula at `index` left out.
    pub fn without(&self, index: usize) -> Theory {
        let mut formulas = self.formulas.clone();
        formulas.remove(index);
        Theory { formulas }
    }
}

impl FromIterator<Implication> for Theory {
    fn from_iter<I: IntoIterator<Item = Implication>>(iter: I) -> Self {
        Theory {
            formulas: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a Theory {
    type Item = &'a Implication;
    type IntoIter = std::slice::Iter<'a, Implication>;

    fn into_iter(self) -> Self::IntoIter {
        self.formulas.iter()
    }
}

impl fmt::Debug for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.formulas.iter()).finish()
    }
}
