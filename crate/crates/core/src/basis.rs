//! Canonical basis symbols `a[i]` and `s[r,n]`.

use std::fmt;

use serde::{Serialize, Serializer};

/// A sigma symbol `s[r,n]` in canonical form.
///
/// Levels not divisible by three carry class 0 only; level 0 never occurs.
/// Field order gives the `(level, class)` ordering used for printing and
/// pivoting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sigma {
    level: u64,
    class: u8,
}

impl Sigma {
    pub fn level(self) -> u64 {
        self.level
    }

    /// Residue class in `0..3`.
    pub fn class(self) -> u8 {
        self.class
    }
}

/// Basis element of the algebra: an axis `a[i]` or a sigma symbol.
///
/// Axes sort before sigma symbols; axes by index, sigma symbols by
/// `(level, class)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisSymbol {
    Axis(i64),
    Sigma(Sigma),
}

/// Residue of `r` modulo 3 in `0..3`.
#[inline]
pub fn class_of(r: i64) -> u8 {
    r.rem_euclid(3) as u8
}

/// Canonical symbol for `s[r,n]`, or `None` when `n = 0` (the zero element).
///
/// For `n` not divisible by three every class collapses onto class 0.
pub fn canon_symbol(r: i64, n: u64) -> Option<BasisSymbol> {
    canon_class(class_of(r), n)
}

pub(crate) fn canon_class(class: u8, level: u64) -> Option<BasisSymbol> {
    if level == 0 {
        return None;
    }
    let class = if level % 3 == 0 { class % 3 } else { 0 };
    Some(BasisSymbol::Sigma(Sigma { level, class }))
}

impl BasisSymbol {
    pub fn axis(i: i64) -> BasisSymbol {
        BasisSymbol::Axis(i)
    }

    pub fn sigma(r: i64, n: u64) -> Option<BasisSymbol> {
        canon_symbol(r, n)
    }

    /// `|i|` for an axis, the level for a sigma symbol.
    pub fn level(&self) -> u64 {
        match *self {
            BasisSymbol::Axis(i) => i.unsigned_abs(),
            BasisSymbol::Sigma(s) => s.level,
        }
    }

    pub fn is_axis(&self) -> bool {
        matches!(self, BasisSymbol::Axis(_))
    }
}

impl fmt::Display for BasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BasisSymbol::Axis(i) => write!(f, "a[{i}]"),
            BasisSymbol::Sigma(s) => write!(f, "s[{},{}]", s.class, s.level),
        }
    }
}

impl Serialize for BasisSymbol {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
