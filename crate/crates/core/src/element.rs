//! Sparse vectors of the algebra.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::basis::{canon_symbol, BasisSymbol};
use crate::error::ParseError;
use crate::format;
use crate::scalar::Scalar;

/// A finitely supported GF(5)-linear combination of basis symbols.
///
/// No zero coefficient is ever stored, so structural equality is equality
/// of vectors.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<BasisSymbol, Scalar>,
}

impl Element {
    pub fn zero() -> Element {
        Element::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn basis(symbol: BasisSymbol) -> Element {
        Element::term(Scalar::ONE, symbol)
    }

    pub fn term(coeff: Scalar, symbol: BasisSymbol) -> Element {
        let mut e = Element::zero();
        e.add_term(symbol, coeff);
        e
    }

    /// `a[i]`.
    pub fn axis(i: i64) -> Element {
        Element::basis(BasisSymbol::Axis(i))
    }

    /// `s[r,n]`, which is zero for `n = 0`.
    pub fn sigma(r: i64, n: u64) -> Element {
        canon_symbol(r, n).map(Element::basis).unwrap_or_default()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, symbol: &BasisSymbol) -> Scalar {
        self.terms.get(symbol).copied().unwrap_or(Scalar::ZERO)
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&BasisSymbol, Scalar)> + '_ {
        self.terms.iter().map(|(b, &c)| (b, c))
    }

    pub fn support(&self) -> impl Iterator<Item = &BasisSymbol> + '_ {
        self.terms.keys()
    }

    /// Largest `|i|` or sigma level in the support; 0 for the zero element.
    pub fn max_level(&self) -> u64 {
        self.support().map(BasisSymbol::level).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, symbol: BasisSymbol, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(symbol) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                let c = *o.get() + coeff;
                if c.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = c;
                }
            }
        }
    }

    /// Adds `coeff * s[r,n]`; a no-op for `n = 0`.
    pub fn add_sigma(&mut self, r: i64, n: u64, coeff: Scalar) {
        if let Some(b) = canon_symbol(r, n) {
            self.add_term(b, coeff);
        }
    }

    /// `self += coeff * other`.
    pub fn add_scaled(&mut self, coeff: Scalar, other: &Element) {
        if coeff.is_zero() {
            return;
        }
        for (b, c) in other.terms() {
            self.add_term(*b, coeff * c);
        }
    }

    pub fn scale(&self, coeff: Scalar) -> Element {
        if coeff.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(b, &c)| (*b, c * coeff)).collect(),
        }
    }

    /// Canonical text form; see [`format::print_element`].
    pub fn to_text(&self) -> String {
        format::print_element(self)
    }
}

/// Coefficient-wise sum.
pub fn add(x: &Element, y: &Element) -> Element {
    x + y
}

/// Scalar multiple.
pub fn scale(c: Scalar, x: &Element) -> Element {
    x.scale(c)
}

impl FromIterator<(BasisSymbol, Scalar)> for Element {
    fn from_iter<I: IntoIterator<Item = (BasisSymbol, Scalar)>>(iter: I) -> Self {
        let mut e = Element::zero();
        for (b, c) in iter {
            e.add_term(b, c);
        }
        e
    }
}

impl From<BasisSymbol> for Element {
    fn from(b: BasisSymbol) -> Self {
        Element::basis(b)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format::print_element(self))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

impl FromStr for Element {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        format::parse_element(s)
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        self.add_scaled(Scalar::ONE, rhs);
    }
}

impl SubAssign<&Element> for Element {
    fn sub_assign(&mut self, rhs: &Element) {
        self.add_scaled(-Scalar::ONE, rhs);
    }
}

impl Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for Element {
    type Output = Element;
    fn add(mut self, rhs: Element) -> Element {
        self += &rhs;
        self
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(mut self, rhs: Element) -> Element {
        self -= &rhs;
        self
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(-Scalar::ONE)
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

impl Mul<&Element> for Scalar {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        rhs.scale(self)
    }
}

impl Mul<Element> for Scalar {
    type Output = Element;
    fn mul(self, rhs: Element) -> Element {
        rhs.scale(self)
    }
}

impl std::iter::Sum for Element {
    fn sum<I: Iterator<Item = Element>>(iter: I) -> Element {
        iter.fold(Element::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::new(v)
    }

    #[test]
    fn addition_examples() {
        let x = Element::term(s(3), BasisSymbol::Axis(0));
        let y = Element::term(s(2), BasisSymbol::Axis(0));
        assert!(add(&x, &y).is_zero());

        let sum = add(&Element::axis(1), &Element::sigma(0, 2));
        assert_eq!(sum.len(), 2);
        assert_eq!(sum.coeff(&BasisSymbol::Axis(1)), Scalar::ONE);

        let t = Element::sigma(1, 3).scale(s(4));
        assert_eq!(add(&t, &t), Element::sigma(1, 3).scale(s(3)));
    }

    #[test]
    fn scaling_examples() {
        assert!(scale(Scalar::ZERO, &Element::axis(7)).is_zero());
        assert_eq!(scale(s(2), &Element::axis(0).scale(s(3))), Element::axis(0));
        assert_eq!(
            scale(s(4), &Element::sigma(2, 3)).coeff(&BasisSymbol::sigma(2, 3).unwrap()),
            s(4)
        );
    }

    #[test]
    fn sigma_level_zero_is_zero() {
        assert!(Element::sigma(1, 0).is_zero());
        assert_eq!(Element::sigma(2, 5), Element::sigma(0, 5));
    }

    #[test]
    fn max_level_tracks_support() {
        let x = &Element::axis(-4) + &Element::sigma(1, 6);
        assert_eq!(x.max_level(), 6);
        assert_eq!(Element::zero().max_level(), 0);
    }
}
