//! Finite truncations of the basis.

use crate::basis::{canon_class, BasisSymbol};
use crate::element::Element;
use crate::error::Error;
use crate::linalg::Row;
use crate::scalar::Scalar;

/// The symbols `a[i]` with `|i| <= W` and `s[r,n]` with `n <= W`.
///
/// Basis order is `a[-W] .. a[W]` followed by the sigma symbols sorted by
/// `(n, r)`, which agrees with the ordering of [`BasisSymbol`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    radius: u64,
}

impl Window {
    pub fn new(radius: u64) -> Result<Window, Error> {
        if radius == 0 {
            return Err(Error::WindowTooSmall { min: 1, got: 0 });
        }
        Ok(Window { radius })
    }

    pub fn radius(self) -> u64 {
        self.radius
    }

    fn sigma_count_below(level: u64) -> u64 {
        // Levels 1..level-1: one symbol each, plus two extra per multiple of 3.
        let m = level - 1;
        m + 2 * (m / 3)
    }

    fn axis_count(self) -> usize {
        (2 * self.radius + 1) as usize
    }

    /// `(2W + 1) + W + 2*floor(W/3)`.
    pub fn size(self) -> usize {
        self.axis_count() + Self::sigma_count_below(self.radius + 1) as usize
    }

    pub fn basis(self) -> Vec<BasisSymbol> {
        let w = self.radius as i64;
        let mut out: Vec<BasisSymbol> = (-w..=w).map(BasisSymbol::Axis).collect();
        for n in 1..=self.radius {
            let classes = if n % 3 == 0 { 0..3 } else { 0..1 };
            out.extend(classes.filter_map(|r| canon_class(r, n)));
        }
        out
    }

    pub fn index_of(self, b: &BasisSymbol) -> Option<usize> {
        match *b {
            BasisSymbol::Axis(i) => {
                (i.unsigned_abs() <= self.radius).then(|| (i + self.radius as i64) as usize)
            }
            BasisSymbol::Sigma(s) => (s.level() <= self.radius).then(|| {
                self.axis_count() + Self::sigma_count_below(s.level()) as usize + s.class() as usize
            }),
        }
    }

    pub fn contains_symbol(self, b: &BasisSymbol) -> bool {
        b.level() <= self.radius
    }

    pub fn contains(self, x: &Element) -> bool {
        x.max_level() <= self.radius
    }

    /// Coordinates in window basis order.
    pub fn to_dense(self, x: &Element) -> Result<Row, Error> {
        let mut row = vec![Scalar::ZERO; self.size()];
        for (b, c) in x.terms() {
            let idx = self.index_of(b).ok_or(Error::OutsideWindow {
                symbol: *b,
                radius: self.radius,
            })?;
            row[idx] = c;
        }
        Ok(row)
    }

    pub fn from_dense(self, basis: &[BasisSymbol], row: &[Scalar]) -> Element {
        debug_assert_eq!(basis.len(), row.len());
        basis.iter().copied().zip(row.iter().copied()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(Window::new(9).unwrap().size(), 34);
        assert_eq!(Window::new(3).unwrap().size(), 12);
        assert_eq!(Window::new(2).unwrap().size(), 7);
        assert!(Window::new(0).is_err());
        for w in 1..30 {
            let win = Window::new(w).unwrap();
            let expected = (2 * w + 1) + w + 2 * (w / 3);
            assert_eq!(win.size() as u64, expected);
            assert_eq!(win.basis().len() as u64, expected);
        }
    }

    #[test]
    fn index_agrees_with_sorted_basis() {
        let win = Window::new(10).unwrap();
        let basis = win.basis();
        let mut sorted = basis.clone();
        sorted.sort();
        assert_eq!(basis, sorted);
        for (i, b) in basis.iter().enumerate() {
            assert_eq!(win.index_of(b), Some(i));
        }
        assert_eq!(win.index_of(&BasisSymbol::Axis(11)), None);
        assert_eq!(win.index_of(&BasisSymbol::sigma(0, 11).unwrap()), None);
    }

    #[test]
    fn dense_round_trip() {
        let win = Window::new(4).unwrap();
        let x: Element = "a[-4] + 2*s[2,3] + 3*s[0,4]".parse().unwrap();
        let row = win.to_dense(&x).unwrap();
        assert_eq!(win.from_dense(&win.basis(), &row), x);
        assert!(win.to_dense(&Element::axis(5)).is_err());
    }
}
