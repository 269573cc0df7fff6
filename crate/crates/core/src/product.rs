//! The commutative nonassociative product.
//!
//! Writing `i%3` for the class of an index and `S(n) = s[0,n]+s[1,n]+s[2,n]`
//! (which is `3*s[0,n]` for `n` prime to 3), the basis products are
//!
//! ```text
//! a[i]a[j]     = -2(a[i]+a[j]) + s[i%3,|i-j|]
//! a[i]s[r,j]   = -2a[i] + a[i-j] + a[i+j] - s[r,j]
//!                - ((d-1)*(i-r)) (s[r-1,j] - s[r+1,j])      d = [i%3 == r%3]
//! s[r,i]s[t,j] = 2(s[r,i]+s[t,j]) - 2(S(|i-j|) + S(i+j))   unless 3 | i and 3 | j
//! s[r,3h]s[r,3k] = 2(s[r,3h]+s[r,3k]) - (s[r,3|h-k|] + s[r,3(h+k)])
//! s[r,3h]s[t,3k] = 2(P(3h)+P(3k)) - (P(3|h-k|) + P(3(h+k)))   r != t
//! ```
//!
//! where in the last line `P(n) = S(n) - 2 s[q,n]` and `q` is the class
//! distinct from both `r` and `t`. The `*` operation sends `(-1, 1)` to `-1`,
//! `(-1, 2)` to `1` and `(0, _)` to `0`. Symbols with level 0 vanish and
//! classes collapse at levels prime to 3; both are handled by accumulating
//! through [`Element::add_sigma`].

use crate::basis::{class_of, BasisSymbol, Sigma};
use crate::element::Element;
use crate::scalar::Scalar;

/// A bilinear product given by its values on basis symbols.
///
/// [`Hhat`] is the algebra itself; other implementations exist for testing
/// (for instance deliberately corrupted rules fed to the checkers).
pub trait Product: Sync {
    fn mul_basis(&self, x: &BasisSymbol, y: &BasisSymbol) -> Element;

    fn mul(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::zero();
        for (bx, cx) in x.terms() {
            for (by, cy) in y.terms() {
                out.add_scaled(cx * cy, &self.mul_basis(bx, by));
            }
        }
        out
    }
}

/// The product rules of the algebra.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Hhat;

/// The `*` convention: `sign` is `delta - 1` in `{-1, 0}`, `class` a residue
/// mod 3.
pub fn star(sign: i8, class: u8) -> i8 {
    match (sign, class % 3) {
        (0, _) => 0,
        (-1, 1) => -1,
        (-1, 2) => 1,
        (s, c) => panic!("star({s}, {c}) is undefined"),
    }
}

const M2: Scalar = Scalar::THREE;

impl Product for Hhat {
    fn mul_basis(&self, x: &BasisSymbol, y: &BasisSymbol) -> Element {
        match (*x, *y) {
            (BasisSymbol::Axis(i), BasisSymbol::Axis(j)) => axis_axis(i, j),
            (BasisSymbol::Axis(i), BasisSymbol::Sigma(s))
            | (BasisSymbol::Sigma(s), BasisSymbol::Axis(i)) => axis_sigma(i, s),
            (BasisSymbol::Sigma(p), BasisSymbol::Sigma(q)) => sigma_sigma(p, q),
        }
    }
}

/// Product of two basis symbols.
pub fn mul_basis(x: &BasisSymbol, y: &BasisSymbol) -> Element {
    Hhat.mul_basis(x, y)
}

/// Product of two elements.
pub fn mul(x: &Element, y: &Element) -> Element {
    Hhat.mul(x, y)
}

fn axis_axis(i: i64, j: i64) -> Element {
    let mut out = Element::zero();
    out.add_term(BasisSymbol::Axis(i), M2);
    out.add_term(BasisSymbol::Axis(j), M2);
    out.add_sigma(i, i.abs_diff(j), Scalar::ONE);
    out
}

fn axis_sigma(i: i64, s: Sigma) -> Element {
    let r = i64::from(s.class());
    let n = s.level();
    let step = i64::try_from(n).expect("sigma level exceeds i64");
    let mut out = Element::zero();
    out.add_term(BasisSymbol::Axis(i), M2);
    out.add_term(BasisSymbol::Axis(i - step), Scalar::ONE);
    out.add_term(BasisSymbol::Axis(i + step), Scalar::ONE);
    out.add_sigma(r, n, -Scalar::ONE);
    let delta_minus_one = if class_of(i) == s.class() { 0 } else { -1 };
    let k = star(delta_minus_one, class_of(i - r));
    if k != 0 {
        let k = -Scalar::new(i64::from(k));
        out.add_sigma(r - 1, n, k);
        out.add_sigma(r + 1, n, -k);
    }
    out
}

/// `S(n)`, scaled.
fn add_class_sum(out: &mut Element, n: u64, coeff: Scalar) {
    for r in 0..3 {
        out.add_sigma(r, n, coeff);
    }
}

fn sigma_sigma(p: Sigma, q: Sigma) -> Element {
    let (i, j) = (p.level(), q.level());
    let (r, t) = (i64::from(p.class()), i64::from(q.class()));
    let mut out = Element::zero();
    if i % 3 != 0 || j % 3 != 0 {
        out.add_sigma(r, i, Scalar::TWO);
        out.add_sigma(t, j, Scalar::TWO);
        add_class_sum(&mut out, i.abs_diff(j), M2);
        add_class_sum(&mut out, i + j, M2);
        return out;
    }
    let (diff, sum) = (i.abs_diff(j), i + j);
    if r == t {
        out.add_sigma(r, i, Scalar::TWO);
        out.add_sigma(r, j, Scalar::TWO);
        out.add_sigma(r, diff, -Scalar::ONE);
        out.add_sigma(r, sum, -Scalar::ONE);
        return out;
    }
    let q = 3 - r - t;
    let mut add_p = |n: u64, coeff: Scalar| {
        add_class_sum(&mut out, n, coeff);
        out.add_sigma(q, n, M2 * coeff);
    };
    add_p(i, Scalar::TWO);
    add_p(j, Scalar::TWO);
    add_p(diff, -Scalar::ONE);
    add_p(sum, -Scalar::ONE);
    out
}
