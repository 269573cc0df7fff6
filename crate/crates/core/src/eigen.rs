//! Eigenvectors of `ad(a[0])`, the decomposition of arbitrary elements into
//! eigencomponents, and the fusion-law and primitivity checkers.
//!
//! For every level `i >= 1` the span of `a[0], a[i], a[-i]` and the sigma
//! symbols of level `i` has an eigenbasis consisting of `a[0]` (eigenvalue
//! 1), `u_i` and, for `3 | i`, `ubar_i` (eigenvalue 0), `v_i` (eigenvalue 2),
//! and `w_i` and, for `3 | i`, `wbar_i` (eigenvalue `beta = -2`). Since only
//! `a[0]` couples the levels, decomposition is done one level at a time.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::basis::BasisSymbol;
use crate::element::Element;
use crate::error::Error;
use crate::linalg::{self, Row};
use crate::product::{Hhat, Product};
use crate::scalar::Scalar;
use crate::symmetry::DihedralMap;
use crate::window::Window;

/// `c_j = -2a[0] + a[-j] + a[j]`.
pub fn c_hat(j: u64) -> Element {
    let j = j as i64;
    let mut e = Element::zero();
    e.add_term(BasisSymbol::Axis(0), Scalar::new(-2));
    e.add_term(BasisSymbol::Axis(-j), Scalar::ONE);
    e.add_term(BasisSymbol::Axis(j), Scalar::ONE);
    e
}

/// `s[0,n] + s[1,n] + s[2,n]`.
pub fn class_sum(n: u64) -> Element {
    (0..3).map(|r| Element::sigma(r, n)).sum()
}

/// 0-eigenvector `u_i = c_i + 2 s[0,i]`.
pub fn u_hat(i: u64) -> Element {
    let mut e = c_hat(i);
    e.add_sigma(0, i, Scalar::TWO);
    e
}

/// 2-eigenvector `v_i = c_i - s[0,i]`.
pub fn v_hat(i: u64) -> Element {
    let mut e = c_hat(i);
    e.add_sigma(0, i, -Scalar::ONE);
    e
}

/// `beta`-eigenvector `w_i = a[i] - a[-i]`.
pub fn w_hat(i: u64) -> Element {
    let i = i as i64;
    &Element::axis(i) - &Element::axis(-i)
}

/// 0-eigenvector `ubar_i = c_i - S(i)`; equal to `u_i` unless `3 | i`.
pub fn u_bar(i: u64) -> Element {
    &c_hat(i) - &class_sum(i)
}

/// `beta`-eigenvector `wbar_i = s[1,i] - s[2,i]`; zero unless `3 | i`.
pub fn w_bar(i: u64) -> Element {
    &Element::sigma(1, i) - &Element::sigma(2, i)
}

fn pair_combination(f: impl Fn(u64) -> Element, i: u64, j: u64) -> Element {
    let m2 = Scalar::new(-2);
    let mut e = f(i).scale(m2);
    e.add_scaled(m2, &f(j));
    e += &f(i.abs_diff(j));
    e += &f(i + j);
    e
}

/// `c_{i,j} = -2c_i - 2c_j + c_{|i-j|} + c_{i+j}`.
pub fn c_pair(i: u64, j: u64) -> Element {
    pair_combination(c_hat, i, j)
}

/// `u_{i,j}`, built from the `u` vectors like [`c_pair`].
pub fn u_pair(i: u64, j: u64) -> Element {
    pair_combination(u_hat, i, j)
}

/// `v_{i,j}`, built from the `v` vectors like [`c_pair`].
pub fn v_pair(i: u64, j: u64) -> Element {
    pair_combination(v_hat, i, j)
}

/// `sigma_{i,j} = s[0,i] + s[0,j] + s[-i,|i-j|] + s[i,|i-j|] + s[-i,i+j] + s[i,i+j]`.
pub fn sigma_pair(i: u64, j: u64) -> Element {
    let ci = i as i64;
    let mut e = Element::zero();
    e.add_sigma(0, i, Scalar::ONE);
    e.add_sigma(0, j, Scalar::ONE);
    for n in [i.abs_diff(j), i + j] {
        e.add_sigma(-ci, n, Scalar::ONE);
        e.add_sigma(ci, n, Scalar::ONE);
    }
    e
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VectorKind {
    U,
    V,
    W,
    UBar,
    WBar,
    C,
    C2,
    Sigma2,
    U2,
    V2,
}

impl VectorKind {
    pub fn name(self) -> &'static str {
        match self {
            VectorKind::U => "u",
            VectorKind::V => "v",
            VectorKind::W => "w",
            VectorKind::UBar => "ubar",
            VectorKind::WBar => "wbar",
            VectorKind::C => "c",
            VectorKind::C2 => "c2",
            VectorKind::Sigma2 => "sigma2",
            VectorKind::U2 => "u2",
            VectorKind::V2 => "v2",
        }
    }

    pub fn takes_two_indices(self) -> bool {
        matches!(
            self,
            VectorKind::C2 | VectorKind::Sigma2 | VectorKind::U2 | VectorKind::V2
        )
    }
}

impl FromStr for VectorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "u" => VectorKind::U,
            "v" => VectorKind::V,
            "w" => VectorKind::W,
            "ubar" => VectorKind::UBar,
            "wbar" => VectorKind::WBar,
            "c" => VectorKind::C,
            "c2" => VectorKind::C2,
            "sigma2" => VectorKind::Sigma2,
            "u2" => VectorKind::U2,
            "v2" => VectorKind::V2,
            other => return Err(Error::UnknownKind(other.to_string())),
        })
    }
}

/// A distinguished vector addressed by kind and indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NamedVector {
    pub kind: VectorKind,
    pub i: u64,
    pub j: Option<u64>,
}

impl NamedVector {
    pub fn to_element(self) -> Result<Element, Error> {
        named(self.kind, self.i, self.j)
    }
}

impl fmt::Display for NamedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.j {
            Some(j) => write!(f, "{}_{{{},{}}}", self.kind.name(), self.i, j),
            None => write!(f, "{}_{}", self.kind.name(), self.i),
        }
    }
}

/// The vector of the given kind. Two-index kinds require `j`; one-index
/// kinds ignore it.
pub fn named(kind: VectorKind, i: u64, j: Option<u64>) -> Result<Element, Error> {
    let second = || j.ok_or_else(|| Error::MissingSecondIndex(kind.name().to_string()));
    Ok(match kind {
        VectorKind::U => u_hat(i),
        VectorKind::V => v_hat(i),
        VectorKind::W => w_hat(i),
        VectorKind::UBar => u_bar(i),
        VectorKind::WBar => w_bar(i),
        VectorKind::C => c_hat(i),
        VectorKind::C2 => c_pair(i, second()?),
        VectorKind::Sigma2 => sigma_pair(i, second()?),
        VectorKind::U2 => u_pair(i, second()?),
        VectorKind::V2 => v_pair(i, second()?),
    })
}

/// Eigenvalues of `ad(a[0])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Eigenvalue {
    One,
    Zero,
    Alpha,
    Beta,
}

impl Eigenvalue {
    pub fn value(self) -> Scalar {
        match self {
            Eigenvalue::One => Scalar::ONE,
            Eigenvalue::Zero => Scalar::ZERO,
            Eigenvalue::Alpha => Scalar::ALPHA,
            Eigenvalue::Beta => Scalar::BETA,
        }
    }

    /// Label as in the fusion table (`beta` shown as `-2`).
    pub fn label(self) -> &'static str {
        match self {
            Eigenvalue::One => "1",
            Eigenvalue::Zero => "0",
            Eigenvalue::Alpha => "2",
            Eigenvalue::Beta => "-2",
        }
    }

    /// The fusion law: eigenspaces allowed in a product of eigenvectors.
    pub fn fuse(self, other: Eigenvalue) -> &'static [Eigenvalue] {
        use Eigenvalue::*;
        let (a, b) = if self <= other {
            (self, other)
        } else {
            (other, self)
        };
        match (a, b) {
            (One, One) => &[One],
            (One, Zero) => &[],
            (One, Alpha) => &[Alpha],
            (One, Beta) => &[Beta],
            (Zero, Zero) => &[Zero],
            (Zero, Alpha) => &[Alpha],
            (Zero, Beta) => &[Beta],
            (Alpha, Alpha) => &[One, Zero],
            (Alpha, Beta) => &[Beta],
            (Beta, Beta) => &[One, Zero, Alpha],
            _ => unreachable!("pair is ordered"),
        }
    }
}

/// `x = lambda*a[0] + comp0 + comp2 + comp_beta` with each component in the
/// corresponding eigenspace of `ad(a[0])`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EigenDecomposition {
    #[serde(serialize_with = "serialize_scalar")]
    pub lambda: Scalar,
    pub comp0: Element,
    pub comp2: Element,
    pub comp_beta: Element,
}

fn serialize_scalar<S: serde::Serializer>(c: &Scalar, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u8(c.value())
}

impl EigenDecomposition {
    pub fn reassemble(&self) -> Element {
        let mut e = Element::term(self.lambda, BasisSymbol::Axis(0));
        e += &self.comp0;
        e += &self.comp2;
        e += &self.comp_beta;
        e
    }

    /// Eigenvalues whose component is nonzero.
    pub fn present(&self) -> Vec<Eigenvalue> {
        let mut out = Vec::new();
        if !self.lambda.is_zero() {
            out.push(Eigenvalue::One);
        }
        if !self.comp0.is_zero() {
            out.push(Eigenvalue::Zero);
        }
        if !self.comp2.is_zero() {
            out.push(Eigenvalue::Alpha);
        }
        if !self.comp_beta.is_zero() {
            out.push(Eigenvalue::Beta);
        }
        out
    }

    /// Conjugates every component by `m`.
    pub fn map(&self, m: DihedralMap) -> EigenDecomposition {
        EigenDecomposition {
            lambda: self.lambda,
            comp0: m.apply(&self.comp0),
            comp2: m.apply(&self.comp2),
            comp_beta: m.apply(&self.comp_beta),
        }
    }
}

/// Inverse transition matrix of one level block together with the `a[0]`
/// coefficient of each eigenvector.
struct LevelBlock {
    inverse: Vec<Row>,
    eigenvalues: Vec<Eigenvalue>,
    a0_coeffs: Vec<Scalar>,
}

impl LevelBlock {
    /// `columns` holds the eigenvector coordinates on
    /// `(a[n], a[-n], s[0,n] [, s[1,n], s[2,n]])`.
    fn new(columns: &[(Eigenvalue, i64, &[i64])]) -> LevelBlock {
        let dim = columns.len();
        let matrix: Vec<Row> = (0..dim)
            .map(|r| columns.iter().map(|c| Scalar::new(c.2[r])).collect())
            .collect();
        LevelBlock {
            inverse: linalg::invert(&matrix).expect("transition matrix is invertible"),
            eigenvalues: columns.iter().map(|c| c.0).collect(),
            a0_coeffs: columns.iter().map(|c| Scalar::new(c.1)).collect(),
        }
    }
}

static PLAIN_LEVEL: LazyLock<LevelBlock> = LazyLock::new(|| {
    LevelBlock::new(&[
        (Eigenvalue::Zero, -2, &[1, 1, 2]),
        (Eigenvalue::Alpha, -2, &[1, 1, -1]),
        (Eigenvalue::Beta, 0, &[1, -1, 0]),
    ])
});

static TRIPLE_LEVEL: LazyLock<LevelBlock> = LazyLock::new(|| {
    LevelBlock::new(&[
        (Eigenvalue::Zero, -2, &[1, 1, 2, 0, 0]),
        (Eigenvalue::Alpha, -2, &[1, 1, -1, 0, 0]),
        (Eigenvalue::Beta, 0, &[1, -1, 0, 0, 0]),
        (Eigenvalue::Zero, -2, &[1, 1, -1, -1, -1]),
        (Eigenvalue::Beta, 0, &[0, 0, 0, 1, -1]),
    ])
});

/// Splits `x` into its `ad(a[0])` eigencomponents.
pub fn decompose(x: &Element) -> EigenDecomposition {
    let mut lambda = Scalar::ZERO;
    let mut levels: BTreeMap<u64, [Scalar; 5]> = BTreeMap::new();
    for (b, c) in x.terms() {
        let (level, slot) = match *b {
            BasisSymbol::Axis(0) => {
                lambda += c;
                continue;
            }
            BasisSymbol::Axis(i) => (i.unsigned_abs(), if i > 0 { 0 } else { 1 }),
            BasisSymbol::Sigma(s) => (s.level(), 2 + s.class() as usize),
        };
        levels.entry(level).or_default()[slot] = c;
    }

    let mut out = EigenDecomposition {
        lambda,
        comp0: Element::zero(),
        comp2: Element::zero(),
        comp_beta: Element::zero(),
    };
    for (n, coords) in levels {
        let triple = n % 3 == 0;
        let block: &LevelBlock = if triple { &TRIPLE_LEVEL } else { &PLAIN_LEVEL };
        let dim = block.inverse.len();
        let coeffs = linalg::mat_vec(&block.inverse, &coords[..dim]);
        let vectors = [u_hat(n), v_hat(n), w_hat(n), u_bar(n), w_bar(n)];
        for (k, &c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out.lambda -= c * block.a0_coeffs[k];
            let target = match block.eigenvalues[k] {
                Eigenvalue::Zero => &mut out.comp0,
                Eigenvalue::Alpha => &mut out.comp2,
                Eigenvalue::Beta => &mut out.comp_beta,
                Eigenvalue::One => unreachable!(),
            };
            target.add_scaled(c, &vectors[k]);
        }
    }
    out
}

/// Coefficient of `a[0]` in the eigendecomposition of `x`.
pub fn lambda_of(x: &Element) -> Scalar {
    decompose(x).lambda
}

/// Decomposition with respect to `ad(a[j])`, obtained by conjugating with
/// the translation by `j`.
pub fn decompose_at(j: i64, x: &Element) -> EigenDecomposition {
    let back = DihedralMap::translation(-j);
    decompose(&back.apply(x)).map(back.inverse())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Violation {
    pub left: String,
    pub right: String,
    pub offending_component: String,
}

/// Outcome of [`check_fusion`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FusionReport {
    pub pass: bool,
    pub window: u64,
    pub violations: Vec<Violation>,
    pub pairs_checked: usize,
}

/// Outcome of [`check_primitivity`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PrimitivityReport {
    pub pass: bool,
    pub window: u64,
    pub violations: Vec<Violation>,
    pub one_eigenspace_dim: usize,
}

/// The eigenbasis vectors of levels `1..=window` (excluding `a[0]`), labelled.
pub fn window_eigenvectors(window: u64) -> Vec<(String, Eigenvalue, Element)> {
    let mut out = Vec::new();
    for i in 1..=window {
        out.push((format!("u_{i}"), Eigenvalue::Zero, u_hat(i)));
        out.push((format!("v_{i}"), Eigenvalue::Alpha, v_hat(i)));
        out.push((format!("w_{i}"), Eigenvalue::Beta, w_hat(i)));
        if i % 3 == 0 {
            out.push((format!("ubar_{i}"), Eigenvalue::Zero, u_bar(i)));
            out.push((format!("wbar_{i}"), Eigenvalue::Beta, w_bar(i)));
        }
    }
    out
}

/// Multiplies every pair of windowed eigenbasis vectors and checks that each
/// product only has components in the eigenspaces the fusion law allows.
pub fn check_fusion(window: u64) -> FusionReport {
    check_fusion_with(&Hhat, window)
}

pub fn check_fusion_with<P: Product>(product: &P, window: u64) -> FusionReport {
    let vectors = window_eigenvectors(window);
    let pairs: Vec<(usize, usize)> = (0..vectors.len())
        .flat_map(|i| (i..vectors.len()).map(move |j| (i, j)))
        .collect();
    let violations: Vec<Violation> = pairs
        .par_iter()
        .flat_map_iter(|&(i, j)| {
            let (ln, le, lv) = &vectors[i];
            let (rn, re, rv) = &vectors[j];
            let allowed = le.fuse(*re);
            decompose(&product.mul(lv, rv))
                .present()
                .into_iter()
                .filter(|e| !allowed.contains(e))
                .map(|e| Violation {
                    left: ln.clone(),
                    right: rn.clone(),
                    offending_component: e.label().to_string(),
                })
                .collect::<Vec<_>>()
        })
        .collect();
    FusionReport {
        pass: violations.is_empty(),
        window,
        violations,
        pairs_checked: pairs.len(),
    }
}

/// Dimension of the 1-eigenspace of `ad(a[0])` on the window.
///
/// Images are taken in the window of twice the radius, which holds every
/// product of two windowed symbols, so nothing is truncated.
pub fn one_eigenspace_dim<P: Product>(product: &P, window: Window) -> usize {
    let ambient = Window::new(2 * window.radius()).expect("nonzero radius");
    let a0 = Element::axis(0);
    let rows: Vec<Row> = window
        .basis()
        .into_iter()
        .map(|b| {
            let x = Element::basis(b);
            let image = &product.mul(&a0, &x) - &x;
            ambient
                .to_dense(&image)
                .expect("products stay in the doubled window")
        })
        .collect();
    window.size() - linalg::rank(&rows)
}

pub fn check_primitivity(window: u64) -> PrimitivityReport {
    check_primitivity_with(&Hhat, window)
}

pub fn check_primitivity_with<P: Product>(product: &P, window: u64) -> PrimitivityReport {
    let dim = Window::new(window).map_or(0, |w| one_eigenspace_dim(product, w));
    let pass = dim == 1;
    let violations = if pass {
        Vec::new()
    } else {
        vec![Violation {
            left: "a[0]".to_string(),
            right: format!("window {window}"),
            offending_component: format!("1 (dimension {dim})"),
        }]
    };
    PrimitivityReport {
        pass,
        window,
        violations,
        one_eigenspace_dim: dim,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_element;
    use crate::product::mul;

    fn e(s: &str) -> Element {
        parse_element(s).unwrap()
    }

    #[test]
    fn named_examples() {
        assert_eq!(
            named(VectorKind::U, 1, None).unwrap(),
            e("3*a[0] + a[-1] + a[1] + 2*s[0,1]")
        );
        assert_eq!(named(VectorKind::W, 4, None).unwrap(), e("a[4] + 4*a[-4]"));
        assert!(named(VectorKind::V, 0, None).unwrap().is_zero());
        assert_eq!(
            named(VectorKind::Sigma2, 3, Some(6)).unwrap(),
            e("3*s[0,3] + s[0,6] + 2*s[0,9]")
        );
        assert!(matches!(
            named(VectorKind::C2, 1, None),
            Err(Error::MissingSecondIndex(_))
        ));
        assert!(matches!(
            "x".parse::<VectorKind>(),
            Err(Error::UnknownKind(_))
        ));
    }

    #[test]
    fn index_zero_vectors_vanish() {
        for kind in [
            VectorKind::U,
            VectorKind::V,
            VectorKind::W,
            VectorKind::C,
            VectorKind::UBar,
            VectorKind::WBar,
        ] {
            assert!(named(kind, 0, None).unwrap().is_zero(), "{kind:?}");
        }
    }

    #[test]
    fn bars_collapse_off_multiples_of_three() {
        for i in 1..20 {
            if i % 3 != 0 {
                assert_eq!(u_bar(i), u_hat(i));
                assert!(w_bar(i).is_zero());
            } else {
                assert_ne!(u_bar(i), u_hat(i));
            }
        }
    }

    #[test]
    fn transition_determinants() {
        let det = |cols: &[&[i64]]| {
            let n = cols.len();
            let m: Vec<Row> = (0..n)
                .map(|r| cols.iter().map(|c| Scalar::new(c[r])).collect())
                .collect();
            linalg::determinant(&m)
        };
        let plain = det(&[&[1, 1, 2], &[1, 1, -1], &[1, -1, 0]]);
        let triple = det(&[
            &[1, 1, 2, 0, 0],
            &[1, 1, -1, 0, 0],
            &[1, -1, 0, 0, 0],
            &[1, 1, -1, -1, -1],
            &[0, 0, 0, 1, -1],
        ]);
        assert!(!plain.is_zero());
        assert!(!triple.is_zero());
    }

    #[test]
    fn decomposition_examples() {
        let d = decompose(&e("a[1]"));
        assert_eq!(d.lambda, Scalar::ONE);
        assert_eq!(d.comp0, u_hat(1));
        assert_eq!(d.comp2, v_hat(1).scale(Scalar::TWO));
        assert_eq!(d.comp_beta, w_hat(1).scale(Scalar::THREE));

        let d = decompose(&e("s[0,1]"));
        assert_eq!(d.lambda, Scalar::ZERO);
        assert_eq!(d.comp0, u_hat(1).scale(Scalar::TWO));
        assert_eq!(d.comp2, v_hat(1).scale(Scalar::THREE));
        assert!(d.comp_beta.is_zero());

        let d = decompose(&e("a[0]"));
        assert_eq!(d.lambda, Scalar::ONE);
        assert!(d.comp0.is_zero() && d.comp2.is_zero() && d.comp_beta.is_zero());
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_of(&e("a[7]")), Scalar::ONE);
        assert_eq!(lambda_of(&e("s[2,6]")), Scalar::ZERO);
        assert_eq!(lambda_of(&e("3*a[0]")), Scalar::THREE);
    }

    #[test]
    fn components_are_eigenvectors() {
        let a0 = Element::axis(0);
        let x = e("2*a[-6] + a[3] + 4*a[5] + s[0,2] + 3*s[1,6] + s[2,6] + 2*s[0,6] + 4*a[0]");
        let d = decompose(&x);
        assert_eq!(d.reassemble(), x);
        assert!(mul(&a0, &d.comp0).is_zero());
        assert_eq!(mul(&a0, &d.comp2), d.comp2.scale(Scalar::ALPHA));
        assert_eq!(mul(&a0, &d.comp_beta), d.comp_beta.scale(Scalar::BETA));
    }

    #[test]
    fn decomposition_at_other_axes() {
        let x = e("a[2] + s[1,3] + 3*a[-1]");
        let j = 4;
        let aj = Element::axis(j);
        let d = decompose_at(j, &x);
        let mut back = d.reassemble();
        back -= &Element::term(d.lambda, BasisSymbol::Axis(0));
        back += &Element::term(d.lambda, BasisSymbol::Axis(j));
        assert_eq!(back, x);
        assert!(mul(&aj, &d.comp0).is_zero());
        assert_eq!(mul(&aj, &d.comp2), d.comp2.scale(Scalar::ALPHA));
        assert_eq!(mul(&aj, &d.comp_beta), d.comp_beta.scale(Scalar::BETA));
    }

    #[test]
    fn small_fusion_examples() {
        assert_eq!(mul(&u_hat(1), &v_hat(1)), &v_hat(1) + &v_hat(2));
        let ww = mul(&w_hat(1), &w_hat(1));
        assert_eq!(ww, e("3*s[0,2]"));
        let d = decompose(&ww);
        assert_eq!(d.comp0, u_hat(2));
        assert_eq!(d.comp2, v_hat(2).scale(Scalar::FOUR));
        assert!(check_fusion(1).pass);
    }

    #[test]
    fn primitivity_small_windows() {
        for w in [1, 4, 12] {
            let r = check_primitivity(w);
            assert!(r.pass, "{r:?}");
            assert_eq!(r.one_eigenspace_dim, 1);
        }
    }

    #[test]
    fn fusion_table_is_symmetric() {
        use Eigenvalue::*;
        for a in [One, Zero, Alpha, Beta] {
            for b in [One, Zero, Alpha, Beta] {
                assert_eq!(a.fuse(b), b.fuse(a));
            }
        }
        assert_eq!(Beta.fuse(Beta), &[One, Zero, Alpha]);
    }
}
