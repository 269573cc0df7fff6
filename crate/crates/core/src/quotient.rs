//! Windowed spans, ideal closure and the two quotient presets.
//!
//! The algebra is infinite-dimensional, so ideals are computed inside a
//! [`Window`]. Products of windowed vectors always land in the window of
//! twice the radius; the part that falls outside the window is where
//! truncation happens. Closure only keeps those combinations of span
//! vectors whose product with a basis symbol stays inside the window, and
//! reports whether anything had to be discarded.

use serde::Serialize;

use crate::basis::BasisSymbol;
use crate::element::Element;
use crate::error::Error;
use crate::linalg::{self, Row};
use crate::product::{Hhat, Product};
use crate::scalar::Scalar;
use crate::symmetry::DihedralMap;
use crate::window::Window;

/// A subspace of a window in reduced row-echelon form.
///
/// Pivots increase strictly, every pivot entry is 1 and every pivot column
/// is zero in the other rows. The form is unique for a given subspace, so
/// equality of spans is structural equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowSpan {
    window: Window,
    basis: Vec<BasisSymbol>,
    rows: Vec<Row>,
    pivots: Vec<usize>,
}

impl WindowSpan {
    pub fn empty(window: Window) -> WindowSpan {
        WindowSpan {
            window,
            basis: window.basis(),
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn basis(&self) -> &[BasisSymbol] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Codimension in the window.
    pub fn quotient_dim(&self) -> usize {
        self.window.size() - self.rank()
    }

    pub fn dense_rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> Vec<Element> {
        self.rows
            .iter()
            .map(|r| self.window.from_dense(&self.basis, r))
            .collect()
    }

    fn reduce_dense(&self, row: &mut Row) {
        for (pivot_row, &col) in self.rows.iter().zip(&self.pivots) {
            linalg::eliminate(row, pivot_row, col);
        }
    }

    /// Canonical coset representative of `x` modulo the span.
    pub fn reduce(&self, x: &Element) -> Result<Element, Error> {
        let mut row = self.window.to_dense(x)?;
        self.reduce_dense(&mut row);
        Ok(self.window.from_dense(&self.basis, &row))
    }

    pub fn contains(&self, x: &Element) -> Result<bool, Error> {
        Ok(self.reduce(x)?.is_zero())
    }

    pub fn contains_span(&self, other: &WindowSpan) -> bool {
        other
            .rows()
            .iter()
            .all(|r| self.contains(r).unwrap_or(false))
    }

    /// Adds a vector, keeping the echelon form. Returns whether the span grew.
    fn insert(&mut self, mut row: Row) -> bool {
        self.reduce_dense(&mut row);
        let Some(col) = row.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = row[col].inv().expect("nonzero pivot");
        for v in row.iter_mut() {
            *v *= inv;
        }
        for existing in self.rows.iter_mut() {
            linalg::eliminate(existing, &row, col);
        }
        let at = self.pivots.partition_point(|&p| p < col);
        self.pivots.insert(at, col);
        self.rows.insert(at, row);
        true
    }

    /// Adds an element of the window. Returns whether the span grew.
    pub fn insert_element(&mut self, x: &Element) -> Result<bool, Error> {
        let row = self.window.to_dense(x)?;
        Ok(self.insert(row))
    }

    /// A basis of the vectors of the span supported inside `inner`.
    pub fn restrict(&self, inner: Window) -> Vec<Element> {
        let (outer_cols, inner_cols): (Vec<usize>, Vec<usize>) =
            (0..self.basis.len()).partition(|&c| !inner.contains_symbol(&self.basis[c]));
        let mut rows: Vec<Row> = self
            .rows
            .iter()
            .map(|r| {
                outer_cols
                    .iter()
                    .chain(&inner_cols)
                    .map(|&c| r[c])
                    .collect()
            })
            .collect();
        let pivots = linalg::rref(&mut rows);
        rows.iter()
            .zip(pivots)
            .filter(|&(_, p)| p >= outer_cols.len())
            .map(|(r, _)| {
                inner_cols
                    .iter()
                    .zip(&r[outer_cols.len()..])
                    .map(|(&c, &v)| (self.basis[c], v))
                    .collect()
            })
            .collect()
    }
}

/// Row-reduces `vectors`, all of which must lie in the window.
pub fn row_reduce(vectors: &[Element], window: Window) -> Result<WindowSpan, Error> {
    let mut span = WindowSpan::empty(window);
    let mut rows = vectors
        .iter()
        .map(|v| window.to_dense(v))
        .collect::<Result<Vec<_>, _>>()?;
    span.pivots = linalg::rref(&mut rows);
    span.rows = rows;
    Ok(span)
}

/// Result of [`ideal_closure`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    pub span: WindowSpan,
    /// Some product left the window and was only kept in combinations that
    /// cancel outside it.
    pub truncation_loss: bool,
    /// Rank of the generators alone.
    pub generator_rank: usize,
    /// Full passes over the basis, including the last one that found
    /// nothing new.
    pub sweeps: usize,
}

/// Structure constants of the window, with product coordinates in the
/// doubled window.
struct ProductTable {
    ambient: Window,
    /// `entries[k * n + b]`: sparse coordinates of `basis[k] * basis[b]`.
    entries: Vec<Vec<(usize, Scalar)>>,
    /// Window index of each ambient index, if inside the window.
    inside: Vec<Option<usize>>,
    n: usize,
}

impl ProductTable {
    fn new<P: Product>(product: &P, window: Window, basis: &[BasisSymbol]) -> ProductTable {
        let ambient = Window::new(2 * window.radius()).expect("nonzero radius");
        let n = basis.len();
        let mut entries = vec![Vec::new(); n * n];
        for k in 0..n {
            for b in k..n {
                let p = product.mul_basis(&basis[k], &basis[b]);
                let sparse: Vec<(usize, Scalar)> = p
                    .terms()
                    .map(|(s, c)| {
                        (
                            ambient.index_of(s).expect("product inside doubled window"),
                            c,
                        )
                    })
                    .collect();
                entries[b * n + k] = sparse.clone();
                entries[k * n + b] = sparse;
            }
        }
        let inside = ambient.basis().iter().map(|s| window.index_of(s)).collect();
        ProductTable {
            ambient,
            entries,
            inside,
            n,
        }
    }

    /// `row * basis[b]` in ambient coordinates.
    fn times(&self, row: &[Scalar], b: usize) -> Row {
        let mut out = vec![Scalar::ZERO; self.ambient.size()];
        for (k, &c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(idx, v) in &self.entries[k * self.n + b] {
                out[idx] += c * v;
            }
        }
        out
    }
}

/// Smallest span containing `generators` that is closed under multiplication
/// by windowed basis symbols, as far as the window can see.
pub fn ideal_closure(generators: &[Element], window: Window) -> Result<Closure, Error> {
    ideal_closure_with(&Hhat, generators, window)
}

pub fn ideal_closure_with<P: Product>(
    product: &P,
    generators: &[Element],
    window: Window,
) -> Result<Closure, Error> {
    let mut span = row_reduce(generators, window)?;
    let generator_rank = span.rank();
    let table = ProductTable::new(product, window, &span.basis);
    let n = table.n;
    let outside_cols: Vec<usize> = (0..table.inside.len())
        .filter(|&i| table.inside[i].is_none())
        .collect();
    let mut truncation_loss = false;
    let mut sweeps = 0;
    loop {
        sweeps += 1;
        let mut grew = false;
        for b in 0..n {
            let mut escaping: Vec<Row> = Vec::new();
            for row in span.rows.clone() {
                let p = table.times(&row, b);
                let outside: Row = outside_cols.iter().map(|&c| p[c]).collect();
                let mut inside = vec![Scalar::ZERO; n];
                for (idx, &v) in p.iter().enumerate() {
                    if let Some(w) = table.inside[idx] {
                        inside[w] = v;
                    }
                }
                if outside.iter().all(|c| c.is_zero()) {
                    grew |= span.insert(inside);
                } else {
                    truncation_loss = true;
                    let mut combined = outside;
                    combined.extend(inside);
                    escaping.push(combined);
                }
            }
            if escaping.is_empty() {
                continue;
            }
            // Combinations whose outside part cancels.
            let pivots = linalg::rref(&mut escaping);
            for (row, p) in escaping.into_iter().zip(pivots) {
                if p >= outside_cols.len() {
                    grew |= span.insert(row[outside_cols.len()..].to_vec());
                }
            }
        }
        if !grew {
            break;
        }
    }
    Ok(Closure {
        span,
        truncation_loss,
        generator_rank,
        sweeps,
    })
}

/// A quotient preset evaluated in a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub span: WindowSpan,
    pub quotient_dim: usize,
    pub truncation_loss: bool,
    pub generator_rank: usize,
    pub sweeps: usize,
}

impl From<Closure> for Quotient {
    fn from(c: Closure) -> Self {
        Quotient {
            quotient_dim: c.span.quotient_dim(),
            span: c.span,
            truncation_loss: c.truncation_loss,
            generator_rank: c.generator_rank,
            sweeps: c.sweeps,
        }
    }
}

/// Summary for export: basis order, matrix and the headline numbers.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SpanExport {
    pub window: u64,
    pub basis: Vec<BasisSymbol>,
    pub rows: Vec<Vec<u8>>,
    pub rank: usize,
    pub quotient_dim: usize,
    pub truncation_loss: bool,
}

impl Quotient {
    pub fn export(&self) -> SpanExport {
        SpanExport {
            window: self.span.window.radius(),
            basis: self.span.basis.clone(),
            rows: self
                .span
                .rows
                .iter()
                .map(|r| r.iter().map(|c| c.value()).collect())
                .collect(),
            rank: self.span.rank(),
            quotient_dim: self.quotient_dim,
            truncation_loss: self.truncation_loss,
        }
    }
}

/// `s[r,3k] - s[t,3k]` for all class pairs and `3k <= W`.
pub fn highwater_generators(window: Window) -> Vec<Element> {
    let mut out = Vec::new();
    for n in (3..=window.radius()).step_by(3) {
        for (r, t) in [(0, 1), (0, 2), (1, 2)] {
            out.push(&Element::sigma(r, n) - &Element::sigma(t, n));
        }
    }
    out
}

/// Ideal spanned by the sigma class differences at levels divisible by 3.
pub fn preset_highwater(window: Window) -> Result<Quotient, Error> {
    preset_highwater_with(&Hhat, window)
}

pub fn preset_highwater_with<P: Product>(product: &P, window: Window) -> Result<Quotient, Error> {
    Ok(ideal_closure_with(product, &highwater_generators(window), window)?.into())
}

/// `x = s[0,3] - s[0,1] - s[0,2] + a[-2] + a[-1] + a[1] + a[2] - 2(a[0] + a[3])`.
pub fn x_hat() -> Element {
    let mut x = Element::sigma(0, 3);
    x -= &Element::sigma(0, 1);
    x -= &Element::sigma(0, 2);
    for i in [-2, -1, 1, 2] {
        x += &Element::axis(i);
    }
    let m2 = Scalar::new(-2);
    x.add_term(BasisSymbol::Axis(0), m2);
    x.add_term(BasisSymbol::Axis(3), m2);
    x
}

/// Which axis differences `a[i] - a[i-6]` to include.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxisDifferences {
    /// Every `i` with `a[i]` and `a[i-6]` both in the window.
    Symmetric,
    /// Only `i >= 3`.
    FromThree,
}

pub fn sixa2_generators(window: Window, axes: AxisDifferences) -> Vec<Element> {
    let w = window.radius() as i64;
    let lowest = match axes {
        AxisDifferences::Symmetric => 6 - w,
        AxisDifferences::FromThree => 3,
    };
    let mut out: Vec<Element> = (lowest..=w)
        .map(|i| &Element::axis(i) - &Element::axis(i - 6))
        .collect();
    out.push(&Element::sigma(0, 4) - &Element::sigma(0, 2));
    out.push(&Element::sigma(0, 5) - &Element::sigma(0, 1));
    for j in 6..=window.radius() {
        out.push(&Element::sigma(0, j) - &Element::sigma(0, j - 6));
    }
    let x = x_hat();
    let xf = DihedralMap::f().apply(&x);
    let xft = DihedralMap::tau0().apply(&xf);
    out.extend([x, xf, xft]);
    out
}

/// The ideal whose quotient is the 6A algebra with `alpha = 2`.
pub fn preset_6a2(window: Window) -> Result<Quotient, Error> {
    preset_6a2_with(&Hhat, window, AxisDifferences::Symmetric)
}

pub fn preset_6a2_with<P: Product>(
    product: &P,
    window: Window,
    axes: AxisDifferences,
) -> Result<Quotient, Error> {
    if window.radius() < 6 {
        return Err(Error::WindowTooSmall {
            min: 6,
            got: window.radius(),
        });
    }
    Ok(ideal_closure_with(product, &sixa2_generators(window, axes), window)?.into())
}

/// Product in the quotient: `x*y` reduced modulo the span.
pub fn quotient_product(span: &WindowSpan, x: &Element, y: &Element) -> Result<Element, Error> {
    quotient_product_with(&Hhat, span, x, y)
}

pub fn quotient_product_with<P: Product>(
    product: &P,
    span: &WindowSpan,
    x: &Element,
    y: &Element,
) -> Result<Element, Error> {
    span.reduce(&product.mul(x, y))
}
