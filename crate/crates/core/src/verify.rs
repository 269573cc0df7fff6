//! Exact checks of the identity catalogue.
//!
//! Every identity is compared as an exact equality of elements (or of
//! scalars) over a finite parameter range. A report records, per clause, how
//! many instances were checked, how many failed, and the first failure.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::Serialize;

use crate::eigen::{
    c_hat, c_pair, class_sum, lambda_of, sigma_pair, u_bar, u_hat, u_pair, v_hat, v_pair,
};
use crate::element::Element;
use crate::product::{Hhat, Product};
use crate::quotient::WindowSpan;
use crate::scalar::Scalar;
use crate::symmetry::DihedralMap;
use crate::window::Window;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Failure {
    pub clause: String,
    pub parameters: BTreeMap<String, i64>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClauseReport {
    pub name: String,
    pub pass: bool,
    pub checked: usize,
    pub failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IdentityReport {
    pub identity_name: String,
    pub range: BTreeMap<String, u64>,
    pub pass: bool,
    pub first_failure: Option<Failure>,
    pub clauses: Vec<ClauseReport>,
}

impl IdentityReport {
    pub fn clause(&self, name: &str) -> Option<&ClauseReport> {
        self.clauses.iter().find(|c| c.name == name)
    }
}

struct Tally {
    clauses: Vec<ClauseReport>,
    first_failure: Option<Failure>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            clauses: Vec::new(),
            first_failure: None,
        }
    }

    fn check<T: PartialEq + Display>(
        &mut self,
        clause: &str,
        params: &[(&str, i64)],
        lhs: T,
        rhs: T,
    ) {
        let idx = match self.clauses.iter().position(|c| c.name == clause) {
            Some(i) => i,
            None => {
                self.clauses.push(ClauseReport {
                    name: clause.to_string(),
                    pass: true,
                    checked: 0,
                    failures: 0,
                });
                self.clauses.len() - 1
            }
        };
        let entry = &mut self.clauses[idx];
        entry.checked += 1;
        if lhs == rhs {
            return;
        }
        entry.pass = false;
        entry.failures += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(Failure {
                clause: clause.to_string(),
                parameters: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    fn finish(self, name: &str, range: &[(&str, u64)]) -> IdentityReport {
        IdentityReport {
            identity_name: name.to_string(),
            range: range.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            pass: self.clauses.iter().all(|c| c.pass),
            first_failure: self.first_failure,
            clauses: self.clauses,
        }
    }
}

fn s(r: i64, n: u64) -> Element {
    Element::sigma(r, n)
}

fn lin(terms: &[(i64, &Element)]) -> Element {
    let mut out = Element::zero();
    for &(c, x) in terms {
        out.add_scaled(Scalar::new(c), x);
    }
    out
}

/// `u_n - ubar_n`.
fn u_gap(n: u64) -> Element {
    &u_hat(n) - &u_bar(n)
}

/// The seven relations between the `c`, `u`, `v`, `ubar` and `sigma`
/// vectors, for `1 <= i, j <= max_index` and every class `r`.
pub fn check_transition(max_index: u64) -> IdentityReport {
    check_transition_with(&Hhat, max_index)
}

pub fn check_transition_with<P: Product>(p: &P, max_index: u64) -> IdentityReport {
    let mut t = Tally::new();
    for j in 1..=max_index {
        let pj = [("j", j as i64)];
        let c = c_hat(j);
        t.check(
            "u_j = c_j + 2s[0,j]",
            &pj,
            u_hat(j),
            lin(&[(1, &c), (2, &s(0, j))]),
        );
        t.check(
            "v_j = c_j - s[0,j]",
            &pj,
            v_hat(j),
            lin(&[(1, &c), (-1, &s(0, j))]),
        );
        t.check(
            "ubar_j = c_j - S(j)",
            &pj,
            u_bar(j),
            lin(&[(1, &c), (-1, &class_sum(j))]),
        );
    }
    for i in 1..=max_index {
        for j in 1..=max_index {
            let pij = [("i", i as i64), ("j", j as i64)];
            let (d, e) = (i.abs_diff(j), i + j);
            let cij = c_pair(i, j);
            t.check(
                "u_{i,j} = c_{i,j} + s[0,i] + s[0,j] + 2(s[0,|i-j|] + s[0,i+j])",
                &pij,
                u_pair(i, j),
                lin(&[
                    (1, &cij),
                    (1, &s(0, i)),
                    (1, &s(0, j)),
                    (2, &s(0, d)),
                    (2, &s(0, e)),
                ]),
            );
            t.check(
                "v_{i,j} = c_{i,j} + 2(s[0,i] + s[0,j]) - s[0,|i-j|] - s[0,i+j]",
                &pij,
                v_pair(i, j),
                lin(&[
                    (1, &cij),
                    (2, &s(0, i)),
                    (2, &s(0, j)),
                    (-1, &s(0, d)),
                    (-1, &s(0, e)),
                ]),
            );
            t.check(
                "c_i c_j = sigma_{i,j}",
                &pij,
                p.mul(&c_hat(i), &c_hat(j)),
                sigma_pair(i, j),
            );
            for r in 0..3 {
                let pr = [("i", i as i64), ("j", j as i64), ("r", r)];
                t.check(
                    "c_i s[r,j] = c_{i,j}",
                    &pr,
                    p.mul(&c_hat(i), &s(r, j)),
                    cij.clone(),
                );
                t.check(
                    "c_j s[r,i] = c_{i,j}",
                    &pr,
                    p.mul(&c_hat(j), &s(r, i)),
                    cij.clone(),
                );
            }
        }
    }
    t.finish("transition", &[("maxIndex", max_index)])
}

/// `s[0,i] S(j)` and `u_i - ubar_i`.
pub fn check_usefulformula(max_index: u64) -> IdentityReport {
    check_usefulformula_with(&Hhat, max_index)
}

pub fn check_usefulformula_with<P: Product>(p: &P, max_index: u64) -> IdentityReport {
    let mut t = Tally::new();
    for i in 1..=max_index {
        t.check(
            "u_i - ubar_i = -2s[0,i] + s[1,i] + s[2,i]",
            &[("i", i as i64)],
            u_gap(i),
            lin(&[(-2, &s(0, i)), (1, &s(1, i)), (1, &s(2, i))]),
        );
        for j in 1..=max_index {
            let (d, e) = (i.abs_diff(j), i + j);
            t.check(
                "s[0,i] S(j) = s[0,i] + s[0,j] + 2(s[0,|i-j|] + s[0,i+j])",
                &[("i", i as i64), ("j", j as i64)],
                p.mul(&s(0, i), &class_sum(j)),
                lin(&[(1, &s(0, i)), (1, &s(0, j)), (2, &s(0, d)), (2, &s(0, e))]),
            );
        }
    }
    t.finish("usefulformula", &[("maxIndex", max_index)])
}

/// The five products among `u`, `v` and `ubar`.
pub fn check_products_uv(max_index: u64) -> IdentityReport {
    check_products_uv_with(&Hhat, max_index)
}

pub fn check_products_uv_with<P: Product>(p: &P, max_index: u64) -> IdentityReport {
    let mut t = Tally::new();
    for i in 1..=max_index {
        for j in 1..=max_index {
            let pij = [("i", i as i64), ("j", j as i64)];
            let (d, e) = (i.abs_diff(j), i + j);
            let uij = u_pair(i, j);
            let vij = v_pair(i, j);
            t.check(
                "u_i u_j = -u_{i,j} - 2(u - ubar)_{|i-j|} - 2(u - ubar)_{i+j}",
                &pij,
                p.mul(&u_hat(i), &u_hat(j)),
                lin(&[(-1, &uij), (-2, &u_gap(d)), (-2, &u_gap(e))]),
            );
            t.check(
                "u_i v_j = v_{i,j}",
                &pij,
                p.mul(&u_hat(i), &v_hat(j)),
                vij.clone(),
            );
            t.check(
                "v_i v_j = -2u_{i,j} - (u - ubar)_{|i-j|} - (u - ubar)_{i+j}",
                &pij,
                p.mul(&v_hat(i), &v_hat(j)),
                lin(&[(-2, &uij), (-1, &u_gap(d)), (-1, &u_gap(e))]),
            );
            t.check(
                "u_i ubar_j = -u_{i,j}",
                &pij,
                p.mul(&u_hat(i), &u_bar(j)),
                -&uij,
            );
            t.check(
                "v_i ubar_j = v_{i,j}",
                &pij,
                p.mul(&v_hat(i), &u_bar(j)),
                vij,
            );
        }
    }
    t.finish("products_uv", &[("maxIndex", max_index)])
}

/// `u_h` with the normalization `a0 + 2(a[h] + a[-h]) - 2s[0,h]` used for
/// the 2-eigenvector in the general classification argument.
pub fn v_general(h: u64) -> Element {
    let h = h as i64;
    lin(&[
        (1, &Element::axis(0)),
        (2, &Element::axis(h)),
        (2, &Element::axis(-h)),
        (-2, &s(0, h.unsigned_abs())),
    ])
}

/// `a0 + 2(a[-3k] + a[3k]) - 2 S(3k)`.
pub fn u_bar_general(n: u64) -> Element {
    let m = n as i64;
    lin(&[
        (1, &Element::axis(0)),
        (2, &Element::axis(m)),
        (2, &Element::axis(-m)),
        (-2, &class_sum(n)),
    ])
}

/// Identities from the classification argument, instantiated in the
/// algebra, where `lambda_i = 1` for every axis.
pub fn check_section3(max_index: u64) -> IdentityReport {
    check_section3_with(&Hhat, max_index)
}

pub fn check_section3_with<P: Product>(p: &P, max_index: u64) -> IdentityReport {
    let mut t = Tally::new();
    let a0 = Element::axis(0);
    let beta = Scalar::BETA;
    let max = max_index as i64;

    for n in 1..=max_index {
        let pn = [("n", n as i64)];
        // Normalizations: u is shared, v and ubar differ by the factor 2.
        t.check(
            "v_n = 2 v-hat_n",
            &pn,
            v_general(n),
            v_hat(n).scale(Scalar::TWO),
        );
        t.check(
            "lambda(s[0,n]) = lambda_n - beta - beta lambda_n",
            &pn,
            lambda_of(&s(0, n)),
            {
                let ln = lambda_of(&Element::axis(n as i64));
                ln - beta - beta * ln
            },
        );
        t.check(
            "lambda(a[n]) = 1",
            &pn,
            lambda_of(&Element::axis(n as i64)),
            Scalar::ONE,
        );
        for r in 0..3 {
            t.check(
                "lambda(s[r,n]) = 0",
                &[("n", n as i64), ("r", r)],
                lambda_of(&s(r, n)),
                Scalar::ZERO,
            );
        }
        for i in -max..=max {
            let (ai, ain) = (Element::axis(i), Element::axis(i + n as i64));
            let mut rhs = p.mul(&ai, &ain);
            rhs.add_scaled(-beta, &(&ai + &ain));
            t.check(
                "s[i,n] = a[i]a[i+n] - beta(a[i] + a[i+n])",
                &[("i", i), ("n", n as i64)],
                s(i, n),
                rhs,
            );
        }
        if n % 3 == 0 {
            t.check(
                "ubar_n = 2 ubar-hat_n",
                &pn,
                u_bar_general(n),
                u_bar(n).scale(Scalar::TWO),
            );
            t.check(
                "a0 ubar_n = 0",
                &pn,
                p.mul(&a0, &u_bar_general(n)),
                Element::zero(),
            );
        }
    }

    for h in 1..=max_index {
        for k in 1..=max_index {
            let phk = [("h", h as i64), ("k", k as i64)];
            for (v_h, v_k, tag) in [
                (v_hat(h), v_hat(k), "hatted"),
                (v_general(h), v_general(k), "general"),
            ] {
                let uu = p.mul(&u_hat(h), &u_hat(k));
                let vv = p.mul(&v_h, &v_k);
                let mut inner = &uu - &vv;
                inner.add_scaled(lambda_of(&vv), &a0);
                t.check(
                    &format!("a0(u_h u_k - v_h v_k + lambda(v_h v_k) a0) = 0 [{tag}]"),
                    &phk,
                    p.mul(&a0, &inner),
                    Element::zero(),
                );
                let uv = p.mul(&u_hat(h), &v_k);
                t.check(
                    &format!("a0(u_h u_k + u_h v_k) = 2 u_h v_k [{tag}]"),
                    &phk,
                    p.mul(&a0, &(&uu + &uv)),
                    uv.scale(Scalar::TWO),
                );
            }
        }
    }

    // The symmetry image of a0 s[0,j]; the class of the sigma term on the
    // right follows the axis index.
    for r in 0..3 {
        for j in 1..=max_index {
            let jj = j as i64;
            for k in -2..=2 {
                let centre = r + jj * k;
                let lhs = p.mul(&Element::axis(centre), &s(r, j));
                let rhs = lin(&[
                    (-2, &Element::axis(centre)),
                    (1, &Element::axis(r + jj * (k - 1))),
                    (1, &Element::axis(r + jj * (k + 1))),
                    (-1, &s(r, j)),
                ]);
                t.check(
                    "a[r+jk] s[r,j] = -2a[r+jk] + a[r+j(k-1)] + a[r+j(k+1)] - s[r,j]",
                    &[("r", r), ("j", jj), ("k", k)],
                    lhs,
                    rhs,
                );
            }
        }
    }

    for h in 1..=max_index / 3 {
        for k in 1..=max_index / 3 {
            let (h3, k3) = (3 * h, 3 * k);
            let lhs = p.mul(&s(0, h3), &(&s(1, k3) + &s(2, k3)));
            let rhs = lin(&[
                (-1, &s(0, h3)),
                (-1, &s(0, k3)),
                (-2, &s(0, 3 * h.abs_diff(k))),
                (-2, &s(0, 3 * (h + k))),
            ]);
            t.check(
                "s[0,3h](s[1,3k] + s[2,3k]) = -s[0,3h] - s[0,3k] - 2(s[0,3|h-k|] + s[0,3(h+k)])",
                &[("h", h as i64), ("k", k as i64)],
                lhs,
                rhs,
            );
        }
    }
    t.finish("section3", &[("maxIndex", max_index)])
}

/// The two generation identities, and that `a[0]`, `a[1]` generate every
/// symbol of the window under products and the maps `tau0`, `f`.
pub fn check_generation(window: u64) -> IdentityReport {
    check_generation_with(&Hhat, window)
}

pub fn check_generation_with<P: Product>(p: &P, window: u64) -> IdentityReport {
    let mut t = Tally::new();
    let (a0, a1) = (Element::axis(0), Element::axis(1));
    let s01 = s(0, 1);
    t.check(
        "s[0,1] = a0 a1 + 2(a0 + a1)",
        &[],
        s01.clone(),
        &p.mul(&a0, &a1) + &(&a0 + &a1).scale(Scalar::TWO),
    );
    t.check(
        "a[-1] = a0 s[0,1] + 2a0 - a1 + s[0,1]",
        &[],
        Element::axis(-1),
        lin(&[(1, &p.mul(&a0, &s01)), (2, &a0), (-1, &a1), (1, &s01)]),
    );
    if let Ok(w) = Window::new(window) {
        let span = generated_subalgebra(p, &[a0, a1], w);
        t.check(
            "subalgebra generated by a0, a1 fills the window",
            &[("window", window as i64)],
            span.rank(),
            w.size(),
        );
    }
    t.finish("generation", &[("window", window)])
}

/// Span of everything reachable from `seeds` by products and the maps
/// `tau0`, `f`, keeping only results inside the window.
pub fn generated_subalgebra<P: Product>(p: &P, seeds: &[Element], window: Window) -> WindowSpan {
    let mut span = WindowSpan::empty(window);
    for x in seeds {
        span.insert_element(x).expect("seeds lie in the window");
    }
    let maps = [DihedralMap::tau0(), DihedralMap::f()];
    loop {
        let rows = span.rows();
        let mut grew = false;
        for (a, x) in rows.iter().enumerate() {
            let mut candidates: Vec<Element> = maps.iter().map(|m| m.apply(x)).collect();
            candidates.extend(rows[a..].iter().map(|y| p.mul(x, y)));
            for c in candidates {
                if window.contains(&c) {
                    grew |= span.insert_element(&c).expect("checked containment");
                }
            }
        }
        if !grew {
            return span;
        }
    }
}

/// Parameter bounds for [`check_all`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub transition_max: u64,
    pub useful_max: u64,
    pub uv_max: u64,
    pub section3_max: u64,
    pub generation_window: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            transition_max: 12,
            useful_max: 10,
            uv_max: 10,
            section3_max: 8,
            generation_window: 8,
        }
    }
}

impl VerifyConfig {
    /// The same bound for every checker.
    pub fn uniform(max_index: u64) -> Self {
        VerifyConfig {
            transition_max: max_index,
            useful_max: max_index,
            uv_max: max_index,
            section3_max: max_index,
            generation_window: max_index,
        }
    }
}

pub fn check_all(config: &VerifyConfig) -> Vec<IdentityReport> {
    check_all_with(&Hhat, config)
}

pub fn check_all_with<P: Product>(p: &P, config: &VerifyConfig) -> Vec<IdentityReport> {
    vec![
        check_transition_with(p, config.transition_max),
        check_usefulformula_with(p, config.useful_max),
        check_products_uv_with(p, config.uv_max),
        check_section3_with(p, config.section3_max),
        check_generation_with(p, config.generation_window),
    ]
}
