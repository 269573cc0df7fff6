//! The infinite dihedral group acting on the algebra.
//!
//! Every map is stored in normal form `a[k] -> a[e*k + t]` with `e = ±1`, and
//! acts on sigma symbols by `s[r,n] -> s[e*r + t, n]`.

use std::fmt;
use std::str::FromStr;

use crate::basis::{canon_symbol, BasisSymbol};
use crate::element::Element;
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DihedralMap {
    epsilon: i8,
    shift: i64,
}

impl DihedralMap {
    pub const IDENTITY: DihedralMap = DihedralMap {
        epsilon: 1,
        shift: 0,
    };

    /// `a[k] -> a[k + t]`.
    pub const fn translation(t: i64) -> Self {
        DihedralMap {
            epsilon: 1,
            shift: t,
        }
    }

    /// `a[k] -> a[t - k]`.
    pub const fn reflection(t: i64) -> Self {
        DihedralMap {
            epsilon: -1,
            shift: t,
        }
    }

    /// Miyamoto involution of `a[0]`: `a[k] -> a[-k]`.
    pub const fn tau0() -> Self {
        Self::reflection(0)
    }

    /// The swap of `a[0]` and `a[1]`: `a[k] -> a[1 - k]`.
    pub const fn f() -> Self {
        Self::reflection(1)
    }

    /// `tau0` followed by `f`, the unit translation.
    pub const fn theta() -> Self {
        Self::translation(1)
    }

    /// The reflection swapping `a[0]` and `a[i]`.
    pub const fn sigma(i: i64) -> Self {
        Self::reflection(i)
    }

    /// Miyamoto involution of `a[j]`: `a[k] -> a[2j - k]`.
    pub const fn miyamoto(j: i64) -> Self {
        Self::reflection(2 * j)
    }

    pub fn epsilon(self) -> i8 {
        self.epsilon
    }

    pub fn shift(self) -> i64 {
        self.shift
    }

    pub fn is_reflection(self) -> bool {
        self.epsilon < 0
    }

    /// `self` first, then `then`.
    pub fn compose(self, then: DihedralMap) -> DihedralMap {
        DihedralMap {
            epsilon: self.epsilon * then.epsilon,
            shift: i64::from(then.epsilon) * self.shift + then.shift,
        }
    }

    pub fn inverse(self) -> DihedralMap {
        DihedralMap {
            epsilon: self.epsilon,
            shift: -i64::from(self.epsilon) * self.shift,
        }
    }

    /// `self` applied `n` times (negative `n` uses the inverse).
    pub fn pow(self, n: i64) -> DihedralMap {
        if self.is_reflection() {
            return if n.rem_euclid(2) == 0 {
                Self::IDENTITY
            } else {
                self
            };
        }
        Self::translation(self.shift * n)
    }

    fn image_index(self, k: i64) -> i64 {
        i64::from(self.epsilon) * k + self.shift
    }

    pub fn apply_symbol(self, b: &BasisSymbol) -> BasisSymbol {
        match *b {
            BasisSymbol::Axis(k) => BasisSymbol::Axis(self.image_index(k)),
            BasisSymbol::Sigma(s) => {
                canon_symbol(self.image_index(i64::from(s.class())), s.level())
                    .expect("levels are preserved")
            }
        }
    }

    pub fn apply(self, x: &Element) -> Element {
        x.terms().map(|(b, c)| (self.apply_symbol(b), c)).collect()
    }
}

/// Image of `x` under `m`.
pub fn apply(m: DihedralMap, x: &Element) -> Element {
    m.apply(x)
}

/// `m1` first, then `m2`.
pub fn compose(m1: DihedralMap, m2: DihedralMap) -> DihedralMap {
    m1.compose(m2)
}

pub fn miyamoto(j: i64) -> DihedralMap {
    DihedralMap::miyamoto(j)
}

impl fmt::Display for DihedralMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.epsilon < 0 { "-" } else { "" };
        write!(f, "a[k] -> a[{sign}k{:+}]", self.shift)
    }
}

/// Parses the command-line names `tau0`, `f`, `theta`, `sigma:<i>` and
/// `tau:<j>`.
impl FromStr for DihedralMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || Error::UnknownMap(s.to_string());
        match s.trim() {
            "tau0" => Ok(Self::tau0()),
            "f" => Ok(Self::f()),
            "theta" => Ok(Self::theta()),
            other => {
                let (name, arg) = other.split_once(':').ok_or_else(unknown)?;
                let arg: i64 = arg.trim().parse().map_err(|_| unknown())?;
                match name.trim() {
                    "sigma" => Ok(Self::sigma(arg)),
                    "tau" => Ok(Self::miyamoto(arg)),
                    _ => Err(unknown()),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_element;

    fn e(s: &str) -> Element {
        parse_element(s).unwrap()
    }

    #[test]
    fn basis_actions() {
        assert_eq!(apply(DihedralMap::tau0(), &e("a[3]")), e("a[-3]"));
        assert_eq!(apply(DihedralMap::f(), &e("s[0,3]")), e("s[1,3]"));
        assert_eq!(apply(DihedralMap::theta(), &e("s[1,6]")), e("s[2,6]"));
        assert_eq!(apply(DihedralMap::sigma(2), &e("a[0]")), e("a[2]"));
    }

    #[test]
    fn generator_actions_on_sigma_symbols() {
        let tau0 = DihedralMap::tau0();
        let f = DihedralMap::f();
        assert_eq!(apply(tau0, &e("s[0,6]")), e("s[0,6]"));
        assert_eq!(apply(tau0, &e("s[1,3]")), e("s[2,3]"));
        assert_eq!(apply(tau0, &e("s[2,3]")), e("s[1,3]"));
        assert_eq!(apply(f, &e("s[0,4]")), e("s[0,4]"));
        assert_eq!(apply(f, &e("s[1,3]")), e("s[0,3]"));
        assert_eq!(apply(f, &e("s[2,9]")), e("s[2,9]"));
        assert_eq!(apply(f, &e("a[5]")), e("a[-4]"));
    }

    #[test]
    fn composition() {
        let tau0 = DihedralMap::tau0();
        let f = DihedralMap::f();
        let theta = DihedralMap::theta();
        assert_eq!(compose(tau0, tau0), DihedralMap::IDENTITY);
        assert_eq!(compose(tau0, f), theta);
        for i in -6..8 {
            assert_eq!(compose(f, theta.pow(i - 1)), DihedralMap::sigma(i));
            assert_eq!(
                compose(compose(theta.pow(-i), tau0), theta.pow(i)),
                miyamoto(i)
            );
        }
    }

    #[test]
    fn composition_matches_sequential_application() {
        let maps = [
            DihedralMap::tau0(),
            DihedralMap::f(),
            DihedralMap::theta(),
            DihedralMap::sigma(5),
            miyamoto(-3),
            DihedralMap::translation(7),
        ];
        let x = e("a[-2] + 2*a[5] + s[0,1] + 3*s[1,3] + s[2,6]");
        for m1 in maps {
            for m2 in maps {
                assert_eq!(compose(m1, m2).apply(&x), m2.apply(&m1.apply(&x)));
            }
            assert_eq!(m1.inverse().apply(&m1.apply(&x)), x);
        }
    }

    #[test]
    fn miyamoto_examples() {
        assert_eq!(miyamoto(0), DihedralMap::tau0());
        assert_eq!(apply(miyamoto(1), &e("a[0]")), e("a[2]"));
        assert_eq!(apply(miyamoto(1), &e("a[1]")), e("a[1]"));
    }

    #[test]
    fn parse_names() {
        assert_eq!("tau0".parse::<DihedralMap>().unwrap(), DihedralMap::tau0());
        assert_eq!(
            "sigma:5".parse::<DihedralMap>().unwrap(),
            DihedralMap::sigma(5)
        );
        assert_eq!("tau:-2".parse::<DihedralMap>().unwrap(), miyamoto(-2));
        assert!("rho".parse::<DihedralMap>().is_err());
        assert!("tau:x".parse::<DihedralMap>().is_err());
    }
}
