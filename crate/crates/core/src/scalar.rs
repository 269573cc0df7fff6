//! The prime field with five elements.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::Error;

/// An element of GF(5), stored as its least nonnegative residue.
///
/// The algebra's parameters live here as well: the axis eigenvalue
/// `alpha = 2` and `beta = 1/2`, which is `3` (equivalently `-2`) in
/// characteristic five.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(u8);

impl Scalar {
    pub const ZERO: Scalar = Scalar(0);
    pub const ONE: Scalar = Scalar(1);
    pub const TWO: Scalar = Scalar(2);
    pub const THREE: Scalar = Scalar(3);
    pub const FOUR: Scalar = Scalar(4);

    /// Eigenvalue `alpha` of the axes.
    pub const ALPHA: Scalar = Scalar(2);
    /// Eigenvalue `beta = 1/2 = -2` of the axes.
    pub const BETA: Scalar = Scalar(3);

    /// Reduces an arbitrary integer modulo 5.
    pub const fn new(value: i64) -> Scalar {
        Scalar(value.rem_euclid(5) as u8)
    }

    /// The residue in `0..5`.
    pub const fn value(self) -> u8 {
        self.0
    }

    /// The representative in `-2..=2`.
    pub const fn signed(self) -> i8 {
        if self.0 > 2 {
            self.0 as i8 - 5
        } else {
            self.0 as i8
        }
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Multiplicative inverse.
    pub fn inv(self) -> Result<Scalar, Error> {
        const INVERSES: [u8; 5] = [0, 1, 3, 2, 4];
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(INVERSES[self.0 as usize]))
    }

    pub fn pow(self, mut exp: u64) -> Scalar {
        let mut base = self;
        let mut acc = Scalar::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc *= base;
            }
            base *= base;
            exp >>= 1;
        }
        acc
    }

    /// All five field elements in residue order.
    pub fn all() -> impl Iterator<Item = Scalar> {
        (0..5).map(Scalar)
    }
}

impl From<i64> for Scalar {
    fn from(value: i64) -> Self {
        Scalar::new(value)
    }
}

impl From<i32> for Scalar {
    fn from(value: i32) -> Self {
        Scalar::new(value as i64)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    #[inline]
    fn add(self, rhs: Scalar) -> Scalar {
        let s = self.0 + rhs.0;
        Scalar(if s >= 5 { s - 5 } else { s })
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    #[inline]
    fn sub(self, rhs: Scalar) -> Scalar {
        self + (-rhs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    #[inline]
    fn neg(self) -> Scalar {
        Scalar(if self.0 == 0 { 0 } else { 5 - self.0 })
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    #[inline]
    fn mul(self, rhs: Scalar) -> Scalar {
        Scalar((self.0 * rhs.0) % 5)
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = *self + rhs;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = *self - rhs;
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        *self = *self * rhs;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::ZERO, Add::add)
    }
}
