//! Cohomological degrees, Koszul signs and binomial coefficients.
//!
//! Every degree shift that occurs in the mode calculus is an even multiple of
//! the loop parameter: the formal variable has degree `-2N`, the translation
//! operator degree `2N`, a mode `a_n` has degree `|a| - 2Nn` and shifted degree
//! `|a| - 2N(n+1)`, and brackets have degree `-2N`. None of these shifts changes
//! parity, so every sign `(-1)^{(|x| + p)(|y| + p)}` with `p = -2N` reduces to
//! `(-1)^{|x||y|}` evaluated on the parities of the underlying generators.
//! The helpers here therefore work on parities only.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// A cohomological degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Degree(pub i64);

impl Degree {
    pub fn is_odd(self) -> bool {
        self.0.rem_euclid(2) == 1
    }

    pub fn parity(self) -> Parity {
        if self.is_odd() {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        Degree(self.0 + rhs.0)
    }
}

impl Sub for Degree {
    type Output = Degree;
    fn sub(self, rhs: Degree) -> Degree {
        Degree(self.0 - rhs.0)
    }
}

impl Neg for Degree {
    type Output = Degree;
    fn neg(self) -> Degree {
        Degree(-self.0)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Parity of a homogeneous element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// `(-1)^{self * other}` as a boolean: true when the sign is negative.
    pub fn swap_negates(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }

    /// `(-1)^self` as a boolean.
    pub fn negates(self) -> bool {
        self.is_odd()
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// `(-1)^{a b}`: `-1` exactly when both degrees are odd.
pub fn koszul_sign(a: Degree, b: Degree) -> Scalar {
    sign(a.parity().swap_negates(b.parity()))
}

/// `-1` when `negative`, else `+1`.
pub fn sign(negative: bool) -> Scalar {
    if negative {
        Scalar::from_int(-1)
    } else {
        Scalar::one()
    }
}

/// `n (n-1) ... (n-k+1)`, the empty product being one.
pub fn falling_factorial(n: i64, k: u32) -> Scalar {
    (0..k as i64).map(|j| Scalar::from_int(n - j)).product()
}

pub fn factorial(k: u32) -> Scalar {
    falling_factorial(k as i64, k)
}

/// Generalized binomial coefficient `n(n-1)...(n-i+1)/i!`, valid for negative `n`.
pub fn binomial(n: i64, i: u32) -> Scalar {
    if n >= 0 && (i as i64) > n {
        return Scalar::zero();
    }
    falling_factorial(n, i) / factorial(i)
}
