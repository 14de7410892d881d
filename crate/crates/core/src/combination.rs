//! Sparse finite linear combinations with exact coefficients.

use std::collections::btree_map::{self, BTreeMap};
use std::ops::{Add, Neg, Sub};

use crate::scalar::Scalar;

/// A finite formal sum `Σ c_k · k` over an ordered basis.
///
/// Terms are kept sorted by key with no zero coefficients, so structural
/// equality is equality of vectors.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Combination<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for Combination<K> {
    fn default() -> Self {
        Combination { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Combination<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(Scalar::one(), key)
    }

    pub fn term(coeff: Scalar, key: K) -> Self {
        let mut c = Self::zero();
        c.add_term(coeff, key);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Scalar> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Scalar> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, coeff: Scalar, key: K) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// `self += coeff * other`
    pub fn add_scaled(&mut self, coeff: &Scalar, other: &Self) {
        if coeff.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(coeff * c, k.clone());
        }
    }

    pub fn scaled(&self, coeff: &Scalar) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        Combination {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * coeff)).collect(),
        }
    }

    /// Splits into the terms whose key satisfies `pred` and the rest.
    pub fn partition(&self, mut pred: impl FnMut(&K) -> bool) -> (Self, Self) {
        let (a, b): (BTreeMap<_, _>, BTreeMap<_, _>) =
            self.terms.iter().map(|(k, c)| (k.clone(), c.clone())).partition(|(k, _)| pred(k));
        (Combination { terms: a }, Combination { terms: b })
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Combination<L>) -> Combination<L> {
        let mut out = Combination::zero();
        for (k, c) in &self.terms {
            out.add_scaled(c, &f(k));
        }
        out
    }

    /// Fallible version of [`Combination::map_linear`].
    pub fn try_map_linear<L: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&K) -> Result<Combination<L>, E>,
    ) -> Result<Combination<L>, E> {
        let mut out = Combination::zero();
        for (k, c) in &self.terms {
            out.add_scaled(c, &f(k)?);
        }
        Ok(out)
    }
}

impl<K: Ord + Clone> FromIterator<(Scalar, K)> for Combination<K> {
    fn from_iter<I: IntoIterator<Item = (Scalar, K)>>(iter: I) -> Self {
        let mut c = Self::zero();
        for (s, k) in iter {
            c.add_term(s, k);
        }
        c
    }
}

impl<'a, K: Ord> IntoIterator for &'a Combination<K> {
    type Item = (&'a K, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, K, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> Add for &Combination<K> {
    type Output = Combination<K>;
    fn add(self, rhs: &Combination<K>) -> Combination<K> {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), rhs);
        out
    }
}

impl<K: Ord + Clone> Add for Combination<K> {
    type Output = Combination<K>;
    fn add(mut self, rhs: Combination<K>) -> Combination<K> {
        self.add_scaled(&Scalar::one(), &rhs);
        self
    }
}

impl<K: Ord + Clone> Sub for &Combination<K> {
    type Output = Combination<K>;
    fn sub(self, rhs: &Combination<K>) -> Combination<K> {
        let mut out = self.clone();
        out.add_scaled(&Scalar::from_int(-1), rhs);
        out
    }
}

impl<K: Ord + Clone> Sub for Combination<K> {
    type Output = Combination<K>;
    fn sub(mut self, rhs: Combination<K>) -> Combination<K> {
        self.add_scaled(&Scalar::from_int(-1), &rhs);
        self
    }
}

impl<K: Ord + Clone> Neg for &Combination<K> {
    type Output = Combination<K>;
    fn neg(self) -> Combination<K> {
        self.scaled(&Scalar::from_int(-1))
    }
}

impl<K: Ord + Clone> Neg for Combination<K> {
    type Output = Combination<K>;
    fn neg(self) -> Combination<K> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut c = Combination::term(Scalar::from_int(2), "a");
        c.add_term(Scalar::from_int(-2), "a");
        assert!(c.is_zero());
        c.add_term(Scalar::zero(), "b");
        assert!(c.is_zero());
    }

    #[test]
    fn canonical_equality() {
        let a: Combination<u8> = [(Scalar::one(), 2), (Scalar::one(), 1)].into_iter().collect();
        let b: Combination<u8> = [(Scalar::one(), 1), (Scalar::one(), 2)].into_iter().collect();
        assert_eq!(a, b);
        assert_eq!(&a - &b, Combination::zero());
    }
}
