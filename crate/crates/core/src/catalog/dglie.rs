//! Finite-dimensional dg Lie algebras with bracket of degree `-2N`, and
//! bilinear forms on them.

use std::collections::BTreeMap;

use crate::combination::Combination;
use crate::error::{Error, FormCondition};
use crate::graded::{koszul_sign, sign, Degree};
use crate::scalar::Scalar;

/// An element of `g`, indexed by basis position.
pub type GElement = Combination<usize>;

/// A dg Lie algebra on a homogeneous basis.
///
/// `bracket` stores `[a_i, a_j]` for every ordered pair with a nonzero value;
/// `set_bracket` fills both orders from one entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgLieData {
    pub loop_n: i64,
    pub basis: Vec<(String, Degree)>,
    pub bracket: BTreeMap<(usize, usize), GElement>,
    pub differential: BTreeMap<usize, GElement>,
}

impl DgLieData {
    pub fn new(loop_n: i64, basis: &[(&str, i64)]) -> Self {
        DgLieData {
            loop_n,
            basis: basis.iter().map(|(id, d)| (id.to_string(), Degree(*d))).collect(),
            bracket: BTreeMap::new(),
            differential: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index(&self, id: &str) -> Result<usize, Error> {
        self.basis.iter().position(|(b, _)| b == id).ok_or_else(|| Error::UnknownGenerator(id.to_string()))
    }

    pub fn degree(&self, i: usize) -> Degree {
        self.basis[i].1
    }

    pub fn element(&self, terms: &[(Scalar, &str)]) -> Result<GElement, Error> {
        terms.iter().map(|(c, id)| Ok((c.clone(), self.index(id)?))).collect()
    }

    /// Sets `[a, b]` and the value of `[b, a]` forced by antisymmetry.
    pub fn set_bracket(&mut self, a: &str, b: &str, value: &[(Scalar, &str)]) -> Result<(), Error> {
        let (i, j) = (self.index(a)?, self.index(b)?);
        let v = self.element(value)?;
        let flipped = v.scaled(&-koszul_sign(self.degree(i), self.degree(j)));
        self.bracket.insert((i, j), v);
        self.bracket.insert((j, i), flipped);
        Ok(())
    }

    pub fn set_differential(&mut self, a: &str, value: &[(Scalar, &str)]) -> Result<(), Error> {
        let i = self.index(a)?;
        let v = self.element(value)?;
        self.differential.insert(i, v);
        Ok(())
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> GElement {
        self.bracket.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn bracket(&self, x: &GElement, y: &GElement) -> GElement {
        let mut out = GElement::zero();
        for (i, ci) in x {
            for (j, cj) in y {
                out.add_scaled(&(ci * cj), &self.bracket_basis(*i, *j));
            }
        }
        out
    }

    pub fn d(&self, x: &GElement) -> GElement {
        x.map_linear(|i| self.differential.get(i).cloned().unwrap_or_default())
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.values().all(|v| v.is_zero())
    }

    /// Checks homogeneity, antisymmetry, the Jacobi identity, `d^2 = 0` and
    /// the derivation rule exactly on basis elements.
    pub fn validate(&self) -> Result<(), Error> {
        let n = self.dim();
        let bad = |msg: String| Err(Error::InvalidDgLie(msg));
        let name = |i: usize| self.basis[i].0.as_str();
        let two_n = 2 * self.loop_n;
        for i in 0..n {
            for j in 0..n {
                let v = self.bracket_basis(i, j);
                let expected = Degree(self.degree(i).0 + self.degree(j).0 - two_n);
                if let Some(k) = v.keys().find(|k| self.degree(**k) != expected) {
                    return bad(format!("[{}, {}] has a term {} of the wrong degree", name(i), name(j), name(*k)));
                }
                let anti = &v + &self.bracket_basis(j, i).scaled(&koszul_sign(self.degree(i), self.degree(j)));
                if !anti.is_zero() {
                    return bad(format!("antisymmetry fails on ({}, {})", name(i), name(j)));
                }
            }
            let di = self.d(&GElement::basis(i));
            if let Some(k) = di.keys().find(|k| self.degree(**k).0 != self.degree(i).0 + 1) {
                return bad(format!("d({}) has a term {} of the wrong degree", name(i), name(*k)));
            }
            if !self.d(&di).is_zero() {
                return bad(format!("d^2({}) != 0", name(i)));
            }
        }
        for i in 0..n {
            let x = GElement::basis(i);
            for j in 0..n {
                let y = GElement::basis(j);
                let s = koszul_sign(self.degree(i), self.degree(j));
                for k in 0..n {
                    let z = GElement::basis(k);
                    let lhs = self.bracket(&x, &self.bracket(&y, &z));
                    let rhs = self.bracket(&self.bracket(&x, &y), &z)
                        + self.bracket(&y, &self.bracket(&x, &z)).scaled(&s);
                    if lhs != rhs {
                        return bad(format!("Jacobi fails on ({}, {}, {})", name(i), name(j), name(k)));
                    }
                }
                let lhs = self.d(&self.bracket(&x, &y));
                let rhs = self.bracket(&self.d(&x), &y)
                    + self.bracket(&x, &self.d(&y)).scaled(&sign(self.degree(i).is_odd()));
                if lhs != rhs {
                    return bad(format!("d is not a derivation on ({}, {})", name(i), name(j)));
                }
            }
        }
        Ok(())
    }

    /// Even-degree dimension minus odd-degree dimension.
    pub fn sdim(&self) -> i64 {
        self.basis.iter().map(|(_, d)| if d.is_odd() { -1 } else { 1 }).sum()
    }
}

/// A bilinear form on a [`DgLieData`] basis; absent entries are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BilinearForm {
    pub entries: BTreeMap<(usize, usize), Scalar>,
}

impl BilinearForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_entries(g: &DgLieData, entries: &[(&str, &str, Scalar)]) -> Result<Self, Error> {
        let mut form = Self::zero();
        for (a, b, v) in entries {
            if !v.is_zero() {
                form.entries.insert((g.index(a)?, g.index(b)?), v.clone());
            }
        }
        Ok(form)
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &GElement, y: &GElement) -> Scalar {
        let mut s = Scalar::zero();
        for (i, ci) in x {
            for (j, cj) in y {
                s += ci * cj * self.get(*i, *j);
            }
        }
        s
    }

    /// Checks d-invariance, graded symmetry, invariance and the degree
    /// support rule `<a, b> != 0 => |a| + |b| = 4N`.
    pub fn validate(&self, g: &DgLieData) -> Result<(), Error> {
        let n = g.dim();
        let name = |i: usize| g.basis[i].0.as_str();
        let fail = |condition, detail: String| Err(Error::FormInvariantViolation { condition, detail });
        for &(i, j) in self.entries.keys() {
            if g.degree(i).0 + g.degree(j).0 != 4 * g.loop_n {
                return fail(
                    FormCondition::DegreeSupport,
                    format!("<{}, {}> != 0 but |{}| + |{}| != 4N", name(i), name(j), name(i), name(j)),
                );
            }
        }
        for i in 0..n {
            let (a, sa) = (GElement::basis(i), sign(g.degree(i).is_odd()));
            for j in 0..n {
                let b = GElement::basis(j);
                let lhs = self.eval(&g.d(&a), &b) + &sa * self.eval(&a, &g.d(&b));
                if !lhs.is_zero() {
                    return fail(FormCondition::DifferentialInvariance, format!("on ({}, {})", name(i), name(j)));
                }
                if self.get(i, j) != &sa * self.get(j, i) {
                    return fail(FormCondition::GradedSymmetry, format!("on ({}, {})", name(i), name(j)));
                }
                for k in 0..n {
                    let c = GElement::basis(k);
                    if self.eval(&g.bracket(&a, &b), &c) != self.eval(&a, &g.bracket(&b, &c)) {
                        return fail(
                            FormCondition::Invariance,
                            format!("on ({}, {}, {})", name(i), name(j), name(k)),
                        );
                    }
                }
            }
        }
        Ok(())
    }

    /// Gram matrix on the basis.
    pub fn matrix(&self, dim: usize) -> Vec<Vec<Scalar>> {
        (0..dim).map(|i| (0..dim).map(|j| self.get(i, j)).collect()).collect()
    }
}
