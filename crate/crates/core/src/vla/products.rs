//! The `n`-products on all of `U` and the generator-level axiom defects.
//!
//! The stored table only covers generator pairs. Everything else follows from
//! the two translation rules
//!
//! ```text
//! (D^k a)_(n) x = (-1)^k n(n-1)...(n-k+1) a_(n-k) x        (zero when k > n)
//! a_(m) D^l b   = Σ_{i=0}^{min(l,m)} C(l,i) m(m-1)...(m-i+1) D^{l-i}(a_(m-i) b)
//! ```
//!
//! and centrals annihilate and are annihilated.

use std::collections::BTreeMap;

use crate::graded::{factorial, falling_factorial, koszul_sign, sign, binomial};
use crate::scalar::Scalar;
use crate::vla::element::{gen_element, shift_dpower, GenId, UBasis, UElement};
use crate::vla::file::TranslationKind;
use crate::vla::presentation::VlaPresentation;

impl VlaPresentation {
    fn table(&self, a: GenId, n: u32, b: GenId) -> UElement {
        self.product(a, n, b).cloned().unwrap_or_default()
    }

    /// Largest `n` for which `x_(n) y` can be nonzero.
    pub fn basis_product_bound(&self, x: &UBasis, y: &UBasis) -> Option<u32> {
        match (x, y) {
            (UBasis::Gen { gen: a, dpower: k }, UBasis::Gen { gen: b, dpower: l }) => {
                self.product_bound(*a, *b).map(|m| m + k + l)
            }
            _ => None,
        }
    }

    /// Largest `n` for which `u_(n) v` can be nonzero, over all term pairs.
    pub fn element_product_bound(&self, u: &UElement, v: &UElement) -> Option<u32> {
        u.keys()
            .flat_map(|x| v.keys().filter_map(move |y| self.basis_product_bound(x, y)))
            .max()
    }

    fn basis_product(&self, x: &UBasis, n: u32, y: &UBasis) -> UElement {
        let (UBasis::Gen { gen: a, dpower: k }, UBasis::Gen { gen: b, dpower: l }) = (*x, *y) else {
            return UElement::zero();
        };
        if self.translation() == TranslationKind::Zero && (k > 0 || l > 0) {
            return UElement::zero();
        }
        if k > n {
            return UElement::zero();
        }
        let m = n - k;
        let left = sign(k % 2 == 1) * falling_factorial(n as i64, k);
        let mut out = UElement::zero();
        for i in 0..=l.min(m) {
            let c = &left * binomial(l as i64, i) * falling_factorial(m as i64, i);
            out.add_scaled(&c, &shift_dpower(&self.table(a, m - i, b), l - i));
        }
        out
    }

    /// `u_(n) v`, bilinear in both arguments.
    pub fn nth_product(&self, u: &UElement, n: u32, v: &UElement) -> UElement {
        let mut out = UElement::zero();
        for (x, cx) in u {
            for (y, cy) in v {
                out.add_scaled(&(cx * cy), &self.basis_product(x, n, y));
            }
        }
        out
    }

    /// The translation operator: `D^k a -> D^{k+1} a`, centrals to zero.
    /// Identically zero when the presentation declares `D = 0`.
    #[allow(non_snake_case)]
    pub fn apply_D(&self, u: &UElement) -> UElement {
        match self.translation() {
            TranslationKind::Free => shift_dpower(u, 1),
            TranslationKind::Zero => UElement::zero(),
        }
    }

    /// `D^i u / i!`
    pub fn divided_power(&self, u: &UElement, i: u32) -> UElement {
        let mut out = u.clone();
        for _ in 0..i {
            out = self.apply_D(&out);
        }
        out.scaled(&factorial(i).recip().expect("factorial is nonzero"))
    }

    /// Half skew-symmetry defect of a pair of homogeneous basis elements:
    /// `x_(n)y - (-1)^{|x||y|} Σ_i (-1)^{n+1+i} D^{(i)}(y_(n+i)x)` for every `n`
    /// up to the truncation bound. Only nonzero defects are returned.
    pub fn half_skew_defect_basis(&self, x: &UBasis, y: &UBasis) -> BTreeMap<u32, UElement> {
        let mut out = BTreeMap::new();
        let bound = match (self.basis_product_bound(x, y), self.basis_product_bound(y, x)) {
            (None, None) => return out,
            (a, b) => a.max(b).unwrap_or(0),
        };
        let (ux, uy) = (UElement::basis(*x), UElement::basis(*y));
        let s = koszul_sign(self.basis_degree(x), self.basis_degree(y));
        for n in 0..=bound {
            let mut rhs = UElement::zero();
            for i in 0..=(bound - n) {
                let term = self.divided_power(&self.nth_product(&uy, n + i, &ux), i);
                rhs.add_scaled(&sign((n + 1 + i) % 2 == 1), &term);
            }
            let defect = self.nth_product(&ux, n, &uy) - rhs.scaled(&s);
            if !defect.is_zero() {
                out.insert(n, defect);
            }
        }
        out
    }

    /// [`half_skew_defect_basis`](Self::half_skew_defect_basis) on two generators.
    pub fn half_skew_defect(&self, u: GenId, v: GenId) -> BTreeMap<u32, UElement> {
        self.half_skew_defect_basis(&UBasis::gen(u), &UBasis::gen(v))
    }

    /// Representative of `u_(0) v + DU` with every `D`-image term removed.
    pub fn zero_mode_bracket(&self, u: &UElement, v: &UElement) -> UElement {
        self.nth_product(u, 0, v).partition(|b| b.dpower() == 0).0
    }

    /// `Σ_{i>=0} (-1)^i / (i+1)! D^{i+1}(u_(i) v)`
    pub fn derived_lie_bracket(&self, u: &UElement, v: &UElement) -> UElement {
        let mut out = UElement::zero();
        let Some(bound) = self.element_product_bound(u, v) else {
            return out;
        };
        for i in 0..=bound {
            let term = self.divided_power(&self.nth_product(u, i, v), i + 1);
            out.add_scaled(&sign(i % 2 == 1), &term);
        }
        out
    }

    fn global_product_bound(&self) -> Option<u32> {
        let extra = self
            .gen_ids()
            .flat_map(|g| self.differential_of(g).keys().map(|b| b.dpower()).collect::<Vec<_>>())
            .max()
            .unwrap_or(0);
        self.products().map(|((_, n, _), _)| *n).max().map(|n| n + 2 * extra)
    }

    /// `d(u_(n)v) - d(u)_(n)v - (-1)^{|u|} u_(n)d(v)` on generators, nonzero
    /// entries only.
    pub fn leibniz_defect(&self, u: GenId, v: GenId) -> BTreeMap<u32, UElement> {
        let mut out = BTreeMap::new();
        let Some(bound) = self.global_product_bound() else {
            return out;
        };
        let (eu, ev) = (gen_element(u), gen_element(v));
        let (du, dv) = (self.differential_of(u), self.differential_of(v));
        let s = sign(self.parity(u).negates());
        for n in 0..=bound {
            let defect = self.apply_differential(&self.nth_product(&eu, n, &ev))
                - self.nth_product(du, n, &ev)
                - self.nth_product(&eu, n, dv).scaled(&s);
            if !defect.is_zero() {
                out.insert(n, defect);
            }
        }
        out
    }

    /// `(Du)_(n) v + n u_(n-1) v` on generators, nonzero entries only.
    ///
    /// Vanishes identically for free presentations; with `D = 0` it detects
    /// every nonzero product, which is exactly the obstruction to a
    /// translation-trivial vertex Lie algebra.
    pub fn sesquilinearity_defect(&self, u: GenId, v: GenId) -> BTreeMap<u32, UElement> {
        let mut out = BTreeMap::new();
        let bound = self.product_bound(u, v).map_or(0, |b| b + 1);
        let (eu, ev) = (gen_element(u), gen_element(v));
        let du = self.apply_D(&eu);
        for n in 0..=bound {
            let mut defect = self.nth_product(&du, n, &ev);
            if n > 0 {
                defect.add_scaled(&Scalar::from_int(n as i64), &self.nth_product(&eu, n - 1, &ev));
            }
            if !defect.is_zero() {
                out.insert(n, defect);
            }
        }
        out
    }
}
