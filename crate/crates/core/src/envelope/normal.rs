//! Normal ordering and the operators `a_n`, `D` and `d` on `V(U)`.

use std::collections::BTreeMap;

use crate::envelope::{EnvelopeContext, GenMode, PbwMonomial, VVector};
use crate::error::Error;
use crate::graded::sign;
use crate::loop_algebra::{mode_bracket, mode_normal_form, LElement, Mode};
use crate::scalar::Scalar;
use crate::vla::element::{GenId, UBasis, UElement};

fn as_mode(x: GenMode) -> Mode {
    Mode::Gen { gen: x.gen, n: x.n }
}

impl EnvelopeContext {
    fn bracket(&self, x: GenMode, y: GenMode) -> LElement {
        mode_bracket(&self.presentation, &as_mode(x), &as_mode(y))
    }

    /// `x · m` for a single mode and a normal-ordered monomial.
    ///
    /// Recursion on the first mode `y` of `m = y m'`: if `x` may stand in
    /// front of `y` it is prepended; otherwise `x y m' = ± y (x m') + [x, y] m'`,
    /// or `[x, x] m' / 2` when `x = y` is odd.
    pub(crate) fn apply_to_monomial(&self, x: GenMode, m: &PbwMonomial) -> Result<VVector, Error> {
        let w = self.mode_weight(x) + self.monomial_weight(m);
        if w.is_negative() {
            return Ok(VVector::zero());
        }
        self.check_weight(&w)?;
        let Some((y, rest)) = m.split_first() else {
            return Ok(if x.n >= 0 { VVector::zero() } else { VVector::basis(PbwMonomial(vec![x])) });
        };
        if x < y || (x == y && !self.is_odd(x)) {
            return Ok(VVector::basis(m.prepend(x)));
        }
        let key = (x, m.clone());
        if let Some(v) = self.apply_cache.lock().expect("cache lock").get(&key) {
            return Ok(v.clone());
        }
        let out = if x == y {
            self.apply_lelement(&self.bracket(x, x), &VVector::basis(rest))?.scaled(&Scalar::frac(1, 2))
        } else {
            let s = sign(self.is_odd(x) && self.is_odd(y));
            let moved = self.apply_gen_mode(y, &self.apply_to_monomial(x, &rest)?)?;
            moved.scaled(&s) + self.apply_lelement(&self.bracket(x, y), &VVector::basis(rest))?
        };
        self.apply_cache.lock().expect("cache lock").insert(key, out.clone());
        Ok(out)
    }

    pub(crate) fn apply_gen_mode(&self, x: GenMode, v: &VVector) -> Result<VVector, Error> {
        v.try_map_linear(|m| self.apply_to_monomial(x, m))
    }

    /// Action of an element of `L(U)`; `K_{-1}` acts by its level.
    pub fn apply_lelement(&self, l: &LElement, v: &VVector) -> Result<VVector, Error> {
        let mut out = VVector::zero();
        for (mode, c) in l {
            match *mode {
                Mode::Gen { gen, n } => out.add_scaled(c, &self.apply_gen_mode(GenMode { n, gen }, v)?),
                Mode::Central(k) => out.add_scaled(&(c * self.level(k)), v),
            }
        }
        Ok(out)
    }

    /// `a_n v`. The mode is first put in normal form, so with `D = 0` only
    /// `n = -1` acts nontrivially.
    pub fn mode_apply(&self, a: GenId, n: i64, v: &VVector) -> Result<VVector, Error> {
        let l = mode_normal_form(&self.presentation, &UElement::basis(UBasis::gen(a)), n);
        self.apply_lelement(&l, v)
    }

    /// `x_1 x_2 ... x_r 1`, applying modes from the right.
    pub fn normal_order(&self, word: &[Mode]) -> Result<VVector, Error> {
        let mut v = super::vacuum();
        for mode in word.iter().rev() {
            v = self.apply_lelement(&LElement::basis(*mode), &v)?;
        }
        Ok(v)
    }

    /// Independent straightening by word rewriting: repeatedly resolve the
    /// leftmost adjacent pair that is out of PBW order. Used to cross-check
    /// [`normal_order`](Self::normal_order).
    pub fn normal_order_by_rewriting(&self, word: &[Mode]) -> Result<VVector, Error> {
        let mut scale = Scalar::one();
        let mut modes = Vec::new();
        for m in word {
            match *m {
                Mode::Gen { gen, n } => modes.push(GenMode { n, gen }),
                Mode::Central(k) => scale *= self.level(k),
            }
        }
        let total: Scalar = modes.iter().map(|x| self.mode_weight(*x)).sum();
        self.check_weight(&total)?;
        let mut pending: BTreeMap<Vec<GenMode>, Scalar> = BTreeMap::new();
        let mut out = VVector::zero();
        if !scale.is_zero() {
            pending.insert(modes, scale);
        }
        let push = |pending: &mut BTreeMap<Vec<GenMode>, Scalar>, w: Vec<GenMode>, c: Scalar| {
            let e = pending.entry(w).or_insert_with(Scalar::zero);
            *e += c;
        };
        while let Some((w, c)) = pending.pop_first() {
            if c.is_zero() || w.last().is_some_and(|x| x.n >= 0) {
                continue;
            }
            let bad = w.windows(2).position(|p| p[0] > p[1] || (p[0] == p[1] && self.is_odd(p[0])));
            let Some(i) = bad else {
                out.add_term(c, PbwMonomial(w));
                continue;
            };
            let (x, y) = (w[i], w[i + 1]);
            let br = self.bracket(x, y);
            let br_scale = if x == y { Scalar::frac(1, 2) } else { Scalar::one() };
            if x != y {
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                push(&mut pending, swapped, &c * sign(self.is_odd(x) && self.is_odd(y)));
            }
            for (mode, bc) in &br {
                let coeff = &c * &br_scale * bc;
                let mut nw = w[..i].to_vec();
                match *mode {
                    Mode::Gen { gen, n } => nw.push(GenMode { n, gen }),
                    Mode::Central(k) => {
                        let lv = self.level(k).clone();
                        nw.extend_from_slice(&w[i + 2..]);
                        push(&mut pending, nw, coeff * lv);
                        continue;
                    }
                }
                nw.extend_from_slice(&w[i + 2..]);
                push(&mut pending, nw, coeff);
            }
        }
        Ok(out)
    }

    fn translate_monomial(&self, m: &PbwMonomial) -> Result<VVector, Error> {
        let Some((x, rest)) = m.split_first() else {
            return Ok(VVector::zero());
        };
        self.check_weight(&(self.monomial_weight(m) + Scalar::one()))?;
        if let Some(v) = self.translate_cache.lock().expect("cache lock").get(m) {
            return Ok(v.clone());
        }
        let rest_v = VVector::basis(rest.clone());
        let dx = mode_normal_form(
            &self.presentation,
            &self.presentation.apply_D(&UElement::basis(UBasis::gen(x.gen))),
            x.n,
        );
        let out = self.apply_lelement(&dx, &rest_v)? + self.apply_gen_mode(x, &self.translate_monomial(&rest)?)?;
        self.translate_cache.lock().expect("cache lock").insert(m.clone(), out.clone());
        Ok(out)
    }

    /// The translation operator: `D(a_n w) = -n a_{n-1} w + a_n D w`, `D 1 = 0`.
    pub fn translate(&self, v: &VVector) -> Result<VVector, Error> {
        v.try_map_linear(|m| self.translate_monomial(m))
    }

    /// `D^i v / i!`
    pub fn divided_translate(&self, v: &VVector, i: u32) -> Result<VVector, Error> {
        let mut out = v.clone();
        for j in 1..=i {
            out = self.translate(&out)?.scaled(&Scalar::frac(1, j as i64));
        }
        Ok(out)
    }

    fn differential_monomial(&self, m: &PbwMonomial) -> Result<VVector, Error> {
        let Some((x, rest)) = m.split_first() else {
            return Ok(VVector::zero());
        };
        let p = &self.presentation;
        let dx = mode_normal_form(p, p.differential_of(x.gen), x.n);
        let first = self.apply_lelement(&dx, &VVector::basis(rest.clone()))?;
        let second = self.apply_gen_mode(x, &self.differential_monomial(&rest)?)?;
        Ok(first + second.scaled(&sign(self.is_odd(x))))
    }

    /// `d(a_n w) = (d a)_n w + (-1)^{|a|} a_n d w`, `d 1 = 0`.
    pub fn differential(&self, v: &VVector) -> Result<VVector, Error> {
        v.try_map_linear(|m| self.differential_monomial(m))
    }

    /// `u_{-1} 1` for `u` in `U`; on generators this is the embedding `U -> V(U)`.
    pub fn state(&self, u: &UElement) -> Result<VVector, Error> {
        self.apply_lelement(&crate::loop_algebra::iota(&self.presentation, u), &super::vacuum())
    }

    /// `a_{-1} 1`
    pub fn generator_state(&self, a: GenId) -> Result<VVector, Error> {
        self.mode_apply(a, -1, &super::vacuum())
    }
}
