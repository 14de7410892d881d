//! Modes of vertex operators on `V(U)`, skew-symmetry and locality.
//!
//! For `u = a_n b` with `a_n` the leftmost mode of a PBW monomial,
//!
//! ```text
//! (a_(n) b)_(m) = Σ_{i>=0} (-1)^i C(n,i) ( a_(n-i) b_(m+i) - (-1)^{|a||b| + n} b_(m+n-i) a_(i) )
//! ```
//!
//! Both sums are finite on a given vector: `b_(m+i) v` has weight
//! `wt b + wt v - m - i - 1`, which eventually turns negative, and likewise
//! `a_(i) v`.

use std::collections::BTreeMap;

use crate::envelope::{EnvelopeContext, GenMode, PbwMonomial, VVector};
use crate::error::Error;
use crate::graded::{binomial, sign};
use crate::scalar::Scalar;

impl EnvelopeContext {
    fn vertex_monomial(&self, u: &PbwMonomial, m: i64, v: &PbwMonomial) -> Result<VVector, Error> {
        let Some((x, rest)) = u.split_first() else {
            return Ok(if m == -1 { VVector::basis(v.clone()) } else { VVector::zero() });
        };
        let (wu, wv) = (self.monomial_weight(u), self.monomial_weight(v));
        let w = &wu + &wv - Scalar::from_int(m + 1);
        if w.is_negative() {
            return Ok(VVector::zero());
        }
        self.check_weight(&w)?;
        let vv = VVector::basis(v.clone());
        if rest.is_vacuum() && x.n == -1 {
            return self.apply_gen_mode(GenMode { n: m, gen: x.gen }, &vv);
        }
        let key = (u.clone(), m, v.clone());
        if let Some(r) = self.vertex_cache.lock().expect("cache lock").get(&key) {
            return Ok(r.clone());
        }
        let (a, n) = (x.gen, x.n);
        let wb = self.monomial_weight(&rest);
        let rest_v = VVector::basis(rest.clone());
        let mut out = VVector::zero();

        // a_(n-i) b_(m+i) v, nonzero only while wt b + wt v - m - i - 1 >= 0
        let top = (&wb + &wv - Scalar::from_int(m + 1)).floor();
        for i in 0..=top.max(-1) {
            let c = sign(i % 2 == 1) * binomial(n, i as u32);
            let inner = self.vertex_mode(&rest_v, m + i, &vv)?;
            out.add_scaled(&c, &self.apply_gen_mode(GenMode { n: n - i, gen: a }, &inner)?);
        }

        // b_(m+n-i) a_(i) v, nonzero only while Δ_a - i - 1 + wt v >= 0
        let s = sign(
            self.presentation.parity(a).swap_negates(self.monomial_parity(&rest)) != (n.rem_euclid(2) == 1),
        );
        let top = (&self.presentation.generator(a).weight + &wv - Scalar::one()).floor();
        for i in 0..=top.max(-1) {
            let c = sign(i % 2 == 1) * binomial(n, i as u32) * &s;
            let inner = self.apply_gen_mode(GenMode { n: i, gen: a }, &vv)?;
            out.add_scaled(&-c, &self.vertex_mode(&rest_v, m + n - i, &inner)?);
        }
        self.vertex_cache.lock().expect("cache lock").insert(key, out.clone());
        Ok(out)
    }

    /// `u_m v`: the coefficient of `x^{-m-1}` in `Y(u, x) v`.
    pub fn vertex_mode(&self, u: &VVector, m: i64, v: &VVector) -> Result<VVector, Error> {
        let mut out = VVector::zero();
        for (mu, cu) in u {
            for (mv, cv) in v {
                out.add_scaled(&(cu * cv), &self.vertex_monomial(mu, m, mv)?);
            }
        }
        Ok(out)
    }

    /// Largest `m` for which `u_m v` can be nonzero on weight grounds.
    pub fn vertex_mode_bound(&self, u: &VVector, v: &VVector) -> Option<i64> {
        u.keys()
            .flat_map(|a| v.keys().map(move |b| (a, b)))
            .map(|(a, b)| (self.monomial_weight(a) + self.monomial_weight(b) - Scalar::one()).floor())
            .max()
    }

    /// `u_n v - (-1)^{|u||v|} Σ_i (-1)^{n+1+i} D^{(i)}(v_{n+i} u)` for every `n`
    /// from the top of the support down to the lowest index whose value fits
    /// under the weight cap. All entries, including zero ones, are returned.
    pub fn skew_symmetry_defect(&self, u: &VVector, v: &VVector) -> Result<BTreeMap<i64, VVector>, Error> {
        let mut out: BTreeMap<i64, VVector> = BTreeMap::new();
        for (mu, cu) in u {
            for (mv, cv) in v {
                let w = self.monomial_weight(mu) + self.monomial_weight(mv);
                let hi = (&w - Scalar::one()).floor();
                let lo = (&w - Scalar::one() - &self.cap).ceil();
                let s = sign(self.monomial_parity(mu).swap_negates(self.monomial_parity(mv)));
                let (uu, vv) = (VVector::basis(mu.clone()), VVector::basis(mv.clone()));
                for n in lo..=hi {
                    let mut rhs = VVector::zero();
                    for i in 0..=(hi - n) {
                        let t = self.divided_translate(&self.vertex_mode(&vv, n + i, &uu)?, i as u32)?;
                        rhs.add_scaled(&sign((n + 1 + i).rem_euclid(2) == 1), &t);
                    }
                    let d = self.vertex_mode(&uu, n, &vv)? - rhs.scaled(&s);
                    out.entry(n).or_default().add_scaled(&(cu * cv), &d);
                }
            }
        }
        Ok(out)
    }

    fn locality_coefficient(
        &self,
        u: &VVector,
        v: &VVector,
        k: u32,
        p: i64,
        q: i64,
        w: &VVector,
    ) -> Result<VVector, Error> {
        let mut out = VVector::zero();
        for (mu, cu) in u {
            for (mv, cv) in v {
                let (uu, vv) = (VVector::basis(mu.clone()), VVector::basis(mv.clone()));
                let s = sign(self.monomial_parity(mu).swap_negates(self.monomial_parity(mv)));
                for j in 0..=k {
                    let (r, t) = (p + (k - j) as i64, q + j as i64);
                    let c = binomial(k as i64, j) * sign(j % 2 == 1) * cu * cv;
                    let uv = self.vertex_mode(&uu, r, &self.vertex_mode(&vv, t, w)?)?;
                    let vu = self.vertex_mode(&vv, t, &self.vertex_mode(&uu, r, w)?)?;
                    out.add_scaled(&c, &(uv - vu.scaled(&s)));
                }
            }
        }
        Ok(out)
    }

    /// Smallest `k <= k_max` such that every coefficient of
    /// `(x_1 - x_2)^k [Y(u, x_1), Y(v, x_2)]` annihilates every probe.
    ///
    /// A coefficient is only tested when all of its terms fit under the
    /// weight cap; coefficients that would overflow are skipped, so the
    /// measured order is exact on the probed window and a lower bound in
    /// general.
    pub fn locality_order(&self, u: &VVector, v: &VVector, probes: &[VVector], k_max: u32) -> Result<u32, Error> {
        let weights = |x: &VVector| -> Vec<Scalar> { x.keys().map(|m| self.monomial_weight(m)).collect() };
        let (wu, wv) = (weights(u), weights(v));
        if wu.is_empty() || wv.is_empty() {
            return Ok(0);
        }
        let min = |ws: &[Scalar]| ws.iter().min().cloned().expect("nonempty");
        let max = |ws: &[Scalar]| ws.iter().max().cloned().expect("nonempty");
        let one = Scalar::one();
        let mut probe_monomials: Vec<PbwMonomial> = probes.iter().flat_map(|p| p.keys().cloned()).collect();
        probe_monomials.sort();
        probe_monomials.dedup();
        'order: for k in 0..=k_max {
            for pm in &probe_monomials {
                let ww = self.monomial_weight(pm);
                let w = VVector::basis(pm.clone());
                let p_lo = (min(&wu) + &ww - &one - &self.cap).ceil();
                let p_hi = (max(&wu) + &ww - &one).floor();
                let q_lo = (min(&wv) + &ww - &one - &self.cap).ceil();
                let q_hi = (max(&wv) + &ww - &one).floor();
                for p in p_lo..=p_hi {
                    for q in q_lo..=q_hi {
                        match self.locality_coefficient(u, v, k, p, q, &w) {
                            Ok(c) if !c.is_zero() => continue 'order,
                            Ok(_) | Err(Error::WeightOverflow { .. }) => {}
                            Err(e) => return Err(e),
                        }
                    }
                }
            }
            return Ok(k);
        }
        Err(Error::WindowExceeded(k_max))
    }
}
