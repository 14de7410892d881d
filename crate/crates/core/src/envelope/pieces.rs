//! Finite weight pieces of `V(U)`: PBW bases, characters and cohomology.

use std::collections::BTreeMap;

use num::integer::lcm;
use serde::Serialize;

use crate::envelope::{EnvelopeContext, GenMode, PbwMonomial, VVector};
use crate::error::Error;
use crate::graded::Degree;
use crate::loop_algebra::mode_normal_form;
use crate::scalar::Scalar;
use crate::vla::element::{UBasis, UElement};

/// Graded dimensions of one weight space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterEntry {
    pub weight: Scalar,
    pub dims: BTreeMap<Degree, usize>,
}

impl CharacterEntry {
    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    /// `Σ (-1)^deg dim V^deg`
    pub fn euler(&self) -> i64 {
        self.dims.iter().map(|(d, n)| if d.is_odd() { -(*n as i64) } else { *n as i64 }).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyEntry {
    pub weight: Scalar,
    pub degree: Degree,
    pub dim: usize,
}

/// `Σ (-1)^deg dim H^deg` per weight.
pub fn euler_characteristic(entries: &[CohomologyEntry]) -> BTreeMap<Scalar, i64> {
    let mut out = BTreeMap::new();
    for e in entries {
        let s = if e.degree.is_odd() { -(e.dim as i64) } else { e.dim as i64 };
        *out.entry(e.weight.clone()).or_insert(0) += s;
    }
    out
}

/// Rank of a matrix over the rationals, by exact Gaussian elimination.
pub fn rank(matrix: &[Vec<Scalar>]) -> usize {
    let mut m: Vec<Vec<Scalar>> = matrix.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip().expect("nonzero pivot");
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            let (top, bottom) = m.split_at_mut(i);
            for (x, y) in bottom[0][c..cols].iter_mut().zip(&top[r][c..cols]) {
                *x -= &(&f * y);
            }
        }
        r += 1;
    }
    r
}

impl EnvelopeContext {
    /// Modes `a_n` (`n <= -1`) that are nonzero in `L(U)` and fit under the cap, in PBW order.
    fn creation_modes(&self) -> Vec<GenMode> {
        let p = &self.presentation;
        let mut out = Vec::new();
        for gen in p.gen_ids() {
            let mut n = -1;
            while self.mode_weight(GenMode { n, gen }) <= self.cap {
                if !mode_normal_form(p, &UElement::basis(UBasis::gen(gen)), n).is_zero() {
                    out.push(GenMode { n, gen });
                }
                n -= 1;
            }
        }
        out.sort();
        out
    }

    /// Every PBW monomial of weight at most the cap, in canonical order.
    pub fn basis(&self) -> Vec<PbwMonomial> {
        self.basis_up_to(&self.cap.clone())
    }

    /// Every PBW monomial of weight at most `limit` (itself clamped to the cap).
    pub fn basis_up_to(&self, limit: &Scalar) -> Vec<PbwMonomial> {
        let limit = limit.min(&self.cap).clone();
        fn extend(
            ctx: &EnvelopeContext,
            modes: &[GenMode],
            from: usize,
            prefix: &mut Vec<GenMode>,
            weight: &Scalar,
            limit: &Scalar,
            out: &mut Vec<PbwMonomial>,
        ) {
            out.push(PbwMonomial(prefix.clone()));
            for i in from..modes.len() {
                let x = modes[i];
                let w = weight + &ctx.mode_weight(x);
                if &w > limit {
                    continue;
                }
                prefix.push(x);
                let next = if ctx.is_odd(x) { i + 1 } else { i };
                extend(ctx, modes, next, prefix, &w, limit, out);
                prefix.pop();
            }
        }
        let modes = self.creation_modes();
        let mut out = Vec::new();
        extend(self, &modes, 0, &mut Vec::new(), &Scalar::zero(), &limit, &mut out);
        out.sort();
        out
    }

    /// PBW monomials grouped by weight.
    pub fn basis_by_weight(&self) -> BTreeMap<Scalar, Vec<PbwMonomial>> {
        let mut out: BTreeMap<Scalar, Vec<PbwMonomial>> = BTreeMap::new();
        for m in self.basis() {
            out.entry(self.monomial_weight(&m)).or_default().push(m);
        }
        out
    }

    /// Weights `0, 1/q, 2/q, ...` up to the cap, where `q` is the least
    /// common denominator of the generator weights.
    pub fn weight_grid(&self) -> Vec<Scalar> {
        let q = self
            .presentation
            .generators()
            .iter()
            .map(|g| g.weight.denom().try_into().unwrap_or(1i64))
            .fold(1, lcm);
        let top = (&self.cap * &Scalar::from_int(q)).floor();
        (0..=top).map(|i| Scalar::frac(i, q)).collect()
    }

    /// Dimensions of the weight spaces up to the cap, refined by degree.
    pub fn character(&self) -> Vec<CharacterEntry> {
        let by_weight = self.basis_by_weight();
        self.weight_grid()
            .into_iter()
            .map(|w| {
                let mut dims = BTreeMap::new();
                for m in by_weight.get(&w).into_iter().flatten() {
                    *dims.entry(self.monomial_degree(m)).or_insert(0) += 1;
                }
                CharacterEntry { weight: w, dims }
            })
            .collect()
    }

    /// Matrix of `d` from `source` to `target`, one row per target monomial.
    fn differential_matrix(&self, source: &[PbwMonomial], target: &[PbwMonomial]) -> Result<Vec<Vec<Scalar>>, Error> {
        let index: BTreeMap<&PbwMonomial, usize> = target.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut mat = vec![vec![Scalar::zero(); source.len()]; target.len()];
        for (j, m) in source.iter().enumerate() {
            let dm = self.differential(&VVector::basis(m.clone()))?;
            for (t, c) in &dm {
                let i = *index.get(t).ok_or_else(|| {
                    Error::InvalidPresentation(format!(
                        "d({}) leaves its weight and degree piece",
                        self.fmt_monomial(m)
                    ))
                })?;
                mat[i][j] = c.clone();
            }
        }
        Ok(mat)
    }

    /// `dim H^g = dim V^g - rank d_g - rank d_{g-1}` for every weight up to
    /// the cap and every degree that occurs there.
    pub fn cohomology_dims(&self) -> Result<Vec<CohomologyEntry>, Error> {
        let by_weight = self.basis_by_weight();
        let mut out = Vec::new();
        for w in self.weight_grid() {
            let Some(ms) = by_weight.get(&w) else {
                continue;
            };
            let mut by_degree: BTreeMap<Degree, Vec<PbwMonomial>> = BTreeMap::new();
            for m in ms {
                by_degree.entry(self.monomial_degree(m)).or_default().push(m.clone());
            }
            let empty = Vec::new();
            let mut ranks: BTreeMap<Degree, usize> = BTreeMap::new();
            for (g, src) in &by_degree {
                let tgt = by_degree.get(&(*g + Degree(1))).unwrap_or(&empty);
                ranks.insert(*g, rank(&self.differential_matrix(src, tgt)?));
            }
            for (g, src) in &by_degree {
                let below = ranks.get(&(*g - Degree(1))).copied().unwrap_or(0);
                out.push(CohomologyEntry { weight: w.clone(), degree: *g, dim: src.len() - ranks[g] - below });
            }
        }
        Ok(out)
    }
}

/// Free-function form of [`EnvelopeContext::cohomology_dims`].
pub fn cohomology_dims(ctx: &EnvelopeContext) -> Result<Vec<CohomologyEntry>, Error> {
    ctx.cohomology_dims()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_neveu_schwarz, build_virasoro};

    #[test]
    fn rank_of_small_matrices() {
        let s = |v: &[i64]| v.iter().map(|x| Scalar::from_int(*x)).collect::<Vec<_>>();
        assert_eq!(rank(&[s(&[1, 2]), s(&[2, 4])]), 1);
        assert_eq!(rank(&[s(&[0, 1]), s(&[1, 0]), s(&[1, 1])]), 2);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn virasoro_character_small() {
        let ctx = EnvelopeContext::with_levels(build_virasoro(1), &[("c", Scalar::one())], Scalar::from_int(6)).unwrap();
        let dims: Vec<usize> = ctx.character().iter().map(CharacterEntry::total).collect();
        assert_eq!(dims, vec![1, 0, 1, 1, 2, 2, 4]);
        let h = ctx.cohomology_dims().unwrap();
        let chi = euler_characteristic(&h);
        for e in ctx.character() {
            assert_eq!(chi.get(&e.weight).copied().unwrap_or(0), e.euler());
        }
    }

    #[test]
    fn neveu_schwarz_uses_half_integer_grid() {
        let ctx =
            EnvelopeContext::with_levels(build_neveu_schwarz(1), &[("c", Scalar::one())], Scalar::from_int(3)).unwrap();
        let ch = ctx.character();
        assert_eq!(ch.len(), 7);
        let dims: Vec<usize> = ch.iter().map(CharacterEntry::total).collect();
        // τ_-1 τ_-1 is not a basis monomial, so weight 3 holds only ω_-2
        assert_eq!(dims, vec![1, 0, 0, 1, 1, 1, 1]);
    }
}
