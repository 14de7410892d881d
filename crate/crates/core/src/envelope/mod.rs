//! The enveloping dg vertex algebra `V(U)` on weight-truncated PBW bases.
//!
//! `V(U)` is the vacuum module of `L(U)[2N]`, with every central mode `K_{-1}`
//! specialized to its level. A PBW monomial is a sequence of generator modes
//! `a_n` with `n <= -1`, sorted ascending by `(n, generator)`; equal odd modes
//! never sit next to each other because `x x = [x, x] / 2`.
//!
//! Every operation preserves weight, so a vector of weight `w` only ever
//! produces intermediate vectors whose weight is bounded in terms of `w` and
//! the mode indices involved. Whenever a term would exceed the context's
//! weight cap the operation fails with [`Error::WeightOverflow`] instead of
//! dropping it.

mod normal;
mod pieces;
mod vertex;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use serde::Serialize;

use crate::combination::Combination;
use crate::error::Error;
use crate::graded::{Degree, Parity};
use crate::scalar::Scalar;
use crate::vla::element::GenId;
use crate::vla::presentation::VlaPresentation;

pub use pieces::{cohomology_dims, euler_characteristic, rank, CharacterEntry, CohomologyEntry};

/// A generator mode `a_n`. Ordered by `(n, gen)`, which is the PBW order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenMode {
    pub n: i64,
    pub gen: GenId,
}

/// A normal-ordered monomial `x_1 x_2 ... x_r 1` with `x_1 <= ... <= x_r`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwMonomial(Vec<GenMode>);

impl PbwMonomial {
    pub fn vacuum() -> Self {
        PbwMonomial(Vec::new())
    }

    pub fn modes(&self) -> &[GenMode] {
        &self.0
    }

    pub fn is_vacuum(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn prepend(&self, x: GenMode) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(x);
        v.extend_from_slice(&self.0);
        PbwMonomial(v)
    }

    fn split_first(&self) -> Option<(GenMode, PbwMonomial)> {
        self.0.split_first().map(|(x, rest)| (*x, PbwMonomial(rest.to_vec())))
    }
}

/// An element of `V(U)`.
pub type VVector = Combination<PbwMonomial>;

pub fn vacuum() -> VVector {
    VVector::basis(PbwMonomial::vacuum())
}

type Cache<K> = Mutex<HashMap<K, VVector>>;

/// A presentation together with central levels and a weight cap.
pub struct EnvelopeContext {
    presentation: VlaPresentation,
    levels: Vec<Scalar>,
    cap: Scalar,
    apply_cache: Cache<(GenMode, PbwMonomial)>,
    vertex_cache: Cache<(PbwMonomial, i64, PbwMonomial)>,
    translate_cache: Cache<PbwMonomial>,
}

impl fmt::Debug for EnvelopeContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EnvelopeContext")
            .field("presentation", &self.presentation.name())
            .field("levels", &self.levels)
            .field("cap", &self.cap)
            .finish()
    }
}

impl EnvelopeContext {
    /// Fails with `MissingLevel` if a central has no level, `UnknownId` for a
    /// level naming no central, `InvalidLevel` for a nonzero level on a
    /// central of nonzero degree, and `NonPositiveWeight` if some generator
    /// has weight `<= 0` (the weight spaces would be infinite).
    pub fn new(presentation: VlaPresentation, levels: &BTreeMap<String, Scalar>, cap: Scalar) -> Result<Self, Error> {
        if cap.is_negative() {
            return Err(Error::InvalidCap(cap));
        }
        if let Some(id) = levels.keys().find(|id| presentation.central_id(id).is_none()) {
            return Err(Error::UnknownId(id.clone()));
        }
        let mut lv = Vec::new();
        for c in presentation.centrals() {
            let k = levels.get(&c.id).ok_or_else(|| Error::MissingLevel(c.id.clone()))?;
            if !k.is_zero() && c.degree != Degree(0) {
                return Err(Error::InvalidLevel(format!(
                    "central {:?} has degree {}, so only level 0 is homogeneous",
                    c.id, c.degree
                )));
            }
            lv.push(k.clone());
        }
        if let Some(g) = presentation.generators().iter().find(|g| !g.weight.is_positive()) {
            return Err(Error::NonPositiveWeight(g.id.clone()));
        }
        Ok(EnvelopeContext {
            presentation,
            levels: lv,
            cap,
            apply_cache: Mutex::default(),
            vertex_cache: Mutex::default(),
            translate_cache: Mutex::default(),
        })
    }

    /// Convenience form of [`EnvelopeContext::new`].
    pub fn with_levels(presentation: VlaPresentation, levels: &[(&str, Scalar)], cap: Scalar) -> Result<Self, Error> {
        let map = levels.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
        Self::new(presentation, &map, cap)
    }

    pub fn presentation(&self) -> &VlaPresentation {
        &self.presentation
    }

    pub fn cap(&self) -> &Scalar {
        &self.cap
    }

    pub fn level(&self, c: crate::vla::element::CentralId) -> &Scalar {
        &self.levels[c.0]
    }

    /// `Δ_a - n - 1`
    pub fn mode_weight(&self, x: GenMode) -> Scalar {
        &self.presentation.generator(x.gen).weight - Scalar::from_int(x.n + 1)
    }

    pub fn monomial_weight(&self, m: &PbwMonomial) -> Scalar {
        m.0.iter().map(|x| self.mode_weight(*x)).sum()
    }

    /// `Σ (|a_i| - 2N(n_i + 1))`
    pub fn monomial_degree(&self, m: &PbwMonomial) -> Degree {
        let two_n = 2 * self.presentation.loop_n();
        Degree(m.0.iter().map(|x| self.presentation.generator(x.gen).degree.0 - two_n * (x.n + 1)).sum())
    }

    pub fn monomial_parity(&self, m: &PbwMonomial) -> Parity {
        self.monomial_degree(m).parity()
    }

    fn is_odd(&self, x: GenMode) -> bool {
        self.presentation.parity(x.gen).is_odd()
    }

    /// Weight shared by every term, if any.
    pub fn vector_weight(&self, v: &VVector) -> Option<Scalar> {
        let mut ws = v.keys().map(|m| self.monomial_weight(m));
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }

    /// Degree shared by every term, if any.
    pub fn vector_degree(&self, v: &VVector) -> Option<Degree> {
        let mut ds = v.keys().map(|m| self.monomial_degree(m));
        let first = ds.next()?;
        ds.all(|d| d == first).then_some(first)
    }

    fn check_weight(&self, w: &Scalar) -> Result<(), Error> {
        if w > &self.cap {
            return Err(Error::WeightOverflow { weight: w.clone(), cap: self.cap.clone() });
        }
        Ok(())
    }

    /// Builds a normal-ordered monomial from modes, checking the PBW order.
    pub fn monomial(&self, modes: &[(&str, i64)]) -> Result<PbwMonomial, Error> {
        let mut out = Vec::new();
        for (id, n) in modes {
            let gen = self.presentation.gen_id(id).ok_or_else(|| Error::UnknownGenerator(id.to_string()))?;
            out.push(GenMode { n: *n, gen });
        }
        let ordered = out.windows(2).all(|w| w[0] < w[1] || (w[0] == w[1] && !self.is_odd(w[0])));
        if !ordered || out.iter().any(|x| x.n > -1) {
            return Err(Error::InvalidPresentation(format!("{modes:?} is not a PBW monomial")));
        }
        let m = PbwMonomial(out);
        self.check_weight(&self.monomial_weight(&m))?;
        Ok(m)
    }

    pub fn fmt_gen_mode(&self, x: GenMode) -> String {
        format!("{}_{}", self.presentation.generator(x.gen).id, x.n)
    }

    pub fn fmt_monomial(&self, m: &PbwMonomial) -> String {
        let mut s: Vec<String> = m.0.iter().map(|x| self.fmt_gen_mode(*x)).collect();
        s.push("|0>".into());
        s.join(" ")
    }

    /// `c * a_n b_m ... |0>` terms joined by `+`/`-`, or `0`.
    pub fn fmt_vector(&self, v: &VVector) -> String {
        let mut out = String::new();
        for (m, c) in v {
            let (neg, mag) = (c.is_negative(), c.abs());
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&format!("{mag} * {}", self.fmt_monomial(m)));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Structured form: `{"terms": [{"coeff": "p/q", "modes": [{"gen": id, "n": n}]}]}`.
    pub fn vector_json(&self, v: &VVector) -> serde_json::Value {
        #[derive(Serialize)]
        struct ModeRec<'a> {
            gen: &'a str,
            n: i64,
        }
        #[derive(Serialize)]
        struct Term<'a> {
            coeff: &'a Scalar,
            modes: Vec<ModeRec<'a>>,
        }
        let terms: Vec<Term> = v
            .iter()
            .map(|(m, c)| Term {
                coeff: c,
                modes: m
                    .0
                    .iter()
                    .map(|x| ModeRec { gen: &self.presentation.generator(x.gen).id, n: x.n })
                    .collect(),
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }
}
