//! The mode dg Lie algebra `L(U)`.
//!
//! `L(U)` is spanned by modes `a_n` of generators and the single surviving
//! mode `K_{-1}` of each central. A general element `u ⊗ t^n` is brought to
//! this form by [`mode_normal_form`]. The bracket is
//!
//! ```text
//! [u_n, v_p] = Σ_{i>=0} C(n, i) (u_(i) v)_{n+p-i}
//! ```
//!
//! A mode `a_n` has degree `|a| - 2Nn` and weight `Δ_a - n - 1`.

mod check;

use std::cell::RefCell;
use std::collections::HashMap;

use crate::combination::Combination;
use crate::error::Error;
use crate::graded::{binomial, factorial, falling_factorial, sign, Degree, Parity};
use crate::scalar::Scalar;
use crate::vla::element::{CentralId, GenId, UBasis, UElement};
use crate::vla::file::TranslationKind;
use crate::vla::presentation::VlaPresentation;

pub use check::check_dg_lie;

/// A basis mode of `L(U)`. Central modes exist only at index `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    Gen { gen: GenId, n: i64 },
    Central(CentralId),
}

impl Mode {
    /// The mode index; `-1` for centrals.
    pub fn index(&self) -> i64 {
        match self {
            Mode::Gen { n, .. } => *n,
            Mode::Central(_) => -1,
        }
    }
}

/// An element of `L(U)`.
pub type LElement = Combination<Mode>;

/// `|a_n| = |a| - 2Nn`
pub fn mode_degree(p: &VlaPresentation, m: &Mode) -> Degree {
    match m {
        Mode::Gen { gen, n } => Degree(p.generator(*gen).degree.0 - 2 * p.loop_n() * n),
        Mode::Central(c) => Degree(p.central(*c).degree.0 + 2 * p.loop_n()),
    }
}

/// Degree in `L(U)[2N]`: `|a_n| - 2N = |a| - 2N(n+1)`.
pub fn mode_shifted_degree(p: &VlaPresentation, m: &Mode) -> Degree {
    Degree(mode_degree(p, m).0 - 2 * p.loop_n())
}

pub fn mode_parity(p: &VlaPresentation, m: &Mode) -> Parity {
    mode_degree(p, m).parity()
}

/// `weight(a_n) = Δ_a - n - 1`; central modes have weight zero.
pub fn mode_weight(p: &VlaPresentation, m: &Mode) -> Scalar {
    match m {
        Mode::Gen { gen, n } => &p.generator(*gen).weight - Scalar::from_int(n + 1),
        Mode::Central(_) => Scalar::zero(),
    }
}

pub fn fmt_mode(p: &VlaPresentation, m: &Mode) -> String {
    match m {
        Mode::Gen { gen, n } => format!("{}_{n}", p.generator(*gen).id),
        Mode::Central(c) => format!("{}_-1", p.central(*c).id),
    }
}

/// Human-readable form such as `4*ω_1 + 1/2*c_-1`.
pub fn fmt_lelement(p: &VlaPresentation, x: &LElement) -> String {
    crate::format::linear_combination(x.iter().map(|(m, c)| (c, fmt_mode(p, m))))
}

fn basis_normal_form(p: &VlaPresentation, b: &UBasis, n: i64) -> LElement {
    match *b {
        UBasis::Central(c) => {
            if n == -1 {
                LElement::basis(Mode::Central(c))
            } else {
                LElement::zero()
            }
        }
        UBasis::Gen { gen, dpower } => match p.translation() {
            TranslationKind::Free => {
                let c = sign(dpower % 2 == 1) * falling_factorial(n, dpower);
                LElement::term(c, Mode::Gen { gen, n: n - dpower as i64 })
            }
            // With D = 0 the quotient by the image of D ⊗ 1 + 1 ⊗ d/dt kills
            // every t^n except t^{-1}.
            TranslationKind::Zero => {
                if dpower == 0 && n == -1 {
                    LElement::basis(Mode::Gen { gen, n })
                } else {
                    LElement::zero()
                }
            }
        },
    }
}

/// `u ⊗ t^n` in normal form: `(D^k a)_n = (-1)^k n(n-1)...(n-k+1) a_{n-k}`,
/// and central modes other than `K_{-1}` vanish.
pub fn mode_normal_form(p: &VlaPresentation, u: &UElement, n: i64) -> LElement {
    u.map_linear(|b| basis_normal_form(p, b, n))
}

/// Bracket of two basis modes.
pub fn mode_bracket(p: &VlaPresentation, x: &Mode, y: &Mode) -> LElement {
    let (Mode::Gen { gen: a, n }, Mode::Gen { gen: b, n: q }) = (*x, *y) else {
        return LElement::zero();
    };
    let mut out = LElement::zero();
    let Some(bound) = p.product_bound(a, b) else {
        return out;
    };
    for i in 0..=bound {
        if let Some(prod) = p.product(a, i, b) {
            out.add_scaled(&binomial(n, i), &mode_normal_form(p, prod, n + q - i as i64));
        }
    }
    out
}

/// The Lie bracket of `L(U)`, bilinear in both arguments.
pub fn loop_bracket(p: &VlaPresentation, x: &LElement, y: &LElement) -> LElement {
    let mut out = LElement::zero();
    for (mx, cx) in x {
        for (my, cy) in y {
            out.add_scaled(&(cx * cy), &mode_bracket(p, mx, my));
        }
    }
    out
}

/// Memoized bracket for repeated evaluation on the same presentation.
pub struct Bracketer<'a> {
    p: &'a VlaPresentation,
    cache: RefCell<HashMap<(Mode, Mode), LElement>>,
}

impl<'a> Bracketer<'a> {
    pub fn new(p: &'a VlaPresentation) -> Self {
        Bracketer { p, cache: RefCell::new(HashMap::new()) }
    }

    pub fn modes(&self, x: &Mode, y: &Mode) -> LElement {
        if let Some(v) = self.cache.borrow().get(&(*x, *y)) {
            return v.clone();
        }
        let v = mode_bracket(self.p, x, y);
        self.cache.borrow_mut().insert((*x, *y), v.clone());
        v
    }

    pub fn bracket(&self, x: &LElement, y: &LElement) -> LElement {
        let mut out = LElement::zero();
        for (mx, cx) in x {
            for (my, cy) in y {
                out.add_scaled(&(cx * cy), &self.modes(mx, my));
            }
        }
        out
    }
}

/// `(L_+, L_-)`: modes with `n >= 0`, and modes with `n < 0` together with
/// central modes.
pub fn split_pm(x: &LElement) -> (LElement, LElement) {
    x.partition(|m| m.index() >= 0)
}

/// `u -> u_{-1}`
pub fn iota(p: &VlaPresentation, u: &UElement) -> LElement {
    mode_normal_form(p, u, -1)
}

/// Inverse of [`iota`] on `L_-`, via `a_{-k-1} = (D^k a)_{-1} / k!`.
pub fn iota_inverse(p: &VlaPresentation, x: &LElement) -> Result<UElement, Error> {
    x.try_map_linear(|m| match *m {
        Mode::Gen { gen, n } if n <= -1 => {
            let k = (-n - 1) as u32;
            if k > 0 && p.translation() == TranslationKind::Zero {
                return Ok(UElement::zero());
            }
            let c = factorial(k).recip().expect("factorial is nonzero");
            Ok(UElement::term(c, UBasis::Gen { gen, dpower: k }))
        }
        Mode::Central(c) => Ok(UElement::basis(UBasis::Central(c))),
        Mode::Gen { .. } => Err(Error::NotInMinusPart(fmt_mode(p, m))),
    })
}

/// The differential of `L(U)`: `d(a_n) = (d a)_n`.
pub fn loop_differential(p: &VlaPresentation, x: &LElement) -> LElement {
    x.map_linear(|m| match *m {
        Mode::Gen { gen, n } => mode_normal_form(p, p.differential_of(gen), n),
        Mode::Central(_) => LElement::zero(),
    })
}

/// The derivation induced by `D`: `D(a_n) = (D a)_n = -n a_{n-1}`.
pub fn loop_translation(p: &VlaPresentation, x: &LElement) -> LElement {
    x.map_linear(|m| match *m {
        Mode::Gen { gen, n } => mode_normal_form(p, &p.apply_D(&UElement::basis(UBasis::gen(gen))), n),
        Mode::Central(_) => LElement::zero(),
    })
}

/// Parity shared by every term of `x`, if any.
pub fn lelement_parity(p: &VlaPresentation, x: &LElement) -> Option<Parity> {
    let mut ps = x.keys().map(|m| mode_parity(p, m));
    let first = ps.next()?;
    ps.all(|q| q == first).then_some(first)
}
