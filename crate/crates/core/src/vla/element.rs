//! Elements of a vertex Lie algebra presented as a free `C[D]`-module on
//! generators plus a summand of central symbols killed by `D`.

use crate::combination::Combination;

/// Index of a generator in its presentation (declaration order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenId(pub usize);

/// Index of a central symbol in its presentation (declaration order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CentralId(pub usize);

/// Basis of `U`: `D^k a` for a generator `a`, or a central symbol.
///
/// Ordering puts every generator term before every central term and sorts
/// generator terms by `(gen, dpower)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum UBasis {
    Gen { gen: GenId, dpower: u32 },
    Central(CentralId),
}

impl UBasis {
    pub fn gen(gen: GenId) -> Self {
        UBasis::Gen { gen, dpower: 0 }
    }

    pub fn dpower(&self) -> u32 {
        match self {
            UBasis::Gen { dpower, .. } => *dpower,
            UBasis::Central(_) => 0,
        }
    }
}

/// An element of `U`.
pub type UElement = Combination<UBasis>;

pub fn gen_element(gen: GenId) -> UElement {
    UElement::basis(UBasis::gen(gen))
}

pub fn central_element(c: CentralId) -> UElement {
    UElement::basis(UBasis::Central(c))
}

/// Applies `D^j` to a basis element of a free presentation: shifts the
/// `D`-power of generator terms and kills centrals.
pub fn shift_dpower(u: &UElement, j: u32) -> UElement {
    if j == 0 {
        return u.clone();
    }
    let mut out = UElement::zero();
    for (b, c) in u {
        if let UBasis::Gen { gen, dpower } = b {
            out.add_term(c.clone(), UBasis::Gen { gen: *gen, dpower: dpower + j });
        }
    }
    out
}
