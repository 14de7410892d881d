//! Small dg Lie algebras and forms used by the catalog and the tests.

use crate::catalog::dglie::{BilinearForm, DgLieData};
use crate::scalar::Scalar;

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

/// `sl2` in degree 0 with `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> DgLieData {
    let mut g = DgLieData::new(0, &[("e", 0), ("h", 0), ("f", 0)]);
    g.set_bracket("h", "e", &[(int(2), "e")]).expect("basis ids exist");
    g.set_bracket("h", "f", &[(int(-2), "f")]).expect("basis ids exist");
    g.set_bracket("e", "f", &[(int(1), "h")]).expect("basis ids exist");
    g
}

/// Trace form normalized so the long root has squared length 2:
/// `<e,f> = <f,e> = 1`, `<h,h> = 2`.
pub fn sl2_form(g: &DgLieData) -> BilinearForm {
    BilinearForm::from_entries(g, &[("e", "f", int(1)), ("f", "e", int(1)), ("h", "h", int(2))])
        .expect("sl2 basis ids")
}

/// One even generator `a` of degree 0 with zero bracket.
pub fn abelian_rank_one() -> DgLieData {
    DgLieData::new(0, &[("a", 0)])
}

pub fn unit_form(g: &DgLieData) -> BilinearForm {
    BilinearForm::from_entries(g, &[("a", "a", int(1))]).expect("generator a exists")
}

/// Abelian `a` (degree 0), `b` (degree 1) with `d a = b`: an acyclic complex.
pub fn acyclic_pair() -> DgLieData {
    let mut g = DgLieData::new(0, &[("a", 0), ("b", 1)]);
    g.set_differential("a", &[(int(1), "b")]).expect("basis ids exist");
    g
}

/// `sl2 ⊕ C z` with the block form `sl2_form ⊕ <z,z> = 1`; the Casimir acts
/// by 4 on `sl2` and by 0 on `z`.
pub fn sl2_plus_abelian() -> (DgLieData, BilinearForm) {
    let mut g = DgLieData::new(0, &[("e", 0), ("h", 0), ("f", 0), ("z", 0)]);
    g.set_bracket("h", "e", &[(int(2), "e")]).expect("basis ids exist");
    g.set_bracket("h", "f", &[(int(-2), "f")]).expect("basis ids exist");
    g.set_bracket("e", "f", &[(int(1), "h")]).expect("basis ids exist");
    let form = BilinearForm::from_entries(
        &g,
        &[("e", "f", int(1)), ("f", "e", int(1)), ("h", "h", int(2)), ("z", "z", int(1))],
    )
    .expect("basis ids exist");
    (g, form)
}
