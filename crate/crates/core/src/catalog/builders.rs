//! Presentations of the standard examples.

use crate::catalog::dglie::{BilinearForm, DgLieData, GElement};
use crate::catalog::examples;
use crate::error::Error;
use crate::scalar::Scalar;
use crate::vla::file::{
    CentralDecl, FormEntry, GeneratorDecl, PresentationFile, ProductDecl, TermDecl, TranslationKind,
};
use crate::vla::presentation::{validate_presentation, VlaPresentation};

fn gen(coeff: Scalar, dpower: u32, id: &str) -> TermDecl {
    TermDecl::gen(coeff, dpower, id)
}

fn product(left: &str, n: u32, right: &str, result: Vec<TermDecl>) -> ProductDecl {
    ProductDecl { left: left.into(), n, right: right.into(), result }
}

fn virasoro_products() -> Vec<ProductDecl> {
    vec![
        product("ω", 0, "ω", vec![gen(Scalar::one(), 1, "ω")]),
        product("ω", 1, "ω", vec![gen(Scalar::from_int(2), 0, "ω")]),
        product("ω", 3, "ω", vec![TermDecl::central(Scalar::frac(1, 2), "c")]),
    ]
}

/// `ω` of degree `4N` and weight 2, central `c`, with
/// `ω_(0)ω = Dω`, `ω_(1)ω = 2ω`, `ω_(3)ω = c/2`.
pub fn build_virasoro(loop_n: i64) -> VlaPresentation {
    let file = PresentationFile {
        name: "virasoro".into(),
        loop_n,
        translation: TranslationKind::Free,
        generators: vec![GeneratorDecl { id: "ω".into(), degree: 4 * loop_n, weight: Scalar::from_int(2) }],
        centrals: vec![CentralDecl { id: "c".into(), degree: 0 }],
        differential: Default::default(),
        products: virasoro_products(),
        form: None,
    };
    validate_presentation(&file).expect("the Virasoro table is homogeneous")
}

/// Virasoro plus `τ` of degree `3N` and weight 3/2.
///
/// The zeroth product `τ_(0)τ = 2ω` is skew-symmetric only when `τ` is odd,
/// so the result is a vertex Lie algebra exactly when `N` is odd.
pub fn build_neveu_schwarz(loop_n: i64) -> VlaPresentation {
    let half = Scalar::frac(1, 2);
    let three_halves = Scalar::frac(3, 2);
    let mut products = virasoro_products();
    products.extend([
        product("ω", 0, "τ", vec![gen(Scalar::one(), 1, "τ")]),
        product("ω", 1, "τ", vec![gen(three_halves.clone(), 0, "τ")]),
        product("τ", 0, "ω", vec![gen(half, 1, "τ")]),
        product("τ", 1, "ω", vec![gen(three_halves, 0, "τ")]),
        product("τ", 0, "τ", vec![gen(Scalar::from_int(2), 0, "ω")]),
        product("τ", 2, "τ", vec![TermDecl::central(Scalar::frac(2, 3), "c")]),
    ]);
    let file = PresentationFile {
        name: "neveu-schwarz".into(),
        loop_n,
        translation: TranslationKind::Free,
        generators: vec![
            GeneratorDecl { id: "ω".into(), degree: 4 * loop_n, weight: Scalar::from_int(2) },
            GeneratorDecl { id: "τ".into(), degree: 3 * loop_n, weight: Scalar::frac(3, 2) },
        ],
        centrals: vec![CentralDecl { id: "c".into(), degree: 0 }],
        differential: Default::default(),
        products,
        form: None,
    };
    validate_presentation(&file).expect("the Neveu-Schwarz table is homogeneous")
}

/// Affine presentation with central `K`: `a_(0)b = [a,b]`, `a_(1)b = <a,b>K`.
pub fn build_affine(g: &DgLieData, form: &BilinearForm) -> Result<VlaPresentation, Error> {
    build_affine_named(g, form, "affine", "K")
}

/// [`build_affine`] with a chosen presentation name and central id.
pub fn build_affine_named(
    g: &DgLieData,
    form: &BilinearForm,
    name: &str,
    central: &str,
) -> Result<VlaPresentation, Error> {
    g.validate()?;
    form.validate(g)?;
    let id = |i: usize| g.basis[i].0.clone();
    let terms = |x: &GElement| -> Vec<TermDecl> { x.iter().map(|(i, c)| gen(c.clone(), 0, &g.basis[*i].0)).collect() };
    let mut products = Vec::new();
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            let br = g.bracket_basis(i, j);
            if !br.is_zero() {
                products.push(product(&id(i), 0, &id(j), terms(&br)));
            }
            let f = form.get(i, j);
            if !f.is_zero() {
                products.push(product(&id(i), 1, &id(j), vec![TermDecl::central(f, central)]));
            }
        }
    }
    let file = PresentationFile {
        name: name.into(),
        loop_n: g.loop_n,
        translation: TranslationKind::Free,
        generators: g
            .basis
            .iter()
            .map(|(id, d)| GeneratorDecl { id: id.clone(), degree: d.0, weight: Scalar::one() })
            .collect(),
        centrals: vec![CentralDecl { id: central.into(), degree: 0 }],
        differential: g
            .differential
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (id(*i), terms(v)))
            .collect(),
        products,
        form: Some(
            form.entries
                .iter()
                .map(|((i, j), v)| FormEntry { left: id(*i), right: id(*j), value: v.clone() })
                .collect(),
        ),
    };
    validate_presentation(&file)
}

/// Recovers the dg Lie algebra and form underlying an affine presentation:
/// the bracket is the zeroth product and the form is read off the first
/// product's coefficient of the single central.
pub fn affine_data(p: &VlaPresentation) -> Result<(DgLieData, BilinearForm), Error> {
    use crate::vla::element::{gen_element, UBasis};
    if p.centrals().len() != 1 {
        return Err(Error::InvalidPresentation("an affine presentation has exactly one central".into()));
    }
    let basis: Vec<(&str, i64)> = p.generators().iter().map(|g| (g.id.as_str(), g.degree.0)).collect();
    let mut g = DgLieData::new(p.loop_n(), &basis);
    let mut form = BilinearForm::zero();
    for a in p.gen_ids() {
        for b in p.gen_ids() {
            let (ea, eb) = (gen_element(a), gen_element(b));
            let mut br = GElement::zero();
            for (basis, c) in &p.nth_product(&ea, 0, &eb) {
                match basis {
                    UBasis::Gen { gen, dpower: 0 } => br.add_term(c.clone(), gen.0),
                    _ => return Err(Error::InvalidPresentation("zeroth products must lie in g".into())),
                }
            }
            if !br.is_zero() {
                g.bracket.insert((a.0, b.0), br);
            }
            let first = p.nth_product(&ea, 1, &eb);
            for (basis, c) in &first {
                match basis {
                    UBasis::Central(_) => {
                        form.entries.insert((a.0, b.0), c.clone());
                    }
                    _ => return Err(Error::InvalidPresentation("first products must be central".into())),
                }
            }
            if p.product_bound(a, b).is_some_and(|n| n > 1) {
                return Err(Error::InvalidPresentation("affine products vanish above n = 1".into()));
            }
        }
        let mut d = GElement::zero();
        for (basis, c) in p.differential_of(a) {
            match basis {
                UBasis::Gen { gen, dpower: 0 } => d.add_term(c.clone(), gen.0),
                _ => return Err(Error::InvalidPresentation("the differential must preserve g".into())),
            }
        }
        if !d.is_zero() {
            g.differential.insert(a.0, d);
        }
    }
    g.validate()?;
    form.validate(&g)?;
    Ok((g, form))
}

/// Names accepted by [`catalog_presentation`].
pub const CATALOG_NAMES: &[&str] = &[
    "virasoro",
    "neveu-schwarz",
    "affine-sl2",
    "heisenberg",
    "acyclic-pair",
    "dg-heisenberg",
];

/// Catalog entry by name; `ns` and `sl2` are accepted as aliases.
pub fn catalog_presentation(name: &str) -> Option<VlaPresentation> {
    let named = |g: &DgLieData, f: &BilinearForm, n: &str, k: &str| build_affine_named(g, f, n, k).expect("catalog data is valid");
    Some(match name {
        "virasoro" => build_virasoro(1),
        "neveu-schwarz" | "ns" => build_neveu_schwarz(1),
        "affine-sl2" | "sl2" => {
            let g = examples::sl2();
            named(&g, &examples::sl2_form(&g), "affine-sl2", "K")
        }
        "heisenberg" => {
            let g = examples::abelian_rank_one();
            named(&g, &examples::unit_form(&g), "heisenberg", "k")
        }
        "acyclic-pair" => named(&examples::acyclic_pair(), &BilinearForm::zero(), "acyclic-pair", "K"),
        "dg-heisenberg" => {
            let g = examples::acyclic_pair();
            named(&g, &examples::unit_form(&g), "dg-heisenberg", "K")
        }
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::examples::{sl2, sl2_form};
    use crate::error::FormCondition;
    use crate::graded::Degree;

    #[test]
    fn virasoro_degrees() {
        let p = build_virasoro(1);
        assert_eq!(p.generators()[0].degree, Degree(4));
        assert!(build_virasoro(0).generators().iter().all(|g| g.degree == Degree(0)));
        let w = p.gen_id("ω").unwrap();
        assert_eq!(p.product(w, 3, w).map(|u| p.fmt_element(u)), Some("1/2*c".to_string()));
    }

    #[test]
    fn neveu_schwarz_table() {
        let p = build_neveu_schwarz(1);
        let (w, t) = (p.gen_id("ω").unwrap(), p.gen_id("τ").unwrap());
        assert_eq!(p.fmt_element(p.product(t, 2, t).unwrap()), "2/3*c");
        assert_eq!(p.fmt_element(p.product(t, 0, w).unwrap()), "1/2*Dτ");
    }

    #[test]
    fn catalog_round_trips() {
        for name in CATALOG_NAMES {
            let p = catalog_presentation(name).unwrap();
            let text = p.to_file().to_json();
            let back: VlaPresentation = text.parse().unwrap();
            assert_eq!(back, p, "{name}");
            assert_eq!(back.to_file().to_json(), text, "{name}");
        }
    }

    #[test]
    fn catalog_entries_pass_the_axiom_checks() {
        for name in CATALOG_NAMES {
            let r = crate::loop_algebra::check_dg_lie(&catalog_presentation(name).unwrap(), (-5, 5));
            assert!(r.passed(), "{}", r.to_human());
        }
    }

    #[test]
    fn affine_data_recovers_input() {
        let g = sl2();
        let form = sl2_form(&g);
        let (g2, f2) = affine_data(&build_affine(&g, &form).unwrap()).unwrap();
        assert_eq!(g2, g);
        assert_eq!(f2, form);
    }

    #[test]
    fn support_violation_is_reported() {
        let g = DgLieData::new(0, &[("a", 0), ("b", 1)]);
        let form = BilinearForm::from_entries(&g, &[("a", "b", Scalar::one())]).unwrap();
        assert!(matches!(
            build_affine(&g, &form),
            Err(Error::FormInvariantViolation { condition: FormCondition::DegreeSupport, .. })
        ));
    }
}
