//! Validated presentations of dg vertex Lie algebras.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Error;
use crate::graded::{Degree, Parity};
use crate::scalar::Scalar;
use crate::vla::element::{shift_dpower, CentralId, GenId, UBasis, UElement};
use crate::vla::file::{
    CentralDecl, FormEntry, GeneratorDecl, PresentationFile, ProductDecl, TermDecl, TranslationKind,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub id: String,
    pub degree: Degree,
    pub weight: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Central {
    pub id: String,
    pub degree: Degree,
}

/// A dg vertex Lie algebra given by generators, centrals, a differential and
/// a table of `n`-products on generator pairs.
///
/// Invariants established by [`validate_presentation`]:
/// every stored product and differential value is homogeneous of the expected
/// degree and weight, no stored value is zero, `d` squares to zero on
/// generators, and generators taking part in products have positive weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VlaPresentation {
    name: String,
    loop_n: i64,
    translation: TranslationKind,
    generators: Vec<Generator>,
    centrals: Vec<Central>,
    differential: Vec<UElement>,
    products: BTreeMap<(GenId, u32, GenId), UElement>,
    support: BTreeMap<(GenId, GenId), u32>,
    form: Option<BTreeMap<(GenId, GenId), Scalar>>,
}

impl VlaPresentation {
    pub fn name(&self) -> &str {
        &self.name
    }

    /// The loop parameter `N`; the formal variable has degree `-2N`.
    pub fn loop_n(&self) -> i64 {
        self.loop_n
    }

    pub fn translation(&self) -> TranslationKind {
        self.translation
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn centrals(&self) -> &[Central] {
        &self.centrals
    }

    pub fn gen_ids(&self) -> impl Iterator<Item = GenId> {
        (0..self.generators.len()).map(GenId)
    }

    pub fn central_ids(&self) -> impl Iterator<Item = CentralId> {
        (0..self.centrals.len()).map(CentralId)
    }

    pub fn generator(&self, g: GenId) -> &Generator {
        &self.generators[g.0]
    }

    pub fn central(&self, c: CentralId) -> &Central {
        &self.centrals[c.0]
    }

    pub fn gen_id(&self, id: &str) -> Option<GenId> {
        self.generators.iter().position(|g| g.id == id).map(GenId)
    }

    pub fn central_id(&self, id: &str) -> Option<CentralId> {
        self.centrals.iter().position(|c| c.id == id).map(CentralId)
    }

    pub fn parity(&self, g: GenId) -> Parity {
        self.generators[g.0].degree.parity()
    }

    /// Stored value of `a_(n) b`, if nonzero.
    pub fn product(&self, a: GenId, n: u32, b: GenId) -> Option<&UElement> {
        self.products.get(&(a, n, b))
    }

    pub fn products(&self) -> impl Iterator<Item = (&(GenId, u32, GenId), &UElement)> {
        self.products.iter()
    }

    /// Largest `n` with `a_(n) b != 0`, or `None` when all products vanish.
    pub fn product_bound(&self, a: GenId, b: GenId) -> Option<u32> {
        self.support.get(&(a, b)).copied()
    }

    /// `d` on a generator.
    pub fn differential_of(&self, g: GenId) -> &UElement {
        &self.differential[g.0]
    }

    pub fn has_differential(&self) -> bool {
        self.differential.iter().any(|d| !d.is_zero())
    }

    pub fn form(&self) -> Option<&BTreeMap<(GenId, GenId), Scalar>> {
        self.form.as_ref()
    }

    /// `|D^k a| = |a| + 2Nk`; a central has its declared degree.
    pub fn basis_degree(&self, b: &UBasis) -> Degree {
        match b {
            UBasis::Gen { gen, dpower } => {
                Degree(self.generators[gen.0].degree.0 + 2 * self.loop_n * *dpower as i64)
            }
            UBasis::Central(c) => self.centrals[c.0].degree,
        }
    }

    /// `weight(D^k a) = Δ_a + k`; centrals have weight zero.
    pub fn basis_weight(&self, b: &UBasis) -> Scalar {
        match b {
            UBasis::Gen { gen, dpower } => &self.generators[gen.0].weight + Scalar::from_int(*dpower as i64),
            UBasis::Central(_) => Scalar::zero(),
        }
    }

    /// Degree of a homogeneous element; `None` for zero or mixed elements.
    pub fn element_degree(&self, u: &UElement) -> Option<Degree> {
        let mut degs = u.keys().map(|b| self.basis_degree(b));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Parity shared by every term, if there is one.
    pub fn element_parity(&self, u: &UElement) -> Option<Parity> {
        let mut ps = u.keys().map(|b| self.basis_degree(b).parity());
        let first = ps.next()?;
        ps.all(|p| p == first).then_some(first)
    }

    /// Drops the terms that vanish when `D` acts as zero.
    pub(crate) fn reduce(&self, u: &UElement) -> UElement {
        match self.translation {
            TranslationKind::Free => u.clone(),
            TranslationKind::Zero => u.partition(|b| b.dpower() == 0).0,
        }
    }

    pub fn fmt_basis(&self, b: &UBasis) -> String {
        match b {
            UBasis::Gen { gen, dpower: 0 } => self.generators[gen.0].id.clone(),
            UBasis::Gen { gen, dpower: 1 } => format!("D{}", self.generators[gen.0].id),
            UBasis::Gen { gen, dpower } => format!("D^{dpower}{}", self.generators[gen.0].id),
            UBasis::Central(c) => self.centrals[c.0].id.clone(),
        }
    }

    /// Human-readable form such as `2*Dω + 1/2*c`.
    pub fn fmt_element(&self, u: &UElement) -> String {
        crate::format::linear_combination(u.iter().map(|(b, c)| (c, self.fmt_basis(b))))
    }

    pub fn parse_element(&self, terms: &[TermDecl]) -> Result<UElement, Error> {
        let mut out = UElement::zero();
        for t in terms {
            let basis = match (&t.gen, &t.central) {
                (Some(g), None) => UBasis::Gen {
                    gen: self.gen_id(g).ok_or_else(|| Error::UnknownId(g.clone()))?,
                    dpower: t.dpower.unwrap_or(0),
                },
                (None, Some(c)) => {
                    if t.dpower.is_some_and(|k| k > 0) {
                        return Err(Error::InvalidPresentation(format!(
                            "central {c:?} carries a D-power, but D kills centrals"
                        )));
                    }
                    UBasis::Central(self.central_id(c).ok_or_else(|| Error::UnknownId(c.clone()))?)
                }
                _ => {
                    return Err(Error::InvalidPresentation(
                        "every term names exactly one of \"gen\" or \"central\"".into(),
                    ))
                }
            };
            out.add_term(t.coeff.clone(), basis);
        }
        Ok(out)
    }

    pub fn element_terms(&self, u: &UElement) -> Vec<TermDecl> {
        u.iter()
            .map(|(b, c)| match b {
                UBasis::Gen { gen, dpower } => TermDecl::gen(c.clone(), *dpower, &self.generators[gen.0].id),
                UBasis::Central(k) => TermDecl::central(c.clone(), &self.centrals[k.0].id),
            })
            .collect()
    }

    /// Canonical file form; `validate_presentation(&p.to_file())` returns `p`.
    pub fn to_file(&self) -> PresentationFile {
        PresentationFile {
            name: self.name.clone(),
            loop_n: self.loop_n,
            translation: self.translation,
            generators: self
                .generators
                .iter()
                .map(|g| GeneratorDecl { id: g.id.clone(), degree: g.degree.0, weight: g.weight.clone() })
                .collect(),
            centrals: self
                .centrals
                .iter()
                .map(|c| CentralDecl { id: c.id.clone(), degree: c.degree.0 })
                .collect(),
            differential: self
                .gen_ids()
                .filter(|g| !self.differential[g.0].is_zero())
                .map(|g| (self.generators[g.0].id.clone(), self.element_terms(&self.differential[g.0])))
                .collect(),
            products: self
                .products
                .iter()
                .map(|((a, n, b), r)| ProductDecl {
                    left: self.generators[a.0].id.clone(),
                    n: *n,
                    right: self.generators[b.0].id.clone(),
                    result: self.element_terms(r),
                })
                .collect(),
            form: self.form.as_ref().map(|f| {
                f.iter()
                    .map(|((a, b), v)| FormEntry {
                        left: self.generators[a.0].id.clone(),
                        right: self.generators[b.0].id.clone(),
                        value: v.clone(),
                    })
                    .collect()
            }),
        }
    }

    /// `d` extended to `U`, commuting with `D` and killing centrals.
    pub fn apply_differential(&self, u: &UElement) -> UElement {
        let u = self.reduce(u);
        u.map_linear(|b| match b {
            UBasis::Gen { gen, dpower } => shift_dpower(&self.differential[gen.0], *dpower),
            UBasis::Central(_) => UElement::zero(),
        })
    }
}

fn check_homogeneous(
    p: &VlaPresentation,
    context: &str,
    u: &UElement,
    degree: Degree,
    weight: &Scalar,
) -> Result<(), Error> {
    for b in u.keys() {
        let d = p.basis_degree(b);
        if d != degree {
            return Err(Error::DegreeMismatch { context: context.to_string(), expected: degree.0, found: d.0 });
        }
        let w = p.basis_weight(b);
        if &w != weight {
            return Err(Error::WeightMismatch { context: context.to_string(), expected: weight.clone(), found: w });
        }
        if p.translation == TranslationKind::Zero && b.dpower() > 0 {
            return Err(Error::InvalidPresentation(format!(
                "{context} uses D, but the presentation declares D = 0"
            )));
        }
    }
    Ok(())
}

/// Checks every structural invariant of a parsed file and builds the
/// presentation.
pub fn validate_presentation(raw: &PresentationFile) -> Result<VlaPresentation, Error> {
    let mut seen = BTreeSet::new();
    for id in raw.generators.iter().map(|g| &g.id).chain(raw.centrals.iter().map(|c| &c.id)) {
        if id.is_empty() {
            return Err(Error::InvalidPresentation("empty id".into()));
        }
        if !seen.insert(id.as_str()) {
            return Err(Error::DuplicateId(id.clone()));
        }
    }

    let mut p = VlaPresentation {
        name: raw.name.clone(),
        loop_n: raw.loop_n,
        translation: raw.translation,
        generators: raw
            .generators
            .iter()
            .map(|g| Generator { id: g.id.clone(), degree: Degree(g.degree), weight: g.weight.clone() })
            .collect(),
        centrals: raw.centrals.iter().map(|c| Central { id: c.id.clone(), degree: Degree(c.degree) }).collect(),
        differential: vec![UElement::zero(); raw.generators.len()],
        products: BTreeMap::new(),
        support: BTreeMap::new(),
        form: None,
    };
    let two_n = 2 * p.loop_n;

    for (id, terms) in &raw.differential {
        let g = p.gen_id(id).ok_or_else(|| Error::UnknownGenerator(id.clone()))?;
        let value = p.parse_element(terms)?;
        let gen = &p.generators[g.0];
        let context = format!("d({id})");
        check_homogeneous(&p, &context, &value, Degree(gen.degree.0 + 1), &gen.weight.clone())?;
        p.differential[g.0] = value;
    }

    let mut in_products = BTreeSet::new();
    for decl in &raw.products {
        let a = p.gen_id(&decl.left).ok_or_else(|| Error::UnknownGenerator(decl.left.clone()))?;
        let b = p.gen_id(&decl.right).ok_or_else(|| Error::UnknownGenerator(decl.right.clone()))?;
        let context = format!("{}_({}){}", decl.left, decl.n, decl.right);
        if p.products.contains_key(&(a, decl.n, b)) {
            return Err(Error::DuplicateId(context));
        }
        let value = p.parse_element(&decl.result)?;
        if value.is_zero() {
            continue;
        }
        in_products.insert(a);
        in_products.insert(b);
        for basis in value.keys() {
            if let UBasis::Gen { gen, .. } = basis {
                in_products.insert(*gen);
            }
        }
        let (ga, gb) = (&p.generators[a.0], &p.generators[b.0]);
        let weight = &ga.weight + &gb.weight - Scalar::from_int(decl.n as i64 + 1);
        let degree = Degree(ga.degree.0 + gb.degree.0 - two_n * (decl.n as i64 + 1));
        if weight.is_negative() && ga.weight.is_positive() && gb.weight.is_positive() {
            return Err(Error::TruncationViolation(context));
        }
        check_homogeneous(&p, &context, &value, degree, &weight)?;
        p.products.insert((a, decl.n, b), value);
    }
    if let Some(g) = in_products.iter().find(|g| !p.generators[g.0].weight.is_positive()) {
        return Err(Error::NonPositiveWeight(p.generators[g.0].id.clone()));
    }
    for (a, n, b) in p.products.keys() {
        let e = p.support.entry((*a, *b)).or_insert(*n);
        *e = (*e).max(*n);
    }

    for g in p.gen_ids() {
        let dd = p.apply_differential(&p.differential[g.0]);
        if !dd.is_zero() {
            return Err(Error::DifferentialNotSquareZero(p.generators[g.0].id.clone()));
        }
    }

    if let Some(entries) = &raw.form {
        let mut form = BTreeMap::new();
        for e in entries {
            let a = p.gen_id(&e.left).ok_or_else(|| Error::UnknownGenerator(e.left.clone()))?;
            let b = p.gen_id(&e.right).ok_or_else(|| Error::UnknownGenerator(e.right.clone()))?;
            if form.contains_key(&(a, b)) {
                return Err(Error::DuplicateId(format!("<{}, {}>", e.left, e.right)));
            }
            if !e.value.is_zero() {
                form.insert((a, b), e.value.clone());
            }
        }
        p.form = Some(form);
    }
    Ok(p)
}

impl TryFrom<&PresentationFile> for VlaPresentation {
    type Error = Error;
    fn try_from(raw: &PresentationFile) -> Result<Self, Error> {
        validate_presentation(raw)
    }
}

impl std::str::FromStr for VlaPresentation {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self, Error> {
        validate_presentation(&PresentationFile::from_json(text)?)
    }
}
