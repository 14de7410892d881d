//! Even dg Lie algebras viewed as vertex Lie algebras with `D = 0`.

use crate::catalog::dglie::DgLieData;
use crate::error::Error;
use crate::scalar::Scalar;
use crate::vla::file::{GeneratorDecl, PresentationFile, ProductDecl, TermDecl, TranslationKind};
use crate::vla::presentation::{validate_presentation, VlaPresentation};

/// `a_(0) b = [a, b]`, all higher products zero, `D = 0`.
///
/// Every generator gets weight 1, which makes the zeroth product weight
/// homogeneous.
///
/// The translation axiom `(Da)_(n) b = -n a_(n-1) b` at `n = 1` reads
/// `0 = -[a, b]` when `D = 0`, so the result satisfies every vertex Lie
/// axiom except sesquilinearity exactly when `g` is abelian. The axiom
/// checker reports the failure instead of this builder rejecting the input.
pub fn build_vla_from_even_dglie(g: &DgLieData) -> Result<VlaPresentation, Error> {
    if let Some((id, _)) = g.basis.iter().find(|(_, d)| d.is_odd()) {
        return Err(Error::OddGenerator(id.clone()));
    }
    g.validate()?;
    let terms = |x: &crate::catalog::dglie::GElement| -> Vec<TermDecl> {
        x.iter().map(|(i, c)| TermDecl::gen(c.clone(), 0, &g.basis[*i].0)).collect()
    };
    let file = PresentationFile {
        name: "vla".into(),
        loop_n: g.loop_n,
        translation: TranslationKind::Zero,
        generators: g
            .basis
            .iter()
            .map(|(id, d)| GeneratorDecl { id: id.clone(), degree: d.0, weight: Scalar::one() })
            .collect(),
        centrals: vec![],
        differential: g
            .differential
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (g.basis[*i].0.clone(), terms(v)))
            .collect(),
        products: g
            .bracket
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|((i, j), v)| ProductDecl {
                left: g.basis[*i].0.clone(),
                n: 0,
                right: g.basis[*j].0.clone(),
                result: terms(v),
            })
            .collect(),
        form: None,
    };
    validate_presentation(&file)
}
