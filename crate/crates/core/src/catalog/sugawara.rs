//! Casimir, dual bases and the Sugawara conformal vector of an affine envelope.

use crate::catalog::builders::affine_data;
use crate::catalog::dglie::{BilinearForm, DgLieData, GElement};
use crate::envelope::{EnvelopeContext, VVector};
use crate::error::Error;
use crate::graded::Degree;
use crate::report::{AxiomReport, CheckResult};
use crate::scalar::Scalar;
use crate::vla::element::{gen_element, GenId, UElement};

/// `basis[i]` is the `i`-th basis vector of `g`; `dual[i]` satisfies
/// `<dual[i], basis[j]> = δ_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBases {
    pub basis: Vec<GElement>,
    pub dual: Vec<GElement>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sugawara {
    pub omega: VVector,
    pub central_charge: Scalar,
    pub h_dual: Scalar,
    pub level: Scalar,
}

pub fn sdim(g: &DgLieData) -> i64 {
    g.sdim()
}

fn invert(mut a: Vec<Vec<Scalar>>) -> Option<Vec<Vec<Scalar>>> {
    let n = a.len();
    let mut inv: Vec<Vec<Scalar>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect()).collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        inv.swap(c, p);
        let r = a[c][c].recip()?;
        for j in 0..n {
            a[c][j] = &a[c][j] * &r;
            inv[c][j] = &inv[c][j] * &r;
        }
        for i in (0..n).filter(|&i| i != c) {
            let f = a[i][c].clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..n {
                let (t, u) = (&f * &a[c][j], &f * &inv[c][j]);
                a[i][j] -= &t;
                inv[i][j] -= &u;
            }
        }
    }
    Some(inv)
}

/// Dual bases for `form` and the scalar by which `Ω = Σ a_i b^i` acts on
/// `g` through the adjoint action, which is `2h∨`.
pub fn casimir_h_dual(g: &DgLieData, form: &BilinearForm) -> Result<(DualBases, Scalar), Error> {
    let n = g.dim();
    // <b^i, a_j> = Σ_k M_ik G_kj = δ_ij, so M = G^{-1}
    let m = invert(form.matrix(n)).ok_or(Error::Degenerate)?;
    let basis: Vec<GElement> = (0..n).map(GElement::basis).collect();
    let dual: Vec<GElement> = m
        .iter()
        .map(|row| row.iter().enumerate().map(|(k, c)| (c.clone(), k)).collect())
        .collect();
    let mut scalar: Option<Scalar> = None;
    for x in 0..n {
        let ex = GElement::basis(x);
        let mut omega_x = GElement::zero();
        for (a, b) in basis.iter().zip(&dual) {
            omega_x = omega_x + g.bracket(a, &g.bracket(b, &ex));
        }
        let lambda = omega_x.coeff(&x);
        if omega_x != ex.scaled(&lambda) || scalar.as_ref().is_some_and(|s| *s != lambda) {
            return Err(Error::NotScalar);
        }
        scalar = Some(lambda);
    }
    Ok((DualBases { basis, dual }, scalar.unwrap_or_default()))
}

fn to_u(x: &GElement) -> UElement {
    let mut out = UElement::zero();
    for (i, c) in x {
        out.add_scaled(c, &gen_element(GenId(*i)));
    }
    out
}

/// `ω = (1 / 2(k + h∨)) Σ_i a_{i,-1} b^i_{-1} 1` with central charge
/// `k sdim g / (k + h∨)`. The level `k` must match the one in `ctx`.
pub fn sugawara(ctx: &EnvelopeContext, k: &Scalar) -> Result<Sugawara, Error> {
    let p = ctx.presentation();
    let (g, form) = affine_data(p)?;
    let central = p.central_ids().next().expect("affine presentations have one central");
    if ctx.level(central) != k {
        return Err(Error::InvalidLevel(format!(
            "the context fixes {} = {}, not {k}",
            p.central(central).id,
            ctx.level(central)
        )));
    }
    let (bases, two_h) = casimir_h_dual(&g, &form)?;
    let h_dual = &two_h * &Scalar::frac(1, 2);
    let shifted = k + &h_dual;
    if shifted.is_zero() {
        return Err(Error::CriticalLevel(k.clone()));
    }
    let mut sum = VVector::zero();
    for (a, b) in bases.basis.iter().zip(&bases.dual) {
        let vb = ctx.state(&to_u(b))?;
        for (i, c) in a {
            sum.add_scaled(c, &ctx.mode_apply(GenId(*i), -1, &vb)?);
        }
    }
    let norm = (&Scalar::from_int(2) * &shifted).recip().expect("nonzero");
    let omega = sum.scaled(&norm);
    let expected = Degree(4 * p.loop_n());
    assert!(
        omega.keys().all(|m| ctx.monomial_degree(m) == expected),
        "the conformal vector must have degree 4N"
    );
    let central_charge = &(k * &Scalar::from_int(g.sdim())) / &shifted;
    Ok(Sugawara { omega, central_charge, h_dual, level: k.clone() })
}

/// Checks that `L(n) = ω_{n+1}` satisfies the Virasoro relations for `m, n`
/// in `window` on every PBW basis vector of weight at most `basis_cap`, and
/// that `L(-1) = D` and `L(0)` is the weight operator there.
///
/// The central charge is read off from `ω_3 ω = (c/2) 1`. `d(ω)` is recorded
/// as a note without judgment. `ctx` needs weight headroom above
/// `basis_cap`: about `2 max|window| + 2`.
pub fn verify_virasoro_action(
    omega: &VVector,
    ctx: &EnvelopeContext,
    window: (i64, i64),
    basis_cap: &Scalar,
) -> AxiomReport {
    let mut report = AxiomReport::new(ctx.presentation().name(), "verified on PBW basis vectors", Some(window));
    let basis: Vec<VVector> = ctx.basis_up_to(basis_cap).into_iter().map(VVector::basis).collect();
    let show = |r: Result<VVector, Error>| -> Option<String> {
        match r {
            Ok(v) if v.is_zero() => None,
            Ok(v) => Some(ctx.fmt_vector(&v)),
            Err(e) => Some(format!("error: {e}")),
        }
    };
    let l = |n: i64, v: &VVector| ctx.vertex_mode(omega, n + 1, v);

    let mut central = CheckResult::new("ω_3 ω is central");
    let c = match ctx.vertex_mode(omega, 3, omega) {
        Ok(v) => {
            let vac = crate::envelope::vacuum();
            let half_c = v.coeff(&crate::envelope::PbwMonomial::vacuum());
            central.record(|| "ω_3 ω".into(), show(Ok(v - vac.scaled(&half_c))));
            &half_c * &Scalar::from_int(2)
        }
        Err(e) => {
            central.record(|| "ω_3 ω".into(), Some(format!("error: {e}")));
            Scalar::zero()
        }
    };
    report.notes.push(format!("central charge c = {c}"));

    let mut vir = CheckResult::new("Virasoro relations");
    let mut transl = CheckResult::new("L(-1) = D");
    let mut grading = CheckResult::new("L(0) = weight");
    let (lo, hi) = window;
    for v in &basis {
        let at = || ctx.fmt_vector(v);
        for m in lo..=hi {
            for n in lo..=hi {
                let defect = (|| {
                    let mut d = l(m, &l(n, v)?)? - l(n, &l(m, v)?)? - l(m + n, v)?.scaled(&Scalar::from_int(m - n));
                    if m + n == 0 {
                        d = d - v.scaled(&(&c * &Scalar::frac(m * m * m - m, 12)));
                    }
                    Ok(d)
                })();
                vir.record(|| format!("m={m}, n={n} on {}", at()), show(defect));
            }
        }
        transl.record(at, show(ctx.translate(v).and_then(|dv| Ok(l(-1, v)? - dv))));
        let w = ctx.vector_weight(v).unwrap_or_default();
        grading.record(at, show(l(0, v).map(|x| x - v.scaled(&w))));
    }
    match ctx.differential(omega) {
        Ok(d) => report.notes.push(format!("d(ω) = {}", ctx.fmt_vector(&d))),
        Err(e) => report.notes.push(format!("d(ω) not computed: {e}")),
    }
    report.checks = vec![central, vir, transl, grading];
    report
}
