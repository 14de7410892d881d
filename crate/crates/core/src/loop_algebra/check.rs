//! The dg Lie axiom checker for `L(U)`.

use crate::graded::sign;
use crate::loop_algebra::{
    fmt_lelement, fmt_mode, loop_differential, loop_translation, mode_normal_form, mode_parity, Bracketer,
    LElement, Mode,
};
use crate::report::{AxiomReport, CheckResult};
use crate::vla::element::{UBasis, UElement};
use crate::vla::presentation::VlaPresentation;

/// Nonzero modes of `L(U)` with index in `[lo, hi]`, in canonical order.
fn window_modes(p: &VlaPresentation, lo: i64, hi: i64) -> Vec<Mode> {
    let mut modes = Vec::new();
    for gen in p.gen_ids() {
        for n in lo..=hi {
            if !mode_normal_form(p, &UElement::basis(UBasis::gen(gen)), n).is_zero() {
                modes.push(Mode::Gen { gen, n });
            }
        }
    }
    if lo <= -1 && -1 <= hi {
        modes.extend(p.central_ids().map(Mode::Central));
    }
    modes
}

/// Verifies that `L(U)` is a dg Lie algebra on all modes in `window`, together
/// with the generator-level identities of `U` that the mode identities rest
/// on.
///
/// Mode checks: antisymmetry, Jacobi, `d` and `D` as derivations of the
/// bracket. Generator checks: half skew-symmetry, the Leibniz rule of `d` for
/// `n`-products, and sesquilinearity of the translation operator.
pub fn check_dg_lie(p: &VlaPresentation, window: (i64, i64)) -> AxiomReport {
    let (lo, hi) = window;
    let mut report = AxiomReport::new(p.name(), "verified on generators", Some(window));
    let modes = window_modes(p, lo, hi);
    let br = Bracketer::new(p);
    let basis = |m: &Mode| LElement::basis(*m);
    let show = |x: &LElement| fmt_lelement(p, x);
    let nonzero = |x: LElement| (!x.is_zero()).then(|| show(&x));

    let mut anti = CheckResult::new("antisymmetry");
    let mut jacobi = CheckResult::new("jacobi");
    let mut leibniz = CheckResult::new("d-derivation");
    let mut transl = CheckResult::new("D-derivation");
    for x in &modes {
        let (ex, px) = (basis(x), mode_parity(p, x));
        let dx = loop_differential(p, &ex);
        let tx = loop_translation(p, &ex);
        for y in &modes {
            let (ey, py) = (basis(y), mode_parity(p, y));
            let s = sign(px.swap_negates(py));
            let xy = br.bracket(&ex, &ey);
            let at = || format!("({}, {})", fmt_mode(p, x), fmt_mode(p, y));

            anti.record(at, nonzero(&xy + &br.bracket(&ey, &ex).scaled(&s)));

            let d_defect = loop_differential(p, &xy)
                - br.bracket(&dx, &ey)
                - br.bracket(&ex, &loop_differential(p, &ey)).scaled(&sign(px.negates()));
            leibniz.record(at, nonzero(d_defect));

            let t_defect =
                loop_translation(p, &xy) - br.bracket(&tx, &ey) - br.bracket(&ex, &loop_translation(p, &ey));
            transl.record(at, nonzero(t_defect));

            for z in &modes {
                let ez = basis(z);
                let lhs = br.bracket(&ex, &br.bracket(&ey, &ez));
                let rhs = br.bracket(&xy, &ez) + br.bracket(&ey, &br.bracket(&ex, &ez)).scaled(&s);
                jacobi.record(
                    || format!("({}, {}, {})", fmt_mode(p, x), fmt_mode(p, y), fmt_mode(p, z)),
                    nonzero(lhs - rhs),
                );
            }
        }
    }

    let mut skew = CheckResult::new("half skew-symmetry");
    let mut u_leibniz = CheckResult::new("Leibniz rule in U");
    let mut sesqui = CheckResult::new("sesquilinearity");
    for a in p.gen_ids() {
        for b in p.gen_ids() {
            let (na, nb) = (&p.generator(a).id, &p.generator(b).id);
            let tables = [
                (&mut skew, p.half_skew_defect(a, b)),
                (&mut u_leibniz, p.leibniz_defect(a, b)),
                (&mut sesqui, p.sesquilinearity_defect(a, b)),
            ];
            for (check, defects) in tables {
                let value = (!defects.is_empty()).then(|| {
                    let parts: Vec<String> =
                        defects.iter().map(|(n, d)| format!("n={n}: {}", p.fmt_element(d))).collect();
                    parts.join("; ")
                });
                check.record(|| format!("({na}, {nb})"), value);
            }
        }
    }

    report.checks = vec![anti, jacobi, leibniz, transl, skew, u_leibniz, sesqui];
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_neveu_schwarz, build_virasoro};

    #[test]
    fn virasoro_passes() {
        let r = check_dg_lie(&build_virasoro(1), (-5, 5));
        assert!(r.passed(), "{}", r.to_human());
        assert_eq!(r.window, Some((-5, 5)));
    }

    #[test]
    fn neveu_schwarz_parity() {
        let r = check_dg_lie(&build_neveu_schwarz(1), (-4, 4));
        assert!(r.passed(), "{}", r.to_human());
        let r = check_dg_lie(&build_neveu_schwarz(2), (-2, 2));
        assert!(!r.passed());
        assert!(!r.check("half skew-symmetry").unwrap().passed());
    }
}
