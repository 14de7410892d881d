//! Acceptance suite: one line per criterion, exit status 1 if any fails.
//!
//! Every criterion is checked at exact rational equality and within its
//! runtime budget.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{basis_vectors, catalog, context, gen, int, mutate_product, partitions};
use dgva::catalog::examples::{sl2, sl2_form};
use dgva::catalog::{build_affine, sugawara, verify_virasoro_action};
use dgva::envelope::{euler_characteristic, vacuum, EnvelopeContext, VVector};
use dgva::loop_algebra::{check_dg_lie, fmt_lelement, iota, iota_inverse, loop_bracket, LElement, Mode};
use dgva::vla::{gen_element, TermDecl, UBasis, UElement, VlaPresentation};
use dgva::{Error, Scalar};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn mode(gen: dgva::vla::GenId, n: i64) -> LElement {
    LElement::basis(Mode::Gen { gen, n })
}

fn central(p: &VlaPresentation, id: &str) -> Mode {
    Mode::Central(p.central_id(id).expect("central exists"))
}

fn term(c: Scalar, m: Mode) -> LElement {
    LElement::term(c, m)
}

fn criterion_1() -> Outcome {
    let p = catalog("virasoro");
    let w = gen(&p, "ω");
    let c = central(&p, "c");
    let mut cells = 0;
    for m in -6..=6 {
        for n in -6..=6 {
            let mut expected = term(int(m - n), Mode::Gen { gen: w, n: m + n - 1 });
            if m + n == 2 {
                expected = expected + term(Scalar::frac(m * (m - 1) * (m - 2), 12), c);
            }
            let got = loop_bracket(&p, &mode(w, m), &mode(w, n));
            ensure(got == expected, || {
                format!("[ω_{m}, ω_{n}] = {} but expected {}", fmt_lelement(&p, &got), fmt_lelement(&p, &expected))
            })?;
            cells += 1;
        }
    }
    Ok(format!("{cells} brackets"))
}

fn criterion_2() -> Outcome {
    let p = catalog("neveu-schwarz");
    let (w, t) = (gen(&p, "ω"), gen(&p, "τ"));
    let c = central(&p, "c");
    // L_m = ω_{m+1}, G_m = τ_{m+1}
    let l = |m: i64| mode(w, m + 1);
    let g = |m: i64| mode(t, m + 1);
    let lt = |m: i64| Mode::Gen { gen: w, n: m + 1 };
    let gt = |m: i64| Mode::Gen { gen: t, n: m + 1 };
    let mut cells = 0;
    let check = |what: String, got: LElement, expected: LElement| {
        ensure(got == expected, || {
            format!("{what} = {} but expected {}", fmt_lelement(&p, &got), fmt_lelement(&p, &expected))
        })
    };
    for m in -4..=4 {
        for n in -4..=4 {
            let mut ll = term(int(m - n), lt(m + n));
            if m + n == 0 {
                ll = ll + term(Scalar::frac(m * m * m - m, 12), c);
            }
            check(format!("[L_{m}, L_{n}]"), loop_bracket(&p, &l(m), &l(n)), ll)?;

            let gl = term(int(m) + Scalar::frac(1 - n, 2), gt(m + n));
            check(format!("[G_{m}, L_{n}]"), loop_bracket(&p, &g(m), &l(n)), gl.clone())?;
            check(format!("[L_{n}, G_{m}]"), loop_bracket(&p, &l(n), &g(m)), -gl)?;

            let mut gg = term(int(2), lt(m + n + 1));
            if m + n + 1 == 0 {
                gg = gg + term(Scalar::frac(m * (m + 1), 3), c);
            }
            check(format!("[G_{m}, G_{n}]"), loop_bracket(&p, &g(m), &g(n)), gg)?;
            cells += 4;
        }
    }
    Ok(format!("{cells} brackets"))
}

fn criterion_3() -> Outcome {
    let window = (-5, 5);
    let mut passed = Vec::new();
    for name in ["virasoro", "neveu-schwarz", "affine-sl2", "heisenberg", "dg-heisenberg"] {
        let p = catalog(name);
        if name == "dg-heisenberg" {
            ensure(p.has_differential(), || "dg-heisenberg must carry a nonzero differential".into())?;
        }
        let r = check_dg_lie(&p, window);
        ensure(r.passed(), || format!("{name} failed:\n{}", r.to_human()))?;
        passed.push(name);
    }

    let vir = catalog("virasoro");
    let sl = catalog("affine-sl2");
    let mutants = [
        mutate_product(&vir, "ω", 1, "ω", vec![TermDecl::gen(int(3), 0, "ω")]),
        mutate_product(&sl, "h", 0, "e", vec![TermDecl::gen(int(3), 0, "e")]),
    ];
    let mut localized = Vec::new();
    for m in &mutants {
        let r = check_dg_lie(m, window);
        ensure(!r.passed(), || format!("mutant {} passed the axiom checks", m.name()))?;
        let failing = r.checks.iter().find(|c| !c.passed()).expect("a failing check");
        let d = failing.defects.first().expect("a recorded defect");
        ensure(!d.location.is_empty() && d.value != "0", || "defect without location".into())?;
        localized.push(format!("{}: {} at {}", m.name(), failing.name, d.location));
    }
    Ok(format!("{} pass; mutants fail ({})", passed.join(", "), localized.join("; ")))
}

fn criterion_4() -> Outcome {
    let oracle_vir: Vec<usize> = (0..=10).map(|w| partitions(w, 2)).collect();
    ensure(oracle_vir == vec![1, 0, 1, 1, 2, 2, 4, 4, 7, 8, 12], || format!("partition oracle gave {oracle_vir:?}"))?;
    let oracle_heis: Vec<usize> = (0..=8).map(|w| partitions(w, 1)).collect();

    let ctx = context("virasoro", &[("c", Scalar::frac(1, 2))], 10);
    let vir: Vec<usize> = ctx.character().iter().map(|e| e.total()).collect();
    ensure(vir == oracle_vir, || format!("Virasoro character {vir:?} != {oracle_vir:?}"))?;

    let ctx = context("heisenberg", &[("k", int(1))], 8);
    let heis: Vec<usize> = ctx.character().iter().map(|e| e.total()).collect();
    ensure(heis == oracle_heis, || format!("Heisenberg character {heis:?} != {oracle_heis:?}"))?;
    Ok(format!("Virasoro {vir:?}, Heisenberg {heis:?}"))
}

fn criterion_5() -> Outcome {
    let g = sl2();
    let p = build_affine(&g, &sl2_form(&g)).map_err(|e| e.to_string())?;
    let ctx = EnvelopeContext::with_levels(p, &[("K", int(1))], int(10)).map_err(|e| e.to_string())?;
    let s = sugawara(&ctx, &int(1)).map_err(|e| e.to_string())?;
    // k sdim g / (k + h∨) with sdim = 3, h∨ = 2
    let expected = &(int(1) * int(3)) / &(int(1) + int(2));
    ensure(s.central_charge == expected, || format!("c = {} != {expected}", s.central_charge))?;
    ensure(s.h_dual == int(2), || format!("h∨ = {}", s.h_dual))?;
    let r = verify_virasoro_action(&s.omega, &ctx, (-3, 3), &int(4));
    ensure(r.passed(), || r.to_human())?;
    for name in ["Virasoro relations", "L(-1) = D", "L(0) = weight"] {
        ensure(r.check(name).is_some_and(|c| c.cells > 0 && c.passed()), || format!("check {name} missing"))?;
    }
    ensure(r.notes.iter().any(|n| n == "central charge c = 1"), || format!("notes {:?}", r.notes))?;
    let cells: usize = r.checks.iter().map(|c| c.cells).sum();
    Ok(format!("c = {}, {cells} cells", s.central_charge))
}

fn criterion_6() -> Outcome {
    let ctx = context("virasoro", &[("c", Scalar::frac(1, 2))], 10);
    let w = ctx.generator_state(gen(ctx.presentation(), "ω")).map_err(|e| e.to_string())?;
    let probes = basis_vectors(&ctx, 6);
    let k = ctx.locality_order(&w, &w, &probes, 8).map_err(|e| e.to_string())?;
    ensure(k == 4, || format!("Virasoro (ω, ω) locality {k}"))?;

    let ctx = context("heisenberg", &[("k", int(1))], 10);
    let a = ctx.generator_state(gen(ctx.presentation(), "a")).map_err(|e| e.to_string())?;
    let probes = basis_vectors(&ctx, 6);
    let k2 = ctx.locality_order(&a, &a, &probes, 8).map_err(|e| e.to_string())?;
    ensure(k2 == 2, || format!("Heisenberg (a, a) locality {k2}"))?;
    Ok(format!("(ω, ω) -> {k}, (a, a) -> {k2}"))
}

fn criterion_7() -> Outcome {
    let ctx = context("acyclic-pair", &[("K", int(0))], 8);
    let err = |e: Error| e.to_string();
    let six = basis_vectors(&ctx, 6);
    for v in &six {
        let dd = ctx.differential(&ctx.differential(v).map_err(err)?).map_err(err)?;
        ensure(dd.is_zero(), || format!("d^2 ({}) = {}", ctx.fmt_vector(v), ctx.fmt_vector(&dd)))?;
    }
    ensure(
        ctx.basis_up_to(&int(6)).iter().any(|m| !ctx.differential(&VVector::basis(m.clone())).unwrap().is_zero()),
        || "the differential vanishes on the basis".into(),
    )?;

    let small = basis_vectors(&ctx, 3);
    let mut rng = StdRng::seed_from_u64(7);
    let mut sampled = 0;
    while sampled < 50 {
        let u = &small[rng.gen_range(0..small.len())];
        let v = &small[rng.gen_range(0..small.len())];
        if u.is_zero() || ctx.differential(u).map_err(err)?.is_zero() && ctx.differential(v).map_err(err)?.is_zero() {
            continue;
        }
        let m = rng.gen_range(-2..=2);
        let s = if ctx.vector_degree(u).unwrap().is_odd() { int(-1) } else { int(1) };
        let lhs = ctx.differential(&ctx.vertex_mode(u, m, v).map_err(err)?).map_err(err)?;
        let rhs = ctx.vertex_mode(&ctx.differential(u).map_err(err)?, m, v).map_err(err)?
            + ctx.vertex_mode(u, m, &ctx.differential(v).map_err(err)?).map_err(err)?.scaled(&s);
        ensure(lhs == rhs, || {
            format!("chain map fails on ({}, {m}, {})", ctx.fmt_vector(u), ctx.fmt_vector(v))
        })?;
        sampled += 1;
    }

    let ctx4 = context("acyclic-pair", &[("K", int(0))], 4);
    let h = ctx4.cohomology_dims().map_err(err)?;
    let chi = euler_characteristic(&h);
    let mut per_weight = Vec::new();
    for entry in ctx4.character() {
        let dim_h: usize = h.iter().filter(|e| e.weight == entry.weight).map(|e| e.dim).sum();
        per_weight.push(dim_h);
        let x = chi.get(&entry.weight).copied().unwrap_or(0);
        ensure(x == entry.euler(), || format!("Euler characteristic at weight {}: {x} vs {}", entry.weight, entry.euler()))?;
    }
    ensure(per_weight == vec![1, 0, 0, 0, 0], || format!("dim H per weight {per_weight:?}"))?;
    Ok(format!("d^2 = 0 on {} vectors, 50 chain-map triples, dim H = {per_weight:?}", six.len()))
}

fn structural(name: &str, levels: &[(&str, Scalar)]) -> Result<usize, String> {
    let err = |e: Error| e.to_string();
    let ctx = context(name, levels, 6);
    let p = ctx.presentation();
    let basis = basis_vectors(&ctx, 6);
    let weight = |v: &VVector| ctx.vector_weight(v).unwrap_or_default();
    let show = |v: &VVector| ctx.fmt_vector(v);
    let mut cells = 0;

    for u in &basis {
        for v in &basis {
            if weight(u) + weight(v) > int(6) {
                continue;
            }
            let defect = ctx.skew_symmetry_defect(u, v).map_err(err)?;
            if let Some((n, d)) = defect.iter().find(|(_, d)| !d.is_zero()) {
                return Err(format!("{name}: skew-symmetry defect at n={n} on ({}, {}): {}", show(u), show(v), show(d)));
            }
            cells += defect.len();

            for m in -4..=4 {
                if weight(u) + weight(v) - int(m) > int(6) || weight(u) + int(1) > int(6) {
                    continue;
                }
                let lhs = ctx.vertex_mode(&ctx.translate(u).map_err(err)?, m, v).map_err(err)?;
                let rhs = ctx.vertex_mode(u, m - 1, v).map_err(err)?.scaled(&int(-m));
                ensure(lhs == rhs, || format!("{name}: translation axiom at m={m} on ({}, {})", show(u), show(v)))?;
                cells += 1;
            }
        }
        for m in -4..=4 {
            let id = ctx.vertex_mode(&vacuum(), m, u).map_err(err)?;
            let expected = if m == -1 { u.clone() } else { VVector::zero() };
            ensure(id == expected, || format!("{name}: vacuum property at m={m} on {}", show(u)))?;
            if m >= -1 {
                let created = ctx.vertex_mode(u, m, &vacuum()).map_err(err)?;
                let expected = if m == -1 { u.clone() } else { VVector::zero() };
                ensure(created == expected, || format!("{name}: creation at m={m} on {}", show(u)))?;
            }
            cells += 2;
        }
        if weight(u) + int(1) <= int(6) {
            let du = ctx.translate(u).map_err(err)?;
            ensure(ctx.vertex_mode(u, -2, &vacuum()).map_err(err)? == du, || format!("{name}: u_-2 1 != D u"))?;
            cells += 1;
        }
    }

    for a in p.gen_ids() {
        for b in p.gen_ids() {
            let (ea, eb) = (gen_element(a), gen_element(b));
            let (ka, kb) = (ctx.state(&ea).map_err(err)?, ctx.state(&eb).map_err(err)?);
            let top = p.product_bound(a, b).map_or(0, |n| n + 2);
            for n in 0..=top {
                let lhs = ctx.vertex_mode(&ka, n as i64, &kb).map_err(err)?;
                let rhs = ctx.state(&p.nth_product(&ea, n, &eb)).map_err(err)?;
                ensure(lhs == rhs, || {
                    format!("{name}: κ-embedding at n={n} on ({}, {})", p.generator(a).id, p.generator(b).id)
                })?;
                cells += 1;
            }
        }
    }

    for a in p.gen_ids() {
        for k in 0..=3u32 {
            let u = UElement::basis(UBasis::Gen { gen: a, dpower: k });
            let back = iota_inverse(p, &iota(p, &u)).map_err(err)?;
            ensure(back == u, || format!("{name}: ι round trip on {}", p.fmt_element(&u)))?;
            cells += 1;
        }
        for n in -4..=4 {
            let x = mode(a, n);
            match iota_inverse(p, &x) {
                Ok(u) if n <= -1 => {
                    ensure(iota(p, &u) == x, || format!("{name}: ι ∘ ι^-1 on {}", fmt_lelement(p, &x)))?;
                }
                Err(Error::NotInMinusPart(_)) if n >= 0 => {}
                other => return Err(format!("{name}: ι^-1 on {} gave {other:?}", fmt_lelement(p, &x))),
            }
            cells += 1;
        }
    }
    Ok(cells)
}

fn criterion_8() -> Outcome {
    let mut parts = Vec::new();
    for (name, levels) in [
        ("virasoro", vec![("c", Scalar::frac(1, 2))]),
        ("heisenberg", vec![("k", int(1))]),
        ("neveu-schwarz", vec![("c", Scalar::frac(7, 10))]),
        ("affine-sl2", vec![("K", int(1))]),
    ] {
        let cells = structural(name, &levels)?;
        parts.push(format!("{name} {cells}"));
    }
    Ok(format!("cells: {}", parts.join(", ")))
}

type Criterion = (&'static str, u64, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("Virasoro bracket table", 1, criterion_1),
        ("Neveu-Schwarz bracket table", 1, criterion_2),
        ("axiom suite and mutants", 10, criterion_3),
        ("characters against partition oracle", 5, criterion_4),
        ("Sugawara sl2 at k = 1", 60, criterion_5),
        ("locality orders", 30, criterion_6),
        ("differential coherence", 60, criterion_7),
        ("structural identities", 120, criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or(e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > Duration::from_secs(*budget) => {
                Err(format!("took {:.2}s, budget {budget}s", elapsed.as_secs_f64()))
            }
            o => o,
        };
        let secs = elapsed.as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {} {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
