//! Acceptance criteria, one line each. Every comparison is exact.

use std::process::ExitCode;
use std::time::Instant;

use cubic_chow::diagonal::{
    a_coefficients, dual_pairing, gamma3_coh_check, rank_one_check, small_diagonal_coh, CohBasis,
    FormalCycle, Pair, ProductEvaluator, XClass, XXClass,
};
use cubic_chow::exact::{rat, rat_int, Rat, VarSet, WPoly};
use cubic_chow::fano::{extra_relation, ideal_decomposition};
use cubic_chow::grassmann::{
    check_pieri_oracle, fano_class, fano_polynomial, schubert_degree, schubert_of_monomial, GRing,
};
use cubic_chow::hodge::{
    e_fano, e_hilb2, euler_cubic, fano_diamond, gs_identity_holds, gs_structure, hodge_cubic,
    sym2_diamond, transcendental_block, EPoly, HodgeDiamond,
};
use cubic_chow::verify::{emit, run, Format, RunConfig, Status, Suite};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ensure_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Outcome {
    ensure(got == want, || {
        format!("{what}: got {got:?}, expected {want:?}")
    })
}

fn err(e: cubic_chow::Error) -> String {
    e.to_string()
}

fn pieri_degree(n: u32, p: &WPoly) -> Rat {
    p.terms()
        .map(|(m, c)| c * schubert_degree(n, &schubert_of_monomial(n, None, m[0], m[1])))
        .sum()
}

fn twenty_seven_lines() -> Outcome {
    let start = Instant::now();
    let g = GRing::build(2).map_err(err)?;
    let quotient = g.degree(&fano_class(&g).map_err(err)?).map_err(err)?;
    let pieri = pieri_degree(2, &fano_polynomial());
    let elapsed = start.elapsed();
    ensure_eq("quotient-ring degree", quotient, rat_int(27))?;
    ensure_eq("Pieri degree", pieri, rat_int(27))?;
    ensure(elapsed.as_secs_f64() < 1.0, || format!("took {elapsed:?}"))
}

/// Reassembles the cohomology of `F` from `Sym^2 H`, the shifted copies of
/// `H` and the Tate classes `a_k`.
fn reassemble(n: u32) -> Result<HodgeDiamond, String> {
    let h = transcendental_block(n);
    let mut d = sym2_diamond(&h);
    for k in 0..=(n as i32 - 2) {
        d = d.plus(&h.shifted(k));
    }
    for (k, a) in gs_structure(n).map_err(err)?.into_iter().enumerate() {
        d.add(2 * k as i32, k as i32, k as i32, a);
    }
    Ok(d)
}

fn fano_surface() -> Outcome {
    let g = GRing::build(3).map_err(err)?;
    let vars = VarSet::chern();
    let (c1, c2) = (WPoly::var(&vars, 0), WPoly::var(&vars, 1));
    let f = fano_polynomial();
    for (what, p, want) in [("c1^2 [F]", &c1.pow(2) * &f, 45), ("c2 [F]", &c2 * &f, 27)] {
        ensure_eq(what, g.degree_of_poly(&p).map_err(err)?, rat_int(want))?;
        ensure_eq(
            &format!("{what} via Pieri"),
            pieri_degree(3, &p),
            rat_int(want),
        )?;
    }
    let ef = e_fano(3).map_err(err)?;
    let d = fano_diamond(3).map_err(err)?;
    ensure_eq("chi(F)", ef.eval_one(), 27)?;
    ensure_eq("b1(F)", d.betti(1), 10)?;
    ensure_eq("b2(F)", d.betti(2), 45)?;
    ensure_eq("GS reassembly", reassemble(3)?, d)
}

fn beauville_donagi() -> Outcome {
    let d = fano_diamond(4).map_err(err)?;
    ensure_eq("b2(F)", d.betti(2), 23)?;
    ensure_eq("h-profile", d.hodge_row(2), vec![1, 21, 1])?;
    let a = gs_structure(4).map_err(err)?;
    ensure_eq("(a_1, a_2)", (a[1], a[2]), (1, 1))?;
    ensure_eq("GS reassembly", reassemble(4)?, d)
}

fn hodge_euler() -> Outcome {
    for n in 1..=12 {
        ensure_eq(
            &format!("n={n}"),
            euler_cubic(n).map_err(err)?,
            hodge_cubic(n).map_err(err)?.euler(),
        )?;
    }
    for (n, chi) in [(2, 9), (3, -6), (4, 27)] {
        ensure_eq(&format!("chi at n={n}"), euler_cubic(n).map_err(err)?, chi)?;
    }
    Ok(())
}

fn gs_identity() -> Outcome {
    for n in 2..=10 {
        let ef = e_fano(n).map_err(|e| format!("n={n}: {e}"))?;
        ensure(ef.to_diamond().is_ok(), || format!("n={n}: sign pattern"))?;
        let ex = hodge_cubic(n).map_err(err)?.e_poly();
        let rhs = ex
            .times(&EPoly::projective_space(n as i32))
            .plus(&EPoly::uv_power(2).times(&ef));
        ensure(e_hilb2(n).map_err(err)? == rhs, || {
            format!("n={n}: identity fails")
        })?;
        ensure(gs_identity_holds(n).map_err(err)?, || {
            format!("n={n}: library identity check")
        })?;
    }
    Ok(())
}

fn extra_relations() -> Outcome {
    for n in 3..=12 {
        let g = GRing::build(n).map_err(err)?;
        let rel = extra_relation(&g).map_err(|e| format!("n={n}: {e}"))?;
        ensure(!rel.p.is_zero(), || format!("n={n}: P = 0"))?;
        ensure(rel.p.coeff(&[n - 1, 0]) != rat_int(0), || {
            format!("n={n}: c1^(n-1) coefficient vanishes")
        })?;
        let product = &rel.p * &fano_polynomial();
        ensure(
            g.normal_form_in(&product, n + 3).map_err(err)?.is_zero(),
            || format!("n={n}: P [F] != 0"),
        )?;
        let (a, b) = ideal_decomposition(&g, &product)
            .map_err(err)?
            .ok_or_else(|| format!("n={n}: linear solve finds no cofactors"))?;
        let [r1, r2] = g.relations();
        ensure(&(&a * r1) + &(&b * r2) == product, || {
            format!("n={n}: cofactors do not reproduce P [F]")
        })?;
    }
    Ok(())
}

fn diagonal_suite() -> Outcome {
    for n in 1..=10 {
        a_coefficients(n).map_err(|e| format!("n={n}: {e}"))?;
        let s = small_diagonal_coh(n).map_err(err)?;
        for p in Pair::ALL {
            ensure_eq(
                &format!("n={n} coefficient of d{p}"),
                s.coeff(CohBasis::Prim(p, n)),
                rat(1, 3),
            )?;
        }
        gamma3_coh_check(n).map_err(|e| format!("n={n}: {e}"))?;
        dual_pairing(n).map_err(|e| format!("n={n}: {e}"))?;
    }
    Ok(())
}

fn product_theorem() -> Outcome {
    let moments = [rat_int(1), rat(-7, 3), rat_int(12)];
    for n in 1..=10 {
        if n < 3 {
            continue;
        }
        let eval = ProductEvaluator::new(n).map_err(err)?;
        for i in 1..n {
            for j in 1..n - i {
                for ma in &moments {
                    for mb in &moments {
                        let e = eval
                            .evaluate(
                                &FormalCycle::new(i, ma.clone()),
                                &FormalCycle::new(j, mb.clone()),
                            )
                            .map_err(err)?;
                        let want = XClass::h_power(n, i + j).scale(&(ma * mb * rat(1, 9)));
                        ensure_eq(&format!("n={n} i={i} j={j}"), e.result, want)?;
                    }
                }
                let e = eval
                    .evaluate(&FormalCycle::h_power(n, i), &FormalCycle::h_power(n, j))
                    .map_err(err)?;
                ensure_eq(
                    &format!("h^{i} h^{j} at n={n}"),
                    e.result,
                    XClass::h_power(n, i + j),
                )?;
                ensure_eq(
                    &format!("rank at n={n} i={i} j={j}"),
                    rank_one_check(n, i, j).map_err(err)?,
                    1,
                )?;
            }
        }
    }
    Ok(())
}

fn oracle_equivalence() -> Outcome {
    for n in 1..=8 {
        let g = GRing::build(n).map_err(err)?;
        check_pieri_oracle(&g).map_err(|e| format!("n={n}: {e}"))?;
    }
    for n in 1..=10 {
        let d = XXClass::diagonal(n);
        let deg = d.checked_mul(&d).map_err(err)?.degree();
        ensure_eq(
            &format!("deg(D^2) at n={n}"),
            deg,
            rat_int(hodge_cubic(n).map_err(err)?.euler()),
        )?;
    }
    Ok(())
}

fn performance() -> Outcome {
    let start = Instant::now();
    let config = RunConfig::new(1, 10, Suite::ALL.to_vec()).map_err(err)?;
    let results = run(&config);
    let elapsed = start.elapsed();
    let failed: Vec<_> = results
        .iter()
        .filter(|r| r.status == Status::Fail)
        .map(|r| format!("{}@{}", r.check_id, r.n))
        .collect();
    ensure(failed.is_empty(), || {
        format!("failed checks: {}", failed.join(", "))
    })?;
    let json: serde_json::Value =
        serde_json::from_str(&emit(&results, Format::Json)).map_err(|e| e.to_string())?;
    let rows = json.as_array().ok_or("report is not an array")?;
    ensure(rows.iter().all(|r| r["elapsed_ms"].is_u64()), || {
        "elapsed_ms missing".into()
    })?;
    ensure(elapsed.as_secs_f64() < 60.0, || {
        format!("full suite took {elapsed:?}")
    })
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("27 lines on a cubic surface", twenty_seven_lines),
        ("Fano surface invariants at n=3", fano_surface),
        ("Fano fourfold at n=4", beauville_donagi),
        ("Hodge/Euler cross-check, n<=12", hodge_euler),
        ("E-polynomial identity, 2<=n<=10", gs_identity),
        (
            "extra relation and ideal membership, 3<=n<=12",
            extra_relations,
        ),
        ("small diagonal and Gamma^3, n<=10", diagonal_suite),
        ("rank-one product formula, n<=10", product_theorem),
        ("Pieri oracle and deg(D^2) = chi", oracle_equivalence),
        ("full suite n=1..10 under 60 s", performance),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({ms} ms)", i + 1),
            Err(e) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name} ({ms} ms): {e}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
