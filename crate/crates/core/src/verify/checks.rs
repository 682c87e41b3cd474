use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use super::Suite;
use crate::diagonal::{
    a_coefficients, dual_pairing, gamma3_coh_check, pushforward_13, small_diagonal_closed_form,
    small_diagonal_coh, xx_ring_map_check, Coh2Class, CohBasis, FormalCycle, Pair,
    ProductEvaluator, XClass, XXClass,
};
use crate::exact::{fmt_rat, rat, rat_int, Rat, VarSet, WPoly};
use crate::fano::{extra_relation, fano_dim, ideal_decomposition, taut_ranks};
use crate::grassmann::{
    check_pieri_oracle, fano_class, fano_polynomial, schubert_degree, schubert_of_monomial, GRing,
};
use crate::hodge::{
    binomial, e_fano, euler_cubic, fano_diamond, gs_identity_holds, gs_structure, hodge_cubic,
    rank_r_fx,
};
use crate::Result;

type Outcome = Result<(String, String)>;

/// A registered check: valid for `min_n <= n <= max_n`, returning
/// `(computed, expected)` in canonical text form.
#[derive(Debug, Clone)]
pub struct Check {
    pub id: &'static str,
    pub suite: Suite,
    pub min_n: u32,
    pub max_n: Option<u32>,
    pub precondition: &'static str,
    pub compute: fn(u32) -> Outcome,
}

impl Check {
    pub fn applies(&self, n: u32) -> bool {
        n >= self.min_n && self.max_n.is_none_or(|m| n <= m)
    }
}

fn ring(n: u32) -> Result<Arc<GRing>> {
    static RINGS: OnceLock<Mutex<BTreeMap<u32, Arc<GRing>>>> = OnceLock::new();
    let rings = RINGS.get_or_init(Default::default);
    if let Some(r) = rings.lock().expect("ring cache poisoned").get(&n) {
        return Ok(r.clone());
    }
    let r = Arc::new(GRing::build(n)?);
    rings
        .lock()
        .expect("ring cache poisoned")
        .entry(n)
        .or_insert_with(|| r.clone());
    Ok(r)
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn same(s: impl Into<String>) -> Outcome {
    let s = s.into();
    Ok((s.clone(), s))
}

fn golden(n: u32, table: &[(u32, &str)], computed: String) -> Outcome {
    let expected = table.iter().find(|(m, _)| *m == n).map_or("", |(_, v)| v);
    Ok((computed, expected.to_string()))
}

fn pieri_degree(n: u32, p: &WPoly) -> Rat {
    p.terms()
        .map(|(m, c)| c * schubert_degree(n, &schubert_of_monomial(n, None, m[0], m[1])))
        .sum()
}

pub fn registry() -> Vec<Check> {
    use Suite::*;
    let c = |id, suite, min_n, max_n, precondition, compute| Check {
        id,
        suite,
        min_n,
        max_n,
        precondition,
        compute,
    };
    vec![
        c(
            "grassmann.rank",
            Grassmann,
            1,
            None,
            "n >= 1",
            grassmann_rank,
        ),
        c(
            "grassmann.catalan_degree",
            Grassmann,
            1,
            None,
            "n >= 1",
            catalan_degree,
        ),
        c(
            "grassmann.pieri_oracle",
            Grassmann,
            1,
            Some(8),
            "1 <= n <= 8",
            pieri_oracle,
        ),
        c(
            "grassmann.poincare_duality",
            Grassmann,
            1,
            None,
            "n >= 1",
            poincare_duality,
        ),
        c("fano.lines_count", Fano, 2, Some(2), "n = 2", lines_count),
        c(
            "fano.lines_count_pieri",
            Fano,
            2,
            Some(2),
            "n = 2",
            lines_count_pieri,
        ),
        c(
            "fano.plucker_degree",
            Fano,
            2,
            None,
            "n >= 2",
            plucker_degree,
        ),
        c(
            "fano.surface_degrees",
            Fano,
            3,
            Some(3),
            "n = 3",
            surface_degrees,
        ),
        c(
            "fano.extra_relation",
            Fano,
            3,
            None,
            "n >= 3",
            extra_relation_check,
        ),
        c(
            "fano.taut_rank_symmetry",
            Fano,
            2,
            None,
            "n >= 2",
            taut_rank_symmetry,
        ),
        c(
            "fano.taut_ranks",
            Fano,
            3,
            Some(3),
            "n = 3",
            taut_ranks_golden,
        ),
        c("hodge.euler_cubic", Hodge, 1, None, "n >= 1", euler_cross),
        c(
            "hodge.euler_golden",
            Hodge,
            2,
            Some(4),
            "2 <= n <= 4",
            euler_golden,
        ),
        c("hodge.gs_identity", Hodge, 2, None, "n >= 2", gs_identity),
        c("hodge.chi_fano", Hodge, 2, Some(3), "2 <= n <= 3", chi_fano),
        c("hodge.b1_fano", Hodge, 2, None, "n >= 2", b1_fano),
        c("hodge.b2_fano", Hodge, 3, Some(4), "3 <= n <= 4", b2_fano),
        c(
            "hodge.h2_profile_fano",
            Hodge,
            4,
            Some(4),
            "n = 4",
            h2_profile,
        ),
        c(
            "hodge.gs_structure",
            Hodge,
            3,
            Some(4),
            "3 <= n <= 4",
            gs_golden,
        ),
        c(
            "hodge.gs_palindrome",
            Hodge,
            2,
            None,
            "n >= 2",
            gs_palindrome,
        ),
        c(
            "hodge.rank_r_fx",
            Hodge,
            3,
            Some(3),
            "n = 3",
            rank_r_fx_golden,
        ),
        c(
            "diagonal.delta_squared",
            Diagonal,
            1,
            None,
            "n >= 1",
            delta_squared,
        ),
        c(
            "diagonal.xx_ring_map",
            Diagonal,
            1,
            Some(6),
            "1 <= n <= 6",
            xx_ring_map,
        ),
        c(
            "diagonal.small_diagonal",
            Diagonal,
            1,
            None,
            "n >= 1",
            small_diagonal,
        ),
        c(
            "diagonal.projector_law",
            Diagonal,
            1,
            None,
            "n >= 1",
            projector_law,
        ),
        c(
            "diagonal.delta_coefficient",
            Diagonal,
            1,
            None,
            "n >= 1",
            delta_coefficient,
        ),
        c(
            "diagonal.a_coefficients",
            Diagonal,
            1,
            None,
            "n >= 1",
            a_coefficients_check,
        ),
        c(
            "diagonal.gamma3_coh",
            Diagonal,
            1,
            None,
            "n >= 1",
            gamma3_coh,
        ),
        c(
            "diagonal.dual_pairing",
            Diagonal,
            1,
            None,
            "n >= 1",
            dual_pairing_check,
        ),
        c(
            "diagonal.product_formula",
            Diagonal,
            3,
            None,
            "n >= 3",
            product_formula,
        ),
        c(
            "diagonal.product_h_powers",
            Diagonal,
            3,
            None,
            "n >= 3",
            product_h_powers,
        ),
        c(
            "diagonal.product_rank",
            Diagonal,
            3,
            None,
            "n >= 3",
            product_rank,
        ),
    ]
}

fn grassmann_rank(n: u32) -> Outcome {
    let r = ring(n)?;
    let total: usize = (0..=2 * n).map(|k| r.piece_dim(k)).sum();
    Ok((total.to_string(), binomial(n as i64 + 2, 2).to_string()))
}

fn catalan_degree(n: u32) -> Outcome {
    let r = ring(n)?;
    let vars = VarSet::chern();
    let deg = r.degree_of_poly(&WPoly::var(&vars, 0).pow(2 * n))?;
    let catalan = binomial(2 * n as i64, n as i64) / (n as u64 + 1);
    Ok((fmt_rat(&deg), catalan.to_string()))
}

fn pieri_oracle(n: u32) -> Outcome {
    let r = ring(n)?;
    let checked = check_pieri_oracle(&r)?;
    let mut expected = 0;
    for d1 in 0..=2 * n {
        for d2 in 0..=2 * n - d1 {
            expected += r.piece_dim(d1) * r.piece_dim(d2);
        }
    }
    Ok((
        format!("{checked} products agree"),
        format!("{expected} products agree"),
    ))
}

fn poincare_duality(n: u32) -> Outcome {
    let r = ring(n)?;
    let bad: Vec<u32> = (0..=2 * n)
        .filter(|&k| {
            r.poincare_pairing(k)
                .map_or(true, |m| m.rank() != r.piece_dim(k))
        })
        .collect();
    let computed = if bad.is_empty() {
        "perfect".to_string()
    } else {
        format!("degenerate in degrees {}", join(bad))
    };
    Ok((computed, "perfect".into()))
}

fn lines_count(n: u32) -> Outcome {
    let r = ring(n)?;
    Ok((fmt_rat(&r.degree(&fano_class(&r)?)?), "27".into()))
}

fn lines_count_pieri(n: u32) -> Outcome {
    Ok((fmt_rat(&pieri_degree(n, &fano_polynomial())), "27".into()))
}

fn plucker_degree(n: u32) -> Outcome {
    let r = ring(n)?;
    let vars = VarSet::chern();
    let p = &WPoly::var(&vars, 0).pow(fano_dim(n)) * &fano_polynomial();
    Ok((
        fmt_rat(&r.degree_of_poly(&p)?),
        fmt_rat(&pieri_degree(n, &p)),
    ))
}

fn surface_degrees(n: u32) -> Outcome {
    let r = ring(n)?;
    let vars = VarSet::chern();
    let f = fano_polynomial();
    let c1 = WPoly::var(&vars, 0);
    let c2 = WPoly::var(&vars, 1);
    let a = r.degree_of_poly(&(&c1.pow(2) * &f))?;
    let b = r.degree_of_poly(&(&c2 * &f))?;
    Ok((format!("{},{}", fmt_rat(&a), fmt_rat(&b)), "45,27".into()))
}

fn extra_relation_check(n: u32) -> Outcome {
    let r = ring(n)?;
    let rel = extra_relation(&r)?;
    let product = &rel.p * &fano_polynomial();
    let vanishes = r.normal_form_in(&product, n + 3)?.is_zero();
    let lead = rel.p.coeff(&[n - 1, 0]);
    let member = match ideal_decomposition(&r, &product)? {
        Some((a, b)) => {
            let [h1, h2] = r.relations();
            &(&a * h1) + &(&b * h2) == product
        }
        None => false,
    };
    let computed = format!(
        "P!=0:{} P*F=0:{} lead={} ideal:{}",
        !rel.p.is_zero(),
        vanishes,
        fmt_rat(&lead),
        member
    );
    Ok((computed, "P!=0:true P*F=0:true lead=1 ideal:true".into()))
}

fn taut_rank_symmetry(n: u32) -> Outcome {
    let ranks = taut_ranks(&*ring(n)?)?;
    let rev: Vec<_> = ranks.iter().rev().copied().collect();
    Ok((join(ranks), join(rev)))
}

fn taut_ranks_golden(n: u32) -> Outcome {
    golden(n, &[(3, "1,1,1")], join(taut_ranks(&*ring(n)?)?))
}

fn euler_cross(n: u32) -> Outcome {
    Ok((
        euler_cubic(n)?.to_string(),
        hodge_cubic(n)?.euler().to_string(),
    ))
}

fn euler_golden(n: u32) -> Outcome {
    golden(
        n,
        &[(2, "9"), (3, "-6"), (4, "27")],
        euler_cubic(n)?.to_string(),
    )
}

fn gs_identity(n: u32) -> Outcome {
    e_fano(n)?;
    let computed = if gs_identity_holds(n)? {
        "exact"
    } else {
        "violated"
    };
    Ok((computed.into(), "exact".into()))
}

fn chi_fano(n: u32) -> Outcome {
    golden(
        n,
        &[(2, "27"), (3, "27")],
        e_fano(n)?.eval_one().to_string(),
    )
}

fn b1_fano(n: u32) -> Outcome {
    let b1 = fano_diamond(n)?.betti(1);
    Ok((b1.to_string(), if n == 3 { "10" } else { "0" }.into()))
}

fn b2_fano(n: u32) -> Outcome {
    golden(
        n,
        &[(3, "45"), (4, "23")],
        fano_diamond(n)?.betti(2).to_string(),
    )
}

fn h2_profile(n: u32) -> Outcome {
    golden(n, &[(4, "1,21,1")], join(fano_diamond(n)?.hodge_row(2)))
}

fn gs_golden(n: u32) -> Outcome {
    let a = gs_structure(n)?;
    match n {
        3 => Ok((join(&a), "1,0,1".into())),
        _ => Ok((format!("a1={},a2={}", a[1], a[2]), "a1=1,a2=1".into())),
    }
}

fn gs_palindrome(n: u32) -> Outcome {
    let a = gs_structure(n)?;
    let rev: Vec<_> = a.iter().rev().copied().collect();
    Ok((join(a), join(rev)))
}

fn rank_r_fx_golden(n: u32) -> Outcome {
    golden(n, &[(3, "4")], rank_r_fx(&*ring(n)?, 2)?.to_string())
}

fn delta_squared(n: u32) -> Outcome {
    let d = XXClass::diagonal(n);
    let deg = d.checked_mul(&d)?.degree();
    Ok((fmt_rat(&deg), hodge_cubic(n)?.euler().to_string()))
}

fn xx_ring_map(n: u32) -> Outcome {
    let k = xx_ring_map_check(n)?;
    Ok((
        format!("{k} products"),
        format!("{} products", XXClass::basis(n).len().pow(2)),
    ))
}

fn small_diagonal(n: u32) -> Outcome {
    let product = small_diagonal_coh(n)?;
    let closed = small_diagonal_closed_form(n)?;
    let expected = format!("{} terms", closed.terms().count());
    let diff = product.checked_sub(&closed)?;
    if diff.is_zero() {
        Ok((expected.clone(), expected))
    } else {
        Ok((format!("off by {diff}"), expected))
    }
}

fn projector_law(n: u32) -> Outcome {
    Ok((
        pushforward_13(&small_diagonal_coh(n)?).to_string(),
        Coh2Class::diagonal(n).to_string(),
    ))
}

fn delta_coefficient(n: u32) -> Outcome {
    let s = small_diagonal_coh(n)?;
    let cs = Pair::ALL.map(|p| fmt_rat(&s.coeff(CohBasis::Prim(p, n))));
    Ok((cs.join(","), "1/3,1/3,1/3".into()))
}

/// Groups `a_ijk` by how many indices equal `n` and reports the values seen.
fn a_coefficients_check(n: u32) -> Outcome {
    let a = a_coefficients(n)?;
    let mut seen: BTreeMap<usize, (std::collections::BTreeSet<Rat>, usize)> = BTreeMap::new();
    for (e, v) in &a {
        let top = e.iter().filter(|x| **x == n).count();
        let slot = seen.entry(top).or_default();
        slot.0.insert(v.clone());
        slot.1 += 1;
    }
    let computed = join(seen.iter().map(|(top, (vals, count))| {
        format!(
            "top{top}:{}x{count}",
            vals.iter().map(fmt_rat).collect::<Vec<_>>().join("|")
        )
    }));
    let expected = join(seen.iter().map(|(top, (_, count))| {
        format!("top{top}:{}x{count}", fmt_rat(&rat(1 - *top as i64, 9)))
    }));
    Ok((computed, expected))
}

fn gamma3_coh(n: u32) -> Outcome {
    gamma3_coh_check(n)?;
    same("0")
}

fn dual_pairing_check(n: u32) -> Outcome {
    let k = dual_pairing(n)?;
    // Monomials h1^a h2^b h3^c with a + b + c = n, plus D12, D13, D23.
    let expected = binomial(n as i64 + 2, 2) + 3;
    Ok((format!("0 on {k} duals"), format!("0 on {expected} duals")))
}

fn theorem_pairs(n: u32) -> Vec<(u32, u32)> {
    (1..n)
        .flat_map(|i| (1..n - i).map(move |j| (i, j)))
        .collect()
}

fn product_formula(n: u32) -> Outcome {
    let eval = ProductEvaluator::new(n)?;
    let (ma, mb) = (rat(7, 2), rat_int(-5));
    let mut off = Vec::new();
    for (i, j) in theorem_pairs(n) {
        let e = eval.evaluate(
            &FormalCycle::new(i, ma.clone()),
            &FormalCycle::new(j, mb.clone()),
        )?;
        let mut want = vec![Rat::zero(); n as usize + 1];
        want[(i + j) as usize] = &ma * &mb * rat(1, 9);
        if e.result.coeffs() != want.as_slice() || e.a != rat(1, 9) {
            off.push(format!("({i},{j}):a={}", fmt_rat(&e.a)));
        }
    }
    let computed = if off.is_empty() {
        "a=1/9".to_string()
    } else {
        off.join(";")
    };
    Ok((computed, "a=1/9".into()))
}

fn product_h_powers(n: u32) -> Outcome {
    let eval = ProductEvaluator::new(n)?;
    let mut off = Vec::new();
    for (i, j) in theorem_pairs(n) {
        let e = eval.evaluate(&FormalCycle::h_power(n, i), &FormalCycle::h_power(n, j))?;
        if e.result != &XClass::h_power(n, i) * &XClass::h_power(n, j) {
            off.push(format!("({i},{j}):{}", e.result));
        }
    }
    let computed = if off.is_empty() {
        "h^i*h^j".to_string()
    } else {
        off.join(";")
    };
    Ok((computed, "h^i*h^j".into()))
}

fn product_rank(n: u32) -> Outcome {
    let mut ranks = std::collections::BTreeSet::new();
    for (i, j) in theorem_pairs(n) {
        ranks.insert(crate::diagonal::rank_one_check(n, i, j)?);
    }
    Ok((join(ranks), "1".into()))
}
