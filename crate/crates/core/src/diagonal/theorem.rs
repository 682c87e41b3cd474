use std::fmt;

use num_traits::Zero;

use super::coh::a_coefficients;
use super::x3::{X3Basis, X3Class};
use super::{check_n, Pair, XClass};
use crate::exact::{fmt_rat, rat, rat_int, MatQ, Rat};
use crate::{Error, Result};

/// `gamma^3 = D123 - (1/3)(D12 h3^n + D13 h2^n + D23 h1^n)`.
pub fn gamma3_chow(n: u32) -> Result<X3Class> {
    check_n(n)?;
    let mut g = X3Class::small(n);
    for p in Pair::ALL {
        g = g.checked_sub(&X3Class::diag(n, p, n).scale(&rat(1, 3)))?;
    }
    Ok(g)
}

/// `Gamma^3 = gamma^3 - sum a_ijk h1^i h2^j h3^k`.
pub fn big_gamma3_chow(n: u32) -> Result<X3Class> {
    let mut g = gamma3_chow(n)?;
    for (e, a) in a_coefficients(n)? {
        g = g.checked_sub(&X3Class::mono(n, e).scale(&a))?;
    }
    Ok(g)
}

/// `true` when `Gamma^3` maps to zero in the cohomological model.
pub fn gamma3_coh_check(n: u32) -> Result<bool> {
    let image = big_gamma3_chow(n)?.to_coh()?;
    if !image.is_zero() {
        return Err(Error::check(format!("Gamma^3 has nonzero image {image}")));
    }
    Ok(true)
}

/// Pairs `Gamma^3` in the Chow model against every class of complementary
/// codimension `n` (monomials and diagonals `D_ab`) and returns the number
/// of pairings, all of which must vanish.
pub fn dual_pairing(n: u32) -> Result<usize> {
    let g = big_gamma3_chow(n)?;
    let duals: Vec<X3Basis> = X3Class::basis(n)
        .into_iter()
        .filter(|b| b.codim(n) == n)
        .collect();
    for b in &duals {
        let deg = g.checked_mul(&X3Class::basis_element(n, *b))?.degree();
        if !deg.is_zero() {
            return Err(Error::check(format!(
                "Gamma^3 pairs to {} with {b:?}",
                fmt_rat(&deg)
            )));
        }
    }
    Ok(duals.len())
}

/// A cycle known only through its codimension and its moment
/// `m = deg(alpha * h^(n - codim))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalCycle {
    pub codim: u32,
    pub moment: Rat,
}

impl FormalCycle {
    pub fn new(codim: u32, moment: Rat) -> Self {
        FormalCycle { codim, moment }
    }

    /// `h^i`, whose moment is `deg h^n = 3`.
    pub fn h_power(n: u32, i: u32) -> Self {
        let m = (&XClass::h_power(n, i) * &XClass::h_power(n, n.saturating_sub(i))).degree();
        FormalCycle {
            codim: i,
            moment: m,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermContribution {
    pub term: String,
    pub value: Rat,
    pub reason: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductEvaluation {
    pub n: u32,
    pub result: XClass,
    /// `a_(n-i, n-j, i+j)`, the `a` in `alpha * beta = a m_alpha m_beta h^(i+j)`.
    pub a: Rat,
    pub terms: Vec<TermContribution>,
}

impl fmt::Display for ProductEvaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "result: {}", self.result)?;
        for t in &self.terms {
            writeln!(f, "  {}: {} ({})", t.term, fmt_rat(&t.value), t.reason)?;
        }
        Ok(())
    }
}

/// Evaluates `pi3_*(pi1^* alpha * pi2^* beta * D123)` using the
/// decomposition `D123 = (1/3)(D12 h3^n + perm.) + sum a_ijk h-monomials`,
/// i.e. `Gamma^3 = 0`. Each term is computed from codimensions and moments
/// only; a term that would need more than that is an error.
#[derive(Debug, Clone)]
pub struct ProductEvaluator {
    n: u32,
    small: X3Class,
}

impl ProductEvaluator {
    pub fn new(n: u32) -> Result<Self> {
        check_n(n)?;
        let small = X3Class::small(n).checked_sub(&big_gamma3_chow(n)?)?;
        if !small.coeff(X3Basis::Small).is_zero() {
            return Err(Error::check(
                "small diagonal survives in its own decomposition",
            ));
        }
        Ok(ProductEvaluator { n, small })
    }

    /// The decomposition of `D123` the evaluator integrates against.
    pub fn decomposition(&self) -> &X3Class {
        &self.small
    }

    pub fn evaluate(&self, alpha: &FormalCycle, beta: &FormalCycle) -> Result<ProductEvaluation> {
        let n = self.n;
        let (i, j) = (alpha.codim, beta.codim);
        if i == 0 || j == 0 || i + j >= n {
            return Err(Error::range(format!(
                "needs 0 < i, 0 < j, i + j < n; got i={i}, j={j}, n={n}"
            )));
        }
        let deg_with = |c: &FormalCycle, r: u32| {
            if c.codim + r == n {
                c.moment.clone()
            } else {
                Rat::zero()
            }
        };
        let mut decomposable = Rat::zero();
        let mut terms = Vec::new();
        for (b, c) in self.small.terms() {
            match b {
                X3Basis::Mono([r, s, _]) => {
                    decomposable += c * deg_with(alpha, r) * deg_with(beta, s)
                }
                X3Basis::Diag(Pair::P12, t) => {
                    // Integrates alpha * beta over the first two factors.
                    if i + j == n {
                        return Err(Error::range("D12 term needs deg(alpha * beta)"));
                    }
                    terms.push(TermContribution {
                        term: format!("D12*h3^{t}"),
                        value: Rat::zero(),
                        reason: "alpha*beta has codimension i+j < n, no degree",
                    });
                }
                X3Basis::Diag(p, m) => {
                    // D13 h2^m integrates beta * h^m and leaves alpha; D23 symmetric.
                    let other = if p == Pair::P13 { beta } else { alpha };
                    if other.codim + m == n {
                        return Err(Error::range(format!(
                            "D{p} term would leave a formal cycle"
                        )));
                    }
                    terms.push(TermContribution {
                        term: format!("D{p}*h{}^{m}", p.complement() + 1),
                        value: Rat::zero(),
                        reason: "codimension of the integrated factor is positive",
                    });
                }
                X3Basis::Small => unreachable!("checked in new"),
            }
        }
        terms.push(TermContribution {
            term: "sum a_rst h1^r h2^s h3^t".to_string(),
            value: decomposable.clone(),
            reason: "only r = n-i, s = n-j contribute",
        });
        let mut coeffs = vec![Rat::zero(); n as usize + 1];
        coeffs[(i + j) as usize] = decomposable.clone();
        let a = self.small.coeff(X3Basis::Mono([n - i, n - j, i + j]));
        Ok(ProductEvaluation {
            n,
            result: XClass::from_coeffs(n, coeffs)?,
            a,
            terms,
        })
    }
}

pub fn product_theorem(
    n: u32,
    alpha: &FormalCycle,
    beta: &FormalCycle,
) -> Result<ProductEvaluation> {
    ProductEvaluator::new(n)?.evaluate(alpha, beta)
}

/// Rank of the span of `product_theorem(n, alpha, beta)` over a spread of
/// moments for codimensions `(i, j)`.
pub fn rank_one_check(n: u32, i: u32, j: u32) -> Result<usize> {
    let eval = ProductEvaluator::new(n)?;
    let moments = [rat_int(1), rat_int(3), rat_int(-2), rat(5, 7), rat_int(0)];
    let mut rows = Vec::new();
    for ma in &moments {
        for mb in &moments {
            let e = eval.evaluate(
                &FormalCycle::new(i, ma.clone()),
                &FormalCycle::new(j, mb.clone()),
            )?;
            rows.push(e.result.coeffs().to_vec());
        }
    }
    Ok(MatQ::from_rows(n as usize + 1, rows)?.rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_vanishes_cohomologically() {
        for n in 1..=6 {
            assert!(gamma3_coh_check(n).unwrap());
            assert_eq!(
                dual_pairing(n).unwrap(),
                X3Class::basis(n).iter().filter(|b| b.codim(n) == n).count()
            );
        }
    }

    #[test]
    fn gamma_shape() {
        let g = gamma3_chow(2).unwrap();
        assert_eq!(
            g.to_string(),
            "-1/3*D12*h3^2 - 1/3*D13*h2^2 - 1/3*D23*h1^2 + D123"
        );
    }

    #[test]
    fn powers_of_h() {
        for n in 3..=10 {
            let eval = ProductEvaluator::new(n).unwrap();
            for i in 1..n {
                for j in 1..n - i {
                    let e = eval
                        .evaluate(&FormalCycle::h_power(n, i), &FormalCycle::h_power(n, j))
                        .unwrap();
                    assert_eq!(e.result, &XClass::h_power(n, i) * &XClass::h_power(n, j));
                    assert_eq!(e.a, rat(1, 9));
                }
            }
        }
    }

    #[test]
    fn formal_cycles() {
        let e = product_theorem(
            5,
            &FormalCycle::new(2, rat(7, 2)),
            &FormalCycle::new(1, rat_int(-4)),
        )
        .unwrap();
        assert_eq!(e.result.coeff(3), rat(7, 2) * rat_int(-4) * rat(1, 9));
        assert_eq!(rank_one_check(5, 2, 1).unwrap(), 1);
    }

    #[test]
    fn preconditions() {
        let c = FormalCycle::new(1, rat_int(1));
        assert!(matches!(
            product_theorem(2, &c, &c),
            Err(Error::UnsupportedRange(_))
        ));
        assert!(matches!(
            product_theorem(5, &FormalCycle::new(0, rat_int(1)), &c),
            Err(Error::UnsupportedRange(_))
        ));
    }
}
