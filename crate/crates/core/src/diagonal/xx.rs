use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::coh::Coh2Class;
use super::{add_term, check_n, fmt_monomial, same_n};
use crate::exact::{rat, rat_int, MatQ, Rat};
use crate::{Error, Result};

/// Basis of `R*(X x X)`: `h1^r h2^s` with `r, s <= n`, and the diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum XXBasis {
    Mono(u32, u32),
    Diag,
}

impl XXBasis {
    pub fn codim(self, n: u32) -> u32 {
        match self {
            XXBasis::Mono(r, s) => r + s,
            XXBasis::Diag => n,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XXClass {
    n: u32,
    terms: BTreeMap<XXBasis, Rat>,
}

impl XXClass {
    pub fn zero(n: u32) -> Self {
        XXClass {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(n: u32) -> Vec<XXBasis> {
        let mut out: Vec<_> = (0..=n)
            .flat_map(|r| (0..=n).map(move |s| XXBasis::Mono(r, s)))
            .collect();
        out.push(XXBasis::Diag);
        out
    }

    /// A single basis element; monomials beyond `h^n` in a factor are zero.
    pub fn basis_element(n: u32, b: XXBasis) -> Self {
        let mut x = Self::zero(n);
        if let XXBasis::Mono(r, s) = b {
            if r > n || s > n {
                return x;
            }
        }
        x.terms.insert(b, Rat::from_integer(1.into()));
        x
    }

    pub fn mono(n: u32, r: u32, s: u32) -> Self {
        Self::basis_element(n, XXBasis::Mono(r, s))
    }

    pub fn diagonal(n: u32) -> Self {
        Self::basis_element(n, XXBasis::Diag)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (XXBasis, &Rat)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn coeff(&self, b: XXBasis) -> Rat {
        self.terms.get(&b).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = Self::zero(self.n);
        for (b, v) in &self.terms {
            add_term(&mut out.terms, *b, v * c);
        }
        out
    }

    pub fn checked_add(&self, other: &XXClass) -> Result<Self> {
        same_n(self.n, other.n)?;
        let mut out = self.clone();
        for (b, v) in &other.terms {
            add_term(&mut out.terms, *b, v.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &XXClass) -> Result<Self> {
        same_n(self.n, other.n)?;
        let chi = super::x::euler_from_chern(self.n)?;
        let mut out = Self::zero(self.n);
        for (b1, c1) in &self.terms {
            for (b2, c2) in &other.terms {
                let c = c1 * c2;
                for (b, v) in basis_product(self.n, &chi, *b1, *b2) {
                    add_term(&mut out.terms, b, v * &c);
                }
            }
        }
        Ok(out)
    }

    /// Degree of the codimension-`2n` part, `deg h1^n h2^n = 9`.
    pub fn degree(&self) -> Rat {
        self.coeff(XXBasis::Mono(self.n, self.n)) * rat_int(9)
    }

    /// Image in the cohomological model: `D -> (1/3) sum_j h1^j h2^(n-j) + d`.
    pub fn to_coh(&self) -> Coh2Class {
        let mut out = Coh2Class::zero(self.n);
        for (b, c) in &self.terms {
            let img = match *b {
                XXBasis::Mono(r, s) => Coh2Class::mono(self.n, r, s),
                XXBasis::Diag => Coh2Class::diagonal(self.n),
            };
            out = out.plus(&img.scale(c));
        }
        out
    }
}

pub fn xx_mul(a: &XXClass, b: &XXClass) -> Result<XXClass> {
    a.checked_mul(b)
}

/// `(1/3) sum_{a+b = n+m, a,b <= n} h1^a h2^b`, the pushforward of `h^m`
/// along the diagonal for `m >= 1`.
fn diagonal_push(n: u32, m: u32) -> Vec<(XXBasis, Rat)> {
    let total = n + m;
    (total.saturating_sub(n)..=n.min(total))
        .map(|a| (XXBasis::Mono(a, total - a), rat(1, 3)))
        .collect()
}

fn basis_product(n: u32, chi: &Rat, b1: XXBasis, b2: XXBasis) -> Vec<(XXBasis, Rat)> {
    use XXBasis::*;
    let one = || rat_int(1);
    match (b1, b2) {
        (Mono(r1, s1), Mono(r2, s2)) => {
            if r1 + r2 > n || s1 + s2 > n {
                vec![]
            } else {
                vec![(Mono(r1 + r2, s1 + s2), one())]
            }
        }
        (Diag, Mono(r, s)) | (Mono(r, s), Diag) => {
            if r + s == 0 {
                vec![(Diag, one())]
            } else {
                diagonal_push(n, r + s)
            }
        }
        (Diag, Diag) => vec![(Mono(n, n), chi / rat_int(9))],
    }
}

/// Checks that `to_coh` is injective on the basis and multiplicative on all
/// basis products. Returns the number of products compared.
pub fn xx_ring_map_check(n: u32) -> Result<usize> {
    check_n(n)?;
    let basis = XXClass::basis(n);
    let images: Vec<Coh2Class> = basis
        .iter()
        .map(|b| XXClass::basis_element(n, *b).to_coh())
        .collect();
    let coords = Coh2Class::coordinate_basis(n);
    let rows: Vec<Vec<Rat>> = images.iter().map(|c| c.coordinates(&coords)).collect();
    let m = MatQ::from_rows(coords.len(), rows)?;
    if m.rank() != basis.len() {
        return Err(Error::check(format!(
            "cohomology map has a kernel on the basis (rank {} < {})",
            m.rank(),
            basis.len()
        )));
    }
    let mut count = 0;
    for (i, b1) in basis.iter().enumerate() {
        for (j, b2) in basis.iter().enumerate() {
            let chow =
                XXClass::basis_element(n, *b1).checked_mul(&XXClass::basis_element(n, *b2))?;
            let coh = images[i].checked_mul(&images[j])?;
            if chow.to_coh() != coh {
                return Err(Error::check(format!(
                    "ring map fails on {b1:?} * {b2:?}: {} vs {}",
                    chow.to_coh(),
                    coh
                )));
            }
            count += 1;
        }
    }
    Ok(count)
}

impl fmt::Display for XXClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|(b, c)| {
            let label = match b {
                XXBasis::Mono(r, s) => fmt_monomial(&[*r, *s]),
                XXBasis::Diag => "D".to_string(),
            };
            (label, c)
        });
        super::fmt_sum(f, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mul(a: &XXClass, b: &XXClass) -> XXClass {
        a.checked_mul(b).unwrap()
    }

    #[test]
    fn excess_rule() {
        let d = XXClass::diagonal(2);
        let h1 = XXClass::mono(2, 1, 0);
        let got = mul(&d, &h1);
        assert_eq!(got.to_string(), "1/3*h1*h2^2 + 1/3*h1^2*h2");
        assert!(mul(&d, &XXClass::mono(2, 2, 2)).is_zero());
        assert_eq!(mul(&d, &XXClass::mono(2, 0, 0)), d);
    }

    #[test]
    fn self_intersection_is_euler_characteristic() {
        assert_eq!(
            mul(&XXClass::diagonal(2), &XXClass::diagonal(2)).degree(),
            rat_int(9)
        );
        for n in 1..=10 {
            let d = XXClass::diagonal(n);
            let chi = crate::hodge::hodge_cubic(n).unwrap().euler();
            assert_eq!(mul(&d, &d).degree(), rat_int(chi));
        }
    }

    #[test]
    fn diagonal_degree_against_monomials() {
        // deg(D * h1^r h2^s) = deg(h^(r+s)) on X.
        for n in 1..=6 {
            for r in 0..=n {
                let s = n - r;
                let expected = rat_int(3);
                assert_eq!(
                    mul(&XXClass::diagonal(n), &XXClass::mono(n, r, s)).degree(),
                    expected
                );
            }
        }
    }

    #[test]
    fn commutative_and_associative() {
        for n in 1..=6 {
            let basis: Vec<XXClass> = XXClass::basis(n)
                .into_iter()
                .map(|b| XXClass::basis_element(n, b))
                .collect();
            for a in &basis {
                for b in &basis {
                    let ab = mul(a, b);
                    assert_eq!(ab, mul(b, a));
                    for c in &basis {
                        assert_eq!(mul(&ab, c), mul(a, &mul(b, c)), "n={n}: ({a})({b})({c})");
                    }
                }
            }
        }
    }

    #[test]
    fn ring_map_to_cohomology() {
        for n in 1..=6 {
            assert_eq!(
                xx_ring_map_check(n).unwrap(),
                XXClass::basis(n).len().pow(2)
            );
        }
    }

    #[test]
    fn mismatched_n() {
        assert!(matches!(
            XXClass::diagonal(2).checked_mul(&XXClass::diagonal(3)),
            Err(Error::Usage(_))
        ));
    }
}
