use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::ring::{complete_symmetric, GClass, GRing};
use crate::exact::{Rat, WPoly};
use crate::{Error, Result};

/// Schubert index `(a, b)` with `n >= a >= b >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition2 {
    a: u32,
    b: u32,
}

impl Partition2 {
    pub fn new(n: u32, a: u32, b: u32) -> Result<Self> {
        if a > n || b > a {
            return Err(Error::usage(format!(
                "({a}, {b}) is not a partition in a 2 x {n} box"
            )));
        }
        Ok(Partition2 { a, b })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn size(&self) -> u32 {
        self.a + self.b
    }
}

/// Formal sum of Schubert classes.
pub type SchubertSum = BTreeMap<Partition2, Rat>;

fn add_into(acc: &mut SchubertSum, p: Partition2, c: Rat) {
    let e = acc.entry(p).or_insert_with(Rat::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&p);
    }
}

/// Pieri rule for `sigma_(a,b) * sigma_p`: every `sigma_(a',b')` with
/// `a' >= a >= b' >= b`, `a' + b' = a + b + p` and `a' <= n`.
/// Out-of-box terms vanish.
pub fn pieri_mul(n: u32, lambda: Partition2, p: u32) -> SchubertSum {
    let total = lambda.a + lambda.b + p;
    let mut out = SchubertSum::new();
    for b2 in lambda.b..=lambda.a {
        let a2 = total - b2;
        if a2 >= lambda.a && a2 <= n {
            out.insert(Partition2 { a: a2, b: b2 }, Rat::one());
        }
    }
    out
}

/// `sigma_(a,b) * sigma_(1,1) = sigma_(a+1,b+1)`, zero outside the box.
pub fn sigma11_mul(n: u32, lambda: Partition2) -> Option<Partition2> {
    (lambda.a < n).then_some(Partition2 {
        a: lambda.a + 1,
        b: lambda.b + 1,
    })
}

fn mul_sum_by_monomial(n: u32, s: &SchubertSum, a: u32, b: u32) -> SchubertSum {
    let mut cur = s.clone();
    for _ in 0..b {
        let mut next = SchubertSum::new();
        for (lam, c) in &cur {
            if let Some(mu) = sigma11_mul(n, *lam) {
                add_into(&mut next, mu, c.clone());
            }
        }
        cur = next;
    }
    for _ in 0..a {
        let mut next = SchubertSum::new();
        for (lam, c) in &cur {
            for (mu, d) in pieri_mul(n, *lam, 1) {
                add_into(&mut next, mu, c * d);
            }
        }
        cur = next;
    }
    cur
}

/// Schubert expansion of `c1^a * c2^b` by iterated Pieri multiplication,
/// optionally starting from an existing sum.
pub fn schubert_of_monomial(n: u32, start: Option<&SchubertSum>, a: u32, b: u32) -> SchubertSum {
    match start {
        Some(s) => mul_sum_by_monomial(n, s, a, b),
        None => {
            let mut one = SchubertSum::new();
            one.insert(Partition2 { a: 0, b: 0 }, Rat::one());
            mul_sum_by_monomial(n, &one, a, b)
        }
    }
}

/// Coefficient of the point class `sigma_(n,n)`.
pub fn schubert_degree(n: u32, s: &SchubertSum) -> Rat {
    s.get(&Partition2 { a: n, b: n })
        .cloned()
        .unwrap_or_else(Rat::zero)
}

/// Giambelli: `sigma_(a,b) = h_a h_b - h_(a+1) h_(b-1)`.
pub fn giambelli(lambda: Partition2) -> WPoly {
    let (a, b) = (lambda.a as i64, lambda.b as i64);
    let h = |k: i64| {
        if k < 0 {
            WPoly::zero(&crate::exact::VarSet::chern())
        } else {
            complete_symmetric(k).expect("nonnegative degree")
        }
    };
    &(&h(a) * &h(b)) - &(&h(a + 1) * &h(b - 1))
}

/// Maps a homogeneous Schubert sum into the quotient presentation through
/// the Giambelli polynomials.
pub fn schubert_to_class(ring: &GRing, degree: u32, s: &SchubertSum) -> Result<GClass> {
    let mut out = ring.zero(degree)?;
    for (lam, c) in s {
        if lam.size() != degree {
            return Err(Error::usage(
                "Schubert sum is not homogeneous of the requested degree",
            ));
        }
        let cls = ring.normal_form_in(&giambelli(*lam), degree)?;
        out = out.add(&cls.scale(c))?;
    }
    Ok(out)
}

/// Compares the quotient-ring product against the Pieri route for every
/// pair of basis monomials whose product has degree at most `2n`, and the
/// top-degree numbers against the coefficient of `sigma_(n,n)` directly.
/// Returns the number of products compared.
pub fn check_pieri_oracle(ring: &GRing) -> Result<usize> {
    let n = ring.n();
    let mut checked = 0;
    for d1 in 0..=2 * n {
        for d2 in 0..=2 * n - d1 {
            for (i, m1) in ring.basis(d1).iter().enumerate() {
                let start = schubert_of_monomial(n, None, m1[0], m1[1]);
                for (j, m2) in ring.basis(d2).iter().enumerate() {
                    let quotient =
                        ring.mul(&ring.basis_class(d1, i)?, &ring.basis_class(d2, j)?)?;
                    let schubert = schubert_of_monomial(n, Some(&start), m2[0], m2[1]);
                    if schubert_to_class(ring, d1 + d2, &schubert)? != quotient {
                        return Err(Error::check(format!(
                            "n = {n}: product of basis monomials {m1:?} and {m2:?} disagrees with Pieri"
                        )));
                    }
                    if d1 + d2 == 2 * n && ring.degree(&quotient)? != schubert_degree(n, &schubert)
                    {
                        return Err(Error::check(format!(
                            "n = {n}: degree of {m1:?} * {m2:?} disagrees with Pieri"
                        )));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}
