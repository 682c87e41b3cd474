use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::coh::{phi_diagonal, small_diagonal_coh, CohX3Class};
use super::x::euler_from_chern;
use super::{add_term, fmt_monomial, same_n, Pair};
use crate::exact::{rat, rat_int, Rat};
use crate::Result;

/// Basis of `R*(X^3)`: monomials `h1^i h2^j h3^k`, `D_ab * h_c^m` with `c`
/// the remaining factor, and the small diagonal `D123`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum X3Basis {
    Mono([u32; 3]),
    Diag(Pair, u32),
    Small,
}

impl X3Basis {
    pub fn codim(self, n: u32) -> u32 {
        match self {
            X3Basis::Mono(e) => e.iter().sum(),
            X3Basis::Diag(_, m) => n + m,
            X3Basis::Small => 2 * n,
        }
    }

    fn word(self) -> ([u32; 3], Vec<Pair>) {
        match self {
            X3Basis::Mono(e) => (e, vec![]),
            X3Basis::Diag(p, m) => {
                let mut e = [0; 3];
                e[p.complement()] = m;
                (e, vec![p])
            }
            X3Basis::Small => ([0; 3], vec![Pair::P12, Pair::P23]),
        }
    }
}

/// Element of the tautological model of `A*(X^3)`. Terms of codimension
/// above `3n` are dropped; they vanish in every model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct X3Class {
    n: u32,
    terms: BTreeMap<X3Basis, Rat>,
}

impl X3Class {
    pub fn zero(n: u32) -> Self {
        X3Class {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(n: u32) -> Vec<X3Basis> {
        let mut out = Vec::new();
        for i in 0..=n {
            for j in 0..=n {
                for k in 0..=n {
                    out.push(X3Basis::Mono([i, j, k]));
                }
            }
        }
        for p in Pair::ALL {
            for m in 0..=n {
                out.push(X3Basis::Diag(p, m));
            }
        }
        out.push(X3Basis::Small);
        out
    }

    pub fn basis_element(n: u32, b: X3Basis) -> Self {
        let mut x = Self::zero(n);
        let (e, diags) = b.word();
        let chi = euler_from_chern(n.max(1)).unwrap_or_else(|_| Rat::zero());
        for (b, c) in normalize(n, &chi, e, &diags) {
            add_term(&mut x.terms, b, c);
        }
        x
    }

    pub fn mono(n: u32, e: [u32; 3]) -> Self {
        Self::basis_element(n, X3Basis::Mono(e))
    }

    pub fn diag(n: u32, p: Pair, m: u32) -> Self {
        Self::basis_element(n, X3Basis::Diag(p, m))
    }

    pub fn small(n: u32) -> Self {
        Self::basis_element(n, X3Basis::Small)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (X3Basis, &Rat)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn coeff(&self, b: X3Basis) -> Rat {
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

    pub fn checked_add(&self, other: &X3Class) -> Result<Self> {
        same_n(self.n, other.n)?;
        let mut out = self.clone();
        for (b, v) in &other.terms {
            add_term(&mut out.terms, *b, v.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &X3Class) -> Result<Self> {
        self.checked_add(&other.scale(&rat_int(-1)))
    }

    pub fn checked_mul(&self, other: &X3Class) -> Result<Self> {
        same_n(self.n, other.n)?;
        let chi = euler_from_chern(self.n)?;
        let mut out = Self::zero(self.n);
        for (b1, c1) in &self.terms {
            let (e1, d1) = b1.word();
            for (b2, c2) in &other.terms {
                let (e2, d2) = b2.word();
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]];
                let diags: Vec<Pair> = d1.iter().chain(&d2).copied().collect();
                let c = c1 * c2;
                for (b, v) in normalize(self.n, &chi, e, &diags) {
                    add_term(&mut out.terms, b, v * &c);
                }
            }
        }
        Ok(out)
    }

    /// Degree of the codimension-`3n` part, `deg h1^n h2^n h3^n = 27`.
    pub fn degree(&self) -> Rat {
        self.coeff(X3Basis::Mono([self.n; 3])) * rat_int(27)
    }

    /// Image in the cohomological model.
    pub fn to_coh(&self) -> Result<CohX3Class> {
        let n = self.n;
        let mut out = CohX3Class::zero(n);
        for (b, c) in &self.terms {
            let img = match *b {
                X3Basis::Mono(e) => CohX3Class::mono(n, e),
                X3Basis::Diag(p, m) => {
                    let mut e = [0; 3];
                    e[p.complement()] = m;
                    phi_diagonal(n, p).checked_mul(&CohX3Class::mono(n, e))?
                }
                X3Basis::Small => small_diagonal_coh(n)?,
            };
            out = out.checked_add(&img.scale(c))?;
        }
        Ok(out)
    }
}

pub fn x3_mul(a: &X3Class, b: &X3Class) -> Result<X3Class> {
    a.checked_mul(b)
}

/// `(1/3) sum_{x+y = n+m} h_a^x h_b^y h_c^(e_c)`: pushforward of `h^m`
/// (`m >= 1`) along the diagonal of the pair, times `h_c^(e_c)`.
fn push_pair(n: u32, p: Pair, m: u32, e_c: u32, out: &mut Vec<(X3Basis, Rat)>, coeff: &Rat) {
    let (a, b) = p.indices();
    let total = n + m;
    for x in total.saturating_sub(n)..=n.min(total) {
        let mut e = [0; 3];
        e[a] = x;
        e[b] = total - x;
        e[p.complement()] = e_c;
        out.push((X3Basis::Mono(e), coeff * rat(1, 3)));
    }
}

/// `(1/9) sum_{x+y+z = 2n+m} h1^x h2^y h3^z`: pushforward of `h^m`
/// (`m >= 1`) along the small diagonal.
fn push_small(n: u32, m: u32, out: &mut Vec<(X3Basis, Rat)>, coeff: &Rat) {
    let total = 2 * n + m;
    for x in 0..=n {
        for y in 0..=n {
            if let Some(z) = total.checked_sub(x + y).filter(|z| *z <= n) {
                out.push((X3Basis::Mono([x, y, z]), coeff * rat(1, 9)));
            }
        }
    }
}

/// Reduces `h1^e1 h2^e2 h3^e3 * prod(diags)` to the basis.
///
/// On a diagonal every `h_a` restricts to `h`, and each further copy of the
/// same diagonal restricts to its normal bundle class `c_n(T_X) = (chi/3) h^n`.
fn normalize(n: u32, chi: &Rat, e: [u32; 3], diags: &[Pair]) -> Vec<(X3Basis, Rat)> {
    let mut out = Vec::new();
    if e.iter().any(|x| *x > n) {
        return out;
    }
    let excess = chi / rat_int(3);
    match diags {
        [] => out.push((X3Basis::Mono(e), Rat::one())),
        [first, rest @ ..] if rest.iter().all(|p| p == first) => {
            let p = *first;
            let (a, b) = p.indices();
            let extra = rest.len() as u32;
            let m = e[a] + e[b] + n * extra;
            let c = num_traits::pow(excess, extra as usize);
            if m == 0 {
                out.push((X3Basis::Diag(p, e[p.complement()]), c));
            } else {
                push_pair(n, p, m, e[p.complement()], &mut out, &c);
            }
        }
        _ => {
            let extra = diags.len() as u32 - 2;
            let m = e.iter().sum::<u32>() + n * extra;
            let c = num_traits::pow(excess, extra as usize);
            if m == 0 {
                out.push((X3Basis::Small, c));
            } else {
                push_small(n, m, &mut out, &c);
            }
        }
    }
    out
}

impl fmt::Display for X3Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|(b, c)| {
            let label = match *b {
                X3Basis::Mono(e) => fmt_monomial(&e),
                X3Basis::Diag(p, m) => {
                    let mut e = [0; 3];
                    e[p.complement()] = m;
                    let tail = fmt_monomial(&e);
                    if tail.is_empty() {
                        format!("D{p}")
                    } else {
                        format!("D{p}*{tail}")
                    }
                }
                X3Basis::Small => "D123".to_string(),
            };
            (label, c)
        });
        super::fmt_sum(f, terms)
    }
}
