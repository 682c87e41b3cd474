use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{add_term, check_n, fmt_monomial, same_n, Pair};
use crate::exact::{rat, rat_int, Rat};
use crate::hodge::primitive_middle;
use crate::{Error, Result};

/// `(-1)^n dim H^n_prim(X)`, the self-intersection of the primitive
/// Kunneth component of the diagonal.
fn signed_primitive_dim(n: u32) -> Rat {
    let d = primitive_middle(n).total_dim() as i64;
    rat_int(if n.is_multiple_of(2) { d } else { -d })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coh2Basis {
    Mono(u32, u32),
    Prim,
}

/// Cohomological model of `X x X`: the subring generated by `h1`, `h2` and
/// the primitive Kunneth class `d`, with `d * h1 = d * h2 = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coh2Class {
    n: u32,
    terms: BTreeMap<Coh2Basis, Rat>,
}

impl Coh2Class {
    pub fn zero(n: u32) -> Self {
        Coh2Class {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn mono(n: u32, r: u32, s: u32) -> Self {
        let mut x = Self::zero(n);
        if r <= n && s <= n {
            x.terms.insert(Coh2Basis::Mono(r, s), Rat::one());
        }
        x
    }

    pub fn prim(n: u32) -> Self {
        let mut x = Self::zero(n);
        x.terms.insert(Coh2Basis::Prim, Rat::one());
        x
    }

    /// `[D] = (1/3) sum_j h1^j h2^(n-j) + d`.
    pub fn diagonal(n: u32) -> Self {
        let mut x = Self::prim(n);
        for j in 0..=n {
            add_term(&mut x.terms, Coh2Basis::Mono(j, n - j), rat(1, 3));
        }
        x
    }

    pub fn coordinate_basis(n: u32) -> Vec<Coh2Basis> {
        let mut out: Vec<_> = (0..=n)
            .flat_map(|r| (0..=n).map(move |s| Coh2Basis::Mono(r, s)))
            .collect();
        out.push(Coh2Basis::Prim);
        out
    }

    pub fn coordinates(&self, basis: &[Coh2Basis]) -> Vec<Rat> {
        basis.iter().map(|b| self.coeff(*b)).collect()
    }

    pub fn coeff(&self, b: Coh2Basis) -> Rat {
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

    pub fn plus(&self, other: &Coh2Class) -> Self {
        let mut out = self.clone();
        for (b, v) in &other.terms {
            add_term(&mut out.terms, *b, v.clone());
        }
        out
    }

    pub fn checked_mul(&self, other: &Coh2Class) -> Result<Self> {
        use Coh2Basis::*;
        same_n(self.n, other.n)?;
        let n = self.n;
        let mut out = Self::zero(n);
        for (b1, c1) in &self.terms {
            for (b2, c2) in &other.terms {
                let c = c1 * c2;
                match (*b1, *b2) {
                    (Mono(r1, s1), Mono(r2, s2)) => {
                        if r1 + r2 <= n && s1 + s2 <= n {
                            add_term(&mut out.terms, Mono(r1 + r2, s1 + s2), c);
                        }
                    }
                    (Prim, Mono(0, 0)) | (Mono(0, 0), Prim) => add_term(&mut out.terms, Prim, c),
                    (Prim, Mono(..)) | (Mono(..), Prim) => {}
                    (Prim, Prim) => add_term(
                        &mut out.terms,
                        Mono(n, n),
                        c * signed_primitive_dim(n) / rat_int(9),
                    ),
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Coh2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|(b, c)| {
            let label = match b {
                Coh2Basis::Mono(r, s) => fmt_monomial(&[*r, *s]),
                Coh2Basis::Prim => "d".to_string(),
            };
            (label, c)
        });
        super::fmt_sum(f, terms)
    }
}

/// Basis of the cohomological model of `X^3`: monomials and `d_ab * h_c^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CohBasis {
    Mono([u32; 3]),
    Prim(Pair, u32),
}

/// Decomposable classes plus primitive-sector terms `d_ab * h_c^m`, with
/// `d_ab * h_a = d_ab * h_b = 0` and `d_ab * d_bc = (1/3) h_b^n d_ac`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohX3Class {
    n: u32,
    terms: BTreeMap<CohBasis, Rat>,
}

impl CohX3Class {
    pub fn zero(n: u32) -> Self {
        CohX3Class {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn mono(n: u32, e: [u32; 3]) -> Self {
        let mut x = Self::zero(n);
        if e.iter().all(|x| *x <= n) {
            x.terms.insert(CohBasis::Mono(e), Rat::one());
        }
        x
    }

    pub fn prim(n: u32, p: Pair, m: u32) -> Self {
        let mut x = Self::zero(n);
        if m <= n {
            x.terms.insert(CohBasis::Prim(p, m), Rat::one());
        }
        x
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (CohBasis, &Rat)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn coeff(&self, b: CohBasis) -> Rat {
        self.terms.get(&b).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_primitive_terms(&self) -> bool {
        self.terms.keys().any(|b| matches!(b, CohBasis::Prim(..)))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = Self::zero(self.n);
        for (b, v) in &self.terms {
            add_term(&mut out.terms, *b, v * c);
        }
        out
    }

    pub fn checked_add(&self, other: &CohX3Class) -> Result<Self> {
        same_n(self.n, other.n)?;
        let mut out = self.clone();
        for (b, v) in &other.terms {
            add_term(&mut out.terms, *b, v.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &CohX3Class) -> Result<Self> {
        self.checked_add(&other.scale(&rat_int(-1)))
    }

    /// Fails with a usage error on `d_ab * d_ab`.
    pub fn checked_mul(&self, other: &CohX3Class) -> Result<Self> {
        use CohBasis::*;
        same_n(self.n, other.n)?;
        let n = self.n;
        let mut out = Self::zero(n);
        for (b1, c1) in &self.terms {
            for (b2, c2) in &other.terms {
                let c = c1 * c2;
                match (*b1, *b2) {
                    (Mono(e1), Mono(e2)) => {
                        let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]];
                        if e.iter().all(|x| *x <= n) {
                            add_term(&mut out.terms, Mono(e), c);
                        }
                    }
                    (Prim(p, m), Mono(e)) | (Mono(e), Prim(p, m)) => {
                        let (a, b) = p.indices();
                        let k = m + e[p.complement()];
                        if e[a] == 0 && e[b] == 0 && k <= n {
                            add_term(&mut out.terms, Prim(p, k), c);
                        }
                    }
                    (Prim(p, m), Prim(q, l)) => {
                        let b = p.shared(q).ok_or_else(|| {
                            Error::usage(format!(
                                "product of two primitive classes on the same pair {p}"
                            ))
                        })?;
                        // d_ab * d_bc = (1/3) h_b^n d_ac; the h-factors sit on a and c.
                        if m == 0 && l == 0 {
                            let (p0, p1) = p.indices();
                            let (q0, q1) = q.indices();
                            let a = if p0 == b { p1 } else { p0 };
                            let cc = if q0 == b { q1 } else { q0 };
                            let ac = Pair::from_indices(a, cc).expect("distinct outer indices");
                            debug_assert_eq!(ac.complement(), b);
                            add_term(&mut out.terms, Prim(ac, n), c * rat(1, 3));
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for CohX3Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|(b, c)| {
            let label = match *b {
                CohBasis::Mono(e) => fmt_monomial(&e),
                CohBasis::Prim(p, m) => {
                    let mut e = [0; 3];
                    e[p.complement()] = m;
                    let tail = fmt_monomial(&e);
                    if tail.is_empty() {
                        format!("d{p}")
                    } else {
                        format!("d{p}*{tail}")
                    }
                }
            };
            (label, c)
        });
        super::fmt_sum(f, terms)
    }
}

/// `[D_ab] = (1/3) sum_j h_a^j h_b^(n-j) + d_ab`.
pub(crate) fn phi_diagonal(n: u32, p: Pair) -> CohX3Class {
    let (a, b) = p.indices();
    let mut x = CohX3Class::prim(n, p, 0);
    for j in 0..=n {
        let mut e = [0; 3];
        e[a] = j;
        e[b] = n - j;
        add_term(&mut x.terms, CohBasis::Mono(e), rat(1, 3));
    }
    x
}

/// `[D123] = [D12] * [D23]` in the cohomological model.
pub fn small_diagonal_coh(n: u32) -> Result<CohX3Class> {
    check_n(n)?;
    phi_diagonal(n, Pair::P12).checked_mul(&phi_diagonal(n, Pair::P23))
}

/// `(1/9) sum_{i+j+k=2n} h1^i h2^j h3^k + (1/3)(h1^n d23 + h2^n d13 + h3^n d12)`.
pub fn small_diagonal_closed_form(n: u32) -> Result<CohX3Class> {
    check_n(n)?;
    let mut x = CohX3Class::zero(n);
    for i in 0..=n {
        for j in 0..=n {
            if let Some(k) = (2 * n).checked_sub(i + j).filter(|k| *k <= n) {
                add_term(&mut x.terms, CohBasis::Mono([i, j, k]), rat(1, 9));
            }
        }
    }
    for p in Pair::ALL {
        add_term(&mut x.terms, CohBasis::Prim(p, n), rat(1, 3));
    }
    Ok(x)
}

/// Pushforward along the projection to factors 1 and 3: integrates the
/// middle slot (`h2^n -> 3`, primitive classes in slot 2 integrate to 0).
pub fn pushforward_13(c: &CohX3Class) -> Coh2Class {
    let n = c.n;
    let mut out = Coh2Class::zero(n);
    for (b, v) in &c.terms {
        match *b {
            CohBasis::Mono([i, j, k]) if j == n => {
                add_term(&mut out.terms, Coh2Basis::Mono(i, k), v * rat_int(3))
            }
            CohBasis::Prim(Pair::P13, m) if m == n => {
                add_term(&mut out.terms, Coh2Basis::Prim, v * rat_int(3))
            }
            _ => {}
        }
    }
    out
}

/// Decomposable coefficients `a_ijk`, `i + j + k = 2n`, of
/// `[D123] - (1/3)([D12] h3^n + [D13] h2^n + [D23] h1^n)`.
///
/// Fails if a primitive term survives or the result is not
/// `S_3`-symmetric.
pub fn a_coefficients(n: u32) -> Result<BTreeMap<[u32; 3], Rat>> {
    let gamma = gamma3_coh(n)?;
    if let Some((b, c)) = gamma.terms().find(|(b, _)| matches!(b, CohBasis::Prim(..))) {
        return Err(Error::check(format!(
            "primitive term {b:?} survives in [gamma^3] with coefficient {c}"
        )));
    }
    let mut a = BTreeMap::new();
    for i in 0..=n {
        for j in 0..=n {
            if let Some(k) = (2 * n).checked_sub(i + j).filter(|k| *k <= n) {
                a.insert([i, j, k], gamma.coeff(CohBasis::Mono([i, j, k])));
            }
        }
    }
    if let Some((b, _)) = gamma
        .terms()
        .find(|(b, _)| matches!(b, CohBasis::Mono(e) if !a.contains_key(e)))
    {
        return Err(Error::check(format!(
            "[gamma^3] has a term {b:?} outside codimension 2n"
        )));
    }
    for (&[i, j, k], v) in &a {
        for perm in [[j, i, k], [k, j, i], [i, k, j], [j, k, i], [k, i, j]] {
            if &a[&perm] != v {
                return Err(Error::check(format!("a_{i}{j}{k} is not symmetric")));
            }
        }
    }
    Ok(a)
}

/// Image of `gamma^3` in the cohomological model.
pub(crate) fn gamma3_coh(n: u32) -> Result<CohX3Class> {
    let mut gamma = small_diagonal_coh(n)?;
    for p in Pair::ALL {
        let mut e = [0; 3];
        e[p.complement()] = n;
        let term = phi_diagonal(n, p).checked_mul(&CohX3Class::mono(n, e))?;
        gamma = gamma.checked_sub(&term.scale(&rat(1, 3)))?;
    }
    Ok(gamma)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_diagonal_expansion() {
        for n in 1..=10 {
            assert_eq!(
                small_diagonal_coh(n).unwrap(),
                small_diagonal_closed_form(n).unwrap()
            );
        }
        let s = small_diagonal_coh(2).unwrap();
        assert_eq!(s.coeff(CohBasis::Mono([1, 1, 2])), rat(1, 9));
        assert_eq!(s.coeff(CohBasis::Prim(Pair::P12, 2)), rat(1, 3));
    }

    #[test]
    fn projector_law() {
        for n in 1..=10 {
            assert_eq!(
                pushforward_13(&small_diagonal_coh(n).unwrap()),
                Coh2Class::diagonal(n)
            );
        }
    }

    #[test]
    fn primitive_rules() {
        let n = 3;
        let d12 = CohX3Class::prim(n, Pair::P12, 0);
        assert!(d12
            .checked_mul(&CohX3Class::mono(n, [1, 0, 0]))
            .unwrap()
            .is_zero());
        assert_eq!(
            d12.checked_mul(&CohX3Class::mono(n, [0, 0, 2])).unwrap(),
            CohX3Class::prim(n, Pair::P12, 2)
        );
        assert!(matches!(d12.checked_mul(&d12), Err(Error::Usage(_))));
        let got = d12.checked_mul(&CohX3Class::prim(n, Pair::P13, 0)).unwrap();
        assert_eq!(got, CohX3Class::prim(n, Pair::P23, n).scale(&rat(1, 3)));
    }

    #[test]
    fn gamma_coefficients() {
        for n in 1..=10 {
            let a = a_coefficients(n).unwrap();
            for (&[i, j, k], v) in &a {
                let at_top = [i, j, k].iter().filter(|x| **x == n).count() as i64;
                assert_eq!(*v, rat(1 - at_top, 9), "n={n} a_{i}{j}{k}");
                if 0 < i.min(j).min(k) && i.max(j).max(k) < n {
                    assert_eq!(*v, rat(1, 9));
                }
            }
        }
    }

    #[test]
    fn two_factor_display() {
        assert_eq!(Coh2Class::diagonal(1).to_string(), "1/3*h2 + 1/3*h1 + d");
    }
}
