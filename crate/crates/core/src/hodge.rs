//! Hodge diamonds of cubic hypersurfaces and the Hodge-theoretic shadow of
//! the relation between a cubic, its Hilbert square and its Fano variety of
//! lines.
//!
//! Hodge numbers of the cubic come from the Jacobian ring: the primitive
//! middle cohomology has `h^(n-q,q) = dim J_(3q+1-n)` and the Jacobian ring
//! of a smooth cubic in `n + 2` variables has Hilbert series `(1 + t)^(n+2)`.
//! All structures here are pure, so `h^(p,q)` sits in degree `p + q` and
//! E-polynomial coefficients carry the sign `(-1)^(p+q)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::fano::{fano_dim, taut_ranks};
use crate::grassmann::GRing;
use crate::{Error, Result};

/// Multiplicities `h^(p,q)` of a graded Hodge structure, keyed by
/// `(k, p, q)` with `k` the cohomological degree.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HodgeDiamond {
    entries: BTreeMap<(i32, i32, i32), u64>,
}

impl HodgeDiamond {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, k: i32, p: i32, q: i32, mult: u64) {
        if mult > 0 {
            *self.entries.entry((k, p, q)).or_insert(0) += mult;
        }
    }

    pub fn get(&self, k: i32, p: i32, q: i32) -> u64 {
        self.entries.get(&(k, p, q)).copied().unwrap_or(0)
    }

    /// `h^(p,q)` in degree `p + q`.
    pub fn h(&self, p: i32, q: i32) -> u64 {
        self.get(p + q, p, q)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((i32, i32, i32), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_dim(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn betti(&self, k: i32) -> u64 {
        self.entries
            .iter()
            .filter(|((d, _, _), _)| *d == k)
            .map(|(_, v)| v)
            .sum()
    }

    /// `b_0, ..., b_top` where `top` is the largest occupied degree.
    pub fn betti_numbers(&self) -> Vec<u64> {
        let top = self.entries.keys().map(|k| k.0).max().unwrap_or(-1);
        (0..=top).map(|k| self.betti(k)).collect()
    }

    pub fn euler(&self) -> i64 {
        self.entries
            .iter()
            .map(|((k, _, _), &v)| if k % 2 == 0 { v as i64 } else { -(v as i64) })
            .sum()
    }

    /// Hodge numbers `h^(p, k-p)` of degree `k`, by increasing `q`.
    pub fn hodge_row(&self, k: i32) -> Vec<u64> {
        (0..=k).map(|q| self.get(k, k - q, q)).collect()
    }

    /// Tensor with the weight-`2j` Tate structure, shifting every entry by
    /// `(2j, j, j)`. `shifted(-1)` realizes the twist `(1)`.
    pub fn shifted(&self, j: i32) -> HodgeDiamond {
        HodgeDiamond {
            entries: self
                .entries
                .iter()
                .map(|(&(k, p, q), &v)| ((k + 2 * j, p + j, q + j), v))
                .collect(),
        }
    }

    pub fn plus(&self, other: &HodgeDiamond) -> HodgeDiamond {
        let mut out = self.clone();
        for (&(k, p, q), &v) in &other.entries {
            out.add(k, p, q, v);
        }
        out
    }

    /// Entrywise difference; fails if any multiplicity would go negative.
    pub fn checked_sub(&self, other: &HodgeDiamond) -> Result<HodgeDiamond> {
        let mut out = self.clone();
        for (&key, &v) in &other.entries {
            let have = out.entries.get(&key).copied().unwrap_or(0);
            if have < v {
                return Err(Error::check(format!(
                    "negative multiplicity at (k, p, q) = {key:?}: {have} - {v}"
                )));
            }
            if have == v {
                out.entries.remove(&key);
            } else {
                out.entries.insert(key, have - v);
            }
        }
        Ok(out)
    }

    pub fn is_hodge_symmetric(&self) -> bool {
        self.entries
            .iter()
            .all(|(&(k, p, q), &v)| self.get(k, q, p) == v)
    }

    /// `h^(p,q)(H^k) = h^(d-p,d-q)(H^(2d-k))` for a compact variety of
    /// dimension `d`.
    pub fn is_poincare_symmetric(&self, d: i32) -> bool {
        self.entries
            .iter()
            .all(|(&(k, p, q), &v)| self.get(2 * d - k, d - p, d - q) == v)
    }

    pub fn e_poly(&self) -> EPoly {
        let mut e = EPoly::default();
        for (&(k, p, q), &v) in &self.entries {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            e.add_term(p, q, sign * v as i64);
        }
        e
    }
}

/// Signed Hodge-Deligne polynomial `sum (-1)^k h^(p,q)(H^k) u^p v^q`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EPoly {
    coeffs: BTreeMap<(i32, i32), i64>,
}

impl EPoly {
    pub fn coeff(&self, p: i32, q: i32) -> i64 {
        self.coeffs.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), i64)> + '_ {
        self.coeffs.iter().map(|(&k, &v)| (k, v))
    }

    fn add_term(&mut self, p: i32, q: i32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry((p, q)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&(p, q));
        }
    }

    /// `(uv)^k`.
    pub fn uv_power(k: i32) -> EPoly {
        let mut e = EPoly::default();
        e.add_term(k, k, 1);
        e
    }

    /// `E(P^n) = 1 + uv + ... + (uv)^n`.
    pub fn projective_space(n: i32) -> EPoly {
        (0..=n).fold(EPoly::default(), |acc, k| acc.plus(&EPoly::uv_power(k)))
    }

    pub fn plus(&self, other: &EPoly) -> EPoly {
        let mut out = self.clone();
        for (&(p, q), &c) in &other.coeffs {
            out.add_term(p, q, c);
        }
        out
    }

    pub fn minus(&self, other: &EPoly) -> EPoly {
        let mut out = self.clone();
        for (&(p, q), &c) in &other.coeffs {
            out.add_term(p, q, -c);
        }
        out
    }

    pub fn times(&self, other: &EPoly) -> EPoly {
        let mut out = EPoly::default();
        for (&(p1, q1), &c1) in &self.coeffs {
            for (&(p2, q2), &c2) in &other.coeffs {
                out.add_term(p1 + p2, q1 + q2, c1 * c2);
            }
        }
        out
    }

    /// Value at `u = v = 1`, the topological Euler characteristic.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(&(p, q), &c)| self.coeff(q, p) == c)
    }

    /// Exact division by `(uv)^k`; every term must be divisible.
    pub fn div_uv_power(&self, k: i32) -> Result<EPoly> {
        if let Some(&(p, q)) = self.coeffs.keys().find(|(p, q)| *p < k || *q < k) {
            return Err(Error::NonIntegralResult(format!(
                "term u^{p} v^{q} is not divisible by (uv)^{k}"
            )));
        }
        Ok(EPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(p, q), &c)| ((p - k, q - k), c))
                .collect(),
        })
    }

    /// Recovers the Hodge diamond of a pure structure, stripping the sign
    /// `(-1)^(p+q)`. Fails on a coefficient of the wrong sign.
    pub fn to_diamond(&self) -> Result<HodgeDiamond> {
        let mut d = HodgeDiamond::new();
        for (&(p, q), &c) in &self.coeffs {
            let h = if (p + q) % 2 == 0 { c } else { -c };
            if h < 0 {
                return Err(Error::check(format!(
                    "negative Hodge number h^({p},{q}) = {h}"
                )));
            }
            d.add(p + q, p, q, h as u64);
        }
        Ok(d)
    }
}

impl fmt::Display for EPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.coeffs.iter().collect();
        terms.sort_by_key(|((p, q), _)| (p + q, -p));
        for (i, (&(p, q), &c)) in terms.into_iter().enumerate() {
            let sep = match (i, c < 0) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let mut factors = Vec::new();
            if c.abs() != 1 || (p == 0 && q == 0) {
                factors.push(c.abs().to_string());
            }
            for (name, e) in [("u", p), ("v", q)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{sep}{}", factors.join("*"))?;
        }
        Ok(())
    }
}

pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn check_n(n: u32, min: u32) -> Result<()> {
    if n < min {
        return Err(Error::range(format!("needs n >= {min}, got {n}")));
    }
    Ok(())
}

/// Primitive middle cohomology `H^n_prim(X)` of a smooth cubic `n`-fold.
pub fn primitive_middle(n: u32) -> HodgeDiamond {
    let n = n as i32;
    let mut d = HodgeDiamond::new();
    for q in 0..=n {
        d.add(n, n - q, q, binomial(n as i64 + 2, (3 * q + 1 - n) as i64));
    }
    d
}

/// Full Hodge diamond of a smooth cubic `n`-fold.
pub fn hodge_cubic(n: u32) -> Result<HodgeDiamond> {
    check_n(n, 1)?;
    let mut d = primitive_middle(n);
    for k in (0..=2 * n as i32).step_by(2) {
        d.add(k, k / 2, k / 2, 1);
    }
    Ok(d)
}

/// Topological Euler characteristic from `c(T_X) = (1+h)^(n+2) / (1+3h)`
/// and `deg h^n = 3`, cross-checked against the Hodge diamond.
pub fn euler_cubic(n: u32) -> Result<i64> {
    check_n(n, 1)?;
    let n_ = n as i64;
    let top: i64 = (0..=n_)
        .map(|j| binomial(n_ + 2, n_ - j) as i64 * (-3i64).pow(j as u32))
        .sum();
    let chi = 3 * top;
    let betti = hodge_cubic(n)?.euler();
    if chi != betti {
        return Err(Error::check(format!(
            "Euler characteristic {chi} from Chern classes, {betti} from Hodge numbers"
        )));
    }
    Ok(chi)
}

/// Graded-symmetric square: symmetric square on even degrees, alternating
/// square on odd degrees, tensor products across distinct degrees.
pub fn sym2_diamond(d: &HodgeDiamond) -> HodgeDiamond {
    type Piece = Vec<((i32, i32), u64)>;
    let mut by_degree: BTreeMap<i32, Piece> = BTreeMap::new();
    for ((k, p, q), v) in d.entries() {
        by_degree.entry(k).or_default().push(((p, q), v));
    }
    let mut out = HodgeDiamond::new();
    let pieces: Vec<_> = by_degree.iter().collect();
    for (i, (&k1, piece1)) in pieces.iter().enumerate() {
        for &(&k2, piece2) in &pieces[i + 1..] {
            for &((p1, q1), m1) in piece1.iter() {
                for &((p2, q2), m2) in piece2.iter() {
                    out.add(k1 + k2, p1 + p2, q1 + q2, m1 * m2);
                }
            }
        }
        for (a, &((p1, q1), m1)) in piece1.iter().enumerate() {
            for &((p2, q2), m2) in &piece1[a + 1..] {
                out.add(2 * k1, p1 + p2, q1 + q2, m1 * m2);
            }
            let same = if k1 % 2 == 0 {
                m1 * (m1 + 1) / 2
            } else {
                m1 * m1.saturating_sub(1) / 2
            };
            out.add(2 * k1, 2 * p1, 2 * q1, same);
        }
    }
    out
}

/// `E(X^[2]) = E(Sym^2 X) + (uv + ... + (uv)^(n-1)) E(X)`: the Hilbert
/// square replaces the diagonal of `Sym^2 X` by a `P^(n-1)`-bundle over it.
pub fn e_hilb2(n: u32) -> Result<EPoly> {
    let x = hodge_cubic(n)?;
    let ex = x.e_poly();
    let fiber_extra = (1..n as i32).fold(EPoly::default(), |acc, k| acc.plus(&EPoly::uv_power(k)));
    Ok(sym2_diamond(&x).e_poly().plus(&fiber_extra.times(&ex)))
}

/// `E(F) = (E(X^[2]) - E(X) E(P^n)) / (uv)^2`, validated as the
/// E-polynomial of a smooth projective variety of dimension `2(n-2)`.
pub fn e_fano(n: u32) -> Result<EPoly> {
    check_n(n, 2)?;
    let ex = hodge_cubic(n)?.e_poly();
    let rest = e_hilb2(n)?.minus(&ex.times(&EPoly::projective_space(n as i32)));
    let ef = rest.div_uv_power(2)?;
    let dim = fano_dim(n) as i32;
    let diamond = ef.to_diamond()?;
    // F is connected from n = 3 on; for n = 2 it is 27 reduced points.
    if n >= 3 && ef.coeff(dim, dim) != 1 {
        return Err(Error::check(format!(
            "top coefficient of E(F) is {}",
            ef.coeff(dim, dim)
        )));
    }
    if ef
        .terms()
        .any(|((p, q), _)| p > dim || q > dim || p < 0 || q < 0)
    {
        return Err(Error::check(format!(
            "E(F) has terms outside dimension {dim}"
        )));
    }
    if !ef.is_symmetric() || !diamond.is_poincare_symmetric(dim) {
        return Err(Error::check("E(F) violates Hodge or Poincare symmetry"));
    }
    Ok(ef)
}

pub fn fano_diamond(n: u32) -> Result<HodgeDiamond> {
    e_fano(n)?.to_diamond()
}

/// `e_hilb2(n) == E(X) E(P^n) + (uv)^2 e_fano(n)`, exactly.
pub fn gs_identity_holds(n: u32) -> Result<bool> {
    let ex = hodge_cubic(n)?.e_poly();
    let rhs = ex
        .times(&EPoly::projective_space(n as i32))
        .plus(&EPoly::uv_power(2).times(&e_fano(n)?));
    Ok(e_hilb2(n)? == rhs)
}

/// The weight-shifted primitive structure `H^n_prim(X)(1)`, in degree `n - 2`.
pub fn transcendental_block(n: u32) -> HodgeDiamond {
    primitive_middle(n).shifted(-1)
}

/// Strips `Sym^2(H)` and `H(-k)`, `0 <= k <= n - 2`, from the cohomology of
/// `F` and returns the multiplicities `a_0, ..., a_(2(n-2))` of the Tate
/// classes that remain. Fails if anything non-Tate or negative is left.
pub fn gs_structure(n: u32) -> Result<Vec<u64>> {
    check_n(n, 2)?;
    let h = transcendental_block(n);
    let mut rest = fano_diamond(n)?.checked_sub(&sym2_diamond(&h))?;
    for k in 0..=(n as i32 - 2) {
        rest = rest.checked_sub(&h.shifted(k))?;
    }
    let dim = fano_dim(n) as i32;
    let mut a = vec![0u64; dim as usize + 1];
    for ((k, p, q), v) in rest.entries() {
        if p != q || k != 2 * p || p < 0 || p > dim {
            return Err(Error::check(format!(
                "non-Tate remainder at (k, p, q) = ({k}, {p}, {q})"
            )));
        }
        a[p as usize] = v;
    }
    Ok(a)
}

/// `rank R^k(F x X)`: decomposable part plus `Gamma * c1^j`,
/// `0 <= j <= n - 2`, which sits in codimension `n - 1 + j`.
pub fn rank_r_fx(ring: &GRing, k: u32) -> Result<usize> {
    Ok(rank_r_fx_table(ring)?.get(k as usize).copied().unwrap_or(0))
}

/// `rank_r_fx` for `k = 0..=dim F + n`.
pub fn rank_r_fx_table(ring: &GRing) -> Result<Vec<usize>> {
    let n = ring.n();
    check_n(n, 3)?;
    let ranks = taut_ranks(ring)?;
    let top = fano_dim(n) + n;
    Ok((0..=top)
        .map(|k| {
            let decomposable: usize = (0..=k)
                .filter(|&a| (a as usize) < ranks.len() && k - a <= n)
                .map(|a| ranks[a as usize])
                .sum();
            let graph = usize::from(k >= n - 1 && k - (n - 1) <= n - 2);
            decomposable + graph
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_hodge_numbers() {
        let x3 = hodge_cubic(3).unwrap();
        assert_eq!(x3.h(2, 1), 5);
        assert_eq!(x3.h(3, 0), 0);
        let x4 = hodge_cubic(4).unwrap();
        assert_eq!(x4.h(3, 1), 1);
        assert_eq!(primitive_middle(4).h(2, 2), 20);
        assert_eq!(x4.h(2, 2), 21);
        assert_eq!(hodge_cubic(2).unwrap().h(1, 1), 7);
        for n in 1..=12 {
            let d = hodge_cubic(n).unwrap();
            assert!(d.is_hodge_symmetric());
            assert!(d.is_poincare_symmetric(n as i32));
        }
        assert!(hodge_cubic(0).is_err());
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(euler_cubic(2).unwrap(), 9);
        assert_eq!(euler_cubic(3).unwrap(), -6);
        assert_eq!(euler_cubic(4).unwrap(), 27);
        for n in 1..=12 {
            assert_eq!(euler_cubic(n).unwrap(), hodge_cubic(n).unwrap().euler());
        }
    }

    #[test]
    fn symmetric_squares() {
        let mut point = HodgeDiamond::new();
        point.add(0, 0, 0, 1);
        assert_eq!(sym2_diamond(&point), point);

        let mut odd = HodgeDiamond::new();
        odd.add(1, 1, 0, 1);
        odd.add(1, 0, 1, 1);
        let s = sym2_diamond(&odd);
        assert_eq!(s.betti(2), 1);
        assert_eq!(s.get(2, 1, 1), 1);
        assert_eq!(s.total_dim(), 1);

        let s3 = sym2_diamond(&transcendental_block(3));
        assert_eq!(s3.total_dim(), 45);
        assert_eq!(s3.hodge_row(2), vec![10, 25, 10]);
    }

    #[test]
    fn hilbert_square_of_cubic_surface() {
        let e = e_hilb2(2).unwrap();
        let expected: Vec<i64> = vec![1, 8, 36, 8, 1];
        for (k, c) in expected.into_iter().enumerate() {
            assert_eq!(e.coeff(k as i32, k as i32), c);
        }
        assert_eq!(e.terms().count(), 5);
    }

    #[test]
    fn elliptic_curve_symmetric_square() {
        // Sym^2 of a genus-1 curve is a P^1-bundle over it.
        let mut expected = EPoly::default();
        for ((p, q), c) in [
            ((0, 0), 1),
            ((1, 0), -1),
            ((0, 1), -1),
            ((1, 1), 2),
            ((2, 1), -1),
            ((1, 2), -1),
            ((2, 2), 1),
        ] {
            expected.add_term(p, q, c);
        }
        assert_eq!(e_hilb2(1).unwrap(), expected);
    }

    #[test]
    fn hilbert_square_euler_characteristic() {
        for n in 1..=10 {
            let chi = euler_cubic(n).unwrap();
            assert_eq!(
                e_hilb2(n).unwrap().eval_one(),
                (chi * chi + chi) / 2 + (n as i64 - 1) * chi
            );
        }
    }

    #[test]
    fn fano_varieties() {
        assert_eq!(e_fano(2).unwrap().to_string(), "27");
        let f3 = fano_diamond(3).unwrap();
        assert_eq!(e_fano(3).unwrap().eval_one(), 27);
        assert_eq!(f3.h(1, 0), 5);
        assert_eq!(f3.betti_numbers(), vec![1, 10, 45, 10, 1]);
        let f4 = fano_diamond(4).unwrap();
        assert_eq!(f4.betti(2), 23);
        assert_eq!(f4.hodge_row(2), vec![1, 21, 1]);
        assert!(e_fano(1).is_err());
        for n in 2..=10 {
            assert!(gs_identity_holds(n).unwrap());
        }
    }

    #[test]
    fn galkin_shinder_structure() {
        assert_eq!(gs_structure(2).unwrap(), vec![0]);
        assert_eq!(gs_structure(3).unwrap(), vec![1, 0, 1]);
        let a4 = gs_structure(4).unwrap();
        assert_eq!((a4[1], a4[2]), (1, 1));
        for n in 3..=10 {
            assert_eq!(gs_structure(n).unwrap()[0], 1);
        }
    }

    #[test]
    fn division_and_sign_errors() {
        assert!(matches!(
            EPoly::uv_power(1).div_uv_power(2),
            Err(Error::NonIntegralResult(_))
        ));
        let mut bad = EPoly::default();
        bad.add_term(1, 0, 3);
        assert!(bad.to_diamond().is_err());
        let mut small = HodgeDiamond::new();
        small.add(0, 0, 0, 1);
        let mut big = HodgeDiamond::new();
        big.add(0, 0, 0, 2);
        assert!(small.checked_sub(&big).is_err());
    }

    #[test]
    fn r_fx_ranks() {
        let g3 = GRing::build(3).unwrap();
        assert_eq!(rank_r_fx(&g3, 0).unwrap(), 1);
        assert_eq!(rank_r_fx(&g3, 2).unwrap(), 4);
        assert_eq!(rank_r_fx(&g3, fano_dim(3) + 3 + 1).unwrap(), 0);
        assert!(rank_r_fx(&GRing::build(2).unwrap(), 0).is_err());
    }

    #[test]
    fn epoly_text() {
        assert_eq!(
            e_hilb2(1).unwrap().to_string(),
            "1 - u - v + 2*u*v - u^2*v - u*v^2 + u^2*v^2"
        );
    }
}
