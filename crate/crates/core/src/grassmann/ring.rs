use std::fmt;

use num_traits::{One, Zero};

use crate::exact::{MatQ, Monomial, Rat, VarSet, WPoly};
use crate::{Error, Result};

/// Complete symmetric polynomial `h_k` in two variables, written in the
/// elementary symmetric functions `x = e1`, `y = e2`:
/// `h_k = x h_{k-1} - y h_{k-2}`, `h_0 = 1`, `h_{-1} = 0`.
pub fn complete_symmetric(k: i64) -> Result<WPoly> {
    if k < 0 {
        return Err(Error::usage(format!(
            "complete symmetric polynomial of negative degree {k}"
        )));
    }
    let vars = VarSet::chern();
    let (x, y) = (WPoly::var(&vars, 0), WPoly::var(&vars, 1));
    let mut prev = WPoly::zero(&vars);
    let mut cur = WPoly::one(&vars);
    for _ in 0..k {
        let next = &(&x * &cur) - &(&y * &prev);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `dim A^k(Gr(2, n+2))`: partitions `n >= a >= b >= 0` with `a + b = k`.
pub fn partition_count(n: u32, k: u32) -> usize {
    (0..=n).filter(|&b| k >= 2 * b && k - b <= n).count()
}

/// Weight-`k` monomials `x^(k-2b) y^b`, ordered by increasing `b`
/// (graded-lex with `x > y`). The index of a monomial is its `y` exponent.
fn monomials_of_degree(k: u32) -> Vec<Monomial> {
    (0..=k / 2).map(|b| vec![k - 2 * b, b]).collect()
}

#[derive(Debug, Clone)]
struct Piece {
    monomials: Vec<Monomial>,
    /// Indices into `monomials` that form the quotient basis.
    basis: Vec<usize>,
    /// Coordinates of each monomial on the quotient basis.
    reduction: Vec<Vec<Rat>>,
}

impl Piece {
    fn build(n: u32, k: u32, relations: &[WPoly; 2]) -> Result<Piece> {
        let monomials = monomials_of_degree(k);
        let vars = VarSet::chern();
        let mut rows = Vec::new();
        for (rel, shift) in relations.iter().zip([n + 1, n + 2]) {
            if k < shift {
                continue;
            }
            for m in monomials_of_degree(k - shift) {
                let gen = &WPoly::monomial(&vars, m, Rat::one()) * rel;
                rows.push(monomials.iter().map(|mm| gen.coeff(mm)).collect());
            }
        }
        let ideal = MatQ::from_rows(monomials.len(), rows)?;
        let (echelon, pivots) = ideal.rref();
        let basis: Vec<usize> = (0..monomials.len())
            .filter(|c| !pivots.contains(c))
            .collect();
        let reduction = (0..monomials.len())
            .map(|j| match pivots.iter().position(|&p| p == j) {
                None => basis
                    .iter()
                    .map(|&c| if c == j { Rat::one() } else { Rat::zero() })
                    .collect(),
                Some(row) => basis
                    .iter()
                    .map(|&c| -echelon.get(row, c).clone())
                    .collect(),
            })
            .collect();
        Ok(Piece {
            monomials,
            basis,
            reduction,
        })
    }
}

/// Chow ring of the Grassmannian of lines in `P^(n+1)`, presented as
/// `Q[c1, c2] / (h_(n+1), h_(n+2))` with `c1 = sigma_1`, `c2 = sigma_(1,1)`.
///
/// Each graded piece carries a monomial basis and the reduction of every
/// monomial onto it, computed once by exact row reduction.
#[derive(Debug, Clone)]
pub struct GRing {
    n: u32,
    relations: [WPoly; 2],
    pieces: Vec<Piece>,
    point_norm: Rat,
}

/// Element of a single graded piece `A^degree`, in coordinates over that
/// piece's quotient basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GClass {
    n: u32,
    degree: u32,
    coords: Vec<Rat>,
}

impl GClass {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn same_piece(&self, other: &GClass) -> Result<()> {
        if self.n != other.n || self.degree != other.degree {
            return Err(Error::usage("classes live in different graded pieces"));
        }
        Ok(())
    }

    pub fn add(&self, other: &GClass) -> Result<GClass> {
        self.same_piece(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(GClass {
            coords,
            ..self.clone()
        })
    }

    pub fn scale(&self, c: &Rat) -> GClass {
        GClass {
            coords: self.coords.iter().map(|v| v * c).collect(),
            ..self.clone()
        }
    }
}

impl GRing {
    pub fn build(n: u32) -> Result<GRing> {
        if n == 0 {
            return Err(Error::range("Grassmannian ring needs n >= 1"));
        }
        let relations = [
            complete_symmetric(n as i64 + 1)?,
            complete_symmetric(n as i64 + 2)?,
        ];
        let pieces = (0..=2 * n)
            .map(|k| Piece::build(n, k, &relations))
            .collect::<Result<Vec<_>>>()?;
        for (k, piece) in pieces.iter().enumerate() {
            let expected = partition_count(n, k as u32);
            if piece.basis.len() != expected {
                return Err(Error::check(format!(
                    "dim A^{k} is {} but the partition count is {expected}",
                    piece.basis.len()
                )));
            }
        }
        let mut ring = GRing {
            n,
            relations,
            pieces,
            point_norm: Rat::one(),
        };
        let top = ring.reduce_monomial(&[0, n]);
        ring.point_norm = top.coords[0].clone();
        if ring.point_norm.is_zero() {
            return Err(Error::check("c2^n vanishes in the top degree"));
        }
        Ok(ring)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Complex dimension of the Grassmannian, `2n`.
    pub fn dim(&self) -> u32 {
        2 * self.n
    }

    /// The ideal generators `h_(n+1)` and `h_(n+2)`.
    pub fn relations(&self) -> &[WPoly; 2] {
        &self.relations
    }

    pub fn piece_dim(&self, k: u32) -> usize {
        self.pieces.get(k as usize).map_or(0, |p| p.basis.len())
    }

    /// Basis monomials of `A^k`, in graded-lex order.
    pub fn basis(&self, k: u32) -> Vec<Monomial> {
        self.pieces
            .get(k as usize)
            .map(|p| p.basis.iter().map(|&i| p.monomials[i].clone()).collect())
            .unwrap_or_default()
    }

    pub fn basis_polys(&self, k: u32) -> Vec<WPoly> {
        let vars = VarSet::chern();
        self.basis(k)
            .into_iter()
            .map(|m| WPoly::monomial(&vars, m, Rat::one()))
            .collect()
    }

    fn piece(&self, k: u32) -> Result<&Piece> {
        self.pieces
            .get(k as usize)
            .ok_or_else(|| Error::usage(format!("degree {k} exceeds the dimension {}", self.dim())))
    }

    fn reduce_monomial(&self, m: &[u32]) -> GClass {
        let k = m[0] + 2 * m[1];
        let piece = &self.pieces[k as usize];
        GClass {
            n: self.n,
            degree: k,
            coords: piece.reduction[m[1] as usize].clone(),
        }
    }

    pub fn zero(&self, k: u32) -> Result<GClass> {
        Ok(GClass {
            n: self.n,
            degree: k,
            coords: vec![Rat::zero(); self.piece(k)?.basis.len()],
        })
    }

    /// Basis element `i` of `A^k`.
    pub fn basis_class(&self, k: u32, i: usize) -> Result<GClass> {
        let mut c = self.zero(k)?;
        if i >= c.coords.len() {
            return Err(Error::usage(format!(
                "basis index {i} out of range in degree {k}"
            )));
        }
        c.coords[i] = Rat::one();
        Ok(c)
    }

    /// Image in the quotient of a weighted-homogeneous polynomial in `x, y`.
    /// The zero polynomial has no degree; use [`GRing::normal_form_in`].
    pub fn normal_form(&self, p: &WPoly) -> Result<GClass> {
        let d = p.homogeneous_degree().ok_or_else(|| {
            Error::usage("normal_form needs a nonzero weighted-homogeneous polynomial")
        })?;
        self.normal_form_in(p, d)
    }

    pub fn normal_form_in(&self, p: &WPoly, d: u32) -> Result<GClass> {
        if **p.vars() != *VarSet::chern() {
            return Err(Error::usage(
                "polynomial is not in the Chern variables x, y",
            ));
        }
        if !p.is_homogeneous_of(d) {
            return Err(Error::usage(format!(
                "polynomial is not homogeneous of degree {d}"
            )));
        }
        let mut out = self.zero(d)?;
        for (m, c) in p.terms() {
            let r = self.reduce_monomial(m);
            for (o, v) in out.coords.iter_mut().zip(&r.coords) {
                *o += c * v;
            }
        }
        Ok(out)
    }

    /// Lifts a class to the polynomial supported on the basis monomials.
    pub fn to_poly(&self, c: &GClass) -> WPoly {
        let vars = VarSet::chern();
        self.basis(c.degree)
            .into_iter()
            .zip(&c.coords)
            .fold(WPoly::zero(&vars), |acc, (m, v)| {
                &acc + &WPoly::monomial(&vars, m, v.clone())
            })
    }

    pub fn mul(&self, a: &GClass, b: &GClass) -> Result<GClass> {
        if a.n != self.n || b.n != self.n {
            return Err(Error::usage("class from a different Grassmannian"));
        }
        let d = a.degree + b.degree;
        let mut out = self.zero(d)?;
        let (ba, bb) = (self.basis(a.degree), self.basis(b.degree));
        for (ma, ca) in ba.iter().zip(&a.coords) {
            if ca.is_zero() {
                continue;
            }
            for (mb, cb) in bb.iter().zip(&b.coords) {
                if cb.is_zero() {
                    continue;
                }
                let r = self.reduce_monomial(&[ma[0] + mb[0], ma[1] + mb[1]]);
                let s = ca * cb;
                for (o, v) in out.coords.iter_mut().zip(&r.coords) {
                    *o += &s * v;
                }
            }
        }
        Ok(out)
    }

    /// Degree of a top-dimensional class, normalized so that `deg(c2^n) = 1`.
    pub fn degree(&self, c: &GClass) -> Result<Rat> {
        if c.degree != self.dim() {
            return Err(Error::NotTopDegree {
                found: c.degree,
                top: self.dim(),
            });
        }
        Ok(&c.coords[0] / &self.point_norm)
    }

    /// `deg(p)` for a polynomial of weighted degree `2n`.
    pub fn degree_of_poly(&self, p: &WPoly) -> Result<Rat> {
        self.degree(&self.normal_form_in(p, self.dim())?)
    }

    /// Matrix `deg(x_i * y_j)` for bases of `A^k` and `A^(2n-k)`.
    pub fn poincare_pairing(&self, k: u32) -> Result<MatQ> {
        if k > self.dim() {
            return Err(Error::range(format!("degree {k} exceeds {}", self.dim())));
        }
        let left = self.piece_dim(k);
        let right = self.piece_dim(self.dim() - k);
        let mut m = MatQ::zeros(left, right);
        for i in 0..left {
            for j in 0..right {
                let prod = self.mul(
                    &self.basis_class(k, i)?,
                    &self.basis_class(self.dim() - k, j)?,
                )?;
                m.set(i, j, self.degree(&prod)?);
            }
        }
        Ok(m)
    }
}

/// Displays a class through its canonical polynomial lift.
pub struct ClassDisplay<'a>(pub &'a GRing, pub &'a GClass);

impl fmt::Display for ClassDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.to_poly(self.1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    fn p(s: &str) -> WPoly {
        WPoly::parse(&VarSet::chern(), s).unwrap()
    }

    #[test]
    fn complete_symmetric_small() {
        assert_eq!(complete_symmetric(0).unwrap(), p("1"));
        assert_eq!(complete_symmetric(2).unwrap(), p("x^2 - y"));
        assert_eq!(complete_symmetric(3).unwrap(), p("x^3 - 2*x*y"));
        assert!(complete_symmetric(-1).is_err());
    }

    #[test]
    fn complete_symmetric_matches_root_expansion() {
        // h_k(a, b) = sum_{i=0}^k a^i b^(k-i); compare after substituting
        // the roots a = 2, b = 3 (e1 = 5, e2 = 6).
        for k in 0..10i64 {
            let h = complete_symmetric(k).unwrap();
            let direct: i64 = (0..=k)
                .map(|i| 2i64.pow(i as u32) * 3i64.pow((k - i) as u32))
                .sum();
            let eval: Rat = h
                .terms()
                .map(|(m, c)| c * rat_int(5i64.pow(m[0]) * 6i64.pow(m[1])))
                .sum();
            assert_eq!(eval, rat_int(direct), "k = {k}");
        }
    }

    #[test]
    fn dims_small_rings() {
        let g = GRing::build(2).unwrap();
        let dims: Vec<_> = (0..=4).map(|k| g.piece_dim(k)).collect();
        assert_eq!(dims, [1, 1, 2, 1, 1]);
        let g3 = GRing::build(3).unwrap();
        assert_eq!(g3.piece_dim(2), 2);
        assert_eq!(g3.basis(2), vec![vec![2, 0], vec![0, 1]]);
        for n in 1..=8 {
            assert_eq!(GRing::build(n).unwrap().piece_dim(2 * n), 1);
        }
        assert!(GRing::build(0).is_err());
    }

    #[test]
    fn normal_forms() {
        for n in 1..=6u32 {
            let g = GRing::build(n).unwrap();
            assert!(g
                .normal_form(&complete_symmetric(n as i64 + 1).unwrap())
                .unwrap()
                .is_zero());
            if n >= 2 {
                assert!(g
                    .normal_form(&complete_symmetric(n as i64 + 2).unwrap())
                    .unwrap()
                    .is_zero());
            }
            let c1 = g.normal_form(&p("x")).unwrap();
            assert_eq!(g.to_poly(&c1), p("x"));
        }
        let g = GRing::build(2).unwrap();
        assert_eq!(g.to_poly(&g.normal_form(&p("x^3")).unwrap()), p("2*x*y"));
    }

    #[test]
    fn normal_form_rejects_bad_input() {
        let g = GRing::build(2).unwrap();
        assert!(matches!(g.normal_form(&p("x + y")), Err(Error::Usage(_))));
        assert!(matches!(g.normal_form(&p("x^5")), Err(Error::Usage(_))));
        assert!(g.normal_form(&p("0")).is_err());
        let other = VarSet::new(&["a", "b"], &[1, 2]).unwrap();
        assert!(g.normal_form(&WPoly::var(&other, 0)).is_err());
    }

    #[test]
    fn degrees() {
        for n in 1..=6u32 {
            let g = GRing::build(n).unwrap();
            assert_eq!(g.degree_of_poly(&p("y").pow(n)).unwrap(), rat_int(1));
        }
        let g2 = GRing::build(2).unwrap();
        assert_eq!(g2.degree_of_poly(&p("x^4")).unwrap(), rat_int(2));
        let g3 = GRing::build(3).unwrap();
        assert_eq!(g3.degree_of_poly(&p("x^6")).unwrap(), rat_int(5));
        let c1 = g3.normal_form(&p("x")).unwrap();
        assert_eq!(
            g3.degree(&c1),
            Err(Error::NotTopDegree { found: 1, top: 6 })
        );
    }

    #[test]
    fn poincare_duality() {
        for n in 1..=8u32 {
            let g = GRing::build(n).unwrap();
            for k in 0..=2 * n {
                let m = g.poincare_pairing(k).unwrap();
                assert_eq!(m.rows(), m.cols());
                assert_eq!(m.rank(), m.rows(), "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn shareable_across_threads() {
        fn check<T: Send + Sync>() {}
        check::<GRing>();
        check::<GClass>();
    }

    #[test]
    fn product_beyond_top_degree_is_rejected() {
        let g = GRing::build(2).unwrap();
        let top = g.basis_class(4, 0).unwrap();
        let c1 = g.basis_class(1, 0).unwrap();
        assert!(g.mul(&top, &c1).is_err());
    }
}
