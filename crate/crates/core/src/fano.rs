//! Numerical tautological ring of the Fano variety of lines `F`, seen
//! through its class in the Grassmannian.
//!
//! Everything here is computed inside `A*(Gr(2, n+2))`: the intersection
//! number of two tautological classes on `F` is `deg(x * y * [F])`.

use num_traits::{One, Zero};

use crate::exact::{MatQ, Monomial, Rat, VarSet, WPoly};
use crate::grassmann::{fano_class, fano_polynomial, GRing};
use crate::{Error, Result};

/// `dim F = 2(n - 2)`.
pub fn fano_dim(n: u32) -> u32 {
    2 * n.saturating_sub(2)
}

/// Intersection matrix between codimension `k` and `2(n-2) - k`
/// tautological classes on `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoPairing {
    pub n: u32,
    pub k: u32,
    pub left: Vec<Monomial>,
    pub right: Vec<Monomial>,
    pub matrix: MatQ,
}

impl FanoPairing {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// The pairing induced on the images of both sides is perfect: the rank
    /// equals the dimension of each side modulo its kernel.
    pub fn is_perfect_on_images(&self) -> bool {
        let rank = self.rank();
        let left_image = self.matrix.rows() - self.matrix.transpose().kernel_basis().len();
        let right_image = self.matrix.cols() - self.matrix.kernel_basis().len();
        rank == left_image && rank == right_image
    }
}

fn check_codim(ring: &GRing, k: u32) -> Result<()> {
    if ring.n() < 2 {
        return Err(Error::range("the Fano variety needs n >= 2"));
    }
    if k > fano_dim(ring.n()) {
        return Err(Error::range(format!(
            "codimension {k} exceeds dim F = {}",
            fano_dim(ring.n())
        )));
    }
    Ok(())
}

pub fn fano_pairing(ring: &GRing, k: u32) -> Result<FanoPairing> {
    check_codim(ring, k)?;
    let f = fano_class(ring)?;
    let dual = fano_dim(ring.n()) - k;
    let (rows, cols) = (ring.piece_dim(k), ring.piece_dim(dual));
    let mut matrix = MatQ::zeros(rows, cols);
    for j in 0..cols {
        let yf = ring.mul(&ring.basis_class(dual, j)?, &f)?;
        for i in 0..rows {
            let top = ring.mul(&ring.basis_class(k, i)?, &yf)?;
            matrix.set(i, j, ring.degree(&top)?);
        }
    }
    Ok(FanoPairing {
        n: ring.n(),
        k,
        left: ring.basis(k),
        right: ring.basis(dual),
        matrix,
    })
}

/// Rank of the image of `A^k(G)` in the numerical ring of `F`.
pub fn taut_rank_f(ring: &GRing, k: u32) -> Result<usize> {
    Ok(fano_pairing(ring, k)?.rank())
}

/// `taut_rank_f` for every `k = 0..=2(n-2)`.
pub fn taut_ranks(ring: &GRing) -> Result<Vec<usize>> {
    (0..=fano_dim(ring.n()))
        .map(|k| taut_rank_f(ring, k))
        .collect()
}

/// A weighted degree `n - 1` polynomial in `c1, c2` whose product with
/// `[F]` vanishes in `A^(n+3)(G)`, normalized so that its `c1^(n-1)`
/// coefficient is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtraRelation {
    pub n: u32,
    pub p: WPoly,
    pub kernel_dim: usize,
}

/// Kernel of `A^(n-1)(G) -> A^(n+3)(G)`, `x -> x [F]`; returns the first
/// kernel basis vector with a nonzero `c1^(n-1)` coordinate, rescaled so
/// that coordinate is 1.
pub fn extra_relation(ring: &GRing) -> Result<ExtraRelation> {
    let n = ring.n();
    if n < 3 {
        return Err(Error::range(
            "extra relation needs n >= 3 (target degree n + 3 <= 2n)",
        ));
    }
    let f = fano_class(ring)?;
    let (src, dst) = (n - 1, n + 3);
    let mut m = MatQ::zeros(ring.piece_dim(dst), ring.piece_dim(src));
    for j in 0..ring.piece_dim(src) {
        let img = ring.mul(&ring.basis_class(src, j)?, &f)?;
        for (i, v) in img.coords().iter().enumerate() {
            m.set(i, j, v.clone());
        }
    }
    let kernel = m.kernel_basis();
    if kernel.is_empty() {
        return Err(Error::check(format!(
            "multiplication by [F] is injective on A^{src} for n = {n}"
        )));
    }
    let basis = ring.basis(src);
    let lead = basis
        .iter()
        .position(|mono| *mono == [src, 0])
        .ok_or_else(|| Error::check("c1^(n-1) is not a basis monomial"))?;
    let v = kernel.iter().find(|v| !v[lead].is_zero()).ok_or_else(|| {
        Error::check(format!(
            "no kernel element has a nonzero c1^{src} coefficient"
        ))
    })?;
    let scale = v[lead].recip();
    let vars = VarSet::chern();
    let p = basis
        .into_iter()
        .zip(v)
        .fold(WPoly::zero(&vars), |acc, (mono, c)| {
            &acc + &WPoly::monomial(&vars, mono, c * &scale)
        });
    // Second route: multiply polynomials first, then reduce.
    if !ring
        .normal_form_in(&(&p * &fano_polynomial()), dst)?
        .is_zero()
    {
        return Err(Error::check("P * [F] does not reduce to zero"));
    }
    if p.coeff(&[src, 0]) != Rat::one() {
        return Err(Error::check("leading coefficient lost in normalization"));
    }
    Ok(ExtraRelation {
        n,
        p,
        kernel_dim: kernel.len(),
    })
}

fn monomials_of_degree(d: u32) -> Vec<Monomial> {
    (0..=d / 2).map(|b| vec![d - 2 * b, b]).collect()
}

/// Cofactors `(A, B)` with `r = A h_(n+1) + B h_(n+2)`, found by an exact
/// linear solve over all monomial cofactors of the right weights; `None`
/// when `r` is not in the ideal. For `deg r = n + 3` the cofactor spaces
/// are `{x^2, y}` and `{x}`.
pub fn ideal_decomposition(ring: &GRing, r: &WPoly) -> Result<Option<(WPoly, WPoly)>> {
    let vars = VarSet::chern();
    if **r.vars() != *vars {
        return Err(Error::usage(
            "polynomial is not in the Chern variables x, y",
        ));
    }
    if r.is_zero() {
        return Ok(Some((WPoly::zero(&vars), WPoly::zero(&vars))));
    }
    let d = r
        .homogeneous_degree()
        .ok_or_else(|| Error::usage("ideal_decomposition needs a homogeneous polynomial"))?;
    let n = ring.n();
    let [h1, h2] = ring.relations();
    let mut columns: Vec<(usize, Monomial)> = Vec::new();
    for (which, shift) in [(0usize, n + 1), (1, n + 2)] {
        if d >= shift {
            columns.extend(
                monomials_of_degree(d - shift)
                    .into_iter()
                    .map(|m| (which, m)),
            );
        }
    }
    let targets = monomials_of_degree(d);
    let generators: Vec<WPoly> = columns
        .iter()
        .map(|(which, m)| &WPoly::monomial(&vars, m.clone(), Rat::one()) * [h1, h2][*which])
        .collect();
    let mat = MatQ::from_fn(targets.len(), columns.len(), |i, j| {
        generators[j].coeff(&targets[i])
    });
    let rhs: Vec<Rat> = targets.iter().map(|t| r.coeff(t)).collect();
    let Some(x) = mat.solve_linear(&rhs)? else {
        return Ok(None);
    };
    let mut cof = [WPoly::zero(&vars), WPoly::zero(&vars)];
    for ((which, m), c) in columns.into_iter().zip(x) {
        cof[which] = &cof[which] + &WPoly::monomial(&vars, m, c);
    }
    let [a, b] = cof;
    Ok(Some((a, b)))
}
