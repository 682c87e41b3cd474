use std::sync::Arc;

use super::ring::{GClass, GRing};
use crate::exact::{Rat, VarSet, WPoly};
use crate::{Error, Result};

fn root_vars() -> Arc<VarSet> {
    VarSet::new(&["a", "b"], &[1, 1]).expect("valid variable set")
}

/// Rewrites a symmetric polynomial in the roots `a, b` as a polynomial in
/// `x = a + b` and `y = ab` by repeatedly stripping the lex-leading term.
pub fn symmetric_to_elementary(p: &WPoly) -> Result<WPoly> {
    if p.vars().len() != 2 {
        return Err(Error::usage("expected a polynomial in two roots"));
    }
    let roots = p.vars().clone();
    let chern = VarSet::chern();
    let e1 = &WPoly::var(&roots, 0) + &WPoly::var(&roots, 1);
    let e2 = &WPoly::var(&roots, 0) * &WPoly::var(&roots, 1);
    let mut rest = p.clone();
    let mut out = WPoly::zero(&chern);
    while let Some((lead, c)) = rest.terms().last().map(|(m, c)| (m.clone(), c.clone())) {
        let (hi, lo) = (lead[0], lead[1]);
        if hi < lo {
            return Err(Error::usage(format!("polynomial {p} is not symmetric")));
        }
        let piece = (&e1.pow(hi - lo) * &e2.pow(lo)).scale(&c);
        rest = &rest - &piece;
        out = &out + &WPoly::monomial(&chern, vec![hi - lo, lo], c);
    }
    Ok(out)
}

/// Total Chern class `[c_0, ..., c_(m+1)]` of `Sym^m` of a rank-2 bundle
/// with Chern classes `x = c1`, `y = c2`, via the splitting principle: the
/// roots of `Sym^m` are `i a + j b` for `i + j = m`.
pub fn sym_power_chern(m: u32) -> Result<Vec<WPoly>> {
    if m == 0 {
        return Err(Error::range("symmetric power needs m >= 1"));
    }
    let roots = root_vars();
    let total = (0..=m).fold(WPoly::one(&roots), |acc, i| {
        let mut root = WPoly::one(&roots);
        for (var, coef) in [(0, i), (1, m - i)] {
            if coef > 0 {
                root = &root + &WPoly::var(&roots, var).scale(&Rat::from_integer(coef.into()));
            }
        }
        &acc * &root
    });
    (0..=m + 1)
        .map(|k| symmetric_to_elementary(&total.graded_component(k)))
        .collect()
}

/// `c_4(Sym^3)`, the class of the Fano variety of lines as a polynomial in
/// `c1, c2`.
pub fn fano_polynomial() -> WPoly {
    sym_power_chern(3)
        .expect("m = 3 is in range")
        .swap_remove(4)
}

/// Class of the Fano variety of lines of a cubic `n`-fold in `A^4(Gr(2, n+2))`.
pub fn fano_class(ring: &GRing) -> Result<GClass> {
    if ring.n() < 2 {
        return Err(Error::range("the Fano class needs n >= 2"));
    }
    let class = ring.normal_form(&fano_polynomial())?;
    if class.is_zero() {
        return Err(Error::check("Fano class reduced to zero"));
    }
    Ok(class)
}
