//! Tautological models of `X`, `X x X` and `X^3` for a smooth cubic
//! `n`-fold `X`, with diagonal generators and their rewrite rules, a
//! cohomological model with a primitive sector, and the small-diagonal
//! decomposition.
//!
//! Notation: `h_a` is the hyperplane class pulled back from factor `a`,
//! `D_ab` the pulled-back diagonal, `D123 = D12 * D23` the small diagonal,
//! and `d_ab` the primitive part of the Kunneth decomposition of `[D_ab]`.

mod coh;
mod theorem;
mod x;
mod x3;
mod xx;

pub use coh::{
    a_coefficients, pushforward_13, small_diagonal_closed_form, small_diagonal_coh, Coh2Basis,
    Coh2Class, CohBasis, CohX3Class,
};
pub use theorem::{
    big_gamma3_chow, dual_pairing, gamma3_chow, gamma3_coh_check, product_theorem, rank_one_check,
    FormalCycle, ProductEvaluation, ProductEvaluator, TermContribution,
};
pub use x::{euler_from_chern, tangent_chern, XClass};
pub use x3::{x3_mul, X3Basis, X3Class};
pub use xx::{xx_mul, xx_ring_map_check, XXBasis, XXClass};

use std::collections::BTreeMap;

use std::fmt;

use crate::exact::Rat;
use crate::{Error, Result};

fn add_term<B: Ord>(terms: &mut BTreeMap<B, Rat>, b: B, c: Rat) {
    use num_traits::Zero;
    if c.is_zero() {
        return;
    }
    let slot = terms.entry(b).or_insert_with(Rat::zero);
    *slot += c;
    if slot.is_zero() {
        terms.retain(|_, v| !v.is_zero());
    }
}

/// An unordered pair of factors of `X^3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pair {
    P12,
    P13,
    P23,
}

impl Pair {
    pub const ALL: [Pair; 3] = [Pair::P12, Pair::P13, Pair::P23];

    /// Zero-based factor indices `(a, b)` with `a < b`.
    pub fn indices(self) -> (usize, usize) {
        match self {
            Pair::P12 => (0, 1),
            Pair::P13 => (0, 2),
            Pair::P23 => (1, 2),
        }
    }

    /// The remaining factor.
    pub fn complement(self) -> usize {
        3 - self.indices().0 - self.indices().1
    }

    pub fn from_indices(a: usize, b: usize) -> Option<Pair> {
        match (a.min(b), a.max(b)) {
            (0, 1) => Some(Pair::P12),
            (0, 2) => Some(Pair::P13),
            (1, 2) => Some(Pair::P23),
            _ => None,
        }
    }

    /// Index shared by two distinct pairs.
    pub fn shared(self, other: Pair) -> Option<usize> {
        if self == other {
            return None;
        }
        let (a, b) = self.indices();
        let (c, d) = other.indices();
        [a, b].into_iter().find(|i| *i == c || *i == d)
    }

    fn label(self) -> &'static str {
        match self {
            Pair::P12 => "12",
            Pair::P13 => "13",
            Pair::P23 => "23",
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::range("needs n >= 1"));
    }
    Ok(())
}

fn same_n(a: u32, b: u32) -> Result<()> {
    if a != b {
        return Err(Error::usage(format!(
            "classes over different n: {a} and {b}"
        )));
    }
    Ok(())
}

/// `h1^e1*h2^e2*...` with the given variable prefix; empty for the unit.
fn fmt_monomial(exps: &[u32]) -> String {
    exps.iter()
        .enumerate()
        .filter(|(_, e)| **e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("h{}", i + 1)
            } else {
                format!("h{}^{e}", i + 1)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Sum of `coefficient * label` terms in the order given.
fn fmt_sum<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a Rat)>,
) -> fmt::Result {
    use num_traits::{One, Signed};
    let mut first = true;
    for (label, c) in terms {
        let sep = match (first, c.is_negative()) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        let a = c.abs();
        let body = match (label.is_empty(), a.is_one()) {
            (true, _) => crate::exact::fmt_rat(&a),
            (false, true) => label,
            (false, false) => format!("{}*{label}", crate::exact::fmt_rat(&a)),
        };
        write!(f, "{sep}{body}")?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs() {
        assert_eq!(Pair::P13.complement(), 1);
        assert_eq!(Pair::P12.shared(Pair::P23), Some(1));
        assert_eq!(Pair::P12.shared(Pair::P12), None);
        assert_eq!(Pair::from_indices(2, 0), Some(Pair::P13));
    }
}
