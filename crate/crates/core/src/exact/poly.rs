use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_traits::{One, Signed, Zero};

use super::rat::Rat;
use crate::{Error, Result};

/// Named variables with positive integer weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl VarSet {
    pub fn new(names: &[&str], weights: &[u32]) -> Result<Arc<Self>> {
        if names.len() != weights.len() {
            return Err(Error::usage("names and weights differ in length"));
        }
        if weights.contains(&0) {
            return Err(Error::usage("variable weights must be positive"));
        }
        for (i, n) in names.iter().enumerate() {
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::usage(format!("invalid variable name {n:?}")));
            }
            if names[..i].contains(n) {
                return Err(Error::usage(format!("duplicate variable {n:?}")));
            }
        }
        Ok(Arc::new(VarSet {
            names: names.iter().map(|s| s.to_string()).collect(),
            weights: weights.to_vec(),
        }))
    }

    /// `x = c1` of weight 1 and `y = c2` of weight 2.
    pub fn chern() -> Arc<Self> {
        static CHERN: OnceLock<Arc<VarSet>> = OnceLock::new();
        CHERN
            .get_or_init(|| VarSet::new(&["x", "y"], &[1, 2]).unwrap())
            .clone()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn weighted_degree(&self, exps: &[u32]) -> u32 {
        exps.iter().zip(&self.weights).map(|(e, w)| e * w).sum()
    }
}

/// Exponent vector, one entry per variable.
pub type Monomial = Vec<u32>;

/// Sparse polynomial with rational coefficients in weighted variables.
///
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WPoly {
    vars: Arc<VarSet>,
    terms: BTreeMap<Monomial, Rat>,
}

impl WPoly {
    pub fn zero(vars: &Arc<VarSet>) -> Self {
        WPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Arc<VarSet>, c: Rat) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn one(vars: &Arc<VarSet>) -> Self {
        Self::constant(vars, Rat::one())
    }

    pub fn var(vars: &Arc<VarSet>, i: usize) -> Self {
        let mut exps = vec![0; vars.len()];
        exps[i] = 1;
        Self::monomial(vars, exps, Rat::one())
    }

    /// Panics if `exps` does not have one entry per variable.
    pub fn monomial(vars: &Arc<VarSet>, exps: Monomial, c: Rat) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    /// Weighted degree when every term has the same one; `None` for the zero
    /// polynomial or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| self.vars.weighted_degree(m));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| self.vars.weighted_degree(m) == d)
    }

    pub fn graded_component(&self, d: u32) -> WPoly {
        WPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| self.vars.weighted_degree(m) == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn same_vars(&self, other: &WPoly) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::usage("polynomials over different variable sets"))
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &WPoly) -> Result<WPoly> {
        self.same_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &WPoly) -> Result<WPoly> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &WPoly) -> Result<WPoly> {
        self.same_vars(other)?;
        let mut out = WPoly::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(m, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> WPoly {
        if c.is_zero() {
            return WPoly::zero(&self.vars);
        }
        WPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> WPoly {
        let mut acc = WPoly::one(&self.vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Terms in canonical order: decreasing weighted degree, then
    /// lexicographically decreasing exponents.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(m, _)| (Reverse(self.vars.weighted_degree(m)), Reverse(*m)));
        v
    }

    /// Parses the canonical text form, e.g. `18*x^2*y + 9*y^2` or `1/3*x - y`.
    pub fn parse(vars: &Arc<VarSet>, s: &str) -> Result<WPoly> {
        Parser {
            src: s.as_bytes(),
            pos: 0,
            vars,
        }
        .poly()
    }
}

/// Product of two polynomials over the same variable set.
pub fn poly_mul(a: &WPoly, b: &WPoly) -> Result<WPoly> {
    a.checked_mul(b)
}

impl Neg for &WPoly {
    type Output = WPoly;
    fn neg(self) -> WPoly {
        WPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

// Operator forms panic on mismatched variable sets; use the checked_* methods
// when the inputs are not known to share variables.
impl Add for &WPoly {
    type Output = WPoly;
    fn add(self, rhs: &WPoly) -> WPoly {
        self.checked_add(rhs).expect("mismatched variable sets")
    }
}

impl Sub for &WPoly {
    type Output = WPoly;
    fn sub(self, rhs: &WPoly) -> WPoly {
        self.checked_sub(rhs).expect("mismatched variable sets")
    }
}

impl Mul for &WPoly {
    type Output = WPoly;
    fn mul(self, rhs: &WPoly) -> WPoly {
        self.checked_mul(rhs).expect("mismatched variable sets")
    }
}

impl fmt::Display for WPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut factors = Vec::new();
            let constant = m.iter().all(|&e| e == 0);
            if constant || !mag.is_one() {
                factors.push(mag.to_string());
            }
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars.name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.vars.name(i), e)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a Arc<VarSet>,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<num_bigint::BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("bad number"))
    }

    fn poly(&mut self) -> Result<WPoly> {
        let mut acc = WPoly::zero(self.vars);
        let mut sign = Rat::one();
        match self.peek() {
            Some(b'-') => {
                sign = -sign;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            None => return Err(self.err("empty polynomial")),
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc = &acc + &t.scale(&sign);
            match self.peek() {
                Some(b'+') => sign = Rat::one(),
                Some(b'-') => sign = -Rat::one(),
                None => return Ok(acc),
                Some(_) => return Err(self.err("unexpected character")),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<WPoly> {
        let mut acc = WPoly::one(self.vars);
        loop {
            let f = self.factor()?;
            acc = &acc * &f;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<WPoly> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.number()?;
                let mut den = num_bigint::BigInt::one();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    den = self.number()?;
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                }
                Ok(WPoly::constant(self.vars, Rat::new(num, den)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let idx = self
                    .vars
                    .index_of(name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
                let mut e = 1u32;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    e = self
                        .number()?
                        .try_into()
                        .map_err(|_| self.err("exponent out of range"))?;
                }
                let mut exps = vec![0; self.vars.len()];
                exps[idx] = e;
                Ok(WPoly::monomial(self.vars, exps, Rat::one()))
            }
            _ => Err(self.err("expected a factor")),
        }
    }
}
