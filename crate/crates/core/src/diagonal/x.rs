use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};

use super::{check_n, same_n};
use crate::exact::{rat_int, Rat};
use crate::{Error, Result};

/// Element of `R*(X) = Q[h]/(h^(n+1))`, `deg h^n = 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XClass {
    n: u32,
    coeffs: Vec<Rat>,
}

impl XClass {
    pub fn zero(n: u32) -> Self {
        XClass {
            n,
            coeffs: vec![Rat::zero(); n as usize + 1],
        }
    }

    /// `h^k`, zero once `k > n`.
    pub fn h_power(n: u32, k: u32) -> Self {
        let mut x = Self::zero(n);
        if k <= n {
            x.coeffs[k as usize] = Rat::one();
        }
        x
    }

    pub fn from_coeffs(n: u32, coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.len() != n as usize + 1 {
            return Err(Error::usage(format!(
                "expected {} coefficients, got {}",
                n + 1,
                coeffs.len()
            )));
        }
        Ok(XClass { n, coeffs })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn coeff(&self, k: u32) -> Rat {
        self.coeffs
            .get(k as usize)
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        XClass {
            n: self.n,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn checked_add(&self, other: &XClass) -> Result<Self> {
        same_n(self.n, other.n)?;
        Ok(XClass {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_mul(&self, other: &XClass) -> Result<Self> {
        same_n(self.n, other.n)?;
        let mut out = Self::zero(self.n);
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate().take(self.coeffs.len() - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        Ok(out)
    }

    /// `deg` of the `h^n` component.
    pub fn degree(&self) -> Rat {
        &self.coeffs[self.n as usize] * rat_int(3)
    }
}

impl Add for &XClass {
    type Output = XClass;
    fn add(self, rhs: &XClass) -> XClass {
        self.checked_add(rhs).expect("XClass over different n")
    }
}

impl Mul for &XClass {
    type Output = XClass;
    fn mul(self, rhs: &XClass) -> XClass {
        self.checked_mul(rhs).expect("XClass over different n")
    }
}

impl fmt::Display for XClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let label = match k {
                    0 => String::new(),
                    1 => "h".to_string(),
                    _ => format!("h^{k}"),
                };
                (label, c)
            });
        super::fmt_sum(f, terms)
    }
}

/// Total Chern class `(1 + h)^(n+2) / (1 + 3h)` of the tangent bundle.
pub fn tangent_chern(n: u32) -> Result<XClass> {
    check_n(n)?;
    let one_plus_h = XClass::from_coeffs(n, {
        let mut v = vec![Rat::zero(); n as usize + 1];
        v[0] = Rat::one();
        v[1] = Rat::one();
        v
    })?;
    let mut num = XClass::h_power(n, 0);
    for _ in 0..n + 2 {
        num = &num * &one_plus_h;
    }
    // 1 / (1 + 3h) = sum (-3h)^k, truncated by h^(n+1) = 0.
    let inv = XClass::from_coeffs(n, (0..=n).map(|k| rat_int((-3i64).pow(k))).collect())?;
    Ok(&num * &inv)
}

/// `deg c_n(T_X)`, memoized per `n`.
pub fn euler_from_chern(n: u32) -> Result<Rat> {
    static CACHE: OnceLock<Mutex<BTreeMap<u32, Rat>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(chi) = cache.lock().expect("euler cache poisoned").get(&n) {
        return Ok(chi.clone());
    }
    let chi = tangent_chern(n)?.degree();
    cache
        .lock()
        .expect("euler cache poisoned")
        .insert(n, chi.clone());
    Ok(chi)
}
