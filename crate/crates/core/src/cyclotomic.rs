//! Exact arithmetic in the ring of cyclotomic integers `Z[ζ_n]`.
//!
//! An element is stored as its residue modulo the cyclotomic polynomial
//! `Φ_n(x)`, i.e. as the coefficient vector in the basis
//! `1, ζ, ζ², …, ζ^(φ(n)−1)`. Because `Φ_n` is the minimal polynomial of
//! `ζ_n`, two elements are equal as complex numbers exactly when their
//! coefficient vectors coincide.
//!
//! Coefficients are `i64`. All arithmetic is overflow-checked: the `try_*`
//! methods report [`CycloError::Overflow`], the operator impls panic. For
//! character tables of groups of a few thousand elements the coefficients
//! stay far below the 64-bit range.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("value is not a rational integer (non-constant coefficients present)")]
    NotInteger,
    #[error("coefficients are not all divisible by {0}")]
    NotDivisible(i64),
    #[error("root orders differ: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("cyclotomic coefficient overflow")]
    Overflow,
}

pub type CycloResult<T> = Result<T, CycloError>;

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    assert!(n >= 1, "euler_phi: n must be positive");
    let mut m = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn phi_cache() -> &'static RwLock<HashMap<u32, Arc<[i64]>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<[i64]>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Exact quotient of `num` by the monic polynomial `den` (ascending
/// coefficients). Panics if the division leaves a remainder.
fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        if c != 0 {
            for (t, &d) in den.iter().enumerate() {
                rem[k + t] -= c * d;
            }
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "inexact polynomial division");
    quot
}

fn compute_cyclotomic(n: u32) -> Vec<i64> {
    // x^n - 1 divided by every Φ_d with d | n, d < n.
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            poly = exact_div_monic(&poly, &cyclo_poly_shared(d));
        }
    }
    poly
}

fn cyclo_poly_shared(n: u32) -> Arc<[i64]> {
    if let Some(p) = phi_cache().read().expect("cyclotomic cache poisoned").get(&n) {
        return Arc::clone(p);
    }
    let p: Arc<[i64]> = compute_cyclotomic(n).into();
    phi_cache()
        .write()
        .expect("cyclotomic cache poisoned")
        .entry(n)
        .or_insert(p)
        .clone()
}

/// The `n`-th cyclotomic polynomial `Φ_n(x)`, coefficients in ascending degree.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic_polynomial: n must be positive");
    cyclo_poly_shared(n).to_vec()
}

/// Reduce a polynomial whose exponents are already folded modulo `n`
/// (so `buf.len() == n`) to its canonical residue modulo `Φ_n`.
fn reduce_folded(n: u32, mut buf: Vec<i64>) -> CycloResult<Vec<i64>> {
    debug_assert_eq!(buf.len(), n as usize);
    let phi = cyclo_poly_shared(n);
    let d = phi.len() - 1;
    for k in (d..buf.len()).rev() {
        let c = buf[k];
        if c == 0 {
            continue;
        }
        for (t, &p) in phi.iter().enumerate() {
            if p != 0 {
                let delta = c.checked_mul(p).ok_or(CycloError::Overflow)?;
                let slot = &mut buf[k - d + t];
                *slot = slot.checked_sub(delta).ok_or(CycloError::Overflow)?;
            }
        }
    }
    buf.truncate(d);
    Ok(buf)
}

/// An element of `Z[ζ_n]` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloInt {
    order: u32,
    coeffs: Vec<i64>,
}

impl CycloInt {
    pub fn zero(n: u32) -> Self {
        assert!(n >= 1, "root order must be positive");
        CycloInt { order: n, coeffs: vec![0; euler_phi(n) as usize] }
    }

    pub fn one(n: u32) -> Self {
        Self::from_integer(n, 1)
    }

    pub fn from_integer(n: u32, c: i64) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[0] = c;
        z
    }

    /// `ζ_n^k`, for any integer `k`.
    pub fn root_power(n: u32, k: i64) -> Self {
        Self::from_terms(n, &[(1, k)]).expect("a single root power cannot overflow")
    }

    /// `Σ c·ζ_n^p` for arbitrary (unreduced) `(coefficient, power)` pairs.
    pub fn from_terms(n: u32, terms: &[(i64, i64)]) -> CycloResult<Self> {
        assert!(n >= 1, "root order must be positive");
        let mut buf = vec![0i64; n as usize];
        for &(c, p) in terms {
            let slot = &mut buf[p.rem_euclid(n as i64) as usize];
            *slot = slot.checked_add(c).ok_or(CycloError::Overflow)?;
        }
        Ok(CycloInt { order: n, coeffs: reduce_folded(n, buf)? })
    }

    /// Builds an element from an already canonical coefficient vector.
    pub fn from_canonical(n: u32, coeffs: Vec<i64>) -> Option<Self> {
        (n >= 1 && coeffs.len() == euler_phi(n) as usize).then_some(CycloInt { order: n, coeffs })
    }

    pub fn root_order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Nonzero canonical coefficients as `(coefficient, power)` pairs.
    pub fn terms(&self) -> Vec<(i64, i64)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (c, k as i64))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check_order(&self, other: &Self) -> CycloResult<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(CycloError::OrderMismatch(self.order, other.order))
        }
    }

    pub fn try_add(&self, other: &Self) -> CycloResult<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(CycloError::Overflow))
            .collect::<CycloResult<_>>()?;
        Ok(CycloInt { order: self.order, coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> CycloResult<Self> {
        self.try_add(&other.try_neg()?)
    }

    pub fn try_neg(&self) -> CycloResult<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.checked_neg().ok_or(CycloError::Overflow))
            .collect::<CycloResult<_>>()?;
        Ok(CycloInt { order: self.order, coeffs })
    }

    pub fn try_mul(&self, other: &Self) -> CycloResult<Self> {
        self.check_order(other)?;
        let mut acc = ProductAccumulator::new(self.order);
        acc.add_product(self, other, 1)?;
        acc.finish()
    }

    pub fn try_scale(&self, m: i64) -> CycloResult<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.checked_mul(m).ok_or(CycloError::Overflow))
            .collect::<CycloResult<_>>()?;
        Ok(CycloInt { order: self.order, coeffs })
    }

    /// Complex conjugation, `ζ^k ↦ ζ^(n−k)`.
    pub fn conj(&self) -> Self {
        let terms: Vec<(i64, i64)> = self.terms().into_iter().map(|(c, k)| (c, -k)).collect();
        Self::from_terms(self.order, &terms).expect("conjugation overflow")
    }

    pub fn as_integer(&self) -> CycloResult<i64> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Ok(self.coeffs[0])
        } else {
            Err(CycloError::NotInteger)
        }
    }

    pub fn divide_by_integer(&self, m: i64) -> CycloResult<Self> {
        assert!(m >= 1, "divisor must be positive");
        if self.coeffs.iter().any(|c| c % m != 0) {
            return Err(CycloError::NotDivisible(m));
        }
        Ok(CycloInt { order: self.order, coeffs: self.coeffs.iter().map(|c| c / m).collect() })
    }
}

impl fmt::Debug for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloInt(n={}, {:?})", self.order, self.coeffs)
    }
}

impl fmt::Display for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (c, k)) in terms.into_iter().enumerate() {
            let sign = if c < 0 { "-" } else if idx > 0 { "+" } else { "" };
            let mag = c.abs();
            if idx > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            match (k, mag) {
                (0, _) => write!(f, "{mag}")?,
                (_, 1) => write!(f, "z{}^{k}", self.order)?,
                _ => write!(f, "{mag}*z{}^{k}", self.order)?,
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&CycloInt> for &CycloInt {
            type Output = CycloInt;
            fn $method(self, rhs: &CycloInt) -> CycloInt {
                self.$try(rhs).unwrap_or_else(|e| panic!("CycloInt::{}: {e}", stringify!($method)))
            }
        }
        impl $tr for CycloInt {
            type Output = CycloInt;
            fn $method(self, rhs: CycloInt) -> CycloInt {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &CycloInt {
    type Output = CycloInt;
    fn neg(self) -> CycloInt {
        self.try_neg().expect("CycloInt::neg overflow")
    }
}

impl Neg for CycloInt {
    type Output = CycloInt;
    fn neg(self) -> CycloInt {
        -&self
    }
}

/// Accumulates `Σ w·a·b` modulo `x^n − 1` and reduces once at the end.
///
/// This is the inner loop of every character inner product; deferring the
/// reduction modulo `Φ_n` until [`finish`](Self::finish) keeps it cheap.
#[derive(Debug, Clone)]
pub struct ProductAccumulator {
    order: u32,
    buf: Vec<i64>,
}

impl ProductAccumulator {
    pub fn new(n: u32) -> Self {
        ProductAccumulator { order: n, buf: vec![0; n as usize] }
    }

    pub fn add_product(&mut self, a: &CycloInt, b: &CycloInt, weight: i64) -> CycloResult<()> {
        if a.order != self.order {
            return Err(CycloError::OrderMismatch(self.order, a.order));
        }
        if b.order != self.order {
            return Err(CycloError::OrderMismatch(self.order, b.order));
        }
        let n = self.buf.len();
        for (s, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let wx = x.checked_mul(weight).ok_or(CycloError::Overflow)?;
            for (t, &y) in b.coeffs.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let mut k = s + t;
                if k >= n {
                    k -= n;
                }
                let term = wx.checked_mul(y).ok_or(CycloError::Overflow)?;
                self.buf[k] = self.buf[k].checked_add(term).ok_or(CycloError::Overflow)?;
            }
        }
        Ok(())
    }

    pub fn finish(self) -> CycloResult<CycloInt> {
        Ok(CycloInt { order: self.order, coeffs: reduce_folded(self.order, self.buf)? })
    }
}
