//! Exact arithmetic over the divisor lattice.
//!
//! Everything here works with arbitrary-precision integers. The reciprocal
//! `p ↦ 1/p` never appears as a stored value; it is applied as an exact
//! division that fails loudly when the dividend is not a multiple of `p`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Ascending list of the positive divisors of `n`.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut q = 1;
    while q * q <= n {
        if n % q == 0 {
            small.push(q);
            if q * q != n {
                large.push(n / q);
            }
        }
        q += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Prime factorisation by trial division, as `(prime, exponent)` pairs.
fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn mobius(n: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if f.len() % 2 == 0 { 1 } else { -1 })
}

pub fn totient(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Zero);
    }
    Ok(factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1)))
}

/// An exact integer-valued function on the divisors of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorFunction {
    n: u64,
    values: BTreeMap<u64, BigInt>,
}

impl DivisorFunction {
    pub fn from_fn(n: u64, mut f: impl FnMut(u64) -> BigInt) -> Result<Self> {
        let values = divisors(n)?.into_iter().map(|p| (p, f(p))).collect();
        Ok(DivisorFunction { n, values })
    }

    pub fn zero(n: u64) -> Result<Self> {
        Self::from_fn(n, |_| BigInt::zero())
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn get(&self, p: u64) -> Result<&BigInt> {
        self.values
            .get(&p)
            .ok_or(Error::NotADivisor { p, n: self.n })
    }

    pub fn set(&mut self, p: u64, value: BigInt) -> Result<()> {
        match self.values.get_mut(&p) {
            Some(slot) => {
                *slot = value;
                Ok(())
            }
            None => Err(Error::NotADivisor { p, n: self.n }),
        }
    }

    /// Divisors paired with values, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.values.iter().map(|(&p, v)| (p, v))
    }

    /// `f ⋆ g` evaluated on every divisor of `n`.
    pub fn convolve(&self, g: impl Fn(u64) -> BigInt) -> DivisorFunction {
        let values = self
            .values
            .keys()
            .map(|&p| (p, convolve_at(self, &g, p)))
            .collect();
        DivisorFunction { n: self.n, values }
    }

    /// `p ↦ f(p) / p`, failing if some value is not a multiple of its index.
    pub fn divide_by_index(&self) -> Result<DivisorFunction> {
        let mut values = BTreeMap::new();
        for (&p, v) in &self.values {
            let bp = BigInt::from(p);
            if !(v % &bp).is_zero() {
                return Err(Error::Divisibility {
                    p,
                    value: v.to_string(),
                });
            }
            values.insert(p, v / bp);
        }
        Ok(DivisorFunction { n: self.n, values })
    }
}

fn convolve_at(f: &DivisorFunction, g: &impl Fn(u64) -> BigInt, p: u64) -> BigInt {
    f.values
        .iter()
        .filter(|(&q, _)| p % q == 0)
        .map(|(&q, v)| v * g(p / q))
        .sum()
}

/// `Σ_{q|p} f(q)·g(p/q)`.
pub fn dirichlet_convolve(f: &DivisorFunction, g: impl Fn(u64) -> BigInt, at: u64) -> Result<BigInt> {
    if at == 0 || f.n % at != 0 {
        return Err(Error::NotADivisor { p: at, n: f.n });
    }
    Ok(convolve_at(f, &g, at))
}

/// The constant function 𝟙.
pub fn one(_: u64) -> BigInt {
    BigInt::one()
}

/// μ as an arithmetic function (argument is always positive at call sites).
pub fn mu(p: u64) -> BigInt {
    BigInt::from(mobius(p).expect("positive argument"))
}

/// φ as an arithmetic function.
pub fn phi(p: u64) -> BigInt {
    BigInt::from(totient(p).expect("positive argument"))
}

pub fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

/// Lucas numbers L(0..=n) with L(0)=2, L(1)=1.
pub fn lucas_table(n: usize) -> Vec<BigInt> {
    let mut t = vec![BigInt::from(2), BigInt::one()];
    while t.len() <= n {
        let k = t.len();
        let next = &t[k - 1] + &t[k - 2];
        t.push(next);
    }
    t.truncate(n + 1);
    t
}

pub fn lucas(n: usize) -> BigInt {
    lucas_table(n).pop().expect("non-empty table")
}

/// Perrin numbers P(0..=n) with P(0)=3, P(1)=0, P(2)=2.
pub fn perrin_table(n: usize) -> Vec<BigInt> {
    let mut t = vec![BigInt::from(3), BigInt::zero(), BigInt::from(2)];
    while t.len() <= n {
        let k = t.len();
        let next = &t[k - 2] + &t[k - 3];
        t.push(next);
    }
    t.truncate(n + 1);
    t
}

pub fn perrin(n: usize) -> BigInt {
    perrin_table(n).pop().expect("non-empty table")
}

/// Number of binary Lyndon words of length `p` (Witt formula).
pub fn lyndon_count(p: u64) -> Result<BigInt> {
    let x = DivisorFunction::from_fn(p, pow2)?;
    let aperiodic = dirichlet_convolve(&x, mu, p)?;
    exact_div(aperiodic, p)
}

/// Number of binary necklaces of length `n` (Burnside).
pub fn necklace_count(n: u64) -> Result<BigInt> {
    let x = DivisorFunction::from_fn(n, pow2)?;
    let fixed = dirichlet_convolve(&x, phi, n)?;
    exact_div(fixed, n)
}

fn exact_div(v: BigInt, p: u64) -> Result<BigInt> {
    let bp = BigInt::from(p);
    if !(&v % &bp).is_zero() {
        return Err(Error::Divisibility {
            p,
            value: v.to_string(),
        });
    }
    Ok(v / bp)
}

/// The four per-divisor maps of an attractor census: X, X̃, Ã and A.
///
/// Built from X alone: `X̃ = X ⋆ μ`, `Ã(p) = X̃(p)/p`, `A = Ã ⋆ 𝟙`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodTable {
    pub omega: u64,
    pub x: DivisorFunction,
    pub x_prim: DivisorFunction,
    pub a_prim: DivisorFunction,
    pub a: DivisorFunction,
}

impl PeriodTable {
    pub fn from_x(x: DivisorFunction) -> Result<Self> {
        let x_prim = x.convolve(mu);
        let a_prim = x_prim.divide_by_index()?;
        let a = a_prim.convolve(one);
        Ok(PeriodTable {
            omega: x.n(),
            x,
            x_prim,
            a_prim,
            a,
        })
    }

    pub fn x_at(&self, p: u64) -> &BigInt {
        self.x.get(p).expect("divisor of omega")
    }

    pub fn a_at(&self, p: u64) -> &BigInt {
        self.a.get(p).expect("divisor of omega")
    }

    pub fn a_prim_at(&self, p: u64) -> &BigInt {
        self.a_prim.get(p).expect("divisor of omega")
    }

    pub fn x_prim_at(&self, p: u64) -> &BigInt {
        self.x_prim.get(p).expect("divisor of omega")
    }
}
