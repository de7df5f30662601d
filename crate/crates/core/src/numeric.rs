//! Exact Fibonacci arithmetic and exact evaluation of `floor(m / phi)`.
//!
//! Fibonacci numbers use the indexing `F(1) = F(2) = 1`, `F(n+1) = F(n) + F(n-1)`.
//! This agrees with OEIS A000045 for `n >= 1`; `F(0)` is not part of the public
//! interface and `fib(0)` is an error.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision non-negative integer.
pub type Natural = BigUint;

/// A Fibonacci subscript, always `>= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FibIndex(u64);

impl FibIndex {
    pub fn new(index: u64) -> Result<Self> {
        if index == 0 {
            return Err(Error::ZeroFibIndex);
        }
        Ok(FibIndex(index))
    }

    /// Builds an index that must be even, e.g. the parameter `2k` of `A_{2k}`.
    pub fn new_even(index: u64) -> Result<Self> {
        let idx = Self::new(index)?;
        if !idx.is_even() {
            return Err(Error::OddIndex(index));
        }
        Ok(idx)
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn is_even(self) -> bool {
        self.0.is_multiple_of(2)
    }

    pub fn value(self) -> Natural {
        fib_unchecked(self.0)
    }
}

impl fmt::Display for FibIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.0)
    }
}

/// Returns `F(n)`; `n = 0` is rejected.
pub fn fib(n: u64) -> Result<Natural> {
    if n == 0 {
        return Err(Error::ZeroFibIndex);
    }
    Ok(fib_unchecked(n))
}

/// `F(n)` for callers that have already established `n >= 1`.
/// `fib_unchecked(0)` returns 0, which is what the recurrence would give.
pub(crate) fn fib_unchecked(n: u64) -> Natural {
    let (mut a, mut b) = (Natural::zero(), Natural::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Iterator over `(n, F(n))` for `n = 1, 2, 3, ...`.
#[derive(Debug, Clone)]
pub struct Fibs {
    index: u64,
    current: Natural,
    next: Natural,
}

impl Fibs {
    pub fn new() -> Self {
        Fibs {
            index: 1,
            current: Natural::one(),
            next: Natural::one(),
        }
    }
}

impl Default for Fibs {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for Fibs {
    type Item = (u64, Natural);

    fn next(&mut self) -> Option<Self::Item> {
        let following = &self.current + &self.next;
        let value = std::mem::replace(
            &mut self.current,
            std::mem::replace(&mut self.next, following),
        );
        let index = self.index;
        self.index += 1;
        Some((index, value))
    }
}

/// Even-indexed Fibonacci numbers `F(2), F(4), ..., F(2L)` with `F(2L) <= limit`.
///
/// Position `i` of the result holds `F(2(i+1))`.
pub fn even_fibs_up_to(limit: &Natural) -> Vec<Natural> {
    Fibs::new()
        .filter(|(i, _)| i % 2 == 0)
        .map(|(_, v)| v)
        .take_while(|v| v <= limit)
        .collect()
}

/// `floor(sqrt(m))`.
pub fn isqrt(m: &Natural) -> Natural {
    m.sqrt()
}

/// `floor(m / phi)` with `phi = (1 + sqrt 5) / 2`, computed without floating point.
///
/// `m / phi = m (sqrt 5 - 1) / 2`, and `floor(t / 2) = floor(floor(t) / 2)`, so the
/// result is `(isqrt(5 m^2) - m) / 2` in integer division.
pub fn floor_div_phi(m: &Natural) -> Natural {
    let root = isqrt(&(m * m * 5u32));
    (root - m) >> 1
}

/// `floor(m / phi)` for machine-sized arguments.
pub fn floor_div_phi_u64(m: u64) -> u64 {
    let root = isqrt(&(Natural::from(m) * m * 5u32));
    let value = (root - m) >> 1;
    u64::try_from(value).expect("floor(m / phi) < m fits in u64")
}
