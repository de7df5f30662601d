//! The golden string (Fibonacci word) over `{A, B}`.
//!
//! `S_1 = B`, `S_2 = BA`, `S_k = S_{k-1} S_{k-2}`; every `S_k` is a prefix of the
//! infinite string. Positions are 1-based throughout. Deep positions are read
//! through the B-counting formula `N_B(n) = floor((n + 1) / phi)` rather than by
//! materializing prefixes.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, ToPrimitive, Zero};

use crate::decomposition::zeckendorf;
use crate::error::{at_least, Error, Result};
use crate::numeric::{fib_unchecked, floor_div_phi, floor_div_phi_u64, Natural};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GoldenLetter {
    A,
    B,
}

impl GoldenLetter {
    pub fn as_char(self) -> char {
        match self {
            GoldenLetter::A => 'A',
            GoldenLetter::B => 'B',
        }
    }
}

impl fmt::Display for GoldenLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl TryFrom<char> for GoldenLetter {
    type Error = Error;

    fn try_from(c: char) -> Result<Self> {
        match c {
            'A' => Ok(GoldenLetter::A),
            'B' => Ok(GoldenLetter::B),
            other => Err(Error::InvalidLetter(other)),
        }
    }
}

/// Parses an arbitrary word over `{A, B}`.
pub fn parse_word(s: &str) -> Result<Vec<GoldenLetter>> {
    s.chars().map(GoldenLetter::try_from).collect()
}

pub fn word_to_string(w: &[GoldenLetter]) -> String {
    w.iter().map(|l| l.as_char()).collect()
}

/// A finite prefix of the infinite golden string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GoldenPrefix {
    letters: Vec<GoldenLetter>,
}

impl GoldenPrefix {
    /// The first `len` letters.
    pub fn new(len: usize) -> Self {
        let mut prev = vec![GoldenLetter::B];
        let mut cur = vec![GoldenLetter::B, GoldenLetter::A];
        if len <= 1 {
            prev.truncate(len);
            return GoldenPrefix { letters: prev };
        }
        while cur.len() < len {
            let mut next = Vec::with_capacity(cur.len() + prev.len());
            next.extend_from_slice(&cur);
            next.extend_from_slice(&prev);
            prev = std::mem::replace(&mut cur, next);
        }
        cur.truncate(len);
        GoldenPrefix { letters: cur }
    }

    pub fn letters(&self) -> &[GoldenLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter at 1-based `position`, if within the prefix.
    pub fn get(&self, position: usize) -> Option<GoldenLetter> {
        position
            .checked_sub(1)
            .and_then(|i| self.letters.get(i).copied())
    }

    /// Drops the last two letters. A prefix of a prefix is still a prefix.
    pub fn truncate_last_two(&self) -> Result<GoldenPrefix> {
        truncate_last_two(&self.letters).map(|w| GoldenPrefix {
            letters: w.to_vec(),
        })
    }

    pub fn count_b(&self) -> usize {
        self.letters
            .iter()
            .filter(|&&l| l == GoldenLetter::B)
            .count()
    }
}

impl fmt::Display for GoldenPrefix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&word_to_string(&self.letters))
    }
}

impl FromStr for GoldenPrefix {
    type Err = Error;

    /// Accepts only strings that really are prefixes of the golden string.
    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_word(s)?;
        let expected = GoldenPrefix::new(letters.len());
        if expected.letters != letters {
            return Err(Error::NotGoldenPrefix(s.to_string()));
        }
        Ok(expected)
    }
}

/// `S_k`; its length is `F(k+1)`.
pub fn s_k(k: u64) -> Result<GoldenPrefix> {
    at_least("k", 1, k)?;
    let len = fib_unchecked(k + 1)
        .to_usize()
        .ok_or_else(|| Error::BoundExceeded {
            name: "k",
            got: k.to_string(),
            bound: 90,
        })?;
    Ok(GoldenPrefix::new(len))
}

/// Number of B's among the first `n` letters.
pub fn count_b(n: &Natural) -> Natural {
    floor_div_phi(&(n + 1u32))
}

pub fn count_b_u64(n: u64) -> u64 {
    floor_div_phi_u64(n + 1)
}

/// The `j`-th letter (1-based), read off the B-count.
pub fn letter_at(j: &Natural) -> Result<GoldenLetter> {
    if j.is_zero() {
        return Err(Error::ZeroPosition);
    }
    let step = count_b(j) - count_b(&(j - 1u32));
    Ok(if step.is_one() {
        GoldenLetter::B
    } else {
        GoldenLetter::A
    })
}

pub fn letter_at_u64(j: u64) -> Result<GoldenLetter> {
    if j == 0 {
        return Err(Error::ZeroPosition);
    }
    Ok(if count_b_u64(j) - count_b_u64(j - 1) == 1 {
        GoldenLetter::B
    } else {
        GoldenLetter::A
    })
}

/// Removes the final two letters of any finite word.
pub fn truncate_last_two<T>(w: &[T]) -> Result<&[T]> {
    if w.len() < 2 {
        return Err(Error::WordTooShort(w.len()));
    }
    Ok(&w[..w.len() - 2])
}

fn fib_usize(n: u64) -> Result<usize> {
    fib_unchecked(n)
        .to_usize()
        .ok_or_else(|| Error::BoundExceeded {
            name: "n",
            got: n.to_string(),
            bound: 90,
        })
}

/// Letters `1..=F(n)` equal letters `F(n)+1..=2F(n)`, for `n >= 4`.
pub fn check_prefix_repetition(n: u64) -> Result<bool> {
    at_least("n", 4, n)?;
    let f = fib_usize(n)?;
    let p = GoldenPrefix::new(2 * f);
    Ok(p.letters[..f] == p.letters[f..2 * f])
}

/// The first `F(n-1) - 2` letters equal the letters at positions
/// `2F(n)+1 ..= F(n+2)-2`, for `n >= 5`.
pub fn check_kp2(n: u64) -> Result<bool> {
    at_least("n", 5, n)?;
    let head = fib_usize(n - 1)? - 2;
    let start = 2 * fib_usize(n)?;
    let end = fib_usize(n + 2)? - 2;
    let p = GoldenPrefix::new(end);
    Ok(p.letters[..head] == p.letters[start..end])
}

/// `|S_k| = F(k+1)`.
pub fn check_length(k: u64) -> Result<bool> {
    let s = s_k(k)?;
    Ok(Natural::from(s.len()) == fib_unchecked(k + 1))
}

/// `S_k` is a prefix of `S_{k+1}`, and for `k >= 3` is `S_{k-1} S_{k-2}`.
pub fn check_nesting(k: u64) -> Result<bool> {
    let s = s_k(k)?;
    let next = s_k(k + 1)?;
    let prefix_ok = next.letters.starts_with(&s.letters);
    let concat_ok = if k >= 3 {
        let mut joined = s_k(k - 1)?.letters;
        joined.extend(s_k(k - 2)?.letters);
        joined == s.letters
    } else {
        true
    };
    Ok(prefix_ok && concat_ok)
}

/// Letters `1..=F(n)` equal letters `F(n+1)+1..=F(n+2)`, for `n >= 2`.
pub fn check_block_shift(n: u64) -> Result<bool> {
    at_least("n", 2, n)?;
    let f = fib_usize(n)?;
    let start = fib_usize(n + 1)?;
    let end = fib_usize(n + 2)?;
    let p = GoldenPrefix::new(end);
    Ok(p.letters[..f] == p.letters[start..end])
}

/// `(S_n S_{n+1}) - 2 = (S_{n+1} S_n) - 2`, the truncation applying to the whole
/// concatenation.
pub fn check_truncation(n: u64) -> Result<bool> {
    at_least("n", 1, n)?;
    let a = s_k(n)?;
    let b = s_k(n + 1)?;
    let mut ab = a.letters.clone();
    ab.extend_from_slice(&b.letters);
    let mut ba = b.letters;
    ba.extend_from_slice(&a.letters);
    Ok(truncate_last_two(&ab)? == truncate_last_two(&ba)?)
}

/// Concatenating the blocks `S_{c-1}` (each of length `F(c)`) over the Zeckendorf
/// indices `c` of `n`, largest first, spells the first `n` letters.
pub fn zeckendorf_prefix(n: &Natural) -> Result<Vec<GoldenLetter>> {
    let z = zeckendorf(n);
    let mut out = Vec::new();
    for &c in z.indices().iter().rev() {
        out.extend(s_k(c - 1)?.letters);
    }
    Ok(out)
}

/// The four letter claims at `F(2m+1)-1`, `F(2m+1)`, `2F(2m+1)-1`, `2F(2m+1)`.
/// Returns which of them hold, in that order.
pub fn check_letter_marks(m: u64) -> Result<[bool; 4]> {
    at_least("m", 1, m)?;
    let f = fib_unchecked(2 * m + 1);
    let two_f = &f * 2u32;
    let b = |pos: &Natural| letter_at(pos).map(|l| l == GoldenLetter::B);
    Ok([b(&(&f - 1u32))?, !b(&f)?, b(&(&two_f - 1u32))?, !b(&two_f)?])
}
