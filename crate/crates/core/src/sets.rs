//! Enumerators and membership predicates for the fixed-term families.
//!
//! * `A_{2k}`: integers whose smallest Chung-Graham summand is `F(2k)`.
//! * `B_{2N}`: integers whose Chung-Graham decomposition has `c_N = 0`.
//! * `Z(N)`: integers whose Zeckendorf decomposition contains `F(N)`.
//!
//! All enumerators are ascending iterators; the `*_members` functions collect
//! everything up to a limit.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::decomposition::{cg_decompose, zeckendorf};
use crate::error::{at_least, Error, Result};
use crate::golden::{letter_at_u64, GoldenLetter};
use crate::numeric::{fib_unchecked, floor_div_phi, FibIndex, Natural};

/// Ascending elements of `A_{2k}`:
/// `F(2k)`, then `(n+2) F(2k) + floor((n+1)/phi) F(2k-1)` for `n = 0, 1, ...`.
#[derive(Debug, Clone)]
pub struct AMembers {
    f2k: Natural,
    f2k_minus_1: Natural,
    next_n: Option<u64>,
}

impl AMembers {
    pub fn new(k: u64) -> Result<Self> {
        at_least("k", 1, k)?;
        Ok(AMembers {
            f2k: fib_unchecked(2 * k),
            f2k_minus_1: fib_unchecked(2 * k - 1),
            next_n: None,
        })
    }
}

impl Iterator for AMembers {
    type Item = Natural;

    fn next(&mut self) -> Option<Natural> {
        let Some(n) = self.next_n else {
            self.next_n = Some(0);
            return Some(self.f2k.clone());
        };
        self.next_n = Some(n + 1);
        let beatty = floor_div_phi(&Natural::from(n + 1));
        Some(&self.f2k * (n + 2) + beatty * &self.f2k_minus_1)
    }
}

pub fn a_members(k: u64, limit: &Natural) -> Result<Vec<Natural>> {
    Ok(AMembers::new(k)?.take_while(|v| v <= limit).collect())
}

pub fn a_first(k: u64, count: usize) -> Result<Vec<Natural>> {
    Ok(AMembers::new(k)?.take(count).collect())
}

pub fn a_contains(k: u64, n: &Natural) -> Result<bool> {
    at_least("k", 1, k)?;
    Ok(cg_decompose(n).min_position() == Some(k as usize))
}

/// The rows `q(1) < q(2) < ...` of `A_{2k}` built from the difference law:
/// `q(1) = F(2k)`, `q(2) = 2F(2k)`, and for `j >= 2` the step `q(j+1) - q(j)` is
/// `F(2k)` when the `(j-1)`-th golden letter is A and `F(2k+1)` when it is B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowTable {
    k: u64,
    rows: Vec<Natural>,
}

impl RowTable {
    pub fn new(k: u64, rows: usize) -> Result<Self> {
        at_least("k", 1, k)?;
        let f2k = fib_unchecked(2 * k);
        let f2k_plus_1 = fib_unchecked(2 * k + 1);
        let mut out = Vec::with_capacity(rows);
        if rows >= 1 {
            out.push(f2k.clone());
        }
        if rows >= 2 {
            out.push(&f2k * 2u32);
        }
        for j in 2..rows as u64 {
            let step = match letter_at_u64(j - 1)? {
                GoldenLetter::A => &f2k,
                GoldenLetter::B => &f2k_plus_1,
            };
            let next = &out[j as usize - 1] + step;
            out.push(next);
        }
        Ok(RowTable { k, rows: out })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn rows(&self) -> &[Natural] {
        &self.rows
    }

    /// `q(j)`, 1-based.
    pub fn q(&self, j: usize) -> Option<&Natural> {
        j.checked_sub(1).and_then(|i| self.rows.get(i))
    }
}

/// `q(j)` for `A_{2k}`.
pub fn q_row(k: u64, j: u64) -> Result<Natural> {
    at_least("j", 1, j)?;
    let table = RowTable::new(k, j as usize)?;
    Ok(table.rows[j as usize - 1].clone())
}

/// Largest element of `A_{2k}` whose top summand is `F(2k+2m)`:
/// `F(2k) + F(2k+2) + ... + F(2k+2m-2) + 2F(2k+2m)`.
pub fn max_with_top(k: u64, m: u64) -> Result<Natural> {
    at_least("k", 1, k)?;
    let mut total: Natural = (0..m).map(|i| fib_unchecked(2 * k + 2 * i)).sum();
    total += fib_unchecked(2 * k + 2 * m) * 2u32;
    Ok(total)
}

#[derive(Debug, Clone)]
enum Stream {
    /// `start..end`
    Interval { next: Natural, end: Natural },
    /// `a + j` for `a` in `A_{2k}`, `0 <= j < width`.
    Translates {
        members: AMembers,
        base: Natural,
        offset: Natural,
        width: Natural,
    },
}

impl Stream {
    fn pull(&mut self) -> Option<Natural> {
        match self {
            Stream::Interval { next, end } => {
                if *next >= *end {
                    return None;
                }
                let v = next.clone();
                *next += 1u32;
                Some(v)
            }
            Stream::Translates {
                members,
                base,
                offset,
                width,
            } => {
                if *offset >= *width {
                    *base = members.next()?;
                    offset.set_zero();
                }
                let v = &*base + &*offset;
                *offset += 1u32;
                Some(v)
            }
        }
    }
}

/// Ascending elements of `B_{2N}`, merged from `[1, F(2N) - 1]` and, for every
/// `k > N`, the translates `A_{2k} + [0, F(2N) - 1]`.
///
/// Streams are opened lazily: the stream for `k` cannot yield anything below
/// `F(2k)`, so it joins the heap only once the smallest pending value reaches
/// that bound. The families are disjoint, which the merge asserts.
#[derive(Debug, Clone)]
pub struct BMembers {
    streams: Vec<Stream>,
    heap: BinaryHeap<Reverse<(Natural, usize)>>,
    width: Natural,
    next_k: u64,
    next_start: Natural,
    last: Option<Natural>,
}

impl BMembers {
    pub fn new(big_n: u64) -> Result<Self> {
        at_least("N", 1, big_n)?;
        let width = fib_unchecked(2 * big_n);
        let mut merged = BMembers {
            streams: Vec::new(),
            heap: BinaryHeap::new(),
            next_k: big_n + 1,
            next_start: fib_unchecked(2 * big_n + 2),
            width: width.clone(),
            last: None,
        };
        merged.push_stream(Stream::Interval {
            next: Natural::one(),
            end: width,
        });
        Ok(merged)
    }

    fn push_stream(&mut self, mut stream: Stream) {
        if let Some(v) = stream.pull() {
            self.heap.push(Reverse((v, self.streams.len())));
        }
        self.streams.push(stream);
    }

    fn open_next(&mut self) {
        let members = AMembers::new(self.next_k).expect("k > N >= 1");
        self.push_stream(Stream::Translates {
            members,
            base: Natural::zero(),
            offset: self.width.clone(),
            width: self.width.clone(),
        });
        self.next_k += 1;
        self.next_start = fib_unchecked(2 * self.next_k);
    }
}

impl Iterator for BMembers {
    type Item = Natural;

    fn next(&mut self) -> Option<Natural> {
        while self
            .heap
            .peek()
            .is_none_or(|Reverse((v, _))| *v >= self.next_start)
        {
            self.open_next();
        }
        let Reverse((value, id)) = self.heap.pop()?;
        if let Some(v) = self.streams[id].pull() {
            self.heap.push(Reverse((v, id)));
        }
        if let Some(last) = &self.last {
            assert!(*last < value, "B streams overlap at {value}");
        }
        self.last = Some(value.clone());
        Some(value)
    }
}

pub fn b_members(big_n: u64, limit: &Natural) -> Result<Vec<Natural>> {
    Ok(BMembers::new(big_n)?.take_while(|v| v <= limit).collect())
}

pub fn b_first(big_n: u64, count: usize) -> Result<Vec<Natural>> {
    Ok(BMembers::new(big_n)?.take(count).collect())
}

/// `n` has neither `F(2N)` nor `2F(2N)` in its Chung-Graham decomposition.
pub fn b_contains(big_n: u64, n: &Natural) -> Result<bool> {
    at_least("N", 1, big_n)?;
    if n.is_zero() {
        return Err(Error::BelowMinimum {
            name: "n",
            min: 1,
            got: 0,
        });
    }
    Ok(cg_decompose(n).coefficient(big_n as usize) == 0)
}

/// `floor((n + phi^2) / phi)`.
///
/// `phi^2 / phi = phi = 1 + 1/phi`, so the argument equals `(n + 1)/phi + 1` and the
/// floor is `floor((n + 1)/phi) + 1`.
pub fn griffiths_floor(n: &Natural) -> Natural {
    floor_div_phi(&(n + 1u32)) + 1u32
}

/// Ascending elements of `Z(N)`:
/// `F(N) floor((n + phi^2)/phi) + n F(N+1) + j` for `0 <= j < F(N-1)`, `n >= 0`.
#[derive(Debug, Clone)]
pub struct ZMembers {
    f_n: Natural,
    f_n_plus_1: Natural,
    width: Natural,
    n: Natural,
    base: Natural,
    offset: Natural,
}

impl ZMembers {
    pub fn new(big_n: u64) -> Result<Self> {
        at_least("N", 2, big_n)?;
        let f_n = fib_unchecked(big_n);
        let base = &f_n * griffiths_floor(&Natural::zero());
        Ok(ZMembers {
            f_n,
            f_n_plus_1: fib_unchecked(big_n + 1),
            width: fib_unchecked(big_n - 1),
            n: Natural::zero(),
            base,
            offset: Natural::zero(),
        })
    }
}

impl Iterator for ZMembers {
    type Item = Natural;

    fn next(&mut self) -> Option<Natural> {
        if self.offset >= self.width {
            self.n += 1u32;
            self.base = &self.f_n * griffiths_floor(&self.n) + &self.n * &self.f_n_plus_1;
            self.offset.set_zero();
        }
        let v = &self.base + &self.offset;
        self.offset += 1u32;
        Some(v)
    }
}

pub fn z_members(big_n: u64, limit: &Natural) -> Result<Vec<Natural>> {
    Ok(ZMembers::new(big_n)?.take_while(|v| v <= limit).collect())
}

pub fn z_contains(big_n: u64, n: &Natural) -> Result<bool> {
    at_least("N", 2, big_n)?;
    Ok(zeckendorf(n).contains(big_n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    Z,
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "Z" | "z" => Ok(Family::Z),
            other => Err(format!("unknown family {other:?}, expected A, B or Z")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::Z => "Z",
        };
        f.write_str(c)
    }
}

/// One of `A_{2k}`, `B_{2N}`, `Z(N)`, addressed by its Fibonacci subscript:
/// the parameter is `2k` for A, `2N` for B and `N` for Z.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SetFamily {
    family: Family,
    parameter: FibIndex,
}

impl SetFamily {
    pub fn new(family: Family, parameter: u64) -> Result<Self> {
        let parameter = match family {
            Family::A | Family::B => FibIndex::new_even(parameter)?,
            Family::Z => {
                at_least("N", 2, parameter)?;
                FibIndex::new(parameter)?
            }
        };
        Ok(SetFamily { family, parameter })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn parameter(&self) -> FibIndex {
        self.parameter
    }

    pub fn iter(&self) -> Box<dyn Iterator<Item = Natural>> {
        let p = self.parameter.get();
        match self.family {
            Family::A => Box::new(AMembers::new(p / 2).expect("validated")),
            Family::B => Box::new(BMembers::new(p / 2).expect("validated")),
            Family::Z => Box::new(ZMembers::new(p).expect("validated")),
        }
    }

    pub fn members(&self, limit: &Natural) -> Vec<Natural> {
        self.iter().take_while(|v| v <= limit).collect()
    }

    pub fn first(&self, count: usize) -> Vec<Natural> {
        self.iter().take(count).collect()
    }

    pub fn contains(&self, n: &Natural) -> bool {
        let p = self.parameter.get();
        if n.is_zero() {
            return false;
        }
        match self.family {
            Family::A => cg_decompose(n).min_position() == Some(p as usize / 2),
            Family::B => cg_decompose(n).coefficient(p as usize / 2) == 0,
            Family::Z => zeckendorf(n).contains(p),
        }
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Z => write!(f, "Z({})", self.parameter.get()),
            fam => write!(f, "{}_{}", fam, self.parameter.get()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetFormat {
    /// One decimal per line.
    Lines,
    /// `index,value` with a header row; indices are 1-based.
    Csv,
    /// JSON array of decimal strings.
    Json,
}

pub fn write_set<W: Write + ?Sized>(
    out: &mut W,
    values: &[Natural],
    format: SetFormat,
) -> io::Result<()> {
    match format {
        SetFormat::Lines => {
            for v in values {
                writeln!(out, "{v}")?;
            }
        }
        SetFormat::Csv => {
            writeln!(out, "index,value")?;
            for (i, v) in values.iter().enumerate() {
                writeln!(out, "{},{v}", i + 1)?;
            }
        }
        SetFormat::Json => {
            let strings: Vec<String> = values.iter().map(|v| v.to_string()).collect();
            serde_json::to_writer(&mut *out, &strings)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    fn nats(v: &[u64]) -> Vec<Natural> {
        v.iter().map(|&x| nat(x)).collect()
    }

    #[test]
    fn a_members_examples() {
        assert_eq!(
            a_members(1, &nat(13)).unwrap(),
            nats(&[1, 2, 4, 5, 7, 9, 10, 12, 13])
        );
        assert!(a_members(1, &nat(0)).unwrap().is_empty());
        assert_eq!(a_members(2, &nat(10)).unwrap(), nats(&[3, 6]));
        assert!(a_members(0, &nat(10)).is_err());
        assert_eq!(a_first(1, 3).unwrap(), nats(&[1, 2, 4]));
    }

    #[test]
    fn q_row_examples() {
        assert_eq!(q_row(1, 1).unwrap(), nat(1));
        assert_eq!(q_row(1, 5).unwrap(), nat(7));
        assert_eq!(q_row(1, 13).unwrap(), nat(20));
        assert!(q_row(1, 0).is_err());
    }

    #[test]
    fn table_one_rows() {
        // q(1)..q(13) of the ordered table at k = 2 (F4 = 3, F6 = 8, F8 = 21).
        let t = RowTable::new(2, 13).unwrap();
        let expected = [
            3,
            6,
            3 + 8,
            6 + 8,
            3 + 16,
            3 + 21,
            6 + 21,
            3 + 8 + 21,
            6 + 8 + 21,
            3 + 16 + 21,
            3 + 42,
            6 + 42,
            3 + 8 + 42,
        ];
        assert_eq!(t.rows(), nats(&expected).as_slice());
        assert_eq!(t.q(13), Some(&nat(53)));
        assert_eq!(t.q(0), None);
    }

    #[test]
    fn max_with_top_examples() {
        assert_eq!(max_with_top(1, 0).unwrap(), nat(2));
        assert_eq!(max_with_top(1, 1).unwrap(), nat(7));
        assert_eq!(max_with_top(1, 2).unwrap(), nat(20));
    }

    #[test]
    fn b_listings() {
        assert_eq!(
            b_members(1, &nat(30)).unwrap(),
            nats(&[3, 6, 8, 11, 14, 16, 19, 21, 24, 27, 29])
        );
        assert_eq!(
            b_members(2, &nat(30)).unwrap(),
            nats(&[1, 2, 8, 9, 10, 16, 17, 18, 21, 22, 23, 29, 30])
        );
        let mut b6: Vec<u64> = (1..=7).collect();
        b6.extend(21..=28);
        assert_eq!(b_members(3, &nat(30)).unwrap(), nats(&b6));
        assert!(b_members(0, &nat(30)).is_err());
        assert_eq!(b_first(1, 3).unwrap(), nats(&[3, 6, 8]));
    }

    #[test]
    fn b_contains_examples() {
        assert!(b_contains(1, &nat(3)).unwrap());
        assert!(!b_contains(1, &nat(1)).unwrap());
        assert!(b_contains(2, &nat(21)).unwrap());
        assert!(b_contains(2, &nat(0)).is_err());
    }

    #[test]
    fn z_members_examples() {
        assert_eq!(z_members(4, &nat(12)).unwrap(), nats(&[3, 4, 11, 12]));
        assert_eq!(z_members(2, &nat(4)).unwrap(), nats(&[1, 4]));
        assert_eq!(z_members(5, &nat(7)).unwrap(), nats(&[5, 6, 7]));
        assert!(z_members(1, &nat(7)).is_err());
    }

    #[test]
    fn set_family_parity() {
        assert!(SetFamily::new(Family::A, 3).is_err());
        assert!(SetFamily::new(Family::B, 0).is_err());
        assert!(SetFamily::new(Family::Z, 1).is_err());
        let b2 = SetFamily::new(Family::B, 2).unwrap();
        assert_eq!(b2.to_string(), "B_2");
        assert_eq!(b2.members(&nat(8)), nats(&[3, 6, 8]));
        assert!(b2.contains(&nat(29)));
        assert!(!b2.contains(&nat(30)));
        let z = SetFamily::new(Family::Z, 4).unwrap();
        assert_eq!(z.first(4), nats(&[3, 4, 11, 12]));
        assert!(z.contains(&nat(11)));
        let a = SetFamily::new(Family::A, 4).unwrap();
        assert!(a.contains(&nat(6)));
        assert!(!a.contains(&nat(0)));
    }

    #[test]
    fn membership_agrees_with_enumeration() {
        let limit = 3000u64;
        for fam in [
            SetFamily::new(Family::A, 2).unwrap(),
            SetFamily::new(Family::A, 6).unwrap(),
            SetFamily::new(Family::B, 4).unwrap(),
            SetFamily::new(Family::Z, 7).unwrap(),
        ] {
            let listed = fam.members(&nat(limit));
            let filtered: Vec<Natural> = (1..=limit).map(nat).filter(|n| fam.contains(n)).collect();
            assert_eq!(listed, filtered, "{fam}");
        }
    }

    #[test]
    fn set_formats() {
        let values = nats(&[3, 6]);
        let mut buf = Vec::new();
        write_set(&mut buf, &values, SetFormat::Lines).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "3\n6\n");
        let mut buf = Vec::new();
        write_set(&mut buf, &values, SetFormat::Csv).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "index,value\n1,3\n2,6\n");
        let mut buf = Vec::new();
        write_set(&mut buf, &values, SetFormat::Json).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "[\"3\",\"6\"]\n");
    }
}
