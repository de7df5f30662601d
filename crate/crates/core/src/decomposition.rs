//! Zeckendorf and Chung-Graham decompositions.
//!
//! A Chung-Graham decomposition writes `n = sum c_i F(2i)` with digits in
//! `{0, 1, 2}` such that between any two 2's there is a 0. Coefficient vectors
//! are stored little-endian (`coefficients[0]` multiplies `F(2)`) without
//! trailing zeros, so equality of vectors is equality of decompositions.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::numeric::{even_fibs_up_to, fib_unchecked, FibIndex, Fibs, Natural};

/// True iff every digit is in `{0, 1, 2}` and any two 2's are separated by a 0.
pub fn cg_validate(coefficients: &[u8]) -> bool {
    let mut open_two = false;
    for &c in coefficients {
        match c {
            0 => open_two = false,
            1 => {}
            2 if open_two => return false,
            2 => open_two = true,
            _ => return false,
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CgDecomposition {
    coefficients: Vec<u8>,
}

impl CgDecomposition {
    /// Validates and canonicalizes (strips trailing zeros).
    pub fn from_coefficients(mut coefficients: Vec<u8>) -> Result<Self> {
        if !cg_validate(&coefficients) {
            return Err(Error::InvalidDecomposition(coefficients));
        }
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        Ok(CgDecomposition { coefficients })
    }

    pub fn coefficients(&self) -> &[u8] {
        &self.coefficients
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `c_i`, the multiplier of `F(2i)`, with `i >= 1`. Positions past the end are 0.
    pub fn coefficient(&self, i: usize) -> u8 {
        i.checked_sub(1)
            .and_then(|p| self.coefficients.get(p).copied())
            .unwrap_or(0)
    }

    /// Smallest `i` with `c_i != 0`.
    pub fn min_position(&self) -> Option<usize> {
        self.coefficients
            .iter()
            .position(|&c| c != 0)
            .map(|p| p + 1)
    }

    /// Largest `i` with `c_i != 0`.
    pub fn max_position(&self) -> Option<usize> {
        // canonical form: the last digit is nonzero
        (!self.coefficients.is_empty()).then_some(self.coefficients.len())
    }

    /// Coefficient of the largest summand.
    pub fn top_coefficient(&self) -> Option<u8> {
        self.coefficients.last().copied()
    }

    pub fn value(&self) -> Natural {
        let mut total = Natural::zero();
        let evens = Fibs::new().filter(|(i, _)| i % 2 == 0).map(|(_, v)| v);
        for (&c, f) in self.coefficients.iter().zip(evens) {
            if c != 0 {
                total += f * c;
            }
        }
        total
    }

    /// Nonzero terms as `(fibonacci_index, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (u64, u8)> + '_ {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(p, &c)| (2 * (p as u64 + 1), c))
    }
}

impl fmt::Display for CgDecomposition {
    /// Renders e.g. `2·F2 + F4 + 2·F8 + F14`; coefficient 1 is omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("(empty)");
        }
        for (n, (index, c)) in self.terms().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            if c == 2 {
                write!(f, "2·F{index}")?;
            } else {
                write!(f, "F{index}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for CgDecomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CgDecomposition", 3)?;
        s.serialize_field("n", &self.value().to_string())?;
        s.serialize_field("system", "chung-graham")?;
        s.serialize_field("coefficients", &self.coefficients)?;
        s.end()
    }
}

/// Evaluates a raw coefficient vector, rejecting invalid ones.
pub fn cg_evaluate(coefficients: &[u8]) -> Result<Natural> {
    if !cg_validate(coefficients) {
        return Err(Error::InvalidDecomposition(coefficients.to_vec()));
    }
    Ok(CgDecomposition {
        coefficients: coefficients.to_vec(),
    }
    .value())
}

/// The Chung-Graham decomposition of `n`; `0` gives the empty decomposition.
///
/// Greedy from the top: at each even index take `2F(2i)` if it fits, else
/// `F(2i)` if it fits, else nothing. After a 2 at level `i` the remainder is
/// below `F(2i-1) < 2F(2i-2)`, and each following 1 keeps it below the next odd
/// Fibonacci number, so a second 2 can only appear after a 0.
pub fn cg_decompose(n: &Natural) -> CgDecomposition {
    let evens = even_fibs_up_to(n);
    let mut coefficients = vec![0u8; evens.len()];
    let mut rem = n.clone();
    // Some(bound) while a 2 is open: rem must stay below the odd Fibonacci bound.
    let mut open_two_bound: Option<Natural> = None;
    for i in (0..evens.len()).rev() {
        let f = &evens[i];
        let below = if i == 0 {
            Natural::zero()
        } else {
            evens[i - 1].clone()
        };
        let two_f = f * 2u32;
        if rem >= two_f {
            assert!(
                open_two_bound.is_none(),
                "second 2 before a 0 while decomposing {n}"
            );
            rem -= two_f;
            coefficients[i] = 2;
            // F(2i-1) = F(2i) - F(2i-2)
            let odd = f - &below;
            assert!(rem < odd, "remainder after a 2 must be below F(2i-1)");
            open_two_bound = Some(odd);
        } else if rem >= *f {
            rem -= f;
            coefficients[i] = 1;
            if let Some(bound) = open_two_bound.as_mut() {
                // F(2i+1) - F(2i) = F(2i-1): the bound moves down one level
                *bound -= f;
                assert!(rem < *bound);
            }
        } else {
            open_two_bound = None;
        }
    }
    assert!(
        rem.is_zero(),
        "greedy decomposition of {n} left a remainder"
    );
    while coefficients.last() == Some(&0) {
        coefficients.pop();
    }
    debug_assert!(cg_validate(&coefficients));
    CgDecomposition { coefficients }
}

/// The summand set of `n` split by coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummandSets {
    pub all: BTreeSet<FibIndex>,
    pub coeff1: BTreeSet<FibIndex>,
    pub coeff2: BTreeSet<FibIndex>,
}

pub fn summand_sets(n: &Natural) -> Result<SummandSets> {
    if n.is_zero() {
        return Err(Error::ZeroHasNoSummands);
    }
    let d = cg_decompose(n);
    let mut sets = SummandSets {
        all: BTreeSet::new(),
        coeff1: BTreeSet::new(),
        coeff2: BTreeSet::new(),
    };
    for (index, c) in d.terms() {
        let idx = FibIndex::new_even(index)?;
        sets.all.insert(idx);
        if c == 1 {
            sets.coeff1.insert(idx);
        } else {
            sets.coeff2.insert(idx);
        }
    }
    Ok(sets)
}

/// Zeckendorf decomposition as ascending, pairwise nonadjacent indices `>= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ZeckDecomposition {
    indices: Vec<u64>,
}

impl ZeckDecomposition {
    pub fn indices(&self) -> &[u64] {
        &self.indices
    }

    pub fn contains(&self, index: u64) -> bool {
        self.indices.binary_search(&index).is_ok()
    }

    pub fn value(&self) -> Natural {
        self.indices.iter().map(|&i| fib_unchecked(i)).sum()
    }

    pub fn is_nonadjacent(&self) -> bool {
        self.indices.first().is_none_or(|&i| i >= 2)
            && self.indices.windows(2).all(|w| w[1] >= w[0] + 2)
    }
}

impl fmt::Display for ZeckDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.indices.is_empty() {
            return f.write_str("(empty)");
        }
        let terms: Vec<String> = self.indices.iter().map(|i| format!("F{i}")).collect();
        f.write_str(&terms.join(" + "))
    }
}

impl Serialize for ZeckDecomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ZeckDecomposition", 3)?;
        s.serialize_field("n", &self.value().to_string())?;
        s.serialize_field("system", "zeckendorf")?;
        s.serialize_field("indices", &self.indices)?;
        s.end()
    }
}

/// Greedy largest-Fibonacci-first decomposition over `F(2), F(3), ...`.
pub fn zeckendorf(n: &Natural) -> ZeckDecomposition {
    let fibs: Vec<(u64, Natural)> = Fibs::new().skip(1).take_while(|(_, v)| v <= n).collect();
    let mut rem = n.clone();
    let mut indices = Vec::new();
    for (index, value) in fibs.iter().rev() {
        if rem.is_zero() {
            break;
        }
        if *value <= rem && indices.last().is_none_or(|&last| last > index + 1) {
            rem -= value;
            indices.push(*index);
        }
    }
    debug_assert!(rem.is_zero());
    indices.reverse();
    ZeckDecomposition { indices }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    fn idx(v: &[u64]) -> BTreeSet<FibIndex> {
        v.iter().map(|&i| FibIndex::new(i).unwrap()).collect()
    }

    #[test]
    fn validate_examples() {
        assert!(!cg_validate(&[2, 2]));
        assert!(cg_validate(&[2, 0, 2]));
        assert!(!cg_validate(&[2, 1, 2]));
        assert!(!cg_validate(&[3]));
        assert!(cg_validate(&[]));
        assert!(cg_validate(&[2, 1, 1, 0, 1, 2]));
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(cg_decompose(&nat(1)).coefficients(), &[1]);
        assert_eq!(
            cg_decompose(&nat(424)).coefficients(),
            &[2, 1, 0, 2, 0, 0, 1]
        );
        assert_eq!(cg_decompose(&nat(7)).coefficients(), &[1, 2]);
        assert!(cg_decompose(&nat(0)).is_empty());
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(cg_evaluate(&[]).unwrap(), nat(0));
        assert_eq!(cg_evaluate(&[2]).unwrap(), nat(2));
        assert_eq!(cg_evaluate(&[2, 1, 0, 2, 0, 0, 1]).unwrap(), nat(424));
        assert!(matches!(
            cg_evaluate(&[2, 2]),
            Err(Error::InvalidDecomposition(_))
        ));
    }

    #[test]
    fn from_coefficients_canonicalizes() {
        let d = CgDecomposition::from_coefficients(vec![1, 2, 0, 0]).unwrap();
        assert_eq!(d.coefficients(), &[1, 2]);
        assert_eq!(d, cg_decompose(&nat(7)));
        assert!(CgDecomposition::from_coefficients(vec![2, 1, 2]).is_err());
    }

    #[test]
    fn accessors() {
        let d = cg_decompose(&nat(424));
        assert_eq!(d.coefficient(1), 2);
        assert_eq!(d.coefficient(3), 0);
        assert_eq!(d.coefficient(99), 0);
        assert_eq!(d.min_position(), Some(1));
        assert_eq!(d.max_position(), Some(7));
        assert_eq!(d.top_coefficient(), Some(1));
        assert_eq!(d.to_string(), "2·F2 + F4 + 2·F8 + F14");
        assert_eq!(cg_decompose(&nat(0)).to_string(), "(empty)");
    }

    #[test]
    fn summand_set_examples() {
        let s = summand_sets(&nat(424)).unwrap();
        assert_eq!(s.all, idx(&[2, 4, 8, 14]));
        assert_eq!(s.coeff1, idx(&[4, 14]));
        assert_eq!(s.coeff2, idx(&[2, 8]));

        let s = summand_sets(&nat(1)).unwrap();
        assert_eq!(
            (s.all, s.coeff1, s.coeff2),
            (idx(&[2]), idx(&[2]), idx(&[]))
        );
        let s = summand_sets(&nat(2)).unwrap();
        assert_eq!(
            (s.all, s.coeff1, s.coeff2),
            (idx(&[2]), idx(&[]), idx(&[2]))
        );

        assert!(matches!(
            summand_sets(&nat(0)),
            Err(Error::ZeroHasNoSummands)
        ));
    }

    #[test]
    fn zeckendorf_examples() {
        assert!(zeckendorf(&nat(0)).indices().is_empty());
        assert_eq!(zeckendorf(&nat(4)).indices(), &[2, 4]);
        assert_eq!(zeckendorf(&nat(11)).indices(), &[4, 6]);
        assert_eq!(zeckendorf(&nat(11)).to_string(), "F4 + F6");
    }

    #[test]
    fn round_trips_to_a_million() {
        for n in 0..=1_000_000u64 {
            let n = nat(n);
            let d = cg_decompose(&n);
            assert!(cg_validate(d.coefficients()));
            assert_eq!(d.value(), n);
            let z = zeckendorf(&n);
            assert!(z.is_nonadjacent());
            assert_eq!(z.value(), n);
        }
    }

    #[test]
    fn json_schema() {
        let v = serde_json::to_value(cg_decompose(&nat(424))).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"n": "424", "system": "chung-graham", "coefficients": [2, 1, 0, 2, 0, 0, 1]})
        );
        let v = serde_json::to_value(zeckendorf(&nat(11))).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"n": "11", "system": "zeckendorf", "indices": [4, 6]})
        );
    }

    #[test]
    fn large_values_stay_exact() {
        let n = fib_unchecked(300) * 2u32 + fib_unchecked(20);
        let d = cg_decompose(&n);
        assert_eq!(d.coefficient(150), 2);
        assert_eq!(d.coefficient(10), 1);
        assert_eq!(d.value(), n);
    }
}
