//! Brute-force references and the verification checks built on them.
//!
//! The exhaustive enumerators here never call into `cg_decompose` or
//! `zeckendorf`; they build their tables by walking every admissible digit
//! vector or index set. Each registered check compares one statement about the
//! numeration systems, the golden string, or the fixed-term sets against such a
//! reference over a finite range and reports the first counterexample in
//! natural order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::ToPrimitive;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::decomposition::{cg_decompose, zeckendorf, CgDecomposition};
use crate::error::{Error, Result};
use crate::golden::{
    check_block_shift, check_kp2, check_length, check_letter_marks, check_nesting,
    check_prefix_repetition, check_truncation, count_b_u64, letter_at_u64, zeckendorf_prefix,
    GoldenLetter, GoldenPrefix,
};
use crate::numeric::{fib_unchecked, Natural};
use crate::sets::{a_members, b_members, griffiths_floor, max_with_top, z_members, RowTable};

/// Largest limit accepted by the exhaustive enumerators.
pub const SAFETY_BOUND: u64 = 1_000_000;

fn fib_u64(n: u64) -> u64 {
    fib_unchecked(n)
        .to_u64()
        .expect("Fibonacci value fits in u64")
}

fn check_bound(name: &'static str, got: u64) -> Result<()> {
    if got > SAFETY_BOUND {
        return Err(Error::BoundExceeded {
            name,
            got: got.to_string(),
            bound: SAFETY_BOUND,
        });
    }
    Ok(())
}

fn small_limit(limit: &Natural) -> Result<u64> {
    match limit.to_u64() {
        Some(v) if v <= SAFETY_BOUND => Ok(v),
        _ => Err(Error::BoundExceeded {
            name: "limit",
            got: limit.to_string(),
            bound: SAFETY_BOUND,
        }),
    }
}

/// A value hit twice or not at all by an exhaustive enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BijectionFailure {
    Duplicate(u64),
    Missing(u64),
}

impl BijectionFailure {
    pub fn value(&self) -> u64 {
        match *self {
            BijectionFailure::Duplicate(v) | BijectionFailure::Missing(v) => v,
        }
    }
}

impl fmt::Display for BijectionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BijectionFailure::Duplicate(v) => write!(f, "{v} has two representations"),
            BijectionFailure::Missing(v) => write!(f, "{v} has no representation"),
        }
    }
}

/// Every valid Chung-Graham digit vector with value `<= limit`, indexed by value.
///
/// Depth-first over digit positions from the top: a branch stops as soon as its
/// partial sum exceeds the limit (digits only add), and a 2 is offered only when
/// no 2 is open since the last 0.
pub fn brute_cg_table(
    limit: u64,
) -> Result<std::result::Result<Vec<CgDecomposition>, BijectionFailure>> {
    check_bound("limit", limit)?;
    let mut evens = Vec::new();
    let mut i = 1;
    loop {
        let f = fib_u64(2 * i);
        if f > limit {
            break;
        }
        evens.push(f);
        i += 1;
    }
    let mut slots: Vec<Option<Vec<u8>>> = vec![None; limit as usize + 1];
    let mut digits = vec![0u8; evens.len()];
    let mut duplicate = None;
    dfs_cg(
        &evens,
        evens.len(),
        0,
        false,
        limit,
        &mut digits,
        &mut slots,
        &mut duplicate,
    );
    if let Some(v) = duplicate {
        return Ok(Err(BijectionFailure::Duplicate(v)));
    }
    let mut out = Vec::with_capacity(slots.len());
    for (value, slot) in slots.into_iter().enumerate() {
        match slot {
            Some(d) => out.push(CgDecomposition::from_coefficients(d)?),
            None => return Ok(Err(BijectionFailure::Missing(value as u64))),
        }
    }
    Ok(Ok(out))
}

#[allow(clippy::too_many_arguments)]
fn dfs_cg(
    evens: &[u64],
    level: usize,
    value: u64,
    open_two: bool,
    limit: u64,
    digits: &mut [u8],
    slots: &mut [Option<Vec<u8>>],
    duplicate: &mut Option<u64>,
) {
    if level == 0 {
        let slot = &mut slots[value as usize];
        if slot.is_some() {
            let first = duplicate.get_or_insert(value);
            *first = (*first).min(value);
        } else {
            *slot = Some(digits.to_vec());
        }
        return;
    }
    let f = evens[level - 1];
    for d in 0..=2u8 {
        if d == 2 && open_two {
            continue;
        }
        let v = value + d as u64 * f;
        if v > limit {
            break;
        }
        digits[level - 1] = d;
        let open = match d {
            0 => false,
            1 => open_two,
            _ => true,
        };
        dfs_cg(evens, level - 1, v, open, limit, digits, slots, duplicate);
    }
    digits[level - 1] = 0;
}

/// `brute_cg_table` as a map keyed by value. Fails on a duplicate or missing value.
pub fn brute_cg_map(limit: &Natural) -> Result<BTreeMap<Natural, CgDecomposition>> {
    let limit = small_limit(limit)?;
    match brute_cg_table(limit)? {
        Ok(table) => Ok(table
            .into_iter()
            .enumerate()
            .map(|(v, d)| (Natural::from(v), d))
            .collect()),
        Err(failure) => Err(Error::BijectionViolated(failure.to_string())),
    }
}

/// Every set of pairwise nonadjacent indices `>= 2` with Fibonacci sum `<= limit`,
/// indexed by value (ascending indices).
pub fn brute_zeckendorf_table(
    limit: u64,
) -> Result<std::result::Result<Vec<Vec<u64>>, BijectionFailure>> {
    check_bound("limit", limit)?;
    let mut fibs = Vec::new();
    let mut index = 2;
    while fib_u64(index) <= limit {
        fibs.push((index, fib_u64(index)));
        index += 1;
    }
    let mut slots: Vec<Option<Vec<u64>>> = vec![None; limit as usize + 1];
    let mut duplicate: Option<u64> = None;
    let mut chosen = Vec::new();
    // Candidates are taken in increasing index order, skipping the neighbour.
    fn walk(
        fibs: &[(u64, u64)],
        from: usize,
        value: u64,
        limit: u64,
        chosen: &mut Vec<u64>,
        slots: &mut [Option<Vec<u64>>],
        duplicate: &mut Option<u64>,
    ) {
        let slot = &mut slots[value as usize];
        if slot.is_some() {
            let first = duplicate.get_or_insert(value);
            *first = (*first).min(value);
        } else {
            *slot = Some(chosen.clone());
        }
        for i in from..fibs.len() {
            let (index, f) = fibs[i];
            if value + f > limit {
                break;
            }
            chosen.push(index);
            walk(fibs, i + 2, value + f, limit, chosen, slots, duplicate);
            chosen.pop();
        }
    }
    walk(&fibs, 0, 0, limit, &mut chosen, &mut slots, &mut duplicate);
    if let Some(v) = duplicate {
        return Ok(Err(BijectionFailure::Duplicate(v)));
    }
    let mut out = Vec::with_capacity(slots.len());
    for (value, slot) in slots.into_iter().enumerate() {
        match slot {
            Some(s) => out.push(s),
            None => return Ok(Err(BijectionFailure::Missing(value as u64))),
        }
    }
    Ok(Ok(out))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    check_name: String,
    range_tested: String,
    first_counterexample: Option<Natural>,
}

impl VerificationReport {
    pub fn new(
        check_name: &str,
        range_tested: String,
        first_counterexample: Option<Natural>,
    ) -> Self {
        VerificationReport {
            check_name: check_name.to_string(),
            range_tested,
            first_counterexample,
        }
    }

    pub fn check_name(&self) -> &str {
        &self.check_name
    }

    pub fn range_tested(&self) -> &str {
        &self.range_tested
    }

    pub fn passed(&self) -> bool {
        self.first_counterexample.is_none()
    }

    pub fn first_counterexample(&self) -> Option<&Natural> {
        self.first_counterexample.as_ref()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_counterexample {
            None => write!(f, "{}: passed ({})", self.check_name, self.range_tested),
            Some(c) => write!(
                f,
                "{}: FAILED ({}), first counterexample {}",
                self.check_name, self.range_tested, c
            ),
        }
    }
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("VerificationReport", 4)?;
        s.serialize_field("check", &self.check_name)?;
        s.serialize_field("range", &self.range_tested)?;
        s.serialize_field("passed", &self.passed())?;
        s.serialize_field(
            "counterexample",
            &self.first_counterexample.as_ref().map(|c| c.to_string()),
        )?;
        s.end()
    }
}

/// Parameters for a check. Unset fields take the check's default; `k` and
/// `big_n` select a single family member when set and a default sweep otherwise.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CheckParams {
    pub limit: Option<u64>,
    pub k: Option<u64>,
    pub big_n: Option<u64>,
    pub rows: Option<u64>,
    pub ell: Option<u64>,
}

impl CheckParams {
    pub fn limit(mut self, v: u64) -> Self {
        self.limit = Some(v);
        self
    }

    pub fn k(mut self, v: u64) -> Self {
        self.k = Some(v);
        self
    }

    pub fn big_n(mut self, v: u64) -> Self {
        self.big_n = Some(v);
        self
    }

    pub fn rows(mut self, v: u64) -> Self {
        self.rows = Some(v);
        self
    }

    pub fn ell(mut self, v: u64) -> Self {
        self.ell = Some(v);
        self
    }

    fn k_range(&self, default_max: u64) -> Result<(u64, u64)> {
        match self.k {
            Some(0) => Err(Error::BelowMinimum {
                name: "k",
                min: 1,
                got: 0,
            }),
            Some(k) => Ok((k, k)),
            None => Ok((1, default_max)),
        }
    }

    fn n_range(&self, min: u64, default_max: u64) -> Result<(u64, u64)> {
        match self.big_n {
            Some(n) if n < min => Err(Error::BelowMinimum {
                name: "N",
                min,
                got: n,
            }),
            Some(n) => Ok((n, n)),
            None => Ok((min, default_max)),
        }
    }
}

/// Registered checks with a one-line description each.
pub const CHECKS: &[(&str, &str)] = &[
    (
        "cg_bijection",
        "exhaustive Chung-Graham vectors hit [0, limit] once each and match cg_decompose",
    ),
    (
        "zeckendorf_bijection",
        "exhaustive nonadjacent index sets hit [0, limit] once each and match zeckendorf",
    ),
    ("golden_length", "|S_k| = F(k+1) for 1 <= k <= limit"),
    (
        "golden_nesting",
        "S_k = S_(k-1) S_(k-2) and S_k is a prefix of S_(k+1), 1 <= k <= limit",
    ),
    (
        "golden_shift",
        "letters 1..F(n) repeat at F(n+1)+1..F(n+2), 2 <= n <= limit",
    ),
    (
        "golden_zeckendorf",
        "Zeckendorf blocks of n spell the first n letters, n <= limit",
    ),
    (
        "count_b_formula",
        "N_B(n) = floor((n+1)/phi) against a direct count, n <= limit",
    ),
    (
        "golden_marks",
        "letters at F(2m+1)-1, F(2m+1), 2F(2m+1)-1, 2F(2m+1) are B, A, B, A, 1 <= m <= limit",
    ),
    (
        "letter_at_prefix",
        "letter_at agrees with S_(limit-1) at every position <= F(limit)",
    ),
    (
        "prefix_repetition",
        "first F(n) letters repeat immediately, 4 <= n <= limit",
    ),
    (
        "truncation",
        "(S_n S_(n+1)) - 2 = (S_(n+1) S_n) - 2, 1 <= n <= limit",
    ),
    (
        "kp2",
        "first F(n-1)-2 letters reappear at 2F(n)+1..F(n+2)-2, 5 <= n <= limit",
    ),
    (
        "max_with_top",
        "largest element of A_2k with top summand F(2k+2m), 0 <= m <= ell",
    ),
    (
        "row_ranges",
        "top summand F(2k+2l) occupies rows F(2l+1)+1..F(2l+3), 1 <= l <= ell",
    ),
    (
        "top_counts",
        "F(2l+1) rows with top coefficient 1 and F(2l) with 2, 1 <= l <= ell",
    ),
    (
        "top_monotone",
        "a larger top summand always means a later row",
    ),
    (
        "top_ordering",
        "top-coefficient-2 rows follow top-coefficient-1 rows, 0 <= l <= ell",
    ),
    (
        "translation",
        "top-2 rows of level l are the small elements shifted by 2F(2k+2l), 1 <= l <= ell",
    ),
    (
        "shift_identity",
        "q(j+1)-q(j) = q(j-F(2l+1)+1)-q(j-F(2l+1)) for 1+F(2l+1) <= j < F(2l+3), 1 <= l <= ell",
    ),
    (
        "difference_law",
        "row steps are F(2k) after an A and F(2k+1) after a B, 2 <= j <= rows",
    ),
    (
        "a_closed_form",
        "closed form for A_2k equals the filter min CG(n) = F(2k), n <= limit",
    ),
    (
        "main_theorem",
        "enumerated B_2N equals the filter c_N(n) = 0, n <= limit",
    ),
    (
        "z_formula",
        "enumerated Z(N) equals the exhaustive Zeckendorf filter, n <= limit",
    ),
    (
        "griffiths_floor",
        "floor((n+phi^2)/phi) = floor((n+1)/phi) + 1 by exact bracketing, n <= limit",
    ),
];

/// Runs a registered check.
pub fn verify(check: &str, params: &CheckParams) -> Result<VerificationReport> {
    let p = params;
    match check {
        "cg_bijection" => cg_bijection(p),
        "zeckendorf_bijection" => zeckendorf_bijection(p),
        "golden_length" => sweep(check, 1, p.limit.unwrap_or(25), check_length),
        "golden_nesting" => sweep(check, 1, p.limit.unwrap_or(25), check_nesting),
        "golden_shift" => sweep(check, 2, p.limit.unwrap_or(22), check_block_shift),
        "golden_zeckendorf" => golden_zeckendorf(p),
        "count_b_formula" => count_b_formula(p),
        "golden_marks" => sweep(check, 1, p.limit.unwrap_or(20), |m| {
            check_letter_marks(m).map(|r| r.iter().all(|&ok| ok))
        }),
        "letter_at_prefix" => letter_at_prefix(p),
        "prefix_repetition" => sweep(check, 4, p.limit.unwrap_or(20), check_prefix_repetition),
        "truncation" => sweep(check, 1, p.limit.unwrap_or(20), check_truncation),
        "kp2" => sweep(check, 5, p.limit.unwrap_or(20), check_kp2),
        "max_with_top" | "row_ranges" | "top_counts" | "top_monotone" | "top_ordering"
        | "translation" | "shift_identity" => table_check(check, p),
        "difference_law" => difference_law(p),
        "a_closed_form" => a_closed_form(p),
        "main_theorem" => main_theorem(p),
        "z_formula" => z_formula(p),
        "griffiths_floor" => griffiths_floor_check(p),
        other => Err(Error::UnknownCheck(other.to_string())),
    }
}

fn sweep(
    name: &str,
    from: u64,
    to: u64,
    holds: impl Fn(u64) -> Result<bool>,
) -> Result<VerificationReport> {
    let mut first = None;
    for n in from..=to {
        if !holds(n)? {
            first = Some(Natural::from(n));
            break;
        }
    }
    Ok(VerificationReport::new(
        name,
        format!("{from}..={to}"),
        first,
    ))
}

fn cg_bijection(p: &CheckParams) -> Result<VerificationReport> {
    let limit = p.limit.unwrap_or(10_000);
    let range = format!("n=0..={limit}");
    let table = match brute_cg_table(limit)? {
        Ok(t) => t,
        Err(f) => {
            return Ok(VerificationReport::new(
                "cg_bijection",
                range,
                Some(f.value().into()),
            ))
        }
    };
    let first = table
        .iter()
        .enumerate()
        .find(|(n, d)| cg_decompose(&Natural::from(*n)) != **d)
        .map(|(n, _)| Natural::from(n));
    Ok(VerificationReport::new("cg_bijection", range, first))
}

fn zeckendorf_bijection(p: &CheckParams) -> Result<VerificationReport> {
    let limit = p.limit.unwrap_or(10_000);
    let range = format!("n=0..={limit}");
    let table = match brute_zeckendorf_table(limit)? {
        Ok(t) => t,
        Err(f) => {
            return Ok(VerificationReport::new(
                "zeckendorf_bijection",
                range,
                Some(f.value().into()),
            ))
        }
    };
    let first = table
        .iter()
        .enumerate()
        .find(|(n, indices)| {
            let z = zeckendorf(&Natural::from(*n));
            !z.is_nonadjacent() || z.indices() != indices.as_slice()
        })
        .map(|(n, _)| Natural::from(n));
    Ok(VerificationReport::new(
        "zeckendorf_bijection",
        range,
        first,
    ))
}

fn golden_zeckendorf(p: &CheckParams) -> Result<VerificationReport> {
    let limit = p.limit.unwrap_or(10_000);
    check_bound("limit", limit)?;
    let prefix = GoldenPrefix::new(limit as usize);
    let mut first = None;
    for n in 1..=limit {
        let spelled = zeckendorf_prefix(&Natural::from(n))?;
        if spelled != prefix.letters()[..n as usize] {
            first = Some(Natural::from(n));
            break;
        }
    }
    Ok(VerificationReport::new(
        "golden_zeckendorf",
        format!("n=1..={limit}"),
        first,
    ))
}

fn count_b_formula(p: &CheckParams) -> Result<VerificationReport> {
    let limit = p.limit.unwrap_or(100_000);
    check_bound("limit", limit)?;
    let prefix = GoldenPrefix::new(limit as usize);
    let mut direct = 0u64;
    let mut first = None;
    for n in 0..=limit {
        if n > 0 && prefix.letters()[n as usize - 1] == GoldenLetter::B {
            direct += 1;
        }
        if count_b_u64(n) != direct {
            first = Some(Natural::from(n));
            break;
        }
    }
    Ok(VerificationReport::new(
        "count_b_formula",
        format!("n=0..={limit}"),
        first,
    ))
}

fn letter_at_prefix(p: &CheckParams) -> Result<VerificationReport> {
    let index = p.limit.unwrap_or(26).max(2);
    let len = fib_u64(index);
    check_bound("F(limit)", len)?;
    let prefix = GoldenPrefix::new(len as usize);
    let mut first = None;
    for (i, &l) in prefix.letters().iter().enumerate() {
        if letter_at_u64(i as u64 + 1)? != l {
            first = Some(Natural::from(i + 1));
            break;
        }
    }
    Ok(VerificationReport::new(
        "letter_at_prefix",
        format!("j=1..={len}"),
        first,
    ))
}

/// Rows of `A_{2k}` in increasing order, found by decomposing every integer.
#[derive(Debug, Clone)]
pub struct FilterTable {
    pub k: u64,
    pub values: Vec<u64>,
    pub decompositions: Vec<CgDecomposition>,
}

impl FilterTable {
    /// All rows up to `max_value`.
    pub fn build(k: u64, max_value: u64) -> Result<Self> {
        check_bound("table limit", max_value)?;
        let mut values = Vec::new();
        let mut decompositions = Vec::new();
        for n in 1..=max_value {
            let d = cg_decompose(&Natural::from(n));
            if d.min_position() == Some(k as usize) {
                values.push(n);
                decompositions.push(d);
            }
        }
        Ok(FilterTable {
            k,
            values,
            decompositions,
        })
    }

    /// Every row whose top summand is at most `F(2k + 2 ell)`.
    pub fn through_level(k: u64, ell: u64) -> Result<Self> {
        let top = max_with_top(k, ell)?.to_u64().unwrap_or(u64::MAX);
        Self::build(k, top)
    }

    /// Level of a row: its top summand is `F(2k + 2 level)`.
    pub fn level(&self, row: usize) -> u64 {
        self.decompositions[row]
            .max_position()
            .expect("rows are positive") as u64
            - self.k
    }

    /// 0-based rows at `level` with the given top coefficient (`None` for either).
    fn group(&self, level: u64, top: Option<u8>) -> Vec<usize> {
        (0..self.values.len())
            .filter(|&r| self.level(r) == level)
            .filter(|&r| {
                top.is_none_or(|t| {
                    self.decompositions[r].top_coefficient() == Some(t)
                })
            })
            .collect()
    }

    /// `q(j)`, 1-based.
    pub fn q(&self, j: u64) -> u64 {
        self.values[j as usize - 1]
    }
}

fn table_check(name: &str, p: &CheckParams) -> Result<VerificationReport> {
    let (k_lo, k_hi) = p.k_range(3)?;
    let ell_max = p.ell.unwrap_or(8);
    let range = format!("k={k_lo}..={k_hi}, l<={ell_max}");
    for k in k_lo..=k_hi {
        let table = FilterTable::through_level(k, ell_max)?;
        if let Some(bad) = table_counterexample(name, &table, ell_max)? {
            return Ok(VerificationReport::new(name, range, Some(bad.into())));
        }
    }
    Ok(VerificationReport::new(name, range, None))
}

/// First failing level (or row, for `top_monotone`) in one table.
fn table_counterexample(name: &str, t: &FilterTable, ell_max: u64) -> Result<Option<u64>> {
    let k = t.k;
    let f = fib_u64;
    match name {
        "max_with_top" => {
            for m in 0..=ell_max {
                let rows = t.group(m, None);
                let max = rows.iter().map(|&r| t.values[r]).max();
                if max.map(Natural::from) != Some(max_with_top(k, m)?) {
                    return Ok(Some(m));
                }
            }
        }
        "row_ranges" => {
            for l in 1..=ell_max {
                let rows: Vec<u64> = t.group(l, None).iter().map(|&r| r as u64 + 1).collect();
                let expected: Vec<u64> = (f(2 * l + 1) + 1..=f(2 * l + 3)).collect();
                if rows != expected {
                    return Ok(Some(l));
                }
            }
        }
        "top_counts" => {
            for l in 1..=ell_max {
                let ones = t.group(l, Some(1)).len() as u64;
                let twos = t.group(l, Some(2)).len() as u64;
                if ones != f(2 * l + 1) || twos != f(2 * l) {
                    return Ok(Some(l));
                }
            }
        }
        "top_monotone" => {
            for r in 1..t.values.len() {
                if t.level(r) < t.level(r - 1) {
                    return Ok(Some(r as u64 + 1));
                }
            }
        }
        "top_ordering" => {
            for l in 0..=ell_max {
                let max_one = t.group(l, Some(1)).iter().map(|&r| t.values[r]).max();
                let min_two = t.group(l, Some(2)).iter().map(|&r| t.values[r]).min();
                match (max_one, min_two) {
                    (Some(a), Some(b)) if b > a => {}
                    _ => return Ok(Some(l)),
                }
            }
        }
        "translation" => {
            for l in 1..=ell_max {
                let actual: BTreeSet<u64> =
                    t.group(l, Some(2)).iter().map(|&r| t.values[r]).collect();
                let cap: u64 = (0..l).map(|i| f(2 * k + 2 * i)).sum();
                let shift = 2 * f(2 * k + 2 * l);
                let expected: BTreeSet<u64> = t
                    .values
                    .iter()
                    .filter(|&&v| v <= cap)
                    .map(|&v| v + shift)
                    .collect();
                if actual != expected {
                    return Ok(Some(l));
                }
            }
        }
        "shift_identity" => {
            let diff = |j: u64| t.q(j + 1) as i128 - t.q(j) as i128;
            for l in 1..=ell_max {
                let w = f(2 * l + 1);
                let hi = f(2 * l + 3) - 1;
                // q(hi + 1) is the last row at level l
                if (hi + 1) as usize > t.values.len() {
                    return Ok(Some(l));
                }
                if (1 + w..=hi).any(|j| diff(j) != diff(j - w)) {
                    return Ok(Some(l));
                }
            }
        }
        _ => return Err(Error::UnknownCheck(name.to_string())),
    }
    Ok(None)
}

fn difference_law(p: &CheckParams) -> Result<VerificationReport> {
    let (k_lo, k_hi) = p.k_range(3)?;
    let rows = p.rows.unwrap_or(10_000).max(2);
    let range = format!("k={k_lo}..={k_hi}, j=2..={rows}");
    for k in k_lo..=k_hi {
        // q(rows + 1) is needed; A_{2k} has at least one element per F(2k+1) span.
        let span = fib_u64(2 * k + 1) * (rows + 2);
        let table = FilterTable::build(k, span)?;
        let built = RowTable::new(k, rows as usize + 1)?;
        let small = fib_u64(2 * k);
        let big = fib_u64(2 * k + 1);
        for j in 1..=rows + 1 {
            if Natural::from(table.q(j)) != built.rows()[j as usize - 1] {
                return Ok(VerificationReport::new(
                    "difference_law",
                    range,
                    Some(j.into()),
                ));
            }
        }
        for j in 2..=rows {
            let expected = match letter_at_u64(j - 1)? {
                GoldenLetter::A => small,
                GoldenLetter::B => big,
            };
            if table.q(j + 1) - table.q(j) != expected {
                return Ok(VerificationReport::new(
                    "difference_law",
                    range,
                    Some(j.into()),
                ));
            }
        }
    }
    Ok(VerificationReport::new("difference_law", range, None))
}

/// Chung-Graham decompositions of `0..=limit`, computed once per check.
fn decompositions(limit: u64) -> Result<Vec<CgDecomposition>> {
    check_bound("limit", limit)?;
    Ok((0..=limit)
        .map(|n| cg_decompose(&Natural::from(n)))
        .collect())
}

fn first_mismatch(listed: &[Natural], filtered: &[u64]) -> Option<Natural> {
    // smallest value present in exactly one of the two ascending lists
    let listed: BTreeSet<Natural> = listed.iter().cloned().collect();
    let filtered: BTreeSet<Natural> = filtered.iter().map(|&v| Natural::from(v)).collect();
    listed.symmetric_difference(&filtered).next().cloned()
}

fn a_closed_form(p: &CheckParams) -> Result<VerificationReport> {
    let (k_lo, k_hi) = p.k_range(4)?;
    let limit = p.limit.unwrap_or(10_000);
    let range = format!("k={k_lo}..={k_hi}, n<={limit}");
    let all = decompositions(limit)?;
    for k in k_lo..=k_hi {
        let listed = a_members(k, &Natural::from(limit))?;
        let filtered: Vec<u64> = (1..=limit)
            .filter(|&n| all[n as usize].min_position() == Some(k as usize))
            .collect();
        if let Some(bad) = first_mismatch(&listed, &filtered) {
            return Ok(VerificationReport::new("a_closed_form", range, Some(bad)));
        }
    }
    Ok(VerificationReport::new("a_closed_form", range, None))
}

fn main_theorem(p: &CheckParams) -> Result<VerificationReport> {
    let (n_lo, n_hi) = p.n_range(1, 4)?;
    let limit = p.limit.unwrap_or(100_000);
    let range = format!("N={n_lo}..={n_hi}, n<={limit}");
    let all = decompositions(limit)?;
    for big_n in n_lo..=n_hi {
        let listed = b_members(big_n, &Natural::from(limit))?;
        let filtered: Vec<u64> = (1..=limit)
            .filter(|&n| all[n as usize].coefficient(big_n as usize) == 0)
            .collect();
        if let Some(bad) = first_mismatch(&listed, &filtered) {
            return Ok(VerificationReport::new("main_theorem", range, Some(bad)));
        }
    }
    Ok(VerificationReport::new("main_theorem", range, None))
}

fn z_formula(p: &CheckParams) -> Result<VerificationReport> {
    let (n_lo, n_hi) = p.n_range(2, 8)?;
    let limit = p.limit.unwrap_or(10_000);
    let range = format!("N={n_lo}..={n_hi}, n<={limit}");
    let table = match brute_zeckendorf_table(limit)? {
        Ok(t) => t,
        Err(f) => {
            return Ok(VerificationReport::new(
                "z_formula",
                range,
                Some(f.value().into()),
            ))
        }
    };
    for big_n in n_lo..=n_hi {
        let listed = z_members(big_n, &Natural::from(limit))?;
        let filtered: Vec<u64> = (1..=limit)
            .filter(|&n| table[n as usize].contains(&big_n))
            .collect();
        if let Some(bad) = first_mismatch(&listed, &filtered) {
            return Ok(VerificationReport::new("z_formula", range, Some(bad)));
        }
    }
    Ok(VerificationReport::new("z_formula", range, None))
}

/// Checks `r = griffiths_floor(n)` against the definition of the floor of
/// `x = ((n+1) sqrt 5 + 1 - n) / 2`: `r <= x < r + 1`, i.e.
/// `2r + n - 1 < (n+1) sqrt 5 < 2r + n + 1`, squared in exact integers.
pub fn griffiths_floor_brackets(n: u64) -> bool {
    let r = match griffiths_floor(&Natural::from(n)).to_u64() {
        Some(r) => r as i128,
        None => return false,
    };
    let n = n as i128;
    let five_sq = 5 * (n + 1) * (n + 1);
    let lower = 2 * r + n - 1;
    let upper = 2 * r + n + 1;
    (lower < 0 || lower * lower < five_sq) && upper > 0 && five_sq < upper * upper
}

fn griffiths_floor_check(p: &CheckParams) -> Result<VerificationReport> {
    let limit = p.limit.unwrap_or(SAFETY_BOUND);
    check_bound("limit", limit)?;
    let first = (0..=limit)
        .find(|&n| !griffiths_floor_brackets(n))
        .map(Natural::from);
    Ok(VerificationReport::new(
        "griffiths_floor",
        format!("n=0..={limit}"),
        first,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_map_small() {
        let map = brute_cg_map(&Natural::from(2u32)).unwrap();
        assert_eq!(map.len(), 3);
        assert!(map[&Natural::from(0u32)].is_empty());
        assert_eq!(map[&Natural::from(1u32)].coefficients(), &[1]);
        assert_eq!(map[&Natural::from(2u32)].coefficients(), &[2]);

        let map = brute_cg_map(&Natural::from(7u32)).unwrap();
        assert_eq!(map[&Natural::from(7u32)].coefficients(), &[1, 2]);
    }

    #[test]
    fn brute_map_respects_bound() {
        assert!(matches!(
            brute_cg_map(&Natural::from(SAFETY_BOUND + 1)),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn brute_zeckendorf_small() {
        let t = brute_zeckendorf_table(12).unwrap().unwrap();
        assert_eq!(t[0], Vec::<u64>::new());
        assert_eq!(t[4], vec![2, 4]);
        assert_eq!(t[11], vec![4, 6]);
        assert_eq!(t[12], vec![2, 4, 6]);
    }

    #[test]
    fn report_json_shape() {
        let ok = VerificationReport::new("x", "n=0..=3".into(), None);
        assert_eq!(
            ok.to_json(),
            r#"{"check":"x","range":"n=0..=3","passed":true,"counterexample":null}"#
        );
        let bad = VerificationReport::new("x", "r".into(), Some(Natural::from(5u32)));
        assert!(!bad.passed());
        assert_eq!(
            bad.to_json(),
            r#"{"check":"x","range":"r","passed":false,"counterexample":"5"}"#
        );
    }

    #[test]
    fn unknown_check() {
        assert!(matches!(
            verify("no_such_check", &CheckParams::default()),
            Err(Error::UnknownCheck(_))
        ));
    }

    #[test]
    fn every_registered_check_dispatches() {
        let small = CheckParams::default().limit(30).rows(30).ell(3);
        for (name, _) in CHECKS {
            let p = if *name == "letter_at_prefix" {
                CheckParams::default().limit(12)
            } else {
                small
            };
            let r = verify(name, &p).unwrap();
            assert_eq!(r.check_name(), *name);
        }
    }

    #[test]
    fn examples() {
        assert!(
            verify("cg_bijection", &CheckParams::default().limit(10_000))
                .unwrap()
                .passed()
        );
        assert!(
            verify("difference_law", &CheckParams::default().k(1).rows(1_000))
                .unwrap()
                .passed()
        );
    }

    #[test]
    fn golden_marks_reports_m_one() {
        let r = verify("golden_marks", &CheckParams::default()).unwrap();
        assert_eq!(r.first_counterexample(), Some(&Natural::from(1u32)));
    }

    #[test]
    fn griffiths_floor_small() {
        for n in 0..1000 {
            assert!(griffiths_floor_brackets(n), "n = {n}");
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let p = CheckParams::default().limit(500);
        assert_eq!(
            verify("main_theorem", &p).unwrap(),
            verify("main_theorem", &p).unwrap()
        );
    }
}
