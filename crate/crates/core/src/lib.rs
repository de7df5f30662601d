//! Chung-Graham numeration over even-indexed Fibonacci numbers.
//!
//! Every positive integer has a unique representation `n = sum c_i F(2i)` with
//! digits `c_i` in `{0, 1, 2}` and a 0 between any two 2's. This crate computes
//! those decompositions, enumerates the integers whose decomposition avoids a
//! fixed term `F(2N)`, and ships brute-force references that check the
//! supporting statements about the golden string and the ordered table of
//! `A_{2k}` over finite ranges.
//!
//! Fibonacci indexing is `F(1) = F(2) = 1` everywhere; golden-string positions
//! are 1-based. All integers are arbitrary precision.

pub mod decomposition;
pub mod error;
pub mod golden;
pub mod numeric;
pub mod oracle;
pub mod sets;

pub use decomposition::{
    cg_decompose, cg_evaluate, cg_validate, summand_sets, zeckendorf, CgDecomposition, SummandSets,
    ZeckDecomposition,
};
pub use error::{Error, Result};
pub use golden::{count_b, letter_at, s_k, truncate_last_two, GoldenLetter, GoldenPrefix};
pub use numeric::{fib, floor_div_phi, isqrt, FibIndex, Natural};
pub use oracle::{brute_cg_map, verify, CheckParams, VerificationReport, CHECKS};
pub use sets::{
    a_members, b_contains, b_members, max_with_top, q_row, z_members, Family, RowTable, SetFamily,
    SetFormat,
};
