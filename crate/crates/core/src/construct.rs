//! Simplex and punctured simplex generator matrices.
//!
//! The q-ary simplex code of dimension m has one generator column per
//! projective point of `GF(q)^m`. The canonical column order fixes each point
//! by its normalized representative (first nonzero entry from the top equals
//! 1) and sorts representatives by their integer value read top-to-bottom in
//! base q, top row most significant. For q = 2 and m = 3 the columns are the
//! integers 1 through 7.
//!
//! The punctured code `S_q(m) - S_q(s)` deletes the columns of an embedded
//! s-dimensional simplex: with the canonical order, the deleted columns are
//! exactly those whose top `m - s` entries vanish, i.e. the first
//! `(q^s - 1)/(q - 1)` coordinates.

use num_bigint::BigUint;

use crate::codes::LinearCode;
use crate::coords::CoordSet;
use crate::gf::FiniteField;
use crate::{Error, Result};

/// Refuse to materialize generator matrices longer than this.
pub const MAX_LENGTH: u128 = 1 << 20;

/// The (q, m, s) descriptor of a punctured simplex code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PuncturedSimplexSpec {
    pub q: u32,
    pub m: u32,
    pub s: u32,
}

impl PuncturedSimplexSpec {
    pub fn new(q: u32, m: u32, s: u32) -> Result<Self> {
        FiniteField::new(q)?;
        if m < 1 {
            return Err(Error::InvalidArgs("dimension m must be at least 1".into()));
        }
        if s >= m {
            return Err(Error::InvalidArgs(format!(
                "deleted dimension s = {s} must satisfy 0 <= s <= m - 1 = {}",
                m - 1
            )));
        }
        Ok(PuncturedSimplexSpec { q, m, s })
    }

    /// Closed-form `[n, k, d]`.
    pub fn expected_params(&self) -> (u128, u32, u128) {
        let q = self.q as u128;
        let n = (q.pow(self.m) - q.pow(self.s)) / (q - 1);
        let d = if self.s == 0 {
            q.pow(self.m - 1)
        } else {
            q.pow(self.m - 1) - q.pow(self.s - 1)
        };
        (n, self.m, d)
    }

    /// Whether the code coincides with the first-order Reed-Muller code
    /// RM(1, m - 1) (up to equivalence), i.e. s = m - 1.
    pub fn is_reed_muller(&self) -> bool {
        self.s == self.m - 1
    }
}

impl std::fmt::Display for PuncturedSimplexSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "S_{}({}) - S_{}({})", self.q, self.m, self.q, self.s)
    }
}

/// A constructed punctured simplex code together with its descriptor.
#[derive(Clone, Debug)]
pub struct PuncturedSimplex {
    spec: PuncturedSimplexSpec,
    code: LinearCode,
}

impl PuncturedSimplex {
    pub fn spec(&self) -> PuncturedSimplexSpec {
        self.spec
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn into_code(self) -> LinearCode {
        self.code
    }
}

/// Gaussian binomial coefficient: the number of k-dimensional subspaces of an
/// n-dimensional space over GF(q), as an exact big integer.
pub fn gaussian_binomial(n: u64, k: u64, q: u64) -> Result<BigUint> {
    if q < 2 {
        return Err(Error::InvalidArgs(format!(
            "gaussian binomial needs q >= 2, got {q}"
        )));
    }
    if k > n {
        return Ok(BigUint::from(0u32));
    }
    let q = BigUint::from(q);
    let one = BigUint::from(1u32);
    let mut numerator = BigUint::from(1u32);
    let mut denominator = BigUint::from(1u32);
    for i in 0..k {
        numerator *= q.pow((n - i) as u32) - &one;
        denominator *= q.pow((i + 1) as u32) - &one;
    }
    // The ratio is an integer; the division is exact.
    Ok(numerator / denominator)
}

/// All normalized projective representatives of `GF(q)^m`, in canonical order.
fn projective_columns(field: &FiniteField, m: u32) -> Result<Vec<Vec<u8>>> {
    let q = field.order() as u128;
    let total = q.pow(m);
    if total > MAX_LENGTH {
        return Err(Error::InvalidArgs(format!(
            "q^m = {total} exceeds the construction cap {MAX_LENGTH}"
        )));
    }
    let q8 = field.order() as u8;
    let mut cols = Vec::new();
    for value in 1..total {
        // Digits top-to-bottom, top row most significant.
        let mut col = vec![0u8; m as usize];
        let mut v = value;
        for r in (0..m as usize).rev() {
            col[r] = (v % q8 as u128) as u8;
            v /= q8 as u128;
        }
        let first_nonzero = col.iter().find(|&&x| x != 0).copied().unwrap();
        if first_nonzero == 1 {
            cols.push(col);
        }
    }
    Ok(cols)
}

/// The simplex code `S_q(m)`: parameters `[(q^m - 1)/(q - 1), m, q^(m-1)]`.
pub fn simplex(q: u32, m: u32) -> Result<LinearCode> {
    let field = FiniteField::new(q)?;
    if m < 1 {
        return Err(Error::InvalidArgs("dimension m must be at least 1".into()));
    }
    let cols = projective_columns(&field, m)?;
    let rows: Vec<Vec<u8>> = (0..m as usize)
        .map(|r| cols.iter().map(|c| c[r]).collect())
        .collect();
    LinearCode::from_rows(field, &rows)
}

/// The punctured simplex code `S_q(m) - S_q(s)`.
///
/// Deletes from `S_q(m)` the columns of the embedded `S_q(s)` supported on
/// the bottom s rows; for s = 0 nothing is deleted. Parameters:
/// `[(q^m - q^s)/(q - 1), m, q^(m-1) - q^(s-1)]` for s >= 1.
pub fn punctured_simplex(q: u32, m: u32, s: u32) -> Result<PuncturedSimplex> {
    let spec = PuncturedSimplexSpec::new(q, m, s)?;
    let field = FiniteField::new(q)?;
    let top = (m - s) as usize;
    let cols: Vec<Vec<u8>> = projective_columns(&field, m)?
        .into_iter()
        .filter(|c| c[..top].iter().any(|&x| x != 0))
        .collect();
    let rows: Vec<Vec<u8>> = (0..m as usize)
        .map(|r| cols.iter().map(|c| c[r]).collect())
        .collect();
    let code = LinearCode::from_rows(field, &rows)?;
    Ok(PuncturedSimplex { spec, code })
}

/// The canonical coordinates of `S_q(m)` deleted by `punctured_simplex`:
/// the first `(q^s - 1)/(q - 1)` coordinates.
pub fn deleted_set(q: u32, m: u32, s: u32) -> Result<CoordSet> {
    PuncturedSimplexSpec::new(q, m, s)?;
    let q = q as u128;
    let t = (q.pow(s) - 1) / (q - 1);
    Ok(CoordSet::full(t as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Brute-force subspace count: enumerate all k x n matrices, keep the
    /// full-rank ones, and count distinct row spans.
    fn count_subspaces(n: u32, k: u32, q: u32) -> u64 {
        let field = FiniteField::new(q).unwrap();
        let cells = (k * n) as usize;
        let mut spans: HashSet<Vec<Vec<u8>>> = HashSet::new();
        let total = (q as u64).pow(cells as u32);
        for idx in 0..total {
            let mut v = idx;
            let mut rows = vec![vec![0u8; n as usize]; k as usize];
            for r in 0..k as usize {
                for c in 0..n as usize {
                    rows[r][c] = (v % q as u64) as u8;
                    v /= q as u64;
                }
            }
            let (rref_rows, _) = crate::linalg::rref(&field, &rows);
            if rref_rows.len() == k as usize {
                spans.insert(rref_rows);
            }
        }
        spans.len() as u64
    }

    #[test]
    fn gaussian_binomial_matches_brute_force_subspace_counts() {
        for (n, k, q) in [
            (3, 1, 2),
            (3, 2, 2),
            (4, 2, 2),
            (4, 3, 2),
            (3, 1, 3),
            (3, 2, 3),
            (4, 2, 3),
        ] {
            let expected = count_subspaces(n, k, q);
            let got = gaussian_binomial(n as u64, k as u64, q as u64).unwrap();
            assert_eq!(got, BigUint::from(expected), "[{n} {k}]_{q}");
        }
    }

    #[test]
    fn gaussian_binomial_identities() {
        // Symmetry and boundary values.
        assert_eq!(
            gaussian_binomial(4, 1, 2).unwrap(),
            BigUint::from(15u32)
        );
        assert_eq!(
            gaussian_binomial(4, 3, 2).unwrap(),
            BigUint::from(15u32)
        );
        assert_eq!(
            gaussian_binomial(4, 2, 2).unwrap(),
            BigUint::from(35u32)
        );
        assert_eq!(gaussian_binomial(5, 0, 3).unwrap(), BigUint::from(1u32));
        assert_eq!(gaussian_binomial(5, 5, 3).unwrap(), BigUint::from(1u32));
        assert_eq!(gaussian_binomial(2, 3, 2).unwrap(), BigUint::from(0u32));
    }

    #[test]
    fn binary_simplex_columns_are_ascending_integers() {
        let c = simplex(2, 3).unwrap();
        assert_eq!(c.length(), 7);
        let values: Vec<u32> = c
            .columns()
            .iter()
            .map(|col| col.iter().fold(0, |acc, &b| acc * 2 + b as u32))
            .collect();
        assert_eq!(values, vec![1, 2, 3, 4, 5, 6, 7]);
    }

    #[test]
    fn ternary_simplex_columns_are_normalized() {
        let c = simplex(3, 2).unwrap();
        assert_eq!(c.length(), 4);
        // Normalized representatives in ascending value order: 01, 10, 11, 12.
        let cols: Vec<Vec<u8>> = c.columns().to_vec();
        assert_eq!(
            cols,
            vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2]]
        );
    }

    #[test]
    fn simplex_parameters() {
        for (q, m) in [(2u32, 3u32), (2, 4), (3, 3), (4, 2), (5, 2)] {
            let c = simplex(q, m).unwrap();
            let n = ((q as u128).pow(m) - 1) / (q as u128 - 1);
            assert_eq!(c.length() as u128, n);
            assert_eq!(c.dimension() as u32, m);
            assert_eq!(
                c.min_distance().unwrap() as u128,
                (q as u128).pow(m - 1),
                "distance of S_{q}({m})"
            );
        }
    }

    #[test]
    fn punctured_simplex_parameters_match_closed_form() {
        for q in [2u32, 3] {
            for m in 2..=4u32 {
                for s in 0..m {
                    let ps = punctured_simplex(q, m, s).unwrap();
                    let (n, k, d) = ps.spec().expected_params();
                    assert_eq!(ps.code().length() as u128, n);
                    assert_eq!(ps.code().dimension() as u32, k);
                    assert_eq!(ps.code().min_distance().unwrap() as u128, d);
                }
            }
        }
    }

    #[test]
    fn deleted_set_is_canonical_prefix() {
        assert_eq!(deleted_set(2, 4, 2).unwrap(), CoordSet::from([1, 2, 3]));
        assert_eq!(deleted_set(2, 4, 0).unwrap(), CoordSet::empty());
        assert_eq!(deleted_set(3, 3, 1).unwrap(), CoordSet::from([1]));
        // Deleting the prefix from the simplex reproduces the punctured code.
        let full = simplex(2, 4).unwrap();
        let punct = punctured_simplex(2, 4, 2).unwrap();
        let kept: Vec<Vec<u8>> = full.columns()[3..].to_vec();
        assert_eq!(kept, punct.code().columns());
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert!(punctured_simplex(2, 4, 4).is_err());
        assert!(punctured_simplex(6, 4, 1).is_err());
        assert!(simplex(2, 0).is_err());
    }

    #[test]
    fn reed_muller_marker() {
        assert!(PuncturedSimplexSpec::new(2, 4, 3).unwrap().is_reed_muller());
        assert!(!PuncturedSimplexSpec::new(2, 4, 2).unwrap().is_reed_muller());
    }
}
