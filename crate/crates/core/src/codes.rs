//! Linear codes presented by full-rank generator matrices.
//!
//! A [`LinearCode`] stores its generator column-major over a [`FiniteField`].
//! Coordinates are 1-based throughout. The entropy of a coordinate set is the
//! rank of the corresponding column submatrix (equivalently, the dimension of
//! the restricted code), which is the rank function of the column matroid and
//! the workhorse for everything in [`crate::matroid`] and beyond.
//!
//! Exhaustive codeword enumeration (weight enumerator, minimum distance) is
//! capped at [`ENUMERATION_CAP`] codewords and runs either sequentially or via
//! the parallel kernels in [`sweep`]; the two paths are bit-identical.

use std::collections::BTreeMap;

use crate::coords::CoordSet;
use crate::gf::FiniteField;
use crate::linalg;
use crate::{Error, Result};

/// Hard cap on `q^k` for exhaustive codeword enumeration.
pub const ENUMERATION_CAP: u128 = 1 << 24;

/// Hard cap on the code length for permutation-equivalence search.
pub const PERMUTATION_SEARCH_CAP: usize = 14;

/// A `[n, k]` linear code over GF(q), stored as `n` generator columns.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: FiniteField,
    k: usize,
    n: usize,
    cols: Vec<Vec<u8>>,
}

impl LinearCode {
    /// Builds a code from generator rows, rejecting all-zero columns.
    ///
    /// Rows must be non-empty, of equal positive length, with entries in
    /// `[0, q)`, and linearly independent.
    pub fn from_rows(field: FiniteField, rows: &[Vec<u8>]) -> Result<Self> {
        let code = Self::from_rows_with_zero_columns(field, rows)?;
        if let Some(j) = code.cols.iter().position(|c| c.iter().all(|&x| x == 0)) {
            return Err(Error::InvalidArgs(format!(
                "all-zero generator column at coordinate {}",
                j + 1
            )));
        }
        Ok(code)
    }

    /// Builds a code from generator rows, permitting all-zero columns.
    ///
    /// Derived codes (restrictions, shortenings) may legitimately contain
    /// zero columns; freshly constructed codes should use [`Self::from_rows`].
    pub fn from_rows_with_zero_columns(field: FiniteField, rows: &[Vec<u8>]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidArgs("generator has no rows".into()));
        }
        let n = rows[0].len();
        if n == 0 {
            return Err(Error::InvalidArgs("generator rows are empty".into()));
        }
        for row in rows {
            if row.len() != n {
                return Err(Error::InvalidArgs(
                    "generator rows have unequal lengths".into(),
                ));
            }
            for &x in row {
                field.element(x as u32)?;
            }
        }
        let k = rows.len();
        let rank = linalg::rank_of(field, n, rows.iter());
        if rank != k {
            return Err(Error::RankDeficient { rank, rows: k });
        }
        let cols = (0..n)
            .map(|j| rows.iter().map(|row| row[j]).collect())
            .collect();
        Ok(LinearCode { field, k, n, cols })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn length(&self) -> usize {
        self.n
    }

    /// The generator column at 1-based coordinate `j`.
    pub fn column(&self, j: usize) -> Result<&[u8]> {
        if j == 0 || j > self.n {
            return Err(Error::IndexOutOfRange {
                index: j,
                n: self.n,
            });
        }
        Ok(&self.cols[j - 1])
    }

    pub fn columns(&self) -> &[Vec<u8>] {
        &self.cols
    }

    /// Generator rows (k rows of length n).
    pub fn rows(&self) -> Vec<Vec<u8>> {
        (0..self.k)
            .map(|i| self.cols.iter().map(|c| c[i]).collect())
            .collect()
    }

    fn check_set(&self, set: &CoordSet) -> Result<()> {
        for e in set.iter() {
            if e == 0 || e > self.n {
                return Err(Error::IndexOutOfRange {
                    index: e,
                    n: self.n,
                });
            }
        }
        Ok(())
    }

    /// Entropy of a coordinate set: the rank of its column submatrix.
    ///
    /// `entropy` is monotone and submodular, zero on the empty set, and equals
    /// `k` on the full set.
    pub fn entropy(&self, set: &CoordSet) -> Result<usize> {
        self.check_set(set)?;
        Ok(linalg::rank_of(
            self.field,
            self.k,
            set.iter().map(|e| &self.cols[e - 1]),
        ))
    }

    /// Closure: all coordinates whose columns lie in the span of `set`.
    pub fn closure(&self, set: &CoordSet) -> Result<CoordSet> {
        self.check_set(set)?;
        let mut basis = linalg::Basis::new(self.field, self.k);
        for e in set.iter() {
            basis.insert(&self.cols[e - 1]);
        }
        Ok((1..=self.n)
            .filter(|&e| basis.contains_in_span(&self.cols[e - 1]))
            .collect())
    }

    /// Restriction `C|_I`: the code on the coordinates of `I` (ascending),
    /// re-based to `H(I)` generator rows.
    pub fn restrict(&self, set: &CoordSet) -> Result<LinearCode> {
        self.check_set(set)?;
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        let sub_rows: Vec<Vec<u8>> = (0..self.k)
            .map(|i| set.iter().map(|e| self.cols[e - 1][i]).collect())
            .collect();
        let (reduced, _) = linalg::rref(&self.field, &sub_rows);
        if reduced.is_empty() {
            return Err(Error::InvalidArgs(
                "restriction has zero entropy".into(),
            ));
        }
        let k = reduced.len();
        let cols = (0..set.len())
            .map(|j| reduced.iter().map(|row| row[j]).collect())
            .collect();
        Ok(LinearCode {
            field: self.field,
            k,
            n: set.len(),
            cols,
        })
    }

    /// Shortening `C / I`: codewords vanishing on `I`, restricted to the
    /// complement. The result is a `[n - |I|, k - H(I)]` code.
    pub fn shorten(&self, set: &CoordSet) -> Result<LinearCode> {
        self.check_set(set)?;
        let h = self.entropy(set)?;
        if h == self.k {
            return Err(Error::FullEntropyShorten { k: self.k });
        }
        if set.is_empty() {
            return Ok(self.clone());
        }
        // Messages m with m . g_e = 0 for all e in I.
        let constraint_rows: Vec<Vec<u8>> = set.iter().map(|e| self.cols[e - 1].clone()).collect();
        let message_basis = linalg::nullspace(&self.field, &constraint_rows, self.k);
        debug_assert_eq!(message_basis.len(), self.k - h);
        let cols: Vec<Vec<u8>> = (1..=self.n)
            .filter(|e| !set.contains(*e))
            .map(|e| {
                message_basis
                    .iter()
                    .map(|m| dot(&self.field, m, &self.cols[e - 1]))
                    .collect()
            })
            .collect();
        Ok(LinearCode {
            field: self.field,
            k: self.k - h,
            n: cols.len(),
            cols,
        })
    }

    /// Encodes a message of length k.
    pub fn encode(&self, message: &[u8]) -> Result<Vec<u8>> {
        if message.len() != self.k {
            return Err(Error::InvalidArgs(format!(
                "message length {} != dimension {}",
                message.len(),
                self.k
            )));
        }
        for &x in message {
            self.field.element(x as u32)?;
        }
        Ok(self
            .cols
            .iter()
            .map(|col| dot(&self.field, message, col))
            .collect())
    }

    /// Visits every codeword once, in base-q message-counter order.
    ///
    /// Stepping message digit `i` from label `t` to `t + 1` changes the
    /// codeword by `((t+1) - t) * row_i` in field arithmetic. Over a prime
    /// field that difference is always 1 (including the wrap from q-1 to 0),
    /// so the update is a plain row addition; over GF(4), GF(8), and GF(9)
    /// the difference depends on `t` and the row must be scaled.
    pub fn for_each_codeword(&self, mut f: impl FnMut(&[u8])) -> Result<()> {
        let total = self.codeword_count()?;
        let q = self.field.order() as u8;
        let rows = self.rows();
        let mut digits = vec![0u8; self.k];
        let mut cw = vec![0u8; self.n];
        f(&cw);
        let mut count = 1u128;
        while count < total {
            let mut i = 0;
            loop {
                let old = digits[i];
                let new = if old + 1 == q { 0 } else { old + 1 };
                let delta = self.field.sub(new, old);
                if delta == 1 {
                    for (c, r) in cw.iter_mut().zip(&rows[i]) {
                        *c = self.field.add(*c, *r);
                    }
                } else {
                    for (c, r) in cw.iter_mut().zip(&rows[i]) {
                        *c = self.field.add(*c, self.field.mul(delta, *r));
                    }
                }
                digits[i] = new;
                if new == 0 {
                    i += 1;
                } else {
                    break;
                }
            }
            f(&cw);
            count += 1;
        }
        Ok(())
    }

    pub(crate) fn codeword_count(&self) -> Result<u128> {
        let q = self.field.order() as u128;
        let mut total = 1u128;
        for _ in 0..self.k {
            total = total.checked_mul(q).unwrap_or(u128::MAX);
            if total > ENUMERATION_CAP {
                return Err(Error::EnumerationCapExceeded {
                    words: total,
                    cap: ENUMERATION_CAP,
                });
            }
        }
        Ok(total)
    }

    /// Minimum Hamming distance, by exhaustive enumeration.
    pub fn min_distance(&self) -> Result<usize> {
        let hist = sweep::weight_histogram(self)?;
        hist.iter()
            .skip(1)
            .position(|&c| c > 0)
            .map(|p| p + 1)
            .ok_or_else(|| Error::InvalidArgs("code has no nonzero codeword".into()))
    }

    /// Weight enumerator, by exhaustive enumeration.
    pub fn weight_enumerator(&self) -> Result<WeightEnumerator> {
        let hist = sweep::weight_histogram(self)?;
        Ok(WeightEnumerator::from_histogram(self.n, &hist))
    }

    /// `[n, k, d]` with `d` computed exhaustively.
    pub fn params(&self) -> Result<(usize, usize, usize)> {
        Ok((self.n, self.k, self.min_distance()?))
    }

    /// Serializes to the matrix text format:
    /// line 1 `q k n`, then k rows of n space-separated entries.
    pub fn to_matrix_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.field.order(), self.k, self.n);
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the matrix text format produced by [`Self::to_matrix_text`].
    pub fn from_matrix_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing header line".into(),
        })?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(Error::Parse {
                line: 1,
                msg: format!("expected `q k n`, got {} fields", fields.len()),
            });
        }
        let parse_u = |s: &str, what: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("invalid {what}: {s:?}"),
            })
        };
        let q = parse_u(fields[0], "field order")?;
        let k = parse_u(fields[1], "dimension")?;
        let n = parse_u(fields[2], "length")?;
        let field = FiniteField::new(q as u32)?;
        let mut rows = Vec::with_capacity(k);
        for i in 0..k {
            let line_no = i + 2;
            let line = lines.next().ok_or(Error::Parse {
                line: line_no,
                msg: "missing generator row".into(),
            })?;
            let row: Vec<u8> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<u32>()
                        .map_err(|_| Error::Parse {
                            line: line_no,
                            msg: format!("invalid entry {tok:?}"),
                        })
                        .and_then(|v| field.element(v))
                })
                .collect::<Result<_>>()?;
            if row.len() != n {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected {n} entries, got {}", row.len()),
                });
            }
            rows.push(row);
        }
        if let Some(extra) = lines.find(|l| !l.trim().is_empty()) {
            return Err(Error::Parse {
                line: k + 2,
                msg: format!("unexpected trailing content {extra:?}"),
            });
        }
        Self::from_rows_with_zero_columns(field, &rows)
    }

    /// Whether some column permutation carries this code onto `other`.
    ///
    /// Runs a backtracking search over column assignments, pruning with
    /// row-space comparison of the assigned prefixes; capped at
    /// [`PERMUTATION_SEARCH_CAP`] coordinates.
    pub fn is_permutation_equivalent(&self, other: &LinearCode) -> Result<bool> {
        if self.n > PERMUTATION_SEARCH_CAP || other.n > PERMUTATION_SEARCH_CAP {
            return Err(Error::SearchCapExceeded {
                n: self.n.max(other.n),
                cap: PERMUTATION_SEARCH_CAP,
            });
        }
        if self.n != other.n
            || self.k != other.k
            || self.field.order() != other.field.order()
        {
            return Ok(false);
        }
        if self.weight_enumerator()? != other.weight_enumerator()? {
            return Ok(false);
        }
        let mut assigned: Vec<usize> = Vec::with_capacity(self.n);
        let mut used = vec![false; self.n];
        Ok(self.match_columns(other, &mut assigned, &mut used))
    }

    fn match_columns(
        &self,
        other: &LinearCode,
        assigned: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let depth = assigned.len();
        if depth > 0 {
            let mine: Vec<Vec<u8>> = (0..self.k)
                .map(|i| assigned.iter().map(|&j| self.cols[j][i]).collect())
                .collect();
            let theirs: Vec<Vec<u8>> = (0..other.k)
                .map(|i| (0..depth).map(|j| other.cols[j][i]).collect())
                .collect();
            let (a, _) = linalg::rref(&self.field, &mine);
            let (b, _) = linalg::rref(&other.field, &theirs);
            if a != b {
                return false;
            }
        }
        if depth == self.n {
            return true;
        }
        for cand in 0..self.n {
            if used[cand] {
                continue;
            }
            used[cand] = true;
            assigned.push(cand);
            if self.match_columns(other, assigned, used) {
                return true;
            }
            assigned.pop();
            used[cand] = false;
        }
        false
    }
}

pub(crate) fn dot(field: &FiniteField, a: &[u8], b: &[u8]) -> u8 {
    a.iter()
        .zip(b)
        .fold(0u8, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}

/// Weight distribution of a code: `weight -> number of codewords`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    n: usize,
    counts: BTreeMap<usize, u128>,
}

impl WeightEnumerator {
    pub fn new(n: usize, counts: BTreeMap<usize, u128>) -> Self {
        WeightEnumerator { n, counts }
    }

    fn from_histogram(n: usize, hist: &[u64]) -> Self {
        let counts = hist
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, &c)| (w, c as u128))
            .collect();
        WeightEnumerator { n, counts }
    }

    pub fn length(&self) -> usize {
        self.n
    }

    /// Sparse counts: only weights with at least one codeword appear.
    pub fn counts(&self) -> &BTreeMap<usize, u128> {
        &self.counts
    }

    pub fn count(&self, weight: usize) -> u128 {
        self.counts.get(&weight).copied().unwrap_or(0)
    }

    /// Total number of codewords (q^k).
    pub fn total(&self) -> u128 {
        self.counts.values().sum()
    }

    /// Smallest nonzero weight with a codeword.
    pub fn distance(&self) -> Option<usize> {
        self.counts.keys().find(|&&w| w > 0).copied()
    }
}

impl std::fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (idx, (w, c)) in self.counts.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}: {c}")?;
        }
        write!(f, "}}")
    }
}

/// Exhaustive-enumeration kernels.
///
/// `weight_histogram` dispatches to the parallel kernel when the `parallel`
/// feature is enabled and to the sequential one otherwise. Both kernels visit
/// messages in base-q counter order and merge chunk histograms by elementwise
/// addition, so their outputs are identical.
pub mod sweep {
    use super::*;

    /// Sparse row representation: (coordinate index, entry) pairs.
    type RowSupport = Vec<(usize, u8)>;

    fn row_supports(code: &LinearCode) -> Vec<RowSupport> {
        code.rows()
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(j, &x)| (j, x))
                    .collect()
            })
            .collect()
    }

    /// Histogram of codeword weights over the message range `[start, end)`.
    fn histogram_range(
        code: &LinearCode,
        rows: &[RowSupport],
        start: u128,
        end: u128,
    ) -> Vec<u64> {
        let f = &code.field;
        let q = f.order() as u8;
        let mut hist = vec![0u64; code.n + 1];
        // Base-q digits of `start`, least significant first.
        let mut digits = vec![0u8; code.k];
        let mut v = start;
        for d in digits.iter_mut() {
            *d = (v % q as u128) as u8;
            v /= q as u128;
        }
        // Codeword of the first message and its weight.
        let mut cw = vec![0u8; code.n];
        for (i, &digit) in digits.iter().enumerate() {
            if digit != 0 {
                for &(j, x) in &rows[i] {
                    cw[j] = f.add(cw[j], f.mul(digit, x));
                }
            }
        }
        let mut weight = cw.iter().filter(|&&x| x != 0).count();
        hist[weight] += 1;
        let mut count = start + 1;
        while count < end {
            // Increment the counter. A digit bump from label t to t+1 adds
            // ((t+1) - t) * row in field arithmetic; over a prime field that
            // difference is always 1 (including the wrap from q-1 to 0), so
            // the bump is one addition of the row, while over GF(4), GF(8),
            // and GF(9) the row must be scaled by the label difference.
            let mut i = 0;
            loop {
                let old_digit = digits[i];
                let new_digit = if old_digit + 1 == q { 0 } else { old_digit + 1 };
                let delta = f.sub(new_digit, old_digit);
                if delta == 1 {
                    for &(j, x) in &rows[i] {
                        let old = cw[j];
                        let new = f.add(old, x);
                        weight -= (old != 0) as usize;
                        weight += (new != 0) as usize;
                        cw[j] = new;
                    }
                } else {
                    for &(j, x) in &rows[i] {
                        let old = cw[j];
                        let new = f.add(old, f.mul(delta, x));
                        weight -= (old != 0) as usize;
                        weight += (new != 0) as usize;
                        cw[j] = new;
                    }
                }
                digits[i] = new_digit;
                if new_digit == 0 {
                    i += 1;
                } else {
                    break;
                }
            }
            hist[weight] += 1;
            count += 1;
        }
        hist
    }

    /// Sequential weight-histogram kernel.
    pub fn weight_histogram_seq(code: &LinearCode) -> Result<Vec<u64>> {
        let total = code.codeword_count()?;
        let rows = row_supports(code);
        Ok(histogram_range(code, &rows, 0, total))
    }

    /// Parallel weight-histogram kernel (fixed-size chunks, merged by
    /// elementwise addition).
    #[cfg(feature = "parallel")]
    pub fn weight_histogram_par(code: &LinearCode) -> Result<Vec<u64>> {
        use rayon::prelude::*;

        const CHUNK: u128 = 1 << 14;
        let total = code.codeword_count()?;
        let rows = row_supports(code);
        let starts: Vec<u128> = (0..total.div_ceil(CHUNK)).map(|c| c * CHUNK).collect();
        let hist = starts
            .into_par_iter()
            .map(|start| histogram_range(code, &rows, start, (start + CHUNK).min(total)))
            .reduce(
                || vec![0u64; code.n + 1],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(&b) {
                        *x += y;
                    }
                    a
                },
            );
        Ok(hist)
    }

    /// Feature-dispatched weight histogram.
    pub fn weight_histogram(code: &LinearCode) -> Result<Vec<u64>> {
        #[cfg(feature = "parallel")]
        {
            weight_histogram_par(code)
        }
        #[cfg(not(feature = "parallel"))]
        {
            weight_histogram_seq(code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> FiniteField {
        FiniteField::new(q).unwrap()
    }

    fn code(q: u32, rows: &[&[u8]]) -> LinearCode {
        let rows: Vec<Vec<u8>> = rows.iter().map(|r| r.to_vec()).collect();
        LinearCode::from_rows(gf(q), &rows).unwrap()
    }

    #[test]
    fn rejects_bad_generators() {
        let f = gf(2);
        assert!(matches!(
            LinearCode::from_rows(f, &[vec![1, 0], vec![1, 0]]),
            Err(Error::RankDeficient { rank: 1, rows: 2 })
        ));
        assert!(matches!(
            LinearCode::from_rows(f, &[vec![1, 0, 2]]),
            Err(Error::EntryOutOfRange { value: 2, q: 2 })
        ));
        assert!(matches!(
            LinearCode::from_rows(f, &[vec![1, 0], vec![0, 0], vec![0, 1]]),
            Err(Error::RankDeficient { .. })
        ));
        // Zero column rejected unless explicitly permitted.
        assert!(LinearCode::from_rows(f, &[vec![1, 0]]).is_err());
        assert!(LinearCode::from_rows_with_zero_columns(f, &[vec![1, 0]]).is_ok());
    }

    #[test]
    fn entropy_closure_on_a_small_code() {
        // Columns 100, 010, 110, 001.
        let c = code(2, &[&[1, 0, 1, 0], &[0, 1, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(c.entropy(&CoordSet::empty()).unwrap(), 0);
        assert_eq!(c.entropy(&CoordSet::from([1, 2])).unwrap(), 2);
        assert_eq!(c.entropy(&CoordSet::from([1, 2, 3])).unwrap(), 2);
        assert_eq!(c.entropy(&CoordSet::full(4)).unwrap(), 3);
        assert_eq!(
            c.closure(&CoordSet::from([1, 2])).unwrap(),
            CoordSet::from([1, 2, 3])
        );
        assert_eq!(c.closure(&CoordSet::empty()).unwrap(), CoordSet::empty());
        assert!(matches!(
            c.entropy(&CoordSet::from([5])),
            Err(Error::IndexOutOfRange { index: 5, n: 4 })
        ));
    }

    #[test]
    fn restriction_rebases_rows() {
        let c = code(2, &[&[1, 0, 1, 0], &[0, 1, 1, 0], &[0, 0, 0, 1]]);
        let r = c.restrict(&CoordSet::from([1, 3])).unwrap();
        assert_eq!(r.dimension(), 2);
        assert_eq!(r.length(), 2);
        assert!(matches!(c.restrict(&CoordSet::empty()), Err(Error::EmptySet)));
        // Entropy of subsets is preserved under restriction.
        let sub = CoordSet::from([2]); // second coordinate of the restriction
        assert_eq!(r.entropy(&sub).unwrap(), 1);
    }

    #[test]
    fn shorten_reduces_length_and_dimension() {
        let c = code(2, &[&[1, 0, 1, 0], &[0, 1, 1, 0], &[0, 0, 0, 1]]);
        let s = c.shorten(&CoordSet::from([1])).unwrap();
        assert_eq!((s.length(), s.dimension()), (3, 2));
        assert!(matches!(
            c.shorten(&CoordSet::full(4)),
            Err(Error::FullEntropyShorten { k: 3 })
        ));
        // Shortening on the empty set is the identity.
        let same = c.shorten(&CoordSet::empty()).unwrap();
        assert_eq!(same.length(), 4);
        assert_eq!(same.dimension(), 3);
    }

    #[test]
    fn weight_enumerator_and_distance() {
        // [3, 2] even-ish code: rows 101, 011.
        let c = code(2, &[&[1, 0, 1], &[0, 1, 1]]);
        let we = c.weight_enumerator().unwrap();
        assert_eq!(we.total(), 4);
        assert_eq!(we.count(0), 1);
        assert_eq!(we.count(2), 3);
        assert_eq!(c.min_distance().unwrap(), 2);
        assert_eq!(we.to_string(), "{0: 1, 2: 3}");
    }

    #[test]
    fn ternary_enumeration_counts() {
        // Full ternary [2, 2] code: 9 codewords, weights {0:1, 1:4, 2:4}.
        let c = code(3, &[&[1, 0], &[0, 1]]);
        let we = c.weight_enumerator().unwrap();
        assert_eq!(we.count(0), 1);
        assert_eq!(we.count(1), 4);
        assert_eq!(we.count(2), 4);
    }

    #[test]
    fn parallel_and_sequential_histograms_agree() {
        let c = code(3, &[&[1, 0, 1, 2, 1], &[0, 1, 1, 1, 2], &[0, 0, 1, 2, 2]]);
        let seq = sweep::weight_histogram_seq(&c).unwrap();
        let dispatched = sweep::weight_histogram(&c).unwrap();
        assert_eq!(seq, dispatched);
        #[cfg(feature = "parallel")]
        assert_eq!(seq, sweep::weight_histogram_par(&c).unwrap());
    }

    #[test]
    fn matrix_text_round_trip() {
        let c = code(3, &[&[1, 0, 2], &[0, 1, 1]]);
        let text = c.to_matrix_text();
        assert!(text.starts_with("3 2 3\n"));
        let back = LinearCode::from_matrix_text(&text).unwrap();
        assert_eq!(back.columns(), c.columns());
        assert_eq!(back.field().order(), 3);
    }

    #[test]
    fn matrix_text_parse_errors_carry_line_numbers() {
        assert!(matches!(
            LinearCode::from_matrix_text("2 2\n1 0\n0 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            LinearCode::from_matrix_text("2 2 2\n1 0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            LinearCode::from_matrix_text("2 2 2\n1 0 1\n0 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            LinearCode::from_matrix_text("6 1 1\n1\n"),
            Err(Error::UnsupportedOrder(6))
        ));
    }

    #[test]
    fn permutation_equivalence_examples() {
        // Columns {10, 01, 11} vs a column swap of itself.
        let a = code(2, &[&[1, 0, 1], &[0, 1, 1]]);
        let b = code(2, &[&[1, 1, 0], &[1, 0, 1]]);
        assert!(a.is_permutation_equivalent(&b).unwrap());
        // Columns {10, 01, 10}: different weight enumerator.
        let c = code(2, &[&[1, 0, 1], &[0, 1, 0]]);
        assert!(!a.is_permutation_equivalent(&c).unwrap());
    }

    #[test]
    fn encode_matches_columns() {
        let c = code(3, &[&[1, 0, 2], &[0, 1, 1]]);
        assert_eq!(c.encode(&[1, 2]).unwrap(), vec![1, 2, 1]);
        assert!(c.encode(&[1]).is_err());
    }

    #[test]
    fn for_each_codeword_visits_all() {
        let c = code(2, &[&[1, 0, 1], &[0, 1, 1]]);
        let mut seen = Vec::new();
        c.for_each_codeword(|cw| seen.push(cw.to_vec())).unwrap();
        assert_eq!(seen.len(), 4);
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 4);
    }

    // The message counter steps through integer labels, so over GF(4),
    // GF(8), and GF(9) a digit bump is not a single row addition; a naive
    // incremental walk visits prime-subfield combinations q/p times each
    // instead of every message once.
    #[test]
    fn enumeration_covers_prime_power_fields() {
        use crate::construct::simplex;

        let c = simplex(4, 2).unwrap();
        let mut seen = Vec::new();
        c.for_each_codeword(|cw| seen.push(cw.to_vec())).unwrap();
        assert_eq!(seen.len(), 16);
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 16, "duplicate codewords visited");

        // every nonzero word of a full-length code has weight q^(m-1)
        for (q, n, w) in [(4u32, 5usize, 4usize), (8, 9, 8), (9, 10, 9)] {
            let c = simplex(q, 2).unwrap();
            let we = c.weight_enumerator().unwrap();
            assert_eq!(c.length(), n);
            assert_eq!(we.count(0), 1);
            assert_eq!(we.count(w), (q * q - 1) as u128, "q={q}");
            assert_eq!(we.total(), (q * q) as u128);
            let seq = sweep::weight_histogram_seq(&c).unwrap();
            assert_eq!(seq, sweep::weight_histogram(&c).unwrap());
            #[cfg(feature = "parallel")]
            assert_eq!(seq, sweep::weight_histogram_par(&c).unwrap());
        }
    }
}
