//! Internal Gaussian-elimination helpers over a [`FiniteField`].

use crate::gf::FiniteField;

/// An incremental echelon basis for vectors of a fixed dimension.
///
/// Stored rows have pairwise distinct pivot positions and each row is zero at
/// the pivots of all rows inserted before it, so a single pass in insertion
/// order fully reduces a vector against the span.
pub(crate) struct Basis {
    field: FiniteField,
    dim: usize,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Basis {
    pub fn new(field: FiniteField, dim: usize) -> Self {
        Basis {
            field,
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis, returning the remainder.
    pub fn reduce(&self, v: &[u8]) -> Vec<u8> {
        debug_assert_eq!(v.len(), self.dim);
        let f = &self.field;
        let mut out = v.to_vec();
        for (row, &pivot) in self.rows.iter().zip(&self.pivots) {
            let factor = out[pivot];
            if factor != 0 {
                for (o, r) in out.iter_mut().zip(row) {
                    *o = f.sub(*o, f.mul(factor, *r));
                }
            }
        }
        out
    }

    /// Inserts `v` if it extends the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[u8]) -> bool {
        let mut w = self.reduce(v);
        let Some(pivot) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self
            .field
            .inv(w[pivot])
            .expect("pivot entry is nonzero");
        for x in w.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        self.rows.push(w);
        self.pivots.push(pivot);
        true
    }

    pub fn contains_in_span(&self, v: &[u8]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }
}

/// Rank of a set of vectors.
pub(crate) fn rank_of<'a>(
    field: FiniteField,
    dim: usize,
    vectors: impl Iterator<Item = &'a Vec<u8>>,
) -> usize {
    let mut basis = Basis::new(field, dim);
    for v in vectors {
        basis.insert(v);
    }
    basis.rank()
}

/// Reduced row-echelon form; returns the nonzero rows and their pivot columns.
pub(crate) fn rref(field: &FiniteField, rows: &[Vec<u8>]) -> (Vec<Vec<u8>>, Vec<usize>) {
    let mut m: Vec<Vec<u8>> = rows.to_vec();
    let height = m.len();
    let width = if height == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(pivot_row) = (r..height).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(r, pivot_row);
        let inv = field.inv(m[r][col]).expect("pivot entry is nonzero");
        for x in m[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for i in 0..height {
            if i != r && m[i][col] != 0 {
                let factor = m[i][col];
                for c in 0..width {
                    let sub = field.mul(factor, m[r][c]);
                    m[i][c] = field.sub(m[i][c], sub);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == height {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

/// Basis of the solution space of `A x = 0` for `A` given by `rows`.
///
/// Solutions are emitted with free variables taken in ascending column order,
/// so the result is deterministic.
pub(crate) fn nullspace(field: &FiniteField, rows: &[Vec<u8>], width: usize) -> Vec<Vec<u8>> {
    let (reduced, pivots) = rref(field, rows);
    let mut out = Vec::new();
    for free in 0..width {
        if pivots.contains(&free) {
            continue;
        }
        let mut x = vec![0u8; width];
        x[free] = 1;
        for (row, &pc) in reduced.iter().zip(&pivots) {
            x[pc] = field.neg(row[free]);
        }
        out.push(x);
    }
    out
}

/// Any solution of `A x = b`, or `None` if the system is inconsistent.
pub(crate) fn solve(
    field: &FiniteField,
    rows: &[Vec<u8>],
    b: &[u8],
) -> Option<Vec<u8>> {
    debug_assert_eq!(rows.len(), b.len());
    let width = rows.first().map_or(0, |r| r.len());
    let augmented: Vec<Vec<u8>> = rows
        .iter()
        .zip(b)
        .map(|(row, &v)| {
            let mut r = row.clone();
            r.push(v);
            r
        })
        .collect();
    let (reduced, pivots) = rref(field, &augmented);
    if pivots.contains(&width) {
        return None; // pivot in the augmented column
    }
    let mut x = vec![0u8; width];
    for (row, &pc) in reduced.iter().zip(&pivots) {
        x[pc] = row[width];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> FiniteField {
        FiniteField::new(q).unwrap()
    }

    #[test]
    fn basis_tracks_rank_and_span() {
        let f = gf(2);
        let mut basis = Basis::new(f, 3);
        assert!(basis.insert(&[1, 0, 1]));
        assert!(basis.insert(&[0, 1, 1]));
        assert!(!basis.insert(&[1, 1, 0])); // sum of the first two
        assert_eq!(basis.rank(), 2);
        assert!(basis.contains_in_span(&[1, 1, 0]));
        assert!(!basis.contains_in_span(&[0, 0, 1]));
    }

    #[test]
    fn rref_identifies_pivots() {
        let f = gf(3);
        let rows = vec![vec![0, 1, 2], vec![0, 2, 1], vec![1, 1, 1]];
        let (reduced, pivots) = rref(&f, &rows);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(reduced.len(), 2);
        // Unit vectors at the pivot columns.
        assert_eq!(reduced[0][0], 1);
        assert_eq!(reduced[1][0], 0);
        assert_eq!(reduced[1][1], 1);
    }

    #[test]
    fn nullspace_solves_homogeneous_system() {
        let f = gf(2);
        // x1 + x2 = 0, x2 + x3 = 0 over GF(2): solutions {000, 111}.
        let rows = vec![vec![1, 1, 0], vec![0, 1, 1]];
        let ns = nullspace(&f, &rows, 3);
        assert_eq!(ns, vec![vec![1, 1, 1]]);
    }

    #[test]
    fn solve_finds_particular_solution() {
        let f = gf(5);
        let rows = vec![vec![1, 2], vec![3, 4]];
        let b = vec![3, 2];
        let x = solve(&f, &rows, &b).unwrap();
        for (row, want) in rows.iter().zip(&b) {
            let got = row
                .iter()
                .zip(&x)
                .fold(0u8, |acc, (&a, &xi)| f.add(acc, f.mul(a, xi)));
            assert_eq!(got, *want);
        }
        // Inconsistent system.
        let bad_rows = vec![vec![1, 1], vec![2, 2]];
        assert!(solve(&f, &bad_rows, &[1, 3]).is_none());
    }
}
