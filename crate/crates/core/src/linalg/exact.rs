use super::field::Field;

/// Dense row-major matrix over a single scalar kernel.
///
/// A zero template is kept so that empty or all-zero matrices still know
/// which field (and which modulus or precision) they live in.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
    zero: T,
}

impl<T: Field> Mat<T> {
    pub fn zeros(rows: usize, cols: usize, zero: T) -> Self {
        let zero = zero.zero_like();
        Mat {
            rows,
            cols,
            data: vec![zero.clone(); rows * cols],
            zero,
        }
    }

    pub fn identity(n: usize, zero: T) -> Self {
        let mut m = Mat::zeros(n, n, zero);
        for i in 0..n {
            m[(i, i)] = m.zero.one_like();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize, zero: T) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        Mat {
            rows: n,
            cols,
            data,
            zero: zero.zero_like(),
        }
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        zero: T,
        mut f: impl FnMut(usize, usize) -> T,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat {
            rows,
            cols,
            data,
            zero: zero.zero_like(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn zero(&self) -> &T {
        &self.zero
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: Vec<T>) {
        assert_eq!(row.len(), self.cols);
        self.data.extend(row);
        self.rows += 1;
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, self.zero.clone(), |i, j| {
            self[(j, i)].clone()
        })
    }

    pub fn map<U: Field>(&self, zero: U, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
            zero: zero.zero_like(),
        }
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.zero.clone(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

/// Reduced row-echelon form of a matrix over an exact field.
///
/// Doubles as a normal-form projector: `reduce` strips a vector of its
/// components along the pivot columns, so a vector lies in the row space iff
/// its reduction vanishes.
#[derive(Debug, Clone)]
pub struct RowEchelon<T> {
    cols: usize,
    pivots: Vec<usize>,
    basis: Vec<Vec<T>>,
}

impl<T: Field> RowEchelon<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    /// Normal form of `v` modulo the row space.
    pub fn reduce(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        let mut out = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            if out[pc].is_zero() {
                continue;
            }
            let f = out[pc].clone();
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o = o.clone() - f.clone() * r.clone();
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.reduce(v).iter().all(Field::is_zero)
    }

    /// Basis of the right kernel: one vector per free column.
    pub fn kernel(&self, zero: &T) -> Vec<Vec<T>> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![zero.zero_like(); self.cols];
                v[free] = zero.one_like();
                for (row, &pc) in self.basis.iter().zip(&self.pivots) {
                    v[pc] = -row[free].clone();
                }
                v
            })
            .collect()
    }
}

/// Gauss-Jordan elimination. Exact fields only: zero tests decide pivots.
pub fn row_reduce<T: Field>(m: &Mat<T>) -> RowEchelon<T> {
    let cols = m.cols();
    let mut rows: Vec<Vec<T>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        for x in rows[r].iter_mut().skip(c) {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    RowEchelon {
        cols,
        pivots,
        basis: rows,
    }
}

pub fn rank<T: Field>(m: &Mat<T>) -> usize {
    row_reduce(m).rank()
}

pub fn nullspace<T: Field>(m: &Mat<T>) -> Vec<Vec<T>> {
    row_reduce(m).kernel(m.zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Fp, Rational};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn qmat(rows: &[&[i64]]) -> Mat<Rational> {
        let cols = rows.first().map_or(0, |r| r.len());
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect(),
            cols,
            q(0),
        )
    }

    #[test]
    fn identity_has_full_rank() {
        assert_eq!(rank(&Mat::identity(3, q(0))), 3);
        assert_eq!(rank(&Mat::identity(3, Fp::new(0, 101))), 3);
        assert!(nullspace(&Mat::identity(4, q(0))).is_empty());
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let z = Mat::zeros(4, 5, q(0));
        assert_eq!(rank(&z), 0);
        assert_eq!(nullspace(&z).len(), 5);
    }

    #[test]
    fn proportional_rows() {
        let m = qmat(&[&[1, 2], &[2, 4]]);
        assert_eq!(rank(&m), 1);
        let ker = nullspace(&m);
        assert_eq!(ker.len(), 1);
        // proportional to (2, -1)
        assert_eq!(ker[0][0].clone() + q(2) * ker[0][1].clone(), q(0));
    }

    #[test]
    fn single_row_kernel() {
        let ker = nullspace(&qmat(&[&[1, 1]]));
        assert_eq!(ker, vec![vec![q(-1), q(1)]]);
    }

    #[test]
    fn reduce_detects_row_space_membership() {
        let m = qmat(&[&[1, 0, 1], &[0, 1, 1]]);
        let e = row_reduce(&m);
        assert!(e.contains(&[q(2), q(3), q(5)]));
        assert!(!e.contains(&[q(0), q(0), q(1)]));
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..6, 1usize..6)
            .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..4, c), r))
    }

    proptest! {
        #[test]
        fn rank_plus_nullity_is_cols(rows in small_matrix()) {
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let m = qmat(&refs);
            let ker = nullspace(&m);
            prop_assert_eq!(rank(&m) + ker.len(), m.cols());
            for v in &ker {
                prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
            }
        }

        #[test]
        fn rank_invariant_under_permutation_and_scaling(
            rows in small_matrix(),
            scale in prop::collection::vec(1i64..7, 6),
            rot in 0usize..6,
        ) {
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let m = qmat(&refs);
            let r = m.rows();
            let c = m.cols();
            let shuffled = Mat::from_fn(r, c, q(0), |i, j| {
                let src = m[((i + rot) % r, (j + 1) % c)].clone();
                let s = if scale[i] % 2 == 0 { -q(scale[i]) } else { q(scale[i]) };
                src * s / q(scale[j])
            });
            prop_assert_eq!(rank(&m), rank(&shuffled));
        }
    }
}
