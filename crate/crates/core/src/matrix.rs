//! Small dense matrices over a ring object, with exact determinants.
//!
//! Determinants use expansion by minors with subset memoization up to 4x4
//! (valid over any commutative ring) and fraction-free Bareiss elimination
//! over integral domains for larger sizes.

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat<T> {
    nrows: usize,
    ncols: usize,
    data: Vec<T>,
}

impl<T: Clone> Mat<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Mat {
            nrows,
            ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(nrows: usize, ncols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(nrows * ncols);
        for i in 0..nrows {
            for j in 0..ncols {
                data.push(f(i, j));
            }
        }
        Mat { nrows, ncols, data }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.ncols {
            self.data.swap(a * self.ncols + j, b * self.ncols + j);
        }
    }
}

pub fn identity<R: Ring>(ring: &R, n: usize) -> Mat<R::Elem> {
    Mat::from_fn(n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
}

/// Determinant over any commutative ring.
pub fn det<R: Ring>(ring: &R, m: &Mat<R::Elem>) -> R::Elem {
    assert_eq!(m.nrows, m.ncols, "determinant of a non-square matrix");
    let n = m.nrows;
    if n == 0 {
        return ring.one();
    }
    if n <= 4 || !ring.is_domain() {
        det_minors(ring, m)
    } else {
        det_bareiss(ring, m).expect("bareiss over a domain")
    }
}

/// Laplace expansion with memoization over column subsets; O(2^n * n).
pub fn det_minors<R: Ring>(ring: &R, m: &Mat<R::Elem>) -> R::Elem {
    let n = m.nrows;
    // minors[mask] = det of rows 0..k with column set `mask` (popcount k)
    let mut minors = vec![None::<R::Elem>; 1 << n];
    minors[0] = Some(ring.one());
    for mask in 1usize..(1 << n) {
        let k = mask.count_ones() as usize;
        let row = k - 1;
        let mut acc = ring.zero();
        // expansion along the last row: sign (-1)^{row + position in mask}
        let mut sign_pos = row % 2 == 0;
        for j in 0..n {
            if mask & (1 << j) == 0 {
                continue;
            }
            let sub = minors[mask & !(1 << j)].clone().expect("filled in order");
            let contrib = ring.mul(m.at(row, j), &sub);
            acc = if sign_pos {
                ring.add(&acc, &contrib)
            } else {
                ring.sub(&acc, &contrib)
            };
            sign_pos = !sign_pos;
        }
        minors[mask] = Some(acc);
    }
    minors[(1 << n) - 1].clone().unwrap()
}

/// Fraction-free Bareiss elimination; requires an integral domain.
pub fn det_bareiss<R: Ring>(ring: &R, m: &Mat<R::Elem>) -> Result<R::Elem> {
    if !ring.is_domain() {
        return Err(Error::UnsupportedBase(format!(
            "{} is not an integral domain",
            ring.notation()
        )));
    }
    let n = m.nrows;
    let mut a = m.clone();
    let mut sign_pos = true;
    let mut prev = ring.one();
    for k in 0..n.saturating_sub(1) {
        if ring.is_zero(a.at(k, k)) {
            match (k + 1..n).find(|&i| !ring.is_zero(a.at(i, k))) {
                Some(i) => {
                    a.swap_rows(k, i);
                    sign_pos = !sign_pos;
                }
                None => return Ok(ring.zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = ring.sub(
                    &ring.mul(a.at(i, j), a.at(k, k)),
                    &ring.mul(a.at(i, k), a.at(k, j)),
                );
                let v = ring
                    .exact_div(&num, &prev)
                    .expect("bareiss division is exact over a domain");
                a.set(i, j, v);
            }
            a.set(i, k, ring.zero());
        }
        prev = a.at(k, k).clone();
    }
    let d = a.at(n - 1, n - 1).clone();
    Ok(if sign_pos { d } else { ring.neg(&d) })
}

/// Rank over the fraction field of an integral domain, computed
/// fraction-free on the domain itself.
pub fn rank<R: Ring>(ring: &R, m: &Mat<R::Elem>) -> Result<usize> {
    if !ring.is_domain() {
        return Err(Error::UnsupportedBase(format!(
            "rank needs an integral domain, got {}",
            ring.notation()
        )));
    }
    let mut a = m.clone();
    let (nr, nc) = (a.nrows, a.ncols);
    let mut rank = 0;
    let mut prev = ring.one();
    let mut col = 0;
    while rank < nr && col < nc {
        let pivot = (rank..nr).find(|&i| !ring.is_zero(a.at(i, col)));
        let Some(p) = pivot else {
            col += 1;
            continue;
        };
        a.swap_rows(rank, p);
        for i in rank + 1..nr {
            for j in col + 1..nc {
                let num = ring.sub(
                    &ring.mul(a.at(i, j), a.at(rank, col)),
                    &ring.mul(a.at(i, col), a.at(rank, j)),
                );
                let v = ring
                    .exact_div(&num, &prev)
                    .expect("fraction-free elimination is exact over a domain");
                a.set(i, j, v);
            }
            a.set(i, col, ring.zero());
        }
        prev = a.at(rank, col).clone();
        rank += 1;
        col += 1;
    }
    Ok(rank)
}

/// Solve `A x = b` by Gauss-Jordan elimination; needs invertible pivots, so
/// effectively a field. Returns `None` when `A` is singular.
pub fn solve<R: Ring>(ring: &R, a: &Mat<R::Elem>, b: &[R::Elem]) -> Option<Vec<R::Elem>> {
    let n = a.nrows;
    assert_eq!(a.ncols, n, "square system");
    assert_eq!(b.len(), n, "rhs length");
    let mut work = Mat::from_fn(n, n + 1, |i, j| {
        if j < n {
            a.at(i, j).clone()
        } else {
            b[i].clone()
        }
    });
    for col in 0..n {
        let pivot = (col..n).find(|&i| !ring.is_zero(work.at(i, col)))?;
        work.swap_rows(col, pivot);
        let inv = ring.inverse(work.at(col, col))?;
        for j in col..=n {
            work.set(col, j, ring.mul(work.at(col, j), &inv));
        }
        for i in 0..n {
            if i == col || ring.is_zero(work.at(i, col)) {
                continue;
            }
            let factor = work.at(i, col).clone();
            for j in col..=n {
                let v = ring.sub(&work.at(i, j).clone(), &ring.mul(&factor, work.at(col, j)));
                work.set(i, j, v);
            }
        }
    }
    Some((0..n).map(|i| work.at(i, n).clone()).collect())
}

/// Basis of the right kernel of `A` over a field.
pub fn kernel_basis<R: Ring>(ring: &R, a: &Mat<R::Elem>) -> Vec<Vec<R::Elem>> {
    let (nr, nc) = (a.nrows, a.ncols);
    let mut work = a.clone();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..nc {
        let Some(p) = (row..nr).find(|&i| !ring.is_zero(work.at(i, col))) else {
            continue;
        };
        work.swap_rows(row, p);
        let inv = ring
            .inverse(work.at(row, col))
            .expect("kernel basis needs a field");
        for j in col..nc {
            work.set(row, j, ring.mul(work.at(row, j), &inv));
        }
        for i in 0..nr {
            if i == row || ring.is_zero(work.at(i, col)) {
                continue;
            }
            let factor = work.at(i, col).clone();
            for j in col..nc {
                let v = ring.sub(&work.at(i, j).clone(), &ring.mul(&factor, work.at(row, j)));
                work.set(i, j, v);
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == nr {
            break;
        }
    }
    let free_cols: Vec<usize> = (0..nc).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free_cols {
        let mut v = vec![ring.zero(); nc];
        v[fc] = ring.one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = ring.neg(work.at(r, fc));
        }
        basis.push(v);
    }
    basis
}

pub fn mat_mul<R: Ring>(ring: &R, a: &Mat<R::Elem>, b: &Mat<R::Elem>) -> Mat<R::Elem> {
    assert_eq!(a.ncols, b.nrows, "inner dimensions");
    Mat::from_fn(a.nrows, b.ncols, |i, j| {
        let mut acc = ring.zero();
        for k in 0..a.ncols {
            acc = ring.add(&acc, &ring.mul(a.at(i, k), b.at(k, j)));
        }
        acc
    })
}

pub fn mat_vec<R: Ring>(ring: &R, a: &Mat<R::Elem>, v: &[R::Elem]) -> Vec<R::Elem> {
    assert_eq!(a.ncols, v.len(), "inner dimensions");
    (0..a.nrows)
        .map(|i| {
            let mut acc = ring.zero();
            for k in 0..a.ncols {
                acc = ring.add(&acc, &ring.mul(a.at(i, k), &v[k]));
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, Rationals, Ring};

    fn zmat(rows: &[&[i64]]) -> Mat<num_bigint::BigInt> {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Integers.from_i64(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn det_matches_between_methods() {
        let m = zmat(&[
            &[2, 0, 1, 3, 1],
            &[1, 1, 0, 2, 0],
            &[0, 4, 1, 1, 2],
            &[3, 1, 2, 0, 1],
            &[1, 0, 0, 1, 1],
        ]);
        let a = det_minors(&Integers, &m);
        let b = det_bareiss(&Integers, &m).unwrap();
        assert_eq!(a, b);
        assert_eq!(det(&Integers, &m), a);
    }

    #[test]
    fn det_with_zero_pivot() {
        let m = zmat(&[&[0, 1], &[1, 0]]);
        assert_eq!(det_bareiss(&Integers, &m).unwrap(), Integers.from_i64(-1));
        let sing = zmat(&[&[0, 0], &[1, 2]]);
        assert_eq!(det_bareiss(&Integers, &sing).unwrap(), Integers.from_i64(0));
    }

    #[test]
    fn rank_over_fraction_field() {
        let m = zmat(&[&[2, 4, 6], &[1, 2, 3], &[0, 1, 1]]);
        assert_eq!(rank(&Integers, &m).unwrap(), 2);
        let full = zmat(&[&[1, 0], &[0, 3]]);
        assert_eq!(rank(&Integers, &full).unwrap(), 2);
    }

    #[test]
    fn solve_and_kernel() {
        let q = Rationals;
        let a = Mat::from_rows(vec![
            vec![q.from_i64(1), q.from_i64(1)],
            vec![q.from_i64(0), q.from_i64(1)],
        ]);
        let b = vec![q.from_i64(3), q.from_i64(1)];
        assert_eq!(solve(&q, &a, &b).unwrap(), vec![q.from_i64(2), q.from_i64(1)]);

        let sing = Mat::from_rows(vec![
            vec![q.from_i64(1), q.from_i64(2)],
            vec![q.from_i64(2), q.from_i64(4)],
        ]);
        assert!(solve(&q, &sing, &b).is_none());
        let ker = kernel_basis(&q, &sing);
        assert_eq!(ker.len(), 1);
        // kernel vector satisfies the system
        let v = &ker[0];
        let prod = mat_vec(&q, &sing, v);
        assert!(prod.iter().all(|x| q.is_zero(x)));
    }
}
