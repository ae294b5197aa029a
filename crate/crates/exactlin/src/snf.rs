use crate::mat::Mat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Smith normal form with unimodular transforms: p * a * q = d, where d is
/// diagonal with nonnegative entries d_0 | d_1 | ... . Inverses of the
/// transforms are tracked so lattice data can be read off without re-solving.
#[derive(Clone, Debug)]
pub struct Snf {
    pub d: Mat,
    pub p: Mat,
    pub pinv: Mat,
    pub q: Mat,
    pub qinv: Mat,
    pub rank: usize,
}

/// Pivot selection walks the remaining submatrix for a smallest nonzero entry
/// in absolute value; this keeps intermediate growth tame on the sparse,
/// small-entry matrices produced by cellular chain complexes.
pub fn smith(a: &Mat) -> Snf {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut p = Mat::identity(m);
    let mut pinv = Mat::identity(m);
    let mut q = Mat::identity(n);
    let mut qinv = Mat::identity(n);

    // row op: row_i += c * row_j on d and p; inverse op recorded on pinv.
    fn row_add(d: &mut Mat, p: &mut Mat, pinv: &mut Mat, i: usize, j: usize, c: &BigInt) {
        for k in 0..d.cols {
            let t = c * &d[(j, k)];
            d[(i, k)] += t;
        }
        for k in 0..p.cols {
            let t = c * &p[(j, k)];
            p[(i, k)] += t;
        }
        // (E^{-1} subtracts) applied on the right of pinv: col_j -= c * col_i
        for r in 0..pinv.rows {
            let t = c * &pinv[(r, i)];
            pinv[(r, j)] -= t;
        }
    }
    fn col_add(d: &mut Mat, q: &mut Mat, qinv: &mut Mat, i: usize, j: usize, c: &BigInt) {
        // col_i += c * col_j
        for k in 0..d.rows {
            let t = c * &d[(k, j)];
            d[(k, i)] += t;
        }
        for k in 0..q.rows {
            let t = c * &q[(k, j)];
            q[(k, i)] += t;
        }
        // inverse on the left of qinv: row_j -= c * row_i
        for cidx in 0..qinv.cols {
            let t = c * &qinv[(i, cidx)];
            qinv[(j, cidx)] -= t;
        }
    }
    fn row_swap(d: &mut Mat, p: &mut Mat, pinv: &mut Mat, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..d.cols {
            let tmp = d[(i, k)].clone();
            d[(i, k)] = d[(j, k)].clone();
            d[(j, k)] = tmp;
        }
        for k in 0..p.cols {
            let tmp = p[(i, k)].clone();
            p[(i, k)] = p[(j, k)].clone();
            p[(j, k)] = tmp;
        }
        for r in 0..pinv.rows {
            let tmp = pinv[(r, i)].clone();
            pinv[(r, i)] = pinv[(r, j)].clone();
            pinv[(r, j)] = tmp;
        }
    }
    fn col_swap(d: &mut Mat, q: &mut Mat, qinv: &mut Mat, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..d.rows {
            let tmp = d[(k, i)].clone();
            d[(k, i)] = d[(k, j)].clone();
            d[(k, j)] = tmp;
        }
        for k in 0..q.rows {
            let tmp = q[(k, i)].clone();
            q[(k, i)] = q[(k, j)].clone();
            q[(k, j)] = tmp;
        }
        for c in 0..qinv.cols {
            let tmp = qinv[(i, c)].clone();
            qinv[(i, c)] = qinv[(j, c)].clone();
            qinv[(j, c)] = tmp;
        }
    }
    fn row_negate(d: &mut Mat, p: &mut Mat, pinv: &mut Mat, i: usize) {
        for k in 0..d.cols {
            let v = -&d[(i, k)];
            d[(i, k)] = v;
        }
        for k in 0..p.cols {
            let v = -&p[(i, k)];
            p[(i, k)] = v;
        }
        for r in 0..pinv.rows {
            let v = -&pinv[(r, i)];
            pinv[(r, i)] = v;
        }
    }

    // diagonalize d[start.., start..]
    fn diagonalize(
        d: &mut Mat,
        p: &mut Mat,
        pinv: &mut Mat,
        q: &mut Mat,
        qinv: &mut Mat,
        start: usize,
    ) {
        let (m, n) = (d.rows, d.cols);
        let mut t = start;
        while t < m.min(n) {
            // locate smallest nonzero |entry| in d[t.., t..]
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if !d[(i, j)].is_zero() {
                        match pivot {
                            None => pivot = Some((i, j)),
                            Some((pi, pj)) => {
                                if d[(i, j)].abs() < d[(pi, pj)].abs() {
                                    pivot = Some((i, j));
                                }
                            }
                        }
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            row_swap(d, p, pinv, t, pi);
            col_swap(d, q, qinv, t, pj);

            // clear row and column t; restarting whenever a reduction leaves a
            // remainder keeps the pivot the local minimum
            loop {
                let mut dirty = false;
                for i in t + 1..m {
                    if d[(i, t)].is_zero() {
                        continue;
                    }
                    let c = -(&d[(i, t)] / &d[(t, t)]);
                    if !c.is_zero() {
                        row_add(d, p, pinv, i, t, &c);
                    }
                    if !d[(i, t)].is_zero() {
                        row_swap(d, p, pinv, t, i);
                        dirty = true;
                    }
                }
                for j in t + 1..n {
                    if d[(t, j)].is_zero() {
                        continue;
                    }
                    let c = -(&d[(t, j)] / &d[(t, t)]);
                    if !c.is_zero() {
                        col_add(d, q, qinv, j, t, &c);
                    }
                    if !d[(t, j)].is_zero() {
                        col_swap(d, q, qinv, t, j);
                        dirty = true;
                    }
                }
                if !dirty {
                    break;
                }
            }
            if d[(t, t)].is_negative() {
                row_negate(d, p, pinv, t);
            }
            t += 1;
        }
    }

    diagonalize(&mut d, &mut p, &mut pinv, &mut q, &mut qinv, 0);

    // enforce the divisibility chain d_i | d_{i+1}: on a violation, fold the
    // next entry into column i and re-diagonalize from i (the new pivot is the
    // gcd, strictly smaller; the product of the pair is preserved)
    loop {
        let mut rank = 0;
        while rank < m.min(n) && !d[(rank, rank)].is_zero() {
            rank += 1;
        }
        let mut violation = None;
        for i in 0..rank.saturating_sub(1) {
            if !(&d[(i + 1, i + 1)] % &d[(i, i)]).is_zero() {
                violation = Some(i);
                break;
            }
        }
        let Some(i) = violation else { break };
        let one = BigInt::from(1);
        col_add(&mut d, &mut q, &mut qinv, i, i + 1, &one);
        diagonalize(&mut d, &mut p, &mut pinv, &mut q, &mut qinv, i);
    }

    let mut rank = 0;
    while rank < m.min(n) && !d[(rank, rank)].is_zero() {
        rank += 1;
    }

    let snf = Snf { d, p, pinv, q, qinv, rank };
    debug_assert!(snf.p.mul(a).mul(&snf.q) == snf.d, "p*a*q != d");
    debug_assert!(snf.p.mul(&snf.pinv) == Mat::identity(m));
    debug_assert!(snf.qinv.mul(&snf.q) == Mat::identity(n));
    snf
}

impl Snf {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }
}

/// Basis of { x : x * a = 0 } as rows.
pub fn kernel_basis(a: &Mat) -> Mat {
    let s = smith(a);
    s.p.submatrix(s.rank..a.rows, 0..a.rows)
}

/// Basis (as rows) of the lattice spanned by the rows of `a`.
pub fn row_space_basis(a: &Mat) -> Mat {
    let s = smith(a);
    let mut out = Mat::zero(s.rank, a.cols);
    for i in 0..s.rank {
        let mut row = s.qinv.row(i);
        for v in row.iter_mut() {
            *v = &*v * &s.d[(i, i)];
        }
        out.set_row(i, &row);
    }
    out
}

/// Basis of the saturation of the row space: (span_Q(rows) intersect Z^n).
pub fn saturation_basis(a: &Mat) -> Mat {
    let s = smith(a);
    s.qinv.submatrix(0..s.rank, 0..a.cols)
}

/// One solution x of x * a = b, if any.
///
/// With a = pinv * d * qinv, x * a = b iff y * d = b * q for y = x * pinv,
/// and then x = y * p.
pub fn solve_left(a: &Mat, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(b.len(), a.cols);
    let s = smith(a);
    let bq = s.q.apply_row(b);
    let y = solve_diagonal(&s, &bq, a)?;
    Some(s.p.apply_row(&y))
}

/// Solve x * a = b for every row b of `bs`; None if any row fails.
pub fn solve_left_many(a: &Mat, bs: &Mat) -> Option<Mat> {
    assert_eq!(bs.cols, a.cols);
    let s = smith(a);
    let mut out = Mat::zero(bs.rows, a.rows);
    for r in 0..bs.rows {
        let bq = s.q.apply_row(&bs.row(r));
        let y = solve_diagonal(&s, &bq, a)?;
        out.set_row(r, &s.p.apply_row(&y));
    }
    Some(out)
}

fn solve_diagonal(s: &Snf, bq: &[BigInt], a: &Mat) -> Option<Vec<BigInt>> {
    let mut y = vec![BigInt::zero(); a.rows];
    for i in 0..a.rows.min(a.cols) {
        let di = &s.d[(i, i)];
        if di.is_zero() {
            if !bq[i].is_zero() {
                return None;
            }
        } else {
            let (quo, rem) = bq[i].div_rem(di);
            if !rem.is_zero() {
                return None;
            }
            y[i] = quo;
        }
    }
    for v in bq.iter().take(a.cols).skip(a.rows.min(a.cols)) {
        if !v.is_zero() {
            return None;
        }
    }
    Some(y)
}

/// Is b in the lattice spanned by the rows of a?
pub fn in_row_space(a: &Mat, b: &[BigInt]) -> bool {
    solve_left(a, b).is_some()
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(a: &Mat) -> BigInt {
    assert_eq!(a.rows, a.cols, "determinant of a non-square matrix");
    let n = a.rows;
    if n == 0 {
        return BigInt::from(1);
    }
    let mut m = a.clone();
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                Some(i) => {
                    for j in 0..n {
                        let t = m[(k, j)].clone();
                        m[(k, j)] = m[(i, j)].clone();
                        m[(i, j)] = t;
                    }
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                m[(i, j)] = v;
            }
            m[(i, k)] = BigInt::zero();
        }
        prev = m[(k, k)].clone();
    }
    sign * m[(n - 1, n - 1)].clone()
}

/// Square with determinant ±1.
pub fn is_unimodular(a: &Mat) -> bool {
    a.rows == a.cols && det(a).abs() == BigInt::from(1)
}

/// Basis of { x in Z^m : x * a in rowspace(lat) }, for a: m x n and lat: k x n.
pub fn preimage_lattice(a: &Mat, lat: &Mat) -> Mat {
    assert_eq!(a.cols, lat.cols);
    let stacked = a.vstack(&lat.neg());
    let k = kernel_basis(&stacked);
    let proj = k.submatrix(0..k.rows, 0..a.rows);
    row_space_basis(&proj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn m(rows: &[Vec<i64>]) -> Mat {
        Mat::from_rows(rows)
    }

    #[test]
    fn det_bareiss() {
        assert_eq!(det(&m(&[vec![2, 3], vec![1, 4]])), BigInt::from(5));
        assert_eq!(det(&m(&[vec![0, 1], vec![1, 0]])), BigInt::from(-1));
        assert_eq!(det(&m(&[vec![1, 2], vec![2, 4]])), BigInt::zero());
        let a = m(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        assert_eq!(det(&a), BigInt::from(4));
        assert!(is_unimodular(&m(&[vec![1, 5], vec![0, -1]])));
        assert!(!is_unimodular(&m(&[vec![2, 0], vec![0, 1]])));
    }

    #[test]
    fn smith_small_known() {
        let a = m(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let s = smith(&a);
        assert_eq!(s.rank, 3);
        let diag: Vec<i64> = s.diagonal().iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert_eq!(diag, vec![2, 2, 156]);
    }

    #[test]
    fn smith_divisibility_chain() {
        let a = m(&[vec![6, 0], vec![0, 4]]);
        let s = smith(&a);
        let diag = s.diagonal();
        assert_eq!(diag, vec![BigInt::from(2), BigInt::from(12)]);
        assert!((&diag[1] % &diag[0]).is_zero());
    }

    #[test]
    fn kernel_of_rank_deficient() {
        let a = m(&[vec![1, 2], vec![2, 4], vec![3, 6]]);
        let k = kernel_basis(&a);
        assert_eq!(k.rows, 2);
        assert!(k.mul(&a).is_zero());
    }

    #[test]
    fn solve_left_consistent_and_inconsistent() {
        let a = m(&[vec![2, 0], vec![0, 3]]);
        let x = solve_left(&a, &[BigInt::from(4), BigInt::from(9)]).unwrap();
        assert_eq!(a.apply_row(&x), vec![BigInt::from(4), BigInt::from(9)]);
        assert!(solve_left(&a, &[BigInt::one(), BigInt::zero()]).is_none());
    }

    #[test]
    fn saturation_strictly_contains_row_space() {
        let a = m(&[vec![2, 4]]);
        let sat = saturation_basis(&a);
        assert_eq!(sat.rows, 1);
        // (1, 2) spans the saturation
        assert!(in_row_space(&sat, &[BigInt::from(1), BigInt::from(2)]));
        assert!(!in_row_space(&a, &[BigInt::from(1), BigInt::from(2)]));
    }

    #[test]
    fn preimage_of_lattice() {
        // a: Z^2 -> Z, x |-> x1 + x2; lat = 3Z: preimage = {x1 + x2 in 3Z}
        let a = m(&[vec![1], vec![1]]);
        let lat = m(&[vec![3]]);
        let pre = preimage_lattice(&a, &lat);
        assert_eq!(pre.rows, 2);
        assert!(in_row_space(&pre, &[BigInt::from(1), BigInt::from(2)]));
        assert!(in_row_space(&pre, &[BigInt::from(3), BigInt::from(0)]));
        assert!(!in_row_space(&pre, &[BigInt::from(1), BigInt::from(0)]));
    }
}
