//! Small exact matrix helpers: rational inversion and the Smith normal form
//! of an integer matrix.

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Zero};

pub(crate) type RatMatrix = Vec<Vec<Rational64>>;

/// Gauss-Jordan inverse over the rationals. `None` for singular input.
pub(crate) fn invert(m: &RatMatrix) -> Option<RatMatrix> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..2 * n {
                    let v = a[col][c];
                    a[r][c] -= f * v;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Smith normal form `U * m * V = diag(d_1, .., d_n)` with `d_i | d_{i+1}`
/// and all `d_i >= 0`. Only the left transform `U` is kept; callers use it to
/// read off canonical coset coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<i64>,
    pub left: Vec<Vec<i64>>,
}

pub fn smith_normal_form(m: &[Vec<i64>]) -> SmithForm {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a: Vec<Vec<i64>> = m.to_vec();
    let mut u: Vec<Vec<i64>> = (0..rows)
        .map(|i| (0..rows).map(|j| i64::from(i == j)).collect())
        .collect();

    let row_op = |a: &mut Vec<Vec<i64>>, u: &mut Vec<Vec<i64>>, dst: usize, src: usize, f: i64| {
        for c in 0..a[dst].len() {
            a[dst][c] -= f * a[src][c];
        }
        for c in 0..u[dst].len() {
            u[dst][c] -= f * u[src][c];
        }
    };
    let col_op = |a: &mut Vec<Vec<i64>>, dst: usize, src: usize, f: i64| {
        for row in a.iter_mut() {
            row[dst] -= f * row[src];
        }
    };

    let diag = rows.min(cols);
    for t in 0..diag {
        loop {
            // smallest nonzero entry in the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j] != 0 && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            a.swap(t, pi);
            u.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = Integer::div_floor(&a[i][t], &p);
                if q != 0 {
                    row_op(&mut a, &mut u, i, t, q);
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = Integer::div_floor(&a[t][j], &p);
                if q != 0 {
                    col_op(&mut a, j, t, q);
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // enforce divisibility of the trailing block
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => row_op(&mut a, &mut u, t, i, -1),
                None => break,
            }
        }
        if a[t][t] < 0 {
            for c in 0..cols {
                a[t][c] = -a[t][c];
            }
            for c in 0..rows {
                u[t][c] = -u[t][c];
            }
        }
    }
    let diagonal = (0..diag).map(|i| a[i][i]).collect();
    SmithForm { diagonal, left: u }
}

/// Integer determinant by fraction-free (Bareiss) elimination.
#[cfg(test)]
pub(crate) fn det_i64(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}
