//! Exact Gauss-Jordan elimination over the fraction field of F.
//!
//! Every entry stays in canonical form after each step. Within a column the
//! pivot is the nonzero candidate of smallest printed size; ties go to the
//! lowest row, so results are deterministic.

use crate::coeffring::RatFunc;

pub type Matrix = Vec<Vec<RatFunc>>;

/// Reduced row-echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    pub rows: Matrix,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn rref(mat: &[Vec<RatFunc>], ncols: usize) -> Rref {
    let mut rows: Matrix = mat.to_vec();
    for r in &rows {
        assert_eq!(r.len(), ncols, "ragged matrix");
    }
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..ncols {
        if prow == rows.len() {
            break;
        }
        let pick = (prow..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| (rows[r][col].complexity(), r));
        let Some(pick) = pick else { continue };
        rows.swap(prow, pick);
        let inv = rows[prow][col].recip().expect("pivot is nonzero");
        for c in col..ncols {
            if !rows[prow][c].is_zero() {
                rows[prow][c] = &rows[prow][c] * &inv;
            }
        }
        let pivot_row = rows[prow].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == prow || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for c in col..ncols {
                if !pivot_row[c].is_zero() {
                    row[c] = &row[c] - &(&factor * &pivot_row[c]);
                }
            }
        }
        pivots.push(col);
        prow += 1;
    }
    Rref {
        rows,
        pivots,
        ncols,
    }
}

pub fn rank(mat: &[Vec<RatFunc>], ncols: usize) -> usize {
    rref(mat, ncols).rank()
}

/// Basis of the right kernel `{x : M x = 0}`, one vector per free column.
pub fn nullspace(mat: &[Vec<RatFunc>], ncols: usize, nvars: usize) -> Vec<Vec<RatFunc>> {
    let red = rref(mat, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !red.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![RatFunc::zero(nvars); ncols];
            v[f] = RatFunc::one(nvars);
            for (i, &p) in red.pivots.iter().enumerate() {
                v[p] = -&red.rows[i][f];
            }
            v
        })
        .collect()
}

/// A solution of `M x = b`, or `None` when the system is inconsistent.
pub fn solve(
    mat: &[Vec<RatFunc>],
    rhs: &[RatFunc],
    ncols: usize,
    nvars: usize,
) -> Option<Vec<RatFunc>> {
    assert_eq!(mat.len(), rhs.len());
    let augmented: Matrix = mat
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let red = rref(&augmented, ncols + 1);
    if red.pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![RatFunc::zero(nvars); ncols];
    for (i, &p) in red.pivots.iter().enumerate() {
        x[p] = red.rows[i][ncols].clone();
    }
    Some(x)
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(mat: &[Vec<RatFunc>], nvars: usize) -> Option<Matrix> {
    let n = mat.len();
    let augmented: Matrix = mat
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "square matrix");
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    RatFunc::one(nvars)
                } else {
                    RatFunc::zero(nvars)
                }
            }));
            r
        })
        .collect();
    let red = rref(&augmented, 2 * n);
    if red.pivots.len() < n || red.pivots[n - 1] != n - 1 {
        return None;
    }
    Some(red.rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Determinant by fraction-field elimination.
pub fn determinant(mat: &[Vec<RatFunc>], nvars: usize) -> RatFunc {
    let n = mat.len();
    let mut rows: Matrix = mat.to_vec();
    let mut det = RatFunc::one(nvars);
    for col in 0..n {
        let pick = (col..n)
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| (rows[r][col].complexity(), r));
        let Some(pick) = pick else {
            return RatFunc::zero(nvars);
        };
        if pick != col {
            rows.swap(pick, col);
            det = -det;
        }
        let pivot = rows[col][col].clone();
        det = &det * &pivot;
        let inv = pivot.recip().expect("nonzero pivot");
        let pivot_row = rows[col].clone();
        for row in rows.iter_mut().skip(col + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] * &inv;
            for c in col..n {
                if !pivot_row[c].is_zero() {
                    row[c] = &row[c] - &(&factor * &pivot_row[c]);
                }
            }
        }
    }
    det
}

pub fn mat_vec(mat: &[Vec<RatFunc>], v: &[RatFunc], nvars: usize) -> Vec<RatFunc> {
    mat.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .fold(RatFunc::zero(nvars), |acc, (a, b)| &acc + &(a * b))
        })
        .collect()
}

pub fn transpose(mat: &[Vec<RatFunc>], ncols: usize) -> Matrix {
    (0..ncols)
        .map(|c| mat.iter().map(|r| r[c].clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::parse_ratfunc;

    fn m(rows: &[&[&str]]) -> Matrix {
        let names = vec!["x".to_string()];
        rows.iter()
            .map(|r| r.iter().map(|s| parse_ratfunc(s, &names).unwrap()).collect())
            .collect()
    }

    #[test]
    fn rank_over_fraction_field() {
        // rows (1, x) and (x, x^2) are dependent over Q(x)
        assert_eq!(rank(&m(&[&["1", "x"], &["x", "x^2"]]), 2), 1);
        assert_eq!(rank(&m(&[&["1", "x"], &["x", "1"]]), 2), 2);
    }

    #[test]
    fn nullspace_annihilates() {
        let a = m(&[&["1", "x", "0"], &["0", "1", "x"]]);
        let ker = nullspace(&a, 3, 1);
        assert_eq!(ker.len(), 1);
        for v in &ker {
            assert!(mat_vec(&a, v, 1).iter().all(RatFunc::is_zero));
        }
    }

    #[test]
    fn inverse_and_determinant() {
        let a = m(&[&["x", "1"], &["1", "x"]]);
        let inv = inverse(&a, 1).unwrap();
        let names = vec!["x".to_string()];
        let d = parse_ratfunc("x^2 - 1", &names).unwrap();
        assert_eq!(determinant(&a, 1), d);
        assert_eq!(inv[0][0], &a[1][1] / &d);
        assert!(inverse(&m(&[&["1", "x"], &["x", "x^2"]]), 1).is_none());
        assert!(determinant(&m(&[&["1", "x"], &["x", "x^2"]]), 1).is_zero());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&["1", "1"], &["1", "-1"]]);
        let b = m(&[&["x", "1"]]).remove(0);
        let x = solve(&a, &b, 2, 1).unwrap();
        assert_eq!(mat_vec(&a, &x, 1), b);
        let singular = m(&[&["1", "1"], &["2", "2"]]);
        assert!(solve(&singular, &b, 2, 1).is_none());
    }
}
