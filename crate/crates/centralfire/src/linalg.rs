//! Small exact rational linear algebra helpers: solving square integer
//! systems and canonical reduced row-echelon bases.  Dimensions never exceed
//! the rank of a root system (≤ 8), so no attempt is made at being clever.

use num_rational::Ratio;
use num_traits::Zero;

/// Exact rational scalar used throughout the crate.
pub type Rat = Ratio<i64>;

/// Solve `mat · x = rhs` for a square integer matrix by Gaussian elimination
/// over the rationals.  Returns `None` when the matrix is singular (never the
/// case for a Cartan matrix).
pub fn solve_square(mat: &[Vec<i64>], rhs: &[i64]) -> Option<Vec<Rat>> {
    let n = mat.len();
    assert_eq!(rhs.len(), n);
    // Augmented matrix [mat | rhs] over the rationals.
    let mut a: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = mat[i].iter().map(|&v| Rat::from_integer(v)).collect();
            row.push(Rat::from_integer(rhs[i]));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col];
        for v in a[col].iter_mut() {
            *v /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in col..=n {
                    let sub = f * a[col][c];
                    a[r][c] -= sub;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n]).collect())
}

/// Determinant of a square integer matrix, computed exactly.
pub fn det(mat: &[Vec<i64>]) -> i64 {
    let n = mat.len();
    let mut a: Vec<Vec<Rat>> = mat
        .iter()
        .map(|row| row.iter().map(|&v| Rat::from_integer(v)).collect())
        .collect();
    let mut d = Rat::from_integer(1);
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !a[r][col].is_zero()) {
            Some(p) => p,
            None => return 0,
        };
        if pivot != col {
            a.swap(col, pivot);
            d = -d;
        }
        d *= a[col][col];
        let p = a[col][col];
        for r in col + 1..n {
            if !a[r][col].is_zero() {
                let f = a[r][col] / p;
                for c in col..n {
                    let sub = f * a[col][c];
                    a[r][c] -= sub;
                }
            }
        }
    }
    assert!(d.is_integer());
    d.to_integer()
}

/// Bring a set of rational row vectors into canonical reduced row-echelon
/// form, dropping zero rows.  Two lists of vectors span the same subspace iff
/// their echelon forms are equal, so subspace comparison is plain equality.
pub fn rref(mut rows: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    if rows.is_empty() {
        return rows;
    }
    let width = rows[0].len();
    let mut rank = 0;
    for col in 0..width {
        let pivot = match (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        rows.swap(rank, pivot);
        let p = rows[rank][col];
        for v in rows[rank].iter_mut() {
            *v /= p;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col];
                for c in 0..width {
                    let sub = f * rows[rank][c];
                    rows[r][c] -= sub;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}
