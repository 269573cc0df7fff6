//! Dense linear algebra over GF(5).

use crate::scalar::Scalar;

pub type Row = Vec<Scalar>;

/// Brings `rows` into reduced row-echelon form in place, dropping zero rows,
/// and returns the pivot column of each remaining row.
pub fn rref(rows: &mut Vec<Row>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        let Some(found) = (top..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(top, found);
        let inv = rows[top][col].inv().expect("nonzero pivot");
        for v in rows[top].iter_mut() {
            *v *= inv;
        }
        let pivot_row = rows[top].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != top {
                eliminate(row, &pivot_row, col);
            }
        }
        pivots.push(col);
        top += 1;
        if top == rows.len() {
            break;
        }
    }
    rows.truncate(top);
    pivots
}

/// `row -= row[col] * pivot_row`, where `pivot_row[col] = 1`.
#[inline]
pub fn eliminate(row: &mut [Scalar], pivot_row: &[Scalar], col: usize) {
    let factor = row[col];
    if factor.is_zero() {
        return;
    }
    let factor = -factor;
    for (v, &p) in row.iter_mut().zip(pivot_row) {
        if !p.is_zero() {
            *v += factor * p;
        }
    }
}

pub fn rank(rows: &[Row]) -> usize {
    let mut rows = rows.to_vec();
    rref(&mut rows).len()
}

/// Inverse of a square matrix given by rows, or `None` if singular.
pub fn invert(matrix: &[Row]) -> Option<Vec<Row>> {
    let n = matrix.len();
    let mut aug: Vec<Row> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Scalar::ONE } else { Scalar::ZERO }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn determinant(matrix: &[Row]) -> Scalar {
    let n = matrix.len();
    let mut m = matrix.to_vec();
    let mut det = Scalar::ONE;
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Scalar::ZERO;
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col];
        det *= pivot;
        let inv = pivot.inv().expect("nonzero pivot");
        for r in col + 1..n {
            let factor = m[r][col] * inv;
            if factor.is_zero() {
                continue;
            }
            let (top, bottom) = m.split_at_mut(r);
            for (v, &p) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *v -= factor * p;
            }
        }
    }
    det
}

pub fn mat_vec(matrix: &[Row], v: &[Scalar]) -> Row {
    matrix
        .iter()
        .map(|row| row.iter().zip(v).map(|(&a, &b)| a * b).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Row> {
        rows.iter()
            .map(|r| r.iter().map(|&v| Scalar::new(v)).collect())
            .collect()
    }

    #[test]
    fn rref_and_rank() {
        let mut a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let pivots = rref(&mut a);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(a, m(&[&[1, 0, 1], &[0, 1, 1]]));
        assert_eq!(rank(&m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[1, 1, 2], &[1, 1, 4], &[1, 4, 0]]);
        let inv = invert(&a).unwrap();
        for (i, row) in a.iter().enumerate() {
            let prod: Row = (0..3)
                .map(|j| (0..3).map(|k| row[k] * inv[k][j]).sum())
                .collect();
            let expected: Row = (0..3)
                .map(|j| if i == j { Scalar::ONE } else { Scalar::ZERO })
                .collect();
            assert_eq!(prod, expected);
        }
        assert!(invert(&m(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn determinant_matches_singularity() {
        assert_eq!(determinant(&m(&[&[1, 2], &[3, 4]])), Scalar::new(-2));
        assert_eq!(determinant(&m(&[&[1, 2], &[2, 4]])), Scalar::ZERO);
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])), Scalar::new(-1));
    }
}
