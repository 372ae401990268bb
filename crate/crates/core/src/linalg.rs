//! Row reduction over a [`Field`] on raw element codes.

use crate::field::Field;

pub(crate) type Row = Vec<u32>;

/// Reduce `rows` in place to reduced row-echelon form, dropping zero rows.
/// Returns the pivot columns in increasing order.
pub(crate) fn rref(f: &Field, rows: &mut Vec<Row>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = f.inv(rows[r][c]);
        if inv != 1 {
            for x in rows[r][c..].iter_mut() {
                *x = f.mul(*x, inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let factor = f.neg(row[c]);
            for (x, &y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if y != 0 {
                    *x = f.add(*x, f.mul(factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub(crate) fn rank(f: &Field, rows: &[Row]) -> usize {
    let mut m = rows.to_vec();
    rref(f, &mut m).len()
}

/// Basis of `{x : row . x = 0 for every row}` in `ncols` unknowns.
pub(crate) fn null_space(f: &Field, rows: &[Row], ncols: usize) -> Vec<Row> {
    let mut m = rows.to_vec();
    let pivots = rref(f, &mut m);
    let mut basis = Vec::with_capacity(ncols - pivots.len());
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u32; ncols];
        v[free] = 1;
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = f.neg(row[free]);
        }
        basis.push(v);
    }
    basis
}

/// Reduce `v` against an RREF basis; zero iff `v` lies in the row span.
pub(crate) fn reduce_against(f: &Field, basis: &[Row], pivots: &[usize], v: &mut Row) {
    for (row, &c) in basis.iter().zip(pivots) {
        let coeff = v[c];
        if coeff != 0 {
            let factor = f.neg(coeff);
            for (x, &y) in v.iter_mut().zip(row) {
                if y != 0 {
                    *x = f.add(*x, f.mul(factor, y));
                }
            }
        }
    }
}

pub(crate) fn pivots_of(rows: &[Row]) -> Vec<usize> {
    rows.iter()
        .map(|r| r.iter().position(|&x| x != 0).expect("RREF rows are nonzero"))
        .collect()
}

/// `m * v` for a square matrix stored row-major.
pub(crate) fn mat_vec(f: &Field, m: &[Row], v: &[u32]) -> Row {
    m.iter()
        .map(|row| row.iter().zip(v).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b))))
        .collect()
}

pub(crate) fn mat_mul(f: &Field, a: &[Row], b: &[Row]) -> Vec<Row> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).fold(0, |acc, (&x, brow)| f.add(acc, f.mul(x, brow[j]))))
                .collect()
        })
        .collect()
}

/// Inverse of a square matrix, or `None` when singular.
pub(crate) fn invert(f: &Field, m: &[Row]) -> Option<Vec<Row>> {
    let n = m.len();
    let mut aug: Vec<Row> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| u32::from(i == j)));
            r
        })
        .collect();
    let pivots = rref(f, &mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_null_space() {
        let f = Field::prime(5).unwrap();
        let mut m = vec![vec![2, 4, 1], vec![1, 2, 3], vec![0, 0, 0]];
        let piv = rref(&f, &mut m);
        // row2 - 3*row1/2... rank 2: rows (1,2,3) and 2*(1,2,3) = (2,4,1) mod 5
        assert_eq!(piv, vec![0]);
        assert_eq!(m, vec![vec![1, 2, 3]]);
        let ns = null_space(&f, &m, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot = v.iter().zip(&m[0]).fold(0, |a, (&x, &y)| f.add(a, f.mul(x, y)));
            assert_eq!(dot, 0);
        }
    }

    #[test]
    fn inverse_round_trip() {
        let f = Field::prime(7).unwrap();
        let m = vec![vec![1, 2, 0], vec![3, 1, 4], vec![0, 5, 6]];
        let inv = invert(&f, &m).unwrap();
        let id = mat_mul(&f, &m, &inv);
        assert_eq!(id, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(invert(&f, &[vec![1, 2], vec![2, 4]]).is_none());
    }
}
