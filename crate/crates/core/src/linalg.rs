//! Row reduction over a finite field. Matrices are row-major `Vec<Vec<u32>>`
//! of field-element encodings.

use crate::finite_field::Field;

/// Reduced row echelon form. Zero rows are dropped; returns the pivot columns.
pub fn rref(field: &Field, rows: &mut Vec<Vec<u32>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]).expect("pivot is nonzero");
        for x in rows[rank].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                if p != 0 {
                    *x = field.sub(*x, field.mul(factor, p));
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

pub fn rank(field: &Field, rows: &[Vec<u32>]) -> usize {
    let mut m = rows.to_vec();
    rref(field, &mut m).len()
}

/// Basis of the right kernel {x : M x = 0} for an `m × ncols` matrix.
pub fn nullspace(field: &Field, rows: &[Vec<u32>], ncols: usize) -> Vec<Vec<u32>> {
    let mut m = rows.to_vec();
    let pivots = rref(field, &mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0; ncols];
            v[fc] = 1;
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = field.neg(row[fc]);
            }
            v
        })
        .collect()
}
