//! Exact rank computations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn rank_integer(mut rows: Vec<Vec<BigInt>>) -> usize {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            let f = rows[r][col].clone();
            for c in col..ncols {
                let v = &pivot * &rows[r][c] - &f * &rows[rank][c];
                // Bareiss: exact division by the previous pivot
                rows[r][c] = v / &prev;
            }
            // the pivot column below is now zero; entries left of `col` are already zero
        }
        prev = pivot;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Rank of a rational matrix; rows are cleared of denominators first.
pub fn rank_rational(rows: &[Vec<BigRational>]) -> usize {
    let int_rows = rows
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter()
                .map(|q| (q * BigRational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect();
    rank_integer(int_rows)
}

/// Reduces `v` against an echelon basis kept in `basis` and adds it if
/// independent. Returns whether the span grew.
pub fn extend_basis(basis: &mut Vec<(usize, Vec<BigRational>)>, mut v: Vec<BigRational>) -> bool {
    for (pc, b) in basis.iter() {
        if !v[*pc].is_zero() {
            let f = v[*pc].clone() / &b[*pc];
            for (x, y) in v.iter_mut().zip(b) {
                *x -= &f * y;
            }
        }
    }
    match v.iter().position(|x| !x.is_zero()) {
        Some(pc) => {
            basis.push((pc, v));
            true
        }
        None => false,
    }
}
