//! Exact rank over the rationals via fraction-free (Bareiss) elimination.

use num::{BigInt, BigRational, Integer, One, Zero};

/// Rank of an integer matrix given as rows. Uses one-step Bareiss
/// elimination, so every intermediate entry is an integer minor of the input.
pub fn rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    for r in &mut rows {
        r.resize(cols, BigInt::zero());
    }
    let mut rank = 0;
    let mut prev_pivot = BigInt::one();
    for col in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        let (done, rest) = rows.split_at_mut(rank + 1);
        let top = &done[rank];
        for row in rest {
            let factor = row[col].clone();
            for c in col..cols {
                let v = &pivot * &row[c] - &factor * &top[c];
                debug_assert!((&v % &prev_pivot).is_zero(), "Bareiss division must be exact");
                row[c] = v / &prev_pivot;
            }
        }
        prev_pivot = pivot;
        rank += 1;
    }
    rank
}

/// Scales a rational row to integers by the lcm of its denominators.
pub fn integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// Rank over the rationals.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    rank(rows.iter().map(|r| integer_row(r)).collect())
}
