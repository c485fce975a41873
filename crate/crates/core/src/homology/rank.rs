//! Matrix ranks for boundary operators.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Rank over GF(2). Each row is a packed bit vector.
pub fn gf2_rank(rows: Vec<Vec<u64>>) -> usize {
    // pivots keyed by lowest set column
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    let mut rank = 0;
    for mut row in rows {
        while let Some(col) = lowest_bit(&row) {
            match pivots.get(&col) {
                Some(p) => {
                    for (a, b) in row.iter_mut().zip(p) {
                        *a ^= *b;
                    }
                }
                None => {
                    pivots.insert(col, row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn lowest_bit(row: &[u64]) -> Option<usize> {
    row.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Rank over ℚ of a sparse integer matrix. Each row lists `(column, value)`
/// pairs in increasing column order. Rows are reduced fraction-free against
/// pivots keyed by leading column and divided by their content.
pub fn rational_rank(rows: Vec<Vec<(usize, i64)>>) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, BigInt)>> = HashMap::new();
    let mut rank = 0;
    for row in rows {
        let mut row: Vec<(usize, BigInt)> =
            row.into_iter().filter(|(_, v)| *v != 0).map(|(c, v)| (c, BigInt::from(v))).collect();
        while let Some((lead, _)) = row.first() {
            match pivots.get(lead) {
                Some(p) => row = eliminate(&row, p),
                None => {
                    pivots.insert(*lead, row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// `p₀·row − r₀·pivot` divided by its content; both share a leading column.
fn eliminate(row: &[(usize, BigInt)], pivot: &[(usize, BigInt)]) -> Vec<(usize, BigInt)> {
    let (a, b) = (&pivot[0].1, &row[0].1);
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let (c, v) = match (row.get(i), pivot.get(j)) {
            (Some((cr, vr)), Some((cp, _))) if cr < cp => {
                i += 1;
                (*cr, a * vr)
            }
            (Some((cr, _)), Some((cp, vp))) if cp < cr => {
                j += 1;
                (*cp, -(b * vp))
            }
            (Some((cr, vr)), Some((_, vp))) => {
                i += 1;
                j += 1;
                (*cr, a * vr - b * vp)
            }
            (Some((cr, vr)), None) => {
                i += 1;
                (*cr, a * vr)
            }
            (None, Some((cp, vp))) => {
                j += 1;
                (*cp, -(b * vp))
            }
            (None, None) => unreachable!(),
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    let content = out.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
    if !content.is_zero() && !content.is_one() {
        for (_, v) in &mut out {
            *v /= &content;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sparse(rows: &[&[i64]]) -> Vec<Vec<(usize, i64)>> {
        rows.iter().map(|r| r.iter().copied().enumerate().filter(|(_, v)| *v != 0).collect()).collect()
    }

    #[test]
    fn gf2_ranks() {
        assert_eq!(gf2_rank(vec![vec![0b011], vec![0b110], vec![0b101]]), 2);
        assert_eq!(gf2_rank(vec![vec![0b001], vec![0b010], vec![0b100]]), 3);
        assert_eq!(gf2_rank(vec![vec![0], vec![0]]), 0);
        assert_eq!(gf2_rank(vec![]), 0);
    }

    #[test]
    fn rational_ranks() {
        assert_eq!(rational_rank(sparse(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, -1]])), 2);
        // rank 3 over ℚ, 2 over GF(2)
        assert_eq!(rational_rank(sparse(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])), 3);
        assert_eq!(rational_rank(sparse(&[&[0, 0], &[0, 2]])), 1);
        assert_eq!(rational_rank(sparse(&[&[2, 4, 6], &[3, 6, 9]])), 1);
    }
}
