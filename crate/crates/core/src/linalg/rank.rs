use num_bigint::BigInt;
use num_traits::{CheckedMul, CheckedSub, One, Zero};

/// Fraction-free (Bareiss) elimination. Every intermediate entry is a minor
/// of the input, so each division is exact. Returns `None` if an arithmetic
/// step overflows `T`.
fn bareiss_rank<T>(mut m: Vec<Vec<T>>, cols: usize) -> Option<usize>
where
    T: Clone + Zero + One + CheckedMul + CheckedSub + std::ops::Div<Output = T>,
{
    let rows = m.len();
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        let (top, below) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below {
            let factor = row[col].clone();
            for (x, p) in row[col + 1..].iter_mut().zip(&pivot_row[col + 1..]) {
                let lhs = pivot.checked_mul(x)?;
                let rhs = factor.checked_mul(p)?;
                *x = lhs.checked_sub(&rhs)? / prev.clone();
            }
            row[col] = T::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

/// Exact rank of an integer matrix given as rows.
///
/// Runs in `i128` and reruns in arbitrary precision if any step overflows.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let wide: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    match bareiss_rank(wide, cols) {
        Some(r) => r,
        None => integer_rank_bigint(rows),
    }
}

pub fn integer_rank_bigint(rows: &[Vec<i64>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    bareiss_rank(big, cols).expect("BigInt arithmetic cannot overflow")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(integer_rank(&[]), 0);
        assert_eq!(integer_rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(integer_rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(integer_rank(&[vec![0, 1], vec![1, 0]]), 2);
        // Column without a pivot in the middle.
        assert_eq!(integer_rank(&[vec![1, 1, 0], vec![1, 1, 1], vec![2, 2, 1]]), 2);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 3;
        let rows = vec![
            vec![big, big - 1, 7, 3],
            vec![big - 5, big, 11, 13],
            vec![17, big - 9, big, 19],
            vec![23, 29, big - 2, big],
        ];
        let wide: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        assert_eq!(bareiss_rank(wide, 4), None);
        assert_eq!(integer_rank(&rows), integer_rank_bigint(&rows));
        assert_eq!(integer_rank(&rows), 4);
    }

    #[test]
    fn matches_bigint_on_dependent_rows() {
        let rows = vec![vec![1, 0, 1, 0], vec![0, 1, 0, 1], vec![1, 1, 1, 1], vec![1, 0, 1, 0]];
        assert_eq!(integer_rank(&rows), 2);
        assert_eq!(integer_rank_bigint(&rows), 2);
    }
}
