use num_bigint::BigUint;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    // each partial product is itself a binomial coefficient, so the
    // division is exact at every step
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Stirling numbers of the second kind, `S(m, k) = k S(m-1, k) + S(m-1, k-1)`.
pub fn stirling2(m: usize, k: usize) -> BigUint {
    let mut row = vec![BigUint::zero(); k + 1];
    row[0] = BigUint::one();
    for _ in 0..m {
        for j in (1..=k).rev() {
            row[j] = &row[j] * j + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    row[k].clone()
}

/// Central factorial numbers `T(m, k) = T(m-1, k-1) + k^2 T(m-1, k)`,
/// `T(0, 0) = 1`.
pub fn central_factorial(m: usize, k: usize) -> BigUint {
    let mut row = vec![BigUint::zero(); k + 1];
    row[0] = BigUint::one();
    for _ in 0..m {
        for j in (1..=k).rev() {
            row[j] = &row[j] * (j * j) + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    row[k].clone()
}

/// `Cat(m) = C(2m, m) / (m + 1)`.
pub fn catalan(m: usize) -> BigUint {
    binomial(2 * m, m) / (m + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Set partitions of `{0, …, size-1}` as block labels, restricted
    /// growth form.
    fn set_partitions(size: usize) -> Vec<Vec<usize>> {
        fn rec(i: usize, size: usize, blocks: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if i == size {
                out.push(cur.clone());
                return;
            }
            for b in 0..=blocks {
                cur.push(b);
                rec(i + 1, size, blocks.max(b + 1), cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(0, size, 0, &mut Vec::new(), &mut out);
        out
    }

    fn blocks(p: &[usize]) -> usize {
        p.iter().max().map_or(0, |b| b + 1)
    }

    #[test]
    fn stirling_matches_set_partitions() {
        for m in 0..=7 {
            let all = set_partitions(m);
            for k in 0..=m + 1 {
                let direct = all.iter().filter(|p| blocks(p) == k).count();
                assert_eq!(stirling2(m, k), BigUint::from(direct), "S({m},{k})");
            }
        }
        assert_eq!(stirling2(5, 2), BigUint::from(15u32));
        assert_eq!(stirling2(4, 0), BigUint::zero());
    }

    #[test]
    fn central_factorial_matches_paired_partitions() {
        // symbol i is 2i, its primed twin is 2i + 1
        for m in 0..=5 {
            let all = set_partitions(2 * m);
            for k in 0..=m + 1 {
                let direct = all
                    .iter()
                    .filter(|p| blocks(p) == k)
                    .filter(|p| {
                        (0..blocks(p)).all(|b| {
                            let least = (0..2 * m).find(|&s| p[s] == b).expect("blocks are nonempty") / 2;
                            p[2 * least] == b && p[2 * least + 1] == b
                        })
                    })
                    .count();
                assert_eq!(central_factorial(m, k), BigUint::from(direct), "T({m},{k})");
            }
        }
        assert_eq!(central_factorial(3, 2), BigUint::from(5u32));
        assert_eq!(central_factorial(2, 1), BigUint::one());
        assert_eq!(central_factorial(4, 4), BigUint::one());
    }

    #[test]
    fn small_values() {
        let cats: Vec<BigUint> = (0..6).map(catalan).collect();
        assert_eq!(cats, [1u32, 1, 2, 5, 14, 42].map(BigUint::from));
        assert_eq!(binomial(10, 3), BigUint::from(120u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(6), BigUint::from(720u32));
    }
}
