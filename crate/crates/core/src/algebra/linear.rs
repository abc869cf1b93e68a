use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Incremental row echelon form over the rationals.
#[derive(Default)]
pub(crate) struct Echelon {
    rows: Vec<(usize, Vec<BigRational>)>,
}

impl Echelon {
    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` to the row space; false when it was already there.
    pub(crate) fn insert(&mut self, mut v: Vec<BigRational>) -> bool {
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let f = v[*pivot].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= &f * r;
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[pivot].is_zero() {
                let f = row[pivot].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    *x -= &f * r;
                }
            }
        }
        self.rows.push((pivot, v));
        true
    }
}

/// A basis of `{c : Σ c_i columns[i] = 0}`, each vector scaled to coprime
/// integers with a positive leading entry.
pub(crate) fn integer_kernel(columns: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let m = columns.len();
    if m == 0 {
        return Vec::new();
    }
    let d = columns[0].len();
    let mut a: Vec<Vec<BigRational>> = (0..d)
        .map(|i| columns.iter().map(|c| BigRational::from_integer(c[i].clone())).collect())
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..m {
        let Some(p) = (r..d).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][col].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..d {
            if i != r && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == d {
            break;
        }
    }
    let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
    free.into_iter()
        .map(|f| {
            let mut v = vec![BigRational::zero(); m];
            v[f] = BigRational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -a[row][f].clone();
            }
            to_integers(v)
        })
        .collect()
}

fn to_integers(v: Vec<BigRational>) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = out.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() {
        for x in out.iter_mut() {
            *x /= &g;
        }
    }
    if out.iter().find(|x| !x.is_zero()).is_some_and(|x| x < &BigInt::zero()) {
        for x in out.iter_mut() {
            *x = -&*x;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn rats(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let mut e = Echelon::default();
        assert!(e.insert(rats(&[1, 2, 3])));
        assert!(e.insert(rats(&[2, 4, 7])));
        assert!(!e.insert(rats(&[3, 6, 10])));
        assert!(!e.insert(rats(&[0, 0, 0])));
        assert_eq!(e.rank(), 2);

        let cols = vec![ints(&[1, 2]), ints(&[2, 4]), ints(&[0, 1])];
        assert_eq!(integer_kernel(&cols), vec![ints(&[2, -1, 0])]);
        assert!(integer_kernel(&[ints(&[1, 0]), ints(&[0, 1])]).is_empty());
    }
}
