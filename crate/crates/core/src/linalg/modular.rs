use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::exact::{rank, Mat};
use super::field::{Fp, Rational};
use crate::error::{Error, Result};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A prime in `[2^61, 2^62)`.
pub fn random_prime<R: Rng>(rng: &mut R) -> u64 {
    loop {
        let c = rng.gen_range(1u64 << 61..1u64 << 62) | 1;
        if is_prime(c) {
            return c;
        }
    }
}

/// Kernel dimension of a rational matrix after reduction modulo `p`.
pub fn kernel_dim_mod_p(m: &Mat<Rational>, p: u64) -> Result<usize> {
    let zero = Fp::new(0, p);
    let mut rows = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let row = m
            .row(i)
            .iter()
            .map(|x| Fp::from_rational(x, p).ok_or(Error::BadPrime(p)))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    let reduced = Mat::from_rows(rows, m.cols(), zero);
    Ok(m.cols() - rank(&reduced))
}

/// Kernel dimension over `F_p` for a prime drawn from `seed`.
///
/// A reduction can only lose rank, so this is an upper bound on the
/// rational kernel dimension that is tight with overwhelming probability.
/// Returns the dimension together with the prime used.
pub fn solve_homogeneous_over_random_prime(m: &Mat<Rational>, seed: u64) -> Result<(usize, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = random_prime(&mut rng);
    kernel_dim_mod_p(m, p).map(|d| (d, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::exact::nullspace;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn primality() {
        assert!(is_prime(2_305_843_009_213_693_951));
        assert!(!is_prime(2_305_843_009_213_693_953));
        assert!(is_prime(101));
        assert!(!is_prime(1));
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let (d, p) = solve_homogeneous_over_random_prime(&Mat::identity(3, q(0, 1)), 7).unwrap();
        assert_eq!(d, 0);
        assert!(p >= 1 << 61);
    }

    #[test]
    fn all_ones_mod_101() {
        let m = Mat::from_fn(2, 2, q(0, 1), |_, _| q(1, 1));
        assert_eq!(kernel_dim_mod_p(&m, 101).unwrap(), 1);
    }

    #[test]
    fn bad_prime_is_reported() {
        let m = Mat::from_fn(1, 1, q(0, 1), |_, _| q(1, 101));
        assert_eq!(kernel_dim_mod_p(&m, 101), Err(Error::BadPrime(101)));
    }

    #[test]
    fn random_full_rank_20_by_30_matches_exact_elimination() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let m = Mat::from_fn(20, 30, q(0, 1), |_, _| {
            q(rng.gen_range(-9..10), rng.gen_range(1..6))
        });
        let exact = nullspace(&m).len();
        assert_eq!(exact, 10);
        let a = solve_homogeneous_over_random_prime(&m, 1).unwrap().0;
        let b = solve_homogeneous_over_random_prime(&m, 2).unwrap().0;
        assert_eq!(a.min(b), exact);
    }
}
