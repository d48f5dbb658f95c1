//! Exact Bernoulli numbers and polynomials over BigRational.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::sync::Mutex;
use std::sync::OnceLock;

fn cache() -> &'static Mutex<Vec<BigRational>> {
    static CACHE: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![BigRational::one()]))
}

/// n choose k as BigInt, n and k small nonnegative.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

pub fn factorial(n: u64) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= BigInt::from(i);
    }
    f
}

/// B_m with B_1 = -1/2.
pub fn bernoulli_number(m: u64) -> BigRational {
    let mut c = cache().lock().unwrap();
    while (c.len() as u64) <= m {
        let t = c.len() as u64; // computing B_t
        let mut s = BigRational::zero();
        for k in 0..t {
            s += BigRational::from_integer(binomial(t + 1, k)) * &c[k as usize];
        }
        let b = -s / BigRational::from_integer(BigInt::from(t + 1));
        c.push(b);
    }
    c[m as usize].clone()
}

/// B_m(x) evaluated exactly at rational x.
pub fn bernoulli_poly(m: u64, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    let mut xpow = BigRational::one();
    // sum_k C(m,k) B_k x^{m-k}; iterate k downward so x powers go upward
    for k in (0..=m).rev() {
        acc += BigRational::from_integer(binomial(m, k)) * bernoulli_number(k) * &xpow;
        xpow *= x;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hp::real::{ratio, ratio_int};

    #[test]
    fn known_numbers() {
        assert_eq!(bernoulli_number(0), ratio_int(1));
        assert_eq!(bernoulli_number(1), ratio(-1, 2));
        assert_eq!(bernoulli_number(2), ratio(1, 6));
        assert_eq!(bernoulli_number(3), ratio_int(0));
        assert_eq!(bernoulli_number(4), ratio(-1, 30));
        assert_eq!(bernoulli_number(12), ratio(-691, 2730));
    }

    #[test]
    fn poly_difference_identity() {
        // B_m(x+1) - B_m(x) = m x^{m-1}, exact, m <= 12
        let xs = [ratio(3, 7), ratio(-5, 3), ratio_int(4), ratio(11, 2)];
        for m in 1..=12u64 {
            for x in &xs {
                let lhs = bernoulli_poly(m, &(x + ratio_int(1))) - bernoulli_poly(m, x);
                let mut xp = ratio_int(1);
                for _ in 0..(m - 1) {
                    xp *= x;
                }
                assert_eq!(lhs, ratio_int(m as i64) * xp, "m={m}");
            }
        }
    }

    #[test]
    fn poly_at_zero_is_number() {
        for m in 0..=16u64 {
            assert_eq!(bernoulli_poly(m, &ratio_int(0)), bernoulli_number(m));
        }
    }
}
