//! Gamma function at arbitrary precision via the Stirling series with
//! argument shifting, plus an exact reciprocal for rational arguments.

use super::bernoulli::bernoulli_number;
use super::real::{is_nonpositive_int, ratio_int, sin_pi_ratio, Real};
use num_rational::BigRational;
use num_traits::Signed;

/// log Gamma(x) for x large enough that the Stirling tail reaches the target.
/// Caller guarantees x >= stirling_threshold(digits).
fn ln_gamma_stirling(x: &Real, digits: u32) -> Real {
    let d = digits + 10;
    let x = x.with_digits(d);
    let half = Real::parse("0.5", d);
    let two_pi = Real::pi(d).mul_i64(2);
    let mut acc = (&x - &half) * x.ln() - &x + two_pi.ln().div_i64(2);
    // + sum_j B_2j / (2j (2j-1) x^(2j-1))
    let x2 = &x * &x;
    let mut xpow = x.clone(); // x^(2j-1)
    let eps_exp = -((d as f64) * 3.33) as i64 - 8;
    let mut j = 1u64;
    loop {
        let b = bernoulli_number(2 * j);
        let denom = BigRational::from_integer((2 * j * (2 * j - 1)).into());
        let coeff = Real::from_ratio(&(b / denom), d);
        let term = &coeff / &xpow;
        acc = &acc + &term;
        if term.is_zero() || term.exponent2() < acc.exponent2() + eps_exp {
            break;
        }
        xpow = &xpow * &x2;
        j += 1;
        assert!(j < 4 * d as u64 + 64, "Stirling series failed to converge");
    }
    acc
}

fn stirling_threshold(digits: u32) -> i64 {
    ((digits as f64 + 12.0) * 0.3665).ceil() as i64 + 4
}

/// Gamma(x) for real x > 0.
pub fn gamma_real(x: &Real, digits: u32) -> Real {
    assert!(x.is_positive(), "gamma_real needs a positive argument");
    let d = digits + 10;
    let x = x.with_digits(d);
    let t = stirling_threshold(digits);
    let shift = (t - x.to_f64().floor() as i64).max(0);
    let mut big = x.clone();
    for _ in 0..shift {
        big = &big + &Real::from_i64(1, d);
    }
    let mut g = ln_gamma_stirling(&big, digits).exp();
    // Gamma(x) = Gamma(x + shift) / (x (x+1) ... (x+shift-1))
    let mut f = x.clone();
    for i in 0..shift {
        if i > 0 {
            f = &f + &Real::from_i64(1, d);
        }
        g = &g / &f;
    }
    g.with_digits(digits)
}

/// Gamma at an exact rational argument; panics on nonpositive integers.
pub fn gamma_q(q: &BigRational, digits: u32) -> Real {
    assert!(
        !is_nonpositive_int(q),
        "gamma pole at nonpositive integer {q}"
    );
    let d = digits + 10;
    if q.is_positive() {
        gamma_real(&Real::from_ratio(q, d), digits)
    } else {
        // reflection: Gamma(q) = pi / (sin(pi q) Gamma(1 - q)), exact phase
        let one_minus = ratio_int(1) - q;
        let s = sin_pi_ratio(q, d);
        let g = gamma_q(&one_minus, digits + 5);
        (Real::pi(d) / (s * g)).with_digits(digits)
    }
}

/// 1 / Gamma(q) with the convention that it is exactly zero at
/// nonpositive integers.
pub fn rgamma_q(q: &BigRational, digits: u32) -> Real {
    if is_nonpositive_int(q) {
        return Real::zero(digits);
    }
    if q.is_positive() {
        return gamma_q(q, digits).recip().with_digits(digits);
    }
    // 1/Gamma(q) = sin(pi q) Gamma(1-q) / pi, no pole anywhere
    let d = digits + 10;
    let one_minus = ratio_int(1) - q;
    let s = sin_pi_ratio(q, d);
    let g = gamma_q(&one_minus, digits + 5);
    ((s * g) / Real::pi(d)).with_digits(digits)
}

/// Gamma(n) = (n-1)! fast path for small positive integers.
pub fn gamma_int(n: u64, digits: u32) -> Real {
    let f = super::bernoulli::factorial(n - 1);
    Real::from_bigint(&f, digits)
}

pub fn to_rational_if_close(x: f64) -> Option<BigRational> {
    let r = x.round();
    if (x - r).abs() < 1e-9 {
        Some(BigRational::from_integer((r as i64).into()))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hp::real::{agreement_digits, ratio};

    #[test]
    fn integer_values() {
        let g5 = gamma_real(&Real::from_i64(5, 40), 40);
        assert!(agreement_digits(&g5, &Real::from_i64(24, 40)) > 38.0);
        let g1 = gamma_q(&ratio_int(1), 40);
        assert!(agreement_digits(&g1, &Real::from_i64(1, 40)) > 38.0);
    }

    #[test]
    fn half_integer() {
        // Gamma(1/2) = sqrt(pi)
        let g = gamma_q(&ratio(1, 2), 60);
        let s = Real::pi(60).sqrt();
        assert!(agreement_digits(&g, &s) > 57.0);
        // Gamma(-1/2) = -2 sqrt(pi)
        let g = gamma_q(&ratio(-1, 2), 60);
        let s = Real::pi(60).sqrt().mul_i64(-2);
        assert!(agreement_digits(&g, &s) > 57.0);
    }

    #[test]
    fn reciprocal_zeros() {
        for q in [ratio_int(0), ratio_int(-1), ratio_int(-7)] {
            assert!(rgamma_q(&q, 30).is_zero());
        }
        let v = rgamma_q(&ratio(-3, 2), 50);
        // 1/Gamma(-3/2) = 3/(4 sqrt(pi)) ... Gamma(-3/2) = 4 sqrt(pi)/3
        let expect = Real::from_i64(3, 50) / (Real::pi(50).sqrt().mul_i64(4));
        assert!(agreement_digits(&v, &expect) > 47.0);
    }

    #[test]
    fn recurrence_spot() {
        // Gamma(x+1) = x Gamma(x) at a random-ish awkward point
        let x = Real::parse("13.7251", 50);
        let a = gamma_real(&(&x + &Real::from_i64(1, 50)), 50);
        let b = &x * &gamma_real(&x, 50);
        assert!(agreement_digits(&a, &b) > 46.0);
    }
}
