//! Modified Bessel function of the first kind, ascending series, for
//! exact rational order, plus the divergent large-argument expansion.

use super::gamma::rgamma_q;
use super::real::{ratio_int, Real};
use num_traits::Zero;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

/// I_nu(z) = sum_m (z/2)^(nu+2m) / (m! Gamma(nu+m+1)) for z >= 0.
/// Terms whose Gamma argument is a nonpositive integer vanish; the sum is
/// truncated once a term drops below 10^-(digits+10) of the running
/// maximum term.
pub fn bessel_i(nu: &BigRational, z: &Real, digits: u32) -> Real {
    assert!(
        !z.is_negative(),
        "bessel_i expects z >= 0, got negative argument"
    );
    let d = digits + 15;
    if z.is_zero() {
        if nu.is_integer() {
            return if nu.numer().is_zero() {
                Real::from_i64(1, digits)
            } else {
                Real::zero(digits)
            };
        }
        assert!(
            nu.is_positive(),
            "I_nu(0) diverges for negative non-integer order"
        );
        return Real::zero(digits);
    }
    // integer order: I_{-K} = I_K, so the sum starts with Gamma(K+1)
    let nu = if nu.is_integer() && nu.numer().is_negative() {
        -nu.clone()
    } else {
        nu.clone()
    };
    let half = z.with_digits(d).div_i64(2);
    let half2 = &half * &half;
    // first term: (z/2)^nu / Gamma(nu+1)
    let mut term = half.pow_ratio(&nu, d) * rgamma_q(&(&nu + ratio_int(1)), d);
    let mut acc = term.clone();
    let mut max_mag = term.exponent2();
    let cutoff_bits = ((digits as f64 + 10.0) * 3.33) as i64 + 4;
    let mut m: i64 = 0;
    loop {
        m += 1;
        // t_{m} = t_{m-1} * (z/2)^2 / (m (nu + m))
        let den = Real::from_ratio(&(&nu + ratio_int(m)), d).mul_i64(m);
        term = &(&term * &half2) / &den;
        acc = &acc + &term;
        let mag = term.exponent2();
        if mag > max_mag {
            max_mag = mag;
        }
        if term.is_zero() || mag < max_mag - cutoff_bits {
            break;
        }
        assert!(m < 1_000_000, "bessel series failed to converge");
    }
    acc.with_digits(digits)
}

/// Large-z expansion e^z/sqrt(2 pi z) sum_r (-1)^r a_r(nu) / z^r with
/// a_r = prod_{i=1..r} (4 nu^2 - (2i-1)^2) / (8^r r!). Asymptotic; the
/// caller chooses how many terms to keep.
pub fn bessel_i_asymptotic(nu: &BigRational, z: &Real, terms: u32, digits: u32) -> Real {
    assert!(z.is_positive(), "asymptotic form needs z > 0");
    let d = digits + 10;
    let z = z.with_digits(d);
    let four_nu2 = ratio_int(4) * nu * nu;
    let mut coeff = BigRational::from_integer(BigInt::from(1));
    let mut sum = Real::from_i64(1, d);
    let mut zpow = Real::from_i64(1, d);
    for r in 1..terms as i64 {
        let odd = 2 * r - 1;
        coeff = coeff * (&four_nu2 - ratio_int(odd * odd)) / ratio_int(8 * r);
        zpow = &zpow * &z;
        let sign = if r % 2 == 0 { 1 } else { -1 };
        let c = Real::from_ratio(&(coeff.clone() * ratio_int(sign)), d);
        sum = &sum + &(&c / &zpow);
    }
    let pref = z.exp() / (Real::pi(d).mul_i64(2) * &z).sqrt();
    (pref * sum).with_digits(digits)
}

/// Convenience for real order when the order is known away from the
/// reciprocal-gamma zeros (used by invariant tests with random orders).
pub fn bessel_i_real_order(nu: &Real, z: &Real, digits: u32) -> Real {
    // snap to a rational with huge denominator; exactness in the order is
    // not needed away from integer points
    let denom: i64 = 1 << 40;
    let scaled = nu.mul_i64(denom);
    let num = scaled.round_to_bigint();
    let q = BigRational::new(num, BigInt::from(denom));
    bessel_i(&q, z, digits)
}

pub fn nu_to_f64(nu: &BigRational) -> f64 {
    nu.numer().to_f64().unwrap_or(f64::NAN) / nu.denom().to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hp::real::{agreement_digits, ratio};

    #[test]
    fn half_order_closed_form() {
        // I_{1/2}(z) = sqrt(2/(pi z)) sinh z
        let z = Real::from_i64(1, 50);
        let v = bessel_i(&ratio(1, 2), &z, 50);
        let d = 50;
        let e = z.exp();
        let sinh = (&e - &e.recip()).div_i64(2);
        let pref = (Real::from_i64(2, d) / (Real::pi(d) * &z)).sqrt();
        let expect = pref * sinh;
        assert!(agreement_digits(&v, &expect) > 47.0);
    }

    #[test]
    fn integer_negative_order_symmetry() {
        let z = Real::parse("7.25", 40);
        let a = bessel_i(&ratio_int(-3), &z, 40);
        let b = bessel_i(&ratio_int(3), &z, 40);
        assert!(a.sub(&b).is_zero());
    }

    #[test]
    fn asymptotic_matches_series() {
        let z = Real::from_i64(50, 40);
        let nu = ratio(-3, 2);
        let a = bessel_i(&nu, &z, 40);
        let b = bessel_i_asymptotic(&nu, &z, 20, 40);
        assert!(agreement_digits(&a, &b) > 20.0, "{a:?} vs {b:?}");
    }

    #[test]
    fn rejects_negative_argument() {
        let r = std::panic::catch_unwind(|| {
            bessel_i(&ratio(1, 2), &Real::from_i64(-1, 30), 30)
        });
        assert!(r.is_err());
    }
}
