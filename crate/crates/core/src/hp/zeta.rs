//! Riemann zeta at rational arguments, plus zeta'(-1) via the
//! Glaisher-Kinkelin constant computed along two independent routes.

use super::bernoulli::bernoulli_number;
use super::gamma::gamma_q;
use super::real::{agreement_digits, ratio, ratio_int, sin_pi_ratio, Real};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Accelerated alternating sum  sum_{k>=0} (-1)^k a(k)  for smooth a.
/// Chebyshev style weights, error roughly 5.83^-n.
pub fn alternating_sum(a: impl Fn(usize, u32) -> Real, digits: u32) -> Real {
    let d = digits + 10;
    let n = ((d as f64) * 1.31).ceil() as usize + 3;
    let three = Real::from_i64(3, d);
    let root8 = Real::from_i64(8, d).sqrt();
    let mut dd = (three + root8).powi(n as i64);
    dd = (&dd + &dd.recip()).div_i64(2);
    let mut b = Real::from_i64(-1, d);
    let mut c = -&dd;
    let mut s = Real::zero(d);
    for k in 0..n {
        c = &b - &c;
        s = &s + &(&c * &a(k, d));
        // b *= (k+n)(k-n) / ((k+1/2)(k+1))
        let num = Real::from_i64((k + n) as i64, d).mul_i64(k as i64 - n as i64);
        let den = Real::from_i64(2 * k as i64 + 1, d).mul_i64((k + 1) as i64).div_i64(2);
        b = &b * &(num / den);
    }
    (s / dd).with_digits(digits)
}

/// zeta(s) for rational s != 1. Exact values are used at integers <= 0,
/// the alternating series covers s > 0, and the functional equation maps
/// negative arguments to positive ones.
pub fn zeta_q(s: &BigRational, digits: u32) -> Real {
    assert!(s != &ratio_int(1), "zeta pole at s = 1");
    if s.is_integer() {
        let n = s.numer();
        if !n.is_positive() {
            return Real::from_ratio(&zeta_neg_int_exact(&-n.clone()), digits);
        }
        if (n % BigInt::from(2)).is_zero() {
            // exact even value: (-1)^(k+1) B_2k (2 pi)^(2k) / (2 (2k)!)
            let k = (n / BigInt::from(2)).to_u64().unwrap();
            return zeta_even_exact(k, digits);
        }
    }
    if s.is_positive() {
        zeta_eta(s, digits)
    } else {
        zeta_via_functional_equation(s, digits)
    }
}

/// zeta(-m) for integer m >= 0, exact rational.
pub fn zeta_neg_int_exact(m: &BigInt) -> BigRational {
    assert!(!m.is_negative());
    if m.is_zero() {
        return ratio(-1, 2);
    }
    let m = m.to_u64().unwrap();
    if m % 2 == 0 {
        return BigRational::zero();
    }
    -bernoulli_number(m + 1) / BigRational::from_integer((m + 1).into())
}

fn zeta_even_exact(k: u64, digits: u32) -> Real {
    let d = digits + 5;
    let b = bernoulli_number(2 * k);
    let fact = super::bernoulli::factorial(2 * k);
    let sign = if k % 2 == 0 { -1 } else { 1 };
    let q = b * BigRational::from_integer(sign.into())
        / (BigRational::from_integer(fact) * ratio_int(2));
    let tp = Real::pi(d).mul_i64(2).powi(2 * k as i64);
    (Real::from_ratio(&q, d) * tp).with_digits(digits)
}

/// eta-series route, valid for rational s > 0, s != 1.
fn zeta_eta(s: &BigRational, digits: u32) -> Real {
    let d = digits + 10;
    let sf = Real::from_ratio(s, d);
    let eta = alternating_sum(
        |k, dd| {
            let kk = Real::from_u64(k as u64 + 1, dd);
            kk.pow(&sf.with_digits(dd).neg())
        },
        digits + 5,
    );
    // zeta = eta / (1 - 2^(1-s))
    let one = Real::from_i64(1, d);
    let e = &one - &sf;
    let two_pow = Real::from_i64(2, d).pow(&e);
    (eta / (&one - &two_pow)).with_digits(digits)
}

/// zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s), evaluated
/// without exact-value shortcuts so the reflection itself can be tested.
pub fn zeta_via_functional_equation(s: &BigRational, digits: u32) -> Real {
    let d = digits + 10;
    let one_minus = ratio_int(1) - s;
    let z = if one_minus.is_integer() && one_minus.numer() > &BigInt::from(1) {
        // mapped argument is an integer >= 2
        let n = one_minus.numer().to_u64().unwrap();
        if n % 2 == 0 {
            zeta_even_exact(n / 2, d)
        } else {
            zeta_eta(&one_minus, d)
        }
    } else {
        zeta_eta(&one_minus, d)
    };
    let sin_half = sin_pi_ratio(&(s / ratio_int(2)), d);
    if sin_half.is_zero() {
        return Real::zero(digits);
    }
    let g = gamma_q(&one_minus, d);
    let sp = Real::from_ratio(s, d);
    let two_s = Real::from_i64(2, d).pow(&sp);
    let pi_sm1 = Real::pi(d).pow(&(&sp - &Real::from_i64(1, d)));
    (two_s * pi_sm1 * sin_half * g * z).with_digits(digits)
}

/// Euler-Mascheroni constant by Euler-Maclaurin on the harmonic sum.
pub fn euler_gamma(digits: u32) -> Real {
    let d = digits + 10;
    let n = (((d as f64) + 5.0) * std::f64::consts::LN_10 / (2.0 * std::f64::consts::PI))
        .ceil() as u64
        + 4;
    let mut h = Real::zero(d);
    for k in 1..=n {
        h = &h + &Real::from_u64(k, d).recip();
    }
    let nn = Real::from_u64(n, d);
    let mut acc = &h - &nn.ln() - nn.recip().div_i64(2);
    // + sum_j B_2j / (2j n^2j), truncated at its smallest term
    let n2 = (&nn * &nn).recip();
    let mut npow = n2.clone();
    let mut last_mag = i64::MAX;
    let mut j = 1u64;
    loop {
        let q = bernoulli_number(2 * j) / BigRational::from_integer((2 * j).into());
        let term = Real::from_ratio(&q, d) * &npow;
        let mag = term.exponent2();
        if mag >= last_mag || term.is_zero() {
            break; // asymptotic tail starts growing
        }
        acc = &acc + &term;
        if mag < acc.exponent2() - (d as i64 * 10 / 3) - 8 {
            break;
        }
        last_mag = mag;
        npow = &npow * &n2;
        j += 1;
    }
    acc.with_digits(digits)
}

/// log of the Glaisher-Kinkelin constant via Euler-Maclaurin applied to
/// sum k log k (the hyperfactorial route).
pub fn ln_glaisher_hyperfactorial(digits: u32) -> Real {
    let d = digits + 12;
    let n = (((d as f64) + 5.0) * std::f64::consts::LN_10 / (2.0 * std::f64::consts::PI))
        .ceil() as u64
        + 4;
    let mut s = Real::zero(d);
    for k in 2..=n {
        let kk = Real::from_u64(k, d);
        s = &s + &(&kk * &kk.ln());
    }
    let nn = Real::from_u64(n, d);
    let ln_n = nn.ln();
    let n2 = &nn * &nn;
    // S - (n^2/2 + n/2 + 1/12) ln n + n^2/4
    let mut acc = &s - &((&n2.div_i64(2) + &nn.div_i64(2) + &Real::from_ratio(&ratio(1, 12), d)) * &ln_n)
        + n2.div_i64(4);
    // + sum_{j>=2} B_2j / (2j (2j-1) (2j-2) n^(2j-2))
    let inv_n2 = n2.recip();
    let mut npow = inv_n2.clone();
    let mut last_mag = i64::MAX;
    let mut j = 2u64;
    loop {
        let denom = BigRational::from_integer(((2 * j) * (2 * j - 1) * (2 * j - 2)).into());
        let q = bernoulli_number(2 * j) / denom;
        let term = Real::from_ratio(&q, d) * &npow;
        let mag = term.exponent2();
        if mag >= last_mag || term.is_zero() {
            break;
        }
        acc = &acc + &term;
        if mag < acc.exponent2() - (d as i64 * 10 / 3) - 8 {
            break;
        }
        last_mag = mag;
        npow = &npow * &inv_n2;
        j += 1;
    }
    acc.with_digits(digits)
}

/// log A again, now from gamma and zeta'(2):
/// ln A = (gamma + ln 2 pi)/12 - zeta'(2)/(2 pi^2).
pub fn ln_glaisher_via_zeta_prime2(digits: u32) -> Real {
    let d = digits + 10;
    let g = euler_gamma(d);
    let pi = Real::pi(d);
    let ln2pi = pi.mul_i64(2).ln();
    let zp2 = zeta_prime_2(d);
    (((g + ln2pi).div_i64(12)) - (&zp2 / &(&pi * &pi).mul_i64(2))).with_digits(digits)
}

/// zeta'(2) from the alternating series for eta'(2):
/// zeta'(2) = 2 eta'(2) - ln 2 * zeta(2).
pub fn zeta_prime_2(digits: u32) -> Real {
    let d = digits + 10;
    let eta_prime = alternating_sum(
        |k, dd| {
            let kk = Real::from_u64(k as u64 + 1, dd);
            if k == 0 {
                return Real::zero(dd);
            }
            let k2 = (&kk * &kk).recip();
            &kk.ln() * &k2
        },
        d,
    )
    .neg();
    let z2 = zeta_even_exact(1, d);
    let ln2 = Real::from_i64(2, d).ln();
    (eta_prime.mul_i64(2) - ln2 * z2).with_digits(digits)
}

/// zeta'(-1) = 1/12 - ln A. The two Glaisher routes must agree; the
/// hyperfactorial route supplies the returned value.
pub fn zeta_prime_minus1(digits: u32) -> Real {
    let d = digits + 5;
    let a1 = ln_glaisher_hyperfactorial(d);
    let a2 = ln_glaisher_via_zeta_prime2(d);
    assert!(
        agreement_digits(&a1, &a2) >= digits as f64,
        "Glaisher routes disagree: {a1:?} vs {a2:?}"
    );
    (Real::from_ratio(&ratio(1, 12), d) - a1).with_digits(digits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta2_exact_vs_eta() {
        let exact = zeta_q(&ratio_int(2), 50);
        let eta = zeta_eta(&ratio_int(2), 50);
        assert!(agreement_digits(&exact, &eta) > 47.0);
        let pi2_6 = (&Real::pi(50) * &Real::pi(50)).div_i64(6);
        assert!(agreement_digits(&exact, &pi2_6) > 48.0);
    }

    #[test]
    fn zeta_half_matches_reference() {
        let z = zeta_q(&ratio(1, 2), 50);
        let re = Real::parse("-1.4603545088095868128894991525152980124672293310126", 55);
        assert!(agreement_digits(&z, &re) > 48.0);
    }

    #[test]
    fn zeta_three_halves_matches_reference() {
        let z = zeta_q(&ratio(3, 2), 50);
        let re = Real::parse("2.6123753486854883433485675679240716305708006524001", 55);
        assert!(agreement_digits(&z, &re) > 48.0);
    }

    #[test]
    fn negative_odd_exact() {
        assert_eq!(zeta_neg_int_exact(&BigInt::from(1)), ratio(-1, 12));
        assert_eq!(zeta_neg_int_exact(&BigInt::from(3)), ratio(1, 120));
        assert_eq!(zeta_neg_int_exact(&BigInt::from(2)), ratio_int(0));
    }

    #[test]
    fn functional_equation_round_trip() {
        // reflected values at s = -1, -2, -3 against exact rationals
        for (s, want) in [(-1i64, ratio(-1, 12)), (-2, ratio_int(0)), (-3, ratio(1, 120))] {
            let via = zeta_via_functional_equation(&ratio_int(s), 45);
            let exact = Real::from_ratio(&want, 45);
            let diff = (&via - &exact).abs();
            assert!(
                diff.is_zero() || diff.exponent2() < -140,
                "s={s}: {via:?} vs {exact:?}"
            );
        }
    }

    #[test]
    fn gamma_constant_value() {
        let g = euler_gamma(50);
        let re = Real::parse("0.57721566490153286060651209008240243104215933593992", 55);
        assert!(agreement_digits(&g, &re) > 48.0);
    }

    #[test]
    fn zeta_prime_minus1_value() {
        let z = zeta_prime_minus1(40);
        let re = Real::parse("-0.16542114370045092921391966024278064276404", 45);
        assert!(agreement_digits(&z, &re) > 38.0);
    }
}
