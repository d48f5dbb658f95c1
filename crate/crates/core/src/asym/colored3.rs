//! Approximation terms for triple-colored partitions with the
//! 3- and 9-fold constraint product.

use crate::asym::transfer::transfer_single;
use crate::hp::real::{cos_pi_ratio, ratio, ratio_int, Real};
use num_rational::BigRational;

/// Whether the k = 2 and k = 7 terms follow the resolved two-channel /
/// corrected-phase forms, or reproduce the reference table's variants
/// (single channel at k = 2, shifted middle phase at k = 7).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Colored3Variant {
    Resolved,
    Reference,
}

fn xi_of(n: u64) -> BigRational {
    ratio_int(n as i64) + ratio(7, 8)
}

/// (c/xi)^(3/4) I_(-3/2)(2 sqrt(c xi)), the building block of every term.
fn bes32(c: &Real, xi: &Real, d: u32) -> Real {
    transfer_single(&ratio(1, 2), c, xi, d)
}

/// Phi_k(n) for k = 1..7; all terms share xi = n + 7/8.
pub fn colored3_phi(n: u64, k: u32, digits: u32) -> Real {
    colored3_phi_variant(n, k, Colored3Variant::Resolved, digits)
}

pub fn colored3_phi_variant(
    n: u64,
    k: u32,
    variant: Colored3Variant,
    digits: u32,
) -> Real {
    assert!((1..=7).contains(&k), "terms are tabulated for k = 1..7 only");
    let d = digits + 10;
    let xi = Real::from_ratio(&xi_of(n), d);
    let pi = Real::pi(d);
    let pi2 = &pi * &pi;
    let neg = |v: Real, odd: bool| if odd { v.neg() } else { v };
    let v = match k {
        1 => {
            // (1/sqrt(486 pi)) [bes32(pi^2/2) - 3 bes32(pi^2/18)]
            let pref = pi.mul_i64(486).sqrt().recip();
            let a = bes32(&pi2.div_i64(2), &xi, d);
            let b = bes32(&pi2.div_i64(18), &xi, d);
            &pref * &(&a - &b.mul_i64(3))
        }
        2 => {
            // (-1)^n/sqrt(243 pi) [bes32(pi^2/8) + 3 bes32(pi^2/72)];
            // the second channel is dropped in the reference table
            let pref = pi.mul_i64(243).sqrt().recip();
            let a = bes32(&pi2.div_i64(8), &xi, d);
            let s = match variant {
                Colored3Variant::Resolved => {
                    &a + &bes32(&pi2.div_i64(72), &xi, d).mul_i64(3)
                }
                Colored3Variant::Reference => a,
            };
            neg(&pref * &s, n % 2 == 1)
        }
        3 => {
            let pref = pi.mul_i64(18).sqrt().recip();
            let q = ratio(2 * (n % 3) as i64, 3) - ratio(1, 6);
            let w = cos_pi_ratio(&q, d).mul_i64(2);
            &(&pref * &w) * &bes32(&pi2.div_i64(18), &xi, d)
        }
        4 => {
            // sqrt(4/(486 pi)), consistent with the k = 5 prefactor
            let pref = (&Real::from_i64(4, d) / &pi.mul_i64(486)).sqrt();
            let q = ratio(2 * (n % 4) as i64, 4) + ratio(1, 8);
            let w = cos_pi_ratio(&q, d).mul_i64(2);
            &(&pref * &w) * &bes32(&pi2.div_i64(32), &xi, d)
        }
        5 => {
            let pref = (&Real::from_i64(5, d) / &pi.mul_i64(486)).sqrt();
            let w = two_cos_sum(&[(2, 5, ratio(-6, 5)), (4, 5, ratio(-1, 5))], n, d);
            &(&pref * &w) * &bes32(&pi2.div_i64(50), &xi, d)
        }
        6 => {
            let pref = pi.mul_i64(9).sqrt().recip();
            let q = ratio(2 * (n % 6) as i64, 6) - ratio(5, 6);
            let w = cos_pi_ratio(&q, d).mul_i64(2);
            &(&pref * &w) * &bes32(&pi2.div_i64(72), &xi, d)
        }
        7 => {
            let pref = (&Real::from_i64(7, d) / &pi.mul_i64(486)).sqrt();
            let middle = match variant {
                Colored3Variant::Resolved => ratio(5, 14),
                Colored3Variant::Reference => ratio(-1, 14),
            };
            let w = two_cos_sum(
                &[(2, 7, ratio(-11, 14)), (4, 7, middle), (6, 7, ratio(-13, 14))],
                n,
                d,
            );
            &(&pref * &w) * &bes32(&pi2.div_i64(98), &xi, d)
        }
        _ => unreachable!(),
    };
    v.with_digits(digits)
}

/// 2 sum_i cos(pi (num_i n / den_i + off_i)), phases reduced exactly.
fn two_cos_sum(parts: &[(i64, i64, BigRational)], n: u64, d: u32) -> Real {
    let mut acc = Real::zero(d);
    for (num, den, off) in parts {
        let q = ratio(num * (n % (2 * *den as u64)) as i64, *den) + off.clone();
        acc = &acc + &cos_pi_ratio(&q, d);
    }
    acc.mul_i64(2)
}
