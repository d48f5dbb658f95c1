//! Transfer rules mapping t^a exp(c/t + ...) at the singular point to
//! Bessel/Gamma sums in the shifted argument xi.

use crate::hp::bessel::bessel_i;
use crate::hp::gamma::rgamma_q;
use crate::hp::real::{is_nonpositive_int, ratio, ratio_int, Real};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::collections::HashMap;

/// Image of t^a exp(c/t) under t^(-s) -> xi^(s-1)/Gamma(s):
/// (c/xi)^((1+a)/2) I_(-1-a)(2 sqrt(c xi)).
pub fn transfer_single(a: &BigRational, c: &Real, xi: &Real, digits: u32) -> Real {
    assert!(c.is_positive() && xi.is_positive(), "need c > 0, xi > 0");
    let d = digits + 8;
    let c = c.with_digits(d);
    let xi = xi.with_digits(d);
    let expo = (a.clone() + ratio_int(1)) * ratio(1, 2);
    let pw = (&c / &xi).pow_ratio(&expo, d);
    let z = (&c * &xi).sqrt().mul_i64(2);
    let nu = -(a.clone() + ratio_int(1));
    (&pw * &bessel_i(&nu, &z, d)).with_digits(digits)
}

/// The same image summed term by term as sum_j c^j xi^(j-a-1)/(j! Gamma(j-a));
/// the identity `transfer_single` must reproduce. Adaptive in j, capped.
pub fn transfer_gamma_sum(a: &BigRational, c: &Real, xi: &Real, digits: u32) -> Real {
    assert!(c.is_positive() && xi.is_positive());
    let d = digits + 10;
    let c = c.with_digits(d);
    let xi = xi.with_digits(d);
    let mut pw = xi.pow_ratio(&(-(a.clone() + ratio_int(1))), d); // xi^(j-a-1) at j=0
    let mut fac = Real::from_i64(1, d); // c^j / j!
    let mut g = -a.clone(); // argument of Gamma at j=0
    let mut rg = rgamma_for(&g, d);
    let mut tot = Real::zero(d);
    let mut max_exp = i64::MIN;
    let mut streak = 0u32;
    for j in 0..100_000u32 {
        if j > 0 {
            fac = (&fac * &c).div_i64(j as i64);
            pw = &pw * &xi;
            // 1/Gamma(g+1) = (1/Gamma(g))/g, except across the pole chain
            if g.is_zero() || is_nonpositive_int(&g) {
                g += ratio_int(1);
                rg = rgamma_for(&g, d);
            } else {
                rg = &rg / &Real::from_ratio(&g, d);
                g += ratio_int(1);
            }
        }
        let term = &(&fac * &pw) * &rg;
        tot = &tot + &term;
        let te = term.exponent2();
        if te > max_exp {
            max_exp = te;
            streak = 0;
        } else {
            streak += 1;
        }
        if streak > 3 && te < max_exp - (d as f64 * 3.33) as i64 - 20 {
            break;
        }
    }
    tot.with_digits(digits)
}

fn rgamma_for(g: &BigRational, d: u32) -> Real {
    if is_nonpositive_int(g) {
        Real::zero(d)
    } else {
        rgamma_q(g, d)
    }
}

/// Truncated double transfer sum
///   sum_{j<=J, k<=K} a^j b^k xi^(p j + q k - w - 1) / (j! k! Gamma(p j + q k - w)),
/// entirely real; poles of Gamma drop terms through the reciprocal-zero
/// convention. Used whenever a channel has b < 0 (no real Bessel form).
#[allow(clippy::too_many_arguments)]
pub fn transfer_double(
    w: &BigRational,
    p: &BigRational,
    a: &Real,
    q: &BigRational,
    b: &Real,
    xi: &Real,
    j_max: u32,
    k_max: u32,
    digits: u32,
) -> Real {
    assert!(xi.is_positive(), "need xi > 0");
    assert!(p.is_positive() && q.is_positive());
    let d = digits + 10;
    let a = a.with_digits(d);
    let b = b.with_digits(d);
    let xi = xi.with_digits(d);
    let xp = xi.pow_ratio(p, d);
    let xq = xi.pow_ratio(q, d);
    // per-term direct reciprocal-Gamma values, memoized on the exact
    // lattice argument; integer steps inside a row use the division
    // recurrence instead
    let p_is_int = p.is_integer();
    let mut memo: HashMap<BigRational, Real> = HashMap::new();
    let floor_gap = (d as f64 * 3.33) as i64 + 30;
    let mut global_max = i64::MIN;
    let mut tot = Real::zero(d);
    let mut bk = Real::from_i64(1, d); // b^k / k!
    let mut row_lead = xi.pow_ratio(&(-(w.clone()) - ratio_int(1)), d); // xi^(qk - w - 1) at j=0
    let mut dead_rows = 0u32;
    for k in 0..=k_max {
        if k > 0 {
            bk = (&bk * &b).div_i64(k as i64);
            row_lead = &row_lead * &xq;
        }
        let mut g = q.clone() * ratio_int(k as i64) - w.clone(); // Gamma argument at j=0
        let mut rg = memo_rgamma(&mut memo, &g, d);
        let mut aj = Real::from_i64(1, d); // a^j / j!
        let mut pw = row_lead.clone();
        let mut row_max = i64::MIN;
        let mut streak = 0u32;
        for j in 0..=j_max {
            if j > 0 {
                aj = (&aj * &a).div_i64(j as i64);
                pw = &pw * &xp;
                if p_is_int {
                    let steps = p.to_integer();
                    let mut num = Real::from_i64(1, d);
                    let mut singular = false;
                    let mut gg = g.clone();
                    for _ in 0..i64::try_from(steps.clone()).unwrap() {
                        if gg.is_zero() || is_nonpositive_int(&gg) {
                            singular = true;
                        }
                        num = &num * &Real::from_ratio(&gg, d);
                        gg += ratio_int(1);
                    }
                    g = gg;
                    if singular {
                        rg = memo_rgamma(&mut memo, &g, d);
                    } else {
                        rg = &rg / &num;
                    }
                } else {
                    g += p.clone();
                    rg = memo_rgamma(&mut memo, &g, d);
                }
            }
            if rg.is_zero() {
                continue;
            }
            let term = &(&(&bk * &aj) * &pw) * &rg;
            tot = &tot + &term;
            let te = term.exponent2();
            row_max = row_max.max(te);
            global_max = global_max.max(te);
            if te < row_max {
                streak += 1;
            } else {
                streak = 0;
            }
            if streak > 3 && te < global_max - floor_gap {
                break;
            }
        }
        if row_max < global_max - floor_gap {
            dead_rows += 1;
            if dead_rows >= 2 && k >= 3 {
                break;
            }
        } else {
            dead_rows = 0;
        }
        if b.is_zero() {
            break;
        }
    }
    tot.with_digits(digits)
}

fn memo_rgamma(memo: &mut HashMap<BigRational, Real>, g: &BigRational, d: u32) -> Real {
    if let Some(v) = memo.get(g) {
        return v.clone();
    }
    let v = rgamma_for(g, d);
    memo.insert(g.clone(), v.clone());
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hp::real::agreement_digits;

    #[test]
    fn bessel_form_equals_gamma_sum() {
        let d = 40;
        let a = ratio(1, 2);
        let c = Real::parse("1.6449", d);
        let xi = Real::from_i64(100, d);
        let lhs = transfer_single(&a, &c, &xi, d);
        let rhs = transfer_gamma_sum(&a, &c, &xi, d);
        assert!(agreement_digits(&lhs, &rhs) > d as f64 - 5.0);
    }

    #[test]
    fn degenerate_exponent_is_plain_bessel() {
        let d = 40;
        let a = ratio_int(-1);
        let c = Real::parse("2.5", d);
        let xi = Real::from_i64(30, d);
        let lhs = transfer_single(&a, &c, &xi, d);
        let z = (&c * &xi).sqrt().mul_i64(2);
        let rhs = bessel_i(&ratio_int(0), &z, d);
        assert!(agreement_digits(&lhs, &rhs) > d as f64 - 5.0);
    }

    #[test]
    fn monotone_in_xi() {
        let d = 30;
        let a = ratio(1, 2);
        let c = Real::parse("1.5", d);
        let mut prev = Real::zero(d);
        for xi in [10i64, 20, 40, 80] {
            let v = transfer_single(&a, &c, &Real::from_i64(xi, d), d);
            assert!(v.cmp_real(&prev) == std::cmp::Ordering::Greater);
            prev = v;
        }
    }

    #[test]
    fn double_sum_collapses_to_single() {
        // b = 0 keeps only the k = 0 row, which is the single-transfer
        // Gamma sum with w = -a_exponent
        let d = 40;
        let a_exp = ratio(1, 2);
        let c = Real::parse("1.25", d);
        let xi = Real::from_i64(50, d);
        let single = transfer_single(&a_exp, &c, &xi, d);
        let dbl = transfer_double(
            &a_exp,
            &ratio_int(1),
            &c,
            &ratio(1, 2),
            &Real::zero(d),
            &xi,
            10_000,
            5,
            d,
        );
        assert!(agreement_digits(&single, &dbl) > d as f64 - 5.0);
    }
}
