//! Single-Bessel approximation terms for overpartition counts.

use crate::asym::transfer::transfer_single;
use crate::dedekind::a_tilde;
use crate::hp::real::{ratio, Real};

/// Phi_k(n) = (1/2) sqrt(k/pi) (a/(k^2 n))^(3/4) A~(k,n) I_(-3/2)(2 sqrt(a n)/k)
/// with a = pi^2/4; only odd k are singular for this product.
pub fn basic_phi(n: u64, k: u32, digits: u32) -> Real {
    assert!(k % 2 == 1, "only odd k contribute");
    let d = digits + 10;
    let pi = Real::pi(d);
    let a = (&pi * &pi).div_i64(4);
    let xi = Real::from_u64(n, d);
    let weight = a_tilde(k, n, d);
    if weight.is_zero() {
        return Real::zero(digits);
    }
    let c = a.div_i64((k * k) as i64);
    let core = transfer_single(&ratio(1, 2), &c, &xi, d);
    let pref = (&Real::from_i64(k as i64, d) / &pi).sqrt().div_i64(2);
    (&(&pref * &weight) * &core).with_digits(digits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vanishing_moduli() {
        // A~(3,1000) = 2 cos(2000 pi/3 - pi/6) = 0 exactly
        let v = basic_phi(1000, 3, 30);
        assert!(v.is_zero());
    }

    #[test]
    #[should_panic]
    fn even_k_rejected() {
        basic_phi(10, 2, 30);
    }
}
