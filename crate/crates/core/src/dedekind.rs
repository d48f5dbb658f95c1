//! Dedekind sums and the root-of-unity weight sums built from them,
//! all exact rational until the final trig evaluation.

use crate::hp::real::{ratio_int, Complex, Real};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A point h/k on the unit circle, always in lowest terms; h = 0 only
/// for the principal point with k = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SingularPoint {
    pub h: u32,
    pub k: u32,
}

impl SingularPoint {
    pub fn new(h: u32, k: u32) -> Self {
        assert!(k >= 1 && h < k || (h == 0 && k == 1), "need 0 <= h < k");
        if h == 0 {
            assert!(k == 1, "h = 0 is only the principal point");
        } else {
            assert!(h.gcd(&k) == 1, "h and k must be coprime");
        }
        SingularPoint { h, k }
    }

    pub fn principal() -> Self {
        SingularPoint { h: 0, k: 1 }
    }
}

/// Sawtooth ((x)): x - floor(x) - 1/2 off the integers, 0 on them.
pub fn sawtooth(x: &BigRational) -> BigRational {
    if x.is_integer() {
        return BigRational::zero();
    }
    x - x.floor() - BigRational::new(BigInt::one(), BigInt::from(2))
}

/// Dedekind sum s(h,k) = sum_{j=1}^{k-1} ((j/k)) ((h j / k)), exact.
pub fn dedekind_sum(h: i64, k: i64) -> BigRational {
    assert!(k >= 1, "modulus must be positive");
    let mut s = BigRational::zero();
    for j in 1..k {
        let a = ratio(j, k);
        let b = ratio(h * j, k);
        s += sawtooth(&a) * sawtooth(&b);
    }
    s
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Same sum by reciprocity descent, O(log k) rational ops; requires
/// gcd(h,k) = 1 (the reciprocity law does). Must agree exactly with
/// the direct sum on coprime pairs; used as a cross-check and for
/// large k.
pub fn dedekind_sum_fast(h: i64, k: i64) -> BigRational {
    assert!(k >= 1, "modulus must be positive");
    let h = h.rem_euclid(k);
    if h == 0 {
        return BigRational::zero();
    }
    assert!(h.gcd(&k) == 1, "reciprocity descent needs gcd(h,k) = 1");
    // s(h,k) = -1/4 + (h/k + k/h + 1/(hk))/12 - s(k mod h, h)
    ratio(-1, 4) + (ratio(h, k) + ratio(k, h) + ratio(1, h * k)) / ratio_int(12)
        - descend(k % h, h)
}

// the inner recursion keeps gcd = 1 automatically and may hit h = 0
// only at k = 1, where s = 0
fn descend(h: i64, k: i64) -> BigRational {
    if h == 0 {
        return BigRational::zero();
    }
    ratio(-1, 4) + (ratio(h, k) + ratio(k, h) + ratio(1, h * k)) / ratio_int(12) - descend(k % h, h)
}

/// T(h,k) = 2 s(h,k) - s(2h,k), the phase exponent (in units of pi)
/// attached to the overpartition-style weight for odd k.
pub fn t_sum(h: i64, k: i64) -> BigRational {
    assert!(k % 2 == 1, "t_sum is defined for odd modulus");
    dedekind_sum(h, k) * ratio_int(2) - dedekind_sum(2 * h % k, k)
}

/// The residue h' with h h' = -1 (mod m); this sign convention is the
/// one the transformation formulas want.
pub fn inverse_mod(a: i64, m: i64) -> i64 {
    assert!(m >= 1);
    if m == 1 {
        return 0;
    }
    let e = BigInt::from(a.rem_euclid(m)).extended_gcd(&BigInt::from(m));
    assert!(e.gcd.is_one(), "{a} is not invertible mod {m}");
    let x: BigInt = (-e.x).mod_floor(&BigInt::from(m));
    i64::try_from(x).unwrap()
}

/// Residues h in [1, k) coprime to k; empty for k = 1, where the
/// principal point is handled as h = 0 by every caller.
pub fn coprime_residues(k: u32) -> Vec<u32> {
    (1..k).filter(|h| h.gcd(&k) == 1).collect()
}

/// A~(k,n) = sum over h coprime to k of exp(pi i T(h,k) - 2 pi i n h / k),
/// evaluated with exact phase reduction; the imaginary part must cancel
/// and is asserted tiny, the real part is returned.
pub fn a_tilde(k: u32, n: u64, digits: u32) -> Real {
    assert!(k % 2 == 1, "weight sum needs odd k");
    if k == 1 {
        return Real::from_i64(1, digits);
    }
    let d = digits + 8;
    let mut acc = Complex::zero(d);
    for h in coprime_residues(k) {
        // phase/pi = T(h,k) - 2 n h / k
        let q = t_sum(h as i64, k as i64)
            - ratio(2 * (n % (k as u64)) as i64 * h as i64, k as i64);
        acc = acc.add(&Complex::unit_pi_ratio(&q, d));
    }
    assert!(
        acc.im.is_zero() || acc.im.abs().exponent2() < -((d as f64 * 3.0) as i64),
        "imaginary part failed to cancel in weight sum"
    );
    acc.re.with_digits(digits)
}

/// Exact phase exponent (in units of pi) of the eta-type multiplier at
/// h/k for the ordinary partition product: exp(pi i s(h,k) - 2 pi i n h/k)
/// is assembled by callers from this plus the n-dependent part.
pub fn eta_phase(h: i64, k: i64) -> BigRational {
    dedekind_sum(h, k)
}
