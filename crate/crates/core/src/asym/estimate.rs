//! Orchestration: assemble the per-modulus terms of a family into one
//! breakdown with total, rounding, and oracle comparison.

use crate::asym::basic::basic_phi;
use crate::asym::colored3::colored3_phi;
use crate::asym::concave::concave_q;
use crate::asym::nsp::{nsp_phi1, nsp_phi2, nsp_phi_k, nsp_xi};
use crate::asym::plane::{plane_phi1, plane_phi2, PlaneSecondVariant};
use crate::asym::prings::prings_phi;
use crate::families::Family;
use crate::hp::bernoulli::binomial;
use crate::hp::real::{agreement_digits, ratio_int, Real};
use crate::hp::zeta::zeta_neg_int_exact;
use crate::oracle::cached_table;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Signed;

#[derive(Clone, Debug)]
pub struct EstimateConfig {
    /// Largest modulus k (families with tabulated channels cap it).
    pub kmax: u32,
    /// Bessel-sum / correction-series depth where a family exposes one.
    pub j_terms: u32,
    /// Working decimal digits; None picks a magnitude-aware default.
    pub precision: Option<u32>,
    /// Recompute at +20 digits and report the agreement.
    pub double_run: bool,
}

impl EstimateConfig {
    pub fn family_default(family: &Family) -> Self {
        let kmax = match family {
            Family::Nsp { .. } => 16,
            Family::Basic => 13,
            Family::Colored3 => 7,
            Family::PlaneStrict | Family::Prings => 2,
            Family::Concave => 5,
        };
        EstimateConfig {
            kmax,
            j_terms: 16,
            precision: None,
            double_run: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PhiBreakdown {
    pub family: Family,
    pub n: u64,
    /// The family's shifted argument (for split-shift families, the
    /// principal-channel one).
    pub xi: Real,
    pub terms: Vec<(u32, Real)>,
    pub total: Real,
    pub rounded: BigInt,
    pub exact: Option<BigUint>,
    pub error: Option<Real>,
    pub digits: u32,
    /// Agreement digits between the two runs when double_run was set.
    pub agreement: Option<f64>,
}

/// Decimal digits that keep absolute error well under 1 for the
/// family's leading exponential at argument n.
pub fn default_digits(family: &Family, n: u64) -> u32 {
    let nf = n as f64;
    let ln10 = std::f64::consts::LN_10;
    let pi = std::f64::consts::PI;
    let zeta3: f64 = 1.2020569031595943;
    let lead = match family {
        Family::Nsp { .. } => 2.0 * (pi * pi / 6.0 * nf).sqrt(),
        Family::Basic => pi * nf.sqrt(),
        Family::Colored3 => 2.0 * (pi * pi / 2.0 * nf).sqrt(),
        Family::PlaneStrict => {
            1.5 * zeta3.cbrt() * nf.powf(2.0 / 3.0) + 0.45 * nf.cbrt()
        }
        Family::Prings => {
            let a = (pi * pi / 6.0) * (pi * pi / 6.0);
            2.0 * (a * nf).sqrt() + 3.4 * (nf / a).powf(0.25)
        }
        Family::Concave => 4.1673 * nf.cbrt(),
    };
    let d = 30.0 + lead / ln10;
    (d.ceil() as u32).clamp(30, 20_000)
}

const EXACT_ATTACH_LIMIT: u64 = 2500;

/// All terms up to config.kmax, totalled in ascending k.
pub fn estimate(family: &Family, n: u64, config: &EstimateConfig) -> PhiBreakdown {
    assert!(config.kmax >= 1 && config.j_terms >= 1);
    let digits = config.precision.unwrap_or_else(|| default_digits(family, n));
    let (terms, xi) = compute_terms(family, n, config, digits);
    let total = sum_terms(&terms, digits);
    let agreement = if config.double_run {
        let hi = digits + 20;
        let (terms_hi, _) = compute_terms(family, n, config, hi);
        Some(agreement_digits(&total, &sum_terms(&terms_hi, hi)))
    } else {
        None
    };
    let rounded = total.round_to_bigint();
    let exact = if n <= EXACT_ATTACH_LIMIT {
        Some(cached_table(family, n).get(n).clone())
    } else {
        None
    };
    let error = exact.as_ref().map(|e| {
        &total - &Real::from_bigint(&BigInt::from(e.clone()), digits)
    });
    PhiBreakdown {
        family: *family,
        n,
        xi,
        terms,
        total,
        rounded,
        exact,
        error,
        digits,
        agreement,
    }
}

fn sum_terms(terms: &[(u32, Real)], digits: u32) -> Real {
    let mut total = Real::zero(digits);
    for (_, v) in terms {
        total = &total + v;
    }
    total
}

fn compute_terms(
    family: &Family,
    n: u64,
    config: &EstimateConfig,
    digits: u32,
) -> (Vec<(u32, Real)>, Real) {
    let j = config.j_terms;
    let mut terms = Vec::new();
    let xi = match family {
        Family::Nsp { r } => {
            for k in 1..=config.kmax {
                let v = match k {
                    1 => nsp_phi1(*r, n, j, digits),
                    2 if r % 2 == 0 => nsp_phi2(*r, n, j, digits),
                    _ => nsp_phi_k(*r, n, k, j, digits),
                };
                terms.push((k, v));
            }
            Real::from_ratio(&nsp_xi(*r, n, 1), digits)
        }
        Family::Basic => {
            let mut k = 1;
            while k <= config.kmax {
                terms.push((k, basic_phi(n, k, digits)));
                k += 2;
            }
            Real::from_u64(n, digits)
        }
        Family::Colored3 => {
            for k in 1..=config.kmax.min(7) {
                terms.push((k, colored3_phi(n, k, digits)));
            }
            Real::from_ratio(&(ratio_int(n as i64) + crate::hp::real::ratio(7, 8)), digits)
        }
        Family::PlaneStrict => {
            // tabulated correction depths: 8 principal, 4 alternating
            terms.push((1, plane_phi1(n, 8, 600, digits)));
            if config.kmax >= 2 {
                terms.push((
                    2,
                    plane_phi2(n, 4, 600, PlaneSecondVariant::Resolved, digits),
                ));
            }
            Real::from_ratio(&(ratio_int(n as i64) + crate::hp::real::ratio(1, 48)), digits)
        }
        Family::Prings => {
            let k_terms = config.j_terms.max(40);
            for which in 1..=config.kmax.min(2) {
                terms.push((which, prings_phi(n, which, k_terms, digits)));
            }
            Real::from_u64(n, digits)
        }
        Family::Concave => {
            for k in 0..config.kmax {
                terms.push((k, concave_q(n, k, 600, digits)));
            }
            Real::from_u64(n, digits)
        }
    };
    (terms, xi)
}

/// Exact rational residual of the binomial zeta identity
/// sum_{j=0}^k C(k,j) zeta(j-2k) = (-1)^k / (2 (2k+1) C(2k,k)), k >= 1.
/// (k = 0 fails as stated: zeta(0) = -1/2 against +1/2.)
pub fn petersson_residual_exact(k: u32) -> BigRational {
    assert!(k >= 1);
    let mut lhs = BigRational::from_integer(BigInt::from(0));
    for j in 0..=k {
        // zeta(j - 2k) with j - 2k <= -k < 0
        let m = BigInt::from(2 * k as i64 - j as i64);
        lhs += BigRational::from_integer(binomial(k as u64, j as u64))
            * zeta_neg_int_exact(&m);
    }
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let rhs = BigRational::new(
        BigInt::from(sign),
        BigInt::from(2 * (2 * k as i64 + 1)) * binomial(2 * k as u64, k as u64),
    );
    lhs - rhs
}

pub fn petersson_check(k: u32, digits: u32) -> Real {
    let r = petersson_residual_exact(k);
    Real::from_ratio(&r.abs(), digits)
}
