//! Truncated power-series arithmetic, the expansion-coefficient
//! generators for the singular expansions, and a direct evaluator of
//! log f at any root-of-unity point, used as the oracle that every
//! closed expansion is tested against.

use crate::asym::prings::prings_channel;
use crate::dedekind::dedekind_sum;
use crate::families::Family;
use crate::hp::bernoulli::{bernoulli_number, bernoulli_poly, factorial};
use crate::hp::real::{ratio, ratio_int, Complex, Real};
use crate::hp::zeta::{zeta_neg_int_exact, zeta_prime_minus1, zeta_q};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grading {
    One,
    Half,
}

impl Grading {
    /// Exponent of t carried by slot i.
    pub fn power(&self, i: usize) -> BigRational {
        match self {
            Grading::One => ratio_int(i as i64),
            Grading::Half => ratio(i as i64, 2),
        }
    }
}

/// Coefficient ring abstraction so one series engine serves exact
/// rationals and floating coefficients alike.
pub trait SeriesCoeff: Clone {
    fn se_zero(digits: u32) -> Self;
    fn se_one(digits: u32) -> Self;
    fn se_add(&self, o: &Self) -> Self;
    fn se_sub(&self, o: &Self) -> Self;
    fn se_mul(&self, o: &Self) -> Self;
    fn se_mul_int(&self, k: i64) -> Self;
    fn se_div_int(&self, k: i64) -> Self;
    fn se_is_zero(&self) -> bool;
}

impl SeriesCoeff for BigRational {
    fn se_zero(_d: u32) -> Self {
        BigRational::zero()
    }
    fn se_one(_d: u32) -> Self {
        BigRational::one()
    }
    fn se_add(&self, o: &Self) -> Self {
        self + o
    }
    fn se_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn se_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn se_mul_int(&self, k: i64) -> Self {
        self * ratio_int(k)
    }
    fn se_div_int(&self, k: i64) -> Self {
        self / ratio_int(k)
    }
    fn se_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl SeriesCoeff for Real {
    fn se_zero(d: u32) -> Self {
        Real::zero(d)
    }
    fn se_one(d: u32) -> Self {
        Real::from_i64(1, d)
    }
    fn se_add(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn se_sub(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn se_mul(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn se_mul_int(&self, k: i64) -> Self {
        self.mul_i64(k)
    }
    fn se_div_int(&self, k: i64) -> Self {
        self.div_i64(k)
    }
    fn se_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl SeriesCoeff for Complex {
    fn se_zero(d: u32) -> Self {
        Complex::zero(d)
    }
    fn se_one(d: u32) -> Self {
        Complex::from_real(Real::from_i64(1, d))
    }
    fn se_add(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn se_sub(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn se_mul(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn se_mul_int(&self, k: i64) -> Self {
        let d = self.re.digits();
        self.scale(&Real::from_i64(k, d))
    }
    fn se_div_int(&self, k: i64) -> Self {
        let d = self.re.digits();
        Complex::new(self.re.div_i64(k), self.im.div_i64(k)).scale(&Real::from_i64(1, d))
    }
    fn se_is_zero(&self) -> bool {
        self.is_zero()
    }
}

/// Power series truncated at `order()` (exclusive); slot i carries
/// t^(i * step) where step is the grading.
#[derive(Clone, Debug)]
pub struct PowerSeries<T: SeriesCoeff> {
    pub grading: Grading,
    pub coeffs: Vec<T>,
    pub digits: u32,
}

impl<T: SeriesCoeff> PowerSeries<T> {
    pub fn new(grading: Grading, coeffs: Vec<T>, digits: u32) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant slot");
        PowerSeries {
            grading,
            coeffs,
            digits,
        }
    }

    pub fn zero(grading: Grading, order: usize, digits: u32) -> Self {
        PowerSeries::new(grading, vec![T::se_zero(digits); order], digits)
    }

    /// Truncation order, exclusive.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn get(&self, i: usize) -> T {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| T::se_zero(self.digits))
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.grading, o.grading, "grading mismatch");
        let n = self.order().min(o.order());
        let c = (0..n).map(|i| self.coeffs[i].se_add(&o.coeffs[i])).collect();
        PowerSeries::new(self.grading, c, self.digits.max(o.digits))
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.grading, o.grading, "grading mismatch");
        let n = self.order().min(o.order());
        let c = (0..n).map(|i| self.coeffs[i].se_sub(&o.coeffs[i])).collect();
        PowerSeries::new(self.grading, c, self.digits.max(o.digits))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.grading, o.grading, "grading mismatch");
        let n = self.order().min(o.order());
        let mut c = vec![T::se_zero(self.digits); n];
        for i in 0..n.min(self.order()) {
            if self.coeffs[i].se_is_zero() {
                continue;
            }
            for j in 0..(n - i).min(o.order()) {
                if o.coeffs[j].se_is_zero() {
                    continue;
                }
                c[i + j] = c[i + j].se_add(&self.coeffs[i].se_mul(&o.coeffs[j]));
            }
        }
        PowerSeries::new(self.grading, c, self.digits.max(o.digits))
    }

    pub fn scale(&self, s: &T) -> Self {
        let c = self.coeffs.iter().map(|x| x.se_mul(s)).collect();
        PowerSeries::new(self.grading, c, self.digits)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.truncate(order.max(1));
        PowerSeries::new(self.grading, c, self.digits)
    }

    /// exp of a series with zero constant term, via E' = s' E.
    pub fn exp(&self) -> Self {
        assert!(
            self.coeffs[0].se_is_zero(),
            "series_exp needs zero constant term"
        );
        let n = self.order();
        let mut e = Vec::with_capacity(n);
        e.push(T::se_one(self.digits));
        for i in 1..n {
            let mut acc = T::se_zero(self.digits);
            for k in 1..=i {
                if self.coeffs[k].se_is_zero() {
                    continue;
                }
                acc = acc.se_add(&self.coeffs[k].se_mul_int(k as i64).se_mul(&e[i - k]));
            }
            e.push(acc.se_div_int(i as i64));
        }
        PowerSeries::new(self.grading, e, self.digits)
    }

    /// log of a series with constant term one, inverse of `exp`.
    pub fn log(&self) -> Self {
        let n = self.order();
        let mut l = Vec::with_capacity(n);
        l.push(T::se_zero(self.digits));
        for i in 1..n {
            let mut acc = T::se_zero(self.digits);
            for k in 1..i {
                if l[k].se_is_zero() || self.coeffs[i - k].se_is_zero() {
                    continue;
                }
                acc = acc.se_add(&l[k].se_mul_int(k as i64).se_mul(&self.coeffs[i - k]));
            }
            l.push(self.coeffs[i].se_sub(&acc.se_div_int(i as i64)));
        }
        PowerSeries::new(self.grading, l, self.digits)
    }
}

impl PowerSeries<Complex> {
    /// Evaluate at a positive t; the half grading walks powers of sqrt t.
    pub fn eval(&self, t: &Real) -> Complex {
        let d = self.digits;
        let step = match self.grading {
            Grading::One => t.clone(),
            Grading::Half => t.sqrt(),
        };
        let mut pw = Real::from_i64(1, d);
        let mut acc = Complex::zero(d);
        for c in &self.coeffs {
            acc = acc.add(&c.scale(&pw));
            pw = &pw * &step;
        }
        acc
    }
}

impl PowerSeries<Real> {
    pub fn eval(&self, t: &Real) -> Real {
        let d = self.digits;
        let step = match self.grading {
            Grading::One => t.clone(),
            Grading::Half => t.sqrt(),
        };
        let mut pw = Real::from_i64(1, d);
        let mut acc = Real::zero(d);
        for c in &self.coeffs {
            acc = &acc + &(c * &pw);
            pw = &pw * &step;
        }
        acc
    }
}

pub fn rational_series_to_real(v: &[BigRational], grading: Grading, digits: u32) -> PowerSeries<Real> {
    let c = v.iter().map(|q| Real::from_ratio(q, digits)).collect();
    PowerSeries::new(grading, c, digits)
}

/// Exponent series sum_j B_2j B_{2j+1}(r) t^(2j) / (2j (2j+1)!), dense
/// in t with zero odd slots, up to t^(2 j_max).
pub fn nsp_phi1_exponent(r: u32, j_max: u32) -> Vec<BigRational> {
    let mut s = vec![BigRational::zero(); 2 * j_max as usize + 1];
    for j in 1..=j_max as u64 {
        let num = bernoulli_number(2 * j) * bernoulli_poly(2 * j + 1, &ratio_int(r as i64));
        let den = BigRational::from_integer(BigInt::from(2 * j)) *
            BigRational::from_integer(factorial(2 * j + 1));
        s[2 * j as usize] = num / den;
    }
    s
}

/// Correction coefficients c_{2j} for the principal route of the
/// no-small-parts family: exp of `nsp_phi1_exponent`, exact.
pub fn nsp_phi1_coeffs_exact(r: u32, j_max: u32) -> Vec<BigRational> {
    exp_exact(&nsp_phi1_exponent(r, j_max))
}

pub fn nsp_phi1_coeffs(r: u32, j_max: u32, digits: u32) -> PowerSeries<Real> {
    rational_series_to_real(&nsp_phi1_coeffs_exact(r, j_max), Grading::One, digits)
}

/// Exponent for the alternating route (even r):
/// 4^j B_2j [B_{2j+1}(r/2) + (4^j - 1) B_{2j+1}((r+1)/2)] / (2j (2j+1)!).
pub fn nsp_phi2_exponent(r: u32, j_max: u32) -> Vec<BigRational> {
    assert!(r % 2 == 0, "alternating route requires even r");
    let mut s = vec![BigRational::zero(); 2 * j_max as usize + 1];
    for j in 1..=j_max as u64 {
        let four_j = BigRational::from_integer(BigInt::from(4).pow(j as u32));
        let b1 = bernoulli_poly(2 * j + 1, &ratio(r as i64, 2));
        let b2 = bernoulli_poly(2 * j + 1, &ratio(r as i64 + 1, 2));
        let num = &four_j
            * bernoulli_number(2 * j)
            * (b1 + (&four_j - ratio_int(1)) * b2);
        let den = BigRational::from_integer(BigInt::from(2 * j))
            * BigRational::from_integer(factorial(2 * j + 1));
        s[2 * j as usize] = num / den;
    }
    s
}

pub fn nsp_phi2_coeffs_exact(r: u32, j_max: u32) -> Vec<BigRational> {
    exp_exact(&nsp_phi2_exponent(r, j_max))
}

pub fn nsp_phi2_coeffs(r: u32, j_max: u32, digits: u32) -> PowerSeries<Real> {
    rational_series_to_real(&nsp_phi2_coeffs_exact(r, j_max), Grading::One, digits)
}

fn exp_exact(s: &[BigRational]) -> Vec<BigRational> {
    let ps = PowerSeries::new(Grading::One, s.to_vec(), 0);
    ps.exp().coeffs
}

/// Taylor coefficients in t of prod_{j=1}^{rmax} (1 - w^j e^{-jt}),
/// w = exp(2 pi i h / k).
pub fn expand_finite_product(
    rmax: u32,
    h: u32,
    k: u32,
    j_max: u32,
    digits: u32,
) -> PowerSeries<Complex> {
    assert!(k >= 1 && h < k, "need 0 <= h < k");
    assert!(
        BigInt::from(h).gcd(&BigInt::from(k)).is_one() || (h == 0 && k == 1),
        "h and k must be coprime"
    );
    let d = digits + 8;
    let n = j_max as usize + 1;
    // the k roots of unity, indexed by residue
    let roots: Vec<Complex> = (0..k)
        .map(|res| Complex::unit_pi_ratio(&ratio(2 * res as i64, k as i64), d))
        .collect();
    let mut acc = PowerSeries::<Complex>::zero(Grading::One, n, d);
    acc.coeffs[0] = Complex::from_real(Real::from_i64(1, d));
    for j in 1..=rmax {
        let w = &roots[(j as u64 * h as u64 % k as u64) as usize];
        // factor = (1 - w) - w * sum_{m>=1} (-j)^m t^m / m!
        let mut fac = PowerSeries::<Complex>::zero(Grading::One, n, d);
        fac.coeffs[0] = Complex::from_real(Real::from_i64(1, d)).sub(w);
        let mut f = Real::from_i64(1, d);
        for m in 1..n {
            f = f.mul_i64(-(j as i64)).div_i64(m as i64);
            fac.coeffs[m] = w.scale(&f).neg();
        }
        acc = acc.mul(&fac);
    }
    PowerSeries::new(Grading::One, acc.coeffs, digits)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlaneVariant {
    Principal,
    Alternating,
}

/// Exponent series for the strict-plane corrections, exact rationals.
/// Principal slot 2k:  zeta(1-2k) zeta(-1-2k) / (2 (2k)!).
/// Alternating slot 2k: (5 4^k - 2 16^k - 1) times the same core, the
/// residue ladder recomputed from the pole structure rather than copied
/// from any printed table.
pub fn plane_correction_exponent(variant: PlaneVariant, k_max: u32) -> Vec<BigRational> {
    let mut s = vec![BigRational::zero(); 2 * k_max as usize + 1];
    for k in 1..=k_max as i64 {
        let core = zeta_neg_int_exact(&BigInt::from(2 * k - 1))
            * zeta_neg_int_exact(&BigInt::from(2 * k + 1))
            / (ratio_int(2) * BigRational::from_integer(factorial(2 * k as u64)));
        s[2 * k as usize] = match variant {
            PlaneVariant::Principal => core,
            PlaneVariant::Alternating => {
                let four = BigInt::from(4).pow(k as u32);
                let sixteen = BigInt::from(16).pow(k as u32);
                let m = BigRational::from_integer(BigInt::from(5) * four - BigInt::from(2) * sixteen - BigInt::from(1));
                m * core
            }
        };
    }
    s
}

pub fn plane_correction_coeffs_exact(k_max: u32, variant: PlaneVariant) -> Vec<BigRational> {
    exp_exact(&plane_correction_exponent(variant, k_max))
}

pub fn plane_correction_coeffs(k_max: u32, variant: PlaneVariant, digits: u32) -> PowerSeries<Real> {
    rational_series_to_real(
        &plane_correction_coeffs_exact(k_max, variant),
        Grading::One,
        digits,
    )
}

/// Half-graded exponent for the triangular-parts corrections:
/// slot 2k+1 carries (sqrt(2 pi)/16) zeta(1/2-k) / (8^k (k+1)!) t^(k+1/2).
pub fn concave_correction_exponent(j_max: u32, digits: u32) -> PowerSeries<Real> {
    let d = digits + 8;
    let n = j_max as usize + 1;
    let mut s = PowerSeries::<Real>::zero(Grading::Half, n, d);
    let pref = (Real::pi(d).mul_i64(2)).sqrt().div_i64(16);
    let mut k = 0i64;
    while (2 * k + 1) < n as i64 {
        let z = zeta_q(&ratio(1 - 2 * k, 2), d);
        let den = Real::from_bigint(&(BigInt::from(8).pow(k as u32) * factorial(k as u64 + 1)), d);
        s.coeffs[(2 * k + 1) as usize] = &(&pref * &z) / &den;
        k += 1;
    }
    s
}

/// Coefficients c_k (slot k carries t^(k/2)) of the exponential of the
/// triangular-parts exponent.
pub fn concave_correction_coeffs(j_max: u32, digits: u32) -> PowerSeries<Real> {
    let e = concave_correction_exponent(j_max, digits);
    let out = e.exp();
    PowerSeries::new(Grading::Half, out.coeffs, digits)
}

/// log f(e^(2 pi i h/k - t)) by direct summation of the defining product:
/// sum_m mu(m) sum_l w^(m l h) e^(-m l t) / l. Converges geometrically for
/// t > 0. The workhorse oracle for every expansion.
pub fn direct_log_f(family: &Family, h: u32, k: u32, t: &Real, digits: u32) -> Complex {
    assert!(t.is_positive(), "direct_log_f needs t > 0");
    let d = digits + 8;
    let t = t.with_digits(d);
    let tf = t.to_f64();
    let target = (d as f64 + 6.0) * std::f64::consts::LN_10 + 30.0;
    let m_max = (target / tf).ceil() as u64;
    assert!(
        m_max < 80_000_000,
        "direct_log_f term budget exceeded at t = {tf}"
    );
    let roots: Vec<Complex> = (0..k)
        .map(|res| Complex::unit_pi_ratio(&ratio(2 * res as i64, k as i64), d))
        .collect();
    let emt = t.neg().exp();
    let eps_bits = -((d as f64 * 3.33) as i64) - 10;
    let mut e_m = Real::from_i64(1, d); // e^{-m t}
    let mut tot = Complex::zero(d);
    for m in 1..=m_max {
        e_m = &e_m * &emt;
        let mu = family.multiplicity(m);
        if mu == 0 {
            continue;
        }
        let w = &roots[(m * h as u64 % k as u64) as usize];
        let x = w.scale(&e_m);
        let mut z = x.clone();
        let mut l = 1i64;
        loop {
            tot = tot.add(&Complex::new(z.re.div_i64(l), z.im.div_i64(l)).scale(&Real::from_i64(mu, d)));
            let mag = z.re.exponent2().max(z.im.exponent2());
            if mag < eps_bits {
                break;
            }
            z = z.mul(&x);
            l += 1;
            assert!(l < 10_000_000, "inner sum failed to converge");
        }
    }
    tot
}

/// e * (log of the generating product in x^m) expanded at
/// x = exp(2 pi i h/k - t): the image point is x^m = exp(2 pi i h'/k' - m t)
/// with h'/k' = m h / k in lowest terms, and the expansion is
/// pi i s(h',k') + (1/2) log(k' m t / 2 pi) + pi^2/(6 k'^2 m t) - m t/24,
/// exact up to a tail of size exp(-4 pi^2 / (k'^2 m t)).
fn eta_factor_log(m: i64, e: i64, h: u32, k: u32, t: &Real, d: u32) -> Complex {
    let kk = k as i64;
    let num = (m as u64 * h as u64 % k as u64) as i64;
    let g = num.gcd(&kk);
    let ki = kk / g;
    let hi = num / g;
    let tau = t.mul_i64(m);
    let pi = Real::pi(d);
    let re = (&tau.mul_i64(ki) / &pi.mul_i64(2))
        .ln()
        .div_i64(2)
        .add(&(&(&pi * &pi) / &tau.mul_i64(6 * ki * ki)))
        .sub(&tau.div_i64(24));
    let im = &Real::from_ratio(&dedekind_sum(hi, ki), d) * &pi;
    Complex::new(re.mul_i64(e), im.mul_i64(e))
}

fn eta_quotient_log(factors: &[(i64, i64)], h: u32, k: u32, t: &Real, d: u32) -> Complex {
    let mut out = Complex::zero(d);
    for &(m, e) in factors {
        out = out.add(&eta_factor_log(m, e, h, k, t, d));
    }
    out
}

/// log F + sum_{j<r} log(1 - x^j). Factors with w^j = 1 vanish at t = 0
/// and are written j t e^{-j t/2} sinh(j t/2)/(j t/2); the others are
/// analytic and expanded as log(1 - w^j) + log(1 + z(t)).
fn closed_nsp(r: u32, h: u32, k: u32, t: &Real, order: u32, d: u32) -> Complex {
    assert!(order >= 2, "need at least the quadratic slot");
    let n = order as usize + 1;
    let mut out = eta_factor_log(1, 1, h, k, t, d);
    let one = Complex::from_real(Real::from_i64(1, d));
    let mut series = PowerSeries::<Complex>::zero(Grading::One, n, d);
    for j in 1..r as i64 {
        let a = (j * h as i64).rem_euclid(k as i64);
        if a == 0 {
            out = out.add(&Complex::from_real((&Real::from_i64(j, d) * t).ln()));
            series.coeffs[1] = series.coeffs[1]
                .add(&Complex::from_real(Real::from_ratio(&ratio(-j, 2), d)));
            let mut m = 1usize;
            while 2 * m < n {
                // log(sinh y / y) = sum 2^(2m-1) B_2m y^(2m) / (m (2m)!), y = j t/2
                let q = bernoulli_number(2 * m as u64)
                    * BigRational::from_integer(BigInt::from(j).pow(2 * m as u32))
                    / (ratio_int(2 * m as i64)
                        * BigRational::from_integer(factorial(2 * m as u64)));
                series.coeffs[2 * m] =
                    series.coeffs[2 * m].add(&Complex::from_real(Real::from_ratio(&q, d)));
                m += 1;
            }
        } else {
            let wj = Complex::unit_pi_ratio(&ratio(2 * a, k as i64), d);
            let base = one.sub(&wj);
            out = out.add(&base.ln());
            let zs = wj.div(&base);
            let mut g = PowerSeries::<Complex>::zero(Grading::One, n, d);
            g.coeffs[0] = one.clone();
            let mut f = Real::from_i64(1, d);
            for mm in 1..n {
                f = f.mul_i64(-j).div_i64(mm as i64);
                // slot mm of (1 - e^{-jt}) is -(-j)^mm/mm!
                g.coeffs[mm] = zs.scale(&f).neg();
            }
            series = series.add(&g.log());
        }
    }
    out.add(&series.eval(t))
}

fn closed_plane(h: u32, k: u32, t: &Real, order: u32, d: u32) -> Complex {
    let pi = Real::pi(d);
    let z3 = zeta_q(&ratio_int(3), d);
    let zp = zeta_prime_minus1(d);
    let ln2 = Real::from_i64(2, d).ln();
    let t2 = t * t;
    let (variant, re0) = match (h, k) {
        (0, 1) => (
            PlaneVariant::Principal,
            (&z3 / &t2.mul_i64(2))
                .add(&(&(&pi * &pi) / &t.mul_i64(24)))
                .add(&t.ln().div_i64(24))
                .add(&zp.div_i64(2))
                .sub(&ln2.div_i64(4)),
        ),
        (1, 2) => (
            PlaneVariant::Alternating,
            (&z3 / &t2.mul_i64(16))
                .sub(&(&(&pi * &pi) / &t.mul_i64(48)))
                .add(&t.ln().div_i64(12))
                .add(&zp)
                .add(&ln2.div_i64(24)),
        ),
        _ => panic!("no expansion at ({h}, {k}) for this family"),
    };
    let mut s = plane_correction_exponent(variant, (order / 2).max(1));
    s.resize(order as usize + 1, BigRational::zero());
    s[1] = ratio(1, 48);
    let tail = rational_series_to_real(&s, Grading::One, d).eval(t);
    Complex::new(re0.add(&tail), Real::zero(d))
}

fn closed_prings(h: u32, k: u32, t: &Real, d: u32) -> Complex {
    let which = match (h, k) {
        (0, 1) => 1,
        (1, 2) => 2,
        _ => panic!("no expansion at ({h}, {k}) for this family"),
    };
    let (a, b) = prings_channel(which, d);
    let pi = Real::pi(d);
    let re = (&a / t)
        .add(&(&b / &t.sqrt()))
        .sub(&t.ln().div_i64(4))
        .add(&pi.mul_i64(2).ln().mul_i64(3).div_i64(4));
    Complex::new(re, Real::zero(d))
}

fn closed_concave(h: u32, k: u32, t: &Real, order: u32, d: u32) -> Complex {
    assert!(
        h == 0 && k == 1,
        "no expansion at ({h}, {k}) for this family"
    );
    let pi = Real::pi(d);
    let a = &pi.mul_i64(2).sqrt().div_i64(2) * &zeta_q(&ratio(3, 2), d);
    let re = (&a / &t.sqrt())
        .add(&t.ln())
        .sub(&pi.mul_i64(4).ln())
        .add(&concave_correction_exponent(order, d).eval(t));
    Complex::new(re, Real::zero(d))
}

/// Truncated small-t expansion of log f at x = exp(2 pi i h/k - t),
/// assembled from the exact singular data of the family rather than by
/// summing the product. Series parts keep slots up to `order` in their
/// natural grading; terminating families ignore `order`. Every value
/// this returns is checked against `direct_log_f` by the expansion
/// consistency suite.
pub fn closed_log_f(
    family: &Family,
    h: u32,
    k: u32,
    t: &Real,
    order: u32,
    digits: u32,
) -> Complex {
    assert!(k >= 1 && h < k, "need 0 <= h < k");
    assert!(
        BigInt::from(h).gcd(&BigInt::from(k)).is_one() || (h == 0 && k == 1),
        "h and k must be coprime"
    );
    assert!(t.is_positive(), "closed_log_f needs t > 0");
    let d = digits + 8;
    let t = t.with_digits(d);
    let out = match family {
        Family::Nsp { r } => closed_nsp(*r, h, k, &t, order, d),
        Family::Basic => eta_quotient_log(&[(1, 2), (2, -1)], h, k, &t, d),
        Family::Colored3 => eta_quotient_log(&[(1, 3), (3, 1), (9, -3)], h, k, &t, d),
        Family::PlaneStrict => closed_plane(h, k, &t, order, d),
        Family::Prings => closed_prings(h, k, &t, d),
        Family::Concave => closed_concave(h, k, &t, order, d),
    };
    Complex::new(out.re.with_digits(digits), out.im.with_digits(digits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hp::real::agreement_digits;

    #[test]
    fn trivial_products() {
        // (1+t)(1-t) at order 3 = 1 - t^2
        let d = 30;
        let one_plus = PowerSeries::new(
            Grading::One,
            vec![ratio_int(1), ratio_int(1), ratio_int(0)],
            d,
        );
        let one_minus = PowerSeries::new(
            Grading::One,
            vec![ratio_int(1), ratio_int(-1), ratio_int(0)],
            d,
        );
        let p = one_plus.mul(&one_minus);
        assert_eq!(p.order(), 3);
        assert_eq!(p.coeffs, vec![ratio_int(1), ratio_int(0), ratio_int(-1)]);
    }

    #[test]
    fn exp_of_t() {
        let s = PowerSeries::new(
            Grading::One,
            vec![ratio_int(0), ratio_int(1), ratio_int(0), ratio_int(0)],
            0,
        );
        let e = s.exp();
        assert_eq!(
            e.coeffs,
            vec![ratio_int(1), ratio_int(1), ratio(1, 2), ratio(1, 6)]
        );
    }

    #[test]
    fn exp_log_inverse_exact() {
        let s = PowerSeries::new(
            Grading::One,
            vec![
                ratio_int(0),
                ratio(3, 7),
                ratio(-2, 5),
                ratio(1, 3),
                ratio(9, 11),
            ],
            0,
        );
        let back = s.exp().log();
        assert_eq!(back.coeffs, s.coeffs);
    }

    #[test]
    fn nsp_c2_value() {
        let c = nsp_phi1_coeffs_exact(12, 2);
        assert_eq!(c[0], ratio_int(1));
        // B_2 B_3(12) / (2 * 3!) = (1/6)(1518)/12
        assert_eq!(c[2], ratio(1518, 72));
    }

    #[test]
    fn plane_principal_known_coeffs() {
        let c = plane_correction_coeffs_exact(4, PlaneVariant::Principal);
        assert_eq!(c[2], ratio(-1, 5760));
        assert_eq!(c[4], ratio(-313, 464486400));
        assert_eq!(
            c[6],
            BigRational::new(BigInt::from(-91207), BigInt::from(8026324992000u64))
        );
    }

    #[test]
    fn plane_alternating_first_residue_magnitude() {
        let s = plane_correction_exponent(PlaneVariant::Alternating, 3);
        assert_eq!(s[2], ratio(13, 5760));
        assert_eq!(s[4], ratio(433, 1451520));
        assert_eq!(
            s[6],
            BigRational::new(BigInt::from(7873), BigInt::from(87091200u64))
        );
    }

    #[test]
    fn finite_product_constant_term_vanishing() {
        // c0 = 0 exactly when k <= rmax (a factor hits 1 - w^j = 0)
        let s = expand_finite_product(11, 1, 7, 4, 40);
        assert!(s.coeffs[0].re.abs().exponent2() < -100 || s.coeffs[0].re.is_zero());
        assert!(s.coeffs[0].im.abs().exponent2() < -100 || s.coeffs[0].im.is_zero());
        let s = expand_finite_product(11, 1, 13, 4, 40);
        assert!(!s.coeffs[0].re.is_zero() && s.coeffs[0].re.abs().exponent2() > -20);
    }

    #[test]
    fn finite_product_conjugate_symmetry() {
        let a = expand_finite_product(11, 2, 7, 6, 40);
        let b = expand_finite_product(11, 5, 7, 6, 40);
        for j in 0..=6 {
            let x = a.get(j);
            let y = b.get(j).conj();
            assert!(
                agreement_digits(&x.re, &y.re) > 35.0
                    || (&x.re - &y.re).abs().exponent2() < -120
            );
            assert!(
                agreement_digits(&x.im, &y.im) > 35.0
                    || (&x.im - &y.im).abs().exponent2() < -120
            );
        }
    }

    #[test]
    fn concave_c1_value() {
        let c = concave_correction_coeffs(3, 40);
        let expect = Real::parse("-0.22878536892293605101", 40);
        assert!(agreement_digits(&c.coeffs[1], &expect) > 18.0);
    }

    #[test]
    fn direct_log_basic_principal() {
        // family=basic at the principal point: the closed form
        // log[(1/(2 sqrt pi)) t^(1/2) exp(pi^2/(4t))] is exact up to
        // exponentially small tails
        let d = 45;
        let t = Real::parse("0.1", d);
        let got = direct_log_f(&Family::Basic, 0, 1, &t, d);
        let pi = Real::pi(d);
        let closed = (&t.sqrt() / &(pi.sqrt().mul_i64(2))).ln() + (&pi * &pi) / &t.mul_i64(4);
        let diff = (&got.re - &closed).abs();
        assert!(diff.exponent2() < -100, "diff {diff:?}");
        assert!(got.im.abs().exponent2() < -100);
    }
}
