//! Thin wrapper around astro-float giving decimal-digit precision tracking,
//! operator syntax, and exact-rational entry points.
//!
//! Every `Real` carries the decimal precision it was created with. Binary
//! operations work at the larger of the two operand precisions, so mixing
//! precisions widens rather than silently truncating.

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

/// Run `f` with the thread's shared constants cache.
pub fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Mantissa bits needed for `digits` decimal digits, plus head room.
pub fn bits_for(digits: u32) -> usize {
    (digits as f64 * 3.33).ceil() as usize + 32
}

#[derive(Clone)]
pub struct Real {
    x: BigFloat,
    digits: u32,
}

impl Real {
    fn wrap(x: BigFloat, digits: u32) -> Self {
        debug_assert!(!x.is_nan(), "NaN from astro-float operation");
        Real { x, digits }
    }

    pub fn zero(digits: u32) -> Self {
        Real::wrap(BigFloat::new(bits_for(digits)), digits)
    }

    pub fn from_i64(v: i64, digits: u32) -> Self {
        Real::wrap(BigFloat::from_i64(v, bits_for(digits)), digits)
    }

    pub fn from_u64(v: u64, digits: u32) -> Self {
        Real::wrap(BigFloat::from_u64(v, bits_for(digits)), digits)
    }

    pub fn from_f64(v: f64, digits: u32) -> Self {
        Real::wrap(BigFloat::from_f64(v, bits_for(digits)), digits)
    }

    /// Parse a decimal literal like "-1.25e-3".
    pub fn parse(s: &str, digits: u32) -> Self {
        let x = with_consts(|cc| BigFloat::parse(s, Radix::Dec, bits_for(digits), RM, cc));
        assert!(!x.is_nan(), "failed to parse decimal literal {s:?}");
        Real::wrap(x, digits)
    }

    pub fn from_bigint(v: &BigInt, digits: u32) -> Self {
        Real::parse(&v.to_string(), digits)
    }

    /// Exact rational brought to float at the requested precision.
    pub fn from_ratio(q: &BigRational, digits: u32) -> Self {
        let n = Real::from_bigint(q.numer(), digits);
        let d = Real::from_bigint(q.denom(), digits);
        n.div(&d)
    }

    pub fn pi(digits: u32) -> Self {
        let x = with_consts(|cc| cc.pi(bits_for(digits), RM));
        Real::wrap(x, digits)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Same value re-rounded to a different working precision.
    pub fn with_digits(&self, digits: u32) -> Self {
        let mut x = self.x.clone();
        x.set_precision(bits_for(digits), RM).expect("set_precision");
        Real::wrap(x, digits)
    }

    pub fn raw(&self) -> &BigFloat {
        &self.x
    }

    fn join(&self, other: &Real) -> (usize, u32) {
        let d = self.digits.max(other.digits);
        (bits_for(d), d)
    }

    pub fn add(&self, o: &Real) -> Real {
        let (p, d) = self.join(o);
        Real::wrap(self.x.add(&o.x, p, RM), d)
    }

    pub fn sub(&self, o: &Real) -> Real {
        let (p, d) = self.join(o);
        Real::wrap(self.x.sub(&o.x, p, RM), d)
    }

    pub fn mul(&self, o: &Real) -> Real {
        let (p, d) = self.join(o);
        Real::wrap(self.x.mul(&o.x, p, RM), d)
    }

    pub fn div(&self, o: &Real) -> Real {
        let (p, d) = self.join(o);
        Real::wrap(self.x.div(&o.x, p, RM), d)
    }

    pub fn neg(&self) -> Real {
        Real::wrap(self.x.neg(), self.digits)
    }

    pub fn abs(&self) -> Real {
        Real::wrap(self.x.abs(), self.digits)
    }

    pub fn recip(&self) -> Real {
        Real::wrap(self.x.reciprocal(bits_for(self.digits), RM), self.digits)
    }

    pub fn mul_i64(&self, k: i64) -> Real {
        self.mul(&Real::from_i64(k, self.digits))
    }

    pub fn div_i64(&self, k: i64) -> Real {
        self.div(&Real::from_i64(k, self.digits))
    }

    pub fn sqrt(&self) -> Real {
        Real::wrap(self.x.sqrt(bits_for(self.digits), RM), self.digits)
    }

    pub fn exp(&self) -> Real {
        let p = bits_for(self.digits);
        Real::wrap(with_consts(|cc| self.x.exp(p, RM, cc)), self.digits)
    }

    pub fn ln(&self) -> Real {
        let p = bits_for(self.digits);
        Real::wrap(with_consts(|cc| self.x.ln(p, RM, cc)), self.digits)
    }

    pub fn sin(&self) -> Real {
        let p = bits_for(self.digits);
        Real::wrap(with_consts(|cc| self.x.sin(p, RM, cc)), self.digits)
    }

    pub fn cos(&self) -> Real {
        let p = bits_for(self.digits);
        Real::wrap(with_consts(|cc| self.x.cos(p, RM, cc)), self.digits)
    }

    pub fn atan(&self) -> Real {
        let p = bits_for(self.digits);
        Real::wrap(with_consts(|cc| self.x.atan(p, RM, cc)), self.digits)
    }

    /// self^e for real exponent; self must be positive.
    pub fn pow(&self, e: &Real) -> Real {
        assert!(
            self.is_positive() || self.is_zero(),
            "pow base must be nonnegative"
        );
        let (p, d) = self.join(e);
        Real::wrap(with_consts(|cc| self.x.pow(&e.x, p, RM, cc)), d)
    }

    /// Integer power, any sign of base, exponent may be negative.
    pub fn powi(&self, n: i64) -> Real {
        let p = bits_for(self.digits);
        if n >= 0 {
            Real::wrap(self.x.powi(n as usize, p, RM), self.digits)
        } else {
            let inv = self.x.reciprocal(p, RM);
            Real::wrap(inv.powi((-n) as usize, p, RM), self.digits)
        }
    }

    /// self^(num/den) for positive self, exact rational exponent.
    pub fn pow_ratio(&self, q: &BigRational, digits: u32) -> Real {
        let e = Real::from_ratio(q, digits);
        self.with_digits(digits).pow(&e)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        !self.x.is_zero() && self.x.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.x.is_negative()
    }

    pub fn cmp_real(&self, o: &Real) -> Ordering {
        match self.x.cmp(&o.x) {
            Some(v) if v < 0 => Ordering::Less,
            Some(v) if v > 0 => Ordering::Greater,
            Some(_) => Ordering::Equal,
            None => panic!("comparison with NaN"),
        }
    }

    pub fn max_real(&self, o: &Real) -> Real {
        if self.cmp_real(o) == Ordering::Less {
            o.clone()
        } else {
            self.clone()
        }
    }

    /// Base-2 exponent of the value; i64::MIN for an exact zero so that
    /// magnitude comparisons treat zero as smaller than everything.
    pub fn exponent2(&self) -> i64 {
        if self.x.is_zero() {
            return i64::MIN;
        }
        self.x.exponent().map(|e| e as i64).unwrap_or(0)
    }

    /// Decimal order of magnitude estimate (floor of log10 |x|), 0 for zero.
    pub fn mag10(&self) -> i64 {
        if self.is_zero() {
            return 0;
        }
        (self.exponent2() as f64 * std::f64::consts::LOG10_2).floor() as i64
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        self.to_decimal_string(17).parse::<f64>().unwrap_or(f64::NAN)
    }

    /// Nearest integer, ties rounded away from zero.
    pub fn round_to_bigint(&self) -> BigInt {
        let half = Real::parse("0.5", self.digits);
        let shifted = self.abs().add(&half);
        let fl = shifted.x.floor();
        let v = big_to_int(&fl, self.digits);
        if self.is_negative() {
            -v
        } else {
            v
        }
    }

    pub fn floor_to_bigint(&self) -> BigInt {
        big_to_int(&self.x.floor(), self.digits)
    }

    /// Decimal string with `sig` significant digits, scientific form when the
    /// exponent is unwieldy, plain form otherwise. Always parseable back.
    pub fn to_decimal_string(&self, sig: usize) -> String {
        assert!(sig > 0);
        if self.is_zero() {
            return "0".into();
        }
        let (sign, mut ds, mut e10) = with_consts(|cc| {
            self.x
                .convert_to_radix(Radix::Dec, RM, cc)
                .expect("radix conversion")
        });
        // value = 0.d1 d2 ... * 10^e10
        while ds.len() > 1 && ds[0] == 0 {
            // leading zeros shift the exponent
            ds.remove(0);
            e10 -= 1;
        }
        if ds.iter().all(|&d| d == 0) {
            return "0".into();
        }
        if ds.len() > sig {
            let roundup = ds[sig] >= 5;
            ds.truncate(sig);
            if roundup {
                let mut i = sig;
                loop {
                    if i == 0 {
                        ds.insert(0, 1);
                        e10 += 1;
                        ds.truncate(sig);
                        break;
                    }
                    i -= 1;
                    if ds[i] == 9 {
                        ds[i] = 0;
                    } else {
                        ds[i] += 1;
                        break;
                    }
                }
            }
        }
        while ds.len() > 1 && *ds.last().unwrap() == 0 {
            ds.pop();
        }
        let neg = sign == Sign::Neg;
        let digits: String = ds.iter().map(|d| (b'0' + d) as char).collect();
        let e10 = e10 as i64;
        let body = if e10 > 0 && e10 <= 40 {
            if (e10 as usize) >= digits.len() {
                let mut s = digits.clone();
                s.push_str(&"0".repeat(e10 as usize - digits.len()));
                s
            } else {
                format!("{}.{}", &digits[..e10 as usize], &digits[e10 as usize..])
            }
        } else if e10 <= 0 && e10 > -6 {
            format!("0.{}{}", "0".repeat((-e10) as usize), digits)
        } else {
            let mut s = String::new();
            s.push(digits.as_bytes()[0] as char);
            if digits.len() > 1 {
                s.push('.');
                s.push_str(&digits[1..]);
            }
            format!("{}e{}", s, e10 - 1)
        };
        if neg {
            format!("-{body}")
        } else {
            body
        }
    }

    /// Fixed-point decimal string with `frac` digits after the point.
    /// Used for table style output like 51637.99481.
    pub fn to_fixed_string(&self, frac: usize) -> String {
        if self.is_zero() {
            return if frac == 0 {
                "0".into()
            } else {
                format!("0.{}", "0".repeat(frac))
            };
        }
        let ten = Real::from_i64(10, self.digits);
        let scale = ten.powi(frac as i64);
        let scaled = self.mul(&scale);
        let int = scaled.round_to_bigint();
        let neg = int.is_negative();
        let mag = int.magnitude().to_string();
        let mag = if mag.len() <= frac {
            format!("{}{}", "0".repeat(frac + 1 - mag.len()), mag)
        } else {
            mag
        };
        let split = mag.len() - frac;
        let body = if frac == 0 {
            mag
        } else {
            format!("{}.{}", &mag[..split], &mag[split..])
        };
        if neg && body.chars().any(|c| c != '0' && c != '.') {
            format!("-{body}")
        } else {
            body
        }
    }
}

fn big_to_int(x: &BigFloat, _digits: u32) -> BigInt {
    if x.is_zero() {
        return BigInt::zero();
    }
    let (sign, ds, e10) = with_consts(|cc| {
        x.convert_to_radix(Radix::Dec, RM, cc)
            .expect("radix conversion")
    });
    // x = 0.d1 d2 ... * 10^e10 and x is an integer, so e10 >= number of
    // significant digits; beyond the mantissa it is zeros.
    let e10 = e10 as i64;
    assert!(e10 >= 0, "not an integer");
    let mut v = BigInt::zero();
    for i in 0..e10 as usize {
        let d = if i < ds.len() { ds[i] } else { 0 };
        v = v * 10 + d;
    }
    if sign == Sign::Neg {
        -v
    } else {
        v
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}~{}d", self.to_decimal_string(25), self.digits)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string(self.digits as usize))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $call:ident) => {
        impl std::ops::$tr for &Real {
            type Output = Real;
            fn $m(self, rhs: &Real) -> Real {
                Real::$call(self, rhs)
            }
        }
        impl std::ops::$tr for Real {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real {
                Real::$call(&self, &rhs)
            }
        }
        impl std::ops::$tr<&Real> for Real {
            type Output = Real;
            fn $m(self, rhs: &Real) -> Real {
                Real::$call(&self, rhs)
            }
        }
        impl std::ops::$tr<Real> for &Real {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real {
                Real::$call(self, &rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);
binop!(Div, div, div);

impl std::ops::Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::neg(self)
    }
}

impl std::ops::Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::neg(&self)
    }
}

/// cos(pi * q) with the rational phase reduced mod 2 before flotation,
/// and exact values at the quarter points.
pub fn cos_pi_ratio(q: &BigRational, digits: u32) -> Real {
    let r = reduce_mod2(q);
    if let Some(v) = quarter_point_cos(&r) {
        return Real::from_i64(v, digits);
    }
    let theta = Real::from_ratio(&r, digits) * Real::pi(digits);
    theta.cos()
}

/// sin(pi * q), same conventions as `cos_pi_ratio`.
pub fn sin_pi_ratio(q: &BigRational, digits: u32) -> Real {
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    cos_pi_ratio(&(half - q), digits)
}

/// Reduce q into [0, 2).
pub fn reduce_mod2(q: &BigRational) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    let mut r = q - (q / &two).floor() * &two;
    if r.is_negative() {
        r += &two;
    }
    if r >= two {
        r = BigRational::zero();
    }
    r
}

fn quarter_point_cos(r: &BigRational) -> Option<i64> {
    let two = BigInt::from(2);
    if r.denom() == &BigInt::from(1) {
        // r in {0, 1}
        return Some(if r.numer().is_zero() { 1 } else { -1 });
    }
    if r.denom() == &two {
        // r in {1/2, 3/2}
        return Some(0);
    }
    None
}

/// Number of agreeing significant decimal digits between a and b.
/// Returns a large value when they are numerically identical.
pub fn agreement_digits(a: &Real, b: &Real) -> f64 {
    let diff = a.sub(b).abs();
    if diff.is_zero() {
        return 1.0e6;
    }
    let scale = a.abs().max_real(&b.abs());
    if scale.is_zero() {
        return 0.0;
    }
    let rel = diff.div(&scale);
    -(rel.exponent2() as f64) * std::f64::consts::LOG10_2
}

/// Complex value as a pair of `Real`s. Only the handful of operations the
/// root-of-unity expansions need.
#[derive(Clone, Debug)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn zero(digits: u32) -> Self {
        Complex::new(Real::zero(digits), Real::zero(digits))
    }

    pub fn from_real(re: Real) -> Self {
        let d = re.digits();
        Complex::new(re, Real::zero(d))
    }

    /// exp(i * pi * q) for exact rational q.
    pub fn unit_pi_ratio(q: &BigRational, digits: u32) -> Self {
        Complex::new(cos_pi_ratio(q, digits), sin_pi_ratio(q, digits))
    }

    pub fn add(&self, o: &Complex) -> Complex {
        Complex::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Complex) -> Complex {
        Complex::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &Complex) -> Complex {
        Complex::new(
            &(&self.re * &o.re) - &(&self.im * &o.im),
            &(&self.re * &o.im) + &(&self.im * &o.re),
        )
    }

    pub fn scale(&self, s: &Real) -> Complex {
        Complex::new(&self.re * s, &self.im * s)
    }

    pub fn neg(&self) -> Complex {
        Complex::new(-&self.re, -&self.im)
    }

    pub fn conj(&self) -> Complex {
        Complex::new(self.re.clone(), -&self.im)
    }

    pub fn div(&self, o: &Complex) -> Complex {
        let den = &(&o.re * &o.re) + &(&o.im * &o.im);
        let num = self.mul(&o.conj());
        Complex::new(&num.re / &den, &num.im / &den)
    }

    pub fn abs2(&self) -> Real {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// exp(z) = e^re (cos im + i sin im)
    pub fn exp(&self) -> Complex {
        let m = self.re.exp();
        Complex::new(&m * &self.im.cos(), &m * &self.im.sin())
    }

    /// Principal log; safe away from the branch cut as used here.
    pub fn ln(&self) -> Complex {
        let r2 = self.abs2();
        let re = r2.ln().div_i64(2);
        let im = atan2(&self.im, &self.re);
        Complex::new(re, im)
    }
}

fn atan2(y: &Real, x: &Real) -> Real {
    let d = y.digits().max(x.digits());
    let pi = Real::pi(d);
    if x.is_zero() {
        if y.is_zero() {
            return Real::zero(d);
        }
        let half = pi.div_i64(2);
        return if y.is_positive() { half } else { -half };
    }
    let base = y.div(x).atan();
    if x.is_positive() {
        base
    } else if y.is_negative() {
        base - pi
    } else {
        base + pi
    }
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn ratio_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// True when the rational is an integer <= 0, where 1/Gamma vanishes.
pub fn is_nonpositive_int(q: &BigRational) -> bool {
    q.is_integer() && !q.numer().is_positive()
}

/// Convenience: rational to f64 for diagnostics.
pub fn ratio_to_f64(q: &BigRational) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}
