//! Consistency of the closed small-t expansions of log f against direct
//! summation of the defining product, at every singular point the
//! approximation pipeline visits.
//!
//! Two regimes. Points whose expansion is a truncated power series must
//! show a residual scaling like the first omitted power: the fitted
//! log-log slope over the t grid has to land within 0.3 of it. Points
//! whose expansion terminates must leave only the exponentially small
//! tail, which is pinned against its predicted scale where measurable.

use partasym_core::hp::real::Real;
use partasym_core::qseries::{closed_log_f, direct_log_f};
use partasym_core::Family;

const GRID: [f64; 4] = [0.05, 0.08, 0.12, 0.2];
const DIGITS: u32 = 60;

fn residuals(fam: &Family, h: u32, k: u32, order: u32, scale: f64) -> Vec<(f64, Real)> {
    GRID.iter()
        .map(|g| {
            let tv = g * scale;
            let t = Real::parse(&format!("{tv:.12}"), DIGITS);
            let res = direct_log_f(fam, h, k, &t, DIGITS)
                .sub(&closed_log_f(fam, h, k, &t, order, DIGITS));
            (tv, res.abs2().sqrt())
        })
        .collect()
}

fn fitted_slope(pts: &[(f64, Real)]) -> f64 {
    let xy: Vec<(f64, f64)> = pts
        .iter()
        .map(|(t, r)| (t.ln(), r.to_f64().ln()))
        .collect();
    let n = xy.len() as f64;
    let sx: f64 = xy.iter().map(|p| p.0).sum();
    let sy: f64 = xy.iter().map(|p| p.1).sum();
    let sxx: f64 = xy.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = xy.iter().map(|p| p.0 * p.1).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

fn assert_slope(fam: &Family, h: u32, k: u32, order: u32, scale: f64, expect: f64) {
    let slope = fitted_slope(&residuals(fam, h, k, order, scale));
    assert!(
        (slope - expect).abs() <= 0.3,
        "({h},{k}): fitted residual slope {slope:.3}, expected {expect} +- 0.3"
    );
}

#[test]
fn nsp_principal_residual_scales_as_first_omitted_power() {
    // even series truncated after t^4: first omitted power is t^6
    assert_slope(&Family::Nsp { r: 12 }, 0, 1, 4, 1.0, 6.0);
}

#[test]
fn nsp_alternating_residual_scales_as_first_omitted_power() {
    // the odd slots vanish here too: ln(1+e^-y) is even past its linear term
    assert_slope(&Family::Nsp { r: 12 }, 1, 2, 4, 1.0, 6.0);
}

#[test]
fn nsp_k7_residual_scales_as_first_omitted_power() {
    // generic root of unity: all powers present, first omitted is t^5;
    // scaled grid keeps the eta tail exp(-4 pi^2/(49 t)) negligible
    assert_slope(&Family::Nsp { r: 12 }, 2, 7, 4, 1.0 / 7.0, 5.0);
}

#[test]
fn plane_principal_residual_scales_as_first_omitted_power() {
    assert_slope(&Family::PlaneStrict, 0, 1, 4, 1.0, 6.0);
}

#[test]
fn plane_alternating_residual_scales_as_first_omitted_power() {
    assert_slope(&Family::PlaneStrict, 1, 2, 4, 1.0, 6.0);
}

#[test]
fn concave_residual_scales_as_first_omitted_half_power() {
    // half-graded series kept through t^(5/2); no integer powers may
    // appear in between, which is exactly what the binomial-zeta
    // identity guarantees (a stray t term would drag the slope to 1)
    assert_slope(&Family::Concave, 0, 1, 6, 1.0, 3.5);
}

#[test]
fn basic_principal_expansion_terminates() {
    // largest surviving tail is exp(-2 pi^2/t) ~ 1e-43 at t = 0.2
    for (tv, r) in residuals(&Family::Basic, 0, 1, 0, 1.0) {
        let r = r.to_f64();
        assert!(r <= 1e-40, "t={tv}: residual {r:.3e} above 1e-40");
    }
}

#[test]
fn basic_k3_tail_matches_eta_remainder_scale() {
    // dominant tail: the even-part factor at its conjugate point,
    // exp(-2 pi^2/(9 t))
    for (tv, r) in residuals(&Family::Basic, 1, 3, 0, 1.0) {
        let pred = (-2.0 * std::f64::consts::PI.powi(2) / (9.0 * tv)).exp();
        let ratio = r.to_f64() / pred;
        assert!(ratio <= 10.0, "t={tv}: tail ratio {ratio:.3} above 10");
        if tv >= 0.1 {
            assert!(ratio >= 0.1, "t={tv}: tail ratio {ratio:.3} below 0.1");
        }
    }
}

#[test]
fn colored3_principal_tail_matches_eta_remainder_scale() {
    // dominant tail: the ninth-power factor, weight -3, at exp(-4 pi^2/(9 t))
    for (tv, r) in residuals(&Family::Colored3, 0, 1, 0, 1.0) {
        let pred = 3.0 * (-4.0 * std::f64::consts::PI.powi(2) / (9.0 * tv)).exp();
        let ratio = r.to_f64() / pred;
        assert!(ratio <= 10.0, "t={tv}: tail ratio {ratio:.3} above 10");
        if tv >= 0.1 {
            assert!(ratio >= 0.1, "t={tv}: tail ratio {ratio:.3} below 0.1");
        }
    }
}

#[test]
fn colored3_k3_tail_matches_eta_remainder_scale() {
    for (tv, r) in residuals(&Family::Colored3, 1, 3, 0, 1.0) {
        let pred = 3.0 * (-4.0 * std::f64::consts::PI.powi(2) / (9.0 * tv)).exp();
        let ratio = r.to_f64() / pred;
        assert!(ratio <= 10.0, "t={tv}: tail ratio {ratio:.3} above 10");
        if tv >= 0.1 {
            assert!(ratio >= 0.1, "t={tv}: tail ratio {ratio:.3} below 0.1");
        }
    }
}

#[test]
fn colored3_alternating_residual_is_the_second_channel() {
    // At x -> -1 the single eta channel leaves exactly the second
    // exponential: log f - closed = log(1 + 3 exp(-pi^2/(9 t))) up to
    // tails an order exp(-pi^2/(9 t)) smaller. This pins both the
    // existence and the coefficient of the second Bessel term in the
    // alternating approximation for this family.
    for g in GRID {
        let t = Real::parse(&format!("{g:.12}"), DIGITS);
        let res = direct_log_f(&Family::Colored3, 1, 2, &t, DIGITS)
            .sub(&closed_log_f(&Family::Colored3, 1, 2, &t, 0, DIGITS));
        let pi = Real::pi(DIGITS);
        let pred = Real::from_i64(1, DIGITS)
            .add(&(&(&pi * &pi) / &t.mul_i64(9)).neg().exp().mul_i64(3))
            .ln();
        let rel = (&res.re.sub(&pred) / &pred).to_f64().abs();
        assert!(
            rel <= 1e-3,
            "t={g}: second channel relative deviation {rel:.3e} above 1e-3"
        );
        assert!(res.im.to_f64().abs() <= 1e-30, "t={g}: imaginary leak");
    }
}

#[test]
fn prings_principal_expansion_terminates() {
    // every candidate power term cancels (zeta at negative even
    // integers); what is left decays faster than any power of t
    let pts = residuals(&Family::Prings, 0, 1, 0, 1.0);
    let ceil = [1e-9, 1e-8, 1e-6, 1e-5];
    for ((tv, r), c) in pts.iter().zip(ceil) {
        let r = r.to_f64();
        assert!(r <= c, "t={tv}: residual {r:.3e} above {c:.0e}");
    }
    for w in pts.windows(2) {
        assert!(
            w[0].1.to_f64() <= w[1].1.to_f64() * 1.05,
            "residual not decreasing towards t = 0"
        );
    }
    assert!(pts[0].1.to_f64() <= pts[3].1.to_f64() / 100.0);
}

#[test]
fn prings_alternating_expansion_terminates() {
    let pts = residuals(&Family::Prings, 1, 2, 0, 1.0);
    let ceil = [1.2e-3, 7.5e-3, 2.1e-2, 2.1e-2];
    for ((tv, r), c) in pts.iter().zip(ceil) {
        let r = r.to_f64();
        assert!(r <= c, "t={tv}: residual {r:.3e} above {c:.1e}");
    }
    for w in pts.windows(2) {
        assert!(
            w[0].1.to_f64() <= w[1].1.to_f64() * 1.05,
            "residual not decreasing towards t = 0"
        );
    }
    assert!(pts[0].1.to_f64() <= pts[3].1.to_f64() / 5.0);
}
