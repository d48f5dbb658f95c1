// temporary probe: print every table row the reproduce command will need
use partasym_core::asym::colored3::{colored3_phi_variant, Colored3Variant};
use partasym_core::asym::concave::concave_q;
use partasym_core::asym::estimate::{default_digits, estimate, EstimateConfig};
use partasym_core::asym::nsp::{nsp_phi_k_parts, nsp_phi1_flipped_exponent};
use partasym_core::asym::plane::{plane_phi1, plane_phi2, PlaneSecondVariant};
use partasym_core::asym::prings::{prings_closed_form, prings_phi};
use partasym_core::families::Family;
use partasym_core::hp::real::Real;
use partasym_core::oracle::count;

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_default();
    match arg.as_str() {
        "sec2" => sec2(),
        "sec3" => sec3(),
        "sec4" => sec4(),
        "sec5" => sec5(),
        "sec6" => sec6(),
        "sec7" => sec7(),
        _ => println!("usage: probe_sections <sec2..sec7>"),
    }
}

fn sec2() {
    let fam = Family::Nsp { r: 12 };
    let t0 = std::time::Instant::now();
    let cfg = EstimateConfig {
        kmax: 16,
        j_terms: 16,
        precision: None,
        double_run: false,
    };
    let b = estimate(&fam, 1200, &cfg);
    println!("digits = {}", b.digits);
    for (k, v) in &b.terms {
        println!("phi{:<2} = {}", k, v.to_decimal_string(28));
    }
    println!("total  = {}", b.total.to_decimal_string(34));
    println!("exact  = {:?}", b.exact);
    println!("error  = {}", b.error.as_ref().unwrap().to_decimal_string(12));
    println!("rounded= {}", b.rounded);
    // k=7 sub-terms
    for (h, v) in nsp_phi_k_parts(12, 1200, 7, 16, b.digits) {
        println!("phi7 h={h}: {}", v.to_decimal_string(12));
    }
    // k=14 sub-terms (printed row uses h=1 only)
    let mut h1 = Real::zero(b.digits);
    for (h, v) in nsp_phi_k_parts(12, 1200, 14, 16, b.digits) {
        println!("phi14 h={h}: {}", v.to_decimal_string(12));
        if h == 1 {
            h1 = v.clone();
        }
    }
    println!("phi14 h1-only = {}", h1.to_decimal_string(12));
    // flipped-exponent variant of phi1 must differ (exponent slip detector)
    let flip = nsp_phi1_flipped_exponent(12, 1200, 16, b.digits);
    println!("phi1 flipped = {}", flip.to_decimal_string(20));
    println!("[{} s]", t0.elapsed().as_secs_f64());
}

fn sec3() {
    let t0 = std::time::Instant::now();
    let cfg = EstimateConfig {
        kmax: 13,
        j_terms: 16,
        precision: None,
        double_run: false,
    };
    let b = estimate(&Family::Basic, 1000, &cfg);
    println!("digits = {}", b.digits);
    for (k, v) in &b.terms {
        println!("phi{:<2} = {}", k, v.to_decimal_string(24));
    }
    println!("total  = {}", b.total.to_decimal_string(45));
    println!("exact  = {:?}", b.exact);
    println!("error  = {}", b.error.as_ref().unwrap().to_decimal_string(8));
    println!("[{} s]", t0.elapsed().as_secs_f64());
}

fn sec4() {
    let t0 = std::time::Instant::now();
    let cfg = EstimateConfig {
        kmax: 7,
        j_terms: 16,
        precision: None,
        double_run: false,
    };
    let b = estimate(&Family::Colored3, 200, &cfg);
    println!("digits = {}", b.digits);
    for (k, v) in &b.terms {
        println!("phi{:<2} = {}", k, v.to_decimal_string(24));
    }
    println!("total  = {}", b.total.to_decimal_string(28));
    println!("exact  = {:?}", b.exact);
    println!("error  = {}", b.error.as_ref().unwrap().to_decimal_string(8));
    // reference variants for the reproduction identities
    let d = b.digits;
    let phi2_ref = colored3_phi_variant(200, 2, Colored3Variant::Reference, d);
    println!("phi2 reference-variant = {}", phi2_ref.to_decimal_string(20));
    let phi7_ref = colored3_phi_variant(200, 7, Colored3Variant::Reference, d);
    println!("phi7 reference-variant = {}", phi7_ref.to_decimal_string(20));
    println!("[{} s]", t0.elapsed().as_secs_f64());
}

fn sec5() {
    let t0 = std::time::Instant::now();
    let fam = Family::PlaneStrict;
    let d = default_digits(&fam, 200);
    println!("digits = {d}");
    let p1 = plane_phi1(200, 8, 600, d);
    println!("phi1 (8 terms) = {}", p1.to_decimal_string(27));
    let p2 = plane_phi2(200, 4, 600, PlaneSecondVariant::Resolved, d);
    println!("phi2 resolved = {}", p2.to_decimal_string(20));
    let p2r = plane_phi2(200, 4, 600, PlaneSecondVariant::Reference, d);
    println!("phi2 reference = {}", p2r.to_decimal_string(20));
    let sum = &p1 + &p2;
    println!("phi1+phi2 = {}", sum.to_decimal_string(27));
    let e = count(&fam, 200);
    println!("exact = {e}");
    println!("[{} s]", t0.elapsed().as_secs_f64());
}

fn sec6() {
    let t0 = std::time::Instant::now();
    let fam = Family::Prings;
    let d = default_digits(&fam, 200);
    println!("digits = {d}");
    let p1 = prings_phi(200, 1, 60, d);
    println!("phi1 = {}", p1.to_decimal_string(20));
    let p2 = prings_phi(200, 2, 60, d);
    println!("phi2 = {}", p2.to_decimal_string(16));
    let sum = &p1 + &p2;
    println!("phi1+phi2 = {}", sum.to_decimal_string(20));
    let e = count(&fam, 200);
    println!("exact = {e}");
    let cf = prings_closed_form(200, d);
    println!("closed form = {}", cf.to_decimal_string(8));
    println!("[{} s]", t0.elapsed().as_secs_f64());
}

fn sec7() {
    let t0 = std::time::Instant::now();
    let fam = Family::Concave;
    let d = default_digits(&fam, 2000);
    println!("digits = {d}");
    let mut sum = Real::zero(d);
    for k in 0..5 {
        let q = concave_q(2000, k, 600, d);
        println!("q{k} = {}", q.to_decimal_string(20));
        sum = &sum + &q;
    }
    println!("sum q0..q4 = {}", sum.to_decimal_string(20));
    let e = count(&fam, 2000);
    println!("exact = {e}");
    println!("[{} s]", t0.elapsed().as_secs_f64());
}
