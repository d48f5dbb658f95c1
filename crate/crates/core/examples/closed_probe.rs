// temp probe: closed_log_f vs direct_log_f residuals on the test grid
use partasym_core::hp::real::{Complex, Real};
use partasym_core::qseries::{closed_log_f, direct_log_f};
use partasym_core::Family;

fn cabs(z: &Complex) -> Real {
    z.abs2().sqrt()
}

fn run(label: &str, fam: &Family, h: u32, k: u32, order: u32, scale: f64, d: u32) {
    let grid = [0.05, 0.08, 0.12, 0.2];
    let mut pts = Vec::new();
    for g in grid {
        let tv = g * scale;
        let t = Real::parse(&format!("{tv:.10}"), d);
        let start = std::time::Instant::now();
        let direct = direct_log_f(fam, h, k, &t, d);
        let el = start.elapsed().as_millis();
        let closed = closed_log_f(fam, h, k, &t, order, d);
        let res = direct.sub(&closed);
        let a = cabs(&res).to_f64();
        let re = res.re.to_f64();
        println!(
            "{label} t={tv:<9.6} |res|={a:<12.4e} re={re:<12.4e} im={:<12.4e} ({el} ms)",
            res.im.to_f64()
        );
        pts.push((tv.ln(), a.ln()));
    }
    // least squares slope of ln|res| vs ln t
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    println!("{label}  fitted slope = {slope:.4}\n");
}

fn main() {
    let d = 60;
    let nsp = Family::Nsp { r: 12 };
    run("nsp (0,1) J=4 ", &nsp, 0, 1, 4, 1.0, d);
    run("nsp (1,2) J=4 ", &nsp, 1, 2, 4, 1.0, d);
    run("nsp (2,7) J=4 ", &nsp, 2, 7, 4, 1.0 / 7.0, d);
    run("basic (0,1)   ", &Family::Basic, 0, 1, 0, 1.0, d);
    run("basic (1,3)   ", &Family::Basic, 1, 3, 0, 1.0, d);
    run("col3 (0,1)    ", &Family::Colored3, 0, 1, 0, 1.0, d);
    run("col3 (1,3)    ", &Family::Colored3, 1, 3, 0, 1.0, d);
    run("col3 (1,2)    ", &Family::Colored3, 1, 2, 0, 1.0, d);
    // second-channel match at (1,2)
    for g in [0.05, 0.08, 0.12, 0.2] {
        let t = Real::parse(&format!("{g:.10}"), d);
        let direct = direct_log_f(&Family::Colored3, 1, 2, &t, d);
        let closed = closed_log_f(&Family::Colored3, 1, 2, &t, 0, d);
        let res = direct.sub(&closed).re;
        let pi = Real::pi(d);
        let pred = Real::from_i64(1, d)
            .add(&(&(&pi * &pi) / &t.mul_i64(9)).neg().exp().mul_i64(3))
            .ln();
        let rel = (&res.sub(&pred) / &pred).to_f64();
        println!("col3 channel2 t={g} pred={:.6e} rel dev={rel:.3e}", pred.to_f64());
    }
    println!();
    run("plane (0,1) K=4", &Family::PlaneStrict, 0, 1, 4, 1.0, d);
    run("plane (1,2) K=4", &Family::PlaneStrict, 1, 2, 4, 1.0, d);
    run("prings (0,1)  ", &Family::Prings, 0, 1, 0, 1.0, d);
    run("prings (1,2)  ", &Family::Prings, 1, 2, 0, 1.0, d);
    run("concave J=6   ", &Family::Concave, 0, 1, 6, 1.0, d);
}
