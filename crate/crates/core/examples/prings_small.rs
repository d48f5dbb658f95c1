use partasym_core::hp::real::Real;
use partasym_core::qseries::{closed_log_f, direct_log_f};
use partasym_core::Family;
fn main() {
    let d = 80;
    for tv in [0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625] {
        let t = Real::parse(&format!("{tv:.10}"), d);
        for (h, k) in [(0u32, 1u32), (1, 2)] {
            let res = direct_log_f(&Family::Prings, h, k, &t, d)
                .sub(&closed_log_f(&Family::Prings, h, k, &t, 0, d));
            print!("  ({h},{k}) re={:<12.3e}", res.re.to_f64());
        }
        println!("   t={tv}");
    }
}
