use partasym_core::asym::{nsp_phi2, nsp_phi_k, nsp_phi_k_parts};

fn main() {
    for (r, n) in [(12u32, 1200u64), (4, 100)] {
        let d = 50;
        let general = nsp_phi_k(r, n, 2, 16, d);
        let closed = nsp_phi2(r, n, 16, d);
        println!("r={r} n={n}");
        println!("  general {}", general.to_decimal_string(30));
        println!("  closed  {}", closed.to_decimal_string(30));
        for (h, v) in nsp_phi_k_parts(r, n, 2, 16, d) {
            println!("  part h={h}: {}", v.to_decimal_string(30));
        }
    }
}
