use partasym_core::reference::{reproduce, Table};
use std::time::Instant;

fn main() {
    let mut failures = 0;
    for table in Table::all() {
        let t0 = Instant::now();
        let rows = reproduce(table);
        println!("== {} ({:.2?})", table.name(), t0.elapsed());
        for r in rows {
            println!("{}", r.line());
            if !r.pass {
                failures += 1;
            }
        }
    }
    println!("total failures: {failures}");
    std::process::exit(if failures == 0 { 0 } else { 1 });
}
