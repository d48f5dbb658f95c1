use partasym_core::reference::{reproduce_at, Table};
use std::time::Instant;

fn main() {
    for table in Table::all() {
        let t0 = Instant::now();
        let rows = reproduce_at(table, 0);
        let dt0 = t0.elapsed();
        let t1 = Instant::now();
        let rows20 = reproduce_at(table, 20);
        let dt1 = t1.elapsed();
        let fails = rows.iter().filter(|r| !r.pass).count() + rows20.iter().filter(|r| !r.pass).count();
        println!("{:<10} +0: {:>7.2?}  +20: {:>7.2?}  fails {}", table.name(), dt0, dt1, fails);
    }
}
