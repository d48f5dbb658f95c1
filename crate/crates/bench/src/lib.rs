// placeholder; the crate exists for its criterion benches
