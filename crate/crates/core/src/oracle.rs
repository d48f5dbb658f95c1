//! Ground-truth coefficient tables for the six generating functions,
//! by factor-at-a-time prefix recurrences over big integers.

use crate::families::Family;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

#[derive(Clone, Debug)]
pub struct CountTable {
    pub family: Family,
    pub coeffs: Vec<BigUint>,
}

impl CountTable {
    pub fn n_max(&self) -> u64 {
        self.coeffs.len() as u64 - 1
    }

    pub fn get(&self, n: u64) -> &BigUint {
        &self.coeffs[n as usize]
    }
}

/// Exact coefficients a_0..a_N of prod_m (1 - x^m)^(-mu(m)).
/// One prefix-recurrence pass per unit of multiplicity.
pub fn count_table(family: &Family, n_max: u64) -> CountTable {
    let n = n_max as usize;
    let mut a = vec![BigUint::zero(); n + 1];
    a[0] = BigUint::one();
    for m in 1..=n {
        let mu = family.multiplicity(m as u64);
        debug_assert!(mu >= 0, "all six products have nonnegative exponents");
        for _ in 0..mu {
            for i in m..=n {
                let add = a[i - m].clone();
                a[i] += add;
            }
        }
    }
    for i in 2..=n {
        assert!(a[i] >= a[i - 1], "counts must be nondecreasing from n = 2");
    }
    CountTable {
        family: family.clone(),
        coeffs: a,
    }
}

/// Single-coefficient convenience over the process cache.
pub fn count(family: &Family, n: u64) -> BigUint {
    cached_table(family, n).get(n).clone()
}

fn process_cache() -> &'static Mutex<HashMap<(String, u64), CountTable>> {
    static CACHE: OnceLock<Mutex<HashMap<(String, u64), CountTable>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Table from the process-local cache, building (and caching) on miss.
/// A cached table longer than requested is reused as-is.
pub fn cached_table(family: &Family, n_max: u64) -> CountTable {
    let key = family.id_string();
    {
        let cache = process_cache().lock().unwrap();
        for ((f, n), t) in cache.iter() {
            if *f == key && *n >= n_max {
                return t.clone();
            }
        }
    }
    let t = count_table(family, n_max);
    process_cache()
        .lock()
        .unwrap()
        .insert((key, n_max), t.clone());
    t
}

fn cache_file_name(family: &Family, n_max: u64) -> String {
    let params = match family {
        Family::Nsp { r } => format!("r{r}"),
        _ => "-".to_string(),
    };
    format!("{}_{}_{}.counts", family.name(), params, n_max)
}

/// Write a table as plain text: header line `family params N`, then
/// N+1 decimal integers, one per line.
pub fn write_table(table: &CountTable, dir: &Path) -> std::io::Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join(cache_file_name(&table.family, table.n_max()));
    let mut out = Vec::new();
    let params = match &table.family {
        Family::Nsp { r } => r.to_string(),
        _ => "-".to_string(),
    };
    writeln!(out, "{} {} {}", table.family.name(), params, table.n_max())?;
    for c in &table.coeffs {
        writeln!(out, "{c}")?;
    }
    std::fs::write(&path, out)?;
    Ok(path)
}

pub fn read_table(path: &Path) -> std::io::Result<CountTable> {
    let f = std::fs::File::open(path)?;
    let mut lines = BufReader::new(f).lines();
    let header = lines
        .next()
        .ok_or_else(|| bad_data("empty table file"))??;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 3 {
        return Err(bad_data("header must be `family params N`"));
    }
    let mut family =
        Family::from_str(parts[0]).map_err(|e| bad_data(&e.to_string()))?;
    if let Family::Nsp { ref mut r } = family {
        *r = parts[1]
            .parse()
            .map_err(|_| bad_data("bad r parameter in header"))?;
    }
    let n_max: u64 = parts[2].parse().map_err(|_| bad_data("bad N in header"))?;
    let mut coeffs = Vec::with_capacity(n_max as usize + 1);
    for line in lines {
        let line = line?;
        let s = line.trim();
        if s.is_empty() {
            continue;
        }
        let v = BigUint::from_str(s).map_err(|_| bad_data("bad count line"))?;
        coeffs.push(v);
    }
    if coeffs.len() != n_max as usize + 1 {
        return Err(bad_data("count of lines does not match header N"));
    }
    Ok(CountTable { family, coeffs })
}

/// Table with optional on-disk cache under `dir`; files round-trip
/// byte-exactly through `write_table`/`read_table`.
pub fn disk_cached_table(family: &Family, n_max: u64, dir: &Path) -> std::io::Result<CountTable> {
    let path = dir.join(cache_file_name(family, n_max));
    if path.exists() {
        let t = read_table(&path)?;
        if t.family == *family && t.n_max() == n_max {
            return Ok(t);
        }
    }
    let t = cached_table(family, n_max);
    write_table(&t, dir)?;
    Ok(t)
}

fn bad_data(msg: &str) -> std::io::Error {
    std::io::Error::new(std::io::ErrorKind::InvalidData, msg)
}

/// Decimal rendering with digits grouped in fives from the right,
/// matching the typography of the reference tables.
pub fn grouped_decimal(v: &BigUint) -> String {
    let s = v.to_string();
    let mut out = String::with_capacity(s.len() + s.len() / 5 + 1);
    let lead = s.len() % 5;
    for (i, ch) in s.chars().enumerate() {
        if i != 0 && (i + 5 - lead) % 5 == 0 {
            out.push(' ');
        }
        out.push(ch);
    }
    out
}
