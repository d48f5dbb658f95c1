//! The six generating-function families and their shared descriptors.
//!
//! Every family is an infinite product prod_m (1 - x^m)^(-mu(m)) with a
//! nonnegative integer multiplicity mu, which is what both the exact
//! counting tables and the singular expansions consume.

use num_rational::BigRational;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// partitions with every part >= r
    Nsp { r: u32 },
    /// overpartition style: (1+x^j)/(1-x^j) over all j
    Basic,
    /// F(x)^3 F(x^3) / F(x^9)^3
    Colored3,
    /// prod (1-x^j)^(-floor((j+1)/2))
    PlaneStrict,
    /// multiplicity = number of square divisors of m
    Prings,
    /// parts restricted to triangular numbers
    Concave,
}

impl Family {
    /// Multiplicity of (1 - x^m)^(-mu) in the product, m >= 1.
    pub fn multiplicity(&self, m: u64) -> i64 {
        match self {
            Family::Nsp { r } => {
                if m >= *r as u64 {
                    1
                } else {
                    0
                }
            }
            Family::Basic => {
                if m % 2 == 1 {
                    2
                } else {
                    1
                }
            }
            Family::Colored3 => {
                let mut e = 3;
                if m % 3 == 0 {
                    e += 1;
                }
                if m % 9 == 0 {
                    e -= 3;
                }
                e
            }
            Family::PlaneStrict => ((m + 1) / 2) as i64,
            Family::Prings => square_divisors(m),
            Family::Concave => {
                if is_triangular(m) {
                    1
                } else {
                    0
                }
            }
        }
    }

    /// Exact shift used in the saddle variable: xi = n + shift.
    /// The principal route for the no-small-parts family uses a deeper
    /// shift that depends on r; the numeric route for k >= 3 uses -1/24.
    pub fn xi_shift(&self) -> BigRational {
        use crate::hp::real::ratio;
        match self {
            Family::Nsp { r } => {
                // -(B_2(r))/4 = -(r^2 - r + 1/6)/4
                let r = *r as i64;
                ratio(-(6 * (r * r - r) + 1), 24)
            }
            Family::Basic => ratio(0, 1),
            Family::Colored3 => ratio(7, 8),
            Family::PlaneStrict => ratio(1, 48),
            Family::Prings => ratio(0, 1),
            Family::Concave => ratio(0, 1),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Nsp { .. } => "nsp",
            Family::Basic => "basic",
            Family::Colored3 => "colored3",
            Family::PlaneStrict => "planestrict",
            Family::Prings => "prings",
            Family::Concave => "concave",
        }
    }

    /// Cache/file identity including parameters.
    pub fn id_string(&self) -> String {
        match self {
            Family::Nsp { r } => format!("nsp r={r}"),
            _ => self.name().to_string(),
        }
    }

    pub fn all_defaults() -> Vec<Family> {
        vec![
            Family::Nsp { r: 12 },
            Family::Basic,
            Family::Colored3,
            Family::PlaneStrict,
            Family::Prings,
            Family::Concave,
        ]
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Nsp { r } => write!(f, "nsp(r={r})"),
            _ => write!(f, "{}", self.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseFamilyError(pub String);

impl fmt::Display for ParseFamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown family: {}", self.0)
    }
}

impl std::error::Error for ParseFamilyError {}

impl FromStr for Family {
    type Err = ParseFamilyError;
    /// Parses the bare name; nsp defaults to r=2 until --r overrides it.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "nsp" => Ok(Family::Nsp { r: 2 }),
            "basic" => Ok(Family::Basic),
            "colored3" => Ok(Family::Colored3),
            "planestrict" => Ok(Family::PlaneStrict),
            "prings" => Ok(Family::Prings),
            "concave" => Ok(Family::Concave),
            other => Err(ParseFamilyError(other.to_string())),
        }
    }
}

/// Number of perfect-square divisors of m.
pub fn square_divisors(m: u64) -> i64 {
    let mut c = 0;
    let mut k = 1u64;
    while k * k <= m {
        if m % (k * k) == 0 {
            c += 1;
        }
        k += 1;
    }
    c
}

pub fn is_triangular(m: u64) -> bool {
    // m = j(j+1)/2 for some j >= 1
    let j = ((2.0 * m as f64).sqrt()) as u64;
    for cand in j.saturating_sub(2)..=j + 2 {
        if cand >= 1 && cand * (cand + 1) / 2 == m {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicities_are_nonnegative() {
        for fam in Family::all_defaults() {
            for m in 1..=2000u64 {
                assert!(fam.multiplicity(m) >= 0, "{fam} at {m}");
            }
        }
    }

    #[test]
    fn colored3_pattern() {
        let f = Family::Colored3;
        assert_eq!(f.multiplicity(1), 3);
        assert_eq!(f.multiplicity(3), 4);
        assert_eq!(f.multiplicity(9), 1);
        assert_eq!(f.multiplicity(18), 1);
        assert_eq!(f.multiplicity(12), 4);
    }

    #[test]
    fn triangular_detection() {
        let tri: Vec<u64> = (1..=20).map(|j| j * (j + 1) / 2).collect();
        for m in 1..=210 {
            assert_eq!(is_triangular(m), tri.contains(&m), "m={m}");
        }
    }
}
