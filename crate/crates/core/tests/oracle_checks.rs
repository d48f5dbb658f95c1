//! Ground-truth checks on the coefficient tables: a convolution
//! identity against the unrestricted partition numbers, a parity law,
//! the prings exponent computed by independent definitions, and
//! exhaustive enumeration of every family at small n.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use partasym_core::{count_table, Family};

/// Coefficients of prod_{j=1}^{max_part} (1 - x^j)^(-1) up to x^n,
/// the classic bounded-part recurrence.
fn restricted_parts_table(max_part: u64, n: u64) -> Vec<BigUint> {
    let len = n as usize + 1;
    let mut c = vec![BigUint::zero(); len];
    c[0] = BigUint::one();
    for m in 1..=max_part as usize {
        for i in m..len {
            let add = c[i - m].clone();
            c[i] += add;
        }
    }
    c
}

#[test]
fn nsp_convolution_with_bounded_parts_gives_all_partitions() {
    for r in [2u32, 5, 12] {
        let nn = 300u64;
        let tail = count_table(&Family::Nsp { r }, nn);
        let head = restricted_parts_table(r as u64 - 1, nn);
        let all = restricted_parts_table(nn, nn);
        for n in 0..=nn as usize {
            let mut conv = BigUint::zero();
            for k in 0..=n {
                conv += tail.get(k as u64) * &head[n - k];
            }
            assert_eq!(conv, all[n], "r={r}, n={n}");
        }
    }
}

#[test]
fn basic_counts_are_even_past_zero() {
    let table = count_table(&Family::Basic, 2000);
    let two = BigUint::from(2u32);
    for n in 1..=2000u64 {
        assert!(
            (table.get(n) % &two).is_zero(),
            "a_{n} = {} is odd",
            table.get(n)
        );
    }
}

#[test]
fn prings_exponent_two_definitions_agree() {
    for m in 1..=10_000u64 {
        // all divisors of m that are perfect squares
        let is_square = |q: u64| q.isqrt().pow(2) == q;
        let mut by_divisor_scan = 0i64;
        let mut d = 1u64;
        while d * d <= m {
            if m % d == 0 {
                if is_square(d) {
                    by_divisor_scan += 1;
                }
                if d != m / d && is_square(m / d) {
                    by_divisor_scan += 1;
                }
            }
            d += 1;
        }
        // pairs (j, k) with j k^2 = m
        let mut by_pairs = 0i64;
        let mut k = 1u64;
        while k * k <= m {
            if m % (k * k) == 0 {
                by_pairs += 1;
            }
            k += 1;
        }
        let mu = Family::Prings.multiplicity(m);
        assert_eq!(by_divisor_scan, mu, "divisor scan at m={m}");
        assert_eq!(by_pairs, mu, "pair count at m={m}");
    }
}

fn multichoose(colors: u64, picks: u64) -> u128 {
    // ways to pick `picks` items from `colors` kinds with repetition
    let mut v: u128 = 1;
    for i in 0..picks {
        v = v * (colors + i) as u128 / (i + 1) as u128;
    }
    v
}

/// Weighted multiset enumeration: partitions into the given part sizes,
/// each size carrying its own color count.
fn enumerate(rem: u64, parts: &[(u64, u64)]) -> u128 {
    if rem == 0 {
        return 1;
    }
    let Some(&(size, colors)) = parts.first() else {
        return 0;
    };
    let mut total = 0u128;
    let mut used = 0u64;
    while used * size <= rem {
        total += multichoose(colors, used) * enumerate(rem - used * size, &parts[1..]);
        used += 1;
    }
    total
}

/// Overpartitions counted from the definition: each partition of n
/// contributes 2^(number of distinct part sizes).
fn overpartitions(rem: u64, max_part: u64) -> u128 {
    if rem == 0 {
        return 1;
    }
    let mut total = 0u128;
    for size in 1..=max_part.min(rem) {
        let mut used = 1u64;
        while used * size <= rem {
            total += 2 * overpartitions(rem - used * size, size - 1);
            used += 1;
        }
    }
    total
}

#[test]
fn small_counts_match_exhaustive_enumeration() {
    let nn = 30u64;
    let sizes = |colors: fn(u64) -> u64| -> Vec<(u64, u64)> {
        (1..=nn).filter(|m| colors(*m) > 0).map(|m| (m, colors(m))).collect()
    };
    let cases: Vec<(Family, Vec<(u64, u64)>)> = vec![
        (Family::Nsp { r: 2 }, sizes(|m| u64::from(m >= 2))),
        (Family::Nsp { r: 3 }, sizes(|m| u64::from(m >= 3))),
        (Family::Nsp { r: 12 }, sizes(|m| u64::from(m >= 12))),
        (
            Family::Colored3,
            sizes(|m| {
                // net exponent of (1-x^m) in (1-x^9j)^3 / ((1-x^3j)(1-x^j)^3)
                (3 + u64::from(m % 3 == 0)) - 3 * u64::from(m % 9 == 0)
            }),
        ),
        (Family::PlaneStrict, sizes(|m| (m + 1) / 2)),
        (
            Family::Prings,
            sizes(|m| {
                let mut c = 0;
                let mut k = 1;
                while k * k <= m {
                    let mut j = 1;
                    while j * k * k < m {
                        j += 1;
                    }
                    if j * k * k == m {
                        c += 1;
                    }
                    k += 1;
                }
                c
            }),
        ),
        (
            Family::Concave,
            (1..=nn)
                .map(|j| (j * (j + 1) / 2, 1))
                .filter(|(s, _)| *s <= nn)
                .collect(),
        ),
    ];
    for (family, parts) in &cases {
        let table = count_table(family, nn);
        for n in 0..=nn {
            let brute = enumerate(n, parts);
            assert_eq!(
                table.get(n),
                &BigUint::from(brute),
                "{family:?} at n={n}"
            );
        }
    }
    let table = count_table(&Family::Basic, nn);
    for n in 0..=nn {
        let brute = overpartitions(n, n.max(1));
        assert_eq!(table.get(n), &BigUint::from(brute), "basic at n={n}");
    }
    // the hand-countable anchors
    assert_eq!(count_table(&Family::Nsp { r: 2 }, 5).get(5), &BigUint::from(2u32));
    assert_eq!(count_table(&Family::Concave, 6).get(6), &BigUint::from(4u32));
    assert_eq!(count_table(&Family::Basic, 2).get(2), &BigUint::from(4u32));
}
