//! Bundled reference tables and the machinery that regenerates them.
//!
//! Each table is a list of rows with a stored expected value. Rows marked
//! `Reference` reproduce a quoted value as printed; rows marked `Resolved`
//! carry a corrected value where the quoted row is inconsistent with its
//! own companion rows (the note says what the quoted row was and which
//! identity pins the correction). Nothing is silently swapped: every
//! quoted reading is still accounted for, either by a Reference row or by
//! a reproduction-identity row that reassembles the quoted value.

use crate::asym::colored3::{colored3_phi_variant, Colored3Variant};
use crate::asym::concave::concave_q;
use crate::asym::estimate::{default_digits, estimate, petersson_residual_exact, EstimateConfig};
use crate::asym::plane::{plane_phi1, plane_phi2, PlaneSecondVariant};
use crate::asym::prings::{prings_closed_form, prings_phi};
use crate::dedekind::{a_tilde, coprime_residues, dedekind_sum, t_sum};
use crate::families::Family;
use crate::hp::bernoulli::bernoulli_poly;
use crate::hp::bessel::bessel_i;
use crate::hp::gamma::gamma_real;
use crate::hp::real::{cos_pi_ratio, ratio, ratio_int, Real};
use crate::hp::zeta::{zeta_neg_int_exact, zeta_q};
use crate::oracle::count;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::str::FromStr;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Provenance {
    /// reproduces a quoted value as printed
    Reference,
    /// corrected value, pinned by a reproduction identity; see the note
    Resolved,
}

impl Provenance {
    pub fn tag(self) -> &'static str {
        match self {
            Provenance::Reference => "reference",
            Provenance::Resolved => "resolved",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Table {
    Sec2,
    Sec3,
    Sec4,
    Sec5,
    Sec6,
    Sec7,
    Dedekind,
    Identities,
}

impl Table {
    pub fn parse(s: &str) -> Option<Table> {
        Some(match s {
            "sec2" => Table::Sec2,
            "sec3" => Table::Sec3,
            "sec4" => Table::Sec4,
            "sec5" => Table::Sec5,
            "sec6" => Table::Sec6,
            "sec7" => Table::Sec7,
            "dedekind" => Table::Dedekind,
            "identities" => Table::Identities,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Table::Sec2 => "sec2",
            Table::Sec3 => "sec3",
            Table::Sec4 => "sec4",
            Table::Sec5 => "sec5",
            Table::Sec6 => "sec6",
            Table::Sec7 => "sec7",
            Table::Dedekind => "dedekind",
            Table::Identities => "identities",
        }
    }

    /// One line of help text per table.
    pub fn describe(self) -> &'static str {
        match self {
            Table::Sec2 => "partitions with parts >= 12 at n = 1200: 16 terms, total, exact count",
            Table::Sec3 => "overpartition-style family at n = 1000: odd terms, total, exact count",
            Table::Sec4 => "3-colored family at n = 200: 7 terms, total, exact count",
            Table::Sec5 => "strict plane-partition family at n = 200: two terms and digit counts",
            Table::Sec6 => "square-divisor-weighted family at n = 200: two terms, closed form",
            Table::Sec7 => "triangular-parts family at n = 2000: q0..q4, total, exact count",
            Table::Dedekind => "exact Dedekind sums and root-of-unity weight sums",
            Table::Identities => "gamma, Bessel, zeta, Bernoulli, reciprocity, binomial-zeta",
        }
    }

    pub fn all() -> [Table; 8] {
        [
            Table::Sec2,
            Table::Sec3,
            Table::Sec4,
            Table::Sec5,
            Table::Sec6,
            Table::Sec7,
            Table::Dedekind,
            Table::Identities,
        ]
    }
}

#[derive(Clone, Debug)]
pub struct RowReport {
    pub id: &'static str,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub provenance: Provenance,
    pub note: &'static str,
}

impl RowReport {
    pub fn line(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let mut s = format!(
            "{status}  {:<14} expected {}  got {}  [{}]",
            self.id,
            self.expected,
            self.computed,
            self.provenance.tag()
        );
        if !self.note.is_empty() {
            s.push_str("\n      note: ");
            s.push_str(self.note);
        }
        s
    }
}

pub fn reproduce(table: Table) -> Vec<RowReport> {
    reproduce_at(table, 0)
}

/// Same tables with every working precision raised by `extra_digits`;
/// the robustness check reruns everything at +20.
pub fn reproduce_at(table: Table, extra_digits: u32) -> Vec<RowReport> {
    match table {
        Table::Sec2 => sec2_rows(extra_digits),
        Table::Sec3 => sec3_rows(extra_digits),
        Table::Sec4 => sec4_rows(extra_digits),
        Table::Sec5 => sec5_rows(extra_digits),
        Table::Sec6 => sec6_rows(extra_digits),
        Table::Sec7 => sec7_rows(extra_digits),
        Table::Dedekind => dedekind_rows(extra_digits),
        Table::Identities => identities_rows(extra_digits),
    }
}

fn tol_decimals(tol: &str) -> usize {
    let t: f64 = tol.parse().expect("tolerance literal");
    ((-t.log10()).ceil() as i64 + 3).clamp(3, 24) as usize
}

fn real_row(
    id: &'static str,
    computed: &Real,
    expected: &str,
    tol: &str,
    provenance: Provenance,
    note: &'static str,
) -> RowReport {
    let d = computed.digits().max(40);
    let exp = Real::parse(expected, d);
    let t = Real::parse(tol, d);
    let diff = (computed - &exp).abs();
    let pass = diff.cmp_real(&t) != std::cmp::Ordering::Greater;
    RowReport {
        id,
        expected: expected.to_string(),
        computed: computed.to_fixed_string(tol_decimals(tol)),
        pass,
        provenance,
        note,
    }
}

fn int_row(
    id: &'static str,
    computed: &BigUint,
    expected: &str,
    provenance: Provenance,
    note: &'static str,
) -> RowReport {
    let exp = BigUint::from_str(expected).expect("integer literal");
    RowReport {
        id,
        expected: expected.to_string(),
        computed: computed.to_string(),
        pass: computed == &exp,
        provenance,
        note,
    }
}

fn rational_row(
    id: &'static str,
    computed: &BigRational,
    expected: &str,
    provenance: Provenance,
    note: &'static str,
) -> RowReport {
    let exp = parse_rational(expected);
    RowReport {
        id,
        expected: expected.to_string(),
        computed: computed.to_string(),
        pass: computed == &exp,
        provenance,
        note,
    }
}

fn parse_rational(s: &str) -> BigRational {
    match s.split_once('/') {
        Some((n, d)) => BigRational::new(
            BigInt::from_str(n).expect("numerator"),
            BigInt::from_str(d).expect("denominator"),
        ),
        None => BigRational::from_integer(BigInt::from_str(s).expect("integer")),
    }
}

/// Number of leading decimal digits shared by the rounded value and the
/// exact count; the digit-count claims in the quoted tables use this.
pub fn leading_digit_agreement(value: &Real, exact: &BigUint) -> u32 {
    let a = value.round_to_bigint().magnitude().to_string();
    let b = exact.to_string();
    if a.len() != b.len() {
        return 0;
    }
    a.bytes().zip(b.bytes()).take_while(|(x, y)| x == y).count() as u32
}

fn digits_row(
    id: &'static str,
    value: &Real,
    exact: &BigUint,
    expected: u32,
    min_ok: u32,
    provenance: Provenance,
    note: &'static str,
) -> RowReport {
    let got = leading_digit_agreement(value, exact);
    RowReport {
        id,
        expected: format!("{expected} (accept >= {min_ok})"),
        computed: got.to_string(),
        pass: got >= min_ok,
        provenance,
        note,
    }
}

fn bound_row(
    id: &'static str,
    computed: &Real,
    bound: &str,
    provenance: Provenance,
    note: &'static str,
) -> RowReport {
    let d = computed.digits().max(40);
    let b = Real::parse(bound, d);
    let pass = computed.abs().cmp_real(&b) != std::cmp::Ordering::Greater;
    RowReport {
        id,
        expected: format!("|x| <= {bound}"),
        computed: computed.to_decimal_string(3),
        pass,
        provenance,
        note,
    }
}

fn term<'a>(b: &'a crate::asym::estimate::PhiBreakdown, k: u32) -> &'a Real {
    &b.terms
        .iter()
        .find(|(kk, _)| *kk == k)
        .expect("term present")
        .1
}

fn config(kmax: u32, extra: u32, family: &Family, n: u64) -> EstimateConfig {
    EstimateConfig {
        kmax,
        j_terms: 16,
        precision: Some(default_digits(family, n) + extra),
        double_run: false,
    }
}

fn sec2_rows(extra: u32) -> Vec<RowReport> {
    let fam = Family::Nsp { r: 12 };
    let b = estimate(&fam, 1200, &config(16, extra, &fam, 1200));
    vec![
        real_row(
            "phi1",
            term(&b, 1),
            "49001590791729483844367842.13295",
            "0.01",
            Provenance::Reference,
            "",
        ),
        real_row("phi2", term(&b, 2), "332870971879.70797", "0.01", Provenance::Reference, ""),
        real_row("phi3", term(&b, 3), "12491942.03287", "0.01", Provenance::Reference, ""),
        real_row("phi4", term(&b, 4), "51637.99481", "0.01", Provenance::Reference, ""),
        real_row("phi5", term(&b, 5), "661.16304", "0.01", Provenance::Reference, ""),
        real_row(
            "phi6",
            term(&b, 6),
            "164.18289",
            "0.001",
            Provenance::Resolved,
            "quoted as 164.15289; the quoted grand total only reproduces with \
             this value (one digit slipped), see the sum row",
        ),
        real_row("phi7", term(&b, 7), "-8.29306", "0.001", Provenance::Reference, ""),
        real_row("phi8", term(&b, 8), "3.22670", "0.001", Provenance::Reference, ""),
        real_row("phi9", term(&b, 9), "-0.19405", "0.001", Provenance::Reference, ""),
        real_row("phi10", term(&b, 10), "0.23922", "0.001", Provenance::Reference, ""),
        real_row("phi11", term(&b, 11), "0.00072", "0.001", Provenance::Reference, ""),
        real_row("phi12", term(&b, 12), "0.34102", "0.001", Provenance::Reference, ""),
        real_row("phi13", term(&b, 13), "0.89399", "0.001", Provenance::Reference, ""),
        real_row(
            "phi14",
            term(&b, 14),
            "-0.74488",
            "0.001",
            Provenance::Resolved,
            "quoted as -0.64967, which is the h = 1 channel alone; the three \
             channels are -0.64967 + 0.03708 - 0.13228",
        ),
        real_row("phi15", term(&b, 15), "0.94330", "0.001", Provenance::Reference, ""),
        real_row("phi16", term(&b, 16), "0.44736", "0.001", Provenance::Reference, ""),
        real_row(
            "sum",
            &b.total,
            "49001590791729816727884124.07500",
            "0.01",
            Provenance::Resolved,
            "quoted as ...84124.17000, the total under the h = 1-only reading \
             of term 14; both readings round to the exact count",
        ),
        int_row(
            "exact",
            b.exact.as_ref().expect("exact attached"),
            "49001590791729816727884124",
            Provenance::Reference,
            "",
        ),
    ]
}

fn sec3_rows(extra: u32) -> Vec<RowReport> {
    let fam = Family::Basic;
    let b = estimate(&fam, 1000, &config(13, extra, &fam, 1000));
    vec![
        real_row(
            "phi1",
            term(&b, 1),
            "1729358213749333758244155698123024567360.51591",
            "0.01",
            Provenance::Reference,
            "",
        ),
        bound_row("phi3", term(&b, 3), "1e-20", Provenance::Reference, "weight sum vanishes"),
        real_row("phi5", term(&b, 5), "50530.87514", "0.001", Provenance::Reference, ""),
        real_row("phi7", term(&b, 7), "-305.16980", "0.001", Provenance::Reference, ""),
        bound_row("phi9", term(&b, 9), "1e-20", Provenance::Reference, "weight sum vanishes"),
        real_row("phi11", term(&b, 11), "-1.78371", "0.001", Provenance::Reference, ""),
        real_row("phi13", term(&b, 13), "-0.43964", "0.001", Provenance::Reference, ""),
        real_row(
            "sum",
            &b.total,
            "1729358213749333758244155698123024617583.99790",
            "0.01",
            Provenance::Reference,
            "",
        ),
        int_row(
            "exact",
            b.exact.as_ref().expect("exact attached"),
            "1729358213749333758244155698123024617584",
            Provenance::Resolved,
            "the count appears twice in the quoted material, once with digit \
             block 58213 and once with 58313; the coefficient table pins \
             58213, and only that reading matches the quoted error",
        ),
        real_row(
            "error",
            b.error.as_ref().expect("error attached"),
            "-0.0021",
            "0.001",
            Provenance::Reference,
            "",
        ),
    ]
}

fn sec4_rows(extra: u32) -> Vec<RowReport> {
    let fam = Family::Colored3;
    let b = estimate(&fam, 200, &config(7, extra, &fam, 200));
    let d = b.digits;
    let phi2_single = colored3_phi_variant(200, 2, Colored3Variant::Reference, d);
    let phi7_quoted = colored3_phi_variant(200, 7, Colored3Variant::Reference, d);
    let quoted_total = &(&b.total - term(&b, 2)) + &(&phi2_single + &phi7_quoted);
    let exact_real = Real::from_bigint(&BigInt::from(b.exact.clone().expect("exact attached")), d);
    let quoted_error = &quoted_total - &exact_real;
    vec![
        real_row(
            "phi1",
            term(&b, 1),
            "174747949051235199585303.8855",
            "0.01",
            Provenance::Reference,
            "",
        ),
        real_row(
            "phi2",
            term(&b, 2),
            "2577834264.8962",
            "0.001",
            Provenance::Resolved,
            "quoted as 2577834263.0509, which keeps only the first of the \
             formula's two exponential channels; see phi2.single",
        ),
        real_row(
            "phi2.single",
            &phi2_single,
            "2577834263.0509",
            "0.001",
            Provenance::Reference,
            "first channel alone, reproducing the quoted line",
        ),
        real_row("phi3", term(&b, 3), "-297748.8532", "0.001", Provenance::Reference, ""),
        real_row("phi4", term(&b, 4), "474.3640", "0.001", Provenance::Reference, ""),
        bound_row("phi5", term(&b, 5), "1e-20", Provenance::Reference, "quoted as 0"),
        real_row("phi6", term(&b, 6), "5.5359", "0.001", Provenance::Reference, ""),
        bound_row(
            "phi7",
            term(&b, 7),
            "1e-20",
            Provenance::Resolved,
            "quoted as 0.5261 with a second-cosine phase that disagrees with \
             the tabulated weight sum by 3 pi / 7; the tabulated phase makes \
             the term vanish, see phi7.quoted",
        ),
        real_row(
            "phi7.quoted",
            &phi7_quoted,
            "0.5261",
            "0.001",
            Provenance::Reference,
            "same term with the quoted phase, reproducing the quoted line",
        ),
        real_row(
            "sum",
            &b.total,
            "174747949051237777122299.8284",
            "0.01",
            Provenance::Resolved,
            "quoted total ...22298.5093 and error -1.4907 correspond to the \
             phi2.single and phi7.quoted readings, see error.quoted",
        ),
        real_row(
            "error.quoted",
            &quoted_error,
            "-1.4907",
            "0.01",
            Provenance::Reference,
            "total assembled from the quoted readings, minus the exact count",
        ),
        int_row(
            "exact",
            b.exact.as_ref().expect("exact attached"),
            "174747949051237777122300",
            Provenance::Reference,
            "",
        ),
    ]
}

fn sec5_rows(extra: u32) -> Vec<RowReport> {
    let fam = Family::PlaneStrict;
    let d = default_digits(&fam, 200) + extra;
    let p1 = plane_phi1(200, 8, 600, d);
    let p2 = plane_phi2(200, 4, 600, PlaneSecondVariant::Resolved, d);
    let p2_flip = plane_phi2(200, 4, 600, PlaneSecondVariant::Reference, d);
    let total = &p1 + &p2;
    let quoted_total = &p1 + &p2_flip;
    let exact = count(&fam, 200);
    vec![
        real_row(
            "phi1",
            &p1,
            "23318651621796125931636.4295",
            "0.01",
            Provenance::Reference,
            "eight correction terms",
        ),
        real_row(
            "phi2",
            &p2,
            "228156918.1809",
            "0.01",
            Provenance::Resolved,
            "quoted as 228149810.1011, assembled with the sign of one \
             quadratic correction term flipped; see phi2.quoted",
        ),
        real_row(
            "phi2.quoted",
            &p2_flip,
            "228149810.1011",
            "0.05",
            Provenance::Reference,
            "flipped-sign assembly, reproducing the quoted line to 2e-2",
        ),
        real_row(
            "sum",
            &total,
            "23318651621796354088554.6104",
            "0.1",
            Provenance::Resolved,
            "the quoted total pairs with phi2.quoted, see sum.quoted",
        ),
        real_row(
            "sum.quoted",
            &quoted_total,
            "23318651621796354081446.5432",
            "0.05",
            Provenance::Reference,
            "",
        ),
        int_row(
            "exact",
            &exact,
            "23318651621796353657014",
            Provenance::Reference,
            "",
        ),
        digits_row(
            "phi1.digits",
            &p1,
            &exact,
            14,
            14,
            Provenance::Reference,
            "claimed 14 correct digits out of 23",
        ),
        digits_row(
            "sum.digits",
            &total,
            &exact,
            16,
            15,
            Provenance::Resolved,
            "claimed 17 correct digits out of 23; the corrected and the \
             quoted assembly both agree with the count in 16 leading digits",
        ),
    ]
}

fn sec6_rows(extra: u32) -> Vec<RowReport> {
    let fam = Family::Prings;
    let d = default_digits(&fam, 200) + extra;
    let p1 = prings_phi(200, 1, 60, d);
    let p2 = prings_phi(200, 2, 60, d);
    let total = &p1 + &p2;
    let exact = count(&fam, 200);
    let closed = prings_closed_form(200, d);
    let factor = closed.div(&Real::parse("280000000000000", d));
    let factor_ok = factor.cmp_real(&Real::parse("0.5", d)) == std::cmp::Ordering::Greater
        && factor.cmp_real(&Real::parse("2", d)) == std::cmp::Ordering::Less;
    vec![
        real_row(
            "phi1",
            &p1,
            "261229556268268.8137",
            "0.01",
            Provenance::Resolved,
            "quoted as 261229585668813.6838, inconsistent with the quoted \
             total: quoted total minus quoted phi2 equals this row exactly",
        ),
        real_row("phi2", &p2, "29018442.4542", "0.001", Provenance::Reference, ""),
        real_row(
            "sum",
            &total,
            "261229585286711.2679",
            "0.001",
            Provenance::Reference,
            "",
        ),
        int_row("exact", &exact, "261229585686401", Provenance::Reference, ""),
        digits_row(
            "sum.digits",
            &total,
            &exact,
            9,
            8,
            Provenance::Reference,
            "claimed 9 correct digits out of 15",
        ),
        RowReport {
            id: "closed",
            expected: "0.28e15 within factor 2".into(),
            computed: closed.to_decimal_string(6),
            pass: factor_ok,
            provenance: Provenance::Reference,
            note: "crude closed-form size estimate",
        },
    ]
}

fn sec7_rows(extra: u32) -> Vec<RowReport> {
    let fam = Family::Concave;
    let d = default_digits(&fam, 2000) + extra;
    let q: Vec<Real> = (0..5).map(|k| concave_q(2000, k, 600, d)).collect();
    let total = q.iter().fold(Real::zero(d), |acc, v| &acc + v);
    let exact = count(&fam, 2000);
    vec![
        real_row(
            "q0",
            &q[0],
            "28369900921440082.213",
            "0.5",
            Provenance::Reference,
            "",
        ),
        real_row(
            "q1",
            &q[1],
            "-583822195256522.313",
            "0.5",
            Provenance::Resolved,
            "quoted as -583822195256521.094, 1.2 away (2e-15 relative, the \
             quoted table's own arithmetic noise); this row is stable under \
             higher-precision reruns, and the quoted total is exactly the sum \
             of the quoted lines, so the 1.2 lives in the quoted q1 itself",
        ),
        real_row("q2", &q[2], "5947214584992.877", "0.5", Provenance::Reference, ""),
        real_row("q3", &q[3], "-80756432951.404", "0.5", Provenance::Reference, ""),
        real_row(
            "q4",
            &q[4],
            "1013524444.7136",
            "0.01",
            Provenance::Resolved,
            "quoted as 1013544447.136 (transposed digits, shifted point); \
             quoted total minus quoted q0..q3 pins 1013524444.715, see \
             q4.implied",
        ),
        real_row(
            "q4.implied",
            &q[4],
            "1013524444.715",
            "0.01",
            Provenance::Reference,
            "expected value derived from the quoted total and quoted q0..q3",
        ),
        real_row(
            "sum",
            &total,
            "27791946197860046.107",
            "1.5",
            Provenance::Resolved,
            "quoted as ...60047.307, the sum of the quoted q lines, 1.2 away \
             through the quoted q1",
        ),
        int_row("exact", &exact, "27791955539139291", Provenance::Reference, ""),
        digits_row(
            "sum.digits",
            &total,
            &exact,
            6,
            6,
            Provenance::Reference,
            "claimed almost 7 correct digits",
        ),
    ]
}

fn dedekind_rows(extra: u32) -> Vec<RowReport> {
    let digits = 60 + extra;
    let mut rows = vec![
        rational_row("s(1,7)", &dedekind_sum(1, 7), "5/14", Provenance::Reference, ""),
        rational_row("s(2,7)", &dedekind_sum(2, 7), "1/14", Provenance::Reference, ""),
        rational_row("s(3,7)", &dedekind_sum(3, 7), "-1/14", Provenance::Reference, ""),
        rational_row("T(1,3)", &t_sum(1, 3), "1/6", Provenance::Reference, ""),
    ];
    for (k, pairs) in atilde_phase_table() {
        let mut max_err = Real::zero(digits);
        for n in 0..=25u64 {
            let direct = a_tilde(k, n, digits);
            let closed = atilde_closed_form(k, n, pairs, digits);
            max_err = max_err.max_real(&(&direct - &closed).abs());
        }
        let id: &'static str = match k {
            3 => "atilde.k3",
            5 => "atilde.k5",
            7 => "atilde.k7",
            9 => "atilde.k9",
            11 => "atilde.k11",
            13 => "atilde.k13",
            _ => unreachable!(),
        };
        let note = if k == 11 {
            "the quoted cosine form omits n in its fifth cosine; encoded here \
             with the n, the reading that matches the exact weight sum"
        } else {
            "exact weight sum against the quoted cosine form, n = 0..25"
        };
        rows.push(bound_row(id, &max_err, "1e-40", Provenance::Reference, note));
    }
    rows
}

/// Quoted cosine forms for the weight sums: for each modulus k, pairs
/// (h, num, den) contributing 2 cos(2 pi n h / k - pi num / den).
fn atilde_phase_table() -> Vec<(u32, &'static [(u32, i64, i64)])> {
    vec![
        (3, &[(1, 1, 6)][..]),
        (5, &[(1, 2, 5), (2, 1, 5)][..]),
        (7, &[(1, 9, 14), (2, 1, 14), (3, 3, 14)][..]),
        (9, &[(1, 8, 9), (2, 4, 9), (4, 2, 9)][..]),
        (
            11,
            &[(1, 25, 22), (2, 7, 22), (3, 1, 22), (4, 9, 22), (5, 5, 22)][..],
        ),
        (
            13,
            &[
                (1, 18, 13),
                (2, 9, 13),
                (3, 6, 13),
                (4, -2, 13),
                (5, 1, 13),
                (6, 3, 13),
            ][..],
        ),
    ]
}

fn atilde_closed_form(k: u32, n: u64, pairs: &[(u32, i64, i64)], digits: u32) -> Real {
    let mut acc = Real::zero(digits);
    for &(h, tn, td) in pairs {
        let q = ratio(2 * (n % k as u64) as i64 * h as i64, k as i64) - ratio(tn, td);
        acc = &acc + &cos_pi_ratio(&q, digits).mul_i64(2);
    }
    acc
}

fn identities_rows(extra: u32) -> Vec<RowReport> {
    let digits = 60 + extra;
    let mut rows = Vec::new();

    // gamma recurrence over a fixed low-discrepancy grid; a deterministic
    // grid keeps runs reproducible without pulling in an RNG
    let mut gamma_err = Real::zero(digits);
    for i in 0..100u64 {
        let x = Real::from_ratio(&grid_ratio(i, 20), digits);
        let g = gamma_real(&x, digits);
        let g1 = gamma_real(&(&x + &Real::from_i64(1, digits)), digits);
        let rel = (&g1 - &(&x * &g)).abs().div(&g1.abs());
        gamma_err = gamma_err.max_real(&rel);
    }
    rows.push(bound_row(
        "gamma.recur",
        &gamma_err,
        "1e-45",
        Provenance::Reference,
        "100 points x in (0,20), relative error of G(x+1) = x G(x)",
    ));

    // modified-Bessel three-term recurrence at rational orders
    let mut bessel_err = Real::zero(digits);
    let one = Real::from_i64(1, digits);
    for i in 0..50u64 {
        let nu = grid_ratio(2 * i + 1, 6) - ratio_int(3);
        let z = Real::from_ratio(
            &(grid_ratio(2 * i, 299) / ratio_int(10) + ratio(1, 10)),
            digits,
        );
        let im1 = bessel_i(&(&nu - &ratio_int(1)), &z, digits);
        let ip1 = bessel_i(&(&nu + &ratio_int(1)), &z, digits);
        let lhs = &im1 - &ip1;
        let rhs = bessel_i(&nu, &z, digits)
            .mul(&Real::from_ratio(&(&nu * &ratio_int(2)), digits))
            .div(&z);
        let scale = one.max_real(&im1.abs()).max_real(&ip1.abs());
        let rel = (&lhs - &rhs).abs().div(&scale);
        bessel_err = bessel_err.max_real(&rel);
    }
    rows.push(bound_row(
        "bessel.recur",
        &bessel_err,
        "1e-40",
        Provenance::Reference,
        "50 points, order in (-3,3), argument in (0.1,30), scaled error of \
         I(nu-1) - I(nu+1) = (2 nu / z) I(nu)",
    ));

    // functional equation: s in {2,3,4} reflected onto the exact rational
    // values of the continuation at 1-s
    let mut fe_err = Real::zero(digits);
    for s in 2..=4i64 {
        let zs = zeta_q(&ratio_int(s), digits);
        let pi2 = Real::pi(digits).mul_i64(2);
        let mapped = Real::from_i64(2, digits)
            .mul(&pi2.pow_ratio(&ratio_int(-s), digits))
            .mul(&cos_pi_ratio(&ratio(s, 2), digits))
            .mul(&gamma_real(&Real::from_i64(s, digits), digits))
            .mul(&zs);
        let exact = Real::from_ratio(&zeta_neg_int_exact(&BigInt::from(s - 1)), digits);
        fe_err = fe_err.max_real(&(&mapped - &exact).abs());
    }
    rows.push(bound_row(
        "zeta.reflect",
        &fe_err,
        "1e-48",
        Provenance::Reference,
        "s in {2,3,4} mapped to 1-s against the exact rational values",
    ));

    // Bernoulli polynomial difference identity, exact rationals
    let mut bern_ok = true;
    for m in 1..=12u64 {
        for i in 0..8u64 {
            let x = grid_ratio(7 * m + i, 5) - ratio_int(2);
            let lhs = bernoulli_poly(m, &(&x + &ratio_int(1))) - bernoulli_poly(m, &x);
            let rhs = BigRational::from_integer(m.into()) * pow_rational(&x, m - 1);
            if lhs != rhs {
                bern_ok = false;
            }
        }
    }
    rows.push(RowReport {
        id: "bernoulli.diff",
        expected: "exact equality, m <= 12".into(),
        computed: if bern_ok { "exact" } else { "mismatch" }.into(),
        pass: bern_ok,
        provenance: Provenance::Reference,
        note: "B_m(x+1) - B_m(x) = m x^(m-1) at 96 rational points",
    });

    // reciprocity and antisymmetry over all coprime pairs up to 60, exact
    let mut recip_fail = 0u32;
    let mut antisym_fail = 0u32;
    for k in 2..=60i64 {
        for h in coprime_residues(k as u32) {
            let h = h as i64;
            if h >= k {
                continue;
            }
            let lhs = dedekind_sum(h, k) + dedekind_sum(k, h);
            let rhs = ratio(-1, 4)
                + (ratio(h, k) + ratio(k, h) + BigRational::new(BigInt::one(), (h * k).into()))
                    / ratio_int(12);
            if lhs != rhs {
                recip_fail += 1;
            }
            if dedekind_sum(k - h, k) != -dedekind_sum(h, k) {
                antisym_fail += 1;
            }
        }
    }
    rows.push(RowReport {
        id: "dedekind.recip",
        expected: "0 failures over coprime pairs, k <= 60".into(),
        computed: format!("{recip_fail} failures"),
        pass: recip_fail == 0,
        provenance: Provenance::Reference,
        note: "",
    });
    rows.push(RowReport {
        id: "dedekind.antisym",
        expected: "0 failures over coprime pairs, k <= 60".into(),
        computed: format!("{antisym_fail} failures"),
        pass: antisym_fail == 0,
        provenance: Provenance::Reference,
        note: "",
    });

    // the binomial-zeta cancellation behind the truncated expansions,
    // exact rational residuals
    let mut binzeta_fail = 0u32;
    for k in 1..=10u32 {
        if !petersson_residual_exact(k).is_zero() {
            binzeta_fail += 1;
        }
    }
    rows.push(RowReport {
        id: "binzeta.k1-10",
        expected: "0 (exact), k = 1..10".into(),
        computed: format!("{binzeta_fail} nonzero residuals"),
        pass: binzeta_fail == 0,
        provenance: Provenance::Reference,
        note: "k = 0 is excluded: the two sides differ by 1 there",
    });
    rows
}

/// Low-discrepancy rational in (0, span): golden-ratio rotation with a
/// fixed denominator, deterministic across runs.
fn grid_ratio(i: u64, span: i64) -> BigRational {
    let phi_num: i64 = 618_034;
    let den: i64 = 1_000_000;
    let frac = ((i as i64 + 1) * phi_num) % den;
    let frac = if frac == 0 { 1 } else { frac };
    ratio(frac * span, den)
}

fn pow_rational(x: &BigRational, e: u64) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}
