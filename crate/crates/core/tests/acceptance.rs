//! The acceptance suite: every criterion at exact equality, one line each.

use std::process::ExitCode;
use std::time::Instant;

use macdonald_core::comb::{compositions, compositions_up_to_size, precedes, Order};
use macdonald_core::hecke::{verify_eigen, verify_hecke_relations};
use macdonald_core::hhl::{bijection_check, f_hhl, weight_match_check};
use macdonald_core::matrixprod::{
    cyclic_check, exchange_rho_check, f_matrix_product, frozen_check, hall_littlewood_q0,
    permutations,
};
use macdonald_core::report::Report;
use macdonald_core::vertex::{
    default_sample_points, exchange_check, l_weight, ybe_check, ybe_check_symbolic,
};
use macdonald_core::{BigRational, Composition, QTRational, XPolynomial};

/// n ≤ 3 with parts ≤ 3, and n = 4 with parts ≤ 2.
fn main_family() -> Vec<Composition> {
    let mut v: Vec<Composition> = (1..=3).flat_map(|n| compositions(n, 3)).collect();
    v.extend(compositions(4, 2));
    v
}

/// n ≤ 3 with parts ≤ 2.
fn small_family() -> Vec<Composition> {
    (1..=3).flat_map(|n| compositions(n, 2)).collect()
}

fn frac(num: QTRational, den: QTRational) -> QTRational {
    num.checked_div(&den).expect("nonzero denominator")
}

fn outcome(name: &str, r: &Report, start: Instant) -> bool {
    let status = if r.passed() { "PASS" } else { "FAIL" };
    println!("{status} {name} ({} checks, {:.1?})", r.len(), start.elapsed());
    for e in r.failures().take(5) {
        println!("    {}: {}", e.label, e.detail);
    }
    r.passed()
}

struct Computed {
    mu: Composition,
    matrix: XPolynomial,
}

fn main() -> ExitCode {
    let mut ok = true;
    let family = main_family();

    let start = Instant::now();
    let mut computed = Vec::new();
    let mut r = Report::new("route equivalence");
    for mu in &family {
        let matrix = f_matrix_product(mu, None).expect("matrix route");
        let hhl = f_hhl(mu).expect("hhl route");
        r.record(mu.to_string(), matrix == hhl, format!("{matrix} vs {hhl}"));
        computed.push(Computed { mu: mu.clone(), matrix });
    }
    ok &= outcome("1 route equivalence", &r, start);

    let start = Instant::now();
    let mut r = Report::new("eigenvectors");
    for c in &computed {
        r.merge(verify_eigen(&c.matrix, &c.mu));
    }
    ok &= outcome("2 eigenvector property", &r, start);

    let start = Instant::now();
    let mut r = Report::new("golden values");
    let one_minus_t = QTRational::one_minus_monomial(0, 1);
    let one_minus_qt = QTRational::one_minus_monomial(1, 1);
    let goldens = [
        ("1,0", XPolynomial::var(2, 1)),
        (
            "0,1",
            &XPolynomial::var(2, 2)
                + &XPolynomial::var(2, 1)
                    .scale(&frac(&QTRational::q() * &one_minus_t, one_minus_qt.clone())),
        ),
        (
            "2,0",
            &XPolynomial::monomial(&[2, 0])
                + &XPolynomial::monomial(&[1, 1]).scale(&frac(one_minus_t.clone(), one_minus_qt)),
        ),
    ];
    for (mu, expected) in goldens {
        let mu: Composition = mu.parse().expect("composition");
        let m = f_matrix_product(&mu, None).expect("matrix route");
        let h = f_hhl(&mu).expect("hhl route");
        r.record(format!("{mu} matrix"), m == expected, format!("{m}"));
        r.record(format!("{mu} hhl"), h == expected, format!("{h}"));
    }
    ok &= outcome("3 golden values", &r, start);

    let start = Instant::now();
    let mut r = Report::new("normalization");
    for c in &computed {
        let lead = c.matrix.coefficient_of(c.mu.parts()).expect("alphabet");
        r.record(format!("{} leading", c.mu), lead.is_one(), format!("{lead}"));
        r.merge(frozen_check(&c.mu));
    }
    ok &= outcome("4 normalization", &r, start);

    let start = Instant::now();
    let mut r = Report::new("triangularity");
    for c in &computed {
        let mu_rev = c.mu.reversed();
        for (e, _) in c.matrix.terms() {
            if e.as_slice() == c.mu.parts() {
                continue;
            }
            let nu = Composition::new(e.clone()).expect("composition");
            let below = precedes(&nu.reversed(), &mu_rev, Order::Bracket).expect("same length");
            r.record(format!("{} term {nu}", c.mu), below, "");
        }
    }
    ok &= outcome("5 triangularity", &r, start);

    let start = Instant::now();
    let points = default_sample_points();
    let mut r = ybe_check(1, 2, &points);
    r.merge(ybe_check(2, 2, &points));
    r.merge(ybe_check_symbolic(1, 2, &l_weight));
    ok &= outcome("6 yang-baxter", &r, start);

    let start = Instant::now();
    let mut r = Report::new("exchange relations");
    for i in 1..=2 {
        for j in 1..=2 {
            r.merge(exchange_check(i, j, 2, 1, 1));
        }
    }
    ok &= outcome("7 exchange relations", &r, start);

    let start = Instant::now();
    let mut r = Report::new("cyclic relation");
    for mu in small_family() {
        for i in 1..=mu.n() {
            r.merge(cyclic_check(&mu, i));
        }
    }
    ok &= outcome("8 cyclic relation", &r, start);

    let start = Instant::now();
    let mut r = Report::new("bijection and weights");
    for mu in small_family() {
        r.merge(bijection_check(&mu));
        r.merge(weight_match_check(&mu));
    }
    ok &= outcome("9 bijection and weight matching", &r, start);

    let start = Instant::now();
    let mut r = Report::new("hecke");
    for n in 1..=3 {
        r.merge(verify_hecke_relations(n, 4, 2024 + n as u64));
        for mu in compositions(n, 2) {
            for rho in permutations(n) {
                r.merge(exchange_rho_check(&mu, &rho));
            }
        }
    }
    ok &= outcome("10 hecke suite", &r, start);

    let start = Instant::now();
    let mut r = Report::new("q = 0");
    let zero = BigRational::from_integer(0.into());
    for c in &computed {
        let hl = hall_littlewood_q0(&c.mu).expect("row transfer");
        let f0 = c.matrix.subs_q(&zero).expect("no pole at q = 0");
        r.record(c.mu.to_string(), hl == f0, format!("{hl} vs {f0}"));
    }
    ok &= outcome("11 q = 0 degeneration", &r, start);

    let start = Instant::now();
    let mut r = Report::new("spectrum");
    for n in 1..=3 {
        let family = compositions_up_to_size(n, 4);
        for (k, a) in family.iter().enumerate() {
            for b in &family[k + 1..] {
                r.record(format!("{a} vs {b}"), a.spectrum() != b.spectrum(), "");
            }
        }
    }
    ok &= outcome("12 eigenvalue distinctness", &r, start);

    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
