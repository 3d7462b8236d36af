//! Named verification suites shared by the command-line driver and the
//! acceptance tests.
//!
//! Each suite is a pure function of an optional range cap. With no cap it
//! runs its full published range; with a cap every `n`-range is clipped to
//! it, which keeps quick runs quick.

use std::thread;
use std::time::Instant;

use num_bigint::BigUint;
use serde::Serialize;

use crate::chebyshev;
use crate::curves;
use crate::enumerator::{self, PartConfig};
use crate::error::{ensure, Result};
use crate::fixtures;
use crate::polyring::{parse_poly, Rational, UniPoly};
use crate::sequences;
use crate::specializations::{self as sp, stats, FactorVariant};
use crate::zeros::{self, Family};

pub struct Suite {
    pub name: &'static str,
    pub about: &'static str,
    run: fn(Option<u32>) -> Result<()>,
}

impl Suite {
    pub fn run(&self, cap: Option<u32>) -> Result<()> {
        (self.run)(cap)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub suite: &'static str,
    pub pass: bool,
    /// First counterexample or error, when the suite failed.
    pub detail: Option<String>,
    pub seconds: f64,
}

pub const SUITES: [Suite; 9] = [
    Suite {
        name: "table",
        about: "p_n for n <= 7 and coefficient sums",
        run: suite_table,
    },
    Suite {
        name: "oracle",
        about: "enumeration oracle vs recurrence, count series",
        run: suite_oracle,
    },
    Suite {
        name: "specializations",
        about: "Q_n(x), R_n(x), diagonal and x = 1 tables",
        run: suite_specializations,
    },
    Suite {
        name: "identities",
        about: "recurrences, generating functions, Chebyshev forms, factorizations",
        run: suite_identities,
    },
    Suite {
        name: "counting",
        about: "all-ones evaluations (3^(n+1)-1)/2 and (3^n+1)/2",
        run: suite_counting,
    },
    Suite {
        name: "diagonal",
        about: "Fibonacci constants and coefficient closed forms on x = y = z",
        run: suite_diagonal,
    },
    Suite {
        name: "stats",
        about: "statistic histograms against enumeration",
        run: suite_stats,
    },
    Suite {
        name: "zeros",
        about: "explicit zeros, circles and real zeros",
        run: suite_zeros,
    },
    Suite {
        name: "curves",
        about: "zero-locus curves, the quartic and its inversions",
        run: suite_curves,
    },
];

pub fn find(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

/// Runs the named suites on worker threads; results come back in the
/// order given.
pub fn run_suites(suites: &[&'static Suite], cap: Option<u32>) -> Vec<Outcome> {
    thread::scope(|scope| {
        let handles: Vec<_> = suites
            .iter()
            .map(|s| {
                scope.spawn(move || {
                    let start = Instant::now();
                    let res = s.run(cap);
                    Outcome {
                        suite: s.name,
                        pass: res.is_ok(),
                        detail: res.err().map(|e| e.to_string()),
                        seconds: start.elapsed().as_secs_f64(),
                    }
                })
            })
            .collect();
        handles
            .into_iter()
            .zip(suites)
            .map(|(h, s)| {
                h.join().unwrap_or_else(|_| Outcome {
                    suite: s.name,
                    pass: false,
                    detail: Some("suite panicked".into()),
                    seconds: 0.0,
                })
            })
            .collect()
    })
}

fn clip(cap: Option<u32>, full: u32) -> u32 {
    cap.map_or(full, |c| c.min(full))
}

fn uni(text: &str, var: &str) -> Result<UniPoly> {
    parse_poly(text, &[var])?.to_uni(0)
}

fn suite_table(_: Option<u32>) -> Result<()> {
    let names = ["x", "y", "z"];
    for (n, (text, sum)) in fixtures::P_TABLE.iter().enumerate() {
        let want = parse_poly(text, &names)?;
        let got = sequences::p_poly(2, &BigUint::from(n))?;
        ensure(got == want, "p_n table row", n as u64, || {
            format!("computed {got}")
        })?;
        let total = got.eval_all_ones();
        ensure(
            total == Rational::from_integer((*sum).into()),
            "p_n coefficient sum",
            n as u64,
            || format!("sum {total}"),
        )?;
    }
    Ok(())
}

fn suite_oracle(cap: Option<u32>) -> Result<()> {
    for (b, full) in [(2, 40), (3, 30), (5, 30)] {
        stats::check_oracle(b, clip(cap, full) as u64)?;
    }
    let counts = enumerator::count_series(&PartConfig::new(2, 2)?, 10);
    ensure(
        counts == fixtures::COUNT_SERIES_B2,
        "count series",
        10,
        || format!("{counts:?}"),
    )
}

fn suite_specializations(_: Option<u32>) -> Result<()> {
    let (qx, rx) = (sp::Qx_sequence(5), sp::Rx_sequence(5));
    for (n, (q, r)) in fixtures::QX_RX_TABLE.iter().enumerate() {
        ensure(
            qx[n] == uni(q, "x")? && rx[n] == uni(r, "x")?,
            "Q_n(x), R_n(x) table",
            n as u64,
            || format!("computed {} and {}", qx[n], rx[n]),
        )?;
    }
    for (n, (q, r)) in fixtures::DIAGONAL_TABLE.iter().enumerate() {
        let (gq, gr) = (sp::QZ(n as u32), sp::RZ(n as u32));
        ensure(
            gq == uni(q, "z")? && gr == uni(r, "z")?,
            "diagonal table",
            n as u64,
            || format!("computed {gq} and {gr}"),
        )?;
    }
    for (n, (text, factors)) in fixtures::Q1_ZZ_TABLE.iter().enumerate() {
        let got = sp::Q1(n as u32, 1, 1)?;
        ensure(got == uni(text, "z")?, "Q_n(1,z,z) table", n as u64, || {
            got.to_string()
        })?;
        if !factors.is_empty() {
            let mut want: Vec<UniPoly> =
                factors.iter().map(|f| uni(f, "z")).collect::<Result<_>>()?;
            let mut have = sp::factor_Q1(n as u32, FactorVariant::Zz)?;
            want.sort_by_key(|p| p.to_string());
            have.sort_by_key(|p| p.to_string());
            ensure(want == have, "Q_n(1,z,z) factorization", n as u64, || {
                format!(
                    "{:?}",
                    have.iter().map(|p| p.to_string()).collect::<Vec<_>>()
                )
            })?;
        }
    }
    for (n, text) in fixtures::Q1_ZZ2_TABLE.iter().enumerate() {
        let got = sp::Q1(n as u32, 1, 2)?;
        ensure(
            got == uni(text, "z")?,
            "Q_n(1,z,z^2) table",
            n as u64,
            || got.to_string(),
        )?;
    }
    Ok(())
}

fn suite_identities(cap: Option<u32>) -> Result<()> {
    let n_max = clip(cap, 20);
    for b in [2, 3, 5] {
        sequences::index_check(b, n_max)?;
        sequences::gf_check(b, n_max)?;
        for n in 1..=n_max {
            sequences::relation_checks(b, n)?;
        }
        chebyshev::verify_chebyshev_forms(b, n_max)?;
        chebyshev::verify_link_form(b, n_max)?;
    }
    for b in [3, 5] {
        sp::check_base_closed_form(b, n_max)?;
    }
    chebyshev::trig_sanity(n_max, &[0.3, 1.1, 2.9], 1e-10)?;
    sp::check_qx_structure(n_max)?;
    sp::trinomial_checks(n_max)?;
    sp::check_q1_diagonal_closed_form(n_max)?;
    sp::check_q1_quartic_closed_form(n_max)?;
    sp::check_q1_quartic_symmetry(n_max)?;
    sp::check_central_coefficients(n_max)?;
    sp::check_factorizations(n_max)?;
    sp::check_cyclotomic_expansions()?;
    for (a, b) in [(1, 1), (1, 2), (2, 1), (-1, 1), (1, -1)] {
        sp::check_q1_paths(n_max.min(10), a, b)?;
    }
    let top = clip(cap, 24);
    sp::divisibility_check(&sp::Qx_sequence(top), top)
}

fn suite_counting(cap: Option<u32>) -> Result<()> {
    for b in [2, 3, 5] {
        sequences::all_ones_check(b, clip(cap, 20))?;
    }
    Ok(())
}

fn suite_diagonal(cap: Option<u32>) -> Result<()> {
    let n_max = clip(cap, 25);
    sp::check_diagonal_coefficients(n_max)?;
    sp::check_remarks(n_max)?;
    sp::check_base_independence(&[3, 5], n_max.min(8))
}

fn suite_stats(cap: Option<u32>) -> Result<()> {
    let n_max = clip(cap, 4);
    stats::check_overline_histogram(n_max)?;
    stats::check_plain_part_counts(n_max)?;
    for b in [2, 3] {
        stats::check_s_statistic(b, n_max)?;
    }
    stats::check_five_ary_split()
}

fn suite_zeros(cap: Option<u32>) -> Result<()> {
    let n_max = clip(cap, 30);
    let quartic = curves::derive_curve(1, 2)?;
    let qtilde = sp::Qtilde_sequence(n_max)?;
    let (qx, rx) = (sp::Qx_sequence(n_max), sp::Rx_sequence(n_max));
    for n in 1..=n_max {
        let nn = n as u64;
        let k = n as usize;
        for fam in [Family::Zz, Family::Zz2] {
            zeros::check_explicit(fam, n, 1e-8)?;
        }
        let r = zeros::zz_circle_residual(n);
        ensure(r < 1e-10, "circle through Q_n(1,z,z) zeros", nn, || {
            format!("{r:e}")
        })?;
        let rep = curves::membership(&quartic, &zeros::zeros_explicit_zz2(n), 1e-12);
        ensure(
            rep.max_residual < 1e-8,
            "quartic through Q_n(1,z,z^2) zeros",
            nn,
            || format!("{:e}", rep.max_residual),
        )?;
        zeros::check_qtilde_circle_for(n, &qtilde[k])?;
        zeros::check_real_negative_reciprocal_for(n, &qx[k], &rx[k])?;
    }
    Ok(())
}

fn suite_curves(cap: Option<u32>) -> Result<()> {
    curves::check_all(clip(cap, 8))?;
    let ns: Vec<u32> = [10, 20]
        .into_iter()
        .filter(|&n| cap.is_none_or(|c| n <= c.max(10)))
        .collect();
    curves::check_zero_membership(&ns, 1e-7)
}

/// Plain-text table of outcomes, one suite per line.
pub fn render_table(outcomes: &[Outcome]) -> String {
    let width = outcomes.iter().map(|o| o.suite.len()).max().unwrap_or(5);
    let mut out = String::new();
    for o in outcomes {
        let status = if o.pass { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{:<width$}  {status}  {:>8.3}s",
            o.suite, o.seconds
        ));
        if let Some(d) = &o.detail {
            out.push_str("  ");
            out.push_str(d);
        }
        out.push('\n');
    }
    out
}
