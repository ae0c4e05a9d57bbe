//! Acceptance run: one line per criterion, nonzero exit if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{b_residual_oracle, caps, frattini_oracle, in_b_oracle};
use frattini_core::classifiers::{
    b_residual, is_b_group, is_f_group, is_good_normal, is_nc_group, is_phi_free,
    non_complemented_normal, splits_over_gf_series,
};
use frattini_core::corpus::{aut_a6, default_corpus, frobenius20, order100_example};
use frattini_core::quotient::quotient;
use frattini_core::structure::{find_complement, frattini_subgroup, normal_subgroups};
use frattini_core::verifier::{render_report, run_corpus, Check, CheckStatus, ORACLE_ORDER};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, what: &str) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn within(limit: Duration, start: Instant) -> Outcome {
    let took = start.elapsed();
    ensure(took < limit, &format!("took {took:?}, limit {limit:?}"))
}

fn order_100_example() -> Outcome {
    let start = Instant::now();
    let caps = caps();
    let (g, m, n) = order100_example();
    ensure(g.order() == 100, "order is not 100")?;
    ensure(frattini_subgroup(&g, &caps).map_err(|e| e.to_string())?.is_trivial(), "Φ(G) ≠ 1")?;
    ensure(is_good_normal(&g, &m, &caps).map_err(|e| e.to_string())?, "M is not good")?;
    ensure(is_good_normal(&g, &n, &caps).map_err(|e| e.to_string())?, "N is not good")?;
    let e = m.join(&n).map_err(|e| e.to_string())?;
    ensure(e.order() == 25, "MN does not have order 25")?;
    ensure(!is_good_normal(&g, &e, &caps).map_err(|e| e.to_string())?, "MN is good")?;
    let q = quotient(&g, &m, &caps).map_err(|e| e.to_string())?;
    ensure(q.target().order() == 20, "G/M does not have order 20")?;
    ensure(frattini_subgroup(q.target(), &caps).map_err(|e| e.to_string())?.is_trivial(), "Φ(G/M) ≠ 1")?;
    within(Duration::from_secs(1), start)?;
    // the lattice oracle agrees, outside the timed part
    ensure(frattini_oracle(&g).is_trivial(), "lattice oracle gives Φ(G) ≠ 1")
}

fn frobenius_twenty() -> Outcome {
    let start = Instant::now();
    let caps = caps();
    let f = frobenius20();
    let err = |e: frattini_core::GroupError| e.to_string();
    ensure(is_phi_free(&f, &caps).map_err(err)?, "not Φ-free")?;
    ensure(!is_b_group(&f, &caps).map_err(err)?, "in 𝔅")?;
    ensure(!is_f_group(&f, &caps).map_err(err)?, "in 𝔉")?;
    ensure(!is_nc_group(&f, &caps).map_err(err)?, "in 𝔑ℭ")?;
    let t = b_residual(&f, &caps).map_err(err)?;
    ensure(t.order() == 10, "𝔅-residual does not have order 10")?;
    let c5 = normal_subgroups(&f, &caps).map_err(err)?.into_iter().find(|k| k.order() == 5).ok_or("no C5")?;
    let q = quotient(&f, &c5, &caps).map_err(err)?;
    let phi = frattini_subgroup(q.target(), &caps).map_err(err)?;
    ensure(q.image_group(&t).map_err(err)?.is_subgroup_of(&phi), "residual over C5 is not Frattini")?;
    within(Duration::from_secs(1), start)?;
    ensure(!in_b_oracle(&f), "oracle puts the group in 𝔅")?;
    ensure(b_residual_oracle(&f) == t, "oracle residual differs")
}

fn aut_a6_example() -> Outcome {
    let start = Instant::now();
    let caps = caps();
    let err = |e: frattini_core::GroupError| e.to_string();
    let g = aut_a6().map_err(err)?;
    ensure(g.order() == 1440, "order is not 1440")?;
    ensure(is_b_group(&g, &caps).map_err(err)?, "not in 𝔅")?;
    ensure(!is_nc_group(&g, &caps).map_err(err)?, "in 𝔑ℭ")?;
    let w = non_complemented_normal(&g, &caps).map_err(err)?.ok_or("no witness")?;
    ensure(w.order() == 360, &format!("witness has order {}", w.order()))?;
    let uncomplemented: Vec<u128> = normal_subgroups(&g, &caps)
        .map_err(err)?
        .iter()
        .filter(|n| find_complement(&g, n, &caps).map(|c| c.is_none()).unwrap_or(true))
        .map(|n| n.order())
        .collect();
    ensure(uncomplemented == vec![360], &format!("uncomplemented normal orders {uncomplemented:?}"))?;
    ensure(!splits_over_gf_series(&g, &caps).map_err(err)?, "splits over the F*-series")?;
    within(Duration::from_secs(60), start)
}

fn corpus_checks(checks: &[Check], allow_skips: bool) -> Outcome {
    let results = run_corpus(&default_corpus(), checks, &caps());
    if let Some(r) = results.iter().find(|r| r.failed()) {
        return Err(format!("{} on {}: {}", r.check_name, r.group_name, r.witness.clone().unwrap_or_default()));
    }
    if !allow_skips {
        if let Some(r) = results.iter().find(|r| !r.passed()) {
            return Err(format!("{} on {}: {}", r.check_name, r.group_name, r.status));
        }
    }
    for r in &results {
        if let CheckStatus::Skipped(why) = &r.status {
            ensure(!why.is_empty(), "skip without a reason")?;
        }
    }
    Ok(())
}

fn oracle_agreement() -> Outcome {
    let corpus = default_corpus();
    let small: Vec<_> = corpus.into_iter().filter(|e| e.group.order() <= ORACLE_ORDER).collect();
    ensure(!small.is_empty(), "no small groups")?;
    let results = run_corpus(&small, &[Check::OracleAgreement], &caps());
    match results.iter().find(|r| !r.passed()) {
        Some(r) => Err(format!("{} {}: {:?}", r.group_name, r.status, r.witness)),
        None => Ok(()),
    }
}

fn determinism() -> Outcome {
    let corpus = default_corpus();
    let a = render_report(&run_corpus(&corpus, &Check::ALL, &caps()));
    let b = render_report(&run_corpus(&default_corpus(), &Check::ALL, &caps()));
    ensure(a == b, "reports differ")
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 order-100 example", order_100_example),
        ("2 Frobenius group of order 20", frobenius_twenty),
        ("3 Aut(A6) as PΓL(2,9)", aut_a6_example),
        ("4 five Frattini-quotient conditions agree", || corpus_checks(&[Check::Doerk], false)),
        ("5 𝔑ℭ vs F*-series splitting, soluble 𝔅 = 𝔑ℭ", || {
            corpus_checks(&[Check::NcGfSplitting, Check::SolubleBNc], false)
        }),
        ("6 𝔅 closure: quotients, subdirect, subnormal, tn", || {
            corpus_checks(
                &[Check::QuotientClosure, Check::SubdirectClosure, Check::SubnormalClosureB, Check::TnResidual],
                false,
            )
        }),
        ("7 𝔑ℭ subnormal closure", || corpus_checks(&[Check::SubnormalClosureNc], false)),
        ("8 Frattini facts, Φ-free F*, good-normal suites", || {
            corpus_checks(
                &[
                    Check::FrattiniSupplements,
                    Check::FrattiniDirectProduct,
                    Check::FrattiniQuotients,
                    Check::FrattiniNormalSubgroups,
                    Check::FrattiniSubgroupNormals,
                    Check::FrattiniPGroups,
                    Check::FrattiniCentreDerived,
                    Check::FrattiniAbelianComplements,
                    Check::PhiFreeFStar,
                    Check::CentralGood,
                    Check::SSeriesGood,
                    Check::IntervalProducts,
                ],
                true,
            )
        }),
        ("9 oracle agreement up to order 200", oracle_agreement),
        ("10 deterministic verify report", determinism),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        match run() {
            Ok(()) => println!("PASS criterion {name} ({:.2?})", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
