//! Per-group replays of the class theorems and Frattini facts, with witnesses.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::classifiers::{
    b_residual, doerk_report, good_and_bad_normals, is_b_group, is_b_group_by_chief_factors,
    is_b_group_by_quotients, is_f_group, is_good_normal, is_nc_group, is_phi_free,
    quotient_in_b, s_series, splits_over_gf_series,
};
use crate::corpus::CorpusEntry;
use crate::error::{GroupError, Result};
use crate::group::{center, derived_subgroup, direct_product, Caps, PermGroup};
use crate::perm::Permutation;
use crate::quotient::quotient;
use crate::structure::{
    all_complements, all_subgroups, complements_by_lattice, f_prime, find_complement,
    fitting_subgroup, frattini_subgroup, frattini_via, generalized_fitting, intersection,
    is_nilpotent, is_soluble, layer, normal_subgroups, p_group_frattini_formula,
    subnormal_subgroups, FrattiniPath, FRATTINI_PATHS,
};

/// Largest order on which lattice-based cross-checks run.
pub const ORACLE_ORDER: u128 = 200;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    PhiFreeReduction,
    QuotientClosure,
    SubdirectClosure,
    SubnormalClosureB,
    SubnormalClosureF,
    SubnormalClosureNc,
    TnResidual,
    FClassRoutes,
    NcGfSplitting,
    SolubleBNc,
    FrattiniSupplements,
    FrattiniDirectProduct,
    FrattiniQuotients,
    FrattiniNormalSubgroups,
    FrattiniSubgroupNormals,
    FrattiniPGroups,
    FrattiniCentreDerived,
    FrattiniAbelianComplements,
    PhiFreeFStar,
    CentralGood,
    SSeriesGood,
    IntervalProducts,
    Doerk,
    OracleAgreement,
}

impl Check {
    pub const ALL: [Check; 24] = [
        Check::PhiFreeReduction,
        Check::QuotientClosure,
        Check::SubdirectClosure,
        Check::SubnormalClosureB,
        Check::SubnormalClosureF,
        Check::SubnormalClosureNc,
        Check::TnResidual,
        Check::FClassRoutes,
        Check::NcGfSplitting,
        Check::SolubleBNc,
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
        Check::Doerk,
        Check::OracleAgreement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::PhiFreeReduction => "phi_free_reduction",
            Check::QuotientClosure => "quotient_closure",
            Check::SubdirectClosure => "subdirect_closure",
            Check::SubnormalClosureB => "subnormal_closure_b",
            Check::SubnormalClosureF => "subnormal_closure_f",
            Check::SubnormalClosureNc => "subnormal_closure_nc",
            Check::TnResidual => "tn_residual",
            Check::FClassRoutes => "f_class_routes",
            Check::NcGfSplitting => "nc_gf_splitting",
            Check::SolubleBNc => "soluble_b_nc",
            Check::FrattiniSupplements => "frattini_supplements",
            Check::FrattiniDirectProduct => "frattini_direct_product",
            Check::FrattiniQuotients => "frattini_quotients",
            Check::FrattiniNormalSubgroups => "frattini_normal_subgroups",
            Check::FrattiniSubgroupNormals => "frattini_subgroup_normals",
            Check::FrattiniPGroups => "frattini_p_groups",
            Check::FrattiniCentreDerived => "frattini_centre_derived",
            Check::FrattiniAbelianComplements => "frattini_abelian_complements",
            Check::PhiFreeFStar => "phi_free_fstar",
            Check::CentralGood => "central_good",
            Check::SSeriesGood => "s_series_good",
            Check::IntervalProducts => "interval_products",
            Check::Doerk => "doerk",
            Check::OracleAgreement => "oracle_agreement",
        }
    }

    pub fn from_name(name: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == name)
    }

    fn run(self, g: &PermGroup, caps: &Caps) -> Result<Outcome> {
        match self {
            Check::PhiFreeReduction => phi_free_reduction(g, caps),
            Check::QuotientClosure => quotient_closure(g, caps),
            Check::SubdirectClosure => subdirect_closure(g, caps),
            Check::SubnormalClosureB => subnormal_closure(g, caps, "𝔅", is_b_group),
            Check::SubnormalClosureF => subnormal_closure(g, caps, "𝔉", is_f_group),
            Check::SubnormalClosureNc => subnormal_closure(g, caps, "𝔑ℭ", is_nc_group),
            Check::TnResidual => tn_residual(g, caps),
            Check::FClassRoutes => f_class_routes(g, caps),
            Check::NcGfSplitting => nc_gf_splitting(g, caps),
            Check::SolubleBNc => soluble_b_nc(g, caps),
            Check::FrattiniSupplements => frattini_supplements(g, caps),
            Check::FrattiniDirectProduct => frattini_direct_product(g, caps),
            Check::FrattiniQuotients => frattini_quotients(g, caps),
            Check::FrattiniNormalSubgroups => frattini_normal_subgroups(g, caps),
            Check::FrattiniSubgroupNormals => frattini_subgroup_normals(g, caps),
            Check::FrattiniPGroups => frattini_p_groups(g, caps),
            Check::FrattiniCentreDerived => frattini_centre_derived(g, caps),
            Check::FrattiniAbelianComplements => frattini_abelian_complements(g, caps),
            Check::PhiFreeFStar => phi_free_fstar(g, caps),
            Check::CentralGood => central_good(g, caps),
            Check::SSeriesGood => s_series_good(g, caps),
            Check::IntervalProducts => interval_products(g, caps),
            Check::Doerk => doerk(g, caps),
            Check::OracleAgreement => oracle_agreement(g, caps),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped(String),
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => f.write_str("pass"),
            CheckStatus::Fail => f.write_str("FAIL"),
            CheckStatus::Skipped(why) => write!(f, "skipped: {why}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub check_name: String,
    pub group_name: String,
    pub status: CheckStatus,
    /// Present exactly when the check failed.
    pub witness: Option<String>,
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

enum Outcome {
    Pass,
    Skip(String),
}

fn fail<T>(msg: String) -> Result<T> {
    Err(GroupError::TheoremViolation(msg))
}

fn describe(h: &PermGroup) -> String {
    let gens: Vec<String> = h.generators().iter().map(|x| x.to_string()).collect();
    format!("order {} <{}>", h.order(), gens.join(", "))
}

pub fn run_check(check: Check, name: &str, g: &PermGroup, caps: &Caps) -> CheckResult {
    let start = Instant::now();
    let (status, witness) = match check.run(g, caps) {
        Ok(Outcome::Pass) => (CheckStatus::Pass, None),
        Ok(Outcome::Skip(why)) => (CheckStatus::Skipped(why), None),
        Err(GroupError::TheoremViolation(w)) => (CheckStatus::Fail, Some(w)),
        Err(e) if e.is_cap() => (CheckStatus::Skipped(format!("cap: {e}")), None),
        Err(e) => (CheckStatus::Fail, Some(format!("error: {e}"))),
    };
    CheckResult {
        check_name: check.name().to_string(),
        group_name: name.to_string(),
        status,
        witness,
        elapsed: start.elapsed(),
    }
}

/// Runs every selected check on every group; groups run in parallel, results
/// come back in corpus order and then check order.
pub fn run_corpus(corpus: &[CorpusEntry], checks: &[Check], caps: &Caps) -> Vec<CheckResult> {
    corpus
        .par_iter()
        .map(|e| {
            checks
                .iter()
                .map(|&c| run_check(c, &e.name, &e.group, caps))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

pub fn summarize(results: &[CheckResult]) -> Summary {
    let mut s = Summary::default();
    for r in results {
        match r.status {
            CheckStatus::Pass => s.passed += 1,
            CheckStatus::Fail => s.failed += 1,
            CheckStatus::Skipped(_) => s.skipped += 1,
        }
    }
    s
}

/// Plain-text report, one line per result plus a summary; timings are left
/// out so that repeated runs compare equal.
pub fn render_report(results: &[CheckResult]) -> String {
    let mut out = String::new();
    for r in results {
        out.push_str(&format!("{:<28} {:<12} {}", r.check_name, r.group_name, r.status));
        if let Some(w) = &r.witness {
            out.push_str(&format!(" -- {w}"));
        }
        out.push('\n');
    }
    let s = summarize(results);
    out.push_str(&format!(
        "total {} passed {} failed {} skipped {}\n",
        results.len(),
        s.passed,
        s.failed,
        s.skipped
    ));
    out
}

// ---------------------------------------------------------------------------
// class theorems

fn phi_free_reduction(g: &PermGroup, caps: &Caps) -> Result<Outcome> {
    if !is_phi_free(g, caps)? {
        return Ok(Outcome::Pass);
    }
    let fs = generalized_fitting(g, caps)?;
    for n in normal_subgroups(g, caps)? {
        if fs.is_subgroup_of(&n) && !is_phi_free(quotient(g, &n, caps)?.target(), caps)? {
            return Ok(Outcome::Pass);
        }
    }
    if !is_b_group(g, caps)? {
        return fail(format!("all quotients over F* = {} are Φ-free but G ∉ 𝔅", describe(&fs)));
    }
    Ok(Outcome::Pass)
}

fn quotient_closure(g: &PermGroup, caps: &Caps) -> Result<Outcome> {
    if !is_b_group(g, caps)? {
        return Ok(Outcome::Pass);
    }
    for n in normal_subgroups(g, caps)? {
        if !is_b_group(quotient(g, &n, caps)?.target(), caps)? {
            return fail(format!("G ∈ 𝔅 but G/N ∉ 𝔅 for N = {}", describe(&n)));
        }
    }
    Ok(Outcome::Pass)
}

fn subdirect_closure(g: &PermGroup, caps: &Caps) -> Result<Outcome> {
    let normals = normal_subgroups(g, caps)?;
    let in_b = normals
        .iter()
        .map(|n| is_b_group(quotient(g, n, caps)?.target(), caps))
        .collect::<Result<Vec<_>>>()?;
    let whole = is_b_group(g, caps)?;
    for (i, m) in normals.iter().enumerate() {
        for (j, n) in normals.iter().enumerate().skip(i) {
            if in_b[i] && in_b[j] && intersection(g, m, n, caps)?.is_trivial() && !whole {
                return fail(format!(
                    "G/M, G/N ∈ 𝔅 with M ∩ N = 1 but G ∉ 𝔅; M = {}, N = {}",
                    describe(m),
                    describe(n)
                ));
            }
        }
    }
    Ok(Outcome::Pass)
}

fn subnormal_closure(
    g: &PermGroup,
    caps: &Caps,
    class: &str,
    member: fn(&PermGroup, &Caps) -> Result<bool>,
) -> Result<Outcome> {
    if !member(g, caps)? {
        return Ok(Outcome::Pass);
    }
    for h in subnormal_subgroups(g, caps)? {
        if !member(&h, caps)? {
            return fail(format!("G ∈ {class} but subnormal {} is not", describe(&h)));
        }
    }
    Ok(Outcome::Pass)
}

fn tn_residual(g: &PermGroup, caps: &Caps) -> Result<Outcome> {
    let t = b_residual(g, caps)?;
    if t.is_trivial() {
        return Ok(Outcome::Pass);
    }
    let normals = normal_subgroups(g, caps)?;
    for k in normals.iter().filter(|k| k.is_subgroup_of(&t) && k.order() < t.order()) {
        let chief = !normals.iter().any(|x| {
            x.order() > k.order() && x.order() < t.order() && k.is_subgroup_of(x) && x.is_subgroup_of(&t)
        });
        if !chief {
            continue;
        }
        let q = quotient(g, k, caps)?;
        let phi = frattini_subgroup(q.target(), caps)?;
        if !q.image_group(&t)?.is_subgroup_of(&phi) {
            return fail(format!(
                "chief factor of the 𝔅-residual {} over K = {} is not Frattini",
                describe(&t),
                describe(k)
            ));
        }
    }
    Ok(Outcome::Pass)
}

fn f_class_routes(g: &PermGroup, caps: &Caps) -> Result<Outcome> {
    let in_f = is_f_group(g, caps)?;
    let over_phi = is_b_group(quotient(g, &frattini_subgroup(g, caps)?, caps)?.target(), caps)?;
    let over_fit = is_b_group(quotient(g, &fitting_subgroup(g, caps)?, caps)?.target(), caps)?;
    if in_f != over_phi || in_f != over_fit {
        return fail(format!("G ∈ 𝔉: {in_f}, G/Φ(G) ∈ 𝔅: {over_phi}, G/F(G) ∈ 𝔅: {over_fit}"));
    }
    let phi_free = is_phi_free(g, caps)?;
    let in_b = is_b_group(g, caps)?;
    let in_nc = is_nc_group(g, caps)?;
    if (in_nc && !in_b) || (in_b && !phi_free) || ((in_f && phi_free) != in_b) {
        return fail(format!("containments broken: Φ-free {phi_free}, 𝔅 {in_b}, 𝔉 {in_f}, 𝔑ℭ {in_nc}"));
    }
    Ok(Outcome::Pass)
}

fn nc_gf_splitting(g: &PermGroup, caps: &Caps) -> Result<Outcome> {
    if !is_b_group(g, caps)? {
        return Ok(Outcome::Pass);
    }
    let nc = is_nc_group(g, caps)?;
    let splits = splits_over_gf_series(g, caps)?;
    if nc != splits {
        return fail(format!("𝔅-group with 𝔑ℭ {nc} but splitting over the F*-series {splits}"));
    }
    Ok(Outcome::Pass)
}

fn soluble_b_nc(g: &PermGroup, caps: &Caps) -> Result<Outcome> {
    if !is_soluble(g) {
        return Ok(Outcome::Pass);
    }
    let b = is_b_group(g, caps)?;
    let nc = is_nc_group(g, caps)?;
    if b != nc {
        return fail(format!("soluble group with 𝔅 {b} and 𝔑ℭ {nc}"));
    }
    Ok(Outcome::Pass)
}

// ---------------------------------------------------------------------------
// Frattini facts

fn lattice_or_skip(g: &PermGroup, caps: &Caps) -> Result<std::result::Result<Vec<PermGroup>, Outcome>> {
    if g.order() > ORACLE_ORDER {
        return Ok(Err(Outcome::Skip(format!("order {} above {ORACLE_ORDER}", g.order()))));
    }
    Ok(Ok(all_subgroups(g, caps)?))
}

fn product_order(a: &PermGroup, b: &PermGroup, meet: &PermGroup) -> u128 {
    a.order() * b.order() / meet.order()
}

fn frattini_supplements(g: &PermGroup, caps: &Caps) -> Result<Outcome> {
    let subs = match lattice_or_skip(g, caps)? {
        Ok(s) => s,
        Err(o) => return Ok(o),
    };
    let phi = frattini_subgroup(g, caps)?;
    for n in normal_subgroups(g, caps)? {
        let mut supplements = Vec::new();
        for u in &subs {
            if product_order(&n, u, &intersection(g, &n, u, caps)?) == g.order() {
                supplements.push(u);
            }
        }
        let proper = supplements.iter().any(|u| u.order() < g.order());
        if proper == n.is_subgroup_of(&phi) {
            return fail(format!("proper supplement {proper} for N = {} against N ≤ Φ(G)", describe(&n)));
        }
        for u in &supplements {
            let minimal = !supplements.iter().any(|v| v.order() < u.order() && v.is_subgroup_of(u));
            if !minimal {
                continue;
            }
            let lhs = intersection(g, &n, u, caps)?;
            let rhs = intersection(g, &n, &frattini_subgroup(u, caps)?, caps)?;
            if lhs != rhs {
                return fail(format!(
                    "minimal supplement U = {} of N = {} has N ∩ U ≠ N ∩ Φ(U)",
                    describe(u),
                    describe(&n)
                ));
            }
        }
    }
    Ok(Outcome::Pass)
}

fn embedded(h: &PermGroup, degree: usize, shift: usize) -> Result<PermGroup> {
    PermGroup::new(degree, h.generators().iter().map(|x| x.embed(degree, shift)).collect())
}

fn frattini_direct_product(g: &PermGroup, caps: &Caps) -> Result<Outcome> {
    let c4 = PermGroup::new(4, vec![Permutation::from_images(&[2, 3, 4, 1])?])?;
    let prod = direct_product(g, &c4);
    let degree = prod.degree();
    let expected = embedded(&frattini_subgroup(g, caps)?, degree, 0)?
        .join(&embedded(&frattini_subgroup(&c4, caps)?, degree, g.degree())?)?;
    let phi = frattini_subgroup(&prod, caps)?;
    if phi != expected {
        return fail(format!("Φ(G × C4) = {} but Φ(G) × Φ(C4) = {}", describe(&phi), describe(&expected)));
    }
    Ok(Outcome::Pass)
}

fn frattini_quotients(g: &PermGroup, caps: &Caps) -> Result<Outcome> {
    let phi = frattini_subgroup(g, caps)?;
    for n in normal_subgroups(g, caps)? {
        let q = quotient(g, &n, caps)?;
        let image = q.image_group(&phi)?;
        let phi_q = frattini_subgroup(q.target(), caps)?;
        if !image.is_subgroup_of(&phi_q) {
            return fail(format!("Φ(G)N/N ⊄ Φ(G/N) for N = {}", describe(&n)));
        }
        if n.is_subgroup_of(&phi) && image != phi_q {
            return fail(format!("N = {} ≤ Φ(G) but Φ(G)/N ≠ Φ(G/N)", describe(&n)));
        }
    }
    Ok(Outcome::Pass)
}

fn frattini_normal_subgroups(g: &PermGroup, caps: &Caps) -> Result<Outcome> {
    let phi = frattini_subgroup(g, caps)?;
    for l in normal_subgroups(g, caps)? {
        if !frattini_subgroup(&l, caps)?.is_subgroup_of(&phi) {
            return fail(format!("Φ(L) ⊄ Φ(G) for normal L = {}", describe(&l)));
        }
    }
    Ok(Outcome::Pass)
}

fn frattini_subgroup_normals(g: &PermGroup, caps: &Caps) -> Result<Outcome> {
    let subs = match lattice_or_skip(g, caps)? {
        Ok(s) => s,
        Err(o) => return Ok(o),
    };
    let phi = frattini_subgroup(g, caps)?;
    let normals = normal_subgroups(g, caps)?;
    for l in &subs {
        let phi_l = frattini_subgroup(l, caps)?;
        for u in normals.iter().filter(|u| u.is_subgroup_of(&phi_l)) {
            if !u.is_subgroup_of(&phi) {
                return fail(format!(
                    "normal U = {} lies in Φ(L) for L = {} but not in Φ(G)",
                    describe(u),
                    describe(l)
                ));
            }
        }
    }
    Ok(Outcome::Pass)
}

fn frattini_p_groups(g: &PermGroup, caps: &Caps) -> Result<Outcome> {
    if let Some(formula) = p_group_frattini_formula(g) {
        let phi = frattini_via(g, FrattiniPath::FittingModule, caps)?
            .ok_or(GroupError::NoFrattiniPath(g.order()))?;
        if formula != phi {
            return fail(format!("G'G^p = {} differs from Φ(G) = {}", describe(&formula), describe(&phi)));
        }
        let q = quotient(g, &phi, caps)?;
        let p = crate::structure::p_group_prime(g).unwrap_or(1) as u64;
        let elementary = q.target().generators().iter().all(|x| x.pow(p).is_identity())
            && derived_subgroup(q.target()).is_trivial();
        if !elementary {
            return fail("G/Φ(G) is not elementary abelian".into());
        }
    }
    if is_nilpotent(g, caps)? {
        let (_, bad) = good_and_bad_normals(g, caps)?;
        if let Some(n) = bad.first() {
            return fail(format!("nilpotent group with bad normal subgroup {}", describe(n)));
        }
    }
    Ok(Outcome::Pass)
}

fn frattini_centre_derived(g: &PermGroup, caps: &Caps) -> Result<Outcome> {
    let zd = intersection(g, &center(g, caps)?, &derived_subgroup(g), caps)?;
    if !zd.is_subgroup_of(&frattini_subgroup(g, caps)?) {
        return fail(format!("Z(G) ∩ G' = {} ⊄ Φ(G)", describe(&zd)));
    }
    Ok(Outcome::Pass)
}

fn is_abelian(h: &PermGroup) -> bool {
    let gens = h.generators();
    gens.iter().all(|x| gens.iter().all(|y| x.compose(y) == y.compose(x)))
}

fn frattini_abelian_complements(g: &PermGroup, caps: &Caps) -> Result<Outcome> {
    let phi = frattini_subgroup(g, caps)?;
    for a in normal_subgroups(g, caps)? {
        if !is_abelian(&a) || !intersection(g, &a, &phi, caps)?.is_trivial() {
            continue;
        }
        if find_complement(g, &a, caps)?.is_none() {
            return fail(format!("abelian normal A = {} with A ∩ Φ(G) = 1 has no complement", describe(&a)));
        }
    }
    Ok(Outcome::Pass)
}

// ---------------------------------------------------------------------------
// generalised Fitting subgroup of Φ-free groups, good normal subgroups

fn phi_free_fstar(g: &PermGroup, caps: &Caps) -> Result<Outcome> {
    if !is_phi_free(g, caps)? {
        return Ok(Outcome::Pass);
    }
    let fs = generalized_fitting(g, caps)?;
    let fp = f_prime(g, caps)?;
    if fs != fp {
        return fail(format!("F'(G) = {} but F*(G) = {}", describe(&fp), describe(&fs)));
    }
    for n in normal_subgroups(g, caps)? {
        if !n.is_subgroup_of(&fs) {
            continue;
        }
        let fit = fitting_subgroup(&n, caps)?;
        let lay = layer(&n, caps)?;
        let meet = intersection(&n, &fit, &lay, caps)?;
        if !meet.is_trivial() || fit.order() * lay.order() != n.order() {
            return fail(format!("N = {} is not F(N) × Lay(N)", describe(&n)));
        }
        let complements = if n.order() <= ORACLE_ORDER {
            complements_by_lattice(&n, &fit, caps)?
        } else {
            all_complements(&n, &fit, caps)?
        };
        if let Some(v) = complements.iter().find(|v| **v != lay) {
            return fail(format!(
                "complement V = {} of F(N) in N = {} differs from Lay(N)",
                describe(v),
                describe(&n)
            ));
        }
    }
    Ok(Outcome::Pass)
}

fn central_good(g: &PermGroup, caps: &Caps) -> Result<Outcome> {
    let z = center(g, caps)?;
    for n in normal_subgroups(g, caps)? {
        if n.is_subgroup_of(&z) && is_phi_free(&n, caps)? && !is_good_normal(g, &n, caps)? {
            return fail(format!("central Φ-free N = {} is not good", describe(&n)));
        }
    }
    Ok(Outcome::Pass)
}

fn intervals(g: &PermGroup, caps: &Caps) -> Result<Vec<Vec<PermGroup>>> {
    let series = s_series(g, caps)?;
    let normals = normal_subgroups(g, caps)?;
    Ok(series
        .windows(2)
        .map(|w| {
            normals
                .iter()
                .filter(|n| w[0].is_subgroup_of(n) && n.is_subgroup_of(&w[1]))
                .cloned()
                .collect()
        })
        .collect())
}

fn s_series_good(g: &PermGroup, caps: &Caps) -> Result<Outcome> {
    for interval in intervals(g, caps)? {
        for n in &interval {
            if !is_good_normal(g, n, caps)? {
                return fail(format!("N = {} in an S-series interval is not good", describe(n)));
            }
        }
    }
    Ok(Outcome::Pass)
}

fn interval_products(g: &PermGroup, caps: &Caps) -> Result<Outcome> {
    for interval in intervals(g, caps)? {
        let good: Vec<&PermGroup> = interval
            .iter()
            .map(|n| Ok((n, is_good_normal(g, n, caps)?)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|(_, ok)| *ok)
            .map(|(n, _)| n)
            .collect();
        for (i, m) in good.iter().enumerate() {
            for n in &good[i..] {
                let mn = m.join(n)?;
                if !interval.contains(&mn) || !is_good_normal(g, &mn, caps)? {
                    return fail(format!("MN is not good for M = {}, N = {}", describe(m), describe(n)));
                }
            }
        }
    }
    Ok(Outcome::Pass)
}

fn doerk(g: &PermGroup, caps: &Caps) -> Result<Outcome> {
    let report = doerk_report(g, caps)?;
    if !report.all_equal() {
        return fail(format!("conditions disagree: {:?}", report.conditions()));
    }
    if report.cond1 != is_f_group(g, caps)? {
        return fail("condition (1) differs from 𝔉-membership".into());
    }
    Ok(Outcome::Pass)
}

fn oracle_agreement(g: &PermGroup, caps: &Caps) -> Result<Outcome> {
    if g.order() > ORACLE_ORDER {
        return Ok(Outcome::Skip(format!("order {} above {ORACLE_ORDER}", g.order())));
    }
    let lattice = frattini_via(g, FrattiniPath::Lattice, caps)?.ok_or(GroupError::NoFrattiniPath(g.order()))?;
    for path in FRATTINI_PATHS {
        if let Some(phi) = frattini_via(g, path, caps)? {
            if phi != lattice {
                return fail(format!("Φ via {path:?} = {} but via the lattice = {}", describe(&phi), describe(&lattice)));
            }
        }
    }
    let a = is_b_group_by_quotients(g, caps)?;
    let b = is_b_group_by_chief_factors(g, caps)?;
    if a != b {
        return fail(format!("𝔅 by quotients {a}, by chief factors {b}"));
    }
    for n in normal_subgroups(g, caps)? {
        let search = find_complement(g, &n, caps)?.is_some();
        let scan = !complements_by_lattice(g, &n, caps)?.is_empty();
        if search != scan {
            return fail(format!("complement of N = {}: search {search}, lattice {scan}", describe(&n)));
        }
        if quotient_in_b(g, &n, caps)? != is_b_group(quotient(g, &n, caps)?.target(), caps)? {
            return fail(format!("𝔅-membership of G/N disagrees for N = {}", describe(&n)));
        }
    }
    Ok(Outcome::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{cyclic, frobenius20, symmetric};

    fn entry(name: &str, g: PermGroup) -> CorpusEntry {
        CorpusEntry { name: name.into(), group: g }
    }

    #[test]
    fn names_round_trip() {
        for c in Check::ALL {
            assert_eq!(Check::from_name(c.name()), Some(c));
        }
        assert_eq!(Check::from_name("nope"), None);
    }

    #[test]
    fn small_groups_pass_everything() {
        let caps = Caps::default();
        let corpus = vec![
            entry("C4", cyclic(4).unwrap()),
            entry("S4", symmetric(4).unwrap()),
            entry("Frob20", frobenius20()),
        ];
        let results = run_corpus(&corpus, &Check::ALL, &caps);
        assert_eq!(results.len(), 3 * Check::ALL.len());
        for r in &results {
            assert!(r.passed(), "{} on {}: {} {:?}", r.check_name, r.group_name, r.status, r.witness);
        }
    }

    #[test]
    fn empty_corpus_is_empty() {
        let results = run_corpus(&[], &Check::ALL, &Caps::default());
        assert!(results.is_empty());
        assert_eq!(render_report(&results), "total 0 passed 0 failed 0 skipped 0\n");
    }

    #[test]
    fn caps_turn_into_skips() {
        let caps = Caps { enumeration: 3, ..Caps::default() };
        let r = run_check(Check::Doerk, "S4", &symmetric(4).unwrap(), &caps);
        assert!(matches!(r.status, CheckStatus::Skipped(_)));
        assert!(r.witness.is_none());
    }
}
