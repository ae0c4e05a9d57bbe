//! Structural subgroups: lattices, Frattini, Fitting, socle, layer, the
//! generalised Fitting series, chief series and complements.

use std::collections::HashSet;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{CapKind, GroupError, Result};
use crate::group::{derived_subgroup, is_normal, Caps, PermGroup};
use crate::quotient::{quotient, QuotientMap};
use crate::table::{ElementTable, Sub};

// ---------------------------------------------------------------------------
// internal table-level helpers

pub(crate) fn normal_subs(g: &PermGroup, caps: &Caps) -> Result<(Arc<ElementTable>, Arc<Vec<Sub>>)> {
    let t = g.table(caps)?;
    let subs = g.memo_subs(caps, "normal_subs", || Ok(Arc::new(t.normal_subgroups(&t.whole()))))?;
    Ok((t, subs))
}

fn lattice_subs(g: &PermGroup, caps: &Caps) -> Result<(Arc<ElementTable>, Arc<Vec<Sub>>)> {
    caps.check(CapKind::Lattice, g.order())?;
    let t = g.table(caps)?;
    let subs = g.memo_subs(caps, "lattice", || Ok(Arc::new(t.all_subgroups(&t.whole()))))?;
    Ok((t, subs))
}

fn to_groups(t: &ElementTable, subs: &[Sub]) -> Vec<PermGroup> {
    subs.iter().map(|s| t.to_group(s)).collect()
}

fn prime_factors(mut n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut p = 2u128;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn is_prime(n: u128) -> bool {
    n >= 2 && prime_factors(n) == vec![n]
}

fn is_prime_power_of(n: u128, p: u128) -> bool {
    let mut n = n;
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// The prime `p` if `|G|` is a power of `p` (`None` for the trivial group too).
pub fn p_group_prime(g: &PermGroup) -> Option<u128> {
    match prime_factors(g.order()).as_slice() {
        [p] => Some(*p),
        _ => None,
    }
}

/// `A ∩ B` for subgroups of `G`.
pub fn intersection(g: &PermGroup, a: &PermGroup, b: &PermGroup, caps: &Caps) -> Result<PermGroup> {
    let t = g.table(caps)?;
    let (sa, sb) = (t.sub_of_group(a)?, t.sub_of_group(b)?);
    Ok(t.to_group(&t.intersection(&sa, &sb)))
}

// ---------------------------------------------------------------------------
// lattices

/// Every subgroup, smallest first.
pub fn all_subgroups(g: &PermGroup, caps: &Caps) -> Result<Vec<PermGroup>> {
    let (t, subs) = lattice_subs(g, caps)?;
    Ok(to_groups(&t, &subs))
}

fn maximal_subs(t: &ElementTable, lattice: &[Sub]) -> Vec<Sub> {
    let Some(whole) = lattice.last() else { return Vec::new() };
    let proper: Vec<&Sub> = lattice.iter().filter(|s| *s != whole).collect();
    proper
        .iter()
        .filter(|h| {
            !proper
                .iter()
                .any(|k| k.order() > h.order() && h.is_subset(k))
        })
        .map(|h| t.canonical(h))
        .collect()
}

pub fn maximal_subgroups(g: &PermGroup, caps: &Caps) -> Result<Vec<PermGroup>> {
    let (t, subs) = lattice_subs(g, caps)?;
    Ok(to_groups(&t, &maximal_subs(&t, &subs)))
}

pub fn normal_subgroups(g: &PermGroup, caps: &Caps) -> Result<Vec<PermGroup>> {
    let list = g.memo_groups(caps, "normal_subgroups", || {
        let (t, subs) = normal_subs(g, caps)?;
        Ok(Arc::new(to_groups(&t, &subs)))
    })?;
    Ok(list.as_ref().clone())
}

fn minimal_normal_subs(subs: &[Sub]) -> Vec<Sub> {
    subs.iter()
        .filter(|s| !s.is_trivial())
        .filter(|s| {
            !subs
                .iter()
                .any(|k| !k.is_trivial() && k.order() < s.order() && k.is_subset(s))
        })
        .cloned()
        .collect()
}

pub fn minimal_normal_subgroups(g: &PermGroup, caps: &Caps) -> Result<Vec<PermGroup>> {
    let (t, subs) = normal_subs(g, caps)?;
    Ok(to_groups(&t, &minimal_normal_subs(&subs)))
}

pub(crate) fn socle_sub(t: &ElementTable, subs: &[Sub]) -> Sub {
    minimal_normal_subs(subs)
        .iter()
        .fold(t.trivial(), |acc, m| t.join(&acc, m))
}

pub fn socle(g: &PermGroup, caps: &Caps) -> Result<PermGroup> {
    g.memo_group(caps, "socle", || {
        let (t, subs) = normal_subs(g, caps)?;
        Ok(t.to_group(&socle_sub(&t, &subs)))
    })
}

// ---------------------------------------------------------------------------
// Fitting subgroup and predicates

fn p_core_sub(t: &ElementTable, subs: &[Sub], p: u128) -> Sub {
    // normal p-subgroups are closed under joins, so the largest one is unique
    subs.iter()
        .filter(|s| is_prime_power_of(s.order() as u128, p))
        .max_by_key(|s| s.order())
        .cloned()
        .unwrap_or_else(|| t.trivial())
}

/// Largest normal `p`-subgroup.
pub fn p_core(g: &PermGroup, p: u128, caps: &Caps) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(GroupError::InvalidParameter(format!("{p} is not prime")));
    }
    let (t, subs) = normal_subs(g, caps)?;
    Ok(t.to_group(&p_core_sub(&t, &subs, p)))
}

pub(crate) fn fitting_sub(g: &PermGroup, caps: &Caps) -> Result<(Arc<ElementTable>, Sub)> {
    let (t, subs) = normal_subs(g, caps)?;
    let f = prime_factors(g.order())
        .into_iter()
        .map(|p| p_core_sub(&t, &subs, p))
        .fold(t.trivial(), |acc, c| t.join(&acc, &c));
    Ok((t.clone(), t.canonical(&f)))
}

pub fn fitting_subgroup(g: &PermGroup, caps: &Caps) -> Result<PermGroup> {
    g.memo_group(caps, "fitting", || {
        let (t, f) = fitting_sub(g, caps)?;
        Ok(t.to_group(&f))
    })
}

pub fn is_nilpotent(g: &PermGroup, caps: &Caps) -> Result<bool> {
    if g.order() == 1 || p_group_prime(g).is_some() {
        return Ok(true);
    }
    Ok(fitting_subgroup(g, caps)?.order() == g.order())
}

pub fn derived_series(g: &PermGroup) -> Vec<PermGroup> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().unwrap();
        let d = derived_subgroup(last);
        if d.order() == last.order() {
            break;
        }
        series.push(d);
    }
    series
}

pub fn is_soluble(g: &PermGroup) -> bool {
    derived_series(g).last().unwrap().is_trivial()
}

pub fn is_perfect(g: &PermGroup) -> bool {
    derived_subgroup(g).order() == g.order()
}

pub fn is_simple(g: &PermGroup, caps: &Caps) -> Result<bool> {
    if g.order() == 1 {
        return Ok(false);
    }
    if is_prime(g.order()) {
        return Ok(true);
    }
    let (_, subs) = normal_subs(g, caps)?;
    Ok(subs.len() == 2)
}

pub fn is_quasisimple(g: &PermGroup, caps: &Caps) -> Result<bool> {
    if g.order() == 1 || !is_perfect(g) {
        return Ok(false);
    }
    let t = g.table(caps)?;
    Ok(quasisimple_in(&t, &t.whole()))
}

// perfect, and the normal subgroups containing the centre are exactly Z and H
fn quasisimple_in(t: &ElementTable, h: &Sub) -> bool {
    if h.is_trivial() || t.derived(h) != *h {
        return false;
    }
    let z = t.center(h);
    if z == *h {
        return false;
    }
    t.normal_subgroups(h).iter().filter(|n| z.is_subset(n)).count() == 2
}

// ---------------------------------------------------------------------------
// Frattini subgroup

/// Independent routes to `Φ(G)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum FrattiniPath {
    /// Intersection of the maximal subgroups from the full lattice.
    Lattice,
    /// `Φ(G) ≤ F(G)`, so a trivial Fitting subgroup forces `Φ(G) = 1`.
    TrivialFitting,
    /// `Φ(P) = P'P^p` for a `p`-group.
    PGroup,
    /// Reduction to the abelian normal section `F(G)/Φ(F(G))`: `Φ(G)` is the
    /// intersection of the maximal `G`-invariant subgroups `B` of `F(G)` over
    /// `Φ(F(G))` for which `F(G)/B` is complemented in `G/B`.
    FittingModule,
}

pub const FRATTINI_PATHS: [FrattiniPath; 4] = [
    FrattiniPath::PGroup,
    FrattiniPath::TrivialFitting,
    FrattiniPath::FittingModule,
    FrattiniPath::Lattice,
];

/// `Φ(G)` along one path; `Ok(None)` when the path does not apply.
pub fn frattini_via(g: &PermGroup, path: FrattiniPath, caps: &Caps) -> Result<Option<PermGroup>> {
    if g.is_trivial() {
        return Ok(Some(g.clone()));
    }
    match path {
        FrattiniPath::Lattice => {
            if g.order() > caps.lattice {
                return Ok(None);
            }
            let (t, subs) = lattice_subs(g, caps)?;
            let phi = maximal_subs(&t, &subs)
                .iter()
                .fold(t.whole(), |acc, m| t.intersection(&acc, m));
            Ok(Some(t.to_group(&phi)))
        }
        FrattiniPath::TrivialFitting => {
            let f = fitting_subgroup(g, caps)?;
            Ok(f.is_trivial().then(|| PermGroup::trivial(g.degree())))
        }
        FrattiniPath::PGroup => Ok(p_group_prime(g).map(|p| p_group_frattini(g, p))),
        FrattiniPath::FittingModule => fitting_module_frattini(g, caps),
    }
}

/// `G'G^p` when `G` is a nontrivial `p`-group.
pub fn p_group_frattini_formula(g: &PermGroup) -> Option<PermGroup> {
    p_group_prime(g).map(|p| p_group_frattini(g, p))
}

fn p_group_frattini(g: &PermGroup, p: u128) -> PermGroup {
    let mut phi = derived_subgroup(g);
    for x in g.generators() {
        phi = phi.with_generator(&x.pow(p as u64)).expect("same degree");
    }
    phi
}

fn fitting_module_frattini(g: &PermGroup, caps: &Caps) -> Result<Option<PermGroup>> {
    let (t, subs) = normal_subs(g, caps)?;
    let (_, f) = fitting_sub(g, caps)?;
    if f.is_trivial() {
        return Ok(Some(PermGroup::trivial(g.degree())));
    }
    let index = (t.len() / f.order()) as u128;
    if index > caps.complement || index > caps.index {
        return Ok(None);
    }
    // Φ(F) ≤ Φ(G), and F/Φ(F) is abelian
    let fg = t.to_group(&f);
    let mut d = t.trivial();
    for p in prime_factors(f.order() as u128) {
        let core = t.sub_of_group(&p_core(&fg, p, caps)?)?;
        let pc = t.to_group(&core);
        let phi_p = t.sub_of_group(&p_group_frattini(&pc, p))?;
        d = t.join(&d, &phi_p);
    }
    let mut result = f.bits.clone();
    for b in subs.iter() {
        if !(d.is_subset(b) && b.is_subset(&f) && *b != f) {
            continue;
        }
        let chief = !subs
            .iter()
            .any(|x| x.order() > b.order() && x.order() < f.order() && b.is_subset(x) && x.is_subset(&f));
        if !chief {
            continue;
        }
        let q = QuotientMap::build(g, &t.to_group(b), t.clone(), b, caps)?;
        let tt = q.target_table();
        let fimg = q.image_sub(&f);
        if !tt.complements(&tt.whole(), &fimg, true).is_empty() {
            result.intersect_with(&b.bits);
        }
    }
    Ok(Some(t.to_group(&t.sub_of_set(result))))
}

/// `Φ(G)`, trying the cheap paths first and the lattice last.
pub fn frattini_subgroup(g: &PermGroup, caps: &Caps) -> Result<PermGroup> {
    g.memo_group(caps, "frattini", || {
        if g.is_trivial() {
            return Ok(g.clone());
        }
        for path in FRATTINI_PATHS {
            match frattini_via(g, path, caps) {
                Ok(Some(phi)) => return Ok(phi),
                Ok(None) => {}
                Err(e) if e.is_cap() => {}
                Err(e) => return Err(e),
            }
        }
        Err(GroupError::NoFrattiniPath(g.order()))
    })
}

// ---------------------------------------------------------------------------
// subnormal subgroups, components, layer

pub(crate) fn subnormal_subs(g: &PermGroup, caps: &Caps) -> Result<(Arc<ElementTable>, Arc<Vec<Sub>>)> {
    let t = g.table(caps)?;
    let subs = g.memo_subs(caps, "subnormal", || {
        let whole = t.whole();
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        seen.insert(whole.bits.clone());
        let mut out = vec![whole.clone()];
        let mut stack = vec![whole];
        while let Some(h) = stack.pop() {
            for n in t.normal_subgroups(&h) {
                if seen.insert(n.bits.clone()) {
                    out.push(n.clone());
                    stack.push(n);
                }
            }
        }
        out.sort_by(|a, b| a.cmp_key(b));
        Ok(Arc::new(out))
    })?;
    Ok((t, subs))
}

pub fn subnormal_subgroups(g: &PermGroup, caps: &Caps) -> Result<Vec<PermGroup>> {
    let (t, subs) = subnormal_subs(g, caps)?;
    Ok(to_groups(&t, &subs))
}

fn component_subs(g: &PermGroup, caps: &Caps) -> Result<(Arc<ElementTable>, Vec<Sub>)> {
    let (t, subs) = subnormal_subs(g, caps)?;
    let comps: Vec<Sub> = subs.iter().filter(|h| quasisimple_in(&t, h)).cloned().collect();
    for (i, a) in comps.iter().enumerate() {
        for b in &comps[i + 1..] {
            let commute = a
                .gens
                .iter()
                .all(|&x| b.gens.iter().all(|&y| t.mul(x, y) == t.mul(y, x)));
            if !commute {
                return Err(GroupError::TheoremViolation(format!(
                    "components of orders {} and {} do not commute",
                    a.order(),
                    b.order()
                )));
            }
        }
    }
    Ok((t, comps))
}

/// Subnormal quasisimple subgroups.
pub fn components(g: &PermGroup, caps: &Caps) -> Result<Vec<PermGroup>> {
    let (t, comps) = component_subs(g, caps)?;
    Ok(to_groups(&t, &comps))
}

pub fn layer(g: &PermGroup, caps: &Caps) -> Result<PermGroup> {
    g.memo_group(caps, "layer", || {
        let (t, comps) = component_subs(g, caps)?;
        let lay = comps.iter().fold(t.trivial(), |acc, c| t.join(&acc, c));
        Ok(t.to_group(&lay))
    })
}

/// `F*(G) = F(G) Lay(G)`.
pub fn generalized_fitting(g: &PermGroup, caps: &Caps) -> Result<PermGroup> {
    g.memo_group(caps, "f_star", || {
        let t = g.table(caps)?;
        let f = t.sub_of_group(&fitting_subgroup(g, caps)?)?;
        let l = t.sub_of_group(&layer(g, caps)?)?;
        Ok(t.to_group(&t.join(&f, &l)))
    })
}

/// `1 = F*_0 < F*_1 < ... < F*_m = G` with `F*_{i+1}/F*_i = F*(G/F*_i)`.
#[derive(Clone, Debug)]
pub struct GFSeries {
    pub terms: Vec<PermGroup>,
}

impl GFSeries {
    /// Generalised Fitting length.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }
}

pub fn f_star_series(g: &PermGroup, caps: &Caps) -> Result<GFSeries> {
    let mut terms = vec![PermGroup::trivial(g.degree())];
    while terms.last().unwrap().order() < g.order() {
        if terms.len() as u128 > g.order() {
            return Err(GroupError::Internal("F* series failed to reach G".into()));
        }
        let cur = terms.last().unwrap();
        let q = quotient(g, cur, caps)?;
        let fs = generalized_fitting(q.target(), caps)?;
        let next = q.preimage(&fs)?;
        if next.order() == cur.order() {
            return Err(GroupError::Internal(format!(
                "F* of a nontrivial quotient of order {} is trivial",
                q.target().order()
            )));
        }
        terms.push(next);
    }
    Ok(GFSeries { terms })
}

/// Preimage of `Soc(G/Φ(G))`.
pub fn f_prime(g: &PermGroup, caps: &Caps) -> Result<PermGroup> {
    g.memo_group(caps, "f_prime", || {
        let phi = frattini_subgroup(g, caps)?;
        let q = quotient(g, &phi, caps)?;
        q.preimage(&socle(q.target(), caps)?)
    })
}

// ---------------------------------------------------------------------------
// chief series

#[derive(Clone, Debug)]
pub struct ChiefFactorInfo {
    pub lower: PermGroup,
    pub upper: PermGroup,
    pub factor_order: u128,
    pub is_abelian: bool,
    /// Whether `upper/lower ≤ Φ(G/lower)`; an error if `Φ(G/lower)` was not computable.
    pub is_frattini: Result<bool>,
    /// `C_G(upper/lower)`.
    pub centralizer: PermGroup,
}

#[derive(Clone, Debug)]
pub struct ChiefSeries {
    pub group: PermGroup,
    pub terms: Vec<PermGroup>,
    pub factors: Vec<ChiefFactorInfo>,
}

impl ChiefSeries {
    /// Whether some factor is Frattini; an error if a flag is missing.
    pub fn has_frattini_factor(&self) -> Result<bool> {
        for f in &self.factors {
            if f.is_frattini.clone()? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

pub fn chief_series(g: &PermGroup, caps: &Caps) -> Result<ChiefSeries> {
    chief_series_from(g, None, caps)
}

/// Chief series whose first term is `first` (which must be minimal normal), or
/// the first minimal normal subgroup in scan order when `None`.
pub fn chief_series_from(g: &PermGroup, first: Option<&PermGroup>, caps: &Caps) -> Result<ChiefSeries> {
    let t = g.table(caps)?;
    let whole = t.whole();
    let mut terms = vec![PermGroup::trivial(g.degree())];
    let mut factors = Vec::new();
    let mut first = first.cloned();
    while terms.last().unwrap().order() < g.order() {
        let lower = terms.last().unwrap().clone();
        let q = quotient(g, &lower, caps)?;
        let upper = match first.take() {
            Some(n) => {
                let mins = minimal_normal_subgroups(g, caps)?;
                if !mins.contains(&n) {
                    return Err(GroupError::InvalidParameter(
                        "first chief series term must be a minimal normal subgroup".into(),
                    ));
                }
                n
            }
            None => {
                let mins = minimal_normal_subgroups(q.target(), caps)?;
                q.preimage(&mins[0])?
            }
        };
        let upper_img = q.image_group(&upper)?;
        let is_frattini = frattini_subgroup(q.target(), caps).map(|phi| upper_img.is_subgroup_of(&phi));
        let is_abelian = upper
            .generators()
            .iter()
            .all(|x| upper.generators().iter().all(|y| lower.has(&x.commutator(y))));
        let centralizer = t.to_group(&t.factor_centralizer(
            &whole,
            &t.sub_of_group(&upper)?,
            &t.sub_of_group(&lower)?,
        ));
        factors.push(ChiefFactorInfo {
            factor_order: upper.order() / lower.order(),
            lower,
            upper: upper.clone(),
            is_abelian,
            is_frattini,
            centralizer,
        });
        terms.push(upper);
    }
    Ok(ChiefSeries { group: g.clone(), terms, factors })
}

// ---------------------------------------------------------------------------
// complements

fn complement_setup(g: &PermGroup, n: &PermGroup, caps: &Caps) -> Result<(Arc<ElementTable>, Sub)> {
    if !is_normal(g, n)? {
        return Err(GroupError::NotNormal(n.order()));
    }
    let t = g.table(caps)?;
    let ns = t.sub_of_group(n)?;
    Ok((t, ns))
}

/// A complement of the normal subgroup `n`, or `None` if none exists.
pub fn find_complement(g: &PermGroup, n: &PermGroup, caps: &Caps) -> Result<Option<PermGroup>> {
    let m = g.order() / n.order();
    if !is_normal(g, n)? {
        return Err(GroupError::NotNormal(n.order()));
    }
    if m == 1 {
        return Ok(Some(PermGroup::trivial(g.degree())));
    }
    if n.is_trivial() {
        return Ok(Some(g.clone()));
    }
    caps.check(CapKind::Complement, m)?;
    let (t, ns) = complement_setup(g, n, caps)?;
    Ok(t.complements(&t.whole(), &ns, true).first().map(|c| t.to_group(c)))
}

/// Every complement of `n`, by exhaustive backtracking.
pub fn all_complements(g: &PermGroup, n: &PermGroup, caps: &Caps) -> Result<Vec<PermGroup>> {
    let m = g.order() / n.order();
    if m > 1 && !n.is_trivial() {
        caps.check(CapKind::Complement, m)?;
    }
    let (t, ns) = complement_setup(g, n, caps)?;
    Ok(to_groups(&t, &t.complements(&t.whole(), &ns, false)))
}

/// Complements of `n` read off the full subgroup lattice.
pub fn complements_by_lattice(g: &PermGroup, n: &PermGroup, caps: &Caps) -> Result<Vec<PermGroup>> {
    let (t, subs) = lattice_subs(g, caps)?;
    let ns = complement_setup(g, n, caps)?.1;
    let m = t.len() / ns.order();
    Ok(subs
        .iter()
        .filter(|u| u.order() == m && t.intersection(u, &ns).is_trivial())
        .map(|u| t.to_group(u))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycles(n, gens).unwrap()
    }

    fn s4() -> PermGroup {
        g(4, &["(1 2)", "(1 2 3 4)"])
    }

    fn d8() -> PermGroup {
        g(4, &["(1 2 3 4)", "(1 3)"])
    }

    // intersection of the subgroups that are maximal under inclusion, by brute force
    fn frattini_oracle(h: &PermGroup) -> PermGroup {
        let caps = Caps::default();
        let subs = all_subgroups(h, &caps).unwrap();
        let proper: Vec<&PermGroup> = subs.iter().filter(|s| s.order() < h.order()).collect();
        let mut elems = h.elements(&caps).unwrap();
        for m in &proper {
            if proper.iter().any(|k| k.order() > m.order() && m.is_subgroup_of(k)) {
                continue;
            }
            elems.retain(|x| m.has(x));
        }
        PermGroup::new(h.degree(), elems).unwrap()
    }

    #[test]
    fn frattini_paths_agree_with_oracle() {
        let caps = Caps::default();
        let groups = [
            s4(),
            d8(),
            g(8, &["(1 2 3 4 5 6 7 8)"]),
            g(4, &["(1 2)(3 4)", "(1 3)(2 4)"]),
            g(6, &["(1 2 3)", "(1 2)", "(4 5 6)", "(4 5)"]),
            g(5, &["(1 2 3 4 5)", "(2 3 5 4)"]),
            g(9, &["(1 2 3 4 5 6 7 8 9)", "(2 9)(3 8)(4 7)(5 6)"]),
            g(7, &["(1 2 3 4)(5 6)", "(5 6 7)"]),
        ];
        for h in &groups {
            let oracle = frattini_oracle(h);
            assert_eq!(frattini_subgroup(h, &caps).unwrap(), oracle);
            for path in FRATTINI_PATHS {
                if let Some(phi) = frattini_via(h, path, &caps).unwrap() {
                    assert_eq!(phi, oracle, "{path:?} on order {}", h.order());
                }
            }
        }
        assert_eq!(frattini_subgroup(&d8(), &caps).unwrap().order(), 2);
        assert_eq!(frattini_subgroup(&g(7, &["(1 2 3 4)(5 6)", "(5 6 7)"]), &caps).unwrap().order(), 2);
    }

    #[test]
    fn fitting_socle_and_predicates() {
        let caps = Caps::default();
        let s = s4();
        assert_eq!(fitting_subgroup(&s, &caps).unwrap().order(), 4);
        assert_eq!(socle(&s, &caps).unwrap().order(), 4);
        assert_eq!(p_core(&s, 3, &caps).unwrap().order(), 1);
        assert!(p_core(&s, 4, &caps).is_err());
        assert!(is_soluble(&s));
        assert!(!is_nilpotent(&s, &caps).unwrap());
        assert!(is_nilpotent(&d8(), &caps).unwrap());
        let a5 = g(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        assert!(is_simple(&a5, &caps).unwrap());
        assert!(is_quasisimple(&a5, &caps).unwrap());
        assert!(!is_soluble(&a5));
        assert!(!is_simple(&s, &caps).unwrap());
        assert_eq!(layer(&a5, &caps).unwrap().order(), 60);
        assert_eq!(layer(&s, &caps).unwrap().order(), 1);
        assert_eq!(generalized_fitting(&s, &caps).unwrap().order(), 4);
    }

    #[test]
    fn minimal_normals_of_v4_times_c3() {
        let caps = Caps::default();
        let h = g(7, &["(1 2)(3 4)", "(1 3)(2 4)", "(5 6 7)"]);
        let orders: Vec<u128> = minimal_normal_subgroups(&h, &caps).unwrap().iter().map(|m| m.order()).collect();
        assert_eq!(orders, vec![2, 2, 2, 3]);
        assert_eq!(socle(&h, &caps).unwrap().order(), 12);
    }

    #[test]
    fn f_star_series_of_s4() {
        let caps = Caps::default();
        let series = f_star_series(&s4(), &caps).unwrap();
        let orders: Vec<u128> = series.terms.iter().map(|t| t.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        assert_eq!(series.length(), 3);
    }

    #[test]
    fn chief_series_of_s4() {
        let caps = Caps::default();
        let cs = chief_series(&s4(), &caps).unwrap();
        let orders: Vec<u128> = cs.factors.iter().map(|f| f.factor_order).collect();
        assert_eq!(orders, vec![4, 3, 2]);
        assert!(cs.factors.iter().all(|f| f.is_abelian));
        assert!(!cs.has_frattini_factor().unwrap());
        // C_G(V4) = V4 in S4
        assert_eq!(cs.factors[0].centralizer.order(), 4);
        let c8 = g(8, &["(1 2 3 4 5 6 7 8)"]);
        let cs = chief_series(&c8, &caps).unwrap();
        let flags: Vec<bool> = cs.factors.iter().map(|f| f.is_frattini.clone().unwrap()).collect();
        assert_eq!(flags, vec![true, true, false]);
    }

    #[test]
    fn complements_search_matches_lattice() {
        let caps = Caps::default();
        let s = s4();
        for n in normal_subgroups(&s, &caps).unwrap() {
            let by_search = all_complements(&s, &n, &caps).unwrap();
            let by_lattice = complements_by_lattice(&s, &n, &caps).unwrap();
            assert_eq!(by_search.len(), by_lattice.len(), "normal of order {}", n.order());
            assert_eq!(find_complement(&s, &n, &caps).unwrap().is_some(), !by_lattice.is_empty());
        }
        let c4 = g(4, &["(1 2 3 4)"]);
        let c2 = g(4, &["(1 3)(2 4)"]);
        assert!(find_complement(&c4, &c2, &caps).unwrap().is_none());
        let not_normal = g(4, &["(1 2)"]);
        assert!(matches!(find_complement(&s, &not_normal, &caps), Err(GroupError::NotNormal(2))));
    }

    #[test]
    fn subnormal_subgroups_of_d8() {
        let caps = Caps::default();
        // every subgroup of a nilpotent group is subnormal
        assert_eq!(subnormal_subgroups(&d8(), &caps).unwrap().len(), 10);
        assert_eq!(all_subgroups(&d8(), &caps).unwrap().len(), 10);
        assert_eq!(maximal_subgroups(&d8(), &caps).unwrap().len(), 3);
    }

    #[test]
    fn lattice_cap_enforced() {
        let caps = Caps { lattice: 10, ..Caps::default() };
        assert!(matches!(
            all_subgroups(&s4(), &caps),
            Err(GroupError::CapExceeded { kind: CapKind::Lattice, .. })
        ));
        // fast paths still give the answer
        assert!(frattini_subgroup(&s4(), &caps).unwrap().is_trivial());
    }
}
