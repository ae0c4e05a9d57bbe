//! Class membership: Φ-free, 𝔅, 𝔉 and 𝔑ℭ, good normal subgroups, the
//! S-series and the 𝔅-residual.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{GroupError, Result};
use crate::group::{center, Caps, PermGroup};
use crate::quotient::{quotient, QuotientMap};
use crate::structure::{
    self, chief_series_from, f_prime, f_star_series, find_complement, fitting_subgroup,
    frattini_subgroup, generalized_fitting, layer, minimal_normal_subgroups, normal_subs, socle,
};
use crate::table::{ElementTable, Sub};

type Profile = (Arc<ElementTable>, Arc<Vec<Sub>>, Arc<Vec<Sub>>);

// For each normal subgroup N (in `normal_subs` order) the full preimage of Φ(G/N).
fn phi_profile(g: &PermGroup, caps: &Caps) -> Result<Profile> {
    let (t, subs) = normal_subs(g, caps)?;
    let profile = g.memo_subs(caps, "phi_profile", || {
        let mut out = Vec::with_capacity(subs.len());
        for n in subs.iter() {
            if n.order() == t.len() {
                out.push(n.clone());
                continue;
            }
            let q = QuotientMap::build(g, &t.to_group(n), t.clone(), n, caps)?;
            let phi = frattini_subgroup(q.target(), caps)?;
            let phi_sub = q.target_table().sub_of_group(&phi)?;
            out.push(q.preimage_sub(&phi_sub));
        }
        Ok(Arc::new(out))
    })?;
    Ok((t, subs, profile))
}

fn position(subs: &[Sub], t: &ElementTable, n: &PermGroup) -> Result<usize> {
    let s = t.sub_of_group(n)?;
    subs.iter()
        .position(|x| *x == s)
        .ok_or(GroupError::NotNormal(n.order()))
}

pub fn is_phi_free(g: &PermGroup, caps: &Caps) -> Result<bool> {
    Ok(frattini_subgroup(g, caps)?.is_trivial())
}

/// Full preimage in `G` of `Φ(G/N)`.
pub fn quotient_frattini_preimage(g: &PermGroup, n: &PermGroup, caps: &Caps) -> Result<PermGroup> {
    let (t, subs, profile) = phi_profile(g, caps)?;
    let i = position(&subs, &t, n)?;
    Ok(t.to_group(&profile[i]))
}

/// First normal subgroup `M ≥ N` (ascending order) with `Φ(G/M) ≠ 1`.
fn first_frattini_quotient_above(g: &PermGroup, n: &Sub, caps: &Caps) -> Result<Option<PermGroup>> {
    let (t, subs, profile) = phi_profile(g, caps)?;
    Ok(subs
        .iter()
        .zip(profile.iter())
        .find(|(m, phi)| n.is_subset(m) && *m != *phi)
        .map(|(m, _)| t.to_group(m)))
}

/// Whether `G/N ∈ 𝔅`, read off the quotients of `G` above `N`.
pub fn quotient_in_b(g: &PermGroup, n: &PermGroup, caps: &Caps) -> Result<bool> {
    let t = g.table(caps)?;
    let s = t.sub_of_group(n)?;
    Ok(first_frattini_quotient_above(g, &s, caps)?.is_none())
}

/// `Φ(G/N) = 1` for every normal `N`.
pub fn is_b_group_by_quotients(g: &PermGroup, caps: &Caps) -> Result<bool> {
    let t = g.table(caps)?;
    Ok(first_frattini_quotient_above(g, &t.trivial(), caps)?.is_none())
}

/// No Frattini chief factor, over every chief series obtained by varying the
/// bottom minimal normal subgroup.
pub fn is_b_group_by_chief_factors(g: &PermGroup, caps: &Caps) -> Result<bool> {
    if g.is_trivial() {
        return Ok(true);
    }
    for m in minimal_normal_subgroups(g, caps)? {
        if chief_series_from(g, Some(&m), caps)?.has_frattini_factor()? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership in 𝔅, computed both ways; the routes must agree.
pub fn is_b_group(g: &PermGroup, caps: &Caps) -> Result<bool> {
    g.memo_flag(caps, "is_b", || {
        let a = is_b_group_by_quotients(g, caps)?;
        let b = is_b_group_by_chief_factors(g, caps)?;
        if a != b {
            return Err(GroupError::Internal(format!(
                "𝔅 routes disagree on a group of order {}: quotients {a}, chief factors {b}",
                g.order()
            )));
        }
        Ok(a)
    })
}

/// Smallest normal subgroup with quotient in 𝔅.
pub fn b_residual(g: &PermGroup, caps: &Caps) -> Result<PermGroup> {
    g.memo_group(caps, "b_residual", || {
        let (t, subs, _) = phi_profile(g, caps)?;
        let mut res = t.whole();
        for n in subs.iter() {
            if first_frattini_quotient_above(g, n, caps)?.is_none() {
                res = t.intersection(&res, n);
            }
        }
        let r = t.to_group(&res);
        let q = quotient(g, &r, caps)?;
        if !is_b_group(q.target(), caps)? {
            return Err(GroupError::TheoremViolation(format!(
                "quotient by the intersection of 𝔅-kernels (order {}) is not in 𝔅",
                r.order()
            )));
        }
        Ok(r)
    })
}

/// `Φ(G/N) = Φ(G)N/N`.
pub fn is_good_normal(g: &PermGroup, n: &PermGroup, caps: &Caps) -> Result<bool> {
    let (t, subs, profile) = phi_profile(g, caps)?;
    let i = position(&subs, &t, n)?;
    let phi = t.sub_of_group(&frattini_subgroup(g, caps)?)?;
    Ok(t.join(&phi, &subs[i]) == profile[i])
}

/// Normal subgroups split into good and bad, each in ascending order.
pub fn good_and_bad_normals(g: &PermGroup, caps: &Caps) -> Result<(Vec<PermGroup>, Vec<PermGroup>)> {
    let (t, subs, profile) = phi_profile(g, caps)?;
    let phi = t.sub_of_group(&frattini_subgroup(g, caps)?)?;
    let mut good = Vec::new();
    let mut bad = Vec::new();
    for (n, pre) in subs.iter().zip(profile.iter()) {
        if t.join(&phi, n) == *pre {
            good.push(t.to_group(n));
        } else {
            bad.push(t.to_group(n));
        }
    }
    Ok((good, bad))
}

/// Membership in 𝔉: every normal subgroup is good.
pub fn is_f_group(g: &PermGroup, caps: &Caps) -> Result<bool> {
    Ok(good_and_bad_normals(g, caps)?.1.is_empty())
}

#[derive(Clone, Debug, PartialEq)]
pub enum DoerkWitness {
    Normal(PermGroup),
    Factor { upper: PermGroup, lower: PermGroup },
}

/// The five conditions equivalent to membership in 𝔉, evaluated separately.
#[derive(Clone, Debug)]
pub struct DoerkReport {
    /// every normal subgroup is good
    pub cond1: bool,
    /// `G/Φ(G)` has no Frattini chief factor
    pub cond2: bool,
    /// `G/F(G)` has no Frattini chief factor
    pub cond3: bool,
    /// `G/F′(G)` has no Frattini chief factor
    pub cond4: bool,
    /// `G/C_G(H/K)` has no Frattini chief factor for each chief factor `H/K`
    pub cond5: bool,
    pub witnesses: [Option<DoerkWitness>; 5],
}

impl DoerkReport {
    pub fn conditions(&self) -> [bool; 5] {
        [self.cond1, self.cond2, self.cond3, self.cond4, self.cond5]
    }

    pub fn all_equal(&self) -> bool {
        let c = self.conditions();
        c.iter().all(|&x| x == c[0])
    }
}

// G/X ∈ 𝔅 on the quotient group itself, with a witness from the quotients of G
fn quotient_condition(g: &PermGroup, x: &PermGroup, caps: &Caps) -> Result<(bool, Option<DoerkWitness>)> {
    let q = quotient(g, x, caps)?;
    let ok = is_b_group(q.target(), caps)?;
    let witness = if ok {
        None
    } else {
        let t = g.table(caps)?;
        let w = first_frattini_quotient_above(g, &t.sub_of_group(x)?, caps)?
            .ok_or_else(|| GroupError::Internal("quotient not in 𝔅 but all its quotients are Φ-free".into()))?;
        Some(DoerkWitness::Normal(w))
    };
    Ok((ok, witness))
}

pub fn doerk_report(g: &PermGroup, caps: &Caps) -> Result<DoerkReport> {
    let (_, bad) = good_and_bad_normals(g, caps)?;
    let cond1 = bad.is_empty();
    let w1 = bad.into_iter().next().map(DoerkWitness::Normal);
    let (cond2, w2) = quotient_condition(g, &frattini_subgroup(g, caps)?, caps)?;
    let (cond3, w3) = quotient_condition(g, &fitting_subgroup(g, caps)?, caps)?;
    let (cond4, w4) = quotient_condition(g, &f_prime(g, caps)?, caps)?;
    let mut cond5 = true;
    let mut w5 = None;
    for f in structure::chief_series(g, caps)?.factors {
        let q = quotient(g, &f.centralizer, caps)?;
        if !is_b_group(q.target(), caps)? {
            cond5 = false;
            w5 = Some(DoerkWitness::Factor { upper: f.upper, lower: f.lower });
            break;
        }
    }
    Ok(DoerkReport {
        cond1,
        cond2,
        cond3,
        cond4,
        cond5,
        witnesses: [w1, w2, w3, w4, w5],
    })
}

/// First normal subgroup (ascending order) without a complement.
pub fn non_complemented_normal(g: &PermGroup, caps: &Caps) -> Result<Option<PermGroup>> {
    let (t, subs) = normal_subs(g, caps)?;
    for n in subs.iter() {
        let n = t.to_group(n);
        if find_complement(g, &n, caps)?.is_none() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Membership in 𝔑ℭ: every normal subgroup has a complement.
pub fn is_nc_group(g: &PermGroup, caps: &Caps) -> Result<bool> {
    g.memo_flag(caps, "is_nc", || Ok(non_complemented_normal(g, caps)?.is_none()))
}

/// Whether every term of the generalised Fitting series has a complement.
pub fn splits_over_gf_series(g: &PermGroup, caps: &Caps) -> Result<bool> {
    for term in f_star_series(g, caps)?.terms {
        if find_complement(g, &term, caps)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `1 = S_0 ≤ S_1 ≤ ...` with `S_{i+1}/S_i = Soc(Z(G/S_i))`, stopping when the
/// series becomes stationary or reaches `G`.
pub fn s_series(g: &PermGroup, caps: &Caps) -> Result<Vec<PermGroup>> {
    let mut terms = vec![PermGroup::trivial(g.degree())];
    loop {
        let cur = terms.last().unwrap();
        if cur.order() == g.order() {
            break;
        }
        let q = quotient(g, cur, caps)?;
        let z = center(q.target(), caps)?;
        let next = q.preimage(&socle(&z, caps)?)?;
        if next.order() == cur.order() {
            break;
        }
        terms.push(next);
    }
    Ok(terms)
}

/// Order and generators of a subgroup, generators in cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupCert {
    pub order: u128,
    pub generators: Vec<String>,
}

impl From<&PermGroup> for SubgroupCert {
    fn from(h: &PermGroup) -> Self {
        SubgroupCert {
            order: h.order(),
            generators: h.generators().iter().map(|x| x.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub name: String,
    pub degree: usize,
    pub order: u128,
    pub is_phi_free: bool,
    pub in_b: bool,
    pub in_f: bool,
    pub in_nc: bool,
    pub frattini: SubgroupCert,
    pub fitting: SubgroupCert,
    pub socle: SubgroupCert,
    pub layer: SubgroupCert,
    pub f_star: SubgroupCert,
    pub f_prime: SubgroupCert,
    pub f_star_series: Vec<u128>,
    pub s_series: Vec<u128>,
    pub b_residual: SubgroupCert,
    pub good_normals: Vec<SubgroupCert>,
    pub bad_normals: Vec<SubgroupCert>,
}

pub fn class_report(name: &str, g: &PermGroup, caps: &Caps) -> Result<ClassReport> {
    let is_phi_free = is_phi_free(g, caps)?;
    let in_b = is_b_group(g, caps)?;
    let in_f = is_f_group(g, caps)?;
    let in_nc = is_nc_group(g, caps)?;
    if in_nc && !in_b {
        return Err(GroupError::TheoremViolation("𝔑ℭ-group outside 𝔅".into()));
    }
    if in_b && !is_phi_free {
        return Err(GroupError::TheoremViolation("𝔅-group with nontrivial Frattini subgroup".into()));
    }
    if (in_f && is_phi_free) != in_b {
        return Err(GroupError::TheoremViolation("Φ-free 𝔉-groups differ from 𝔅-groups".into()));
    }
    let (good, bad) = good_and_bad_normals(g, caps)?;
    let certs = |v: &[PermGroup]| v.iter().map(SubgroupCert::from).collect::<Vec<_>>();
    let orders = |v: &[PermGroup]| v.iter().map(|h| h.order()).collect::<Vec<_>>();
    Ok(ClassReport {
        name: name.to_string(),
        degree: g.degree(),
        order: g.order(),
        is_phi_free,
        in_b,
        in_f,
        in_nc,
        frattini: (&frattini_subgroup(g, caps)?).into(),
        fitting: (&fitting_subgroup(g, caps)?).into(),
        socle: (&socle(g, caps)?).into(),
        layer: (&layer(g, caps)?).into(),
        f_star: (&generalized_fitting(g, caps)?).into(),
        f_prime: (&f_prime(g, caps)?).into(),
        f_star_series: orders(&f_star_series(g, caps)?.terms),
        s_series: orders(&s_series(g, caps)?),
        b_residual: (&b_residual(g, caps)?).into(),
        good_normals: certs(&good),
        bad_normals: certs(&bad),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::normal_subgroups;

    fn g(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycles(n, gens).unwrap()
    }

    fn frob20() -> PermGroup {
        g(5, &["(1 2 3 4 5)", "(2 3 5 4)"])
    }

    fn s4() -> PermGroup {
        g(4, &["(1 2)", "(1 2 3 4)"])
    }

    // G/N ∈ 𝔅 by checking Φ on every quotient of the quotient group itself
    fn in_b_oracle(h: &PermGroup) -> bool {
        let caps = Caps::default();
        normal_subgroups(h, &caps).unwrap().iter().all(|n| {
            let q = quotient(h, n, &caps).unwrap();
            frattini_subgroup(q.target(), &caps).unwrap().is_trivial()
        })
    }

    #[test]
    fn frobenius_twenty() {
        let caps = Caps::default();
        let f = frob20();
        assert!(is_phi_free(&f, &caps).unwrap());
        assert!(!is_b_group(&f, &caps).unwrap());
        assert!(!in_b_oracle(&f));
        assert!(!is_f_group(&f, &caps).unwrap());
        assert!(!is_nc_group(&f, &caps).unwrap());
        assert_eq!(b_residual(&f, &caps).unwrap().order(), 10);
        let d = doerk_report(&f, &caps).unwrap();
        assert_eq!(d.conditions(), [false; 5]);
        assert!(d.witnesses.iter().all(|w| w.is_some()));
    }

    #[test]
    fn s4_is_nc() {
        let caps = Caps::default();
        let s = s4();
        assert!(is_b_group(&s, &caps).unwrap());
        assert!(is_nc_group(&s, &caps).unwrap());
        assert!(splits_over_gf_series(&s, &caps).unwrap());
        assert!(is_f_group(&s, &caps).unwrap());
        assert!(doerk_report(&s, &caps).unwrap().all_equal());
        assert!(b_residual(&s, &caps).unwrap().is_trivial());
    }

    #[test]
    fn cyclic_four() {
        let caps = Caps::default();
        let c4 = g(4, &["(1 2 3 4)"]);
        assert!(!is_phi_free(&c4, &caps).unwrap());
        assert!(!is_b_group(&c4, &caps).unwrap());
        assert!(is_f_group(&c4, &caps).unwrap());
        assert_eq!(b_residual(&c4, &caps).unwrap().order(), 2);
        let orders: Vec<u128> = s_series(&c4, &caps).unwrap().iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 4]);
        let d = doerk_report(&c4, &caps).unwrap();
        assert_eq!(d.conditions(), [true; 5]);
    }

    #[test]
    fn s_series_edge_cases() {
        let caps = Caps::default();
        assert_eq!(s_series(&s4(), &caps).unwrap().len(), 1);
        let e = g(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let orders: Vec<u128> = s_series(&e, &caps).unwrap().iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 4]);
    }

    #[test]
    fn trivial_group_is_in_every_class() {
        let caps = Caps::default();
        let t = PermGroup::trivial(3);
        let r = class_report("trivial", &t, &caps).unwrap();
        assert!(r.is_phi_free && r.in_b && r.in_f && r.in_nc);
        assert_eq!(r.frattini.order, 1);
        assert_eq!(r.b_residual.order, 1);
    }

    #[test]
    fn b_membership_of_quotients_matches_oracle() {
        let caps = Caps::default();
        for h in [s4(), frob20(), g(6, &["(1 2 3 4 5 6)", "(1 2)(3 6)(4 5)"])] {
            for n in normal_subgroups(&h, &caps).unwrap() {
                let q = quotient(&h, &n, &caps).unwrap();
                assert_eq!(quotient_in_b(&h, &n, &caps).unwrap(), in_b_oracle(q.target()));
            }
        }
    }
}
