//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use frattini_core::group::is_normal;
use frattini_core::quotient::quotient;
use frattini_core::structure::all_subgroups;
use frattini_core::{Caps, PermGroup, Permutation};

pub fn caps() -> Caps {
    Caps::default()
}

pub fn group(degree: usize, gens: &[&str]) -> PermGroup {
    PermGroup::from_cycles(degree, gens).unwrap()
}

/// Subgroups maximal under inclusion among the proper ones.
pub fn maximal_by_inclusion(g: &PermGroup) -> Vec<PermGroup> {
    let subs = all_subgroups(g, &caps()).unwrap();
    let proper: Vec<&PermGroup> = subs.iter().filter(|s| s.order() < g.order()).collect();
    proper
        .iter()
        .filter(|m| !proper.iter().any(|k| k.order() > m.order() && m.is_subgroup_of(k)))
        .map(|m| (*m).clone())
        .collect()
}

/// Intersection of the maximal subgroups, by filtering elements.
pub fn frattini_oracle(g: &PermGroup) -> PermGroup {
    let mut elems = g.elements(&caps()).unwrap();
    for m in maximal_by_inclusion(g) {
        elems.retain(|x| m.contains(x).unwrap());
    }
    PermGroup::new(g.degree(), elems).unwrap()
}

/// Normal subgroups by filtering the whole lattice.
pub fn normal_oracle(g: &PermGroup) -> Vec<PermGroup> {
    all_subgroups(g, &caps())
        .unwrap()
        .into_iter()
        .filter(|h| is_normal(g, h).unwrap())
        .collect()
}

/// Every quotient Φ-free, with Φ from the lattice oracle.
pub fn in_b_oracle(g: &PermGroup) -> bool {
    normal_oracle(g).iter().all(|n| {
        let q = quotient(g, n, &caps()).unwrap();
        frattini_oracle(q.target()).is_trivial()
    })
}

/// Intersection of the normal subgroups with quotient in 𝔅.
pub fn b_residual_oracle(g: &PermGroup) -> PermGroup {
    let mut elems = g.elements(&caps()).unwrap();
    for n in normal_oracle(g) {
        if in_b_oracle(quotient(g, &n, &caps()).unwrap().target()) {
            elems.retain(|x| n.contains(x).unwrap());
        }
    }
    PermGroup::new(g.degree(), elems).unwrap()
}

/// Subgroups of order `|G:N|` meeting `N` trivially, from the lattice.
pub fn complements_oracle(g: &PermGroup, n: &PermGroup) -> Vec<PermGroup> {
    let m = g.order() / n.order();
    all_subgroups(g, &caps())
        .unwrap()
        .into_iter()
        .filter(|u| u.order() == m && u.elements(&caps()).unwrap().iter().filter(|x| n.contains(x).unwrap()).count() == 1)
        .collect()
}

pub fn is_abelian(h: &PermGroup) -> bool {
    let gens = h.generators();
    gens.iter().all(|x| gens.iter().all(|y| x.compose(y) == y.compose(x)))
}

pub fn perm(degree: usize, s: &str) -> Permutation {
    Permutation::parse(degree, s).unwrap()
}
