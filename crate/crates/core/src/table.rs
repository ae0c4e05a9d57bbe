//! Enumerated groups: elements indexed in sorted order, subgroups as bitsets.
//!
//! Everything in this module works inside one ambient group whose elements
//! have been listed. Index 0 is always the identity.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

// Above this order products are looked up by hashing instead of a full Cayley table.
const CAYLEY_LIMIT: usize = 2500;

pub(crate) struct ElementTable {
    degree: usize,
    elems: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    cayley: Option<Vec<u32>>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    gens: Vec<u32>,
    classes: OnceLock<Vec<u32>>,
}

/// A subgroup of the ambient table: element bitset plus a small generating set.
#[derive(Clone, Debug)]
pub(crate) struct Sub {
    pub bits: FixedBitSet,
    pub gens: Vec<u32>,
}

impl PartialEq for Sub {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for Sub {}

impl Sub {
    pub fn order(&self) -> usize {
        self.bits.count_ones(..)
    }

    #[inline]
    pub fn has(&self, x: u32) -> bool {
        self.bits.contains(x as usize)
    }

    pub fn is_subset(&self, other: &Sub) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn members(&self) -> impl Iterator<Item = u32> + '_ {
        self.bits.ones().map(|i| i as u32)
    }

    /// Deterministic total order: by size, then by sorted member list.
    pub fn cmp_key(&self, other: &Sub) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.bits.ones().cmp(other.bits.ones()))
    }
}

impl ElementTable {
    pub fn new(group: &PermGroup) -> Self {
        let mut elems = group.chain().elements();
        elems.sort();
        let index: HashMap<Permutation, u32> =
            elems.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        let n = elems.len();
        let inv = elems.iter().map(|p| index[&p.inverse()]).collect();
        let orders = elems.iter().map(|p| p.order() as u32).collect();
        let gens = group.generators().iter().map(|g| index[g]).collect();
        let cayley = (n <= CAYLEY_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elems {
                for b in &elems {
                    t.push(index[&a.compose(b)]);
                }
            }
            t
        });
        ElementTable {
            degree: group.degree(),
            elems,
            index,
            cayley,
            inv,
            orders,
            gens,
            classes: OnceLock::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elems
    }

    pub fn perm(&self, i: u32) -> &Permutation {
        &self.elems[i as usize]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.cayley {
            Some(t) => t[a as usize * self.elems.len() + b as usize],
            None => self.index[&self.elems[a as usize].compose(&self.elems[b as usize])],
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn elem_order(&self, a: u32) -> u32 {
        self.orders[a as usize]
    }

    /// `a^b = b^-1 a b`.
    pub fn conj(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(self.inv(b), a), b)
    }

    pub fn comm(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    fn empty_bits(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.elems.len())
    }

    pub fn trivial(&self) -> Sub {
        let mut bits = self.empty_bits();
        bits.insert(0);
        Sub { bits, gens: Vec::new() }
    }

    pub fn whole(&self) -> Sub {
        self.closure(&self.gens)
    }

    /// `<H, x>` by Dimino-style coset extension.
    pub fn extend(&self, h: &Sub, x: u32) -> Sub {
        if h.has(x) {
            return h.clone();
        }
        let mut gens = h.gens.clone();
        gens.push(x);
        let base: Vec<u32> = h.members().collect();
        let mut bits = h.bits.clone();
        let mut reps = vec![0u32];
        let add_coset = |bits: &mut FixedBitSet, r: u32| {
            for &e in &base {
                bits.insert(self.mul(e, r) as usize);
            }
        };
        add_coset(&mut bits, x);
        reps.push(x);
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i];
            i += 1;
            for &s in &gens {
                let y = self.mul(r, s);
                if !bits.contains(y as usize) {
                    add_coset(&mut bits, y);
                    reps.push(y);
                }
            }
        }
        Sub { bits, gens }
    }

    pub fn closure(&self, gens: &[u32]) -> Sub {
        gens.iter().fold(self.trivial(), |h, &g| self.extend(&h, g))
    }

    pub fn join(&self, a: &Sub, b: &Sub) -> Sub {
        if b.is_subset(a) {
            return a.clone();
        }
        if a.is_subset(b) {
            return b.clone();
        }
        b.gens.iter().fold(a.clone(), |h, &g| self.extend(&h, g))
    }

    /// Subgroup with the given element set (which must be closed); generators
    /// are picked greedily in index order.
    pub fn sub_of_set(&self, bits: FixedBitSet) -> Sub {
        let mut cur = self.trivial();
        for x in bits.ones() {
            if !cur.has(x as u32) {
                cur = self.extend(&cur, x as u32);
            }
        }
        debug_assert_eq!(cur.bits, bits);
        cur
    }

    /// Recomputes a greedy generating set, so equal subgroups get equal generators.
    pub fn canonical(&self, s: &Sub) -> Sub {
        self.sub_of_set(s.bits.clone())
    }

    pub fn intersection(&self, a: &Sub, b: &Sub) -> Sub {
        let mut bits = a.bits.clone();
        bits.intersect_with(&b.bits);
        self.sub_of_set(bits)
    }

    pub fn sub_of_group(&self, h: &PermGroup) -> Result<Sub> {
        if h.degree() != self.degree {
            return Err(GroupError::DegreeMismatch { expected: self.degree, found: h.degree() });
        }
        let gens = h
            .generators()
            .iter()
            .map(|g| self.index_of(g).ok_or(GroupError::NotSubgroup))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.closure(&gens))
    }

    pub fn to_group(&self, s: &Sub) -> PermGroup {
        let canon = self.canonical(s);
        let gens = canon.gens.iter().map(|&g| self.perm(g).clone()).collect();
        PermGroup::new(self.degree, gens).expect("table elements have the table degree")
    }

    pub fn normal_closure(&self, ambient_gens: &[u32], s: &[u32]) -> Sub {
        let mut k = self.closure(s);
        let mut queue: Vec<u32> = k.gens.clone();
        while let Some(x) = queue.pop() {
            for &a in ambient_gens {
                let c = self.conj(x, a);
                if !k.has(c) {
                    k = self.extend(&k, c);
                    queue.push(c);
                }
            }
        }
        k
    }

    pub fn is_normal_in(&self, ambient: &Sub, h: &Sub) -> bool {
        h.gens
            .iter()
            .all(|&x| ambient.gens.iter().all(|&a| h.has(self.conj(x, a))))
    }

    /// Class representative (smallest index) for every element of the ambient
    /// group under conjugation by `ambient`.
    fn class_reps(&self, ambient: &Sub) -> Vec<u32> {
        let mut rep = vec![u32::MAX; self.elems.len()];
        for x in ambient.members() {
            if rep[x as usize] != u32::MAX {
                continue;
            }
            rep[x as usize] = x;
            let mut stack = vec![x];
            while let Some(y) = stack.pop() {
                for &a in &ambient.gens {
                    let c = self.conj(y, a);
                    if rep[c as usize] == u32::MAX {
                        rep[c as usize] = x;
                        stack.push(c);
                    }
                }
            }
        }
        rep
    }

    /// Conjugacy-class representatives of the whole group, cached.
    pub fn whole_class_reps(&self) -> &[u32] {
        self.classes.get_or_init(|| self.class_reps(&self.whole()))
    }

    pub fn conjugacy_reps(&self, ambient: &Sub) -> Vec<u32> {
        let reps = if ambient.order() == self.len() {
            self.whole_class_reps().to_vec()
        } else {
            self.class_reps(ambient)
        };
        ambient.members().filter(|&x| reps[x as usize] == x).collect()
    }

    /// All normal subgroups of `ambient`, as the join-closure of the normal
    /// closures of single elements. Sorted by [`Sub::cmp_key`].
    pub fn normal_subgroups(&self, ambient: &Sub) -> Vec<Sub> {
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        let mut list: Vec<Sub> = Vec::new();
        for r in self.conjugacy_reps(ambient) {
            let n = self.normal_closure(&ambient.gens, &[r]);
            if seen.insert(n.bits.clone()) {
                list.push(n);
            }
        }
        let mut i = 0;
        while i < list.len() {
            for j in 0..i {
                let joined = self.join(&list[i], &list[j]);
                if seen.insert(joined.bits.clone()) {
                    list.push(joined);
                }
            }
            i += 1;
        }
        list.sort_by(|a, b| a.cmp_key(b));
        list.into_iter().map(|s| self.canonical(&s)).collect()
    }

    pub fn centralizer(&self, ambient: &Sub, of: &[u32]) -> Sub {
        let bits: FixedBitSet = ambient
            .members()
            .filter(|&x| of.iter().all(|&y| self.mul(x, y) == self.mul(y, x)))
            .map(|x| x as usize)
            .collect();
        let mut full = self.empty_bits();
        full.union_with(&bits);
        self.sub_of_set(full)
    }

    pub fn center(&self, ambient: &Sub) -> Sub {
        self.centralizer(ambient, &ambient.gens)
    }

    pub fn derived(&self, ambient: &Sub) -> Sub {
        let g = &ambient.gens;
        let mut comms = Vec::new();
        for i in 0..g.len() {
            for j in (i + 1)..g.len() {
                comms.push(self.comm(g[i], g[j]));
            }
        }
        self.normal_closure(g, &comms)
    }

    /// Elements `x` of `ambient` with `[x, k] ∈ lower` for every generator `k` of `upper`.
    pub fn factor_centralizer(&self, ambient: &Sub, upper: &Sub, lower: &Sub) -> Sub {
        let mut bits = self.empty_bits();
        for x in ambient.members() {
            if upper.gens.iter().all(|&k| lower.has(self.comm(x, k))) {
                bits.insert(x as usize);
            }
        }
        self.sub_of_set(bits)
    }

    /// All subgroups of `ambient`, by extending known subgroups one element at a time
    /// starting from the cyclic ones. Sorted by [`Sub::cmp_key`].
    pub fn all_subgroups(&self, ambient: &Sub) -> Vec<Sub> {
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        let mut cyclic_gens: Vec<u32> = Vec::new();
        let mut list: Vec<Sub> = Vec::new();
        let t = self.trivial();
        seen.insert(t.bits.clone());
        list.push(t);
        for x in ambient.members() {
            let c = self.closure(&[x]);
            if seen.insert(c.bits.clone()) {
                cyclic_gens.push(x);
                list.push(c);
            }
        }
        let mut i = 1;
        while i < list.len() {
            let h = list[i].clone();
            let mut marked = h.bits.clone();
            for &x in &cyclic_gens {
                if marked.contains(x as usize) {
                    continue;
                }
                // <H, hx> = <H, x>
                for e in h.members() {
                    marked.insert(self.mul(e, x) as usize);
                }
                let j = self.extend(&h, x);
                if seen.insert(j.bits.clone()) {
                    list.push(j);
                }
            }
            i += 1;
        }
        list.sort_by(|a, b| a.cmp_key(b));
        list.into_iter().map(|s| self.canonical(&s)).collect()
    }

    /// Complements of `n` in `ambient`: subgroups of order `|ambient : n|` meeting `n`
    /// trivially. Backtracks over subgroups built one element at a time, pruning any
    /// partial subgroup whose order does not divide the target or which meets `n`.
    /// With `first_only`, the seed element is restricted to conjugacy-class
    /// representatives and the search stops at the first hit.
    pub fn complements(&self, ambient: &Sub, n: &Sub, first_only: bool) -> Vec<Sub> {
        let total = ambient.order();
        let m = total / n.order();
        if m == 1 {
            return vec![self.trivial()];
        }
        if n.is_trivial() {
            return vec![ambient.clone()];
        }
        let meets_trivially = |s: &Sub| {
            let mut b = s.bits.clone();
            b.intersect_with(&n.bits);
            b.count_ones(..) == 1
        };
        let candidates: Vec<u32> = ambient
            .members()
            .filter(|&x| x != 0 && m.is_multiple_of(self.elem_order(x) as usize) && !n.has(x))
            .filter(|&x| meets_trivially(&self.closure(&[x])))
            .collect();
        let seeds: Vec<u32> = if first_only {
            // any complement can be conjugated to contain a chosen class representative
            let class = if ambient.order() == self.len() {
                self.whole_class_reps().to_vec()
            } else {
                self.class_reps(ambient)
            };
            let mut seen_class = HashSet::new();
            candidates
                .iter()
                .copied()
                .filter(|&x| seen_class.insert(class[x as usize]))
                .collect()
        } else {
            candidates.clone()
        };

        let mut found: Vec<Sub> = Vec::new();
        let mut visited: HashSet<FixedBitSet> = HashSet::new();
        let mut stack: Vec<Sub> = Vec::new();
        for &s in seeds.iter().rev() {
            let c = self.closure(&[s]);
            if visited.insert(c.bits.clone()) {
                stack.push(c);
            }
        }
        while let Some(h) = stack.pop() {
            if h.order() == m {
                found.push(h);
                if first_only {
                    break;
                }
                continue;
            }
            for &x in candidates.iter().rev() {
                if h.has(x) {
                    continue;
                }
                let j = self.extend(&h, x);
                if !m.is_multiple_of(j.order()) || !meets_trivially(&j) {
                    continue;
                }
                if visited.insert(j.bits.clone()) {
                    stack.push(j);
                }
            }
        }
        found.sort_by(|a, b| a.cmp_key(b));
        found.into_iter().map(|s| self.canonical(&s)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(n: usize, gens: &[&str]) -> ElementTable {
        ElementTable::new(&PermGroup::from_cycles(n, gens).unwrap())
    }

    #[test]
    fn identity_first_and_products_consistent() {
        let t = table(4, &["(1 2 3 4)", "(1 2)"]);
        assert_eq!(t.len(), 24);
        assert!(t.perm(0).is_identity());
        for a in 0..24u32 {
            assert_eq!(t.mul(a, t.inv(a)), 0);
            for b in 0..24u32 {
                assert_eq!(t.perm(t.mul(a, b)), &t.perm(a).compose(t.perm(b)));
            }
        }
    }

    // brute force: all subsets closed under product, feasible at order 6
    #[test]
    fn s3_subgroup_count_matches_subset_oracle() {
        let t = table(3, &["(1 2)", "(1 2 3)"]);
        let mut count = 0;
        for mask in 0u32..64 {
            if mask & 1 == 0 {
                continue;
            }
            let closed = (0..6).all(|a| {
                (0..6).all(|b| {
                    mask & (1 << a) == 0 || mask & (1 << b) == 0 || mask & (1 << t.mul(a, b)) != 0
                })
            });
            if closed {
                count += 1;
            }
        }
        assert_eq!(count, 6);
        assert_eq!(t.all_subgroups(&t.whole()).len(), 6);
    }

    #[test]
    fn normal_subgroups_of_s4() {
        let t = table(4, &["(1 2 3 4)", "(1 2)"]);
        let orders: Vec<usize> = t.normal_subgroups(&t.whole()).iter().map(Sub::order).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
    }

    #[test]
    fn complements_in_s4() {
        let t = table(4, &["(1 2 3 4)", "(1 2)"]);
        let normals = t.normal_subgroups(&t.whole());
        let v4 = &normals[1];
        let all = t.complements(&t.whole(), v4, false);
        // the four point stabilisers isomorphic to S3
        assert_eq!(all.len(), 4);
        assert_eq!(t.complements(&t.whole(), v4, true).len(), 1);
    }
}
