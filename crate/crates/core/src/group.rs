//! Permutation groups given by generators.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::chain::StabChain;
use crate::error::{CapKind, GroupError, Result};
use crate::perm::Permutation;
use crate::table::{ElementTable, Sub};

/// Size limits for the exhaustive algorithms. Exceeding one is an error, never a truncation.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Caps {
    /// Largest group whose full subgroup lattice may be enumerated.
    pub lattice: u128,
    /// Largest group whose elements may be listed.
    pub enumeration: u128,
    /// Largest index of a quotient built as a coset action.
    pub index: u128,
    /// Largest complement order the complement search will look for.
    pub complement: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { lattice: 400, enumeration: 10_000, index: 10_000, complement: 500 }
    }
}

impl Caps {
    pub(crate) fn check(&self, kind: CapKind, needed: u128) -> Result<()> {
        let cap = match kind {
            CapKind::Lattice => self.lattice,
            CapKind::Enumeration => self.enumeration,
            CapKind::Index => self.index,
            CapKind::Complement => self.complement,
        };
        if needed > cap {
            Err(GroupError::CapExceeded { kind, needed, cap })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) enum Memo {
    Group(Result<PermGroup>),
    Groups(Result<Arc<Vec<PermGroup>>>),
    Flag(Result<bool>),
    Subs(Result<Arc<Vec<Sub>>>),
}

#[derive(Default)]
pub(crate) struct GroupCache {
    table: OnceLock<Arc<ElementTable>>,
    memo: Mutex<HashMap<(Caps, &'static str), Memo>>,
}

impl fmt::Debug for GroupCache {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("GroupCache")
    }
}

/// A permutation group with an eagerly built stabilizer chain.
///
/// Equality is equality of element sets. Clones share the lazily computed
/// analysis cache, which never changes observable results.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: Arc<StabChain>,
    order: u128,
    cache: Arc<GroupCache>,
}

impl PermGroup {
    /// Builds the group generated by `gens`; identity generators are dropped.
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(GroupError::ZeroDegree);
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let generators: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let chain = StabChain::from_generators(degree, &generators);
        Ok(Self::with_chain(degree, generators, chain))
    }

    /// Parses generators in cycle notation.
    pub fn from_cycles(degree: usize, gens: &[&str]) -> Result<Self> {
        let perms = gens
            .iter()
            .map(|s| Permutation::parse(degree, s))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(degree, perms)
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree.max(1), Vec::new()).expect("trivial group")
    }

    pub(crate) fn with_chain(degree: usize, generators: Vec<Permutation>, chain: StabChain) -> Self {
        let order = chain.order();
        PermGroup {
            degree,
            generators,
            chain: Arc::new(chain),
            order,
            cache: Arc::new(GroupCache::default()),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Membership by sifting through the stabilizer chain.
    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(GroupError::DegreeMismatch { expected: self.degree, found: g.degree() });
        }
        Ok(self.chain.contains(g))
    }

    pub(crate) fn has(&self, g: &Permutation) -> bool {
        self.chain.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && other.order.is_multiple_of(self.order)
            && self.generators.iter().all(|g| other.has(g))
    }

    /// The group generated by `self` and one more element.
    pub fn with_generator(&self, g: &Permutation) -> Result<PermGroup> {
        if g.degree() != self.degree {
            return Err(GroupError::DegreeMismatch { expected: self.degree, found: g.degree() });
        }
        if self.has(g) {
            return Ok(self.clone());
        }
        let mut chain = (*self.chain).clone();
        chain.add_generator(g);
        let mut gens = self.generators.clone();
        gens.push(g.clone());
        Ok(PermGroup::with_chain(self.degree, gens, chain))
    }

    /// Subgroup generated by both groups.
    pub fn join(&self, other: &PermGroup) -> Result<PermGroup> {
        let mut out = self.clone();
        for g in other.generators() {
            out = out.with_generator(g)?;
        }
        Ok(out)
    }

    /// Every element in a deterministic (sorted) order.
    pub fn elements(&self, caps: &Caps) -> Result<Vec<Permutation>> {
        Ok(self.table(caps)?.elements().to_vec())
    }

    /// The element table, built on first use.
    pub(crate) fn table(&self, caps: &Caps) -> Result<Arc<ElementTable>> {
        caps.check(CapKind::Enumeration, self.order)?;
        Ok(self
            .cache
            .table
            .get_or_init(|| Arc::new(ElementTable::new(self)))
            .clone())
    }

    pub(crate) fn memo<T>(
        &self,
        caps: &Caps,
        key: &'static str,
        wrap: impl Fn(Result<T>) -> Memo,
        unwrap: impl Fn(Memo) -> Option<Result<T>>,
        compute: impl FnOnce() -> Result<T>,
    ) -> Result<T>
    where
        T: Clone,
    {
        if let Some(m) = self.cache.memo.lock().unwrap().get(&(*caps, key)).cloned() {
            if let Some(r) = unwrap(m) {
                return r;
            }
        }
        let r = compute();
        self.cache.memo.lock().unwrap().insert((*caps, key), wrap(r.clone()));
        r
    }

    pub(crate) fn memo_group(
        &self,
        caps: &Caps,
        key: &'static str,
        compute: impl FnOnce() -> Result<PermGroup>,
    ) -> Result<PermGroup> {
        self.memo(
            caps,
            key,
            Memo::Group,
            |m| match m {
                Memo::Group(r) => Some(r),
                _ => None,
            },
            compute,
        )
    }

    pub(crate) fn memo_groups(
        &self,
        caps: &Caps,
        key: &'static str,
        compute: impl FnOnce() -> Result<Arc<Vec<PermGroup>>>,
    ) -> Result<Arc<Vec<PermGroup>>> {
        self.memo(
            caps,
            key,
            Memo::Groups,
            |m| match m {
                Memo::Groups(r) => Some(r),
                _ => None,
            },
            compute,
        )
    }

    pub(crate) fn memo_subs(
        &self,
        caps: &Caps,
        key: &'static str,
        compute: impl FnOnce() -> Result<Arc<Vec<Sub>>>,
    ) -> Result<Arc<Vec<Sub>>> {
        self.memo(
            caps,
            key,
            Memo::Subs,
            |m| match m {
                Memo::Subs(r) => Some(r),
                _ => None,
            },
            compute,
        )
    }

    pub(crate) fn memo_flag(
        &self,
        caps: &Caps,
        key: &'static str,
        compute: impl FnOnce() -> Result<bool>,
    ) -> Result<bool> {
        self.memo(
            caps,
            key,
            Memo::Flag,
            |m| match m {
                Memo::Flag(r) => Some(r),
                _ => None,
            },
            compute,
        )
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.order == other.order
            && self.generators.iter().all(|g| other.has(g))
    }
}

impl Eq for PermGroup {}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(order {}, degree {}, <", self.order, self.degree)?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">)")
    }
}

/// Convenience wrapper for [`PermGroup::new`].
pub fn group_from_generators(degree: usize, gens: Vec<Permutation>) -> Result<PermGroup> {
    PermGroup::new(degree, gens)
}

/// Smallest normal subgroup of `g` containing `s`.
pub fn normal_closure(g: &PermGroup, s: &[Permutation]) -> Result<PermGroup> {
    for x in s {
        if !g.contains(x)? {
            return Err(GroupError::NotInGroup(x.to_string()));
        }
    }
    let mut h = PermGroup::trivial(g.degree());
    let mut queue: Vec<Permutation> = Vec::new();
    for x in s {
        if !h.has(x) {
            h = h.with_generator(x)?;
            queue.push(x.clone());
        }
    }
    while let Some(x) = queue.pop() {
        for a in g.generators() {
            let c = x.conjugate(a);
            if !h.has(&c) {
                h = h.with_generator(&c)?;
                queue.push(c);
            }
        }
    }
    Ok(h)
}

pub fn is_normal(g: &PermGroup, h: &PermGroup) -> Result<bool> {
    if !h.is_subgroup_of(g) {
        return Err(GroupError::NotSubgroup);
    }
    Ok(h
        .generators()
        .iter()
        .all(|x| g.generators().iter().all(|a| h.has(&x.conjugate(a)))))
}

pub fn derived_subgroup(g: &PermGroup) -> PermGroup {
    let gens = g.generators();
    let mut comms = Vec::new();
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            comms.push(gens[i].commutator(&gens[j]));
        }
    }
    normal_closure(g, &comms).expect("commutators lie in the group")
}

/// `[A, B]`: the normal closure in `<A, B>` of the generator commutators.
pub fn commutator(g: &PermGroup, a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    if !a.is_subgroup_of(g) || !b.is_subgroup_of(g) {
        return Err(GroupError::NotSubgroup);
    }
    let ab = a.join(b)?;
    let mut comms = Vec::new();
    for x in a.generators() {
        for y in b.generators() {
            comms.push(x.commutator(y));
        }
    }
    normal_closure(&ab, &comms)
}

/// Elements of `g` commuting with every element of `h`, by element filtering.
pub fn centralizer(g: &PermGroup, h: &PermGroup, caps: &Caps) -> Result<PermGroup> {
    if h.degree() != g.degree() {
        return Err(GroupError::DegreeMismatch { expected: g.degree(), found: h.degree() });
    }
    let t = g.table(caps)?;
    let of: Vec<u32> = h
        .generators()
        .iter()
        .map(|x| t.index_of(x).ok_or(GroupError::NotSubgroup))
        .collect::<Result<_>>()?;
    Ok(t.to_group(&t.centralizer(&t.whole(), &of)))
}

pub fn center(g: &PermGroup, caps: &Caps) -> Result<PermGroup> {
    g.memo_group(caps, "center", || {
        let t = g.table(caps)?;
        Ok(t.to_group(&t.center(&t.whole())))
    })
}

/// `G × H` acting on the disjoint union of the point sets, `G` first.
pub fn direct_product(g: &PermGroup, h: &PermGroup) -> PermGroup {
    let (dg, dh) = (g.degree(), h.degree());
    let degree = dg + dh;
    let mut gens: Vec<Permutation> = g.generators().iter().map(|x| x.embed(degree, 0)).collect();
    gens.extend(h.generators().iter().map(|x| x.embed(degree, dg)));
    PermGroup::new(degree, gens).expect("embedded generators share the degree")
}

/// The two factor embeddings of [`direct_product`] as subgroups of the product.
pub fn direct_factors(g: &PermGroup, h: &PermGroup) -> (PermGroup, PermGroup) {
    let degree = g.degree() + h.degree();
    let left = g.generators().iter().map(|x| x.embed(degree, 0)).collect();
    let right = h.generators().iter().map(|x| x.embed(degree, g.degree())).collect();
    (
        PermGroup::new(degree, left).expect("degree"),
        PermGroup::new(degree, right).expect("degree"),
    )
}
