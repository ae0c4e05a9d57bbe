//! Deterministic Schreier–Sims.

use crate::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    // transversal[p] maps the base point to p
    transversal: Vec<Option<Permutation>>,
    inverse: Vec<Option<Permutation>>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Self {
        Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
            inverse: vec![None; degree],
        }
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.transversal.len();
        self.transversal.iter_mut().for_each(|t| *t = None);
        self.inverse.iter_mut().for_each(|t| *t = None);
        self.orbit.clear();
        let id = Permutation::identity(degree);
        self.transversal[self.base] = Some(id.clone());
        self.inverse[self.base] = Some(id);
        self.orbit.push(self.base);
        let mut head = 0;
        while head < self.orbit.len() {
            let p = self.orbit[head];
            head += 1;
            for s in &self.gens {
                let q = s.image(p);
                if self.transversal[q].is_none() {
                    let t = self.transversal[p].as_ref().unwrap().compose(s);
                    self.inverse[q] = Some(t.inverse());
                    self.transversal[q] = Some(t);
                    self.orbit.push(q);
                }
            }
        }
    }
}

/// Base and strong generating set with explicit transversals.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize) -> Self {
        StabChain { degree, levels: Vec::new() }
    }

    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Self {
        let mut chain = StabChain::new(degree);
        for g in gens {
            chain.add_generator(g);
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// 0-based base points.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    /// Strips `g` through the levels starting at `from`. Returns the residue and
    /// the index of the level where stripping stopped (`levels.len()` if it passed all).
    fn sift(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let p = h.image(level.base);
            match &level.inverse[p] {
                Some(inv) => h = h.compose(inv),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g, 0).0.is_identity()
    }

    /// Adds a generator; returns false if it was already a member.
    pub fn add_generator(&mut self, g: &Permutation) -> bool {
        let (h, j) = self.sift(g, 0);
        if h.is_identity() {
            return false;
        }
        self.insert(0, j, h);
        true
    }

    fn insert(&mut self, from: usize, to: usize, h: Permutation) {
        if to == self.levels.len() {
            let base = h.first_moved().expect("nontrivial residue");
            self.levels.push(Level::new(self.degree, base));
        }
        for k in from..=to {
            self.levels[k].gens.push(h.clone());
        }
        for k in (from..=to).rev() {
            self.complete_level(k);
        }
    }

    fn complete_level(&mut self, k: usize) {
        self.levels[k].rebuild_orbit();
        let mut idx = 0;
        loop {
            let level = &self.levels[k];
            if idx >= level.orbit.len() {
                break;
            }
            let p = level.orbit[idx];
            idx += 1;
            let ngens = level.gens.len();
            for s in 0..ngens {
                let level = &self.levels[k];
                let gen = &level.gens[s];
                let q = gen.image(p);
                let sg = level.transversal[p]
                    .as_ref()
                    .unwrap()
                    .compose(gen)
                    .compose(level.inverse[q].as_ref().unwrap());
                let (h, j) = self.sift(&sg, k + 1);
                if !h.is_identity() {
                    self.insert(k + 1, j, h);
                }
            }
        }
    }

    /// Every element, each exactly once, as products of transversal elements.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        // g = t_{k-1} * ... * t_0
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for g in &out {
                for &p in &level.orbit {
                    next.push(g.compose(level.transversal[p].as_ref().unwrap()));
                }
            }
            out = next;
        }
        out
    }

    /// The strong generators of the top level.
    pub fn strong_generators(&self) -> &[Permutation] {
        self.levels.first().map(|l| l.gens.as_slice()).unwrap_or(&[])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    // exhaustive closure oracle
    fn closure(n: usize, gens: &[Permutation]) -> HashSet<Permutation> {
        let mut set: HashSet<Permutation> = HashSet::new();
        let mut queue = vec![Permutation::identity(n)];
        set.insert(Permutation::identity(n));
        while let Some(x) = queue.pop() {
            for g in gens {
                let y = x.compose(g);
                if set.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        set
    }

    #[test]
    fn orders_match_closure() {
        let cases = vec![
            (3, vec![p(3, "(1 2)"), p(3, "(1 2 3)")]),
            (5, vec![p(5, "(1 2 3)"), p(5, "(3 4 5)")]),
            (6, vec![p(6, "(1 2 3 4 5 6)"), p(6, "(1 2)")]),
            (8, vec![p(8, "(1 2 3 4)(5 6 7 8)"), p(8, "(1 5 3 7)(2 8 4 6)")]),
            (7, vec![p(7, "(1 2 3 4 5 6 7)"), p(7, "(2 3 5)(4 7 6)")]),
        ];
        for (n, gens) in cases {
            let chain = StabChain::from_generators(n, &gens);
            let oracle = closure(n, &gens);
            assert_eq!(chain.order(), oracle.len() as u128);
            let elems: HashSet<_> = chain.elements().into_iter().collect();
            assert_eq!(elems, oracle);
            for g in &oracle {
                assert!(chain.contains(g));
            }
        }
    }

    #[test]
    fn membership_rejects_outsiders() {
        let chain = StabChain::from_generators(5, &[p(5, "(1 2 3)"), p(5, "(3 4 5)")]);
        assert!(chain.contains(&p(5, "(1 2)(3 4)")));
        assert!(!chain.contains(&p(5, "(1 2)")));
    }

    #[test]
    fn base_points_are_first_moved() {
        let chain = StabChain::from_generators(6, &[p(6, "(3 4 5)"), p(6, "(4 5 6)")]);
        assert_eq!(chain.base()[0], 2);
        assert_eq!(chain.order(), 12);
    }
}
