//! Quotients `G/N` realised as permutation actions.

use std::sync::Arc;

use crate::error::{CapKind, GroupError, Result};
use crate::group::{Caps, PermGroup};
use crate::perm::Permutation;
use crate::table::{ElementTable, Sub};

/// The natural epimorphism `G → G/N`.
///
/// The target is the action of `G` on the orbits of `N` when that action has
/// kernel exactly `N`, and the action on right cosets of `N` otherwise. A
/// trivial kernel gives the source group itself.
#[derive(Clone)]
pub struct QuotientMap {
    source: PermGroup,
    kernel: PermGroup,
    target: PermGroup,
    src: Arc<ElementTable>,
    tgt: Arc<ElementTable>,
    // source element index -> target element index
    image_idx: Vec<u32>,
    // target element index -> some source preimage
    lift_idx: Vec<u32>,
}

impl std::fmt::Debug for QuotientMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("QuotientMap")
            .field("source_order", &self.source.order())
            .field("kernel_order", &self.kernel.order())
            .field("target", &self.target)
            .finish()
    }
}

pub fn quotient(g: &PermGroup, n: &PermGroup, caps: &Caps) -> Result<QuotientMap> {
    if !n.is_subgroup_of(g) {
        return Err(GroupError::NotSubgroup);
    }
    let index = g.order() / n.order();
    caps.check(CapKind::Index, index)?;
    let src = g.table(caps)?;
    let whole = src.whole();
    let nsub = src.sub_of_group(n)?;
    if !src.is_normal_in(&whole, &nsub) {
        return Err(GroupError::NotNormal(n.order()));
    }
    QuotientMap::build(g, n, src, &nsub, caps)
}

impl QuotientMap {
    pub(crate) fn build(
        g: &PermGroup,
        n: &PermGroup,
        src: Arc<ElementTable>,
        nsub: &Sub,
        caps: &Caps,
    ) -> Result<QuotientMap> {
        let index = g.order() / n.order();
        if n.is_trivial() {
            let ident: Vec<u32> = (0..src.len() as u32).collect();
            return Ok(QuotientMap {
                source: g.clone(),
                kernel: n.clone(),
                target: g.clone(),
                tgt: src.clone(),
                src,
                image_idx: ident.clone(),
                lift_idx: ident,
            });
        }

        let degree = g.degree();
        // orbits of the kernel form a block system for G
        let mut orbit_of = vec![u32::MAX; degree];
        let mut orbit_reps: Vec<usize> = Vec::new();
        for start in 0..degree {
            if orbit_of[start] != u32::MAX {
                continue;
            }
            let id = orbit_reps.len() as u32;
            orbit_reps.push(start);
            orbit_of[start] = id;
            let mut stack = vec![start];
            while let Some(p) = stack.pop() {
                for h in n.generators() {
                    let q = h.image(p);
                    if orbit_of[q] == u32::MAX {
                        orbit_of[q] = id;
                        stack.push(q);
                    }
                }
            }
        }
        let block_image = |x: &Permutation| -> Permutation {
            Permutation::from_raw(orbit_reps.iter().map(|&r| orbit_of[x.image(r)]).collect())
        };
        let block_gens: Vec<Permutation> = g.generators().iter().map(&block_image).collect();
        let block_target = PermGroup::new(orbit_reps.len(), block_gens)?;

        let (target, images): (PermGroup, Vec<Permutation>) = if block_target.order() == index {
            let imgs = src.elements().iter().map(&block_image).collect();
            (block_target, imgs)
        } else {
            let mut coset_of = vec![u32::MAX; src.len()];
            let mut reps: Vec<u32> = Vec::new();
            for x in 0..src.len() as u32 {
                if coset_of[x as usize] != u32::MAX {
                    continue;
                }
                let id = reps.len() as u32;
                reps.push(x);
                for e in nsub.members() {
                    coset_of[src.mul(e, x) as usize] = id;
                }
            }
            let coset_image = |x: u32| -> Permutation {
                Permutation::from_raw(reps.iter().map(|&r| coset_of[src.mul(r, x) as usize]).collect())
            };
            let gens = src.generators().iter().map(|&x| coset_image(x)).collect();
            let target = PermGroup::new(reps.len(), gens)?;
            let imgs = (0..src.len() as u32).map(coset_image).collect();
            (target, imgs)
        };
        if target.order() != index {
            return Err(GroupError::Internal(format!(
                "quotient of order {} by {} has target order {}",
                g.order(),
                n.order(),
                target.order()
            )));
        }
        let tgt = target.table(caps)?;
        let image_idx: Vec<u32> = images
            .iter()
            .map(|p| tgt.index_of(p).expect("image lies in the target"))
            .collect();
        let mut lift_idx = vec![u32::MAX; tgt.len()];
        for (x, &t) in image_idx.iter().enumerate() {
            if lift_idx[t as usize] == u32::MAX {
                lift_idx[t as usize] = x as u32;
            }
        }
        Ok(QuotientMap {
            source: g.clone(),
            kernel: n.clone(),
            target,
            src,
            tgt,
            image_idx,
            lift_idx,
        })
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn kernel(&self) -> &PermGroup {
        &self.kernel
    }

    pub fn target(&self) -> &PermGroup {
        &self.target
    }

    pub fn image(&self, x: &Permutation) -> Result<Permutation> {
        let i = self
            .src
            .index_of(x)
            .ok_or_else(|| GroupError::NotInGroup(x.to_string()))?;
        Ok(self.tgt.perm(self.image_idx[i as usize]).clone())
    }

    /// Some preimage of a target element.
    pub fn lift(&self, t: &Permutation) -> Result<Permutation> {
        let i = self
            .tgt
            .index_of(t)
            .ok_or_else(|| GroupError::NotInGroup(t.to_string()))?;
        Ok(self.src.perm(self.lift_idx[i as usize]).clone())
    }

    pub fn image_group(&self, h: &PermGroup) -> Result<PermGroup> {
        let s = self.src.sub_of_group(h)?;
        Ok(self.tgt.to_group(&self.image_sub(&s)))
    }

    /// Full preimage of a subgroup of the target.
    pub fn preimage(&self, h: &PermGroup) -> Result<PermGroup> {
        let s = self.tgt.sub_of_group(h)?;
        Ok(self.src.to_group(&self.preimage_sub(&s)))
    }

    pub(crate) fn image_sub(&self, s: &Sub) -> Sub {
        let gens: Vec<u32> = s.gens.iter().map(|&x| self.image_idx[x as usize]).collect();
        self.tgt.closure(&gens)
    }

    pub(crate) fn preimage_sub(&self, s: &Sub) -> Sub {
        let mut bits = fixedbitset::FixedBitSet::with_capacity(self.src.len());
        for (x, &t) in self.image_idx.iter().enumerate() {
            if s.has(t) {
                bits.insert(x);
            }
        }
        self.src.sub_of_set(bits)
    }

    pub(crate) fn target_table(&self) -> &Arc<ElementTable> {
        &self.tgt
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_mod_a3() {
        let caps = Caps::default();
        let s3 = PermGroup::from_cycles(3, &["(1 2)", "(1 2 3)"]).unwrap();
        let a3 = PermGroup::from_cycles(3, &["(1 2 3)"]).unwrap();
        let q = quotient(&s3, &a3, &caps).unwrap();
        assert_eq!(q.target().order(), 2);
        let back = q.preimage(&PermGroup::trivial(q.target().degree())).unwrap();
        assert_eq!(back, a3);
        assert!(q.image_group(&a3).unwrap().is_trivial());
    }

    #[test]
    fn non_normal_rejected() {
        let caps = Caps::default();
        let s3 = PermGroup::from_cycles(3, &["(1 2)", "(1 2 3)"]).unwrap();
        let c2 = PermGroup::from_cycles(3, &["(1 2)"]).unwrap();
        assert!(matches!(quotient(&s3, &c2, &caps), Err(GroupError::NotNormal(2))));
    }

    #[test]
    fn block_action_used_for_direct_factor() {
        let caps = Caps::default();
        // S3 on {1,2,3} times C2 on {4,5}
        let g = PermGroup::from_cycles(5, &["(1 2)", "(1 2 3)", "(4 5)"]).unwrap();
        let n = PermGroup::from_cycles(5, &["(1 2)", "(1 2 3)"]).unwrap();
        let q = quotient(&g, &n, &caps).unwrap();
        assert_eq!(q.target().order(), 2);
        assert_eq!(q.target().degree(), 3);
        let a3 = PermGroup::from_cycles(5, &["(1 2 3)"]).unwrap();
        let q = quotient(&g, &a3, &caps).unwrap();
        assert_eq!(q.target().order(), 4);
        assert_eq!(q.target().degree(), 4);
    }
}
