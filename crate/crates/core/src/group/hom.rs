use crate::error::{Error, Result};

use super::{FiniteGroup, GroupElement};

/// A homomorphism between enumerated groups, stored as a total element map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    source: u64,
    target: u64,
    map: Vec<u32>,
}

impl Homomorphism {
    /// Extends `gens[k] -> images[k]` multiplicatively. The generators must
    /// generate `src`; the result is checked to be a homomorphism on all pairs.
    pub fn from_images(
        src: &FiniteGroup,
        dst: &FiniteGroup,
        gens: &[usize],
        images: &[usize],
    ) -> Result<Self> {
        assert_eq!(gens.len(), images.len());
        let n = src.order();
        let mut map = vec![u32::MAX; n];
        map[0] = 0;
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for (&g, &h) in gens.iter().zip(images) {
                let y = src.mul(x, g);
                let fy = dst.mul(map[x] as usize, h) as u32;
                if map[y] == u32::MAX {
                    map[y] = fy;
                    frontier.push(y);
                } else if map[y] != fy {
                    return Err(Error::NotAHomomorphism(format!(
                        "generator images force two values at {}",
                        src.display(y)
                    )));
                }
            }
        }
        if map.iter().any(|&m| m == u32::MAX) {
            return Err(Error::NotAHomomorphism(
                "the listed generators do not generate the source group".into(),
            ));
        }
        let hom = Self {
            source: src.id(),
            target: dst.id(),
            map,
        };
        for a in 0..n {
            for b in 0..n {
                if hom.apply_idx(src.mul(a, b)) != dst.mul(hom.apply_idx(a), hom.apply_idx(b)) {
                    return Err(Error::NotAHomomorphism(format!(
                        "not multiplicative on ({}, {})",
                        src.display(a),
                        src.display(b)
                    )));
                }
            }
        }
        Ok(hom)
    }

    pub(crate) fn from_map(source: u64, target: u64, map: Vec<u32>) -> Self {
        Self { source, target, map }
    }

    pub fn source(&self) -> u64 {
        self.source
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    #[inline]
    pub fn apply_idx(&self, a: usize) -> usize {
        self.map[a] as usize
    }

    pub fn map(&self) -> &[u32] {
        &self.map
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.map.len()];
        self.map.iter().all(|&m| {
            let slot = &mut seen[m as usize];
            !std::mem::replace(slot, true)
        })
    }
}

/// An automorphism of a finite group, stored as its total element map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    hom: Homomorphism,
}

impl Automorphism {
    pub fn from_images(group: &FiniteGroup, gens: &[usize], images: &[usize]) -> Result<Self> {
        let hom = Homomorphism::from_images(group, group, gens, images)?;
        if !hom.is_bijective() {
            return Err(Error::NotAHomomorphism("the induced map is not bijective".into()));
        }
        Ok(Self { hom })
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        let map = (0..group.order() as u32).collect();
        Self {
            hom: Homomorphism::from_map(group.id(), group.id(), map),
        }
    }

    /// Conjugation `x -> g^{-1} x g`.
    pub fn inner(group: &FiniteGroup, g: usize) -> Self {
        let map = (0..group.order()).map(|x| group.conj(x, g) as u32).collect();
        Self {
            hom: Homomorphism::from_map(group.id(), group.id(), map),
        }
    }

    pub(crate) fn from_map_unchecked(group_id: u64, map: Vec<u32>) -> Self {
        Self {
            hom: Homomorphism::from_map(group_id, group_id, map),
        }
    }

    pub fn group_id(&self) -> u64 {
        self.hom.source
    }

    #[inline]
    pub fn apply_idx(&self, a: usize) -> usize {
        self.hom.apply_idx(a)
    }

    pub fn map(&self) -> &[u32] {
        self.hom.map()
    }

    /// `a^φ` for a typed element.
    pub fn apply(&self, group: &FiniteGroup, a: &GroupElement) -> Result<GroupElement> {
        if group.id() != self.group_id() {
            return Err(Error::ForeignElement);
        }
        let i = group.index_of(a)?;
        Ok(group.element(self.apply_idx(i)).clone())
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Automorphism) -> Automorphism {
        let map = self.map().iter().map(|&x| other.map()[x as usize]).collect();
        Self::from_map_unchecked(self.group_id(), map)
    }

    pub fn inverse(&self) -> Automorphism {
        let mut map = vec![0u32; self.map().len()];
        for (i, &x) in self.map().iter().enumerate() {
            map[x as usize] = i as u32;
        }
        Self::from_map_unchecked(self.group_id(), map)
    }

    pub fn is_identity(&self) -> bool {
        self.map().iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Multiplicative order of the automorphism.
    pub fn order(&self) -> u64 {
        let mut t = 1;
        let mut cur = self.clone();
        while !cur.is_identity() {
            cur = cur.then(self);
            t += 1;
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{BuildOptions, PcPresentation};

    fn c9() -> FiniteGroup {
        let mut pc = PcPresentation::new(3, 2).unwrap();
        pc.set_power(1, vec![(2, 1)]).unwrap();
        FiniteGroup::from_pc("C9", &pc, &BuildOptions::default()).unwrap()
    }

    #[test]
    fn inversion_on_c9() {
        let g = c9();
        let x = g.generators()[0];
        let a = Automorphism::from_images(&g, &[x], &[g.inv(x)]).unwrap();
        for y in 0..g.order() {
            assert_eq!(a.apply_idx(y), g.inv(y));
        }
        assert_eq!(a.order(), 2);
        let gen = g.element(x).clone();
        assert_eq!(a.apply(&g, &gen).unwrap(), g.power(&gen, 8).unwrap());
    }

    #[test]
    fn rejects_non_homomorphism() {
        let g = c9();
        let x = g.generators()[0];
        // x -> x^3 is not injective; x -> 1 fine as hom but not bijective
        assert!(Automorphism::from_images(&g, &[x], &[0]).is_err());
        let x3 = g.pow(x, 3);
        assert!(Automorphism::from_images(&g, &[x], &[x3]).is_err());
    }

    #[test]
    fn identity_automorphism() {
        let g = c9();
        let id = Automorphism::identity(&g);
        assert!(id.is_identity());
        assert_eq!(id.order(), 1);
    }
}
