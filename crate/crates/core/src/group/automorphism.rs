//! Groups of automorphisms of a fixed subgroup, stored as explicit element
//! maps. Sylow and core computations go through the faithful permutation
//! action on the members of the base subgroup.

use std::collections::{BTreeSet, HashSet};

use super::morphism::{compose_maps, identity_map, invert_map, restrict_map, ElementMap};
use super::subgroup::{p_core_in, p_residual_in, sylow_in};
use super::{is_power_of, p_part, FiniteGroup, Subgroup};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismGroup {
    base: Subgroup,
    elements: BTreeSet<ElementMap>,
}

impl AutomorphismGroup {
    pub(crate) fn from_elements_unchecked(base: Subgroup, elements: impl IntoIterator<Item = ElementMap>) -> Self {
        Self {
            base,
            elements: elements.into_iter().collect(),
        }
    }

    pub fn trivial(base: &Subgroup) -> Self {
        Self::from_elements_unchecked(base.clone(), [identity_map(base)])
    }

    /// Closure of `generators` under composition.
    pub fn generated<I>(base: &Subgroup, generators: I) -> Self
    where
        I: IntoIterator<Item = ElementMap>,
    {
        let gens: Vec<ElementMap> = generators.into_iter().collect();
        let id = identity_map(base);
        let mut seen: HashSet<ElementMap> = HashSet::new();
        seen.insert(id.clone());
        let mut list = vec![id];
        let mut i = 0;
        while i < list.len() {
            for g in &gens {
                let y = compose_maps(&list[i], base, g);
                if seen.insert(y.clone()) {
                    list.push(y);
                }
            }
            i += 1;
        }
        Self::from_elements_unchecked(base.clone(), list)
    }

    /// Inner automorphisms `{c_g|_P : g ∈ normalizing}` for elements of
    /// `normalizing` that normalize the base.
    pub fn induced_by(group: &FiniteGroup, base: &Subgroup, normalizing: &Subgroup) -> Self {
        let elements = normalizing
            .members()
            .iter()
            .filter(|&&g| base.members().iter().all(|&x| base.contains(group.conj(x, g))))
            .map(|&g| base.members().iter().map(|&x| group.conj(x, g)).collect());
        Self::from_elements_unchecked(base.clone(), elements)
    }

    /// `Inn(P)`.
    pub fn inner(group: &FiniteGroup, base: &Subgroup) -> Self {
        Self::induced_by(group, base, base)
    }

    pub fn base(&self) -> &Subgroup {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ElementMap> {
        self.elements.iter()
    }

    pub fn contains(&self, map: &[u32]) -> bool {
        self.elements.contains(map)
    }

    pub fn is_subgroup_of(&self, other: &AutomorphismGroup) -> bool {
        self.base == other.base && self.elements.is_subset(&other.elements)
    }

    pub fn identity(&self) -> ElementMap {
        identity_map(&self.base)
    }

    pub fn compose(&self, a: &[u32], b: &[u32]) -> ElementMap {
        compose_maps(a, &self.base, b)
    }

    pub fn invert(&self, a: &[u32]) -> ElementMap {
        invert_map(a, &self.base, &self.base)
    }

    pub fn element_order(&self, a: &[u32]) -> usize {
        let id = self.identity();
        let mut x = a.to_vec();
        let mut k = 1;
        while x != id {
            x = self.compose(&x, a);
            k += 1;
        }
        k
    }

    pub fn intersection(&self, other: &AutomorphismGroup) -> AutomorphismGroup {
        Self::from_elements_unchecked(self.base.clone(), self.elements.intersection(&other.elements).cloned())
    }

    pub fn join(&self, other: &AutomorphismGroup) -> AutomorphismGroup {
        Self::generated(&self.base, self.elements.iter().chain(other.elements.iter()).cloned())
    }

    /// The set of products `ab` with `a ∈ self`, `b ∈ other`.
    pub fn product_set(&self, other: &AutomorphismGroup) -> BTreeSet<ElementMap> {
        let mut out = BTreeSet::new();
        for a in &self.elements {
            for b in &other.elements {
                out.insert(self.compose(a, b));
            }
        }
        out
    }

    pub fn elements(&self) -> &BTreeSet<ElementMap> {
        &self.elements
    }

    /// Elements mapping `sub` onto itself.
    pub fn stabilizer(&self, sub: &Subgroup) -> AutomorphismGroup {
        let positions: Vec<usize> = sub
            .members()
            .iter()
            .map(|&x| self.base.position(x).expect("stabilized subgroup inside the base"))
            .collect();
        Self::from_elements_unchecked(
            self.base.clone(),
            self.elements
                .iter()
                .filter(|a| positions.iter().all(|&i| sub.contains(a[i])))
                .cloned(),
        )
    }

    /// Restrictions to `sub` of the elements stabilizing it.
    pub fn restrict_to(&self, sub: &Subgroup) -> AutomorphismGroup {
        let stab = self.stabilizer(sub);
        Self::from_elements_unchecked(
            sub.clone(),
            stab.elements.iter().map(|a| restrict_map(a, &self.base, sub)),
        )
    }

    pub fn is_p_group(&self, p: u32) -> bool {
        is_power_of(self.order(), p)
    }

    /// `self` is a Sylow `p`-subgroup of `ambient`.
    pub fn is_sylow_of(&self, ambient: &AutomorphismGroup, p: u32) -> bool {
        self.is_subgroup_of(ambient) && self.is_p_group(p) && self.order() == p_part(ambient.order(), p)
    }

    /// `O^p`: generated by the elements of order prime to `p`.
    pub fn p_residual(&self, p: u32) -> AutomorphismGroup {
        let gens: Vec<ElementMap> = self
            .elements
            .iter()
            .filter(|a| !self.element_order(a).is_multiple_of(p as usize))
            .cloned()
            .collect();
        Self::generated(&self.base, gens)
    }

    /// `O_p`, the largest normal `p`-subgroup.
    pub fn p_core(&self, p: u32) -> AutomorphismGroup {
        let (group, lookup) = self.as_permutation_group();
        let core = p_core_in(&group, &Subgroup::whole(&group), p);
        self.subset_from_indices(&lookup, core.members())
    }

    /// The canonically first Sylow `p`-subgroup.
    pub fn sylow(&self, p: u32) -> AutomorphismGroup {
        let (group, lookup) = self.as_permutation_group();
        let sylow = sylow_in(&group, &Subgroup::whole(&group), p);
        self.subset_from_indices(&lookup, sylow.members())
    }

    /// `O^p` through the permutation action, kept as an independent route
    /// for [`Self::p_residual`].
    pub fn p_residual_via_action(&self, p: u32) -> AutomorphismGroup {
        let (group, lookup) = self.as_permutation_group();
        let res = p_residual_in(&group, &Subgroup::whole(&group), p);
        self.subset_from_indices(&lookup, res.members())
    }

    /// Elements as permutations of the positions of the base members.
    fn as_permutation_group(&self) -> (FiniteGroup, Vec<ElementMap>) {
        let gens: Vec<Vec<u32>> = self.elements.iter().map(|a| self.position_perm(a)).collect();
        let group = FiniteGroup::from_permutations(self.base.order(), &gens, usize::MAX)
            .expect("automorphisms act as permutations");
        let lookup = (0..group.order() as u32)
            .map(|i| {
                let perm = group.permutation(i).expect("permutation group");
                perm.iter().map(|&pos| self.base.members()[pos as usize]).collect()
            })
            .collect();
        (group, lookup)
    }

    fn position_perm(&self, a: &[u32]) -> Vec<u32> {
        a.iter()
            .map(|&y| self.base.position(y).expect("automorphism of the base") as u32)
            .collect()
    }

    fn subset_from_indices(&self, lookup: &[ElementMap], indices: &[u32]) -> AutomorphismGroup {
        Self::from_elements_unchecked(self.base.clone(), indices.iter().map(|&i| lookup[i as usize].clone()))
    }

    /// Checks closure under composition and that each element is a bijective
    /// homomorphism of the base.
    pub fn validate(&self, group: &FiniteGroup) -> Result<()> {
        if !self.contains(&self.identity()) {
            return Err(Error::Domain("automorphism group lacks the identity".into()));
        }
        for a in &self.elements {
            let m = super::Morphism::new(group, self.base.clone(), self.base.clone(), a.clone())?;
            if m.image() != self.base {
                return Err(Error::Domain("element is not surjective".into()));
            }
            for b in &self.elements {
                if !self.contains(&self.compose(a, b)) {
                    return Err(Error::Domain("not closed under composition".into()));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::perm::parse_cycles;
    use crate::group::{generate_subgroup, FiniteGroup};

    fn s4() -> FiniteGroup {
        FiniteGroup::from_permutations(
            4,
            &[parse_cycles("(1 2 3 4)", 4).unwrap(), parse_cycles("(1 2)", 4).unwrap()],
            100,
        )
        .unwrap()
    }

    fn el(g: &FiniteGroup, s: &str) -> u32 {
        g.index_of_permutation(&parse_cycles(s, 4).unwrap()).unwrap()
    }

    #[test]
    fn automizer_of_klein_four_in_s4() {
        let g = s4();
        let v4 = generate_subgroup(&g, &[el(&g, "(1 2)(3 4)"), el(&g, "(1 3)(2 4)")]);
        let aut = AutomorphismGroup::induced_by(&g, &v4, &Subgroup::whole(&g));
        assert_eq!(aut.order(), 6);
        aut.validate(&g).unwrap();
        assert_eq!(aut.p_residual(2).order(), 3);
        assert_eq!(aut.p_residual(2), aut.p_residual_via_action(2));
        assert_eq!(aut.p_core(2).order(), 1);
        assert_eq!(aut.sylow(2).order(), 2);
        assert!(aut.sylow(2).is_sylow_of(&aut, 2));
        assert_eq!(AutomorphismGroup::inner(&g, &v4).order(), 1);
    }

    #[test]
    fn stabilizer_and_restriction() {
        let g = s4();
        let d8 = generate_subgroup(&g, &[el(&g, "(1 2 3 4)"), el(&g, "(1 3)")]);
        let aut = AutomorphismGroup::inner(&g, &d8);
        assert_eq!(aut.order(), 4);
        let c4 = generate_subgroup(&g, &[el(&g, "(1 2 3 4)")]);
        assert_eq!(aut.stabilizer(&c4).order(), 4);
        let t = generate_subgroup(&g, &[el(&g, "(1 3)")]);
        assert_eq!(aut.stabilizer(&t).order(), 2);
        assert_eq!(aut.restrict_to(&t).order(), 1);
    }

    #[test]
    fn generated_closure_and_product_set() {
        let g = s4();
        let v4 = generate_subgroup(&g, &[el(&g, "(1 2)(3 4)"), el(&g, "(1 3)(2 4)")]);
        let three = AutomorphismGroup::induced_by(&g, &v4, &generate_subgroup(&g, &[el(&g, "(1 2 3)")]));
        let two = AutomorphismGroup::induced_by(&g, &v4, &generate_subgroup(&g, &[el(&g, "(1 2)")]));
        assert_eq!(three.join(&two).order(), 6);
        assert_eq!(three.product_set(&two).len(), 6);
        assert_eq!(three.intersection(&two).order(), 1);
    }
}
