//! Subgroups as sorted member sets, and the local subgroup calculus:
//! generation, normalizers, centralizers, Sylow subgroups, `O^p` and `O_p`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use super::{is_power_of, p_part, FiniteGroup};
use crate::error::{Error, Result};

/// A subgroup of some [`FiniteGroup`], stored as its sorted element indices.
///
/// Subgroups are ordered canonically by `(order, member list)`.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: Vec<u32>,
    bits: FixedBitSet,
}

impl Subgroup {
    /// Wraps an element set already known to be a subgroup.
    pub(crate) fn from_sorted(group_order: usize, members: Vec<u32>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        let mut bits = FixedBitSet::with_capacity(group_order);
        for &m in &members {
            bits.insert(m as usize);
        }
        Self { members, bits }
    }

    /// Validates that `members` is closed under products and inverses.
    pub fn new(group: &FiniteGroup, members: impl IntoIterator<Item = u32>) -> Result<Self> {
        let set: BTreeSet<u32> = members.into_iter().collect();
        if set.iter().any(|&x| x as usize >= group.order()) {
            return Err(Error::Domain("element index out of range".into()));
        }
        let sub = Self::from_sorted(group.order(), set.into_iter().collect());
        if !sub.contains(0) {
            return Err(Error::Domain("subset does not contain the identity".into()));
        }
        for &a in &sub.members {
            if !sub.contains(group.inv(a)) {
                return Err(Error::Domain("subset not closed under inverses".into()));
            }
            for &b in &sub.members {
                if !sub.contains(group.mul(a, b)) {
                    return Err(Error::Domain("subset not closed under products".into()));
                }
            }
        }
        debug_assert_eq!(group.order() % sub.order(), 0);
        Ok(sub)
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        Self::from_sorted(group.order(), vec![0])
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Self::from_sorted(group.order(), group.elements().collect())
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// Order of the parent group.
    pub(crate) fn group_order(&self) -> usize {
        self.bits.len()
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        self.bits.contains(x as usize)
    }

    /// Position of `x` in the member list.
    #[inline]
    pub fn position(&self, x: u32) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.members.iter().all(|&x| other.contains(x))
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let members = self.members.iter().copied().filter(|&x| other.contains(x)).collect();
        Self::from_sorted(self.group_order(), members)
    }

    /// `P^g`.
    pub fn conjugate(&self, group: &FiniteGroup, g: u32) -> Subgroup {
        let mut members: Vec<u32> = self.members.iter().map(|&x| group.conj(x, g)).collect();
        members.sort_unstable();
        Self::from_sorted(group.order(), members)
    }

    /// Greedy generating set: scan members in order and keep each one not
    /// already generated by the previous picks.
    pub fn canonical_generators(&self, group: &FiniteGroup) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut current = Subgroup::trivial(group);
        for &x in &self.members {
            if !current.contains(x) {
                gens.push(x);
                current = generate_subgroup(group, &gens);
            }
        }
        gens
    }

    pub fn is_normal_in(&self, group: &FiniteGroup, ambient: &Subgroup) -> bool {
        ambient
            .members
            .iter()
            .all(|&g| self.members.iter().all(|&x| self.contains(group.conj(x, g))))
    }

    /// Elements of `self` (an ambient subgroup) normalizing `p`.
    pub fn normalizer_of(&self, group: &FiniteGroup, p: &Subgroup) -> Subgroup {
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&g| p.members.iter().all(|&x| p.contains(group.conj(x, g))))
            .collect();
        Self::from_sorted(group.order(), members)
    }

    /// Elements of `self` centralizing every element of `p`.
    pub fn centralizer_of(&self, group: &FiniteGroup, p: &Subgroup) -> Subgroup {
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&g| p.members.iter().all(|&x| group.mul(x, g) == group.mul(g, x)))
            .collect();
        Self::from_sorted(group.order(), members)
    }

    pub fn center(&self, group: &FiniteGroup) -> Subgroup {
        self.centralizer_of(group, self)
    }

    pub fn join(&self, group: &FiniteGroup, other: &Subgroup) -> Subgroup {
        let mut seed = self.canonical_generators(group);
        seed.extend(other.canonical_generators(group));
        generate_subgroup(group, &seed)
    }

    pub fn is_p_group(&self, p: u32) -> bool {
        is_power_of(self.order(), p)
    }

    pub fn label(&self, group: &FiniteGroup) -> String {
        let gens: Vec<&str> = self
            .canonical_generators(group)
            .into_iter()
            .map(|g| group.label(g))
            .collect();
        format!("<{}>", gens.join(", "))
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members
            .len()
            .cmp(&other.members.len())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Smallest subgroup containing `seed`.
pub fn generate_subgroup(group: &FiniteGroup, seed: &[u32]) -> Subgroup {
    let mut bits = FixedBitSet::with_capacity(group.order());
    bits.insert(0);
    let mut list = vec![0u32];
    let gens: Vec<u32> = seed.iter().copied().filter(|&g| g != 0).collect();
    let mut i = 0;
    while i < list.len() {
        let x = list[i];
        for &g in &gens {
            let y = group.mul(x, g);
            if !bits.contains(y as usize) {
                bits.insert(y as usize);
                list.push(y);
            }
        }
        i += 1;
    }
    list.sort_unstable();
    Subgroup { members: list, bits }
}

/// Normalizer, centralizer and center of a subgroup in the whole group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalData {
    pub normalizer: Subgroup,
    pub centralizer: Subgroup,
    pub center: Subgroup,
}

pub fn local_subgroup_data(group: &FiniteGroup, p: &Subgroup) -> LocalData {
    let whole = Subgroup::whole(group);
    LocalData {
        normalizer: whole.normalizer_of(group, p),
        centralizer: whole.centralizer_of(group, p),
        center: p.center(group),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylowData {
    pub sylow: Subgroup,
    /// `O^p`: generated by the elements of order prime to `p`.
    pub p_residual: Subgroup,
    /// `O_p`: the intersection of all Sylow `p`-subgroups.
    pub p_core: Subgroup,
}

pub fn sylow_and_cores(group: &FiniteGroup, p: u32) -> SylowData {
    let whole = Subgroup::whole(group);
    SylowData {
        sylow: sylow_in(group, &whole, p),
        p_residual: p_residual_in(group, &whole, p),
        p_core: p_core_in(group, &whole, p),
    }
}

/// The canonically first Sylow `p`-subgroup of `ambient`.
///
/// One Sylow subgroup is grown by adjoining `p`-elements of its normalizer;
/// all Sylow subgroups are conjugate, so the canonical minimum is taken over
/// the conjugates of that one.
pub fn sylow_in(group: &FiniteGroup, ambient: &Subgroup, p: u32) -> Subgroup {
    let target = p_part(ambient.order(), p);
    let mut current = Subgroup::trivial(group);
    while current.order() < target {
        let norm = ambient.normalizer_of(group, &current);
        let next = norm
            .members()
            .iter()
            .copied()
            .find(|&g| !current.contains(g) && is_power_of(group.element_order(g), p))
            .expect("a proper p-subgroup is properly contained in its normalizer's p-part");
        let mut seed = current.members().to_vec();
        seed.push(next);
        current = generate_subgroup(group, &seed);
    }
    ambient
        .members()
        .iter()
        .map(|&g| current.conjugate(group, g))
        .min()
        .unwrap_or(current)
}

pub fn p_residual_in(group: &FiniteGroup, ambient: &Subgroup, p: u32) -> Subgroup {
    let seed: Vec<u32> = ambient
        .members()
        .iter()
        .copied()
        .filter(|&g| !group.element_order(g).is_multiple_of(p as usize))
        .collect();
    generate_subgroup(group, &seed)
}

pub fn p_core_in(group: &FiniteGroup, ambient: &Subgroup, p: u32) -> Subgroup {
    let sylow = sylow_in(group, ambient, p);
    let mut core = sylow.clone();
    for &g in ambient.members() {
        if core.is_trivial() {
            break;
        }
        core = core.intersection(&sylow.conjugate(group, g));
    }
    core
}

/// Every subgroup `M` with `bottom ≤ M ≤ top`, in canonical order.
pub fn overgroups_between(group: &FiniteGroup, bottom: &Subgroup, top: &Subgroup) -> Vec<Subgroup> {
    let mut found: BTreeSet<Subgroup> = BTreeSet::new();
    let mut queue = vec![bottom.clone()];
    found.insert(bottom.clone());
    while let Some(h) = queue.pop() {
        for &x in top.members() {
            if h.contains(x) {
                continue;
            }
            let mut seed = h.canonical_generators(group);
            seed.push(x);
            let k = generate_subgroup(group, &seed);
            if found.insert(k.clone()) {
                queue.push(k);
            }
        }
    }
    found.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::perm::parse_cycles;

    fn s4() -> FiniteGroup {
        FiniteGroup::from_permutations(
            4,
            &[parse_cycles("(1 2 3 4)", 4).unwrap(), parse_cycles("(1 2)", 4).unwrap()],
            100,
        )
        .unwrap()
    }

    fn el(g: &FiniteGroup, s: &str) -> u32 {
        g.index_of_permutation(&parse_cycles(s, g.degree()).unwrap()).unwrap()
    }

    fn sub(g: &FiniteGroup, gens: &[&str]) -> Subgroup {
        let seed: Vec<u32> = gens.iter().map(|s| el(g, s)).collect();
        generate_subgroup(g, &seed)
    }

    #[test]
    fn klein_four_from_two_involutions() {
        let g = s4();
        let v4 = sub(&g, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert_eq!(v4.order(), 4);
        assert!(generate_subgroup(&g, &[]).is_trivial());
        assert_eq!(sub(&g, &["(1 2 3 4)", "(1 2)"]), Subgroup::whole(&g));
    }

    #[test]
    fn local_data_in_s4() {
        let g = s4();
        let v4 = sub(&g, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let data = local_subgroup_data(&g, &v4);
        assert_eq!(data.normalizer.order(), 24);
        assert_eq!(data.centralizer, v4);
        let t = sub(&g, &["(1 3)"]);
        let data = local_subgroup_data(&g, &t);
        assert_eq!(data.centralizer, sub(&g, &["(1 3)", "(2 4)"]));
        let whole = Subgroup::whole(&g);
        let data = local_subgroup_data(&g, &whole);
        assert_eq!(data.normalizer, whole);
        assert!(data.centralizer.is_trivial());
    }

    #[test]
    fn sylow_and_cores_of_s4() {
        let g = s4();
        let d = sylow_and_cores(&g, 2);
        assert_eq!(d.sylow.order(), 8);
        assert_eq!(d.p_residual, sub(&g, &["(1 2 3)", "(1 2)(3 4)"]));
        assert_eq!(d.p_core, sub(&g, &["(1 2)(3 4)", "(1 3)(2 4)"]));
        let d3 = sylow_and_cores(&g, 3);
        assert_eq!(d3.sylow.order(), 3);
        assert_eq!(d3.p_residual.order(), 24);
        assert!(d3.p_core.is_trivial());
    }

    #[test]
    fn sylow_and_cores_of_a4() {
        let g = FiniteGroup::from_permutations(
            4,
            &[
                parse_cycles("(1 2 3)", 4).unwrap(),
                parse_cycles("(1 2)(3 4)", 4).unwrap(),
            ],
            100,
        )
        .unwrap();
        let d = sylow_and_cores(&g, 2);
        assert_eq!(d.sylow.order(), 4);
        assert_eq!(d.sylow, d.p_core);
        assert_eq!(d.p_residual.order(), 12);
    }

    #[test]
    fn p_group_cores() {
        let g = FiniteGroup::from_permutations(
            4,
            &[parse_cycles("(1 2 3 4)", 4).unwrap(), parse_cycles("(1 3)", 4).unwrap()],
            100,
        )
        .unwrap();
        let d = sylow_and_cores(&g, 2);
        assert!(d.p_residual.is_trivial());
        assert_eq!(d.p_core.order(), 8);
        assert_eq!(d.sylow.order(), 8);
        // p not dividing the order.
        let d5 = sylow_and_cores(&g, 5);
        assert!(d5.sylow.is_trivial());
    }

    #[test]
    fn sylow_choice_is_canonical_minimum() {
        let g = s4();
        let s = sylow_and_cores(&g, 2).sylow;
        let whole = Subgroup::whole(&g);
        for x in g.elements() {
            assert!(s <= s.conjugate(&g, x));
        }
        assert!(s.is_subgroup_of(&whole));
    }

    #[test]
    fn validated_construction() {
        let g = s4();
        assert!(Subgroup::new(&g, [0, el(&g, "(1 2)")]).is_ok());
        assert!(Subgroup::new(&g, [el(&g, "(1 2)")]).is_err());
        assert!(Subgroup::new(&g, [0, el(&g, "(1 2 3)")]).is_err());
    }

    #[test]
    fn overgroups_of_a4_in_s4() {
        let g = s4();
        let a4 = sub(&g, &["(1 2 3)", "(1 2)(3 4)"]);
        let over = overgroups_between(&g, &a4, &Subgroup::whole(&g));
        assert_eq!(over.len(), 2);
    }
}
