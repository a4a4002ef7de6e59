//! The full subgroup lattice of a finite `p`-group, in canonical order.
//!
//! Fusion systems on the `p`-group (and on any of its subgroups) index their
//! Hom tables by [`SubgroupId`]s into one shared lattice.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use super::{generate_subgroup, FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// Position of a subgroup in the canonical order of its lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubgroupId(pub usize);

impl SubgroupId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for SubgroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}", self.0)
    }
}

#[derive(Debug)]
pub struct SubgroupLattice {
    group: Arc<FiniteGroup>,
    prime: u32,
    carrier: SubgroupId,
    subgroups: Vec<Subgroup>,
    index: HashMap<Vec<u32>, SubgroupId>,
    /// Subgroups of index `p` in each subgroup.
    maximal: Vec<Vec<SubgroupId>>,
}

impl SubgroupLattice {
    /// Enumerates every subgroup of the `p`-group `carrier` breadth first,
    /// adjoining one element at a time, then sorts canonically.
    pub fn new(group: Arc<FiniteGroup>, carrier: &Subgroup, prime: u32) -> Result<Self> {
        if !carrier.is_p_group(prime) {
            return Err(Error::Precondition(format!(
                "lattice carrier of order {} is not a {prime}-group",
                carrier.order()
            )));
        }
        let mut found: BTreeSet<Subgroup> = BTreeSet::new();
        let trivial = Subgroup::trivial(&group);
        found.insert(trivial.clone());
        let mut frontier = vec![(trivial, Vec::<u32>::new())];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for (h, gens) in &frontier {
                for &x in carrier.members() {
                    if h.contains(x) {
                        continue;
                    }
                    let mut seed = gens.clone();
                    seed.push(x);
                    let k = generate_subgroup(&group, &seed);
                    if !found.contains(&k) {
                        found.insert(k.clone());
                        next.push((k, seed));
                    }
                }
            }
            frontier = next;
        }
        let subgroups: Vec<Subgroup> = found.into_iter().collect();
        let index: HashMap<Vec<u32>, SubgroupId> = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members().to_vec(), SubgroupId(i)))
            .collect();
        let p = prime as usize;
        let maximal = subgroups
            .iter()
            .map(|k| {
                subgroups
                    .iter()
                    .enumerate()
                    .filter(|(_, h)| h.order() * p == k.order() && h.is_subgroup_of(k))
                    .map(|(i, _)| SubgroupId(i))
                    .collect()
            })
            .collect();
        let carrier = index[carrier.members()];
        Ok(Self {
            group,
            prime,
            carrier,
            subgroups,
            index,
            maximal,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    /// The `p`-group whose subgroups are enumerated.
    pub fn carrier(&self) -> SubgroupId {
        self.carrier
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = SubgroupId> {
        (0..self.subgroups.len()).map(SubgroupId)
    }

    pub fn get(&self, id: SubgroupId) -> &Subgroup {
        &self.subgroups[id.0]
    }

    pub fn id_of(&self, sub: &Subgroup) -> Option<SubgroupId> {
        self.index.get(sub.members()).copied()
    }

    pub fn id_of_members(&self, members: &[u32]) -> Option<SubgroupId> {
        self.index.get(members).copied()
    }

    /// Id of the subgroup generated by `seed`, if it lies in the carrier.
    pub fn generated(&self, seed: &[u32]) -> Option<SubgroupId> {
        self.id_of(&generate_subgroup(&self.group, seed))
    }

    pub fn trivial(&self) -> SubgroupId {
        SubgroupId(0)
    }

    pub fn order(&self, id: SubgroupId) -> usize {
        self.subgroups[id.0].order()
    }

    /// `a ≤ b`.
    pub fn is_le(&self, a: SubgroupId, b: SubgroupId) -> bool {
        self.get(a).is_subgroup_of(self.get(b))
    }

    /// All subgroups of `id`, in canonical order.
    pub fn subgroups_of(&self, id: SubgroupId) -> Vec<SubgroupId> {
        let top = self.get(id);
        self.ids().filter(|&h| self.get(h).is_subgroup_of(top)).collect()
    }

    pub fn maximal_subgroups(&self, id: SubgroupId) -> &[SubgroupId] {
        &self.maximal[id.0]
    }

    pub fn intersection(&self, a: SubgroupId, b: SubgroupId) -> SubgroupId {
        self.id_of(&self.get(a).intersection(self.get(b)))
            .expect("intersection of lattice members")
    }

    pub fn join(&self, a: SubgroupId, b: SubgroupId) -> SubgroupId {
        self.id_of(&self.get(a).join(&self.group, self.get(b)))
            .expect("join inside the carrier")
    }

    /// `N_within(P)`.
    pub fn normalizer(&self, within: SubgroupId, p: SubgroupId) -> SubgroupId {
        self.id_of(&self.get(within).normalizer_of(&self.group, self.get(p)))
            .expect("normalizer inside the carrier")
    }

    /// `C_within(P)`.
    pub fn centralizer(&self, within: SubgroupId, p: SubgroupId) -> SubgroupId {
        self.id_of(&self.get(within).centralizer_of(&self.group, self.get(p)))
            .expect("centralizer inside the carrier")
    }

    pub fn center(&self, p: SubgroupId) -> SubgroupId {
        self.centralizer(p, p)
    }

    /// `P^g` when it lies in the carrier.
    pub fn conjugate(&self, p: SubgroupId, g: u32) -> Option<SubgroupId> {
        self.id_of(&self.get(p).conjugate(&self.group, g))
    }

    pub fn label(&self, id: SubgroupId) -> String {
        self.get(id).label(&self.group)
    }

    /// Two lattices index the same subgroups of the same group.
    pub fn is_compatible(&self, other: &SubgroupLattice) -> bool {
        std::ptr::eq(self, other)
            || (Arc::ptr_eq(&self.group, &other.group) || *self.group == *other.group)
                && self.prime == other.prime
                && self.subgroups == other.subgroups
    }
}
