//! The smallest fusion system on `T` containing a set of morphisms.
//!
//! The closure maintains the groupoid of isomorphisms as a union-find over
//! subgroups: each class has a representative `r`, a fixed isomorphism
//! `r → x` for every member `x`, and the automorphism group of `r`. An
//! incoming isomorphism either enlarges that automorphism group or merges
//! two classes. Restrictions to maximal subgroups are queued only for
//! isomorphisms that changed the groupoid, since restriction commutes with
//! composition.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::sync::Arc;

use super::{FusionSystem, IsoTable, Provenance};
use crate::error::{Error, Result};
use crate::group::morphism::{compose_maps, invert_map, restrict_map, ElementMap};
use crate::group::{Morphism, Subgroup, SubgroupId, SubgroupLattice};

#[derive(Default)]
struct Closure {
    gens: Vec<ElementMap>,
    list: Vec<ElementMap>,
    set: HashSet<ElementMap>,
}

impl Closure {
    fn identity(base: &Subgroup) -> Self {
        let id = base.members().to_vec();
        Self {
            gens: Vec::new(),
            list: vec![id.clone()],
            set: [id].into_iter().collect(),
        }
    }

    fn add_generators(&mut self, base: &Subgroup, new: Vec<ElementMap>) {
        let old = self.list.len();
        self.gens.extend(new.iter().cloned());
        for i in 0..old {
            for g in &new {
                let y = compose_maps(&self.list[i], base, g);
                if self.set.insert(y.clone()) {
                    self.list.push(y);
                }
            }
        }
        let mut i = old;
        while i < self.list.len() {
            for g in &self.gens {
                let y = compose_maps(&self.list[i], base, g);
                if self.set.insert(y.clone()) {
                    self.list.push(y);
                }
            }
            i += 1;
        }
    }
}

struct Groupoid<'a> {
    lattice: &'a SubgroupLattice,
    rep: Vec<SubgroupId>,
    /// Isomorphism `rep → x`, aligned with the members of the representative.
    to_rep: Vec<ElementMap>,
    /// Isomorphism `x → rep`, aligned with the members of `x`.
    from_rep: Vec<ElementMap>,
    members: BTreeMap<SubgroupId, Vec<SubgroupId>>,
    aut: BTreeMap<SubgroupId, Closure>,
}

impl<'a> Groupoid<'a> {
    fn new(lattice: &'a SubgroupLattice, objects: &[SubgroupId]) -> Self {
        let n = lattice.len();
        let mut g = Self {
            lattice,
            rep: (0..n).map(SubgroupId).collect(),
            to_rep: vec![Vec::new(); n],
            from_rep: vec![Vec::new(); n],
            members: BTreeMap::new(),
            aut: BTreeMap::new(),
        };
        for &o in objects {
            let id = lattice.get(o).members().to_vec();
            g.to_rep[o.0] = id.clone();
            g.from_rep[o.0] = id;
            g.members.insert(o, vec![o]);
            g.aut.insert(o, Closure::identity(lattice.get(o)));
        }
        g
    }

    /// Adds the isomorphism `phi: p → q`; returns whether anything changed.
    fn add(&mut self, p: SubgroupId, q: SubgroupId, phi: &[u32]) -> bool {
        let a = self.rep[p.0];
        let b = self.rep[q.0];
        let (ps, qs) = (self.lattice.get(p), self.lattice.get(q));
        // e: rep_a → p → q → rep_b
        let e = compose_maps(&compose_maps(&self.to_rep[p.0], ps, phi), qs, &self.from_rep[q.0]);
        let a_sub = self.lattice.get(a);
        if a == b {
            let closure = self.aut.get_mut(&a).expect("representative");
            if closure.set.contains(&e) {
                return false;
            }
            closure.add_generators(a_sub, vec![e]);
            return true;
        }
        let b_sub = self.lattice.get(b);
        let e_inv = invert_map(&e, a_sub, b_sub);
        let moved = self.members.remove(&b).expect("representative");
        for &y in &moved {
            let to = compose_maps(&e, b_sub, &self.to_rep[y.0]);
            self.from_rep[y.0] = invert_map(&to, a_sub, self.lattice.get(y));
            self.to_rep[y.0] = to;
            self.rep[y.0] = a;
        }
        self.members.get_mut(&a).expect("representative").extend(moved);
        let b_aut = self.aut.remove(&b).expect("representative");
        let transported: Vec<ElementMap> = b_aut
            .gens
            .iter()
            .map(|beta| compose_maps(&compose_maps(&e, b_sub, beta), b_sub, &e_inv))
            .collect();
        self.aut
            .get_mut(&a)
            .expect("representative")
            .add_generators(a_sub, transported);
        true
    }

    fn into_table(self) -> IsoTable {
        let mut table = IsoTable::new();
        for (rep, members) in &self.members {
            let rep_sub = self.lattice.get(*rep);
            let auts = &self.aut[rep].list;
            for &x in members {
                for &y in members {
                    let cell = table.entry((x, y)).or_default();
                    for a in auts {
                        let via = compose_maps(&self.from_rep[x.0], rep_sub, a);
                        cell.insert(compose_maps(&via, rep_sub, &self.to_rep[y.0]));
                    }
                }
            }
        }
        table
    }
}

/// Closure of the given isomorphisms `(P, Q, map)` together with the
/// conjugations by the carrier.
pub fn generate_from_maps(
    lattice: &Arc<SubgroupLattice>,
    carrier: SubgroupId,
    seeds: impl IntoIterator<Item = (SubgroupId, SubgroupId, ElementMap)>,
    provenance: Provenance,
) -> FusionSystem {
    let objects = lattice.subgroups_of(carrier);
    let group = lattice.group();
    let t = lattice.get(carrier);
    let mut queue: VecDeque<(SubgroupId, SubgroupId, ElementMap)> = t
        .canonical_generators(group)
        .into_iter()
        .map(|g| {
            let map = t.members().iter().map(|&x| group.conj(x, g)).collect();
            (carrier, carrier, map)
        })
        .collect();
    queue.extend(seeds);
    let mut groupoid = Groupoid::new(lattice, &objects);
    while let Some((p, q, phi)) = queue.pop_front() {
        if !groupoid.add(p, q, &phi) {
            continue;
        }
        let ps = lattice.get(p);
        for &m in lattice.maximal_subgroups(p) {
            let ms = lattice.get(m);
            let r = restrict_map(&phi, ps, ms);
            let mut image = r.clone();
            image.sort_unstable();
            let img = lattice
                .id_of_members(&image)
                .expect("image of a subgroup of the carrier");
            queue.push_back((m, img, r));
        }
    }
    FusionSystem::from_isos(lattice.clone(), carrier, provenance, groupoid.into_table())
}

/// `⟨H⟩_T`: the smallest fusion system on `T` containing the morphisms in
/// `generators`.
pub fn generated_subsystem(
    lattice: &Arc<SubgroupLattice>,
    carrier: SubgroupId,
    generators: &[Morphism],
) -> Result<FusionSystem> {
    let t = lattice.get(carrier);
    let mut seeds = Vec::with_capacity(generators.len());
    for phi in generators {
        let domain = lattice
            .id_of(phi.domain())
            .filter(|&d| lattice.is_le(d, carrier))
            .ok_or_else(|| Error::Domain("generator domain is not a subgroup of the carrier".into()))?;
        if !phi.codomain().is_subgroup_of(t) {
            return Err(Error::Domain(
                "generator codomain is not a subgroup of the carrier".into(),
            ));
        }
        let image = lattice
            .id_of(&phi.image())
            .ok_or_else(|| Error::Domain("generator image is not a subgroup".into()))?;
        seeds.push((domain, image, phi.images().to_vec()));
    }
    Ok(generate_from_maps(lattice, carrier, seeds, Provenance::Generated))
}
