//! Fusion systems on a `p`-group with explicit isomorphism tables.
//!
//! A system stores `Iso_F(P, Q)` for every pair of `F`-conjugate subgroups
//! of its carrier. Every morphism factors as an isomorphism onto its image
//! followed by an inclusion, so `Hom_F(P, Q)` is the union of `Iso_F(P, R)`
//! over the conjugates `R ≤ Q` of `P`.

mod classify;
mod closure;
mod dump;
mod normal;
mod quotient;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::group::morphism::{compose_maps, invert_map, restrict_map, ElementMap};
use crate::group::{
    is_power_of, p_part, AutomorphismGroup, FiniteGroup, Morphism, Subgroup, SubgroupId, SubgroupLattice,
};

pub use classify::{ClassFailure, ReceptivityWitness, SaturationReport, SubgroupClassification};
pub use closure::{generate_from_maps, generated_subsystem};
pub use dump::parse_dump;
pub use normal::{is_normal_subsystem, NormalityCondition, NormalityReport};
pub use quotient::QuotientSystem;

/// How a system was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    GroupInduced,
    Generated,
    Quotient,
    Product,
    Parsed,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::GroupInduced => "group-induced",
            Self::Generated => "generated",
            Self::Quotient => "quotient",
            Self::Product => "product",
            Self::Parsed => "parsed",
        };
        f.write_str(s)
    }
}

/// Key of an isomorphism cell: `(domain, image)`.
pub type IsoKey = (SubgroupId, SubgroupId);
pub type IsoTable = BTreeMap<IsoKey, BTreeSet<ElementMap>>;

#[derive(Clone, Debug)]
pub struct FusionSystem {
    prime: u32,
    lattice: Arc<SubgroupLattice>,
    carrier: SubgroupId,
    provenance: Provenance,
    objects: Vec<SubgroupId>,
    is_object: Vec<bool>,
    class_of: Vec<usize>,
    classes: Vec<Vec<SubgroupId>>,
    isos: IsoTable,
    saturated: OnceLock<bool>,
}

/// The first place where two systems differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Difference {
    /// The systems index different lattices and cannot be compared cell by cell.
    Lattice,
    Carrier {
        first: SubgroupId,
        second: SubgroupId,
    },
    /// `map: domain → codomain` lies in exactly one of the systems.
    Morphism {
        domain: SubgroupId,
        codomain: SubgroupId,
        map: ElementMap,
        in_first: bool,
    },
}

impl fmt::Display for Difference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Lattice => write!(f, "systems live on different subgroup lattices"),
            Self::Carrier { first, second } => write!(f, "carriers differ: {first} vs {second}"),
            Self::Morphism {
                domain,
                codomain,
                map,
                in_first,
            } => write!(
                f,
                "morphism {domain} -> {codomain} {map:?} only in the {} system",
                if *in_first { "first" } else { "second" }
            ),
        }
    }
}

impl FusionSystem {
    /// Builds a system from a finished isomorphism table. Classes are read
    /// off the keys.
    pub(crate) fn from_isos(
        lattice: Arc<SubgroupLattice>,
        carrier: SubgroupId,
        provenance: Provenance,
        isos: IsoTable,
    ) -> Self {
        let n = lattice.len();
        let objects = lattice.subgroups_of(carrier);
        let mut is_object = vec![false; n];
        for &o in &objects {
            is_object[o.0] = true;
        }
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<SubgroupId>> = Vec::new();
        for &o in &objects {
            if class_of[o.0] != usize::MAX {
                continue;
            }
            let idx = classes.len();
            let mut members: Vec<SubgroupId> = isos
                .range((o, SubgroupId(0))..=(o, SubgroupId(usize::MAX)))
                .map(|(&(_, q), _)| q)
                .collect();
            if !members.contains(&o) {
                members.push(o);
            }
            members.sort();
            for &m in &members {
                class_of[m.0] = idx;
            }
            classes.push(members);
        }
        Self {
            prime: lattice.prime(),
            lattice,
            carrier,
            provenance,
            objects,
            is_object,
            class_of,
            classes,
            isos,
            saturated: OnceLock::new(),
        }
    }

    /// `F_S(G)` for a Sylow `p`-subgroup `S` of `G`.
    pub fn of_group(group: Arc<FiniteGroup>, sylow: &Subgroup, p: u32) -> Result<Self> {
        if !sylow.is_p_group(p) || sylow.order() != p_part(group.order(), p) {
            return Err(Error::Precondition(format!(
                "subgroup of order {} is not a Sylow {p}-subgroup of a group of order {}",
                sylow.order(),
                group.order()
            )));
        }
        let whole = Subgroup::whole(&group);
        let lattice = Arc::new(SubgroupLattice::new(group, sylow, p)?);
        let carrier = lattice.carrier();
        Self::of_subgroup(&lattice, &whole, carrier)
    }

    /// `F_T(M)`: conjugations by elements of `M` between subgroups of `T`,
    /// with `T ≤ M` a `p`-subgroup indexed by `lattice`.
    pub fn of_subgroup(lattice: &Arc<SubgroupLattice>, m: &Subgroup, t: SubgroupId) -> Result<Self> {
        let group = lattice.group().clone();
        let t_sub = lattice.get(t);
        if !t_sub.is_subgroup_of(m) {
            return Err(Error::Precondition(
                "carrier is not contained in the ambient subgroup".into(),
            ));
        }
        let mut isos: IsoTable = BTreeMap::new();
        for p in lattice.subgroups_of(t) {
            let members = lattice.get(p).members();
            for &g in m.members() {
                let map: ElementMap = members.iter().map(|&x| group.conj(x, g)).collect();
                let mut image = map.clone();
                image.sort_unstable();
                let Some(q) = lattice.id_of_members(&image) else {
                    continue;
                };
                if lattice.is_le(q, t) {
                    isos.entry((p, q)).or_default().insert(map);
                }
            }
        }
        Ok(Self::from_isos(lattice.clone(), t, Provenance::GroupInduced, isos))
    }

    /// `F_T(T)`.
    pub fn inner(lattice: &Arc<SubgroupLattice>, t: SubgroupId) -> Self {
        let sub = lattice.get(t).clone();
        Self::of_subgroup(lattice, &sub, t).expect("a subgroup contains itself")
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.lattice.group()
    }

    pub fn carrier(&self) -> SubgroupId {
        self.carrier
    }

    pub fn carrier_subgroup(&self) -> &Subgroup {
        self.lattice.get(self.carrier)
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Subgroups of the carrier, in canonical order.
    pub fn objects(&self) -> &[SubgroupId] {
        &self.objects
    }

    pub fn is_object(&self, p: SubgroupId) -> bool {
        self.is_object.get(p.0).copied().unwrap_or(false)
    }

    pub fn subgroup(&self, p: SubgroupId) -> &Subgroup {
        self.lattice.get(p)
    }

    pub(crate) fn require_object(&self, p: SubgroupId) -> Result<()> {
        if self.is_object(p) {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "subgroup {} is not contained in the carrier",
                self.lattice.label(p)
            )))
        }
    }

    /// Id of an arbitrary subgroup, if it is an object of the system.
    pub fn object_id(&self, sub: &Subgroup) -> Result<SubgroupId> {
        self.lattice
            .id_of(sub)
            .filter(|&id| self.is_object(id))
            .ok_or_else(|| Error::Domain("subgroup is not contained in the carrier".into()))
    }

    pub fn iso_table(&self) -> &IsoTable {
        &self.isos
    }

    /// `Iso_F(P, Q)` as element maps aligned with the members of `P`.
    pub fn isos(&self, p: SubgroupId, q: SubgroupId) -> impl Iterator<Item = &ElementMap> {
        self.isos.get(&(p, q)).into_iter().flatten()
    }

    /// All isomorphism cells leaving `P`.
    pub fn isos_from(&self, p: SubgroupId) -> impl Iterator<Item = (SubgroupId, &BTreeSet<ElementMap>)> {
        self.isos
            .range((p, SubgroupId(0))..=(p, SubgroupId(usize::MAX)))
            .map(|(&(_, q), set)| (q, set))
    }

    /// `Hom_F(P, Q)` as element maps, grouped by image.
    pub fn hom_maps(&self, p: SubgroupId, q: SubgroupId) -> Vec<(SubgroupId, &ElementMap)> {
        self.isos_from(p)
            .filter(|&(r, _)| self.lattice.is_le(r, q))
            .flat_map(|(r, set)| set.iter().map(move |m| (r, m)))
            .collect()
    }

    pub fn hom_set(&self, p: SubgroupId, q: SubgroupId) -> Result<Vec<Morphism>> {
        self.require_object(p)?;
        self.require_object(q)?;
        let (dom, cod) = (self.subgroup(p), self.subgroup(q));
        Ok(self
            .hom_maps(p, q)
            .into_iter()
            .map(|(_, m)| Morphism::from_parts(dom.clone(), cod.clone(), m.clone()))
            .collect())
    }

    /// Whether `map`, defined on `P`, is a morphism of the system.
    pub fn contains_map(&self, p: SubgroupId, map: &[u32]) -> bool {
        let mut image = map.to_vec();
        image.sort_unstable();
        self.lattice
            .id_of_members(&image)
            .and_then(|r| self.isos.get(&(p, r)))
            .is_some_and(|set| set.contains(map))
    }

    pub fn contains_morphism(&self, phi: &Morphism) -> bool {
        self.lattice
            .id_of(phi.domain())
            .is_some_and(|p| self.is_object(p) && self.contains_map(p, phi.images()))
    }

    /// `Aut_F(P)`.
    pub fn aut(&self, p: SubgroupId) -> AutomorphismGroup {
        AutomorphismGroup::from_elements_unchecked(self.subgroup(p).clone(), self.isos(p, p).cloned())
    }

    /// `Aut_T(P)` for the carrier `T`.
    pub fn aut_carrier(&self, p: SubgroupId) -> AutomorphismGroup {
        AutomorphismGroup::induced_by(self.group(), self.subgroup(p), self.carrier_subgroup())
    }

    /// The `F`-conjugacy class of `P`, in canonical order.
    pub fn conjugacy_class(&self, p: SubgroupId) -> &[SubgroupId] {
        &self.classes[self.class_of[p.0]]
    }

    pub fn classes(&self) -> &[Vec<SubgroupId>] {
        &self.classes
    }

    pub fn iso_count(&self) -> usize {
        self.isos.values().map(BTreeSet::len).sum()
    }

    /// Total number of morphisms `Σ |Hom_F(P, Q)|` over ordered pairs of objects.
    pub fn morphism_count(&self) -> usize {
        let overgroups: Vec<usize> = (0..self.lattice.len())
            .map(|r| {
                let r = SubgroupId(r);
                if !self.is_object(r) {
                    return 0;
                }
                self.objects.iter().filter(|&&q| self.lattice.is_le(r, q)).count()
            })
            .collect();
        self.isos.iter().map(|(&(_, r), set)| set.len() * overgroups[r.0]).sum()
    }

    /// Every morphism of `self` is a morphism of `other`.
    pub fn is_subsystem_of(&self, other: &FusionSystem) -> bool {
        self.lattice.is_compatible(&other.lattice)
            && self.lattice.is_le(self.carrier, other.carrier)
            && self
                .isos
                .iter()
                .all(|(key, set)| other.isos.get(key).is_some_and(|o| set.iter().all(|m| o.contains(m))))
    }

    /// The first morphism (in canonical cell order) lying in exactly one
    /// of the two systems.
    pub fn first_difference(&self, other: &FusionSystem) -> Option<Difference> {
        if !self.lattice.is_compatible(&other.lattice) {
            return Some(Difference::Lattice);
        }
        if self.carrier != other.carrier {
            return Some(Difference::Carrier {
                first: self.carrier,
                second: other.carrier,
            });
        }
        let empty = BTreeSet::new();
        let keys: BTreeSet<&IsoKey> = self.isos.keys().chain(other.isos.keys()).collect();
        for key in keys {
            let a = self.isos.get(key).unwrap_or(&empty);
            let b = other.isos.get(key).unwrap_or(&empty);
            if a == b {
                continue;
            }
            let (map, in_first) = match a.difference(b).next() {
                Some(m) => (m.clone(), true),
                None => (b.difference(a).next().expect("sets differ").clone(), false),
            };
            return Some(Difference::Morphism {
                domain: key.0,
                codomain: key.1,
                map,
                in_first,
            });
        }
        None
    }

    /// Exhaustive check of the fusion system axioms: carrier a `p`-group,
    /// stored maps are injective homomorphisms onto the cell's image,
    /// conjugation by the carrier, inverses, composition and restriction.
    pub fn validate(&self) -> Result<()> {
        let group = self.group();
        let fail = |msg: String| Err(Error::Internal(msg));
        if !is_power_of(self.carrier_subgroup().order(), self.prime) {
            return fail("carrier is not a p-group".into());
        }
        for (&(p, q), set) in &self.isos {
            if !self.is_object(p) || !self.is_object(q) {
                return fail(format!("cell {p} -> {q} leaves the carrier"));
            }
            let (ps, qs) = (self.subgroup(p), self.subgroup(q));
            for m in set {
                let mut image = m.clone();
                image.sort_unstable();
                if image != qs.members() {
                    return fail(format!("map in cell {p} -> {q} is not onto {q}"));
                }
                for (i, &x) in ps.members().iter().enumerate() {
                    for (j, &y) in ps.members().iter().enumerate() {
                        let xy = ps.position(group.mul(x, y)).expect("closed");
                        if m[xy] != group.mul(m[i], m[j]) {
                            return fail(format!("map in cell {p} -> {q} is not a homomorphism"));
                        }
                    }
                }
                let inv = invert_map(m, ps, qs);
                if !self.isos.get(&(q, p)).is_some_and(|s| s.contains(&inv)) {
                    return fail(format!("inverse of a map {p} -> {q} is missing"));
                }
                for (r, next) in self.isos_from(q) {
                    for n in next {
                        let c = compose_maps(m, qs, n);
                        if !self.isos.get(&(p, r)).is_some_and(|s| s.contains(&c)) {
                            return fail(format!("composite {p} -> {q} -> {r} is missing"));
                        }
                    }
                }
                for &sub in self.lattice.maximal_subgroups(p) {
                    let r = restrict_map(m, ps, self.subgroup(sub));
                    if !self.contains_map(sub, &r) {
                        return fail(format!("restriction of a map {p} -> {q} to {sub} is missing"));
                    }
                }
            }
        }
        let t = self.carrier_subgroup();
        for &p in &self.objects {
            let ps = self.subgroup(p);
            if !self.contains_map(p, ps.members()) {
                return fail(format!("identity of {p} is missing"));
            }
            for &g in t.members() {
                let m: ElementMap = ps.members().iter().map(|&x| group.conj(x, g)).collect();
                if !self.contains_map(p, &m) {
                    return fail(format!("conjugation of {p} by {} is missing", group.label(g)));
                }
            }
        }
        Ok(())
    }
}

/// Exact equality of Hom tables on the same carrier.
pub fn systems_equal(a: &FusionSystem, b: &FusionSystem) -> bool {
    a.first_difference(b).is_none()
}

/// `fusion_system_of_group` as a free function.
pub fn fusion_system_of_group(group: Arc<FiniteGroup>, sylow: &Subgroup, p: u32) -> Result<FusionSystem> {
    FusionSystem::of_group(group, sylow, p)
}
