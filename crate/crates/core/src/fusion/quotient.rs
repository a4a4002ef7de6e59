//! Factor systems `F/R` by a strongly closed subgroup `R`, and images of
//! subsystems in them.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::closure::generate_from_maps;
use super::{FusionSystem, IsoTable, Provenance};
use crate::error::{Error, Result};
use crate::group::morphism::ElementMap;
use crate::group::{FiniteGroup, Subgroup, SubgroupId, SubgroupLattice};

#[derive(Clone, Debug)]
pub struct QuotientSystem {
    kernel: SubgroupId,
    /// Coset index of each element of the base carrier.
    projection: BTreeMap<u32, u32>,
    lattice: Arc<SubgroupLattice>,
    system: FusionSystem,
    base_lattice: Arc<SubgroupLattice>,
}

impl QuotientSystem {
    /// `F/R`. The quotient group `S/R` indexes cosets by their least
    /// member; morphisms are those induced by `F`-morphisms between
    /// subgroups containing `R`.
    pub fn new(f: &FusionSystem, r: SubgroupId) -> Result<Self> {
        if !f.is_strongly_closed(r)? {
            return Err(Error::Precondition(format!(
                "{} is not strongly closed",
                f.lattice().label(r)
            )));
        }
        let group = f.group();
        let s = f.carrier_subgroup();
        let kernel = f.subgroup(r);
        let mut projection: BTreeMap<u32, u32> = BTreeMap::new();
        let mut reps: Vec<u32> = Vec::new();
        for &x in s.members() {
            if projection.contains_key(&x) {
                continue;
            }
            let idx = reps.len() as u32;
            reps.push(x);
            for &k in kernel.members() {
                projection.insert(group.mul(x, k), idx);
            }
        }
        let n = reps.len();
        let mut table = Vec::with_capacity(n * n);
        for &a in &reps {
            for &b in &reps {
                table.push(projection[&group.mul(a, b)]);
            }
        }
        let labels = reps.iter().map(|&x| format!("{}R", group.label(x))).collect();
        let quotient = Arc::new(FiniteGroup::from_table(table, labels)?);
        let whole = Subgroup::whole(&quotient);
        let lattice = Arc::new(SubgroupLattice::new(quotient, &whole, f.prime())?);
        let mut out = Self {
            kernel: r,
            projection,
            lattice: lattice.clone(),
            system: FusionSystem::inner(&lattice, lattice.carrier()),
            base_lattice: f.lattice().clone(),
        };
        let base = f.lattice();
        let mut isos = IsoTable::new();
        for (&(p, q), set) in f.iso_table() {
            if !base.is_le(r, p) {
                continue;
            }
            let pbar = out.project(p);
            let qbar = out.project(q);
            let cell = isos.entry((pbar, qbar)).or_default();
            for m in set {
                cell.insert(out.induced_map(base.get(p), m, pbar));
            }
        }
        out.system = FusionSystem::from_isos(lattice.clone(), lattice.carrier(), Provenance::Quotient, isos);
        Ok(out)
    }

    pub fn system(&self) -> &FusionSystem {
        &self.system
    }

    pub fn kernel(&self) -> SubgroupId {
        self.kernel
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    pub fn quotient_group(&self) -> &Arc<FiniteGroup> {
        self.lattice.group()
    }

    /// Image of a subgroup of the base carrier: `PR/R`.
    pub fn project(&self, p: SubgroupId) -> SubgroupId {
        let mut members: Vec<u32> = self
            .base_lattice
            .get(p)
            .members()
            .iter()
            .map(|x| self.projection[x])
            .collect();
        members.sort_unstable();
        members.dedup();
        self.lattice
            .id_of_members(&members)
            .expect("image of a subgroup is a subgroup")
    }

    /// Map induced on `pbar = PR/R` by `m: P → S`.
    fn induced_map(&self, p: &Subgroup, m: &[u32], pbar: SubgroupId) -> ElementMap {
        let mut images: BTreeMap<u32, u32> = BTreeMap::new();
        for (i, x) in p.members().iter().enumerate() {
            images.entry(self.projection[x]).or_insert(self.projection[&m[i]]);
        }
        self.lattice.get(pbar).members().iter().map(|c| images[c]).collect()
    }

    /// `E/R`: the subsystem on `ER/R` generated by the maps induced by the
    /// morphisms of `E`.
    pub fn image(&self, e: &FusionSystem) -> Result<FusionSystem> {
        if !e.lattice().is_compatible(&self.base_lattice) {
            return Err(Error::Domain("subsystem lives on a different lattice".into()));
        }
        if e.carrier_subgroup()
            .members()
            .iter()
            .any(|x| !self.projection.contains_key(x))
        {
            return Err(Error::Domain("subsystem carrier leaves the base carrier".into()));
        }
        let base = e.lattice();
        let mut seeds = Vec::new();
        for (&(p, q), set) in e.iso_table() {
            let pbar = self.project(p);
            let qbar = self.project(q);
            for m in set {
                seeds.push((pbar, qbar, self.induced_map(base.get(p), m, pbar)));
            }
        }
        let carrier = self.project(e.carrier());
        Ok(generate_from_maps(&self.lattice, carrier, seeds, Provenance::Quotient))
    }
}
