//! Products `F₀T` of a normal subsystem `F₀` on `S₀` with a subgroup `T`,
//! `S₀ ≤ T ≤ S`, together with well-placed subgroups, hyperfocal subgroups
//! and `O^p`.

mod residual;
mod verify;
mod wellplaced;

use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::fusion::{generate_from_maps, is_normal_subsystem, FusionSystem, Provenance};
use crate::group::morphism::{restrict_map, ElementMap};
use crate::group::{AutomorphismGroup, SubgroupId, SubgroupLattice};

pub use residual::{hyperfocal_subgroup, op_automizer, op_residual_subsystem};
pub use verify::{verify_main_theorem, CheckOutcome, VerificationReport};
pub use wellplaced::{SearchMethod, WellPlacedCertificate, WellPlacedLevel, WellPlacedWitness};

/// A saturated system `F` on `S`, a normal subsystem `F₀` on `S₀` and a
/// carrier `T` with `S₀ ≤ T ≤ S`. The product `D = F₀T` is built on first
/// use and cached.
#[derive(Debug)]
pub struct ProductInstance {
    ambient: Arc<FusionSystem>,
    normal: Arc<FusionSystem>,
    carrier: SubgroupId,
    product: OnceLock<Arc<FusionSystem>>,
}

impl ProductInstance {
    /// Checks that `F` is saturated, that `F₀` is normal in `F` and that
    /// `S₀ ≤ T ≤ S`.
    pub fn new(ambient: Arc<FusionSystem>, normal: Arc<FusionSystem>, carrier: SubgroupId) -> Result<Self> {
        if !ambient.lattice().is_compatible(normal.lattice()) {
            return Err(Error::Domain("systems live on different lattices".into()));
        }
        let lattice = ambient.lattice();
        if carrier.0 >= lattice.len()
            || !lattice.is_le(normal.carrier(), carrier)
            || !lattice.is_le(carrier, ambient.carrier())
        {
            return Err(Error::Precondition(
                "carrier must contain the normal carrier and lie in the ambient carrier".into(),
            ));
        }
        if !ambient.is_saturated() {
            return Err(Error::Precondition("ambient system is not saturated".into()));
        }
        if let Some((cond, detail)) = is_normal_subsystem(&ambient, &normal).failure {
            return Err(Error::Precondition(format!(
                "subsystem is not normal: {cond}: {detail}"
            )));
        }
        Ok(Self::unchecked(ambient, normal, carrier))
    }

    fn unchecked(ambient: Arc<FusionSystem>, normal: Arc<FusionSystem>, carrier: SubgroupId) -> Self {
        Self {
            ambient,
            normal,
            carrier,
            product: OnceLock::new(),
        }
    }

    /// The instance on `S₀R` for an arbitrary `R ≤ S`.
    pub fn for_subgroup(&self, r: SubgroupId) -> Result<Self> {
        let lattice = self.lattice();
        if r.0 >= lattice.len() || !lattice.is_le(r, self.ambient.carrier()) {
            return Err(Error::Domain("subgroup is not contained in the ambient carrier".into()));
        }
        let carrier = lattice.join(self.normal.carrier(), r);
        Ok(Self::unchecked(self.ambient.clone(), self.normal.clone(), carrier))
    }

    pub fn ambient(&self) -> &Arc<FusionSystem> {
        &self.ambient
    }

    pub fn normal(&self) -> &Arc<FusionSystem> {
        &self.normal
    }

    /// `T`.
    pub fn carrier(&self) -> SubgroupId {
        self.carrier
    }

    /// `S₀`.
    pub fn normal_carrier(&self) -> SubgroupId {
        self.normal.carrier()
    }

    pub fn prime(&self) -> u32 {
        self.ambient.prime()
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        self.ambient.lattice()
    }

    /// `P₀ = P ∩ S₀`.
    pub fn part(&self, p: SubgroupId) -> SubgroupId {
        self.lattice().intersection(p, self.normal_carrier())
    }

    fn require_in_carrier(&self, p: SubgroupId) -> Result<()> {
        if p.0 >= self.lattice().len() || !self.lattice().is_le(p, self.carrier) {
            return Err(Error::Domain(format!("subgroup {} is not contained in T", p.0)));
        }
        Ok(())
    }

    /// `Aut_T(P)`.
    pub fn aut_carrier(&self, p: SubgroupId) -> AutomorphismGroup {
        let lattice = self.lattice();
        AutomorphismGroup::induced_by(lattice.group(), lattice.get(p), lattice.get(self.carrier))
    }

    /// `A°(P)`: generated by the `p′`-elements `φ ∈ Aut_F(P)` with
    /// `[P, φ] ≤ P₀` and `φ|_{P₀} ∈ Aut_F₀(P₀)`.
    pub fn a_circ(&self, p: SubgroupId) -> Result<AutomorphismGroup> {
        self.require_in_carrier(p)?;
        let lattice = self.lattice();
        let group = lattice.group();
        let p0 = self.part(p);
        let (ps, p0s) = (lattice.get(p), lattice.get(p0));
        let normal_aut: BTreeSet<&ElementMap> = self.normal.isos(p0, p0).collect();
        let prime = self.prime() as usize;
        let aut = self.ambient.aut(p);
        let generators: Vec<ElementMap> = aut
            .iter()
            .filter(|phi| !aut.element_order(phi).is_multiple_of(prime))
            .filter(|phi| {
                ps.members()
                    .iter()
                    .zip(phi.iter())
                    .all(|(&x, &y)| p0s.contains(group.mul(group.inv(x), y)))
            })
            .filter(|phi| normal_aut.contains(&restrict_map(phi, ps, p0s)))
            .cloned()
            .collect();
        Ok(AutomorphismGroup::generated(ps, generators))
    }

    /// `A(P) = Aut_T(P)·A°(P)`.
    pub fn a_full(&self, p: SubgroupId) -> Result<AutomorphismGroup> {
        let circ = self.a_circ(p)?;
        Ok(self.aut_carrier(p).join(&circ))
    }

    /// `F₀T = ⟨A°(P) : P ≤ T, P₀ ∈ F₀^c⟩_T`.
    pub fn product_subsystem(&self) -> &Arc<FusionSystem> {
        self.product.get_or_init(|| {
            let lattice = self.lattice();
            let mut seeds = Vec::new();
            for p in lattice.subgroups_of(self.carrier) {
                if !self.normal.is_centric(self.part(p)) {
                    continue;
                }
                let circ = self.a_circ(p).expect("P lies in T");
                let id = circ.identity();
                seeds.extend(circ.iter().filter(|&m| *m != id).map(|m| (p, p, m.clone())));
            }
            Arc::new(generate_from_maps(lattice, self.carrier, seeds, Provenance::Product))
        })
    }
}
