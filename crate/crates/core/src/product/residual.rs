//! `hyp(F)`, `O^p(F)` and the subsystems `F_T = O^p(F)T`.

use crate::error::{Error, Result};
use crate::fusion::{generate_from_maps, FusionSystem, Provenance};
use crate::group::{AutomorphismGroup, SubgroupId};

fn require_saturated(f: &FusionSystem) -> Result<()> {
    if f.is_saturated() {
        Ok(())
    } else {
        Err(Error::Precondition("fusion system is not saturated".into()))
    }
}

/// `O^p(Aut_F(P))`.
pub fn op_automizer(f: &FusionSystem, p: SubgroupId) -> AutomorphismGroup {
    f.aut(p).p_residual(f.prime())
}

pub(crate) fn hyperfocal_unchecked(f: &FusionSystem) -> SubgroupId {
    let group = f.group();
    let mut seed = Vec::new();
    for &p in f.objects() {
        let members = f.subgroup(p).members();
        for phi in op_automizer(f, p).iter() {
            seed.extend(members.iter().zip(phi).map(|(&x, &y)| group.mul(group.inv(x), y)));
        }
    }
    seed.sort_unstable();
    seed.dedup();
    f.lattice().generated(&seed).expect("commutators lie in the carrier")
}

/// `hyp(F) = ⟨[P, O^p(Aut_F(P))] : P ≤ S⟩`.
pub fn hyperfocal_subgroup(f: &FusionSystem) -> Result<SubgroupId> {
    require_saturated(f)?;
    Ok(hyperfocal_unchecked(f))
}

/// `O^p(F)` on `hyp(F)` when `carrier` is `None`; otherwise
/// `F_T = ⟨O^p(Aut_F(P)) : P ≤ T⟩_T` for `hyp(F) ≤ T ≤ S`.
pub fn op_residual_subsystem(f: &FusionSystem, carrier: Option<SubgroupId>) -> Result<FusionSystem> {
    require_saturated(f)?;
    let lattice = f.lattice();
    let hyp = hyperfocal_unchecked(f);
    let base = match carrier {
        None => hyp,
        Some(t) => {
            if t.0 >= lattice.len() || !lattice.is_le(hyp, t) || !lattice.is_le(t, f.carrier()) {
                return Err(Error::Precondition(
                    "carrier must contain the hyperfocal subgroup and lie in S".into(),
                ));
            }
            t
        }
    };
    let mut seeds = Vec::new();
    for p in lattice.subgroups_of(base) {
        let res = op_automizer(f, p);
        let id = res.identity();
        seeds.extend(res.iter().filter(|&m| *m != id).map(|m| (p, p, m.clone())));
    }
    Ok(generate_from_maps(lattice, base, seeds, Provenance::Generated))
}
