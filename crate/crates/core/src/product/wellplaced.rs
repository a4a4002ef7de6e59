//! Well-placed subgroups of `S₀`.
//!
//! For `P₀ ≤ S₀` set `N₀ = P₀` and `N_{i+1} = N_{S₀}(N_i)`. `P₀` is
//! well-placed when, for every `i`,
//!
//! 1. `N_i` is fully normalized in `F₀`;
//! 2. `Aut_T(N_i) ∈ Syl_p(Aut_D(N_i))`;
//! 3. `N_{Aut_T(N_{i+1})}(N_i) ∈ Syl_p(N_{Aut_D(N_{i+1})}(N_i))`.

use super::ProductInstance;
use crate::error::{Error, Result};
use crate::group::morphism::{compose_maps, identity_map, restrict_map, ElementMap};
use crate::group::{Morphism, SubgroupId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WellPlacedLevel {
    pub subgroup: SubgroupId,
    pub fully_normalized: bool,
    pub automizer_sylow: bool,
    pub normalizer_sylow: bool,
}

impl WellPlacedLevel {
    pub fn holds(&self) -> bool {
        self.fully_normalized && self.automizer_sylow && self.normalizer_sylow
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WellPlacedCertificate {
    /// `N₀ < N₁ < … < N_k = S₀`.
    pub chain: Vec<WellPlacedLevel>,
}

impl WellPlacedCertificate {
    pub fn is_valid(&self) -> bool {
        self.chain.iter().all(WellPlacedLevel::holds)
    }

    /// Index of the first failing level and the name of the failing condition.
    pub fn first_failure(&self) -> Option<(usize, &'static str)> {
        self.chain.iter().enumerate().find_map(|(i, l)| {
            if !l.fully_normalized {
                Some((i, "fully normalized"))
            } else if !l.automizer_sylow {
                Some((i, "automizer Sylow"))
            } else if !l.normalizer_sylow {
                Some((i, "normalizer Sylow"))
            } else {
                None
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMethod {
    /// Normalizer-chain recursion with Sylow-aligning automorphisms.
    Recursion,
    /// First valid member of the `D`-class in canonical order.
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WellPlacedWitness {
    /// `φ ∈ Hom_D(Q₀, S₀)` with well-placed image.
    pub morphism: Morphism,
    pub target: SubgroupId,
    pub certificate: WellPlacedCertificate,
    pub method: SearchMethod,
}

impl ProductInstance {
    fn require_in_normal_carrier(&self, p: SubgroupId) -> Result<()> {
        if p.0 >= self.lattice().len() || !self.lattice().is_le(p, self.normal_carrier()) {
            return Err(Error::Domain(format!("subgroup {} is not contained in S0", p.0)));
        }
        Ok(())
    }

    fn image_id(&self, map: &[u32]) -> SubgroupId {
        let mut image = map.to_vec();
        image.sort_unstable();
        self.lattice()
            .id_of_members(&image)
            .expect("image of a subgroup of the carrier")
    }

    /// `N_{Aut_T(R)}(Q) ∈ Syl_p(N_{Aut_D(R)}(Q))` for `Q ≤ R`.
    fn stabilizer_sylow(&self, q: SubgroupId, r: SubgroupId) -> bool {
        let d = self.product_subsystem();
        let qs = self.lattice().get(q);
        let aut_t = self.aut_carrier(r).stabilizer(qs);
        let aut_d = d.aut(r).stabilizer(qs);
        aut_t.is_sylow_of(&aut_d, self.prime())
    }

    pub fn is_well_placed(&self, p0: SubgroupId) -> Result<WellPlacedCertificate> {
        self.require_in_normal_carrier(p0)?;
        let lattice = self.lattice();
        let s0 = self.normal_carrier();
        let d = self.product_subsystem();
        let mut chain = Vec::new();
        let mut n = p0;
        loop {
            let next = lattice.normalizer(s0, n);
            chain.push(WellPlacedLevel {
                subgroup: n,
                fully_normalized: self.normal().is_fully_normalized(n),
                automizer_sylow: self.aut_carrier(n).is_sylow_of(&d.aut(n), self.prime()),
                normalizer_sylow: self.stabilizer_sylow(n, next),
            });
            if n == s0 {
                break;
            }
            n = next;
        }
        Ok(WellPlacedCertificate { chain })
    }

    /// A map in `Hom_D(Q₀, S₀)` and its image, following the normalizer
    /// recursion. `None` when no aligning automorphism exists.
    fn recurse_well_placed(&self, q0: SubgroupId) -> Option<(ElementMap, SubgroupId)> {
        let lattice = self.lattice();
        let s0 = self.normal_carrier();
        if q0 == s0 {
            return Some((identity_map(lattice.get(s0)), s0));
        }
        let normal = self.normal();
        let q1 = *normal
            .conjugacy_class(q0)
            .iter()
            .find(|&&r| normal.is_fully_normalized(r))?;
        let rho = normal.isos(q0, q1).next()?.clone();
        let r0 = lattice.normalizer(s0, q1);
        let (phi, r1) = self.recurse_well_placed(r0)?;
        let (q1s, r0s) = (lattice.get(q1), lattice.get(r0));
        let step = restrict_map(&phi, r0s, q1s);
        let q2 = self.image_id(&step);
        let to_q2 = compose_maps(&rho, q1s, &step);
        let (q2s, r1s) = (lattice.get(q2), lattice.get(r1));
        let d = self.product_subsystem();
        for psi in d.aut(r1).iter() {
            let last = restrict_map(psi, r1s, q2s);
            let target = self.image_id(&last);
            if self.stabilizer_sylow(target, r1) {
                return Some((compose_maps(&to_q2, q2s, &last), target));
            }
        }
        None
    }

    /// Some `φ ∈ Hom_D(Q₀, S₀)` with `Q₀φ` well-placed.
    pub fn find_well_placed(&self, q0: SubgroupId) -> Result<WellPlacedWitness> {
        self.require_in_normal_carrier(q0)?;
        let lattice = self.lattice();
        let (qs, s0s) = (lattice.get(q0), lattice.get(self.normal_carrier()));
        let witness = |map: ElementMap, target, certificate, method| WellPlacedWitness {
            morphism: Morphism::from_parts(qs.clone(), s0s.clone(), map),
            target,
            certificate,
            method,
        };
        if let Some((map, target)) = self.recurse_well_placed(q0) {
            let certificate = self.is_well_placed(target)?;
            if certificate.is_valid() {
                return Ok(witness(map, target, certificate, SearchMethod::Recursion));
            }
        }
        let d = self.product_subsystem();
        for &r in d.conjugacy_class(q0) {
            if !lattice.is_le(r, self.normal_carrier()) {
                continue;
            }
            let certificate = self.is_well_placed(r)?;
            if certificate.is_valid() {
                let map = d.isos(q0, r).next().expect("class members are isomorphic").clone();
                return Ok(witness(map, r, certificate, SearchMethod::Exhaustive));
            }
        }
        Err(Error::Internal(format!(
            "no well-placed conjugate of {}",
            lattice.label(q0)
        )))
    }
}
