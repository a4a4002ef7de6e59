//! Local properties of subgroups: full normalization, centralization and
//! automization, receptivity, centricity, radicality, and saturation.

use std::collections::BTreeSet;

use super::FusionSystem;
use crate::error::{Error, Result};
use crate::group::morphism::{compose_maps, invert_map, restrict_map, ElementMap};
use crate::group::{p_part, AutomorphismGroup, Morphism, SubgroupId};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SubgroupClassification {
    pub fully_normalized: bool,
    pub fully_centralized: bool,
    pub fully_automized: bool,
    pub receptive: bool,
    pub centric: bool,
    pub radical: bool,
}

/// An isomorphism `source → target` that does not extend to `N_φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReceptivityWitness {
    pub source: SubgroupId,
    pub target: SubgroupId,
    pub map: ElementMap,
    pub n_phi: SubgroupId,
}

/// A conjugacy class without a fully automized receptive member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFailure {
    pub class: Vec<SubgroupId>,
    pub fully_automized: Vec<SubgroupId>,
    /// Receptivity failure of the first fully automized member, if any.
    pub witness: Option<ReceptivityWitness>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SaturationReport {
    pub saturated: bool,
    pub failures: Vec<ClassFailure>,
}

impl FusionSystem {
    fn normalizer_order(&self, p: SubgroupId) -> usize {
        self.lattice().order(self.lattice().normalizer(self.carrier(), p))
    }

    fn centralizer_order(&self, p: SubgroupId) -> usize {
        self.lattice().order(self.lattice().centralizer(self.carrier(), p))
    }

    /// `|N_T(P)| ≥ |N_T(Q)|` for every `Q` in the class of `P`.
    pub fn is_fully_normalized(&self, p: SubgroupId) -> bool {
        let n = self.normalizer_order(p);
        self.conjugacy_class(p).iter().all(|&q| self.normalizer_order(q) <= n)
    }

    pub fn is_fully_centralized(&self, p: SubgroupId) -> bool {
        let c = self.centralizer_order(p);
        self.conjugacy_class(p).iter().all(|&q| self.centralizer_order(q) <= c)
    }

    /// `Aut_T(P) ∈ Syl_p(Aut_F(P))`.
    pub fn is_fully_automized(&self, p: SubgroupId) -> bool {
        let aut = self.aut(p);
        let inner = self.aut_carrier(p);
        inner.order() == p_part(aut.order(), self.prime()) && inner.is_subgroup_of(&aut)
    }

    /// `C_T(Q) ≤ Q` for every `Q` in the class of `P`.
    pub fn is_centric(&self, p: SubgroupId) -> bool {
        self.conjugacy_class(p)
            .iter()
            .all(|&q| self.lattice().is_le(self.lattice().centralizer(self.carrier(), q), q))
    }

    /// `O_p(Aut_F(P)) = Inn(P)`.
    pub fn is_radical(&self, p: SubgroupId) -> bool {
        let aut = self.aut(p);
        aut.p_core(self.prime()) == AutomorphismGroup::inner(self.group(), self.subgroup(p))
    }

    /// `N_φ = {g ∈ N_T(P) : φ⁻¹ c_g φ ∈ Aut_T(Q)}` for an isomorphism
    /// `φ: P → Q` given as an element map on `P`.
    pub fn n_phi_of_map(&self, p: SubgroupId, q: SubgroupId, map: &[u32]) -> SubgroupId {
        let group = self.group();
        let (ps, qs) = (self.subgroup(p), self.subgroup(q));
        let inv = invert_map(map, ps, qs);
        let aut_q: BTreeSet<ElementMap> = self.aut_carrier(q).elements().clone();
        let normalizer = self.lattice().normalizer(self.carrier(), p);
        let members: Vec<u32> = self
            .subgroup(normalizer)
            .members()
            .iter()
            .copied()
            .filter(|&g| {
                let c: ElementMap = ps.members().iter().map(|&x| group.conj(x, g)).collect();
                let transported = compose_maps(&compose_maps(&inv, ps, &c), ps, map);
                aut_q.contains(&transported)
            })
            .collect();
        self.lattice()
            .id_of_members(&members)
            .expect("N_phi is a subgroup of the carrier")
    }

    /// `N_φ` for an isomorphism of the system.
    pub fn compute_n_phi(&self, phi: &Morphism) -> Result<SubgroupId> {
        let p = self.object_id(phi.domain())?;
        if !self.contains_map(p, phi.images()) {
            return Err(Error::NotInSystem(phi.format(self.group())));
        }
        let q = self
            .lattice()
            .id_of(&phi.image())
            .expect("image of a morphism in the system");
        Ok(self.n_phi_of_map(p, q, phi.images()))
    }

    /// Some `ψ ∈ Hom_F(N, T)` with `ψ|_P = φ`, if one exists.
    pub fn find_extension(&self, p: SubgroupId, map: &[u32], n: SubgroupId) -> Option<(SubgroupId, ElementMap)> {
        let (ps, ns) = (self.subgroup(p), self.subgroup(n));
        if n == p {
            let mut image = map.to_vec();
            image.sort_unstable();
            return self.lattice().id_of_members(&image).map(|r| (r, map.to_vec()));
        }
        self.isos_from(n).find_map(|(r, set)| {
            set.iter()
                .find(|psi| restrict_map(psi, ns, ps) == map)
                .map(|psi| (r, psi.clone()))
        })
    }

    /// First isomorphism onto `Q` that does not extend to its `N_φ`.
    pub fn receptivity_witness(&self, q: SubgroupId) -> Option<ReceptivityWitness> {
        for &p in self.conjugacy_class(q) {
            for map in self.isos(p, q) {
                let n = self.n_phi_of_map(p, q, map);
                if self.find_extension(p, map, n).is_none() {
                    return Some(ReceptivityWitness {
                        source: p,
                        target: q,
                        map: map.clone(),
                        n_phi: n,
                    });
                }
            }
        }
        None
    }

    pub fn is_receptive(&self, q: SubgroupId) -> bool {
        self.receptivity_witness(q).is_none()
    }

    pub fn classify(&self, p: SubgroupId) -> Result<SubgroupClassification> {
        self.require_object(p)?;
        Ok(SubgroupClassification {
            fully_normalized: self.is_fully_normalized(p),
            fully_centralized: self.is_fully_centralized(p),
            fully_automized: self.is_fully_automized(p),
            receptive: self.is_receptive(p),
            centric: self.is_centric(p),
            radical: self.is_radical(p),
        })
    }

    /// Saturation via the criterion that every class contains a member that
    /// is fully automized and receptive.
    pub fn saturation_report(&self) -> SaturationReport {
        let mut failures = Vec::new();
        for class in self.classes() {
            let automized: Vec<SubgroupId> = class.iter().copied().filter(|&q| self.is_fully_automized(q)).collect();
            let mut first_witness = None;
            let mut ok = false;
            for &q in &automized {
                match self.receptivity_witness(q) {
                    None => {
                        ok = true;
                        break;
                    }
                    Some(w) => {
                        first_witness.get_or_insert(w);
                    }
                }
            }
            if !ok {
                failures.push(ClassFailure {
                    class: class.clone(),
                    fully_automized: automized,
                    witness: first_witness,
                });
            }
        }
        SaturationReport {
            saturated: failures.is_empty(),
            failures,
        }
    }

    /// Cached saturation flag.
    pub fn is_saturated(&self) -> bool {
        *self.saturated.get_or_init(|| self.saturation_report().saturated)
    }

    /// No morphism moves a subgroup of `R` outside `R`.
    pub fn is_strongly_closed(&self, r: SubgroupId) -> Result<bool> {
        self.require_object(r)?;
        let lattice = self.lattice();
        Ok(self
            .objects()
            .iter()
            .filter(|&&p| lattice.is_le(p, r))
            .all(|&p| self.conjugacy_class(p).iter().all(|&q| lattice.is_le(q, r))))
    }
}
