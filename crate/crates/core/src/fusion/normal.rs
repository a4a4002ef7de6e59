//! Normal subsystems.
//!
//! Conditions, checked in order:
//!
//! * N0: `F₀ ⊆ F`;
//! * N1: the carrier `S₀` of `F₀` is strongly closed in `F`;
//! * N2: `F₀` is saturated;
//! * N3: for `P ≤ Q ≤ S₀`, `φ ∈ Hom_F₀(P, Q)` and `ψ ∈ Hom_F(Q, S₀)`,
//!   `(ψ|_P)⁻¹ φ ψ ∈ Hom_F₀(Pψ, Qψ)`;
//! * N4: every `α ∈ Aut_F₀(S₀)` extends to `ᾱ ∈ Aut_F(S₀C_S(S₀))` with
//!   `[C_S(S₀), ᾱ] ≤ Z(S₀)`.
//!
//! For N3 it suffices to take `Q = ⟨P, Pφ⟩`: restrictions of `F`-morphisms
//! on larger `Q` are `F`-morphisms on `⟨P, Pφ⟩`.

use std::fmt;

use super::FusionSystem;
use crate::group::morphism::{invert_map, restrict_map};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormalityCondition {
    Subsystem,
    StronglyClosed,
    Saturated,
    StronglyInvariant,
    Extension,
}

impl fmt::Display for NormalityCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Subsystem => "N0 (subsystem)",
            Self::StronglyClosed => "N1 (strong closure)",
            Self::Saturated => "N2 (saturation)",
            Self::StronglyInvariant => "N3 (strong invariance)",
            Self::Extension => "N4 (extension)",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityReport {
    pub normal: bool,
    /// The first failing condition with a description of the witness.
    pub failure: Option<(NormalityCondition, String)>,
}

impl NormalityReport {
    fn fail(cond: NormalityCondition, detail: String) -> Self {
        Self {
            normal: false,
            failure: Some((cond, detail)),
        }
    }
}

pub fn is_normal_subsystem(f: &FusionSystem, f0: &FusionSystem) -> NormalityReport {
    use NormalityCondition::*;
    let lattice = f.lattice();
    if f.prime() != f0.prime() || !f0.is_subsystem_of(f) {
        return NormalityReport::fail(Subsystem, "F0 is not contained in F".into());
    }
    let s0 = f0.carrier();
    if !f.is_strongly_closed(s0).unwrap_or(false) {
        return NormalityReport::fail(StronglyClosed, format!("{} is not strongly closed", lattice.label(s0)));
    }
    let sat = f0.saturation_report();
    if !sat.saturated {
        let class = &sat.failures[0].class;
        return NormalityReport::fail(
            Saturated,
            format!(
                "class of {} has no fully automized receptive member",
                lattice.label(class[0])
            ),
        );
    }
    if let Some(detail) = strong_invariance_failure(f, f0) {
        return NormalityReport::fail(StronglyInvariant, detail);
    }
    if let Some(detail) = extension_failure(f, f0) {
        return NormalityReport::fail(Extension, detail);
    }
    NormalityReport {
        normal: true,
        failure: None,
    }
}

fn strong_invariance_failure(f: &FusionSystem, f0: &FusionSystem) -> Option<String> {
    let lattice = f.lattice();
    let group = f.group();
    let s0 = f0.carrier();
    for (&(p, r), set) in f0.iso_table() {
        let q = lattice.join(p, r);
        let (ps, qs) = (lattice.get(p), lattice.get(q));
        for (q_img, psis) in f.isos_from(q) {
            if !lattice.is_le(q_img, s0) {
                continue;
            }
            for psi in psis {
                let psi_p = restrict_map(psi, qs, ps);
                let mut p_img: Vec<u32> = psi_p.clone();
                p_img.sort_unstable();
                let p_img_id = lattice.id_of_members(&p_img).expect("image of a subgroup");
                let back = invert_map(&psi_p, ps, lattice.get(p_img_id));
                for phi in set {
                    // x ↦ ψ(φ(ψ⁻¹(x))) on Pψ.
                    let conj: Vec<u32> = back
                        .iter()
                        .map(|&x| {
                            let y = phi[ps.position(x).expect("in P")];
                            psi[qs.position(y).expect("in Q")]
                        })
                        .collect();
                    if !f0.contains_map(p_img_id, &conj) {
                        return Some(format!(
                            "conjugate of a map {} -> {} by an F-morphism on {} is not in F0",
                            lattice.get(p).label(group),
                            lattice.get(r).label(group),
                            lattice.get(q).label(group),
                        ));
                    }
                }
            }
        }
    }
    None
}

fn extension_failure(f: &FusionSystem, f0: &FusionSystem) -> Option<String> {
    let lattice = f.lattice();
    let group = f.group();
    let s0 = f0.carrier();
    let c = lattice.centralizer(f.carrier(), s0);
    let x = lattice.join(s0, c);
    let z = lattice.center(s0);
    let (xs, s0s, cs, zs) = (lattice.get(x), lattice.get(s0), lattice.get(c), lattice.get(z));
    let aut_x: Vec<_> = f.isos(x, x).collect();
    for alpha in f0.isos(s0, s0) {
        let ok = aut_x.iter().any(|bar| {
            restrict_map(bar, xs, s0s) == *alpha
                && cs.members().iter().all(|&g| {
                    let image = bar[xs.position(g).expect("in S0 C_S(S0)")];
                    zs.contains(group.mul(group.inv(g), image))
                })
        });
        if !ok {
            return Some(format!(
                "an automorphism of {} has no extension to {}",
                s0s.label(group),
                xs.label(group)
            ));
        }
    }
    None
}
