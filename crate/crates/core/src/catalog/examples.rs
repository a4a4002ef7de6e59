//! Fixtures: a direct product with normal Sylow subgroups, two systems on
//! `GF(q)²` with the same `O^p`, and an automorphism lying in `A°(P)` but
//! not in `Aut_{F₀S}(P)`.

use std::sync::Arc;

use super::{ex71, CaseSystems};
use crate::error::{Error, Result};
use crate::fusion::{systems_equal, FusionSystem, QuotientSystem};
use crate::group::linear::{build_vector_space_semidirect, GaloisField, LinearSpec, VectorSpaceGroup};
use crate::group::morphism::ElementMap;
use crate::group::{generate_subgroup, AutomorphismGroup, Subgroup, SubgroupId, SubgroupLattice, DEFAULT_ORDER_CAP};
use crate::product::{op_residual_subsystem, ProductInstance};

fn require_q(q: u32) -> Result<GaloisField> {
    if q < 3 {
        return Err(Error::InvalidFixture(format!("q = {q}: need q >= 3")));
    }
    GaloisField::new(q)
}

fn with_translations(space: &VectorSpaceGroup, extra: &[u32]) -> Subgroup {
    let mut seed = space.translations.members().to_vec();
    seed.extend_from_slice(extra);
    generate_subgroup(&space.group, &seed)
}

/// `G₁ × G₂ = S₃ × S₃` at `p = 3` with `F₀ = F_T(T)`.
#[derive(Debug)]
pub struct Example71 {
    pub systems: CaseSystems,
}

pub fn fixture_example_7_1() -> Result<Example71> {
    Ok(Example71 {
        systems: ex71().systems()?,
    })
}

impl Example71 {
    /// `F/F₀`.
    pub fn quotient(&self) -> Result<QuotientSystem> {
        QuotientSystem::new(&self.systems.ambient, self.systems.normal.carrier())
    }

    /// `F₀T = F₀`.
    pub fn product_equals_normal(&self) -> bool {
        systems_equal(self.systems.instance.product_subsystem(), &self.systems.normal)
    }

    /// `F₀ ≠ F`.
    pub fn normal_is_proper(&self) -> bool {
        self.systems.normal.is_subsystem_of(&self.systems.ambient)
            && !systems_equal(&self.systems.normal, &self.systems.ambient)
    }
}

/// `S = GF(q)²`, `U = ⟨e₁⟩`, `W₁ = ⟨e₂⟩`, `W₂ = ⟨e₁ + e₂⟩`; `αᵢ` is `λ` on
/// `U` and the identity on `Wᵢ`. Both `Gᵢ = S ⋊ ⟨αᵢ⟩` sit in one ambient
/// group so that their systems share a lattice on `S`.
#[derive(Debug)]
pub struct Example74 {
    pub q: u32,
    pub space: VectorSpaceGroup,
    pub lattice: Arc<SubgroupLattice>,
    pub g1: Subgroup,
    pub g2: Subgroup,
    /// `F_S(G₁)`.
    pub f: Arc<FusionSystem>,
    /// `F_S(G₂)`.
    pub g: Arc<FusionSystem>,
    /// `O^p(F)`.
    pub f0: Arc<FusionSystem>,
    pub u: SubgroupId,
}

pub fn fixture_example_7_4(q: u32) -> Result<Example74> {
    let field = require_q(q)?;
    let lambda = field.primitive_element();
    let space = build_vector_space_semidirect(
        q,
        &[1, 1],
        &[
            LinearSpec::Scalar {
                lambda,
                summands: vec![0],
            },
            LinearSpec::ScalarFixing {
                lambda,
                summands: vec![0],
                fixed: vec![vec![1, 1]],
            },
        ],
        DEFAULT_ORDER_CAP,
    )?;
    let lattice = Arc::new(SubgroupLattice::new(
        space.group.clone(),
        &space.translations,
        field.characteristic(),
    )?);
    let s = lattice.carrier();
    let g1 = with_translations(&space, &space.linear_generators[..1]);
    let g2 = with_translations(&space, &space.linear_generators[1..]);
    let f = Arc::new(FusionSystem::of_subgroup(&lattice, &g1, s)?);
    let g = Arc::new(FusionSystem::of_subgroup(&lattice, &g2, s)?);
    let f0 = Arc::new(op_residual_subsystem(&f, None)?);
    let u = lattice.id_of(&space.summands[0]).expect("U is a subgroup of S");
    Ok(Example74 {
        q,
        space,
        lattice,
        g1,
        g2,
        f,
        g,
        f0,
        u,
    })
}

impl Example74 {
    pub fn op_g(&self) -> Result<FusionSystem> {
        op_residual_subsystem(&self.g, None)
    }

    /// `F_U(U ⋊ ⟨α⟩)`.
    pub fn expected_residual(&self) -> Result<FusionSystem> {
        let seed = [self.space.linear_generators[0]];
        let mut members = self.space.summands[0].members().to_vec();
        members.extend_from_slice(&seed);
        let m = generate_subgroup(&self.space.group, &members);
        FusionSystem::of_subgroup(&self.lattice, &m, self.u)
    }

    /// `(F₀S)_F` and `(F₀S)_G`.
    pub fn products(&self) -> Result<(Arc<FusionSystem>, Arc<FusionSystem>)> {
        let s = self.lattice.carrier();
        let in_f = ProductInstance::new(self.f.clone(), self.f0.clone(), s)?;
        let in_g = ProductInstance::new(self.g.clone(), self.f0.clone(), s)?;
        Ok((in_f.product_subsystem().clone(), in_g.product_subsystem().clone()))
    }
}

/// `G = S ⋊ ⟨α, β⟩` and `N = ⟨S₀, β⟩`.
pub(crate) fn vector_group_7_5(q: u32) -> Result<(VectorSpaceGroup, Subgroup)> {
    let field = require_q(q)?;
    let lambda = field.primitive_element();
    let space = build_vector_space_semidirect(
        q,
        &[1, 1, 1],
        &[
            LinearSpec::Scalar {
                lambda,
                summands: vec![0],
            },
            LinearSpec::ScalarFixing {
                lambda,
                summands: vec![0, 1],
                fixed: vec![vec![0, 1, 1]],
            },
        ],
        DEFAULT_ORDER_CAP,
    )?;
    let mut seed = space.summands[0].members().to_vec();
    seed.extend_from_slice(space.summands[1].members());
    seed.push(space.linear_generators[1]);
    let n = generate_subgroup(&space.group, &seed);
    Ok((space, n))
}

/// `S = U ⊕ V ⊕ W`, `S₀ = U ⊕ V`, `W′ = ⟨e₂ + e₃⟩`; `α` is `λ` on `U` and
/// the identity on `V ⊕ W`; `β` is `λ` on `S₀` and the identity on `W′`;
/// `P = U ⊕ W`.
#[derive(Debug)]
pub struct Example75 {
    pub q: u32,
    pub space: VectorSpaceGroup,
    pub normal_subgroup: Subgroup,
    pub lattice: Arc<SubgroupLattice>,
    pub f: Arc<FusionSystem>,
    pub f0: Arc<FusionSystem>,
    pub p: SubgroupId,
    pub alpha: u32,
    pub instance: ProductInstance,
}

pub fn fixture_example_7_5(q: u32) -> Result<Example75> {
    let (space, n) = vector_group_7_5(q)?;
    let whole = Subgroup::whole(&space.group);
    if !n.is_normal_in(&space.group, &whole) {
        return Err(Error::InvalidFixture("N is not normal in G".into()));
    }
    let prime = space.field.characteristic();
    let lattice = Arc::new(SubgroupLattice::new(space.group.clone(), &space.translations, prime)?);
    let s = lattice.carrier();
    let f = Arc::new(FusionSystem::of_subgroup(&lattice, &whole, s)?);
    let s0 = lattice
        .id_of(&space.translations.intersection(&n))
        .expect("S0 is a subgroup of S");
    let f0 = Arc::new(FusionSystem::of_subgroup(&lattice, &n, s0)?);
    let mut seed = space.summands[0].members().to_vec();
    seed.extend_from_slice(space.summands[2].members());
    let p = lattice.generated(&seed).expect("U + W is a subgroup of S");
    let alpha = space.linear_generators[0];
    let instance = ProductInstance::new(f.clone(), f0.clone(), s)?;
    Ok(Example75 {
        q,
        space,
        normal_subgroup: n,
        lattice,
        f,
        f0,
        p,
        alpha,
        instance,
    })
}

impl Example75 {
    /// `α|_P`.
    pub fn alpha_on_p(&self) -> ElementMap {
        let group = self.lattice.group();
        self.lattice
            .get(self.p)
            .members()
            .iter()
            .map(|&x| group.conj(x, self.alpha))
            .collect()
    }

    pub fn a_circ(&self) -> Result<AutomorphismGroup> {
        self.instance.a_circ(self.p)
    }

    /// `Aut_{F₀S}(P)`.
    pub fn product_automizer(&self) -> AutomorphismGroup {
        self.instance.product_subsystem().aut(self.p)
    }

    pub fn alpha_in_a_circ(&self) -> Result<bool> {
        Ok(self.a_circ()?.contains(&self.alpha_on_p()))
    }

    /// `A°(P) ≤ Aut_{F₀S}(P)`.
    pub fn a_circ_in_product(&self) -> Result<bool> {
        Ok(self.a_circ()?.is_subgroup_of(&self.product_automizer()))
    }
}
