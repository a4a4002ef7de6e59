//! Group-induced test cases with a normal subgroup, the group-theoretic
//! product `F_T(NT)`, and the two vector-space fixtures.

mod examples;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fusion::{systems_equal, FusionSystem};
use crate::group::linear::{build_linear_group, build_vector_space_semidirect, GaloisField, LinearSpec};
use crate::group::subgroup::{overgroups_between, p_core_in, p_residual_in, sylow_in};
use crate::group::{generate_subgroup, p_part, FiniteGroup, Subgroup, SubgroupId, SubgroupLattice, DEFAULT_ORDER_CAP};
use crate::product::{op_residual_subsystem, verify_main_theorem, ProductInstance, VerificationReport};

pub use examples::{fixture_example_7_1, fixture_example_7_4, fixture_example_7_5, Example71, Example74, Example75};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpectedFlags {
    pub oracle_equal: bool,
    pub saturated: bool,
    pub op_identity: bool,
}

impl ExpectedFlags {
    const ALL: Self = Self {
        oracle_equal: true,
        saturated: true,
        op_identity: true,
    };
}

#[derive(Clone, Debug)]
pub struct CatalogCase {
    pub name: &'static str,
    pub description: &'static str,
    pub group: Arc<FiniteGroup>,
    /// `N ⊴ G`.
    pub normal: Subgroup,
    pub prime: u32,
    /// The Sylow subgroup `S`.
    pub sylow: Subgroup,
    /// `T` with `S ∩ N ≤ T ≤ S`.
    pub carrier: Subgroup,
    pub expected: ExpectedFlags,
}

/// The systems attached to a case, all indexed by one lattice on `S`.
#[derive(Debug)]
pub struct CaseSystems {
    pub lattice: Arc<SubgroupLattice>,
    /// `F = F_S(G)`.
    pub ambient: Arc<FusionSystem>,
    /// `F₀ = F_{S₀}(N)`.
    pub normal: Arc<FusionSystem>,
    pub carrier: SubgroupId,
    pub instance: ProductInstance,
}

#[derive(Clone, Debug)]
pub struct CaseReport {
    pub name: &'static str,
    pub oracle_equal: bool,
    pub saturated: bool,
    pub op_identity: bool,
    pub verification: VerificationReport,
}

impl CaseReport {
    pub fn matches(&self, expected: ExpectedFlags) -> bool {
        self.oracle_equal == expected.oracle_equal
            && self.saturated == expected.saturated
            && self.op_identity == expected.op_identity
            && self.verification.passed()
    }
}

impl CatalogCase {
    /// `S₀ = S ∩ N`.
    pub fn normal_carrier(&self) -> Subgroup {
        self.sylow.intersection(&self.normal)
    }

    /// Checks `N ⊴ G`, that `S` is Sylow and `S₀ ≤ T ≤ S`.
    pub fn validate(&self) -> Result<()> {
        let whole = Subgroup::whole(&self.group);
        if !self.normal.is_normal_in(&self.group, &whole) {
            return Err(Error::InvalidFixture(format!("{}: N is not normal", self.name)));
        }
        if !self.sylow.is_p_group(self.prime) || self.sylow.order() != p_part(self.group.order(), self.prime) {
            return Err(Error::InvalidFixture(format!("{}: S is not Sylow", self.name)));
        }
        if !self.normal_carrier().is_subgroup_of(&self.carrier) || !self.carrier.is_subgroup_of(&self.sylow) {
            return Err(Error::InvalidFixture(format!(
                "{}: T is not between S0 and S",
                self.name
            )));
        }
        Ok(())
    }

    pub fn systems(&self) -> Result<CaseSystems> {
        self.validate()?;
        let lattice = Arc::new(SubgroupLattice::new(self.group.clone(), &self.sylow, self.prime)?);
        let whole = Subgroup::whole(&self.group);
        let ambient = Arc::new(FusionSystem::of_subgroup(&lattice, &whole, lattice.carrier())?);
        let s0 = lattice.id_of(&self.normal_carrier()).expect("S0 is a subgroup of S");
        let normal = Arc::new(FusionSystem::of_subgroup(&lattice, &self.normal, s0)?);
        let carrier = lattice.id_of(&self.carrier).expect("T is a subgroup of S");
        let instance = ProductInstance::new(ambient.clone(), normal.clone(), carrier)?;
        Ok(CaseSystems {
            lattice,
            ambient,
            normal,
            carrier,
            instance,
        })
    }

    /// `NT`.
    pub fn product_group(&self) -> Subgroup {
        self.normal.join(&self.group, &self.carrier)
    }

    /// `F_T(M)` for every `T ≤ M ≤ NT` in which `T` is Sylow.
    pub fn candidates(&self, lattice: &Arc<SubgroupLattice>) -> Result<Vec<FusionSystem>> {
        let t = lattice.id_of(&self.carrier).expect("T is a subgroup of S");
        overgroups_between(&self.group, &self.carrier, &self.product_group())
            .iter()
            .filter(|m| p_part(m.order(), self.prime) == self.carrier.order())
            .map(|m| FusionSystem::of_subgroup(lattice, m, t))
            .collect()
    }

    /// Builds the systems and runs the oracle comparison and the full
    /// verification.
    pub fn run(&self) -> Result<CaseReport> {
        let systems = self.systems()?;
        let d = systems.instance.product_subsystem();
        let oracle = oracle_product(&systems.lattice, &self.normal, systems.carrier)?;
        let candidates = self.candidates(&systems.lattice)?;
        let verification = verify_main_theorem(&systems.instance, &candidates);
        let op_identity = match (
            op_residual_subsystem(d, None),
            op_residual_subsystem(&systems.normal, None),
        ) {
            (Ok(a), Ok(b)) => systems_equal(&a, &b),
            _ => false,
        };
        Ok(CaseReport {
            name: self.name,
            oracle_equal: systems_equal(d, &oracle),
            saturated: d.is_saturated(),
            op_identity,
            verification,
        })
    }
}

/// `F_T(NT)`, with `N` normal in the ambient group of `lattice` and `T` a
/// subgroup of the lattice carrier.
pub fn oracle_product(lattice: &Arc<SubgroupLattice>, normal: &Subgroup, t: SubgroupId) -> Result<FusionSystem> {
    let group = lattice.group();
    if !normal.is_normal_in(group, &Subgroup::whole(group)) {
        return Err(Error::Precondition("N is not normal in G".into()));
    }
    let ts = lattice.get(t);
    let nt = normal.join(group, ts);
    if p_part(nt.order(), lattice.prime()) != ts.order() {
        return Err(Error::Internal(format!(
            "T of order {} is not Sylow in NT of order {}",
            ts.order(),
            nt.order()
        )));
    }
    FusionSystem::of_subgroup(lattice, &nt, t)
}

fn perm_group(degree: usize, gens: &[&[u32]]) -> Arc<FiniteGroup> {
    let gens: Vec<Vec<u32>> = gens.iter().map(|g| g.to_vec()).collect();
    Arc::new(FiniteGroup::from_permutations(degree, &gens, DEFAULT_ORDER_CAP).expect("catalog group"))
}

fn element(group: &FiniteGroup, perm: &[u32]) -> u32 {
    group.index_of_permutation(perm).expect("catalog element")
}

fn case(
    name: &'static str,
    description: &'static str,
    group: Arc<FiniteGroup>,
    normal: Subgroup,
    prime: u32,
    carrier: impl FnOnce(&Subgroup, &Subgroup) -> Subgroup,
) -> CatalogCase {
    let whole = Subgroup::whole(&group);
    let sylow = sylow_in(&group, &whole, prime);
    let carrier = carrier(&sylow, &normal);
    CatalogCase {
        name,
        description,
        group,
        normal,
        prime,
        sylow,
        carrier,
        expected: ExpectedFlags::ALL,
    }
}

fn whole_sylow(s: &Subgroup, _: &Subgroup) -> Subgroup {
    s.clone()
}

fn s4a4() -> CatalogCase {
    let g = perm_group(4, &[&[1, 2, 3, 0], &[1, 0, 2, 3]]);
    let n = p_residual_in(&g, &Subgroup::whole(&g), 2);
    case("s4a4", "S4 with A4, p = 2, T = S", g, n, 2, whole_sylow)
}

fn s4c2a4() -> CatalogCase {
    let g = perm_group(6, &[&[1, 2, 3, 0, 4, 5], &[1, 0, 2, 3, 4, 5], &[0, 1, 2, 3, 5, 4]]);
    let n = generate_subgroup(
        &g,
        &[element(&g, &[1, 2, 0, 3, 4, 5]), element(&g, &[1, 0, 3, 2, 4, 5])],
    );
    let z = element(&g, &[0, 1, 2, 3, 5, 4]);
    let gc = g.clone();
    case(
        "s4c2a4",
        "S4 x C2 with A4 x 1, p = 2, T = V4 x C2",
        g,
        n,
        2,
        move |s, n| {
            let s0 = s.intersection(n);
            let mut seed = s0.members().to_vec();
            seed.push(z);
            generate_subgroup(&gc, &seed)
        },
    )
}

fn gl23() -> CatalogCase {
    let g = Arc::new(
        build_linear_group(
            3,
            2,
            &[
                vec![vec![1, 1], vec![0, 1]],
                vec![vec![1, 0], vec![1, 1]],
                vec![vec![2, 0], vec![0, 1]],
            ],
            DEFAULT_ORDER_CAP,
        )
        .expect("GL(2,3)"),
    );
    let n = p_residual_in(&g, &Subgroup::whole(&g), 2);
    case("gl23", "GL(2,3) with SL(2,3), p = 2, T = S", g, n, 2, whole_sylow)
}

fn a4v4() -> CatalogCase {
    let g = perm_group(4, &[&[1, 2, 0, 3], &[1, 0, 3, 2]]);
    let n = p_core_in(&g, &Subgroup::whole(&g), 2);
    case("a4v4", "A4 with V4, p = 2, T = S = V4", g, n, 2, whole_sylow)
}

fn sl23q8() -> CatalogCase {
    let g = Arc::new(
        build_linear_group(
            3,
            2,
            &[vec![vec![1, 1], vec![0, 1]], vec![vec![1, 0], vec![1, 1]]],
            DEFAULT_ORDER_CAP,
        )
        .expect("SL(2,3)"),
    );
    let n = p_core_in(&g, &Subgroup::whole(&g), 2);
    case("sl23q8", "SL(2,3) with Q8, p = 2, T = S = Q8", g, n, 2, whole_sylow)
}

fn ex71() -> CatalogCase {
    let g = perm_group(
        6,
        &[
            &[1, 2, 0, 3, 4, 5],
            &[1, 0, 2, 3, 4, 5],
            &[0, 1, 2, 4, 5, 3],
            &[0, 1, 2, 4, 3, 5],
        ],
    );
    let n = sylow_in(&g, &Subgroup::whole(&g), 3);
    case("ex71", "S3 x S3 with its Sylow 3-subgroup, p = 3", g, n, 3, whole_sylow)
}

fn ex74() -> CatalogCase {
    let field = GaloisField::new(3).expect("GF(3)");
    let lambda = field.primitive_element();
    let space = build_vector_space_semidirect(
        3,
        &[1, 1],
        &[LinearSpec::Scalar {
            lambda,
            summands: vec![0],
        }],
        DEFAULT_ORDER_CAP,
    )
    .expect("vector space group");
    let g = space.group.clone();
    let n = p_residual_in(&g, &Subgroup::whole(&g), 3);
    case(
        "ex74",
        "GF(3)^2 with a scalar on U, N = O^3(G), p = 3",
        g,
        n,
        3,
        whole_sylow,
    )
}

fn ex75() -> CatalogCase {
    let fixture = examples::vector_group_7_5(3).expect("fixture group");
    let (space, n) = fixture;
    case(
        "ex75",
        "U + V + W over GF(3) with N = <S0, beta>, p = 3",
        space.group.clone(),
        n,
        3,
        whole_sylow,
    )
}

/// The standard cases in a fixed order.
pub fn standard_catalog() -> Vec<CatalogCase> {
    vec![s4a4(), s4c2a4(), gl23(), a4v4(), sl23q8(), ex71(), ex74(), ex75()]
}

pub fn case_by_name(name: &str) -> Option<CatalogCase> {
    standard_catalog().into_iter().find(|c| c.name == name)
}
