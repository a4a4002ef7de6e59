//! Injective homomorphisms between subgroups, stored as total element maps.
//!
//! A map is a vector of images aligned with the sorted member list of its
//! domain. Composition is written left to right: `a.then(b)` applies `a`
//! first.

use super::{AutomorphismGroup, FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// Image vector aligned with the members of some domain subgroup.
pub type ElementMap = Vec<u32>;

/// `x ↦ b(a(x))` where `a` is defined on any domain and `b` on `b_domain`.
pub fn compose_maps(a: &[u32], b_domain: &Subgroup, b: &[u32]) -> ElementMap {
    a.iter()
        .map(|&x| b[b_domain.position(x).expect("composable maps")])
        .collect()
}

/// Inverse of a bijection `a: domain → image`, aligned with `image`.
pub fn invert_map(a: &[u32], domain: &Subgroup, image: &Subgroup) -> ElementMap {
    let mut inv = vec![0; a.len()];
    for (i, &y) in a.iter().enumerate() {
        inv[image.position(y).expect("map onto image")] = domain.members()[i];
    }
    inv
}

pub fn restrict_map(a: &[u32], domain: &Subgroup, sub: &Subgroup) -> ElementMap {
    sub.members()
        .iter()
        .map(|&x| a[domain.position(x).expect("restriction to a subgroup")])
        .collect()
}

pub fn image_of_map(group_order: usize, a: &[u32]) -> Subgroup {
    let mut members = a.to_vec();
    members.sort_unstable();
    Subgroup::from_sorted(group_order, members)
}

pub fn identity_map(domain: &Subgroup) -> ElementMap {
    domain.members().to_vec()
}

/// `c_g|_P : x ↦ g⁻¹xg`.
pub fn conjugation_map(group: &FiniteGroup, domain: &Subgroup, g: u32) -> ElementMap {
    domain.members().iter().map(|&x| group.conj(x, g)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    domain: Subgroup,
    codomain: Subgroup,
    images: ElementMap,
}

impl Morphism {
    /// Validates injectivity, the homomorphism property and that every image
    /// lies in the codomain.
    pub fn new(group: &FiniteGroup, domain: Subgroup, codomain: Subgroup, images: ElementMap) -> Result<Self> {
        if images.len() != domain.order() {
            return Err(Error::Domain("image vector has the wrong length".into()));
        }
        if images.iter().any(|&y| !codomain.contains(y)) {
            return Err(Error::Domain("image leaves the codomain".into()));
        }
        let mut sorted = images.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != images.len() {
            return Err(Error::Domain("map is not injective".into()));
        }
        let m = Self {
            domain,
            codomain,
            images,
        };
        for &x in m.domain.members() {
            for &y in m.domain.members() {
                let lhs = m.apply(group.mul(x, y));
                let rhs = group.mul(m.apply(x), m.apply(y));
                if lhs != rhs {
                    return Err(Error::Domain("map is not a homomorphism".into()));
                }
            }
        }
        Ok(m)
    }

    pub(crate) fn from_parts(domain: Subgroup, codomain: Subgroup, images: ElementMap) -> Self {
        debug_assert_eq!(domain.order(), images.len());
        Self {
            domain,
            codomain,
            images,
        }
    }

    pub fn identity(p: &Subgroup) -> Self {
        Self::from_parts(p.clone(), p.clone(), identity_map(p))
    }

    pub fn inclusion(p: &Subgroup, q: &Subgroup) -> Result<Self> {
        if !p.is_subgroup_of(q) {
            return Err(Error::Domain("inclusion requires P ≤ Q".into()));
        }
        Ok(Self::from_parts(p.clone(), q.clone(), identity_map(p)))
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn codomain(&self) -> &Subgroup {
        &self.codomain
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of `x`; panics if `x` is outside the domain.
    pub fn apply(&self, x: u32) -> u32 {
        self.images[self.domain.position(x).expect("element in domain")]
    }

    pub fn try_apply(&self, x: u32) -> Option<u32> {
        self.domain.position(x).map(|i| self.images[i])
    }

    pub fn image(&self) -> Subgroup {
        image_of_map(self.codomain.group_order(), &self.images)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.domain.order() == self.codomain.order()
    }

    /// `self` followed by `next`; requires the image of `self` to lie in the
    /// domain of `next`.
    pub fn then(&self, next: &Morphism) -> Result<Morphism> {
        if self.images.iter().any(|&y| !next.domain.contains(y)) {
            return Err(Error::Domain(
                "composition undefined: image not inside the next domain".into(),
            ));
        }
        Ok(Self::from_parts(
            self.domain.clone(),
            next.codomain.clone(),
            compose_maps(&self.images, &next.domain, &next.images),
        ))
    }

    pub fn inverse(&self) -> Result<Morphism> {
        if !self.is_isomorphism() {
            return Err(Error::Domain("only isomorphisms can be inverted".into()));
        }
        Ok(Self::from_parts(
            self.codomain.clone(),
            self.domain.clone(),
            invert_map(&self.images, &self.domain, &self.codomain),
        ))
    }

    pub fn restrict(&self, sub: &Subgroup) -> Result<Morphism> {
        if !sub.is_subgroup_of(&self.domain) {
            return Err(Error::Domain("restriction to a non-subgroup of the domain".into()));
        }
        Ok(Self::from_parts(
            sub.clone(),
            self.codomain.clone(),
            restrict_map(&self.images, &self.domain, sub),
        ))
    }

    /// The same element map with its codomain replaced; the new codomain
    /// must contain the image.
    pub fn with_codomain(&self, codomain: &Subgroup) -> Result<Morphism> {
        if self.images.iter().any(|&y| !codomain.contains(y)) {
            return Err(Error::Domain("new codomain does not contain the image".into()));
        }
        Ok(Self::from_parts(
            self.domain.clone(),
            codomain.clone(),
            self.images.clone(),
        ))
    }

    /// Corestriction onto the image.
    pub fn onto_image(&self) -> Morphism {
        let image = self.image();
        Self::from_parts(self.domain.clone(), image, self.images.clone())
    }

    pub fn format(&self, group: &FiniteGroup) -> String {
        let pairs: Vec<String> = self
            .domain
            .canonical_generators(group)
            .into_iter()
            .map(|x| format!("{} -> {}", group.label(x), group.label(self.apply(x))))
            .collect();
        format!("[{}]", pairs.join(", "))
    }
}

/// `c_g|_P : P → Q`, defined when `P^g ≤ Q`.
pub fn conjugation_morphism(group: &FiniteGroup, g: u32, p: &Subgroup, q: &Subgroup) -> Result<Morphism> {
    let images = conjugation_map(group, p, g);
    if images.iter().any(|&y| !q.contains(y)) {
        return Err(Error::Domain(format!(
            "conjugate of P by {} is not contained in Q",
            group.label(g)
        )));
    }
    Ok(Morphism::from_parts(p.clone(), q.clone(), images))
}

/// `A φ* = {φ⁻¹ a φ : a ∈ A}` for an isomorphism `φ: P → Q`.
pub fn transport_automorphisms(phi: &Morphism, a: &AutomorphismGroup) -> Result<AutomorphismGroup> {
    if phi.image() != *phi.codomain() {
        return Err(Error::Domain("transport requires an isomorphism onto Q".into()));
    }
    if a.base() != phi.domain() {
        return Err(Error::Domain("automorphisms must act on the domain of φ".into()));
    }
    let p = phi.domain();
    let q = phi.codomain();
    let phi_inv = invert_map(phi.images(), p, q);
    let elements = a
        .iter()
        .map(|alpha| compose_maps(&compose_maps(&phi_inv, p, alpha), p, phi.images()));
    Ok(AutomorphismGroup::from_elements_unchecked(q.clone(), elements))
}
