//! Exact finite-group arithmetic over canonically indexed elements.
//!
//! A [`FiniteGroup`] is either the closure of a set of permutations or an
//! abstract group given by its Cayley table (quotients are built that way).
//! Element `0` is always the identity. Products use the right-action
//! convention throughout, so `x^g = g⁻¹xg` and morphisms are applied on the
//! right.

pub mod automorphism;
pub mod lattice;
pub mod linear;
pub mod morphism;
pub mod parse;
pub mod perm;
pub mod subgroup;

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};

pub use automorphism::AutomorphismGroup;
pub use lattice::{SubgroupId, SubgroupLattice};
pub use morphism::{conjugation_morphism, transport_automorphisms, Morphism};
pub use subgroup::{generate_subgroup, local_subgroup_data, sylow_and_cores, LocalData, Subgroup, SylowData};

/// Default cap on the order of a group built by closure.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// Groups up to this order get a precomputed Cayley table.
pub const TABLE_LIMIT: usize = 4096;

/// Reads the order cap from `FF_MAX_GROUP_ORDER`, falling back to the default.
pub fn order_cap_from_env() -> usize {
    std::env::var("FF_MAX_GROUP_ORDER")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORDER_CAP)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Multiplication {
    Table(Vec<u32>),
    /// Products computed on the fly from the stored permutations.
    Permutations(HashMap<Vec<u32>, u32>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    degree: usize,
    perms: Vec<Vec<u32>>,
    mult: Multiplication,
    inverse: Vec<u32>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Closure of the generators under composition. Elements are indexed in
    /// lexicographic order of their image vectors, so the identity is `0`.
    pub fn from_permutations(degree: usize, generators: &[Vec<u32>], cap: usize) -> Result<Self> {
        for g in generators {
            if g.len() != degree || !perm::is_bijection(g) {
                return Err(Error::InvalidPermutation(format!(
                    "generator {g:?} is not a bijection of {degree} points"
                )));
            }
        }
        let id = perm::identity(degree);
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = perm::compose(&x, g);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::SizeLimit { cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut perms: Vec<Vec<u32>> = seen.into_iter().collect();
        perms.sort();
        let order = perms.len();
        let index: HashMap<Vec<u32>, u32> = perms.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        let inverse = perms.iter().map(|p| index[&perm::invert(p)]).collect();
        let labels = perms.iter().map(|p| perm::format_cycles(p)).collect();
        let mult = if order <= TABLE_LIMIT {
            let mut table = Vec::with_capacity(order * order);
            for a in &perms {
                for b in &perms {
                    table.push(index[&perm::compose(a, b)]);
                }
            }
            Multiplication::Table(table)
        } else {
            Multiplication::Permutations(index)
        };
        Ok(Self {
            order,
            degree,
            perms,
            mult,
            inverse,
            labels,
        })
    }

    /// Builds an abstract group from a full Cayley table (`table[a * n + b] = ab`).
    /// Validates closure, identity at `0`, inverses and associativity.
    pub fn from_table(table: Vec<u32>, labels: Vec<String>) -> Result<Self> {
        let n = labels.len();
        if n == 0 || table.len() != n * n || n > TABLE_LIMIT {
            return Err(Error::Domain(format!(
                "Cayley table of length {} does not match {} labels",
                table.len(),
                n
            )));
        }
        if table.iter().any(|&x| x as usize >= n) {
            return Err(Error::Domain("Cayley table entry out of range".into()));
        }
        let mut inverse = vec![u32::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inverse[a] = b as u32;
                }
            }
        }
        let group = Self {
            order: n,
            degree: 0,
            perms: Vec::new(),
            mult: Multiplication::Table(table),
            inverse,
            labels,
        };
        group.verify_axioms()?;
        Ok(group)
    }

    pub fn trivial() -> Self {
        Self::from_permutations(1, &[], 1).expect("trivial group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of points for permutation groups, `0` for table groups.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order as u32
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.mult {
            Multiplication::Table(t) => t[a as usize * self.order + b as usize],
            Multiplication::Permutations(index) => {
                index[&perm::compose(&self.perms[a as usize], &self.perms[b as usize])]
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    /// `x^g = g⁻¹xg`.
    #[inline]
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `x⁻¹ y`, the commutator-style difference used for `[P, φ]`.
    #[inline]
    pub fn quotient_left(&self, x: u32, y: u32) -> u32 {
        self.mul(self.inv(x), y)
    }

    pub fn pow(&self, x: u32, k: i64) -> u32 {
        let base = if k < 0 { self.inv(x) } else { x };
        let mut acc = 0;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn element_order(&self, x: u32) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn label(&self, x: u32) -> &str {
        &self.labels[x as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Underlying permutation, if this is a permutation group.
    pub fn permutation(&self, x: u32) -> Option<&[u32]> {
        self.perms.get(x as usize).map(Vec::as_slice)
    }

    /// Index of a permutation that lies in the group.
    pub fn index_of_permutation(&self, p: &[u32]) -> Option<u32> {
        if self.perms.is_empty() {
            return None;
        }
        self.perms
            .binary_search_by(|q| q.as_slice().cmp(p))
            .ok()
            .map(|i| i as u32)
    }

    /// Exhaustive check of the group axioms on the index structure.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.order as u32;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::Domain(format!("0 is not an identity for {a}")));
            }
            let ai = self.inverse[a as usize];
            if ai >= n || self.mul(a, ai) != 0 || self.mul(ai, a) != 0 {
                return Err(Error::Domain(format!("element {a} has no inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::Domain(format!("associativity fails on ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn into_shared(self) -> Arc<Self> {
        Arc::new(self)
    }
}

/// The largest power of `p` dividing `n`.
pub fn p_part(n: usize, p: u32) -> usize {
    let p = p as usize;
    let mut m = n;
    let mut part = 1;
    while m.is_multiple_of(p) && m > 0 {
        m /= p;
        part *= p;
    }
    part
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub fn is_power_of(n: usize, p: u32) -> bool {
    n >= 1 && p_part(n, p) == n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(s: &str, n: usize) -> Vec<u32> {
        perm::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn dihedral_of_order_eight() {
        let g = FiniteGroup::from_permutations(4, &[cyc("(1 2 3 4)", 4), cyc("(1 3)", 4)], 100).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.label(0), "()");
        g.verify_axioms().unwrap();
    }

    #[test]
    fn alternating_of_order_twelve() {
        let g = FiniteGroup::from_permutations(4, &[cyc("(1 2 3)", 4), cyc("(1 2)(3 4)", 4)], 100).unwrap();
        assert_eq!(g.order(), 12);
    }

    #[test]
    fn trivial_group_from_no_generators() {
        let g = FiniteGroup::from_permutations(1, &[], 10).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(FiniteGroup::trivial().order(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let err = FiniteGroup::from_permutations(5, &[cyc("(1 2 3 4 5)", 5), cyc("(1 2)", 5)], 50).unwrap_err();
        assert_eq!(err, Error::SizeLimit { cap: 50 });
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(FiniteGroup::from_permutations(3, &[vec![0, 0, 1]], 10).is_err());
        assert!(FiniteGroup::from_permutations(3, &[vec![0, 1]], 10).is_err());
    }

    #[test]
    fn on_the_fly_products_agree_with_table() {
        // S_7 has order 5040 > TABLE_LIMIT.
        let g = FiniteGroup::from_permutations(7, &[cyc("(1 2 3 4 5 6 7)", 7), cyc("(1 2)", 7)], DEFAULT_ORDER_CAP)
            .unwrap();
        assert_eq!(g.order(), 5040);
        assert!(matches!(g.mult, Multiplication::Permutations(_)));
        for a in [1u32, 17, 400, 5039] {
            for b in [3u32, 99, 2500] {
                let expect = perm::compose(g.permutation(a).unwrap(), g.permutation(b).unwrap());
                assert_eq!(g.permutation(g.mul(a, b)).unwrap(), expect.as_slice());
            }
            assert_eq!(g.mul(a, g.inv(a)), 0);
        }
    }

    #[test]
    fn element_orders_divide_group_order() {
        let g = FiniteGroup::from_permutations(4, &[cyc("(1 2 3 4)", 4), cyc("(1 2)", 4)], 100).unwrap();
        for x in g.elements() {
            assert_eq!(g.order() % g.element_order(x), 0);
        }
    }

    #[test]
    fn table_groups_validate() {
        // Z/3 by addition.
        let table = vec![0, 1, 2, 1, 2, 0, 2, 0, 1];
        let g = FiniteGroup::from_table(table, vec!["0".into(), "1".into(), "2".into()]).unwrap();
        assert_eq!(g.inv(1), 2);
        let bad = vec![0, 1, 2, 1, 1, 0, 2, 0, 1];
        assert!(FiniteGroup::from_table(bad, vec!["a".into(), "b".into(), "c".into()]).is_err());
    }

    #[test]
    fn prime_helpers() {
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(p_part(108, 3), 27);
        assert!(is_prime(2) && is_prime(3) && !is_prime(9) && !is_prime(1));
        assert!(is_power_of(27, 3) && !is_power_of(12, 2) && is_power_of(1, 5));
    }
}
