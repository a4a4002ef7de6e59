//! Shared builders and brute-force oracles for the integration tests.
//! The oracles work on raw permutation vectors and do not touch the
//! library's group code.

#![allow(dead_code)]

pub mod local_checks;

use std::collections::BTreeSet;
use std::sync::Arc;

use fusion_product::group::perm::parse_cycles;
use fusion_product::group::{generate_subgroup, FiniteGroup, Subgroup};

pub fn group(degree: usize, gens: &[&str]) -> Arc<FiniteGroup> {
    let perms: Vec<Vec<u32>> = gens.iter().map(|s| parse_cycles(s, degree).unwrap()).collect();
    Arc::new(FiniteGroup::from_permutations(degree, &perms, 100_000).unwrap())
}

pub fn el(g: &FiniteGroup, cycles: &str) -> u32 {
    g.index_of_permutation(&parse_cycles(cycles, g.degree()).unwrap())
        .unwrap_or_else(|| panic!("{cycles} is not in the group"))
}

pub fn sub(g: &FiniteGroup, gens: &[&str]) -> Subgroup {
    let seed: Vec<u32> = gens.iter().map(|s| el(g, s)).collect();
    generate_subgroup(g, &seed)
}

pub fn s4() -> Arc<FiniteGroup> {
    group(4, &["(1 2 3 4)", "(1 2)"])
}

pub fn a4() -> Arc<FiniteGroup> {
    group(4, &["(1 2 3)", "(1 2)(3 4)"])
}

/// The dihedral Sylow 2-subgroup of `S4` containing `(1 3)`.
pub fn d8(g: &FiniteGroup) -> Subgroup {
    sub(g, &["(1 2 3 4)", "(1 3)"])
}

pub fn v4(g: &FiniteGroup) -> Subgroup {
    sub(g, &["(1 2)(3 4)", "(1 3)(2 4)"])
}

// ---- raw permutation oracle ----

pub type Raw = Vec<usize>;

pub fn raw(cycles: &str, degree: usize) -> Raw {
    parse_cycles(cycles, degree)
        .unwrap()
        .into_iter()
        .map(|x| x as usize)
        .collect()
}

/// `x ↦ b(a(x))`.
pub fn raw_mul(a: &Raw, b: &Raw) -> Raw {
    a.iter().map(|&x| b[x]).collect()
}

pub fn raw_inv(a: &Raw) -> Raw {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

pub fn raw_conj(x: &Raw, g: &Raw) -> Raw {
    raw_mul(&raw_mul(&raw_inv(g), x), g)
}

pub fn raw_closure(gens: &[Raw], degree: usize) -> BTreeSet<Raw> {
    let id: Raw = (0..degree).collect();
    let mut set: BTreeSet<Raw> = [id.clone()].into_iter().collect();
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = raw_mul(&x, g);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}

pub fn raw_group(gens: &[&str], degree: usize) -> BTreeSet<Raw> {
    let gens: Vec<Raw> = gens.iter().map(|s| raw(s, degree)).collect();
    raw_closure(&gens, degree)
}

pub fn raw_normalizer(g: &BTreeSet<Raw>, h: &BTreeSet<Raw>) -> BTreeSet<Raw> {
    g.iter()
        .filter(|x| h.iter().all(|y| h.contains(&raw_conj(y, x))))
        .cloned()
        .collect()
}

pub fn raw_centralizer(g: &BTreeSet<Raw>, h: &BTreeSet<Raw>) -> BTreeSet<Raw> {
    g.iter()
        .filter(|x| h.iter().all(|y| raw_mul(x, y) == raw_mul(y, x)))
        .cloned()
        .collect()
}

/// `|Aut_G(H)| = |N_G(H)| / |C_G(H)|`.
pub fn raw_automizer_order(g: &BTreeSet<Raw>, h: &BTreeSet<Raw>) -> usize {
    raw_normalizer(g, h).len() / raw_centralizer(g, h).len()
}

// ---- automorphism oracle on element maps ----

/// Composition of maps on one subgroup with sorted `members`: apply `a`,
/// then `b`.
pub fn map_then(members: &[u32], a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter()
        .map(|y| b[members.binary_search(y).expect("map stays in the subgroup")])
        .collect()
}

pub fn map_order(members: &[u32], a: &[u32]) -> usize {
    let mut x = a.to_vec();
    let mut n = 1;
    while x != members {
        x = map_then(members, &x, a);
        n += 1;
    }
    n
}

pub fn map_closure(members: &[u32], gens: &[Vec<u32>]) -> BTreeSet<Vec<u32>> {
    let mut set: BTreeSet<Vec<u32>> = [members.to_vec()].into_iter().collect();
    let mut frontier = vec![members.to_vec()];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = map_then(members, &x, g);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}

/// `O^p` of a group of maps: the closure of its `p′`-elements.
pub fn map_op_residual(members: &[u32], maps: &BTreeSet<Vec<u32>>, p: usize) -> BTreeSet<Vec<u32>> {
    let gens: Vec<Vec<u32>> = maps
        .iter()
        .filter(|m| !map_order(members, m).is_multiple_of(p))
        .cloned()
        .collect();
    map_closure(members, &gens)
}

/// `Aut_M(P)` computed from products and inverses in the group.
pub fn conjugation_maps(g: &FiniteGroup, p: &Subgroup, m: &Subgroup) -> BTreeSet<Vec<u32>> {
    m.members()
        .iter()
        .map(|&x| {
            p.members()
                .iter()
                .map(|&y| g.mul(g.mul(g.inv(x), y), x))
                .collect::<Vec<u32>>()
        })
        .filter(|img| img.iter().all(|&y| p.contains(y)))
        .collect()
}
