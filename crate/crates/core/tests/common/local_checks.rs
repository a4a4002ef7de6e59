//! Exhaustive checks of local properties of products on small catalog
//! cases. Each check panics on a counterexample and counts the instances it
//! examined so that none passes vacuously.

use std::collections::BTreeSet;

use fusion_product::catalog::{case_by_name, CaseSystems};
use fusion_product::fusion::FusionSystem;
use fusion_product::group::{FiniteGroup, Subgroup, SubgroupId, SubgroupLattice};

pub const CASES: [&str; 4] = ["s4a4", "a4v4", "s4c2a4", "gl23"];

fn systems(name: &str) -> CaseSystems {
    case_by_name(name).unwrap().systems().unwrap()
}

fn apply(dom: &Subgroup, map: &[u32], x: u32) -> u32 {
    map[dom.position(x).expect("element of the domain")]
}

fn image_id(lattice: &SubgroupLattice, map: &[u32]) -> SubgroupId {
    let mut m = map.to_vec();
    m.sort_unstable();
    lattice.id_of_members(&m).unwrap()
}

fn conj_map(g: &FiniteGroup, dom: &Subgroup, t: u32) -> Vec<u32> {
    dom.members().iter().map(|&x| g.conj(x, t)).collect()
}

/// `φ⁻¹ a φ` on `Pφ` for `a ∈ Aut(P)` and an injective `φ` on `P`.
fn transport(p: &Subgroup, phi: &[u32], q: &Subgroup, a: &[u32]) -> Vec<u32> {
    q.members()
        .iter()
        .map(|&y| {
            let x = p.members()[phi.iter().position(|&v| v == y).unwrap()];
            apply(p, phi, apply(p, a, x))
        })
        .collect()
}

/// `Aut_X(P)` for `X` normalizing `P`.
fn automizer(g: &FiniteGroup, p: &Subgroup, x: &Subgroup) -> BTreeSet<Vec<u32>> {
    x.members()
        .iter()
        .filter(|&&t| p.members().iter().all(|&y| p.contains(g.conj(y, t))))
        .map(|&t| conj_map(g, p, t))
        .collect()
}

/// `N_φ` over the carrier `r` from its definition.
fn n_phi(lattice: &SubgroupLattice, r: SubgroupId, p: SubgroupId, phi: &[u32]) -> BTreeSet<u32> {
    let g = lattice.group();
    let (ps, rs) = (lattice.get(p), lattice.get(r));
    let q = lattice.get(image_id(lattice, phi));
    let aut_r_q = automizer(g, q, rs);
    rs.members()
        .iter()
        .copied()
        .filter(|&t| ps.members().iter().all(|&y| ps.contains(g.conj(y, t))))
        .filter(|&t| aut_r_q.contains(&transport(ps, phi, q, &conj_map(g, ps, t))))
        .collect()
}

/// All `(P, Q, φ)` with `φ ∈ Hom(P, Q)` for subgroups `Q` of the carrier.
fn homs(f: &FusionSystem) -> Vec<(SubgroupId, Vec<u32>)> {
    f.iso_table()
        .iter()
        .flat_map(|(&(p, _), set)| set.iter().map(move |m| (p, m.clone())))
        .collect()
}

pub fn conjugation_commutes_with_transport_along_extensions() {
    let mut checked = 0;
    for name in CASES {
        let sys = systems(name);
        let (l, f) = (&sys.lattice, &sys.ambient);
        let g = l.group();
        for (x, psi) in homs(f) {
            let xs = l.get(x);
            for p in l.subgroups_of(x) {
                let ps = l.get(p);
                if !ps.is_normal_in(g, xs) {
                    continue;
                }
                let phi: Vec<u32> = ps.members().iter().map(|&y| apply(xs, &psi, y)).collect();
                let q = l.get(image_id(l, &phi));
                let nphi = n_phi(l, f.carrier(), p, &phi);
                for &t in xs.members() {
                    let lhs = transport(ps, &phi, q, &conj_map(g, ps, t));
                    assert_eq!(lhs, conj_map(g, q, apply(xs, &psi, t)), "{name}");
                    assert!(nphi.contains(&t));
                }
                let x_image = l.get(image_id(l, &psi));
                let moved: BTreeSet<Vec<u32>> =
                    automizer(g, ps, xs).iter().map(|a| transport(ps, &phi, q, a)).collect();
                assert_eq!(moved, automizer(g, q, x_image));
                checked += 1;
            }
        }
    }
    assert!(checked > 100, "{checked}");
}

pub fn extension_control_subgroup_restricts_to_subsystems() {
    let mut checked = 0;
    for name in CASES {
        let sys = systems(name);
        let l = &sys.lattice;
        let g = l.group();
        let d = sys.instance.product_subsystem().clone();
        for e in [sys.normal.as_ref(), d.as_ref()] {
            let r = e.carrier();
            for (p, phi) in homs(e) {
                let q = image_id(l, &phi);
                if !e.is_fully_automized(q) {
                    continue;
                }
                let in_e = n_phi(l, r, p, &phi);
                let in_f: BTreeSet<u32> = n_phi(l, sys.ambient.carrier(), p, &phi)
                    .into_iter()
                    .filter(|&t| l.get(r).contains(t))
                    .collect();
                assert_eq!(in_e, in_f, "{name}");
                let (ps, qs) = (l.get(p), l.get(q));
                let aut_r_q = automizer(g, qs, l.get(r));
                for &t in &in_f {
                    assert!(aut_r_q.contains(&transport(ps, &phi, qs, &conj_map(g, ps, t))));
                }
                assert_eq!(
                    e.n_phi_of_map(p, q, &phi),
                    l.id_of_members(&in_e.iter().copied().collect::<Vec<_>>()).unwrap()
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 50, "{checked}");
}

pub fn commutators_with_centralized_elements_centralize_the_image() {
    let mut checked = 0;
    for name in CASES {
        let sys = systems(name);
        let (l, f) = (&sys.lattice, &sys.ambient);
        let g = l.group();
        let s = l.get(f.carrier());
        for &p in f.objects() {
            let ps = l.get(p);
            let auts: Vec<Vec<u32>> = f.isos(p, p).cloned().collect();
            let betas: Vec<Vec<u32>> = f.isos_from(p).flat_map(|(_, set)| set.iter().cloned()).collect();
            for qid in l.subgroups_of(p) {
                let qs = l.get(qid);
                if !qs.is_normal_in(g, ps) {
                    continue;
                }
                for gamma in &auts {
                    let fixed: Vec<u32> = ps
                        .members()
                        .iter()
                        .copied()
                        .filter(|&x| apply(ps, gamma, x) == x)
                        .collect();
                    for beta in &betas {
                        if qs.members().iter().any(|&x| apply(ps, beta, x) != apply(ps, gamma, x)) {
                            continue;
                        }
                        let q_beta: Vec<u32> = qs.members().iter().map(|&x| apply(ps, beta, x)).collect();
                        for &x in &fixed {
                            let c = g.mul(g.inv(x), apply(ps, beta, x));
                            assert!(s.contains(c));
                            assert!(q_beta.iter().all(|&y| g.mul(c, y) == g.mul(y, c)), "{name}");
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 100, "{checked}");
}

pub fn ambient_conjugates_of_normal_centric_subgroups_stay_centric() {
    let mut checked = 0;
    for name in CASES {
        let sys = systems(name);
        let (l, f, f0) = (&sys.lattice, &sys.ambient, &sys.normal);
        for p0 in l.subgroups_of(f0.carrier()) {
            if !f0.is_centric(p0) {
                continue;
            }
            for &r in f.conjugacy_class(p0) {
                assert!(l.is_le(r, f0.carrier()));
                assert!(f0.is_centric(r), "{name}");
                checked += 1;
            }
        }
    }
    assert!(checked > 5, "{checked}");
}

pub fn ambient_maps_on_normalizers_preserve_full_normalization() {
    let mut checked = 0;
    for name in CASES {
        let sys = systems(name);
        let (l, f, f0) = (&sys.lattice, &sys.ambient, &sys.normal);
        let s0 = f0.carrier();
        for p0 in l.subgroups_of(s0) {
            if !f0.is_fully_normalized(p0) {
                continue;
            }
            let n = l.normalizer(s0, p0);
            let (ns, ps) = (l.get(n), l.get(p0));
            for (r, set) in f.isos_from(n) {
                if !l.is_le(r, s0) {
                    continue;
                }
                for alpha in set {
                    let image: Vec<u32> = ps.members().iter().map(|&x| apply(ns, alpha, x)).collect();
                    let q = image_id(l, &image);
                    assert!(f0.is_fully_normalized(q), "{name}");
                    assert_eq!(r, l.normalizer(s0, q), "{name}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 20, "{checked}");
}

pub fn fully_normalized_in_ambient_implies_fully_normalized_in_normal() {
    let mut checked = 0;
    for name in CASES {
        let sys = systems(name);
        let (l, f, f0) = (&sys.lattice, &sys.ambient, &sys.normal);
        for q0 in l.subgroups_of(f0.carrier()) {
            if f.is_fully_normalized(q0) {
                assert!(f0.is_fully_normalized(q0), "{name}");
                checked += 1;
            }
        }
    }
    assert!(checked > 10, "{checked}");
}

pub fn product_maps_into_the_normal_carrier_factor_through_conjugation() {
    let mut checked = 0;
    for name in CASES {
        let sys = systems(name);
        let (l, f, f0) = (&sys.lattice, &sys.ambient, &sys.normal);
        let g = l.group();
        let d = sys.instance.product_subsystem();
        let s0 = f0.carrier();
        let t = l.get(sys.carrier);
        for p in l.subgroups_of(s0) {
            let ps = l.get(p);
            for (_, set) in d.isos_from(p) {
                for alpha in set {
                    let n_alpha = n_phi(l, f.carrier(), p, alpha);
                    let mut found = false;
                    for &x in t.members() {
                        let pt = l.conjugate(p, x).unwrap();
                        let pts = l.get(pt);
                        // α0 on P^t with x^t ↦ α(x)
                        let alpha0: Vec<u32> = pts
                            .members()
                            .iter()
                            .map(|&y| apply(ps, alpha, g.conj(y, g.inv(x))))
                            .collect();
                        if !f0.contains_map(pt, &alpha0) {
                            continue;
                        }
                        found = true;
                        let n0 = n_phi(l, f.carrier(), pt, &alpha0);
                        assert!(n_alpha.iter().all(|&y| n0.contains(&g.conj(y, x))), "{name}");
                    }
                    assert!(found, "{name}: no factorization");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 30, "{checked}");
}

pub fn product_maps_extend_to_the_normal_part_of_their_control_subgroup() {
    let mut checked = 0;
    for name in CASES {
        let sys = systems(name);
        let (l, f, f0) = (&sys.lattice, &sys.ambient, &sys.normal);
        let d = sys.instance.product_subsystem();
        let s0 = f0.carrier();
        for p0 in l.subgroups_of(s0) {
            for (q, set) in d.isos_from(p0) {
                if !f0.is_fully_normalized(q) {
                    continue;
                }
                for phi in set {
                    let n = l.intersection(f.n_phi_of_map(p0, q, phi), s0);
                    let ext = d.find_extension(p0, phi, n);
                    let (r, psi) = ext.unwrap_or_else(|| panic!("{name}: no extension"));
                    assert!(l.is_le(r, s0));
                    assert!(d.contains_map(n, &psi));
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 20, "{checked}");
}

pub fn well_placed_automizers_factor_as_carrier_times_normal() {
    let mut checked = 0;
    for name in CASES {
        let sys = systems(name);
        let (l, f0) = (&sys.lattice, &sys.normal);
        let inst = &sys.instance;
        let d = inst.product_subsystem();
        for p0 in l.subgroups_of(f0.carrier()) {
            if !inst.is_well_placed(p0).unwrap().is_valid() {
                continue;
            }
            let product = inst.aut_carrier(p0).product_set(&f0.aut(p0));
            assert_eq!(&product, d.aut(p0).elements(), "{name}");
            checked += 1;
        }
    }
    assert!(checked > 10, "{checked}");
}

pub fn residual_automizers_agree_on_the_normal_carrier() {
    let mut checked = 0;
    for name in CASES {
        let sys = systems(name);
        let (l, f0) = (&sys.lattice, &sys.normal);
        let d = sys.instance.product_subsystem();
        let p = sys.lattice.prime();
        for p0 in l.subgroups_of(f0.carrier()) {
            assert_eq!(d.aut(p0).p_residual(p), f0.aut(p0).p_residual(p), "{name}");
            checked += 1;
        }
    }
    assert!(checked > 10, "{checked}");
}

pub fn residual_product_automizers_lie_in_a_circ() {
    let mut checked = 0;
    let mut equalities = 0;
    for name in CASES {
        let sys = systems(name);
        let l = &sys.lattice;
        let inst = &sys.instance;
        let d = inst.product_subsystem();
        for p in l.subgroups_of(sys.carrier) {
            let op = d.aut(p).p_residual(l.prime());
            let circ = inst.a_circ(p).unwrap();
            assert!(op.is_subgroup_of(&circ), "{name}");
            if sys.normal.is_centric(inst.part(p)) {
                assert_eq!(op, circ, "{name}");
                equalities += 1;
            }
            checked += 1;
        }
    }
    assert!(checked > 40 && equalities > 10, "{checked} {equalities}");
}

pub fn every_subgroup_of_the_normal_carrier_has_a_well_placed_conjugate() {
    for name in CASES {
        let sys = systems(name);
        let inst = &sys.instance;
        let d = inst.product_subsystem();
        for q0 in sys.lattice.subgroups_of(inst.normal_carrier()) {
            let w = inst.find_well_placed(q0).unwrap();
            assert!(inst.is_well_placed(w.target).unwrap().is_valid(), "{name}");
            assert!(d.conjugacy_class(q0).contains(&w.target));
            assert!(d.contains_morphism(&w.morphism));
        }
    }
}
