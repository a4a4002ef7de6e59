//! Acceptance suite. Runs without the libtest harness and prints one
//! PASS/FAIL line per criterion; exits non-zero if any criterion fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use common::{d8, local_checks, s4};
use fusion_product::catalog::{
    fixture_example_7_1, fixture_example_7_4, fixture_example_7_5, oracle_product, standard_catalog, CaseSystems,
    CatalogCase,
};
use fusion_product::fusion::{generated_subsystem, systems_equal, FusionSystem, QuotientSystem};
use fusion_product::group::subgroup::p_residual_in;
use fusion_product::group::{AutomorphismGroup, Morphism, Subgroup, SubgroupLattice};
use fusion_product::product::{hyperfocal_subgroup, op_residual_subsystem, ProductInstance};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn built(case: &CatalogCase) -> Result<CaseSystems, String> {
    case.systems().map_err(|e| format!("{}: {e}", case.name))
}

fn within(name: &str, elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("{name}: took {elapsed:.2?}, limit {limit:?}")
    })
}

fn oracle_equivalence() -> Outcome {
    let mut slowest = Duration::ZERO;
    for case in standard_catalog() {
        let start = Instant::now();
        let sys = built(&case)?;
        let oracle = oracle_product(&sys.lattice, &case.normal, sys.carrier).map_err(|e| e.to_string())?;
        let d = sys.instance.product_subsystem();
        if let Some(diff) = d.first_difference(&oracle) {
            return Err(format!("{}: {diff:?}", case.name));
        }
        ensure(systems_equal(d, &oracle), || format!("{}: systems differ", case.name))?;
        let elapsed = start.elapsed();
        let limit = if case.name.starts_with("s4") { 10 } else { 60 };
        within(case.name, elapsed, Duration::from_secs(limit))?;
        slowest = slowest.max(elapsed);
    }
    Ok(format!("8 cases, slowest {slowest:.2?}"))
}

fn saturation() -> Outcome {
    for case in standard_catalog() {
        let sys = built(&case)?;
        let report = sys.instance.product_subsystem().saturation_report();
        ensure(report.saturated, || {
            format!("{}: {:?}", case.name, report.failures.first())
        })?;
    }
    Ok("8 cases".into())
}

fn op_identity() -> Outcome {
    for case in standard_catalog() {
        let sys = built(&case)?;
        let lhs = op_residual_subsystem(sys.instance.product_subsystem(), None).map_err(|e| e.to_string())?;
        let rhs = op_residual_subsystem(&sys.normal, None).map_err(|e| e.to_string())?;
        ensure(systems_equal(&lhs, &rhs), || format!("{}: O^p differ", case.name))?;
    }
    Ok("8 cases".into())
}

fn automizer_identities() -> Outcome {
    let (mut all, mut centric) = (0, 0);
    for case in standard_catalog() {
        let sys = built(&case)?;
        let l = &sys.lattice;
        let g = l.group();
        let inst = &sys.instance;
        let d = inst.product_subsystem();
        for p in l.subgroups_of(sys.carrier) {
            let circ = inst.a_circ(p).map_err(|e| e.to_string())?;
            let op_d = d.aut(p).p_residual(l.prime());
            ensure(op_d.is_subgroup_of(&circ), || {
                format!("{}: O^p(Aut_D({})) not in A°", case.name, l.label(p))
            })?;
            all += 1;
            if sys.normal.is_centric(inst.part(p)) {
                let op_n = AutomorphismGroup::induced_by(g, l.get(p), &case.normal).p_residual(l.prime());
                ensure(circ == op_d && circ == op_n, || {
                    format!("{}: A°({}) differs from a residual automizer", case.name, l.label(p))
                })?;
                centric += 1;
            }
        }
    }
    Ok(format!("{all} subgroups, {centric} with centric normal part"))
}

fn well_placed_existence() -> Outcome {
    let mut count = 0;
    for case in standard_catalog() {
        let sys = built(&case)?;
        let inst = &sys.instance;
        for q0 in sys.lattice.subgroups_of(inst.normal_carrier()) {
            let w = inst.find_well_placed(q0).map_err(|e| format!("{}: {e}", case.name))?;
            let recheck = inst.is_well_placed(w.target).map_err(|e| e.to_string())?;
            ensure(
                w.certificate.is_valid() && recheck.is_valid() && recheck == w.certificate,
                || format!("{}: certificate for {} rejected", case.name, sys.lattice.label(q0)),
            )?;
            ensure(inst.product_subsystem().contains_morphism(&w.morphism), || {
                format!("{}: witness morphism not in the product", case.name)
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} subgroups"))
}

fn example_7_4() -> Outcome {
    let start = Instant::now();
    let ex = fixture_example_7_4(3).map_err(|e| e.to_string())?;
    ensure(!systems_equal(&ex.f, &ex.g), || "F = G".into())?;
    let op_f = op_residual_subsystem(&ex.f, None).map_err(|e| e.to_string())?;
    let op_g = ex.op_g().map_err(|e| e.to_string())?;
    ensure(systems_equal(&op_f, &op_g), || "O^p(F) != O^p(G)".into())?;
    let (in_f, in_g) = ex.products().map_err(|e| e.to_string())?;
    ensure(!systems_equal(&in_f, &in_g), || "products coincide".into())?;
    let elapsed = start.elapsed();
    within("7.4", elapsed, Duration::from_secs(5))?;
    Ok(format!("q = 3 in {elapsed:.2?}"))
}

fn example_7_5() -> Outcome {
    let start = Instant::now();
    let ex = fixture_example_7_5(3).map_err(|e| e.to_string())?;
    ensure(ex.lattice.len() == 28, || format!("{} subgroups", ex.lattice.len()))?;
    ensure(ex.alpha_in_a_circ().map_err(|e| e.to_string())?, || {
        "alpha not in A°(P)".into()
    })?;
    let aut = ex.product_automizer();
    ensure(aut.order() == 1, || format!("|Aut_D(P)| = {}", aut.order()))?;
    ensure(!ex.a_circ_in_product().map_err(|e| e.to_string())?, || {
        "A°(P) inside Aut_D(P)".into()
    })?;
    let elapsed = start.elapsed();
    within("7.5", elapsed, Duration::from_secs(120))?;
    Ok(format!("q = 3 in {elapsed:.2?}"))
}

fn quotients() -> Outcome {
    let mut images = 0;
    for case in standard_catalog() {
        let sys = built(&case)?;
        let (l, f, f0) = (&sys.lattice, &sys.ambient, &sys.normal);
        let err = |e: fusion_product::Error| format!("{}: {e}", case.name);
        let by_s0 = QuotientSystem::new(f, f0.carrier()).map_err(err)?;
        let lhs = by_s0.image(sys.instance.product_subsystem()).map_err(err)?;
        let rhs = by_s0.image(&FusionSystem::inner(l, sys.carrier)).map_err(err)?;
        ensure(systems_equal(&lhs, &rhs), || format!("{}: (F0T)/F0 differs", case.name))?;
        for r in [f0.carrier(), sys.carrier] {
            if !f.is_strongly_closed(r).map_err(err)? {
                continue;
            }
            let by_r = QuotientSystem::new(f, r).map_err(err)?;
            let f0r = sys.instance.for_subgroup(r).map_err(err)?;
            let lhs = by_r.image(f0r.product_subsystem()).map_err(err)?;
            let rhs = by_r.image(f0).map_err(err)?;
            ensure(systems_equal(&lhs, &rhs), || {
                format!("{}: F0R/R differs for R = {}", case.name, l.label(r))
            })?;
            images += 1;
        }
    }
    let ex = fixture_example_7_1().map_err(|e| e.to_string())?;
    let q = ex.quotient().map_err(|e| e.to_string())?;
    ensure(q.quotient_group().order() == 1, || "7.1 quotient is not trivial".into())?;
    ensure(ex.product_equals_normal(), || "7.1: F0T != F0".into())?;
    ensure(ex.normal_is_proper(), || "7.1: F0 not proper in F".into())?;
    Ok(format!("8 cases, {images} strongly closed R, 7.1 trivial quotient"))
}

fn hyperfocal_cross_check() -> Outcome {
    for case in standard_catalog() {
        let sys = built(&case)?;
        let (l, f) = (&sys.lattice, &sys.ambient);
        let g = l.group();
        let err = |e: fusion_product::Error| format!("{}: {e}", case.name);
        let opg = p_residual_in(g, &Subgroup::whole(g), l.prime());
        let s_cap = l
            .id_of(&l.get(l.carrier()).intersection(&opg))
            .expect("S ∩ O^p(G) is in the lattice");
        let group_side = FusionSystem::of_subgroup(l, &opg, s_cap).map_err(err)?;
        let op_f = Arc::new(op_residual_subsystem(f, None).map_err(err)?);
        ensure(systems_equal(&op_f, &group_side), || {
            format!("{}: O^p(F_S(G)) differs", case.name)
        })?;
        let hyp = hyperfocal_subgroup(f).map_err(err)?;
        for t in [l.join(hyp, l.center(l.carrier())), l.carrier()] {
            let f_t = op_residual_subsystem(f, Some(t)).map_err(err)?;
            let product = ProductInstance::new(f.clone(), op_f.clone(), t).map_err(err)?;
            ensure(systems_equal(&f_t, product.product_subsystem()), || {
                format!("{}: F_T != O^p(F)T for T = {}", case.name, l.label(t))
            })?;
        }
    }
    Ok("8 cases, two carriers each".into())
}

fn local_check_suite() -> Outcome {
    let checks: [(&str, fn()); 12] = [
        (
            "conjugation and transport",
            local_checks::conjugation_commutes_with_transport_along_extensions,
        ),
        (
            "extension control",
            local_checks::extension_control_subgroup_restricts_to_subsystems,
        ),
        (
            "commutators",
            local_checks::commutators_with_centralized_elements_centralize_the_image,
        ),
        (
            "centric conjugates",
            local_checks::ambient_conjugates_of_normal_centric_subgroups_stay_centric,
        ),
        (
            "full normalization",
            local_checks::ambient_maps_on_normalizers_preserve_full_normalization,
        ),
        (
            "normal full normalization",
            local_checks::fully_normalized_in_ambient_implies_fully_normalized_in_normal,
        ),
        (
            "factorization",
            local_checks::product_maps_into_the_normal_carrier_factor_through_conjugation,
        ),
        (
            "extension",
            local_checks::product_maps_extend_to_the_normal_part_of_their_control_subgroup,
        ),
        (
            "well-placed automizers",
            local_checks::well_placed_automizers_factor_as_carrier_times_normal,
        ),
        (
            "residual automizers",
            local_checks::residual_automizers_agree_on_the_normal_carrier,
        ),
        (
            "residual in A°",
            local_checks::residual_product_automizers_lie_in_a_circ,
        ),
        (
            "well-placed conjugates",
            local_checks::every_subgroup_of_the_normal_carrier_has_a_well_placed_conjugate,
        ),
    ];
    for (name, check) in checks {
        panic::catch_unwind(check).map_err(|_| format!("{name} failed"))?;
    }
    Ok(format!(
        "{} properties on {}",
        checks.len(),
        local_checks::CASES.join(", ")
    ))
}

fn negative_controls() -> Outcome {
    let g = common::group(4, &["(1 2)", "(3 4)"]);
    let lattice = Arc::new(SubgroupLattice::new(g.clone(), &Subgroup::whole(&g), 2).map_err(|e| e.to_string())?);
    let a = common::sub(&g, &["(1 2)"]);
    let b = common::sub(&g, &["(3 4)"]);
    let phi = Morphism::new(&g, a, b, vec![0, common::el(&g, "(3 4)")]).map_err(|e| e.to_string())?;
    let f = generated_subsystem(&lattice, lattice.carrier(), &[phi]).map_err(|e| e.to_string())?;
    let report = f.saturation_report();
    ensure(!report.saturated, || "C2 x C2 fixture reported saturated".into())?;
    let witness = report.failures.iter().find_map(|c| c.witness.clone());
    ensure(witness.is_some(), || "no receptivity witness".into())?;

    let s4 = s4();
    let f = FusionSystem::of_group(s4.clone(), &d8(&s4), 2).map_err(|e| e.to_string())?;
    let z = f.lattice().center(f.carrier());
    ensure(f.lattice().order(z) == 2, || "Z(S) has wrong order".into())?;
    ensure(!f.is_strongly_closed(z).map_err(|e| e.to_string())?, || {
        "Z(S) strongly closed".into()
    })?;
    let w = witness.unwrap();
    Ok(format!(
        "receptivity fails at {} -> {}; Z(S) not strongly closed",
        lattice.label(w.source),
        lattice.label(w.target)
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("oracle equivalence", oracle_equivalence),
        ("saturation", saturation),
        ("O^p identity", op_identity),
        ("automizer identities", automizer_identities),
        ("well-placed existence", well_placed_existence),
        ("example 7.4", example_7_4),
        ("example 7.5", example_7_5),
        ("quotients", quotients),
        ("hyperfocal cross-check", hyperfocal_cross_check),
        ("local check suite", local_check_suite),
        ("negative controls", negative_controls),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
