//! Exhaustive verification of the properties of `D = F₀T`.

use std::time::{Duration, Instant};

use super::residual::op_residual_subsystem;
use super::ProductInstance;
use crate::fusion::{systems_equal, FusionSystem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    /// Description of the first counterexample.
    pub witness: Option<String>,
}

impl CheckOutcome {
    fn new(name: &'static str, witness: Option<String>) -> Self {
        Self {
            name,
            passed: witness.is_none(),
            witness,
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub carrier: String,
    pub carrier_order: usize,
    pub normal_carrier: String,
    pub morphism_count: usize,
    pub checks: Vec<CheckOutcome>,
    /// Candidates that met the hypotheses of the uniqueness check.
    pub candidates_applicable: usize,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Runs the checks
///
/// * `containment`: `F₀ ⊆ D ⊆ F`;
/// * `saturated`: `D` is saturated;
/// * `op_identity`: `O^p(D) = O^p(F₀)`;
/// * `acirc_centric`: `A°(P) = O^p(Aut_D(P))` whenever `P₀ ∈ F₀^c`;
/// * `op_aut_in_acirc`: `O^p(Aut_D(P)) ≤ A°(P)` for all `P ≤ T`;
/// * `uniqueness`: every candidate that is a saturated subsystem of `F` on
///   `T` with `O^p(E) = O^p(F₀)` equals `D`.
pub fn verify_main_theorem(inst: &ProductInstance, candidates: &[FusionSystem]) -> VerificationReport {
    let start = Instant::now();
    let d = inst.product_subsystem();
    let lattice = inst.lattice();
    let prime = inst.prime();
    let mut checks = Vec::new();

    let containment = if !inst.normal().is_subsystem_of(d) {
        Some("F0 is not contained in D".to_string())
    } else if !d.is_subsystem_of(inst.ambient()) {
        Some("D is not contained in F".to_string())
    } else {
        None
    };
    checks.push(CheckOutcome::new("containment", containment));

    let saturation = d.saturation_report();
    let witness = saturation.failures.first().map(|f| {
        let class: Vec<String> = f.class.iter().map(|&c| lattice.label(c)).collect();
        format!("class [{}] has no fully automized receptive member", class.join(", "))
    });
    checks.push(CheckOutcome::new("saturated", witness));

    let normal_residual = op_residual_subsystem(inst.normal(), None);
    let witness = match (op_residual_subsystem(d, None), &normal_residual) {
        (Ok(a), Ok(b)) => a.first_difference(b).map(|diff| diff.to_string()),
        (Err(e), _) => Some(format!("O^p(D) unavailable: {e}")),
        (_, Err(e)) => Some(format!("O^p(F0) unavailable: {e}")),
    };
    checks.push(CheckOutcome::new("op_identity", witness));

    let mut centric_witness = None;
    let mut containment_witness = None;
    for p in lattice.subgroups_of(inst.carrier()) {
        let circ = inst.a_circ(p).expect("P lies in T");
        let op = d.aut(p).p_residual(prime);
        if centric_witness.is_none() && inst.normal().is_centric(inst.part(p)) && circ != op {
            centric_witness = Some(format!(
                "P = {}: |A°(P)| = {}, |O^p(Aut_D(P))| = {}",
                lattice.label(p),
                circ.order(),
                op.order()
            ));
        }
        if containment_witness.is_none() && !op.is_subgroup_of(&circ) {
            containment_witness = Some(format!("P = {}", lattice.label(p)));
        }
    }
    checks.push(CheckOutcome::new("acirc_centric", centric_witness));
    checks.push(CheckOutcome::new("op_aut_in_acirc", containment_witness));

    let mut applicable = 0;
    let mut unique_witness = None;
    for (i, e) in candidates.iter().enumerate() {
        let Ok(target) = &normal_residual else { break };
        let qualifies = e.lattice().is_compatible(lattice)
            && e.carrier() == inst.carrier()
            && e.is_subsystem_of(inst.ambient())
            && e.is_saturated()
            && op_residual_subsystem(e, None).is_ok_and(|r| systems_equal(&r, target));
        if !qualifies {
            continue;
        }
        applicable += 1;
        if unique_witness.is_none() {
            if let Some(diff) = e.first_difference(d) {
                unique_witness = Some(format!("candidate {i}: {diff}"));
            }
        }
    }
    checks.push(CheckOutcome::new("uniqueness", unique_witness));

    VerificationReport {
        carrier: lattice.label(inst.carrier()),
        carrier_order: lattice.order(inst.carrier()),
        normal_carrier: lattice.label(inst.normal_carrier()),
        morphism_count: d.morphism_count(),
        checks,
        candidates_applicable: applicable,
        elapsed: start.elapsed(),
    }
}
