//! The invariant suite shared by the `verify` subcommand and the acceptance
//! tests. Each check reports `pass`, `fail` or `skip` with a short detail.

use serde::Serialize;

use crate::arrangement::Arrangement;
use crate::bases::{
    betanbc_basis_with, monomial_basis_check, replay_admissible_congruences, transition_matrix_with,
};
use crate::complexes::{
    broken_circuit_complex, check_lex_shelling, folkman_complex, pi_map, verify_flag_basis,
};
use crate::matroid::{admissible_nu, betanbc_recursive, Matroid};
use crate::osalgebra::{upsilon_respects_coboundaries, AomotoComplex, WeightVector};
use crate::resonance::DenseData;
use crate::Exec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn from_bool(name: &'static str, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            name,
            status: if ok { Status::Pass } else { Status::Fail },
            detail: if ok { None } else { Some(detail.into()) },
        }
    }

    fn skip(name: &'static str, why: impl Into<String>) -> Self {
        Check {
            name,
            status: Status::Skip,
            detail: Some(why.into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub ok: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    fn new(checks: Vec<Check>) -> Self {
        VerifyReport {
            ok: checks.iter().all(|c| c.status != Status::Fail),
            checks,
        }
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .collect()
    }

    pub fn status_of(&self, name: &str) -> Option<Status> {
        self.checks
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.status)
    }
}

#[derive(Debug, Clone)]
#[derive(Default)]
pub struct VerifyOptions {
    pub exec: Exec,
    /// Orders used for the transition checks besides the identity.
    pub extra_orders: Vec<Vec<usize>>,
    /// Further weight samples for the transition checks.
    pub extra_samples: Vec<WeightVector>,
}


/// Combinatorial and topological checks that need no weights.
pub fn combinatorial_checks(m: &Matroid, exec: Exec) -> Vec<Check> {
    let mut checks = Vec::new();
    let direct = m.betanbc_direct();
    let recursive = betanbc_recursive(m.arrangement());
    checks.push(Check::from_bool(
        "betanbc_routes_agree",
        direct == recursive,
        format!("direct {direct:?}, recursive {recursive:?}"),
    ));
    let beta = m.beta_count_check();
    checks.push(Check::from_bool(
        "beta_equals_char_poly",
        beta == (direct.len() as i64).into(),
        format!("|betanbc| = {}, (-1)^r chi(1) = {beta}", direct.len()),
    ));
    let shelling = check_lex_shelling(m);
    checks.push(Check::from_bool(
        "lex_order_shells_bc",
        shelling.is_shelling,
        format!("violation at {:?}", shelling.violation),
    ));
    checks.push(Check::from_bool(
        "homology_facets_are_betanbc",
        shelling.matches_betanbc,
        format!("homology facets {:?}", shelling.homology_facets),
    ));
    let bc = broken_circuit_complex(m);
    let f = folkman_complex(m);
    let r = m.rank() as isize;
    checks.push(Check::from_bool(
        "complexes_pure",
        bc.is_pure()
            && f.complex.is_pure()
            && bc.dimension() == r - 1
            && f.complex.dimension() == r - 1,
        "BC or F is not pure of dimension r - 1",
    ));
    let mut bc_betti = bc.reduced_betti_numbers(exec);
    let mut f_betti = f.complex.reduced_betti_numbers(exec);
    let len = bc_betti.len().max(f_betti.len());
    bc_betti.resize(len, 0);
    f_betti.resize(len, 0);
    checks.push(Check::from_bool(
        "bc_and_folkman_betti_agree",
        bc_betti == f_betti,
        format!("BC {bc_betti:?}, F {f_betti:?}"),
    ));
    let pi = pi_map(m, &f);
    checks.push(Check::from_bool(
        "pi_is_simplicial",
        pi.is_simplicial(&f, &bc),
        "some chain maps outside BC",
    ));
    let flags = verify_flag_basis(m);
    checks.push(Check::from_bool(
        "flag_cochains_basis",
        flags.holds,
        format!("{flags:?}"),
    ));
    checks
}

/// Checks that need weights. Weights failing the Yuzvinsky condition skip
/// the theorem checks.
pub fn weighted_checks(m: &Matroid, weights: &WeightVector, options: &VerifyOptions) -> Vec<Check> {
    let exec = options.exec;
    let mut checks = Vec::new();
    if weights.len() != m.len() {
        checks.push(Check::from_bool(
            "weight_length",
            false,
            format!("expected {} weights, found {}", m.len(), weights.len()),
        ));
        return checks;
    }
    let dense = DenseData::new(m);
    let yuz = dense.check_yuzvinsky(weights).ok;
    let nonres = dense.check_nonresonance(weights, false).ok;
    checks.push(Check::from_bool(
        "nonresonance_implies_yuzvinsky",
        !nonres || yuz,
        "nonresonant weights fail the Yuzvinsky condition",
    ));
    let complex = AomotoComplex::new(m, weights, exec);
    checks.push(Check::from_bool(
        "aomoto_squares_to_zero",
        complex.squares_to_zero(),
        "omega_lambda ∧ omega_lambda ∧ is nonzero",
    ));
    let beta = m.betanbc_direct().len();
    if !yuz {
        for name in [
            "aomoto_cohomology_concentrated",
            "upsilon_well_defined",
            "flag_form_basis",
            "transition_matrices",
            "monomial_basis",
            "admissible_congruences",
        ] {
            checks.push(Check::skip(name, "weights fail the Yuzvinsky condition"));
        }
        return checks;
    }
    let dims = complex.cohomology_dims(exec);
    let r = m.rank();
    let expected: Vec<usize> = (0..=r).map(|p| if p == r { beta } else { 0 }).collect();
    checks.push(Check::from_bool(
        "aomoto_cohomology_concentrated",
        dims == expected,
        format!("dims {dims:?}, expected {expected:?}"),
    ));
    let f = folkman_complex(m);
    checks.push(Check::from_bool(
        "upsilon_well_defined",
        upsilon_respects_coboundaries(m, weights, &complex, &f),
        "upsilon of a coboundary is outside the image",
    ));
    checks.push(match betanbc_basis_with(m, weights, exec) {
        Ok(b) => Check::from_bool(
            "flag_form_basis",
            b.certificate.holds(),
            format!("{:?}", b.certificate),
        ),
        Err(e) => Check::from_bool("flag_form_basis", false, e.to_string()),
    });

    let n = m.len();
    let identity: Vec<usize> = (1..=n).collect();
    let mut samples = vec![weights.clone()];
    samples.extend(options.extra_samples.iter().cloned());
    let mut orders = vec![identity.clone(), identity.iter().rev().copied().collect()];
    orders.extend(options.extra_orders.iter().cloned());
    let mut transition_problems = Vec::new();
    for order in &orders {
        match transition_matrix_with(m.arrangement(), &identity, order, &samples, exec) {
            Ok(t) => {
                if order == &identity && !t.is_identity() {
                    transition_problems
                        .push("identity order gives a non-identity matrix".to_string());
                }
            }
            Err(e) => transition_problems.push(format!("order {order:?}: {e}")),
        }
    }
    checks.push(Check::from_bool(
        "transition_matrices",
        transition_problems.is_empty(),
        transition_problems.join("; "),
    ));

    checks.push(match monomial_basis_check(m, weights) {
        Ok(_) => Check::from_bool("monomial_basis", true, ""),
        Err(e) => Check::from_bool("monomial_basis", false, e.to_string()),
    });
    if r == 2 && admissible_nu(m.arrangement()).is_some() {
        checks.push(match replay_admissible_congruences(m, weights) {
            Ok(replay) => Check::from_bool(
                "admissible_congruences",
                replay.holds(),
                format!("{replay:?}"),
            ),
            Err(e) => Check::from_bool("admissible_congruences", false, e.to_string()),
        });
    } else {
        checks.push(Check::skip(
            "admissible_congruences",
            "order is not admissible of rank 2",
        ));
    }
    checks
}

/// All checks for one arrangement and weight vector.
pub fn verify(
    arrangement: &Arrangement,
    weights: &WeightVector,
    options: &VerifyOptions,
) -> VerifyReport {
    let m = Matroid::new(arrangement);
    let mut checks = combinatorial_checks(&m, options.exec);
    checks.extend(weighted_checks(&m, weights, options));
    VerifyReport::new(checks)
}

/// Runs [`verify`] over a batch of inputs, in parallel when asked.
pub fn verify_batch(inputs: &[(Arrangement, WeightVector)], exec: Exec) -> Vec<VerifyReport> {
    let options = VerifyOptions {
        exec: Exec::Sequential,
        ..VerifyOptions::default()
    };
    exec.map(inputs, |(a, w)| verify(a, w, &options))
}
