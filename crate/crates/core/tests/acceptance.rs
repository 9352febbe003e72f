//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits with
//! a nonzero status if any criterion fails. Runs without the libtest
//! harness so every line is printed even when an early criterion fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;

use betanbc::arrangement::ProjIndex;
use betanbc::bases::{
    betanbc_basis, monomial_basis_check, replay_admissible_congruences, transition_matrix,
};
use betanbc::complexes::{
    broken_circuit_complex, check_lex_shelling, folkman_complex, verify_flag_basis,
};
use betanbc::fixtures;
use betanbc::matroid::{betanbc_recursive, supersolvable_betanbc};
use betanbc::osalgebra::{aomoto, flag_form_unreduced, reduce_monomial, OSElement, WeightVector};
use betanbc::random::{corpus, random_gated_weights, random_weights, rng};
use betanbc::rational::Q;
use betanbc::resonance::DenseData;
use betanbc::{Arrangement, Exec, Matroid};
use common::{brute_lattice, integer_matrix, os_relations, smith_rank};
use num_bigint::BigInt;
use num_traits::{One, Zero};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// E, GP, N2, P3 and 50 seeded random arrangements with `n <= 7`, `dim <= 3`.
fn main_corpus() -> Vec<(String, Arrangement)> {
    let mut out = vec![
        ("E".to_string(), fixtures::example_e()),
        ("GP".to_string(), fixtures::general_position_gp()),
        ("N2".to_string(), fixtures::normal_n2()),
        ("P3".to_string(), fixtures::three_points()),
    ];
    for (k, a) in corpus(2024, 50, 3, 7).into_iter().enumerate() {
        out.push((format!("random-{k}"), a));
    }
    out
}

fn gated(m: &Matroid, seed: u64) -> WeightVector {
    random_gated_weights(&mut rng(seed), &DenseData::new(m), m.len(), true)
}

fn criterion_1() -> Outcome {
    let e = fixtures::example_e();
    let m = Matroid::new(&e);
    let nbc = m.nbc_bases();
    let expected_nbc: Vec<Vec<usize>> = vec![
        vec![1, 3],
        vec![1, 4],
        vec![1, 5],
        vec![2, 3],
        vec![2, 4],
        vec![2, 5],
    ];
    ensure(nbc == expected_nbc, || format!("nbc = {nbc:?}"))?;
    let beta = m.betanbc_direct();
    ensure(beta == vec![vec![2, 4], vec![2, 5]], || {
        format!("betanbc = {beta:?}")
    })?;

    let triple = e.triple(5).map_err(|err| err.to_string())?;
    // H2 ∩ H5 is the point (1, 1), which also lies on H4
    ensure(triple.nu == vec![1, 2], || {
        format!("nu on the restriction to H5 = {:?}", triple.nu)
    })?;

    let deletion = Matroid::new(&triple.deletion);
    let beta_deletion = deletion.betanbc_direct();
    ensure(beta_deletion == vec![vec![3, 4]], || {
        format!("betanbc(A') = {beta_deletion:?}, expected [[3, 4]]")
    })
}

fn criterion_2() -> Outcome {
    let m = Matroid::new(&fixtures::example_e());
    let mut r = rng(2);
    for _ in 0..5 {
        let w = random_weights(&mut r, 5);
        let (l2, l4, l5) = (w.get(2).clone(), w.get(4).clone(), w.get(5).clone());
        let mut b1 = OSElement::zero(2);
        b1.add_term(vec![2, 4], &l2 * &l4);
        b1.add_term(vec![4, 5], -(&l4 * &l5));
        let mut b2 = OSElement::zero(2);
        b2.add_term(vec![2, 5], &l2 * &l5);
        b2.add_term(vec![4, 5], &l4 * &l5);
        let got1 = flag_form_unreduced(&m, &w, &[2, 4]).map_err(|e| e.to_string())?;
        let got2 = flag_form_unreduced(&m, &w, &[2, 5]).map_err(|e| e.to_string())?;
        ensure(got1 == b1, || {
            format!("Xi(B1) = {got1:?} at {:?}", w.to_strings())
        })?;
        ensure(got2 == b2, || {
            format!("Xi(B2) = {got2:?} at {:?}", w.to_strings())
        })?;
    }
    use ProjIndex::{Finite as F, Infinity as I};
    let mut nine = vec![
        vec![F(1)],
        vec![F(2)],
        vec![F(3)],
        vec![F(4)],
        vec![F(5)],
        vec![F(1), F(3), F(5)],
        vec![F(2), F(4), F(5)],
        vec![F(1), F(2), I],
        vec![F(3), F(4), I],
    ];
    nine.sort();
    let mut got = DenseData::new(&m).conditions(true);
    got.sort();
    ensure(got == nine, || format!("conditions {got:?}"))
}

fn criterion_3() -> Outcome {
    for (k, (name, a)) in main_corpus().into_iter().enumerate() {
        let m = Matroid::new(&a);
        let w = gated(&m, 300 + k as u64);
        let r = m.rank();
        let beta = m.betanbc_direct().len();
        let dims = aomoto(&m, &w).cohomology_dims(Exec::default());
        let expected: Vec<usize> = (0..=r).map(|p| if p == r { beta } else { 0 }).collect();
        ensure(dims == expected, || {
            format!("{name}: dims {dims:?}, expected {expected:?}")
        })?;
        let chi = m.beta_count_check();
        ensure(chi == BigInt::from(beta), || {
            format!("{name}: |betanbc| = {beta}, (-1)^r chi(1) = {chi}")
        })?;
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    for (k, (name, a)) in main_corpus().into_iter().enumerate() {
        let m = Matroid::new(&a);
        let w = gated(&m, 300 + k as u64);
        let basis = betanbc_basis(&m, &w).map_err(|e| format!("{name}: {e}"))?;
        let c = &basis.certificate;
        ensure(c.holds(), || format!("{name}: {c:?}"))?;
        ensure(basis.elements.len() == c.beta_count, || {
            format!("{name}: wrong number of forms")
        })?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for (name, a) in main_corpus() {
        let m = Matroid::new(&a);
        let shelling = check_lex_shelling(&m);
        ensure(shelling.is_shelling, || {
            format!("{name}: shelling violation {:?}", shelling.violation)
        })?;
        ensure(shelling.matches_betanbc, || {
            format!("{name}: homology facets {:?}", shelling.homology_facets)
        })?;
        let bc = broken_circuit_complex(&m).reduced_betti_numbers(Exec::default());
        let f = folkman_complex(&m)
            .complex
            .reduced_betti_numbers(Exec::default());
        ensure(bc == f, || format!("{name}: BC {bc:?}, F {f:?}"))?;
        let flags = verify_flag_basis(&m);
        ensure(
            flags.holds && flags.cohomology_dimension == flags.beta_count,
            || format!("{name}: {flags:?}"),
        )?;
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let mut cases = main_corpus();
    cases.extend(
        fixtures::all()
            .into_iter()
            .map(|f| (f.name.to_string(), f.arrangement)),
    );
    for (name, a) in cases {
        let direct = Matroid::new(&a).betanbc_direct();
        let recursive = betanbc_recursive(&a);
        ensure(direct == recursive, || {
            format!("{name}: direct {direct:?}, recursive {recursive:?}")
        })?;
    }
    let m = Matroid::new(&fixtures::supersolvable_e_prime());
    let product = supersolvable_betanbc(&m, &fixtures::supersolvable_e_prime_blocks())
        .map_err(|e| e.to_string())?;
    let direct = m.betanbc_direct();
    ensure(product == direct, || {
        format!("product formula {product:?}, direct {direct:?}")
    })
}

fn criterion_7() -> Outcome {
    for (name, a) in [
        ("E", fixtures::example_e()),
        ("GP", fixtures::general_position_gp()),
    ] {
        let m = Matroid::new(&a);
        let n = a.len();
        let identity: Vec<usize> = (1..=n).collect();
        let reversed: Vec<usize> = identity.iter().rev().copied().collect();
        let mut rotated = identity.clone();
        rotated.rotate_left(1);
        let samples: Vec<WeightVector> = (0..3).map(|k| gated(&m, 700 + k)).collect();
        for order in [&identity, &reversed, &rotated] {
            let t = transition_matrix(&a, &identity, order, &samples)
                .map_err(|e| format!("{name} {order:?}: {e}"))?;
            ensure(t.is_integral() && t.is_unimodular(), || {
                format!("{name} {order:?}: {:?}", t.matrix)
            })?;
            ensure(order != &identity || t.is_identity(), || {
                format!("{name}: identity order gives {:?}", t.matrix)
            })?;
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let unmixed = [
        ("E", fixtures::example_e()),
        ("GP", fixtures::general_position_gp()),
        ("N2", fixtures::normal_n2()),
        ("GPI", fixtures::general_position_to_infinity()),
    ];
    for (k, (name, a)) in unmixed.into_iter().enumerate() {
        let m = Matroid::new(&a);
        let w = gated(&m, 800 + k as u64);
        let report = monomial_basis_check(&m, &w).map_err(|e| format!("{name}: {e}"))?;
        ensure(report.unmixed && report.holds, || {
            format!("{name}: {report:?}")
        })?;
    }
    let m = Matroid::new(&fixtures::admissible_mixed());
    let w = gated(&m, 810);
    let report = monomial_basis_check(&m, &w).map_err(|e| format!("ADM: {e}"))?;
    ensure(report.holds && report.admissible_nu.is_some(), || {
        format!("ADM: {report:?}")
    })?;
    let replay = replay_admissible_congruences(&m, &w).map_err(|e| format!("ADM: {e}"))?;
    ensure(replay.holds() && !replay.mixed.is_empty(), || {
        format!("ADM replay: {replay:?}")
    })
}

fn criterion_9() -> Outcome {
    let mut r = rng(900);
    let mut lattices: Vec<(String, Arrangement)> = fixtures::all()
        .into_iter()
        .map(|f| (f.name.to_string(), f.arrangement))
        .collect();
    lattices.push((
        "random-12".into(),
        betanbc::random::random_arrangement(&mut r, 3, 12),
    ));
    lattices.push((
        "random-9".into(),
        betanbc::random::random_arrangement(&mut r, 2, 9),
    ));
    for (name, a) in &lattices {
        let ours: BTreeMap<Vec<usize>, usize> = a
            .lattice()
            .flats()
            .iter()
            .map(|f| (f.support().to_vec(), f.codim()))
            .collect();
        ensure(ours == brute_lattice(a), || {
            format!("{name}: lattice differs from brute force")
        })?;
    }

    for (name, a) in lattices.iter().filter(|(_, a)| a.len() <= 6) {
        let m = Matroid::new(a);
        for p in 0..=m.rank() {
            let (basis, rel) = os_relations(a, p);
            ensure(basis.len() - rel.rank() == m.nbc_sets(p).len(), || {
                format!("{name}: quotient dimension in degree {p}")
            })?;
            for t in &basis {
                let reduced = reduce_monomial(&m, t).map_err(|e| e.to_string())?;
                let mut v = vec![Q::zero(); basis.len()];
                v[basis.iter().position(|b| b == t).unwrap()] = Q::one();
                for (mono, c) in reduced.terms() {
                    v[basis.iter().position(|b| b == mono).unwrap()] -= c;
                }
                ensure(rel.contains(&v), || format!("{name}: normal form of {t:?}"))?;
            }
        }
    }

    for (name, a) in lattices.iter().filter(|(_, a)| a.len() <= 7) {
        let m = Matroid::new(a);
        let bc = broken_circuit_complex(&m);
        let f = folkman_complex(&m).complex;
        for complex in [&bc, &f] {
            for q in -1..=complex.dimension() {
                let ours = complex.coboundary(q).rank();
                let smith = smith_rank(integer_matrix(complex, q));
                ensure(ours == smith, || {
                    format!("{name}: rank {ours} vs Smith {smith} in degree {q}")
                })?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "example fixture: nbc, betanbc, deletion betanbc, nu",
            criterion_1,
        ),
        (
            "example flag forms and nonresonance conditions",
            criterion_2,
        ),
        ("cohomology vanishing and dimension", criterion_3),
        ("flag-form basis certificate", criterion_4),
        ("shelling and topology", criterion_5),
        ("betanbc routes and supersolvable formula", criterion_6),
        ("transition matrices", criterion_7),
        ("monomial criteria and congruence replay", criterion_8),
        ("oracle equivalences", criterion_9),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(()) => println!("PASS criterion {}: {name}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
