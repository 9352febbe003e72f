//! Bases of the top Aomoto cohomology: flag forms of βnbc bases, transition
//! matrices between linear orders, and monomial bases.

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use sha2::{Digest, Sha256};

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::matroid::{admissible_nu, FlatClass, IndexSet, Matroid};
use crate::osalgebra::{
    flag_form, flag_form_unreduced, omega_lambda, reduce, sort_with_sign, AomotoComplex, OSElement,
    WeightVector,
};
use crate::rational::{format_rational, Q};
use crate::resonance::DenseData;
use crate::Exec;

/// Which hypothesis on the weights was verified before computing a basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GatingPredicate {
    FullNonresonance,
    YuzvinskyOnly,
}

/// Checks the weights, failing if even the Yuzvinsky condition is violated.
pub fn gate(m: &Matroid, weights: &WeightVector) -> Result<GatingPredicate> {
    gate_with(&DenseData::new(m), m.len(), weights)
}

fn gate_with(dense: &DenseData, n: usize, weights: &WeightVector) -> Result<GatingPredicate> {
    if weights.len() != n {
        return Err(Error::WeightLength {
            expected: n,
            found: weights.len(),
        });
    }
    let y = dense.check_yuzvinsky(weights);
    if !y.ok {
        let list: Vec<String> = y
            .violations
            .iter()
            .map(crate::resonance::format_violation)
            .collect();
        return Err(Error::Resonant(list.join(", ")));
    }
    Ok(if dense.check_nonresonance(weights, false).ok {
        GatingPredicate::FullNonresonance
    } else {
        GatingPredicate::YuzvinskyOnly
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct BasisEntry {
    pub base: IndexSet,
    /// `Xi(B)` in nbc normal form.
    pub flag_form: OSElement,
    /// `Xi(B)` as the expanded flag product.
    pub unreduced: OSElement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisCertificate {
    pub top_dimension: usize,
    /// Rank of `omega_lambda ∧ A^(r-1)`.
    pub image_rank: usize,
    /// Rank of the image together with the flag forms.
    pub combined_rank: usize,
    pub cohomology_dimension: usize,
    pub beta_count: usize,
    /// All nbc flag forms form a basis of `A^r`.
    pub nbc_forms_basis: bool,
    /// Each `Xi(B)` only involves nbc monomials with the same intersection.
    pub supports_localized: bool,
}

impl BasisCertificate {
    pub fn holds(&self) -> bool {
        self.combined_rank == self.image_rank + self.beta_count
            && self.combined_rank == self.top_dimension
            && self.cohomology_dimension == self.beta_count
            && self.nbc_forms_basis
            && self.supports_localized
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CohomologyBasis {
    pub weights: WeightVector,
    pub predicate: GatingPredicate,
    /// `(-1)^(r(r+1)/2)`, the sign relating `Xi(B)` to the cohomology class
    /// of the flag cochain.
    pub sign: i8,
    pub elements: Vec<BasisEntry>,
    pub certificate: BasisCertificate,
}

pub fn phi_sign(rank: usize) -> i8 {
    if (rank * (rank + 1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The flag forms of the βnbc bases with a rank certificate.
pub fn betanbc_basis(m: &Matroid, weights: &WeightVector) -> Result<CohomologyBasis> {
    betanbc_basis_with(m, weights, Exec::default())
}

pub fn betanbc_basis_with(
    m: &Matroid,
    weights: &WeightVector,
    exec: Exec,
) -> Result<CohomologyBasis> {
    let predicate = gate(m, weights)?;
    let complex = AomotoComplex::new(m, weights, exec);
    let r = m.rank();
    let beta = m.betanbc_direct();
    let elements = beta
        .iter()
        .map(|b| {
            Ok(BasisEntry {
                base: b.clone(),
                flag_form: flag_form(m, weights, b)?,
                unreduced: flag_form_unreduced(m, weights, b)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let image = complex.top_image();
    let image_rank = image.rank();
    let top = complex.basis(r).len();
    let vectors: Vec<Vec<Q>> = elements
        .iter()
        .map(|e| complex.top_coordinates(&e.flag_form))
        .collect();
    let combined_rank = stack(&image, top, &vectors).rank();

    let nbc = m.nbc_bases();
    let nbc_vectors: Vec<Vec<Q>> = exec.map(&nbc, |b| {
        let x = flag_form(m, weights, b).expect("nbc bases are bases");
        complex.top_coordinates(&x)
    });
    let nbc_forms_basis = !DenseMatrix::from_columns(top, &nbc_vectors)
        .determinant()
        .is_zero();

    let lattice = m.lattice();
    let supports_localized = elements.iter().all(|e| {
        let x = lattice.closure(&e.base);
        e.flag_form.terms().keys().all(|k| lattice.closure(k) == x)
    });
    let certificate = BasisCertificate {
        top_dimension: top,
        image_rank,
        combined_rank,
        cohomology_dimension: top - image_rank,
        beta_count: beta.len(),
        nbc_forms_basis,
        supports_localized,
    };
    if !certificate.holds() {
        return Err(Error::Inconsistency(format!(
            "flag forms fail the basis certificate: {certificate:?}"
        )));
    }
    Ok(CohomologyBasis {
        weights: weights.clone(),
        predicate,
        sign: phi_sign(r),
        elements,
        certificate,
    })
}

fn stack(image: &DenseMatrix, rows: usize, vectors: &[Vec<Q>]) -> DenseMatrix {
    if vectors.is_empty() {
        return image.clone();
    }
    image.hstack(&DenseMatrix::from_columns(rows, vectors))
}

/// Flag forms of the βnbc bases of `arrangement` reordered by `order`,
/// written in the nbc basis of the original arrangement. Bases are reported
/// with original indices, in the order's sequence.
fn flag_forms_for_order(
    m: &Matroid,
    order: &[usize],
    weights: &WeightVector,
    complex: &AomotoComplex,
) -> Result<(Vec<IndexSet>, Vec<Vec<Q>>)> {
    let reordered = Matroid::new(&m.arrangement().reordered(order)?);
    let w = weights.permuted(order);
    let mut bases = Vec::new();
    let mut vectors = Vec::new();
    for b in reordered.betanbc_direct() {
        let local = flag_form_unreduced(&reordered, &w, &b)?;
        let mut relabeled = OSElement::zero(local.degree());
        for (mono, c) in local.terms() {
            let mapped: Vec<usize> = mono.iter().map(|&i| order[i - 1]).collect();
            if let Some((sorted, odd)) = sort_with_sign(&mapped) {
                relabeled.add_term(sorted, if odd { -c.clone() } else { c.clone() });
            }
        }
        let reduced = reduce(m, &relabeled);
        bases.push(b.iter().map(|&i| order[i - 1]).collect());
        vectors.push(complex.top_coordinates(&reduced));
    }
    Ok((bases, vectors))
}

/// Change of basis between the flag-form bases of two orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionMatrix {
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub source_bases: Vec<IndexSet>,
    pub target_bases: Vec<IndexSet>,
    /// Column `j` holds the coordinates of the `j`-th source form in the
    /// target basis, modulo `omega_lambda ∧ A^(r-1)`.
    pub matrix: Vec<Vec<Q>>,
    pub determinant: Q,
    pub sample_hashes: Vec<String>,
}

impl TransitionMatrix {
    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
        })
    }

    pub fn is_integral(&self) -> bool {
        self.matrix.iter().flatten().all(|v| v.is_integer())
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant.abs().is_one()
    }

    pub fn to_dense(&self) -> DenseMatrix {
        DenseMatrix::from_rows(self.size(), self.matrix.clone())
    }
}

fn matrix_strings(matrix: &[Vec<Q>]) -> Vec<Vec<String>> {
    matrix
        .iter()
        .map(|row| row.iter().map(format_rational).collect())
        .collect()
}

impl Serialize for TransitionMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            source: &'a [usize],
            target: &'a [usize],
            source_bases: &'a [IndexSet],
            target_bases: &'a [IndexSet],
            matrix: Vec<Vec<String>>,
            determinant: String,
            sample_hashes: &'a [String],
        }
        Out {
            source: &self.source,
            target: &self.target,
            source_bases: &self.source_bases,
            target_bases: &self.target_bases,
            matrix: matrix_strings(&self.matrix),
            determinant: format_rational(&self.determinant),
            sample_hashes: &self.sample_hashes,
        }
        .serialize(s)
    }
}

fn hash_matrix(matrix: &[Vec<Q>]) -> String {
    let text = serde_json::to_string(&matrix_strings(matrix)).expect("strings serialize");
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Transition matrix from the flag-form basis of `source` to that of
/// `target` (both permutations of `1..=n`; weights indexed by the original
/// labels), computed independently at every sample. Samples must agree and
/// the result must be integral and unimodular.
pub fn transition_matrix(
    arrangement: &Arrangement,
    source: &[usize],
    target: &[usize],
    samples: &[WeightVector],
) -> Result<TransitionMatrix> {
    transition_matrix_with(arrangement, source, target, samples, Exec::default())
}

pub fn transition_matrix_with(
    arrangement: &Arrangement,
    source: &[usize],
    target: &[usize],
    samples: &[WeightVector],
    exec: Exec,
) -> Result<TransitionMatrix> {
    if samples.is_empty() {
        return Err(Error::InvalidFile(
            "at least one weight sample is required".into(),
        ));
    }
    let m = Matroid::new(arrangement);
    arrangement.reordered(source)?;
    arrangement.reordered(target)?;
    let dense = DenseData::new(&m);
    for w in samples {
        gate_with(&dense, m.len(), w)?;
    }
    let per_sample = exec.map(samples, |w| transition_at(&m, source, target, w));
    let mut results = Vec::with_capacity(samples.len());
    for r in per_sample {
        results.push(r?);
    }
    let (source_bases, target_bases, first) = results[0].clone();
    if let Some(i) = results.iter().position(|(_, _, mat)| mat != &first) {
        return Err(Error::Inconsistency(format!(
            "transition matrix at sample {} differs from sample 0",
            i
        )));
    }
    let size = first.len();
    let determinant = DenseMatrix::from_rows(size, first.clone()).determinant();
    let out = TransitionMatrix {
        source: source.to_vec(),
        target: target.to_vec(),
        source_bases,
        target_bases,
        sample_hashes: results.iter().map(|(_, _, mat)| hash_matrix(mat)).collect(),
        matrix: first,
        determinant,
    };
    if !out.is_integral() || !out.is_unimodular() {
        return Err(Error::Inconsistency(format!(
            "transition matrix is not integral unimodular: {:?}",
            matrix_strings(&out.matrix)
        )));
    }
    Ok(out)
}

type SampleResult = (Vec<IndexSet>, Vec<IndexSet>, Vec<Vec<Q>>);

fn transition_at(
    m: &Matroid,
    source: &[usize],
    target: &[usize],
    weights: &WeightVector,
) -> Result<SampleResult> {
    let complex = AomotoComplex::new(m, weights, Exec::Sequential);
    let top = complex.basis(m.rank()).len();
    let (source_bases, source_vecs) = flag_forms_for_order(m, source, weights, &complex)?;
    let (target_bases, target_vecs) = flag_forms_for_order(m, target, weights, &complex)?;
    let k = target_vecs.len();
    if source_vecs.len() != k {
        return Err(Error::Inconsistency(
            "orders have different βnbc counts".into(),
        ));
    }
    let image = complex.top_image();
    let system = if k == 0 {
        image.clone()
    } else {
        DenseMatrix::from_columns(top, &target_vecs).hstack(&image)
    };
    let mut matrix = vec![vec![Q::zero(); k]; k];
    for (j, s) in source_vecs.iter().enumerate() {
        let x = system
            .solve(s)
            .ok_or_else(|| Error::Inconsistency("source form outside the target span".into()))?;
        for (i, row) in matrix.iter_mut().enumerate() {
            row[j] = x[i].clone();
        }
    }
    Ok((source_bases, target_bases, matrix))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SufficientCondition {
    Unmixed,
    AdmissibleRankTwo,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialReport {
    pub holds: bool,
    pub predicate: GatingPredicate,
    pub beta_count: usize,
    pub image_rank: usize,
    pub combined_rank: usize,
    pub top_dimension: usize,
    pub unmixed: bool,
    pub admissible_nu: Option<usize>,
    pub sufficient_conditions: Vec<SufficientCondition>,
}

/// Whether `{omega_B : B βnbc}` is a basis of the top cohomology, with the
/// sufficient conditions that apply to the order.
pub fn monomial_basis_check(m: &Matroid, weights: &WeightVector) -> Result<MonomialReport> {
    let predicate = gate(m, weights)?;
    let complex = AomotoComplex::new(m, weights, Exec::default());
    let r = m.rank();
    let beta = m.betanbc_direct();
    let top_basis = complex.basis(r);
    let top = top_basis.len();
    let vectors: Vec<Vec<Q>> = beta
        .iter()
        .map(|b| complex.top_coordinates(&OSElement::monomial(b.clone(), Q::one())))
        .collect();
    let image = complex.top_image();
    let image_rank = image.rank();
    let combined_rank = stack(&image, top, &vectors).rank();
    let unmixed = m.unmixed_report().unmixed;
    let nu = if r == 2 {
        admissible_nu(m.arrangement())
    } else {
        None
    };
    let mut sufficient = Vec::new();
    if unmixed {
        sufficient.push(SufficientCondition::Unmixed);
    }
    if nu.is_some() {
        sufficient.push(SufficientCondition::AdmissibleRankTwo);
    }
    let holds = combined_rank == top && combined_rank == image_rank + beta.len();
    if !holds && !sufficient.is_empty() {
        return Err(Error::Inconsistency(format!(
            "monomials fail to give a basis although {sufficient:?} holds"
        )));
    }
    Ok(MonomialReport {
        holds,
        predicate,
        beta_count: beta.len(),
        image_rank,
        combined_rank,
        top_dimension: top,
        unmixed,
        admissible_nu: nu,
        sufficient_conditions: sufficient,
    })
}

/// One βnbc base `(i, j)` with mixed intersection and the congruences
/// `Xi(B) ≡ l_nu l_j w_nu w_j = l_nu l_j (w_ij - w_i nu) ≡ -l_nu l_j w_i nu
/// ≡ l_j d(w_i) ≡ 0` modulo `N = span{w_B : B βnbc} + omega_lambda ∧ A^1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceStep {
    pub base: IndexSet,
    pub nu: usize,
    /// `[s0 ≡ s1, s1 = s2, s2 ≡ s3, s3 ≡ s4, s4 ≡ 0]`.
    pub steps: [bool; 5],
}

impl CongruenceStep {
    pub fn holds(&self) -> bool {
        self.steps.iter().all(|&s| s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceReplay {
    pub nu: usize,
    /// βnbc bases whose intersection is unmixed, with `Xi(B)` in `N`.
    pub unmixed_in_n: Vec<IndexSet>,
    pub mixed: Vec<CongruenceStep>,
    pub spans: bool,
}

impl CongruenceReplay {
    pub fn holds(&self) -> bool {
        self.spans && self.mixed.iter().all(CongruenceStep::holds)
    }
}

/// Replays, for a rank-2 arrangement with admissible order, the argument
/// that every `Xi(B)` lies in `N`, step by step.
pub fn replay_admissible_congruences(
    m: &Matroid,
    weights: &WeightVector,
) -> Result<CongruenceReplay> {
    if m.rank() != 2 {
        return Err(Error::Inconsistency("the replay needs rank 2".into()));
    }
    let nu = admissible_nu(m.arrangement())
        .ok_or_else(|| Error::Inconsistency("order is not admissible".into()))?;
    gate(m, weights)?;
    let complex = AomotoComplex::new(m, weights, Exec::default());
    let top_basis = complex.basis(2).to_vec();
    let top = top_basis.len();
    let beta = m.betanbc_direct();
    let units: Vec<Vec<Q>> = beta
        .iter()
        .map(|b| complex.top_coordinates(&OSElement::monomial(b.clone(), Q::one())))
        .collect();
    let n_matrix = stack(&complex.top_image(), top, &units);
    let in_n = |x: &OSElement| -> bool {
        let v = complex.top_coordinates(&reduce(m, x));
        v.iter().all(Zero::is_zero) || n_matrix.solve(&v).is_some()
    };
    let report = m.unmixed_report();
    let lattice = m.lattice();
    let mut unmixed_in_n = Vec::new();
    let mut mixed = Vec::new();
    for b in &beta {
        let x = lattice.closure(b);
        let class = report
            .flats
            .iter()
            .find(|f| Some(f.flat) == x)
            .map(|f| f.class)
            .expect("bases meet in maximal flats");
        let xi = flag_form(m, weights, b)?;
        if class != FlatClass::Mixed {
            if in_n(&xi) {
                unmixed_in_n.push(b.clone());
            }
            continue;
        }
        let (i, j) = (b[0], b[1]);
        let lj = weights.get(j);
        let lnu = weights.get(nu);
        let c = lnu * lj;
        let mono = |a: usize, b: usize| OSElement::monomial(vec![a, b], Q::one());
        let s1 = mono(nu, j).scaled(&c);
        let s2 = mono(i, j).sub(&mono(i, nu)).scaled(&c);
        let s3 = mono(i, nu).scaled(&-c.clone());
        let s4 = omega_lambda(weights)
            .wedge_unreduced(&OSElement::generator(i))
            .scaled(lj);
        let steps = [
            in_n(&xi.sub(&reduce(m, &s1))),
            reduce(m, &s1) == reduce(m, &s2),
            in_n(&s2.sub(&s3)),
            in_n(&s3.sub(&s4)),
            in_n(&s4),
        ];
        mixed.push(CongruenceStep {
            base: b.clone(),
            nu,
            steps,
        });
    }
    let spans = n_matrix.rank() == top;
    Ok(CongruenceReplay {
        nu,
        unmixed_in_n,
        mixed,
        spans,
    })
}
