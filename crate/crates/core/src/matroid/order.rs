use serde::Serialize;

use super::{IndexSet, Matroid};
use crate::arrangement::{Arrangement, FlatId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FlatClass {
    /// Every nbc base with this intersection is βnbc.
    AllBeta,
    /// No nbc base with this intersection is βnbc.
    NoBeta,
    Mixed,
}

#[derive(Debug, Clone, Serialize)]
pub struct MaximalFlatReport {
    #[serde(skip)]
    pub flat: FlatId,
    pub support: Vec<usize>,
    pub nbc: Vec<IndexSet>,
    pub class: FlatClass,
}

#[derive(Debug, Clone, Serialize)]
pub struct UnmixedReport {
    pub unmixed: bool,
    pub flats: Vec<MaximalFlatReport>,
}

pub(super) fn unmixed_report(m: &Matroid) -> UnmixedReport {
    let lattice = m.lattice();
    let nbc = m.nbc_bases();
    let beta = m.betanbc_direct();
    let flats: Vec<MaximalFlatReport> = lattice
        .maximal_flats()
        .into_iter()
        .map(|x| {
            let nbc_x: Vec<IndexSet> = nbc
                .iter()
                .filter(|b| lattice.closure(b) == Some(x))
                .cloned()
                .collect();
            let in_beta = nbc_x.iter().filter(|b| beta.contains(b)).count();
            let class = if in_beta == nbc_x.len() {
                FlatClass::AllBeta
            } else if in_beta == 0 {
                FlatClass::NoBeta
            } else {
                FlatClass::Mixed
            };
            MaximalFlatReport {
                flat: x,
                support: lattice.flats()[x].support().to_vec(),
                nbc: nbc_x,
                class,
            }
        })
        .collect();
    UnmixedReport {
        unmixed: flats.iter().all(|f| f.class != FlatClass::Mixed),
        flats,
    }
}

/// The `nu` of an admissible order: hyperplanes parallel to `H1` are
/// exactly `H1, ..., H(nu-1)`. `None` if the parallels to `H1` are not
/// an initial segment.
pub fn admissible_nu(arrangement: &Arrangement) -> Option<usize> {
    let first = arrangement.hyperplanes().first()?;
    let parallel: Vec<bool> = arrangement
        .hyperplanes()
        .iter()
        .map(|h| h.is_parallel_to(first))
        .collect();
    let nu = parallel.iter().take_while(|&&p| p).count() + 1;
    if parallel[nu - 1..].iter().any(|&p| p) {
        None
    } else {
        Some(nu)
    }
}

/// nbc bases `(i1, i2)` with `1 < i1 < i2 != nu`: the βnbc set of a rank-2
/// arrangement with admissible order.
pub fn admissible_prediction(m: &Matroid, nu: usize) -> Vec<IndexSet> {
    m.nbc_bases()
        .into_iter()
        .filter(|b| b.len() == 2 && b[0] > 1 && b[1] != nu)
        .collect()
}

/// βnbc bases of a supersolvable arrangement from its filtration blocks:
/// tuples picking a non-minimal element from each block.
pub fn supersolvable_betanbc(m: &Matroid, blocks: &[Vec<usize>]) -> Result<Vec<IndexSet>> {
    validate_filtration(m, blocks)?;
    let mut out: Vec<IndexSet> = vec![Vec::new()];
    for block in blocks {
        let mut sorted = block.clone();
        sorted.sort_unstable();
        let choices = &sorted[1..];
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |&h| {
                    let mut t = prefix.clone();
                    t.push(h);
                    t
                })
            })
            .collect();
    }
    out.sort();
    Ok(out)
}

fn validate_filtration(m: &Matroid, blocks: &[Vec<usize>]) -> Result<()> {
    let bad = |msg: String| Err(Error::InvalidFiltration(msg));
    let n = m.len();
    let mut seen = vec![false; n];
    for block in blocks {
        if block.is_empty() {
            return bad("empty block".into());
        }
        for &h in block {
            if h == 0 || h > n || seen[h - 1] {
                return bad(format!("index {h} repeated or out of range"));
            }
            seen[h - 1] = true;
        }
    }
    if seen.iter().any(|s| !s) {
        return bad("blocks do not cover the arrangement".into());
    }
    if blocks.len() != m.rank() {
        return bad(format!("{} blocks for rank {}", blocks.len(), m.rank()));
    }
    for w in blocks.windows(2) {
        if w[0].iter().max() > w[1].iter().min() {
            return bad("blocks are not listed in the linear order".into());
        }
    }
    let lattice = m.lattice();
    let mut prefix: Vec<usize> = Vec::new();
    for (p, block) in blocks.iter().enumerate() {
        let lower = prefix.clone();
        prefix.extend(block);
        prefix.sort_unstable();
        let (sub, _) = m.arrangement().subarrangement(&prefix)?;
        if sub.lattice().rank() != p + 1 {
            return bad(format!(
                "prefix {} has rank {}",
                p + 1,
                sub.lattice().rank()
            ));
        }
        for (i, &h) in prefix.iter().enumerate() {
            for &k in &prefix[i + 1..] {
                let Some(x) = lattice.closure(&[h, k]) else {
                    continue;
                };
                let flat = &lattice.flats()[x];
                if !lower.iter().any(|&g| flat.contains_hyperplane(g)) {
                    return bad(format!(
                        "no hyperplane below block {} contains H{h} ∩ H{k}",
                        p + 1
                    ));
                }
            }
        }
    }
    Ok(())
}
