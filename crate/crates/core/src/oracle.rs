//! Brute-force ground truth over finite fields: every message vector is
//! encoded and its zero set recorded. Counts are compared with the
//! enumerators evaluated at the field size.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::code::{Code, IndexSet};
use crate::enumerators::{min_distance_from_lattice, omega_from_lattice, specialize_to_field_size};
use crate::error::{Error, Result};
use crate::lattice::{FlatLattice, LatticeOptions};
use crate::par;
use crate::poly::json::bigint_to_json;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    /// Maximum number of codewords to encode.
    pub budget: u64,
    pub parallel: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { budget: DEFAULT_BUDGET, parallel: true }
    }
}

/// Number of zero sets (exact) of the codewords of `code`, keyed by the
/// zero set. Messages are enumerated in lexicographic order, split into
/// independent blocks by their leading digits.
pub fn zero_set_census(code: &Code, opts: OracleOptions) -> Result<BTreeMap<IndexSet, u64>> {
    let f = code
        .field()
        .finite()
        .ok_or_else(|| Error::InvalidInput("brute force needs a finite field".into()))?;
    let (k, n, q) = (code.dim(), code.len(), f.order());
    let total = (0..k).try_fold(1u64, |acc, _| acc.checked_mul(q)).filter(|&t| t <= opts.budget);
    let Some(total) = total else {
        return Err(Error::BudgetExceeded { limit: opts.budget });
    };

    // multiples[r][a] = a * (row r)
    let g = code.generator();
    let multiples: Vec<Vec<Vec<u64>>> = (0..k)
        .map(|r| {
            let row: Vec<u64> = g.row(r).iter().map(finite_value).collect();
            (0..q).map(|a| row.iter().map(|&e| f.mul(a, e)).collect()).collect()
        })
        .collect();

    let mut prefix_len = 0;
    let mut blocks = 1u64;
    while prefix_len < k && blocks < 256 {
        prefix_len += 1;
        blocks *= q;
    }
    let walk_len = k - prefix_len;
    let per_block = total / blocks;

    let partial = par::map_range(0..blocks as usize, opts.parallel, |b| {
        let mut word = vec![0u64; n];
        let mut rest = b as u64;
        for r in (0..prefix_len).rev() {
            let a = (rest % q) as usize;
            rest /= q;
            for (w, m) in word.iter_mut().zip(&multiples[r][a]) {
                *w = f.add(*w, *m);
            }
        }
        let mut counts: HashMap<u128, u64> = HashMap::new();
        if walk_len == 0 {
            *counts.entry(zero_mask(&word)).or_default() += 1;
            return counts;
        }
        // odometer over the remaining digits with partial sums per level
        let mut sums = vec![word; walk_len + 1];
        let mut digits = vec![0usize; walk_len];
        for level in 0..walk_len {
            let (lo, hi) = sums.split_at_mut(level + 1);
            hi[0].copy_from_slice(&lo[level]);
        }
        for _ in 0..per_block {
            *counts.entry(zero_mask(&sums[walk_len])).or_default() += 1;
            let mut level = walk_len;
            while level > 0 {
                level -= 1;
                digits[level] += 1;
                if digits[level] < q as usize {
                    break;
                }
                digits[level] = 0;
            }
            for l in level..walk_len {
                let r = prefix_len + l;
                let (lo, hi) = sums.split_at_mut(l + 1);
                for ((out, base), m) in hi[0].iter_mut().zip(&lo[l]).zip(&multiples[r][digits[l]]) {
                    *out = f.add(*base, *m);
                }
            }
        }
        counts
    });

    let mut census = BTreeMap::new();
    for counts in partial {
        for (mask, c) in counts {
            *census.entry(IndexSet::from_bits(mask)).or_insert(0) += c;
        }
    }
    Ok(census)
}

fn finite_value(e: &crate::algebra::FieldElem) -> u64 {
    match e {
        crate::algebra::FieldElem::Finite(v) => *v,
        crate::algebra::FieldElem::Rational(_) => unreachable!("finite field"),
    }
}

fn zero_mask(word: &[u64]) -> u128 {
    word.iter().enumerate().filter(|(_, &v)| v == 0).fold(0u128, |m, (i, _)| m | 1 << i)
}

/// Weight distribution `A_0..A_n` by exhaustive enumeration.
pub fn brute_weights(code: &Code, opts: OracleOptions) -> Result<Vec<u64>> {
    Ok(weights_from_census(&zero_set_census(code, opts)?, code.len()))
}

fn weights_from_census(census: &BTreeMap<IndexSet, u64>, n: usize) -> Vec<u64> {
    let mut a = vec![0u64; n + 1];
    for (s, c) in census {
        a[n - s.len()] += c;
    }
    a
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatCount {
    pub set: IndexSet,
    pub observed: u64,
    pub predicted: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionCheck {
    pub degree: u32,
    pub field_size: u64,
    pub observed_weights: Vec<u64>,
    pub predicted_weights: Vec<BigInt>,
    pub flats: Vec<FlatCount>,
    /// Observed zero sets that are not flats (always empty for a correct
    /// closure).
    pub stray_zero_sets: Vec<IndexSet>,
    pub min_weight: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub field: String,
    pub n: usize,
    pub k: usize,
    pub predicted_min_distance: usize,
    pub extensions: Vec<ExtensionCheck>,
    pub pass: bool,
}

/// Checks the weight distribution, every `zeta_S` and the minimum distance
/// against brute force over each extension of the given degrees.
pub fn verify_enumerators(
    code: &Code,
    degrees: &[u32],
    lattice: LatticeOptions,
    opts: OracleOptions,
) -> Result<VerifyReport> {
    if code.field().finite().is_none() {
        return Err(Error::InvalidInput("verification needs a finite field".into()));
    }
    if degrees.is_empty() {
        return Err(Error::InvalidInput("at least one extension degree is required".into()));
    }
    let lat = FlatLattice::with_options(code, lattice)?;
    let omega = omega_from_lattice(&lat);
    let predicted_min_distance = min_distance_from_lattice(&lat);
    let n = code.len();
    let mut extensions = Vec::new();
    for &d in degrees {
        let ext = code.extend_degree(d)?;
        let q = ext.field().size().expect("finite");
        let census = zero_set_census(&ext, opts)?;
        let observed_weights = weights_from_census(&census, n);
        let predicted_weights = specialize_to_field_size(&omega, &BigInt::from(q))?;
        let flats: Vec<FlatCount> = lat
            .flats()
            .iter()
            .enumerate()
            .map(|(i, &s)| FlatCount {
                set: s,
                observed: census.get(&s).copied().unwrap_or(0),
                predicted: lat.zeta_at(i).eval(&BigInt::from(q)),
            })
            .collect();
        let stray_zero_sets: Vec<IndexSet> =
            census.keys().filter(|s| lat.index_of(**s).is_none()).copied().collect();
        let min_weight = (1..=n).find(|&w| observed_weights[w] > 0).unwrap_or(0);
        let pass = stray_zero_sets.is_empty()
            && observed_weights.iter().zip(&predicted_weights).all(|(o, p)| BigInt::from(*o) == *p)
            && flats.iter().all(|c| BigInt::from(c.observed) == c.predicted)
            && min_weight == predicted_min_distance;
        extensions.push(ExtensionCheck {
            degree: d,
            field_size: q,
            observed_weights,
            predicted_weights,
            flats,
            stray_zero_sets,
            min_weight,
            pass,
        });
    }
    let pass = extensions.iter().all(|e| e.pass);
    Ok(VerifyReport {
        field: code.field().to_string(),
        n,
        k: code.dim(),
        predicted_min_distance,
        extensions,
        pass,
    })
}

impl VerifyReport {
    pub fn to_json(&self) -> Value {
        let extensions: Vec<Value> = self
            .extensions
            .iter()
            .map(|e| {
                json!({
                    "degree": e.degree,
                    "field_size": e.field_size,
                    "pass": e.pass,
                    "min_weight": e.min_weight,
                    "observed_weights": e.observed_weights,
                    "predicted_weights": e.predicted_weights.iter().map(bigint_to_json).collect::<Vec<_>>(),
                    "flats": e.flats.iter().map(|c| json!({
                        "set": c.set.to_one_based(),
                        "observed": c.observed,
                        "predicted": bigint_to_json(&c.predicted),
                    })).collect::<Vec<_>>(),
                    "stray_zero_sets": e.stray_zero_sets.iter().map(|s| s.to_one_based()).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "field": self.field,
            "n": self.n,
            "k": self.k,
            "predicted_min_distance": self.predicted_min_distance,
            "pass": self.pass,
            "extensions": extensions,
        })
    }
}
