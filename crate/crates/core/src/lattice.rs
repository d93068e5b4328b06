//! The lattice of saturated subsets (flats) of a code and the counting
//! polynomials `zeta_S(q)`.
//!
//! Flats are stored under plain inclusion, smallest first; the customary
//! presentation orders the lattice by reversed inclusion, so "covers" here
//! are the next larger flats. `zeta_S(|L|)` counts the words of the scalar
//! extension `C_L` whose zero set is exactly `S`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::code::{Code, IndexSet};
use crate::error::{Error, Result};
use crate::par;
use crate::poly::QPoly;

pub const DEFAULT_FLAT_BUDGET: u64 = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeOptions {
    /// Maximum number of flats before enumeration stops with
    /// [`Error::BudgetExceeded`].
    pub flat_budget: u64,
    pub parallel: bool,
}

impl Default for LatticeOptions {
    fn default() -> Self {
        LatticeOptions { flat_budget: DEFAULT_FLAT_BUDGET, parallel: true }
    }
}

#[derive(Clone, Debug)]
pub struct FlatLattice {
    n: usize,
    k: usize,
    flats: Vec<IndexSet>,
    dims: Vec<usize>,
    children: Vec<Vec<usize>>,
    zeta: Vec<QPoly>,
    index: HashMap<IndexSet, usize>,
}

/// Flats covering `flat`: the closures of `flat + {i}`. They partition the
/// positions outside `flat`, so each position is tried at most once.
fn covers(code: &Code, flat: IndexSet) -> Vec<IndexSet> {
    let n = code.len();
    let basis = code.span_of(flat);
    let mut remaining = flat.complement(n);
    let mut out = Vec::new();
    if basis.rank() + 1 == code.dim() {
        if !remaining.is_empty() {
            out.push(IndexSet::full(n));
        }
        return out;
    }
    while let Some(i) = remaining.iter().next() {
        let mut b = basis.clone();
        b.insert(code.column(i));
        let mut cover = flat.with(i);
        for j in remaining.iter().skip(1) {
            if b.contains(code.column(j)) {
                cover.insert(j);
            }
        }
        remaining = remaining.intersection(cover.complement(n));
        out.push(cover);
    }
    out
}

impl FlatLattice {
    pub fn new(code: &Code) -> Result<Self> {
        FlatLattice::with_options(code, LatticeOptions::default())
    }

    /// Breadth-first enumeration from `closure({})`, one dimension level at a
    /// time. Each level is deduplicated and sorted before the next one is
    /// expanded, so the result does not depend on scheduling.
    pub fn with_options(code: &Code, opts: LatticeOptions) -> Result<Self> {
        let (n, k) = (code.len(), code.dim());
        let bottom = code.closure(IndexSet::EMPTY);
        let mut levels: Vec<Vec<IndexSet>> = vec![vec![bottom]];
        let mut level_covers: Vec<Vec<Vec<IndexSet>>> = Vec::new();
        let mut total = 1u64;
        loop {
            let current = levels.last().expect("at least one level");
            let cov = par::map(current, opts.parallel, |&f| covers(code, f));
            let mut next: Vec<IndexSet> = cov.iter().flatten().copied().collect();
            next.sort_unstable();
            next.dedup();
            level_covers.push(cov);
            if next.is_empty() {
                break;
            }
            total += next.len() as u64;
            if total > opts.flat_budget {
                return Err(Error::BudgetExceeded { limit: opts.flat_budget });
            }
            levels.push(next);
        }

        let mut entries: Vec<(IndexSet, usize, Vec<IndexSet>)> = Vec::with_capacity(total as usize);
        for (depth, (level, cov)) in levels.into_iter().zip(level_covers).enumerate() {
            for (f, c) in level.into_iter().zip(cov) {
                entries.push((f, k - depth, c));
            }
        }
        entries.sort_unstable_by_key(|e| e.0);
        let index: HashMap<IndexSet, usize> = entries.iter().enumerate().map(|(i, e)| (e.0, i)).collect();
        let mut flats = Vec::with_capacity(entries.len());
        let mut dims = Vec::with_capacity(entries.len());
        let mut children = Vec::with_capacity(entries.len());
        for (f, d, c) in entries {
            flats.push(f);
            dims.push(d);
            let mut ch: Vec<usize> = c.iter().map(|s| index[s]).collect();
            ch.sort_unstable();
            children.push(ch);
        }
        let zeta = compute_zeta(&flats, &dims, opts.parallel);
        debug_assert_eq!(*flats.last().unwrap(), IndexSet::full(n));
        Ok(FlatLattice { n, k, flats, dims, children, zeta, index })
    }

    pub fn code_len(&self) -> usize {
        self.n
    }

    pub fn code_dim(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// Flats sorted by cardinality, then lexicographically.
    pub fn flats(&self) -> &[IndexSet] {
        &self.flats
    }

    pub fn dim(&self, i: usize) -> usize {
        self.dims[i]
    }

    /// Indices of the flats covering flat `i`.
    pub fn children(&self, i: usize) -> &[usize] {
        &self.children[i]
    }

    pub fn zeta_at(&self, i: usize) -> &QPoly {
        &self.zeta[i]
    }

    pub fn index_of(&self, s: IndexSet) -> Option<usize> {
        self.index.get(&s).copied()
    }

    /// `closure({})`, the smallest flat.
    pub fn bottom(&self) -> IndexSet {
        self.flats[0]
    }

    fn require(&self, s: IndexSet) -> Result<usize> {
        self.index_of(s).ok_or(Error::NotAFlat)
    }

    pub fn zeta(&self, s: IndexSet) -> Result<&QPoly> {
        Ok(&self.zeta[self.require(s)?])
    }

    /// Indices of the flats `U` with `s <= U <= t`, smallest first.
    fn interval(&self, s: usize, t: IndexSet) -> Vec<usize> {
        let lo = self.flats[s];
        (s..self.flats.len())
            .filter(|&u| lo.is_subset(self.flats[u]) && self.flats[u].is_subset(t))
            .collect()
    }

    /// `mu(s, u)` for every `u` in the interval, in interval order.
    fn mobius_row(&self, interval: &[usize]) -> Vec<BigInt> {
        let mut mu: Vec<BigInt> = Vec::with_capacity(interval.len());
        for (a, &u) in interval.iter().enumerate() {
            if a == 0 {
                mu.push(BigInt::one());
                continue;
            }
            let fu = self.flats[u];
            let mut sum = BigInt::zero();
            for (b, &v) in interval[..a].iter().enumerate() {
                if self.flats[v].is_strict_subset(fu) {
                    sum += &mu[b];
                }
            }
            mu.push(-sum);
        }
        mu
    }

    /// Moebius function of the interval `[s, t]` under inclusion.
    pub fn mobius(&self, s: IndexSet, t: IndexSet) -> Result<BigInt> {
        let si = self.require(s)?;
        self.require(t)?;
        if !s.is_subset(t) {
            return Err(Error::NotComparable);
        }
        let interval = self.interval(si, t);
        Ok(self.mobius_row(&interval).pop().expect("interval contains t"))
    }

    /// `zeta_S = sum over flats T >= S of mu(S, T) q^dim(T)`, computed
    /// independently of the stored recursion.
    pub fn zeta_via_mobius(&self, s: IndexSet) -> Result<QPoly> {
        let si = self.require(s)?;
        let interval = self.interval(si, IndexSet::full(self.n));
        let mu = self.mobius_row(&interval);
        let mut z = QPoly::zero();
        for (&u, m) in interval.iter().zip(&mu) {
            z += &QPoly::monomial(m.clone(), self.dims[u]);
        }
        Ok(z)
    }

    /// `{"n", "k", "flats": [{"set": [1-based], "dim", "zeta": [coeffs]}]}`.
    pub fn to_json(&self) -> Value {
        let flats: Vec<Value> = (0..self.len())
            .map(|i| {
                json!({
                    "set": self.flats[i].to_one_based(),
                    "dim": self.dims[i],
                    "zeta": self.zeta[i].to_json(),
                })
            })
            .collect();
        json!({"n": self.n, "k": self.k, "flats": flats})
    }
}

/// `zeta_S = q^dim(S) - sum of zeta_T over flats T strictly containing S`.
/// Flats of equal cardinality are incomparable, so each cardinality class is
/// handled in one parallel step, largest first.
fn compute_zeta(flats: &[IndexSet], dims: &[usize], parallel: bool) -> Vec<QPoly> {
    let m = flats.len();
    let mut zeta = vec![QPoly::zero(); m];
    let mut end = m;
    while end > 0 {
        let size = flats[end - 1].len();
        let start = flats[..end].partition_point(|f| f.len() < size);
        let done = &zeta[end..];
        let bits: Vec<u128> = flats[end..].iter().map(|f| f.bits()).collect();
        let values = par::map_range(start..end, parallel, |i| {
            let s = flats[i].bits();
            let mut z = QPoly::monomial(1, dims[i]);
            for (t, zt) in bits.iter().zip(done) {
                if s & !t == 0 {
                    z -= zt;
                }
            }
            z
        });
        for (i, v) in (start..end).zip(values) {
            zeta[i] = v;
        }
        end = start;
    }
    zeta
}
