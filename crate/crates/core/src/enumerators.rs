//! Comprehensive and refined weight enumerators.
//!
//! `omega = sum_S zeta_S(q) x^|S| y^(n-|S|)` and
//! `rho = sum_S z^dim(S) zeta_S(q) x^|S| y^(n-|S|)` over the flats `S`.
//! The variable `x` marks zero coordinates, so the number of words of weight
//! `w` is the coefficient of `x^(n-w) y^w`.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::code::Code;
use crate::error::{Error, Result};
use crate::lattice::{FlatLattice, LatticeOptions};
use crate::poly::{Monomial, QPoly, WPoly};

fn assemble(lat: &FlatLattice, with_z: bool) -> WPoly {
    let n = lat.code_len() as u32;
    let mut w = WPoly::zero();
    for (i, s) in lat.flats().iter().enumerate() {
        let size = s.len() as u32;
        let z = if with_z { lat.dim(i) as u32 } else { 0 };
        w.add_term(Monomial::new(z, size, n - size), lat.zeta_at(i).clone());
    }
    w
}

pub fn omega_from_lattice(lat: &FlatLattice) -> WPoly {
    assemble(lat, false)
}

pub fn rho_from_lattice(lat: &FlatLattice) -> WPoly {
    assemble(lat, true)
}

/// `n - max |S|` over the proper flats.
pub fn min_distance_from_lattice(lat: &FlatLattice) -> usize {
    let n = lat.code_len();
    let largest = (0..lat.len()).filter(|&i| lat.dim(i) > 0).map(|i| lat.flats()[i].len()).max();
    n - largest.expect("a code of positive dimension has a proper flat")
}

pub fn comprehensive(code: &Code) -> Result<WPoly> {
    Ok(omega_from_lattice(&FlatLattice::new(code)?))
}

pub fn refined(code: &Code) -> Result<WPoly> {
    Ok(rho_from_lattice(&FlatLattice::new(code)?))
}

/// Minimum Hamming distance; the same over every extension of the field.
pub fn min_distance(code: &Code) -> Result<usize> {
    Ok(min_distance_from_lattice(&FlatLattice::new(code)?))
}

/// Characteristic polynomial of the associated arrangement, `zeta` of
/// `closure({})`.
pub fn characteristic_polynomial(code: &Code) -> Result<QPoly> {
    let lat = FlatLattice::new(code)?;
    Ok(lat.zeta_at(0).clone())
}

/// `q^-k omega(q, x + (q-1) y, x - y)`: the comprehensive enumerator of the
/// dual of a `k`-dimensional code over a finite field. Fails with
/// [`Error::NotDivisible`] when the quotient is not a polynomial.
pub fn macwilliams_transform(w: &WPoly, k: u32) -> Result<WPoly> {
    if w.has_z() {
        return Err(Error::InvalidInput("the transform applies to enumerators without z".into()));
    }
    if w.xy_degree().is_none() && !w.is_zero() {
        return Err(Error::InvalidInput("the enumerator must be homogeneous in x and y".into()));
    }
    let one = QPoly::one();
    let substituted = w.substitute_xy(&one, &QPoly::q_minus(1), &one, &-&one);
    substituted.exact_div_q_pow(k)
}

/// Weight distribution `A_0..A_n` at `q = q0`, with `A_w` the coefficient of
/// `x^(n-w) y^w`. A `z` is set to 1. Negative entries are kept: they show
/// that `q0` is not a field size the code can be extended to.
pub fn specialize_to_field_size(w: &WPoly, q0: &BigInt) -> Result<Vec<BigInt>> {
    let w = w.set_z_one();
    let n = w
        .xy_degree()
        .ok_or_else(|| Error::InvalidInput("the enumerator must be homogeneous in x and y".into()))?;
    let mut a = vec![BigInt::default(); n as usize + 1];
    for (m, v) in w.eval_q(q0) {
        a[m.y as usize] += v;
    }
    Ok(a)
}

#[derive(Clone, Debug)]
pub struct EnumeratorResult {
    pub field: String,
    pub n: usize,
    pub k: usize,
    pub omega: WPoly,
    pub rho: WPoly,
    pub flat_count: usize,
    pub min_distance: usize,
    pub elapsed: Duration,
}

impl EnumeratorResult {
    pub fn compute(code: &Code, opts: LatticeOptions) -> Result<Self> {
        let start = Instant::now();
        let lat = FlatLattice::with_options(code, opts)?;
        Ok(EnumeratorResult {
            field: code.field().to_string(),
            n: code.len(),
            k: code.dim(),
            omega: omega_from_lattice(&lat),
            rho: rho_from_lattice(&lat),
            flat_count: lat.len(),
            min_distance: min_distance_from_lattice(&lat),
            elapsed: start.elapsed(),
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "field": self.field,
            "n": self.n,
            "k": self.k,
            "flat_count": self.flat_count,
            "min_distance": self.min_distance,
            "omega": self.omega.to_json(),
            "rho": self.rho.to_json(),
            "elapsed_ms": self.elapsed.as_secs_f64() * 1e3,
        })
    }
}
