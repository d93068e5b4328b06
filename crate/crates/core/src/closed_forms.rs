//! Closed-form enumerators for code families, and the extended binary Golay
//! code with its tabulated orbit data.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Pow};
use serde::Deserialize;

use crate::algebra::{Field, Matrix};
use crate::code::{Code, IndexSet};
use crate::error::{Error, Result};
use crate::poly::{Monomial, QPoly, WPoly};

/// Gaussian binomial `[m choose i]_p`.
pub fn gaussian_binomial(m: u32, i: u32, p: u64) -> Result<BigInt> {
    if i > m || p < 2 {
        return Err(Error::OutOfRange(format!("gaussian binomial ({m}, {i}) at base {p}")));
    }
    let p = BigInt::from(p);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..i {
        num *= Pow::pow(&p, m - j) - 1u32;
        den *= Pow::pow(&p, j + 1) - 1u32;
    }
    Ok(num / den)
}

/// `(q - 1)(q - p)...(q - p^(r-1))`.
fn falling_powers(p: u64, r: u32) -> QPoly {
    let p = BigInt::from(p);
    (0..r).fold(QPoly::one(), |acc, j| &acc * &QPoly::q_minus(Pow::pow(&p, j)))
}

fn exponent(v: &BigInt) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::OutOfRange(format!("exponent {v} too large")))
}

/// Refined enumerator of the dual of the Hamming code with `m` check
/// symbols over a field of `p` elements (the simplex code), of length
/// `[m choose 1]_p`.
pub fn hamming_dual_refined(p: u64, m: u32) -> Result<WPoly> {
    if m == 0 || crate::algebra::primes::prime_power(p).is_none() {
        return Err(Error::OutOfRange(format!("hamming parameters p={p}, m={m}")));
    }
    let n = exponent(&gaussian_binomial(m, 1, p)?)?;
    let mut w = WPoly::zero();
    for i in 0..=m {
        let size = if i == 0 { 0 } else { exponent(&gaussian_binomial(i, 1, p)?)? };
        let coeff = falling_powers(p, m - i).scale(&gaussian_binomial(m, i, p)?);
        w.add_term(Monomial::new(m - i, size, n - size), coeff);
    }
    Ok(w)
}

/// Refined enumerator of any `[n, k]` MDS code.
pub fn mds_refined(n: u32, k: u32) -> Result<WPoly> {
    if k == 0 || k > n {
        return Err(Error::OutOfRange(format!("MDS parameters n={n}, k={k}")));
    }
    let b = |a: u32, c: u32| binomial(BigInt::from(a), BigInt::from(c));
    let mut w = WPoly::term(Monomial::new(0, n, 0), QPoly::one());
    for i in 0..k {
        let mut inner = QPoly::zero();
        for j in 1..=k - i {
            let sign = if (k - i - j) % 2 == 0 { 1 } else { -1 };
            let qj_minus_1 = &QPoly::monomial(1, j as usize) - &QPoly::one();
            inner += &qj_minus_1.scale(&(b(n - i, k - i - j) * sign));
        }
        w.add_term(Monomial::new(k - i, i, n - i), inner.scale(&b(n, i)));
    }
    Ok(w)
}

/// Generator polynomial `x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1` of the
/// binary Golay code, a factor of `x^23 - 1` over F_2, ascending.
pub const GOLAY_FACTOR: [i64; 12] = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1];

/// `[24, 12, 8]` extended binary Golay code: the first 12 rows of the
/// 23 x 23 circulant of [`GOLAY_FACTOR`] (the factor evaluated at the
/// companion matrix of `x^23 - 1`), with a column of ones appended.
pub fn golay24_generator() -> Code {
    let rows: Vec<Vec<i64>> = (0..12)
        .map(|shift| {
            let mut row = vec![0i64; 24];
            for (d, &c) in GOLAY_FACTOR.iter().enumerate() {
                row[(shift + d) % 23] = c;
            }
            row[23] = 1;
            row
        })
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    let g = Matrix::from_i64(Field::prime(2).expect("2 is prime"), &refs).expect("entries in F_2");
    Code::from_generator(g).expect("the Golay generator has full rank")
}

#[derive(Deserialize)]
struct FixtureRow {
    representative: Vec<usize>,
    size: usize,
    dim: usize,
    orbit: u64,
    alpha: u32,
    p: Option<String>,
    monomial: FixtureMonomial,
}

#[derive(Deserialize)]
struct FixtureMonomial {
    z: u32,
    x: u32,
    y: u32,
}

#[derive(Deserialize)]
struct Fixture {
    constants: BTreeMap<String, Vec<i64>>,
    rows: Vec<FixtureRow>,
}

const GOLAY_TABLE: &str = include_str!("../data/golay24_table.json");

/// One orbit of saturated sets of the extended binary Golay code under its
/// automorphism group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GolayTableRow {
    pub representative: IndexSet,
    pub size: usize,
    pub dim: usize,
    pub orbit_length: u64,
    /// `alpha_i` or `alpha_i*p_a_b`, naming the factors of `zeta`.
    pub zeta_formula: String,
    pub zeta: QPoly,
    pub monomial: Monomial,
}

/// The 19 orbit rows, with `zeta = alpha_i(q) * p` and
/// `alpha_i(q) = (q - 1)(q - 2)...(q - 2^(i-1))`.
pub fn golay24_table() -> Vec<GolayTableRow> {
    let fixture: Fixture = serde_json::from_str(GOLAY_TABLE).expect("valid Golay fixture");
    fixture
        .rows
        .into_iter()
        .map(|r| {
            let alpha = falling_powers(2, r.alpha);
            let (zeta, formula) = match &r.p {
                Some(name) => {
                    let p = QPoly::from_i64(&fixture.constants[name]);
                    (&alpha * &p, format!("alpha_{}*{name}", r.alpha))
                }
                None if r.alpha == 0 => (alpha, "1".to_string()),
                None => (alpha, format!("alpha_{}", r.alpha)),
            };
            GolayTableRow {
                representative: IndexSet::from_one_based(&r.representative, 24).expect("positions in 1..24"),
                size: r.size,
                dim: r.dim,
                orbit_length: r.orbit,
                zeta_formula: formula,
                zeta,
                monomial: Monomial::new(r.monomial.z, r.monomial.x, r.monomial.y),
            }
        })
        .collect()
}

/// Sum over the table rows of `orbit_length * zeta * monomial`.
pub fn golay24_table_rho() -> WPoly {
    let mut w = WPoly::zero();
    for row in golay24_table() {
        w.add_term(row.monomial, row.zeta.scale(&BigInt::from(row.orbit_length)));
    }
    w
}
