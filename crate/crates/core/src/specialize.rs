//! Reduction of a code over the rationals modulo primes.
//!
//! `C ∩ Z^n` has a Z-basis that is also a Q-basis of `C`; reducing it mod
//! `p` gives a code of the same dimension over F_p. For all but finitely
//! many primes the lattice of saturated sets, and hence the refined
//! enumerator, is unchanged. The primes where it changes are reported.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde_json::{json, Value};

use crate::algebra::{primes, Field, FieldElem, IntMatrix, Matrix};
use crate::code::Code;
use crate::enumerators::rho_from_lattice;
use crate::error::{Error, Result};
use crate::lattice::{FlatLattice, LatticeOptions};
use crate::par;
use crate::poly::WPoly;

/// Primes up to 50.
pub fn default_primes() -> Vec<u64> {
    primes::primes_up_to(50)
}

/// Rows forming a Z-basis of `C ∩ Z^n`: each row is scaled by the lcm of
/// its denominators, then the row lattice is saturated.
pub fn integral_basis(code: &Code) -> Result<IntMatrix> {
    if code.field() != &Field::Rationals {
        return Err(Error::InvalidInput("integral bases are defined for codes over the rationals".into()));
    }
    let g = code.generator();
    let (k, n) = (g.rows(), g.cols());
    let mut data = Vec::with_capacity(k * n);
    for r in 0..k {
        let row: Vec<_> = g
            .row(r)
            .iter()
            .map(|e| match e {
                FieldElem::Rational(v) => v.clone(),
                FieldElem::Finite(_) => unreachable!("rational field"),
            })
            .collect();
        let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        data.extend(row.iter().map(|v| v.numer() * (&lcm / v.denom())));
    }
    Ok(IntMatrix::new(k, n, data)?.row_saturation())
}

/// The code over F_p generated by `basis mod p`. Zero columns are allowed,
/// since a column can vanish mod `p`.
pub fn reduce_mod_p(basis: &IntMatrix, p: u64) -> Result<Code> {
    let field = Field::prime(p)?;
    let rows: Vec<Vec<FieldElem>> = (0..basis.rows())
        .map(|r| basis.row(r).iter().map(|v| field.from_bigint(v)).collect())
        .collect();
    let g = Matrix::from_rows(field.clone(), rows)?;
    if g.rank() < basis.rows() {
        return Err(Error::RankDropped { prime: p });
    }
    Code::new(field, g, true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeResult {
    pub prime: u64,
    pub rho: WPoly,
    pub matches_generic: bool,
    /// Whether the flats over F_p are exactly the flats over Q.
    pub lattice_matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationReport {
    pub n: usize,
    pub k: usize,
    pub generic_rho: WPoly,
    pub per_prime: Vec<PrimeResult>,
    /// Primes whose refined enumerator differs from the generic one.
    pub exceptional_primes: Vec<u64>,
}

impl SpecializationReport {
    pub fn to_json(&self) -> Value {
        let per_prime: Vec<Value> = self
            .per_prime
            .iter()
            .map(|r| {
                json!({
                    "prime": r.prime,
                    "matches_generic": r.matches_generic,
                    "lattice_matches": r.lattice_matches,
                    "rho": r.rho.to_json(),
                })
            })
            .collect();
        json!({
            "field": "rationals",
            "n": self.n,
            "k": self.k,
            "generic_rho": self.generic_rho.to_json(),
            "exceptional_primes": self.exceptional_primes,
            "per_prime": per_prime,
        })
    }
}

/// Compares the refined enumerator over Q with those of the reductions
/// modulo each prime. Only the supplied primes are examined.
pub fn compare_specializations(code: &Code, primes: &[u64], opts: LatticeOptions) -> Result<SpecializationReport> {
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    if primes.is_empty() {
        return Err(Error::InvalidInput("at least one prime is required".into()));
    }
    if let Some(&p) = primes.iter().find(|&&p| !primes::is_prime(p)) {
        return Err(Error::NonPrimeCharacteristic(p));
    }
    let basis = integral_basis(code)?;
    let generic = FlatLattice::with_options(code, opts)?;
    let generic_rho = rho_from_lattice(&generic);
    let results = par::map(&primes, opts.parallel, |&p| -> Result<PrimeResult> {
        let reduced = reduce_mod_p(&basis, p)?;
        let lat = FlatLattice::with_options(&reduced, LatticeOptions { parallel: false, ..opts })?;
        let rho = rho_from_lattice(&lat);
        Ok(PrimeResult {
            prime: p,
            matches_generic: rho == generic_rho,
            lattice_matches: lat.flats() == generic.flats(),
            rho,
        })
    });
    let per_prime = results.into_iter().collect::<Result<Vec<_>>>()?;
    let exceptional_primes = per_prime.iter().filter(|r| !r.matches_generic).map(|r| r.prime).collect();
    Ok(SpecializationReport { n: code.len(), k: code.dim(), generic_rho, per_prime, exceptional_primes })
}

/// Whether the rows of `m` are independent with all elementary divisors 1.
pub fn is_saturated_basis(m: &IntMatrix) -> bool {
    let d = m.elementary_divisors();
    d.len() == m.rows() && d.iter().all(|d| d.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::parse_code;
    use num_traits::One;

    fn q_code(text: &str) -> Code {
        parse_code(text, false).unwrap()
    }

    #[test]
    fn integral_basis_examples() {
        let c = q_code("field rationals\n2 2\n1/2 1/2\n0 1\n");
        let b = integral_basis(&c).unwrap();
        assert!(is_saturated_basis(&b));
        assert_eq!(b.determinant().magnitude(), &One::one());
        let c = q_code("field rationals\n1 2\n2 4\n");
        assert_eq!(integral_basis(&c).unwrap(), IntMatrix::from_i64(&[&[1, 2]]));
        let f2 = q_code("field gf 2\n1 1\n1\n");
        assert!(integral_basis(&f2).is_err());
    }

    #[test]
    fn reduction_keeps_dimension() {
        let b = IntMatrix::identity(3);
        let c = reduce_mod_p(&b, 5).unwrap();
        assert_eq!(c.generator(), &Matrix::identity(Field::prime(5).unwrap(), 3));
        let bad = IntMatrix::from_i64(&[&[2, 4]]);
        assert_eq!(reduce_mod_p(&bad, 2).unwrap_err(), Error::RankDropped { prime: 2 });
        assert_eq!(reduce_mod_p(&b, 4).unwrap_err(), Error::NonPrimeCharacteristic(4));
    }

    #[test]
    fn identity_code_has_no_exceptional_primes() {
        let c = q_code("field rationals\n3 3\n1 0 0\n0 1 0\n0 0 1\n");
        let r = compare_specializations(&c, &[7, 2, 3, 2], LatticeOptions::default()).unwrap();
        assert_eq!(r.per_prime.iter().map(|p| p.prime).collect::<Vec<_>>(), [2, 3, 7]);
        assert!(r.exceptional_primes.is_empty());
        assert!(r.per_prime.iter().all(|p| p.lattice_matches));
    }

    #[test]
    fn column_vanishing_mod_p_is_exceptional() {
        // column (3, 0) vanishes mod 3; (1, 1) and (1, -1) become dependent mod 2
        let c = q_code("field rationals\n2 4\n1 0 3 1\n0 1 0 1\n");
        let r = compare_specializations(&c, &[2, 3, 5], LatticeOptions::default()).unwrap();
        assert_eq!(r.exceptional_primes, [3]);
        let c = q_code("field rationals\n2 3\n1 1 1\n0 1 -1\n");
        let r = compare_specializations(&c, &[2, 3, 5], LatticeOptions::default()).unwrap();
        assert_eq!(r.exceptional_primes, [2]);
        assert!(compare_specializations(&c, &[], LatticeOptions::default()).is_err());
        assert!(compare_specializations(&c, &[6], LatticeOptions::default()).is_err());
    }
}
