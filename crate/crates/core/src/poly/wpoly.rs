use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::qpoly::QPoly;
use crate::error::{Error, Result};

/// Exponents of `z`, `x` and `y` in a term.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub z: u32,
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { z: 0, x: 0, y: 0 };

    pub fn new(z: u32, x: u32, y: u32) -> Self {
        Monomial { z, x, y }
    }

    fn mul(self, o: Monomial) -> Monomial {
        Monomial { z: self.z + o.z, x: self.x + o.x, y: self.y + o.y }
    }
}

/// Polynomial in `z, x, y` with [`QPoly`] coefficients. No zero
/// coefficients are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WPoly {
    terms: BTreeMap<Monomial, QPoly>,
}

impl WPoly {
    pub fn zero() -> Self {
        WPoly::default()
    }

    pub fn one() -> Self {
        WPoly::term(Monomial::ONE, QPoly::one())
    }

    pub fn term(m: Monomial, c: QPoly) -> Self {
        let mut w = WPoly::zero();
        w.add_term(m, c);
        w
    }

    pub fn constant(c: QPoly) -> Self {
        WPoly::term(Monomial::ONE, c)
    }

    pub fn x() -> Self {
        WPoly::term(Monomial::new(0, 1, 0), QPoly::one())
    }

    pub fn y() -> Self {
        WPoly::term(Monomial::new(0, 0, 1), QPoly::one())
    }

    pub fn z() -> Self {
        WPoly::term(Monomial::new(1, 0, 0), QPoly::one())
    }

    /// Adds `c * m`, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: QPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> QPoly {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// Terms in canonical order (descending `z`, then `x`, then `y`).
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &QPoly)> {
        self.terms.iter().rev().map(|(m, c)| (*m, c))
    }

    pub fn has_z(&self) -> bool {
        self.terms.keys().any(|m| m.z > 0)
    }

    /// Common `x + y` degree of all terms, if there is one.
    pub fn xy_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.x + m.y);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: &QPoly) -> WPoly {
        let mut out = WPoly::zero();
        for (m, a) in &self.terms {
            out.add_term(*m, a * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> WPoly {
        (0..e).fold(WPoly::one(), |acc, _| &acc * self)
    }

    /// Sets `z = 1`.
    pub fn set_z_one(&self) -> WPoly {
        let mut out = WPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(Monomial { z: 0, ..*m }, c.clone());
        }
        out
    }

    /// Substitutes `x <- a*x + b*y` and `y <- c*x + d*y`; `z` is untouched.
    pub fn substitute_xy(&self, a: &QPoly, b: &QPoly, c: &QPoly, d: &QPoly) -> WPoly {
        let lin = |s: &QPoly, t: &QPoly| {
            let mut w = WPoly::zero();
            w.add_term(Monomial::new(0, 1, 0), s.clone());
            w.add_term(Monomial::new(0, 0, 1), t.clone());
            w
        };
        let max_x = self.terms.keys().map(|m| m.x).max().unwrap_or(0);
        let max_y = self.terms.keys().map(|m| m.y).max().unwrap_or(0);
        let powers = |base: WPoly, max: u32| {
            let mut v = vec![WPoly::one()];
            for i in 0..max as usize {
                let next = &v[i] * &base;
                v.push(next);
            }
            v
        };
        let xs = powers(lin(a, b), max_x);
        let ys = powers(lin(c, d), max_y);
        let mut out = WPoly::zero();
        for (m, coeff) in &self.terms {
            let prod = &xs[m.x as usize] * &ys[m.y as usize];
            for (pm, pc) in prod.terms {
                out.add_term(Monomial { z: m.z, ..pm }, coeff * &pc);
            }
        }
        out
    }

    /// Divides every coefficient by `q^k`.
    pub fn exact_div_q_pow(&self, k: u32) -> Result<WPoly> {
        let mut out = WPoly::zero();
        for (m, c) in &self.terms {
            let quotient = c.exact_div_q_pow(k as usize).ok_or(Error::NotDivisible(k))?;
            out.add_term(*m, quotient);
        }
        Ok(out)
    }

    /// Evaluates the `q` coefficients at `q0`.
    pub fn eval_q(&self, q0: &BigInt) -> BTreeMap<Monomial, BigInt> {
        self.terms
            .iter()
            .map(|(m, c)| (*m, c.eval(q0)))
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }

    /// Evaluates at `z = 1, x = 1, y = 1`, leaving a polynomial in `q`.
    pub fn sum_coeffs(&self) -> QPoly {
        let mut acc = QPoly::zero();
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }
}

impl<'a> Add<&'a WPoly> for &'a WPoly {
    type Output = WPoly;
    fn add(self, rhs: &WPoly) -> WPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a WPoly> for &'a WPoly {
    type Output = WPoly;
    fn sub(self, rhs: &WPoly) -> WPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<'a> Mul<&'a WPoly> for &'a WPoly {
    type Output = WPoly;
    fn mul(self, rhs: &WPoly) -> WPoly {
        let mut out = WPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(*m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &WPoly {
    type Output = WPoly;
    fn neg(self) -> WPoly {
        WPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Add for WPoly {
    type Output = WPoly;
    fn add(self, rhs: WPoly) -> WPoly {
        &self + &rhs
    }
}

impl Sub for WPoly {
    type Output = WPoly;
    fn sub(self, rhs: WPoly) -> WPoly {
        &self - &rhs
    }
}

impl Mul for WPoly {
    type Output = WPoly;
    fn mul(self, rhs: WPoly) -> WPoly {
        &self * &rhs
    }
}
