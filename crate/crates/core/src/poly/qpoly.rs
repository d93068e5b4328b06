use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Polynomial in `q` with integer coefficients, ascending powers, trailing
/// zeros stripped (the zero polynomial has no coefficients).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        QPoly::from_coeffs(vec![c.into()])
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        QPoly::from_i64(&[0, 1])
    }

    /// `q - c`
    pub fn q_minus(c: impl Into<BigInt>) -> Self {
        QPoly::from_coeffs(vec![-c.into(), BigInt::one()])
    }

    /// `c * q^d`
    pub fn monomial(c: impl Into<BigInt>, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d];
        coeffs.push(c.into());
        QPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Product of linear factors `prod (q - c)`.
    pub fn from_roots(roots: &[i64]) -> Self {
        roots.iter().fold(QPoly::one(), |acc, &c| &acc * &QPoly::q_minus(c))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, q0: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * q0 + c)
    }

    pub fn eval_i64(&self, q0: i64) -> BigInt {
        self.eval(&BigInt::from(q0))
    }

    pub fn pow(&self, e: u32) -> QPoly {
        (0..e).fold(QPoly::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, k: &BigInt) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `self / q^k` if every coefficient below `q^k` vanishes.
    pub fn exact_div_q_pow(&self, k: usize) -> Option<QPoly> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(QPoly::from_coeffs(self.coeffs.iter().skip(k).cloned().collect()))
    }

    /// Exact quotient by `q - c`, if `c` is a root.
    pub fn div_by_linear(&self, c: &BigInt) -> Option<QPoly> {
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        // synthetic division, highest coefficient first
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        let mut carry = BigInt::zero();
        for a in self.coeffs.iter().rev() {
            carry = carry * c + a;
            out.push(carry.clone());
        }
        let rem = out.pop().unwrap();
        if !rem.is_zero() {
            return None;
        }
        out.reverse();
        Some(QPoly::from_coeffs(out))
    }

    /// gcd of the coefficients with the sign of the leading coefficient.
    pub fn content(&self) -> BigInt {
        let g = self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        match self.leading() {
            Some(l) if l.is_negative() => -g,
            _ => g,
        }
    }

    /// Readable form with the integer content and small integer roots pulled
    /// out, e.g. `6*(q-1)*(q-4)`. Display only.
    pub fn format_factored(&self) -> String {
        if self.degree().unwrap_or(0) == 0 {
            return self.to_string();
        }
        let content = self.content();
        let mut rest = QPoly::from_coeffs(self.coeffs.iter().map(|c| c / &content).collect());
        let mut factors: Vec<(i64, u32)> = Vec::new();
        let candidates = (0..=64i64).flat_map(|c| if c == 0 { vec![0] } else { vec![c, -c] });
        for c in candidates {
            let cb = BigInt::from(c);
            let mut mult = 0;
            while rest.degree().unwrap_or(0) > 0 {
                match rest.div_by_linear(&cb) {
                    Some(d) => {
                        rest = d;
                        mult += 1;
                    }
                    None => break,
                }
            }
            if mult > 0 {
                factors.push((c, mult));
            }
        }
        factors.sort_by_key(|&(c, _)| if c == 0 { i64::MIN } else { c });
        let mut parts = Vec::new();
        let lead = if rest.degree() == Some(0) { content * rest.coeff(0) } else { content };
        if !lead.is_one() {
            parts.push(if lead == -BigInt::one() { "-1".to_string() } else { lead.to_string() });
        }
        for (c, mult) in factors {
            let base = match c {
                0 => "q".to_string(),
                c if c > 0 => format!("(q-{c})"),
                c => format!("(q+{})", -c),
            };
            parts.push(if mult > 1 { format!("{base}^{mult}") } else { base });
        }
        if rest.degree().unwrap_or(0) > 0 {
            parts.push(format!("({rest})"));
        }
        if parts.is_empty() {
            return "1".into();
        }
        parts.join("*")
    }
}

impl fmt::Display for QPoly {
    /// Expanded, descending powers: `q^3-6*q^2+15*q-10`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            match d {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if d == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_examples() {
        let p = &QPoly::q_minus(1) * &QPoly::q_minus(2);
        assert_eq!(p, QPoly::from_i64(&[2, -3, 1]));
        assert_eq!(p.eval_i64(2), BigInt::zero());
        let hexa_top = &QPoly::q_minus(1) * &QPoly::from_i64(&[10, -5, 1]);
        assert_eq!(hexa_top.eval_i64(4), BigInt::from(18));
    }

    #[test]
    fn display() {
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::from_i64(&[-10, 15, -6, 1]).to_string(), "q^3-6*q^2+15*q-10");
        assert_eq!(QPoly::from_i64(&[0, -1]).to_string(), "-q");
        assert_eq!(QPoly::constant(-7).to_string(), "-7");
    }

    #[test]
    fn factored_display() {
        let p = QPoly::from_roots(&[1, 4]).scale(&BigInt::from(6));
        assert_eq!(p.format_factored(), "6*(q-1)*(q-4)");
        let p = &QPoly::q_minus(1) * &QPoly::from_i64(&[10, -5, 1]);
        assert_eq!(p.format_factored(), "(q-1)*(q^2-5*q+10)");
        let p = QPoly::from_roots(&[1, 4, 4]).scale(&BigInt::from(220));
        assert_eq!(p.format_factored(), "220*(q-1)*(q-4)^2");
        assert_eq!(QPoly::constant(5).format_factored(), "5");
        assert_eq!((-QPoly::q_minus(1)).format_factored(), "-1*(q-1)");
    }

    #[test]
    fn exact_division() {
        let p = QPoly::monomial(1, 3);
        assert_eq!(p.exact_div_q_pow(3), Some(QPoly::one()));
        assert_eq!(QPoly::from_i64(&[0, 1, 1]).exact_div_q_pow(2), None);
        assert_eq!(
            QPoly::from_i64(&[2, -3, 1]).div_by_linear(&BigInt::from(2)),
            Some(QPoly::q_minus(1))
        );
        assert_eq!(QPoly::from_i64(&[2, -3, 1]).div_by_linear(&BigInt::from(3)), None);
    }
}
