//! Dense univariate polynomials over a prime field `F_p`, coefficients in
//! ascending order with trailing zeros stripped. Just enough to validate and
//! reduce modulo an extension-field modulus.

use super::primes::{mul_mod, pow_mod, prime_factors};

pub(crate) fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    trim(out)
}

/// Remainder of `a` modulo a nonzero `f`.
pub(crate) fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let df = f.len() - 1;
    let lead_inv = inv_mod(f[df], p);
    while r.len() > df {
        let shift = r.len() - 1 - df;
        let c = mul_mod(*r.last().unwrap(), lead_inv, p);
        for (i, &fi) in f.iter().enumerate() {
            let t = mul_mod(c, fi, p);
            r[shift + i] = (r[shift + i] + p - t) % p;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let inv = inv_mod(lead, p);
        for c in &mut a {
            *c = mul_mod(*c, inv, p);
        }
    }
    a
}

fn pow_mod_poly(base: &[u64], mut exp: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = rem(base, f, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), f, p);
        }
        b = rem(&mul(&b, &b, p), f, p);
        exp >>= 1;
    }
    acc
}

/// `x^(p^i) mod f` for `i = 0..=m`.
fn frobenius_powers(f: &[u64], m: usize, p: u64) -> Vec<Vec<u64>> {
    let mut out = vec![rem(&[0, 1], f, p)];
    for _ in 0..m {
        let next = pow_mod_poly(out.last().unwrap(), p, f, p);
        out.push(next);
    }
    out
}

pub(crate) fn eval(f: &[u64], x: u64, p: u64) -> u64 {
    f.iter().rev().fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
}

/// Root search over all of `F_p`; decides irreducibility for degree at most 3.
pub(crate) fn irreducible_by_roots(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    debug_assert!((1..=3).contains(&deg));
    deg == 1 || (0..p).all(|x| eval(f, x, p) != 0)
}

/// Rabin's test: `f` of degree `m` is irreducible iff `x^(p^m) = x mod f` and
/// `gcd(x^(p^(m/r)) - x, f) = 1` for every prime `r | m`.
pub(crate) fn irreducible_by_ddf(f: &[u64], p: u64) -> bool {
    let m = f.len() - 1;
    if m == 0 {
        return false;
    }
    let frob = frobenius_powers(f, m, p);
    let x = rem(&[0, 1], f, p);
    if frob[m] != x {
        return false;
    }
    prime_factors(m as u64).into_iter().all(|r| {
        let h = sub(&frob[m / r as usize], &[0, 1], p);
        gcd(&h, f, p).len() == 1
    })
}

pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = match f.len() {
        0 | 1 => return false,
        n => n - 1,
    };
    if deg <= 3 && p <= 1 << 20 {
        irreducible_by_roots(f, p)
    } else {
        irreducible_by_ddf(f, p)
    }
}

/// First monic irreducible polynomial of degree `m` when the lower
/// coefficients `c_0..c_{m-1}` are read as a base-`p` number, ascending.
pub(crate) fn first_irreducible(p: u64, m: u32) -> Vec<u64> {
    let count = p.checked_pow(m).expect("extension size overflows u64");
    for code in 0..count {
        let mut f = Vec::with_capacity(m as usize + 1);
        let mut r = code;
        for _ in 0..m {
            f.push(r % p);
            r /= p;
        }
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_irreducibles() {
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[0, 0, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
        assert!(!is_irreducible(&[1, 0, 0, 0, 1], 2));
        // (x^2+x+1)^2 has no roots but is reducible
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
    }

    #[test]
    fn root_and_ddf_tests_agree_in_low_degree() {
        for p in [2u64, 3, 5, 7] {
            for deg in 1..=3u32 {
                let total = p.pow(deg);
                for code in 0..total {
                    let mut f: Vec<u64> = (0..deg).map(|i| code / p.pow(i) % p).collect();
                    f.push(1);
                    assert_eq!(
                        irreducible_by_roots(&f, p),
                        irreducible_by_ddf(&f, p),
                        "p={p} f={f:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        // number of monic irreducibles of degree 4 over F_2 is 3, degree 6 is 9
        let count = |p: u64, m: u32| {
            (0..p.pow(m))
                .filter(|code| {
                    let mut f: Vec<u64> = (0..m).map(|i| code / p.pow(i) % p).collect();
                    f.push(1);
                    irreducible_by_ddf(&f, p)
                })
                .count()
        };
        assert_eq!(count(2, 4), 3);
        assert_eq!(count(2, 6), 9);
        assert_eq!(count(3, 4), 18);
    }

    #[test]
    fn default_moduli() {
        assert_eq!(first_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(first_irreducible(3, 2), vec![1, 0, 1]);
        assert_eq!(first_irreducible(2, 4), vec![1, 1, 0, 0, 1]);
    }
}
