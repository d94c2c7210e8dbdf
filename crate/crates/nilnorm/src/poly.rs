//! Integer polynomials and cyclotomic factorization.
//!
//! Coefficients are `i64`; every polynomial handled here is a divisor of a
//! product of `x^n - 1` and `x^n + 1` factors of modest degree, so the
//! coefficients stay tiny.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;

/// Dense integer polynomial, coefficients in ascending degree order, no
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![1] }
    }

    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        let mut c = coeffs.to_vec();
        while c.last() == Some(&0) {
            c.pop();
        }
        IntPoly { coeffs: c }
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![0i64; n + 1];
        c[0] = -1;
        c[n] = 1;
        IntPoly { coeffs: c }
    }

    /// `x^n + 1`.
    pub fn x_pow_plus_one(n: usize) -> Self {
        let mut c = vec![0i64; n + 1];
        c[0] = 1;
        c[n] = 1;
        IntPoly { coeffs: c }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j]
                    .checked_add(a.checked_mul(b).expect("coefficient overflow"))
                    .expect("coefficient overflow");
            }
        }
        IntPoly::from_coeffs(&out)
    }

    pub fn pow(&self, k: usize) -> IntPoly {
        let mut out = IntPoly::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Exact division; `None` if the division leaves a remainder (requires a
    /// monic or at least invertible-lead divisor over the integers).
    pub fn exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return None;
        }
        let lead = *divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let out_len = self.coeffs.len() - divisor.coeffs.len() + 1;
        let mut out = vec![0i64; out_len];
        for k in (0..out_len).rev() {
            let top = rem[k + divisor.coeffs.len() - 1];
            if top % lead != 0 {
                return None;
            }
            let q = top / lead;
            out[k] = q;
            if q != 0 {
                for (j, &d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= q * d;
                }
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return None;
        }
        Some(IntPoly::from_coeffs(&out))
    }

    pub fn eval_i64(&self, x: i64) -> i64 {
        let mut v = 0i64;
        for &c in self.coeffs.iter().rev() {
            v = v * x + c;
        }
        v
    }
}

impl core::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            let body = match k {
                0 => format!("{mag}"),
                1 if mag == 1 => "x".into(),
                1 => format!("{mag}x"),
                _ if mag == 1 => format!("x^{k}"),
                _ => format!("{mag}x^{k}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

fn divisors(n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// The `n`-th cyclotomic polynomial via `(x^n - 1) / prod_{d|n, d<n} phi_d`.
pub fn cyclotomic(n: usize) -> IntPoly {
    assert!(n > 0);
    if n == 1 {
        return IntPoly::from_coeffs(&[-1, 1]);
    }
    let mut p = IntPoly::x_pow_minus_one(n);
    for d in divisors(n) {
        if d < n {
            p = p
                .exact_div(&cyclotomic(d))
                .expect("x^n - 1 is divisible by phi_d for every d | n");
        }
    }
    p
}

/// Euler's phi, used to bound the search in [`cyclotomic_factor`].
fn euler_phi(mut n: usize) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Factor a monic integer polynomial with all roots on the unit circle into
/// cyclotomic polynomials. Returns `(n, multiplicity)` pairs sorted by `n`.
pub fn cyclotomic_factor(p: &IntPoly) -> Result<Vec<(usize, usize)>, Error> {
    if p.is_zero() || *p.coeffs.last().unwrap() != 1 {
        return Err(Error::NonCyclotomic(format!("{p}")));
    }
    let mut rem = p.clone();
    let mut out: Vec<(usize, usize)> = Vec::new();
    let d = p.degree();
    let mut n = 1usize;
    // phi(n) <= d forces n <= 2 d^2 + 2 comfortably
    let bound = 2 * d * d + 2;
    while !rem.is_one() {
        if n > bound {
            return Err(Error::NonCyclotomic(format!("{rem}")));
        }
        if euler_phi(n) <= rem.degree() {
            let phi = cyclotomic(n);
            let mut mult = 0usize;
            while let Some(q) = rem.exact_div(&phi) {
                rem = q;
                mult += 1;
            }
            if mult > 0 {
                out.push((n, mult));
            }
        }
        n += 1;
    }
    Ok(out)
}

/// Rebuild the polynomial from its factor multiset.
pub fn expand_factors(factors: &[(usize, usize)]) -> IntPoly {
    let mut p = IntPoly::one();
    for &(n, mult) in factors {
        p = p.mul(&cyclotomic(n).pow(mult));
    }
    p
}

/// `phi_n` product string e.g. `phi_6^3*phi_2`.
pub fn phi_string(factors: &[(usize, usize)]) -> String {
    if factors.is_empty() {
        return "1".into();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut sorted = factors.to_vec();
    sorted.sort_by_key(|&(n, _)| core::cmp::Reverse(n));
    for (n, mult) in sorted {
        if mult == 1 {
            parts.push(format!("phi_{n}"));
        } else {
            parts.push(format!("phi_{n}^{mult}"));
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1), IntPoly::from_coeffs(&[-1, 1]));
        assert_eq!(cyclotomic(2), IntPoly::from_coeffs(&[1, 1]));
        assert_eq!(cyclotomic(3), IntPoly::from_coeffs(&[1, 1, 1]));
        assert_eq!(cyclotomic(6), IntPoly::from_coeffs(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), IntPoly::from_coeffs(&[1, 0, -1, 0, 1]));
        // product over divisors reassembles x^n - 1
        for n in 1..=30 {
            let mut prod = IntPoly::one();
            for d in divisors(n) {
                prod = prod.mul(&cyclotomic(d));
            }
            assert_eq!(prod, IntPoly::x_pow_minus_one(n), "n = {n}");
        }
    }

    #[test]
    fn factor_examples() {
        // x^3 + 1 = phi_2 phi_6
        assert_eq!(
            cyclotomic_factor(&IntPoly::x_pow_plus_one(3)).unwrap(),
            vec![(2, 1), (6, 1)]
        );
        // x^4 + x^3 + x^2 + x + 1 = phi_5
        assert_eq!(
            cyclotomic_factor(&IntPoly::from_coeffs(&[1, 1, 1, 1, 1])).unwrap(),
            vec![(5, 1)]
        );
        // (x^2 - x + 1)^4 = phi_6^4
        let p = IntPoly::from_coeffs(&[1, -1, 1]).pow(4);
        assert_eq!(cyclotomic_factor(&p).unwrap(), vec![(6, 4)]);
        // reconstruction
        let f = cyclotomic_factor(&p).unwrap();
        assert_eq!(expand_factors(&f), p);
        // not a product of cyclotomics
        assert!(cyclotomic_factor(&IntPoly::from_coeffs(&[2, 1])).is_err());
        assert!(cyclotomic_factor(&IntPoly::from_coeffs(&[-1, 0, 1, 1])).is_err());
    }

    #[test]
    fn phi_strings() {
        assert_eq!(phi_string(&[(6, 4)]), "phi_6^4");
        assert_eq!(phi_string(&[(2, 1), (18, 1)]), "phi_18*phi_2");
        assert_eq!(phi_string(&[]), "1");
    }

    #[test]
    fn display_form() {
        assert_eq!(IntPoly::x_pow_plus_one(3).to_string(), "x^3+1");
        assert_eq!(IntPoly::from_coeffs(&[1, -1, 1]).to_string(), "x^2-x+1");
        assert_eq!(
            IntPoly::from_coeffs(&[-1, 0, 0, 0, 0, 1]).to_string(),
            "x^5-1"
        );
    }
}
