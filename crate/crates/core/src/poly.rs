//! Integer polynomials with arbitrary-precision coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Polynomial in `x` with coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `(x + c)^e`.
    pub fn linear_power(c: i64, e: u32) -> Self {
        let base = Self::from_i64(&[c, 1]);
        let mut acc = Self::constant(1);
        for _ in 0..e {
            acc = acc.mul(&base);
        }
        acc
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Exact division by the monic `x + c`; `None` if the remainder is nonzero.
    fn div_linear(&self, c: i64) -> Option<Self> {
        let n = self.coeffs.len();
        if n < 2 {
            return None;
        }
        let root = BigInt::from(-c);
        let mut q = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for i in (0..n).rev() {
            let v = &self.coeffs[i] + &carry;
            if i == 0 {
                return v.is_zero().then(|| Self::new(q));
            }
            carry = &v * &root;
            q[i - 1] = v;
        }
        unreachable!()
    }

    /// Multiplicity of the factor `x + c`.
    pub fn linear_multiplicity(&self, c: i64) -> u32 {
        if self.is_zero() {
            return 0;
        }
        let mut p = self.clone();
        let mut k = 0;
        while let Some(q) = p.div_linear(c) {
            p = q;
            k += 1;
        }
        k
    }

    /// Splits off `(x+1)^a (x-1)^b x^c`, returning the exponents and cofactor.
    pub fn split_unit_roots(&self) -> (u32, u32, u32, Self) {
        let mut p = self.clone();
        let mut exps = [0u32; 3];
        for (slot, c) in [1i64, -1, 0].into_iter().enumerate() {
            while let Some(q) = p.div_linear(c) {
                p = q;
                exps[slot] += 1;
            }
        }
        (exps[0], exps[1], exps[2], p)
    }

    /// Product form over the factors `x+1`, `x-1`, `x` with an expanded cofactor.
    pub fn factored_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let (plus, minus, zero, rest) = self.split_unit_roots();
        let mut out = String::new();
        let push = |out: &mut String, base: &str, e: u32| match e {
            0 => {}
            1 => out.push_str(base),
            _ => out.push_str(&format!("{base}^{e}")),
        };
        push(&mut out, "(x+1)", plus);
        push(&mut out, "(x-1)", minus);
        push(&mut out, "x", zero);
        let unit = rest.degree() == Some(0) && rest.coeffs[0].is_one();
        if !unit {
            if out.is_empty() {
                return rest.to_string();
            }
            out.push_str(&format!("({rest})"));
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Exact characteristic polynomial `det(xI - M)` by the Faddeev-LeVerrier
/// recurrence; every division is exact over the integers.
pub fn char_poly(m: &IntMatrix) -> Result<IntPolynomial> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.nrows(), cols: m.ncols() });
    }
    let n = m.nrows();
    let a: Vec<Vec<BigInt>> =
        m.rows().iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // M_k accumulates A*M_{k-1} + c_{n-k+1} I.
    let mut mk: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for l in 0..n {
                if a[i][l].is_zero() {
                    continue;
                }
                for j in 0..n {
                    next[i][j] += &a[i][l] * &mk[l][j];
                }
            }
            next[i][i] += &coeffs[n - k + 1];
        }
        // tr(A * M_k)
        let mut tr = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &a[i][l] * &next[l][i];
            }
        }
        let (q, r) = tr.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero());
        coeffs[n - k] = -q;
        mk = next;
    }
    Ok(IntPolynomial::new(coeffs))
}
