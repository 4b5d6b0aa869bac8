//! Dense univariate polynomials in u with exact rational coefficients.
//!
//! Degrees stay tiny here (at most r + n), so a dense coefficient vector and
//! schoolbook arithmetic are all that is needed. Equality is exact
//! coefficient comparison.

use std::fmt;

use num_traits::{One, Zero};

use crate::ratio::{rat, Ratio};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    /// Coefficients by ascending degree; no trailing zeros.
    coeffs: Vec<Ratio>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(rat(1))
    }

    pub fn constant(c: Ratio) -> Self {
        Poly { coeffs: vec![c] }.trimmed()
    }

    pub fn from_coeffs(coeffs: Vec<Ratio>) -> Self {
        Poly { coeffs }.trimmed()
    }

    /// The monomial u + c.
    pub fn u_plus(c: i64) -> Self {
        Poly {
            coeffs: vec![rat(c), rat(1)],
        }
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Ratio] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Ratio> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Ratio::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Poly { coeffs: out }.trimmed()
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Ratio::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        Poly { coeffs: out }.trimmed()
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Ratio::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly { coeffs: out }.trimmed()
    }

    pub fn scale(&self, c: &Ratio) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
        .trimmed()
    }

    pub fn eval(&self, x: &Ratio) -> Ratio {
        let mut acc = Ratio::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitutes u -> u + 1.
    pub fn shift_up(&self) -> Poly {
        let mut out = Poly::zero();
        let u1 = Poly::u_plus(1);
        for c in self.coeffs.iter().rev() {
            out = out.mul(&u1).add(&Poly::constant(c.clone()));
        }
        out
    }

    /// Exact division; `None` if the remainder is nonzero or `div` is zero.
    pub fn div_exact(&self, div: &Poly) -> Option<Poly> {
        if div.is_zero() {
            return None;
        }
        let mut rem = self.clone();
        let mut quo = vec![Ratio::zero(); self.coeffs.len().saturating_sub(div.coeffs.len()) + 1];
        let dlead = div.leading().unwrap().clone();
        while !rem.is_zero() && rem.coeffs.len() >= div.coeffs.len() {
            let shift = rem.coeffs.len() - div.coeffs.len();
            let factor = rem.leading().unwrap() / &dlead;
            quo[shift] = factor.clone();
            let mut sub = vec![Ratio::zero(); shift];
            sub.extend(div.coeffs.iter().map(|c| c * &factor));
            rem = rem.sub(&Poly { coeffs: sub });
        }
        if rem.is_zero() {
            Some(Poly { coeffs: quo }.trimmed())
        } else {
            None
        }
    }

    fn rem(&self, div: &Poly) -> Poly {
        let mut rem = self.clone();
        let dlead = div.leading().unwrap().clone();
        while !rem.is_zero() && rem.coeffs.len() >= div.coeffs.len() {
            let shift = rem.coeffs.len() - div.coeffs.len();
            let factor = rem.leading().unwrap() / &dlead;
            let mut sub = vec![Ratio::zero(); shift];
            sub.extend(div.coeffs.iter().map(|c| c * &factor));
            rem = rem.sub(&Poly { coeffs: sub });
        }
        rem
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let lead = a.leading().unwrap().clone();
            a.scale(&(Ratio::one() / lead))
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => "u".into(),
                _ => format!("u^{i}"),
            };
            let coeff = if i > 0 && c.is_one() {
                String::new()
            } else if i > 0 && (-c).is_one() {
                "-".into()
            } else {
                c.to_string()
            };
            terms.push(format!("{coeff}{var}"));
        }
        let mut s = terms.join(" + ").replace("+ -", "- ");
        if s.is_empty() {
            s = "0".into();
        }
        write!(f, "{s}")
    }
}
