//! Dense univariate polynomials over [`Rational`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::numeric::Rational;

/// `coeffs[i]` is the coefficient of `x^i`. Trailing zeros are always
/// trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// `a0 + a1*x`
    pub fn linear(a0: Rational, a1: Rational) -> Self {
        Polynomial::new(vec![a0, a1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, x0: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x0 + c)
    }

    /// Returns `q` with `q(x) = p(a*x + b)`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Polynomial {
        let inner = Polynomial::linear(b.clone(), a.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Polynomial::zero(), |acc, c| &(&acc * &inner) + &Polynomial::constant(c.clone()))
    }

    /// Exact quotient by `(2x - 2c)`.
    ///
    /// Synthetic division by `(x - c)` then halving. A nonzero remainder is
    /// reported as [`Error::InexactDivision`] instead of being dropped.
    pub fn divide_linear_exact(&self, c: &Rational) -> Result<Polynomial> {
        if self.is_zero() {
            return Ok(Polynomial::zero());
        }
        let n = self.coeffs.len();
        let mut quotient = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for i in (0..n).rev() {
            carry = &self.coeffs[i] + &(carry * c);
            if i > 0 {
                quotient[i - 1] = carry.clone();
            }
        }
        if !carry.is_zero() {
            return Err(Error::InexactDivision {
                divisor_root: c.to_string(),
                remainder: carry.to_string(),
            });
        }
        let half = Rational::new(1, 2)?;
        Ok(Polynomial::new(quotient).scale(&half))
    }

    /// Product of linear factors `(a1*x + a0)` given as `(a0, a1)` pairs.
    pub fn product_of_linear<I>(factors: I) -> Polynomial
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        factors
            .into_iter()
            .fold(Polynomial::one(), |acc, (a0, a1)| &acc * &Polynomial::linear(a0, a1))
    }

    /// Ascending coefficients in canonical rational text form.
    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(Rational::to_string).collect()
    }
}

impl fmt::Display for Polynomial {
    /// Ascending order, e.g. `465 + 130*x + 10*x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = if c.is_negative() { -c } else { c.clone() };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            match (i, magnitude == 1) {
                (0, _) => write!(f, "{magnitude}")?,
                (_, true) => write!(f, "{var}")?,
                (_, false) => write!(f, "{magnitude}*{var}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |acc, p| &acc + &p)
    }
}

pub fn poly_add(p: &Polynomial, q: &Polynomial) -> Polynomial {
    p + q
}

pub fn poly_mul(p: &Polynomial, q: &Polynomial) -> Polynomial {
    p * q
}

pub fn poly_eval(p: &Polynomial, x0: &Rational) -> Rational {
    p.eval(x0)
}

pub fn poly_compose_affine(p: &Polynomial, a: &Rational, b: &Rational) -> Polynomial {
    p.compose_affine(a, b)
}

pub fn poly_divide_linear_exact(p: &Polynomial, c: &Rational) -> Result<Polynomial> {
    p.divide_linear_exact(c)
}
