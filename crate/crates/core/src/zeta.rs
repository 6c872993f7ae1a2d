//! Exact `zeta(2k)` as rational multiples of `pi^(2k)`, the Bernoulli numbers
//! they determine, the Newton-Girard partial sums `F_n(k)`, and an independent
//! classical Bernoulli recursion used as an oracle.

use std::fmt;
use std::ops::{Mul, Neg};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::numeric::{binomial, double_factorial_odd, factorial, BigInt, Rational};
use crate::pk::{compute_ak, compute_pk};

/// `coeff * pi^power` with an even, non-negative power.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiMultiple {
    coeff: Rational,
    power: u32,
}

impl PiMultiple {
    pub fn new(coeff: Rational, power: u32) -> Result<Self> {
        if !power.is_multiple_of(2) {
            return Err(Error::OutOfRange { what: "pi power", got: power.to_string(), allowed: "even".into() });
        }
        Ok(PiMultiple { coeff, power })
    }

    pub fn zero(power: u32) -> Result<Self> {
        PiMultiple::new(Rational::zero(), power)
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    /// Addition is only defined for equal powers of `pi`.
    pub fn checked_add(&self, rhs: &PiMultiple) -> Result<PiMultiple> {
        if self.power != rhs.power {
            return Err(Error::PowerMismatch { left: self.power, right: rhs.power });
        }
        Ok(PiMultiple { coeff: &self.coeff + &rhs.coeff, power: self.power })
    }

    pub fn checked_sub(&self, rhs: &PiMultiple) -> Result<PiMultiple> {
        self.checked_add(&-rhs)
    }

    pub fn scale(&self, c: &Rational) -> PiMultiple {
        PiMultiple { coeff: &self.coeff * c, power: self.power }
    }

    /// Approximate decimal value; display only.
    pub fn to_f64(&self) -> f64 {
        self.coeff.to_f64() * std::f64::consts::PI.powi(self.power as i32)
    }
}

impl Mul<&PiMultiple> for &PiMultiple {
    type Output = PiMultiple;
    fn mul(self, rhs: &PiMultiple) -> PiMultiple {
        PiMultiple { coeff: &self.coeff * &rhs.coeff, power: self.power + rhs.power }
    }
}

impl Neg for &PiMultiple {
    type Output = PiMultiple;
    fn neg(self) -> PiMultiple {
        PiMultiple { coeff: -&self.coeff, power: self.power }
    }
}

impl fmt::Display for PiMultiple {
    /// `1/945 * pi^6`; the power is dropped when it is 0.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.power == 0 {
            write!(f, "{}", self.coeff)
        } else {
            write!(f, "{} * pi^{}", self.coeff, self.power)
        }
    }
}

fn pi_multiple(coeff: Rational, power: usize) -> PiMultiple {
    PiMultiple::new(coeff, power as u32).expect("power is 2k")
}

/// `e_k` at `z_n = 1/n^2`: `pi^(2k) / (2k+1)!`.
pub fn ebar(k: usize) -> PiMultiple {
    let coeff = Rational::new(1, factorial(2 * k + 1)).expect("factorial is nonzero");
    pi_multiple(coeff, 2 * k)
}

/// `zeta(2k) = (pi^(2k)/2) * A_k / prod_{i=1..k} (2i+1)!!`.
pub fn zeta_even_rational(k: usize) -> Result<PiMultiple> {
    if k == 0 {
        return Err(Error::OutOfRange { what: "k", got: "0".into(), allowed: "k >= 1".into() });
    }
    let a = compute_ak(k)?;
    let denominator: BigInt = (1..=k).map(double_factorial_odd).product::<BigInt>() * 2;
    Ok(pi_multiple(Rational::new(a, denominator)?, 2 * k))
}

/// Inverts `zeta(2k) = (-1)^(k-1) pi^(2k) 2^(2k) B_{2k} / (2 (2k)!)` for `B_{2k}`.
pub fn bernoulli_from_zeta(k: usize, zeta: &PiMultiple) -> Result<Rational> {
    if zeta.power() as usize != 2 * k {
        return Err(Error::PowerMismatch { left: zeta.power(), right: 2 * k as u32 });
    }
    let sign = if k % 2 == 1 { 1 } else { -1 };
    let scale = Rational::new(factorial(2 * k) * 2 * sign, BigInt::from(1) << (2 * k))?;
    Ok(zeta.coeff() * scale)
}

/// `B_{2k}` through the `P_k` recursion.
pub fn bernoulli_even(k: usize) -> Result<Rational> {
    bernoulli_from_zeta(k, &zeta_even_rational(k)?)
}

/// `B_n` from `sum_{j=0..n} C(n+1, j) B_j = 0`, `B_0 = 1` (so `B_1 = -1/2`).
///
/// Shares nothing with the `P_k` pipeline beyond [`Rational`].
pub fn bernoulli_classical_oracle(n: usize) -> Rational {
    static TABLE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    let mut table = TABLE
        .get_or_init(|| Mutex::new(vec![Rational::one()]))
        .lock()
        .expect("Bernoulli table poisoned");
    while table.len() <= n {
        let m = table.len();
        let partial: Rational = table
            .iter()
            .enumerate()
            .map(|(j, b)| b * Rational::from(binomial(m + 1, j)))
            .sum();
        let next = -partial * Rational::new(1, m as i64 + 1).expect("m + 1 > 0");
        table.push(next);
    }
    table[n].clone()
}

/// `F_n(k) = (-1)^(n-1) (pi^(2k)/2) P_n(k) prod_{i=1..n}(2k-2i+2) / ((2k+1)! prod_{i=1..n-1} (2i+1)!!)`.
pub fn fn_closed_form(n: usize, k: usize) -> Result<PiMultiple> {
    check_fn_args(n, k)?;
    let pn_at_k = compute_pk(n)?.poly.eval(&Rational::from(k as i64));
    let falling: BigInt = (1..=n).map(|i| BigInt::from(2 * k as i64 - 2 * i as i64 + 2)).product();
    let denominator: BigInt = factorial(2 * k + 1) * (1..n).map(double_factorial_odd).product::<BigInt>() * 2;
    let sign = if n % 2 == 1 { 1 } else { -1 };
    let coeff = pn_at_k * Rational::new(falling * sign, denominator)?;
    Ok(pi_multiple(coeff, 2 * k))
}

/// `F_n(k) = k ebar_k - sum_{i=1..n-1} (-1)^(i-1) ebar_{k-i} zeta(2i)`; needs `k >= n-1`.
pub fn fn_partial_sum(n: usize, k: usize) -> Result<PiMultiple> {
    check_fn_args(n, k)?;
    if k + 1 < n {
        return Err(Error::OutOfRange {
            what: "k",
            got: k.to_string(),
            allowed: format!("k >= n - 1 = {} (ebar index must stay >= 0)", n - 1),
        });
    }
    let mut total = ebar(k).scale(&Rational::from(k as i64));
    for i in 1..n {
        let term = &ebar(k - i) * &zeta_even_rational(i)?;
        total = if i % 2 == 1 { total.checked_sub(&term)? } else { total.checked_add(&term)? };
    }
    Ok(total)
}

fn check_fn_args(n: usize, k: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::OutOfRange { what: "n", got: n.to_string(), allowed: "n >= 2".into() });
    }
    if k == 0 {
        return Err(Error::OutOfRange { what: "k", got: "0".into(), allowed: "k >= 1".into() });
    }
    Ok(())
}
