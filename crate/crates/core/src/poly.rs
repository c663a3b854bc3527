//! Dense univariate polynomials with coefficients in any exact ring.
//!
//! Coefficients are stored in ascending degree with trailing zeros trimmed,
//! so structural equality is polynomial equality.

use std::fmt;
use std::ops::{Add, Div, Mul};

use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact coefficient types: machine integers for fast paths, big integers
/// for anything that may overflow.
pub trait Coefficient:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + From<u32>
    + Send
    + Sync
{
    fn from_u64(value: u64) -> Self {
        let hi = (value >> 32) as u32;
        let lo = value as u32;
        let shift = Self::from(1u32 << 16) * Self::from(1u32 << 16);
        Self::from(hi) * shift + Self::from(lo)
    }
}

impl<T> Coefficient for T where
    T: Clone
        + fmt::Debug
        + fmt::Display
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + From<u32>
        + Send
        + Sync
{
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    pub fn monomial(degree: usize, coeff: C) -> Self {
        let mut coeffs = vec![C::zero(); degree];
        coeffs.push(coeff);
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_counts(counts: &[u64]) -> Self {
        Self::from_coeffs(counts.iter().map(|&c| C::from_u64(c)).collect())
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coefficient(&self, degree: usize) -> C {
        self.coeffs.get(degree).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Result<usize> {
        self.coeffs.len().checked_sub(1).ok_or(Error::ZeroPolynomial)
    }

    /// Lowest degree carrying a nonzero coefficient.
    pub fn min_degree(&self) -> Result<usize> {
        self.coeffs.iter().position(|c| !c.is_zero()).ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_coefficient(&self) -> Result<C> {
        self.coeffs.last().cloned().ok_or(Error::ZeroPolynomial)
    }

    /// Degrees with nonzero coefficients.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i).collect()
    }

    /// A zero coefficient strictly between two nonzero ones.
    pub fn has_internal_zero(&self) -> bool {
        match self.min_degree() {
            Ok(lo) => self.coeffs[lo..].iter().any(Zero::is_zero),
            Err(_) => false,
        }
    }

    /// `[t^i] p = [t^(center - i)] p` for every `i` in `0..=center`, and no
    /// terms above `center`.
    pub fn is_palindromic(&self, center: usize) -> bool {
        if self.coeffs.len() > center + 1 {
            return false;
        }
        (0..=center).all(|i| self.coefficient(i) == self.coefficient(center - i))
    }

    pub fn coefficient_sum(&self) -> C {
        self.coeffs.iter().cloned().fold(C::zero(), |acc, c| acc + c)
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Substitute `t -> t^k`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution power must be positive");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Polynomial { coeffs }
    }

    /// `t^k p(1/t)`; requires `k >= deg p`.
    pub fn reflect(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        assert!(k + 1 >= self.coeffs.len(), "reflection degree below polynomial degree");
        let mut coeffs = vec![C::zero(); k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[k - i] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| C::from(i as u32) * c.clone()).collect())
    }

    /// Convert the coefficients into another ring.
    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|i| self.coefficient(i) + rhs.coefficient(i)).collect())
    }
}

impl<C: Coefficient> Add for Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self + &rhs
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl<C: Coefficient> Mul for Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> std::iter::Sum for Polynomial<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| &acc + &p)
    }
}

/// Ascending-degree rendering, `3*t^2 + 3*t^3`. Zero coefficients between
/// the lowest and highest terms are written out as `0*t^k`.
impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Ok(lo) = self.min_degree() else {
            return write!(f, "0");
        };
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().skip(lo) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            if i == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{c}*{var}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
