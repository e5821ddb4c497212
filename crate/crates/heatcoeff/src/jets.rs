//! Exact Gaussian-rational coefficients and truncated multivariate power
//! series ("jets").
//!
//! A jet over dimension d has 2d slots: slots 0..d are the holomorphic
//! variables z_i and slots d..2d their conjugates (or, after
//! realification, the real coordinates x_i and y_i). Every jet carries a
//! validity order: coefficients of total degree <= order are correct,
//! higher ones are unknown and never silently used. Exact polynomials use
//! `Jet::EXACT`.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JetError {
    #[error("jet valid to order {available}, needs order {needed}")]
    TruncationTooLow { needed: i64, available: i64 },
    #[error("jet dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}

/// Element of Q(i): exact field arithmetic with conjugation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational { re: BigRational::from(BigInt::from(n)), im: BigRational::zero() }
    }

    pub fn from_rational(re: BigRational) -> Self {
        GaussianRational { re, im: BigRational::zero() }
    }

    pub fn zero() -> Self {
        GaussianRational::default()
    }

    pub fn one() -> Self {
        GaussianRational::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn scaled(&self, r: &BigRational) -> Self {
        GaussianRational { re: &self.re * r, im: &self.im * r }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: GaussianRational) -> GaussianRational {
        &self + &rhs
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: GaussianRational) -> GaussianRational {
        &self - &rhs
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: GaussianRational) -> GaussianRational {
        &self * &rhs
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

/// Exponent vector of length 2*dim: first the z (or x) exponents, then
/// the z̄ (or y) exponents.
pub type Monomial = Vec<u8>;

/// Truncated power series with Gaussian-rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Jet {
    dim: usize,
    order: i64,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Jet {
    /// Validity order of jets known exactly (polynomials).
    pub const EXACT: i64 = i64::MAX;

    pub fn zero(dim: usize) -> Self {
        Jet { dim, order: Jet::EXACT, terms: BTreeMap::new() }
    }

    pub fn constant(dim: usize, c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0u8; 2 * dim], c);
        }
        Jet { dim, order: Jet::EXACT, terms }
    }

    pub fn monomial(dim: usize, alpha: &[u8], beta: &[u8], c: GaussianRational) -> Self {
        assert_eq!(alpha.len(), dim);
        assert_eq!(beta.len(), dim);
        let mut mono = Vec::with_capacity(2 * dim);
        mono.extend_from_slice(alpha);
        mono.extend_from_slice(beta);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Jet { dim, order: Jet::EXACT, terms }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order == Jet::EXACT
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    /// Drops knowledge (and stored terms) above `order`.
    pub fn truncated(mut self, order: i64) -> Self {
        if order >= self.order {
            return self;
        }
        self.terms.retain(|m, _| total_degree(m) as i64 <= order);
        self.order = order;
        self
    }

    pub fn coefficient(&self, mono: &[u8]) -> GaussianRational {
        self.terms.get(mono).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn set_coefficient(&mut self, mono: Monomial, c: GaussianRational) {
        assert_eq!(mono.len(), 2 * self.dim);
        if c.is_zero() {
            self.terms.remove(&mono);
        } else {
            self.terms.insert(mono, c);
        }
    }

    pub fn value_at_zero(&self) -> Result<GaussianRational, JetError> {
        if self.order < 0 {
            return Err(JetError::TruncationTooLow { needed: 0, available: self.order });
        }
        Ok(self.coefficient(&vec![0u8; 2 * self.dim]))
    }

    /// (∂^α ∂̄^β self)(0) = coeff(α,β) · α! · β!.
    pub fn deriv_at_zero(&self, alpha: &[u8], beta: &[u8]) -> Result<GaussianRational, JetError> {
        let needed = (alpha.iter().map(|&a| a as i64).sum::<i64>())
            + beta.iter().map(|&b| b as i64).sum::<i64>();
        if self.order < needed {
            return Err(JetError::TruncationTooLow { needed, available: self.order });
        }
        let mut mono = Vec::with_capacity(2 * self.dim);
        mono.extend_from_slice(alpha);
        mono.extend_from_slice(beta);
        let c = self.coefficient(&mono);
        if c.is_zero() {
            return Ok(c);
        }
        let mut fact = BigRational::one();
        for &e in mono.iter() {
            for k in 2..=e as u64 {
                fact *= BigRational::from(BigInt::from(k));
            }
        }
        Ok(c.scaled(&fact))
    }

    /// Derivative by slot `var` in 0..2*dim.
    pub fn diff_var(&self, var: usize) -> Jet {
        assert!(var < 2 * self.dim);
        let order = if self.is_exact() { Jet::EXACT } else { self.order - 1 };
        let mut terms = BTreeMap::new();
        for (mono, c) in &self.terms {
            let e = mono[var];
            if e == 0 {
                continue;
            }
            let mut m = mono.clone();
            m[var] = e - 1;
            terms.insert(m, c.scaled(&BigRational::from(BigInt::from(e as i64))));
        }
        Jet { dim: self.dim, order, terms }
    }

    /// ∂/∂z_i (or ∂/∂x_i after realification).
    pub fn diff_z(&self, i: usize) -> Jet {
        self.diff_var(i)
    }

    /// ∂/∂z̄_i (or ∂/∂y_i after realification).
    pub fn diff_zbar(&self, i: usize) -> Jet {
        self.diff_var(self.dim + i)
    }

    /// The conjugate function: swaps the z and z̄ exponents and conjugates
    /// coefficients. Only meaningful for the complex interpretation.
    pub fn conj_fn(&self) -> Jet {
        let mut terms = BTreeMap::new();
        for (mono, c) in &self.terms {
            let (a, b) = mono.split_at(self.dim);
            let mut m = Vec::with_capacity(2 * self.dim);
            m.extend_from_slice(b);
            m.extend_from_slice(a);
            terms.insert(m, c.conj());
        }
        Jet { dim: self.dim, order: self.order, terms }
    }

    /// Conjugates coefficients only; the conjugate function when all
    /// variables are real.
    pub fn conj_coefficients(&self) -> Jet {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect();
        Jet { dim: self.dim, order: self.order, terms }
    }

    /// coeff(α,β) = conj(coeff(β,α)): the jet of a real-valued function
    /// of z, z̄.
    pub fn is_hermitian(&self) -> bool {
        self.terms.iter().all(|(mono, c)| {
            let (a, b) = mono.split_at(self.dim);
            let mut swapped = Vec::with_capacity(2 * self.dim);
            swapped.extend_from_slice(b);
            swapped.extend_from_slice(a);
            self.coefficient(&swapped) == c.conj()
        })
    }

    pub fn scale(&self, c: &GaussianRational) -> Jet {
        if c.is_zero() {
            return Jet { dim: self.dim, order: self.order, terms: BTreeMap::new() };
        }
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        Jet { dim: self.dim, order: self.order, terms }
    }

    pub fn min_total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| total_degree(m)).min()
    }

    pub fn max_total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| total_degree(m)).max()
    }

    fn assert_same_dim(&self, other: &Jet) {
        assert_eq!(self.dim, other.dim, "jet dimension mismatch");
    }
}

pub(crate) fn total_degree(mono: &[u8]) -> u32 {
    mono.iter().map(|&e| e as u32).sum()
}

impl Add for &Jet {
    type Output = Jet;
    fn add(self, rhs: &Jet) -> Jet {
        self.assert_same_dim(rhs);
        let order = self.order.min(rhs.order);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let entry = terms.entry(m.clone()).or_insert_with(GaussianRational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        if order != Jet::EXACT {
            terms.retain(|m, _| total_degree(m) as i64 <= order);
        }
        Jet { dim: self.dim, order, terms }
    }
}

impl Sub for &Jet {
    type Output = Jet;
    fn sub(self, rhs: &Jet) -> Jet {
        self + &(-rhs)
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Jet { dim: self.dim, order: self.order, terms }
    }
}

impl Mul for &Jet {
    type Output = Jet;
    fn mul(self, rhs: &Jet) -> Jet {
        self.assert_same_dim(rhs);
        let order = self.order.min(rhs.order);
        let mut terms: BTreeMap<Monomial, GaussianRational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            let da = total_degree(ma) as i64;
            for (mb, cb) in &rhs.terms {
                if order != Jet::EXACT && da + total_degree(mb) as i64 > order {
                    continue;
                }
                let mono: Monomial = ma.iter().zip(mb).map(|(&a, &b)| a + b).collect();
                let prod = ca * cb;
                let entry = terms.entry(mono).or_insert_with(GaussianRational::zero);
                *entry += &prod;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Jet { dim: self.dim, order, terms }
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, rhs: Jet) -> Jet {
        &self + &rhs
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, rhs: Jet) -> Jet {
        &self - &rhs
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        &self * &rhs
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn gaussian_rational_field_ops() {
        let a = GaussianRational::new(q(1, 2), q(3, 1));
        let b = GaussianRational::new(q(-1, 3), q(1, 2));
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!(a.conj().conj(), a);
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_int(-1));
        assert_eq!(format!("{}", GaussianRational::new(q(1, 2), q(-1, 3))), "1/2-1/3i");
        assert_eq!(format!("{}", GaussianRational::from_int(4)), "4");
    }

    #[test]
    fn derivatives_read_coefficients() {
        // z^2 zbar^2 in d = 1
        let jet = Jet::monomial(1, &[2], &[2], GaussianRational::one());
        let g = jet.diff_z(0).diff_zbar(0);
        // ∂∂̄ z²z̄² = 4 z z̄
        assert_eq!(g.coefficient(&[1, 1]), GaussianRational::from_int(4));
        assert_eq!(
            jet.deriv_at_zero(&[2], &[2]).unwrap(),
            GaussianRational::from_int(4)
        );
        assert_eq!(jet.deriv_at_zero(&[1], &[1]).unwrap(), GaussianRational::zero());
    }

    #[test]
    fn truncation_tracks_validity() {
        let jet = Jet::monomial(1, &[2], &[2], GaussianRational::one()).truncated(3);
        assert!(jet.is_zero());
        assert_eq!(jet.order(), 3);
        assert!(jet.deriv_at_zero(&[2], &[2]).is_err());
        assert!(jet.deriv_at_zero(&[1], &[1]).is_ok());
        let d = jet.diff_z(0).diff_z(0).diff_z(0).diff_z(0);
        assert!(d.value_at_zero().is_err());
    }

    #[test]
    fn multiplication_truncates_consistently() {
        let x = Jet::monomial(1, &[1], &[0], GaussianRational::one());
        let y = Jet::monomial(1, &[0], &[1], GaussianRational::one());
        let p = &x * &y;
        assert_eq!(p.coefficient(&[1, 1]), GaussianRational::one());
        assert!(p.is_exact());
        let trunc = x.clone().truncated(1);
        let p2 = &trunc * &y;
        assert_eq!(p2.order(), 1);
        assert!(p2.is_zero());
    }

    #[test]
    fn hermitian_and_conjugate() {
        // z zbar + (1+i) z^2 zbar^2... must conjugate the swapped slot
        let mut jet = Jet::monomial(1, &[1], &[1], GaussianRational::one());
        let c = GaussianRational::new(q(1, 1), q(1, 2));
        jet = &jet + &Jet::monomial(1, &[2], &[1], c.clone());
        assert!(!jet.is_hermitian());
        jet = &jet + &Jet::monomial(1, &[1], &[2], c.conj());
        assert!(jet.is_hermitian());
        assert_eq!(jet.conj_fn(), jet);
    }
}
