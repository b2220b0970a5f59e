//! Exact-integer Laurent polynomials in one variable `t`, and the symmetric
//! "bracket" notation for palindromic ones.
//!
//! `[a_0, a_1, ..., a_n]` denotes `a_0 + Σ_{j=1..n} a_j (t^{-j} + t^j)`; this
//! is the form in which η and η′ are reported.  Coefficients are
//! arbitrary-precision integers and zero coefficients are never stored, so
//! equality is structural.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use alloc::collections::BTreeMap;

/// A Laurent polynomial `Σ c_i t^i` with `BigInt` coefficients and finite
/// support. Zero coefficients are pruned on construction.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

/// Symmetric coefficient list `[a_0, a_1, ..., a_n]` for a palindromic
/// Laurent polynomial. Canonical form trims trailing zeros, except that the
/// zero polynomial is the single entry `[0]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymBracket {
    coeffs: Vec<BigInt>,
}

/// Errors from bracket conversion and evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LaurentError {
    /// `to_bracket` was applied to a polynomial with `c_i != c_{-i}`.
    NotPalindromic { exponent: i64 },
    /// `evaluate` was called at `t0 = 0`, where negative powers blow up.
    ZeroArgument,
}

impl fmt::Display for LaurentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LaurentError::NotPalindromic { exponent } => {
                write!(f, "not palindromic: coefficients at t^{exponent} and t^-{exponent} differ")
            }
            LaurentError::ZeroArgument => write!(f, "cannot evaluate at t = 0"),
        }
    }
}

impl LaurentPoly {
    /// The zero polynomial (empty support).
    pub fn zero() -> Self {
        Self { coeffs: BTreeMap::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    /// `c * t^exp`.
    pub fn monomial(exp: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// duplicates and pruning zeros.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            let c = c.into();
            let entry = coeffs.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self { coeffs }
    }

    /// Coefficient of `t^exp` (zero if absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest `|exponent|` in the support; 0 for the zero polynomial.
    pub fn support_radius(&self) -> i64 {
        self.coeffs.keys().map(|e| e.abs()).max().unwrap_or(0)
    }

    /// The image under `t ↦ t^{-1}`: exponent `i` maps to `-i`.
    pub fn reciprocal(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Whether the polynomial is invariant under `t ↦ t^{-1}`.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().all(|(&e, c)| self.coeff(-e) == *c)
    }

    /// Exact value at a nonzero rational point.
    pub fn evaluate(&self, t0: &BigRational) -> Result<BigRational, LaurentError> {
        if t0.is_zero() {
            return Err(LaurentError::ZeroArgument);
        }
        let mut acc = BigRational::zero();
        for (&e, c) in &self.coeffs {
            let p = pow_rational(t0, e);
            acc += BigRational::from(c.clone()) * p;
        }
        Ok(acc)
    }

    /// Reads a palindromic polynomial off into bracket form.
    pub fn to_bracket(&self) -> Result<SymBracket, LaurentError> {
        for (&e, c) in &self.coeffs {
            if self.coeff(-e) != *c {
                return Err(LaurentError::NotPalindromic { exponent: e.abs() });
            }
        }
        let n = self.support_radius();
        let coeffs = (0..=n).map(|j| self.coeff(j)).collect();
        Ok(SymBracket::new(coeffs))
    }

    /// Renders as sorted `coef*t^exp` terms joined by ` + `, e.g.
    /// `-1*t^-1 + 2 + -1*t`. The zero polynomial renders as `0`.
    pub fn render(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (&e, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            if e == 0 {
                let _ = write!(out, "{c}");
            } else {
                let _ = write!(out, "{c}*t^{e}");
            }
        }
        out
    }
}

fn pow_rational(t0: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let base = if e < 0 { t0.recip() } else { t0.clone() };
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= base.clone();
    }
    acc
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = self.coeffs.clone();
        for (&e, c) in &rhs.coeffs {
            let entry = coeffs.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                let entry = coeffs.entry(e1 + e2).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }
}

impl SymBracket {
    /// Canonicalizes: trims trailing zeros, keeping `[0]` for the zero
    /// polynomial.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && coeffs.last().map(Zero::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    /// Entries `a_0..a_n` of the canonical form.
    pub fn entries(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Entry `a_j`, zero beyond the stored degree.
    pub fn entry(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Highest index with a (possibly zero) stored entry.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Expands the bracket into the palindromic polynomial it denotes.
    pub fn to_poly(&self) -> LaurentPoly {
        let mut terms: Vec<(i64, BigInt)> = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if j == 0 {
                terms.push((0, c.clone()));
            } else {
                terms.push((j as i64, c.clone()));
                terms.push((-(j as i64), c.clone()));
            }
        }
        LaurentPoly::from_terms(terms)
    }

    /// Renders as `[a0, a1, ..., an]`.
    pub fn render(&self) -> String {
        use core::fmt::Write;
        let mut out = String::from("[");
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "{c}");
        }
        out.push(']');
        out
    }
}

impl fmt::Display for SymBracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn add_disjoint_support() {
        let t = LaurentPoly::monomial(1, 1);
        let tinv = LaurentPoly::monomial(-1, 1);
        let sum = &t + &tinv;
        assert_eq!(sum, LaurentPoly::from_terms(vec![(-1, 1), (1, 1)]));
    }

    #[test]
    fn mul_cancels_exponents() {
        let t = LaurentPoly::monomial(1, 1);
        let tinv = LaurentPoly::monomial(-1, 1);
        assert_eq!(&t * &tinv, LaurentPoly::one());
    }

    #[test]
    fn add_prunes_zeros() {
        let p = LaurentPoly::monomial(1, 2);
        let q = LaurentPoly::monomial(1, -2);
        let sum = &p + &q;
        assert!(sum.is_zero());
        assert_eq!(sum.terms().count(), 0);
    }

    #[test]
    fn bracket_expansion() {
        // η_{(K_1,τ)} printed as [0, -1, 0, 1]
        let b = SymBracket::from_i64(&[0, -1, 0, 1]);
        let p = b.to_poly();
        assert_eq!(
            p,
            LaurentPoly::from_terms(vec![(-3, 1), (-1, -1), (1, -1), (3, 1)])
        );
        assert!(p.is_palindromic());
    }

    #[test]
    fn bracket_constant_and_zero() {
        assert_eq!(SymBracket::from_i64(&[5]).to_poly(), LaurentPoly::monomial(0, 5));
        assert!(SymBracket::from_i64(&[0]).to_poly().is_zero());
    }

    #[test]
    fn to_bracket_read_off() {
        let p = LaurentPoly::from_terms(vec![(-2, 1), (0, 3), (2, 1)]);
        assert_eq!(p.to_bracket().unwrap(), SymBracket::from_i64(&[3, 0, 1]));
    }

    #[test]
    fn to_bracket_rejects_antisymmetric() {
        let p = LaurentPoly::from_terms(vec![(1, 1), (-1, -1)]);
        assert_eq!(
            p.to_bracket(),
            Err(LaurentError::NotPalindromic { exponent: 1 })
        );
    }

    #[test]
    fn bracket_round_trip_on_k2_sigma() {
        // [3n-12, 1, -2n+8, -1, (n-4)/2] at n = 2
        let b = SymBracket::from_i64(&[-6, 1, 4, -1, -1]);
        assert_eq!(b.to_poly().to_bracket().unwrap(), b);
    }

    #[test]
    fn bracket_trims_trailing_zeros() {
        let b = SymBracket::from_i64(&[0, -1, 0, 1, 0]);
        assert_eq!(b, SymBracket::from_i64(&[0, -1, 0, 1]));
        assert_eq!(b.degree(), 3);
        assert_eq!(SymBracket::from_i64(&[0, 0]), SymBracket::from_i64(&[0]));
    }

    #[test]
    fn evaluate_rational_points() {
        let one = LaurentPoly::one();
        assert_eq!(one.evaluate(&rat(7, 3)).unwrap(), rat(1, 1));

        let p = LaurentPoly::from_terms(vec![(1, 1), (-1, 1)]);
        assert_eq!(p.evaluate(&rat(2, 1)).unwrap(), rat(5, 2));

        assert_eq!(p.evaluate(&rat(0, 1)), Err(LaurentError::ZeroArgument));
    }

    #[test]
    fn eta_k1_tau_vanishes_at_one() {
        // Normalization forces b_0 + 2b_1 + 2Σ_{j≥2} a_j = 0; check by direct sum.
        let eta = SymBracket::from_i64(&[0, -1, 0, 1]).to_poly();
        assert!(eta.evaluate(&rat(1, 1)).unwrap().is_zero());
    }

    #[test]
    fn reciprocal_involution_and_fixed_points() {
        assert_eq!(
            LaurentPoly::monomial(2, 1).reciprocal(),
            LaurentPoly::monomial(-2, 1)
        );
        let p = SymBracket::from_i64(&[1, 2, 3]).to_poly();
        assert_eq!(p.reciprocal(), p);
        let q = LaurentPoly::from_terms(vec![(-2, 5), (1, 3), (4, -1)]);
        assert_eq!(q.reciprocal().reciprocal(), q);
    }
}
