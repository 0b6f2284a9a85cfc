//! Dense univariate polynomials over a [`Field`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{Field, FieldRef};
use crate::text;

/// Coefficients ascend in degree; the zero polynomial has no coefficients and
/// the leading coefficient of any other polynomial is nonzero.
#[derive(Clone)]
pub struct Poly {
    field: FieldRef,
    coeffs: Vec<u32>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field == other.field
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_coeffs(&self.coeffs))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_coeffs(&self.coeffs))
    }
}

impl Poly {
    pub fn from_coeffs(field: &FieldRef, mut coeffs: Vec<u32>) -> Self {
        assert!(
            coeffs.iter().all(|&c| c < field.order()),
            "coefficient outside the field"
        );
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &FieldRef) -> Self {
        Self {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &FieldRef) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: &FieldRef, c: u32) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    /// `c X^k`.
    pub fn monomial(field: &FieldRef, c: u32, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::from_coeffs(field, coeffs)
    }

    pub fn x(field: &FieldRef) -> Self {
        Self::monomial(field, 1, 1)
    }

    /// `X^n - 1`.
    pub fn x_pow_minus_one(field: &FieldRef, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = 1;
        coeffs[0] = field.add(coeffs[0], field.neg(1));
        Self::from_coeffs(field, coeffs)
    }

    /// Parses either text format; see [`crate::text`](crate) docs on coefficients.
    pub fn parse(field: &FieldRef, s: &str) -> Result<Self> {
        let terms = text::parse_terms(s)?;
        let len = terms.iter().map(|t| t.exp + 1).max().unwrap_or(0);
        let mut coeffs = vec![0u32; len];
        for t in terms {
            if t.coeff >= field.order() as u64 {
                return Err(Error::Parse(format!(
                    "coefficient {} outside a field of order {}",
                    t.coeff,
                    field.order()
                )));
            }
            let c = t.coeff as u32;
            let c = if t.negative { field.neg(c) } else { c };
            coeffs[t.exp] = field.add(coeffs[t.exp], c);
        }
        Ok(Self::from_coeffs(field, coeffs))
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Coefficient of `X^k` (zero past the end).
    pub fn coeff(&self, k: usize) -> u32 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    pub fn leading_coeff(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, coeffs: Vec<u32>) -> Self {
        Self::from_coeffs(&self.field, coeffs)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(self.with(
            (0..n)
                .map(|i| f.add(self.coeff(i), other.coeff(i)))
                .collect(),
        ))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(self.with(
            (0..n)
                .map(|i| f.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        ))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let f = &self.field;
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(self.with(out))
    }

    pub fn scale(&self, c: u32) -> Self {
        self.with(self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect())
    }

    /// Multiplies by `X^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        self.with(coeffs)
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self
            .field
            .inv(self.leading_coeff())
            .expect("nonzero leading coefficient");
        self.scale(inv)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check(divisor)?;
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let f = &self.field;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let lead_inv = f.inv(divisor.leading_coeff())?;
        let mut quot = vec![0u32; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = rem[top];
            if c == 0 {
                continue;
            }
            let factor = f.mul(c, lead_inv);
            let shift = top - dd;
            quot[shift] = factor;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = f.sub(rem[shift + i], f.mul(factor, d));
            }
        }
        rem.truncate(dd);
        Ok((self.with(quot), self.with(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divmod(divisor)?.1)
    }

    /// True when `divisor` divides `self` exactly.
    pub fn is_divisible_by(&self, divisor: &Self) -> Result<bool> {
        Ok(self.rem(divisor)?.is_zero())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Extended Euclid: `(g, s, t)` with `s*self + t*other = g`, `g` the monic gcd,
    /// and the minimal cofactors `deg s < deg other - deg g`, `deg t < deg self - deg g`.
    pub fn egcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(f), Self::zero(f));
        let (mut t0, mut t1) = (Self::zero(f), Self::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        let inv = f.inv(r0.leading_coeff())?;
        Ok((r0.scale(inv), s0.scale(inv), t0.scale(inv)))
    }

    /// Folds exponents modulo `n`, i.e. reduces modulo `X^n - 1`.
    pub fn reduce_mod_xn(&self, n: usize) -> Self {
        assert!(n >= 1);
        if self.coeffs.len() <= n {
            return self.clone();
        }
        let f = &self.field;
        let mut out = vec![0u32; n];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[k % n] = f.add(out[k % n], c);
        }
        self.with(out)
    }

    /// Product modulo `X^n - 1`.
    pub fn mul_mod_xn(&self, other: &Self, n: usize) -> Self {
        (self * other).reduce_mod_xn(n)
    }

    /// `X^e mod (X^n - 1)` for any integer `e`.
    pub fn x_pow_mod(field: &FieldRef, e: i64, n: usize) -> Self {
        Self::monomial(field, 1, arith::mod_floor(e as i128, n as u64) as usize)
    }

    /// `p(X^e) mod (X^n - 1)`, taking `e` as its least nonnegative residue mod `n`.
    /// Each monomial `X^k` lands on `X^{k e mod n}`; collisions add.
    pub fn modular_substitute(&self, e: i64, n: usize) -> Self {
        assert!(n >= 1);
        let f = &self.field;
        let e = arith::mod_floor(e as i128, n as u64) as u128;
        let mut out = vec![0u32; n];
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                let slot = ((k as u128 * e) % n as u128) as usize;
                out[slot] = f.add(out[slot], c);
            }
        }
        self.with(out)
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u128, modulus: &Self) -> Result<Self> {
        let mut base = self.rem(modulus)?;
        let mut acc = Self::one(&self.field).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(modulus)?;
            }
            base = (&base * &base).rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn eval(&self, x: u32) -> u32 {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;

            /// Panics on operands from different fields; use the `try_` form to recover.
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs)
                    .expect("polynomials over different fields")
            }
        }

        impl $trait<Poly> for Poly {
            type Output = Poly;

            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        self.with(self.coeffs.iter().map(|&c| self.field.neg(c)).collect())
    }
}

/// Convenience: the prime field GF(p) as a [`FieldRef`]. Panics if `p` is not prime.
pub fn gf(p: u64) -> FieldRef {
    Field::prime(p).expect("prime characteristic")
}
