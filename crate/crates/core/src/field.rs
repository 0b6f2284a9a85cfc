//! Finite fields GF(p^m) in polynomial basis.
//!
//! An element is stored as the integer `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`
//! of its coefficient vector over GF(p). Multiplication goes through log/exp
//! tables built once per field, which bounds the supported order.

use std::fmt;
use std::sync::Arc;

use crate::arith;
use crate::error::{Error, Result};
use crate::text;

/// Largest field order for which tables are built.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

pub type FieldRef = Arc<Field>;

pub struct Field {
    p: u32,
    degree: u32,
    modulus: Vec<u32>,
    order: u32,
    primitive: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{}) mod {}",
            self.p,
            self.degree,
            text::format_coeffs(&self.modulus)
        )
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.p == other.p && self.degree == other.degree && self.modulus == other.modulus)
    }
}

impl Eq for Field {}

impl Field {
    /// Builds GF(p^m). Without a modulus the lexicographically smallest monic
    /// irreducible polynomial of degree `m` (coefficients read high to low) is used.
    pub fn new(p: u64, m: u32, modulus: Option<&[u32]>) -> Result<FieldRef> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::DegreeMismatch {
                expected: 1,
                found: 0,
            });
        }
        let order = (p as u128).pow(m);
        if order > MAX_FIELD_ORDER as u128 {
            return Err(Error::FieldTooLarge(order));
        }
        let p = p as u32;
        let modulus = match modulus {
            Some(given) => {
                let mut md: Vec<u32> = given.iter().map(|&c| c % p).collect();
                trim(&mut md);
                if md.len() != m as usize + 1 {
                    return Err(Error::DegreeMismatch {
                        expected: m as usize,
                        found: md.len().saturating_sub(1),
                    });
                }
                if md[m as usize] != 1 || !is_irreducible_gfp(&md, p) {
                    return Err(Error::NotIrreducible(text::format_coeffs(&md)));
                }
                md
            }
            None => smallest_irreducible(p, m),
        };
        Ok(Arc::new(Self::build(p, m, modulus)))
    }

    /// Parses the modulus from the polynomial text format.
    pub fn with_modulus_str(p: u64, m: u32, modulus: &str) -> Result<FieldRef> {
        let coeffs = parse_gfp(modulus, p)?;
        Self::new(p, m, Some(&coeffs))
    }

    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<FieldRef> {
        Self::new(p, 1, None)
    }

    /// GF(q) for a prime power `q` with the default modulus.
    pub fn of_order(q: u64) -> Result<FieldRef> {
        let (p, s) = arith::prime_power(q).ok_or(Error::NotPrime(q))?;
        Self::new(p, s, None)
    }

    fn build(p: u32, degree: u32, modulus: Vec<u32>) -> Self {
        let order = p.pow(degree);
        let mut field = Field {
            p,
            degree,
            modulus,
            order,
            primitive: 0,
            exp: Vec::new(),
            log: Vec::new(),
        };
        let group = (order - 1) as u64;
        let primes = arith::prime_factors(group);
        let primitive = (1..order)
            .find(|&x| primes.iter().all(|&r| field.slow_pow(x, group / r) != 1))
            .expect("multiplicative group of a field is cyclic");
        let mut exp = vec![0u32; 2 * group as usize];
        let mut log = vec![0u32; order as usize];
        let mut x = 1;
        for (i, slot) in exp.iter_mut().enumerate().take(group as usize) {
            *slot = x;
            log[x as usize] = i as u32;
            x = field.slow_mul(x, primitive);
        }
        for i in group as usize..exp.len() {
            exp[i] = exp[i - group as usize];
        }
        field.primitive = primitive;
        field.exp = exp;
        field.log = log;
        field
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Modulus coefficients over GF(p), ascending.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn modulus_string(&self) -> String {
        text::format_coeffs(&self.modulus)
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_element(&self) -> u32 {
        self.primitive
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            a ^ b
        } else if self.degree == 1 {
            let s = a + b;
            if s >= self.p {
                s - self.p
            } else {
                s
            }
        } else {
            self.digitwise(a, b, |x, y| (x + y) % self.p)
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            a
        } else if self.degree == 1 {
            if a == 0 {
                0
            } else {
                self.p - a
            }
        } else {
            self.digitwise(a, 0, |x, _| (self.p - x) % self.p)
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let group = self.order - 1;
        Ok(self.exp[((group - self.log[a as usize]) % group) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` for any integer exponent; negative exponents invert first.
    pub fn pow(&self, a: u32, e: i64) -> Result<u32> {
        if a == 0 {
            return match e {
                0 => Ok(1),
                e if e > 0 => Ok(0),
                _ => Err(Error::DivisionByZero),
            };
        }
        let group = (self.order - 1) as i128;
        let l = (self.log[a as usize] as i128 * e as i128).rem_euclid(group);
        Ok(self.exp[l as usize])
    }

    /// Embeds an integer into the prime subfield.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    /// Coefficient vector of an element over GF(p), length `m`.
    pub fn coefficients(&self, a: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.degree as usize);
        let mut x = a;
        for _ in 0..self.degree {
            out.push(x % self.p);
            x /= self.p;
        }
        out
    }

    /// Element of multiplicative order exactly `n`: the smallest primitive
    /// element raised to `(q - 1) / n`.
    pub fn nth_root_of_unity(&self, n: u64) -> Result<u32> {
        let group = (self.order - 1) as u64;
        if n == 0 || !group.is_multiple_of(n) {
            return Err(Error::NoSuchRoot {
                n,
                q: self.order as u128,
            });
        }
        let beta = self.exp[(group / n) as usize];
        debug_assert_eq!(self.element_order(beta), n);
        Ok(beta)
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u32) -> u64 {
        assert_ne!(a, 0, "zero has no multiplicative order");
        let group = (self.order - 1) as u64;
        group / arith::gcd(group, self.log[a as usize] as u64)
    }

    fn digitwise(&self, a: u32, b: u32, op: impl Fn(u32, u32) -> u32) -> u32 {
        let (mut x, mut y, mut out, mut place) = (a, b, 0, 1);
        for _ in 0..self.degree {
            out += op(x % self.p, y % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        out
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        let (ca, cb) = (self.coefficients(a), self.coefficients(b));
        let mut prod = vec![0u32; 2 * self.degree as usize];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let rem = rem_gfp(&prod, &self.modulus, p);
        rem.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    fn slow_pow(&self, a: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (a, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            e >>= 1;
        }
        acc
    }
}

/// A field element bundled with its field, for checked arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FieldRef,
    value: u32,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl FieldElement {
    pub fn new(field: &FieldRef, value: u32) -> Result<Self> {
        if value >= field.order {
            return Err(Error::Parse(format!(
                "{value} is not an element of a field of order {}",
                field.order
            )));
        }
        Ok(Self {
            field: field.clone(),
            value,
        })
    }

    pub fn zero(field: &FieldRef) -> Self {
        Self {
            field: field.clone(),
            value: 0,
        }
    }

    pub fn one(field: &FieldRef) -> Self {
        Self {
            field: field.clone(),
            value: 1,
        }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn coefficients(&self) -> Vec<u32> {
        self.field.coefficients(self.value)
    }

    fn same(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, value: u32) -> Self {
        Self {
            field: self.field.clone(),
            value,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(self.with(self.field.div(self.value, other.value)?))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.with(self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        Ok(self.with(self.field.pow(self.value, e)?))
    }
}

/// Parses a polynomial over GF(p) into ascending coefficients.
pub(crate) fn parse_gfp(s: &str, p: u64) -> Result<Vec<u32>> {
    let terms = text::parse_terms(s)?;
    let len = terms.iter().map(|t| t.exp + 1).max().unwrap_or(0);
    let mut out = vec![0u64; len];
    for t in terms {
        let c = t.coeff % p;
        let c = if t.negative { (p - c) % p } else { c };
        out[t.exp] = (out[t.exp] + c) % p;
    }
    let mut out: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
    trim(&mut out);
    Ok(out)
}

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn rem_gfp(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = num.to_vec();
    trim(&mut r);
    let dd = den.len() - 1;
    let lead_inv = inv_mod_p(den[dd], p);
    while r.len() > dd {
        let top = r.len() - 1;
        let factor = r[top] * lead_inv % p;
        let shift = top - dd;
        for (i, &d) in den.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - factor * d % p) % p;
        }
        trim(&mut r);
    }
    r
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    let (_, s, _) = arith::egcd(a as i64, p as i64);
    s.rem_euclid(p as i64) as u32
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible_gfp(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for n in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut x = n;
            for _ in 0..d {
                cand.push((x % p as u64) as u32);
                x /= p as u64;
            }
            cand.push(1);
            if rem_gfp(f, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
    let count = (p as u64).pow(m);
    (0..count)
        .map(|n| {
            let mut f = Vec::with_capacity(m as usize + 1);
            let mut x = n;
            for _ in 0..m {
                f.push((x % p as u64) as u32);
                x /= p as u64;
            }
            f.push(1);
            f
        })
        .find(|f| is_irreducible_gfp(f, p))
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf256() -> FieldRef {
        Field::with_modulus_str(2, 8, "X^8+X^4+X^3+X^2+1").unwrap()
    }

    #[test]
    fn construction() {
        let gf2 = Field::new(2, 1, None).unwrap();
        assert_eq!(gf2.modulus(), &[0, 1]);
        assert_eq!(gf2.modulus_string(), "X");
        assert_eq!(gf256().order(), 256);
        assert!(matches!(
            Field::with_modulus_str(2, 8, "X^8+X^4+X^3+X^2+X"),
            Err(Error::NotIrreducible(_))
        ));
        assert!(matches!(Field::new(4, 1, None), Err(Error::NotPrime(4))));
        assert!(matches!(
            Field::with_modulus_str(2, 8, "X^3+X+1"),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(matches!(
            Field::new(2, 21, None),
            Err(Error::FieldTooLarge(_))
        ));
    }

    #[test]
    fn default_modulus_is_smallest() {
        // 0x11B is the lexicographically first irreducible octic over GF(2).
        let f = Field::new(2, 8, None).unwrap();
        assert_eq!(f.modulus_string(), "X^8+X^4+X^3+X+1");
        assert_eq!(Field::new(3, 2, None).unwrap().modulus_string(), "X^2+1");
        assert_eq!(Field::new(2, 2, None).unwrap().modulus_string(), "X^2+X+1");
        assert_eq!(*Field::new(2, 8, None).unwrap(), *f);
    }

    #[test]
    fn element_ops() {
        let f = gf256();
        for a in 0..256 {
            assert_eq!(f.add(a, a), 0);
        }
        let alpha = f.primitive_element();
        assert_eq!(alpha, 2);
        assert_eq!(f.pow(alpha, 255).unwrap(), 1);
        assert_eq!(f.pow(alpha, -1).unwrap(), f.inv(alpha).unwrap());
        let gf2 = Field::prime(2).unwrap();
        assert_eq!(gf2.inv(1).unwrap(), 1);
        assert_eq!(f.inv(0), Err(Error::DivisionByZero));

        let a = FieldElement::new(&f, 7).unwrap();
        let b = FieldElement::new(&gf2, 1).unwrap();
        assert_eq!(a.add(&b), Err(Error::FieldMismatch));
        assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), FieldElement::one(&f));
        assert_eq!(FieldElement::zero(&f).inv(), Err(Error::DivisionByZero));
        assert_eq!(a.coefficients(), vec![1, 1, 1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn roots_of_unity() {
        let f = gf256();
        let beta = f.nth_root_of_unity(17).unwrap();
        assert_ne!(beta, 1);
        let mut x = 1;
        for k in 1..=17 {
            x = f.mul(x, beta);
            assert_eq!(x == 1, k == 17, "beta^{k}");
        }
        assert_eq!(Field::prime(2).unwrap().nth_root_of_unity(1).unwrap(), 1);
        assert!(matches!(
            f.nth_root_of_unity(7),
            Err(Error::NoSuchRoot { .. })
        ));
    }

    #[test]
    fn field_axioms_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for f in [
            gf256(),
            Field::new(3, 3, None).unwrap(),
            Field::new(5, 1, None).unwrap(),
        ] {
            let q = f.order();
            for _ in 0..1000 {
                let (a, b, c) = (
                    rng.gen_range(0..q),
                    rng.gen_range(0..q),
                    rng.gen_range(0..q),
                );
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.sub(f.add(a, b), b), a);
                assert_eq!(f.mul(a, b), f.slow_mul(a, b));
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
            }
        }
    }

    #[test]
    fn every_nth_root_has_exact_order() {
        let f = Field::new(3, 4, None).unwrap();
        for n in 1..=80u64 {
            if 80 % n != 0 {
                continue;
            }
            let beta = f.nth_root_of_unity(n).unwrap();
            assert_eq!(f.pow(beta, n as i64).unwrap(), 1);
            assert!((1..n).all(|k| f.pow(beta, k as i64).unwrap() != 1));
        }
    }
}
