//! Cyclotomic cosets, minimal polynomials and cyclic codes.
//!
//! Minimal polynomials are computed as products of linear factors `X - alpha^j`
//! in a splitting field GF(q^r) = GF(q)[Y]/(h(Y)), where `r` is the
//! multiplicative order of `q` modulo `m`. The splitting field is a tower over
//! the base field, so the result is down-cast by checking that every
//! coefficient is a constant in `Y`.

use crate::arith;
use crate::error::{Error, Result};
use crate::field::FieldRef;
use crate::poly::Poly;

/// Orbit of `i` under multiplication by `q` modulo `m`, sorted ascending.
pub fn cyclotomic_coset(q: u64, m: u64, i: u64) -> Result<Vec<u64>> {
    if m == 0 || arith::gcd(q, m) != 1 {
        return Err(Error::NotCoprime { a: q, b: m });
    }
    if i >= m {
        return Err(Error::IndexOutOfRange {
            i: i as usize,
            j: m as usize,
        });
    }
    let mut coset = vec![i];
    let mut x = (i as u128 * q as u128 % m as u128) as u64;
    while x != i {
        coset.push(x);
        x = (x as u128 * q as u128 % m as u128) as u64;
    }
    coset.sort_unstable();
    Ok(coset)
}

/// All cosets of `{0..m}`, ordered by their smallest element.
pub fn cyclotomic_cosets(q: u64, m: u64) -> Result<Vec<Vec<u64>>> {
    let mut seen = vec![false; m as usize];
    let mut out = Vec::new();
    for i in 0..m {
        if seen[i as usize] {
            continue;
        }
        let coset = cyclotomic_coset(q, m, i)?;
        for &j in &coset {
            seen[j as usize] = true;
        }
        out.push(coset);
    }
    Ok(out)
}

/// GF(q^r) as a quotient of the polynomial ring over the base field,
/// together with a fixed element `alpha` of multiplicative order `m`.
#[derive(Debug, Clone)]
pub struct SplittingField {
    base: FieldRef,
    modulus: Poly,
    m: u64,
    alpha: Poly,
}

impl SplittingField {
    /// Uses the lexicographically smallest monic irreducible of degree
    /// `ord_m(q)` over the base field.
    pub fn new(base: &FieldRef, m: u64) -> Result<Self> {
        let q = base.order() as u64;
        if m == 0 || arith::gcd(q, m) != 1 {
            return Err(Error::NotCoprime { a: q, b: m });
        }
        let r = arith::multiplicative_order(q, m) as usize;
        let modulus = smallest_irreducible(base, r)?;
        Self::build(base, m, modulus)
    }

    /// Uses a caller-chosen extension modulus; its degree `d` must make
    /// `m | q^d - 1`.
    pub fn with_modulus(base: &FieldRef, m: u64, modulus: &Poly) -> Result<Self> {
        let q = base.order() as u64;
        if m == 0 || arith::gcd(q, m) != 1 {
            return Err(Error::NotCoprime { a: q, b: m });
        }
        if modulus.field() != base {
            return Err(Error::FieldMismatch);
        }
        let d = modulus.degree().unwrap_or(0);
        let r = arith::multiplicative_order(q, m) as usize;
        if d == 0 || !d.is_multiple_of(r) {
            return Err(Error::NoSuchRoot {
                n: m,
                q: (q as u128).saturating_pow(d as u32),
            });
        }
        let modulus = modulus.monic();
        if !is_irreducible(&modulus)? {
            return Err(Error::NotIrreducible(modulus.to_string()));
        }
        Self::build(base, m, modulus)
    }

    fn build(base: &FieldRef, m: u64, modulus: Poly) -> Result<Self> {
        let q = base.order() as u128;
        let d = modulus.degree().expect("nonzero modulus") as u32;
        let order = q.checked_pow(d).ok_or(Error::FieldTooLarge(u128::MAX))?;
        let cofactor = (order - 1) / m as u128;
        let primes = arith::prime_factors(m);
        let one = Poly::one(base);
        // Candidates in increasing encoding order; the first whose cofactor
        // power has exact order m is alpha.
        for n in 1..order {
            let x = element_from_index(base, n, d as usize);
            let y = x.pow_mod(cofactor, &modulus)?;
            if y.is_zero() {
                continue;
            }
            if primes
                .iter()
                .all(|&p| y.pow_mod((m / p) as u128, &modulus).is_ok_and(|z| z != one))
            {
                return Ok(Self {
                    base: base.clone(),
                    modulus,
                    m,
                    alpha: y,
                });
            }
        }
        Err(Error::NoSuchRoot { n: m, q: order })
    }

    pub fn base(&self) -> &FieldRef {
        &self.base
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn extension_degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    /// `alpha` as a polynomial in `Y` of degree below the extension degree.
    pub fn alpha(&self) -> &Poly {
        &self.alpha
    }

    fn ext_mul(&self, a: &Poly, b: &Poly) -> Poly {
        (a * b).rem(&self.modulus).expect("nonzero modulus")
    }

    /// `prod_{j in C_i} (X - alpha^j)`, checked to lie over the base field.
    pub fn minimal_polynomial(&self, i: u64) -> Result<Poly> {
        let q = self.base.order() as u64;
        let coset = cyclotomic_coset(q, self.m, i)?;
        let exponents: Vec<u128> = coset.iter().map(|&j| j as u128).collect();
        self.product_of_linear_factors(&exponents)
    }

    fn product_of_linear_factors(&self, exponents: &[u128]) -> Result<Poly> {
        let zero = Poly::zero(&self.base);
        // Coefficients over the extension, ascending in X.
        let mut acc: Vec<Poly> = vec![Poly::one(&self.base)];
        for &j in exponents {
            let root = self.alpha.pow_mod(j, &self.modulus)?;
            let neg_root = -&root;
            let mut next = vec![zero.clone(); acc.len() + 1];
            for (k, c) in acc.iter().enumerate() {
                next[k + 1] = &next[k + 1] + c;
                next[k] = &next[k] + &self.ext_mul(c, &neg_root);
            }
            acc = next;
        }
        let coeffs = acc
            .iter()
            .map(|c| match c.degree() {
                None => Ok(0),
                Some(0) => Ok(c.coeff(0)),
                Some(_) => Err(Error::CoefficientNotInBaseField),
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(Poly::from_coeffs(&self.base, coeffs))
    }

    /// One minimal polynomial per coset, keyed by the smallest coset member.
    pub fn factor_xm_minus_1(&self) -> Result<Vec<(u64, Poly)>> {
        cyclotomic_cosets(self.base.order() as u64, self.m)?
            .into_iter()
            .map(|c| Ok((c[0], self.minimal_polynomial(c[0])?)))
            .collect()
    }
}

/// `m_i` of `X^m - 1` over `base`, with the default splitting field.
pub fn minimal_polynomial(base: &FieldRef, m: u64, i: u64) -> Result<Poly> {
    SplittingField::new(base, m)?.minimal_polynomial(i)
}

/// Factorization of `X^m - 1` over `base` into minimal polynomials.
pub fn factor_xm_minus_1(base: &FieldRef, m: u64) -> Result<Vec<(u64, Poly)>> {
    SplittingField::new(base, m)?.factor_xm_minus_1()
}

fn element_from_index(base: &FieldRef, mut n: u128, len: usize) -> Poly {
    let q = base.order() as u128;
    let mut coeffs = Vec::with_capacity(len);
    for _ in 0..len {
        coeffs.push((n % q) as u32);
        n /= q;
    }
    Poly::from_coeffs(base, coeffs)
}

/// Rabin's test: `f` of degree `r` is irreducible iff `Y^{q^r} = Y mod f`
/// and `gcd(Y^{q^{r/d}} - Y, f) = 1` for every prime `d | r`.
pub fn is_irreducible(f: &Poly) -> Result<bool> {
    let Some(r) = f.degree() else {
        return Ok(false);
    };
    if r == 0 {
        return Ok(false);
    }
    let field = f.field();
    let q = field.order() as u128;
    let y = Poly::x(field).rem(f)?;
    // frob[k] = Y^{q^k} mod f
    let mut frob = vec![y.clone()];
    for k in 1..=r {
        let next = frob[k - 1].pow_mod(q, f)?;
        frob.push(next);
    }
    if frob[r] != y {
        return Ok(false);
    }
    for d in arith::prime_factors(r as u64) {
        let h = &frob[r / d as usize] - &y;
        if h.is_zero() || h.gcd(f)?.degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Lexicographically smallest monic irreducible of degree `r` (coefficients high to low).
pub fn smallest_irreducible(base: &FieldRef, r: usize) -> Result<Poly> {
    let q = base.order() as u128;
    let count = q
        .checked_pow(r as u32)
        .ok_or(Error::FieldTooLarge(u128::MAX))?;
    for n in 0..count {
        let mut f = element_from_index(base, n, r).coeffs().to_vec();
        f.resize(r, 0);
        f.push(1);
        let f = Poly::from_coeffs(base, f);
        if is_irreducible(&f)? {
            return Ok(f);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// A cyclic code of length `m` generated by a monic divisor of `X^m - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCode {
    length: usize,
    generator: Poly,
}

impl CyclicCode {
    pub fn new(length: usize, generator: &Poly) -> Result<Self> {
        let field = generator.field();
        let q = field.order() as u64;
        if length == 0 || arith::gcd(q, length as u64) != 1 {
            return Err(Error::NotCoprime {
                a: q,
                b: length as u64,
            });
        }
        let xm1 = Poly::x_pow_minus_one(field, length);
        if generator.is_zero() || !xm1.is_divisible_by(generator)? {
            return Err(Error::NotADivisor(length));
        }
        Ok(Self {
            length,
            generator: generator.monic(),
        })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn generator(&self) -> &Poly {
        &self.generator
    }

    pub fn field(&self) -> &FieldRef {
        self.generator.field()
    }

    pub fn dimension(&self) -> usize {
        self.length - self.generator.degree().expect("nonzero generator")
    }

    pub fn contains(&self, word: &Poly) -> bool {
        word.reduce_mod_xn(self.length)
            .is_divisible_by(&self.generator)
            .expect("nonzero generator")
    }

    /// `message * g mod X^m - 1`; the message must have degree below `k`.
    pub fn encode(&self, message: &Poly) -> Result<Poly> {
        let k = self.dimension();
        if let Some(d) = message.degree() {
            if d >= k {
                return Err(Error::MessageDegreeTooLarge {
                    index: 0,
                    degree: d,
                    bound: k,
                });
            }
        }
        Ok(message.mul_mod_xn(&self.generator, self.length))
    }
}
