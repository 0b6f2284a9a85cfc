#![allow(dead_code)]

use qcprod::arith::gcd;
use qcprod::{
    bezout_pair, factor_xm_minus_1, gf, CyclicCode, FieldRef, GeneratingMatrix, OneLevelCode, Poly,
    ProductParams,
};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn p2(s: &str) -> Poly {
    Poly::parse(&gf(2), s).unwrap()
}

/// Worked example: row code generated by `(m_1, m_1 (X+1)^3 (X^3+X^2+1))`,
/// length 34, and the `[3, 2, 2]` column code `<X+1>`.
pub struct Worked {
    pub gen_a: GeneratingMatrix,
    pub b: CyclicCode,
    pub params: ProductParams,
}

pub const G00: &str =
    "X^33+X^32+X^30+X^27+X^25+X^23+X^20+X^18+X^17+X^16+X^15+X^13+X^10+X^8+X^6+X^3+X+1";
pub const G01: &str = "X^50+X^48+X^45+X^43+X^41+X^39+X^36+X^34+X^32+X^29+X^27+X^26+X^25+X^23+X^22+X^21+X^19+X^18+X^17+X^16+X^15+X^14+X^12+X^11+X^10+X^8+X^7+X^6+X^4+X";

pub fn worked() -> Worked {
    let f = gf(2);
    let m1 = qcprod::minimal_polynomial(&f, 17, 1).unwrap();
    let m0 = qcprod::minimal_polynomial(&f, 17, 0).unwrap();
    let g01 = &(&(&m1 * &m0) * &(&m0 * &m0)) * &p2("X^3+X^2+1");
    let gen_a = GeneratingMatrix::new(&f, 2, 17, vec![vec![m1, g01]]).unwrap();
    let b = CyclicCode::new(3, &qcprod::minimal_polynomial(&f, 3, 0).unwrap()).unwrap();
    Worked {
        gen_a,
        b,
        params: bezout_pair(2, 17, 3).unwrap(),
    }
}

pub fn random_poly<R: Rng>(field: &FieldRef, len: usize, rng: &mut R) -> Poly {
    let q = field.order();
    Poly::from_coeffs(field, (0..len).map(|_| rng.gen_range(0..q)).collect())
}

/// Product of a random proper subset of the irreducible factors of `X^m - 1`
/// (never all of them, so the code is nonzero).
pub fn random_divisor<R: Rng>(field: &FieldRef, m: usize, rng: &mut R) -> Poly {
    let factors = factor_xm_minus_1(field, m as u64).unwrap();
    loop {
        let pick: Vec<bool> = factors.iter().map(|_| rng.gen_bool(0.5)).collect();
        if pick.iter().all(|&x| x) {
            continue;
        }
        return factors
            .iter()
            .zip(&pick)
            .filter(|(_, &p)| p)
            .fold(Poly::one(field), |acc, ((_, f), _)| &acc * f);
    }
}

pub struct Instance {
    pub a: OneLevelCode,
    pub b: CyclicCode,
    pub params: ProductParams,
}

/// Random 1-level row code and cyclic column code with `ell_A` in {2, 3},
/// `m_A <= 15`, `m_B <= 7`, `q` in {2, 3}.
pub fn random_instance<R: Rng>(rng: &mut R) -> Instance {
    loop {
        let q: u64 = *[2u64, 3].choose(rng).unwrap();
        let ell = rng.gen_range(2..=3usize);
        let m_a = rng.gen_range(2..=15usize);
        let m_b = rng.gen_range(2..=7usize);
        if gcd(m_a as u64, q) != 1
            || gcd(m_b as u64, q) != 1
            || gcd((ell * m_a) as u64, m_b as u64) != 1
        {
            continue;
        }
        let field = gf(q);
        let g = random_divisor(&field, m_a, rng);
        let fs = (1..ell).map(|_| random_poly(&field, m_a, rng)).collect();
        let a = OneLevelCode::new(&g, fs, m_a).unwrap();
        let b = CyclicCode::new(m_b, &random_divisor(&field, m_b, rng)).unwrap();
        return Instance {
            a,
            b,
            params: bezout_pair(ell, m_a, m_b).unwrap(),
        };
    }
}

/// Arbitrary generating matrix: `rows` random rows of `ell` polynomials of
/// degree below `m + 2` (not reduced).
pub fn random_generating_matrix<R: Rng>(
    field: &FieldRef,
    ell: usize,
    m: usize,
    rows: usize,
    rng: &mut R,
) -> GeneratingMatrix {
    let rows = (0..rows)
        .map(|_| {
            (0..ell)
                .map(|_| {
                    if rng.gen_bool(0.25) {
                        Poly::zero(field)
                    } else {
                        random_poly(field, rng.gen_range(1..=m + 2), rng)
                    }
                })
                .collect()
        })
        .collect();
    GeneratingMatrix::new(field, ell, m, rows).unwrap()
}
