//! Product of an `ell_A`-quasi-cyclic row code `A` (length `ell_A m_A`) with a
//! cyclic column code `B` (length `m_B`), for `gcd(ell_A m_A, m_B) = 1`.
//!
//! A codeword of `A (x) B` is an `m_B x ell_A m_A` array whose rows lie in `A`
//! and whose columns lie in `B`. Entry `(i, j)` becomes the coefficient of
//! `X^{f(i, j)}` of a single polynomial of degree below `ell_A m_A m_B`, which
//! makes the product `ell_A`-quasi-cyclic.

use crate::arith;
use crate::cyclic::CyclicCode;
use crate::error::{Error, Result};
use crate::field::FieldRef;
use crate::poly::Poly;
use crate::qcmodule::{self, GeneratingMatrix, PolyVector, RgbPotBasis};

/// Shape of the product and the Bezout pair `a ell_A m_A + b m_B = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductParams {
    pub ell_a: usize,
    pub m_a: usize,
    pub m_b: usize,
    pub a: i64,
    pub b: i64,
}

impl ProductParams {
    /// Validates a caller-chosen Bezout pair.
    pub fn new(ell_a: usize, m_a: usize, m_b: usize, a: i64, b: i64) -> Result<Self> {
        let n_a = (ell_a * m_a) as u64;
        if ell_a == 0 || m_a == 0 || m_b == 0 || arith::gcd(n_a, m_b as u64) != 1 {
            return Err(Error::NotCoprime {
                a: n_a,
                b: m_b as u64,
            });
        }
        if a as i128 * n_a as i128 + b as i128 * m_b as i128 != 1 {
            return Err(Error::ParamMismatch(format!("{a}*{n_a} + {b}*{m_b} != 1")));
        }
        Ok(Self {
            ell_a,
            m_a,
            m_b,
            a,
            b,
        })
    }

    /// Row-code length `ell_A m_A`.
    pub fn row_length(&self) -> usize {
        self.ell_a * self.m_a
    }

    /// Co-index of the product, `m_A m_B`.
    pub fn product_m(&self) -> usize {
        self.m_a * self.m_b
    }

    /// Product length `ell_A m_A m_B`.
    pub fn length(&self) -> usize {
        self.ell_a * self.m_a * self.m_b
    }

    /// Exponent `a ell_A m_A` substituted into the column generator.
    pub fn column_exponent(&self) -> i64 {
        self.a * (self.ell_a * self.m_a) as i64
    }

    /// Exponent `b m_B` substituted into the row generators.
    pub fn row_exponent(&self) -> i64 {
        self.b * self.m_b as i64
    }

    /// Exponent of the diagonal twist on component `h`: `-h a m_A`.
    pub fn twist_exponent(&self, h: usize) -> i64 {
        -(h as i64) * self.a * self.m_a as i64
    }
}

/// Canonical pair: `a` is the least positive inverse of `ell_A m_A` modulo `m_B`.
pub fn bezout_pair(ell_a: usize, m_a: usize, m_b: usize) -> Result<ProductParams> {
    let n_a = (ell_a * m_a) as i64;
    let m_b_i = m_b as i64;
    if ell_a == 0 || m_a == 0 || m_b == 0 || arith::gcd(n_a as u64, m_b as u64) != 1 {
        return Err(Error::NotCoprime {
            a: n_a as u64,
            b: m_b as u64,
        });
    }
    let (_, s, _) = arith::egcd(n_a, m_b_i);
    let mut a = s.rem_euclid(m_b_i);
    if a == 0 {
        a = m_b_i;
    }
    let b = (1 - a as i128 * n_a as i128) / m_b as i128;
    ProductParams::new(ell_a, m_a, m_b, a, b as i64)
}

/// `f(i, j) = i a ell_A^2 m_A + j b m_B mod ell_A m_A m_B`.
pub fn map_f(i: usize, j: usize, p: &ProductParams) -> Result<usize> {
    if i >= p.m_b || j >= p.row_length() {
        return Err(Error::IndexOutOfRange { i, j });
    }
    Ok(f_index(i, j, p))
}

fn f_index(i: usize, j: usize, p: &ProductParams) -> usize {
    let v = i as i128 * p.a as i128 * (p.ell_a * p.m_a * p.ell_a) as i128
        + j as i128 * p.b as i128 * p.m_b as i128;
    arith::mod_floor(v, p.length() as u64) as usize
}

/// `g(i, j) = i a ell_A m_A + j b m_B mod m_A m_B`.
pub fn map_g(i: usize, j: usize, p: &ProductParams) -> Result<usize> {
    if i >= p.m_b || j >= p.m_a {
        return Err(Error::IndexOutOfRange { i, j });
    }
    Ok(g_index(i, j, p))
}

fn g_index(i: usize, j: usize, p: &ProductParams) -> usize {
    let v = i as i128 * p.a as i128 * (p.ell_a * p.m_a) as i128
        + j as i128 * p.b as i128 * p.m_b as i128;
    arith::mod_floor(v, p.product_m() as u64) as usize
}

/// Exponent of `m_{i, j ell_A + h}` inside component `h`: `g(i, j) - h a m_A mod m_A m_B`.
fn component_index(i: usize, j: usize, h: usize, p: &ProductParams) -> usize {
    let v = g_index(i, j, p) as i128 + p.twist_exponent(h) as i128;
    arith::mod_floor(v, p.product_m() as u64) as usize
}

/// An `m_B x ell_A m_A` array over GF(q), row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodewordMatrix {
    field: FieldRef,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl CodewordMatrix {
    pub fn new(field: &FieldRef, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if data.iter().any(|&x| x >= field.order()) {
            return Err(Error::Parse("entry outside the field".into()));
        }
        Ok(Self {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: &FieldRef, rows: usize, cols: usize) -> Self {
        Self {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// `m_{i,j} = column_i * row_j` for a row codeword (serialized, length
    /// `cols`) and a column codeword (length `rows`).
    pub fn outer(column: &Poly, row: &Poly, rows: usize, cols: usize) -> Result<Self> {
        if column.field() != row.field() {
            return Err(Error::FieldMismatch);
        }
        if column.coeffs().len() > rows || row.coeffs().len() > cols {
            return Err(Error::DimensionMismatch(
                "outer product factors too long".into(),
            ));
        }
        let f = column.field();
        let mut out = Self::zeros(f, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.data[i * cols + j] = f.mul(column.coeff(i), row.coeff(j));
            }
        }
        Ok(out)
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        assert!(v < self.field.order());
        self.data[i * self.cols + j] = v;
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    /// Row `i` as a polynomial in serialized row-code order.
    pub fn row_poly(&self, i: usize) -> Poly {
        Poly::from_coeffs(
            &self.field,
            self.data[i * self.cols..(i + 1) * self.cols].to_vec(),
        )
    }

    /// `b_j(X) = sum_i m_{i,j} X^i`.
    pub fn column_poly(&self, j: usize) -> Poly {
        Poly::from_coeffs(
            &self.field,
            (0..self.rows).map(|i| self.get(i, j)).collect(),
        )
    }

    fn check_shape(&self, p: &ProductParams) -> Result<()> {
        if self.rows != p.m_b || self.cols != p.row_length() {
            return Err(Error::DimensionMismatch(format!(
                "matrix is {}x{}, parameters need {}x{}",
                self.rows,
                self.cols,
                p.m_b,
                p.row_length()
            )));
        }
        Ok(())
    }
}

/// `c(X) = sum m_{i,j} X^{f(i,j)}`.
pub fn matrix_to_univariate(mat: &CodewordMatrix, p: &ProductParams) -> Result<Poly> {
    mat.check_shape(p)?;
    let mut coeffs = vec![0u32; p.length()];
    for i in 0..p.m_b {
        for j in 0..p.row_length() {
            coeffs[f_index(i, j, p)] = mat.get(i, j);
        }
    }
    Ok(Poly::from_coeffs(&mat.field, coeffs))
}

/// Inverse of [`matrix_to_univariate`].
pub fn univariate_to_matrix(c: &Poly, p: &ProductParams) -> Result<CodewordMatrix> {
    if c.coeffs().len() > p.length() {
        return Err(Error::DegreeOverflow {
            degree: c.degree().unwrap_or(0),
            bound: p.length(),
        });
    }
    let mut out = CodewordMatrix::zeros(c.field(), p.m_b, p.row_length());
    for i in 0..p.m_b {
        for j in 0..p.row_length() {
            out.data[i * out.cols + j] = c.coeff(f_index(i, j, p));
        }
    }
    Ok(out)
}

/// The `ell_A` components
/// `c_h(X) = X^{-h a m_A} sum_{i,j} m_{i, j ell_A + h} X^{g(i,j)} mod X^{m_A m_B} - 1`.
pub fn matrix_to_components(mat: &CodewordMatrix, p: &ProductParams) -> Result<PolyVector> {
    mat.check_shape(p)?;
    let n = p.product_m();
    let components = (0..p.ell_a)
        .map(|h| {
            let mut coeffs = vec![0u32; n];
            for i in 0..p.m_b {
                for j in 0..p.m_a {
                    coeffs[component_index(i, j, h, p)] = mat.get(i, j * p.ell_a + h);
                }
            }
            Poly::from_coeffs(&mat.field, coeffs)
        })
        .collect();
    PolyVector::new(n, components)
}

/// Inverse of [`matrix_to_components`].
pub fn components_to_matrix(c: &PolyVector, p: &ProductParams) -> Result<CodewordMatrix> {
    if c.ell() != p.ell_a || c.m() != p.product_m() {
        return Err(Error::DimensionMismatch(format!(
            "vector is {}x{}, parameters need {}x{}",
            c.ell(),
            c.m(),
            p.ell_a,
            p.product_m()
        )));
    }
    let mut out = CodewordMatrix::zeros(c.field(), p.m_b, p.row_length());
    for h in 0..p.ell_a {
        let comp = &c.components()[h];
        for i in 0..p.m_b {
            for j in 0..p.m_a {
                out.data[i * out.cols + j * p.ell_a + h] = comp.coeff(component_index(i, j, h, p));
            }
        }
    }
    Ok(out)
}

fn check_params(
    field: &FieldRef,
    ell: usize,
    m: usize,
    b: &CyclicCode,
    p: &ProductParams,
) -> Result<()> {
    if ell != p.ell_a || m != p.m_a || b.length() != p.m_b {
        return Err(Error::ParamMismatch(format!(
            "codes have (ell_A, m_A, m_B) = ({ell}, {m}, {}), parameters say ({}, {}, {})",
            b.length(),
            p.ell_a,
            p.m_a,
            p.m_b
        )));
    }
    if b.field() != field {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

/// Unreduced generating set of `A (x) B`: entry `(i, j)` is
/// `g_B(X^{a ell_A m_A}) g_A[i][j](X^{b m_B}) X^{-j a m_A} mod X^{m_A m_B} - 1`.
/// The rows `(X^{m_A m_B} - 1) e_j` stay implicit.
pub fn unreduced_product_basis(
    ga: &RgbPotBasis,
    b: &CyclicCode,
    p: &ProductParams,
) -> Result<GeneratingMatrix> {
    check_params(ga.field(), ga.ell(), ga.m(), b, p)?;
    let field = ga.field();
    let n = p.product_m();
    let gb_z = b.generator().modular_substitute(p.column_exponent(), n);
    let rows = ga
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(j, g)| {
                    let twist = Poly::x_pow_mod(field, p.twist_exponent(j), n);
                    gb_z.mul_mod_xn(&g.modular_substitute(p.row_exponent(), n), n)
                        .mul_mod_xn(&twist, n)
                })
                .collect()
        })
        .collect();
    GeneratingMatrix::new(field, p.ell_a, n, rows)
}

/// A 1-level code: single generating row `(g, g f_1, ..., g f_{ell-1})` with `g | X^m - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneLevelCode {
    g: Poly,
    multipliers: Vec<Poly>,
    m: usize,
}

impl OneLevelCode {
    /// `multipliers` holds `f_1, ..., f_{ell-1}`.
    pub fn new(g: &Poly, multipliers: Vec<Poly>, m: usize) -> Result<Self> {
        let field = g.field();
        let xm1 = Poly::x_pow_minus_one(field, m);
        if g.is_zero() || !xm1.is_divisible_by(g)? {
            return Err(Error::NotADivisor(m));
        }
        let g = g.monic();
        if g == xm1 {
            return Err(Error::NotOneLevel(0));
        }
        if multipliers.iter().any(|f| f.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Self {
            g,
            multipliers: multipliers.iter().map(|f| f.reduce_mod_xn(m)).collect(),
            m,
        })
    }

    /// Reads `g = g[0][0]` and `f_i = g[0][i] / g` off a 1-level reduced basis.
    pub fn from_basis(b: &RgbPotBasis) -> Result<Self> {
        let lvl = qcmodule::level(b)?;
        if lvl != 1 {
            return Err(Error::NotOneLevel(lvl));
        }
        let g = b.diagonal(0).clone();
        let multipliers = (1..b.ell())
            .map(|i| {
                let (q, r) = b.entry(0, i).divmod(&g)?;
                if r.is_zero() {
                    Ok(q)
                } else {
                    Err(Error::ParamMismatch(format!(
                        "g[0][{i}] is not a multiple of g[0][0]"
                    )))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&g, multipliers, b.m())
    }

    pub fn generator(&self) -> &Poly {
        &self.g
    }

    pub fn multipliers(&self) -> &[Poly] {
        &self.multipliers
    }

    pub fn ell(&self) -> usize {
        self.multipliers.len() + 1
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn field(&self) -> &FieldRef {
        self.g.field()
    }

    /// `(g, g f_1 mod X^m - 1, ...)`.
    pub fn row(&self) -> Vec<Poly> {
        std::iter::once(self.g.clone())
            .chain(
                self.multipliers
                    .iter()
                    .map(|f| self.g.mul_mod_xn(f, self.m)),
            )
            .collect()
    }

    /// Full `ell x ell` basis: the row above, then `X^m - 1` on the remaining diagonal.
    pub fn to_basis(&self) -> RgbPotBasis {
        let field = self.field();
        let ell = self.ell();
        let xm1 = Poly::x_pow_minus_one(field, self.m);
        let mut rows = vec![self.row()];
        for i in 1..ell {
            let mut r = vec![Poly::zero(field); ell];
            r[i] = xm1.clone();
            rows.push(r);
        }
        RgbPotBasis::from_rows(field, self.m, rows).expect("well-formed rows")
    }

    pub fn dimension(&self) -> usize {
        self.m - self.g.degree().expect("nonzero generator")
    }
}

/// Closed-form reduced basis of a 1-level product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneLevelProduct {
    code: OneLevelCode,
    untwisted: Vec<Poly>,
}

impl OneLevelProduct {
    /// The product code with the diagonal twist applied; this is the code
    /// spanned by the serialization `f`.
    pub fn code(&self) -> &OneLevelCode {
        &self.code
    }

    pub fn row(&self) -> Vec<Poly> {
        self.code.row()
    }

    /// `(g, g f_1(X^{b m_B}), ..., g f_{ell-1}(X^{b m_B}))` reduced modulo
    /// `X^{m_A m_B} - 1`, before multiplying by `diag(1, X^{-a m_A}, ...)`.
    pub fn untwisted_row(&self) -> &[Poly] {
        &self.untwisted
    }

    pub fn to_basis(&self) -> RgbPotBasis {
        self.code.to_basis()
    }
}

/// `g = gcd(X^{m_A m_B} - 1, g_A(X^{b m_B}) g_B(X^{a ell_A m_A}))` and row
/// entries `g f_i(X^{b m_B}) X^{-i a m_A} mod X^{m_A m_B} - 1`.
pub fn one_level_product_rgb(
    a: &OneLevelCode,
    b: &CyclicCode,
    p: &ProductParams,
) -> Result<OneLevelProduct> {
    check_params(a.field(), a.ell(), a.m(), b, p)?;
    let field = a.field();
    let n = p.product_m();
    let xn1 = Poly::x_pow_minus_one(field, n);
    let ga_y = a.generator().modular_substitute(p.row_exponent(), n);
    let gb_z = b.generator().modular_substitute(p.column_exponent(), n);
    let g = xn1.gcd(&ga_y.mul_mod_xn(&gb_z, n))?;

    let substituted: Vec<Poly> = a
        .multipliers()
        .iter()
        .map(|f| f.modular_substitute(p.row_exponent(), n))
        .collect();
    let untwisted = std::iter::once(g.clone())
        .chain(substituted.iter().map(|f| g.mul_mod_xn(f, n)))
        .collect();
    let multipliers = substituted
        .iter()
        .enumerate()
        .map(|(i, f)| f.mul_mod_xn(&Poly::x_pow_mod(field, p.twist_exponent(i + 1), n), n))
        .collect();
    Ok(OneLevelProduct {
        code: OneLevelCode::new(&g, multipliers, n)?,
        untwisted,
    })
}

/// Closed form straight from a reduced basis; fails unless it is 1-level.
pub fn one_level_product_from_basis(
    ga: &RgbPotBasis,
    b: &CyclicCode,
    p: &ProductParams,
) -> Result<OneLevelProduct> {
    one_level_product_rgb(&OneLevelCode::from_basis(ga)?, b, p)
}
