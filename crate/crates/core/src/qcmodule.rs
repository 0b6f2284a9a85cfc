//! Quasi-cyclic codes as submodules of `F_q[X]^ell` containing
//! `(X^m - 1) e_j` for every position `j`.
//!
//! Position 0 is the most significant position of the POT order, so a reduced
//! basis is an upper-triangular `ell x ell` matrix `G` with
//!
//! 1. `g[i][j] = 0` for `j < i`,
//! 2. `deg g[j][i] < deg g[i][i]` for `j < i`,
//! 3. `g[i][i] | X^m - 1`,
//! 4. `g[i][j] = 0` for `j > i` whenever `g[i][i] = X^m - 1`,
//!
//! and, for canonicity, every diagonal entry monic.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldRef;
use crate::poly::Poly;

/// A codeword `(c_0(X), ..., c_{ell-1}(X))` with every component of degree below `m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyVector {
    m: usize,
    components: Vec<Poly>,
}

impl PolyVector {
    pub fn new(m: usize, components: Vec<Poly>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::ShapeMismatch(
                "a vector needs at least one component".into(),
            ));
        }
        let field = components[0].field().clone();
        for c in &components {
            if *c.field() != field {
                return Err(Error::FieldMismatch);
            }
            if let Some(d) = c.degree() {
                if d >= m {
                    return Err(Error::DegreeOverflow {
                        degree: d,
                        bound: m,
                    });
                }
            }
        }
        Ok(Self { m, components })
    }

    pub fn zero(field: &FieldRef, ell: usize, m: usize) -> Self {
        Self {
            m,
            components: vec![Poly::zero(field); ell],
        }
    }

    pub fn ell(&self) -> usize {
        self.components.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn field(&self) -> &FieldRef {
        self.components[0].field()
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }
}

/// Interleaves components: `c(X) = sum_i c_i(X^ell) X^i`.
pub fn vector_to_univariate(c: &PolyVector) -> Poly {
    let ell = c.ell();
    let mut coeffs = vec![0u32; ell * c.m];
    for (i, comp) in c.components.iter().enumerate() {
        for (j, &a) in comp.coeffs().iter().enumerate() {
            coeffs[j * ell + i] = a;
        }
    }
    Poly::from_coeffs(c.field(), coeffs)
}

/// Inverse of [`vector_to_univariate`]: component `i` collects the coefficients
/// at positions congruent to `i` modulo `ell`.
pub fn univariate_to_vector(c: &Poly, ell: usize, m: usize) -> Result<PolyVector> {
    if let Some(d) = c.degree() {
        if d >= ell * m {
            return Err(Error::DegreeOverflow {
                degree: d,
                bound: ell * m,
            });
        }
    }
    let components = (0..ell)
        .map(|i| {
            let coeffs = (0..m).map(|j| c.coeff(j * ell + i)).collect();
            Poly::from_coeffs(c.field(), coeffs)
        })
        .collect();
    Ok(PolyVector { m, components })
}

/// Cyclic shift by `ell` positions of the length-`ell m` serialization:
/// `X^ell * c(X) mod X^{ell m} - 1` on the univariate image, which is every
/// component multiplied by `X` modulo `X^m - 1`.
pub fn qc_shift(c: &PolyVector) -> PolyVector {
    let (ell, m) = (c.ell(), c.m);
    let shifted = vector_to_univariate(c).shift(ell).reduce_mod_xn(ell * m);
    univariate_to_vector(&shifted, ell, m).expect("degree below ell*m")
}

/// Explicit generator rows; the rows `(X^m - 1) e_j` are always implied.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratingMatrix {
    field: FieldRef,
    ell: usize,
    m: usize,
    rows: Vec<Vec<Poly>>,
}

impl GeneratingMatrix {
    pub fn new(field: &FieldRef, ell: usize, m: usize, rows: Vec<Vec<Poly>>) -> Result<Self> {
        if ell == 0 || m == 0 {
            return Err(Error::ShapeMismatch("ell and m must be positive".into()));
        }
        for row in &rows {
            if row.len() != ell {
                return Err(Error::ShapeMismatch(format!(
                    "row has {} entries, expected {ell}",
                    row.len()
                )));
            }
            if row.iter().any(|p| p.field() != field) {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(Self {
            field: field.clone(),
            ell,
            m,
            rows,
        })
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.rows
    }
}

/// An `ell x ell` upper-triangular basis. Construction does not validate;
/// use [`is_rgb_pot`] for diagnostics.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RgbPotBasis {
    field: FieldRef,
    ell: usize,
    m: usize,
    rows: Vec<Vec<Poly>>,
}

impl RgbPotBasis {
    pub fn from_rows(field: &FieldRef, m: usize, rows: Vec<Vec<Poly>>) -> Result<Self> {
        let ell = rows.len();
        let gm = GeneratingMatrix::new(field, ell, m, rows)?;
        Ok(Self {
            field: gm.field,
            ell,
            m,
            rows: gm.rows,
        })
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.rows[i][j]
    }

    pub fn diagonal(&self, i: usize) -> &Poly {
        &self.rows[i][i]
    }

    pub fn to_generating_matrix(&self) -> GeneratingMatrix {
        GeneratingMatrix {
            field: self.field.clone(),
            ell: self.ell,
            m: self.m,
            rows: self.rows.clone(),
        }
    }

    fn is_full(&self, i: usize) -> bool {
        self.rows[i][i] == Poly::x_pow_minus_one(&self.field, self.m)
    }

    /// Rows whose diagonal differs from `X^m - 1`; they generate the code over `R`.
    pub fn reduced_generating_set(&self) -> Vec<&[Poly]> {
        (0..self.ell)
            .filter(|&i| !self.is_full(i))
            .map(|i| self.rows[i].as_slice())
            .collect()
    }
}

impl fmt::Display for RgbPotBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Poly::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

fn axpy(row: &mut [Poly], factor: &Poly, other: &[Poly], from: usize) {
    // row -= factor * other, on positions >= from
    for k in from..row.len() {
        if !other[k].is_zero() {
            row[k] = &row[k] - &(factor * &other[k]);
        }
    }
}

/// Canonical RGB/POT basis of the module generated by `gen` and `(X^m - 1) e_j`.
///
/// Column-by-column Hermite elimination with extended gcds, then monic
/// diagonals, zeroed rows behind `X^m - 1` diagonals, and above-diagonal
/// entries reduced modulo the diagonal below them.
pub fn rgb_pot_reduce(gen: &GeneratingMatrix) -> RgbPotBasis {
    let (field, ell, m) = (&gen.field, gen.ell, gen.m);
    let xm1 = Poly::x_pow_minus_one(field, m);
    let zero = Poly::zero(field);

    // Reducing entries modulo X^m - 1 subtracts multiples of implicit rows that
    // stay untouched until their own column is processed.
    let mut rest: Vec<Vec<Poly>> = gen
        .rows
        .iter()
        .map(|row| row.iter().map(|p| p.reduce_mod_xn(m)).collect::<Vec<_>>())
        .filter(|row: &Vec<Poly>| row.iter().any(|p| !p.is_zero()))
        .collect();
    let mut basis: Vec<Vec<Poly>> = Vec::with_capacity(ell);

    for col in 0..ell {
        let mut pivot = vec![zero.clone(); ell];
        pivot[col] = xm1.clone();
        let mut others = Vec::with_capacity(rest.len());
        for mut row in rest.drain(..) {
            if row[col].is_zero() {
                others.push(row);
                continue;
            }
            let (g, s, t) = pivot[col].egcd(&row[col]).expect("pivot entry is nonzero");
            let a = pivot[col].divmod(&g).expect("g nonzero").0;
            let b = row[col].divmod(&g).expect("g nonzero").0;
            let mut new_pivot = Vec::with_capacity(ell);
            for k in 0..ell {
                if k < col {
                    new_pivot.push(zero.clone());
                    continue;
                }
                new_pivot.push(&(&s * &pivot[k]) + &(&t * &row[k]));
                let cleared = &(&a * &row[k]) - &(&b * &pivot[k]);
                row[k] = cleared;
            }
            debug_assert!(row[col].is_zero());
            pivot = new_pivot;
            for p in row.iter_mut().skip(col + 1) {
                *p = p.reduce_mod_xn(m);
            }
            if row.iter().any(|p| !p.is_zero()) {
                others.push(row);
            }
            for p in pivot.iter_mut().skip(col + 1) {
                *p = p.reduce_mod_xn(m);
            }
        }
        basis.push(pivot);
        rest = others;
    }
    debug_assert!(rest.is_empty());

    for (i, row) in basis.iter_mut().enumerate() {
        let inv = field
            .inv(row[i].leading_coeff())
            .expect("diagonal divides X^m - 1");
        for p in row.iter_mut() {
            *p = p.scale(inv);
        }
        if row[i] == xm1 {
            for p in row.iter_mut().skip(i + 1) {
                *p = zero.clone();
            }
        }
    }
    for i in 1..ell {
        let (above, below) = basis.split_at_mut(i);
        let row_i = &below[0];
        for row_j in above.iter_mut() {
            let q = row_j[i].divmod(&row_i[i]).expect("nonzero diagonal").0;
            if !q.is_zero() {
                axpy(row_j, &q, row_i, i);
            }
        }
    }

    RgbPotBasis {
        field: field.clone(),
        ell,
        m,
        rows: basis,
    }
}

/// A violated basis condition, with the offending entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Condition 1: nonzero entry below the diagonal.
    BelowDiagonal { row: usize, col: usize },
    /// Condition 2: `deg g[row][col] >= deg g[col][col]`.
    AboveDiagonalDegree { row: usize, col: usize },
    /// Condition 3: diagonal does not divide `X^m - 1`.
    DiagonalNotDivisor { index: usize },
    /// Condition 4: nonzero entry right of an `X^m - 1` diagonal.
    NonzeroAfterFullDiagonal { row: usize, col: usize },
    /// Normalization: diagonal not monic.
    DiagonalNotMonic { index: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RgbReport {
    pub violations: Vec<Violation>,
}

impl RgbReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn is_rgb_pot(b: &RgbPotBasis) -> RgbReport {
    let xm1 = Poly::x_pow_minus_one(&b.field, b.m);
    let mut violations = Vec::new();
    for i in 0..b.ell {
        for j in 0..i {
            if !b.rows[i][j].is_zero() {
                violations.push(Violation::BelowDiagonal { row: i, col: j });
            }
        }
    }
    for i in 0..b.ell {
        let diag = &b.rows[i][i];
        for j in 0..i {
            let entry = &b.rows[j][i];
            if !entry.is_zero() && (diag.is_zero() || entry.degree() >= diag.degree()) {
                violations.push(Violation::AboveDiagonalDegree { row: j, col: i });
            }
        }
        if diag.is_zero() || !xm1.is_divisible_by(diag).expect("nonzero diagonal") {
            violations.push(Violation::DiagonalNotDivisor { index: i });
        }
        if !diag.is_zero() && !diag.is_monic() {
            violations.push(Violation::DiagonalNotMonic { index: i });
        }
        if diag.monic() == xm1 {
            for j in i + 1..b.ell {
                if !b.rows[i][j].is_zero() {
                    violations.push(Violation::NonzeroAfterFullDiagonal { row: i, col: j });
                }
            }
        }
    }
    RgbReport { violations }
}

/// `k = ell m - sum deg g[i][i]`.
pub fn dimension(b: &RgbPotBasis) -> usize {
    let used: usize = (0..b.ell)
        .map(|i| b.rows[i][i].degree().unwrap_or(b.m))
        .sum();
    b.ell * b.m - used
}

/// Number of leading diagonal entries different from `X^m - 1`.
pub fn level(b: &RgbPotBasis) -> Result<usize> {
    let full: Vec<bool> = (0..b.ell).map(|i| b.is_full(i)).collect();
    let r = full.iter().take_while(|&&f| !f).count();
    if full[r..].iter().all(|&f| f) {
        Ok(r)
    } else {
        Err(Error::NonPrefixPattern)
    }
}

/// `c = i(X) G(X)`, each component reduced modulo `X^m - 1`.
pub fn encode(b: &RgbPotBasis, message: &PolyVector) -> Result<PolyVector> {
    if message.ell() != b.ell || message.m != b.m {
        return Err(Error::ShapeMismatch(format!(
            "message is {}x{}, basis is {}x{}",
            message.ell(),
            message.m,
            b.ell,
            b.m
        )));
    }
    if *message.field() != b.field {
        return Err(Error::FieldMismatch);
    }
    let mut out = vec![Poly::zero(&b.field); b.ell];
    for (j, i_j) in message.components.iter().enumerate() {
        let bound = b.m - b.rows[j][j].degree().unwrap_or(b.m);
        if let Some(d) = i_j.degree() {
            if d >= bound {
                return Err(Error::MessageDegreeTooLarge {
                    index: j,
                    degree: d,
                    bound,
                });
            }
        } else {
            continue;
        }
        for (k, g) in b.rows[j].iter().enumerate() {
            out[k] = &out[k] + &(i_j * g);
        }
    }
    let components = out.into_iter().map(|p| p.reduce_mod_xn(b.m)).collect();
    Ok(PolyVector { m: b.m, components })
}

/// Sequential division by the diagonal entries, positions `0..ell`.
/// Returns the remainder vector; it is zero exactly for module members.
pub fn normal_form(b: &RgbPotBasis, v: &[Poly]) -> Vec<Poly> {
    let mut v: Vec<Poly> = v.to_vec();
    for i in 0..b.ell {
        let (q, r) = v[i].divmod(&b.rows[i][i]).expect("nonzero diagonal");
        if !q.is_zero() {
            axpy(&mut v, &q, &b.rows[i], i + 1);
        }
        v[i] = r;
    }
    v
}

pub fn contains(b: &RgbPotBasis, c: &PolyVector) -> bool {
    c.ell() == b.ell && normal_form(b, &c.components).iter().all(Poly::is_zero)
}

/// A code of length `ell m` described by its reduced basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiCyclicCode {
    basis: RgbPotBasis,
    dimension: usize,
}

impl QuasiCyclicCode {
    pub fn from_generating_matrix(gen: &GeneratingMatrix) -> Self {
        let basis = rgb_pot_reduce(gen);
        let dimension = dimension(&basis);
        Self { basis, dimension }
    }

    pub fn basis(&self) -> &RgbPotBasis {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn length(&self) -> usize {
        self.basis.ell * self.basis.m
    }

    pub fn contains(&self, c: &PolyVector) -> bool {
        contains(&self.basis, c)
    }
}
