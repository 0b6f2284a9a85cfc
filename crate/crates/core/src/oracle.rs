//! Brute-force ground truth at desk scale: linear expansions of polynomial
//! bases, exact minimum distance by enumeration, and membership checks.

use std::thread;
use std::time::Instant;

use crate::cyclic::CyclicCode;
use crate::error::{Error, Result};
use crate::field::FieldRef;
use crate::linalg::RowSpace;
use crate::poly::Poly;
use crate::product::{self, CodewordMatrix, ProductParams};
use crate::qcmodule::{self, GeneratingMatrix, PolyVector, RgbPotBasis};

/// Default cap on the number of enumerated messages.
pub const DEFAULT_GUARD: u128 = 1 << 26;

/// A `k x n` generator array over GF(q) with rank `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCodeView {
    field: FieldRef,
    n: usize,
    generator: Vec<Vec<u32>>,
}

impl LinearCodeView {
    /// Keeps a maximal independent subset of `rows`, in order.
    pub fn from_spanning_rows(
        field: &FieldRef,
        n: usize,
        rows: impl IntoIterator<Item = Vec<u32>>,
    ) -> Self {
        let mut space = RowSpace::new(field, n);
        let generator = rows.into_iter().filter(|r| space.insert(r)).collect();
        Self {
            field: field.clone(),
            n,
            generator,
        }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.generator.len()
    }

    pub fn generator(&self) -> &[Vec<u32>] {
        &self.generator
    }

    pub fn row_space(&self) -> RowSpace {
        RowSpace::from_rows(
            &self.field,
            self.n,
            self.generator.iter().map(Vec::as_slice),
        )
    }

    pub fn contains(&self, word: &[u32]) -> bool {
        word.len() == self.n && self.row_space().contains(word)
    }

    /// Same code, possibly different generators.
    pub fn same_code(&self, other: &Self) -> bool {
        self.field == other.field && self.n == other.n && self.row_space() == other.row_space()
    }

    fn message_count(&self) -> Option<u128> {
        (self.field.order() as u128).checked_pow(self.dimension() as u32)
    }
}

fn padded(p: &Poly, n: usize) -> Vec<u32> {
    let mut v = p.coeffs().to_vec();
    v.resize(n, 0);
    v
}

fn serialize_row(row: &[Poly], m: usize) -> Vec<u32> {
    let ell = row.len();
    let mut out = vec![0u32; ell * m];
    for (i, c) in row.iter().enumerate() {
        for (j, &x) in c.reduce_mod_xn(m).coeffs().iter().enumerate() {
            out[j * ell + i] = x;
        }
    }
    out
}

fn shifted_row(row: &[Poly], t: usize, m: usize) -> Vec<Poly> {
    row.iter().map(|c| c.shift(t).reduce_mod_xn(m)).collect()
}

/// Rows `X^t (row i)` for `0 <= t < m - deg g[i][i]`, serialized.
/// Fails with `RankMismatch` if their rank is not the dimension formula.
pub fn expand_to_linear(b: &RgbPotBasis) -> Result<LinearCodeView> {
    let (ell, m) = (b.ell(), b.m());
    let mut generator = Vec::new();
    for (i, row) in b.rows().iter().enumerate() {
        let free = m - row[i].degree().unwrap_or(m).min(m);
        for t in 0..free {
            generator.push(serialize_row(&shifted_row(row, t, m), m));
        }
    }
    let expected = qcmodule::dimension(b);
    let rank = crate::linalg::rank(b.field(), ell * m, &generator);
    if rank != expected || generator.len() != expected {
        return Err(Error::RankMismatch { rank, expected });
    }
    Ok(LinearCodeView {
        field: b.field().clone(),
        n: ell * m,
        generator,
    })
}

/// Span of every shift `X^t (row)`, `0 <= t < m`, of the explicit rows.
/// Independent of any reduction.
pub fn expand_generating_matrix(gen: &GeneratingMatrix) -> LinearCodeView {
    let m = gen.m();
    let rows = gen
        .rows()
        .iter()
        .flat_map(|row| (0..m).map(move |t| serialize_row(&shifted_row(row, t, m), m)));
    LinearCodeView::from_spanning_rows(gen.field(), gen.ell() * m, rows)
}

pub fn cyclic_view(c: &CyclicCode) -> LinearCodeView {
    let n = c.length();
    let free = c.dimension();
    let rows = (0..free)
        .map(|t| padded(&c.generator().shift(t), n))
        .collect();
    LinearCodeView {
        field: c.field().clone(),
        n,
        generator: rows,
    }
}

/// The product code built directly from its definition: all `m_B x n_A`
/// arrays with rows in `A` and columns in `B`, spanned by outer products of
/// generators and serialized through `f`.
pub fn product_view(
    a: &LinearCodeView,
    b: &LinearCodeView,
    p: &ProductParams,
) -> Result<LinearCodeView> {
    if a.n != p.row_length() || b.n != p.m_b {
        return Err(Error::ShapeMismatch(format!(
            "codes of length {} and {} do not fit parameters {}x{}",
            a.n,
            b.n,
            p.m_b,
            p.row_length()
        )));
    }
    if a.field != b.field {
        return Err(Error::FieldMismatch);
    }
    let f = &a.field;
    let mut rows = Vec::with_capacity(a.dimension() * b.dimension());
    for col in &b.generator {
        for row in &a.generator {
            let mat = CodewordMatrix::outer(
                &Poly::from_coeffs(f, col.clone()),
                &Poly::from_coeffs(f, row.clone()),
                p.m_b,
                p.row_length(),
            )?;
            rows.push(padded(&product::matrix_to_univariate(&mat, p)?, p.length()));
        }
    }
    Ok(LinearCodeView::from_spanning_rows(f, p.length(), rows))
}

/// Enumeration limits for [`min_distance_with`].
#[derive(Clone, Copy, Debug)]
pub struct Enumeration {
    pub guard: u128,
    pub threads: usize,
}

impl Default for Enumeration {
    fn default() -> Self {
        Self {
            guard: DEFAULT_GUARD,
            threads: thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistanceReport {
    pub n: usize,
    pub k: usize,
    /// Minimum nonzero weight; 0 for the zero code.
    pub d: usize,
    pub enumerated: u128,
    pub elapsed_ms: u128,
}

pub fn min_distance(v: &LinearCodeView) -> Result<usize> {
    Ok(min_distance_with(v, Enumeration::default())?.d)
}

/// Exact minimum distance over all `q^k - 1` nonzero messages. The message
/// space is split into contiguous ranges, one per worker, and the local
/// minima are combined.
pub fn min_distance_with(v: &LinearCodeView, opts: Enumeration) -> Result<DistanceReport> {
    let start = Instant::now();
    let total = v
        .message_count()
        .filter(|&c| c <= opts.guard)
        .ok_or(Error::TooLarge {
            count: v.message_count().unwrap_or(u128::MAX),
            guard: opts.guard,
        })?;
    let k = v.dimension();
    let d = if k == 0 {
        0
    } else {
        let mults = scalar_multiples(v);
        let workers = opts.threads.clamp(1, 256) as u128;
        let chunk = total.div_ceil(workers);
        thread::scope(|s| {
            let handles: Vec<_> = (0..workers)
                .map(|w| (w * chunk, ((w + 1) * chunk).min(total)))
                .filter(|(lo, hi)| lo < hi)
                .map(|(lo, hi)| {
                    let mults = &mults;
                    s.spawn(move || min_weight_in_range(v, mults, lo, hi))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .min()
                .unwrap_or(usize::MAX)
        })
    };
    Ok(DistanceReport {
        n: v.n,
        k,
        d,
        enumerated: total,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// `mults[r][c]` is `c * (row r)` for every field element `c`.
fn scalar_multiples(v: &LinearCodeView) -> Vec<Vec<Vec<u32>>> {
    let f = &v.field;
    v.generator
        .iter()
        .map(|row| {
            (0..f.order())
                .map(|c| row.iter().map(|&x| f.mul(c, x)).collect())
                .collect()
        })
        .collect()
}

/// Minimum weight over messages with index in `[lo, hi)`, skipping 0.
/// Message index `x` has base-q digits `x_r`, and encodes to `sum x_r row_r`.
fn min_weight_in_range(v: &LinearCodeView, mults: &[Vec<Vec<u32>>], lo: u128, hi: u128) -> usize {
    let f = &v.field;
    let q = f.order() as u128;
    let k = v.dimension();
    let mut digits = vec![0u32; k];
    let mut rest = lo;
    for d in digits.iter_mut() {
        *d = (rest % q) as u32;
        rest /= q;
    }
    let mut word = vec![0u32; v.n];
    for (r, &d) in digits.iter().enumerate() {
        for (w, &x) in word.iter_mut().zip(&mults[r][d as usize]) {
            *w = f.add(*w, x);
        }
    }
    let mut weight = word.iter().filter(|&&x| x != 0).count();
    let mut best = if lo == 0 { usize::MAX } else { weight };
    let top = f.order() - 1;
    for _ in lo + 1..hi {
        // increment the counter, updating the word by the digit differences
        let mut r = 0;
        loop {
            let old = digits[r];
            let new = if old == top { 0 } else { old + 1 };
            digits[r] = new;
            let delta = f.sub(new, old) as usize;
            for (w, &x) in word.iter_mut().zip(&mults[r][delta]) {
                if x != 0 {
                    let before = *w != 0;
                    *w = f.add(*w, x);
                    let after = *w != 0;
                    if before != after {
                        if after {
                            weight += 1;
                        } else {
                            weight -= 1;
                        }
                    }
                }
            }
            if new != 0 {
                break;
            }
            r += 1;
        }
        best = best.min(weight);
    }
    best
}

/// Every codeword, in message order. Guarded like [`min_distance_with`].
pub fn enumerate_codewords(v: &LinearCodeView, guard: u128) -> Result<Vec<Vec<u32>>> {
    let total = v
        .message_count()
        .filter(|&c| c <= guard)
        .ok_or(Error::TooLarge {
            count: v.message_count().unwrap_or(u128::MAX),
            guard,
        })?;
    let f = &v.field;
    let q = f.order() as u128;
    let mut out = Vec::with_capacity(total as usize);
    for x in 0..total {
        let mut word = vec![0u32; v.n];
        let mut rest = x;
        for row in &v.generator {
            let c = (rest % q) as u32;
            rest /= q;
            if c != 0 {
                for (w, &g) in word.iter_mut().zip(row) {
                    *w = f.add(*w, f.mul(c, g));
                }
            }
        }
        out.push(word);
    }
    Ok(out)
}

/// Whether shifting every generator by `ell` positions stays in the code.
pub fn is_quasi_cyclic(v: &LinearCodeView, ell: usize) -> Result<bool> {
    if ell == 0 || !v.n.is_multiple_of(ell) {
        return Err(Error::ShapeMismatch(format!(
            "{ell} does not divide length {}",
            v.n
        )));
    }
    let space = v.row_space();
    Ok(v.generator.iter().all(|row| {
        let mut shifted = row.clone();
        shifted.rotate_right(ell % v.n.max(1));
        space.contains(&shifted)
    }))
}

/// Equality of the generated submodules, by comparing reduced bases.
pub fn modules_equal(g1: &GeneratingMatrix, g2: &GeneratingMatrix) -> Result<bool> {
    if g1.ell() != g2.ell() || g1.m() != g2.m() || g1.field() != g2.field() {
        return Err(Error::ShapeMismatch(format!(
            "({}, {}) vs ({}, {})",
            g1.ell(),
            g1.m(),
            g2.ell(),
            g2.m()
        )));
    }
    Ok(qcmodule::rgb_pot_reduce(g1) == qcmodule::rgb_pot_reduce(g2))
}

/// Rows of `mat` lie in `a`, columns lie in `b`.
pub fn check_product_membership(
    mat: &CodewordMatrix,
    a: &RgbPotBasis,
    b: &CyclicCode,
) -> Result<bool> {
    if mat.cols() != a.ell() * a.m() || mat.rows() != b.length() {
        return Err(Error::ShapeMismatch(format!(
            "matrix is {}x{}, codes need {}x{}",
            mat.rows(),
            mat.cols(),
            b.length(),
            a.ell() * a.m()
        )));
    }
    if mat.field() != a.field() || mat.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    for i in 0..mat.rows() {
        let row: PolyVector = qcmodule::univariate_to_vector(&mat.row_poly(i), a.ell(), a.m())?;
        if !qcmodule::contains(a, &row) {
            return Ok(false);
        }
    }
    Ok((0..mat.cols()).all(|j| b.contains(&mat.column_poly(j))))
}
