//! Quasi-cyclic product codes over finite fields.
//!
//! A quasi-cyclic code of index `ell` and co-index `m` is a submodule of
//! `F_q[X]^ell` containing every `(X^m - 1) e_j`. This crate reduces such
//! modules to their canonical RGB/POT basis, builds the product of a
//! quasi-cyclic row code with a cyclic column code, gives the closed form of
//! that product for 1-level row codes, and checks all of it by brute force.
//!
//! ```
//! use qcprod::{bezout_pair, one_level_product_rgb, gf, CyclicCode, OneLevelCode, Poly};
//!
//! let f = gf(2);
//! let p = |s: &str| Poly::parse(&f, s).unwrap();
//! let a = OneLevelCode::new(&p("X^8+X^7+X^6+X^4+X^2+X+1"), vec![p("X^6+X^3+X+1")], 17).unwrap();
//! let b = CyclicCode::new(3, &p("X+1")).unwrap();
//! let prod = one_level_product_rgb(&a, &b, &bezout_pair(2, 17, 3).unwrap()).unwrap();
//! assert_eq!(prod.code().generator().degree(), Some(33));
//! ```

pub mod arith;
pub mod cyclic;
pub mod document;
pub mod error;
pub mod field;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod product;
pub mod qcmodule;
mod text;

pub use cyclic::{
    cyclotomic_coset, cyclotomic_cosets, factor_xm_minus_1, minimal_polynomial, CyclicCode,
    SplittingField,
};
pub use document::{BasisDoc, CyclicDoc, FieldDoc};
pub use error::{Error, Result};
pub use field::{Field, FieldElement, FieldRef};
pub use oracle::{
    check_product_membership, expand_to_linear, is_quasi_cyclic, min_distance, modules_equal,
    LinearCodeView,
};
pub use poly::{gf, Poly};
pub use product::{
    bezout_pair, map_f, map_g, matrix_to_components, matrix_to_univariate, one_level_product_rgb,
    unreduced_product_basis, CodewordMatrix, OneLevelCode, OneLevelProduct, ProductParams,
};
pub use qcmodule::{
    dimension, encode, is_rgb_pot, level, qc_shift, rgb_pot_reduce, univariate_to_vector,
    vector_to_univariate, GeneratingMatrix, PolyVector, QuasiCyclicCode, RgbPotBasis,
};
