//! Fixtures shared by the criterion benches.

use qcprod::{
    bezout_pair, gf, CyclicCode, GeneratingMatrix, OneLevelCode, Poly, ProductParams, RgbPotBasis,
};

/// The binary 2-quasi-cyclic row code of length 34 and the column code `<X+1>` of length 3.
pub fn worked_example() -> (RgbPotBasis, OneLevelCode, CyclicCode, ProductParams) {
    let f = gf(2);
    let p = |s: &str| Poly::parse(&f, s).unwrap();
    let gen = GeneratingMatrix::new(
        &f,
        2,
        17,
        vec![vec![
            p("X^8+X^7+X^6+X^4+X^2+X+1"),
            p("X^14+X^13+X^12+X^11+X^8+1"),
        ]],
    )
    .unwrap();
    let ga = qcprod::rgb_pot_reduce(&gen);
    let a = OneLevelCode::from_basis(&ga).unwrap();
    let b = CyclicCode::new(3, &p("X+1")).unwrap();
    (ga, a, b, bezout_pair(2, 17, 3).unwrap())
}
