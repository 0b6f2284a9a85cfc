//! Stored values for `example`: binary row code of length 34 generated by
//! `(m_1, m_1 (X+1)^3 (X^3+X^2+1))`, column code `<X+1>` of length 3.

pub const ROW_G00: &str = "X^8+X^7+X^6+X^4+X^2+X+1";
pub const ROW_G01: &str = "X^14+X^13+X^12+X^11+X^8+1";
pub const COLUMN_G: &str = "X+1";
pub const BEZOUT: (i64, i64) = (1, -11);

pub const PRODUCT_G00: &str =
    "X^33+X^32+X^30+X^27+X^25+X^23+X^20+X^18+X^17+X^16+X^15+X^13+X^10+X^8+X^6+X^3+X+1";
/// Without the diagonal twist `X^{-a m_A}`.
pub const PRODUCT_G01: &str = "X^50+X^48+X^45+X^43+X^41+X^39+X^36+X^34+X^32+X^29+X^27+X^26+X^25+X^23+X^22+X^21+X^19+X^18+X^17+X^16+X^15+X^14+X^12+X^11+X^10+X^8+X^7+X^6+X^4+X";

pub const F1_SUBSTITUTED: &str = "X^18+X^6+X^3+1";
pub const REPS_17: [u64; 3] = [0, 1, 3];
pub const REPS_51: [u64; 8] = [0, 1, 3, 5, 9, 11, 17, 19];
pub const K_ROW: usize = 9;
pub const K_PRODUCT: usize = 18;
pub const D_ROW: usize = 11;
pub const D_COLUMN: usize = 2;
pub const D_PRODUCT: usize = 22;
