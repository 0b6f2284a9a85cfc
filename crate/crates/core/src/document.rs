//! JSON documents for bases and cyclic codes. Polynomials use the sparse text
//! format (`X^3+2X+1`); coefficients of extension fields are element encodings.

use serde::{Deserialize, Serialize};

use crate::cyclic::CyclicCode;
use crate::error::{Error, Result};
use crate::field::{Field, FieldRef};
use crate::poly::Poly;
use crate::qcmodule::{GeneratingMatrix, RgbPotBasis};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDoc {
    pub p: u64,
    pub m: u32,
    /// Defaults to the smallest irreducible when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
}

impl FieldDoc {
    pub fn of(field: &Field) -> Self {
        Self {
            p: field.characteristic() as u64,
            m: field.degree(),
            modulus: Some(field.modulus_string()),
        }
    }

    pub fn build(&self) -> Result<FieldRef> {
        match &self.modulus {
            Some(s) => Field::with_modulus_str(self.p, self.m, s),
            None => Field::new(self.p, self.m, None),
        }
    }
}

/// `{ell, m, field, rows}`: explicit rows of a generating matrix or a full basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisDoc {
    pub ell: usize,
    pub m: usize,
    pub field: FieldDoc,
    pub rows: Vec<Vec<String>>,
}

fn render(rows: &[Vec<Poly>]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| r.iter().map(Poly::to_string).collect())
        .collect()
}

impl BasisDoc {
    pub fn from_matrix(g: &GeneratingMatrix) -> Self {
        Self {
            ell: g.ell(),
            m: g.m(),
            field: FieldDoc::of(g.field()),
            rows: render(g.rows()),
        }
    }

    pub fn from_basis(b: &RgbPotBasis) -> Self {
        Self::from_matrix(&b.to_generating_matrix())
    }

    pub fn to_matrix(&self) -> Result<GeneratingMatrix> {
        let field = self.field.build()?;
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| Poly::parse(&field, s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        GeneratingMatrix::new(&field, self.ell, self.m, rows)
    }

    /// Reads the rows as an `ell x ell` basis, without validating it.
    pub fn to_basis(&self) -> Result<RgbPotBasis> {
        let g = self.to_matrix()?;
        if g.rows().len() != self.ell {
            return Err(Error::ShapeMismatch(format!(
                "a basis needs {} rows, found {}",
                self.ell,
                g.rows().len()
            )));
        }
        RgbPotBasis::from_rows(g.field(), self.m, g.rows().to_vec())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

/// `{m, field, generator}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicDoc {
    pub m: usize,
    pub field: FieldDoc,
    pub generator: String,
}

impl CyclicDoc {
    pub fn from_code(c: &CyclicCode) -> Self {
        Self {
            m: c.length(),
            field: FieldDoc::of(c.field()),
            generator: c.generator().to_string(),
        }
    }

    pub fn to_code(&self) -> Result<CyclicCode> {
        let field = self.field.build()?;
        CyclicCode::new(self.m, &Poly::parse(&field, &self.generator)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::gf;
    use crate::qcmodule::rgb_pot_reduce;

    #[test]
    fn basis_round_trip_is_bit_exact() {
        let f = Field::of_order(4).unwrap();
        let p = |s: &str| Poly::parse(&f, s).unwrap();
        let gen = GeneratingMatrix::new(&f, 2, 5, vec![vec![p("X^2+2X+1"), p("3X^4+X")]]).unwrap();
        let doc = BasisDoc::from_basis(&rgb_pot_reduce(&gen));
        let json = doc.to_json();
        let back = BasisDoc::from_json(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_json(), json);
        assert_eq!(back.to_basis().unwrap(), rgb_pot_reduce(&gen));
    }

    #[test]
    fn missing_modulus_uses_default() {
        let doc = BasisDoc::from_json(
            r#"{"ell": 1, "m": 3, "field": {"p": 2, "m": 1}, "rows": [["X+1"]]}"#,
        )
        .unwrap();
        let g = doc.to_matrix().unwrap();
        assert_eq!(g.field(), &gf(2));
        assert!(doc.to_basis().is_ok());
    }

    #[test]
    fn cyclic_round_trip() {
        let f = gf(2);
        let c = CyclicCode::new(3, &Poly::parse(&f, "X+1").unwrap()).unwrap();
        let doc = CyclicDoc::from_code(&c);
        assert_eq!(
            CyclicDoc::from_json(&doc.to_json())
                .unwrap()
                .to_code()
                .unwrap(),
            c
        );
    }

    #[test]
    fn malformed_json_is_a_parse_error() {
        assert!(matches!(BasisDoc::from_json("{"), Err(Error::Parse(_))));
        let doc = BasisDoc::from_json(
            r#"{"ell": 1, "m": 3, "field": {"p": 2, "m": 1}, "rows": [["X+"]]}"#,
        )
        .unwrap();
        assert!(matches!(doc.to_matrix(), Err(Error::Parse(_))));
    }
}
