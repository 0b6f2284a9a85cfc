//! Polynomial text formats.
//!
//! Two inputs are accepted:
//!
//! * sparse algebraic, e.g. `X^8+X^4+X^3+X^2+1`, `2X^3 - X + 1`, `2*x^2`;
//! * dense ascending coefficient lists, e.g. `1,0,1,1,1,0,0,0,1`.
//!
//! Coefficients are integers in `[0, q)` naming a field element by its
//! polynomial-basis encoding (`c_0 + c_1 p + c_2 p^2 + ...`), so over a prime
//! field they are just residues. The printer always emits the sparse form with
//! descending exponents.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Term {
    pub negative: bool,
    pub coeff: u64,
    pub exp: usize,
}

pub(crate) fn parse_terms(input: &str) -> Result<Vec<Term>> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    if s.contains(',') {
        return s
            .split(',')
            .enumerate()
            .map(|(exp, tok)| {
                tok.parse::<u64>()
                    .map(|coeff| Term {
                        negative: false,
                        coeff,
                        exp,
                    })
                    .map_err(|_| Error::Parse(format!("bad dense coefficient {tok:?}")))
            })
            .collect();
    }

    let bytes = s.as_bytes();
    let mut terms = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut negative = false;
        match bytes[pos] {
            b'+' => pos += 1,
            b'-' => {
                negative = true;
                pos += 1;
            }
            _ if pos != 0 => return Err(Error::Parse(format!("expected sign at {pos} in {s:?}"))),
            _ => {}
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
            pos += 1;
        }
        terms.push(parse_monomial(&s[start..pos], negative)?);
    }
    Ok(terms)
}

fn parse_monomial(tok: &str, negative: bool) -> Result<Term> {
    let bad = || Error::Parse(format!("bad term {tok:?}"));
    if tok.is_empty() {
        return Err(bad());
    }
    let Some(xpos) = tok.find(['X', 'x']) else {
        let coeff = tok.parse().map_err(|_| bad())?;
        return Ok(Term {
            negative,
            coeff,
            exp: 0,
        });
    };
    let head = tok[..xpos].trim_end_matches('*');
    let coeff = if head.is_empty() {
        1
    } else {
        head.parse().map_err(|_| bad())?
    };
    let tail = &tok[xpos + 1..];
    let exp = if tail.is_empty() {
        1
    } else {
        tail.strip_prefix('^')
            .ok_or_else(bad)?
            .parse()
            .map_err(|_| bad())?
    };
    Ok(Term {
        negative,
        coeff,
        exp,
    })
}

/// Formats ascending coefficients in sparse form.
pub(crate) fn format_coeffs(coeffs: &[u32]) -> String {
    let mut out = String::new();
    for (exp, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        match (c, exp) {
            (_, 0) => out.push_str(&c.to_string()),
            (1, 1) => out.push('X'),
            (1, _) => out.push_str(&format!("X^{exp}")),
            (_, 1) => out.push_str(&format!("{c}X")),
            _ => out.push_str(&format!("{c}X^{exp}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sparse_and_dense_agree() {
        let sparse = parse_terms("X^8+X^4+X^3+X^2+1").unwrap();
        let dense = parse_terms("1,0,1,1,1,0,0,0,1").unwrap();
        let exps = |t: &[Term]| {
            let mut v: Vec<usize> = t.iter().filter(|t| t.coeff != 0).map(|t| t.exp).collect();
            v.sort();
            v
        };
        assert_eq!(exps(&sparse), exps(&dense));
    }

    #[test]
    fn signs_and_coefficients() {
        let t = parse_terms(" 2*x^3 - X + 1").unwrap();
        assert_eq!(
            t,
            vec![
                Term {
                    negative: false,
                    coeff: 2,
                    exp: 3
                },
                Term {
                    negative: true,
                    coeff: 1,
                    exp: 1
                },
                Term {
                    negative: false,
                    coeff: 1,
                    exp: 0
                },
            ]
        );
        assert!(parse_terms("X^").is_err());
        assert!(parse_terms("X++1").is_err());
        assert!(parse_terms("").is_err());
    }

    #[test]
    fn printer() {
        assert_eq!(format_coeffs(&[1, 1, 0, 2]), "2X^3+X+1");
        assert_eq!(format_coeffs(&[]), "0");
        assert_eq!(format_coeffs(&[0, 2]), "2X");
    }
}
