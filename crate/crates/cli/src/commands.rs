use std::fmt::Write as _;

use qcprod::oracle::{self, Enumeration};
use qcprod::product::OneLevelProduct;
use qcprod::qcmodule::{self, RgbReport};
use qcprod::{
    arith, bezout_pair, cyclotomic_cosets, factor_xm_minus_1, gf, BasisDoc, CyclicCode, CyclicDoc,
    Error, Field, FieldRef, GeneratingMatrix, OneLevelCode, Poly, ProductParams, RgbPotBasis,
};
use serde_json::{json, Value};

use crate::golden;
use crate::{Cli, Command, Format};

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_PRECONDITION: u8 = 3;
pub const EXIT_GOLDEN: u8 = 4;

pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub kind: String,
    pub message: String,
}

impl Failure {
    fn new(code: u8, kind: &str, message: impl Into<String>) -> Self {
        Self {
            code,
            kind: kind.to_string(),
            message: message.into(),
        }
    }

    pub fn to_json(&self) -> String {
        json!({"error": self.kind, "message": self.message, "exit_code": self.code}).to_string()
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let debug = format!("{e:?}");
        let kind: String = debug.chars().take_while(|c| c.is_alphanumeric()).collect();
        let code = match e {
            Error::Parse(_) => EXIT_PARSE,
            _ => EXIT_PRECONDITION,
        };
        Self::new(code, &kind, e.to_string())
    }
}

type Res<T> = std::result::Result<T, Failure>;

pub fn run(cli: &Cli) -> Res<Output> {
    let fmt = cli.format;
    match &cli.command {
        Command::Cosets { q, m } => cosets(*q, *m, fmt),
        Command::Factor { q, m, modulus } => factor(*q, *m, modulus.as_deref(), fmt),
        Command::Minpoly { q, m, i, modulus } => minpoly(*q, *m, *i, modulus.as_deref(), fmt),
        Command::Reduce { basis } => reduce(basis, fmt),
        Command::Product {
            a,
            b,
            bezout_a,
            bezout_b,
        } => product(a, b, bezout(*bezout_a, *bezout_b), fmt),
        Command::Maps {
            ell_a,
            m_a,
            m_b,
            bezout_a,
            bezout_b,
        } => maps(*ell_a, *m_a, *m_b, bezout(*bezout_a, *bezout_b), fmt),
        Command::Mindist {
            code,
            guard,
            threads,
        } => mindist(code, *guard, *threads, fmt),
        Command::Verify { basis } => verify(basis, fmt),
        Command::Example => example(fmt),
    }
}

fn bezout(a: Option<i64>, b: Option<i64>) -> Option<(i64, i64)> {
    a.zip(b)
}

fn unsupported(fmt: Format, cmd: &str) -> Failure {
    Failure::new(
        EXIT_USAGE,
        "Usage",
        format!("format {fmt:?} is not available for {cmd}").to_lowercase(),
    )
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn read(path: &str) -> Res<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_PARSE, "Io", format!("{path}: {e}")))
}

fn field_of_order(q: u64, modulus: Option<&str>) -> Res<FieldRef> {
    Ok(match modulus {
        None => Field::of_order(q)?,
        Some(s) => {
            let (p, d) = arith::prime_power(q).ok_or(Error::NotPrime(q))?;
            Field::with_modulus_str(p, d, s)?
        }
    })
}

fn cosets(q: u64, m: u64, fmt: Format) -> Res<Output> {
    let cosets = cyclotomic_cosets(q, m)?;
    let text = match fmt {
        Format::Json => to_json(&json!({"q": q, "m": m, "cosets": cosets})),
        Format::Csv => {
            let mut s = String::from("representative,size,members\n");
            for c in &cosets {
                let members: Vec<String> = c.iter().map(u64::to_string).collect();
                writeln!(s, "{},{},{}", c[0], c.len(), members.join(" ")).unwrap();
            }
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            for c in &cosets {
                let members: Vec<String> = c.iter().map(u64::to_string).collect();
                writeln!(s, "C_{} = {{{}}}", c[0], members.join(", ")).unwrap();
            }
            s
        }
    };
    Ok(Output::ok(text))
}

fn factor(q: u64, m: u64, modulus: Option<&str>, fmt: Format) -> Res<Output> {
    let field = field_of_order(q, modulus)?;
    let factors = factor_xm_minus_1(&field, m)?;
    let text = match fmt {
        Format::Json => {
            let list: Vec<Value> = factors
                .iter()
                .map(|(r, p)| json!({"representative": r, "degree": p.degree(), "poly": p.to_string()}))
                .collect();
            to_json(&json!({"q": q, "m": m, "factors": list}))
        }
        Format::Csv => {
            let mut s = String::from("representative,degree,poly\n");
            for (r, p) in &factors {
                writeln!(s, "{r},{},{p}", p.degree().unwrap_or(0)).unwrap();
            }
            s
        }
        Format::Pretty => {
            let mut s = format!(
                "X^{m} - 1 over GF({q}) = product of {} factors\n",
                factors.len()
            );
            for (r, p) in &factors {
                writeln!(s, "m_{r} = {p}").unwrap();
            }
            s
        }
    };
    Ok(Output::ok(text))
}

fn minpoly(q: u64, m: u64, i: u64, modulus: Option<&str>, fmt: Format) -> Res<Output> {
    let field = field_of_order(q, modulus)?;
    let p = qcprod::minimal_polynomial(&field, m, i % m.max(1))?;
    let text = match fmt {
        Format::Json => to_json(&json!({"q": q, "m": m, "i": i, "poly": p.to_string()})),
        Format::Csv => return Err(unsupported(fmt, "minpoly")),
        Format::Pretty => format!("{p}\n"),
    };
    Ok(Output::ok(text))
}

fn load_matrix(path: &str) -> Res<GeneratingMatrix> {
    Ok(BasisDoc::from_json(&read(path)?)?.to_matrix()?)
}

fn report_json(report: &RgbReport) -> Value {
    let v: Vec<String> = report.violations.iter().map(|v| format!("{v:?}")).collect();
    json!({"valid": report.is_valid(), "violations": v})
}

fn reduce(path: &str, fmt: Format) -> Res<Output> {
    let gen = load_matrix(path)?;
    let b = qcprod::rgb_pot_reduce(&gen);
    let report = qcprod::is_rgb_pot(&b);
    let level = qcprod::level(&b).ok();
    let k = qcprod::dimension(&b);
    let text = match fmt {
        Format::Json => {
            let mut v =
                serde_json::to_value(BasisDoc::from_basis(&b)).expect("document serializes");
            let obj = v.as_object_mut().expect("object");
            obj.insert("dimension".into(), json!(k));
            obj.insert("level".into(), json!(level));
            obj.insert("report".into(), report_json(&report));
            to_json(&v)
        }
        Format::Csv => return Err(unsupported(fmt, "reduce")),
        Format::Pretty => {
            let lvl = level.map_or("not a prefix".to_string(), |l| l.to_string());
            format!(
                "{b}length {}, dimension {k}, level {lvl}, conditions {}\n",
                b.ell() * b.m(),
                if report.is_valid() {
                    "hold"
                } else {
                    "violated"
                }
            )
        }
    };
    Ok(Output::ok(text))
}

fn params(ell_a: usize, m_a: usize, m_b: usize, pair: Option<(i64, i64)>) -> Res<ProductParams> {
    Ok(match pair {
        None => bezout_pair(ell_a, m_a, m_b)?,
        Some((a, b)) => ProductParams::new(ell_a, m_a, m_b, a, b)?,
    })
}

fn params_json(p: &ProductParams) -> Value {
    json!({"ell_a": p.ell_a, "m_a": p.m_a, "m_b": p.m_b, "a": p.a, "b": p.b})
}

fn row_strings(row: &[Poly]) -> Vec<String> {
    row.iter().map(Poly::to_string).collect()
}

fn product(a_path: &str, b_path: &str, pair: Option<(i64, i64)>, fmt: Format) -> Res<Output> {
    let ga = qcprod::rgb_pot_reduce(&load_matrix(a_path)?);
    let b = CyclicDoc::from_json(&read(b_path)?)?.to_code()?;
    let p = params(ga.ell(), ga.m(), b.length(), pair)?;
    let unreduced = qcprod::unreduced_product_basis(&ga, &b, &p)?;
    let reduced = qcprod::rgb_pot_reduce(&unreduced);
    let one_level: Option<OneLevelProduct> = match qcprod::level(&ga) {
        Ok(1) => Some(qcprod::one_level_product_rgb(
            &OneLevelCode::from_basis(&ga)?,
            &b,
            &p,
        )?),
        _ => None,
    };
    let k = qcprod::dimension(&reduced);
    let text = match fmt {
        Format::Json => to_json(&json!({
            "params": params_json(&p),
            "unreduced": BasisDoc::from_matrix(&unreduced),
            "reduced": BasisDoc::from_basis(&reduced),
            "dimension": k,
            "one_level": one_level.as_ref().map(|o| json!({
                "row": row_strings(&o.row()),
                "untwisted_row": row_strings(o.untwisted_row()),
            })),
        })),
        Format::Csv => return Err(unsupported(fmt, "product")),
        Format::Pretty => {
            let mut s = format!(
                "parameters ell_A={} m_A={} m_B={} a={} b={}\nunreduced rows:\n",
                p.ell_a, p.m_a, p.m_b, p.a, p.b
            );
            for row in unreduced.rows() {
                writeln!(s, "[{}]", row_strings(row).join(", ")).unwrap();
            }
            write!(s, "reduced basis:\n{reduced}").unwrap();
            writeln!(s, "length {}, dimension {k}", p.length()).unwrap();
            if let Some(o) = &one_level {
                writeln!(s, "1-level row: [{}]", row_strings(&o.row()).join(", ")).unwrap();
                writeln!(
                    s,
                    "untwisted:   [{}]",
                    row_strings(o.untwisted_row()).join(", ")
                )
                .unwrap();
            }
            s
        }
    };
    Ok(Output::ok(text))
}

fn maps(
    ell_a: usize,
    m_a: usize,
    m_b: usize,
    pair: Option<(i64, i64)>,
    fmt: Format,
) -> Res<Output> {
    let p = params(ell_a, m_a, m_b, pair)?;
    let table: Vec<Vec<usize>> = (0..p.m_b)
        .map(|i| {
            (0..p.row_length())
                .map(|j| qcprod::map_f(i, j, &p))
                .collect::<qcprod::Result<_>>()
        })
        .collect::<qcprod::Result<_>>()?;
    let text = match fmt {
        Format::Json => to_json(&json!({"params": params_json(&p), "f": table})),
        Format::Csv => table
            .iter()
            .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(",") + "\n")
            .collect(),
        Format::Pretty => {
            let width = (p.length().max(1) - 1).to_string().len();
            table
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|x| format!("{x:>width$}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                        + "\n"
                })
                .collect()
        }
    };
    Ok(Output::ok(text))
}

fn mindist(path: &str, guard: u128, threads: Option<usize>, fmt: Format) -> Res<Output> {
    let text = read(path)?;
    let view = match BasisDoc::from_json(&text) {
        Ok(doc) => oracle::expand_to_linear(&qcprod::rgb_pot_reduce(&doc.to_matrix()?))?,
        Err(_) => oracle::cyclic_view(&CyclicDoc::from_json(&text)?.to_code()?),
    };
    let mut opts = Enumeration {
        guard,
        ..Enumeration::default()
    };
    if let Some(t) = threads {
        opts.threads = t;
    }
    let r = oracle::min_distance_with(&view, opts)?;
    let text = match fmt {
        Format::Json => to_json(&json!({
            "n": r.n, "k": r.k, "d": r.d,
            "elapsed_ms": r.elapsed_ms as u64, "enumerated": r.enumerated as u64,
        })),
        Format::Csv => format!(
            "n,k,d,elapsed_ms,enumerated\n{},{},{},{},{}\n",
            r.n, r.k, r.d, r.elapsed_ms, r.enumerated
        ),
        Format::Pretty => format!(
            "[{}, {}, {}] over GF({}), {} messages in {} ms\n",
            r.n,
            r.k,
            r.d,
            view.field().order(),
            r.enumerated,
            r.elapsed_ms
        ),
    };
    Ok(Output::ok(text))
}

fn verify(path: &str, fmt: Format) -> Res<Output> {
    let gen = load_matrix(path)?;
    if gen.rows().len() != gen.ell() {
        return Err(Failure::new(
            EXIT_PRECONDITION,
            "ShapeMismatch",
            format!(
                "a basis needs {} rows, found {}",
                gen.ell(),
                gen.rows().len()
            ),
        ));
    }
    let basis = RgbPotBasis::from_rows(gen.field(), gen.m(), gen.rows().to_vec())?;
    let report = qcprod::is_rgb_pot(&basis);
    let module = oracle::expand_generating_matrix(&gen);
    let (quasi_cyclic, spans_module) = if report.is_valid() {
        match oracle::expand_to_linear(&basis) {
            Ok(v) => (
                oracle::is_quasi_cyclic(&v, gen.ell())?,
                v.same_code(&module),
            ),
            Err(_) => (false, false),
        }
    } else {
        (false, false)
    };
    let ok = report.is_valid() && quasi_cyclic && spans_module;
    let text = match fmt {
        Format::Json => to_json(&json!({
            "ok": ok,
            "rgb_pot": report_json(&report),
            "quasi_cyclic": quasi_cyclic,
            "spans_module": spans_module,
            "dimension": module.dimension(),
        })),
        Format::Csv => return Err(unsupported(fmt, "verify")),
        Format::Pretty => {
            let mut s = String::new();
            writeln!(
                s,
                "RGB/POT conditions: {}",
                if report.is_valid() {
                    "hold"
                } else {
                    "violated"
                }
            )
            .unwrap();
            for v in &report.violations {
                writeln!(s, "  {v:?}").unwrap();
            }
            writeln!(s, "closed under shift by {}: {quasi_cyclic}", gen.ell()).unwrap();
            writeln!(s, "basis spans the generated module: {spans_module}").unwrap();
            writeln!(s, "dimension {}", module.dimension()).unwrap();
            s
        }
    };
    Ok(Output {
        text,
        code: if ok { 0 } else { EXIT_PRECONDITION },
    })
}

fn example(fmt: Format) -> Res<Output> {
    let f = gf(2);
    let p = |s: &str| Poly::parse(&f, s).expect("stored polynomial parses");
    let mut checks: Vec<(&str, bool)> = Vec::new();

    let m0 = qcprod::minimal_polynomial(&f, 17, 0)?;
    let m1 = qcprod::minimal_polynomial(&f, 17, 1)?;
    let g01 = &(&(&m1 * &m0) * &(&m0 * &m0)) * &p("X^3+X^2+1");
    checks.push(("m_1 of X^17-1", m1 == p(golden::ROW_G00)));
    checks.push(("row code g01 expansion", g01 == p(golden::ROW_G01)));
    let reps = |m: u64| -> qcprod::Result<Vec<u64>> {
        Ok(factor_xm_minus_1(&f, m)?
            .into_iter()
            .map(|(r, _)| r)
            .collect())
    };
    checks.push((
        "X^17-1 factor representatives",
        reps(17)? == golden::REPS_17,
    ));
    checks.push((
        "X^51-1 factor representatives",
        reps(51)? == golden::REPS_51,
    ));

    let gen = GeneratingMatrix::new(&f, 2, 17, vec![vec![m1, g01]])?;
    let ga = qcprod::rgb_pot_reduce(&gen);
    let a = OneLevelCode::from_basis(&ga)?;
    let b = CyclicCode::new(3, &qcprod::minimal_polynomial(&f, 3, 0)?)?;
    checks.push(("column generator", b.generator() == &p(golden::COLUMN_G)));
    let params = bezout_pair(2, 17, 3)?;
    checks.push(("Bezout pair", (params.a, params.b) == golden::BEZOUT));
    checks.push((
        "substituted multiplier",
        a.multipliers()[0].modular_substitute(params.row_exponent(), 51)
            == p(golden::F1_SUBSTITUTED),
    ));

    let prod = qcprod::one_level_product_rgb(&a, &b, &params)?;
    let untwisted = prod.untwisted_row();
    checks.push(("product g00", untwisted[0] == p(golden::PRODUCT_G00)));
    checks.push(("product g01", untwisted[1] == p(golden::PRODUCT_G01)));
    let twist = Poly::x_pow_mod(&f, params.twist_exponent(1), 51);
    checks.push((
        "twisted g01",
        prod.row()[1] == p(golden::PRODUCT_G01).mul_mod_xn(&twist, 51),
    ));
    let via_matrix = qcprod::rgb_pot_reduce(&qcprod::unreduced_product_basis(&ga, &b, &params)?);
    checks.push(("reduced unreduced matrix", via_matrix == prod.to_basis()));
    checks.push((
        "row code dimension",
        qcmodule::dimension(&ga) == golden::K_ROW,
    ));
    checks.push((
        "product dimension",
        qcmodule::dimension(&via_matrix) == golden::K_PRODUCT,
    ));

    let d = |v: &oracle::LinearCodeView| oracle::min_distance(v);
    checks.push((
        "row code distance",
        d(&oracle::expand_to_linear(&ga)?)? == golden::D_ROW,
    ));
    checks.push((
        "column code distance",
        d(&oracle::cyclic_view(&b))? == golden::D_COLUMN,
    ));
    checks.push((
        "product distance",
        d(&oracle::expand_to_linear(&via_matrix)?)? == golden::D_PRODUCT,
    ));

    let ok = checks.iter().all(|(_, c)| *c);
    let text = match fmt {
        Format::Json => {
            let list: Vec<Value> = checks
                .iter()
                .map(|(n, c)| json!({"check": n, "ok": c}))
                .collect();
            to_json(&json!({
                "ok": ok,
                "g00": untwisted[0].to_string(),
                "g01": untwisted[1].to_string(),
                "g01_twisted": prod.row()[1].to_string(),
                "checks": list,
            }))
        }
        Format::Csv => return Err(unsupported(fmt, "example")),
        Format::Pretty => {
            let mut s = format!("g_00 = {}\ng_01 = {}\n", untwisted[0], untwisted[1]);
            writeln!(
                s,
                "g_01 with twist X^{} = {}",
                params.twist_exponent(1).rem_euclid(51),
                prod.row()[1]
            )
            .unwrap();
            for (n, c) in &checks {
                writeln!(s, "{} {n}", if *c { "ok  " } else { "FAIL" }).unwrap();
            }
            s
        }
    };
    Ok(Output {
        text,
        code: if ok { 0 } else { EXIT_GOLDEN },
    })
}
