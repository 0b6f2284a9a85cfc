//! Acceptance suite. Each test prints one `PASS`/`FAIL` line, written
//! straight to stderr so it shows up without `--nocapture`.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use common::*;
use qcprod::oracle::{self, Enumeration, DEFAULT_GUARD};
use qcprod::product::{self, CodewordMatrix};
use qcprod::qcmodule::{self, Violation};
use qcprod::*;
use rand::prelude::*;

const GOLDEN_BUDGET: Duration = Duration::from_secs(1);
const AGREEMENT_BUDGET: Duration = Duration::from_secs(30);
const PRODUCT_DISTANCE_SERIAL_BUDGET: Duration = Duration::from_secs(60);
const PRODUCT_DISTANCE_PARALLEL_BUDGET: Duration = Duration::from_secs(15);
const FACTOR_BUDGET: Duration = Duration::from_secs(10);
const RANDOM_PRODUCTS: usize = 24;
const MAPPING_SAMPLES: usize = 1000;
const CANONICITY_SAMPLES: usize = 300;

fn verdict(id: u32, label: &str, ok: bool, detail: &str) {
    let line = format!(
        "acceptance {id}: {} {label} ({detail})\n",
        if ok { "PASS" } else { "FAIL" }
    );
    let _ = std::io::stderr().write_all(line.as_bytes());
    assert!(ok, "criterion {id} failed: {detail}");
}

fn worked_product() -> (RgbPotBasis, OneLevelProduct) {
    let w = worked();
    let ga = rgb_pot_reduce(&w.gen_a);
    let a = OneLevelCode::from_basis(&ga).unwrap();
    (ga, one_level_product_rgb(&a, &w.b, &w.params).unwrap())
}

#[test]
fn c1_worked_example_golden_rows() {
    let start = Instant::now();
    let f = gf(2);
    let w = worked();
    let mut problems = Vec::new();

    let stated = p2("X^14+X^13+X^12+X^11+X^8+1");
    if w.gen_a.rows()[0][1] != stated {
        problems.push("row code generator g01 differs from its stated expansion".to_string());
    }
    let (_, prod) = worked_product();
    let g00 = p2(G00);
    let g01 = p2(G01);
    let untwisted = prod.untwisted_row();
    if untwisted[0] != g00 || g00.degree() != Some(33) || g00.weight() != 18 {
        problems.push(format!("g00 = {}", untwisted[0]));
    }
    if untwisted[1] != g01 || g01.degree() != Some(50) || g01.weight() != 30 {
        problems.push(format!("untwisted g01 = {}", untwisted[1]));
    }
    // canonical row carries the diagonal twist X^{-a m_A} = X^{34}
    let twisted = g01.mul_mod_xn(&Poly::x_pow_mod(&f, -17, 51), 51);
    if prod.row() != vec![g00.clone(), twisted] {
        problems.push("twisted row disagrees with golden row times X^-17".to_string());
    }
    // Labels of minimal polynomials depend on the chosen 51st root of unity:
    // under beta^s, m_i becomes m_{s i}. g00 must be m0 m1 m3 m9 m19 for some root.
    let factors = factor_xm_minus_1(&f, 51).unwrap();
    let relabeled = |s: u64| {
        [0u64, 1, 3, 9, 19].iter().fold(Poly::one(&f), |acc, &i| {
            let rep = cyclotomic_coset(2, 51, s * i % 51).unwrap()[0];
            let (_, mp) = factors.iter().find(|(r, _)| *r == rep).unwrap();
            &acc * mp
        })
    };
    let roots: Vec<u64> = (1..51u64)
        .filter(|&s| qcprod::arith::gcd(s, 51) == 1 && relabeled(s) == g00)
        .collect();
    if roots.is_empty() {
        problems.push("g00 is not m0 m1 m3 m9 m19 for any 51st root".to_string());
    }
    let elapsed = start.elapsed();
    verdict(
        1,
        "worked-example golden rows bit-exact",
        problems.is_empty() && elapsed < GOLDEN_BUDGET,
        &format!("{:?}; {}", elapsed, problems.join("; ")),
    );
}

#[test]
fn c2_construction_paths_agree() {
    let start = Instant::now();
    let mut failures = Vec::new();

    let w = worked();
    let (ga, prod) = worked_product();
    let via_matrix = rgb_pot_reduce(&unreduced_product_basis(&ga, &w.b, &w.params).unwrap());
    if via_matrix != prod.to_basis() {
        failures.push("worked example".to_string());
    }

    let mut rng = rng(0x5eed_0002);
    for n in 0..RANDOM_PRODUCTS {
        let inst = random_instance(&mut rng);
        let closed = one_level_product_rgb(&inst.a, &inst.b, &inst.params).unwrap();
        let reduced = rgb_pot_reduce(
            &unreduced_product_basis(&inst.a.to_basis(), &inst.b, &inst.params).unwrap(),
        );
        if reduced != closed.to_basis() {
            failures.push(format!("random #{n} {:?}", inst.params));
        }
    }
    let elapsed = start.elapsed();
    verdict(
        2,
        "reduced product matrix equals closed-form 1-level basis",
        failures.is_empty() && elapsed < AGREEMENT_BUDGET,
        &format!("1 + {RANDOM_PRODUCTS} instances, {elapsed:?}; failures: {failures:?}"),
    );
}

#[test]
fn c3_exact_distances() {
    let w = worked();
    let (ga, prod) = worked_product();
    let va = oracle::expand_to_linear(&ga).unwrap();
    let vb = oracle::cyclic_view(&w.b);
    let vp = oracle::expand_to_linear(&prod.to_basis()).unwrap();

    let serial = Enumeration {
        guard: DEFAULT_GUARD,
        threads: 1,
    };
    let parallel = Enumeration {
        guard: DEFAULT_GUARD,
        threads: 8,
    };
    let da = oracle::min_distance_with(&va, serial).unwrap();
    let db = oracle::min_distance_with(&vb, serial).unwrap();
    let dp1 = oracle::min_distance_with(&vp, serial).unwrap();
    let t1 = Instant::now();
    let _ = oracle::min_distance_with(&vp, serial).unwrap();
    let serial_time = t1.elapsed();
    let t8 = Instant::now();
    let dp8 = oracle::min_distance_with(&vp, parallel).unwrap();
    let parallel_time = t8.elapsed();

    let ok = da.d == 11
        && da.enumerated == 1 << 9
        && db.d == 2
        && dp1.d == 22
        && dp8.d == 22
        && dp1.enumerated == 1 << 18
        && vp.length() == 102
        && serial_time < PRODUCT_DISTANCE_SERIAL_BUDGET
        && parallel_time < PRODUCT_DISTANCE_PARALLEL_BUDGET;
    verdict(
        3,
        "exact minimum distances 11, 2, 22",
        ok,
        &format!(
            "d_A={} d_B={} d_prod={}/{} over {} words; 1 thread {:?}, 8 threads {:?}",
            da.d, db.d, dp1.d, dp8.d, dp1.enumerated, serial_time, parallel_time
        ),
    );
}

fn dimension_holds(b: &RgbPotBasis) -> Option<usize> {
    let v = oracle::expand_to_linear(b).ok()?;
    (v.dimension() == qcmodule::dimension(b)).then_some(v.dimension())
}

#[test]
fn c4_dimension_formula_matches_rank() {
    let mut checked = 0;
    let mut failures = Vec::new();
    let w = worked();
    let (ga, prod) = worked_product();
    if dimension_holds(&ga) != Some(9) {
        failures.push("row code".to_string());
    }
    if dimension_holds(&prod.to_basis()) != Some(18) {
        failures.push("worked product".to_string());
    }
    let via_matrix = rgb_pot_reduce(&unreduced_product_basis(&ga, &w.b, &w.params).unwrap());
    if dimension_holds(&via_matrix) != Some(18) {
        failures.push("worked product via unreduced matrix".to_string());
    }
    checked += 3;

    let mut rng = rng(0x5eed_0004);
    for n in 0..RANDOM_PRODUCTS {
        let inst = random_instance(&mut rng);
        let ka = dimension_holds(&inst.a.to_basis());
        let prod = one_level_product_rgb(&inst.a, &inst.b, &inst.params).unwrap();
        let kp = dimension_holds(&prod.to_basis());
        if ka.is_none() || kp != ka.map(|k| k * inst.b.dimension()) {
            failures.push(format!("product #{n}"));
        }
        checked += 2;
    }
    for n in 0..CANONICITY_SAMPLES {
        let field = gf(*[2u64, 3].choose(&mut rng).unwrap());
        let ell = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=7);
        let rows = rng.gen_range(0..=3);
        let gen = random_generating_matrix(&field, ell, m, rows, &mut rng);
        let b = rgb_pot_reduce(&gen);
        let independent = oracle::expand_generating_matrix(&gen).dimension();
        if dimension_holds(&b) != Some(independent) {
            failures.push(format!("generating set #{n}"));
        }
        checked += 1;
    }
    verdict(
        4,
        "dimension formula equals expanded rank",
        failures.is_empty(),
        &format!("{checked} bases; failures: {failures:?}"),
    );
}

fn random_matrix<R: Rng>(field: &FieldRef, p: &ProductParams, rng: &mut R) -> CodewordMatrix {
    let q = field.order();
    let data = (0..p.m_b * p.row_length())
        .map(|_| rng.gen_range(0..q))
        .collect();
    CodewordMatrix::new(field, p.m_b, p.row_length(), data).unwrap()
}

#[test]
fn c5_mapping_coherence() {
    let mut failures = Vec::new();
    let mut rng = rng(0x5eed_0005);
    let cases = [
        (2u64, bezout_pair(2, 17, 3).unwrap()),
        (2, bezout_pair(3, 5, 7).unwrap()),
        (3, bezout_pair(2, 7, 5).unwrap()),
        (3, bezout_pair(3, 4, 5).unwrap()),
    ];
    for (q, p) in cases {
        let field = gf(q);
        for _ in 0..MAPPING_SAMPLES {
            let mat = random_matrix(&field, &p, &mut rng);
            let c = product::matrix_to_components(&mat, &p).unwrap();
            let u = matrix_to_univariate(&mat, &p).unwrap();
            if vector_to_univariate(&c) != u
                || univariate_to_vector(&u, p.ell_a, p.product_m()).unwrap() != c
            {
                failures.push(format!("components {p:?}"));
                break;
            }
        }
        let mut hit = vec![false; p.length()];
        for i in 0..p.m_b {
            for j in 0..p.row_length() {
                let f = map_f(i, j, &p).unwrap();
                hit[f] = true;
                let next = map_f((i + 1) % p.m_b, (j + p.ell_a) % p.row_length(), &p).unwrap();
                if next != (f + p.ell_a) % p.length() {
                    failures.push(format!("shift identity {p:?} at ({i}, {j})"));
                }
            }
        }
        if !hit.iter().all(|&h| h) {
            failures.push(format!("f not bijective {p:?}"));
        }
    }
    verdict(
        5,
        "serialization maps coherent",
        failures.is_empty(),
        &format!(
            "{} parameter sets x {MAPPING_SAMPLES} matrices; failures: {failures:?}",
            cases.len()
        ),
    );
}

#[test]
fn c6_quasi_cyclic_closure() {
    let mut failures = Vec::new();
    let mut checked = 0;
    let w = worked();
    let (ga, prod) = worked_product();
    let via_matrix = unreduced_product_basis(&ga, &w.b, &w.params).unwrap();
    for (name, b) in [
        ("row code", ga.clone()),
        ("worked product", prod.to_basis()),
        ("reduced unreduced", rgb_pot_reduce(&via_matrix)),
    ] {
        let v = oracle::expand_to_linear(&b).unwrap();
        if !oracle::is_quasi_cyclic(&v, 2).unwrap() {
            failures.push(name.to_string());
        }
        checked += 1;
    }
    // the product built from its definition is 2-quasi-cyclic and is the constructed code
    let direct = oracle::product_view(
        &oracle::expand_to_linear(&ga).unwrap(),
        &oracle::cyclic_view(&w.b),
        &w.params,
    )
    .unwrap();
    if !oracle::is_quasi_cyclic(&direct, 2).unwrap()
        || !direct.same_code(&oracle::expand_to_linear(&prod.to_basis()).unwrap())
    {
        failures.push("worked product from definition".to_string());
    }
    checked += 1;

    let mut rng = rng(0x5eed_0006);
    for n in 0..RANDOM_PRODUCTS {
        let inst = random_instance(&mut rng);
        let prod = one_level_product_rgb(&inst.a, &inst.b, &inst.params).unwrap();
        let v = oracle::expand_to_linear(&prod.to_basis()).unwrap();
        let direct = oracle::product_view(
            &oracle::expand_to_linear(&inst.a.to_basis()).unwrap(),
            &oracle::cyclic_view(&inst.b),
            &inst.params,
        )
        .unwrap();
        if !oracle::is_quasi_cyclic(&v, inst.params.ell_a).unwrap()
            || !oracle::is_quasi_cyclic(&direct, inst.params.ell_a).unwrap()
            || !v.same_code(&direct)
        {
            failures.push(format!("product #{n}"));
        }
        checked += 1;
    }
    for n in 0..CANONICITY_SAMPLES {
        let field = gf(*[2u64, 3].choose(&mut rng).unwrap());
        let ell = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=7);
        let rows = rng.gen_range(0..=3);
        let b = rgb_pot_reduce(&random_generating_matrix(&field, ell, m, rows, &mut rng));
        if !oracle::is_quasi_cyclic(&oracle::expand_to_linear(&b).unwrap(), ell).unwrap() {
            failures.push(format!("reduced basis #{n}"));
        }
        checked += 1;
    }
    verdict(
        6,
        "quasi-cyclic closure",
        failures.is_empty(),
        &format!("{checked} codes; failures: {failures:?}"),
    );
}

#[test]
fn c7_rgb_pot_canonicity() {
    let mut failures: Vec<String> = Vec::new();
    let mut rng = rng(0x5eed_0007);
    let f = gf(2);
    for n in 0..CANONICITY_SAMPLES {
        let ell = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=7);
        let rows = rng.gen_range(0..=4);
        let gen = random_generating_matrix(&f, ell, m, rows, &mut rng);
        let b = rgb_pot_reduce(&gen);
        let report = is_rgb_pot(&b);
        if !report.is_valid() {
            failures.push(format!("#{n} violations {:?}", report.violations));
            continue;
        }
        if rgb_pot_reduce(&b.to_generating_matrix()) != b {
            failures.push(format!("#{n} not idempotent"));
        }
        let span_in = oracle::expand_generating_matrix(&gen);
        let span_out = oracle::expand_to_linear(&b).unwrap();
        let words_in = oracle::enumerate_codewords(&span_in, DEFAULT_GUARD).unwrap();
        let space_out = span_out.row_space();
        if !span_in.same_code(&span_out) || words_in.iter().any(|c| !space_out.contains(c)) {
            failures.push(format!("#{n} module changed"));
        }
    }
    // the worked product and the closed-form output are canonical too
    let (ga, prod) = worked_product();
    for (name, b) in [("row code", ga), ("worked product", prod.to_basis())] {
        if !is_rgb_pot(&b).is_valid() || rgb_pot_reduce(&b.to_generating_matrix()) != b {
            failures.push(name.to_string());
        }
    }
    // the diagnostics do fire
    let b = worked_product().0;
    let mut swapped = b.rows().to_vec();
    swapped.swap(0, 1);
    let swapped = RgbPotBasis::from_rows(b.field(), 17, swapped).unwrap();
    if !is_rgb_pot(&swapped)
        .violations
        .iter()
        .any(|v| matches!(v, Violation::BelowDiagonal { .. }))
    {
        failures.push("swap not detected".to_string());
    }
    verdict(
        7,
        "RGB/POT canonicity, idempotence, module equality",
        failures.is_empty(),
        &format!("{CANONICITY_SAMPLES} generating sets over GF(2); failures: {failures:?}"),
    );
}

#[test]
fn c8_factorization_suite() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for q in [2u64, 3, 4] {
        let field = Field::of_order(q).unwrap();
        for m in 1..=60u64 {
            if qcprod::arith::gcd(q, m) != 1 {
                continue;
            }
            let factors = factor_xm_minus_1(&field, m).unwrap();
            let prod = factors
                .iter()
                .fold(Poly::one(&field), |acc, (_, f)| &acc * f);
            let cosets = cyclotomic_cosets(q, m).unwrap();
            let degrees_ok = factors
                .iter()
                .zip(&cosets)
                .all(|((_, f), c)| f.degree() == Some(c.len()) && f.is_monic());
            if prod != Poly::x_pow_minus_one(&field, m as usize) || !degrees_ok {
                failures.push(format!("q={q} m={m}"));
            }
            checked += 1;
        }
    }
    let f2 = gf(2);
    let reps = |m| -> Vec<u64> {
        factor_xm_minus_1(&f2, m)
            .unwrap()
            .into_iter()
            .map(|(r, _)| r)
            .collect()
    };
    if reps(17) != vec![0, 1, 3] {
        failures.push(format!("X^17-1 reps {:?}", reps(17)));
    }
    if reps(51) != vec![0, 1, 3, 5, 9, 11, 17, 19] {
        failures.push(format!("X^51-1 reps {:?}", reps(51)));
    }
    let elapsed = start.elapsed();
    verdict(
        8,
        "X^m - 1 factors into minimal polynomials",
        failures.is_empty() && elapsed < FACTOR_BUDGET,
        &format!("{checked} (q, m) pairs, {elapsed:?}; failures: {failures:?}"),
    );
}
