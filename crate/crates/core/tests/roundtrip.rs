use axial_core::axial::check_axis;
use axial_core::catalog::{build, norton_sakuma, Matsuo, NORTON_SAKUMA_NAMES};
use axial_core::frobenius::{is_frobenius, solve_frobenius};
use axial_core::io::{algebra_from_json, algebra_to_json};
use axial_core::{Algebra, Field, Scalar};
use proptest::prelude::*;

#[test]
fn catalog_json_round_trip() {
    let mut algebras: Vec<Algebra> = NORTON_SAKUMA_NAMES
        .iter()
        .map(|n| norton_sakuma(n).unwrap())
        .collect();
    algebras.push(build("matsuo:Sn:4:1/4", Field::Rational).unwrap().algebra);
    algebras.push(build("flip:matsuo:Sn:4:1/4:(1 2)(3 4)", Field::Rational).unwrap().algebra);
    algebras.push(build("matsuo:Sn:4:3", Field::prime(11).unwrap()).unwrap().algebra);
    for alg in algebras {
        let text = algebra_to_json(&alg);
        let back = algebra_from_json(&text).unwrap();
        assert_eq!(back, alg);
        assert_eq!(algebra_to_json(&back), text);
    }
}

#[test]
fn matsuo_forms_match_the_solver() {
    let fields = [
        (Field::Rational, "1/4"),
        (Field::Rational, "-1/3"),
        (Field::prime(13).unwrap(), "5"),
    ];
    for (field, eta) in fields {
        for n in [3, 4] {
            let m = Matsuo::symmetric(n, field.parse(eta).unwrap()).unwrap();
            assert!(is_frobenius(&m.algebra, &m.form()));
            assert_eq!(solve_frobenius(&m.algebra).canonical, Some(m.form()));
            let law = m.algebra.law().unwrap().clone();
            for axis in m.algebra.axes() {
                assert!(check_axis(&m.algebra, &axis.v, &law).unwrap().is_primitive_axis());
            }
        }
    }
}

#[test]
fn three_transposition_json() {
    let dir = tempfile_dir();
    let path = dir.join("s3.json");
    std::fs::write(
        &path,
        r#"{"degree": 3, "involutions": ["(1 2)", "(1 3)", "(2 3)"]}"#,
    )
    .unwrap();
    let spec = format!("matsuo:json:{}:1/4", path.display());
    let a = build(&spec, Field::Rational).unwrap().algebra;
    let b = build("matsuo:Sn:3:1/4", Field::Rational).unwrap().algebra;
    assert_eq!(a, b);
    std::fs::write(&path, r#"{"degree": 4, "involutions": ["(1 2)", "(2 3)"]}"#).unwrap();
    assert!(build(&spec, Field::Rational).is_err());
}

fn tempfile_dir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("axial-roundtrip-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn small_algebra(n: usize, coeffs: &[i64]) -> Algebra {
    let f = Field::Rational;
    let mut alg = Algebra::zero(f, n, "e");
    let mut it = coeffs.iter().cycle();
    for i in 0..n {
        for j in i..n {
            let v = alg.vector((0..n).map(|k| {
                let c = *it.next().unwrap();
                (k, f.ratio(c, 1 + (k as i64 % 3)).unwrap())
            }));
            alg.set_product(i, j, v).unwrap();
        }
    }
    alg
}

proptest! {
    #[test]
    fn random_algebras_round_trip(n in 1usize..5, coeffs in prop::collection::vec(-3i64..4, 1..20)) {
        let alg = small_algebra(n, &coeffs);
        let back = algebra_from_json(&algebra_to_json(&alg)).unwrap();
        prop_assert_eq!(back, alg);
    }

    #[test]
    fn frobenius_solutions_are_associative(n in 1usize..4, coeffs in prop::collection::vec(-2i64..3, 1..12)) {
        let alg = small_algebra(n, &coeffs);
        for g in solve_frobenius(&alg).basis {
            prop_assert!(is_frobenius(&alg, &g));
        }
    }
}

#[test]
fn scalars_in_json_are_strings() {
    let alg = norton_sakuma("3A").unwrap();
    let v: serde_json::Value = serde_json::from_str(&algebra_to_json(&alg)).unwrap();
    let mut seen = 0;
    for p in v["products"].as_array().unwrap() {
        for (_, c) in p["v"].as_object().unwrap() {
            let text = c.as_str().unwrap();
            let x: Scalar = Field::Rational.parse(text).unwrap();
            assert_eq!(x.to_literal(), text);
            seen += 1;
        }
    }
    assert!(seen > 0);
}
