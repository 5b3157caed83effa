use super::*;
use crate::algebra::{build_algebra, fixture, DEFAULT_PATH_CAP, FIXTURE_NAMES};
use crate::error::Error;
use crate::linalg::Field;
use crate::module::{is_isomorphic, Module};

const Q: Field = Field::Rationals;

#[test]
fn fixture_documents_round_trip() {
    for name in FIXTURE_NAMES {
        let p = fixture(name, Q).unwrap();
        let text = AlgebraDocument::from_presentation(&p).serialize();
        let doc = AlgebraDocument::parse(&text).unwrap();
        assert_eq!(doc.serialize(), text, "{name}");
        let back = doc.to_presentation(None).unwrap();
        assert_eq!(AlgebraDocument::from_presentation(&back).serialize(), text, "{name}");
        let a = build_algebra(&back, DEFAULT_PATH_CAP).unwrap();
        assert_eq!(a.dim(), expected_basics(name).0, "{name}");
    }
}

#[test]
fn documents_build_algebras() {
    let a2 = r#"{
  "format_version": "1",
  "field": "Q",
  "quiver": {"vertices": ["1", "2"], "arrows": [{"id": "a", "source": "1", "target": "2"}]}
}"#;
    let p = AlgebraDocument::parse(a2).unwrap().to_presentation(None).unwrap();
    assert_eq!(build_algebra(&p, DEFAULT_PATH_CAP).unwrap().dim(), 3);

    let fx42 = r#"{
  "format_version": "1",
  "field": "Fp:5",
  "quiver": {
    "vertices": ["1", "2"],
    "arrows": [
      {"id": "alpha", "source": "2", "target": "1"},
      {"id": "beta", "source": "1", "target": "2"}
    ]
  },
  "relations": [[{"coeff": "1", "path": ["alpha", "beta", "alpha"]}]]
}"#;
    let doc = AlgebraDocument::parse(fx42).unwrap();
    let p = doc.to_presentation(None).unwrap();
    assert_eq!(p.field, Field::prime(5).unwrap());
    assert_eq!(build_algebra(&p, DEFAULT_PATH_CAP).unwrap().dim(), 7);
    assert_eq!(doc.to_presentation(Some(Q)).unwrap().field, Q);
}

#[test]
fn malformed_inputs() {
    let nonparallel = r#"{
  "format_version": "1",
  "field": "Q",
  "quiver": {
    "vertices": ["1", "2", "3"],
    "arrows": [{"id": "a", "source": "1", "target": "2"}, {"id": "b", "source": "1", "target": "3"}]
  },
  "relations": [[{"coeff": "1", "path": ["a"]}, {"coeff": "-1", "path": ["b"]}]]
}"#;
    let err = AlgebraDocument::parse(nonparallel).unwrap().to_presentation(None);
    assert!(matches!(err, Err(Error::MalformedRelation(_))), "{err:?}");

    let broken = "{\n  \"format_version\": \"1\",\n  \"field\": Q\n}";
    match AlgebraDocument::parse(broken) {
        Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (3, 12)),
        other => panic!("{other:?}"),
    }
    let unknown = r#"{"format_version": "1", "field": "Q", "quiver": {"vertices": [], "arrows": []}, "extra": 1}"#;
    assert!(matches!(AlgebraDocument::parse(unknown), Err(Error::Syntax { .. })));
    let version = r#"{"format_version": "2", "field": "Q", "quiver": {"vertices": [], "arrows": []}}"#;
    assert!(matches!(AlgebraDocument::parse(version), Err(Error::Input(_))));
    assert!(parse_field("Fp:6").is_err());
    assert!(parse_field("R").is_err());
    assert_eq!(field_name(parse_field("Fp:7").unwrap()), "Fp:7");
}

#[test]
fn module_expressions() {
    let a = fixture_algebra("FX-43", Q).unwrap();
    assert_eq!(
        ModuleExpr::parse("P2 + S2^2").unwrap(),
        ModuleExpr::Sum(vec![
            ModuleExpr::Projective("2".into()),
            ModuleExpr::Power(Box::new(ModuleExpr::Simple("2".into())), 2),
        ])
    );
    assert_eq!(module_from_expr("A", &a).unwrap().dim(), 5);
    assert_eq!(module_from_expr("P1 ⊕ P2", &a).unwrap().dims(), &[2, 3]);
    assert_eq!(module_from_expr("(P2+S1)^2", &a).unwrap().dim(), 8);
    assert_eq!(module_from_expr("0", &a).unwrap().dim(), 0);
    // P1 = 1/2 modulo the trace of P2 = 2/1/2 is S1
    let q = module_from_expr("P1/P2", &a).unwrap();
    assert!(is_isomorphic(&q, &Module::simple(a.clone(), 0)).unwrap());

    match ModuleExpr::parse("P1 + Q2") {
        Err(Error::Syntax { line: 1, column, .. }) => assert_eq!(column, 6),
        other => panic!("{other:?}"),
    }
    assert!(matches!(ModuleExpr::parse("P1^"), Err(Error::Syntax { .. })));
    assert!(matches!(ModuleExpr::parse("(P1"), Err(Error::Syntax { .. })));
    assert!(matches!(module_from_expr("P9", &a), Err(Error::Input(_))));
}

#[test]
fn module_documents_round_trip() {
    let a = fixture_algebra("FX-41", Q).unwrap();
    let m = module_from_expr("P2/P3 + S1", &a).unwrap();
    let doc = module_to_document(&m);
    let text = to_json(&doc);
    let back = module_from_document(&parse_json(&text).unwrap(), &a).unwrap();
    assert_eq!(back.dims(), m.dims());
    assert_eq!(back.maps(), m.maps());

    let mut bad = doc.clone();
    bad.arrows.insert("alpha".into(), vec![vec!["1".into()]]);
    assert!(module_from_document(&bad, &a).is_err());
    let mut unknown = doc;
    unknown.arrows.insert("zeta".into(), vec![]);
    assert!(matches!(module_from_document(&unknown, &a), Err(Error::Input(_))));
}

#[test]
fn complexes_round_trip() {
    let a = fixture_algebra("FX-43", Q).unwrap();
    for m in 1..=4 {
        let c = fx43_staircase(&a, m).unwrap();
        let doc = complex_to_document(&c, &a, "FX-43");
        let text = to_json(&doc);
        let back = complex_from_document(&parse_json(&text).unwrap(), &a).unwrap();
        assert_eq!(back, c);
        assert_eq!(to_json(&complex_to_document(&back, &a, "FX-43")), text);
    }
}

#[test]
fn elements_from_terms() {
    let a = fixture_algebra("FX-43", Q).unwrap();
    let terms = vec![
        TermDoc {
            coeff: "2".into(),
            path: vec![],
            vertex: Some("1".into()),
        },
        TermDoc {
            coeff: "-1/3".into(),
            path: vec!["alpha".into()],
            vertex: None,
        },
    ];
    let x = element_from_terms(&a, &terms).unwrap();
    assert_eq!(terms_from_element(&a, &x), terms);
    let dead = TermDoc {
        coeff: "1".into(),
        path: vec!["beta".into(), "alpha".into()],
        vertex: None,
    };
    assert_eq!(element_from_terms(&a, &[dead]).unwrap(), a.zero());
    let unknown = TermDoc {
        coeff: "1".into(),
        path: vec!["gamma".into()],
        vertex: None,
    };
    assert!(element_from_terms(&a, &[unknown]).is_err());
}

#[test]
fn reports_are_deterministic() {
    let p = fixture("FX-KRON", Q).unwrap();
    let dot = quiver_dot(&p);
    assert!(dot.contains("\"1\" -> \"2\" [label=\"a\"]"));
    assert!(dot.contains("\"1\" -> \"2\" [label=\"b\"]"));
    let r = Report::new(
        vec!["gldim".into(), "FX-KRON".into()],
        Some(Provenance::digest(b"abc")),
        serde_json::json!({"global_dimension": {"kind": "finite", "value": 1}}),
    );
    assert_eq!(r.to_json(), r.clone().to_json());
    assert!(r.to_json().contains("ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"));
    assert_eq!(r.to_text(), "global_dimension: finite(1)\n");
}

#[test]
fn golden_fixtures() {
    let rows = verify_fixtures(20).unwrap();
    for r in &rows {
        assert!(r.ok, "{} {}: expected {}, got {}", r.fixture, r.check, r.expected, r.actual);
    }
    assert!(rows.len() >= 2 * FIXTURE_NAMES.len());
}
