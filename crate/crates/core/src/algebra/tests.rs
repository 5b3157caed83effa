use super::*;
use crate::linalg::Field;

const Q: Field = Field::Rationals;

fn build(name: &str) -> Algebra {
    build_algebra(&fixture(name, Q).unwrap(), DEFAULT_PATH_CAP).unwrap()
}

fn projective_dims(a: &Algebra) -> Vec<usize> {
    (0..a.num_vertices())
        .map(|v| a.basis().iter().filter(|w| w.source == v).count())
        .collect()
}

#[test]
fn fixture_dimensions() {
    for (name, dim) in [
        ("FX-A2", 3),
        ("FX-A3", 6),
        ("FX-KRON", 4),
        ("FX-42", 7),
        ("FX-43", 5),
        ("FX-CAN222", 13),
    ] {
        assert_eq!(build(name).dim(), dim, "{name}");
    }
    assert_eq!(projective_dims(&build("FX-42")), vec![4, 3]);
    assert_eq!(projective_dims(&build("FX-43")), vec![2, 3]);
    assert_eq!(projective_dims(&build("FX-A3")), vec![1, 2, 3]);
}

#[test]
fn fx41_projectives() {
    let a = build("FX-41");
    eprintln!("{:?}", a);
    assert_eq!(projective_dims(&a), vec![3, 4, 2]);
}

#[test]
fn structure_laws() {
    for name in FIXTURE_NAMES {
        let a = build(name);
        assert!(a.is_associative(), "{name}");
        assert!(a.has_unit(), "{name}");
    }
}

#[test]
fn not_finite_dimensional() {
    let p = Presentation::new(Q, Quiver::new(&["1"], &[("x", "1", "1")]).unwrap());
    assert_eq!(build_algebra(&p, 5), Err(crate::Error::NotFiniteDimensional { cap: 5 }));
    assert_eq!(build_algebra(&dual_numbers(Q), 5).unwrap().dim(), 2);
}

#[test]
fn opposites() {
    let a2 = build("FX-A2");
    let op = a2.opposite();
    assert_eq!(op.dim(), 3);
    assert_eq!(op.quiver().unwrap().arrows[0].source, 1);
    assert_eq!(op.opposite(), a2);
    let d = build_algebra(&dual_numbers(Q), 5).unwrap();
    assert!(d.is_commutative());
    let a43 = build("FX-43");
    let op43 = a43.opposite();
    assert_eq!(op43.dim(), 5);
    assert!(op43.is_associative());
    // the relation reverses to alpha then beta
    let rel = &op43.presentation().unwrap().relations[0].terms[0].1;
    assert_eq!(rel.arrows, vec![0, 1]);
}

#[test]
fn idempotent_quotients() {
    let a3 = build("FX-A3");
    // vertex 1 is the sink here; removing it leaves 2 <- 3
    assert_eq!(a3.quotient_by_idempotent_ideal(&[0]).unwrap().dim(), 3);
    assert_eq!(a3.quotient_by_idempotent_ideal(&[0, 1, 2]).unwrap().dim(), 0);
    let a43 = build("FX-43");
    assert_eq!(a43.quotient_by_idempotent_ideal(&[0]).unwrap().dim(), 1);
}

#[test]
fn directedness() {
    assert!(build("FX-A3").is_directed());
    assert!(build("FX-CAN222").is_directed());
    assert!(!build("FX-43").is_directed());
    assert!(!build_algebra(&dual_numbers(Q), 5).unwrap().is_directed());
}

#[test]
fn normalized_matches_original() {
    for name in ["FX-43", "FX-A3", "FX-42"] {
        let a = build(name);
        let (b, _) = RawAlgebra::from_algebra(&a).normalize().unwrap();
        assert_eq!(b.dim(), a.dim());
        assert_eq!(b.num_vertices(), a.num_vertices());
        assert_eq!(b.radical_dim(), a.radical_dim());
        assert!(b.is_associative() && b.has_unit());
        assert_eq!(b.is_directed(), a.is_directed());
    }
}

#[test]
fn prime_field_build() {
    let a = build_algebra(&fixture("FX-CAN222", Field::Prime(3)).unwrap(), 30).unwrap();
    assert_eq!(a.dim(), 13);
    assert!(a.is_associative());
}
