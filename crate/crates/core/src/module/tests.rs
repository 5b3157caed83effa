use std::sync::Arc;

use super::*;
use crate::algebra::{build_algebra, dual_numbers, fixture, Algebra, DEFAULT_PATH_CAP};
use crate::linalg::{Field, Matrix};

const Q: Field = Field::Rationals;

fn alg(name: &str) -> Arc<Algebra> {
    Arc::new(build_algebra(&fixture(name, Q).unwrap(), DEFAULT_PATH_CAP).unwrap())
}

#[test]
fn standard_modules() {
    let a = alg("FX-43");
    assert_eq!(Module::projective(a.clone(), 0).dims(), &[1, 1]);
    assert_eq!(Module::projective(a.clone(), 1).dims(), &[1, 2]);
    assert_eq!(Module::simple(a.clone(), 1).dims(), &[0, 1]);
    let b = alg("FX-42");
    assert_eq!(Module::projective(b.clone(), 0).dims(), &[2, 2]);
    assert_eq!(Module::projective(b.clone(), 1).dims(), &[1, 2]);
    for name in ["FX-A3", "FX-41", "FX-CAN222"] {
        let a = alg(name);
        for v in 0..a.num_vertices() {
            let s = Module::simple(a.clone(), v);
            let mut ind = vec![0; a.num_vertices()];
            ind[v] = 1;
            assert_eq!(s.dims(), &ind[..]);
        }
    }
}

#[test]
fn projectives_are_valid_modules() {
    for name in ["FX-41", "FX-42", "FX-43", "FX-CAN222", "FX-KRON"] {
        let a = alg(name);
        for v in 0..a.num_vertices() {
            let p = Module::projective(a.clone(), v);
            Module::new(a.clone(), p.dims().to_vec(), p.maps().to_vec()).unwrap();
        }
    }
}

#[test]
fn invalid_module_rejected() {
    let a = alg("FX-43");
    // beta alpha = 0 fails when both maps are 1x1 identities
    let one = Matrix::identity(Q, 1);
    let err = Module::new(a, vec![1, 1], vec![one.clone(), one]);
    assert!(matches!(err, Err(crate::Error::InvalidModule(_))));
}

#[test]
fn projective_hom_identity() {
    for name in ["FX-41", "FX-42", "FX-43", "FX-A3"] {
        let a = alg(name);
        let reg = Module::regular(a.clone());
        for v in 0..a.num_vertices() {
            let p = Module::projective(a.clone(), v);
            for w in 0..a.num_vertices() {
                let m = Module::projective(a.clone(), w);
                assert_eq!(hom_dim(&p, &m), m.dims()[v], "{name}");
            }
            assert_eq!(hom_dim(&p, &reg), reg.dims()[v]);
        }
    }
}

#[test]
fn small_hom_spaces() {
    let a = alg("FX-A2");
    let p1 = Module::projective(a.clone(), 0);
    let s2 = Module::simple(a.clone(), 1);
    assert_eq!(hom_dim(&s2, &p1), 1);
    let b = alg("FX-43");
    let p2 = Module::projective(b.clone(), 1);
    assert_eq!(hom_dim(&Module::simple(b.clone(), 1), &p2), 1);
    assert_eq!(hom_dim(&p2, &Module::projective(b.clone(), 0)), 1);
}

#[test]
fn morphism_parts_examples() {
    let a = alg("FX-A2");
    let p1 = Module::projective(a.clone(), 0);
    let p2 = Module::projective(a.clone(), 1);
    let id = Morphism::identity(&p1);
    let parts = morphism_parts(&p1, &p1, &id);
    assert!(parts.kernel.is_zero() && parts.cokernel.is_zero());
    let z = Morphism::zero(&p1, &p2);
    let parts = morphism_parts(&p1, &p2, &z);
    assert_eq!(parts.kernel.dims(), p1.dims());
    assert_eq!(parts.cokernel.dims(), p2.dims());
    let incl = hom_space(&p2, &p1).pop().unwrap();
    assert!(incl.is_homomorphism(&p2, &p1));
    let parts = morphism_parts(&p2, &p1, &incl);
    assert!(is_isomorphic(&parts.cokernel, &Module::simple(a.clone(), 0)).unwrap());
}

#[test]
fn traces() {
    let a = alg("FX-43");
    let p2 = Module::projective(a.clone(), 1);
    let s2 = Module::simple(a.clone(), 1);
    let t = trace(&s2, &p2);
    assert_eq!(t.dims(), vec![0, 1]);
    assert_eq!(trace(&p2, &p2).dims(), p2.dims().to_vec());
    let (q, _) = p2.quotient(&t).unwrap();
    assert_eq!(q.dims(), &[1, 1]);
    assert!(is_indecomposable(&q).unwrap());

    let b = alg("FX-42");
    let p1 = Module::projective(b.clone(), 0);
    let t1 = Module::projective(b.clone(), 1);
    let t = trace(&t1, &p1);
    assert_eq!(t.dim(), 3);
    let (l, _) = p1.quotient(&t).unwrap();
    assert!(is_isomorphic(&l, &Module::simple(b.clone(), 0)).unwrap());
}

#[test]
fn quotient_edge_cases() {
    let a = alg("FX-42");
    let p1 = Module::projective(a.clone(), 0);
    let (q, _) = p1.quotient(&p1.zero_submodule()).unwrap();
    assert!(is_isomorphic(&q, &p1).unwrap());
    assert!(p1.quotient(&p1.whole()).unwrap().0.is_zero());
    let bad = Submodule {
        spans: vec![Matrix::identity(Q, 2), Matrix::zeros(Q, 0, 2)],
    };
    assert!(matches!(p1.quotient(&bad), Err(crate::Error::NotSubmodule(_))));
}

#[test]
fn radical_and_top() {
    let a = alg("FX-42");
    let p1 = Module::projective(a.clone(), 0);
    assert_eq!(p1.radical().dims(), vec![1, 2]);
    assert!(is_isomorphic(&p1.top(), &Module::simple(a.clone(), 0)).unwrap());
    let s = Module::simple(a.clone(), 1);
    assert_eq!(s.radical().dim(), 0);
}

#[test]
fn endomorphism_algebras() {
    let b = alg("FX-42");
    let p2 = Module::projective(b.clone(), 1);
    let end = EndAlgebra::new(&p2);
    assert_eq!(end.dim(), 2);
    let (c, _) = end.normalized(&p2).unwrap();
    assert_eq!(c.radical_dim(), 1);
    assert!(c.is_commutative());
    assert_eq!(end.raw.radical().unwrap().dim(), 1);

    let a = alg("FX-43");
    let p2 = Module::projective(a.clone(), 1);
    let (l, _) = p2.quotient(&trace(&Module::simple(a.clone(), 1), &p2)).unwrap();
    let l2 = l.power(2);
    let end = EndAlgebra::new(&l2);
    assert_eq!(end.dim(), 4);
    let (m2, _) = end.normalized(&l2).unwrap();
    assert_eq!(m2.radical_dim(), 0);
    assert_eq!(m2.num_vertices(), 2);
    assert_eq!(m2.k0_rank(), 1);
    assert_eq!(m2.center().rows(), 1);
}

#[test]
fn decompositions() {
    let a = alg("FX-A2");
    let p1 = Module::projective(a.clone(), 0);
    let d = decompose(&p1.power(2)).unwrap();
    assert_eq!(d.len(), 1);
    assert_eq!(d[0].1, 2);
    let reg = decompose(&Module::regular(a.clone())).unwrap();
    assert_eq!(reg.len(), 2);
    assert!(reg.iter().all(|(_, k)| *k == 1));

    let b = alg("FX-43");
    let p2 = Module::projective(b.clone(), 1);
    let (l, _) = p2.quotient(&trace(&Module::simple(b.clone(), 1), &p2)).unwrap();
    let d = decompose(&l.power(2)).unwrap();
    assert_eq!(d.len(), 1);
    assert_eq!(d[0].1, 2);
    assert!(is_isomorphic(&d[0].0, &l).unwrap());
}

#[test]
fn isomorphism_tests() {
    let a = alg("FX-A2");
    let p1 = Module::projective(a.clone(), 0);
    let split = Module::simple(a.clone(), 0).direct_sum(&Module::simple(a.clone(), 1));
    assert!(is_isomorphic(&p1, &p1).unwrap());
    assert!(!is_isomorphic(&p1, &split).unwrap());

    let d = Arc::new(build_algebra(&dual_numbers(Q), DEFAULT_PATH_CAP).unwrap());
    let k = Module::simple(d.clone(), 0);
    let p = Module::projective(d.clone(), 0);
    let rad = p.radical();
    let (omega, _) = p.sub(&rad).unwrap();
    assert!(is_isomorphic(&omega, &k).unwrap());
}

#[test]
fn from_action_recovers_regular() {
    let a = alg("FX-42");
    let reg = Module::regular(a.clone());
    let (m, _) = Module::from_action(a.clone(), |b| reg.act(&a.unit_vector(b)));
    Module::new(a.clone(), m.dims().to_vec(), m.maps().to_vec()).unwrap();
    assert!(is_isomorphic(&m, &reg).unwrap());
}

#[test]
fn modules_over_prime_fields() {
    let f = Field::prime(3).unwrap();
    let a = Arc::new(build_algebra(&fixture("FX-42", f).unwrap(), DEFAULT_PATH_CAP).unwrap());
    let p1 = Module::projective(a.clone(), 0);
    let d = decompose(&p1.power(3)).unwrap();
    assert_eq!(d.len(), 1);
    assert_eq!(d[0].1, 3);
}
