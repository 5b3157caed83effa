//! Acceptance suite: one PASS/FAIL line per criterion.

use std::cell::RefCell;
use std::process::ExitCode;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use strathom::algebra::{build_algebra, dual_numbers, fixture, Algebra, Signature, DEFAULT_PATH_CAP, FIXTURE_NAMES};
use strathom::homology::{ext_dim, global_dim, is_exceptional, is_homological_epi, Dimension, Verdict};
use strathom::io::{fx43_staircase, module_from_expr};
use strathom::linalg::{Field, Matrix};
use strathom::module::{hom_dim, is_isomorphic, trace, Module};
use strathom::tilting::{
    adjunction_check, check_tilting, compare_factor_multisets, ell, euler_form, ext_euler_characteristic,
    heredity_check, induced_epi, kronecker_sample, legal_orders, perpendicular_epi, random_module,
    recollement_from_tilting, stratify, thin_indecomposables, tilting_oracle, K0Ranks, RecollementDatum,
    TResolution,
};

const Q: Field = Field::Rationals;
const CAP: usize = 20;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

thread_local! {
    /// Rank triples of every successful recollement built anywhere in the suite.
    static RANKS: RefCell<Vec<(String, K0Ranks)>> = const { RefCell::new(Vec::new()) };
}

fn record(label: &str, d: &RecollementDatum) {
    RANKS.with(|r| r.borrow_mut().push((label.to_string(), d.ranks)));
}

fn alg(name: &str) -> Arc<Algebra> {
    Arc::new(build_algebra(&fixture(name, Q).unwrap(), DEFAULT_PATH_CAP).unwrap())
}

fn m(a: &Arc<Algebra>, expr: &str) -> Module {
    module_from_expr(expr, a).unwrap()
}

fn iso(x: &Module, y: &Module) -> bool {
    is_isomorphic(x, y).unwrap()
}

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn tilting_resolution(a: &Arc<Algebra>, t: &str) -> Result<TResolution, String> {
    let cert = check_tilting(&m(a, t), CAP).map_err(|e| e.to_string())?;
    ensure(cert.is_tilting, format!("{t} is not tilting: {:?}", cert.failure))?;
    Ok(cert.coresolution.unwrap())
}

fn criterion_1() -> Check {
    let a = alg("FX-42");
    let reg = Module::regular(a.clone());
    let cert = check_tilting(&reg, CAP).map_err(|e| e.to_string())?;
    ensure(cert.is_tilting, "A is not tilting")?;
    // 0 -> A -> A + P2 -> P2 -> 0
    let res = TResolution::trivial(&reg).with_split_summand(&m(&a, "P2"));
    res.validate(&reg).map_err(|e| e.to_string())?;
    let l = ell(&res).map_err(|e| e.to_string())?;
    ensure(iso(&l.module, &m(&a, "S1")), format!("ell(A) has dims {:?}, not S1", l.module.dims()))?;
    let report = recollement_from_tilting(&res, CAP)
        .map_err(|e| e.to_string())?
        .err()
        .ok_or("the pipeline should stop at the pd hypothesis")?;
    ensure(report.hypothesis == "finite projective dimension of T1 over C", report.hypothesis.clone())?;
    let d = report.datum.ok_or("no datum")?;
    ensure(d.b.dim() == 1, format!("B dim {}", d.b.dim()))?;
    ensure(d.homological_epi == Verdict::Certified(true), format!("epi {:?}", d.homological_epi))?;
    let dual = build_algebra(&dual_numbers(Q), DEFAULT_PATH_CAP).unwrap();
    ensure(
        d.c.signature() == dual.signature() && d.c.dim() == 2 && d.c.radical_dim() == 1,
        format!("C signature {:?}, radical {}", d.c.signature(), d.c.radical_dim()),
    )?;
    ensure(d.t1_pd_over_c == Dimension::Infinite, format!("pd {:?}", d.t1_pd_over_c))?;
    Ok(format!(
        "ell(A) = S1, B dim 1, epi {:?}, C = k[x]/x^2 (dim 2, rad 1), pd T1 over C {:?}",
        d.homological_epi, d.t1_pd_over_c
    ))
}

fn criterion_2() -> Check {
    let a = alg("FX-43");
    let res = tilting_resolution(&a, "P2+S2")?;
    let l = ell(&res).map_err(|e| e.to_string())?;
    // 2/1 is P2 modulo its socle
    ensure(iso(&l.module, &m(&a, "(P2/S2)^2")), format!("ell(A) dims {:?}", l.module.dims()))?;
    let epi = induced_epi(&a, &l).map_err(|e| e.to_string())?;
    let b = &epi.b;
    let m2 = Signature {
        dim: 4,
        center_dim: 1,
        commutative: false,
    };
    ensure(
        b.signature() == m2 && b.radical_dim() == 0 && b.k0_rank() == 1,
        format!("B {:?}, radical {}, k0 {}", b.signature(), b.radical_dim(), b.k0_rank()),
    )?;
    let beta = a.word_element(&["beta"]).unwrap();
    ensure(epi.phi.apply(&beta).iter().all(|x| x.is_zero()), "phi(beta) != 0")?;
    let d = recollement_from_tilting(&res, CAP)
        .map_err(|e| e.to_string())?
        .map_err(|f| format!("failed: {} ({})", f.hypothesis, f.detail))?;
    record("FX-43, T = P2+S2", &d);
    ensure(d.ranks == K0Ranks { a: 2, b: 1, c: 1 }, format!("ranks {:?}", d.ranks))?;
    let gl = global_dim(&a, CAP);
    ensure(gl == Dimension::Finite(2), format!("gldim {gl:?}"))?;
    Ok("ell(A) = (2/1)^2, B = M2(k) semisimple, phi(beta) = 0, ranks 2 = 1 + 1, gldim Finite(2)".into())
}

fn criterion_3() -> Check {
    let a = alg("FX-41");
    let p2 = m(&a, "P2");
    let (t1, _) = p2.quotient(&trace(&m(&a, "P3"), &p2)).unwrap();
    let t = m(&a, "P1+P2").direct_sum(&t1);
    let cert = check_tilting(&t, CAP).map_err(|e| e.to_string())?;
    ensure(cert.is_tilting, "T is not tilting")?;
    let res = cert.coresolution.unwrap();
    let l = ell(&res).map_err(|e| e.to_string())?;
    // M = (2; 1 3), P2 modulo its socle
    let s1 = m(&a, "S1");
    let big = m(&a, "P2/S2");
    ensure(big.dims() == [1, 1, 1], format!("M dims {:?}", big.dims()))?;
    ensure(iso(&l.module, &s1.direct_sum(&big.power(2))), "ell(A) is not S1 + M^2")?;
    let left = ext_dim(&s1, &big, 2);
    let right = ext_dim(&big, &s1, 2);
    ensure(left + right >= 1, "Ext^2 between S1 and M vanishes in both orders")?;
    let ex = is_exceptional(&l.module, CAP);
    ensure(ex == Verdict::Certified(false), format!("is_exceptional {ex:?}"))?;
    let epi = induced_epi(&a, &l).map_err(|e| e.to_string())?;
    let he = is_homological_epi(&epi.phi, CAP);
    ensure(he == Verdict::Certified(false), format!("is_homological_epi {he:?}"))?;
    Ok(format!(
        "is_exceptional {ex:?}, is_homological_epi {he:?}; ext_dim(S1, M, 2) = {left}, ext_dim(M, S1, 2) = {right}"
    ))
}

fn criterion_4() -> Check {
    let a = alg("FX-A3");
    let res = tilting_resolution(&a, "P1+P3+S3")?;
    let l = ell(&res).map_err(|e| e.to_string())?;
    ensure(l.trace_dim == 0, format!("trace dim {}", l.trace_dim))?;
    ensure(l.module.dim() == 7 && iso(&l.module, &res.t0), "ell(A) != T0")?;
    let d = recollement_from_tilting(&res, CAP)
        .map_err(|e| e.to_string())?
        .map_err(|f| format!("failed: {} ({})", f.hypothesis, f.detail))?;
    record("FX-A3, T = P1+P3+S3", &d);
    ensure(d.phi.is_injective(), "phi not injective")?;
    ensure(d.homological_epi == Verdict::Certified(true), format!("epi {:?}", d.homological_epi))?;
    ensure(d.ranks == K0Ranks { a: 3, b: 2, c: 1 }, format!("ranks {:?}", d.ranks))?;
    Ok("trace 0, ell(A) = T0 of dim 7, phi injective, epi Certified(true), ranks 3 = 2 + 1".into())
}

fn criterion_5() -> Check {
    let mut out = Vec::new();
    for (name, leaves) in [("FX-A3", 3), ("FX-CAN222", 5)] {
        let a = alg(name);
        let t = stratify(&a, None).map_err(|e| e.to_string())?;
        ensure(t.leaf_count() == leaves, format!("{name}: {} leaves", t.leaf_count()))?;
        ensure(t.leaves().iter().all(|s| s.dim == 1), format!("{name}: a leaf of dim > 1"))?;
        let orders = legal_orders(&a).map_err(|e| e.to_string())?;
        for o in &orders {
            let u = stratify(&a, Some(o)).map_err(|e| e.to_string())?;
            ensure(compare_factor_multisets(&t, &u), format!("{name}: order {o:?} differs"))?;
        }
        out.push(format!("{name} {leaves} leaves over {} orders", orders.len()));
    }
    Ok(out.join(", "))
}

fn criterion_6() -> Check {
    let mut out = Vec::new();
    for (name, count) in [("FX-A2", 3), ("FX-A3", 6)] {
        let a = alg(name);
        let ind = thin_indecomposables(&a).map_err(|e| e.to_string())?;
        ensure(ind.len() == count, format!("{name}: {} indecomposables", ind.len()))?;
        let rows = tilting_oracle(&a, &ind, CAP).map_err(|e| e.to_string())?;
        let bad: Vec<_> = rows.iter().filter(|r| !r.consistent()).collect();
        ensure(bad.is_empty(), format!("{name}: counterexamples {bad:?}"))?;
        let tilting = rows.iter().filter(|r| r.tilting).count();
        out.push(format!("{name} {} exceptional sums, {tilting} tilting", rows.len()));
    }
    Ok(format!("{}, zero counterexamples", out.join(", ")))
}

fn criterion_7() -> Check {
    let a = alg("FX-43");
    for len in 1..=6 {
        let c = fx43_staircase(&a, len).map_err(|e| e.to_string())?;
        let min = c.minimize(&a);
        ensure(min == c, format!("m = {len}: minimization changed the complex"))?;
        ensure(min.length() == len, format!("m = {len}: length {}", min.length()))?;
        let (lo, hi) = min.window().ok_or("empty window")?;
        let rs = min.hom_extents(&a);
        ensure(rs == Some((hi, -lo)), format!("m = {len}: (r, s) = {rs:?}, window [{lo}, {hi}]"))?;
    }
    Ok("m = 1..6 unchanged with length m, (r, s) = (top, -bottom) of the window".into())
}

fn random_matrix(rng: &mut ChaCha8Rng) -> Matrix {
    let f = [Q, Field::prime(2).unwrap(), Field::prime(5).unwrap()][rng.gen_range(0..3)];
    let (r, c) = (rng.gen_range(0..8), rng.gen_range(0..8));
    let data = (0..r * c)
        .map(|_| if rng.gen_bool(0.4) { f.zero() } else { f.from_i64(rng.gen_range(-4..=4)) })
        .collect();
    Matrix::from_vec(f, r, c, data).unwrap()
}

fn criterion_8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..200 {
        let x = random_matrix(&mut rng);
        let k = x.kernel_basis();
        ensure(x.rank() + k.cols() == x.cols() && x.mul(&k).is_zero(), format!("rank-nullity, matrix {i}"))?;
    }

    for name in FIXTURE_NAMES {
        let a = alg(name);
        ensure(a.is_associative() && a.has_unit(), format!("{name}: associativity or unit"))?;
    }

    let mut pairs = 0;
    for name in ["FX-A2", "FX-A3", "FX-KRON"] {
        let a = alg(name);
        let ind = if name == "FX-KRON" {
            kronecker_sample(&a, 2).map_err(|e| e.to_string())?
        } else {
            thin_indecomposables(&a).map_err(|e| e.to_string())?
        };
        for x in &ind {
            for y in &ind {
                let (lhs, rhs) = (euler_form(&a, x.dims(), y.dims()), ext_euler_characteristic(x, y, 2));
                ensure(lhs == rhs, format!("{name}: Euler form {:?} {:?}", x.dims(), y.dims()))?;
                pairs += 1;
            }
        }
    }

    let mut modules = 0;
    let names = ["FX-A3", "FX-KRON", "FX-41", "FX-42", "FX-43"];
    while modules < 50 {
        let a = alg(names[modules % names.len()]);
        let x = random_module(&a, &mut rng);
        for v in 0..a.num_vertices() {
            let p = Module::projective(a.clone(), v);
            ensure(hom_dim(&p, &x) == x.dims()[v], format!("projective Hom, module {modules}"))?;
        }
        modules += 1;
    }

    let mut rows = 0;
    for (name, t) in [("FX-42", None), ("FX-43", Some("P2+S2")), ("FX-A3", Some("P1+P3+S3"))] {
        let a = alg(name);
        let res = match t {
            Some(t) => tilting_resolution(&a, t)?,
            None => TResolution::trivial(&Module::regular(a.clone())).with_split_summand(&m(&a, "P2")),
        };
        let l = ell(&res).map_err(|e| e.to_string())?;
        let mut cands = thin_indecomposables(&a).unwrap_or_default();
        for v in 0..a.num_vertices() {
            cands.push(Module::projective(a.clone(), v));
            cands.push(Module::simple(a.clone(), v));
        }
        for _ in 0..10 {
            cands.push(random_module(&a, &mut rng));
        }
        cands.push(l.module.clone());
        let found = adjunction_check(&l, &res.t1, &cands);
        ensure(!found.is_empty(), format!("{name}: no perpendicular candidates"))?;
        ensure(found.iter().all(|r| r.holds()), format!("{name}: adjunction {found:?}"))?;
        rows += found.len();
    }

    // further successful recollements feeding the K0 check
    for (name, x) in [("FX-A2", "S1"), ("FX-A3", "S3"), ("FX-KRON", "P1")] {
        let a = alg(name);
        if let Ok(Ok(d)) = perpendicular_epi(&m(&a, x), CAP) {
            record(&format!("{name}, perpendicular to {x}"), &d);
        }
    }
    for (name, vs) in [("FX-43", vec![0]), ("FX-A3", vec![2])] {
        let a = alg(name);
        if let Ok((_, Ok(d))) = heredity_check(&a, &vs, CAP) {
            record(&format!("{name}, heredity ideal {vs:?}"), &d);
        }
    }
    let all = RANKS.with(|r| r.borrow().clone());
    ensure(all.len() >= 4, format!("only {} successful recollements", all.len()))?;
    for (label, k) in &all {
        ensure(k.additive(), format!("{label}: ranks {k:?}"))?;
    }
    Ok(format!(
        "200 matrices, {} algebras, {pairs} Euler pairs, {modules} random modules, {rows} adjunction rows, {} recollements additive",
        FIXTURE_NAMES.len(),
        all.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("FX-42 split-summand pipeline", criterion_1),
        ("FX-43 tilting pipeline", criterion_2),
        ("FX-41 negative pipeline", criterion_3),
        ("FX-A3 injective epimorphism", criterion_4),
        ("stratifications", criterion_5),
        ("tilting oracle", criterion_6),
        ("staircase complexes", criterion_7),
        ("property suites", criterion_8),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {} {title}: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {title}: FAIL ({why})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
