use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{build_algebra, fixture, Algebra, DEFAULT_PATH_CAP, FIXTURE_NAMES};
use crate::error::Result;
use crate::homology::{ext_dim, global_dim, is_exceptional, staircase, Dimension, ProjComplex, Verdict};
use crate::linalg::Field;
use crate::module::Module;
use crate::tilting::{check_tilting, ell, recollement_from_tilting, stratify, TResolution};

use super::expr::module_from_expr;

#[derive(Clone, Debug, Serialize)]
pub struct GoldenRow {
    pub fixture: String,
    pub check: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

fn row(fixture: &str, check: &str, expected: String, actual: String) -> GoldenRow {
    GoldenRow {
        fixture: fixture.into(),
        check: check.into(),
        ok: expected == actual,
        expected,
        actual,
    }
}

pub fn fixture_algebra(name: &str, field: Field) -> Result<Arc<Algebra>> {
    Ok(Arc::new(build_algebra(&fixture(name, field)?, DEFAULT_PATH_CAP)?))
}

/// Expected `(dimension, global dimension)` of each bundled fixture.
pub fn expected_basics(name: &str) -> (usize, Dimension) {
    match name {
        "FX-A2" => (3, Dimension::Finite(1)),
        "FX-A3" => (6, Dimension::Finite(1)),
        "FX-KRON" => (4, Dimension::Finite(1)),
        "FX-41" => (9, Dimension::Finite(4)),
        "FX-42" => (7, Dimension::Infinite),
        "FX-43" => (5, Dimension::Finite(2)),
        "FX-CAN222" => (13, Dimension::Finite(2)),
        _ => (0, Dimension::Unknown),
    }
}

/// The `P(2) -> ... -> P(2) -> P(1)` complexes of FX-43 with `m` maps.
pub fn fx43_staircase(a: &Algebra, m: usize) -> Result<ProjComplex> {
    let step = a.word_element(&["alpha", "beta"]).expect("FX-43 path");
    let last = a.word_element(&["beta"]).expect("FX-43 arrow");
    staircase(a, 1, 0, &step, &last, m)
}

fn tilting_resolution(a: &Arc<Algebra>, t: &str, cap: usize) -> Result<TResolution> {
    let t = module_from_expr(t, a)?;
    let cert = check_tilting(&t, cap)?;
    Ok(cert.coresolution.expect("tilting fixture module"))
}

/// Dimension, global dimension and the headline value of every fixture.
pub fn verify_fixtures(cap: usize) -> Result<Vec<GoldenRow>> {
    let mut rows = Vec::new();
    for name in FIXTURE_NAMES {
        let a = fixture_algebra(name, Field::Rationals)?;
        let (dim, gl) = expected_basics(name);
        rows.push(row(name, "dim", dim.to_string(), a.dim().to_string()));
        rows.push(row(name, "gldim", format!("{gl:?}"), format!("{:?}", global_dim(&a, cap))));
        match name {
            "FX-A2" => {
                let e = ext_dim(&Module::simple(a.clone(), 0), &Module::simple(a.clone(), 1), 1);
                rows.push(row(name, "Ext^1(S1, S2)", "1".into(), e.to_string()));
            }
            "FX-A3" => {
                let res = tilting_resolution(&a, "P1+P3+S3", cap)?;
                let d = recollement_from_tilting(&res, cap)?;
                let actual = match d {
                    Ok(d) => format!(
                        "ell dim {}, phi injective {}, ranks {}={}+{}",
                        d.ell.module.dim(),
                        d.phi.is_injective(),
                        d.ranks.a,
                        d.ranks.b,
                        d.ranks.c
                    ),
                    Err(f) => format!("failure: {}", f.hypothesis),
                };
                rows.push(row(name, "T = P1+P3+S3", "ell dim 7, phi injective true, ranks 3=2+1".into(), actual));
            }
            "FX-KRON" | "FX-CAN222" => {
                let t = stratify(&a, None)?;
                let n = if name == "FX-KRON" { 2 } else { 5 };
                let all_dim_one = t.leaves().iter().all(|s| s.dim == 1);
                rows.push(row(
                    name,
                    "stratification leaves",
                    format!("{n} leaves of dim 1"),
                    format!("{} leaves{}", t.leaf_count(), if all_dim_one { " of dim 1" } else { "" }),
                ));
            }
            "FX-41" => {
                let res = tilting_resolution(&a, "P1+P2+P2/P3", cap)?;
                let l = ell(&res)?;
                let ex = is_exceptional(&l.module, cap);
                let out = recollement_from_tilting(&res, cap)?;
                let hyp = match out {
                    Ok(_) => "success".to_string(),
                    Err(f) => f.hypothesis,
                };
                rows.push(row(
                    name,
                    "T = P1+P2+P2/P3",
                    format!("ell exceptional {:?}, failed homological epimorphism", Verdict::Certified(false)),
                    format!("ell exceptional {ex:?}, failed {hyp}"),
                ));
            }
            "FX-42" => {
                let reg = Module::regular(a.clone());
                let res = TResolution::trivial(&reg).with_split_summand(&Module::projective(a.clone(), 1));
                let l = ell(&res)?;
                let pd = match recollement_from_tilting(&res, cap)? {
                    Ok(d) => d.t1_pd_over_c,
                    Err(f) => f.datum.map(|d| d.t1_pd_over_c).unwrap_or(Dimension::Unknown),
                };
                rows.push(row(
                    name,
                    "T = A, T1 = P2",
                    "ell dims [1, 0], pd of T1 over C Infinite".into(),
                    format!("ell dims {:?}, pd of T1 over C {pd:?}", l.module.dims()),
                ));
            }
            "FX-43" => {
                let res = tilting_resolution(&a, "P2+S2", cap)?;
                let actual = match recollement_from_tilting(&res, cap)? {
                    Ok(d) => format!("success, ranks {}={}+{}", d.ranks.a, d.ranks.b, d.ranks.c),
                    Err(f) => format!("failure: {}", f.hypothesis),
                };
                rows.push(row(name, "T = P2+S2", "success, ranks 2=1+1".into(), actual));
                let mut lengths = Vec::new();
                for m in 1..=6 {
                    let c = fx43_staircase(&a, m)?;
                    let min = c.minimize(&a);
                    lengths.push(if min == c { min.length() } else { 0 });
                }
                rows.push(row(
                    name,
                    "staircases stay minimal",
                    "[1, 2, 3, 4, 5, 6]".into(),
                    format!("{lengths:?}"),
                ));
            }
            _ => {}
        }
    }
    Ok(rows)
}
