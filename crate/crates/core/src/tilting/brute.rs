use std::sync::Arc;

use rand::Rng;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::homology::{ext_dim, is_exceptional};
use crate::linalg::{Matrix, Scalar};
use crate::module::{count_nonisomorphic_summands, hom_space, is_indecomposable, Module, Submodule};

use super::certificate::check_tilting;
use super::ell::{in_perpendicular, Ell};

/// Indecomposable modules with every vertex space of dimension at most one and
/// every arrow between supported vertices acting by `1`.
pub fn thin_indecomposables(a: &Arc<Algebra>) -> Result<Vec<Module>> {
    let n = a.num_vertices();
    let f = a.field();
    let mut out = Vec::new();
    for mask in 1u64..(1 << n) {
        let dims: Vec<usize> = (0..n).map(|v| ((mask >> v) & 1) as usize).collect();
        let maps = a
            .generators()
            .iter()
            .map(|g| {
                let (r, c) = (dims[g.source], dims[g.target]);
                if r == 1 && c == 1 {
                    Matrix::identity(f, 1)
                } else {
                    Matrix::zeros(f, r, c)
                }
            })
            .collect();
        if let Ok(m) = Module::new(a.clone(), dims, maps) {
            if is_indecomposable(&m)? {
                out.push(m);
            }
        }
    }
    Ok(out)
}

fn kron(a: &Arc<Algebra>, dims: [usize; 2], x: Matrix, y: Matrix) -> Result<Module> {
    Module::new(a.clone(), dims.to_vec(), vec![x, y])
}

/// Indecomposables of the Kronecker algebra `1 => 2` of dimension vectors
/// `(n, n+1)`, `(n+1, n)` and `(n, n)` for `n <= max_n`.
pub fn kronecker_sample(a: &Arc<Algebra>, max_n: usize) -> Result<Vec<Module>> {
    let f = a.field();
    let mut out = Vec::new();
    for n in 0..=max_n {
        let id = Matrix::identity(f, n);
        let col = Matrix::zeros(f, n, 1);
        let row = Matrix::zeros(f, 1, n);
        out.push(kron(a, [n, n + 1], id.hstack(&col), col.hstack(&id))?);
        out.push(kron(a, [n + 1, n], id.vstack(&row), row.vstack(&id))?);
        if n == 0 {
            continue;
        }
        for lambda in [0, 1] {
            let mut j = Matrix::identity(f, n).scale(&f.from_i64(lambda));
            for i in 0..n - 1 {
                j.set(i, i + 1, f.one());
            }
            out.push(kron(a, [n, n], id.clone(), j)?);
        }
        let mut nil = Matrix::zeros(f, n, n);
        for i in 0..n - 1 {
            nil.set(i, i + 1, f.one());
        }
        out.push(kron(a, [n, n], nil, id.clone())?);
    }
    Ok(out)
}

/// `<d, e> = Σ d_i e_i - Σ_{arrows i -> j} d_i e_j`.
pub fn euler_form(a: &Algebra, d: &[usize], e: &[usize]) -> i64 {
    let diag: i64 = d.iter().zip(e).map(|(x, y)| (x * y) as i64).sum();
    let arrows: i64 = a
        .generators()
        .iter()
        .map(|g| (d[g.source] * e[g.target]) as i64)
        .sum();
    diag - arrows
}

/// A quotient of a sum of indecomposable projectives by a random submodule.
pub fn random_module(a: &Arc<Algebra>, rng: &mut impl Rng) -> Module {
    let n = a.num_vertices();
    let f = a.field();
    let k = rng.gen_range(1..=3);
    let vs: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
    let p = Module::projective_sum(a.clone(), &vs);
    let mut gens = Vec::new();
    for _ in 0..rng.gen_range(0..=2) {
        let v = rng.gen_range(0..n);
        if p.dims()[v] == 0 {
            continue;
        }
        let x: Vec<Scalar> = (0..p.dims()[v]).map(|_| f.from_i64(rng.gen_range(-2..=2))).collect();
        gens.push((v, x));
    }
    let u: Submodule = p.generated(&gens);
    p.quotient(&u).expect("generated submodule").0
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleRow {
    pub members: Vec<usize>,
    pub summands: usize,
    pub full_rank: bool,
    pub tilting: bool,
    pub perpendicular_trivial: bool,
}

impl OracleRow {
    pub fn consistent(&self) -> bool {
        self.full_rank == self.tilting && self.tilting == self.perpendicular_trivial
    }
}

/// Every multiplicity-free exceptional sum of `indecomposables`, with the three
/// predicates: `n` summands, tilting, and no indecomposable in the perpendicular category.
pub fn tilting_oracle(a: &Arc<Algebra>, indecomposables: &[Module], cap: usize) -> Result<Vec<OracleRow>> {
    let n = a.k0_rank();
    let mut rows = Vec::new();
    for mask in 1u64..(1 << indecomposables.len()) {
        let members: Vec<usize> = (0..indecomposables.len()).filter(|i| (mask >> i) & 1 == 1).collect();
        let parts: Vec<Module> = members.iter().map(|&i| indecomposables[i].clone()).collect();
        let t = Module::direct_sum_of(a.clone(), &parts);
        if !is_exceptional(&t, cap).is_true() {
            continue;
        }
        let summands = count_nonisomorphic_summands(&t)?;
        let tilting = check_tilting(&t, cap)?.is_tilting;
        let perpendicular_trivial = !indecomposables.iter().any(|m| in_perpendicular(&t, m));
        rows.push(OracleRow {
            members,
            summands,
            full_rank: summands == n,
            tilting,
            perpendicular_trivial,
        });
    }
    Ok(rows)
}

#[derive(Clone, Debug, Serialize)]
pub struct AdjunctionRow {
    pub module_dims: Vec<usize>,
    pub hom_from_ell: usize,
    pub hom_from_a: usize,
    pub injective: bool,
}

impl AdjunctionRow {
    pub fn holds(&self) -> bool {
        self.hom_from_ell == self.hom_from_a && self.injective
    }
}

/// For each candidate `N` in the perpendicular category of `t1`, compares
/// `Hom(ℓ(A), N)` with `Hom(A, N)` through composition with the unit.
pub fn adjunction_check(ell: &Ell, t1: &Module, candidates: &[Module]) -> Vec<AdjunctionRow> {
    let a = ell.module.algebra().clone();
    let regular = Module::regular(a);
    candidates
        .iter()
        .filter(|n| in_perpendicular(t1, n))
        .map(|n| {
            let homs = hom_space(&ell.module, n);
            let f = n.field();
            let width: usize = regular.dims().iter().zip(n.dims()).map(|(x, y)| x * y).sum();
            let images: Vec<Vec<Scalar>> = homs.iter().map(|h| ell.unit.then(h).flatten()).collect();
            let rank = Matrix::from_rows(f, width, images).expect("flattened maps").rank();
            AdjunctionRow {
                module_dims: n.dims().to_vec(),
                hom_from_ell: homs.len(),
                hom_from_a: hom_space(&regular, n).len(),
                injective: rank == homs.len(),
            }
        })
        .collect()
}

/// `Σ (-1)^k dim Ext^k(m, n)` up to degree `upto`.
pub fn ext_euler_characteristic(m: &Module, n: &Module, upto: usize) -> i64 {
    (0..=upto)
        .map(|k| {
            let d = ext_dim(m, n, k) as i64;
            if k % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .sum()
}
