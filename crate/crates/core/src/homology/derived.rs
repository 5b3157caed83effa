use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Algebra, AlgebraMap};
use crate::module::Module;

use super::resolution::{minimal_projective_resolution, resolve_to, Resolution, ResolutionStatus};

pub const DEFAULT_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value")]
pub enum Dimension {
    Finite(usize),
    Infinite,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value")]
pub enum Verdict {
    Certified(bool),
    Unknown,
}

impl Verdict {
    pub fn is_true(self) -> bool {
        self == Verdict::Certified(true)
    }
}

/// Dimensions of `Ext^k(m, n)` for `k = 0..=upto`, read off a resolution
/// computed through degree `upto + 1`.
pub fn ext_dims_from(res: &Resolution, n: &Module, upto: usize) -> Vec<usize> {
    let a = n.algebra();
    let d = n.dims();
    let hom = |k: usize| -> usize { res.term(k).iter().map(|&v| d[v]).sum() };
    let rank = |k: usize| -> usize {
        if k == 0 {
            0
        } else {
            res.differential(k, a).hom_into(n).rank()
        }
    };
    let ranks: Vec<usize> = (0..=upto + 1).map(rank).collect();
    (0..=upto).map(|k| hom(k) - ranks[k] - ranks[k + 1]).collect()
}

pub fn ext_dims(m: &Module, n: &Module, upto: usize) -> Vec<usize> {
    ext_dims_from(&resolve_to(m, upto + 1), n, upto)
}

pub fn ext_dim(m: &Module, n: &Module, k: usize) -> usize {
    ext_dims(m, n, k)[k]
}

/// Dimensions of `Tor_k(m, n)` for `k = 0..=upto`; `n_op` is the left module
/// as a right module over the opposite algebra.
pub fn tor_dims_from(res: &Resolution, n_op: &Module, upto: usize) -> Vec<usize> {
    let a = res.syzygies[0].algebra();
    let d = n_op.dims();
    let size = |k: usize| -> usize { res.term(k).iter().map(|&v| d[v]).sum() };
    let rank = |k: usize| -> usize {
        if k == 0 {
            0
        } else {
            res.differential(k, a).tensor_with(n_op).rank()
        }
    };
    let ranks: Vec<usize> = (0..=upto + 1).map(rank).collect();
    (0..=upto).map(|k| size(k) - ranks[k] - ranks[k + 1]).collect()
}

pub fn tor_dims(m: &Module, n_op: &Module, upto: usize) -> Vec<usize> {
    tor_dims_from(&resolve_to(m, upto + 1), n_op, upto)
}

pub fn tor_dim(m: &Module, n_op: &Module, k: usize) -> usize {
    tor_dims(m, n_op, k)[k]
}

/// `dim (m (x)_A n)`.
pub fn tensor_dim(m: &Module, n_op: &Module) -> usize {
    tor_dims(m, n_op, 0)[0]
}

/// Total and per-degree dimensions of `Tor_*(m, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorResult {
    pub total: usize,
    pub per_degree: Vec<usize>,
}

pub fn tor_table(m: &Module, n_op: &Module, upto: usize) -> TensorResult {
    let per_degree = tor_dims(m, n_op, upto);
    TensorResult {
        total: per_degree.iter().sum(),
        per_degree,
    }
}

pub fn proj_dim(m: &Module, cap: usize) -> Dimension {
    dimension_of(&minimal_projective_resolution(m, cap))
}

pub fn dimension_of(res: &Resolution) -> Dimension {
    match res.status {
        ResolutionStatus::Terminated(d) => Dimension::Finite(d),
        ResolutionStatus::Periodic { .. } => Dimension::Infinite,
        ResolutionStatus::Truncated(_) => Dimension::Unknown,
    }
}

/// Supremum of projective dimensions of the simple modules.
pub fn global_dim(a: &Arc<Algebra>, cap: usize) -> Dimension {
    let classes = a.projective_classes();
    let dims: Vec<Dimension> = (0..a.num_vertices())
        .filter(|&v| classes[v] == v)
        .map(|v| proj_dim(&Module::simple(a.clone(), v), cap))
        .collect();
    combine_dimensions(&dims)
}

pub fn combine_dimensions(dims: &[Dimension]) -> Dimension {
    if dims.contains(&Dimension::Infinite) {
        return Dimension::Infinite;
    }
    if dims.contains(&Dimension::Unknown) {
        return Dimension::Unknown;
    }
    Dimension::Finite(
        dims.iter()
            .map(|d| match d {
                Dimension::Finite(k) => *k,
                _ => 0,
            })
            .max()
            .unwrap_or(0),
    )
}

/// `Ext^k(m, m) = 0` for all `k >= 1`.
pub fn is_exceptional(m: &Module, cap: usize) -> Verdict {
    match proj_dim(m, cap) {
        Dimension::Finite(d) => {
            let e = ext_dims(m, m, d);
            Verdict::Certified(e[1..].iter().all(|&x| x == 0))
        }
        _ => {
            let e = ext_dims(m, m, cap);
            if e[1..].iter().any(|&x| x > 0) {
                Verdict::Certified(false)
            } else {
                Verdict::Unknown
            }
        }
    }
}

/// `B` as a right `A`-module and, over the opposite algebra, as a left `A`-module.
pub fn bimodule_sides(phi: &AlgebraMap) -> (Module, Module) {
    let right = Module::regular(phi.target.clone()).restrict(phi);
    let op = phi.opposite();
    let left = Module::regular(op.target.clone()).restrict(&op);
    (right, left)
}

/// Multiplication `B (x)_A B -> B` is bijective.
pub fn is_ring_epi(phi: &AlgebraMap) -> bool {
    let (right, left) = bimodule_sides(phi);
    tensor_dim(&right, &left) == phi.target.dim()
}

/// Ring epimorphism plus vanishing of `Tor_k(B, B)` for `k >= 1`. Certified when the
/// resolution of `B_A` terminates or repeats within `cap`; a nonzero
/// `Ext^k_A(B, B)` also refutes the property, since `B_B` is projective.
pub fn is_homological_epi(phi: &AlgebraMap, cap: usize) -> Verdict {
    if !phi.is_algebra_map() {
        return Verdict::Certified(false);
    }
    if phi.target.dim() == 0 {
        return Verdict::Certified(true);
    }
    let (right, left) = bimodule_sides(phi);
    let horizon = match minimal_projective_resolution(&right, cap).status {
        ResolutionStatus::Terminated(d) => Some(d),
        ResolutionStatus::Periodic { at, .. } => Some(at),
        ResolutionStatus::Truncated(_) => None,
    };
    let upto = horizon.unwrap_or(cap).max(1);
    let res = resolve_to(&right, upto + 1);
    let tor = tor_dims_from(&res, &left, upto);
    if tor[0] != phi.target.dim() || tor[1..].iter().any(|&x| x > 0) {
        return Verdict::Certified(false);
    }
    if ext_dims_from(&res, &right, upto)[1..].iter().any(|&x| x > 0) {
        return Verdict::Certified(false);
    }
    match horizon {
        Some(_) => Verdict::Certified(true),
        None => Verdict::Unknown,
    }
}
