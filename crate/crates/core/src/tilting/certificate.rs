use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::homology::{ext_dim, proj_dim, Dimension};
use crate::linalg::{extend_basis, Matrix, Scalar};
use crate::module::{combine, decompose, hom_space, in_add, is_isomorphic, morphism_parts, EndAlgebra, Module, Morphism};

/// A short exact sequence `0 -> A -> t0 -> t1 -> 0` with `A` the regular module.
#[derive(Clone, Debug)]
pub struct TResolution {
    pub t0: Module,
    pub t1: Module,
    pub iota: Morphism,
    pub pi: Morphism,
}

impl TResolution {
    /// Checks that both maps are homomorphisms and the sequence is exact.
    pub fn validate(&self, regular: &Module) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidResolution(m.into()));
        if !self.iota.is_homomorphism(regular, &self.t0) {
            return bad("A -> T0 is not a homomorphism");
        }
        if !self.pi.is_homomorphism(&self.t0, &self.t1) {
            return bad("T0 -> T1 is not a homomorphism");
        }
        if !self.iota.is_injective() {
            return bad("A -> T0 is not injective");
        }
        if !self.pi.is_surjective() {
            return bad("T0 -> T1 is not surjective");
        }
        if !self.iota.then(&self.pi).is_zero() {
            return bad("the composite A -> T1 is not zero");
        }
        if regular.dim() + self.t1.dim() != self.t0.dim() {
            return bad("not exact in the middle");
        }
        Ok(())
    }

    /// The sequence with `t0` and `t1` both enlarged by `x`, mapped identically.
    pub fn with_split_summand(&self, x: &Module) -> TResolution {
        let t0 = self.t0.direct_sum(x);
        let t1 = self.t1.direct_sum(x);
        let a_zero: Vec<Matrix> = self
            .iota
            .blocks
            .iter()
            .zip(x.dims())
            .map(|(b, &d)| Matrix::zeros(x.field(), b.rows(), d))
            .collect();
        let iota = Morphism {
            blocks: self.iota.blocks.iter().zip(&a_zero).map(|(b, z)| b.hstack(z)).collect(),
        };
        let f = x.field();
        let pi = Morphism {
            blocks: (0..x.dims().len())
                .map(|v| {
                    let (r0, c0) = self.pi.blocks[v].shape();
                    let d = x.dims()[v];
                    let mut m = Matrix::zeros(f, r0 + d, c0 + d);
                    m.set_block(0, 0, &self.pi.blocks[v]);
                    m.set_block(r0, c0, &Matrix::identity(f, d));
                    m
                })
                .collect(),
        };
        TResolution { t0, t1, iota, pi }
    }

    /// `0 -> A -> A -> 0 -> 0`.
    pub fn trivial(regular: &Module) -> TResolution {
        TResolution {
            t0: regular.clone(),
            t1: Module::zero(regular.algebra().clone()),
            iota: Morphism::identity(regular),
            pi: Morphism::zero(regular, &Module::zero(regular.algebra().clone())),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TiltingCertificate {
    pub module: Module,
    pub pd: Dimension,
    pub ext1: usize,
    /// Nonisomorphic indecomposable summands of `module`.
    pub pieces: Vec<Module>,
    pub coresolution: Option<TResolution>,
    pub is_tilting: bool,
    pub failure: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TiltingSummary {
    pub pd: Dimension,
    pub ext1: usize,
    pub summands: usize,
    pub t0_dims: Option<Vec<usize>>,
    pub t1_dims: Option<Vec<usize>>,
    pub is_tilting: bool,
    pub failure: Option<String>,
}

impl TiltingCertificate {
    pub fn summary(&self) -> TiltingSummary {
        TiltingSummary {
            pd: self.pd,
            ext1: self.ext1,
            summands: self.pieces.len(),
            t0_dims: self.coresolution.as_ref().map(|r| r.t0.dims().to_vec()),
            t1_dims: self.coresolution.as_ref().map(|r| r.t1.dims().to_vec()),
            is_tilting: self.is_tilting,
            failure: self.failure.clone(),
        }
    }
}

/// Radical maps `x -> y` between indecomposables: all maps when they are not
/// isomorphic, the radical of `End(x)` when `same`.
fn radical_maps(x: &Module, y: &Module, same: bool) -> Result<Vec<Morphism>> {
    if !same {
        return Ok(hom_space(x, y));
    }
    let end = EndAlgebra::new(x);
    let rad = end.raw.radical()?;
    Ok((0..rad.dim())
        .map(|r| end.element(rad.basis().row(r), x))
        .collect())
}

/// Minimal left `add(pieces)`-approximation of the regular module, for pairwise
/// nonisomorphic indecomposable `pieces`. Returns `T0` and `A -> T0`.
pub fn left_approximation(a: &Arc<Algebra>, pieces: &[Module]) -> Result<(Module, Morphism)> {
    let f = a.field();
    let n = a.num_vertices();
    let mut rad: Vec<Vec<Vec<Morphism>>> = Vec::new();
    for (j, x) in pieces.iter().enumerate() {
        let mut row = Vec::new();
        for (i, y) in pieces.iter().enumerate() {
            row.push(radical_maps(x, y, i == j)?);
        }
        rad.push(row);
    }
    let mut copies: Vec<Module> = Vec::new();
    // per vertex, the maps P_v -> copy
    let mut per_vertex: Vec<Vec<(usize, Morphism)>> = vec![Vec::new(); n];
    for v in 0..n {
        for (i, y) in pieces.iter().enumerate() {
            let d = y.dims()[v];
            if d == 0 {
                continue;
            }
            let mut r = Matrix::zeros(f, 0, d);
            for (j, x) in pieces.iter().enumerate() {
                let xv = x.dims()[v];
                if xv == 0 {
                    continue;
                }
                for g in &rad[j][i] {
                    r = r.vstack(&g.blocks[v]);
                }
            }
            let picked = extend_basis(&r.row_space(), &Matrix::identity(f, d));
            for k in 0..picked.rows() {
                let (_, h) = y.map_from_projectives(&[(v, picked.row_vec(k))]);
                per_vertex[v].push((copies.len(), h));
                copies.push(y.clone());
            }
        }
    }
    let t0 = Module::direct_sum_of(a.clone(), &copies);
    let regular = Module::regular(a.clone());
    let off: Vec<Vec<usize>> = {
        let mut acc = vec![0; n];
        copies
            .iter()
            .map(|c| {
                let here = acc.clone();
                for (w, d) in c.dims().iter().enumerate() {
                    acc[w] += d;
                }
                here
            })
            .collect()
    };
    let mut blocks: Vec<Matrix> = (0..n)
        .map(|w| Matrix::zeros(f, regular.dims()[w], t0.dims()[w]))
        .collect();
    for w in 0..n {
        let mut row0 = 0;
        for (v, maps) in per_vertex.iter().enumerate() {
            let rows = a.block(v, w).len();
            for (c, h) in maps {
                blocks[w].set_block(row0, off[*c][w], &h.blocks[w]);
            }
            row0 += rows;
        }
    }
    Ok((t0, Morphism { blocks }))
}

/// Decides whether `t` is tilting; the coresolution is the minimal left
/// `add(t)`-approximation of `A` followed by its cokernel.
pub fn check_tilting(t: &Module, cap: usize) -> Result<TiltingCertificate> {
    let a = t.algebra().clone();
    let pieces: Vec<Module> = decompose(t)?.into_iter().map(|(m, _)| m).collect();
    let pd = proj_dim(t, cap);
    let ext1 = ext_dim(t, t, 1);
    let regular = Module::regular(a.clone());
    let (t0, iota) = left_approximation(&a, &pieces)?;
    let mut failure = None;
    let coresolution = if !iota.is_injective() {
        failure = Some("A -> T0 is not injective".to_string());
        None
    } else {
        let parts = morphism_parts(&regular, &t0, &iota);
        if in_add(&parts.cokernel, &pieces)? {
            Some(TResolution {
                t0,
                t1: parts.cokernel,
                iota,
                pi: parts.cokernel_projection,
            })
        } else {
            failure = Some("cokernel of A -> T0 is not in add(T)".to_string());
            None
        }
    };
    let pd_ok = matches!(pd, Dimension::Finite(d) if d <= 1);
    if !pd_ok {
        failure = Some(format!("projective dimension is {pd:?}"));
    } else if ext1 != 0 {
        failure = Some(format!("Ext^1(T, T) has dimension {ext1}"));
    }
    let is_tilting = pd_ok && ext1 == 0 && coresolution.is_some();
    Ok(TiltingCertificate {
        module: t.clone(),
        pd,
        ext1,
        pieces,
        coresolution,
        is_tilting,
        failure,
    })
}

/// Finds `A -> t0` injective with cokernel isomorphic to `t1` by a seeded search
/// among combinations of homomorphisms.
pub fn t_resolution_with(a: &Arc<Algebra>, t0: &Module, t1: &Module, seed: u64) -> Result<TResolution> {
    let regular = Module::regular(a.clone());
    if regular.dim() + t1.dim() != t0.dim() {
        return Err(Error::InvalidResolution("dimensions do not add up".into()));
    }
    let homs = hom_space(&regular, t0);
    let f = a.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..64 {
        let coeffs: Vec<Scalar> = homs.iter().map(|_| f.from_i64(rng.gen_range(-9..=9))).collect();
        let iota = combine(&homs, &coeffs, Morphism::zero(&regular, t0));
        if !iota.is_injective() {
            continue;
        }
        let parts = morphism_parts(&regular, t0, &iota);
        if is_isomorphic(&parts.cokernel, t1)? {
            let res = TResolution {
                t0: t0.clone(),
                t1: parts.cokernel,
                iota,
                pi: parts.cokernel_projection,
            };
            return Ok(res);
        }
    }
    Err(Error::InvalidResolution(
        "no injective map A -> T0 with the requested cokernel was found".into(),
    ))
}
