use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Algebra, AlgebraMap, Signature};
use crate::error::{Error, Result};
use crate::homology::{ext_dim, global_dim, is_exceptional, is_homological_epi, proj_dim, Dimension, Verdict};
use crate::linalg::{Matrix, Scalar};
use crate::module::{decompose, hom_dim, trace, EndAlgebra, Module, Morphism};

use super::certificate::TResolution;
use super::extension::bongartz_complement;

/// `ℓ(A) = T0 / τ_{T1}(T0)` with the unit `A -> ℓ(A)`.
#[derive(Clone, Debug)]
pub struct Ell {
    pub module: Module,
    pub unit: Morphism,
    pub projection: Morphism,
    pub trace_dim: usize,
    pub hom_from_t1: usize,
    pub ext1_from_t1: usize,
}

pub fn ell(res: &TResolution) -> Result<Ell> {
    let regular = Module::regular(res.t0.algebra().clone());
    res.validate(&regular)?;
    Ok(ell_from(&res.t0, &res.iota, &res.t1))
}

/// `t0 / τ_x(t0)` with the composite `A -> t0 -> quotient`.
pub fn ell_from(t0: &Module, iota: &Morphism, x: &Module) -> Ell {
    let tr = trace(x, t0);
    let (module, projection) = t0.quotient(&tr).expect("trace is a submodule");
    let unit = iota.then(&projection);
    Ell {
        hom_from_t1: hom_dim(x, &module),
        ext1_from_t1: ext_dim(x, &module, 1),
        trace_dim: tr.dim(),
        module,
        unit,
        projection,
    }
}

/// `B = End(ℓ(A))` and `φ: A -> B`, with `φ(a)` the endomorphism sending the
/// image `g` of `1` to `g·a`.
#[derive(Clone, Debug)]
pub struct InducedEpi {
    pub b: Arc<Algebra>,
    pub phi: AlgebraMap,
    /// Each basis element of `B` as an endomorphism of `ℓ(A)`.
    pub b_elements: Vec<Morphism>,
    pub generator: Vec<Scalar>,
}

pub fn induced_epi(a: &Arc<Algebra>, ell: &Ell) -> Result<InducedEpi> {
    let f = a.field();
    let l = &ell.module;
    let end = EndAlgebra::new(l);
    let (b, elems) = end.normalized(l)?;
    let b = Arc::new(b);
    // image of 1 in ℓ(A), in whole-module coordinates
    let mut g = Vec::with_capacity(l.dim());
    for v in 0..a.num_vertices() {
        let before: usize = (0..v).map(|u| a.block(u, v).len()).sum();
        let pos = Module::projective_position(a, a.idempotent_index(v));
        g.extend(ell.unit.blocks[v].row(before + pos).iter().cloned());
    }
    let gm = Matrix::row_vector(f, g.clone());
    let eval_rows: Vec<Vec<Scalar>> = elems
        .iter()
        .map(|h| gm.mul(&h.full_matrix(f)).row_vec(0))
        .collect();
    let eval = Matrix::from_rows(f, l.dim(), eval_rows)?;
    let mut images = Vec::with_capacity(a.dim());
    for k in 0..a.dim() {
        let target = gm.mul(&l.act(&a.unit_vector(k)));
        let y = eval
            .solve_left(&target)?
            .ok_or_else(|| Error::Input("ℓ(A) is not generated by the image of 1".into()))?;
        images.push(y.row_vec(0));
    }
    let phi = AlgebraMap {
        source: a.clone(),
        target: b.clone(),
        images,
    };
    Ok(InducedEpi {
        b,
        phi,
        b_elements: elems,
        generator: g,
    })
}

/// Sufficient test first (finite global dimension and exceptional `ℓ(A)`), then
/// the ring-epimorphism and Tor test.
pub fn epi_verdict(a: &Arc<Algebra>, ell: &Module, phi: &AlgebraMap, cap: usize) -> Verdict {
    if let Dimension::Finite(_) = global_dim(a, cap) {
        if is_exceptional(ell, cap).is_true() {
            return Verdict::Certified(true);
        }
    }
    is_homological_epi(phi, cap)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct K0Ranks {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl K0Ranks {
    pub fn additive(&self) -> bool {
        self.a == self.b + self.c
    }
}

#[derive(Clone, Debug)]
pub struct RecollementDatum {
    pub a: Arc<Algebra>,
    pub b: Arc<Algebra>,
    pub phi: AlgebraMap,
    pub c: Arc<Algebra>,
    pub t1: Module,
    pub ell: Ell,
    pub homological_epi: Verdict,
    pub t1_pd_over_c: Dimension,
    pub ranks: K0Ranks,
}

#[derive(Clone, Debug, Serialize)]
pub struct RecollementSummary {
    pub ell_dims: Vec<usize>,
    pub ell_dim: usize,
    pub b: Signature,
    pub b_radical_dim: usize,
    pub c: Signature,
    pub c_radical_dim: usize,
    pub phi_unital: bool,
    pub phi_multiplicative: bool,
    pub phi_injective: bool,
    pub homological_epi: Verdict,
    pub t1_pd_over_c: Dimension,
    pub ranks: K0Ranks,
}

impl RecollementDatum {
    pub fn summary(&self) -> RecollementSummary {
        RecollementSummary {
            ell_dims: self.ell.module.dims().to_vec(),
            ell_dim: self.ell.module.dim(),
            b: self.b.signature(),
            b_radical_dim: self.b.radical_dim(),
            c: self.c.signature(),
            c_radical_dim: self.c.radical_dim(),
            phi_unital: self.phi.is_unital(),
            phi_multiplicative: self.phi.is_multiplicative(),
            phi_injective: self.phi.is_injective(),
            homological_epi: self.homological_epi,
            t1_pd_over_c: self.t1_pd_over_c,
            ranks: self.ranks,
        }
    }
}

#[derive(Clone, Debug)]
pub struct FailureReport {
    pub hypothesis: String,
    pub detail: String,
    pub datum: Option<Box<RecollementDatum>>,
}

pub type RecollementOutcome = std::result::Result<RecollementDatum, FailureReport>;

/// `T1` as a right module over `C^op` for `C = End(T1)`, with `C` itself.
pub fn t1_over_c(t1: &Module) -> Result<(Arc<Algebra>, Module)> {
    let end = EndAlgebra::new(t1);
    let (c, elems) = end.normalized(t1)?;
    let c = Arc::new(c);
    let cop = Arc::new(c.opposite());
    let f = t1.field();
    let (m, _) = Module::from_action(cop, |k| elems[k].full_matrix(f));
    Ok((c, m))
}

fn assemble(a: &Arc<Algebra>, ell: Ell, t1: &Module, cap: usize) -> Result<RecollementOutcome> {
    let epi = induced_epi(a, &ell)?;
    let verdict = epi_verdict(a, &ell.module, &epi.phi, cap);
    let (c, over) = t1_over_c(t1)?;
    let pd = proj_dim(&over, cap);
    let ranks = K0Ranks {
        a: a.k0_rank(),
        b: epi.b.k0_rank(),
        c: c.k0_rank(),
    };
    let datum = RecollementDatum {
        a: a.clone(),
        b: epi.b,
        phi: epi.phi,
        c,
        t1: t1.clone(),
        ell,
        homological_epi: verdict,
        t1_pd_over_c: pd,
        ranks,
    };
    let fail = |hypothesis: &str, detail: String, datum: RecollementDatum| {
        Ok(Err(FailureReport {
            hypothesis: hypothesis.into(),
            detail,
            datum: Some(Box::new(datum)),
        }))
    };
    if !datum.phi.is_algebra_map() {
        return fail("algebra map", "φ is not unital and multiplicative".into(), datum);
    }
    match verdict {
        Verdict::Certified(true) => {}
        Verdict::Certified(false) => {
            return fail("homological epimorphism", "φ: A -> B is not a homological epimorphism".into(), datum)
        }
        Verdict::Unknown => {
            return fail("homological epimorphism", format!("undecided within cap {cap}"), datum)
        }
    }
    if !matches!(pd, Dimension::Finite(_)) {
        return fail(
            "finite projective dimension of T1 over C",
            format!("projective dimension is {pd:?}"),
            datum,
        );
    }
    if !ranks.additive() {
        return fail(
            "K0 additivity",
            format!("{} != {} + {}", ranks.a, ranks.b, ranks.c),
            datum,
        );
    }
    Ok(Ok(datum))
}

/// The recollement data of a tilting module with a chosen `T`-resolution of `A`.
pub fn recollement_from_tilting(res: &TResolution, cap: usize) -> Result<RecollementOutcome> {
    let a = res.t0.algebra().clone();
    let l = ell(res)?;
    assemble(&a, l, &res.t1, cap)
}

/// For hereditary `A` and exceptional multiplicity-free `x`: the Bongartz
/// sequence `0 -> A -> M' -> x^n -> 0`, `ℓ(A) = M' / τ_x(M')` and `C = End(x)`.
pub fn perpendicular_epi(x: &Module, cap: usize) -> Result<RecollementOutcome> {
    let a = x.algebra().clone();
    match global_dim(&a, cap) {
        Dimension::Finite(d) if d <= 1 => {}
        _ => return Err(Error::NotHereditary),
    }
    if !is_exceptional(x, cap).is_true() {
        return Err(Error::NotExceptional);
    }
    if decompose(x)?.iter().any(|(_, k)| *k > 1) {
        return Err(Error::Input("the module has repeated summands".into()));
    }
    let bong = bongartz_complement(x, cap)?;
    let ext = &bong.extension;
    let l = ell_from(&ext.module, &ext.inclusion, x);
    assemble(&a, l, x, cap)
}

/// `ℓ(A)` for the heredity ideal check: `T = A` with `0 -> A -> A + eA -> eA -> 0`.
pub(crate) fn idempotent_recollement(a: &Arc<Algebra>, vertices: &[usize], cap: usize) -> Result<RecollementOutcome> {
    let regular = Module::regular(a.clone());
    let ea = Module::projective_sum(a.clone(), vertices);
    let res = TResolution::trivial(&regular).with_split_summand(&ea);
    recollement_from_tilting(&res, cap)
}

/// `Hom(T1, N)` and `Ext^1(T1, N)` both vanish.
pub fn in_perpendicular(t1: &Module, n: &Module) -> bool {
    hom_dim(t1, n) == 0 && ext_dim(t1, n, 1) == 0
}

