use crate::error::{Error, Result};
use crate::homology::{ext_dim, proj_dim, Dimension};
use crate::linalg::{extend_basis, Matrix};
use crate::module::{decompose, hom_space, Module, Morphism, Submodule};

/// `0 -> m -> module -> e^n -> 0` whose connecting classes span `Ext^1(e, m)`.
#[derive(Clone, Debug)]
pub struct UniversalExtension {
    pub module: Module,
    pub n: usize,
    pub inclusion: Morphism,
    pub projection: Morphism,
    pub quotient: Module,
}

/// Built as a pushout along the syzygy `0 -> Ω -> P -> e -> 0`: the maps
/// `Ω -> m` modulo restrictions of maps `P -> m` represent `Ext^1(e, m)`.
pub fn universal_extension(e: &Module, m: &Module) -> Result<UniversalExtension> {
    let a = m.algebra().clone();
    let f = m.field();
    let (_, p, eps) = e.projective_cover();
    let (omega, incl) = p.sub(&eps.kernel())?;
    let homs = hom_space(&omega, m);
    let width: usize = omega.dims().iter().zip(m.dims()).map(|(x, y)| x * y).sum();
    let flat = |h: &Morphism| h.flatten();
    let restricted: Vec<Vec<_>> = hom_space(&p, m).iter().map(|g| flat(&incl.then(g))).collect();
    let start = Matrix::from_rows(f, width, restricted)?;
    let cand = Matrix::from_rows(f, width, homs.iter().map(flat).collect())?;
    let picked = extend_basis(&start, &cand);
    let reps: Vec<Morphism> = (0..picked.rows())
        .map(|r| Morphism::unflatten(&omega, m, picked.row(r)))
        .collect();
    let n = reps.len();
    if n == 0 {
        return Ok(UniversalExtension {
            module: m.clone(),
            n: 0,
            inclusion: Morphism::identity(m),
            projection: Morphism::zero(m, &Module::zero(a.clone())),
            quotient: Module::zero(a),
        });
    }
    // X = m + P^n; U = image of Ω^n under [f_i | -incl in copy i]
    let x = m.direct_sum(&p.power(n));
    let nv = a.num_vertices();
    let mut spans = Vec::with_capacity(nv);
    for w in 0..nv {
        let (od, md, pd) = (omega.dims()[w], m.dims()[w], p.dims()[w]);
        let mut rows = Matrix::zeros(f, n * od, md + n * pd);
        for (i, h) in reps.iter().enumerate() {
            rows.set_block(i * od, 0, &h.blocks[w]);
            rows.set_block(i * od, md + i * pd, &incl.blocks[w].neg());
        }
        spans.push(rows.row_space());
    }
    let (module, proj) = x.quotient(&Submodule { spans })?;
    let into_x = Morphism {
        blocks: (0..nv)
            .map(|w| {
                let md = m.dims()[w];
                Matrix::identity(f, md).hstack(&Matrix::zeros(f, md, n * p.dims()[w]))
            })
            .collect(),
    };
    let inclusion = into_x.then(&proj);
    let quotient = e.power(n);
    let to_quotient = Morphism {
        blocks: (0..nv)
            .map(|w| {
                let (md, pd, ed) = (m.dims()[w], p.dims()[w], e.dims()[w]);
                let mut b = Matrix::zeros(f, md + n * pd, n * ed);
                for i in 0..n {
                    b.set_block(md + i * pd, i * ed, &eps.blocks[w]);
                }
                b
            })
            .collect(),
    };
    let projection = proj
        .factor_through(&to_quotient)
        .ok_or_else(|| Error::Input("extension does not factor".into()))?;
    Ok(UniversalExtension {
        module,
        n,
        inclusion,
        projection,
        quotient,
    })
}

#[derive(Clone, Debug)]
pub struct Bongartz {
    /// `m + M'`.
    pub tilting: Module,
    /// One copy of each indecomposable summand of `tilting`.
    pub basic: Module,
    /// The middle term `M'` of `0 -> A -> M' -> m^n -> 0`.
    pub complement: Module,
    pub extension: UniversalExtension,
}

/// One copy of each indecomposable summand.
pub fn basic_part(m: &Module) -> Result<Module> {
    let pieces: Vec<Module> = decompose(m)?.into_iter().map(|(x, _)| x).collect();
    Ok(Module::direct_sum_of(m.algebra().clone(), &pieces))
}

pub fn bongartz_complement(m: &Module, cap: usize) -> Result<Bongartz> {
    match proj_dim(m, cap) {
        Dimension::Finite(d) if d <= 1 => {}
        other => return Err(Error::NotPartialTilting(format!("projective dimension is {other:?}"))),
    }
    let e1 = ext_dim(m, m, 1);
    if e1 != 0 {
        return Err(Error::NotPartialTilting(format!("Ext^1(M, M) has dimension {e1}")));
    }
    let regular = Module::regular(m.algebra().clone());
    let extension = universal_extension(m, &regular)?;
    let complement = extension.module.clone();
    let tilting = m.direct_sum(&complement);
    let basic = basic_part(&tilting)?;
    Ok(Bongartz {
        tilting,
        basic,
        complement,
        extension,
    })
}
