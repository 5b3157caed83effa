use crate::linalg::{Matrix, Scalar};

use super::rep::{Module, Morphism, Submodule};

/// A basis of `Hom_A(m, n)`.
pub fn hom_space(m: &Module, n: &Module) -> Vec<Morphism> {
    let f = m.field();
    let nv = m.dims().len();
    let md = m.dims();
    let nd = n.dims();
    let mut off = Vec::with_capacity(nv);
    let mut unknowns = 0;
    for v in 0..nv {
        off.push(unknowns);
        unknowns += md[v] * nd[v];
    }
    if unknowns == 0 {
        return vec![];
    }
    let gens = m.algebra().generators();
    let eqs: usize = gens.iter().map(|g| md[g.source] * nd[g.target]).sum();
    let mut sys = Matrix::zeros(f, eqs, unknowns);
    let mut row = 0;
    for (gi, g) in gens.iter().enumerate() {
        let (s, t) = (g.source, g.target);
        let mg = &m.maps()[gi];
        let ng = &n.maps()[gi];
        // (M_g F_t - F_s N_g)[i, j] = 0
        for i in 0..md[s] {
            for j in 0..nd[t] {
                for k in 0..md[t] {
                    let c = mg.get(i, k);
                    if !c.is_zero() {
                        let col = off[t] + k * nd[t] + j;
                        let v = sys.get(row, col) + c;
                        sys.set(row, col, v);
                    }
                }
                for k in 0..nd[s] {
                    let c = ng.get(k, j);
                    if !c.is_zero() {
                        let col = off[s] + i * nd[s] + k;
                        let v = sys.get(row, col) - c;
                        sys.set(row, col, v);
                    }
                }
                row += 1;
            }
        }
    }
    let ker = sys.kernel_basis();
    (0..ker.cols())
        .map(|c| {
            let x = ker.col_vec(c);
            Morphism {
                blocks: (0..nv)
                    .map(|v| {
                        let data = x[off[v]..off[v] + md[v] * nd[v]].to_vec();
                        Matrix::from_vec(f, md[v], nd[v], data).expect("block shape")
                    })
                    .collect(),
            }
        })
        .collect()
}

pub fn hom_dim(m: &Module, n: &Module) -> usize {
    hom_space(m, n).len()
}

/// Linear combination of morphisms.
pub fn combine(basis: &[Morphism], coeffs: &[Scalar], zero: Morphism) -> Morphism {
    basis
        .iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .fold(zero, |acc, (h, c)| acc.add(&h.scale(c)))
}

/// Trace of `x` in `m`: the sum of the images of all maps `x -> m`.
pub fn trace(x: &Module, m: &Module) -> Submodule {
    let f = m.field();
    let mut spans: Vec<Matrix> = m.dims().iter().map(|&d| Matrix::zeros(f, 0, d)).collect();
    for h in hom_space(x, m) {
        for (v, b) in h.blocks.iter().enumerate() {
            spans[v] = spans[v].vstack(b);
        }
    }
    Submodule {
        spans: spans.iter().map(Matrix::row_space).collect(),
    }
}

/// `m / tr_x(m)` with the projection.
pub fn quotient_by_trace(m: &Module, x: &Module) -> (Module, Morphism) {
    m.quotient(&trace(x, m)).expect("trace is a submodule")
}
