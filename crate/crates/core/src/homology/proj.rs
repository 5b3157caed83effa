use std::sync::Arc;

use crate::algebra::Algebra;
use crate::linalg::{Matrix, Scalar};
use crate::module::{Module, Morphism};

/// A map between sums of indecomposable projectives `e_{s_j} A -> e_{t_l} A`.
/// `entries[l][j]` lies in `e_{t_l} A e_{s_j}` and acts by left multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjMap {
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub entries: Vec<Vec<Vec<Scalar>>>,
}

impl ProjMap {
    pub fn zero(a: &Algebra, source: &[usize], target: &[usize]) -> ProjMap {
        ProjMap {
            source: source.to_vec(),
            target: target.to_vec(),
            entries: vec![vec![a.zero(); source.len()]; target.len()],
        }
    }

    /// `self` followed by `next`: the algebra matrix product `next * self`.
    pub fn then(&self, next: &ProjMap, a: &Algebra) -> ProjMap {
        let mut out = ProjMap::zero(a, &self.source, &next.target);
        for r in 0..next.target.len() {
            for j in 0..self.source.len() {
                let mut acc = a.zero();
                for l in 0..self.target.len() {
                    let p = a.mul(&next.entries[r][l], &self.entries[l][j]);
                    for (x, y) in acc.iter_mut().zip(p) {
                        *x = &*x + &y;
                    }
                }
                out.entries[r][j] = acc;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().flatten().all(Scalar::is_zero)
    }

    /// Every entry lies in the radical.
    pub fn is_radical(&self, a: &Algebra) -> bool {
        let rad = a.radical_space();
        self.entries.iter().flatten().all(|x| rad.contains(x))
    }

    /// The morphism between the realized modules `projective_sum(source) -> projective_sum(target)`.
    pub fn to_morphism(&self, a: &Arc<Algebra>) -> Morphism {
        let f = a.field();
        let nv = a.num_vertices();
        let tgt_blocks: Vec<Vec<Vec<usize>>> = (0..nv)
            .map(|w| self.target.iter().map(|&t| a.block(t, w)).collect())
            .collect();
        let blocks = (0..nv)
            .map(|w| {
                let cols: usize = tgt_blocks[w].iter().map(Vec::len).sum();
                let mut rows = Vec::new();
                for (j, &s) in self.source.iter().enumerate() {
                    for b in a.block(s, w) {
                        let mut row = vec![f.zero(); cols];
                        let mut off = 0;
                        for (l, tb) in tgt_blocks[w].iter().enumerate() {
                            let img = a.mul(&self.entries[l][j], &a.unit_vector(b));
                            for (c, &k) in tb.iter().enumerate() {
                                row[off + c] = img[k].clone();
                            }
                            off += tb.len();
                        }
                        rows.push(row);
                    }
                }
                Matrix::from_rows(f, cols, rows).expect("rows have target width")
            })
            .collect();
        Morphism { blocks }
    }

    /// Degree-wise Hom into `n`: `Hom(target, n) -> Hom(source, n)`, with `Hom(e_v A, n) = n_v`.
    pub fn hom_into(&self, n: &Module) -> Matrix {
        let f = n.field();
        let d = n.dims();
        let rows: usize = self.target.iter().map(|&t| d[t]).sum();
        let cols: usize = self.source.iter().map(|&s| d[s]).sum();
        let mut out = Matrix::zeros(f, rows, cols);
        let mut r0 = 0;
        for (l, &t) in self.target.iter().enumerate() {
            let mut c0 = 0;
            for (j, &s) in self.source.iter().enumerate() {
                if d[t] > 0 && d[s] > 0 {
                    let block = n.act_block(&self.entries[l][j], t, s);
                    out.set_block(r0, c0, &block);
                }
                c0 += d[s];
            }
            r0 += d[t];
        }
        out
    }

    /// Degree-wise tensor with a left module, given as a right module over the
    /// opposite algebra: `source (x) n -> target (x) n`, with `e_v A (x) n = n_v`.
    pub fn tensor_with(&self, n_op: &Module) -> Matrix {
        let f = n_op.field();
        let d = n_op.dims();
        let rows: usize = self.source.iter().map(|&s| d[s]).sum();
        let cols: usize = self.target.iter().map(|&t| d[t]).sum();
        let mut out = Matrix::zeros(f, rows, cols);
        let mut r0 = 0;
        for (j, &s) in self.source.iter().enumerate() {
            let mut c0 = 0;
            for (l, &t) in self.target.iter().enumerate() {
                if d[t] > 0 && d[s] > 0 {
                    let block = n_op.act_block(&self.entries[l][j], s, t);
                    out.set_block(r0, c0, &block);
                }
                c0 += d[t];
            }
            r0 += d[s];
        }
        out
    }

    /// Hom into the regular module: `Hom(target, A) -> Hom(source, A)` with
    /// `Hom(e_v A, A) = A e_v` and right multiplication.
    pub fn hom_into_regular(&self, a: &Algebra) -> Matrix {
        let f = a.field();
        let n = a.dim();
        let col_basis: Vec<usize> = (0..n).collect();
        let ends_at = |v: usize| -> Vec<usize> {
            col_basis
                .iter()
                .copied()
                .filter(|&b| a.basis()[b].target == v)
                .collect()
        };
        let tb: Vec<Vec<usize>> = self.target.iter().map(|&t| ends_at(t)).collect();
        let sb: Vec<Vec<usize>> = self.source.iter().map(|&s| ends_at(s)).collect();
        let rows: usize = tb.iter().map(Vec::len).sum();
        let cols: usize = sb.iter().map(Vec::len).sum();
        let mut out = Matrix::zeros(f, rows, cols);
        let mut r0 = 0;
        for (l, tl) in tb.iter().enumerate() {
            for (i, &b) in tl.iter().enumerate() {
                let mut c0 = 0;
                for (j, sj) in sb.iter().enumerate() {
                    let img = a.mul(&a.unit_vector(b), &self.entries[l][j]);
                    for (c, &k) in sj.iter().enumerate() {
                        if !img[k].is_zero() {
                            out.set(r0 + i, c0 + c, img[k].clone());
                        }
                    }
                    c0 += sj.len();
                }
            }
            r0 += tl.len();
        }
        out
    }
}

/// Dimension of `Hom(e_v A, A) = A e_v` summed over the vertices.
pub fn regular_hom_dim(a: &Algebra, vertices: &[usize]) -> usize {
    vertices
        .iter()
        .map(|&v| a.basis().iter().filter(|w| w.target == v).count())
        .sum()
}
