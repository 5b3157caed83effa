use std::sync::Arc;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::module::Module;

use super::proj::{regular_hom_dim, ProjMap};

/// A bounded cochain complex of projectives; `terms[i]` sits in degree `low + i`
/// and `differentials[i]` maps `terms[i] -> terms[i + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjComplex {
    pub low: i64,
    pub terms: Vec<Vec<usize>>,
    pub differentials: Vec<ProjMap>,
}

impl ProjComplex {
    pub fn new(a: &Algebra, low: i64, terms: Vec<Vec<usize>>, differentials: Vec<ProjMap>) -> Result<ProjComplex> {
        if differentials.len() + 1 != terms.len().max(1) {
            return Err(Error::Shape(format!(
                "{} terms need {} differentials",
                terms.len(),
                terms.len().saturating_sub(1)
            )));
        }
        for (i, d) in differentials.iter().enumerate() {
            if d.source != terms[i] || d.target != terms[i + 1] {
                return Err(Error::Shape(format!("differential {i} does not match its terms")));
            }
            for (l, row) in d.entries.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    if x.len() != a.dim() {
                        return Err(Error::Shape("entry has wrong length".into()));
                    }
                    let ok = x.iter().enumerate().all(|(b, c)| {
                        c.is_zero() || (a.basis()[b].source == d.target[l] && a.basis()[b].target == d.source[j])
                    });
                    if !ok {
                        return Err(Error::Shape(format!("entry ({l}, {j}) of differential {i} leaves its block")));
                    }
                }
            }
        }
        let c = ProjComplex {
            low,
            terms,
            differentials,
        };
        if !c.is_complex(a) {
            return Err(Error::Input("differentials do not square to zero".into()));
        }
        Ok(c)
    }

    pub fn is_complex(&self, a: &Algebra) -> bool {
        self.differentials
            .windows(2)
            .all(|w| w[0].then(&w[1], a).is_zero())
    }

    /// No differential entry is an isomorphism between indecomposable summands.
    pub fn is_minimal(&self, a: &Algebra) -> bool {
        self.differentials.iter().all(|d| d.is_radical(a))
    }

    /// Degrees of the first and last nonzero terms.
    pub fn window(&self) -> Option<(i64, i64)> {
        let first = self.terms.iter().position(|t| !t.is_empty())?;
        let last = self.terms.iter().rposition(|t| !t.is_empty())?;
        Some((self.low + first as i64, self.low + last as i64))
    }

    pub fn length(&self) -> usize {
        self.window().map(|(b, t)| (t - b) as usize).unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(Vec::is_empty)
    }

    /// Homotopy-equivalent minimal complex by Gaussian elimination of invertible
    /// entries, scanning degrees and then summands in ascending order.
    pub fn minimize(&self, a: &Algebra) -> ProjComplex {
        let mut c = self.clone();
        let rad = a.radical_space();
        'outer: loop {
            for i in 0..c.differentials.len() {
                let d = &c.differentials[i];
                for j in 0..d.source.len() {
                    for l in 0..d.target.len() {
                        if !rad.contains(&d.entries[l][j]) {
                            c.cancel(a, i, l, j);
                            continue 'outer;
                        }
                    }
                }
            }
            break;
        }
        c.trim();
        c
    }

    fn cancel(&mut self, a: &Algebra, i: usize, l: usize, j: usize) {
        let d = self.differentials[i].clone();
        let phi = &d.entries[l][j];
        let psi = inverse_entry(a, phi, d.source[j], d.target[l]);
        let keep_src: Vec<usize> = (0..d.source.len()).filter(|&x| x != j).collect();
        let keep_tgt: Vec<usize> = (0..d.target.len()).filter(|&x| x != l).collect();
        let mut nd = ProjMap::zero(
            a,
            &keep_src.iter().map(|&x| d.source[x]).collect::<Vec<_>>(),
            &keep_tgt.iter().map(|&x| d.target[x]).collect::<Vec<_>>(),
        );
        for (r, &lt) in keep_tgt.iter().enumerate() {
            let c_part = a.mul(&d.entries[lt][j], &psi);
            for (s, &js) in keep_src.iter().enumerate() {
                let corr = a.mul(&c_part, &d.entries[l][js]);
                nd.entries[r][s] = d.entries[lt][js].iter().zip(&corr).map(|(x, y)| x - y).collect();
            }
        }
        self.differentials[i] = nd;
        if i > 0 {
            let prev = &mut self.differentials[i - 1];
            prev.entries.remove(j);
            prev.target.remove(j);
        }
        if i + 1 < self.differentials.len() {
            let next = &mut self.differentials[i + 1];
            for row in next.entries.iter_mut() {
                row.remove(l);
            }
            next.source.remove(l);
        }
        self.terms[i].remove(j);
        self.terms[i + 1].remove(l);
    }

    /// Drops zero terms at both ends.
    fn trim(&mut self) {
        while self.terms.len() > 1 && self.terms.last().is_some_and(Vec::is_empty) {
            self.terms.pop();
            self.differentials.pop();
        }
        while self.terms.len() > 1 && self.terms[0].is_empty() {
            self.terms.remove(0);
            self.differentials.remove(0);
            self.low += 1;
        }
    }

    /// `dim H^n(X)` for each degree of the window, i.e. `dim Hom(A, X[n])`.
    pub fn cohomology(&self, a: &Arc<Algebra>) -> Vec<(i64, usize)> {
        let dims: Vec<usize> = self
            .terms
            .iter()
            .map(|t| Module::projective_sum(a.clone(), t).dim())
            .collect();
        let ranks: Vec<usize> = self
            .differentials
            .iter()
            .map(|d| d.to_morphism(a).rank())
            .collect();
        (0..self.terms.len())
            .map(|i| {
                let out = ranks.get(i).copied().unwrap_or(0);
                let inc = if i > 0 { ranks[i - 1] } else { 0 };
                (self.low + i as i64, dims[i] - out - inc)
            })
            .collect()
    }

    /// `dim Hom(X, A[n])` for each `n` with `X^{-n}` in the window.
    pub fn hom_to_regular(&self, a: &Algebra) -> Vec<(i64, usize)> {
        // Hom^n = Hom(X^{-n}, A); the map Hom^n -> Hom^{n+1} is induced by X^{-n-1} -> X^{-n}
        let dims: Vec<usize> = self.terms.iter().map(|t| regular_hom_dim(a, t)).collect();
        let ranks: Vec<usize> = self
            .differentials
            .iter()
            .map(|d| d.hom_into_regular(a).rank())
            .collect();
        (0..self.terms.len())
            .map(|i| {
                // term i is in degree low + i, i.e. Hom^n with n = -(low + i)
                let out = if i > 0 { ranks[i - 1] } else { 0 };
                let inc = ranks.get(i).copied().unwrap_or(0);
                (-(self.low + i as i64), dims[i] - out - inc)
            })
            .collect()
    }

    /// `(r, s)` from the Hom characterizations: the largest `n` with
    /// `Hom(A, X[n]) != 0` and the largest `n` with `Hom(X, A[n]) != 0`.
    pub fn hom_extents(&self, a: &Arc<Algebra>) -> Option<(i64, i64)> {
        let r = self
            .cohomology(a)
            .into_iter()
            .filter(|(_, d)| *d > 0)
            .map(|(n, _)| n)
            .max()?;
        let s = self
            .hom_to_regular(a)
            .into_iter()
            .filter(|(_, d)| *d > 0)
            .map(|(n, _)| n)
            .max()?;
        Some((r, s))
    }

    /// Stalk complex of a sum of indecomposable projectives in degree 0.
    pub fn stalk(vertices: &[usize]) -> ProjComplex {
        ProjComplex {
            low: 0,
            terms: vec![vertices.to_vec()],
            differentials: vec![],
        }
    }
}

/// The inverse of an invertible map `e_s A -> e_t A` given by left multiplication.
fn inverse_entry(a: &Algebra, phi: &[Scalar], s: usize, t: usize) -> Vec<Scalar> {
    let f = a.field();
    let block = a.block(s, t);
    let rows: Vec<Vec<Scalar>> = block
        .iter()
        .map(|&b| a.mul(&a.unit_vector(b), phi))
        .collect();
    let m = Matrix::from_rows(f, a.dim(), rows).expect("products have algebra width");
    let target = Matrix::row_vector(f, a.idempotent(s));
    let y = m
        .solve_left(&target)
        .expect("shapes agree")
        .expect("non-radical map between indecomposable projectives is invertible");
    let mut psi = a.zero();
    for (c, &b) in block.iter().enumerate() {
        psi[b] = y.get(0, c).clone();
    }
    psi
}

/// The complex `P_w -> P_w -> ... -> P_w -> P_v` in degrees `-m..0`, with
/// `step` on the repeated term and `last` into the final one.
pub fn staircase(
    a: &Algebra,
    w: usize,
    v: usize,
    step: &[Scalar],
    last: &[Scalar],
    m: usize,
) -> Result<ProjComplex> {
    let mut terms = vec![vec![w]; m];
    terms.push(vec![v]);
    let differentials = (0..m)
        .map(|i| ProjMap {
            source: vec![w],
            target: vec![if i + 1 == m { v } else { w }],
            entries: vec![vec![if i + 1 == m { last.to_vec() } else { step.to_vec() }]],
        })
        .collect();
    ProjComplex::new(a, -(m as i64), terms, differentials)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeResult {
    pub lower_bound: usize,
    /// Vertices of the witness chain in degrees `0..=lower_bound`.
    pub witness: Vec<usize>,
}

/// Searches chains of indecomposable projectives joined by nonzero radical basis
/// maps with vanishing composites. Such a complex is minimal and indecomposable,
/// so its length bounds the strong global dimension from below.
pub fn sgldim_probe(a: &Algebra, max_len: usize) -> ProbeResult {
    let n = a.num_vertices();
    let maps: Vec<Vec<Vec<Vec<Scalar>>>> = (0..n)
        .map(|s| {
            (0..n)
                .map(|t| a.radical_block(t, s).into_iter().cloned().collect())
                .collect()
        })
        .collect();
    let mut best = ProbeResult {
        lower_bound: 0,
        witness: if n > 0 { vec![0] } else { vec![] },
    };
    for v in 0..n {
        let mut chain = vec![v];
        if dfs(a, &maps, &mut chain, None, max_len, &mut best) {
            break;
        }
    }
    best
}

fn dfs(
    a: &Algebra,
    maps: &[Vec<Vec<Vec<Scalar>>>],
    chain: &mut Vec<usize>,
    prev: Option<&[Scalar]>,
    max_len: usize,
    best: &mut ProbeResult,
) -> bool {
    let len = chain.len() - 1;
    if len > best.lower_bound {
        best.lower_bound = len;
        best.witness = chain.clone();
    }
    if len == max_len {
        return true;
    }
    let s = *chain.last().unwrap();
    for t in 0..maps.len() {
        for x in &maps[s][t] {
            if let Some(p) = prev {
                if !a.mul(x, p).iter().all(Scalar::is_zero) {
                    continue;
                }
            }
            chain.push(t);
            if dfs(a, maps, chain, Some(x), max_len, best) {
                return true;
            }
            chain.pop();
        }
    }
    false
}
