use std::sync::Arc;

use crate::algebra::Algebra;
use crate::linalg::Scalar;
use crate::module::{is_isomorphic, Module, Morphism};

use super::proj::ProjMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResolutionStatus {
    /// The last term is in this degree and the next syzygy is zero.
    Terminated(usize),
    /// Syzygy `at` is isomorphic to the earlier syzygy `start` (syzygy 0 is the module).
    Periodic { start: usize, at: usize },
    Truncated(usize),
}

/// A minimal projective resolution `... -> P_1 -> P_0 -> M`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub terms: Vec<Vec<usize>>,
    /// `differentials[k]` maps `P_{k+1} -> P_k`.
    pub differentials: Vec<ProjMap>,
    /// Syzygy `k` is the image of `P_k`; syzygy 0 is the module itself.
    pub syzygies: Vec<Module>,
    pub augmentation: Morphism,
    pub status: ResolutionStatus,
}

impl Resolution {
    pub fn term(&self, k: usize) -> &[usize] {
        self.terms.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `d_k: P_k -> P_{k-1}` for `k >= 1`, zero when outside the computed range.
    pub fn differential(&self, k: usize, a: &Algebra) -> ProjMap {
        match k.checked_sub(1).and_then(|i| self.differentials.get(i)) {
            Some(d) => d.clone(),
            None => ProjMap::zero(a, self.term(k), if k == 0 { &[] } else { self.term(k - 1) }),
        }
    }

    pub fn length(&self) -> usize {
        self.terms.iter().rposition(|t| !t.is_empty()).unwrap_or(0)
    }

    /// Whether degree `k` is known exactly (computed or past termination).
    pub fn known_through(&self, k: usize) -> bool {
        match self.status {
            ResolutionStatus::Terminated(_) => true,
            _ => k < self.terms.len(),
        }
    }
}

/// Minimal projective resolution up to degree `cap`; stops early when a syzygy
/// vanishes or repeats up to isomorphism.
pub fn minimal_projective_resolution(m: &Module, cap: usize) -> Resolution {
    resolve(m, cap, true)
}

/// Minimal projective resolution computed through degree `degree`, without
/// periodicity checks.
pub fn resolve_to(m: &Module, degree: usize) -> Resolution {
    resolve(m, degree, false)
}

fn resolve(m: &Module, cap: usize, detect_period: bool) -> Resolution {
    let a = m.algebra().clone();
    let mut terms = Vec::new();
    let mut differentials = Vec::new();
    let mut syzygies = vec![m.clone()];
    // inclusion of the current syzygy into the previous term
    let mut incl: Option<(Morphism, Vec<usize>)> = None;
    let mut augmentation = None;
    let mut status = None;
    for k in 0..=cap {
        let omega = syzygies[k].clone();
        if omega.is_zero() {
            status = Some(ResolutionStatus::Terminated(k.saturating_sub(1)));
            if k == 0 {
                terms.push(vec![]);
                augmentation = Some(Morphism::zero(&Module::zero(a.clone()), m));
            }
            break;
        }
        if detect_period && k > 0 {
            if let Some(j) = (0..k).find(|&j| {
                syzygies[j].dims() == omega.dims() && is_isomorphic(&syzygies[j], &omega).unwrap_or(false)
            }) {
                status = Some(ResolutionStatus::Periodic { start: j, at: k });
                break;
            }
        }
        let gens = omega.minimal_generators();
        let vertices: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
        let (p, eps) = omega.map_from_projectives(&gens);
        match &incl {
            None => augmentation = Some(eps.clone()),
            Some((inc, prev)) => differentials.push(differential(&a, &gens, inc, prev, &vertices)),
        }
        terms.push(vertices.clone());
        let kernel = eps.kernel();
        let (next, next_incl) = p.sub(&kernel).expect("kernel is a submodule");
        syzygies.push(next);
        incl = Some((next_incl, vertices));
    }
    let status = status.unwrap_or_else(|| {
        if syzygies.last().is_some_and(Module::is_zero) {
            ResolutionStatus::Terminated(cap)
        } else {
            ResolutionStatus::Truncated(cap)
        }
    });
    Resolution {
        terms,
        differentials,
        syzygies,
        augmentation: augmentation.expect("degree 0 handled"),
        status,
    }
}

/// Entries of `P_k -> P_{k-1}` from generators of the syzygy inside `P_{k-1}`.
fn differential(
    a: &Arc<Algebra>,
    gens: &[(usize, Vec<Scalar>)],
    incl: &Morphism,
    prev: &[usize],
    vertices: &[usize],
) -> ProjMap {
    let mut d = ProjMap::zero(a, vertices, prev);
    for (j, (v, m)) in gens.iter().enumerate() {
        // the generator as an element of (P_{k-1})_v
        let img = crate::linalg::Matrix::row_vector(a.field(), m.clone()).mul(&incl.blocks[*v]);
        let mut off = 0;
        for (l, &t) in prev.iter().enumerate() {
            let block = a.block(t, *v);
            let mut x = a.zero();
            for (c, &b) in block.iter().enumerate() {
                x[b] = img.get(0, off + c).clone();
            }
            off += block.len();
            d.entries[l][j] = x;
        }
    }
    d
}
