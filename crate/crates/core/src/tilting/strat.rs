use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Algebra, Signature};
use crate::error::{Error, Result};
use crate::homology::{ext_dims, is_exceptional, proj_dim, Dimension, Verdict};
use crate::module::{hom_dim, is_indecomposable, trace, Module};

use super::ell::{idempotent_recollement, FailureReport, RecollementOutcome};

#[derive(Clone, Debug, Serialize)]
pub struct HeredityReport {
    pub ideal_dim: usize,
    pub ideal_projective: bool,
    pub corner: Signature,
    pub corner_semisimple: bool,
}

/// `AeA` is projective and `eAe` semisimple; on success, the recollement of
/// `T = A` with `0 -> A -> A + eA -> eA -> 0`, where `ℓ(A) = A/AeA` and `C = eAe`.
pub fn heredity_check(a: &Arc<Algebra>, vertices: &[usize], cap: usize) -> Result<(HeredityReport, RecollementOutcome)> {
    if let Some(&v) = vertices.iter().find(|&&v| v >= a.num_vertices()) {
        return Err(Error::Input(format!("no vertex with index {v}")));
    }
    let regular = Module::regular(a.clone());
    let ea = Module::projective_sum(a.clone(), vertices);
    let (ideal, _) = regular.sub(&trace(&ea, &regular))?;
    let (_, cover, _) = ideal.projective_cover();
    let corner = a.corner(vertices)?;
    let report = HeredityReport {
        ideal_dim: ideal.dim(),
        ideal_projective: cover.dim() == ideal.dim(),
        corner: corner.signature(),
        corner_semisimple: corner.radical_dim() == 0,
    };
    let fail = |hypothesis: &str, detail: &str| FailureReport {
        hypothesis: hypothesis.into(),
        detail: detail.into(),
        datum: None,
    };
    if !report.ideal_projective {
        let f = fail("AeA projective", "the ideal is not projective as a right module");
        return Ok((report, Err(f)));
    }
    if !report.corner_semisimple {
        let f = fail("eAe semisimple", "the corner algebra has a nonzero radical");
        return Ok((report, Err(f)));
    }
    let outcome = idempotent_recollement(a, vertices, cap)?;
    Ok((report, outcome))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum StratTree {
    Leaf {
        vertex: String,
        signature: Signature,
    },
    Node {
        vertex: String,
        dim: usize,
        quotient: Box<StratTree>,
        factor: Box<StratTree>,
    },
}

impl StratTree {
    pub fn leaves(&self) -> Vec<Signature> {
        match self {
            StratTree::Leaf { signature, .. } => vec![signature.clone()],
            StratTree::Node { quotient, factor, .. } => {
                let mut out = quotient.leaves();
                out.extend(factor.leaves());
                out
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves().len()
    }

    /// Vertices in the order they were split off.
    pub fn order(&self) -> Vec<String> {
        match self {
            StratTree::Leaf { vertex, .. } => vec![vertex.clone()],
            StratTree::Node { vertex, quotient, .. } => {
                let mut out = vec![vertex.clone()];
                out.extend(quotient.order());
                out
            }
        }
    }
}

/// Vertices whose indecomposable projective is simple.
pub fn simple_projectives(a: &Arc<Algebra>) -> Vec<usize> {
    (0..a.num_vertices())
        .filter(|&v| Module::projective(a.clone(), v).radical().dim() == 0)
        .collect()
}

/// Splits off a simple projective at each step: the least such vertex, or the
/// next vertex of `order` (by label) when given.
pub fn stratify(a: &Arc<Algebra>, order: Option<&[String]>) -> Result<StratTree> {
    if !a.is_directed() {
        return Err(Error::NotDirected);
    }
    split_off(a, order.unwrap_or(&[]), order.is_some())
}

fn split_off(a: &Arc<Algebra>, order: &[String], explicit: bool) -> Result<StratTree> {
    let sinks = simple_projectives(a);
    let v = if explicit {
        let label = order
            .first()
            .ok_or_else(|| Error::Input("the order ends before every vertex is split off".into()))?;
        let v = a
            .vertex_index(label)
            .ok_or_else(|| Error::Input(format!("vertex '{label}' is not in the algebra")))?;
        if !sinks.contains(&v) {
            return Err(Error::Input(format!("P({label}) is not simple at this step")));
        }
        v
    } else {
        *sinks.first().ok_or(Error::NotDirected)?
    };
    let label = a.vertex_labels()[v].clone();
    let corner = a.corner(&[v])?;
    if a.num_vertices() == 1 {
        return Ok(StratTree::Leaf {
            vertex: label,
            signature: corner.signature(),
        });
    }
    let regular = Module::regular(a.clone());
    let ev = Module::projective(a.clone(), v);
    let (ideal, _) = regular.sub(&trace(&ev, &regular))?;
    if ideal.radical().dim() != 0 || ideal.projective_cover().1.dim() != ideal.dim() {
        return Err(Error::Input(format!("AeA for vertex '{label}' is not semisimple projective")));
    }
    let rest = Arc::new(a.quotient_by_idempotent_ideal(&[v])?);
    let next = if explicit { &order[1..] } else { order };
    Ok(StratTree::Node {
        vertex: label.clone(),
        dim: a.dim(),
        quotient: Box::new(split_off(&rest, next, explicit)?),
        factor: Box::new(StratTree::Leaf {
            vertex: label,
            signature: corner.signature(),
        }),
    })
}

/// Every order in which simple projectives can be split off one at a time.
pub fn legal_orders(a: &Arc<Algebra>) -> Result<Vec<Vec<String>>> {
    if !a.is_directed() {
        return Err(Error::NotDirected);
    }
    if a.num_vertices() == 0 {
        return Ok(vec![vec![]]);
    }
    let mut out = Vec::new();
    for v in simple_projectives(a) {
        let label = a.vertex_labels()[v].clone();
        if a.num_vertices() == 1 {
            out.push(vec![label]);
            continue;
        }
        let rest = Arc::new(a.quotient_by_idempotent_ideal(&[v])?);
        for tail in legal_orders(&rest)? {
            let mut o = vec![label.clone()];
            o.extend(tail);
            out.push(o);
        }
    }
    Ok(out)
}

/// Multiset equality of leaf signatures.
pub fn compare_factor_multisets(t1: &StratTree, t2: &StratTree) -> bool {
    let mut x = t1.leaves();
    let mut y = t2.leaves();
    x.sort();
    y.sort();
    x == y
}

#[derive(Clone, Debug)]
pub struct ExceptionalSequence {
    pub terms: Vec<Module>,
}

/// Each term indecomposable and exceptional; `Hom(E_i, E_j) = 0` and
/// `Ext^k(E_i, E_j) = 0` for `i > j`.
pub fn exceptional_sequence_check(
    seq: &[Module],
    cap: usize,
) -> Result<std::result::Result<ExceptionalSequence, FailureReport>> {
    let fail = |hypothesis: String, detail: String| {
        Ok(Err(FailureReport {
            hypothesis,
            detail,
            datum: None,
        }))
    };
    for (i, e) in seq.iter().enumerate() {
        if !is_indecomposable(e)? {
            return fail(format!("term {} indecomposable", i + 1), "the term decomposes".into());
        }
        match is_exceptional(e, cap) {
            Verdict::Certified(true) => {}
            Verdict::Certified(false) => {
                return fail(format!("term {} exceptional", i + 1), "it has self-extensions".into())
            }
            Verdict::Unknown => {
                return fail(format!("term {} exceptional", i + 1), format!("undecided within cap {cap}"))
            }
        }
    }
    for i in 0..seq.len() {
        let bound = match proj_dim(&seq[i], cap) {
            Dimension::Finite(d) => d,
            _ => cap,
        };
        for j in 0..i {
            let pair = format!("pair ({}, {})", i + 1, j + 1);
            let h = hom_dim(&seq[i], &seq[j]);
            if h != 0 {
                return fail(pair, format!("Hom(E{}, E{}) has dimension {h}", i + 1, j + 1));
            }
            let e = ext_dims(&seq[i], &seq[j], bound.max(1));
            if let Some(k) = (1..e.len()).find(|&k| e[k] != 0) {
                return fail(pair, format!("Ext^{k}(E{}, E{}) has dimension {}", i + 1, j + 1, e[k]));
            }
        }
    }
    Ok(Ok(ExceptionalSequence { terms: seq.to_vec() }))
}

/// Length equals the number of simple modules.
pub fn is_complete(seq: &ExceptionalSequence, a: &Algebra) -> bool {
    seq.terms.len() == a.k0_rank()
}
