use std::collections::HashMap;

use super::fd::{Algebra, BasisWord, Generator, Origin};
use super::quiver::{Path, Presentation};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

pub const DEFAULT_PATH_CAP: usize = 30;

/// All paths of each length, grown on demand.
struct PathTable<'a> {
    p: &'a Presentation,
    by_len: Vec<Vec<Path>>,
}

impl<'a> PathTable<'a> {
    fn new(p: &'a Presentation) -> Self {
        let n = p.quiver.vertices.len();
        PathTable {
            p,
            by_len: vec![(0..n).map(Path::trivial).collect()],
        }
    }

    fn upto(&mut self, len: usize) {
        while self.by_len.len() <= len {
            let prev = self.by_len.last().unwrap();
            let mut next = Vec::new();
            for path in prev {
                for (ai, a) in self.p.quiver.arrows.iter().enumerate() {
                    if a.source == path.target {
                        let mut arrows = path.arrows.clone();
                        arrows.push(ai);
                        next.push(Path {
                            source: path.source,
                            target: a.target,
                            arrows,
                        });
                    }
                }
            }
            self.by_len.push(next);
        }
    }

    fn of_len(&mut self, len: usize) -> &[Path] {
        self.upto(len);
        &self.by_len[len]
    }
}

struct Rel {
    terms: Vec<(Scalar, Path)>,
    source: usize,
    target: usize,
    maxlen: usize,
    minlen: usize,
}

fn normalized_relations(p: &Presentation) -> Vec<Rel> {
    let mut out = Vec::new();
    for r in &p.relations {
        let mut combined: Vec<(Scalar, Path)> = Vec::new();
        for (c, path) in &r.terms {
            match combined.iter_mut().find(|(_, q)| q == path) {
                Some(entry) => entry.0 = &entry.0 + c,
                None => combined.push((c.clone(), path.clone())),
            }
        }
        combined.retain(|(c, _)| !c.is_zero());
        if combined.is_empty() {
            continue;
        }
        out.push(Rel {
            source: combined[0].1.source,
            target: combined[0].1.target,
            maxlen: combined.iter().map(|(_, q)| q.len()).max().unwrap(),
            minlen: combined.iter().map(|(_, q)| q.len()).min().unwrap(),
            terms: combined,
        });
    }
    out
}

/// Spans `p * r * q` with `len(p) + len(q) + maxlen(r) <= bound`, as (coefficient, path) rows.
fn ideal_rows(
    table: &mut PathTable,
    rels: &[Rel],
    bound: usize,
) -> Vec<Vec<(Scalar, Path)>> {
    let mut rows = Vec::new();
    for r in rels {
        if r.maxlen > bound {
            continue;
        }
        let slack = bound - r.maxlen;
        for lp in 0..=slack {
            let lefts: Vec<Path> = table
                .of_len(lp)
                .iter()
                .filter(|p| p.target == r.source)
                .cloned()
                .collect();
            for lq in 0..=slack - lp {
                let rights: Vec<Path> = table
                    .of_len(lq)
                    .iter()
                    .filter(|q| q.source == r.target)
                    .cloned()
                    .collect();
                for left in &lefts {
                    for right in &rights {
                        let row = r
                            .terms
                            .iter()
                            .map(|(c, t)| {
                                let full = left.concat(t).unwrap().concat(right).unwrap();
                                (c.clone(), full)
                            })
                            .collect();
                        rows.push(row);
                    }
                }
            }
        }
    }
    rows
}

fn path_order(a: &Path, b: &Path) -> std::cmp::Ordering {
    a.order_key().cmp(&b.order_key())
}

/// Builds the algebra `kQ/I` with a length-lex normal-form basis.
pub fn build_algebra(p: &Presentation, cap: usize) -> Result<Algebra> {
    if cap == 0 {
        return Err(Error::Input("path length cap must be at least 1".into()));
    }
    p.validate()?;
    let field = p.field;
    let rels = normalized_relations(p);
    let mut table = PathTable::new(p);

    // nilpotency degree: first N with every path of length N in the ideal
    let mut nil = None;
    for len in 1..=cap {
        let long: Vec<Path> = table.of_len(len).to_vec();
        if long.is_empty() {
            nil = Some(len);
            break;
        }
        let rows = ideal_rows(&mut table, &rels, len);
        if rows.is_empty() {
            continue;
        }
        let (cols, index) = column_index(&rows, &long);
        let w = to_matrix(field, &rows, &index, cols.len());
        let mut units = Matrix::zeros(field, long.len(), cols.len());
        for (i, path) in long.iter().enumerate() {
            units.set(i, index[path], field.one());
        }
        if w.vstack(&units).rank() == w.rank() {
            nil = Some(len);
            break;
        }
    }
    let nil = nil.ok_or(Error::NotFiniteDimensional { cap })?;

    let spread = rels.iter().map(|r| r.maxlen - r.minlen).max().unwrap_or(0);
    let rows: Vec<Vec<(Scalar, Path)>> = ideal_rows(&mut table, &rels, nil + spread)
        .into_iter()
        .map(|row| row.into_iter().filter(|(_, q)| q.len() < nil).collect::<Vec<_>>())
        .filter(|row| !row.is_empty())
        .collect();

    let short: Vec<Path> = (1..nil).flat_map(|l| table.of_len(l).to_vec()).collect();
    let (cols, index) = column_index(&rows, &short);
    let w = to_matrix(field, &rows, &index, cols.len());
    let (reduced, pivots) = w.reduced();

    let pivot_set: HashMap<usize, usize> =
        pivots.iter().enumerate().map(|(r, &c)| (c, r)).collect();

    // basis: idempotents, then non-pivot paths by increasing length-lex
    let nv = p.quiver.vertices.len();
    let mut basis_paths: Vec<Path> = (0..nv).map(Path::trivial).collect();
    let mut nonpivot: Vec<Path> = cols
        .iter()
        .enumerate()
        .filter(|(c, _)| !pivot_set.contains_key(c))
        .map(|(_, q)| q.clone())
        .collect();
    nonpivot.sort_by(path_order);
    basis_paths.extend(nonpivot);
    let basis_index: HashMap<Path, usize> = basis_paths
        .iter()
        .enumerate()
        .map(|(i, q)| (q.clone(), i))
        .collect();

    let normal_form = |q: &Path| -> Vec<(usize, Scalar)> {
        if q.len() >= nil {
            return vec![];
        }
        if let Some(&i) = basis_index.get(q) {
            return vec![(i, field.one())];
        }
        let col = index[q];
        let r = pivot_set[&col];
        let mut out = Vec::new();
        for (c, path) in cols.iter().enumerate() {
            let v = reduced.get(r, c);
            if c != col && !v.is_zero() {
                out.push((basis_index[path], -v));
            }
        }
        out.sort_by_key(|(i, _)| *i);
        out
    };

    let n = basis_paths.len();
    let mut mult = vec![Vec::new(); n * n];
    for (i, a) in basis_paths.iter().enumerate() {
        for (j, b) in basis_paths.iter().enumerate() {
            if let Some(ab) = a.concat(b) {
                mult[i * n + j] = normal_form(&ab);
            }
        }
    }

    let generators = p
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| Generator {
            label: a.id.clone(),
            source: a.source,
            target: a.target,
            basis_index: basis_index[&Path {
                source: a.source,
                target: a.target,
                arrows: vec![ai],
            }],
        })
        .collect();

    let radical = basis_paths
        .iter()
        .enumerate()
        .filter(|(_, q)| !q.is_trivial())
        .map(|(i, q)| {
            let mut v = vec![field.zero(); n];
            v[i] = field.one();
            (q.source, q.target, v)
        })
        .collect();

    Ok(Algebra {
        field,
        vertices: p.quiver.vertices.clone(),
        generators,
        labels: basis_paths.iter().map(|q| q.label(&p.quiver)).collect(),
        basis: basis_paths
            .iter()
            .map(|q| BasisWord {
                source: q.source,
                target: q.target,
                letters: q.arrows.clone(),
            })
            .collect(),
        table: mult,
        idempotents: (0..nv).collect(),
        radical,
        origin: Origin::Presentation(p.clone()),
    })
}

/// Columns: every path appearing in `rows` or `extra`, in descending length-lex order.
fn column_index(
    rows: &[Vec<(Scalar, Path)>],
    extra: &[Path],
) -> (Vec<Path>, HashMap<Path, usize>) {
    let mut cols: Vec<Path> = extra.to_vec();
    for row in rows {
        for (_, q) in row {
            cols.push(q.clone());
        }
    }
    cols.sort_by(|a, b| path_order(b, a));
    cols.dedup();
    let index = cols.iter().enumerate().map(|(i, q)| (q.clone(), i)).collect();
    (cols, index)
}

fn to_matrix(
    field: crate::linalg::Field,
    rows: &[Vec<(Scalar, Path)>],
    index: &HashMap<Path, usize>,
    ncols: usize,
) -> Matrix {
    let mut m = Matrix::zeros(field, rows.len(), ncols);
    for (r, row) in rows.iter().enumerate() {
        for (c, q) in row {
            let j = index[q];
            let v = m.get(r, j) + c;
            m.set(r, j, v);
        }
    }
    m
}
