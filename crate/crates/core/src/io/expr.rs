use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::homology::{ProjComplex, ProjMap};
use crate::linalg::{Matrix, Scalar};
use crate::module::{quotient_by_trace, Module};

use super::doc::{ComplexDocument, ModuleDocument, TermDoc, FORMAT_VERSION};

/// Module expressions: `A`, `0`, `P<v>`, `S<v>`, sums `X+Y`, powers `X^n`,
/// trace quotients `X/Y` (= `X / τ_Y(X)`) and parentheses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleExpr {
    Regular,
    Zero,
    Projective(String),
    Simple(String),
    Sum(Vec<ModuleExpr>),
    Power(Box<ModuleExpr>, usize),
    TraceQuotient(Box<ModuleExpr>, Box<ModuleExpr>),
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            line: 1,
            column: self.pos + 1,
            message: format!("{msg} in '{}'", self.text),
        }
    }

    fn skip(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip();
        self.chars.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<ModuleExpr> {
        let mut parts = vec![self.power()?];
        while matches!(self.peek(), Some('+') | Some('⊕')) {
            self.pos += 1;
            parts.push(self.power()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { ModuleExpr::Sum(parts) })
    }

    fn power(&mut self) -> Result<ModuleExpr> {
        let base = self.quotient()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip();
            let start = self.pos;
            while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let digits: String = self.chars[start..self.pos].iter().collect();
            let n = digits.parse().map_err(|_| self.err("expected an exponent"))?;
            return Ok(ModuleExpr::Power(Box::new(base), n));
        }
        Ok(base)
    }

    fn quotient(&mut self) -> Result<ModuleExpr> {
        let mut x = self.atom()?;
        while self.peek() == Some('/') {
            self.pos += 1;
            let y = self.atom()?;
            x = ModuleExpr::TraceQuotient(Box::new(x), Box::new(y));
        }
        Ok(x)
    }

    fn label(&mut self) -> Result<String> {
        let start = self.pos;
        while self.pos < self.chars.len() && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a vertex label"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn atom(&mut self) -> Result<ModuleExpr> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some('A') => {
                self.pos += 1;
                Ok(ModuleExpr::Regular)
            }
            Some('0') => {
                self.pos += 1;
                Ok(ModuleExpr::Zero)
            }
            Some('P') => {
                self.pos += 1;
                Ok(ModuleExpr::Projective(self.label()?))
            }
            Some('S') => {
                self.pos += 1;
                Ok(ModuleExpr::Simple(self.label()?))
            }
            _ => Err(self.err("expected A, 0, P<vertex>, S<vertex> or '('")),
        }
    }
}

impl ModuleExpr {
    pub fn parse(text: &str) -> Result<ModuleExpr> {
        let mut p = Parser {
            chars: text.chars().collect(),
            pos: 0,
            text,
        };
        let e = p.sum()?;
        if p.peek().is_some() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(e)
    }

    pub fn evaluate(&self, a: &Arc<Algebra>) -> Result<Module> {
        let vertex = |l: &str| {
            a.vertex_index(l)
                .ok_or_else(|| Error::Input(format!("unknown vertex '{l}'")))
        };
        Ok(match self {
            ModuleExpr::Regular => Module::regular(a.clone()),
            ModuleExpr::Zero => Module::zero(a.clone()),
            ModuleExpr::Projective(l) => Module::projective(a.clone(), vertex(l)?),
            ModuleExpr::Simple(l) => Module::simple(a.clone(), vertex(l)?),
            ModuleExpr::Sum(parts) => {
                let ms = parts.iter().map(|p| p.evaluate(a)).collect::<Result<Vec<_>>>()?;
                Module::direct_sum_of(a.clone(), &ms)
            }
            ModuleExpr::Power(x, n) => x.evaluate(a)?.power(*n),
            ModuleExpr::TraceQuotient(x, y) => quotient_by_trace(&x.evaluate(a)?, &y.evaluate(a)?).0,
        })
    }
}

/// Parses and evaluates a module expression.
pub fn module_from_expr(text: &str, a: &Arc<Algebra>) -> Result<Module> {
    ModuleExpr::parse(text)?.evaluate(a)
}

pub fn module_from_document(doc: &ModuleDocument, a: &Arc<Algebra>) -> Result<Module> {
    if doc.format_version != FORMAT_VERSION {
        return Err(Error::Input(format!("unsupported format_version '{}'", doc.format_version)));
    }
    let f = a.field();
    for id in doc.arrows.keys() {
        if !a.generators().iter().any(|g| &g.label == id) {
            return Err(Error::Input(format!("unknown arrow '{id}'")));
        }
    }
    if doc.dims.len() != a.num_vertices() {
        return Err(Error::Shape(format!(
            "{} dimensions for {} vertices",
            doc.dims.len(),
            a.num_vertices()
        )));
    }
    let mut maps = Vec::new();
    for g in a.generators() {
        let (r, c) = (doc.dims[g.source], doc.dims[g.target]);
        let m = match doc.arrows.get(&g.label) {
            None => Matrix::zeros(f, r, c),
            Some(rows) => {
                let parsed = rows
                    .iter()
                    .map(|row| row.iter().map(|x| f.parse(x)).collect::<Result<Vec<Scalar>>>())
                    .collect::<Result<Vec<_>>>()?;
                if parsed.len() != r || parsed.iter().any(|row| row.len() != c) {
                    return Err(Error::Shape(format!("matrix for '{}' should be {r}x{c}", g.label)));
                }
                Matrix::from_rows(f, c, parsed)?
            }
        };
        maps.push(m);
    }
    Module::new(a.clone(), doc.dims.clone(), maps)
}

pub fn module_to_document(m: &Module) -> ModuleDocument {
    let arrows = m
        .algebra()
        .generators()
        .iter()
        .zip(m.maps())
        .map(|(g, x)| {
            let rows = (0..x.rows())
                .map(|i| x.row(i).iter().map(Scalar::to_text).collect())
                .collect();
            (g.label.clone(), rows)
        })
        .collect();
    ModuleDocument {
        format_version: FORMAT_VERSION.into(),
        dims: m.dims().to_vec(),
        arrows,
    }
}

/// An algebra element from `coeff * path` terms.
pub fn element_from_terms(a: &Algebra, terms: &[TermDoc]) -> Result<Vec<Scalar>> {
    let f = a.field();
    let mut out = a.zero();
    for t in terms {
        let c = f.parse(&t.coeff)?;
        let x = match (&t.vertex, t.path.is_empty()) {
            (Some(v), true) => {
                let i = a
                    .vertex_index(v)
                    .ok_or_else(|| Error::Input(format!("unknown vertex '{v}'")))?;
                a.idempotent(i)
            }
            (None, false) => {
                let ids: Vec<&str> = t.path.iter().map(String::as_str).collect();
                a.word_element(&ids)
                    .ok_or_else(|| Error::Input(format!("'{}' is not a path of the algebra", t.path.join(" "))))?
            }
            _ => return Err(Error::Input("a term needs either a path or a vertex".into())),
        };
        for (o, y) in out.iter_mut().zip(&x) {
            *o = &*o + &(&c * y);
        }
    }
    Ok(out)
}

/// Terms for an element, reading basis words back as arrow ids.
pub fn terms_from_element(a: &Algebra, x: &[Scalar]) -> Vec<TermDoc> {
    x.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(b, c)| {
            let w = &a.basis()[b];
            if w.letters.is_empty() {
                TermDoc {
                    coeff: c.to_text(),
                    path: vec![],
                    vertex: Some(a.vertex_labels()[w.source].clone()),
                }
            } else {
                TermDoc {
                    coeff: c.to_text(),
                    path: w.letters.iter().map(|&l| a.generators()[l].label.clone()).collect(),
                    vertex: None,
                }
            }
        })
        .collect()
}

pub fn complex_from_document(doc: &ComplexDocument, a: &Algebra) -> Result<ProjComplex> {
    if doc.format_version != FORMAT_VERSION {
        return Err(Error::Input(format!("unsupported format_version '{}'", doc.format_version)));
    }
    let vertex = |l: &String| {
        a.vertex_index(l)
            .ok_or_else(|| Error::Input(format!("unknown vertex '{l}'")))
    };
    let terms = doc
        .terms
        .iter()
        .map(|t| t.iter().map(vertex).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if doc.differentials.len() + 1 != terms.len().max(1) {
        return Err(Error::Shape("wrong number of differentials".into()));
    }
    let mut diffs = Vec::new();
    for (i, d) in doc.differentials.iter().enumerate() {
        let (src, tgt) = (&terms[i], &terms[i + 1]);
        if d.len() != tgt.len() || d.iter().any(|row| row.len() != src.len()) {
            return Err(Error::Shape(format!("differential {i} has the wrong shape")));
        }
        let entries = d
            .iter()
            .map(|row| row.iter().map(|e| element_from_terms(a, e)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        diffs.push(ProjMap {
            source: src.clone(),
            target: tgt.clone(),
            entries,
        });
    }
    ProjComplex::new(a, doc.low, terms, diffs)
}

pub fn complex_to_document(c: &ProjComplex, a: &Algebra, algebra_name: &str) -> ComplexDocument {
    let label = |v: &usize| a.vertex_labels()[*v].clone();
    ComplexDocument {
        format_version: FORMAT_VERSION.into(),
        algebra: algebra_name.into(),
        low: c.low,
        terms: c.terms.iter().map(|t| t.iter().map(label).collect()).collect(),
        differentials: c
            .differentials
            .iter()
            .map(|d| {
                d.entries
                    .iter()
                    .map(|row| row.iter().map(|x| terms_from_element(a, x)).collect())
                    .collect()
            })
            .collect(),
    }
}
