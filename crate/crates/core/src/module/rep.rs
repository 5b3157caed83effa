use std::fmt;
use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraMap};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, RowBasis, Scalar};

/// A finite-dimensional right module: a vector space per vertex and one matrix
/// per generator, acting on row vectors.
#[derive(Clone)]
pub struct Module {
    alg: Arc<Algebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

/// Per-vertex row spans inside an ambient module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Submodule {
    pub spans: Vec<Matrix>,
}

/// A module homomorphism as one matrix per vertex (rows: source basis, columns: target basis).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub blocks: Vec<Matrix>,
}

impl Module {
    /// Validates shapes and that the action respects every basis product.
    pub fn new(alg: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Module> {
        if dims.len() != alg.num_vertices() {
            return Err(Error::Shape(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                alg.num_vertices()
            )));
        }
        if maps.len() != alg.generators().len() {
            return Err(Error::Shape(format!(
                "{} matrices for {} generators",
                maps.len(),
                alg.generators().len()
            )));
        }
        for (g, m) in alg.generators().iter().zip(&maps) {
            if m.shape() != (dims[g.source], dims[g.target]) {
                return Err(Error::Shape(format!(
                    "matrix for '{}' is {}x{}, expected {}x{}",
                    g.label,
                    m.rows(),
                    m.cols(),
                    dims[g.source],
                    dims[g.target]
                )));
            }
            if m.field() != alg.field() {
                return Err(Error::Input("matrix over the wrong field".into()));
            }
        }
        let module = Module { alg, dims, maps };
        module.check_relations()?;
        Ok(module)
    }

    pub(crate) fn new_unchecked(alg: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Module {
        debug_assert_eq!(dims.len(), alg.num_vertices());
        Module { alg, dims, maps }
    }

    fn check_relations(&self) -> Result<()> {
        let a = &*self.alg;
        for b in 0..a.dim() {
            let mb = self.basis_matrix(b);
            for g in a.generators() {
                if a.basis()[b].target != g.source {
                    continue;
                }
                let lhs = mb.mul(&self.basis_matrix(g.basis_index));
                let rhs = self.combination(a.mul_basis(b, g.basis_index), a.basis()[b].source, g.target);
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "action of {} * {} is inconsistent",
                        a.basis_label(b),
                        g.label
                    )));
                }
            }
        }
        Ok(())
    }

    fn combination(&self, terms: &[(usize, Scalar)], s: usize, t: usize) -> Matrix {
        let mut out = Matrix::zeros(self.field(), self.dims[s], self.dims[t]);
        for (k, c) in terms {
            out = out.add(&self.basis_matrix(*k).scale(c));
        }
        out
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for d in &self.dims {
            out.push(acc);
            acc += d;
        }
        out
    }

    /// Action of a basis element: `dims[source] x dims[target]`.
    pub fn basis_matrix(&self, b: usize) -> Matrix {
        let w = &self.alg.basis()[b];
        let mut m = Matrix::identity(self.field(), self.dims[w.source]);
        for &g in &w.letters {
            m = m.mul(&self.maps[g]);
        }
        m
    }

    /// Action of an element of the block `e_s A e_t`.
    pub fn act_block(&self, x: &[Scalar], s: usize, t: usize) -> Matrix {
        let mut out = Matrix::zeros(self.field(), self.dims[s], self.dims[t]);
        for (b, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let w = &self.alg.basis()[b];
            if w.source == s && w.target == t {
                out = out.add(&self.basis_matrix(b).scale(c));
            }
        }
        out
    }

    /// Action of an arbitrary element on the whole module.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let off = self.offsets();
        let mut out = Matrix::zeros(self.field(), n, n);
        let nv = self.dims.len();
        for s in 0..nv {
            for t in 0..nv {
                if self.dims[s] == 0 || self.dims[t] == 0 {
                    continue;
                }
                let block = self.act_block(x, s, t);
                if !block.is_zero() {
                    out.set_block(off[s], off[t], &block);
                }
            }
        }
        out
    }

    pub fn zero(alg: Arc<Algebra>) -> Module {
        let dims = vec![0; alg.num_vertices()];
        Module::with_zero_maps(alg, dims)
    }

    fn with_zero_maps(alg: Arc<Algebra>, dims: Vec<usize>) -> Module {
        let maps = alg
            .generators()
            .iter()
            .map(|g| Matrix::zeros(alg.field(), dims[g.source], dims[g.target]))
            .collect();
        Module { alg, dims, maps }
    }

    /// `e_v A` on the basis elements with source `v`.
    pub fn projective(alg: Arc<Algebra>, v: usize) -> Module {
        let nv = alg.num_vertices();
        let parts: Vec<Vec<usize>> = (0..nv).map(|w| alg.block(v, w)).collect();
        let dims = parts.iter().map(Vec::len).collect();
        let f = alg.field();
        let maps = alg
            .generators()
            .iter()
            .map(|g| {
                let rows = &parts[g.source];
                let cols = &parts[g.target];
                let mut m = Matrix::zeros(f, rows.len(), cols.len());
                for (i, &b) in rows.iter().enumerate() {
                    for (k, c) in alg.mul_basis(b, g.basis_index) {
                        let j = cols.iter().position(|x| x == k).expect("product stays in e_v A");
                        m.set(i, j, c.clone());
                    }
                }
                m
            })
            .collect();
        Module { alg, dims, maps }
    }

    /// Position of basis element `b` inside the vertex part of `e_v A`.
    pub fn projective_position(alg: &Algebra, b: usize) -> usize {
        let w = &alg.basis()[b];
        alg.block(w.source, w.target)
            .iter()
            .position(|&x| x == b)
            .expect("basis element in its block")
    }

    pub fn projective_sum(alg: Arc<Algebra>, vertices: &[usize]) -> Module {
        let parts: Vec<Module> = vertices
            .iter()
            .map(|&v| Module::projective(alg.clone(), v))
            .collect();
        Module::direct_sum_of(alg, &parts)
    }

    pub fn regular(alg: Arc<Algebra>) -> Module {
        let vs: Vec<usize> = (0..alg.num_vertices()).collect();
        Module::projective_sum(alg, &vs)
    }

    /// The simple top of `e_v A`.
    pub fn simple(alg: Arc<Algebra>, v: usize) -> Module {
        let p = Module::projective(alg, v);
        p.quotient(&p.radical()).expect("radical is a submodule").0
    }

    pub fn direct_sum_of(alg: Arc<Algebra>, parts: &[Module]) -> Module {
        let nv = alg.num_vertices();
        let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = alg
            .generators()
            .iter()
            .enumerate()
            .map(|(gi, _)| {
                let blocks: Vec<Matrix> = parts.iter().map(|p| p.maps[gi].clone()).collect();
                Matrix::block_diagonal(alg.field(), &blocks)
            })
            .collect();
        Module { alg, dims, maps }
    }

    pub fn direct_sum(&self, other: &Module) -> Module {
        Module::direct_sum_of(self.alg.clone(), &[self.clone(), other.clone()])
    }

    pub fn power(&self, k: usize) -> Module {
        Module::direct_sum_of(self.alg.clone(), &vec![self.clone(); k])
    }

    /// Builds a module from the action of every basis element on a space of row
    /// vectors. Returns the module and, per vertex, its basis rows in that space.
    pub fn from_action(alg: Arc<Algebra>, action: impl Fn(usize) -> Matrix) -> (Module, Vec<Matrix>) {
        let f = alg.field();
        let nv = alg.num_vertices();
        let bases: Vec<RowBasis> = (0..nv)
            .map(|v| RowBasis::new(action(alg.idempotent_index(v)).row_space()))
            .collect();
        let dims = bases.iter().map(RowBasis::dim).collect();
        let maps = alg
            .generators()
            .iter()
            .map(|g| {
                let act = action(g.basis_index);
                let src = &bases[g.source];
                let tgt = &bases[g.target];
                let mut m = Matrix::zeros(f, src.dim(), tgt.dim());
                for i in 0..src.dim() {
                    let img = Matrix::row_vector(f, src.basis().row_vec(i)).mul(&act);
                    let c = tgt.coords(img.row(0)).expect("action respects idempotents");
                    for (j, v) in c.into_iter().enumerate() {
                        m.set(i, j, v);
                    }
                }
                m
            })
            .collect();
        (
            Module { alg, dims, maps },
            bases.into_iter().map(|b| b.basis().clone()).collect(),
        )
    }

    /// Restriction along `phi: A -> B` of a module over `B`.
    pub fn restrict(&self, phi: &AlgebraMap) -> Module {
        Module::from_action(phi.source.clone(), |b| self.act(&phi.images[b])).0
    }

    /// The submodule generated by vectors `(vertex, vector in M_vertex)`.
    pub fn generated(&self, gens: &[(usize, Vec<Scalar>)]) -> Submodule {
        let f = self.field();
        let nv = self.dims.len();
        let mut rows: Vec<Matrix> = self.dims.iter().map(|&d| Matrix::zeros(f, 0, d)).collect();
        for (v, m) in gens {
            let m = Matrix::row_vector(f, m.clone());
            for w in 0..nv {
                if self.dims[w] == 0 {
                    continue;
                }
                for b in self.alg.block(*v, w) {
                    rows[w] = rows[w].vstack(&m.mul(&self.basis_matrix(b)));
                }
            }
        }
        Submodule {
            spans: rows.iter().map(Matrix::row_space).collect(),
        }
    }

    /// A minimal generating set, one vector per summand of the top.
    pub fn minimal_generators(&self) -> Vec<(usize, Vec<Scalar>)> {
        let f = self.field();
        let classes = self.alg.projective_classes();
        let mut u = self.radical();
        let mut gens = Vec::new();
        for v in 0..self.dims.len() {
            if classes[v] != v {
                continue;
            }
            loop {
                let basis = RowBasis::new(u.spans[v].clone());
                if basis.dim() == self.dims[v] {
                    break;
                }
                let c = basis.free_columns()[0];
                let mut e = vec![f.zero(); self.dims[v]];
                e[c] = f.one();
                u = u.sum(&self.generated(&[(v, e.clone())]));
                gens.push((v, e));
            }
        }
        gens
    }

    /// The map `P_{v_1} + ... + P_{v_n} -> M` sending each `e_{v_j}` to its generator.
    pub fn map_from_projectives(&self, gens: &[(usize, Vec<Scalar>)]) -> (Module, Morphism) {
        let f = self.field();
        let vertices: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
        let p = Module::projective_sum(self.alg.clone(), &vertices);
        let blocks = (0..self.dims.len())
            .map(|w| {
                let mut rows = Matrix::zeros(f, 0, self.dims[w]);
                for (v, m) in gens {
                    let m = Matrix::row_vector(f, m.clone());
                    for b in self.alg.block(*v, w) {
                        rows = rows.vstack(&m.mul(&self.basis_matrix(b)));
                    }
                }
                rows
            })
            .collect();
        (p, Morphism { blocks })
    }

    /// Projective cover: vertices of the summands, the projective and the surjection.
    pub fn projective_cover(&self) -> (Vec<usize>, Module, Morphism) {
        let gens = self.minimal_generators();
        let (p, eps) = self.map_from_projectives(&gens);
        (gens.iter().map(|(v, _)| *v).collect(), p, eps)
    }

    /// `Hom_k(M, k)` as a right module over the opposite algebra `op`.
    pub fn dual(&self, op: Arc<Algebra>) -> Module {
        let maps = self.maps.iter().map(Matrix::transpose).collect();
        Module::new_unchecked(op, self.dims.clone(), maps)
    }

    /// Radical `M * rad(A)`.
    pub fn radical(&self) -> Submodule {
        let nv = self.dims.len();
        let f = self.field();
        let mut rows: Vec<Matrix> = self.dims.iter().map(|&d| Matrix::zeros(f, 0, d)).collect();
        for (s, t, r) in self.alg.radical_vectors() {
            if self.dims[*s] == 0 || self.dims[*t] == 0 {
                continue;
            }
            let img = self.act_block(r, *s, *t);
            rows[*t] = rows[*t].vstack(&img);
        }
        Submodule {
            spans: (0..nv).map(|v| rows[v].row_space()).collect(),
        }
    }

    pub fn top(&self) -> Module {
        self.quotient(&self.radical()).expect("radical is a submodule").0
    }

    pub fn submodule_is_closed(&self, u: &Submodule) -> bool {
        if u.spans.len() != self.dims.len()
            || u.spans.iter().zip(&self.dims).any(|(s, &d)| s.cols() != d)
        {
            return false;
        }
        let bases: Vec<RowBasis> = u.spans.iter().map(|s| RowBasis::new(s.clone())).collect();
        self.alg.generators().iter().zip(&self.maps).all(|(g, m)| {
            let img = u.spans[g.source].mul(m);
            (0..img.rows()).all(|i| bases[g.target].contains(img.row(i)))
        })
    }

    /// The submodule as a module, with its inclusion.
    pub fn sub(&self, u: &Submodule) -> Result<(Module, Morphism)> {
        if !self.submodule_is_closed(u) {
            return Err(Error::NotSubmodule("spans are not closed under the action".into()));
        }
        let f = self.field();
        let bases: Vec<RowBasis> = u.spans.iter().map(|s| RowBasis::new(s.clone())).collect();
        let dims: Vec<usize> = bases.iter().map(RowBasis::dim).collect();
        let maps = self
            .alg
            .generators()
            .iter()
            .zip(&self.maps)
            .map(|(g, m)| {
                let src = &bases[g.source];
                let tgt = &bases[g.target];
                let img = src.basis().mul(m);
                let mut out = Matrix::zeros(f, src.dim(), tgt.dim());
                for i in 0..img.rows() {
                    let c = tgt.coords(img.row(i)).expect("closed");
                    for (j, v) in c.into_iter().enumerate() {
                        out.set(i, j, v);
                    }
                }
                out
            })
            .collect();
        let incl = Morphism {
            blocks: bases.iter().map(|b| b.basis().clone()).collect(),
        };
        Ok((Module::new_unchecked(self.alg.clone(), dims, maps), incl))
    }

    /// `M / U` with its projection.
    pub fn quotient(&self, u: &Submodule) -> Result<(Module, Morphism)> {
        if !self.submodule_is_closed(u) {
            return Err(Error::NotSubmodule("spans are not closed under the action".into()));
        }
        let f = self.field();
        let bases: Vec<RowBasis> = u.spans.iter().map(|s| RowBasis::new(s.clone())).collect();
        let free: Vec<Vec<usize>> = bases.iter().map(RowBasis::free_columns).collect();
        let dims: Vec<usize> = free.iter().map(Vec::len).collect();
        let project = |v: usize, x: &[Scalar]| -> Vec<Scalar> {
            let r = bases[v].reduce(x);
            free[v].iter().map(|&c| r[c].clone()).collect()
        };
        let maps = self
            .alg
            .generators()
            .iter()
            .zip(&self.maps)
            .map(|(g, m)| {
                let mut out = Matrix::zeros(f, dims[g.source], dims[g.target]);
                for (i, &c) in free[g.source].iter().enumerate() {
                    let img = m.row_vec(c);
                    for (j, v) in project(g.target, &img).into_iter().enumerate() {
                        out.set(i, j, v);
                    }
                }
                out
            })
            .collect();
        let proj = Morphism {
            blocks: (0..self.dims.len())
                .map(|v| {
                    let mut p = Matrix::zeros(f, self.dims[v], dims[v]);
                    for i in 0..self.dims[v] {
                        let mut e = vec![f.zero(); self.dims[v]];
                        e[i] = f.one();
                        for (j, x) in project(v, &e).into_iter().enumerate() {
                            p.set(i, j, x);
                        }
                    }
                    p
                })
                .collect(),
        };
        Ok((Module::new_unchecked(self.alg.clone(), dims, maps), proj))
    }

    pub fn zero_submodule(&self) -> Submodule {
        Submodule {
            spans: self.dims.iter().map(|&d| Matrix::zeros(self.field(), 0, d)).collect(),
        }
    }

    pub fn whole(&self) -> Submodule {
        Submodule {
            spans: self.dims.iter().map(|&d| Matrix::identity(self.field(), d)).collect(),
        }
    }

    /// Same vector spaces, acted on by another algebra with matching generators.
    pub fn with_algebra(&self, alg: Arc<Algebra>) -> Result<Module> {
        Module::new(alg, self.dims.clone(), self.maps.clone())
    }
}

impl Submodule {
    pub fn dims(&self) -> Vec<usize> {
        self.spans.iter().map(Matrix::rows).collect()
    }

    pub fn dim(&self) -> usize {
        self.dims().iter().sum()
    }

    pub fn sum(&self, other: &Submodule) -> Submodule {
        Submodule {
            spans: self
                .spans
                .iter()
                .zip(&other.spans)
                .map(|(a, b)| a.vstack(b).row_space())
                .collect(),
        }
    }

    pub fn contains(&self, other: &Submodule) -> bool {
        self.spans
            .iter()
            .zip(&other.spans)
            .all(|(a, b)| a.row_space_contains(b))
    }
}

impl Morphism {
    pub fn zero(m: &Module, n: &Module) -> Morphism {
        Morphism {
            blocks: m
                .dims()
                .iter()
                .zip(n.dims())
                .map(|(&a, &b)| Matrix::zeros(m.field(), a, b))
                .collect(),
        }
    }

    pub fn identity(m: &Module) -> Morphism {
        Morphism {
            blocks: m.dims().iter().map(|&d| Matrix::identity(m.field(), d)).collect(),
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Morphism) -> Morphism {
        Morphism {
            blocks: self.blocks.iter().zip(&next.blocks).map(|(a, b)| a.mul(b)).collect(),
        }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        Morphism {
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Morphism {
        Morphism {
            blocks: self.blocks.iter().map(|a| a.scale(s)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn is_iso(&self) -> bool {
        self.blocks.iter().all(Matrix::is_invertible)
    }

    /// Whether the blocks intertwine the actions of `m` and `n`.
    pub fn is_homomorphism(&self, m: &Module, n: &Module) -> bool {
        m.algebra().generators().iter().enumerate().all(|(gi, g)| {
            m.maps()[gi].mul(&self.blocks[g.target]) == self.blocks[g.source].mul(&n.maps()[gi])
        })
    }

    pub fn flatten(&self) -> Vec<Scalar> {
        self.blocks.iter().flat_map(|b| b.entries().iter().cloned()).collect()
    }

    /// Inverse of `flatten` for maps `m -> n`.
    pub fn unflatten(m: &Module, n: &Module, flat: &[Scalar]) -> Morphism {
        let mut at = 0;
        let blocks = m
            .dims()
            .iter()
            .zip(n.dims())
            .map(|(&r, &c)| {
                let b = Matrix::from_vec(m.field(), r, c, flat[at..at + r * c].to_vec()).expect("block size");
                at += r * c;
                b
            })
            .collect();
        Morphism { blocks }
    }

    /// The unique `g` with `self.then(g) = h`, for `self` surjective.
    pub fn factor_through(&self, h: &Morphism) -> Option<Morphism> {
        let blocks = self
            .blocks
            .iter()
            .zip(&h.blocks)
            .map(|(p, x)| p.solve(x).ok().flatten())
            .collect::<Option<Vec<_>>>()?;
        Some(Morphism { blocks })
    }

    /// Stacks maps `m -> n_i` into a map `m -> n_1 + ... + n_k`.
    pub fn columns(parts: &[Morphism], m: &Module) -> Morphism {
        let f = m.field();
        let blocks = m
            .dims()
            .iter()
            .enumerate()
            .map(|(v, &d)| {
                parts
                    .iter()
                    .fold(Matrix::zeros(f, d, 0), |acc, p| acc.hstack(&p.blocks[v]))
            })
            .collect();
        Morphism { blocks }
    }

    /// Stacks maps `m_i -> n` into a map `m_1 + ... + m_k -> n`.
    pub fn rows(parts: &[Morphism], n: &Module) -> Morphism {
        let f = n.field();
        let blocks = n
            .dims()
            .iter()
            .enumerate()
            .map(|(v, &d)| {
                parts
                    .iter()
                    .fold(Matrix::zeros(f, 0, d), |acc, p| acc.vstack(&p.blocks[v]))
            })
            .collect();
        Morphism { blocks }
    }

    pub fn full_matrix(&self, field: Field) -> Matrix {
        Matrix::block_diagonal(field, &self.blocks)
    }

    pub fn kernel(&self) -> Submodule {
        Submodule {
            spans: self.blocks.iter().map(|b| b.left_kernel()).collect(),
        }
    }

    pub fn image(&self) -> Submodule {
        Submodule {
            spans: self.blocks.iter().map(|b| b.row_space()).collect(),
        }
    }
}

/// Kernel, image and cokernel of `f: m -> n`.
pub struct MorphismParts {
    pub kernel: Module,
    pub kernel_inclusion: Morphism,
    pub image: Submodule,
    pub cokernel: Module,
    pub cokernel_projection: Morphism,
}

pub fn morphism_parts(m: &Module, n: &Module, f: &Morphism) -> MorphismParts {
    let (kernel, kernel_inclusion) = m.sub(&f.kernel()).expect("kernel is a submodule");
    let image = f.image();
    let (cokernel, cokernel_projection) = n.quotient(&image).expect("image is a submodule");
    MorphismParts {
        kernel,
        kernel_inclusion,
        image,
        cokernel,
        cokernel_projection,
    }
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module(dims {:?}", self.dims)?;
        for (g, m) in self.alg.generators().iter().zip(&self.maps) {
            write!(f, ", {}: {:?}", g.label, m)?;
        }
        write!(f, ")")
    }
}
