use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, RawAlgebra};
use crate::error::Result;
use crate::linalg::{Matrix, RowBasis, Scalar};

use super::hom::{combine, hom_space};
use super::rep::{Module, Morphism};

/// `End_A(m)` with product `f * g = f ∘ g` (apply `g` first).
pub struct EndAlgebra {
    pub raw: RawAlgebra,
    pub basis: Vec<Morphism>,
    coords: RowBasis,
}

impl EndAlgebra {
    pub fn new(m: &Module) -> EndAlgebra {
        let f = m.field();
        let basis = hom_space(m, m);
        let width: usize = m.dims().iter().map(|d| d * d).sum();
        let flat = basis.iter().map(Morphism::flatten).collect();
        let coords = RowBasis::new(Matrix::from_rows(f, width, flat).expect("flattened homs"));
        let one = coords
            .coords(&Morphism::identity(m).flatten())
            .expect("identity is an endomorphism");
        let raw = RawAlgebra::from_products(
            f,
            basis.len(),
            |i, j| {
                let p = basis[j].then(&basis[i]);
                coords.coords(&p.flatten()).expect("closed under composition")
            },
            one,
        );
        EndAlgebra { raw, basis, coords }
    }

    pub fn element(&self, x: &[Scalar], m: &Module) -> Morphism {
        combine(&self.basis, x, Morphism::zero(m, m))
    }

    pub fn coordinates(&self, h: &Morphism) -> Option<Vec<Scalar>> {
        self.coords.coords(&h.flatten())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The endomorphism algebra on an idempotent-adapted basis, with each new
    /// basis element as a morphism.
    pub fn normalized(&self, m: &Module) -> Result<(Algebra, Vec<Morphism>)> {
        let (alg, p) = self.raw.normalize()?;
        let elems = (0..p.rows()).map(|r| self.element(p.row(r), m)).collect();
        Ok((alg, elems))
    }
}

/// Indecomposable summands (with repetition) and their inclusions.
pub fn split(m: &Module) -> Result<Vec<(Module, Morphism)>> {
    if m.is_zero() {
        return Ok(vec![]);
    }
    let end = EndAlgebra::new(m);
    let idem = end.raw.primitive_idempotents()?;
    Ok(idem
        .iter()
        .map(|e| {
            let h = end.element(e, m);
            m.sub(&h.image()).expect("image is a submodule")
        })
        .collect())
}

/// Isomorphism classes of indecomposable summands with multiplicities.
pub fn decompose(m: &Module) -> Result<Vec<(Module, usize)>> {
    let mut out: Vec<(Module, usize)> = Vec::new();
    for (x, _) in split(m)? {
        match out.iter_mut().find(|(y, _)| indecomposables_isomorphic(&x, y)) {
            Some(entry) => entry.1 += 1,
            None => out.push((x, 1)),
        }
    }
    Ok(out)
}

pub fn is_indecomposable(m: &Module) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    Ok(EndAlgebra::new(m).raw.primitive_idempotents()?.len() == 1)
}

/// For indecomposable modules: some `g ∘ f` from basis maps is invertible.
pub fn indecomposables_isomorphic(x: &Module, y: &Module) -> bool {
    if x.dims() != y.dims() {
        return false;
    }
    if x.is_zero() {
        return true;
    }
    let there = hom_space(x, y);
    if there.is_empty() {
        return false;
    }
    if there.iter().any(Morphism::is_iso) {
        return true;
    }
    let back = hom_space(y, x);
    there
        .iter()
        .any(|f| back.iter().any(|g| f.then(g).is_iso()))
}

pub fn is_isomorphic(m: &Module, n: &Module) -> Result<bool> {
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let homs = hom_space(m, n);
    if homs.is_empty() {
        return Ok(false);
    }
    if homs.iter().any(Morphism::is_iso) {
        return Ok(true);
    }
    let f = m.field();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..4 {
        let coeffs: Vec<Scalar> = homs.iter().map(|_| f.from_i64(rng.gen_range(-7..=7))).collect();
        if combine(&homs, &coeffs, Morphism::zero(m, n)).is_iso() {
            return Ok(true);
        }
    }
    let mut left = decompose(m)?;
    let right = decompose(n)?;
    if left.len() != right.len() {
        return Ok(false);
    }
    for (y, k) in &right {
        match left.iter().position(|(x, j)| j == k && indecomposables_isomorphic(x, y)) {
            Some(i) => {
                left.remove(i);
            }
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// Whether every indecomposable summand of `x` is isomorphic to one of `pieces`.
pub fn in_add(x: &Module, pieces: &[Module]) -> Result<bool> {
    for (s, _) in decompose(x)? {
        if !pieces.iter().any(|p| indecomposables_isomorphic(&s, p)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of isomorphism classes of indecomposable summands.
pub fn count_nonisomorphic_summands(m: &Module) -> Result<usize> {
    Ok(decompose(m)?.len())
}
