//! The Lie algebra of a root system in its Chevalley basis, and the
//! subspace calculus on top of it.
//!
//! Basis order: `x_a` for the positive roots (in root-system order), then
//! `y_a = x_{-a}` in the same order, then the simple coroots `h_1, ..., h_l`.
//! The basis index of the root vector for [`RootId`] `r` is `r` itself.

use crate::error::{Error, Result};
use crate::exactla::{kernel, EchelonBasis, Matrix};
use crate::rootsys::{RootId, RootSystem, TypeRank};
use crate::scalar::Field;
use crate::Q;
use num_traits::Zero;
use std::fmt;

/// A vector of the Lie algebra in basis coordinates.
#[derive(Clone, PartialEq, Debug)]
pub struct Element<T = Q> {
    pub coeffs: Vec<T>,
}

impl<T: Field> Element<T> {
    pub fn zero(dim: usize) -> Self {
        Element { coeffs: vec![T::zero(); dim] }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.coeffs[i] = T::one();
        e
    }

    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        Element { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Indices with a nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| !self.coeffs[i].is_zero()).collect()
    }

    pub fn scale(&self, c: &T) -> Self {
        Element { coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        Element { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Element { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() - b.clone()).collect() }
    }
}

/// A subspace of the Lie algebra, stored as a canonical reduced echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace<T = Q> {
    basis: EchelonBasis<T>,
}

impl<T: Field> Subspace<T> {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { basis: EchelonBasis::new(ambient_dim) }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let mut b = EchelonBasis::new(ambient_dim);
        for i in 0..ambient_dim {
            let mut v = vec![T::zero(); ambient_dim];
            v[i] = T::one();
            b.insert(v);
        }
        Subspace { basis: b }
    }

    pub fn span<I: IntoIterator<Item = Vec<T>>>(ambient_dim: usize, vectors: I) -> Self {
        let mut b = EchelonBasis::new(ambient_dim);
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "vector length differs from the ambient dimension");
            if !b.is_full() {
                b.insert(v);
            }
        }
        Subspace { basis: b }
    }

    pub fn from_elements(ambient_dim: usize, elems: &[Element<T>]) -> Self {
        Self::span(ambient_dim, elems.iter().map(|e| e.coeffs.clone()))
    }

    pub fn from_matrix(m: &Matrix<T>) -> Self {
        Self::span(m.cols(), m.clone().into_rows())
    }

    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.ambient_dim()
    }

    /// Canonical basis vectors (reduced echelon rows).
    pub fn basis(&self) -> &[Vec<T>] {
        self.basis.rows()
    }

    pub fn basis_elements(&self) -> Vec<Element<T>> {
        self.basis.rows().iter().map(|r| Element::from_coeffs(r.clone())).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        self.basis.pivots()
    }

    pub fn contains_vec(&self, v: &[T]) -> bool {
        self.basis.contains(v)
    }

    pub fn contains(&self, e: &Element<T>) -> bool {
        self.basis.contains(&e.coeffs)
    }

    pub fn contains_subspace(&self, other: &Subspace<T>) -> bool {
        other.basis().iter().all(|v| self.contains_vec(v))
    }

    /// Adds a vector; returns `true` when the dimension grew.
    pub fn insert(&mut self, v: Vec<T>) -> bool {
        self.basis.insert(v)
    }

    pub fn sum(&self, other: &Subspace<T>) -> Subspace<T> {
        let mut s = self.clone();
        for v in other.basis() {
            s.insert(v.clone());
        }
        s
    }

    pub fn intersect(&self, other: &Subspace<T>) -> Result<Subspace<T>> {
        let m = crate::exactla::intersect(&self.to_matrix(), &other.to_matrix())?;
        Ok(Subspace::from_matrix(&m))
    }

    pub fn to_matrix(&self) -> Matrix<T> {
        self.basis.to_matrix()
    }
}

impl<T: Field> PartialEq for Subspace<T> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim() == other.ambient_dim() && self.basis() == other.basis()
    }
}

/// A split simple Lie algebra with integer structure constants.
#[derive(Clone)]
pub struct LieAlgebra {
    rs: RootSystem,
    dim: usize,
    offsets: Vec<u32>,
    entries: Vec<(u32, i64)>,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra({}, dim {})", self.rs.type_rank(), self.dim)
    }
}

impl LieAlgebra {
    pub fn new(t: TypeRank) -> LieAlgebra {
        Self::from_root_system(RootSystem::new(t))
    }

    pub fn from_root_system(rs: RootSystem) -> LieAlgebra {
        let np = rs.num_positive();
        let l = rs.rank();
        let dim = 2 * np + l;
        let mut offsets = Vec::with_capacity(dim * dim + 1);
        let mut entries = Vec::new();
        offsets.push(0u32);
        for i in 0..dim {
            for j in 0..dim {
                basis_bracket(&rs, i, j, &mut entries);
                offsets.push(entries.len() as u32);
            }
        }
        LieAlgebra { rs, dim, offsets, entries }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn type_rank(&self) -> TypeRank {
        self.rs.type_rank()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Index of `h_i` in the basis.
    pub fn cartan_index(&self, i: usize) -> usize {
        2 * self.rs.num_positive() + i
    }

    pub fn is_cartan_index(&self, i: usize) -> bool {
        i >= 2 * self.rs.num_positive()
    }

    /// The root of a root-vector basis index.
    pub fn root_of(&self, i: usize) -> Option<RootId> {
        (i < 2 * self.rs.num_positive()).then_some(i)
    }

    /// Human-readable name of a basis vector: `x3`, `y3`, `h2` (one-based).
    pub fn basis_label(&self, i: usize) -> String {
        let np = self.rs.num_positive();
        if i < np {
            format!("x{}", i + 1)
        } else if i < 2 * np {
            format!("y{}", i - np + 1)
        } else {
            format!("h{}", i - 2 * np + 1)
        }
    }

    /// `[b_i, b_j]` as a sparse integer combination of basis vectors.
    pub fn structure(&self, i: usize, j: usize) -> &[(u32, i64)] {
        let k = i * self.dim + j;
        &self.entries[self.offsets[k] as usize..self.offsets[k + 1] as usize]
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if n != self.dim {
            return Err(Error::ShapeMismatch {
                expected: format!("element of dimension {}", self.dim),
                found: format!("dimension {n}"),
            });
        }
        Ok(())
    }

    pub fn bracket<T: Field>(&self, a: &Element<T>, b: &Element<T>) -> Result<Element<T>> {
        self.check_dim(a.dim())?;
        self.check_dim(b.dim())?;
        Ok(Element::from_coeffs(self.bracket_vec(&a.coeffs, &b.coeffs)))
    }

    /// Bracket of coordinate vectors of length `dim`.
    pub fn bracket_vec<T: Field>(&self, a: &[T], b: &[T]) -> Vec<T> {
        let sa: Vec<(usize, &T)> = a.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        let sb: Vec<(usize, &T)> = b.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        let mut out = vec![T::zero(); self.dim];
        self.bracket_sparse_into(&sa, &sb, &mut out);
        out
    }

    /// Adds `[a, b]` to `out` for sparse `a`, `b` given as (index, coefficient).
    pub fn bracket_sparse_into<T: Field>(&self, a: &[(usize, &T)], b: &[(usize, &T)], out: &mut [T]) {
        for &(i, x) in a {
            for &(j, y) in b {
                let s = self.structure(i, j);
                if s.is_empty() {
                    continue;
                }
                let xy = x.clone() * y.clone();
                for &(k, c) in s {
                    let k = k as usize;
                    out[k] = out[k].clone() + xy.clone() * T::from_i64(c);
                }
            }
        }
    }

    /// Matrix of `ad a`: column `j` holds `[a, b_j]`.
    pub fn ad_matrix<T: Field>(&self, a: &Element<T>) -> Result<Matrix<T>> {
        self.check_dim(a.dim())?;
        let mut m = Matrix::zeros(self.dim, self.dim);
        let sa: Vec<(usize, &T)> = a.coeffs.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        let one = T::one();
        let mut col = vec![T::zero(); self.dim];
        for j in 0..self.dim {
            col.iter_mut().for_each(|x| *x = T::zero());
            self.bracket_sparse_into(&sa, &[(j, &one)], &mut col);
            for (i, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    m[(i, j)] = v.clone();
                }
            }
        }
        Ok(m)
    }

    /// `{x : [a, x] = 0}`.
    pub fn centralizer<T: Field>(&self, a: &Element<T>) -> Result<Subspace<T>> {
        let ad = self.ad_matrix(a)?;
        Ok(Subspace::from_matrix(&kernel(&ad)))
    }

    /// Errors with the offending basis pair when `s` is not bracket-closed.
    pub fn check_subalgebra<T: Field>(&self, s: &Subspace<T>) -> Result<()> {
        self.check_dim(s.ambient_dim())?;
        let b = s.basis();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                if !s.contains_vec(&self.bracket_vec(&b[i], &b[j])) {
                    return Err(Error::NotASubalgebra(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn is_subalgebra<T: Field>(&self, s: &Subspace<T>) -> bool {
        self.check_subalgebra(s).is_ok()
    }

    /// `[s, s]`; `s` must be a subalgebra.
    pub fn derived_subalgebra<T: Field>(&self, s: &Subspace<T>) -> Result<Subspace<T>> {
        self.check_subalgebra(s)?;
        let b = s.basis();
        let mut d = Subspace::zero(self.dim);
        'outer: for i in 0..b.len() {
            for j in i + 1..b.len() {
                if d.dim() == s.dim() {
                    break 'outer;
                }
                d.insert(self.bracket_vec(&b[i], &b[j]));
            }
        }
        Ok(d)
    }

    /// Smallest subalgebra containing `gens`, optionally required to lie in `within`.
    pub fn subalgebra_closure<T: Field>(
        &self,
        gens: &[Element<T>],
        within: Option<&Subspace<T>>,
    ) -> Result<Subspace<T>> {
        for g in gens {
            self.check_dim(g.dim())?;
            if let Some(w) = within {
                if !w.contains(g) {
                    return Err(Error::NotContained);
                }
            }
        }
        let mut span = Subspace::zero(self.dim);
        let mut found: Vec<Vec<T>> = Vec::new();
        for g in gens {
            if span.insert(g.coeffs.clone()) {
                found.push(g.coeffs.clone());
            }
        }
        let mut next = 0;
        while next < found.len() {
            let v = found[next].clone();
            for k in 0..next {
                let w = self.bracket_vec(&found[k], &v);
                if span.insert(w.clone()) {
                    if within.is_some_and(|s| !s.contains_vec(&w)) {
                        return Err(Error::NotContained);
                    }
                    found.push(w);
                }
            }
            next += 1;
        }
        Ok(span)
    }

    /// Eigenvalues of `ad h` on the basis, for `h` in the Cartan subalgebra.
    pub fn cartan_weights(&self, h: &Element<Q>) -> Result<Vec<Q>> {
        self.check_dim(h.dim())?;
        if h.support().iter().any(|&i| !self.is_cartan_index(i)) {
            return Err(Error::NotInCartan);
        }
        let l = self.rank();
        let c: Vec<&Q> = (0..l).map(|i| &h.coeffs[self.cartan_index(i)]).collect();
        let mut w = vec![Q::zero(); self.dim];
        for (r, slot) in w.iter_mut().enumerate().take(self.rs.num_roots()) {
            let coeffs = self.rs.coeffs(r);
            let mut acc = Q::zero();
            for (i, ci) in c.iter().enumerate() {
                let p = self.rs.pairing(&coeffs, i);
                if p != 0 {
                    acc = acc + (*ci).clone() * Q::from(p);
                }
            }
            *slot = acc;
        }
        Ok(w)
    }

    /// Integer eigenvalues of `ad h`; errors when some eigenvalue is not an integer.
    pub fn integral_weights(&self, h: &Element<Q>) -> Result<Vec<i64>> {
        self.cartan_weights(h)?
            .into_iter()
            .map(|w| w.to_i64().filter(|_| w.is_integer()).ok_or_else(|| Error::NonIntegralGrading(w.to_string())))
            .collect()
    }

    /// `dim(s / t)` with the multiset of `ad h` eigenvalues on the quotient.
    ///
    /// Both spaces must be `ad h`-stable; the weights are graded dimension
    /// differences, sorted ascending.
    pub fn quotient_with_action(&self, s: &Subspace<Q>, t: &Subspace<Q>, h: &Element<Q>) -> Result<(usize, Vec<i64>)> {
        let w = self.integral_weights(h)?;
        if !s.contains_subspace(t) {
            return Err(Error::NotContained);
        }
        for sp in [s, t] {
            for v in sp.basis() {
                let hv: Vec<Q> = v.iter().zip(&w).map(|(x, &k)| x.clone() * Q::from(k)).collect();
                if !sp.contains_vec(&hv) {
                    return Err(Error::NotStable);
                }
            }
        }
        let mut degrees: Vec<i64> = w.clone();
        degrees.sort_unstable();
        degrees.dedup();
        let mut weights = Vec::new();
        for k in degrees {
            let cols: Vec<usize> = (0..self.dim).filter(|&i| w[i] == k).collect();
            // an ad h-stable space is the direct sum of its projections to eigenspaces
            let ds = crate::exactla::rank(&s.to_matrix().select_columns(&cols));
            let dt = crate::exactla::rank(&t.to_matrix().select_columns(&cols));
            weights.extend(std::iter::repeat_n(k, ds - dt));
        }
        Ok((s.dim() - t.dim(), weights))
    }

    /// `[b_i, [b_j, b_k]] + [b_j, [b_k, b_i]] + [b_k, [b_i, b_j]]` in integer coordinates.
    pub fn jacobi_residual(&self, i: usize, j: usize, k: usize) -> Vec<i64> {
        let mut out = vec![0i64; self.dim];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for &(m, x) in self.structure(b, c) {
                for &(n, y) in self.structure(a, m as usize) {
                    out[n as usize] += x * y;
                }
            }
        }
        out
    }
}

/// Appends `[b_i, b_j]` to `out`.
fn basis_bracket(rs: &RootSystem, i: usize, j: usize, out: &mut Vec<(u32, i64)>) {
    let nr = rs.num_roots();
    let cartan_base = nr as u32;
    match (i < nr, j < nr) {
        (true, true) => {
            if j == rs.negate(i) {
                for (k, c) in rs.coroot(i).into_iter().enumerate() {
                    if c != 0 {
                        out.push((cartan_base + k as u32, c));
                    }
                }
            } else if let Some(s) = rs.sum(i, j) {
                out.push((s as u32, rs.n(i, j)));
            }
        }
        (true, false) => {
            let p = rs.pairing(&rs.coeffs(i), j - nr);
            if p != 0 {
                out.push((i as u32, -p));
            }
        }
        (false, true) => {
            let p = rs.pairing(&rs.coeffs(j), i - nr);
            if p != 0 {
                out.push((j as u32, p));
            }
        }
        (false, false) => {}
    }
}
