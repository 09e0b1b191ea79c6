//! Nilpotent orbits through their weighted Dynkin diagrams.
//!
//! A diagram `d` determines `h` with `alpha_i(h) = d_i` and a grading
//! `g = sum g(k)`. The diagram belongs to a nilpotent orbit iff some `e` in
//! `g(2)` has `[g(0), e] = g(2)` and lies in an sl2-triple `(e, h, f)`.

use crate::error::{Error, Result};
use crate::exactla::{kernel, rank, solve, Matrix};
use crate::liealg::{Element, LieAlgebra, Subspace};
use crate::scalar::{Field, Fp};
use crate::Q;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt;

pub const DEFAULT_TRIALS: usize = 25;

/// Random attempts after the sparse search in [`find_representative`].
const RANDOM_ATTEMPTS: usize = 64;

/// Labels `alpha_i(h)` in `{0, 1, 2}`, Bourbaki node order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedDynkinDiagram {
    labels: Vec<u8>,
}

impl WeightedDynkinDiagram {
    pub fn new(rank: usize, labels: &[i64]) -> Result<Self> {
        if labels.len() != rank || labels.iter().any(|l| !(0..=2).contains(l)) {
            return Err(Error::BadDiagram { expected: rank, found: labels.to_vec() });
        }
        Ok(WeightedDynkinDiagram { labels: labels.iter().map(|&l| l as u8).collect() })
    }

    pub fn zero(rank: usize) -> Self {
        WeightedDynkinDiagram { labels: vec![0; rank] }
    }

    /// Parses `"0,0,1,0"`; spaces are also accepted as separators.
    pub fn parse(rank: usize, s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(|c: char| c == ',' || c.is_whitespace()).filter(|p| !p.is_empty()).collect();
        let mut labels = Vec::with_capacity(parts.len());
        for p in parts {
            match p.parse::<i64>() {
                Ok(v) => labels.push(v),
                Err(_) => return Err(Error::BadDiagram { expected: rank, found: labels }),
            }
        }
        Self::new(rank, &labels)
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn is_zero(&self) -> bool {
        self.labels.iter().all(|&l| l == 0)
    }

    /// All `3^rank` diagrams in lexicographic order.
    pub fn all(rank: usize) -> Vec<Self> {
        let total = 3usize.pow(rank as u32);
        (0..total)
            .map(|mut code| {
                let mut labels = vec![0u8; rank];
                for slot in labels.iter_mut().rev() {
                    *slot = (code % 3) as u8;
                    code /= 3;
                }
                WeightedDynkinDiagram { labels }
            })
            .collect()
    }

    /// `alpha(h)` for a root with the given simple-root coefficients.
    pub fn evaluate(&self, coeffs: &[i64]) -> i64 {
        coeffs.iter().zip(&self.labels).map(|(c, &l)| c * l as i64).sum()
    }
}

impl fmt::Display for WeightedDynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The Cartan element `h` with `alpha_i(h)` equal to the diagram labels.
#[derive(Clone, Debug, PartialEq)]
pub struct Characteristic {
    pub diagram: WeightedDynkinDiagram,
    pub h: Element<Q>,
}

impl Characteristic {
    pub fn new(l: &LieAlgebra, d: &WeightedDynkinDiagram) -> Result<Self> {
        check_rank(l, d)?;
        // alpha_j(sum c_i h_i) = sum_i c_i cartan[j][i]
        let c = Matrix::<Q>::from_i64_rows(l.root_system().cartan());
        let rhs: Vec<Q> = d.labels.iter().map(|&v| Q::from(v as i64)).collect();
        let coords = solve(&c, &rhs)?.expect("Cartan matrix is invertible");
        let mut h = Element::zero(l.dim());
        for (i, v) in coords.into_iter().enumerate() {
            h.coeffs[l.cartan_index(i)] = v;
        }
        Ok(Characteristic { diagram: d.clone(), h })
    }
}

fn check_rank(l: &LieAlgebra, d: &WeightedDynkinDiagram) -> Result<()> {
    if d.rank() != l.rank() {
        return Err(Error::BadDiagram {
            expected: l.rank(),
            found: d.labels.iter().map(|&v| v as i64).collect(),
        });
    }
    Ok(())
}

/// Eigenspace decomposition of `ad h`. Every piece is spanned by basis vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Grading {
    weights: Vec<i64>,
    pieces: BTreeMap<i64, Vec<usize>>,
    local: Vec<usize>,
}

impl Grading {
    pub fn from_weights(weights: Vec<i64>) -> Self {
        let mut pieces: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        let mut local = vec![0; weights.len()];
        for (i, &w) in weights.iter().enumerate() {
            let p = pieces.entry(w).or_default();
            local[i] = p.len();
            p.push(i);
        }
        Grading { weights, pieces, local }
    }

    pub fn from_diagram(l: &LieAlgebra, d: &WeightedDynkinDiagram) -> Result<Self> {
        check_rank(l, d)?;
        let rs = l.root_system();
        let w = (0..l.dim())
            .map(|i| match l.root_of(i) {
                Some(r) => d.evaluate(&rs.coeffs(r)),
                None => 0,
            })
            .collect();
        Ok(Self::from_weights(w))
    }

    pub fn weight(&self, i: usize) -> i64 {
        self.weights[i]
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Basis indices spanning `g(k)`.
    pub fn indices(&self, k: i64) -> &[usize] {
        self.pieces.get(&k).map_or(&[], |v| v.as_slice())
    }

    pub fn dim(&self, k: i64) -> usize {
        self.indices(k).len()
    }

    /// Position of basis vector `i` inside its piece.
    pub fn local_index(&self, i: usize) -> usize {
        self.local[i]
    }

    /// Degrees with `g(k) != 0`, ascending.
    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.pieces.keys().copied()
    }

    pub fn piece(&self, k: i64) -> Subspace<Q> {
        let n = self.weights.len();
        Subspace::span(n, self.indices(k).iter().map(|&i| Element::<Q>::basis(n, i).coeffs))
    }

    /// Embeds local coordinates of `g(k)` into the whole algebra.
    pub fn embed<T: Field>(&self, k: i64, local: &[T]) -> Vec<T> {
        let mut v = vec![T::zero(); self.weights.len()];
        for (x, &i) in local.iter().zip(self.indices(k)) {
            v[i] = x.clone();
        }
        v
    }

    /// Local coordinates in `g(k)` of a vector known to lie in `g(k)`.
    pub fn restrict<T: Field>(&self, k: i64, v: &[T]) -> Vec<T> {
        self.indices(k).iter().map(|&i| v[i].clone()).collect()
    }

    /// The sl2 dimension pattern: `dim g(k)` non-increasing in `k >= 0` within each parity.
    pub fn has_sl2_shape(&self) -> bool {
        let max = self.pieces.keys().copied().max().unwrap_or(0);
        (0..=max).all(|k| self.dim(k) >= self.dim(k + 2))
    }
}

/// The grading by eigenvalues of `ad h`, for `h` in the Cartan subalgebra.
pub fn grading_from_h(l: &LieAlgebra, h: &Element<Q>) -> Result<Grading> {
    Ok(Grading::from_weights(l.integral_weights(h)?))
}

/// `(e, h, f)` with `[h, e] = 2e`, `[h, f] = -2f`, `[e, f] = h`.
#[derive(Clone, Debug, PartialEq)]
pub struct Sl2Triple {
    pub e: Element<Q>,
    pub h: Element<Q>,
    pub f: Element<Q>,
}

impl Sl2Triple {
    pub fn verify(&self, l: &LieAlgebra) -> Result<()> {
        let two = Q::from(2);
        if l.bracket(&self.h, &self.e)? != self.e.scale(&two) {
            return Err(Error::TripleRelation("[h, e] = 2e"));
        }
        if l.bracket(&self.h, &self.f)? != self.f.scale(&-two) {
            return Err(Error::TripleRelation("[h, f] = -2f"));
        }
        if l.bracket(&self.e, &self.f)? != self.h {
            return Err(Error::TripleRelation("[e, f] = h"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NilpotentOrbit {
    pub diagram: WeightedDynkinDiagram,
    pub triple: Sl2Triple,
    pub label: Option<String>,
}

impl NilpotentOrbit {
    pub fn grading(&self, l: &LieAlgebra) -> Result<Grading> {
        Grading::from_diagram(l, &self.diagram)
    }
}

/// Sparse `(index, coefficient)` view of a coordinate vector.
pub fn sparse<T: Field>(v: &[T]) -> Vec<(usize, &T)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
}

/// Matrix of `x -> [e, x]` from `g(from)` to `g(to)` in local coordinates:
/// column `j` is `[e, b_j]` for the `j`-th basis vector of `g(from)`.
pub fn ad_block<T: Field>(l: &LieAlgebra, g: &Grading, e: &[(usize, &T)], from: i64, to: i64) -> Matrix<T> {
    let src = g.indices(from);
    let dst = g.indices(to);
    let mut m = Matrix::<T>::zeros(dst.len(), src.len());
    for (j, &b) in src.iter().enumerate() {
        for &(a, c) in e {
            for &(k, n) in l.structure(a, b) {
                let k = k as usize;
                debug_assert_eq!(g.weight(k), to);
                let r = g.local_index(k);
                m[(r, j)] = m[(r, j)].clone() + c.clone() * T::from_i64(n);
            }
        }
    }
    m
}

/// `g_e(k) = ker(ad e : g(k) -> g(k+2))` for every degree, as local bases.
pub fn graded_centralizer(l: &LieAlgebra, g: &Grading, e: &Element<Q>) -> BTreeMap<i64, Matrix<Q>> {
    let es = sparse(&e.coeffs);
    g.degrees()
        .map(|k| {
            let block = ad_block(l, g, &es, k, k + 2);
            let ker = if block.rows() == 0 { Matrix::identity(g.dim(k)) } else { kernel(&block) };
            (k, ker)
        })
        .collect()
}

fn to_fp(q: &Q) -> Fp {
    let p = num_bigint::BigInt::from(Fp::MODULUS);
    let reduce = |v: num_bigint::BigInt| {
        let r = ((v % &p) + &p) % &p;
        Fp::new(r.to_u64().expect("residue fits"))
    };
    reduce(q.numer()) / reduce(q.denom())
}

fn rng_for(seed: u64, d: &WeightedDynkinDiagram, salt: u64) -> ChaCha8Rng {
    let code = d.labels.iter().fold(0u64, |acc, &v| acc * 3 + v as u64);
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ code.rotate_left(17) ^ salt)
}

/// Whether `[e, f] = h` is solvable with `f` in `g(-2)`, modulo p.
fn completable_mod_p(l: &LieAlgebra, g: &Grading, e: &[(usize, &Fp)], h: &[Fp]) -> Result<bool> {
    let a = ad_block(l, g, e, -2, 0);
    let rhs = g.restrict(0, h);
    Ok(solve(&a, &rhs)?.is_some())
}

/// Dynkin's criterion for `d` to be the diagram of a nilpotent orbit.
///
/// Each trial draws `e` in `g(2)` with coefficients in `1..=10^4`. A trial is
/// decisive once `[g(0), e] = g(2)`: then `d` is a characteristic exactly when
/// `[e, f] = h` has a solution `f` in `g(-2)`. Ranks are taken modulo the prime
/// `2^61 - 1`; full rank modulo p implies full rank over Q.
pub fn dynkin_test(l: &LieAlgebra, d: &WeightedDynkinDiagram, trials: usize, seed: u64) -> Result<bool> {
    if trials < 1 {
        return Err(Error::NoTrials);
    }
    let g = Grading::from_diagram(l, d)?;
    if d.is_zero() {
        return Ok(true);
    }
    if g.dim(2) == 0 || !g.has_sl2_shape() {
        return Ok(false);
    }
    let h: Vec<Fp> = Characteristic::new(l, d)?.h.coeffs.iter().map(to_fp).collect();
    let mut rng = rng_for(seed, d, 0);
    for _ in 0..trials {
        let coeffs: Vec<Fp> = g.indices(2).iter().map(|_| Fp::new(rng.gen_range(1..=10_000))).collect();
        let e: Vec<(usize, &Fp)> = g.indices(2).iter().copied().zip(&coeffs).collect();
        if rank(&ad_block(l, &g, &e, 0, 2)) < g.dim(2) {
            continue;
        }
        return completable_mod_p(l, &g, &e, &h);
    }
    Ok(false)
}

/// `[g(0), e]` rank modulo p for `e` the sum of the given basis vectors.
fn unit_sum_rank(l: &LieAlgebra, g: &Grading, support: &[usize]) -> usize {
    let one = Fp::new(1);
    let e: Vec<(usize, &Fp)> = support.iter().map(|&i| (i, &one)).collect();
    rank(&ad_block(l, g, &e, 0, 2))
}

/// A representative `e` in `g(2)` of the orbit with diagram `d`.
///
/// Tries sparse sums of root vectors with unit coefficients first, grown
/// greedily by the rank of `[g(0), e]`, then seeded random vectors with small
/// integer coefficients. Each candidate is confirmed by completing it to an
/// sl2-triple over Q.
pub fn find_representative(l: &LieAlgebra, d: &WeightedDynkinDiagram, seed: u64) -> Result<Element<Q>> {
    let g = Grading::from_diagram(l, d)?;
    if d.is_zero() {
        return Ok(Element::zero(l.dim()));
    }
    let h = Characteristic::new(l, d)?.h;
    let target = g.dim(2);
    let accept = |e: &Element<Q>| complete_triple(l, &h, e).is_ok();

    let mut chosen: Vec<usize> = Vec::new();
    let mut current = 0;
    while current < target {
        let best = g
            .indices(2)
            .iter()
            .filter(|i| !chosen.contains(i))
            .map(|&i| {
                let mut s = chosen.clone();
                s.push(i);
                (unit_sum_rank(l, &g, &s), i)
            })
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        match best {
            Some((r, i)) if r > current => {
                chosen.push(i);
                current = r;
            }
            _ => break,
        }
    }
    if current == target {
        chosen.sort_unstable();
        let mut e = Element::zero(l.dim());
        for &i in &chosen {
            e.coeffs[i] = Q::from(1);
        }
        if accept(&e) {
            return Ok(e);
        }
    }

    let mut rng = rng_for(seed, d, 1);
    for _ in 0..RANDOM_ATTEMPTS {
        let mut e = Element::zero(l.dim());
        for &i in g.indices(2) {
            e.coeffs[i] = Q::from(rng.gen_range(1..=10i64));
        }
        let fp: Vec<Fp> = e.coeffs.iter().map(to_fp).collect();
        if rank(&ad_block(l, &g, &sparse(&fp), 0, 2)) == target && accept(&e) {
            return Ok(e);
        }
    }
    Err(Error::RepresentativeNotFound { diagram: d.labels.clone(), attempts: RANDOM_ATTEMPTS + 1 })
}

/// Solves `[e, f] = h` for `f` in `g(-2)` and checks all triple relations exactly.
pub fn complete_triple(l: &LieAlgebra, h: &Element<Q>, e: &Element<Q>) -> Result<Sl2Triple> {
    let g = grading_from_h(l, h)?;
    if l.bracket(h, e)? != e.scale(&Q::from(2)) {
        return Err(Error::TripleRelation("[h, e] = 2e"));
    }
    let a = ad_block(l, &g, &sparse(&e.coeffs), -2, 0);
    let rhs = g.restrict(0, &h.coeffs);
    let Some(x) = solve(&a, &rhs)? else {
        return Err(Error::TripleNotCompletable(format!("{} equations in {} unknowns are inconsistent", a.rows(), a.cols())));
    };
    let f = Element::from_coeffs(g.embed(-2, &x));
    let t = Sl2Triple { e: e.clone(), h: h.clone(), f };
    t.verify(l)?;
    Ok(t)
}

/// Exact `dim g_e` from the graded kernels of `ad e`.
pub fn centralizer_dimension(l: &LieAlgebra, g: &Grading, e: &Element<Q>) -> usize {
    let es = sparse(&e.coeffs);
    g.degrees().map(|k| g.dim(k) - rank(&ad_block(l, g, &es, k, k + 2))).sum()
}

/// `dim g - dim g_e`.
pub fn orbit_dimension(l: &LieAlgebra, o: &NilpotentOrbit) -> Result<usize> {
    let g = o.grading(l)?;
    Ok(l.dim() - centralizer_dimension(l, &g, &o.triple.e))
}

/// All nonzero nilpotent orbits, sorted by orbit dimension then diagram.
pub fn enumerate_orbits(l: &LieAlgebra, seed: u64) -> Result<Vec<NilpotentOrbit>> {
    enumerate_orbits_with(l, seed, DEFAULT_TRIALS)
}

pub fn enumerate_orbits_with(l: &LieAlgebra, seed: u64, trials: usize) -> Result<Vec<NilpotentOrbit>> {
    if trials < 1 {
        return Err(Error::NoTrials);
    }
    let diagrams: Vec<WeightedDynkinDiagram> = WeightedDynkinDiagram::all(l.rank()).into_iter().filter(|d| !d.is_zero()).collect();
    let valid: Vec<WeightedDynkinDiagram> = diagrams
        .into_par_iter()
        .map(|d| dynkin_test(l, &d, trials, seed).map(|ok| ok.then_some(d)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut orbits: Vec<(usize, NilpotentOrbit)> = valid
        .into_par_iter()
        .map(|d| {
            let e = find_representative(l, &d, seed)?;
            let h = Characteristic::new(l, &d)?.h;
            let triple = complete_triple(l, &h, &e)?;
            let g = Grading::from_diagram(l, &d)?;
            let dim = l.dim() - g.dim(0) - g.dim(1);
            Ok((dim, NilpotentOrbit { diagram: d, triple, label: None }))
        })
        .collect::<Result<Vec<_>>>()?;
    orbits.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.diagram.cmp(&b.1.diagram)));
    Ok(orbits.into_iter().map(|(_, o)| o).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn alg(s: &str) -> LieAlgebra {
        LieAlgebra::new(s.parse().unwrap())
    }

    fn wdd(l: &LieAlgebra, v: &[i64]) -> WeightedDynkinDiagram {
        WeightedDynkinDiagram::new(l.rank(), v).unwrap()
    }

    #[test]
    fn diagram_validation() {
        assert!(WeightedDynkinDiagram::new(2, &[0, 3]).is_err());
        assert!(WeightedDynkinDiagram::new(2, &[0, 1, 0]).is_err());
        assert!(WeightedDynkinDiagram::parse(3, "0,x,1").is_err());
        let d = WeightedDynkinDiagram::parse(4, "0, 0 1,2").unwrap();
        assert_eq!(d.labels(), &[0, 0, 1, 2]);
        assert_eq!(d.to_string(), "0,0,1,2");
        assert_eq!(WeightedDynkinDiagram::all(3).len(), 27);
    }

    #[test]
    fn zero_h_single_piece() {
        let l = alg("G2");
        let g = grading_from_h(&l, &Element::zero(14)).unwrap();
        assert_eq!(g.degrees().collect::<Vec<_>>(), vec![0]);
        assert_eq!(g.dim(0), 14);
    }

    #[test]
    fn characteristic_realises_labels() {
        let l = alg("E7");
        let d = wdd(&l, &[0, 0, 0, 1, 0, 1, 0]);
        let ch = Characteristic::new(&l, &d).unwrap();
        let w = l.integral_weights(&ch.h).unwrap();
        for (x, &lab) in w.iter().zip(d.labels()) {
            assert_eq!(*x, lab as i64);
        }
        assert_eq!(grading_from_h(&l, &ch.h).unwrap(), Grading::from_diagram(&l, &d).unwrap());
    }

    #[test]
    fn grading_symmetric() {
        let l = alg("G2");
        let g = Grading::from_diagram(&l, &wdd(&l, &[1, 0])).unwrap();
        let total: usize = g.degrees().map(|k| g.dim(k)).sum();
        assert_eq!(total, 14);
        for k in g.degrees() {
            assert_eq!(g.dim(k), g.dim(-k));
        }
    }

    #[test]
    fn non_integral_h_rejected() {
        let l = alg("A2");
        let mut h = Element::<Q>::zero(8);
        h.coeffs[l.cartan_index(0)] = Q::new(1, 3);
        assert!(matches!(grading_from_h(&l, &h), Err(Error::NonIntegralGrading(_))));
    }

    #[test]
    fn dynkin_test_basics() {
        let l = alg("G2");
        assert!(dynkin_test(&l, &wdd(&l, &[0, 0]), 1, 1).unwrap());
        assert!(!dynkin_test(&l, &wdd(&l, &[1, 1]), 25, 1).unwrap());
        assert!(dynkin_test(&l, &wdd(&l, &[2, 2]), 25, 1).unwrap());
        assert!(matches!(dynkin_test(&l, &wdd(&l, &[2, 2]), 0, 1), Err(Error::NoTrials)));
    }

    #[test]
    fn g2_classification() {
        let l = alg("G2");
        let orbits = enumerate_orbits(&l, 1).unwrap();
        let ds: Vec<Vec<u8>> = orbits.iter().map(|o| o.diagram.labels().to_vec()).collect();
        assert_eq!(ds, vec![vec![0, 1], vec![1, 0], vec![0, 2], vec![2, 2]]);
        let dims: Vec<usize> = orbits.iter().map(|o| orbit_dimension(&l, o).unwrap()).collect();
        assert_eq!(dims, vec![6, 8, 10, 12]);
    }

    #[test]
    fn regular_representative_is_sum_of_simple_root_vectors() {
        let l = alg("F4");
        let d = wdd(&l, &[2, 2, 2, 2]);
        let e = find_representative(&l, &d, 1).unwrap();
        assert_eq!(e.support(), vec![0, 1, 2, 3]);
        assert!(e.coeffs[..4].iter().all(|c| *c == Q::from(1)));
    }

    #[test]
    fn zero_diagram_representative() {
        let l = alg("G2");
        assert!(find_representative(&l, &wdd(&l, &[0, 0]), 1).unwrap().is_zero());
    }

    #[test]
    fn triple_in_root_sl2() {
        let l = alg("A2");
        let rs = l.root_system();
        let e = Element::<Q>::basis(8, 0);
        let mut h = Element::zero(8);
        for (k, c) in rs.coroot(0).into_iter().enumerate() {
            h.coeffs[l.cartan_index(k)] = Q::from(c);
        }
        let t = complete_triple(&l, &h, &e).unwrap();
        assert_eq!(t.f.support(), vec![rs.negate(0)]);
    }

    #[test]
    fn bad_triple_rejected() {
        let l = alg("G2");
        // (1,1) is not a characteristic: no e in g(2) completes
        let d = wdd(&l, &[1, 1]);
        let h = Characteristic::new(&l, &d).unwrap().h;
        let g = Grading::from_diagram(&l, &d).unwrap();
        let mut e = Element::zero(14);
        for &i in g.indices(2) {
            e.coeffs[i] = Q::from(1);
        }
        assert!(complete_triple(&l, &h, &e).is_err());
    }

    /// Diagrams of sl_n from partitions of n: `h` has eigenvalues
    /// `p-1, p-3, ..., 1-p` for each part `p`, sorted decreasingly.
    fn partition_diagrams(n: usize) -> BTreeSet<Vec<u8>> {
        fn parts(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if n == 0 {
                out.push(cur.clone());
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                parts(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut all = Vec::new();
        parts(n, n, &mut Vec::new(), &mut all);
        all.into_iter()
            .filter(|p| p.len() < n)
            .map(|p| {
                let mut ev: Vec<i64> = p.iter().flat_map(|&k| (0..k).map(move |j| k as i64 - 1 - 2 * j as i64)).collect();
                ev.sort_unstable_by(|a, b| b.cmp(a));
                ev.windows(2).map(|w| (w[0] - w[1]) as u8).collect()
            })
            .collect()
    }

    #[test]
    fn type_a_matches_partitions() {
        for n in [3usize, 4, 5] {
            let l = alg(&format!("A{}", n - 1));
            let got: BTreeSet<Vec<u8>> = enumerate_orbits(&l, 7).unwrap().iter().map(|o| o.diagram.labels().to_vec()).collect();
            assert_eq!(got, partition_diagrams(n), "A{}", n - 1);
        }
        assert_eq!(partition_diagrams(3).len(), 2);
    }
}
