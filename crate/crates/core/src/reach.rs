//! Reachability, strong reachability, the Panyushev property and the
//! quotient `c_e = g_e / [g_e, g_e]` for nilpotent orbits.
//!
//! Everything is computed degree by degree in the grading of `h`: `g_e` is the
//! sum of `g_e(k) = g_e ∩ g(k)` over `k >= 0`, and `[g_e, g_e](m)` is spanned by
//! the brackets `[g_e(i), g_e(j)]` with `i + j = m`.

use crate::error::{Error, Result};
use crate::exactla::EchelonBasis;
use crate::liealg::LieAlgebra;
use crate::orbits::{enumerate_orbits_with, graded_centralizer, Grading, NilpotentOrbit, WeightedDynkinDiagram, DEFAULT_TRIALS};
use num_traits::Zero;
use crate::Q;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

/// Per-degree dimensions: `g(k)`, `g_e(k)` and `[g_e, g_e](k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDims {
    pub degree: i64,
    pub dim_g: usize,
    pub dim_ge: usize,
    pub dim_derived: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OrbitAnalysis {
    pub orbit: NilpotentOrbit,
    pub orbit_dim: usize,
    pub dim_ge: usize,
    pub dim_derived: usize,
    pub reachable: bool,
    pub strongly_reachable: bool,
    pub panyushev_generated: bool,
    /// Dimension of the subalgebra generated by `g(1)_e`.
    pub dim_generated: usize,
    pub dim_ce: usize,
    /// `ad h` eigenvalues on `c_e`, ascending.
    pub ce_weights: Vec<i64>,
    pub graded: Vec<GradedDims>,
}

impl OrbitAnalysis {
    pub fn degree(&self, k: i64) -> Option<&GradedDims> {
        self.graded.iter().find(|g| g.degree == k)
    }

    /// `g_e = [g_e, g_e] + span{e}` with `e` outside the derived algebra.
    pub fn e_spans_quotient(&self) -> bool {
        !self.reachable && self.dim_ce == 1 && self.ce_weights == [2]
    }

    /// `dim g(≥1)_e`.
    pub fn dim_ge_positive(&self) -> usize {
        self.graded.iter().filter(|g| g.degree >= 1).map(|g| g.dim_ge).sum()
    }
}

/// Basis vectors of one graded piece, kept both as an echelon basis in local
/// coordinates and as sparse vectors of the whole algebra.
struct Piece {
    degree: i64,
    basis: EchelonBasis<Q>,
    sparse: Vec<Vec<(usize, Q)>>,
}

impl Piece {
    fn new(degree: i64, dim: usize) -> Self {
        Piece { degree, basis: EchelonBasis::new(dim), sparse: Vec::new() }
    }

    fn insert(&mut self, g: &Grading, local: Vec<Q>) -> bool {
        let global: Vec<(usize, Q)> = g
            .indices(self.degree)
            .iter()
            .zip(&local)
            .filter(|(_, x)| !x.is_zero())
            .map(|(&i, x)| (i, x.clone()))
            .collect();
        if self.basis.insert(local) {
            self.sparse.push(global);
            true
        } else {
            false
        }
    }

    fn dim(&self) -> usize {
        self.basis.rank()
    }
}

/// `[a, b]` in local coordinates of `g(m)`.
fn bracket_local(l: &LieAlgebra, g: &Grading, m: i64, a: &[(usize, Q)], b: &[(usize, Q)], buf: &mut [Q]) -> Vec<Q> {
    let ra: Vec<(usize, &Q)> = a.iter().map(|(i, x)| (*i, x)).collect();
    let rb: Vec<(usize, &Q)> = b.iter().map(|(i, x)| (*i, x)).collect();
    buf.iter_mut().for_each(|x| *x = Q::ZERO);
    l.bracket_sparse_into(&ra, &rb, buf);
    g.restrict(m, buf)
}

/// Reachability data for one orbit.
pub fn analyze(l: &LieAlgebra, o: &NilpotentOrbit) -> Result<OrbitAnalysis> {
    let g = o.grading(l)?;
    let e = &o.triple.e;
    let mut ge: BTreeMap<i64, Piece> = BTreeMap::new();
    for (k, ker) in graded_centralizer(l, &g, e) {
        if ker.rows() == 0 {
            continue;
        }
        if k < 0 {
            return Err(Error::TripleRelation("g_e has a component of negative degree"));
        }
        let mut p = Piece::new(k, g.dim(k));
        for row in ker.into_rows() {
            p.insert(&g, row);
        }
        ge.insert(k, p);
    }
    let mut buf = vec![Q::ZERO; l.dim()];
    let degrees: Vec<i64> = ge.keys().copied().collect();
    let max = degrees.last().copied().unwrap_or(0);

    // [g_e, g_e], with the subalgebra property of g_e checked on every bracket
    let mut derived: BTreeMap<i64, Piece> = BTreeMap::new();
    for m in 0..=max {
        let Some(target) = ge.get(&m) else { continue };
        let mut d = Piece::new(m, g.dim(m));
        for &i in degrees.iter().filter(|&&i| 2 * i <= m) {
            let j = m - i;
            let (Some(pi), Some(pj)) = (ge.get(&i), ge.get(&j)) else { continue };
            for (ai, a) in pi.sparse.iter().enumerate() {
                let start = if i == j { ai + 1 } else { 0 };
                for b in &pj.sparse[start..] {
                    let v = bracket_local(l, &g, m, a, b, &mut buf);
                    if d.dim() == target.dim() {
                        if !d.basis.contains(&v) {
                            return Err(Error::NotASubalgebra(i as usize, j as usize));
                        }
                    } else {
                        if !target.basis.contains(&v) {
                            return Err(Error::NotASubalgebra(i as usize, j as usize));
                        }
                        d.insert(&g, v);
                    }
                }
            }
        }
        derived.insert(m, d);
    }

    // subalgebra generated by g(1)_e: degree m is [g(1)_e, A(m-1)]
    let mut generated: BTreeMap<i64, Piece> = BTreeMap::new();
    if let Some(g1) = ge.get(&1) {
        let mut a1 = Piece::new(1, g.dim(1));
        for v in g1.basis.rows() {
            a1.insert(&g, v.clone());
        }
        generated.insert(1, a1);
        for m in 2..=max {
            let prev = &generated[&(m - 1)];
            let mut am = Piece::new(m, g.dim(m));
            let full = ge.get(&m).map_or(0, |p| p.dim());
            'fill: for a in &generated[&1].sparse {
                for b in &prev.sparse {
                    if am.dim() == full {
                        break 'fill;
                    }
                    let v = bracket_local(l, &g, m, a, b, &mut buf);
                    am.insert(&g, v);
                }
            }
            if am.dim() == 0 {
                break;
            }
            generated.insert(m, am);
        }
    }

    let e_local = g.restrict(2, &e.coeffs);
    let reachable = !e.is_zero() && derived.get(&2).is_some_and(|d| d.basis.contains(&e_local));
    let mut graded = Vec::new();
    let mut ce_weights = Vec::new();
    for (&k, p) in &ge {
        let dd = derived.get(&k).map_or(0, |d| d.dim());
        ce_weights.extend(std::iter::repeat_n(k, p.dim() - dd));
        graded.push(GradedDims { degree: k, dim_g: g.dim(k), dim_ge: p.dim(), dim_derived: dd });
    }
    let dim_ge: usize = ge.values().map(|p| p.dim()).sum();
    let dim_derived: usize = derived.values().map(|p| p.dim()).sum();
    let dim_generated: usize = generated.values().map(|p| p.dim()).sum();
    let dim_positive: usize = ge.iter().filter(|(&k, _)| k >= 1).map(|(_, p)| p.dim()).sum();
    Ok(OrbitAnalysis {
        orbit: o.clone(),
        orbit_dim: l.dim() - dim_ge,
        dim_ge,
        dim_derived,
        reachable,
        strongly_reachable: dim_derived == dim_ge,
        panyushev_generated: dim_generated == dim_positive,
        dim_generated,
        dim_ce: dim_ge - dim_derived,
        ce_weights,
        graded,
    })
}

/// Analyses of every nonzero orbit, in enumeration order.
pub fn analyze_all(l: &LieAlgebra, seed: u64) -> Result<Vec<OrbitAnalysis>> {
    analyze_all_with(l, seed, DEFAULT_TRIALS)
}

pub fn analyze_all_with(l: &LieAlgebra, seed: u64, trials: usize) -> Result<Vec<OrbitAnalysis>> {
    let orbits = enumerate_orbits_with(l, seed, trials)?;
    orbits.par_iter().map(|o| analyze(l, o)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReachableRow {
    pub diagram: WeightedDynkinDiagram,
    pub reachable: bool,
    pub strongly_reachable: bool,
}

/// The reachable orbits, in enumeration order.
pub fn reachable_table(l: &LieAlgebra, seed: u64) -> Result<Vec<ReachableRow>> {
    Ok(reachable_rows(&analyze_all(l, seed)?))
}

pub fn reachable_rows(analyses: &[OrbitAnalysis]) -> Vec<ReachableRow> {
    analyses
        .iter()
        .filter(|a| a.reachable)
        .map(|a| ReachableRow {
            diagram: a.orbit.diagram.clone(),
            reachable: true,
            strongly_reachable: a.strongly_reachable,
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidDiscrepancy {
    pub diagram: WeightedDynkinDiagram,
    pub dim_ge: usize,
    pub dim_derived: usize,
    pub e_spans_quotient: bool,
}

/// Rigid orbits that are not strongly reachable, with `(dim g_e, dim [g_e, g_e])`.
///
/// `rigid` maps each diagram to its rigidity flag; every analysed diagram must be present.
pub fn rigid_discrepancy_report(
    analyses: &[OrbitAnalysis],
    rigid: &BTreeMap<Vec<u8>, bool>,
) -> Result<Vec<RigidDiscrepancy>> {
    let mut out = Vec::new();
    for a in analyses {
        let d = a.orbit.diagram.labels();
        let Some(&is_rigid) = rigid.get(d) else {
            return Err(Error::RefData(format!("no rigidity flag for diagram {}", a.orbit.diagram)));
        };
        if is_rigid && !a.strongly_reachable {
            out.push(RigidDiscrepancy {
                diagram: a.orbit.diagram.clone(),
                dim_ge: a.dim_ge,
                dim_derived: a.dim_derived,
                e_spans_quotient: a.e_spans_quotient(),
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{Element, Subspace};
    use crate::orbits::enumerate_orbits;

    fn alg(s: &str) -> LieAlgebra {
        LieAlgebra::new(s.parse().unwrap())
    }

    #[test]
    fn g2_analyses() {
        let l = alg("G2");
        let a = analyze_all(&l, 1).unwrap();
        #[allow(clippy::type_complexity)]
        let summary: Vec<(Vec<u8>, usize, usize, bool, Vec<i64>)> = a
            .iter()
            .map(|x| (x.orbit.diagram.labels().to_vec(), x.dim_ge, x.dim_derived, x.reachable, x.ce_weights.clone()))
            .collect();
        assert_eq!(
            summary,
            vec![
                (vec![0, 1], 8, 8, true, vec![]),
                (vec![1, 0], 6, 5, false, vec![2]),
                (vec![0, 2], 4, 1, false, vec![2, 2, 2]),
                (vec![2, 2], 2, 0, false, vec![2, 10]),
            ]
        );
    }

    /// The graded computation agrees with the ungraded subspace calculus.
    #[test]
    fn graded_matches_direct_f4() {
        let l = alg("F4");
        for o in enumerate_orbits(&l, 3).unwrap() {
            let a = analyze(&l, &o).unwrap();
            let ge = l.centralizer(&o.triple.e).unwrap();
            let d = l.derived_subalgebra(&ge).unwrap();
            assert_eq!((ge.dim(), d.dim()), (a.dim_ge, a.dim_derived), "{}", o.diagram);
            assert_eq!(d.contains(&o.triple.e), a.reachable);
            let (dim, w) = l.quotient_with_action(&ge, &d, &o.triple.h).unwrap();
            assert_eq!((dim, w), (a.dim_ce, a.ce_weights.clone()));
            // closure of g(1)_e, ungraded
            let g = o.grading(&l).unwrap();
            let g1 = g.piece(1).intersect(&ge).unwrap();
            let clo = l.subalgebra_closure(&g1.basis_elements(), Some(&ge)).unwrap();
            assert_eq!(clo.dim(), a.dim_generated);
            let positive = Subspace::span(l.dim(), g.degrees().filter(|&k| k >= 1).flat_map(|k| g.indices(k).to_vec()).map(|i| Element::<Q>::basis(l.dim(), i).coeffs));
            assert_eq!(positive.intersect(&ge).unwrap().dim(), a.dim_ge_positive());
        }
    }
}
