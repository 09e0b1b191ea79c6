//! Root systems of the simple Lie algebras and Chevalley structure constants.
//!
//! Simple roots are numbered as in Bourbaki. The Cartan matrix is stored as
//! `cartan[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)`.
//!
//! Roots are identified by a [`RootId`]: ids `0..n` are the positive roots in
//! their canonical order, ids `n..2n` their negatives in the same order.

use crate::error::{Error, Result};
use crate::scalar::Field;
use num_rational::Ratio;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::B => 'B',
            Letter::C => 'C',
            Letter::D => 'D',
            Letter::E => 'E',
            Letter::F => 'F',
            Letter::G => 'G',
        }
    }
}

/// Cartan type, e.g. `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeRank {
    letter: Letter,
    rank: usize,
}

impl TypeRank {
    pub fn new(letter: Letter, rank: usize) -> Result<TypeRank> {
        let ok = match letter {
            Letter::A => rank >= 1,
            Letter::B => rank >= 2,
            Letter::C => rank >= 3,
            Letter::D => rank >= 4,
            Letter::E => (6..=8).contains(&rank),
            Letter::F => rank == 4,
            Letter::G => rank == 2,
        };
        if ok {
            Ok(TypeRank { letter, rank })
        } else {
            Err(Error::InadmissibleType { letter: letter.as_char(), rank })
        }
    }

    pub fn letter(&self) -> Letter {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The five exceptional types, smallest first.
    pub fn exceptional() -> [TypeRank; 5] {
        [
            TypeRank { letter: Letter::G, rank: 2 },
            TypeRank { letter: Letter::F, rank: 4 },
            TypeRank { letter: Letter::E, rank: 6 },
            TypeRank { letter: Letter::E, rank: 7 },
            TypeRank { letter: Letter::E, rank: 8 },
        ]
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(self.letter, Letter::E | Letter::F | Letter::G)
    }

    /// Cartan matrix in Bourbaki numbering.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match self.letter {
            Letter::A | Letter::B | Letter::C => {
                for i in 1..n {
                    link(i - 1, i);
                }
            }
            Letter::D => {
                for i in 1..n - 1 {
                    link(i - 1, i);
                }
                link(n - 3, n - 1);
            }
            Letter::E => {
                link(0, 2);
                link(1, 3);
                for i in 3..n {
                    link(i - 1, i);
                }
            }
            Letter::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Letter::G => link(0, 1),
        }
        match self.letter {
            // alpha_n short
            Letter::B => c[n - 2][n - 1] = -2,
            // alpha_n long
            Letter::C => c[n - 1][n - 2] = -2,
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            Letter::F => c[1][2] = -2,
            // alpha_1 short, alpha_2 long
            Letter::G => c[1][0] = -3,
            _ => {}
        }
        c
    }
}

impl fmt::Display for TypeRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter.as_char(), self.rank)
    }
}

impl FromStr for TypeRank {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Letter::A,
            Some('B') => Letter::B,
            Some('C') => Letter::C,
            Some('D') => Letter::D,
            Some('E') => Letter::E,
            Some('F') => Letter::F,
            Some('G') => Letter::G,
            _ => return Err(Error::BadTypeName(s.to_string())),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| Error::BadTypeName(s.to_string()))?;
        TypeRank::new(letter, rank)
    }
}

/// A root written in the basis of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Root {
        Root { coeffs }
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn neg(&self) -> Root {
        Root { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().any(|&c| c > 0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub type RootId = usize;

#[derive(Debug, Clone)]
pub struct RootSystem {
    type_rank: TypeRank,
    cartan: Vec<Vec<i64>>,
    /// `(alpha_i, alpha_j)`, normalised so that short roots have length 2.
    form: Vec<Vec<i64>>,
    positive: Vec<Root>,
    index: HashMap<Vec<i64>, RootId>,
    /// `sum[r * 2n + s]`: id of `r + s` when it is a root.
    sum: Vec<Option<RootId>>,
    /// `N(r, s)` for all root pairs, zero when `r + s` is not a root.
    structconsts: Vec<i64>,
}

impl RootSystem {
    pub fn new(t: TypeRank) -> RootSystem {
        let cartan = t.cartan_matrix();
        let form = symmetrised_form(&cartan);
        let positive = positive_roots(&cartan);
        let n = positive.len();
        let mut index = HashMap::with_capacity(2 * n);
        for (i, r) in positive.iter().enumerate() {
            index.insert(r.coeffs.clone(), i);
            index.insert(r.neg().coeffs, i + n);
        }
        let mut rs = RootSystem {
            type_rank: t,
            cartan,
            form,
            positive,
            index,
            sum: Vec::new(),
            structconsts: Vec::new(),
        };
        rs.sum = (0..4 * n * n)
            .map(|k| {
                let (r, s) = (k / (2 * n), k % (2 * n));
                let c: Vec<i64> =
                    rs.coeffs(r).iter().zip(rs.coeffs(s)).map(|(a, b)| a + b).collect();
                rs.index.get(&c).copied()
            })
            .collect();
        rs.structconsts = chevalley_constants(&rs);
        rs
    }

    pub fn type_rank(&self) -> TypeRank {
        self.type_rank
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn num_roots(&self) -> usize {
        2 * self.positive.len()
    }

    pub fn is_positive(&self, r: RootId) -> bool {
        r < self.positive.len()
    }

    pub fn negate(&self, r: RootId) -> RootId {
        let n = self.positive.len();
        if r < n {
            r + n
        } else {
            r - n
        }
    }

    /// Coordinates over the simple roots.
    pub fn coeffs(&self, r: RootId) -> Vec<i64> {
        let n = self.positive.len();
        if r < n {
            self.positive[r].coeffs.clone()
        } else {
            self.positive[r - n].neg().coeffs
        }
    }

    pub fn root(&self, r: RootId) -> Root {
        Root::new(self.coeffs(r))
    }

    pub fn id_of(&self, root: &Root) -> Option<RootId> {
        self.index.get(&root.coeffs).copied()
    }

    pub fn simple_root(&self, i: usize) -> RootId {
        i
    }

    pub fn height(&self, r: RootId) -> i64 {
        self.coeffs(r).iter().sum()
    }

    pub fn sum(&self, r: RootId, s: RootId) -> Option<RootId> {
        self.sum[r * self.num_roots() + s]
    }

    /// `(alpha, beta)` for coefficient vectors.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                acc += x * y * self.form[i][j];
            }
        }
        acc
    }

    pub fn norm(&self, r: RootId) -> i64 {
        let c = self.coeffs(r);
        self.inner(&c, &c)
    }

    /// `<alpha, alpha_i^vee>` for the root with coefficients `a`.
    pub fn pairing(&self, a: &[i64], i: usize) -> i64 {
        a.iter().zip(&self.cartan).map(|(x, row)| x * row[i]).sum()
    }

    /// The coroot of `r` written in the simple coroots `alpha_i^vee`.
    pub fn coroot(&self, r: RootId) -> Vec<i64> {
        let c = self.coeffs(r);
        let len = self.norm(r);
        c.iter()
            .enumerate()
            .map(|(i, &x)| {
                let v = x * self.form[i][i];
                debug_assert_eq!(v % len, 0);
                v / len
            })
            .collect()
    }

    /// `N(r, s)` by root id; zero when `r + s` is not a root (including `r + s = 0`).
    pub fn n(&self, r: RootId, s: RootId) -> i64 {
        self.structconsts[r * self.num_roots() + s]
    }

    /// `N(a, b)` for roots given by coefficients.
    pub fn structure_constant(&self, a: &Root, b: &Root) -> Result<i64> {
        let ra = self.id_of(a).ok_or_else(|| Error::NotARoot(a.to_string()))?;
        let rb = self.id_of(b).ok_or_else(|| Error::NotARoot(b.to_string()))?;
        Ok(self.n(ra, rb))
    }

    /// The W-conjugate of a Cartan element with `alpha_i(h) >= 0` for all `i`.
    ///
    /// `values[i]` is `alpha_i(h)`. A simple reflection acts by
    /// `alpha_j(s_i h) = alpha_j(h) - alpha_i(h) <alpha_j, alpha_i^vee>`.
    pub fn dominant_weyl_representative<T: Field + PartialOrd>(&self, values: &[T]) -> Vec<T> {
        let mut v = values.to_vec();
        while let Some(i) = v.iter().position(|x| *x < T::zero()) {
            v = self.reflect_values(&v, i);
        }
        v
    }

    /// Applies the simple reflection `s_i` to `h`, given as its simple-root values.
    pub fn reflect_values<T: Field>(&self, values: &[T], i: usize) -> Vec<T> {
        let a = values[i].clone();
        values
            .iter()
            .enumerate()
            .map(|(j, x)| x.clone() - a.clone() * T::from_i64(self.cartan[j][i]))
            .collect()
    }
}

/// Positive roots ordered by height, ties by descending lexicographic order
/// of the coefficients (so the simple roots come first, as `alpha_1, ..., alpha_n`).
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let mut all: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut known: std::collections::HashSet<Vec<i64>> = all.iter().cloned().collect();
    let mut layer = all.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // p: how far down the alpha_i-string through beta goes
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = beta.iter().zip(cartan).map(|(b, row)| b * row[i]).sum();
                let q = p - pairing;
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.sort_by(|a, b| {
        let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    all.into_iter().map(Root::new).collect()
}

fn symmetrised_form(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    // squared lengths d_i with cartan[i][j] d_j = cartan[j][i] d_i
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    d[0] = Some(Ratio::from_integer(1));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                d[j] = Some(d[i].unwrap() * Ratio::new(cartan[j][i], cartan[i][j]));
                stack.push(j);
            }
        }
    }
    let d: Vec<Ratio<i64>> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let min = *d.iter().min().unwrap();
    let lengths: Vec<i64> = d.iter().map(|x| (*x / min * 2).to_integer()).collect();
    (0..n)
        .map(|i| (0..n).map(|j| cartan[i][j] * lengths[j] / 2).collect())
        .collect()
}

/// Structure constants for a Chevalley basis.
///
/// For each positive non-simple root `xi`, the extraspecial pair `(gamma, delta)`
/// has `gamma` the simple root of smallest index with `xi - gamma` a root, and
/// `N(gamma, delta) = p + 1 > 0`. Every other constant follows from the
/// standard relations
///
/// * `N(a, b) = -N(b, a)`, `N(-a, -b) = -N(a, b)`,
/// * `N(a, b) / (c, c) = N(b, c) / (a, a) = N(c, a) / (b, b)` when `a + b + c = 0`,
/// * the four-root relation for `a + b + c + d = 0` with no opposite pair.
fn chevalley_constants(rs: &RootSystem) -> Vec<i64> {
    let n = rs.num_positive();
    let m = 2 * n;
    let mut table = vec![0i64; m * m];
    let q = |v: i64| Ratio::from_integer(v);

    // N for a pair of arbitrary roots whose sum is a root of height below the
    // one currently being filled; only positive-pair entries are read.
    fn mixed(rs: &RootSystem, table: &[i64], a: RootId, b: RootId) -> Ratio<i64> {
        let m = rs.num_roots();
        let Some(c) = rs.sum(a, b) else { return Ratio::from_integer(0) };
        let (pa, pb) = (rs.is_positive(a), rs.is_positive(b));
        match (pa, pb) {
            (true, true) => Ratio::from_integer(table[a * m + b]),
            (false, false) => -mixed(rs, table, rs.negate(a), rs.negate(b)),
            (false, true) => -mixed(rs, table, b, a),
            (true, false) => {
                let norm = |r| Ratio::from_integer(rs.norm(r));
                if rs.is_positive(c) {
                    // (-a) + (-b) + c = 0, with -b, c positive and -b + c = a
                    let nbc = mixed(rs, table, rs.negate(b), c);
                    -(norm(c) / norm(a)) * nbc
                } else {
                    // a + b + (-c) = 0, with -c, a positive and -c + a = -b
                    let nca = mixed(rs, table, rs.negate(c), a);
                    norm(c) / norm(b) * nca
                }
            }
        }
    }

    let rank = rs.rank();
    for xi in rank..n {
        let xc = rs.coeffs(xi);
        let gamma = (0..rank)
            .find(|&i| {
                let mut c = xc.clone();
                c[i] -= 1;
                rs.index.get(&c).is_some_and(|&r| r < n)
            })
            .expect("non-simple positive root has a simple summand");
        let delta = rs.index[&{
            let mut c = xc.clone();
            c[gamma] -= 1;
            c
        }];
        let p = string_down(rs, gamma, delta);
        table[gamma * m + delta] = p + 1;
        table[delta * m + gamma] = -(p + 1);
        let xi_norm = q(rs.norm(xi));
        let n_gd = q(p + 1);
        for alpha in 0..n {
            let Some(beta) = rs.sum(xi, rs.negate(alpha)) else { continue };
            if beta >= n || alpha >= beta || alpha == gamma || alpha == delta {
                continue;
            }
            let (ng, nd) = (rs.negate(gamma), rs.negate(delta));
            let mut acc = q(0);
            if let Some(s) = rs.sum(beta, ng) {
                let t = mixed(rs, &table, beta, ng) * mixed(rs, &table, alpha, nd);
                acc += t / q(rs.norm(s));
            }
            if let Some(s) = rs.sum(alpha, ng) {
                let t = mixed(rs, &table, ng, alpha) * mixed(rs, &table, beta, nd);
                acc += t / q(rs.norm(s));
            }
            let v = xi_norm * acc / n_gd;
            assert!(v.is_integer(), "non-integral structure constant");
            let v = v.to_integer();
            table[alpha * m + beta] = v;
            table[beta * m + alpha] = -v;
        }
    }
    // extend to pairs involving negative roots
    let pos = table.clone();
    for a in 0..m {
        for b in 0..m {
            if rs.is_positive(a) && rs.is_positive(b) {
                continue;
            }
            let v = mixed(rs, &pos, a, b);
            assert!(v.is_integer(), "non-integral structure constant");
            table[a * m + b] = v.to_integer();
        }
    }
    table
}

/// Largest `p` with `b - p a` a root.
fn string_down(rs: &RootSystem, a: RootId, b: RootId) -> i64 {
    let na = rs.negate(a);
    let mut cur = b;
    let mut p = 0;
    while let Some(next) = rs.sum(cur, na) {
        p += 1;
        cur = next;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn positive_root_counts() {
        for (t, n) in [("G2", 6), ("F4", 24), ("E6", 36), ("E7", 63), ("E8", 120), ("A2", 3), ("B3", 9), ("C3", 9), ("D4", 12)] {
            assert_eq!(rs(t).num_positive(), n, "{t}");
        }
    }

    #[test]
    fn inadmissible_types_rejected() {
        for s in ["E5", "E9", "F3", "G3", "D3", "B1", "A0", "H3", "E", ""] {
            assert!(s.parse::<TypeRank>().is_err(), "{s}");
        }
    }

    #[test]
    fn simple_roots_first_and_ordering() {
        for t in ["G2", "F4", "E8", "B4"] {
            let r = rs(t);
            for i in 0..r.rank() {
                let mut e = vec![0; r.rank()];
                e[i] = 1;
                assert_eq!(r.positive_roots()[i].coeffs, e);
            }
            let hs: Vec<i64> = r.positive_roots().iter().map(|x| x.height()).collect();
            assert!(hs.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn highest_roots() {
        let hi = |t: &str| rs(t).positive_roots().last().unwrap().coeffs.clone();
        assert_eq!(hi("G2"), vec![3, 2]);
        assert_eq!(hi("F4"), vec![2, 3, 4, 2]);
        assert_eq!(hi("E6"), vec![1, 2, 2, 3, 2, 1]);
        assert_eq!(hi("E7"), vec![2, 2, 3, 4, 3, 2, 1]);
        assert_eq!(hi("E8"), vec![2, 3, 4, 6, 5, 4, 3, 2]);
    }

    #[test]
    fn closed_under_addition() {
        for t in ["G2", "F4", "E6"] {
            let r = rs(t);
            let n = r.num_positive();
            for a in 0..n {
                for b in 0..n {
                    let c: Vec<i64> = r.coeffs(a).iter().zip(r.coeffs(b)).map(|(x, y)| x + y).collect();
                    let is_root = r.id_of(&Root::new(c)).is_some();
                    assert_eq!(is_root, r.sum(a, b).is_some());
                }
            }
        }
    }

    #[test]
    fn root_strings_unbroken() {
        for t in ["G2", "F4", "E7"] {
            let r = rs(t);
            let m = r.num_roots();
            for a in 0..m {
                for b in 0..m {
                    if b == a || b == r.negate(a) {
                        continue;
                    }
                    let ks: Vec<i64> = (-4..=4)
                        .filter(|&k| {
                            let c: Vec<i64> =
                                r.coeffs(b).iter().zip(r.coeffs(a)).map(|(y, x)| y + k * x).collect();
                            r.id_of(&Root::new(c)).is_some()
                        })
                        .collect();
                    assert!(ks.windows(2).all(|w| w[1] == w[0] + 1), "{t}: broken string");
                }
            }
        }
    }

    #[test]
    fn structure_constants_antisymmetric_and_bounded() {
        for t in ["G2", "F4", "B3", "C3", "E6"] {
            let r = rs(t);
            let m = r.num_roots();
            for a in 0..m {
                for b in 0..m {
                    let v = r.n(a, b);
                    assert_eq!(v, -r.n(b, a));
                    if r.sum(a, b).is_some() {
                        // |N(a, b)| = p + 1
                        let p = string_down(&r, a, b);
                        assert_eq!(v.abs(), p + 1, "{t}");
                        assert!((1..=3).contains(&v.abs()));
                    } else {
                        assert_eq!(v, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn structure_constants_sampled_e8() {
        let r = rs("E8");
        let m = r.num_roots();
        for a in (0..m).step_by(7) {
            for b in 0..m {
                assert_eq!(r.n(a, b), -r.n(b, a));
                assert_eq!(r.n(a, b) != 0, r.sum(a, b).is_some());
                assert!(r.n(a, b).abs() <= 1);
            }
        }
    }

    #[test]
    fn structure_constant_examples() {
        let a2 = rs("A2");
        let (a1, a2r) = (Root::new(vec![1, 0]), Root::new(vec![0, 1]));
        assert_eq!(a2.structure_constant(&a1, &a2r).unwrap().abs(), 1);
        let g2 = rs("G2");
        // 3a1+2a2 plus a2 exceeds the highest root
        let top = Root::new(vec![3, 2]);
        assert_eq!(g2.structure_constant(&top, &Root::new(vec![0, 1])).unwrap(), 0);
        assert_eq!(g2.structure_constant(&top, &top.neg()).unwrap(), 0);
        assert!(g2.structure_constant(&Root::new(vec![2, 2]), &top).is_err());
    }

    #[test]
    fn coroots_pair_to_two() {
        for t in ["G2", "F4", "E8", "C4"] {
            let r = rs(t);
            for a in 0..r.num_roots() {
                let co = r.coroot(a);
                let c = r.coeffs(a);
                let pairing: i64 = (0..r.rank()).map(|i| co[i] * r.pairing(&c, i)).sum();
                assert_eq!(pairing, 2);
            }
        }
    }

    #[test]
    fn dominant_representative_identity_and_negation() {
        let r = rs("E6");
        let q = |v: &[i64]| v.iter().map(|&x| Rational::from(x)).collect::<Vec<_>>();
        let dom = q(&[2, 0, 1, 0, 0, 0]);
        assert_eq!(r.dominant_weyl_representative(&dom), dom);
        let neg: Vec<Rational> = dom.iter().map(|v| -v.clone()).collect();
        // -w0 acts on E6 as the diagram automorphism 1<->6, 3<->5
        assert_eq!(r.dominant_weyl_representative(&neg), q(&[0, 0, 0, 0, 1, 2]));
    }

    /// Full Weyl orbit of `values` by breadth-first closure under simple reflections.
    fn weyl_orbit(r: &RootSystem, values: &[Rational]) -> Vec<Vec<Rational>> {
        let mut seen = vec![values.to_vec()];
        let mut i = 0;
        while i < seen.len() {
            for s in 0..r.rank() {
                let w = r.reflect_values(&seen[i], s);
                if !seen.contains(&w) {
                    seen.push(w);
                }
            }
            i += 1;
        }
        seen
    }

    #[test]
    fn dominant_matches_orbit_enumeration_g2() {
        let r = rs("G2");
        let mut state = 12345u64;
        for _ in 0..200 {
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) % 13) as i64 - 6
            };
            let v = vec![Rational::from(next()), Rational::from(next())];
            let orbit = weyl_orbit(&r, &v);
            let regular = r.positive_roots().iter().all(|a| {
                a.coeffs.iter().zip(&v).fold(Rational::ZERO, |acc, (&c, x)| acc + Rational::from(c) * x.clone()) != Rational::ZERO
            });
            if regular {
                assert_eq!(orbit.len(), 12);
            }
            let dominant: Vec<_> = orbit.iter().filter(|w| w.iter().all(|x| *x >= Rational::ZERO)).collect();
            assert_eq!(dominant.len(), 1);
            assert_eq!(&r.dominant_weyl_representative(&v), dominant[0]);
        }
    }
}
