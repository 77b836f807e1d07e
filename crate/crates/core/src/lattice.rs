//! Exact integer lattices and rational polyhedral cones.

use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::lp::{maximize, LpOutcome};

pub type Int = BigInt;
pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntVector(pub Vec<Int>);

impl IntVector {
    pub fn zeros(n: usize) -> Self {
        IntVector(vec![Int::zero(); n])
    }

    pub fn from_i64s(v: &[i64]) -> Self {
        IntVector(v.iter().map(|&x| Int::from(x)).collect())
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Int::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &IntVector) -> Int {
        assert_eq!(self.len(), other.len(), "pairing of vectors of different rank");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn gcd(&self) -> Int {
        self.0.iter().fold(Int::zero(), |g, x| g.gcd(x))
    }

    pub fn scaled(&self, k: &Int) -> IntVector {
        IntVector(self.0.iter().map(|x| x * k).collect())
    }

    pub fn add(&self, other: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> IntVector {
        IntVector(self.0.iter().map(|x| -x).collect())
    }

    pub fn to_rat(&self) -> RatVector {
        RatVector(self.0.iter().map(|x| Rat::from_integer(x.clone())).collect())
    }

    /// Coordinates as machine integers, if they fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|x| i64::try_from(x).ok()).collect()
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatVector(pub Vec<Rat>);

impl RatVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: Vec<IntVector>,
    ncols: usize,
}

impl IntMatrix {
    pub fn new(rows: Vec<IntVector>, ncols: usize) -> Result<Self, Error> {
        if let Some(r) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::Dimension { expected: ncols, found: r.len() });
        }
        Ok(IntMatrix { rows, ncols })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        IntMatrix::new(rows.iter().map(|r| IntVector::from_i64s(r)).collect(), ncols).expect("rectangular")
    }

    pub fn identity(n: usize) -> Self {
        IntMatrix { rows: (0..n).map(|i| IntVector::unit(n, i)).collect(), ncols: n }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.rows[i].0[j]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.ncols, other.nrows());
        let rows = self
            .rows
            .iter()
            .map(|r| {
                IntVector((0..other.ncols).map(|j| (0..self.ncols).map(|k| &r.0[k] * other.get(k, j)).sum()).collect())
            })
            .collect();
        IntMatrix { rows, ncols: other.ncols }
    }

    pub fn transpose(&self) -> IntMatrix {
        let rows = (0..self.ncols).map(|j| IntVector(self.rows.iter().map(|r| r.0[j].clone()).collect())).collect();
        IntMatrix { rows, ncols: self.nrows() }
    }

    /// Determinant of a square matrix by fraction-free elimination.
    pub fn det(&self) -> Int {
        assert_eq!(self.nrows(), self.ncols);
        let n = self.ncols;
        if n == 0 {
            return Int::one();
        }
        let mut a: Vec<Vec<Int>> = self.rows.iter().map(|r| r.0.clone()).collect();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Int::zero();
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub left: IntMatrix,
    pub diag: Vec<Int>,
    pub right: IntMatrix,
}

/// Smith normal form with unimodular transforms: `left * a * right = diag(d)`.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let m = a.nrows();
    let n = a.ncols();
    let mut s: Vec<Vec<Int>> = a.rows.iter().map(|r| r.0.clone()).collect();
    let mut l: Vec<Vec<Int>> = IntMatrix::identity(m).rows.into_iter().map(|r| r.0).collect();
    let mut r: Vec<Vec<Int>> = IntMatrix::identity(n).rows.into_iter().map(|r| r.0).collect();

    fn row_axpy(mat: &mut [Vec<Int>], dst: usize, src: usize, k: &Int) {
        let srow = mat[src].clone();
        for (d, s) in mat[dst].iter_mut().zip(srow) {
            *d -= k * s;
        }
    }
    fn col_axpy(mat: &mut [Vec<Int>], dst: usize, src: usize, k: &Int) {
        for row in mat.iter_mut() {
            let v = k * &row[src];
            row[dst] -= v;
        }
    }
    fn col_swap(mat: &mut [Vec<Int>], i: usize, j: usize) {
        for row in mat.iter_mut() {
            row.swap(i, j);
        }
    }

    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        loop {
            // smallest nonzero entry of the trailing block moves to (t, t)
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if !s[i][j].is_zero() && best.map_or(true, |(bi, bj)| s[i][j].abs() < s[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            s.swap(t, bi);
            l.swap(t, bi);
            col_swap(&mut s, t, bj);
            col_swap(&mut r, t, bj);

            let mut dirty = false;
            for i in t + 1..m {
                if !s[i][t].is_zero() {
                    let q = s[i][t].div_floor(&s[t][t]);
                    row_axpy(&mut s, i, t, &q);
                    row_axpy(&mut l, i, t, &q);
                    dirty |= !s[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !s[t][j].is_zero() {
                    let q = s[t][j].div_floor(&s[t][t]);
                    col_axpy(&mut s, j, t, &q);
                    col_axpy(&mut r, j, t, &q);
                    dirty |= !s[t][j].is_zero();
                }
            }
            if dirty {
                continue;
            }
            // divisibility of the remaining block
            let bad = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !s[i][j].is_multiple_of(&s[t][t]));
            if let Some((i, _)) = bad {
                let one = -Int::one();
                row_axpy(&mut s, t, i, &one);
                row_axpy(&mut l, t, i, &one);
                continue;
            }
            break;
        }
        if s[t][t].is_negative() {
            for v in s[t].iter_mut() {
                *v = -v.clone();
            }
            for v in l[t].iter_mut() {
                *v = -v.clone();
            }
        }
        diag.push(s[t][t].clone());
    }
    SmithDecomposition {
        left: IntMatrix { rows: l.into_iter().map(IntVector).collect(), ncols: m },
        diag,
        right: IntMatrix { rows: r.into_iter().map(IntVector).collect(), ncols: n },
    }
}

/// Rank over the rationals.
pub fn rank(vs: &[IntVector]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    let n = vs[0].len();
    let mut a: Vec<Vec<Rat>> = vs.iter().map(|v| v.to_rat().0).collect();
    let mut rk = 0;
    for c in 0..n {
        let Some(p) = (rk..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(rk, p);
        for i in 0..a.len() {
            if i != rk && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[rk][c];
                let prow = a[rk].clone();
                for (x, y) in a[i].iter_mut().zip(prow) {
                    *x -= &f * y;
                }
            }
        }
        rk += 1;
    }
    rk
}

fn check_dims(vs: &[IntVector], n: usize) -> Result<(), Error> {
    match vs.iter().find(|v| v.len() != n) {
        Some(v) => Err(Error::Dimension { expected: n, found: v.len() }),
        None => Ok(()),
    }
}

/// True iff `vs` is linearly independent and extends to a Z-basis of Z^n.
pub fn is_part_of_basis(vs: &[IntVector], ambient_rank: usize) -> Result<bool, Error> {
    check_dims(vs, ambient_rank)?;
    if vs.is_empty() {
        return Ok(true);
    }
    if vs.len() > ambient_rank {
        return Ok(false);
    }
    let m = IntMatrix::new(vs.to_vec(), ambient_rank)?;
    let snf = smith_normal_form(&m);
    Ok(snf.diag.len() == vs.len() && snf.diag.iter().all(One::is_one))
}

/// The elementary divisors of the matrix with rows `vs` (zeros included).
pub fn elementary_divisors(vs: &[IntVector], ambient_rank: usize) -> Result<Vec<Int>, Error> {
    check_dims(vs, ambient_rank)?;
    if vs.is_empty() {
        return Ok(Vec::new());
    }
    Ok(smith_normal_form(&IntMatrix::new(vs.to_vec(), ambient_rank)?).diag)
}

pub fn primitive_generator(v: &IntVector) -> Result<IntVector, Error> {
    let g = v.gcd();
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(IntVector(v.0.iter().map(|x| x / &g).collect()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCone {
    pub generators: Vec<IntVector>,
    pub ambient_rank: usize,
}

impl RationalCone {
    pub fn new(generators: Vec<IntVector>, ambient_rank: usize) -> Result<Self, Error> {
        check_dims(&generators, ambient_rank)?;
        Ok(RationalCone { generators, ambient_rank })
    }

    pub fn dim(&self) -> usize {
        rank(&self.generators)
    }

    fn nonzero_primitive(&self) -> Vec<IntVector> {
        let mut out: Vec<IntVector> =
            self.generators.iter().filter(|g| !g.is_zero()).map(|g| primitive_generator(g).expect("nonzero")).collect();
        out.sort();
        out.dedup();
        out
    }
}

fn rat(x: &Int) -> Rat {
    Rat::from_integer(x.clone())
}

fn in_cone(gens: &[IntVector], v: &RatVector) -> bool {
    if gens.is_empty() {
        return v.0.iter().all(Zero::is_zero);
    }
    let n = v.len();
    let a: Vec<Vec<Rat>> = (0..n).map(|i| gens.iter().map(|g| rat(&g.0[i])).collect()).collect();
    maximize(&a, &v.0, &vec![Rat::zero(); gens.len()]).is_feasible()
}

/// One primitive generator per extremal ray, sorted lexicographically.
pub fn extremal_rays(c: &RationalCone) -> Vec<IntVector> {
    let gens = c.nonzero_primitive();
    let mut out = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let others: Vec<IntVector> = gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, h)| h.clone()).collect();
        if !in_cone(&others, &g.to_rat()) {
            out.push(g.clone());
        }
    }
    out
}

fn positive(outcome: &LpOutcome) -> bool {
    matches!(outcome, LpOutcome::Optimal { value, .. } if value.is_positive())
}

/// Exact membership of `v` in `c`, or in its relative interior when `strict`.
pub fn cone_contains(c: &RationalCone, v: &RatVector, strict: bool) -> Result<bool, Error> {
    if v.len() != c.ambient_rank {
        return Err(Error::Dimension { expected: c.ambient_rank, found: v.len() });
    }
    let gens = &c.generators;
    if !strict || gens.is_empty() {
        return Ok(in_cone(gens, v));
    }
    // v = sum g_j (mu_j + delta), delta + s = 1, maximize delta
    let k = gens.len();
    let n = c.ambient_rank;
    let mut a = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut row: Vec<Rat> = gens.iter().map(|g| rat(&g.0[i])).collect();
        row.push(gens.iter().map(|g| rat(&g.0[i])).sum());
        row.push(Rat::zero());
        a.push(row);
    }
    let mut last = vec![Rat::zero(); k];
    last.push(Rat::one());
    last.push(Rat::one());
    a.push(last);
    let mut b = v.0.clone();
    b.push(Rat::one());
    let mut cost = vec![Rat::zero(); k + 2];
    cost[k] = Rat::one();
    Ok(positive(&maximize(&a, &b, &cost)))
}

/// True iff some point of the relative interior of `c` pairs `<= 0` with every `h`.
pub fn cones_meet_interior(c: &RationalCone, halfspaces: &[IntVector]) -> Result<bool, Error> {
    check_dims(halfspaces, c.ambient_rank)?;
    let gens = &c.generators;
    if gens.is_empty() {
        return Ok(true);
    }
    let k = gens.len();
    let h = halfspaces.len();
    // variables: mu (k), delta, slacks (h), t
    let nv = k + 1 + h + 1;
    let mut a = Vec::with_capacity(h + 1);
    for (r, hv) in halfspaces.iter().enumerate() {
        let mut row = vec![Rat::zero(); nv];
        let mut total = Rat::zero();
        for (j, g) in gens.iter().enumerate() {
            let p = rat(&g.dot(hv));
            total += &p;
            row[j] = p;
        }
        row[k] = total;
        row[k + 1 + r] = Rat::one();
        a.push(row);
    }
    let mut last = vec![Rat::zero(); nv];
    last[k] = Rat::one();
    last[nv - 1] = Rat::one();
    a.push(last);
    let mut b = vec![Rat::zero(); h];
    b.push(Rat::one());
    let mut cost = vec![Rat::zero(); nv];
    cost[k] = Rat::one();
    Ok(positive(&maximize(&a, &b, &cost)))
}

/// A nonzero generator `g` with `-g` also in the cone, if the cone is not strictly convex.
pub fn lineality_witness(c: &RationalCone) -> Option<IntVector> {
    let gens: Vec<&IntVector> = c.generators.iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return None;
    }
    let n = c.ambient_rank;
    let mut a: Vec<Vec<Rat>> = (0..n).map(|i| gens.iter().map(|g| rat(&g.0[i])).collect()).collect();
    a.push(vec![Rat::one(); gens.len()]);
    let mut b = vec![Rat::zero(); n];
    b.push(Rat::one());
    match maximize(&a, &b, &vec![Rat::zero(); gens.len()]) {
        LpOutcome::Optimal { x, .. } => {
            let j = x.iter().position(|v| v.is_positive()).expect("sum is one");
            Some(gens[j].clone())
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> IntVector {
        IntVector::from_i64s(x)
    }

    fn rv(x: &[i64]) -> RatVector {
        v(x).to_rat()
    }

    fn cone(gs: &[&[i64]], n: usize) -> RationalCone {
        RationalCone::new(gs.iter().map(|g| v(g)).collect(), n).unwrap()
    }

    fn ints(x: &[i64]) -> Vec<Int> {
        x.iter().map(|&a| Int::from(a)).collect()
    }

    #[test]
    fn snf_examples() {
        let a = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(smith_normal_form(&a).diag, ints(&[1, 6]));
        assert_eq!(smith_normal_form(&IntMatrix::identity(3)).diag, ints(&[1, 1, 1]));
        assert_eq!(smith_normal_form(&IntMatrix::from_i64(&[&[2, 4]])).diag, ints(&[2]));
    }

    #[test]
    fn snf_reconstructs() {
        let a = IntMatrix::from_i64(&[&[4, 6, -2], &[2, 0, 8], &[6, 6, 6]]);
        let s = smith_normal_form(&a);
        let p = s.left.mul(&a).mul(&s.right);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { s.diag[i].clone() } else { Int::zero() };
                assert_eq!(p.get(i, j), &want);
            }
        }
        assert_eq!(s.left.det().abs(), Int::one());
        assert_eq!(s.right.det().abs(), Int::one());
    }

    #[test]
    fn basis_examples() {
        assert!(is_part_of_basis(&[v(&[1, 0])], 2).unwrap());
        assert!(!is_part_of_basis(&[v(&[1, 0]), v(&[1, 2])], 2).unwrap());
        assert!(is_part_of_basis(&[], 2).unwrap());
        assert!(is_part_of_basis(&[v(&[1, 0])], 3).is_err());
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive_generator(&v(&[2, 4])).unwrap(), v(&[1, 2]));
        assert_eq!(primitive_generator(&v(&[1, 0, 0])).unwrap(), v(&[1, 0, 0]));
        assert_eq!(primitive_generator(&v(&[-3, 6])).unwrap(), v(&[-1, 2]));
        assert!(primitive_generator(&v(&[0, 0])).is_err());
    }

    #[test]
    fn ray_examples() {
        assert_eq!(extremal_rays(&cone(&[&[1, 0], &[0, 1], &[1, 1]], 2)), vec![v(&[0, 1]), v(&[1, 0])]);
        assert_eq!(extremal_rays(&cone(&[&[1, 0]], 2)), vec![v(&[1, 0])]);
        assert_eq!(extremal_rays(&cone(&[&[2, 0], &[0, 3]], 2)), vec![v(&[0, 1]), v(&[1, 0])]);
        assert!(extremal_rays(&cone(&[], 2)).is_empty());
    }

    #[test]
    fn contains_examples() {
        let q = cone(&[&[1, 0], &[0, 1]], 2);
        assert!(cone_contains(&q, &rv(&[1, 1]), true).unwrap());
        assert!(!cone_contains(&q, &rv(&[1, 0]), true).unwrap());
        assert!(cone_contains(&q, &rv(&[1, 0]), false).unwrap());
        assert!(cone_contains(&cone(&[&[1, 0]], 2), &rv(&[1, 0]), true).unwrap());
        assert!(!cone_contains(&q, &rv(&[-1, 0]), false).unwrap());
        assert!(cone_contains(&q, &rv(&[1]), false).is_err());
    }

    #[test]
    fn meet_examples() {
        assert!(cones_meet_interior(&cone(&[&[-1]], 1), &[v(&[1])]).unwrap());
        assert!(!cones_meet_interior(&cone(&[&[1]], 1), &[v(&[1])]).unwrap());
        assert!(cones_meet_interior(&cone(&[&[1, 0], &[0, 1]], 2), &[v(&[1, -1])]).unwrap());
    }

    #[test]
    fn lineality() {
        assert!(lineality_witness(&cone(&[&[1, 0], &[0, 1]], 2)).is_none());
        assert!(lineality_witness(&cone(&[&[1, 0], &[-1, 0], &[0, 1]], 2)).is_some());
    }
}
