//! Test oracles shared by the integration tests.
//!
//! `mfs` builds the datum of a multiplicity-free space directly from its
//! basic weights: M is spanned by the basic weights, the invariant prime
//! divisors are the basic weights with no fundamental-weight part, and
//! colors of type a are the circles (basic weights pairing 1 with a simple
//! spherical root). Nothing here goes through the catalog.
#![allow(dead_code)]

use std::collections::BTreeSet;

use lunasmooth::datum::{ColorA, ColoredCone, HomogeneousSphericalDatum, SigmaRoot};
use lunasmooth::lattice::IntVector;
use lunasmooth::roots::{root_as_weight, RootCoeffVector, RootSystem, Weight};
use num::{BigRational, One, Signed, ToPrimitive, Zero};

pub struct Mfs {
    pub name: String,
    /// Catalog entry this space belongs to, with its parameters.
    pub entry: usize,
    pub params: String,
    pub datum: HomogeneousSphericalDatum,
    pub cone: ColoredCone,
    /// Indices into `datum.sigma` pairing -1 with an invariant divisor.
    pub marked: Vec<usize>,
}

/// Exact solution of `sum c_i basis_i = target` over the integers.
pub fn solve_in_basis(basis: &[Vec<i64>], target: &[i64]) -> Option<Vec<i64>> {
    let n = basis.len();
    let m = target.len();
    // augmented m x (n+1) system
    let mut a: Vec<Vec<BigRational>> = (0..m)
        .map(|r| {
            let mut row: Vec<BigRational> = basis.iter().map(|b| BigRational::from_integer(b[r].into())).collect();
            row.push(BigRational::from_integer(target[r].into()));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..=n {
                    let v = &a[r][j] * &f;
                    a[i][j] = &a[i][j] - v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut out = vec![0i64; n];
    for (i, &c) in pivots.iter().enumerate() {
        let v = &a[i][n];
        if !v.is_integer() {
            return None;
        }
        out[c] = v.to_integer().to_i64()?;
    }
    Some(out)
}

fn flat(w: &Weight) -> Vec<i64> {
    w.fw.iter().chain(&w.torus).copied().collect()
}

/// Build the datum and the simple embedding V (dual-basis cone, F = all colors).
pub fn mfs(
    name: &str,
    entry: usize,
    params: &str,
    components: &[&str],
    torus: usize,
    weights: Vec<(Vec<(usize, i64)>, Vec<i64>)>,
    sigma: Vec<Vec<i64>>,
) -> Mfs {
    let rs = RootSystem::parse(components, torus).unwrap();
    let r = rs.rank();
    let m_basis: Vec<Weight> = weights
        .into_iter()
        .map(|(fw, t)| {
            let mut v = vec![0; r];
            for (i, c) in fw {
                v[i - 1] += c;
            }
            Weight { fw: v, torus: t }
        })
        .collect();
    let s = m_basis.len();
    let basis: Vec<Vec<i64>> = m_basis.iter().map(flat).collect();
    let sigma: Vec<SigmaRoot> = sigma
        .into_iter()
        .map(|c| {
            let coeffs = RootCoeffVector(c);
            let w = root_as_weight(&rs, &coeffs);
            let m = solve_in_basis(&basis, &flat(&w)).unwrap_or_else(|| panic!("{name}: root {coeffs:?} not in M"));
            SigmaRoot { coeffs, m_coords: IntVector::from_i64s(&m) }
        })
        .collect();
    let s_p = (0..r).filter(|&a| m_basis.iter().all(|w| w.fw[a] == 0)).map(|a| rs.id(a)).collect();
    let invariant: Vec<usize> = (0..s).filter(|&i| m_basis[i].fw.iter().all(|&x| x == 0)).collect();
    let simple_in_sigma: Vec<usize> = sigma
        .iter()
        .filter_map(|g| {
            let sup = g.coeffs.support();
            (sup.len() == 1 && g.coeffs.0[sup[0]] == 1).then_some(sup[0])
        })
        .collect();
    let d_a = (0..s)
        .filter(|i| !invariant.contains(i))
        .filter(|&i| simple_in_sigma.iter().any(|&a| m_basis[i].fw[a] == 1))
        .map(|i| ColorA { label: format!("D{}", i + 1), rho: IntVector::unit(s, i) })
        .collect();
    let datum = HomogeneousSphericalDatum { root_system: rs, levi: None, m_basis, sigma, s_p, d_a };
    let f_labels = datum.full_colors().unwrap_or_else(|e| panic!("{name}: {e}")).into_iter().map(|c| c.label).collect();
    let cone =
        ColoredCone { valuation_generators: invariant.iter().map(|&i| IntVector::unit(s, i)).collect(), f_labels };
    let marked = (0..datum.sigma.len())
        .filter(|&j| invariant.iter().any(|&i| datum.sigma[j].m_coords.0[i] == -num::BigInt::one()))
        .collect();
    Mfs { name: name.to_string(), entry, params: params.to_string(), datum, cone, marked }
}

fn fw(pairs: &[(usize, i64)]) -> Vec<(usize, i64)> {
    pairs.to_vec()
}

fn chain(len: usize, inner: i64) -> Vec<i64> {
    (0..len).map(|i| if i == 0 || i + 1 == len { 1 } else { inner }).collect()
}

fn unit_root(r: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; r];
    v[i - 1] = c;
    v
}

fn sum_roots(a: &[Vec<i64>]) -> Vec<i64> {
    let mut v = vec![0; a[0].len()];
    for x in a {
        for (s, y) in v.iter_mut().zip(x) {
            *s += y;
        }
    }
    v
}

/// SL_n x C* on C^n.
pub fn vector_sl(n: usize) -> Mfs {
    mfs(
        &format!("C^{n} under GL_{n}"),
        1,
        &format!("n={n}"),
        &[&format!("A{}", n - 1)],
        1,
        vec![(fw(&[(1, 1)]), vec![1])],
        vec![],
    )
}

/// Sp_2n x C* on C^2n.
pub fn vector_sp(n: usize) -> Mfs {
    mfs(
        &format!("C^{} under Sp x C*", 2 * n),
        2,
        &format!("n={n}"),
        &[&format!("C{n}")],
        1,
        vec![(fw(&[(1, 1)]), vec![1])],
        vec![],
    )
}

/// Spin_2n+1 x C* on C^2n+1: basic weights w1, and the quadratic form.
/// Needs n >= 3 (B2 is stored as C2).
pub fn vector_b(n: usize) -> Mfs {
    mfs(
        &format!("C^{} under SO x C*", 2 * n + 1),
        3,
        &format!("n={n}"),
        &[&format!("B{n}")],
        1,
        vec![(fw(&[(1, 1)]), vec![1]), (fw(&[]), vec![2])],
        vec![vec![2; n]],
    )
}

pub fn vector_d(n: usize) -> Mfs {
    let mut g = vec![2; n];
    g[n - 2] = 1;
    g[n - 1] = 1;
    mfs(
        &format!("C^{} under SO x C*", 2 * n),
        4,
        &format!("n={n}"),
        &[&format!("D{n}")],
        1,
        vec![(fw(&[(1, 1)]), vec![1]), (fw(&[]), vec![2])],
        vec![g],
    )
}

/// S^2 C^n: basic weights 2w_k + k eps and the determinant.
pub fn sym2(n: usize) -> Mfs {
    let r = n - 1;
    let mut ws: Vec<(Vec<(usize, i64)>, Vec<i64>)> = (1..n).map(|k| (fw(&[(k, 2)]), vec![k as i64])).collect();
    ws.push((fw(&[]), vec![n as i64]));
    mfs(
        &format!("S^2 C^{n}"),
        5,
        &format!("n={n}"),
        &[&format!("A{r}")],
        1,
        ws,
        (1..n).map(|i| unit_root(r, i, 2)).collect(),
    )
}

/// Lambda^2 C^n for even n: Pfaffian minors.
pub fn wedge2_even(n: usize) -> Mfs {
    let r = n - 1;
    let ws = (1..=n / 2).map(|k| (if 2 * k < n { fw(&[(2 * k, 1)]) } else { fw(&[]) }, vec![k as i64])).collect();
    let sigma = (1..n / 2)
        .map(|i| sum_roots(&[unit_root(r, 2 * i - 1, 1), unit_root(r, 2 * i, 2), unit_root(r, 2 * i + 1, 1)]))
        .collect();
    // Lambda^2 C^4 is the vector representation of Spin(6)
    let (entry, params) = if n == 4 { (4, "n=3".to_string()) } else { (7, format!("n={n}")) };
    mfs(&format!("Lambda^2 C^{n}"), entry, &params, &[&format!("A{r}")], 1, ws, sigma)
}

/// C^n (x) C^n' for n <= n': minors of each size.
pub fn tensor(n: usize, np: usize) -> Mfs {
    let (r, rp) = (n - 1, np - 1);
    let ws = (1..=n)
        .map(|k| {
            let mut v = Vec::new();
            if k < n {
                v.push((k, 1));
            }
            if k < np {
                v.push((r + k, 1));
            }
            (v, vec![k as i64])
        })
        .collect();
    let sigma = (1..n).map(|i| sum_roots(&[unit_root(r + rp, i, 1), unit_root(r + rp, r + i, 1)])).collect();
    let (entry, params) = if n == np { (8, format!("n={n}, n'={np}")) } else { (9, format!("n={n}, n'={np}")) };
    mfs(&format!("C^{n} (x) C^{np}"), entry, &params, &[&format!("A{r}"), &format!("A{rp}")], 1, ws, sigma)
}

/// C^2 (x) C^2n under SL_2 x Sp_2n x C*.
pub fn sl2_sp(n: usize) -> Mfs {
    let r = 1 + n;
    let mut cc = vec![0];
    cc.extend(chain(n, 2));
    mfs(
        &format!("C^2 (x) C^{}", 2 * n),
        10,
        &format!("n'={n}"),
        &["A1", &format!("C{n}")],
        1,
        vec![(fw(&[(1, 1), (2, 1)]), vec![1]), (fw(&[(3, 1)]), vec![2]), (fw(&[]), vec![2])],
        vec![sum_roots(&[unit_root(r, 1, 1), unit_root(r, 2, 1)]), cc],
    )
}

/// C^n (x) C^4 under SL_n x Sp_4 x C*, n >= 4.
pub fn sl_sp4(n: usize) -> Mfs {
    let r = n - 1;
    let om = |k: usize| if k < n { vec![(k, 1)] } else { vec![] };
    let p = |k: usize| (r + k, 1);
    let ws = vec![
        ([om(1), vec![p(1)]].concat(), vec![1]),
        ([om(2), vec![p(2)]].concat(), vec![2]),
        (om(2), vec![2]),
        ([om(3), vec![p(1)]].concat(), vec![3]),
        ([om(1), om(3), vec![p(2)]].concat(), vec![4]),
        (om(4), vec![4]),
    ];
    let sigma = vec![
        unit_root(r + 2, 1, 1),
        unit_root(r + 2, 2, 1),
        unit_root(r + 2, 3, 1),
        unit_root(r + 2, r + 1, 1),
        unit_root(r + 2, r + 2, 1),
    ];
    let entry = if n == 4 { 13 } else { 14 };
    mfs(
        &format!("C^{n} (x) C^4"),
        entry,
        &(if n == 4 { String::new() } else { format!("n={n}") }),
        &[&format!("A{r}"), "C2"],
        1,
        ws,
        sigma,
    )
}

/// Spin_7 x C* on the spin representation.
pub fn spin7() -> Mfs {
    mfs("C^8 under Spin_7", 15, "", &["B3"], 1, vec![(fw(&[(3, 1)]), vec![1]), (fw(&[]), vec![2])], vec![vec![1, 2, 3]])
}

/// G_2 x C* on C^7.
pub fn g2() -> Mfs {
    mfs("C^7 under G_2", 18, "", &["G2"], 1, vec![(fw(&[(1, 1)]), vec![1]), (fw(&[]), vec![2])], vec![vec![4, 2]])
}

/// C^2 + C^2 under SL_2 x C* x C*.
pub fn two_vectors_sl2() -> Mfs {
    mfs(
        "C^2 + C^2 under SL_2",
        21,
        "",
        &["A1"],
        2,
        vec![(fw(&[(1, 1)]), vec![1, 0]), (fw(&[(1, 1)]), vec![0, 1]), (fw(&[]), vec![1, 1])],
        vec![vec![1]],
    )
}

/// C^n + C^n under SL_n x C* x C*, n >= 3.
pub fn two_vectors(n: usize) -> Mfs {
    let r = n - 1;
    mfs(
        &format!("C^{n} + C^{n}"),
        22,
        &format!("n={n}"),
        &[&format!("A{r}")],
        2,
        vec![(fw(&[(1, 1)]), vec![1, 0]), (fw(&[(1, 1)]), vec![0, 1]), (fw(&[(2, 1)]), vec![1, 1])],
        vec![unit_root(r, 1, 1)],
    )
}

/// C^n + (C^n)* under SL_n x C* x C*, n >= 3.
pub fn vector_covector(n: usize) -> Mfs {
    let r = n - 1;
    mfs(
        &format!("C^{n} + (C^{n})*"),
        23,
        &format!("n={n}"),
        &[&format!("A{r}")],
        2,
        vec![(fw(&[(1, 1)]), vec![1, 0]), (fw(&[(r, 1)]), vec![0, 1]), (fw(&[]), vec![1, 1])],
        vec![vec![1; r]],
    )
}

/// Every family at a few parameters.
pub fn corpus() -> Vec<Mfs> {
    let mut out = Vec::new();
    for n in 2..=4 {
        out.push(vector_sl(n));
        out.push(vector_sp(n));
        out.push(vector_b(n + 1));
        out.push(sym2(n));
        out.push(tensor(n, n));
        out.push(sl2_sp(n));
    }
    for n in 4..=5 {
        out.push(vector_d(n));
    }
    for n in [4, 6] {
        out.push(wedge2_even(n));
    }
    out.push(tensor(2, 3));
    out.push(tensor(2, 4));
    out.push(tensor(3, 5));
    out.push(sl_sp4(4));
    out.push(sl_sp4(5));
    out.push(sl_sp4(6));
    out.push(spin7());
    out.push(g2());
    out.push(two_vectors_sl2());
    for n in 3..=4 {
        out.push(two_vectors(n));
        out.push(vector_covector(n));
    }
    out
}

/// Pairs of entries known to describe the same spherical system.
pub fn same_system(a: usize, b: usize) -> bool {
    let pairs: BTreeSet<(usize, usize)> = [(24, 25), (29, 33), (30, 34)].into_iter().collect();
    a == b || pairs.contains(&(a.min(b), a.max(b)))
}

pub fn is_minus_one(x: &num::BigInt) -> bool {
    x.is_negative() && x.abs().is_one()
}

/// Change the basis of M by `chi_a += k chi_b`. Coordinates of M transform
/// contragrediently to those of N, so every pairing is preserved.
pub fn shear(d: &mut HomogeneousSphericalDatum, cone: Option<&mut ColoredCone>, a: usize, b: usize, k: i64) {
    assert_ne!(a, b);
    let w_b = d.m_basis[b].clone();
    d.m_basis[a].add_scaled(&w_b, k);
    let kk = num::BigInt::from(k);
    for g in &mut d.sigma {
        let v = &g.m_coords.0[b] - &kk * &g.m_coords.0[a];
        g.m_coords.0[b] = v;
    }
    let fix_n = |v: &mut IntVector| {
        let x = &v.0[a] + &kk * &v.0[b];
        v.0[a] = x;
    };
    for c in &mut d.d_a {
        fix_n(&mut c.rho);
    }
    if let Some(c) = cone {
        for v in &mut c.valuation_generators {
            fix_n(v);
        }
    }
}

/// A few random shears.
pub fn scramble<R: rand::Rng>(rng: &mut R, d: &mut HomogeneousSphericalDatum, mut cone: Option<&mut ColoredCone>) {
    let s = d.m_basis.len();
    if s < 2 {
        return;
    }
    for _ in 0..rng.gen_range(0..4) {
        let a = rng.gen_range(0..s);
        let b = (a + rng.gen_range(1..s)) % s;
        let k = if rng.gen_bool(0.5) { 1 } else { -1 };
        shear(d, cone.as_deref_mut(), a, b, k);
    }
}

/// Random valid datum: a product of one or two catalog systems, read with
/// `M = span Sigma`, in a scrambled basis of M.
pub fn random_catalog_datum<R: rand::Rng>(rng: &mut R) -> HomogeneousSphericalDatum {
    use lunasmooth::catalog::{entries, instantiate};
    use lunasmooth::datum::product;
    let all = entries();
    let mut parts = Vec::new();
    for _ in 0..rng.gen_range(1..=2) {
        let e = &all[rng.gen_range(0..all.len())];
        let ps = e.smallest_params(2);
        let p = ps[rng.gen_range(0..ps.len())];
        parts.push(instantiate(e.id, &p).unwrap().system);
    }
    let mut d = product(&parts).to_datum();
    scramble(rng, &mut d, None);
    d
}

/// Random MFS datum with its cone, in a scrambled basis.
pub fn random_mfs<R: rand::Rng>(rng: &mut R, corpus: &[Mfs]) -> (HomogeneousSphericalDatum, ColoredCone) {
    let f = &corpus[rng.gen_range(0..corpus.len())];
    let (mut d, mut c) = (f.datum.clone(), f.cone.clone());
    scramble(rng, &mut d, Some(&mut c));
    (d, c)
}

/// Integer determinant by cofactor expansion (small matrices only).
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// gcd of the maximal minors of the k x n matrix with rows `vs`.
pub fn gcd_of_maximal_minors(vs: &[Vec<i64>]) -> i128 {
    let k = vs.len();
    let n = vs.first().map_or(0, |v| v.len());
    let mut g = 0;
    let mut cols: Vec<usize> = (0..k).collect();
    if k > n {
        return 0;
    }
    loop {
        let m: Vec<Vec<i128>> = vs.iter().map(|r| cols.iter().map(|&c| r[c] as i128).collect()).collect();
        g = gcd(g, det(&m));
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return g;
            }
            i -= 1;
            if cols[i] < n - k + i {
                break;
            }
            if i == 0 && cols[0] >= n - k {
                return g;
            }
        }
        cols[i] += 1;
        for j in i + 1..k {
            cols[j] = cols[j - 1] + 1;
        }
    }
}

pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i128, |g, &x| gcd(g, x as i128)) as i64;
    v.iter().map(|x| x / g).collect()
}
