//! Homogeneous spherical data, colors, colored cones and spherical systems.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigInt, Integer, One, Signed};

use crate::error::Error;
use crate::lattice::{cones_meet_interior, lineality_witness, rank, IntVector, RationalCone};
use crate::roots::{
    admissible_spherical_root, cartan_matrix, coroot_on_root, root_as_weight, sub_root_system, RootCoeffVector,
    RootSystem, ShapeTag, SimpleRootId, Weight,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaRoot {
    pub coeffs: RootCoeffVector,
    pub m_coords: IntVector,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ColorA {
    pub label: String,
    pub rho: IntVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousSphericalDatum {
    pub root_system: RootSystem,
    /// Simple roots of the Levi subgroup after localization; `None` means all.
    pub levi: Option<BTreeSet<SimpleRootId>>,
    pub m_basis: Vec<Weight>,
    pub sigma: Vec<SigmaRoot>,
    pub s_p: BTreeSet<SimpleRootId>,
    pub d_a: Vec<ColorA>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ColorKind {
    A,
    TwoA,
    B,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Color {
    pub label: String,
    pub kind: ColorKind,
    pub rho: IntVector,
    pub sigma_set: BTreeSet<SimpleRootId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ColoredCone {
    pub valuation_generators: Vec<IntVector>,
    /// Kept in input order; a repeated label is reported by the factoriality check.
    pub f_labels: Vec<String>,
}

/// Spherically closed datum with `M = span Sigma`; colors of type a carry
/// their pairings against `sigma` in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphericalSystem {
    pub root_system: RootSystem,
    pub sigma: Vec<RootCoeffVector>,
    pub s_p: BTreeSet<SimpleRootId>,
    pub d_a: Vec<(String, Vec<i64>)>,
}

fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

/// Simple roots whose coroots vanish on every basis weight.
pub fn parabolic_roots(rs: &RootSystem, m_basis: &[Weight]) -> BTreeSet<SimpleRootId> {
    (0..rs.rank()).filter(|&a| m_basis.iter().all(|w| w.fw[a] == 0)).map(|a| rs.id(a)).collect()
}

/// Integral `c` with `sum c_i rows_i = target`, rows linearly independent.
fn solve_integral(rows: &[Vec<BigInt>], target: &[BigInt]) -> Option<Vec<BigInt>> {
    use num::{BigRational, Zero};
    let n = rows.len();
    let m = target.len();
    let mut a: Vec<Vec<BigRational>> = (0..m)
        .map(|r| {
            let mut row: Vec<BigRational> = rows.iter().map(|b| BigRational::from_integer(b[r].clone())).collect();
            row.push(BigRational::from_integer(target[r].clone()));
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
                    a[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut out = vec![BigInt::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        if !a[i][n].is_integer() {
            return None;
        }
        out[c] = a[i][n].to_integer();
    }
    Some(out)
}

impl HomogeneousSphericalDatum {
    pub fn lattice_rank(&self) -> usize {
        self.m_basis.len()
    }

    /// Global indices of the simple roots `S` (the Levi set when localized).
    pub fn simple_roots(&self) -> Vec<usize> {
        match &self.levi {
            None => (0..self.root_system.rank()).collect(),
            Some(l) => l.iter().filter_map(|id| self.root_system.index(*id).ok()).collect(),
        }
    }

    fn idx(&self, id: SimpleRootId) -> usize {
        self.root_system.index(id).expect("root id checked by validation")
    }

    /// Coordinates of a weight in the basis of M, or `None` if it is not in M.
    pub fn m_coordinates(&self, w: &Weight) -> Option<IntVector> {
        let rows: Vec<Vec<BigInt>> =
            self.m_basis.iter().map(|b| b.fw.iter().chain(&b.torus).map(|&x| int(x)).collect()).collect();
        let target: Vec<BigInt> = w.fw.iter().chain(&w.torus).map(|&x| int(x)).collect();
        solve_integral(&rows, &target).map(IntVector)
    }

    /// `alpha^vee` restricted to M, in N-coordinates.
    pub fn coroot_on_m(&self, a: usize) -> IntVector {
        IntVector(self.m_basis.iter().map(|w| int(w.fw[a])).collect())
    }

    /// Position in `sigma` of the root with the given coefficients.
    pub fn sigma_position(&self, coeffs: &RootCoeffVector) -> Option<usize> {
        self.sigma.iter().position(|g| &g.coeffs == coeffs)
    }

    fn simple_in_sigma(&self, a: usize) -> Option<usize> {
        self.sigma_position(&self.root_system.simple_root(a))
    }

    fn double_in_sigma(&self, a: usize) -> Option<usize> {
        self.sigma_position(&self.root_system.simple_root(a).doubled())
    }

    /// Every failed check, in a stable order.
    pub fn validation_findings(&self) -> Vec<String> {
        let mut f = Vec::new();
        let rs = &self.root_system;
        let s = self.lattice_rank();
        for (i, w) in self.m_basis.iter().enumerate() {
            if w.fw.len() != rs.rank() || w.torus.len() != rs.torus_rank {
                f.push(format!("basis weight {} has wrong length", i + 1));
            }
        }
        if !f.is_empty() {
            return f;
        }
        let basis_vecs: Vec<IntVector> =
            self.m_basis.iter().map(|w| IntVector(w.fw.iter().chain(&w.torus).map(|&x| int(x)).collect())).collect();
        if rank(&basis_vecs) != s {
            f.push("lattice basis weights are linearly dependent".into());
        }
        if let Some(l) = &self.levi {
            for id in l {
                if rs.index(*id).is_err() {
                    f.push(format!("unknown Levi root {id}"));
                }
            }
        }
        let s_set: BTreeSet<usize> = self.simple_roots().into_iter().collect();
        for id in &self.s_p {
            match rs.index(*id) {
                Ok(i) if s_set.contains(&i) => {
                    if let Some(k) = self.m_basis.iter().position(|w| w.fw[i] != 0) {
                        f.push(format!("S^p root {id} pairs nonzero with basis weight {}", k + 1));
                    }
                }
                Ok(_) => f.push(format!("S^p root {id} is not a simple root of the Levi")),
                Err(_) => f.push(format!("unknown S^p root {id}")),
            }
        }
        let mut sigma_ok = true;
        for (k, g) in self.sigma.iter().enumerate() {
            let name = format!("spherical root {}", k + 1);
            if g.coeffs.0.len() != rs.rank() || g.m_coords.len() != s {
                f.push(format!("{name} has wrong length"));
                sigma_ok = false;
                continue;
            }
            if g.coeffs.support().iter().any(|i| !s_set.contains(i)) {
                f.push(format!("{name} is supported outside S"));
            }
            let mut w = Weight::zero(rs);
            for (c, chi) in g.m_coords.0.iter().zip(&self.m_basis) {
                match i64::try_from(c) {
                    Ok(c) => w.add_scaled(chi, c),
                    Err(_) => f.push(format!("{name} has an oversized coordinate")),
                }
            }
            if w != root_as_weight(rs, &g.coeffs) {
                f.push(format!("{name}: M-coordinates do not reproduce its weight"));
            }
            if !g.m_coords.gcd().is_one() {
                f.push(format!("{name} is not primitive in M"));
            }
            match admissible_spherical_root(rs, &g.coeffs) {
                Ok(shape) => {
                    for a in shape.spp {
                        if !self.s_p.contains(&rs.id(a)) {
                            f.push(format!("{name} needs {} in S^p", rs.id(a)));
                        }
                    }
                }
                Err(why) => f.push(format!("{name} is not a spherical-root shape: {}", why.join(", "))),
            }
        }
        if !sigma_ok {
            return f;
        }
        let coords: Vec<IntVector> = self.sigma.iter().map(|g| g.m_coords.clone()).collect();
        if rank(&coords) != coords.len() {
            f.push("spherical roots are linearly dependent".into());
        }
        let mut labels = BTreeSet::new();
        for d in &self.d_a {
            if d.rho.len() != s {
                f.push(format!("color {} has rho of wrong length", d.label));
                return f;
            }
            if !labels.insert(d.label.clone()) {
                f.push(format!("duplicate color label {}", d.label));
            }
        }
        let cartan = cartan_matrix(rs);
        let simple_sigma: Vec<usize> = s_set.iter().copied().filter(|&a| self.simple_in_sigma(a).is_some()).collect();
        for &a in &simple_sigma {
            let id = rs.id(a);
            if self.s_p.contains(&id) {
                f.push(format!("{id} lies in both Sigma and S^p"));
            }
            let alpha = &self.sigma[self.simple_in_sigma(a).unwrap()];
            let movers: Vec<&ColorA> = self.d_a.iter().filter(|d| d.rho.dot(&alpha.m_coords).is_one()).collect();
            if movers.len() != 2 {
                f.push(format!("{id} in Sigma has {} colors pairing 1 with it, expected 2", movers.len()));
                continue;
            }
            for g in &self.sigma {
                let total: BigInt = movers.iter().map(|d| d.rho.dot(&g.m_coords)).sum();
                if total != int(coroot_on_root(&cartan, a, &g.coeffs)) {
                    f.push(format!("colors of {id} violate the sum rule on {:?}", g.coeffs.0));
                }
            }
        }
        for d in &self.d_a {
            let mut moved = false;
            for g in &self.sigma {
                let v = d.rho.dot(&g.m_coords);
                let simple = g.coeffs.support().len() == 1 && g.coeffs.0[g.coeffs.support()[0]] == 1;
                if v.is_one() {
                    if simple && s_set.contains(&g.coeffs.support()[0]) {
                        moved = true;
                    } else {
                        f.push(format!("color {} pairs 1 with non-simple root {:?}", d.label, g.coeffs.0));
                    }
                } else if v > BigInt::one() {
                    f.push(format!("color {} pairs {} with {:?}", d.label, v, g.coeffs.0));
                }
            }
            if !moved {
                f.push(format!("color {} is moved by no simple spherical root", d.label));
            }
        }
        for &a in &s_set {
            if self.double_in_sigma(a).is_some() {
                let c = self.coroot_on_m(a);
                if c.0.iter().any(|x| x.is_odd()) {
                    f.push(format!("half coroot of {} is not integral on M", rs.id(a)));
                }
            }
        }
        for &a in &s_set {
            for &b in &s_set {
                if a < b && cartan[a][b] == 0 {
                    let mut sum = rs.simple_root(a);
                    sum.0[b] = 1;
                    if self.sigma_position(&sum).is_some() && self.coroot_on_m(a) != self.coroot_on_m(b) {
                        f.push(format!("{} + {} in Sigma but their coroots differ on M", rs.id(a), rs.id(b)));
                    }
                }
            }
        }
        f
    }

    pub fn validate(&self) -> Result<(), Error> {
        let f = self.validation_findings();
        if f.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidDatum(f))
        }
    }

    /// All colors: the listed type-a colors, then one color per remaining
    /// simple root outside `S^p` (type 2a or b, type-b colors identified
    /// across orthogonal pairs in Sigma).
    pub fn full_colors(&self) -> Result<Vec<Color>, Error> {
        let rs = &self.root_system;
        let s_set = self.simple_roots();
        let mut out: Vec<Color> = Vec::new();
        for d in &self.d_a {
            let sigma_set: BTreeSet<SimpleRootId> = s_set
                .iter()
                .copied()
                .filter(|&a| self.simple_in_sigma(a).is_some_and(|k| d.rho.dot(&self.sigma[k].m_coords).is_one()))
                .map(|a| rs.id(a))
                .collect();
            if sigma_set.is_empty() {
                return Err(Error::InvalidDatum(vec![format!("color {} is moved by no simple root", d.label)]));
            }
            out.push(Color { label: d.label.clone(), kind: ColorKind::A, rho: d.rho.clone(), sigma_set });
        }
        let cartan = cartan_matrix(rs);
        let mut merged: BTreeSet<usize> = BTreeSet::new();
        for &a in &s_set {
            let id = rs.id(a);
            if self.s_p.contains(&id) || self.simple_in_sigma(a).is_some() || merged.contains(&a) {
                continue;
            }
            if self.double_in_sigma(a).is_some() {
                let c = self.coroot_on_m(a);
                if c.0.iter().any(|x| x.is_odd()) {
                    return Err(Error::InvalidDatum(vec![format!("half coroot of {id} is not integral on M")]));
                }
                let rho = IntVector(c.0.iter().map(|x| x / 2).collect());
                out.push(Color { label: format!("2a:{id}"), kind: ColorKind::TwoA, rho, sigma_set: [id].into() });
                continue;
            }
            let partner = s_set.iter().copied().find(|&b| {
                b != a && cartan[a][b] == 0 && !self.s_p.contains(&rs.id(b)) && {
                    let mut sum = rs.simple_root(a);
                    sum.0[b] = 1;
                    self.sigma_position(&sum).is_some()
                }
            });
            let (label, sigma_set) = match partner {
                Some(b) => {
                    merged.insert(b);
                    (format!("b:{id}+{}", rs.id(b)), [id, rs.id(b)].into())
                }
                None => (format!("b:{id}"), [id].into()),
            };
            out.push(Color { label, kind: ColorKind::B, rho: self.coroot_on_m(a), sigma_set });
        }
        Ok(out)
    }

    pub fn valuation_halfspaces(&self) -> Vec<IntVector> {
        self.sigma.iter().map(|g| g.m_coords.clone()).collect()
    }

    /// `S_F`: simple roots all of whose colors lie in F.
    pub fn s_f(&self, f_labels: &[String]) -> Result<BTreeSet<SimpleRootId>, Error> {
        let colors = self.full_colors()?;
        for l in f_labels {
            if !colors.iter().any(|c| &c.label == l) {
                return Err(Error::UnknownColor(l.clone()));
            }
        }
        let f: BTreeSet<&String> = f_labels.iter().collect();
        let rs = &self.root_system;
        Ok(self
            .simple_roots()
            .into_iter()
            .map(|a| rs.id(a))
            .filter(|id| colors.iter().all(|c| !c.sigma_set.contains(id) || f.contains(&c.label)))
            .collect())
    }

    /// Localization at `s_star` (intersected with the current S).
    pub fn localize(&self, s_star: &BTreeSet<SimpleRootId>) -> Result<HomogeneousSphericalDatum, Error> {
        let rs = &self.root_system;
        for id in s_star {
            rs.index(*id)?;
        }
        let current: BTreeSet<SimpleRootId> = self.simple_roots().into_iter().map(|a| rs.id(a)).collect();
        let keep: BTreeSet<SimpleRootId> = s_star.intersection(&current).copied().collect();
        let keep_idx: BTreeSet<usize> = keep.iter().map(|id| self.idx(*id)).collect();
        let colors = self.full_colors()?;
        let d_a = self
            .d_a
            .iter()
            .filter(|d| colors.iter().any(|c| c.label == d.label && c.sigma_set.iter().any(|id| keep.contains(id))))
            .cloned()
            .collect();
        let sigma =
            self.sigma.iter().filter(|g| g.coeffs.support().iter().all(|i| keep_idx.contains(i))).cloned().collect();
        let levi = if keep.len() == rs.rank() { None } else { Some(keep.clone()) };
        Ok(HomogeneousSphericalDatum {
            root_system: rs.clone(),
            levi,
            m_basis: self.m_basis.clone(),
            sigma,
            s_p: self.s_p.intersection(&keep).copied().collect(),
            d_a,
        })
    }

    /// Spherical closure together with the origin of each closure root.
    pub fn closure_with_provenance(&self) -> Result<Closure, Error> {
        self.validate()?;
        let rs = &self.root_system;
        let mut factors = Vec::with_capacity(self.sigma.len());
        for g in &self.sigma {
            factors.push(if self.can_double(g) { 2 } else { 1 });
        }
        let levi: BTreeSet<SimpleRootId> = self.simple_roots().into_iter().map(|a| rs.id(a)).collect();
        let (sub, relabel) = sub_root_system(rs, &levi)?;
        let sub = RootSystem { components: sub.components, torus_rank: 0 };
        let move_coeffs = |v: &RootCoeffVector| {
            let mut out = vec![0; sub.rank()];
            for i in v.support() {
                out[sub.index(relabel[&rs.id(i)]).expect("relabeled")] = v.0[i];
            }
            RootCoeffVector(out)
        };
        let sigma: Vec<RootCoeffVector> = self
            .sigma
            .iter()
            .zip(&factors)
            .map(|(g, &k)| move_coeffs(&RootCoeffVector(g.coeffs.0.iter().map(|c| c * k).collect())))
            .collect();
        let d_a = self
            .d_a
            .iter()
            .map(|d| {
                let pairs = self
                    .sigma
                    .iter()
                    .zip(&factors)
                    .map(|(g, &k)| i64::try_from(d.rho.dot(&g.m_coords) * k).expect("small pairing"))
                    .collect();
                (d.label.clone(), pairs)
            })
            .collect();
        let system =
            SphericalSystem { root_system: sub, sigma, s_p: self.s_p.iter().map(|id| relabel[id]).collect(), d_a };
        Ok(Closure { system, provenance: (0..factors.len()).zip(factors).collect(), relabel })
    }

    fn can_double(&self, g: &SigmaRoot) -> bool {
        let rs = &self.root_system;
        let Ok(shape) = admissible_spherical_root(rs, &g.coeffs.doubled()) else { return false };
        if !matches!(shape.tag, ShapeTag::DoubledBChain | ShapeTag::G2Double) {
            return false;
        }
        if !shape.spp.iter().all(|&a| self.s_p.contains(&rs.id(a))) {
            return false;
        }
        // a type-a color may pair at most 1 with the doubled root
        self.d_a.iter().all(|d| !d.rho.dot(&g.m_coords).is_positive())
    }

    pub fn spherical_closure(&self) -> Result<SphericalSystem, Error> {
        Ok(self.closure_with_provenance()?.system)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Closure {
    pub system: SphericalSystem,
    /// For each closure root: index into the datum's sigma and factor 1 or 2.
    pub provenance: Vec<(usize, i64)>,
    /// Datum simple-root ids to closure ids.
    pub relabel: BTreeMap<SimpleRootId, SimpleRootId>,
}

impl SphericalSystem {
    /// The datum with `M = span Sigma` and basis Sigma.
    pub fn to_datum(&self) -> HomogeneousSphericalDatum {
        let rs = &self.root_system;
        let k = self.sigma.len();
        HomogeneousSphericalDatum {
            root_system: rs.clone(),
            levi: None,
            m_basis: self.sigma.iter().map(|g| root_as_weight(rs, g)).collect(),
            sigma: self
                .sigma
                .iter()
                .enumerate()
                .map(|(i, g)| SigmaRoot { coeffs: g.clone(), m_coords: IntVector::unit(k, i) })
                .collect(),
            s_p: self.s_p.clone(),
            d_a: self.d_a.iter().map(|(l, p)| ColorA { label: l.clone(), rho: IntVector::from_i64s(p) }).collect(),
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        self.to_datum().validate()
    }

    pub fn full_colors(&self) -> Result<Vec<Color>, Error> {
        self.to_datum().full_colors()
    }

    pub fn is_spherically_closed(&self) -> bool {
        self.to_datum().spherical_closure().is_ok_and(|c| &c == self)
    }

    pub fn has_colors(&self) -> bool {
        self.root_system.ids().iter().any(|id| !self.s_p.contains(id))
    }

    pub fn summary(&self) -> String {
        let rs = &self.root_system;
        let roots: Vec<String> = self
            .sigma
            .iter()
            .map(|g| {
                g.support()
                    .iter()
                    .map(|&i| {
                        let c = g.0[i];
                        if c == 1 {
                            format!("a{}", rs.id(i))
                        } else {
                            format!("{c}a{}", rs.id(i))
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("+")
            })
            .collect();
        let sp: Vec<String> = self.s_p.iter().map(|id| id.to_string()).collect();
        format!("{} Sigma={{{}}} S^p={{{}}} D^a={}", rs.describe(), roots.join(", "), sp.join(","), self.d_a.len())
    }
}

/// Split a spherical system into indecomposable factors.
pub fn decompose(s: &SphericalSystem) -> Result<Vec<SphericalSystem>, Error> {
    Ok(decompose_indexed(s)?.into_iter().map(|(c, _)| c).collect())
}

/// Like [`decompose`], also returning which roots of `s` each factor keeps.
pub fn decompose_indexed(s: &SphericalSystem) -> Result<Vec<(SphericalSystem, Vec<usize>)>, Error> {
    let rs = &s.root_system;
    let nc = rs.components.len();
    let mut parent: Vec<usize> = (0..nc).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let n = p[y];
            p[y] = r;
            y = n;
        }
        r
    }
    let union = |p: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(p, a), find(p, b));
        if ra != rb {
            p[ra.max(rb)] = ra.min(rb);
        }
    };
    let comp = |i: usize| rs.component_of(i);
    for g in &s.sigma {
        let sup = g.support();
        for w in sup.windows(2) {
            union(&mut parent, comp(w[0]), comp(w[1]));
        }
    }
    let colors = s.full_colors()?;
    for c in &colors {
        let comps: Vec<usize> = c.sigma_set.iter().map(|id| id.component - 1).collect();
        for w in comps.windows(2) {
            union(&mut parent, w[0], w[1]);
        }
        if c.kind == ColorKind::A {
            let pairs = &s.d_a.iter().find(|(l, _)| l == &c.label).expect("listed color").1;
            for (k, v) in pairs.iter().enumerate() {
                if *v != 0 {
                    union(&mut parent, comps[0], comp(s.sigma[k].support()[0]));
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for c in 0..nc {
        let r = find(&mut parent, c);
        groups.entry(r).or_default().push(c);
    }
    let mut out = Vec::new();
    for comps in groups.values() {
        let ids: BTreeSet<SimpleRootId> =
            rs.ids().into_iter().filter(|id| comps.contains(&(id.component - 1))).collect();
        out.push(restrict_system(s, &ids, &colors)?);
    }
    Ok(out)
}

fn restrict_system(
    s: &SphericalSystem,
    ids: &BTreeSet<SimpleRootId>,
    colors: &[Color],
) -> Result<(SphericalSystem, Vec<usize>), Error> {
    let rs = &s.root_system;
    let (sub, relabel) = sub_root_system(rs, ids)?;
    let sub = RootSystem { components: sub.components, torus_rank: 0 };
    let inside = |g: &RootCoeffVector| g.support().iter().all(|&i| ids.contains(&rs.id(i)));
    let kept: Vec<usize> = (0..s.sigma.len()).filter(|&k| inside(&s.sigma[k])).collect();
    let sigma = kept
        .iter()
        .map(|&k| {
            let g = &s.sigma[k];
            let mut v = vec![0; sub.rank()];
            for i in g.support() {
                v[sub.index(relabel[&rs.id(i)]).expect("relabeled")] = g.0[i];
            }
            RootCoeffVector(v)
        })
        .collect();
    let d_a = s
        .d_a
        .iter()
        .filter(|(l, _)| colors.iter().any(|c| &c.label == l && c.sigma_set.iter().all(|id| ids.contains(id))))
        .map(|(l, p)| (l.clone(), kept.iter().map(|&k| p[k]).collect()))
        .collect();
    let sys = SphericalSystem {
        root_system: sub,
        sigma,
        s_p: s.s_p.iter().filter(|id| ids.contains(id)).map(|id| relabel[id]).collect(),
        d_a,
    };
    Ok((sys, kept))
}

/// Product of spherical systems with zero cross pairings. Clashing labels get
/// a `#k` suffix.
pub fn product(parts: &[SphericalSystem]) -> SphericalSystem {
    let mut comps = Vec::new();
    for p in parts {
        comps.extend(p.root_system.components.iter().copied());
    }
    let rs = RootSystem { components: comps, torus_rank: 0 };
    let total_roots: usize = parts.iter().map(|p| p.sigma.len()).sum();
    let (mut sigma, mut s_p, mut d_a) = (Vec::new(), BTreeSet::new(), Vec::<(String, Vec<i64>)>::new());
    let (mut comp_off, mut vert_off, mut root_off) = (0, 0, 0);
    for (k, p) in parts.iter().enumerate() {
        for g in &p.sigma {
            let mut v = vec![0; rs.rank()];
            v[vert_off..vert_off + g.0.len()].copy_from_slice(&g.0);
            sigma.push(RootCoeffVector(v));
        }
        for id in &p.s_p {
            s_p.insert(SimpleRootId::new(id.component + comp_off, id.position));
        }
        for (l, pairs) in &p.d_a {
            let mut v = vec![0; total_roots];
            v[root_off..root_off + pairs.len()].copy_from_slice(pairs);
            let label = if d_a.iter().any(|(x, _)| x == l) { format!("{l}#{}", k + 1) } else { l.clone() };
            d_a.push((label, v));
        }
        comp_off += p.root_system.components.len();
        vert_off += p.root_system.rank();
        root_off += p.sigma.len();
    }
    SphericalSystem { root_system: rs, sigma, s_p, d_a }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConeFinding {
    ValuationOutsideV { generator: IntVector, root: IntVector, value: BigInt },
    NoInteriorPointInV,
    NotStrictlyConvex { witness: IntVector },
    ZeroInRhoF { label: String },
}

impl std::fmt::Display for ConeFinding {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConeFinding::ValuationOutsideV { generator, root, value } => {
                write!(f, "valuation generator {generator} pairs {value} > 0 with spherical root {root}")
            }
            ConeFinding::NoInteriorPointInV => write!(f, "relative interior of the cone misses the valuation cone"),
            ConeFinding::NotStrictlyConvex { witness } => write!(f, "cone contains the line through {witness}"),
            ConeFinding::ZeroInRhoF { label } => write!(f, "color {label} in F has rho = 0"),
        }
    }
}

impl ConeFinding {
    /// Findings that make the input unusable, as opposed to reportable.
    pub fn is_structural(&self) -> bool {
        matches!(self, ConeFinding::NotStrictlyConvex { .. } | ConeFinding::ZeroInRhoF { .. })
    }
}

/// `valuation_generators` together with `rho(F)`, in that order.
pub fn cone_generators(d: &HomogeneousSphericalDatum, c: &ColoredCone) -> Result<Vec<IntVector>, Error> {
    let colors = d.full_colors()?;
    let s = d.lattice_rank();
    let mut gens = Vec::new();
    for g in &c.valuation_generators {
        if g.len() != s {
            return Err(Error::Dimension { expected: s, found: g.len() });
        }
        gens.push(g.clone());
    }
    for l in &c.f_labels {
        let col = colors.iter().find(|x| &x.label == l).ok_or_else(|| Error::UnknownColor(l.clone()))?;
        gens.push(col.rho.clone());
    }
    Ok(gens)
}

pub fn validate_colored_cone(d: &HomogeneousSphericalDatum, c: &ColoredCone) -> Result<Vec<ConeFinding>, Error> {
    let gens = cone_generators(d, c)?;
    let colors = d.full_colors()?;
    let halfspaces = d.valuation_halfspaces();
    let mut out = Vec::new();
    for g in &c.valuation_generators {
        for h in &halfspaces {
            let v = g.dot(h);
            if v.is_positive() {
                out.push(ConeFinding::ValuationOutsideV { generator: g.clone(), root: h.clone(), value: v });
            }
        }
    }
    let cone = RationalCone::new(gens, d.lattice_rank())?;
    if !cones_meet_interior(&cone, &halfspaces)? {
        out.push(ConeFinding::NoInteriorPointInV);
    }
    if let Some(w) = lineality_witness(&cone) {
        out.push(ConeFinding::NotStrictlyConvex { witness: w });
    }
    for l in &c.f_labels {
        if colors.iter().any(|x| &x.label == l && x.rho.is_zero()) {
            out.push(ConeFinding::ZeroInRhoF { label: l.clone() });
        }
    }
    Ok(out)
}
