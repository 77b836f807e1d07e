//! Root systems in Bourbaki numbering, Cartan data, spherical-root shapes and
//! Dynkin diagram symmetries.
//!
//! Cartan entries are `A(i,j) = <alpha_i^vee, alpha_j>`. In `B_n` the last root
//! is short, in `C_n` the last root is long, in `F_4` roots 3 and 4 are short
//! and in `G_2` root 1 is short. `B_1`, `C_1` become `A_1`, `D_2` becomes
//! `A_1 x A_1`, `D_3` becomes `A_3` (its branch node is the middle of `A_3`) and
//! `B_2` becomes `C_2` (long and short roots swap positions).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for RootType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "A" => RootType::A,
            "B" => RootType::B,
            "C" => RootType::C,
            "D" => RootType::D,
            "E" => RootType::E,
            "F" => RootType::F,
            "G" => RootType::G,
            _ => return Err(Error::RootSystem(format!("unknown type letter {s:?}"))),
        })
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Component {
    pub kind: RootType,
    pub rank: usize,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.rank)
    }
}

impl FromStr for Component {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.len() < 2 || !s.is_char_boundary(1) {
            return Err(Error::RootSystem(format!("bad component {s:?}")));
        }
        let kind = s[..1].parse()?;
        let rank = s[1..].parse().map_err(|_| Error::RootSystem(format!("bad component rank in {s:?}")))?;
        Ok(Component { kind, rank })
    }
}

/// A simple root: 1-based component index and 1-based Bourbaki position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleRootId {
    pub component: usize,
    pub position: usize,
}

impl SimpleRootId {
    pub fn new(component: usize, position: usize) -> Self {
        SimpleRootId { component, position }
    }
}

impl fmt::Display for SimpleRootId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.component, self.position)
    }
}

impl FromStr for SimpleRootId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::UnknownRoot(s.to_string());
        let (c, p) = s.split_once('.').ok_or_else(bad)?;
        Ok(SimpleRootId { component: c.parse().map_err(|_| bad())?, position: p.parse().map_err(|_| bad())? })
    }
}

fn component_valid(c: Component) -> bool {
    match c.kind {
        RootType::A => c.rank >= 1,
        RootType::B | RootType::C => c.rank >= 2,
        RootType::D => c.rank >= 4,
        RootType::E => (6..=8).contains(&c.rank),
        RootType::F => c.rank == 4,
        RootType::G => c.rank == 2,
    }
}

/// Normalize raw components. Returns the normalized list and, per raw
/// component, the normalized id of each raw position.
pub fn normalize_components(raw: &[Component]) -> Result<(Vec<Component>, Vec<Vec<SimpleRootId>>), Error> {
    let mut out = Vec::new();
    let mut maps = Vec::new();
    for c in raw {
        let next = out.len() + 1;
        let a1 = Component { kind: RootType::A, rank: 1 };
        let (comps, map): (Vec<Component>, Vec<SimpleRootId>) = match (c.kind, c.rank) {
            (_, 0) => return Err(Error::RootSystem(format!("component {c} has rank 0"))),
            (RootType::B | RootType::C, 1) => (vec![a1], vec![SimpleRootId::new(next, 1)]),
            (RootType::D, 1) => return Err(Error::RootSystem("D1 is not a root system".into())),
            (RootType::D, 2) => (vec![a1, a1], vec![SimpleRootId::new(next, 1), SimpleRootId::new(next + 1, 1)]),
            (RootType::D, 3) => (
                vec![Component { kind: RootType::A, rank: 3 }],
                vec![SimpleRootId::new(next, 2), SimpleRootId::new(next, 1), SimpleRootId::new(next, 3)],
            ),
            (RootType::B, 2) => (
                vec![Component { kind: RootType::C, rank: 2 }],
                vec![SimpleRootId::new(next, 2), SimpleRootId::new(next, 1)],
            ),
            _ => {
                if !component_valid(*c) {
                    return Err(Error::RootSystem(format!("no root system of type {c}")));
                }
                (vec![*c], (1..=c.rank).map(|p| SimpleRootId::new(next, p)).collect())
            }
        };
        out.extend(comps);
        maps.push(map);
    }
    Ok((out, maps))
}

/// Cartan matrix of one component, `m[i][j] = <alpha_{i+1}^vee, alpha_{j+1}>`.
pub fn component_cartan(c: Component) -> Vec<Vec<i64>> {
    let n = c.rank;
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        m[i - 1][j - 1] = aij;
        m[j - 1][i - 1] = aji;
    };
    match c.kind {
        RootType::A => (1..n).for_each(|i| link(i, i + 1, -1, -1)),
        RootType::B => {
            (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 1, n, -1, -2);
        }
        RootType::C => {
            (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 1, n, -2, -1);
        }
        RootType::D => {
            (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n, -1, -1);
        }
        RootType::E => {
            link(1, 3, -1, -1);
            link(2, 4, -1, -1);
            (3..n).for_each(|i| link(i, i + 1, -1, -1));
        }
        RootType::F => {
            link(1, 2, -1, -1);
            link(2, 3, -1, -2);
            link(3, 4, -1, -1);
        }
        RootType::G => link(1, 2, -3, -1),
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystem {
    pub components: Vec<Component>,
    pub torus_rank: usize,
}

/// Weight in fundamental-weight plus torus-character coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub fw: Vec<i64>,
    pub torus: Vec<i64>,
}

impl Weight {
    pub fn zero(rs: &RootSystem) -> Self {
        Weight { fw: vec![0; rs.rank()], torus: vec![0; rs.torus_rank] }
    }

    pub fn add_scaled(&mut self, other: &Weight, k: i64) {
        for (a, b) in self.fw.iter_mut().zip(&other.fw) {
            *a += k * b;
        }
        for (a, b) in self.torus.iter_mut().zip(&other.torus) {
            *a += k * b;
        }
    }
}

/// Non-negative coefficients over all simple roots, in global order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootCoeffVector(pub Vec<i64>);

impl RootCoeffVector {
    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i).collect()
    }

    pub fn doubled(&self) -> RootCoeffVector {
        RootCoeffVector(self.0.iter().map(|c| 2 * c).collect())
    }
}

impl RootSystem {
    /// Build from raw components, normalizing low-rank aliases.
    pub fn new(raw: Vec<Component>, torus_rank: usize) -> Result<Self, Error> {
        let (components, _) = normalize_components(&raw)?;
        Ok(RootSystem { components, torus_rank })
    }

    pub fn parse(s: &[&str], torus_rank: usize) -> Result<Self, Error> {
        let raw = s.iter().map(|c| c.parse()).collect::<Result<Vec<Component>, _>>()?;
        Self::new(raw, torus_rank)
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    pub fn offset(&self, component: usize) -> usize {
        self.components[..component - 1].iter().map(|c| c.rank).sum()
    }

    pub fn index(&self, id: SimpleRootId) -> Result<usize, Error> {
        if id.component == 0 || id.component > self.components.len() {
            return Err(Error::UnknownRoot(id.to_string()));
        }
        if id.position == 0 || id.position > self.components[id.component - 1].rank {
            return Err(Error::UnknownRoot(id.to_string()));
        }
        Ok(self.offset(id.component) + id.position - 1)
    }

    pub fn id(&self, index: usize) -> SimpleRootId {
        let mut rest = index;
        for (ci, c) in self.components.iter().enumerate() {
            if rest < c.rank {
                return SimpleRootId::new(ci + 1, rest + 1);
            }
            rest -= c.rank;
        }
        panic!("simple root index {index} out of range");
    }

    pub fn ids(&self) -> Vec<SimpleRootId> {
        (0..self.rank()).map(|i| self.id(i)).collect()
    }

    /// Component (0-based) of a global simple root index.
    pub fn component_of(&self, index: usize) -> usize {
        self.id(index).component - 1
    }

    pub fn simple_root(&self, index: usize) -> RootCoeffVector {
        let mut v = vec![0; self.rank()];
        v[index] = 1;
        RootCoeffVector(v)
    }

    pub fn root_from_ids(&self, coeffs: &[(SimpleRootId, i64)]) -> Result<RootCoeffVector, Error> {
        let mut v = vec![0; self.rank()];
        for (id, c) in coeffs {
            v[self.index(*id)?] += c;
        }
        Ok(RootCoeffVector(v))
    }

    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        if self.torus_rank > 0 {
            parts.push(format!("T{}", self.torus_rank));
        }
        if parts.is_empty() {
            "trivial".into()
        } else {
            parts.join("x")
        }
    }
}

/// Block-diagonal Cartan matrix over all simple roots.
pub fn cartan_matrix(r: &RootSystem) -> Vec<Vec<i64>> {
    let n = r.rank();
    let mut m = vec![vec![0; n]; n];
    let mut off = 0;
    for c in &r.components {
        let b = component_cartan(*c);
        for i in 0..c.rank {
            for j in 0..c.rank {
                m[off + i][off + j] = b[i][j];
            }
        }
        off += c.rank;
    }
    m
}

pub fn coroot_pairing(_r: &RootSystem, a: usize, w: &Weight) -> i64 {
    w.fw[a]
}

pub fn root_as_weight(r: &RootSystem, v: &RootCoeffVector) -> Weight {
    let a = cartan_matrix(r);
    let fw = (0..r.rank()).map(|i| v.0.iter().enumerate().map(|(j, c)| c * a[i][j]).sum()).collect();
    Weight { fw, torus: vec![0; r.torus_rank] }
}

/// `<alpha_a^vee, v>` for a root given by coefficients.
pub fn coroot_on_root(cartan: &[Vec<i64>], a: usize, v: &RootCoeffVector) -> i64 {
    v.0.iter().enumerate().map(|(j, c)| c * cartan[a][j]).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ShapeTag {
    Simple,
    Double,
    OrthogonalPair,
    AChain,
    D3,
    BChain,
    DoubledBChain,
    B3,
    CChain,
    DChain,
    F4,
    G2Sum,
    G2Middle,
    G2Double,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shape {
    pub tag: ShapeTag,
    /// Support as global indices.
    pub support: Vec<usize>,
    /// Simple roots (global indices) that must lie in `S^p`.
    pub spp: BTreeSet<usize>,
}

/// Classify a connected set of simple roots of one component. Returns the
/// component type and the vertices in Bourbaki order.
fn classify_connected(cartan: &[Vec<i64>], verts: &[usize]) -> Result<(Component, Vec<usize>), Error> {
    let k = verts.len();
    let adj = |a: usize, b: usize| a != b && cartan[a][b] != 0;
    let nbrs = |v: usize| -> Vec<usize> { verts.iter().copied().filter(|&w| adj(v, w)).collect() };
    let bad = || Error::RootSystem(format!("vertex set {verts:?} is not a finite-type diagram"));
    if k == 1 {
        return Ok((Component { kind: RootType::A, rank: 1 }, verts.to_vec()));
    }
    if let Some(&branch) = verts.iter().find(|&&v| nbrs(v).len() == 3) {
        // arms from the branch node
        let mut arms: Vec<Vec<usize>> = nbrs(branch)
            .into_iter()
            .map(|start| {
                let mut arm = vec![start];
                let mut prev = branch;
                let mut cur = start;
                loop {
                    let next: Vec<usize> = nbrs(cur).into_iter().filter(|&w| w != prev).collect();
                    match next.as_slice() {
                        [] => break,
                        [w] => {
                            arm.push(*w);
                            prev = cur;
                            cur = *w;
                        }
                        _ => break,
                    }
                }
                arm
            })
            .collect();
        arms.sort_by_key(|a| (a.len(), *a.last().unwrap()));
        let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
        let rev = |a: &Vec<usize>| a.iter().rev().copied().collect::<Vec<_>>();
        return match lens.as_slice() {
            [1, 1, _] => {
                let mut order = rev(&arms[2]);
                order.push(branch);
                order.push(arms[0][0]);
                order.push(arms[1][0]);
                Ok((Component { kind: RootType::D, rank: k }, order))
            }
            [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => {
                // alpha_2 on the length-1 arm; alpha_1, alpha_3 on a length-2 arm
                let (short, long) = (&arms[1], &arms[2]);
                let mut order = vec![short[1], arms[0][0], short[0], branch];
                order.extend(long.iter().copied());
                Ok((Component { kind: RootType::E, rank: k }, order))
            }
            _ => Err(bad()),
        };
    }
    // a chain
    let ends: Vec<usize> = verts.iter().copied().filter(|&v| nbrs(v).len() == 1).collect();
    if ends.len() != 2 {
        return Err(bad());
    }
    let walk = |start: usize| -> Vec<usize> {
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(w) = nbrs(cur).into_iter().find(|&w| w != prev) {
            order.push(w);
            prev = cur;
            cur = w;
        }
        order
    };
    let fwd = walk(ends[0]);
    let bond = |o: &[usize], i: usize| cartan[o[i]][o[i + 1]] * cartan[o[i + 1]][o[i]];
    let multi: Vec<usize> = (0..k - 1).filter(|&i| bond(&fwd, i) > 1).collect();
    match multi.as_slice() {
        [] => Ok((Component { kind: RootType::A, rank: k }, fwd)),
        [i] => {
            let product = bond(&fwd, *i);
            let mut o = fwd.clone();
            if product == 3 {
                if k != 2 {
                    return Err(bad());
                }
                if cartan[o[0]][o[1]] != -3 {
                    o.reverse();
                }
                return Ok((Component { kind: RootType::G, rank: 2 }, o));
            }
            if k == 4 && *i == 1 {
                // F4: alpha_3 short, <alpha_3^vee, alpha_2> = -2
                if cartan[o[2]][o[1]] != -2 {
                    o.reverse();
                }
                return Ok((Component { kind: RootType::F, rank: 4 }, o));
            }
            if *i != 0 && *i != k - 2 {
                return Err(bad());
            }
            if *i == 0 {
                o.reverse();
            }
            // double bond between o[k-2] and o[k-1]
            if k == 2 || cartan[o[k - 2]][o[k - 1]] == -2 {
                if k == 2 && cartan[o[0]][o[1]] != -2 {
                    o.reverse();
                }
                Ok((Component { kind: RootType::C, rank: k }, o))
            } else {
                Ok((Component { kind: RootType::B, rank: k }, o))
            }
        }
        _ => Err(bad()),
    }
}

/// Connected components of a vertex set under the Dynkin adjacency.
pub fn connected_parts(cartan: &[Vec<i64>], verts: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut parts = Vec::new();
    for &v in verts {
        if seen.contains(&v) {
            continue;
        }
        let mut part = vec![v];
        seen.insert(v);
        let mut i = 0;
        while i < part.len() {
            let x = part[i];
            for &w in verts {
                if !seen.contains(&w) && cartan[x][w] != 0 {
                    seen.insert(w);
                    part.push(w);
                }
            }
            i += 1;
        }
        part.sort();
        parts.push(part);
    }
    parts
}

/// Root system on a subset of simple roots. The relabeling maps each old id
/// in the subset to its new id. Parts keep the order of their smallest vertex.
pub fn sub_root_system(
    r: &RootSystem,
    subset: &BTreeSet<SimpleRootId>,
) -> Result<(RootSystem, BTreeMap<SimpleRootId, SimpleRootId>), Error> {
    let cartan = cartan_matrix(r);
    let verts: Vec<usize> = subset.iter().map(|id| r.index(*id)).collect::<Result<_, _>>()?;
    let mut verts = verts;
    verts.sort();
    let mut comps = Vec::new();
    let mut map = BTreeMap::new();
    for part in connected_parts(&cartan, &verts) {
        let (c, order) = classify_connected(&cartan, &part)?;
        // among equivalent numberings keep the one closest to the ambient order
        let order = component_symmetries(c)
            .iter()
            .map(|s| s.iter().map(|&q| order[q]).collect::<Vec<usize>>())
            .min()
            .expect("identity symmetry");
        comps.push(c);
        let ci = comps.len();
        for (p, v) in order.iter().enumerate() {
            map.insert(r.id(*v), SimpleRootId::new(ci, p + 1));
        }
    }
    Ok((RootSystem { components: comps, torus_rank: r.torus_rank }, map))
}

fn shape_reject(msg: String) -> Result<Shape, Vec<String>> {
    Err(vec![msg])
}

fn chain_shape(c: Component, k: usize, order: &[usize], v: &RootCoeffVector) -> Option<(ShapeTag, Vec<usize>)> {
    let co: Vec<i64> = order.iter().map(|&i| v.0[i]).collect();
    let at = |ps: &[usize]| -> Vec<usize> { ps.iter().map(|p| order[p - 1]).collect() };
    let all = |x: i64| co.iter().all(|&y| y == x);
    match c.kind {
        RootType::A if all(1) => Some((ShapeTag::AChain, at(&(2..k).collect::<Vec<_>>()))),
        RootType::A if k == 3 && co == [1, 2, 1] => Some((ShapeTag::D3, at(&[1, 3]))),
        RootType::B if all(1) => Some((ShapeTag::BChain, at(&(2..k).collect::<Vec<_>>()))),
        RootType::B if all(2) => Some((ShapeTag::DoubledBChain, at(&(2..=k).collect::<Vec<_>>()))),
        RootType::B if k == 3 && co == [1, 2, 3] => Some((ShapeTag::B3, at(&[1, 2]))),
        RootType::C if k == 2 && all(1) => Some((ShapeTag::BChain, vec![])),
        // B2 doubled chain, long root first in B numbering
        RootType::C if k == 2 && all(2) => Some((ShapeTag::DoubledBChain, at(&[1]))),
        RootType::C if co[0] == 1 && co[k - 1] == 1 && co[1..k - 1].iter().all(|&x| x == 2) => {
            Some((ShapeTag::CChain, at(&(3..=k).collect::<Vec<_>>())))
        }
        RootType::D if co[..k - 2].iter().all(|&x| x == 2) && co[k - 2] == 1 && co[k - 1] == 1 => {
            Some((ShapeTag::DChain, at(&(2..=k).collect::<Vec<_>>())))
        }
        RootType::F if co == [1, 2, 3, 2] => Some((ShapeTag::F4, at(&[1, 2, 3]))),
        RootType::G if co == [1, 1] => Some((ShapeTag::G2Sum, vec![])),
        RootType::G if co == [2, 1] => Some((ShapeTag::G2Middle, at(&[2]))),
        RootType::G if co == [4, 2] => Some((ShapeTag::G2Double, at(&[2]))),
        _ => None,
    }
}

/// Classify a root-coefficient vector as a spherical-root shape.
///
/// The pattern `alpha_1 + 2 alpha_2 + alpha_3` is accepted on any `A_3`
/// sub-diagram, which is the same diagram as `D_3`.
pub fn admissible_spherical_root(r: &RootSystem, v: &RootCoeffVector) -> Result<Shape, Vec<String>> {
    if v.0.len() != r.rank() {
        return shape_reject(format!("length {} does not match rank {}", v.0.len(), r.rank()));
    }
    if v.0.iter().any(|&c| c < 0) {
        return shape_reject("negative coefficient".into());
    }
    let support = v.support();
    let cartan = cartan_matrix(r);
    let shape = |tag, spp: Vec<usize>| Ok(Shape { tag, support: support.clone(), spp: spp.into_iter().collect() });
    match support.as_slice() {
        [] => return shape_reject("zero vector".into()),
        [i] => {
            return match v.0[*i] {
                1 => shape(ShapeTag::Simple, vec![]),
                2 => shape(ShapeTag::Double, vec![]),
                c => shape_reject(format!("multiple {c} of a simple root")),
            }
        }
        [i, j] if cartan[*i][*j] == 0 => {
            return if v.0[*i] == 1 && v.0[*j] == 1 {
                shape(ShapeTag::OrthogonalPair, vec![])
            } else {
                shape_reject("orthogonal pair with coefficient other than 1".into())
            };
        }
        _ => {}
    }
    let parts = connected_parts(&cartan, &support);
    if parts.len() != 1 {
        return shape_reject("support is not connected".into());
    }
    let (c, order) = match classify_connected(&cartan, &support) {
        Ok(x) => x,
        Err(e) => return shape_reject(e.to_string()),
    };
    let k = c.rank;
    let mut tag = None;
    for sym in component_symmetries(c) {
        let order: Vec<usize> = sym.iter().map(|&p| order[p]).collect();
        tag = chain_shape(c, k, &order, v);
        if tag.is_some() {
            break;
        }
    }
    let co: Vec<i64> = order.iter().map(|&i| v.0[i]).collect();
    match tag {
        Some((t, spp)) => shape(t, spp),
        None => shape_reject(format!("coefficients {co:?} on a {c} sub-diagram match no spherical-root shape")),
    }
}

/// A permutation of the simple roots preserving the Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramAutomorphism {
    /// `component_permutation[i]` is the (0-based) image of component `i`.
    pub component_permutation: Vec<usize>,
    /// `vertex_map[i]` is the image of global simple root `i`.
    pub vertex_map: Vec<usize>,
}

fn component_symmetries(c: Component) -> Vec<Vec<usize>> {
    let n = c.rank;
    let id: Vec<usize> = (0..n).collect();
    match c.kind {
        RootType::A if n >= 2 => vec![id.clone(), id.iter().rev().copied().collect()],
        RootType::D if n == 4 => {
            let leaves = [0usize, 2, 3];
            let mut out = Vec::new();
            for p in permutations(3) {
                let mut m = id.clone();
                for (k, &l) in leaves.iter().enumerate() {
                    m[l] = leaves[p[k]];
                }
                out.push(m);
            }
            out
        }
        RootType::D => {
            let mut m = id.clone();
            m.swap(n - 2, n - 1);
            vec![id, m]
        }
        RootType::E if n == 6 => vec![id, vec![5, 1, 4, 3, 2, 0]],
        _ => vec![id],
    }
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// All diagram isomorphisms from `a` to `b` (empty if the types differ).
pub fn diagram_isomorphisms(a: &RootSystem, b: &RootSystem) -> Vec<DiagramAutomorphism> {
    let mut ka: Vec<Component> = a.components.clone();
    let mut kb: Vec<Component> = b.components.clone();
    ka.sort();
    kb.sort();
    if ka != kb {
        return Vec::new();
    }
    // component bijections by backtracking
    let nc = a.components.len();
    let mut maps: Vec<Vec<usize>> = Vec::new();
    fn assign(
        a: &RootSystem,
        b: &RootSystem,
        i: usize,
        cur: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == a.components.len() {
            out.push(cur.clone());
            return;
        }
        for j in 0..b.components.len() {
            if !used[j] && b.components[j] == a.components[i] {
                used[j] = true;
                cur.push(j);
                assign(a, b, i + 1, cur, used, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    assign(a, b, 0, &mut Vec::new(), &mut vec![false; nc], &mut maps);
    let syms: Vec<Vec<Vec<usize>>> = a.components.iter().map(|c| component_symmetries(*c)).collect();
    let mut out = Vec::new();
    for cm in maps {
        let mut choice = vec![0usize; nc];
        loop {
            let mut vm = vec![0usize; a.rank()];
            for ci in 0..nc {
                let oa = a.offset(ci + 1);
                let ob = b.offset(cm[ci] + 1);
                for (p, &q) in syms[ci][choice[ci]].iter().enumerate() {
                    vm[oa + p] = ob + q;
                }
            }
            out.push(DiagramAutomorphism { component_permutation: cm.clone(), vertex_map: vm });
            // odometer
            let mut k = 0;
            while k < nc {
                choice[k] += 1;
                if choice[k] < syms[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == nc {
                break;
            }
        }
    }
    let (ca, cb) = (cartan_matrix(a), cartan_matrix(b));
    for iso in &out {
        for i in 0..a.rank() {
            for j in 0..a.rank() {
                assert_eq!(cb[iso.vertex_map[i]][iso.vertex_map[j]], ca[i][j], "diagram map breaks the Cartan matrix");
            }
        }
    }
    out
}

pub fn diagram_automorphisms(r: &RootSystem) -> Vec<DiagramAutomorphism> {
    diagram_isomorphisms(r, r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &[&str]) -> RootSystem {
        RootSystem::parse(s, 0).unwrap()
    }

    #[test]
    fn cartan_examples() {
        assert_eq!(cartan_matrix(&rs(&["A2"])), vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(cartan_matrix(&rs(&["A1", "A1"])), vec![vec![2, 0], vec![0, 2]]);
        // <alpha_1^vee, alpha_2> = -2 in C2
        assert_eq!(cartan_matrix(&rs(&["C2"])), vec![vec![2, -2], vec![-1, 2]]);
    }

    #[test]
    fn root_weights() {
        let a3 = rs(&["A3"]);
        assert_eq!(root_as_weight(&a3, &RootCoeffVector(vec![1, 0, 0])).fw, vec![2, -1, 0]);
        assert_eq!(root_as_weight(&a3, &RootCoeffVector(vec![0, 1, 0])).fw, vec![-1, 2, -1]);
        assert_eq!(root_as_weight(&rs(&["C2"]), &RootCoeffVector(vec![0, 1])).fw, vec![-2, 2]);
        // F4 root a1+2a2+3a3+2a4 is w4
        assert_eq!(root_as_weight(&rs(&["F4"]), &RootCoeffVector(vec![1, 2, 3, 2])).fw, vec![0, 0, 0, 1]);
        let w = Weight { fw: vec![1, 0, 0], torus: vec![1] };
        assert_eq!(coroot_pairing(&a3, 0, &w), 1);
        let eps = Weight { fw: vec![0, 0, 0], torus: vec![1] };
        assert_eq!(coroot_pairing(&a3, 0, &eps), 0);
    }

    #[test]
    fn normalization() {
        assert_eq!(rs(&["B1"]).components, rs(&["A1"]).components);
        assert_eq!(rs(&["D2"]).components, rs(&["A1", "A1"]).components);
        assert_eq!(rs(&["D3"]).components, rs(&["A3"]).components);
        assert_eq!(rs(&["B2"]).components, rs(&["C2"]).components);
        assert!(RootSystem::parse(&["E9"], 0).is_err());
        assert!(RootSystem::parse(&["F3"], 0).is_err());
    }

    #[test]
    fn shapes() {
        let tag = |r: &RootSystem, c: &[i64]| admissible_spherical_root(r, &RootCoeffVector(c.to_vec())).map(|s| s.tag);
        assert_eq!(tag(&rs(&["A3"]), &[1, 1, 1]), Ok(ShapeTag::AChain));
        assert_eq!(tag(&rs(&["C2"]), &[2, 2]), Ok(ShapeTag::DoubledBChain));
        assert!(tag(&rs(&["A2"]), &[1, 3]).is_err());
        assert_eq!(tag(&rs(&["A3"]), &[1, 2, 1]), Ok(ShapeTag::D3));
        assert_eq!(tag(&rs(&["B3"]), &[1, 2, 3]), Ok(ShapeTag::B3));
        assert_eq!(tag(&rs(&["B4"]), &[1, 1, 1, 1]), Ok(ShapeTag::BChain));
        assert_eq!(tag(&rs(&["C4"]), &[1, 2, 2, 1]), Ok(ShapeTag::CChain));
        assert!(tag(&rs(&["D5"]), &[0, 1, 2, 1, 1]).is_err());
        assert_eq!(tag(&rs(&["D5"]), &[0, 2, 2, 1, 1]), Ok(ShapeTag::DChain));
        assert_eq!(tag(&rs(&["E6"]), &[2, 1, 2, 2, 1, 0]), Ok(ShapeTag::DChain));
        assert_eq!(tag(&rs(&["F4"]), &[1, 2, 3, 2]), Ok(ShapeTag::F4));
        assert_eq!(tag(&rs(&["G2"]), &[4, 2]), Ok(ShapeTag::G2Double));
        assert_eq!(tag(&rs(&["A1", "A1"]), &[1, 1]), Ok(ShapeTag::OrthogonalPair));
        let s = admissible_spherical_root(&rs(&["B4"]), &RootCoeffVector(vec![0, 1, 2, 3])).unwrap();
        assert_eq!((s.tag, s.spp), (ShapeTag::B3, [1, 2].into_iter().collect()));
    }

    #[test]
    fn sub_systems() {
        let b3 = rs(&["B3"]);
        let set: BTreeSet<_> = [SimpleRootId::new(1, 1), SimpleRootId::new(1, 2)].into();
        assert_eq!(sub_root_system(&b3, &set).unwrap().0.components, rs(&["A2"]).components);
        let r = rs(&["A3", "C2"]);
        let set: BTreeSet<_> = [SimpleRootId::new(1, 1), SimpleRootId::new(1, 2), SimpleRootId::new(2, 1)].into();
        assert_eq!(sub_root_system(&r, &set).unwrap().0.components, rs(&["A2", "A1"]).components);
        let (e, m) = sub_root_system(&r, &BTreeSet::new()).unwrap();
        assert!(e.components.is_empty() && m.is_empty());
        let full: BTreeSet<_> = r.ids().into_iter().collect();
        let (same, m) = sub_root_system(&r, &full).unwrap();
        assert_eq!(same, r);
        assert!(m.iter().all(|(a, b)| a == b));
        for name in ["A5", "B4", "C4", "D5", "D4", "E6", "E7", "E8", "F4", "G2"] {
            let r = rs(&[name]);
            let full: BTreeSet<_> = r.ids().into_iter().collect();
            let (same, m) = sub_root_system(&r, &full).unwrap();
            assert_eq!(same, r, "{name}");
            assert!(m.iter().all(|(a, b)| a == b) || name == "D4" || name == "E6", "{name}");
        }
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(diagram_automorphisms(&rs(&["A2"])).len(), 2);
        assert_eq!(diagram_automorphisms(&rs(&["D4"])).len(), 6);
        assert_eq!(diagram_automorphisms(&rs(&["D5"])).len(), 2);
        assert_eq!(diagram_automorphisms(&rs(&["E6"])).len(), 2);
        assert_eq!(diagram_automorphisms(&rs(&["A1", "A1"])).len(), 2);
        assert_eq!(diagram_automorphisms(&rs(&["A2", "A2", "B3"])).len(), 8);
        assert_eq!(diagram_automorphisms(&rs(&["E7"])).len(), 1);
    }
}
