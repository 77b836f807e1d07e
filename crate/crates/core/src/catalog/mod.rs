//! The list of spherical systems of indecomposable multiplicity-free spaces.
//!
//! Each entry is a Luna diagram written down as data: spherical roots,
//! `S^p`, the circles of every color in `D^a` and the arrows. The pairings of
//! `D^a` with the spherical roots are recovered by [`read_pairings`].

mod entries;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::datum::SphericalSystem;
use crate::error::Error;
use crate::roots::{
    cartan_matrix, coroot_on_root, diagram_isomorphisms, normalize_components, Component, DiagramAutomorphism,
    RootCoeffVector, RootSystem, SimpleRootId,
};

pub use entries::ENTRY_COUNT;

/// A vertex of a diagram: raw component (0-based) and position (1-based).
pub type Vertex = (usize, usize);

/// Circle above (`Up`, the color `D^+`) or below (`Down`, `D^-`) a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Sign {
    Up,
    Down,
}

/// A Luna diagram over raw (not yet normalized) components.
#[derive(Debug, Clone, Default)]
pub struct Diagram {
    pub components: Vec<Component>,
    pub roots: Vec<Vec<(Vertex, i64)>>,
    pub marked: BTreeSet<usize>,
    pub s_p: Vec<Vertex>,
    pub colors: Vec<Vec<(Vertex, Sign)>>,
    /// `(v, g)`: arrow from the upper circle of `v` to spherical root `g`.
    pub arrows: Vec<(Vertex, usize)>,
}

impl Diagram {
    pub fn new(components: Vec<Component>) -> Self {
        Diagram { components, ..Default::default() }
    }

    pub fn root(&mut self, terms: &[(Vertex, i64)]) -> usize {
        self.roots.push(terms.to_vec());
        self.roots.len() - 1
    }

    pub fn simple(&mut self, v: Vertex) -> usize {
        self.root(&[(v, 1)])
    }

    pub fn mark(&mut self, g: usize) {
        self.marked.insert(g);
    }

    pub fn sp(&mut self, c: usize, positions: impl IntoIterator<Item = usize>) {
        self.s_p.extend(positions.into_iter().map(|p| (c, p)));
    }

    pub fn color(&mut self, circles: &[(Vertex, Sign)]) {
        self.colors.push(circles.to_vec());
    }

    pub fn arrow(&mut self, v: Vertex, g: usize) {
        self.arrows.push((v, g));
    }
}

/// Parameter values `(n, n', n'')`; unused ones are `None`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    pub n: Option<usize>,
    pub n1: Option<usize>,
    pub n2: Option<usize>,
}

impl Params {
    pub fn get(&self, name: &str) -> Option<usize> {
        match name {
            "n" => self.n,
            "n'" => self.n1,
            "n''" => self.n2,
            _ => None,
        }
    }

    pub fn set(&mut self, name: &str, v: usize) -> Result<(), String> {
        match name {
            "n" => self.n = Some(v),
            "n'" | "np" => self.n1 = Some(v),
            "n''" | "npp" => self.n2 = Some(v),
            _ => return Err(format!("unknown parameter {name}")),
        }
        Ok(())
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [("n", self.n), ("n'", self.n1), ("n''", self.n2)]
            .iter()
            .filter_map(|(k, v)| v.map(|v| format!("{k}={v}")))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

impl FromStr for Params {
    type Err = String;

    /// Parses `n=3,n'=5` (commas or whitespace).
    fn from_str(s: &str) -> Result<Self, String> {
        let mut p = Params::default();
        for part in s.split(|c: char| c == ',' || c.is_whitespace()).filter(|x| !x.is_empty()) {
            let (k, v) = part.split_once('=').ok_or_else(|| format!("expected name=value, got {part}"))?;
            let v: usize = v.trim().parse().map_err(|_| format!("bad value in {part}"))?;
            p.set(k.trim(), v)?;
        }
        Ok(p)
    }
}

/// Metadata of one entry.
#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub id: usize,
    pub description: &'static str,
    pub params: &'static [&'static str],
    pub domain: &'static str,
}

impl CatalogEntry {
    pub fn check_params(&self, p: &Params) -> Result<(), Error> {
        let bad = |reason: String| Error::BadParameters { id: self.id, reason };
        for name in ["n", "n'", "n''"] {
            let wanted = self.params.contains(&name);
            match (wanted, p.get(name)) {
                (true, None) => return Err(bad(format!("missing parameter {name}"))),
                (false, Some(_)) => return Err(bad(format!("entry takes no parameter {name}"))),
                _ => {}
            }
        }
        if entries::in_domain(self.id, p) {
            Ok(())
        } else {
            Err(bad(format!("({p}) violates {}", self.domain)))
        }
    }

    /// The `k` smallest parameter tuples in the domain (by sum, then lexicographically).
    pub fn smallest_params(&self, k: usize) -> Vec<Params> {
        let mut all = self.params_up_to(12);
        all.sort_by_key(|p| (p.n.unwrap_or(0) + p.n1.unwrap_or(0) + p.n2.unwrap_or(0), *p));
        all.truncate(k);
        all
    }

    /// Every tuple in the domain with all values at most `bound`.
    pub fn params_up_to(&self, bound: usize) -> Vec<Params> {
        let mut out = vec![Params::default()];
        for name in self.params {
            let mut next = Vec::new();
            for p in &out {
                for v in 1..=bound {
                    let mut q = *p;
                    q.set(name, v).expect("known parameter name");
                    next.push(q);
                }
            }
            out = next;
        }
        out.retain(|p| entries::in_domain(self.id, p));
        out
    }
}

pub fn entries() -> Vec<CatalogEntry> {
    (1..=ENTRY_COUNT).map(|id| entry(id).expect("entry ids are contiguous")).collect()
}

pub fn entry(id: usize) -> Result<CatalogEntry, Error> {
    entries::meta(id).ok_or(Error::UnknownEntry(id))
}

/// An instantiated entry.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub system: SphericalSystem,
    /// Indices into `system.sigma`.
    pub marked: BTreeSet<usize>,
}

pub fn diagram(id: usize, p: &Params) -> Result<Diagram, Error> {
    entry(id)?.check_params(p)?;
    Ok(entries::build(id, p))
}

pub fn instantiate(id: usize, p: &Params) -> Result<Instance, Error> {
    let d = diagram(id, p)?;
    diagram_to_system(&d).map_err(|e| match e {
        Error::InvalidDatum(mut v) => {
            v.insert(0, format!("entry {id} ({p})"));
            Error::InvalidDatum(v)
        }
        other => other,
    })
}

/// Normalize the components of a diagram and read off its spherical system.
pub fn diagram_to_system(d: &Diagram) -> Result<Instance, Error> {
    let (components, maps) = normalize_components(&d.components)?;
    let rs = RootSystem { components, torus_rank: 0 };
    let id_of = |v: Vertex| -> Result<SimpleRootId, Error> {
        maps.get(v.0)
            .and_then(|m| m.get(v.1.wrapping_sub(1)))
            .copied()
            .ok_or_else(|| Error::UnknownRoot(format!("{}.{}", v.0 + 1, v.1)))
    };
    let idx = |v: Vertex| -> Result<usize, Error> { rs.index(id_of(v)?) };
    let mut sigma = Vec::new();
    for r in &d.roots {
        let mut c = vec![0i64; rs.rank()];
        for &(v, k) in r {
            c[idx(v)?] += k;
        }
        sigma.push(RootCoeffVector(c));
    }
    let s_p = d.s_p.iter().map(|&v| id_of(v)).collect::<Result<BTreeSet<_>, _>>()?;
    let mut circles = Vec::new();
    for col in &d.colors {
        circles.push(col.iter().map(|&(v, s)| Ok((idx(v)?, s))).collect::<Result<Vec<_>, Error>>()?);
    }
    let arrows = d.arrows.iter().map(|&(v, g)| Ok((idx(v)?, g))).collect::<Result<Vec<_>, Error>>()?;
    let pairings = read_pairings(&rs, &sigma, &circles, &arrows).map_err(Error::InvalidDatum)?;
    let d_a = pairings.into_iter().enumerate().map(|(i, p)| (format!("D{}", i + 1), p)).collect();
    Ok(Instance { system: SphericalSystem { root_system: rs, sigma, s_p, d_a }, marked: d.marked.clone() })
}

/// Recover `<rho(D), gamma>` for colors given by circles and arrows.
///
/// A circle at `alpha` gives 1 on `alpha`. An arrow from `D_alpha^+` gives -1.
/// Otherwise `D_alpha^+` is 0 on roots not orthogonal to `alpha`, and the
/// sum rule `<D_alpha^+, g> + <D_alpha^-, g> = <alpha^vee, g>` fills in the rest.
/// Remaining free values of upper circles are set to 0 one at a time.
pub fn read_pairings(
    rs: &RootSystem,
    sigma: &[RootCoeffVector],
    circles: &[Vec<(usize, Sign)>],
    arrows: &[(usize, usize)],
) -> Result<Vec<Vec<i64>>, Vec<String>> {
    let cartan = cartan_matrix(rs);
    let nc = circles.len();
    let ng = sigma.len();
    let mut errors = Vec::new();
    // simple roots in Sigma with their upper and lower colors
    let mut at: BTreeMap<usize, (Option<usize>, Option<usize>)> = BTreeMap::new();
    for (c, col) in circles.iter().enumerate() {
        for &(a, s) in col {
            let e = at.entry(a).or_default();
            let slot = if s == Sign::Up { &mut e.0 } else { &mut e.1 };
            if slot.replace(c).is_some() {
                errors.push(format!("two {s:?} circles at {}", rs.id(a)));
            }
        }
    }
    let simple_pos = |a: usize| sigma.iter().position(|g| *g == rs.simple_root(a));
    let mut pairs = Vec::new();
    for (&a, &(up, down)) in &at {
        match (up, down, simple_pos(a)) {
            (Some(u), Some(d), Some(g)) if u != d => pairs.push((a, u, d, g)),
            (Some(_), Some(_), Some(_)) => errors.push(format!("both circles at {} are one color", rs.id(a))),
            (_, _, None) => errors.push(format!("circles at {}, which is not a spherical root", rs.id(a))),
            _ => errors.push(format!("{} needs a circle above and below", rs.id(a))),
        }
    }
    if !errors.is_empty() {
        return Err(errors);
    }

    let mut x: Vec<Vec<Option<i64>>> = vec![vec![None; ng]; nc];
    let set = |x: &mut Vec<Vec<Option<i64>>>, c: usize, g: usize, v: i64, errors: &mut Vec<String>| match x[c][g] {
        Some(old) if old != v => errors.push(format!("color {} on root {g}: {old} vs {v}", c + 1)),
        _ => x[c][g] = Some(v),
    };
    for &(_, u, d, g) in &pairs {
        set(&mut x, u, g, 1, &mut errors);
        set(&mut x, d, g, 1, &mut errors);
    }
    for &(a, g) in arrows {
        match at.get(&a).and_then(|e| e.0) {
            Some(u) if g < ng => set(&mut x, u, g, -1, &mut errors),
            _ => errors.push(format!("arrow from {} has no upper circle or target", rs.id(a))),
        }
    }
    let propagate = |x: &mut Vec<Vec<Option<i64>>>, errors: &mut Vec<String>| loop {
        let mut changed = false;
        for &(a, u, d, _) in &pairs {
            for (g, root) in sigma.iter().enumerate() {
                let total = coroot_on_root(&cartan, a, root);
                match (x[u][g], x[d][g]) {
                    (Some(p), None) => {
                        x[d][g] = Some(total - p);
                        changed = true;
                    }
                    (None, Some(q)) => {
                        x[u][g] = Some(total - q);
                        changed = true;
                    }
                    (Some(p), Some(q)) if p + q != total => {
                        errors.push(format!("sum rule fails at {} on root {g}", rs.id(a)));
                        return;
                    }
                    _ => {}
                }
            }
        }
        if !changed {
            return;
        }
    };
    propagate(&mut x, &mut errors);
    for orthogonal in [false, true] {
        for &(a, u, _, _) in &pairs {
            for (g, root) in sigma.iter().enumerate() {
                let ortho = coroot_on_root(&cartan, a, root) == 0;
                if ortho == orthogonal && x[u][g].is_none() {
                    x[u][g] = Some(0);
                    propagate(&mut x, &mut errors);
                }
            }
        }
    }
    if !errors.is_empty() {
        errors.sort();
        errors.dedup();
        return Err(errors);
    }
    x.into_iter()
        .enumerate()
        .map(|(c, row)| {
            row.into_iter()
                .enumerate()
                .map(|(g, v)| v.ok_or_else(|| format!("color {} on root {g} is undetermined", c + 1)))
                .collect::<Result<Vec<i64>, String>>()
        })
        .collect::<Result<Vec<_>, String>>()
        .map_err(|e| vec![e])
}

/// An isomorphism of spherical systems: a diagram map plus the induced map on Sigma.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemIsomorphism {
    pub diagram: DiagramAutomorphism,
    /// `sigma_map[i]` is the index in the target of source root `i`.
    pub sigma_map: Vec<usize>,
}

/// All isomorphisms from `a` to `b`.
pub fn system_isomorphisms(a: &SphericalSystem, b: &SphericalSystem) -> Vec<SystemIsomorphism> {
    if a.sigma.len() != b.sigma.len() || a.s_p.len() != b.s_p.len() || a.d_a.len() != b.d_a.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    'iso: for iso in diagram_isomorphisms(&a.root_system, &b.root_system) {
        let mut sigma_map = Vec::new();
        for g in &a.sigma {
            let mut img = vec![0i64; b.root_system.rank()];
            for (i, &c) in g.0.iter().enumerate() {
                img[iso.vertex_map[i]] = c;
            }
            match b.sigma.iter().position(|h| h.0 == img) {
                Some(j) => sigma_map.push(j),
                None => continue 'iso,
            }
        }
        for id in &a.s_p {
            let i = a.root_system.index(*id).expect("S^p ids are valid");
            if !b.s_p.contains(&b.root_system.id(iso.vertex_map[i])) {
                continue 'iso;
            }
        }
        let mut pa: Vec<Vec<i64>> = a
            .d_a
            .iter()
            .map(|(_, p)| {
                let mut q = vec![0i64; p.len()];
                for (i, &v) in p.iter().enumerate() {
                    q[sigma_map[i]] = v;
                }
                q
            })
            .collect();
        let mut pb: Vec<Vec<i64>> = b.d_a.iter().map(|(_, p)| p.clone()).collect();
        pa.sort();
        pb.sort();
        if pa == pb {
            out.push(SystemIsomorphism { diagram: iso, sigma_map });
        }
    }
    out
}

pub fn systems_isomorphic(a: &SphericalSystem, b: &SphericalSystem) -> bool {
    !system_isomorphisms(a, b).is_empty()
}

/// A component matched against an entry.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchResult {
    pub entry_id: usize,
    pub params: Params,
    pub isomorphism: SystemIsomorphism,
    /// Indices into the component's Sigma.
    pub marked_pullback: BTreeSet<usize>,
}

/// Every match of `c`, one per (entry, parameters, distinct marked pullback).
pub fn match_all(c: &SphericalSystem) -> Vec<MatchResult> {
    let bound = c.root_system.rank() + 1;
    let mut comps = c.root_system.components.clone();
    comps.sort();
    let mut out = Vec::new();
    for e in entries() {
        for p in e.params_up_to(bound) {
            let d = entries::build(e.id, &p);
            let Ok((mut norm, _)) = normalize_components(&d.components) else { continue };
            norm.sort();
            if norm != comps {
                continue;
            }
            let Ok(inst) = diagram_to_system(&d) else { continue };
            let mut seen = BTreeSet::new();
            for iso in system_isomorphisms(c, &inst.system) {
                let pull: BTreeSet<usize> =
                    (0..c.sigma.len()).filter(|&i| inst.marked.contains(&iso.sigma_map[i])).collect();
                if seen.insert(pull.clone()) {
                    out.push(MatchResult { entry_id: e.id, params: p, isomorphism: iso, marked_pullback: pull });
                }
            }
        }
    }
    out
}

/// Failure modes of [`match_component`].
#[derive(Debug, Clone, PartialEq)]
pub enum MatchError {
    /// Matches exist but pull back different marked sets.
    AmbiguousMarking(Vec<MatchResult>),
}

impl fmt::Display for MatchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchError::AmbiguousMarking(ms) => {
                let parts: Vec<String> = ms
                    .iter()
                    .map(|m| format!("entry {} ({}) marks {:?}", m.entry_id, m.params, m.marked_pullback))
                    .collect();
                write!(f, "ambiguous marking: {}", parts.join("; "))
            }
        }
    }
}

/// The unique match of `c`, or an error if the marked pullback is not unique.
pub fn match_component(c: &SphericalSystem) -> Result<Option<MatchResult>, MatchError> {
    let all = match_all(c);
    let Some(first) = all.first() else { return Ok(None) };
    if all.iter().all(|m| m.marked_pullback == first.marked_pullback) {
        Ok(Some(first.clone()))
    } else {
        Err(MatchError::AmbiguousMarking(all))
    }
}
