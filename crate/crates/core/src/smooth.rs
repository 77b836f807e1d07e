//! The smoothness criterion for simple spherical varieties.
//!
//! Condition 1 is local factoriality of the colored cone. Condition 2 asks
//! that every colored factor of the spherical closure of the localized datum
//! is in the catalog. Condition 3 pairs each marked spherical root with a
//! ray of the cone that is not a color ray.

use std::collections::BTreeSet;
use std::fmt;

use num::{One, Signed, Zero};

use crate::catalog::{match_all, MatchResult};
use crate::datum::{
    cone_generators, decompose_indexed, validate_colored_cone, Closure, ColoredCone, ConeFinding,
    HomogeneousSphericalDatum,
};
use crate::error::Error;
use crate::lattice::{
    elementary_divisors, extremal_rays, is_part_of_basis, primitive_generator, Int, IntVector, RationalCone,
};
use crate::roots::SimpleRootId;

#[derive(Debug, Clone, PartialEq)]
pub enum Cond1Witness {
    /// The cone is not simplicial.
    RayCount {
        rays: usize,
        dim: usize,
    },
    /// The ray generators span a sublattice with this elementary divisor.
    ElementaryDivisor(Int),
    ColorNotPrimitive {
        label: String,
        rho: IntVector,
    },
    ColorNotARay {
        label: String,
        rho: IntVector,
    },
    /// The same color listed twice in F.
    DuplicateColor {
        label: String,
    },
    /// Two colors of F with the same image.
    SameRho {
        first: String,
        second: String,
        rho: IntVector,
    },
}

impl fmt::Display for Cond1Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cond1Witness::RayCount { rays, dim } => write!(f, "{rays} extremal rays in a cone of dimension {dim}"),
            Cond1Witness::ElementaryDivisor(d) => write!(f, "ray generators have elementary divisor {d}"),
            Cond1Witness::ColorNotPrimitive { label, rho } => write!(f, "rho({label}) = {rho} is not primitive"),
            Cond1Witness::ColorNotARay { label, rho } => {
                write!(f, "rho({label}) = {rho} is not an extremal ray generator")
            }
            Cond1Witness::DuplicateColor { label } => write!(f, "color {label} appears twice in F"),
            Cond1Witness::SameRho { first, second, rho } => write!(f, "rho({first}) = rho({second}) = {rho}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FactorialityReport {
    pub pass: bool,
    pub rays: Vec<IntVector>,
    pub witness: Option<Cond1Witness>,
}

/// Local factoriality: C is spanned by part of a basis of N containing rho(F),
/// and rho is injective on F.
pub fn check_condition1(d: &HomogeneousSphericalDatum, c: &ColoredCone) -> Result<FactorialityReport, Error> {
    let gens = cone_generators(d, c)?;
    let colors = d.full_colors()?;
    let cone = RationalCone::new(gens, d.lattice_rank())?;
    let rays = extremal_rays(&cone);
    let fail = |w: Cond1Witness| FactorialityReport { pass: false, rays: rays.clone(), witness: Some(w) };

    let mut seen: Vec<(&String, &IntVector)> = Vec::new();
    for l in &c.f_labels {
        let rho = &colors.iter().find(|x| &x.label == l).ok_or_else(|| Error::UnknownColor(l.clone()))?.rho;
        if let Some((first, _)) = seen.iter().find(|(x, _)| *x == l) {
            return Ok(fail(Cond1Witness::DuplicateColor { label: (*first).clone() }));
        }
        if let Some((first, _)) = seen.iter().find(|(_, r)| *r == rho) {
            return Ok(fail(Cond1Witness::SameRho { first: (*first).clone(), second: l.clone(), rho: rho.clone() }));
        }
        seen.push((l, rho));
    }
    let dim = cone.dim();
    if rays.len() != dim {
        return Ok(fail(Cond1Witness::RayCount { rays: rays.len(), dim }));
    }
    if !is_part_of_basis(&rays, d.lattice_rank())? {
        let divs = elementary_divisors(&rays, d.lattice_rank())?;
        let bad = divs.into_iter().find(|x| !x.is_one()).unwrap_or_else(Int::zero);
        return Ok(fail(Cond1Witness::ElementaryDivisor(bad)));
    }
    for (l, rho) in &seen {
        if rho.gcd() != Int::one() {
            return Ok(fail(Cond1Witness::ColorNotPrimitive { label: (*l).clone(), rho: (*rho).clone() }));
        }
        if !rays.contains(rho) {
            return Ok(fail(Cond1Witness::ColorNotARay { label: (*l).clone(), rho: (*rho).clone() }));
        }
    }
    Ok(FactorialityReport { pass: true, rays, witness: None })
}

#[derive(Debug, Clone, PartialEq)]
pub enum ComponentOutcome {
    /// Every simple root of the factor lies in its S^p.
    Colorless,
    /// One entry per distinct marked pullback.
    Matched(Vec<MatchResult>),
    Unmatched,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComponentReport {
    pub summary: String,
    /// Indices into the closure's Sigma.
    pub roots: Vec<usize>,
    pub outcome: ComponentOutcome,
}

#[derive(Debug, Clone)]
pub struct Condition2 {
    pub pass: bool,
    pub s_f: BTreeSet<SimpleRootId>,
    pub localized: HomogeneousSphericalDatum,
    pub closure: Closure,
    pub components: Vec<ComponentReport>,
}

pub fn check_condition2(d: &HomogeneousSphericalDatum, c: &ColoredCone) -> Result<Condition2, Error> {
    let s_f = d.s_f(&c.f_labels)?;
    let localized = d.localize(&s_f)?;
    let closure = localized.closure_with_provenance()?;
    let mut components = Vec::new();
    for (sys, roots) in decompose_indexed(&closure.system)? {
        let outcome = if !sys.has_colors() {
            ComponentOutcome::Colorless
        } else {
            let ms = match_all(&sys);
            if ms.is_empty() {
                ComponentOutcome::Unmatched
            } else {
                ComponentOutcome::Matched(ms)
            }
        };
        components.push(ComponentReport { summary: sys.summary(), roots, outcome });
    }
    let pass = components.iter().all(|r| r.outcome != ComponentOutcome::Unmatched);
    Ok(Condition2 { pass, s_f, localized, closure, components })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Assignment {
    /// Index into the closure's Sigma.
    pub root: usize,
    pub gamma: IntVector,
    pub u: IntVector,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cond3Failure {
    MissingU { root: usize, gamma: IntVector },
    SeveralU { root: usize, gamma: IntVector, us: Vec<IntVector> },
    NotMinusOne { root: usize, gamma: IntVector, u: IntVector, value: Int },
    SharedU { u: IntVector, roots: Vec<usize> },
    StrayPairing { root: usize, gamma: IntVector, u: IntVector, value: Int },
}

impl fmt::Display for Cond3Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cond3Failure::MissingU { root, gamma } => {
                write!(f, "marked root #{root} {gamma} pairs 0 with every non-color ray")
            }
            Cond3Failure::SeveralU { root, gamma, us } => {
                let us: Vec<String> = us.iter().map(|u| u.to_string()).collect();
                write!(f, "marked root #{root} {gamma} pairs nonzero with several rays {}", us.join(", "))
            }
            Cond3Failure::NotMinusOne { root, gamma, u, value } => {
                write!(f, "marked root #{root} {gamma} pairs {value} with {u}, expected -1")
            }
            Cond3Failure::SharedU { u, roots } => write!(f, "ray {u} serves marked roots {roots:?}"),
            Cond3Failure::StrayPairing { root, gamma, u, value } => {
                write!(f, "unmarked root #{root} {gamma} pairs {value} with {u}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Condition3 {
    pub pass: bool,
    pub u_set: Vec<IntVector>,
    /// The marked closure roots used (for the best combination of matches).
    pub marked: Vec<usize>,
    pub assignment: Vec<Assignment>,
    pub failure: Option<Cond3Failure>,
}

/// Closure roots as elements of M (doubled roots have doubled coordinates).
fn closure_roots(cond2: &Condition2) -> Vec<IntVector> {
    cond2.closure.provenance.iter().map(|&(i, k)| cond2.localized.sigma[i].m_coords.scaled(&Int::from(k))).collect()
}

fn u_set(d: &HomogeneousSphericalDatum, c: &ColoredCone, cond2: &Condition2) -> Result<Vec<IntVector>, Error> {
    let gens = cone_generators(d, c)?;
    let cone = RationalCone::new(gens, d.lattice_rank())?;
    let mut color_rays = Vec::new();
    for col in cond2.localized.full_colors()? {
        if !col.rho.is_zero() {
            color_rays.push(primitive_generator(&col.rho)?);
        }
    }
    Ok(extremal_rays(&cone).into_iter().filter(|r| !color_rays.contains(r)).collect())
}

fn check_marking(gammas: &[IntVector], marked: &[usize], us: &[IntVector]) -> Result<Vec<Assignment>, Cond3Failure> {
    let mut assignment: Vec<Assignment> = Vec::new();
    for &i in marked {
        let gamma = &gammas[i];
        let hits: Vec<(&IntVector, Int)> = us.iter().map(|u| (u, u.dot(gamma))).filter(|(_, v)| !v.is_zero()).collect();
        match hits.as_slice() {
            [] => return Err(Cond3Failure::MissingU { root: i, gamma: gamma.clone() }),
            [(u, v)] if *v != -Int::one() => {
                return Err(Cond3Failure::NotMinusOne {
                    root: i,
                    gamma: gamma.clone(),
                    u: (*u).clone(),
                    value: v.clone(),
                })
            }
            [(u, _)] => {
                if let Some(prev) = assignment.iter().find(|a| &&a.u == u) {
                    return Err(Cond3Failure::SharedU { u: (*u).clone(), roots: vec![prev.root, i] });
                }
                assignment.push(Assignment { root: i, gamma: gamma.clone(), u: (*u).clone() });
            }
            _ => {
                return Err(Cond3Failure::SeveralU {
                    root: i,
                    gamma: gamma.clone(),
                    us: hits.iter().map(|(u, _)| (*u).clone()).collect(),
                })
            }
        }
    }
    for (i, gamma) in gammas.iter().enumerate() {
        if marked.contains(&i) {
            continue;
        }
        for u in us {
            let v = u.dot(gamma);
            if !v.is_zero() {
                return Err(Cond3Failure::StrayPairing { root: i, gamma: gamma.clone(), u: u.clone(), value: v });
            }
        }
    }
    Ok(assignment)
}

/// Condition 3. When a factor admits several marked pullbacks, every
/// combination is tried and the first that works is reported.
pub fn check_condition3(
    d: &HomogeneousSphericalDatum,
    c: &ColoredCone,
    cond2: &Condition2,
) -> Result<Condition3, Error> {
    let us = u_set(d, c, cond2)?;
    let gammas = closure_roots(cond2);
    let choices: Vec<Vec<Vec<usize>>> = cond2
        .components
        .iter()
        .filter_map(|r| match &r.outcome {
            ComponentOutcome::Matched(ms) => Some(
                ms.iter()
                    .map(|m| m.marked_pullback.iter().map(|&j| r.roots[j]).collect::<Vec<usize>>())
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect(),
            ),
            _ => None,
        })
        .collect();
    let mut pick = vec![0usize; choices.len()];
    let mut first: Option<Condition3> = None;
    loop {
        let mut marked: Vec<usize> = choices.iter().zip(&pick).flat_map(|(ch, &k)| ch[k].iter().copied()).collect();
        marked.sort();
        let result = check_marking(&gammas, &marked, &us);
        let outcome = match result {
            Ok(assignment) => {
                return Ok(Condition3 { pass: true, u_set: us, marked, assignment, failure: None });
            }
            Err(f) => Condition3 { pass: false, u_set: us.clone(), marked, assignment: Vec::new(), failure: Some(f) },
        };
        first.get_or_insert(outcome);
        let mut k = 0;
        while k < pick.len() {
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
        if k == pick.len() {
            break;
        }
    }
    Ok(first.expect("at least one combination"))
}

#[derive(Debug, Clone)]
pub struct SmoothnessReport {
    pub verdict: bool,
    pub cond1: FactorialityReport,
    pub cond2: Condition2,
    pub cond3: Condition3,
    pub s_f_used: BTreeSet<SimpleRootId>,
    pub u_set: Vec<IntVector>,
    /// Non-fatal cone findings (valuations outside V and the like).
    pub findings: Vec<ConeFinding>,
}

impl SmoothnessReport {
    /// Names of the failing conditions, e.g. `["cond1", "cond3"]`.
    pub fn failed_conditions(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.cond1.pass {
            out.push("cond1");
        }
        if !self.cond2.pass {
            out.push("cond2");
        }
        if !self.cond3.pass {
            out.push("cond3");
        }
        out
    }
}

/// Decide smoothness. Invalid data and structurally broken cones are errors.
pub fn is_smooth(d: &HomogeneousSphericalDatum, c: &ColoredCone) -> Result<SmoothnessReport, Error> {
    d.validate()?;
    let findings = validate_colored_cone(d, c)?;
    let structural: Vec<String> = findings.iter().filter(|f| f.is_structural()).map(|f| f.to_string()).collect();
    if !structural.is_empty() {
        return Err(Error::InvalidCone(structural));
    }
    let cond1 = check_condition1(d, c)?;
    let cond2 = check_condition2(d, c)?;
    let cond3 = check_condition3(d, c, &cond2)?;
    let verdict = cond1.pass && cond2.pass && cond3.pass;
    assert_eq!(verdict, cond1.pass && cond2.pass && cond3.pass);
    Ok(SmoothnessReport {
        verdict,
        s_f_used: cond2.s_f.clone(),
        u_set: cond3.u_set.clone(),
        cond1,
        cond2,
        cond3,
        findings,
    })
}

/// Shorthand for the verdict.
pub fn smooth(d: &HomogeneousSphericalDatum, c: &ColoredCone) -> Result<bool, Error> {
    Ok(is_smooth(d, c)?.verdict)
}

/// Whether the gcd test says a vector is primitive; used by callers that
/// build cones by hand.
pub fn is_primitive(v: &IntVector) -> bool {
    !v.is_zero() && v.gcd().abs().is_one()
}
