mod common;

use std::collections::BTreeSet;

use lunasmooth::catalog::*;
use lunasmooth::roots::RootCoeffVector;
use proptest::prelude::*;

fn p(s: &str) -> Params {
    s.parse().unwrap()
}

#[test]
fn ids_are_contiguous() {
    let ids: Vec<usize> = entries().iter().map(|e| e.id).collect();
    assert_eq!(ids, (1..=ids.len()).collect::<Vec<_>>());
    assert!(entry(0).is_err());
    assert!(entry(ids.len() + 1).is_err());
}

#[test]
fn params_round_trip() {
    let q = p("n=3, n'=5");
    assert_eq!(q.n, Some(3));
    assert_eq!(q.n1, Some(5));
    assert_eq!(q.to_string(), "n=3, n'=5");
    assert_eq!(p(&q.to_string()), q);
    assert!("n".parse::<Params>().is_err());
    assert!("m=2".parse::<Params>().is_err());
    assert!("n=x".parse::<Params>().is_err());
}

#[test]
fn domain_is_enforced() {
    assert!(instantiate(7, &p("n=4")).is_err());
    assert!(instantiate(7, &p("n=6")).is_ok());
    assert!(instantiate(13, &p("n=4")).is_err());
    assert!(instantiate(9, &p("n=3")).is_err());
    assert!(instantiate(9, &p("n=2,n'=2")).is_err());
    assert!(instantiate(9, &p("n=2,n'=3")).is_ok());
}

#[test]
fn entry_21_by_hand() {
    let i = instantiate(21, &Params::default()).unwrap();
    assert_eq!(i.system.root_system.describe(), "A1");
    assert_eq!(i.system.sigma, vec![RootCoeffVector(vec![1])]);
    let mut pairings: Vec<Vec<i64>> = i.system.d_a.iter().map(|(_, p)| p.clone()).collect();
    pairings.sort();
    assert_eq!(pairings, vec![vec![1], vec![1]]);
    assert_eq!(i.marked, BTreeSet::from([0]));
}

#[test]
fn entry_13_is_the_tensor_product() {
    let i = instantiate(13, &Params::default()).unwrap();
    let oracle = common::sl_sp4(4);
    let s = oracle.datum.spherical_closure().unwrap();
    let isos = system_isomorphisms(&s, &i.system);
    assert!(!isos.is_empty());
    // the flip of A3 swapping D1 and D4 is a symmetry of the system, so the
    // mark pulls back to either end of the chain
    let pulled: BTreeSet<Vec<usize>> =
        isos.iter().map(|iso| (0..s.sigma.len()).filter(|&k| i.marked.contains(&iso.sigma_map[k])).collect()).collect();
    assert!(pulled.contains(&oracle.marked));
    assert_eq!(pulled, BTreeSet::from([vec![0], vec![2]]));
}

#[test]
fn entry_21_is_two_vectors() {
    let s = common::two_vectors_sl2().datum.spherical_closure().unwrap();
    let i = instantiate(21, &Params::default()).unwrap();
    assert!(systems_isomorphic(&s, &i.system));
}

#[test]
fn relabeled_colors_still_match() {
    let mut s = instantiate(14, &p("n=5")).unwrap().system;
    s.d_a.reverse();
    for (k, (l, _)) in s.d_a.iter_mut().enumerate() {
        *l = format!("X{k}");
    }
    assert!(match_all(&s).iter().any(|m| m.entry_id == 14 && m.params == p("n=5")));
}

#[test]
fn wrong_pairing_does_not_match() {
    let mut s = instantiate(13, &Params::default()).unwrap().system;
    s.d_a[0].1[0] = 0;
    assert!(!match_all(&s).iter().any(|m| m.entry_id == 13));
}

fn instance() -> impl Strategy<Value = (usize, Params)> {
    let all: Vec<(usize, Params)> =
        entries().iter().flat_map(|e| e.smallest_params(3).into_iter().map(move |p| (e.id, p))).collect();
    prop::sample::select(all)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn instances_are_valid_closed_and_self_matching((id, params) in instance()) {
        let i = instantiate(id, &params).unwrap();
        prop_assert!(i.system.validate().is_ok());
        prop_assert!(i.system.is_spherically_closed());
        prop_assert!(i.marked.iter().all(|&k| k < i.system.sigma.len()));
        let ms = match_all(&i.system);
        prop_assert!(ms.iter().any(|m| m.entry_id == id && m.params == params));
        for m in &ms {
            prop_assert!(common::same_system(m.entry_id, id) || m.entry_id == id, "{} also matches {}", id, m.entry_id);
        }
    }

    #[test]
    fn self_isomorphisms_form_a_group((id, params) in instance()) {
        let s = instantiate(id, &params).unwrap().system;
        let isos = system_isomorphisms(&s, &s);
        let n = s.sigma.len();
        prop_assert!(isos.iter().any(|i| i.sigma_map == (0..n).collect::<Vec<_>>()));
        for a in &isos {
            for b in &isos {
                let comp: Vec<usize> = (0..n).map(|k| b.sigma_map[a.sigma_map[k]]).collect();
                prop_assert!(isos.iter().any(|c| c.sigma_map == comp));
            }
        }
    }
}
