mod common;

use std::path::PathBuf;

use lunasmooth::catalog::{entries, instantiate};
use lunasmooth::document::{Document, EntryRef};
use lunasmooth::error::Error;
use lunasmooth::lattice::IntVector;
use num::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fixtures() -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let mut out: Vec<(String, String)> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read_to_string(&p).unwrap()))
        .collect();
    out.sort();
    out
}

fn round_trip(d: &Document) -> Document {
    Document::parse(&d.to_json()).unwrap()
}

#[test]
fn fixtures_are_in_canonical_form() {
    let all = fixtures();
    assert!(all.len() >= 9);
    for (name, text) in all {
        let d = Document::parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(d.to_json(), text, "{name}");
    }
}

#[test]
fn big_coordinates_survive() {
    let f = common::sl_sp4(4);
    let mut c = f.cone.clone();
    let big: BigInt = "123456789012345678901234567890".parse().unwrap();
    c.valuation_generators[0] = IntVector(vec![0.into(), 0.into(), 0.into(), 0.into(), 0.into(), big.clone()]);
    let d = Document::Datum { datum: f.datum, cone: Some(c) };
    let text = d.to_json();
    assert!(text.contains("\"123456789012345678901234567890\""));
    assert_eq!(round_trip(&d), d);
}

#[test]
fn system_documents_keep_marks_and_entry() {
    let i = instantiate(14, &"n=6".parse().unwrap()).unwrap();
    let d = Document::System {
        system: i.system,
        marked: Some(i.marked),
        entry: Some(EntryRef { id: 14, params: "n=6".into() }),
    };
    assert_eq!(round_trip(&d), d);
}

fn edit(text: &str, from: &str, to: &str) -> String {
    assert!(text.contains(from), "{from}");
    text.replacen(from, to, 1)
}

#[test]
fn malformed_documents_are_rejected() {
    let text = Document::Datum { datum: common::g2().datum, cone: Some(common::g2().cone) }.to_json();
    let bad = [
        edit(&text, "\"schema\": 1", "\"schema\": 2"),
        edit(&text, "\"kind\": \"datum\"", "\"kind\": \"variety\""),
        edit(&text, "\"s_p\"", "\"extra\": 0,\n  \"s_p\""),
        edit(&text, "\"G2\"", "\"B2\""),
        text[..text.len() / 2].to_string(),
        "[]".to_string(),
    ];
    for b in bad {
        assert!(matches!(Document::parse(&b), Err(Error::Document(_))), "{b}");
    }
    assert!(matches!(Document::parse(&edit(&text, "\"G2\"", "\"Q2\"")), Err(Error::RootSystem(_))));
}

#[test]
fn bad_root_ids_are_rejected() {
    let i = instantiate(5, &"n=4".parse().unwrap()).unwrap();
    let mut d = Document::System { system: i.system, marked: None, entry: None }.to_json();
    d = edit(&d, "\"s_p\": []", "\"s_p\": [\"1.x\"]");
    assert!(Document::parse(&d).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_data_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let corpus = common::corpus();
        let (datum, cone) = common::random_mfs(&mut rng, &corpus);
        let d = Document::Datum { datum, cone: Some(cone) };
        prop_assert_eq!(round_trip(&d), d);
        let bare = Document::Datum { datum: common::random_catalog_datum(&mut rng), cone: None };
        prop_assert_eq!(round_trip(&bare), bare);
    }

    #[test]
    fn catalog_systems_round_trip(k in 0usize..200) {
        let all: Vec<_> = entries().iter().flat_map(|e| e.smallest_params(2).into_iter().map(move |p| (e.id, p))).collect();
        let (id, p) = all[k % all.len()];
        let i = instantiate(id, &p).unwrap();
        let d = Document::System { system: i.system, marked: Some(i.marked), entry: Some(EntryRef { id, params: p.to_string() }) };
        let text = d.to_json();
        prop_assert_eq!(Document::parse(&text).unwrap().to_json(), text);
    }
}
