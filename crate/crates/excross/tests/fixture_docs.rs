//! The JSON documents shipped under docs/fixtures must parse into exactly the
//! programmatic fixtures.

use std::path::PathBuf;

use excross::fixtures;
use excross::io::{parse_action_doc, ActionDoc};

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../docs/fixtures")
        .join(name)
}

fn load(name: &str) -> ActionDoc {
    let path = fixture_path(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path:?}: {e}"));
    parse_action_doc(name, &text).unwrap()
}

#[test]
fn set_level_documents_match_fixtures() {
    let cases = [
        ("p1.json", fixtures::p1()),
        ("z2_swap.json", fixtures::z2_swap()),
        ("z2_global.json", fixtures::z2_global()),
        ("z2_empty.json", fixtures::z2_empty()),
        ("z3_rotation.json", fixtures::z3_rotation()),
        ("sym3_partial.json", fixtures::sym3_partial()),
        ("z4_broken.json", fixtures::z4_broken()),
    ];
    for (file, expected) in cases {
        match load(file) {
            ActionDoc::Set(doc) => {
                let built = doc.build(None).unwrap();
                assert!(built == expected, "{file} does not match its fixture");
            }
            ActionDoc::Algebra(_) => panic!("{file} should be a set-level document"),
        }
    }
}

#[test]
fn zero_product_document_matches_fixture() {
    match load("zero_product_fixture.json") {
        ActionDoc::Algebra(doc) => {
            let built = doc.build(None).unwrap();
            assert!(built == fixtures::zero_product_action());
        }
        ActionDoc::Set(_) => panic!("expected an algebra-level document"),
    }
}
