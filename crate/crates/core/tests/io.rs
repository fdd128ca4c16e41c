use std::collections::BTreeSet;

use qtau_core::export::{keys_from_json, poset_to_dot, poset_to_json};
use qtau_core::extension::{embedding, OPEContext};
use qtau_core::literal::{module_to_json, parse_module, parse_pair};
use qtau_core::tilting::{TauTilt, DEFAULT_NODE_CAP};
use qtau_core::{fixtures, BoundQuiverAlgebra, Error};

#[test]
fn algebra_text_round_trips() {
    for name in ["b1a", "b1b", "a1a", "a1b", "b2", "a2", "a3", "point"] {
        let alg = fixtures::by_name(name).unwrap();
        let again = BoundQuiverAlgebra::parse(&alg.to_text()).unwrap();
        assert_eq!(again.basis(), alg.basis(), "{name}");
        for p in alg.basis() {
            assert_eq!(again.normal_form(p), alg.normal_form(p));
        }
        assert_eq!(again.to_text(), alg.to_text());
    }
}

#[test]
fn poset_json_reimport_reproduces_keys() {
    let a = fixtures::a2();
    let t = TauTilt::new(&a);
    let p = t.hasse(DEFAULT_NODE_CAP).unwrap();
    let text = serde_json::to_string_pretty(&poset_to_json(&t, &p)).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["nodes"].as_array().unwrap().len(), 168);
    for (stored, key) in keys_from_json(&a, &value).unwrap() {
        assert_eq!(stored, key.to_string());
    }
}

#[test]
fn poset_json_is_deterministic() {
    let a = fixtures::a1b();
    let render = || {
        let t = TauTilt::new(&a);
        let p = t.hasse(DEFAULT_NODE_CAP).unwrap();
        serde_json::to_string(&poset_to_json(&t, &p)).unwrap()
    };
    assert_eq!(render(), render());
}

#[test]
fn dot_highlights_image_of_e() {
    let ctx = OPEContext::from_algebras(&fixtures::b1b(), &fixtures::a1b()).unwrap();
    let (tb, ta) = (TauTilt::new(&ctx.b), TauTilt::new(&ctx.a));
    let (pb, pa) = (tb.hasse(DEFAULT_NODE_CAP).unwrap(), ta.hasse(DEFAULT_NODE_CAP).unwrap());
    let image: BTreeSet<usize> = embedding(&ctx, &tb, &ta, &pb, &pa).unwrap().image.into_iter().collect();
    let dot = poset_to_dot("A1b", &pa, Some(&image)).unwrap();
    assert_eq!(dot.matches("dashed").count(), 6);
    assert_eq!(dot.matches(" -> ").count(), 27);
    assert!(dot.starts_with("digraph \"A1b\" {"));
    let outside: BTreeSet<usize> = [18].into();
    assert!(matches!(poset_to_dot("A1b", &pa, Some(&outside)), Err(Error::HighlightNotSubset)));
}

#[test]
fn module_json_uses_canonical_rationals() {
    let a = fixtures::a1b();
    let m = parse_module(&a, "uniserial:3>2>1").unwrap();
    let text = module_to_json(&a, &m).to_string();
    assert!(text.contains("\"1/1\""), "{text}");
    assert_eq!(parse_module(&a, &text).unwrap(), m);
}

#[test]
fn pair_literals_reject_unknown_vertices() {
    let a = fixtures::a2();
    assert!(matches!(parse_pair(&a, "simple:9"), Err(Error::UnknownVertex(_))));
    assert!(matches!(parse_pair(&a, "simple:1 | 2 | 3"), Err(Error::Literal(_))));
}
