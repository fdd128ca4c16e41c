use std::collections::BTreeSet;
use std::time::Instant;

use qtau_core::decompose::is_isomorphic;
use qtau_core::export::golden_nodes;
use qtau_core::extension::{boundary, embedding, nonprojective_witnesses, OPEContext};
use qtau_core::homology::{hom_basis, hom_dim, max_rank_combination, tau};
use qtau_core::rep::{direct_sum, injective, simple, uniserial};
use qtau_core::suites::{run_suite, A1B_GOLDEN};
use qtau_core::tilting::{HassePoset, Pair, TauTilt, DEFAULT_NODE_CAP};
use qtau_core::{fixtures, BoundQuiverAlgebra, Matrix, Rep};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn walk(alg: &BoundQuiverAlgebra, w: &str) -> Rep {
    let hops: Vec<&str> = w.split('>').collect();
    uniserial(alg, &alg.walk(&hops).unwrap()).unwrap()
}

fn simples(alg: &BoundQuiverAlgebra, labels: &[&str]) -> Vec<Rep> {
    labels.iter().map(|l| simple(alg, alg.vertex(l).unwrap())).collect()
}

fn verts(alg: &BoundQuiverAlgebra, labels: &[&str]) -> Vec<usize> {
    labels.iter().map(|l| alg.vertex(l).unwrap()).collect()
}

fn poset(t: &TauTilt) -> HassePoset {
    t.hasse(DEFAULT_NODE_CAP).unwrap()
}

/// Loewy label with each layer's factors sorted, so `31/2/1` and `1 3/2/1`
/// compare equal.
fn normalize_module(label: &str) -> String {
    label
        .split('/')
        .map(|layer| {
            let mut f: Vec<char> = layer.chars().filter(|c| !c.is_whitespace()).collect();
            f.sort_unstable();
            f.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
        })
        .collect::<Vec<_>>()
        .join("/")
}

fn normalize_node(modules: &[&str], support: &[&str]) -> (BTreeSet<String>, BTreeSet<String>) {
    (modules.iter().map(|m| normalize_module(m)).collect(), support.iter().map(|s| s.to_string()).collect())
}

/// The eighteen pairs drawn in the figure of the exchange quiver of `A1b`,
/// transcribed with their composition diagrams.
const FIGURE: [(&[&str], &[&str]); 18] = [
    (&["3", "3/2", "3/2/1"], &[]),
    (&["2", "3/2"], &["1"]),
    (&["3", "31/2/1", "1"], &[]),
    (&["1/2/1", "31/2/1", "1"], &[]),
    (&["2", "3/2", "3/2/1"], &[]),
    (&["2", "2/1"], &["3"]),
    (&["3", "31/2/1", "3/2/1"], &[]),
    (&["1/2/1", "31/2/1", "3/2/1"], &[]),
    (&["2", "2/1", "3/2/1"], &[]),
    (&["1/2/1", "2/1"], &["3"]),
    (&["1/2/1", "2/1", "3/2/1"], &[]),
    (&["3", "3/2"], &["1"]),
    (&["2"], &["1", "3"]),
    (&["3", "1"], &["2"]),
    (&["3"], &["1", "2"]),
    (&["1"], &["2", "3"]),
    (&[], &["1", "2", "3"]),
    (&["1", "1/2/1"], &["3"]),
];

fn criterion_1() -> Outcome {
    let a = fixtures::a1b();
    let t = TauTilt::new(&a);
    let start = Instant::now();
    let p = poset(&t);
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 10.0, format!("took {secs:.2}s"))?;
    ensure(p.complete && p.nodes.len() == 18, format!("{} nodes, complete={}", p.nodes.len(), p.complete))?;
    let mut degree = vec![0; p.nodes.len()];
    for arr in &p.arrows {
        degree[arr.from] += 1;
        degree[arr.to] += 1;
    }
    ensure(degree.iter().all(|&d| d == 3), format!("degrees {degree:?}"))?;
    ensure(p.arrows.len() == 18 * 3 / 2, format!("{} arrows", p.arrows.len()))?;
    let ours: BTreeSet<_> = p
        .nodes
        .iter()
        .map(|n| {
            let ms: Vec<&str> = n.key.modules.iter().map(String::as_str).collect();
            let ss: Vec<&str> = n.key.support.iter().map(String::as_str).collect();
            normalize_node(&ms, &ss)
        })
        .collect();
    let figure: BTreeSet<_> = FIGURE.iter().map(|(m, s)| normalize_node(m, s)).collect();
    ensure(ours == figure, "node set differs from the figure")?;
    let golden: serde_json::Value = serde_json::from_str(A1B_GOLDEN).unwrap();
    ensure(golden_nodes(&p) == golden, "node set differs from the golden file")?;
    let top = p.index_of(&t.key(&t.top_pair())).ok_or("no top node")?;
    let target = t.from_summands(&[simple(&a, 1), walk(&a, "2>1"), walk(&a, "3>2>1")], &[]);
    let below = p.index_of(&t.key(&target)).ok_or("no node 2 + 2/1 + 3/2/1")?;
    ensure(p.has_arrow(top, below), "missing arrow from the top node to 2 + 2/1 + 3/2/1")?;

    let a2 = fixtures::a2();
    let t2 = TauTilt::new(&a2);
    let p2 = poset(&t2);
    let from = t2.from_summands(&simples(&a2, &["1", "5", "4"]), &verts(&a2, &["2", "3"]));
    let to = t2.from_summands(&simples(&a2, &["1", "4"]), &verts(&a2, &["2", "3", "5"]));
    let (i, j) = (p2.index_of(&t2.key(&from)).ok_or("A2 source")?, p2.index_of(&t2.key(&to)).ok_or("A2 target")?);
    ensure(p2.has_arrow(i, j), "missing A2 arrow (1+5+4|2,3) -> (1+4|2,3,5)")?;
    Ok(format!("18 nodes, 27 arrows, 3-regular, figure and golden node sets match, {secs:.3}s"))
}

fn b1b_context() -> OPEContext {
    OPEContext::from_algebras(&fixtures::b1b(), &fixtures::a1b()).unwrap()
}

fn criterion_2() -> Outcome {
    let ctx = b1b_context();
    let (tb, ta) = (TauTilt::new(&ctx.b), TauTilt::new(&ctx.a));
    let (pb, pa) = (poset(&tb), poset(&ta));
    ensure(pb.nodes.len() == 6 && pb.complete, format!("B1b has {} nodes", pb.nodes.len()))?;
    let emb = embedding(&ctx, &tb, &ta, &pb, &pa).map_err(|e| e.to_string())?;
    ensure(emb.is_full(), format!("violations {:?}", emb.violations))?;
    let image: BTreeSet<usize> = emb.image.iter().copied().collect();
    ensure(image.len() == 6, "image is not six nodes")?;
    let between = pa.arrows.iter().filter(|a| image.contains(&a.from) && image.contains(&a.to)).count();
    ensure(between == pb.arrows.len(), format!("{between} arrows between image nodes, {} in B1b", pb.arrows.len()))?;
    for arr in &pb.arrows {
        ensure(pa.has_arrow(emb.image[arr.from], emb.image[arr.to]), "a B1b arrow is not lifted")?;
    }
    Ok(format!("6 image nodes, {between} arrows lifted, no fullness violations"))
}

fn criterion_3() -> Outcome {
    let ctx = OPEContext::from_algebras(&fixtures::b1a(), &fixtures::a1a()).unwrap();
    let (a, b) = (&ctx.a, &ctx.b);
    let m = walk(a, "3>2>1");
    let tau_a = tau(a, &m);
    ensure(tau_a.dims() == [1, 2, 1], format!("tau_A M has dimension vector {:?}", tau_a.dims()))?;
    let one = |r, c| Matrix::from_i64(r, c, &vec![1; r * c]);
    let arrow = |name: &str| b.quiver().arrow_index(name).unwrap();
    let (ia, ib) = (arrow("a"), arrow("b"));
    let mut mats = vec![Matrix::zeros(0, 0); 2];
    mats[ib] = one(1, 1);
    mats[ia] = Matrix::zeros(1, 1);
    let one_two = Rep::new(b, vec![1, 1], mats).unwrap();
    let mut mats = vec![Matrix::zeros(0, 0); 2];
    mats[ia] = Matrix::from_i64(1, 2, &[1, 0]);
    mats[ib] = Matrix::from_i64(2, 1, &[0, 1]);
    let two_one_two = Rep::new(b, vec![1, 2], mats).unwrap();
    let tau_b_rm = tau(b, &ctx.restrict(&m));
    let r_tau_a = ctx.restrict(&tau_a);
    ensure(is_isomorphic(b, &tau_b_rm, &one_two), "tau_B(R M) is not 1/2")?;
    ensure(is_isomorphic(b, &r_tau_a, &two_one_two), "R(tau_A M) is not 2/1/2")?;
    let f = max_rank_combination(&hom_basis(b, &tau_b_rm, &r_tau_a), &tau_b_rm, &r_tau_a).ok_or("no morphism")?;
    ensure(f.is_injective() && !f.is_surjective(), "no strict embedding found")?;
    Ok("tau_B(R M) = 1/2 embeds strictly in R(tau_A M) = 2/1/2; tau_A M has dimension vector (1,2,1)".into())
}

fn criterion_4() -> Outcome {
    let a2 = fixtures::a2();
    let t = TauTilt::new(&a2);
    let p = poset(&t);
    let almost = t.from_summands(&simples(&a2, &["1", "4"]), &verts(&a2, &["2", "3"]));
    let found: BTreeSet<_> = t.complements(&p, &almost).map_err(|e| e.to_string())?.iter().map(|q| t.key(q)).collect();
    let with_s5 = t.key(&t.from_summands(&simples(&a2, &["1", "4", "5"]), &verts(&a2, &["2", "3"])));
    let with_p5 = t.key(&t.from_summands(&simples(&a2, &["1", "4"]), &verts(&a2, &["2", "3", "5"])));
    ensure(found == [with_s5.clone(), with_p5.clone()].into(), format!("complements {found:?}"))?;
    let (i, j) = (p.index_of(&with_s5).ok_or("missing node")?, p.index_of(&with_p5).ok_or("missing node")?);
    ensure(p.has_arrow(i, j), "missing arrow")?;
    Ok(format!("complements (5, 0) and (0, P5); arrow {} -> {}", with_s5.pretty(), with_p5.pretty()))
}

fn sweep(b: BoundQuiverAlgebra, a: BoundQuiverAlgebra) -> Result<(usize, usize), String> {
    let ctx = OPEContext::from_algebras(&b, &a).map_err(|e| e.to_string())?;
    let (tb, ta) = (TauTilt::new(&ctx.b), TauTilt::new(&ctx.a));
    let (pb, pa) = (poset(&tb), poset(&ta));
    for node in &pb.nodes {
        let e = ctx.e_map(&ta, &node.pair);
        ensure(ta.is_stt_pair(&e).unwrap(), format!("e({}) is not a pair", node.key))?;
        ensure(pa.index_of(&ta.key(&e)).is_some(), format!("e({}) is not a node", node.key))?;
        ensure(tb.key(&ctx.r_map(&tb, &e)) == node.key, format!("r e != id at {}", node.key))?;
    }
    for node in &pa.nodes {
        let r = ctx.r_map(&tb, &node.pair);
        ensure(tb.is_stt_pair(&r).unwrap(), format!("r({}) is not a pair", node.key))?;
    }
    Ok((pb.nodes.len(), pa.nodes.len()))
}

fn criterion_5() -> Outcome {
    let (b1, a1) = sweep(fixtures::b1b(), fixtures::a1b())?;
    ensure((b1, a1) == (6, 18), format!("{b1} and {a1} pairs"))?;
    let (b2, a2) = sweep(fixtures::b2(), fixtures::a2())?;
    Ok(format!("B1b/A1b: {b1} and {a1} pairs; B2/A2: {b2} and {a2} pairs; r e = id"))
}

fn criterion_6() -> Outcome {
    let ctx = b1b_context();
    let tb = TauTilt::new(&ctx.b);
    let pb = poset(&tb);
    let nu = injective(&ctx.b, ctx.b.vertex("2").unwrap());
    let mut seen = Vec::new();
    for node in pb.nodes.iter().filter(|n| n.pair.support.is_empty()) {
        let t = node.pair.module(&ctx.b);
        let et = ctx.extend(&t);
        let whole = direct_sum(&[et.clone(), ctx.s.clone()]);
        let lhs = hom_dim(&ctx.a, &whole, &whole);
        let (end_b, hom_nu) = (hom_dim(&ctx.b, &t, &t), hom_dim(&ctx.b, &t, &nu));
        ensure(lhs == end_b + hom_nu + 1, format!("{}: {lhs} != {end_b} + {hom_nu} + 1", node.key))?;
        ensure(hom_dim(&ctx.a, &ctx.s, &et) == 0, "Hom(S, E T) != 0")?;
        seen.push(format!("{lhs}={end_b}+{hom_nu}+1"));
    }
    ensure(seen.len() == 3, format!("{} tau-tilting modules", seen.len()))?;
    Ok(format!("tau-tilting B1b-modules: {}", seen.join(", ")))
}

fn criterion_7() -> Outcome {
    let mut total = 0;
    for (b, a) in [(fixtures::b1b(), fixtures::a1b()), (fixtures::b2(), fixtures::a2())] {
        let ctx = OPEContext::from_algebras(&b, &a).unwrap();
        let (tb, ta) = (TauTilt::new(&ctx.b), TauTilt::new(&ctx.a));
        let (pb, pa) = (poset(&tb), poset(&ta));
        let emb = embedding(&ctx, &tb, &ta, &pb, &pa).map_err(|e| e.to_string())?;
        let cases = boundary(&ctx, &ta, &pa, &emb.image);
        ensure(cases.iter().all(|c| c.holds), format!("boundary fails over {}", a.name()))?;
        total += cases.len();
    }
    let ctx = OPEContext::from_algebras(&fixtures::b2(), &fixtures::a2()).unwrap();
    let ta = TauTilt::new(&ctx.a);
    let pa = poset(&ta);
    let node = ta.from_summands(&simples(&ctx.a, &["1", "5", "4"]), &verts(&ctx.a, &["2", "3"]));
    let succ = ta.from_summands(&simples(&ctx.a, &["1", "4"]), &verts(&ctx.a, &["2", "3", "5"]));
    let i = pa.index_of(&ta.key(&node)).ok_or("missing node")?;
    let j = pa.index_of(&ta.key(&succ)).ok_or("missing successor")?;
    let case = boundary(&ctx, &ta, &pa, &[i]).remove(0);
    ensure(case.hom_em_s == 0 && case.successors_outside == [j], "the expected non-image successor is not found")?;
    Ok(format!("{total} image nodes checked; (1+5+4|2,3) leaves the image towards (1+4|2,3,5)"))
}

fn criterion_8() -> Outcome {
    let ctx = OPEContext::from_algebras(&fixtures::b2(), &fixtures::a3()).unwrap();
    ensure(!ctx.projective, "A3 treated as a projective extension")?;
    let (tb, ta) = (TauTilt::new(&ctx.b), TauTilt::new(&ctx.a));
    let w = nonprojective_witnesses(&ctx, &tb, &ta, &poset(&tb), &poset(&ta)).map_err(|e| e.to_string())?;
    ensure(!w.extension.is_empty() && !w.restriction.is_empty(), "missing witnesses")?;
    Ok(format!("{} extension and {} restriction witnesses", w.extension.len(), w.restriction.len()))
}

fn criterion_9() -> Outcome {
    let seed = std::env::var("QTAU_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(1);
    let start = Instant::now();
    let report = run_suite("properties", seed).map_err(|e| e.to_string())?;
    let secs = start.elapsed().as_secs_f64();
    let fails: Vec<String> = report.failures().iter().map(|c| format!("{}: {}", c.id, c.details)).collect();
    ensure(fails.is_empty(), fails.join("; "))?;
    ensure(secs < 60.0, format!("took {secs:.1}s"))?;

    let a = fixtures::a1b();
    let t = TauTilt::new(&a);
    let p = poset(&t);
    let mut almost = 0;
    for node in &p.nodes {
        for k in 0..node.pair.summands.len() {
            almost += 1;
            t.complements(&p, &node.pair.without(k)).map_err(|e| format!("{}: {e}", node.key))?;
        }
        for s in 0..node.pair.support.len() {
            let mut support = node.pair.support.clone();
            support.remove(s);
            almost += 1;
            t.complements(&p, &Pair { summands: node.pair.summands.clone(), support }).map_err(|e| e.to_string())?;
        }
    }
    Ok(format!(
        "{} checks with seed {seed} in {secs:.1}s; two complements at all {almost} removals",
        report.checks.len()
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("figure reproduction", criterion_1),
        ("image of e", criterion_2),
        ("tau example", criterion_3),
        ("second example", criterion_4),
        ("pair maps", criterion_5),
        ("endomorphism extension", criterion_6),
        ("boundary", criterion_7),
        ("non-projective failure", criterion_8),
        ("property suites", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match std::panic::catch_unwind(run) {
            Ok(Ok(details)) => println!("criterion {} ({name}): pass - {details}", i + 1),
            Ok(Err(reason)) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL - {reason}", i + 1);
            }
            Err(_) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL - panicked", i + 1);
            }
        }
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
