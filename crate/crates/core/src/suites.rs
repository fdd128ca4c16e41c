//! Named verification suites behind `qtau verify-paper`.
//!
//! Every suite returns a [`Report`]; errors raised while computing a check
//! are recorded as failures of that check rather than aborting the suite.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::BoundQuiverAlgebra;
use crate::catalog::indecomposables;
use crate::decompose::is_isomorphic;
use crate::error::{Error, Result};
use crate::export::{golden_nodes, poset_to_dot};
use crate::extension::{boundary, embedding, nonprojective_witnesses, reachability, OPEContext};
use crate::fixtures;
use crate::homology::{
    ext1_dim, fac_contains, hom_basis, hom_dim, max_rank_combination, radical_layers, stable_hom_dims, tau, tau_inverse,
};
use crate::random::{random_base_change, random_module};
use crate::rep::{direct_sum_or_zero, injective, simple, uniserial, Rep};
use crate::report::{Check, Report};
use crate::tilting::{contains_key, HassePoset, Pair, PairKey, TauTilt, DEFAULT_NODE_CAP};

pub const SUITES: [&str; 6] = ["s2-example", "s3-figure", "s3-embedding", "s3-boundary", "nonprojective", "properties"];

pub const A1B_GOLDEN: &str = include_str!("../fixtures/a1b_nodes.golden.json");

/// Inputs of a suite run: the seed of the sampled checks and, optionally, a
/// replacement for the built-in `A1b` golden node file.
#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub seed: u64,
    pub a1b_golden: Option<String>,
}

pub fn run_suite(name: &str, seed: u64) -> Result<Report> {
    run_suite_with(name, &SuiteOptions { seed, a1b_golden: None })
}

pub fn run_suite_with(name: &str, options: &SuiteOptions) -> Result<Report> {
    let seed = options.seed;
    let mut report = Report::new(name);
    match name {
        "s2-example" => s2_example(&mut report),
        "s3-figure" => s3_figure(&mut report, options.a1b_golden.as_deref().unwrap_or(A1B_GOLDEN)),
        "s3-embedding" => s3_embedding(&mut report),
        "s3-boundary" => s3_boundary(&mut report),
        "nonprojective" => nonprojective(&mut report),
        "properties" => properties(&mut report, seed),
        other => return Err(Error::UnknownSuite(other.to_string())),
    }
    Ok(report)
}

/// Runs `f` and records its verdict, turning an error into a failure.
fn guard(report: &mut Report, id: &str, f: impl FnOnce() -> Result<(bool, String)>) -> bool {
    match f() {
        Ok((ok, details)) => report.check(id, ok, details),
        Err(e) => report.check(id, false, format!("error: {e}")),
    }
}

fn walk(alg: &BoundQuiverAlgebra, vertices: &str) -> Result<Rep> {
    let hops: Vec<&str> = vertices.split('>').collect();
    uniserial(alg, &alg.walk(&hops)?)
}

fn simples(alg: &BoundQuiverAlgebra, labels: &[&str]) -> Result<Vec<Rep>> {
    labels.iter().map(|l| Ok(simple(alg, alg.vertex(l)?))).collect()
}

fn vertices(alg: &BoundQuiverAlgebra, labels: &[&str]) -> Result<Vec<usize>> {
    labels.iter().map(|l| alg.vertex(l)).collect()
}

fn complete_poset(t: &TauTilt) -> Result<HassePoset> {
    let p = t.hasse(DEFAULT_NODE_CAP)?;
    if !p.complete {
        return Err(Error::CapExceeded(DEFAULT_NODE_CAP));
    }
    Ok(p)
}

fn contexts() -> Result<Vec<(&'static str, OPEContext)>> {
    Ok(vec![
        ("b1b/a1b", OPEContext::from_algebras(&fixtures::b1b(), &fixtures::a1b())?),
        ("b1a/a1a", OPEContext::from_algebras(&fixtures::b1a(), &fixtures::a1a())?),
        ("b2/a2", OPEContext::from_algebras(&fixtures::b2(), &fixtures::a2())?),
    ])
}

/// Every almost complete pair obtained by dropping one summand or support
/// vertex of a node, with the number of its completions among the nodes.
pub fn almost_complete_counts(t: &TauTilt, poset: &HassePoset) -> Vec<(PairKey, usize)> {
    let mut seen = BTreeSet::new();
    for node in &poset.nodes {
        for k in 0..node.pair.summands.len() {
            seen.insert(t.key(&node.pair.without(k)));
        }
        for s in 0..node.pair.support.len() {
            let mut support = node.pair.support.clone();
            support.remove(s);
            seen.insert(t.key(&Pair { summands: node.pair.summands.clone(), support }));
        }
    }
    seen.into_iter()
        .map(|almost| {
            let n = poset.nodes.iter().filter(|n| contains_key(&n.key, &almost)).count();
            (almost, n)
        })
        .collect()
}

fn s2_example(report: &mut Report) {
    let ctx = match OPEContext::from_algebras(&fixtures::b1a(), &fixtures::a1a()) {
        Ok(c) => c,
        Err(e) => {
            report.check("s2.context", false, format!("error: {e}"));
            return;
        }
    };
    let (a, b) = (&ctx.a, &ctx.b);
    guard(report, "s2.tau-a-m", || {
        let m = walk(a, "3>2>1")?;
        let t = tau(a, &m);
        let layers = radical_layers(a, &t);
        Ok((
            t.dims() == [1, 2, 1],
            format!("tau_A(3/2/1) has dimension vector {:?}, radical layers {layers:?}", t.dims()),
        ))
    });
    guard(report, "s2.restrictions", || {
        let m = walk(a, "3>2>1")?;
        let rm = ctx.restrict(&m);
        let r_tau = ctx.restrict(&tau(a, &m));
        let tau_rm = tau(b, &rm);
        let ok = is_isomorphic(b, &rm, &walk(b, "2>1")?)
            && is_isomorphic(b, &tau_rm, &walk(b, "1>2")?)
            && is_isomorphic(b, &r_tau, &walk(b, "2>1>2")?);
        Ok((ok, "R M = 2/1, tau_B(R M) = 1/2, R(tau_A M) = 2/1/2".into()))
    });
    guard(report, "s2.proper-embedding", || {
        let m = walk(a, "3>2>1")?;
        let small = tau(b, &ctx.restrict(&m));
        let big = ctx.restrict(&tau(a, &m));
        let f = max_rank_combination(&hom_basis(b, &small, &big), &small, &big);
        let ok = f.as_ref().is_some_and(|f| f.is_injective() && !f.is_surjective());
        Ok((ok, format!("injective, non-surjective map of dimension {} into {}", small.total_dim(), big.total_dim())))
    });
    guard(report, "s2.tau-projective", || {
        let zero = (0..a.vertex_count()).all(|v| tau(a, &crate::rep::projective(a, v)).is_zero());
        Ok((zero, "tau vanishes on every indecomposable projective".into()))
    });
    let ctxs = match contexts() {
        Ok(c) => c,
        Err(e) => {
            report.check("s2.contexts", false, format!("error: {e}"));
            return;
        }
    };
    for (name, ctx) in &ctxs {
        section2_sweep(report, name, ctx);
    }
}

/// Extension and restriction results on every tau-rigid module occurring
/// in the posets of `B` and `A`.
fn section2_sweep(report: &mut Report, name: &str, ctx: &OPEContext) {
    let (tb, ta) = (TauTilt::new(&ctx.b), TauTilt::new(&ctx.a));
    let (pb, pa) = match (complete_poset(&tb), complete_poset(&ta)) {
        (Ok(pb), Ok(pa)) => (pb, pa),
        (Err(e), _) | (_, Err(e)) => {
            report.check(format!("s2.{name}.posets"), false, format!("error: {e}"));
            return;
        }
    };
    guard(report, &format!("s2.{name}.extend-plus-s"), || {
        let mut bad = Vec::new();
        for node in &pb.nodes {
            let mut parts: Vec<Rep> = node.pair.summands.iter().map(|m| ctx.extend(m)).collect();
            parts.push(ctx.s.clone());
            if !ta.summands_tau_rigid(&parts)? {
                bad.push(node.key.to_string());
            }
        }
        Ok((bad.is_empty(), format!("E T + S tau-rigid for {} modules T; failures {bad:?}", pb.nodes.len())))
    });
    let mut modules: Vec<Rep> = Vec::new();
    let mut labels = BTreeSet::new();
    for node in &pa.nodes {
        for m in &node.pair.summands {
            if labels.insert(ta.label_of(m)) {
                modules.push(m.clone());
            }
        }
        if !node.pair.summands.is_empty() {
            modules.push(node.pair.module(&ctx.a));
        }
    }
    guard(report, &format!("s2.{name}.restriction"), || {
        let (mut split, mut embeds, mut rigid, mut proper) = (0, 0, 0, 0);
        for t in &modules {
            let c = ctx.restriction_check(&tb, t)?;
            split += usize::from(c.summands_split);
            embeds += usize::from(c.tau_embeds);
            rigid += usize::from(c.restriction_rigid);
            proper += usize::from(c.tau_embedding_proper);
        }
        let n = modules.len();
        Ok((
            split == n && embeds == n && rigid == n,
            format!(
                "{n} tau-rigid modules: presentation summands split {split}, tau_B R T embeds {embeds} \
                 (properly {proper}), R T tau-rigid {rigid}"
            ),
        ))
    });
}

fn s3_figure(report: &mut Report, golden_text: &str) {
    let a1b = fixtures::a1b();
    let t = TauTilt::new(&a1b);
    let start = Instant::now();
    let poset = match t.hasse(DEFAULT_NODE_CAP) {
        Ok(p) => p,
        Err(e) => {
            report.check("s3.a1b.hasse", false, format!("error: {e}"));
            return;
        }
    };
    let elapsed = start.elapsed();
    report.check(
        "s3.a1b.hasse",
        poset.nodes.len() == 18 && poset.complete && elapsed.as_secs_f64() < 10.0,
        format!("{} nodes, complete={}, {:.3}s", poset.nodes.len(), poset.complete, elapsed.as_secs_f64()),
    );
    report.check(
        "s3.a1b.regular",
        poset.is_regular() && poset.arrows.len() == 27,
        format!("{} arrows, every node of degree 3: {}", poset.arrows.len(), poset.is_regular()),
    );
    guard(report, "s3.a1b.top-arrow", || {
        let target = t.from_summands(&[simple(&a1b, 1), walk(&a1b, "2>1")?, walk(&a1b, "3>2>1")?], &[]);
        let (i, j) = (poset.index_of(&t.key(&t.top_pair())), poset.index_of(&t.key(&target)));
        let ok = matches!((i, j), (Some(i), Some(j)) if poset.has_arrow(i, j));
        Ok((ok, format!("{} -> {}", t.key(&t.top_pair()).pretty(), t.key(&target).pretty())))
    });
    guard(report, "s3.a1b.golden", || {
        let ours = golden_nodes(&poset);
        let golden: serde_json::Value = serde_json::from_str(golden_text).map_err(|e| Error::Json(e.to_string()))?;
        Ok((ours == golden, "node set equals the audited golden file".into()))
    });
    guard(report, "s3.a1b.complement-example", || {
        let almost = t.from_summands(&[walk(&a1b, "2>1")?, walk(&a1b, "3>2>1")?], &[]);
        let found = t.complements(&poset, &almost)?;
        let p1 = walk(&a1b, "1>2>1")?;
        let ok = found.iter().any(|p| p.summands.iter().any(|m| is_isomorphic(&a1b, m, &p1)));
        let shown: Vec<String> = found.iter().map(|p| t.key(p).pretty()).collect();
        Ok((ok, format!("completions {shown:?}")))
    });
    guard(report, "s3.a1b.cover", || {
        let n = poset.nodes.len();
        let leq: Vec<Vec<bool>> =
            (0..n).map(|i| (0..n).map(|j| t.leq(&poset.nodes[i].pair, &poset.nodes[j].pair)).collect()).collect();
        let mut bad = 0;
        for arr in &poset.arrows {
            let (p, q) = (arr.from, arr.to);
            if !leq[q][p] || leq[p][q] {
                bad += 1;
            }
            for r in 0..n {
                if r != p && r != q && leq[q][r] && leq[r][p] && !leq[r][q] && !leq[p][r] {
                    bad += 1;
                }
            }
        }
        let reach = reachability(&poset);
        let same = (0..n).all(|i| (0..n).all(|j| reach[i][j] == leq[j][i]));
        Ok((
            bad == 0 && same,
            format!("{} arrows are covers; violations {bad}; order equals reachability: {same}", poset.arrows.len()),
        ))
    });
    guard(report, "s3.a1b.definition-equivalence", || {
        let mut checked = 0;
        let mut bad = Vec::new();
        for (i, node) in poset.nodes.iter().enumerate() {
            for k in 0..node.pair.summands.len() {
                let label = t.label_of(&node.pair.summands[k]);
                let rest = node.pair.without(k).module(&a1b);
                let outside_fac = !fac_contains(&a1b, &rest, &node.pair.summands[k]);
                let has_arrow = poset.arrows.iter().any(|a| a.from == i && a.summand == label);
                let down = if outside_fac {
                    let step = t.left_mutation(&node.pair, k)?;
                    t.lt(&step.result, &node.pair)
                } else {
                    false
                };
                checked += 1;
                if outside_fac != has_arrow || outside_fac != down {
                    bad.push(format!("{} at {label}", node.key));
                }
            }
        }
        Ok((bad.is_empty(), format!("{checked} summand positions; mismatches {bad:?}")))
    });
    maximality(report, "a1b", &t, &poset);
    guard(report, "s3.a1b.two-complements", || {
        let counts = almost_complete_counts(&t, &poset);
        let bad: Vec<String> = counts.iter().filter(|(_, n)| *n != 2).map(|(k, n)| format!("{k}: {n}")).collect();
        Ok((bad.is_empty(), format!("{} almost complete pairs; not two: {bad:?}", counts.len())))
    });

    let b2 = fixtures::b2();
    let tb2 = TauTilt::new(&b2);
    guard(report, "s3.b2.regular-and-complements", || {
        let p = complete_poset(&tb2)?;
        let counts = almost_complete_counts(&tb2, &p);
        let bad = counts.iter().filter(|(_, n)| *n != 2).count();
        Ok((
            p.is_regular() && bad == 0,
            format!(
                "{} nodes, {} arrows, 4-regular {}, {} almost complete pairs, {bad} without two completions",
                p.nodes.len(),
                p.arrows.len(),
                p.is_regular(),
                counts.len()
            ),
        ))
    });

    let a2 = fixtures::a2();
    let ta2 = TauTilt::new(&a2);
    let pa2 = match complete_poset(&ta2) {
        Ok(p) => p,
        Err(e) => {
            report.check("s3.a2.hasse", false, format!("error: {e}"));
            return;
        }
    };
    guard(report, "s3.a2.arrow", || {
        let from = ta2.from_summands(&simples(&a2, &["1", "5", "4"])?, &vertices(&a2, &["2", "3"])?);
        let to = ta2.from_summands(&simples(&a2, &["1", "4"])?, &vertices(&a2, &["2", "3", "5"])?);
        let (i, j) = (pa2.index_of(&ta2.key(&from)), pa2.index_of(&ta2.key(&to)));
        let ok = matches!((i, j), (Some(i), Some(j)) if pa2.has_arrow(i, j));
        Ok((ok, format!("{} -> {}", ta2.key(&from).pretty(), ta2.key(&to).pretty())))
    });
    guard(report, "s3.a2.complements", || {
        let almost = ta2.from_summands(&simples(&a2, &["1", "4"])?, &vertices(&a2, &["2", "3"])?);
        let found: BTreeSet<PairKey> = ta2.complements(&pa2, &almost)?.iter().map(|p| ta2.key(p)).collect();
        let expected: BTreeSet<PairKey> = [
            ta2.key(&ta2.from_summands(&simples(&a2, &["1", "4", "5"])?, &vertices(&a2, &["2", "3"])?)),
            ta2.key(&ta2.from_summands(&simples(&a2, &["1", "4"])?, &vertices(&a2, &["2", "3", "5"])?)),
        ]
        .into();
        Ok((found == expected, "completions add S5 to the module or 5 to the support".into()))
    });
    guard(report, "s3.a2.bongartz", || {
        let s5 = simple(&a2, a2.vertex("5")?);
        let b = ta2.bongartz(&pa2, &s5)?;
        let top = ta2.bongartz(&pa2, &Rep::zero(&a2))?;
        let ok = b.summands.iter().any(|m| is_isomorphic(&a2, m, &s5)) && ta2.key(&top) == ta2.key(&ta2.top_pair());
        Ok((ok, format!("Bongartz completion of S5 is {}", ta2.key(&b).pretty())))
    });
    guard(report, "s3.point.support-growth", || {
        let k = fixtures::point();
        let tk = TauTilt::new(&k);
        let step = tk.left_mutation(&tk.top_pair(), 0)?;
        Ok((
            step.cokernel.is_zero() && step.result.support == [0],
            format!("(k, 0) -> {}", tk.key(&step.result).pretty()),
        ))
    });
}

/// A tau-rigid `T + X` with `T` tau-tilting forces `X` in `add T`.
fn maximality(report: &mut Report, name: &str, t: &TauTilt, poset: &HassePoset) {
    guard(report, &format!("s3.{name}.maximality"), || {
        let mut pool: Vec<Rep> = Vec::new();
        let mut seen = BTreeSet::new();
        for node in &poset.nodes {
            for m in &node.pair.summands {
                if seen.insert(t.label_of(m)) {
                    pool.push(m.clone());
                }
            }
        }
        let mut tested = 0;
        let mut bad = Vec::new();
        for node in poset.nodes.iter().filter(|n| n.pair.support.is_empty()) {
            for x in &pool {
                let label = t.label_of(x);
                if node.key.modules.contains(&label) {
                    continue;
                }
                tested += 1;
                let mut parts = node.pair.summands.clone();
                parts.push(x.clone());
                if t.summands_tau_rigid(&parts)? {
                    bad.push(format!("{} + {label}", node.key));
                }
            }
        }
        Ok((bad.is_empty(), format!("{tested} extensions of tau-tilting modules, none tau-rigid; violations {bad:?}")))
    });
}

fn s3_embedding(report: &mut Report) {
    let point_ctx = crate::extension::one_point_extension(&fixtures::point(), &[0]);
    let ctxs = match (contexts(), point_ctx) {
        (Ok(mut c), Ok(p)) => {
            c.remove(1);
            c.push(("k/k[P0]", p));
            c
        }
        (Err(e), _) | (_, Err(e)) => {
            report.check("s3.contexts", false, format!("error: {e}"));
            return;
        }
    };
    for (name, ctx) in &ctxs {
        let (tb, ta) = (TauTilt::new(&ctx.b), TauTilt::new(&ctx.a));
        let (pb, pa) = match (complete_poset(&tb), complete_poset(&ta)) {
            (Ok(pb), Ok(pa)) => (pb, pa),
            (Err(e), _) | (_, Err(e)) => {
                report.check(format!("s3.{name}.posets"), false, format!("error: {e}"));
                continue;
            }
        };
        let expected = match *name {
            "b1b/a1b" => Some((6, 18)),
            "k/k[P0]" => Some((2, 5)),
            _ => None,
        };
        guard(report, &format!("s3.{name}.embedding"), || {
            let emb = embedding(ctx, &tb, &ta, &pb, &pa)?;
            let sizes_ok = expected.is_none_or(|(nb, na)| pb.nodes.len() == nb && pa.nodes.len() == na);
            Ok((
                emb.is_full() && sizes_ok && emb.image.len() == pb.nodes.len(),
                format!(
                    "{} image nodes of {}; {} of {} arrows lifted, {} arrows between image nodes; violations {:?}",
                    emb.image.len(),
                    pa.nodes.len(),
                    emb.b_arrows_lifted,
                    pb.arrows.len(),
                    emb.a_arrows_between_image,
                    emb.violations
                ),
            ))
        });
        guard(report, &format!("s3.{name}.pairs"), || {
            let mut bad = Vec::new();
            for node in &pb.nodes {
                let e = ctx.e_map(&ta, &node.pair);
                if !ta.is_stt_pair(&e)? {
                    bad.push(format!("e({})", node.key));
                }
                if tb.key(&ctx.r_map(&tb, &e)) != node.key {
                    bad.push(format!("r(e({}))", node.key));
                }
            }
            for node in &pa.nodes {
                if !tb.is_stt_pair(&ctx.r_map(&tb, &node.pair))? {
                    bad.push(format!("r({})", node.key));
                }
            }
            Ok((
                bad.is_empty(),
                format!("e on {} pairs, r on {} pairs, r e = id; failures {bad:?}", pb.nodes.len(), pa.nodes.len()),
            ))
        });
        guard(report, &format!("s3.{name}.end-extension"), || {
            let mut lines = Vec::new();
            let mut ok = true;
            for node in pb.nodes.iter().filter(|n| n.pair.support.is_empty()) {
                let c = ctx.end_extension_check(&node.pair.module(&ctx.b));
                ok &= c.holds();
                lines.push(format!("{}: {}={}+{}+1", node.key.pretty(), c.end_a, c.end_b, c.hom_nu));
            }
            Ok((ok, lines.join("; ")))
        });
        guard(report, &format!("s3.{name}.nakayama"), || {
            let ok = ctx
                .p0_vertices
                .iter()
                .all(|&t| is_isomorphic(&ctx.b, &ctx.restrict(&injective(&ctx.a, t)), &injective(&ctx.b, t)));
            let dim: usize = ctx.p0_vertices.iter().map(|&t| injective(&ctx.b, t).total_dim()).sum();
            Ok((
                ok && ctx.nakayama_p0().total_dim() == dim,
                format!("R I_A(x) = I_B(x) at every summand of P0; dim {dim}"),
            ))
        });
        if *name == "b1b/a1b" {
            guard(report, "s3.b1b/a1b.highlight", || {
                let emb = embedding(ctx, &tb, &ta, &pb, &pa)?;
                let h: BTreeSet<usize> = emb.image.iter().copied().collect();
                let dot = poset_to_dot(ctx.a.name(), &pa, Some(&h))?;
                let marked = dot.matches("dashed").count();
                Ok((marked == 6, format!("{marked} of {} nodes highlighted", pa.nodes.len())))
            });
            guard(report, "s3.b1b/a1b.r-example", || {
                let q = ta.from_summands(&[simple(&ctx.a, 1), walk(&ctx.a, "3>2")?], &[0]);
                let r = ctx.r_map(&tb, &q);
                Ok((
                    ta.is_stt_pair(&q)? && tb.is_stt_pair(&r)?,
                    format!("r{} = {}", ta.key(&q).pretty(), tb.key(&r).pretty()),
                ))
            });
            guard(report, "s3.b1b/a1b.e-bottom", || {
                let e = ctx.e_map(&ta, &tb.bottom_pair());
                let ok = e.summands.len() == 1 && is_isomorphic(&ctx.a, &e.summands[0], &ctx.s) && e.support == [0, 1];
                Ok((ok, format!("e(0, P1+P2) = {}", ta.key(&e).pretty())))
            });
        }
    }
}

fn s3_boundary(report: &mut Report) {
    let ctxs = match contexts() {
        Ok(c) => c,
        Err(e) => {
            report.check("s3.contexts", false, format!("error: {e}"));
            return;
        }
    };
    for (name, ctx) in ctxs.iter().filter(|(n, _)| *n != "b1a/a1a") {
        let (tb, ta) = (TauTilt::new(&ctx.b), TauTilt::new(&ctx.a));
        guard(report, &format!("s3.{name}.boundary"), || {
            let (pb, pa) = (complete_poset(&tb)?, complete_poset(&ta)?);
            let emb = embedding(ctx, &tb, &ta, &pb, &pa)?;
            let cases = boundary(ctx, &ta, &pa, &emb.image);
            let failing: Vec<String> =
                cases.iter().filter(|c| !c.holds).map(|c| pa.nodes[c.node].key.to_string()).collect();
            let nonzero = cases.iter().filter(|c| c.hom_em_s != 0).count();
            Ok((
                failing.is_empty(),
                format!("{} image nodes ({nonzero} with Hom(E M, S) != 0); failing {failing:?}", cases.len()),
            ))
        });
        if *name == "b2/a2" {
            guard(report, "s3.b2/a2.non-image-successor", || {
                let (pb, pa) = (complete_poset(&tb)?, complete_poset(&ta)?);
                let emb = embedding(ctx, &tb, &ta, &pb, &pa)?;
                let a2 = &ctx.a;
                let node = ta.key(&ta.from_summands(&simples(a2, &["1", "5", "4"])?, &vertices(a2, &["2", "3"])?));
                let succ = ta.key(&ta.from_summands(&simples(a2, &["1", "4"])?, &vertices(a2, &["2", "3", "5"])?));
                let (i, j) =
                    (pa.index_of(&node).ok_or(Error::Incomplete)?, pa.index_of(&succ).ok_or(Error::Incomplete)?);
                let case = boundary(ctx, &ta, &pa, &[i]).remove(0);
                let ok = emb.image.contains(&i) && case.hom_em_s == 0 && case.successors_outside == [j];
                Ok((ok, format!("{} has the non-image successor {}", node.pretty(), succ.pretty())))
            });
        }
    }
}

fn nonprojective(report: &mut Report) {
    let b2 = fixtures::b2();
    guard(report, "np.paper-module", || {
        let zero = matches!(walk(&b2, "4>3>1"), Err(Error::ZeroPrefix(_)));
        Ok((zero, "the path 4 -> 3 -> 1 is zero in B2, so there is no uniserial 4/3/1; witnesses are searched".into()))
    });
    for (name, a, expect_witnesses) in [("a3", fixtures::a3(), true), ("a2", fixtures::a2(), false)] {
        guard(report, &format!("np.{name}.witnesses"), || {
            let ctx = OPEContext::from_algebras(&b2, &a)?;
            let (tb, ta) = (TauTilt::new(&ctx.b), TauTilt::new(&ctx.a));
            let (pb, pa) = (complete_poset(&tb)?, complete_poset(&ta)?);
            let w = nonprojective_witnesses(&ctx, &tb, &ta, &pb, &pa)?;
            let ok = if expect_witnesses {
                !ctx.projective && !w.extension.is_empty() && !w.restriction.is_empty()
            } else {
                ctx.projective && w.extension.is_empty() && w.restriction.is_empty()
            };
            Ok((
                ok,
                format!(
                    "X = {} ({}projective); {} extension witnesses{}; {} restriction witnesses{}",
                    tb.label_of(&ctx.x),
                    if ctx.projective { "" } else { "not " },
                    w.extension.len(),
                    example(&w.extension),
                    w.restriction.len(),
                    example(&w.restriction)
                ),
            ))
        });
    }
}

fn properties(report: &mut Report, seed: u64) {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    report.push(Check::skip("prop.seed", format!("seed {seed}")));
    let ctxs: Vec<(&str, OPEContext)> = match contexts() {
        Ok(c) => c.into_iter().filter(|(n, _)| *n != "b1a/a1a").collect(),
        Err(e) => {
            report.check("prop.contexts", false, format!("error: {e}"));
            return;
        }
    };

    guard(report, "prop.counit-and-perp", || {
        let (mut counit, mut perp, mut unit) = (0, 0, 0);
        for i in 0..200 {
            let ctx = &ctxs[i % ctxs.len()].1;
            let m = random_module(&ctx.b, &mut rng, 10);
            let em = ctx.extend(&m);
            counit += usize::from(ctx.counit_check(&m));
            perp += usize::from(ctx.in_s_perp(&em));
            unit += usize::from(ctx.unit_check(&em));
        }
        Ok((
            counit == 200 && perp == 200 && unit == 200,
            format!("200 modules: counit iso {counit}, E M in S^perp {perp}, unit iso {unit}"),
        ))
    });
    guard(report, "prop.fully-faithful", || {
        let mut agree = 0;
        for i in 0..100 {
            let ctx = &ctxs[i % ctxs.len()].1;
            let (m, n) = (random_module(&ctx.b, &mut rng, 8), random_module(&ctx.b, &mut rng, 8));
            agree += usize::from(hom_dim(&ctx.b, &m, &n) == hom_dim(&ctx.a, &ctx.extend(&m), &ctx.extend(&n)));
        }
        Ok((agree == 100, format!("dim Hom_B(M,N) = dim Hom_A(EM,EN) on {agree} of 100 pairs")))
    });
    guard(report, "prop.ext-identities", || {
        let (mut a_ok, mut b_ok, mut b_n, mut c_ok, mut c_eq, mut c_n) = (0, 0, 0, 0, 0, 0);
        for i in 0..200 {
            let ctx = &ctxs[i % ctxs.len()].1;
            let x = random_module(&ctx.a, &mut rng, 8);
            let m = random_module(&ctx.b, &mut rng, 6);
            let em = ctx.extend(&m);
            a_ok += usize::from(ext1_dim(&ctx.a, &x, &em) == ext1_dim(&ctx.b, &ctx.restrict(&x), &m));
            if ctx.in_s_perp(&x) {
                b_n += 1;
                b_ok += usize::from(ext1_dim(&ctx.a, &em, &x) == ext1_dim(&ctx.b, &m, &ctx.restrict(&x)));
            }
            let y = if i % 2 == 0 { em.clone() } else { random_module(&ctx.a, &mut rng, 6) };
            let (top, bottom) = (ext1_dim(&ctx.a, &x, &y), ext1_dim(&ctx.b, &ctx.restrict(&x), &ctx.restrict(&y)));
            c_ok += usize::from(top >= bottom);
            if ctx.in_s_perp(&y) {
                c_n += 1;
                c_eq += usize::from(top == bottom);
            }
        }
        Ok((
            a_ok == 200 && b_ok == b_n && c_ok == 200 && c_eq == c_n,
            format!(
                "200 pairs: Ext(X,EM)=Ext(RX,M) {a_ok}; Ext(EM,X)=Ext(M,RX) {b_ok}/{b_n} with X in S^perp; \
                 Ext(X,Y)>=Ext(RX,RY) {c_ok}, equality {c_eq}/{c_n} with Y in S^perp"
            ),
        ))
    });
    guard(report, "prop.s-summand", || {
        let mut checked = 0;
        let mut bad = 0;
        for (_, ctx) in &ctxs {
            let ta = TauTilt::new(&ctx.a);
            let pa = complete_poset(&ta)?;
            let mut xs: Vec<Rep> =
                pa.nodes.iter().filter(|n| !n.pair.summands.is_empty()).map(|n| n.pair.module(&ctx.a)).collect();
            xs.extend((0..50).map(|_| random_module(&ctx.a, &mut rng, 10)));
            for x in &xs {
                checked += 1;
                if (ctx.hom_from_s(x) == 0) == ctx.has_s_summand(x) {
                    bad += 1;
                }
            }
        }
        Ok((bad == 0, format!("Hom(S,X)=0 iff S is not a summand, {checked} modules, {bad} violations")))
    });
    guard(report, "prop.oracles", || {
        let mut lines = Vec::new();
        let mut total_rigid = 0;
        for name in ["b1a", "b1b", "a1a", "a1b", "b2", "a2", "a3", "point"] {
            let alg = fixtures::by_name(name).ok_or_else(|| Error::UnknownSuite(name.into()))?;
            let t = TauTilt::new(&alg);
            let mut rigid = 0;
            for _ in 0..200 {
                rigid += usize::from(t.is_tau_rigid(&random_module(&alg, &mut rng, 10))?);
            }
            total_rigid += rigid;
            lines.push(format!("{name}: {rigid}/200 rigid"));
        }
        Ok((true, format!("both oracles agree on 1600 modules ({total_rigid} tau-rigid); {}", lines.join(", "))))
    });
    guard(report, "prop.ar-formula", || {
        let mut pairs = 0;
        let mut bad = Vec::new();
        for name in ["b1a", "b1b", "b2"] {
            let alg = fixtures::by_name(name).ok_or_else(|| Error::UnknownSuite(name.into()))?;
            let t = TauTilt::new(&alg);
            let cat = indecomposables(&t, 8);
            for m in &cat {
                let tm = tau(&alg, m);
                for n in &cat {
                    if m.total_dim() + n.total_dim() > 8 {
                        continue;
                    }
                    pairs += 1;
                    let ext = ext1_dim(&alg, m, n);
                    let inj_stable = stable_hom_dims(&alg, n, &tm).1;
                    let proj_stable = stable_hom_dims(&alg, &tau_inverse(&alg, n), m).0;
                    if ext != inj_stable || ext != proj_stable {
                        bad.push(format!("{name}: ({}, {})", t.label_of(m), t.label_of(n)));
                    }
                }
            }
        }
        Ok((
            bad.is_empty(),
            format!(
                "Ext(M,N) = D Hom-bar(N, tau M) = D Hom-underline(tau^-1 N, M) on {pairs} pairs; violations {bad:?}"
            ),
        ))
    });
    guard(report, "prop.fac-criterion", || {
        let mut checked = 0;
        let mut other_fails = 0;
        let mut bad = Vec::new();
        for name in ["b1b", "b2", "a1b"] {
            let alg = fixtures::by_name(name).ok_or_else(|| Error::UnknownSuite(name.into()))?;
            let t = TauTilt::new(&alg);
            let cat = indecomposables(&t, 100);
            let taus: Vec<Rep> = cat.iter().map(|m| tau(&alg, m)).collect();
            for (i, x) in cat.iter().enumerate() {
                let fac: Vec<&Rep> = cat.iter().filter(|z| fac_contains(&alg, x, z)).collect();
                for (j, y) in cat.iter().enumerate() {
                    checked += 1;
                    let ext_vanishes = fac.iter().all(|z| ext1_dim(&alg, y, z) == 0);
                    if (hom_dim(&alg, x, &taus[j]) == 0) != ext_vanishes {
                        bad.push(format!("{name}: ({}, {})", t.label_of(x), t.label_of(y)));
                    }
                    if (hom_dim(&alg, y, &taus[i]) == 0) != ext_vanishes {
                        other_fails += 1;
                    }
                }
            }
        }
        Ok((
            bad.is_empty(),
            format!(
                "Hom(X, tau Y) = 0 iff Ext(Y, Fac X) = 0 on {checked} pairs, violations {bad:?}; \
                 the reading with Hom(Y, tau X) fails on {other_fails} pairs"
            ),
        ))
    });
    guard(report, "prop.a1b.two-complements", || {
        let a1b = fixtures::a1b();
        let t = TauTilt::new(&a1b);
        let p = complete_poset(&t)?;
        let counts = almost_complete_counts(&t, &p);
        let bad = counts.iter().filter(|(_, n)| *n != 2).count();
        Ok((bad == 0, format!("{} almost complete pairs, {bad} without exactly two completions", counts.len())))
    });
    guard(report, "prop.key-invariance", || {
        let mut agree = 0;
        for name in ["a1b", "a2"] {
            let alg = fixtures::by_name(name).ok_or_else(|| Error::UnknownSuite(name.into()))?;
            let t = TauTilt::new(&alg);
            let p = complete_poset(&t)?;
            for node in &p.nodes {
                let moved: Vec<Rep> =
                    node.pair.summands.iter().map(|m| random_base_change(&alg, m, &mut rng)).collect();
                let sum = direct_sum_or_zero(&alg, &moved);
                agree += usize::from(t.key(&t.pair(&sum, &node.pair.support)) == node.key);
            }
        }
        Ok((agree == 18 + 168, format!("keys unchanged by random base change on {agree} of {} nodes", 18 + 168)))
    });
    let elapsed = start.elapsed().as_secs_f64();
    report.check("prop.runtime", elapsed < 60.0, format!("{elapsed:.1}s"));
}

fn example(found: &[String]) -> String {
    found.first().map(|e| format!(", e.g. {e}")).unwrap_or_default()
}
