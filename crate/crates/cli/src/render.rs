//! Human-readable output. Elements are shown by label.

use std::fmt::Write;

use serde_json::Value;

use skew_bracoids::bridge::{EmbeddingPair, StabilityReport};
use skew_bracoids::ybe::SolutionTable;
use skew_bracoids::{Classification, FiniteGroup, SkewBracoid, Subgroup};

fn set(g: &FiniteGroup, members: &[usize]) -> String {
    let labels: Vec<String> = members.iter().map(|&x| g.label(x)).collect();
    format!("{{{}}}", labels.join(", "))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Rows of cells padded to a common column width.
fn grid(header: &[String], rows: &[(String, Vec<String>)]) -> String {
    let width = header
        .iter()
        .chain(rows.iter().flat_map(|(l, r)| std::iter::once(l).chain(r)))
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(1);
    let pad = |s: &str| format!("{s:>width$}", width = width);
    let mut out = String::new();
    let _ = writeln!(out, "{} | {}", pad(""), header.iter().map(|h| pad(h)).collect::<Vec<_>>().join(" "));
    let _ = writeln!(out, "{}", "-".repeat((width + 1) * (header.len() + 1) + 1));
    for (label, cells) in rows {
        let _ = writeln!(out, "{} | {}", pad(label), cells.iter().map(|c| pad(c)).collect::<Vec<_>>().join(" "));
    }
    out
}

pub fn bracoid(b: &SkewBracoid) -> String {
    let (g, n) = (b.multiplicative(), b.additive());
    let mut out = String::new();
    let _ = writeln!(out, "multiplicative group: order {}", g.order());
    let _ = writeln!(out, "additive group: order {}", n.order());
    let _ = writeln!(out, "stabilizer: {}", set(g, b.stabilizer().members()));
    let _ = writeln!(out, "kernel: {}", set(g, b.kernel().members()));
    let _ = writeln!(out, "action g ⊙ η:");
    let header: Vec<String> = n.elements().map(|x| n.label(x)).collect();
    let rows: Vec<(String, Vec<String>)> =
        g.elements().map(|x| (g.label(x), n.elements().map(|eta| n.label(b.act(x, eta))).collect())).collect();
    out.push_str(&grid(&header, &rows));
    out
}

pub fn classification(b: &SkewBracoid, c: &Classification) -> String {
    let g = b.multiplicative();
    let mut out = String::new();
    let _ = writeln!(out, "stabilizer: {}", set(g, c.stabilizer.members()));
    let _ = writeln!(out, "essentially a skew brace: {}", yes(c.essentially_brace));
    let _ = writeln!(out, "essentially trivial: {}", yes(c.essentially_trivial));
    let list = |name: &str, v: Vec<&Subgroup>, out: &mut String| {
        if v.is_empty() {
            let _ = writeln!(out, "{name}: none");
            return;
        }
        let _ = writeln!(out, "{name}:");
        for h in v {
            let _ = writeln!(out, "  {}", set(g, h.members()));
        }
    };
    list("contains a brace with respect to", c.contains_brace(), &mut out);
    list("almost a brace with respect to", c.almost_brace(), &mut out);
    list("almost classical with respect to", c.almost_classical(), &mut out);
    if !c.complements.is_empty() {
        let _ = writeln!(out, "complements:");
        for r in &c.complements {
            let _ = writeln!(
                out,
                "  {}  normal: {}  trivial brace: {}  in ker γ: {}  isomorphic to N: {}",
                set(g, r.subgroup.members()),
                yes(r.is_normal),
                yes(r.trivial_as_brace),
                yes(r.in_gamma_kernel),
                yes(r.isomorphic_to_additive)
            );
        }
    }
    out
}

pub fn enumeration(bracoids: &[SkewBracoid], oracle: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "almost classical bracoids up to conjugation by Aut(N): {}", bracoids.len());
    let _ = writeln!(out, "oracle count: {oracle}");
    for (i, b) in bracoids.iter().enumerate() {
        let _ = writeln!(
            out,
            "  [{i}] |G| = {}, |S| = {}, essentially a brace: {}",
            b.multiplicative().order(),
            b.stabilizer().order(),
            yes(b.is_essentially_brace())
        );
    }
    out
}

pub fn solution(s: &SolutionTable) -> String {
    let flags = s.flags();
    let mut out = String::new();
    let _ = writeln!(out, "size: {}", s.size());
    let _ = writeln!(out, "braid relation: {}", if flags.braid_verified { "holds" } else { "fails" });
    let _ = writeln!(out, "left non-degenerate: {}", yes(flags.left_nondegenerate));
    let _ = writeln!(out, "right non-degenerate: {}", yes(flags.right_nondegenerate));
    let _ = writeln!(out, "r(x, y) = (σ_x(y), τ_y(x)), row x, column y:");
    let m = s.size();
    let header: Vec<String> = (0..m).map(|y| s.label(y)).collect();
    let rows: Vec<(String, Vec<String>)> = (0..m)
        .map(|x| {
            let cells = (0..m).map(|y| {
                let (p, q) = s.get(x, y);
                format!("({},{})", s.label(p), s.label(q))
            });
            (s.label(x), cells.collect())
        })
        .collect();
    out.push_str(&grid(&header, &rows));
    out
}

pub fn embedding(pair: &EmbeddingPair, stability: StabilityReport) -> String {
    let (g, n) = (pair.space.group(), &pair.additive);
    let mut out = String::new();
    let _ = writeln!(out, "|X| = {}, G′ = {}", pair.space.size(), set(g, pair.space.subgroup().members()));
    let _ = writeln!(out, "λ_X injective: {}", yes(pair.space.is_galois_closure()));
    let _ = writeln!(out, "G-stable: {}  in Hol(N): {}", yes(stability.g_stable), yes(stability.in_holomorph));
    let _ = writeln!(out, "a: N → X");
    for eta in n.elements() {
        let _ = writeln!(out, "  {} ↦ {}", n.label(eta), pair.a[eta]);
    }
    let _ = writeln!(out, "α(η) on X:");
    for eta in n.elements() {
        let _ = writeln!(out, "  {}: {:?}", n.label(eta), pair.alpha[eta].images());
    }
    let _ = writeln!(out, "β(g) on N:");
    for x in g.elements() {
        let images: Vec<String> = pair.beta[x].images().iter().map(|&e| n.label(e)).collect();
        let _ = writeln!(out, "  {}: [{}]", g.label(x), images.join(", "));
    }
    out
}

pub fn comparison(report: &Value) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "equal: {}", yes(report["equal"].as_bool().unwrap_or(false)));
    if let Some(d) = report["first_difference"].as_array() {
        let _ = writeln!(out, "first difference at: ({}, {})", d[0], d[1]);
    }
    for (i, inv) in report["invariants"].as_array().into_iter().flatten().enumerate() {
        let _ = writeln!(out, "solution {}:", i + 1);
        for key in ["cycle_type", "diagonal_fixed_points", "fixed_points", "sigma_image_sizes", "tau_image_sizes"] {
            let _ = writeln!(out, "  {key}: {}", inv[key]);
        }
    }
    let iso = &report["isomorphism"];
    let _ = match iso["status"].as_str() {
        Some("found") => writeln!(out, "isomorphic: yes, via {}", iso["map"]),
        Some("none") => writeln!(out, "isomorphic: no"),
        _ => writeln!(out, "isomorphic: unknown (search budget exhausted)"),
    };
    out
}
