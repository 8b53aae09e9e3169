//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fail.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skew_bracoids::bridge::{
    almost_classical_oracle_count, alpha_to_beta, beta_to_alpha, embedding_pair_from_bracoid, enumerate_almost_classical,
    g_stability_check, iota_twist, opp_check, rho_star_vs_opp, CosetSpace, EmbeddingPair,
};
use skew_bracoids::constructions::{
    brace_envelope, coset_form, d2n_family, induce, trivial_brace, verify_bracoid_isomorphism,
};
use skew_bracoids::groups::{
    all_subgroups, cyclic, cyclic_named, dihedral, dihedral_index, direct_product, find_isomorphism, FiniteGroup,
};
use skew_bracoids::ybe::{almost_classical_solution, solution_from_bracoid, verify_braid};
use skew_bracoids::{Limits, Permutation, SkewBracoid, Subgroup};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

fn d(n: usize, i: i64, j: i64) -> usize {
    dihedral_index(n, i, j)
}

fn sub(g: &FiniteGroup, gens: &[usize]) -> Subgroup {
    Subgroup::generated(g, gens)
}

fn members(list: Vec<&Subgroup>) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = list.into_iter().map(|h| h.members().to_vec()).collect();
    v.sort();
    v
}

fn sorted(mut v: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    v.sort();
    v
}

fn criterion_1() -> Outcome {
    let limits = Limits::default();
    let start = Instant::now();
    for n in 1..=12usize {
        let b = d2n_family(n, n).map_err(|e| e.to_string())?;
        let g = b.multiplicative();
        let c = b.classify(&limits).map_err(|e| e.to_string())?;
        let rot = sub(g, &[d(n, 1, 0)]);
        if n % 2 == 1 {
            ensure!(members(c.almost_brace()) == vec![rot.members().to_vec()], "n = {n}: almost-a-brace list");
            ensure!(members(c.almost_classical()) == vec![rot.members().to_vec()], "n = {n}: almost classical list");
        } else {
            let other = sub(g, &[d(n, 2, 0), d(n, 1, 1)]);
            ensure!(
                members(c.almost_brace()) == sorted(vec![rot.members().to_vec(), other.members().to_vec()]),
                "n = {n}: almost-a-brace list"
            );
            let report = c.report(&other).ok_or(format!("n = {n}: no report for ⟨r², rs⟩"))?;
            if n >= 4 {
                ensure!(!report.isomorphic_to_additive, "n = {n}: ⟨r², rs⟩ flagged isomorphic to N");
                ensure!(!report.is_almost_classical(), "n = {n}: ⟨r², rs⟩ flagged almost classical");
                ensure!(members(c.almost_classical()) == vec![rot.members().to_vec()], "n = {n}: almost classical list");
            } else {
                // ⟨r², rs⟩ = ⟨rs⟩ ≅ C₂ = N, and the brace it gives is trivial.
                ensure!(report.isomorphic_to_additive && report.is_almost_classical(), "n = 2: ⟨rs⟩ flags");
            }
        }
    }

    let b = d2n_family(12, 4).map_err(|e| e.to_string())?;
    let g = b.multiplicative();
    let c = b.classify(&limits).map_err(|e| e.to_string())?;
    let r3 = sub(g, &[d(12, 3, 0)]).members().to_vec();
    ensure!(members(c.almost_classical()) == vec![r3.clone()], "(12,4): almost classical list");
    ensure!(members(c.almost_brace()) == vec![r3.clone()], "(12,4): almost-a-brace list");
    let mut expected: Vec<Vec<usize>> =
        [1, 3, 5].iter().map(|&k| sub(g, &[d(12, 6, 0), d(12, k, 1)]).members().to_vec()).collect();
    let non_normal: Vec<Vec<usize>> =
        sorted(c.complements.iter().filter(|r| !r.is_normal).map(|r| r.subgroup.members().to_vec()).collect());
    ensure!(non_normal == sorted(expected.clone()), "(12,4): non-normal complements");
    expected.push(r3);
    ensure!(members(c.contains_brace()) == sorted(expected), "(12,4): complement list");

    let b = d2n_family(12, 6).map_err(|e| e.to_string())?;
    let g = b.multiplicative();
    let c = b.classify(&limits).map_err(|e| e.to_string())?;
    let expected = sorted([1, 3].iter().map(|&k| sub(g, &[d(12, 4, 0), d(12, k, 1)]).members().to_vec()).collect());
    ensure!(members(c.contains_brace()) == expected, "(12,6): complement list");
    for h in c.contains_brace() {
        ensure!(h.members().iter().all(|&x| g.element_order(x) < 6), "(12,6): cyclic complement");
    }

    let c = d2n_family(9, 3).and_then(|b| b.classify(&limits)).map_err(|e| e.to_string())?;
    ensure!(c.contains_brace().is_empty(), "(9,3): found a complement");

    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    Ok(format!("n = 1..12 plus (12,4), (12,6), (9,3) in {:.2?}", elapsed))
}

fn criterion_2() -> Outcome {
    let limits = Limits::default();
    let start = Instant::now();
    let mut groups: Vec<(String, FiniteGroup)> = (2..=8).map(|n| (format!("C{n}"), cyclic(n))).collect();
    groups.push(("C2xC2".into(), direct_product(&cyclic(2), &cyclic(2))));
    groups.push(("C12".into(), cyclic(12)));
    let mut counts = Vec::new();
    for (name, n) in &groups {
        let e = enumerate_almost_classical(n, &limits).map_err(|e| e.to_string())?;
        let oracle = almost_classical_oracle_count(n, &limits).map_err(|e| e.to_string())?;
        ensure!(e.count() == oracle, "{name}: enumeration {} vs oracle {oracle}", e.count());
        for b in &e.bracoids {
            ensure!(!b.classify(&limits).map_err(|e| e.to_string())?.almost_classical().is_empty(), "{name}: output not almost classical");
        }
        counts.push(format!("{name}={oracle}"));
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    Ok(format!("{} in {:.2?}", counts.join(" "), elapsed))
}

/// Sources for the solution suite: every complement of every family
/// instance with `n ≤ 12`, plus sources that are essentially skew braces.
fn solution_sources() -> Result<Vec<(String, SkewBracoid, Subgroup)>, String> {
    let limits = Limits::default();
    let mut out = Vec::new();
    for n in 1..=12usize {
        for dd in (1..=n).filter(|dd| n % dd == 0) {
            let b = d2n_family(n, dd).map_err(|e| e.to_string())?;
            let c = b.classify(&limits).map_err(|e| e.to_string())?;
            for h in c.contains_brace() {
                out.push((format!("family({n},{dd})"), b.clone(), h.clone()));
            }
        }
    }
    for (name, g) in [("D8", dihedral(4)), ("C6", cyclic(6)), ("D12", dihedral(6))] {
        let whole = Subgroup::whole(&g);
        out.push((format!("trivial brace on {name}"), trivial_brace(&g), whole));
    }
    for n in [3, 4, 6] {
        let b = d2n_family(n, n).map_err(|e| e.to_string())?;
        let h = sub(b.multiplicative(), &[d(n, 1, 0)]);
        let env = brace_envelope(&b, &h).map_err(|e| e.to_string())?;
        let whole = Subgroup::whole(env.brace.multiplicative());
        out.push((format!("envelope of family({n},{n})"), env.brace, whole));
    }
    Ok(out)
}

fn criterion_3() -> Outcome {
    let sources = solution_sources()?;
    let mut left = 0;
    for (name, b, h) in &sources {
        let s = solution_from_bracoid(b, h).map_err(|e| e.to_string())?;
        verify_braid(&s).map_err(|e| format!("{name}: {e}"))?;
        let flags = s.flags();
        ensure!(flags.braid_verified && flags.right_nondegenerate, "{name}: flags {flags:?}");
        ensure!(
            flags.left_nondegenerate == b.is_essentially_brace(),
            "{name}: left non-degenerate = {} but essentially a brace = {}",
            flags.left_nondegenerate,
            b.is_essentially_brace()
        );
        left += flags.left_nondegenerate as usize;
    }
    ensure!(sources.len() >= 20, "only {} solutions", sources.len());
    Ok(format!("{} solutions, {left} left non-degenerate", sources.len()))
}

fn dihedral_label(n: usize, i: i64, j: i64) -> String {
    let i = i.rem_euclid(n as i64);
    let r = match i {
        0 => String::new(),
        1 => "r".into(),
        _ => format!("r^{i}"),
    };
    let s = if j.rem_euclid(2) == 1 { "s" } else { "" };
    let l = format!("{r}{s}");
    if l.is_empty() { "e".into() } else { l }
}

fn criterion_4() -> Outcome {
    let mut cells = 0;
    for n in [4usize, 6, 12] {
        let b = d2n_family(n, n).map_err(|e| e.to_string())?;
        let g = b.multiplicative();
        let first = solution_from_bracoid(&b, &sub(g, &[d(n, 1, 0)])).map_err(|e| e.to_string())?;
        let second = solution_from_bracoid(&b, &sub(g, &[d(n, 2, 0), d(n, 1, 1)])).map_err(|e| e.to_string())?;
        for x in g.elements() {
            let (i, j) = ((x % n) as i64, (x / n) as i64);
            for y in g.elements() {
                let (k, l) = ((y % n) as i64, (y / n) as i64);
                let sj = if j == 0 { 1 } else { -1 };
                let sk = if k % 2 == 0 { 1 } else { -1 };
                let expected_first = ((sj * k, 0), (i, j + l));
                let expected_second = ((sj * k, k), (sk * i, j + k + l));
                for (s, ((a, b0), (c, d0))) in [(&first, expected_first), (&second, expected_second)] {
                    let got = s.get(x, y);
                    ensure!(got == (d(n, a, b0), d(n, c, d0)), "n = {n}: r({}, {}) = {got:?}", g.label(x), g.label(y));
                    ensure!(
                        (s.label(got.0), s.label(got.1)) == (dihedral_label(n, a, b0), dihedral_label(n, c, d0)),
                        "n = {n}: label mismatch at ({x}, {y})"
                    );
                    cells += 1;
                }
            }
        }
    }
    Ok(format!("{cells} table cells"))
}

fn criterion_5() -> Outcome {
    let limits = Limits::default();
    let mut compared = 0;
    for (name, b, h) in solution_sources()? {
        let c = b.classify(&limits).map_err(|e| e.to_string())?;
        if c.almost_classical().contains(&&h) {
            let generic = solution_from_bracoid(&b, &h).map_err(|e| e.to_string())?;
            let closed = almost_classical_solution(&b, &h).map_err(|e| e.to_string())?;
            ensure!(generic.rows() == closed.rows(), "{name}: tables differ");
            compared += 1;
        }
    }
    ensure!(compared > 0, "no almost classical instances");
    Ok(format!("{compared} almost classical instances"))
}

fn criterion_6() -> Outcome {
    let outer = d2n_family(12, 4).map_err(|e| e.to_string())?;
    let g = outer.multiplicative();
    let h = sub(g, &[d(12, 3, 0)]);
    let inner = SkewBracoid::validate(dihedral(3), cyclic_named(3, "μ"), d2n_family(3, 3).unwrap().action_table().to_vec())
        .map_err(|e| e.to_string())?;
    let ident: Vec<usize> = (0..6).map(|x| d(12, 4 * (x % 3) as i64, (x / 3) as i64)).collect();
    let induced = induce(&outer, &h, &inner, &ident).map_err(|e| e.to_string())?;
    let b = &induced.result;
    let n = b.additive();
    let gen = 3 + 1; // ημ
    ensure!(n.element_order(gen) == 12, "ημ has order {}", n.element_order(gen));
    for x in g.elements() {
        let (i, j) = ((x % 12) as i64, (x / 12) as i64);
        let sj = if j == 0 { 1 } else { -1 };
        for k in 0..12i64 {
            ensure!(b.act(x, n.pow(gen, k)) == n.pow(gen, i + sj * k), "action at ({}, (ημ)^{k})", g.label(x));
        }
    }
    let family = d2n_family(12, 12).map_err(|e| e.to_string())?;
    let psi: Vec<usize> = (0..12).map(|k| n.pow(gen, k)).collect();
    let identity: Vec<usize> = g.elements().collect();
    verify_bracoid_isomorphism(&family, b, &identity, &psi).map_err(|e| e.to_string())?;

    // Randomized pairings: outer family instances with a normal complement,
    // inner family instances on the stabilizer.
    let limits = Limits::default();
    let mut pool = Vec::new();
    for n in 1..=12usize {
        for dd in (1..=n).filter(|dd| n % dd == 0) {
            let b = d2n_family(n, dd).map_err(|e| e.to_string())?;
            if let Some(h) = b.classify(&limits).map_err(|e| e.to_string())?.almost_brace().first() {
                pool.push((n, dd, (*h).clone()));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..10 {
        let (n, dd, h) = pool.choose(&mut rng).unwrap().clone();
        let m = n / dd;
        let divisors: Vec<usize> = (1..=m).filter(|x| m % x == 0).collect();
        let inner_d = divisors[rng.gen_range(0..divisors.len())];
        let outer = d2n_family(n, dd).map_err(|e| e.to_string())?;
        let inner = d2n_family(m, inner_d).map_err(|e| e.to_string())?;
        let ident: Vec<usize> = (0..2 * m).map(|x| d(n, (dd * (x % m)) as i64, (x / m) as i64)).collect();
        let induced = induce(&outer, &h, &inner, &ident).map_err(|e| format!("({n},{dd}) with ({m},{inner_d}): {e}"))?;
        let r = &induced.result;
        let e = r.additive().identity();
        let direct: Vec<usize> = r.multiplicative().elements().filter(|&x| r.act(x, e) == e).collect();
        let mut from_inner: Vec<usize> = inner.stabilizer().members().iter().map(|&s| ident[s]).collect();
        from_inner.sort_unstable();
        ensure!(direct == from_inner, "({n},{dd}) with ({m},{inner_d}): stabilizer mismatch");
    }
    Ok("(D24, C12) form verified; 10 randomized pairings".into())
}

fn criterion_7() -> Outcome {
    for n in 1..=12usize {
        let b = d2n_family(n, n).map_err(|e| e.to_string())?;
        let g = b.multiplicative();
        let h = sub(g, &[d(n, 1, 0)]);
        let env = brace_envelope(&b, &h).map_err(|e| format!("n = {n}: {e}"))?;
        let brace = &env.brace;
        ensure!(brace.is_essentially_brace(), "n = {n}: stabilizer not trivial");
        let star = brace.additive();
        ensure!(find_isomorphism(star, &direct_product(&cyclic(n), &cyclic(2))).is_some(), "n = {n}: (G,★) ≇ C_n × C_2");
        let s = b.stabilizer();
        let s_star = Subgroup::new(star, s.members().to_vec()).map_err(|e| format!("n = {n}: S not a ★-subgroup: {e}"))?;
        ensure!(s_star.is_normal_in(star), "n = {n}: S not ★-normal");
        let gamma = brace.gamma().map_err(|e| e.to_string())?;
        for x in g.elements() {
            for &y in s.members() {
                ensure!(gamma.apply(x, y) == y, "n = {n}: γ({x}) moves {y}");
            }
        }
        ensure!(brace.is_left_ideal(s.members()).map_err(|e| e.to_string())?, "n = {n}: S not a left ideal");
        let identity: Vec<usize> = g.elements().collect();
        verify_bracoid_isomorphism(&b, &env.quotient, &identity, &env.witness).map_err(|e| format!("n = {n}: {e}"))?;
    }
    Ok("n = 1..12".into())
}

fn criterion_8() -> Outcome {
    let mut checks = 0;
    for n in 1..=12usize {
        let b = d2n_family(n, n).map_err(|e| e.to_string())?;
        let cf = coset_form(&b).map_err(|e| e.to_string())?;
        let h = sub(b.multiplicative(), &[d(n, 1, 0)]);
        let report = rho_star_vs_opp(&cf, &h).map_err(|e| e.to_string())?;
        ensure!(report.equal, "n = {n}: ρ⋆(X) ≠ λ(H)ᵒᵖᵖ");
        ensure!(report.commutes, "n = {n}: commutation fails");
        ensure!(report.coset_product, "n = {n}: coset product fails");
        ensure!(report.size_certificate, "n = {n}: size certificate fails");
        checks += report.commutation_checks;
    }
    Ok(format!("n = 1..12, {checks} commutation checks"))
}

fn check_pair(name: &str, pair: &EmbeddingPair, expect_stable: Option<bool>) -> Result<(), String> {
    let ab = alpha_to_beta(&pair.space, &pair.additive, pair.alpha.clone()).map_err(|e| format!("{name}: {e}"))?;
    ensure!(ab.beta == pair.beta, "{name}: α → β changed β");
    let ba = beta_to_alpha(&pair.space, &pair.additive, ab.beta.clone()).map_err(|e| format!("{name}: {e}"))?;
    ensure!(ba.alpha == pair.alpha, "{name}: α → β → α is not the identity");
    let bab = alpha_to_beta(&pair.space, &pair.additive, ba.alpha.clone()).map_err(|e| format!("{name}: {e}"))?;
    ensure!(bab.beta == ba.beta, "{name}: β → α → β is not the identity");
    ensure!(ab.a == ba.a && ab.b == ba.b, "{name}: a and b differ between directions");
    ensure!(ba.a.iter().enumerate().all(|(eta, &x)| ba.b[x] == eta), "{name}: b ≠ a⁻¹");
    let twisted = iota_twist(pair).map_err(|e| format!("{name}: {e}"))?;
    let twice = iota_twist(&twisted).map_err(|e| format!("{name}: {e}"))?;
    ensure!(twice.beta == pair.beta, "{name}: β̂̂ ≠ β");
    let opp = opp_check(pair, &twisted);
    ensure!(opp.is_centralizer, "{name}: α̂(N) not certified as the centralizer: {opp:?}");
    ensure!(opp.equals_alpha == pair.additive.is_abelian(), "{name}: α̂(N) = α(N) is {}", opp.equals_alpha);
    let st = g_stability_check(pair);
    ensure!(st.agrees(), "{name}: G-stable {} but Hol membership {}", st.g_stable, st.in_holomorph);
    if let Some(expected) = expect_stable {
        ensure!(st.g_stable == expected, "{name}: G-stability is {}", st.g_stable);
    }
    Ok(())
}

/// `G = C₄` acting regularly on `X = C₄` and `α = pλp⁻¹` for the first
/// `p ∈ Sym(4)` that moves `λ(C₄)` to a different cyclic subgroup.
fn unstable_pair() -> Result<EmbeddingPair, String> {
    let c4 = cyclic(4);
    let space = CosetSpace::new(c4.clone(), Subgroup::trivial(&c4)).map_err(|e| e.to_string())?;
    let lambda: Vec<Permutation> = c4.elements().map(|x| c4.left_translation(x)).collect();
    let mut images: Vec<usize> = (0..4).collect();
    loop {
        let p = Permutation::new(images.clone()).unwrap();
        let p_inv = p.inverse();
        let alpha: Vec<Permutation> = lambda.iter().map(|l| p.compose(l).compose(&p_inv)).collect();
        if !alpha.iter().all(|a| lambda.contains(a)) {
            return alpha_to_beta(&space, &c4, alpha).map_err(|e| e.to_string());
        }
        if !next_permutation(&mut images) {
            return Err("no conjugate of λ(C₄) leaves it".into());
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn criterion_9() -> Outcome {
    let mut checked = 0;
    let mut instances: Vec<(String, SkewBracoid)> = Vec::new();
    for n in 1..=12usize {
        instances.push((format!("family({n},{n})"), d2n_family(n, n).unwrap()));
    }
    instances.push(("family(9,3)".into(), d2n_family(9, 3).unwrap()));
    instances.push(("family(12,4)".into(), d2n_family(12, 4).unwrap()));
    instances.push(("trivial brace on D6".into(), trivial_brace(&dihedral(3))));
    for (name, b) in &instances {
        let pair = embedding_pair_from_bracoid(b).map_err(|e| format!("{name}: {e}"))?;
        check_pair(name, &pair, Some(true))?;
        checked += 1;
    }

    let s3 = dihedral(3);
    let space = CosetSpace::new(s3.clone(), Subgroup::trivial(&s3)).map_err(|e| e.to_string())?;
    let alpha = s3.elements().map(|x| s3.left_translation(x)).collect();
    let pair = alpha_to_beta(&space, &s3, alpha).map_err(|e| e.to_string())?;
    check_pair("λ on S3", &pair, None)?;
    let opp = opp_check(&pair, &iota_twist(&pair).map_err(|e| e.to_string())?);
    ensure!(!opp.equals_alpha, "S3: α̂(N) = α(N)");
    checked += 1;

    let trivial = FiniteGroup::trivial();
    let space = CosetSpace::new(trivial.clone(), Subgroup::trivial(&trivial)).map_err(|e| e.to_string())?;
    let pair = beta_to_alpha(&space, &trivial, vec![Permutation::identity(1)]).map_err(|e| e.to_string())?;
    check_pair("trivial group", &pair, Some(true))?;
    checked += 1;

    let negative = unstable_pair()?;
    check_pair("hand-built C4 embedding", &negative, Some(false))?;
    let st = g_stability_check(&negative);
    ensure!(!st.g_stable && !st.in_holomorph, "negative witness: {st:?}");
    checked += 1;
    Ok(format!("{checked} embedding pairs, one not G-stable"))
}

fn criterion_10() -> Outcome {
    let limits = Limits::default();
    let mut instances: Vec<SkewBracoid> = Vec::new();
    for n in 1..=12usize {
        for dd in (1..=n).filter(|dd| n % dd == 0) {
            instances.push(d2n_family(n, dd).unwrap());
        }
    }
    for n in [direct_product(&cyclic(2), &cyclic(2)), cyclic(6), direct_product(&cyclic(2), &cyclic(4))] {
        instances.extend(enumerate_almost_classical(&n, &limits).map_err(|e| e.to_string())?.bracoids);
    }
    let (mut ac, mut records, mut non_ideals) = (0, 0, 0);
    for b in &instances {
        if b.classify(&limits).map_err(|e| e.to_string())?.almost_classical().is_empty() {
            continue;
        }
        ac += 1;
        for rec in b.left_ideals_over_stabilizer(&limits).map_err(|e| e.to_string())? {
            ensure!(rec.is_left_ideal, "G′ = {:?}: orbit {:?} is not a left ideal", rec.overgroup.members(), rec.orbit);
            records += 1;
        }
        for s in all_subgroups(b.additive(), &limits).map_err(|e| e.to_string())? {
            if !b.is_left_ideal(s.members()).map_err(|e| e.to_string())? {
                non_ideals += 1;
            }
        }
    }
    ensure!(non_ideals > 0, "every subgroup of every additive group is a left ideal; the check is vacuous");
    Ok(format!("{ac} almost classical instances, {records} overgroups of S, {non_ideals} subgroups that are not left ideals"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("classification of the dihedral family", criterion_1),
        ("almost classical enumeration matches the holomorph oracle", criterion_2),
        ("braid relation and degeneracy of generated solutions", criterion_3),
        ("closed forms of the two dihedral solutions", criterion_4),
        ("almost classical closed form matches the generic construction", criterion_5),
        ("induced skew bracoid", criterion_6),
        ("brace envelope", criterion_7),
        ("rho-star equals the opposite of lambda(H)", criterion_8),
        ("translation between regular and transitive embeddings", criterion_9),
        ("left ideals over the stabilizer", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
