//! Builders for skew bracoids.

use crate::bracoid::SkewBracoid;
use crate::error::{Error, Result};
use crate::groups::{cyclic, dihedral, direct_product, left_cosets, quotient, FiniteGroup, Subgroup};

/// `(D₂ₙ, C_d)` with `rⁱsʲ⊙ηᵏ = η^{i+(-1)ʲk}`, for `d | n`.
pub fn d2n_family(n: usize, d: usize) -> Result<SkewBracoid> {
    if n == 0 || d == 0 || !n.is_multiple_of(d) {
        return Err(Error::NotADivisor { n, d });
    }
    let action = (0..2 * n)
        .map(|x| {
            let (i, j) = ((x % n) as i64, x / n);
            let sign = if j == 0 { 1 } else { -1 };
            (0..d as i64).map(|k| (i + sign * k).rem_euclid(d as i64) as usize).collect()
        })
        .collect();
    SkewBracoid::validate(dihedral(n), cyclic(d), action)
}

/// The trivial skew brace on `group`: `(G, G)` with `⊙` the group product.
pub fn trivial_brace(group: &FiniteGroup) -> SkewBracoid {
    let action = group.elements().map(|x| group.elements().map(|y| group.mul(x, y)).collect()).collect();
    SkewBracoid::validate(group.clone(), group.clone(), action).expect("left multiplication is a skew brace")
}

/// The skew bracoid `(G, N×M)` induced from `(G, N)` (almost a brace with
/// respect to `H`) and `(S, M)`.
#[derive(Debug, Clone)]
pub struct InducedBracoid {
    pub result: SkewBracoid,
    pub complement: Subgroup,
    /// Element `i` of the inner multiplicative group is `identification[i]` in `G`.
    pub identification: Vec<usize>,
    /// `π(g)` as an element of `G`; `π(hs) = s`.
    pub projection: Vec<usize>,
    /// Image of `Stab_S(e_M)` in `G`.
    pub inner_stabilizer: Subgroup,
}

impl InducedBracoid {
    /// Inner-group index of `π(g)`.
    pub fn projection_index(&self, g: usize) -> usize {
        self.identification.iter().position(|&x| x == self.projection[g]).expect("π lands in S")
    }
}

/// `g⊙(η, μ) = (g⊙_N η, π(g)⊙_M μ)`.
///
/// `identification` maps the inner multiplicative group isomorphically
/// onto the stabilizer of `outer`; it is part of the input because
/// different identifications can give different bracoids.
pub fn induce(outer: &SkewBracoid, h: &Subgroup, inner: &SkewBracoid, identification: &[usize]) -> Result<InducedBracoid> {
    outer.require_almost_brace(h)?;
    let g = outer.multiplicative();
    let s = outer.stabilizer();
    let inner_g = inner.multiplicative();
    if identification.len() != inner_g.order() {
        return Err(Error::StabilizerMismatch {
            reason: format!("identification has {} entries for a group of order {}", identification.len(), inner_g.order()),
        });
    }
    if identification.iter().any(|&x| x >= g.order()) {
        return Err(Error::StabilizerMismatch { reason: "identification leaves G".into() });
    }
    if inner_g.homomorphism_failure(g, identification).is_some() {
        return Err(Error::StabilizerMismatch { reason: "identification is not a homomorphism".into() });
    }
    let mut image = identification.to_vec();
    image.sort_unstable();
    image.dedup();
    if image != s.members() {
        return Err(Error::StabilizerMismatch { reason: "identification is not a bijection onto S".into() });
    }
    let inner_index = |x: usize| identification.iter().position(|&y| y == x).expect("x in S");

    let mut projection = vec![usize::MAX; g.order()];
    for &hh in h.members() {
        for &ss in s.members() {
            projection[g.mul(hh, ss)] = ss;
        }
    }
    if let Some((a, b)) = g.homomorphism_failure(g, &projection) {
        return Err(Error::Internal(format!("projection onto S fails to be a homomorphism at ({a}, {b})")));
    }

    let (n, m) = (outer.additive(), inner.additive());
    let additive = direct_product(n, m);
    let action = g
        .elements()
        .map(|x| {
            let p = inner_index(projection[x]);
            additive
                .elements()
                .map(|pair| {
                    let (eta, mu) = (pair / m.order(), pair % m.order());
                    outer.act(x, eta) * m.order() + inner.act(p, mu)
                })
                .collect()
        })
        .collect();
    let result = SkewBracoid::validate(g.clone(), additive, action)?;
    let inner_stabilizer = {
        let mut members: Vec<usize> = inner.stabilizer().members().iter().map(|&x| identification[x]).collect();
        members.sort_unstable();
        Subgroup::new(g, members)?
    };
    if result.stabilizer() != &inner_stabilizer {
        return Err(Error::Internal("induced stabilizer differs from Stab_S(e_M)".into()));
    }
    Ok(InducedBracoid {
        result,
        complement: h.clone(),
        identification: identification.to_vec(),
        projection,
        inner_stabilizer,
    })
}

/// Some isomorphism from `inner`'s multiplicative group onto the stabilizer
/// of `outer`, by backtracking. The first one found is returned; callers
/// that care which identification is used should pass it explicitly.
pub fn find_identification(outer: &SkewBracoid, inner: &SkewBracoid) -> Option<Vec<usize>> {
    let (s_group, embedding) = outer.stabilizer().to_group(outer.multiplicative());
    crate::groups::find_isomorphism(inner.multiplicative(), &s_group)
        .map(|iso| iso.into_iter().map(|x| embedding[x]).collect())
}

/// Whether properties of `(S, M)` with respect to `R` carry over to the
/// induced bracoid with respect to `HR`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreservationReport {
    /// `HR` as a subset of `G`, sorted.
    pub hr: Vec<usize>,
    pub hr_is_subgroup: bool,
    pub inner_contains_brace: bool,
    pub inner_almost_brace: bool,
    pub induced_contains_brace: bool,
    pub induced_almost_brace: bool,
    pub stabilizer_matches: bool,
    pub failures: Vec<String>,
}

impl PreservationReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `r` is a subgroup of the inner multiplicative group.
pub fn check_induced_preservation(induced: &InducedBracoid, inner: &SkewBracoid, r: &Subgroup) -> Result<PreservationReport> {
    let g = induced.result.multiplicative();
    let inner_g = inner.multiplicative();
    let r = Subgroup::new(inner_g, r.members().to_vec())?;
    let r_in_g = Subgroup::new(g, r.members().iter().map(|&x| induced.identification[x]).collect())?;
    let hr = induced.complement.product_set(g, &r_in_g);
    let hr_sub = Subgroup::new(g, hr.clone()).ok();
    let inner_contains_brace = inner.is_complement(&r);
    let inner_almost_brace = inner_contains_brace && r.is_normal_in(inner_g);
    let induced_contains_brace = hr_sub.as_ref().is_some_and(|x| induced.result.is_complement(x));
    let induced_almost_brace = induced_contains_brace && hr_sub.as_ref().is_some_and(|x| x.is_normal_in(g));
    let stabilizer_matches = induced.result.stabilizer() == &induced.inner_stabilizer;
    let mut failures = Vec::new();
    if inner_contains_brace && !induced_contains_brace {
        failures.push("inner contains a brace but HR is not a complement in the induced bracoid".into());
    }
    if inner_almost_brace && !induced_almost_brace {
        failures.push("inner is almost a brace but HR is not normal".into());
    }
    if !stabilizer_matches {
        failures.push("induced stabilizer differs from Stab_S(e_M)".into());
    }
    Ok(PreservationReport {
        hr,
        hr_is_subgroup: hr_sub.is_some(),
        inner_contains_brace,
        inner_almost_brace,
        induced_contains_brace,
        induced_almost_brace,
        stabilizer_matches,
        failures,
    })
}

/// The skew brace `(G, ★, ·)` containing `S` as a strong left ideal, with
/// `(G, N) ≅ (G, G/S)`.
#[derive(Debug, Clone)]
pub struct Envelope {
    /// `(G, (G,★))` with `⊙ = ·`; its stabilizer is trivial.
    pub brace: SkewBracoid,
    pub stabilizer: Subgroup,
    /// `hs ↦ (h⊙e_N, s)` as an index into `N × S`; an isomorphism
    /// `(G,★) → N × S`.
    pub product_map: Vec<usize>,
    pub product_group: FiniteGroup,
    /// `(G, G/S)`, additive group the `★`-quotient by `S`.
    pub quotient: SkewBracoid,
    /// `g⊙e_N ↦ gS`, the additive part of the isomorphism `(G,N) → (G,G/S)`
    /// whose multiplicative part is the identity on `G`.
    pub witness: Vec<usize>,
}

pub fn brace_envelope(b: &SkewBracoid, h: &Subgroup) -> Result<Envelope> {
    b.require_almost_brace(h)?;
    let g = b.multiplicative();
    let s = b.stabilizer().clone();
    let (s_group, embedding) = s.to_group(g);
    let induced = induce(b, h, &trivial_brace(&s_group), &embedding)?;
    let to_pair: Vec<usize> = g.elements().map(|x| induced.result.orbit_point(x)).collect();
    let product_group = induced.result.additive().clone();
    let mut from_pair = vec![usize::MAX; product_group.order()];
    for (x, &p) in to_pair.iter().enumerate() {
        from_pair[p] = x;
    }
    if from_pair.contains(&usize::MAX) {
        return Err(Error::Internal("hs ↦ (h⊙e_N, s) is not a bijection".into()));
    }
    let star_rows = g
        .elements()
        .map(|x| g.elements().map(|y| from_pair[product_group.mul(to_pair[x], to_pair[y])]).collect())
        .collect();
    let mut star = FiniteGroup::from_cayley_table(star_rows)?;
    if let Some(labels) = g.labels() {
        star = star.with_labels(labels.to_vec())?;
    }
    let left_mult: Vec<Vec<usize>> = g.elements().map(|x| g.elements().map(|y| g.mul(x, y)).collect()).collect();
    let brace = SkewBracoid::validate(g.clone(), star.clone(), left_mult)?;
    if !brace.is_essentially_brace() {
        return Err(Error::Internal("envelope stabilizer is not trivial".into()));
    }

    // S is a normal ★-subgroup on which γ(G) acts trivially.
    let s_star = Subgroup::new(&star, s.members().to_vec())?;
    if !s_star.is_normal_in(&star) {
        return Err(Error::Internal("S is not normal under ★".into()));
    }
    let gamma = brace.gamma()?;
    for x in g.elements() {
        if let Some(&y) = s.members().iter().find(|&&y| gamma.apply(x, y) != y) {
            return Err(Error::Internal(format!("γ({x}) moves {y} in S")));
        }
    }

    let q = quotient(&star, &s_star)?;
    let (dot_cosets, _) = left_cosets(g, &s);
    if q.cosets != dot_cosets {
        return Err(Error::Internal("★-cosets of S differ from ·-cosets".into()));
    }
    let quotient_action =
        g.elements().map(|x| q.cosets.iter().map(|c| q.projection[g.mul(x, c[0])]).collect()).collect();
    let quotient_bracoid = SkewBracoid::validate(g.clone(), q.group.clone(), quotient_action)?;

    let n = b.additive();
    let mut witness = vec![usize::MAX; n.order()];
    for x in g.elements() {
        let eta = b.orbit_point(x);
        let coset = q.projection[x];
        if witness[eta] != usize::MAX && witness[eta] != coset {
            return Err(Error::Internal("g⊙e_N ↦ gS is not well defined".into()));
        }
        witness[eta] = coset;
    }
    verify_bracoid_isomorphism(b, &quotient_bracoid, &(0..g.order()).collect::<Vec<_>>(), &witness)?;

    Ok(Envelope { brace, stabilizer: s, product_map: to_pair, product_group, quotient: quotient_bracoid, witness })
}

/// Checks that `(mult_map, add_map)` is an isomorphism of skew bracoids:
/// both are group isomorphisms and `add_map(g⊙η) = mult_map(g)⊙add_map(η)`.
pub fn verify_bracoid_isomorphism(
    left: &SkewBracoid,
    right: &SkewBracoid,
    mult_map: &[usize],
    add_map: &[usize],
) -> Result<()> {
    let check_iso = |a: &FiniteGroup, b: &FiniteGroup, map: &[usize], what: &str| -> Result<()> {
        let mut sorted = map.to_vec();
        sorted.sort_unstable();
        if a.order() != b.order() || sorted != (0..b.order()).collect::<Vec<_>>() {
            return Err(Error::Internal(format!("{what} map is not a bijection")));
        }
        if let Some((x, y)) = a.homomorphism_failure(b, map) {
            return Err(Error::Internal(format!("{what} map is not a homomorphism at ({x}, {y})")));
        }
        Ok(())
    };
    check_iso(left.multiplicative(), right.multiplicative(), mult_map, "multiplicative")?;
    check_iso(left.additive(), right.additive(), add_map, "additive")?;
    for g in left.multiplicative().elements() {
        for eta in left.additive().elements() {
            if add_map[left.act(g, eta)] != right.act(mult_map[g], add_map[eta]) {
                return Err(Error::Internal(format!("maps are not equivariant at ({g}, {eta})")));
            }
        }
    }
    Ok(())
}

/// An isomorphism of skew bracoids, if one exists, found by searching
/// additive isomorphisms and, for each, compatible multiplicative ones.
pub fn find_bracoid_isomorphism(left: &SkewBracoid, right: &SkewBracoid) -> Option<(Vec<usize>, Vec<usize>)> {
    let (lg, rg) = (left.multiplicative(), right.multiplicative());
    let (ln, rn) = (left.additive(), right.additive());
    if lg.order() != rg.order() || ln.order() != rn.order() {
        return None;
    }
    let mut found = None;
    crate::groups::find_isomorphism_with(ln, rn, |add_map| {
        let mult = crate::groups::find_isomorphism_with(lg, rg, |mult_map| {
            lg.elements().all(|g| {
                ln.elements().all(|eta| add_map[left.act(g, eta)] == right.act(mult_map[g], add_map[eta]))
            })
        });
        match mult {
            Some(m) => {
                found = Some((m, add_map.to_vec()));
                true
            }
            None => false,
        }
    });
    found
}

/// A bracoid rewritten on the coset space `X = G/S`, acting by left
/// translation.
#[derive(Debug, Clone)]
pub struct CosetForm {
    pub bracoid: SkewBracoid,
    /// `g⊙e_N ↦ gS`.
    pub witness: Vec<usize>,
    /// Cosets, ordered by least element; coset `0` is `S`.
    pub cosets: Vec<Vec<usize>>,
    /// Coset index of each element of `G`.
    pub coset_of: Vec<usize>,
}

pub fn coset_form(b: &SkewBracoid) -> Result<CosetForm> {
    let g = b.multiplicative();
    let n = b.additive();
    let (cosets, coset_of) = left_cosets(g, b.stabilizer());
    let mut witness = vec![usize::MAX; n.order()];
    for x in g.elements() {
        witness[b.orbit_point(x)] = coset_of[x];
    }
    let mut back = vec![0; cosets.len()];
    for (eta, &c) in witness.iter().enumerate() {
        back[c] = eta;
    }
    let m = cosets.len();
    let star_rows = (0..m).map(|x| (0..m).map(|y| witness[n.mul(back[x], back[y])]).collect()).collect();
    let mut star = FiniteGroup::from_cayley_table(star_rows)?;
    if let Some(labels) = g.labels() {
        star = star.with_labels(cosets.iter().map(|c| format!("[{}]", labels[c[0]])).collect())?;
    }
    let action = g.elements().map(|x| cosets.iter().map(|c| coset_of[g.mul(x, c[0])]).collect()).collect();
    let bracoid = SkewBracoid::validate(g.clone(), star, action)?;
    verify_bracoid_isomorphism(b, &bracoid, &(0..g.order()).collect::<Vec<_>>(), &witness)?;
    Ok(CosetForm { bracoid, witness, cosets, coset_of })
}
