//! Skew bracoids as transitive subgroups of holomorphs, and the translation
//! between regular and transitive permutation embeddings.

use std::collections::HashSet;
use std::sync::Arc;

use rayon::prelude::*;

use crate::bracoid::SkewBracoid;
use crate::constructions::CosetForm;
use crate::error::{Error, Result};
use crate::groups::subgroup::{all_subgroups_with_cap, partition_by_conjugation};
use crate::groups::{automorphisms_as_group, holomorph, left_cosets, FiniteGroup, HolomorphGroup, Limits, Permutation, Subgroup};

/// A subgroup `A ≤ Hol(N)`. The flags are computed from the members.
#[derive(Debug, Clone)]
pub struct HolSubgroup {
    holomorph: Arc<HolomorphGroup>,
    members: Subgroup,
    transitive: bool,
    contains_translations: bool,
}

impl HolSubgroup {
    pub fn new(holomorph: Arc<HolomorphGroup>, members: Vec<usize>) -> Result<Self> {
        let members = Subgroup::new(holomorph.group(), members)?;
        let mut reached = vec![false; holomorph.base().order()];
        let e = holomorph.base().identity();
        for &x in members.members() {
            reached[holomorph.action(x).apply(e)] = true;
        }
        let transitive = reached.iter().all(|&r| r);
        let contains_translations = holomorph.translations().is_subset_of(&members);
        Ok(Self { holomorph, members, transitive, contains_translations })
    }

    pub fn holomorph(&self) -> &Arc<HolomorphGroup> {
        &self.holomorph
    }

    pub fn members(&self) -> &Subgroup {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.order()
    }

    pub fn is_transitive(&self) -> bool {
        self.transitive
    }

    /// Transitive with `|A| = |N|`.
    pub fn is_regular(&self) -> bool {
        self.transitive && self.order() == self.holomorph.base().order()
    }

    /// `(N, id) ⊆ A`.
    pub fn contains_translations(&self) -> bool {
        self.contains_translations
    }

    /// `Stab_A(e_N)`: the members with trivial `N` component.
    pub fn point_stabilizer(&self) -> Subgroup {
        self.members.intersection(&self.holomorph.pure_automorphisms())
    }
}

/// `g ↦ (g⊙e_N, γ(g))` and its image.
#[derive(Debug, Clone)]
pub struct LambdaImage {
    pub image: HolSubgroup,
    /// Holomorph element of each `g`.
    pub map: Vec<usize>,
}

pub fn lambda_image(b: &SkewBracoid, limits: &Limits) -> Result<LambdaImage> {
    let hol = Arc::new(holomorph(b.additive(), limits)?);
    lambda_image_in(b, hol)
}

/// As [`lambda_image`], reusing an already built `Hol(N)`.
pub fn lambda_image_in(b: &SkewBracoid, hol: Arc<HolomorphGroup>) -> Result<LambdaImage> {
    if hol.base() != b.additive() {
        return Err(Error::Shape("holomorph is over a different group".into()));
    }
    let gamma = b.gamma()?;
    let mut map = Vec::with_capacity(b.multiplicative().order());
    for g in b.multiplicative().elements() {
        let theta = hol
            .automorphism_index(gamma.get(g).images())
            .ok_or(Error::GammaNotAutomorphism { element: g })?;
        let x = hol.index(b.orbit_point(g), theta);
        if hol.action(x) != &b.action_perm(g) {
            return Err(Error::Internal(format!("(g⊙e, γ(g)) does not act as g for g = {g}")));
        }
        map.push(x);
    }
    let mut members = map.clone();
    members.sort_unstable();
    members.dedup();
    let image = HolSubgroup::new(hol, members)?;
    Ok(LambdaImage { image, map })
}

/// `(A, N)` with the natural action. Always reduced.
pub fn bracoid_from_hol(a: &HolSubgroup) -> Result<SkewBracoid> {
    let hol = a.holomorph();
    let (group, embedding) = a.members().to_group(hol.group());
    let action = embedding.iter().map(|&x| hol.action(x).images().to_vec()).collect();
    SkewBracoid::validate(group, hol.base().clone(), action)
}

/// `A = R ⋊ B` with `R` normal and regular and `B = Stab_A(e_N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RbForm {
    pub r: Subgroup,
    pub b: Subgroup,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forms {
    pub contains_translations: bool,
    pub rb_form: Option<RbForm>,
}

impl Forms {
    pub fn has_rb_form(&self) -> bool {
        self.rb_form.is_some()
    }
}

/// Searches the subgroups of `A` for a normal regular one. When `A`
/// contains `(N, id)` that subgroup is the witness.
pub fn detect_forms(a: &HolSubgroup, limits: &Limits) -> Result<Forms> {
    if !a.is_transitive() {
        let total = a.holomorph().base().order();
        return Err(Error::NotTransitive { orbit_size: orbit_size(a), total });
    }
    let hol = a.holomorph();
    let b = a.point_stabilizer();
    if a.contains_translations() {
        let r = hol.translations();
        return Ok(Forms { contains_translations: true, rb_form: Some(RbForm { r, b }) });
    }
    let n = hol.base().order();
    let (group, embedding) = a.members().to_group(hol.group());
    let found = all_subgroups_with_cap(&group, limits.hol_cap)?.into_iter().find(|r| {
        r.order() == n && r.is_normal_in(&group) && {
            let mut reached: Vec<usize> =
                r.members().iter().map(|&x| hol.action(embedding[x]).apply(hol.base().identity())).collect();
            reached.sort_unstable();
            reached.dedup();
            reached.len() == n
        }
    });
    let rb_form = found.map(|r| {
        let mut members: Vec<usize> = r.members().iter().map(|&x| embedding[x]).collect();
        members.sort_unstable();
        RbForm { r: Subgroup::from_sorted_unchecked(members), b: b.clone() }
    });
    Ok(Forms { contains_translations: false, rb_form })
}

fn orbit_size(a: &HolSubgroup) -> usize {
    let hol = a.holomorph();
    let e = hol.base().identity();
    a.members().members().iter().map(|&x| hol.action(x).apply(e)).collect::<HashSet<_>>().len()
}

/// Every transitive subgroup of `Hol(N)`, canonically sorted.
pub fn transitive_subgroups(hol: &Arc<HolomorphGroup>, limits: &Limits) -> Result<Vec<HolSubgroup>> {
    let all = all_subgroups_with_cap(hol.group(), limits.hol_cap)?;
    all.into_par_iter()
        .map(|s| HolSubgroup::new(Arc::clone(hol), s.members().to_vec()))
        .filter(|a| a.as_ref().map_or(true, |a| a.is_transitive()))
        .collect()
}

/// One almost classical skew bracoid `(N ⋊ B, N)` per conjugacy class of
/// subgroups `B ≤ Aut(N)`.
#[derive(Debug, Clone)]
pub struct AlmostClassicalEnumeration {
    pub holomorph: Arc<HolomorphGroup>,
    /// Conjugacy classes of subgroups of `Aut(N)`, as sets of automorphism
    /// indices.
    pub classes: Vec<Vec<Subgroup>>,
    /// `N ⋊ B` for the first member `B` of each class.
    pub subgroups: Vec<HolSubgroup>,
    pub bracoids: Vec<SkewBracoid>,
}

impl AlmostClassicalEnumeration {
    pub fn count(&self) -> usize {
        self.classes.len()
    }
}

pub fn enumerate_almost_classical(n: &FiniteGroup, limits: &Limits) -> Result<AlmostClassicalEnumeration> {
    let hol = Arc::new(holomorph(n, limits)?);
    let aut = automorphisms_as_group(hol.automorphisms())?;
    let classes = partition_by_conjugation(&aut, all_subgroups_with_cap(&aut, limits.hol_cap)?);
    let mut subgroups = Vec::with_capacity(classes.len());
    let mut bracoids = Vec::with_capacity(classes.len());
    for class in &classes {
        let mut members: Vec<usize> =
            n.elements().flat_map(|eta| class[0].members().iter().map(move |&t| (eta, t))).map(|(eta, t)| hol.index(eta, t)).collect();
        members.sort_unstable();
        let a = HolSubgroup::new(Arc::clone(&hol), members)?;
        bracoids.push(bracoid_from_hol(&a)?);
        subgroups.push(a);
    }
    Ok(AlmostClassicalEnumeration { holomorph: hol, classes, subgroups, bracoids })
}

/// Number of transitive subgroups of `Hol(N)` containing `(N, id)`, up to
/// conjugation by `(e_N, θ)` for `θ ∈ Aut(N)`. Computed from the full
/// subgroup lattice of `Hol(N)`.
pub fn almost_classical_oracle_count(n: &FiniteGroup, limits: &Limits) -> Result<usize> {
    let hol = Arc::new(holomorph(n, limits)?);
    let group = hol.group();
    let candidates: Vec<HolSubgroup> = transitive_subgroups(&hol, limits)?
        .into_iter()
        .filter(|a| a.contains_translations())
        .collect();
    let pure = hol.pure_automorphisms();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut classes = 0;
    for a in &candidates {
        if seen.contains(a.members().members()) {
            continue;
        }
        classes += 1;
        for &t in pure.members() {
            seen.insert(a.members().conjugate(group, t).members().to_vec());
        }
    }
    Ok(classes)
}

/// `ρ⋆(X)` against `ρ_H`, the right translations of `H` carried to `X`.
#[derive(Debug, Clone)]
pub struct RhoStarReport {
    /// `ρ⋆(x): y ↦ y ★ x⁻¹`, indexed by `x ∈ X`.
    pub rho_star: Vec<Permutation>,
    /// `ρ_H(h₁): h̄₂ ↦ (h₂h₁⁻¹)‾`, in the order of `H`'s members.
    pub rho_h: Vec<Permutation>,
    /// `ρ⋆(h̄) = ρ_H(h)` for every `h ∈ H`.
    pub equal: bool,
    pub commutation_checks: usize,
    /// Every `ρ⋆(x)` commutes with every `λ(h)`.
    pub commutes: bool,
    /// `h̄₁ ★ h̄₂ = (h₁h₂)‾` for all pairs.
    pub coset_product: bool,
    /// `ρ⋆(X)` has `|X|` distinct elements and `λ(H)` is regular on `X`, so
    /// the centralizer of `λ(H)` has no room for anything else.
    pub size_certificate: bool,
}

impl RhoStarReport {
    pub fn holds(&self) -> bool {
        self.equal && self.commutes && self.coset_product && self.size_certificate
    }
}

pub fn rho_star_vs_opp(cf: &CosetForm, h: &Subgroup) -> Result<RhoStarReport> {
    let b = &cf.bracoid;
    b.require_almost_classical(h)?;
    let g = b.multiplicative();
    let x = b.additive();
    let m = x.order();
    let rho_star: Vec<Permutation> = x
        .elements()
        .map(|p| Permutation::from_images_unchecked(x.elements().map(|y| x.mul(y, x.inv(p))).collect()))
        .collect();
    let mut from_coset = vec![usize::MAX; m];
    for &hh in h.members() {
        from_coset[cf.coset_of[hh]] = hh;
    }
    let rho_h: Vec<Permutation> = h
        .members()
        .iter()
        .map(|&h1| {
            Permutation::from_images_unchecked(
                (0..m).map(|y| cf.coset_of[g.mul(from_coset[y], g.inv(h1))]).collect(),
            )
        })
        .collect();
    let equal = h.members().iter().zip(&rho_h).all(|(&h1, r)| rho_star[cf.coset_of[h1]] == *r);
    let lambda: Vec<Permutation> = h.members().iter().map(|&hh| b.action_perm(hh)).collect();
    let commutes = rho_star.iter().all(|r| lambda.iter().all(|l| r.commutes_with(l)));
    let commutation_checks = rho_star.len() * lambda.len();
    let coset_product = h.members().iter().all(|&h1| {
        h.members()
            .iter()
            .all(|&h2| x.mul(cf.coset_of[h1], cf.coset_of[h2]) == cf.coset_of[g.mul(h1, h2)])
    });
    let distinct = rho_star.iter().collect::<HashSet<_>>().len() == m;
    let regular = {
        let e = cf.coset_of[g.identity()];
        let orbit: HashSet<usize> = lambda.iter().map(|l| l.apply(e)).collect();
        orbit.len() == m && lambda.len() == m
    };
    Ok(RhoStarReport {
        rho_star,
        rho_h,
        equal,
        commutation_checks,
        commutes,
        coset_product,
        size_certificate: distinct && regular,
    })
}

/// The left coset space `X = G/G′` with `G` acting by left translation.
#[derive(Debug, Clone)]
pub struct CosetSpace {
    group: FiniteGroup,
    subgroup: Subgroup,
    cosets: Vec<Vec<usize>>,
    coset_of: Vec<usize>,
    lambda: Vec<Permutation>,
}

impl CosetSpace {
    pub fn new(group: FiniteGroup, subgroup: Subgroup) -> Result<Self> {
        let subgroup = Subgroup::new(&group, subgroup.members().to_vec())?;
        let (cosets, coset_of) = left_cosets(&group, &subgroup);
        let lambda = group
            .elements()
            .map(|g| Permutation::from_images_unchecked(cosets.iter().map(|c| coset_of[group.mul(g, c[0])]).collect()))
            .collect();
        Ok(Self { group, subgroup, cosets, coset_of, lambda })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn size(&self) -> usize {
        self.cosets.len()
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    pub fn coset_of(&self, g: usize) -> usize {
        self.coset_of[g]
    }

    /// `ē`, the coset `G′`.
    pub fn base_point(&self) -> usize {
        self.coset_of[self.group.identity()]
    }

    /// `λ_X(g)`.
    pub fn lambda(&self, g: usize) -> &Permutation {
        &self.lambda[g]
    }

    /// `λ_X` is injective, i.e. `G′` is core-free. The translation maps
    /// only behave as expected in this case.
    pub fn is_galois_closure(&self) -> bool {
        self.lambda.iter().collect::<HashSet<_>>().len() == self.group.order()
    }
}

/// A regular embedding `α: N → Perm(X)` and the transitive embedding
/// `β: G → Perm(N)` paired with it, along with the bijections `a: N → X`
/// and `b: X → N` that carry one to the other.
#[derive(Debug, Clone)]
pub struct EmbeddingPair {
    pub space: CosetSpace,
    pub additive: FiniteGroup,
    pub alpha: Vec<Permutation>,
    pub beta: Vec<Permutation>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

/// `ρ_N(η): μ ↦ μη⁻¹`.
fn right_regular(n: &FiniteGroup, eta: usize) -> impl Fn(usize) -> usize + '_ {
    let inv = n.inv(eta);
    move |mu| n.mul(mu, inv)
}

fn check_homomorphism(source: &FiniteGroup, images: &[Permutation], degree: usize) -> Result<()> {
    if images.len() != source.order() {
        return Err(Error::Shape(format!("expected {} permutations, got {}", source.order(), images.len())));
    }
    if let Some(p) = images.iter().find(|p| p.degree() != degree) {
        return Err(Error::Shape(format!("permutation of degree {} where {degree} was expected", p.degree())));
    }
    for x in source.elements() {
        for y in source.elements() {
            if images[source.mul(x, y)] != images[x].compose(&images[y]) {
                return Err(Error::NotAHomomorphism { a: x, b: y });
            }
        }
    }
    Ok(())
}

/// `a(η) = α(η⁻¹)[ē]`, `β(g) = a⁻¹ ∘ λ_X(g) ∘ a`.
pub fn alpha_to_beta(space: &CosetSpace, additive: &FiniteGroup, alpha: Vec<Permutation>) -> Result<EmbeddingPair> {
    let m = space.size();
    check_homomorphism(additive, &alpha, m)?;
    if additive.order() != m {
        return Err(Error::NotRegular { reason: format!("|N| = {} but |X| = {m}", additive.order()) });
    }
    let e_bar = space.base_point();
    let a: Vec<usize> = additive.elements().map(|eta| alpha[additive.inv(eta)].apply(e_bar)).collect();
    let mut b = vec![usize::MAX; m];
    for (eta, &x) in a.iter().enumerate() {
        if b[x] != usize::MAX {
            return Err(Error::NotRegular { reason: format!("α(N) is not transitive: point {x} is hit twice") });
        }
        b[x] = eta;
    }
    let beta = space
        .group()
        .elements()
        .map(|g| Permutation::from_images_unchecked(a.iter().map(|&x| b[space.lambda(g).apply(x)]).collect()))
        .collect();
    let pair = EmbeddingPair { space: space.clone(), additive: additive.clone(), alpha, beta, a, b };
    pair.verify()?;
    Ok(pair)
}

/// `b(ḡ) = β(g)[e_N]`, `α(η) = b⁻¹ ∘ ρ_N(η) ∘ b`.
pub fn beta_to_alpha(space: &CosetSpace, additive: &FiniteGroup, beta: Vec<Permutation>) -> Result<EmbeddingPair> {
    let g = space.group();
    let m = additive.order();
    check_homomorphism(g, &beta, m)?;
    let e = additive.identity();
    let orbit: HashSet<usize> = beta.iter().map(|p| p.apply(e)).collect();
    if orbit.len() != m {
        return Err(Error::NotTransitive { orbit_size: orbit.len(), total: m });
    }
    if space.size() != m {
        return Err(Error::SizeMismatch { left: space.size(), right: m });
    }
    if let Some(x) = g.elements().find(|&x| (beta[x].apply(e) == e) != space.subgroup().contains(x)) {
        return Err(Error::StabConditionFails { element: x });
    }
    let mut b = vec![usize::MAX; m];
    for x in g.elements() {
        b[space.coset_of(x)] = beta[x].apply(e);
    }
    let mut a = vec![usize::MAX; m];
    for (x, &eta) in b.iter().enumerate() {
        a[eta] = x;
    }
    let alpha = additive
        .elements()
        .map(|eta| {
            let rho = right_regular(additive, eta);
            Permutation::from_images_unchecked(b.iter().map(|&mu| a[rho(mu)]).collect())
        })
        .collect();
    let pair = EmbeddingPair { space: space.clone(), additive: additive.clone(), alpha, beta, a, b };
    pair.verify()?;
    Ok(pair)
}

impl EmbeddingPair {
    /// Checks every relation between `α`, `β`, `a` and `b`.
    pub fn verify(&self) -> Result<()> {
        let n = &self.additive;
        let space = &self.space;
        let fail = |what: &str| Err(Error::Internal(format!("embedding pair: {what}")));
        if self.a[n.identity()] != space.base_point() || self.b[space.base_point()] != n.identity() {
            return fail("a and b must match the base points");
        }
        if self.a.iter().enumerate().any(|(eta, &x)| self.b[x] != eta) {
            return fail("b is not the inverse of a");
        }
        for eta in n.elements() {
            let rho = right_regular(n, eta);
            if (0..space.size()).any(|x| self.alpha[eta].apply(x) != self.a[rho(self.b[x])]) {
                return fail("α(η) ≠ b⁻¹ρ_N(η)b");
            }
        }
        for g in space.group().elements() {
            if n.elements().any(|eta| self.beta[g].apply(eta) != self.b[space.lambda(g).apply(self.a[eta])]) {
                return fail("β(g) ≠ a⁻¹λ_X(g)a");
            }
        }
        let e = n.identity();
        let orbit: HashSet<usize> = self.beta.iter().map(|p| p.apply(e)).collect();
        if orbit.len() != n.order() {
            return fail("β is not transitive");
        }
        let stab: HashSet<&Permutation> = self.beta.iter().filter(|p| p.apply(e) == e).collect();
        let sub: HashSet<&Permutation> = space.subgroup().members().iter().map(|&x| &self.beta[x]).collect();
        if stab != sub {
            return fail("Stab_β(G)(e_N) ≠ β(G′)");
        }
        Ok(())
    }
}

/// `β̂(g) = ιβ(g)ι` with `ι` the inversion map on `N`, paired with its `α̂`.
pub fn iota_twist(pair: &EmbeddingPair) -> Result<EmbeddingPair> {
    let n = &pair.additive;
    let beta_hat = pair
        .beta
        .iter()
        .map(|p| Permutation::from_images_unchecked(n.elements().map(|eta| n.inv(p.apply(n.inv(eta)))).collect()))
        .collect();
    beta_to_alpha(&pair.space, n, beta_hat)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OppReport {
    /// Every `α̂(η)` commutes with every `α(μ)`.
    pub commutes: bool,
    /// `|α̂(N)|`.
    pub distinct: usize,
    /// `α(N)` is regular, so a permutation commuting with it is fixed by
    /// where it sends `ē`; the centralizer has at most `|X|` elements.
    pub centralizer_bound: usize,
    /// `α̂(N)` is the whole centralizer of `α(N)`.
    pub is_centralizer: bool,
    /// `α̂(N) = α(N)` as sets.
    pub equals_alpha: bool,
}

pub fn opp_check(pair: &EmbeddingPair, twisted: &EmbeddingPair) -> OppReport {
    let commutes = twisted.alpha.iter().all(|p| pair.alpha.iter().all(|q| p.commutes_with(q)));
    let hat: HashSet<&Permutation> = twisted.alpha.iter().collect();
    let alpha: HashSet<&Permutation> = pair.alpha.iter().collect();
    let e_bar = pair.space.base_point();
    let regular = pair.alpha.iter().map(|p| p.apply(e_bar)).collect::<HashSet<_>>().len() == pair.space.size();
    let centralizer_bound = pair.space.size();
    OppReport {
        commutes,
        distinct: hat.len(),
        centralizer_bound,
        is_centralizer: commutes && regular && hat.len() == centralizer_bound,
        equals_alpha: hat == alpha,
    }
}

/// Whether `perm` is `μ ↦ ηθ(μ)` for some `η ∈ N`, `θ ∈ Aut(N)`.
pub fn is_holomorph_element(n: &FiniteGroup, perm: &Permutation) -> bool {
    let eta_inv = n.inv(perm.apply(n.identity()));
    let theta: Vec<usize> = n.elements().map(|mu| n.mul(eta_inv, perm.apply(mu))).collect();
    n.homomorphism_failure(n, &theta).is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StabilityReport {
    /// `λ_X(g) α(N) λ_X(g)⁻¹ = α(N)` for every `g`.
    pub g_stable: bool,
    /// `β(g) ∈ Hol(N)` for every `g`.
    pub in_holomorph: bool,
}

impl StabilityReport {
    pub fn agrees(&self) -> bool {
        self.g_stable == self.in_holomorph
    }
}

pub fn g_stability_check(pair: &EmbeddingPair) -> StabilityReport {
    let image: HashSet<&Permutation> = pair.alpha.iter().collect();
    let space = &pair.space;
    let g_stable = space.group().elements().all(|g| {
        let l = space.lambda(g);
        let l_inv = l.inverse();
        pair.alpha.iter().all(|p| image.contains(&l.compose(p).compose(&l_inv)))
    });
    let in_holomorph = pair.beta.iter().all(|p| is_holomorph_element(&pair.additive, p));
    StabilityReport { g_stable, in_holomorph }
}

/// The pair whose `β` is the action of a skew bracoid, on `X = G/S`.
pub fn embedding_pair_from_bracoid(b: &SkewBracoid) -> Result<EmbeddingPair> {
    let space = CosetSpace::new(b.multiplicative().clone(), b.stabilizer().clone())?;
    let beta = b.multiplicative().elements().map(|g| b.action_perm(g)).collect();
    beta_to_alpha(&space, b.additive(), beta)
}
