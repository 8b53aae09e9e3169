//! The skew bracoid type and its structural invariants.

use crate::error::{Error, Result};
use crate::groups::{all_subgroups, complements, is_isomorphic, quotient, FiniteGroup, Limits, Permutation, Subgroup};

/// A validated skew bracoid `(G, N, ⊙)`.
///
/// `action[g][η] = g⊙η`. The stabilizer `S = Stab_G(e_N)` and the kernel
/// `K` of the action are computed at validation time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewBracoid {
    multiplicative: FiniteGroup,
    additive: FiniteGroup,
    action: Vec<Vec<usize>>,
    stabilizer: Subgroup,
    kernel: Subgroup,
}

impl SkewBracoid {
    /// Checks every axiom exhaustively: `⊙` is a group action, it is
    /// transitive on `N`, and the bracoid relation holds for all
    /// `|G|·|N|²` triples.
    pub fn validate(multiplicative: FiniteGroup, additive: FiniteGroup, action: Vec<Vec<usize>>) -> Result<Self> {
        let (g, n) = (&multiplicative, &additive);
        if action.len() != g.order() {
            return Err(Error::Shape(format!("action has {} rows, expected {}", action.len(), g.order())));
        }
        for (row, r) in action.iter().enumerate() {
            if r.len() != n.order() {
                return Err(Error::Shape(format!("action row {row} has length {}", r.len())));
            }
            if let Err(e) = Permutation::new(r.clone()) {
                return Err(Error::Shape(format!("action row {row}: {e}")));
            }
        }
        let e_g = g.identity();
        if let Some(point) = n.elements().find(|&x| action[e_g][x] != x) {
            return Err(Error::NotAnAction { g1: e_g, g2: e_g, point });
        }
        for g1 in g.elements() {
            for g2 in g.elements() {
                let prod = &action[g.mul(g1, g2)];
                if let Some(point) = n.elements().find(|&x| prod[x] != action[g1][action[g2][x]]) {
                    return Err(Error::NotAnAction { g1, g2, point });
                }
            }
        }
        let e_n = n.identity();
        let mut reached = vec![false; n.order()];
        for x in g.elements() {
            reached[action[x][e_n]] = true;
        }
        let orbit_size = reached.iter().filter(|&&r| r).count();
        if orbit_size != n.order() {
            return Err(Error::NotTransitive { orbit_size, total: n.order() });
        }
        for x in g.elements() {
            let row = &action[x];
            let base_inv = n.inv(row[e_n]);
            for eta1 in n.elements() {
                let left = n.mul(row[eta1], base_inv);
                for eta2 in n.elements() {
                    if row[n.mul(eta1, eta2)] != n.mul(left, row[eta2]) {
                        return Err(Error::BracoidRelationFails { g: x, eta1, eta2 });
                    }
                }
            }
        }
        let stabilizer =
            Subgroup::from_sorted_unchecked(g.elements().filter(|&x| action[x][e_n] == e_n).collect());
        let kernel = Subgroup::from_sorted_unchecked(
            g.elements().filter(|&x| action[x].iter().enumerate().all(|(i, &y)| i == y)).collect(),
        );
        Ok(Self { multiplicative, additive, action, stabilizer, kernel })
    }

    pub fn multiplicative(&self) -> &FiniteGroup {
        &self.multiplicative
    }

    pub fn additive(&self) -> &FiniteGroup {
        &self.additive
    }

    pub fn action_table(&self) -> &[Vec<usize>] {
        &self.action
    }

    /// `g⊙η`.
    #[inline]
    pub fn act(&self, g: usize, eta: usize) -> usize {
        self.action[g][eta]
    }

    /// `g⊙e_N`.
    #[inline]
    pub fn orbit_point(&self, g: usize) -> usize {
        self.action[g][self.additive.identity()]
    }

    pub fn action_perm(&self, g: usize) -> Permutation {
        Permutation::from_images_unchecked(self.action[g].clone())
    }

    /// `S = Stab_G(e_N)`.
    pub fn stabilizer(&self) -> &Subgroup {
        &self.stabilizer
    }

    /// `K`, the kernel of the action.
    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    /// The action is faithful.
    pub fn is_reduced(&self) -> bool {
        self.kernel.is_trivial()
    }

    /// `S` is trivial.
    pub fn is_essentially_brace(&self) -> bool {
        self.stabilizer.is_trivial()
    }

    /// `γ(g)(η) = (g⊙e_N)⁻¹★(g⊙η)`, with every `γ(g)` checked to be an
    /// automorphism of `N` and `g ↦ γ(g)` checked to be a homomorphism.
    pub fn gamma(&self) -> Result<GammaMap> {
        let n = &self.additive;
        let maps: Vec<Permutation> = self
            .multiplicative
            .elements()
            .map(|g| {
                let base_inv = n.inv(self.orbit_point(g));
                Permutation::from_images_unchecked(n.elements().map(|x| n.mul(base_inv, self.act(g, x))).collect())
            })
            .collect();
        for (g, m) in maps.iter().enumerate() {
            if n.homomorphism_failure(n, m.images()).is_some() {
                return Err(Error::GammaNotAutomorphism { element: g });
            }
        }
        let g = &self.multiplicative;
        for g1 in g.elements() {
            for g2 in g.elements() {
                if maps[g.mul(g1, g2)] != maps[g1].compose(&maps[g2]) {
                    return Err(Error::GammaNotHomomorphism { g1, g2 });
                }
            }
        }
        Ok(GammaMap { maps })
    }

    /// `(h₁⊙e_N)★(h₂⊙e_N) = h₁h₂⊙e_N` for all `h₁, h₂` in `h`.
    pub fn orbit_map_is_multiplicative_on(&self, h: &Subgroup) -> bool {
        let (g, n) = (&self.multiplicative, &self.additive);
        h.members().iter().all(|&h1| {
            h.members()
                .iter()
                .all(|&h2| n.mul(self.orbit_point(h1), self.orbit_point(h2)) == self.orbit_point(g.mul(h1, h2)))
        })
    }

    /// Whether `h` is a complement to the stabilizer.
    pub fn is_complement(&self, h: &Subgroup) -> bool {
        Subgroup::new(&self.multiplicative, h.members().to_vec()).is_ok()
            && h.is_complement_of(&self.multiplicative, &self.stabilizer)
    }

    pub fn require_complement(&self, h: &Subgroup) -> Result<()> {
        if self.is_complement(h) {
            Ok(())
        } else {
            Err(Error::NotAComplement { members: h.members().to_vec() })
        }
    }

    pub fn require_almost_brace(&self, h: &Subgroup) -> Result<()> {
        if self.is_complement(h) && h.is_normal_in(&self.multiplicative) {
            Ok(())
        } else {
            Err(Error::NotAlmostABrace { members: h.members().to_vec() })
        }
    }

    pub fn require_almost_classical(&self, h: &Subgroup) -> Result<()> {
        if self.is_complement(h) && h.is_normal_in(&self.multiplicative) && self.orbit_map_is_multiplicative_on(h) {
            Ok(())
        } else {
            Err(Error::NotAlmostClassical { members: h.members().to_vec() })
        }
    }

    /// Finds every complement to `S` and sorts them into the three classes.
    pub fn classify(&self, limits: &Limits) -> Result<Classification> {
        let gamma = self.gamma()?;
        let g = &self.multiplicative;
        let mut reports = Vec::new();
        for c in complements(g, &self.stabilizer, limits)? {
            let h = c.subgroup;
            let multiplicative_orbit = self.orbit_map_is_multiplicative_on(&h);
            let in_gamma_kernel = h.members().iter().all(|&x| gamma.get(x).is_identity());
            if c.is_normal && multiplicative_orbit != in_gamma_kernel {
                return Err(Error::Internal(format!(
                    "orbit-product and gamma-kernel criteria disagree on {:?}",
                    h.members()
                )));
            }
            let (hg, _) = h.to_group(g);
            let isomorphic_to_additive = is_isomorphic(&hg, &self.additive);
            reports.push(ComplementReport {
                subgroup: h,
                is_normal: c.is_normal,
                trivial_as_brace: multiplicative_orbit,
                in_gamma_kernel,
                isomorphic_to_additive,
            });
        }
        let essentially_brace = self.is_essentially_brace();
        let essentially_trivial =
            essentially_brace && self.orbit_map_is_multiplicative_on(&Subgroup::whole(g));
        Ok(Classification { stabilizer: self.stabilizer.clone(), complements: reports, essentially_brace, essentially_trivial })
    }

    /// `(G/K, N)` with the induced action.
    pub fn reduced_form(&self) -> Result<ReducedForm> {
        let q = quotient(&self.multiplicative, &self.kernel)?;
        let action = q.cosets.iter().map(|c| self.action[c[0]].clone()).collect();
        let bracoid = SkewBracoid::validate(q.group, self.additive.clone(), action)?;
        Ok(ReducedForm { bracoid, projection: q.projection })
    }

    /// The sub-bracoid `(H, N)` for a complement `H`, which is essentially a
    /// skew brace.
    pub fn to_skew_brace(&self, h: &Subgroup) -> Result<BraceView> {
        self.require_complement(h)?;
        let (hg, embedding) = h.to_group(&self.multiplicative);
        let action = embedding.iter().map(|&x| self.action[x].clone()).collect();
        let bracoid = SkewBracoid::validate(hg, self.additive.clone(), action)?;
        let trivial = self.orbit_map_is_multiplicative_on(h);
        Ok(BraceView { bracoid, embedding, trivial })
    }

    /// A `★`-subgroup of `N` closed under every `γ(g)`.
    pub fn is_left_ideal(&self, subset: &[usize]) -> Result<bool> {
        let gamma = self.gamma()?;
        Ok(self.is_left_ideal_with(&gamma, subset))
    }

    fn is_left_ideal_with(&self, gamma: &GammaMap, subset: &[usize]) -> bool {
        let Ok(sub) = Subgroup::new(&self.additive, subset.to_vec()) else {
            return false;
        };
        if sub.order() != subset.len() {
            // duplicates in the input
            return false;
        }
        gamma.maps.iter().all(|m| sub.members().iter().all(|&x| sub.contains(m.apply(x))))
    }

    /// For every subgroup `G' ⊇ S`, the orbit `G'⊙e_N` and whether it is a
    /// left ideal.
    pub fn left_ideals_over_stabilizer(&self, limits: &Limits) -> Result<Vec<LeftIdealRecord>> {
        let gamma = self.gamma()?;
        Ok(all_subgroups(&self.multiplicative, limits)?
            .into_iter()
            .filter(|gp| self.stabilizer.is_subset_of(gp))
            .map(|gp| {
                let mut orbit: Vec<usize> = gp.members().iter().map(|&x| self.orbit_point(x)).collect();
                orbit.sort_unstable();
                orbit.dedup();
                let is_left_ideal = self.is_left_ideal_with(&gamma, &orbit);
                LeftIdealRecord { overgroup: gp, orbit, is_left_ideal }
            })
            .collect())
    }
}

/// `γ(g)` for every `g`, as permutations of `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaMap {
    maps: Vec<Permutation>,
}

impl GammaMap {
    pub fn get(&self, g: usize) -> &Permutation {
        &self.maps[g]
    }

    #[inline]
    pub fn apply(&self, g: usize, eta: usize) -> usize {
        self.maps[g].apply(eta)
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// `{g : γ(g) = id}`.
    pub fn kernel(&self) -> Vec<usize> {
        (0..self.maps.len()).filter(|&g| self.maps[g].is_identity()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementReport {
    pub subgroup: Subgroup,
    pub is_normal: bool,
    /// `(h₁⊙e_N)★(h₂⊙e_N) = h₁h₂⊙e_N` on the complement.
    pub trivial_as_brace: bool,
    /// `γ(h) = id` for every `h` in the complement.
    pub in_gamma_kernel: bool,
    pub isomorphic_to_additive: bool,
}

impl ComplementReport {
    pub fn is_almost_brace(&self) -> bool {
        self.is_normal
    }

    pub fn is_almost_classical(&self) -> bool {
        self.is_normal && self.trivial_as_brace
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub stabilizer: Subgroup,
    /// Every complement to the stabilizer, canonically sorted.
    pub complements: Vec<ComplementReport>,
    pub essentially_brace: bool,
    pub essentially_trivial: bool,
}

impl Classification {
    pub fn contains_brace(&self) -> Vec<&Subgroup> {
        self.complements.iter().map(|c| &c.subgroup).collect()
    }

    pub fn almost_brace(&self) -> Vec<&Subgroup> {
        self.complements.iter().filter(|c| c.is_almost_brace()).map(|c| &c.subgroup).collect()
    }

    pub fn almost_classical(&self) -> Vec<&Subgroup> {
        self.complements.iter().filter(|c| c.is_almost_classical()).map(|c| &c.subgroup).collect()
    }

    pub fn report(&self, h: &Subgroup) -> Option<&ComplementReport> {
        self.complements.iter().find(|c| &c.subgroup == h)
    }
}

#[derive(Debug, Clone)]
pub struct ReducedForm {
    pub bracoid: SkewBracoid,
    /// Index in `G/K` of each element of `G`.
    pub projection: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct BraceView {
    /// `(H, N)` with the restricted action.
    pub bracoid: SkewBracoid,
    /// Element `i` of the bracoid's multiplicative group is `embedding[i]` in `G`.
    pub embedding: Vec<usize>,
    /// The brace is trivial: `h ↦ h⊙e_N` is a group isomorphism.
    pub trivial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftIdealRecord {
    pub overgroup: Subgroup,
    pub orbit: Vec<usize>,
    pub is_left_ideal: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, dihedral, dihedral_index};

    fn left_regular(g: &FiniteGroup) -> Vec<Vec<usize>> {
        g.elements().map(|x| g.elements().map(|y| g.mul(x, y)).collect()).collect()
    }

    fn family_action(n: usize, d: usize) -> Vec<Vec<usize>> {
        (0..2 * n)
            .map(|x| {
                let (i, j) = ((x % n) as i64, (x / n) as i64);
                let sign = if j == 0 { 1 } else { -1 };
                (0..d as i64).map(|k| (i + sign * k).rem_euclid(d as i64) as usize).collect()
            })
            .collect()
    }

    #[test]
    fn group_as_its_own_bracoid() {
        for g in [cyclic(6), dihedral(4)] {
            let b = SkewBracoid::validate(g.clone(), g.clone(), left_regular(&g)).unwrap();
            assert!(b.is_essentially_brace());
            assert!(b.gamma().unwrap().kernel().len() == g.order());
        }
    }

    #[test]
    fn family_validates() {
        for (n, d) in [(3, 3), (4, 2), (12, 4), (9, 3), (6, 1)] {
            let b = SkewBracoid::validate(dihedral(n), cyclic(d), family_action(n, d)).unwrap();
            let s = Subgroup::generated(b.multiplicative(), &[dihedral_index(n, d as i64, 0), dihedral_index(n, 0, 1)]);
            assert_eq!(b.stabilizer(), &s);
        }
    }

    #[test]
    fn corrupted_tables_are_rejected() {
        let mut action = family_action(4, 4);
        action[1].swap(1, 2);
        let err = SkewBracoid::validate(dihedral(4), cyclic(4), action).unwrap_err();
        assert!(
            matches!(err, Error::NotAnAction { .. } | Error::BracoidRelationFails { .. }),
            "{err:?}"
        );
    }

    #[test]
    fn non_transitive_action_is_rejected() {
        let action = vec![vec![0, 1, 2, 3], vec![0, 2, 1, 3]];
        let err = SkewBracoid::validate(cyclic(2), cyclic(4), action).unwrap_err();
        assert_eq!(err, Error::NotTransitive { orbit_size: 1, total: 4 });
    }

    #[test]
    fn bracoid_relation_witness() {
        // C4 acting regularly on C4 through the 4-cycle (0 1 3 2), which is
        // not a translation of C4.
        let cycle = [1, 3, 0, 2];
        let mut action = vec![vec![0, 1, 2, 3]];
        for _ in 1..4 {
            let prev: &Vec<usize> = action.last().unwrap();
            action.push(prev.iter().map(|&x| cycle[x]).collect());
        }
        let err = SkewBracoid::validate(cyclic(4), cyclic(4), action).unwrap_err();
        assert!(matches!(err, Error::BracoidRelationFails { .. }), "{err:?}");
    }

    #[test]
    fn gamma_of_reduced_family_is_inversion_power() {
        let n = 5;
        let b = SkewBracoid::validate(dihedral(n), cyclic(n), family_action(n, n)).unwrap();
        let gamma = b.gamma().unwrap();
        for x in 0..2 * n {
            let j = x / n;
            for k in 0..n {
                let expected = if j == 0 { k } else { (n - k) % n };
                assert_eq!(gamma.apply(x, k), expected);
            }
        }
    }

    #[test]
    fn degenerate_additive_group() {
        let g = dihedral(3);
        let b = SkewBracoid::validate(g.clone(), FiniteGroup::trivial(), vec![vec![0]; 6]).unwrap();
        assert_eq!(b.stabilizer().order(), 6);
        let c = b.classify(&Limits::default()).unwrap();
        assert_eq!(c.almost_classical(), vec![&Subgroup::trivial(&g)]);
        assert!(!b.is_reduced());
        assert_eq!(b.reduced_form().unwrap().bracoid.multiplicative().order(), 1);
    }

    #[test]
    fn left_ideal_trivial_cases() {
        let b = SkewBracoid::validate(dihedral(6), cyclic(6), family_action(6, 6)).unwrap();
        assert!(b.is_left_ideal(&[0]).unwrap());
        assert!(b.is_left_ideal(&(0..6).collect::<Vec<_>>()).unwrap());
        assert!(!b.is_left_ideal(&[0, 1]).unwrap());
    }

    #[test]
    fn to_skew_brace_rejects_non_complements() {
        let b = SkewBracoid::validate(dihedral(4), cyclic(4), family_action(4, 4)).unwrap();
        let g = b.multiplicative();
        let s = Subgroup::generated(g, &[dihedral_index(4, 0, 1)]);
        assert!(matches!(b.to_skew_brace(&s).unwrap_err(), Error::NotAComplement { .. }));
    }
}
