use std::collections::HashMap;
use std::ops::ControlFlow;

use super::morphism::for_each_embedding;
use super::{FiniteGroup, Limits, Permutation, Subgroup};
use crate::error::{Error, Result};

/// An automorphism of a fixed group, as a permutation of its elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    perm: Permutation,
}

impl Automorphism {
    pub fn new(group: &FiniteGroup, images: Vec<usize>) -> Result<Self> {
        if images.len() != group.order() {
            return Err(Error::Shape("automorphism must map every element".into()));
        }
        let perm = Permutation::new(images)?;
        if let Some((a, b)) = group.homomorphism_failure(group, perm.images()) {
            return Err(Error::NotAHomomorphism { a, b });
        }
        Ok(Self { perm })
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        Self { perm: Permutation::identity(group.order()) }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.perm.apply(x)
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn images(&self) -> &[usize] {
        self.perm.images()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism { perm: self.perm.compose(&other.perm) }
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism { perm: self.perm.inverse() }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }
}

/// Every automorphism of `group`, sorted lexicographically by image array
/// (so the identity comes first).
pub fn automorphism_group(group: &FiniteGroup, limits: &Limits) -> Result<Vec<Automorphism>> {
    limits.check_order(group.order())?;
    let mut auts = Vec::new();
    for_each_embedding::<()>(group, group, |map| {
        auts.push(Automorphism { perm: Permutation::from_images_unchecked(map.to_vec()) });
        ControlFlow::Continue(())
    });
    auts.sort();
    Ok(auts)
}

/// The automorphisms as an abstract group under composition; element `i`
/// is `auts[i]`. `auts` must be closed under composition.
pub fn automorphisms_as_group(auts: &[Automorphism]) -> Result<FiniteGroup> {
    let index: HashMap<&Automorphism, usize> = auts.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let m = auts.len();
    let mut table = vec![0; m * m];
    for (i, a) in auts.iter().enumerate() {
        for (j, b) in auts.iter().enumerate() {
            table[i * m + j] = *index
                .get(&a.compose(b))
                .ok_or_else(|| Error::Internal("automorphism list is not closed".into()))?;
        }
    }
    let rows = table.chunks(m).map(|r| r.to_vec()).collect();
    FiniteGroup::from_cayley_table(rows)
}

/// `Hol(N) = N ⋊ Aut(N)`.
///
/// The pair `(η, θ)` has index `η·|Aut(N)| + θ`, where `θ` indexes the
/// canonically sorted automorphism list. The product is
/// `(η₁,θ₁)(η₂,θ₂) = (η₁θ₁(η₂), θ₁θ₂)` and the natural action on `N` is
/// `(η,θ)μ = ηθ(μ)`.
#[derive(Debug, Clone)]
pub struct HolomorphGroup {
    base: FiniteGroup,
    automorphisms: Vec<Automorphism>,
    aut_index: HashMap<Vec<usize>, usize>,
    group: FiniteGroup,
    action: Vec<Permutation>,
}

pub fn holomorph(base: &FiniteGroup, limits: &Limits) -> Result<HolomorphGroup> {
    let automorphisms = automorphism_group(base, limits)?;
    let n = base.order();
    let a = automorphisms.len();
    limits.check_hol(n * a)?;
    let aut_group = automorphisms_as_group(&automorphisms)?;
    let order = n * a;
    let mut table = vec![0; order * order];
    for x in 0..order {
        let (eta1, th1) = (x / a, x % a);
        for y in 0..order {
            let (eta2, th2) = (y / a, y % a);
            let eta = base.mul(eta1, automorphisms[th1].apply(eta2));
            table[x * order + y] = eta * a + aut_group.mul(th1, th2);
        }
    }
    let labels = base.labels().map(|l| {
        (0..order)
            .map(|x| {
                let theta = x % a;
                if theta == 0 {
                    format!("({}, id)", l[x / a])
                } else {
                    format!("({}, θ{theta})", l[x / a])
                }
            })
            .collect()
    });
    let group = FiniteGroup::from_trusted(order, table, labels);
    let action: Vec<Permutation> = (0..order)
        .map(|x| {
            let (eta, th) = (x / a, x % a);
            Permutation::from_images_unchecked(
                (0..n).map(|mu| base.mul(eta, automorphisms[th].apply(mu))).collect(),
            )
        })
        .collect();
    let aut_index = automorphisms.iter().enumerate().map(|(i, t)| (t.images().to_vec(), i)).collect();
    let hol = HolomorphGroup { base: base.clone(), automorphisms, aut_index, group, action };
    hol.verify_action()?;
    Ok(hol)
}

impl HolomorphGroup {
    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    pub fn automorphisms(&self) -> &[Automorphism] {
        &self.automorphisms
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn index(&self, eta: usize, theta: usize) -> usize {
        eta * self.automorphisms.len() + theta
    }

    pub fn pair(&self, x: usize) -> (usize, usize) {
        (x / self.automorphisms.len(), x % self.automorphisms.len())
    }

    /// Index of the automorphism with the given image array.
    pub fn automorphism_index(&self, images: &[usize]) -> Option<usize> {
        self.aut_index.get(images).copied()
    }

    /// Element of `Hol(N)` acting on `N` as `perm`, if there is one.
    pub fn element_of_perm(&self, perm: &[usize]) -> Option<usize> {
        let base = &self.base;
        let eta = perm[base.identity()];
        let eta_inv = base.inv(eta);
        let theta: Vec<usize> = perm.iter().map(|&x| base.mul(eta_inv, x)).collect();
        self.automorphism_index(&theta).map(|t| self.index(eta, t))
    }

    /// The natural action of element `x` on `N`.
    pub fn action(&self, x: usize) -> &Permutation {
        &self.action[x]
    }

    /// Elements `(e_N, θ)`; exactly the stabilizer of `e_N`.
    pub fn pure_automorphisms(&self) -> Subgroup {
        let e = self.base.identity();
        Subgroup::from_sorted_unchecked((0..self.automorphisms.len()).map(|t| self.index(e, t)).collect())
    }

    /// Elements `(η, id)`, a copy of `N`.
    pub fn translations(&self) -> Subgroup {
        Subgroup::from_sorted_unchecked(self.base.elements().map(|eta| self.index(eta, 0)).collect())
    }

    fn verify_action(&self) -> Result<()> {
        let n = self.base.order();
        let mut faithful = std::collections::HashSet::new();
        for x in self.group.elements() {
            if !faithful.insert(self.action[x].images()) {
                return Err(Error::Internal(format!("holomorph action not faithful at {x}")));
            }
        }
        let mut reached = vec![false; n];
        for x in self.group.elements() {
            reached[self.action[x].apply(self.base.identity())] = true;
        }
        if reached.iter().any(|r| !r) {
            return Err(Error::Internal("holomorph action not transitive".into()));
        }
        // The action is a homomorphism into Perm(N).
        for x in self.group.elements() {
            for y in self.group.elements() {
                if self.action[self.group.mul(x, y)] != self.action[x].compose(&self.action[y]) {
                    return Err(Error::Internal(format!("holomorph action fails at ({x}, {y})")));
                }
            }
        }
        Ok(())
    }
}
