use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use super::{FiniteGroup, Limits};
use crate::error::{Error, Result};

/// A subgroup, stored as its sorted member list.
///
/// The parent group is not stored; every method that needs the group law
/// takes it as an argument. Subgroups order canonically by size, then
/// lexicographically by members.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members.len().cmp(&other.members.len()).then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Subgroup {
    /// Checks that `members` is a subgroup of `group`.
    pub fn new(group: &FiniteGroup, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.iter().any(|&x| x >= group.order()) {
            return Err(Error::NotASubgroup { reason: "member out of range".into() });
        }
        let sub = Self { members };
        if !sub.contains(group.identity()) {
            return Err(Error::NotASubgroup { reason: "identity missing".into() });
        }
        for &a in &sub.members {
            if !sub.contains(group.inv(a)) {
                return Err(Error::NotASubgroup { reason: format!("inverse of {a} missing") });
            }
            for &b in &sub.members {
                if !sub.contains(group.mul(a, b)) {
                    return Err(Error::NotASubgroup { reason: format!("product of {a} and {b} missing") });
                }
            }
        }
        Ok(sub)
    }

    pub(crate) fn from_sorted_unchecked(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self { members }
    }

    pub fn generated(group: &FiniteGroup, gens: &[usize]) -> Self {
        Self { members: group.closure(gens) }
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        Self { members: vec![group.identity()] }
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Self { members: group.elements().collect() }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup { members: self.members.iter().copied().filter(|&x| other.contains(x)).collect() }
    }

    /// `g·H·g⁻¹`.
    pub fn conjugate(&self, group: &FiniteGroup, g: usize) -> Subgroup {
        let mut members: Vec<usize> = self.members.iter().map(|&x| group.conjugate(g, x)).collect();
        members.sort_unstable();
        Subgroup { members }
    }

    pub fn is_normal_in(&self, group: &FiniteGroup) -> bool {
        group
            .elements()
            .all(|g| self.members.iter().all(|&x| self.contains(group.conjugate(g, x))))
    }

    /// The set product `H·K`, sorted; a subgroup only when `HK = KH`.
    pub fn product_set(&self, group: &FiniteGroup, other: &Subgroup) -> Vec<usize> {
        let set: BTreeSet<usize> = self
            .members
            .iter()
            .flat_map(|&h| other.members.iter().map(move |&k| group.mul(h, k)))
            .collect();
        set.into_iter().collect()
    }

    /// Whether `self` and `other` give an exact factorisation of `group`.
    pub fn is_complement_of(&self, group: &FiniteGroup, other: &Subgroup) -> bool {
        self.order() * other.order() == group.order() && self.intersection(other).is_trivial()
    }

    /// The subgroup as a standalone group. Member `i` of the subgroup
    /// becomes element `i`; the returned vector maps back into the parent.
    pub fn to_group(&self, group: &FiniteGroup) -> (FiniteGroup, Vec<usize>) {
        let n = self.order();
        let mut table = vec![0; n * n];
        for (i, &a) in self.members.iter().enumerate() {
            for (j, &b) in self.members.iter().enumerate() {
                table[i * n + j] = self.index_of(group.mul(a, b)).expect("subgroup is closed");
            }
        }
        let labels = group.labels().map(|l| self.members.iter().map(|&x| l[x].clone()).collect());
        (FiniteGroup::from_trusted(n, table, labels), self.members.clone())
    }

    /// Position of `x` in the sorted member list.
    pub fn index_of(&self, x: usize) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }
}

/// True iff `gHg⁻¹ = H` for every `g`.
pub fn is_normal(group: &FiniteGroup, h: &Subgroup) -> bool {
    h.is_normal_in(group)
}

/// Every subgroup of `group`, canonically sorted.
///
/// Subgroups are found by repeatedly adjoining one element to an already
/// known subgroup and closing; every subgroup is reached this way starting
/// from the trivial one.
pub fn all_subgroups(group: &FiniteGroup, limits: &Limits) -> Result<Vec<Subgroup>> {
    all_subgroups_with_cap(group, limits.order_cap)
}

pub(crate) fn all_subgroups_with_cap(group: &FiniteGroup, cap: usize) -> Result<Vec<Subgroup>> {
    if group.order() > cap {
        return Err(Error::OrderCapExceeded { order: group.order(), cap });
    }
    let trivial = Subgroup::trivial(group);
    let mut seen: HashSet<Vec<usize>> = HashSet::from([trivial.members.clone()]);
    let mut found = vec![trivial];
    let mut frontier = 0;
    while frontier < found.len() {
        let current = found[frontier].clone();
        let mut inside = vec![false; group.order()];
        for &x in &current.members {
            inside[x] = true;
        }
        for g in group.elements() {
            if inside[g] {
                continue;
            }
            let mut gens = current.members.clone();
            gens.push(g);
            let members = group.closure(&gens);
            if seen.insert(members.clone()) {
                found.push(Subgroup { members });
            }
        }
        frontier += 1;
    }
    found.sort();
    Ok(found)
}

/// A complement `H` to a subgroup `S` (`|H|·|S| = |G|`, `H ∩ S = {e}`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complement {
    pub subgroup: Subgroup,
    pub is_normal: bool,
}

/// All complements to `s` in `group`, canonically sorted.
pub fn complements(group: &FiniteGroup, s: &Subgroup, limits: &Limits) -> Result<Vec<Complement>> {
    if !group.order().is_multiple_of(s.order()) {
        return Ok(Vec::new());
    }
    let target = group.order() / s.order();
    Ok(all_subgroups(group, limits)?
        .into_iter()
        .filter(|h| h.order() == target && h.intersection(s).is_trivial())
        .map(|h| {
            let is_normal = h.is_normal_in(group);
            Complement { subgroup: h, is_normal }
        })
        .collect())
}

/// Subgroups partitioned into conjugacy classes. Classes are ordered by
/// their least member; members within a class are canonically sorted.
pub fn conjugacy_classes_of_subgroups(group: &FiniteGroup, limits: &Limits) -> Result<Vec<Vec<Subgroup>>> {
    let subgroups = all_subgroups(group, limits)?;
    Ok(partition_by_conjugation(group, subgroups))
}

pub(crate) fn partition_by_conjugation(group: &FiniteGroup, subgroups: Vec<Subgroup>) -> Vec<Vec<Subgroup>> {
    let mut assigned: HashSet<Vec<usize>> = HashSet::new();
    let mut classes = Vec::new();
    for h in &subgroups {
        if assigned.contains(&h.members) {
            continue;
        }
        let class: BTreeSet<Subgroup> = group.elements().map(|g| h.conjugate(group, g)).collect();
        for c in &class {
            assigned.insert(c.members.clone());
        }
        classes.push(class.into_iter().collect::<Vec<_>>());
    }
    classes
}

/// `G/K` for a normal subgroup `K`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// Coset index of each element of the parent.
    pub projection: Vec<usize>,
    /// Cosets, ordered by least element.
    pub cosets: Vec<Vec<usize>>,
}

pub fn quotient(group: &FiniteGroup, k: &Subgroup) -> Result<Quotient> {
    if !k.is_normal_in(group) {
        return Err(Error::NotASubgroup { reason: "quotient by a non-normal subgroup".into() });
    }
    let (cosets, projection) = left_cosets(group, k);
    let m = cosets.len();
    let mut table = vec![0; m * m];
    for (i, ci) in cosets.iter().enumerate() {
        for (j, cj) in cosets.iter().enumerate() {
            table[i * m + j] = projection[group.mul(ci[0], cj[0])];
        }
    }
    let labels = group.labels().map(|l| {
        cosets
            .iter()
            .map(|c| if k.is_trivial() { l[c[0]].clone() } else { format!("[{}]", l[c[0]]) })
            .collect()
    });
    Ok(Quotient { group: FiniteGroup::from_trusted(m, table, labels), projection, cosets })
}

/// Left cosets `gK`, ordered by least element, and the coset index of each
/// element.
pub fn left_cosets(group: &FiniteGroup, k: &Subgroup) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut projection = vec![usize::MAX; group.order()];
    let mut cosets = Vec::new();
    for g in group.elements() {
        if projection[g] != usize::MAX {
            continue;
        }
        let mut coset: Vec<usize> = k.members().iter().map(|&x| group.mul(g, x)).collect();
        coset.sort_unstable();
        for &x in &coset {
            projection[x] = cosets.len();
        }
        cosets.push(coset);
    }
    (cosets, projection)
}
