//! Finite groups given by dense Cayley tables.
//!
//! Elements are the indices `0..order`. Every constructor in this module
//! produces a group whose identity is element `0`; groups read from an
//! arbitrary Cayley table keep whatever identity the table has.

mod holomorph;
mod morphism;
mod perm;
pub(crate) mod subgroup;

pub use holomorph::{automorphism_group, automorphisms_as_group, holomorph, Automorphism, HolomorphGroup};
pub use morphism::{find_isomorphism, find_isomorphism_with, generating_set, is_isomorphic, order_profile};
pub use perm::Permutation;
pub use subgroup::{
    all_subgroups, complements, conjugacy_classes_of_subgroups, is_normal, left_cosets, quotient, Complement,
    Quotient, Subgroup,
};

use crate::error::{Error, Result, TableLine};

/// Upper bound for subgroup enumeration and automorphism search unless the
/// caller raises it.
pub const DEFAULT_ORDER_CAP: usize = 64;
/// Upper bound for holomorph orders.
pub const DEFAULT_HOL_CAP: usize = 1344;

/// Search limits shared by the enumeration routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub order_cap: usize,
    pub hol_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { order_cap: DEFAULT_ORDER_CAP, hol_cap: DEFAULT_HOL_CAP }
    }
}

impl Limits {
    pub fn check_order(&self, order: usize) -> Result<()> {
        if order > self.order_cap {
            Err(Error::OrderCapExceeded { order, cap: self.order_cap })
        } else {
            Ok(())
        }
    }

    pub fn check_hol(&self, order: usize) -> Result<()> {
        if order > self.hol_cap {
            Err(Error::OrderCapExceeded { order, cap: self.hol_cap })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates a Cayley table (`table[a][b] = a·b`).
    ///
    /// Checks run in the order shape, Latin square, identity, inverses,
    /// associativity; the first failure is reported with its witness.
    pub fn from_cayley_table(rows: Vec<Vec<usize>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != order {
                return Err(Error::NotSquare { row, len: r.len(), expected: order });
            }
            if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= order) {
                return Err(Error::EntryOutOfRange { row, col, value });
            }
        }
        let table: Vec<usize> = rows.into_iter().flatten().collect();
        Self::from_flat(order, table, None, true)
    }

    /// Builds a group from a flat table that is known to come from a group
    /// law. Latin square, identity and inverses are still checked; the cubic
    /// associativity scan only runs in debug builds for small orders.
    pub(crate) fn from_trusted(order: usize, table: Vec<usize>, labels: Option<Vec<String>>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let check_assoc = cfg!(debug_assertions) && order <= DEFAULT_ORDER_CAP;
        match Self::from_flat(order, table, labels, check_assoc) {
            Ok(g) => g,
            Err(e) => panic!("internal group construction produced an invalid table: {e}"),
        }
    }

    fn from_flat(
        order: usize,
        table: Vec<usize>,
        labels: Option<Vec<String>>,
        check_assoc: bool,
    ) -> Result<Self> {
        let mut seen = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                let v = table[a * order + b];
                if seen[v] == a {
                    return Err(Error::NotLatinSquare { line: TableLine::Row, index: a, value: v });
                }
                seen[v] = a;
            }
        }
        seen.fill(usize::MAX);
        for b in 0..order {
            for a in 0..order {
                let v = table[a * order + b];
                if seen[v] == b {
                    return Err(Error::NotLatinSquare { line: TableLine::Column, index: b, value: v });
                }
                seen[v] = b;
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| table[e * order + a] == a && table[a * order + e] == a))
            .ok_or(Error::NoIdentity)?;
        let mut inverse = vec![0; order];
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| table[a * order + b] == identity)
                .filter(|&b| table[b * order + a] == identity)
                .ok_or(Error::NoInverse { element: a })?;
            inverse[a] = inv;
        }
        let group = Self { order, table, identity, inverse, labels };
        if check_assoc {
            group.check_associativity()?;
        }
        Ok(group)
    }

    /// Exhaustive associativity scan.
    pub fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::Shape(format!(
                "{} labels for a group of order {}",
                labels.len(),
                self.order
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        Self::from_trusted(1, vec![0], Some(vec!["e".into()]))
    }

    /// Closes a set of permutations under composition. Elements are sorted
    /// lexicographically by image array, so the identity is element `0`.
    /// The product is `a·b = a ∘ b`.
    pub fn from_permutations(generators: &[Permutation], degree: usize) -> (Self, Vec<Permutation>) {
        let mut elements = vec![Permutation::identity(degree)];
        let mut index: std::collections::HashMap<Permutation, usize> =
            std::collections::HashMap::from([(Permutation::identity(degree), 0)]);
        let mut frontier = 0;
        while frontier < elements.len() {
            let current = elements[frontier].clone();
            for gen in generators {
                let next = current.compose(gen);
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            frontier += 1;
        }
        elements.sort();
        let index: std::collections::HashMap<&Permutation, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let order = elements.len();
        let mut table = vec![0; order * order];
        for a in 0..order {
            for b in 0..order {
                table[a * order + b] = index[&elements[a].compose(&elements[b])];
            }
        }
        (Self::from_trusted(order, table, None), elements)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g·a·g⁻¹`.
    pub fn conjugate(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut result = self.identity;
        for _ in 0..k.unsigned_abs() {
            result = self.mul(result, base);
        }
        result
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// Left multiplication by `g` as a permutation of the elements.
    pub fn left_translation(&self, g: usize) -> Permutation {
        Permutation::from_images_unchecked((0..self.order).map(|x| self.mul(g, x)).collect())
    }

    /// Sorted subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        inside[self.identity] = true;
        let mut members = vec![self.identity];
        let mut frontier = 0;
        while frontier < members.len() {
            let x = members[frontier];
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                }
            }
            frontier += 1;
        }
        members.sort_unstable();
        members
    }

    /// Whether `map` (indexed by elements of `self`) is a homomorphism into
    /// `target`; returns the first failing pair otherwise.
    pub fn homomorphism_failure(&self, target: &FiniteGroup, map: &[usize]) -> Option<(usize, usize)> {
        for a in 0..self.order {
            for b in 0..self.order {
                if map[self.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Some((a, b));
                }
            }
        }
        None
    }
}

fn power_label(symbol: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => symbol.to_string(),
        _ => format!("{symbol}^{k}"),
    }
}

fn join_label(parts: &[String]) -> String {
    let s: String = parts.concat();
    if s.is_empty() {
        "e".to_string()
    } else {
        s
    }
}

/// Cyclic group of order `d` with generator labelled `η`; element `i` is `ηⁱ`.
pub fn cyclic(d: usize) -> FiniteGroup {
    cyclic_named(d, "η")
}

/// Cyclic group of order `d` with a custom generator symbol.
pub fn cyclic_named(d: usize, symbol: &str) -> FiniteGroup {
    assert!(d >= 1, "cyclic group order must be positive");
    let table = (0..d).flat_map(|a| (0..d).map(move |b| (a + b) % d)).collect();
    let labels = (0..d).map(|k| join_label(&[power_label(symbol, k)])).collect();
    FiniteGroup::from_trusted(d, table, Some(labels))
}

/// Index of `rⁱsʲ` in [`dihedral`]`(n)`.
pub fn dihedral_index(n: usize, i: i64, j: i64) -> usize {
    let i = i.rem_euclid(n as i64) as usize;
    let j = j.rem_euclid(2) as usize;
    j * n + i
}

/// Dihedral group of order `2n`, `⟨r, s | rⁿ = s² = e, srs = r⁻¹⟩`.
///
/// Elements are ordered `r⁰, …, rⁿ⁻¹, s, rs, …, rⁿ⁻¹s`.
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 1, "dihedral group parameter must be positive");
    let order = 2 * n;
    let mut table = vec![0; order * order];
    for a in 0..order {
        let (i, j) = ((a % n) as i64, (a / n) as i64);
        for b in 0..order {
            let (k, l) = ((b % n) as i64, (b / n) as i64);
            // rⁱsʲ · rᵏsˡ = r^{i + (-1)^j k} s^{j+l}
            let sign = if j == 0 { 1 } else { -1 };
            table[a * order + b] = dihedral_index(n, i + sign * k, j + l);
        }
    }
    let labels = (0..order)
        .map(|a| {
            let (i, j) = (a % n, a / n);
            join_label(&[power_label("r", i), power_label("s", j)])
        })
        .collect();
    FiniteGroup::from_trusted(order, table, Some(labels))
}

/// External direct product; the pair `(a, b)` has index `a·|B| + b`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let (na, nb) = (a.order(), b.order());
    let order = na * nb;
    let mut table = vec![0; order * order];
    for x in 0..order {
        for y in 0..order {
            let (x1, x2) = (x / nb, x % nb);
            let (y1, y2) = (y / nb, y % nb);
            table[x * order + y] = a.mul(x1, y1) * nb + b.mul(x2, y2);
        }
    }
    let labels = product_labels(a, b);
    FiniteGroup::from_trusted(order, table, labels)
}

fn product_labels(a: &FiniteGroup, b: &FiniteGroup) -> Option<Vec<String>> {
    let (la, lb) = (a.labels()?, b.labels()?);
    let strip = |s: &str| if s == "e" { String::new() } else { s.to_string() };
    Some(
        la.iter()
            .flat_map(|x| lb.iter().map(move |y| join_label(&[strip(x), strip(y)])))
            .collect(),
    )
}

/// Semidirect product `H ⋊ S` where `action[s]` is the automorphism of `H`
/// by which `s` acts. The pair `(h, s)` has index `h·|S| + s` and
/// `(h₁,s₁)(h₂,s₂) = (h₁·action(s₁)(h₂), s₁s₂)`.
pub fn semidirect_product(h: &FiniteGroup, s: &FiniteGroup, action: &[Vec<usize>]) -> Result<FiniteGroup> {
    if action.len() != s.order() || action.iter().any(|a| a.len() != h.order()) {
        return Err(Error::Shape("action must give one map of H per element of S".into()));
    }
    for (si, phi) in action.iter().enumerate() {
        if Permutation::new(phi.clone()).is_err() || h.homomorphism_failure(h, phi).is_some() {
            return Err(Error::NotAnAutomorphism { element: si });
        }
    }
    for s1 in 0..s.order() {
        for s2 in 0..s.order() {
            let composed: Vec<usize> = (0..h.order()).map(|x| action[s1][action[s2][x]]).collect();
            if composed != action[s.mul(s1, s2)] {
                return Err(Error::NotAHomomorphism { a: s1, b: s2 });
            }
        }
    }
    let (nh, ns) = (h.order(), s.order());
    let order = nh * ns;
    let mut table = vec![0; order * order];
    for x in 0..order {
        let (h1, s1) = (x / ns, x % ns);
        for y in 0..order {
            let (h2, s2) = (y / ns, y % ns);
            table[x * order + y] = h.mul(h1, action[s1][h2]) * ns + s.mul(s1, s2);
        }
    }
    Ok(FiniteGroup::from_trusted(order, table, product_labels(h, s)))
}
