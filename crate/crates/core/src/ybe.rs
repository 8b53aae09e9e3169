//! Set-theoretic solutions of the Yang–Baxter equation from skew bracoids
//! that contain a brace.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::bracoid::SkewBracoid;
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, Subgroup};

/// `(G, N)` rewritten as `(G, H)`: the additive group keeps `N`'s table,
/// but element `i` is named after the unique `h ∈ H` with `h⊙e = ηᵢ`.
#[derive(Debug, Clone)]
pub struct GhForm {
    pub bracoid: SkewBracoid,
    pub complement: Subgroup,
    /// `embed[i]` is the `h ∈ H` with `h⊙e_N = i`.
    pub embed: Vec<usize>,
}

pub fn gh_form(b: &SkewBracoid, h: &Subgroup) -> Result<GhForm> {
    b.require_complement(h)?;
    let g = b.multiplicative();
    let mut embed = vec![usize::MAX; b.additive().order()];
    for &x in h.members() {
        embed[b.orbit_point(x)] = x;
    }
    let mut additive = b.additive().clone();
    if let Some(labels) = g.labels() {
        additive = additive.with_labels(embed.iter().map(|&x| labels[x].clone()).collect())?;
    }
    let bracoid = SkewBracoid::validate(g.clone(), additive, b.action_table().to_vec())?;
    Ok(GhForm { bracoid, complement: h.clone(), embed })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolutionFlags {
    pub braid_verified: bool,
    pub left_nondegenerate: bool,
    pub right_nondegenerate: bool,
}

/// A map `r: X × X → X × X` on `X = {0, …, m-1}`, written
/// `r(x, y) = (σ_x(y), τ_y(x))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionTable {
    size: usize,
    r: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
    flags: SolutionFlags,
}

impl SolutionTable {
    /// `rows[x][y] = r(x, y)`. Flags are computed here.
    pub fn new(rows: Vec<Vec<(usize, usize)>>, labels: Option<Vec<String>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::EmptyTable);
        }
        let mut r = Vec::with_capacity(size * size);
        for (x, row) in rows.into_iter().enumerate() {
            if row.len() != size {
                return Err(Error::NotSquare { row: x, len: row.len(), expected: size });
            }
            for (y, (p, q)) in row.into_iter().enumerate() {
                if p >= size || q >= size {
                    return Err(Error::EntryOutOfRange { row: x, col: y, value: p.max(q) });
                }
                r.push((p, q));
            }
        }
        if labels.as_ref().is_some_and(|l| l.len() != size) {
            return Err(Error::Shape(format!("{size} elements need {size} labels")));
        }
        Ok(Self::from_flat(size, r, labels))
    }

    fn from_flat(size: usize, r: Vec<(usize, usize)>, labels: Option<Vec<String>>) -> Self {
        let mut s = Self { size, r, labels, flags: SolutionFlags::default() };
        let (left, right) = degeneracy(&s);
        s.flags = SolutionFlags {
            braid_verified: braid_failure(&s).is_none(),
            left_nondegenerate: left,
            right_nondegenerate: right,
        };
        s
    }

    /// `r(x, y) = (y, x)`.
    pub fn flip(size: usize) -> Self {
        let r = (0..size).flat_map(|x| (0..size).map(move |y| (y, x))).collect();
        Self::from_flat(size, r, None)
    }

    /// `r(x, y) = (y, y⁻¹xy)`.
    pub fn conjugation(group: &FiniteGroup) -> Self {
        let r = group
            .elements()
            .flat_map(|x| group.elements().map(move |y| (y, group.mul(group.inv(y), group.mul(x, y)))))
            .collect();
        Self::from_flat(group.order(), r, group.labels().map(|l| l.to_vec()))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn flags(&self) -> SolutionFlags {
        self.flags
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> (usize, usize) {
        self.r[x * self.size + y]
    }

    /// `σ_x(y)`.
    pub fn sigma(&self, x: usize, y: usize) -> usize {
        self.get(x, y).0
    }

    /// `τ_y(x)`.
    pub fn tau(&self, y: usize, x: usize) -> usize {
        self.get(x, y).1
    }

    pub fn rows(&self) -> Vec<Vec<(usize, usize)>> {
        self.r.chunks(self.size).map(|c| c.to_vec()).collect()
    }

    /// `sigma_table()[x][y] = σ_x(y)`.
    pub fn sigma_table(&self) -> Vec<Vec<usize>> {
        (0..self.size).map(|x| (0..self.size).map(|y| self.sigma(x, y)).collect()).collect()
    }

    /// `tau_table()[y][x] = τ_y(x)`.
    pub fn tau_table(&self) -> Vec<Vec<usize>> {
        (0..self.size).map(|y| (0..self.size).map(|x| self.tau(y, x)).collect()).collect()
    }

    pub fn label(&self, x: usize) -> String {
        self.labels.as_ref().map_or_else(|| x.to_string(), |l| l[x].clone())
    }
}

/// `σ_{g₁}(g₂) = γ(g₁)(g₂⊙e)` read back in `H`, and
/// `τ_{g₂}(g₁) = σ_{g₁}(g₂)⁻¹g₁g₂`.
pub fn solution_from_gh(form: &GhForm) -> Result<SolutionTable> {
    let b = &form.bracoid;
    let g = b.multiplicative();
    let gamma = b.gamma()?;
    let m = g.order();
    let mut r = Vec::with_capacity(m * m);
    for x in g.elements() {
        for y in g.elements() {
            let sigma = form.embed[gamma.apply(x, b.orbit_point(y))];
            let tau = g.mul(g.inv(sigma), g.mul(x, y));
            r.push((sigma, tau));
        }
    }
    Ok(SolutionTable::from_flat(m, r, g.labels().map(|l| l.to_vec())))
}

pub fn solution_from_bracoid(b: &SkewBracoid, h: &Subgroup) -> Result<SolutionTable> {
    solution_from_gh(&gh_form(b, h)?)
}

/// Both sides of the braid relation at `(x, y, z)`.
fn braid_sides(s: &SolutionTable, x: usize, y: usize, z: usize) -> ([usize; 3], [usize; 3]) {
    // (r×id)(id×r)(r×id)
    let (a, b) = s.get(x, y);
    let (c, d) = s.get(b, z);
    let (f, g) = s.get(a, c);
    let left = [f, g, d];
    // (id×r)(r×id)(id×r)
    let (p, q) = s.get(y, z);
    let (u, v) = s.get(x, p);
    let (w, t) = s.get(v, q);
    let right = [u, w, t];
    (left, right)
}

/// First triple, in lexicographic order, where the braid relation fails.
/// Triples are checked in parallel on the current rayon pool.
pub fn braid_failure(s: &SolutionTable) -> Option<Error> {
    let m = s.size();
    (0..m * m * m).into_par_iter().find_first(|&i| {
        let (left, right) = braid_sides(s, i / (m * m), i / m % m, i % m);
        left != right
    })
    .map(|i| {
        let (x, y, z) = (i / (m * m), i / m % m, i % m);
        let (left, right) = braid_sides(s, x, y, z);
        Error::BraidRelationFails { x, y, z, left, right }
    })
}

pub fn verify_braid(s: &SolutionTable) -> Result<()> {
    braid_failure(s).map_or(Ok(()), Err)
}

fn is_bijection(m: usize, f: impl Fn(usize) -> usize) -> bool {
    let mut hit = vec![false; m];
    (0..m).all(|x| !std::mem::replace(&mut hit[f(x)], true))
}

/// `(every σ_x is bijective, every τ_y is bijective)`.
pub fn degeneracy(s: &SolutionTable) -> (bool, bool) {
    let m = s.size();
    let left = (0..m).all(|x| is_bijection(m, |y| s.sigma(x, y)));
    let right = (0..m).all(|y| is_bijection(m, |x| s.tau(y, x)));
    (left, right)
}

/// Unique factorization `g = hs` over a complement `H` to `S`.
fn factorization(g: &FiniteGroup, h: &Subgroup, s: &Subgroup) -> Vec<(usize, usize)> {
    let mut parts = vec![(usize::MAX, usize::MAX); g.order()];
    for &hh in h.members() {
        for &ss in s.members() {
            parts[g.mul(hh, ss)] = (hh, ss);
        }
    }
    parts
}

/// `r(h₁s₁, h₂s₂) = (s₁h₂s₁⁻¹, s₁h₂⁻¹s₁⁻¹h₁s₁h₂s₂)` for `G = H ⋊ S`, with `S`
/// the stabilizer of `b`.
pub fn almost_classical_solution(b: &SkewBracoid, h: &Subgroup) -> Result<SolutionTable> {
    b.require_almost_classical(h)?;
    let g = b.multiplicative();
    let parts = factorization(g, h, b.stabilizer());
    let mul = |xs: &[usize]| xs.iter().fold(g.identity(), |acc, &x| g.mul(acc, x));
    let m = g.order();
    let mut r = Vec::with_capacity(m * m);
    for x in g.elements() {
        let (h1, s1) = parts[x];
        let s1_inv = g.inv(s1);
        for y in g.elements() {
            let (h2, s2) = parts[y];
            let first = mul(&[s1, h2, s1_inv]);
            let second = mul(&[s1, g.inv(h2), s1_inv, h1, s1, h2, s2]);
            r.push((first, second));
        }
    }
    Ok(SolutionTable::from_flat(m, r, g.labels().map(|l| l.to_vec())))
}

/// The solution for an almost-a-brace `(G, N)` against the matched product
/// of a solution on `H` and one on `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    /// `α_h(s) = (τ_{h⁻¹}(s⁻¹))⁻¹ = s` for all `h ∈ H`, `s ∈ S`.
    pub alpha_trivial: bool,
    /// `β_s(h) = σ_s(h) = shs⁻¹` for all `h ∈ H`, `s ∈ S`.
    pub beta_is_conjugation: bool,
    /// `τ_g(S) = S` for every `g`.
    pub tau_preserves_s: bool,
    /// `{g : τ_g(s) = s for all s ∈ S}`.
    pub tau_kernel_on_s: Vec<usize>,
    pub kernel_is_h: bool,
}

impl DecompositionReport {
    pub fn holds(&self) -> bool {
        self.alpha_trivial && self.beta_is_conjugation && self.tau_preserves_s && self.kernel_is_h
    }
}

pub fn decomposition_check(b: &SkewBracoid, h: &Subgroup) -> Result<DecompositionReport> {
    b.require_almost_brace(h)?;
    let sol = solution_from_bracoid(b, h)?;
    let g = b.multiplicative();
    let s = b.stabilizer();
    let alpha_trivial = h.members().iter().all(|&hh| {
        s.members().iter().all(|&ss| g.inv(sol.tau(g.inv(hh), g.inv(ss))) == ss)
    });
    let beta_is_conjugation =
        s.members().iter().all(|&ss| h.members().iter().all(|&hh| sol.sigma(ss, hh) == g.conjugate(ss, hh)));
    let tau_preserves_s = g.elements().all(|x| s.members().iter().all(|&ss| s.contains(sol.tau(x, ss))));
    let tau_kernel_on_s: Vec<usize> =
        g.elements().filter(|&x| s.members().iter().all(|&ss| sol.tau(x, ss) == ss)).collect();
    let kernel_is_h = tau_kernel_on_s == h.members();
    Ok(DecompositionReport { alpha_trivial, beta_is_conjugation, tau_preserves_s, tau_kernel_on_s, kernel_is_h })
}

/// Quantities preserved by isomorphisms of solutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionInvariants {
    /// Cycle type of `r` on `X × X`, when `r` is a bijection.
    pub cycle_type: Option<Vec<usize>>,
    pub sigma_image_sizes: Vec<usize>,
    pub tau_image_sizes: Vec<usize>,
    /// Pairs with `r(x, y) = (x, y)`.
    pub fixed_points: usize,
    /// Points with `r(x, x) = (x, x)`.
    pub diagonal_fixed_points: usize,
}

pub fn invariants(s: &SolutionTable) -> SolutionInvariants {
    let m = s.size();
    let pairs = m * m;
    let image = |x: usize, y: usize| -> usize {
        let (p, q) = s.get(x, y);
        p * m + q
    };
    let bijective = is_bijection(pairs, |i| image(i / m, i % m));
    let cycle_type = bijective.then(|| {
        let mut seen = vec![false; pairs];
        let mut lengths = Vec::new();
        for start in 0..pairs {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = image(i / m, i % m);
                len += 1;
            }
            if len > 0 {
                lengths.push(len);
            }
        }
        lengths.sort_unstable();
        lengths
    });
    let image_sizes = |f: &dyn Fn(usize, usize) -> usize| -> Vec<usize> {
        let mut sizes: Vec<usize> = (0..m).map(|a| (0..m).map(|b| f(a, b)).collect::<HashSet<_>>().len()).collect();
        sizes.sort_unstable();
        sizes
    };
    SolutionInvariants {
        cycle_type,
        sigma_image_sizes: image_sizes(&|x, y| s.sigma(x, y)),
        tau_image_sizes: image_sizes(&|y, x| s.tau(y, x)),
        fixed_points: (0..pairs).filter(|&i| s.get(i / m, i % m) == (i / m, i % m)).count(),
        diagonal_fixed_points: (0..m).filter(|&x| s.get(x, x) == (x, x)).count(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Isomorphism {
    /// `f` with `r₂(f x, f y) = (f × f)(r₁(x, y))`.
    Found(Vec<usize>),
    None,
    /// The search budget ran out.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub equal: bool,
    /// First `(x, y)` where the tables differ.
    pub first_difference: Option<(usize, usize)>,
    pub invariants: (SolutionInvariants, SolutionInvariants),
    pub isomorphism: Isomorphism,
}

/// Search nodes allowed above the exhaustive size.
pub const ISOMORPHISM_BUDGET: usize = 200_000;
/// Up to this size the isomorphism search always runs to completion.
pub const EXHAUSTIVE_SIZE: usize = 8;

pub fn compare_solutions(s1: &SolutionTable, s2: &SolutionTable) -> Result<Comparison> {
    if s1.size() != s2.size() {
        return Err(Error::SizeMismatch { left: s1.size(), right: s2.size() });
    }
    let m = s1.size();
    let first_difference = (0..m * m).find(|&i| s1.get(i / m, i % m) != s2.get(i / m, i % m)).map(|i| (i / m, i % m));
    let inv = (invariants(s1), invariants(s2));
    let isomorphism = if first_difference.is_none() {
        Isomorphism::Found((0..m).collect())
    } else if inv.0 != inv.1 {
        Isomorphism::None
    } else {
        let budget = if m <= EXHAUSTIVE_SIZE { None } else { Some(ISOMORPHISM_BUDGET) };
        find_solution_isomorphism(s1, s2, budget)
    };
    Ok(Comparison { equal: first_difference.is_none(), first_difference, invariants: inv, isomorphism })
}

fn point_profile(s: &SolutionTable, x: usize) -> (usize, usize, bool, usize) {
    let m = s.size();
    let sigma = (0..m).map(|y| s.sigma(x, y)).collect::<HashSet<_>>().len();
    let tau = (0..m).map(|y| s.tau(x, y)).collect::<HashSet<_>>().len();
    let fixed_row = (0..m).filter(|&y| s.get(x, y) == (x, y)).count();
    (sigma, tau, s.get(x, x) == (x, x), fixed_row)
}

struct IsoSearch<'a> {
    s1: &'a SolutionTable,
    s2: &'a SolutionTable,
    candidates: Vec<Vec<usize>>,
    nodes: usize,
    budget: Option<usize>,
}

impl IsoSearch<'_> {
    /// Assigns `x ↦ y` and everything it forces. Returns the assigned points
    /// so the caller can undo them, or `None` on a contradiction (after
    /// undoing its own work).
    fn assign(&self, f: &mut [usize], used: &mut [bool], x: usize, y: usize) -> Option<Vec<usize>> {
        let mut assigned = Vec::new();
        let mut queue = vec![(x, y)];
        while let Some((a, b)) = queue.pop() {
            if f[a] != usize::MAX {
                if f[a] != b {
                    return self.undo(f, used, assigned);
                }
                continue;
            }
            if used[b] || !self.candidates[a].contains(&b) {
                return self.undo(f, used, assigned);
            }
            f[a] = b;
            used[b] = true;
            assigned.push(a);
            for c in (0..f.len()).filter(|&c| f[c] != usize::MAX) {
                for (p, q) in [(a, c), (c, a)] {
                    let (u, v) = self.s1.get(p, q);
                    let (u2, v2) = self.s2.get(f[p], f[q]);
                    queue.push((u, u2));
                    queue.push((v, v2));
                }
            }
        }
        Some(assigned)
    }

    fn undo(&self, f: &mut [usize], used: &mut [bool], assigned: Vec<usize>) -> Option<Vec<usize>> {
        for a in assigned {
            used[f[a]] = false;
            f[a] = usize::MAX;
        }
        None
    }

    /// `Some(true)` when `f` was completed, `Some(false)` when the subtree is
    /// exhausted, `None` when the budget ran out.
    fn search(&mut self, f: &mut Vec<usize>, used: &mut Vec<bool>) -> Option<bool> {
        let Some(x) = f.iter().position(|&v| v == usize::MAX) else {
            return Some(true);
        };
        for i in 0..self.candidates[x].len() {
            let y = self.candidates[x][i];
            self.nodes += 1;
            if self.budget.is_some_and(|b| self.nodes > b) {
                return None;
            }
            if let Some(assigned) = self.assign(f, used, x, y) {
                if self.search(f, used)? {
                    return Some(true);
                }
                self.undo(f, used, assigned);
            }
        }
        Some(false)
    }
}

/// Backtracking over point maps that respect [`point_profile`], propagating
/// the images forced by `r`.
pub fn find_solution_isomorphism(s1: &SolutionTable, s2: &SolutionTable, budget: Option<usize>) -> Isomorphism {
    let m = s1.size();
    if s2.size() != m {
        return Isomorphism::None;
    }
    let p2: Vec<_> = (0..m).map(|y| point_profile(s2, y)).collect();
    let candidates = (0..m)
        .map(|x| {
            let p = point_profile(s1, x);
            (0..m).filter(|&y| p2[y] == p).collect()
        })
        .collect();
    let mut search = IsoSearch { s1, s2, candidates, nodes: 0, budget };
    let mut f = vec![usize::MAX; m];
    let mut used = vec![false; m];
    match search.search(&mut f, &mut used) {
        Some(true) => Isomorphism::Found(f),
        Some(false) => Isomorphism::None,
        None => Isomorphism::Unknown,
    }
}
