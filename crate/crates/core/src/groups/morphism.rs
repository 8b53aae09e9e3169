//! Backtracking search for injective homomorphisms.
//!
//! A homomorphism is fixed by the images of a generating set. Images are
//! assigned one generator at a time; after each assignment the partial map
//! is extended over the subgroup generated so far and rejected as soon as it
//! is inconsistent or fails to be injective.

use std::ops::ControlFlow;

use super::FiniteGroup;

/// Greedy irredundant generating set: repeatedly adjoin an element of
/// largest order outside the current closure (ties to the smallest index).
pub fn generating_set(group: &FiniteGroup) -> Vec<usize> {
    let mut orders: Vec<(usize, usize)> =
        group.elements().map(|a| (group.element_order(a), a)).collect();
    orders.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
    let mut gens = Vec::new();
    let mut span = vec![group.identity()];
    while span.len() < group.order() {
        let &(_, next) = orders
            .iter()
            .find(|(_, a)| span.binary_search(a).is_err())
            .expect("span is a proper subgroup");
        gens.push(next);
        span = group.closure(&gens);
    }
    gens
}

/// Multiset of element orders, sorted.
pub fn order_profile(group: &FiniteGroup) -> Vec<usize> {
    let mut p: Vec<usize> = group.elements().map(|a| group.element_order(a)).collect();
    p.sort_unstable();
    p
}

/// Extends `gens[i] ↦ images[i]` to the subgroup generated by `gens`.
/// Returns `None` if the assignment is not a well-defined injective map.
fn extend(
    source: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
    target: &FiniteGroup,
) -> Option<Vec<usize>> {
    const UNSET: usize = usize::MAX;
    let mut map = vec![UNSET; source.order()];
    let mut hit = vec![false; target.order()];
    map[source.identity()] = target.identity();
    hit[target.identity()] = true;
    let mut queue = vec![source.identity()];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&g, &img) in gens.iter().zip(images) {
            let y = source.mul(x, g);
            let fy = target.mul(map[x], img);
            if map[y] == UNSET {
                if std::mem::replace(&mut hit[fy], true) {
                    return None;
                }
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

/// Calls `visit` with every injective homomorphism `source → target`
/// (as an image array over the elements of `source`) until it breaks.
pub(crate) fn for_each_embedding<B>(
    source: &FiniteGroup,
    target: &FiniteGroup,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> Option<B> {
    if source.order() > target.order() || !target.order().is_multiple_of(source.order()) {
        return None;
    }
    let gens = generating_set(source);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let k = source.element_order(g);
            target.elements().filter(|&x| target.element_order(x) == k).collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    match search(source, target, &gens, &candidates, &mut images, &mut visit) {
        ControlFlow::Break(b) => Some(b),
        ControlFlow::Continue(()) => None,
    }
}

fn search<B>(
    source: &FiniteGroup,
    target: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let k = images.len();
    if k == gens.len() {
        let map = extend(source, gens, images, target).expect("checked at the previous level");
        return visit(&map);
    }
    for &c in &candidates[k] {
        images.push(c);
        if extend(source, &gens[..=k], images, target).is_some() {
            search(source, target, gens, candidates, images, visit)?;
        }
        images.pop();
    }
    ControlFlow::Continue(())
}

/// First isomorphism `a → b` (by generator-image order) satisfying `accept`.
pub fn find_isomorphism_with(
    a: &FiniteGroup,
    b: &FiniteGroup,
    mut accept: impl FnMut(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    if a.order() != b.order() || order_profile(a) != order_profile(b) {
        return None;
    }
    for_each_embedding(a, b, |map| {
        if accept(map) {
            ControlFlow::Break(map.to_vec())
        } else {
            ControlFlow::Continue(())
        }
    })
}

pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<Vec<usize>> {
    find_isomorphism_with(a, b, |_| true)
}

pub fn is_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    find_isomorphism(a, b).is_some()
}
