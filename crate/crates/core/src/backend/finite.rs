//! Enumeration backend for finite rings.
//!
//! Elements are indices into the canonical enumeration of the ring. Small
//! rings get full Cayley tables and a per-element cache of their one-sided
//! ideals and annihilators; larger ones (up to the cardinality guard) fall
//! back to element arithmetic.

use std::collections::HashMap;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{Backend, CARDINALITY_GUARD};
use crate::error::{Error, Result};
use crate::ring::{Element, Payload, RingHandle};

const TABLE_LIMIT: usize = 1024;

/// A deduplicated, sorted set of element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    members: Arc<[u32]>,
}

impl ElementSet {
    pub fn from_members(mut members: Vec<u32>) -> Self {
        members.sort_unstable();
        members.dedup();
        ElementSet {
            members: members.into(),
        }
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        let mut it = other.members.iter().peekable();
        'outer: for x in self.members.iter() {
            while let Some(&&y) = it.peek() {
                if y == *x {
                    it.next();
                    continue 'outer;
                }
                if y > *x {
                    return false;
                }
                it.next();
            }
            return false;
        }
        true
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let members = self
            .members
            .iter()
            .copied()
            .filter(|x| other.contains(*x))
            .collect();
        ElementSet::from_members(members)
    }
}

#[derive(Debug)]
struct IdealCache {
    right: Vec<ElementSet>,
    left: Vec<ElementSet>,
    right_ann: Vec<ElementSet>,
    left_ann: Vec<ElementSet>,
}

#[derive(Debug)]
pub struct FiniteBackend {
    ring: RingHandle,
    elements: Vec<Element>,
    ids: Vec<u32>,
    index: HashMap<Payload, u32>,
    add_table: Option<Vec<u32>>,
    mul_table: Option<Vec<u32>>,
    neg: Vec<u32>,
    star: Option<Vec<u32>>,
    zero: u32,
    one: u32,
    ideals: Option<IdealCache>,
}

impl FiniteBackend {
    /// Enumerates `ring`; fails with `InfiniteRing` for `M_k(ℚ)` and with
    /// `CardinalityGuard` past [`CARDINALITY_GUARD`] elements.
    pub fn new(ring: &RingHandle) -> Result<Self> {
        let elements = ring.elements(CARDINALITY_GUARD)?;
        let n = elements.len();
        let index: HashMap<Payload, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.payload().clone(), i as u32))
            .collect();
        let lookup = |e: &Element| index[e.payload()];
        let zero = lookup(&ring.zero());
        let one = lookup(&ring.one());
        let neg = elements.iter().map(|e| lookup(&e.neg().unwrap())).collect();
        let star = if ring.has_involution() {
            Some(elements.iter().map(|e| lookup(&e.star().unwrap())).collect())
        } else {
            None
        };
        let (add_table, mul_table) = if n <= TABLE_LIMIT {
            let mut add = Vec::with_capacity(n * n);
            let mut mul = Vec::with_capacity(n * n);
            for x in &elements {
                for y in &elements {
                    add.push(lookup(&x.add(y).unwrap()));
                    mul.push(lookup(&x.mul(y).unwrap()));
                }
            }
            (Some(add), Some(mul))
        } else {
            (None, None)
        };
        let mut backend = FiniteBackend {
            ring: ring.clone(),
            ids: (0..n as u32).collect(),
            elements,
            index,
            add_table,
            mul_table,
            neg,
            star,
            zero,
            one,
            ideals: None,
        };
        if n <= TABLE_LIMIT {
            let ids = backend.ids.clone();
            backend.ideals = Some(IdealCache {
                right: ids.iter().map(|&a| backend.compute_right_ideal(a)).collect(),
                left: ids.iter().map(|&a| backend.compute_left_ideal(a)).collect(),
                right_ann: ids.iter().map(|&a| backend.compute_right_ann(a)).collect(),
                left_ann: ids.iter().map(|&a| backend.compute_left_ann(a)).collect(),
            });
        }
        Ok(backend)
    }

    pub fn cardinality(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: u32) -> &Element {
        &self.elements[i as usize]
    }

    fn lookup(&self, e: &Element) -> u32 {
        self.index[e.payload()]
    }

    fn compute_right_ideal(&self, a: u32) -> ElementSet {
        ElementSet::from_members(self.ids.iter().map(|x| self.mul(&a, x)).collect())
    }

    fn compute_left_ideal(&self, a: u32) -> ElementSet {
        ElementSet::from_members(self.ids.iter().map(|x| self.mul(x, &a)).collect())
    }

    fn compute_right_ann(&self, a: u32) -> ElementSet {
        ElementSet::from_members(
            self.ids
                .iter()
                .copied()
                .filter(|x| self.mul(&a, x) == self.zero)
                .collect(),
        )
    }

    fn compute_left_ann(&self, a: u32) -> ElementSet {
        ElementSet::from_members(
            self.ids
                .iter()
                .copied()
                .filter(|x| self.mul(x, &a) == self.zero)
                .collect(),
        )
    }

    /// `{p·r·s : r ∈ R}` where `p`, `s` are the folded products of `prefix`
    /// and `suffix`.
    pub fn product_set(&self, prefix: &[u32], suffix: &[u32]) -> ElementSet {
        let p = prefix.iter().fold(self.one, |acc, x| self.mul(&acc, x));
        let s = suffix.iter().fold(self.one, |acc, x| self.mul(&acc, x));
        ElementSet::from_members(self.ids.iter().map(|r| self.mul3(&p, r, &s)).collect())
    }

    pub fn is_additive_subgroup(&self, x: &ElementSet) -> bool {
        x.contains(self.zero)
            && x.members()
                .iter()
                .all(|a| x.members().iter().all(|b| x.contains(self.sub(a, b))))
    }

    /// `R = x ⊕ y` as additive groups; both inputs must be subgroups.
    pub fn direct_sum(&self, x: &ElementSet, y: &ElementSet) -> Result<bool> {
        if !self.is_additive_subgroup(x) || !self.is_additive_subgroup(y) {
            return Err(Error::NotAdditivelyClosed);
        }
        if x.intersection(y).members() != [self.zero] {
            return Ok(false);
        }
        let mut covered = vec![false; self.cardinality()];
        for a in x.members() {
            for b in y.members() {
                covered[self.add(a, b) as usize] = true;
            }
        }
        Ok(covered.into_iter().all(|c| c))
    }

    /// All `x` with `axa = a`, in canonical order.
    pub fn inner_inverses(&self, a: u32) -> Vec<u32> {
        self.ids
            .iter()
            .copied()
            .filter(|x| self.mul3(&a, x, &a) == a)
            .collect()
    }

    /// Definitional search for `y ∈ (bRy) ∩ (yRc)` with `yab = b`, `cay = c`.
    pub fn brute_force_bc(&self, a: u32, b: u32, c: u32) -> Result<Option<u32>> {
        crate::oracle::brute_force_bc(self, &self.ids, &a, &b, &c)
    }
}

impl Backend for FiniteBackend {
    type Elem = u32;
    type Ideal = ElementSet;

    fn ring(&self) -> &RingHandle {
        &self.ring
    }

    fn zero(&self) -> u32 {
        self.zero
    }

    fn one(&self) -> u32 {
        self.one
    }

    fn add(&self, x: &u32, y: &u32) -> u32 {
        match &self.add_table {
            Some(t) => t[*x as usize * self.elements.len() + *y as usize],
            None => self.lookup(&self.element(*x).add(self.element(*y)).unwrap()),
        }
    }

    fn neg(&self, x: &u32) -> u32 {
        self.neg[*x as usize]
    }

    fn mul(&self, x: &u32, y: &u32) -> u32 {
        match &self.mul_table {
            Some(t) => t[*x as usize * self.elements.len() + *y as usize],
            None => self.lookup(&self.element(*x).mul(self.element(*y)).unwrap()),
        }
    }

    fn star(&self, x: &u32) -> Result<u32> {
        self.star
            .as_ref()
            .map(|s| s[*x as usize])
            .ok_or(Error::NoInvolution)
    }

    fn is_unit(&self, x: &u32) -> Option<u32> {
        self.ids
            .iter()
            .copied()
            .find(|y| self.mul(x, y) == self.one && self.mul(y, x) == self.one)
    }

    fn right_ideal(&self, a: &u32) -> ElementSet {
        match &self.ideals {
            Some(c) => c.right[*a as usize].clone(),
            None => self.compute_right_ideal(*a),
        }
    }

    fn left_ideal(&self, a: &u32) -> ElementSet {
        match &self.ideals {
            Some(c) => c.left[*a as usize].clone(),
            None => self.compute_left_ideal(*a),
        }
    }

    fn right_annihilator(&self, a: &u32) -> ElementSet {
        match &self.ideals {
            Some(c) => c.right_ann[*a as usize].clone(),
            None => self.compute_right_ann(*a),
        }
    }

    fn left_annihilator(&self, a: &u32) -> ElementSet {
        match &self.ideals {
            Some(c) => c.left_ann[*a as usize].clone(),
            None => self.compute_left_ann(*a),
        }
    }

    fn ideal_subset(&self, x: &ElementSet, y: &ElementSet) -> Result<bool> {
        Ok(x.is_subset_of(y))
    }

    fn ideal_eq(&self, x: &ElementSet, y: &ElementSet) -> Result<bool> {
        Ok(x == y)
    }

    fn meet_is_zero(&self, x: &ElementSet, y: &ElementSet) -> Result<bool> {
        Ok(x.intersection(y).members().iter().all(|&m| m == self.zero))
    }

    fn is_direct_sum(&self, x: &ElementSet, y: &ElementSet) -> Result<bool> {
        self.direct_sum(x, y)
    }

    fn in_sandwich(&self, x: &u32, p: &u32, s: &u32) -> bool {
        self.ids.iter().any(|r| self.mul3(p, r, s) == *x)
    }

    fn inner_inverse(&self, a: &u32) -> Option<u32> {
        self.ids
            .iter()
            .copied()
            .find(|x| self.mul3(a, x, a) == *a)
    }

    fn inner_inverse_witnesses(&self, a: &u32, limit: usize) -> Vec<u32> {
        self.ids
            .iter()
            .copied()
            .filter(|x| self.mul3(a, x, a) == *a)
            .take(limit)
            .collect()
    }

    fn elements(&self) -> Option<&[u32]> {
        Some(&self.ids)
    }

    fn random_element(&self, rng: &mut ChaCha8Rng) -> u32 {
        rng.gen_range(0..self.ids.len() as u32)
    }

    fn drazin_bound(&self) -> usize {
        self.elements.len()
    }

    fn render(&self, x: &u32) -> String {
        self.element(*x).render()
    }

    fn lift(&self, e: &Element) -> Result<u32> {
        if e.ring() != &self.ring {
            return Err(Error::MixedRings);
        }
        Ok(self.lookup(e))
    }

    fn lower(&self, x: &u32) -> Element {
        self.element(*x).clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z6() -> FiniteBackend {
        FiniteBackend::new(&RingHandle::modular(6).unwrap()).unwrap()
    }

    fn set(xs: &[u32]) -> ElementSet {
        ElementSet::from_members(xs.to_vec())
    }

    #[test]
    fn ideals_in_z6() {
        let r = z6();
        assert_eq!(r.right_ideal(&2), set(&[0, 2, 4]));
        assert_eq!(r.right_ideal(&0), set(&[0]));
        assert_eq!(r.right_ideal(&5), set(&[0, 1, 2, 3, 4, 5]));
        assert_eq!(r.right_annihilator(&2), set(&[0, 3]));
        assert_eq!(r.right_annihilator(&0), set(&[0, 1, 2, 3, 4, 5]));
        assert_eq!(r.right_annihilator(&1), set(&[0]));
    }

    #[test]
    fn product_sets() {
        let r = z6();
        assert_eq!(r.product_set(&[], &[4, 2, 4]), set(&[0, 2, 4]));
        assert_eq!(r.product_set(&[3], &[0]), set(&[0]));
        assert_eq!(r.product_set(&[1], &[1]).len(), 6);
    }

    #[test]
    fn direct_sums() {
        let r = z6();
        assert!(r.direct_sum(&set(&[0, 2, 4]), &set(&[0, 3])).unwrap());
        assert!(!r.direct_sum(&set(&[0, 2, 4]), &set(&[0, 2, 4])).unwrap());
        assert!(r.direct_sum(&set(&[0, 1, 2, 3, 4, 5]), &set(&[0])).unwrap());
        assert_eq!(r.direct_sum(&set(&[0, 1]), &set(&[0])), Err(Error::NotAdditivelyClosed));
    }

    #[test]
    fn inner_inverses_in_z6() {
        let r = z6();
        assert_eq!(r.inner_inverses(2), vec![2, 5]);
        assert_eq!(r.inner_inverses(1), vec![1]);
        assert_eq!(r.inner_inverses(0), vec![0, 1, 2, 3, 4, 5]);
        assert!(r.is_regular(&3));
    }

    #[test]
    fn brute_force_examples() {
        let r = z6();
        assert_eq!(r.brute_force_bc(2, 4, 4).unwrap(), Some(2));
        assert_eq!(r.brute_force_bc(2, 3, 3).unwrap(), None);
        assert_eq!(r.brute_force_bc(5, 1, 1).unwrap(), Some(5));
    }

    #[test]
    fn infinite_ring_rejected() {
        let q = RingHandle::rational_matrices(2).unwrap();
        assert_eq!(FiniteBackend::new(&q).unwrap_err(), Error::InfiniteRing);
        let big = RingHandle::modular_matrices(4, 3).unwrap();
        assert!(matches!(FiniteBackend::new(&big), Err(Error::CardinalityGuard(_))));
    }

    #[test]
    fn subset_merge() {
        assert!(set(&[0, 2]).is_subset_of(&set(&[0, 1, 2])));
        assert!(!set(&[0, 3]).is_subset_of(&set(&[0, 1, 2])));
        assert!(set(&[]).is_subset_of(&set(&[1])));
        assert!(!set(&[5]).is_subset_of(&set(&[])));
    }

    #[test]
    fn tables_match_element_arithmetic() {
        let ring = RingHandle::modular_matrices(2, 3).unwrap();
        let r = FiniteBackend::new(&ring).unwrap();
        for (x, y) in [(3u32, 77u32), (511, 200), (17, 17)] {
            let direct = r.element(x).mul(r.element(y)).unwrap();
            assert_eq!(r.lower(&r.mul(&x, &y)), direct);
        }
    }
}
