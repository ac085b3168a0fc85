//! The predicate vocabulary shared by both backends.
//!
//! Every set the theory talks about (`aR`, `Ra`, `a°`, `°a`, `pRs`) and every
//! relation between them (inclusion, trivial intersection, direct sum) is
//! exposed here. The finite backend answers by enumeration; the matrix
//! backend answers through subspaces of `F^k`.

use std::fmt::Debug;
use std::hash::Hash;

use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::ring::{Element, RingHandle};

pub mod finite;
pub mod matrix;

pub use finite::{ElementSet, FiniteBackend};
pub use matrix::{MatrixBackend, MatrixScalars};

/// Rings larger than this are never enumerated.
pub const CARDINALITY_GUARD: u128 = 100_000;

pub trait Backend: Send + Sync {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;
    /// A right/left ideal or annihilator.
    type Ideal: Clone + Debug + PartialEq + Send + Sync;

    fn ring(&self) -> &RingHandle;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn star(&self, x: &Self::Elem) -> Result<Self::Elem>;
    fn is_unit(&self, x: &Self::Elem) -> Option<Self::Elem>;

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.add(x, &self.neg(y))
    }

    fn mul3(&self, x: &Self::Elem, y: &Self::Elem, z: &Self::Elem) -> Self::Elem {
        self.mul(&self.mul(x, y), z)
    }

    fn pow(&self, x: &Self::Elem, k: usize) -> Self::Elem {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    fn is_zero(&self, x: &Self::Elem) -> bool {
        *x == self.zero()
    }

    fn has_involution(&self) -> bool {
        self.ring().has_involution()
    }

    /// `aR`
    fn right_ideal(&self, a: &Self::Elem) -> Self::Ideal;
    /// `Ra`
    fn left_ideal(&self, a: &Self::Elem) -> Self::Ideal;
    /// `a° = {x : ax = 0}`
    fn right_annihilator(&self, a: &Self::Elem) -> Self::Ideal;
    /// `°a = {x : xa = 0}`
    fn left_annihilator(&self, a: &Self::Elem) -> Self::Ideal;

    fn ideal_subset(&self, x: &Self::Ideal, y: &Self::Ideal) -> Result<bool>;

    fn ideal_eq(&self, x: &Self::Ideal, y: &Self::Ideal) -> Result<bool> {
        Ok(self.ideal_subset(x, y)? && self.ideal_subset(y, x)?)
    }

    /// `x ∩ y = {0}`
    fn meet_is_zero(&self, x: &Self::Ideal, y: &Self::Ideal) -> Result<bool>;

    /// `R = x ⊕ y`
    fn is_direct_sum(&self, x: &Self::Ideal, y: &Self::Ideal) -> Result<bool>;

    /// `x ∈ pRs`
    fn in_sandwich(&self, x: &Self::Elem, p: &Self::Elem, s: &Self::Elem) -> bool;

    /// One inner inverse (`aga = a`), or `None` when `a` is not regular.
    fn inner_inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Up to `limit` distinct inner inverses, the first being
    /// [`Backend::inner_inverse`].
    fn inner_inverse_witnesses(&self, a: &Self::Elem, limit: usize) -> Vec<Self::Elem>;

    fn is_regular(&self, a: &Self::Elem) -> bool {
        self.inner_inverse(a).is_some()
    }

    /// Every element in canonical order, when the ring is small enough to
    /// enumerate.
    fn elements(&self) -> Option<&[Self::Elem]>;

    fn random_element(&self, rng: &mut ChaCha8Rng) -> Self::Elem;

    /// Upper bound for the Drazin index search.
    fn drazin_bound(&self) -> usize;

    fn render(&self, x: &Self::Elem) -> String;

    fn lift(&self, e: &Element) -> Result<Self::Elem>;

    fn lower(&self, x: &Self::Elem) -> Element;

    fn parse(&self, lit: &str) -> Result<Self::Elem> {
        self.lift(&self.ring().parse_element(lit)?)
    }
}
