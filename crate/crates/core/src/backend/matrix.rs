//! Linear-algebra backend for the full matrix ring `M_k(F)` over a field.
//!
//! In `M_k(F)` the right ideal `mR` is `{X : col(X) ⊆ col(m)}` and the right
//! annihilator `m°` is `{X : col(X) ⊆ null(m)}`; dually `Rm` and `°m` are
//! described by the row space and the left null space. Inclusion, trivial
//! intersection and direct sums of these one-sided ideals are therefore the
//! same relations between the corresponding subspaces of `F^k`, which makes
//! every predicate decidable for `F = ℚ`.

use std::sync::OnceLock;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{Backend, CARDINALITY_GUARD};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, SubspaceBasis};
use crate::ring::{Element, Payload, RingHandle, RingKind, ScalarField};
use crate::scalar::{Rationals, ScalarRing, Zmod};

/// Scalar fields that can back a [`MatrixBackend`].
pub trait MatrixScalars: ScalarRing {
    fn for_ring(ring: &RingHandle) -> Result<Self>;
    fn unwrap_payload(p: &Payload) -> Option<&Matrix<Self>>;
    fn wrap_payload(m: Matrix<Self>) -> Payload;
    /// A small random scalar for sampling.
    fn random_value(&self, rng: &mut ChaCha8Rng) -> Self::Value;
}

impl MatrixScalars for Rationals {
    fn for_ring(ring: &RingHandle) -> Result<Self> {
        match ring.kind() {
            RingKind::Matrix {
                field: ScalarField::Rationals,
                ..
            } => Ok(Rationals),
            _ => Err(Error::InvalidRing(format!("{ring} is not a rational matrix ring"))),
        }
    }

    fn unwrap_payload(p: &Payload) -> Option<&Matrix<Self>> {
        match p {
            Payload::Rational(m) => Some(m),
            _ => None,
        }
    }

    fn wrap_payload(m: Matrix<Self>) -> Payload {
        Payload::Rational(m)
    }

    fn random_value(&self, rng: &mut ChaCha8Rng) -> Self::Value {
        self.from_i64(rng.gen_range(-3..=3))
    }
}

impl MatrixScalars for Zmod {
    /// Accepts `M_k(𝔽ₚ)` and also `M_k(ℤ/p)` rings whose modulus is prime.
    fn for_ring(ring: &RingHandle) -> Result<Self> {
        let p = match ring.kind() {
            RingKind::Matrix {
                field: ScalarField::PrimeField(p),
                ..
            } => *p,
            RingKind::FiniteMatrix { modulus, .. } => *modulus,
            _ => return Err(Error::InvalidRing(format!("{ring} is not a matrix ring over Z/p"))),
        };
        let z = Zmod::new(p)?;
        if !z.is_field() {
            return Err(Error::InvalidRing(format!(
                "linear algebra over Z/{p} needs a prime modulus"
            )));
        }
        Ok(z)
    }

    fn unwrap_payload(p: &Payload) -> Option<&Matrix<Self>> {
        match p {
            Payload::Modular(m) => Some(m),
            _ => None,
        }
    }

    fn wrap_payload(m: Matrix<Self>) -> Payload {
        Payload::Modular(m)
    }

    fn random_value(&self, rng: &mut ChaCha8Rng) -> Self::Value {
        rng.gen_range(0..self.modulus())
    }
}

pub struct MatrixBackend<S: MatrixScalars> {
    ring: RingHandle,
    scalars: S,
    size: usize,
    enumeration: OnceLock<Option<Vec<Matrix<S>>>>,
}

impl<S: MatrixScalars> std::fmt::Debug for MatrixBackend<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MatrixBackend({})", self.ring)
    }
}

impl<S: MatrixScalars> MatrixBackend<S> {
    pub fn new(ring: &RingHandle) -> Result<Self> {
        let scalars = S::for_ring(ring)?;
        let size = ring.matrix_size().expect("matrix ring");
        Ok(MatrixBackend {
            ring: ring.clone(),
            scalars,
            size,
            enumeration: OnceLock::new(),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn scalars(&self) -> S {
        self.scalars
    }

    fn random_matrix(&self, rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix<S> {
        let data = (0..rows * cols).map(|_| self.scalars.random_value(rng)).collect();
        Matrix::from_vec(self.scalars, rows, cols, data)
    }
}

impl<S: MatrixScalars> Backend for MatrixBackend<S> {
    type Elem = Matrix<S>;
    type Ideal = SubspaceBasis<S>;

    fn ring(&self) -> &RingHandle {
        &self.ring
    }

    fn zero(&self) -> Matrix<S> {
        Matrix::zeros(self.scalars, self.size, self.size)
    }

    fn one(&self) -> Matrix<S> {
        Matrix::identity(self.scalars, self.size)
    }

    fn add(&self, x: &Matrix<S>, y: &Matrix<S>) -> Matrix<S> {
        x.add(y)
    }

    fn neg(&self, x: &Matrix<S>) -> Matrix<S> {
        x.neg()
    }

    fn sub(&self, x: &Matrix<S>, y: &Matrix<S>) -> Matrix<S> {
        x.sub(y)
    }

    fn mul(&self, x: &Matrix<S>, y: &Matrix<S>) -> Matrix<S> {
        x.mul(y)
    }

    fn star(&self, x: &Matrix<S>) -> Result<Matrix<S>> {
        if !self.ring.has_involution() {
            return Err(Error::NoInvolution);
        }
        Ok(x.transpose())
    }

    fn is_unit(&self, x: &Matrix<S>) -> Option<Matrix<S>> {
        linalg::inverse(x)
    }

    fn is_zero(&self, x: &Matrix<S>) -> bool {
        x.is_zero()
    }

    fn right_ideal(&self, a: &Matrix<S>) -> SubspaceBasis<S> {
        linalg::column_space(a)
    }

    fn left_ideal(&self, a: &Matrix<S>) -> SubspaceBasis<S> {
        linalg::row_space(a)
    }

    fn right_annihilator(&self, a: &Matrix<S>) -> SubspaceBasis<S> {
        linalg::null_space(a)
    }

    fn left_annihilator(&self, a: &Matrix<S>) -> SubspaceBasis<S> {
        linalg::left_null_space(a)
    }

    fn ideal_subset(&self, x: &SubspaceBasis<S>, y: &SubspaceBasis<S>) -> Result<bool> {
        x.is_subset_of(y)
    }

    fn ideal_eq(&self, x: &SubspaceBasis<S>, y: &SubspaceBasis<S>) -> Result<bool> {
        x.same_space(y)
    }

    fn meet_is_zero(&self, x: &SubspaceBasis<S>, y: &SubspaceBasis<S>) -> Result<bool> {
        x.meets_trivially(y)
    }

    fn is_direct_sum(&self, x: &SubspaceBasis<S>, y: &SubspaceBasis<S>) -> Result<bool> {
        x.is_direct_sum_with(y)
    }

    /// Over a field, `pRs = {X : col(X) ⊆ col(p), row(X) ⊆ row(s)}`.
    fn in_sandwich(&self, x: &Matrix<S>, p: &Matrix<S>, s: &Matrix<S>) -> bool {
        let cols = linalg::column_space(x).is_subset_of(&linalg::column_space(p));
        let rows = linalg::row_space(x).is_subset_of(&linalg::row_space(s));
        cols.expect("same ambient") && rows.expect("same ambient")
    }

    fn inner_inverse(&self, a: &Matrix<S>) -> Option<Matrix<S>> {
        Some(linalg::inner_inverse(a))
    }

    /// The base witness followed by `g₀ + (I − g₀a)·E_ij` and
    /// `g₀ + E_ij·(I − a g₀)` for matrix units `E_ij`, skipping repeats.
    fn inner_inverse_witnesses(&self, a: &Matrix<S>, limit: usize) -> Vec<Matrix<S>> {
        let zero = self.zero();
        let mut out = vec![linalg::inner_inverse(a)];
        'search: for side in 0..2 {
            for i in 0..self.size {
                for j in 0..self.size {
                    if out.len() >= limit {
                        break 'search;
                    }
                    let mut unit = zero.clone();
                    unit.set(i, j, self.scalars.one());
                    let g = if side == 0 {
                        linalg::inner_inverse_param(a, &unit, &zero)
                    } else {
                        linalg::inner_inverse_param(a, &zero, &unit)
                    };
                    if !out.contains(&g) {
                        out.push(g);
                    }
                }
            }
        }
        out.truncate(limit);
        out
    }

    fn is_regular(&self, _a: &Matrix<S>) -> bool {
        true
    }

    fn elements(&self) -> Option<&[Matrix<S>]> {
        self.enumeration
            .get_or_init(|| {
                let card = self.ring.cardinality()?;
                if card > CARDINALITY_GUARD {
                    return None;
                }
                let elems = self.ring.elements(CARDINALITY_GUARD).ok()?;
                Some(
                    elems
                        .iter()
                        .map(|e| S::unwrap_payload(e.payload()).cloned().expect("matrix payload"))
                        .collect(),
                )
            })
            .as_deref()
    }

    /// Random matrices of random rank (full rank in about half the draws),
    /// built as products of `k×r` and `r×k` factors.
    fn random_element(&self, rng: &mut ChaCha8Rng) -> Matrix<S> {
        let k = self.size;
        let rank = if rng.gen_bool(0.5) { k } else { rng.gen_range(0..=k) };
        if rank == k {
            return self.random_matrix(rng, k, k);
        }
        let left = self.random_matrix(rng, k, rank.max(1));
        let right = self.random_matrix(rng, rank.max(1), k);
        if rank == 0 {
            self.zero()
        } else {
            left.mul(&right)
        }
    }

    fn drazin_bound(&self) -> usize {
        self.size
    }

    fn render(&self, x: &Matrix<S>) -> String {
        x.render()
    }

    fn lift(&self, e: &Element) -> Result<Matrix<S>> {
        if e.ring() != &self.ring {
            return Err(Error::MixedRings);
        }
        S::unwrap_payload(e.payload())
            .cloned()
            .ok_or(Error::MixedRings)
    }

    fn lower(&self, x: &Matrix<S>) -> Element {
        self.ring
            .element(S::wrap_payload(x.clone()))
            .expect("matrix of ring size")
    }
}
