//! Concrete unital rings with an optional involution, and their elements.
//!
//! A [`RingHandle`] is an immutable, cheaply clonable description of one of
//! four ring kinds: residues `ℤ/n`, full matrix rings over `ℚ` or `𝔽ₚ`,
//! matrix rings over `ℤ/n`, and rings given by explicit Cayley tables.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalar::{is_prime, Rationals, ScalarRing, Zmod};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarField {
    Rationals,
    PrimeField(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Involution {
    Identity,
    Transpose,
    /// The involution listed in a table ring's `star` array.
    StarTable,
    None,
}

/// A ring given by its addition and multiplication tables over `0..order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TableRing {
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub star: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingKind {
    Modular { n: u64 },
    Matrix { field: ScalarField, size: usize },
    FiniteMatrix { modulus: u64, size: usize },
    Table(TableRing),
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingInner {
    kind: RingKind,
    involution: Involution,
    label: String,
}

#[derive(Clone)]
pub struct RingHandle(Arc<RingInner>);

impl PartialEq for RingHandle {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for RingHandle {}

impl fmt::Debug for RingHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingHandle({})", self.0.label)
    }
}

impl fmt::Display for RingHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.label)
    }
}

/// Canonical encoding of an element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Payload {
    Residue(u64),
    Rational(Matrix<Rationals>),
    Modular(Matrix<Zmod>),
    Index(usize),
}

#[derive(Clone)]
pub struct Element {
    ring: RingHandle,
    payload: Payload,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.payload == other.payload && self.ring == other.ring
    }
}

impl Eq for Element {}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl RingHandle {
    fn build(kind: RingKind, involution: Involution, label: String) -> Self {
        RingHandle(Arc::new(RingInner {
            kind,
            involution,
            label,
        }))
    }

    /// `ℤ/n` with the identity involution.
    pub fn modular(n: u64) -> Result<Self> {
        Zmod::new(n)?;
        Ok(Self::build(RingKind::Modular { n }, Involution::Identity, format!("zn:{n}")))
    }

    /// `M_k(ℚ)` with transposition.
    pub fn rational_matrices(size: usize) -> Result<Self> {
        check_size(size)?;
        Ok(Self::build(
            RingKind::Matrix {
                field: ScalarField::Rationals,
                size,
            },
            Involution::Transpose,
            format!("mat:q:{size}"),
        ))
    }

    /// `M_k(𝔽ₚ)` with transposition; `p` must be prime.
    pub fn prime_field_matrices(p: u64, size: usize) -> Result<Self> {
        check_size(size)?;
        Zmod::new(p)?;
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        Ok(Self::build(
            RingKind::Matrix {
                field: ScalarField::PrimeField(p),
                size,
            },
            Involution::Transpose,
            format!("mat:zp:{p}:{size}"),
        ))
    }

    /// `M_k(ℤ/n)` with transposition.
    pub fn modular_matrices(modulus: u64, size: usize) -> Result<Self> {
        check_size(size)?;
        Zmod::new(modulus)?;
        Ok(Self::build(
            RingKind::FiniteMatrix { modulus, size },
            Involution::Transpose,
            format!("mat:zn:{modulus}:{size}"),
        ))
    }

    /// Validates the tables eagerly: closure, ring axioms and, when a `star`
    /// array is present, the involution axioms.
    pub fn table(table: TableRing, label: impl Into<String>) -> Result<Self> {
        validate_table(&table)?;
        let involution = if table.star.is_some() {
            Involution::StarTable
        } else {
            Involution::None
        };
        Ok(Self::build(RingKind::Table(table), involution, label.into()))
    }

    pub fn table_from_json(json: &str, label: impl Into<String>) -> Result<Self> {
        let table: TableRing =
            serde_json::from_str(json).map_err(|e| Error::InvalidTable(e.to_string()))?;
        Self::table(table, label)
    }

    /// Same ring, with the involution replaced. Only `None` or an involution
    /// valid for the kind is accepted.
    pub fn with_involution(&self, involution: Involution) -> Result<Self> {
        let ok = match (&self.0.kind, involution) {
            (_, Involution::None) => true,
            (RingKind::Modular { .. }, Involution::Identity) => true,
            (RingKind::Matrix { .. } | RingKind::FiniteMatrix { .. }, Involution::Transpose) => true,
            (RingKind::Table(t), Involution::StarTable) => t.star.is_some(),
            _ => false,
        };
        if !ok {
            return Err(Error::InvalidRing(format!(
                "involution {involution:?} not available on {}",
                self.0.label
            )));
        }
        let label = match involution {
            Involution::None if self.0.involution != Involution::None => {
                format!("{}+noinv", self.0.label)
            }
            _ => self.0.label.clone(),
        };
        Ok(Self::build(self.0.kind.clone(), involution, label))
    }

    /// Parses `zn:<n>`, `mat:q:<k>`, `mat:zp:<p>:<k>`, `mat:zn:<n>:<k>` or
    /// `table:<path>`.
    pub fn parse(spec: &str) -> Result<Self> {
        let bad = || Error::InvalidRing(format!("unrecognised ring spec {spec:?}"));
        let num = |s: &str| s.parse::<u64>().map_err(|_| bad());
        if let Some(path) = spec.strip_prefix("table:") {
            return Self::load_table(Path::new(path), spec);
        }
        let parts: Vec<&str> = spec.split(':').collect();
        match parts.as_slice() {
            ["zn", n] => Self::modular(num(n)?),
            ["mat", "q", k] => Self::rational_matrices(num(k)? as usize),
            ["mat", "zp", p, k] => Self::prime_field_matrices(num(p)?, num(k)? as usize),
            ["mat", "zn", n, k] => Self::modular_matrices(num(n)?, num(k)? as usize),
            _ => Err(bad()),
        }
    }

    fn load_table(path: &Path, label: &str) -> Result<Self> {
        let json = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::table_from_json(&json, label)
    }

    pub fn kind(&self) -> &RingKind {
        &self.0.kind
    }

    pub fn involution(&self) -> Involution {
        self.0.involution
    }

    pub fn has_involution(&self) -> bool {
        self.0.involution != Involution::None
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    /// Matrix size for the matrix kinds.
    pub fn matrix_size(&self) -> Option<usize> {
        match self.0.kind {
            RingKind::Matrix { size, .. } | RingKind::FiniteMatrix { size, .. } => Some(size),
            _ => None,
        }
    }

    /// Number of elements, `None` for `M_k(ℚ)`. Saturates at `u128::MAX`.
    pub fn cardinality(&self) -> Option<u128> {
        match &self.0.kind {
            RingKind::Modular { n } => Some(*n as u128),
            RingKind::Matrix {
                field: ScalarField::Rationals,
                ..
            } => None,
            RingKind::Matrix {
                field: ScalarField::PrimeField(q),
                size,
            }
            | RingKind::FiniteMatrix { modulus: q, size } => {
                Some((*q as u128).checked_pow((size * size) as u32).unwrap_or(u128::MAX))
            }
            RingKind::Table(t) => Some(t.order as u128),
        }
    }

    fn zmod(&self) -> Option<Zmod> {
        match self.0.kind {
            RingKind::Modular { n } => Zmod::new(n).ok(),
            RingKind::Matrix {
                field: ScalarField::PrimeField(p),
                ..
            } => Zmod::new(p).ok(),
            RingKind::FiniteMatrix { modulus, .. } => Zmod::new(modulus).ok(),
            _ => None,
        }
    }

    fn wrap(&self, payload: Payload) -> Element {
        Element {
            ring: self.clone(),
            payload,
        }
    }

    pub fn zero(&self) -> Element {
        let p = match &self.0.kind {
            RingKind::Modular { .. } => Payload::Residue(0),
            RingKind::Matrix {
                field: ScalarField::Rationals,
                size,
            } => Payload::Rational(Matrix::zeros(Rationals, *size, *size)),
            RingKind::Matrix { size, .. } | RingKind::FiniteMatrix { size, .. } => {
                Payload::Modular(Matrix::zeros(self.zmod().unwrap(), *size, *size))
            }
            RingKind::Table(t) => Payload::Index(t.zero),
        };
        self.wrap(p)
    }

    pub fn one(&self) -> Element {
        let p = match &self.0.kind {
            RingKind::Modular { .. } => Payload::Residue(1),
            RingKind::Matrix {
                field: ScalarField::Rationals,
                size,
            } => Payload::Rational(Matrix::identity(Rationals, *size)),
            RingKind::Matrix { size, .. } | RingKind::FiniteMatrix { size, .. } => {
                Payload::Modular(Matrix::identity(self.zmod().unwrap(), *size))
            }
            RingKind::Table(t) => Payload::Index(t.one),
        };
        self.wrap(p)
    }

    /// Wraps a payload after checking it is valid for this ring.
    pub fn element(&self, payload: Payload) -> Result<Element> {
        let ok = match (&self.0.kind, &payload) {
            (RingKind::Modular { n }, Payload::Residue(r)) => r < n,
            (
                RingKind::Matrix {
                    field: ScalarField::Rationals,
                    size,
                },
                Payload::Rational(m),
            ) => m.rows() == *size && m.cols() == *size,
            (RingKind::Matrix { size, .. } | RingKind::FiniteMatrix { size, .. }, Payload::Modular(m)) => {
                m.rows() == *size && m.cols() == *size && Some(m.scalars()) == self.zmod()
            }
            (RingKind::Table(t), Payload::Index(i)) => *i < t.order,
            _ => false,
        };
        if !ok {
            return Err(Error::InvalidElement(format!(
                "payload {payload:?} does not belong to {}",
                self.0.label
            )));
        }
        Ok(self.wrap(payload))
    }

    pub fn residue(&self, r: u64) -> Result<Element> {
        self.element(Payload::Residue(r))
    }

    pub fn index(&self, i: usize) -> Result<Element> {
        self.element(Payload::Index(i))
    }

    pub fn rational_matrix(&self, m: Matrix<Rationals>) -> Result<Element> {
        self.element(Payload::Rational(m))
    }

    pub fn modular_matrix(&self, m: Matrix<Zmod>) -> Result<Element> {
        self.element(Payload::Modular(m))
    }

    /// Parses an element literal: a decimal residue or table index, or a
    /// bracketed row-major matrix.
    pub fn parse_element(&self, lit: &str) -> Result<Element> {
        let lit = lit.trim();
        match &self.0.kind {
            RingKind::Modular { .. } => {
                let z = self.zmod().unwrap();
                Ok(self.wrap(Payload::Residue(z.parse(lit)?)))
            }
            RingKind::Matrix {
                field: ScalarField::Rationals,
                size,
            } => Ok(self.wrap(Payload::Rational(Matrix::parse(Rationals, lit, *size, *size)?))),
            RingKind::Matrix { size, .. } | RingKind::FiniteMatrix { size, .. } => {
                let z = self.zmod().unwrap();
                Ok(self.wrap(Payload::Modular(Matrix::parse(z, lit, *size, *size)?)))
            }
            RingKind::Table(t) => {
                let i: usize = lit
                    .parse()
                    .map_err(|_| Error::InvalidElement(format!("not a table index: {lit:?}")))?;
                if i >= t.order {
                    return Err(Error::InvalidElement(format!(
                        "index {i} out of range [0, {})",
                        t.order
                    )));
                }
                Ok(self.wrap(Payload::Index(i)))
            }
        }
    }

    /// The `i`-th element in canonical order (finite rings only). Matrices
    /// are ordered lexicographically by row-major entries.
    pub fn nth(&self, i: u128) -> Result<Element> {
        let card = self.cardinality().ok_or(Error::InfiniteRing)?;
        if i >= card {
            return Err(Error::InvalidElement(format!("position {i} out of range")));
        }
        let p = match &self.0.kind {
            RingKind::Modular { .. } => Payload::Residue(i as u64),
            RingKind::Table(_) => Payload::Index(i as usize),
            RingKind::Matrix { size, .. } | RingKind::FiniteMatrix { size, .. } => {
                let z = self.zmod().unwrap();
                let q = z.modulus() as u128;
                let len = size * size;
                let mut data = vec![0u64; len];
                let mut rest = i;
                for slot in data.iter_mut().rev() {
                    *slot = (rest % q) as u64;
                    rest /= q;
                }
                Payload::Modular(Matrix::from_vec(z, *size, *size, data))
            }
        };
        Ok(self.wrap(p))
    }

    /// Inverse of [`RingHandle::nth`].
    pub fn position(&self, e: &Element) -> Result<u128> {
        self.same(e)?;
        match &e.payload {
            Payload::Residue(r) => Ok(*r as u128),
            Payload::Index(i) => Ok(*i as u128),
            Payload::Modular(m) => {
                let q = m.scalars().modulus() as u128;
                Ok(m.data().iter().fold(0u128, |acc, &v| acc * q + v as u128))
            }
            Payload::Rational(_) => Err(Error::InfiniteRing),
        }
    }

    /// All elements in canonical order, refusing rings larger than `limit`.
    pub fn elements(&self, limit: u128) -> Result<Vec<Element>> {
        let card = self.cardinality().ok_or(Error::InfiniteRing)?;
        if card > limit {
            return Err(Error::CardinalityGuard(format!(
                "{} has {card} elements (limit {limit})",
                self.0.label
            )));
        }
        (0..card).map(|i| self.nth(i)).collect()
    }

    fn same(&self, e: &Element) -> Result<()> {
        if &e.ring == self {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    /// Exhaustive check of the ring axioms and, when present, the involution
    /// axioms. Returns a description of the first violation.
    pub fn check_axioms(&self, limit: u128) -> Result<std::result::Result<(), String>> {
        let elems = self.elements(limit)?;
        let zero = self.zero();
        let one = self.one();
        if zero == one {
            return Ok(Err("one equals zero".into()));
        }
        for x in &elems {
            if x.add(&zero)? != *x || x.mul(&one)? != *x || one.mul(x)? != *x {
                return Ok(Err(format!("identity law fails at {x}")));
            }
            if !x.add(&x.neg()?)?.is_zero() {
                return Ok(Err(format!("additive inverse fails at {x}")));
            }
            if self.has_involution() && x.star()?.star()? != *x {
                return Ok(Err(format!("(x*)* != x at {x}")));
            }
            for y in &elems {
                if x.add(y)? != y.add(x)? {
                    return Ok(Err(format!("addition not commutative at {x}, {y}")));
                }
                if self.has_involution() {
                    if x.mul(y)?.star()? != y.star()?.mul(&x.star()?)? {
                        return Ok(Err(format!("(xy)* != y*x* at {x}, {y}")));
                    }
                    if x.add(y)?.star()? != x.star()?.add(&y.star()?)? {
                        return Ok(Err(format!("(x+y)* != x*+y* at {x}, {y}")));
                    }
                }
                for z in &elems {
                    if x.add(y)?.add(z)? != x.add(&y.add(z)?)? {
                        return Ok(Err(format!("addition not associative at {x}, {y}, {z}")));
                    }
                    if x.mul(y)?.mul(z)? != x.mul(&y.mul(z)?)? {
                        return Ok(Err(format!("multiplication not associative at {x}, {y}, {z}")));
                    }
                    if x.mul(&y.add(z)?)? != x.mul(y)?.add(&x.mul(z)?)?
                        || y.add(z)?.mul(x)? != y.mul(x)?.add(&z.mul(x)?)?
                    {
                        return Ok(Err(format!("distributivity fails at {x}, {y}, {z}")));
                    }
                }
            }
        }
        Ok(Ok(()))
    }
}

fn check_size(size: usize) -> Result<()> {
    if size == 0 {
        return Err(Error::InvalidRing("matrix size must be positive".into()));
    }
    Ok(())
}

fn validate_table(t: &TableRing) -> Result<()> {
    let n = t.order;
    let bad = |m: String| Err(Error::InvalidTable(m));
    if n < 2 {
        return bad(format!("order {n} too small for a nontrivial ring"));
    }
    for (name, table) in [("add", &t.add), ("mul", &t.mul)] {
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return bad(format!("{name} table is not {n}x{n}"));
        }
        if table.iter().flatten().any(|&v| v >= n) {
            return bad(format!("{name} table is not closed"));
        }
    }
    if t.zero >= n || t.one >= n || t.zero == t.one {
        return bad("zero/one indices invalid".into());
    }
    let (add, mul) = (&t.add, &t.mul);
    for x in 0..n {
        if add[x][t.zero] != x || add[t.zero][x] != x {
            return bad(format!("zero is not additive identity at {x}"));
        }
        if mul[x][t.one] != x || mul[t.one][x] != x {
            return bad(format!("one is not multiplicative identity at {x}"));
        }
        if !(0..n).any(|y| add[x][y] == t.zero) {
            return bad(format!("{x} has no additive inverse"));
        }
        for y in 0..n {
            if add[x][y] != add[y][x] {
                return bad(format!("addition not commutative at {x}, {y}"));
            }
            for z in 0..n {
                if add[add[x][y]][z] != add[x][add[y][z]] {
                    return bad(format!("addition not associative at {x}, {y}, {z}"));
                }
                if mul[mul[x][y]][z] != mul[x][mul[y][z]] {
                    return bad(format!("multiplication not associative at {x}, {y}, {z}"));
                }
                if mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]
                    || mul[add[y][z]][x] != add[mul[y][x]][mul[z][x]]
                {
                    return bad(format!("distributivity fails at {x}, {y}, {z}"));
                }
            }
        }
    }
    if let Some(star) = &t.star {
        if star.len() != n || star.iter().any(|&v| v >= n) {
            return bad("star table malformed".into());
        }
        for x in 0..n {
            if star[star[x]] != x {
                return bad(format!("star is not self-inverse at {x}"));
            }
            for y in 0..n {
                if star[add[x][y]] != add[star[x]][star[y]] {
                    return bad(format!("star not additive at {x}, {y}"));
                }
                if star[mul[x][y]] != mul[star[y]][star[x]] {
                    return bad(format!("star not anti-multiplicative at {x}, {y}"));
                }
            }
        }
    }
    Ok(())
}

impl Element {
    pub fn ring(&self) -> &RingHandle {
        &self.ring
    }

    pub fn payload(&self) -> &Payload {
        &self.payload
    }

    fn check(&self, other: &Element) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    fn table(&self) -> &TableRing {
        match &self.ring.0.kind {
            RingKind::Table(t) => t,
            _ => unreachable!("table payload outside a table ring"),
        }
    }

    fn modulus(&self) -> u64 {
        match self.ring.0.kind {
            RingKind::Modular { n } => n,
            _ => unreachable!("residue payload outside a modular ring"),
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.check(other)?;
        let p = match (&self.payload, &other.payload) {
            (Payload::Residue(x), Payload::Residue(y)) => Payload::Residue((x + y) % self.modulus()),
            (Payload::Rational(x), Payload::Rational(y)) => Payload::Rational(x.add(y)),
            (Payload::Modular(x), Payload::Modular(y)) => Payload::Modular(x.add(y)),
            (Payload::Index(x), Payload::Index(y)) => Payload::Index(self.table().add[*x][*y]),
            _ => return Err(Error::MixedRings),
        };
        Ok(self.ring.wrap(p))
    }

    pub fn mul(&self, other: &Element) -> Result<Element> {
        self.check(other)?;
        let p = match (&self.payload, &other.payload) {
            (Payload::Residue(x), Payload::Residue(y)) => Payload::Residue((x * y) % self.modulus()),
            (Payload::Rational(x), Payload::Rational(y)) => Payload::Rational(x.mul(y)),
            (Payload::Modular(x), Payload::Modular(y)) => Payload::Modular(x.mul(y)),
            (Payload::Index(x), Payload::Index(y)) => Payload::Index(self.table().mul[*x][*y]),
            _ => return Err(Error::MixedRings),
        };
        Ok(self.ring.wrap(p))
    }

    pub fn neg(&self) -> Result<Element> {
        let p = match &self.payload {
            Payload::Residue(x) => Payload::Residue((self.modulus() - x) % self.modulus()),
            Payload::Rational(x) => Payload::Rational(x.neg()),
            Payload::Modular(x) => Payload::Modular(x.neg()),
            Payload::Index(x) => {
                let t = self.table();
                let y = (0..t.order).find(|&y| t.add[*x][y] == t.zero).expect("validated table");
                Payload::Index(y)
            }
        };
        Ok(self.ring.wrap(p))
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.add(&other.neg()?)
    }

    pub fn star(&self) -> Result<Element> {
        match self.ring.involution() {
            Involution::None => Err(Error::NoInvolution),
            Involution::Identity => Ok(self.clone()),
            Involution::Transpose => {
                let p = match &self.payload {
                    Payload::Rational(m) => Payload::Rational(m.transpose()),
                    Payload::Modular(m) => Payload::Modular(m.transpose()),
                    _ => unreachable!("transpose on a non-matrix ring"),
                };
                Ok(self.ring.wrap(p))
            }
            Involution::StarTable => {
                let Payload::Index(i) = self.payload else {
                    unreachable!("star table on a non-table ring")
                };
                let star = self.table().star.as_ref().expect("validated star table");
                Ok(self.ring.wrap(Payload::Index(star[i])))
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        *self == self.ring.zero()
    }

    pub fn is_one(&self) -> bool {
        *self == self.ring.one()
    }

    /// The two-sided inverse, when it exists.
    pub fn is_unit(&self) -> Option<Element> {
        let p = match &self.payload {
            Payload::Residue(x) => Payload::Residue(Zmod::new(self.modulus()).ok()?.inv(x)?),
            Payload::Rational(m) => Payload::Rational(linalg::inverse(m)?),
            Payload::Modular(m) => Payload::Modular(modular_inverse(m)?),
            Payload::Index(x) => {
                let t = self.table();
                let y = (0..t.order).find(|&y| t.mul[*x][y] == t.one && t.mul[y][*x] == t.one)?;
                Payload::Index(y)
            }
        };
        Some(self.ring.wrap(p))
    }

    /// Literal form accepted by [`RingHandle::parse_element`].
    pub fn render(&self) -> String {
        match &self.payload {
            Payload::Residue(x) => x.to_string(),
            Payload::Index(x) => x.to_string(),
            Payload::Rational(m) => m.render(),
            Payload::Modular(m) => m.render(),
        }
    }
}

/// Inverse over `ℤ/n` through the adjugate: invertible iff the determinant is
/// a unit.
fn modular_inverse(m: &Matrix<Zmod>) -> Option<Matrix<Zmod>> {
    let z = m.scalars();
    let n = m.rows();
    let det_inv = z.inv(&determinant(m))?;
    let mut inv = Matrix::zeros(z, n, n);
    for i in 0..n {
        for j in 0..n {
            let cof = determinant(&minor(m, j, i));
            let signed = if (i + j) % 2 == 0 { cof } else { z.neg(&cof) };
            inv.set(i, j, z.mul(&signed, &det_inv));
        }
    }
    debug_assert_eq!(m.mul(&inv), Matrix::identity(z, n));
    Some(inv)
}

fn minor(m: &Matrix<Zmod>, skip_row: usize, skip_col: usize) -> Matrix<Zmod> {
    let n = m.rows();
    let data = (0..n)
        .filter(|&i| i != skip_row)
        .flat_map(|i| (0..n).filter(move |&j| j != skip_col).map(move |j| (i, j)))
        .map(|(i, j)| *m.get(i, j))
        .collect();
    Matrix::from_vec(m.scalars(), n - 1, n - 1, data)
}

fn determinant(m: &Matrix<Zmod>) -> u64 {
    let z = m.scalars();
    match m.rows() {
        0 => 1,
        1 => *m.get(0, 0),
        n => (0..n).fold(0, |acc, j| {
            let term = z.mul(m.get(0, j), &determinant(&minor(m, 0, j)));
            if j % 2 == 0 {
                z.add(&acc, &term)
            } else {
                z.sub(&acc, &term)
            }
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z6() -> RingHandle {
        RingHandle::modular(6).unwrap()
    }

    #[test]
    fn modular_arithmetic_examples() {
        let r = z6();
        let two = r.residue(2).unwrap();
        let four = r.residue(4).unwrap();
        assert_eq!(two.mul(&four).unwrap(), two);
        let five = r.residue(5).unwrap();
        assert_eq!(five.star().unwrap(), five);
        assert_eq!(five.is_unit(), Some(five.clone()));
        assert_eq!(two.is_unit(), None);
    }

    #[test]
    fn matrix_examples() {
        let r = RingHandle::rational_matrices(2).unwrap();
        let a = r.parse_element("[[1,2],[3,4]]").unwrap();
        assert_eq!(a.star().unwrap(), r.parse_element("[[1,3],[2,4]]").unwrap());
        let u = r.parse_element("[[1,1],[0,1]]").unwrap();
        assert_eq!(u.is_unit().unwrap(), r.parse_element("[[1,-1],[0,1]]").unwrap());
    }

    #[test]
    fn mixed_rings_rejected() {
        let a = z6().residue(1).unwrap();
        let b = RingHandle::modular(7).unwrap().residue(1).unwrap();
        assert_eq!(a.add(&b), Err(Error::MixedRings));
        assert_eq!(a.mul(&b), Err(Error::MixedRings));
    }

    #[test]
    fn no_involution() {
        let r = z6().with_involution(Involution::None).unwrap();
        assert_eq!(r.one().star(), Err(Error::NoInvolution));
        assert!(z6().with_involution(Involution::Transpose).is_err());
    }

    #[test]
    fn spec_strings() {
        assert_eq!(RingHandle::parse("zn:6").unwrap().cardinality(), Some(6));
        assert_eq!(RingHandle::parse("mat:q:3").unwrap().cardinality(), None);
        assert_eq!(RingHandle::parse("mat:zp:2:2").unwrap().cardinality(), Some(16));
        assert_eq!(RingHandle::parse("mat:zn:4:3").unwrap().cardinality(), Some(262_144));
        assert!(RingHandle::parse("mat:zp:4:2").is_err());
        assert!(RingHandle::parse("zn:1").is_err());
        assert!(RingHandle::parse("zn:x").is_err());
        assert!(RingHandle::parse("poly:3").is_err());
    }

    #[test]
    fn modular_matrix_units() {
        let r = RingHandle::modular_matrices(4, 2).unwrap();
        let a = r.parse_element("[[1,2],[1,3]]").unwrap();
        let inv = a.is_unit().unwrap();
        assert!(a.mul(&inv).unwrap().is_one());
        let b = r.parse_element("[[2,0],[0,1]]").unwrap();
        assert!(b.is_unit().is_none());
    }

    #[test]
    fn enumeration_order_and_positions() {
        let r = RingHandle::modular_matrices(2, 2).unwrap();
        let elems = r.elements(100).unwrap();
        assert_eq!(elems.len(), 16);
        assert_eq!(elems[1].render(), "[[0,0],[0,1]]");
        assert_eq!(elems[8].render(), "[[1,0],[0,0]]");
        for (i, e) in elems.iter().enumerate() {
            assert_eq!(r.position(e).unwrap(), i as u128);
        }
        assert!(matches!(
            RingHandle::modular_matrices(4, 3).unwrap().elements(100_000),
            Err(Error::CardinalityGuard(_))
        ));
    }

    #[test]
    fn axioms_hold_for_builtin_rings() {
        for spec in ["zn:6", "zn:8", "mat:zn:2:2", "mat:zp:3:1"] {
            let r = RingHandle::parse(spec).unwrap();
            assert_eq!(r.check_axioms(1000).unwrap(), Ok(()), "{spec}");
        }
    }

    fn z2_table() -> TableRing {
        TableRing {
            order: 2,
            add: vec![vec![0, 1], vec![1, 0]],
            mul: vec![vec![0, 0], vec![0, 1]],
            zero: 0,
            one: 1,
            star: Some(vec![0, 1]),
        }
    }

    #[test]
    fn table_ring_validation() {
        let r = RingHandle::table(z2_table(), "f2").unwrap();
        assert_eq!(r.involution(), Involution::StarTable);
        assert_eq!(r.check_axioms(10).unwrap(), Ok(()));

        let mut t = z2_table();
        t.mul = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(RingHandle::table(t, "bad"), Err(Error::InvalidTable(_))));

        let mut t = z2_table();
        t.add[0][1] = 2;
        assert!(matches!(RingHandle::table(t, "bad"), Err(Error::InvalidTable(_))));
    }

    #[test]
    fn table_json_round_trip() {
        let json = serde_json::to_string(&z2_table()).unwrap();
        let r = RingHandle::table_from_json(&json, "f2").unwrap();
        let one = r.parse_element("1").unwrap();
        assert!(one.is_one());
        assert!(r.parse_element("2").is_err());
    }

    #[test]
    fn out_of_range_literals_rejected() {
        assert!(z6().parse_element("6").is_err());
        let m = RingHandle::parse("mat:zp:3:2").unwrap();
        assert!(m.parse_element("[[3,0],[0,0]]").is_err());
        assert!(m.parse_element("[[1,0,0],[0,0,0]]").is_err());
    }
}
