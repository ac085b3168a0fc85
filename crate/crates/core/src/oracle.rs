//! Definitional searches over an explicit universe of elements.
//!
//! These never use the closed-form expressions or existence criteria: each
//! one tests the defining identities of an inverse against every candidate.
//! They are the reference the engine is checked against.

use crate::backend::Backend;
use crate::error::{Error, Result};

/// `y ∈ (bRy) ∩ (yRc)`, `yab = b`, `cay = c`.
pub fn satisfies_bc_definition<B: Backend>(
    r: &B,
    y: &B::Elem,
    a: &B::Elem,
    b: &B::Elem,
    c: &B::Elem,
) -> bool {
    r.mul3(y, a, b) == *b
        && r.mul3(c, a, y) == *c
        && r.in_sandwich(y, b, y)
        && r.in_sandwich(y, y, c)
}

/// `yad = d = day`, `yR ⊆ dR`, `Ry ⊆ Rd`.
pub fn satisfies_along_definition<B: Backend>(r: &B, y: &B::Elem, a: &B::Elem, d: &B::Elem) -> Result<bool> {
    Ok(r.mul3(y, a, d) == *d
        && r.mul3(d, a, y) == *d
        && r.ideal_subset(&r.right_ideal(y), &r.right_ideal(d))?
        && r.ideal_subset(&r.left_ideal(y), &r.left_ideal(d))?)
}

fn unique<B: Backend>(r: &B, found: Vec<B::Elem>) -> Result<Option<B::Elem>> {
    match found.as_slice() {
        [] => Ok(None),
        [y] => Ok(Some(y.clone())),
        [y1, y2, ..] => Err(Error::UniquenessViolation(r.render(y1), r.render(y2))),
    }
}

/// The unique `(b,c)`-inverse of `a` found by search, erroring if two exist.
pub fn brute_force_bc<B: Backend>(
    r: &B,
    universe: &[B::Elem],
    a: &B::Elem,
    b: &B::Elem,
    c: &B::Elem,
) -> Result<Option<B::Elem>> {
    let found = universe
        .iter()
        .filter(|y| satisfies_bc_definition(r, y, a, b, c))
        .cloned()
        .collect();
    unique(r, found)
}

/// The unique inverse of `a` along `d`, by search.
pub fn brute_force_along<B: Backend>(
    r: &B,
    universe: &[B::Elem],
    a: &B::Elem,
    d: &B::Elem,
) -> Result<Option<B::Elem>> {
    let mut found = Vec::new();
    for y in universe {
        if satisfies_along_definition(r, y, a, d)? {
            found.push(y.clone());
        }
    }
    unique(r, found)
}

/// `Rx ⊆ Rc` and `xab = b`.
pub fn is_left_bc<B: Backend>(r: &B, x: &B::Elem, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<bool> {
    Ok(r.mul3(x, a, b) == *b && r.ideal_subset(&r.left_ideal(x), &r.left_ideal(c))?)
}

/// `yR ⊆ bR` and `cay = c`.
pub fn is_right_bc<B: Backend>(r: &B, y: &B::Elem, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<bool> {
    Ok(r.mul3(c, a, y) == *c && r.ideal_subset(&r.right_ideal(y), &r.right_ideal(b))?)
}

pub fn all_left_bc<B: Backend>(
    r: &B,
    universe: &[B::Elem],
    a: &B::Elem,
    b: &B::Elem,
    c: &B::Elem,
) -> Result<Vec<B::Elem>> {
    let mut out = Vec::new();
    for x in universe {
        if is_left_bc(r, x, a, b, c)? {
            out.push(x.clone());
        }
    }
    Ok(out)
}

pub fn all_right_bc<B: Backend>(
    r: &B,
    universe: &[B::Elem],
    a: &B::Elem,
    b: &B::Elem,
    c: &B::Elem,
) -> Result<Vec<B::Elem>> {
    let mut out = Vec::new();
    for y in universe {
        if is_right_bc(r, y, a, b, c)? {
            out.push(y.clone());
        }
    }
    Ok(out)
}

/// Some `y` with `aya = a` that is also the `(b,c)`-inverse of `a`.
pub fn brute_force_inner_bc<B: Backend>(
    r: &B,
    universe: &[B::Elem],
    a: &B::Elem,
    b: &B::Elem,
    c: &B::Elem,
) -> Option<B::Elem> {
    universe
        .iter()
        .find(|y| r.mul3(a, y, a) == *a && satisfies_bc_definition(r, y, a, b, c))
        .cloned()
}

/// Group inverse by search: `axa = a`, `xax = x`, `ax = xa`.
pub fn brute_force_group<B: Backend>(r: &B, universe: &[B::Elem], a: &B::Elem) -> Option<B::Elem> {
    universe
        .iter()
        .find(|x| r.mul3(a, x, a) == *a && r.mul3(x, a, x) == **x && r.mul(a, x) == r.mul(x, a))
        .cloned()
}

/// Moore–Penrose inverse by search over the four Penrose equations.
pub fn brute_force_moore_penrose<B: Backend>(
    r: &B,
    universe: &[B::Elem],
    a: &B::Elem,
) -> Result<Option<B::Elem>> {
    for x in universe {
        if is_moore_penrose(r, x, a)? {
            return Ok(Some(x.clone()));
        }
    }
    Ok(None)
}

pub fn is_moore_penrose<B: Backend>(r: &B, x: &B::Elem, a: &B::Elem) -> Result<bool> {
    let ax = r.mul(a, x);
    let xa = r.mul(x, a);
    Ok(r.mul(&ax, a) == *a && r.mul(&xa, x) == *x && r.star(&ax)? == ax && r.star(&xa)? == xa)
}

/// `x ∈ a{1,3}`: `axa = a` and `(ax)* = ax`.
pub fn is_one_three<B: Backend>(r: &B, x: &B::Elem, a: &B::Elem) -> Result<bool> {
    let ax = r.mul(a, x);
    Ok(r.mul(&ax, a) == *a && r.star(&ax)? == ax)
}

/// `x ∈ a{1,4}`: `axa = a` and `(xa)* = xa`.
pub fn is_one_four<B: Backend>(r: &B, x: &B::Elem, a: &B::Elem) -> Result<bool> {
    let xa = r.mul(x, a);
    Ok(r.mul(a, &xa) == *a && r.star(&xa)? == xa)
}

/// Core inverse by search: `axa = a`, `xR = aR`, `Rx = Ra*`.
pub fn brute_force_core<B: Backend>(r: &B, universe: &[B::Elem], a: &B::Elem) -> Result<Option<B::Elem>> {
    let a_star = r.star(a)?;
    for x in universe {
        if r.mul3(a, x, a) == *a
            && r.ideal_eq(&r.right_ideal(x), &r.right_ideal(a))?
            && r.ideal_eq(&r.left_ideal(x), &r.left_ideal(&a_star))?
        {
            return Ok(Some(x.clone()));
        }
    }
    Ok(None)
}
