//! `(b,c)`-inverses, their existence criteria and their specialisations.
//!
//! Every operation evaluates all of the equivalent existence criteria that
//! apply to it and refuses to answer when they disagree: a disagreement can
//! only come from a defect in a backend, so it surfaces as
//! [`Error::CriteriaDisagreement`] rather than as a verdict.
//!
//! The closed form used throughout is `x = b·(cab)⁻·c` for an inner inverse
//! `(cab)⁻` of `cab`. The engine recomputes it with further inner inverses
//! (up to [`Engine::with_witness_checks`]) and requires the same value.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::backend::Backend;
use crate::error::{Error, Result};
use crate::oracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CriterionId {
    /// `b ∈ Rcab` and `c ∈ cabR`.
    DrazinIdeal,
    /// `c` regular, `a° ∩ bR = {0}`, `R = abR ⊕ c°` (and the left-handed dual).
    KccDecomp,
    /// `c` regular, `(ab)° = b°`, `R = abR ⊕ c°` (and the left-handed dual).
    AnnihilatorDecomp,
    /// `cab` regular, `b° = (cab)°`, `cR = cabR`.
    FormulaConditions,
    /// The four conditions built on `R = Rc ⊕ °(ab)` / `R = bR ⊕ (ca)°`.
    FiveWay,
    /// The value is the hybrid `(b,c)`-inverse.
    HybridDef,
    /// The value is the annihilator `(b,c)`-inverse.
    AnnihilatorDef,
    /// An inner inverse of `a` is the `(b,c)`-inverse.
    InnerOuter,
    /// `dR ⊆ daR` with `da` group invertible (and the left-handed dual).
    AlongGroup,
    /// `a²x = a` and `ya² = a` are solvable.
    GroupSolvable,
    /// `R = aR ⊕ a°` and `R = Ra ⊕ °a`.
    GroupDecomp,
    /// `aR = a²R`, `Ra*a = Ra`, `(a²)° = a°`.
    CoreIdeals,
    /// `a` has a group inverse and a `{1,3}`-inverse.
    GroupAndOneThree,
    /// `a` has a group inverse and a `{1,4}`-inverse.
    GroupAndOneFour,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseReport<E> {
    pub exists: bool,
    pub value: Option<E>,
    /// Drazin index, for Drazin reports only.
    pub index: Option<usize>,
    /// Whether `a` is a unit, for Drazin reports only.
    pub invertible: Option<bool>,
    pub criteria: BTreeMap<CriterionId, bool>,
    pub inner_inverse_used: Option<E>,
    pub definitional_check: bool,
}

/// Wire form of an [`InverseReport`], elements rendered as literals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportJson {
    pub exists: bool,
    pub value: Option<String>,
    pub index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invertible: Option<bool>,
    pub criteria: BTreeMap<CriterionId, bool>,
    pub inner_inverse_used: Option<String>,
    pub definitional_check: bool,
}

impl<E> InverseReport<E> {
    fn absent(criteria: BTreeMap<CriterionId, bool>) -> Self {
        InverseReport {
            exists: false,
            value: None,
            index: None,
            invertible: None,
            criteria,
            inner_inverse_used: None,
            definitional_check: false,
        }
    }

    pub fn to_json<B: Backend<Elem = E>>(&self, backend: &B) -> ReportJson {
        ReportJson {
            exists: self.exists,
            value: self.value.as_ref().map(|v| backend.render(v)),
            index: self.index,
            invertible: self.invertible,
            criteria: self.criteria.clone(),
            inner_inverse_used: self.inner_inverse_used.as_ref().map(|v| backend.render(v)),
            definitional_check: self.definitional_check,
        }
    }
}

/// Outcome of comparing the left and right `(b,c)`-inverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coincidence<E> {
    Both(E),
    OnlyLeft,
    OnlyRight,
    Neither,
}

fn agree(context: &str, verdicts: &[(&str, bool)]) -> Result<bool> {
    let first = verdicts[0].1;
    if verdicts.iter().all(|(_, v)| *v == first) {
        Ok(first)
    } else {
        let detail = verdicts
            .iter()
            .map(|(name, v)| format!("{name}={v}"))
            .collect::<Vec<_>>()
            .join(", ");
        Err(Error::disagreement(context, detail))
    }
}

pub struct Engine<'r, B: Backend> {
    r: &'r B,
    witness_checks: usize,
}

impl<'r, B: Backend> Engine<'r, B> {
    pub fn new(backend: &'r B) -> Self {
        Engine {
            r: backend,
            witness_checks: 2,
        }
    }

    /// Number of distinct inner inverses of `cab` the closed form is
    /// evaluated with (at least one).
    pub fn with_witness_checks(mut self, n: usize) -> Self {
        self.witness_checks = n.max(1);
        self
    }

    pub fn backend(&self) -> &'r B {
        self.r
    }

    fn render(&self, x: &B::Elem) -> String {
        self.r.render(x)
    }

    // Ideal vocabulary.

    /// `x ∈ aR`
    pub fn in_right(&self, x: &B::Elem, a: &B::Elem) -> Result<bool> {
        self.r.ideal_subset(&self.r.right_ideal(x), &self.r.right_ideal(a))
    }

    /// `x ∈ Ra`
    pub fn in_left(&self, x: &B::Elem, a: &B::Elem) -> Result<bool> {
        self.r.ideal_subset(&self.r.left_ideal(x), &self.r.left_ideal(a))
    }

    /// `xR = yR`
    pub fn right_eq(&self, x: &B::Elem, y: &B::Elem) -> Result<bool> {
        self.r.ideal_eq(&self.r.right_ideal(x), &self.r.right_ideal(y))
    }

    /// `Rx = Ry`
    pub fn left_eq(&self, x: &B::Elem, y: &B::Elem) -> Result<bool> {
        self.r.ideal_eq(&self.r.left_ideal(x), &self.r.left_ideal(y))
    }

    /// `x° = y°`
    pub fn right_ann_eq(&self, x: &B::Elem, y: &B::Elem) -> Result<bool> {
        self.r.ideal_eq(&self.r.right_annihilator(x), &self.r.right_annihilator(y))
    }

    /// `°x = °y`
    pub fn left_ann_eq(&self, x: &B::Elem, y: &B::Elem) -> Result<bool> {
        self.r.ideal_eq(&self.r.left_annihilator(x), &self.r.left_annihilator(y))
    }

    /// `R = xR ⊕ y°`
    pub fn right_split(&self, x: &B::Elem, y: &B::Elem) -> Result<bool> {
        self.r.is_direct_sum(&self.r.right_ideal(x), &self.r.right_annihilator(y))
    }

    /// `R = Rx ⊕ °y`
    pub fn left_split(&self, x: &B::Elem, y: &B::Elem) -> Result<bool> {
        self.r.is_direct_sum(&self.r.left_ideal(x), &self.r.left_annihilator(y))
    }

    pub fn cab(&self, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> B::Elem {
        self.r.mul3(c, a, b)
    }

    // Existence criteria.

    /// `b ∈ Rcab` and `c ∈ cabR`.
    pub fn bc_exists_drazin(&self, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<bool> {
        let cab = self.cab(a, b, c);
        Ok(self.in_left(b, &cab)? && self.in_right(c, &cab)?)
    }

    /// Both sided forms of the decomposition criterion.
    pub fn kcc_items(&self, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<(bool, bool)> {
        let r = self.r;
        let ab = r.mul(a, b);
        let ca = r.mul(c, a);
        let right = r.is_regular(c)
            && r.meet_is_zero(&r.right_annihilator(a), &r.right_ideal(b))?
            && self.right_split(&ab, c)?;
        let left = r.is_regular(b)
            && r.meet_is_zero(&r.left_annihilator(a), &r.left_ideal(c))?
            && self.left_split(&ca, b)?;
        Ok((right, left))
    }

    pub fn bc_exists_kcc(&self, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<bool> {
        let (right, left) = self.kcc_items(a, b, c)?;
        agree("bc_exists_kcc", &[("right", right), ("left", left)])
    }

    pub fn annihilator_items(&self, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<(bool, bool)> {
        let r = self.r;
        let ab = r.mul(a, b);
        let ca = r.mul(c, a);
        let right = r.is_regular(c) && self.right_ann_eq(&ab, b)? && self.right_split(&ab, c)?;
        let left = r.is_regular(b) && self.left_ann_eq(&ca, c)? && self.left_split(&ca, b)?;
        Ok((right, left))
    }

    pub fn bc_exists_annihilator(&self, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<bool> {
        let (right, left) = self.annihilator_items(a, b, c)?;
        agree("bc_exists_annihilator", &[("right", right), ("left", left)])
    }

    /// `cab` regular, `b° = (cab)°` and `cR = cabR`.
    pub fn formula_conditions(&self, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<bool> {
        let cab = self.cab(a, b, c);
        Ok(self.r.is_regular(&cab) && self.right_ann_eq(b, &cab)? && self.right_eq(c, &cab)?)
    }

    /// Items (2)–(5) of the five-way characterisation. Items (4) and (5)
    /// use `g` as the inner inverse of `cab`.
    pub fn fiveway_items(
        &self,
        a: &B::Elem,
        b: &B::Elem,
        c: &B::Elem,
        g: Option<&B::Elem>,
    ) -> Result<[bool; 4]> {
        let r = self.r;
        let ab = r.mul(a, b);
        let ca = r.mul(c, a);
        let cab = r.mul(&ca, b);
        let b_reg = r.is_regular(b);
        let c_reg = r.is_regular(c);
        let left_sum = r.is_direct_sum(&r.left_ideal(c), &r.left_annihilator(&ab))?;
        let right_sum = r.is_direct_sum(&r.right_ideal(b), &r.right_annihilator(&ca))?;
        let rb_rab = self.left_eq(b, &ab)?;
        let cr_car = self.right_eq(c, &ca)?;
        let item2 = b_reg && c_reg && self.left_ann_eq(c, &cab)? && left_sum && rb_rab;
        let item3 = b_reg && c_reg && self.right_ann_eq(b, &cab)? && right_sum && cr_car;
        let (item4, item5) = match g {
            Some(g) => {
                let x = r.mul3(b, g, c);
                (
                    self.in_left(c, &x)? && left_sum && rb_rab,
                    self.in_right(b, &x)? && right_sum && cr_car,
                )
            }
            None => (false, false),
        };
        Ok([item2, item3, item4, item5])
    }

    pub fn bc_exists_fiveway(&self, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<bool> {
        let g = self.r.inner_inverse(&self.cab(a, b, c));
        let [i2, i3, i4, i5] = self.fiveway_items(a, b, c, g.as_ref())?;
        agree(
            "bc_exists_fiveway",
            &[("item2", i2), ("item3", i3), ("item4", i4), ("item5", i5)],
        )
    }

    // Definitional predicates.

    /// `yay = y`, `yR = bR`, `Ry = Rc`.
    pub fn is_bc_inverse(&self, y: &B::Elem, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<bool> {
        Ok(self.r.mul3(y, a, y) == *y && self.right_eq(y, b)? && self.left_eq(y, c)?)
    }

    /// `yay = y`, `yR = bR`, `y° = c°`.
    pub fn is_hybrid_bc(&self, y: &B::Elem, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<bool> {
        Ok(self.r.mul3(y, a, y) == *y && self.right_eq(y, b)? && self.right_ann_eq(y, c)?)
    }

    /// `yay = y`, `°y = °b`, `y° = c°`.
    pub fn is_annihilator_bc(&self, y: &B::Elem, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<bool> {
        Ok(self.r.mul3(y, a, y) == *y && self.left_ann_eq(y, b)? && self.right_ann_eq(y, c)?)
    }

    /// `b·g·c` for the backend's inner inverse `g` of `cab`.
    pub fn formula_value(&self, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<(B::Elem, B::Elem)> {
        let cab = self.cab(a, b, c);
        let g = self
            .r
            .inner_inverse(&cab)
            .ok_or_else(|| Error::NotRegular(format!("cab = {}", self.render(&cab))))?;
        Ok((self.r.mul3(b, &g, c), g))
    }

    pub fn bc_inverse(&self, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<InverseReport<B::Elem>> {
        let r = self.r;
        let drazin = self.bc_exists_drazin(a, b, c)?;
        let kcc = self.bc_exists_kcc(a, b, c)?;
        let ann = self.bc_exists_annihilator(a, b, c)?;
        let formula = self.formula_conditions(a, b, c)?;
        let five = self.bc_exists_fiveway(a, b, c)?;
        let exists = agree(
            "bc_inverse",
            &[
                ("DrazinIdeal", drazin),
                ("KccDecomp", kcc),
                ("AnnihilatorDecomp", ann),
                ("FormulaConditions", formula),
                ("FiveWay", five),
            ],
        )?;
        let mut criteria = BTreeMap::from([
            (CriterionId::DrazinIdeal, drazin),
            (CriterionId::KccDecomp, kcc),
            (CriterionId::AnnihilatorDecomp, ann),
            (CriterionId::FormulaConditions, formula),
            (CriterionId::FiveWay, five),
        ]);
        if !exists {
            return Ok(InverseReport::absent(criteria));
        }

        let (y, g) = self.formula_value(a, b, c)?;
        let definitional =
            oracle::satisfies_bc_definition(r, &y, a, b, c) && self.is_bc_inverse(&y, a, b, c)?;
        if !definitional {
            return Err(Error::disagreement(
                "bc_inverse",
                format!("criteria hold but b(cab)⁻c = {} fails the definition", self.render(&y)),
            ));
        }
        let cab = self.cab(a, b, c);
        for g2 in r.inner_inverse_witnesses(&cab, self.witness_checks) {
            let y2 = r.mul3(b, &g2, c);
            if y2 != y {
                return Err(Error::disagreement(
                    "bc_inverse",
                    format!(
                        "value depends on the inner inverse: {} vs {}",
                        self.render(&y),
                        self.render(&y2)
                    ),
                ));
            }
        }
        let hybrid = self.is_hybrid_bc(&y, a, b, c)?;
        let annihilator = self.is_annihilator_bc(&y, a, b, c)?;
        agree(
            "bc_inverse value",
            &[("exists", true), ("HybridDef", hybrid), ("AnnihilatorDef", annihilator)],
        )?;
        criteria.insert(CriterionId::HybridDef, hybrid);
        criteria.insert(CriterionId::AnnihilatorDef, annihilator);
        Ok(InverseReport {
            exists: true,
            value: Some(y),
            index: None,
            invertible: None,
            criteria,
            inner_inverse_used: Some(g),
            definitional_check: true,
        })
    }

    // One-sided inverses.

    /// `Rx ⊆ Rc`, `xab = b`.
    pub fn is_left_bc(&self, x: &B::Elem, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<bool> {
        oracle::is_left_bc(self.r, x, a, b, c)
    }

    /// `yR ⊆ bR`, `cay = c`.
    pub fn is_right_bc(&self, y: &B::Elem, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<bool> {
        oracle::is_right_bc(self.r, y, a, b, c)
    }

    /// Left `(b,c)`-invertibility: some `x = sc` solves `scab = b`, i.e.
    /// `b ∈ Rcab`.
    pub fn is_left_invertible(&self, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<bool> {
        self.in_left(b, &self.cab(a, b, c))
    }

    /// Right `(b,c)`-invertibility: `c ∈ cabR`.
    pub fn is_right_invertible(&self, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<bool> {
        self.in_right(c, &self.cab(a, b, c))
    }

    fn cab_inner(&self, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<B::Elem> {
        let cab = self.cab(a, b, c);
        self.r
            .inner_inverse(&cab)
            .ok_or_else(|| Error::NotRegular(format!("cab = {}", self.render(&cab))))
    }

    /// `b(cab)⁻c + v[1 − cab(cab)⁻]c`.
    pub fn left_bc_family(&self, a: &B::Elem, b: &B::Elem, c: &B::Elem, v: &B::Elem) -> Result<B::Elem> {
        if !self.is_left_invertible(a, b, c)? {
            return Err(Error::NotOneSidedInvertible("no left (b,c)-inverse".into()));
        }
        let g = self.cab_inner(a, b, c)?;
        self.left_bc_family_with(a, b, c, &g, v)
    }

    /// The left family for a caller-chosen inner inverse `g` of `cab`.
    pub fn left_bc_family_with(
        &self,
        a: &B::Elem,
        b: &B::Elem,
        c: &B::Elem,
        g: &B::Elem,
        v: &B::Elem,
    ) -> Result<B::Elem> {
        let r = self.r;
        let cab = self.cab(a, b, c);
        let proj = r.sub(&r.one(), &r.mul(&cab, g));
        let x = r.add(&r.mul3(b, g, c), &r.mul3(v, &proj, c));
        if !self.is_left_bc(&x, a, b, c)? {
            return Err(Error::disagreement(
                "left_bc_family",
                format!("{} is not a left (b,c)-inverse", self.render(&x)),
            ));
        }
        Ok(x)
    }

    /// `b(cab)⁻c + b[1 − (cab)⁻cab]u`.
    pub fn right_bc_family(&self, a: &B::Elem, b: &B::Elem, c: &B::Elem, u: &B::Elem) -> Result<B::Elem> {
        if !self.is_right_invertible(a, b, c)? {
            return Err(Error::NotOneSidedInvertible("no right (b,c)-inverse".into()));
        }
        let g = self.cab_inner(a, b, c)?;
        self.right_bc_family_with(a, b, c, &g, u)
    }

    pub fn right_bc_family_with(
        &self,
        a: &B::Elem,
        b: &B::Elem,
        c: &B::Elem,
        g: &B::Elem,
        u: &B::Elem,
    ) -> Result<B::Elem> {
        let r = self.r;
        let cab = self.cab(a, b, c);
        let proj = r.sub(&r.one(), &r.mul(g, &cab));
        let y = r.add(&r.mul3(b, g, c), &r.mul3(b, &proj, u));
        if !self.is_right_bc(&y, a, b, c)? {
            return Err(Error::disagreement(
                "right_bc_family",
                format!("{} is not a right (b,c)-inverse", self.render(&y)),
            ));
        }
        Ok(y)
    }

    pub fn left_right_coincide(&self, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<Coincidence<B::Elem>> {
        let left = self.is_left_invertible(a, b, c)?;
        let right = self.is_right_invertible(a, b, c)?;
        match (left, right) {
            (false, false) => Ok(Coincidence::Neither),
            (true, false) => Ok(Coincidence::OnlyLeft),
            (false, true) => Ok(Coincidence::OnlyRight),
            (true, true) => {
                let zero = self.r.zero();
                let x = self.left_bc_family(a, b, c, &zero)?;
                let y = self.right_bc_family(a, b, c, &zero)?;
                let two_sided = self.bc_inverse(a, b, c)?;
                if x != y || two_sided.value.as_ref() != Some(&x) || !self.is_right_bc(&x, a, b, c)? {
                    return Err(Error::disagreement(
                        "left_right_coincide",
                        format!("left {} and right {} differ", self.render(&x), self.render(&y)),
                    ));
                }
                Ok(Coincidence::Both(x))
            }
        }
    }

    /// `y` is a left `(b,c)`-inverse of `a` iff `y*` is a right
    /// `(c*,b*)`-inverse of `a*`.
    pub fn star_duality_check(&self, y: &B::Elem, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<bool> {
        let r = self.r;
        let left = self.is_left_bc(y, a, b, c)?;
        let right = self.is_right_bc(&r.star(y)?, &r.star(a)?, &r.star(c)?, &r.star(b)?)?;
        Ok(left == right)
    }

    /// With `bR = uR` and `Rc = Rv`, the `(b,c)`- and `(u,v)`-inverses of
    /// `a` exist together and coincide.
    pub fn generator_invariance(
        &self,
        a: &B::Elem,
        b: &B::Elem,
        c: &B::Elem,
        u: &B::Elem,
        v: &B::Elem,
    ) -> Result<bool> {
        if !self.right_eq(b, u)? || !self.left_eq(c, v)? {
            return Err(Error::HypothesisFailed("need bR = uR and Rc = Rv".into()));
        }
        let bc = self.bc_inverse(a, b, c)?;
        let uv = self.bc_inverse(a, u, v)?;
        Ok(bc.exists == uv.exists && bc.value == uv.value)
    }

    // Specialisations.

    pub fn inverse_along(&self, a: &B::Elem, d: &B::Elem) -> Result<InverseReport<B::Elem>> {
        let r = self.r;
        let mut report = self.bc_inverse(a, d, d)?;
        let ad = r.mul(a, d);
        let da = r.mul(d, a);
        let group_ad = self.group_inverse(&ad)?;
        let group_da = self.group_inverse(&da)?;
        let via_da = group_da.exists && self.r.ideal_subset(&r.right_ideal(d), &r.right_ideal(&da))?;
        let via_ad = group_ad.exists && self.r.ideal_subset(&r.left_ideal(d), &r.left_ideal(&ad))?;
        agree(
            "inverse_along",
            &[("bc_inverse", report.exists), ("via_da", via_da), ("via_ad", via_ad)],
        )?;
        report.criteria.insert(CriterionId::AlongGroup, via_da);
        if let Some(y) = &report.value {
            if !oracle::satisfies_along_definition(r, y, a, d)? {
                return Err(Error::disagreement(
                    "inverse_along",
                    format!("{} fails yad = d = day", self.render(y)),
                ));
            }
        }
        if let (Some(y), Some(g)) = (&report.value, &group_ad.value) {
            if r.mul(d, g) != *y {
                return Err(Error::disagreement("inverse_along", "d(ad)# differs"));
            }
        }
        if let (Some(y), Some(g)) = (&report.value, &group_da.value) {
            if r.mul(g, d) != *y {
                return Err(Error::disagreement("inverse_along", "(da)#d differs"));
            }
        }
        Ok(report)
    }

    pub fn group_inverse(&self, a: &B::Elem) -> Result<InverseReport<B::Elem>> {
        let r = self.r;
        let mut report = self.bc_inverse(a, a, a)?;
        let a2 = r.mul(a, a);
        let solvable = self.in_right(a, &a2)? && self.in_left(a, &a2)?;
        let right_split = self.right_split(a, a)?;
        let left_split = self.left_split(a, a)?;
        agree(
            "group_inverse",
            &[
                ("bc_inverse", report.exists),
                ("GroupSolvable", solvable),
                ("aR+a°", right_split),
                ("Ra+°a", left_split),
            ],
        )?;
        report.criteria.insert(CriterionId::GroupSolvable, solvable);
        report.criteria.insert(CriterionId::GroupDecomp, right_split);
        if let Some(x) = &report.value {
            let ok = r.mul3(a, x, a) == *a && r.mul3(x, a, x) == *x && r.mul(a, x) == r.mul(x, a);
            if !ok {
                return Err(Error::disagreement(
                    "group_inverse",
                    format!("{} is not a commuting reflexive inverse", self.render(x)),
                ));
            }
        }
        Ok(report)
    }

    /// The `(a*,a*)`-inverse, checked against the four Penrose equations.
    pub fn moore_penrose(&self, a: &B::Elem) -> Result<InverseReport<B::Elem>> {
        let r = self.r;
        let a_star = r.star(a)?;
        let report = self.bc_inverse(a, &a_star, &a_star)?;
        if let Some(x) = &report.value {
            let ideals = r.mul3(a, x, a) == *a && self.right_eq(x, &a_star)? && self.left_eq(x, &a_star)?;
            if !oracle::is_moore_penrose(r, x, a)? || !ideals {
                return Err(Error::disagreement(
                    "moore_penrose",
                    format!("{} fails the Penrose equations", self.render(x)),
                ));
            }
        }
        Ok(report)
    }

    /// The `(a,a*)`-inverse.
    pub fn core_inverse(&self, a: &B::Elem) -> Result<InverseReport<B::Elem>> {
        let r = self.r;
        let a_star = r.star(a)?;
        let mut report = self.inner_outer_bc(a, a, &a_star)?;
        let a2 = r.mul(a, a);
        let core_ideals = self.right_eq(a, &a2)?
            && self.left_eq(&r.mul(&a_star, a), a)?
            && self.right_ann_eq(&a2, a)?;
        let group_and_13 = self.group_inverse(a)?.exists && self.one_three_inverse(a)?.is_some();
        agree(
            "core_inverse",
            &[
                ("exists", report.exists),
                ("CoreIdeals", core_ideals),
                ("GroupAndOneThree", group_and_13),
            ],
        )?;
        report.criteria.insert(CriterionId::CoreIdeals, core_ideals);
        report.criteria.insert(CriterionId::GroupAndOneThree, group_and_13);
        Ok(report)
    }

    /// The `(a*,a)`-inverse.
    pub fn dual_core_inverse(&self, a: &B::Elem) -> Result<InverseReport<B::Elem>> {
        let r = self.r;
        let a_star = r.star(a)?;
        let mut report = self.inner_outer_bc(a, &a_star, a)?;
        let group_and_14 = self.group_inverse(a)?.exists && self.one_four_inverse(a)?.is_some();
        agree(
            "dual_core_inverse",
            &[("exists", report.exists), ("GroupAndOneFour", group_and_14)],
        )?;
        report.criteria.insert(CriterionId::GroupAndOneFour, group_and_14);
        Ok(report)
    }

    /// A `{1,3}`-inverse `x = ((a*a)⁻)*·a*`, present iff `a ∈ Ra*a`.
    pub fn one_three_inverse(&self, a: &B::Elem) -> Result<Option<B::Elem>> {
        let r = self.r;
        let a_star = r.star(a)?;
        let asa = r.mul(&a_star, a);
        let exists = self.in_left(a, &asa)?;
        let split = r.is_direct_sum(&r.left_ideal(&a_star), &r.left_annihilator(a))?;
        if !agree("one_three_inverse", &[("a∈Ra*a", exists), ("R=Ra*+°a", split)])? {
            return Ok(None);
        }
        let g = r
            .inner_inverse(&asa)
            .ok_or_else(|| Error::NotRegular(format!("a*a = {}", self.render(&asa))))?;
        let x = r.mul(&r.star(&g)?, &a_star);
        if r.mul3(&r.star(&x)?, &a_star, a) != *a || !oracle::is_one_three(r, &x, a)? {
            return Err(Error::disagreement(
                "one_three_inverse",
                format!("{} is not a {{1,3}}-inverse", self.render(&x)),
            ));
        }
        Ok(Some(x))
    }

    /// A `{1,4}`-inverse `y = a*·((aa*)⁻)*`, present iff `a ∈ aa*R`.
    pub fn one_four_inverse(&self, a: &B::Elem) -> Result<Option<B::Elem>> {
        let r = self.r;
        let a_star = r.star(a)?;
        let aas = r.mul(a, &a_star);
        let exists = self.in_right(a, &aas)?;
        let split = r.is_direct_sum(&r.right_ideal(&a_star), &r.right_annihilator(a))?;
        if !agree("one_four_inverse", &[("a∈aa*R", exists), ("R=a*R+a°", split)])? {
            return Ok(None);
        }
        let g = r
            .inner_inverse(&aas)
            .ok_or_else(|| Error::NotRegular(format!("aa* = {}", self.render(&aas))))?;
        let y = r.mul(&a_star, &r.star(&g)?);
        if r.mul3(a, &a_star, &r.star(&y)?) != *a || !oracle::is_one_four(r, &y, a)? {
            return Err(Error::disagreement(
                "one_four_inverse",
                format!("{} is not a {{1,4}}-inverse", self.render(&y)),
            ));
        }
        Ok(Some(y))
    }

    /// Smallest `k` with an `(a^k,a^k)`-inverse; `k = 1` for units.
    pub fn drazin_inverse(&self, a: &B::Elem) -> Result<InverseReport<B::Elem>> {
        let r = self.r;
        let bound = r.drazin_bound().max(1);
        let mut ak = r.one();
        for k in 1..=bound {
            ak = r.mul(&ak, a);
            let mut report = self.bc_inverse(a, &ak, &ak)?;
            let Some(x) = report.value.clone() else {
                continue;
            };
            let ok = r.mul3(&ak, a, &x) == ak && r.mul3(&x, a, &x) == x && r.mul(a, &x) == r.mul(&x, a);
            if !ok {
                return Err(Error::disagreement(
                    "drazin_inverse",
                    format!("{} fails the Drazin equations at index {k}", self.render(&x)),
                ));
            }
            report.index = Some(k);
            report.invertible = Some(r.is_unit(a).is_some());
            return Ok(report);
        }
        Err(Error::IndexBoundExceeded(bound))
    }

    /// Items (2) and (3) of the inner-and-outer characterisation.
    pub fn inner_outer_items(&self, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<(bool, bool)> {
        let r = self.r;
        let a_reg = r.is_regular(a);
        let ab = r.mul(a, b);
        let ca = r.mul(c, a);
        let item2 = a_reg
            && self.right_eq(a, &ab)?
            && self.left_eq(&ca, a)?
            && self.right_ann_eq(&ab, b)?
            && self.left_ann_eq(&ca, c)?;
        let item3 = a_reg
            && r.is_direct_sum(&r.right_annihilator(a), &r.right_ideal(b))?
            && r.is_direct_sum(&r.left_annihilator(a), &r.left_ideal(c))?;
        Ok((item2, item3))
    }

    /// The `(b,c)`-inverse of `a` when it is also an inner inverse of `a`.
    pub fn inner_outer_bc(&self, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<InverseReport<B::Elem>> {
        let r = self.r;
        let (item2, item3) = self.inner_outer_items(a, b, c)?;
        let mut report = self.bc_inverse(a, b, c)?;
        let inner = report.value.as_ref().is_some_and(|y| r.mul3(a, y, a) == *a);
        let exists = agree(
            "inner_outer_bc",
            &[("item2", item2), ("item3", item3), ("inner value", inner)],
        )?;
        report.criteria.insert(CriterionId::InnerOuter, exists);
        if !exists {
            report.exists = false;
            report.value = None;
            report.inner_inverse_used = None;
            report.definitional_check = false;
        }
        Ok(report)
    }

    /// `y` with `aya = a`, `yay = y`, `yR = bR`, built as `b(ab)⁻`.
    pub fn inner_outer_right(&self, a: &B::Elem, b: &B::Elem) -> Result<Option<B::Elem>> {
        let r = self.r;
        let ab = r.mul(a, b);
        let a_reg = r.is_regular(a);
        let item2 = a_reg && self.right_eq(a, &ab)? && self.right_ann_eq(&ab, b)?;
        let item3 = a_reg && r.is_direct_sum(&r.right_annihilator(a), &r.right_ideal(b))?;
        if !agree("inner_outer_right", &[("item2", item2), ("item3", item3)])? {
            return Ok(None);
        }
        let g = r
            .inner_inverse(&ab)
            .ok_or_else(|| Error::NotRegular(format!("ab = {}", self.render(&ab))))?;
        let y = r.mul(b, &g);
        if r.mul3(a, &y, a) != *a || r.mul3(&y, a, &y) != y || !self.right_eq(&y, b)? {
            return Err(Error::disagreement("inner_outer_right", format!("b(ab)⁻ = {}", self.render(&y))));
        }
        Ok(Some(y))
    }

    /// `y` with `aya = a`, `yay = y`, `Ry = Rc`, built as `(ca)⁻c`.
    pub fn inner_outer_left(&self, a: &B::Elem, c: &B::Elem) -> Result<Option<B::Elem>> {
        let r = self.r;
        let ca = r.mul(c, a);
        let a_reg = r.is_regular(a);
        let item2 = a_reg && self.left_eq(&ca, a)? && self.left_ann_eq(&ca, c)?;
        let item3 = a_reg && r.is_direct_sum(&r.left_annihilator(a), &r.left_ideal(c))?;
        if !agree("inner_outer_left", &[("item2", item2), ("item3", item3)])? {
            return Ok(None);
        }
        let g = r
            .inner_inverse(&ca)
            .ok_or_else(|| Error::NotRegular(format!("ca = {}", self.render(&ca))))?;
        let y = r.mul(&g, c);
        if r.mul3(a, &y, a) != *a || r.mul3(&y, a, &y) != y || !self.left_eq(&y, c)? {
            return Err(Error::disagreement("inner_outer_left", format!("(ca)⁻c = {}", self.render(&y))));
        }
        Ok(Some(y))
    }

    /// `d·(ad)^#`, checked against `(da)^#·d` and the inverse along `d`.
    pub fn group_via_along(&self, a: &B::Elem, d: &B::Elem) -> Result<B::Elem> {
        let r = self.r;
        let along = self.inverse_along(a, d)?;
        let Some(y) = along.value else {
            return Err(Error::HypothesisFailed(format!(
                "{} is not invertible along {}",
                self.render(a),
                self.render(d)
            )));
        };
        let ad = self.group_inverse(&r.mul(a, d))?;
        let da = self.group_inverse(&r.mul(d, a))?;
        let (Some(ad), Some(da)) = (ad.value, da.value) else {
            return Err(Error::disagreement("group_via_along", "ad or da is not group invertible"));
        };
        let via_ad = r.mul(d, &ad);
        let via_da = r.mul(&da, d);
        if via_ad != y || via_da != y {
            return Err(Error::disagreement(
                "group_via_along",
                format!(
                    "d(ad)# = {}, (da)#d = {}, along = {}",
                    self.render(&via_ad),
                    self.render(&via_da),
                    self.render(&y)
                ),
            ));
        }
        Ok(via_ad)
    }

    /// The `(b,c)`-inverse computed as `d(ad)^#` for any `d` with
    /// `dR = bR` and `d° = c°`.
    pub fn bc_via_along(&self, a: &B::Elem, b: &B::Elem, c: &B::Elem, d: &B::Elem) -> Result<B::Elem> {
        if !self.right_eq(d, b)? || !self.right_ann_eq(d, c)? {
            return Err(Error::HypothesisFailed("need dR = bR and d° = c°".into()));
        }
        let bc = self.bc_inverse(a, b, c)?;
        let Some(y) = bc.value else {
            return Err(Error::HypothesisFailed("a is not (b,c)-invertible".into()));
        };
        let v = self.group_via_along(a, d)?;
        if v != y {
            return Err(Error::disagreement("bc_via_along", "d(ad)# differs from the (b,c)-inverse"));
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backend::{FiniteBackend, MatrixBackend};
    use crate::ring::RingHandle;
    use crate::scalar::Rationals;

    fn z6() -> FiniteBackend {
        FiniteBackend::new(&RingHandle::modular(6).unwrap()).unwrap()
    }

    fn q2() -> MatrixBackend<Rationals> {
        MatrixBackend::new(&RingHandle::rational_matrices(2).unwrap()).unwrap()
    }

    #[test]
    fn bc_inverse_in_z6() {
        let r = z6();
        let e = Engine::new(&r);
        let rep = e.bc_inverse(&2, &4, &4).unwrap();
        assert!(rep.exists);
        assert_eq!(rep.value, Some(2));
        assert!(rep.definitional_check);
        assert!(rep.criteria.values().all(|&v| v));

        let rep = e.bc_inverse(&2, &3, &3).unwrap();
        assert!(!rep.exists);
        assert!(rep.criteria.values().all(|&v| !v));

        assert_eq!(e.bc_inverse(&5, &1, &1).unwrap().value, Some(5));
    }

    #[test]
    fn existence_criteria_examples() {
        let r = z6();
        let e = Engine::new(&r);
        for (a, b, c, want) in [(2, 4, 4, true), (2, 3, 3, false), (3, 0, 0, true)] {
            assert_eq!(e.bc_exists_drazin(&a, &b, &c).unwrap(), want);
            assert_eq!(e.bc_exists_kcc(&a, &b, &c).unwrap(), want);
            assert_eq!(e.bc_exists_annihilator(&a, &b, &c).unwrap(), want);
            assert_eq!(e.bc_exists_fiveway(&a, &b, &c).unwrap(), want);
        }
    }

    #[test]
    fn definitional_predicates() {
        let r = z6();
        let e = Engine::new(&r);
        assert!(e.is_bc_inverse(&2, &2, &4, &4).unwrap());
        assert!(!e.is_bc_inverse(&4, &2, &4, &4).unwrap());
        for a in 0..6 {
            assert!(e.is_bc_inverse(&0, &a, &0, &0).unwrap());
        }
    }

    #[test]
    fn degenerate_triple_has_zero_inverse() {
        let r = z6();
        let e = Engine::new(&r);
        for a in 0..6 {
            assert_eq!(e.bc_inverse(&a, &0, &0).unwrap().value, Some(0));
        }
    }

    #[test]
    fn one_sided_families() {
        let r = z6();
        let e = Engine::new(&r);
        for v in 0..6 {
            assert_eq!(e.left_bc_family(&2, &4, &4, &v).unwrap(), 2);
            assert_eq!(e.right_bc_family(&2, &4, &4, &v).unwrap(), 2);
            assert_eq!(e.left_bc_family(&5, &1, &1, &v).unwrap(), 5);
        }
        assert!(matches!(
            e.left_bc_family(&2, &3, &3, &0),
            Err(Error::NotOneSidedInvertible(_))
        ));
        assert_eq!(e.left_right_coincide(&2, &4, &4).unwrap(), Coincidence::Both(2));
        assert_eq!(e.left_right_coincide(&5, &1, &1).unwrap(), Coincidence::Both(5));
        assert_eq!(e.left_right_coincide(&2, &3, &3).unwrap(), Coincidence::Neither);
    }

    #[test]
    fn generator_invariance_examples() {
        let r = z6();
        let e = Engine::new(&r);
        assert!(e.generator_invariance(&2, &4, &4, &2, &2).unwrap());
        assert_eq!(e.bc_inverse(&2, &2, &2).unwrap().value, Some(2));
        assert!(e.generator_invariance(&2, &1, &1, &5, &5).unwrap());
        assert!(matches!(
            e.generator_invariance(&2, &4, &4, &3, &4),
            Err(Error::HypothesisFailed(_))
        ));
    }

    #[test]
    fn along_and_group_in_z6() {
        let r = z6();
        let e = Engine::new(&r);
        assert_eq!(e.inverse_along(&2, &4).unwrap().value, Some(2));
        assert_eq!(e.inverse_along(&3, &0).unwrap().value, Some(0));
        assert_eq!(e.inverse_along(&5, &1).unwrap().value, Some(5));
        assert_eq!(e.group_inverse(&2).unwrap().value, Some(2));
        assert_eq!(e.group_via_along(&2, &4).unwrap(), 2);
        assert_eq!(e.group_via_along(&2, &2).unwrap(), 2);
        assert_eq!(e.group_via_along(&5, &1).unwrap(), 5);
        assert_eq!(e.bc_via_along(&2, &4, &4, &2).unwrap(), 2);
    }

    #[test]
    fn star_flavoured_in_z6() {
        let r = z6();
        let e = Engine::new(&r);
        assert_eq!(e.moore_penrose(&2).unwrap().value, Some(2));
        assert_eq!(e.one_three_inverse(&3).unwrap(), Some(3));
        let rep = e.drazin_inverse(&2).unwrap();
        assert_eq!((rep.value, rep.index), (Some(2), Some(1)));
        let rep = e.inner_outer_bc(&2, &4, &4).unwrap();
        assert_eq!(rep.value, Some(2));
    }

    #[test]
    fn matrix_examples() {
        let r = q2();
        let e = Engine::new(&r);
        let a = r.parse("[[2,0],[0,0]]").unwrap();
        let mp = e.moore_penrose(&a).unwrap();
        assert_eq!(mp.value, Some(r.parse("[[1/2,0],[0,0]]").unwrap()));

        let n = r.parse("[[0,1],[0,0]]").unwrap();
        assert!(!e.group_inverse(&n).unwrap().exists);
        assert!(!e.core_inverse(&n).unwrap().exists);
        let dz = e.drazin_inverse(&n).unwrap();
        assert_eq!((dz.value, dz.index), (Some(r.zero()), Some(2)));

        let x = e.one_three_inverse(&a).unwrap().unwrap();
        assert_eq!(a.mul(&x).mul(&a), a);

        let u = r.parse("[[1,1],[0,1]]").unwrap();
        let dz = e.drazin_inverse(&u).unwrap();
        assert_eq!(dz.value, r.is_unit(&u));
        assert_eq!((dz.index, dz.invertible), (Some(1), Some(true)));

        let p = r.parse("[[1,0],[0,0]]").unwrap();
        assert_eq!(e.inner_outer_bc(&p, &p, &p).unwrap().value, Some(p.clone()));
        assert_eq!(e.group_inverse(&p).unwrap().value, Some(p));

        let i = r.one();
        assert!(e.star_duality_check(&i, &i, &i, &i).unwrap());
    }

    #[test]
    fn no_involution_is_reported() {
        let ring = RingHandle::modular(6)
            .unwrap()
            .with_involution(crate::ring::Involution::None)
            .unwrap();
        let r = FiniteBackend::new(&ring).unwrap();
        let e = Engine::new(&r);
        assert_eq!(e.moore_penrose(&2).unwrap_err(), Error::NoInvolution);
        assert!(e.bc_inverse(&2, &4, &4).unwrap().exists);
    }

    #[test]
    fn report_json_layout() {
        let r = z6();
        let rep = Engine::new(&r).bc_inverse(&2, &4, &4).unwrap();
        let json = serde_json::to_string(&rep.to_json(&r)).unwrap();
        assert!(json.starts_with(r#"{"exists":true,"value":"2","index":null,"criteria":{"DrazinIdeal":true"#));
        assert!(json.ends_with(r#""inner_inverse_used":"2","definitional_check":true}"#));
    }
}
