//! One check per verified statement.
//!
//! Each check states the result as an agreement between independently
//! computed verdicts. Existence "truths" come from definitional search when
//! the ring is enumerable and from the engine (whose values are re-checked
//! against the definition) when it is sampled.

use std::collections::HashSet;

use rand_chacha::ChaCha8Rng;

use super::{Ctx, Rec, Suite};
use crate::backend::Backend;
use crate::engine::Coincidence;
use crate::error::Result;
use crate::oracle;

pub const SUITES: &[&str] = &[
    "eq1-uniqueness",
    "lemma-134invese",
    "lemma-pirgroupa",
    "lemma-annihilator",
    "lemma-pirregulara",
    "lemma-pirdcca",
    "lemma-alongd",
    "lemma-alongo",
    "lemma-abcire",
    "lemma-abcirg",
    "lemma-abcirf",
    "lemma-abcirl",
    "lemma-abcirn",
    "lemma-ats2ringgroupa",
    "thm-anihilata",
    "lemma-ats2innera",
    "lemma-ats2innerabdd",
    "lemma-ats2iannnera",
    "thm-informuast2a",
    "cor-informuast2aal",
    "lemma-star-duality",
    "thm-general-solutions",
    "thm-coincide",
    "thm-fiveway",
    "lemma-bcuva",
    "thm-inofbca",
    "thm-inofbcdua",
    "thm-inofbcbca",
    "eq-12drp",
    "cor-corinoc",
    "cor-corinoa",
];

pub(crate) const STAR_SUITES: &[&str] = &["lemma-134invese", "lemma-star-duality", "cor-corinoc", "cor-corinoa"];

pub(crate) fn lookup<B: Backend>(id: &str) -> Option<Suite<B>> {
    macro_rules! suite {
        ($id:literal, [$($v:literal),+], $check:ident) => {
            Suite {
                id: $id,
                vars: &[$($v),+],
                needs_star: STAR_SUITES.contains(&$id),
                check: $check::<B>,
            }
        };
    }
    Some(match id {
        "eq1-uniqueness" => suite!("eq1-uniqueness", ["a", "b", "c"], eq1_uniqueness),
        "lemma-134invese" => suite!("lemma-134invese", ["a"], lemma_134invese),
        "lemma-pirgroupa" => suite!("lemma-pirgroupa", ["a"], lemma_pirgroupa),
        "lemma-annihilator" => suite!("lemma-annihilator", ["a", "b"], lemma_annihilator),
        "lemma-pirregulara" => suite!("lemma-pirregulara", ["a", "b"], lemma_pirregulara),
        "lemma-pirdcca" => suite!("lemma-pirdcca", ["a", "y"], lemma_pirdcca),
        "lemma-alongd" => suite!("lemma-alongd", ["a", "d"], lemma_alongd),
        "lemma-alongo" => suite!("lemma-alongo", ["a", "d"], lemma_alongo),
        "lemma-abcire" => suite!("lemma-abcire", ["a", "b", "c"], lemma_abcire),
        "lemma-abcirg" => suite!("lemma-abcirg", ["a", "b", "c"], lemma_abcirg),
        "lemma-abcirf" => suite!("lemma-abcirf", ["a", "b", "c"], lemma_abcirf),
        "lemma-abcirl" => suite!("lemma-abcirl", ["a", "b", "c"], lemma_abcirl),
        "lemma-abcirn" => suite!("lemma-abcirn", ["a", "b", "c"], lemma_abcirn),
        "lemma-ats2ringgroupa" => suite!("lemma-ats2ringgroupa", ["a", "b", "c"], lemma_ats2ringgroupa),
        "thm-anihilata" => suite!("thm-anihilata", ["a", "b", "c"], thm_anihilata),
        "lemma-ats2innera" => suite!("lemma-ats2innera", ["a", "b", "c"], lemma_ats2innera),
        "lemma-ats2innerabdd" => suite!("lemma-ats2innerabdd", ["a", "b", "c"], lemma_ats2innerabdd),
        "lemma-ats2iannnera" => suite!("lemma-ats2iannnera", ["a", "b", "c"], lemma_ats2iannnera),
        "thm-informuast2a" => suite!("thm-informuast2a", ["a", "b", "c"], thm_informuast2a),
        "cor-informuast2aal" => suite!("cor-informuast2aal", ["a", "d"], cor_informuast2aal),
        "lemma-star-duality" => suite!("lemma-star-duality", ["a", "b", "c"], lemma_star_duality),
        "thm-general-solutions" => suite!("thm-general-solutions", ["a", "b", "c"], thm_general_solutions),
        "thm-coincide" => suite!("thm-coincide", ["a", "b", "c"], thm_coincide),
        "thm-fiveway" => suite!("thm-fiveway", ["a", "b", "c"], thm_fiveway),
        "lemma-bcuva" => suite!("lemma-bcuva", ["a", "b", "c"], lemma_bcuva),
        "thm-inofbca" => suite!("thm-inofbca", ["a", "b"], thm_inofbca),
        "thm-inofbcdua" => suite!("thm-inofbcdua", ["a", "c"], thm_inofbcdua),
        "thm-inofbcbca" => suite!("thm-inofbcbca", ["a", "b", "c"], thm_inofbcbca),
        "eq-12drp" => suite!("eq-12drp", ["a", "y"], eq_12drp),
        "cor-corinoc" => suite!("cor-corinoc", ["a"], cor_corinoc),
        "cor-corinoa" => suite!("cor-corinoa", ["a"], cor_corinoa),
        _ => return None,
    })
}

fn distinct<E: Clone + Eq + std::hash::Hash>(xs: impl IntoIterator<Item = E>) -> Vec<E> {
    let mut seen = HashSet::new();
    xs.into_iter().filter(|x| seen.insert(x.clone())).collect()
}

fn as_set<E: Clone + Eq + std::hash::Hash>(xs: &[E]) -> HashSet<E> {
    xs.iter().cloned().collect()
}

/// The `(b,c)`-inverse by definitional search, or the engine's verified
/// value when sampling.
fn bc_truth<B: Backend>(ctx: &Ctx<'_, B>, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<Option<B::Elem>> {
    match ctx.universe {
        Some(u) => oracle::brute_force_bc(ctx.r, u, a, b, c),
        None => Ok(ctx.e.bc_inverse(a, b, c)?.value),
    }
}

fn group_truth<B: Backend>(ctx: &Ctx<'_, B>, a: &B::Elem) -> Result<Option<B::Elem>> {
    match ctx.universe {
        Some(u) => Ok(oracle::brute_force_group(ctx.r, u, a)),
        None => Ok(ctx.e.group_inverse(a)?.value),
    }
}

fn along_truth<B: Backend>(ctx: &Ctx<'_, B>, a: &B::Elem, d: &B::Elem) -> Result<Option<B::Elem>> {
    match ctx.universe {
        Some(u) => oracle::brute_force_along(ctx.r, u, a, d),
        None => Ok(ctx.e.inverse_along(a, d)?.value),
    }
}

/// Candidate `(b,c)`-inverses: the engine's value and every `b·g·c`.
fn bc_candidates<B: Backend>(ctx: &Ctx<'_, B>, a: &B::Elem, b: &B::Elem, c: &B::Elem) -> Result<Vec<B::Elem>> {
    let r = ctx.r;
    let mut out: Vec<B::Elem> = ctx.e.bc_inverse(a, b, c)?.value.into_iter().collect();
    if !ctx.exhaustive() {
        let cab = ctx.e.cab(a, b, c);
        out.extend(ctx.inner_inverses(&cab).iter().map(|g| r.mul3(b, g, c)));
    }
    Ok(out)
}

fn eq1_uniqueness<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, rng: &mut ChaCha8Rng) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let [a, b, c] = [&t[0], &t[1], &t[2]];
    let derived = bc_candidates(ctx, a, b, c)?;
    let candidates = distinct(ctx.witnesses(rng, derived));
    let mut plain = Vec::new();
    let mut hybrid = Vec::new();
    let mut annihilator = Vec::new();
    for y in &candidates {
        if oracle::satisfies_bc_definition(r, y, a, b, c) {
            plain.push(y);
        }
        if e.is_hybrid_bc(y, a, b, c)? {
            hybrid.push(y);
        }
        if e.is_annihilator_bc(y, a, b, c)? {
            annihilator.push(y);
        }
    }
    for (kind, found) in [("(b,c)", &plain), ("hybrid", &hybrid), ("annihilator", &annihilator)] {
        if let [y1, y2, ..] = found.as_slice() {
            rec.fail(
                &[("a", a), ("b", b), ("c", c), ("y1", y1), ("y2", y2)],
                format!("at most one {kind}-inverse"),
                "two distinct solutions",
            );
        }
    }
    Ok(())
}

fn lemma_134invese<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, rng: &mut ChaCha8Rng) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let a = &t[0];
    let a_star = r.star(a)?;
    let engine_13 = e.one_three_inverse(a)?;
    let engine_14 = e.one_four_inverse(a)?;
    let derived = engine_13.iter().chain(engine_14.iter()).cloned().collect();
    for x in ctx.witnesses(rng, derived) {
        let x_star = r.star(&x)?;
        let inputs = [("a", a), ("x", &x)];
        rec.agree(
            &inputs,
            &[
                ("x∈a{1,3}", oracle::is_one_three(r, &x, a)?),
                ("x*a*a=a", r.mul3(&x_star, &a_star, a) == *a),
            ],
        );
        rec.agree(
            &inputs,
            &[
                ("x∈a{1,4}", oracle::is_one_four(r, &x, a)?),
                ("aa*x*=a", r.mul3(a, &a_star, &x_star) == *a),
            ],
        );
    }
    let has_13 = match ctx.search(|x| oracle::is_one_three(r, x, a))? {
        Some(found) => found.is_some(),
        None => engine_13.is_some(),
    };
    let has_14 = match ctx.search(|x| oracle::is_one_four(r, x, a))? {
        Some(found) => found.is_some(),
        None => engine_14.is_some(),
    };
    let split_13 = r.is_direct_sum(&r.left_ideal(&a_star), &r.left_annihilator(a))?;
    let split_14 = r.is_direct_sum(&r.right_ideal(&a_star), &r.right_annihilator(a))?;
    rec.agree(
        &[("a", a)],
        &[("a∈R{1,3}", has_13), ("R=Ra*⊕°a", split_13), ("engine", engine_13.is_some())],
    );
    rec.agree(
        &[("a", a)],
        &[("a∈R{1,4}", has_14), ("R=a*R⊕a°", split_14), ("engine", engine_14.is_some())],
    );
    Ok(())
}

fn lemma_pirgroupa<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, _rng: &mut ChaCha8Rng) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let a = &t[0];
    let a2 = r.mul(a, a);
    let truth = group_truth(ctx, a)?;
    let solvable = match (ctx.search(|x| Ok(r.mul(&a2, x) == *a))?, ctx.search(|y| Ok(r.mul(y, &a2) == *a))?) {
        (Some(x), Some(y)) => x.is_some() && y.is_some(),
        _ => e.in_right(a, &a2)? && e.in_left(a, &a2)?,
    };
    rec.agree(
        &[("a", a)],
        &[
            ("a∈R#", truth.is_some()),
            ("R=aR⊕a°", e.right_split(a, a)?),
            ("R=Ra⊕°a", e.left_split(a, a)?),
            ("a²x=a,ya²=a solvable", solvable),
        ],
    );
    rec.same(&[("a", a)], "group inverse", &truth, &e.group_inverse(a)?.value);
    Ok(())
}

fn lemma_annihilator<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, _rng: &mut ChaCha8Rng) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let [a, b] = [&t[0], &t[1]];
    let inputs = [("a", a), ("b", b)];
    let b_reg = r.is_regular(b);

    let ar_in_br = e.in_right(a, b)?;
    let ann_left = r.ideal_subset(&r.left_annihilator(b), &r.left_annihilator(a))?;
    rec.expect(!ar_in_br || ann_left, &inputs, "aR⊆bR implies °b⊆°a");
    rec.expect(!b_reg || !ann_left || ar_in_br, &inputs, "b regular and °b⊆°a imply aR⊆bR");

    let ra_in_rb = e.in_left(a, b)?;
    let ann_right = r.ideal_subset(&r.right_annihilator(b), &r.right_annihilator(a))?;
    rec.expect(!ra_in_rb || ann_right, &inputs, "Ra⊆Rb implies b°⊆a°");
    rec.expect(!b_reg || !ann_right || ra_in_rb, &inputs, "b regular and b°⊆a° imply Ra⊆Rb");
    Ok(())
}

fn lemma_pirregulara<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, _rng: &mut ChaCha8Rng) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let [a, b] = [&t[0], &t[1]];
    let inputs = [("a", a), ("b", b)];
    if r.is_regular(a) {
        rec.expect(!e.right_eq(a, b)? || r.is_regular(b), &inputs, "aR=bR, a regular imply b regular");
        rec.expect(!e.left_eq(a, b)? || r.is_regular(b), &inputs, "Ra=Rb, a regular imply b regular");
    }
    Ok(())
}

fn lemma_pirdcca<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, _rng: &mut ChaCha8Rng) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let a = &t[0];
    let mut ys = vec![t[1].clone()];
    if !ctx.exhaustive() {
        // g·a·g is a reflexive inverse for every inner inverse g
        ys.extend(ctx.inner_inverses(a).iter().map(|g| r.mul3(g, a, g)));
    }
    for y in ys.iter().filter(|y| r.mul3(y, a, y) == **y) {
        let inputs = [("a", a), ("y", y)];
        let ya = r.mul(y, a);
        let ay = r.mul(a, y);
        rec.expect(e.right_eq(&ya, y)?, &inputs, "yaR=yR");
        rec.expect(e.left_eq(&ay, y)?, &inputs, "Ray=Ry");
        rec.expect(
            r.meet_is_zero(&r.right_annihilator(a), &r.right_ideal(y))?
                && r.meet_is_zero(&r.right_annihilator(a), &r.right_ideal(&ya))?,
            &inputs,
            "a°∩yR=a°∩yaR={0}",
        );
        rec.expect(
            r.meet_is_zero(&r.left_annihilator(a), &r.left_ideal(y))?
                && r.meet_is_zero(&r.left_annihilator(a), &r.left_ideal(&ay))?,
            &inputs,
            "°a∩Ry=°a∩Ray={0}",
        );
    }
    Ok(())
}

fn lemma_alongd<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, _rng: &mut ChaCha8Rng) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let [a, d] = [&t[0], &t[1]];
    let inputs = [("a", a), ("d", d)];
    let ad = r.mul(a, d);
    let da = r.mul(d, a);
    let truth = along_truth(ctx, a, d)?;
    let group_ad = group_truth(ctx, &ad)?;
    let group_da = group_truth(ctx, &da)?;
    rec.agree(
        &inputs,
        &[
            ("a‖d exists", truth.is_some()),
            ("dR⊆daR, (da)# exists", e.in_right(d, &da)? && group_da.is_some()),
            ("Rd⊆Rad, (ad)# exists", e.in_left(d, &ad)? && group_ad.is_some()),
        ],
    );
    if truth.is_some() {
        rec.same(&inputs, "d(ad)#", &truth, &group_ad.map(|g| r.mul(d, &g)));
        rec.same(&inputs, "(da)#d", &truth, &group_da.map(|g| r.mul(&g, d)));
    }
    rec.same(&inputs, "inverse along d", &truth, &e.inverse_along(a, d)?.value);
    Ok(())
}

fn lemma_alongo<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, _rng: &mut ChaCha8Rng) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let [a, d] = [&t[0], &t[1]];
    let dad = r.mul3(d, a, d);
    let truth = along_truth(ctx, a, d)?;
    rec.agree(
        &[("a", a), ("d", d)],
        &[
            ("a‖d exists", truth.is_some()),
            ("dR=dadR, Rd=Rdad", e.right_eq(d, &dad)? && e.left_eq(d, &dad)?),
        ],
    );
    Ok(())
}

fn lemma_abcire<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, rng: &mut ChaCha8Rng) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let [a, b, c] = [&t[0], &t[1], &t[2]];
    let derived = bc_candidates(ctx, a, b, c)?;
    for y in ctx.witnesses(rng, derived) {
        let reflexive = r.mul3(&y, a, &y) == y && e.right_eq(&y, b)? && e.left_eq(&y, c)?;
        rec.agree(
            &[("a", a), ("b", b), ("c", c), ("y", &y)],
            &[
                ("y is the (b,c)-inverse", oracle::satisfies_bc_definition(r, &y, a, b, c)),
                ("yay=y, yR=bR, Ry=Rc", reflexive),
            ],
        );
    }
    Ok(())
}

fn lemma_abcirg<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, _rng: &mut ChaCha8Rng) -> Result<()> {
    let e = &ctx.e;
    let [a, b, c] = [&t[0], &t[1], &t[2]];
    let truth = bc_truth(ctx, a, b, c)?;
    rec.agree(
        &[("a", a), ("b", b), ("c", c)],
        &[
            ("(b,c)-invertible", truth.is_some()),
            ("b∈Rcab, c∈cabR", e.bc_exists_drazin(a, b, c)?),
        ],
    );
    Ok(())
}

fn lemma_abcirf<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, _rng: &mut ChaCha8Rng) -> Result<()> {
    let r = ctx.r;
    let [a, b, c] = [&t[0], &t[1], &t[2]];
    if bc_truth(ctx, a, b, c)?.is_some() {
        let cab = ctx.e.cab(a, b, c);
        rec.expect(
            r.is_regular(&cab) && r.is_regular(b) && r.is_regular(c),
            &[("a", a), ("b", b), ("c", c)],
            "cab, b and c are regular",
        );
    }
    Ok(())
}

fn lemma_abcirl<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, _rng: &mut ChaCha8Rng) -> Result<()> {
    let [a, b, c] = [&t[0], &t[1], &t[2]];
    let truth = bc_truth(ctx, a, b, c)?;
    let (right, left) = ctx.e.kcc_items(a, b, c)?;
    rec.agree(
        &[("a", a), ("b", b), ("c", c)],
        &[
            ("(b,c)-invertible", truth.is_some()),
            ("c∈R⁻, a°∩bR={0}, R=abR⊕c°", right),
            ("b∈R⁻, °a∩Rc={0}, R=Rca⊕°b", left),
        ],
    );
    Ok(())
}

fn lemma_abcirn<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, rng: &mut ChaCha8Rng) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let [a, b, c] = [&t[0], &t[1], &t[2]];
    let b_reg = r.is_regular(b);
    let c_reg = r.is_regular(c);
    let derived = bc_candidates(ctx, a, b, c)?;
    for y in ctx.witnesses(rng, derived) {
        rec.agree(
            &[("a", a), ("b", b), ("c", c), ("y", &y)],
            &[
                ("y is the (b,c)-inverse", oracle::satisfies_bc_definition(r, &y, a, b, c)),
                ("c∈R⁻, y hybrid", c_reg && e.is_hybrid_bc(&y, a, b, c)?),
                ("b,c∈R⁻, y annihilator", b_reg && c_reg && e.is_annihilator_bc(&y, a, b, c)?),
            ],
        );
    }
    Ok(())
}

fn lemma_ats2ringgroupa<B: Backend>(
    ctx: &Ctx<'_, B>,
    t: &[B::Elem],
    rec: &mut Rec<'_, B>,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let [a, b, c] = [&t[0], &t[1], &t[2]];
    let truth = bc_truth(ctx, a, b, c)?;
    let regular = r.is_regular(b) && r.is_regular(c);
    let derived: Vec<_> = truth.iter().cloned().chain([b.clone()]).collect();
    for d in ctx.witnesses(rng, derived) {
        if !e.right_eq(&d, b)? || !e.right_ann_eq(&d, c)? {
            continue;
        }
        let inputs = [("a", a), ("b", b), ("c", c), ("d", &d)];
        let along = along_truth(ctx, a, &d)?;
        if regular {
            rec.agree(&inputs, &[("(b,c)-invertible", truth.is_some()), ("invertible along d", along.is_some())]);
        }
        if truth.is_some() {
            let ad = group_truth(ctx, &r.mul(a, &d))?;
            let da = group_truth(ctx, &r.mul(&d, a))?;
            rec.expect(ad.is_some() && da.is_some(), &inputs, "ad and da are group invertible");
            rec.same(&inputs, "inverse along d", &truth, &along);
            rec.same(&inputs, "d(ad)#", &truth, &ad.map(|g| r.mul(&d, &g)));
            rec.same(&inputs, "(da)#d", &truth, &da.map(|g| r.mul(&g, &d)));
            rec.same(&inputs, "engine", &truth, &Some(e.bc_via_along(a, b, c, &d)?));
        }
    }
    Ok(())
}

fn thm_anihilata<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, _rng: &mut ChaCha8Rng) -> Result<()> {
    let [a, b, c] = [&t[0], &t[1], &t[2]];
    let truth = bc_truth(ctx, a, b, c)?;
    let (right, left) = ctx.e.annihilator_items(a, b, c)?;
    rec.agree(
        &[("a", a), ("b", b), ("c", c)],
        &[
            ("(b,c)-invertible", truth.is_some()),
            ("c∈R⁻, (ab)°=b°, R=abR⊕c°", right),
            ("b∈R⁻, °(ca)=°c, R=Rca⊕°b", left),
        ],
    );
    Ok(())
}

/// Runs `each` on `x = b·g·c` for every inner inverse `g` of `cab`.
fn for_each_formula<B: Backend>(
    ctx: &Ctx<'_, B>,
    a: &B::Elem,
    b: &B::Elem,
    c: &B::Elem,
    mut each: impl FnMut(&B::Elem, &B::Elem, &B::Elem) -> Result<()>,
) -> Result<()> {
    let cab = ctx.e.cab(a, b, c);
    for g in ctx.inner_inverses(&cab) {
        let x = ctx.r.mul3(b, &g, c);
        each(&cab, &g, &x)?;
    }
    Ok(())
}

fn lemma_ats2innera<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, _rng: &mut ChaCha8Rng) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let [a, b, c] = [&t[0], &t[1], &t[2]];
    for_each_formula(ctx, a, b, c, |cab, g, x| {
        let outer = r.mul3(x, a, x) == *x;
        rec.agree(
            &[("a", a), ("b", b), ("c", c), ("g", g)],
            &[
                ("xax=x, bR=xR", outer && e.right_eq(b, x)?),
                ("xax=x, bR⊆xR", outer && e.in_right(b, x)?),
                ("Rb=Rcab", e.left_eq(b, cab)?),
                ("b∈R⁻, b°=(cab)°", r.is_regular(b) && e.right_ann_eq(b, cab)?),
            ],
        );
        Ok(())
    })
}

fn lemma_ats2innerabdd<B: Backend>(
    ctx: &Ctx<'_, B>,
    t: &[B::Elem],
    rec: &mut Rec<'_, B>,
    _rng: &mut ChaCha8Rng,
) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let [a, b, c] = [&t[0], &t[1], &t[2]];
    for_each_formula(ctx, a, b, c, |cab, g, x| {
        let outer = r.mul3(x, a, x) == *x;
        rec.agree(
            &[("a", a), ("b", b), ("c", c), ("g", g)],
            &[
                ("xax=x, Rx=Rc", outer && e.left_eq(x, c)?),
                ("xax=x, Rc⊆Rx", outer && e.in_left(c, x)?),
                ("cR=cabR", e.right_eq(c, cab)?),
                ("c∈R⁻, °c=°(cab)", r.is_regular(c) && e.left_ann_eq(c, cab)?),
            ],
        );
        Ok(())
    })
}

fn lemma_ats2iannnera<B: Backend>(
    ctx: &Ctx<'_, B>,
    t: &[B::Elem],
    rec: &mut Rec<'_, B>,
    _rng: &mut ChaCha8Rng,
) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let [a, b, c] = [&t[0], &t[1], &t[2]];
    for_each_formula(ctx, a, b, c, |cab, g, x| {
        let outer = r.mul3(x, a, x) == *x;
        let ann_in = r.ideal_subset(&r.right_annihilator(x), &r.right_annihilator(c))?;
        rec.agree(
            &[("a", a), ("b", b), ("c", c), ("g", g)],
            &[
                ("xax=x, x°=c°", outer && e.right_ann_eq(x, c)?),
                ("xax=x, x°⊆c°", outer && ann_in),
                ("cR=cabR", e.right_eq(c, cab)?),
            ],
        );
        Ok(())
    })
}

fn thm_informuast2a<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, _rng: &mut ChaCha8Rng) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let [a, b, c] = [&t[0], &t[1], &t[2]];
    let truth = bc_truth(ctx, a, b, c)?;
    let conditions = e.formula_conditions(a, b, c)?;
    for_each_formula(ctx, a, b, c, |cab, g, x| {
        let inputs = [("a", a), ("b", b), ("c", c), ("g", g)];
        let is_inverse = oracle::satisfies_bc_definition(r, x, a, b, c);
        let ann_in = r.ideal_subset(&r.right_annihilator(x), &r.right_annihilator(c))?;
        rec.agree(
            &inputs,
            &[
                ("x is the (b,c)-inverse", is_inverse),
                ("xax=x, bR⊆xR, x°⊆c°", r.mul3(x, a, x) == *x && e.in_right(b, x)? && ann_in),
                ("b°=(cab)°, cR=cabR", e.right_ann_eq(b, cab)? && e.right_eq(c, cab)?),
                ("engine", conditions),
            ],
        );
        if is_inverse {
            rec.same(&inputs, "(b,c)-inverse", &truth, &Some(x.clone()));
        }
        Ok(())
    })
}

fn cor_informuast2aal<B: Backend>(
    ctx: &Ctx<'_, B>,
    t: &[B::Elem],
    rec: &mut Rec<'_, B>,
    _rng: &mut ChaCha8Rng,
) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let [a, d] = [&t[0], &t[1]];
    for_each_formula(ctx, a, d, d, |dad, g, x| {
        let ann_in = r.ideal_subset(&r.right_annihilator(x), &r.right_annihilator(d))?;
        rec.agree(
            &[("a", a), ("d", d), ("g", g)],
            &[
                ("x is the inverse along d", oracle::satisfies_along_definition(r, x, a, d)?),
                ("xax=x, dR⊆xR, x°⊆d°", r.mul3(x, a, x) == *x && e.in_right(d, x)? && ann_in),
                ("d°=(dad)°, dR=dadR", e.right_ann_eq(d, dad)? && e.right_eq(d, dad)?),
            ],
        );
        Ok(())
    })
}

fn lemma_star_duality<B: Backend>(
    ctx: &Ctx<'_, B>,
    t: &[B::Elem],
    rec: &mut Rec<'_, B>,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let [a, b, c] = [&t[0], &t[1], &t[2]];
    let mut derived = bc_candidates(ctx, a, b, c)?;
    if e.is_left_invertible(a, b, c)? && r.is_regular(&e.cab(a, b, c)) {
        derived.push(e.left_bc_family(a, b, c, &r.random_element(rng))?);
    }
    for y in ctx.witnesses(rng, derived) {
        rec.expect(
            e.star_duality_check(&y, a, b, c)?,
            &[("a", a), ("b", b), ("c", c), ("y", &y)],
            "y left (b,c)-inverse iff y* right (c*,b*)-inverse of a*",
        );
    }
    Ok(())
}

fn thm_general_solutions<B: Backend>(
    ctx: &Ctx<'_, B>,
    t: &[B::Elem],
    rec: &mut Rec<'_, B>,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let [a, b, c] = [&t[0], &t[1], &t[2]];
    let cab = e.cab(a, b, c);
    if !r.is_regular(&cab) {
        return Ok(());
    }
    let left = e.is_left_invertible(a, b, c)?;
    let right = e.is_right_invertible(a, b, c)?;
    let (all_left, all_right) = match ctx.universe {
        Some(u) => (
            Some(oracle::all_left_bc(r, u, a, b, c)?),
            Some(oracle::all_right_bc(r, u, a, b, c)?),
        ),
        None => (None, None),
    };
    let abc = [("a", a), ("b", b), ("c", c)];
    if let (Some(l), Some(rt)) = (&all_left, &all_right) {
        rec.agree(&abc, &[("left (b,c)-invertible", left), ("left inverse found", !l.is_empty())]);
        rec.agree(&abc, &[("right (b,c)-invertible", right), ("right inverse found", !rt.is_empty())]);
    }
    let params = ctx.witnesses(rng, vec![r.zero()]);
    let one = r.one();
    for g in ctx.inner_inverses(&cab) {
        let base = r.mul3(b, &g, c);
        let left_proj = r.sub(&one, &r.mul(&cab, &g));
        let right_proj = r.sub(&one, &r.mul(&g, &cab));
        let left_family: Vec<_> = params.iter().map(|v| r.add(&base, &r.mul3(v, &left_proj, c))).collect();
        let right_family: Vec<_> = params.iter().map(|u| r.add(&base, &r.mul3(b, &right_proj, u))).collect();
        let inputs = [("a", a), ("b", b), ("c", c), ("g", &g)];
        for x in &left_family {
            let valid = e.is_left_bc(x, a, b, c)?;
            if valid != left {
                rec.fail(&[("a", a), ("b", b), ("c", c), ("g", &g), ("x", x)], format!("left family member valid = {left}"), valid);
            }
        }
        for y in &right_family {
            let valid = e.is_right_bc(y, a, b, c)?;
            if valid != right {
                rec.fail(&[("a", a), ("b", b), ("c", c), ("g", &g), ("y", y)], format!("right family member valid = {right}"), valid);
            }
        }
        if let (Some(l), Some(rt)) = (&all_left, &all_right) {
            if left {
                rec.expect(as_set(&left_family) == as_set(l), &inputs, "left family = all left (b,c)-inverses");
            }
            if right {
                rec.expect(as_set(&right_family) == as_set(rt), &inputs, "right family = all right (b,c)-inverses");
            }
        }
        if left {
            rec.same(&inputs, "engine left family at v=0", &Some(base.clone()), &Some(e.left_bc_family_with(a, b, c, &g, &r.zero())?));
        }
    }
    Ok(())
}

fn thm_coincide<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, rng: &mut ChaCha8Rng) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let [a, b, c] = [&t[0], &t[1], &t[2]];
    let inputs = [("a", a), ("b", b), ("c", c)];
    let verdict = e.left_right_coincide(a, b, c)?;
    match ctx.universe {
        Some(u) => {
            let lefts = oracle::all_left_bc(r, u, a, b, c)?;
            let rights = oracle::all_right_bc(r, u, a, b, c)?;
            let expected = match (lefts.as_slice(), rights.as_slice()) {
                ([], []) => Coincidence::Neither,
                (_, []) => Coincidence::OnlyLeft,
                ([], _) => Coincidence::OnlyRight,
                ([x], [y]) if x == y => Coincidence::Both(x.clone()),
                _ => {
                    rec.fail(&inputs, "unique and equal left and right inverses", format!("{} left, {} right", lefts.len(), rights.len()));
                    return Ok(());
                }
            };
            if expected != verdict {
                rec.fail(&inputs, format!("{expected:?}"), format!("{verdict:?}"));
            }
        }
        None => {
            if let Coincidence::Both(x) = verdict {
                for v in ctx.witnesses(rng, Vec::new()) {
                    rec.same(&inputs, "left family", &Some(x.clone()), &Some(e.left_bc_family(a, b, c, &v)?));
                    rec.same(&inputs, "right family", &Some(x.clone()), &Some(e.right_bc_family(a, b, c, &v)?));
                }
            }
        }
    }
    Ok(())
}

fn thm_fiveway<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, _rng: &mut ChaCha8Rng) -> Result<()> {
    let e = &ctx.e;
    let [a, b, c] = [&t[0], &t[1], &t[2]];
    let truth = bc_truth(ctx, a, b, c)?.is_some();
    let cab = e.cab(a, b, c);
    let witnesses = ctx.inner_inverses(&cab);
    if witnesses.is_empty() {
        let [i2, i3, i4, i5] = e.fiveway_items(a, b, c, None)?;
        rec.agree(
            &[("a", a), ("b", b), ("c", c)],
            &[("(b,c)-invertible", truth), ("(2)", i2), ("(3)", i3), ("(4)", i4), ("(5)", i5)],
        );
    }
    for g in &witnesses {
        let [i2, i3, i4, i5] = e.fiveway_items(a, b, c, Some(g))?;
        rec.agree(
            &[("a", a), ("b", b), ("c", c), ("g", g)],
            &[("(b,c)-invertible", truth), ("(2)", i2), ("(3)", i3), ("(4)", i4), ("(5)", i5)],
        );
    }
    Ok(())
}

fn lemma_bcuva<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, rng: &mut ChaCha8Rng) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let [a, b, c] = [&t[0], &t[1], &t[2]];
    let base = e.bc_inverse(a, b, c)?.value;
    let pool = ctx.witnesses(rng, Vec::new());
    let (us, vs) = if ctx.exhaustive() {
        let mut us = Vec::new();
        let mut vs = Vec::new();
        for x in &pool {
            if e.right_eq(x, b)? {
                us.push(x.clone());
            }
            if e.left_eq(x, c)? {
                vs.push(x.clone());
            }
        }
        (us, vs)
    } else {
        (ctx.right_associates(b, &pool), ctx.left_associates(c, &pool))
    };
    for u in &us {
        for v in &vs {
            let other = e.bc_inverse(a, u, v)?.value;
            rec.same(&[("a", a), ("b", b), ("c", c), ("u", u), ("v", v)], "(b,c)-inverse", &base, &other);
        }
    }
    // Left factors e with bR = ebR and right factors f with Rc = Rcf.
    if base.is_some() {
        for x in &pool {
            let eb = r.mul(x, b);
            if e.right_eq(b, &eb)? {
                let other = e.bc_inverse(a, &eb, c)?.value;
                rec.same(&[("a", a), ("b", b), ("c", c), ("e", x)], "(b,c)-inverse", &base, &other);
            }
            let cf = r.mul(c, x);
            if e.left_eq(c, &cf)? {
                let other = e.bc_inverse(a, b, &cf)?.value;
                rec.same(&[("a", a), ("b", b), ("c", c), ("f", x)], "(b,c)-inverse", &base, &other);
            }
        }
    }
    Ok(())
}

fn thm_inofbca<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, _rng: &mut ChaCha8Rng) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let [a, b] = [&t[0], &t[1]];
    let engine = e.inner_outer_right(a, b)?;
    let exists = match ctx.search(|y| Ok(r.mul3(a, y, a) == *a && r.mul3(y, a, y) == *y && e.right_eq(y, b)?))? {
        Some(found) => found.is_some(),
        None => engine.is_some(),
    };
    let ab = r.mul(a, b);
    let a_reg = r.is_regular(a);
    rec.agree(
        &[("a", a), ("b", b)],
        &[
            ("aya=a, yay=y, yR=bR solvable", exists),
            ("a∈R⁻, aR=abR, (ab)°=b°", a_reg && e.right_eq(a, &ab)? && e.right_ann_eq(&ab, b)?),
            ("a∈R⁻, R=a°⊕bR", a_reg && r.is_direct_sum(&r.right_annihilator(a), &r.right_ideal(b))?),
            ("engine", engine.is_some()),
        ],
    );
    Ok(())
}

fn thm_inofbcdua<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, _rng: &mut ChaCha8Rng) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let [a, c] = [&t[0], &t[1]];
    let engine = e.inner_outer_left(a, c)?;
    let exists = match ctx.search(|y| Ok(r.mul3(a, y, a) == *a && r.mul3(y, a, y) == *y && e.left_eq(y, c)?))? {
        Some(found) => found.is_some(),
        None => engine.is_some(),
    };
    let ca = r.mul(c, a);
    let a_reg = r.is_regular(a);
    rec.agree(
        &[("a", a), ("c", c)],
        &[
            ("aya=a, yay=y, Ry=Rc solvable", exists),
            ("a∈R⁻, Rca=Ra, °(ca)=°c", a_reg && e.left_eq(&ca, a)? && e.left_ann_eq(&ca, c)?),
            ("a∈R⁻, R=°a⊕Rc", a_reg && r.is_direct_sum(&r.left_annihilator(a), &r.left_ideal(c))?),
            ("engine", engine.is_some()),
        ],
    );
    Ok(())
}

fn thm_inofbcbca<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, _rng: &mut ChaCha8Rng) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let [a, b, c] = [&t[0], &t[1], &t[2]];
    let engine = e.inner_outer_bc(a, b, c)?.value;
    let truth = match ctx.universe {
        Some(u) => oracle::brute_force_inner_bc(r, u, a, b, c),
        None => engine.clone(),
    };
    let (item2, item3) = e.inner_outer_items(a, b, c)?;
    let inputs = [("a", a), ("b", b), ("c", c)];
    rec.agree(&inputs, &[("inner (b,c)-inverse exists", truth.is_some()), ("(2)", item2), ("(3)", item3)]);
    rec.same(&inputs, "inner (b,c)-inverse", &truth, &engine);
    Ok(())
}

fn eq_12drp<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, _rng: &mut ChaCha8Rng) -> Result<()> {
    let r = ctx.r;
    let a = &t[0];
    let mut ys = vec![t[1].clone()];
    if !ctx.exhaustive() {
        ys.extend(ctx.e.group_inverse(a)?.value);
        ys.extend(r.inner_inverse(a));
    }
    for y in &ys {
        let inner = r.mul3(a, y, a) == *a && r.mul3(y, a, y) == *y;
        let (ay2, ya2) = (r.mul3(a, y, y) == *y, r.mul3(y, a, a) == *a);
        let (y2a, a2y) = (r.mul3(y, y, a) == *y, r.mul3(a, a, y) == *a);
        let inputs = [("a", a), ("y", y)];
        rec.agree(&inputs, &[("aya=a, yay=y, ay²=y, ya²=a", inner && ay2 && ya2), ("ay²=y, ya²=a", ay2 && ya2)]);
        rec.agree(&inputs, &[("aya=a, yay=y, y²a=y, a²y=a", inner && y2a && a2y), ("y²a=y, a²y=a", y2a && a2y)]);
    }
    Ok(())
}

fn cor_corinoc<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, _rng: &mut ChaCha8Rng) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let a = &t[0];
    let a_star = r.star(a)?;
    let a2 = r.mul(a, a);
    let engine = e.core_inverse(a)?.value;
    let (truth, has_13) = match ctx.universe {
        Some(u) => (
            oracle::brute_force_core(r, u, a)?,
            ctx.search(|x| oracle::is_one_three(r, x, a))?.flatten().is_some(),
        ),
        None => (engine.clone(), e.one_three_inverse(a)?.is_some()),
    };
    let group = group_truth(ctx, a)?.is_some();
    let inputs = [("a", a)];
    rec.agree(
        &inputs,
        &[
            ("core invertible", truth.is_some()),
            ("aR=a²R, Ra*a=Ra, (a²)°=a°", e.right_eq(a, &a2)? && e.left_eq(&r.mul(&a_star, a), a)? && e.right_ann_eq(&a2, a)?),
            (
                "R=a°⊕aR, R=°a⊕Ra*",
                r.is_direct_sum(&r.right_annihilator(a), &r.right_ideal(a))?
                    && r.is_direct_sum(&r.left_annihilator(a), &r.left_ideal(&a_star))?,
            ),
            ("a∈R#∩R{1,3}", group && has_13),
        ],
    );
    rec.same(&inputs, "core inverse", &truth, &engine);
    Ok(())
}

fn cor_corinoa<B: Backend>(ctx: &Ctx<'_, B>, t: &[B::Elem], rec: &mut Rec<'_, B>, rng: &mut ChaCha8Rng) -> Result<()> {
    let (r, e) = (ctx.r, &ctx.e);
    let a = &t[0];
    let a_star = r.star(a)?;
    let derived = e
        .moore_penrose(a)?
        .value
        .into_iter()
        .chain(e.group_inverse(a)?.value)
        .collect();
    for x in ctx.witnesses(rng, derived) {
        let inputs = [("a", a), ("x", &x)];
        let inner = r.mul3(a, &x, a) == *a;
        rec.agree(
            &inputs,
            &[
                ("x = a†", oracle::is_moore_penrose(r, &x, a)?),
                ("axa=a, xR=a*R, Rx=Ra*", inner && e.right_eq(&x, &a_star)? && e.left_eq(&x, &a_star)?),
            ],
        );
        let group = inner && r.mul3(&x, a, &x) == x && r.mul(a, &x) == r.mul(&x, a);
        rec.agree(
            &inputs,
            &[
                ("x = a#", group),
                ("axa=a, xR=aR, Rx=Ra", inner && e.right_eq(&x, a)? && e.left_eq(&x, a)?),
            ],
        );
    }
    Ok(())
}
