use std::collections::HashSet;
use std::sync::Arc;

use crate::analysis::Analyzer;
use crate::classify::ClassificationRecord;
use crate::constructions::{
    augmentation, corner, ideal_generated, projections, quotient, subring_generated, subring_mask, RingHom,
};
use crate::error::{AlgebraError, Result};
use crate::group::FiniteGroup;
use crate::radicals::RingProfile;
use crate::ring::{FiniteRing, Limits, Origin, HARD_MAX_ORDER};
use crate::sets::Ideal;

use super::catalog::{Catalog, CatalogConfig, CatalogEntry};
use super::{ClaimOutcome, Status, Witness};

type RingCheck = fn(&Ctx, &CatalogEntry) -> Result<Option<Verdict>>;
type GroupCheck = fn(&Ctx, &GroupRingParts) -> Result<Verdict>;

#[derive(Clone, Copy)]
enum Check {
    Ring(RingCheck),
    GroupRing(GroupCheck),
}

/// A registered claim: stable id, plain-language statement, checker.
pub struct Claim {
    pub id: &'static str,
    pub anchor: &'static str,
    check: Check,
}

impl std::fmt::Debug for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Claim").field("id", &self.id).finish()
    }
}

enum Verdict {
    Pass,
    PassWith(Witness),
    Fail(Witness),
    NotApplicable,
    Skipped(String),
}

fn fail(elements: Vec<usize>, detail: impl Into<String>) -> Result<Option<Verdict>> {
    Ok(Some(Verdict::Fail(Witness::new(elements, detail))))
}

fn pass() -> Result<Option<Verdict>> {
    Ok(Some(Verdict::Pass))
}

fn not_applicable() -> Result<Option<Verdict>> {
    Ok(Some(Verdict::NotApplicable))
}

/// Pass when every named condition has the same value.
fn agree(items: &[(&str, bool)]) -> Verdict {
    if items.iter().all(|&(_, v)| v == items[0].1) {
        return Verdict::Pass;
    }
    let detail: Vec<String> = items.iter().map(|(n, v)| format!("{n} = {v}")).collect();
    Verdict::Fail(Witness::new(Vec::new(), detail.join(", ")))
}

struct Ctx<'a> {
    an: &'a Analyzer,
    cfg: &'a CatalogConfig,
}

fn unbounded() -> Limits {
    Limits::new(HARD_MAX_ORDER)
}

impl Ctx<'_> {
    fn prof(&self, r: &FiniteRing) -> Result<Arc<RingProfile>> {
        self.an.profile(r)
    }

    fn rec(&self, r: &Arc<FiniteRing>) -> Result<Arc<ClassificationRecord>> {
        self.an.classify(r)
    }

    fn w(&self, r: &Arc<FiniteRing>) -> Result<bool> {
        Ok(self.rec(r)?.w_sqrt_ju)
    }

    fn s(&self, r: &Arc<FiniteRing>) -> Result<bool> {
        Ok(self.rec(r)?.sqrt_ju)
    }

    fn int_in_j(&self, r: &FiniteRing, k: i64) -> Result<bool> {
        Ok(self.prof(r)?.jacobson.contains(r.int(k)))
    }
}

struct GroupRingParts {
    ring: Arc<FiniteRing>,
    base: Arc<FiniteRing>,
    group: Arc<FiniteGroup>,
}

impl Claim {
    pub(crate) fn run(&self, cat: &Catalog, an: &Analyzer) -> Vec<ClaimOutcome> {
        let cx = Ctx { an, cfg: &cat.config };
        let mut out = Vec::new();
        match self.check {
            Check::Ring(f) => {
                for e in &cat.entries {
                    let v = match f(&cx, e) {
                        Ok(None) => continue,
                        Ok(Some(v)) => v,
                        Err(err) => from_error(err),
                    };
                    out.push(outcome(self.id, &e.expr, vec![e.ring.hash().to_hex()], v));
                }
            }
            Check::GroupRing(f) => {
                for s in &cat.group_rings {
                    let Some(ring) = &s.ring else {
                        out.push(outcome(
                            self.id,
                            &s.expr,
                            Vec::new(),
                            Verdict::Skipped("exceeds the size cap".into()),
                        ));
                        continue;
                    };
                    let Origin::GroupRing { base, group } = ring.origin() else {
                        let v = Verdict::Fail(Witness::new(Vec::new(), "subject was not built as a group ring"));
                        out.push(outcome(self.id, &s.expr, vec![ring.hash().to_hex()], v));
                        continue;
                    };
                    let parts = GroupRingParts { ring: ring.clone(), base: base.clone(), group: group.clone() };
                    let v = f(&cx, &parts).unwrap_or_else(from_error);
                    out.push(outcome(self.id, &s.expr, vec![ring.hash().to_hex(), base.hash().to_hex()], v));
                }
            }
        }
        out
    }
}

fn from_error(e: AlgebraError) -> Verdict {
    match e {
        AlgebraError::SizeCapExceeded { .. } => Verdict::Skipped(e.to_string()),
        other => Verdict::Fail(Witness::new(Vec::new(), format!("engine error: {other}"))),
    }
}

fn outcome(id: &str, subject: &str, hashes: Vec<String>, v: Verdict) -> ClaimOutcome {
    let (status, witness) = match v {
        Verdict::Pass => (Status::Pass, None),
        Verdict::PassWith(w) => (Status::Pass, Some(w)),
        Verdict::Fail(w) => (Status::Fail, Some(w)),
        Verdict::NotApplicable => (Status::NotApplicable, None),
        Verdict::Skipped(reason) => (Status::Skipped, Some(Witness::new(Vec::new(), reason))),
    };
    ClaimOutcome { claim: id.to_string(), subject: subject.to_string(), hashes, status, witness }
}

pub fn claim(id: &str) -> Option<&'static Claim> {
    CLAIMS.iter().find(|c| c.id.eq_ignore_ascii_case(id.trim()))
}

pub const CLAIMS: &[Claim] = &[
    Claim {
        id: "L1.2-1",
        anchor: "if a lies in √J(R) and commutes with b, then ab lies in √J(R)",
        check: Check::Ring(sqrt_j_commuting_products),
    },
    Claim { id: "L1.2-2", anchor: "a power a^k lies in √J(R) exactly when a does", check: Check::Ring(sqrt_j_powers) },
    Claim { id: "L1.2-3", anchor: "for a in √J(R), 1 - a is a unit", check: Check::Ring(sqrt_j_one_minus) },
    Claim {
        id: "L1.2-4",
        anchor: "central elements of √J(R) lie in J(R); √J(R) = J(R) for commutative R",
        check: Check::Ring(sqrt_j_center),
    },
    Claim {
        id: "L1.2-5",
        anchor: "√J(R/I) is the image of √J(R) for ideals I inside J(R)",
        check: Check::Ring(sqrt_j_quotients),
    },
    Claim {
        id: "L1.2-6",
        anchor: "√J of a direct product is the product of the factors' √J",
        check: Check::Ring(sqrt_j_products),
    },
    Claim { id: "L1.2-7", anchor: "if ab lies in √J(R), so does ba", check: Check::Ring(sqrt_j_swap) },
    Claim { id: "L1.2-8", anchor: "Nil(R) + J(R) is contained in √J(R)", check: Check::Ring(sqrt_j_nil_plus_j) },
    Claim {
        id: "L2.1",
        anchor: "a surjective ring map f: R -> S sends √J(R) into √J(S)",
        check: Check::Ring(surjection_images),
    },
    Claim {
        id: "P-sub",
        anchor: "unital subrings of a W√JU ring are W√JU, with U(R) ∩ S = U(S)",
        check: Check::Ring(subrings),
    },
    Claim {
        id: "P-quot",
        anchor: "for an ideal I inside J(R), R is W√JU exactly when R/I is",
        check: Check::Ring(quotients_by_j),
    },
    Claim { id: "P-prod", anchor: "a W√JU ring times a √JU ring is W√JU", check: Check::Ring(product_sufficient) },
    Claim {
        id: "P-prodchar",
        anchor: "a product is W√JU exactly when each factor is W√JU and at most one factor is not √JU",
        check: Check::Ring(product_characterization),
    },
    Claim { id: "C-power", anchor: "a power R^n is W√JU exactly when it is √JU", check: Check::Ring(powers) },
    Claim { id: "P-matrix", anchor: "2x2 matrix rings are never W√JU", check: Check::Ring(matrices) },
    Claim { id: "P-dedekind", anchor: "W√JU rings are Dedekind-finite", check: Check::Ring(dedekind) },
    Claim {
        id: "L-reduced",
        anchor: "a W√JU ring with zero Jacobson radical whose nonzero principal right ideals contain nonzero idempotents is reduced",
        check: Check::Ring(reduced_lemma),
    },
    Claim {
        id: "P-member",
        anchor: "on W√JU rings 3 is a unit iff 2 ∈ J(R), 2 is a unit iff 3 ∈ J(R), and 3 ∈ J(R) forces Id(R) = {0,1}",
        check: Check::Ring(members),
    },
    Claim { id: "P-mino", anchor: "R is √JU exactly when R is W√JU with 2 ∈ J(R)", check: Check::Ring(mino) },
    Claim {
        id: "L-char",
        anchor: "a W√JU ring has characteristic 2^a 3^b",
        check: Check::Ring(characteristic),
    },
    Claim { id: "P-corner", anchor: "corner rings eRe of a W√JU ring are W√JU", check: Check::Ring(corners) },
    Claim {
        id: "P-3.26",
        anchor: "W√JU division rings have order 2 or 3; a local ring is W√JU exactly when R/J(R) is a field of order 2 or 3",
        check: Check::Ring(division_and_local),
    },
    Claim {
        id: "T-3.13",
        anchor: "regular W√JU rings are the weakly Boolean rings, also among π-regular reduced, strongly regular and unit-regular rings",
        check: Check::Ring(regular_chain),
    },
    Claim {
        id: "T-3.16",
        anchor: "semi-regular W√JU, exchange W√JU and semi weakly Boolean coincide, with the clean, strongly weakly nil-clean and WUU companions",
        check: Check::Ring(exchange_chain),
    },
    Claim { id: "T-m", anchor: "R is W√JU exactly when R/J(R) is WUU", check: Check::Ring(jacobson_quotient) },
    Claim {
        id: "P-uper",
        anchor: "R is √JU exactly when T_n(R) is; a W√JU ring T_n(R) with n ≥ 2 forces R to be √JU",
        check: Check::Ring(triangular),
    },
    Claim {
        id: "P-3.4",
        anchor: "the trivial extension T(R,R) is W√JU exactly when R is",
        check: Check::Ring(trivial_extensions),
    },
    Claim { id: "G-l1", anchor: "if RG is W√JU then so is R", check: Check::GroupRing(coefficients) },
    Claim { id: "G-torsion", anchor: "if RG is W√JU then G is torsion", check: Check::GroupRing(torsion) },
    Claim { id: "G-2gr", anchor: "if RG is W√JU and 2 ∈ J(R) then G is a 2-group", check: Check::GroupRing(two_groups) },
    Claim {
        id: "G-3gr",
        anchor: "if RG is W√JU, 3 ∈ J(R) and G is a p-group, then G is a 3-group",
        check: Check::GroupRing(three_groups),
    },
    Claim {
        id: "T-groupring",
        anchor: "for a p-group G, RG is W√JU exactly when R is √JU with G a 2-group, or R is W√JU with 3 ∈ J(R) and G a 3-group, or G is trivial and R splits as a √JU ring times a W√JU ring",
        check: Check::GroupRing(group_ring_theorem),
    },
];

fn sqrt_j_commuting_products(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let r = &e.ring;
    let p = cx.prof(r)?;
    let s = &p.sqrt_jacobson;
    for a in s.iter() {
        for b in r.elements() {
            let ab = r.mul(a, b);
            if ab == r.mul(b, a) && !s.contains(ab) {
                return fail(vec![a, b], "ab = ba but ab is not in √J");
            }
        }
    }
    pass()
}

fn sqrt_j_powers(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let r = &e.ring;
    let p = cx.prof(r)?;
    let s = &p.sqrt_jacobson;
    for a in r.elements() {
        let inside = s.contains(a);
        let mut x = a;
        for k in 1..=r.order() {
            if s.contains(x) != inside {
                return fail(vec![a, k], format!("a^{k} and a disagree on membership in √J"));
            }
            x = r.mul(x, a);
        }
    }
    pass()
}

fn sqrt_j_one_minus(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let r = &e.ring;
    let p = cx.prof(r)?;
    let bad = p.sqrt_jacobson.iter().find(|&a| !p.units.contains(r.sub(r.one(), a)));
    match bad {
        Some(a) => fail(vec![a], "1 - a is not a unit"),
        None => pass(),
    }
}

fn sqrt_j_center(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let r = &e.ring;
    let p = cx.prof(r)?;
    if let Some(a) = p.sqrt_jacobson.iter().find(|&a| p.center.contains(a) && !p.jacobson.contains(a)) {
        return fail(vec![a], "central element of √J outside J");
    }
    if p.commutative && p.sqrt_jacobson.members() != p.jacobson.members() {
        return fail(Vec::new(), "commutative ring with √J different from J");
    }
    pass()
}

/// Distinct ideals generated by one element of `within`, least generator first.
fn principal_ideals(r: &FiniteRing, within: impl Iterator<Item = usize>) -> Result<Vec<(usize, Ideal)>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for x in within {
        let i = ideal_generated(r, &[x])?;
        if seen.insert(i.members().to_vec()) {
            out.push((x, i));
        }
    }
    Ok(out)
}

fn sqrt_j_quotients(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let r = &e.ring;
    let p = cx.prof(r)?;
    let mut ideals: Vec<(Option<usize>, Ideal)> = Vec::new();
    if r.order() <= cx.cfg.corner_max_order {
        ideals.extend(principal_ideals(r, p.jacobson.iter())?.into_iter().map(|(x, i)| (Some(x), i)));
    }
    if !ideals.iter().any(|(_, i)| i.members() == p.jacobson.members()) {
        ideals.push((None, p.jacobson.clone()));
    }
    for (gen, ideal) in ideals {
        let (q, proj) = quotient(r, &ideal, unbounded())?;
        let qp = cx.prof(&q)?;
        let image = proj.image(&q, &p.sqrt_jacobson);
        if image.members() != qp.sqrt_jacobson.members() {
            let (elements, which) = match gen {
                Some(x) => (vec![x], format!("I generated by {x}")),
                None => (Vec::new(), "I = J(R)".to_string()),
            };
            return fail(elements, format!("{which}: image of √J(R) differs from √J(R/I)"));
        }
    }
    pass()
}

fn sqrt_j_products(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let r = &e.ring;
    let Origin::Product { factors } = r.origin() else {
        return Ok(None);
    };
    let p = cx.prof(r)?;
    let maps = projections(r)?;
    let fps = factors.iter().map(|f| cx.prof(f)).collect::<Result<Vec<_>>>()?;
    for x in r.elements() {
        let componentwise = maps.iter().zip(&fps).all(|(m, fp)| fp.sqrt_jacobson.contains(m.apply(x)));
        if componentwise != p.sqrt_jacobson.contains(x) {
            return fail(vec![x], "membership in √J differs from componentwise membership");
        }
    }
    pass()
}

fn sqrt_j_swap(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let r = &e.ring;
    let p = cx.prof(r)?;
    let s = &p.sqrt_jacobson;
    for a in r.elements() {
        for b in r.elements() {
            if s.contains(r.mul(a, b)) && !s.contains(r.mul(b, a)) {
                return fail(vec![a, b], "ab is in √J but ba is not");
            }
        }
    }
    pass()
}

fn sqrt_j_nil_plus_j(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let r = &e.ring;
    let p = cx.prof(r)?;
    for n in p.nilpotents.iter() {
        for j in p.jacobson.iter() {
            if !p.sqrt_jacobson.contains(r.add(n, j)) {
                return fail(vec![n, j], "nilpotent plus radical element outside √J");
            }
        }
    }
    pass()
}

fn surjection_images(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let r = &e.ring;
    let maps: Vec<(RingHom, Arc<FiniteRing>, Arc<FiniteRing>)> = match r.origin() {
        Origin::Product { factors } => {
            projections(r)?.into_iter().zip(factors).map(|(m, f)| (m, r.clone(), f.clone())).collect()
        }
        Origin::GroupRing { base, .. } => vec![(augmentation(r)?.0, r.clone(), base.clone())],
        Origin::Quotient { parent, projection, .. } => {
            vec![(RingHom::new(parent, r.hash(), projection.clone()), parent.clone(), r.clone())]
        }
        _ => return Ok(None),
    };
    for (i, (f, src, tgt)) in maps.iter().enumerate() {
        if let Err(err) = f.verify(src, tgt) {
            return fail(Vec::new(), format!("map {i} is not a ring homomorphism: {err}"));
        }
        if !f.is_surjective(tgt) {
            return fail(Vec::new(), format!("map {i} is not surjective"));
        }
        let sp = cx.prof(src)?;
        let tp = cx.prof(tgt)?;
        let bad = sp.sqrt_jacobson.iter().find(|&x| !tp.sqrt_jacobson.contains(f.apply(x)));
        if let Some(x) = bad {
            return fail(vec![x], format!("map {i} sends x in √J(R) outside √J(S)"));
        }
    }
    pass()
}

fn subrings(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let r = &e.ring;
    if r.order() > cx.cfg.derived_max_order {
        return Ok(None);
    }
    if !cx.w(r)? {
        return not_applicable();
    }
    let units = cx.prof(r)?.units.clone();
    let check = |gens: &[usize]| -> Result<Option<Verdict>> {
        let s = Arc::new(subring_generated(r, gens, unbounded())?);
        let Origin::Subring { embedding, .. } = s.origin() else {
            unreachable!("subring_generated records its embedding")
        };
        let su = &cx.prof(&s)?.units;
        if let Some(i) = s.elements().find(|&i| su.contains(i) != units.contains(embedding[i])) {
            return fail(gens.to_vec(), format!("U(R) ∩ S differs from U(S) at {}", embedding[i]));
        }
        if !cx.w(&s)? {
            return fail(gens.to_vec(), "subring is not W√JU");
        }
        Ok(None)
    };
    let mut masks: Vec<Vec<bool>> = Vec::new();
    let mut single = Vec::with_capacity(r.order());
    for a in r.elements() {
        let m = subring_mask(r, &[a])?;
        match masks.iter().position(|x| *x == m) {
            Some(i) => single.push(i),
            None => {
                single.push(masks.len());
                masks.push(m);
                if let Some(v) = check(&[a])? {
                    return Ok(Some(v));
                }
            }
        }
    }
    let mut tested: HashSet<Vec<bool>> = masks.iter().cloned().collect();
    let mut pairs = HashSet::new();
    for a in r.elements() {
        for b in a + 1..r.order() {
            let (sa, sb) = (single[a], single[b]);
            if masks[sa][b] || masks[sb][a] || !pairs.insert((sa.min(sb), sa.max(sb))) {
                continue;
            }
            let m = subring_mask(r, &[a, b])?;
            if tested.insert(m) {
                if let Some(v) = check(&[a, b])? {
                    return Ok(Some(v));
                }
            }
        }
    }
    pass()
}

fn quotients_by_j(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let r = &e.ring;
    if r.order() > cx.cfg.derived_max_order {
        return Ok(None);
    }
    let w = cx.w(r)?;
    let p = cx.prof(r)?;
    for (x, ideal) in principal_ideals(r, p.jacobson.iter())? {
        let q = Arc::new(quotient(r, &ideal, unbounded())?.0);
        let wq = cx.w(&q)?;
        if wq != w {
            return fail(vec![x], format!("R is W√JU = {w} but R/I is W√JU = {wq}, I generated by {x}"));
        }
    }
    pass()
}

fn product_factors(r: &FiniteRing, arity: &[usize]) -> Option<Vec<Arc<FiniteRing>>> {
    match r.origin() {
        Origin::Product { factors } if arity.contains(&factors.len()) => Some(factors.clone()),
        _ => None,
    }
}

fn product_sufficient(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let Some(f) = product_factors(&e.ring, &[2]) else {
        return Ok(None);
    };
    let (wa, sa, wb, sb) = (cx.w(&f[0])?, cx.s(&f[0])?, cx.w(&f[1])?, cx.s(&f[1])?);
    if !((wa && sb) || (sa && wb)) {
        return not_applicable();
    }
    if cx.w(&e.ring)? {
        pass()
    } else {
        fail(Vec::new(), "product of a W√JU ring and a √JU ring is not W√JU")
    }
}

fn product_characterization(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let Some(f) = product_factors(&e.ring, &[2, 3]) else {
        return Ok(None);
    };
    let mut all_w = true;
    let mut not_s = 0;
    for x in &f {
        all_w &= cx.w(x)?;
        not_s += usize::from(!cx.s(x)?);
    }
    let expected = all_w && not_s <= 1;
    Ok(Some(agree(&[("product W√JU", cx.w(&e.ring)?), ("factors W√JU with at most one not √JU", expected)])))
}

fn powers(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let Some(f) = product_factors(&e.ring, &[2, 3]) else {
        return Ok(None);
    };
    if f.iter().any(|x| x.hash() != f[0].hash()) {
        return Ok(None);
    }
    Ok(Some(agree(&[("W√JU", cx.w(&e.ring)?), ("√JU", cx.s(&e.ring)?)])))
}

/// For `M_2(R)`: the matrix `A = [[0,1],[1,1]]` with `A + I` and `A - I`,
/// as element indices. `None` for other rings.
pub fn matrix_witness(m: &FiniteRing) -> Option<[usize; 3]> {
    let Origin::Matrix { base, k: 2 } = m.origin() else {
        return None;
    };
    let b = base.order();
    let one = base.one();
    let a = one * (b + b * b + b * b * b);
    Some([a, m.add(a, m.one()), m.sub(a, m.one())])
}

fn matrices(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let r = &e.ring;
    let Origin::Matrix { k, .. } = r.origin() else {
        return Ok(None);
    };
    if *k < 2 {
        return Ok(None);
    }
    let mut witness = None;
    if let Some([_, plus, minus]) = matrix_witness(r) {
        let p = cx.prof(r)?;
        if !p.units.contains(plus) || !p.units.contains(minus) {
            return fail(vec![plus, minus], "A + I or A - I is not a unit");
        }
        witness = Some(Witness::new(vec![plus, minus], "A + I and A - I are units"));
    }
    if cx.w(r)? {
        return fail(witness.map(|w| w.elements).unwrap_or_default(), "matrix ring is W√JU");
    }
    Ok(Some(match witness {
        Some(w) => Verdict::PassWith(w),
        None => Verdict::Pass,
    }))
}

fn dedekind(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let r = &e.ring;
    if !cx.w(r)? {
        return not_applicable();
    }
    for a in r.elements() {
        for b in r.elements() {
            if r.mul(a, b) == r.one() && r.mul(b, a) != r.one() {
                return fail(vec![a, b], "ab = 1 but ba ≠ 1");
            }
        }
    }
    pass()
}

fn reduced_lemma(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let r = &e.ring;
    let p = cx.prof(r)?;
    let idempotent_in_row =
        |a: usize| r.mul_row(a).iter().any(|&y| y as usize != r.zero() && p.idempotents.contains(y as usize));
    let hypothesis =
        cx.w(r)? && p.jacobson.len() == 1 && r.elements().filter(|&a| a != r.zero()).all(idempotent_in_row);
    if !hypothesis {
        return not_applicable();
    }
    let bad = p.nilpotents.iter().find(|&x| x != r.zero());
    match bad {
        Some(x) => fail(vec![x], "nonzero nilpotent"),
        None => pass(),
    }
}

fn members(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let r = &e.ring;
    if !cx.w(r)? {
        return not_applicable();
    }
    let p = cx.prof(r)?;
    let (two, three) = (r.int(2), r.int(3));
    let elements = vec![two, three];
    if p.units.contains(three) != p.jacobson.contains(two) {
        return fail(elements, "3 ∈ U and 2 ∈ J disagree");
    }
    if p.units.contains(two) != p.jacobson.contains(three) {
        return fail(elements, "2 ∈ U and 3 ∈ J disagree");
    }
    if p.jacobson.contains(three) && p.idempotents.len() > 2 {
        return fail(elements, "3 ∈ J but there are nontrivial idempotents");
    }
    pass()
}

fn mino(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let r = &e.ring;
    let rhs = cx.w(r)? && cx.int_in_j(r, 2)?;
    Ok(Some(agree(&[("√JU", cx.s(r)?), ("W√JU with 2 ∈ J", rhs)])))
}

fn characteristic(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let r = &e.ring;
    if !cx.w(r)? {
        return not_applicable();
    }
    let mut c = r.characteristic();
    for q in [2, 3] {
        while c.is_multiple_of(q) {
            c /= q;
        }
    }
    if c == 1 {
        pass()
    } else {
        fail(Vec::new(), format!("characteristic {} has the prime-to-6 part {c}", r.characteristic()))
    }
}

fn corners(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let r = &e.ring;
    if r.order() > cx.cfg.corner_max_order {
        return Ok(None);
    }
    if !cx.w(r)? {
        return not_applicable();
    }
    let p = cx.prof(r)?;
    for idem in p.idempotents.iter().filter(|&x| x != r.zero()) {
        let c = Arc::new(corner(r, idem, unbounded())?);
        if !cx.w(&c)? {
            return fail(vec![idem], "corner ring is not W√JU");
        }
    }
    pass()
}

fn is_division(r: &FiniteRing, p: &RingProfile) -> bool {
    r.order() > 1 && p.units.len() == r.order() - 1
}

fn division_and_local(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let r = &e.ring;
    let p = cx.prof(r)?;
    let rec = cx.rec(r)?;
    if is_division(r, &p) {
        if let Verdict::Fail(w) =
            agree(&[("W√JU division ring", rec.w_sqrt_ju), ("order 2 or 3", matches!(r.order(), 2 | 3))])
        {
            return Ok(Some(Verdict::Fail(w)));
        }
    }
    let q = cx.an.jacobson_quotient(r)?;
    let qp = cx.prof(&q)?;
    let small_field = matches!(q.order(), 2 | 3) && is_division(&q, &qp) && qp.commutative;
    Ok(Some(agree(&[("local and W√JU", rec.local && rec.w_sqrt_ju), ("R/J a field of order 2 or 3", small_field)])))
}

fn regular_chain(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let rec = cx.rec(&e.ring)?;
    let (Some(pi), Some(ur)) = (rec.pi_regular, rec.unit_regular) else {
        return Ok(Some(Verdict::Skipped("π-regular or unit-regular verdict skipped for size".into())));
    };
    let w = rec.w_sqrt_ju;
    Ok(Some(agree(&[
        ("regular ∧ W√JU", rec.regular && w),
        ("π-regular ∧ reduced ∧ W√JU", pi && rec.reduced && w),
        ("weakly Boolean", rec.weakly_boolean),
        ("strongly regular ∧ W√JU", rec.strongly_regular && w),
        ("unit-regular ∧ W√JU", ur && w),
    ])))
}

fn exchange_chain(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let rec = cx.rec(&e.ring)?;
    let Some(ex) = rec.exchange else {
        return Ok(Some(Verdict::Skipped("exchange verdict skipped for size".into())));
    };
    let w = rec.w_sqrt_ju;
    let mut checks = vec![agree(&[
        ("semi-regular ∧ W√JU", rec.semi_regular && w),
        ("exchange ∧ W√JU", ex && w),
        ("semi weakly Boolean", rec.semi_weakly_boolean),
    ])];
    if w {
        checks.push(agree(&[("semi-regular", rec.semi_regular), ("exchange", ex), ("clean", rec.clean)]));
    }
    checks.push(agree(&[("exchange ∧ W√JU", ex && w), ("strongly weakly nil-clean", rec.strongly_weakly_nil_clean)]));
    if ex {
        checks.push(agree(&[("W√JU", w), ("WUU", rec.wuu)]));
    }
    Ok(Some(checks.into_iter().find(|v| matches!(v, Verdict::Fail(_))).unwrap_or(Verdict::Pass)))
}

fn jacobson_quotient(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let r = &e.ring;
    let w = cx.w(r)?;
    let q = cx.an.jacobson_quotient(r)?;
    let rq = cx.rec(&q)?;
    if let Verdict::Fail(wt) = agree(&[("W√JU", w), ("R/J WUU", rq.wuu)]) {
        return Ok(Some(Verdict::Fail(wt)));
    }
    let p = cx.prof(r)?;
    let wuu = cx.rec(r)?.wuu;
    if p.jacobson.len() == 1 || p.jacobson.is_subset(&p.nilpotents) {
        return Ok(Some(agree(&[("W√JU", w), ("WUU with J nil", wuu)])));
    }
    pass()
}

fn triangular(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let r = &e.ring;
    let Origin::Triangular { base, k } = r.origin() else {
        return Ok(None);
    };
    let sb = cx.s(base)?;
    if let Verdict::Fail(w) = agree(&[("R √JU", sb), ("T_n(R) √JU", cx.s(r)?)]) {
        return Ok(Some(Verdict::Fail(w)));
    }
    if *k >= 2 && cx.w(r)? && !sb {
        return fail(Vec::new(), "T_n(R) is W√JU but R is not √JU");
    }
    pass()
}

fn trivial_extensions(cx: &Ctx, e: &CatalogEntry) -> Result<Option<Verdict>> {
    let r = &e.ring;
    let Origin::TrivialExtension { base } = r.origin() else {
        return Ok(None);
    };
    Ok(Some(agree(&[("T(R,R) W√JU", cx.w(r)?), ("R W√JU", cx.w(base)?)])))
}

fn coefficients(cx: &Ctx, g: &GroupRingParts) -> Result<Verdict> {
    if !cx.w(&g.ring)? {
        return Ok(Verdict::NotApplicable);
    }
    if cx.w(&g.base)? {
        Ok(Verdict::Pass)
    } else {
        Ok(Verdict::Fail(Witness::new(Vec::new(), "RG is W√JU but R is not")))
    }
}

fn torsion(_cx: &Ctx, g: &GroupRingParts) -> Result<Verdict> {
    for x in 0..g.group.order() {
        let k = g.group.element_order(x)?;
        if !g.group.order().is_multiple_of(k) {
            return Ok(Verdict::Fail(Witness::new(vec![x], format!("element order {k} does not divide |G|"))));
        }
    }
    Ok(Verdict::Pass)
}

fn is_p_group(g: &FiniteGroup) -> bool {
    g.is_trivial() || g.p_group_prime().is_some()
}

fn two_groups(cx: &Ctx, g: &GroupRingParts) -> Result<Verdict> {
    if !(cx.w(&g.ring)? && cx.int_in_j(&g.base, 2)?) {
        return Ok(Verdict::NotApplicable);
    }
    if g.group.is_p_group(2)? {
        Ok(Verdict::Pass)
    } else {
        Ok(Verdict::Fail(Witness::new(Vec::new(), "G is not a 2-group")))
    }
}

fn three_groups(cx: &Ctx, g: &GroupRingParts) -> Result<Verdict> {
    if !(is_p_group(&g.group) && cx.w(&g.ring)? && cx.int_in_j(&g.base, 3)?) {
        return Ok(Verdict::NotApplicable);
    }
    if g.group.is_p_group(3)? {
        Ok(Verdict::Pass)
    } else {
        Ok(Verdict::Fail(Witness::new(Vec::new(), "G is not a 3-group")))
    }
}

/// A central idempotent `e ∉ {0,1}` with `eRe` √JU and `(1-e)R(1-e)` W√JU.
fn splitting_idempotent(cx: &Ctx, r: &Arc<FiniteRing>) -> Result<Option<usize>> {
    let p = cx.prof(r)?;
    for e in p.idempotents.iter().filter(|&e| e != r.zero() && e != r.one() && p.center.contains(e)) {
        let c = Arc::new(corner(r, e, unbounded())?);
        let d = Arc::new(corner(r, r.sub(r.one(), e), unbounded())?);
        if cx.s(&c)? && cx.w(&d)? {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

fn group_ring_theorem(cx: &Ctx, g: &GroupRingParts) -> Result<Verdict> {
    if !is_p_group(&g.group) {
        return Ok(Verdict::NotApplicable);
    }
    let w = cx.w(&g.ring)?;
    let first = cx.s(&g.base)? && g.group.is_p_group(2)?;
    let second = cx.w(&g.base)? && cx.int_in_j(&g.base, 3)? && g.group.is_p_group(3)?;
    let split = if g.group.is_trivial() { splitting_idempotent(cx, &g.base)? } else { None };
    if w == (first || second || split.is_some()) {
        return Ok(match split {
            Some(e) => Verdict::PassWith(Witness::new(vec![e], "central idempotent splitting R")),
            None => Verdict::Pass,
        });
    }
    Ok(Verdict::Fail(Witness::new(
        split.into_iter().collect(),
        format!(
            "RG W√JU = {w}; R √JU with G a 2-group = {first}; R W√JU, 3 ∈ J, G a 3-group = {second}; split = {}",
            split.is_some()
        ),
    )))
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use crate::analysis::Analyzer;

    fn statuses(id: &str, subject: &str) -> Vec<Status> {
        check_claim(id, subject, &Analyzer::default(), 4096).unwrap().iter().map(|o| o.status).collect()
    }

    #[test]
    fn spec_examples() {
        let out = check_claim("P-matrix", "M(2,Z(2))", &Analyzer::default(), 4096).unwrap();
        assert_eq!(out[0].status, Status::Pass);
        assert_eq!(out[0].witness.as_ref().unwrap().elements.len(), 2);
        assert_eq!(statuses("T-m", "Z(9)"), [Status::Pass]);
        assert_eq!(statuses("L-char", "Z(6)"), [Status::Pass]);
        assert_eq!(statuses("L-char", "Z(5)"), [Status::NotApplicable]);
        assert_eq!(statuses("T-groupring", "GR(Z(4),C(3))"), [Status::Pass]);
        assert!(matches!(check_claim("BOGUS", "Z(2)", &Analyzer::default(), 4096), Err(TheoremError::UnknownClaim(_))));
    }

    #[test]
    fn matrix_witness_in_m2z3() {
        let r = crate::expr::Evaluator::new(Default::default()).ring("M(2,Z(3))").unwrap();
        let [a, plus, minus] = matrix_witness(&r).unwrap();
        // digits 1, 2, 3 equal to 1
        assert_eq!(a, 3 + 9 + 27);
        assert_eq!(plus, 1 + 3 + 9 + 2 * 27);
        assert_eq!(minus, 2 + 3 + 9);
    }

    #[test]
    fn empty_catalog_has_no_subjects() {
        let cat = build_catalog(&CatalogConfig::empty()).unwrap();
        let rep = run_suite(&cat, &Analyzer::default(), &select_claims("all").unwrap());
        assert_eq!(rep.claims.len(), CLAIMS.len());
        assert!(rep.claims.iter().all(|c| c.subjects == 0));
    }
}
