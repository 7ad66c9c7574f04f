//! Instance-level verification of a built downset algebra.

use std::collections::BTreeSet;

use crate::algebra::Elem;
use crate::classify::{check_axioms, check_semilinearity};
use crate::error::FepError;
use crate::fep::construction::{Context, DownsetAlgebra};
use crate::fep::sets::MSet;
use crate::fep::{Mode, PartialOp};

/// Largest `|M|` for which properties quantified over arbitrary subsets of
/// `M` are checked on every subset; above it a probe family is used.
const EXHAUSTIVE_SUBSETS: usize = 6;
/// Largest `|D|` for which every subfamily of `D` is enumerated.
const EXHAUSTIVE_FAMILIES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingReport {
    /// `(b, index of (b] in D)` for every `b ∈ B`.
    pub images: Vec<(Elem, usize)>,
    /// Number of defined partial operation instances that were compared.
    pub operations_checked: usize,
}

/// Checks that `b ↦ (b]` is a partial embedding of `B` into `D`: injective,
/// order preserving and reflecting, sending constants to constants, and
/// commuting with every partial operation defined in `B`.
pub fn verify_embedding(d: &DownsetAlgebra<'_>) -> Result<EmbeddingReport, FepError> {
    let parent = d.parent();
    let alg = d.algebra();
    let b = d.subset();
    let violation = |operation: &str, detail: String| FepError::EmbeddingViolation {
        operation: operation.to_string(),
        detail,
    };
    let mut images = Vec::with_capacity(b.len());
    for &x in b.elements() {
        let i = d
            .embed(x)
            .ok_or_else(|| violation("image", format!("({x}] is not an element of D")))?;
        images.push((x, i));
    }
    let image = |x: Elem| images.iter().find(|p| p.0 == x).map(|p| p.1).unwrap();
    let distinct: BTreeSet<usize> = images.iter().map(|p| p.1).collect();
    if distinct.len() != images.len() {
        return Err(violation("injectivity", "two elements share an image".into()));
    }
    for &(x, ix) in &images {
        for &(y, iy) in &images {
            if parent.leq(x, y) != alg.leq(ix, iy) {
                return Err(violation("order", format!("{x} <= {y} is not mirrored in D")));
            }
        }
    }
    for (name, c, target) in [
        ("e", parent.e(), alg.e()),
        ("f", parent.f(), alg.f()),
        ("bot", parent.bot(), alg.bot()),
        ("top", parent.top(), alg.top()),
    ] {
        if image(c) != target {
            return Err(violation(name, format!("image of {c} is {} not {target}", image(c))));
        }
    }
    let mut operations_checked = 0;
    for op in PartialOp::ALL {
        for &x in b.elements() {
            for &y in b.elements() {
                let Some(r) = b.apply(op, x, y) else { continue };
                let in_d = op.eval(alg, image(x), image(y));
                if image(r) != in_d {
                    return Err(violation(
                        op.name(),
                        format!("{x} {} {y} = {r} maps to {} but D gives {in_d}", op.name(), image(r)),
                    ));
                }
                operations_checked += 1;
            }
        }
    }
    Ok(EmbeddingReport { images, operations_checked })
}

/// The family `{(m ↦ p] : m ∈ M}` (pairs `(m₁, m₂)` in two-sided mode).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MToP {
    pub is_linear: bool,
    pub size: usize,
}

pub fn check_m_to_p(d: &DownsetAlgebra<'_>, p: Elem) -> MToP {
    let parent = d.parent();
    let m = d.monoid();
    let set_of = |ctx: Context| {
        let mut s = MSet::EMPTY;
        for (i, &c) in m.elements().iter().enumerate() {
            if ctx.admits(parent, c) {
                s.insert(i);
            }
        }
        s
    };
    let mut family = BTreeSet::new();
    for &x in m.elements() {
        match d.mode() {
            Mode::TwoSided => {
                for &y in m.elements() {
                    family.insert(set_of(Context::TwoSided { left: x, right: y, b: p }));
                }
            }
            _ => {
                family.insert(set_of(Context::Commutative { a: x, b: p }));
            }
        }
    }
    let sets: Vec<MSet> = family.into_iter().collect();
    let is_linear = sets
        .iter()
        .all(|x| sets.iter().all(|y| x.is_subset(*y) || y.is_subset(*x)));
    MToP { is_linear, size: sets.len() }
}

/// Outcome of one property check on a built instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaOutcome {
    pub name: &'static str,
    pub checked: usize,
    pub failure: Option<String>,
}

impl LemmaOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LemmaReport {
    pub outcomes: Vec<LemmaOutcome>,
}

impl LemmaReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(LemmaOutcome::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LemmaOutcome> {
        self.outcomes.iter().filter(|o| !o.passed())
    }

    pub fn get(&self, name: &str) -> Option<&LemmaOutcome> {
        self.outcomes.iter().find(|o| o.name == name)
    }
}

struct Check {
    name: &'static str,
    checked: usize,
    failure: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check { name, checked: 0, failure: None }
    }

    fn expect(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    fn done(self) -> LemmaOutcome {
        LemmaOutcome { name: self.name, checked: self.checked, failure: self.failure }
    }
}

/// Every property of the construction, each checked on all applicable
/// elements of `D`, subsets of `M` and elements of `B`.
///
/// Triple negation and the residual of principal downsets are only claimed
/// in the commutative modes and are skipped in two-sided mode; the double
/// negation checks run in involutive mode only.
pub fn verify_lemmas(d: &DownsetAlgebra<'_>) -> LemmaReport {
    let parent = d.parent();
    let alg = d.algebra();
    let dd = d.carrier();
    let universe = d.universe();
    let probe = probe_subsets(d);
    let e_set = d.principal(parent.e());
    let mut outcomes = Vec::new();

    let mut c = Check::new("closure-fixes-carrier");
    for (name, x) in [
        ("bot", d.principal(parent.bot())),
        ("top", d.principal(parent.top())),
        ("e", e_set),
        ("f", d.principal(parent.f())),
    ] {
        c.expect(d.context_sets().contains(&x), || format!("({name}] is not a context set"));
    }
    for &x in dd {
        c.expect(d.closure(x) == x, || format!("C({x:?}) != {x:?}"));
    }
    outcomes.push(c.done());

    let mut c = Check::new("closure-operator");
    for &x in &probe {
        let cx = d.closure(x);
        c.expect(x.is_subset(cx), || format!("{x:?} not inside C(X)"));
        c.expect(d.closure(cx) == cx, || format!("C(C({x:?})) != C({x:?})"));
        for &y in &probe {
            if x.is_subset(y) {
                c.expect(cx.is_subset(d.closure(y)), || format!("C not monotone on {x:?} ⊆ {y:?}"));
            }
        }
    }
    outcomes.push(c.done());

    let mut c = Check::new("join-residual-splits");
    for &x in dd {
        for &y in dd {
            let j = d.join_set(x, y);
            for &z in dd {
                let lhs = d.ldiv_set(j, z);
                let rhs = d.ldiv_set(x, z).intersect(d.ldiv_set(y, z));
                c.expect(lhs == rhs, || format!("(X ∨ Y)\\Z differs at {x:?}, {y:?}, {z:?}"));
            }
        }
    }
    outcomes.push(c.done());

    let mut c = Check::new("residual-preserves-intersections");
    for &x in &probe {
        for &y1 in dd {
            for &y2 in dd {
                let meet = y1.intersect(y2);
                c.expect(
                    d.ldiv_set(x, meet) == d.ldiv_set(x, y1).intersect(d.ldiv_set(x, y2)),
                    || format!("X\\(Y1 ∩ Y2) differs at {x:?}, {y1:?}, {y2:?}"),
                );
                c.expect(
                    d.rdiv_set(meet, x) == d.rdiv_set(y1, x).intersect(d.rdiv_set(y2, x)),
                    || format!("(Y1 ∩ Y2)/X differs at {x:?}, {y1:?}, {y2:?}"),
                );
            }
        }
        let all = dd.iter().fold(universe, |acc, s| acc.intersect(*s));
        let each = dd.iter().fold(universe, |acc, s| acc.intersect(d.ldiv_set(x, *s)));
        c.expect(d.ldiv_set(x, all) == each, || format!("X\\(⋂D) differs at {x:?}"));
    }
    outcomes.push(c.done());

    let mut c = Check::new("residuals-stay-in-carrier");
    for &x in &probe {
        for &y in dd {
            c.expect(d.index_of(d.ldiv_set(x, y)).is_some(), || format!("{x:?}\\{y:?} not in D"));
            c.expect(d.index_of(d.rdiv_set(y, x)).is_some(), || format!("{y:?}/{x:?} not in D"));
        }
    }
    outcomes.push(c.done());

    let mut c = Check::new("monoid-laws");
    for &x in dd {
        c.expect(d.mul_set(x, e_set) == x && d.mul_set(e_set, x) == x, || format!("e^D is not a unit at {x:?}"));
        for &y in dd {
            let xy = d.mul_set(x, y);
            c.expect(
                xy.is_subset(e_set) == d.mul_set(y, x).is_subset(e_set),
                || format!("X·Y ⊆ e^D not symmetric at {x:?}, {y:?}"),
            );
            for &z in dd {
                let left = d.mul_set(xy, z);
                let right = d.mul_set(x, d.mul_set(y, z));
                let flat = d.closure(d.product_set(d.product_set(x, y), z));
                c.expect(left == right && right == flat, || {
                    format!("associativity fails at {x:?}, {y:?}, {z:?}")
                });
            }
        }
    }
    outcomes.push(c.done());

    let mut c = Check::new("residuation");
    for (i, &x) in dd.iter().enumerate() {
        for (j, &y) in dd.iter().enumerate() {
            let l = d.ldiv_set(x, y);
            let r = d.rdiv_set(x, y);
            c.expect(
                d.index_of(l) == Some(alg.ldiv(i, j)) && d.index_of(r) == Some(alg.rdiv(i, j)),
                || format!("set residuals of {x:?}, {y:?} disagree with the residual tables"),
            );
            for &z in dd {
                let p = d.mul_set(x, y).is_subset(z);
                c.expect(
                    p == y.is_subset(d.ldiv_set(x, z)) && p == x.is_subset(d.rdiv_set(z, y)),
                    || format!("residuation fails at {x:?}, {y:?}, {z:?}"),
                );
            }
        }
    }
    outcomes.push(c.done());

    let mut c = Check::new("residual-of-product");
    for &x in &probe {
        for &y in &probe {
            let yx = d.mul_set(y, x);
            for &z in dd {
                c.expect(
                    d.ldiv_set(x, d.ldiv_set(y, z)) == d.ldiv_set(yx, z),
                    || format!("X\\(Y\\Z) != (Y·X)\\Z at {x:?}, {y:?}, {z:?}"),
                );
            }
        }
    }
    outcomes.push(c.done());

    let mut c = Check::new("semilinearity");
    c.expect(check_semilinearity(alg), || "semilinearity identity fails in D".into());
    outcomes.push(c.done());

    if d.mode().is_commutative() {
        let mut c = Check::new("triple-negation");
        for &x in &probe {
            let n = d.neg_set(x);
            c.expect(d.neg_set(d.neg_set(n)) == n, || format!("∼∼∼X != ∼X at {x:?}"));
        }
        outcomes.push(c.done());

        let mut c = Check::new("residual-of-principals");
        let b = d.subset();
        for &x in b.elements() {
            for &y in b.elements() {
                if let Some(r) = b.apply(PartialOp::LDiv, x, y) {
                    c.expect(
                        d.principal(r) == d.ldiv_set(d.principal(x), d.principal(y)),
                        || format!("({x}\\{y}] != ({x}]\\({y}]"),
                    );
                }
            }
        }
        outcomes.push(c.done());
    }

    let mut c = Check::new("square-below-unit");
    for &x in dd {
        for &y in dd {
            let xy = d.mul_set(x, y);
            c.expect(
                xy.is_subset(e_set) == d.mul_set(xy, y).is_subset(e_set),
                || format!("X·Y ⊆ (e] and X·Y·Y ⊆ (e] disagree at {x:?}, {y:?}"),
            );
        }
    }
    outcomes.push(c.done());

    let mut c = Check::new("class-check");
    let class = d.mode().parent_class();
    let report = check_axioms(alg);
    c.expect(report.in_class(class), || format!("D is {} rather than {class}", report.verdict_line()));
    outcomes.push(c.done());

    let families = subfamilies(dd.len());
    let mut c = Check::new("complete-lattice");
    for fam in &families {
        let meet = fam.iter().fold(universe, |acc, &i| acc.intersect(dd[i]));
        let union = fam.iter().fold(MSet::EMPTY, |acc, &i| acc.union(dd[i]));
        let join = d.closure(union);
        c.expect(d.index_of(meet).is_some(), || format!("meet of {fam:?} not in D"));
        c.expect(
            d.index_of(join).is_some() && fam.iter().all(|&i| dd[i].is_subset(join)),
            || format!("join of {fam:?} not in D"),
        );
    }
    outcomes.push(c.done());

    let mut c = Check::new("infinite-distributivity");
    for fam in &families {
        let meet = fam.iter().fold(universe, |acc, &i| acc.intersect(dd[i]));
        let join = d.closure(fam.iter().fold(MSet::EMPTY, |acc, &i| acc.union(dd[i])));
        for &y in dd {
            let parts: Vec<MSet> = fam.iter().map(|&i| d.ldiv_set(dd[i], y)).collect();
            let join_parts = d.closure(parts.iter().fold(MSet::EMPTY, |acc, s| acc.union(*s)));
            let meet_parts = parts.iter().fold(universe, |acc, s| acc.intersect(*s));
            c.expect(d.ldiv_set(meet, y) == join_parts, || format!("(⋀X)\\Y differs for {fam:?}, {y:?}"));
            c.expect(d.ldiv_set(join, y) == meet_parts, || format!("(⋁X)\\Y differs for {fam:?}, {y:?}"));
        }
    }
    outcomes.push(c.done());

    if d.mode() == Mode::Involutive {
        let mut c = Check::new("double-negation-principal");
        for &x in d.subset().elements() {
            let p = d.principal(x);
            c.expect(d.neg_set(d.neg_set(p)) == p, || format!("∼∼({x}] != ({x}]"));
        }
        outcomes.push(c.done());

        let mut c = Check::new("double-negation-contexts");
        for &s in d.context_sets() {
            c.expect(d.neg_set(d.neg_set(s)) == s, || format!("∼∼{s:?} != {s:?}"));
        }
        outcomes.push(c.done());

        let mut c = Check::new("double-negation");
        for &x in dd {
            c.expect(d.neg_set(d.neg_set(x)) == x, || format!("∼∼{x:?} != {x:?}"));
        }
        outcomes.push(c.done());
    }

    let mut c = Check::new("embedding");
    match verify_embedding(d) {
        Ok(r) => c.checked += r.operations_checked,
        Err(err) => c.expect(false, || err.to_string()),
    }
    outcomes.push(c.done());

    let mut c = Check::new("m-to-p-linear");
    let bound = match d.mode() {
        Mode::TwoSided => d.monoid().len() * d.monoid().len(),
        _ => d.monoid().len(),
    };
    for &p in d.subset().elements() {
        let r = check_m_to_p(d, p);
        c.expect(r.is_linear && r.size <= bound, || format!("M => {p} has {} sets, linear = {}", r.size, r.is_linear));
    }
    outcomes.push(c.done());

    let mut c = Check::new("finite-carrier");
    c.expect(dd.len() <= d.context_sets().len() + 1, || {
        format!("|D| = {} exceeds {} context sets + 1", dd.len(), d.context_sets().len())
    });
    outcomes.push(c.done());

    LemmaReport { outcomes }
}

fn probe_subsets(d: &DownsetAlgebra<'_>) -> Vec<MSet> {
    let m = d.monoid().len();
    if m <= EXHAUSTIVE_SUBSETS {
        return (0..1u64 << m).map(MSet).collect();
    }
    let mut out: BTreeSet<MSet> = d.carrier().iter().copied().collect();
    out.insert(MSet::EMPTY);
    for i in 0..m {
        out.insert(MSet::singleton(i));
        for j in i + 1..m {
            out.insert(MSet::singleton(i).union(MSet::singleton(j)));
        }
    }
    out.into_iter().collect()
}

/// Nonempty subfamilies of `0..k`: all of them when `k` is small, else all
/// pairs and triples.
fn subfamilies(k: usize) -> Vec<Vec<usize>> {
    if k <= EXHAUSTIVE_FAMILIES {
        return (1..1usize << k)
            .map(|mask| (0..k).filter(|&i| mask >> i & 1 == 1).collect())
            .collect();
    }
    let mut out = Vec::new();
    for i in 0..k {
        out.push(vec![i]);
        for j in i + 1..k {
            out.push(vec![i, j]);
            for l in j + 1..k {
                out.push(vec![i, j, l]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::*;
    use crate::fep::{build_d, PartialSubalgebra};

    #[test]
    fn lukasiewicz_full_instance() {
        let a = lukasiewicz3();
        let d = build_d(&PartialSubalgebra::full(&a), Mode::Involutive).unwrap();
        let emb = verify_embedding(&d).unwrap();
        assert_eq!(emb.images, vec![(0, 0), (1, 1), (2, 2)]);
        let report = verify_lemmas(&d);
        for o in &report.outcomes {
            assert!(o.passed(), "{}: {:?}", o.name, o.failure);
        }
        assert!(report.get("double-negation").is_some());
    }

    #[test]
    fn m_to_p_examples() {
        let a = lukasiewicz3();
        let d = build_d(&PartialSubalgebra::full(&a), Mode::Commutative).unwrap();
        assert_eq!(check_m_to_p(&d, a.top()), MToP { is_linear: true, size: 1 });
        assert_eq!(check_m_to_p(&d, 0), MToP { is_linear: true, size: 3 });
    }
}
