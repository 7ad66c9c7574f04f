use std::collections::BTreeSet;

use crate::algebra::{Elem, FiniteResiduatedLattice};
use crate::classify::check_axioms;
use crate::error::FepError;
use crate::fep::monoid::{generate_monoid, GeneratedMonoid};
use crate::fep::sets::{Downset, MSet};
use crate::fep::{Mode, PartialSubalgebra};

/// Names a context set. Components are parent elements: `a`, `left`, `right`
/// range over `M` and `b` over `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Context {
    /// `(a ↦ b] = {c ∈ M : a·c ≤ b}`
    Commutative { a: Elem, b: Elem },
    /// `{c ∈ M : left·c·right ≤ b}`
    TwoSided { left: Elem, right: Elem, b: Elem },
}

impl Context {
    /// Whether `c` belongs to the context set.
    pub fn admits(&self, parent: &FiniteResiduatedLattice, c: Elem) -> bool {
        match *self {
            Context::Commutative { a, b } => parent.leq(parent.mul(a, c), b),
            Context::TwoSided { left, right, b } => parent.leq(parent.mul(parent.mul(left, c), right), b),
        }
    }
}

fn context_mset(parent: &FiniteResiduatedLattice, m: &GeneratedMonoid, ctx: &Context) -> MSet {
    let mut set = MSet::EMPTY;
    for (i, &c) in m.elements().iter().enumerate() {
        if ctx.admits(parent, c) {
            set.insert(i);
        }
    }
    set
}

/// The context set named by `ctx`, as a downset of `M`.
///
/// Panics if `parent` is not a chain with monotone product, in which case the
/// set need not be downward closed.
pub fn context_set(parent: &FiniteResiduatedLattice, m: &GeneratedMonoid, ctx: &Context) -> Downset {
    Downset::from_set(context_mset(parent, m, ctx)).expect("context sets of a chain are nonempty downsets")
}

/// Intersection of every member of `family` containing `x`; `universe` when none does.
pub fn closure_c(family: &[MSet], universe: MSet, x: MSet) -> MSet {
    family
        .iter()
        .filter(|s| x.is_subset(**s))
        .fold(universe, |acc, s| acc.intersect(*s))
}

/// The finite algebra `D` built from a partial subalgebra of a chain.
#[derive(Debug, Clone)]
pub struct DownsetAlgebra<'a> {
    mode: Mode,
    subset: PartialSubalgebra<'a>,
    added_by_negation: Vec<Elem>,
    monoid: GeneratedMonoid,
    mul_index: Vec<usize>,
    contexts: Vec<Context>,
    context_sets: Vec<MSet>,
    carrier: Vec<MSet>,
    algebra: FiniteResiduatedLattice,
}

/// Runs the construction for `b` in the given mode.
///
/// The parent of `b` must be a chain of [`Mode::parent_class`]. In
/// [`Mode::Involutive`] the subset is first closed under `x ↦ x\f`.
pub fn build_d<'a>(b: &PartialSubalgebra<'a>, mode: Mode) -> Result<DownsetAlgebra<'a>, FepError> {
    let parent = b.parent();
    let report = check_axioms(parent);
    if !report.is_chain {
        return Err(FepError::PreconditionViolated("parent algebra is not a chain".into()));
    }
    let class = mode.parent_class();
    if !report.in_class(class) {
        return Err(FepError::PreconditionViolated(format!(
            "parent chain is not {class} (classified as {})",
            report.verdict_line()
        )));
    }
    let (subset, added_by_negation) = match mode {
        Mode::Involutive => b.close_under_negation(),
        _ => (b.clone(), Vec::new()),
    };
    let monoid = generate_monoid(parent, &subset);
    let m = monoid.len();
    if m > 64 {
        return Err(FepError::TooLarge(m));
    }
    let mut mul_index = vec![0; m * m];
    for i in 0..m {
        for j in 0..m {
            let p = parent.mul(monoid.element(i), monoid.element(j));
            mul_index[i * m + j] = monoid
                .index_of(p)
                .ok_or_else(|| FepError::ConstructionFailed(format!("M not closed under product at {p}")))?;
        }
    }

    let mut contexts = Vec::new();
    for &x in monoid.elements() {
        for &y in subset.elements() {
            match mode {
                Mode::Commutative | Mode::Involutive => contexts.push(Context::Commutative { a: x, b: y }),
                Mode::TwoSided => {
                    for &r in monoid.elements() {
                        contexts.push(Context::TwoSided { left: x, right: r, b: y });
                    }
                }
            }
        }
    }
    let distinct: BTreeSet<MSet> = contexts.iter().map(|c| context_mset(parent, &monoid, c)).collect();
    let context_sets: Vec<MSet> = distinct.into_iter().collect();

    // all intersections of context sets; the empty intersection is M
    let universe = MSet::prefix(m);
    let mut carrier: BTreeSet<MSet> = context_sets.iter().copied().collect();
    carrier.insert(universe);
    loop {
        let current: Vec<MSet> = carrier.iter().copied().collect();
        let before = carrier.len();
        for (i, x) in current.iter().enumerate() {
            for y in &current[i + 1..] {
                carrier.insert(x.intersect(*y));
            }
        }
        if carrier.len() == before {
            break;
        }
    }
    let mut carrier: Vec<MSet> = carrier.into_iter().collect();
    carrier.sort_by_key(|s| (s.len(), *s));
    for w in carrier.windows(2) {
        if !w[0].is_subset(w[1]) {
            return Err(FepError::ConstructionFailed(format!(
                "D is not linearly ordered: {:?} and {:?} are incomparable",
                w[0], w[1]
            )));
        }
    }
    if let Some(bad) = carrier.iter().find(|s| Downset::from_set(**s).is_none()) {
        return Err(FepError::ConstructionFailed(format!("{bad:?} is not a nonempty downset of M")));
    }

    let mut d = DownsetAlgebra {
        mode,
        subset,
        added_by_negation,
        monoid,
        mul_index,
        contexts,
        context_sets,
        carrier,
        // placeholder until the product table is known
        algebra: FiniteResiduatedLattice::chain(1, vec![0], 0, 0).expect("trivial"),
    };
    let k = d.carrier.len();
    let mut product = vec![0; k * k];
    for i in 0..k {
        for j in 0..k {
            let c = d.closure(d.product_set(d.carrier[i], d.carrier[j]));
            product[i * k + j] = d.index_of(c).expect("closures are intersections of context sets");
        }
    }
    let unit = d.principal_index(parent.e())?;
    let f = d.principal_index(parent.f())?;
    if d.principal_index(parent.bot())? != 0 || d.carrier[k - 1] != universe {
        return Err(FepError::ConstructionFailed("bounds of D are not {bot} and M".into()));
    }
    d.algebra = FiniteResiduatedLattice::chain(k, product, unit, f)?;
    Ok(d)
}

impl<'a> DownsetAlgebra<'a> {
    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn parent(&self) -> &'a FiniteResiduatedLattice {
        self.subset.parent()
    }

    /// The subset actually used, after any negation closure.
    pub fn subset(&self) -> &PartialSubalgebra<'a> {
        &self.subset
    }

    pub fn added_by_negation(&self) -> &[Elem] {
        &self.added_by_negation
    }

    pub fn monoid(&self) -> &GeneratedMonoid {
        &self.monoid
    }

    pub fn contexts(&self) -> &[Context] {
        &self.contexts
    }

    /// Distinct context sets, sorted.
    pub fn context_sets(&self) -> &[MSet] {
        &self.context_sets
    }

    /// The carrier of `D` in ascending inclusion order; index `i` here is
    /// element `i` of [`algebra`](Self::algebra).
    pub fn carrier(&self) -> &[MSet] {
        &self.carrier
    }

    /// `D` as a canonical chain.
    pub fn algebra(&self) -> &FiniteResiduatedLattice {
        &self.algebra
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn universe(&self) -> MSet {
        MSet::prefix(self.monoid.len())
    }

    pub fn index_of(&self, set: MSet) -> Option<usize> {
        self.carrier.iter().position(|&s| s == set)
    }

    pub fn set(&self, i: usize) -> MSet {
        self.carrier[i]
    }

    /// `C(X)`: the intersection of every context set containing `X`.
    pub fn closure(&self, x: MSet) -> MSet {
        closure_c(&self.context_sets, self.universe(), x)
    }

    /// `XY = {xy : x ∈ X, y ∈ Y}`
    pub fn product_set(&self, x: MSet, y: MSet) -> MSet {
        let m = self.monoid.len();
        let mut out = MSet::EMPTY;
        for i in x.iter() {
            for j in y.iter() {
                out.insert(self.mul_index[i * m + j]);
            }
        }
        out
    }

    /// `X·Y` in `D`, i.e. `C(XY)`.
    pub fn mul_set(&self, x: MSet, y: MSet) -> MSet {
        self.closure(self.product_set(x, y))
    }

    /// `X\Y = {a ∈ M : Xa ⊆ Y}`
    pub fn ldiv_set(&self, x: MSet, y: MSet) -> MSet {
        let mut out = MSet::EMPTY;
        for a in 0..self.monoid.len() {
            if self.product_set(x, MSet::singleton(a)).is_subset(y) {
                out.insert(a);
            }
        }
        out
    }

    /// `Y/X = {a ∈ M : aX ⊆ Y}`
    pub fn rdiv_set(&self, y: MSet, x: MSet) -> MSet {
        let mut out = MSet::EMPTY;
        for a in 0..self.monoid.len() {
            if self.product_set(MSet::singleton(a), x).is_subset(y) {
                out.insert(a);
            }
        }
        out
    }

    /// `X ∨ Y = C(X ∪ Y)`
    pub fn join_set(&self, x: MSet, y: MSet) -> MSet {
        self.closure(x.union(y))
    }

    /// `∼X = X\(f]`
    pub fn neg_set(&self, x: MSet) -> MSet {
        self.ldiv_set(x, self.principal(self.parent().f()))
    }

    /// `(x] = {c ∈ M : c ≤ x}` for any parent element `x`.
    pub fn principal(&self, x: Elem) -> MSet {
        let parent = self.parent();
        let mut out = MSet::EMPTY;
        for (i, &c) in self.monoid.elements().iter().enumerate() {
            if parent.leq(c, x) {
                out.insert(i);
            }
        }
        out
    }

    fn principal_index(&self, x: Elem) -> Result<usize, FepError> {
        self.index_of(self.principal(x))
            .ok_or_else(|| FepError::ConstructionFailed(format!("({x}] is not an element of D")))
    }

    /// `ι(b) = (b]` as an index into `D`.
    pub fn embed(&self, b: Elem) -> Option<usize> {
        self.index_of(self.principal(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::*;

    #[test]
    fn lukasiewicz_full_subset_rebuilds_itself() {
        let a = lukasiewicz3();
        let b = PartialSubalgebra::full(&a);
        let d = build_d(&b, Mode::Commutative).unwrap();
        assert_eq!(d.monoid().len(), 3);
        assert_eq!(d.carrier(), &[MSet(0b1), MSet(0b11), MSet(0b111)]);
        assert_eq!(*d.algebra(), a);
    }

    #[test]
    fn context_examples() {
        let a = lukasiewicz3();
        let b = PartialSubalgebra::full(&a);
        let m = generate_monoid(&a, &b);
        for y in 0..3 {
            let ctx = Context::Commutative { a: a.e(), b: y };
            assert_eq!(context_set(&a, &m, &ctx), Downset { cut: y });
        }
        let all = Context::Commutative { a: 1, b: a.top() };
        assert_eq!(context_set(&a, &m, &all).to_set(), MSet::prefix(3));
        let ctx = Context::Commutative { a: 1, b: 0 };
        assert_eq!(context_set(&a, &m, &ctx).to_set(), MSet(0b11));
    }

    #[test]
    fn closure_of_bottom_and_universe() {
        let a = lukasiewicz3();
        let d = build_d(&PartialSubalgebra::full(&a), Mode::Commutative).unwrap();
        assert_eq!(d.closure(MSet::singleton(0)), MSet::singleton(0));
        assert_eq!(d.closure(d.universe()), d.universe());
        assert_eq!(closure_c(&[], MSet::prefix(3), MSet::EMPTY), MSet::prefix(3));
    }

    #[test]
    fn rejects_non_commutative_parent_in_commutative_mode() {
        #[rustfmt::skip]
        let product = vec![
            0, 0, 0, 0,
            0, 1, 1, 1,
            0, 1, 2, 3,
            0, 3, 3, 3,
        ];
        let a = FiniteResiduatedLattice::chain(4, product, 2, 0).unwrap();
        let b = PartialSubalgebra::full(&a);
        assert!(matches!(build_d(&b, Mode::Commutative), Err(FepError::PreconditionViolated(_))));
        assert!(matches!(build_d(&b, Mode::TwoSided), Err(FepError::PreconditionViolated(_))));
    }
}
