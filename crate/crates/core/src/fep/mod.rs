//! Finite embeddings of partial subalgebras of finite chains.
//!
//! Given a chain `A` and a finite set `B` of its elements containing the
//! constants, [`build_d`] forms the submonoid `M` generated by `B`, the
//! family of context sets `{c ∈ M : a₁·c·a₂ ≤ b}` (or `{c ∈ M : a·c ≤ b}` in
//! the commutative modes), and the algebra `D` of all intersections of
//! context sets. `a ↦ (a]` then embeds the partial subalgebra `B` into `D`;
//! [`verify_embedding`] and [`verify_lemmas`] check that on the instance.

mod construction;
mod monoid;
mod sets;
mod verify;

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Elem, FiniteResiduatedLattice};
use crate::classify::Class;
use crate::error::FepError;

pub use construction::{build_d, closure_c, context_set, Context, DownsetAlgebra};
pub use monoid::{generate_monoid, GeneratedMonoid};
pub use sets::{Downset, MSet};
pub use verify::{check_m_to_p, verify_embedding, verify_lemmas, EmbeddingReport, LemmaOutcome, LemmaReport, MToP};

/// Which flavour of the construction to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Commutative chains; contexts `(a ↦ b]`.
    Commutative,
    /// Involutive commutative chains; `B` is first closed under `¬`.
    Involutive,
    /// Weakly commutative chains; contexts `{c : a₁·c·a₂ ≤ b}`.
    TwoSided,
}

impl Mode {
    /// Class the parent chain must belong to.
    pub fn parent_class(self) -> Class {
        match self {
            Mode::Commutative => Class::ULOmega,
            Mode::Involutive => Class::IULOmega,
            Mode::TwoSided => Class::HpsULStarOmega,
        }
    }

    pub fn is_commutative(self) -> bool {
        !matches!(self, Mode::TwoSided)
    }

    pub fn slug(self) -> &'static str {
        match self {
            Mode::Commutative => "ul",
            Mode::Involutive => "iul",
            Mode::TwoSided => "psul",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ul" => Ok(Mode::Commutative),
            "iul" => Ok(Mode::Involutive),
            "psul" => Ok(Mode::TwoSided),
            _ => Err(format!("unknown mode `{s}` (expected ul, iul or psul)")),
        }
    }
}

/// The partial operations a partial subalgebra inherits from its parent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartialOp {
    Mul,
    LDiv,
    RDiv,
    Meet,
    Join,
}

impl PartialOp {
    pub const ALL: [PartialOp; 5] = [PartialOp::Mul, PartialOp::LDiv, PartialOp::RDiv, PartialOp::Meet, PartialOp::Join];

    pub fn name(self) -> &'static str {
        match self {
            PartialOp::Mul => "*",
            PartialOp::LDiv => "\\",
            PartialOp::RDiv => "/",
            PartialOp::Meet => "meet",
            PartialOp::Join => "join",
        }
    }

    pub fn eval(self, a: &FiniteResiduatedLattice, x: Elem, y: Elem) -> Elem {
        match self {
            PartialOp::Mul => a.mul(x, y),
            PartialOp::LDiv => a.ldiv(x, y),
            PartialOp::RDiv => a.rdiv(x, y),
            PartialOp::Meet => a.meet(x, y),
            PartialOp::Join => a.join(x, y),
        }
    }
}

/// A subset `B` of a parent algebra with the operations restricted to `B`:
/// an operation is undefined on arguments whose parent result leaves `B`.
#[derive(Debug, Clone)]
pub struct PartialSubalgebra<'a> {
    parent: &'a FiniteResiduatedLattice,
    elements: Vec<Elem>,
}

impl<'a> PartialSubalgebra<'a> {
    /// Requires `{e, f, bot, top} ⊆ B`.
    pub fn new(parent: &'a FiniteResiduatedLattice, elements: &[Elem]) -> Result<Self, FepError> {
        if let Some(&x) = elements.iter().find(|&&x| x >= parent.size()) {
            return Err(FepError::PreconditionViolated(format!("element {x} is not in the parent algebra")));
        }
        let mut elements = elements.to_vec();
        elements.sort_unstable();
        elements.dedup();
        for (name, c) in [("e", parent.e()), ("f", parent.f()), ("bot", parent.bot()), ("top", parent.top())] {
            if elements.binary_search(&c).is_err() {
                return Err(FepError::PreconditionViolated(format!("subset must contain {name} = {c}")));
            }
        }
        Ok(PartialSubalgebra { parent, elements })
    }

    /// The whole carrier.
    pub fn full(parent: &'a FiniteResiduatedLattice) -> Self {
        PartialSubalgebra { parent, elements: parent.elements().collect() }
    }

    pub fn parent(&self) -> &'a FiniteResiduatedLattice {
        self.parent
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The restricted operation, `None` when the parent result is outside `B`.
    pub fn apply(&self, op: PartialOp, x: Elem, y: Elem) -> Option<Elem> {
        debug_assert!(self.contains(x) && self.contains(y));
        Some(op.eval(self.parent, x, y)).filter(|&r| self.contains(r))
    }

    pub fn is_closed_under_negation(&self) -> bool {
        self.elements.iter().all(|&b| self.contains(self.parent.neg(b)))
    }

    /// Smallest superset closed under `x ↦ x\f`, plus the elements that were added.
    pub fn close_under_negation(&self) -> (PartialSubalgebra<'a>, Vec<Elem>) {
        let mut elements = self.elements.clone();
        let mut added = Vec::new();
        let mut i = 0;
        while i < elements.len() {
            let n = self.parent.neg(elements[i]);
            if !elements.contains(&n) {
                elements.push(n);
                added.push(n);
            }
            i += 1;
        }
        elements.sort_unstable();
        added.sort_unstable();
        (PartialSubalgebra { parent: self.parent, elements }, added)
    }
}
