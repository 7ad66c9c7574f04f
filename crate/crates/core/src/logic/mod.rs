//! Formulas over `{∧, ∨, ·, \, /, e, f, ⊥, ⊤}`, their algebraic semantics
//! with designated set `{x : x ≥ e}`, and a bounded semantic decider that
//! searches the enumerated chains of a class.

mod formula;
mod parser;

use rayon::prelude::*;

use crate::algebra::{Elem, FiniteResiduatedLattice};
use crate::classify::Class;
use crate::enumeration::enumerate_chains;
use crate::error::EvalError;

pub use formula::{Connective, Constant, Formula};
pub use parser::parse;

/// Value of `phi` in `a` under `assignment` (entry `i` is the value of `x{i+1}`).
pub fn eval(phi: &Formula, a: &FiniteResiduatedLattice, assignment: &[Elem]) -> Result<Elem, EvalError> {
    Ok(match phi {
        Formula::Var(i) => *assignment.get(*i).ok_or(EvalError::UnboundVariable(*i))?,
        Formula::Const(c) => match c {
            Constant::E => a.e(),
            Constant::F => a.f(),
            Constant::Bot => a.bot(),
            Constant::Top => a.top(),
        },
        Formula::Binary(op, l, r) => {
            let (x, y) = (eval(l, a, assignment)?, eval(r, a, assignment)?);
            match op {
                Connective::And => a.meet(x, y),
                Connective::Or => a.join(x, y),
                Connective::Fusion => a.mul(x, y),
                Connective::LDiv => a.ldiv(x, y),
                Connective::RDiv => a.rdiv(x, y),
            }
        }
    })
}

fn designated(a: &FiniteResiduatedLattice, x: Elem) -> bool {
    a.leq(a.e(), x)
}

/// Whether `assignment` makes every premise designated and `phi` not.
pub fn refutes(
    a: &FiniteResiduatedLattice,
    premises: &[Formula],
    phi: &Formula,
    assignment: &[Elem],
) -> Result<bool, EvalError> {
    for p in premises {
        if !designated(a, eval(p, a, assignment)?) {
            return Ok(false);
        }
    }
    Ok(!designated(a, eval(phi, a, assignment)?))
}

/// The first refuting assignment in lexicographic order, if any.
pub fn find_counterexample(a: &FiniteResiduatedLattice, premises: &[Formula], phi: &Formula) -> Option<Vec<Elem>> {
    let k = premises.iter().map(Formula::num_vars).fold(phi.num_vars(), usize::max);
    let n = a.size();
    let mut v = vec![0; k];
    loop {
        if refutes(a, premises, phi, &v).expect("every variable is assigned") {
            return Some(v);
        }
        // odometer, last variable fastest
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            v[i] += 1;
            if v[i] < n {
                break;
            }
            v[i] = 0;
        }
    }
}

/// `Γ ⊨_A φ`: every assignment designating all of `premises` designates `phi`.
pub fn validates(a: &FiniteResiduatedLattice, premises: &[Formula], phi: &Formula) -> bool {
    find_counterexample(a, premises, phi).is_none()
}

/// Whether `a` validates `(x1 \ e) <-> ((x1 * x1) \ e)`.
pub fn fin_bridge(a: &FiniteResiduatedLattice) -> bool {
    validates(a, &[], &Formula::fin_axiom())
}

/// Outcome of a bounded search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// No counter-model among the searched algebras.
    ValidUpToBound { bound: usize, searched: usize },
    Counterexample { algebra: FiniteResiduatedLattice, assignment: Vec<Elem> },
}

impl Verdict {
    pub fn is_counterexample(&self) -> bool {
        matches!(self, Verdict::Counterexample { .. })
    }
}

/// Searches `algebras` in order and returns the first counter-model with
/// its first refuting assignment. The result is independent of thread count.
pub fn search(algebras: &[FiniteResiduatedLattice], premises: &[Formula], phi: &Formula) -> Option<(usize, Vec<Elem>)> {
    algebras
        .par_iter()
        .enumerate()
        .find_map_first(|(i, a)| find_counterexample(a, premises, phi).map(|v| (i, v)))
}

/// Sweeps every canonical chain of `class` with at most `max_size` elements.
///
/// A counterexample is conclusive and is re-checked before it is returned;
/// otherwise the verdict only says no chain up to the bound refutes.
pub fn decide_bounded(premises: &[Formula], phi: &Formula, class: Class, max_size: usize) -> Verdict {
    let family = enumerate_chains(max_size, class);
    match search(family.as_slice(), premises, phi) {
        Some((i, assignment)) => {
            let algebra = family.as_slice()[i].clone();
            assert!(
                refutes(&algebra, premises, phi, &assignment) == Ok(true),
                "counterexample failed re-verification"
            );
            Verdict::Counterexample { algebra, assignment }
        }
        None => Verdict::ValidUpToBound { bound: max_size, searched: family.len() },
    }
}
