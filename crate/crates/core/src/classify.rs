//! Exhaustive classification of finite algebras into the HpsUL family.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Elem, FiniteResiduatedLattice};
use crate::error::AlgebraError;

/// The classes of bounded residuated lattices handled by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    /// Bounded semilinear residuated lattices.
    HpsUL,
    /// HpsUL with weak commutativity.
    HpsULStar,
    /// Commutative HpsUL.
    UL,
    /// Involutive UL.
    IUL,
    HpsULStarOmega,
    ULOmega,
    IULOmega,
}

impl Class {
    pub const ALL: [Class; 7] = [
        Class::HpsUL,
        Class::HpsULStar,
        Class::UL,
        Class::IUL,
        Class::HpsULStarOmega,
        Class::ULOmega,
        Class::IULOmega,
    ];

    /// Command-line spelling, e.g. `ul-omega`.
    pub fn slug(self) -> &'static str {
        match self {
            Class::HpsUL => "hpsul",
            Class::HpsULStar => "hpsul-star",
            Class::UL => "ul",
            Class::IUL => "iul",
            Class::HpsULStarOmega => "hpsul-star-omega",
            Class::ULOmega => "ul-omega",
            Class::IULOmega => "iul-omega",
        }
    }

    pub fn requires_commutative(self) -> bool {
        matches!(self, Class::UL | Class::IUL | Class::ULOmega | Class::IULOmega)
    }

    pub fn is_omega(self) -> bool {
        matches!(self, Class::HpsULStarOmega | Class::ULOmega | Class::IULOmega)
    }

    /// The same class without the (Fin) requirement.
    pub fn without_fin(self) -> Class {
        match self {
            Class::HpsULStarOmega => Class::HpsULStar,
            Class::ULOmega => Class::UL,
            Class::IULOmega => Class::IUL,
            c => c,
        }
    }

    /// The same class with (Fin) added; `None` for HpsUL.
    pub fn with_fin(self) -> Option<Class> {
        match self {
            Class::HpsUL => None,
            Class::HpsULStar | Class::HpsULStarOmega => Some(Class::HpsULStarOmega),
            Class::UL | Class::ULOmega => Some(Class::ULOmega),
            Class::IUL | Class::IULOmega => Some(Class::IULOmega),
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class::HpsUL => "HpsUL",
            Class::HpsULStar => "HpsUL*",
            Class::UL => "UL",
            Class::IUL => "IUL",
            Class::HpsULStarOmega => "HpsUL*_omega",
            Class::ULOmega => "UL_omega",
            Class::IULOmega => "IUL_omega",
        })
    }
}

impl FromStr for Class {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Class::ALL
            .into_iter()
            .find(|c| c.slug() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Class::ALL.iter().map(|c| c.slug()).collect();
                format!("unknown class `{s}` (expected one of {})", names.join(", "))
            })
    }
}

/// Result of [`check_axioms`]: one flag per identity, each decided by exhaustive quantification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassReport {
    /// Associative product with unit `e` (the lattice part is validated on construction).
    pub is_lattice_monoid: bool,
    pub is_residuated: bool,
    pub is_chain: bool,
    pub is_semilinear: bool,
    pub has_wcm: bool,
    pub is_commutative: bool,
    /// Commutative and `¬¬x = x` with `¬x = x\f`.
    pub is_involutive: bool,
    pub has_fin: bool,
}

impl ClassReport {
    pub fn is_residuated_lattice(&self) -> bool {
        self.is_lattice_monoid && self.is_residuated
    }

    pub fn in_class(&self, class: Class) -> bool {
        let hpsul = self.is_residuated_lattice() && self.is_semilinear;
        match class {
            Class::HpsUL => hpsul,
            Class::HpsULStar => hpsul && self.has_wcm,
            Class::UL => hpsul && self.is_commutative,
            Class::IUL => hpsul && self.is_commutative && self.is_involutive,
            Class::HpsULStarOmega => hpsul && self.has_wcm && self.has_fin,
            Class::ULOmega => hpsul && self.is_commutative && self.has_fin,
            Class::IULOmega => hpsul && self.is_commutative && self.is_involutive && self.has_fin,
        }
    }

    /// Most specific class the algebra belongs to, if any.
    pub fn verdict(&self) -> Option<Class> {
        [
            Class::IULOmega,
            Class::IUL,
            Class::ULOmega,
            Class::UL,
            Class::HpsULStarOmega,
            Class::HpsULStar,
            Class::HpsUL,
        ]
        .into_iter()
        .find(|&c| self.in_class(c))
    }

    /// Human-readable class line, e.g. `IUL_omega chain`.
    pub fn verdict_line(&self) -> String {
        let kind = if self.is_chain { "chain" } else { "algebra" };
        match self.verdict() {
            Some(c) => format!("{c} {kind}"),
            None if self.is_residuated_lattice() => format!("non-semilinear residuated {kind}"),
            None => format!("not a residuated lattice ({kind})"),
        }
    }
}

pub fn check_axioms(a: &FiniteResiduatedLattice) -> ClassReport {
    let is_lattice_monoid = is_associative(a) && has_unit(a);
    let is_residuated = check_residuation(a).is_ok();
    let is_chain = is_total(a);
    let is_semilinear = is_residuated && check_semilinearity(a);
    let has_wcm = check_wcm(a);
    let is_commutative = is_commutative(a);
    let is_involutive = is_commutative && a.elements().all(|x| a.neg(a.neg(x)) == x);
    let has_fin = check_fin_identity(a);
    ClassReport {
        is_lattice_monoid,
        is_residuated,
        is_chain,
        is_semilinear,
        has_wcm,
        is_commutative,
        is_involutive,
        has_fin,
    }
}

fn is_associative(a: &FiniteResiduatedLattice) -> bool {
    a.elements().all(|x| {
        a.elements()
            .all(|y| a.elements().all(|z| a.mul(a.mul(x, y), z) == a.mul(x, a.mul(y, z))))
    })
}

fn has_unit(a: &FiniteResiduatedLattice) -> bool {
    a.elements().all(|x| a.mul(a.e(), x) == x && a.mul(x, a.e()) == x)
}

fn is_total(a: &FiniteResiduatedLattice) -> bool {
    a.elements().all(|x| a.elements().all(|y| a.leq(x, y) || a.leq(y, x)))
}

fn is_commutative(a: &FiniteResiduatedLattice) -> bool {
    a.elements().all(|x| a.elements().all(|y| a.mul(x, y) == a.mul(y, x)))
}

/// `x*y <= e` implies `y*x <= e`.
pub fn check_wcm(a: &FiniteResiduatedLattice) -> bool {
    let e = a.e();
    a.elements()
        .all(|x| a.elements().all(|y| !a.leq(a.mul(x, y), e) || a.leq(a.mul(y, x), e)))
}

/// `x\e = x²\e` for every `x`, read off the residual table.
pub fn check_fin_identity(a: &FiniteResiduatedLattice) -> bool {
    let e = a.e();
    a.elements().all(|x| a.ldiv(x, e) == a.ldiv(a.mul(x, x), e))
}

/// The same identity unfolded through residuation: `x*z <= e` iff `x²*z <= e`.
/// Uses only the product and the order, never the residual tables.
pub fn check_fin_by_products(a: &FiniteResiduatedLattice) -> bool {
    let e = a.e();
    a.elements().all(|x| {
        let xx = a.mul(x, x);
        a.elements().all(|z| a.leq(a.mul(x, z), e) == a.leq(a.mul(xx, z), e))
    })
}

/// A counterexample to an identity or quasi-identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: &'static str,
    pub witness: Vec<Elem>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.law, self.witness)
    }
}

fn first_violation<const N: usize>(
    a: &FiniteResiduatedLattice,
    law: &'static str,
    holds: impl Fn([Elem; N]) -> bool,
) -> Result<(), Violation> {
    let n = a.size();
    let mut idx = [0; N];
    loop {
        if !holds(idx) {
            return Err(Violation { law, witness: idx.to_vec() });
        }
        let mut k = N;
        loop {
            if k == 0 {
                return Ok(());
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < n {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// `x*y <= z` iff `x <= z/y` iff `y <= x\z`, over all triples.
pub fn check_residuation(a: &FiniteResiduatedLattice) -> Result<(), Violation> {
    first_violation(a, "residuation", |[x, y, z]| {
        let p = a.leq(a.mul(x, y), z);
        p == a.leq(x, a.rdiv(z, y)) && p == a.leq(y, a.ldiv(x, z))
    })
}

/// `λ_u((x∨y)\x) ∨ ρ_v((x∨y)\y) = e` for all `x, y, u, v`.
pub fn check_semilinearity(a: &FiniteResiduatedLattice) -> bool {
    let e = a.e();
    for x in a.elements() {
        for y in a.elements() {
            let j = a.join(x, y);
            let left = a.ldiv(j, x);
            let right = a.ldiv(j, y);
            for u in a.elements() {
                let l = a.lambda_poly(u, left);
                for v in a.elements() {
                    if a.join(l, a.rho_poly(v, right)) != e {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Exponent insensitivity of products below `e`: for all `x, y` the truth of
/// `x^k * y^l <= e` does not depend on `1 <= k, l <= n_max`. Taking `y = e`
/// covers the single-generator case.
pub fn check_fin_exponents(a: &FiniteResiduatedLattice, n_max: usize) -> Result<bool, AlgebraError> {
    if !check_wcm(a) || !check_fin_identity(a) {
        return Err(AlgebraError::PreconditionViolated(
            "exponent check needs (Wcm) and (Fin)".into(),
        ));
    }
    Ok(exponents_agree(a, n_max))
}

pub(crate) fn exponents_agree(a: &FiniteResiduatedLattice, n_max: usize) -> bool {
    if n_max <= 1 {
        return true;
    }
    let e = a.e();
    let powers: Vec<Vec<Elem>> = a
        .elements()
        .map(|x| (1..=n_max).map(|k| a.pow(x, k)).collect())
        .collect();
    a.elements().all(|x| {
        a.elements().all(|y| {
            let first = a.leq(a.mul(powers[x][0], powers[y][0]), e);
            powers[x]
                .iter()
                .all(|&xk| powers[y].iter().all(|&yl| a.leq(a.mul(xk, yl), e) == first))
        })
    })
}

/// `x*y <= e` iff `x*y*y <= e`.
pub fn check_square_insensitivity(a: &FiniteResiduatedLattice) -> Result<(), Violation> {
    let e = a.e();
    first_violation(a, "xy <= e iff xyy <= e", |[x, y]| {
        let xy = a.mul(x, y);
        a.leq(xy, e) == a.leq(a.mul(xy, y), e)
    })
}

/// The strict-order facts of residuated chains:
/// `s*t > u` iff `t > s\u` iff `s > u/t`; `s*u > t*u` implies `s > t`;
/// `s*t*u = u` implies `t*u = u`. The last one needs (Wcm) and (Fin).
pub fn check_chain_strict_laws(a: &FiniteResiduatedLattice) -> Result<(), Violation> {
    let gt = |x: Elem, y: Elem| !a.leq(x, y);
    first_violation(a, "st > u iff t > s\\u iff s > u/t", |[s, t, u]| {
        let p = gt(a.mul(s, t), u);
        p == gt(t, a.ldiv(s, u)) && p == gt(s, a.rdiv(u, t))
    })?;
    first_violation(a, "su > tu implies s > t", |[s, t, u]| {
        !gt(a.mul(s, u), a.mul(t, u)) || gt(s, t)
    })?;
    first_violation(a, "stu = u implies tu = u", |[s, t, u]| {
        a.mul(a.mul(s, t), u) != u || a.mul(t, u) == u
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::*;
    use crate::algebra::Order;

    #[test]
    fn lukasiewicz_is_iul_omega_chain() {
        let r = check_axioms(&lukasiewicz3());
        assert!(r.is_chain && r.is_commutative && r.is_involutive && r.has_fin);
        assert_eq!(r.verdict(), Some(Class::IULOmega));
        assert_eq!(r.verdict_line(), "IUL_omega chain");
    }

    #[test]
    fn boolean_chain_has_every_flag() {
        let r = check_axioms(&boolean2());
        assert!(
            r.is_lattice_monoid
                && r.is_residuated
                && r.is_chain
                && r.is_semilinear
                && r.has_wcm
                && r.is_commutative
                && r.is_involutive
                && r.has_fin
        );
    }

    #[test]
    fn fin_exponents() {
        let a = lukasiewicz3();
        assert_eq!(check_fin_exponents(&a, 4), Ok(true));
        assert_eq!(check_fin_exponents(&a, 1), Ok(true));
        assert!(check_square_insensitivity(&a).is_ok());
    }

    /// 4-chain with e = 2 whose elements 1, 3 multiply as a left-zero semigroup.
    fn left_zero_chain() -> FiniteResiduatedLattice {
        #[rustfmt::skip]
        let product = vec![
            0, 0, 0, 0,
            0, 1, 1, 1,
            0, 1, 2, 3,
            0, 3, 3, 3,
        ];
        FiniteResiduatedLattice::chain(4, product, 2, 0).unwrap()
    }

    #[test]
    fn fin_exponents_needs_wcm() {
        let a = left_zero_chain();
        assert!(!check_wcm(&a));
        assert!(matches!(
            check_fin_exponents(&a, 3),
            Err(AlgebraError::PreconditionViolated(_))
        ));
        assert_eq!(check_axioms(&a).verdict(), Some(Class::HpsUL));
    }

    #[test]
    fn diamond_with_middle_unit_is_not_semilinear() {
        // 0 < 1, 2 < 3 ; e = 1, 2*2 = 0, 2*3 = 3*2 = 2, 3*3 = 3
        let order = Order::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        #[rustfmt::skip]
        let product = vec![
            0, 0, 0, 0,
            0, 1, 2, 3,
            0, 2, 0, 2,
            0, 3, 2, 3,
        ];
        let a = FiniteResiduatedLattice::new(4, order, product, 1, 0, 0, 3).unwrap();
        let r = check_axioms(&a);
        assert!(r.is_residuated_lattice());
        assert!(!r.is_chain);
        assert!(!r.is_semilinear);
        assert_eq!(r.verdict(), None);
    }

    #[test]
    fn class_slugs_round_trip() {
        for c in Class::ALL {
            assert_eq!(c.slug().parse::<Class>(), Ok(c));
        }
        assert!("nope".parse::<Class>().is_err());
    }
}
