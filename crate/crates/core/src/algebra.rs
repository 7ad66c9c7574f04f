//! Finite bounded residuated lattices stored as dense operation tables.
//!
//! Elements are the indices `0..size`. When the order is the numeric order
//! on indices the algebra is a *canonical chain*; two canonical chains are
//! isomorphic exactly when their tables and constants coincide.

use std::fmt;

use crate::error::AlgebraError;

/// Index of an element of a finite algebra.
pub type Elem = usize;

type Cell = u16;

/// How the lattice order of an algebra is given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Order {
    /// `i <= j` iff `i <= j` as integers.
    Chain,
    /// Row-major `size x size` relation, `leq[i * size + j]` meaning `i <= j`.
    Relation(Vec<bool>),
}

impl Order {
    /// Reflexive-transitive closure of a covering relation `(lower, upper)`.
    pub fn from_covers(size: usize, covers: &[(Elem, Elem)]) -> Result<Order, AlgebraError> {
        let mut leq = vec![false; size * size];
        for i in 0..size {
            leq[i * size + i] = true;
        }
        for &(lo, hi) in covers {
            if lo >= size || hi >= size {
                return Err(AlgebraError::MalformedTable(format!(
                    "covering pair ({lo}, {hi}) out of range for size {size}"
                )));
            }
            leq[lo * size + hi] = true;
        }
        // Warshall
        for k in 0..size {
            for i in 0..size {
                if leq[i * size + k] {
                    for j in 0..size {
                        if leq[k * size + j] {
                            leq[i * size + j] = true;
                        }
                    }
                }
            }
        }
        Ok(Order::Relation(leq))
    }
}

/// A finite bounded residuated lattice `<A, meet, join, *, \, /, e, f, bot, top>`.
///
/// Construction validates the lattice order and derives the join, meet and
/// both residual tables. Monoid laws are *not* enforced here so that the
/// classifier can report on near-misses; see [`crate::classify::check_axioms`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteResiduatedLattice {
    size: usize,
    chain: bool,
    leq: Vec<bool>,
    product: Vec<Cell>,
    e: Elem,
    f: Elem,
    bot: Elem,
    top: Elem,
    join: Vec<Cell>,
    meet: Vec<Cell>,
    // x\z stored at x * size + z
    ldiv: Vec<Cell>,
    // z/y stored at z * size + y
    rdiv: Vec<Cell>,
}

impl FiniteResiduatedLattice {
    /// Builds a canonical chain: `bot = 0`, `top = size - 1`, numeric order.
    pub fn chain(size: usize, product: Vec<Elem>, e: Elem, f: Elem) -> Result<Self, AlgebraError> {
        if size == 0 {
            return Err(AlgebraError::MalformedTable("empty carrier".into()));
        }
        Self::new(size, Order::Chain, product, e, f, 0, size - 1)
    }

    pub fn new(
        size: usize,
        order: Order,
        product: Vec<Elem>,
        e: Elem,
        f: Elem,
        bot: Elem,
        top: Elem,
    ) -> Result<Self, AlgebraError> {
        if size == 0 {
            return Err(AlgebraError::MalformedTable("empty carrier".into()));
        }
        if size > Cell::MAX as usize {
            return Err(AlgebraError::MalformedTable(format!("size {size} too large")));
        }
        for (name, c) in [("e", e), ("f", f), ("bot", bot), ("top", top)] {
            if c >= size {
                return Err(AlgebraError::MalformedTable(format!(
                    "constant {name} = {c} out of range for size {size}"
                )));
            }
        }
        if product.len() != size * size {
            return Err(AlgebraError::MalformedTable(format!(
                "product table has {} entries, expected {}",
                product.len(),
                size * size
            )));
        }
        if let Some((pos, v)) = product.iter().enumerate().find(|(_, &v)| v >= size) {
            return Err(AlgebraError::MalformedTable(format!(
                "product entry {} * {} = {v} out of range",
                pos / size,
                pos % size
            )));
        }
        let leq = match order {
            Order::Chain => (0..size * size).map(|k| k / size <= k % size).collect(),
            Order::Relation(rel) => {
                if rel.len() != size * size {
                    return Err(AlgebraError::MalformedTable("order relation has wrong size".into()));
                }
                rel
            }
        };
        validate_partial_order(size, &leq)?;
        for x in 0..size {
            if !leq[bot * size + x] {
                return Err(AlgebraError::MalformedTable(format!("bot = {bot} is not below {x}")));
            }
            if !leq[x * size + top] {
                return Err(AlgebraError::MalformedTable(format!("top = {top} is not above {x}")));
            }
        }
        let join = bound_table(size, &leq, true)?;
        let meet = bound_table(size, &leq, false)?;
        let chain = (0..size * size).all(|k| leq[k] == (k / size <= k % size));
        let product: Vec<Cell> = product.into_iter().map(|v| v as Cell).collect();
        let (ldiv, rdiv) = residual_tables(size, &leq, &product, bot)?;
        Ok(FiniteResiduatedLattice {
            size,
            chain,
            leq,
            product,
            e,
            f,
            bot,
            top,
            join,
            meet,
            ldiv,
            rdiv,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// True when the order is the numeric order on indices.
    pub fn is_canonical_chain(&self) -> bool {
        self.chain
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x * self.size + y]
    }

    #[inline]
    pub fn lt(&self, x: Elem, y: Elem) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.product[x * self.size + y] as Elem
    }

    #[inline]
    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[x * self.size + y] as Elem
    }

    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x * self.size + y] as Elem
    }

    /// Left residual `x\z`, the largest `y` with `x*y <= z`.
    #[inline]
    pub fn ldiv(&self, x: Elem, z: Elem) -> Elem {
        self.ldiv[x * self.size + z] as Elem
    }

    /// Right residual `z/y`, the largest `x` with `x*y <= z`.
    #[inline]
    pub fn rdiv(&self, z: Elem, y: Elem) -> Elem {
        self.rdiv[z * self.size + y] as Elem
    }

    /// `x\f`
    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        self.ldiv(x, self.f)
    }

    /// `f/x`, the right-handed negation; equals [`neg`](Self::neg) in commutative algebras.
    #[inline]
    pub fn rneg(&self, x: Elem) -> Elem {
        self.rdiv(self.f, x)
    }

    /// `x^k` with `x^0 = e`.
    pub fn pow(&self, x: Elem, k: usize) -> Elem {
        (0..k).fold(self.e, |acc, _| self.mul(acc, x))
    }

    pub fn e(&self) -> Elem {
        self.e
    }

    pub fn f(&self) -> Elem {
        self.f
    }

    pub fn bot(&self) -> Elem {
        self.bot
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    /// Row-major product table.
    pub fn product_table(&self) -> Vec<Elem> {
        self.product.iter().map(|&v| v as Elem).collect()
    }

    /// Covering pairs `(lower, upper)` of the order, sorted.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let n = self.size;
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.lt(x, y) && !(0..n).any(|z| self.lt(x, z) && self.lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// `λ_a(b) = (a\(b*a)) ∧ e`
    pub fn lambda_poly(&self, a: Elem, b: Elem) -> Elem {
        self.meet(self.ldiv(a, self.mul(b, a)), self.e)
    }

    /// `ρ_a(b) = ((a*b)/a) ∧ e`
    pub fn rho_poly(&self, a: Elem, b: Elem) -> Elem {
        self.meet(self.rdiv(self.mul(a, b), a), self.e)
    }

    /// Same carrier, order and product with a different `f`.
    pub fn with_f(&self, f: Elem) -> Result<Self, AlgebraError> {
        if f >= self.size {
            return Err(AlgebraError::MalformedTable(format!("constant f = {f} out of range")));
        }
        Ok(FiniteResiduatedLattice { f, ..self.clone() })
    }
}

impl fmt::Debug for FiniteResiduatedLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FRL(n={}, {}, e={}, f={}, bot={}, top={}, product={:?})",
            self.size,
            if self.chain { "chain" } else { "poset" },
            self.e,
            self.f,
            self.bot,
            self.top,
            self.product
        )
    }
}

fn validate_partial_order(size: usize, leq: &[bool]) -> Result<(), AlgebraError> {
    for x in 0..size {
        if !leq[x * size + x] {
            return Err(AlgebraError::MalformedTable(format!("order not reflexive at {x}")));
        }
        for y in 0..size {
            if x != y && leq[x * size + y] && leq[y * size + x] {
                return Err(AlgebraError::MalformedTable(format!(
                    "order not antisymmetric at ({x}, {y})"
                )));
            }
            if leq[x * size + y] {
                for z in 0..size {
                    if leq[y * size + z] && !leq[x * size + z] {
                        return Err(AlgebraError::MalformedTable(format!(
                            "order not transitive at ({x}, {y}, {z})"
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

fn bound_table(size: usize, leq: &[bool], upper: bool) -> Result<Vec<Cell>, AlgebraError> {
    let below = |a: usize, b: usize| if upper { leq[a * size + b] } else { leq[b * size + a] };
    let mut table = vec![0; size * size];
    for x in 0..size {
        for y in 0..size {
            let bounds: Vec<usize> = (0..size).filter(|&z| below(x, z) && below(y, z)).collect();
            let best = bounds
                .iter()
                .copied()
                .find(|&z| bounds.iter().all(|&w| below(z, w)))
                .ok_or_else(|| {
                    AlgebraError::MalformedTable(format!(
                        "elements {x} and {y} have no {}",
                        if upper { "join" } else { "meet" }
                    ))
                })?;
            table[x * size + y] = best as Cell;
        }
    }
    Ok(table)
}

/// Derives the left and right residual tables of a product over a finite lattice.
///
/// `leq` is the row-major order relation. The product must be order preserving in
/// each argument with `bot` absorbing; otherwise, or when some set `{y : x*y <= z}`
/// has no greatest element, [`AlgebraError::NotResiduated`] is returned.
pub fn derive_residuals(
    size: usize,
    leq: &[bool],
    product: &[Elem],
    bot: Elem,
) -> Result<(Vec<Elem>, Vec<Elem>), AlgebraError> {
    if leq.len() != size * size || product.len() != size * size || bot >= size {
        return Err(AlgebraError::MalformedTable("table dimensions do not match size".into()));
    }
    if product.iter().any(|&v| v >= size) {
        return Err(AlgebraError::MalformedTable("product entry out of range".into()));
    }
    let cells: Vec<Cell> = product.iter().map(|&v| v as Cell).collect();
    let (l, r) = residual_tables(size, leq, &cells, bot)?;
    Ok((
        l.into_iter().map(|v| v as Elem).collect(),
        r.into_iter().map(|v| v as Elem).collect(),
    ))
}

fn residual_tables(
    size: usize,
    leq: &[bool],
    product: &[Cell],
    bot: Elem,
) -> Result<(Vec<Cell>, Vec<Cell>), AlgebraError> {
    let le = |a: usize, b: usize| leq[a * size + b];
    let mul = |a: usize, b: usize| product[a * size + b] as usize;
    for x in 0..size {
        if mul(bot, x) != bot || mul(x, bot) != bot {
            return Err(AlgebraError::NotResiduated(format!("bot is not absorbing at {x}")));
        }
        for y in 0..size {
            if !le(x, y) {
                continue;
            }
            for z in 0..size {
                if !le(mul(x, z), mul(y, z)) {
                    return Err(AlgebraError::NotResiduated(format!(
                        "product not monotone: {x} <= {y} but {x}*{z} > {y}*{z}"
                    )));
                }
                if !le(mul(z, x), mul(z, y)) {
                    return Err(AlgebraError::NotResiduated(format!(
                        "product not monotone: {x} <= {y} but {z}*{x} > {z}*{y}"
                    )));
                }
            }
        }
    }
    let greatest = |set: &[usize]| set.iter().copied().find(|&m| set.iter().all(|&w| le(w, m)));
    let mut ldiv = vec![0; size * size];
    let mut rdiv = vec![0; size * size];
    for a in 0..size {
        for z in 0..size {
            let right: Vec<usize> = (0..size).filter(|&y| le(mul(a, y), z)).collect();
            let g = greatest(&right).ok_or_else(|| {
                AlgebraError::NotResiduated(format!("{{y : {a}*y <= {z}}} has no greatest element"))
            })?;
            ldiv[a * size + z] = g as Cell;
            let left: Vec<usize> = (0..size).filter(|&x| le(mul(x, a), z)).collect();
            let g = greatest(&left).ok_or_else(|| {
                AlgebraError::NotResiduated(format!("{{x : x*{a} <= {z}}} has no greatest element"))
            })?;
            rdiv[z * size + a] = g as Cell;
        }
    }
    Ok((ldiv, rdiv))
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// Three-element Łukasiewicz chain: e = top = 2, f = bot = 0, x*y = max(0, x+y-2).
    pub fn lukasiewicz3() -> FiniteResiduatedLattice {
        let product = (0..9usize).map(|k| (k / 3 + k % 3).saturating_sub(2)).collect();
        FiniteResiduatedLattice::chain(3, product, 2, 0).unwrap()
    }

    /// Two-element Boolean chain.
    pub fn boolean2() -> FiniteResiduatedLattice {
        FiniteResiduatedLattice::chain(2, vec![0, 0, 0, 1], 1, 0).unwrap()
    }
}
