//! Congruences of finite residuated lattices and subdirect decomposition into chains.

use std::collections::BTreeSet;

use crate::algebra::{Elem, FiniteResiduatedLattice, Order};
use crate::classify::check_axioms;
use crate::error::DecompositionError;

/// An equivalence on the carrier, stored as a canonical block labelling:
/// `label[x]` is the index of the block of `x`, blocks numbered by first element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    label: Vec<usize>,
}

impl Congruence {
    pub fn diagonal(size: usize) -> Self {
        Congruence { label: (0..size).collect() }
    }

    pub fn total(size: usize) -> Self {
        Congruence { label: vec![0; size] }
    }

    fn from_roots(mut root: impl FnMut(usize) -> usize, size: usize) -> Self {
        let mut seen = vec![usize::MAX; size];
        let mut next = 0;
        let label = (0..size)
            .map(|x| {
                let r = root(x);
                if seen[r] == usize::MAX {
                    seen[r] = next;
                    next += 1;
                }
                seen[r]
            })
            .collect();
        Congruence { label }
    }

    pub fn size(&self) -> usize {
        self.label.len()
    }

    pub fn block_of(&self, x: Elem) -> usize {
        self.label[x]
    }

    pub fn related(&self, x: Elem, y: Elem) -> bool {
        self.label[x] == self.label[y]
    }

    pub fn num_blocks(&self) -> usize {
        self.label.iter().max().map_or(0, |m| m + 1)
    }

    pub fn blocks(&self) -> Vec<Vec<Elem>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (x, &b) in self.label.iter().enumerate() {
            out[b].push(x);
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        self.num_blocks() == self.size()
    }

    pub fn is_total(&self) -> bool {
        self.num_blocks() <= 1
    }

    /// `self ⊆ other` as relations.
    pub fn refines(&self, other: &Congruence) -> bool {
        (0..self.size()).all(|x| (0..x).all(|y| !self.related(x, y) || other.related(x, y)))
    }

    pub fn meet(&self, other: &Congruence) -> Congruence {
        let pairs: Vec<(usize, usize)> = self.label.iter().copied().zip(other.label.iter().copied()).collect();
        Congruence::from_roots(|x| pairs.iter().position(|&p| p == pairs[x]).unwrap(), self.size())
    }

    /// Equivalence join; the join of two congruences is again a congruence.
    pub fn join(&self, other: &Congruence) -> Congruence {
        let mut uf = UnionFind::new(self.size());
        for x in 0..self.size() {
            uf.union(x, self.first_of_block(x));
            uf.union(x, other.first_of_block(x));
        }
        Congruence::from_roots(|x| uf.find(x), self.size())
    }

    fn first_of_block(&self, x: Elem) -> Elem {
        self.label.iter().position(|&b| b == self.label[x]).unwrap()
    }

    /// Whether the relation is compatible with every basic operation.
    pub fn is_compatible(&self, a: &FiniteResiduatedLattice) -> bool {
        let ops = operations(a);
        a.elements().all(|x| {
            a.elements().all(|y| {
                !self.related(x, y)
                    || a.elements().all(|c| {
                        ops.iter()
                            .all(|op| self.related(op(x, c), op(y, c)) && self.related(op(c, x), op(c, y)))
                    })
            })
        })
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
        self.parent[hi] = lo;
        true
    }
}

type BinOp<'a> = Box<dyn Fn(Elem, Elem) -> Elem + 'a>;

fn operations(a: &FiniteResiduatedLattice) -> [BinOp<'_>; 5] {
    [
        Box::new(|x, y| a.join(x, y)),
        Box::new(|x, y| a.meet(x, y)),
        Box::new(|x, y| a.mul(x, y)),
        Box::new(|x, y| a.ldiv(x, y)),
        Box::new(|x, y| a.rdiv(x, y)),
    ]
}

/// Smallest congruence containing the given pairs, by closing under all
/// one-parameter translations of the basic operations until nothing changes.
pub fn generated_congruence(a: &FiniteResiduatedLattice, pairs: &[(Elem, Elem)]) -> Congruence {
    let n = a.size();
    let mut uf = UnionFind::new(n);
    for &(x, y) in pairs {
        uf.union(x, y);
    }
    let ops = operations(a);
    loop {
        let mut changed = false;
        for x in 0..n {
            let r = uf.find(x);
            if r == x {
                continue;
            }
            for c in 0..n {
                for op in &ops {
                    changed |= uf.union(op(x, c), op(r, c));
                    changed |= uf.union(op(c, x), op(c, r));
                }
            }
        }
        if !changed {
            break;
        }
    }
    Congruence::from_roots(|x| uf.find(x), n)
}

pub fn principal_congruence(a: &FiniteResiduatedLattice, x: Elem, y: Elem) -> Congruence {
    generated_congruence(a, &[(x, y)])
}

/// Every congruence of `a`, as the join-closure of the principal ones, sorted.
pub fn all_congruences(a: &FiniteResiduatedLattice) -> Vec<Congruence> {
    let n = a.size();
    let mut found: BTreeSet<Congruence> = BTreeSet::new();
    found.insert(Congruence::diagonal(n));
    let principals: BTreeSet<Congruence> = (0..n)
        .flat_map(|x| (0..x).map(move |y| (x, y)))
        .map(|(x, y)| principal_congruence(a, x, y))
        .collect();
    let mut frontier: Vec<Congruence> = principals.iter().cloned().collect();
    found.extend(principals.iter().cloned());
    while let Some(theta) = frontier.pop() {
        for p in &principals {
            let j = theta.join(p);
            if found.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    found.into_iter().collect()
}

/// The quotient `a/θ`. Blocks are ordered by `[x] <= [y]` iff `(x ∨ y) θ y`;
/// a totally ordered quotient is returned as a canonical chain, otherwise
/// blocks keep their first-element order.
pub fn quotient(a: &FiniteResiduatedLattice, theta: &Congruence) -> (FiniteResiduatedLattice, Vec<Elem>) {
    let blocks = theta.blocks();
    let k = blocks.len();
    let rep: Vec<Elem> = blocks.iter().map(|b| b[0]).collect();
    let block_leq = |p: usize, q: usize| theta.related(a.join(rep[p], rep[q]), rep[q]);
    let total = (0..k).all(|p| (0..k).all(|q| block_leq(p, q) || block_leq(q, p)));
    // position of each block in the quotient's index order
    let mut order_of_blocks: Vec<usize> = (0..k).collect();
    if total {
        order_of_blocks.sort_by_key(|&p| (0..k).filter(|&q| block_leq(q, p)).count());
    }
    let mut index_of_block = vec![0; k];
    for (i, &p) in order_of_blocks.iter().enumerate() {
        index_of_block[p] = i;
    }
    let proj: Vec<Elem> = a.elements().map(|x| index_of_block[theta.block_of(x)]).collect();
    let block_at = |i: usize| order_of_blocks[i];
    let mut product = vec![0; k * k];
    let mut leq = vec![false; k * k];
    for i in 0..k {
        for j in 0..k {
            product[i * k + j] = proj[a.mul(rep[block_at(i)], rep[block_at(j)])];
            leq[i * k + j] = block_leq(block_at(i), block_at(j));
        }
    }
    let order = if total { Order::Chain } else { Order::Relation(leq) };
    let q = FiniteResiduatedLattice::new(k, order, product, proj[a.e()], proj[a.f()], proj[a.bot()], proj[a.top()])
        .expect("quotients by congruences are residuated lattices");
    (q, proj)
}

/// One factor of a subdirect representation.
#[derive(Debug, Clone)]
pub struct Factor {
    pub congruence: Congruence,
    pub quotient: FiniteResiduatedLattice,
    /// `projection[x]` is the image of `x` in the quotient.
    pub projection: Vec<Elem>,
}

#[derive(Debug, Clone)]
pub struct Decomposition {
    pub factors: Vec<Factor>,
}

impl Decomposition {
    /// Image of `x` under the embedding into the product of the factors.
    pub fn embed(&self, x: Elem) -> Vec<Elem> {
        self.factors.iter().map(|f| f.projection[x]).collect()
    }
}

/// Decomposes a finite algebra as a subdirect product of chain quotients.
///
/// Candidates are the completely meet-irreducible congruences whose quotient
/// is a chain in every class the algebra belongs to. They are taken greedily,
/// fewest blocks first and ties by block labelling, whenever they shrink the
/// running intersection; redundant factors are then dropped.
pub fn subdirect_decompose(a: &FiniteResiduatedLattice) -> Result<Decomposition, DecompositionError> {
    let n = a.size();
    let report = check_axioms(a);
    let classes: Vec<_> = crate::classify::Class::ALL
        .into_iter()
        .filter(|&c| report.in_class(c))
        .collect();
    let cons = all_congruences(a);
    let mut candidates: Vec<(Congruence, FiniteResiduatedLattice, Vec<Elem>)> = cons
        .iter()
        .filter(|theta| !theta.is_total() && is_meet_irreducible(theta, &cons))
        .filter_map(|theta| {
            let (q, proj) = quotient(a, theta);
            let qr = check_axioms(&q);
            let fits = qr.is_chain && qr.is_residuated_lattice() && classes.iter().all(|&c| qr.in_class(c));
            fits.then(|| (theta.clone(), q, proj))
        })
        .collect();
    candidates.sort_by(|x, y| (x.0.num_blocks(), &x.0).cmp(&(y.0.num_blocks(), &y.0)));

    let mut chosen: Vec<usize> = Vec::new();
    let mut running = Congruence::total(n);
    for (i, (theta, _, _)) in candidates.iter().enumerate() {
        if running.is_diagonal() {
            break;
        }
        let next = running.meet(theta);
        if next != running {
            running = next;
            chosen.push(i);
        }
    }
    if !running.is_diagonal() {
        let (x, y) = (0..n)
            .flat_map(|x| (0..x).map(move |y| (y, x)))
            .find(|&(x, y)| running.related(x, y))
            .expect("non-diagonal relation relates two distinct elements");
        return Err(DecompositionError::DecompositionFailed(x, y));
    }
    // drop factors the others already cover
    let mut k = 0;
    while k < chosen.len() {
        let rest = chosen
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .fold(Congruence::total(n), |acc, (_, &i)| acc.meet(&candidates[i].0));
        if rest.is_diagonal() {
            chosen.remove(k);
        } else {
            k += 1;
        }
    }
    let factors: Vec<Factor> = chosen
        .into_iter()
        .map(|i| {
            let (congruence, quotient, projection) = candidates[i].clone();
            Factor { congruence, quotient, projection }
        })
        .collect();
    let decomposition = Decomposition { factors };
    let images: BTreeSet<Vec<Elem>> = a.elements().map(|x| decomposition.embed(x)).collect();
    assert_eq!(images.len(), n, "subdirect embedding must be injective");
    Ok(decomposition)
}

fn is_meet_irreducible(theta: &Congruence, all: &[Congruence]) -> bool {
    let above: Vec<&Congruence> = all.iter().filter(|c| *c != theta && theta.refines(c)).collect();
    match above.split_first() {
        None => false,
        Some((first, rest)) => rest.iter().fold((*first).clone(), |acc, c| acc.meet(c)) != *theta,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::*;
    use crate::enumeration::direct_product;

    #[test]
    fn principal_on_diagonal_pair() {
        let a = lukasiewicz3();
        for x in a.elements() {
            assert!(principal_congruence(&a, x, x).is_diagonal());
        }
    }

    #[test]
    fn collapsing_two_chain() {
        let b = boolean2();
        assert!(principal_congruence(&b, 0, 1).is_total());
    }

    #[test]
    fn product_kernel_from_fixpoint() {
        let b = boolean2();
        let p = direct_product(&b, &b);
        // (0,0) = 0 and (0,1) = 1 share the first coordinate
        let theta = principal_congruence(&p, 0, 1);
        let kernel = Congruence::from_roots(|x| (x / 2) * 2, 4);
        assert_eq!(theta, kernel);
        assert!(theta.is_compatible(&p));
    }

    #[test]
    fn chain_decomposes_to_itself() {
        let a = lukasiewicz3();
        let d = subdirect_decompose(&a).unwrap();
        assert_eq!(d.factors.len(), 1);
        assert!(d.factors[0].congruence.is_diagonal());
        assert_eq!(d.factors[0].quotient, a);
    }

    #[test]
    fn square_splits_into_projections() {
        let b = boolean2();
        let p = direct_product(&b, &b);
        let d = subdirect_decompose(&p).unwrap();
        assert_eq!(d.factors.len(), 2);
        for f in &d.factors {
            assert_eq!(f.quotient, b);
        }
        for x in p.elements() {
            let mut img = d.embed(x);
            img.sort();
            let mut expect = vec![x / 2, x % 2];
            expect.sort();
            assert_eq!(img, expect);
        }
    }
}
