//! Exhaustive enumeration of canonical finite chains and direct products.
//!
//! A canonical chain of size `n` has `bot = 0`, `top = n - 1` and the numeric
//! order. Generation fixes `e`, then `f`, then walks every order-preserving
//! unital product table with absorbing `bot` in row-major order with ascending
//! cell values, keeping associative tables. The stream is therefore sorted by
//! `(size, e, f, table)` and two runs emit identical sequences.

use rayon::prelude::*;

use crate::algebra::{Elem, FiniteResiduatedLattice, Order};
use crate::classify::{check_axioms, Class};

/// All canonical chains of sizes `2..=size_bound` belonging to a class.
#[derive(Debug, Clone)]
pub struct ChainFamily {
    pub size_bound: usize,
    pub class: Class,
    chains: Vec<FiniteResiduatedLattice>,
}

impl ChainFamily {
    pub fn iter(&self) -> std::slice::Iter<'_, FiniteResiduatedLattice> {
        self.chains.iter()
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    pub fn as_slice(&self) -> &[FiniteResiduatedLattice] {
        &self.chains
    }

    pub fn of_size(&self, size: usize) -> impl Iterator<Item = &FiniteResiduatedLattice> {
        self.chains.iter().filter(move |c| c.size() == size)
    }

    pub fn into_vec(self) -> Vec<FiniteResiduatedLattice> {
        self.chains
    }
}

impl<'a> IntoIterator for &'a ChainFamily {
    type Item = &'a FiniteResiduatedLattice;
    type IntoIter = std::slice::Iter<'a, FiniteResiduatedLattice>;

    fn into_iter(self) -> Self::IntoIter {
        self.chains.iter()
    }
}

/// Enumerates every canonical chain of size `2..=size_bound` in `class`.
///
/// Work is split into `(size, e)` cells processed in parallel; results are
/// concatenated in cell order so the output does not depend on thread count.
pub fn enumerate_chains(size_bound: usize, class: Class) -> ChainFamily {
    let cells: Vec<(usize, Elem)> = (2..=size_bound)
        .flat_map(|n| (1..n).map(move |e| (n, e)))
        .collect();
    let chains = cells
        .par_iter()
        .map(|&(n, e)| {
            let tables = unital_chain_tables(n, e, class.requires_commutative());
            let mut out = Vec::new();
            for f in 0..n {
                for table in &tables {
                    let chain = FiniteResiduatedLattice::chain(n, table.clone(), e, f)
                        .expect("generated tables are monotone with absorbing bottom");
                    if check_axioms(&chain).in_class(class) {
                        out.push(chain);
                    }
                }
            }
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    ChainFamily { size_bound, class, chains }
}

/// Associative, order-preserving product tables on the `n`-chain with unit `e`
/// and absorbing `0`, in lexicographic row-major order.
pub fn unital_chain_tables(n: usize, e: Elem, commutative: bool) -> Vec<Vec<Elem>> {
    assert!(n >= 2 && e >= 1 && e < n, "unit must sit above the bottom of a chain with n >= 2");
    let mut table = vec![usize::MAX; n * n];
    for x in 0..n {
        table[x] = 0;
        table[x * n] = 0;
        table[e * n + x] = x;
        table[x * n + e] = x;
    }
    let free: Vec<(usize, usize)> = (1..n)
        .filter(|&i| i != e)
        .flat_map(|i| (1..n).filter(|&j| j != e).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut search = TableSearch { n, e, commutative, free: &free, table, out: &mut out };
    search.fill(0);
    out
}

struct TableSearch<'a> {
    n: usize,
    e: Elem,
    commutative: bool,
    free: &'a [(usize, usize)],
    table: Vec<usize>,
    out: &'a mut Vec<Vec<Elem>>,
}

impl TableSearch<'_> {
    fn fill(&mut self, k: usize) {
        let n = self.n;
        if k == self.free.len() {
            if self.associative_so_far() {
                self.out.push(self.table.clone());
            }
            return;
        }
        let (i, j) = self.free[k];
        // left and upper neighbours are always known in row-major order
        let lo = self.table[(i - 1) * n + j].max(self.table[i * n + j - 1]);
        let mut hi = n - 1;
        if i + 1 < n && i + 1 == self.e {
            hi = hi.min(self.table[(i + 1) * n + j]);
        }
        if j + 1 < n && j + 1 == self.e {
            hi = hi.min(self.table[i * n + j + 1]);
        }
        let candidates: Vec<usize> = if self.commutative && j < i {
            let v = self.table[j * n + i];
            if v >= lo && v <= hi {
                vec![v]
            } else {
                vec![]
            }
        } else if lo <= hi {
            (lo..=hi).collect()
        } else {
            vec![]
        };
        let row_done = k + 1 == self.free.len() || self.free[k + 1].0 != i;
        for v in candidates {
            self.table[i * n + j] = v;
            if row_done && !self.associative_so_far() {
                continue;
            }
            self.fill(k + 1);
        }
        self.table[i * n + j] = usize::MAX;
    }

    /// Associativity over every triple whose products are already determined.
    fn associative_so_far(&self) -> bool {
        let n = self.n;
        let get = |x: usize, y: usize| Some(self.table[x * n + y]).filter(|&v| v != usize::MAX);
        for a in 0..n {
            for b in 0..n {
                let Some(ab) = get(a, b) else { continue };
                for c in 0..n {
                    let Some(bc) = get(b, c) else { continue };
                    if let (Some(l), Some(r)) = (get(ab, c), get(a, bc)) {
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Componentwise product algebra; the pair `(i, j)` has index `i * |B| + j`.
pub fn direct_product(a: &FiniteResiduatedLattice, b: &FiniteResiduatedLattice) -> FiniteResiduatedLattice {
    let (na, nb) = (a.size(), b.size());
    let n = na * nb;
    let split = |k: usize| (k / nb, k % nb);
    let mut leq = vec![false; n * n];
    let mut product = vec![0; n * n];
    for x in 0..n {
        let (x1, x2) = split(x);
        for y in 0..n {
            let (y1, y2) = split(y);
            leq[x * n + y] = a.leq(x1, y1) && b.leq(x2, y2);
            product[x * n + y] = a.mul(x1, y1) * nb + b.mul(x2, y2);
        }
    }
    let pair = |p: Elem, q: Elem| p * nb + q;
    FiniteResiduatedLattice::new(
        n,
        Order::Relation(leq),
        product,
        pair(a.e(), b.e()),
        pair(a.f(), b.f()),
        pair(a.bot(), b.bot()),
        pair(a.top(), b.top()),
    )
    .expect("products of residuated lattices are residuated lattices")
}

/// The one-element algebra.
pub fn trivial_algebra() -> FiniteResiduatedLattice {
    FiniteResiduatedLattice::chain(1, vec![0], 0, 0).expect("trivial algebra")
}
