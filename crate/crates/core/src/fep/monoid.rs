use std::collections::VecDeque;

use crate::algebra::{Elem, FiniteResiduatedLattice};
use crate::fep::PartialSubalgebra;

/// The submonoid of a chain generated by a subset, with a product word over
/// the generators certifying each element. The empty word stands for `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedMonoid {
    elements: Vec<Elem>,
    words: Vec<Vec<Elem>>,
    position: Vec<Option<usize>>,
}

impl GeneratedMonoid {
    /// Elements in ascending order.
    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> Elem {
        self.elements[i]
    }

    /// Position of a parent element in `M`.
    pub fn index_of(&self, x: Elem) -> Option<usize> {
        self.position.get(x).copied().flatten()
    }

    /// A product of generators equal to the `i`-th element.
    pub fn word(&self, i: usize) -> &[Elem] {
        &self.words[i]
    }
}

/// Worklist closure of `B ∪ {e}` under the product, shortest words first.
pub fn generate_monoid(a: &FiniteResiduatedLattice, b: &PartialSubalgebra<'_>) -> GeneratedMonoid {
    let mut word_of: Vec<Option<Vec<Elem>>> = vec![None; a.size()];
    let mut found: Vec<Elem> = Vec::new();
    let mut queue = VecDeque::new();
    word_of[a.e()] = Some(Vec::new());
    found.push(a.e());
    queue.push_back(a.e());
    for &g in b.elements() {
        if word_of[g].is_none() {
            word_of[g] = Some(vec![g]);
            found.push(g);
            queue.push_back(g);
        }
    }
    while let Some(x) = queue.pop_front() {
        let snapshot = found.clone();
        for y in snapshot {
            for (p, (l, r)) in [(a.mul(x, y), (x, y)), (a.mul(y, x), (y, x))] {
                if word_of[p].is_none() {
                    let mut w = word_of[l].clone().unwrap();
                    w.extend_from_slice(word_of[r].as_ref().unwrap());
                    word_of[p] = Some(w);
                    found.push(p);
                    queue.push_back(p);
                }
            }
        }
    }
    let mut elements = found;
    elements.sort_unstable_by(|&x, &y| {
        if x == y {
            std::cmp::Ordering::Equal
        } else if a.leq(x, y) {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    let mut position = vec![None; a.size()];
    for (i, &x) in elements.iter().enumerate() {
        position[x] = Some(i);
    }
    let words = elements.iter().map(|&x| word_of[x].clone().unwrap()).collect();
    GeneratedMonoid { elements, words, position }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::*;

    #[test]
    fn full_subset_generates_carrier() {
        let a = lukasiewicz3();
        let m = generate_monoid(&a, &PartialSubalgebra::full(&a));
        assert_eq!(m.elements(), &[0, 1, 2]);
    }

    #[test]
    fn idempotent_generators() {
        let a = lukasiewicz3();
        let b = PartialSubalgebra::new(&a, &[0, 2]).unwrap();
        assert_eq!(generate_monoid(&a, &b).elements(), &[0, 2]);
    }

    #[test]
    fn words_multiply_out() {
        let a = lukasiewicz3();
        let m = generate_monoid(&a, &PartialSubalgebra::full(&a));
        for i in 0..m.len() {
            let value = m.word(i).iter().fold(a.e(), |acc, &g| a.mul(acc, g));
            assert_eq!(value, m.element(i));
        }
        assert_eq!(m.index_of(1), Some(1));
    }
}
