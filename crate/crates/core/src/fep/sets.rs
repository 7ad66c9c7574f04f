use std::fmt;

/// A subset of the generated monoid `M`; bit `i` stands for the `i`-th
/// element of `M` in ascending order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MSet(pub u64);

impl MSet {
    pub const EMPTY: MSet = MSet(0);

    /// The first `len` elements, i.e. the whole of an `M` with `len` elements.
    pub fn prefix(len: usize) -> MSet {
        if len >= 64 {
            MSet(u64::MAX)
        } else {
            MSet((1u64 << len) - 1)
        }
    }

    pub fn singleton(i: usize) -> MSet {
        MSet(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn is_subset(self, other: MSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersect(self, other: MSet) -> MSet {
        MSet(self.0 & other.0)
    }

    pub fn union(self, other: MSet) -> MSet {
        MSet(self.0 | other.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            (bits != 0).then(|| {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                i
            })
        })
    }
}

impl fmt::Debug for MSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A nonempty downward-closed subset of the chain `M`, kept as the index of
/// its greatest element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Downset {
    pub cut: usize,
}

impl Downset {
    pub fn to_set(self) -> MSet {
        MSet::prefix(self.cut + 1)
    }

    /// `None` unless the set is nonempty and downward closed.
    pub fn from_set(set: MSet) -> Option<Downset> {
        let len = set.len();
        (len > 0 && set == MSet::prefix(len)).then(|| Downset { cut: len - 1 })
    }

    pub fn len(self) -> usize {
        self.cut + 1
    }

    pub fn is_empty(self) -> bool {
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn downset_round_trip() {
        for cut in 0..10 {
            let d = Downset { cut };
            assert_eq!(Downset::from_set(d.to_set()), Some(d));
        }
        assert_eq!(Downset::from_set(MSet(0b101)), None);
        assert_eq!(Downset::from_set(MSet::EMPTY), None);
        assert_eq!(MSet::prefix(64).len(), 64);
    }
}
