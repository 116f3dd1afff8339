use std::cmp::Ordering;
use std::fmt;

/// Fixed-width bit set over the interned vertex indices of a single complex.
///
/// All sets belonging to one complex share the same width, so subset tests
/// and unions are straight block operations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    width: usize,
    blocks: Vec<u64>,
}

fn nblocks(width: usize) -> usize {
    width.div_ceil(64).max(1)
}

impl VertexSet {
    pub fn empty(width: usize) -> Self {
        VertexSet {
            width,
            blocks: vec![0; nblocks(width)],
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, iter: I) -> Self {
        let mut s = VertexSet::empty(width);
        for i in iter {
            s.insert(i);
        }
        s
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn insert(&mut self, idx: usize) {
        debug_assert!(idx < self.width);
        self.blocks[idx / 64] |= 1u64 << (idx % 64);
    }

    pub fn remove(&mut self, idx: usize) {
        debug_assert!(idx < self.width);
        self.blocks[idx / 64] &= !(1u64 << (idx % 64));
    }

    pub fn contains(&self, idx: usize) -> bool {
        idx < self.width && self.blocks[idx / 64] & (1u64 << (idx % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.width, other.width);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_superset(&self, other: &VertexSet) -> bool {
        other.is_subset(self)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.width, other.width);
        VertexSet {
            width: self.width,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn with(&self, idx: usize) -> VertexSet {
        let mut s = self.clone();
        s.insert(idx);
        s
    }

    pub fn without(&self, idx: usize) -> VertexSet {
        let mut s = self.clone();
        s.remove(idx);
        s
    }

    /// Indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.width).filter(move |&i| self.contains(i))
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Rebuilds the set over a wider index space, keeping the same indices.
    pub fn widened(&self, width: usize) -> VertexSet {
        debug_assert!(width >= self.width);
        VertexSet::from_indices(width, self.iter())
    }

    /// Same indices shifted by `offset`, over a new width.
    pub fn shifted(&self, offset: usize, width: usize) -> VertexSet {
        VertexSet::from_indices(width, self.iter().map(|i| i + offset))
    }
}

impl Ord for VertexSet {
    /// Canonical order: by sorted index list lexicographically, shorter
    /// prefixes first. Widths of compared sets must agree.
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_and_order() {
        let a = VertexSet::from_indices(5, [0, 2]);
        let b = VertexSet::from_indices(5, [0, 2, 4]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert!(a < b);
        assert_eq!(b.len(), 3);
        assert_eq!(b.indices(), vec![0, 2, 4]);
    }

    #[test]
    fn empty_set_is_subset_of_everything() {
        let e = VertexSet::empty(7);
        let b = VertexSet::from_indices(7, [1, 6]);
        assert!(e.is_subset(&b));
        assert!(e.is_subset(&e));
        assert!(e.is_empty());
    }
}
