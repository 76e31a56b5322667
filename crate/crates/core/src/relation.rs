//! Equivalence relations on a finite carrier.

use crate::set::ElementSet;

/// A partition of `0..n`, stored as a class id per element.
///
/// Class ids are canonical: each element maps to the smallest member of its
/// class, so two relations are equal iff their maps are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EquivalenceRelation {
    class: Vec<usize>,
}

impl EquivalenceRelation {
    pub fn identity(n: usize) -> Self {
        EquivalenceRelation {
            class: (0..n).collect(),
        }
    }

    pub fn universal(n: usize) -> Self {
        EquivalenceRelation { class: vec![0; n] }
    }

    /// Canonicalizes an arbitrary labelling: elements with equal labels are related.
    pub fn from_labels<T: PartialEq>(labels: &[T]) -> Self {
        let class = (0..labels.len())
            .map(|i| {
                (0..=i)
                    .find(|&j| labels[j] == labels[i])
                    .expect("i itself matches")
            })
            .collect();
        EquivalenceRelation { class }
    }

    /// Relation whose classes are the given blocks; elements missing from every
    /// block become singletons. Blocks must be disjoint.
    pub fn from_blocks(n: usize, blocks: &[ElementSet]) -> Self {
        let mut label: Vec<usize> = (0..n).map(|i| n + i).collect();
        for (b, block) in blocks.iter().enumerate() {
            for x in block.iter() {
                label[x] = b;
            }
        }
        Self::from_labels(&label)
    }

    pub fn n(&self) -> usize {
        self.class.len()
    }

    /// Canonical class id (smallest member) of `a`.
    pub fn class_id(&self, a: usize) -> usize {
        self.class[a]
    }

    pub fn class_ids(&self) -> &[usize] {
        &self.class
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class[a] == self.class[b]
    }

    pub fn class_of(&self, a: usize) -> ElementSet {
        let id = self.class[a];
        (0..self.n()).filter(|&x| self.class[x] == id).collect()
    }

    /// Classes ordered by their smallest member.
    pub fn classes(&self) -> Vec<ElementSet> {
        (0..self.n())
            .filter(|&a| self.class[a] == a)
            .map(|a| self.class_of(a))
            .collect()
    }

    pub fn class_count(&self) -> usize {
        (0..self.n()).filter(|&a| self.class[a] == a).count()
    }

    /// `self ⊆ other` as sets of pairs.
    pub fn is_subset(&self, other: &Self) -> bool {
        let n = self.n();
        (0..n).all(|a| other.related(a, self.class[a]))
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let labels: Vec<(usize, usize)> = (0..self.n())
            .map(|a| (self.class[a], other.class[a]))
            .collect();
        Self::from_labels(&labels)
    }

    /// First pair `(a, b)` in lexicographic order related here but not in `other`.
    pub fn first_pair_outside(&self, other: &Self) -> Option<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.related(a, b) && !other.related(a, b))
    }
}

/// Union-find used to build relations by merging.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    /// Returns true when two distinct classes were merged.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // Keep the smaller root so roots stay canonical.
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub(crate) fn into_relation(mut self) -> EquivalenceRelation {
        let n = self.parent.len();
        let roots: Vec<usize> = (0..n).map(|a| self.find(a)).collect();
        EquivalenceRelation::from_labels(&roots)
    }
}
