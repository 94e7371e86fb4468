use super::GroupTable;
use crate::bitset::ElementSet;

/// Conjugacy classes and centraliser orders.
///
/// Classes are numbered in order of their least element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyData {
    pub class_id: Vec<usize>,
    pub classes: Vec<ElementSet>,
    pub class_sizes: Vec<usize>,
    pub centralizer_sizes: Vec<usize>,
}

impl ConjugacyData {
    pub(super) fn compute(g: &GroupTable) -> Self {
        let n = g.order();
        let mut class_id = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_id[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut orbit = ElementSet::empty(n);
            for h in 0..n {
                let y = g.conjugate(x, h);
                if orbit.insert(y) {
                    class_id[y] = id;
                }
            }
            classes.push(orbit);
        }
        let class_sizes = classes.iter().map(ElementSet::len).collect();
        let centralizer_sizes = (0..n)
            .map(|x| (0..n).filter(|&y| g.commute(x, y)).count())
            .collect();
        Self {
            class_id,
            classes,
            class_sizes,
            centralizer_sizes,
        }
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// `|x^G|`.
    #[inline]
    pub fn class_size_of(&self, x: usize) -> usize {
        self.class_sizes[self.class_id[x]]
    }

    /// 1-based rank of `x` among the members of its class, by element index.
    pub fn rank_in_class(&self, x: usize) -> usize {
        self.classes[self.class_id[x]]
            .iter()
            .position(|y| y == x)
            .expect("element belongs to its own class")
            + 1
    }

    /// Elements whose class has size 1.
    pub fn centre(&self) -> ElementSet {
        let n = self.class_id.len();
        ElementSet::from_indices(n, (0..n).filter(|&x| self.class_size_of(x) == 1))
    }
}
