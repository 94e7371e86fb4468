use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Cover;
use crate::bitset::ElementSet;
use crate::group::GroupTable;

/// A seeded random cover with `k` classes.
///
/// Each element lands in one uniformly chosen class and is then added to
/// every other class independently with probability `overlap`. A class left
/// empty receives one random element.
pub fn random_cover(g: &GroupTable, k: usize, seed: u64, overlap: f64) -> Cover {
    assert!(k >= 1, "a cover needs at least one class");
    let n = g.order();
    let overlap = overlap.clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut classes = vec![ElementSet::empty(n); k];
    for x in 0..n {
        let home = rng.gen_range(0..k);
        classes[home].insert(x);
        if overlap > 0.0 {
            for (j, class) in classes.iter_mut().enumerate() {
                if j != home && rng.gen_bool(overlap) {
                    class.insert(x);
                }
            }
        }
    }
    for class in &mut classes {
        if class.is_empty() {
            class.insert(rng.gen_range(0..n));
        }
    }
    Cover::new(classes, n).expect("every element has a home class")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;
    use crate::group::Limits;

    #[test]
    fn single_class_is_whole_group() {
        let g = Catalog::default().load("S3", &Limits::default()).unwrap();
        assert_eq!(random_cover(&g, 1, 9, 0.0), Cover::whole(6));
    }

    #[test]
    fn deterministic_per_seed() {
        let g = Catalog::default().load("D4", &Limits::default()).unwrap();
        assert_eq!(random_cover(&g, 3, 42, 0.2), random_cover(&g, 3, 42, 0.2));
    }

    #[test]
    fn classes_cover_every_element() {
        let g = Catalog::default().load("S3", &Limits::default()).unwrap();
        let c = random_cover(&g, 2, 7, 0.0);
        assert_eq!(c.len(), 2);
        let union = c.classes()[0].union(&c.classes()[1]);
        assert!(union.is_full());
    }
}
