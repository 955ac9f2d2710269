//! Symmetric monoidal structure on symmetric lists.
//!
//! The tensor is concatenation, which is strictly associative and unital:
//! associators and unitors are identities and all coherence content sits
//! in the braiding.

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::slist::{hom_from_word, GenWord, Label, SList, SListHom};

pub fn tensor_obj<L: Label>(x: &SList<L>, y: &SList<L>) -> SList<L> {
    x.labels().iter().chain(y.labels()).cloned().collect()
}

/// Block sum of the index bijections.
pub fn tensor_hom<L: Label>(f: &SListHom<L>, g: &SListHom<L>) -> SListHom<L> {
    let phi = f.phi().block_sum(g.phi());
    SListHom::new(tensor_obj(f.src(), g.src()), tensor_obj(f.dst(), g.dst()), phi)
        .expect("block sum preserves label transport")
}

/// `x ◁ g`.
pub fn whisker_left<L: Label>(x: &SList<L>, g: &SListHom<L>) -> SListHom<L> {
    tensor_hom(&SListHom::identity(x.clone()), g)
}

/// `f ▷ y`.
pub fn whisker_right<L: Label>(f: &SListHom<L>, y: &SList<L>) -> SListHom<L> {
    tensor_hom(f, &SListHom::identity(y.clone()))
}

/// Block transposition `x ⊗ y → y ⊗ x`.
pub fn braiding<L: Label>(x: &SList<L>, y: &SList<L>) -> SListHom<L> {
    let (m, k) = (x.len(), y.len());
    let img = (0..m + k).map(|i| if i < k { i + m } else { i - k }).collect();
    SListHom::new(tensor_obj(x, y), tensor_obj(y, x), Perm::from_images_unchecked(img))
        .expect("block transposition transports labels")
}

/// The braiding assembled from generating swaps by two nested inductions:
/// `Q_{x,l₁,l₂} : (x :: l₁) ⊗ l₂ → l₁ ⊗ (x :: l₂)` by induction on `l₁`, then
/// the braiding by induction on the left factor. Kept as an independent
/// route to [`braiding`].
pub fn braiding_recursive<L: Label>(x: &SList<L>, y: &SList<L>) -> SListHom<L> {
    let mut positions = Vec::new();
    braid_word(x.labels(), y.labels(), 0, &mut positions);
    hom_from_word(&GenWord::new(tensor_obj(x, y), positions)).expect("braid word stays in range")
}

/// Swaps realizing `Q_{x, l₁, l₂}` on the block starting at `offset`.
fn q_word<L>(l1: &[L], offset: usize, out: &mut Vec<usize>) {
    if let Some((_y, rest)) = l1.split_first() {
        // sw_{x,y} at the head, then y ::ₘ Q_{x, rest, l₂}
        out.push(offset);
        q_word(rest, offset + 1, out);
    }
}

/// Swaps realizing `l₁ ⊗ l₂ → l₂ ⊗ l₁` on the block starting at `offset`.
fn braid_word<L>(l1: &[L], l2: &[L], offset: usize, out: &mut Vec<usize>) {
    if let Some((_x, rest)) = l1.split_first() {
        // x ::ₘ (rest ⊗ l₂ → l₂ ⊗ rest), then Q_{x, l₂, rest}
        braid_word(rest, l2, offset + 1, out);
        q_word(l2, offset, out);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Position of an index of `x` (left) or `y` (right) inside `x ⊗ y`.
pub fn index_embed<L: Label>(x: &SList<L>, y: &SList<L>, side: Side, i: usize) -> Result<usize> {
    match side {
        Side::Left if i < x.len() => Ok(i),
        Side::Left => Err(Error::IndexOutOfRange { index: i, bound: x.len() }),
        Side::Right if i < y.len() => Ok(x.len() + i),
        Side::Right => Err(Error::IndexOutOfRange { index: i, bound: y.len() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::slist::{compose, hom_equal};
    use proptest::prelude::*;

    fn sl(s: &str) -> SList<char> {
        s.chars().collect()
    }

    fn swap_ab() -> SListHom<char> {
        hom_from_word(&GenWord::new(sl("ab"), vec![0])).unwrap()
    }

    #[test]
    fn tensor_obj_examples() {
        assert_eq!(tensor_obj(&sl("a"), &sl("bc")), sl("abc"));
        assert_eq!(tensor_obj(&sl(""), &sl("x")), sl("x"));
        let (a, b, c) = (sl("ab"), sl("c"), sl("de"));
        assert_eq!(tensor_obj(&tensor_obj(&a, &b), &c), tensor_obj(&a, &tensor_obj(&b, &c)));
    }

    #[test]
    fn tensor_hom_examples() {
        let id = SListHom::identity(sl("ab"));
        assert!(tensor_hom(&id, &id).is_identity());
        let idc = SListHom::identity(sl("c"));
        assert_eq!(tensor_hom(&swap_ab(), &idc).phi().images(), &[1, 0, 2]);
        assert_eq!(tensor_hom(&idc, &swap_ab()).phi().images(), &[0, 2, 1]);
    }

    #[test]
    fn braiding_examples() {
        assert_eq!(braiding(&sl("a"), &sl("bc")).phi().images(), &[1, 2, 0]);
        assert!(braiding(&sl(""), &sl("xyz")).is_identity());
        let (x, y) = (sl("ab"), sl("cde"));
        assert!(compose(&braiding(&x, &y), &braiding(&y, &x)).unwrap().is_identity());
    }

    #[test]
    fn braiding_recursive_examples() {
        assert_eq!(braiding_recursive(&sl("a"), &sl("b")).phi().images(), &[1, 0]);
        assert_eq!(braiding_recursive(&sl("a"), &sl("bc")).phi().images(), &[1, 2, 0]);
        assert_eq!(braiding_recursive(&sl("ab"), &sl("c")).phi().images(), &[2, 0, 1]);
    }

    #[test]
    fn braiding_matches_recursive_construction() {
        for total in 0..=8usize {
            for m in 0..=total {
                let x: SList<usize> = (0..m).map(|i| i % 3).collect();
                let y: SList<usize> = (0..total - m).map(|i| (i + 1) % 2).collect();
                assert_eq!(braiding(&x, &y), braiding_recursive(&x, &y), "{m} + {}", total - m);
            }
        }
    }

    #[test]
    fn index_embed_examples() {
        let (x, y) = (sl("ab"), sl("cde"));
        assert_eq!(index_embed(&x, &y, Side::Left, 1).unwrap(), 1);
        assert_eq!(index_embed(&x, &y, Side::Right, 0).unwrap(), 2);
        assert!(index_embed(&x, &y, Side::Left, 2).is_err());
        let mut image: Vec<usize> = (0..2)
            .map(|i| index_embed(&x, &y, Side::Left, i).unwrap())
            .chain((0..3).map(|i| index_embed(&x, &y, Side::Right, i).unwrap()))
            .collect();
        image.sort();
        assert_eq!(image, (0..5).collect::<Vec<_>>());
    }

    fn hom_strategy() -> impl Strategy<Value = SListHom<u8>> {
        (0usize..5).prop_flat_map(|n| {
            (proptest::collection::vec(0u8..3, n), proptest::collection::vec(0usize..8, 0..8))
        })
        .prop_map(|(labels, w)| {
            let n = labels.len();
            let w = if n < 2 { vec![] } else { w.into_iter().map(|p| p % (n - 1)).collect() };
            hom_from_word(&GenWord::new(SList::new(labels), w)).unwrap()
        })
    }

    proptest! {
        #[test]
        fn braiding_is_natural(f in hom_strategy(), g in hom_strategy()) {
            // f : y → y', g : x → x'
            let lhs = compose(&tensor_hom(&f, &g), &braiding(f.dst(), g.dst())).unwrap();
            let rhs = compose(&braiding(f.src(), g.src()), &tensor_hom(&g, &f)).unwrap();
            prop_assert!(hom_equal(&lhs, &rhs).unwrap());
        }

        #[test]
        fn hexagons(x in hom_strategy(), y in hom_strategy(), z in hom_strategy()) {
            let (x, y, z) = (x.src().clone(), y.src().clone(), z.src().clone());
            // β_{x⊗y,z} = (x ◁ β_{y,z}) ; (β_{x,z} ▷ y)
            let lhs = braiding(&tensor_obj(&x, &y), &z);
            let rhs = compose(&whisker_left(&x, &braiding(&y, &z)), &whisker_right(&braiding(&x, &z), &y)).unwrap();
            prop_assert!(hom_equal(&lhs, &rhs).unwrap());
            // β_{x,y⊗z} = (β_{x,y} ▷ z) ; (y ◁ β_{x,z})
            let lhs = braiding(&x, &tensor_obj(&y, &z));
            let rhs = compose(&whisker_right(&braiding(&x, &y), &z), &whisker_left(&y, &braiding(&x, &z))).unwrap();
            prop_assert!(hom_equal(&lhs, &rhs).unwrap());
        }

        #[test]
        fn interchange(f in hom_strategy(), g in hom_strategy(), w1 in proptest::collection::vec(0usize..8, 0..6), w2 in proptest::collection::vec(0usize..8, 0..6)) {
            let follow = |h: &SListHom<u8>, w: Vec<usize>| {
                let n = h.dst().len();
                let w = if n < 2 { vec![] } else { w.into_iter().map(|p| p % (n - 1)).collect() };
                hom_from_word(&GenWord::new(h.dst().clone(), w)).unwrap()
            };
            let (f2, g2) = (follow(&f, w1), follow(&g, w2));
            let lhs = compose(&tensor_hom(&f, &g), &tensor_hom(&f2, &g2)).unwrap();
            let rhs = tensor_hom(&compose(&f, &f2).unwrap(), &compose(&g, &g2).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn whisker_right_formula(f in hom_strategy(), y in hom_strategy()) {
            let y = y.src().clone();
            let h = whisker_right(&f, &y);
            for i in 0..f.dst().len() {
                let left_i = index_embed(f.dst(), &y, Side::Left, i).unwrap();
                let expected = index_embed(f.src(), &y, Side::Left, f.phi().apply(i)).unwrap();
                prop_assert_eq!(h.phi().apply(left_i), expected);
            }
        }
    }
}
