//! Symmetric lists over an ordered alphabet.
//!
//! A morphism `src → dst` is stored as the index bijection `phi` with
//! `dst[i] = src[phi[i]]`. Two generator paths give the same morphism iff
//! they induce the same bijection, so no quotienting of paths is needed.
//! [`GenWord`] keeps the generator presentation around as a witness format.

use std::fmt;

use crate::error::{mismatch, Error, Result};
use crate::multiset::Multiset;
use crate::perm::{word_to_perm, write_seq, Perm, Word};

/// Alphabet of labels.
pub trait Label: Ord + Clone + fmt::Debug {}

impl<T: Ord + Clone + fmt::Debug> Label for T {}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SList<L> {
    labels: Vec<L>,
}

impl<L: Label> SList<L> {
    pub fn new(labels: Vec<L>) -> Self {
        SList { labels }
    }

    pub fn empty() -> Self {
        SList { labels: Vec::new() }
    }

    pub fn singleton(l: L) -> Self {
        SList { labels: vec![l] }
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn into_labels(self) -> Vec<L> {
        self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, i: usize) -> &L {
        &self.labels[i]
    }

    pub fn cons(&self, head: L) -> Self {
        let mut labels = Vec::with_capacity(self.len() + 1);
        labels.push(head);
        labels.extend(self.labels.iter().cloned());
        SList { labels }
    }

    /// Reindex along `phi`: the list whose `i`-th label is `self[phi[i]]`.
    pub fn permute(&self, phi: &Perm) -> Self {
        SList {
            labels: phi.images().iter().map(|&j| self.labels[j].clone()).collect(),
        }
    }

    pub fn underlying_multiset(&self) -> Multiset<L> {
        self.labels.iter().cloned().collect()
    }

    /// No label occurs twice.
    pub fn is_linear(&self) -> bool {
        let mut sorted: Vec<&L> = self.labels.iter().collect();
        sorted.sort();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    pub fn map<M: Label>(&self, f: impl FnMut(&L) -> M) -> SList<M> {
        SList { labels: self.labels.iter().map(f).collect() }
    }
}

impl<L> FromIterator<L> for SList<L> {
    fn from_iter<I: IntoIterator<Item = L>>(iter: I) -> Self {
        SList { labels: iter.into_iter().collect() }
    }
}

impl<L: fmt::Debug> fmt::Debug for SList<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.labels).finish()
    }
}

impl<L: fmt::Display> fmt::Display for SList<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, &self.labels)
    }
}

pub fn underlying_multiset<L: Label>(l: &SList<L>) -> Multiset<L> {
    l.underlying_multiset()
}

pub fn is_linear<L: Label>(l: &SList<L>) -> bool {
    l.is_linear()
}

/// A morphism of symmetric lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SListHom<L> {
    src: SList<L>,
    dst: SList<L>,
    phi: Perm,
}

impl<L: Label> SListHom<L> {
    /// Checks `|src| = |dst| = |phi|` and `dst[i] = src[phi[i]]`.
    pub fn new(src: SList<L>, dst: SList<L>, phi: Perm) -> Result<Self> {
        if src.len() != dst.len() || phi.len() != dst.len() {
            return Err(mismatch(format!(
                "lengths {} / {} / phi {}",
                src.len(),
                dst.len(),
                phi.len()
            )));
        }
        if let Some(i) = (0..dst.len()).find(|&i| src.labels[phi.apply(i)] != dst.labels[i]) {
            return Err(mismatch(format!(
                "label transport fails at index {i}: {:?} vs {:?}",
                src.labels[phi.apply(i)],
                dst.labels[i]
            )));
        }
        Ok(SListHom { src, dst, phi })
    }

    /// Build from `src` and `phi`; the target is forced.
    pub fn from_perm(src: SList<L>, phi: Perm) -> Result<Self> {
        if phi.len() != src.len() {
            return Err(mismatch(format!("phi of size {} on a list of length {}", phi.len(), src.len())));
        }
        let dst = src.permute(&phi);
        Ok(SListHom { src, dst, phi })
    }

    pub fn identity(l: SList<L>) -> Self {
        let phi = Perm::identity(l.len());
        SListHom { src: l.clone(), dst: l, phi }
    }

    pub fn src(&self) -> &SList<L> {
        &self.src
    }

    pub fn dst(&self) -> &SList<L> {
        &self.dst
    }

    pub fn phi(&self) -> &Perm {
        &self.phi
    }

    pub fn is_identity(&self) -> bool {
        self.phi.is_identity()
    }

    /// Diagram-order composite `self ; other`.
    pub fn then(&self, other: &SListHom<L>) -> Result<Self> {
        compose(self, other)
    }

    pub fn inverse(&self) -> Self {
        invert(self)
    }
}

impl<L: fmt::Debug> fmt::Debug for SListHom<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?} phi={:?}", self.src, self.dst, self.phi.images())
    }
}

impl<L: fmt::Display> fmt::Display for SListHom<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} phi={}", self.src, self.dst, self.phi)
    }
}

/// `f` followed by `g`: `phi[i] = f.phi[g.phi[i]]`.
pub fn compose<L: Label>(f: &SListHom<L>, g: &SListHom<L>) -> Result<SListHom<L>> {
    if f.dst != g.src {
        return Err(mismatch(format!("{:?} vs {:?}", f.dst, g.src)));
    }
    Ok(SListHom {
        src: f.src.clone(),
        dst: g.dst.clone(),
        phi: f.phi.compose(&g.phi),
    })
}

pub fn invert<L: Label>(f: &SListHom<L>) -> SListHom<L> {
    SListHom {
        src: f.dst.clone(),
        dst: f.src.clone(),
        phi: f.phi.inverse(),
    }
}

/// Equality of parallel morphisms. Comparing the bijections is complete
/// because the weight functor to permutations is faithful.
pub fn hom_equal<L: Label>(f: &SListHom<L>, g: &SListHom<L>) -> Result<bool> {
    if f.src != g.src || f.dst != g.dst {
        return Err(mismatch("hom_equal on non-parallel morphisms"));
    }
    Ok(f.phi == g.phi)
}

/// The unique morphism `src → dst` when one side has no repeated label.
pub fn unique_hom_linear<L: Label>(src: &SList<L>, dst: &SList<L>) -> Result<SListHom<L>> {
    if !src.is_linear() && !dst.is_linear() {
        return Err(Error::NotLinear(format!("{src:?}")));
    }
    if src.underlying_multiset() != dst.underlying_multiset() {
        return Err(Error::NotPermutationEquivalent(format!("{src:?}"), format!("{dst:?}")));
    }
    // equal multisets, so both sides are linear here
    let img = dst
        .labels()
        .iter()
        .map(|l| src.labels().iter().position(|m| m == l).expect("equal multisets"))
        .collect();
    Ok(SListHom {
        src: src.clone(),
        dst: dst.clone(),
        phi: Perm::from_images_unchecked(img),
    })
}

/// A path of generating swaps: `positions[k]` swaps the entries at
/// `positions[k]` and `positions[k] + 1` of the current list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenWord<L> {
    pub start: SList<L>,
    pub positions: Vec<usize>,
}

impl<L: Label> GenWord<L> {
    pub fn new(start: SList<L>, positions: Vec<usize>) -> Self {
        GenWord { start, positions }
    }

    /// The list reached after applying every swap.
    pub fn end(&self) -> Result<SList<L>> {
        Ok(hom_from_word(self)?.dst)
    }
}

pub fn hom_from_word<L: Label>(g: &GenWord<L>) -> Result<SListHom<L>> {
    let n = g.start.len();
    if let Some(&position) = g.positions.iter().find(|&&p| p + 1 >= n) {
        return Err(Error::PositionOutOfRange { position, len: n });
    }
    let phi = word_to_perm(&Word(g.positions.clone()), n)?;
    let dst = g.start.permute(&phi);
    Ok(SListHom {
        src: g.start.clone(),
        dst,
        phi,
    })
}

/// A reduced generator path realizing `f`.
pub fn word_from_hom<L: Label>(f: &SListHom<L>) -> GenWord<L> {
    GenWord {
        start: f.src.clone(),
        positions: f.phi.reduced_word().0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sl(s: &str) -> SList<char> {
        s.chars().collect()
    }

    fn word(s: &str, p: &[usize]) -> SListHom<char> {
        hom_from_word(&GenWord::new(sl(s), p.to_vec())).unwrap()
    }

    /// Apply swaps literally to a Vec and track where each original index went.
    fn apply_swaps(start: &[char], positions: &[usize]) -> (Vec<char>, Vec<usize>) {
        let mut cur: Vec<(char, usize)> = start.iter().copied().zip(0..).collect();
        for &p in positions {
            cur.swap(p, p + 1);
        }
        (cur.iter().map(|x| x.0).collect(), cur.iter().map(|x| x.1).collect())
    }

    #[test]
    fn hom_from_word_examples() {
        let f = word("abc", &[0]);
        assert_eq!(f.dst(), &sl("bac"));
        assert_eq!(f.phi().images(), &[1, 0, 2]);
        assert!(word("abc", &[]).is_identity());
        let g = word("abc", &[0, 1]);
        assert_eq!(apply_swaps(&['a', 'b', 'c'], &[0, 1]), (vec!['b', 'c', 'a'], vec![1, 2, 0]));
        assert_eq!(g.dst(), &sl("bca"));
        assert_eq!(g.phi().images(), &[1, 2, 0]);
        assert_eq!(
            hom_from_word(&GenWord::new(sl("ab"), vec![1])),
            Err(Error::PositionOutOfRange { position: 1, len: 2 })
        );
    }

    #[test]
    fn word_from_hom_examples() {
        assert!(word_from_hom(&SListHom::identity(sl("ab"))).positions.is_empty());
        let f = SListHom::from_perm(sl("abc"), Perm::from_images(vec![1, 0, 2]).unwrap()).unwrap();
        assert_eq!(word_from_hom(&f).positions, vec![0]);
        let f = SListHom::from_perm(sl("abc"), Perm::from_images(vec![2, 1, 0]).unwrap()).unwrap();
        let w = word_from_hom(&f);
        assert_eq!(w.positions.len(), 3);
        assert_eq!(hom_from_word(&w).unwrap(), f);
    }

    #[test]
    fn compose_examples() {
        let f = word("abc", &[0]);
        let id = SListHom::identity(sl("abc"));
        assert_eq!(compose(&id, &f).unwrap(), f);
        let swap = word("ab", &[0]);
        let back = word("ba", &[0]);
        assert!(compose(&swap, &back).unwrap().is_identity());
        let g = word("bac", &[1]);
        let fg = compose(&f, &g).unwrap();
        assert_eq!(fg.phi().images(), &[1, 2, 0]);
        assert_eq!(fg, word("abc", &[0, 1]));
        assert!(matches!(compose(&f, &f), Err(Error::SourceTargetMismatch(_))));
    }

    #[test]
    fn invert_examples() {
        let id = SListHom::identity(sl("ab"));
        assert_eq!(invert(&id), id);
        let f = word("abc", &[0, 1]);
        assert_eq!(invert(&f).phi().images(), &[2, 0, 1]);
        assert_eq!(invert(&invert(&f)), f);
        assert!(compose(&f, &invert(&f)).unwrap().is_identity());
    }

    #[test]
    fn hom_equal_examples() {
        assert!(hom_equal(&word("abc", &[0, 1, 0]), &word("abc", &[1, 0, 1])).unwrap());
        // different targets: never equal
        assert!(!matches!(hom_equal(&word("ab", &[0]), &SListHom::identity(sl("ab"))), Ok(true)));
        assert!(hom_equal(&word("abcd", &[0, 2]), &word("abcd", &[2, 0])).unwrap());
        // same source/target only when labels repeat
        assert!(!hom_equal(&word("aa", &[0]), &SListHom::identity(sl("aa"))).unwrap());
    }

    #[test]
    fn unique_hom_examples() {
        assert_eq!(unique_hom_linear(&sl("ab"), &sl("ba")).unwrap().phi().images(), &[1, 0]);
        assert!(matches!(unique_hom_linear(&sl("aa"), &sl("aa")), Err(Error::NotLinear(_))));
        assert!(matches!(
            unique_hom_linear(&sl("ab"), &sl("ac")),
            Err(Error::NotPermutationEquivalent(..))
        ));
    }

    #[test]
    fn multiset_and_linearity() {
        let m = sl("aba").underlying_multiset();
        assert_eq!((m.count(&'a'), m.count(&'b')), (2, 1));
        assert!(!sl("aba").is_linear());
        assert!(sl("").underlying_multiset().is_empty());
        assert!(sl("").is_linear());
        assert!(sl("abc").is_linear());
        assert_eq!(sl("abc").underlying_multiset().cardinality(), 3);
    }

    #[test]
    fn constructor_checks_transport() {
        let p = Perm::from_images(vec![1, 0]).unwrap();
        assert!(SListHom::new(sl("ab"), sl("ab"), p.clone()).is_err());
        assert!(SListHom::new(sl("ab"), sl("ba"), p).is_ok());
    }

    #[test]
    fn repeated_label_has_factorial_homs() {
        // enumerate generator words breadth-first until no new phi appears
        for n in 1..=4usize {
            let start: SList<char> = std::iter::repeat('a').take(n).collect();
            let mut seen = std::collections::BTreeSet::new();
            let mut frontier = vec![Vec::<usize>::new()];
            for _ in 0..=n * (n - 1) / 2 {
                let mut next = Vec::new();
                for w in frontier {
                    let h = hom_from_word(&GenWord::new(start.clone(), w.clone())).unwrap();
                    if seen.insert(h.phi().clone()) {
                        for p in 0..n.saturating_sub(1) {
                            let mut w2 = w.clone();
                            w2.push(p);
                            next.push(w2);
                        }
                    }
                }
                frontier = next;
            }
            let factorial: usize = (1..=n).product();
            assert_eq!(seen.len(), factorial);
        }
    }

    fn list_and_word() -> impl Strategy<Value = (Vec<u8>, Vec<usize>)> {
        (2usize..9).prop_flat_map(|n| {
            (
                proptest::collection::vec(0u8..4, n),
                proptest::collection::vec(0..n - 1, 0..16),
            )
        })
    }

    proptest! {
        #[test]
        fn round_trip((labels, w) in list_and_word()) {
            let f = hom_from_word(&GenWord::new(SList::new(labels), w)).unwrap();
            prop_assert_eq!(hom_from_word(&word_from_hom(&f)).unwrap(), f);
        }

        #[test]
        fn defining_relations((labels, _w) in list_and_word(), p in 0usize..8) {
            let l = SList::new(labels);
            let n = l.len();
            let p = p % (n - 1);
            let eq = |a: Vec<usize>, b: Vec<usize>| {
                hom_equal(
                    &hom_from_word(&GenWord::new(l.clone(), a)).unwrap(),
                    &hom_from_word(&GenWord::new(l.clone(), b)).unwrap(),
                ).unwrap()
            };
            // symmetry
            prop_assert!(eq(vec![p, p], vec![]));
            if p + 2 < n {
                // hexagon
                prop_assert!(eq(vec![p, p + 1, p], vec![p + 1, p, p + 1]));
            }
            if p + 3 < n {
                // naturality of a swap against a swap further down the list
                prop_assert!(eq(vec![p, p + 2], vec![p + 2, p]));
            }
        }

        #[test]
        fn cons_is_functorial((labels, w) in list_and_word(), v in proptest::collection::vec(0usize..7, 0..6)) {
            let l = SList::new(labels);
            let n = l.len();
            let v: Vec<usize> = v.into_iter().map(|x| x % (n - 1)).collect();
            let w: Vec<usize> = w.into_iter().map(|x| x % (n - 1)).collect();
            // x ::ₘ (w ; v) versus (x ::ₘ w) ; (x ::ₘ v): shift positions by one
            let tail = hom_from_word(&GenWord::new(l.clone(), w.iter().chain(&v).copied().collect())).unwrap();
            let consed = l.cons(9u8);
            let shifted: Vec<usize> = w.iter().chain(&v).map(|p| p + 1).collect();
            let h = hom_from_word(&GenWord::new(consed.clone(), shifted)).unwrap();
            prop_assert_eq!(h.dst(), &tail.dst().cons(9u8));
            prop_assert_eq!(h.phi(), &Perm::identity(1).block_sum(tail.phi()));
        }

        #[test]
        fn linearity_is_invariant((labels, w) in list_and_word()) {
            let f = hom_from_word(&GenWord::new(SList::new(labels), w)).unwrap();
            prop_assert_eq!(f.src().is_linear(), f.dst().is_linear());
        }
    }
}
