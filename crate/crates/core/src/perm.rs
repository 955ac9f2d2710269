//! Finite permutations and the type-A Coxeter presentation of the symmetric
//! group.
//!
//! Composition is `(p ∘ q)[i] = p[q[i]]`: `q` is applied first. A word
//! `[w₁, …, w_m]` denotes `t_{w₁} ∘ … ∘ t_{w_m}` where `t_k` swaps `k` and
//! `k + 1`.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{0, …, n-1}`, stored as its image sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { img: (0..n).collect() }
    }

    /// Validates that `img` is a permutation of `0..img.len()`.
    pub fn from_images(img: Vec<usize>) -> Result<Self> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &v in &img {
            if v >= n || seen[v] {
                return Err(Error::NotAPermutation(img));
            }
            seen[v] = true;
        }
        Ok(Perm { img })
    }

    pub(crate) fn from_images_unchecked(img: Vec<usize>) -> Self {
        debug_assert!(Perm::from_images(img.clone()).is_ok(), "{img:?}");
        Perm { img }
    }

    /// The adjacent transposition `t_k = (k k+1)` on `n` points.
    pub fn transposition(n: usize, k: usize) -> Result<Self> {
        if k + 1 >= n {
            return Err(Error::LetterOutOfRange { letter: k, size: n });
        }
        let mut img: Vec<usize> = (0..n).collect();
        img.swap(k, k + 1);
        Ok(Perm { img })
    }

    pub fn len(&self) -> usize {
        self.img.len()
    }

    pub fn is_empty(&self) -> bool {
        self.img.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.img
    }

    pub fn into_images(self) -> Vec<usize> {
        self.img
    }

    pub fn apply(&self, i: usize) -> usize {
        self.img[i]
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`, i.e. `other` first.
    ///
    /// Panics if the sizes differ.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Perm {
            img: other.img.iter().map(|&j| self.img[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.img.iter().enumerate() {
            inv[v] = i;
        }
        Perm { img: inv }
    }

    /// Number of pairs `i < j` with `img[i] > img[j]`.
    pub fn inversion_length(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.img[i] > self.img[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Positions `k` with `img[k] > img[k+1]`.
    pub fn descents(&self) -> impl Iterator<Item = usize> + '_ {
        self.img.windows(2).enumerate().filter(|(_, w)| w[0] > w[1]).map(|(k, _)| k)
    }

    /// Canonical reduced word: peel off the leftmost descent until the
    /// identity is reached. The letters come out last-first.
    pub fn reduced_word(&self) -> Word {
        let mut q = self.img.clone();
        let mut letters = Vec::with_capacity(self.inversion_length());
        while let Some(k) = q.windows(2).position(|w| w[0] > w[1]) {
            // q ∘ t_k has one inversion fewer
            q.swap(k, k + 1);
            letters.push(k);
        }
        letters.reverse();
        Word(letters)
    }

    /// Block sum: `self` acts on the first `self.len()` points and `other`
    /// on the rest.
    pub fn block_sum(&self, other: &Perm) -> Perm {
        let off = self.len();
        let img = self.img.iter().copied().chain(other.img.iter().map(|&v| v + off)).collect();
        Perm { img }
    }

    /// All permutations of `n` points in lexicographic order of images.
    pub fn all(n: usize) -> AllPerms {
        AllPerms { next: Some((0..n).collect()) }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.img)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, &self.img)
    }
}

pub(crate) fn write_seq<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    f.write_str("[")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("]")
}

/// Iterator over all permutations of a fixed size.
pub struct AllPerms {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPerms {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let n = succ.len();
        if n > 1 {
            if let Some(i) = (0..n - 1).rev().find(|&i| succ[i] < succ[i + 1]) {
                let j = (i + 1..n).rev().find(|&j| succ[j] > succ[i]).unwrap();
                succ.swap(i, j);
                succ[i + 1..].reverse();
                self.next = Some(succ);
            }
        }
        Some(Perm { img: cur })
    }
}

/// A word in the generators `s_0, s_1, …`. Range checks happen where the
/// word is interpreted against a concrete size.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    /// The word with the letter at `index` erased.
    pub fn erase(&self, index: usize) -> Word {
        let mut v = self.0.clone();
        v.remove(index);
        Word(v)
    }

    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&l| l + 1 >= n) {
            Some(&letter) => Err(Error::LetterOutOfRange { letter, size: n }),
            None => Ok(()),
        }
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, &self.0)
    }
}

/// `t_{w₁} ∘ t_{w₂} ∘ … ∘ t_{w_m}` on `n` points.
pub fn word_to_perm(w: &Word, n: usize) -> Result<Perm> {
    w.check_range(n)?;
    // p ∘ t_k swaps the entries at positions k, k+1 of p's image sequence.
    let mut img: Vec<usize> = (0..n).collect();
    for &k in w.letters() {
        img.swap(k, k + 1);
    }
    Ok(Perm { img })
}

pub fn inversion_length(p: &Perm) -> usize {
    p.inversion_length()
}

pub fn reduced_word(p: &Perm) -> Word {
    p.reduced_word()
}

pub fn is_reduced(w: &Word, n: usize) -> Result<bool> {
    Ok(word_to_perm(w, n)?.inversion_length() == w.len())
}

/// Exchange property: for a reduced `w` such that `s_b w` is not longer
/// than `w`, returns the least index `i` with `s_b w = w` with letter `i`
/// erased.
pub fn exchange_step(w: &Word, b: usize, n: usize) -> Result<usize> {
    if !is_reduced(w, n)? {
        return Err(Error::NotReduced(w.0.clone()));
    }
    let prefixed = Word(std::iter::once(b).chain(w.0.iter().copied()).collect());
    let target = word_to_perm(&prefixed, n)?;
    if target.inversion_length() > w.len() {
        return Err(Error::NoReductionPossible(b));
    }
    (0..w.len())
        .find(|&i| word_to_perm(&w.erase(i), n).map(|p| p == target).unwrap_or(false))
        .ok_or(Error::NoSuchIndex)
}

/// The Coxeter matrix of type A on `rank` generators. Entries are computed
/// on demand, so it also serves as the `A_∞` matrix at any pair of indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoxeterMatrixA {
    pub rank: usize,
}

impl CoxeterMatrixA {
    pub fn new(rank: usize) -> Self {
        CoxeterMatrixA { rank }
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        matrix_entry(i, j)
    }
}

/// Order of `s_i s_j` in type A.
pub fn matrix_entry(i: usize, j: usize) -> usize {
    match i.abs_diff(j) {
        0 => 1,
        1 => 3,
        _ => 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(v: &[usize]) -> Perm {
        Perm::from_images(v.to_vec()).unwrap()
    }

    /// Pointwise composition of explicit transposition matrices.
    fn brute_word(w: &[usize], n: usize) -> Vec<usize> {
        let mut acc: Vec<usize> = (0..n).collect();
        for &k in w {
            let t: Vec<usize> = (0..n)
                .map(|i| if i == k { k + 1 } else if i == k + 1 { k } else { i })
                .collect();
            acc = (0..n).map(|i| acc[t[i]]).collect();
        }
        acc
    }

    #[test]
    fn word_to_perm_examples() {
        assert_eq!(word_to_perm(&Word(vec![]), 3).unwrap(), perm(&[0, 1, 2]));
        assert_eq!(word_to_perm(&Word(vec![0]), 2).unwrap(), perm(&[1, 0]));
        assert_eq!(brute_word(&[0, 1, 0], 3), vec![2, 1, 0]);
        assert_eq!(word_to_perm(&Word(vec![0, 1, 0]), 3).unwrap(), perm(&[2, 1, 0]));
        assert_eq!(brute_word(&[0, 1], 3), vec![1, 2, 0]);
        assert_eq!(word_to_perm(&Word(vec![0, 1]), 3).unwrap(), perm(&[1, 2, 0]));
    }

    #[test]
    fn word_to_perm_range() {
        assert_eq!(
            word_to_perm(&Word(vec![2]), 3),
            Err(Error::LetterOutOfRange { letter: 2, size: 3 })
        );
        assert!(word_to_perm(&Word(vec![0]), 0).is_err());
    }

    #[test]
    fn inversions() {
        assert_eq!(perm(&[0, 1, 2]).inversion_length(), 0);
        assert_eq!(perm(&[1, 2, 0]).inversion_length(), 2);
        assert_eq!(perm(&[2, 1, 0]).inversion_length(), 3);
    }

    #[test]
    fn reduced_word_examples() {
        assert_eq!(reduced_word(&perm(&[0, 1, 2])), Word(vec![]));
        assert_eq!(reduced_word(&perm(&[1, 0, 2])), Word(vec![0]));
        let target = perm(&[2, 1, 0]);
        let w = reduced_word(&target);
        assert_eq!(w.len(), 3);
        assert_eq!(word_to_perm(&w, 3).unwrap(), target);
        // brute force: the length-3 words composing to [2,1,0]
        let mut hits = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    if brute_word(&[a, b, c], 3) == vec![2, 1, 0] {
                        hits.push(vec![a, b, c]);
                    }
                }
            }
        }
        assert!(hits.contains(&w.0));
    }

    #[test]
    fn is_reduced_examples() {
        assert!(!is_reduced(&Word(vec![0, 0]), 2).unwrap());
        assert!(is_reduced(&Word(vec![0, 1]), 3).unwrap());
        assert!(is_reduced(&Word(vec![]), 5).unwrap());
        assert!(is_reduced(&Word(vec![3]), 3).is_err());
    }

    #[test]
    fn exchange_examples() {
        assert_eq!(exchange_step(&Word(vec![0]), 0, 2).unwrap(), 0);
        assert_eq!(exchange_step(&Word(vec![1, 0]), 1, 3).unwrap(), 0);
        assert_eq!(exchange_step(&Word(vec![0, 1]), 0, 3).unwrap(), 0);
        assert_eq!(exchange_step(&Word(vec![0, 0]), 0, 3), Err(Error::NotReduced(vec![0, 0])));
        assert_eq!(exchange_step(&Word(vec![0]), 1, 3), Err(Error::NoReductionPossible(1)));
    }

    #[test]
    fn matrix_entries() {
        let a4 = CoxeterMatrixA::new(4);
        assert_eq!(a4.entry(2, 2), 1);
        assert_eq!(a4.entry(1, 2), 3);
        assert_eq!(a4.entry(0, 3), 2);
        assert_eq!(a4.entry(2, 1), 3);
    }

    #[test]
    fn all_perms_counts() {
        assert_eq!(Perm::all(0).count(), 1);
        assert_eq!(Perm::all(4).count(), 24);
        let v: Vec<_> = Perm::all(3).collect();
        assert_eq!(v[0], Perm::identity(3));
        assert_eq!(v[5], perm(&[2, 1, 0]));
    }

    #[test]
    fn coxeter_relations_exhaustive() {
        for n in 2..=7 {
            for i in 0..n - 1 {
                for j in 0..n - 1 {
                    let m = matrix_entry(i, j);
                    let w: Vec<usize> = (0..m).flat_map(|_| [i, j]).collect();
                    assert!(word_to_perm(&Word(w), n).unwrap().is_identity());
                }
            }
        }
    }

    #[test]
    fn round_trip_exhaustive() {
        for n in 0..=6 {
            for p in Perm::all(n) {
                let w = p.reduced_word();
                assert_eq!(w.len(), p.inversion_length());
                assert_eq!(word_to_perm(&w, n).unwrap(), p);
            }
        }
    }

    fn word_strategy() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>)> {
        (2usize..8).prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(0..n - 1, 0..12),
                proptest::collection::vec(0..n - 1, 0..12),
            )
        })
    }

    proptest! {
        #[test]
        fn concatenation_is_composition((n, u, v) in word_strategy()) {
            let (u, v) = (Word(u), Word(v));
            let lhs = word_to_perm(&u.concat(&v), n).unwrap();
            let rhs = word_to_perm(&u, n).unwrap().compose(&word_to_perm(&v, n).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn word_matches_brute_force((n, u, _v) in word_strategy()) {
            prop_assert_eq!(word_to_perm(&Word(u.clone()), n).unwrap().into_images(), brute_word(&u, n));
        }

        #[test]
        fn exchange_property((n, u, _v) in word_strategy(), b_seed in 0usize..100) {
            let w = word_to_perm(&Word(u), n).unwrap().reduced_word();
            let b = b_seed % (n - 1);
            let prefixed = Word(std::iter::once(b).chain(w.0.iter().copied()).collect());
            if word_to_perm(&prefixed, n).unwrap().inversion_length() <= w.len() {
                let i = exchange_step(&w, b, n).unwrap();
                prop_assert!(is_reduced(&w.erase(i), n).unwrap());
            } else {
                prop_assert_eq!(exchange_step(&w, b, n), Err(Error::NoReductionPossible(b)));
            }
        }

        #[test]
        fn inverse_is_two_sided(v in proptest::collection::vec(0usize..100, 0..9)) {
            let mut idx: Vec<usize> = (0..v.len()).collect();
            idx.sort_by_key(|&i| (v[i], i));
            let p = Perm::from_images(idx).unwrap();
            prop_assert!(p.compose(&p.inverse()).is_identity());
            prop_assert!(p.inverse().compose(&p).is_identity());
        }
    }
}
