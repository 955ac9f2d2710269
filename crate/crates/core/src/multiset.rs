use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

/// A finite multiset: label ↦ positive multiplicity. Zero counts are never
/// stored, so structural equality is multiset equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multiset<L: Ord> {
    counts: BTreeMap<L, usize>,
}

impl<L: Ord> Default for Multiset<L> {
    fn default() -> Self {
        Multiset { counts: BTreeMap::new() }
    }
}

impl<L: Ord + Clone> Multiset<L> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(label: L) -> Self {
        let mut m = Self::new();
        m.insert(label, 1);
        m
    }

    /// Multiplicity of `label` (zero when absent).
    pub fn count(&self, label: &L) -> usize {
        self.counts.get(label).copied().unwrap_or(0)
    }

    pub fn insert(&mut self, label: L, n: usize) {
        if n > 0 {
            *self.counts.entry(label).or_insert(0) += n;
        }
    }

    /// `n · self`.
    pub fn scale(&self, n: usize) -> Self {
        if n == 0 {
            return Self::new();
        }
        Multiset {
            counts: self.counts.iter().map(|(l, &c)| (l.clone(), c * n)).collect(),
        }
    }

    /// Total number of elements counted with multiplicity.
    pub fn cardinality(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&L, usize)> {
        self.counts.iter().map(|(l, &c)| (l, c))
    }

    /// All multiplicities are at most one.
    pub fn is_set(&self) -> bool {
        self.counts.values().all(|&c| c <= 1)
    }
}

impl<L: Ord + Clone> FromIterator<L> for Multiset<L> {
    fn from_iter<I: IntoIterator<Item = L>>(iter: I) -> Self {
        let mut m = Multiset::new();
        for l in iter {
            m.insert(l, 1);
        }
        m
    }
}

impl<L: Ord + Clone> Add for Multiset<L> {
    type Output = Multiset<L>;

    fn add(mut self, rhs: Multiset<L>) -> Multiset<L> {
        for (l, c) in rhs.counts {
            self.insert(l, c);
        }
        self
    }
}

impl<L: Ord + fmt::Debug> fmt::Debug for Multiset<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.counts.iter()).finish()
    }
}

impl<L: Ord + fmt::Display> fmt::Display for Multiset<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (l, c)) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}:{c}")?;
        }
        f.write_str("}")
    }
}
