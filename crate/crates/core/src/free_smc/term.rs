use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::slist::{Label, SList};

/// Objects of the free symmetric monoidal category.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObjTerm<L> {
    Unit,
    Gen(L),
    Tensor(Box<ObjTerm<L>>, Box<ObjTerm<L>>),
}

impl<L: Label> ObjTerm<L> {
    pub fn gen(l: L) -> Self {
        ObjTerm::Gen(l)
    }

    pub fn tensor(a: ObjTerm<L>, b: ObjTerm<L>) -> Self {
        ObjTerm::Tensor(Box::new(a), Box::new(b))
    }

    /// Right-nested `Gen(l₀) ⊗ (Gen(l₁) ⊗ (… ⊗ Unit))`.
    pub fn nest(list: &SList<L>) -> Self {
        list.labels()
            .iter()
            .rev()
            .fold(ObjTerm::Unit, |acc, l| ObjTerm::tensor(ObjTerm::Gen(l.clone()), acc))
    }

    /// Generator labels from left to right.
    pub fn leaves(&self) -> Vec<L> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<L>) {
        match self {
            ObjTerm::Unit => {}
            ObjTerm::Gen(l) => out.push(l.clone()),
            ObjTerm::Tensor(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            ObjTerm::Unit | ObjTerm::Gen(_) => 1,
            ObjTerm::Tensor(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn split(&self) -> Option<(&ObjTerm<L>, &ObjTerm<L>)> {
        match self {
            ObjTerm::Tensor(a, b) => Some((a, b)),
            _ => None,
        }
    }
}

/// Structural morphisms of the free symmetric monoidal category.
///
/// `Comp(f, g)` is diagram order: `f` first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MorTerm<L> {
    Id(ObjTerm<L>),
    Comp(Box<MorTerm<L>>, Box<MorTerm<L>>),
    Tensor(Box<MorTerm<L>>, Box<MorTerm<L>>),
    /// `(X ⊗ Y) ⊗ Z → X ⊗ (Y ⊗ Z)`
    Assoc(ObjTerm<L>, ObjTerm<L>, ObjTerm<L>),
    /// `I ⊗ X → X`
    LeftUnitor(ObjTerm<L>),
    /// `X ⊗ I → X`
    RightUnitor(ObjTerm<L>),
    /// `X ⊗ Y → Y ⊗ X`
    Braid(ObjTerm<L>, ObjTerm<L>),
    Inv(Box<MorTerm<L>>),
}

impl<L: Label> MorTerm<L> {
    pub fn comp(f: MorTerm<L>, g: MorTerm<L>) -> Self {
        MorTerm::Comp(Box::new(f), Box::new(g))
    }

    pub fn tensor(f: MorTerm<L>, g: MorTerm<L>) -> Self {
        MorTerm::Tensor(Box::new(f), Box::new(g))
    }

    pub fn inv(f: MorTerm<L>) -> Self {
        MorTerm::Inv(Box::new(f))
    }

    /// Left-nested composite of a non-empty sequence.
    pub fn comp_all(parts: impl IntoIterator<Item = MorTerm<L>>) -> Option<Self> {
        parts.into_iter().reduce(MorTerm::comp)
    }

    /// Source and target, checking that every composite is well typed.
    /// Boundaries are compared syntactically.
    pub fn boundary(&self) -> Result<(ObjTerm<L>, ObjTerm<L>)> {
        use ObjTerm as O;
        let t = |a: &O<L>, b: &O<L>| O::tensor(a.clone(), b.clone());
        Ok(match self {
            MorTerm::Id(x) => (x.clone(), x.clone()),
            MorTerm::Comp(f, g) => {
                let (fs, ft) = f.boundary()?;
                let (gs, gt) = g.boundary()?;
                if ft != gs {
                    return Err(Error::IllTyped(format!(
                        "composite of {ft:?}-valued morphism with a morphism out of {gs:?}"
                    )));
                }
                (fs, gt)
            }
            MorTerm::Tensor(f, g) => {
                let (fs, ft) = f.boundary()?;
                let (gs, gt) = g.boundary()?;
                (O::tensor(fs, gs), O::tensor(ft, gt))
            }
            MorTerm::Assoc(x, y, z) => (O::tensor(t(x, y), z.clone()), O::tensor(x.clone(), t(y, z))),
            MorTerm::LeftUnitor(x) => (t(&O::Unit, x), x.clone()),
            MorTerm::RightUnitor(x) => (t(x, &O::Unit), x.clone()),
            MorTerm::Braid(x, y) => (t(x, y), t(y, x)),
            MorTerm::Inv(f) => {
                let (s, t) = f.boundary()?;
                (t, s)
            }
        })
    }

    pub fn source(&self) -> Result<ObjTerm<L>> {
        Ok(self.boundary()?.0)
    }

    pub fn target(&self) -> Result<ObjTerm<L>> {
        Ok(self.boundary()?.1)
    }

    /// Number of constructor nodes (objects count as one).
    pub fn size(&self) -> usize {
        match self {
            MorTerm::Id(_) | MorTerm::Assoc(..) | MorTerm::LeftUnitor(_) | MorTerm::RightUnitor(_) | MorTerm::Braid(..) => 1,
            MorTerm::Comp(f, g) | MorTerm::Tensor(f, g) => 1 + f.size() + g.size(),
            MorTerm::Inv(f) => 1 + f.size(),
        }
    }

    /// All generator labels mentioned anywhere in the term.
    pub fn labels(&self) -> BTreeSet<L> {
        let mut out = BTreeSet::new();
        self.collect_labels(&mut out);
        out
    }

    fn collect_labels(&self, out: &mut BTreeSet<L>) {
        let mut objs = |os: &[&ObjTerm<L>]| {
            for o in os {
                out.extend(o.leaves());
            }
        };
        match self {
            MorTerm::Id(x) | MorTerm::LeftUnitor(x) | MorTerm::RightUnitor(x) => objs(&[x]),
            MorTerm::Assoc(x, y, z) => objs(&[x, y, z]),
            MorTerm::Braid(x, y) => objs(&[x, y]),
            MorTerm::Comp(f, g) | MorTerm::Tensor(f, g) => {
                f.collect_labels(out);
                g.collect_labels(out);
            }
            MorTerm::Inv(f) => f.collect_labels(out),
        }
    }
}
