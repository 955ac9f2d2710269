use std::fmt;
use std::marker::PhantomData;

use crate::error::{mismatch, Result};
use crate::monoidal;
use crate::perm::Perm;
use crate::slist::{compose, Label, SList, SListHom};

use super::eval::decide_equal;
use super::term::{MorTerm, ObjTerm};

/// A symmetric monoidal category, given by its biased structure.
///
/// Composition is diagram order: `compose(f, g)` is `f` then `g`.
/// Implementations must satisfy the pentagon, triangle, hexagon and
/// symmetry laws; [`check_model_laws`] verifies them on sample objects
/// when the model can compare morphisms.
pub trait SmcModel {
    type Obj: Clone + fmt::Debug;
    type Mor: Clone + fmt::Debug;

    fn unit(&self) -> Self::Obj;
    fn tensor(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj;

    fn id(&self, a: &Self::Obj) -> Self::Mor;
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;

    /// `(a ⊗ b) ⊗ c → a ⊗ (b ⊗ c)`
    fn associator(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Self::Mor;
    fn associator_inv(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Self::Mor;
    /// `I ⊗ a → a`
    fn left_unitor(&self, a: &Self::Obj) -> Self::Mor;
    fn left_unitor_inv(&self, a: &Self::Obj) -> Self::Mor;
    /// `a ⊗ I → a`
    fn right_unitor(&self, a: &Self::Obj) -> Self::Mor;
    fn right_unitor_inv(&self, a: &Self::Obj) -> Self::Mor;
    /// `a ⊗ b → b ⊗ a`; its inverse is `braiding(b, a)`.
    fn braiding(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor;

    /// Equality of parallel morphisms, when decidable.
    fn mor_eq(&self, _f: &Self::Mor, _g: &Self::Mor) -> Option<bool> {
        None
    }
}

/// Symmetric lists with strict concatenation.
pub struct SListModel<L>(PhantomData<L>);

impl<L> SListModel<L> {
    pub fn new() -> Self {
        SListModel(PhantomData)
    }
}

impl<L> Default for SListModel<L> {
    fn default() -> Self {
        Self::new()
    }
}

impl<L: Label> SmcModel for SListModel<L> {
    type Obj = SList<L>;
    type Mor = SListHom<L>;

    fn unit(&self) -> SList<L> {
        SList::empty()
    }

    fn tensor(&self, a: &SList<L>, b: &SList<L>) -> SList<L> {
        monoidal::tensor_obj(a, b)
    }

    fn id(&self, a: &SList<L>) -> SListHom<L> {
        SListHom::identity(a.clone())
    }

    fn compose(&self, f: &SListHom<L>, g: &SListHom<L>) -> Result<SListHom<L>> {
        compose(f, g)
    }

    fn tensor_mor(&self, f: &SListHom<L>, g: &SListHom<L>) -> SListHom<L> {
        monoidal::tensor_hom(f, g)
    }

    fn associator(&self, a: &SList<L>, b: &SList<L>, c: &SList<L>) -> SListHom<L> {
        self.id(&self.tensor(&self.tensor(a, b), c))
    }

    fn associator_inv(&self, a: &SList<L>, b: &SList<L>, c: &SList<L>) -> SListHom<L> {
        self.associator(a, b, c)
    }

    fn left_unitor(&self, a: &SList<L>) -> SListHom<L> {
        self.id(a)
    }

    fn left_unitor_inv(&self, a: &SList<L>) -> SListHom<L> {
        self.id(a)
    }

    fn right_unitor(&self, a: &SList<L>) -> SListHom<L> {
        self.id(a)
    }

    fn right_unitor_inv(&self, a: &SList<L>) -> SListHom<L> {
        self.id(a)
    }

    fn braiding(&self, a: &SList<L>, b: &SList<L>) -> SListHom<L> {
        monoidal::braiding(a, b)
    }

    fn mor_eq(&self, f: &SListHom<L>, g: &SListHom<L>) -> Option<bool> {
        Some(f == g)
    }
}

/// The free symmetric monoidal category itself: morphisms are terms and
/// equality is the coherence decision procedure.
pub struct FreeTermModel<L>(PhantomData<L>);

impl<L> FreeTermModel<L> {
    pub fn new() -> Self {
        FreeTermModel(PhantomData)
    }
}

impl<L> Default for FreeTermModel<L> {
    fn default() -> Self {
        Self::new()
    }
}

impl<L: Label> SmcModel for FreeTermModel<L> {
    type Obj = ObjTerm<L>;
    type Mor = MorTerm<L>;

    fn unit(&self) -> ObjTerm<L> {
        ObjTerm::Unit
    }

    fn tensor(&self, a: &ObjTerm<L>, b: &ObjTerm<L>) -> ObjTerm<L> {
        ObjTerm::tensor(a.clone(), b.clone())
    }

    fn id(&self, a: &ObjTerm<L>) -> MorTerm<L> {
        MorTerm::Id(a.clone())
    }

    fn compose(&self, f: &MorTerm<L>, g: &MorTerm<L>) -> Result<MorTerm<L>> {
        let h = MorTerm::comp(f.clone(), g.clone());
        h.boundary()?;
        Ok(h)
    }

    fn tensor_mor(&self, f: &MorTerm<L>, g: &MorTerm<L>) -> MorTerm<L> {
        MorTerm::tensor(f.clone(), g.clone())
    }

    fn associator(&self, a: &ObjTerm<L>, b: &ObjTerm<L>, c: &ObjTerm<L>) -> MorTerm<L> {
        MorTerm::Assoc(a.clone(), b.clone(), c.clone())
    }

    fn associator_inv(&self, a: &ObjTerm<L>, b: &ObjTerm<L>, c: &ObjTerm<L>) -> MorTerm<L> {
        MorTerm::inv(self.associator(a, b, c))
    }

    fn left_unitor(&self, a: &ObjTerm<L>) -> MorTerm<L> {
        MorTerm::LeftUnitor(a.clone())
    }

    fn left_unitor_inv(&self, a: &ObjTerm<L>) -> MorTerm<L> {
        MorTerm::inv(self.left_unitor(a))
    }

    fn right_unitor(&self, a: &ObjTerm<L>) -> MorTerm<L> {
        MorTerm::RightUnitor(a.clone())
    }

    fn right_unitor_inv(&self, a: &ObjTerm<L>) -> MorTerm<L> {
        MorTerm::inv(self.right_unitor(a))
    }

    fn braiding(&self, a: &ObjTerm<L>, b: &ObjTerm<L>) -> MorTerm<L> {
        MorTerm::Braid(a.clone(), b.clone())
    }

    fn mor_eq(&self, f: &MorTerm<L>, g: &MorTerm<L>) -> Option<bool> {
        decide_equal(f, g).ok()
    }
}

/// Finite sets up to bijection: objects are sizes, tensor is addition and
/// morphisms are permutations (`dst` index ↦ `src` index, like
/// [`SListHom`]).
#[derive(Clone, Copy, Debug, Default)]
pub struct FinBijectionModel;

impl FinBijectionModel {
    fn block_swap(a: usize, b: usize) -> Perm {
        let img = (0..a + b).map(|i| if i < b { i + a } else { i - b }).collect();
        Perm::from_images_unchecked(img)
    }
}

impl SmcModel for FinBijectionModel {
    type Obj = usize;
    type Mor = Perm;

    fn unit(&self) -> usize {
        0
    }

    fn tensor(&self, a: &usize, b: &usize) -> usize {
        a + b
    }

    fn id(&self, a: &usize) -> Perm {
        Perm::identity(*a)
    }

    fn compose(&self, f: &Perm, g: &Perm) -> Result<Perm> {
        if f.len() != g.len() {
            return Err(mismatch(format!("bijections of sizes {} and {}", f.len(), g.len())));
        }
        Ok(f.compose(g))
    }

    fn tensor_mor(&self, f: &Perm, g: &Perm) -> Perm {
        f.block_sum(g)
    }

    fn associator(&self, a: &usize, b: &usize, c: &usize) -> Perm {
        Perm::identity(a + b + c)
    }

    fn associator_inv(&self, a: &usize, b: &usize, c: &usize) -> Perm {
        Perm::identity(a + b + c)
    }

    fn left_unitor(&self, a: &usize) -> Perm {
        Perm::identity(*a)
    }

    fn left_unitor_inv(&self, a: &usize) -> Perm {
        Perm::identity(*a)
    }

    fn right_unitor(&self, a: &usize) -> Perm {
        Perm::identity(*a)
    }

    fn right_unitor_inv(&self, a: &usize) -> Perm {
        Perm::identity(*a)
    }

    fn braiding(&self, a: &usize, b: &usize) -> Perm {
        Self::block_swap(*a, *b)
    }

    fn mor_eq(&self, f: &Perm, g: &Perm) -> Option<bool> {
        Some(f == g)
    }
}

/// Checks the symmetric monoidal axioms on every tuple drawn from
/// `objects`. Returns one line per violated or undecidable instance.
pub fn check_model_laws<M: SmcModel>(m: &M, objects: &[M::Obj]) -> Result<Vec<String>> {
    let mut violations = Vec::new();
    let c = |f: &M::Mor, g: &M::Mor| m.compose(f, g);
    let mut expect = |name: &str, lhs: M::Mor, rhs: M::Mor| match m.mor_eq(&lhs, &rhs) {
        Some(true) => {}
        Some(false) => violations.push(format!("{name}: {lhs:?} != {rhs:?}")),
        None => violations.push(format!("{name}: equality undecidable in this model")),
    };
    for x in objects {
        let t = |a: &M::Obj, b: &M::Obj| m.tensor(a, b);
        let u = m.unit();
        expect("left unitor inverse", c(&m.left_unitor(x), &m.left_unitor_inv(x))?, m.id(&t(&u, x)));
        expect("left unitor inverse", c(&m.left_unitor_inv(x), &m.left_unitor(x))?, m.id(x));
        expect("right unitor inverse", c(&m.right_unitor(x), &m.right_unitor_inv(x))?, m.id(&t(x, &u)));
        expect("right unitor inverse", c(&m.right_unitor_inv(x), &m.right_unitor(x))?, m.id(x));
        for y in objects {
            // symmetry
            expect("symmetry", c(&m.braiding(x, y), &m.braiding(y, x))?, m.id(&t(x, y)));
            // triangle: α_{x,I,y} ; (x ◁ λ_y) = ρ_x ▷ y
            expect(
                "triangle",
                c(&m.associator(x, &u, y), &m.tensor_mor(&m.id(x), &m.left_unitor(y)))?,
                m.tensor_mor(&m.right_unitor(x), &m.id(y)),
            );
            for z in objects {
                expect(
                    "associator inverse",
                    c(&m.associator(x, y, z), &m.associator_inv(x, y, z))?,
                    m.id(&t(&t(x, y), z)),
                );
                // α_{x,y,z} ; β_{x,y⊗z} ; α_{y,z,x} = (β_{x,y} ▷ z) ; α_{y,x,z} ; (y ◁ β_{x,z})
                let lhs = c(&c(&m.associator(x, y, z), &m.braiding(x, &t(y, z)))?, &m.associator(y, z, x))?;
                let rhs = c(
                    &c(&m.tensor_mor(&m.braiding(x, y), &m.id(z)), &m.associator(y, x, z))?,
                    &m.tensor_mor(&m.id(y), &m.braiding(x, z)),
                )?;
                expect("hexagon", lhs, rhs);
                // α⁻¹_{x,y,z} ; β_{x⊗y,z} ; α⁻¹_{z,x,y} = (x ◁ β_{y,z}) ; α⁻¹_{x,z,y} ; (β_{x,z} ▷ y)
                let lhs = c(
                    &c(&m.associator_inv(x, y, z), &m.braiding(&t(x, y), z))?,
                    &m.associator_inv(z, x, y),
                )?;
                let rhs = c(
                    &c(&m.tensor_mor(&m.id(x), &m.braiding(y, z)), &m.associator_inv(x, z, y))?,
                    &m.tensor_mor(&m.braiding(x, z), &m.id(y)),
                )?;
                expect("inverse hexagon", lhs, rhs);
                for w in objects {
                    // α_{x⊗y,z,w} ; α_{x,y,z⊗w} = (α_{x,y,z} ▷ w) ; α_{x,y⊗z,w} ; (x ◁ α_{y,z,w})
                    let lhs = c(&m.associator(&t(x, y), z, w), &m.associator(x, y, &t(z, w)))?;
                    let rhs = c(
                        &c(&m.tensor_mor(&m.associator(x, y, z), &m.id(w)), &m.associator(x, &t(y, z), w))?,
                        &m.tensor_mor(&m.id(x), &m.associator(y, z, w)),
                    )?;
                    expect("pentagon", lhs, rhs);
                }
            }
        }
    }
    Ok(violations)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slist_model_laws() {
        let objs: Vec<SList<char>> = ["", "a", "bc", "aa"].iter().map(|s| s.chars().collect()).collect();
        assert_eq!(check_model_laws(&SListModel::new(), &objs).unwrap(), Vec::<String>::new());
    }

    #[test]
    fn fin_bijection_model_laws() {
        let objs = [0usize, 1, 2, 3];
        assert_eq!(check_model_laws(&FinBijectionModel, &objs).unwrap(), Vec::<String>::new());
    }

    #[test]
    fn free_term_model_laws() {
        let g = |c| ObjTerm::Gen(c);
        let objs = vec![
            ObjTerm::Unit,
            g('a'),
            ObjTerm::tensor(g('b'), g('c')),
            ObjTerm::tensor(ObjTerm::Unit, g('a')),
        ];
        assert_eq!(check_model_laws(&FreeTermModel::new(), &objs).unwrap(), Vec::<String>::new());
    }

    #[test]
    fn broken_model_is_caught() {
        // cyclic shift in place of the block swap
        struct NoBraid;
        impl SmcModel for NoBraid {
            type Obj = usize;
            type Mor = Perm;
            fn unit(&self) -> usize { 0 }
            fn tensor(&self, a: &usize, b: &usize) -> usize { a + b }
            fn id(&self, a: &usize) -> Perm { Perm::identity(*a) }
            fn compose(&self, f: &Perm, g: &Perm) -> Result<Perm> { FinBijectionModel.compose(f, g) }
            fn tensor_mor(&self, f: &Perm, g: &Perm) -> Perm { f.block_sum(g) }
            fn associator(&self, a: &usize, b: &usize, c: &usize) -> Perm { Perm::identity(a + b + c) }
            fn associator_inv(&self, a: &usize, b: &usize, c: &usize) -> Perm { Perm::identity(a + b + c) }
            fn left_unitor(&self, a: &usize) -> Perm { Perm::identity(*a) }
            fn left_unitor_inv(&self, a: &usize) -> Perm { Perm::identity(*a) }
            fn right_unitor(&self, a: &usize) -> Perm { Perm::identity(*a) }
            fn right_unitor_inv(&self, a: &usize) -> Perm { Perm::identity(*a) }
            fn braiding(&self, a: &usize, b: &usize) -> Perm {
                let n = a + b;
                Perm::from_images((0..n).map(|i| (i + 1) % n.max(1)).collect()).unwrap()
            }
            fn mor_eq(&self, f: &Perm, g: &Perm) -> Option<bool> { Some(f == g) }
        }
        let v = check_model_laws(&NoBraid, &[1, 2]).unwrap();
        assert!(v.iter().any(|l| l.starts_with("symmetry")));
    }
}
