//! Evaluation of terms in a model, normalization to symmetric lists, and
//! the coherence decision procedure built on it.

use crate::error::{Error, Result};
use crate::slist::{word_from_hom, Label, SList, SListHom};

use super::model::{SListModel, SmcModel};
use super::term::{MorTerm, ObjTerm};

/// Object part of the symmetric monoidal functor induced by `assign`.
pub fn eval_obj<L, M, A>(t: &ObjTerm<L>, m: &M, assign: &A) -> Result<M::Obj>
where
    L: Label,
    M: SmcModel,
    A: Fn(&L) -> Option<M::Obj>,
{
    match t {
        ObjTerm::Unit => Ok(m.unit()),
        ObjTerm::Gen(l) => assign(l).ok_or_else(|| Error::UnassignedLabel(format!("{l:?}"))),
        ObjTerm::Tensor(a, b) => Ok(m.tensor(&eval_obj(a, m, assign)?, &eval_obj(b, m, assign)?)),
    }
}

/// Morphism part of the symmetric monoidal functor induced by `assign`.
///
/// `Inv` is pushed through the term structurally, so the model only has to
/// supply inverses of its structural isomorphisms.
pub fn eval_mor<L, M, A>(t: &MorTerm<L>, m: &M, assign: &A) -> Result<M::Mor>
where
    L: Label,
    M: SmcModel,
    A: Fn(&L) -> Option<M::Obj>,
{
    t.boundary()?;
    eval_inner(t, false, m, assign)
}

fn eval_inner<L, M, A>(t: &MorTerm<L>, inverted: bool, m: &M, assign: &A) -> Result<M::Mor>
where
    L: Label,
    M: SmcModel,
    A: Fn(&L) -> Option<M::Obj>,
{
    let obj = |o: &ObjTerm<L>| eval_obj(o, m, assign);
    Ok(match t {
        MorTerm::Id(x) => m.id(&obj(x)?),
        MorTerm::Comp(f, g) => {
            let f = eval_inner(f, inverted, m, assign)?;
            let g = eval_inner(g, inverted, m, assign)?;
            if inverted {
                m.compose(&g, &f)?
            } else {
                m.compose(&f, &g)?
            }
        }
        MorTerm::Tensor(f, g) => {
            m.tensor_mor(&eval_inner(f, inverted, m, assign)?, &eval_inner(g, inverted, m, assign)?)
        }
        MorTerm::Assoc(x, y, z) => {
            let (x, y, z) = (obj(x)?, obj(y)?, obj(z)?);
            if inverted {
                m.associator_inv(&x, &y, &z)
            } else {
                m.associator(&x, &y, &z)
            }
        }
        MorTerm::LeftUnitor(x) => {
            let x = obj(x)?;
            if inverted {
                m.left_unitor_inv(&x)
            } else {
                m.left_unitor(&x)
            }
        }
        MorTerm::RightUnitor(x) => {
            let x = obj(x)?;
            if inverted {
                m.right_unitor_inv(&x)
            } else {
                m.right_unitor(&x)
            }
        }
        MorTerm::Braid(x, y) => {
            let (x, y) = (obj(x)?, obj(y)?);
            if inverted {
                m.braiding(&y, &x)
            } else {
                m.braiding(&x, &y)
            }
        }
        MorTerm::Inv(f) => eval_inner(f, !inverted, m, assign)?,
    })
}

/// The symmetric list morphism underlying a structural term: a complete
/// invariant modulo the symmetric monoidal axioms.
pub fn normalize<L: Label>(t: &MorTerm<L>) -> Result<SListHom<L>> {
    eval_mor(t, &SListModel::new(), &|l: &L| Some(SList::singleton(l.clone())))
}

pub fn normalize_obj<L: Label>(t: &ObjTerm<L>) -> SList<L> {
    SList::new(t.leaves())
}

/// Whether two parallel structural morphisms are equal in the free
/// symmetric monoidal category.
pub fn decide_equal<L: Label>(s: &MorTerm<L>, t: &MorTerm<L>) -> Result<bool> {
    let bs = s.boundary()?;
    let bt = t.boundary()?;
    if bs != bt {
        return Err(Error::BoundaryMismatch(format!("{:?} -> {:?} vs {:?} -> {:?}", bs.0, bs.1, bt.0, bt.1)));
    }
    Ok(normalize(s)?.phi() == normalize(t)?.phi())
}

/// A term `nest(src) → nest(dst)` realizing `f`, one
/// `α⁻¹ ; (β ⊗ id) ; α` block per swap of a reduced word, whiskered under
/// the prefix of the list.
pub fn canonical_term<L: Label>(f: &SListHom<L>) -> MorTerm<L> {
    let word = word_from_hom(f);
    let mut cur: Vec<L> = f.src().labels().to_vec();
    let mut steps = Vec::with_capacity(word.positions.len());
    for &p in &word.positions {
        let a = ObjTerm::Gen(cur[p].clone());
        let b = ObjTerm::Gen(cur[p + 1].clone());
        let rest = ObjTerm::nest(&SList::new(cur[p + 2..].to_vec()));
        let mut step = MorTerm::comp_all([
            MorTerm::inv(MorTerm::Assoc(a.clone(), b.clone(), rest.clone())),
            MorTerm::tensor(MorTerm::Braid(a.clone(), b.clone()), MorTerm::Id(rest.clone())),
            MorTerm::Assoc(b, a, rest),
        ])
        .expect("non-empty");
        for l in cur[..p].iter().rev() {
            step = MorTerm::tensor(MorTerm::Id(ObjTerm::Gen(l.clone())), step);
        }
        steps.push(step);
        cur.swap(p, p + 1);
    }
    MorTerm::comp_all(steps).unwrap_or_else(|| MorTerm::Id(ObjTerm::nest(f.src())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;
    use crate::slist::{hom_from_word, GenWord};

    type O = ObjTerm<char>;
    type T = MorTerm<char>;

    fn g(c: char) -> O {
        ObjTerm::Gen(c)
    }

    fn t(a: O, b: O) -> O {
        ObjTerm::tensor(a, b)
    }

    fn sl(s: &str) -> SList<char> {
        s.chars().collect()
    }

    #[test]
    fn eval_obj_examples() {
        let m = SListModel::new();
        let assign = |l: &char| Some(sl(&l.to_string()));
        assert_eq!(eval_obj(&O::Unit, &m, &assign).unwrap(), sl(""));
        assert_eq!(eval_obj(&g('a'), &m, &assign).unwrap(), sl("a"));
        assert_eq!(eval_obj(&t(g('a'), O::Unit), &m, &assign).unwrap(), sl("a"));
        let none = |_: &char| None::<SList<char>>;
        assert!(matches!(eval_obj(&g('a'), &m, &none), Err(Error::UnassignedLabel(_))));
    }

    #[test]
    fn eval_mor_examples() {
        let b = normalize(&T::Braid(g('a'), g('b'))).unwrap();
        assert_eq!(b.phi().images(), &[1, 0]);
        let a = normalize(&T::Assoc(g('a'), g('b'), g('c'))).unwrap();
        assert!(a.is_identity());
        assert_eq!(a.src(), &sl("abc"));
        let f = T::comp(T::Braid(g('a'), t(g('b'), g('c'))), T::Assoc(g('b'), g('c'), g('a')));
        let round = T::comp(f.clone(), T::inv(f));
        assert!(normalize(&round).unwrap().is_identity());
    }

    fn pentagon(x: O, y: O, z: O, w: O) -> (T, T) {
        let lhs = T::comp(T::Assoc(t(x.clone(), y.clone()), z.clone(), w.clone()), T::Assoc(x.clone(), y.clone(), t(z.clone(), w.clone())));
        let rhs = T::comp_all([
            T::tensor(T::Assoc(x.clone(), y.clone(), z.clone()), T::Id(w.clone())),
            T::Assoc(x.clone(), t(y.clone(), z.clone()), w.clone()),
            T::tensor(T::Id(x), T::Assoc(y, z, w)),
        ])
        .unwrap();
        (lhs, rhs)
    }

    fn hexagon(x: O, y: O, z: O) -> (T, T) {
        let lhs = T::comp_all([
            T::Assoc(x.clone(), y.clone(), z.clone()),
            T::Braid(x.clone(), t(y.clone(), z.clone())),
            T::Assoc(y.clone(), z.clone(), x.clone()),
        ])
        .unwrap();
        let rhs = T::comp_all([
            T::tensor(T::Braid(x.clone(), y.clone()), T::Id(z.clone())),
            T::Assoc(y.clone(), x.clone(), z.clone()),
            T::tensor(T::Id(y), T::Braid(x, z)),
        ])
        .unwrap();
        (lhs, rhs)
    }

    #[test]
    fn normalize_examples() {
        let (l, r) = pentagon(g('a'), g('b'), g('c'), g('d'));
        assert!(normalize(&l).unwrap().is_identity());
        assert!(normalize(&r).unwrap().is_identity());
        assert_eq!(normalize(&l).unwrap().src(), &sl("abcd"));
        let (l, r) = hexagon(g('a'), g('b'), g('c'));
        assert_eq!(normalize(&l).unwrap().phi().images(), &[1, 2, 0]);
        assert_eq!(normalize(&r).unwrap().phi().images(), &[1, 2, 0]);
        assert!(normalize(&T::Id(g('a'))).unwrap().is_identity());
    }

    #[test]
    fn decide_equal_examples() {
        let (x, y) = (g('x'), g('y'));
        let lhs = T::tensor(T::RightUnitor(x.clone()), T::Id(y.clone()));
        let rhs = T::comp(T::Assoc(x.clone(), O::Unit, y.clone()), T::tensor(T::Id(x.clone()), T::LeftUnitor(y.clone())));
        assert!(decide_equal(&lhs, &rhs).unwrap());
        let a = g('a');
        assert!(!decide_equal(&T::Braid(a.clone(), a.clone()), &T::Id(t(a.clone(), a))).unwrap());
        assert!(decide_equal(&lhs, &lhs).unwrap());
        assert!(matches!(decide_equal(&lhs, &T::Id(x)), Err(Error::BoundaryMismatch(_))));
    }

    #[test]
    fn canonical_term_examples() {
        let id = SListHom::identity(sl("ab"));
        assert!(normalize(&canonical_term(&id)).unwrap().is_identity());
        let swap = hom_from_word(&GenWord::new(sl("ab"), vec![0])).unwrap();
        assert_eq!(normalize(&canonical_term(&swap)).unwrap(), swap);
        let rev = SListHom::from_perm(sl("abc"), Perm::from_images(vec![2, 1, 0]).unwrap()).unwrap();
        let term = canonical_term(&rev);
        assert_eq!(term.boundary().unwrap(), (ObjTerm::nest(&sl("abc")), ObjTerm::nest(&sl("cba"))));
        assert_eq!(normalize(&term).unwrap(), rev);
    }

    #[test]
    fn canonical_term_round_trip_exhaustive() {
        for n in 0..=5 {
            let src: SList<char> = "aabcd".chars().take(n).collect();
            for p in Perm::all(n) {
                let f = SListHom::from_perm(src.clone(), p).unwrap();
                assert_eq!(normalize(&canonical_term(&f)).unwrap(), f);
            }
        }
    }
}
