//! Extension of a label assignment to a symmetric monoidal functor out of
//! symmetric lists.

use crate::error::Result;
use crate::slist::{Label, SList, SListHom};

use super::eval::{canonical_term, eval_mor, eval_obj};
use super::model::SmcModel;
use super::term::ObjTerm;

/// `Ψ` for a fixed model and assignment.
pub struct Psi<'a, M, A> {
    pub model: &'a M,
    pub assign: A,
}

pub fn psi_extend<L, M, A>(assign: A, model: &M) -> Psi<'_, M, A>
where
    L: Label,
    M: SmcModel,
    A: Fn(&L) -> Option<M::Obj>,
{
    Psi { model, assign }
}

impl<'a, M: SmcModel, A> Psi<'a, M, A> {
    /// Right fold `x_{l₀} ⊗ (x_{l₁} ⊗ (… ⊗ I))`.
    pub fn obj<L: Label>(&self, list: &SList<L>) -> Result<M::Obj>
    where
        A: Fn(&L) -> Option<M::Obj>,
    {
        eval_obj(&ObjTerm::nest(list), self.model, &self.assign)
    }

    pub fn hom<L: Label>(&self, f: &SListHom<L>) -> Result<M::Mor>
    where
        A: Fn(&L) -> Option<M::Obj>,
    {
        eval_mor(&canonical_term(f), self.model, &self.assign)
    }

    /// `Ψ(l₁ ⊗ l₂) → Ψ(l₁) ⊗ Ψ(l₂)`, built from associators and the left
    /// unitor only.
    pub fn monoidal_iso<L: Label>(&self, l1: &SList<L>, l2: &SList<L>) -> Result<M::Mor>
    where
        A: Fn(&L) -> Option<M::Obj>,
    {
        let m = self.model;
        match l1.labels().split_first() {
            None => Ok(m.left_unitor_inv(&self.obj(l2)?)),
            Some((head, rest)) => {
                let rest = SList::new(rest.to_vec());
                let x = eval_obj(&ObjTerm::Gen(head.clone()), m, &self.assign)?;
                let inner = m.tensor_mor(&m.id(&x), &self.monoidal_iso(&rest, l2)?);
                let reassoc = m.associator_inv(&x, &self.obj(&rest)?, &self.obj(l2)?);
                m.compose(&inner, &reassoc)
            }
        }
    }
}

pub fn psi_monoidal_iso<L, M, A>(l1: &SList<L>, l2: &SList<L>, assign: A, model: &M) -> Result<M::Mor>
where
    L: Label,
    M: SmcModel,
    A: Fn(&L) -> Option<M::Obj>,
{
    psi_extend(assign, model).monoidal_iso(l1, l2)
}
