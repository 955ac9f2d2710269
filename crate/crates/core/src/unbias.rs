//! Evaluation of the fiber system in a symmetric monoidal model: the
//! unbiased tensor `k ↦ ⊗_{a ∈ g⁻¹(k)} x_{f(a)}` of a span `J ←f S →g K`
//! and its coherence isomorphisms.

use crate::error::{Error, Result};
use crate::finspan::{Span, SpanCell};
use crate::free_smc::{psi_extend, SmcModel};
use crate::kleisli::{substitution_iso, KCell};
use crate::pbc::{lambda_system, pseudofunctor_comp, pseudofunctor_id, pseudofunctor_on_cell, pseudofunctor_on_span, LawSides};
use crate::slist::SList;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnbiasResult<O> {
    /// Per target index, the labels `f(a)` over the fiber, ascending in `a`.
    pub fibers: Vec<SList<usize>>,
    /// Per target index, the right-nested tensor over the fiber.
    pub objects: Vec<O>,
}

fn assignment<O: Clone>(x: &[O]) -> impl Fn(&usize) -> Option<O> + '_ {
    move |j| x.get(*j).cloned()
}

fn check_family<O>(x: &[O], size: usize) -> Result<()> {
    if x.len() > size {
        return Err(Error::BoundaryMismatch(format!("family of size {} over a set of size {size}", x.len())));
    }
    Ok(())
}

pub fn unbias_eval<M: SmcModel>(s: &Span, m: &M, x: &[M::Obj]) -> Result<UnbiasResult<M::Obj>> {
    check_family(x, s.source())?;
    let fibers = pseudofunctor_on_span(&lambda_system(), s)?.lists().to_vec();
    let psi = psi_extend(assignment(x), m);
    let objects = fibers.iter().map(|l| psi.obj(l)).collect::<Result<_>>()?;
    Ok(UnbiasResult { fibers, objects })
}

/// The components of a Kleisli cell over `J`, evaluated at `x : J → C`.
pub fn instantiate<M: SmcModel>(cell: &KCell, m: &M, x: &[M::Obj]) -> Result<Vec<M::Mor>> {
    check_family(x, cell.src().dst())?;
    let psi = psi_extend(assignment(x), m);
    cell.homs().iter().map(|h| psi.hom(h)).collect()
}

pub fn instantiate_sides<M: SmcModel>(sides: &LawSides, m: &M, x: &[M::Obj]) -> Result<Vec<(M::Mor, M::Mor)>> {
    Ok(instantiate(&sides.0, m, x)?.into_iter().zip(instantiate(&sides.1, m, x)?).collect())
}

/// The image of a pith cell of spans.
pub fn cell_image<M: SmcModel>(c: &SpanCell, m: &M, x: &[M::Obj]) -> Result<Vec<M::Mor>> {
    instantiate(&pseudofunctor_on_cell(&lambda_system(), c)?, m, x)
}

/// The unit isomorphism at each `j < n`: the object of the identity span,
/// `x_j ⊗ I`, to `x_j`.
pub fn unit_cell<M: SmcModel>(n: usize, m: &M, x: &[M::Obj]) -> Result<Vec<M::Mor>> {
    let cell = pseudofunctor_id(&lambda_system(), n)?;
    let parts = instantiate(&cell, m, x)?;
    parts
        .iter()
        .enumerate()
        .map(|(j, h)| {
            let xj = x.get(j).ok_or_else(|| Error::UnassignedLabel(j.to_string()))?;
            m.compose(h, &m.right_unitor(xj))
        })
        .collect()
}

/// The composition isomorphism at each target index `l` of `t`: from the
/// object of `s;t` to the tensor, over the fiber of `t`, of the objects of
/// `s`.
pub fn comp_cell<M: SmcModel>(s: &Span, t: &Span, m: &M, x: &[M::Obj]) -> Result<Vec<M::Mor>> {
    let sys = lambda_system();
    let cell = pseudofunctor_comp(&sys, s, t)?;
    let fs = pseudofunctor_on_span(&sys, s)?;
    let ft = pseudofunctor_on_span(&sys, t)?;
    let parts = instantiate(&cell, m, x)?;
    parts
        .iter()
        .zip(ft.lists())
        .map(|(h, l)| m.compose(h, &substitution_iso(&fs, l, &assignment(x), m)?))
        .collect()
}
