//! The Kleisli bicategory of symmetric lists.
//!
//! A 1-cell `f : I ⇝ K` is a family of symmetric lists over `0..K`, one per
//! element of `I`. Composition substitutes lists into lists by
//! concatenation, which makes it strictly associative and unital: the
//! associator and unitors are identity cells.

use std::fmt;

use crate::error::{Error, Result};
use crate::free_smc::{psi_extend, SmcModel};
use crate::multiset::Multiset;
use crate::perm::Perm;
use crate::slist::{compose, SList, SListHom};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KHom {
    src: usize,
    dst: usize,
    lists: Vec<SList<usize>>,
}

impl KHom {
    pub fn new(dst: usize, lists: Vec<SList<usize>>) -> Result<Self> {
        for l in &lists {
            if let Some(&label) = l.labels().iter().find(|&&k| k >= dst) {
                return Err(Error::LabelOutOfRange { label, bound: dst });
            }
        }
        Ok(KHom { src: lists.len(), dst, lists })
    }

    pub fn from_vecs(dst: usize, lists: Vec<Vec<usize>>) -> Result<Self> {
        KHom::new(dst, lists.into_iter().map(SList::new).collect())
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn lists(&self) -> &[SList<usize>] {
        &self.lists
    }

    pub fn list(&self, i: usize) -> &SList<usize> {
        &self.lists[i]
    }
}

impl fmt::Debug for KHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KHom({}⇝{}: ", self.src, self.dst)?;
        f.debug_list().entries(self.lists.iter().map(|l| l.labels())).finish()?;
        write!(f, ")")
    }
}

/// A 2-cell: one symmetric list morphism per source index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KCell {
    src: KHom,
    dst: KHom,
    homs: Vec<SListHom<usize>>,
}

impl KCell {
    pub fn new(src: KHom, dst: KHom, homs: Vec<SListHom<usize>>) -> Result<Self> {
        if src.src != dst.src || src.dst != dst.dst || homs.len() != src.src {
            return Err(Error::BoundaryMismatch(format!("{src:?} vs {dst:?} with {} components", homs.len())));
        }
        for (i, h) in homs.iter().enumerate() {
            if h.src() != &src.lists[i] || h.dst() != &dst.lists[i] {
                return Err(Error::BoundaryMismatch(format!("component {i}: {h:?}")));
            }
        }
        Ok(KCell { src, dst, homs })
    }

    pub fn identity(f: &KHom) -> Self {
        let homs = f.lists.iter().map(|l| SListHom::identity(l.clone())).collect();
        KCell { src: f.clone(), dst: f.clone(), homs }
    }

    pub fn src(&self) -> &KHom {
        &self.src
    }

    pub fn dst(&self) -> &KHom {
        &self.dst
    }

    pub fn homs(&self) -> &[SListHom<usize>] {
        &self.homs
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.dst && self.homs.iter().all(SListHom::is_identity)
    }

    pub fn inverse(&self) -> Self {
        KCell { src: self.dst.clone(), dst: self.src.clone(), homs: self.homs.iter().map(SListHom::inverse).collect() }
    }
}

impl fmt::Debug for KCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KCell(")?;
        f.debug_list().entries(self.homs.iter()).finish()?;
        write!(f, ")")
    }
}

fn check_labels(g: &KHom, l: &SList<usize>) -> Result<()> {
    match l.labels().iter().find(|&&j| j >= g.src) {
        Some(&label) => Err(Error::LabelOutOfRange { label, bound: g.src }),
        None => Ok(()),
    }
}

/// `Θ_g(L)`: the concatenation of `g(l)` over the labels of `L`.
pub fn theta_apply(g: &KHom, l: &SList<usize>) -> Result<SList<usize>> {
    check_labels(g, l)?;
    Ok(l.labels().iter().flat_map(|&j| g.lists[j].labels().iter().copied()).collect())
}

fn block_offsets(g: &KHom, l: &SList<usize>) -> Vec<usize> {
    l.labels()
        .iter()
        .scan(0, |acc, &j| {
            let start = *acc;
            *acc += g.lists[j].len();
            Some(start)
        })
        .collect()
}

/// `Θ_g(f)`: moves whole blocks, `phi(off₂[i] + t) = off₁[f.phi[i]] + t`.
pub fn theta_apply_hom(g: &KHom, f: &SListHom<usize>) -> Result<SListHom<usize>> {
    let src = theta_apply(g, f.src())?;
    let dst = theta_apply(g, f.dst())?;
    let off1 = block_offsets(g, f.src());
    let off2 = block_offsets(g, f.dst());
    let mut img = vec![0; dst.len()];
    for (i, &j) in f.dst().labels().iter().enumerate() {
        for t in 0..g.lists[j].len() {
            img[off2[i] + t] = off1[f.phi().apply(i)] + t;
        }
    }
    SListHom::new(src, dst, Perm::from_images(img)?)
}

/// `f` then `g`.
pub fn k_compose(f: &KHom, g: &KHom) -> Result<KHom> {
    if f.dst != g.src {
        return Err(Error::BoundaryMismatch(format!("{f:?} then {g:?}")));
    }
    let lists = f.lists.iter().map(|l| theta_apply(g, l)).collect::<Result<_>>()?;
    Ok(KHom { src: f.src, dst: g.dst, lists })
}

/// The family of singletons `i ↦ [i]`.
pub fn k_id(n: usize) -> KHom {
    KHom { src: n, dst: n, lists: (0..n).map(SList::singleton).collect() }
}

/// `(f;g);h ⇒ f;(g;h)`, an identity cell after strictification.
pub fn k_associator(f: &KHom, g: &KHom, h: &KHom) -> Result<KCell> {
    let lhs = k_compose(&k_compose(f, g)?, h)?;
    let rhs = k_compose(f, &k_compose(g, h)?)?;
    debug_assert_eq!(lhs, rhs);
    Ok(KCell::identity(&rhs))
}

/// `id;f ⇒ f`.
pub fn k_left_unitor(f: &KHom) -> KCell {
    KCell::identity(f)
}

/// `f;id ⇒ f`.
pub fn k_right_unitor(f: &KHom) -> KCell {
    KCell::identity(f)
}

/// `c1` then `c2`.
pub fn k_vcomp(c1: &KCell, c2: &KCell) -> Result<KCell> {
    if c1.dst != c2.src {
        return Err(Error::BoundaryMismatch(format!("{:?} vs {:?}", c1.dst, c2.src)));
    }
    let homs = c1.homs.iter().zip(&c2.homs).map(|(a, b)| compose(a, b)).collect::<Result<_>>()?;
    Ok(KCell { src: c1.src.clone(), dst: c2.dst.clone(), homs })
}

/// Block-diagonal `Θ_g(L) → Θ_{g'}(L)` with blocks `ψ_{L[i]}`.
pub fn theta_whisker(psi: &KCell, l: &SList<usize>) -> Result<SListHom<usize>> {
    let src = theta_apply(&psi.src, l)?;
    let dst = theta_apply(&psi.dst, l)?;
    let mut img = Vec::with_capacity(dst.len());
    let mut offset = 0;
    for &j in l.labels() {
        let h = &psi.homs[j];
        img.extend(h.phi().images().iter().map(|&p| offset + p));
        offset += h.src().len();
    }
    SListHom::new(src, dst, Perm::from_images(img)?)
}

/// `φ : f ⇒ f'` and `ψ : g ⇒ g'` give `f;g ⇒ f';g'`: first `Θ_ψ` at
/// `f(i)`, then `Θ_{g'}(φ_i)`.
pub fn k_hcomp(phi: &KCell, psi: &KCell) -> Result<KCell> {
    let src = k_compose(&phi.src, &psi.src)?;
    let dst = k_compose(&phi.dst, &psi.dst)?;
    let homs = phi
        .homs
        .iter()
        .map(|p| compose(&theta_whisker(psi, p.src())?, &theta_apply_hom(&psi.dst, p)?))
        .collect::<Result<_>>()?;
    Ok(KCell { src, dst, homs })
}

/// `Σ_k 𝔠(k, ‖f(j)‖) · ‖g(k)‖`, computed from multiplicities alone.
pub fn composite_multiset(f: &KHom, g: &KHom, j: usize) -> Result<Multiset<usize>> {
    if f.dst != g.src {
        return Err(Error::BoundaryMismatch(format!("{f:?} then {g:?}")));
    }
    if j >= f.src {
        return Err(Error::IndexOutOfRange { index: j, bound: f.src });
    }
    let counts = f.lists[j].underlying_multiset();
    Ok((0..g.src)
        .map(|k| g.lists[k].underlying_multiset().scale(counts.count(&k)))
        .fold(Multiset::new(), |acc, m| acc + m))
}

/// The transpose family: `D(X)(k)` lists `j` once per occurrence of `k` in
/// `X(j)`, with `j` ascending.
pub fn duality(x: &KHom) -> KHom {
    let mut lists = vec![Vec::new(); x.dst];
    for (j, l) in x.lists.iter().enumerate() {
        for &k in l.labels() {
            lists[k].push(j);
        }
    }
    KHom { src: x.dst, dst: x.src, lists: lists.into_iter().map(SList::new).collect() }
}

/// Positions of label `k` in `l`, in order.
fn occurrences(l: &SList<usize>, k: usize) -> Vec<usize> {
    l.labels().iter().enumerate().filter(|(_, &m)| m == k).map(|(p, _)| p).collect()
}

/// `D(η) : D(X) ⇒ D(Y)` for `η : X ⇒ Y`.
pub fn duality_cell(eta: &KCell) -> Result<KCell> {
    let (dx, dy) = (duality(&eta.src), duality(&eta.dst));
    let n = eta.src.src;
    let mut homs = Vec::with_capacity(eta.src.dst);
    for k in 0..eta.src.dst {
        let mut img = Vec::new();
        // D lists are ordered by (j ascending, occurrence ascending), so the
        // occurrences of j start at a running offset
        let mut offset = 0;
        for j in 0..n {
            let h = &eta.homs[j];
            let src_occ = occurrences(h.src(), k);
            for p in occurrences(h.dst(), k) {
                let q = h.phi().apply(p);
                let rank = src_occ.iter().position(|&s| s == q).expect("η transports labels");
                img.push(offset + rank);
            }
            offset += src_occ.len();
        }
        homs.push(SListHom::new(dx.lists[k].clone(), dy.lists[k].clone(), Perm::from_images(img)?)?);
    }
    Ok(KCell { src: dx, dst: dy, homs })
}

/// The composite Kleisli 1-cell as a substitution isomorphism in a model:
/// `Ψ_x(Θ_g(L)) → Ψ_y(L)` with `y(l) = Ψ_x(g(l))`.
pub fn substitution_iso<M, A>(g: &KHom, l: &SList<usize>, assign: &A, m: &M) -> Result<M::Mor>
where
    M: SmcModel,
    A: Fn(&usize) -> Option<M::Obj>,
{
    check_labels(g, l)?;
    let psi = psi_extend(assign, m);
    let Some((&head, rest)) = l.labels().split_first() else {
        return Ok(m.id(&m.unit()));
    };
    let rest = SList::new(rest.to_vec());
    let split = psi.monoidal_iso(&g.lists[head], &theta_apply(g, &rest)?)?;
    let inner = substitution_iso(g, &rest, assign, m)?;
    m.compose(&split, &m.tensor_mor(&m.id(&psi.obj(&g.lists[head])?), &inner))
}

/// A lax monoidal functor between models that respects the braiding.
pub trait LaxMonoidalFunctor<C: SmcModel, D: SmcModel> {
    fn map_obj(&self, a: &C::Obj) -> D::Obj;
    fn map_mor(&self, f: &C::Mor) -> D::Mor;
    /// `I → F(I)`
    fn unit_comparison(&self) -> D::Mor;
    /// `F(a) ⊗ F(b) → F(a ⊗ b)`
    fn tensor_comparison(&self, a: &C::Obj, b: &C::Obj) -> D::Mor;
}

/// A functor given by closures, with comparisons computed in the target
/// model.
pub struct FnFunctor<'a, C: SmcModel, D: SmcModel> {
    pub target: &'a D,
    pub obj: Box<dyn Fn(&C::Obj) -> D::Obj + 'a>,
    pub mor: Box<dyn Fn(&C::Mor) -> D::Mor + 'a>,
    pub unit: Box<dyn Fn(&D) -> D::Mor + 'a>,
    pub tensor: Box<dyn Fn(&D, &C::Obj, &C::Obj) -> D::Mor + 'a>,
}

impl<C: SmcModel, D: SmcModel> LaxMonoidalFunctor<C, D> for FnFunctor<'_, C, D> {
    fn map_obj(&self, a: &C::Obj) -> D::Obj {
        (self.obj)(a)
    }
    fn map_mor(&self, f: &C::Mor) -> D::Mor {
        (self.mor)(f)
    }
    fn unit_comparison(&self) -> D::Mor {
        (self.unit)(self.target)
    }
    fn tensor_comparison(&self, a: &C::Obj, b: &C::Obj) -> D::Mor {
        (self.tensor)(self.target, a, b)
    }
}

/// The identity functor on `m` as an [`FnFunctor`], with identity
/// comparisons.
pub fn identity_functor<M: SmcModel>(m: &M) -> FnFunctor<'_, M, M> {
    FnFunctor {
        target: m,
        obj: Box::new(|a| a.clone()),
        mor: Box::new(|f| f.clone()),
        unit: Box::new(|d: &M| d.id(&d.unit())),
        tensor: Box::new(|d: &M, a, b| d.id(&d.tensor(a, b))),
    }
}

/// Postcomposition of a family with `F`.
pub fn map_family<C, D, F>(func: &F, x: &[C::Obj]) -> Vec<D::Obj>
where
    C: SmcModel,
    D: SmcModel,
    F: LaxMonoidalFunctor<C, D>,
{
    x.iter().map(|a| func.map_obj(a)).collect()
}

/// Checks the lax unit, associativity and braiding laws of `F` on `objects`,
/// when `D` can compare morphisms.
pub fn check_lax_laws<C, D, F>(func: &F, c: &C, d: &D, objects: &[C::Obj]) -> Result<Vec<String>>
where
    C: SmcModel,
    D: SmcModel,
    F: LaxMonoidalFunctor<C, D>,
{
    let mut out = Vec::new();
    let mut expect = |name: &str, lhs: D::Mor, rhs: D::Mor| {
        if d.mor_eq(&lhs, &rhs) == Some(false) {
            out.push(format!("{name}: {lhs:?} != {rhs:?}"));
        }
    };
    let f = |a: &C::Obj| func.map_obj(a);
    let fm = |m: &C::Mor| func.map_mor(m);
    let mu = |a: &C::Obj, b: &C::Obj| func.tensor_comparison(a, b);
    for a in objects {
        // (ε ⊗ id) ; μ_{I,a} ; F(λ) = λ
        let lhs = d.compose(
            &d.compose(&d.tensor_mor(&func.unit_comparison(), &d.id(&f(a))), &mu(&c.unit(), a))?,
            &fm(&c.left_unitor(a)),
        )?;
        expect("lax left unit", lhs, d.left_unitor(&f(a)));
        let lhs = d.compose(
            &d.compose(&d.tensor_mor(&d.id(&f(a)), &func.unit_comparison()), &mu(a, &c.unit()))?,
            &fm(&c.right_unitor(a)),
        )?;
        expect("lax right unit", lhs, d.right_unitor(&f(a)));
        for b in objects {
            let lhs = d.compose(&mu(a, b), &fm(&c.braiding(a, b)))?;
            let rhs = d.compose(&d.braiding(&f(a), &f(b)), &mu(b, a))?;
            expect("lax braiding", lhs, rhs);
            for e in objects {
                let lhs = d.compose(
                    &d.compose(&d.tensor_mor(&mu(a, b), &d.id(&f(e))), &mu(&c.tensor(a, b), e))?,
                    &fm(&c.associator(a, b, e)),
                )?;
                let rhs = d.compose(
                    &d.compose(&d.associator(&f(a), &f(b), &f(e)), &d.tensor_mor(&d.id(&f(a)), &mu(b, e)))?,
                    &mu(a, &c.tensor(b, e)),
                )?;
                expect("lax associativity", lhs, rhs);
            }
        }
    }
    Ok(out)
}

/// The comparison `Ψ_D(F∘x)(L) → F(Ψ_C(x)(L))`, by recursion on `L`.
fn lax_psi<C, D, F>(func: &F, c: &C, d: &D, x: &[C::Obj], l: &[usize]) -> Result<D::Mor>
where
    C: SmcModel,
    D: SmcModel,
    F: LaxMonoidalFunctor<C, D>,
{
    let Some((&head, rest)) = l.split_first() else {
        return Ok(func.unit_comparison());
    };
    let xc = |i: &usize| x.get(*i).cloned();
    let rest_c = psi_extend(xc, c).obj(&SList::new(rest.to_vec()))?;
    let inner = lax_psi(func, c, d, x, rest)?;
    let step = d.tensor_mor(&d.id(&func.map_obj(&x[head])), &inner);
    d.compose(&step, &func.tensor_comparison(&x[head], &rest_c))
}

/// For `f : J ⇝ K` and `X : K → C`, the component at each `j` of the lax
/// naturality cell `Ψ_D(F∘X)(f(j)) → F(Ψ_C(X)(f(j)))`.
///
/// Fails with `LaxLawViolation` if `D` can detect that `F` breaks a lax law
/// on the values of `X`.
pub fn naturality_cell<C, D, F>(func: &F, c: &C, d: &D, x: &[C::Obj], f: &KHom) -> Result<Vec<D::Mor>>
where
    C: SmcModel,
    D: SmcModel,
    F: LaxMonoidalFunctor<C, D>,
{
    if x.len() != f.dst {
        return Err(Error::BoundaryMismatch(format!("family of size {} for {f:?}", x.len())));
    }
    let mut sample: Vec<C::Obj> = x.to_vec();
    sample.push(c.unit());
    let violations = check_lax_laws(func, c, d, &sample)?;
    if let Some(v) = violations.into_iter().next() {
        return Err(Error::LaxLawViolation(v));
    }
    f.lists.iter().map(|l| lax_psi(func, c, d, x, l.labels())).collect()
}
