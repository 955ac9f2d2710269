//! Pith-Beck-Chevalley systems valued in the Kleisli bicategory and the
//! pseudofunctor they induce on the pith of spans.
//!
//! Orientation: the target is the opposite of the Kleisli bicategory. For
//! `f : J → K`, `u(f) : K ⇝ J` and `v(f) : J ⇝ K`, and a juxtaposition
//! `XY` of 1-cells in the opposite bicategory is `k_compose(X, Y)`. With
//! that reading:
//!
//! - `u_comp(f, g) : u(g∘f) ⇒ u(g);u(f)` and `v_comp(f, g) : v(g∘f) ⇒ v(f);v(g)`
//! - `base_change(t, l, r, b) : v(b);u(r) ⇒ u(l);v(t)`
//! - `F(J ←f S →g K) = u(g);v(f)` and `F_comp(s, t) : F(s;t) ⇒ F(t);F(s)`
//!
//! Associators and unitors of the target are identities.

use crate::error::{Error, Result};
use crate::finspan::{self, FinFun, Span, SpanCell, Square};
use crate::kleisli::{k_compose, k_hcomp, k_id, k_vcomp, KCell, KHom};
use crate::slist::{unique_hom_linear, SList, SListHom};

pub trait PbcSystem {
    fn u(&self, f: &FinFun) -> KHom;
    fn v(&self, f: &FinFun) -> KHom;
    /// `u(g∘f) ⇒ u(g);u(f)` for `f` then `g`.
    fn u_comp(&self, f: &FinFun, g: &FinFun) -> Result<KCell>;
    /// `v(g∘f) ⇒ v(f);v(g)` for `f` then `g`.
    fn v_comp(&self, f: &FinFun, g: &FinFun) -> Result<KCell>;
    fn u_id(&self, n: usize) -> KCell;
    fn v_id(&self, n: usize) -> KCell;
    /// `v(b);u(r) ⇒ u(l);v(t)` for a pullback square.
    fn base_change(&self, sq: &Square) -> Result<KCell>;
}

/// The system whose `u` sends a function to its ascending fibers and `v`
/// to its singleton graph. Every structure cell is the unique morphism
/// between linear lists.
#[derive(Clone, Copy, Debug, Default)]
pub struct LambdaSystem;

pub fn lambda_system() -> LambdaSystem {
    LambdaSystem
}

fn unique_cell(src: KHom, dst: KHom) -> Result<KCell> {
    let homs = src
        .lists()
        .iter()
        .zip(dst.lists())
        .map(|(a, b)| unique_hom_linear(a, b))
        .collect::<Result<Vec<SListHom<usize>>>>()?;
    KCell::new(src, dst, homs)
}

fn composable(f: &FinFun, g: &FinFun) -> Result<()> {
    if f.dst() != g.src() {
        return Err(Error::TargetMismatch(format!("{f} then {g}")));
    }
    Ok(())
}

impl PbcSystem for LambdaSystem {
    fn u(&self, f: &FinFun) -> KHom {
        let mut fibers = vec![Vec::new(); f.dst()];
        for (a, &k) in f.images().iter().enumerate() {
            fibers[k].push(a);
        }
        KHom::new(f.src(), fibers.into_iter().map(SList::new).collect()).expect("fibers lie in the source")
    }

    fn v(&self, f: &FinFun) -> KHom {
        KHom::new(f.dst(), f.images().iter().map(|&k| SList::singleton(k)).collect()).expect("images lie in the target")
    }

    fn u_comp(&self, f: &FinFun, g: &FinFun) -> Result<KCell> {
        composable(f, g)?;
        unique_cell(self.u(&f.then(g)?), k_compose(&self.u(g), &self.u(f))?)
    }

    fn v_comp(&self, f: &FinFun, g: &FinFun) -> Result<KCell> {
        composable(f, g)?;
        unique_cell(self.v(&f.then(g)?), k_compose(&self.v(f), &self.v(g))?)
    }

    fn u_id(&self, n: usize) -> KCell {
        unique_cell(self.u(&FinFun::identity(n)), k_id(n)).expect("singletons")
    }

    fn v_id(&self, n: usize) -> KCell {
        unique_cell(self.v(&FinFun::identity(n)), k_id(n)).expect("singletons")
    }

    fn base_change(&self, sq: &Square) -> Result<KCell> {
        base_change_unique(sq)
    }
}

/// The base-change cell of the fiber system, computed componentwise as the
/// unique morphism between linear lists.
pub fn base_change_unique(sq: &Square) -> Result<KCell> {
    if !sq.is_pullback() {
        return Err(Error::NotPullbackSquare(format!("{sq:?}")));
    }
    let sys = LambdaSystem;
    let src = k_compose(&sys.v(&sq.bottom), &sys.u(&sq.right))?;
    let dst = k_compose(&sys.u(&sq.left), &sys.v(&sq.top))?;
    unique_cell(src, dst)
}

/// Squares `l` and `r` side by side, sharing the middle vertical edge.
pub fn paste_horizontal(l: &Square, r: &Square) -> Result<Square> {
    if l.right != r.left {
        return Err(Error::BoundaryMismatch(format!("{:?} vs {:?}", l.right, r.left)));
    }
    Square::new(l.top.then(&r.top)?, l.left.clone(), r.right.clone(), l.bottom.then(&r.bottom)?)
}

pub fn paste_vertical(t: &Square, b: &Square) -> Result<Square> {
    if t.bottom != b.top {
        return Err(Error::BoundaryMismatch(format!("{:?} vs {:?}", t.bottom, b.top)));
    }
    Square::new(t.top.clone(), t.left.then(&b.left)?, t.right.then(&b.right)?, b.bottom.clone())
}

fn chain(cells: &[KCell]) -> Result<KCell> {
    let (first, rest) = cells.split_first().ok_or_else(|| Error::BoundaryMismatch("empty pasting".into()))?;
    rest.iter().try_fold(first.clone(), |acc, c| k_vcomp(&acc, c))
}

/// Both sides of a law, as cells that must coincide.
pub type LawSides = (KCell, KCell);

/// Squares `L` (left) and `R` (right) pasted side by side.
pub fn horizontal_pasting_law<S: PbcSystem>(sys: &S, l: &Square, r: &Square) -> Result<LawSides> {
    let h = paste_horizontal(l, r)?;
    let lhs = k_vcomp(
        &sys.base_change(&h)?,
        &k_hcomp(&KCell::identity(&sys.u(&l.left)), &sys.v_comp(&l.top, &r.top)?)?,
    )?;
    let rhs = chain(&[
        k_hcomp(&sys.v_comp(&l.bottom, &r.bottom)?, &KCell::identity(&sys.u(&r.right)))?,
        k_hcomp(&KCell::identity(&sys.v(&l.bottom)), &sys.base_change(r)?)?,
        k_hcomp(&sys.base_change(l)?, &KCell::identity(&sys.v(&r.top)))?,
    ])?;
    Ok((lhs, rhs))
}

/// Squares `T` (top) and `B` (bottom) pasted vertically.
pub fn vertical_pasting_law<S: PbcSystem>(sys: &S, t: &Square, b: &Square) -> Result<LawSides> {
    let v = paste_vertical(t, b)?;
    let lhs = k_vcomp(
        &sys.base_change(&v)?,
        &k_hcomp(&sys.u_comp(&t.left, &b.left)?, &KCell::identity(&sys.v(&t.top)))?,
    )?;
    let rhs = chain(&[
        k_hcomp(&KCell::identity(&sys.v(&b.bottom)), &sys.u_comp(&t.right, &b.right)?)?,
        k_hcomp(&sys.base_change(b)?, &KCell::identity(&sys.u(&t.right)))?,
        k_hcomp(&KCell::identity(&sys.u(&b.left)), &sys.base_change(t)?)?,
    ])?;
    Ok((lhs, rhs))
}

/// The square `(id, f, f, id)`.
pub fn horizontal_unit_law<S: PbcSystem>(sys: &S, f: &FinFun) -> Result<LawSides> {
    let (x, y) = (f.src(), f.dst());
    let sq = Square::new(FinFun::identity(x), f.clone(), f.clone(), FinFun::identity(y))?;
    let uf = KCell::identity(&sys.u(f));
    let lhs = k_vcomp(&sys.base_change(&sq)?, &k_hcomp(&uf, &sys.v_id(x))?)?;
    let rhs = k_hcomp(&sys.v_id(y), &uf)?;
    Ok((lhs, rhs))
}

/// The square `(f, id, id, f)`.
pub fn vertical_unit_law<S: PbcSystem>(sys: &S, f: &FinFun) -> Result<LawSides> {
    let (x, y) = (f.src(), f.dst());
    let sq = Square::new(f.clone(), FinFun::identity(x), FinFun::identity(y), f.clone())?;
    let vf = KCell::identity(&sys.v(f));
    let lhs = k_vcomp(&sys.base_change(&sq)?, &k_hcomp(&sys.u_id(x), &vf)?)?;
    let rhs = k_hcomp(&vf, &sys.u_id(y))?;
    Ok((lhs, rhs))
}

/// Associativity of `u_comp` for `f` then `g` then `h`.
pub fn u_assoc_law<S: PbcSystem>(sys: &S, f: &FinFun, g: &FinFun, h: &FinFun) -> Result<LawSides> {
    let gf = f.then(g)?;
    let hg = g.then(h)?;
    let lhs = k_vcomp(&sys.u_comp(&gf, h)?, &k_hcomp(&KCell::identity(&sys.u(h)), &sys.u_comp(f, g)?)?)?;
    let rhs = k_vcomp(&sys.u_comp(f, &hg)?, &k_hcomp(&sys.u_comp(g, h)?, &KCell::identity(&sys.u(f)))?)?;
    Ok((lhs, rhs))
}

pub fn v_assoc_law<S: PbcSystem>(sys: &S, f: &FinFun, g: &FinFun, h: &FinFun) -> Result<LawSides> {
    let gf = f.then(g)?;
    let hg = g.then(h)?;
    let lhs = k_vcomp(&sys.v_comp(&gf, h)?, &k_hcomp(&sys.v_comp(f, g)?, &KCell::identity(&sys.v(h)))?)?;
    let rhs = k_vcomp(&sys.v_comp(f, &hg)?, &k_hcomp(&KCell::identity(&sys.v(f)), &sys.v_comp(g, h)?)?)?;
    Ok((lhs, rhs))
}

/// Both unit laws of `u` at `f`, each compared against the identity.
pub fn u_unit_laws<S: PbcSystem>(sys: &S, f: &FinFun) -> Result<[LawSides; 2]> {
    let uf = sys.u(f);
    let id = KCell::identity(&uf);
    let left = k_vcomp(&sys.u_comp(f, &FinFun::identity(f.dst()))?, &k_hcomp(&sys.u_id(f.dst()), &id)?)?;
    let right = k_vcomp(&sys.u_comp(&FinFun::identity(f.src()), f)?, &k_hcomp(&id, &sys.u_id(f.src()))?)?;
    Ok([(left, id.clone()), (right, id)])
}

pub fn v_unit_laws<S: PbcSystem>(sys: &S, f: &FinFun) -> Result<[LawSides; 2]> {
    let vf = sys.v(f);
    let id = KCell::identity(&vf);
    let left = k_vcomp(&sys.v_comp(f, &FinFun::identity(f.dst()))?, &k_hcomp(&id, &sys.v_id(f.dst()))?)?;
    let right = k_vcomp(&sys.v_comp(&FinFun::identity(f.src()), f)?, &k_hcomp(&sys.v_id(f.src()), &id)?)?;
    Ok([(left, id.clone()), (right, id)])
}

/// Tally of law instances.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LawReport {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl LawReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records one instance; errors count as violations.
    pub fn record(&mut self, name: &str, outcome: Result<bool>) {
        self.checked += 1;
        match outcome {
            Ok(true) => {}
            Ok(false) => self.violations.push(format!("{name}: sides differ")),
            Err(e) => self.violations.push(format!("{name}: {e}")),
        }
    }

    pub fn record_sides(&mut self, name: &str, sides: Result<LawSides>) {
        self.record(name, sides.map(|(a, b)| a == b));
    }

    pub fn merge(&mut self, other: LawReport) {
        self.checked += other.checked;
        self.violations.extend(other.violations);
    }
}

/// `F(s) = u(g);v(f)` for `s = (J ←f S →g K)`.
pub fn pseudofunctor_on_span<S: PbcSystem>(sys: &S, s: &Span) -> Result<KHom> {
    k_compose(&sys.u(s.right()), &sys.v(s.left()))
}

/// `η(φ) : u(φ);v(φ) ⇒ id` for a bijection `φ`.
pub fn eta<S: PbcSystem>(sys: &S, phi: &FinFun) -> Result<KCell> {
    if !phi.is_bijective() {
        return Err(Error::NotInvertible);
    }
    let y = phi.dst();
    let sq = Square::new(phi.clone(), phi.clone(), FinFun::identity(y), FinFun::identity(y))?;
    k_vcomp(&sys.base_change(&sq)?.inverse(), &k_hcomp(&sys.v_id(y), &sys.u_id(y))?)
}

/// `F(c) : F(s) ⇒ F(s')` for a pith cell `c : s ⇒ s'`.
pub fn pseudofunctor_on_cell<S: PbcSystem>(sys: &S, c: &SpanCell) -> Result<KCell> {
    let phi = c.map();
    if !phi.is_bijective() {
        return Err(Error::NotInvertible);
    }
    let (f2, g2) = (c.dst().left(), c.dst().right());
    let split = k_hcomp(&sys.u_comp(phi, g2)?, &sys.v_comp(phi, f2)?)?;
    let collapse = k_hcomp(
        &KCell::identity(&sys.u(g2)),
        &k_hcomp(&eta(sys, phi)?, &KCell::identity(&sys.v(f2)))?,
    )?;
    k_vcomp(&split, &collapse)
}

/// `F_comp(s, t) : F(s;t) ⇒ F(t);F(s)`.
pub fn pseudofunctor_comp<S: PbcSystem>(sys: &S, s: &Span, t: &Span) -> Result<KCell> {
    let c = finspan::composite(s, t)?;
    let (p1, p2) = (c.pullback.p1(), c.pullback.p2());
    let split = k_hcomp(&sys.u_comp(p2, t.right())?, &sys.v_comp(p1, s.left())?)?;
    // Cs: top π1, left π2, right g, bottom h
    let cs = Square::new(p1.clone(), p2.clone(), s.right().clone(), t.left().clone())?;
    let swap = k_hcomp(
        &KCell::identity(&sys.u(t.right())),
        &k_hcomp(&sys.base_change(&cs)?.inverse(), &KCell::identity(&sys.v(s.left())))?,
    )?;
    k_vcomp(&split, &swap)
}

/// `F_id(n) : F(id_n) ⇒ id`.
pub fn pseudofunctor_id<S: PbcSystem>(sys: &S, n: usize) -> Result<KCell> {
    k_hcomp(&sys.u_id(n), &sys.v_id(n))
}

/// Relabelings of the apex of `s`: the cell `s ⇒ s^σ` for every
/// permutation `σ` of the apex.
pub fn apex_relabelings(s: &Span) -> Vec<SpanCell> {
    crate::perm::Perm::all(s.apex())
        .map(|p| {
            let sigma = FinFun::new(s.apex(), p.images().to_vec()).expect("permutation");
            let inv = sigma.inverse().expect("permutation");
            let dst = Span::new(inv.then(s.left()).expect("apex"), inv.then(s.right()).expect("apex")).expect("apex");
            SpanCell::new(s.clone(), dst, sigma).expect("relabeling commutes")
        })
        .collect()
}

pub fn cell_functoriality_law<S: PbcSystem>(sys: &S, a: &SpanCell, b: &SpanCell) -> Result<LawSides> {
    let lhs = pseudofunctor_on_cell(sys, &finspan::vertical_compose(a, b)?)?;
    let rhs = k_vcomp(&pseudofunctor_on_cell(sys, a)?, &pseudofunctor_on_cell(sys, b)?)?;
    Ok((lhs, rhs))
}

/// `F(φ ∘ₕ ψ) ; F_comp(s', t') = F_comp(s, t) ; (F ψ · F φ)`.
pub fn comp_naturality_law<S: PbcSystem>(sys: &S, phi: &SpanCell, psi: &SpanCell) -> Result<LawSides> {
    let lhs = k_vcomp(
        &pseudofunctor_on_cell(sys, &finspan::horizontal_compose(phi, psi)?)?,
        &pseudofunctor_comp(sys, phi.dst(), psi.dst())?,
    )?;
    let rhs = k_vcomp(
        &pseudofunctor_comp(sys, phi.src(), psi.src())?,
        &k_hcomp(&pseudofunctor_on_cell(sys, psi)?, &pseudofunctor_on_cell(sys, phi)?)?,
    )?;
    Ok((lhs, rhs))
}

pub fn comp_associativity_law<S: PbcSystem>(sys: &S, s: &Span, t: &Span, w: &Span) -> Result<LawSides> {
    let st = finspan::compose_span(s, t)?;
    let tw = finspan::compose_span(t, w)?;
    let lhs = k_vcomp(
        &pseudofunctor_comp(sys, &st, w)?,
        &k_hcomp(&KCell::identity(&pseudofunctor_on_span(sys, w)?), &pseudofunctor_comp(sys, s, t)?)?,
    )?;
    let rhs = chain(&[
        pseudofunctor_on_cell(sys, &finspan::associator(s, t, w)?)?,
        pseudofunctor_comp(sys, s, &tw)?,
        k_hcomp(&pseudofunctor_comp(sys, t, w)?, &KCell::identity(&pseudofunctor_on_span(sys, s)?))?,
    ])?;
    Ok((lhs, rhs))
}

/// Right and left unit laws at `s`.
pub fn comp_unit_laws<S: PbcSystem>(sys: &S, s: &Span) -> Result<[LawSides; 2]> {
    let fs = KCell::identity(&pseudofunctor_on_span(sys, s)?);
    let right = k_vcomp(
        &pseudofunctor_comp(sys, s, &Span::identity(s.target()))?,
        &k_hcomp(&pseudofunctor_id(sys, s.target())?, &fs)?,
    )?;
    let left = k_vcomp(
        &pseudofunctor_comp(sys, &Span::identity(s.source()), s)?,
        &k_hcomp(&fs, &pseudofunctor_id(sys, s.source())?)?,
    )?;
    Ok([
        (right, pseudofunctor_on_cell(sys, &finspan::right_unitor(s)?)?),
        (left, pseudofunctor_on_cell(sys, &finspan::left_unitor(s)?)?),
    ])
}

/// Every pseudofunctor law over `spans`: cell functoriality and the unit
/// laws at each span, naturality of `F_comp` over apex relabelings of
/// composable pairs, and associativity over composable triples.
pub fn pseudofunctor_laws<S: PbcSystem>(sys: &S, spans: &[Span]) -> LawReport {
    let mut report = LawReport::new();
    for s in spans {
        let cells = apex_relabelings(s);
        report.record("identity cell", pseudofunctor_on_cell(sys, &SpanCell::identity(s)).map(|c| c.is_identity()));
        for a in &cells {
            for b in apex_relabelings(a.dst()) {
                report.record_sides("cell functoriality", cell_functoriality_law(sys, a, &b));
            }
        }
        match comp_unit_laws(sys, s) {
            Ok([r, l]) => {
                report.record("right unit", Ok(r.0 == r.1));
                report.record("left unit", Ok(l.0 == l.1));
            }
            Err(e) => report.record("unit", Err(e)),
        }
    }
    for s in spans {
        for t in spans.iter().filter(|t| t.source() == s.target()) {
            for phi in apex_relabelings(s) {
                for psi in apex_relabelings(t) {
                    report.record_sides("composition naturality", comp_naturality_law(sys, &phi, &psi));
                }
            }
            for w in spans.iter().filter(|w| w.source() == t.target()) {
                report.record_sides("associativity", comp_associativity_law(sys, s, t, w));
            }
        }
    }
    report
}

/// Linearity of every list produced by `u`, `v` and base change on `sq`.
pub fn lists_are_linear<S: PbcSystem>(sys: &S, sq: &Square) -> Result<bool> {
    let bc = sys.base_change(sq)?;
    let fams = [
        sys.u(&sq.top),
        sys.u(&sq.left),
        sys.u(&sq.right),
        sys.u(&sq.bottom),
        sys.v(&sq.top),
        sys.v(&sq.left),
        sys.v(&sq.right),
        sys.v(&sq.bottom),
        bc.src().clone(),
        bc.dst().clone(),
    ];
    Ok(fams.iter().all(|f| f.lists().iter().all(SList::is_linear)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finspan::{lower_shriek, transpose_span, pullback};

    fn ff(dst: usize, img: &[usize]) -> FinFun {
        FinFun::new(dst, img.to_vec()).unwrap()
    }

    fn kh(dst: usize, lists: &[&[usize]]) -> KHom {
        KHom::from_vecs(dst, lists.iter().map(|l| l.to_vec()).collect()).unwrap()
    }

    /// The canonical pullback square over the cospan `(b, r)`.
    fn square_over(b: &FinFun, r: &FinFun) -> Square {
        let pb = pullback(b, r).unwrap();
        Square::new(pb.p2().clone(), pb.p1().clone(), r.clone(), b.clone()).unwrap()
    }

    #[test]
    fn lambda_examples() {
        let sys = lambda_system();
        let id = FinFun::identity(3);
        assert_eq!(sys.u(&id), k_id(3));
        assert_eq!(sys.v(&id), k_id(3));
        let f = ff(2, &[0, 0, 1]);
        assert_eq!(sys.u(&f), kh(3, &[&[0, 1], &[2]]));
        assert!(sys.v(&f).lists().iter().all(|l| l.len() == 1));
    }

    #[test]
    fn base_change_examples() {
        let sys = lambda_system();
        let id = FinFun::identity(2);
        let sq = Square::new(id.clone(), id.clone(), id.clone(), id.clone()).unwrap();
        assert!(sys.base_change(&sq).unwrap().is_identity());
        // f : 2 → 1 on both sides of the cospan; the pullback has 4 elements
        let f = ff(1, &[0, 0]);
        let sq = square_over(&f, &f);
        let bc = base_change_unique(&sq).unwrap();
        assert_eq!(bc.src().list(0).len(), 2);
        assert_eq!(bc.src(), &kh(2, &[&[0, 1], &[0, 1]]));
        assert!(matches!(
            base_change_unique(&Square::new(ff(1, &[0, 0]), ff(1, &[0, 0]), ff(1, &[0]), ff(1, &[0])).unwrap()),
            Err(Error::NotPullbackSquare(_))
        ));
        let (lhs, rhs) = vertical_unit_law(&sys, &ff(2, &[1, 0, 1])).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pbc_laws_small() {
        let sys = lambda_system();
        let funs: Vec<FinFun> = (0..=2).flat_map(|a| (1..=2).flat_map(move |b| FinFun::all(a, b))).collect();
        for f in &funs {
            let (l, r) = horizontal_unit_law(&sys, f).unwrap();
            assert_eq!(l, r);
            let (l, r) = vertical_unit_law(&sys, f).unwrap();
            assert_eq!(l, r);
            for [ (a, b), (c, d) ] in [u_unit_laws(&sys, f).unwrap(), v_unit_laws(&sys, f).unwrap()] {
                assert_eq!(a, b);
                assert_eq!(c, d);
            }
        }
        for b0 in &funs {
            for b1 in funs.iter().filter(|g| g.src() == b0.dst()) {
                for v2 in funs.iter().filter(|g| g.dst() == b1.dst()) {
                    let r = square_over(b1, v2);
                    let l = square_over(b0, &r.left);
                    let (x, y) = horizontal_pasting_law(&sys, &l, &r).unwrap();
                    assert_eq!(x, y);
                    let (x, y) = u_assoc_law(&sys, b0, b1, &FinFun::identity(b1.dst())).unwrap();
                    assert_eq!(x, y);
                    let (x, y) = v_assoc_law(&sys, &l.left, b0, b1).unwrap();
                    assert_eq!(x, y);
                    // the same cospans stacked vertically
                    let bottom = square_over(v2, b1);
                    let top = square_over(&bottom.top, b0);
                    let (x, y) = vertical_pasting_law(&sys, &top, &bottom).unwrap();
                    assert_eq!(x, y);
                }
            }
        }
    }

    #[test]
    fn pseudofunctor_on_span_examples() {
        let sys = lambda_system();
        assert_eq!(pseudofunctor_on_span(&sys, &Span::identity(3)).unwrap(), k_id(3));
        let s = Span::new(ff(2, &[0, 1, 0]), ff(2, &[0, 0, 1])).unwrap();
        assert_eq!(pseudofunctor_on_span(&sys, &s).unwrap(), kh(2, &[&[0, 1], &[0]]));
        let empty = Span::new(ff(2, &[]), ff(3, &[])).unwrap();
        assert_eq!(pseudofunctor_on_span(&sys, &empty).unwrap(), kh(2, &[&[], &[], &[]]));
        let f = ff(2, &[1, 1, 0]);
        assert_eq!(pseudofunctor_on_span(&sys, &transpose_span(&lower_shriek(&f))).unwrap(), sys.v(&f));
    }

    #[test]
    fn pseudofunctor_on_cell_examples() {
        let sys = lambda_system();
        let s = Span::new(ff(1, &[0, 0]), ff(1, &[0, 0])).unwrap();
        assert!(pseudofunctor_on_cell(&sys, &SpanCell::identity(&s)).unwrap().is_identity());
        let swap = SpanCell::new(s.clone(), s.clone(), ff(2, &[1, 0])).unwrap();
        let c = pseudofunctor_on_cell(&sys, &swap).unwrap();
        assert_eq!(c.homs()[0].phi().images(), &[1, 0]);
        let round = k_vcomp(&c, &pseudofunctor_on_cell(&sys, &finspan::invert(&swap).unwrap()).unwrap()).unwrap();
        assert!(round.is_identity());
        let collapse = SpanCell::new(s.clone(), Span::identity(1), ff(1, &[0, 0])).unwrap();
        assert_eq!(pseudofunctor_on_cell(&sys, &collapse), Err(Error::NotInvertible));
    }

    #[test]
    fn pseudofunctor_laws_small() {
        let sys = lambda_system();
        let spans: Vec<Span> = (0..=2)
            .flat_map(|x| FinFun::all(x, 2).flat_map(move |l| FinFun::all(x, 2).map(move |r| Span::new(l.clone(), r).unwrap())))
            .collect();
        let report = pseudofunctor_laws(&sys, &spans);
        assert!(report.is_ok(), "{:?}", &report.violations[..report.violations.len().min(5)]);
        assert!(report.checked > 1000);
        let single = pseudofunctor_laws(&sys, &[Span::identity(1)]);
        assert!(single.is_ok());
    }

    #[test]
    fn comp_cell_boundaries() {
        let sys = lambda_system();
        let s = Span::new(ff(2, &[0, 1, 1]), ff(2, &[0, 0, 1])).unwrap();
        let t = Span::new(ff(2, &[0, 1]), ff(1, &[0, 0])).unwrap();
        let c = pseudofunctor_comp(&sys, &s, &t).unwrap();
        assert_eq!(c.src(), &pseudofunctor_on_span(&sys, &finspan::compose_span(&s, &t).unwrap()).unwrap());
        assert_eq!(
            c.dst(),
            &k_compose(&pseudofunctor_on_span(&sys, &t).unwrap(), &pseudofunctor_on_span(&sys, &s).unwrap()).unwrap()
        );
        assert!(pseudofunctor_id(&sys, 3).unwrap().is_identity());
    }
}
