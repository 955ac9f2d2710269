//! Finite sets, pullbacks and the bicategory of spans of finite sets.
//!
//! A finite set is its size `n`, with elements `0..n`.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::write_seq;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinFun {
    src: usize,
    dst: usize,
    img: Vec<usize>,
}

impl FinFun {
    pub fn new(dst: usize, img: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = img.iter().find(|&&v| v >= dst) {
            return Err(Error::InvalidFunction(format!("value {bad} outside a target of size {dst}")));
        }
        Ok(FinFun { src: img.len(), dst, img })
    }

    pub(crate) fn new_unchecked(dst: usize, img: Vec<usize>) -> Self {
        debug_assert!(img.iter().all(|&v| v < dst));
        FinFun { src: img.len(), dst, img }
    }

    pub fn identity(n: usize) -> Self {
        FinFun::new_unchecked(n, (0..n).collect())
    }

    pub fn constant(src: usize, dst: usize, value: usize) -> Result<Self> {
        FinFun::new(dst, vec![value; src])
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn images(&self) -> &[usize] {
        &self.img
    }

    pub fn apply(&self, i: usize) -> usize {
        self.img[i]
    }

    /// `self` first, then `g`.
    pub fn then(&self, g: &FinFun) -> Result<FinFun> {
        if self.dst != g.src {
            return Err(Error::TargetMismatch(format!("{self} then {g}")));
        }
        Ok(FinFun::new_unchecked(g.dst, self.img.iter().map(|&i| g.img[i]).collect()))
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.dst];
        self.img.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_bijective(&self) -> bool {
        self.src == self.dst && self.is_injective()
    }

    pub fn inverse(&self) -> Result<FinFun> {
        if !self.is_bijective() {
            return Err(Error::NotInvertible);
        }
        let mut inv = vec![0; self.src];
        for (i, &v) in self.img.iter().enumerate() {
            inv[v] = i;
        }
        Ok(FinFun::new_unchecked(self.src, inv))
    }

    /// Every function `src → dst`, in lexicographic order of images.
    pub fn all(src: usize, dst: usize) -> impl Iterator<Item = FinFun> {
        let total = if src == 0 { 1 } else if dst == 0 { 0 } else { dst.pow(src as u32) };
        (0..total).map(move |mut code| {
            let mut img = vec![0; src];
            for slot in img.iter_mut().rev() {
                *slot = code % dst;
                code /= dst;
            }
            FinFun::new_unchecked(dst, img)
        })
    }
}

impl fmt::Debug for FinFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FinFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}:", self.src, self.dst)?;
        write_seq(f, &self.img)
    }
}

/// The canonical pullback of a cospan `f : A → C ← B : g`: the pairs
/// `(a, b)` with `f(a) = g(b)`, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pullback {
    pairs: Vec<(usize, usize)>,
    p1: FinFun,
    p2: FinFun,
}

impl Pullback {
    pub fn apex(&self) -> usize {
        self.pairs.len()
    }

    pub fn p1(&self) -> &FinFun {
        &self.p1
    }

    pub fn p2(&self) -> &FinFun {
        &self.p2
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn index_of(&self, a: usize, b: usize) -> Option<usize> {
        self.pairs.binary_search(&(a, b)).ok()
    }

    /// The unique map `h` into the apex with `p1 ∘ h = f1` and `p2 ∘ h = f2`.
    pub fn lift(&self, f1: &FinFun, f2: &FinFun) -> Result<FinFun> {
        if f1.src != f2.src || f1.dst != self.p1.dst || f2.dst != self.p2.dst {
            return Err(Error::TargetMismatch(format!("cone legs {f1} and {f2}")));
        }
        let img = f1
            .img
            .iter()
            .zip(&f2.img)
            .map(|(&a, &b)| {
                self.index_of(a, b)
                    .ok_or_else(|| Error::LiftEquationFails(format!("({a}, {b}) is not over a common point")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FinFun::new_unchecked(self.apex(), img))
    }
}

pub fn pullback(f: &FinFun, g: &FinFun) -> Result<Pullback> {
    if f.dst != g.dst {
        return Err(Error::TargetMismatch(format!("cospan {f} and {g}")));
    }
    let pairs: Vec<(usize, usize)> = (0..f.src)
        .flat_map(|a| (0..g.src).filter(move |&b| f.img[a] == g.img[b]).map(move |b| (a, b)))
        .collect();
    let p1 = FinFun::new_unchecked(f.src, pairs.iter().map(|p| p.0).collect());
    let p2 = FinFun::new_unchecked(g.src, pairs.iter().map(|p| p.1).collect());
    Ok(Pullback { pairs, p1, p2 })
}

/// A span `A ← X → B`; `left` and `right` share the apex `X`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Span {
    left: FinFun,
    right: FinFun,
}

impl Span {
    pub fn new(left: FinFun, right: FinFun) -> Result<Self> {
        if left.src != right.src {
            return Err(Error::BoundaryMismatch(format!("legs {left} and {right} have different apices")));
        }
        Ok(Span { left, right })
    }

    pub fn identity(n: usize) -> Self {
        Span { left: FinFun::identity(n), right: FinFun::identity(n) }
    }

    pub fn left(&self) -> &FinFun {
        &self.left
    }

    pub fn right(&self) -> &FinFun {
        &self.right
    }

    pub fn apex(&self) -> usize {
        self.left.src
    }

    pub fn source(&self) -> usize {
        self.left.dst
    }

    pub fn target(&self) -> usize {
        self.right.dst
    }
}

impl fmt::Debug for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Span({} | {})", self.left, self.right)
    }
}

/// `f_! = (A ← A → B)` with legs `id` and `f`.
pub fn lower_shriek(f: &FinFun) -> Span {
    Span { left: FinFun::identity(f.src), right: f.clone() }
}

/// `f^* = (B ← A → A)` with legs `f` and `id`.
pub fn upper_star(f: &FinFun) -> Span {
    Span { left: f.clone(), right: FinFun::identity(f.src) }
}

pub fn transpose_span(s: &Span) -> Span {
    Span { left: s.right.clone(), right: s.left.clone() }
}

/// The composite `s` then `t`, together with its pullback.
#[derive(Clone, Debug)]
pub struct Composite {
    pub span: Span,
    pub pullback: Pullback,
}

impl Composite {
    pub fn lift(&self, f1: &FinFun, f2: &FinFun) -> Result<FinFun> {
        self.pullback.lift(f1, f2)
    }
}

pub fn composite(s: &Span, t: &Span) -> Result<Composite> {
    let pb = pullback(&s.right, &t.left)?;
    let span = Span { left: pb.p1.then(&s.left)?, right: pb.p2.then(&t.right)? };
    Ok(Composite { span, pullback: pb })
}

/// `s` then `t`: the apex is the pullback of `s.right` and `t.left`.
pub fn compose_span(s: &Span, t: &Span) -> Result<Span> {
    Ok(composite(s, t)?.span)
}

/// A morphism of spans; `map` goes between apices and commutes with both
/// legs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanCell {
    src: Span,
    dst: Span,
    map: FinFun,
}

impl SpanCell {
    pub fn new(src: Span, dst: Span, map: FinFun) -> Result<Self> {
        if src.source() != dst.source() || src.target() != dst.target() {
            return Err(Error::BoundaryMismatch(format!("{src:?} and {dst:?} are not parallel")));
        }
        if map.src != src.apex() || map.dst != dst.apex() {
            return Err(Error::BoundaryMismatch(format!("apex map {map} between {src:?} and {dst:?}")));
        }
        if map.then(&dst.left)? != src.left || map.then(&dst.right)? != src.right {
            return Err(Error::LiftEquationFails(format!("{map} does not commute with the legs")));
        }
        Ok(SpanCell { src, dst, map })
    }

    pub fn identity(s: &Span) -> Self {
        SpanCell { src: s.clone(), dst: s.clone(), map: FinFun::identity(s.apex()) }
    }

    pub fn src(&self) -> &Span {
        &self.src
    }

    pub fn dst(&self) -> &Span {
        &self.dst
    }

    pub fn map(&self) -> &FinFun {
        &self.map
    }

    pub fn is_pith(&self) -> bool {
        self.map.is_bijective()
    }
}

/// `c1` then `c2`.
pub fn vertical_compose(c1: &SpanCell, c2: &SpanCell) -> Result<SpanCell> {
    if c1.dst != c2.src {
        return Err(Error::BoundaryMismatch(format!("{:?} vs {:?}", c1.dst, c2.src)));
    }
    Ok(SpanCell { src: c1.src.clone(), dst: c2.dst.clone(), map: c1.map.then(&c2.map)? })
}

/// `c1 : s ⇒ s'` and `c2 : t ⇒ t'` give `s;t ⇒ s';t'`.
pub fn horizontal_compose(c1: &SpanCell, c2: &SpanCell) -> Result<SpanCell> {
    let from = composite(&c1.src, &c2.src)?;
    let to = composite(&c1.dst, &c2.dst)?;
    let map = to.lift(&from.pullback.p1.then(&c1.map)?, &from.pullback.p2.then(&c2.map)?)?;
    Ok(SpanCell { src: from.span, dst: to.span, map })
}

pub fn invert(c: &SpanCell) -> Result<SpanCell> {
    Ok(SpanCell { src: c.dst.clone(), dst: c.src.clone(), map: c.map.inverse()? })
}

/// `(s;t);u ⇒ s;(t;u)`.
pub fn associator(s: &Span, t: &Span, u: &Span) -> Result<SpanCell> {
    let st = composite(s, t)?;
    let st_u = composite(&st.span, u)?;
    let tu = composite(t, u)?;
    let s_tu = composite(s, &tu.span)?;
    let outer1 = &st_u.pullback.p1;
    let to_s = outer1.then(&st.pullback.p1)?;
    let to_t = outer1.then(&st.pullback.p2)?;
    let to_tu = tu.lift(&to_t, &st_u.pullback.p2)?;
    let map = s_tu.lift(&to_s, &to_tu)?;
    Ok(SpanCell { src: st_u.span, dst: s_tu.span, map })
}

/// `id;s ⇒ s`.
pub fn left_unitor(s: &Span) -> Result<SpanCell> {
    let c = composite(&Span::identity(s.source()), s)?;
    Ok(SpanCell { src: c.span, dst: s.clone(), map: c.pullback.p2 })
}

/// `s;id ⇒ s`.
pub fn right_unitor(s: &Span) -> Result<SpanCell> {
    let c = composite(s, &Span::identity(s.target()))?;
    Ok(SpanCell { src: c.span, dst: s.clone(), map: c.pullback.p1 })
}

#[derive(Clone, Debug)]
pub struct StructuralCells {
    pub assoc: SpanCell,
    pub lunitor: SpanCell,
    pub runitor: SpanCell,
}

/// The associator at `(s, t, u)` and both unitors at `s`.
pub fn structural_cells(s: &Span, t: &Span, u: &Span) -> Result<StructuralCells> {
    Ok(StructuralCells { assoc: associator(s, t, u)?, lunitor: left_unitor(s)?, runitor: right_unitor(s)? })
}

#[derive(Clone, Debug)]
pub struct AdjunctionCells {
    /// `id_A ⇒ f_!;f^*`, the diagonal.
    pub unit: SpanCell,
    /// `f^*;f_! ⇒ id_B`, the common value.
    pub counit: SpanCell,
}

pub fn adjunction_cells(f: &FinFun) -> Result<AdjunctionCells> {
    let (shriek, star) = (lower_shriek(f), upper_star(f));
    let up = composite(&shriek, &star)?;
    let id = FinFun::identity(f.src);
    let unit = SpanCell { src: Span::identity(f.src), dst: up.span.clone(), map: up.lift(&id, &id)? };
    let down = composite(&star, &shriek)?;
    let counit = SpanCell { src: down.span.clone(), dst: Span::identity(f.dst), map: down.span.left.clone() };
    Ok(AdjunctionCells { unit, counit })
}

/// The triangle composites `f_! ⇒ f_!` and `f^* ⇒ f^*`, pasted from the
/// unit, counit and structural cells. Both are identities.
pub fn adjunction_triangles(f: &FinFun) -> Result<(SpanCell, SpanCell)> {
    let AdjunctionCells { unit, counit } = adjunction_cells(f)?;
    let (shriek, star) = (lower_shriek(f), upper_star(f));
    let first = [
        invert(&left_unitor(&shriek)?)?,
        horizontal_compose(&unit, &SpanCell::identity(&shriek))?,
        associator(&shriek, &star, &shriek)?,
        horizontal_compose(&SpanCell::identity(&shriek), &counit)?,
        right_unitor(&shriek)?,
    ];
    let second = [
        invert(&right_unitor(&star)?)?,
        horizontal_compose(&SpanCell::identity(&star), &unit)?,
        invert(&associator(&star, &shriek, &star)?)?,
        horizontal_compose(&counit, &SpanCell::identity(&star))?,
        left_unitor(&star)?,
    ];
    Ok((paste(&first)?, paste(&second)?))
}

/// Vertical composite of a non-empty sequence.
pub fn paste(cells: &[SpanCell]) -> Result<SpanCell> {
    let (first, rest) = cells.split_first().ok_or_else(|| Error::BoundaryMismatch("empty pasting".into()))?;
    rest.iter().try_fold(first.clone(), |acc, c| vertical_compose(&acc, c))
}

/// A commuting square `b ∘ l = r ∘ t` with `t : c₀ → c₁`, `l : c₀ → c₂`,
/// `r : c₁ → c₃`, `b : c₂ → c₃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Square {
    pub top: FinFun,
    pub left: FinFun,
    pub right: FinFun,
    pub bottom: FinFun,
}

impl Square {
    pub fn new(top: FinFun, left: FinFun, right: FinFun, bottom: FinFun) -> Result<Self> {
        let sq = Square { top, left, right, bottom };
        if sq.top.src != sq.left.src
            || sq.top.dst != sq.right.src
            || sq.left.dst != sq.bottom.src
            || sq.right.dst != sq.bottom.dst
        {
            return Err(Error::BoundaryMismatch(format!("{sq:?} is not a square")));
        }
        Ok(sq)
    }

    pub fn commutes(&self) -> bool {
        self.left.then(&self.bottom).ok() == self.top.then(&self.right).ok()
    }

    /// The comparison `c₀ → pullback(b, r)`, `z ↦ (l z, t z)`.
    pub fn comparison(&self) -> Result<FinFun> {
        if !self.commutes() {
            return Err(Error::NotPullbackSquare("square does not commute".into()));
        }
        pullback(&self.bottom, &self.right)?.lift(&self.left, &self.top)
    }

    pub fn is_pullback(&self) -> bool {
        self.comparison().is_ok_and(|c| c.is_bijective())
    }
}

/// `b_!;r^* ⇒ l^*;t_!` for a pullback square.
pub fn base_change_1cell(sq: &Square) -> Result<SpanCell> {
    let cmp = sq.comparison()?;
    let inv = cmp.inverse().map_err(|_| Error::NotPullbackSquare(format!("comparison {cmp} is not bijective")))?;
    let from = composite(&lower_shriek(&sq.bottom), &upper_star(&sq.right))?;
    let to = composite(&upper_star(&sq.left), &lower_shriek(&sq.top))?;
    let map = inv.then(&to.lift(&FinFun::identity(inv.dst), &FinFun::identity(inv.dst))?)?;
    SpanCell::new(from.span, to.span, map)
}
