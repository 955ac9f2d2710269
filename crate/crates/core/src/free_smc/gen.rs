//! Random terms and instances of the symmetric monoidal axioms.

use rand::Rng;

use crate::slist::Label;

use super::term::{MorTerm, ObjTerm};

/// A random bracketing of `leaves`, with units sprinkled in.
pub fn random_obj<L: Label, R: Rng + ?Sized>(rng: &mut R, leaves: &[L]) -> ObjTerm<L> {
    match leaves.len() {
        0 => ObjTerm::Unit,
        1 if rng.gen_bool(0.8) => ObjTerm::Gen(leaves[0].clone()),
        _ => {
            let cut = rng.gen_range(0..=leaves.len());
            let (a, b) = leaves.split_at(cut);
            if a.is_empty() && b.len() == 1 && rng.gen_bool(0.5) {
                return ObjTerm::Gen(b[0].clone());
            }
            ObjTerm::tensor(random_obj(rng, a), random_obj(rng, b))
        }
    }
}

/// A random well-typed structural morphism out of `src`.
pub fn random_mor<L: Label, R: Rng + ?Sized>(rng: &mut R, src: &ObjTerm<L>, depth: usize) -> MorTerm<L> {
    if depth == 0 {
        return MorTerm::Id(src.clone());
    }
    let mut options: Vec<MorTerm<L>> = vec![MorTerm::Id(src.clone())];
    if let ObjTerm::Tensor(a, b) = src {
        let (a, b) = (a.as_ref(), b.as_ref());
        options.push(MorTerm::tensor(random_mor(rng, a, depth - 1), random_mor(rng, b, depth - 1)));
        options.push(MorTerm::Braid(a.clone(), b.clone()));
        if let ObjTerm::Tensor(x, y) = a {
            options.push(MorTerm::Assoc((**x).clone(), (**y).clone(), b.clone()));
        }
        if let ObjTerm::Tensor(y, z) = b {
            options.push(MorTerm::inv(MorTerm::Assoc(a.clone(), (**y).clone(), (**z).clone())));
        }
        if *a == ObjTerm::Unit {
            options.push(MorTerm::LeftUnitor(b.clone()));
        }
        if *b == ObjTerm::Unit {
            options.push(MorTerm::RightUnitor(a.clone()));
        }
    }
    if rng.gen_bool(0.15) {
        options.push(MorTerm::inv(MorTerm::RightUnitor(src.clone())));
        options.push(MorTerm::inv(MorTerm::LeftUnitor(src.clone())));
    }
    let first = options.swap_remove(rng.gen_range(0..options.len()));
    if rng.gen_bool(0.5) {
        let mid = first.target().expect("generated terms are well typed");
        MorTerm::comp(first, random_mor(rng, &mid, depth - 1))
    } else {
        first
    }
}

/// A named equation between two parallel terms.
#[derive(Clone, Debug)]
pub struct AxiomInstance<L> {
    pub name: &'static str,
    pub lhs: MorTerm<L>,
    pub rhs: MorTerm<L>,
}

fn inst<L>(name: &'static str, lhs: MorTerm<L>, rhs: MorTerm<L>) -> AxiomInstance<L> {
    AxiomInstance { name, lhs, rhs }
}

fn seq<L: Label>(parts: impl IntoIterator<Item = MorTerm<L>>) -> MorTerm<L> {
    MorTerm::comp_all(parts).expect("non-empty composite")
}

/// Coherence axioms at the objects `x, y, z, w`.
pub fn coherence_axioms<L: Label>(x: &ObjTerm<L>, y: &ObjTerm<L>, z: &ObjTerm<L>, w: &ObjTerm<L>) -> Vec<AxiomInstance<L>> {
    use MorTerm as M;
    let t = |a: &ObjTerm<L>, b: &ObjTerm<L>| ObjTerm::tensor(a.clone(), b.clone());
    let id = |a: &ObjTerm<L>| M::Id(a.clone());
    let (x, y, z, w) = (x.clone(), y.clone(), z.clone(), w.clone());
    vec![
        inst(
            "pentagon",
            M::comp(M::Assoc(t(&x, &y), z.clone(), w.clone()), M::Assoc(x.clone(), y.clone(), t(&z, &w))),
            seq([
                M::tensor(M::Assoc(x.clone(), y.clone(), z.clone()), id(&w)),
                M::Assoc(x.clone(), t(&y, &z), w.clone()),
                M::tensor(id(&x), M::Assoc(y.clone(), z.clone(), w.clone())),
            ]),
        ),
        inst(
            "triangle",
            M::tensor(M::RightUnitor(x.clone()), id(&y)),
            M::comp(M::Assoc(x.clone(), ObjTerm::Unit, y.clone()), M::tensor(id(&x), M::LeftUnitor(y.clone()))),
        ),
        inst(
            "hexagon",
            seq([M::Assoc(x.clone(), y.clone(), z.clone()), M::Braid(x.clone(), t(&y, &z)), M::Assoc(y.clone(), z.clone(), x.clone())]),
            seq([
                M::tensor(M::Braid(x.clone(), y.clone()), id(&z)),
                M::Assoc(y.clone(), x.clone(), z.clone()),
                M::tensor(id(&y), M::Braid(x.clone(), z.clone())),
            ]),
        ),
        inst(
            "hexagon-inverse",
            seq([
                M::inv(M::Assoc(x.clone(), y.clone(), z.clone())),
                M::Braid(t(&x, &y), z.clone()),
                M::inv(M::Assoc(z.clone(), x.clone(), y.clone())),
            ]),
            seq([
                M::tensor(id(&x), M::Braid(y.clone(), z.clone())),
                M::inv(M::Assoc(x.clone(), z.clone(), y.clone())),
                M::tensor(M::Braid(x.clone(), z.clone()), id(&y)),
            ]),
        ),
        inst("symmetry", M::comp(M::Braid(x.clone(), y.clone()), M::Braid(y.clone(), x.clone())), id(&t(&x, &y))),
        inst("unit-coherence", M::LeftUnitor(ObjTerm::Unit), M::RightUnitor(ObjTerm::Unit)),
        inst(
            "braid-unitor",
            M::comp(M::Braid(x.clone(), ObjTerm::Unit), M::LeftUnitor(x.clone())),
            M::RightUnitor(x.clone()),
        ),
    ]
}

/// Naturality squares of α, λ, ρ and β at the structural morphisms
/// `f, g, h`.
pub fn naturality_axioms<L: Label>(f: &MorTerm<L>, g: &MorTerm<L>, h: &MorTerm<L>) -> Vec<AxiomInstance<L>> {
    use MorTerm as M;
    let (fs, ft) = f.boundary().expect("well typed");
    let (gs, gt) = g.boundary().expect("well typed");
    let (hs, ht) = h.boundary().expect("well typed");
    let tm = |a: &M<L>, b: &M<L>| M::tensor(a.clone(), b.clone());
    vec![
        inst(
            "associator-naturality",
            M::comp(tm(&tm(f, g), h), M::Assoc(ft.clone(), gt.clone(), ht.clone())),
            M::comp(M::Assoc(fs.clone(), gs.clone(), hs.clone()), tm(f, &tm(g, h))),
        ),
        inst(
            "left-unitor-naturality",
            M::comp(tm(&M::Id(ObjTerm::Unit), f), M::LeftUnitor(ft.clone())),
            M::comp(M::LeftUnitor(fs.clone()), f.clone()),
        ),
        inst(
            "right-unitor-naturality",
            M::comp(tm(f, &M::Id(ObjTerm::Unit)), M::RightUnitor(ft.clone())),
            M::comp(M::RightUnitor(fs.clone()), f.clone()),
        ),
        inst(
            "braiding-naturality",
            M::comp(tm(f, g), M::Braid(ft, gt)),
            M::comp(M::Braid(fs, gs), tm(g, f)),
        ),
    ]
}

/// Every term obtained from `t` by one application of a symmetric monoidal
/// axiom, in either direction, at any subterm.
pub fn axiom_rewrites<L: Label>(t: &MorTerm<L>) -> Vec<(&'static str, MorTerm<L>)> {
    let mut out = root_rewrites(t);
    let wrap = |out: &mut Vec<_>, inner: Vec<(&'static str, MorTerm<L>)>, rebuild: &dyn Fn(MorTerm<L>) -> MorTerm<L>| {
        out.extend(inner.into_iter().map(|(n, r)| (n, rebuild(r))));
    };
    match t {
        MorTerm::Comp(f, g) => {
            wrap(&mut out, axiom_rewrites(f), &|r| MorTerm::comp(r, (**g).clone()));
            wrap(&mut out, axiom_rewrites(g), &|r| MorTerm::comp((**f).clone(), r));
        }
        MorTerm::Tensor(f, g) => {
            wrap(&mut out, axiom_rewrites(f), &|r| MorTerm::tensor(r, (**g).clone()));
            wrap(&mut out, axiom_rewrites(g), &|r| MorTerm::tensor((**f).clone(), r));
        }
        MorTerm::Inv(f) => wrap(&mut out, axiom_rewrites(f), &|r| MorTerm::inv(r)),
        _ => {}
    }
    out
}

fn root_rewrites<L: Label>(t: &MorTerm<L>) -> Vec<(&'static str, MorTerm<L>)> {
    use MorTerm as M;
    let Ok((src, dst)) = t.boundary() else {
        return Vec::new();
    };
    let tn = |a: &ObjTerm<L>, b: &ObjTerm<L>| ObjTerm::tensor(a.clone(), b.clone());
    let id = |a: &ObjTerm<L>| M::Id(a.clone());
    let mut out = Vec::new();
    if !matches!(t, M::Id(_)) {
        out.push(("left identity", M::comp(id(&src), t.clone())));
        out.push(("right identity", M::comp(t.clone(), id(&dst))));
        out.push(("inverse", seq([t.clone(), M::inv(t.clone()), t.clone()])));
    }
    match t {
        M::Id(x) => {
            if let ObjTerm::Tensor(a, b) = x {
                out.push(("tensor of identities", M::tensor(id(a), id(b))));
            }
        }
        M::Comp(f, g) => {
            if matches!(**f, M::Id(_)) {
                out.push(("left identity", (**g).clone()));
            }
            if matches!(**g, M::Id(_)) {
                out.push(("right identity", (**f).clone()));
            }
            if let M::Comp(a, b) = &**f {
                out.push(("composition associativity", M::comp((**a).clone(), M::comp((**b).clone(), (**g).clone()))));
            }
            if let M::Comp(b, c) = &**g {
                out.push(("composition associativity", M::comp(M::comp((**f).clone(), (**b).clone()), (**c).clone())));
            }
            if let (M::Tensor(a, c), M::Tensor(b, d)) = (&**f, &**g) {
                out.push((
                    "interchange",
                    M::tensor(M::comp((**a).clone(), (**b).clone()), M::comp((**c).clone(), (**d).clone())),
                ));
            }
            if let (M::Braid(x, y), M::Braid(y2, x2)) = (&**f, &**g) {
                if x == x2 && y == y2 {
                    out.push(("symmetry", id(&src)));
                }
            }
            if let (M::Tensor(a, b), M::Braid(_, _)) = (&**f, &**g) {
                let (a_src, b_src) = (a.source().expect("typed"), b.source().expect("typed"));
                out.push(("braiding naturality", M::comp(M::Braid(a_src, b_src), M::tensor((**b).clone(), (**a).clone()))));
            }
            if let (M::Tensor(ab, c), M::Assoc(..)) = (&**f, &**g) {
                if let M::Tensor(a, b) = &**ab {
                    let (x, y, z) = (a.source().expect("typed"), b.source().expect("typed"), c.source().expect("typed"));
                    out.push((
                        "associator naturality",
                        M::comp(M::Assoc(x, y, z), M::tensor((**a).clone(), M::tensor((**b).clone(), (**c).clone()))),
                    ));
                }
            }
            if **g == M::inv((**f).clone()) {
                out.push(("inverse", id(&src)));
            }
        }
        M::Tensor(f, g) => {
            if let (M::Comp(a, b), M::Comp(c, d)) = (&**f, &**g) {
                out.push((
                    "interchange",
                    M::comp(M::tensor((**a).clone(), (**c).clone()), M::tensor((**b).clone(), (**d).clone())),
                ));
            }
            if let (M::Id(a), M::Id(b)) = (&**f, &**g) {
                out.push(("tensor of identities", id(&tn(a, b))));
            }
            if let (M::RightUnitor(x), M::Id(y)) = (&**f, &**g) {
                out.push((
                    "triangle",
                    M::comp(M::Assoc(x.clone(), ObjTerm::Unit, y.clone()), M::tensor(id(x), M::LeftUnitor(y.clone()))),
                ));
            }
        }
        M::Assoc(xy, z, w) => {
            if let ObjTerm::Tensor(x, y) = xy {
                let (x, y) = (&**x, &**y);
                out.push((
                    "pentagon",
                    seq([
                        M::tensor(M::Assoc(x.clone(), y.clone(), z.clone()), id(w)),
                        M::Assoc(x.clone(), tn(y, z), w.clone()),
                        M::tensor(id(x), M::Assoc(y.clone(), z.clone(), w.clone())),
                        M::inv(M::Assoc(x.clone(), y.clone(), tn(z, w))),
                    ]),
                ));
            }
            if *z == ObjTerm::Unit {
                out.push((
                    "triangle",
                    M::comp(M::tensor(M::RightUnitor(xy.clone()), id(w)), M::tensor(id(xy), M::inv(M::LeftUnitor(w.clone())))),
                ));
            }
        }
        M::Braid(x, yz) => {
            out.push(("symmetry", M::inv(M::Braid(yz.clone(), x.clone()))));
            if let ObjTerm::Tensor(y, z) = yz {
                let (y, z) = (&**y, &**z);
                out.push((
                    "hexagon",
                    seq([
                        M::inv(M::Assoc(x.clone(), y.clone(), z.clone())),
                        M::tensor(M::Braid(x.clone(), y.clone()), id(z)),
                        M::Assoc(y.clone(), x.clone(), z.clone()),
                        M::tensor(id(y), M::Braid(x.clone(), z.clone())),
                        M::inv(M::Assoc(y.clone(), z.clone(), x.clone())),
                    ]),
                ));
            }
            if *yz == ObjTerm::Unit {
                out.push(("braid unitor", M::comp(M::RightUnitor(x.clone()), M::inv(M::LeftUnitor(x.clone())))));
            }
        }
        M::LeftUnitor(ObjTerm::Unit) => out.push(("unit coherence", M::RightUnitor(ObjTerm::Unit))),
        M::RightUnitor(ObjTerm::Unit) => out.push(("unit coherence", M::LeftUnitor(ObjTerm::Unit))),
        M::Inv(f) => {
            match &**f {
                M::Inv(g) => out.push(("double inverse", (**g).clone())),
                M::Comp(a, b) => out.push(("inverse of composite", M::comp(M::inv((**b).clone()), M::inv((**a).clone())))),
                M::Tensor(a, b) => out.push(("inverse of tensor", M::tensor(M::inv((**a).clone()), M::inv((**b).clone())))),
                M::Braid(x, y) => out.push(("symmetry", M::Braid(y.clone(), x.clone()))),
                _ => {}
            }
        }
        _ => {}
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_smc::eval::{decide_equal, normalize_obj};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_terms_are_well_typed() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let n = rng.gen_range(0..6);
            let leaves: Vec<char> = (0..n).map(|i| (b'a' + (i % 3) as u8) as char).collect();
            let x = random_obj(&mut rng, &leaves);
            assert_eq!(normalize_obj(&x).labels(), leaves.as_slice());
            let f = random_mor(&mut rng, &x, 4);
            assert_eq!(f.source().unwrap(), x);
        }
    }

    #[test]
    fn rewrites_preserve_meaning() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut names = std::collections::BTreeSet::new();
        for _ in 0..200 {
            let n = rng.gen_range(0..5);
            let leaves: Vec<char> = (0..n).map(|i| (b'a' + i as u8) as char).collect();
            let x = random_obj(&mut rng, &leaves);
            let f = random_mor(&mut rng, &x, 3);
            for (name, r) in axiom_rewrites(&f) {
                assert!(decide_equal(&f, &r).unwrap(), "{name}: {f:?} vs {r:?}");
                names.insert(name);
            }
        }
        assert!(names.len() >= 12, "{names:?}");
    }

    #[test]
    fn rewrites_of_a_braid() {
        let (a, b) = (ObjTerm::Gen('a'), ObjTerm::Gen('b'));
        let t = MorTerm::Braid(a.clone(), ObjTerm::tensor(b, ObjTerm::Unit));
        let names: Vec<_> = axiom_rewrites(&t).into_iter().map(|(n, _)| n).collect();
        assert!(names.contains(&"hexagon"));
        assert!(names.contains(&"symmetry"));
        assert!(axiom_rewrites(&MorTerm::Braid(a, ObjTerm::Unit)).iter().any(|(n, _)| *n == "braid unitor"));
    }

    #[test]
    fn axioms_hold_on_random_objects() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let mut objs = (0..4).map(|_| {
                let n = rng.gen_range(0..3);
                let leaves: Vec<char> = (0..n).map(|_| (b'a' + rng.gen_range(0..3u8)) as char).collect();
                random_obj(&mut rng, &leaves)
            });
            let (x, y, z, w) = (objs.next().unwrap(), objs.next().unwrap(), objs.next().unwrap(), objs.next().unwrap());
            for ax in coherence_axioms(&x, &y, &z, &w) {
                assert!(decide_equal(&ax.lhs, &ax.rhs).unwrap(), "{}", ax.name);
            }
            let f = random_mor(&mut rng, &x, 3);
            let g = random_mor(&mut rng, &y, 3);
            let h = random_mor(&mut rng, &z, 3);
            for ax in naturality_axioms(&f, &g, &h) {
                assert!(decide_equal(&ax.lhs, &ax.rhs).unwrap(), "{}", ax.name);
            }
        }
    }
}
