//! Law-checking suites: exhaustive enumeration of small instances plus
//! seeded random sampling of larger ones.
//!
//! A suite checks every law instance it enumerates and reports violations.
//! Where a family of instances is too large to enumerate at the requested
//! bound, the suite enumerates up to a smaller bound and lists the gap in
//! [`SuiteOutcome::shortfalls`].

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::finspan::{
    self, adjunction_triangles, associator, horizontal_compose, left_unitor, pullback, right_unitor,
    vertical_compose, FinFun, Span, SpanCell, Square,
};
use crate::free_smc::gen::{axiom_rewrites, coherence_axioms, naturality_axioms, random_mor, random_obj};
use crate::free_smc::{decide_equal, normalize_obj, FreeTermModel, MorTerm, ObjTerm};
use crate::kleisli::{composite_multiset, duality, k_compose, KHom};
use crate::monoidal::{braiding, braiding_recursive};
use crate::multiset::Multiset;
use crate::pbc::{
    apex_relabelings, cell_functoriality_law, comp_associativity_law, comp_naturality_law, comp_unit_laws,
    horizontal_pasting_law, horizontal_unit_law, lambda_system, lists_are_linear, pseudofunctor_on_cell,
    u_assoc_law, u_unit_laws, v_assoc_law, v_unit_laws, vertical_pasting_law, vertical_unit_law, LawReport, LawSides, PbcSystem,
};
use crate::perm::{exchange_step, is_reduced, matrix_entry, reduced_word, word_to_perm, Perm, Word};
use crate::slist::{hom_from_word, word_from_hom, GenWord, SList};
use crate::unbias::{instantiate_sides, unbias_eval};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Coxeter,
    Faithfulness,
    Coherence,
    Braiding,
    Span,
    Kleisli,
    Pbc,
    Main,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Coxeter,
        Suite::Faithfulness,
        Suite::Coherence,
        Suite::Braiding,
        Suite::Span,
        Suite::Kleisli,
        Suite::Pbc,
        Suite::Main,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Coxeter => "coxeter",
            Suite::Faithfulness => "faithfulness",
            Suite::Coherence => "coherence",
            Suite::Braiding => "braiding",
            Suite::Span => "span",
            Suite::Kleisli => "kleisli",
            Suite::Pbc => "pbc",
            Suite::Main => "main",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    /// The bounds the suite is specified with.
    pub fn default_config(self, seed: u64) -> SuiteConfig {
        let (max_size, random_size) = match self {
            Suite::Coxeter => (6, 8),
            Suite::Faithfulness => (8, 8),
            Suite::Coherence => (5, 5),
            Suite::Braiding => (8, 8),
            Suite::Span => (3, 5),
            Suite::Kleisli => (3, 5),
            Suite::Pbc => (3, 3),
            Suite::Main => (3, 3),
        };
        SuiteConfig { max_size, random_size, samples: 1000, seed }
    }

    pub fn run(self, cfg: &SuiteConfig) -> SuiteOutcome {
        let mut out = SuiteOutcome::default();
        match self {
            Suite::Coxeter => coxeter(cfg, &mut out),
            Suite::Faithfulness => faithfulness(cfg, &mut out),
            Suite::Coherence => coherence(cfg, &mut out),
            Suite::Braiding => braiding_oracle(cfg, &mut out),
            Suite::Span => span_bicategory(cfg, &mut out),
            Suite::Kleisli => kleisli(cfg, &mut out),
            Suite::Pbc => pbc(cfg, &mut out),
            Suite::Main => main_theorem(cfg, &mut out),
        }
        out
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Bound on every finite set in the exhaustive part.
    pub max_size: usize,
    /// Bound on every finite set in the random part.
    pub random_size: usize,
    pub samples: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub report: LawReport,
    /// Instance counts per law.
    pub counts: BTreeMap<String, usize>,
    /// Law families enumerated below `max_size`, with the bound reached.
    pub shortfalls: Vec<String>,
}

impl SuiteOutcome {
    pub fn is_ok(&self) -> bool {
        self.report.is_ok()
    }

    pub fn is_complete(&self) -> bool {
        self.shortfalls.is_empty()
    }

    fn check(&mut self, law: &str, outcome: Result<bool>, instance: impl FnOnce() -> String) {
        *self.counts.entry(law.to_string()).or_default() += 1;
        self.report.checked += 1;
        match outcome {
            Ok(true) => {}
            Ok(false) => self.report.violations.push(format!("{law}: sides differ at {}", instance())),
            Err(e) => self.report.violations.push(format!("{law}: {e} at {}", instance())),
        }
    }

    fn sides(&mut self, law: &str, sides: Result<LawSides>, instance: impl FnOnce() -> String) {
        self.check(law, sides.map(|(a, b)| a == b), instance)
    }

    /// The exhaustive bound to use for a law family that is only feasible
    /// up to `cap`.
    fn capped(&mut self, law: &str, cfg: &SuiteConfig, cap: usize) -> usize {
        if cfg.max_size > cap {
            self.shortfalls.push(format!("{law}: exhaustive only up to size {cap}, requested {}", cfg.max_size));
            cap
        } else {
            cfg.max_size
        }
    }
}

fn rng(cfg: &SuiteConfig) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed)
}

// Permutations and words.

/// Composite of transpositions, built one factor at a time.
fn word_perm_oracle(w: &[usize], n: usize) -> Perm {
    w.iter().fold(Perm::identity(n), |p, &k| p.compose(&Perm::transposition(n, k).expect("letter in range")))
}

fn inversions_oracle(p: &Perm) -> usize {
    let img = p.images();
    (0..img.len()).flat_map(|i| (i + 1..img.len()).map(move |j| (i, j))).filter(|&(i, j)| img[i] > img[j]).count()
}

fn coxeter_relations(n: usize, out: &mut SuiteOutcome) {
    for i in 0..n.saturating_sub(1) {
        for j in 0..n.saturating_sub(1) {
            let m = matrix_entry(i, j);
            let w: Vec<usize> = std::iter::repeat([i, j]).take(m).flatten().collect();
            out.check("coxeter relation", word_to_perm(&Word(w), n).map(|p| p.is_identity()), || format!("n={n} i={i} j={j}"));
            if i == j {
                out.check("simple reflection is not the identity", word_to_perm(&Word(vec![i]), n).map(|p| !p.is_identity()), || {
                    format!("n={n} i={i}")
                });
            } else {
                let w: Vec<usize> = std::iter::repeat([i, j]).take(m - 1).flatten().collect();
                out.check("coxeter order is exact", word_to_perm(&Word(w), n).map(|p| !p.is_identity()), || {
                    format!("n={n} i={i} j={j}")
                });
            }
        }
    }
}

fn check_round_trip(p: &Perm, out: &mut SuiteOutcome) {
    let n = p.len();
    let w = reduced_word(p);
    out.check("word of permutation", word_to_perm(&w, n).map(|q| &q == p), || format!("{p}"));
    out.check("reduced length is inversion count", Ok(w.len() == inversions_oracle(p)), || format!("{p}"));
    out.check("reduced word is reduced", is_reduced(&w, n), || format!("{p}"));
}

fn check_exchange(w: &Word, n: usize, out: &mut SuiteOutcome) {
    for b in 0..n.saturating_sub(1) {
        let prefixed = Word(std::iter::once(b).chain(w.letters().iter().copied()).collect());
        let target = word_perm_oracle(prefixed.letters(), n);
        if inversions_oracle(&target) <= w.len() {
            let ok = exchange_step(w, b, n).map(|i| word_perm_oracle(w.erase(i).letters(), n) == target);
            out.check("exchange step", ok, || format!("w={w} b={b} n={n}"));
        } else {
            let refused = matches!(exchange_step(w, b, n), Err(Error::NoReductionPossible(_)));
            out.check("exchange step refuses lengthening", Ok(refused), || format!("w={w} b={b} n={n}"));
        }
    }
}

fn coxeter(cfg: &SuiteConfig, out: &mut SuiteOutcome) {
    for n in 0..=cfg.max_size {
        coxeter_relations(n, out);
        for p in Perm::all(n) {
            check_round_trip(&p, out);
            let w = reduced_word(&p);
            check_exchange(&w, n, out);
            // a second reduced word: the reverse of one for the inverse
            let mut other = reduced_word(&p.inverse()).0;
            other.reverse();
            if other != w.0 {
                check_exchange(&Word(other), n, out);
            }
        }
    }
    let mut rng = rng(cfg);
    for n in cfg.max_size + 1..=cfg.random_size {
        coxeter_relations(n, out);
    }
    for _ in 0..cfg.samples {
        let n = rng.gen_range(0..=cfg.random_size);
        let len = if n < 2 { 0 } else { rng.gen_range(0..=3 * n) };
        let w: Vec<usize> = (0..len).map(|_| rng.gen_range(0..n - 1)).collect();
        let p = word_perm_oracle(&w, n);
        out.check("word to permutation", word_to_perm(&Word(w.clone()), n).map(|q| q == p), || format!("{w:?} n={n}"));
        let r = reduced_word(&p);
        out.check("reduction shortens with parity", Ok(r.len() <= w.len() && (w.len() - r.len()) % 2 == 0), || {
            format!("{w:?} n={n}")
        });
        check_round_trip(&p, out);
    }
}

// Symmetric lists.

fn random_labels(rng: &mut ChaCha8Rng, len: usize, alphabet: usize) -> SList<usize> {
    SList::new((0..len).map(|_| rng.gen_range(0..alphabet)).collect())
}

fn random_positions(rng: &mut ChaCha8Rng, len: usize) -> Vec<usize> {
    if len < 2 {
        return Vec::new();
    }
    let k = rng.gen_range(0..=2 * len);
    (0..k).map(|_| rng.gen_range(0..len - 1)).collect()
}

fn faithfulness(cfg: &SuiteConfig, out: &mut SuiteOutcome) {
    let mut rng = rng(cfg);
    for len in 0..=cfg.max_size {
        for _ in 0..cfg.samples {
            let start = random_labels(&mut rng, len, 3);
            let w1 = GenWord::new(start.clone(), random_positions(&mut rng, len));
            let f = match hom_from_word(&w1) {
                Ok(f) => f,
                Err(e) => {
                    out.check("hom from word", Err(e), || format!("{w1:?}"));
                    continue;
                }
            };
            out.check("word of hom round trip", hom_from_word(&word_from_hom(&f)).map(|g| g == f), || format!("{w1:?}"));
            // the second word is either unrelated or a padded copy of the first
            let positions = if rng.gen_bool(0.5) || len < 2 {
                random_positions(&mut rng, len)
            } else {
                let mut p = w1.positions.clone();
                let k = rng.gen_range(0..len - 1);
                let at = rng.gen_range(0..=p.len());
                p.splice(at..at, [k, k]);
                p
            };
            let w2 = GenWord::new(start, positions);
            let same_perm = word_perm_oracle(&w1.positions, len) == word_perm_oracle(&w2.positions, len);
            out.check("equal homs iff equal permutations", hom_from_word(&w2).map(|g| (g == f) == same_perm), || {
                format!("{w1:?} vs {w2:?}")
            });
        }
    }
}

// The free symmetric monoidal category.

fn letter(i: usize) -> char {
    (b'a' + i as u8) as char
}

fn random_term(rng: &mut ChaCha8Rng, generators: usize, max_leaves: usize) -> MorTerm<char> {
    let n = rng.gen_range(0..=max_leaves);
    let leaves: Vec<char> = (0..n).map(|_| letter(rng.gen_range(0..generators))).collect();
    let x = random_obj(rng, &leaves);
    random_mor(rng, &x, 3)
}

fn random_object(rng: &mut ChaCha8Rng, generators: usize, max_leaves: usize) -> ObjTerm<char> {
    let n = rng.gen_range(0..=max_leaves);
    let leaves: Vec<char> = (0..n).map(|_| letter(rng.gen_range(0..generators))).collect();
    random_obj(rng, &leaves)
}

fn coherence(cfg: &SuiteConfig, out: &mut SuiteOutcome) {
    let mut rng = rng(cfg);
    let gens = cfg.max_size.max(1);
    for _ in 0..cfg.samples {
        let k = rng.gen_range(1..=gens);
        let t = random_term(&mut rng, k, 6);
        let rewrites = axiom_rewrites(&t);
        for (name, r) in &rewrites {
            out.check(&format!("rewrite: {name}"), decide_equal(&t, r), || format!("{t:?} vs {r:?}"));
        }
        // a chain of rewrites stays equal to where it started
        let mut cur = t.clone();
        for _ in 0..3 {
            match axiom_rewrites(&cur).choose(&mut rng) {
                Some((_, next)) => cur = next.clone(),
                None => break,
            }
        }
        out.check("rewrite chain", decide_equal(&t, &cur), || format!("{t:?} vs {cur:?}"));

        let objs: Vec<ObjTerm<char>> = (0..4).map(|_| random_object(&mut rng, k, 3)).collect();
        for ax in coherence_axioms(&objs[0], &objs[1], &objs[2], &objs[3]) {
            out.check(ax.name, decide_equal(&ax.lhs, &ax.rhs), || format!("{objs:?}"));
        }
        let fs: Vec<MorTerm<char>> = objs[..3].iter().map(|x| random_mor(&mut rng, x, 2)).collect();
        for ax in naturality_axioms(&fs[0], &fs[1], &fs[2]) {
            out.check(ax.name, decide_equal(&ax.lhs, &ax.rhs), || format!("{fs:?}"));
        }
    }
    for i in 0..gens {
        let a = ObjTerm::Gen(letter(i));
        let braid = MorTerm::Braid(a.clone(), a.clone());
        let id = MorTerm::Id(ObjTerm::tensor(a.clone(), a));
        out.check("braid of a generator with itself is not the identity", decide_equal(&braid, &id).map(|e| !e), || {
            letter(i).to_string()
        });
    }
}

fn braiding_oracle(cfg: &SuiteConfig, out: &mut SuiteOutcome) {
    let mut rng = rng(cfg);
    for total in 0..=cfg.max_size {
        for p in 0..=total {
            let q = total - p;
            let distinct = SList::new((0..total).collect::<Vec<usize>>());
            let (x, y) = distinct.labels().split_at(p);
            let (x, y) = (SList::new(x.to_vec()), SList::new(y.to_vec()));
            out.check("braiding matches recursive braiding", Ok(braiding(&x, &y) == braiding_recursive(&x, &y)), || {
                format!("{x:?} {y:?}")
            });
            for _ in 0..20 {
                let x = random_labels(&mut rng, p, 3);
                let y = random_labels(&mut rng, q, 3);
                out.check("braiding matches recursive braiding", Ok(braiding(&x, &y) == braiding_recursive(&x, &y)), || {
                    format!("{x:?} {y:?}")
                });
            }
        }
    }
}

// Spans.

/// All spans `a ← x → b` with `x ≤ apex`.
pub fn spans_between(a: usize, b: usize, apex: usize) -> Vec<Span> {
    let mut v = Vec::new();
    for x in 0..=apex {
        for l in FinFun::all(x, a) {
            for r in FinFun::all(x, b) {
                v.push(Span::new(l.clone(), r).expect("common apex"));
            }
        }
    }
    v
}

/// All spans whose sets all have at most `n` elements.
pub fn spans_upto(n: usize) -> Vec<Span> {
    let mut v = Vec::new();
    for a in 0..=n {
        for b in 0..=n {
            v.extend(spans_between(a, b, n));
        }
    }
    v
}

fn random_fun(rng: &mut ChaCha8Rng, src: usize, dst: usize) -> FinFun {
    let dst = if src > 0 { dst.max(1) } else { dst };
    FinFun::new(dst, (0..src).map(|_| rng.gen_range(0..dst)).collect()).expect("in range")
}

fn random_span(rng: &mut ChaCha8Rng, a: usize, b: usize, apex: usize) -> Span {
    let x = if a == 0 || b == 0 { 0 } else { rng.gen_range(0..=apex) };
    Span::new(random_fun(rng, x, a), random_fun(rng, x, b)).expect("common apex")
}

/// A random cell `s ⇒ s'`: `s'` is random and `s` is pulled back along a
/// random apex map.
fn random_cell(rng: &mut ChaCha8Rng, target: &Span, apex: usize) -> SpanCell {
    let x = if target.apex() == 0 { 0 } else { rng.gen_range(0..=apex) };
    let m = random_fun(rng, x, target.apex());
    let src = Span::new(m.then(target.left()).expect("apex"), m.then(target.right()).expect("apex")).expect("apex");
    SpanCell::new(src, target.clone(), m).expect("pulled back legs commute")
}

/// Every cell into `target` from a span with apex at most `apex`.
fn cells_into(target: &Span, apex: usize) -> Vec<SpanCell> {
    (0..=apex)
        .flat_map(|x| FinFun::all(x, target.apex()))
        .map(|m| {
            let src = Span::new(m.then(target.left()).expect("apex"), m.then(target.right()).expect("apex")).expect("apex");
            SpanCell::new(src, target.clone(), m).expect("pulled back legs commute")
        })
        .collect()
}

fn is_identity_cell(c: &SpanCell) -> bool {
    c.src() == c.dst() && *c.map() == FinFun::identity(c.src().apex())
}

fn pentagon(s: &Span, t: &Span, u: &Span, w: &Span) -> Result<bool> {
    let tu = finspan::compose_span(t, u)?;
    let uw = finspan::compose_span(u, w)?;
    let st = finspan::compose_span(s, t)?;
    let lhs = vertical_compose(&associator(&st, u, w)?, &associator(s, t, &uw)?)?;
    let rhs = finspan::paste(&[
        horizontal_compose(&associator(s, t, u)?, &SpanCell::identity(w))?,
        associator(s, &tu, w)?,
        horizontal_compose(&SpanCell::identity(s), &associator(t, u, w)?)?,
    ])?;
    Ok(lhs == rhs)
}

fn triangle(s: &Span, t: &Span) -> Result<bool> {
    let lhs = vertical_compose(
        &associator(s, &Span::identity(s.target()), t)?,
        &horizontal_compose(&SpanCell::identity(s), &left_unitor(t)?)?,
    )?;
    let rhs = horizontal_compose(&right_unitor(s)?, &SpanCell::identity(t))?;
    Ok(lhs == rhs)
}

/// `(a;b) ∘ₕ (c;d) = (a ∘ₕ c);(b ∘ₕ d)`.
fn interchange(a: &SpanCell, b: &SpanCell, c: &SpanCell, d: &SpanCell) -> Result<bool> {
    let lhs = horizontal_compose(&vertical_compose(a, b)?, &vertical_compose(c, d)?)?;
    let rhs = vertical_compose(&horizontal_compose(a, c)?, &horizontal_compose(b, d)?)?;
    Ok(lhs == rhs)
}

fn adjunction(f: &FinFun) -> Result<bool> {
    let (first, second) = adjunction_triangles(f)?;
    Ok(is_identity_cell(&first) && is_identity_cell(&second))
}

/// Two-step cell chains `a ; b` into spans with sets at most `n`.
fn cell_chains(target: &Span, n: usize) -> Vec<(SpanCell, SpanCell)> {
    let mut v = Vec::new();
    for b in cells_into(target, n) {
        for a in cells_into(b.src(), n) {
            v.push((a, b.clone()));
        }
    }
    v
}

fn span_bicategory(cfg: &SuiteConfig, out: &mut SuiteOutcome) {
    let n = cfg.max_size;
    for a in 0..=n {
        for b in 0..=n {
            for f in FinFun::all(a, b) {
                out.check("adjunction triangles", adjunction(&f), || format!("{f}"));
            }
        }
    }
    let pair_bound = out.capped("triangle", cfg, 3);
    let spans = spans_upto(pair_bound);
    for s in &spans {
        for t in spans.iter().filter(|t| t.source() == s.target()) {
            out.check("triangle", triangle(s, t), || format!("{s:?} {t:?}"));
        }
    }
    let pent_bound = out.capped("pentagon", cfg, 2);
    let spans = spans_upto(pent_bound);
    let from: Vec<Vec<&Span>> = (0..=pent_bound).map(|o| spans.iter().filter(|s| s.source() == o).collect()).collect();
    for s in &spans {
        for t in &from[s.target()] {
            for u in &from[t.target()] {
                for w in &from[u.target()] {
                    out.check("pentagon", pentagon(s, t, u, w), || format!("{s:?} {t:?} {u:?} {w:?}"));
                }
            }
        }
    }
    let cell_bound = out.capped("interchange", cfg, 2);
    let spans = spans_upto(cell_bound);
    for s in &spans {
        for t in spans.iter().filter(|t| t.source() == s.target()) {
            let left = cell_chains(s, cell_bound);
            let right = cell_chains(t, cell_bound);
            for (a, b) in &left {
                for (c, d) in &right {
                    out.check("interchange", interchange(a, b, c, d), || format!("{a:?} {b:?} {c:?} {d:?}"));
                }
            }
        }
    }

    let mut rng = rng(cfg);
    let r = cfg.random_size;
    for _ in 0..cfg.samples {
        let objs: Vec<usize> = (0..5).map(|_| rng.gen_range(0..=r)).collect();
        let sp: Vec<Span> = (0..4).map(|i| random_span(&mut rng, objs[i], objs[i + 1], r)).collect();
        out.check("pentagon", pentagon(&sp[0], &sp[1], &sp[2], &sp[3]), || format!("{sp:?}"));
        out.check("triangle", triangle(&sp[0], &sp[1]), || format!("{sp:?}"));
        let f = random_fun(&mut rng, objs[0], objs[1]);
        out.check("adjunction triangles", adjunction(&f), || format!("{f}"));
        let b = random_cell(&mut rng, &sp[0], r);
        let a = random_cell(&mut rng, b.src(), r);
        let d = random_cell(&mut rng, &sp[1], r);
        let c = random_cell(&mut rng, d.src(), r);
        out.check("interchange", interchange(&a, &b, &c, &d), || format!("{a:?} {b:?} {c:?} {d:?}"));
    }
}

// Kleisli.

/// All families `I ⇝ K` with lists of length at most `max_len`.
pub fn families(i: usize, k: usize, max_len: usize) -> Vec<KHom> {
    let mut lists: Vec<Vec<usize>> = vec![Vec::new()];
    let mut frontier = lists.clone();
    for _ in 0..max_len {
        frontier = frontier
            .iter()
            .flat_map(|l| (0..k).map(move |x| l.iter().copied().chain([x]).collect::<Vec<usize>>()))
            .collect();
        lists.extend(frontier.iter().cloned());
    }
    let mut fams: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for _ in 0..i {
        fams = fams.iter().flat_map(|f| lists.iter().map(move |l| f.iter().cloned().chain([l.clone()]).collect())).collect();
    }
    fams.into_iter().map(|f| KHom::from_vecs(k, f).expect("labels in range")).collect()
}

fn random_family(rng: &mut ChaCha8Rng, i: usize, k: usize, max_len: usize) -> KHom {
    let lists = (0..i)
        .map(|_| {
            let len = if k == 0 { 0 } else { rng.gen_range(0..=max_len) };
            (0..len).map(|_| rng.gen_range(0..k)).collect()
        })
        .collect();
    KHom::from_vecs(k, lists).expect("labels in range")
}

fn composite_oracle(f: &KHom, g: &KHom, j: usize) -> Multiset<usize> {
    f.list(j).labels().iter().flat_map(|&k| g.list(k).labels().iter().copied()).collect()
}

fn check_composite(f: &KHom, g: &KHom, out: &mut SuiteOutcome) {
    let fg = match k_compose(f, g) {
        Ok(fg) => fg,
        Err(e) => return out.check("composite multiset", Err(e), || format!("{f:?} {g:?}")),
    };
    for j in 0..f.src() {
        let ok = composite_multiset(f, g, j)
            .map(|m| m == fg.list(j).underlying_multiset() && m == composite_oracle(f, g, j));
        out.check("composite multiset", ok, || format!("{f:?} {g:?} j={j}"));
    }
}

fn check_duality(x: &KHom, out: &mut SuiteOutcome) {
    let d = duality(x);
    let shape = d.src() == x.dst() && d.dst() == x.src();
    let symmetric = shape
        && (0..x.src()).all(|j| {
            (0..x.dst()).all(|k| d.list(k).underlying_multiset().count(&j) == x.list(j).underlying_multiset().count(&k))
        });
    out.check("duality multiplicities", Ok(symmetric), || format!("{x:?}"));
    let sorted: Vec<Vec<usize>> = x
        .lists()
        .iter()
        .map(|l| {
            let mut v = l.labels().to_vec();
            v.sort_unstable();
            v
        })
        .collect();
    let twice = KHom::from_vecs(x.dst(), sorted).map(|s| duality(&d) == s);
    out.check("double dual sorts each list", twice, || format!("{x:?}"));
}

fn kleisli(cfg: &SuiteConfig, out: &mut SuiteOutcome) {
    let n = cfg.max_size;
    let mut rng = rng(cfg);
    for i in 0..=n {
        for k in 0..=n {
            for f in families(i, k, n) {
                check_duality(&f, out);
                for _ in 0..3 {
                    let l = rng.gen_range(0..=n);
                    let g = random_family(&mut rng, k, l, n);
                    check_composite(&f, &g, out);
                }
            }
        }
    }
    let r = cfg.random_size;
    for _ in 0..cfg.samples {
        let (i, k, l) = (rng.gen_range(0..=r), rng.gen_range(0..=r), rng.gen_range(0..=r));
        let f = random_family(&mut rng, i, k, r);
        let g = random_family(&mut rng, k, l, r);
        check_composite(&f, &g, out);
        check_duality(&f, out);
    }
}

// Pith-Beck-Chevalley.

/// Every pullback square over the cospan `(b, r)` whose apex has at most
/// `apex` elements, one per ordering of the apex.
fn squares_over(b: &FinFun, r: &FinFun, apex: usize) -> Vec<Square> {
    let pb = pullback(b, r).expect("common target");
    if pb.apex() > apex {
        return Vec::new();
    }
    Perm::all(pb.apex())
        .map(|p| {
            let sigma = FinFun::new(pb.apex(), p.into_images()).expect("permutation");
            Square::new(sigma.then(pb.p2()).expect("apex"), sigma.then(pb.p1()).expect("apex"), r.clone(), b.clone())
                .expect("square")
        })
        .collect()
}

/// All pullback squares with every set of size at most `n`.
pub fn squares_upto(n: usize) -> Vec<Square> {
    let mut v = Vec::new();
    for c3 in 0..=n {
        for c2 in 0..=n {
            for c1 in 0..=n {
                for b in FinFun::all(c2, c3) {
                    for r in FinFun::all(c1, c3) {
                        v.extend(squares_over(&b, &r, n));
                    }
                }
            }
        }
    }
    v
}

fn functions_upto(n: usize) -> Vec<FinFun> {
    (0..=n).flat_map(|a| (0..=n).flat_map(move |b| FinFun::all(a, b))).collect()
}

fn pbc(cfg: &SuiteConfig, out: &mut SuiteOutcome) {
    let sys = lambda_system();
    let n = cfg.max_size;
    let funs = functions_upto(n);
    for f in &funs {
        out.sides("horizontal unit", horizontal_unit_law(&sys, f), || format!("{f}"));
        out.sides("vertical unit", vertical_unit_law(&sys, f), || format!("{f}"));
        match (u_unit_laws(&sys, f), v_unit_laws(&sys, f)) {
            (Ok(us), Ok(vs)) => {
                for (law, s) in ["u unit", "u unit", "v unit", "v unit"].into_iter().zip(us.into_iter().chain(vs)) {
                    out.sides(law, Ok(s), || format!("{f}"));
                }
            }
            (Err(e), _) | (_, Err(e)) => out.check("unit laws", Err(e), || format!("{f}")),
        }
    }
    for f in &funs {
        for g in funs.iter().filter(|g| g.src() == f.dst()) {
            for h in funs.iter().filter(|h| h.src() == g.dst()) {
                out.sides("u associativity", u_assoc_law(&sys, f, g, h), || format!("{f} {g} {h}"));
                out.sides("v associativity", v_assoc_law(&sys, f, g, h), || format!("{f} {g} {h}"));
            }
        }
    }
    let squares = squares_upto(n);
    for sq in &squares {
        out.check("lists are linear", lists_are_linear(&sys, sq), || format!("{sq:?}"));
        out.check("base change is invertible", sys.base_change(sq).map(|c| c.inverse().src() == c.dst()), || {
            format!("{sq:?}")
        });
    }
    // Pasting: the second square is any one from the list, the first is
    // every pullback square that fits against it.
    for r in &squares {
        for c2 in 0..=n {
            for bottom in FinFun::all(c2, r.left.dst()) {
                for l in squares_over(&bottom, &r.left, n) {
                    out.sides("horizontal pasting", horizontal_pasting_law(&sys, &l, r), || format!("{l:?} {r:?}"));
                }
            }
        }
        for c1 in 0..=n {
            for right in FinFun::all(c1, r.top.dst()) {
                for t in squares_over(&r.top, &right, n) {
                    out.sides("vertical pasting", vertical_pasting_law(&sys, &t, r), || format!("{t:?} {r:?}"));
                }
            }
        }
    }
}

// Main theorem.

fn fiber_oracle(s: &Span, k: usize) -> Multiset<usize> {
    (0..s.apex()).filter(|&a| s.right().apply(a) == k).map(|a| s.left().apply(a)).collect()
}

fn generators(n: usize) -> Vec<ObjTerm<usize>> {
    (0..n).map(ObjTerm::Gen).collect()
}

fn decide_law(sides: Result<LawSides>, n: usize) -> Result<bool> {
    let m = FreeTermModel::new();
    let pairs = instantiate_sides(&sides?, &m, &generators(n))?;
    for (a, b) in &pairs {
        if !decide_equal(a, b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_unary(s: &Span, out: &mut SuiteOutcome) {
    let sys = lambda_system();
    let n = s.source();
    match comp_unit_laws(&sys, s) {
        Ok([r, l]) => {
            out.check("right unit cell", decide_law(Ok(r), n), || format!("{s:?}"));
            out.check("left unit cell", decide_law(Ok(l), n), || format!("{s:?}"));
        }
        Err(e) => out.check("unit cells", Err(e), || format!("{s:?}")),
    }
    let cells = apex_relabelings(s);
    for a in &cells {
        for b in apex_relabelings(a.dst()) {
            out.check("cell functoriality", decide_law(cell_functoriality_law(&sys, a, &b), n), || format!("{a:?} {b:?}"));
        }
    }
    out.check(
        "identity cell",
        pseudofunctor_on_cell(&sys, &SpanCell::identity(s)).map(|c| c.is_identity()),
        || format!("{s:?}"),
    );
}

fn check_pair(s: &Span, t: &Span, out: &mut SuiteOutcome) {
    let sys = lambda_system();
    for phi in apex_relabelings(s) {
        for psi in apex_relabelings(t) {
            out.check("composition naturality", decide_law(comp_naturality_law(&sys, &phi, &psi), s.source()), || {
                format!("{phi:?} {psi:?}")
            });
        }
    }
}

fn check_triple(s: &Span, t: &Span, w: &Span, out: &mut SuiteOutcome) {
    let sys = lambda_system();
    out.check("associativity", decide_law(comp_associativity_law(&sys, s, t, w), s.source()), || {
        format!("{s:?} {t:?} {w:?}")
    });
}

fn main_theorem(cfg: &SuiteConfig, out: &mut SuiteOutcome) {
    let m = FreeTermModel::new();
    let spans = spans_upto(cfg.max_size);
    for s in &spans {
        let x = generators(s.source());
        let ok = unbias_eval(s, &m, &x).map(|r| {
            r.objects.len() == s.target()
                && r.objects.iter().enumerate().all(|(k, o)| normalize_obj(o).underlying_multiset() == fiber_oracle(s, k))
        });
        out.check("fiber multiset", ok, || format!("{s:?}"));
        check_unary(s, out);
    }
    let pair_bound = out.capped("composition naturality", cfg, 2);
    let small = spans_upto(pair_bound);
    for s in &small {
        for t in small.iter().filter(|t| t.source() == s.target()) {
            check_pair(s, t, out);
        }
    }
    let triple_bound = out.capped("associativity", cfg, 2);
    let small = spans_upto(triple_bound);
    for s in &small {
        for t in small.iter().filter(|t| t.source() == s.target()) {
            for w in small.iter().filter(|w| w.source() == t.target()) {
                check_triple(s, t, w, out);
            }
        }
    }
    let mut rng = rng(cfg);
    let r = cfg.random_size;
    for _ in 0..cfg.samples {
        let objs: Vec<usize> = (0..4).map(|_| rng.gen_range(0..=r)).collect();
        let sp: Vec<Span> = (0..3).map(|i| random_span(&mut rng, objs[i], objs[i + 1], r)).collect();
        check_pair(&sp[0], &sp[1], out);
        check_triple(&sp[0], &sp[1], &sp[2], out);
    }
}
