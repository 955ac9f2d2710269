use std::fmt::Write as _;
use std::io::Read;

use serde::Serialize;

use unbias_core::finspan::{self, FinFun, Span};
use unbias_core::free_smc::{
    canonical_term, decide_equal, normalize, normalize_obj, FreeTermModel, ObjTerm, SListModel, SmcModel,
};
use unbias_core::slist::{word_from_hom, SList, SListHom};
use unbias_core::suites::{Suite, SuiteConfig, SuiteOutcome};
use unbias_core::unbias::{comp_cell, unbias_eval, unit_cell};

use crate::error::CliError;
use crate::record::{envelope, read_family, read_span, FunRecord, SpanRecord};
use crate::syntax::{parse_typed, render_mor, render_obj, Obj};
use crate::{Cli, Command, Format, Model};

/// Runs a parsed command line, returning its output and exit code.
pub fn execute(cli: &Cli) -> Result<(String, i32), CliError> {
    let fmt = cli.format;
    match &cli.command {
        Command::Normalize { term } => normalize_cmd(term, fmt).map(|s| (s, 0)),
        Command::Equal { lhs, rhs } => equal_cmd(lhs, rhs, fmt),
        Command::SpanCompose { first, second, cells } => {
            span_compose_cmd(&read_span(&load(first)?)?, &read_span(&load(second)?)?, *cells, fmt).map(|s| (s, 0))
        }
        Command::Unbias { span, family, model, cells, then } => {
            let s = read_span(&load(span)?)?;
            let x = read_family(&load(family)?)?;
            let t = then.as_deref().map(|t| load(t).and_then(|t| read_span(&t))).transpose()?;
            unbias_cmd(&s, &x, t.as_ref(), *model, *cells, fmt).map(|s| (s, 0))
        }
        Command::CheckLaws { suite, max_size, seed, samples } => check_laws_cmd(suite, *max_size, *seed, *samples, fmt),
    }
}

/// A record argument: inline JSON, `-` for stdin, or a file path.
fn load(arg: &str) -> Result<String, CliError> {
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|source| CliError::Io { path: "stdin".into(), source })?;
        return Ok(s);
    }
    std::fs::read_to_string(arg).map_err(|source| CliError::Io { path: arg.into(), source })
}

fn list(l: &SList<String>) -> String {
    format!("[{}]", l.labels().join(","))
}

fn seq(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

#[derive(Serialize)]
struct NormalForm {
    source: Vec<String>,
    target: Vec<String>,
    phi: Vec<usize>,
    word: Vec<usize>,
    canonical: String,
}

pub fn normalize_cmd(text: &str, fmt: Format) -> Result<String, CliError> {
    let t = parse_typed(text)?;
    let h = normalize(&t)?;
    let word = word_from_hom(&h).positions;
    let canonical = render_mor(&canonical_term(&h));
    Ok(match fmt {
        Format::Text => format!(
            "source: {}\ntarget: {}\nphi: {}\nword: {}\ncanonical: {}\n",
            list(h.src()),
            list(h.dst()),
            h.phi(),
            seq(&word),
            canonical
        ),
        Format::Record => {
            let nf = NormalForm {
                source: h.src().labels().to_vec(),
                target: h.dst().labels().to_vec(),
                phi: h.phi().images().to_vec(),
                word,
                canonical,
            };
            envelope("normalize", nf) + "\n"
        }
    })
}

#[derive(Serialize)]
struct Decision {
    equal: bool,
    lhs_phi: Vec<usize>,
    rhs_phi: Vec<usize>,
}

pub fn equal_cmd(lhs: &str, rhs: &str, fmt: Format) -> Result<(String, i32), CliError> {
    let (s, t) = (parse_typed(lhs)?, parse_typed(rhs)?);
    let (bs, bt) = (s.boundary()?, t.boundary()?);
    if bs != bt {
        let show = |(a, b): &(Obj, Obj)| format!("{} -> {}", render_obj(a), render_obj(b));
        return Err(CliError::Boundary { lhs: show(&bs), rhs: show(&bt) });
    }
    let equal = decide_equal(&s, &t)?;
    let (ps, pt) = (normalize(&s)?.phi().clone(), normalize(&t)?.phi().clone());
    let out = match fmt {
        Format::Text if equal => "true\n".to_string(),
        Format::Text => format!("false\nlhs phi: {ps}\nrhs phi: {pt}\n"),
        Format::Record => {
            let d = Decision { equal, lhs_phi: ps.images().to_vec(), rhs_phi: pt.images().to_vec() };
            envelope("equal", d) + "\n"
        }
    };
    Ok((out, if equal { 0 } else { 1 }))
}

#[derive(Serialize)]
struct UnitorMaps {
    left_unitor: FunRecord,
    right_unitor: FunRecord,
}

#[derive(Serialize)]
struct Composite {
    #[serde(flatten)]
    span: SpanRecord,
    apex: usize,
    pairs: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cells: Option<UnitorMaps>,
}

pub fn span_compose_cmd(s: &Span, t: &Span, cells: bool, fmt: Format) -> Result<String, CliError> {
    if s.target() != t.source() {
        return Err(unbias_core::error::Error::TargetMismatch(format!(
            "first span ends at a set of size {}, second starts at {}",
            s.target(),
            t.source()
        ))
        .into());
    }
    let c = finspan::composite(s, t)?;
    let maps = if cells {
        Some(UnitorMaps {
            left_unitor: FunRecord::of(finspan::left_unitor(&c.span)?.map()),
            right_unitor: FunRecord::of(finspan::right_unitor(&c.span)?.map()),
        })
    } else {
        None
    };
    Ok(match fmt {
        Format::Text => {
            let mut out = String::new();
            let pairs: Vec<String> = c.pullback.pairs().iter().map(|(a, b)| format!("({a},{b})")).collect();
            writeln!(out, "apex: {}", c.span.apex()).unwrap();
            writeln!(out, "left: {}", c.span.left()).unwrap();
            writeln!(out, "right: {}", c.span.right()).unwrap();
            writeln!(out, "pairs: [{}]", pairs.join(",")).unwrap();
            if let Some(m) = &maps {
                writeln!(out, "left unitor: {}", fun_text(&m.left_unitor)).unwrap();
                writeln!(out, "right unitor: {}", fun_text(&m.right_unitor)).unwrap();
            }
            out
        }
        Format::Record => {
            let rec = Composite {
                span: SpanRecord::of(&c.span),
                apex: c.span.apex(),
                pairs: c.pullback.pairs().to_vec(),
                cells: maps,
            };
            envelope("span", rec) + "\n"
        }
    })
}

fn fun_text(f: &FunRecord) -> String {
    FinFun::new(f.dst, f.img.clone()).map(|f| f.to_string()).unwrap_or_default()
}

#[derive(Serialize)]
struct Unbiased {
    size: usize,
    values: Vec<String>,
    model: &'static str,
    fibers: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    unit_cells: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    comp_cells: Option<Vec<String>>,
}

/// How one model's objects and morphisms are printed.
struct Printer<M: SmcModel> {
    model: M,
    name: &'static str,
    objects: Vec<M::Obj>,
    obj: fn(&M::Obj) -> String,
    /// The object as a term, for records that are read back as families.
    value: fn(&M::Obj) -> String,
    mor: fn(&M::Mor) -> String,
}

pub fn unbias_cmd(s: &Span, x: &[Obj], then: Option<&Span>, model: Model, cells: bool, fmt: Format) -> Result<String, CliError> {
    match model {
        Model::Term => unbias_in(
            Printer {
                model: FreeTermModel::new(),
                name: "term", objects: x.to_vec(),
                obj: render_obj,
                value: render_obj,
                mor: render_mor,
            },
            s,
            then,
            cells,
            fmt,
        ),
        Model::Slist => unbias_in(
            Printer {
                model: SListModel::new(),
                name: "slist",
                objects: x.iter().map(normalize_obj).collect(),
                obj: list,
                value: |l: &SList<String>| render_obj(&ObjTerm::nest(l)),
                mor: |h: &SListHom<String>| format!("{} -> {} phi={}", list(h.src()), list(h.dst()), h.phi()),
            },
            s,
            then,
            cells,
            fmt,
        ),
    }
}

fn unbias_in<M: SmcModel>(p: Printer<M>, s: &Span, then: Option<&Span>, cells: bool, fmt: Format) -> Result<String, CliError> {
    let r = unbias_eval(s, &p.model, &p.objects)?;
    let units = if cells { Some(unit_cell(s.source(), &p.model, &p.objects)?) } else { None };
    let comps = match then {
        Some(t) if cells => {
            if s.target() != t.source() {
                return Err(unbias_core::error::Error::TargetMismatch(format!(
                    "the span ends at a set of size {}, the next starts at {}",
                    s.target(),
                    t.source()
                ))
                .into());
            }
            Some(comp_cell(s, t, &p.model, &p.objects)?)
        }
        _ => None,
    };
    let mor = |v: Option<Vec<M::Mor>>| v.map(|v| v.iter().map(p.mor).collect::<Vec<String>>());
    let (units, comps) = (mor(units), mor(comps));
    Ok(match fmt {
        Format::Text => {
            let mut out = String::new();
            for (k, (fiber, o)) in r.fibers.iter().zip(&r.objects).enumerate() {
                let xs: Vec<String> = fiber.labels().iter().map(|j| format!("x({j})")).collect();
                writeln!(out, "k={k}: [{}] = {}", xs.join(", "), (p.obj)(o)).unwrap();
            }
            for (j, c) in units.iter().flatten().enumerate() {
                writeln!(out, "unit j={j}: {c}").unwrap();
            }
            for (l, c) in comps.iter().flatten().enumerate() {
                writeln!(out, "comp l={l}: {c}").unwrap();
            }
            out
        }
        Format::Record => {
            let rec = Unbiased {
                size: r.objects.len(),
                values: r.objects.iter().map(p.value).collect(),
                model: p.name,
                fibers: r.fibers.iter().map(|f| f.labels().to_vec()).collect(),
                unit_cells: units,
                comp_cells: comps,
            };
            envelope("family", rec) + "\n"
        }
    })
}

#[derive(Serialize)]
struct SuiteRecord<'a> {
    suite: &'static str,
    max_size: usize,
    random_size: usize,
    samples: usize,
    checked: usize,
    violations: &'a [String],
    counts: &'a std::collections::BTreeMap<String, usize>,
    shortfalls: &'a [String],
}

#[derive(Serialize)]
struct LawsRecord<'a> {
    seed: u64,
    suites: Vec<SuiteRecord<'a>>,
}

pub fn check_laws_cmd(
    name: &str,
    max_size: Option<usize>,
    seed: u64,
    samples: Option<usize>,
    fmt: Format,
) -> Result<(String, i32), CliError> {
    let suites: Vec<Suite> = if name == "all" {
        Suite::ALL.to_vec()
    } else {
        let s = Suite::from_name(name).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
            CliError::Usage(format!("unknown suite `{name}`; expected one of {} or all", names.join(", ")))
        })?;
        vec![s]
    };
    let runs: Vec<(Suite, SuiteConfig, SuiteOutcome)> = suites
        .into_iter()
        .map(|s| {
            let mut cfg = s.default_config(seed);
            if let Some(n) = max_size {
                cfg.max_size = n;
                cfg.random_size = cfg.random_size.max(n);
            }
            if let Some(k) = samples {
                cfg.samples = k;
            }
            (s, cfg, s.run(&cfg))
        })
        .collect();
    let ok = runs.iter().all(|(_, _, o)| o.is_ok());
    let out = match fmt {
        Format::Text => {
            let mut out = String::new();
            for (s, cfg, o) in &runs {
                let status = if o.is_ok() { "ok" } else { "FAILED" };
                writeln!(
                    out,
                    "{s}: {status}, {} instances, {} violations (max size {}, random size {}, {} samples, seed {seed})",
                    o.report.checked,
                    o.report.violations.len(),
                    cfg.max_size,
                    cfg.random_size,
                    cfg.samples
                )
                .unwrap();
                for (law, n) in &o.counts {
                    writeln!(out, "  {law}: {n}").unwrap();
                }
                for v in o.report.violations.iter().take(10) {
                    writeln!(out, "  violation: {v}").unwrap();
                }
                for sf in &o.shortfalls {
                    writeln!(out, "  shortfall: {sf}").unwrap();
                }
            }
            out
        }
        Format::Record => {
            let suites = runs
                .iter()
                .map(|(s, cfg, o)| SuiteRecord {
                    suite: s.name(),
                    max_size: cfg.max_size,
                    random_size: cfg.random_size,
                    samples: cfg.samples,
                    checked: o.report.checked,
                    violations: &o.report.violations,
                    counts: &o.counts,
                    shortfalls: &o.shortfalls,
                })
                .collect();
            envelope("check-laws", LawsRecord { seed, suites }) + "\n"
        }
    };
    Ok((out, if ok { 0 } else { 1 }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_obj;

    #[test]
    fn normalize_associator() {
        let out = normalize_cmd("a x y z", Format::Text).unwrap();
        assert!(out.starts_with("source: [x,y,z]\ntarget: [x,y,z]\nphi: [0,1,2]\nword: []\n"), "{out}");
    }

    #[test]
    fn equal_decisions() {
        let hex_l = "a x y z ; b x (y * z) ; a y z x";
        let hex_r = "(b x y * id z) ; a y x z ; (id y * b x z)";
        assert_eq!(equal_cmd(hex_l, hex_r, Format::Text).unwrap(), ("true\n".into(), 0));
        let (out, code) = equal_cmd("b x x", "id (x*x)", Format::Text).unwrap();
        assert_eq!((out.as_str(), code), ("false\nlhs phi: [1,0]\nrhs phi: [0,1]\n", 1));
        assert!(equal_cmd("b x y", "id (x*y)", Format::Text).is_err());
    }

    #[test]
    fn unbias_missing_entry() {
        let s = Span::new(FinFun::new(2, vec![0, 1]).unwrap(), FinFun::new(1, vec![0, 0]).unwrap()).unwrap();
        let x = vec![parse_obj("p").unwrap()];
        let err = unbias_cmd(&s, &x, None, Model::Term, false, Format::Text).unwrap_err();
        assert_eq!(err.to_string(), "no object assigned to label 1");
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(check_laws_cmd("nope", None, 0, None, Format::Text), Err(CliError::Usage(_))));
    }
}
