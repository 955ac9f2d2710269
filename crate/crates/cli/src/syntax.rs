//! Concrete syntax for structural morphisms.
//!
//! ```text
//! obj := "I" | ident | "(" obj "*" obj ")"
//! mor := term (";" term)*
//! term := "id" obj | "a" obj obj obj | "l" obj | "r" obj | "b" obj obj
//!       | "inv" "(" mor ")" | "(" mor "*" mor ")" | "(" mor ")"
//! ```
//!
//! `;` is diagram-order composition and associates to the left. The words
//! `I id a l r b inv` are reserved and cannot name generators.

use std::fmt;

use unbias_core::free_smc::{MorTerm, ObjTerm};

use crate::error::CliError;

pub type Obj = ObjTerm<String>;
pub type Mor = MorTerm<String>;

const RESERVED: [&str; 7] = ["I", "id", "a", "l", "r", "b", "inv"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    Star,
    Semi,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn syntax(pos: Pos, msg: impl Into<String>) -> CliError {
    CliError::Syntax { line: pos.line, col: pos.col, msg: msg.into() }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, CliError> {
    let mut toks = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '*' => Some(Tok::Star),
            ';' => Some(Tok::Semi),
            _ => None,
        };
        if let Some(t) = single {
            chars.next();
            col += 1;
            toks.push((t, pos));
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if !(c.is_alphanumeric() || c == '_' || c == '\'') {
                    break;
                }
                s.push(c);
                chars.next();
                col += 1;
            }
            toks.push((Tok::Ident(s), pos));
        } else {
            return Err(syntax(pos, format!("unexpected character `{c}`")));
        }
    }
    toks.push((Tok::End, Pos { line, col }));
    Ok(toks)
}

/// A morphism parse tree; every node keeps the position where it starts so
/// that type errors can point into the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorAst {
    pub pos: Pos,
    pub node: MorNode,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorNode {
    Id(Obj),
    Assoc(Obj, Obj, Obj),
    LeftUnitor(Obj),
    RightUnitor(Obj),
    Braid(Obj, Obj),
    /// The position is that of the `;`.
    Comp(Box<MorAst>, Box<MorAst>, Pos),
    Tensor(Box<MorAst>, Box<MorAst>),
    Inv(Box<MorAst>),
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &(Tok, Pos) {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if t.0 != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<Pos, CliError> {
        let (t, pos) = self.bump();
        if t == want {
            Ok(pos)
        } else {
            Err(syntax(pos, format!("expected {want}, found {t}")))
        }
    }

    fn finish(&mut self) -> Result<(), CliError> {
        match self.peek() {
            (Tok::End, _) => Ok(()),
            (t, pos) => Err(syntax(*pos, format!("unexpected {t} after a complete term"))),
        }
    }

    fn obj(&mut self) -> Result<Obj, CliError> {
        match self.bump() {
            (Tok::Ident(s), _) if s == "I" => Ok(ObjTerm::Unit),
            (Tok::Ident(s), pos) if RESERVED.contains(&s.as_str()) => {
                Err(syntax(pos, format!("`{s}` is reserved and cannot name an object")))
            }
            (Tok::Ident(s), _) => Ok(ObjTerm::Gen(s)),
            (Tok::LParen, _) => {
                let a = self.obj()?;
                self.expect(Tok::Star)?;
                let b = self.obj()?;
                self.expect(Tok::RParen)?;
                Ok(ObjTerm::tensor(a, b))
            }
            (t, pos) => Err(syntax(pos, format!("expected an object, found {t}"))),
        }
    }

    fn mor(&mut self) -> Result<MorAst, CliError> {
        let mut acc = self.term()?;
        while let (Tok::Semi, pos) = self.peek().clone() {
            self.bump();
            let rhs = self.term()?;
            acc = MorAst { pos: acc.pos, node: MorNode::Comp(Box::new(acc), Box::new(rhs), pos) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MorAst, CliError> {
        let (tok, pos) = self.bump();
        let node = match tok {
            Tok::Ident(s) => match s.as_str() {
                "id" => MorNode::Id(self.obj()?),
                "a" => MorNode::Assoc(self.obj()?, self.obj()?, self.obj()?),
                "l" => MorNode::LeftUnitor(self.obj()?),
                "r" => MorNode::RightUnitor(self.obj()?),
                "b" => MorNode::Braid(self.obj()?, self.obj()?),
                "inv" => {
                    self.expect(Tok::LParen)?;
                    let inner = self.mor()?;
                    self.expect(Tok::RParen)?;
                    MorNode::Inv(Box::new(inner))
                }
                _ => return Err(syntax(pos, format!("expected a morphism, found object name `{s}`"))),
            },
            Tok::LParen => {
                let first = self.mor()?;
                match self.bump() {
                    (Tok::RParen, _) => return Ok(first),
                    (Tok::Star, _) => {
                        let second = self.mor()?;
                        self.expect(Tok::RParen)?;
                        MorNode::Tensor(Box::new(first), Box::new(second))
                    }
                    (t, p) => return Err(syntax(p, format!("expected `*` or `)`, found {t}"))),
                }
            }
            t => return Err(syntax(pos, format!("expected a morphism, found {t}"))),
        };
        Ok(MorAst { pos, node })
    }
}

pub fn parse_obj(text: &str) -> Result<Obj, CliError> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let o = p.obj()?;
    p.finish()?;
    Ok(o)
}

pub fn parse_ast(text: &str) -> Result<MorAst, CliError> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let m = p.mor()?;
    p.finish()?;
    Ok(m)
}

/// Parses a morphism without checking that its composites meet.
pub fn parse_mor(text: &str) -> Result<Mor, CliError> {
    Ok(parse_ast(text)?.to_term())
}

/// Parses and type-checks a morphism, locating the first composite whose
/// sides do not meet.
pub fn parse_typed(text: &str) -> Result<Mor, CliError> {
    let ast = parse_ast(text)?;
    let term = ast.to_term();
    if let Err(e) = term.boundary() {
        return Err(match ast.first_ill_typed() {
            Some((pos, msg)) => CliError::IllTyped { line: pos.line, col: pos.col, msg },
            None => e.into(),
        });
    }
    Ok(term)
}

impl MorAst {
    pub fn to_term(&self) -> Mor {
        match &self.node {
            MorNode::Id(x) => MorTerm::Id(x.clone()),
            MorNode::Assoc(x, y, z) => MorTerm::Assoc(x.clone(), y.clone(), z.clone()),
            MorNode::LeftUnitor(x) => MorTerm::LeftUnitor(x.clone()),
            MorNode::RightUnitor(x) => MorTerm::RightUnitor(x.clone()),
            MorNode::Braid(x, y) => MorTerm::Braid(x.clone(), y.clone()),
            MorNode::Comp(f, g, _) => MorTerm::comp(f.to_term(), g.to_term()),
            MorNode::Tensor(f, g) => MorTerm::tensor(f.to_term(), g.to_term()),
            MorNode::Inv(f) => MorTerm::inv(f.to_term()),
        }
    }

    /// Position of the innermost composite whose sides do not meet.
    fn first_ill_typed(&self) -> Option<(Pos, String)> {
        match &self.node {
            MorNode::Comp(f, g, pos) => f.first_ill_typed().or_else(|| g.first_ill_typed()).or_else(|| {
                let (t, s) = (f.to_term().target().ok()?, g.to_term().source().ok()?);
                (t != s).then(|| (*pos, format!("left side ends at {} but right side starts at {}", render_obj(&t), render_obj(&s))))
            }),
            MorNode::Tensor(f, g) => f.first_ill_typed().or_else(|| g.first_ill_typed()),
            MorNode::Inv(f) => f.first_ill_typed(),
            _ => None,
        }
    }
}

pub fn render_obj(o: &Obj) -> String {
    match o {
        ObjTerm::Unit => "I".into(),
        ObjTerm::Gen(s) => s.clone(),
        ObjTerm::Tensor(a, b) => format!("({} * {})", render_obj(a), render_obj(b)),
    }
}

pub fn render_mor(t: &Mor) -> String {
    let o = render_obj;
    match t {
        MorTerm::Id(x) => format!("id {}", o(x)),
        MorTerm::Assoc(x, y, z) => format!("a {} {} {}", o(x), o(y), o(z)),
        MorTerm::LeftUnitor(x) => format!("l {}", o(x)),
        MorTerm::RightUnitor(x) => format!("r {}", o(x)),
        MorTerm::Braid(x, y) => format!("b {} {}", o(x), o(y)),
        MorTerm::Comp(f, g) => match **g {
            MorTerm::Comp(..) => format!("{} ; ({})", render_mor(f), render_mor(g)),
            _ => format!("{} ; {}", render_mor(f), render_mor(g)),
        },
        MorTerm::Tensor(f, g) => format!("({} * {})", render_mor(f), render_mor(g)),
        MorTerm::Inv(f) => format!("inv({})", render_mor(f)),
    }
}
