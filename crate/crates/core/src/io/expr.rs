//! Graph expression language.
//!
//! ```text
//! expr     := term ("x" term)*                      left-associative product
//! term     := "P(" int ")" | "C(" int ")" | "K(" int ")"
//!           | "Theta(" int ("," int)* ")"
//!           | "join(" expr "," expr ["," (pairs | "none")] ")"
//!           | "power(" expr "," int ")"
//!           | "edit(" expr (";" ("add" | "del") "=" pairs)* ")"
//!           | "file(" path ")"
//!           | "(" expr ")"
//! pairs    := pair ("," pair)*
//! pair     := "(" end "," end ")"                   1-based vertex numbers
//! end      := int | "*"                             "*" only inside join
//! ```
//!
//! Whitespace is ignored everywhere except inside paths.

use std::fmt;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::graph::{build_family, cartesian_product, edit_edges, graph_power, join, FamilySpec, Graph};

/// Source position (1-based). Positions never take part in AST equality,
/// so a printed-and-reparsed AST compares equal to the original.
#[derive(Clone, Copy, Debug, Default)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl PartialEq for Pos {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl Eq for Pos {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AtomKind {
    P,
    C,
    K,
    Theta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Endpoint {
    Vertex(usize),
    All,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphExpr {
    Atom {
        kind: AtomKind,
        params: Vec<usize>,
        pos: Pos,
    },
    Product(Box<GraphExpr>, Box<GraphExpr>),
    Join {
        left: Box<GraphExpr>,
        right: Box<GraphExpr>,
        /// `None` is the full join.
        cross: Option<Vec<(Endpoint, Endpoint)>>,
        pos: Pos,
    },
    Power {
        base: Box<GraphExpr>,
        r: usize,
        pos: Pos,
    },
    Edit {
        base: Box<GraphExpr>,
        add: Vec<(usize, usize)>,
        del: Vec<(usize, usize)>,
        pos: Pos,
    },
    File {
        path: String,
        pos: Pos,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("syntax error at {line}:{column}: {message} (expected {})", expected.join(" | "))]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub expected: Vec<String>,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(usize),
    LParen,
    RParen,
    Comma,
    Semi,
    Eq,
    Star,
    Times,
    Path(String),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "{s:?}"),
            Tok::Int(n) => write!(f, "{n}"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::Comma => f.write_str("','"),
            Tok::Semi => f.write_str("';'"),
            Tok::Eq => f.write_str("'='"),
            Tok::Star => f.write_str("'*'"),
            Tok::Times => f.write_str("'x'"),
            Tok::Path(p) => write!(f, "path {p:?}"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> std::result::Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks: Vec<(Tok, Pos)> = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    let advance = |c: char, line: &mut usize, column: &mut usize| {
        if c == '\n' {
            *line += 1;
            *column = 1;
        } else {
            *column += 1;
        }
    };
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column };
        if c.is_whitespace() {
            advance(c, &mut line, &mut column);
            i += 1;
            continue;
        }
        // `file(` switches to raw path mode up to the closing parenthesis
        let after_file = matches!(toks.as_slice(), [.., (Tok::Ident(f), _), (Tok::LParen, _)] if f == "file");
        if after_file {
            let start = i;
            while i < chars.len() && chars[i] != ')' {
                advance(chars[i], &mut line, &mut column);
                i += 1;
            }
            let raw: String = chars[start..i].iter().collect();
            let path = raw.trim().trim_matches('"').to_string();
            if path.is_empty() {
                return Err(ParseError {
                    line: pos.line,
                    column: pos.column,
                    message: "empty path".into(),
                    expected: vec!["path".into()],
                });
            }
            toks.push((Tok::Path(path), pos));
            continue;
        }
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            ';' => Some(Tok::Semi),
            '=' => Some(Tok::Eq),
            '*' => Some(Tok::Star),
            // product operator: an `x` right after a closed term
            'x' if matches!(toks.last(), Some((Tok::RParen, _))) => Some(Tok::Times),
            _ => None,
        };
        if let Some(t) = single {
            toks.push((t, pos));
            advance(c, &mut line, &mut column);
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                advance(chars[i], &mut line, &mut column);
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let n = s.parse().map_err(|_| ParseError {
                line: pos.line,
                column: pos.column,
                message: format!("integer {s} is too large"),
                expected: vec!["integer".into()],
            })?;
            toks.push((Tok::Int(n), pos));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                advance(chars[i], &mut line, &mut column);
                i += 1;
            }
            toks.push((Tok::Ident(chars[start..i].iter().collect()), pos));
        } else {
            return Err(ParseError {
                line: pos.line,
                column: pos.column,
                message: format!("unexpected character {c:?}"),
                expected: vec!["term".into()],
            });
        }
    }
    toks.push((Tok::End, Pos { line, column }));
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

const TERM_STARTS: &[&str] = &["P", "C", "K", "Theta", "join", "power", "edit", "file", "'('"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn fail<T>(&self, expected: &[&str]) -> std::result::Result<T, ParseError> {
        let pos = self.pos();
        Err(ParseError {
            line: pos.line,
            column: pos.column,
            message: format!("unexpected {}", self.peek()),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        })
    }

    fn expect(&mut self, tok: Tok, name: &str) -> std::result::Result<(), ParseError> {
        if *self.peek() == tok {
            self.at += 1;
            Ok(())
        } else {
            self.fail(&[name])
        }
    }

    fn int(&mut self) -> std::result::Result<usize, ParseError> {
        match *self.peek() {
            Tok::Int(n) => {
                self.at += 1;
                Ok(n)
            }
            _ => self.fail(&["integer"]),
        }
    }

    fn expr(&mut self) -> std::result::Result<GraphExpr, ParseError> {
        let mut e = self.term()?;
        while *self.peek() == Tok::Times {
            self.at += 1;
            let rhs = self.term()?;
            e = GraphExpr::Product(Box::new(e), Box::new(rhs));
        }
        Ok(e)
    }

    fn endpoint(&mut self, allow_star: bool) -> std::result::Result<Endpoint, ParseError> {
        match *self.peek() {
            Tok::Int(n) => {
                self.at += 1;
                Ok(Endpoint::Vertex(n))
            }
            Tok::Star if allow_star => {
                self.at += 1;
                Ok(Endpoint::All)
            }
            _ if allow_star => self.fail(&["integer", "'*'"]),
            _ => self.fail(&["integer"]),
        }
    }

    fn pairs(&mut self, allow_star: bool) -> std::result::Result<Vec<(Endpoint, Endpoint)>, ParseError> {
        let mut out = Vec::new();
        loop {
            self.expect(Tok::LParen, "'('")?;
            let a = self.endpoint(allow_star)?;
            self.expect(Tok::Comma, "','")?;
            let b = self.endpoint(allow_star)?;
            self.expect(Tok::RParen, "')'")?;
            out.push((a, b));
            // a comma continues the list only if another pair follows
            if *self.peek() == Tok::Comma && self.toks[self.at + 1].0 == Tok::LParen {
                self.at += 1;
            } else {
                return Ok(out);
            }
        }
    }

    fn int_pairs(&mut self) -> std::result::Result<Vec<(usize, usize)>, ParseError> {
        Ok(self
            .pairs(false)?
            .into_iter()
            .map(|p| match p {
                (Endpoint::Vertex(a), Endpoint::Vertex(b)) => (a, b),
                _ => unreachable!("stars rejected"),
            })
            .collect())
    }

    fn term(&mut self) -> std::result::Result<GraphExpr, ParseError> {
        let pos = self.pos();
        let name = match self.peek().clone() {
            Tok::Ident(name) => name,
            Tok::LParen => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                return Ok(e);
            }
            _ => return self.fail(TERM_STARTS),
        };
        let kind = match name.as_str() {
            "P" => Some(AtomKind::P),
            "C" => Some(AtomKind::C),
            "K" => Some(AtomKind::K),
            "Theta" => Some(AtomKind::Theta),
            "join" | "power" | "edit" | "file" => None,
            _ => return self.fail(TERM_STARTS),
        };
        self.at += 1;
        self.expect(Tok::LParen, "'('")?;
        let e = if let Some(kind) = kind {
            let mut params = vec![self.int()?];
            if kind == AtomKind::Theta {
                while *self.peek() == Tok::Comma {
                    self.at += 1;
                    params.push(self.int()?);
                }
            }
            GraphExpr::Atom { kind, params, pos }
        } else {
            match name.as_str() {
                "join" => {
                    let left = self.expr()?;
                    self.expect(Tok::Comma, "','")?;
                    let right = self.expr()?;
                    let cross = if *self.peek() == Tok::Comma {
                        self.at += 1;
                        if *self.peek() == Tok::Ident("none".into()) {
                            self.at += 1;
                            Some(Vec::new())
                        } else if *self.peek() == Tok::LParen {
                            Some(self.pairs(true)?)
                        } else {
                            return self.fail(&["'('", "none"]);
                        }
                    } else {
                        None
                    };
                    GraphExpr::Join {
                        left: Box::new(left),
                        right: Box::new(right),
                        cross,
                        pos,
                    }
                }
                "power" => {
                    let base = self.expr()?;
                    self.expect(Tok::Comma, "','")?;
                    let r = self.int()?;
                    GraphExpr::Power {
                        base: Box::new(base),
                        r,
                        pos,
                    }
                }
                "edit" => {
                    let base = self.expr()?;
                    let (mut add, mut del) = (Vec::new(), Vec::new());
                    while *self.peek() == Tok::Semi {
                        self.at += 1;
                        let which = match self.peek() {
                            Tok::Ident(s) if s == "add" || s == "del" => s.clone(),
                            _ => return self.fail(&["add", "del"]),
                        };
                        self.at += 1;
                        self.expect(Tok::Eq, "'='")?;
                        let pairs = self.int_pairs()?;
                        if which == "add" {
                            add.extend(pairs);
                        } else {
                            del.extend(pairs);
                        }
                    }
                    GraphExpr::Edit {
                        base: Box::new(base),
                        add,
                        del,
                        pos,
                    }
                }
                _ => match self.peek().clone() {
                    Tok::Path(path) => {
                        self.at += 1;
                        GraphExpr::File { path, pos }
                    }
                    _ => return self.fail(&["path"]),
                },
            }
        };
        self.expect(Tok::RParen, "')'")?;
        Ok(e)
    }
}

pub fn parse_expr(text: &str) -> std::result::Result<GraphExpr, ParseError> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail(&["'x'", "end of input"]);
    }
    Ok(e)
}

fn eval_err(pos: Pos, e: Error) -> Error {
    Error::Eval {
        line: pos.line,
        column: pos.column,
        message: e.to_string(),
    }
}

fn one_based(pos: Pos, v: usize, n: usize) -> Result<usize> {
    if v == 0 || v > n {
        return Err(eval_err(
            pos,
            Error::precondition(format!("vertex {v} out of range 1..={n}")),
        ));
    }
    Ok(v - 1)
}

pub fn eval_expr(e: &GraphExpr) -> Result<Graph> {
    match e {
        GraphExpr::Atom { kind, params, pos } => {
            let spec = match kind {
                AtomKind::P => FamilySpec::Path(params[0]),
                AtomKind::C => FamilySpec::Cycle(params[0]),
                AtomKind::K => FamilySpec::Complete(params[0]),
                AtomKind::Theta => FamilySpec::Theta(params.clone()),
            };
            build_family(&spec).map_err(|err| eval_err(*pos, err))
        }
        GraphExpr::Product(l, r) => cartesian_product(&eval_expr(l)?, &eval_expr(r)?),
        GraphExpr::Join { left, right, cross, pos } => {
            let (g, h) = (eval_expr(left)?, eval_expr(right)?);
            let cross = match cross {
                None => None,
                Some(pairs) => {
                    let mut out = Vec::new();
                    for &(a, b) in pairs {
                        let lefts = match a {
                            Endpoint::All => (0..g.vertex_count()).collect(),
                            Endpoint::Vertex(v) => vec![one_based(*pos, v, g.vertex_count())?],
                        };
                        let rights: Vec<usize> = match b {
                            Endpoint::All => (0..h.vertex_count()).collect(),
                            Endpoint::Vertex(v) => vec![one_based(*pos, v, h.vertex_count())?],
                        };
                        for &x in &lefts {
                            out.extend(rights.iter().map(|&y| (x, y)));
                        }
                    }
                    Some(out)
                }
            };
            join(&g, &h, cross.as_deref()).map_err(|err| eval_err(*pos, err))
        }
        GraphExpr::Power { base, r, pos } => graph_power(&eval_expr(base)?, *r).map_err(|err| eval_err(*pos, err)),
        GraphExpr::Edit { base, add, del, pos } => {
            let g = eval_expr(base)?;
            let n = g.vertex_count();
            let conv = |pairs: &[(usize, usize)]| -> Result<Vec<(usize, usize)>> {
                pairs
                    .iter()
                    .map(|&(a, b)| Ok((one_based(*pos, a, n)?, one_based(*pos, b, n)?)))
                    .collect()
            };
            edit_edges(&g, &conv(add)?, &conv(del)?).map_err(|err| eval_err(*pos, err))
        }
        GraphExpr::File { path, pos } => {
            let bytes = std::fs::read(path).map_err(|err| eval_err(*pos, err.into()))?;
            super::read_graph_bytes(&bytes).map_err(|err| eval_err(*pos, err))
        }
    }
}

/// Parses and evaluates in one step.
pub fn eval_str(text: &str) -> Result<Graph> {
    eval_expr(&parse_expr(text)?)
}

fn fmt_pairs(f: &mut fmt::Formatter<'_>, pairs: impl Iterator<Item = (String, String)>) -> fmt::Result {
    let parts: Vec<String> = pairs.map(|(a, b)| format!("({a},{b})")).collect();
    f.write_str(&parts.join(","))
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::Vertex(v) => write!(f, "{v}"),
            Endpoint::All => f.write_str("*"),
        }
    }
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphExpr::Atom { kind, params, .. } => {
                let ps: Vec<String> = params.iter().map(ToString::to_string).collect();
                write!(f, "{kind:?}({})", ps.join(","))
            }
            GraphExpr::Product(l, r) => {
                if matches!(**r, GraphExpr::Product(..)) {
                    write!(f, "{l} x ({r})")
                } else {
                    write!(f, "{l} x {r}")
                }
            }
            GraphExpr::Join { left, right, cross, .. } => {
                write!(f, "join({left}, {right}")?;
                match cross {
                    None => {}
                    Some(p) if p.is_empty() => f.write_str(", none")?,
                    Some(p) => {
                        f.write_str(", ")?;
                        fmt_pairs(f, p.iter().map(|(a, b)| (a.to_string(), b.to_string())))?;
                    }
                }
                f.write_str(")")
            }
            GraphExpr::Power { base, r, .. } => write!(f, "power({base}, {r})"),
            GraphExpr::Edit { base, add, del, .. } => {
                write!(f, "edit({base}")?;
                if !add.is_empty() {
                    f.write_str("; add=")?;
                    fmt_pairs(f, add.iter().map(|(a, b)| (a.to_string(), b.to_string())))?;
                }
                if !del.is_empty() {
                    f.write_str("; del=")?;
                    fmt_pairs(f, del.iter().map(|(a, b)| (a.to_string(), b.to_string())))?;
                }
                f.write_str(")")
            }
            GraphExpr::File { path, .. } => write!(f, "file({path})"),
        }
    }
}
