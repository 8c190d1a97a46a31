//! Hand-written lexer and recursive-descent parser for `.elp` files.
//!
//! ```text
//! program := {rule}
//! rule    := head [","] [":-" body] "." | ":-" body "."
//! head    := lit {"|" lit} | "false"
//! body    := ext {"," ext} | "true"
//! ext     := ["not"] (lit | "K" lit | "M" lit)
//! lit     := ["-"] IDENT
//! ```
//!
//! `%` starts a comment running to the end of the line.

use super::ast::{
    ExtendedLiteral, ModalLiteral, ModalOp, ObjectLiteral, Program, Rule, SymbolTable,
};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Not,
    K,
    M,
    True,
    False,
    Minus,
    Pipe,
    Comma,
    If,
    Dot,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Not => "`not`".into(),
            Tok::K => "`K`".into(),
            Tok::M => "`M`".into(),
            Tok::True => "`true`".into(),
            Tok::False => "`false`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Comma => "`,`".into(),
            Tok::If => "`:-`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

fn error(pos: Pos, message: impl Into<String>) -> Error {
    Error::Parse {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>> {
    let mut toks = Vec::new();
    let mut chars = text.chars().peekable();
    let mut pos = Pos { line: 1, column: 1 };
    let advance = |c: char, pos: &mut Pos| {
        if c == '\n' {
            pos.line += 1;
            pos.column = 1;
        } else {
            pos.column += 1;
        }
    };
    while let Some(&c) = chars.peek() {
        let start = pos;
        match c {
            c if c.is_whitespace() => {
                chars.next();
                advance(c, &mut pos);
            }
            '%' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    advance(c, &mut pos);
                }
            }
            '-' | '|' | ',' | '.' => {
                chars.next();
                advance(c, &mut pos);
                let tok = match c {
                    '-' => Tok::Minus,
                    '|' => Tok::Pipe,
                    ',' => Tok::Comma,
                    _ => Tok::Dot,
                };
                toks.push((tok, start));
            }
            ':' => {
                chars.next();
                advance(c, &mut pos);
                if chars.peek() == Some(&'-') {
                    chars.next();
                    advance('-', &mut pos);
                    toks.push((Tok::If, start));
                } else {
                    return Err(error(start, "expected `:-`"));
                }
            }
            c if c.is_ascii_alphabetic() => {
                let mut word = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        word.push(c);
                        chars.next();
                        advance(c, &mut pos);
                    } else {
                        break;
                    }
                }
                let tok = match word.as_str() {
                    "not" => Tok::Not,
                    "K" => Tok::K,
                    "M" => Tok::M,
                    "true" => Tok::True,
                    "false" => Tok::False,
                    w if w.starts_with(|c: char| c.is_ascii_lowercase()) => Tok::Ident(word),
                    _ => {
                        return Err(error(
                            start,
                            format!("`{word}`: atoms must start with a lowercase letter (variables are not supported)"),
                        ))
                    }
                };
                toks.push((tok, start));
            }
            other => return Err(error(start, format!("unexpected character `{other}`"))),
        }
    }
    toks.push((Tok::Eof, pos));
    Ok(toks)
}

/// Parser configuration.
#[derive(Clone, Copy, Debug, Default)]
pub struct ParseOptions {
    /// Reject repeated literals in a head or body instead of dropping them.
    pub strict: bool,
}

/// A non-fatal diagnostic collected while parsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Warning {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    symbols: SymbolTable,
    options: ParseOptions,
    warnings: Vec<Warning>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let tok = self.toks[self.at].0.clone();
        if tok != Tok::Eof {
            self.at += 1;
        }
        tok
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &Tok, context: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(error(
                self.pos(),
                format!(
                    "expected {} {context}, found {}",
                    tok.describe(),
                    self.peek().describe()
                ),
            ))
        }
    }

    fn program(&mut self) -> Result<Vec<Rule>> {
        let mut rules = Vec::new();
        while self.peek() != &Tok::Eof {
            rules.push(self.rule()?);
        }
        Ok(rules)
    }

    fn rule(&mut self) -> Result<Rule> {
        let start = self.pos();
        let head = match self.peek() {
            Tok::If => Vec::new(),
            Tok::False => {
                self.bump();
                Vec::new()
            }
            _ => {
                let mut head = vec![self.lit("in rule head")?];
                while self.eat(&Tok::Pipe) {
                    head.push(self.lit("after `|`")?);
                }
                self.eat(&Tok::Comma);
                head
            }
        };
        let body = if self.eat(&Tok::If) {
            self.body()?
        } else {
            Vec::new()
        };
        self.expect(&Tok::Dot, "at end of rule")?;
        self.check_duplicates(start, &head, "head")?;
        self.check_duplicates(start, &body, "body")?;
        Ok(Rule::new(head, body))
    }

    fn body(&mut self) -> Result<Vec<ExtendedLiteral>> {
        if self.eat(&Tok::True) {
            return Ok(Vec::new());
        }
        let mut body = vec![self.ext()?];
        while self.eat(&Tok::Comma) {
            if self.peek() == &Tok::True {
                return Err(error(
                    self.pos(),
                    "`true` may only appear as a whole rule body",
                ));
            }
            body.push(self.ext()?);
        }
        Ok(body)
    }

    fn ext(&mut self) -> Result<ExtendedLiteral> {
        let negated = self.eat(&Tok::Not);
        if negated && self.peek() == &Tok::Not {
            return Err(error(
                self.pos(),
                "double default negation `not not` is not supported",
            ));
        }
        let op = match self.peek() {
            Tok::K => Some(ModalOp::K),
            Tok::M => Some(ModalOp::M),
            _ => None,
        };
        match op {
            Some(op) => {
                self.bump();
                if matches!(self.peek(), Tok::K | Tok::M | Tok::Not) {
                    return Err(error(
                        self.pos(),
                        "modal operators apply only to object literals",
                    ));
                }
                let lit = self.lit("after modal operator")?;
                Ok(ExtendedLiteral::Modal(ModalLiteral {
                    op,
                    lit,
                    default_neg: negated,
                }))
            }
            None => {
                let lit = self.lit("in rule body")?;
                Ok(if negated {
                    ExtendedLiteral::DefaultNeg(lit)
                } else {
                    ExtendedLiteral::Objective(lit)
                })
            }
        }
    }

    fn lit(&mut self, context: &str) -> Result<ObjectLiteral> {
        let strong_neg = self.eat(&Tok::Minus);
        let pos = self.pos();
        match self.bump() {
            Tok::Ident(name) => Ok(ObjectLiteral {
                atom: self.symbols.intern(&name),
                strong_neg,
            }),
            other => Err(error(
                pos,
                format!("expected a literal {context}, found {}", other.describe()),
            )),
        }
    }

    fn check_duplicates<T: PartialEq>(&mut self, pos: Pos, items: &[T], part: &str) -> Result<()> {
        let dup = items
            .iter()
            .enumerate()
            .any(|(i, x)| items[..i].contains(x));
        if !dup {
            return Ok(());
        }
        let message = format!("duplicate literal in rule {part}");
        if self.options.strict {
            return Err(error(pos, message));
        }
        self.warnings.push(Warning {
            line: pos.line,
            column: pos.column,
            message,
        });
        Ok(())
    }
}

/// Parses with explicit options, returning the program and any warnings.
pub fn parse_program_with(text: &str, options: ParseOptions) -> Result<(Program, Vec<Warning>)> {
    let mut parser = Parser {
        toks: lex(text)?,
        at: 0,
        symbols: SymbolTable::new(),
        options,
        warnings: Vec::new(),
    };
    let rules = parser.program()?;
    Ok((Program::new(parser.symbols, rules), parser.warnings))
}

/// Parses a program, silently dropping repeated literals.
pub fn parse_program(text: &str) -> Result<Program> {
    parse_program_with(text, ParseOptions::default()).map(|(p, _)| p)
}
