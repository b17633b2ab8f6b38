//! Text syntax for formulas and sequents.
//!
//! Formula grammar (ASCII): atoms `[a-z][a-zA-Z0-9_]*`; connectives `.`,
//! `\`, `/\`, `\/`, `*`, `->`, prefix `~`, and the constants `bot`, `top`.
//! Precedence, tightest first: `~`, `.`, `*`, `\`, `->`, `/\`, `\/`. All
//! binary connectives are non-associative: `p . q . r` is rejected and must
//! be parenthesized.
//!
//! Sequents are written `structure => formula`. Structures combine formulas
//! with `,` and `;`, where `,` binds tighter; `;` is non-associative. A
//! parenthesized group at structure level may be a structure (`(p , q) ; r`)
//! or an ordinary formula grouping (`(p . q) \ r`), disambiguated by what
//! follows it.
//!
//! `~a` parses as `a -> bot` and `top` as `bot -> bot`; the printers in
//! [`crate::formula`] and [`crate::sequent`] invert this parser on canonical
//! values.

use thiserror::Error;

use crate::formula::Formula;
use crate::sequent::{Sequent, SimpleSequent};
use crate::structure::Structure;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    fn new(pos: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            pos,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    /// Accept `a / b` as a synonym for `b \ a`. Off by default.
    pub accept_slash: bool,
}

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    parse_formula_with(text, ParseOptions::default())
}

pub fn parse_formula_with(text: &str, options: ParseOptions) -> Result<Formula, ParseError> {
    let mut parser = Parser::new(text, options)?;
    let formula = parser.formula(1)?;
    parser.expect_end()?;
    Ok(formula)
}

pub fn parse_sequent(text: &str) -> Result<Sequent, ParseError> {
    parse_sequent_with(text, ParseOptions::default())
}

pub fn parse_sequent_with(text: &str, options: ParseOptions) -> Result<Sequent, ParseError> {
    let mut parser = Parser::new(text, options)?;
    let antecedent = parser.structure()?;
    parser.expect(TokenKind::SeqArrow)?;
    let succedent = parser.formula(1)?;
    parser.expect_end()?;
    Ok(Sequent::new(antecedent, succedent))
}

/// Parse `formula => formula`; rejects `,`/`;` antecedents.
pub fn parse_simple_sequent(text: &str) -> Result<SimpleSequent, ParseError> {
    let seq = parse_sequent(text)?;
    SimpleSequent::from_sequent(&seq)
        .ok_or_else(|| ParseError::new(0, "expected a single-formula antecedent"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind {
    Ident(String),
    Bot,
    Top,
    Dot,
    Star,
    Backslash,
    Slash,
    Arrow,
    Tilde,
    MeetOp,
    JoinOp,
    LPar,
    RPar,
    Comma,
    Semi,
    SeqArrow,
}

impl TokenKind {
    fn describe(&self) -> String {
        match self {
            TokenKind::Ident(name) => format!("atom `{name}`"),
            TokenKind::Bot => "`bot`".into(),
            TokenKind::Top => "`top`".into(),
            TokenKind::Dot => "`.`".into(),
            TokenKind::Star => "`*`".into(),
            TokenKind::Backslash => "`\\`".into(),
            TokenKind::Slash => "`/`".into(),
            TokenKind::Arrow => "`->`".into(),
            TokenKind::Tilde => "`~`".into(),
            TokenKind::MeetOp => "`/\\`".into(),
            TokenKind::JoinOp => "`\\/`".into(),
            TokenKind::LPar => "`(`".into(),
            TokenKind::RPar => "`)`".into(),
            TokenKind::Comma => "`,`".into(),
            TokenKind::Semi => "`;`".into(),
            TokenKind::SeqArrow => "`=>`".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let pos = i;
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '(' => tokens.push(Token {
                kind: TokenKind::LPar,
                pos,
            }),
            ')' => tokens.push(Token {
                kind: TokenKind::RPar,
                pos,
            }),
            ',' => tokens.push(Token {
                kind: TokenKind::Comma,
                pos,
            }),
            ';' => tokens.push(Token {
                kind: TokenKind::Semi,
                pos,
            }),
            '.' => tokens.push(Token {
                kind: TokenKind::Dot,
                pos,
            }),
            '*' => tokens.push(Token {
                kind: TokenKind::Star,
                pos,
            }),
            '~' => tokens.push(Token {
                kind: TokenKind::Tilde,
                pos,
            }),
            '\\' => {
                if bytes.get(i + 1) == Some(&b'/') {
                    tokens.push(Token {
                        kind: TokenKind::JoinOp,
                        pos,
                    });
                    i += 1;
                } else {
                    tokens.push(Token {
                        kind: TokenKind::Backslash,
                        pos,
                    });
                }
            }
            '/' => {
                if bytes.get(i + 1) == Some(&b'\\') {
                    tokens.push(Token {
                        kind: TokenKind::MeetOp,
                        pos,
                    });
                    i += 1;
                } else {
                    tokens.push(Token {
                        kind: TokenKind::Slash,
                        pos,
                    });
                }
            }
            '-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    tokens.push(Token {
                        kind: TokenKind::Arrow,
                        pos,
                    });
                    i += 1;
                } else {
                    return Err(ParseError::new(pos, "expected `->`"));
                }
            }
            '=' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    tokens.push(Token {
                        kind: TokenKind::SeqArrow,
                        pos,
                    });
                    i += 1;
                } else {
                    return Err(ParseError::new(pos, "expected `=>`"));
                }
            }
            'a'..='z' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let name = &text[start..i];
                let kind = match name {
                    "bot" => TokenKind::Bot,
                    "top" => TokenKind::Top,
                    _ => TokenKind::Ident(name.to_string()),
                };
                tokens.push(Token { kind, pos: start });
                continue;
            }
            _ => return Err(ParseError::new(pos, format!("unknown token `{c}`"))),
        }
        i += 1;
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    index: usize,
    end: usize,
    options: ParseOptions,
}

// binding powers; see module docs for the precedence table
const BP_JOIN: u8 = 1;
const BP_MEET: u8 = 2;
const BP_ARROW: u8 = 3;
const BP_UNDER: u8 = 4;
const BP_STAR: u8 = 5;
const BP_FUSE: u8 = 6;

impl Parser {
    fn new(text: &str, options: ParseOptions) -> Result<Parser, ParseError> {
        let tokens = lex(text)?;
        let end = text.len();
        Ok(Parser {
            tokens,
            index: 0,
            end,
            options,
        })
    }

    fn peek(&self) -> Option<&TokenKind> {
        self.tokens.get(self.index).map(|t| &t.kind)
    }

    fn pos(&self) -> usize {
        self.tokens
            .get(self.index)
            .map(|t| t.pos)
            .unwrap_or(self.end)
    }

    fn advance(&mut self) -> Option<Token> {
        let token = self.tokens.get(self.index).cloned();
        if token.is_some() {
            self.index += 1;
        }
        token
    }

    fn expect(&mut self, kind: TokenKind) -> Result<(), ParseError> {
        match self.peek() {
            Some(k) if *k == kind => {
                self.advance();
                Ok(())
            }
            Some(k) => Err(ParseError::new(
                self.pos(),
                format!("expected {}, found {}", kind.describe(), k.describe()),
            )),
            None => Err(ParseError::new(
                self.pos(),
                format!("expected {}, found end of input", kind.describe()),
            )),
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(k) => Err(ParseError::new(
                self.pos(),
                format!("unexpected {} after complete input", k.describe()),
            )),
        }
    }

    fn peek_binop(&self) -> Option<(TokenKind, u8)> {
        let kind = self.peek()?;
        let bp = match kind {
            TokenKind::JoinOp => BP_JOIN,
            TokenKind::MeetOp => BP_MEET,
            TokenKind::Arrow => BP_ARROW,
            TokenKind::Backslash => BP_UNDER,
            TokenKind::Slash if self.options.accept_slash => BP_UNDER,
            TokenKind::Star => BP_STAR,
            TokenKind::Dot => BP_FUSE,
            _ => return None,
        };
        Some((kind.clone(), bp))
    }

    fn formula(&mut self, min_bp: u8) -> Result<Formula, ParseError> {
        let lhs = self.unary()?;
        self.continue_formula(lhs, min_bp)
    }

    /// Precedence climbing from an already-parsed left operand. Every binary
    /// connective is non-associative, so the right operand is parsed one
    /// level tighter and a trailing operator of the same level is an error.
    fn continue_formula(&mut self, mut lhs: Formula, min_bp: u8) -> Result<Formula, ParseError> {
        while let Some((op, bp)) = self.peek_binop() {
            if bp < min_bp {
                break;
            }
            self.advance();
            let rhs = self.formula(bp + 1)?;
            if let Some((_, next_bp)) = self.peek_binop() {
                if next_bp == bp {
                    return Err(ParseError::new(
                        self.pos(),
                        "connective is non-associative; parenthesize",
                    ));
                }
            }
            lhs = match op {
                TokenKind::JoinOp => Formula::join(lhs, rhs),
                TokenKind::MeetOp => Formula::meet(lhs, rhs),
                TokenKind::Arrow => Formula::arrow(lhs, rhs),
                TokenKind::Backslash => Formula::under(lhs, rhs),
                TokenKind::Slash => Formula::under(rhs, lhs),
                TokenKind::Star => Formula::star(lhs, rhs),
                TokenKind::Dot => Formula::fuse(lhs, rhs),
                _ => unreachable!(),
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(TokenKind::Tilde) => {
                self.advance();
                let inner = self.unary()?;
                Ok(Formula::neg(inner))
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        let pos = self.pos();
        match self.advance().map(|t| t.kind) {
            Some(TokenKind::Ident(name)) => Ok(Formula::Atom(name)),
            Some(TokenKind::Bot) => Ok(Formula::Bottom),
            Some(TokenKind::Top) => Ok(Formula::top()),
            Some(TokenKind::LPar) => {
                let inner = self.formula(1)?;
                self.expect(TokenKind::RPar)?;
                Ok(inner)
            }
            Some(other) => Err(ParseError::new(
                pos,
                format!("expected a formula, found {}", other.describe()),
            )),
            None => Err(ParseError::new(
                pos,
                "expected a formula, found end of input",
            )),
        }
    }

    fn structure(&mut self) -> Result<Structure, ParseError> {
        let first = self.structure_comma()?;
        if self.peek() == Some(&TokenKind::Semi) {
            self.advance();
            let second = self.structure_comma()?;
            if self.peek() == Some(&TokenKind::Semi) {
                return Err(ParseError::new(
                    self.pos(),
                    "`;` is non-associative; parenthesize",
                ));
            }
            Ok(Structure::semi(first, second))
        } else {
            Ok(first)
        }
    }

    fn structure_comma(&mut self) -> Result<Structure, ParseError> {
        let mut items = vec![self.structure_item()?];
        while self.peek() == Some(&TokenKind::Comma) {
            self.advance();
            items.push(self.structure_item()?);
        }
        Ok(Structure::comma(items))
    }

    fn structure_item(&mut self) -> Result<Structure, ParseError> {
        if self.peek() == Some(&TokenKind::LPar) {
            self.advance();
            let inner = self.structure()?;
            self.expect(TokenKind::RPar)?;
            match inner {
                // A parenthesized single formula may continue as a formula:
                // `(p . q) \ r`.
                Structure::Leaf(f) => {
                    let formula = self.continue_formula(f, 1)?;
                    Ok(Structure::leaf(formula))
                }
                other => {
                    if self.peek_binop().is_some() {
                        return Err(ParseError::new(
                            self.pos(),
                            "structure group cannot be a formula operand",
                        ));
                    }
                    Ok(other)
                }
            }
        } else {
            Ok(Structure::leaf(self.formula(1)?))
        }
    }
}
