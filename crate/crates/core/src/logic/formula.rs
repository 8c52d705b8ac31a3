//! Formulas over `{atom, ^, &, (+), ->, _|_}` and their ASCII syntax.
//!
//! ```text
//! implication := disjunction ( "->" implication )?      right associative
//! disjunction := conjunction ( "(+)" conjunction )*      left associative
//! conjunction := postfix ( "&" postfix )*                left associative
//! postfix     := primary "^"*
//! primary     := ATOM | "_|_" | "(" implication ")"
//! ATOM        := [A-Z][A-Za-z0-9_]*
//! sequent     := implication? "|-" implication?
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::LogicError;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    /// Orthocomplement `F^`.
    Orth(Box<Formula>),
    /// Additive conjunction `F & G`.
    Conj(Box<Formula>, Box<Formula>),
    /// Additive disjunction `F (+) G`.
    Disj(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Falsum,
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into())
    }

    /// Orthocomplement with `(F^)^ = F`.
    pub fn orth(self) -> Formula {
        match self {
            Formula::Orth(inner) => *inner,
            other => Formula::Orth(Box::new(other)),
        }
    }

    pub fn conj(self, rhs: Formula) -> Formula {
        Formula::Conj(Box::new(self), Box::new(rhs))
    }

    pub fn disj(self, rhs: Formula) -> Formula {
        Formula::Disj(Box::new(self), Box::new(rhs))
    }

    pub fn implies(self, rhs: Formula) -> Formula {
        Formula::Implies(Box::new(self), Box::new(rhs))
    }

    /// Exchanges `&` and `(+)` and reverses the order of every binary
    /// connective. Involutive.
    pub fn mirror(&self) -> Formula {
        match self {
            Formula::Atom(_) | Formula::Falsum => self.clone(),
            Formula::Orth(f) => Formula::Orth(Box::new(f.mirror())),
            Formula::Conj(l, r) => r.mirror().disj(l.mirror()),
            Formula::Disj(l, r) => r.mirror().conj(l.mirror()),
            Formula::Implies(l, r) => Formula::Implies(Box::new(l.mirror()), Box::new(r.mirror())),
        }
    }

    /// Rewrites nested orthocomplements `((F^)^)` to `F` everywhere.
    pub fn normalized(&self) -> Formula {
        match self {
            Formula::Atom(_) | Formula::Falsum => self.clone(),
            Formula::Orth(f) => f.normalized().orth(),
            Formula::Conj(l, r) => l.normalized().conj(r.normalized()),
            Formula::Disj(l, r) => l.normalized().disj(r.normalized()),
            Formula::Implies(l, r) => l.normalized().implies(r.normalized()),
        }
    }

    pub fn contains_falsum(&self) -> bool {
        match self {
            Formula::Falsum => true,
            Formula::Atom(_) => false,
            Formula::Orth(f) => f.contains_falsum(),
            Formula::Conj(l, r) | Formula::Disj(l, r) | Formula::Implies(l, r) => {
                l.contains_falsum() || r.contains_falsum()
            }
        }
    }

    /// Self followed by all proper subformulas, preorder.
    pub fn subformulas(&self) -> Vec<&Formula> {
        let mut out = vec![self];
        match self {
            Formula::Atom(_) | Formula::Falsum => {}
            Formula::Orth(f) => out.extend(f.subformulas()),
            Formula::Conj(l, r) | Formula::Disj(l, r) | Formula::Implies(l, r) => {
                out.extend(l.subformulas());
                out.extend(r.subformulas());
            }
        }
        out
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Implies(..) => 1,
            Formula::Disj(..) => 2,
            Formula::Conj(..) => 3,
            Formula::Orth(_) => 4,
            Formula::Atom(_) | Formula::Falsum => 5,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let paren = self.precedence() < min;
        if paren {
            f.write_str("(")?;
        }
        match self {
            Formula::Atom(name) => f.write_str(name)?,
            Formula::Falsum => f.write_str("_|_")?,
            Formula::Orth(inner) => {
                inner.fmt_at(f, 4)?;
                f.write_str("^")?;
            }
            Formula::Conj(l, r) => {
                l.fmt_at(f, 3)?;
                f.write_str(" & ")?;
                r.fmt_at(f, 4)?;
            }
            Formula::Disj(l, r) => {
                l.fmt_at(f, 2)?;
                f.write_str(" (+) ")?;
                r.fmt_at(f, 3)?;
            }
            Formula::Implies(l, r) => {
                l.fmt_at(f, 2)?;
                f.write_str(" -> ")?;
                r.fmt_at(f, 1)?;
            }
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

impl FromStr for Formula {
    type Err = LogicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_formula(s)
    }
}

impl Serialize for Formula {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Formula {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_formula(&s).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Token {
    Atom(String),
    Orth,
    And,
    Or,
    Arrow,
    Falsum,
    Open,
    Close,
    Turnstile,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Atom(a) => write!(f, "atom `{a}`"),
            Token::Orth => f.write_str("`^`"),
            Token::And => f.write_str("`&`"),
            Token::Or => f.write_str("`(+)`"),
            Token::Arrow => f.write_str("`->`"),
            Token::Falsum => f.write_str("`_|_`"),
            Token::Open => f.write_str("`(`"),
            Token::Close => f.write_str("`)`"),
            Token::Turnstile => f.write_str("`|-`"),
        }
    }
}

fn syntax(position: usize, message: impl Into<String>) -> LogicError {
    LogicError::Syntax {
        position,
        message: message.into(),
    }
}

/// Tokens with their byte offsets.
pub(crate) fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, LogicError> {
    const FIXED: [(&str, Token); 7] = [
        ("(+)", Token::Or),
        ("->", Token::Arrow),
        ("_|_", Token::Falsum),
        ("|-", Token::Turnstile),
        ("^", Token::Orth),
        ("&", Token::And),
        ("(", Token::Open),
    ];
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < text.len() {
        let rest = &text[pos..];
        let ch = rest.chars().next().expect("non-empty");
        if ch.is_whitespace() {
            pos += ch.len_utf8();
            continue;
        }
        if let Some((lit, tok)) = FIXED.iter().find(|(lit, _)| rest.starts_with(lit)) {
            out.push((pos, tok.clone()));
            pos += lit.len();
            continue;
        }
        if ch == ')' {
            out.push((pos, Token::Close));
            pos += 1;
            continue;
        }
        if ch.is_ascii_uppercase() {
            let len = rest
                .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
                .unwrap_or(rest.len());
            out.push((pos, Token::Atom(rest[..len].to_string())));
            pos += len;
            continue;
        }
        return Err(syntax(pos, format!("unexpected character `{ch}`")));
    }
    Ok(out)
}

pub(crate) struct Parser {
    tokens: Vec<(usize, Token)>,
    cursor: usize,
    end: usize,
}

impl Parser {
    pub(crate) fn new(text: &str) -> Result<Self, LogicError> {
        Ok(Parser {
            tokens: tokenize(text)?,
            cursor: 0,
            end: text.len(),
        })
    }

    pub(crate) fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|(_, t)| t)
    }

    pub(crate) fn position(&self) -> usize {
        self.tokens.get(self.cursor).map_or(self.end, |(p, _)| *p)
    }

    pub(crate) fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.cursor).map(|(_, t)| t.clone());
        self.cursor += 1;
        t
    }

    pub(crate) fn at_end(&self) -> bool {
        self.cursor >= self.tokens.len()
    }

    pub(crate) fn expect_end(&self) -> Result<(), LogicError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(syntax(self.position(), format!("unexpected {t}"))),
        }
    }

    pub(crate) fn implication(&mut self) -> Result<Formula, LogicError> {
        let lhs = self.disjunction()?;
        if self.peek() == Some(&Token::Arrow) {
            self.bump();
            let rhs = self.implication()?;
            return Ok(lhs.implies(rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, LogicError> {
        let mut lhs = self.conjunction()?;
        while self.peek() == Some(&Token::Or) {
            self.bump();
            lhs = lhs.disj(self.conjunction()?);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, LogicError> {
        let mut lhs = self.postfix()?;
        while self.peek() == Some(&Token::And) {
            self.bump();
            lhs = lhs.conj(self.postfix()?);
        }
        Ok(lhs)
    }

    fn postfix(&mut self) -> Result<Formula, LogicError> {
        let mut f = self.primary()?;
        while self.peek() == Some(&Token::Orth) {
            self.bump();
            f = f.orth();
        }
        Ok(f)
    }

    fn primary(&mut self) -> Result<Formula, LogicError> {
        let pos = self.position();
        match self.bump() {
            Some(Token::Atom(name)) => Ok(Formula::Atom(name)),
            Some(Token::Falsum) => Ok(Formula::Falsum),
            Some(Token::Open) => {
                let inner = self.implication()?;
                let close = self.position();
                match self.bump() {
                    Some(Token::Close) => Ok(inner),
                    Some(t) => Err(syntax(close, format!("expected `)`, found {t}"))),
                    None => Err(syntax(close, "expected `)`, found end of input")),
                }
            }
            Some(t) => Err(syntax(pos, format!("expected a formula, found {t}"))),
            None => Err(syntax(pos, "expected a formula, found end of input")),
        }
    }
}

pub fn parse_formula(text: &str) -> Result<Formula, LogicError> {
    let mut p = Parser::new(text)?;
    let f = p.implication()?;
    p.expect_end()?;
    Ok(f)
}
