//! Surface syntax for elements.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*'? unary)*          juxtaposition multiplies
//! unary  := '-' unary | factor
//! factor := atom ('^' int)?
//! atom   := int | 'q' | 'p' | 'T' | 'L[' int ']' | 'W[' int ']'
//!         | '(' expr ')' | 'qbr(' expr ',' expr ';' expr ',' expr ')'
//! ```
//!
//! `T^-1` is the power form of `T`. Juxtaposition lets printed elements such
//! as `q^-2 * L[1] L[2]` parse back unchanged.

use num_bigint::BigInt;

use crate::algebra::{check_index, Algebra, DeformationProfile, Element, Generator, INDEX_CAP};
use crate::coeff::LaurentPoly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Q,
    P,
    Gen(Generator),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    /// `alpha * x y - beta * y x`
    Qbr {
        x: Box<Expr>,
        y: Box<Expr>,
        alpha: Box<Expr>,
        beta: Box<Expr>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            chars.next();
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            chars.next();
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
            }
            column += s.len();
            Tok::Int(s.parse().expect("digits"))
        } else if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric()) {
                s.push(d);
                chars.next();
            }
            column += s.len();
            Tok::Ident(s)
        } else if "+-*^()[],;".contains(c) {
            chars.next();
            column += 1;
            Tok::Sym(c)
        } else {
            return Err(Error::Parse {
                line: l,
                column: col,
                message: format!("unexpected character `{c}`"),
            });
        };
        out.push(Token {
            tok,
            line: l,
            column: col,
        });
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn err(&self, message: impl Into<String>) -> Error {
        let (line, column) = self
            .toks
            .get(self.pos)
            .map_or(self.end, |t| (t.line, t.column));
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat('-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Int(_) | Tok::Ident(_) | Tok::Sym('('))
        )
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') || self.starts_atom() {
                acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.factor()
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            let k = self.small_int()?;
            if k.abs() > INDEX_CAP {
                return Err(Error::ArithmeticBound(format!(
                    "exponent {k} exceeds {INDEX_CAP}"
                )));
            }
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn small_int(&mut self) -> Result<i64> {
        let negative = self.eat('-');
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                let v = if negative { -v } else { v };
                let out = i64::try_from(&v)
                    .map_err(|_| Error::ArithmeticBound(format!("integer {v} out of range")))?;
                self.pos += 1;
                Ok(out)
            }
            _ => Err(self.err("expected an integer")),
        }
    }

    fn index(&mut self) -> Result<i64> {
        self.expect('[')?;
        let n = self.small_int()?;
        check_index(n)?;
        self.expect(']')?;
        Ok(n)
    }

    fn atom(&mut self) -> Result<Expr> {
        let Some(tok) = self.peek().cloned() else {
            return Err(self.err("unexpected end of input"));
        };
        match tok {
            Tok::Int(v) => {
                self.pos += 1;
                Ok(Expr::Int(v))
            }
            Tok::Sym('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) => {
                let at = self.pos;
                self.pos += 1;
                match name.as_str() {
                    "q" => Ok(Expr::Q),
                    "p" => Ok(Expr::P),
                    "T" => Ok(Expr::Gen(Generator::T)),
                    "L" => Ok(Expr::Gen(Generator::L(self.index()?))),
                    "W" => Ok(Expr::Gen(Generator::W(self.index()?))),
                    "qbr" => {
                        self.expect('(')?;
                        let x = self.expr()?;
                        self.expect(',')?;
                        let y = self.expr()?;
                        self.expect(';')?;
                        let alpha = self.expr()?;
                        self.expect(',')?;
                        let beta = self.expr()?;
                        self.expect(')')?;
                        Ok(Expr::Qbr {
                            x: Box::new(x),
                            y: Box::new(y),
                            alpha: Box::new(alpha),
                            beta: Box::new(beta),
                        })
                    }
                    _ => {
                        self.pos = at;
                        Err(self.err(format!("unknown name `{name}`")))
                    }
                }
            }
            Tok::Sym(c) => Err(self.err(format!("unexpected `{c}`"))),
        }
    }
}

/// Parses one expression; trailing input is an error.
pub fn parse_expression(text: &str) -> Result<Expr> {
    let toks = tokenize(text)?;
    let end = match toks.last() {
        Some(t) => (t.line, t.column + 1),
        None => (1, 1),
    };
    let mut p = Parser { toks, pos: 0, end };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

/// The scalar an element reduces to, if it has no generator part.
fn as_scalar(x: &Element) -> Option<LaurentPoly> {
    if x.is_zero() {
        return Some(LaurentPoly::zero());
    }
    let mut terms = x.terms();
    match (terms.next(), terms.next()) {
        (Some((w, c)), None) if w.is_unit() => Some(c.clone()),
        _ => None,
    }
}

impl Expr {
    /// Evaluates to a normalized element of the given algebra.
    pub fn eval(&self, alg: &Algebra) -> Result<Element> {
        Ok(match self {
            Expr::Int(v) => Element::scalar(LaurentPoly::constant(v.clone())),
            Expr::Q => Element::scalar(LaurentPoly::q()),
            Expr::P => {
                if alg.profile() != DeformationProfile::Generalized {
                    return Err(Error::UnsupportedProfile {
                        profile: alg.profile().name(),
                        what: "the parameter p".into(),
                    });
                }
                Element::scalar(LaurentPoly::p())
            }
            Expr::Gen(g) => alg.generator(*g)?,
            Expr::Add(a, b) => &a.eval(alg)? + &b.eval(alg)?,
            Expr::Sub(a, b) => &a.eval(alg)? - &b.eval(alg)?,
            Expr::Neg(a) => -&a.eval(alg)?,
            Expr::Mul(a, b) => alg.multiply(&a.eval(alg)?, &b.eval(alg)?)?,
            Expr::Pow(a, k) => {
                let base = a.eval(alg)?;
                match as_scalar(&base) {
                    Some(c) => Element::scalar(c.pow(*k)?),
                    None => alg.pow(&base, *k)?,
                }
            }
            Expr::Qbr { x, y, alpha, beta } => {
                let scalar = |e: &Expr| -> Result<LaurentPoly> {
                    let v = e.eval(alg)?;
                    as_scalar(&v).ok_or_else(|| {
                        Error::Usage(format!("bracket parameter `{v}` is not a scalar"))
                    })
                };
                alg.q_bracket(
                    &x.eval(alg)?,
                    &y.eval(alg)?,
                    &scalar(alpha)?,
                    &scalar(beta)?,
                )?
            }
        })
    }
}

/// Parses and evaluates in one step.
pub fn parse_element(text: &str, alg: &Algebra) -> Result<Element> {
    parse_expression(text)?.eval(alg)
}
