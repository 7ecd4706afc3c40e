//! Text input: polynomial expressions and `.sys` system files.
//!
//! ```text
//! # comment
//! vars: x1 < x2 < x3
//! field: q            (optional; `q` or `fp:P`)
//! polys:
//! x1*x2 - 1
//! x3 - x2
//! ```
//!
//! Expressions use integer or rational literals (`3`, `2/5`), declared
//! variables, `+ - * ^` and parentheses. Multiplication is always explicit.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::polyring::{Field, Fp, Monomial, PolyRing, Polynomial, PrimeModulus, Rational, VariableOrder};

/// Position of a syntax error: 1-based line and column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{pos}: unknown variable `{name}`")]
    UnknownVariable { name: String, pos: Position },
    #[error("{pos}: malformed exponent: {detail}")]
    MalformedExponent { detail: String, pos: Position },
    #[error("{pos}: {detail}")]
    Syntax { detail: String, pos: Position },
    #[error("zero modulus")]
    ZeroModulus,
    #[error("invalid field declaration `{0}`")]
    InvalidField(String),
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("missing `{0}` section")]
    MissingSection(&'static str),
    #[error("invalid variable order: {0}")]
    InvalidOrder(String),
    #[error("{pos}: division by zero in a literal")]
    ZeroDenominator { pos: Position },
}

/// Coefficient field requested by a system file or on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FieldSpec {
    #[default]
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let t = text.trim();
        if t == "q" || t == "Q" || t == "rationals" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(p) = t.strip_prefix("fp:") {
            let p: u64 = p.trim().parse().map_err(|_| ParseError::InvalidField(t.to_string()))?;
            if p == 0 {
                return Err(ParseError::ZeroModulus);
            }
            return Ok(FieldSpec::Prime(p));
        }
        Err(ParseError::InvalidField(t.to_string()))
    }

    pub fn modulus(self) -> Option<Result<PrimeModulus, crate::Error>> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(PrimeModulus::new(p)),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

/// A parsed system: generators over the rationals plus the declared field.
#[derive(Clone, Debug)]
pub struct SystemFile {
    pub order: VariableOrder,
    pub generators: Vec<Polynomial<Rational>>,
    pub field: FieldSpec,
}

impl SystemFile {
    /// Generators mapped into the prime field `p`.
    pub fn generators_mod(&self, modulus: PrimeModulus) -> Result<Vec<Polynomial<Fp>>, crate::Error> {
        let ring = PolyRing::<Fp>::new(self.order.clone(), modulus);
        self.generators
            .iter()
            .map(|g| g.map_coefficients(&ring, |c| Fp::from_rational(&modulus, &c.0)))
            .collect()
    }
}

pub fn parse_system(text: &str) -> Result<SystemFile, ParseError> {
    let mut order = None;
    let mut field = FieldSpec::default();
    let mut polys: Option<Vec<(usize, String)>> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim_end_matches('\r');
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(list) = polys.as_mut() {
            list.push((line_no, line.split('#').next().unwrap_or("").to_string()));
            continue;
        }
        if let Some(rest) = content.strip_prefix("vars:") {
            let names: Vec<&str> = rest.split('<').map(str::trim).collect();
            if names.iter().any(|n| !is_identifier(n)) {
                return Err(ParseError::Syntax {
                    detail: format!("bad variable declaration `{}`", rest.trim()),
                    pos: Position { line: line_no, column: 1 },
                });
            }
            order = Some(VariableOrder::new(&names).map_err(|e| ParseError::InvalidOrder(e.to_string()))?);
        } else if let Some(rest) = content.strip_prefix("field:") {
            field = FieldSpec::parse(rest)?;
        } else if content == "polys:" {
            polys = Some(Vec::new());
        } else {
            return Err(ParseError::Syntax {
                detail: format!("unexpected line `{content}`"),
                pos: Position { line: line_no, column: 1 },
            });
        }
    }
    let order = order.ok_or(ParseError::MissingSection("vars:"))?;
    let lines = polys.ok_or(ParseError::MissingSection("polys:"))?;
    if lines.is_empty() {
        return Err(ParseError::EmptyGenerators);
    }
    let ring = PolyRing::<Rational>::new(order.clone(), ());
    let generators = lines
        .iter()
        .map(|(line, text)| Parser::new(text, &ring, *line).parse_all())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SystemFile { order, generators, field })
}

/// Parses one expression over the rationals.
pub fn parse_polynomial(ring: &Arc<PolyRing<Rational>>, text: &str) -> Result<Polynomial<Rational>, ParseError> {
    Parser::new(text, ring, 1).parse_all()
}

/// Parses one expression and maps it into an arbitrary field.
pub fn parse_polynomial_in<F: Field>(ring: &Arc<PolyRing<F>>, text: &str) -> Result<Polynomial<F>, ParseError> {
    let q = PolyRing::<Rational>::new(ring.order().clone(), ());
    let p = parse_polynomial(&q, text)?;
    p.map_coefficients(ring, |c| F::from_rational(ring.field(), &c.0)).map_err(|e| ParseError::Syntax {
        detail: e.to_string(),
        pos: Position { line: 1, column: 1 },
    })
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(BigRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    ring: &'a Arc<PolyRing<Rational>>,
    line: usize,
    end_col: usize,
    lex_error: Option<ParseError>,
}

impl<'a> Parser<'a> {
    fn new(text: &str, ring: &'a Arc<PolyRing<Rational>>, line: usize) -> Self {
        let mut p = Parser { tokens: Vec::new(), pos: 0, ring, line, end_col: text.chars().count() + 1, lex_error: None };
        p.lex(text);
        p
    }

    fn at(&self, column: usize) -> Position {
        Position { line: self.line, column }
    }

    fn lex(&mut self, text: &str) {
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            match c {
                ' ' | '\t' | '\r' => i += 1,
                '+' => {
                    self.tokens.push((Token::Plus, col));
                    i += 1
                }
                '-' => {
                    self.tokens.push((Token::Minus, col));
                    i += 1
                }
                '*' => {
                    self.tokens.push((Token::Star, col));
                    i += 1
                }
                '^' => {
                    self.tokens.push((Token::Caret, col));
                    i += 1
                }
                '(' => {
                    self.tokens.push((Token::LParen, col));
                    i += 1
                }
                ')' => {
                    self.tokens.push((Token::RParen, col));
                    i += 1
                }
                d if d.is_ascii_digit() => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let num: BigInt = chars[start..i].iter().collect::<String>().parse().expect("digits");
                    let mut den = BigInt::one();
                    if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                        let s = i + 1;
                        i += 1;
                        while i < chars.len() && chars[i].is_ascii_digit() {
                            i += 1;
                        }
                        den = chars[s..i].iter().collect::<String>().parse().expect("digits");
                        if den.is_zero() {
                            self.lex_error.get_or_insert(ParseError::ZeroDenominator { pos: self.at(col) });
                            return;
                        }
                    }
                    self.tokens.push((Token::Number(BigRational::new(num, den)), col));
                }
                a if a.is_alphabetic() || a == '_' => {
                    let start = i;
                    while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                        i += 1;
                    }
                    self.tokens.push((Token::Ident(chars[start..i].iter().collect()), col));
                }
                other => {
                    self.lex_error.get_or_insert(ParseError::Syntax {
                        detail: format!("unexpected character `{other}`"),
                        pos: self.at(col),
                    });
                    return;
                }
            }
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn syntax<T>(&self, detail: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { detail: detail.into(), pos: self.at(self.col()) })
    }

    fn parse_all(mut self) -> Result<Polynomial<Rational>, ParseError> {
        if let Some(e) = self.lex_error.take() {
            return Err(e);
        }
        if self.tokens.is_empty() {
            return self.syntax("empty expression");
        }
        let p = self.expr()?;
        if self.pos < self.tokens.len() {
            return match self.peek() {
                Some(Token::Ident(_)) | Some(Token::Number(_)) | Some(Token::LParen) => {
                    self.syntax("implicit multiplication is not allowed; use `*`")
                }
                _ => self.syntax("unexpected token"),
            };
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<Polynomial<Rational>, ParseError> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.product()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Polynomial<Rational>, ParseError> {
        let mut acc = self.unary()?;
        while let Some(Token::Star) = self.peek() {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial<Rational>, ParseError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial<Rational>, ParseError> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            let col = self.col();
            let exp = match self.tokens.get(self.pos) {
                Some((Token::Number(n), _)) if n.is_integer() => n.to_integer(),
                Some((t, _)) => {
                    return Err(ParseError::MalformedExponent {
                        detail: format!("expected a nonnegative integer, found {}", describe(t)),
                        pos: self.at(col),
                    })
                }
                None => {
                    return Err(ParseError::MalformedExponent {
                        detail: "missing exponent".into(),
                        pos: self.at(col),
                    })
                }
            };
            self.pos += 1;
            let e: u32 = exp.try_into().map_err(|_| ParseError::MalformedExponent {
                detail: "exponent out of range".into(),
                pos: self.at(col),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial<Rational>, ParseError> {
        let col = self.col();
        match self.tokens.get(self.pos).cloned() {
            Some((Token::Number(n), _)) => {
                self.pos += 1;
                Ok(Polynomial::constant(self.ring, Rational(n)))
            }
            Some((Token::Ident(name), _)) => {
                self.pos += 1;
                match self.ring.order().index_of(&name) {
                    Some(v) => Ok(Polynomial::monomial(
                        self.ring,
                        Rational::from_i64(&(), 1),
                        Monomial::var(self.ring.nvars(), v, 1),
                    )),
                    None => Err(ParseError::UnknownVariable { name, pos: self.at(col) }),
                }
            }
            Some((Token::LParen, _)) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Token::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.syntax("expected `)`"),
                }
            }
            Some((t, _)) => self.syntax(format!("unexpected {}", describe(&t))),
            None => self.syntax("unexpected end of expression"),
        }
    }
}

fn describe(t: &Token) -> String {
    match t {
        Token::Number(n) => format!("number {n}"),
        Token::Ident(s) => format!("identifier `{s}`"),
        Token::Plus => "`+`".into(),
        Token::Minus => "`-`".into(),
        Token::Star => "`*`".into(),
        Token::Caret => "`^`".into(),
        Token::LParen => "`(`".into(),
        Token::RParen => "`)`".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_a_system() {
        let sys = parse_system("vars: x1 < x2 < x3\npolys:\nx1*x2 - 1\nx3 - x2").unwrap();
        assert_eq!(sys.order.names(), &["x1", "x2", "x3"]);
        assert_eq!(sys.generators.len(), 2);
        assert_eq!(sys.generators[0].to_string(), "x1*x2 - 1");
        assert_eq!(sys.generators[1].to_string(), "x3 - x2");
        assert_eq!(sys.field, FieldSpec::Rationals);
    }

    #[test]
    fn single_generator() {
        let sys = parse_system("vars: x1\npolys:\nx1^2").unwrap();
        assert_eq!(sys.generators[0].to_string(), "x1^2");
    }

    #[test]
    fn unknown_variable_position() {
        let err = parse_system("vars: x1 < x2\npolys:\nx1*y").unwrap_err();
        assert_eq!(err, ParseError::UnknownVariable { name: "y".into(), pos: Position { line: 3, column: 4 } });
    }

    #[test]
    fn crlf_comments_and_field() {
        let sys = parse_system("# demo\r\nvars: a < b\r\nfield: fp:7\r\npolys:\r\na*b - 1 # trailing\r\n\r\n").unwrap();
        assert_eq!(sys.field, FieldSpec::Prime(7));
        assert_eq!(sys.generators.len(), 1);
    }

    #[test]
    fn error_paths() {
        assert!(matches!(parse_system("vars: x\npolys:\nx^y"), Err(ParseError::MalformedExponent { .. })));
        assert!(matches!(parse_system("vars: x\npolys:\nx^-1"), Err(ParseError::MalformedExponent { .. })));
        assert!(matches!(parse_system("vars: x\nfield: fp:0\npolys:\nx"), Err(ParseError::ZeroModulus)));
        assert!(matches!(parse_system("vars: x\npolys:\n"), Err(ParseError::EmptyGenerators)));
        assert!(matches!(parse_system("vars: x\npolys:\n2x"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_system("polys:\nx"), Err(ParseError::MissingSection(_))));
    }

    #[test]
    fn rational_literals() {
        let ring = PolyRing::<Rational>::new(VariableOrder::indexed("x", 2), ());
        let p = parse_polynomial(&ring, "-2/5*x1 + 1/2*(x2 - x2) + 3").unwrap();
        assert_eq!(p.to_string(), "-2/5*x1 + 3");
    }

    #[test]
    fn prime_field_mapping() {
        let sys = parse_system("vars: x\npolys:\n1/2*x + 3").unwrap();
        let gens = sys.generators_mod(PrimeModulus::new(7).unwrap()).unwrap();
        assert_eq!(gens[0].to_string(), "4*x + 3");
        assert!(sys.generators_mod(PrimeModulus::new(2).unwrap()).is_err());
    }
}
