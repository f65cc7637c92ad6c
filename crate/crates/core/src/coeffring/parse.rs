//! Text syntax for elements of F: integers, declared variable names,
//! `+ - * / ^` (non-negative integer exponents) and parentheses.

use num_bigint::BigInt;
use thiserror::Error;

use super::poly::Rational;
use super::ratfunc::RatFunc;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at column {column}")]
pub struct ParseError {
    /// 1-based character column within the parsed text.
    pub column: usize,
    pub message: String,
}

/// Parses an expression over the variables `names` (in order `x1..xm`).
pub fn parse_ratfunc(text: &str, names: &[String]) -> Result<RatFunc, ParseError> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        names,
        end: text.chars().count() + 1,
    };
    let value = p.expr()?;
    if let Some(tok) = p.peek() {
        return Err(p.error_at(tok.column, format!("unexpected {}", tok.kind.describe())));
    }
    Ok(value)
}

#[derive(Debug, Clone, PartialEq)]
enum Kind {
    Int(BigInt),
    Ident(String),
    Op(char),
}

impl Kind {
    fn describe(&self) -> String {
        match self {
            Kind::Int(i) => format!("number '{i}'"),
            Kind::Ident(s) => format!("name '{s}'"),
            Kind::Op(c) => format!("'{c}'"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: Kind,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token {
                kind: Kind::Int(s.parse().expect("digits")),
                column,
            });
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token {
                kind: Kind::Ident(chars[start..i].iter().collect()),
                column,
            });
        } else if "+-*/^()".contains(c) {
            out.push(Token {
                kind: Kind::Op(c),
                column,
            });
            i += 1;
        } else {
            return Err(ParseError {
                column,
                message: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    names: &'a [String],
    end: usize,
}

impl Parser<'_> {
    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek_op(&self) -> Option<char> {
        match self.peek() {
            Some(Token {
                kind: Kind::Op(c), ..
            }) => Some(*c),
            _ => None,
        }
    }

    fn column(&self) -> usize {
        self.peek().map(|t| t.column).unwrap_or(self.end)
    }

    fn error_at(&self, column: usize, message: String) -> ParseError {
        ParseError { column, message }
    }

    fn expr(&mut self) -> Result<RatFunc, ParseError> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc, ParseError> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            let column = self.column();
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == '*' {
                &acc * &rhs
            } else {
                acc.try_div(&rhs)
                    .map_err(|e| self.error_at(column, e.to_string()))?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFunc, ParseError> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFunc, ParseError> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            let column = self.column();
            match self.peek().map(|t| t.kind.clone()) {
                Some(Kind::Int(e)) => {
                    self.pos += 1;
                    let e: u32 = e
                        .try_into()
                        .map_err(|_| self.error_at(column, "exponent too large".into()))?;
                    return Ok(base.pow(e));
                }
                _ => {
                    return Err(self.error_at(
                        column,
                        "expected a non-negative integer exponent".into(),
                    ))
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc, ParseError> {
        let column = self.column();
        let tok = match self.peek() {
            Some(t) => t.kind.clone(),
            None => return Err(self.error_at(column, "unexpected end of expression".into())),
        };
        self.pos += 1;
        match tok {
            Kind::Int(i) => Ok(RatFunc::constant(self.nvars(), Rational::from_integer(i))),
            Kind::Ident(name) => match self.names.iter().position(|n| *n == name) {
                Some(idx) => Ok(RatFunc::var(self.nvars(), idx)),
                None => Err(self.error_at(column, format!("unknown variable '{name}'"))),
            },
            Kind::Op('(') => {
                let inner = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(self.error_at(self.column(), "expected ')'".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            other => Err(self.error_at(column, format!("unexpected {}", other.describe()))),
        }
    }
}
