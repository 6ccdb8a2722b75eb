//! Concrete syntax for identities.
//!
//! ```text
//! identity    := expr ("=" "0")? | expr "==" expr ;
//! expr        := signed_term (("+"|"-") signed_term)* ;
//! signed_term := (rational)? term ;
//! term        := atom "*"? ;
//! atom        := variable | "(" expr_in_op ")" ;
//! expr_in_op  := term op term ;
//! op          := "." | "-|" | "|-" ;
//! rational    := integer ("/" positive_integer)? ;
//! variable    := [a-z][a-z0-9_]* .
//! ```
//!
//! `-|` is the left product, `|-` the right product, `.` the single algebra
//! operation, postfix `*` the involution. Products are always fully
//! parenthesized; there are no precedence rules. `A == B` is sugar for
//! `A - B = 0`. The parser accepts repeated postfix stars (`a**`) so star
//! cancellation is expressible.

use crate::error::Error;
use crate::identity::{Identity, Op, Term};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Var(String),
    Int(String),
    Plus,
    Minus,
    Dot,
    LeftOp,
    RightOp,
    Star,
    Slash,
    LParen,
    RParen,
    Eq,
    EqEq,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, Error> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                if bytes.get(i + 1) == Some(&b'|') {
                    toks.push((i, Tok::LeftOp));
                    i += 2;
                } else {
                    toks.push((i, Tok::Minus));
                    i += 1;
                }
            }
            '|' => {
                if bytes.get(i + 1) == Some(&b'-') {
                    toks.push((i, Tok::RightOp));
                    i += 2;
                } else {
                    return Err(Error::Syntax {
                        pos: i,
                        msg: "expected '|-'".into(),
                    });
                }
            }
            '.' => {
                toks.push((i, Tok::Dot));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '/' => {
                toks.push((i, Tok::Slash));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            '=' => {
                if bytes.get(i + 1) == Some(&b'=') {
                    toks.push((i, Tok::EqEq));
                    i += 2;
                } else {
                    toks.push((i, Tok::Eq));
                    i += 1;
                }
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push((start, Tok::Int(src[start..i].to_string())));
            }
            'a'..='z' => {
                let start = i;
                i += 1;
                while i < bytes.len()
                    && (bytes[i].is_ascii_lowercase()
                        || bytes[i].is_ascii_digit()
                        || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((start, Tok::Var(src[start..i].to_string())));
            }
            _ => {
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("unexpected character {c:?}"),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.len)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.here(),
            msg: msg.into(),
        }
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), Error> {
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => {
                self.pos -= 1;
                Err(self.err(format!("expected {what}")))
            }
        }
    }

    fn parse_rational(&mut self) -> Result<Rational, Error> {
        let Some(Tok::Int(n)) = self.peek().cloned() else {
            return Err(self.err("expected integer"));
        };
        self.bump();
        if self.peek() == Some(&Tok::Slash) {
            self.bump();
            let Some(Tok::Int(d)) = self.peek().cloned() else {
                return Err(self.err("expected positive denominator"));
            };
            self.bump();
            format!("{n}/{d}").parse()
        } else {
            n.parse()
        }
    }

    fn parse_term(&mut self) -> Result<Term, Error> {
        let mut t = match self.peek().cloned() {
            Some(Tok::Var(v)) => {
                self.bump();
                Term::var(&v)
            }
            Some(Tok::LParen) => {
                self.bump();
                let left = self.parse_term()?;
                let op = match self.bump() {
                    Some(Tok::Dot) => Op::Alg,
                    Some(Tok::LeftOp) => Op::Left,
                    Some(Tok::RightOp) => Op::Right,
                    _ => {
                        self.pos -= 1;
                        return Err(self.err("expected operator '.', '-|' or '|-'"));
                    }
                };
                let right = self.parse_term()?;
                self.expect(Tok::RParen, "closing ')'")?;
                Term::node(op, left, right)
            }
            _ => return Err(self.err("expected variable or '('")),
        };
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            t = t.starred();
        }
        Ok(t)
    }

    fn parse_expr(&mut self) -> Result<Vec<(Rational, Term)>, Error> {
        let mut out = Vec::new();
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                -Rational::one()
            }
            Some(Tok::Plus) => {
                self.bump();
                Rational::one()
            }
            _ => Rational::one(),
        };
        loop {
            let coeff = if matches!(self.peek(), Some(Tok::Int(_))) {
                self.parse_rational()?
            } else {
                Rational::one()
            };
            let term = self.parse_term()?;
            out.push((&sign * &coeff, term));
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    sign = Rational::one();
                }
                Some(Tok::Minus) => {
                    self.bump();
                    sign = -Rational::one();
                }
                _ => break,
            }
        }
        Ok(out)
    }
}

/// Parses an identity; the mode is inferred from the operator tokens.
pub fn parse_identity(src: &str) -> Result<Identity, Error> {
    let toks = lex(src)?;
    // the degenerate identity "0" / "0 = 0", which rendering can produce
    // when every summand cancels
    let zeroish = toks
        .iter()
        .all(|(_, t)| matches!(t, Tok::Int(z) if z == "0") || *t == Tok::Eq);
    if !toks.is_empty() && zeroish {
        return Identity::new(Vec::new());
    }
    let mut p = Parser {
        toks,
        pos: 0,
        len: src.len(),
    };
    let mut summands = p.parse_expr()?;
    match p.peek() {
        Some(Tok::Eq) => {
            p.bump();
            match p.bump() {
                Some(Tok::Int(z)) if z == "0" => {}
                _ => {
                    p.pos -= 1;
                    return Err(p.err("expected '0' after '='"));
                }
            }
        }
        Some(Tok::EqEq) => {
            p.bump();
            for (c, t) in p.parse_expr()? {
                summands.push((-&c, t));
            }
        }
        _ => {}
    }
    if p.pos != p.toks.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Identity::new(summands)
}

pub fn render_term(t: &Term) -> String {
    match t {
        Term::Leaf { var, stars } => {
            let mut s = var.clone();
            s.push_str(&"*".repeat(*stars as usize));
            s
        }
        Term::Node {
            op,
            left,
            right,
            stars,
        } => {
            let mut s = format!(
                "({} {} {})",
                render_term(left),
                op.token(),
                render_term(right)
            );
            s.push_str(&"*".repeat(*stars as usize));
            s
        }
    }
}

/// Renders so that `parse_identity(render_identity(id))` rebuilds an equal
/// AST. Unit coefficients are omitted; a leading `-1` prints as a minus.
pub fn render_identity(id: &Identity) -> String {
    if id.summands.is_empty() {
        return "0 = 0".to_string();
    }
    let mut s = String::new();
    for (i, (c, t)) in id.summands.iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            s.push_str(&mag.to_string());
            s.push(' ');
        }
        s.push_str(&render_term(t));
    }
    s
}
