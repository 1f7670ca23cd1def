//! Text syntax for polynomials.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := "-" factor | base ("^" uint)?
//! base   := int | var | "(" expr ")"
//! var    := letter (letter | digit | "_")*
//! ```
//!
//! Unary minus applies to a whole factor, so `-x^2` is `-(x^2)`.

use num_bigint::BigInt;
use thiserror::Error;

use crate::poly::{MultiPoly, VarOrder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character `{ch}` at position {pos}")]
    UnexpectedChar { pos: usize, ch: char },
    #[error("expected {expected} at position {pos}")]
    Expected { pos: usize, expected: &'static str },
    #[error("exponent too large at position {pos}")]
    ExponentTooLarge { pos: usize },
    #[error("variable `{0}` in the order does not occur in the polynomial")]
    UnknownVariable(String),
    #[error("variable `{0}` is missing from the order")]
    MissingVariable(String),
    #[error("variable `{0}` listed twice in the order")]
    DuplicateVariable(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let (pos, ch) = chars[k];
        match ch {
            c if c.is_whitespace() => k += 1,
            '+' | '-' | '*' | '^' | '(' | ')' => {
                out.push((
                    pos,
                    match ch {
                        '+' => Tok::Plus,
                        '-' => Tok::Minus,
                        '*' => Tok::Star,
                        '^' => Tok::Caret,
                        '(' => Tok::LParen,
                        _ => Tok::RParen,
                    },
                ));
                k += 1;
            }
            c if c.is_ascii_digit() => {
                let start = k;
                while k < chars.len() && chars[k].1.is_ascii_digit() {
                    k += 1;
                }
                let s: String = chars[start..k].iter().map(|(_, c)| c).collect();
                out.push((pos, Tok::Int(s.parse().expect("digits"))));
            }
            c if c.is_ascii_alphabetic() => {
                let start = k;
                while k < chars.len() && (chars[k].1.is_ascii_alphanumeric() || chars[k].1 == '_') {
                    k += 1;
                }
                out.push((
                    pos,
                    Tok::Var(chars[start..k].iter().map(|(_, c)| c).collect()),
                ));
            }
            _ => return Err(ParseError::UnexpectedChar { pos, ch }),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    at: usize,
    end: usize,
    order: &'a VarOrder,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.at += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, ParseError> {
        if let Some(Tok::Minus) = self.peek() {
            self.at += 1;
            return Ok(-self.factor()?);
        }
        let b = self.base()?;
        if let Some(Tok::Caret) = self.peek() {
            self.at += 1;
            let pos = self.pos();
            match self.peek() {
                Some(Tok::Int(e)) => {
                    let e: u32 = e
                        .try_into()
                        .map_err(|_| ParseError::ExponentTooLarge { pos })?;
                    self.at += 1;
                    return Ok(b.pow(e));
                }
                _ => {
                    return Err(ParseError::Expected {
                        pos,
                        expected: "unsigned integer exponent",
                    })
                }
            }
        }
        Ok(b)
    }

    fn base(&mut self) -> Result<MultiPoly, ParseError> {
        let n = self.order.len();
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.at += 1;
                Ok(MultiPoly::constant(n, v))
            }
            Some(Tok::Var(name)) => {
                self.at += 1;
                let i = self
                    .order
                    .index_of(&name)
                    .ok_or(ParseError::MissingVariable(name))?;
                Ok(MultiPoly::var(n, i))
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(ParseError::Expected {
                        pos: self.pos(),
                        expected: "`)`",
                    });
                }
                self.at += 1;
                Ok(e)
            }
            _ => Err(ParseError::Expected {
                pos,
                expected: "number, variable or `(`",
            }),
        }
    }
}

/// Parses `text`. `order` lists variables outermost first; without it the
/// names found are sorted ascending and the last becomes outermost.
pub fn parse_poly<S: AsRef<str>>(
    text: &str,
    order: Option<&[S]>,
) -> Result<(MultiPoly, VarOrder), ParseError> {
    let toks = tokenize(text)?;
    let mut found: Vec<String> = Vec::new();
    for (_, t) in &toks {
        if let Tok::Var(v) = t {
            if !found.contains(v) {
                found.push(v.clone());
            }
        }
    }
    let vo = match order {
        None => VarOrder::sorted(&found),
        Some(names) => {
            let names: Vec<&str> = names.iter().map(|s| s.as_ref()).collect();
            for (k, n) in names.iter().enumerate() {
                if names[..k].contains(n) {
                    return Err(ParseError::DuplicateVariable(n.to_string()));
                }
                if !found.iter().any(|f| f == n) {
                    return Err(ParseError::UnknownVariable(n.to_string()));
                }
            }
            if let Some(missing) = found.iter().find(|f| !names.contains(&f.as_str())) {
                return Err(ParseError::MissingVariable(missing.clone()));
            }
            VarOrder::from_precedence(&names).expect("checked distinct")
        }
    };
    let mut p = Parser {
        toks: &toks,
        at: 0,
        end: text.len(),
        order: &vo,
    };
    let f = p.expr()?;
    if p.at != toks.len() {
        return Err(ParseError::Expected {
            pos: p.pos(),
            expected: "operator or end of input",
        });
    }
    Ok((f, vo))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_unary_minus() {
        let (f, vo) = parse_poly::<&str>("(x+1)^2", None).unwrap();
        assert_eq!(vo.names(), ["x"]);
        assert_eq!(f.to_string(), "x1^2 + 2*x1 + 1");
        let (g, _) = parse_poly::<&str>("-x^2 + 2*-y", None).unwrap();
        assert_eq!(
            g.display_with(&["x".into(), "y".into()]).to_string(),
            "-x^2 - 2*y"
        );
        let (z, vo) = parse_poly::<&str>("0", None).unwrap();
        assert!(z.is_zero() && vo.is_empty());
    }

    #[test]
    fn explicit_order() {
        let (f, vo) = parse_poly("x + y^2 + z^3", Some(&["z", "y", "x"])).unwrap();
        assert_eq!(vo.names(), ["x", "y", "z"]);
        assert_eq!(f.level(), 3);
        assert_eq!(f.degree(2), Some(3));
        assert!(matches!(
            parse_poly("x + y", Some(&["x"])),
            Err(ParseError::MissingVariable(_))
        ));
        assert!(matches!(
            parse_poly("x", Some(&["x", "w"])),
            Err(ParseError::UnknownVariable(_))
        ));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(
            parse_poly::<&str>("x + $", None),
            Err(ParseError::UnexpectedChar { pos: 4, ch: '$' })
        );
        assert!(matches!(
            parse_poly::<&str>("x y", None),
            Err(ParseError::Expected { pos: 2, .. })
        ));
        assert!(matches!(
            parse_poly::<&str>("(x", None),
            Err(ParseError::Expected { pos: 2, .. })
        ));
        assert!(matches!(
            parse_poly::<&str>("x^y", None),
            Err(ParseError::Expected { pos: 2, .. })
        ));
    }
}
