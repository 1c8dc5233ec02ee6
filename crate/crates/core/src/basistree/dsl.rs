//! Text notation for basis descriptors:
//!
//! ```text
//! basis     := "lagrange" "(" int ")"
//!            | "dg" "(" int ")"
//!            | "power" "(" basis "," int "," strategy ")"
//!            | "composite" "(" basis ("," basis)* "," strategy ")"
//! strategy  := "flatLexicographic" | "flatInterleaved" | "blockedLexicographic"
//!            | "blockedInterleaved" | "blockedByEntity"
//! ```
//!
//! Whitespace between tokens is ignored.

use super::BasisDescriptor;
use crate::error::{Error, Result};
use crate::indexing::MergingStrategy;
use crate::localfe::MAX_DEGREE;

#[derive(Clone, Debug, PartialEq)]
enum Token<'a> {
    Ident(&'a str),
    Int(usize),
    Open,
    Close,
    Comma,
    End,
}

impl Token<'_> {
    fn describe(&self) -> String {
        match self {
            Token::Ident(s) => format!("`{s}`"),
            Token::Int(n) => format!("`{n}`"),
            Token::Open => "`(`".into(),
            Token::Close => "`)`".into(),
            Token::Comma => "`,`".into(),
            Token::End => "end of input".into(),
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

impl<'a> Parser<'a> {
    fn skip_whitespace(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    /// Returns the next token and its byte offset without consuming it.
    fn peek(&mut self) -> Result<(Token<'a>, usize)> {
        self.skip_whitespace();
        let start = self.pos;
        let rest = &self.text[start..];
        let Some(c) = rest.chars().next() else {
            return Ok((Token::End, start));
        };
        let token = match c {
            '(' => Token::Open,
            ')' => Token::Close,
            ',' => Token::Comma,
            c if c.is_ascii_digit() => {
                let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
                let n = rest[..len]
                    .parse()
                    .map_err(|_| syntax(start, "integer literal too large"))?;
                Token::Int(n)
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let len = rest
                    .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
                    .unwrap_or(rest.len());
                Token::Ident(&rest[..len])
            }
            other => return Err(syntax(start, format!("unexpected character `{other}`"))),
        };
        Ok((token, start))
    }

    fn next(&mut self) -> Result<(Token<'a>, usize)> {
        let (token, start) = self.peek()?;
        self.pos = start
            + match &token {
                Token::Ident(s) => s.len(),
                Token::Int(_) => self.text[start..]
                    .find(|c: char| !c.is_ascii_digit())
                    .unwrap_or(self.text.len() - start),
                Token::End => 0,
                _ => 1,
            };
        Ok((token, start))
    }

    fn expect(&mut self, expected: Token<'static>) -> Result<()> {
        let (token, at) = self.next()?;
        if token == expected {
            Ok(())
        } else {
            Err(syntax(
                at,
                format!("expected {}, found {}", expected.describe(), token.describe()),
            ))
        }
    }

    fn integer(&mut self) -> Result<(usize, usize)> {
        match self.next()? {
            (Token::Int(n), at) => Ok((n, at)),
            (other, at) => Err(syntax(at, format!("expected an integer, found {}", other.describe()))),
        }
    }

    fn strategy(&mut self) -> Result<MergingStrategy> {
        match self.next()? {
            (Token::Ident(name), at) => name.parse().map_err(|msg: String| syntax(at, msg)),
            (other, at) => Err(syntax(
                at,
                format!("expected a merging strategy, found {}", other.describe()),
            )),
        }
    }

    fn degree(&mut self) -> Result<usize> {
        let (k, at) = self.integer()?;
        if k > MAX_DEGREE {
            return Err(syntax(at, format!("degree {k} out of range (0..={MAX_DEGREE})")));
        }
        Ok(k)
    }

    fn basis(&mut self) -> Result<BasisDescriptor> {
        let (name, at) = match self.next()? {
            (Token::Ident(name), at) => (name, at),
            (other, at) => {
                return Err(syntax(at, format!("expected a basis, found {}", other.describe())))
            }
        };
        self.expect(Token::Open)?;
        let basis = match name {
            "lagrange" => BasisDescriptor::lagrange(self.degree()?),
            "dg" => BasisDescriptor::dg(self.degree()?),
            "power" => {
                let child = self.basis()?;
                self.expect(Token::Comma)?;
                let (exponent, exp_at) = self.integer()?;
                if exponent == 0 {
                    return Err(syntax(exp_at, "power exponent must be at least 1"));
                }
                self.expect(Token::Comma)?;
                BasisDescriptor::power(child, exponent, self.strategy()?)
            }
            "composite" => {
                let mut children = Vec::new();
                loop {
                    let (token, token_at) = self.peek()?;
                    if let Token::Ident(word) = token {
                        if word.parse::<MergingStrategy>().is_ok() {
                            if children.is_empty() {
                                return Err(syntax(token_at, "composite needs at least one child"));
                            }
                            break;
                        }
                    }
                    children.push(self.basis()?);
                    self.expect(Token::Comma)?;
                }
                BasisDescriptor::composite(children, self.strategy()?)
            }
            other => return Err(syntax(at, format!("unknown basis `{other}`"))),
        };
        self.expect(Token::Close)?;
        Ok(basis)
    }
}

/// Parses and validates a descriptor. Syntax errors carry the byte offset
/// of the offending token.
pub fn parse_descriptor(text: &str) -> Result<BasisDescriptor> {
    let mut parser = Parser { text, pos: 0 };
    let basis = parser.basis()?;
    match parser.next()? {
        (Token::End, _) => {}
        (other, at) => {
            return Err(syntax(at, format!("trailing input starting with {}", other.describe())))
        }
    }
    basis.validate()?;
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use MergingStrategy::*;

    fn offset(text: &str) -> usize {
        match parse_descriptor(text) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("expected parse error for {text:?}, got {other:?}"),
        }
    }

    #[test]
    fn taylor_hood() {
        let parsed = parse_descriptor(
            "composite(power(lagrange(2),2,blockedInterleaved),lagrange(1),blockedLexicographic)",
        )
        .unwrap();
        assert_eq!(parsed, BasisDescriptor::taylor_hood(2, BlockedInterleaved));
    }

    #[test]
    fn whitespace_insensitive() {
        let parsed = parse_descriptor("  power ( lagrange( 1 ) ,3 ,\n flatInterleaved ) ").unwrap();
        assert_eq!(
            parsed,
            BasisDescriptor::power(BasisDescriptor::lagrange(1), 3, FlatInterleaved)
        );
        assert_eq!(parse_descriptor("dg(0)").unwrap(), BasisDescriptor::dg(0));
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(offset("lagrange(4)"), 9);
        assert_eq!(offset("lagrange(9)"), 9);
        assert_eq!(offset("power(lagrange(1),2,sideways)"), 20);
        assert_eq!(offset("power(lagrange(1),2)"), 19);
        assert_eq!(offset("composite(blockedLexicographic)"), 10);
        assert_eq!(offset("lagrange(1) x"), 12);
        assert_eq!(offset("bspline(2)"), 0);
        assert_eq!(offset("lagrange(1"), 10);
        assert_eq!(offset("lagrange(#)"), 9);
        assert_eq!(offset("power(lagrange(1), 0, flatLexicographic)"), 19);
    }

    #[test]
    fn semantic_errors_after_parsing() {
        assert!(matches!(
            parse_descriptor("composite(lagrange(1),lagrange(1),flatInterleaved)"),
            Err(Error::StrategyNotAllowed { .. })
        ));
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "lagrange(0)",
            "dg(3)",
            "power(lagrange(2), 3, blockedByEntity)",
            "composite(power(dg(1), 2, flatLexicographic), lagrange(1), blockedLexicographic)",
        ] {
            let d = parse_descriptor(text).unwrap();
            assert_eq!(d.to_string(), text);
            assert_eq!(parse_descriptor(&d.to_string()).unwrap(), d);
        }
    }
}
