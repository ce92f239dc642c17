//! Recursive-descent parser for the formula syntax.
//!
//! ```text
//! formula := iff ; iff := imp ("<->" imp)* ; imp := or ("->" imp)? ;
//! or := and ("|" and)* ; and := not ("&" not)* ;
//! not := "!" not | atom ; atom := "true" | "false" | IDENT | "(" formula ")"
//! ```

use super::{Alphabet, Formula};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    True,
    False,
    Ident(String),
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Not => "`!`".into(),
            Token::And => "`&`".into(),
            Token::Or => "`|`".into(),
            Token::Implies => "`->`".into(),
            Token::Iff => "`<->`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::True => "`true`".into(),
            Token::False => "`false`".into(),
            Token::Ident(name) => format!("`{name}`"),
        }
    }
}

/// Tokens paired with their 1-based column.
fn tokenize(text: &str) -> Result<Vec<(Token, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let column = i + 1;
        let c = chars[i];
        let rest = &chars[i..];
        let (token, len) = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '!' => (Token::Not, 1),
            '&' => (Token::And, 1),
            '|' => (Token::Or, 1),
            '(' => (Token::LParen, 1),
            ')' => (Token::RParen, 1),
            '-' if rest.get(1) == Some(&'>') => (Token::Implies, 2),
            '<' if rest.get(1) == Some(&'-') && rest.get(2) == Some(&'>') => (Token::Iff, 3),
            c if c.is_ascii_alphabetic() || c == '_' => {
                let len = rest
                    .iter()
                    .take_while(|c| c.is_ascii_alphanumeric() || **c == '_')
                    .count();
                let word: String = rest[..len].iter().collect();
                let token = match word.as_str() {
                    "true" => Token::True,
                    "false" => Token::False,
                    _ => Token::Ident(word),
                };
                (token, len)
            }
            other => {
                return Err(Error::Syntax {
                    column,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        tokens.push((token, column));
        i += len;
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end_column: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map_or(self.end_column, |(_, c)| *c)
    }

    fn eat(&mut self, token: &Token) -> bool {
        if self.peek() == Some(token) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, expected: &str) -> Error {
        let found = self
            .peek()
            .map_or_else(|| "end of input".to_string(), Token::describe);
        Error::Syntax {
            column: self.column(),
            message: format!("expected {expected}, found {found}"),
        }
    }

    fn iff(&mut self) -> Result<Formula> {
        let mut lhs = self.imp()?;
        while self.eat(&Token::Iff) {
            let rhs = self.imp()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<Formula> {
        let lhs = self.or()?;
        if self.eat(&Token::Implies) {
            let rhs = self.imp()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut lhs = self.and()?;
        while self.eat(&Token::Or) {
            let rhs = self.and()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut lhs = self.not()?;
        while self.eat(&Token::And) {
            let rhs = self.not()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn not(&mut self) -> Result<Formula> {
        if self.eat(&Token::Not) {
            return Ok(Formula::not(self.not()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula> {
        let Some(token) = self.peek().cloned() else {
            return Err(self.error("a formula"));
        };
        let formula = match token {
            Token::True => Formula::truth(),
            Token::False => Formula::falsity(),
            Token::Ident(name) => Formula::var(self.alphabet, &name)?,
            Token::LParen => {
                self.pos += 1;
                let inner = self.iff()?;
                if !self.eat(&Token::RParen) {
                    return Err(self.error("`)`"));
                }
                return Ok(inner);
            }
            _ => return Err(self.error("a formula")),
        };
        self.pos += 1;
        Ok(formula)
    }
}

/// Parses `text` against the variables of `alphabet`.
pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Formula> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        end_column: text.chars().count() + 1,
        alphabet,
    };
    let formula = parser.iff()?;
    if parser.peek().is_some() {
        return Err(parser.error("end of input"));
    }
    Ok(formula)
}
