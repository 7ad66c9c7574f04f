use crate::error::ParseError;
use crate::logic::formula::{Connective, Constant, Formula};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Var(usize),
    Const(Constant),
    Op(Connective),
    Not,
    Iff,
    Open,
    Close,
}

fn describe(t: Option<&(usize, Token)>) -> String {
    match t {
        None => "end of input".into(),
        Some((_, Token::Var(i))) => format!("`x{}`", i + 1),
        Some((_, Token::Const(c))) => format!("`{}`", c.symbol()),
        Some((_, Token::Op(op))) => format!("`{}`", op.symbol()),
        Some((_, Token::Not)) => "`~`".into(),
        Some((_, Token::Iff)) => "`<->`".into(),
        Some((_, Token::Open)) => "`(`".into(),
        Some((_, Token::Close)) => "`)`".into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let single = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'(' => Some(Token::Open),
            b')' => Some(Token::Close),
            b'*' => Some(Token::Op(Connective::Fusion)),
            b'\\' => Some(Token::Op(Connective::LDiv)),
            b'/' => Some(Token::Op(Connective::RDiv)),
            b'&' => Some(Token::Op(Connective::And)),
            b'|' => Some(Token::Op(Connective::Or)),
            b'~' => Some(Token::Not),
            _ => None,
        };
        if let Some(t) = single {
            out.push((start, t));
            i += 1;
        } else if text[i..].starts_with("<->") {
            out.push((start, Token::Iff));
            i += 3;
        } else if c.is_ascii_alphanumeric() {
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let word = &text[start..i];
            let token = match word {
                "e" => Token::Const(Constant::E),
                "f" => Token::Const(Constant::F),
                "bot" => Token::Const(Constant::Bot),
                "top" => Token::Const(Constant::Top),
                _ => match word.strip_prefix('x').and_then(|d| d.parse::<usize>().ok()) {
                    Some(n) if n >= 1 && !word[1..].starts_with('0') => Token::Var(n - 1),
                    _ => {
                        return Err(ParseError { position: start, message: format!("unknown identifier `{word}`") })
                    }
                },
            };
            out.push((start, token));
        } else {
            let ch = text[i..].chars().next().unwrap();
            return Err(ParseError { position: start, message: format!("unexpected character `{ch}`") });
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn error<T>(&self, message: String) -> Result<T, ParseError> {
        Err(ParseError { position: self.offset(), message })
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T, ParseError> {
        self.error(format!("expected {wanted}, found {}", describe(self.tokens.get(self.pos))))
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.level(1)?;
        if self.peek() != Some(&Token::Iff) {
            return Ok(lhs);
        }
        self.pos += 1;
        let rhs = self.level(1)?;
        if self.peek() == Some(&Token::Iff) {
            return self.error("`<->` is non-associative; add parentheses".into());
        }
        Ok(lhs.iff(rhs))
    }

    /// Binary levels: 1 `|`, 2 `&`, 3 `\ /`, 4 `*`.
    fn level(&mut self, prec: u8) -> Result<Formula, ParseError> {
        if prec > 4 {
            return self.unary();
        }
        let mut lhs = self.level(prec + 1)?;
        while let Some(&Token::Op(op)) = self.peek() {
            if op.precedence() != prec {
                break;
            }
            self.pos += 1;
            let rhs = self.level(prec + 1)?;
            lhs = Formula::binary(op, lhs, rhs);
            if !op.is_associative() {
                if let Some(&Token::Op(next)) = self.peek() {
                    if next.precedence() == prec {
                        return self.error(format!(
                            "`{}` is non-associative; add parentheses",
                            next.symbol()
                        ));
                    }
                }
                break;
            }
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Token::Not) => {
                self.pos += 1;
                Ok(self.unary()?.not())
            }
            Some(&Token::Var(i)) => {
                self.pos += 1;
                Ok(Formula::Var(i))
            }
            Some(&Token::Const(c)) => {
                self.pos += 1;
                Ok(Formula::Const(c))
            }
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.iff()?;
                if self.peek() != Some(&Token::Close) {
                    return self.unexpected("`)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => self.unexpected("a variable, constant, `~` or `(`"),
        }
    }
}

/// Parses the ASCII formula grammar.
///
/// Precedence from tightest: `~`, `*`, `\ /`, `&`, `|`, `<->`. `*`, `&` and
/// `|` associate to the left; `\`, `/` and `<->` do not associate.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0, end: text.len() };
    let formula = p.iff()?;
    if p.pos != p.tokens.len() {
        return p.unexpected("an operator or end of input");
    }
    Ok(formula)
}
