//! Text formats for algebras and tuple sequences.
//!
//! An algebra file reads
//!
//! ```text
//! algebra l3
//! size 3
//! chain
//! e 2
//! f 0
//! bot 0
//! top 2
//! product
//! 0 0 0
//! 0 0 1
//! 0 1 2
//! ```
//!
//! A non-chain order replaces `chain` with `order` followed by one covering
//! pair `lower upper` per line. Blank lines and `#` comments are ignored.
//! [`AlgebraFile::to_text`] writes the canonical form, which parses back to
//! the same text byte for byte.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::algebra::{Elem, FiniteResiduatedLattice, Order};
use crate::combinatorics::NatVecSeq;
use crate::error::AlgebraError;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Algebra { line: usize, source: AlgebraError },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl FormatError {
    fn syntax(line: usize, message: impl Into<String>) -> Self {
        FormatError::Syntax { line, message: message.into() }
    }

    pub fn line(&self) -> Option<usize> {
        match self {
            FormatError::Syntax { line, .. } | FormatError::Algebra { line, .. } => Some(*line),
            FormatError::Io { .. } => None,
        }
    }
}

/// A named algebra as stored on disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: String,
    pub algebra: FiniteResiduatedLattice,
}

/// Non-blank lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_index(line: usize, word: &str, what: &str) -> Result<usize, FormatError> {
    word.parse::<usize>()
        .map_err(|_| FormatError::syntax(line, format!("{what}: `{word}` is not a natural number")))
}

fn keyword_value<'a>(line: usize, text: &'a str, keyword: &str) -> Result<&'a str, FormatError> {
    let mut words = text.split_whitespace();
    match (words.next(), words.next(), words.next()) {
        (Some(k), Some(v), None) if k == keyword => Ok(v),
        _ => Err(FormatError::syntax(line, format!("expected `{keyword} <value>`, found `{text}`"))),
    }
}

impl AlgebraFile {
    pub fn new(name: impl Into<String>, algebra: FiniteResiduatedLattice) -> Self {
        AlgebraFile { name: name.into(), algebra }
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut lines = content_lines(text);
        let mut next = |what: &str| {
            lines
                .next()
                .ok_or_else(|| FormatError::syntax(text.lines().count().max(1), format!("unexpected end of file, expected {what}")))
        };
        let (l, t) = next("`algebra <name>`")?;
        let name = keyword_value(l, t, "algebra")?.to_string();
        let (l, t) = next("`size <n>`")?;
        let size = parse_index(l, keyword_value(l, t, "size")?, "size")?;
        if size == 0 {
            return Err(FormatError::syntax(l, "size must be positive"));
        }
        let (mut l, mut t) = next("`chain` or `order`")?;
        let mut covers = None;
        match t {
            "chain" => (l, t) = next("`e <i>`")?,
            "order" => {
                let mut pairs = Vec::new();
                loop {
                    (l, t) = next("a covering pair or `e <i>`")?;
                    if !t.starts_with(|c: char| c.is_ascii_digit()) {
                        break;
                    }
                    let words: Vec<&str> = t.split_whitespace().collect();
                    if words.len() != 2 {
                        return Err(FormatError::syntax(l, format!("expected a covering pair `i j`, found `{t}`")));
                    }
                    let lo = parse_index(l, words[0], "covering pair")?;
                    let hi = parse_index(l, words[1], "covering pair")?;
                    if lo >= size || hi >= size {
                        return Err(FormatError::syntax(l, format!("covering pair {lo} {hi} out of range")));
                    }
                    pairs.push((lo, hi));
                }
                covers = Some((l, pairs));
            }
            _ => return Err(FormatError::syntax(l, format!("expected `chain` or `order`, found `{t}`"))),
        }
        let mut constants = [0usize; 4];
        for (i, key) in ["e", "f", "bot", "top"].into_iter().enumerate() {
            if i > 0 {
                (l, t) = next(&format!("`{key} <i>`"))?;
            }
            constants[i] = parse_index(l, keyword_value(l, t, key)?, key)?;
        }
        let (l, t) = next("`product`")?;
        if t != "product" {
            return Err(FormatError::syntax(l, format!("expected `product`, found `{t}`")));
        }
        let product_line = l;
        let mut product = Vec::with_capacity(size * size);
        for row in 0..size {
            let (l, t) = next(&format!("product row {row}"))?;
            let cells = t
                .split_whitespace()
                .map(|w| parse_index(l, w, "product entry"))
                .collect::<Result<Vec<_>, _>>()?;
            if cells.len() != size {
                return Err(FormatError::syntax(
                    l,
                    format!("product row {row} has {} entries, expected {size}", cells.len()),
                ));
            }
            product.extend(cells);
        }
        if let Some((l, t)) = lines.next() {
            return Err(FormatError::syntax(l, format!("unexpected content after product table: `{t}`")));
        }
        let [e, f, bot, top] = constants;
        let algebra = match covers {
            None => {
                if bot != 0 || top != size - 1 {
                    return Err(FormatError::syntax(product_line, "a chain needs bot 0 and top size-1"));
                }
                FiniteResiduatedLattice::chain(size, product, e, f)
            }
            Some((cover_line, pairs)) => {
                let order = Order::from_covers(size, &pairs)
                    .map_err(|source| FormatError::Algebra { line: cover_line, source })?;
                FiniteResiduatedLattice::new(size, order, product, e, f, bot, top)
            }
        }
        .map_err(|source| FormatError::Algebra { line: product_line, source })?;
        Ok(AlgebraFile { name, algebra })
    }

    pub fn to_text(&self) -> String {
        let a = &self.algebra;
        let n = a.size();
        let mut out = String::new();
        writeln!(out, "algebra {}", self.name).unwrap();
        writeln!(out, "size {n}").unwrap();
        if a.is_canonical_chain() {
            out.push_str("chain\n");
        } else {
            out.push_str("order\n");
            for (lo, hi) in a.covers() {
                writeln!(out, "{lo} {hi}").unwrap();
            }
        }
        for (key, c) in [("e", a.e()), ("f", a.f()), ("bot", a.bot()), ("top", a.top())] {
            writeln!(out, "{key} {c}").unwrap();
        }
        out.push_str("product\n");
        let table = a.product_table();
        for row in table.chunks(n) {
            let cells: Vec<String> = row.iter().map(Elem::to_string).collect();
            writeln!(out, "{}", cells.join(" ")).unwrap();
        }
        out
    }

    pub fn load(path: &Path) -> Result<Self, FormatError> {
        Self::parse(&read(path)?)
    }

    pub fn save(&self, path: &Path) -> Result<(), FormatError> {
        std::fs::write(path, self.to_text())
            .map_err(|source| FormatError::Io { path: path.display().to_string(), source })
    }
}

fn read(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}

/// Parses a sequence file: the dimension `k`, then one tuple per line.
pub fn parse_sequence(text: &str) -> Result<NatVecSeq, FormatError> {
    let mut lines = content_lines(text);
    let (l, t) = lines.next().ok_or_else(|| FormatError::syntax(1, "empty sequence file"))?;
    let k = parse_index(l, t, "dimension")?;
    let mut entries = Vec::new();
    for (l, t) in lines {
        let tuple = t
            .split_whitespace()
            .map(|w| w.parse::<u64>().map_err(|_| FormatError::syntax(l, format!("`{w}` is not a natural number"))))
            .collect::<Result<Vec<_>, _>>()?;
        if tuple.len() != k {
            return Err(FormatError::syntax(l, format!("tuple has {} components, expected {k}", tuple.len())));
        }
        entries.push(tuple);
    }
    Ok(NatVecSeq::new(k, entries).expect("dimensions checked per line"))
}

pub fn sequence_to_text(seq: &NatVecSeq) -> String {
    let mut out = format!("{}\n", seq.dimension());
    for t in seq.entries() {
        let cells: Vec<String> = t.iter().map(u64::to_string).collect();
        writeln!(out, "{}", cells.join(" ")).unwrap();
    }
    out
}

pub fn load_sequence(path: &Path) -> Result<NatVecSeq, FormatError> {
    parse_sequence(&read(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::*;

    const L3: &str = "algebra l3\nsize 3\nchain\ne 2\nf 0\nbot 0\ntop 2\nproduct\n0 0 0\n0 0 1\n0 1 2\n";

    #[test]
    fn lukasiewicz_fixture() {
        let file = AlgebraFile::parse(L3).unwrap();
        assert_eq!(file.name, "l3");
        assert_eq!(file.algebra, lukasiewicz3());
        assert_eq!(file.to_text(), L3);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# three elements\nalgebra l3\n\nsize 3 # n\nchain\ne 2\nf 0\nbot 0\ntop 2\nproduct\n0 0 0\n0 0 1\n0 1 2\n";
        assert_eq!(AlgebraFile::parse(text).unwrap().to_text(), L3);
    }

    #[test]
    fn short_row_reports_line() {
        let text = L3.replace("0 0 1\n", "0 0\n");
        let err = AlgebraFile::parse(&text).unwrap_err();
        assert_eq!(err.line(), Some(10));
    }

    #[test]
    fn non_monotone_table_is_an_algebra_error() {
        let text = "algebra bad\nsize 2\nchain\ne 1\nf 0\nbot 0\ntop 1\nproduct\n1 0\n0 1\n";
        let err = AlgebraFile::parse(text).unwrap_err();
        assert!(matches!(err, FormatError::Algebra { line: 8, source: AlgebraError::NotResiduated(_) }), "{err}");
    }

    #[test]
    fn poset_round_trip() {
        let text = "algebra sq\nsize 4\norder\n0 1\n0 2\n1 3\n2 3\ne 3\nf 0\nbot 0\ntop 3\nproduct\n0 0 0 0\n0 1 0 1\n0 0 2 2\n0 1 2 3\n";
        let file = AlgebraFile::parse(text).unwrap();
        assert!(!file.algebra.is_canonical_chain());
        assert_eq!(file.to_text(), text);
    }

    #[test]
    fn sequences() {
        let s = parse_sequence("2\n1 2\n3 4\n").unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(sequence_to_text(&s), "2\n1 2\n3 4\n");
        assert_eq!(parse_sequence("2\n1 2\n3\n").unwrap_err().line(), Some(3));
    }
}
