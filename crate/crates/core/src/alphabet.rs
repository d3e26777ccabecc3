//! Finite alphabets of single-character symbols and words over them.

use std::fmt;

use crate::error::{Error, Result};

/// A letter, identified by its position in the owning [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub usize);

impl Symbol {
    pub fn index(self) -> usize {
        self.0
    }
}

/// An ordered set of printable characters. The order fixes the
/// exploration order of every breadth-first algorithm in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    chars: Vec<char>,
}

impl Alphabet {
    pub fn new(chars: impl IntoIterator<Item = char>) -> Result<Self> {
        let chars: Vec<char> = chars.into_iter().collect();
        if chars.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        for (i, c) in chars.iter().enumerate() {
            if c.is_control() || c.is_whitespace() {
                return Err(Error::InvalidAlphabet(format!(
                    "symbol {c:?} is not printable"
                )));
            }
            if chars[..i].contains(c) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol {c:?}")));
            }
        }
        Ok(Alphabet { chars })
    }

    /// The first `size` letters of `a, b, c, ...`.
    pub fn standard(size: usize) -> Result<Self> {
        if size == 0 || size > 26 {
            return Err(Error::InvalidAlphabet(format!(
                "standard alphabets have 1..=26 letters, got {size}"
            )));
        }
        Alphabet::new((b'a'..b'a' + size as u8).map(char::from))
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + Clone {
        (0..self.chars.len()).map(Symbol)
    }

    pub fn chars(&self) -> &[char] {
        &self.chars
    }

    pub fn char_of(&self, sym: Symbol) -> char {
        self.chars[sym.0]
    }

    pub fn symbol(&self, c: char) -> Result<Symbol> {
        self.chars
            .iter()
            .position(|&x| x == c)
            .map(Symbol)
            .ok_or(Error::UnknownSymbol(c))
    }

    pub fn contains(&self, sym: Symbol) -> bool {
        sym.0 < self.chars.len()
    }

    pub fn word(&self, text: &str) -> Result<Word> {
        text.chars().map(|c| self.symbol(c)).collect()
    }

    pub fn render(&self, word: &Word) -> String {
        word.iter().map(|&s| self.char_of(s)).collect()
    }

    pub(crate) fn ensure_same(&self, other: &Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.chars.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// A finite sequence of symbols. The empty word is `Word::default()`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Symbol> {
        self.0.iter()
    }

    pub fn push(&mut self, sym: Symbol) {
        self.0.push(sym)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}
