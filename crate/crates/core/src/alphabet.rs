use std::fmt;

use crate::error::{Error, Result};

/// Index of a letter within its alphabet.
pub type Letter = usize;

/// A finite word as a sequence of letter indices.
pub type Word = Vec<Letter>;

/// Ordered list of letter names. Letter order drives every breadth-first
/// exploration in the crate, so it is part of an automaton's identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Alphabet {
    letters: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(letters: impl IntoIterator<Item = S>) -> Result<Self> {
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        for (i, l) in letters.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::Invalid(format!("bad letter name {l:?}")));
            }
            if letters[..i].contains(l) {
                return Err(Error::Invalid(format!("duplicate letter `{l}`")));
            }
        }
        Ok(Alphabet { letters })
    }

    /// Alphabet whose letters are the given characters.
    pub fn from_chars(chars: &str) -> Self {
        Self::new(chars.chars().map(String::from)).expect("distinct characters")
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.letters
    }

    pub fn name(&self, a: Letter) -> &str {
        &self.letters[a]
    }

    pub fn index(&self, name: &str) -> Result<Letter> {
        self.letters
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| Error::UnknownLetter(name.to_string()))
    }

    /// Parses a word. Whitespace- or comma-separated input is split on the
    /// separators; otherwise, when every letter is a single character, the
    /// input is read character by character. The empty string is the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == "ε" {
            return Ok(Vec::new());
        }
        if text.contains(|c: char| c.is_whitespace() || c == ',') {
            return text
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| self.index(s))
                .collect();
        }
        if self.letters.iter().all(|l| l.chars().count() == 1) {
            return text.chars().map(|c| self.index(&c.to_string())).collect();
        }
        Ok(vec![self.index(text)?])
    }

    /// Renders a word; single-character alphabets are concatenated, others
    /// are space-separated.
    pub fn render(&self, w: &[Letter]) -> String {
        let single = self.letters.iter().all(|l| l.chars().count() == 1);
        let parts: Vec<&str> = w.iter().map(|&a| self.name(a)).collect();
        if single {
            parts.concat()
        } else {
            parts.join(" ")
        }
    }

    /// All words of length exactly `len`, in lexicographic order of letter indices.
    pub fn words_of_length(&self, len: usize) -> Vec<Word> {
        let k = self.len();
        if len == 0 {
            return vec![Vec::new()];
        }
        if k == 0 {
            return Vec::new();
        }
        let mut out = Vec::with_capacity(k.pow(len as u32));
        let mut w = vec![0; len];
        loop {
            out.push(w.clone());
            let mut i = len;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                w[i] += 1;
                if w[i] < k {
                    break;
                }
                w[i] = 0;
            }
        }
    }

    /// All words of length at most `max_len`, ordered by length then lexicographically.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        (0..=max_len).flat_map(|l| self.words_of_length(l)).collect()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.letters.join(" "))
    }
}
