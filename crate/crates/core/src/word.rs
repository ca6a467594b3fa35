//! Words over a finite alphabet of single-letter generators.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite sequence of letters. The empty word is the monoid identity and is
/// written `1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_bytes(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    /// Parses a plain letter string; `"1"` (or `""`) is the empty word.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "1" || text.is_empty() {
            return Ok(Word::empty());
        }
        text.chars()
            .map(|c| {
                if c.is_ascii_alphabetic() {
                    Ok(c as u8)
                } else {
                    Err(Error::Parse(format!("'{c}' is not a letter in word \"{text}\"")))
                }
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }

    /// `letter^count`.
    pub fn power_of(letter: u8, count: usize) -> Self {
        Word(vec![letter; count])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, count: usize) -> Word {
        Word(self.0.repeat(count))
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn contains_letter(&self, letter: u8) -> bool {
        self.0.contains(&letter)
    }

    /// Position of the first occurrence of `pattern`, if any.
    pub fn find(&self, pattern: &Word) -> Option<usize> {
        find_from(&self.0, &pattern.0, 0)
    }

    /// Replaces the factor of length `len` at `pos` by `with`.
    pub fn splice(&self, pos: usize, len: usize, with: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() - len + with.len());
        v.extend_from_slice(&self.0[..pos]);
        v.extend_from_slice(&with.0);
        v.extend_from_slice(&self.0[pos + len..]);
        Word(v)
    }

    /// Applies a letter-to-word substitution.
    pub fn substitute(&self, mut image: impl FnMut(u8) -> Word) -> Word {
        let mut v = Vec::new();
        for &c in &self.0 {
            v.extend_from_slice(image(c).letters());
        }
        Word(v)
    }

    /// Checks every letter against `alphabet`.
    pub fn check_alphabet(&self, alphabet: &[u8]) -> Result<()> {
        match self.0.iter().find(|c| !alphabet.contains(c)) {
            None => Ok(()),
            Some(&c) => Err(Error::UnknownLetter {
                letter: c as char,
                alphabet: String::from_utf8_lossy(alphabet).into_owned(),
            }),
        }
    }

    /// Length-lexicographic comparison key.
    pub fn shortlex_key(&self) -> (usize, &[u8]) {
        (self.0.len(), &self.0)
    }
}

pub(crate) fn find_from(haystack: &[u8], needle: &[u8], start: usize) -> Option<usize> {
    if needle.is_empty() {
        return Some(start.min(haystack.len()));
    }
    if haystack.len() < needle.len() {
        return None;
    }
    (start..=haystack.len() - needle.len()).find(|&i| &haystack[i..i + needle.len()] == needle)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(std::str::from_utf8(&self.0).expect("letters are ASCII"))
        }
    }
}

impl std::str::FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Word::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// All words of length `0..=max_len` over `alphabet`, in length-lexicographic
/// order (letters ordered as given).
pub fn enumerate_words(alphabet: &[u8], max_len: usize) -> WordEnumerator {
    WordEnumerator {
        alphabet: alphabet.to_vec(),
        max_len,
        current: Some(Vec::new()),
    }
}

/// Number of words [`enumerate_words`] yields.
pub fn word_count(alphabet_size: usize, max_len: usize) -> u128 {
    (0..=max_len as u32).map(|i| (alphabet_size as u128).pow(i)).sum()
}

#[derive(Debug, Clone)]
pub struct WordEnumerator {
    alphabet: Vec<u8>,
    max_len: usize,
    // digits into `alphabet`
    current: Option<Vec<usize>>,
}

impl Iterator for WordEnumerator {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let digits = self.current.as_mut()?;
        let word = Word(digits.iter().map(|&d| self.alphabet[d]).collect());
        // odometer increment, growing the length on carry-out
        let base = self.alphabet.len();
        let mut i = digits.len();
        loop {
            if i == 0 {
                if digits.len() == self.max_len || base == 0 {
                    self.current = None;
                } else {
                    let len = digits.len() + 1;
                    *digits = vec![0; len];
                }
                break;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < base {
                break;
            }
            digits[i] = 0;
        }
        Some(word)
    }
}
