//! Words in the free group on generators `a1, a2, ...`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("cannot parse word token {0:?}")]
    Parse(String),
    #[error("generator index {index} out of range for {count} generators")]
    GeneratorOutOfRange { index: usize, count: usize },
    #[error("word {0} is not cyclically reduced")]
    NotCyclicallyReduced(String),
    #[error("word {0} is too short")]
    TooShort(String),
}

/// A generator (0-based) raised to `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, sign: i8) -> Self {
        Letter {
            generator,
            inverse: sign < 0,
        }
    }

    pub fn sign(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inv(self) -> Letter {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    /// Builds a word from `(generator, sign)` pairs with 0-based generators.
    pub fn from_pairs(pairs: &[(usize, i8)]) -> Self {
        Word::new(pairs.iter().map(|&(g, s)| Letter::new(g, s)).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word::new(self.letters.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word::new(letters)
    }

    pub fn pow(&self, m: usize) -> Word {
        Word::new(self.letters.repeat(m))
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.generator).max()
    }

    pub fn check_generators(&self, count: usize) -> Result<(), WordError> {
        match self.max_generator() {
            Some(index) if index >= count => Err(WordError::GeneratorOutOfRange { index, count }),
            _ => Ok(()),
        }
    }

    /// Removes adjacent inverse pairs.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word::new(out)
    }

    /// Free reduction followed by removal of inverse pairs across the ends.
    pub fn cyclic_reduce(&self) -> Word {
        let w = self.free_reduce().letters;
        let (mut i, mut j) = (0, w.len());
        while j - i >= 2 && w[i] == w[j - 1].inv() {
            i += 1;
            j -= 1;
        }
        Word::new(w[i..j].to_vec())
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        let n = self.letters.len();
        (0..n).all(|i| n < 2 || self.letters[i] != self.letters[(i + 1) % n].inv())
    }

    /// Exponent sum of each of the first `count` generators.
    pub fn exponent_sums(&self, count: usize) -> Vec<i64> {
        let mut sums = vec![0; count];
        for l in &self.letters {
            sums[l.generator] += l.sign();
        }
        sums
    }

    pub fn occurrences(&self, generator: usize) -> usize {
        self.letters.iter().filter(|l| l.generator == generator).count()
    }

    pub fn rotate(&self, k: usize) -> Word {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            letters.rotate_left(k % self.letters.len());
        }
        Word::new(letters)
    }

    /// Lexicographically least word among all rotations of `self` and its
    /// inverse; equal for relators that differ by conjugation or inversion.
    pub fn cyclic_normal_form(&self) -> Word {
        let inv = self.inverse();
        (0..self.len().max(1))
            .flat_map(|k| [self.rotate(k), inv.rotate(k)])
            .min()
            .unwrap_or_default()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "a{}", l.generator + 1)?;
            if l.inverse {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;

    /// Parses whitespace-separated tokens `a<i>` or `a<i>^<k>` with 1-based
    /// `i` and nonzero integer `k`; `1` denotes the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::new();
        for token in s.split_whitespace() {
            if token == "1" {
                continue;
            }
            let bad = || WordError::Parse(token.to_string());
            let body = token.strip_prefix('a').ok_or_else(bad)?;
            let (index, power) = match body.split_once('^') {
                Some((i, p)) => (i, p.parse::<i64>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let index: usize = index.parse().map_err(|_| bad())?;
            if index == 0 || power == 0 {
                return Err(bad());
            }
            let letter = Letter::new(index - 1, if power < 0 { -1 } else { 1 });
            for _ in 0..power.unsigned_abs() {
                letters.push(letter);
            }
        }
        Ok(Word::new(letters))
    }
}
