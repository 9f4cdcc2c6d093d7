use std::fmt;

use crate::error::WordError;

/// A word over the alphabet `[k] = {1, ..., k}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<u32>,
    k: u32,
}

impl Word {
    pub fn new(letters: Vec<u32>, k: u32) -> Result<Self, WordError> {
        if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l > k) {
            return Err(WordError::LetterOutOfRange { letter, k });
        }
        Ok(Word { letters, k })
    }

    /// Parses a digit string (`31421`) or a comma-separated list
    /// (`3,14,2`). Without an explicit `k` the largest letter is used.
    pub fn parse(text: &str, k: Option<u32>) -> Result<Self, WordError> {
        let text = text.trim();
        let letters: Vec<u32> = if text.contains(',') {
            text.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| WordError::Parse(text.to_string()))
                })
                .collect::<Result<_, _>>()?
        } else {
            text.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| WordError::Parse(text.to_string())))
                .collect::<Result<_, _>>()?
        };
        let k = k.unwrap_or_else(|| letters.iter().copied().max().unwrap_or(0));
        Word::new(letters, k)
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn alphabet_size(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().copied().collect(),
            k: self.k,
        }
    }

    /// Maps every letter `l` to `k + 1 - l`.
    pub fn complemented(&self) -> Word {
        Word {
            letters: self.letters.iter().map(|&l| self.k + 1 - l).collect(),
            k: self.k,
        }
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word {
            letters: self.letters[..len].to_vec(),
            k: self.k,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k <= 9 {
            for l in &self.letters {
                write!(f, "{l}")?;
            }
        } else {
            for (i, l) in self.letters.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{l}")?;
            }
        }
        Ok(())
    }
}
