//! Lattice paths with unit up and down steps confined to a band of levels.
//!
//! A path starts at level 0 and every prefix level must stay inside its
//! [`Band`]. Paths are validated once at construction and are immutable
//! afterwards, so every [`LatticePath`] in hand is band-legal.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn delta(self) -> i32 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }

    pub fn from_char(ch: char) -> Option<Step> {
        match ch {
            'U' => Some(Step::Up),
            'D' => Some(Step::Down),
            _ => None,
        }
    }
}

/// An inclusive interval of admissible levels containing 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Band {
    lo: i32,
    hi: i32,
}

impl Band {
    /// Levels `0..=3`, home of the `A` families.
    pub const A: Band = Band { lo: 0, hi: 3 };
    /// Levels `-2..=1`, home of the `B` families.
    pub const B: Band = Band { lo: -2, hi: 1 };

    pub fn new(lo: i32, hi: i32) -> Result<Band> {
        if lo <= 0 && 0 <= hi {
            Ok(Band { lo, hi })
        } else {
            Err(Error::InvalidBand { lo, hi })
        }
    }

    pub fn lo(self) -> i32 {
        self.lo
    }

    pub fn hi(self) -> i32 {
        self.hi
    }

    pub fn contains(self, level: i32) -> bool {
        self.lo <= level && level <= self.hi
    }

    /// Number of levels in the band.
    pub fn width(self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    /// `"A"` or `"B"` for the two named bands.
    pub fn name(self) -> Option<&'static str> {
        if self == Band::A {
            Some("A")
        } else if self == Band::B {
            Some("B")
        } else {
            None
        }
    }
}

impl fmt::Display for Band {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name() {
            Some(name) => f.write_str(name),
            None => write!(f, "[{},{}]", self.lo, self.hi),
        }
    }
}

/// A band-confined walk from level 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
    band: Band,
    end: i32,
}

impl LatticePath {
    pub fn new(band: Band, steps: Vec<Step>) -> Result<LatticePath> {
        let mut level = 0;
        for (i, step) in steps.iter().enumerate() {
            level += step.delta();
            if !band.contains(level) {
                return Err(Error::BandViolation {
                    index: i + 1,
                    level,
                    lo: band.lo,
                    hi: band.hi,
                });
            }
        }
        Ok(LatticePath {
            steps,
            band,
            end: level,
        })
    }

    pub fn empty(band: Band) -> LatticePath {
        LatticePath {
            steps: Vec::new(),
            band,
            end: 0,
        }
    }

    /// Parses a word over `U`/`D`; whitespace is ignored.
    pub fn parse(text: &str, band: Band) -> Result<LatticePath> {
        let mut steps = Vec::with_capacity(text.len());
        for (index, ch) in text.char_indices() {
            if ch.is_whitespace() {
                continue;
            }
            match Step::from_char(ch) {
                Some(step) => steps.push(step),
                None => return Err(Error::InvalidChar { index, ch }),
            }
        }
        LatticePath::new(band, steps)
    }

    pub fn band(&self) -> Band {
        self.band
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn end_level(&self) -> i32 {
        self.end
    }

    pub fn last_step(&self) -> Option<Step> {
        self.steps.last().copied()
    }

    /// The prefix levels `s_0 = 0, s_1, ..., s_n`.
    pub fn levels(&self) -> Vec<i32> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut level = 0;
        out.push(level);
        for step in &self.steps {
            level += step.delta();
            out.push(level);
        }
        out
    }

    pub fn ends_with(&self, suffix: &[Step]) -> bool {
        self.steps.ends_with(suffix)
    }

    /// The path followed by `suffix`, re-checked against the band.
    pub fn extended(&self, suffix: &[Step]) -> Result<LatticePath> {
        let mut steps = Vec::with_capacity(self.steps.len() + suffix.len());
        steps.extend_from_slice(&self.steps);
        steps.extend_from_slice(suffix);
        LatticePath::new(self.band, steps)
    }

    /// The first `len` steps. Prefixes of a band-legal path are band-legal.
    pub fn prefix(&self, len: usize) -> LatticePath {
        let steps = self.steps[..len].to_vec();
        let end = self.end
            - self.steps[len..]
                .iter()
                .map(|step| step.delta())
                .sum::<i32>();
        LatticePath {
            steps,
            band: self.band,
            end,
        }
    }

    pub fn is_member_of(&self, family: &FamilySpec) -> bool {
        self.band == family.band && self.len() == family.length && self.end == family.end
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            fmt::Write::write_char(f, step.as_char())?;
        }
        Ok(())
    }
}

/// Names one family: all paths in `band` of the given length ending at `end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    band: Band,
    length: usize,
    end: i32,
}

impl FamilySpec {
    pub fn new(band: Band, length: usize, end: i32) -> Result<FamilySpec> {
        if !band.contains(end) {
            return Err(Error::EndOutsideBand {
                end,
                lo: band.lo,
                hi: band.hi,
            });
        }
        Ok(FamilySpec { band, length, end })
    }

    /// `A(n, i)`, paths in `[0, 3]`.
    pub fn a(length: usize, end: i32) -> Result<FamilySpec> {
        FamilySpec::new(Band::A, length, end)
    }

    /// `B(n, i)`, paths in `[-2, 1]`.
    pub fn b(length: usize, end: i32) -> Result<FamilySpec> {
        FamilySpec::new(Band::B, length, end)
    }

    pub fn band(&self) -> Band {
        self.band
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn end(&self) -> i32 {
        self.end
    }

    /// A family whose length and end level differ in parity has no members.
    pub fn parity_ok(&self) -> bool {
        (self.length as i64 - self.end as i64).rem_euclid(2) == 0
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.band, self.length, self.end)
    }
}
