//! Elenas: a spine of `a`-nodes, each but the last carrying an ordered
//! group of hanging paths.
//!
//! Two equivalent forms are kept. [`ElenaWord`] is the token sequence
//! `a p_k ... a ... a` with both outer `a`s present, and [`ElenaTree`] is
//! the structured form with one group of path lengths per spine node.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ElenaToken {
    A,
    /// A hanging path with this many nodes, at least one.
    P(usize),
}

impl ElenaToken {
    pub fn size(self) -> usize {
        match self {
            ElenaToken::A => 1,
            ElenaToken::P(k) => k,
        }
    }
}

impl FromStr for ElenaToken {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "a" {
            return Ok(ElenaToken::A);
        }
        let digits = s
            .strip_prefix('p')
            .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
            .ok_or_else(|| Error::BadToken(s.to_string()))?;
        match digits.parse::<usize>() {
            Ok(k) if k >= 1 => Ok(ElenaToken::P(k)),
            _ => Err(Error::BadToken(s.to_string())),
        }
    }
}

impl fmt::Display for ElenaToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElenaToken::A => f.write_str("a"),
            ElenaToken::P(k) => write!(f, "p{k}"),
        }
    }
}

/// A word in `(a p*)* a` with at least two tokens.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElenaWord {
    tokens: Vec<ElenaToken>,
}

impl ElenaWord {
    pub fn new(tokens: Vec<ElenaToken>) -> Result<ElenaWord> {
        if tokens.len() < 2 {
            return Err(Error::NotElenaShaped(format!(
                "{} token(s), need at least 2",
                tokens.len()
            )));
        }
        if tokens[0] != ElenaToken::A {
            return Err(Error::NotElenaShaped("must start with a".into()));
        }
        if tokens[tokens.len() - 1] != ElenaToken::A {
            return Err(Error::NotElenaShaped("must end with a".into()));
        }
        if tokens.contains(&ElenaToken::P(0)) {
            return Err(Error::BadToken("p0".into()));
        }
        Ok(ElenaWord { tokens })
    }

    pub fn parse(text: &str) -> Result<ElenaWord> {
        let tokens = text
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<_>>>()?;
        ElenaWord::new(tokens)
    }

    pub fn tokens(&self) -> &[ElenaToken] {
        &self.tokens
    }

    /// Number of nodes: one per `a`, `k` per `p_k`.
    pub fn size(&self) -> usize {
        self.tokens.iter().map(|t| t.size()).sum()
    }

    pub fn to_elena(&self) -> ElenaTree {
        word_to_elena(self)
    }
}

impl FromStr for ElenaWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ElenaWord::parse(s)
    }
}

impl fmt::Display for ElenaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, token) in self.tokens.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{token}")?;
        }
        Ok(())
    }
}

/// Structured Elena: `groups[i]` lists the path lengths hanging from the
/// `i`-th spine node. The last spine node has no group, so the spine has
/// `groups.len() + 1` nodes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElenaTree {
    groups: Vec<Vec<usize>>,
}

impl ElenaTree {
    pub fn new(groups: Vec<Vec<usize>>) -> Result<ElenaTree> {
        if groups.is_empty() {
            return Err(Error::NotElenaShaped("spine needs at least 2 nodes".into()));
        }
        if groups.iter().flatten().any(|&k| k == 0) {
            return Err(Error::NotElenaShaped(
                "hanging paths need at least 1 node".into(),
            ));
        }
        Ok(ElenaTree { groups })
    }

    /// Number of `a`-nodes.
    pub fn spine(&self) -> usize {
        self.groups.len() + 1
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn size(&self) -> usize {
        self.spine() + self.groups.iter().flatten().sum::<usize>()
    }

    pub fn last_group_nonempty(&self) -> bool {
        self.groups.last().is_some_and(|g| !g.is_empty())
    }

    pub fn to_word(&self) -> ElenaWord {
        elena_to_word(self)
    }
}

impl fmt::Display for ElenaTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", elena_to_word(self))
    }
}

pub fn word_to_elena(word: &ElenaWord) -> ElenaTree {
    let mut groups = Vec::new();
    // Every `a` except the last opens a group; tokens[0] is always `a`.
    for token in &word.tokens[..word.tokens.len() - 1] {
        match *token {
            ElenaToken::A => groups.push(Vec::new()),
            ElenaToken::P(k) => groups.last_mut().expect("word starts with a").push(k),
        }
    }
    ElenaTree { groups }
}

pub fn elena_to_word(elena: &ElenaTree) -> ElenaWord {
    let mut tokens = Vec::with_capacity(elena.size());
    for group in &elena.groups {
        tokens.push(ElenaToken::A);
        tokens.extend(group.iter().map(|&k| ElenaToken::P(k)));
    }
    tokens.push(ElenaToken::A);
    ElenaWord { tokens }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_elena() {
        let w = ElenaWord::parse("a a").unwrap();
        let e = word_to_elena(&w);
        assert_eq!(e.spine(), 2);
        assert_eq!(e.groups(), &[Vec::<usize>::new()]);
        assert_eq!(e.size(), 2);
        assert_eq!(w.size(), 2);
    }

    #[test]
    fn figure_two_word() {
        let w: ElenaWord = "a p3 a p1 p1 p4 a a p2 a".parse().unwrap();
        let e = w.to_elena();
        assert_eq!(e.spine(), 5);
        assert_eq!(e.groups(), &[vec![3], vec![1, 1, 4], vec![], vec![2]]);
        assert_eq!(e.size(), 16);
        assert_eq!(w.size(), 16);
        assert_eq!(e.to_word(), w);
        assert_eq!(w.to_string(), "a p3 a p1 p1 p4 a a p2 a");
        assert!(e.last_group_nonempty());
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(
            ElenaWord::parse("p1 a"),
            Err(Error::NotElenaShaped(_))
        ));
        assert!(matches!(
            ElenaWord::parse("a p1"),
            Err(Error::NotElenaShaped(_))
        ));
        assert!(matches!(
            ElenaWord::parse("a"),
            Err(Error::NotElenaShaped(_))
        ));
        assert!(matches!(
            ElenaWord::parse(""),
            Err(Error::NotElenaShaped(_))
        ));
    }

    #[test]
    fn token_errors() {
        for bad in ["p0", "p", "b", "A", "p-1", "p1x", "pp1", "p+2"] {
            let text = format!("a {bad} a");
            assert_eq!(
                ElenaWord::parse(&text),
                Err(Error::BadToken(bad.to_string())),
                "{bad}"
            );
        }
        assert_eq!(ElenaWord::parse("a p12 a").unwrap().size(), 14);
    }

    #[test]
    fn structured_form_validation() {
        assert!(ElenaTree::new(vec![]).is_err());
        assert!(ElenaTree::new(vec![vec![0]]).is_err());
        let e = ElenaTree::new(vec![vec![], vec![1]]).unwrap();
        assert_eq!(e.to_string(), "a a p1 a");
        assert!(e.last_group_nonempty());
        assert!(!ElenaTree::new(vec![vec![], vec![]])
            .unwrap()
            .last_group_nonempty());
    }
}
