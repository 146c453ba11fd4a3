//! The constructive maps between the path families and the two tree classes,
//! and their composition into the even and odd length bijections.
//!
//! Even lengths:
//!
//! ```text
//! B(2n,0) --decompose--> ElenaWord --word_to_elena--> ElenaTree
//!         --broom--> PlaneTree (height <= 3, n+2 nodes)
//!         --glove--> A(2n+2,0) --split_last_two--> A(2n,0) + A(2n,2)
//! ```
//!
//! Odd lengths reuse the same pipeline: a path in `B(2n-1,-1)` gets a final
//! up-step, and the image in `A(2n+2,0)` is stripped of its final `DD` and
//! one more step.

use std::fmt;

use crate::error::{Error, Result};
use crate::path::{Band, LatticePath, Step};
use crate::tree::PlaneTree;
use crate::word::{elena_to_word, word_to_elena, ElenaToken, ElenaTree, ElenaWord};

/// Trees in the image of the glove map on `[0, 3]` have at most this height.
pub const MAX_HEIGHT: usize = 3;

/// Which half of `A(2n,0) + A(2n,2)` a path belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EvenEnd {
    Zero,
    Two,
}

impl EvenEnd {
    pub fn level(self) -> i32 {
        match self {
            EvenEnd::Zero => 0,
            EvenEnd::Two => 2,
        }
    }

    pub fn from_level(level: i32) -> Option<EvenEnd> {
        match level {
            0 => Some(EvenEnd::Zero),
            2 => Some(EvenEnd::Two),
            _ => None,
        }
    }
}

/// Which half of `A(2n-1,1) + A(2n-1,3)` a path belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OddEnd {
    One,
    Three,
}

impl OddEnd {
    pub fn level(self) -> i32 {
        match self {
            OddEnd::One => 1,
            OddEnd::Three => 3,
        }
    }

    pub fn from_level(level: i32) -> Option<OddEnd> {
        match level {
            1 => Some(OddEnd::One),
            3 => Some(OddEnd::Three),
            _ => None,
        }
    }
}

impl fmt::Display for EvenEnd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.level())
    }
}

impl fmt::Display for OddEnd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.level())
    }
}

fn not_in(expected: &str, path: &LatticePath) -> Error {
    Error::NotInFamily {
        expected: expected.to_string(),
        path: path.to_string(),
    }
}

fn require(path: &LatticePath, band: Band, end: i32, odd: bool, expected: &str) -> Result<()> {
    if path.band() != band || path.end_level() != end || (path.len() % 2 == 1) != odd {
        return Err(not_in(expected, path));
    }
    Ok(())
}

/// Reads `U` as "enter a new rightmost child" and `D` as "return to parent".
pub fn glove_path_to_tree(path: &LatticePath) -> Result<PlaneTree> {
    require(path, Band::A, 0, false, "A(2n,0)")?;
    let mut stack: Vec<Vec<PlaneTree>> = vec![Vec::new()];
    for step in path.steps() {
        match step {
            Step::Up => stack.push(Vec::new()),
            Step::Down => {
                let node = PlaneTree::with_children(stack.pop().expect("nonnegative path"));
                stack.last_mut().expect("nonnegative path").push(node);
            }
        }
    }
    debug_assert_eq!(stack.len(), 1);
    Ok(PlaneTree::with_children(stack.pop().unwrap()))
}

pub fn glove_tree_to_path(tree: &PlaneTree) -> Result<LatticePath> {
    let height = tree.height();
    if height > MAX_HEIGHT {
        return Err(Error::TooTall {
            height,
            max: MAX_HEIGHT,
        });
    }
    fn walk(node: &PlaneTree, out: &mut Vec<Step>) {
        for child in node.children() {
            out.push(Step::Up);
            walk(child, out);
            out.push(Step::Down);
        }
    }
    let mut steps = Vec::with_capacity(2 * (tree.size() - 1));
    walk(tree, &mut steps);
    LatticePath::new(Band::A, steps)
}

/// Splits a path of `B(2n,0)` at its visits to level 0: an excursion `UD`
/// above 0 reads as `a`, a sojourn of `2k` steps below 0 as `p_k`. The word
/// is wrapped in one extra `a` on each side.
pub fn decompose_b_path(path: &LatticePath) -> Result<ElenaWord> {
    require(path, Band::B, 0, false, "B(2n,0)")?;
    let mut tokens = Vec::with_capacity(path.len() / 2 + 2);
    tokens.push(ElenaToken::A);
    let mut level = 0;
    let mut start = 0;
    for (i, step) in path.steps().iter().enumerate() {
        level += step.delta();
        if level == 0 {
            let len = i + 1 - start;
            if path.steps()[start] == Step::Up {
                debug_assert_eq!(len, 2);
                tokens.push(ElenaToken::A);
            } else {
                tokens.push(ElenaToken::P(len / 2));
            }
            start = i + 1;
        }
    }
    tokens.push(ElenaToken::A);
    ElenaWord::new(tokens)
}

/// The sojourn below 0 encoding a hanging path of `k` nodes: `DU` for
/// `k = 1`, otherwise `DD (UD)^(k-2) UU`.
fn sojourn(k: usize, out: &mut Vec<Step>) {
    if k == 1 {
        out.extend([Step::Down, Step::Up]);
        return;
    }
    out.extend([Step::Down, Step::Down]);
    for _ in 2..k {
        out.extend([Step::Up, Step::Down]);
    }
    out.extend([Step::Up, Step::Up]);
}

pub fn compose_b_path(word: &ElenaWord) -> LatticePath {
    let tokens = word.tokens();
    let inner = &tokens[1..tokens.len() - 1];
    let mut steps = Vec::with_capacity(2 * (word.size() - 2));
    for token in inner {
        match *token {
            ElenaToken::A => steps.extend([Step::Up, Step::Down]),
            ElenaToken::P(k) => sojourn(k, &mut steps),
        }
    }
    LatticePath::new(Band::B, steps).expect("sojourns stay in [-2, 1]")
}

/// The last spine node becomes the root, the other spine nodes its children
/// in order, and every hanging path of `k` nodes a child of its spine node
/// with `k - 1` leaves.
pub fn broom_elena_to_tree(elena: &ElenaTree) -> PlaneTree {
    let children = elena
        .groups()
        .iter()
        .map(|group| {
            PlaneTree::with_children(
                group
                    .iter()
                    .map(|&k| PlaneTree::with_children(vec![PlaneTree::leaf(); k - 1]))
                    .collect(),
            )
        })
        .collect();
    PlaneTree::with_children(children)
}

pub fn broom_tree_to_elena(tree: &PlaneTree) -> Result<ElenaTree> {
    let height = tree.height();
    if height > MAX_HEIGHT {
        return Err(Error::TooTall {
            height,
            max: MAX_HEIGHT,
        });
    }
    if tree.is_leaf() {
        return Err(Error::SingleNode);
    }
    let groups = tree
        .children()
        .iter()
        .map(|spine| {
            spine
                .children()
                .iter()
                .map(|broom| broom.children().len() + 1)
                .collect()
        })
        .collect();
    ElenaTree::new(groups)
}

/// Splits `A(2n+2,0)` into `A(2n,0) + A(2n,2)` by its final two steps.
pub fn split_last_two(path: &LatticePath) -> Result<(LatticePath, EvenEnd)> {
    require(path, Band::A, 0, false, "A(2n+2,0)")?;
    if path.is_empty() {
        return Err(not_in("A(2n+2,0)", path));
    }
    let prefix = path.prefix(path.len() - 2);
    let tag = EvenEnd::from_level(prefix.end_level()).expect("UD or DD ending");
    Ok((prefix, tag))
}

pub fn join_last_two(path: &LatticePath, tag: EvenEnd) -> Result<LatticePath> {
    let expected = match tag {
        EvenEnd::Zero => "A(2n,0)",
        EvenEnd::Two => "A(2n,2)",
    };
    require(path, Band::A, tag.level(), false, expected)?;
    let suffix = match tag {
        EvenEnd::Zero => [Step::Up, Step::Down],
        EvenEnd::Two => [Step::Down, Step::Down],
    };
    path.extended(&suffix)
}

/// The height restricted plane tree of `b` in `B(2n,0)`.
pub fn b_path_to_tree(b: &LatticePath) -> Result<PlaneTree> {
    let word = decompose_b_path(b)?;
    Ok(broom_elena_to_tree(&word_to_elena(&word)))
}

/// The image of `b` in `B(2n,0)` in `A(2n+2,0)`, before splitting.
pub fn b_path_to_long_a_path(b: &LatticePath) -> Result<LatticePath> {
    glove_tree_to_path(&b_path_to_tree(b)?)
}

pub fn long_a_path_to_b_path(a: &LatticePath) -> Result<LatticePath> {
    let tree = glove_path_to_tree(a)?;
    let elena = broom_tree_to_elena(&tree)?;
    Ok(compose_b_path(&elena_to_word(&elena)))
}

/// `B(2n,0) -> A(2n,0) + A(2n,2)`.
pub fn composite_even(b: &LatticePath) -> Result<(LatticePath, EvenEnd)> {
    split_last_two(&b_path_to_long_a_path(b)?)
}

pub fn composite_even_inv(a: &LatticePath, tag: EvenEnd) -> Result<LatticePath> {
    long_a_path_to_b_path(&join_last_two(a, tag)?)
}

const DD: [Step; 2] = [Step::Down, Step::Down];

/// `B(2n-1,-1) -> A(2n-1,1) + A(2n-1,3)`.
pub fn composite_odd(b: &LatticePath) -> Result<(LatticePath, OddEnd)> {
    require(b, Band::B, -1, true, "B(2n-1,-1)")?;
    let closed = b.extended(&[Step::Up])?;
    let long = b_path_to_long_a_path(&closed)?;
    if !long.ends_with(&DD) {
        return Err(Error::InternalContractViolation(format!(
            "image {long} of {closed} does not end in DD"
        )));
    }
    let two = long.prefix(long.len() - 2);
    let rest = two.prefix(two.len() - 1);
    let tag = match two.last_step() {
        Some(Step::Up) => OddEnd::One,
        Some(Step::Down) => OddEnd::Three,
        None => unreachable!("A(2n,2) is nonempty"),
    };
    debug_assert_eq!(rest.end_level(), tag.level());
    Ok((rest, tag))
}

pub fn composite_odd_inv(a: &LatticePath, tag: OddEnd) -> Result<LatticePath> {
    let expected = match tag {
        OddEnd::One => "A(2n-1,1)",
        OddEnd::Three => "A(2n-1,3)",
    };
    require(a, Band::A, tag.level(), true, expected)?;
    let last = match tag {
        OddEnd::One => Step::Up,
        OddEnd::Three => Step::Down,
    };
    let long = a.extended(&[last, Step::Down, Step::Down])?;
    let closed = long_a_path_to_b_path(&long)?;
    if closed.last_step() != Some(Step::Up) {
        return Err(Error::InternalContractViolation(format!(
            "preimage {closed} of {long} does not end in U"
        )));
    }
    Ok(closed.prefix(closed.len() - 1))
}

pub fn last_group_nonempty(elena: &ElenaTree) -> bool {
    elena.last_group_nonempty()
}

pub fn rightmost_leaf_depth(tree: &PlaneTree) -> usize {
    tree.rightmost_leaf_depth()
}
