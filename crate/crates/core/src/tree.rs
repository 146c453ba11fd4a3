//! Rooted plane trees, serialized as balanced parentheses including the root.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlaneTree {
    children: Vec<PlaneTree>,
}

impl PlaneTree {
    pub fn leaf() -> PlaneTree {
        PlaneTree::default()
    }

    pub fn with_children(children: Vec<PlaneTree>) -> PlaneTree {
        PlaneTree { children }
    }

    pub fn children(&self) -> &[PlaneTree] {
        &self.children
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Node count.
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(PlaneTree::size).sum::<usize>()
    }

    /// Edges on a longest root-to-leaf path.
    pub fn height(&self) -> usize {
        self.children
            .iter()
            .map(|c| c.height() + 1)
            .max()
            .unwrap_or(0)
    }

    /// Depth of the leaf reached by always following the last child.
    pub fn rightmost_leaf_depth(&self) -> usize {
        let mut node = self;
        let mut depth = 0;
        while let Some(last) = node.children.last() {
            node = last;
            depth += 1;
        }
        depth
    }

    pub fn parse(text: &str) -> Result<PlaneTree> {
        // Each open node collects its finished children here.
        let mut stack: Vec<Vec<PlaneTree>> = Vec::new();
        let mut root = None;
        for (pos, ch) in text.char_indices() {
            if ch.is_whitespace() {
                continue;
            }
            if root.is_some() {
                return Err(Error::TrailingInput { pos });
            }
            match ch {
                '(' => stack.push(Vec::new()),
                ')' => {
                    let children = stack.pop().ok_or(Error::UnbalancedParens { pos })?;
                    let node = PlaneTree { children };
                    match stack.last_mut() {
                        Some(parent) => parent.push(node),
                        None => root = Some(node),
                    }
                }
                _ => return Err(Error::InvalidChar { index: pos, ch }),
            }
        }
        root.ok_or(Error::UnbalancedParens { pos: text.len() })
    }

    fn write_parens(&self, out: &mut String) {
        out.push('(');
        for child in &self.children {
            child.write_parens(out);
        }
        out.push(')');
    }
}

impl FromStr for PlaneTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PlaneTree::parse(s)
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::with_capacity(2 * self.size());
        self.write_parens(&mut out);
        f.write_str(&out)
    }
}
