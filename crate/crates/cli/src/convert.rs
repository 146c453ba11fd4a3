//! Moves objects along `bpath <-> elena <-> tree <-> apath`, one stage at a
//! time.

use std::fmt;

use clap::ValueEnum;
use elena::bijections::{
    broom_elena_to_tree, broom_tree_to_elena, compose_b_path, composite_odd, composite_odd_inv,
    decompose_b_path, glove_path_to_tree, glove_tree_to_path, join_last_two, split_last_two,
};
use elena::{Band, ElenaWord, Error, EvenEnd, LatticePath, OddEnd, PlaneTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Kind {
    Bpath,
    Elena,
    Tree,
    Apath,
}

/// One object in any of the four representations. The end level of an `A`
/// path is its tag in the disjoint union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    B(LatticePath),
    Word(ElenaWord),
    Tree(PlaneTree),
    A(LatticePath),
}

#[derive(Debug)]
pub struct StageError {
    pub stage: &'static str,
    pub error: Error,
}

impl fmt::Display for StageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.stage, self.error)
    }
}

fn at<T>(stage: &'static str, r: Result<T, Error>) -> Result<T, StageError> {
    r.map_err(|error| StageError { stage, error })
}

impl Object {
    pub fn kind(&self) -> Kind {
        match self {
            Object::B(_) => Kind::Bpath,
            Object::Word(_) => Kind::Elena,
            Object::Tree(_) => Kind::Tree,
            Object::A(_) => Kind::Apath,
        }
    }

    pub fn parse(kind: Kind, text: &str) -> Result<Object, StageError> {
        Ok(match kind {
            Kind::Bpath => Object::B(at("parse bpath", LatticePath::parse(text, Band::B))?),
            // Every A path ends at 0 or 2 (even length) or 1 or 3 (odd).
            Kind::Apath => Object::A(at("parse apath", LatticePath::parse(text, Band::A))?),
            Kind::Elena => Object::Word(at("parse elena", ElenaWord::parse(text))?),
            Kind::Tree => Object::Tree(at("parse tree", PlaneTree::parse(text))?),
        })
    }

    /// Canonical text; `A` paths get a trailing `# end <level>` line.
    pub fn render(&self) -> String {
        match self {
            Object::B(p) => p.to_string(),
            Object::Word(w) => w.to_string(),
            Object::Tree(t) => t.to_string(),
            Object::A(p) => format!("{p}\n# end {}", p.end_level()),
        }
    }

    fn forward(self) -> Result<Object, StageError> {
        Ok(match self {
            Object::B(b) => Object::Word(at("decompose", decompose_b_path(&b))?),
            Object::Word(w) => Object::Tree(broom_elena_to_tree(&w.to_elena())),
            Object::Tree(t) => {
                let long = at("glove", glove_tree_to_path(&t))?;
                Object::A(at("split", split_last_two(&long))?.0)
            }
            Object::A(_) => unreachable!("apath is the last stage"),
        })
    }

    fn backward(self) -> Result<Object, StageError> {
        Ok(match self {
            Object::A(a) => {
                let tag = EvenEnd::from_level(a.end_level()).ok_or_else(|| StageError {
                    stage: "join",
                    error: Error::NotInFamily {
                        expected: "A(2n,0)+A(2n,2)".into(),
                        path: a.to_string(),
                    },
                })?;
                let long = at("join", join_last_two(&a, tag))?;
                Object::Tree(at("glove", glove_path_to_tree(&long))?)
            }
            Object::Tree(t) => Object::Word(at("broom", broom_tree_to_elena(&t))?.to_word()),
            Object::Word(w) => Object::B(compose_b_path(&w)),
            Object::B(_) => unreachable!("bpath is the first stage"),
        })
    }

    pub fn convert(self, to: Kind) -> Result<Object, StageError> {
        // Odd lengths only exist at the two ends of the chain.
        match (&self, to) {
            (Object::B(b), Kind::Apath) if b.len() % 2 == 1 => {
                let (a, _) = at("odd composite", composite_odd(b))?;
                return Ok(Object::A(a));
            }
            (Object::A(a), Kind::Bpath) if a.len() % 2 == 1 => {
                let tag = OddEnd::from_level(a.end_level()).expect("odd A paths end at 1 or 3");
                return Ok(Object::B(at("odd composite", composite_odd_inv(a, tag))?));
            }
            _ => {}
        }
        let mut obj = self;
        while obj.kind() < to {
            obj = obj.forward()?;
        }
        while obj.kind() > to {
            obj = obj.backward()?;
        }
        Ok(obj)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn convert(from: Kind, to: Kind, text: &str) -> String {
        Object::parse(from, text)
            .and_then(|o| o.convert(to))
            .map(|o| o.render())
            .unwrap_or_else(|e| format!("error {e}"))
    }

    #[test]
    fn documented_conversions() {
        assert_eq!(convert(Kind::Bpath, Kind::Apath, "DU"), "UU\n# end 2");
        assert_eq!(
            convert(Kind::Elena, Kind::Tree, "a p3 a p1 p1 p4 a a p2 a"),
            "(((()()))(()()(()()()))()((())))"
        );
        assert_eq!(convert(Kind::Tree, Kind::Elena, "(())"), "a a");
    }

    #[test]
    fn backward_chain() {
        assert_eq!(convert(Kind::Apath, Kind::Bpath, "UU"), "DU");
        assert_eq!(convert(Kind::Apath, Kind::Elena, "UD"), "a a a");
        assert_eq!(convert(Kind::Tree, Kind::Bpath, "(()())"), "UD");
        assert_eq!(convert(Kind::Tree, Kind::Tree, "( () )"), "(())");
    }

    #[test]
    fn odd_paths() {
        assert_eq!(convert(Kind::Bpath, Kind::Apath, "D"), "U\n# end 1");
        assert_eq!(convert(Kind::Apath, Kind::Bpath, "U"), "D");
        assert!(convert(Kind::Bpath, Kind::Elena, "D").starts_with("error decompose"));
        assert!(convert(Kind::Apath, Kind::Tree, "U").starts_with("error join"));
    }

    #[test]
    fn stage_errors() {
        assert!(convert(Kind::Tree, Kind::Apath, "((((()))))").starts_with("error glove"));
        assert!(convert(Kind::Tree, Kind::Elena, "()").starts_with("error broom"));
        assert!(convert(Kind::Apath, Kind::Bpath, "UUU UU").starts_with("error parse apath"));
        assert!(convert(Kind::Bpath, Kind::Tree, "UU").starts_with("error parse bpath"));
    }
}
