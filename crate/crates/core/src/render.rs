//! Schematic ASCII pictures of paths, trees and Elenas.

use crate::path::{LatticePath, Step};
use crate::tree::PlaneTree;
use crate::word::ElenaTree;

/// One row per visited level, highest first. Each step is drawn in the row
/// of its upper endpoint: `/` for up, `\` for down.
pub fn render_path(path: &LatticePath) -> String {
    let levels = path.levels();
    let top = *levels.iter().max().expect("at least s_0");
    let bottom = *levels.iter().min().expect("at least s_0");
    let label_width = [top, bottom]
        .iter()
        .map(|l| l.to_string().len())
        .max()
        .unwrap();
    let mut out = String::new();
    for row in (bottom..=top).rev() {
        let mut line = format!("{row:>label_width$} |");
        for (i, step) in path.steps().iter().enumerate() {
            let upper = levels[i].max(levels[i + 1]);
            line.push(match (upper == row, step) {
                (false, _) => ' ',
                (true, Step::Up) => '/',
                (true, Step::Down) => '\\',
            });
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Indented outline, two spaces per level of depth.
pub fn render_tree(tree: &PlaneTree) -> String {
    fn walk(node: &PlaneTree, depth: usize, out: &mut String) {
        out.push_str(&"  ".repeat(depth));
        out.push_str("o\n");
        for child in node.children() {
            walk(child, depth + 1, out);
        }
    }
    let mut out = String::new();
    walk(tree, 0, &mut out);
    out
}

/// Spine nodes one per line, each followed by its hanging paths.
pub fn render_elena(elena: &ElenaTree) -> String {
    let mut out = String::new();
    for group in elena.groups() {
        out.push_str("a\n");
        for &k in group {
            let nodes = vec!["o"; k].join("-");
            out.push_str(&format!("  p{k} {nodes}\n"));
        }
    }
    out.push_str("a\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::Band;

    #[test]
    fn chevron() {
        let p = LatticePath::parse("UD", Band::A).unwrap();
        assert_eq!(render_path(&p), "1 |/\\\n0 |\n");
    }

    #[test]
    fn negative_levels() {
        let p = LatticePath::parse("DDUU", Band::B).unwrap();
        assert_eq!(render_path(&p), " 0 |\\  /\n-1 | \\/\n-2 |\n");
        let empty = LatticePath::empty(Band::B);
        assert_eq!(render_path(&empty), "0 |\n");
    }

    #[test]
    fn outlines() {
        let t: PlaneTree = "((())())".parse().unwrap();
        assert_eq!(render_tree(&t), "o\n  o\n    o\n  o\n");
        let e = ElenaTree::new(vec![vec![2], vec![]]).unwrap();
        assert_eq!(render_elena(&e), "a\n  p2 o-o\na\na\n");
    }
}
