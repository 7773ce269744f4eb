use std::collections::BTreeSet;

use super::diagram::Diagram;
use crate::combinatorics::HookShape;
use crate::error::{Error, Result};
use crate::fk::{FKWord, Generator};

/// A commutation class of labelings of a diagram, keyed by its canonical
/// word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct LabelClass {
    pub diagram: Diagram,
    pub word: FKWord,
}

/// Canonical words of all labelings `L` of `d` such that the first `l`
/// letters have distinct rows and weakly increasing columns, and the rest
/// have distinct columns and weakly increasing rows.
pub fn split_label_classes(d: &Diagram, l: usize) -> BTreeSet<FKWord> {
    let boxes = d.boxes();
    let mut out = BTreeSet::new();
    let mut seq: Vec<(usize, usize)> = Vec::with_capacity(boxes.len());
    let mut used = vec![false; boxes.len()];
    extend(&boxes, l, &mut used, &mut seq, &mut out);
    out
}

fn extend(
    boxes: &[(usize, usize)],
    l: usize,
    used: &mut [bool],
    seq: &mut Vec<(usize, usize)>,
    out: &mut BTreeSet<FKWord>,
) {
    let p = seq.len();
    if p == boxes.len() {
        let word = FKWord::new(seq.iter().map(|&(i, j)| Generator::new_unchecked(i, j)).collect());
        out.insert(word.canonical());
        return;
    }
    for b in 0..boxes.len() {
        if used[b] {
            continue;
        }
        let (i, j) = boxes[b];
        let ok = if p < l {
            seq.iter().all(|&(r, _)| r != i) && (p == 0 || seq[p - 1].1 <= j)
        } else {
            seq[l..].iter().all(|&(_, c)| c != j) && (p == l || seq[p - 1].0 <= i)
        };
        if ok {
            used[b] = true;
            seq.push(boxes[b]);
            extend(boxes, l, used, seq, out);
            seq.pop();
            used[b] = false;
        }
    }
}

fn check_size(d: &Diagram, hook: HookShape) -> Result<bool> {
    if d.len() != hook.size() {
        return Err(Error::SizeMismatch { expected: hook.size(), got: d.len() });
    }
    Ok(d.row_count() >= hook.t && d.col_count() >= hook.s)
}

/// Classes of labelings of `d` with respect to the hook: the split sits
/// after the `t` column letters.
pub fn hook_label_classes(d: &Diagram, hook: HookShape) -> Result<Vec<LabelClass>> {
    if !check_size(d, hook)? {
        return Ok(Vec::new());
    }
    Ok(split_label_classes(d, hook.t).into_iter().map(|word| LabelClass { diagram: *d, word }).collect())
}

/// The same classes described with the split one letter earlier.
pub fn hook_label_classes_shifted(d: &Diagram, hook: HookShape) -> Result<Vec<LabelClass>> {
    if !check_size(d, hook)? {
        return Ok(Vec::new());
    }
    Ok(split_label_classes(d, hook.t - 1).into_iter().map(|word| LabelClass { diagram: *d, word }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str, k: usize, n: usize) -> Diagram {
        Diagram::parse(s, k, n).unwrap()
    }

    #[test]
    fn single_box() {
        let x = d("[(1,2)]", 1, 2);
        let classes = hook_label_classes(&x, HookShape::new(1, 1).unwrap()).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].word.to_string(), "[(1,2)]");
    }

    #[test]
    fn column_classes_are_row_orders() {
        // letters in one column never commute, so each order is its own class
        let x = d("[(1,4),(2,4),(3,4)]", 3, 5);
        let classes = hook_label_classes(&x, HookShape::new(1, 3).unwrap()).unwrap();
        assert_eq!(classes.len(), 6);
        assert_eq!(classes[0].word.to_string(), "[(1,4),(2,4),(3,4)]");
    }

    #[test]
    fn size_mismatch() {
        let x = d("[(1,3)]", 2, 4);
        assert!(matches!(
            hook_label_classes(&x, HookShape::new(2, 2).unwrap()),
            Err(Error::SizeMismatch { expected: 3, got: 1 })
        ));
    }

    #[test]
    fn too_few_rows_gives_nothing() {
        let x = d("[(1,3),(1,4),(1,5)]", 2, 5);
        assert!(hook_label_classes(&x, HookShape::new(2, 2).unwrap()).unwrap().is_empty());
    }
}
