use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::fk::{FKElement, FKWord, Generator};

fn multiplicities(values: impl Iterator<Item = usize>) -> HashMap<usize, usize> {
    let mut m = HashMap::new();
    for v in values {
        *m.entry(v).or_insert(0) += 1;
    }
    m
}

/// Coefficient of a 4-letter class `x_IJ` in `s_22(theta_1..theta_k)`.
///
/// Cases, first match wins:
/// a repeated letter, or a row or column index used three or more times,
/// gives 0; four distinct rows and four distinct columns give 2; two rows
/// give 1 exactly when some word of the class reads its rows as
/// `i i' i i'`; otherwise two columns give 1 exactly when some word reads
/// its columns as `j j' j j'`; three rows and three columns, with `i` and
/// `j` the repeated indices, give 0 when `x_ij` is absent or when the other
/// row-`i` letter precedes `x_ij` and `x_ij` precedes the other column-`j`
/// letter; everything else gives 1.
pub fn two_by_two_coefficient(word: &FKWord) -> i64 {
    let letters = word.letters();
    assert_eq!(letters.len(), 4, "2x2 classes have four letters");
    if word.has_repeated_letter() {
        return 0;
    }
    let rows = multiplicities(letters.iter().map(Generator::i));
    let cols = multiplicities(letters.iter().map(Generator::j));
    if rows.values().chain(cols.values()).any(|&c| c >= 3) {
        return 0;
    }
    let (nr, nc) = (rows.len(), cols.len());
    if nr == 4 && nc == 4 {
        return 2;
    }
    if nr == 2 || nc == 2 {
        let key: fn(&Generator) -> usize = if nr == 2 { Generator::i } else { Generator::j };
        let alternating = word.commutation_class().iter().any(|w| {
            let l = w.letters();
            key(&l[0]) == key(&l[2]) && key(&l[1]) == key(&l[3])
        });
        return alternating as i64;
    }
    if nr == 3 && nc == 3 {
        let i = *rows.iter().find(|(_, &c)| c == 2).expect("one repeated row").0;
        let j = *cols.iter().find(|(_, &c)| c == 2).expect("one repeated column").0;
        let Some(pij) = letters.iter().position(|g| g.i() == i && g.j() == j) else {
            return 0;
        };
        // letters sharing an index never commute, so positions in any
        // word of the class give the poset order
        let pia = letters.iter().position(|g| g.i() == i && g.j() != j).expect("second row-i letter");
        let pbj = letters.iter().position(|g| g.j() == j && g.i() != i).expect("second column-j letter");
        return if pia < pij && pij < pbj { 0 } else { 1 };
    }
    1
}

/// All commutation classes of 4-letter words with rows in `1..=k` and
/// columns in `k+1..=n`.
pub fn four_letter_classes(k: usize, n: usize) -> BTreeSet<FKWord> {
    let gens: Vec<Generator> =
        (1..=k).cartesian_product(k + 1..=n).map(|(i, j)| Generator::new_unchecked(i, j)).collect();
    (0..4)
        .map(|_| gens.iter().copied())
        .multi_cartesian_product()
        .map(|letters| FKWord::new(letters).canonical())
        .collect()
}

/// `s_22(theta_1..theta_k)` as a nonnegative combination of 4-letter
/// classes.
pub fn two_by_two_expansion(k: usize, n: usize) -> Result<FKElement> {
    if k < 2 || n < k + 2 {
        return Err(Error::DoesNotFit { shape: "(2,2)".into(), k, m: n.saturating_sub(k) });
    }
    let mut el = FKElement::zero();
    for class in four_letter_classes(k, n) {
        let c = two_by_two_coefficient(&class);
        if c != 0 {
            el.add_word(&class, c);
        }
    }
    Ok(el)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FKWord {
        s.parse::<FKWord>().unwrap().canonical()
    }

    #[test]
    fn four_distinct_rows_and_columns() {
        assert_eq!(two_by_two_coefficient(&w("[(1,5),(2,6),(3,7),(4,8)]")), 2);
    }

    #[test]
    fn triple_index() {
        assert_eq!(two_by_two_coefficient(&w("[(1,3),(1,4),(1,5),(2,3)]")), 0);
    }

    #[test]
    fn column_chain_pattern_is_zero() {
        // x_(a j1) x_(b j1) x_(b j2) x_(c j2)
        assert_eq!(two_by_two_coefficient(&w("[(1,4),(2,4),(2,5),(3,5)]")), 0);
    }

    #[test]
    fn table_row_gives_one() {
        // x_ia x_bj x_ij x_cd with distinct i,b,c and a,j,d
        assert_eq!(two_by_two_coefficient(&w("[(1,5),(2,6),(1,6),(3,7)]")), 1);
    }

    #[test]
    fn repeated_letter() {
        assert_eq!(two_by_two_coefficient(&w("[(1,3),(2,4),(1,3),(2,4)]")), 0);
    }

    #[test]
    fn smallest_case() {
        let el = two_by_two_expansion(2, 4).unwrap();
        assert!(el.is_nonnegative());
        assert_eq!(el.degrees(), vec![4]);
        assert!(two_by_two_expansion(1, 4).is_err());
        assert!(two_by_two_expansion(2, 3).is_err());
    }
}
