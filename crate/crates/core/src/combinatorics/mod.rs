//! Permutations, partitions and the Grassmannian bijection between them.

mod partition;
mod perm;

pub use partition::{enumerate_partitions_in_box, HookShape, Partition};
pub use perm::{enumerate_sn, Permutation};

use crate::error::{Error, Result};

/// The partition of a Grassmannian permutation with descent at `k`:
/// `lambda_i = w_(k+1-i) - (k+1-i)`.
pub fn code_of(w: &Permutation, k: usize) -> Result<Partition> {
    let descents = w.descents();
    if !(descents.is_empty() || descents == [k]) || k > w.n() {
        return Err(Error::NotGrassmannian { perm: w.to_string(), k });
    }
    let parts = (1..=k).map(|i| w.at(k + 1 - i) - (k + 1 - i)).collect();
    Partition::new(parts)
}

/// `w(lambda, k)` in `S_n`: the first `k` values are `lambda_(k+1-i) + i`,
/// the rest follow in increasing order.
pub fn grassmannian_perm(lambda: &Partition, k: usize, n: usize) -> Result<Permutation> {
    if k > n || !lambda.fits_in(k, n - k) {
        return Err(Error::DoesNotFit { shape: format!("({lambda})"), k, m: n.saturating_sub(k) });
    }
    let mut entries: Vec<usize> = (1..=k).map(|i| lambda.part(k + 1 - i) + i).collect();
    let mut used = vec![false; n + 1];
    for &e in &entries {
        used[e] = true;
    }
    entries.extend((1..=n).filter(|&v| !used[v]));
    Ok(Permutation::from_vec_unchecked(entries))
}
