//! West's stack-sorting map and brute-force preimage oracles.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{for_each_permutation, Entry, Permutation};
use crate::trees::{enumerate_postorder_preimages, in_order, TreeFamily};

/// `s(ε) = ε`, and `s(L n R) = s(L) s(R) n` where `n` is the largest entry.
pub fn sort_once(p: &Permutation) -> Permutation {
    let mut out = Vec::with_capacity(p.len());
    sort_into(p.entries(), &mut out);
    Permutation::from_vec_unchecked(out)
}

fn sort_into(entries: &[Entry], out: &mut Vec<Entry>) {
    let Some((pos, &max)) = entries.iter().enumerate().max_by_key(|(_, &v)| v) else {
        return;
    };
    sort_into(&entries[..pos], out);
    sort_into(&entries[pos + 1..], out);
    out.push(max);
}

/// `s` applied `t` times.
pub fn sort_iterate(p: &Permutation, t: usize) -> Permutation {
    (0..t).fold(p.clone(), |acc, _| sort_once(&acc))
}

/// Whether `s(sigma) == target`, computed with the single-stack procedure
/// and abandoned at the first output entry that disagrees with `target`.
pub fn sorts_to(sigma: &[Entry], target: &[Entry]) -> bool {
    if sigma.len() != target.len() {
        return false;
    }
    let mut stack: Vec<Entry> = Vec::with_capacity(sigma.len());
    let mut emitted = 0;
    for &x in sigma {
        while let Some(&top) = stack.last() {
            if top > x {
                break;
            }
            if target[emitted] != top {
                return false;
            }
            emitted += 1;
            stack.pop();
        }
        stack.push(x);
    }
    while let Some(top) = stack.pop() {
        if target[emitted] != top {
            return false;
        }
        emitted += 1;
    }
    true
}

/// `s⁻¹(target)`, members in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreimageSet {
    pub target: Permutation,
    pub members: Vec<Permutation>,
}

impl PreimageSet {
    pub fn fertility(&self) -> usize {
        self.members.len()
    }
}

/// Brute force: every `σ ∈ S_n` with `s(σ) = p`.
pub fn preimages(p: &Permutation) -> Result<PreimageSet> {
    p.require_normalized()?;
    let mut members = Vec::new();
    for_each_permutation(p.len(), |sigma| {
        if sorts_to(sigma, p.entries()) {
            members.push(Permutation::from_vec_unchecked(sigma.to_vec()));
        }
    });
    Ok(PreimageSet {
        target: p.clone(),
        members,
    })
}

/// The same set obtained as in-order readings of the decreasing binary plane
/// trees whose postorder is `p`.
pub fn preimages_via_trees(p: &Permutation) -> Result<PreimageSet> {
    let trees = enumerate_postorder_preimages(p, TreeFamily::Binary)?;
    let mut members = trees.iter().map(in_order).collect::<Result<Vec<_>>>()?;
    members.sort();
    Ok(PreimageSet {
        target: p.clone(),
        members,
    })
}

fn common_length(perms: &[Permutation]) -> Result<Option<usize>> {
    let mut len = None;
    for p in perms {
        p.require_normalized()?;
        match len {
            None => len = Some(p.len()),
            Some(n) if n != p.len() => return Err(Error::MixedLengths(n, p.len())),
            _ => {}
        }
    }
    Ok(len)
}

/// `s⁻¹(A)` for a set `A ⊆ S_n`, deduplicated and in lexicographic order.
pub fn preimages_of_set(perms: &[Permutation]) -> Result<Vec<Permutation>> {
    let Some(n) = common_length(perms)? else {
        return Ok(Vec::new());
    };
    let targets: HashSet<&[Entry]> = perms.iter().map(|p| p.entries()).collect();
    let mut out = Vec::new();
    let mut image = Vec::with_capacity(n);
    for_each_permutation(n, |sigma| {
        image.clear();
        sort_into(sigma, &mut image);
        if targets.contains(image.as_slice()) {
            out.push(Permutation::from_vec_unchecked(sigma.to_vec()));
        }
    });
    Ok(out)
}

/// `|s⁻¹(A)|` without materializing the preimages.
pub fn fertility_of_set(perms: &[Permutation]) -> Result<usize> {
    let Some(n) = common_length(perms)? else {
        return Ok(0);
    };
    let targets: HashSet<&[Entry]> = perms.iter().map(|p| p.entries()).collect();
    let mut count = 0;
    let mut image = Vec::with_capacity(n);
    for_each_permutation(n, |sigma| {
        image.clear();
        sort_into(sigma, &mut image);
        if targets.contains(image.as_slice()) {
            count += 1;
        }
    });
    Ok(count)
}

/// Positive fertility, decided by searching `S_n` for a preimage.
pub fn is_sorted_perm(p: &Permutation) -> Result<bool> {
    p.require_normalized()?;
    let mut found = false;
    for_each_permutation(p.len(), |sigma| {
        if !found && sorts_to(sigma, p.entries()) {
            found = true;
        }
    });
    Ok(found)
}

/// All of `S_n` grouped by image under `s`.
#[derive(Clone, Debug)]
pub struct PreimageIndex {
    n: usize,
    by_image: HashMap<Permutation, Vec<Permutation>>,
}

impl PreimageIndex {
    pub fn build(n: usize) -> Self {
        let mut by_image: HashMap<Permutation, Vec<Permutation>> = HashMap::new();
        let mut image = Vec::with_capacity(n);
        for_each_permutation(n, |sigma| {
            image.clear();
            sort_into(sigma, &mut image);
            let key = Permutation::from_vec_unchecked(image.clone());
            by_image
                .entry(key)
                .or_default()
                .push(Permutation::from_vec_unchecked(sigma.to_vec()));
        });
        PreimageIndex { n, by_image }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Lexicographically ordered preimages of `p` (empty for non-members of `S_n`).
    pub fn preimages(&self, p: &Permutation) -> &[Permutation] {
        self.by_image.get(p).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn fertility(&self, p: &Permutation) -> usize {
        self.preimages(p).len()
    }

    /// The image `s(S_n)`: every sorted permutation of length `n`.
    pub fn sorted_permutations(&self) -> BTreeSet<&Permutation> {
        self.by_image.keys().collect()
    }

    /// `s⁻¹(A)` for `A ⊆ S_n`, concatenated in the order of `perms`.
    pub fn preimages_of_set<'a>(
        &'a self,
        perms: &'a [Permutation],
    ) -> impl Iterator<Item = &'a Permutation> + 'a {
        perms.iter().flat_map(|p| self.preimages(p).iter())
    }
}
