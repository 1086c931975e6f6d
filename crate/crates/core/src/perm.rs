//! Permutations in one-line notation, pattern containment and the structural
//! operations used to build pattern families.
//!
//! Positions are 1-based wherever they are exposed (`at`, descent indices,
//! hook endpoints) so that they line up with plot coordinates `(i, π_i)`.

use std::borrow::Borrow;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Entry = u32;

/// A permutation of a finite set of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Entry>", into = "Vec<Entry>")]
pub struct Permutation(Vec<Entry>);

impl Permutation {
    pub fn new(entries: Vec<Entry>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::InvalidPermutation(format!("{entries:?}")));
        }
        let distinct: BTreeSet<_> = entries.iter().collect();
        if distinct.len() != entries.len() {
            return Err(Error::InvalidPermutation(format!("{entries:?}")));
        }
        Ok(Permutation(entries))
    }

    /// Builds a permutation from entries already known to be distinct and
    /// positive. Only for internal constructions that preserve that invariant.
    pub(crate) fn from_vec_unchecked(entries: Vec<Entry>) -> Self {
        debug_assert!(Permutation::new(entries.clone()).is_ok());
        Permutation(entries)
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as Entry).collect())
    }

    /// The decreasing permutation `n (n-1) … 1`.
    pub fn decreasing(n: usize) -> Self {
        Permutation((1..=n as Entry).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Entry] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Entry> {
        self.0
    }

    /// Entry at 1-based position `i`.
    pub fn at(&self, i: usize) -> Entry {
        self.0[i - 1]
    }

    pub fn max_entry(&self) -> Option<Entry> {
        self.0.iter().copied().max()
    }

    pub fn is_normalized(&self) -> bool {
        is_normalized_slice(&self.0)
    }

    pub fn normalize(&self) -> Permutation {
        Permutation(normalize_slice(&self.0))
    }

    pub(crate) fn require_normalized(&self) -> Result<()> {
        if self.is_normalized() {
            Ok(())
        } else {
            Err(Error::NotNormalized(self.to_string()))
        }
    }

    pub fn reverse(&self) -> Permutation {
        Permutation(self.0.iter().rev().copied().collect())
    }

    /// Inverse of a normalized permutation.
    pub fn inverse(&self) -> Result<Permutation> {
        self.require_normalized()?;
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as Entry + 1;
        }
        Ok(Permutation(inv))
    }

    /// Relabels a normalized permutation onto `labels`, so that the result
    /// uses exactly that label set and normalizes back to `self`.
    pub fn unnormalize(&self, labels: &[Entry]) -> Result<Permutation> {
        self.require_normalized()?;
        if labels.len() != self.len() {
            return Err(Error::Precondition(format!(
                "cannot place {} onto {} labels",
                self,
                labels.len()
            )));
        }
        let mut sorted = labels.to_vec();
        sorted.sort_unstable();
        Permutation::new(self.0.iter().map(|&v| sorted[v as usize - 1]).collect())
    }

    /// Sub-permutation formed by the 1-based positions `from..=to`.
    pub fn window(&self, from: usize, to: usize) -> Permutation {
        if from > to {
            return Permutation::empty();
        }
        Permutation(self.0[from - 1..to].to_vec())
    }

    /// Digits run together, as used in the literature for short permutations.
    /// Falls back to the canonical spaced form when an entry exceeds 9.
    pub fn compact(&self) -> String {
        if self.is_empty() {
            return "e".to_string();
        }
        if self.0.iter().all(|&v| v < 10) {
            self.0.iter().map(|v| v.to_string()).collect()
        } else {
            self.to_string()
        }
    }
}

pub(crate) fn is_normalized_slice(entries: &[Entry]) -> bool {
    let n = entries.len();
    let mut seen = vec![false; n];
    for &v in entries {
        let v = v as usize;
        if v == 0 || v > n || seen[v - 1] {
            return false;
        }
        seen[v - 1] = true;
    }
    true
}

pub(crate) fn normalize_slice(entries: &[Entry]) -> Vec<Entry> {
    let mut order: Vec<usize> = (0..entries.len()).collect();
    order.sort_unstable_by_key(|&i| entries[i]);
    let mut out = vec![0; entries.len()];
    for (rank, i) in order.into_iter().enumerate() {
        out[i] = rank as Entry + 1;
    }
    out
}

impl Borrow<[Entry]> for Permutation {
    fn borrow(&self) -> &[Entry] {
        &self.0
    }
}

impl TryFrom<Vec<Entry>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<Entry>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<Entry> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

/// Canonical text: space-separated decimal entries, `e` for the empty permutation.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("e");
        }
        let mut first = true;
        for v in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.compact())
    }
}

/// Accepts the canonical spaced form, `e`, or a run of single digits (`43512`).
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" || s == "ε" || s.is_empty() {
            return Ok(Permutation::empty());
        }
        let entries: Vec<Entry> = if s.contains(char::is_whitespace) {
            s.split_whitespace()
                .map(|tok| tok.parse::<Entry>().map_err(|_| Error::Parse(s.to_string())))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(s.to_string())))
                .collect::<Result<_>>()?
        };
        Permutation::new(entries)
    }
}

/// A finite list of normalized patterns. The empty list imposes no restriction.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PatternList(Vec<Permutation>);

impl PatternList {
    pub fn new(patterns: Vec<Permutation>) -> Result<Self> {
        for p in &patterns {
            p.require_normalized()?;
        }
        Ok(PatternList(patterns))
    }

    pub fn patterns(&self) -> &[Permutation] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The list with `extra` appended (duplicates dropped).
    pub fn with(&self, extra: &[Permutation]) -> PatternList {
        let mut out = self.0.clone();
        for p in extra {
            if !out.contains(p) {
                out.push(p.clone());
            }
        }
        PatternList(out)
    }
}

impl fmt::Display for PatternList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.compact()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Comma-separated permutations, e.g. `231,1423` or `3 1 2, 1 2`.
impl FromStr for PatternList {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(PatternList::default());
        }
        let pats = s
            .split(',')
            .map(|part| part.parse::<Permutation>())
            .collect::<Result<Vec<_>>>()?;
        PatternList::new(pats)
    }
}

/// A pattern prepared for repeated containment queries.
///
/// For each pattern position `t`, `below[t]`/`above[t]` name the earlier
/// position holding the nearest smaller/larger value; an embedding is
/// consistent iff every chosen entry sits strictly between those two.
#[derive(Clone, Debug)]
pub struct CompiledPattern {
    len: usize,
    below: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

impl CompiledPattern {
    pub fn new(pat: &Permutation) -> Result<Self> {
        pat.require_normalized()?;
        let p = pat.entries();
        let mut below = Vec::with_capacity(p.len());
        let mut above = Vec::with_capacity(p.len());
        for t in 0..p.len() {
            let lo = (0..t).filter(|&s| p[s] < p[t]).max_by_key(|&s| p[s]);
            let hi = (0..t).filter(|&s| p[s] > p[t]).min_by_key(|&s| p[s]);
            below.push(lo);
            above.push(hi);
        }
        Ok(CompiledPattern {
            len: p.len(),
            below,
            above,
        })
    }

    pub fn occurs_in(&self, text: &[Entry]) -> bool {
        if self.len > text.len() {
            return false;
        }
        let mut chosen = Vec::with_capacity(self.len);
        self.extend(text, 0, &mut chosen)
    }

    fn extend(&self, text: &[Entry], start: usize, chosen: &mut Vec<Entry>) -> bool {
        let t = chosen.len();
        if t == self.len {
            return true;
        }
        let lo = self.below[t].map_or(0, |s| chosen[s]);
        let hi = self.above[t].map_or(Entry::MAX, |s| chosen[s]);
        let last = text.len() - (self.len - t);
        for i in start..=last {
            let v = text[i];
            if v > lo && v < hi {
                chosen.push(v);
                if self.extend(text, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
}

/// True iff some subsequence of `p` normalizes to `pat`.
pub fn contains(p: &Permutation, pat: &Permutation) -> Result<bool> {
    Ok(CompiledPattern::new(pat)?.occurs_in(p.entries()))
}

/// Compiled form of a whole pattern list.
#[derive(Clone, Debug)]
pub struct Avoider(Vec<CompiledPattern>);

impl Avoider {
    pub fn new(pats: &PatternList) -> Result<Self> {
        Ok(Avoider(
            pats.patterns()
                .iter()
                .map(CompiledPattern::new)
                .collect::<Result<_>>()?,
        ))
    }

    pub fn avoids(&self, text: &[Entry]) -> bool {
        self.0.iter().all(|c| !c.occurs_in(text))
    }
}

/// Calls `f` on every permutation of `[n]` in lexicographic order.
/// `S_0` contributes the empty permutation.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[Entry])) {
    let mut cur: Vec<Entry> = (1..=n as Entry).collect();
    loop {
        f(&cur);
        if !next_permutation(&mut cur) {
            break;
        }
    }
}

/// Advances `v` to its lexicographic successor; false when `v` was the last.
pub fn next_permutation(v: &mut [Entry]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All of `S_n`, lexicographically.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_permutation(n, |p| out.push(Permutation(p.to_vec())));
    out
}

/// `Av_n(pats)`, in lexicographic order.
pub fn enumerate_av(n: usize, pats: &PatternList) -> Result<Vec<Permutation>> {
    let avoider = Avoider::new(pats)?;
    let mut out = Vec::new();
    for_each_permutation(n, |p| {
        if avoider.avoids(p) {
            out.push(Permutation(p.to_vec()));
        }
    });
    Ok(out)
}

/// `λ ⊕ μ`: μ placed above and to the right of λ.
pub fn direct_sum(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    a.require_normalized()?;
    b.require_normalized()?;
    let shift = a.len() as Entry;
    let mut out = a.0.clone();
    out.extend(b.0.iter().map(|&v| v + shift));
    Ok(Permutation(out))
}

/// `λ ⊖ μ`: μ placed below and to the right of λ.
pub fn skew_sum(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    a.require_normalized()?;
    b.require_normalized()?;
    let shift = b.len() as Entry;
    let mut out: Vec<Entry> = a.0.iter().map(|&v| v + shift).collect();
    out.extend_from_slice(&b.0);
    Ok(Permutation(out))
}

/// Counterclockwise quarter turn of the plot: the reverse of the inverse.
pub fn rot(p: &Permutation) -> Result<Permutation> {
    Ok(p.inverse()?.reverse())
}

/// Clockwise quarter turn: the inverse of the reverse.
pub fn rot_inv(p: &Permutation) -> Result<Permutation> {
    p.reverse().inverse()
}

fn split_points(p: &Permutation) -> Result<impl Iterator<Item = (usize, Entry, Entry)> + '_> {
    p.require_normalized()?;
    if p.is_empty() {
        return Err(Error::EmptyPermutation("indecomposability"));
    }
    // (k, min of prefix, max of prefix) for each proper prefix length k
    let mut lo = Entry::MAX;
    let mut hi = 0;
    Ok(p.0[..p.len() - 1].iter().enumerate().map(move |(i, &v)| {
        lo = lo.min(v);
        hi = hi.max(v);
        (i + 1, lo, hi)
    }))
}

pub fn is_sum_indecomposable(p: &Permutation) -> Result<bool> {
    Ok(!split_points(p)?.any(|(k, _, hi)| hi as usize == k))
}

pub fn is_skew_indecomposable(p: &Permutation) -> Result<bool> {
    let n = p.len();
    Ok(!split_points(p)?.any(|(k, lo, _)| lo as usize == n - k + 1))
}

/// Surrounds `p ∈ S_n` with `m` new large entries: odd offsets
/// `n+1, n+3, …` in decreasing order on the left, even offsets `n+2, n+4, …`
/// increasing on the right.
pub fn chi(m: usize, p: &Permutation) -> Result<Permutation> {
    p.require_normalized()?;
    let n = p.len() as Entry;
    let m = m as Entry;
    let left: Vec<Entry> = (1..=m).filter(|o| o % 2 == 1).rev().map(|o| n + o).collect();
    let right = (1..=m).filter(|o| o % 2 == 0).map(|o| n + o);
    let mut out = left;
    out.extend_from_slice(&p.0);
    out.extend(right);
    Ok(Permutation(out))
}

/// `rot⁻¹ ∘ χ_m ∘ rot`.
pub fn chi_tilde(m: usize, p: &Permutation) -> Result<Permutation> {
    rot_inv(&chi(m, &rot(p)?)?)
}

/// Every member of `S_n` contained in at least one witness.
pub fn containment_class(witnesses: &PatternList, n: usize) -> Vec<Permutation> {
    let mut found = BTreeSet::new();
    for w in witnesses.patterns() {
        if w.len() < n {
            continue;
        }
        let mut idx: Vec<usize> = (0..n).collect();
        loop {
            let sub: Vec<Entry> = idx.iter().map(|&i| w.0[i]).collect();
            found.insert(Permutation(normalize_slice(&sub)));
            if !next_combination(&mut idx, w.len()) {
                break;
            }
        }
    }
    found.into_iter().collect()
}

/// Advances a sorted index combination drawn from `0..total`.
pub(crate) fn next_combination(idx: &mut [usize], total: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < total - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// `λ*`: the normalization of `λ` with its final entry removed.
pub fn drop_last_star(p: &Permutation) -> Result<Permutation> {
    p.require_normalized()?;
    if p.is_empty() {
        return Err(Error::EmptyPermutation("drop_last_star"));
    }
    Ok(Permutation(normalize_slice(&p.0[..p.len() - 1])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pats(s: &str) -> PatternList {
        s.parse().unwrap()
    }

    /// Independent containment oracle: normalize every subsequence.
    fn contains_brute(p: &Permutation, pat: &Permutation) -> bool {
        let k = pat.len();
        if k > p.len() {
            return false;
        }
        if k == 0 {
            return true;
        }
        (0u32..1 << p.len())
            .filter(|mask| mask.count_ones() as usize == k)
            .any(|mask| {
                let sub: Vec<Entry> = (0..p.len())
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| p.entries()[i])
                    .collect();
                normalize_slice(&sub) == pat.entries()
            })
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(perm("4 7 2").normalize(), perm("231"));
        assert_eq!(Permutation::empty().normalize(), Permutation::empty());
        assert_eq!(perm("35412678").normalize(), perm("35412678"));
    }

    #[test]
    fn text_round_trip() {
        assert_eq!(perm("3 5 4 1 2 6 7 8").to_string(), "3 5 4 1 2 6 7 8");
        assert_eq!(Permutation::empty().to_string(), "e");
        assert_eq!(perm("e"), Permutation::empty());
        assert_eq!(perm("10 2 1").entries(), &[10, 2, 1]);
        assert!("1 1".parse::<Permutation>().is_err());
        assert!("1 0".parse::<Permutation>().is_err());
        assert!("1a".parse::<Permutation>().is_err());
        assert_eq!(pats("231,1423").len(), 2);
        assert!("231,24".parse::<PatternList>().is_err());
    }

    #[test]
    fn contains_examples() {
        assert!(contains(&perm("35412678"), &perm("321")).unwrap());
        assert!(!contains(&perm("123"), &perm("21")).unwrap());
        assert!(contains(&perm("2476153"), &perm("231")).unwrap());
        assert!(contains_brute(&perm("2476153"), &perm("231")));
        assert!(contains(&perm("123"), &perm("12")).unwrap());
        assert!(contains(&perm("123"), &Permutation::empty()).unwrap());
        assert!(matches!(
            contains(&perm("123"), &perm("23")),
            Err(Error::NotNormalized(_))
        ));
    }

    #[test]
    fn contains_agrees_with_brute_force() {
        let patterns: Vec<Permutation> = (1..=4).flat_map(all_permutations).collect();
        for n in 0..=6 {
            for p in all_permutations(n) {
                for pat in &patterns {
                    assert_eq!(
                        contains(&p, pat).unwrap(),
                        contains_brute(&p, pat),
                        "{p:?} / {pat:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn enumerate_av_examples() {
        assert_eq!(enumerate_av(3, &pats("231,132")).unwrap().len(), 4);
        assert_eq!(enumerate_av(0, &pats("21")).unwrap(), vec![Permutation::empty()]);
        assert_eq!(enumerate_av(4, &PatternList::default()).unwrap().len(), 24);
        for n in 1..=7 {
            assert_eq!(
                enumerate_av(n, &pats("231,132")).unwrap().len(),
                1 << (n - 1)
            );
        }
    }

    #[test]
    fn classical_wilf_equivalence_of_length_three_patterns() {
        let catalan = [1usize, 1, 2, 5, 14, 42, 132, 429, 1430];
        for tau in all_permutations(3) {
            let list = PatternList::new(vec![tau]).unwrap();
            for (n, &c) in catalan.iter().enumerate() {
                assert_eq!(enumerate_av(n, &list).unwrap().len(), c);
            }
        }
    }

    #[test]
    fn sums() {
        assert_eq!(skew_sum(&perm("12"), &perm("1")).unwrap(), perm("231"));
        assert_eq!(direct_sum(&perm("1"), &perm("1")).unwrap(), perm("12"));
        assert_eq!(direct_sum(&Permutation::empty(), &perm("21")).unwrap(), perm("21"));
        assert_eq!(skew_sum(&perm("21"), &Permutation::empty()).unwrap(), perm("21"));
        assert!(direct_sum(&perm("2"), &perm("1")).is_err());
    }

    #[test]
    fn sums_are_associative() {
        let small: Vec<Permutation> = (0..=3).flat_map(all_permutations).collect();
        for a in &small {
            for b in &small {
                for c in &small {
                    let ab_c = direct_sum(&direct_sum(a, b).unwrap(), c).unwrap();
                    let a_bc = direct_sum(a, &direct_sum(b, c).unwrap()).unwrap();
                    assert_eq!(ab_c, a_bc);
                    let ab_c = skew_sum(&skew_sum(a, b).unwrap(), c).unwrap();
                    let a_bc = skew_sum(a, &skew_sum(b, c).unwrap()).unwrap();
                    assert_eq!(ab_c, a_bc);
                }
            }
        }
    }

    #[test]
    fn rotation() {
        assert_eq!(rot(&perm("132")).unwrap(), perm("231"));
        assert_eq!(rot(&Permutation::empty()).unwrap(), Permutation::empty());
        for n in 0..=6 {
            for p in all_permutations(n) {
                let r = rot(&p).unwrap();
                assert_eq!(rot_inv(&r).unwrap(), p);
                assert_eq!(rot(&rot(&rot(&r).unwrap()).unwrap()).unwrap(), p);
            }
        }
    }

    #[test]
    fn indecomposability() {
        assert!(!is_sum_indecomposable(&perm("12")).unwrap());
        assert!(is_sum_indecomposable(&perm("21")).unwrap());
        assert!(is_sum_indecomposable(&perm("2431")).unwrap());
        assert!(!is_skew_indecomposable(&perm("2431")).unwrap());
        assert!(is_skew_indecomposable(&perm("1")).unwrap());
        assert!(matches!(
            is_sum_indecomposable(&Permutation::empty()),
            Err(Error::EmptyPermutation(_))
        ));
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi(5, &perm("132")).unwrap(), perm("86413257"));
        assert_eq!(chi(6, &perm("132")).unwrap(), perm("864132579"));
        assert_eq!(chi(0, &perm("2143")).unwrap(), perm("2143"));
        assert_eq!(chi(2, &perm("1")).unwrap(), perm("213"));
        assert_eq!(chi_tilde(2, &perm("1")).unwrap(), perm("231"));
    }

    #[test]
    fn containment_class_examples() {
        let w = pats("24135");
        let c5 = containment_class(&w, 5);
        assert_eq!(c5, vec![perm("24135")]);
        assert!(containment_class(&w, 6).is_empty());
        assert_eq!(containment_class(&w, 1), vec![perm("1")]);
        // every class member really is contained in the witness
        for n in 0..=5 {
            for p in containment_class(&w, n) {
                assert!(contains(&perm("24135"), &p).unwrap());
            }
        }
    }

    #[test]
    fn drop_last() {
        assert_eq!(drop_last_star(&perm("3142")).unwrap(), perm("213"));
        assert_eq!(drop_last_star(&perm("1234")).unwrap(), perm("123"));
        assert_eq!(drop_last_star(&perm("21")).unwrap(), perm("1"));
        assert!(drop_last_star(&Permutation::empty()).is_err());
    }

    fn arb_normalized(max_len: usize) -> impl Strategy<Value = Permutation> {
        (0..=max_len)
            .prop_flat_map(|n| Just((1..=n as Entry).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(Permutation)
    }

    proptest! {
        #[test]
        fn chi_preserves_pattern(m in 0usize..7, p in arb_normalized(6)) {
            let c = chi(m, &p).unwrap();
            prop_assert_eq!(c.len(), p.len() + m);
            prop_assert!(c.is_normalized());
            prop_assert!(contains(&c, &p).unwrap());
        }

        #[test]
        fn unnormalize_inverts_normalize(p in arb_normalized(8), offset in 1u32..50, gap in 1u32..5) {
            let labels: Vec<Entry> = (0..p.len() as Entry).map(|i| offset + gap * i).collect();
            let q = p.unnormalize(&labels).unwrap();
            prop_assert_eq!(q.normalize(), p);
        }
    }
}
