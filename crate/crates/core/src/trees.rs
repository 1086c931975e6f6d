//! Decreasing plane trees, the in-order and postorder traversals, tree-family
//! enumeration by postorder, and the Catalan / Motzkin / `L_r(x, y)` tables.
//!
//! A family with a fixed number of slots (binary, ternary, k-ary) gives every
//! vertex exactly that many ordered, possibly empty, subtrees. Motzkin and
//! general trees have no empty slots; a Motzkin vertex has at most two
//! children, a general vertex any number.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Entry, Permutation};
use crate::poly::BivariatePoly;

/// Largest arity accepted for k-ary enumeration.
pub const MAX_ARITY: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TreeFamily {
    Binary,
    Ternary,
    KAry(usize),
    Motzkin,
    SlotlessGeneral,
}

impl TreeFamily {
    /// Number of slots per vertex, `None` for the slotless families.
    pub fn slots(self) -> Option<usize> {
        match self {
            TreeFamily::Binary => Some(2),
            TreeFamily::Ternary => Some(3),
            TreeFamily::KAry(k) => Some(k),
            TreeFamily::Motzkin | TreeFamily::SlotlessGeneral => None,
        }
    }

    /// Upper bound on the number of nonempty children of one vertex.
    fn max_children(self) -> Option<usize> {
        match self {
            TreeFamily::Motzkin => Some(2),
            TreeFamily::SlotlessGeneral => None,
            slotted => slotted.slots(),
        }
    }

    fn check(self) -> Result<()> {
        match self.slots() {
            Some(k) if k == 0 || k > MAX_ARITY => Err(Error::UnknownFamily(self.to_string())),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for TreeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeFamily::Binary => f.write_str("binary"),
            TreeFamily::Ternary => f.write_str("ternary"),
            TreeFamily::KAry(k) => write!(f, "{k}-ary"),
            TreeFamily::Motzkin => f.write_str("motzkin"),
            TreeFamily::SlotlessGeneral => f.write_str("general"),
        }
    }
}

impl FromStr for TreeFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fam = match s.trim().to_ascii_lowercase().as_str() {
            "binary" | "2-ary" => TreeFamily::Binary,
            "ternary" | "3-ary" => TreeFamily::Ternary,
            "motzkin" => TreeFamily::Motzkin,
            "general" | "slotless" | "slotless-general" => TreeFamily::SlotlessGeneral,
            other => {
                let k = other
                    .strip_suffix("-ary")
                    .and_then(|k| k.parse::<usize>().ok())
                    .ok_or_else(|| Error::UnknownFamily(s.to_string()))?;
                TreeFamily::KAry(k)
            }
        };
        fam.check()?;
        Ok(fam)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Node {
    pub label: Entry,
    /// Ordered subtrees. `None` is an empty slot and only occurs in slotted families.
    pub slots: Vec<Option<Node>>,
}

impl Node {
    pub fn leaf(label: Entry, slots: usize) -> Self {
        Node {
            label,
            slots: vec![None; slots],
        }
    }

    fn children(&self) -> impl Iterator<Item = &Node> {
        self.slots.iter().flatten()
    }

    fn size(&self) -> usize {
        1 + self.children().map(Node::size).sum::<usize>()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DecreasingPlaneTree {
    pub family: TreeFamily,
    /// `None` is the tree with no vertices.
    pub root: Option<Node>,
}

/// Unlabeled shape of a tree, empty slots included, as a parenthesized string.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkeletonCode(pub String);

impl fmt::Display for SkeletonCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl DecreasingPlaneTree {
    pub fn empty(family: TreeFamily) -> Self {
        DecreasingPlaneTree { family, root: None }
    }

    pub fn len(&self) -> usize {
        self.root.as_ref().map_or(0, Node::size)
    }

    pub fn is_empty(&self) -> bool {
        self.root.is_none()
    }

    /// Checks the decreasing condition, label distinctness and the family's
    /// slot discipline.
    pub fn validate(&self) -> Result<()> {
        self.family.check()?;
        let mut labels = Vec::new();
        if let Some(root) = &self.root {
            validate_node(root, self.family, &mut labels)?;
        }
        Permutation::new(labels).map(|_| ())
    }

    pub fn skeleton(&self) -> SkeletonCode {
        let mut out = String::new();
        match &self.root {
            None => out.push('_'),
            Some(root) => skeleton_into(root, &mut out),
        }
        SkeletonCode(out)
    }

    /// Parses the text form produced by `Display`.
    pub fn parse(text: &str, family: TreeFamily) -> Result<Self> {
        let mut parser = TreeParser {
            src: text.as_bytes(),
            pos: 0,
            text,
        };
        parser.skip_ws();
        let root = parser.slot()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(Error::Parse(text.to_string()));
        }
        let tree = DecreasingPlaneTree { family, root };
        tree.validate()?;
        Ok(tree)
    }
}

fn validate_node(node: &Node, family: TreeFamily, labels: &mut Vec<Entry>) -> Result<()> {
    labels.push(node.label);
    let bad = |why: &str| Err(Error::Precondition(format!("vertex {}: {why}", node.label)));
    match family.slots() {
        Some(k) if node.slots.len() != k => return bad("wrong number of slots"),
        None if node.slots.iter().any(Option::is_none) => return bad("empty slot in a slotless tree"),
        _ => {}
    }
    if family == TreeFamily::Motzkin && node.slots.len() > 2 {
        return bad("more than two children in a Motzkin tree");
    }
    for child in node.children() {
        if child.label >= node.label {
            return bad("child label not smaller than parent label");
        }
        validate_node(child, family, labels)?;
    }
    Ok(())
}

fn skeleton_into(node: &Node, out: &mut String) {
    out.push('(');
    for slot in &node.slots {
        match slot {
            None => out.push('_'),
            Some(child) => skeleton_into(child, out),
        }
    }
    out.push(')');
}

/// Text form: `label(slot,slot,…)` with `_` for an empty slot; a slotless
/// leaf is just its label; the empty tree is `_`.
impl fmt::Display for DecreasingPlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn node(n: &Node, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "{}", n.label)?;
            if n.slots.is_empty() {
                return Ok(());
            }
            f.write_str("(")?;
            for (i, slot) in n.slots.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                match slot {
                    None => f.write_str("_")?,
                    Some(c) => node(c, f)?,
                }
            }
            f.write_str(")")
        }
        match &self.root {
            None => f.write_str("_"),
            Some(r) => node(r, f),
        }
    }
}

struct TreeParser<'a> {
    src: &'a [u8],
    pos: usize,
    text: &'a str,
}

impl TreeParser<'_> {
    fn err(&self) -> Error {
        Error::Parse(self.text.to_string())
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn slot(&mut self) -> Result<Option<Node>> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&b'_') {
            self.pos += 1;
            return Ok(None);
        }
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let label: Entry = self.text[start..self.pos].parse().map_err(|_| self.err())?;
        self.skip_ws();
        let mut slots = Vec::new();
        if self.src.get(self.pos) == Some(&b'(') {
            self.pos += 1;
            loop {
                slots.push(self.slot()?);
                self.skip_ws();
                match self.src.get(self.pos) {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.err()),
                }
            }
        }
        Ok(Some(Node { label, slots }))
    }
}

/// In-order reading `I(T)` of a binary tree.
pub fn in_order(t: &DecreasingPlaneTree) -> Result<Permutation> {
    if t.family != TreeFamily::Binary {
        return Err(Error::Precondition(format!(
            "in-order traversal needs a binary tree, got {}",
            t.family
        )));
    }
    fn walk(slot: &Option<Node>, out: &mut Vec<Entry>) {
        if let Some(n) = slot {
            walk(&n.slots[0], out);
            out.push(n.label);
            walk(&n.slots[1], out);
        }
    }
    let mut out = Vec::with_capacity(t.len());
    walk(&t.root, &mut out);
    Permutation::new(out)
}

/// `I⁻¹(p)`: the largest entry is the root, the entries to its left form the
/// left subtree and those to its right the right subtree.
pub fn in_order_inverse(p: &Permutation) -> DecreasingPlaneTree {
    fn build(entries: &[Entry]) -> Option<Node> {
        let (pos, &label) = entries.iter().enumerate().max_by_key(|(_, &v)| v)?;
        Some(Node {
            label,
            slots: vec![build(&entries[..pos]), build(&entries[pos + 1..])],
        })
    }
    DecreasingPlaneTree {
        family: TreeFamily::Binary,
        root: build(p.entries()),
    }
}

/// Postorder reading `P(T)`: subtrees left to right, then the root.
pub fn postorder(t: &DecreasingPlaneTree) -> Permutation {
    fn walk(n: &Node, out: &mut Vec<Entry>) {
        for c in n.children() {
            walk(c, out);
        }
        out.push(n.label);
    }
    let mut out = Vec::with_capacity(t.len());
    if let Some(r) = &t.root {
        walk(r, &mut out);
    }
    Permutation::from_vec_unchecked(out)
}

/// Skeleton of a permutation: the skeleton of `I⁻¹(p)`.
pub fn skeleton_of_perm(p: &Permutation) -> SkeletonCode {
    in_order_inverse(p).skeleton()
}

/// Every tree of `family` whose postorder reading is `p`.
///
/// Works top-down on the postorder word: the last entry is the root, and the
/// rest splits into consecutive blocks, one per nonempty child, each of which
/// must itself end with its own maximum.
pub fn enumerate_postorder_preimages(
    p: &Permutation,
    family: TreeFamily,
) -> Result<Vec<DecreasingPlaneTree>> {
    p.require_normalized()?;
    family.check()?;
    if p.is_empty() {
        return Ok(vec![DecreasingPlaneTree::empty(family)]);
    }
    let mut enumerator = Enumerator {
        word: p.entries(),
        family,
        subtrees: HashMap::new(),
    };
    let roots = enumerator.subtrees(0, p.len());
    Ok(roots
        .into_iter()
        .map(|root| DecreasingPlaneTree {
            family,
            root: Some(root),
        })
        .collect())
}

struct Enumerator<'a> {
    word: &'a [Entry],
    family: TreeFamily,
    subtrees: HashMap<(usize, usize), Vec<Node>>,
}

impl Enumerator<'_> {
    /// Trees whose postorder is `word[lo..hi]`.
    fn subtrees(&mut self, lo: usize, hi: usize) -> Vec<Node> {
        if let Some(done) = self.subtrees.get(&(lo, hi)) {
            return done.clone();
        }
        let label = self.word[hi - 1];
        let mut out = Vec::new();
        if self.word[lo..hi].iter().all(|&v| v <= label) {
            for children in self.forests(lo, hi - 1, self.family.max_children()) {
                match self.family.slots() {
                    None => out.push(Node {
                        label,
                        slots: children.into_iter().map(Some).collect(),
                    }),
                    Some(k) => {
                        for placement in placements(children.len(), k) {
                            let mut slots = vec![None; k];
                            for (child, &at) in children.iter().zip(&placement) {
                                slots[at] = Some(child.clone());
                            }
                            out.push(Node { label, slots });
                        }
                    }
                }
            }
        }
        self.subtrees.insert((lo, hi), out.clone());
        out
    }

    /// Ordered sequences of at most `limit` trees covering `word[lo..hi]`.
    fn forests(&mut self, lo: usize, hi: usize, limit: Option<usize>) -> Vec<Vec<Node>> {
        if lo == hi {
            return vec![Vec::new()];
        }
        if limit == Some(0) {
            return Vec::new();
        }
        let mut out = Vec::new();
        for mid in lo + 1..=hi {
            let firsts = self.subtrees(lo, mid);
            if firsts.is_empty() {
                continue;
            }
            let rests = self.forests(mid, hi, limit.map(|l| l - 1));
            for first in &firsts {
                for rest in &rests {
                    let mut seq = Vec::with_capacity(rest.len() + 1);
                    seq.push(first.clone());
                    seq.extend(rest.iter().cloned());
                    out.push(seq);
                }
            }
        }
        out
    }
}

/// Increasing position lists choosing `c` of `k` slots.
fn placements(c: usize, k: usize) -> Vec<Vec<usize>> {
    if c > k {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..c).collect();
    loop {
        out.push(idx.clone());
        if c == 0 || !crate::perm::next_combination(&mut idx, k) {
            break;
        }
    }
    out
}

/// Number of trees of `family` with postorder `p`, without building them.
pub fn count_postorder_preimages(p: &Permutation, family: TreeFamily) -> Result<u64> {
    p.require_normalized()?;
    family.check()?;
    let n = p.len();
    if n == 0 {
        return Ok(1);
    }
    let w = p.entries();
    let limit = family.max_children().unwrap_or(n);
    // trees[lo][hi]: trees on w[lo..hi]; forests[c][lo][hi]: c-tree forests
    let mut trees = vec![vec![0u64; n + 1]; n + 1];
    for len in 1..=n {
        for lo in 0..=n - len {
            let hi = lo + len;
            let label = w[hi - 1];
            if w[lo..hi].iter().any(|&v| v > label) {
                continue;
            }
            // ways[c][pos]: forests of exactly c trees covering w[lo..pos]
            let inner = hi - 1;
            let mut ways = vec![vec![0u64; inner + 1]; limit + 1];
            ways[0][lo] = 1;
            for c in 1..=limit {
                for pos in lo + 1..=inner {
                    let mut total = 0u64;
                    for mid in lo..pos {
                        if ways[c - 1][mid] != 0 && trees[mid][pos] != 0 {
                            total = ways[c - 1][mid]
                                .checked_mul(trees[mid][pos])
                                .and_then(|x| x.checked_add(total))
                                .ok_or(Error::Overflow("tree count"))?;
                        }
                    }
                    ways[c][pos] = total;
                }
            }
            let mut total = 0u64;
            for (c, row) in ways.iter().enumerate() {
                let weight = match family.slots() {
                    Some(k) => binomial(k as u64, c as u64)?,
                    None => 1,
                };
                total = row[inner]
                    .checked_mul(weight)
                    .and_then(|x| x.checked_add(total))
                    .ok_or(Error::Overflow("tree count"))?;
            }
            trees[lo][hi] = total;
        }
    }
    Ok(trees[0][n])
}

/// Multiset of skeletons, as `code → multiplicity`.
pub fn skeleton_multiset<'a>(
    trees: impl IntoIterator<Item = &'a DecreasingPlaneTree>,
) -> BTreeMap<SkeletonCode, usize> {
    let mut out = BTreeMap::new();
    for t in trees {
        *out.entry(t.skeleton()).or_insert(0) += 1;
    }
    out
}

pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return Err(Error::Overflow("binomial"));
        }
    }
    Ok(acc as u64)
}

/// `C_r = binom(2r, r) / (r + 1)`.
pub fn catalan(r: usize) -> Result<u64> {
    let mut c: u128 = 1;
    for i in 1..=r as u128 {
        c = c * 2 * (2 * i - 1) / (i + 1);
        if c > u64::MAX as u128 {
            return Err(Error::Overflow("catalan"));
        }
    }
    Ok(c as u64)
}

/// Motzkin numbers: `M_0 = M_1 = 1`, `(r+2) M_r = (2r+1) M_{r−1} + (3r−3) M_{r−2}`.
pub fn motzkin(r: usize) -> Result<u64> {
    let (mut prev, mut cur): (u128, u128) = (1, 1);
    if r == 0 {
        return Ok(1);
    }
    for i in 2..=r as u128 {
        let next = ((2 * i + 1) * cur + (3 * i - 3) * prev) / (i + 2);
        if next > u64::MAX as u128 {
            return Err(Error::Overflow("motzkin"));
        }
        prev = cur;
        cur = next;
    }
    Ok(cur as u64)
}

/// `L_r(x, y)`: binary plane trees on `r` vertices, with `x` marking one more
/// than the number of right edges and `y` marking leaves.
pub fn l_polynomial(r: usize) -> Result<BivariatePoly> {
    if r == 0 {
        return Err(Error::Precondition("L_r needs r >= 1".into()));
    }
    // shapes[m]: trees with m vertices, x = right edges, y = leaves
    let mut shapes = vec![BivariatePoly::one()];
    for m in 1..=r {
        let mut total = BivariatePoly::zero();
        for left in 0..m {
            let right = m - 1 - left;
            let mut term = shapes[left].mul(&shapes[right])?;
            if right > 0 {
                term = term.mul(&BivariatePoly::monomial(1, 0, 1))?;
            }
            if left == 0 && right == 0 {
                term = term.mul(&BivariatePoly::monomial(0, 1, 1))?;
            }
            total = total.add(&term)?;
        }
        shapes.push(total);
    }
    shapes[r].mul(&BivariatePoly::monomial(1, 0, 1))
}

/// Number of unlabeled trees of `family` with `r` vertices.
pub fn count_shapes(family: TreeFamily, r: usize) -> Result<u64> {
    family.check()?;
    let limit = family.max_children().unwrap_or(r.max(1));
    let mut trees = vec![0u64; r + 1];
    for m in 1..=r {
        // forests[c][v]: ordered forests of c trees with v vertices in total
        let mut forests = vec![vec![0u64; m]; limit + 1];
        forests[0][0] = 1;
        for c in 1..=limit {
            for v in 1..m {
                let mut total = 0u64;
                for first in 1..=v {
                    total = forests[c - 1][v - first]
                        .checked_mul(trees[first])
                        .and_then(|x| x.checked_add(total))
                        .ok_or(Error::Overflow("shape count"))?;
                }
                forests[c][v] = total;
            }
        }
        let mut total = 0u64;
        for (c, row) in forests.iter().enumerate() {
            let weight = match family.slots() {
                Some(k) => binomial(k as u64, c as u64)?,
                None => 1,
            };
            total = row[m - 1]
                .checked_mul(weight)
                .and_then(|x| x.checked_add(total))
                .ok_or(Error::Overflow("shape count"))?;
        }
        trees[m] = total;
    }
    Ok(trees[r])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;
    use crate::stacksort::sort_once;
    use crate::stats::descent_set;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn fig2_left() -> DecreasingPlaneTree {
        in_order_inverse(&perm("4276153"))
    }

    fn fig2_right() -> DecreasingPlaneTree {
        in_order_inverse(&perm("2476153"))
    }

    #[test]
    fn figure_two_readings() {
        assert_eq!(in_order(&fig2_left()).unwrap(), perm("4276153"));
        assert_eq!(in_order(&fig2_right()).unwrap(), perm("2476153"));
        assert_eq!(postorder(&fig2_left()), perm("2413567"));
        assert_eq!(postorder(&fig2_right()), perm("2413567"));
        assert_ne!(fig2_left(), fig2_right());
        let single = in_order_inverse(&perm("1"));
        assert_eq!(single.to_string(), "1(_,_)");
        assert_eq!(postorder(&DecreasingPlaneTree::parse("5", TreeFamily::Motzkin).unwrap()), perm("5"));
    }

    #[test]
    fn postorder_of_inorder_inverse_is_stack_sort() {
        for n in 0..=6 {
            for sigma in all_permutations(n) {
                let t = in_order_inverse(&sigma);
                t.validate().unwrap();
                assert_eq!(in_order(&t).unwrap(), sigma);
                assert_eq!(postorder(&t), sort_once(&sigma));
            }
        }
    }

    #[test]
    fn in_order_rejects_other_families() {
        let t = DecreasingPlaneTree::parse("3(2,1)", TreeFamily::Motzkin).unwrap();
        assert!(in_order(&t).is_err());
    }

    #[test]
    fn ternary_tree_for_3214() {
        let p = perm("3214");
        let ternary = enumerate_postorder_preimages(&p, TreeFamily::Ternary).unwrap();
        assert!(!ternary.is_empty());
        assert!(ternary.iter().any(|t| t.to_string() == "4(3(_,_,_),2(_,_,_),1(_,_,_))"));
        assert!(enumerate_postorder_preimages(&p, TreeFamily::Binary).unwrap().is_empty());
        let binary = enumerate_postorder_preimages(&perm("2413567"), TreeFamily::Binary).unwrap();
        assert!(binary.contains(&fig2_left()));
        assert!(binary.contains(&fig2_right()));
    }

    #[test]
    fn enumerated_trees_are_valid_and_counted() {
        let families = [
            TreeFamily::Binary,
            TreeFamily::Ternary,
            TreeFamily::KAry(4),
            TreeFamily::Motzkin,
            TreeFamily::SlotlessGeneral,
        ];
        for n in 0..=5 {
            for p in all_permutations(n) {
                for fam in families {
                    let trees = enumerate_postorder_preimages(&p, fam).unwrap();
                    for t in &trees {
                        t.validate().unwrap();
                        assert_eq!(postorder(t), p);
                        assert_eq!(t.family, fam);
                    }
                    let distinct: std::collections::HashSet<_> = trees.iter().collect();
                    assert_eq!(distinct.len(), trees.len());
                    assert_eq!(count_postorder_preimages(&p, fam).unwrap(), trees.len() as u64);
                }
            }
        }
    }

    #[test]
    fn text_form_round_trips() {
        for p in all_permutations(4) {
            for fam in [TreeFamily::Binary, TreeFamily::Ternary, TreeFamily::SlotlessGeneral] {
                for t in enumerate_postorder_preimages(&p, fam).unwrap() {
                    let back = DecreasingPlaneTree::parse(&t.to_string(), fam).unwrap();
                    assert_eq!(back, t);
                }
            }
        }
        assert!(DecreasingPlaneTree::parse("1(2,_)", TreeFamily::Binary).is_err());
        assert!(DecreasingPlaneTree::parse("3(2,_", TreeFamily::Binary).is_err());
        assert!(DecreasingPlaneTree::parse("3(2(_,_),_,_)", TreeFamily::Binary).is_err());
        assert!(DecreasingPlaneTree::parse("3(_)", TreeFamily::Motzkin).is_err());
        assert_eq!(DecreasingPlaneTree::parse("_", TreeFamily::Binary).unwrap().len(), 0);
    }

    #[test]
    fn skeleton_codes() {
        assert_eq!(skeleton_of_perm(&perm("1")).0, "(__)");
        assert_eq!(skeleton_of_perm(&perm("12")), skeleton_of_perm(&perm("12")));
        assert_ne!(skeleton_of_perm(&perm("12")), skeleton_of_perm(&perm("21")));
        assert_eq!(skeleton_of_perm(&perm("3 5 1")), skeleton_of_perm(&perm("231")));
    }

    #[test]
    fn descents_are_right_children_in_order() {
        fn right_child_flags(slot: &Option<Node>, out: &mut Vec<bool>) {
            if let Some(n) = slot {
                right_child_flags(&n.slots[0], out);
                out.push(n.slots[1].is_some());
                right_child_flags(&n.slots[1], out);
            }
        }
        for p in all_permutations(5) {
            let mut flags = Vec::new();
            right_child_flags(&in_order_inverse(&p).root, &mut flags);
            let des = descent_set(&p);
            for (i, has_right) in flags.iter().enumerate() {
                assert_eq!(des.contains(&(i + 1)), *has_right, "{p:?} at {}", i + 1);
            }
        }
    }

    #[test]
    fn skeleton_multisets() {
        let binary_over = |basis: &str| {
            let basis: crate::perm::PatternList = basis.parse().unwrap();
            let mut trees = Vec::new();
            for p in crate::perm::enumerate_av(4, &basis).unwrap() {
                trees.extend(enumerate_postorder_preimages(&p, TreeFamily::Binary).unwrap());
            }
            skeleton_multiset(&trees)
        };
        assert_eq!(binary_over("123"), binary_over("123,3214"));
        let a = [in_order_inverse(&perm("3412")), in_order_inverse(&perm("3421"))];
        let b = [in_order_inverse(&perm("3142")), in_order_inverse(&perm("1342"))];
        assert_ne!(skeleton_multiset(&a), skeleton_multiset(&b));
        assert_eq!(skeleton_multiset(&a), skeleton_multiset(&a.clone()));
    }

    #[test]
    fn number_tables() {
        let cat = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862];
        let mot = [1u64, 1, 2, 4, 9, 21, 51, 127, 323, 835];
        for r in 0..cat.len() {
            assert_eq!(catalan(r).unwrap(), cat[r]);
            assert_eq!(motzkin(r).unwrap(), mot[r]);
        }
        assert!(catalan(40).is_err());
        assert!(motzkin(60).is_err());
        assert_eq!(binomial(6, 3).unwrap(), 20);
    }

    #[test]
    fn l_polynomials() {
        assert_eq!(l_polynomial(1).unwrap(), BivariatePoly::monomial(1, 1, 1));
        // two vertices: root with a left child (0 right edges), or a right child (1)
        let l2 = l_polynomial(2).unwrap();
        assert_eq!(l2.coefficient(1, 1), 1);
        assert_eq!(l2.coefficient(2, 1), 1);
        for r in 1..=12 {
            assert_eq!(l_polynomial(r).unwrap().eval(1, 1).unwrap(), catalan(r).unwrap());
        }
        assert!(l_polynomial(0).is_err());
    }

    #[test]
    fn shape_counts() {
        for r in 1..=8 {
            assert_eq!(count_shapes(TreeFamily::Motzkin, r).unwrap(), motzkin(r - 1).unwrap());
            assert_eq!(count_shapes(TreeFamily::Binary, r).unwrap(), catalan(r).unwrap());
            assert_eq!(count_shapes(TreeFamily::SlotlessGeneral, r).unwrap(), catalan(r - 1).unwrap());
        }
        // ternary trees: binom(3r, r) / (2r + 1)
        assert_eq!(count_shapes(TreeFamily::Ternary, 4).unwrap(), 55);
    }

    #[test]
    fn family_names() {
        assert_eq!("ternary".parse::<TreeFamily>().unwrap(), TreeFamily::Ternary);
        assert_eq!("4-ary".parse::<TreeFamily>().unwrap(), TreeFamily::KAry(4));
        assert!("9-ary".parse::<TreeFamily>().is_err());
        assert!("bushy".parse::<TreeFamily>().is_err());
        assert_eq!(TreeFamily::KAry(4).to_string(), "4-ary");
    }
}
