//! Valid hook configurations, their induced compositions, and the counting
//! formulas built on them.
//!
//! Positions are 1-based throughout. A hook is stored as the pair of column
//! indices of its endpoints; its heights are read off the base permutation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{normalize_slice, Entry, Permutation};
use crate::poly::BivariatePoly;
use crate::trees::{catalan, l_polynomial, motzkin};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Hook {
    pub sw: usize,
    pub ne: usize,
}

impl Hook {
    pub fn new(sw: usize, ne: usize) -> Self {
        Hook { sw, ne }
    }

    fn shifted(self, by: isize) -> Hook {
        let move_ = |p: usize| (p as isize + by) as usize;
        Hook::new(move_(self.sw), move_(self.ne))
    }
}

impl From<(usize, usize)> for Hook {
    fn from((sw, ne): (usize, usize)) -> Self {
        Hook { sw, ne }
    }
}

impl From<Hook> for (usize, usize) {
    fn from(h: Hook) -> Self {
        (h.sw, h.ne)
    }
}

impl fmt::Display for Hook {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.sw, self.ne)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition(pub Vec<usize>);

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartitionType(pub Vec<usize>);

fn fmt_parts(parts: &[usize], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let parts: Vec<String> = parts.iter().map(usize::to_string).collect();
    write!(f, "({})", parts.join(","))
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    inner
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<usize>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(Error::Parse(s.to_string())),
        })
        .collect()
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

impl fmt::Display for PartitionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_parts(s).map(Composition)
    }
}

impl Composition {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }
}

/// Parts rearranged into nonincreasing order.
pub fn type_of(c: &Composition) -> PartitionType {
    let mut parts = c.0.clone();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    PartitionType(parts)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ValidHookConfiguration {
    pub base: Permutation,
    /// One hook per descent, ordered by southwest endpoint.
    pub hooks: Vec<Hook>,
}

impl ValidHookConfiguration {
    /// Checks all three validity conditions.
    pub fn new(base: Permutation, mut hooks: Vec<Hook>) -> Result<Self> {
        base.require_normalized()?;
        hooks.sort();
        let e = base.entries();
        let tops: Vec<usize> = descent_positions(e).collect();
        let sws: Vec<usize> = hooks.iter().map(|h| h.sw).collect();
        if tops != sws {
            return Err(Error::Precondition(format!(
                "hook southwest endpoints {sws:?} are not the descent tops {tops:?} of {base}"
            )));
        }
        for h in &hooks {
            if !hook_admissible(e, *h) {
                return Err(Error::Precondition(format!("hook {h} is not admissible on {base}")));
            }
        }
        for (a, h) in hooks.iter().enumerate() {
            for g in &hooks[a + 1..] {
                if !hooks_compatible(*h, *g) {
                    return Err(Error::Precondition(format!("hooks {h} and {g} cross on {base}")));
                }
            }
        }
        Ok(ValidHookConfiguration { base, hooks })
    }

    pub fn composition(&self) -> Composition {
        induced_composition(self)
    }

    pub fn partition_type(&self) -> PartitionType {
        type_of(&self.composition())
    }

    /// Color of every point: `Some(0)` for the sky, `Some(t)` for the hook
    /// `H_t`, `None` for northeast endpoints.
    pub fn coloring(&self) -> Vec<Option<usize>> {
        coloring(self.base.len(), &self.hooks)
    }
}

impl fmt::Display for ValidHookConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |", self.base)?;
        for h in &self.hooks {
            write!(f, " {h}")?;
        }
        Ok(())
    }
}

fn descent_positions(e: &[Entry]) -> impl Iterator<Item = usize> + '_ {
    e.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
}

/// Points `(i, p_i)` where `i` is a descent.
pub fn descent_tops(p: &Permutation) -> Vec<(usize, Entry)> {
    descent_positions(p.entries()).map(|i| (i, p.at(i))).collect()
}

/// A hook from `sw` to `ne` that is well formed and has no point above its
/// horizontal part.
pub fn hook_admissible(e: &[Entry], h: Hook) -> bool {
    if h.sw == 0 || h.sw >= h.ne || h.ne > e.len() {
        return false;
    }
    let top = e[h.ne - 1];
    e[h.sw - 1] < top && e[h.sw..h.ne - 1].iter().all(|&v| v < top)
}

/// Two admissible hooks avoid each other: with `a.sw < b.sw`, either `b`
/// starts at or after the end of `a`, or `b` ends strictly inside `a`.
pub fn hooks_compatible(a: Hook, b: Hook) -> bool {
    let (a, b) = if a.sw <= b.sw { (a, b) } else { (b, a) };
    a.sw != b.sw && (b.sw >= a.ne || b.ne < a.ne)
}

fn coloring(n: usize, hooks: &[Hook]) -> Vec<Option<usize>> {
    let mut colors = vec![Some(0); n];
    for h in hooks {
        colors[h.ne - 1] = None;
    }
    for p in 1..=n {
        if colors[p - 1].is_none() {
            continue;
        }
        // hooks are ordered by sw, so the last enclosing one is innermost
        if let Some(t) = hooks.iter().rposition(|h| h.sw < p && p < h.ne) {
            colors[p - 1] = Some(t + 1);
        }
    }
    colors
}

fn composition_of(n: usize, hooks: &[Hook]) -> Composition {
    let mut parts = vec![0; hooks.len() + 1];
    for c in coloring(n, hooks).into_iter().flatten() {
        parts[c] += 1;
    }
    Composition(parts)
}

pub fn induced_composition(h: &ValidHookConfiguration) -> Composition {
    composition_of(h.base.len(), &h.hooks)
}

/// Calls `f` with the hooks of every valid hook configuration of `p`.
///
/// Descent tops are handled right to left; the candidates for a top at `d`
/// are the columns `j > d` higher than `p_d` and higher than everything
/// strictly between.
pub fn for_each_vhc(p: &Permutation, mut f: impl FnMut(&[Hook])) -> Result<()> {
    p.require_normalized()?;
    let e = p.entries();
    let tops: Vec<usize> = descent_positions(e).collect();
    let mut chosen = vec![Hook::new(0, 0); tops.len()];
    assign(e, &tops, tops.len(), &mut chosen, &mut f);
    Ok(())
}

fn assign(e: &[Entry], tops: &[usize], left: usize, chosen: &mut [Hook], f: &mut impl FnMut(&[Hook])) {
    if left == 0 {
        f(chosen);
        return;
    }
    let d = tops[left - 1];
    let floor = e[d - 1];
    let mut between = 0;
    for j in d + 1..=e.len() {
        let v = e[j - 1];
        if v > floor && v > between {
            let h = Hook::new(d, j);
            if chosen[left..].iter().all(|&g| hooks_compatible(h, g)) {
                chosen[left - 1] = h;
                assign(e, tops, left - 1, chosen, f);
            }
        }
        between = between.max(v);
    }
}

pub fn enumerate_vhcs(p: &Permutation) -> Result<Vec<ValidHookConfiguration>> {
    let mut out = Vec::new();
    for_each_vhc(p, |hooks| {
        out.push(ValidHookConfiguration {
            base: p.clone(),
            hooks: hooks.to_vec(),
        })
    })?;
    Ok(out)
}

/// The valid compositions of `p`.
pub fn valid_compositions(p: &Permutation) -> Result<Vec<Composition>> {
    let mut out = Vec::new();
    for_each_vhc(p, |hooks| out.push(composition_of(p.len(), hooks)))?;
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Weight {
    /// `Π C_{q_t}`: binary trees.
    Catalan,
    /// `Π M_{q_t − 1}`: Motzkin trees.
    Motzkin,
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "catalan" | "binary" => Ok(Weight::Catalan),
            "motzkin" => Ok(Weight::Motzkin),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

/// `Σ_{q ∈ 𝒱(p)} Π f(q_t)`; the empty permutation counts 1.
pub fn weighted_count(p: &Permutation, weight: Weight) -> Result<u64> {
    p.require_normalized()?;
    if p.is_empty() {
        return Ok(1);
    }
    let table: Vec<u64> = (0..=p.len())
        .map(|q| match weight {
            Weight::Catalan => catalan(q),
            Weight::Motzkin => motzkin(q.saturating_sub(1)),
        })
        .collect::<Result<_>>()?;
    let mut total: Option<u64> = Some(0);
    for_each_vhc(p, |hooks| {
        let c = composition_of(p.len(), hooks);
        let term = c.0.iter().try_fold(1u64, |acc, &q| acc.checked_mul(table[q]));
        total = total.zip(term).and_then(|(t, x)| t.checked_add(x));
    })?;
    total.ok_or(Error::Overflow("weighted VHC count"))
}

/// `|s⁻¹(p)|` as `Σ_{q ∈ 𝒱(p)} Π C_{q_t}`.
pub fn fertility_via_vhc(p: &Permutation) -> Result<u64> {
    weighted_count(p, Weight::Catalan)
}

/// `Σ_{q ∈ 𝒱(p)} Π L_{q_t}(x, y)`, which counts preimages by
/// `x^{des+1} y^{peak+1}`. The empty permutation gives `xy`.
pub fn fertility_polynomial(p: &Permutation) -> Result<BivariatePoly> {
    p.require_normalized()?;
    if p.is_empty() {
        return Ok(BivariatePoly::monomial(1, 1, 1));
    }
    let table: Vec<BivariatePoly> = (1..=p.len()).map(l_polynomial).collect::<Result<_>>()?;
    let mut comps = Vec::new();
    for_each_vhc(p, |hooks| comps.push(composition_of(p.len(), hooks)))?;
    let mut total = BivariatePoly::zero();
    for c in comps {
        let mut term = BivariatePoly::one();
        for &q in &c.0 {
            term = term.mul(&table[q - 1])?;
        }
        total = total.add(&term)?;
    }
    Ok(total)
}

fn check_split_hook(h: &ValidHookConfiguration, hook: Hook) -> Result<usize> {
    let idx = h
        .hooks
        .iter()
        .position(|&g| g == hook)
        .ok_or_else(|| Error::Precondition(format!("hook {hook} is not part of {h}")))?;
    if let Some(last) = descent_positions(h.base.entries()).last() {
        if hook.ne <= last {
            return Err(Error::Precondition(format!(
                "hook {hook} must end after the last descent {last}"
            )));
        }
    }
    Ok(idx)
}

/// Unsheltered `p_1…p_d p_{j+1}…p_n` and sheltered `p_{d+1}…p_{j−1}` parts
/// for a hook from `d` to `j`, both normalized.
pub fn hook_parts(base: &Permutation, hook: Hook) -> (Permutation, Permutation) {
    let e = base.entries();
    let (d, j) = (hook.sw, hook.ne);
    let unsheltered: Vec<Entry> = e[..d].iter().chain(&e[j..]).copied().collect();
    let sheltered = &e[d..j - 1];
    (
        Permutation::from_vec_unchecked(normalize_slice(&unsheltered)),
        Permutation::from_vec_unchecked(normalize_slice(sheltered)),
    )
}

/// Splits a configuration containing `hook` into its unsheltered and
/// sheltered parts. `hook` must end after every descent of the base.
pub fn split_by_hook(
    h: &ValidHookConfiguration,
    hook: Hook,
) -> Result<(ValidHookConfiguration, ValidHookConfiguration)> {
    let idx = check_split_hook(h, hook)?;
    let (d, j) = (hook.sw as isize, hook.ne as isize);
    let (u_base, s_base) = hook_parts(&h.base, hook);
    let u_hooks = h.hooks[..idx]
        .iter()
        .map(|g| Hook::new(g.sw, if g.ne > hook.ne { (g.ne as isize - (j - d)) as usize } else { g.ne }))
        .collect();
    let s_hooks = h.hooks[idx + 1..].iter().map(|g| g.shifted(-d)).collect();
    Ok((
        ValidHookConfiguration::new(u_base, u_hooks)?,
        ValidHookConfiguration::new(s_base, s_hooks)?,
    ))
}

/// Inverse of [`split_by_hook`]: rebuilds the configuration of `base` that
/// contains `hook` and restricts to `unsheltered` and `sheltered`.
pub fn join_by_hook(
    base: &Permutation,
    hook: Hook,
    unsheltered: &ValidHookConfiguration,
    sheltered: &ValidHookConfiguration,
) -> Result<ValidHookConfiguration> {
    base.require_normalized()?;
    if !hook_admissible(base.entries(), hook) {
        return Err(Error::Precondition(format!("hook {hook} is not admissible on {base}")));
    }
    let (u_base, s_base) = hook_parts(base, hook);
    if u_base != unsheltered.base || s_base != sheltered.base {
        return Err(Error::Precondition(format!(
            "parts {} and {} do not match the split of {base} at {hook}",
            unsheltered.base, sheltered.base
        )));
    }
    let (d, j) = (hook.sw, hook.ne);
    let mut hooks: Vec<Hook> = unsheltered
        .hooks
        .iter()
        .map(|g| Hook::new(g.sw, if g.ne > d { g.ne + (j - d) } else { g.ne }))
        .collect();
    hooks.push(hook);
    hooks.extend(sheltered.hooks.iter().map(|g| g.shifted(d as isize)));
    let out = ValidHookConfiguration::new(base.clone(), hooks)?;
    check_split_hook(&out, hook)?;
    Ok(out)
}

/// Direct segment-geometry checks, kept independent of the index rules above.
pub mod geometry {
    use super::*;

    /// A closed axis-parallel segment as a degenerate box `[x0,x1] × [y0,y1]`.
    #[derive(Clone, Copy, Debug, PartialEq, Eq)]
    struct Segment {
        x0: i64,
        x1: i64,
        y0: i64,
        y1: i64,
    }

    fn segments(e: &[Entry], h: Hook) -> [Segment; 2] {
        let (x_sw, y_sw) = (h.sw as i64, e[h.sw - 1] as i64);
        let (x_ne, y_ne) = (h.ne as i64, e[h.ne - 1] as i64);
        [
            Segment { x0: x_sw, x1: x_sw, y0: y_sw, y1: y_ne },
            Segment { x0: x_sw, x1: x_ne, y0: y_ne, y1: y_ne },
        ]
    }

    fn overlap(a: Segment, b: Segment) -> Option<Segment> {
        let s = Segment {
            x0: a.x0.max(b.x0),
            x1: a.x1.min(b.x1),
            y0: a.y0.max(b.y0),
            y1: a.y1.min(b.y1),
        };
        (s.x0 <= s.x1 && s.y0 <= s.y1).then_some(s)
    }

    /// No plotted point lies strictly above the horizontal part.
    pub fn nothing_above(e: &[Entry], h: Hook) -> bool {
        let y = e[h.ne - 1];
        (1..=e.len()).all(|p| !(h.sw <= p && p <= h.ne && e[p - 1] > y))
    }

    /// The two hooks share no point, except possibly the northeast endpoint
    /// of one being the southwest endpoint of the other.
    pub fn disjoint_or_chained(e: &[Entry], a: Hook, b: Hook) -> bool {
        let pt = |i: usize| Segment {
            x0: i as i64,
            x1: i as i64,
            y0: e[i - 1] as i64,
            y1: e[i - 1] as i64,
        };
        let allowed = [(a.ne == b.sw).then(|| pt(a.ne)), (b.ne == a.sw).then(|| pt(b.ne))];
        for sa in segments(e, a) {
            for sb in segments(e, b) {
                if let Some(s) = overlap(sa, sb) {
                    if !allowed.contains(&Some(s)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// All three conditions, checked from the pictures.
    pub fn is_valid(e: &[Entry], hooks: &[Hook]) -> bool {
        let mut sws: Vec<usize> = hooks.iter().map(|h| h.sw).collect();
        sws.sort_unstable();
        let tops: Vec<usize> = (1..e.len()).filter(|&i| e[i - 1] > e[i]).collect();
        if sws != tops {
            return false;
        }
        let well_formed = |h: &Hook| h.sw < h.ne && h.ne <= e.len() && e[h.sw - 1] < e[h.ne - 1];
        if !hooks.iter().all(well_formed) || !hooks.iter().all(|&h| nothing_above(e, h)) {
            return false;
        }
        hooks.iter().enumerate().all(|(a, &h)| {
            hooks[a + 1..].iter().all(|&g| disjoint_or_chained(e, h, g))
        })
    }

    /// Every valid configuration, by trying all northeast endpoints for every
    /// descent top and filtering.
    pub fn brute_force_vhcs(p: &Permutation) -> Vec<Vec<Hook>> {
        let e = p.entries();
        let tops: Vec<usize> = (1..e.len()).filter(|&i| e[i - 1] > e[i]).collect();
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn go(e: &[Entry], tops: &[usize], current: &mut Vec<Hook>, out: &mut Vec<Vec<Hook>>) {
            match tops.split_first() {
                None => {
                    if is_valid(e, current) {
                        out.push(current.clone());
                    }
                }
                Some((&d, rest)) => {
                    for j in d + 1..=e.len() {
                        current.push(Hook::new(d, j));
                        go(e, rest, current, out);
                        current.pop();
                    }
                }
            }
        }
        go(e, &tops, &mut current, &mut out);
        out
    }
}
