//! The sliding operators `swu` ("slide west-up") and `swl`, and the hook
//! transports that go with them.
//!
//! `swu` maps `Av(231)` onto `Av(132)` by vertically sliding points while
//! keeping their columns; `swl = rot⁻¹ ∘ swu ∘ rot` maps `Av(132)` onto
//! `Av(312)`.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::perm::{enumerate_av, normalize_slice, rot, rot_inv, Avoider, Entry, PatternList, Permutation};
use crate::stats::tail_length;
use crate::vhc::{hook_parts, join_by_hook, split_by_hook, Hook, ValidHookConfiguration};

fn avoids(p: &Permutation, pattern: &str) -> bool {
    let pats: PatternList = pattern.parse().expect("literal pattern");
    Avoider::new(&pats).expect("normalized pattern").avoids(p.entries())
}

fn forbid(p: &Permutation, op: &'static str, pattern: &'static str) -> Result<()> {
    if avoids(p, pattern) {
        Ok(())
    } else {
        Err(Error::ForbiddenPattern {
            op,
            pattern,
            input: p.to_string(),
        })
    }
}

/// Applies a map on normalized permutations to any label set.
fn transport(p: &Permutation, f: impl Fn(&[Entry]) -> Vec<Entry>) -> Permutation {
    let image = f(&normalize_slice(p.entries()));
    if p.is_normalized() {
        return Permutation::from_vec_unchecked(image);
    }
    let mut labels = p.entries().to_vec();
    labels.sort_unstable();
    Permutation::from_vec_unchecked(image.iter().map(|&v| labels[v as usize - 1]).collect())
}

/// `π = L ⊕ (1 ⊖ R)` ↦ `(swu(L) ⊕ 1) ⊖ swu(R)`.
fn swu_norm(e: &[Entry]) -> Vec<Entry> {
    let Some(m) = e.iter().position(|&v| v as usize == e.len()) else {
        return Vec::new();
    };
    let (l, r) = (&e[..m], &e[m + 1..]);
    let shift = r.len() as Entry;
    let mut out: Vec<Entry> = swu_norm(l).into_iter().map(|v| v + shift).collect();
    out.push(e.len() as Entry);
    out.extend(swu_norm(&normalize_slice(r)));
    out
}

/// `σ = (L̂ ⊕ 1) ⊖ R̂` ↦ `swu⁻¹(L̂) ⊕ (1 ⊖ swu⁻¹(R̂))`.
fn swu_inv_norm(e: &[Entry]) -> Vec<Entry> {
    let Some(m) = e.iter().position(|&v| v as usize == e.len()) else {
        return Vec::new();
    };
    let (l, r) = (&e[..m], &e[m + 1..]);
    let shift = l.len() as Entry;
    let mut out = swu_inv_norm(&normalize_slice(l));
    out.push(e.len() as Entry);
    out.extend(swu_inv_norm(r).into_iter().map(|v| v + shift));
    out
}

pub fn swu(p: &Permutation) -> Result<Permutation> {
    forbid(p, "swu", "231")?;
    Ok(transport(p, swu_norm))
}

pub fn swu_inv(p: &Permutation) -> Result<Permutation> {
    forbid(p, "swu_inv", "132")?;
    Ok(transport(p, swu_inv_norm))
}

pub fn swl(p: &Permutation) -> Result<Permutation> {
    forbid(p, "swl", "132")?;
    Ok(transport(p, |e| {
        let r = rot(&Permutation::from_vec_unchecked(e.to_vec())).expect("normalized");
        let s = Permutation::from_vec_unchecked(swu_norm(r.entries()));
        rot_inv(&s).expect("normalized").into_entries()
    }))
}

pub fn swl_inv(p: &Permutation) -> Result<Permutation> {
    forbid(p, "swl_inv", "312")?;
    Ok(transport(p, |e| {
        let r = rot(&Permutation::from_vec_unchecked(e.to_vec())).expect("normalized");
        let s = Permutation::from_vec_unchecked(swu_inv_norm(r.entries()));
        rot_inv(&s).expect("normalized").into_entries()
    }))
}

/// Whether `swu(Av_n(231, τ…)) = Av_n(132, swu(τ)…)`. Patterns that
/// already contain 231 add nothing to the class and are dropped.
pub fn swu_class_image(pats: &PatternList, n: usize) -> Result<bool> {
    let extra: Vec<Permutation> = pats
        .patterns()
        .iter()
        .filter(|t| avoids(t, "231"))
        .cloned()
        .collect();
    let source = PatternList::new(extra.clone())?.with(&["231".parse()?]);
    let images = extra.iter().map(swu).collect::<Result<Vec<_>>>()?;
    let target = PatternList::new(images)?.with(&["132".parse()?]);
    let lhs: BTreeSet<Permutation> = enumerate_av(n, &source)?
        .iter()
        .map(swu)
        .collect::<Result<_>>()?;
    let rhs: BTreeSet<Permutation> = enumerate_av(n, &target)?.into_iter().collect();
    Ok(lhs == rhs)
}

/// Keeps every hook attached to the same columns while the points slide:
/// a configuration of `π ∈ Av(231)` becomes one of `swu(π)`.
pub fn swu_transport(h: &ValidHookConfiguration) -> Result<ValidHookConfiguration> {
    ValidHookConfiguration::new(swu(&h.base)?, h.hooks.clone())
}

/// Inverse of [`swu_transport`].
pub fn swu_transport_inv(h: &ValidHookConfiguration) -> Result<ValidHookConfiguration> {
    ValidHookConfiguration::new(swu_inv(&h.base)?, h.hooks.clone())
}

/// The recursive bijection from configurations of `π ∈ Av(132, 3412)` to
/// configurations of `swl(π)` that keeps the type of the induced composition.
///
/// Results are memoized per normalized permutation and hook list, so one
/// instance should be reused across calls.
#[derive(Debug, Default)]
pub struct Theta {
    memo: HashMap<(Permutation, Vec<Hook>), Vec<Hook>>,
}

impl Theta {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn apply(&mut self, h: &ValidHookConfiguration) -> Result<ValidHookConfiguration> {
        forbid(&h.base, "theta", "132")?;
        forbid(&h.base, "theta", "3412")?;
        let target = swl(&h.base)?;
        let hooks = self.hooks(h)?;
        ValidHookConfiguration::new(target, hooks)
    }

    fn hooks(&mut self, h: &ValidHookConfiguration) -> Result<Vec<Hook>> {
        let key = (h.base.clone(), h.hooks.clone());
        if let Some(done) = self.memo.get(&key) {
            return Ok(done.clone());
        }
        let out = self.compute(h)?;
        self.memo.insert(key, out.clone());
        Ok(out)
    }

    fn compute(&mut self, h: &ValidHookConfiguration) -> Result<Vec<Hook>> {
        let pi = &h.base;
        let n = pi.len();
        let image = swl(pi)?;
        if n <= 2 || image == *pi {
            return Ok(h.hooks.clone());
        }
        let a = n - tail_length(pi);
        assert!(a < n, "{pi} has a hook configuration but does not end in its maximum");
        assert!(a >= 3, "{pi} differs from its swl image but has a = {a}");
        let b = pi.at(a) as usize;
        let find = |sw: usize| {
            h.hooks
                .iter()
                .copied()
                .find(|g| g.sw == sw)
                .unwrap_or_else(|| panic!("{h} has no hook at the descent top {sw}"))
        };
        let (hook, image_hook, swap) = if b == 1 {
            let hook = find(a - 1);
            (hook, hook, false)
        } else {
            let hook = find(a - b);
            let ell = hook.ne - a;
            (hook, Hook::new(b, n + 1 - ell), true)
        };
        let (unsheltered, sheltered) = split_by_hook(h, hook)?;
        let u = self.apply_normalized(&unsheltered)?;
        let s = self.apply_normalized(&sheltered)?;
        let (u, s) = if swap { (s, u) } else { (u, s) };
        let (want_u, want_s) = hook_parts(&image, image_hook);
        assert_eq!(u.base, want_u, "unsheltered part of swl({pi}) at {image_hook}");
        assert_eq!(s.base, want_s, "sheltered part of swl({pi}) at {image_hook}");
        Ok(join_by_hook(&image, image_hook, &u, &s)?.hooks)
    }

    fn apply_normalized(&mut self, h: &ValidHookConfiguration) -> Result<ValidHookConfiguration> {
        let hooks = self.hooks(h)?;
        ValidHookConfiguration::new(swl(&h.base)?, hooks)
    }
}

/// One-shot form of [`Theta::apply`].
pub fn theta(h: &ValidHookConfiguration) -> Result<ValidHookConfiguration> {
    Theta::new().apply(h)
}
