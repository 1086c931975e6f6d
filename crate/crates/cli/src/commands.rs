use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use serde_json::{json, Value};
use stackwilf::stacksort::{preimages_of_set, sort_iterate};
use stackwilf::stats::{des, joint_distribution, peak};
use stackwilf::trees::{enumerate_postorder_preimages, TreeFamily};
use stackwilf::verify::{self, PermClass, VerificationReport, VerifyConfig};
use stackwilf::vhc::{enumerate_vhcs, fertility_via_vhc};
use stackwilf::{sliding, stacksort, Permutation};

use crate::cache::Cache;
use crate::config::RunConfig;
use crate::output::Rendered;
use crate::{Equivalence, Method, Show};

pub struct Outcome {
    pub rendered: Rendered,
    /// Printed on stderr after the result.
    pub note: Option<String>,
    /// Set when a verification failed; the process exits nonzero.
    pub failed_claim: Option<String>,
}

impl From<Rendered> for Outcome {
    fn from(rendered: Rendered) -> Self {
        Outcome { rendered, note: None, failed_claim: None }
    }
}

fn parse_perm(cfg: &RunConfig, text: &str) -> Result<Permutation> {
    let p: Permutation = text.parse().with_context(|| format!("reading permutation `{text}`"))?;
    if !p.is_normalized() {
        bail!("`{text}` is not a permutation of 1..{}", p.len());
    }
    cfg.check_len(p.len())?;
    Ok(p)
}

fn parse_class(text: &str) -> Result<PermClass> {
    text.parse().with_context(|| format!("reading class `{text}`"))
}

fn n_max(cfg: &RunConfig) -> Result<usize> {
    let n = cfg.n_max.context("missing length bound")?;
    cfg.check_len(n)?;
    Ok(n)
}

fn cached<T, F>(cfg: &RunConfig, command: &str, args: &[(&str, String)], compute: F) -> Result<T>
where
    T: serde::Serialize + serde::de::DeserializeOwned,
    F: FnOnce() -> Result<T>,
{
    match &cfg.cache {
        Some(cache) => cache.get_or_compute(&Cache::key(command, args), compute),
        None => compute(),
    }
}

pub fn sort(cfg: &RunConfig, text: &str, times: usize) -> Result<Outcome> {
    let p = parse_perm(cfg, text)?;
    let out = sort_iterate(&p, times);
    Ok(Rendered::scalar(out.compact(), json!({ "input": p, "times": times, "output": out })).into())
}

pub fn preimages(cfg: &RunConfig, text: &str) -> Result<Outcome> {
    let p = parse_perm(cfg, text)?;
    let set = stacksort::preimages(&p)?;
    let rows = set
        .members
        .iter()
        .map(|s| vec![s.compact(), des(s).to_string(), peak(s).to_string()])
        .collect();
    let count = set.fertility();
    let json = json!({ "target": p, "count": count, "preimages": set.members });
    Ok(Outcome {
        rendered: Rendered::rows(&["preimage", "des", "peak"], rows, json),
        note: Some(format!("{count} preimages")),
        failed_claim: None,
    })
}

pub fn fertility(cfg: &RunConfig, text: &str, method: Method) -> Result<Outcome> {
    let p = parse_perm(cfg, text)?;
    let vhc = matches!(method, Method::Vhc | Method::Both).then(|| fertility_via_vhc(&p)).transpose()?;
    let brute = matches!(method, Method::Brute | Method::Both)
        .then(|| stacksort::preimages(&p).map(|s| s.fertility() as u64))
        .transpose()?;
    if let (Some(a), Some(b)) = (vhc, brute) {
        if a != b {
            bail!("methods disagree on {}: hook configurations give {a}, brute force {b}", p.compact());
        }
    }
    let value = vhc.or(brute).unwrap_or_default();
    let json = json!({ "perm": p, "vhc": vhc, "brute": brute });
    Ok(Rendered::scalar(value.to_string(), json).into())
}

pub fn vhc(cfg: &RunConfig, text: &str, show: Show) -> Result<Outcome> {
    let p = parse_perm(cfg, text)?;
    let all = enumerate_vhcs(&p)?;
    let label = match show {
        Show::Compositions => "composition",
        Show::Types => "type",
    };
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for h in &all {
        let hooks: Vec<String> = h.hooks.iter().map(ToString::to_string).collect();
        let hooks = if hooks.is_empty() { "-".to_string() } else { hooks.join(" ") };
        let value = match show {
            Show::Compositions => h.composition().to_string(),
            Show::Types => h.partition_type().to_string(),
        };
        items.push(json!({ "hooks": h.hooks, label: value }));
        rows.push(vec![hooks, value]);
    }
    let json = json!({ "perm": p, "count": all.len(), "configurations": items });
    Ok(Rendered::rows(&["hooks", label], rows, json).into())
}

pub fn postorder(cfg: &RunConfig, text: &str, family: TreeFamily) -> Result<Outcome> {
    let p = parse_perm(cfg, text)?;
    let trees = enumerate_postorder_preimages(&p, family)?;
    let rows = trees.iter().map(|t| vec![t.to_string(), t.skeleton().to_string()]).collect();
    let json = json!({
        "perm": p,
        "family": family.to_string(),
        "trees": trees.iter().map(|t| json!({ "tree": t.to_string(), "skeleton": t.skeleton().to_string() })).collect::<Vec<_>>(),
    });
    Ok(Rendered::rows(&["tree", "skeleton"], rows, json).into())
}

pub fn slide(cfg: &RunConfig, text: &str, up: bool, inverse: bool) -> Result<Outcome> {
    let p = parse_perm(cfg, text)?;
    let (name, f): (&str, fn(&Permutation) -> stackwilf::Result<Permutation>) = match (up, inverse) {
        (true, false) => ("swu", sliding::swu),
        (true, true) => ("swu^-1", sliding::swu_inv),
        (false, false) => ("swl", sliding::swl),
        (false, true) => ("swl^-1", sliding::swl_inv),
    };
    let out = f(&p)?;
    Ok(Rendered::scalar(out.compact(), json!({ "map": name, "input": p, "output": out })).into())
}

pub fn sequence(cfg: &RunConfig, class_text: &str, preimage: bool) -> Result<Outcome> {
    let class = parse_class(class_text)?;
    let n = n_max(cfg)?;
    let args = [("class", class.to_string()), ("preimage", preimage.to_string()), ("n_max", n.to_string())];
    let seq: Vec<u64> = cached(cfg, "sequence", &args, || {
        Ok(if preimage { verify::preimage_sequence(&class, n)? } else { verify::class_sequence(&class, n)? })
    })?;
    let rows = seq.iter().enumerate().map(|(i, c)| vec![(i + 1).to_string(), c.to_string()]).collect();
    let json = json!({ "class": class.to_string(), "preimage": preimage, "sequence": seq });
    Ok(Rendered::ordered_rows(&["n", "count"], rows, json).into())
}

pub fn distribution(cfg: &RunConfig, class_text: &str, preimage: bool) -> Result<Outcome> {
    let class = parse_class(class_text)?;
    let n = n_max(cfg)?;
    let members = class.members(n)?;
    let (perms, source) = if preimage {
        (preimages_of_set(&members)?, format!("preimages of {class} at length {n}"))
    } else {
        (members, format!("{class} at length {n}"))
    };
    let table = joint_distribution(&perms, &cfg.stats, &source)?;
    let mut headers: Vec<&str> = table.stats.iter().map(String::as_str).collect();
    headers.push("count");
    let rows = table
        .rows
        .iter()
        .map(|(values, count)| values.iter().map(ToString::to_string).chain([count.to_string()]).collect())
        .collect();
    let json: Value = serde_json::from_str(&table.to_json()?)?;
    Ok(Rendered::rows(&headers, rows, json).into())
}

fn reports_outcome(reports: Vec<VerificationReport>) -> Result<Outcome> {
    let rows = reports
        .iter()
        .map(|r| {
            let status = if r.passed() { "pass" } else { "FAIL" };
            vec![r.claim.clone(), status.to_string(), r.elapsed_ms.to_string()]
        })
        .collect();
    let failed_claim = reports.iter().find(|r| !r.passed()).map(|r| r.claim.clone());
    let json = serde_json::to_value(&reports)?;
    Ok(Outcome {
        rendered: Rendered::ordered_rows(&["claim", "status", "ms"], rows, json),
        note: None,
        failed_claim,
    })
}

pub fn compare(cfg: &RunConfig, left: &str, right: &str, kind: Equivalence) -> Result<Outcome> {
    let (a, b) = (parse_class(left)?, parse_class(right)?);
    let n = n_max(cfg)?;
    let report = match kind {
        Equivalence::Fertility => verify::check_fertility_wilf(&a, &b, n),
        Equivalence::Strong => verify::check_strong_fertility_wilf(&a, &b, n),
        Equivalence::Postorder => verify::check_postorder_wilf(&a, &b, n, &cfg.families),
        Equivalence::Joint => verify::check_joint_distribution(&a, &b, &cfg.stats, n),
    };
    reports_outcome(vec![report])
}

pub fn verify(cfg: &RunConfig, claim: &str) -> Result<Outcome> {
    let selected = if claim == "all" { verify::claims() } else { vec![verify::find_claim(claim)?] };
    if let Some(n) = cfg.n_max {
        cfg.check_len(n)?;
    }
    let vcfg = VerifyConfig { n_max: cfg.n_max, m_max: cfg.m_max, max_subset: cfg.max_subset };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.workers).build()?;
    let reports: Vec<VerificationReport> = pool.install(|| {
        selected
            .par_iter()
            .map(|c| {
                let args = [
                    ("claim", c.id.to_string()),
                    ("n_max", format!("{:?}", vcfg.n_max)),
                    ("m_max", vcfg.m_max.to_string()),
                    ("max_subset", vcfg.max_subset.to_string()),
                ];
                cached(cfg, "verify", &args, || Ok(c.run(&vcfg)))
            })
            .collect::<Result<_>>()
    })?;
    reports_outcome(reports)
}

pub fn claims(_: &RunConfig) -> Result<Outcome> {
    let all = verify::claims();
    let rows = all.iter().map(|c| vec![c.id.to_string(), c.summary.to_string()]).collect();
    let json = all.iter().map(|c| json!({ "id": c.id, "summary": c.summary })).collect();
    Ok(Rendered::ordered_rows(&["claim", "summary"], rows, Value::Array(json)).into())
}

pub fn explore(cfg: &RunConfig, max_len: usize, max_basis: usize) -> Result<Outcome> {
    let n = n_max(cfg)?;
    let args = [("max_len", max_len.to_string()), ("max_basis", max_basis.to_string()), ("n_max", n.to_string())];
    let found: Vec<verify::ExploreFinding> =
        cached(cfg, "explore", &args, || Ok(verify::explore(max_len, max_basis, n)?))?;
    let rows = found.iter().map(|f| vec![f.left.clone(), f.right.clone(), f.n.to_string()]).collect();
    let count = found.len();
    Ok(Outcome {
        rendered: Rendered::rows(&["left", "right", "first n"], rows, serde_json::to_value(&found)?),
        note: Some(format!("{count} pairs agree on binary skeletons up to n = {n} but not on hook types")),
        failed_claim: None,
    })
}
