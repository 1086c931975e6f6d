//! Permutation statistics and joint-distribution tables.
//!
//! Every statistic reads only the relative order of the entries, so inputs
//! with arbitrary distinct labels are accepted and normalized first.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{normalize_slice, Entry, Permutation};
use crate::stacksort::sort_once;

pub use crate::trees::skeleton_of_perm;

/// 1-based positions `i` with `p_i > p_{i+1}`.
pub fn descent_set(p: &Permutation) -> BTreeSet<usize> {
    descents_of(p.entries()).collect()
}

fn descents_of(e: &[Entry]) -> impl Iterator<Item = usize> + '_ {
    e.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
}

pub fn des(p: &Permutation) -> usize {
    descents_of(p.entries()).count()
}

/// Number of `i` in `2..n` with `p_{i−1} < p_i > p_{i+1}`.
pub fn peak(p: &Permutation) -> usize {
    p.entries()
        .windows(3)
        .filter(|w| w[0] < w[1] && w[1] > w[2])
        .count()
}

/// Left-to-right maxima.
pub fn lmax(p: &Permutation) -> usize {
    let mut best = 0;
    p.entries()
        .iter()
        .filter(|&&v| {
            let record = v > best;
            best = best.max(v);
            record
        })
        .count()
}

/// Right-to-left maxima.
pub fn rmax(p: &Permutation) -> usize {
    let mut best = 0;
    p.entries()
        .iter()
        .rev()
        .filter(|&&v| {
            let record = v > best;
            best = best.max(v);
            record
        })
        .count()
}

/// Largest `m` such that the `m` largest entries occur in decreasing order.
pub fn zeil(p: &Permutation) -> Result<usize> {
    if p.is_empty() {
        return Err(Error::EmptyPermutation("zeil"));
    }
    let e = normalize_slice(p.entries());
    let n = e.len();
    let mut pos = vec![0usize; n + 1];
    for (i, &v) in e.iter().enumerate() {
        pos[v as usize] = i;
    }
    let mut m = 1;
    while m < n && pos[n - m] > pos[n - m + 1] {
        m += 1;
    }
    Ok(m)
}

/// Length of the longest suffix of fixed points `p_i = i`; the identity has
/// tail length `n`.
pub fn tail_length(p: &Permutation) -> usize {
    let e = normalize_slice(p.entries());
    e.iter()
        .enumerate()
        .rev()
        .take_while(|&(i, &v)| v as usize == i + 1)
        .count()
}

/// A statistic of `(n, Des(π))`, the shape needed for the LenDes family.
pub type LenDesFn = Arc<dyn Fn(usize, &BTreeSet<usize>) -> u64 + Send + Sync>;

#[derive(Clone)]
pub enum Statistic {
    Des,
    Peak,
    Lmax,
    Rmax,
    Zeil,
    Tl,
    DesSet,
    LenDes { name: String, f: LenDesFn },
}

impl Statistic {
    pub const BUILTIN: [&'static str; 7] = ["des", "peak", "lmax", "rmax", "zeil", "tl", "desset"];

    pub fn len_des(name: &str, f: impl Fn(usize, &BTreeSet<usize>) -> u64 + Send + Sync + 'static) -> Self {
        Statistic::LenDes {
            name: name.to_string(),
            f: Arc::new(f),
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Statistic::Des => "des",
            Statistic::Peak => "peak",
            Statistic::Lmax => "lmax",
            Statistic::Rmax => "rmax",
            Statistic::Zeil => "zeil",
            Statistic::Tl => "tl",
            Statistic::DesSet => "desset",
            Statistic::LenDes { name, .. } => name,
        }
    }

    pub fn eval(&self, p: &Permutation) -> Result<StatValue> {
        Ok(match self {
            Statistic::Des => StatValue::Int(des(p) as u64),
            Statistic::Peak => StatValue::Int(peak(p) as u64),
            Statistic::Lmax => StatValue::Int(lmax(p) as u64),
            Statistic::Rmax => StatValue::Int(rmax(p) as u64),
            Statistic::Zeil => StatValue::Int(zeil(p)? as u64),
            Statistic::Tl => StatValue::Int(tail_length(p) as u64),
            Statistic::DesSet => StatValue::Set(descent_set(p)),
            Statistic::LenDes { f, .. } => StatValue::Int(f(p.len(), &descent_set(p))),
        })
    }

    pub fn parse_list(names: &str) -> Result<Vec<Statistic>> {
        names
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect()
    }
}

impl fmt::Debug for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "des" => Statistic::Des,
            "peak" => Statistic::Peak,
            "lmax" => Statistic::Lmax,
            "rmax" => Statistic::Rmax,
            "zeil" => Statistic::Zeil,
            "tl" => Statistic::Tl,
            "desset" | "des-set" => Statistic::DesSet,
            _ => return Err(Error::UnknownStatistic(s.to_string())),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StatValue {
    Int(u64),
    Set(BTreeSet<usize>),
}

impl fmt::Display for StatValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatValue::Int(v) => write!(f, "{v}"),
            StatValue::Set(s) => {
                let parts: Vec<String> = s.iter().map(usize::to_string).collect();
                write!(f, "{{{}}}", parts.join(" "))
            }
        }
    }
}

/// All builtin statistics of one permutation, keyed by name.
pub type StatVector = BTreeMap<String, StatValue>;

pub fn stat_vector(p: &Permutation) -> Result<StatVector> {
    let mut out = StatVector::new();
    for name in Statistic::BUILTIN {
        if name == "zeil" && p.is_empty() {
            continue;
        }
        let stat: Statistic = name.parse()?;
        out.insert(name.to_string(), stat.eval(p)?);
    }
    Ok(out)
}

/// Multiset of statistic tuples over a set of permutations. Two tables are
/// equal exactly when the statistic names and the multisets agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributionTable {
    pub stats: Vec<String>,
    pub source: String,
    pub rows: BTreeMap<Vec<StatValue>, u64>,
}

impl DistributionTable {
    pub fn total(&self) -> u64 {
        self.rows.values().sum()
    }

    /// One line per distinct tuple, with a trailing multiplicity column.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = self.stats.clone();
        header.push("count".into());
        let io = |e: csv::Error| Error::Precondition(format!("csv: {e}"));
        w.write_record(&header).map_err(io)?;
        for (tuple, count) in &self.rows {
            let mut rec: Vec<String> = tuple.iter().map(StatValue::to_string).collect();
            rec.push(count.to_string());
            w.write_record(&rec).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Precondition(format!("csv: {e}")))?;
        String::from_utf8(bytes).map_err(|e| Error::Precondition(e.to_string()))
    }

    pub fn to_json(&self) -> Result<String> {
        #[derive(Serialize)]
        struct Row<'a> {
            values: &'a [StatValue],
            count: u64,
        }
        #[derive(Serialize)]
        struct Out<'a> {
            stats: &'a [String],
            source: &'a str,
            rows: Vec<Row<'a>>,
        }
        let out = Out {
            stats: &self.stats,
            source: &self.source,
            rows: self
                .rows
                .iter()
                .map(|(values, &count)| Row { values, count })
                .collect(),
        };
        serde_json::to_string_pretty(&out).map_err(|e| Error::Precondition(e.to_string()))
    }
}

pub fn joint_distribution<'a>(
    perms: impl IntoIterator<Item = &'a Permutation>,
    stats: &[Statistic],
    source: &str,
) -> Result<DistributionTable> {
    let mut rows = BTreeMap::new();
    for p in perms {
        let tuple = stats.iter().map(|s| s.eval(p)).collect::<Result<Vec<_>>>()?;
        *rows.entry(tuple).or_insert(0) += 1;
    }
    Ok(DistributionTable {
        stats: stats.iter().map(|s| s.name().to_string()).collect(),
        source: source.to_string(),
        rows,
    })
}

/// Convenience form taking statistic names.
pub fn joint_distribution_by_name<'a>(
    perms: impl IntoIterator<Item = &'a Permutation>,
    names: &[&str],
    source: &str,
) -> Result<DistributionTable> {
    let stats = names.iter().map(|n| n.parse()).collect::<Result<Vec<Statistic>>>()?;
    joint_distribution(perms, &stats, source)
}

/// `min{rmax(σ), tl(s(σ))}`, which equals `zeil(σ)` for nonempty `σ`.
pub fn zeil_via_sorting(sigma: &Permutation) -> usize {
    rmax(sigma).min(tail_length(&sort_once(&sigma.normalize())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;
    use proptest::prelude::*;
    use std::collections::HashMap;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(des(&perm("2413567")), 1);
        assert_eq!(peak(&perm("123")), 0);
        assert_eq!(descent_set(&perm("35412678")), BTreeSet::from([2, 3]));
        assert_eq!(rmax(&perm("3421")), 3);
        assert_eq!(rmax(&perm("3142")), 2);
        assert_eq!(lmax(&Permutation::empty()), 0);
        assert_eq!(zeil(&perm("321")).unwrap(), 3);
        assert_eq!(zeil(&perm("123")).unwrap(), 1);
        assert!(zeil(&Permutation::empty()).is_err());
        assert_eq!(tail_length(&perm("35412678")), 3);
        assert_eq!(tail_length(&perm("1324")), 1);
        assert_eq!(tail_length(&perm("21453")), 0);
        assert_eq!(tail_length(&Permutation::identity(4)), 4);
        assert_eq!(tail_length(&Permutation::empty()), 0);
        assert_eq!(peak(&perm("13254")), 2);
        assert_eq!(lmax(&perm("2413")), 2);
    }

    #[test]
    fn zeil_from_sorting() {
        for n in 1..=7 {
            for sigma in all_permutations(n) {
                assert_eq!(zeil(&sigma).unwrap(), zeil_via_sorting(&sigma), "{sigma:?}");
            }
        }
    }

    #[test]
    fn skeletal_statistics_factor_through_the_skeleton() {
        let skeletal = ["desset", "des", "peak", "lmax", "rmax", "tl"];
        for n in 1..=6 {
            let mut seen: HashMap<_, Vec<StatValue>> = HashMap::new();
            for p in all_permutations(n) {
                let values: Vec<StatValue> = skeletal
                    .iter()
                    .map(|s| s.parse::<Statistic>().unwrap().eval(&p).unwrap())
                    .collect();
                let prev = seen.entry(skeleton_of_perm(&p)).or_insert_with(|| values.clone());
                assert_eq!(*prev, values, "{p:?}");
            }
        }
    }

    #[test]
    fn zeil_is_not_skeletal() {
        let mut witness = None;
        'outer: for n in 1..=5 {
            let mut seen: HashMap<_, (Permutation, usize)> = HashMap::new();
            for p in all_permutations(n) {
                let z = zeil(&p).unwrap();
                match seen.get(&skeleton_of_perm(&p)) {
                    Some((q, zq)) if *zq != z => {
                        witness = Some((q.clone(), p.clone()));
                        break 'outer;
                    }
                    Some(_) => {}
                    None => {
                        seen.insert(skeleton_of_perm(&p), (p, z));
                    }
                }
            }
        }
        let (q, p) = witness.expect("some pair shares a skeleton but not zeil");
        assert_eq!(skeleton_of_perm(&p), skeleton_of_perm(&q));
        assert_ne!(zeil(&p).unwrap(), zeil(&q).unwrap());
    }

    #[test]
    fn distribution_tables() {
        let a = [perm("3412"), perm("3421")];
        let b = [perm("3142"), perm("1342")];
        let ta = joint_distribution_by_name(&a, &["rmax"], "a").unwrap();
        let tb = joint_distribution_by_name(&b, &["rmax"], "a").unwrap();
        assert_ne!(ta, tb);
        let empty = joint_distribution_by_name(&[], &["des"], "none").unwrap();
        assert!(empty.rows.is_empty());
        let one = joint_distribution_by_name(&[perm("123")], &["des", "peak"], "id").unwrap();
        assert_eq!(
            one.rows.into_iter().collect::<Vec<_>>(),
            vec![(vec![StatValue::Int(0), StatValue::Int(0)], 1)]
        );
        assert_eq!(
            joint_distribution_by_name(&a, &["indmax"], "a"),
            Err(Error::UnknownStatistic("indmax".into()))
        );
    }

    #[test]
    fn table_serialization() {
        let perms = all_permutations(3);
        let t = joint_distribution_by_name(&perms, &["des", "desset"], "S_3").unwrap();
        assert_eq!(t.total(), 6);
        let csv = t.to_csv().unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "des,desset,count");
        assert_eq!(lines[1], "0,{},1");
        assert_eq!(lines.len(), 1 + t.rows.len());
        let json: serde_json::Value = serde_json::from_str(&t.to_json().unwrap()).unwrap();
        assert_eq!(json["rows"].as_array().unwrap().len(), t.rows.len());
    }

    #[test]
    fn len_des_statistics() {
        let maj = Statistic::len_des("maj", |_, d| d.iter().map(|&i| i as u64).sum());
        assert_eq!(maj.eval(&perm("35412678")).unwrap(), StatValue::Int(5));
        let t = joint_distribution(&all_permutations(3), &[maj], "S_3").unwrap();
        assert_eq!(t.stats, vec!["maj"]);
        // major index is Mahonian: 1, 2, 2, 1 on S_3
        let counts: Vec<u64> = t.rows.values().copied().collect();
        assert_eq!(counts, vec![1, 2, 2, 1]);
    }

    fn distinct_labels() -> impl Strategy<Value = Vec<Entry>> {
        proptest::collection::btree_set(1u32..200, 0..9)
            .prop_flat_map(|set| Just(set.into_iter().collect::<Vec<_>>()).prop_shuffle())
    }

    proptest! {
        #[test]
        fn statistics_ignore_labels(labels in distinct_labels()) {
            let raw = Permutation::new(labels).unwrap();
            let norm = raw.normalize();
            prop_assert_eq!(stat_vector(&raw).unwrap(), stat_vector(&norm).unwrap());
            prop_assert_eq!(skeleton_of_perm(&raw), skeleton_of_perm(&norm));
            let v = stat_vector(&norm).unwrap();
            if let (StatValue::Int(d), StatValue::Set(s)) = (&v["des"], &v["desset"]) {
                prop_assert_eq!(*d as usize, s.len());
            }
            prop_assert!(v["peak"] <= v["des"]);
            if !norm.is_empty() {
                prop_assert!(v["zeil"] <= v["rmax"]);
            }
        }
    }
}
