//! Census of small posets up to isomorphism, and classification of each class.

mod oracle;
mod suite;

use std::collections::BTreeMap;
use std::fmt::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::permgroup::PermutationGroup;
use crate::poset::{canonical_form, canonical_poset, ElementSet, Poset};
use crate::relations::{MoveTables, RelationReport};

pub use oracle::{closure_order, fixed_base_order};
pub use suite::{verify_suite, ItemStatus, SuiteItem, SuiteReport};

pub const CENSUS_CAP: usize = 7;

fn check_census_size(n: usize) -> Result<()> {
    if n > CENSUS_CAP {
        return Err(Error::Cap { what: "census size", cap: CENSUS_CAP, got: n });
    }
    Ok(())
}

fn extend_by_maximal(p: &Poset, ideal: ElementSet) -> Poset {
    let n = p.len();
    let mut relations = p.covers().to_vec();
    relations.extend(ideal.iter().map(|x| (x, n)));
    Poset::from_covers(n + 1, &relations).expect("new element is maximal")
}

/// One canonical representative per isomorphism class of `n`-element posets, sorted by canonical form.
pub fn all_posets(n: usize) -> Result<Vec<Poset>> {
    check_census_size(n)?;
    let mut level = vec![Poset::empty()];
    for _ in 0..n {
        let mut next = BTreeMap::new();
        for p in &level {
            for ideal in p.order_ideals() {
                let q = extend_by_maximal(p, ideal);
                next.entry(canonical_form(&q)?).or_insert(q);
            }
        }
        level = next.into_values().map(|q| canonical_poset(&q)).collect::<Result<_>>()?;
    }
    Ok(level)
}

/// Class counts for `0..=n`.
pub fn census_counts(n: usize) -> Result<Vec<usize>> {
    (0..=n).map(|k| all_posets(k).map(|v| v.len())).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    LeCactus,
    LeSymmetric,
    LePrimitive,
    Braid,
}

impl std::str::FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "le-cactus" => Ok(Property::LeCactus),
            "le-symmetric" => Ok(Property::LeSymmetric),
            "le-primitive" => Ok(Property::LePrimitive),
            "braid" => Ok(Property::Braid),
            _ => Err(Error::Param(format!("unknown property {s:?}"))),
        }
    }
}

/// One conjunct of a census query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Filter {
    Connected(bool),
    SeriesParallel(bool),
    Property(Property, bool),
}

impl Filter {
    fn structural(self, p: &Poset) -> Option<bool> {
        match self {
            Filter::Connected(want) => Some(p.is_connected() == want),
            Filter::SeriesParallel(want) => Some(p.is_series_parallel() == want),
            Filter::Property(..) => None,
        }
    }

    fn on_report(self, r: &RelationReport) -> bool {
        match self {
            Filter::Property(prop, want) => {
                let value = match prop {
                    Property::LeCactus => r.le_cactus,
                    Property::LeSymmetric => r.le_symmetric,
                    Property::LePrimitive => r.le_primitive,
                    Property::Braid => r.braid_failures.is_empty(),
                };
                value == want
            }
            _ => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    pub degree: usize,
    pub order: String,
    pub transitive: bool,
    pub primitive: bool,
    pub symmetric: bool,
}

impl GroupSummary {
    pub fn of(g: &PermutationGroup) -> Self {
        GroupSummary {
            degree: g.degree(),
            order: g.order().to_string(),
            transitive: g.is_transitive(),
            primitive: g.is_primitive(),
            symmetric: g.is_symmetric(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skip {
    /// `|L(P)|` as a decimal string.
    pub count: String,
    pub cap: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    /// Hex encoding of the canonical form bytes.
    pub canonical_form: String,
    pub n: usize,
    pub covers: Vec<(usize, usize)>,
    pub connected: bool,
    pub series_parallel: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<RelationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<Skip>,
}

impl ClassificationRecord {
    pub fn poset(&self) -> Poset {
        Poset::from_covers(self.n, &self.covers).expect("record covers come from a poset")
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().fold(String::with_capacity(2 * bytes.len()), |mut s, b| {
        write!(s, "{b:02x}").expect("string write");
        s
    })
}

/// Full record for `p`; when `|L(P)|` exceeds `cap` only the structural fields are filled.
pub fn classify_poset(p: &Poset, cap: usize) -> Result<ClassificationRecord> {
    let mut record = ClassificationRecord {
        canonical_form: hex(&canonical_form(p)?),
        n: p.len(),
        covers: p.covers().to_vec(),
        connected: p.is_connected(),
        series_parallel: p.is_series_parallel(),
        report: None,
        group: None,
        skipped: None,
    };
    match MoveTables::with_cap(p, cap) {
        Ok(tables) => {
            let g = tables.group();
            record.report = Some(tables.report_with_group(&g, true)?);
            record.group = Some(GroupSummary::of(&g));
        }
        Err(Error::DegreeCap { count, cap }) => record.skipped = Some(Skip { count, cap }),
        Err(e) => return Err(e),
    }
    Ok(record)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Classification {
    /// Matching classes in canonical order.
    pub records: Vec<ClassificationRecord>,
    /// Classes passing the structural filters whose properties could not be computed under the cap.
    pub skipped: Vec<ClassificationRecord>,
}

impl Classification {
    /// JSON lines: matching records, then skipped ones.
    pub fn to_jsonl(&self) -> String {
        self.records
            .iter()
            .chain(&self.skipped)
            .map(|r| serde_json::to_string(r).expect("record serializes") + "\n")
            .collect()
    }
}

/// Filters `posets` (all conjuncts must hold). Runs on the current rayon pool; output order follows the input.
pub fn classify_posets(posets: &[Poset], filters: &[Filter], cap: usize) -> Result<Classification> {
    let candidates: Vec<&Poset> =
        posets.iter().filter(|p| filters.iter().all(|f| f.structural(p).unwrap_or(true))).collect();
    let records: Vec<ClassificationRecord> =
        candidates.par_iter().map(|p| classify_poset(p, cap)).collect::<Result<_>>()?;
    let mut out = Classification::default();
    for r in records {
        match &r.report {
            Some(report) if filters.iter().all(|f| f.on_report(report)) => out.records.push(r),
            Some(_) => {}
            None => out.skipped.push(r),
        }
    }
    Ok(out)
}

pub fn classify(n: usize, filters: &[Filter], cap: usize) -> Result<Classification> {
    classify_posets(&all_posets(n)?, filters, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{antichain, chain, is_isomorphic};

    #[test]
    fn small_census() {
        assert_eq!(census_counts(5).unwrap(), vec![1, 1, 2, 5, 16, 63]);
        let two = all_posets(2).unwrap();
        assert!(two.iter().any(|p| is_isomorphic(p, &antichain(2)).unwrap()));
        assert!(two.iter().any(|p| is_isomorphic(p, &chain(2)).unwrap()));
        assert!(matches!(all_posets(8), Err(Error::Cap { .. })));
    }

    #[test]
    fn connected_non_cactus_four_element_posets() {
        let c = classify(4, &[Filter::Connected(true), Filter::Property(Property::LeCactus, false)], 5000).unwrap();
        assert_eq!(c.records.len(), 3);
        assert!(c.skipped.is_empty());
    }

    #[test]
    fn skipped_classes_are_listed() {
        let c = classify(3, &[], 2).unwrap();
        assert!(c.skipped.iter().any(|r| r.skipped.as_ref().unwrap().count == "6"));
        assert_eq!(c.records.len() + c.skipped.len(), 5);
        let lines = c.to_jsonl();
        assert_eq!(lines.lines().count(), 5);
    }

    #[test]
    fn property_parsing() {
        assert_eq!("le-primitive".parse::<Property>().unwrap(), Property::LePrimitive);
        assert!("cactus".parse::<Property>().is_err());
    }
}
