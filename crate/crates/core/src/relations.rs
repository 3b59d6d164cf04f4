//! Relation checks on the moves of a fixed poset, all evaluated on index permutations.

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::linext::{LinExtSpace, OperatorTable};
use crate::permgroup::{bk_group_of_space, Permutation, PermutationGroup};
use crate::poset::Poset;

/// `L(P)` with its operator tables.
#[derive(Clone, Debug)]
pub struct MoveTables {
    pub space: LinExtSpace,
    pub ops: OperatorTable,
}

impl MoveTables {
    pub fn new(p: &Poset) -> Result<Self> {
        Ok(Self::from_space(LinExtSpace::enumerate(p)?))
    }

    pub fn with_cap(p: &Poset, cap: usize) -> Result<Self> {
        Ok(Self::from_space(LinExtSpace::enumerate_with_cap(p, cap)?))
    }

    pub fn from_space(space: LinExtSpace) -> Self {
        let ops = OperatorTable::new(&space);
        MoveTables { space, ops }
    }

    pub fn n(&self) -> usize {
        self.space.poset().len()
    }

    pub fn group(&self) -> PermutationGroup {
        bk_group_of_space(&self.space).expect("generators share the space degree")
    }

    /// `{i : t_i = 1}`.
    pub fn trivial_moves(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.ops.t(i).expect("in range").is_identity()).collect()
    }

    /// `i` with `(t_i t_{i+1})^3 ≠ 1`.
    pub fn braid_failures(&self) -> Vec<usize> {
        (1..self.n().saturating_sub(1))
            .filter(|&i| {
                let w = self.ops.t(i).expect("in range").compose(self.ops.t(i + 1).expect("in range"));
                !w.pow(3).is_identity()
            })
            .collect()
    }

    /// Every eligible `(i, j, k)`, `2 <= i + 1 < j < k <= n`, with `(t_i q_{jk})^2 ≠ 1`,
    /// sorted, each with the least failing extension index.
    pub fn cactus_failures(&self) -> Vec<CactusFailure> {
        let n = self.n();
        let pairs: Vec<(usize, usize)> = (3..=n).flat_map(|k| (3..k).map(move |j| (j, k))).collect();
        let mut out: Vec<CactusFailure> = pairs
            .par_iter()
            .flat_map_iter(|&(j, k)| {
                let q = self.ops.q_jk(j, k).expect("eligible triple");
                (1..j - 1)
                    .filter_map(|i| {
                        let w = self.ops.t(i).expect("in range").compose(&q);
                        first_non_involution_point(&w).map(|witness| CactusFailure { i, j, k, witness })
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        out.sort();
        out
    }

    /// `c(P) = max_ℓ #{i : p_i <_P p_{i+1}}`.
    pub fn comparability(&self) -> usize {
        let p = self.space.poset();
        self.space
            .extensions()
            .iter()
            .map(|e| e.word().windows(2).filter(|w| p.lt(w[0], w[1])).count())
            .max()
            .unwrap_or(0)
    }

    pub fn report(&self, witnesses: bool) -> Result<RelationReport> {
        self.report_with_group(&self.group(), witnesses)
    }

    /// As [`MoveTables::report`], reusing an already built `BK_P`.
    pub fn report_with_group(&self, group: &PermutationGroup, witnesses: bool) -> Result<RelationReport> {
        let mut cactus_failures = self.cactus_failures();
        let le_cactus = cactus_failures.is_empty();
        if !witnesses {
            cactus_failures.truncate(cactus_failures.len().min(1));
        }
        Ok(RelationReport {
            trivial_ti: self.trivial_moves(),
            braid_failures: self.braid_failures(),
            cactus_failures,
            le_cactus,
            le_symmetric: group.is_symmetric(),
            le_primitive: group.is_primitive(),
            stab_size: group.stabilizer_order()?,
            comparability: self.comparability(),
        })
    }
}

fn first_non_involution_point(w: &Permutation) -> Option<usize> {
    (0..w.degree()).find(|&x| w.apply(w.apply(x)) != x)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CactusFailure {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// Index in `L(P)` of the least extension on which `(t_i q_{jk})^2` acts nontrivially.
    pub witness: usize,
}

fn as_decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub trivial_ti: Vec<usize>,
    pub braid_failures: Vec<usize>,
    /// All failures, or at most the first one when witnesses were not requested.
    pub cactus_failures: Vec<CactusFailure>,
    pub le_cactus: bool,
    pub le_symmetric: bool,
    pub le_primitive: bool,
    #[serde(serialize_with = "as_decimal")]
    pub stab_size: BigUint,
    pub comparability: usize,
}

pub fn trivial_moves(p: &Poset) -> Result<Vec<usize>> {
    Ok(MoveTables::new(p)?.trivial_moves())
}

pub fn braid_failures(p: &Poset) -> Result<Vec<usize>> {
    Ok(MoveTables::new(p)?.braid_failures())
}

pub fn braid_holds(p: &Poset) -> Result<bool> {
    Ok(braid_failures(p)?.is_empty())
}

pub fn cactus_failures(p: &Poset) -> Result<Vec<CactusFailure>> {
    Ok(MoveTables::new(p)?.cactus_failures())
}

pub fn is_le_cactus(p: &Poset) -> Result<bool> {
    Ok(cactus_failures(p)?.is_empty())
}

pub fn is_le_symmetric(p: &Poset) -> Result<bool> {
    Ok(MoveTables::new(p)?.group().is_symmetric())
}

pub fn is_le_primitive(p: &Poset) -> Result<bool> {
    Ok(MoveTables::new(p)?.group().is_primitive())
}

/// `|BK_P| / |L(P)|`.
pub fn stab_size(p: &Poset) -> Result<BigUint> {
    MoveTables::new(p)?.group().stabilizer_order()
}

pub fn comparability(p: &Poset) -> Result<usize> {
    Ok(MoveTables::new(p)?.comparability())
}

pub fn relation_report(p: &Poset, witnesses: bool) -> Result<RelationReport> {
    MoveTables::new(p)?.report(witnesses)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub law: &'static str,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumericLaws {
    pub checks: Vec<LawCheck>,
}

impl NumericLaws {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn get(&self, law: &str) -> Option<&LawCheck> {
        self.checks.iter().find(|c| c.law == law)
    }
}

/// `6, 12, 36`, a power of two, or a multiple of 24.
pub fn is_admissible_stab_value(s: &BigUint) -> bool {
    let is_power_of_two = !s.is_zero() && (s & (s - BigUint::one())).is_zero();
    [6u32, 12, 36].iter().any(|&v| *s == BigUint::from(v)) || is_power_of_two || (s % 24u32).is_zero()
}

/// `(|BK_P| |BK_Q|)^{C(m+n, n)} (m+n)!`.
pub fn disjoint_union_bound(order_p: &BigUint, order_q: &BigUint, m: usize, n: usize) -> BigUint {
    let exponent = binomial(m + n, n) as u32;
    (order_p * order_q).pow(exponent) * (2..=m + n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

struct Summary {
    order: BigUint,
    stab: BigUint,
}

fn summarize(p: &Poset) -> Result<Summary> {
    let g = MoveTables::new(p)?.group();
    Ok(Summary { order: g.order(), stab: g.stabilizer_order()? })
}

/// The numeric laws that apply to `p` alone, plus the two-poset laws when `q` is given.
pub fn check_numeric_laws(p: &Poset, q: Option<&Poset>) -> Result<NumericLaws> {
    let tables = MoveTables::new(p)?;
    let g = tables.group();
    let order = g.order();
    let stab = g.stabilizer_order()?;
    let c = tables.comparability();
    let (h, w, n) = (p.height(), p.width(), p.len());
    let mut checks = Vec::new();

    let dual = summarize(&p.dual())?;
    checks.push(LawCheck {
        law: "dual_order",
        holds: dual.order == order,
        detail: format!("{order} vs {}", dual.order),
    });
    checks.push(LawCheck {
        law: "comparability_bounds",
        holds: h.saturating_sub(1) <= c && c + w <= n,
        detail: format!("h={h} c={c} n={n} w={w}"),
    });
    checks.push(LawCheck { law: "stab_value", holds: is_admissible_stab_value(&stab), detail: stab.to_string() });
    if p.is_indecomposable() && !p.is_empty() {
        let bound = BigUint::one() << c;
        checks.push(LawCheck {
            law: "stab_exponential_bound",
            holds: stab >= bound,
            detail: format!("{stab} >= 2^{c}"),
        });
    }

    if let Some(q) = q {
        let sq = summarize(q)?;
        let osum = summarize(&p.ordinal_sum(q))?;
        let product = &order * &sq.order;
        checks.push(LawCheck {
            law: "osum_order",
            holds: osum.order == product,
            detail: format!("{} vs {product}", osum.order),
        });
        let stab_product = &stab * &sq.stab;
        checks.push(LawCheck {
            law: "osum_stab",
            holds: osum.stab == stab_product,
            detail: format!("{} vs {stab_product}", osum.stab),
        });
        let dsum = summarize(&p.disjoint_union(q))?;
        let bound = disjoint_union_bound(&order, &sq.order, p.len(), q.len());
        checks.push(LawCheck {
            law: "dsum_bound",
            holds: dsum.order <= bound,
            detail: format!("{} <= {bound}", dsum.order),
        });
    }
    Ok(NumericLaws { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{antichain, chain, n_poset, twin_fail5, zigzag};

    #[test]
    fn trivial_moves_examples() {
        assert_eq!(trivial_moves(&chain(4)).unwrap(), vec![1, 2, 3]);
        assert!(trivial_moves(&n_poset(1, 1, 1).unwrap()).unwrap().is_empty());
        assert_eq!(trivial_moves(&antichain(2).ordinal_sum(&antichain(2))).unwrap(), vec![2]);
    }

    #[test]
    fn braid_examples() {
        assert!(braid_holds(&chain(2).disjoint_union(&chain(3))).unwrap());
        let v = antichain(1).ordinal_sum(&antichain(2)).dual();
        assert!(!braid_holds(&v).unwrap());
        assert!(braid_holds(&chain(5)).unwrap());
    }

    #[test]
    fn cactus_examples() {
        let p = antichain(3).ordinal_sum(&antichain(1));
        let fails = cactus_failures(&p).unwrap();
        assert!(fails.iter().any(|f| (f.i, f.j, f.k) == (1, 3, 4)));
        let t = twin_fail5();
        let all: Vec<_> = cactus_failures(&t).unwrap().into_iter().map(|f| (f.i, f.j, f.k)).collect();
        let eligible: Vec<_> =
            (3..=5).flat_map(|k| (3..k).flat_map(move |j| (1..j - 1).map(move |i| (i, j, k)))).collect();
        let mut eligible = eligible;
        eligible.sort();
        assert_eq!(all, eligible);
        assert!(is_le_cactus(&zigzag(3).unwrap()).unwrap());
    }

    #[test]
    fn stab_and_comparability() {
        assert_eq!(stab_size(&antichain(2).ordinal_sum(&antichain(2))).unwrap(), BigUint::one());
        assert_eq!(comparability(&antichain(4)).unwrap(), 0);
        assert_eq!(comparability(&chain(4)).unwrap(), 3);
        let p = antichain(3).ordinal_sum(&antichain(1)).ordinal_sum(&antichain(1)).disjoint_union(&antichain(1));
        assert_eq!(stab_size(&p).unwrap(), BigUint::from(466_560u32));
    }

    #[test]
    fn symmetric_examples() {
        assert!(is_le_symmetric(&n_poset(1, 2, 1).unwrap()).unwrap());
        assert!(!is_le_symmetric(&chain(2).disjoint_union(&chain(2))).unwrap());
    }

    #[test]
    fn numeric_laws_for_antichains() {
        let a2 = antichain(2);
        let laws = check_numeric_laws(&a2, Some(&a2)).unwrap();
        assert!(laws.all_hold(), "{laws:?}");
        let bound = disjoint_union_bound(&BigUint::from(2u32), &BigUint::from(2u32), 2, 2);
        assert_eq!(bound, BigUint::from(4u32).pow(6) * BigUint::from(24u32));
        assert!(laws.get("dsum_bound").is_some());
    }

    #[test]
    fn admissible_values() {
        for v in [1u32, 2, 4, 6, 12, 36, 48, 64, 72] {
            assert!(is_admissible_stab_value(&BigUint::from(v)), "{v}");
        }
        for v in [3u32, 5, 9, 18, 20] {
            assert!(!is_admissible_stab_value(&BigUint::from(v)), "{v}");
        }
    }
}
