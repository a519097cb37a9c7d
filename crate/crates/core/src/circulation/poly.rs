use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::order::elimination_order;

/// Sparse coefficients of the graph polynomial `∏_{u<v} (x_u - x_v)`,
/// restricted to exponent vectors with every entry below `cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffMap {
    pub n: usize,
    pub cap: usize,
    pub terms: BTreeMap<Vec<u32>, BigInt>,
}

impl CoeffMap {
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn get(&self, exponents: &[u32]) -> Option<&BigInt> {
        self.terms.get(exponents)
    }
}

#[derive(Serialize, Deserialize)]
struct CoeffMapJson {
    n: usize,
    cap: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exponents: Vec<u32>,
    coeff: String,
}

impl Serialize for CoeffMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CoeffMapJson {
            n: self.n,
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    exponents: e.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CoeffMap {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = CoeffMapJson::deserialize(d)?;
        let mut terms = BTreeMap::new();
        for t in j.terms {
            let c: BigInt = t.coeff.parse().map_err(serde::de::Error::custom)?;
            if t.exponents.len() != j.n {
                return Err(serde::de::Error::custom("exponent vector length must equal n"));
            }
            terms.insert(t.exponents, c);
        }
        Ok(CoeffMap { n: j.n, cap: j.cap, terms })
    }
}

/// Expands `∏_{u<v} (x_u - x_v)` over the edges of `g`, pruning every
/// partial term with an exponent `>= cap` and every term that can no
/// longer absorb the remaining edges.
pub fn graph_poly_coeffs(g: &Graph, cap: usize, limits: &Limits) -> Result<CoeffMap> {
    if cap == 0 {
        return Err(Error::precondition("cap must be positive"));
    }
    let n = g.vertex_count();
    let edges = g.edges();
    let order = elimination_order(n, edges);
    let top = u8::try_from(cap - 1).map_err(|_| Error::precondition("cap must be at most 256"))?;
    let mut remaining: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut left = edges.len();

    let mut table: HashMap<Vec<u8>, BigInt> = HashMap::new();
    table.insert(vec![0; n], BigInt::one());
    for &i in &order {
        let (u, v) = edges[i];
        remaining[u] -= 1;
        remaining[v] -= 1;
        left -= 1;
        let absorbable = |k: &[u8]| -> bool {
            let room: usize = (0..n)
                .map(|w| remaining[w].min((top - k[w]) as usize))
                .sum();
            room >= left
        };
        let mut next: HashMap<Vec<u8>, BigInt> = HashMap::with_capacity(table.len() * 2);
        for (key, coeff) in &table {
            if key[u] < top {
                let mut k = key.clone();
                k[u] += 1;
                if absorbable(&k) {
                    *next.entry(k).or_insert_with(BigInt::zero) += coeff;
                }
            }
            if key[v] < top {
                let mut k = key.clone();
                k[v] += 1;
                if absorbable(&k) {
                    *next.entry(k).or_insert_with(BigInt::zero) -= coeff;
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        if next.len() > limits.coeff_states {
            return Err(Error::resource(
                "graph_poly_coeffs",
                format!("{} terms exceed the budget of {}", next.len(), limits.coeff_states),
                "raise coeff_states or use an explicit orientation witness",
            ));
        }
        table = next;
    }
    let terms = table
        .into_iter()
        .map(|(k, c)| (k.into_iter().map(u32::from).collect(), c))
        .collect();
    Ok(CoeffMap { n, cap, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulation::{census_dp, census_enumerate};
    use crate::graph::{build_family, catalog, FamilySpec};
    use crate::orientation::Orientation;

    fn fam(spec: FamilySpec) -> Graph {
        build_family(&spec).unwrap()
    }

    #[test]
    fn single_edge() {
        let g = fam(FamilySpec::Path(2));
        let c = graph_poly_coeffs(&g, 2, &Limits::default()).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.get(&[1, 0]), Some(&BigInt::from(1)));
        assert_eq!(c.get(&[0, 1]), Some(&BigInt::from(-1)));
    }

    #[test]
    fn four_cycle_and_triangle() {
        let c4 = graph_poly_coeffs(&fam(FamilySpec::Cycle(4)), 2, &Limits::default()).unwrap();
        assert_eq!(c4.len(), 1);
        let (exps, coeff) = c4.terms.iter().next().unwrap();
        assert_eq!(exps, &vec![1, 1, 1, 1]);
        assert_eq!(coeff.magnitude().clone(), 2u32.into());
        assert!(graph_poly_coeffs(&fam(FamilySpec::Cycle(3)), 2, &Limits::default()).unwrap().is_empty());
    }

    /// Plain expansion without pruning or ordering.
    fn naive(g: &Graph) -> BTreeMap<Vec<u32>, BigInt> {
        let mut poly: BTreeMap<Vec<u32>, BigInt> = BTreeMap::from([(vec![0; g.vertex_count()], BigInt::one())]);
        for &(u, v) in g.edges() {
            let mut next = BTreeMap::new();
            for (e, c) in &poly {
                let mut a = e.clone();
                a[u] += 1;
                *next.entry(a).or_insert_with(BigInt::zero) += c;
                let mut b = e.clone();
                b[v] += 1;
                *next.entry(b).or_insert_with(BigInt::zero) -= c;
            }
            poly = next;
        }
        poly.retain(|_, c| !c.is_zero());
        poly
    }

    #[test]
    fn matches_naive_expansion_and_censuses() {
        let l = Limits::default();
        for g in catalog::connected_graphs_up_to(5) {
            let full = naive(&g);
            for cap in 1..=4 {
                let got = graph_poly_coeffs(&g, cap, &l).unwrap();
                let want: BTreeMap<_, _> = full
                    .iter()
                    .filter(|(e, _)| e.iter().all(|&x| (x as usize) < cap))
                    .map(|(e, c)| (e.clone(), c.clone()))
                    .collect();
                assert_eq!(got.terms, want, "{g} cap {cap}");
            }
            if g.edge_count() <= 8 {
                for mask in 0..1u64 << g.edge_count() {
                    let d = Orientation::from_edge_mask(&g, mask);
                    let key: Vec<u32> = d.out_degrees().into_iter().map(|x| x as u32).collect();
                    let coeff = full.get(&key).cloned().unwrap_or_else(BigInt::zero);
                    let diff = BigInt::from(census_enumerate(&d, &l).unwrap().diff());
                    assert_eq!(coeff.magnitude(), diff.magnitude());
                    assert_eq!(census_dp(&d, &l).unwrap(), coeff);
                }
            }
        }
    }

    #[test]
    fn json_uses_decimal_strings() {
        let c = graph_poly_coeffs(&fam(FamilySpec::Cycle(4)), 2, &Limits::default()).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert!(s.contains("\"coeff\":\"2\"") || s.contains("\"coeff\":\"-2\""));
        let back: CoeffMap = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }
}
