use serde::{Deserialize, Serialize};

use crate::circulation::{at_witness_check, graph_poly_coeffs};
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::graph::{degeneracy_order, Graph};
use crate::orientation::{degree_profile, orientation_with_outdegrees, reverse, Orientation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlonTarsi {
    pub value: usize,
    /// Indegree form: max indegree `value - 1`, even and odd circulation
    /// counts differ.
    pub witness: Orientation,
}

/// Exact AT(G): the least `k` for which the graph polynomial has a nonzero
/// monomial with every exponent below `k`.
///
/// The witness realises that exponent vector as outdegrees and is then
/// reversed, so it is stated with indegrees; it is re-checked with
/// [`at_witness_check`] before being returned.
pub fn alon_tarsi_number(g: &Graph, limits: &Limits) -> Result<AlonTarsi> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n == 0 {
        return Ok(AlonTarsi {
            value: 0,
            witness: Orientation::new(0, [])?,
        });
    }
    // max outdegree k-1 forces m <= n(k-1); col(G) always suffices
    let lower = m.div_ceil(n) + 1;
    let upper = degeneracy_order(g).1.max(1);
    for k in lower..=upper {
        let coeffs = graph_poly_coeffs(g, k, limits)?;
        let Some((exps, _)) = coeffs.terms.iter().next() else {
            continue;
        };
        let target: Vec<usize> = exps.iter().map(|&e| e as usize).collect();
        let outward = orientation_with_outdegrees(g, &target)?;
        let witness = reverse(&outward).with_labels(g.labels().to_vec());
        if degree_profile(&witness).max_indegree + 1 > k || !at_witness_check(&witness, limits)? {
            return Err(Error::precondition(format!(
                "coefficient witness for k={k} failed re-verification"
            )));
        }
        return Ok(AlonTarsi { value: k, witness });
    }
    Err(Error::precondition(format!(
        "no nonzero coefficient below col(G) = {upper}; the polynomial engine is inconsistent"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, cartesian_product, catalog, FamilySpec};

    fn fam(spec: FamilySpec) -> Graph {
        build_family(&spec).unwrap()
    }

    #[test]
    fn spec_examples() {
        let l = Limits::default();
        assert_eq!(alon_tarsi_number(&fam(FamilySpec::Path(5)), &l).unwrap().value, 2);
        assert_eq!(alon_tarsi_number(&fam(FamilySpec::Cycle(4)), &l).unwrap().value, 2);
        let c3p2 = cartesian_product(&fam(FamilySpec::Cycle(3)), &fam(FamilySpec::Path(2))).unwrap();
        let at = alon_tarsi_number(&c3p2, &l).unwrap();
        assert_eq!(at.value, 3);
        assert!(at.witness.orients(&c3p2));
        assert_eq!(degree_profile(&at.witness).max_indegree, 2);
    }

    #[test]
    fn subgraph_monotonicity() {
        let l = Limits::default();
        for g in catalog::connected_graphs_up_to(5) {
            let at = alon_tarsi_number(&g, &l).unwrap().value;
            for &(u, v) in g.edges() {
                let h = g.without_edge(u, v);
                assert!(alon_tarsi_number(&h, &l).unwrap().value <= at, "{g} minus {u}{v}");
            }
        }
    }
}
