//! Exact coloring invariants of small graphs and the comparison bounds.
//!
//! Each invariant has its own solver and none borrows from another: χ by
//! branch and bound, χ_ℓ by enumerating list assignments, χ_p by solving
//! the painting game, AT from graph-polynomial coefficients. That keeps
//! the chain `χ ≤ χ_ℓ ≤ χ_p ≤ AT` a real check.

pub mod alon_tarsi;
pub mod characterization;
pub mod chromatic;
pub mod lists;
pub mod paint;

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::config::Limits;
use crate::error::Result;
use crate::graph::{degeneracy_order, Graph};

pub use alon_tarsi::{alon_tarsi_number, AlonTarsi};
pub use characterization::two_choosable_by_characterization;
pub use chromatic::{chromatic_number, optimal_coloring};
pub use lists::{
    check_list_colorable, count_list_colorings, find_bad_assignment, is_k_choosable, k_core, list_chromatic_number,
    BadSearch, Choosability, ListAssignment,
};
pub use paint::{is_k_paintable, is_k_paintable_unrestricted, paint_number, GameState, Phase};

/// col(G), from the smallest-last ordering.
pub fn coloring_number(g: &Graph) -> usize {
    degeneracy_order(g).1
}

/// `min{χ_ℓ(G) + col(H), col(G) + χ_ℓ(H)} − 1`.
pub fn borowiecki(chi_list_g: usize, col_g: usize, chi_list_h: usize, col_h: usize) -> usize {
    (chi_list_g + col_h).min(col_g + chi_list_h) - 1
}

/// The product bound on χ_ℓ(G□H), with χ_ℓ of both factors computed exactly.
pub fn bound_borowiecki(g: &Graph, h: &Graph, limits: &Limits) -> Result<usize> {
    Ok(borowiecki(
        list_chromatic_number(g, limits)?,
        coloring_number(g),
        list_chromatic_number(h, limits)?,
        coloring_number(h),
    ))
}

/// Δ(G) + Δ(H) = Δ(G□H), the list-Brooks bound for non-complete,
/// non-odd-cycle products.
pub fn bound_delta_sum(g: &Graph, h: &Graph) -> usize {
    g.max_degree() + h.max_degree()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryStatus {
    Computed,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantEntry {
    pub value: Option<usize>,
    pub status: EntryStatus,
    pub method: String,
    pub runtime_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl InvariantEntry {
    fn run(method: &str, f: impl FnOnce() -> Result<usize>) -> Self {
        let start = Instant::now();
        let out = f();
        let runtime_ms = start.elapsed().as_millis() as u64;
        match out {
            Ok(v) => InvariantEntry {
                value: Some(v),
                status: EntryStatus::Computed,
                method: method.to_string(),
                runtime_ms,
                note: None,
            },
            Err(e) => InvariantEntry {
                value: None,
                status: EntryStatus::Skipped,
                method: method.to_string(),
                runtime_ms,
                note: Some(e.to_string()),
            },
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub borowiecki: Option<usize>,
    pub delta_sum: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub chi: InvariantEntry,
    pub col: InvariantEntry,
    pub chi_list: InvariantEntry,
    pub chi_paint: InvariantEntry,
    pub at: InvariantEntry,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Bounds>,
    /// `None` when fewer than two chain members were computed.
    pub chain_holds: Option<bool>,
    pub chromatic_choosable: Option<bool>,
    pub chromatic_at: Option<bool>,
}

impl InvariantReport {
    pub const CSV_HEADER: &'static str = "n,m,chi,col,chi_list,chi_paint,at,chain_holds,chromatic_choosable,chromatic_at";

    pub fn csv_row(&self) -> String {
        let v = |e: &InvariantEntry| e.value.map(|x| x.to_string()).unwrap_or_default();
        let b = |x: Option<bool>| x.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.m,
            v(&self.chi),
            v(&self.col),
            v(&self.chi_list),
            v(&self.chi_paint),
            v(&self.at),
            b(self.chain_holds),
            b(self.chromatic_choosable),
            b(self.chromatic_at)
        )
    }
}

/// Computes χ, col, χ_ℓ, χ_p and AT with independent solvers and checks
/// `χ ≤ χ_ℓ ≤ χ_p ≤ AT` on whatever was computed. A solver that hits a
/// resource limit is reported as skipped.
pub fn chain_check(g: &Graph, limits: &Limits) -> InvariantReport {
    let chi = InvariantEntry::run("dsatur branch and bound", || Ok(chromatic_number(g)));
    let col = InvariantEntry::run("smallest-last ordering", || Ok(coloring_number(g)));
    let chi_list = InvariantEntry::run("canonical list-assignment enumeration", || {
        list_chromatic_number(g, limits)
    });
    let chi_paint = InvariantEntry::run("painting game minimax", || paint_number(g, limits));
    let at = InvariantEntry::run("graph polynomial coefficients", || {
        Ok(alon_tarsi_number(g, limits)?.value)
    });
    let chain: Vec<usize> = [&chi, &chi_list, &chi_paint, &at].iter().filter_map(|e| e.value).collect();
    let chain_holds = (chain.len() >= 2).then(|| chain.windows(2).all(|w| w[0] <= w[1]));
    let eq = |a: &InvariantEntry, b: &InvariantEntry| Some(a.value? == b.value?);
    InvariantReport {
        n: g.vertex_count(),
        m: g.edge_count(),
        chromatic_choosable: eq(&chi, &chi_list),
        chromatic_at: eq(&chi, &at),
        chi,
        col,
        chi_list,
        chi_paint,
        at,
        bounds: None,
        chain_holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, cartesian_product, graph_power, FamilySpec};

    fn fam(spec: FamilySpec) -> Graph {
        build_family(&spec).unwrap()
    }

    fn values(r: &InvariantReport) -> [Option<usize>; 4] {
        [r.chi.value, r.chi_list.value, r.chi_paint.value, r.at.value]
    }

    #[test]
    fn coloring_numbers() {
        assert_eq!(coloring_number(&fam(FamilySpec::Path(7))), 2);
        assert_eq!(coloring_number(&graph_power(&fam(FamilySpec::Path(6)), 2).unwrap()), 3);
        assert_eq!(coloring_number(&fam(FamilySpec::Complete(4))), 4);
    }

    #[test]
    fn bounds_examples() {
        let l = Limits::default();
        let c5 = fam(FamilySpec::Cycle(5));
        assert_eq!(bound_borowiecki(&c5, &fam(FamilySpec::Path(3)), &l).unwrap(), 4);
        assert_eq!(
            bound_borowiecki(&fam(FamilySpec::Complete(4)), &fam(FamilySpec::Complete(3)), &l).unwrap(),
            6
        );
        let p6sq = graph_power(&fam(FamilySpec::Path(6)), 2).unwrap();
        assert_eq!(bound_borowiecki(&c5, &p6sq, &l).unwrap(), 2 + 3);
        assert_eq!(bound_delta_sum(&c5, &fam(FamilySpec::Path(3))), 4);
    }

    #[test]
    fn chain_examples() {
        let l = Limits::default();
        assert_eq!(values(&chain_check(&fam(FamilySpec::Complete(3)), &l)), [Some(3); 4]);
        assert_eq!(values(&chain_check(&fam(FamilySpec::Cycle(4)), &l)), [Some(2); 4]);
        let c5 = chain_check(&fam(FamilySpec::Cycle(5)), &l);
        assert_eq!(values(&c5), [Some(3); 4]);
        assert_eq!(c5.chain_holds, Some(true));
        assert_eq!(c5.chromatic_at, Some(true));
    }

    #[test]
    fn skipped_entries_are_reported() {
        let g = cartesian_product(&fam(FamilySpec::Cycle(5)), &fam(FamilySpec::Path(2))).unwrap();
        let r = chain_check(&g, &Limits::default());
        assert_eq!(r.chi_paint.status, EntryStatus::Skipped);
        assert!(r.chi_paint.note.as_deref().unwrap().contains("limit"));
        assert_eq!(r.chi.value, Some(3));
        assert_eq!(r.csv_row().split(',').count(), InvariantReport::CSV_HEADER.split(',').count());
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<InvariantReport>(&json).unwrap(), r);
    }
}
