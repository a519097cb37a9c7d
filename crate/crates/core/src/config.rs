/// Size limits for the exact solvers. These are configuration, not
/// constants: suites and the CLI raise them where an instance needs it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest arc count accepted by the subset enumerator (at most 64).
    pub enumeration_arcs: usize,
    /// Largest frontier-DP table for a single coefficient.
    pub dp_states: usize,
    /// Largest table while expanding the graph polynomial.
    pub coeff_states: usize,
    /// Vertex limit for 2-choosability brute force.
    pub choosable_k2_vertices: usize,
    /// Vertex limit for k-choosability brute force with k >= 3.
    pub choosable_vertices: usize,
    /// Vertex limit for the paintability game solver.
    pub paint_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration_arcs: 28,
            dp_states: 4_000_000,
            coeff_states: 4_000_000,
            choosable_k2_vertices: 6,
            choosable_vertices: 4,
            paint_vertices: 8,
        }
    }
}

impl Limits {
    pub fn choosable_vertex_limit(&self, k: usize) -> usize {
        if k <= 2 {
            self.choosable_k2_vertices
        } else {
            self.choosable_vertices
        }
    }
}
