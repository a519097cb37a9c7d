//! Explicit orientations of products `G □ H` whose circulation count is odd.
//!
//! Every construction here is a special case of one recipe. The vertex set
//! of `G` is split into blocks, each an odd cycle or a complete graph. In
//! each copy of a block, an odd cycle `C` (the whole block, or its last
//! three vertices for complete blocks) is oriented cyclically
//! `v_1 -> v_2 -> ... -> v_last -> v_1`; remaining block edges point from
//! lower to higher local index. Edges of `H` point forward along a fixed
//! Hamilton path `w_1..w_m`, and edges between blocks point from the earlier
//! block to the later one. Finally each block gets one extra arc `e*` from
//! `(v_{s-2c+1}, w_m)` to `(v_{s-2c}, w_1)`, where `|C| = 2c + 1` and `s` is
//! the block size.

use crate::error::{Error, Result};
use crate::graph::analysis::{is_complete, is_cycle_in_order, is_hamilton_path};
use crate::graph::degeneracy::back_degree;
use crate::graph::{build_family, cartesian_product, FamilySpec, Graph};

use super::{Annotations, Arc, BlockAnnotation, Orientation};

/// Shape of a single-block factor `G` for [`orient_thm24`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    Complete,
    OddCycle,
}

/// Shape of one block of a vertex partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    OddCycle,
    Complete,
}

struct Block {
    /// `G`-vertices in local order `v_1..v_s` (cyclic order for cycles).
    vertices: Vec<usize>,
    kind: BlockKind,
}

impl Block {
    /// Local positions of the oriented odd cycle `C`.
    fn cycle_positions(&self) -> std::ops::Range<usize> {
        match self.kind {
            BlockKind::OddCycle => 0..self.vertices.len(),
            BlockKind::Complete => self.vertices.len() - 3..self.vertices.len(),
        }
    }
}

fn check_block(g: &Graph, vertices: &[usize], allow_complete: bool) -> Result<BlockKind> {
    let sub = g.induced(vertices);
    let s = vertices.len();
    let order: Vec<usize> = (0..s).collect();
    if s % 2 == 1 && is_cycle_in_order(&sub, &order) {
        return Ok(BlockKind::OddCycle);
    }
    if allow_complete && s >= 3 && is_complete(&sub) {
        return Ok(BlockKind::Complete);
    }
    Err(Error::precondition(format!(
        "block {:?} does not induce an odd cycle in the listed cyclic order{}",
        vertices.iter().map(|v| v + 1).collect::<Vec<_>>(),
        if allow_complete { " or a complete graph on >= 3 vertices" } else { "" }
    )))
}

fn check_partition(g: &Graph, blocks: &[Vec<usize>]) -> Result<Vec<usize>> {
    let mut block_of = vec![usize::MAX; g.vertex_count()];
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            if v >= g.vertex_count() || block_of[v] != usize::MAX {
                return Err(Error::precondition(format!(
                    "vertex {} is out of range or in two blocks",
                    v + 1
                )));
            }
            block_of[v] = i;
        }
    }
    if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
        return Err(Error::precondition(format!("partition misses vertex {}", v + 1)));
    }
    Ok(block_of)
}

fn check_hamilton(h: &Graph, ham_path: &[usize]) -> Result<()> {
    if h.vertex_count() < 2 {
        return Err(Error::precondition("H needs at least two vertices"));
    }
    if !is_hamilton_path(h, ham_path) {
        return Err(Error::precondition("given sequence is not a Hamilton path of H"));
    }
    Ok(())
}

/// Core builder shared by all product constructions.
fn orient_blocks(g: &Graph, blocks: &[Block], h: &Graph, ham_path: &[usize]) -> Result<Orientation> {
    let nh = h.vertex_count();
    let m = ham_path.len();
    let idx = |gv: usize, hv: usize| gv * nh + hv;
    let mut pos_in_path = vec![0; nh];
    for (p, &w) in ham_path.iter().enumerate() {
        pos_in_path[w] = p;
    }
    let mut block_of = vec![usize::MAX; g.vertex_count()];
    for (b, block) in blocks.iter().enumerate() {
        for &v in &block.vertices {
            block_of[v] = b;
        }
    }

    let mut arcs: Vec<Arc> = Vec::new();
    let mut annotated = Vec::with_capacity(blocks.len());
    for block in blocks {
        let verts = &block.vertices;
        let cyc = block.cycle_positions();
        let c_len = cyc.len();
        let in_cycle = |i: usize| cyc.contains(&i);
        let mut block_arcs = Vec::new();
        let mut base_cycles = Vec::with_capacity(m);
        // copies of the block, one per layer in Hamilton order
        for &w in ham_path {
            let mut base = Vec::with_capacity(c_len);
            for i in cyc.clone() {
                let j = if i + 1 == cyc.end { cyc.start } else { i + 1 };
                base.push((idx(verts[i], w), idx(verts[j], w)));
            }
            for (i, &a) in verts.iter().enumerate() {
                for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                    if g.has_edge(a, b) && !(in_cycle(i) && in_cycle(j)) {
                        block_arcs.push((idx(a, w), idx(b, w)));
                    }
                }
            }
            block_arcs.extend(&base);
            base_cycles.push(base);
        }
        // copies of H
        for &v in verts {
            for &(x, y) in h.edges() {
                let (t, hd) = if pos_in_path[x] < pos_in_path[y] { (x, y) } else { (y, x) };
                block_arcs.push((idx(v, t), idx(v, hd)));
            }
        }
        let s = verts.len();
        let c = (c_len - 1) / 2;
        let special = (idx(verts[s - 2 * c], ham_path[m - 1]), idx(verts[s - 2 * c - 1], ham_path[0]));
        block_arcs.push(special);

        let mut vertices: Vec<usize> = verts
            .iter()
            .flat_map(|&v| (0..nh).map(move |w| idx(v, w)))
            .collect();
        vertices.sort_unstable();
        arcs.extend(&block_arcs);
        block_arcs.sort_unstable();
        annotated.push(BlockAnnotation {
            vertices,
            arcs: block_arcs,
            base_cycles,
            special_arc: Some(special),
        });
    }
    // connecting edges, earlier block to later block, in every layer
    for &(a, b) in g.edges() {
        if block_of[a] == block_of[b] {
            continue;
        }
        let (t, hd) = if block_of[a] < block_of[b] { (a, b) } else { (b, a) };
        for w in 0..nh {
            arcs.push((idx(t, w), idx(hd, w)));
        }
    }

    let product = cartesian_product(g, h)?;
    let d = Orientation::new(product.vertex_count(), arcs)?.with_labels(product.labels().to_vec());

    let annotations = if blocks.len() == 1 {
        let block = &blocks[0];
        let b = annotated.pop().expect("one block");
        let cyc = block.cycle_positions();
        let c_len = cyc.len();
        let mut level = Vec::new();
        for q in 0..m - 1 {
            for (r, i) in cyc.clone().enumerate() {
                let v = block.vertices[i];
                level.push(((idx(v, ham_path[q]), idx(v, ham_path[q + 1])), c_len * q + r));
            }
        }
        level.retain(|(a, _)| d.has_arc(a.0, a.1));
        Annotations {
            base_cycles: b.base_cycles,
            special_arc: b.special_arc,
            level_edge_index: level,
            blocks: Vec::new(),
        }
    } else {
        Annotations {
            blocks: annotated,
            ..Annotations::default()
        }
    };
    Ok(d.with_annotations(annotations))
}

/// Orientation `D` of `C_{2k+1} □ P_n` and its augmentation `D*` with
/// `e* = (v_2,w_n) -> (v_1,w_1)`.
///
/// Cycle copies run `v_i -> v_{i+1}` (wrapping), path arcs run
/// `w_j -> w_{j+1}`. Both results carry base-cycle and level-edge
/// annotations; only `D*` carries `e*`.
pub fn orient_thm21(k: usize, n: usize) -> Result<(Orientation, Orientation)> {
    if k < 1 {
        return Err(Error::precondition("k >= 1"));
    }
    if n < 2 {
        return Err(Error::precondition("n >= 2 (n = 1 is the bare odd cycle)"));
    }
    let g = build_family(&FamilySpec::Cycle(2 * k + 1))?;
    let h = build_family(&FamilySpec::Path(n))?;
    let path: Vec<usize> = (0..n).collect();
    let dstar = orient_thm24(&g, FactorKind::OddCycle, &h, &path)?;
    let mut ann = dstar.annotations().cloned().expect("annotated");
    let special = ann.special_arc.take().expect("e*");
    let d = dstar.without_arcs(&[special]).with_annotations(ann);
    Ok((d, dstar))
}

/// `G` complete (`K_n`, `n >= 3`) or an odd cycle in cyclic index order,
/// `H` with Hamilton path `ham_path`. Max indegree is at most
/// `Δ(G) - 1 + k` where `k` is the back-degree of `ham_path`.
pub fn orient_thm24(g: &Graph, kind: FactorKind, h: &Graph, ham_path: &[usize]) -> Result<Orientation> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(Error::precondition("G needs at least 3 vertices"));
    }
    let order: Vec<usize> = (0..n).collect();
    let block_kind = match kind {
        FactorKind::Complete if is_complete(g) => BlockKind::Complete,
        FactorKind::OddCycle if n % 2 == 1 && is_cycle_in_order(g, &order) => BlockKind::OddCycle,
        _ => {
            return Err(Error::precondition(format!(
                "G is not {} in index order",
                if kind == FactorKind::Complete { "complete" } else { "an odd cycle" }
            )))
        }
    };
    check_hamilton(h, ham_path)?;
    orient_blocks(g, &[Block { vertices: order, kind: block_kind }], h, ham_path)
}

/// Partition of `V(G)` into induced odd cycles (each listed in cyclic
/// order), product with `P_k`.
///
/// For `k = 1` the result is an acyclic orientation of `G`; for `k >= 2`
/// each block product carries its own `e*`.
pub fn orient_thm25(g: &Graph, blocks: &[Vec<usize>], k: usize) -> Result<Orientation> {
    if k < 1 {
        return Err(Error::precondition("k >= 1"));
    }
    let block_of = check_partition(g, blocks)?;
    for b in blocks {
        check_block(g, b, false)?;
    }
    if k == 1 {
        let mut local = vec![0; g.vertex_count()];
        for b in blocks {
            for (i, &v) in b.iter().enumerate() {
                local[v] = i;
            }
        }
        let arcs = g.edges().iter().map(|&(a, b)| {
            if block_of[a] != block_of[b] {
                if block_of[a] < block_of[b] { (a, b) } else { (b, a) }
            } else if local[a] < local[b] {
                (a, b)
            } else {
                (b, a)
            }
        });
        return Ok(Orientation::new(g.vertex_count(), arcs)?.with_labels(g.labels().to_vec()));
    }
    let h = build_family(&FamilySpec::Path(k))?;
    let path: Vec<usize> = (0..k).collect();
    let blocks: Vec<Block> = blocks
        .iter()
        .map(|b| Block {
            vertices: b.clone(),
            kind: BlockKind::OddCycle,
        })
        .collect();
    orient_blocks(g, &blocks, &h, &path)
}

/// Blocks that are odd cycles (cyclic order) or complete graphs on at
/// least three vertices, product with `H` along `ham_path`.
pub fn orient_thm26(g: &Graph, blocks: &[Vec<usize>], h: &Graph, ham_path: &[usize]) -> Result<Orientation> {
    check_partition(g, blocks)?;
    check_hamilton(h, ham_path)?;
    let blocks = blocks
        .iter()
        .map(|b| {
            Ok(Block {
                kind: check_block(g, b, true)?,
                vertices: b.clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    orient_blocks(g, &blocks, h, ham_path)
}

/// Per-block `(rho_i, alpha_i)` for a partition into odd cycles and
/// complete graphs: `rho_i` bounds the neighbours a block vertex has in
/// earlier blocks, `alpha_i = rho_i + 3` for odd cycles and
/// `rho_i + |S_i|` for complete blocks.
pub fn block_alphas(g: &Graph, blocks: &[Vec<usize>]) -> Result<Vec<(usize, usize)>> {
    let block_of = check_partition(g, blocks)?;
    blocks
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let kind = check_block(g, b, true)?;
            let rho = b
                .iter()
                .map(|&v| g.neighbors(v).iter().filter(|&&w| block_of[w] < i).count())
                .max()
                .unwrap_or(0);
            let alpha = match kind {
                BlockKind::OddCycle => rho + 3,
                BlockKind::Complete => rho + b.len(),
            };
            Ok((rho, alpha))
        })
        .collect()
}

/// Back-degree `k` of a Hamilton path: the most earlier path neighbours
/// any vertex has.
pub fn path_back_degree(h: &Graph, ham_path: &[usize]) -> usize {
    back_degree(h, ham_path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{edit_edges, graph_power, join, Family, VertexLabel};
    use crate::orientation::{degree_profile, indegree_by_label, is_acyclic, reverse, simple_cycles};

    fn fam(spec: FamilySpec) -> Graph {
        build_family(&spec).unwrap()
    }

    fn path(n: usize) -> Vec<usize> {
        (0..n).collect()
    }

    #[test]
    fn thm21_degrees_k1_n2() {
        let (d, dstar) = orient_thm21(1, 2).unwrap();
        assert_eq!(d.arc_count(), 9);
        assert_eq!(dstar.arc_count(), 10);
        // the first layer is entered only by its cycle arcs, later layers
        // also by a path arc; the case split is on the layer index
        for (label, indeg) in indegree_by_label(&d) {
            let expected = if label.ends_with(",P1)") { 1 } else { 2 };
            assert_eq!(indeg, expected, "{label}");
        }
        assert_eq!(degree_profile(&dstar).max_indegree, 2);
        // e* runs from (v2,w2) to (v1,w1)
        let ann = dstar.annotations().unwrap();
        let (t, h) = ann.special_arc.unwrap();
        assert_eq!(dstar.labels()[t].to_string(), "(C2,P2)");
        assert_eq!(dstar.labels()[h].to_string(), "(C1,P1)");
        assert_eq!(ann.base_cycles.len(), 2);
        assert!(!is_acyclic(&dstar));
        assert!(orient_thm21(1, 1).is_err());
    }

    #[test]
    fn thm21_level_edges() {
        let (_, dstar) = orient_thm21(1, 3).unwrap();
        let ann = dstar.annotations().unwrap();
        assert_eq!(ann.level_edge_index.len(), 6);
        for &((t, h), idx) in &ann.level_edge_index {
            let (q, r) = (idx / 3, idx % 3);
            assert_eq!(dstar.labels()[t].to_string(), format!("(C{},P{})", r + 1, q + 1));
            assert_eq!(dstar.labels()[h].to_string(), format!("(C{},P{})", r + 1, q + 2));
        }
    }

    #[test]
    fn thm21_projection_and_cycle_structure() {
        for k in 1..=3 {
            for n in 2..=4 {
                let (d, dstar) = orient_thm21(k, n).unwrap();
                let g = cartesian_product(&fam(FamilySpec::Cycle(2 * k + 1)), &fam(FamilySpec::Path(n))).unwrap();
                assert!(d.orients(&g));
                let e = dstar.annotations().unwrap().special_arc.unwrap();
                let gstar = edit_edges(&g, &[e], &[]).unwrap();
                assert!(dstar.orients(&gstar));
                assert_eq!(degree_profile(&dstar).max_indegree, 2);

                let ann = dstar.annotations().unwrap();
                let e_idx = dstar.arc_index(e).unwrap();
                let base: Vec<Vec<usize>> = ann
                    .base_cycles
                    .iter()
                    .map(|c| {
                        let mut v: Vec<usize> = c.iter().map(|&a| dstar.arc_index(a).unwrap()).collect();
                        v.sort_unstable();
                        v
                    })
                    .collect();
                for cycle in simple_cycles(&dstar, 100_000).unwrap() {
                    assert!(base.contains(&cycle) || cycle.contains(&e_idx));
                }
            }
        }
    }

    #[test]
    fn thm24_odd_cycle_matches_thm21() {
        let (_, dstar) = orient_thm21(2, 3).unwrap();
        let d24 = orient_thm24(&fam(FamilySpec::Cycle(5)), FactorKind::OddCycle, &fam(FamilySpec::Path(3)), &path(3)).unwrap();
        assert_eq!(d24.arcs(), dstar.arcs());
    }

    #[test]
    fn thm24_complete_degree_bound() {
        let k4 = fam(FamilySpec::Complete(4));
        let d = orient_thm24(&k4, FactorKind::Complete, &fam(FamilySpec::Path(2)), &path(2)).unwrap();
        assert!(degree_profile(&d).max_indegree <= 3);
        let k3 = fam(FamilySpec::Complete(3));
        let d = orient_thm24(&k3, FactorKind::Complete, &fam(FamilySpec::Path(3)), &path(3)).unwrap();
        // simple digraph: no pair carries arcs both ways
        assert!(d.arcs().iter().all(|&(t, h)| !d.has_arc(h, t)));
        let e = d.annotations().unwrap().special_arc.unwrap();
        assert_eq!(d.labels()[e.0].to_string(), "(K2,P3)");
        assert_eq!(d.labels()[e.1].to_string(), "(K1,P1)");
    }

    #[test]
    fn thm24_degree_bound_on_powers_of_paths() {
        let c = fam(FamilySpec::Cycle(3));
        for n in 2..=5 {
            for r in 1..n {
                let h = graph_power(&fam(FamilySpec::Path(n)), r).unwrap();
                let d = orient_thm24(&c, FactorKind::OddCycle, &h, &path(n)).unwrap();
                let k = path_back_degree(&h, &path(n));
                assert_eq!(k, r);
                assert!(degree_profile(&d).max_indegree <= c.max_degree() - 1 + k);
            }
        }
    }

    #[test]
    fn thm24_preconditions() {
        let c4 = fam(FamilySpec::Cycle(4));
        assert!(orient_thm24(&c4, FactorKind::OddCycle, &fam(FamilySpec::Path(2)), &path(2)).is_err());
        let k4 = fam(FamilySpec::Complete(4));
        assert!(orient_thm24(&k4, FactorKind::Complete, &fam(FamilySpec::Path(3)), &[0, 2, 1]).is_err());
        assert!(orient_thm24(&k4, FactorKind::Complete, &fam(FamilySpec::Path(1)), &[0]).is_err());
    }

    fn two_triangles_rho2() -> (Graph, Vec<Vec<usize>>) {
        // second triangle vertices each see two vertices of the first
        let cross = [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2)];
        let g = join(&fam(FamilySpec::Cycle(3)), &fam(FamilySpec::Cycle(3)), Some(&cross)).unwrap();
        (g, vec![vec![0, 1, 2], vec![3, 4, 5]])
    }

    #[test]
    fn thm25_k1_is_acyclic() {
        let (g, blocks) = two_triangles_rho2();
        let d = orient_thm25(&g, &blocks, 1).unwrap();
        assert!(d.orients(&g));
        assert!(is_acyclic(&d));
        assert!(degree_profile(&d).max_indegree <= 2 + 2);
    }

    #[test]
    fn thm25_single_block_is_thm21() {
        let c5 = fam(FamilySpec::Cycle(5));
        let d = orient_thm25(&c5, &[path(5)], 3).unwrap();
        let (_, dstar) = orient_thm21(2, 3).unwrap();
        assert_eq!(d.arcs(), dstar.arcs());
    }

    #[test]
    fn thm25_components_after_dropping_connecting_arcs() {
        let (g, blocks) = two_triangles_rho2();
        let d = orient_thm25(&g, &blocks, 2).unwrap();
        assert!(degree_profile(&d).max_indegree <= 4);
        let ann = d.annotations().unwrap();
        let inside: Vec<Arc> = ann.blocks.iter().flat_map(|b| b.arcs.iter().copied()).collect();
        let connecting: Vec<Arc> = d.arcs().iter().copied().filter(|a| !inside.contains(a)).collect();
        assert_eq!(connecting.len(), 6 * 2);
        let rest = d.without_arcs(&connecting);
        let comps = rest.weak_components();
        let expected: Vec<Vec<usize>> = ann.blocks.iter().map(|b| b.vertices.clone()).collect();
        assert_eq!(comps, expected);
    }

    #[test]
    fn thm25_rejects_bad_blocks() {
        let (g, _) = two_triangles_rho2();
        assert!(orient_thm25(&g, &[vec![0, 1, 2]], 2).is_err());
        assert!(orient_thm25(&g, &[vec![0, 1, 2, 3, 4, 5]], 2).is_err());
        let c5 = fam(FamilySpec::Cycle(5));
        assert!(orient_thm25(&c5, &[vec![0, 2, 1, 3, 4]], 2).is_err());
    }

    #[test]
    fn thm26_join_bound() {
        let g = join(&fam(FamilySpec::Complete(3)), &fam(FamilySpec::Cycle(5)), None).unwrap();
        let blocks = vec![vec![0, 1, 2], vec![3, 4, 5, 6, 7]];
        let alphas = block_alphas(&g, &blocks).unwrap();
        assert_eq!(alphas, vec![(0, 3), (3, 6)]);
        let h = fam(FamilySpec::Path(2));
        let d = orient_thm26(&g, &blocks, &h, &path(2)).unwrap();
        assert!(degree_profile(&d).max_indegree <= 6 + 1 - 2);
        let gh = cartesian_product(&g, &h).unwrap();
        let specials: Vec<Arc> = d.annotations().unwrap().blocks.iter().filter_map(|b| b.special_arc).collect();
        assert!(d.orients(&edit_edges(&gh, &specials, &[]).unwrap()));
    }

    #[test]
    fn thm26_single_block_is_thm24() {
        let k4 = fam(FamilySpec::Complete(4));
        let h = fam(FamilySpec::Path(3));
        let a = orient_thm26(&k4, &[path(4)], &h, &path(3)).unwrap();
        let b = orient_thm24(&k4, FactorKind::Complete, &h, &path(3)).unwrap();
        assert_eq!(a.arcs(), b.arcs());
        assert_eq!(a.annotations().unwrap().base_cycles, b.annotations().unwrap().base_cycles);
    }

    #[test]
    fn reversal_keeps_annotations_consistent() {
        let (_, dstar) = orient_thm21(1, 3).unwrap();
        let r = reverse(&dstar);
        let e = r.annotations().unwrap().special_arc.unwrap();
        assert!(r.has_arc(e.0, e.1));
        assert_eq!(r.labels()[e.1], VertexLabel::pair(VertexLabel::atom(Family::C, 2), VertexLabel::atom(Family::P, 3)));
    }
}
