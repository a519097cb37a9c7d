use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::graph::{degeneracy_order, Graph};

use super::chromatic::chromatic_number;

/// Per-vertex color lists; each list is sorted, duplicate-free, nonempty
/// and holds positive colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct ListAssignment {
    lists: Vec<Vec<u32>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<u32>>) -> Result<Self> {
        let mut lists = lists;
        for (v, l) in lists.iter_mut().enumerate() {
            l.sort_unstable();
            l.dedup();
            if l.is_empty() {
                return Err(Error::precondition(format!("vertex {v} has an empty list")));
            }
            if l[0] == 0 {
                return Err(Error::precondition("colors are positive integers"));
            }
        }
        Ok(ListAssignment { lists })
    }

    /// Every vertex gets `{1, ..., k}`.
    pub fn uniform(n: usize, k: usize) -> Self {
        ListAssignment {
            lists: vec![(1..=k as u32).collect(); n],
        }
    }

    pub fn lists(&self) -> &[Vec<u32>] {
        &self.lists
    }

    pub fn list(&self, v: usize) -> &[u32] {
        &self.lists[v]
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }
}

impl TryFrom<Vec<Vec<u32>>> for ListAssignment {
    type Error = Error;

    fn try_from(lists: Vec<Vec<u32>>) -> Result<Self> {
        ListAssignment::new(lists)
    }
}

impl From<ListAssignment> for Vec<Vec<u32>> {
    fn from(l: ListAssignment) -> Self {
        l.lists
    }
}

struct Colorer<'a> {
    g: &'a Graph,
    lists: &'a [Vec<u32>],
    color: Vec<u32>,
}

const UNSET: u32 = 0;

impl Colorer<'_> {
    fn available(&self, v: usize) -> impl Iterator<Item = u32> + '_ {
        self.lists[v]
            .iter()
            .copied()
            .filter(move |&c| self.g.neighbors(v).iter().all(|&w| self.color[w] != c))
    }

    /// Uncolored vertex with the fewest available colors.
    fn pick(&self) -> Option<usize> {
        (0..self.g.vertex_count())
            .filter(|&v| self.color[v] == UNSET)
            .min_by_key(|&v| self.available(v).count())
    }

    fn solve(&mut self) -> bool {
        let Some(v) = self.pick() else { return true };
        let options: Vec<u32> = self.available(v).collect();
        for c in options {
            self.color[v] = c;
            if self.solve() {
                return true;
            }
        }
        self.color[v] = UNSET;
        false
    }

    fn count(&mut self, cap: u64) -> u64 {
        let Some(v) = self.pick() else { return 1 };
        let options: Vec<u32> = self.available(v).collect();
        let mut total = 0;
        for c in options {
            self.color[v] = c;
            total += self.count(cap - total);
            if total >= cap {
                break;
            }
        }
        self.color[v] = UNSET;
        total
    }
}

fn colorer<'a>(g: &'a Graph, lists: &'a [Vec<u32>]) -> Colorer<'a> {
    assert_eq!(lists.len(), g.vertex_count(), "one list per vertex");
    Colorer {
        g,
        lists,
        color: vec![UNSET; g.vertex_count()],
    }
}

/// A proper coloring with `f(v) ∈ L(v)`, if one exists.
pub fn check_list_colorable(g: &Graph, lists: &ListAssignment) -> Option<Vec<u32>> {
    let mut c = colorer(g, lists.lists());
    c.solve().then_some(c.color)
}

/// Number of proper L-colorings, counting stops at `cap`.
pub fn count_list_colorings(g: &Graph, lists: &ListAssignment, cap: u64) -> u64 {
    colorer(g, lists.lists()).count(cap.max(1))
}

/// Vertices of the k-core: repeatedly drop vertices with fewer than `k`
/// remaining neighbours. Dropped vertices can always be colored last from
/// any k-list, so choosability is decided on the core.
pub fn k_core(g: &Graph, k: usize) -> Vec<usize> {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..n {
            if alive[v] && deg[v] < k {
                alive[v] = false;
                changed = true;
                for &w in g.neighbors(v) {
                    deg[w] -= 1;
                }
            }
        }
    }
    (0..n).filter(|&v| alive[v]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Choosability {
    pub choosable: bool,
    /// The first uncolorable assignment in canonical order, over all of `G`.
    pub witness: Option<ListAssignment>,
    /// Canonical assignments of the core that were tested.
    pub assignments_checked: u64,
}

fn combinations(m: u32, s: usize, start: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() == s {
        out.push(cur.clone());
        return;
    }
    for c in start..=m {
        if m - c + 1 < (s - cur.len()) as u32 {
            break;
        }
        cur.push(c);
        combinations(m, s, c + 1, cur, out);
        cur.pop();
    }
}

/// Canonical next lists given that colors `1..=m` are in use: any `s` old
/// colors plus the `k - s` smallest unused ones.
fn next_lists(k: usize, m: u32) -> Vec<(Vec<u32>, u32)> {
    let mut out = Vec::new();
    for s in 0..=k.min(m as usize) {
        let mut olds = Vec::new();
        combinations(m, s, 1, &mut Vec::new(), &mut olds);
        let fresh = (k - s) as u32;
        for mut l in olds {
            l.extend(m + 1..=m + fresh);
            out.push((l, m + fresh));
        }
    }
    out
}

struct Enumerator<'a> {
    g: &'a Graph,
    k: usize,
    checked: u64,
}

impl Enumerator<'_> {
    fn extend(&mut self, lists: &mut Vec<Vec<u32>>, m: u32) -> Option<Vec<Vec<u32>>> {
        if lists.len() == self.g.vertex_count() {
            self.checked += 1;
            let mut c = colorer(self.g, lists);
            return (!c.solve()).then(|| lists.clone());
        }
        for (l, m2) in next_lists(self.k, m) {
            lists.push(l);
            if let Some(w) = self.extend(lists, m2) {
                return Some(w);
            }
            lists.pop();
        }
        None
    }
}

/// Decides k-choosability by enumerating every k-list assignment of the
/// k-core up to color renaming (colors introduced in first-use order from
/// the universe `1..=k·n`).
pub fn is_k_choosable(g: &Graph, k: usize, limits: &Limits) -> Result<Choosability> {
    if k == 0 {
        return Err(Error::precondition("k must be positive"));
    }
    let core = k_core(g, k);
    if core.is_empty() {
        return Ok(Choosability {
            choosable: true,
            witness: None,
            assignments_checked: 0,
        });
    }
    let limit = limits.choosable_vertex_limit(k);
    if core.len() > limit {
        return Err(Error::resource(
            "is_k_choosable",
            format!("the {k}-core has {} vertices, above the limit of {limit}", core.len()),
            "use the Alon-Tarsi number as an upper bound or the 2-choosability characterization",
        ));
    }
    let sub = g.induced(&core);

    // split the first two levels into independent tasks
    let mut prefixes = vec![(Vec::<Vec<u32>>::new(), 0u32)];
    for _ in 0..2.min(core.len()) {
        prefixes = prefixes
            .into_iter()
            .flat_map(|(p, m)| {
                next_lists(k, m).into_iter().map(move |(l, m2)| {
                    let mut q = p.clone();
                    q.push(l);
                    (q, m2)
                })
            })
            .collect();
    }
    let results: Vec<(Option<Vec<Vec<u32>>>, u64)> = prefixes
        .into_par_iter()
        .map(|(mut lists, m)| {
            let mut e = Enumerator { g: &sub, k, checked: 0 };
            let w = e.extend(&mut lists, m);
            (w, e.checked)
        })
        .collect();
    let checked = results.iter().map(|r| r.1).sum();
    let witness = results.into_iter().find_map(|r| r.0).map(|core_lists| {
        let mut full = ListAssignment::uniform(g.vertex_count(), k).lists;
        for (i, &v) in core.iter().enumerate() {
            full[v] = core_lists[i].clone();
        }
        ListAssignment { lists: full }
    });
    Ok(Choosability {
        choosable: witness.is_none(),
        witness,
        assignments_checked: checked,
    })
}

/// χ_ℓ by brute force: the least k in `χ..col` that is choosable, else
/// `col` (every graph is col-choosable by greedy coloring).
pub fn list_chromatic_number(g: &Graph, limits: &Limits) -> Result<usize> {
    let col = degeneracy_order(g).1;
    for k in chromatic_number(g).max(1)..col {
        if is_k_choosable(g, k, limits)?.choosable {
            return Ok(k);
        }
    }
    Ok(col)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadSearch {
    pub witness: Option<ListAssignment>,
    pub evaluations: u64,
    pub restarts: u64,
}

const COUNT_CAP: u64 = 20_000;

fn random_list(rng: &mut ChaCha8Rng, palette: u32, k: usize) -> Vec<u32> {
    let mut all: Vec<u32> = (1..=palette).collect();
    all.shuffle(rng);
    all.truncate(k);
    all.sort_unstable();
    all
}

fn restart(g: &Graph, k: usize, budget: u64, seed: u64, stream: u64) -> (Option<ListAssignment>, u64) {
    let n = g.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let palette = (k + 1 + rng.gen_range(0..=k)) as u32;
    let mut lists = ListAssignment {
        lists: (0..n).map(|_| random_list(&mut rng, palette, k)).collect(),
    };
    let mut score = count_list_colorings(g, &lists, COUNT_CAP);
    let mut evals = 1;
    while score > 0 && evals < budget {
        let v = rng.gen_range(0..n);
        let mut cand = lists.clone();
        let slot = rng.gen_range(0..k);
        let fresh = rng.gen_range(1..=palette);
        if cand.lists[v].contains(&fresh) {
            continue;
        }
        cand.lists[v][slot] = fresh;
        cand.lists[v].sort_unstable();
        let s = count_list_colorings(g, &cand, COUNT_CAP);
        evals += 1;
        if s <= score || rng.gen_bool(0.02) {
            lists = cand;
            score = s;
        }
    }
    ((score == 0).then_some(lists), evals)
}

/// Best-effort search for an uncolorable k-list assignment: identical
/// lists first, then seeded random restarts with local search minimising
/// the number of L-colorings. A returned witness has been re-verified with
/// [`check_list_colorable`]; `None` proves nothing.
pub fn find_bad_assignment(g: &Graph, k: usize, budget: u64, seed: u64) -> BadSearch {
    let n = g.vertex_count();
    if n == 0 || k == 0 {
        return BadSearch {
            witness: None,
            evaluations: 0,
            restarts: 0,
        };
    }
    let same = ListAssignment::uniform(n, k);
    if check_list_colorable(g, &same).is_none() {
        return BadSearch {
            witness: Some(same),
            evaluations: 1,
            restarts: 0,
        };
    }
    let restarts = (budget / 256).clamp(1, 64);
    let per = (budget / restarts).max(1);
    let results: Vec<(Option<ListAssignment>, u64)> = (0..restarts)
        .into_par_iter()
        .map(|r| restart(g, k, per, seed, r))
        .collect();
    let evaluations = 1 + results.iter().map(|r| r.1).sum::<u64>();
    let witness = results
        .into_iter()
        .find_map(|r| r.0)
        .filter(|w| check_list_colorable(g, w).is_none());
    BadSearch {
        witness,
        evaluations,
        restarts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, FamilySpec};

    fn fam(spec: FamilySpec) -> Graph {
        build_family(&spec).unwrap()
    }

    #[test]
    fn canonical_lists_quotient_by_renaming() {
        // first vertex: {1,2}; second: {1,2}, {1,3}, {2,3}, {3,4}
        assert_eq!(next_lists(2, 0).len(), 1);
        assert_eq!(next_lists(2, 2).len(), 4);
        assert_eq!(next_lists(3, 3).len(), 8);
    }

    #[test]
    fn spec_choosability_examples() {
        let l = Limits::default();
        assert!(is_k_choosable(&fam(FamilySpec::Cycle(4)), 2, &l).unwrap().choosable);
        let c5 = is_k_choosable(&fam(FamilySpec::Cycle(5)), 2, &l).unwrap();
        assert!(!c5.choosable);
        let w = c5.witness.unwrap();
        assert!(w.lists().iter().all(|x| x.len() == 2));
        assert!(check_list_colorable(&fam(FamilySpec::Cycle(5)), &w).is_none());
        // seven vertices: above the default limit
        let wide = Limits {
            choosable_k2_vertices: 7,
            ..l
        };
        assert!(is_k_choosable(&fam(FamilySpec::Theta(vec![2, 2, 4])), 2, &wide).unwrap().choosable);
    }

    #[test]
    fn k24_is_not_two_choosable() {
        // K_{2,4} is not 2-choosable: lists {1,2},{3,4} on one side and the
        // four transversals on the other
        let k24 = Graph::with_named_vertices(6, (0..2).flat_map(|a| (2..6).map(move |b| (a, b)))).unwrap();
        let r = is_k_choosable(&k24, 2, &Limits::default()).unwrap();
        assert!(!r.choosable);
        assert!(check_list_colorable(&k24, r.witness.as_ref().unwrap()).is_none());
    }

    #[test]
    fn limits_are_enforced() {
        let k5 = fam(FamilySpec::Complete(5));
        assert!(is_k_choosable(&k5, 4, &Limits::default()).unwrap_err().is_resource());
        // the core shortcut needs no enumeration
        assert!(is_k_choosable(&k5, 5, &Limits::default()).unwrap().choosable);
    }

    #[test]
    fn colorability_examples() {
        let g = fam(FamilySpec::Cycle(7));
        assert!(check_list_colorable(&g, &ListAssignment::uniform(7, 3)).is_some());
        assert!(check_list_colorable(&g, &ListAssignment::uniform(7, 2)).is_none());
        let c4 = fam(FamilySpec::Cycle(4));
        assert_eq!(count_list_colorings(&c4, &ListAssignment::uniform(4, 2), 100), 2);
        assert_eq!(count_list_colorings(&c4, &ListAssignment::uniform(4, 3), 100), 18);
        assert_eq!(count_list_colorings(&c4, &ListAssignment::uniform(4, 3), 5), 5);
    }

    #[test]
    fn degree_plus_one_lists_always_color() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = fam(FamilySpec::Complete(5));
        for _ in 0..50 {
            let lists = (0..5).map(|v| random_list(&mut rng, 9, g.degree(v) + 1)).collect();
            let l = ListAssignment::new(lists).unwrap();
            let c = check_list_colorable(&g, &l).unwrap();
            assert!((0..5).all(|v| l.list(v).contains(&c[v])));
        }
    }

    #[test]
    fn bad_assignment_search() {
        let c5 = find_bad_assignment(&fam(FamilySpec::Cycle(5)), 2, 100, 1);
        assert_eq!(c5.witness, Some(ListAssignment::uniform(5, 2)));
        let c4 = find_bad_assignment(&fam(FamilySpec::Cycle(4)), 2, 2000, 1);
        assert!(c4.witness.is_none());
        let k24 = Graph::with_named_vertices(6, (0..2).flat_map(|a| (2..6).map(move |b| (a, b)))).unwrap();
        let a = find_bad_assignment(&k24, 2, 4000, 9);
        let b = find_bad_assignment(&k24, 2, 4000, 9);
        assert_eq!(a, b);
    }

    #[test]
    fn list_chromatic_numbers() {
        let l = Limits::default();
        assert_eq!(list_chromatic_number(&fam(FamilySpec::Cycle(6)), &l).unwrap(), 2);
        assert_eq!(list_chromatic_number(&fam(FamilySpec::Cycle(5)), &l).unwrap(), 3);
        assert_eq!(list_chromatic_number(&fam(FamilySpec::Complete(4)), &l).unwrap(), 4);
        let k24 = Graph::with_named_vertices(6, (0..2).flat_map(|a| (2..6).map(move |b| (a, b)))).unwrap();
        assert_eq!(list_chromatic_number(&k24, &l).unwrap(), 3);
    }
}
