//! Square spreads (n disjoint n-cliques on n^2 vertices) and clique
//! machinery: detection, backtracking search with a node budget, removal,
//! and the cross-product spread family of the Brouwer–Pasechnik graphs.

use crate::error::Error;
use crate::gf::{Field, Vec3};
use crate::graph::Graph;
use crate::scheme::{drg_array, DrgArray};
use crate::srg::{classify_type, exact_sqrt, srg_params, SrgOutcome, SrgParams, SrgType};

/// A partition of n^2 vertices into n cliques of order n, stored as a
/// vertex -> clique index map. Cliques are numbered by least vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spread {
    n: usize,
    assignment: Vec<usize>,
}

impl Spread {
    pub fn from_assignment(n: usize, assignment: Vec<usize>) -> Result<Spread, Error> {
        if assignment.len() != n * n {
            return Err(Error::BadParameter(format!(
                "assignment covers {} vertices, expected {}",
                assignment.len(),
                n * n
            )));
        }
        let mut sizes = vec![0usize; n];
        for &c in &assignment {
            if c >= n {
                return Err(Error::BadParameter(format!("clique index {c} out of range")));
            }
            sizes[c] += 1;
        }
        if sizes.iter().any(|&s| s != n) {
            return Err(Error::BadParameter("cliques must all have order n".into()));
        }
        let mut spread = Spread { n, assignment };
        spread.canonicalize();
        Ok(spread)
    }

    pub fn from_cliques(n: usize, cliques: &[Vec<usize>]) -> Result<Spread, Error> {
        if cliques.len() != n {
            return Err(Error::BadParameter(format!("{} cliques, expected {n}", cliques.len())));
        }
        let mut assignment = vec![usize::MAX; n * n];
        for (ci, clique) in cliques.iter().enumerate() {
            for &x in clique {
                if x >= n * n || assignment[x] != usize::MAX {
                    return Err(Error::BadParameter(format!(
                        "vertex {x} out of range or covered twice"
                    )));
                }
                assignment[x] = ci;
            }
        }
        if assignment.iter().any(|&c| c == usize::MAX) {
            return Err(Error::BadParameter("cliques do not cover all vertices".into()));
        }
        Spread::from_assignment(n, assignment)
    }

    fn canonicalize(&mut self) {
        let mut relabel = vec![usize::MAX; self.n];
        let mut next = 0;
        for &c in &self.assignment {
            if relabel[c] == usize::MAX {
                relabel[c] = next;
                next += 1;
            }
        }
        for c in self.assignment.iter_mut() {
            *c = relabel[*c];
        }
    }

    pub fn clique_order(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.n * self.n
    }

    pub fn clique_of(&self, x: usize) -> usize {
        self.assignment[x]
    }

    pub fn cliques(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::with_capacity(self.n); self.n];
        for (x, &c) in self.assignment.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    /// The within-clique edges as a graph.
    pub fn edge_graph(&self) -> Graph {
        let v = self.vertex_count();
        let mut g = Graph::new(v);
        for x in 0..v {
            for y in (x + 1)..v {
                if self.assignment[x] == self.assignment[y] {
                    g.set_edge(x, y, true);
                }
            }
        }
        g
    }
}

/// Outcome of a budgeted search: a witness, a proof of nonexistence
/// (search space exhausted), or budget exhaustion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    NoneExists,
    BudgetExhausted { nodes: u64 },
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }
}

pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

/// Is g exactly a disjoint union of n cliques of order n? (The edge set
/// must equal the within-clique pairs.)
pub fn is_square_spread(g: &Graph) -> Result<Option<Spread>, Error> {
    let v = g.vertex_count();
    let n = exact_sqrt(v as u64).ok_or(Error::NotSquareVertexCount(v))? as usize;
    let comps = g.components();
    if comps.len() != n {
        return Ok(None);
    }
    for comp in &comps {
        if comp.len() != n || !g.is_clique(comp) {
            return Ok(None);
        }
    }
    let mut assignment = vec![0usize; v];
    for (ci, comp) in comps.iter().enumerate() {
        for &x in comp {
            assignment[x] = ci;
        }
    }
    Ok(Some(Spread::from_assignment(n, assignment)?))
}

/// Backtracking exact-cover search for n disjoint n-cliques inside g
/// (g may have more edges than the spread). The branch vertex is always
/// the least uncovered vertex and candidate cliques are enumerated in
/// lexicographic order, so the witness is deterministic.
pub fn find_spread(g: &Graph, budget: u64) -> Result<SearchOutcome<Spread>, Error> {
    let v = g.vertex_count();
    let n = exact_sqrt(v as u64).ok_or(Error::NotSquareVertexCount(v))? as usize;
    let mut state = SpreadSearch {
        g,
        n,
        covered: vec![false; v],
        chosen: Vec::with_capacity(n),
        nodes: 0,
        budget,
    };
    match state.place_next() {
        Placed::Complete(cliques) => Ok(SearchOutcome::Found(Spread::from_cliques(n, &cliques)?)),
        Placed::Exhausted => Ok(SearchOutcome::BudgetExhausted { nodes: state.nodes }),
        Placed::Fail => Ok(SearchOutcome::NoneExists),
    }
}

enum Placed {
    Complete(Vec<Vec<usize>>),
    Fail,
    Exhausted,
}

struct SpreadSearch<'a> {
    g: &'a Graph,
    n: usize,
    covered: Vec<bool>,
    chosen: Vec<Vec<usize>>,
    nodes: u64,
    budget: u64,
}

impl SpreadSearch<'_> {
    fn place_next(&mut self) -> Placed {
        let Some(u) = self.covered.iter().position(|&c| !c) else {
            return Placed::Complete(self.chosen.clone());
        };
        let mut clique = vec![u];
        self.extend_clique(u, &mut clique)
    }

    /// Enumerate n-cliques of g containing `clique`, all vertices uncovered
    /// and greater than the last member, in lexicographic order; for each,
    /// cover it and recurse on the next least uncovered vertex.
    fn extend_clique(&mut self, _anchor: usize, clique: &mut Vec<usize>) -> Placed {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Placed::Exhausted;
        }
        if clique.len() == self.n {
            for &x in clique.iter() {
                self.covered[x] = true;
            }
            self.chosen.push(clique.clone());
            let result = self.place_next();
            self.chosen.pop();
            for &x in clique.iter() {
                self.covered[x] = false;
            }
            return match result {
                Placed::Fail => Placed::Fail,
                done => done,
            };
        }
        let last = *clique.last().unwrap();
        let need = self.n - clique.len();
        let candidates: Vec<usize> = self
            .g
            .neighbors(last)
            .into_iter()
            .filter(|&x| x > last && !self.covered[x] && clique.iter().all(|&c| self.g.has_edge(c, x)))
            .collect();
        if candidates.len() < need {
            return Placed::Fail;
        }
        for (idx, &x) in candidates.iter().enumerate() {
            if candidates.len() - idx < need {
                break;
            }
            clique.push(x);
            match self.extend_clique(_anchor, clique) {
                Placed::Fail => {}
                done => {
                    clique.pop();
                    return done;
                }
            }
            clique.pop();
        }
        Placed::Fail
    }
}

/// What happened to the graph when a spread was removed.
#[derive(Debug, Clone)]
pub enum RemovalNote {
    /// the host was strictly of Latin square type, so the result must be too
    LatinSquarePreserved { before: SrgType, after: SrgType },
    /// host strongly regular, result no longer strongly regular but
    /// distance-regular: the classical spread-removal situation
    DistanceRegularAfter { array: DrgArray },
    /// host and result both strongly regular (without the LS typing)
    StillStronglyRegular { after: SrgParams },
    /// nothing recognized
    Unclassified,
}

impl std::fmt::Display for RemovalNote {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RemovalNote::LatinSquarePreserved { before, after } => {
                write!(f, "Latin square type preserved: {before} -> {after}")
            }
            RemovalNote::DistanceRegularAfter { array } => {
                write!(f, "residual graph is distance-regular with array {array}")
            }
            RemovalNote::StillStronglyRegular { after } => {
                write!(f, "residual graph is strongly regular {after}")
            }
            RemovalNote::Unclassified => write!(f, "residual graph not classified"),
        }
    }
}

/// Remove the spread's within-clique edges from g. If g was strictly of
/// Latin square type the result must still be (that failing would falsify
/// the removal lemma); if g was strongly regular and the result is not,
/// the residual graph is checked for distance regularity.
pub fn remove_spread(g: &Graph, spread: &Spread) -> Result<(Graph, RemovalNote), Error> {
    if g.vertex_count() != spread.vertex_count() {
        return Err(Error::VertexCountMismatch(g.vertex_count(), spread.vertex_count()));
    }
    let spread_edges = spread.edge_graph();
    if !spread_edges.is_subgraph_of(g) {
        let missing = spread_edges
            .edges()
            .into_iter()
            .find(|&(x, y)| !g.has_edge(x, y))
            .expect("some spread edge is missing");
        return Err(Error::SpreadNotContained { x: missing.0, y: missing.1 });
    }
    let residual = g.difference(&spread_edges);

    let host_type = match srg_params(g) {
        Ok(SrgOutcome::Srg(p)) => Some((p, classify_type(&p))),
        _ => None,
    };
    let residual_srg = match srg_params(&residual) {
        Ok(SrgOutcome::Srg(p)) => Some(p),
        _ => None,
    };
    let note = match (host_type, residual_srg) {
        (Some((_, SrgType::StrictlyLatinSquare { n, t })), after) => {
            let before = SrgType::StrictlyLatinSquare { n, t };
            let after_type = after.map(|p| classify_type(&p));
            match after_type {
                Some(at @ SrgType::StrictlyLatinSquare { .. }) => {
                    RemovalNote::LatinSquarePreserved { before, after: at }
                }
                _ => {
                    return Err(Error::TheoremFalsified(format!(
                        "removing a square spread from {before} did not stay of Latin square type"
                    )))
                }
            }
        }
        (Some(_), Some(after)) => RemovalNote::StillStronglyRegular { after },
        (Some(_), None) => match drg_array(&residual)? {
            Some(array) => RemovalNote::DistanceRegularAfter { array },
            None => RemovalNote::Unclassified,
        },
        (None, _) => RemovalNote::Unclassified,
    };
    Ok((residual, note))
}

/// Backtracking search for a clique of exactly `size` vertices, pruned by
/// a greedy-coloring bound. Deterministic: candidates are explored in
/// ascending vertex order.
pub fn find_clique(g: &Graph, size: usize, budget: u64) -> Result<SearchOutcome<Vec<usize>>, Error> {
    if size == 0 {
        return Ok(SearchOutcome::Found(vec![]));
    }
    let mut search = CliqueSearch { g, size, nodes: 0, budget };
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    let mut clique = Vec::with_capacity(size);
    match search.expand(&mut clique, &all) {
        Some(found) => Ok(SearchOutcome::Found(found)),
        None if search.nodes > search.budget => {
            Ok(SearchOutcome::BudgetExhausted { nodes: search.nodes })
        }
        None => Ok(SearchOutcome::NoneExists),
    }
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    size: usize,
    nodes: u64,
    budget: u64,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, clique: &mut Vec<usize>, candidates: &[usize]) -> Option<Vec<usize>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        if clique.len() == self.size {
            return Some(clique.clone());
        }
        let need = self.size - clique.len();
        if candidates.len() < need || self.greedy_color_count(candidates) < need {
            return None;
        }
        for (idx, &x) in candidates.iter().enumerate() {
            if candidates.len() - idx < need {
                break;
            }
            let next: Vec<usize> = candidates[idx + 1..]
                .iter()
                .copied()
                .filter(|&y| self.g.has_edge(x, y))
                .collect();
            clique.push(x);
            if let Some(found) = self.expand(clique, &next) {
                return Some(found);
            }
            clique.pop();
            if self.nodes > self.budget {
                return None;
            }
        }
        None
    }

    /// Greedy proper coloring of the candidate set; a clique cannot exceed
    /// the number of colors used.
    fn greedy_color_count(&self, candidates: &[usize]) -> usize {
        let mut color_classes: Vec<Vec<usize>> = Vec::new();
        for &x in candidates {
            let slot = color_classes
                .iter_mut()
                .find(|class| class.iter().all(|&y| !self.g.has_edge(x, y)));
            match slot {
                Some(class) => class.push(x),
                None => color_classes.push(vec![x]),
            }
        }
        color_classes.len()
    }
}

/// The spread family of a distance-3 graph of Brouwer–Pasechnik type on
/// W x W, W = GF(q)^3. Given a clique of the graph with pairwise distinct
/// first coordinates (so it is the graph of a bijection w -> phi(w)), the
/// family consists of the constant-first-coordinate spread plus, for every
/// nonzero alpha, the cliques {(w, alpha*phi(w) + y) : w} over all offsets
/// y. Cliques from different spreads meet in exactly one vertex.
pub fn bp_spread_family(
    field: &Field,
    host: &Graph,
    clique: &[usize],
) -> Result<Vec<Spread>, Error> {
    let q = field.order();
    let w_count = q * q * q;
    let v = (w_count * w_count) as usize;
    if host.vertex_count() != v {
        return Err(Error::VertexCountMismatch(host.vertex_count(), v));
    }
    if clique.len() != w_count as usize {
        return Err(Error::CliqueNotBijection(format!(
            "clique has {} vertices, expected {}",
            clique.len(),
            w_count
        )));
    }
    // decode phi
    let mut phi = vec![u64::MAX; w_count as usize];
    for &vertex in clique {
        let w = vertex as u64 / w_count;
        let w_prime = vertex as u64 % w_count;
        if phi[w as usize] != u64::MAX {
            return Err(Error::CliqueNotBijection(format!(
                "two clique vertices share first coordinate {w}"
            )));
        }
        phi[w as usize] = w_prime;
    }

    let n = w_count as usize;
    let mut spreads = Vec::with_capacity(q as usize);
    // constant first coordinate
    let s0 = Spread::from_assignment(n, (0..v).map(|x| x / n).collect())?;
    check_spread_in_host(host, &s0)?;
    spreads.push(s0);
    for alpha in 1..q {
        let mut assignment = vec![0usize; v];
        for w_idx in 0..w_count {
            let scaled = {
                let p = Vec3::decode(phi[w_idx as usize], q);
                field.v_scale(alpha, p)
            };
            for y_idx in 0..w_count {
                let y = Vec3::decode(y_idx, q);
                let second = field.v_add(scaled, y).encode(q);
                assignment[(w_idx * w_count + second) as usize] = y_idx as usize;
            }
        }
        let spread = Spread::from_assignment(n, assignment)?;
        check_spread_in_host(host, &spread)?;
        spreads.push(spread);
    }

    // cliques from different spreads meet in exactly one vertex
    for (i, a) in spreads.iter().enumerate() {
        for b in spreads.iter().skip(i + 1) {
            for ca in a.cliques() {
                let mut counts = vec![0usize; n];
                for &x in &ca {
                    counts[b.clique_of(x)] += 1;
                }
                if counts.iter().any(|&c| c != 1) {
                    return Err(Error::Internal(
                        "spread family cliques do not meet in exactly one vertex".into(),
                    ));
                }
            }
        }
    }
    Ok(spreads)
}

fn check_spread_in_host(host: &Graph, spread: &Spread) -> Result<(), Error> {
    if let Some((x, y)) = spread
        .edge_graph()
        .edges()
        .into_iter()
        .find(|&(x, y)| !host.has_edge(x, y))
    {
        return Err(Error::CliqueNotInGraph { x, y });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disjoint_cliques(n: usize) -> Graph {
        let mut g = Graph::new(n * n);
        for c in 0..n {
            for i in 0..n {
                for j in (i + 1)..n {
                    g.set_edge(c * n + i, c * n + j, true);
                }
            }
        }
        g
    }

    fn lattice_graph(n: usize) -> Graph {
        let mut g = Graph::new(n * n);
        for x in 0..n * n {
            for y in (x + 1)..n * n {
                if x / n == y / n || x % n == y % n {
                    g.set_edge(x, y, true);
                }
            }
        }
        g
    }

    #[test]
    fn four_disjoint_k4_is_a_spread() {
        let g = disjoint_cliques(4);
        let spread = is_square_spread(&g).unwrap().unwrap();
        assert_eq!(spread.clique_order(), 4);
        assert_eq!(spread.edge_graph(), g);
    }

    #[test]
    fn lattice_is_not_a_spread() {
        assert!(is_square_spread(&lattice_graph(3)).unwrap().is_none());
    }

    #[test]
    fn non_square_vertex_count_is_an_error() {
        let g = Graph::new(10);
        assert!(matches!(is_square_spread(&g), Err(Error::NotSquareVertexCount(10))));
        assert!(matches!(find_spread(&g, 1000), Err(Error::NotSquareVertexCount(10))));
    }

    #[test]
    fn find_spread_in_rows_of_lattice() {
        // the lattice graph contains its row spread; search must find one
        let g = lattice_graph(4);
        let spread = find_spread(&g, DEFAULT_SEARCH_BUDGET).unwrap().found().unwrap();
        assert!(spread.edge_graph().is_subgraph_of(&g));
        // deterministic: rows in order
        assert_eq!(spread.cliques()[0], vec![0, 1, 2, 3]);
    }

    #[test]
    fn find_spread_reports_nonexistence() {
        // C4 plus isolated structure can't be covered by 2-cliques... use
        // the 4-cycle on 4 vertices: a spread would be 2 disjoint edges,
        // which exists; instead take the star K_1,3: no spread
        let mut g = Graph::new(4);
        g.set_edge(0, 1, true);
        g.set_edge(0, 2, true);
        g.set_edge(0, 3, true);
        assert_eq!(find_spread(&g, 1000).unwrap(), SearchOutcome::NoneExists);
    }

    #[test]
    fn budget_exhaustion_is_distinguished() {
        let g = lattice_graph(4);
        assert!(matches!(
            find_spread(&g, 1).unwrap(),
            SearchOutcome::BudgetExhausted { .. }
        ));
    }

    #[test]
    fn remove_row_spread_from_lattice() {
        // removing the row spread from L2(4) leaves the column spread's
        // 2-dimensional partner, strictly LS(4,1)
        let g = lattice_graph(4);
        let rows = Spread::from_assignment(4, (0..16).map(|x| x / 4).collect()).unwrap();
        let (residual, note) = remove_spread(&g, &rows).unwrap();
        assert_eq!(residual.regular_degree(), Some(3));
        match note {
            RemovalNote::LatinSquarePreserved { after, .. } => {
                assert_eq!(after, SrgType::StrictlyLatinSquare { n: 4, t: 1 });
            }
            other => panic!("unexpected note {other:?}"),
        }
    }

    #[test]
    fn remove_spread_requires_containment() {
        let g = disjoint_cliques(3);
        let other = Spread::from_assignment(3, (0..9).map(|x| x % 3).collect()).unwrap();
        assert!(matches!(
            remove_spread(&g, &other),
            Err(Error::SpreadNotContained { .. })
        ));
    }

    #[test]
    fn clique_search_on_k5() {
        let g = Graph::new(5).complement();
        let found = find_clique(&g, 5, 1000).unwrap().found().unwrap();
        assert_eq!(found, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn clique_search_proves_absence_in_triangle_free_graph() {
        // Petersen graph is triangle-free
        let pairs: Vec<(usize, usize)> =
            (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        let mut g = Graph::new(10);
        for (x, &(a, b)) in pairs.iter().enumerate() {
            for (y, &(c, d)) in pairs.iter().enumerate().skip(x + 1) {
                if a != c && a != d && b != c && b != d {
                    g.set_edge(x, y, true);
                }
            }
        }
        assert_eq!(find_clique(&g, 3, 100_000).unwrap(), SearchOutcome::NoneExists);
    }
}
