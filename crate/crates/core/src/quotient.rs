//! Imprimitivity over a square-spread relation: quotient matrices of the
//! other relations, the quotient scheme, type restrictions on strongly
//! regular relations, and the lattice idempotent count.

use num::{BigInt, ToPrimitive};

use crate::error::Error;
use crate::exactmat::{rat_i64, Rat, RatMatrix};
use crate::graph::Graph;
use crate::scheme::{ColorMatrix, Scheme};
use crate::spreads::{is_square_spread, Spread};
use crate::srg::{classify_type, exact_sqrt, srg_params, SrgOutcome, SrgParams, SrgType};

/// Quotient of one relation over the cliques of a square spread: the raw
/// quotient matrix equals b times a 01 adjacency matrix, and every
/// eigenvalue of the quotient is an eigenvalue of the original relation.
#[derive(Debug, Clone)]
pub struct QuotientReport {
    pub b: u64,
    pub quotient: Graph,
    /// distinct eigenvalues of the (scaled) quotient matrix, each verified
    /// to appear in the relation's P column; descending
    pub inherited_eigenvalues: Vec<i64>,
}

fn spread_of(s: &Scheme, spread_class: usize) -> Result<Spread, Error> {
    let g = s.relation_graph(spread_class)?;
    is_square_spread(&g)?.ok_or(Error::NotASpread(spread_class))
}

/// Quotient matrix of relation `rel_class` with respect to the spread in
/// relation `spread_class`. Quotienting the spread relation by itself is
/// special-cased: its within-clique edges collapse onto the diagonal, so
/// the quotient is the identity class, reported with b = n - 1.
pub fn quotient_relation(
    s: &Scheme,
    spread_class: usize,
    rel_class: usize,
) -> Result<QuotientReport, Error> {
    let spread = spread_of(s, spread_class)?;
    let n = spread.clique_order();
    if rel_class == 0 || rel_class > s.class_count() {
        return Err(Error::ClassIndexOutOfRange { index: rel_class, max: s.class_count() });
    }
    if rel_class == spread_class {
        return Ok(QuotientReport {
            b: n as u64 - 1,
            quotient: Graph::new(n),
            inherited_eigenvalues: vec![n as i64 - 1],
        });
    }
    let (b, quotient) = raw_quotient(s.graph_ref(rel_class), &spread)?;

    // valency transport: k = b * quotient valency
    let k = s.valencies()[rel_class];
    let k_quot = quotient.regular_degree().ok_or_else(|| {
        Error::Internal("quotient of a scheme relation must be regular".into())
    })?;
    if k != b * k_quot {
        return Err(Error::Internal(format!(
            "valency transport failed: k = {k}, b * quotient valency = {}",
            b * k_quot
        )));
    }

    // eigenvalue inheritance, exactly
    let spec = s.spectrum()?;
    let column: Vec<i64> = (0..=s.class_count()).map(|j| spec.p_i64(j, rel_class)).collect();
    let adj: Vec<Vec<i64>> = (0..n)
        .map(|x| (0..n).map(|y| if quotient.has_edge(x, y) { 1 } else { 0 }).collect())
        .collect();
    let roots = crate::exactmat::integer_roots(&RatMatrix::from_i64_rows(&adj).char_poly()?)?;
    if roots.residual_degree > 0 {
        return Err(Error::Internal("quotient adjacency with irrational eigenvalues".into()));
    }
    let mut inherited: Vec<i64> = roots
        .distinct_roots()
        .iter()
        .map(|r| r.to_i64().expect("small eigenvalue") * b as i64)
        .collect();
    inherited.sort_unstable_by_key(|&x| std::cmp::Reverse(x));
    for ev in &inherited {
        if !column.contains(ev) {
            return Err(Error::Internal(format!(
                "quotient eigenvalue {ev} is not an eigenvalue of relation {rel_class}"
            )));
        }
    }
    Ok(QuotientReport { b, quotient, inherited_eigenvalues: inherited })
}

/// The raw quotient: B[c1][c2] = (edges between cliques c1, c2) / n must be
/// 0 on the diagonal and a single constant b off it.
fn raw_quotient(g: &Graph, spread: &Spread) -> Result<(u64, Graph), Error> {
    let n = spread.clique_order();
    let mut counts = vec![vec![0u64; n]; n];
    for (x, y) in g.edges() {
        let (cx, cy) = (spread.clique_of(x), spread.clique_of(y));
        counts[cx][cy] += 1;
        counts[cy][cx] += 1;
    }
    let mut b = 0u64;
    let mut quotient = Graph::new(n);
    for c1 in 0..n {
        if counts[c1][c1] != 0 {
            return Err(Error::Internal(
                "relation has edges inside spread cliques; not a scheme relation".into(),
            ));
        }
        for c2 in (c1 + 1)..n {
            let raw = counts[c1][c2];
            if raw == 0 {
                continue;
            }
            if raw % n as u64 != 0 {
                return Err(Error::Internal(format!(
                    "quotient entry {raw}/{n} is not integral"
                )));
            }
            let value = raw / n as u64;
            if b == 0 {
                b = value;
            } else if b != value {
                return Err(Error::Internal(format!(
                    "quotient matrix is not b times a 01 matrix ({b} vs {value})"
                )));
            }
            quotient.set_edge(c1, c2, true);
        }
    }
    if b == 0 {
        return Err(Error::Internal("relation quotients to the zero matrix".into()));
    }
    Ok((b, quotient))
}

/// Quotient every class over the spread, merge classes with identical
/// quotient adjacency, and verify the result as a scheme on n vertices.
pub fn quotient_scheme(s: &Scheme, spread_class: usize) -> Result<Scheme, Error> {
    let spread = spread_of(s, spread_class)?;
    let n = spread.clique_order();
    let mut groups: Vec<(Graph, Vec<usize>)> = Vec::new();
    for i in 1..=s.class_count() {
        if i == spread_class {
            continue; // collapses to the identity class of the quotient
        }
        let (_, quotient) = raw_quotient(s.graph_ref(i), &spread)?;
        match groups.iter_mut().find(|(g, _)| *g == quotient) {
            Some((_, members)) => members.push(i),
            None => groups.push((quotient, vec![i])),
        }
    }
    // distinct quotient relations must partition the complete graph
    let mut union = Graph::new(n);
    for (g, _) in &groups {
        if let Some((x, y)) = union.overlaps(g) {
            return Err(Error::Internal(format!(
                "distinct quotient relations overlap at ({x},{y})"
            )));
        }
        union = union.union(g);
    }
    if !union.complement().edges().is_empty() {
        return Err(Error::Internal("quotient relations do not cover the quotient pairs".into()));
    }
    let colors = ColorMatrix::from_fn(n, groups.len(), |x, y| {
        (groups.iter().position(|(g, _)| g.has_edge(x, y)).unwrap() + 1) as u8
    })?;
    Scheme::verify(colors).map_err(Error::from)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalCase {
    /// b = n: the relation is the coclique extension of its quotient, so it
    /// has eigenvalue 0 and is complete multipartite
    CocliqueExtension,
    /// b = 1: relation and quotient share parameters, forcing mu = 0 and a
    /// disjoint union of cliques
    CliqueUnion,
}

#[derive(Debug, Clone)]
pub struct RelationReport {
    pub class: usize,
    pub b: u64,
    pub srg: Option<(SrgParams, SrgType)>,
    pub case: Option<ExtremalCase>,
}

#[derive(Debug, Clone)]
pub struct PropositionReports {
    pub spread_class: usize,
    pub quotient_complete: bool,
    pub relations: Vec<RelationReport>,
}

/// For every non-spread relation: its quotient scale b, its strong
/// regularity data, and the extremal cases. The type restrictions are
/// theorems, so a strongly regular relation typed NLS here (or non-LS when
/// the quotient scheme is complete) aborts with a falsification error.
pub fn proposition_reports(s: &Scheme, spread_class: usize) -> Result<PropositionReports, Error> {
    let spread = spread_of(s, spread_class)?;
    let n = spread.clique_order() as u64;
    let quotient = quotient_scheme(s, spread_class)?;
    let quotient_complete = quotient.class_count() == 1;
    let mut relations = Vec::new();
    for i in 1..=s.class_count() {
        if i == spread_class {
            continue;
        }
        let report = quotient_relation(s, spread_class, i)?;
        let srg = match srg_params(s.graph_ref(i)) {
            Ok(SrgOutcome::Srg(p)) => Some((p, classify_type(&p))),
            _ => None,
        };
        if let Some((params, ty)) = &srg {
            if quotient_complete {
                if !crate::srg::is_ls_inclusive(params) {
                    return Err(Error::TheoremFalsified(format!(
                        "complete quotient scheme but relation {i} has type {ty}"
                    )));
                }
            } else if matches!(ty, SrgType::StrictlyNegativeLatinSquare { .. }) {
                return Err(Error::TheoremFalsified(format!(
                    "non-complete quotient scheme but relation {i} is {ty}"
                )));
            }
        }
        let case = if report.b == n {
            // coclique extension has eigenvalue 0
            if srg.is_some() && !report.inherited_eigenvalues.is_empty() {
                let spec = s.spectrum()?;
                let has_zero = (0..=s.class_count()).any(|j| spec.p_i64(j, i) == 0);
                if !has_zero {
                    return Err(Error::TheoremFalsified(format!(
                        "relation {i} has b = n but no eigenvalue 0"
                    )));
                }
            }
            Some(ExtremalCase::CocliqueExtension)
        } else if report.b == 1 {
            if let Some((params, _)) = &srg {
                if params.mu != 0 {
                    return Err(Error::TheoremFalsified(format!(
                        "relation {i} has b = 1 but mu = {} != 0",
                        params.mu
                    )));
                }
            }
            Some(ExtremalCase::CliqueUnion)
        } else {
            None
        };
        relations.push(RelationReport { class: i, b: report.b, srg, case });
    }
    Ok(PropositionReports { spread_class, quotient_complete, relations })
}

#[derive(Debug, Clone)]
pub struct LatticeIdempotentReport {
    pub lattice_class: usize,
    pub n: u64,
    /// rows j != 0 of P with eigenvalue n-2 on the lattice relation;
    /// exactly one for a genuine scheme
    pub count: usize,
    pub idempotent_row: Option<usize>,
    /// n^2 E = (2n-2) I + (n-2) A - 2 (J - I - A), checked exactly
    pub identity_verified: bool,
}

/// Count the scheme idempotents on which a lattice-parameter relation has
/// eigenvalue n-2. Exactly one is a theorem; as a corollary every other
/// strongly regular relation must be of Latin square type (inclusively).
pub fn lattice_idempotent_count(
    s: &Scheme,
    lattice_class: usize,
) -> Result<LatticeIdempotentReport, Error> {
    let g = s.relation_graph(lattice_class)?;
    let params = match srg_params(&g) {
        Ok(SrgOutcome::Srg(p)) => p,
        _ => return Err(Error::NotLatticeParameters),
    };
    let n = exact_sqrt(params.v).ok_or(Error::NotLatticeParameters)?;
    if n < 2 || params.k != 2 * (n - 1) || params.lambda != n - 2 || params.mu != 2 {
        return Err(Error::NotLatticeParameters);
    }
    let spec = s.spectrum()?;
    let target = n as i64 - 2;
    let rows: Vec<usize> = (1..=s.class_count())
        .filter(|&j| spec.p_i64(j, lattice_class) == target)
        .collect();
    if rows.len() != 1 {
        return Err(Error::TheoremFalsified(format!(
            "lattice relation has eigenvalue n-2 on {} idempotents, expected 1",
            rows.len()
        )));
    }

    // corollary: every strongly regular relation is of Latin square type
    for i in 1..=s.class_count() {
        if let Ok(SrgOutcome::Srg(p)) = srg_params(s.graph_ref(i)) {
            if !crate::srg::is_ls_inclusive(&p) {
                return Err(Error::TheoremFalsified(format!(
                    "scheme with a lattice relation has relation {i} of type {}",
                    classify_type(&p)
                )));
            }
        }
    }

    // spectral identity of the lattice idempotent, materialized on demand
    let j = rows[0];
    let e = s.idempotent_matrix(j)?;
    let v = s.vertex_count();
    let mut expect = RatMatrix::zeros(v, v);
    let two_n_minus_2 = rat_i64(2 * n as i64 - 2);
    let n_minus_2 = rat_i64(n as i64 - 2);
    let minus_2 = rat_i64(-2);
    for x in 0..v {
        for y in 0..v {
            expect[(x, y)] = if x == y {
                two_n_minus_2.clone()
            } else if g.has_edge(x, y) {
                n_minus_2.clone()
            } else {
                minus_2.clone()
            };
        }
    }
    let identity_verified = e.scale(&Rat::from_integer(BigInt::from(params.v))) == expect;
    if !identity_verified {
        return Err(Error::TheoremFalsified(
            "lattice idempotent does not satisfy its spectral identity".into(),
        ));
    }
    Ok(LatticeIdempotentReport {
        lattice_class,
        n,
        count: rows.len(),
        idempotent_row: Some(j),
        identity_verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    #[test]
    fn lattice_scheme_idempotent_count_is_one() {
        let s = constructions::build_lattice_scheme(5).unwrap();
        let report = lattice_idempotent_count(&s, 1).unwrap();
        assert_eq!(report.count, 1);
        assert!(report.identity_verified);
    }

    #[test]
    fn missing_lattice_relation_is_a_precondition_error() {
        let s = constructions::build_lattice_scheme(4).unwrap();
        // relation 2 is the complement, parameters (16,9,4,6), not lattice
        assert!(matches!(
            lattice_idempotent_count(&s, 2),
            Err(Error::NotLatticeParameters)
        ));
    }

    #[test]
    fn quotient_of_spread_by_itself_uses_the_convention() {
        let s = constructions::build_lattice_scheme(3).unwrap();
        // relation 1 of the lattice scheme is not a spread; build one:
        // the 3-class scheme of K3 x K3 has no spread either, so use a
        // direct product style fixture: the scheme of 3 disjoint triangles
        // is not a scheme... use the wreath family instead.
        let w = constructions::build_wreath(
            &constructions::one_class_scheme(2).unwrap(),
            &constructions::build_knn_minus_matching(4).unwrap(),
        )
        .unwrap();
        // distance-2 relation (class 3) is the square spread
        let report = quotient_relation(&w, 3, 3).unwrap();
        assert_eq!(report.b, 3);
        assert_eq!(report.quotient.edge_count(), 0);
    }
}
