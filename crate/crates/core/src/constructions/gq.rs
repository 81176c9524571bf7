//! The generalized quadrangle GQ(2,2) built combinatorially from duads and
//! synthemes of a 6-element set, and the 4-class scheme on spreads x ovoids
//! whose first relation is the Sylvester graph.

use crate::error::Error;
use crate::scheme::{ColorMatrix, Scheme};

/// GQ(2,2): 15 points (duads, 2-subsets of a 6-set), 15 lines (synthemes,
/// perfect matchings of K_6 as triples of disjoint duads), 6 spreads and
/// 6 ovoids found by exhaustive search.
#[derive(Debug, Clone)]
pub struct Gq22 {
    pub points: Vec<(u8, u8)>,
    /// each line as three point indices, sorted
    pub lines: Vec<[usize; 3]>,
    /// each spread as five line indices partitioning the points
    pub spreads: Vec<Vec<usize>>,
    /// each ovoid as five point indices meeting every line once
    pub ovoids: Vec<Vec<usize>>,
}

impl Gq22 {
    pub fn build() -> Result<Gq22, Error> {
        let mut points = Vec::with_capacity(15);
        for a in 0..6u8 {
            for b in (a + 1)..6 {
                points.push((a, b));
            }
        }
        let disjoint = |p: usize, q: usize| {
            let (a, b) = points[p];
            let (c, d) = points[q];
            a != c && a != d && b != c && b != d
        };
        let mut lines = Vec::new();
        for p in 0..15 {
            for q in (p + 1)..15 {
                if !disjoint(p, q) {
                    continue;
                }
                for r in (q + 1)..15 {
                    if disjoint(p, r) && disjoint(q, r) {
                        lines.push([p, q, r]);
                    }
                }
            }
        }
        if lines.len() != 15 {
            return Err(Error::Internal(format!("{} synthemes, expected 15", lines.len())));
        }

        // spreads: 5 lines covering each point exactly once
        let mut spreads = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        search_spreads(&lines, &mut vec![false; 15], &mut stack, 0, &mut spreads);
        if spreads.len() != 6 {
            return Err(Error::Internal(format!("{} spreads, expected 6", spreads.len())));
        }

        // ovoids: 5 points meeting every line exactly once
        let mut ovoids = Vec::new();
        let mut pts: Vec<usize> = Vec::new();
        search_ovoids(&lines, &mut pts, 0, &mut ovoids);
        if ovoids.len() != 6 {
            return Err(Error::Internal(format!("{} ovoids, expected 6", ovoids.len())));
        }

        let gq = Gq22 { points, lines, spreads, ovoids };
        gq.check_regularity()?;
        Ok(gq)
    }

    fn check_regularity(&self) -> Result<(), Error> {
        // 3 points per line (by construction), 3 lines per point
        for p in 0..15 {
            let on = self.lines.iter().filter(|l| l.contains(&p)).count();
            if on != 3 {
                return Err(Error::Internal(format!("point {p} on {on} lines")));
            }
        }
        // two spreads share exactly one line; two ovoids exactly one point
        for (i, s1) in self.spreads.iter().enumerate() {
            for s2 in self.spreads.iter().skip(i + 1) {
                let common = s1.iter().filter(|l| s2.contains(l)).count();
                if common != 1 {
                    return Err(Error::Internal("spreads must share exactly one line".into()));
                }
            }
        }
        for (i, o1) in self.ovoids.iter().enumerate() {
            for o2 in self.ovoids.iter().skip(i + 1) {
                let common = o1.iter().filter(|p| o2.contains(p)).count();
                if common != 1 {
                    return Err(Error::Internal("ovoids must share exactly one point".into()));
                }
            }
        }
        Ok(())
    }

    pub fn common_line(&self, s1: usize, s2: usize) -> usize {
        *self.spreads[s1]
            .iter()
            .find(|l| self.spreads[s2].contains(l))
            .expect("two spreads share a line")
    }

    pub fn common_point(&self, o1: usize, o2: usize) -> usize {
        *self.ovoids[o1]
            .iter()
            .find(|p| self.ovoids[o2].contains(p))
            .expect("two ovoids share a point")
    }
}

fn search_spreads(
    lines: &[[usize; 3]],
    covered: &mut Vec<bool>,
    chosen: &mut Vec<usize>,
    from: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if chosen.len() == 5 {
        out.push(chosen.clone());
        return;
    }
    for li in from..lines.len() {
        if lines[li].iter().any(|&p| covered[p]) {
            continue;
        }
        for &p in &lines[li] {
            covered[p] = true;
        }
        chosen.push(li);
        search_spreads(lines, covered, chosen, li + 1, out);
        chosen.pop();
        for &p in &lines[li] {
            covered[p] = false;
        }
    }
}

fn search_ovoids(
    lines: &[[usize; 3]],
    chosen: &mut Vec<usize>,
    from: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if chosen.len() == 5 {
        if lines
            .iter()
            .all(|l| l.iter().filter(|p| chosen.contains(p)).count() == 1)
        {
            out.push(chosen.clone());
        }
        return;
    }
    for p in from..15 {
        // no line may contain two chosen points
        if lines
            .iter()
            .any(|l| l.contains(&p) && l.iter().any(|q| chosen.contains(q)))
        {
            continue;
        }
        chosen.push(p);
        search_ovoids(lines, chosen, p + 1, out);
        chosen.pop();
    }
}

/// The 4-class scheme on spread x ovoid pairs of GQ(2,2): relation 1 is the
/// Sylvester graph (the shared point of the two ovoids lies on the shared
/// line of the two spreads), relations 3 and 4 are the same-spread and
/// same-ovoid 6-clique spreads, relation 2 is the remainder.
pub fn build_sylvester() -> Result<(Scheme, Gq22), Error> {
    let gq = Gq22::build()?;
    let colors = ColorMatrix::from_fn(36, 4, |x, y| {
        let (s1, o1) = (x / 6, x % 6);
        let (s2, o2) = (y / 6, y % 6);
        if s1 == s2 {
            3
        } else if o1 == o2 {
            4
        } else {
            let line = gq.common_line(s1, s2);
            let point = gq.common_point(o1, o2);
            if gq.lines[line].contains(&point) {
                1
            } else {
                2
            }
        }
    })?;
    let scheme = Scheme::verify(colors)?;
    Ok((scheme, gq))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::{amorphic_check, fuse, is_fusion_scheme, ClassPartition};
    use crate::scheme::drg_array;
    use crate::spreads::is_square_spread;
    use crate::srg::srg_params;

    #[test]
    fn sylvester_scheme_matches_its_eigenmatrix() {
        let (s, _) = build_sylvester().unwrap();
        assert_eq!(s.vertex_count(), 36);
        assert_eq!(&s.valencies()[1..], &[5, 20, 5, 5]);
        let spec = s.spectrum().unwrap();
        let mut rows = spec.p_rows_i64();
        rows.sort();
        let mut expect = vec![
            vec![1, 5, 20, 5, 5],
            vec![1, 2, -1, -1, -1],
            vec![1, -3, 4, -1, -1],
            vec![1, -1, -4, 5, -1],
            vec![1, -1, -4, -1, 5],
        ];
        expect.sort();
        assert_eq!(rows, expect);
        // the Sylvester graph itself is triangle-free
        assert_eq!(s.p_number(1, 1, 1), 0);
    }

    #[test]
    fn sylvester_graph_is_distance_regular() {
        let (s, _) = build_sylvester().unwrap();
        let g = s.relation_graph(1).unwrap();
        let arr = drg_array(&g).unwrap().unwrap();
        assert_eq!((arr.b.as_slice(), arr.c.as_slice()), (&[5, 4, 2][..], &[1, 1, 4][..]));
        // graph spectrum 5^1, 2^16, (-1)^10, (-3)^9
        let spec = s.spectrum().unwrap();
        assert_eq!(
            spec.relation_eigenvalues(1),
            vec![(5, 1), (2, 16), (-1, 10), (-3, 9)]
        );
        // not strongly regular: diameter 3
        assert!(srg_params(&g).unwrap().params().is_none());
    }

    #[test]
    fn clique_relations_are_spreads() {
        let (s, _) = build_sylvester().unwrap();
        for i in [3, 4] {
            let spread = is_square_spread(&s.relation_graph(i).unwrap()).unwrap();
            assert_eq!(spread.unwrap().clique_order(), 6);
        }
    }

    #[test]
    fn clique_relations_fuse_to_the_distance_3_graph() {
        let (s, _) = build_sylvester().unwrap();
        let fused = is_fusion_scheme(
            &s,
            &ClassPartition::parse("1|2|3,4", 4).unwrap(),
        )
        .unwrap();
        // distance-3 graph of the Sylvester graph
        let g = s.relation_graph(1).unwrap();
        let mut dist3 = crate::graph::Graph::new(36);
        for x in 0..36 {
            for (y, dy) in g.distances(x).into_iter().enumerate() {
                if dy == Some(3) {
                    if y > x {
                        dist3.set_edge(x, y, true);
                    }
                }
            }
        }
        assert_eq!(fused.relation_graph(3).unwrap(), dist3);
    }

    #[test]
    fn sylvester_fusions() {
        let (s, _) = build_sylvester().unwrap();
        // {1},{2},{3,4} verifies (the 3-class scheme of the Sylvester graph)
        assert!(is_fusion_scheme(&s, &ClassPartition::parse("1|2|3,4", 4).unwrap()).is_ok());
        // {1,3},{2},{4} breaks regularity of the products
        let bad = ClassPartition::parse("1,3|2|4", 4).unwrap();
        assert!(is_fusion_scheme(&s, &bad).is_err());
        // cross-check the fast path against full verification
        let colors = fuse(&s, &bad).unwrap();
        assert!(Scheme::verify(colors).is_err());
    }

    #[test]
    fn sylvester_is_not_amorphic() {
        let (s, _) = build_sylvester().unwrap();
        match amorphic_check(&s, false).unwrap() {
            crate::fusion::AmorphicVerdict::NotAmorphic { partition, .. } => {
                // the reported partition must genuinely fail
                assert!(is_fusion_scheme(&s, &partition).is_err());
            }
            _ => panic!("the Sylvester 4-class scheme is not amorphic"),
        }
    }
}
