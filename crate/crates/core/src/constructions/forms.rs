//! Distance-regular graphs of diameter 3 on q^6 vertices whose distance-3
//! relation is strongly regular of Latin square type: the symmetric
//! bilinear forms graph (even q) and the Brouwer–Pasechnik graph.

use crate::error::Error;
use crate::gf::{Field, SymMat3, Vec3};
use crate::graph::Graph;
use crate::scheme::{ColorMatrix, Scheme};

/// The distance scheme of the symmetric bilinear forms graph (vertices are
/// 3x3 symmetric matrices over GF(q), adjacent when the difference has
/// rank 1), plus the 4-class refinement that splits the distance-3
/// relation into the alternating-difference spread and the rest.
#[derive(Debug)]
pub struct BilinearForms {
    pub three_class: Scheme,
    pub four_class: Scheme,
    pub field: Field,
}

pub fn build_bilinear_forms(q: u64) -> Result<BilinearForms, Error> {
    if q % 2 != 0 {
        return Err(Error::BadParameter("the rank-2 split needs even q".into()));
    }
    if q > 4 {
        return Err(Error::SizeGuard("bilinear forms builder is budgeted for q <= 4".into()));
    }
    let field = Field::of_order(q)?;
    let v = q.pow(6) as usize;
    // rank class of the difference of every vertex pair, refined by the
    // alternating flag: 1 = rank 1, 2 = rank 2 non-alternating, 3 = rank 3,
    // 4 = rank 2 alternating
    let refined = |x: usize, y: usize| -> u8 {
        let a = SymMat3::decode(x as u64, q);
        let b = SymMat3::decode(y as u64, q);
        let (rank, alternating) = field.sym_rank(&field.m_sub(a, b));
        match (rank, alternating) {
            (1, _) => 1,
            (2, false) => 2,
            (3, _) => 3,
            (2, true) => 4,
            _ => unreachable!("difference of distinct vertices is nonzero"),
        }
    };
    let colors4 = ColorMatrix::from_fn(v, 4, &refined)?;
    let colors3 = ColorMatrix::from_fn(v, 3, |x, y| refined(x, y).min(3))?;
    let three_class = Scheme::verify(colors3)?;
    let four_class = Scheme::verify(colors4)?;
    Ok(BilinearForms { three_class, four_class, field })
}

/// The Brouwer–Pasechnik graph Z on W x W with W = GF(q)^3: (u,u') is
/// adjacent to (v,v') when v' - u' = u x v. Its distance scheme has
/// diameter 3; a pair is at distance 3 exactly when the first coordinates
/// agree (second differing) or the differences are non-orthogonal.
#[derive(Debug)]
pub struct BrouwerPasechnik {
    pub scheme: Scheme,
    pub z: Graph,
    pub field: Field,
}

impl BrouwerPasechnik {
    pub fn w_count(&self) -> u64 {
        self.field.order().pow(3)
    }

    pub fn vertex(&self, w: Vec3, w_prime: Vec3) -> usize {
        let q = self.field.order();
        (w.encode(q) * self.w_count() + w_prime.encode(q)) as usize
    }

    pub fn coordinates(&self, vertex: usize) -> (Vec3, Vec3) {
        let q = self.field.order();
        let wc = self.w_count();
        (
            Vec3::decode(vertex as u64 / wc, q),
            Vec3::decode(vertex as u64 % wc, q),
        )
    }

    /// The distance-3 membership predicate.
    pub fn is_distance3(&self, x: usize, y: usize) -> bool {
        if x == y {
            return false;
        }
        let (u, up) = self.coordinates(x);
        let (w, wp) = self.coordinates(y);
        let f = &self.field;
        (w == u && wp != up) || f.dot(f.v_sub(wp, up), f.v_sub(w, u)) != 0
    }
}

pub fn build_brouwer_pasechnik(q: u64) -> Result<BrouwerPasechnik, Error> {
    if q > 3 {
        return Err(Error::SizeGuard("Brouwer-Pasechnik builder is budgeted for q <= 3".into()));
    }
    let field = Field::of_order(q)?;
    let wc = q.pow(3);
    let v = (wc * wc) as usize;
    let decode = |x: usize| -> (Vec3, Vec3) {
        (Vec3::decode(x as u64 / wc, q), Vec3::decode(x as u64 % wc, q))
    };
    let colors = ColorMatrix::from_fn(v, 3, |x, y| {
        let (u, up) = decode(x);
        let (w, wp) = decode(y);
        let diff = field.v_sub(wp, up);
        if diff == field.cross(u, w) {
            debug_assert_ne!(u, w, "adjacent vertices have distinct first coordinates");
            1
        } else if (w == u && wp != up) || field.dot(diff, field.v_sub(w, u)) != 0 {
            3
        } else {
            2
        }
    })?;
    let scheme = Scheme::verify(colors)?;
    let z = scheme.relation_graph(1)?;
    Ok(BrouwerPasechnik { scheme, z, field })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::drg_array;
    use crate::spreads::is_square_spread;
    use crate::srg::{classify_type, srg_params, SrgType};

    fn expected_p_rows(q: i64) -> Vec<Vec<i64>> {
        vec![
            vec![1, q3(q) - 1, (q * q - 1) * (q3(q) - 1), (q3(q) - q * q + 1) * (q3(q) - 1)],
            vec![1, q * q - 1, q3(q) - 2 * q * q + 1, -(q3(q) - q * q + 1)],
            vec![1, -q * q - 1, q3(q) + 1, -(q3(q) - q * q + 1)],
            vec![1, -1, -q * q + 1, q * q - 1],
        ]
    }

    fn q3(q: i64) -> i64 {
        q * q * q
    }

    #[test]
    fn bilinear_forms_q2() {
        let bf = build_bilinear_forms(2).unwrap();
        assert_eq!(bf.three_class.vertex_count(), 64);
        assert_eq!(&bf.three_class.valencies()[1..], &[7, 21, 35]);
        let mut rows = bf.three_class.spectrum().unwrap().p_rows_i64();
        rows.sort();
        let mut expect = expected_p_rows(2);
        expect.sort();
        assert_eq!(rows, expect);

        // the alternating relation is a spread of 8-cliques
        let alt = bf.four_class.relation_graph(4).unwrap();
        assert_eq!(is_square_spread(&alt).unwrap().unwrap().clique_order(), 8);

        // exactly two relations of the 4-class scheme are strictly LS
        let ls_count = (1..=4)
            .filter(|&i| {
                matches!(
                    srg_params(&bf.four_class.relation_graph(i).unwrap())
                        .ok()
                        .and_then(|o| o.params().map(|p| classify_type(p))),
                    Some(SrgType::StrictlyLatinSquare { .. })
                )
            })
            .count();
        assert_eq!(ls_count, 2);
    }

    #[test]
    fn bilinear_rejects_odd_q() {
        assert!(build_bilinear_forms(3).is_err());
    }

    #[test]
    fn brouwer_pasechnik_q2() {
        let bp = build_brouwer_pasechnik(2).unwrap();
        assert_eq!(bp.scheme.vertex_count(), 64);
        let arr = drg_array(&bp.z).unwrap().unwrap();
        assert_eq!((arr.b.as_slice(), arr.c.as_slice()), (&[7, 6, 5][..], &[1, 2, 3][..]));
        assert_eq!(bp.scheme.valencies()[3], 35);
        let mut rows = bp.scheme.spectrum().unwrap().p_rows_i64();
        rows.sort();
        let mut expect = expected_p_rows(2);
        expect.sort();
        assert_eq!(rows, expect);

        // constant-first-coordinate cliques form a spread inside the
        // distance-3 relation
        let z3 = bp.scheme.relation_graph(3).unwrap();
        let mut s0 = Graph::new(64);
        for x in 0..64 {
            for y in (x + 1)..64 {
                if x / 8 == y / 8 {
                    s0.set_edge(x, y, true);
                }
            }
        }
        assert!(s0.is_subgraph_of(&z3));
        assert_eq!(is_square_spread(&s0).unwrap().unwrap().clique_order(), 8);

        // distance-3 predicate agrees with the scheme coloring
        for x in 0..64 {
            for y in 0..64 {
                assert_eq!(
                    bp.is_distance3(x, y),
                    bp.scheme.colors().class_of(x, y) == 3
                );
            }
        }
    }

    #[test]
    fn brouwer_pasechnik_q3_array() {
        let bp = build_brouwer_pasechnik(3).unwrap();
        assert_eq!(bp.scheme.vertex_count(), 729);
        let arr = drg_array(&bp.z).unwrap().unwrap();
        assert_eq!((arr.b.as_slice(), arr.c.as_slice()), (&[26, 24, 19][..], &[1, 3, 8][..]));
    }
}
