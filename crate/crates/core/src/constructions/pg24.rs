//! The linear 5-class fission of the Hamming scheme H(3,4), encoded by a
//! partition of PG(2,4) into a triangle, three cubic point classes and the
//! Hermitian unital (the weight-2 points). Due to de Caen and Van Dam.

use crate::error::Error;
use crate::gf::Field;
use crate::scheme::Scheme;

use super::{build_translation_scheme, vector_decode};

/// Partition of the 63 nonzero vectors of GF(4)^3 (equivalently the 21
/// points of PG(2,4), three vectors per point) into five scalar-closed
/// parts: weight-1 vectors, the three classes xyz = alpha, and the
/// weight-2 vectors (the unital).
#[derive(Debug, Clone)]
pub struct Pg24Partition {
    pub triangle: Vec<u64>,
    pub cubic: [Vec<u64>; 3],
    pub unital: Vec<u64>,
}

impl Pg24Partition {
    pub fn build(field: &Field) -> Result<Pg24Partition, Error> {
        assert_eq!(field.order(), 4);
        let mut triangle = Vec::new();
        let mut cubic: [Vec<u64>; 3] = Default::default();
        let mut unital = Vec::new();
        for w in 1u64..64 {
            let comps = vector_decode(w, 4, 3);
            let weight = comps.iter().filter(|&&c| c != 0).count();
            match weight {
                1 => triangle.push(w),
                2 => unital.push(w),
                3 => {
                    let product = field.mul(field.mul(comps[0], comps[1]), comps[2]);
                    cubic[product as usize - 1].push(w);
                }
                _ => unreachable!(),
            }
        }
        let partition = Pg24Partition { triangle, cubic, unital };
        partition.check(field)?;
        Ok(partition)
    }

    fn check(&self, field: &Field) -> Result<(), Error> {
        if self.triangle.len() != 9 || self.unital.len() != 27 {
            return Err(Error::Internal("wrong part sizes in the PG(2,4) partition".into()));
        }
        for part in &self.cubic {
            if part.len() != 9 {
                return Err(Error::Internal("cubic parts must have 9 vectors".into()));
            }
        }
        // triangle + {xyz = 1} is a hyperoval: 6 projective points, no 3
        // collinear
        let mut points: Vec<[u64; 3]> = Vec::new();
        for &w in self.triangle.iter().chain(&self.cubic[0]) {
            let comps = vector_decode(w, 4, 3);
            let rep = projective_normalize(field, &comps);
            if !points.contains(&rep) {
                points.push(rep);
            }
        }
        if points.len() != 6 {
            return Err(Error::Internal("hyperoval must have 6 points".into()));
        }
        for a in 0..6 {
            for b in (a + 1)..6 {
                for c in (b + 1)..6 {
                    if det3(field, &points[a], &points[b], &points[c]) == 0 {
                        return Err(Error::Internal(
                            "three hyperoval points are collinear".into(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn parts(&self) -> Vec<Vec<u64>> {
        vec![
            self.triangle.clone(),
            self.cubic[0].clone(),
            self.cubic[1].clone(),
            self.cubic[2].clone(),
            self.unital.clone(),
        ]
    }
}

fn projective_normalize(field: &Field, comps: &[u64]) -> [u64; 3] {
    let lead = comps.iter().copied().find(|&c| c != 0).expect("nonzero vector");
    let inv = field.inv(lead).expect("nonzero");
    [
        field.mul(inv, comps[0]),
        field.mul(inv, comps[1]),
        field.mul(inv, comps[2]),
    ]
}

fn det3(field: &Field, a: &[u64; 3], b: &[u64; 3], c: &[u64; 3]) -> u64 {
    let f = field;
    let m = |x, y| f.mul(x, y);
    let term = |i: usize, j: usize, k: usize| m(a[i], m(b[j], c[k]));
    // char 2: determinant is the plain sum of the six products
    let mut det = 0;
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (1, 0, 2), (2, 1, 0)] {
        det = f.add(det, term(i, j, k));
    }
    det
}

/// The 5-class translation scheme on GF(4)^3 := H(3,4) with its distance-3
/// relation fissioned into the three cubic classes.
pub fn build_de_caen_van_dam() -> Result<(Scheme, Pg24Partition), Error> {
    let field = Field::of_order(4)?;
    let partition = Pg24Partition::build(&field)?;
    let scheme = build_translation_scheme(&field, 3, &partition.parts())?;
    Ok((scheme, partition))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::{amorphic_check, is_fusion_scheme, AmorphicVerdict, ClassPartition, SharedType};
    use crate::srg::{classify_type, srg_params, SrgType};

    #[test]
    fn five_class_eigenmatrix() {
        let (s, _) = build_de_caen_van_dam().unwrap();
        assert_eq!(s.vertex_count(), 64);
        assert_eq!(&s.valencies()[1..], &[9, 9, 9, 9, 27]);
        let mut rows = s.spectrum().unwrap().p_rows_i64();
        rows.sort();
        let mut expect = vec![
            vec![1, 9, 9, 9, 9, 27],
            vec![1, 5, -3, -3, -3, 3],
            vec![1, -3, 5, -3, -3, 3],
            vec![1, -3, -3, 5, -3, 3],
            vec![1, -3, -3, -3, 5, 3],
            vec![1, 1, 1, 1, 1, -5],
        ];
        expect.sort();
        assert_eq!(rows, expect);
    }

    #[test]
    fn four_class_fusion_matches_and_types() {
        let (s, _) = build_de_caen_van_dam().unwrap();
        let fused = is_fusion_scheme(&s, &ClassPartition::parse("1|2|3,4|5", 5).unwrap()).unwrap();
        let mut rows = fused.spectrum().unwrap().p_rows_i64();
        rows.sort();
        let mut expect = vec![
            vec![1, 9, 9, 18, 27],
            vec![1, 5, -3, -6, 3],
            vec![1, -3, 5, -6, 3],
            vec![1, -3, -3, 2, 3],
            vec![1, 1, 1, 2, -5],
        ];
        expect.sort();
        assert_eq!(rows, expect);

        // exactly two strictly-NLS relations (valencies 18 and 27) and two
        // relations (the valency-9 ones) that are not strongly regular
        let mut nls = Vec::new();
        let mut untyped = Vec::new();
        for i in 1..=4 {
            let outcome = srg_params(&fused.relation_graph(i).unwrap()).unwrap();
            match outcome.params() {
                Some(p) => {
                    if matches!(
                        classify_type(p),
                        SrgType::StrictlyNegativeLatinSquare { .. }
                    ) {
                        nls.push(fused.valencies()[i]);
                    }
                }
                None => untyped.push(fused.valencies()[i]),
            }
        }
        nls.sort();
        assert_eq!(nls, vec![18, 27]);
        assert_eq!(untyped, vec![9, 9]);
    }

    #[test]
    fn three_class_fusion_is_amorphic_nls() {
        let (s, _) = build_de_caen_van_dam().unwrap();
        let fused = is_fusion_scheme(&s, &ClassPartition::parse("1,2|3,4|5", 5).unwrap()).unwrap();
        assert_eq!(&fused.valencies()[1..], &[18, 18, 27]);
        match amorphic_check(&fused, false).unwrap() {
            AmorphicVerdict::Amorphic { shared } => {
                assert_eq!(shared, Some(SharedType::NegativeLatinSquare));
            }
            AmorphicVerdict::NotAmorphic { partition, .. } => {
                panic!("expected amorphic, failed at {partition}")
            }
        }
    }
}
