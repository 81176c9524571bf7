//! Amorphic schemes built from products: the parallel-class scheme of
//! AG(2,8), a Kronecker-style product of it with the cyclotomic scheme on
//! GF(16) in the manner of Polhill, and the folded halved 12-cube distance
//! scheme that shares the parameters of the product's merged relation.

use crate::error::Error;
use crate::fusion::{is_fusion_scheme, ClassPartition};
use crate::gf::Field;
use crate::scheme::{ColorMatrix, Scheme};

use super::build_cyclotomic;

/// The 9-class scheme on GF(8)^2 whose classes are the parallel classes of
/// lines of AG(2,8): slope infinity first, then the field slopes in
/// element order. Every relation is a disjoint union of eight 8-cliques.
pub fn build_ag28_scheme() -> Result<Scheme, Error> {
    let field = Field::of_order(8)?;
    let colors = ColorMatrix::from_fn(64, 9, |x, y| {
        let (a1, b1) = ((x / 8) as u64, (x % 8) as u64);
        let (a2, b2) = ((y / 8) as u64, (y % 8) as u64);
        if a1 == a2 {
            1
        } else {
            let slope = field
                .mul(field.sub(b2, b1), field.inv(field.sub(a2, a1)).expect("a1 != a2"));
            (2 + slope) as u8
        }
    })?;
    Scheme::verify(colors).map_err(Error::from)
}

/// The standard 4-class fusion of the AG(2,8) scheme: the first three
/// parallel classes merge into a valency-21 relation, the rest pair up
/// into three valency-14 relations.
pub fn ag28_four_class_fusion(ag: &Scheme) -> Result<Scheme, Error> {
    is_fusion_scheme(ag, &ClassPartition::parse("1,2,3|4,5|6,7|8,9", 9)?)
}

/// Amorphic 4-class scheme on 1024 vertices: a patterned Kronecker product
/// of the 4-class AG(2,8) fusion (B_1..B_4, valencies 21,14,14,14) with the
/// cyclotomic 3-class scheme on GF(16) (C_1..C_3, all Clebsch graphs):
///
///   A_1 = I@B_1 + C_1@B_2     + C_2@B_3     + C_3@B_4
///   A_2 = I@B_2 + C_1@(B_1+I) + C_2@B_4     + C_3@B_3
///   A_3 = I@B_3 + C_1@B_4     + C_2@(B_1+I) + C_3@B_2
///   A_4 = I@B_4 + C_1@B_3     + C_2@B_2     + C_3@(B_1+I)
///
/// where @ is the Kronecker product. The merged relation A_1 + A_2 is
/// strongly regular of negative Latin square type with valency 495.
pub fn build_polhill_product() -> Result<Scheme, Error> {
    let ag = build_ag28_scheme()?;
    let b = ag28_four_class_fusion(&ag)?;
    let c = build_cyclotomic(16, 3)?;
    // assignment[c_class][b_class] = product class; b_class 0 means the
    // identity slot, which joins B_1 wherever B_1 + I appears
    let assignment: [[u8; 5]; 4] = [
        [0, 1, 2, 3, 4], // within a C-block: I @ B_j
        [2, 2, 1, 4, 3],
        [3, 3, 4, 1, 2],
        [4, 4, 3, 2, 1],
    ];
    let colors = ColorMatrix::from_fn(1024, 4, |x, y| {
        let (cx, bx) = (x / 64, x % 64);
        let (cy, by) = (y / 64, y % 64);
        let cc = if cx == cy { 0 } else { c.colors().class_of(cx, cy) };
        let bb = b.colors().class_of(bx, by);
        debug_assert!(cc != 0 || bb != 0);
        assignment[cc][bb]
    })?;
    Scheme::verify(colors).map_err(Error::from)
}

/// Distance scheme of the folded halved 12-cube: vertices are antipodal
/// pairs of even-weight binary words of length 12, classes by minimum
/// Hamming distance {2,10}, {4,8} and {6}. Its distance-2 relation is
/// strongly regular of negative Latin square type with valency 495.
pub fn build_folded_halved_cube() -> Result<Scheme, Error> {
    // canonical representative of each antipodal pair: the word with top
    // bit clear, i.e. all even-weight words below 2^11
    let reps: Vec<u16> = (0u16..2048).filter(|w| w.count_ones() % 2 == 0).collect();
    debug_assert_eq!(reps.len(), 1024);
    let colors = ColorMatrix::from_fn(1024, 3, |x, y| {
        let d = (reps[x] ^ reps[y]).count_ones();
        match d.min(12 - d) {
            2 => 1,
            4 => 2,
            6 => 3,
            other => unreachable!("even-weight words at even distance, got {other}"),
        }
    })?;
    Scheme::verify(colors).map_err(Error::from)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::amorphic_check;
    use crate::spreads::is_square_spread;

    #[test]
    fn ag28_is_an_amorphic_spread_scheme() {
        let ag = build_ag28_scheme().unwrap();
        assert_eq!(ag.class_count(), 9);
        assert_eq!(&ag.valencies()[1..], &[7; 9]);
        for i in 1..=9 {
            let g = ag.relation_graph(i).unwrap();
            assert_eq!(is_square_spread(&g).unwrap().unwrap().clique_order(), 8);
        }
        assert!(amorphic_check(&ag, false).unwrap().is_amorphic());
        let fused = ag28_four_class_fusion(&ag).unwrap();
        assert_eq!(&fused.valencies()[1..], &[21, 14, 14, 14]);
    }
}
