//! Named builders for the schemes and graphs of the corpus. Every builder
//! returns a verified `Scheme` (construction bugs surface as verification
//! failures, not as wrong data downstream).

mod forms;
mod gq;
mod pg24;
mod products;

pub use forms::{build_bilinear_forms, build_brouwer_pasechnik, BilinearForms, BrouwerPasechnik};
pub use gq::{build_sylvester, Gq22};
pub use pg24::{build_de_caen_van_dam, Pg24Partition};
pub use products::{build_ag28_scheme, build_folded_halved_cube, build_polhill_product};

use crate::error::Error;
use crate::gf::Field;
use crate::scheme::{ColorMatrix, Scheme};

pub const VERTEX_GUARD: u64 = 1 << 16;

/// The 1-class scheme on v vertices (the complete graph).
pub fn one_class_scheme(v: usize) -> Result<Scheme, Error> {
    let colors = ColorMatrix::from_fn(v, 1, |_, _| 1)?;
    Scheme::verify(colors).map_err(Error::from)
}

/// Hamming scheme: words of length `diameter` over a q-letter alphabet,
/// classes by Hamming distance.
pub fn build_hamming(diameter: u32, q: u64) -> Result<Scheme, Error> {
    if q < 2 || diameter < 1 {
        return Err(Error::BadParameter("need q >= 2 and diameter >= 1".into()));
    }
    let v = q.checked_pow(diameter).filter(|&v| v <= VERTEX_GUARD).ok_or_else(|| {
        Error::SizeGuard(format!("q^diameter exceeds {VERTEX_GUARD}"))
    })?;
    let dist = |mut x: u64, mut y: u64| {
        let mut d = 0u8;
        for _ in 0..diameter {
            if x % q != y % q {
                d += 1;
            }
            x /= q;
            y /= q;
        }
        d
    };
    let colors = ColorMatrix::from_fn(v as usize, diameter as usize, |x, y| {
        dist(x as u64, y as u64)
    })?;
    Scheme::verify(colors).map_err(Error::from)
}

/// The 2-class scheme of the rook's graph L_2(n) and its complement.
pub fn build_lattice_scheme(n: usize) -> Result<Scheme, Error> {
    if n < 2 {
        return Err(Error::BadParameter("lattice needs n >= 2".into()));
    }
    let colors = ColorMatrix::from_fn(n * n, 2, |x, y| {
        if x / n == y / n || x % n == y % n {
            1
        } else {
            2
        }
    })?;
    Scheme::verify(colors).map_err(Error::from)
}

/// The 3-class scheme of the complete bipartite graph K_{n,n} minus a
/// perfect matching: classes are cross-side unmatched pairs, same-side
/// pairs, and matched pairs, with valencies (n-1, n-1, 1).
pub fn build_knn_minus_matching(n: usize) -> Result<Scheme, Error> {
    if n < 2 {
        return Err(Error::BadParameter("need n >= 2".into()));
    }
    let side = |x: usize| x / n;
    let colors = ColorMatrix::from_fn(2 * n, 3, |x, y| {
        if side(x) == side(y) {
            2
        } else if x % n == y % n {
            3
        } else {
            1
        }
    })?;
    Scheme::verify(colors).map_err(Error::from)
}

/// Wreath product: copies of the inner scheme on blocks indexed by the
/// outer scheme's vertices, outer classes blown up by all-ones blocks.
/// Outer classes come first in the result's class order.
pub fn build_wreath(outer: &Scheme, inner: &Scheme) -> Result<Scheme, Error> {
    let m = outer.vertex_count();
    let n = inner.vertex_count();
    let d_out = outer.class_count();
    let d_in = inner.class_count();
    if (m * n) as u64 > VERTEX_GUARD {
        return Err(Error::SizeGuard(format!("wreath product exceeds {VERTEX_GUARD} vertices")));
    }
    let colors = ColorMatrix::from_fn(m * n, d_out + d_in, |x, y| {
        let (bx, ix) = (x / n, x % n);
        let (by, iy) = (y / n, y % n);
        if bx == by {
            (d_out + inner.colors().class_of(ix, iy)) as u8
        } else {
            outer.colors().class_of(bx, by) as u8
        }
    })?;
    Scheme::verify(colors).map_err(Error::from)
}

/// The wreath family on n^2 vertices: a 1-class scheme on n/2 blocks over
/// the 3-class scheme of K_{n,n} minus a matching.
pub fn build_wreath_family(n: usize) -> Result<Scheme, Error> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::BadParameter("wreath family needs even n >= 4".into()));
    }
    let outer = one_class_scheme(n / 2)?;
    let inner = build_knn_minus_matching(n)?;
    build_wreath(&outer, &inner)
}

/// A Latin square of order n with symbols 0..n-1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinSquare {
    n: usize,
    cells: Vec<u8>,
}

impl LatinSquare {
    pub fn new(n: usize, cells: Vec<u8>) -> Result<LatinSquare, Error> {
        if n < 2 || n > 255 || cells.len() != n * n {
            return Err(Error::BadParameter("bad Latin square dimensions".into()));
        }
        for r in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for c in 0..n {
                let a = cells[r * n + c] as usize;
                let b = cells[c * n + r] as usize;
                if a >= n || row_seen[a] || col_seen[b] {
                    return Err(Error::BadParameter(format!(
                        "not a Latin square at row/col {r}"
                    )));
                }
                row_seen[a] = true;
                col_seen[b] = true;
            }
        }
        Ok(LatinSquare { n, cells })
    }

    /// The linear square L(x,y) = x + a*y over a finite field, defined for
    /// any nonzero a; distinct a give mutually orthogonal squares.
    pub fn from_field_linear(field: &Field, a: u64) -> Result<LatinSquare, Error> {
        if a == 0 || a >= field.order() {
            return Err(Error::BadParameter("coefficient must be a nonzero field element".into()));
        }
        let n = field.order() as usize;
        let cells = (0..n * n)
            .map(|i| {
                let (x, y) = ((i / n) as u64, (i % n) as u64);
                field.add(x, field.mul(a, y)) as u8
            })
            .collect();
        LatinSquare::new(n, cells)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn symbol(&self, r: usize, c: usize) -> u8 {
        self.cells[r * self.n + c]
    }

    pub fn is_orthogonal_to(&self, other: &LatinSquare) -> bool {
        if self.n != other.n {
            return false;
        }
        let mut seen = vec![false; self.n * self.n];
        for i in 0..self.n * self.n {
            let pair = self.cells[i] as usize * self.n + other.cells[i] as usize;
            if seen[pair] {
                return false;
            }
            seen[pair] = true;
        }
        true
    }
}

/// Latin square type scheme on the n^2 cells: same row, same column, same
/// symbol per square, plus a remainder class when the squares do not
/// complete a full set. All relations are of Latin square type and the
/// scheme is amorphic.
pub fn build_latin_square_scheme(squares: &[LatinSquare]) -> Result<Scheme, Error> {
    if squares.is_empty() {
        return Err(Error::BadParameter("need at least one Latin square".into()));
    }
    let n = squares[0].n;
    for (i, sq) in squares.iter().enumerate() {
        if sq.n != n {
            return Err(Error::BadParameter("squares have mixed orders".into()));
        }
        for (j, other) in squares.iter().enumerate().skip(i + 1) {
            if !sq.is_orthogonal_to(other) {
                return Err(Error::BadParameter(format!(
                    "squares {i} and {j} are not orthogonal"
                )));
            }
        }
    }
    let m = squares.len();
    if m > n - 1 {
        return Err(Error::BadParameter(format!("more than n-1 = {} squares", n - 1)));
    }
    let has_remainder = m < n - 1;
    let d = 2 + m + usize::from(has_remainder);
    let colors = ColorMatrix::from_fn(n * n, d, |x, y| {
        let (rx, cx) = (x / n, x % n);
        let (ry, cy) = (y / n, y % n);
        if rx == ry {
            return 1;
        }
        if cx == cy {
            return 2;
        }
        for (s, sq) in squares.iter().enumerate() {
            if sq.symbol(rx, cx) == sq.symbol(ry, cy) {
                return (3 + s) as u8;
            }
        }
        debug_assert!(has_remainder);
        d as u8
    })?;
    Scheme::verify(colors).map_err(Error::from)
}

/// Cyclotomic scheme on GF(q): classes are the cosets of the index-e
/// subgroup of the multiplicative group, as difference sets. Symmetry
/// requires -1 in the subgroup: (q-1)/e even or characteristic 2.
pub fn build_cyclotomic(q: u64, e: u64) -> Result<Scheme, Error> {
    let field = Field::of_order(q)?;
    if e == 0 || (q - 1) % e != 0 {
        return Err(Error::BadParameter(format!("{e} does not divide q-1 = {}", q - 1)));
    }
    if field.characteristic() != 2 && ((q - 1) / e) % 2 != 0 {
        return Err(Error::BadParameter(format!(
            "classes are not symmetric: (q-1)/e = {} is odd and characteristic is odd",
            (q - 1) / e
        )));
    }
    let colors = ColorMatrix::from_fn(q as usize, e as usize, |x, y| {
        let diff = field.sub(x as u64, y as u64);
        (field.log(diff) % e + 1) as u8
    })?;
    Scheme::verify(colors).map_err(Error::from)
}

pub fn vector_encode(components: &[u64], q: u64) -> u64 {
    components.iter().fold(0, |acc, &c| acc * q + c)
}

pub fn vector_decode(mut idx: u64, q: u64, dim: usize) -> Vec<u64> {
    let mut out = vec![0; dim];
    for c in out.iter_mut().rev() {
        *c = idx % q;
        idx /= q;
    }
    out
}

/// Translation scheme on GF(q)^dim: color x,y by the part containing
/// x - y. Every part must be closed under nonzero scalar multiplication
/// (which includes negation), so the relations are symmetric and
/// translation invariant.
pub fn build_translation_scheme(
    field: &Field,
    dim: usize,
    parts: &[Vec<u64>],
) -> Result<Scheme, Error> {
    let q = field.order();
    let v = q.checked_pow(dim as u32).filter(|&v| v <= VERTEX_GUARD).ok_or_else(|| {
        Error::SizeGuard(format!("q^dim exceeds {VERTEX_GUARD}"))
    })?;
    let mut part_of = vec![usize::MAX; v as usize];
    for (pi, part) in parts.iter().enumerate() {
        for &w in part {
            if w == 0 || w >= v {
                return Err(Error::BadParameter(format!("vector {w} out of range 1..{v}")));
            }
            if part_of[w as usize] != usize::MAX {
                return Err(Error::BadParameter(format!("vector {w} in two parts")));
            }
            part_of[w as usize] = pi;
        }
    }
    if let Some(w) = (1..v).find(|&w| part_of[w as usize] == usize::MAX) {
        return Err(Error::BadParameter(format!("vector {w} not covered by any part")));
    }
    // scalar closure
    for w in 1..v {
        let comps = vector_decode(w, q, dim);
        for c in 2..q {
            let scaled: Vec<u64> = comps.iter().map(|&x| field.mul(c, x)).collect();
            let sw = vector_encode(&scaled, q);
            if part_of[sw as usize] != part_of[w as usize] {
                return Err(Error::BadParameter(format!(
                    "part of vector {w} is not closed under scalar {c}"
                )));
            }
        }
    }
    let sub = |x: u64, y: u64| {
        let xs = vector_decode(x, q, dim);
        let ys = vector_decode(y, q, dim);
        let diff: Vec<u64> = xs.iter().zip(&ys).map(|(&a, &b)| field.sub(a, b)).collect();
        vector_encode(&diff, q)
    };
    let colors = ColorMatrix::from_fn(v as usize, parts.len(), |x, y| {
        (part_of[sub(x as u64, y as u64) as usize] + 1) as u8
    })?;
    Scheme::verify(colors).map_err(Error::from)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::{amorphic_check, is_fusion_scheme, ClassPartition};
    use crate::quotient::lattice_idempotent_count;
    use crate::scheme::drg_array;
    use crate::srg::{classify_type, srg_params, SrgType};

    #[test]
    fn hamming_valencies() {
        let h34 = build_hamming(3, 4).unwrap();
        assert_eq!(&h34.valencies()[1..], &[9, 27, 27]);
        assert_eq!(h34.p_number(1, 1, 1), 2); // lambda of the Hamming graph

        let h24 = build_hamming(2, 4).unwrap();
        let p = srg_params(&h24.relation_graph(1).unwrap()).unwrap();
        let p = p.params().unwrap();
        assert_eq!((p.v, p.k, p.lambda, p.mu), (16, 6, 2, 2));

        let h32 = build_hamming(3, 2).unwrap();
        assert!(h32.spectrum().unwrap().p.is_integral());

        assert!(matches!(build_hamming(3, 9999), Err(Error::SizeGuard(_))));
    }

    #[test]
    fn lattice_scheme_basics() {
        let s = build_lattice_scheme(4).unwrap();
        let p = srg_params(&s.relation_graph(1).unwrap()).unwrap();
        let p = p.params().unwrap();
        assert_eq!((p.v, p.k, p.lambda, p.mu), (16, 6, 2, 2));
        let s3 = build_lattice_scheme(3).unwrap();
        let c = srg_params(&s3.relation_graph(2).unwrap()).unwrap();
        let c = c.params().unwrap();
        assert_eq!((c.v, c.k, c.lambda, c.mu), (9, 4, 1, 2));
        assert_eq!(classify_type(c), SrgType::Conference);
        let report = lattice_idempotent_count(&build_lattice_scheme(5).unwrap(), 1).unwrap();
        assert_eq!(report.count, 1);
    }

    #[test]
    fn knn_minus_matching_family() {
        let s = build_knn_minus_matching(4).unwrap();
        assert_eq!(&s.valencies()[1..], &[3, 3, 1]);
        let arr = drg_array(&s.relation_graph(1).unwrap()).unwrap().unwrap();
        assert_eq!((arr.b.as_slice(), arr.c.as_slice()), (&[3, 2, 1][..], &[1, 2, 3][..]));

        let s2 = build_knn_minus_matching(2).unwrap();
        assert_eq!(&s2.valencies()[1..], &[1, 1, 1]);

        // K_{3,3} minus a matching is the 6-cycle
        let s3 = build_knn_minus_matching(3).unwrap();
        let arr = drg_array(&s3.relation_graph(1).unwrap()).unwrap().unwrap();
        assert_eq!((arr.b.as_slice(), arr.c.as_slice()), (&[2, 1, 1][..], &[1, 1, 2][..]));
    }

    #[test]
    fn wreath_family_eigenmatrix_formula() {
        for n in [4i64, 6] {
            let s = build_wreath_family(n as usize).unwrap();
            let spec = s.spectrum().unwrap();
            let mut expect = vec![
                vec![1, (n / 2 - 1) * 2 * n, n - 1, n - 1, 1],
                vec![1, -2 * n, n - 1, n - 1, 1],
                vec![1, 0, 1, -1, -1],
                vec![1, 0, -1, -1, 1],
                vec![1, 0, 1 - n, n - 1, -1],
            ];
            let mut got = spec.p_rows_i64();
            expect.sort();
            got.sort();
            assert_eq!(got, expect, "wreath family at n={n}");
        }
    }

    #[test]
    fn latin_square_scheme_types() {
        let f = Field::of_order(4).unwrap();
        let sq = LatinSquare::from_field_linear(&f, 1).unwrap();
        let s = build_latin_square_scheme(std::slice::from_ref(&sq)).unwrap();
        assert_eq!(s.class_count(), 4); // rows, columns, symbols, remainder
        assert_eq!(&s.valencies()[1..], &[3, 3, 3, 6]);
        for i in 1..=3 {
            let p = srg_params(&s.relation_graph(i).unwrap()).unwrap();
            assert_eq!(
                classify_type(p.params().unwrap()),
                SrgType::StrictlyLatinSquare { n: 4, t: 1 }
            );
        }
        let p = srg_params(&s.relation_graph(4).unwrap()).unwrap();
        assert_eq!(
            classify_type(p.params().unwrap()),
            SrgType::StrictlyLatinSquare { n: 4, t: 2 }
        );
        assert!(amorphic_check(&s, false).unwrap().is_amorphic());

        // two orthogonal squares
        let sq2 = LatinSquare::from_field_linear(&f, 2).unwrap();
        assert!(sq.is_orthogonal_to(&sq2));
        let s2 = build_latin_square_scheme(&[sq.clone(), sq2]).unwrap();
        assert_eq!(s2.class_count(), 5);
        assert!(amorphic_check(&s2, false).unwrap().is_amorphic());

        // fusing rows and columns gives the lattice relation
        let fused = is_fusion_scheme(
            &s,
            &ClassPartition::parse("1,2|3|4", s.class_count()).unwrap(),
        )
        .unwrap();
        let report = lattice_idempotent_count(&fused, 1).unwrap();
        assert_eq!(report.count, 1);
        assert!(report.identity_verified);
    }

    #[test]
    fn orthogonality_is_checked() {
        let f = Field::of_order(4).unwrap();
        let sq = LatinSquare::from_field_linear(&f, 1).unwrap();
        assert!(build_latin_square_scheme(&[sq.clone(), sq]).is_err());
    }

    #[test]
    fn cyclotomic_schemes() {
        // GF(16), e=3: all three classes are Clebsch graphs
        let s = build_cyclotomic(16, 3).unwrap();
        for i in 1..=3 {
            let p = srg_params(&s.relation_graph(i).unwrap()).unwrap();
            let p = p.params().unwrap();
            assert_eq!((p.v, p.k, p.lambda, p.mu), (16, 5, 0, 2));
            assert_eq!(
                classify_type(p),
                SrgType::StrictlyNegativeLatinSquare { n: -4, t: -1 }
            );
        }
        // GF(9), e=2: the Paley conference graph
        let paley = build_cyclotomic(9, 2).unwrap();
        let p = srg_params(&paley.relation_graph(1).unwrap()).unwrap();
        assert_eq!(classify_type(p.params().unwrap()), SrgType::Conference);

        // odd coset size in odd characteristic is rejected (-1 outside the
        // subgroup makes the relations directed)
        assert!(build_cyclotomic(7, 2).is_err());
        assert!(build_cyclotomic(13, 2).is_ok());
    }

    #[test]
    fn translation_scheme_basics() {
        let f = Field::of_order(2).unwrap();
        // all nonzero vectors in one part: the 1-class scheme on 8 vertices
        let s = build_translation_scheme(&f, 3, &[(1..8).collect()]).unwrap();
        assert_eq!(s.class_count(), 1);
        assert_eq!(s.vertex_count(), 8);
    }

    #[test]
    fn translation_scheme_rejects_unclosed_parts() {
        let f = Field::of_order(4).unwrap();
        // {1} alone is not closed under multiplication by 2 or 3
        let rest: Vec<u64> = (2..64).collect();
        assert!(build_translation_scheme(&f, 3, &[vec![1], rest]).is_err());
    }
}
