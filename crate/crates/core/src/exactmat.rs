//! Exact dense linear algebra over the rationals, sized for small
//! intersection-matrix eigenproblems (dimensions up to a couple dozen).
//!
//! Elimination uses fraction-free Bareiss steps on integer rows (rows are
//! scaled by their denominator lcm first), with rational back-substitution
//! at the end. Characteristic polynomials use Faddeev–LeVerrier.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::Error;

pub type Rat = BigRational;

pub fn rat_i64(x: i64) -> Rat {
    Rat::from_integer(BigInt::from(x))
}

/// Dense matrix of exact rationals. Entries are always in lowest terms with
/// positive denominator (maintained by `BigRational` itself).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        assert_eq!(data.len(), rows * cols);
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![Rat::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row.iter().map(|&x| rat_i64(x)));
        }
        Self::new(r, c, data)
    }

    pub fn from_bigint_rows(rows: &[Vec<BigInt>]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row.iter().map(|x| Rat::from_integer(x.clone())));
        }
        Self::new(r, c, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    /// Entries as integers, or `None` if any entry has a denominator.
    pub fn to_bigint_rows(&self) -> Option<Vec<Vec<BigInt>>> {
        if !self.is_integral() {
            return None;
        }
        Some(
            (0..self.rows)
                .map(|i| (0..self.cols).map(|j| self[(i, j)].to_integer()).collect())
                .collect(),
        )
    }

    pub fn entry_i64(&self, i: usize, j: usize) -> Option<i64> {
        use num::ToPrimitive;
        if !self[(i, j)].is_integer() {
            return None;
        }
        self[(i, j)].to_integer().to_i64()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Self::new(self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Self::new(self.rows, self.cols, data)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.rows, self.cols, self.data.iter().map(|x| x * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// det(xI - m) as a monic integer polynomial, by Faddeev–LeVerrier.
    /// Requires a square matrix with integer entries.
    pub fn char_poly(&self) -> Result<IntPolynomial, Error> {
        if !self.is_square() {
            return Err(Error::NonSquareMatrix { rows: self.rows, cols: self.cols });
        }
        let a = self.to_bigint_rows().ok_or(Error::NonIntegralEntries)?;
        let n = self.rows;
        // coeffs[k] is the coefficient of x^k
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        // m holds A*(M_{k-1} + c_{n-k+1} I); trace(m) = -k * c_{n-k}
        let mut m = a.clone();
        for k in 1..=n {
            if k > 1 {
                m = bigint_mat_mul(&a, &m);
            }
            let tr: BigInt = (0..n).map(|i| m[i][i].clone()).sum();
            let (c, rem) = num::Integer::div_rem(&(-tr), &BigInt::from(k as i64));
            debug_assert!(rem.is_zero(), "Faddeev-LeVerrier trace division must be exact");
            coeffs[n - k] = c.clone();
            for (i, row) in m.iter_mut().enumerate().take(n) {
                row[i] += &c;
            }
        }
        Ok(IntPolynomial::new(coeffs))
    }

    /// Basis of the right null space, in reduced echelon form (each basis
    /// vector has a 1 in "its" free coordinate and 0 in the other free ones).
    /// Empty for a trivial kernel.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let ech = Echelon::reduce(self);
        let pivot_set: Vec<Option<usize>> = {
            let mut map = vec![None; self.cols];
            for (r, &c) in ech.pivot_cols.iter().enumerate() {
                map[c] = Some(r);
            }
            map
        };
        let free_cols: Vec<usize> = (0..self.cols).filter(|&c| pivot_set[c].is_none()).collect();
        let mut basis = Vec::with_capacity(free_cols.len());
        for &fc in &free_cols {
            let mut v = vec![Rat::zero(); self.cols];
            v[fc] = Rat::one();
            // solve pivot rows bottom-up
            for r in (0..ech.pivot_cols.len()).rev() {
                let pc = ech.pivot_cols[r];
                let mut s = Rat::zero();
                for c in (pc + 1)..self.cols {
                    if !v[c].is_zero() && !ech.rows[r][c].is_zero() {
                        s += Rat::from_integer(ech.rows[r][c].clone()) * &v[c];
                    }
                }
                v[pc] = -s / Rat::from_integer(ech.rows[r][pc].clone());
            }
            basis.push(v);
        }
        basis
    }

    pub fn rank(&self) -> usize {
        Echelon::reduce(self).pivot_cols.len()
    }

    /// Exact inverse, or `SingularMatrix`.
    pub fn inverse(&self) -> Result<RatMatrix, Error> {
        if !self.is_square() {
            return Err(Error::NonSquareMatrix { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        // augment [A | I], eliminate on the A columns only
        let mut aug = RatMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rat::one();
        }
        let ech = Echelon::reduce_cols(&aug, n);
        if ech.pivot_cols.len() < n {
            return Err(Error::SingularMatrix);
        }
        // back-substitute each rhs column
        let mut inv = RatMatrix::zeros(n, n);
        for rhs in 0..n {
            let mut x = vec![Rat::zero(); n];
            for r in (0..n).rev() {
                let pc = ech.pivot_cols[r];
                let mut s = Rat::from_integer(ech.rows[r][n + rhs].clone());
                for c in (pc + 1)..n {
                    if !x[c].is_zero() {
                        s -= Rat::from_integer(ech.rows[r][c].clone()) * &x[c];
                    }
                }
                x[pc] = s / Rat::from_integer(ech.rows[r][pc].clone());
            }
            for i in 0..n {
                inv[(i, rhs)] = x[i].clone();
            }
        }
        Ok(inv)
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

fn bigint_mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let m = b[0].len();
    let mut out = vec![vec![BigInt::zero(); m]; n];
    for i in 0..n {
        for (k, bk) in b.iter().enumerate() {
            let aik = &a[i][k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += aik * &bk[j];
            }
        }
    }
    out
}

/// Row-echelon form produced by fraction-free (Bareiss) elimination.
/// Rows are integer vectors; `pivot_cols[r]` is the pivot column of row r.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivot_cols: Vec<usize>,
}

impl Echelon {
    fn reduce(m: &RatMatrix) -> Echelon {
        Self::reduce_cols(m, m.cols)
    }

    /// Eliminate choosing pivots only among the first `pivot_limit` columns.
    fn reduce_cols(m: &RatMatrix, pivot_limit: usize) -> Echelon {
        // scale each row to integers (does not change row space / kernel)
        let mut rows: Vec<Vec<BigInt>> = (0..m.rows)
            .map(|i| {
                let mut lcm = BigInt::one();
                for j in 0..m.cols {
                    lcm = num::Integer::lcm(&lcm, m[(i, j)].denom());
                }
                (0..m.cols)
                    .map(|j| {
                        let x = &m[(i, j)] * Rat::from_integer(lcm.clone());
                        debug_assert!(x.is_integer());
                        x.to_integer()
                    })
                    .collect()
            })
            .collect();

        let mut pivot_cols = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..pivot_limit {
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let pivot = rows[r][c].clone();
            for i in (r + 1)..rows.len() {
                for j in (c + 1)..m.cols {
                    let t = &pivot * &rows[i][j] - &rows[i][c] * &rows[r][j];
                    let (q, rem) = num::Integer::div_rem(&t, &prev);
                    debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                    rows[i][j] = q;
                }
                rows[i][c] = BigInt::zero();
            }
            prev = pivot;
            pivot_cols.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        Echelon { rows, pivot_cols }
    }
}

/// Integer polynomial, coefficients stored constant-term first.
/// The zero polynomial is the empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Trailing (leading-coefficient) zeros are trimmed.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Monic polynomial with the given integer roots.
    pub fn from_roots(roots: &[i64]) -> Self {
        let mut p = Self::new(vec![BigInt::one()]);
        for &r in roots {
            p = p.mul(&Self::from_i64(&[-r, 1]));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(vec![]);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::new(vec![]);
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i as i64 + 1))
                .collect(),
        )
    }

    /// Synthetic division by (x - r); `None` if r is not a root.
    pub fn deflate(&self, r: &BigInt) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.coeffs.len();
        let mut q = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for i in (0..n).rev() {
            let c = &self.coeffs[i] + &carry * r;
            if i == 0 {
                if !c.is_zero() {
                    return None;
                }
            } else {
                q[i - 1] = c.clone();
                carry = c;
            }
        }
        Some(Self::new(q))
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Result of integer root extraction: the roots found (sorted ascending,
/// with multiplicity) plus the degree of the residual factor that has no
/// integer roots. `roots.len() + residual_degree == deg(p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerRoots {
    pub roots: Vec<BigInt>,
    pub residual_degree: usize,
}

impl IntegerRoots {
    pub fn roots_i64(&self) -> Vec<i64> {
        use num::ToPrimitive;
        self.roots.iter().map(|r| r.to_i64().expect("root fits i64")).collect()
    }

    pub fn distinct_roots(&self) -> Vec<BigInt> {
        let mut out = self.roots.clone();
        out.dedup();
        out
    }
}

/// All integer roots of a monic nonzero polynomial, with multiplicity.
///
/// Roots of the squarefree part are isolated by sign bisection inside the
/// Fujiwara bound, so the cost is logarithmic in the root bound rather
/// than proportional to it or to a divisor count.
pub fn integer_roots(p: &IntPolynomial) -> Result<IntegerRoots, Error> {
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let degree = p.degree().unwrap();
    if degree == 0 {
        return Ok(IntegerRoots { roots: vec![], residual_degree: 0 });
    }

    // strip x^m
    let mut work = p.clone();
    let mut zero_mult = 0usize;
    while work.coeffs()[0].is_zero() {
        work = work.deflate(&BigInt::zero()).expect("zero is a root");
        zero_mult += 1;
        if work.degree() == Some(0) {
            break;
        }
    }

    let mut roots: Vec<BigInt> = vec![BigInt::zero(); zero_mult];
    if work.degree().unwrap_or(0) > 0 {
        let sf = squarefree_part(&work);
        let bound = fujiwara_bound(&sf);
        let mut found = isolate_integer_roots(&sf, &(-bound.clone()), &bound);
        found.sort();
        for r in found {
            // multiplicity in the original (zero-stripped) polynomial
            while let Some(q) = work.deflate(&r) {
                roots.push(r.clone());
                work = q;
            }
        }
    }
    roots.sort();
    let residual_degree = degree - roots.len();
    Ok(IntegerRoots { roots, residual_degree })
}

/// p / gcd(p, p'), monic. Computed over Q with a final clearing to integers.
fn squarefree_part(p: &IntPolynomial) -> IntPolynomial {
    let d = p.derivative();
    let g = rat_poly_gcd(&to_rat_poly(p), &to_rat_poly(&d));
    let q = rat_poly_div_exact(&to_rat_poly(p), &g);
    // p monic and g monic make the quotient monic with integer coefficients
    IntPolynomial::new(
        q.iter()
            .map(|c| {
                debug_assert!(c.is_integer(), "squarefree part must be integral");
                c.to_integer()
            })
            .collect(),
    )
}

fn to_rat_poly(p: &IntPolynomial) -> Vec<Rat> {
    p.coeffs().iter().map(|c| Rat::from_integer(c.clone())).collect()
}

fn rat_poly_trim(p: &mut Vec<Rat>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn rat_poly_monic(p: &mut [Rat]) {
    if let Some(lead) = p.last().cloned() {
        if !lead.is_one() {
            for c in p.iter_mut() {
                *c = &*c / &lead;
            }
        }
    }
}

fn rat_poly_rem(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut r = a.to_vec();
    rat_poly_trim(&mut r);
    let db = b.len() - 1;
    let lead = b.last().unwrap();
    while r.len() > db {
        let k = r.len() - 1 - db;
        let f = r.last().unwrap() / lead;
        for i in 0..=db {
            let t = &b[i] * &f;
            r[k + i] -= t;
        }
        rat_poly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn rat_poly_gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    rat_poly_trim(&mut x);
    rat_poly_trim(&mut y);
    while !y.is_empty() {
        let r = rat_poly_rem(&x, &y);
        x = y;
        y = r;
    }
    rat_poly_monic(&mut x);
    x
}

fn rat_poly_div_exact(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut r = a.to_vec();
    rat_poly_trim(&mut r);
    let db = b.len() - 1;
    let lead = b.last().unwrap();
    let mut q = vec![Rat::zero(); r.len().saturating_sub(db)];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let f = r.last().unwrap() / lead;
        q[k] = f.clone();
        for i in 0..=db {
            let t = &b[i] * &f;
            r[k + i] -= t;
        }
        rat_poly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    debug_assert!(r.is_empty(), "division must be exact");
    q
}

/// Fujiwara root bound for a monic polynomial: all roots have absolute
/// value at most 2*max_k |a_{n-k}|^(1/k). Returned rounded up.
fn fujiwara_bound(p: &IntPolynomial) -> BigInt {
    let n = p.degree().unwrap();
    let mut best = BigInt::one();
    for k in 1..=n {
        let a = p.coeffs()[n - k].abs();
        if a.is_zero() {
            continue;
        }
        let root = a.nth_root(k as u32) + 1u32;
        if root > best {
            best = root;
        }
    }
    best * 2
}

/// Integer roots of a squarefree monic polynomial within [-bound, bound],
/// by Sturm-count bisection. Interval endpoints are kept at half-integers:
/// a monic integer polynomial has no non-integer rational roots, so the
/// chain never vanishes at an endpoint and the counts are unambiguous.
fn isolate_integer_roots(p: &IntPolynomial, lo: &BigInt, hi: &BigInt) -> Vec<BigInt> {
    let chain = sturm_chain(p);
    let variations = |k: &BigInt| -> usize {
        // evaluate the chain at k + 1/2
        let x = Rat::new(k * 2 + 1, BigInt::from(2));
        let mut count = 0;
        let mut last: Option<bool> = None;
        for q in &chain {
            let mut acc = Rat::zero();
            for c in q.iter().rev() {
                acc = acc * &x + c;
            }
            if acc.is_zero() {
                continue;
            }
            let pos = acc.is_positive();
            if let Some(prev) = last {
                if prev != pos {
                    count += 1;
                }
            }
            last = Some(pos);
        }
        count
    };

    // interval (k1 + 1/2, k2 + 1/2) holds the integers k1+1 ..= k2
    let mut out = Vec::new();
    let k_lo = lo - 1;
    let mut stack = vec![(k_lo, hi.clone())];
    while let Some((k1, k2)) = stack.pop() {
        if k1 >= k2 {
            continue;
        }
        if variations(&k1) == variations(&k2) {
            continue; // no real roots inside
        }
        if &k1 + 1 == k2 {
            if p.eval(&k2).is_zero() {
                out.push(k2);
            }
            continue;
        }
        let mid: BigInt = (&k1 + &k2) / 2;
        stack.push((mid.clone(), k2));
        stack.push((k1, mid));
    }
    out.sort();
    out.dedup();
    out
}

/// Sturm chain of p as rational polynomials: p, p', then negated remainders.
fn sturm_chain(p: &IntPolynomial) -> Vec<Vec<Rat>> {
    let mut chain = vec![to_rat_poly(p)];
    let d = to_rat_poly(&p.derivative());
    if d.is_empty() {
        return chain;
    }
    chain.push(d);
    loop {
        let k = chain.len();
        let mut r = rat_poly_rem(&chain[k - 2], &chain[k - 1]);
        if r.is_empty() {
            break;
        }
        for c in r.iter_mut() {
            *c = -c.clone();
        }
        chain.push(r);
    }
    chain
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_poly_1x1() {
        let m = RatMatrix::from_i64_rows(&[vec![5]]);
        assert_eq!(m.char_poly().unwrap(), IntPolynomial::from_i64(&[-5, 1]));
    }

    #[test]
    fn char_poly_identity_2x2() {
        let m = RatMatrix::identity(2);
        assert_eq!(m.char_poly().unwrap(), IntPolynomial::from_i64(&[1, -2, 1]));
    }

    #[test]
    fn char_poly_rejects_non_square() {
        let m = RatMatrix::zeros(2, 3);
        assert!(matches!(m.char_poly(), Err(Error::NonSquareMatrix { .. })));
    }

    #[test]
    fn char_poly_rejects_rationals() {
        let mut m = RatMatrix::identity(2);
        m[(0, 0)] = Rat::new(BigInt::from(1), BigInt::from(2));
        assert!(matches!(m.char_poly(), Err(Error::NonIntegralEntries)));
    }

    #[test]
    fn integer_roots_perfect_square() {
        let p = IntPolynomial::from_i64(&[1, -2, 1]); // (x-1)^2
        let r = integer_roots(&p).unwrap();
        assert_eq!(r.roots_i64(), vec![1, 1]);
        assert_eq!(r.residual_degree, 0);
    }

    #[test]
    fn integer_roots_golden_ratio() {
        let p = IntPolynomial::from_i64(&[-1, -1, 1]); // x^2 - x - 1
        let r = integer_roots(&p).unwrap();
        assert!(r.roots.is_empty());
        assert_eq!(r.residual_degree, 2);
    }

    #[test]
    fn integer_roots_mixed() {
        // x^2 (x-3)^2 (x+7) (x^2+x+1)
        let p = IntPolynomial::from_roots(&[0, 0, 3, 3, -7]).mul(&IntPolynomial::from_i64(&[1, 1, 1]));
        let r = integer_roots(&p).unwrap();
        assert_eq!(r.roots_i64(), vec![-7, 0, 0, 3, 3]);
        assert_eq!(r.residual_degree, 2);
    }

    #[test]
    fn integer_roots_requires_monic() {
        let p = IntPolynomial::from_i64(&[1, 2]);
        assert!(matches!(integer_roots(&p), Err(Error::NotMonic)));
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        assert!(RatMatrix::identity(3).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_zero_matrix() {
        let b = RatMatrix::zeros(2, 2).kernel_basis();
        assert_eq!(b.len(), 2);
        assert_eq!(b[0], vec![rat_i64(1), rat_i64(0)]);
        assert_eq!(b[1], vec![rat_i64(0), rat_i64(1)]);
    }

    #[test]
    fn kernel_vectors_are_in_the_null_space() {
        let m = RatMatrix::from_i64_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 1);
        for v in &basis {
            for i in 0..m.rows() {
                let s: Rat = (0..m.cols()).map(|j| &m[(i, j)] * &v[j]).sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn inverse_identity() {
        let m = RatMatrix::identity(4);
        assert_eq!(m.inverse().unwrap(), m);
    }

    #[test]
    fn inverse_diagonal() {
        let m = RatMatrix::from_i64_rows(&[vec![2, 0], vec![0, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv[(0, 0)], Rat::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!(inv[(1, 1)], Rat::new(BigInt::from(1), BigInt::from(4)));
        assert!(inv[(0, 1)].is_zero() && inv[(1, 0)].is_zero());
    }

    #[test]
    fn inverse_singular() {
        let m = RatMatrix::from_i64_rows(&[vec![1, 2], vec![2, 4]]);
        assert!(matches!(m.inverse(), Err(Error::SingularMatrix)));
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let m = RatMatrix::from_i64_rows(&[vec![2, 1, 0], vec![-3, 5, 7], vec![1, 1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv.mul(&m), RatMatrix::identity(3));
        assert_eq!(m.mul(&inv), RatMatrix::identity(3));
    }

    #[test]
    fn cayley_hamilton_spot_checks() {
        // deterministic pseudo-random integer matrices up to 6x6
        let mut seed = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed % 19) as i64 - 9
        };
        for n in 1..=6 {
            let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| next()).collect()).collect();
            let m = RatMatrix::from_i64_rows(&rows);
            let p = m.char_poly().unwrap();
            // evaluate p at m
            let mut acc = RatMatrix::zeros(n, n);
            let mut pow = RatMatrix::identity(n);
            for c in p.coeffs() {
                acc = acc.add(&pow.scale(&Rat::from_integer(c.clone())));
                pow = pow.mul(&m);
            }
            assert!(acc.is_zero(), "Cayley-Hamilton failed for n={n}");
        }
    }
}
