//! Symmetric association schemes: the vertex-pair coloring, axiom
//! verification through packed-row matrix products, the intersection
//! tensor, and exact spectral data (eigenmatrices P and Q, multiplicities).

use std::sync::OnceLock;

use num::{BigInt, One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::exactmat::{integer_roots, rat_i64, Rat, RatMatrix};
use crate::graph::{and_popcount, Graph};

/// A v-by-v symmetric coloring of vertex pairs with colors 0..=d, color 0
/// exactly on the diagonal and every color 1..=d used somewhere. This is
/// the universal raw representation; verification turns it into a `Scheme`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorMatrix {
    v: usize,
    d: usize,
    cells: Vec<u8>,
}

impl ColorMatrix {
    pub fn new(v: usize, d: usize, cells: Vec<u8>) -> Result<ColorMatrix, Error> {
        if v < 2 {
            return Err(Error::BadColorMatrix(format!("need at least 2 vertices, got {v}")));
        }
        if d < 1 {
            return Err(Error::BadColorMatrix("need at least 1 class".into()));
        }
        if d > u8::MAX as usize {
            return Err(Error::BadColorMatrix(format!("class count {d} exceeds 255")));
        }
        if cells.len() != v * v {
            return Err(Error::BadColorMatrix(format!(
                "cell count {} does not match v^2 = {}",
                cells.len(),
                v * v
            )));
        }
        let mut seen = vec![false; d + 1];
        for x in 0..v {
            for y in 0..v {
                let c = cells[x * v + y] as usize;
                if c > d {
                    return Err(Error::BadColorMatrix(format!(
                        "cell ({x},{y}) has class {c} > d = {d}"
                    )));
                }
                if x == y && c != 0 {
                    return Err(Error::BadColorMatrix(format!(
                        "diagonal cell ({x},{x}) has class {c}, expected 0"
                    )));
                }
                if x != y && c == 0 {
                    return Err(Error::BadColorMatrix(format!(
                        "off-diagonal cell ({x},{y}) has class 0"
                    )));
                }
                if cells[x * v + y] != cells[y * v + x] {
                    return Err(Error::BadColorMatrix(format!(
                        "cells ({x},{y}) and ({y},{x}) differ"
                    )));
                }
                seen[c] = true;
            }
        }
        if let Some(c) = (1..=d).find(|&c| !seen[c]) {
            return Err(Error::BadColorMatrix(format!("class {c} is empty")));
        }
        Ok(ColorMatrix { v, d, cells })
    }

    /// Build from a color function on ordered pairs; f is consulted for
    /// x < y only and mirrored.
    pub fn from_fn(
        v: usize,
        d: usize,
        mut f: impl FnMut(usize, usize) -> u8,
    ) -> Result<ColorMatrix, Error> {
        let mut cells = vec![0u8; v * v];
        for x in 0..v {
            for y in (x + 1)..v {
                let c = f(x, y);
                cells[x * v + y] = c;
                cells[y * v + x] = c;
            }
        }
        ColorMatrix::new(v, d, cells)
    }

    pub fn vertex_count(&self) -> usize {
        self.v
    }

    pub fn class_count(&self) -> usize {
        self.d
    }

    pub fn class_of(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.v + y] as usize
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    /// Adjacency structure of one class, 1 <= i <= d.
    pub fn class_graph(&self, i: usize) -> Result<Graph, Error> {
        if i == 0 || i > self.d {
            return Err(Error::ClassIndexOutOfRange { index: i, max: self.d });
        }
        let mut g = Graph::new(self.v);
        for x in 0..self.v {
            for y in (x + 1)..self.v {
                if self.class_of(x, y) == i {
                    g.set_edge(x, y, true);
                }
            }
        }
        Ok(g)
    }
}

/// Witness that the products A_i A_j are not constant on class h: two pairs
/// of class h with different common-neighbor counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub h: usize,
    pub first: (usize, usize, u64),
    pub second: (usize, usize, u64),
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "product A_{} A_{} is not constant on class {}: count {} at ({},{}) vs count {} at ({},{})",
            self.i, self.j, self.h,
            self.first.2, self.first.0, self.first.1,
            self.second.2, self.second.0, self.second.1,
        )
    }
}

/// Intersection-number tensor p[h][i][j], 0 <= h,i,j <= d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    d: usize,
    data: Vec<u64>,
}

impl Tensor {
    pub(crate) fn zeros(d: usize) -> Tensor {
        Tensor { d, data: vec![0; (d + 1) * (d + 1) * (d + 1)] }
    }

    #[inline]
    pub fn get(&self, h: usize, i: usize, j: usize) -> u64 {
        let n = self.d + 1;
        self.data[(h * n + i) * n + j]
    }

    #[inline]
    pub(crate) fn set(&mut self, h: usize, i: usize, j: usize, value: u64) {
        let n = self.d + 1;
        self.data[(h * n + i) * n + j] = value;
    }

    pub fn class_count(&self) -> usize {
        self.d
    }

    /// Fill the entries involving class 0 from the definitions
    /// (A_0 = I, so p[h][0][j] = delta(h,j) and p[h][i][0] = delta(h,i)).
    pub(crate) fn fill_identity_entries(&mut self) {
        for h in 0..=self.d {
            self.set(h, 0, h, 1);
            self.set(h, h, 0, 1);
        }
    }
}

/// Exact spectral data of a scheme: first eigenmatrix P (integer entries),
/// dual eigenmatrix Q = v P^-1, and idempotent ranks (multiplicities).
/// Row 0 of P is the valency row; the remaining rows are sorted
/// lexicographically decreasing, which is the canonical order used
/// everywhere for reproducible output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub p: RatMatrix,
    pub q: RatMatrix,
    pub mults: Vec<u64>,
}

impl Spectrum {
    pub fn class_count(&self) -> usize {
        self.p.rows() - 1
    }

    pub fn p_i64(&self, j: usize, i: usize) -> i64 {
        self.p.entry_i64(j, i).expect("P entries are integers")
    }

    pub fn p_rows_i64(&self) -> Vec<Vec<i64>> {
        (0..self.p.rows())
            .map(|j| (0..self.p.cols()).map(|i| self.p_i64(j, i)).collect())
            .collect()
    }

    /// Multiplicity of the idempotent whose P row equals `row`.
    pub fn multiplicity_of_row(&self, row: &[i64]) -> Option<u64> {
        self.p_rows_i64()
            .iter()
            .position(|r| r == row)
            .map(|j| self.mults[j])
    }

    /// Eigenvalues of relation i with aggregated multiplicities, sorted by
    /// decreasing eigenvalue.
    pub fn relation_eigenvalues(&self, i: usize) -> Vec<(i64, u64)> {
        let mut acc: Vec<(i64, u64)> = Vec::new();
        for j in 0..self.p.rows() {
            let ev = self.p_i64(j, i);
            match acc.iter_mut().find(|(e, _)| *e == ev) {
                Some((_, m)) => *m += self.mults[j],
                None => acc.push((ev, self.mults[j])),
            }
        }
        acc.sort_by_key(|&(e, _)| std::cmp::Reverse(e));
        acc
    }
}

/// A verified symmetric association scheme: the coloring plus its
/// intersection tensor, valencies, class graphs and cached spectrum.
#[derive(Debug)]
pub struct Scheme {
    colors: ColorMatrix,
    graphs: Vec<Graph>, // index 1..=d; [0] is an edgeless placeholder
    tensor: Tensor,
    valencies: Vec<u64>, // index 0..=d, [0] = 1
    reps: Vec<(usize, usize)>, // first pair of each class in row-major order
    spectrum: OnceLock<Result<Spectrum, Error>>,
}

impl Clone for Scheme {
    fn clone(&self) -> Self {
        Scheme {
            colors: self.colors.clone(),
            graphs: self.graphs.clone(),
            tensor: self.tensor.clone(),
            valencies: self.valencies.clone(),
            reps: self.reps.clone(),
            spectrum: OnceLock::new(),
        }
    }
}

impl Scheme {
    /// Check the scheme axioms on a coloring: for every class pair (i,j)
    /// the product A_i A_j must be constant on every class. The products
    /// are evaluated entrywise as popcounts of packed row intersections;
    /// checking i <= j suffices because all A_i are symmetric.
    pub fn verify(colors: ColorMatrix) -> Result<Scheme, Violation> {
        let v = colors.v;
        let d = colors.d;
        let mut graphs = Vec::with_capacity(d + 1);
        graphs.push(Graph::new(v)); // class 0 placeholder, no edges
        for i in 1..=d {
            graphs.push(colors.class_graph(i).expect("class index in range"));
        }

        let mut reps = vec![(usize::MAX, usize::MAX); d + 1];
        for x in 0..v {
            for y in 0..v {
                let h = colors.class_of(x, y);
                if reps[h].0 == usize::MAX {
                    reps[h] = (x, y);
                }
            }
        }

        let mut tensor = Tensor::zeros(d);
        tensor.fill_identity_entries();
        for i in 1..=d {
            for j in i..=d {
                let mut expected: Vec<Option<(usize, usize, u64)>> = vec![None; d + 1];
                for x in 0..v {
                    let row_i = graphs[i].row(x);
                    for y in 0..v {
                        let count = and_popcount(row_i, graphs[j].row(y));
                        let h = colors.class_of(x, y);
                        match expected[h] {
                            None => expected[h] = Some((x, y, count)),
                            Some((x0, y0, c0)) => {
                                if c0 != count {
                                    return Err(Violation {
                                        i,
                                        j,
                                        h,
                                        first: (x0, y0, c0),
                                        second: (x, y, count),
                                    });
                                }
                            }
                        }
                    }
                }
                for h in 0..=d {
                    let (_, _, c) = expected[h].expect("every class is nonempty");
                    tensor.set(h, i, j, c);
                    tensor.set(h, j, i, c);
                }
            }
        }

        let mut valencies = vec![1u64; d + 1];
        for i in 1..=d {
            valencies[i] = tensor.get(0, i, i);
        }
        let scheme = Scheme {
            colors,
            graphs,
            tensor,
            valencies,
            reps,
            spectrum: OnceLock::new(),
        };
        scheme.debug_check_identities();
        Ok(scheme)
    }

    /// Construct directly from precomputed parts. The caller is responsible
    /// for their consistency; used by the fusion fast path, where the fused
    /// tensor is determined algebraically by the parent scheme.
    pub(crate) fn assemble_unchecked(
        colors: ColorMatrix,
        graphs: Vec<Graph>,
        tensor: Tensor,
        reps: Vec<(usize, usize)>,
    ) -> Scheme {
        let d = colors.d;
        let mut valencies = vec![1u64; d + 1];
        for i in 1..=d {
            valencies[i] = tensor.get(0, i, i);
        }
        let scheme = Scheme { colors, graphs, tensor, valencies, reps, spectrum: OnceLock::new() };
        scheme.debug_check_identities();
        scheme
    }

    fn debug_check_identities(&self) {
        if cfg!(debug_assertions) {
            let d = self.class_count();
            let k = &self.valencies;
            assert_eq!(k[1..].iter().sum::<u64>(), self.vertex_count() as u64 - 1);
            for i in 0..=d {
                for j in 0..=d {
                    let mut sum = 0;
                    for h in 0..=d {
                        sum += self.tensor.get(h, i, j) * k[h];
                        assert_eq!(
                            k[h] * self.tensor.get(h, i, j),
                            k[i] * self.tensor.get(i, h, j),
                            "symmetric-scheme identity"
                        );
                        assert_eq!(self.tensor.get(h, i, j), self.tensor.get(h, j, i));
                    }
                    assert_eq!(sum, k[i] * k[j], "row-sum identity");
                }
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.v
    }

    pub fn class_count(&self) -> usize {
        self.colors.d
    }

    pub fn colors(&self) -> &ColorMatrix {
        &self.colors
    }

    pub fn tensor(&self) -> &Tensor {
        &self.tensor
    }

    pub fn p_number(&self, h: usize, i: usize, j: usize) -> u64 {
        self.tensor.get(h, i, j)
    }

    /// Valencies k_1..k_d (index 0 carries k_0 = 1).
    pub fn valencies(&self) -> &[u64] {
        &self.valencies
    }

    pub fn representative_pair(&self, h: usize) -> (usize, usize) {
        self.reps[h]
    }

    /// The 01 adjacency structure of relation i, 1 <= i <= d.
    pub fn relation_graph(&self, i: usize) -> Result<Graph, Error> {
        if i == 0 || i > self.class_count() {
            return Err(Error::ClassIndexOutOfRange { index: i, max: self.class_count() });
        }
        Ok(self.graphs[i].clone())
    }

    pub(crate) fn graph_ref(&self, i: usize) -> &Graph {
        &self.graphs[i]
    }

    /// Exact spectrum; cached after the first computation.
    pub fn spectrum(&self) -> Result<&Spectrum, Error> {
        self.spectrum
            .get_or_init(|| self.compute_spectrum())
            .as_ref()
            .map_err(|e| e.clone())
    }

    /// Intersection matrix of class h in the regular representation:
    /// entry (l, i) is p[l][h][i]. Columns of Q are its right eigenvectors.
    fn intersection_matrix(&self, h: usize) -> Vec<Vec<i64>> {
        let d = self.class_count();
        (0..=d)
            .map(|l| (0..=d).map(|i| self.tensor.get(l, h, i) as i64).collect())
            .collect()
    }

    fn compute_spectrum(&self) -> Result<Spectrum, Error> {
        let d = self.class_count();
        let v = self.vertex_count();
        let ls: Vec<RatMatrix> =
            (1..=d).map(|h| RatMatrix::from_i64_rows(&self.intersection_matrix(h))).collect();

        let eigenvectors = self.common_eigenvectors(&ls)?;
        debug_assert_eq!(eigenvectors.len(), d + 1);

        // read each P row off its eigenvector
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(d + 1);
        for u in &eigenvectors {
            let mut row = vec![BigInt::one()];
            for l in ls.iter() {
                row.push(eigenvalue_on(l, u)?);
            }
            rows.push(row);
        }

        // canonical order: valency row first, the rest lexicographically
        // decreasing
        let valency_row: Vec<BigInt> =
            (0..=d).map(|i| BigInt::from(self.valencies[i])).collect();
        let trivial = rows
            .iter()
            .position(|r| *r == valency_row)
            .ok_or_else(|| Error::Internal("no trivial eigenvalue row found".into()))?;
        let head = rows.swap_remove(trivial);
        rows.sort_by(|a, b| b.cmp(a));
        rows.insert(0, head);

        let p = RatMatrix::from_bigint_rows(&rows);
        let q = p
            .inverse()
            .map_err(|_| Error::Internal("eigenmatrix P is singular".into()))?
            .scale(&rat_i64(v as i64));

        let mut mults = Vec::with_capacity(d + 1);
        for j in 0..=d {
            let m = &q[(0, j)];
            if !m.is_integer() || !m.is_positive() {
                return Err(Error::Internal(format!("multiplicity {m} is not a positive integer")));
            }
            mults.push(m.to_integer().to_u64().expect("multiplicity fits u64"));
            if !q[(j, 0)].is_one() {
                return Err(Error::Internal("dual eigenmatrix column 0 must be all ones".into()));
            }
        }
        if mults.iter().sum::<u64>() != v as u64 || mults[0] != 1 {
            return Err(Error::Internal("multiplicities do not sum to v".into()));
        }
        for (j, row) in rows.iter().enumerate() {
            let s: BigInt = row.iter().sum();
            let expect = if j == 0 { BigInt::from(v as u64) } else { BigInt::zero() };
            if s != expect {
                return Err(Error::Internal("eigenmatrix row sums are wrong".into()));
            }
        }
        Ok(Spectrum { p, q, mults })
    }

    /// A basis of common eigenvectors of the intersection matrices: first
    /// by a generic integer combination, then (if eigenvalues collide after
    /// a few weight retries) by iterative common-eigenspace refinement.
    fn common_eigenvectors(&self, ls: &[RatMatrix]) -> Result<Vec<Vec<Rat>>, Error> {
        let d = self.class_count();
        let n = d + 1;
        'attempt: for t in 0..5u32 {
            // deterministic small weights (d+1+t)^h mod 10007
            let base = (d as i64) + 1 + t as i64;
            let mut m = RatMatrix::zeros(n, n);
            let mut w: i64 = 1;
            for l in ls {
                w = w * base % 10007;
                m = m.add(&l.scale(&rat_i64(w)));
            }
            let poly = m.char_poly()?;
            let roots = integer_roots(&poly)?;
            if roots.residual_degree > 0 {
                break; // possibly irrational; let the refinement path decide
            }
            let distinct = roots.distinct_roots();
            if distinct.len() < n {
                continue 'attempt; // eigenvalue collision, retry weights
            }
            let mut vecs = Vec::with_capacity(n);
            for theta in &distinct {
                let shifted = m.sub(&RatMatrix::identity(n).scale(&Rat::from_integer(theta.clone())));
                let kernel = shifted.kernel_basis();
                if kernel.len() != 1 {
                    continue 'attempt;
                }
                vecs.push(kernel.into_iter().next().unwrap());
            }
            return Ok(vecs);
        }
        self.refine_eigenspaces(ls)
    }

    /// Split the full space by the eigenspaces of each intersection matrix
    /// in turn. Guaranteed to terminate with 1-dimensional pieces for a
    /// valid scheme with integral spectrum.
    fn refine_eigenspaces(&self, ls: &[RatMatrix]) -> Result<Vec<Vec<Rat>>, Error> {
        let n = self.class_count() + 1;
        let mut spaces = vec![RatMatrix::identity(n)];
        for l in ls {
            let roots = integer_roots(&l.char_poly()?)?;
            if roots.residual_degree > 0 {
                return Err(Error::IrrationalSpectrum { degree: roots.residual_degree });
            }
            let mut next = Vec::new();
            for basis in &spaces {
                if basis.cols() == 1 {
                    next.push(basis.clone());
                    continue;
                }
                let mut split_dim = 0;
                for theta in roots.distinct_roots() {
                    let shifted =
                        l.sub(&RatMatrix::identity(n).scale(&Rat::from_integer(theta)));
                    let restricted = shifted.mul(basis);
                    let kernel = restricted.kernel_basis();
                    if kernel.is_empty() {
                        continue;
                    }
                    split_dim += kernel.len();
                    // new basis = basis * kernel matrix
                    let mut k = RatMatrix::zeros(basis.cols(), kernel.len());
                    for (c, vec) in kernel.iter().enumerate() {
                        for (r, val) in vec.iter().enumerate() {
                            k[(r, c)] = val.clone();
                        }
                    }
                    next.push(basis.mul(&k));
                }
                if split_dim != basis.cols() {
                    return Err(Error::Internal(
                        "eigenspace refinement lost dimensions; intersection matrix not diagonalizable".into(),
                    ));
                }
            }
            spaces = next;
        }
        let mut vecs = Vec::with_capacity(n);
        for basis in &spaces {
            if basis.cols() != 1 {
                return Err(Error::Internal(
                    "common eigenspace of dimension > 1; indistinguishable idempotents".into(),
                ));
            }
            vecs.push((0..n).map(|r| basis[(r, 0)].clone()).collect());
        }
        if vecs.len() != n {
            return Err(Error::Internal("wrong number of common eigenvectors".into()));
        }
        Ok(vecs)
    }

    /// Materialize idempotent E_j = (1/v) sum_i Q[i][j] A_i as a full v x v
    /// rational matrix. Intended for small v.
    pub fn idempotent_matrix(&self, j: usize) -> Result<RatMatrix, Error> {
        let spec = self.spectrum()?;
        let v = self.vertex_count();
        let inv_v = Rat::new(BigInt::one(), BigInt::from(v as u64));
        let mut e = RatMatrix::zeros(v, v);
        for x in 0..v {
            for y in 0..v {
                let c = self.colors.class_of(x, y);
                e[(x, y)] = &spec.q[(c, j)] * &inv_v;
            }
        }
        Ok(e)
    }
}

/// Eigenvalue of `m` on eigenvector `u`, verified across all coordinates
/// and required to be an integer.
fn eigenvalue_on(m: &RatMatrix, u: &[Rat]) -> Result<BigInt, Error> {
    let n = u.len();
    let pivot = (0..n)
        .find(|&i| !u[i].is_zero())
        .ok_or_else(|| Error::Internal("zero eigenvector".into()))?;
    let mut w = vec![Rat::zero(); n];
    for i in 0..n {
        for (j, uj) in u.iter().enumerate() {
            if !uj.is_zero() {
                w[i] += &m[(i, j)] * uj;
            }
        }
    }
    let lambda = &w[pivot] / &u[pivot];
    for i in 0..n {
        if w[i] != &lambda * &u[i] {
            return Err(Error::Internal("claimed eigenvector is not an eigenvector".into()));
        }
    }
    if !lambda.is_integer() {
        return Err(Error::Internal(format!("rational non-integer eigenvalue {lambda}")));
    }
    Ok(lambda.to_integer())
}

/// Distance-regularity check: returns the intersection array
/// {b_0..b_(D-1); c_1..c_D} if g is distance-regular, None otherwise.
/// Disconnected input is an error, reported distinctly.
pub fn drg_array(g: &Graph) -> Result<Option<DrgArray>, Error> {
    g.is_connected()?;
    let v = g.vertex_count();
    let stride = v.div_ceil(64);
    let mut b: Vec<Option<u64>> = Vec::new();
    let mut c: Vec<Option<u64>> = Vec::new();
    let mut a: Vec<Option<u64>> = Vec::new();
    let mut diameter = None;
    for src in 0..v {
        let dist = g.distances(src);
        let dm = dist.iter().map(|x| x.unwrap()).max().unwrap() as usize;
        match diameter {
            None => {
                diameter = Some(dm);
                b.resize(dm + 1, None);
                c.resize(dm + 1, None);
                a.resize(dm + 1, None);
            }
            Some(prev) if prev != dm => return Ok(None),
            _ => {}
        }
        let mut levels = vec![vec![0u64; stride]; dm + 1];
        for (x, dx) in dist.iter().enumerate() {
            let dx = dx.unwrap() as usize;
            levels[dx][x / 64] |= 1 << (x % 64);
        }
        for (w, dw) in dist.iter().enumerate() {
            let dw = dw.unwrap() as usize;
            let row = g.row(w);
            let down = if dw > 0 { and_popcount(row, &levels[dw - 1]) } else { 0 };
            let same = and_popcount(row, &levels[dw]);
            let up = if dw < dm { and_popcount(row, &levels[dw + 1]) } else { 0 };
            for (slot, val) in [(&mut c[dw], down), (&mut a[dw], same), (&mut b[dw], up)] {
                match slot {
                    None => *slot = Some(val),
                    Some(expect) if *expect != val => return Ok(None),
                    _ => {}
                }
            }
        }
    }
    let dm = diameter.unwrap();
    if dm == 0 {
        return Ok(None); // single vertex or complete graph edge case guarded by caller
    }
    Ok(Some(DrgArray {
        b: (0..dm).map(|i| b[i].unwrap()).collect(),
        c: (1..=dm).map(|i| c[i].unwrap()).collect(),
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrgArray {
    pub b: Vec<u64>,
    pub c: Vec<u64>,
}

impl std::fmt::Display for DrgArray {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let bs: Vec<String> = self.b.iter().map(|x| x.to_string()).collect();
        let cs: Vec<String> = self.c.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{};{}}}", bs.join(","), cs.join(","))
    }
}

/// Color vertex pairs of a connected graph by graph distance. The natural
/// raw input for distance schemes of distance-regular graphs.
pub fn distance_color_matrix(g: &Graph) -> Result<ColorMatrix, Error> {
    g.is_connected()?;
    let v = g.vertex_count();
    let mut cells = vec![0u8; v * v];
    let mut dmax = 0;
    for x in 0..v {
        for (y, dy) in g.distances(x).into_iter().enumerate() {
            let dy = dy.unwrap() as usize;
            dmax = dmax.max(dy);
            cells[x * v + y] = dy as u8;
        }
    }
    ColorMatrix::new(v, dmax, cells)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn cycle_scheme(n: usize) -> Scheme {
        let mut g = Graph::new(n);
        for i in 0..n {
            g.set_edge(i, (i + 1) % n, true);
        }
        Scheme::verify(distance_color_matrix(&g).unwrap()).unwrap()
    }

    fn one_class(v: usize) -> Scheme {
        let colors = ColorMatrix::from_fn(v, 1, |_, _| 1).unwrap();
        Scheme::verify(colors).unwrap()
    }

    #[test]
    fn color_matrix_rejects_degenerate_input() {
        assert!(ColorMatrix::new(1, 1, vec![0]).is_err());
        assert!(ColorMatrix::from_fn(3, 2, |_, _| 1).is_err()); // class 2 empty
        let mut cells = vec![0u8; 9];
        cells[1] = 1;
        cells[3] = 2; // asymmetric
        cells[2] = 1;
        cells[6] = 1;
        cells[5] = 1;
        cells[7] = 1;
        assert!(ColorMatrix::new(3, 2, cells).is_err());
    }

    #[test]
    fn pentagon_by_distance() {
        let s = cycle_scheme(5);
        assert_eq!(s.class_count(), 2);
        assert_eq!(s.p_number(1, 1, 1), 0);
        assert_eq!(s.p_number(2, 1, 1), 1);
        // brute-force triple count oracle
        for h in 0..=2 {
            for i in 0..=2 {
                for j in 0..=2 {
                    let (x, y) = s.representative_pair(h);
                    let count = (0..5)
                        .filter(|&z| {
                            s.colors().class_of(x, z) == i && s.colors().class_of(z, y) == j
                        })
                        .count() as u64;
                    assert_eq!(count, s.p_number(h, i, j), "p[{h}][{i}][{j}]");
                }
            }
        }
    }

    #[test]
    fn recolored_complete_graph_fails() {
        // K_4 with one edge moved to a second class is not a scheme
        let colors = ColorMatrix::from_fn(4, 2, |x, y| if (x, y) == (0, 1) { 2 } else { 1 });
        // class 2 nonempty, matrix itself is fine
        let colors = colors.unwrap();
        assert!(Scheme::verify(colors).is_err());
    }

    #[test]
    fn one_class_scheme_tensor_and_spectrum() {
        let s = one_class(7);
        assert_eq!(s.p_number(1, 1, 1), 5); // v - 2
        let spec = s.spectrum().unwrap();
        assert_eq!(spec.p_rows_i64(), vec![vec![1, 6], vec![1, -1]]);
        assert_eq!(spec.mults, vec![1, 6]);
    }

    #[test]
    fn relation_graph_bounds() {
        let s = one_class(4);
        assert!(s.relation_graph(0).is_err());
        assert!(s.relation_graph(2).is_err());
        assert_eq!(s.relation_graph(1).unwrap().regular_degree(), Some(3));
    }

    #[test]
    fn spectrum_is_deterministic() {
        let s1 = cycle_scheme(6);
        let s2 = cycle_scheme(6);
        assert_eq!(s1.spectrum().unwrap(), s2.spectrum().unwrap());
    }

    #[test]
    fn hexagon_drg_array() {
        let mut g = Graph::new(6);
        for i in 0..6 {
            g.set_edge(i, (i + 1) % 6, true);
        }
        let arr = drg_array(&g).unwrap().unwrap();
        assert_eq!(arr.b, vec![2, 1, 1]);
        assert_eq!(arr.c, vec![1, 1, 2]);
        assert_eq!(arr.to_string(), "{2,1,1;1,1,2}");
    }

    #[test]
    fn drg_rejects_disconnected() {
        let mut g = Graph::new(4);
        g.set_edge(0, 1, true);
        g.set_edge(2, 3, true);
        assert!(matches!(drg_array(&g), Err(Error::Disconnected { .. })));
    }

    #[test]
    fn petersen_is_distance_regular() {
        // vertices = 2-subsets of {0..4}, adjacent iff disjoint
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
        let arr = drg_array(&g).unwrap().unwrap();
        assert_eq!(arr.b, vec![3, 2]);
        assert_eq!(arr.c, vec![1, 1]);
        let s = Scheme::verify(distance_color_matrix(&g).unwrap()).unwrap();
        let spec = s.spectrum().unwrap();
        assert_eq!(spec.relation_eigenvalues(1), vec![(3, 1), (1, 5), (-2, 4)]);
    }

    #[test]
    fn idempotents_are_projections() {
        let s = cycle_scheme(5);
        for j in 0..=2 {
            let e = s.idempotent_matrix(j).unwrap();
            assert_eq!(e.mul(&e), e, "E_{j} must be idempotent");
            // trace of a projection is its rank
            let tr: Rat = (0..5).map(|i| e[(i, i)].clone()).sum();
            assert_eq!(tr, rat_i64(s.spectrum().unwrap().mults[j] as i64));
        }
    }
}
