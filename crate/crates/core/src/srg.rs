//! Strongly-regular-graph parameters and the Latin-square-type /
//! negative-Latin-square-type / conference classification.

use crate::error::Error;
use crate::graph::Graph;

/// Restricted eigenvalues r >= s. Conference graphs on non-square v have
/// irrational ones; that case is carried symbolically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RestrictedEigen {
    Integral { r: i64, s: i64 },
    ConferenceIrrational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SrgParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
    pub eigen: RestrictedEigen,
    /// eigenvalue multiplicities (f for r, g for s)
    pub f: u64,
    pub g: u64,
}

impl SrgParams {
    /// Validate raw parameters: the identity k(k-1-lambda) = mu(v-1-k) must
    /// hold and the spectrum must be feasible (integral multiplicities).
    pub fn from_parameters(v: u64, k: u64, lambda: u64, mu: u64) -> Result<SrgParams, Error> {
        if k == 0 || k >= v - 1 {
            return Err(Error::CompleteOrEmpty);
        }
        if k * (k - 1 - lambda) != mu * (v - 1 - k) {
            return Err(Error::BadSrgParams);
        }
        let tr = lambda as i64 - mu as i64;
        let det = k as i64 - mu as i64;
        let disc = tr * tr + 4 * det;
        debug_assert!(disc >= 0);
        let sq = (disc as f64).sqrt() as i64;
        let sq = (sq - 2..=sq + 2).find(|&s| s >= 0 && s * s == disc);
        let eigen;
        let (f, g);
        match sq {
            Some(sq) if (tr + sq) % 2 == 0 => {
                let r = (tr + sq) / 2;
                let s = (tr - sq) / 2;
                // multiplicities from the standard trace conditions
                let num = 2 * k as i64 + (v as i64 - 1) * tr;
                if sq == 0 || num.rem_euclid(sq) != 0 {
                    return Err(Error::BadSrgParams);
                }
                let half = num / sq;
                let fv = (v as i64 - 1 - half) / 2;
                let gv = (v as i64 - 1 + half) / 2;
                if (v as i64 - 1 - half) % 2 != 0 || fv < 0 || gv < 0 {
                    return Err(Error::BadSrgParams);
                }
                eigen = RestrictedEigen::Integral { r, s };
                f = fv as u64;
                g = gv as u64;
            }
            _ => {
                // irrational eigenvalues are only feasible for conference
                // parameters
                if 2 * k != v - 1 || tr != -1 || 4 * mu != v - 1 {
                    return Err(Error::BadSrgParams);
                }
                eigen = RestrictedEigen::ConferenceIrrational;
                f = (v - 1) / 2;
                g = (v - 1) / 2;
            }
        }
        Ok(SrgParams { v, k, lambda, mu, eigen, f, g })
    }

    pub fn is_conference(&self) -> bool {
        2 * self.k == self.v - 1
            && self.lambda as i64 - self.mu as i64 == -1
            && 4 * self.mu == self.v - 1
    }
}

impl std::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

/// Why a graph is not strongly regular: a witness pair of vertex pairs with
/// the same adjacency status but different common-neighbor counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotSrgWitness {
    pub adjacent: bool,
    pub first: (usize, usize, u64),
    pub second: (usize, usize, u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SrgOutcome {
    Srg(SrgParams),
    NotSrg(NotSrgWitness),
}

impl SrgOutcome {
    pub fn params(&self) -> Option<&SrgParams> {
        match self {
            SrgOutcome::Srg(p) => Some(p),
            SrgOutcome::NotSrg(_) => None,
        }
    }
}

/// Compute lambda and mu by checking that common-neighbor counts are
/// constant over edges and over non-edges. Complete, empty and irregular
/// graphs are errors (flagged, out of scope); non-constancy is a witness.
pub fn srg_params(g: &Graph) -> Result<SrgOutcome, Error> {
    let v = g.vertex_count();
    let k = match g.regular_degree() {
        Some(k) => k,
        None => {
            let d0 = g.degree(0);
            let bad = (1..v).find(|&x| g.degree(x) != d0).unwrap();
            return Err(Error::Irregular { v1: 0, d1: d0, v2: bad, d2: g.degree(bad) });
        }
    };
    if k == 0 || k == v as u64 - 1 {
        return Err(Error::CompleteOrEmpty);
    }
    let mut lambda: Option<(usize, usize, u64)> = None;
    let mut mu: Option<(usize, usize, u64)> = None;
    for x in 0..v {
        for y in (x + 1)..v {
            let count = g.common_neighbors(x, y);
            let slot = if g.has_edge(x, y) { &mut lambda } else { &mut mu };
            match slot {
                None => *slot = Some((x, y, count)),
                Some((x0, y0, c0)) => {
                    if *c0 != count {
                        return Ok(SrgOutcome::NotSrg(NotSrgWitness {
                            adjacent: g.has_edge(x, y),
                            first: (*x0, *y0, *c0),
                            second: (x, y, count),
                        }));
                    }
                }
            }
        }
    }
    let lambda = lambda.expect("non-complete graph has a non-edge or edge").2;
    let mu = mu.expect("non-empty regular graph has both").2;
    let params = SrgParams::from_parameters(v as u64, k, lambda, mu)
        .map_err(|e| Error::Internal(format!("graph with constant counts has bad parameters: {e}")))?;
    Ok(SrgOutcome::Srg(params))
}

/// The classification used throughout: strictly Latin square type (n, t
/// positive), strictly negative Latin square type (n, t negative),
/// conference, or untyped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SrgType {
    StrictlyLatinSquare { n: i64, t: i64 },
    StrictlyNegativeLatinSquare { n: i64, t: i64 },
    Conference,
    Untyped,
}

impl std::fmt::Display for SrgType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SrgType::StrictlyLatinSquare { n, t } => write!(f, "strictly-LS({n},{t})"),
            SrgType::StrictlyNegativeLatinSquare { n, t } => write!(f, "strictly-NLS({n},{t})"),
            SrgType::Conference => write!(f, "conference"),
            SrgType::Untyped => write!(f, "untyped"),
        }
    }
}

/// Exact type classification. Conference graphs are reported as
/// `Conference`, never as LS or NLS; use the inclusive predicates when the
/// wider reading is wanted.
pub fn classify_type(p: &SrgParams) -> SrgType {
    if p.is_conference() {
        return SrgType::Conference;
    }
    let RestrictedEigen::Integral { r, s } = p.eigen else {
        return SrgType::Untyped;
    };
    let Some(n) = exact_sqrt(p.v) else {
        return SrgType::Untyped;
    };
    let n = n as i64;
    // Latin square type: k = t(n-1), eigenvalues n-t and -t, n and t positive
    let t = n - r;
    if t >= 1 && s == -t && p.k as i64 == t * (n - 1) {
        return SrgType::StrictlyLatinSquare { n, t };
    }
    // negative Latin square type: same equations with n and t negative
    let (nn, tt) = (-n, -r);
    if tt <= -1 && s == nn - tt && p.k as i64 == tt * (nn - 1) {
        return SrgType::StrictlyNegativeLatinSquare { n: nn, t: tt };
    }
    SrgType::Untyped
}

/// Latin square type in the inclusive sense (conference graphs on a square
/// number of vertices are of both types).
pub fn is_ls_inclusive(p: &SrgParams) -> bool {
    match classify_type(p) {
        SrgType::StrictlyLatinSquare { .. } => true,
        SrgType::Conference => exact_sqrt(p.v).is_some(),
        _ => false,
    }
}

pub fn is_nls_inclusive(p: &SrgParams) -> bool {
    match classify_type(p) {
        SrgType::StrictlyNegativeLatinSquare { .. } => true,
        SrgType::Conference => exact_sqrt(p.v).is_some(),
        _ => false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LsOrNls {
    LatinSquare { n: i64 },
    NegativeLatinSquare { n: i64 },
}

/// Type determination from a single restricted eigenvalue: for a strongly
/// regular graph on v = n^2 vertices with valency k and restricted
/// eigenvalue a such that k = -a(n-1), the sign of the satisfying n decides
/// the type.
pub fn lemma_type_from_eigenvalue(v: u64, k: u64, a: i64) -> Result<LsOrNls, Error> {
    let n0 = exact_sqrt(v).ok_or(Error::NotSquareVertexCount(v as usize))? as i64;
    if k as i64 == -a * (n0 - 1) {
        return Ok(LsOrNls::LatinSquare { n: n0 });
    }
    if k as i64 == -a * (-n0 - 1) {
        return Ok(LsOrNls::NegativeLatinSquare { n: -n0 });
    }
    Err(Error::LemmaHypothesisFails)
}

/// Dimension of the common eigenspace for eigenvalues n-t (of an LS/NLS
/// type graph A with parameters (n,t)) and r (of a commuting strongly
/// regular B): -t (k + (n-1) s) / (r - s), where B's restricted eigenvalues
/// are labeled so that r - s has the same sign as n. A non-integral or
/// negative value certifies that no such commuting pair exists.
pub fn common_eigenspace_dim(a: &SrgType, b: &SrgParams) -> Result<u64, Error> {
    let (n, t) = match *a {
        SrgType::StrictlyLatinSquare { n, t } => (n, t),
        SrgType::StrictlyNegativeLatinSquare { n, t } => (n, t),
        _ => return Err(Error::BadParameter("A must be of LS or NLS type".into())),
    };
    let RestrictedEigen::Integral { r, s } = b.eigen else {
        return Err(Error::BadParameter("B must have integral eigenvalues".into()));
    };
    // label B's eigenvalues so that r - s matches the sign of n
    let (r, s) = if n > 0 { (r, s) } else { (s, r) };
    let num = -t * (b.k as i64 + (n - 1) * s);
    let den = r - s;
    if num % den != 0 || num / den < 0 {
        return Err(Error::InconsistentCommutingPair(format!("{num}/{den}")));
    }
    Ok((num / den) as u64)
}

pub fn exact_sqrt(v: u64) -> Option<u64> {
    let r = (v as f64).sqrt() as u64;
    (r.saturating_sub(2)..=r + 2).find(|&x| x * x == v)
}
