//! Fusing relation classes, amorphicity testing, common fission of two
//! fission schemes of a 2-class scheme, and commuting-decomposition checks.
//!
//! Fusion validity never needs new matrix products: if the parent scheme
//! has tensor p, the fused products are already determined, and the fused
//! coloring is a scheme exactly when the block sums of p are constant on
//! each fused class. `is_fusion_scheme` exploits that; `Scheme::verify`
//! remains the independent slow route and the two are cross-checked in
//! tests.

use crate::error::Error;
use crate::graph::Graph;
use crate::scheme::{ColorMatrix, Scheme, Tensor, Violation};
use crate::srg::{self, classify_type, srg_params, SrgOutcome, SrgParams, SrgType};

/// Partition of the nontrivial classes {1..d} into blocks. Blocks are kept
/// sorted, ordered by least member; class 0 is never partitioned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPartition {
    d: usize,
    blocks: Vec<Vec<usize>>,
}

impl ClassPartition {
    pub fn from_blocks(d: usize, mut blocks: Vec<Vec<usize>>) -> Result<ClassPartition, Error> {
        let mut seen = vec![false; d + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::BadPartition("empty block".into()));
            }
            block.sort_unstable();
            for &c in block.iter() {
                if c == 0 || c > d {
                    return Err(Error::BadPartition(format!("class {c} out of range 1..={d}")));
                }
                if seen[c] {
                    return Err(Error::BadPartition(format!("class {c} appears twice")));
                }
                seen[c] = true;
            }
        }
        if let Some(c) = (1..=d).find(|&c| !seen[c]) {
            return Err(Error::BadPartition(format!("class {c} is not covered")));
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(ClassPartition { d, blocks })
    }

    /// Parse "1,2|3|4,5" with 1-based class indices.
    pub fn parse(text: &str, d: usize) -> Result<ClassPartition, Error> {
        let mut blocks = Vec::new();
        for part in text.split('|') {
            let mut block = Vec::new();
            for item in part.split(',') {
                let c: usize = item
                    .trim()
                    .parse()
                    .map_err(|_| Error::BadPartition(format!("bad class index {item:?}")))?;
                block.push(c);
            }
            blocks.push(block);
        }
        ClassPartition::from_blocks(d, blocks)
    }

    pub fn identity(d: usize) -> ClassPartition {
        ClassPartition { d, blocks: (1..=d).map(|c| vec![c]).collect() }
    }

    fn from_rgs(rgs: &[usize]) -> ClassPartition {
        let d = rgs.len();
        let nblocks = rgs.iter().copied().max().unwrap_or(0) + 1;
        let mut blocks = vec![Vec::new(); nblocks];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        ClassPartition { d, blocks }
    }

    pub fn class_count(&self) -> usize {
        self.d
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// old class -> new class (1-based), with 0 -> 0.
    pub fn class_map(&self) -> Vec<usize> {
        let mut map = vec![0; self.d + 1];
        for (bi, block) in self.blocks.iter().enumerate() {
            for &c in block {
                map[c] = bi + 1;
            }
        }
        map
    }
}

impl std::fmt::Display for ClassPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", blocks.join("|"))
    }
}

/// All partitions of {1..d} as restricted-growth strings in lexicographic
/// order, which pins down the "first failing partition" reproducibly.
pub fn all_partitions(d: usize) -> impl Iterator<Item = ClassPartition> {
    let mut rgs = Some(vec![0usize; d]);
    std::iter::from_fn(move || {
        let current = rgs.take()?;
        let partition = ClassPartition::from_rgs(&current);
        let mut next = current;
        if next_rgs(&mut next) {
            rgs = Some(next);
        }
        Some(partition)
    })
}

fn next_rgs(a: &mut [usize]) -> bool {
    for i in (1..a.len()).rev() {
        let bound = a[..i].iter().copied().max().unwrap() + 1;
        if a[i] < bound {
            a[i] += 1;
            for x in a[i + 1..].iter_mut() {
                *x = 0;
            }
            return true;
        }
    }
    false
}

/// Relabel classes by block index (blocks ordered by least member). The
/// result is a plain coloring, not yet verified.
pub fn fuse(s: &Scheme, partition: &ClassPartition) -> Result<ColorMatrix, Error> {
    if partition.class_count() != s.class_count() {
        return Err(Error::BadPartition(format!(
            "partition is over {} classes, scheme has {}",
            partition.class_count(),
            s.class_count()
        )));
    }
    let v = s.vertex_count();
    let map = partition.class_map();
    let cells = s
        .colors()
        .cells()
        .iter()
        .map(|&c| map[c as usize] as u8)
        .collect();
    ColorMatrix::new(v, partition.blocks().len(), cells)
}

/// Constancy of the fused intersection sums, without any matrix products.
fn fused_tensor_check(
    s: &Scheme,
    partition: &ClassPartition,
) -> Result<Tensor, Violation> {
    let blocks = partition.blocks();
    let e = blocks.len();
    let mut tensor = Tensor::zeros(e);
    tensor.fill_identity_entries();
    let members = |new_class: usize| -> &[usize] {
        if new_class == 0 {
            &[0]
        } else {
            &blocks[new_class - 1]
        }
    };
    for new_i in 1..=e {
        for new_j in new_i..=e {
            for new_h in 0..=e {
                let mut expected: Option<(usize, u64)> = None;
                for &h in members(new_h) {
                    let mut sum = 0;
                    for &i in &blocks[new_i - 1] {
                        for &j in &blocks[new_j - 1] {
                            sum += s.p_number(h, i, j);
                        }
                    }
                    match expected {
                        None => expected = Some((h, sum)),
                        Some((h0, s0)) => {
                            if s0 != sum {
                                let (x0, y0) = s.representative_pair(h0);
                                let (x1, y1) = s.representative_pair(h);
                                return Err(Violation {
                                    i: new_i,
                                    j: new_j,
                                    h: new_h,
                                    first: (x0, y0, s0),
                                    second: (x1, y1, sum),
                                });
                            }
                        }
                    }
                }
                let value = expected.expect("blocks are nonempty").1;
                tensor.set(new_h, new_i, new_j, value);
                tensor.set(new_h, new_j, new_i, value);
            }
        }
    }
    Ok(tensor)
}

/// Fuse and verify. The fused tensor is checked for constancy and, when it
/// holds, the fused scheme is assembled directly from the parent.
pub fn is_fusion_scheme(s: &Scheme, partition: &ClassPartition) -> Result<Scheme, Error> {
    if partition.class_count() != s.class_count() {
        return Err(Error::BadPartition(format!(
            "partition is over {} classes, scheme has {}",
            partition.class_count(),
            s.class_count()
        )));
    }
    let tensor = fused_tensor_check(s, partition).map_err(Error::from)?;
    let colors = fuse(s, partition)?;
    let blocks = partition.blocks();
    let mut graphs = Vec::with_capacity(blocks.len() + 1);
    graphs.push(Graph::new(s.vertex_count()));
    for block in blocks {
        let mut g = s.relation_graph(block[0]).expect("class in range");
        for &c in &block[1..] {
            g = g.union(s.graph_ref(c));
        }
        graphs.push(g);
    }
    let mut reps = vec![(0usize, 0usize); blocks.len() + 1];
    for (bi, block) in blocks.iter().enumerate() {
        reps[bi + 1] = block.iter().map(|&c| s.representative_pair(c)).min().unwrap();
    }
    Ok(Scheme::assemble_unchecked(colors, graphs, tensor, reps))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SharedType {
    LatinSquare,
    NegativeLatinSquare,
    /// all relations are conference graphs on square v, so both readings fit
    Either,
}

#[derive(Debug, Clone)]
pub enum AmorphicVerdict {
    Amorphic { shared: Option<SharedType> },
    NotAmorphic { partition: ClassPartition, violation: Violation },
}

impl AmorphicVerdict {
    pub fn is_amorphic(&self) -> bool {
        matches!(self, AmorphicVerdict::Amorphic { .. })
    }
}

pub const AMORPHIC_CLASS_GUARD: usize = 10;

/// Check every partition of {1..d} in canonical order; report the first
/// failure or the amorphic verdict. For an amorphic scheme with d >= 3 the
/// relations must all be of Latin square type or all of negative Latin
/// square type (inclusively); a discrepancy would falsify known theory and
/// is reported as an internal-consistency error.
pub fn amorphic_check(s: &Scheme, override_guard: bool) -> Result<AmorphicVerdict, Error> {
    let d = s.class_count();
    if d > AMORPHIC_CLASS_GUARD && !override_guard {
        return Err(Error::TooManyClasses { d, max: AMORPHIC_CLASS_GUARD });
    }
    for partition in all_partitions(d) {
        if let Err(violation) = fused_tensor_check(s, &partition) {
            return Ok(AmorphicVerdict::NotAmorphic { partition, violation });
        }
    }
    let shared = if d >= 3 {
        let mut all_params = Vec::new();
        for i in 1..=d {
            match srg_params(s.graph_ref(i))? {
                SrgOutcome::Srg(p) => all_params.push(p),
                SrgOutcome::NotSrg(w) => {
                    return Err(Error::TheoremFalsified(format!(
                        "amorphic scheme with d={d} has a non-strongly-regular relation {i}: \
                         counts {} vs {}",
                        w.first.2, w.second.2
                    )))
                }
            }
        }
        let ls = all_params.iter().all(srg::is_ls_inclusive);
        let nls = all_params.iter().all(srg::is_nls_inclusive);
        Some(match (ls, nls) {
            (true, true) => SharedType::Either,
            (true, false) => SharedType::LatinSquare,
            (false, true) => SharedType::NegativeLatinSquare,
            (false, false) => {
                return Err(Error::TheoremFalsified(
                    "amorphic scheme with relations of mixed types".into(),
                ))
            }
        })
    } else {
        None
    };
    Ok(AmorphicVerdict::Amorphic { shared })
}

/// Result of a successful common fission.
#[derive(Debug)]
pub struct CommonFission {
    pub scheme: Scheme,
    /// class of `a` that became the B side, class of `b` that became A
    pub split: (usize, usize),
    /// for each nontrivial idempotent of the union scheme: which input
    /// scheme and which of its idempotent rows it refines
    pub idempotent_sources: Vec<(char, usize)>,
}

#[derive(Debug)]
pub enum FissionFailure {
    Error(Error),
    /// the union coloring is not a scheme
    NotScheme {
        violation: Violation,
        split: (usize, usize),
        /// the shared 2-class scheme has k = (v-1)/2, the obstruction that
        /// rules the combination theorem out
        half_valency_obstruction: bool,
    },
}

impl std::fmt::Display for FissionFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FissionFailure::Error(e) => write!(f, "{e}"),
            FissionFailure::NotScheme { violation, half_valency_obstruction, .. } => {
                write!(f, "common fission is not an association scheme: {violation}")?;
                if *half_valency_obstruction {
                    write!(f, " (shared 2-class scheme has k = (v-1)/2)")?;
                }
                Ok(())
            }
        }
    }
}

impl From<Error> for FissionFailure {
    fn from(e: Error) -> Self {
        FissionFailure::Error(e)
    }
}

/// Detect the common 2-class split automatically: a class of `a` whose
/// graph is the complement of some class of `b`, such that both collapse
/// to the same 2-class scheme. Ambiguity is an error naming the candidates;
/// use `common_fission_with_split` to resolve it.
pub fn common_fission(a: &Scheme, b: &Scheme) -> Result<CommonFission, FissionFailure> {
    if a.vertex_count() != b.vertex_count() {
        return Err(Error::VertexCountMismatch(a.vertex_count(), b.vertex_count()).into());
    }
    let mut candidates = Vec::new();
    for ca in 1..=a.class_count() {
        let complement = a.graph_ref(ca).complement();
        for cb in 1..=b.class_count() {
            if *b.graph_ref(cb) == complement {
                candidates.push((ca, cb));
            }
        }
    }
    // both inputs must actually collapse to the 2-class scheme
    candidates.retain(|&(ca, cb)| {
        two_class_split(a, ca).is_ok() && two_class_split(b, cb).is_ok()
    });
    match candidates.len() {
        0 => Err(Error::NoCommonSplit.into()),
        1 => common_fission_with_split(a, b, candidates[0].0, candidates[0].1),
        _ => Err(Error::AmbiguousSplit(candidates).into()),
    }
}

/// The partition {all other classes},{c}; valid only if it fuses to a
/// scheme, i.e. the class-c graph is strongly regular.
fn two_class_split(s: &Scheme, c: usize) -> Result<(), Error> {
    if s.class_count() < 2 {
        return Err(Error::BadParameter("need at least 2 classes to split".into()));
    }
    let rest: Vec<usize> = (1..=s.class_count()).filter(|&i| i != c).collect();
    let partition = ClassPartition::from_blocks(s.class_count(), vec![rest, vec![c]])?;
    fused_tensor_check(s, &partition).map_err(Error::from)?;
    Ok(())
}

pub fn common_fission_with_split(
    a: &Scheme,
    b: &Scheme,
    ca: usize,
    cb: usize,
) -> Result<CommonFission, FissionFailure> {
    let v = a.vertex_count();
    if v != b.vertex_count() {
        return Err(Error::VertexCountMismatch(a.vertex_count(), b.vertex_count()).into());
    }
    two_class_split(a, ca)?;
    two_class_split(b, cb)?;
    if *b.graph_ref(cb) != a.graph_ref(ca).complement() {
        return Err(Error::NoCommonSplit.into());
    }

    let a_side: Vec<usize> = (1..=a.class_count()).filter(|&i| i != ca).collect();
    let b_side: Vec<usize> = (1..=b.class_count()).filter(|&i| i != cb).collect();
    let e = a_side.len();
    let f = b_side.len();
    let mut a_new = vec![0u8; a.class_count() + 1];
    for (idx, &c) in a_side.iter().enumerate() {
        a_new[c] = (idx + 1) as u8;
    }
    let mut b_new = vec![0u8; b.class_count() + 1];
    for (idx, &c) in b_side.iter().enumerate() {
        b_new[c] = (e + idx + 1) as u8;
    }

    let colors = ColorMatrix::from_fn(v, e + f, |x, y| {
        let c_a = a.colors().class_of(x, y);
        if c_a != ca {
            a_new[c_a]
        } else {
            let c_b = b.colors().class_of(x, y);
            debug_assert_ne!(c_b, cb, "pair inside B must be colored by b's refinement");
            b_new[c_b]
        }
    })
    .map_err(FissionFailure::Error)?;

    let k = a.valencies()[ca];
    let half_valency = 2 * k == v as u64 - 1;
    let scheme = match Scheme::verify(colors) {
        Ok(s) => s,
        Err(violation) => {
            return Err(FissionFailure::NotScheme {
                violation,
                split: (ca, cb),
                half_valency_obstruction: half_valency,
            })
        }
    };

    let idempotent_sources = match_idempotents(&scheme, a, &a_side, ca, b, &b_side, cb)
        .map_err(FissionFailure::Error)?;
    Ok(CommonFission { scheme, split: (ca, cb), idempotent_sources })
}

/// Verify the idempotent statement on Q coefficients: every nontrivial
/// idempotent of the union scheme must extend an idempotent of `a`
/// (with a constant coefficient across the b-side classes, which together
/// make up a's class ca) or dually one of `b`.
fn match_idempotents(
    union: &Scheme,
    a: &Scheme,
    a_side: &[usize],
    ca: usize,
    b: &Scheme,
    b_side: &[usize],
    cb: usize,
) -> Result<Vec<(char, usize)>, Error> {
    let spec_u = union.spectrum()?;
    let spec_a = a.spectrum()?;
    let spec_b = b.spectrum()?;
    let e = a_side.len();
    let d_u = union.class_count();
    let mut used_a = vec![false; a.class_count() + 1];
    let mut used_b = vec![false; b.class_count() + 1];
    let mut sources = Vec::new();
    for j in 1..=d_u {
        let mut matched = None;
        'a_try: for ja in 1..=a.class_count() {
            if used_a[ja] || spec_u.q[(0, j)] != spec_a.q[(0, ja)] {
                continue;
            }
            for (idx, &la) in a_side.iter().enumerate() {
                if spec_u.q[(idx + 1, j)] != spec_a.q[(la, ja)] {
                    continue 'a_try;
                }
            }
            for l in (e + 1)..=d_u {
                if spec_u.q[(l, j)] != spec_a.q[(ca, ja)] {
                    continue 'a_try;
                }
            }
            matched = Some(('a', ja));
            used_a[ja] = true;
            break;
        }
        if matched.is_none() {
            'b_try: for jb in 1..=b.class_count() {
                if used_b[jb] || spec_u.q[(0, j)] != spec_b.q[(0, jb)] {
                    continue;
                }
                for (idx, &lb) in b_side.iter().enumerate() {
                    if spec_u.q[(e + idx + 1, j)] != spec_b.q[(lb, jb)] {
                        continue 'b_try;
                    }
                }
                for l in 1..=e {
                    if spec_u.q[(l, j)] != spec_b.q[(cb, jb)] {
                        continue 'b_try;
                    }
                }
                matched = Some(('b', jb));
                used_b[jb] = true;
                break;
            }
        }
        match matched {
            Some(m) => sources.push(m),
            None => {
                return Err(Error::TheoremFalsified(format!(
                    "idempotent {j} of the union scheme refines neither input"
                )))
            }
        }
    }
    Ok(sources)
}

/// Per-precondition report for the Latin-square fission theorem: B of
/// LS/NLS type with k = t(n-1); a scheme idempotent of rank k on which B
/// has eigenvalue n-t; k != (n^2-1)/2; and a decomposition of B into
/// strongly regular graphs of the same type.
#[derive(Debug)]
pub struct TheoremMainReport {
    pub b_class: usize,
    pub b_type: Result<(i64, i64), String>,
    pub idempotent_row: Result<usize, String>,
    pub half_valency: Result<(), String>,
    pub parts: Option<Result<Vec<SrgType>, String>>,
    pub fission: Option<Result<Scheme, Box<Violation>>>,
}

impl TheoremMainReport {
    pub fn all_preconditions_pass(&self) -> bool {
        self.b_type.is_ok()
            && self.idempotent_row.is_ok()
            && self.half_valency.is_ok()
            && matches!(&self.parts, Some(Ok(_)))
    }
}

/// Check the fission-theorem preconditions on relation `b_class` of `s`,
/// with `parts` an optional decomposition of that relation's edge set. When
/// every precondition holds the predicted fission scheme is constructed and
/// verified.
pub fn theorem_main_check(
    s: &Scheme,
    b_class: usize,
    parts: &[Graph],
) -> Result<TheoremMainReport, Error> {
    if b_class == 0 || b_class > s.class_count() {
        return Err(Error::ClassIndexOutOfRange { index: b_class, max: s.class_count() });
    }
    let b_graph = s.graph_ref(b_class);
    let k = s.valencies()[b_class];

    // (i) B strongly regular of LS or NLS type (conference on square v
    // counts as both; it is ruled out by (iii) anyway)
    let b_type: Result<(i64, i64), String> = match srg_params(b_graph) {
        Err(e) => Err(format!("B is not strongly regular: {e}")),
        Ok(SrgOutcome::NotSrg(w)) => Err(format!(
            "B is not strongly regular: counts {} and {} disagree",
            w.first.2, w.second.2
        )),
        Ok(SrgOutcome::Srg(p)) => match classify_type(&p) {
            SrgType::StrictlyLatinSquare { n, t } => Ok((n, t)),
            SrgType::StrictlyNegativeLatinSquare { n, t } => Ok((n, t)),
            SrgType::Conference => {
                let n = srg::exact_sqrt(p.v).expect("conference on square v") as i64;
                Ok((n, (n + 1) / 2))
            }
            SrgType::Untyped => Err(format!("B has parameters {p} of neither type")),
        },
    };

    // (ii) some scheme idempotent has rank k and eigenvalue n-t on B
    let idempotent_row = match &b_type {
        Err(_) => Err("type precondition failed first".to_string()),
        Ok((n, t)) => {
            let spec = s.spectrum()?;
            (1..=s.class_count())
                .find(|&j| spec.mults[j] == k && spec.p_i64(j, b_class) == n - t)
                .ok_or_else(|| {
                    format!(
                        "no idempotent has multiplicity {k} with eigenvalue {} on B \
                         (multiplicities are {:?})",
                        n - t,
                        &spec.mults[1..]
                    )
                })
        }
    };

    // (iii) k != (n^2 - 1)/2
    let half_valency = match &b_type {
        Err(_) => Err("type precondition failed first".to_string()),
        Ok(_) => {
            if 2 * k == s.vertex_count() as u64 - 1 {
                Err(format!("k = {k} = (n^2-1)/2, the excluded half valency"))
            } else {
                Ok(())
            }
        }
    };

    // (iv) the parts partition B and are strongly regular of B's type
    let parts_report: Option<Result<Vec<SrgType>, String>> = if parts.is_empty() {
        None
    } else {
        Some(check_parts(s, b_graph, parts, &b_type))
    };

    let all_ok = b_type.is_ok()
        && idempotent_row.is_ok()
        && half_valency.is_ok()
        && matches!(&parts_report, Some(Ok(_)));
    let fission = if all_ok {
        let d = s.class_count();
        let mut map = vec![0u8; d + 1];
        let mut next = 1u8;
        for c in 1..=d {
            if c != b_class {
                map[c] = next;
                next += 1;
            }
        }
        let colors = ColorMatrix::from_fn(s.vertex_count(), d - 1 + parts.len(), |x, y| {
            let c = s.colors().class_of(x, y);
            if c != b_class {
                map[c]
            } else {
                let part = parts
                    .iter()
                    .position(|p| p.has_edge(x, y))
                    .expect("parts cover B");
                (d - 1 + part + 1) as u8
            }
        })?;
        Some(Scheme::verify(colors).map_err(Box::new))
    } else {
        None
    };

    Ok(TheoremMainReport {
        b_class,
        b_type,
        idempotent_row,
        half_valency,
        parts: parts_report,
        fission,
    })
}

fn check_parts(
    s: &Scheme,
    b_graph: &Graph,
    parts: &[Graph],
    b_type: &Result<(i64, i64), String>,
) -> Result<Vec<SrgType>, String> {
    let v = s.vertex_count();
    for p in parts {
        if p.vertex_count() != v {
            return Err("part lives on a different vertex set".into());
        }
        if !p.is_subgraph_of(b_graph) {
            return Err("part has an edge outside relation B".into());
        }
    }
    for (i, p) in parts.iter().enumerate() {
        for (j, q) in parts.iter().enumerate().skip(i + 1) {
            if let Some((x, y)) = p.overlaps(q) {
                return Err(format!("parts {i} and {j} share edge ({x},{y})"));
            }
        }
    }
    let mut union = parts[0].clone();
    for p in &parts[1..] {
        union = union.union(p);
    }
    if union != *b_graph {
        return Err("parts do not cover all edges of B".into());
    }
    let Ok((n, _)) = b_type else {
        return Err("type precondition failed first".to_string());
    };
    let want_positive = *n > 0;
    let mut types = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        let params = match srg_params(p) {
            Ok(SrgOutcome::Srg(params)) => params,
            Ok(SrgOutcome::NotSrg(_)) => return Err(format!("part {i} is not strongly regular")),
            Err(e) => return Err(format!("part {i}: {e}")),
        };
        let ty = classify_type(&params);
        let fits = match ty {
            SrgType::StrictlyLatinSquare { .. } => want_positive,
            SrgType::StrictlyNegativeLatinSquare { .. } => !want_positive,
            SrgType::Conference => srg::exact_sqrt(params.v).is_some(),
            SrgType::Untyped => false,
        };
        if !fits {
            return Err(format!("part {i} is {ty}, not of B's type"));
        }
        types.push(ty);
    }
    Ok(types)
}

/// Report for a decomposition of the complete graph into given parts.
#[derive(Debug)]
pub struct DecompositionReport {
    /// Ok, or (part_i, part_j, x, y) witnessing non-commuting products
    pub commuting: Result<(), (usize, usize, usize, usize)>,
    pub parts: Vec<PartClassification>,
    /// whether the parts are the relations of an association scheme
    pub scheme: Result<(), Box<Violation>>,
}

#[derive(Debug)]
pub struct PartClassification {
    pub index: usize,
    pub valency: Option<u64>,
    pub srg: Option<(SrgParams, SrgType)>,
}

/// Check that the parts partition the edge set of the complete graph,
/// whether their adjacency matrices pairwise commute, classify each part,
/// and report whether the collection is an association scheme.
pub fn verify_commuting_decomposition(parts: &[Graph]) -> Result<DecompositionReport, Error> {
    if parts.is_empty() {
        return Err(Error::BadParameter("no parts given".into()));
    }
    let v = parts[0].vertex_count();
    for p in parts {
        if p.vertex_count() != v {
            return Err(Error::VertexCountMismatch(v, p.vertex_count()));
        }
    }
    for (i, p) in parts.iter().enumerate() {
        for (j, q) in parts.iter().enumerate().skip(i + 1) {
            if let Some((x, y)) = p.overlaps(q) {
                return Err(Error::OverlappingParts { x, y, first: i, second: j });
            }
        }
    }
    let mut union = parts[0].clone();
    for p in &parts[1..] {
        union = union.union(p);
    }
    if let Some((x, y)) = union.complement().edges().first().copied() {
        return Err(Error::UncoveredEdge { x, y });
    }

    let mut commuting = Ok(());
    'outer: for (i, p) in parts.iter().enumerate() {
        for (j, q) in parts.iter().enumerate().skip(i + 1) {
            if let Err((x, y)) = p.commutes_with(q) {
                commuting = Err((i, j, x, y));
                break 'outer;
            }
        }
    }

    let classifications = parts
        .iter()
        .enumerate()
        .map(|(index, p)| PartClassification {
            index,
            valency: p.regular_degree(),
            srg: match srg_params(p) {
                Ok(SrgOutcome::Srg(params)) => Some((params, classify_type(&params))),
                _ => None,
            },
        })
        .collect();

    let colors = ColorMatrix::from_fn(v, parts.len(), |x, y| {
        (parts.iter().position(|p| p.has_edge(x, y)).unwrap() + 1) as u8
    })
    .map_err(|e| Error::Internal(format!("coverage checked but coloring failed: {e}")))?;
    let scheme = match Scheme::verify(colors) {
        Ok(_) => Ok(()),
        Err(viol) => Err(Box::new(viol)),
    };

    Ok(DecompositionReport { commuting, parts: classifications, scheme })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::distance_color_matrix;

    fn cycle_scheme(n: usize) -> Scheme {
        let mut g = Graph::new(n);
        for i in 0..n {
            g.set_edge(i, (i + 1) % n, true);
        }
        Scheme::verify(distance_color_matrix(&g).unwrap()).unwrap()
    }

    #[test]
    fn partition_parsing() {
        let p = ClassPartition::parse("3|1,2", 3).unwrap();
        assert_eq!(p.blocks(), &[vec![1, 2], vec![3]]);
        assert_eq!(p.to_string(), "1,2|3");
        assert!(ClassPartition::parse("1,1|2", 2).is_err());
        assert!(ClassPartition::parse("1", 2).is_err());
        assert!(ClassPartition::parse("1,2,3", 2).is_err());
        assert!(ClassPartition::parse("1,x", 2).is_err());
    }

    #[test]
    fn rgs_enumeration_counts_bell_numbers() {
        let bell = [1usize, 1, 2, 5, 15, 52, 203];
        for (d, &expect) in bell.iter().enumerate().skip(1) {
            assert_eq!(all_partitions(d).count(), expect, "Bell({d})");
        }
        // lexicographic: all-in-one block comes first, identity last
        let parts: Vec<ClassPartition> = all_partitions(3).collect();
        assert_eq!(parts[0].blocks(), &[vec![1, 2, 3]]);
        assert_eq!(parts.last().unwrap().blocks(), &[vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn fuse_by_identity_partition_is_identity() {
        let s = cycle_scheme(6);
        let p = ClassPartition::identity(s.class_count());
        let fused = fuse(&s, &p).unwrap();
        assert_eq!(&fused, s.colors());
        let re = is_fusion_scheme(&s, &p).unwrap();
        assert_eq!(re.tensor(), s.tensor());
    }

    #[test]
    fn fusion_fast_path_agrees_with_full_verification() {
        // C6 distance scheme: fuse classes {1,3},{2}
        let s = cycle_scheme(6);
        let p = ClassPartition::parse("1,3|2", 3).unwrap();
        match (is_fusion_scheme(&s, &p), Scheme::verify(fuse(&s, &p).unwrap())) {
            (Ok(fast), Ok(slow)) => {
                assert_eq!(fast.tensor(), slow.tensor());
                assert_eq!(fast.valencies(), slow.valencies());
            }
            (Err(_), Err(_)) => {}
            (fast, slow) => panic!("fast/slow disagree: {fast:?} vs {slow:?}"),
        }
        // and an invalid fusion must fail on both routes
        let bad = ClassPartition::parse("1,2|3", 3).unwrap();
        let fast = is_fusion_scheme(&s, &bad).is_err();
        let slow = Scheme::verify(fuse(&s, &bad).unwrap()).is_err();
        assert_eq!(fast, slow);
    }

    #[test]
    fn amorphic_guard() {
        let s = cycle_scheme(4);
        assert!(amorphic_check(&s, false).is_ok());
    }

    #[test]
    fn overlapping_triangles_fail_coverage() {
        let mut t1 = Graph::new(4);
        t1.set_edge(0, 1, true);
        t1.set_edge(1, 2, true);
        t1.set_edge(0, 2, true);
        let t2 = t1.clone();
        assert!(matches!(
            verify_commuting_decomposition(&[t1, t2]),
            Err(Error::OverlappingParts { .. })
        ));
    }

    #[test]
    fn scheme_relations_form_commuting_decomposition() {
        let s = cycle_scheme(5);
        let parts = vec![
            s.relation_graph(1).unwrap(),
            s.relation_graph(2).unwrap(),
        ];
        let report = verify_commuting_decomposition(&parts).unwrap();
        assert!(report.commuting.is_ok());
        assert!(report.scheme.is_ok());
    }
}
