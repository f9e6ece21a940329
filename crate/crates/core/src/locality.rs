//! Hierarchical locality of punctured simplex codes.
//!
//! Every closed coordinate set of `S_q(m) - S_q(s)` restricts to another
//! punctured simplex code `S_q(kappa) - S_q(i)`, and the admissible `i` for
//! each dimension `kappa` form a closed interval. This module derives that
//! complete type list, searches explicit witness sets per symbol, assembles
//! per-symbol nested hierarchy chains, and verifies hierarchical-locality
//! claims directly against a code by restriction and distance checks.
//!
//! Type identification matches (length, dimension, distance, weight
//! enumerator) against the reference construction; an exact permutation
//! equivalence check is added for short restrictions. Searches always pick
//! the lexicographically smallest qualifying set so results are stable.

use std::collections::HashMap;

use crate::codes::{LinearCode, WeightEnumerator};
use crate::construct::{punctured_simplex, PuncturedSimplex, PuncturedSimplexSpec, MAX_LENGTH};
use crate::coords::CoordSet;
use crate::gf::FiniteField;
use crate::matroid;
use crate::{Error, Result};

/// Restriction length above which the exact permutation-equivalence check is
/// skipped and identification relies on the parameter/enumerator match.
pub const EQUIVALENCE_CHECK_CAP: usize = 12;

/// The isomorphism type `S_q(kappa) - S_q(i)` of a closed-set restriction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RestrictionType {
    kappa: u32,
    i: u32,
    length: usize,
    distance: usize,
}

impl RestrictionType {
    pub fn kappa(&self) -> u32 {
        self.kappa
    }

    /// The inner deleted dimension.
    pub fn inner(&self) -> u32 {
        self.i
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> u32 {
        self.kappa
    }

    pub fn distance(&self) -> usize {
        self.distance
    }

    /// `(length, dimension, distance)`.
    pub fn params(&self) -> (usize, u32, usize) {
        (self.length, self.kappa, self.distance)
    }
}

impl std::fmt::Display for RestrictionType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "S({})-S({}) = [{},{},{}]",
            self.kappa, self.i, self.length, self.kappa, self.distance
        )
    }
}

/// The type `S_q(kappa) - S_q(i)` with its closed-form parameters.
pub fn restriction_type(q: u32, kappa: u32, i: u32) -> Result<RestrictionType> {
    FiniteField::new(q)?;
    if kappa < 1 || i >= kappa {
        return Err(Error::InvalidArgs(format!(
            "restriction type needs 0 <= i <= kappa - 1, got kappa = {kappa}, i = {i}"
        )));
    }
    let qq = q as u128;
    let length = (qq.pow(kappa) - qq.pow(i)) / (qq - 1);
    let distance = if i == 0 {
        qq.pow(kappa - 1)
    } else {
        qq.pow(kappa - 1) - qq.pow(i - 1)
    };
    if length > MAX_LENGTH {
        return Err(Error::InvalidArgs(format!(
            "restriction length {length} exceeds the {MAX_LENGTH} cap"
        )));
    }
    Ok(RestrictionType {
        kappa,
        i,
        length: length as usize,
        distance: distance as usize,
    })
}

/// The inclusive interval of deleted dimensions `i` realizable by closed sets
/// of entropy `kappa` in `S_q(m) - S_q(s)`: `max{0, s-m+kappa} ..= min{s, kappa-1}`.
pub fn restriction_type_range(m: u32, s: u32, kappa: u32) -> Result<Vec<u32>> {
    if m < 3 || s >= m || kappa < 2 || kappa > m - 1 {
        return Err(Error::InvalidArgs(format!(
            "type range needs m >= 3, s <= m-1, 2 <= kappa <= m-1; got m = {m}, s = {s}, kappa = {kappa}"
        )));
    }
    let lo = s.saturating_sub(m - kappa);
    let hi = s.min(kappa - 1);
    Ok((lo..=hi).collect())
}

/// Checks that the restriction of `code` to `set` is isomorphic to
/// `S_q(kappa) - S_q(i)` of type `expected`: (length, dimension, distance,
/// weight enumerator) must match the closed forms, plus an exact permutation
/// equivalence against the reference construction for short lengths.
fn restriction_matches(code: &LinearCode, set: &CoordSet, expected: &RestrictionType) -> Result<bool> {
    if set.len() != expected.length {
        return Ok(false);
    }
    let sub = code.restrict(set)?;
    if sub.dimension() != expected.kappa as usize {
        return Ok(false);
    }
    let q = code.field().order();
    let formula = weight_enumerator_formula(q, expected.kappa, expected.inner())?;
    if *sub.weight_enumerator()?.counts() != *formula.counts() {
        return Ok(false);
    }
    if expected.length <= EQUIVALENCE_CHECK_CAP {
        let reference = punctured_simplex(q, expected.kappa, expected.inner())?;
        if !sub.is_permutation_equivalent(reference.code())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Identifies the unique type `S_q(kappa) - S_q(i)` of the restriction to a
/// closed set with `2 <= H(set) <= m - 1`; errors if no type or more than one
/// type matches (either would contradict the classification).
pub fn identify_flat_type(ps: &PuncturedSimplex, set: &CoordSet) -> Result<RestrictionType> {
    let spec = ps.spec();
    let kappa = ps.code().entropy(set)? as u32;
    let mut matches = Vec::new();
    for i in restriction_type_range(spec.m, spec.s, kappa)? {
        let candidate = restriction_type(spec.q, kappa, i)?;
        if restriction_matches(ps.code(), set, &candidate)? {
            matches.push(candidate);
        }
    }
    match matches.as_slice() {
        [unique] => Ok(*unique),
        [] => Err(Error::UnclassifiedHyperplane(format!(
            "closed set {set} of entropy {kappa} in {} matches no admissible type",
            spec
        ))),
        _ => Err(Error::UnclassifiedHyperplane(format!(
            "closed set {set} of entropy {kappa} in {} matches several types",
            spec
        ))),
    }
}

/// One class of hyperplanes sharing a restriction type.
#[derive(Clone, Debug)]
pub struct HyperplaneClass {
    pub rtype: RestrictionType,
    pub hyperplanes: Vec<CoordSet>,
}

impl HyperplaneClass {
    pub fn count(&self) -> usize {
        self.hyperplanes.len()
    }
}

/// Classifies every hyperplane of the column matroid of `S_q(m) - S_q(s)`.
///
/// Hyperplane restrictions are of type `S(m-1) - S(s)` (those arising from
/// ambient hyperplanes containing the deleted subspace; there are
/// `(q^{m-s} - 1)/(q - 1)` of them when `s <= m - 2`) or `S(m-1) - S(s-1)`
/// (the remainder; present when `s >= 1`). The two lengths differ, so each
/// hyperplane is classified by length and then fully verified.
pub fn classify_hyperplanes(q: u32, m: u32, s: u32) -> Result<Vec<HyperplaneClass>> {
    if m < 3 {
        return Err(Error::InvalidArgs(format!(
            "hyperplane classification needs m >= 3, got m = {m}"
        )));
    }
    let ps = punctured_simplex(q, m, s)?;
    let hyperplanes = matroid::hyperplanes_via_supports(ps.code())?;

    let mut candidates = Vec::new();
    if s <= m - 2 {
        candidates.push(restriction_type(q, m - 1, s)?);
    }
    if s >= 1 {
        candidates.push(restriction_type(q, m - 1, s - 1)?);
    }
    let mut classes: Vec<HyperplaneClass> = candidates
        .iter()
        .map(|&rtype| HyperplaneClass {
            rtype,
            hyperplanes: Vec::new(),
        })
        .collect();

    for h in hyperplanes {
        let slot = classes
            .iter_mut()
            .find(|c| c.rtype.length() == h.len())
            .ok_or_else(|| {
                Error::UnclassifiedHyperplane(format!(
                    "hyperplane {h} of {} has length {} matching no admissible type",
                    ps.spec(),
                    h.len()
                ))
            })?;
        if !restriction_matches(ps.code(), &h, &slot.rtype)? {
            return Err(Error::UnclassifiedHyperplane(format!(
                "hyperplane {h} of {} fails verification against {}",
                ps.spec(),
                slot.rtype
            )));
        }
        slot.hyperplanes.push(h);
    }

    // Count check: the kept-type class is as large as the number of ambient
    // hyperplanes containing the deleted subspace.
    let qq = q as u128;
    let total = ((qq.pow(m) - 1) / (qq - 1)) as usize - usize::from(s == m - 1);
    let mut expected_kept = ((qq.pow(m - s) - 1) / (qq - 1)) as usize;
    if s == m - 1 {
        expected_kept = 0;
    }
    for class in &classes {
        let expected = if class.rtype.inner() == s {
            expected_kept
        } else {
            total - expected_kept
        };
        if class.count() != expected {
            return Err(Error::UnclassifiedHyperplane(format!(
                "{} hyperplanes of type {} in {}, expected {expected}",
                class.count(),
                class.rtype,
                ps.spec()
            )));
        }
    }
    classes.retain(|c| c.count() > 0);
    Ok(classes)
}

/// Maps a coordinate set of a restricted code (1-based positions within
/// `support`) back to the parent code's labels.
fn to_parent_labels(local: &CoordSet, support: &CoordSet) -> CoordSet {
    local.iter().map(|p| support.as_slice()[p - 1]).collect()
}

/// One step of the descent: all hyperplane flats of the restriction to
/// `support` (given as parent-code labels) together with their inner deleted
/// dimension, assuming the restriction has type `S(kappa) - S(j)`.
fn classified_sub_hyperplanes(
    code: &LinearCode,
    support: &CoordSet,
    kappa: u32,
    j: u32,
    q: u32,
) -> Result<Vec<(CoordSet, u32)>> {
    let sub = code.restrict(support)?;
    let keep_len = if j <= kappa - 2 {
        Some(restriction_type(q, kappa - 1, j)?.length())
    } else {
        None
    };
    let decr_len = if j >= 1 {
        Some(restriction_type(q, kappa - 1, j - 1)?.length())
    } else {
        None
    };
    let mut out = Vec::new();
    for h in matroid::hyperplanes_via_supports(&sub)? {
        let inner = if Some(h.len()) == keep_len {
            j
        } else if Some(h.len()) == decr_len {
            j - 1
        } else {
            return Err(Error::UnclassifiedHyperplane(format!(
                "restriction hyperplane of length {} fits neither type at kappa = {}, j = {j}",
                h.len(),
                kappa - 1
            )));
        };
        out.push((to_parent_labels(&h, support), inner));
    }
    out.sort();
    Ok(out)
}

/// Finds a closed set containing `e` whose restriction has type
/// `S_q(kappa) - S_q(i)`, by descending one hyperplane at a time and always
/// taking the lexicographically smallest hyperplane that still reaches the
/// target type.
pub fn find_local_set(ps: &PuncturedSimplex, e: usize, kappa: u32, i: u32) -> Result<CoordSet> {
    let spec = ps.spec();
    let code = ps.code();
    if e < 1 || e > code.length() {
        return Err(Error::IndexOutOfRange {
            index: e,
            n: code.length(),
        });
    }
    if !restriction_type_range(spec.m, spec.s, kappa)?.contains(&i) {
        return Err(Error::InvalidArgs(format!(
            "type S({kappa})-S({i}) is not admissible for {}",
            spec
        )));
    }

    let mut support = CoordSet::full(code.length());
    let mut level = spec.m;
    let mut inner = spec.s;
    while level > kappa {
        let next = classified_sub_hyperplanes(code, &support, level, inner, spec.q)?
            .into_iter()
            .find(|(h, j)| {
                // Reachability: i never exceeds j, and j can drop by at most
                // one per remaining level.
                h.contains(e) && *j >= i && *j - i <= level - 1 - kappa
            });
        match next {
            Some((h, j)) => {
                support = h;
                level -= 1;
                inner = j;
            }
            None => {
                return Err(Error::TypeNotRealizable {
                    symbol: e,
                    kappa,
                    i,
                })
            }
        }
    }

    let target = restriction_type(spec.q, kappa, i)?;
    if !restriction_matches(code, &support, &target)? {
        return Err(Error::TypeNotRealizable {
            symbol: e,
            kappa,
            i,
        });
    }
    Ok(support)
}

/// The per-level distance of the hierarchy chain at dimension `kappa`:
/// the distance of `S(kappa) - S(max{0, s-m+kappa})`.
pub fn chain_distance(q: u32, m: u32, s: u32, kappa: u32) -> Result<usize> {
    let inner = s.saturating_sub(m - kappa);
    Ok(restriction_type(q, kappa, inner)?.distance())
}

/// The smallest chain dimension: 2 in general, 3 for binary codes with
/// `s = m - 1` (where the dimension-2 restriction has distance 1).
fn chain_floor(spec: &PuncturedSimplexSpec) -> u32 {
    if spec.q == 2 && spec.s == spec.m - 1 {
        3
    } else {
        2
    }
}

/// The nested closed sets `F_{m-1} ⊇ ... ⊇ F_2` containing symbol `e`, with
/// `F_kappa` of type `S(kappa) - S(max{0, s-m+kappa})`, listed outermost
/// first. For binary codes with `s = m - 1` the chain stops at dimension 3,
/// so it has `m - 3` levels instead of `m - 2` (empty when `m = 3`).
pub fn hierarchy_chain(ps: &PuncturedSimplex, e: usize) -> Result<Vec<(CoordSet, RestrictionType)>> {
    let spec = ps.spec();
    let code = ps.code();
    if e < 1 || e > code.length() {
        return Err(Error::IndexOutOfRange {
            index: e,
            n: code.length(),
        });
    }
    let floor = chain_floor(&spec);
    let mut chain = Vec::new();
    let mut support = CoordSet::full(code.length());
    let mut inner = spec.s;
    for level in (floor..=spec.m - 1).rev() {
        // Prefer the branch that lowers the deleted dimension, so the type at
        // each level is S(level) - S(max{0, s - m + level}).
        let target_inner = spec.s.saturating_sub(spec.m - level);
        let (h, j) = classified_sub_hyperplanes(code, &support, level + 1, inner, spec.q)?
            .into_iter()
            .find(|(h, j)| h.contains(e) && *j == target_inner)
            .ok_or(Error::TypeNotRealizable {
                symbol: e,
                kappa: level,
                i: target_inner,
            })?;
        support = h;
        inner = j;
        chain.push((support.clone(), restriction_type(spec.q, level, inner)?));
    }
    Ok(chain)
}

/// The hierarchy chain of one symbol, outermost level first.
#[derive(Clone, Debug)]
pub struct SymbolChain {
    pub symbol: usize,
    pub levels: Vec<(CoordSet, RestrictionType)>,
}

/// One locality entry in both bookkeeping conventions: `r_size` counts
/// symbols (set size minus tolerated erasures), `r_dim` counts dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Locality {
    pub rtype: RestrictionType,
    pub r_size: usize,
    pub r_dim: u32,
    pub delta: usize,
}

/// The complete locality data of one code: every restriction type, every
/// locality (types with distance at least 2), and per-symbol hierarchy
/// chains.
#[derive(Clone, Debug)]
pub struct LocalityProfile {
    spec: PuncturedSimplexSpec,
    types: Vec<RestrictionType>,
    localities: Vec<Locality>,
    chains: Vec<SymbolChain>,
}

impl LocalityProfile {
    pub fn spec(&self) -> PuncturedSimplexSpec {
        self.spec
    }

    /// All restriction types, ascending by (kappa, i).
    pub fn types(&self) -> &[RestrictionType] {
        &self.types
    }

    /// Types that yield a locality (distance >= 2), ascending by (kappa, i).
    pub fn localities(&self) -> &[Locality] {
        &self.localities
    }

    /// Per-symbol nested chains, symbol ascending, outermost level first.
    pub fn chains(&self) -> &[SymbolChain] {
        &self.chains
    }

    /// Chain dimensions outermost first, e.g. `[3, 2]` for two levels.
    pub fn chain_levels(&self) -> Vec<u32> {
        let floor = chain_floor(&self.spec);
        (floor..=self.spec.m - 1).rev().collect()
    }

    /// Hierarchical locality parameters `[(r_j, delta_j)]` in the dimension
    /// convention, outermost level first; empty when the chain is empty.
    pub fn hlrc_params(&self) -> Vec<(u32, usize)> {
        self.chain_levels()
            .into_iter()
            .map(|kappa| {
                let inner = self.spec.s.saturating_sub(self.spec.m - kappa);
                let delta = restriction_type(self.spec.q, kappa, inner)
                    .expect("chain types are valid")
                    .distance();
                (kappa, delta)
            })
            .collect()
    }
}

/// Derives the complete locality profile of `S_q(m) - S_q(s)`, `m >= 3`.
pub fn locality_profile(q: u32, m: u32, s: u32) -> Result<LocalityProfile> {
    if m < 3 {
        return Err(Error::InvalidArgs(format!(
            "locality analysis needs m >= 3, got m = {m}"
        )));
    }
    let ps = punctured_simplex(q, m, s)?;
    let spec = ps.spec();

    let mut types = Vec::new();
    for kappa in 2..=m - 1 {
        for i in restriction_type_range(m, s, kappa)? {
            types.push(restriction_type(q, kappa, i)?);
        }
    }
    let localities = types
        .iter()
        .filter(|t| t.distance() >= 2)
        .map(|t| Locality {
            rtype: *t,
            r_size: t.length() - t.distance() + 1,
            r_dim: t.dimension(),
            delta: t.distance(),
        })
        .collect();

    let mut chains = Vec::new();
    for e in 1..=ps.code().length() {
        chains.push(SymbolChain {
            symbol: e,
            levels: hierarchy_chain(&ps, e)?,
        });
    }
    Ok(LocalityProfile {
        spec,
        types,
        localities,
        chains,
    })
}

/// Closed-form weight enumerator of `S_q(m) - S_q(s)`: apart from zero, the
/// weights are `q^{m-1} - q^{s-1}` (for `q^m - q^{m-s}` codewords) and
/// `q^{m-1}` (for `q^{m-s} - 1` codewords). For `s = 0` only the constant
/// weight `q^{m-1}` remains.
pub fn weight_enumerator_formula(q: u32, m: u32, s: u32) -> Result<WeightEnumerator> {
    let spec = PuncturedSimplexSpec::new(q, m, s)?;
    if m < 2 {
        return Err(Error::InvalidArgs(format!(
            "weight formula needs m >= 2, got m = {m}"
        )));
    }
    let (n, _, _) = spec.expected_params();
    if n > MAX_LENGTH {
        return Err(Error::InvalidArgs(format!(
            "length {n} exceeds the {MAX_LENGTH} cap"
        )));
    }
    let qq = q as u128;
    let mut counts = std::collections::BTreeMap::new();
    counts.insert(0usize, 1u128);
    if s == 0 {
        counts.insert(qq.pow(m - 1) as usize, qq.pow(m) - 1);
    } else {
        counts.insert(
            (qq.pow(m - 1) - qq.pow(s - 1)) as usize,
            qq.pow(m) - qq.pow(m - s),
        );
        counts.insert(qq.pow(m - 1) as usize, qq.pow(m - s) - 1);
    }
    Ok(WeightEnumerator::new(n as usize, counts))
}

/// Result of a hierarchical-locality verification: either everything checked
/// out, or `witness` describes the first violated condition.
#[derive(Clone, Debug)]
pub struct VerifyOutcome {
    pub ok: bool,
    pub witness: Option<String>,
}

impl VerifyOutcome {
    fn fail(witness: String) -> VerifyOutcome {
        VerifyOutcome {
            ok: false,
            witness: Some(witness),
        }
    }
}

/// Verifies that per-symbol chains witness hierarchical locality with the
/// given `[(r_j, delta_j)]` levels (dimension convention, outermost first):
/// every symbol needs a chain of nested sets containing it whose level-j set
/// has entropy at most `r_j` and restricted distance at least `delta_j`.
pub fn verify_hlrc(
    code: &LinearCode,
    chains: &[SymbolChain],
    params: &[(u32, usize)],
) -> Result<VerifyOutcome> {
    let mut covered = vec![false; code.length() + 1];
    let mut distance_cache: HashMap<CoordSet, usize> = HashMap::new();
    for chain in chains {
        let e = chain.symbol;
        if e < 1 || e > code.length() {
            return Err(Error::IndexOutOfRange {
                index: e,
                n: code.length(),
            });
        }
        covered[e] = true;
        if chain.levels.len() != params.len() {
            return Ok(VerifyOutcome::fail(format!(
                "symbol {e}: chain has {} levels, parameters have {}",
                chain.levels.len(),
                params.len()
            )));
        }
        let mut previous: Option<&CoordSet> = None;
        for ((set, _), &(r, delta)) in chain.levels.iter().zip(params) {
            if !set.contains(e) {
                return Ok(VerifyOutcome::fail(format!(
                    "symbol {e}: level set {set} does not contain it"
                )));
            }
            if let Some(outer) = previous {
                if !set.is_subset_of(outer) {
                    return Ok(VerifyOutcome::fail(format!(
                        "symbol {e}: level set {set} is not nested in {outer}"
                    )));
                }
            }
            let entropy = code.entropy(set)?;
            if entropy > r as usize {
                return Ok(VerifyOutcome::fail(format!(
                    "symbol {e}: set {set} has entropy {entropy} > r = {r}"
                )));
            }
            let dist = match distance_cache.get(set) {
                Some(&d) => d,
                None => {
                    let d = code.restrict(set)?.min_distance()?;
                    distance_cache.insert(set.clone(), d);
                    d
                }
            };
            if dist < delta {
                return Ok(VerifyOutcome::fail(format!(
                    "symbol {e}: set {set} has distance {dist} < delta = {delta}"
                )));
            }
            previous = Some(set);
        }
    }
    if let Some(e) = (1..=code.length()).find(|&e| !covered[e]) {
        return Ok(VerifyOutcome::fail(format!("symbol {e}: no chain supplied")));
    }
    Ok(VerifyOutcome {
        ok: true,
        witness: None,
    })
}
