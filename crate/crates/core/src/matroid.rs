//! Column matroids of linear codes: rank, closure, deletion, flats.
//!
//! The matroid of a code has the coordinates as ground set and the entropy
//! function (column rank) as rank function. Ground-set elements keep their
//! labels under deletion, so the matroid obtained by deleting columns of a
//! simplex code can be compared label-by-label against the matroid of the
//! punctured code.
//!
//! Flats are materialized bottom-up: starting from the closure of the empty
//! set, the flats of rank r + 1 are the closures `cl(F + e)` over flats F of
//! rank r and elements e outside F. Materialization is capped at
//! [`FLAT_GROUND_CAP`] elements and [`FLAT_RANK_CAP`] rank.

use std::collections::{BTreeSet, HashMap};

use crate::codes::LinearCode;
use crate::coords::CoordSet;
use crate::gf::FiniteField;
use crate::linalg;
use crate::{Error, Result};

/// Ground-set size cap for flat materialization.
pub const FLAT_GROUND_CAP: usize = 64;

/// Rank cap for flat materialization.
pub const FLAT_RANK_CAP: usize = 7;

/// A representable matroid with labeled ground set.
#[derive(Clone, Debug)]
pub struct Matroid {
    field: FiniteField,
    /// Ascending labels with their representing columns.
    elements: Vec<(usize, Vec<u8>)>,
    /// Ambient vector-space dimension.
    dim: usize,
}

impl Matroid {
    /// The column matroid of a code, ground set {1, ..., n}.
    pub fn from_code(code: &LinearCode) -> Matroid {
        Matroid {
            field: *code.field(),
            elements: code
                .columns()
                .iter()
                .enumerate()
                .map(|(j, c)| (j + 1, c.clone()))
                .collect(),
            dim: code.dimension(),
        }
    }

    pub fn ground(&self) -> CoordSet {
        self.elements.iter().map(|(label, _)| *label).collect()
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    fn column(&self, label: usize) -> Result<&Vec<u8>> {
        self.elements
            .binary_search_by_key(&label, |(l, _)| *l)
            .map(|pos| &self.elements[pos].1)
            .map_err(|_| Error::IndexOutOfRange {
                index: label,
                n: self.elements.last().map_or(0, |(l, _)| *l),
            })
    }

    /// Rank of a labeled subset.
    pub fn rank(&self, set: &CoordSet) -> Result<usize> {
        let mut basis = linalg::Basis::new(self.field, self.dim);
        for e in set.iter() {
            basis.insert(self.column(e)?);
        }
        Ok(basis.rank())
    }

    /// Rank of the whole ground set.
    pub fn full_rank(&self) -> usize {
        self.rank(&self.ground()).expect("ground set is valid")
    }

    /// Closure of a labeled subset within the ground set.
    pub fn closure(&self, set: &CoordSet) -> Result<CoordSet> {
        let mut basis = linalg::Basis::new(self.field, self.dim);
        for e in set.iter() {
            basis.insert(self.column(e)?);
        }
        Ok(self
            .elements
            .iter()
            .filter(|(_, col)| basis.contains_in_span(col))
            .map(|(label, _)| *label)
            .collect())
    }

    /// Deletion `M \ Y`: the matroid on `E - Y` with the rank function
    /// restricted; labels are preserved.
    pub fn delete(&self, y: &CoordSet) -> Result<Matroid> {
        for e in y.iter() {
            self.column(e)?;
        }
        Ok(Matroid {
            field: self.field,
            elements: self
                .elements
                .iter()
                .filter(|(label, _)| !y.contains(*label))
                .cloned()
                .collect(),
            dim: self.dim,
        })
    }

    /// Restriction `M | Y`, i.e. deletion of the complement of `Y`.
    pub fn restriction(&self, y: &CoordSet) -> Result<Matroid> {
        self.delete(&self.ground().difference(y))
    }

    /// Materializes the lattice of flats, bottom-up by rank.
    pub fn flats(&self) -> Result<FlatLattice> {
        let n = self.size();
        let full = self.full_rank();
        if n > FLAT_GROUND_CAP || full > FLAT_RANK_CAP {
            return Err(Error::MaterializationCapExceeded {
                n,
                rank: full,
                n_cap: FLAT_GROUND_CAP,
                rank_cap: FLAT_RANK_CAP,
            });
        }
        let ground = self.ground();
        let mut levels: Vec<Vec<CoordSet>> = vec![vec![self.closure(&CoordSet::empty())?]];
        for r in 0..full {
            let mut next: BTreeSet<CoordSet> = BTreeSet::new();
            for flat in &levels[r] {
                // Every e in an already-found child C of this flat satisfies
                // cl(flat + e) = C, so such elements can be skipped.
                let mut covered = flat.clone();
                for e in ground.iter() {
                    if covered.contains(e) {
                        continue;
                    }
                    let child = self.closure(&flat.with(e))?;
                    covered = covered.union(&child);
                    next.insert(child);
                }
            }
            levels.push(next.into_iter().collect());
        }
        let mut flats = Vec::new();
        let mut index = HashMap::new();
        for (rank, level) in levels.iter().enumerate() {
            for set in level {
                index.insert(set.clone(), flats.len());
                flats.push(Flat {
                    set: set.clone(),
                    rank,
                });
            }
        }
        Ok(FlatLattice {
            matroid: self.clone(),
            flats,
            index,
            full_rank: full,
        })
    }
}

/// One flat with its rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    pub set: CoordSet,
    pub rank: usize,
}

/// The materialized flat lattice of a matroid, ordered by (rank, lex).
#[derive(Clone, Debug)]
pub struct FlatLattice {
    matroid: Matroid,
    flats: Vec<Flat>,
    index: HashMap<CoordSet, usize>,
    full_rank: usize,
}

impl FlatLattice {
    pub fn all(&self) -> &[Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn full_rank(&self) -> usize {
        self.full_rank
    }

    pub fn of_rank(&self, rank: usize) -> impl Iterator<Item = &Flat> {
        self.flats.iter().filter(move |f| f.rank == rank)
    }

    /// Flats of rank one below the full rank.
    pub fn hyperplanes(&self) -> Vec<CoordSet> {
        self.of_rank(self.full_rank.saturating_sub(1))
            .map(|f| f.set.clone())
            .collect()
    }

    pub fn position(&self, set: &CoordSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    pub fn flat(&self, idx: usize) -> &Flat {
        &self.flats[idx]
    }

    /// Lattice meet: intersection of flats.
    pub fn meet(&self, a: usize, b: usize) -> usize {
        let set = self.flats[a].set.intersection(&self.flats[b].set);
        *self
            .index
            .get(&set)
            .expect("intersection of flats is a flat")
    }

    /// Lattice join: closure of the union.
    pub fn join(&self, a: usize, b: usize) -> usize {
        let set = self
            .matroid
            .closure(&self.flats[a].set.union(&self.flats[b].set))
            .expect("flat members are ground elements");
        *self.index.get(&set).expect("closure is a flat")
    }

    /// Covering relation: rank difference one, containment, and no
    /// intermediate flat in the materialized list.
    pub fn covers(&self, lower: usize, upper: usize) -> bool {
        let (lo, hi) = (&self.flats[lower], &self.flats[upper]);
        if hi.rank != lo.rank + 1 || !lo.set.is_subset_of(&hi.set) {
            return false;
        }
        !self.flats.iter().any(|f| {
            f.rank > lo.rank
                && f.rank < hi.rank
                && lo.set.is_subset_of(&f.set)
                && f.set.is_subset_of(&hi.set)
                && f.set != lo.set
                && f.set != hi.set
        })
    }

    /// All covering pairs `(lower, upper)` as indices into [`Self::all`].
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for upper in 0..self.flats.len() {
            for lower in 0..self.flats.len() {
                if self.flats[lower].rank + 1 == self.flats[upper].rank
                    && self.covers(lower, upper)
                {
                    out.push((lower, upper));
                }
            }
        }
        out
    }
}

/// Hyperplanes of the column matroid of `code`, computed as complements of
/// minimal nonzero codeword supports (no flat materialization).
pub fn hyperplanes_via_supports(code: &LinearCode) -> Result<Vec<CoordSet>> {
    let mut supports: BTreeSet<CoordSet> = BTreeSet::new();
    code.for_each_codeword(|cw| {
        let supp: CoordSet = cw
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(j, _)| j + 1)
            .collect();
        if !supp.is_empty() {
            supports.insert(supp);
        }
    })?;
    let minimal: Vec<&CoordSet> = supports
        .iter()
        .filter(|s| {
            !supports
                .iter()
                .any(|t| t != *s && t.is_subset_of(s))
        })
        .collect();
    let full = CoordSet::full(code.length());
    let mut hyperplanes: Vec<CoordSet> = minimal.into_iter().map(|s| full.difference(s)).collect();
    hyperplanes.sort();
    Ok(hyperplanes)
}

/// Flats of the restriction `M | Y`, computed as `{F intersect Y}` over the
/// flats of `M`, deduplicated and ordered by (rank, lex).
pub fn restriction_flats(matroid: &Matroid, y: &CoordSet) -> Result<Vec<CoordSet>> {
    let lattice = matroid.flats()?;
    let mut seen: BTreeSet<CoordSet> = BTreeSet::new();
    for flat in lattice.all() {
        seen.insert(flat.set.intersection(y));
    }
    let mut out: Vec<(usize, CoordSet)> = seen
        .into_iter()
        .map(|set| {
            let rank = matroid.rank(&set).expect("subset of ground");
            (rank, set)
        })
        .collect();
    out.sort();
    Ok(out.into_iter().map(|(_, set)| set).collect())
}
