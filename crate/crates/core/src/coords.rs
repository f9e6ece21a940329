//! Sets of 1-based coordinate indices.
//!
//! [`CoordSet`] stores its members sorted ascending, which makes the derived
//! `Ord` the lexicographic order on sorted member lists — the tie-breaking
//! order used everywhere a canonical "smallest" set is required.

/// An immutable-by-convention set of 1-based coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoordSet {
    members: Vec<usize>,
}

impl CoordSet {
    /// The empty set.
    pub fn empty() -> Self {
        CoordSet { members: Vec::new() }
    }

    /// The full set {1, ..., n}.
    pub fn full(n: usize) -> Self {
        CoordSet {
            members: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.members.binary_search(&e).is_ok()
    }

    /// Ascending member iteration.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn insert(&mut self, e: usize) {
        if let Err(pos) = self.members.binary_search(&e) {
            self.members.insert(pos, e);
        }
    }

    pub fn remove(&mut self, e: usize) {
        if let Ok(pos) = self.members.binary_search(&e) {
            self.members.remove(pos);
        }
    }

    /// This set plus one element.
    pub fn with(&self, e: usize) -> Self {
        let mut out = self.clone();
        out.insert(e);
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.members.len() && j < other.members.len() {
            match self.members[i].cmp(&other.members[j]) {
                std::cmp::Ordering::Less => {
                    out.push(self.members[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.members[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(self.members[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.members[i..]);
        out.extend_from_slice(&other.members[j..]);
        CoordSet { members: out }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        CoordSet {
            members: self
                .members
                .iter()
                .copied()
                .filter(|e| other.contains(*e))
                .collect(),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        CoordSet {
            members: self
                .members
                .iter()
                .copied()
                .filter(|e| !other.contains(*e))
                .collect(),
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.members.iter().all(|e| other.contains(*e))
    }

    pub fn is_disjoint_from(&self, other: &Self) -> bool {
        self.members.iter().all(|e| !other.contains(*e))
    }
}

impl FromIterator<usize> for CoordSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut members: Vec<usize> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        CoordSet { members }
    }
}

impl<const N: usize> From<[usize; N]> for CoordSet {
    fn from(arr: [usize; N]) -> Self {
        arr.into_iter().collect()
    }
}

impl From<Vec<usize>> for CoordSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl std::fmt::Display for CoordSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (idx, e) in self.members.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_sorts_and_dedups() {
        let s = CoordSet::from([3, 1, 2, 3]);
        assert_eq!(s.as_slice(), &[1, 2, 3]);
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn set_operations() {
        let a = CoordSet::from([1, 2, 5]);
        let b = CoordSet::from([2, 3]);
        assert_eq!(a.union(&b).as_slice(), &[1, 2, 3, 5]);
        assert_eq!(a.intersection(&b).as_slice(), &[2]);
        assert_eq!(a.difference(&b).as_slice(), &[1, 5]);
        assert!(CoordSet::from([2]).is_subset_of(&b));
        assert!(!a.is_subset_of(&b));
        assert!(a.is_disjoint_from(&CoordSet::from([4, 6])));
    }

    #[test]
    fn ordering_is_lexicographic_on_sorted_members() {
        // {1,2,4} precedes {1,3}: first differing member decides.
        assert!(CoordSet::from([1, 2, 4]) < CoordSet::from([1, 3]));
        // A strict prefix precedes its extensions.
        assert!(CoordSet::from([1, 2]) < CoordSet::from([1, 2, 4]));
        assert!(CoordSet::empty() < CoordSet::from([1]));
    }

    #[test]
    fn display_format() {
        assert_eq!(CoordSet::from([2, 1]).to_string(), "{1,2}");
        assert_eq!(CoordSet::empty().to_string(), "{}");
    }
}
