//! Membership sets over the elements of a [`GroupTable`](crate::GroupTable).

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

/// A subgroup of some parent table, stored as a membership bitset.
///
/// A `Subgroup` does not hold a reference to its parent; every operation that
/// needs the multiplication takes the parent table explicitly. Values are only
/// produced by table operations that guarantee closure, or by the checked
/// [`GroupTable::subgroup_from_elements`](crate::GroupTable::subgroup_from_elements).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: FixedBitSet,
    order: usize,
}

impl Subgroup {
    pub(crate) fn from_bits(members: FixedBitSet) -> Self {
        let order = members.count_ones(..);
        Subgroup { members, order }
    }

    pub fn trivial(parent_order: usize) -> Self {
        let mut members = FixedBitSet::with_capacity(parent_order);
        members.insert(0);
        Subgroup { members, order: 1 }
    }

    pub fn whole(parent_order: usize) -> Self {
        let mut members = FixedBitSet::with_capacity(parent_order);
        members.insert_range(..);
        Subgroup {
            members,
            order: parent_order,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Order of the parent table this set lives in.
    pub fn parent_order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order == self.members.len()
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.members
    }

    /// Member indices in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.ones().collect()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order <= other.order && self.members.is_subset(&other.members)
    }

    pub fn is_proper_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order < other.order && self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        Subgroup::from_bits(members)
    }

    pub fn index_in(&self, other: &Subgroup) -> usize {
        other.order / self.order
    }

    /// Canonical order: by order, then lexicographically by sorted member list.
    pub fn canonical_cmp(&self, other: &Subgroup) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.ones().cmp(other.members.ones()))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order <= 16 {
            write!(f, "Subgroup(order {}, {:?})", self.order, self.to_vec())
        } else {
            write!(
                f,
                "Subgroup(order {} of {})",
                self.order,
                self.parent_order()
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_whole() {
        let t = Subgroup::trivial(6);
        let w = Subgroup::whole(6);
        assert!(t.is_trivial() && !t.is_whole());
        assert!(w.is_whole() && w.order() == 6);
        assert!(t.is_proper_subgroup_of(&w));
        assert_eq!(t.intersection(&w), t);
        assert_eq!(t.index_in(&w), 6);
        assert_eq!(t.canonical_cmp(&w), Ordering::Less);
    }
}
