//! Subgroup lattice by closing cyclic subgroups under pairwise joins.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    /// Sorted element indices.
    pub elements: Vec<usize>,
    pub normal: bool,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }
}

fn mask_elements(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Smallest subgroup containing the elements of `mask`.
fn closure(table: &[Vec<usize>], mask: u64) -> u64 {
    let mut m = mask | 1;
    loop {
        let els = mask_elements(m);
        let mut next = m;
        for &a in &els {
            for &b in &els {
                next |= 1 << table[a][b];
            }
        }
        if next == m {
            return m;
        }
        m = next;
    }
}

fn is_normal(table: &[Vec<usize>], inverse: &[usize], mask: u64) -> bool {
    let els = mask_elements(mask);
    (0..table.len()).all(|g| {
        els.iter()
            .all(|&h| mask >> table[table[g][h]][inverse[g]] & 1 == 1)
    })
}

/// Every subgroup exactly once, sorted by order and then element list.
pub fn enumerate_subgroups(table: &[Vec<usize>], cap: usize) -> Result<Vec<Subgroup>> {
    let order = table.len();
    if order > cap || order > 64 {
        return Err(Error::SubgroupCap { order, cap });
    }
    let inverse: Vec<usize> = (0..order)
        .map(|g| (0..order).find(|&h| table[g][h] == 0).unwrap())
        .collect();
    let mut found: Vec<u64> = Vec::new();
    for g in 0..order {
        let c = closure(table, 1 << g);
        if !found.contains(&c) {
            found.push(c);
        }
    }
    let mut frontier = found.clone();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for &a in &frontier {
            for &b in &found.clone() {
                let j = closure(table, a | b);
                if !found.contains(&j) {
                    found.push(j);
                    fresh.push(j);
                }
            }
        }
        frontier = fresh;
    }
    let mut subs: Vec<Subgroup> = found
        .into_iter()
        .map(|m| Subgroup {
            elements: mask_elements(m),
            normal: is_normal(table, &inverse, m),
        })
        .collect();
    subs.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
    Ok(subs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
    }

    fn klein() -> Vec<Vec<usize>> {
        (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect()
    }

    /// S3 as permutations of {0,1,2}, identity first.
    fn s3() -> Vec<Vec<usize>> {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        perms
            .iter()
            .map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect()
    }

    /// Oracle: test every subset for closure.
    fn brute_force_count(table: &[Vec<usize>]) -> usize {
        let n = table.len();
        (0u64..1 << n)
            .filter(|m| m & 1 == 1)
            .filter(|&m| {
                let els = mask_elements(m);
                els.iter().all(|&a| els.iter().all(|&b| m >> table[a][b] & 1 == 1))
            })
            .count()
    }

    #[test]
    fn klein_four_has_five_subgroups() {
        let s = enumerate_subgroups(&klein(), 64).unwrap();
        assert_eq!(s.len(), 5);
        assert_eq!(brute_force_count(&klein()), 5);
        assert!(s.iter().all(|h| h.normal));
    }

    #[test]
    fn cyclic_groups_follow_divisor_counts() {
        assert_eq!(enumerate_subgroups(&cyclic(4), 64).unwrap().len(), 3);
        assert_eq!(enumerate_subgroups(&cyclic(6), 64).unwrap().len(), 4);
        assert_eq!(enumerate_subgroups(&cyclic(1), 64).unwrap().len(), 1);
    }

    #[test]
    fn s3_lattice() {
        let s = enumerate_subgroups(&s3(), 64).unwrap();
        assert_eq!(s.len(), brute_force_count(&s3()));
        assert_eq!(s.len(), 6);
        assert_eq!(s.iter().filter(|h| h.normal).count(), 3);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_subgroups(&cyclic(8), 4),
            Err(Error::SubgroupCap { order: 8, cap: 4 })
        ));
    }
}
