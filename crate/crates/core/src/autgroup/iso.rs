//! Quotient groups and isomorphism search between small Cayley tables.

use super::element_orders;

/// Cayley table of `G/N` for a normal subgroup `N` (sorted elements), cosets
/// indexed by their smallest element in increasing order. Also returns the
/// coset index of each element of `G`.
pub fn quotient_table(table: &[Vec<usize>], normal: &[usize]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let n = table.len();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for g in 0..n {
        if coset_of[g] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(g);
        for &h in normal {
            coset_of[table[g][h]] = id;
        }
    }
    let q = reps
        .iter()
        .map(|&a| reps.iter().map(|&b| coset_of[table[a][b]]).collect())
        .collect();
    (q, coset_of)
}

/// Greedy generating set: add any element outside the subgroup generated so far.
fn generators(table: &[Vec<usize>]) -> Vec<usize> {
    let n = table.len();
    let mut gens = Vec::new();
    let mut span = vec![false; n];
    span[0] = true;
    for g in 1..n {
        if span[g] {
            continue;
        }
        gens.push(g);
        let mut members: Vec<usize> = (0..n).filter(|&x| span[x]).collect();
        let mut i = 0;
        while i < members.len() {
            for &s in &gens {
                let y = table[members[i]][s];
                if !span[y] {
                    span[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
    }
    gens
}

/// Extends generator images to a map on all of `a` by walking words; `None`
/// if the assignment is inconsistent.
fn extend(a: &[Vec<usize>], b: &[Vec<usize>], gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
    let n = a.len();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut queue = vec![0];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (&g, &gi) in gens.iter().zip(imgs) {
            let y = a[x][g];
            let img = b[map[x]][gi];
            if map[y] == usize::MAX {
                map[y] = img;
                queue.push(y);
            } else if map[y] != img {
                return None;
            }
        }
        i += 1;
    }
    Some(map)
}

/// An isomorphism `a -> b` as an element map, found by backtracking over
/// images of a generating set that preserve element orders.
pub fn find_isomorphism(a: &[Vec<usize>], b: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() {
        return None;
    }
    let (oa, ob) = (element_orders(a), element_orders(b));
    let mut sa = oa.clone();
    let mut sb = ob.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let gens = generators(a);
    let mut imgs = Vec::with_capacity(gens.len());
    search(a, b, &gens, &oa, &ob, &mut imgs)
}

fn search(
    a: &[Vec<usize>],
    b: &[Vec<usize>],
    gens: &[usize],
    oa: &[usize],
    ob: &[usize],
    imgs: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if imgs.len() == gens.len() {
        let map = extend(a, b, gens, imgs)?;
        let mut hit = vec![false; b.len()];
        for &y in &map {
            if y == usize::MAX || std::mem::replace(&mut hit[y], true) {
                return None;
            }
        }
        let hom = (0..a.len()).all(|x| (0..a.len()).all(|y| map[a[x][y]] == b[map[x]][map[y]]));
        return hom.then_some(map);
    }
    let g = gens[imgs.len()];
    for cand in 0..b.len() {
        if ob[cand] != oa[g] {
            continue;
        }
        imgs.push(cand);
        if let Some(m) = search(a, b, gens, oa, ob, imgs) {
            return Some(m);
        }
        imgs.pop();
    }
    None
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

    #[test]
    fn c4_is_not_klein() {
        assert!(find_isomorphism(&cyclic(4), &klein()).is_none());
        assert!(find_isomorphism(&klein(), &klein()).is_some());
    }

    #[test]
    fn relabelled_cyclic_group() {
        // C5 with generator 2: x -> 2x mod 5 relabelling
        let c = cyclic(5);
        let perm = [0, 2, 4, 1, 3];
        let mut b = vec![vec![0; 5]; 5];
        for x in 0..5 {
            for y in 0..5 {
                b[perm[x]][perm[y]] = perm[c[x][y]];
            }
        }
        let m = find_isomorphism(&c, &b).unwrap();
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(m[c[x][y]], b[m[x]][m[y]]);
            }
        }
    }

    #[test]
    fn quotient_of_c6_by_c3_is_c2() {
        let c6 = cyclic(6);
        let (q, coset) = quotient_table(&c6, &[0, 2, 4]);
        assert_eq!(q.len(), 2);
        assert!(find_isomorphism(&q, &cyclic(2)).is_some());
        assert_eq!(coset, vec![0, 1, 0, 1, 0, 1]);
    }
}
