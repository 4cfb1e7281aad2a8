//! The skew group algebra `L ⋊ H` inside `End_K(L)`, spanned by the products
//! `M(b_i) S_g` of multiplication matrices and automorphism matrices.

use super::Subalgebra;
use crate::autgroup::AutGroup;
use crate::exactcore::field::Field;
use crate::exactcore::linalg::{self, Mat, Subspace};
use crate::tower::Tower;

#[derive(Clone, Debug)]
pub struct SkewGroupAlgebra<E> {
    pub algebra: Subalgebra<E>,
    /// Group elements indexing the components `L S_g`.
    pub elements: Vec<usize>,
    /// Whether the components are independent: `dim = [L:K] |H|`.
    pub direct: bool,
    /// Whether `(λ S_g)(μ S_h) = λ g(μ) S_{gh}` holds on all labeled pairs.
    pub rule_holds: bool,
}

/// `L ⋊ H` for the subgroup `H` (element indices) of `group`.
pub fn skew_group_algebra<F: Field>(
    tower: &Tower<F>,
    group: &AutGroup<F::Elem>,
    subgroup: &[usize],
) -> SkewGroupAlgebra<F::Elem> {
    let f = tower.field();
    let n = tower.degree();
    let mult: Vec<Mat<F::Elem>> = (0..n).map(|i| tower.left_mul_matrix(&tower.basis(i))).collect();
    let mut labeled = Vec::with_capacity(n * subgroup.len());
    for &g in subgroup {
        for m in &mult {
            labeled.push(linalg::mat_mul(f, m, group.matrix(g)));
        }
    }
    let algebra = Subalgebra::span(f, n, &labeled, "skew");
    let direct = algebra.dim() == n * subgroup.len();
    let mut rule_holds = true;
    'outer: for (gi, &g) in subgroup.iter().enumerate() {
        for (hi, &h) in subgroup.iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    let lhs = linalg::mat_mul(f, &labeled[gi * n + i], &labeled[hi * n + j]);
                    let gj = group.element(g).apply(f, &tower.basis(j));
                    let lam = tower.mul(&tower.basis(i), &gj);
                    let rhs = linalg::mat_mul(f, &tower.left_mul_matrix(&lam), group.matrix(group.mul(g, h)));
                    if lhs != rhs {
                        rule_holds = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    SkewGroupAlgebra {
        algebra,
        elements: subgroup.to_vec(),
        direct,
        rule_holds,
    }
}

/// `L ⋊ H` for each listed subgroup, tagged with its position.
pub fn subalgebras_containing_l<F: Field>(
    tower: &Tower<F>,
    group: &AutGroup<F::Elem>,
    subgroups: &[Vec<usize>],
) -> Vec<SkewGroupAlgebra<F::Elem>> {
    subgroups
        .iter()
        .enumerate()
        .map(|(k, h)| {
            let mut s = skew_group_algebra(tower, group, h);
            s.algebra.tag = format!("L x H{k}");
            s
        })
        .collect()
}

/// `{g : S_g ∈ A}`.
pub fn group_part<F: Field>(f: &F, group: &AutGroup<F::Elem>, a: &Subalgebra<F::Elem>) -> Vec<usize> {
    (0..group.order()).filter(|&g| a.contains(f, group.matrix(g))).collect()
}

/// Whether `S_g A S_g^{-1} ⊆ A` for every `g`, by conjugating a basis.
pub fn is_g_stable<F: Field>(f: &F, group: &AutGroup<F::Elem>, a: &Subalgebra<F::Elem>) -> bool {
    let basis = a.basis();
    (0..group.order()).all(|g| {
        let s = group.matrix(g);
        let s_inv = group.matrix(group.inv(g));
        basis
            .iter()
            .all(|b| a.contains(f, &linalg::mat_mul(f, &linalg::mat_mul(f, s, b), s_inv)))
    })
}

/// Dimension over L of the L-bimodule maps `L S_g -> L S_h`. In coordinates
/// `λ S_g <-> λ`, left multiplication by `μ` acts as `M(μ)` on both sides and
/// right multiplication acts as `M(g μ)` and `M(h μ)`; the maps are the
/// solutions `F` of `F M(μ) = M(μ) F` and `F M(gμ) = M(hμ) F`.
pub fn bimodule_hom_dim<F: Field>(tower: &Tower<F>, group: &AutGroup<F::Elem>, g: usize, h: usize) -> usize {
    let f = tower.field();
    let n = tower.degree();
    let mut eqs = Subspace::zero(n * n);
    for i in 0..n {
        let b = tower.basis(i);
        let m = tower.left_mul_matrix(&b);
        let mg = tower.left_mul_matrix(&group.element(g).apply(f, &b));
        let mh = tower.left_mul_matrix(&group.element(h).apply(f, &b));
        for (right, left) in [(&m, &m), (&mg, &mh)] {
            // (F R - L F)_{rc} = sum_k F_rk R_kc - L_rk F_kc
            for r in 0..n {
                for c in 0..n {
                    let mut row = vec![f.zero(); n * n];
                    for k in 0..n {
                        row[r * n + k] = f.add(&row[r * n + k], right.get(k, c));
                        row[k * n + c] = f.sub(&row[k * n + c], left.get(r, k));
                    }
                    eqs.insert(f, row);
                }
            }
        }
    }
    (n * n - eqs.dim()) / n
}
