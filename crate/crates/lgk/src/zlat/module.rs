use num_bigint::BigInt;

use super::{FinAbGroup, FiniteGroup, IntMatrix};
use crate::error::{LgkError, Result};

/// Free Z-module of finite rank with an action of a finite group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaModule {
    pub rank: usize,
    pub group: FiniteGroup,
    /// action[g] is the matrix of g, one per group element
    pub action: Vec<IntMatrix>,
}

/// Coinvariants X_Gamma together with the projection in SNF-adapted
/// coordinates: row i of `projection` computes the i-th coordinate of the
/// image of x, where coordinate i lives in Z/d_i (or Z past the relations).
#[derive(Debug, Clone)]
pub struct Coinvariants {
    pub group: FinAbGroup,
    pub projection: IntMatrix,
    /// diagonal of the SNF of the relation matrix, aligned with projection rows
    pub diagonal: Vec<BigInt>,
}

impl GammaModule {
    pub fn new(rank: usize, group: FiniteGroup, action: Vec<IntMatrix>) -> Result<Self> {
        if action.len() != group.order {
            return Err(LgkError::Module("one action matrix per group element required".into()));
        }
        for (g, m) in action.iter().enumerate() {
            if m.rows != rank || m.cols != rank {
                return Err(LgkError::Module(format!("action matrix {g} has wrong shape")));
            }
            if !m.is_unimodular() {
                return Err(LgkError::Module(format!(
                    "action matrix {g} is not invertible over Z"
                )));
            }
        }
        if !action[group.identity].is_identity() {
            return Err(LgkError::Module("identity must act trivially".into()));
        }
        for g in 0..group.order {
            for h in 0..group.order {
                if action[g].mul(&action[h]) != action[group.mul(g, h)] {
                    return Err(LgkError::Module(format!(
                        "action is not a homomorphism at ({g},{h})"
                    )));
                }
            }
        }
        Ok(GammaModule { rank, group, action })
    }

    /// Trivial action of the given group.
    pub fn trivial(rank: usize, group: FiniteGroup) -> Self {
        let action = vec![IntMatrix::identity(rank); group.order];
        GammaModule { rank, group, action }
    }

    /// Rank-n lattice with trivial group.
    pub fn split(rank: usize) -> Self {
        Self::trivial(rank, FiniteGroup::trivial())
    }

    /// Contragredient module: same group acting by inverse transpose.
    pub fn dual(&self) -> GammaModule {
        let action = self
            .action
            .iter()
            .map(|m| m.unimodular_inverse().transpose())
            .collect();
        GammaModule { rank: self.rank, group: self.group.clone(), action }
    }

    /// Columns of all (g - 1), the augmentation submodule generators.
    pub fn augmentation_matrix(&self) -> IntMatrix {
        let id = IntMatrix::identity(self.rank);
        let mut cols = Vec::new();
        for m in &self.action {
            let diff = m.sub(&id);
            for j in 0..self.rank {
                cols.push(diff.column(j));
            }
        }
        IntMatrix::from_columns(self.rank, &cols)
    }

    /// Norm map N = sum of all action matrices.
    pub fn norm_matrix(&self) -> IntMatrix {
        let mut n = IntMatrix::zero(self.rank, self.rank);
        for m in &self.action {
            n = n.add(m);
        }
        n
    }

    /// X_Gamma = X / sum_g (g - 1) X.
    pub fn coinvariants(&self) -> Coinvariants {
        let rel = self.augmentation_matrix();
        let snf = rel.smith_normal_form();
        let group = FinAbGroup::from_diagonal(self.rank, &snf.d.diagonal());
        Coinvariants { group, projection: snf.u, diagonal: snf.d.diagonal() }
    }

    /// Basis matrix (rows) of the sublattice fixed by every group element.
    pub fn invariants(&self) -> IntMatrix {
        // kernel of the stacked (g - 1); saturated, so the SNF kernel basis
        // is a basis of the fixed sublattice itself
        let id = IntMatrix::identity(self.rank);
        let mut stacked = IntMatrix::zero(0, self.rank);
        for m in &self.action {
            stacked = stacked.vconcat(&m.sub(&id));
        }
        stacked.kernel_basis().transpose()
    }

    /// Tate cohomology in degree -1: ker(N) / I_Gamma X. Always finite.
    ///
    /// Asserts agreement with the torsion of the coinvariants, the two
    /// descriptions of the same group.
    pub fn tate_h_minus1(&self) -> FinAbGroup {
        let kernel = self.norm_matrix().kernel_basis(); // rank x k
        let k = kernel.cols;
        // augmentation generators lie in ker N; express them in the kernel basis
        let aug = self.augmentation_matrix();
        let mut coeff_cols = Vec::new();
        for j in 0..aug.cols {
            let v = aug.column(j);
            let c = kernel
                .solve(&v)
                .expect("augmentation vector must lie in the norm kernel");
            coeff_cols.push(c);
        }
        let coeff = IntMatrix::from_columns(k, &coeff_cols);
        let h = FinAbGroup::cokernel(&coeff);
        assert!(h.is_finite(), "Tate H^-1 must be finite");
        let torsion = self.coinvariants().group.torsion();
        assert_eq!(h, torsion, "ker N / IX disagrees with torsion of coinvariants");
        h
    }

    /// Induction Z[G] tensor_{Z[H]} M along an injective homomorphism
    /// `embedding: H -> G` (element indices). Cosets are ordered by their
    /// minimal element index; basis vector (i, j) = coset i tensor basis j.
    pub fn induce(&self, big: &FiniteGroup, embedding: &[usize]) -> Result<GammaModule> {
        let h_group = &self.group;
        if !h_group.is_injective_homomorphism(big, embedding) {
            return Err(LgkError::Module(
                "embedding is not an injective homomorphism".into(),
            ));
        }
        // left cosets g * im(H)
        let mut coset_of = vec![usize::MAX; big.order];
        let mut reps: Vec<usize> = Vec::new();
        for g in 0..big.order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(g); // g is minimal in its coset by scan order
            for h in 0..h_group.order {
                coset_of[big.mul(g, embedding[h])] = idx;
            }
        }
        let n_cosets = reps.len();
        let rank = n_cosets * self.rank;
        // inverse of the embedding on its image
        let mut emb_inv = vec![usize::MAX; big.order];
        for (h, &g) in embedding.iter().enumerate() {
            emb_inv[g] = h;
        }
        let mut action = Vec::with_capacity(big.order);
        for g in 0..big.order {
            let mut mat = IntMatrix::zero(rank, rank);
            for (i, &rep_i) in reps.iter().enumerate() {
                let moved = big.mul(g, rep_i);
                let j = coset_of[moved];
                // h = rep_j^{-1} * g * rep_i, an element of the image of H
                let h_in_big = big.mul(big.inv(reps[j]), moved);
                let h = emb_inv[h_in_big];
                assert!(h != usize::MAX, "coset arithmetic left the image of H");
                let block = &self.action[h];
                for r in 0..self.rank {
                    for c in 0..self.rank {
                        mat[(j * self.rank + r, i * self.rank + c)] = block[(r, c)].clone();
                    }
                }
            }
            action.push(mat);
        }
        GammaModule::new(rank, big.clone(), action)
    }
}
