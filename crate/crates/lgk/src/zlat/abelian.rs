use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntMatrix;

/// Finitely generated abelian group in invariant-factor form:
/// Z^free_rank + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... and every d_i >= 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinAbGroup {
    pub free_rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

impl FinAbGroup {
    pub fn new(free_rank: usize, invariant_factors: Vec<BigInt>) -> Self {
        for w in invariant_factors.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "divisibility chain violated");
        }
        assert!(
            invariant_factors.iter().all(|d| *d >= BigInt::from(2)),
            "trivial invariant factors must be stripped"
        );
        FinAbGroup { free_rank, invariant_factors }
    }

    pub fn trivial() -> Self {
        FinAbGroup { free_rank: 0, invariant_factors: vec![] }
    }

    pub fn free(rank: usize) -> Self {
        FinAbGroup { free_rank: rank, invariant_factors: vec![] }
    }

    pub fn cyclic(n: u64) -> Self {
        assert!(n >= 1);
        if n == 1 {
            Self::trivial()
        } else {
            FinAbGroup { free_rank: 0, invariant_factors: vec![BigInt::from(n)] }
        }
    }

    /// Group with the given free rank and cyclic factors (any order, not
    /// necessarily a divisor chain); renormalized to invariant factors.
    pub fn from_factors(free_rank: usize, factors: &[u64]) -> Self {
        factors.iter().fold(Self::free(free_rank), |acc, &n| {
            acc.direct_sum(&Self::cyclic(n))
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().product::<BigInt>().max(BigInt::one())
    }

    /// Cardinality, when finite.
    pub fn order(&self) -> Option<BigInt> {
        if self.is_finite() {
            Some(self.torsion_order())
        } else {
            None
        }
    }

    pub fn torsion(&self) -> FinAbGroup {
        FinAbGroup { free_rank: 0, invariant_factors: self.invariant_factors.clone() }
    }

    /// Cokernel of `m` viewed as a map Z^cols -> Z^rows, i.e.
    /// Z^rows / (column span of m).
    pub fn cokernel(m: &IntMatrix) -> FinAbGroup {
        let snf = m.smith_normal_form();
        Self::from_diagonal(m.rows, &snf.d.diagonal())
    }

    /// Group presented by a diagonal with the given ambient rank:
    /// zero diagonal entries and missing rows contribute Z, entries >= 2
    /// contribute cyclic factors, 1s are dropped.
    pub fn from_diagonal(ambient_rank: usize, diag: &[BigInt]) -> FinAbGroup {
        let mut factors: Vec<BigInt> = diag
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect();
        factors.sort();
        let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
        FinAbGroup::new(ambient_rank - nonzero, factors)
    }

    /// Direct sum, renormalized to a single invariant-factor chain.
    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        let all: Vec<BigInt> = self
            .invariant_factors
            .iter()
            .chain(&other.invariant_factors)
            .cloned()
            .collect();
        let n = all.len();
        let mut diag = IntMatrix::zero(n, n);
        for (i, d) in all.iter().enumerate() {
            diag[(i, i)] = d.clone();
        }
        let mut s = Self::cokernel(&diag);
        s.free_rank = self.free_rank + other.free_rank;
        s
    }
}

impl std::fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            if self.free_rank == 1 {
                parts.push("Z".to_string());
            } else {
                parts.push(format!("Z^{}", self.free_rank));
            }
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}
