use crate::error::{LgkError, Result};

/// Finite group given by its full multiplication table. Galois quotients
/// handled here are tiny (order <= 48), so no presentation solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    pub order: usize,
    /// mult_table[a * order + b] = index of a*b
    pub mult_table: Vec<usize>,
    pub identity: usize,
    pub inverse_table: Vec<usize>,
}

impl FiniteGroup {
    pub fn new(order: usize, mult_table: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(LgkError::Group("empty group".into()));
        }
        if mult_table.len() != order * order {
            return Err(LgkError::Group("multiplication table size mismatch".into()));
        }
        if mult_table.iter().any(|&x| x >= order) {
            return Err(LgkError::Group("table entry out of range".into()));
        }
        let mul = |a: usize, b: usize| mult_table[a * order + b];
        // identity
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| mul(e, a) == a && mul(a, e) == a))
            .ok_or_else(|| LgkError::Group("no identity element".into()))?;
        // inverses
        let mut inverse_table = vec![0; order];
        for a in 0..order {
            inverse_table[a] = (0..order)
                .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                .ok_or_else(|| LgkError::Group(format!("element {a} has no inverse")))?;
        }
        // associativity
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(LgkError::Group(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { order, mult_table, identity, inverse_table })
    }

    pub fn trivial() -> Self {
        FiniteGroup { order: 1, mult_table: vec![0], identity: 0, inverse_table: vec![0] }
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = (a + b) % n;
            }
        }
        FiniteGroup::new(n, table).expect("cyclic table is a group")
    }

    /// Direct product; element (a, b) has index a * other.order + b.
    pub fn product(&self, other: &FiniteGroup) -> FiniteGroup {
        let n = self.order * other.order;
        let mut table = vec![0; n * n];
        for a1 in 0..self.order {
            for b1 in 0..other.order {
                for a2 in 0..self.order {
                    for b2 in 0..other.order {
                        let x = a1 * other.order + b1;
                        let y = a2 * other.order + b2;
                        let p = self.mul(a1, a2) * other.order + other.mul(b1, b2);
                        table[x * n + y] = p;
                    }
                }
            }
        }
        FiniteGroup::new(n, table).expect("product table is a group")
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult_table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse_table[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != self.identity {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// Checks that `map[h] in G` defines an injective homomorphism.
    pub fn is_injective_homomorphism(&self, target: &FiniteGroup, map: &[usize]) -> bool {
        if map.len() != self.order || map.iter().any(|&g| g >= target.order) {
            return false;
        }
        let mut seen = vec![false; target.order];
        for &g in map {
            if seen[g] {
                return false;
            }
            seen[g] = true;
        }
        for a in 0..self.order {
            for b in 0..self.order {
                if map[self.mul(a, b)] != target.mul(map[a], map[b]) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups() {
        let g = FiniteGroup::cyclic(4);
        assert_eq!(g.identity, 0);
        assert_eq!(g.inv(1), 3);
        assert_eq!(g.element_order(1), 4);
        assert_eq!(g.element_order(2), 2);
    }

    #[test]
    fn rejects_non_associative() {
        // "subtraction table" on 3 elements is not associative
        let mut table = vec![0; 9];
        for a in 0..3usize {
            for b in 0..3usize {
                table[a * 3 + b] = (3 + a - b) % 3;
            }
        }
        assert!(FiniteGroup::new(3, table).is_err());
    }

    #[test]
    fn product_group() {
        let v4 = FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(2));
        assert_eq!(v4.order, 4);
        for a in 0..4 {
            assert_eq!(v4.mul(a, a), v4.identity);
        }
    }

    #[test]
    fn embedding_check() {
        let c2 = FiniteGroup::cyclic(2);
        let c4 = FiniteGroup::cyclic(4);
        assert!(c2.is_injective_homomorphism(&c4, &[0, 2]));
        assert!(!c2.is_injective_homomorphism(&c4, &[0, 1]));
        assert!(!c2.is_injective_homomorphism(&c4, &[0, 0]));
    }
}
