//! Based root data with Galois action: validation, duality, Levi and
//! quotient constructions, center computation, Weyl group enumeration.

pub mod presets;

pub use presets::{preset, preset_by_compact_name, Preset};

use num_bigint::BigInt;

use num_traits::{Signed, Zero};

use crate::error::{LgkError, Result};
use crate::zlat::ratlin::{self, RatVec};
use crate::zlat::{FinAbGroup, FiniteGroup, GammaModule, IntMatrix};

/// Based root datum (X, R, R^vee, Delta) with a Galois action through a
/// finite quotient. The root-coroot bijection is positional: `roots[i]`
/// corresponds to `coroots[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasedRootDatum {
    /// character lattice with Galois action
    pub x: GammaModule,
    /// roots as coordinate vectors in X
    pub roots: Vec<Vec<BigInt>>,
    /// coroots in the dual lattice, index-aligned with roots
    pub coroots: Vec<Vec<BigInt>>,
    /// indices into `roots` forming the base Delta
    pub simple: Vec<usize>,
}

/// Finite-index Galois-stable sublattice Y with ZR <= Y <= X, given by a
/// row basis. Encodes a finite central subgroup Z with X^*(Z) = X/Y.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SublatticeSpec {
    pub basis: IntMatrix,
}

/// Lattice quotient X / L with the induced Galois action, presented by the
/// ambient module and a matrix of relation columns spanning L.
#[derive(Debug, Clone)]
pub struct LatticeQuotient {
    pub ambient: GammaModule,
    pub relations: IntMatrix,
}

/// Weyl group element: its matrix on X and one reduced word in the simple
/// reflections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElt {
    pub matrix: IntMatrix,
    pub word: Vec<usize>,
}

#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }
}

pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

impl BasedRootDatum {
    pub fn rank(&self) -> usize {
        self.x.rank
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn pairing(a: &[BigInt], b: &[BigInt]) -> BigInt {
        assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    pub fn simple_roots(&self) -> Vec<Vec<BigInt>> {
        self.simple.iter().map(|&i| self.roots[i].clone()).collect()
    }

    pub fn simple_coroots(&self) -> Vec<Vec<BigInt>> {
        self.simple.iter().map(|&i| self.coroots[i].clone()).collect()
    }

    /// Matrix of the reflection in root index `i`, acting on X.
    pub fn reflection_matrix(&self, i: usize) -> IntMatrix {
        let n = self.rank();
        let alpha = &self.roots[i];
        let covec = &self.coroots[i];
        let mut m = IntMatrix::identity(n);
        for j in 0..n {
            for r in 0..n {
                let delta = &alpha[r] * &covec[j];
                m[(r, j)] -= delta;
            }
        }
        m
    }

    /// Dual reflection on X^vee for root index `i`.
    pub fn dual_reflection_matrix(&self, i: usize) -> IntMatrix {
        let n = self.rank();
        let alpha = &self.roots[i];
        let covec = &self.coroots[i];
        let mut m = IntMatrix::identity(n);
        for j in 0..n {
            for r in 0..n {
                let delta = &covec[r] * &alpha[j];
                m[(r, j)] -= delta;
            }
        }
        m
    }

    fn find_root(&self, v: &[BigInt]) -> Option<usize> {
        self.roots.iter().position(|r| r.as_slice() == v)
    }

    /// Sign of a root: +1 when it is a nonnegative combination of the base,
    /// -1 for nonpositive. None when the decomposition fails.
    pub fn root_sign(&self, i: usize) -> Option<i32> {
        let simples: Vec<RatVec> = self
            .simple_roots()
            .iter()
            .map(|r| ratlin::to_rational(r))
            .collect();
        let target = ratlin::to_rational(&self.roots[i]);
        let coeffs = ratlin::solve_columns(&simples, &target)?;
        if coeffs.iter().any(|c| !c.is_integer()) {
            return None;
        }
        let pos = coeffs.iter().all(|c| !c.is_negative());
        let neg = coeffs.iter().all(|c| !c.is_positive());
        match (pos, neg) {
            (true, _) => Some(1),
            (_, true) => Some(-1),
            _ => None,
        }
    }

    pub fn positive_root_indices(&self) -> Vec<usize> {
        (0..self.num_roots())
            .filter(|&i| self.root_sign(i) == Some(1))
            .collect()
    }

    /// Axiom check; returns the list of violated axioms with witnesses.
    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::default();
        let n = self.rank();
        if self.roots.len() != self.coroots.len() {
            rep.violations
                .push("root and coroot lists have different lengths".into());
            return rep;
        }
        for (i, r) in self.roots.iter().enumerate() {
            if r.len() != n || self.coroots[i].len() != n {
                rep.violations.push(format!("root pair {i} has wrong dimension"));
                return rep;
            }
            if r.iter().all(|c| c.is_zero()) {
                rep.violations.push(format!("root {i} is zero"));
            }
        }
        for i in 0..self.roots.len() {
            for j in i + 1..self.roots.len() {
                if self.roots[i] == self.roots[j] {
                    rep.violations.push(format!("duplicate root at indices {i}, {j}"));
                }
            }
        }
        if !rep.is_pass() {
            return rep;
        }
        // <alpha, alpha^vee> = 2
        for i in 0..self.roots.len() {
            let p = Self::pairing(&self.roots[i], &self.coroots[i]);
            if p != BigInt::from(2) {
                rep.violations
                    .push(format!("pairing axiom: <alpha,alpha^vee> = {p} != 2 at index {i}"));
            }
        }
        if !rep.is_pass() {
            return rep;
        }
        // reduced
        for (i, r) in self.roots.iter().enumerate() {
            let doubled: Vec<BigInt> = r.iter().map(|c| c * 2).collect();
            if self.find_root(&doubled).is_some() {
                rep.violations.push(format!("root system not reduced: 2 * root {i} is a root"));
            }
        }
        // simple indices sane and independent
        let mut seen = std::collections::HashSet::new();
        for &s in &self.simple {
            if s >= self.roots.len() {
                rep.violations.push(format!("simple index {s} out of range"));
                return rep;
            }
            if !seen.insert(s) {
                rep.violations.push(format!("repeated simple index {s}"));
            }
        }
        let simple_rat: Vec<RatVec> = self
            .simple_roots()
            .iter()
            .map(|r| ratlin::to_rational(r))
            .collect();
        if ratlin::rank(&simple_rat) != self.simple.len() {
            rep.violations.push("simple roots are linearly dependent".into());
        }
        if !rep.is_pass() {
            return rep;
        }
        // every root a uniform-sign integral combination of Delta
        for i in 0..self.roots.len() {
            if self.root_sign(i).is_none() {
                rep.violations.push(format!(
                    "root {i} is not a Z>=0 or Z<=0 combination of the base"
                ));
            }
        }
        // reflections permute roots; dual reflections permute coroots compatibly
        for i in 0..self.roots.len() {
            let s = self.reflection_matrix(i);
            let s_dual = self.dual_reflection_matrix(i);
            for j in 0..self.roots.len() {
                let img = s.mul_vec(&self.roots[j]);
                match self.find_root(&img) {
                    None => {
                        rep.violations.push(format!(
                            "reflection {i} maps root {j} outside the root set"
                        ));
                    }
                    Some(k) => {
                        let img_co = s_dual.mul_vec(&self.coroots[j]);
                        if img_co != self.coroots[k] {
                            rep.violations.push(format!(
                                "reflection {i}: root and coroot permutations disagree at {j}"
                            ));
                        }
                    }
                }
            }
        }
        // Galois action permutes R, permutes Delta, and the contragredient
        // permutes coroots compatibly
        let dual_action = self.x.dual();
        let simple_set: std::collections::HashSet<&Vec<BigInt>> =
            self.simple.iter().map(|&i| &self.roots[i]).collect();
        for g in 0..self.x.group.order {
            let act = &self.x.action[g];
            let act_dual = &dual_action.action[g];
            for j in 0..self.roots.len() {
                let img = act.mul_vec(&self.roots[j]);
                match self.find_root(&img) {
                    None => rep.violations.push(format!(
                        "Galois element {g} maps root {j} outside the root set"
                    )),
                    Some(k) => {
                        let img_co = act_dual.mul_vec(&self.coroots[j]);
                        if img_co != self.coroots[k] {
                            rep.violations.push(format!(
                                "Galois element {g}: root/coroot actions disagree at root {j}"
                            ));
                        }
                    }
                }
            }
            for &s in &self.simple {
                let img = act.mul_vec(&self.roots[s]);
                if !simple_set.contains(&img) {
                    rep.violations.push(format!(
                        "Galois element {g} does not preserve the base (simple root {s})"
                    ));
                }
            }
        }
        rep
    }

    pub fn expect_valid(self, what: &str) -> Result<Self> {
        let rep = self.validate();
        if rep.is_pass() {
            Ok(self)
        } else {
            Err(LgkError::RootDatum(format!(
                "{what}: {}",
                rep.violations.join("; ")
            )))
        }
    }

    /// Dual datum: (X^vee, R^vee, R, Delta^vee) with the contragredient
    /// Galois action. An exact involution.
    pub fn dual(&self) -> BasedRootDatum {
        BasedRootDatum {
            x: self.x.dual(),
            roots: self.coroots.clone(),
            coroots: self.roots.clone(),
            simple: self.simple.clone(),
        }
    }

    /// Levi sub-datum on the subset `s` of base positions. The Galois
    /// action is kept only when the subset is stable; the returned flag
    /// tells whether it was kept.
    pub fn levi_subdatum(&self, s: &[usize]) -> (BasedRootDatum, bool) {
        let span: Vec<RatVec> = s
            .iter()
            .map(|&p| ratlin::to_rational(&self.roots[self.simple[p]]))
            .collect();
        let mut roots = Vec::new();
        let mut coroots = Vec::new();
        let mut index_map = vec![usize::MAX; self.roots.len()];
        for i in 0..self.roots.len() {
            let v = ratlin::to_rational(&self.roots[i]);
            if ratlin::in_span(&span, &v) {
                index_map[i] = roots.len();
                roots.push(self.roots[i].clone());
                coroots.push(self.coroots[i].clone());
            }
        }
        let simple: Vec<usize> = s.iter().map(|&p| index_map[self.simple[p]]).collect();
        let stable = self.is_base_subset_stable(s);
        let x = if stable {
            self.x.clone()
        } else {
            GammaModule::trivial(self.rank(), FiniteGroup::trivial())
        };
        (BasedRootDatum { x, roots, coroots, simple }, stable)
    }

    /// Whether the Galois action maps the set of simple roots at the given
    /// base positions to itself.
    pub fn is_base_subset_stable(&self, s: &[usize]) -> bool {
        let set: std::collections::HashSet<Vec<BigInt>> = s
            .iter()
            .map(|&p| self.roots[self.simple[p]].clone())
            .collect();
        self.x.action.iter().all(|act| {
            set.iter().all(|r| set.contains(&act.mul_vec(r)))
        })
    }

    /// X / ZR with the induced Galois action: the character module of the
    /// center. To compute Z(G-hat), apply this to the dual datum.
    pub fn center_module(&self) -> (LatticeQuotient, FinAbGroup) {
        let relations = IntMatrix::from_columns(self.rank(), &self.simple_roots());
        let group = FinAbGroup::cokernel(&relations);
        (LatticeQuotient { ambient: self.x.clone(), relations }, group)
    }

    /// Replaces X by a finite-index stable sublattice Y containing ZR.
    /// Roots keep their meaning (re-expressed in the Y basis); coroots are
    /// re-expressed in Hom(Y, Z).
    pub fn quotient_datum(&self, y: &SublatticeSpec) -> Result<BasedRootDatum> {
        let n = self.rank();
        let b = &y.basis;
        if b.rows != n || b.cols != n {
            return Err(LgkError::Sublattice(format!(
                "expected a {n}x{n} row basis for a finite-index sublattice"
            )));
        }
        let bt = b.transpose();
        if bt.rank() != n {
            return Err(LgkError::Sublattice("sublattice has infinite index".into()));
        }
        // stability and containment checks, then transport of structure
        let express = |v: &[BigInt]| -> Option<Vec<BigInt>> { bt.solve(v) };
        let mut action = Vec::with_capacity(self.x.group.order);
        for (g, act) in self.x.action.iter().enumerate() {
            let mut cols = Vec::with_capacity(n);
            for i in 0..n {
                let moved = act.mul_vec(&b.row(i));
                let c = express(&moved).ok_or_else(|| {
                    LgkError::Sublattice(format!("sublattice not stable under Galois element {g}"))
                })?;
                cols.push(c);
            }
            action.push(IntMatrix::from_columns(n, &cols).transpose());
        }
        let mut roots = Vec::with_capacity(self.roots.len());
        for (i, r) in self.roots.iter().enumerate() {
            let c = express(r).ok_or_else(|| {
                LgkError::Sublattice(format!("sublattice does not contain root {i}"))
            })?;
            roots.push(c);
        }
        let coroots: Vec<Vec<BigInt>> = self.coroots.iter().map(|f| b.mul_vec(f)).collect();
        let x = GammaModule::new(n, self.x.group.clone(), action)
            .map_err(|e| LgkError::Sublattice(format!("induced action invalid: {e}")))?;
        BasedRootDatum { x, roots, coroots, simple: self.simple.clone() }
            .expect_valid("quotient datum")
    }

    /// Full Weyl group enumeration by breadth-first closure over the simple
    /// reflections, each element with a reduced word. Deterministic order.
    pub fn weyl_group(&self, cap: usize) -> Result<Vec<WeylElt>> {
        let gens: Vec<IntMatrix> = self
            .simple
            .iter()
            .map(|&i| self.reflection_matrix(i))
            .collect();
        let mut elements = vec![WeylElt { matrix: IntMatrix::identity(self.rank()), word: vec![] }];
        let mut seen: std::collections::HashSet<IntMatrix> =
            elements.iter().map(|e| e.matrix.clone()).collect();
        let mut frontier = 0;
        while frontier < elements.len() {
            let current = elements[frontier].clone();
            frontier += 1;
            for (i, g) in gens.iter().enumerate() {
                let m = g.mul(&current.matrix);
                if seen.insert(m.clone()) {
                    let mut word = vec![i];
                    word.extend(&current.word);
                    elements.push(WeylElt { matrix: m, word });
                    if elements.len() > cap {
                        return Err(LgkError::CapExceeded(cap));
                    }
                }
            }
        }
        Ok(elements)
    }

    /// Orbits of the Galois action on the base, each orbit sorted, orbits
    /// sorted by first element. Positions refer to `simple`.
    pub fn galois_orbits_on_base(&self) -> Vec<Vec<usize>> {
        let l = self.simple.len();
        let mut orbit_of = vec![usize::MAX; l];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for start in 0..l {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let idx = orbits.len();
            let mut orbit = vec![start];
            orbit_of[start] = idx;
            let mut queue = vec![start];
            while let Some(p) = queue.pop() {
                let root = &self.roots[self.simple[p]];
                for act in &self.x.action {
                    let img = act.mul_vec(root);
                    let q = self
                        .simple
                        .iter()
                        .position(|&i| self.roots[i] == img)
                        .expect("Galois action must permute the base");
                    if orbit_of[q] == usize::MAX {
                        orbit_of[q] = idx;
                        orbit.push(q);
                        queue.push(q);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }
}

impl LatticeQuotient {
    /// The quotient as an abstract group.
    pub fn group(&self) -> FinAbGroup {
        FinAbGroup::cokernel(&self.relations)
    }

    /// Gamma-coinvariants of the quotient: ambient divided by relations
    /// plus the augmentation submodule.
    pub fn coinvariants_group(&self) -> FinAbGroup {
        let combined = self.relations.hconcat(&self.ambient.augmentation_matrix());
        FinAbGroup::cokernel(&combined)
    }
}

impl SublatticeSpec {
    pub fn full(rank: usize) -> Self {
        SublatticeSpec { basis: IntMatrix::identity(rank) }
    }

    /// The root lattice ZR of a datum, as a sublattice of X. Fails when ZR
    /// has infinite index (nontrivial central torus).
    pub fn root_lattice(b: &BasedRootDatum) -> Result<Self> {
        let n = b.rank();
        let m = IntMatrix::from_rows(n, &b.simple_roots());
        if m.rows != n || m.rank() != n {
            return Err(LgkError::Sublattice(
                "root lattice has infinite index in X".into(),
            ));
        }
        Ok(SublatticeSpec { basis: m })
    }
}
