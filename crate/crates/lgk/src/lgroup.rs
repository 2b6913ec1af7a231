//! L-group combinatorics: parabolic classes, standard-Levi conjugacy,
//! relative root data, and the two equivalent positivity tests of the
//! Langlands classification.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{LgkError, Result};
use crate::rootdata::{BasedRootDatum, WeylElt};
use crate::zlat::ratlin::{self, RatVec};
use crate::zlat::IntMatrix;

/// A Galois-stable subset of the base, i.e. a parabolic class of the
/// L-group. Positions refer to the datum's `simple` list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicClass {
    pub subset: Vec<usize>,
}

/// Relative (restricted) root datum for the quasi-split form. Relative
/// roots are the nonzero Galois-norm sums of absolute roots; coroots are
/// orbit sums of absolute coroots, rescaled so every pairing is 2 (this is
/// where the non-reduced (a, 2a) correction enters).
#[derive(Debug, Clone)]
pub struct RelativeData {
    /// rational basis of the Galois-invariant subspace of X tensor Q
    pub a_star_basis: Vec<RatVec>,
    pub relative_roots: Vec<Vec<BigInt>>,
    pub relative_coroots: Vec<RatVec>,
    /// flags relative roots a with 2a also a relative root
    pub multipliable: Vec<bool>,
    pub non_reduced: bool,
    /// absolute root indices restricting onto each relative root
    pub sources: Vec<Vec<usize>>,
}

/// Galois-invariant rational covector annihilating the simple coroots of a
/// Levi subset.
#[derive(Debug, Clone)]
pub struct PositivityCovector {
    pub nu: RatVec,
}

impl PositivityCovector {
    pub fn validate(&self, b: &BasedRootDatum, levi: &[usize]) -> Result<()> {
        if self.nu.len() != b.rank() {
            return Err(LgkError::Dimension("covector has wrong length".into()));
        }
        for act in &b.x.action {
            let moved: RatVec = (0..b.rank())
                .map(|i| {
                    (0..b.rank())
                        .map(|j| BigRational::from(act[(i, j)].clone()) * &self.nu[j])
                        .sum()
                })
                .collect();
            if moved != self.nu {
                return Err(LgkError::Other("covector is not Galois-invariant".into()));
            }
        }
        for &p in levi {
            let co = &b.coroots[b.simple[p]];
            if !ratlin::dot_int(&self.nu, co).is_zero() {
                return Err(LgkError::Other(format!(
                    "covector does not annihilate the Levi coroot at base position {p}"
                )));
            }
        }
        Ok(())
    }
}

/// All Galois-stable subsets of the base: unions of Galois orbits, sorted
/// canonically (by size, then lexicographically).
pub fn parabolic_classes(b: &BasedRootDatum) -> Vec<ParabolicClass> {
    let orbits = b.galois_orbits_on_base();
    let k = orbits.len();
    let mut classes = Vec::with_capacity(1 << k);
    for mask in 0..(1usize << k) {
        let mut subset = Vec::new();
        for (i, orbit) in orbits.iter().enumerate() {
            if mask & (1 << i) != 0 {
                subset.extend(orbit.iter().copied());
            }
        }
        subset.sort_unstable();
        classes.push(ParabolicClass { subset });
    }
    classes.sort_by(|a, b| {
        a.subset
            .len()
            .cmp(&b.subset.len())
            .then_with(|| a.subset.cmp(&b.subset))
    });
    classes
}

/// Searches the Weyl group for a Galois-fixed element mapping the simple
/// roots at positions `s1` onto those at `s2` (as sets). Returns the first
/// match in enumeration order, or None.
pub fn levi_conjugator(
    b: &BasedRootDatum,
    s1: &[usize],
    s2: &[usize],
    cap: usize,
) -> Result<Option<WeylElt>> {
    for (name, s) in [("first", s1), ("second", s2)] {
        if !b.is_base_subset_stable(s) {
            return Err(LgkError::Other(format!("{name} subset is not Galois-stable")));
        }
    }
    if s1.len() != s2.len() {
        return Ok(None);
    }
    let targets: std::collections::HashSet<Vec<BigInt>> = s2
        .iter()
        .map(|&p| b.roots[b.simple[p]].clone())
        .collect();
    let weyl = b.weyl_group(cap)?;
    'outer: for w in weyl {
        for act in &b.x.action {
            if act.mul(&w.matrix) != w.matrix.mul(act) {
                continue 'outer;
            }
        }
        let ok = s1
            .iter()
            .all(|&p| targets.contains(&w.matrix.mul_vec(&b.roots[b.simple[p]])));
        if ok {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Galois-norm sum of a vector: sum of its images over the whole group.
fn norm_sum(b: &BasedRootDatum, v: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); b.rank()];
    for act in &b.x.action {
        let moved = act.mul_vec(v);
        for (o, m) in out.iter_mut().zip(moved) {
            *o += m;
        }
    }
    out
}

/// Galois orbit of a root, as a set of root indices.
fn root_orbit(b: &BasedRootDatum, i: usize) -> Vec<usize> {
    let mut orbit = vec![i];
    let mut seen = std::collections::HashSet::from([i]);
    let mut queue = vec![i];
    while let Some(j) = queue.pop() {
        for act in &b.x.action {
            let img = act.mul_vec(&b.roots[j]);
            let k = b
                .roots
                .iter()
                .position(|r| *r == img)
                .expect("Galois action permutes roots");
            if seen.insert(k) {
                orbit.push(k);
                queue.push(k);
            }
        }
    }
    orbit.sort_unstable();
    orbit
}

/// Restricted root datum relative to the maximal split torus of the
/// quasi-split form. Flags the non-reduced case.
pub fn relative_root_datum(b: &BasedRootDatum) -> RelativeData {
    let a_star_basis: Vec<RatVec> = {
        let inv = b.x.invariants();
        (0..inv.rows).map(|i| ratlin::to_rational(&inv.row(i))).collect()
    };
    let mut relative_roots: Vec<Vec<BigInt>> = Vec::new();
    let mut sources: Vec<Vec<usize>> = Vec::new();
    for i in 0..b.num_roots() {
        let r = norm_sum(b, &b.roots[i]);
        if r.iter().all(|c| c.is_zero()) {
            continue;
        }
        match relative_roots.iter().position(|x| *x == r) {
            Some(k) => sources[k].push(i),
            None => {
                relative_roots.push(r);
                sources.push(vec![i]);
            }
        }
    }
    let mut relative_coroots = Vec::with_capacity(relative_roots.len());
    for (r, srcs) in relative_roots.iter().zip(&sources) {
        let orbit = root_orbit(b, srcs[0]);
        let mut c = vec![BigInt::zero(); b.rank()];
        for &j in &orbit {
            for (x, y) in c.iter_mut().zip(&b.coroots[j]) {
                *x += y;
            }
        }
        let p = BasedRootDatum::pairing(r, &c);
        assert!(p.is_positive(), "relative pairing must be positive");
        // rescale so <a, a^vee> = 2; p = 4 is the (a, 2a) correction
        let scale = BigRational::new(BigInt::from(2), p);
        let coroot: RatVec = c
            .iter()
            .map(|x| &scale * BigRational::from(x.clone()))
            .collect();
        relative_coroots.push(coroot);
    }
    let multipliable: Vec<bool> = relative_roots
        .iter()
        .map(|r| {
            let doubled: Vec<BigInt> = r.iter().map(|c| c * 2).collect();
            relative_roots.contains(&doubled)
        })
        .collect();
    let non_reduced = multipliable.iter().any(|&m| m);
    RelativeData {
        a_star_basis,
        relative_roots,
        relative_coroots,
        multipliable,
        non_reduced,
        sources,
    }
}

/// Positivity against the relative coroots of relative roots restricted
/// from outside the Levi: true iff every such pairing is strictly positive.
pub fn relative_positive(
    b: &BasedRootDatum,
    levi: &[usize],
    nu: &PositivityCovector,
) -> Result<bool> {
    nu.validate(b, levi)?;
    let rel = relative_root_datum(b);
    let outside = absolute_roots_outside_levi(b, levi);
    for (k, srcs) in rel.sources.iter().enumerate() {
        if srcs.iter().any(|i| outside.contains(i)) {
            let pairing = ratlin::dot(&nu.nu, &rel.relative_coroots[k]);
            if !pairing.is_positive() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Positivity against the absolute coroots of positive roots outside the
/// Levi span. Equivalent to `relative_positive` for valid covectors.
pub fn absolute_positive(
    b: &BasedRootDatum,
    levi: &[usize],
    nu: &PositivityCovector,
) -> Result<bool> {
    nu.validate(b, levi)?;
    let outside = absolute_roots_outside_levi(b, levi);
    for i in outside {
        let pairing = ratlin::dot_int(&nu.nu, &b.coroots[i]);
        if !pairing.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Positive absolute roots not in the span of the Levi subset.
fn absolute_roots_outside_levi(
    b: &BasedRootDatum,
    levi: &[usize],
) -> std::collections::HashSet<usize> {
    let span: Vec<RatVec> = levi
        .iter()
        .map(|&p| ratlin::to_rational(&b.roots[b.simple[p]]))
        .collect();
    b.positive_root_indices()
        .into_iter()
        .filter(|&i| !ratlin::in_span(&span, &ratlin::to_rational(&b.roots[i])))
        .collect()
}

/// Integer basis of the lattice of Galois-invariant covectors annihilating
/// the Levi's simple coroots. Rows are basis vectors.
pub fn covector_lattice(b: &BasedRootDatum, levi: &[usize]) -> IntMatrix {
    let n = b.rank();
    let id = IntMatrix::identity(n);
    let mut stacked = IntMatrix::zero(0, n);
    for act in &b.x.action {
        stacked = stacked.vconcat(&act.sub(&id));
    }
    let coroot_rows: Vec<Vec<BigInt>> = levi
        .iter()
        .map(|&p| b.coroots[b.simple[p]].clone())
        .collect();
    if !coroot_rows.is_empty() {
        stacked = stacked.vconcat(&IntMatrix::from_rows(n, &coroot_rows));
    }
    stacked.kernel_basis().transpose()
}

/// Deterministic pseudo-random stream (splitmix64), for seeded sampling.
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// uniform in [lo, hi] inclusive
    pub fn in_range(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }
}

/// Seeded random valid covectors for the given Levi subset: integer
/// combinations (coefficients in [-20, 20]) of a basis of the invariant
/// annihilator lattice. The zero covector is kept; both positivity tests
/// must simply agree.
pub fn sample_covectors(
    b: &BasedRootDatum,
    levi: &[usize],
    count: usize,
    seed: u64,
) -> Vec<PositivityCovector> {
    let basis = covector_lattice(b, levi);
    let mut rng = SplitMix64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut nu = vec![BigRational::zero(); b.rank()];
        for i in 0..basis.rows {
            let c = rng.in_range(-20, 20);
            for j in 0..b.rank() {
                nu[j] += BigRational::from(&basis[(i, j)] * BigInt::from(c));
            }
        }
        out.push(PositivityCovector { nu });
    }
    out
}
