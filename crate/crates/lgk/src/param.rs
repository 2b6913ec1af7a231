//! Finite-level Langlands-parameter data on the dual side: torus elements
//! in polar coordinates, normalizer-valued parameter images, the Langlands
//! decomposition, minimal-Levi and discreteness tests, and endoscopic
//! based root data built from a semisimple element.
//!
//! Conventions: every operation takes the datum `b` of the *dual* group
//! (callers pass `dual(brd of G)`). Torus elements and cocharacters live in
//! the dual lattice of `b.x`, where they pair against the roots of `b`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{LgkError, Result};
use crate::lgroup::{self, PositivityCovector};
use crate::rootdata::{BasedRootDatum, ValidationReport};
use crate::zlat::ratlin::{self, RatVec};
use crate::zlat::{FiniteGroup, GammaModule, IntMatrix};

/// Semisimple torus element in polar coordinates: a finite-order circle
/// part (rationals mod 1) and a rational log-radius part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusElement {
    pub circle: RatVec,
    pub radial: RatVec,
}

fn frac(x: &BigRational) -> BigRational {
    x - x.floor()
}

fn mat_apply_rat(m: &IntMatrix, v: &[BigRational]) -> RatVec {
    (0..m.rows)
        .map(|i| {
            (0..m.cols)
                .map(|j| BigRational::from(m[(i, j)].clone()) * &v[j])
                .sum()
        })
        .collect()
}

impl TorusElement {
    pub fn new(circle: RatVec, radial: RatVec) -> Self {
        assert_eq!(circle.len(), radial.len());
        TorusElement {
            circle: circle.iter().map(frac).collect(),
            radial,
        }
    }

    pub fn zero(rank: usize) -> Self {
        TorusElement {
            circle: vec![BigRational::zero(); rank],
            radial: vec![BigRational::zero(); rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.circle.len()
    }

    pub fn is_identity(&self) -> bool {
        self.circle.iter().all(Zero::is_zero) && self.radial.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &TorusElement) -> TorusElement {
        TorusElement::new(
            self.circle.iter().zip(&other.circle).map(|(a, b)| a + b).collect(),
            self.radial.iter().zip(&other.radial).map(|(a, b)| a + b).collect(),
        )
    }

    /// Image under an integer matrix acting on the ambient lattice.
    pub fn apply(&self, m: &IntMatrix) -> TorusElement {
        TorusElement::new(mat_apply_rat(m, &self.circle), mat_apply_rat(m, &self.radial))
    }

    /// Whether the functional `v` kills this element: integral circle
    /// pairing and zero radial pairing.
    pub fn killed_by(&self, v: &[BigInt]) -> bool {
        let c: BigRational = v
            .iter()
            .zip(&self.circle)
            .map(|(a, b)| BigRational::from(a.clone()) * b)
            .sum();
        let r: BigRational = v
            .iter()
            .zip(&self.radial)
            .map(|(a, b)| BigRational::from(a.clone()) * b)
            .sum();
        c.is_integer() && r.is_zero()
    }
}

/// Exact polar decomposition: coordinate projection onto the circle and
/// radial parts. Recomposition via `add` is the identity.
pub fn polar_decompose(t: &TorusElement) -> (TorusElement, TorusElement) {
    let unitary = TorusElement::new(t.circle.clone(), vec![BigRational::zero(); t.rank()]);
    let positive = TorusElement::new(vec![BigRational::zero(); t.rank()], t.radial.clone());
    (unitary, positive)
}

/// Image of one source-group element: a torus part, a Weyl part (matrix on
/// the character lattice of `b`, i.e. a product of simple reflections),
/// and the Galois component `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementImage {
    pub t: TorusElement,
    pub w_char: IntMatrix,
    pub q: usize,
}

impl ElementImage {
    pub fn identity(b: &BasedRootDatum) -> Self {
        ElementImage {
            t: TorusElement::zero(b.rank()),
            w_char: IntMatrix::identity(b.rank()),
            q: b.x.group.identity,
        }
    }

    /// Combined matrix of the normalizer image on the cocharacter side,
    /// where torus elements live: contragredient Weyl times dual Galois.
    pub fn l_matrix(&self, b: &BasedRootDatum) -> IntMatrix {
        let w_cochar = self.w_char.unimodular_inverse().transpose();
        let a_dual = b.x.action[b.x.group.inv(self.q)].transpose();
        w_cochar.mul(&a_dual)
    }

    /// Semidirect-product composition (self first, then other).
    pub fn compose(&self, other: &ElementImage, b: &BasedRootDatum) -> ElementImage {
        let a_q = &b.x.action[self.q];
        let a_q_inv = &b.x.action[b.x.group.inv(self.q)];
        let w = self.w_char.mul(&a_q.mul(&other.w_char).mul(a_q_inv));
        let t = self.t.add(&other.t.apply(&self.l_matrix(b)));
        ElementImage { t, w_char: w, q: b.x.group.mul(self.q, other.q) }
    }
}

/// Finite-level parameter: a finite source group P surjecting onto the
/// Galois quotient Q, a normalizer-valued image for every element, a
/// distinguished Frobenius-like element, and the principal-sl2 cocharacter.
///
/// The bounded (unitary) data is a genuine homomorphism out of P; the
/// unbounded radial twist chi cannot factor through a finite group, so it
/// is stored once as `radial`, attached to the valuation of the
/// Frobenius-like generator, and required to be fixed by every image
/// matrix. This is the phi = phi_0 · chi shape built into the data.
#[derive(Debug, Clone)]
pub struct ParamDatum {
    pub source: FiniteGroup,
    pub to_q: Vec<usize>,
    pub frobenius: usize,
    pub images: Vec<ElementImage>,
    pub radial: RatVec,
    pub sl2: RatVec,
}

/// Generator image as supplied by callers: the Weyl part is a reduced word
/// in base positions of `b`; the Galois part is forced by `to_q`.
#[derive(Debug, Clone)]
pub struct GeneratorSpec {
    pub element: usize,
    pub t: TorusElement,
    pub weyl_word: Vec<usize>,
}

fn word_matrix(b: &BasedRootDatum, word: &[usize]) -> Result<IntMatrix> {
    let mut m = IntMatrix::identity(b.rank());
    for &p in word {
        let i = *b
            .simple
            .get(p)
            .ok_or_else(|| LgkError::Param(format!("base position {p} out of range")))?;
        m = m.mul(&b.reflection_matrix(i));
    }
    Ok(m)
}

impl ParamDatum {
    /// Completes generator images to the whole source group by closure
    /// under multiplication. The first generator is the Frobenius-like
    /// element. Fails when the generators do not generate, or when the
    /// closure is inconsistent (the assignment is not a homomorphism).
    pub fn from_generators(
        b: &BasedRootDatum,
        source: FiniteGroup,
        to_q: Vec<usize>,
        gens: &[GeneratorSpec],
        sl2: RatVec,
    ) -> Result<ParamDatum> {
        if to_q.len() != source.order {
            return Err(LgkError::Param("to_q must cover the source group".into()));
        }
        if sl2.len() != b.rank() {
            return Err(LgkError::Param("sl2 cocharacter has wrong length".into()));
        }
        let frobenius = gens.first().map_or(source.identity, |g| g.element);
        let radial = gens
            .first()
            .map_or(vec![BigRational::zero(); b.rank()], |g| g.t.radial.clone());
        for g in gens.iter().skip(1) {
            if g.t.radial.iter().any(|x| !x.is_zero()) {
                return Err(LgkError::Param(
                    "only the Frobenius-like generator may carry a radial part".into(),
                ));
            }
        }
        let mut images: Vec<Option<ElementImage>> = vec![None; source.order];
        images[source.identity] = Some(ElementImage::identity(b));
        let mut gen_images = Vec::with_capacity(gens.len());
        for g in gens {
            if g.element >= source.order {
                return Err(LgkError::Param("generator index out of range".into()));
            }
            if g.t.rank() != b.rank() {
                return Err(LgkError::Param("torus part has wrong rank".into()));
            }
            let img = ElementImage {
                t: TorusElement::new(g.t.circle.clone(), vec![BigRational::zero(); b.rank()]),
                w_char: word_matrix(b, &g.weyl_word)?,
                q: to_q[g.element],
            };
            images[g.element] = Some(img.clone());
            gen_images.push((g.element, img));
        }
        loop {
            let mut progressed = false;
            for a in 0..source.order {
                let Some(img_a) = images[a].clone() else { continue };
                for (ge, img_g) in &gen_images {
                    let c = source.mul(a, *ge);
                    let img_c = img_a.compose(img_g, b);
                    match &images[c] {
                        None => {
                            images[c] = Some(img_c);
                            progressed = true;
                        }
                        Some(existing) => {
                            if *existing != img_c {
                                return Err(LgkError::Param(format!(
                                    "inconsistent images at element {c}: the generator \
                                     assignment is not a homomorphism"
                                )));
                            }
                        }
                    }
                }
            }
            if !progressed {
                break;
            }
        }
        let images: Vec<ElementImage> = images
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| LgkError::Param("generators do not generate the source group".into()))?;
        let p = ParamDatum { source, to_q, frobenius, images, radial, sl2 };
        let report = validate_param(&p, b);
        if !report.is_pass() {
            return Err(LgkError::Param(report.violations.join("; ")));
        }
        Ok(p)
    }

    pub fn frobenius_image(&self) -> &ElementImage {
        &self.images[self.frobenius]
    }

    /// Copy with the radial twist zeroed: the bounded part phi_0.
    pub fn zero_radial(&self) -> ParamDatum {
        let mut out = self.clone();
        out.radial = vec![BigRational::zero(); out.radial.len()];
        out
    }

    pub fn is_bounded(&self) -> bool {
        self.radial.iter().all(Zero::is_zero)
    }
}

/// Relation-by-relation homomorphism check plus compatibility with the
/// Galois projection and the normalizer form (Weyl parts permute roots).
pub fn validate_param(p: &ParamDatum, b: &BasedRootDatum) -> ValidationReport {
    let mut rep = ValidationReport::default();
    let q_group = &b.x.group;
    if p.images.len() != p.source.order || p.to_q.len() != p.source.order {
        rep.violations.push("image and projection tables must cover the source group".into());
        return rep;
    }
    if p.to_q.iter().any(|&q| q >= q_group.order) {
        rep.violations.push("Galois projection lands outside the quotient".into());
        return rep;
    }
    let mut hit = vec![false; q_group.order];
    for &q in &p.to_q {
        hit[q] = true;
    }
    if hit.iter().any(|h| !h) {
        rep.violations.push("projection to the Galois quotient is not surjective".into());
    }
    for a in 0..p.source.order {
        for c in 0..p.source.order {
            let lhs = q_group.mul(p.to_q[a], p.to_q[c]);
            if lhs != p.to_q[p.source.mul(a, c)] {
                rep.violations.push(format!(
                    "projection is not a homomorphism at ({a}, {c})"
                ));
            }
        }
    }
    for (a, img) in p.images.iter().enumerate() {
        if img.q != p.to_q[a] {
            rep.violations.push(format!("element {a}: Galois component disagrees with the projection"));
        }
        if img.t.rank() != b.rank() || img.w_char.rows != b.rank() {
            rep.violations.push(format!("element {a}: image has wrong rank"));
            return rep;
        }
        if !img.w_char.is_unimodular() {
            rep.violations.push(format!("element {a}: Weyl part is not invertible"));
        }
        for (i, r) in b.roots.iter().enumerate() {
            let moved = img.w_char.mul_vec(r);
            if !b.roots.contains(&moved) {
                rep.violations.push(format!(
                    "element {a}: Weyl part does not permute the roots (root {i})"
                ));
                break;
            }
        }
    }
    let id = &p.images[p.source.identity];
    if !id.t.is_identity() || !id.w_char.is_identity() {
        rep.violations.push("identity element must map to the identity image".into());
    }
    for a in 0..p.source.order {
        for c in 0..p.source.order {
            let expected = p.images[a].compose(&p.images[c], b);
            let actual = &p.images[p.source.mul(a, c)];
            if *actual != expected {
                rep.violations.push(format!(
                    "homomorphism relation violated at ({a}, {c})"
                ));
            }
        }
    }
    if p.radial.len() != b.rank() {
        rep.violations.push("radial twist has wrong length".into());
        return rep;
    }
    // the radial twist must be fixed by every image matrix (centrality in
    // the image) — this includes Galois invariance via the surjection
    for (a, img) in p.images.iter().enumerate() {
        if mat_apply_rat(&img.l_matrix(b), &p.radial) != p.radial {
            rep.violations.push(format!(
                "radial twist is not fixed by the image of element {a}"
            ));
        }
    }
    if rep.is_pass() {
        // sl2 integrality on the minimal Levi
        match minimal_levi(p, b) {
            Ok(levi) => {
                for &s in &levi {
                    let pair = ratlin::dot_int(&p.sl2, &b.roots[b.simple[s]]);
                    if !pair.is_integer() {
                        rep.violations.push(format!(
                            "sl2 cocharacter pairs non-integrally with base position {s}"
                        ));
                    }
                }
            }
            Err(e) => rep.violations.push(format!("minimal Levi undefined: {e}")),
        }
    }
    rep
}

/// Coefficients of `v` (rational vector) in the simple-root basis; None
/// when v is outside the span.
fn simple_root_coeffs(b: &BasedRootDatum, v: &RatVec) -> Option<RatVec> {
    let cols: Vec<RatVec> = b
        .simple_roots()
        .iter()
        .map(|r| ratlin::to_rational(r))
        .collect();
    if cols.is_empty() {
        return if v.iter().all(Zero::is_zero) { Some(vec![]) } else { None };
    }
    ratlin::solve_columns(&cols, v)
}

/// Base positions whose orbit closure contains `set`.
fn galois_closure(b: &BasedRootDatum, set: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for orbit in b.galois_orbits_on_base() {
        if orbit.iter().any(|p| set.contains(p)) {
            out.extend(orbit);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Smallest Galois-stable base subset S such that every Weyl part lies in
/// W_S, the sl2 cocharacter lies in the span of the simple coroots of S,
/// and all radial parts are killed by the simple roots of S. Errors when
/// the radial-centrality upper bound conflicts with the lower bound.
pub fn minimal_levi(p: &ParamDatum, b: &BasedRootDatum) -> Result<Vec<usize>> {
    let mut lower: Vec<usize> = Vec::new();
    // Weyl inversion supports
    for img in &p.images {
        for i in b.positive_root_indices() {
            let moved = mat_apply_rat(&img.w_char, &ratlin::to_rational(&b.roots[i]));
            let coeffs = simple_root_coeffs(b, &moved)
                .ok_or_else(|| LgkError::Param("Weyl image leaves the root span".into()))?;
            if coeffs.iter().all(|c| !c.is_positive()) {
                let own = simple_root_coeffs(b, &ratlin::to_rational(&b.roots[i]))
                    .expect("positive root decomposes over the base");
                for (s, c) in own.iter().enumerate() {
                    if !c.is_zero() {
                        lower.push(s);
                    }
                }
            }
        }
    }
    // sl2 support in the simple-coroot basis
    if p.sl2.iter().any(|c| !c.is_zero()) {
        let cols: Vec<RatVec> = b
            .simple_coroots()
            .iter()
            .map(|r| ratlin::to_rational(r))
            .collect();
        let coeffs = ratlin::solve_columns(&cols, &p.sl2).ok_or_else(|| {
            LgkError::Param("sl2 cocharacter is outside the simple-coroot span".into())
        })?;
        for (s, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                lower.push(s);
            }
        }
    }
    let lower = galois_closure(b, &lower);
    // radial centrality upper bound
    for &s in &lower {
        let alpha = &b.roots[b.simple[s]];
        if !ratlin::dot_int(&p.radial, alpha).is_zero() {
            return Err(LgkError::Param(format!(
                "no Levi: base position {s} is forced but the radial twist is \
                 not central for it"
            )));
        }
    }
    Ok(lower)
}

/// The Langlands decomposition phi = phi_0 · chi.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub levi: Vec<usize>,
    pub phi0: ParamDatum,
    pub nu: RatVec,
}

/// Canonical decomposition for a parameter in standard position (dominant
/// radial part): nu is the Frobenius radial part, the Levi collects the
/// base positions pairing to zero with nu, and phi_0 zeroes all radial
/// parts. Positivity outside the Levi is re-checked through the
/// absolute-coroot test.
pub fn langlands_decompose(p: &ParamDatum, b: &BasedRootDatum) -> Result<Decomposition> {
    let nu = p.radial.clone();
    let mut levi = Vec::new();
    for (s, &i) in b.simple.iter().enumerate() {
        let pair = ratlin::dot_int(&nu, &b.roots[i]);
        if pair.is_negative() {
            return Err(LgkError::Param(
                "not standard position: radial part is not dominant".into(),
            ));
        }
        if pair.is_zero() {
            levi.push(s);
        }
    }
    let minimal = minimal_levi(p, b)?;
    if !minimal.iter().all(|s| levi.contains(s)) {
        return Err(LgkError::Param(
            "radial part is not central in the minimal Levi".into(),
        ));
    }
    // cross-check through the relative/absolute positivity machinery on
    // the dual datum, where nu is a character-side covector
    let cov = PositivityCovector { nu: nu.clone() };
    let dual = b.dual();
    if !lgroup::absolute_positive(&dual, &levi, &cov)? {
        return Err(LgkError::Param(
            "radial part fails strict positivity outside the Levi".into(),
        ));
    }
    Ok(Decomposition { levi, phi0: p.zero_radial(), nu })
}

/// Discreteness certificate: the minimal Levi, and the dimensions of the
/// image-fixed subspace and the central Galois-invariant subspace of the
/// cocharacter space.
#[derive(Debug, Clone)]
pub struct DiscretenessCertificate {
    pub discrete: bool,
    pub minimal_levi: Vec<usize>,
    pub levi_is_full: bool,
    pub fixed_dim: usize,
    pub central_dim: usize,
}

/// Essential discreteness: the minimal Levi is the whole base and the
/// subspace fixed by every combined image matrix is no larger than the
/// invariant central cocharacter space.
pub fn is_essentially_discrete(p: &ParamDatum, b: &BasedRootDatum) -> Result<DiscretenessCertificate> {
    let n = b.rank();
    let minimal = minimal_levi(p, b)?;
    let levi_is_full = minimal.len() == b.simple.len();
    let id = IntMatrix::identity(n);
    let mut stacked = IntMatrix::zero(0, n);
    for img in &p.images {
        stacked = stacked.vconcat(&img.l_matrix(b).sub(&id));
    }
    let fixed_dim = n - stacked.rank();
    let mut central = IntMatrix::zero(0, n);
    for act in &b.x.action {
        // contragredient action on the cocharacter side
        let dual_act = act.unimodular_inverse().transpose();
        central = central.vconcat(&dual_act.sub(&id));
    }
    if !b.simple.is_empty() {
        central = central.vconcat(&IntMatrix::from_rows(n, &b.simple_roots()));
    }
    let central_dim = n - central.rank();
    let discrete = levi_is_full && fixed_dim == central_dim;
    Ok(DiscretenessCertificate {
        discrete,
        minimal_levi: minimal,
        levi_is_full,
        fixed_dim,
        central_dim,
    })
}

/// Indices of the roots of `b_dual` killed by both parts of s.
pub fn centralizer_roots(b_dual: &BasedRootDatum, s: &TorusElement) -> Vec<usize> {
    (0..b_dual.num_roots())
        .filter(|&i| s.killed_by(&b_dual.roots[i]))
        .collect()
}

/// Twisting data: a finite group mapping into the Weyl-Galois semidirect
/// product, each element given by a reduced word and a Galois index.
#[derive(Debug, Clone)]
pub struct TwistData {
    pub group: FiniteGroup,
    pub weyl_words: Vec<Vec<usize>>,
    pub galois: Vec<usize>,
}

/// The twist through the Galois quotient itself, with trivial Weyl parts.
pub fn trivial_twist(b: &BasedRootDatum) -> TwistData {
    TwistData {
        group: b.x.group.clone(),
        weyl_words: vec![vec![]; b.x.group.order],
        galois: (0..b.x.group.order).collect(),
    }
}

/// Endoscopic based root datum attached to (s, twist): same character
/// lattice, coroots the kernel subsystem of s, roots aligned, base chosen
/// by a twist-invariant generic covector, Galois action the twist action.
#[derive(Debug, Clone)]
pub struct EndoscopicDatum {
    pub h_brd: BasedRootDatum,
    pub s: TorusElement,
    pub kernel_roots: Vec<usize>,
}

const PERTURBATION_PRIMES: [i64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

pub fn endoscopic_datum(
    b: &BasedRootDatum,
    s: &TorusElement,
    twist: &TwistData,
) -> Result<EndoscopicDatum> {
    let n = b.rank();
    if s.rank() != n {
        return Err(LgkError::Endoscopy("torus element has wrong rank".into()));
    }
    // materialize the twist as character-lattice matrices and validate the
    // homomorphism property through the module machinery
    let mut matrices = Vec::with_capacity(twist.group.order);
    for e in 0..twist.group.order {
        let w = word_matrix(b, &twist.weyl_words[e])?;
        let q = *twist
            .galois
            .get(e)
            .ok_or_else(|| LgkError::Endoscopy("twist tables too short".into()))?;
        if q >= b.x.group.order {
            return Err(LgkError::Endoscopy("twist Galois index out of range".into()));
        }
        matrices.push(w.mul(&b.x.action[q]));
    }
    let twist_module = GammaModule::new(n, twist.group.clone(), matrices)
        .map_err(|e| LgkError::Endoscopy(format!("twist is not a homomorphism: {e}")))?;
    let kernel: Vec<usize> = (0..b.num_roots())
        .filter(|&i| s.killed_by(&b.coroots[i]))
        .collect();
    for m in &twist_module.action {
        // contragredient action on the cocharacter side must fix s and
        // permute the kernel coroots
        let m_cochar = m.unimodular_inverse().transpose();
        if s.apply(&m_cochar) != *s {
            return Err(LgkError::Endoscopy("twist does not fix s".into()));
        }
        for &i in &kernel {
            let moved = m_cochar.mul_vec(&b.coroots[i]);
            let j = b
                .coroots
                .iter()
                .position(|c| *c == moved)
                .ok_or_else(|| LgkError::Endoscopy("twist does not permute the coroots".into()))?;
            if !kernel.contains(&j) {
                return Err(LgkError::Endoscopy("twist does not stabilize the kernel subsystem".into()));
            }
        }
    }
    // twist-invariant generic covector selecting the positive kernel coroots
    let base_cov = generic_covector(b)?;
    let mut chosen: Option<RatVec> = None;
    for attempt in 0..=PERTURBATION_PRIMES.len() {
        let mut cand = base_cov.clone();
        if attempt > 0 {
            let p = PERTURBATION_PRIMES[attempt - 1];
            let mut scale = BigRational::new(BigInt::one(), BigInt::from(p));
            for c in cand.iter_mut() {
                *c += &scale;
                scale = &scale / BigRational::from(BigInt::from(p));
            }
        }
        // orbit average over the twist action on the character side
        let mut avg = vec![BigRational::zero(); n];
        for m in &twist_module.action {
            for (a, x) in avg.iter_mut().zip(mat_apply_rat(m, &cand)) {
                *a += x;
            }
        }
        let order = BigRational::from(BigInt::from(twist.group.order as i64));
        for a in avg.iter_mut() {
            *a /= &order;
        }
        if kernel.iter().all(|&i| !ratlin::dot_int(&avg, &b.coroots[i]).is_zero()) {
            chosen = Some(avg);
            break;
        }
    }
    let cov = chosen.ok_or_else(|| LgkError::Endoscopy("no invariant order found".into()))?;
    let positive: Vec<usize> = kernel
        .iter()
        .copied()
        .filter(|&i| ratlin::dot_int(&cov, &b.coroots[i]).is_positive())
        .collect();
    // base = indecomposable positive coroots of the kernel subsystem
    let mut simple = Vec::new();
    for (pos, &i) in kernel.iter().enumerate() {
        if !positive.contains(&i) {
            continue;
        }
        let decomposable = positive.iter().any(|&j| {
            positive.iter().any(|&k| {
                let sum: Vec<BigInt> = b.coroots[j]
                    .iter()
                    .zip(&b.coroots[k])
                    .map(|(a, c)| a + c)
                    .collect();
                sum == b.coroots[i]
            })
        });
        if !decomposable {
            simple.push(pos);
        }
    }
    let h_brd = BasedRootDatum {
        x: twist_module,
        roots: kernel.iter().map(|&i| b.roots[i].clone()).collect(),
        coroots: kernel.iter().map(|&i| b.coroots[i].clone()).collect(),
        simple,
    }
    .expect_valid("endoscopic datum")?;
    Ok(EndoscopicDatum { h_brd, s: s.clone(), kernel_roots: kernel })
}

/// Rational covector pairing to 1 with every simple coroot (a
/// fundamental-weight sum); zero covector for a torus datum.
fn generic_covector(b: &BasedRootDatum) -> Result<RatVec> {
    let n = b.rank();
    if b.simple.is_empty() {
        return Ok(vec![BigRational::zero(); n]);
    }
    let coroots = b.simple_coroots();
    let cols: Vec<RatVec> = (0..n)
        .map(|j| coroots.iter().map(|c| BigRational::from(c[j].clone())).collect())
        .collect();
    let ones = vec![BigRational::one(); coroots.len()];
    ratlin::solve_columns(&cols, &ones)
        .ok_or_else(|| LgkError::Endoscopy("no covector pairs to 1 with the base".into()))
}
