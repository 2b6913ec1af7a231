//! Preset based root data for the classical families, plus products and
//! Weil restriction. Roots are generated from the base by reflection
//! closure, so every preset carries its full aligned root/coroot lists.

use num_bigint::BigInt;
use num_traits::Zero;

use super::BasedRootDatum;
use crate::error::{LgkError, Result};
use crate::zlat::{FiniteGroup, GammaModule, IntMatrix};

#[derive(Debug, Clone)]
pub enum Preset {
    Torus(usize),
    Gl(usize),
    Sl(usize),
    Pgl(usize),
    Sp(usize),
    SoOdd(usize),
    SoEven(usize),
    Su(usize),
    Product(Box<Preset>, Box<Preset>),
    WeilRestriction(Box<Preset>, usize),
}

/// Builds the full root system from a base by closing the simple
/// reflections over aligned (root, coroot) pairs. The base pairs come
/// first, in the given order.
fn generate(
    x: GammaModule,
    simple_roots: Vec<Vec<BigInt>>,
    simple_coroots: Vec<Vec<BigInt>>,
) -> Result<BasedRootDatum> {
    assert_eq!(simple_roots.len(), simple_coroots.len());
    let n = x.rank;
    let mut roots: Vec<Vec<BigInt>> = Vec::new();
    let mut coroots: Vec<Vec<BigInt>> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (r, c) in simple_roots.iter().zip(&simple_coroots) {
        seen.insert(r.clone());
        roots.push(r.clone());
        coroots.push(c.clone());
    }
    let pairing = BasedRootDatum::pairing;
    let mut frontier = 0;
    while frontier < roots.len() {
        let (beta, beta_co) = (roots[frontier].clone(), coroots[frontier].clone());
        frontier += 1;
        for (alpha, alpha_co) in simple_roots.iter().zip(&simple_coroots) {
            let k = pairing(&beta, alpha_co);
            let img: Vec<BigInt> = (0..n).map(|j| &beta[j] - &k * &alpha[j]).collect();
            if seen.insert(img.clone()) {
                let k_co = pairing(alpha, &beta_co);
                let img_co: Vec<BigInt> =
                    (0..n).map(|j| &beta_co[j] - &k_co * &alpha_co[j]).collect();
                roots.push(img);
                coroots.push(img_co);
            }
        }
    }
    let simple = (0..simple_roots.len()).collect();
    BasedRootDatum { x, roots, coroots, simple }.expect_valid("generated preset")
}

fn basis_vec(n: usize, i: usize, value: i64) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::from(value);
    v
}

/// Cartan matrix of type A_{n-1} (rank n-1).
fn cartan_a(rank: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        c[i][i] = 2;
        if i + 1 < rank {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    }
    c
}

pub fn torus(rank: usize) -> BasedRootDatum {
    torus_with_action(GammaModule::split(rank))
}

pub fn torus_with_action(x: GammaModule) -> BasedRootDatum {
    BasedRootDatum { x, roots: vec![], coroots: vec![], simple: vec![] }
}

pub fn gl(n: usize) -> Result<BasedRootDatum> {
    if n == 0 {
        return Err(LgkError::Preset("GL(0) is empty".into()));
    }
    if n == 1 {
        return Ok(torus(1));
    }
    let x = GammaModule::split(n);
    let simple_roots: Vec<Vec<BigInt>> = (0..n - 1)
        .map(|i| {
            let mut v = basis_vec(n, i, 1);
            v[i + 1] = BigInt::from(-1);
            v
        })
        .collect();
    generate(x, simple_roots.clone(), simple_roots)
}

/// Simply connected type A_{n-1} in the fundamental-weight basis:
/// alpha_i are the Cartan matrix rows, alpha_i^vee the dual basis.
pub fn sl(n: usize) -> Result<BasedRootDatum> {
    if n == 0 {
        return Err(LgkError::Preset("SL(0) is empty".into()));
    }
    if n == 1 {
        return Ok(torus(0));
    }
    let rank = n - 1;
    let c = cartan_a(rank);
    let x = GammaModule::split(rank);
    let simple_roots: Vec<Vec<BigInt>> = c
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let simple_coroots: Vec<Vec<BigInt>> = (0..rank).map(|i| basis_vec(rank, i, 1)).collect();
    generate(x, simple_roots, simple_coroots)
}

/// Adjoint type A_{n-1} in the root basis.
pub fn pgl(n: usize) -> Result<BasedRootDatum> {
    if n == 0 {
        return Err(LgkError::Preset("PGL(0) is empty".into()));
    }
    if n == 1 {
        return Ok(torus(0));
    }
    let rank = n - 1;
    let c = cartan_a(rank);
    let x = GammaModule::split(rank);
    let simple_roots: Vec<Vec<BigInt>> = (0..rank).map(|i| basis_vec(rank, i, 1)).collect();
    let simple_coroots: Vec<Vec<BigInt>> = (0..rank)
        .map(|j| (0..rank).map(|i| BigInt::from(c[i][j])).collect())
        .collect();
    generate(x, simple_roots, simple_coroots)
}

/// Sp(2n) in the standard epsilon coordinates: X = Z^n, long simple root
/// 2e_n. Simply connected type C_n.
pub fn sp(two_n: usize) -> Result<BasedRootDatum> {
    if two_n == 0 || two_n % 2 != 0 {
        return Err(LgkError::Preset(format!("Sp({two_n}): argument must be even and positive")));
    }
    let n = two_n / 2;
    let x = GammaModule::split(n);
    let mut simple_roots = Vec::new();
    let mut simple_coroots = Vec::new();
    for i in 0..n - 1 {
        let mut r = basis_vec(n, i, 1);
        r[i + 1] = BigInt::from(-1);
        simple_roots.push(r.clone());
        simple_coroots.push(r);
    }
    simple_roots.push(basis_vec(n, n - 1, 2));
    simple_coroots.push(basis_vec(n, n - 1, 1));
    generate(x, simple_roots, simple_coroots)
}

/// SO(2n+1) in epsilon coordinates: short simple root e_n with coroot 2f_n.
pub fn so_odd(dim: usize) -> Result<BasedRootDatum> {
    if dim < 3 || dim % 2 == 0 {
        return Err(LgkError::Preset(format!("SO({dim}): expected odd dimension >= 3")));
    }
    let n = (dim - 1) / 2;
    let x = GammaModule::split(n);
    let mut simple_roots = Vec::new();
    let mut simple_coroots = Vec::new();
    for i in 0..n - 1 {
        let mut r = basis_vec(n, i, 1);
        r[i + 1] = BigInt::from(-1);
        simple_roots.push(r.clone());
        simple_coroots.push(r);
    }
    simple_roots.push(basis_vec(n, n - 1, 1));
    simple_coroots.push(basis_vec(n, n - 1, 2));
    generate(x, simple_roots, simple_coroots)
}

/// Split SO(2n) in epsilon coordinates, n >= 2.
pub fn so_even(dim: usize) -> Result<BasedRootDatum> {
    if dim % 2 != 0 || dim < 4 {
        return Err(LgkError::Preset(format!("SO({dim}): expected even dimension >= 4")));
    }
    let n = dim / 2;
    let x = GammaModule::split(n);
    let mut simple_roots = Vec::new();
    for i in 0..n - 1 {
        let mut r = basis_vec(n, i, 1);
        r[i + 1] = BigInt::from(-1);
        simple_roots.push(r);
    }
    let mut last = basis_vec(n, n - 2, 1);
    last[n - 1] = BigInt::from(1);
    simple_roots.push(last);
    generate(x, simple_roots.clone(), simple_roots)
}

pub fn so(dim: usize) -> Result<BasedRootDatum> {
    if dim % 2 == 0 {
        so_even(dim)
    } else {
        so_odd(dim)
    }
}

/// Quasi-split SU(n) relative to a quadratic extension: simply connected
/// A_{n-1} with Gamma = Z/2 acting by the diagram involution
/// (fundamental weights w_i <-> w_{n-i}).
pub fn su(n: usize) -> Result<BasedRootDatum> {
    if n < 2 {
        return Err(LgkError::Preset(format!("SU({n}): expected n >= 2")));
    }
    let rank = n - 1;
    let mut swap = IntMatrix::zero(rank, rank);
    for i in 0..rank {
        swap[(i, rank - 1 - i)] = BigInt::from(1);
    }
    let x = GammaModule::new(
        rank,
        FiniteGroup::cyclic(2),
        vec![IntMatrix::identity(rank), swap],
    )
    .map_err(|e| LgkError::Preset(format!("SU({n}) action: {e}")))?;
    let split = sl(n)?;
    BasedRootDatum {
        x,
        roots: split.roots,
        coroots: split.coroots,
        simple: split.simple,
    }
    .expect_valid("quasi-split SU")
}

/// Direct product, with Galois group the product of the factors' groups
/// acting blockwise.
pub fn product(a: &BasedRootDatum, b: &BasedRootDatum) -> Result<BasedRootDatum> {
    let group = a.x.group.product(&b.x.group);
    let n = a.rank() + b.rank();
    let mut action = Vec::with_capacity(group.order);
    for g1 in 0..a.x.group.order {
        for g2 in 0..b.x.group.order {
            let mut m = IntMatrix::zero(n, n);
            for i in 0..a.rank() {
                for j in 0..a.rank() {
                    m[(i, j)] = a.x.action[g1][(i, j)].clone();
                }
            }
            for i in 0..b.rank() {
                for j in 0..b.rank() {
                    m[(a.rank() + i, a.rank() + j)] = b.x.action[g2][(i, j)].clone();
                }
            }
            action.push(m);
        }
    }
    let x = GammaModule::new(n, group, action)
        .map_err(|e| LgkError::Preset(format!("product action: {e}")))?;
    let pad_left = |v: &Vec<BigInt>| -> Vec<BigInt> {
        let mut w = v.clone();
        w.extend(vec![BigInt::zero(); b.rank()]);
        w
    };
    let pad_right = |v: &Vec<BigInt>| -> Vec<BigInt> {
        let mut w = vec![BigInt::zero(); a.rank()];
        w.extend(v.iter().cloned());
        w
    };
    let mut roots: Vec<Vec<BigInt>> = a.roots.iter().map(pad_left).collect();
    let mut coroots: Vec<Vec<BigInt>> = a.coroots.iter().map(pad_left).collect();
    roots.extend(b.roots.iter().map(pad_right));
    coroots.extend(b.coroots.iter().map(pad_right));
    let mut simple = a.simple.clone();
    simple.extend(b.simple.iter().map(|&i| i + a.roots.len()));
    BasedRootDatum { x, roots, coroots, simple }.expect_valid("product datum")
}

/// Weil restriction along a cyclic degree-d layer: the character module is
/// induced from the datum's own Galois group to its product with Z/d, and
/// roots are transported blockwise into the coset blocks.
pub fn weil_restriction(b: &BasedRootDatum, degree: usize) -> Result<BasedRootDatum> {
    if degree == 0 {
        return Err(LgkError::Preset("Weil restriction of degree 0".into()));
    }
    let small = &b.x.group;
    let big = small.product(&FiniteGroup::cyclic(degree));
    // h -> (h, 0)
    let embedding: Vec<usize> = (0..small.order).map(|h| h * degree).collect();
    let x = b.x.induce(&big, &embedding)?;
    let n_blocks = x.rank / b.rank().max(1);
    let blocks = if b.rank() == 0 { 0 } else { n_blocks };
    let place = |v: &[BigInt], block: usize| -> Vec<BigInt> {
        let mut w = vec![BigInt::zero(); x.rank];
        for (j, c) in v.iter().enumerate() {
            w[block * b.rank() + j] = c.clone();
        }
        w
    };
    let mut roots = Vec::new();
    let mut coroots = Vec::new();
    let mut simple = Vec::new();
    for block in 0..blocks {
        for (i, r) in b.roots.iter().enumerate() {
            if b.simple.contains(&i) {
                simple.push(roots.len());
            }
            roots.push(place(r, block));
            coroots.push(place(&b.coroots[i], block));
        }
    }
    BasedRootDatum { x, roots, coroots, simple }.expect_valid("Weil restriction")
}

pub fn preset(p: &Preset) -> Result<BasedRootDatum> {
    match p {
        Preset::Torus(r) => Ok(torus(*r)),
        Preset::Gl(n) => gl(*n),
        Preset::Sl(n) => sl(*n),
        Preset::Pgl(n) => pgl(*n),
        Preset::Sp(n) => sp(*n),
        Preset::SoOdd(n) => so_odd(*n),
        Preset::SoEven(n) => so_even(*n),
        Preset::Su(n) => su(*n),
        Preset::Product(a, b) => product(&preset(a)?, &preset(b)?),
        Preset::WeilRestriction(a, d) => weil_restriction(&preset(a)?, *d),
    }
}

/// Parses compact names like "SL2", "Sp4", "SU3", "SO5", "Torus2",
/// "ResSL2" (quadratic Weil restriction).
pub fn preset_by_compact_name(name: &str) -> Result<BasedRootDatum> {
    let (family, num) = split_name(name)?;
    match family {
        "SL" => sl(num),
        "GL" => gl(num),
        "PGL" => pgl(num),
        "Sp" | "SP" => sp(num),
        "SO" => so(num),
        "SU" => su(num),
        "Torus" | "T" => Ok(torus(num)),
        "ResSL" | "RESSL" => weil_restriction(&sl(num)?, 2),
        _ => Err(LgkError::Preset(name.into())),
    }
}

fn split_name(name: &str) -> Result<(&str, usize)> {
    let idx = name
        .find(|c: char| c.is_ascii_digit())
        .ok_or_else(|| LgkError::Preset(name.into()))?;
    let (family, digits) = name.split_at(idx);
    let num: usize = digits
        .parse()
        .map_err(|_| LgkError::Preset(name.into()))?;
    Ok((family, num))
}
