//! The standard Mackey functors: the Burnside functor A, the constant and
//! co-constant functors Z and Z*, the top-concentrated ⟨Z⟩ and ⟨Z/p⟩, the
//! twisted Burnside functors A[τ], and ⊠-assembled functors for square-free
//! orders.

use crate::functor::{prime_steps, MackeyFunctor};
use burnside::{BurnsideElement, CyclicGroupCtx};
use exactlin::{FgAbGroup, GroupMap, Mat};
use num_bigint::BigInt;
use num_integer::Integer;
use ro::TauFunction;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardName {
    /// Burnside functor A: level_d = A(C_d).
    A,
    /// Constant functor: res = id, tr = index.
    Z,
    /// Co-constant functor: res = index, tr = id.
    Zdual,
    /// ⟨Z⟩: Z at the top level, zero below.
    BrackZ,
    /// ⟨Z/p⟩: Z/p at the top level, zero below.
    BrackZmodP(u64),
    /// A_I ⊠ Z_{I^c} for a set of primes I of a square-free order.
    AiBoxZic(Vec<u64>),
}

pub fn standard(name: &StandardName, ctx: &CyclicGroupCtx) -> Result<MackeyFunctor, String> {
    match name {
        StandardName::A => Ok(burnside_functor(ctx)),
        StandardName::Z => Ok(constant_z(ctx)),
        StandardName::Zdual => Ok(dual_z(ctx)),
        StandardName::BrackZ => Ok(top_concentrated(ctx, 0)),
        StandardName::BrackZmodP(p) => {
            if *p < 2 {
                return Err(format!("⟨Z/{p}⟩ needs a modulus at least 2"));
            }
            Ok(top_concentrated(ctx, *p))
        }
        StandardName::AiBoxZic(i_set) => ai_box_zic(ctx, i_set),
    }
}

/// The Burnside Mackey functor: level_d = A(C_d) in the orbit basis, with the
/// ring-theoretic restriction and transfer and trivial Weyl action.
pub fn burnside_functor(ctx: &CyclicGroupCtx) -> MackeyFunctor {
    let mut levels = BTreeMap::new();
    let mut res = BTreeMap::new();
    let mut tr = BTreeMap::new();
    let mut weyl = BTreeMap::new();
    for &d in &ctx.divisors {
        let divs = ctx.divisors_of(d);
        let level = FgAbGroup::free(divs.len());
        weyl.insert(d, GroupMap::identity(level.clone()));
        levels.insert(d, level);
    }
    for &d in &ctx.divisors {
        for p in dedup_primes(d) {
            let src = levels[&d].clone();
            let dst = levels[&(d / p)].clone();
            let mut res_mat = Mat::zero(src.ngens, dst.ngens);
            for (i, &k) in ctx.divisors_of(d).iter().enumerate() {
                let img = BurnsideElement::basis(ctx, d, k).restrict(ctx, d / p).unwrap();
                res_mat.set_row(i, &img.coords);
            }
            res.insert((d, p), GroupMap::new(src.clone(), dst.clone(), res_mat).unwrap());
            let mut tr_mat = Mat::zero(dst.ngens, src.ngens);
            for (i, &k) in ctx.divisors_of(d / p).iter().enumerate() {
                let img = BurnsideElement::basis(ctx, d / p, k).transfer(ctx, d).unwrap();
                tr_mat.set_row(i, &img.coords);
            }
            tr.insert((d, p), GroupMap::new(dst, src, tr_mat).unwrap());
        }
    }
    MackeyFunctor { ctx: ctx.clone(), levels, res, tr, weyl }
}

pub(crate) fn dedup_primes(d: u64) -> Vec<u64> {
    let mut ps = prime_steps(d);
    ps.dedup();
    ps
}

fn rank_one_functor(ctx: &CyclicGroupCtx, res_scale: impl Fn(u64) -> i64, tr_scale: impl Fn(u64) -> i64) -> MackeyFunctor {
    let z = FgAbGroup::free(1);
    let mut levels = BTreeMap::new();
    let mut res = BTreeMap::new();
    let mut tr = BTreeMap::new();
    let mut weyl = BTreeMap::new();
    for &d in &ctx.divisors {
        levels.insert(d, z.clone());
        weyl.insert(d, GroupMap::identity(z.clone()));
        for p in dedup_primes(d) {
            res.insert(
                (d, p),
                GroupMap::new(z.clone(), z.clone(), Mat::from_rows(&[vec![res_scale(p)]]))
                    .unwrap(),
            );
            tr.insert(
                (d, p),
                GroupMap::new(z.clone(), z.clone(), Mat::from_rows(&[vec![tr_scale(p)]]))
                    .unwrap(),
            );
        }
    }
    MackeyFunctor { ctx: ctx.clone(), levels, res, tr, weyl }
}

/// The constant Mackey functor Z: res = id, tr = [H:K].
pub fn constant_z(ctx: &CyclicGroupCtx) -> MackeyFunctor {
    rank_one_functor(ctx, |_| 1, |p| p as i64)
}

/// The dual Z*: res = [H:K], tr = id.
pub fn dual_z(ctx: &CyclicGroupCtx) -> MackeyFunctor {
    rank_one_functor(ctx, |p| p as i64, |_| 1)
}

/// ⟨Z⟩ (modulus 0) or ⟨Z/m⟩: one cyclic group at the top level, zero below,
/// with zero structure maps.
pub fn top_concentrated(ctx: &CyclicGroupCtx, modulus: u64) -> MackeyFunctor {
    let top = if modulus == 0 { FgAbGroup::free(1) } else { FgAbGroup::cyclic(modulus) };
    let zero = FgAbGroup::zero();
    let mut levels = BTreeMap::new();
    let mut res = BTreeMap::new();
    let mut tr = BTreeMap::new();
    let mut weyl = BTreeMap::new();
    for &d in &ctx.divisors {
        let level = if d == ctx.n { top.clone() } else { zero.clone() };
        weyl.insert(d, GroupMap::identity(level.clone()));
        levels.insert(d, level);
    }
    for &d in &ctx.divisors {
        for p in dedup_primes(d) {
            res.insert((d, p), GroupMap::zero(levels[&d].clone(), levels[&(d / p)].clone()));
            tr.insert((d, p), GroupMap::zero(levels[&(d / p)].clone(), levels[&d].clone()));
        }
    }
    MackeyFunctor { ctx: ctx.clone(), levels, res, tr, weyl }
}

/// The twisted Burnside functor A[τ] together with its twist.
#[derive(Clone, Debug)]
pub struct TauBurnside {
    pub tau: TauFunction,
    pub functor: MackeyFunctor,
}

/// Restriction twist accumulated over one prime step ending at index divisor
/// k: Π τ_s over the divisors s of n with (k/p) | s but k ∤ s.
pub(crate) fn step_twist(ctx: &CyclicGroupCtx, tau: &TauFunction, k: u64, p: u64) -> BigInt {
    let mut acc = BigInt::from(1);
    for &s in &ctx.divisors {
        if s % (k / p) == 0 && s % k != 0 {
            acc *= BigInt::from(tau.at(s));
        }
    }
    acc
}

/// Build A[τ]: levels are free on {tr^{C_d}_{C_k} μ_k : k | d} (ascending k,
/// matching the orbit basis of A), transfers are coordinate embeddings, and
/// res^{C_d}_{C_k}(μ_d) = (Π_{k|s, d∤s} τ_s)·μ_k. Setting every τ_d = 1
/// recovers A on the nose.
pub fn tau_burnside(tau: &TauFunction) -> TauBurnside {
    let ctx = CyclicGroupCtx::new(tau.n);
    let mut levels = BTreeMap::new();
    let mut res = BTreeMap::new();
    let mut tr = BTreeMap::new();
    let mut weyl = BTreeMap::new();
    for &d in &ctx.divisors {
        let level = FgAbGroup::free(ctx.divisors_of(d).len());
        weyl.insert(d, GroupMap::identity(level.clone()));
        levels.insert(d, level);
    }
    for &d in &ctx.divisors {
        for p in dedup_primes(d) {
            let src = levels[&d].clone();
            let dst = levels[&(d / p)].clone();
            let below = ctx.divisors_of(d / p);
            let mut res_mat = Mat::zero(src.ngens, dst.ngens);
            for (i, &k) in ctx.divisors_of(d).iter().enumerate() {
                if (d / p) % k == 0 {
                    // res∘tr double coset: p translated copies, Weyl trivial
                    let j = below.iter().position(|&x| x == k).unwrap();
                    res_mat[(i, j)] = BigInt::from(p);
                } else {
                    let j = below.iter().position(|&x| x == k / p).unwrap();
                    res_mat[(i, j)] = step_twist(&ctx, tau, k, p);
                }
            }
            res.insert((d, p), GroupMap::new(src.clone(), dst.clone(), res_mat).unwrap());
            let mut tr_mat = Mat::zero(dst.ngens, src.ngens);
            for (i, &k) in below.iter().enumerate() {
                let j = ctx.divisors_of(d).iter().position(|&x| x == k).unwrap();
                tr_mat[(i, j)] = BigInt::from(1);
            }
            tr.insert((d, p), GroupMap::new(dst, src, tr_mat).unwrap());
        }
    }
    TauBurnside {
        tau: tau.clone(),
        functor: MackeyFunctor { ctx, levels, res, tr, weyl },
    }
}

/// Levelwise external product of a C_a-functor and a C_b-functor with
/// gcd(a, b) = 1: (M ⊠ N)(C_f) = M(C_{gcd(f,a)}) ⊗ N(C_{gcd(f,b)}).
pub fn boxtimes(m: &MackeyFunctor, nf: &MackeyFunctor) -> Result<MackeyFunctor, String> {
    let a = m.ctx.n;
    let b = nf.ctx.n;
    if a.gcd(&b) != 1 {
        return Err(format!("⊠ needs coprime orders, got {a} and {b}"));
    }
    let ctx = CyclicGroupCtx::new(a * b);
    let part = |f: u64| (f.gcd(&a), f.gcd(&b));
    let mut levels = BTreeMap::new();
    let mut res = BTreeMap::new();
    let mut tr = BTreeMap::new();
    let mut weyl = BTreeMap::new();
    for &f in &ctx.divisors {
        let (fa, fb) = part(f);
        levels.insert(f, m.level(fa).tensor(nf.level(fb)));
        weyl.insert(f, m.weyl_at(fa).tensor(nf.weyl_at(fb)));
        for p in dedup_primes(f) {
            let (r, t) = if a % p == 0 {
                (
                    m.res_step(fa, p).tensor(&GroupMap::identity(nf.level(fb).clone())),
                    m.tr_step(fa, p).tensor(&GroupMap::identity(nf.level(fb).clone())),
                )
            } else {
                (
                    GroupMap::identity(m.level(fa).clone()).tensor(nf.res_step(fb, p)),
                    GroupMap::identity(m.level(fa).clone()).tensor(nf.tr_step(fb, p)),
                )
            };
            res.insert((f, p), r);
            tr.insert((f, p), t);
        }
    }
    MackeyFunctor::new(ctx, levels, res, tr, weyl)
}

/// A_I ⊠ Z_{I^c} over a square-free order: the Burnside functor on the primes
/// in I, constant Z on the rest.
pub fn ai_box_zic(ctx: &CyclicGroupCtx, i_set: &[u64]) -> Result<MackeyFunctor, String> {
    let n = ctx.n;
    if ctx.factorization.iter().any(|&(_, e)| e > 1) {
        return Err(format!("A_I ⊠ Z_Ic needs a square-free order, got {n}"));
    }
    let mut d_i = 1u64;
    for &p in i_set {
        if !ctx.primes().contains(&p) {
            return Err(format!("{p} is not a prime factor of {n}"));
        }
        d_i *= p;
    }
    let a_part = burnside_functor(&CyclicGroupCtx::new(d_i));
    let z_part = constant_z(&CyclicGroupCtx::new(n / d_i));
    boxtimes(&a_part, &z_part)
}
