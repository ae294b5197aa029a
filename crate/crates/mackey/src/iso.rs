//! Recognizing twisted Burnside functors and searching for explicit Mackey
//! isomorphisms.
//!
//! Both entry points only ever answer "yes" with a certificate: a candidate
//! match is accepted after an explicit `MackeyMap` from the model has been
//! built and verified to commute with all structure maps and to be a
//! levelwise isomorphism.

use crate::functor::{MackeyFunctor, MackeyMap};
use crate::standard::{dedup_primes, step_twist, tau_burnside};
use burnside::CyclicGroupCtx;
use exactlin::{det, is_unimodular, kernel_basis, solve_left, GroupMap, Mat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use ro::TauFunction;
use std::collections::BTreeMap;

/// Units of Z/m, one representative per ± pair, ascending.
fn units_up_to_sign(m: u64) -> Vec<i64> {
    if m <= 2 {
        return vec![1];
    }
    (1..=m / 2).filter(|u| u.gcd(&m) == 1).map(|u| u as i64).collect()
}

fn tau_candidates(ctx: &CyclicGroupCtx) -> Vec<TauFunction> {
    let mut acc: Vec<BTreeMap<u64, i64>> = vec![BTreeMap::new()];
    for &d in ctx.divisors.iter().filter(|&&d| d < ctx.n) {
        let menu = units_up_to_sign(ctx.n / d);
        let mut next = Vec::with_capacity(acc.len() * menu.len());
        for base in &acc {
            for &u in &menu {
                let mut vals = base.clone();
                vals.insert(d, u);
                next.push(vals);
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|vals| TauFunction::from_map(ctx.n, vals).expect("unit candidate"))
        .collect()
}

/// A[τ]-shaped: every level free of rank #divisors(d) with trivial Weyl
/// action. Assumes `m` has been rebased to canonical presentations.
fn shape_check(m: &MackeyFunctor) -> Result<(), String> {
    for &d in &m.ctx.divisors {
        let canon = m.level(d).canonical();
        let want = m.ctx.divisors_of(d).len();
        if !canon.torsion.is_empty() || canon.free_rank != want {
            return Err(format!("level C_{d} is {canon}, want Z^{want}"));
        }
        let id = GroupMap::identity(m.level(d).clone());
        if !m.weyl_at(d).equals_induced(&id) {
            return Err(format!("Weyl action at level C_{d} is nontrivial"));
        }
    }
    Ok(())
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// The matrix whose rows are tr-chains of the chosen generator images, in
/// ascending divisor order — the level-d component of the would-be iso.
fn level_matrix(m: &MackeyFunctor, xs: &BTreeMap<u64, Vec<BigInt>>, d: u64) -> Mat {
    let divs = m.ctx.divisors_of(d);
    let mut out = Mat::zero(divs.len(), m.level(d).ngens);
    for (i, &k) in divs.iter().enumerate() {
        out.set_row(i, &m.tr_chain(k, d).mat.apply_row(&xs[&k]));
    }
    out
}

/// det(L) as a linear functional of the unknown last row, given the fixed
/// rows above it: the cofactor expansion along that row.
fn cofactor_row(fixed: &[Vec<BigInt>], rank: usize) -> Vec<BigInt> {
    assert_eq!(fixed.len() + 1, rank);
    (0..rank)
        .map(|j| {
            let minor: Vec<Vec<BigInt>> = fixed
                .iter()
                .map(|row| {
                    row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect()
                })
                .collect();
            let sign = if (rank - 1 + j) % 2 == 0 { 1 } else { -1 };
            det(&Mat::from_rows(&minor)) * BigInt::from(sign)
        })
        .collect()
}

/// Find t with a0 + Σ t_i·a_i = ±1, via an iterated extended gcd.
fn unit_combination(a0: &BigInt, avals: &[BigInt]) -> Option<Vec<BigInt>> {
    for target in [BigInt::one(), -BigInt::one()] {
        let need = &target - a0;
        if need.is_zero() {
            return Some(vec![BigInt::zero(); avals.len()]);
        }
        let mut g = BigInt::zero();
        let mut coeffs = vec![BigInt::zero(); avals.len()];
        for (i, a) in avals.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if g.is_zero() {
                g = a.abs();
                coeffs[i] = BigInt::from(if a.is_negative() { -1 } else { 1 });
            } else {
                let eg = g.extended_gcd(a);
                for c in coeffs.iter_mut() {
                    *c *= &eg.x;
                }
                coeffs[i] = eg.y;
                g = eg.gcd;
            }
            if g.is_one() {
                break;
            }
        }
        if g.is_zero() || !(&need % &g).is_zero() {
            continue;
        }
        let q = need / g;
        return Some(coeffs.into_iter().map(|c| c * &q).collect());
    }
    None
}

/// Level-by-level deterministic solve: fix the image of μ_1, then for each
/// d ascending solve the restriction constraints for the image of μ_d and
/// use the linearity of det in that single unknown row to pick an integral
/// solution making the level component unimodular.
fn greedy_match(m: &MackeyFunctor, tau: &TauFunction) -> Option<BTreeMap<u64, Vec<BigInt>>> {
    let ctx = &m.ctx;
    let mut xs: BTreeMap<u64, Vec<BigInt>> = BTreeMap::new();
    for &d in &ctx.divisors {
        if d == 1 {
            // a solution with x_1 = −1 negates to one with x_1 = +1
            xs.insert(1, vec![BigInt::one()]);
            continue;
        }
        let rank = m.level(d).ngens;
        let mut a = Mat::zero(rank, 0);
        let mut b: Vec<BigInt> = vec![];
        for p in dedup_primes(d) {
            a = a.hstack(&m.res_step(d, p).mat);
            let tw = step_twist(ctx, tau, d, p);
            b.extend(xs[&(d / p)].iter().map(|c| c * &tw));
        }
        let x0 = solve_left(&a, &b)?;
        let ker = kernel_basis(&a);
        let fixed: Vec<Vec<BigInt>> = ctx
            .divisors_of(d)
            .into_iter()
            .filter(|&k| k < d)
            .map(|k| m.tr_chain(k, d).mat.apply_row(&xs[&k]))
            .collect();
        let c = cofactor_row(&fixed, rank);
        let a0 = dot(&c, &x0);
        let avals: Vec<BigInt> = (0..ker.rows).map(|i| dot(&c, &ker.row(i))).collect();
        let ts = unit_combination(&a0, &avals)?;
        let mut x = x0;
        for (i, t) in ts.iter().enumerate() {
            for j in 0..rank {
                x[j] += t * &ker[(i, j)];
            }
        }
        xs.insert(d, x);
    }
    Some(xs)
}

/// Fallback: solve all restriction constraints jointly, then search small
/// integer combinations of the solution lattice for one whose level
/// components are all unimodular.
fn joint_match(m: &MackeyFunctor, tau: &TauFunction) -> Option<BTreeMap<u64, Vec<BigInt>>> {
    let ctx = &m.ctx;
    let mut offs: BTreeMap<u64, usize> = BTreeMap::new();
    let mut total = 0usize;
    for &d in &ctx.divisors {
        offs.insert(d, total);
        total += m.level(d).ngens;
    }
    let mut cols: Vec<Vec<BigInt>> = vec![];
    for &d in ctx.divisors.iter().filter(|&&d| d > 1) {
        for p in dedup_primes(d) {
            let r = &m.res_step(d, p).mat;
            let tw = step_twist(ctx, tau, d, p);
            for j in 0..m.level(d / p).ngens {
                let mut col = vec![BigInt::zero(); total];
                for i in 0..m.level(d).ngens {
                    col[offs[&d] + i] = r[(i, j)].clone();
                }
                col[offs[&(d / p)] + j] -= &tw;
                cols.push(col);
            }
        }
    }
    let cmat = Mat::from_fn(total, cols.len(), |i, j| cols[j][i].clone());
    let ker = kernel_basis(&cmat);
    if ker.rows == 0 {
        return None;
    }
    let split = |z: &[BigInt]| -> BTreeMap<u64, Vec<BigInt>> {
        ctx.divisors
            .iter()
            .map(|&d| (d, z[offs[&d]..offs[&d] + m.level(d).ngens].to_vec()))
            .collect()
    };
    let accept = |z: &[BigInt]| -> Option<BTreeMap<u64, Vec<BigInt>>> {
        let xs = split(z);
        ctx.divisors
            .iter()
            .all(|&d| is_unimodular(&level_matrix(m, &xs, d)))
            .then(|| xs)
    };
    for i in 0..ker.rows {
        let row = ker.row(i);
        if let Some(xs) = accept(&row) {
            return Some(xs);
        }
        let neg: Vec<BigInt> = row.iter().map(|v| -v).collect();
        if let Some(xs) = accept(&neg) {
            return Some(xs);
        }
    }
    let mut state: u64 = 0x243F_6A88_85A3_08D3;
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        state
    };
    for trial in 0..400u64 {
        let bound = 2 + (trial / 80) as i64;
        let mut z = vec![BigInt::zero(); total];
        let mut nonzero = false;
        for i in 0..ker.rows {
            let c = (next() % (2 * bound as u64 + 1)) as i64 - bound;
            if c == 0 {
                continue;
            }
            nonzero = true;
            let cb = BigInt::from(c);
            for j in 0..total {
                z[j] += &cb * &ker[(i, j)];
            }
        }
        if !nonzero {
            continue;
        }
        if let Some(xs) = accept(&z) {
            return Some(xs);
        }
    }
    None
}

/// Assemble the candidate generator images into a full morphism from the
/// model A[τ] and verify it.
fn certificate(
    m: &MackeyFunctor,
    tau: &TauFunction,
    xs: &BTreeMap<u64, Vec<BigInt>>,
) -> Option<MackeyMap> {
    let model = tau_burnside(tau).functor;
    let mut maps = BTreeMap::new();
    for &d in &m.ctx.divisors {
        let mat = level_matrix(m, xs, d);
        maps.insert(d, GroupMap::new(model.level(d).clone(), m.level(d).clone(), mat).ok()?);
    }
    let phi = MackeyMap::new(&model, m, maps).ok()?;
    phi.is_isomorphism().then_some(phi)
}

fn match_to_tau(reb: &MackeyFunctor, tau: &TauFunction) -> Option<MackeyMap> {
    shape_check(reb).ok()?;
    if let Some(xs) = greedy_match(reb, tau) {
        if let Some(phi) = certificate(reb, tau, &xs) {
            return Some(phi);
        }
    }
    let xs = joint_match(reb, tau)?;
    certificate(reb, tau, &xs)
}

/// Recognize M as a twisted Burnside functor: find τ with M ≅ A[τ].
///
/// Candidate twists are enumerated one unit representative per sign class
/// (A[τ] ≅ A[τ'] when τ ≡ ±τ' divisorwise), and a candidate is accepted only
/// with a verified isomorphism from the model. The twist τ_d is NOT read off
/// a single restriction matrix entry: restrictions couple the values across
/// levels, so the images of the generators μ_d are solved for globally.
pub fn iso_as_tau(m: &MackeyFunctor) -> Result<TauFunction, String> {
    let reb = m.rebase_canonical();
    shape_check(&reb).map_err(|e| format!("not a twisted Burnside functor: {e}"))?;
    for cand in tau_candidates(&m.ctx) {
        if match_to_tau(&reb, &cand).is_some() {
            return Ok(cand);
        }
    }
    Err("no twist τ matches this functor".into())
}

/// Decide M ≅ A[τ] for one given twist.
pub fn is_iso_to_tau(m: &MackeyFunctor, tau: &TauFunction) -> bool {
    m.ctx.n == tau.n && match_to_tau(&m.rebase_canonical(), tau).is_some()
}

/// Search for an explicit isomorphism M1 ≅ M2 and return it with both sides
/// in their original presentations.
///
/// Sound on success — the returned map is a verified levelwise isomorphism
/// commuting with all structure maps. `None` only means "not found": the
/// commutation constraints are solved exactly, but the hunt for a unimodular
/// lattice point is a bounded randomized search, and functors whose levels
/// sum to more than rank 6 are not attempted (use `iso_as_tau` for twisted
/// Burnside shapes, which grow past that immediately).
pub fn find_mackey_iso(m1: &MackeyFunctor, m2: &MackeyFunctor) -> Option<MackeyMap> {
    if m1.ctx.n != m2.ctx.n || m1.canonical_levels() != m2.canonical_levels() {
        return None;
    }
    let r1 = m1.rebase_canonical();
    let r2 = m2.rebase_canonical();
    let total_rank: usize = r1.levels.values().map(|g| g.ngens).sum();
    if total_rank > 6 {
        return None;
    }

    let ctx = &m1.ctx;
    let mut phi_off: BTreeMap<u64, usize> = BTreeMap::new();
    let mut nphi = 0usize;
    for &d in &ctx.divisors {
        phi_off.insert(d, nphi);
        nphi += r1.level(d).ngens * r2.level(d).ngens;
    }
    if nphi == 0 {
        // both functors are zero
        let maps = ctx
            .divisors
            .iter()
            .map(|&d| (d, GroupMap::zero(m1.level(d).clone(), m2.level(d).clone())))
            .collect();
        return MackeyMap::new(m1, m2, maps).ok();
    }

    // Sparse columns over unknowns [Φ entries | congruence auxiliaries]: one
    // column per entry of each commutation square, with an auxiliary unknown
    // absorbing multiples of the target's torsion modulus.
    let mut cols: Vec<Vec<(usize, BigInt)>> = vec![];
    let mut naux = 0usize;
    let idx = |d: u64, i: usize, k: usize| phi_off[&d] + i * r2.level(d).ngens + k;
    let mut add_square = |lhs_left: u64, a: &Mat, rhs_right: u64, b: &Mat, tgt: u64| {
        // Φ_{lhs_left}·a − b·Φ_{rhs_right} ≡ 0 modulo the rels of c2(tgt)
        let rows = r1.level(lhs_left).ngens;
        let cols_out = r2.level(tgt).ngens;
        let canon = r2.level(tgt).canonical();
        for i in 0..rows {
            for j in 0..cols_out {
                let mut col: Vec<(usize, BigInt)> = vec![];
                for k in 0..r2.level(lhs_left).ngens {
                    if !a[(k, j)].is_zero() {
                        col.push((idx(lhs_left, i, k), a[(k, j)].clone()));
                    }
                }
                for k in 0..r1.level(rhs_right).ngens {
                    if !b[(i, k)].is_zero() {
                        col.push((idx(rhs_right, k, j), -b[(i, k)].clone()));
                    }
                }
                if j >= canon.free_rank {
                    col.push((nphi + naux, canon.torsion[j - canon.free_rank].clone()));
                    naux += 1;
                }
                if !col.is_empty() {
                    cols.push(col);
                }
            }
        }
    };
    for &d in &ctx.divisors {
        add_square(d, &r2.weyl_at(d).mat, d, &r1.weyl_at(d).mat, d);
        for p in dedup_primes(d) {
            add_square(d, &r2.res_step(d, p).mat, d / p, &r1.res_step(d, p).mat, d / p);
            add_square(d / p, &r2.tr_step(d, p).mat, d, &r1.tr_step(d, p).mat, d);
        }
    }
    let nunk = nphi + naux;
    let cmat = Mat::from_fn(nunk, cols.len(), |i, j| {
        cols[j].iter().filter(|&&(u, _)| u == i).map(|(_, v)| v.clone()).sum()
    });
    let ker = kernel_basis(&cmat);

    let assemble = |z: &[BigInt]| -> Option<MackeyMap> {
        let mut maps = BTreeMap::new();
        for &d in &ctx.divisors {
            let (rows, cols_d) = (r1.level(d).ngens, r2.level(d).ngens);
            let mat = Mat::from_fn(rows, cols_d, |i, k| z[idx(d, i, k)].clone());
            let gm = GroupMap::new(r1.level(d).clone(), r2.level(d).clone(), mat).ok()?;
            if !gm.is_isomorphism() {
                return None;
            }
            maps.insert(d, gm);
        }
        let phi = MackeyMap::new(&r1, &r2, maps).ok()?;
        // conjugate back to the original presentations
        let mut orig = BTreeMap::new();
        for &d in &ctx.divisors {
            let (_, t1, _) = m1.level(d).canonicalized();
            let (_, _, f2) = m2.level(d).canonicalized();
            orig.insert(d, t1.compose(phi.level(d)).compose(&f2));
        }
        MackeyMap::new(m1, m2, orig).ok()
    };

    for i in 0..ker.rows {
        let row = ker.row(i);
        if let Some(phi) = assemble(&row) {
            return Some(phi);
        }
        let neg: Vec<BigInt> = row.iter().map(|v| -v).collect();
        if let Some(phi) = assemble(&neg) {
            return Some(phi);
        }
    }
    let mut state: u64 = 0x13198A2E_03707344;
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        state
    };
    for trial in 0..500u64 {
        let bound = 1 + (trial / 100) as i64;
        let mut z = vec![BigInt::zero(); nunk];
        let mut nonzero = false;
        for i in 0..ker.rows {
            let c = (next() % (2 * bound as u64 + 1)) as i64 - bound;
            if c == 0 {
                continue;
            }
            nonzero = true;
            let cb = BigInt::from(c);
            for j in 0..nunk {
                z[j] += &cb * &ker[(i, j)];
            }
        }
        if nonzero {
            if let Some(phi) = assemble(&z) {
                return Some(phi);
            }
        }
    }
    None
}
