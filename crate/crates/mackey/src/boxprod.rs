//! Box product of Mackey functors over the same cyclic group, built level by
//! level as the minimal presentation generated under transfer by levelwise
//! tensor products.
//!
//! (M □ N)(C_d) is presented on M(C_d) ⊗ N(C_d) together with one transfer
//! slot per prime p | d holding the Weyl coinvariants of (M □ N)(C_{d/p}),
//! modulo
//!   * coequalizer rows identifying tr_p tr_q = tr_q tr_p out of the level
//!     two prime steps down, and
//!   * Frobenius rows x ⊗ tr(y) = tr(res(x) ⊗ y) and tr(y) ⊗ x = tr(y ⊗ res(x)).
//!
//! Restriction of a transfer class is defined on the chosen generator lifts
//! by the double coset formula; `GroupMap::new` re-checks each relation, so a
//! lift-dependent choice cannot slip through — it aborts with the offending
//! relation instead.

use crate::functor::MackeyFunctor;
use exactlin::{FgAbGroup, GroupMap, Mat};
use num_bigint::BigInt;
use std::collections::BTreeMap;

fn map_pow(gmap: &GroupMap, k: u64) -> GroupMap {
    let mut acc = GroupMap::identity(gmap.src.clone());
    for _ in 0..k {
        acc = acc.compose(gmap);
    }
    acc
}

fn embed(row: &[BigInt], offset: usize, width: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); width];
    out[offset..offset + row.len()].clone_from_slice(row);
    out
}

pub fn box_product(m: &MackeyFunctor, nf: &MackeyFunctor) -> Result<MackeyFunctor, String> {
    if m.ctx.n != nf.ctx.n {
        return Err(format!("□ needs equal orders, got {} and {}", m.ctx.n, nf.ctx.n));
    }
    let ctx = m.ctx.clone();
    let n = ctx.n;
    let mut levels: BTreeMap<u64, FgAbGroup> = BTreeMap::new();
    let mut res: BTreeMap<(u64, u64), GroupMap> = BTreeMap::new();
    let mut tr: BTreeMap<(u64, u64), GroupMap> = BTreeMap::new();
    let mut weyl: BTreeMap<u64, GroupMap> = BTreeMap::new();

    let fail = |d: u64, what: &str, e: String| -> ! {
        panic!("box product ill-defined at level C_{d} ({what}): {e}")
    };

    for &d in &ctx.divisors {
        let tens = m.level(d).tensor(nf.level(d));
        let ps: Vec<u64> = ctx.primes().into_iter().filter(|p| d % p == 0).collect();

        let mut offsets = vec![tens.ngens];
        for &p in &ps {
            offsets.push(offsets.last().unwrap() + levels[&(d / p)].ngens);
        }
        let total = *offsets.last().unwrap();

        let mut rels = Mat::zero(0, total);
        for i in 0..tens.rels.rows {
            rels.push_row(&embed(&tens.rels.row(i), 0, total));
        }
        for (si, &p) in ps.iter().enumerate() {
            let sub = &levels[&(d / p)];
            for i in 0..sub.rels.rows {
                rels.push_row(&embed(&sub.rels.row(i), offsets[si], total));
            }
            // transfer factors through the coinvariants of W_{C_d}(C_{d/p}) = ⟨g^{n/d}⟩
            let coin = Mat::identity(sub.ngens).sub(&map_pow(&weyl[&(d / p)], n / d).mat);
            for i in 0..coin.rows {
                rels.push_row(&embed(&coin.row(i), offsets[si], total));
            }
        }
        for (si, &p) in ps.iter().enumerate() {
            for (sj, &q) in ps.iter().enumerate().skip(si + 1) {
                if d % (p * q) != 0 {
                    continue;
                }
                let into_p = &tr[&(d / p, q)];
                let into_q = &tr[&(d / q, p)];
                for k in 0..levels[&(d / (p * q))].ngens {
                    let a = embed(&into_p.mat.row(k), offsets[si], total);
                    let b = embed(&into_q.mat.row(k), offsets[sj], total);
                    let row: Vec<BigInt> =
                        a.iter().zip(&b).map(|(x, y)| x - y).collect();
                    rels.push_row(&row);
                }
            }
        }
        for (si, &p) in ps.iter().enumerate() {
            let rm = m.res_step(d, p);
            let tm = m.tr_step(d, p);
            let rn = nf.res_step(d, p);
            let tn = nf.tr_step(d, p);
            let nd = nf.level(d).ngens;
            let nlow = nf.level(d / p).ngens;
            for i in 0..m.level(d).ngens {
                for j in 0..nlow {
                    // e_i ⊗ tr(e_j) − tr(res(e_i) ⊗ e_j)
                    let mut row = vec![BigInt::from(0); total];
                    for (t, c) in tn.mat.row(j).iter().enumerate() {
                        row[i * nd + t] += c;
                    }
                    for (u, c) in rm.mat.row(i).iter().enumerate() {
                        row[offsets[si] + u * nlow + j] -= c;
                    }
                    rels.push_row(&row);
                }
            }
            for i in 0..m.level(d / p).ngens {
                for j in 0..nd {
                    // tr(e_i) ⊗ e_j − tr(e_i ⊗ res(e_j))
                    let mut row = vec![BigInt::from(0); total];
                    for (t, c) in tm.mat.row(i).iter().enumerate() {
                        row[t * nd + j] += c;
                    }
                    for (u, c) in rn.mat.row(j).iter().enumerate() {
                        row[offsets[si] + i * nlow + u] -= c;
                    }
                    rels.push_row(&row);
                }
            }
        }
        let level = FgAbGroup::new(total, rels);

        let mut wmat = Mat::zero(total, total);
        let wt = m.weyl_at(d).mat.kronecker(&nf.weyl_at(d).mat);
        for i in 0..tens.ngens {
            wmat.set_row(i, &embed(&wt.row(i), 0, total));
        }
        for (si, &p) in ps.iter().enumerate() {
            let wq = &weyl[&(d / p)].mat;
            for k in 0..wq.rows {
                wmat.set_row(offsets[si] + k, &embed(&wq.row(k), offsets[si], total));
            }
        }
        let weyl_d = GroupMap::new(level.clone(), level.clone(), wmat)
            .unwrap_or_else(|e| fail(d, "Weyl action", e));

        for (si, &p) in ps.iter().enumerate() {
            let sub = levels[&(d / p)].clone();
            let tr_mat = Mat::from_fn(sub.ngens, total, |r, c| {
                BigInt::from(i32::from(c == offsets[si] + r))
            });
            let tr_map = GroupMap::new(sub, level.clone(), tr_mat)
                .unwrap_or_else(|e| fail(d, "transfer", e));
            tr.insert((d, p), tr_map);
        }
        for &p in &ps {
            let dst = levels[&(d / p)].clone();
            let mut rmat = Mat::zero(total, dst.ngens);
            let rt = m.res_step(d, p).mat.kronecker(&nf.res_step(d, p).mat);
            for i in 0..tens.ngens {
                rmat.set_row(i, &embed(&rt.row(i), 0, dst.ngens));
            }
            for (sj, &q) in ps.iter().enumerate() {
                if q == p {
                    // res ∘ tr at the same prime: sum of Weyl translates
                    let mut sum = Mat::zero(dst.ngens, dst.ngens);
                    for t in 0..p {
                        sum = sum.add(&map_pow(&weyl[&(d / p)], t * (n / d)).mat);
                    }
                    for k in 0..dst.ngens {
                        rmat.set_row(offsets[sj] + k, &sum.row(k));
                    }
                } else {
                    // mixed double coset: res_p tr_q = tr_q res_p one level down
                    let through = res[&(d / q, p)].mat.mul(&tr[&(d / p, q)].mat);
                    for k in 0..through.rows {
                        rmat.set_row(offsets[sj] + k, &through.row(k));
                    }
                }
            }
            let res_map = GroupMap::new(level.clone(), dst, rmat)
                .unwrap_or_else(|e| fail(d, "restriction", e));
            res.insert((d, p), res_map);
        }

        levels.insert(d, level);
        weyl.insert(d, weyl_d);
    }

    Ok(MackeyFunctor { ctx, levels, res, tr, weyl })
}
