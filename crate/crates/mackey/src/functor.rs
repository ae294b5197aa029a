//! Mackey functors for C_n as leveled presented abelian groups.
//!
//! A level per divisor d | n, restriction/transfer per prime step, and the
//! action of the fixed generator g of C_n on each level. All structure maps
//! are stored as prime steps; longer chains are composed on demand, which is
//! consistent by the transitivity axiom (and checked by `check_axioms`).

use burnside::CyclicGroupCtx;
use exactlin::{FgAbGroup, GroupMap, Mat};
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct MackeyFunctor {
    pub ctx: CyclicGroupCtx,
    pub levels: BTreeMap<u64, FgAbGroup>,
    /// res[(d, p)]: level_d -> level_{d/p}
    pub res: BTreeMap<(u64, u64), GroupMap>,
    /// tr[(d, p)]: level_{d/p} -> level_d
    pub tr: BTreeMap<(u64, u64), GroupMap>,
    /// weyl[d]: action of g on level_d
    pub weyl: BTreeMap<u64, GroupMap>,
}

#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    pub violations: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Prime factors of k with multiplicity, ascending.
pub fn prime_steps(k: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut rest = k;
    let mut p = 2;
    while p * p <= rest {
        while rest % p == 0 {
            out.push(p);
            rest /= p;
        }
        p += 1;
    }
    if rest > 1 {
        out.push(rest);
    }
    out
}

impl MackeyFunctor {
    pub fn new(
        ctx: CyclicGroupCtx,
        levels: BTreeMap<u64, FgAbGroup>,
        res: BTreeMap<(u64, u64), GroupMap>,
        tr: BTreeMap<(u64, u64), GroupMap>,
        weyl: BTreeMap<u64, GroupMap>,
    ) -> Result<Self, String> {
        for &d in &ctx.divisors {
            if !levels.contains_key(&d) {
                return Err(format!("missing level at divisor {d}"));
            }
            if !weyl.contains_key(&d) {
                return Err(format!("missing Weyl action at divisor {d}"));
            }
            for p in prime_steps(d) {
                if !res.contains_key(&(d, p)) {
                    return Err(format!("missing restriction at ({d}, {p})"));
                }
                if !tr.contains_key(&(d, p)) {
                    return Err(format!("missing transfer at ({d}, {p})"));
                }
            }
        }
        for (&(d, p), map) in &res {
            if map.src.ngens != levels[&d].ngens || map.dst.ngens != levels[&(d / p)].ngens {
                return Err(format!("restriction at ({d}, {p}) has mismatched shape"));
            }
        }
        for (&(d, p), map) in &tr {
            if map.src.ngens != levels[&(d / p)].ngens || map.dst.ngens != levels[&d].ngens {
                return Err(format!("transfer at ({d}, {p}) has mismatched shape"));
            }
        }
        Ok(MackeyFunctor { ctx, levels, res, tr, weyl })
    }

    pub fn level(&self, d: u64) -> &FgAbGroup {
        self.levels.get(&d).expect("level exists for every divisor")
    }

    pub fn res_step(&self, d: u64, p: u64) -> &GroupMap {
        self.res.get(&(d, p)).expect("restriction step exists")
    }

    pub fn tr_step(&self, d: u64, p: u64) -> &GroupMap {
        self.tr.get(&(d, p)).expect("transfer step exists")
    }

    pub fn weyl_at(&self, d: u64) -> &GroupMap {
        self.weyl.get(&d).expect("weyl action exists")
    }

    /// g^k acting on level_d.
    pub fn weyl_pow(&self, d: u64, k: u64) -> GroupMap {
        let w = self.weyl_at(d);
        let mut acc = GroupMap::identity(self.level(d).clone());
        let k = k % (self.ctx.n / d).max(1);
        for _ in 0..k {
            acc = acc.compose(w);
        }
        acc
    }

    /// res^{C_d}_{C_e} for e | d, composed from prime steps.
    pub fn res_chain(&self, d: u64, e: u64) -> GroupMap {
        assert!(d % e == 0, "res chain needs e | d");
        let mut acc = GroupMap::identity(self.level(d).clone());
        let mut cur = d;
        for p in prime_steps(d / e) {
            acc = acc.compose(self.res_step(cur, p));
            cur /= p;
        }
        acc
    }

    /// tr^{C_d}_{C_e} for e | d, composed from prime steps.
    pub fn tr_chain(&self, e: u64, d: u64) -> GroupMap {
        assert!(d % e == 0, "tr chain needs e | d");
        let mut acc = GroupMap::identity(self.level(e).clone());
        let steps = prime_steps(d / e);
        let mut cur = e;
        for p in steps {
            cur *= p;
            acc = acc.compose(self.tr_step(cur, p));
        }
        acc
    }

    /// Check the four Mackey axioms (and the naturality they imply) on every
    /// level and prime step; violations are reported, not panicked.
    pub fn check_axioms(&self) -> AxiomReport {
        let mut report = AxiomReport::default();
        let n = self.ctx.n;
        let mut complain = |msg: String| report.violations.push(msg);

        for &d in &self.ctx.divisors {
            let primes: Vec<u64> = {
                let mut ps = prime_steps(d);
                ps.dedup();
                ps
            };
            // weyl has order dividing n/d
            let id = GroupMap::identity(self.level(d).clone());
            if !self.weyl_pow(d, 0).equals_induced(&id) {
                complain(format!("weyl_pow(0) is not the identity at level {d}"));
            }
            let w_full = {
                let mut acc = GroupMap::identity(self.level(d).clone());
                for _ in 0..n / d {
                    acc = acc.compose(self.weyl_at(d));
                }
                acc
            };
            if !w_full.equals_induced(&id) {
                complain(format!("axiom: weyl order does not divide {} at level {d}", n / d));
            }

            for &p in &primes {
                let res = self.res_step(d, p);
                let tr = self.tr_step(d, p);
                let w_sub = self.weyl_pow(d / p, n / d);
                // axiom 2: tr(γ·x) = tr(x) for γ generating W_{C_d}(C_{d/p})
                if !w_sub.compose(tr).equals_induced(tr) {
                    complain(format!("axiom 2 fails: transfer at ({d}, {p}) sees the Weyl action"));
                }
                // axiom 3: γ·res(x) = res(x)
                if !res.compose(&w_sub).equals_induced(res) {
                    complain(format!("axiom 3 fails: restriction at ({d}, {p}) is not Weyl-invariant"));
                }
                // axiom 4: res∘tr = Σ_{t<p} γ^t
                let mut rhs = GroupMap::zero(self.level(d / p).clone(), self.level(d / p).clone());
                for t in 0..p {
                    rhs = rhs.add(&self.weyl_pow(d / p, t * (n / d)));
                }
                if !tr.compose(res).equals_induced(&rhs) {
                    complain(format!(
                        "axiom 4 fails: res∘tr at ({d}, {p}) is not the Weyl orbit sum"
                    ));
                }
                // naturality of the g-action
                let w_d = self.weyl_at(d);
                let w_dp = self.weyl_at(d / p);
                if !w_d.compose(res).equals_induced(&res.compose(w_dp)) {
                    complain(format!("weyl does not commute with restriction at ({d}, {p})"));
                }
                if !w_dp.compose(tr).equals_induced(&tr.compose(w_d)) {
                    complain(format!("weyl does not commute with transfer at ({d}, {p})"));
                }
            }
            // axiom 1: transitivity across distinct prime steps
            for (i, &p) in primes.iter().enumerate() {
                for &q in &primes[i + 1..] {
                    if d % (p * q) != 0 {
                        continue;
                    }
                    let r1 = self.res_step(d, p).compose(self.res_step(d / p, q));
                    let r2 = self.res_step(d, q).compose(self.res_step(d / q, p));
                    if !r1.equals_induced(&r2) {
                        complain(format!("axiom 1 fails: res chains to {} differ at level {d}", d / (p * q)));
                    }
                    let t1 = self.tr_step(d / p, q).compose(self.tr_step(d, p));
                    let t2 = self.tr_step(d / q, p).compose(self.tr_step(d, q));
                    if !t1.equals_induced(&t2) {
                        complain(format!("axiom 1 fails: tr chains from {} differ at level {d}", d / (p * q)));
                    }
                    // mixed double coset: res_q ∘ tr_p factors through level d/pq
                    let lhs = self.tr_step(d, p).compose(self.res_step(d, q));
                    let rhs = self.res_step(d / p, q).compose(self.tr_step(d / q, p));
                    if !lhs.equals_induced(&rhs) {
                        complain(format!(
                            "axiom 4 fails: mixed res∘tr at level {d} for primes {p}, {q}"
                        ));
                    }
                }
            }
        }
        report
    }

    /// Replace every level by its canonical minimal presentation, conjugating
    /// all structure maps. Canonical forms and induced maps are unchanged.
    pub fn rebase_canonical(&self) -> MackeyFunctor {
        let mut to = BTreeMap::new();
        let mut from = BTreeMap::new();
        let mut levels = BTreeMap::new();
        for (&d, g) in &self.levels {
            let (canon, t, f) = g.canonicalized();
            levels.insert(d, canon);
            to.insert(d, t);
            from.insert(d, f);
        }
        let res = self
            .res
            .iter()
            .map(|(&(d, p), m)| ((d, p), from[&d].compose(m).compose(&to[&(d / p)])))
            .collect();
        let tr = self
            .tr
            .iter()
            .map(|(&(d, p), m)| ((d, p), from[&(d / p)].compose(m).compose(&to[&d])))
            .collect();
        let weyl = self
            .weyl
            .iter()
            .map(|(&d, m)| (d, from[&d].compose(m).compose(&to[&d])))
            .collect();
        MackeyFunctor { ctx: self.ctx.clone(), levels, res, tr, weyl }
    }

    /// The underlying C_e-Mackey functor: levels at divisors of e, with the
    /// Weyl action of the generator g^{n/e} of C_e.
    pub fn restrict_to_subgroup(&self, e: u64) -> MackeyFunctor {
        assert!(self.ctx.is_divisor(e), "{e} must divide {}", self.ctx.n);
        let sub = CyclicGroupCtx::new(e);
        let levels: BTreeMap<u64, FgAbGroup> =
            sub.divisors.iter().map(|&d| (d, self.level(d).clone())).collect();
        let mut res = BTreeMap::new();
        let mut tr = BTreeMap::new();
        for &d in &sub.divisors {
            for p in prime_steps(d) {
                res.insert((d, p), self.res_step(d, p).clone());
                tr.insert((d, p), self.tr_step(d, p).clone());
            }
        }
        let weyl: BTreeMap<u64, GroupMap> =
            sub.divisors.iter().map(|&d| (d, self.weyl_pow(d, self.ctx.n / e))).collect();
        MackeyFunctor { ctx: sub, levels, res, tr, weyl }
    }

    /// Levelwise canonical forms, for quick comparison and display.
    pub fn canonical_levels(&self) -> BTreeMap<u64, exactlin::CanonicalForm> {
        self.levels.iter().map(|(&d, g)| (d, g.canonical())).collect()
    }
}

/// A morphism of Mackey functors: one map per level, commuting with res, tr,
/// and the Weyl action (verified at construction).
#[derive(Clone, Debug)]
pub struct MackeyMap {
    pub maps: BTreeMap<u64, GroupMap>,
}

impl MackeyMap {
    pub fn new(
        src: &MackeyFunctor,
        dst: &MackeyFunctor,
        maps: BTreeMap<u64, GroupMap>,
    ) -> Result<Self, String> {
        for &d in &src.ctx.divisors {
            let phi = maps.get(&d).ok_or_else(|| format!("missing component at level {d}"))?;
            if phi.src.ngens != src.level(d).ngens || phi.dst.ngens != dst.level(d).ngens {
                return Err(format!("component at level {d} has mismatched shape"));
            }
            let w_sq = src.weyl_at(d).compose(phi);
            let w_sq2 = phi.compose(dst.weyl_at(d));
            if !w_sq.equals_induced(&w_sq2) {
                return Err(format!("does not commute with the Weyl action at level {d}"));
            }
            for p in prime_steps(d) {
                let lhs = src.res_step(d, p).compose(&maps[&(d / p)]);
                let rhs = phi.compose(dst.res_step(d, p));
                if !lhs.equals_induced(&rhs) {
                    return Err(format!("does not commute with restriction at ({d}, {p})"));
                }
                let lhs = src.tr_step(d, p).compose(phi);
                let rhs = maps[&(d / p)].compose(dst.tr_step(d, p));
                if !lhs.equals_induced(&rhs) {
                    return Err(format!("does not commute with transfer at ({d}, {p})"));
                }
            }
        }
        Ok(MackeyMap { maps })
    }

    pub fn level(&self, d: u64) -> &GroupMap {
        self.maps.get(&d).expect("component exists")
    }

    pub fn is_isomorphism(&self) -> bool {
        self.maps.values().all(|m| m.is_isomorphism())
    }
}

/// Exactness of M -f-> N -g-> P at N, levelwise: ker(g_d) = im(f_d).
pub fn exact_at(f: &MackeyMap, g: &MackeyMap) -> bool {
    f.maps.keys().all(|d| {
        let fd = &f.maps[d];
        let gd = &g.maps[d];
        if !fd.composes_to_zero(gd) {
            return false;
        }
        let mid_rels = &fd.dst.rels;
        let image_span = fd.mat.vstack(mid_rels);
        let kernel_span = gd.kernel_gens();
        (0..kernel_span.rows)
            .all(|i| exactlin::in_row_space(&image_span, &kernel_span.row(i)))
    })
}

/// Matrix rendered compactly for diagram labels: rows separated by ';'.
pub fn mat_label(m: &Mat) -> String {
    if m.rows == 0 || m.cols == 0 {
        return "0".into();
    }
    let rows: Vec<String> = (0..m.rows)
        .map(|i| {
            let cells: Vec<String> = m.row(i).iter().map(|v| v.to_string()).collect();
            cells.join(",")
        })
        .collect();
    format!("[{}]", rows.join("; "))
}
