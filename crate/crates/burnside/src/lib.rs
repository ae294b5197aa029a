//! Burnside rings A(C_d) for the subgroups C_d of a fixed cyclic group C_n.
//!
//! Subgroups are identified with divisors of n throughout; this is the only
//! subgroup dictionary in the workspace. Elements are stored in the orbit
//! basis {[C_d/C_e] : e | d}, ascending in e, which makes transfer a
//! coordinate reindexing and keeps multiplication integral by construction.
//! Marks are the verification oracle: a ring monomorphism to a product of Z's.

use exactlin::{FgAbGroup, Mat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicGroupCtx {
    pub n: u64,
    pub divisors: Vec<u64>,
    pub factorization: Vec<(u64, u32)>,
}

impl CyclicGroupCtx {
    pub fn new(n: u64) -> Self {
        assert!(n >= 1, "group order must be positive");
        let mut divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
        divisors.sort_unstable();
        let mut factorization = Vec::new();
        let mut rest = n;
        let mut p = 2;
        while p * p <= rest {
            if rest % p == 0 {
                let mut e = 0;
                while rest % p == 0 {
                    rest /= p;
                    e += 1;
                }
                factorization.push((p, e));
            }
            p += 1;
        }
        if rest > 1 {
            factorization.push((rest, 1));
        }
        CyclicGroupCtx { n, divisors, factorization }
    }

    pub fn is_divisor(&self, d: u64) -> bool {
        d >= 1 && self.n % d == 0
    }

    pub fn check_divisor(&self, d: u64) -> Result<(), String> {
        if self.is_divisor(d) {
            Ok(())
        } else {
            Err(format!("{d} is not a divisor of {}", self.n))
        }
    }

    /// Divisors of d (requires d | n), ascending: the basis index set of A(C_d).
    pub fn divisors_of(&self, d: u64) -> Vec<u64> {
        assert!(self.is_divisor(d), "{d} is not a divisor of {}", self.n);
        self.divisors.iter().copied().filter(|e| d % e == 0).collect()
    }

    pub fn primes(&self) -> Vec<u64> {
        self.factorization.iter().map(|&(p, _)| p).collect()
    }

    /// Z-rank of A(C_n): the number of divisors, i.e. Π(n_i + 1).
    pub fn rank_full(&self) -> usize {
        self.divisors.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurnsideElement {
    /// Which Burnside ring this lives in: A(C_group).
    pub group: u64,
    /// Coefficients over the orbit basis [C_group/C_e], e | group ascending.
    pub coords: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    group: u64,
    coords: BTreeMap<u64, i64>,
}

impl BurnsideElement {
    pub fn zero(ctx: &CyclicGroupCtx, group: u64) -> Self {
        let len = ctx.divisors_of(group).len();
        BurnsideElement { group, coords: vec![BigInt::zero(); len] }
    }

    /// The unit [C_d/C_d].
    pub fn one(ctx: &CyclicGroupCtx, group: u64) -> Self {
        Self::basis(ctx, group, group)
    }

    /// The orbit basis element [C_group/C_e].
    pub fn basis(ctx: &CyclicGroupCtx, group: u64, e: u64) -> Self {
        let mut z = Self::zero(ctx, group);
        let idx = z.index_of(ctx, e);
        z.coords[idx] = BigInt::one();
        z
    }

    /// α_s = the orbit of size s, i.e. [C_group/C_{group/s}].
    pub fn alpha(ctx: &CyclicGroupCtx, group: u64, size: u64) -> Self {
        assert!(group % size == 0, "no orbit of size {size} in C_{group}");
        Self::basis(ctx, group, group / size)
    }

    fn index_of(&self, ctx: &CyclicGroupCtx, e: u64) -> usize {
        ctx.divisors_of(self.group)
            .iter()
            .position(|&x| x == e)
            .unwrap_or_else(|| panic!("{e} is not a subgroup divisor of {}", self.group))
    }

    pub fn coeff(&self, ctx: &CyclicGroupCtx, e: u64) -> BigInt {
        self.coords[self.index_of(ctx, e)].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.group, other.group);
        BurnsideElement {
            group: self.group,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.group, other.group);
        BurnsideElement {
            group: self.group,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        BurnsideElement { group: self.group, coords: self.coords.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        BurnsideElement { group: self.group, coords: self.coords.iter().map(|a| a * c).collect() }
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        self.scale(&BigInt::from(c))
    }

    /// Bilinear extension of
    /// [C_d/C_a]·[C_d/C_b] = (d·gcd(a,b)/(a·b)) [C_d/C_{gcd(a,b)}].
    pub fn multiply(&self, ctx: &CyclicGroupCtx, other: &Self) -> Result<Self, String> {
        if self.group != other.group {
            return Err(format!(
                "cannot multiply elements of A(C_{}) and A(C_{})",
                self.group, other.group
            ));
        }
        let d = self.group;
        let divs = ctx.divisors_of(d);
        let mut out = Self::zero(ctx, d);
        for (i, &a) in divs.iter().enumerate() {
            if self.coords[i].is_zero() {
                continue;
            }
            for (j, &b) in divs.iter().enumerate() {
                if other.coords[j].is_zero() {
                    continue;
                }
                let g = a.gcd(&b);
                let coeff = d * g / (a * b);
                let idx = divs.iter().position(|&x| x == g).unwrap();
                let term = &self.coords[i] * &other.coords[j] * BigInt::from(coeff);
                out.coords[idx] += term;
            }
        }
        Ok(out)
    }

    /// Fixed-point counts: mark of [C_d/C_e] at C_f is d/e when f | e, else 0.
    /// Indexed by divisors of `group`, ascending.
    pub fn marks(&self, ctx: &CyclicGroupCtx) -> Vec<BigInt> {
        let d = self.group;
        let divs = ctx.divisors_of(d);
        divs.iter()
            .map(|&f| {
                let mut acc = BigInt::zero();
                for (i, &e) in divs.iter().enumerate() {
                    if e % f == 0 {
                        acc += &self.coords[i] * BigInt::from(d / e);
                    }
                }
                acc
            })
            .collect()
    }

    /// res^{C_d}_{C_e}: [C_d/C_k] ↦ ((d/k)·gcd(e,k)/e)·[C_e/C_{gcd(e,k)}].
    pub fn restrict(&self, ctx: &CyclicGroupCtx, to: u64) -> Result<Self, String> {
        let d = self.group;
        if !ctx.is_divisor(to) || d % to != 0 {
            return Err(format!("C_{to} is not a subgroup of C_{d}"));
        }
        let divs = ctx.divisors_of(d);
        let mut out = Self::zero(ctx, to);
        let to_divs = ctx.divisors_of(to);
        for (i, &k) in divs.iter().enumerate() {
            if self.coords[i].is_zero() {
                continue;
            }
            let g = to.gcd(&k);
            let coeff = (d / k) * g / to;
            let idx = to_divs.iter().position(|&x| x == g).unwrap();
            out.coords[idx] += &self.coords[i] * BigInt::from(coeff);
        }
        Ok(out)
    }

    /// tr^{C_d}_{C_e}: [C_e/C_k] ↦ [C_d/C_k] (induction of orbits).
    pub fn transfer(&self, ctx: &CyclicGroupCtx, to: u64) -> Result<Self, String> {
        let e = self.group;
        if !ctx.is_divisor(to) || to % e != 0 {
            return Err(format!("C_{e} is not a subgroup of C_{to}"));
        }
        let mut out = Self::zero(ctx, to);
        let to_divs = ctx.divisors_of(to);
        for (i, &k) in ctx.divisors_of(e).iter().enumerate() {
            if self.coords[i].is_zero() {
                continue;
            }
            let idx = to_divs.iter().position(|&x| x == k).unwrap();
            out.coords[idx] += &self.coords[i];
        }
        Ok(out)
    }

    pub fn to_json(&self, ctx: &CyclicGroupCtx) -> String {
        let divs = ctx.divisors_of(self.group);
        let coords: BTreeMap<u64, i64> = divs
            .iter()
            .zip(&self.coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(&e, c)| (e, i64::try_from(c).expect("coefficient does not fit in JSON integer")))
            .collect();
        serde_json::to_string(&ElementJson { group: self.group, coords }).unwrap()
    }

    pub fn from_json(ctx: &CyclicGroupCtx, s: &str) -> Result<Self, String> {
        let parsed: ElementJson = serde_json::from_str(s).map_err(|e| e.to_string())?;
        ctx.check_divisor(parsed.group)?;
        let mut out = Self::zero(ctx, parsed.group);
        for (e, c) in parsed.coords {
            if parsed.group % e != 0 {
                return Err(format!("{e} is not a subgroup divisor of {}", parsed.group));
            }
            let idx = out.index_of(ctx, e);
            out.coords[idx] = BigInt::from(c);
        }
        Ok(out)
    }

    /// Pretty form like "2[C12/C2] - [C12/C12]".
    pub fn display(&self, ctx: &CyclicGroupCtx) -> String {
        let divs = ctx.divisors_of(self.group);
        let mut out = String::new();
        for (i, &e) in divs.iter().enumerate() {
            let c = &self.coords[i];
            if c.is_zero() {
                continue;
            }
            let negative = c < &BigInt::zero();
            let abs = if negative { -c } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if !abs.is_one() {
                out.push_str(&abs.to_string());
            }
            out.push_str(&format!("[C{}/C{}]", self.group, e));
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

/// Matrix of marks for A(C_d): row e (basis orbit), column f (subgroup).
pub fn mark_table(ctx: &CyclicGroupCtx, d: u64) -> Mat {
    let divs = ctx.divisors_of(d);
    Mat::from_fn(divs.len(), divs.len(), |i, j| {
        let (e, f) = (divs[i], divs[j]);
        if e % f == 0 {
            BigInt::from(d / e)
        } else {
            BigInt::zero()
        }
    })
}

/// Recover an element from its mark vector, when one exists.
pub fn element_from_marks(
    ctx: &CyclicGroupCtx,
    d: u64,
    marks: &[BigInt],
) -> Option<BurnsideElement> {
    let t = mark_table(ctx, d);
    exactlin::solve_left(&t, marks).map(|coords| BurnsideElement { group: d, coords })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealKind {
    /// I_{tr,H}: the span of tr^G_H(A(H)), an ideal of A(G).
    Transfer,
    /// I_{res,H}: the kernel of res^G_H.
    ResKernel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BurnsideIdeal {
    pub kind: IdealKind,
    pub subgroup: u64,
}

/// An ideal materialized as a saturated sublattice of the coordinate lattice
/// of A(C_n), with a natural generator list.
#[derive(Clone, Debug)]
pub struct IdealPresentation {
    pub generators: Vec<BurnsideElement>,
    /// Rows form a basis of the ideal as a sublattice of Z^{rank A(G)}.
    pub basis: Mat,
    /// The ideal as an abstract group (free of rank = basis.rows).
    pub group: FgAbGroup,
}

pub fn ideal_presentation(ctx: &CyclicGroupCtx, ideal: BurnsideIdeal) -> IdealPresentation {
    assert!(ctx.is_divisor(ideal.subgroup), "subgroup must be a divisor of n");
    let n = ctx.n;
    let h = ideal.subgroup;
    let rank = ctx.rank_full();
    match ideal.kind {
        IdealKind::Transfer => {
            // spanned by the orbits [G/C_k] for k | h; already saturated
            let generators: Vec<BurnsideElement> = ctx
                .divisors_of(h)
                .into_iter()
                .map(|k| BurnsideElement::basis(ctx, n, k))
                .collect();
            let mut gen_mat = Mat::zero(0, rank);
            for g in &generators {
                gen_mat.push_row(&g.coords);
            }
            let basis = exactlin::row_space_basis(&gen_mat);
            let group = FgAbGroup::free(basis.rows);
            IdealPresentation { generators, basis, group }
        }
        IdealKind::ResKernel => {
            // kernel of the restriction matrix A(G) -> A(C_h)
            let divs = ctx.divisors_of(n);
            let h_rank = ctx.divisors_of(h).len();
            let mut res_mat = Mat::zero(rank, h_rank);
            for (i, &k) in divs.iter().enumerate() {
                let e = BurnsideElement::basis(ctx, n, k).restrict(ctx, h).unwrap();
                res_mat.set_row(i, &e.coords);
            }
            let basis = exactlin::kernel_basis(&res_mat);
            let generators: Vec<BurnsideElement> = (0..basis.rows)
                .map(|i| BurnsideElement { group: n, coords: basis.row(i) })
                .collect();
            let group = FgAbGroup::free(basis.rows);
            IdealPresentation { generators, basis, group }
        }
    }
}

/// Presentation of A(C_d)/(ideal generated by `gens`) as an abelian group:
/// relations are all products gen·basis-orbit, i.e. the ideal's lattice.
pub fn quotient_by_ideal_gens(
    ctx: &CyclicGroupCtx,
    d: u64,
    gens: &[BurnsideElement],
) -> FgAbGroup {
    let divs = ctx.divisors_of(d);
    let mut rels = Mat::zero(0, divs.len());
    for g in gens {
        assert_eq!(g.group, d, "generator lives in the wrong ring");
        for &e in &divs {
            let prod = g.multiply(ctx, &BurnsideElement::basis(ctx, d, e)).unwrap();
            rels.push_row(&prod.coords);
        }
    }
    FgAbGroup::new(divs.len(), rels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_p_squares_to_p_alpha_p() {
        let ctx = CyclicGroupCtx::new(5);
        let a = BurnsideElement::alpha(&ctx, 5, 5); // [C_5/e]
        let sq = a.multiply(&ctx, &a).unwrap();
        assert_eq!(sq, a.scale_i64(5));
    }

    #[test]
    fn unit_is_multiplicative_identity() {
        let ctx = CyclicGroupCtx::new(12);
        let one = BurnsideElement::one(&ctx, 12);
        for &e in &ctx.divisors_of(12) {
            let b = BurnsideElement::basis(&ctx, 12, e);
            assert_eq!(one.multiply(&ctx, &b).unwrap(), b);
        }
    }

    #[test]
    fn c12_product_of_index_orbits() {
        let ctx = CyclicGroupCtx::new(12);
        let x = BurnsideElement::basis(&ctx, 12, 2);
        let y = BurnsideElement::basis(&ctx, 12, 3);
        let p = x.multiply(&ctx, &y).unwrap();
        assert_eq!(p, BurnsideElement::basis(&ctx, 12, 1).scale_i64(2));
    }

    #[test]
    fn marks_of_basic_orbits() {
        let ctx = CyclicGroupCtx::new(5);
        let a = BurnsideElement::basis(&ctx, 5, 1);
        assert_eq!(a.marks(&ctx), vec![BigInt::from(5), BigInt::zero()]);
        let one = BurnsideElement::one(&ctx, 5);
        assert_eq!(one.marks(&ctx), vec![BigInt::from(1), BigInt::from(1)]);

        let ctx9 = CyclicGroupCtx::new(9);
        let free_orbit = BurnsideElement::basis(&ctx9, 9, 1);
        assert_eq!(
            free_orbit.marks(&ctx9),
            vec![BigInt::from(9), BigInt::zero(), BigInt::zero()]
        );
    }

    #[test]
    fn restriction_examples() {
        let ctx = CyclicGroupCtx::new(15);
        // res^{C_15}_{C_3}(α_5), α_5 = [C_15/C_3]: coefficient 5·3/3 = 5 times unit
        let a5 = BurnsideElement::alpha(&ctx, 15, 5);
        let r = a5.restrict(&ctx, 3).unwrap();
        assert_eq!(r, BurnsideElement::one(&ctx, 3).scale_i64(5));

        let ctx8 = CyclicGroupCtx::new(8);
        let t = BurnsideElement::one(&ctx8, 1).transfer(&ctx8, 8).unwrap();
        let r = t.restrict(&ctx8, 2).unwrap();
        assert_eq!(r, BurnsideElement::basis(&ctx8, 2, 1).scale_i64(4));

        // restriction to the full group is the identity
        let ctx12 = CyclicGroupCtx::new(12);
        for &e in &ctx12.divisors_of(12) {
            let b = BurnsideElement::basis(&ctx12, 12, e);
            assert_eq!(b.restrict(&ctx12, 12).unwrap(), b);
        }
    }

    #[test]
    fn transfer_of_unit_is_free_orbit() {
        let ctx = CyclicGroupCtx::new(7);
        let t = BurnsideElement::one(&ctx, 1).transfer(&ctx, 7).unwrap();
        assert_eq!(t, BurnsideElement::alpha(&ctx, 7, 7));
    }

    #[test]
    fn error_on_mismatched_groups() {
        let ctx = CyclicGroupCtx::new(6);
        let x = BurnsideElement::one(&ctx, 2);
        let y = BurnsideElement::one(&ctx, 3);
        assert!(x.multiply(&ctx, &y).is_err());
        assert!(x.restrict(&ctx, 3).is_err());
        assert!(y.transfer(&ctx, 2).is_err());
    }

    #[test]
    fn ideal_res_kernel_square_free() {
        // I_{res, C_{n/p}} over square-free n is generated by α_p - p
        let ctx = CyclicGroupCtx::new(15);
        for p in [3u64, 5] {
            let pres = ideal_presentation(
                &ctx,
                BurnsideIdeal { kind: IdealKind::ResKernel, subgroup: 15 / p },
            );
            let gen = BurnsideElement::alpha(&ctx, 15, p)
                .sub(&BurnsideElement::one(&ctx, 15).scale_i64(p as i64));
            assert!(exactlin::in_row_space(&pres.basis, &gen.coords));
            assert_eq!(pres.basis.rows, 2, "kernel rank over C_15 for index {p}");
            // and conversely every kernel generator restricts to zero
            for g in &pres.generators {
                assert!(g.restrict(&ctx, 15 / p).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn ideal_res_kernel_cp2_rank() {
        let ctx = CyclicGroupCtx::new(9);
        let pres =
            ideal_presentation(&ctx, BurnsideIdeal { kind: IdealKind::ResKernel, subgroup: 1 });
        assert_eq!(pres.basis.rows, 2);
    }

    #[test]
    fn ideal_transfer_full_group_is_everything() {
        let ctx = CyclicGroupCtx::new(12);
        let pres =
            ideal_presentation(&ctx, BurnsideIdeal { kind: IdealKind::Transfer, subgroup: 12 });
        assert_eq!(pres.basis.rows, ctx.rank_full());
    }

    #[test]
    fn quotient_by_transfer_ideal_of_cp() {
        // A(C_p)/(α_p) = Z
        let ctx = CyclicGroupCtx::new(3);
        let q = quotient_by_ideal_gens(&ctx, 3, &[BurnsideElement::alpha(&ctx, 3, 3)]);
        let c = q.canonical();
        assert_eq!(c.free_rank, 1);
        assert!(c.torsion.is_empty());
    }

    #[test]
    fn json_round_trip() {
        let ctx = CyclicGroupCtx::new(12);
        let x = BurnsideElement::basis(&ctx, 12, 2)
            .scale_i64(2)
            .sub(&BurnsideElement::one(&ctx, 12));
        let s = x.to_json(&ctx);
        assert_eq!(s, r#"{"group":12,"coords":{"2":2,"12":-1}}"#);
        let y = BurnsideElement::from_json(&ctx, &s).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn element_from_marks_inverts() {
        let ctx = CyclicGroupCtx::new(12);
        let x = BurnsideElement::basis(&ctx, 12, 4).scale_i64(3)
            .add(&BurnsideElement::basis(&ctx, 12, 6));
        let m = x.marks(&ctx);
        assert_eq!(element_from_marks(&ctx, 12, &m).unwrap(), x);
    }
}
