//! Ring-level invariants of A(C_d), checked exhaustively for small orders and
//! against brute-force orbit decompositions that never touch the gcd formulas.

use burnside::{
    element_from_marks, ideal_presentation, mark_table, BurnsideElement, BurnsideIdeal,
    CyclicGroupCtx, IdealKind,
};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

/// Decompose C_d/C_k as a C_e-set by walking orbits of g^{d/e} on coset
/// representatives {0, ..., d/k - 1}.
fn restriction_by_orbit_walk(ctx: &CyclicGroupCtx, d: u64, k: u64, e: u64) -> BurnsideElement {
    let size = (d / k) as usize;
    let step = (d / e) as usize;
    let mut seen = vec![false; size];
    let mut out = BurnsideElement::zero(ctx, e);
    for start in 0..size {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut x = start;
        loop {
            seen[x] = true;
            len += 1;
            x = (x + step) % size;
            if x == start {
                break;
            }
        }
        // an orbit of length L is C_e/C_{e/L}
        let stab = e / len;
        out = out.add(&BurnsideElement::basis(ctx, e, stab));
    }
    out
}

/// Decompose C_d/C_a x C_d/C_b into C_d-orbits by walking pairs under the
/// diagonal translation action.
fn product_by_orbit_walk(ctx: &CyclicGroupCtx, d: u64, a: u64, b: u64) -> BurnsideElement {
    let sa = (d / a) as usize;
    let sb = (d / b) as usize;
    let mut seen = vec![false; sa * sb];
    let mut out = BurnsideElement::zero(ctx, d);
    for start in 0..sa * sb {
        if seen[start] {
            continue;
        }
        let (mut x, mut y) = (start / sb, start % sb);
        let mut len = 0u64;
        loop {
            seen[x * sb + y] = true;
            len += 1;
            x = (x + 1) % sa;
            y = (y + 1) % sb;
            if x * sb + y == start {
                break;
            }
        }
        let stab = d / len;
        out = out.add(&BurnsideElement::basis(ctx, d, stab));
    }
    out
}

#[test]
fn multiplication_matches_orbit_decomposition() {
    for n in 1..=36u64 {
        let ctx = CyclicGroupCtx::new(n);
        for &d in &ctx.divisors.clone() {
            let divs = ctx.divisors_of(d);
            for &a in &divs {
                for &b in &divs {
                    let x = BurnsideElement::basis(&ctx, d, a);
                    let y = BurnsideElement::basis(&ctx, d, b);
                    let formula = x.multiply(&ctx, &y).unwrap();
                    let walked = product_by_orbit_walk(&ctx, d, a, b);
                    assert_eq!(formula, walked, "n={n} d={d} a={a} b={b}");
                }
            }
        }
    }
}

#[test]
fn restriction_matches_orbit_decomposition() {
    for n in 1..=36u64 {
        let ctx = CyclicGroupCtx::new(n);
        for &d in &ctx.divisors.clone() {
            for &k in &ctx.divisors_of(d) {
                for &e in &ctx.divisors_of(d) {
                    let x = BurnsideElement::basis(&ctx, d, k);
                    let formula = x.restrict(&ctx, e).unwrap();
                    let walked = restriction_by_orbit_walk(&ctx, d, k, e);
                    assert_eq!(formula, walked, "n={n} d={d} k={k} e={e}");
                }
            }
        }
    }
}

#[test]
fn marks_are_a_ring_monomorphism() {
    for n in 1..=36u64 {
        let ctx = CyclicGroupCtx::new(n);
        for &d in &ctx.divisors.clone() {
            let divs = ctx.divisors_of(d);
            // injectivity: the mark table has full rank
            let t = mark_table(&ctx, d);
            assert_eq!(exactlin::row_space_basis(&t).rows, divs.len());
            // multiplicativity on all basis pairs
            for &a in &divs {
                for &b in &divs {
                    let x = BurnsideElement::basis(&ctx, d, a);
                    let y = BurnsideElement::basis(&ctx, d, b);
                    let lhs = x.multiply(&ctx, &y).unwrap().marks(&ctx);
                    let rhs: Vec<BigInt> = x
                        .marks(&ctx)
                        .iter()
                        .zip(y.marks(&ctx))
                        .map(|(u, v)| u * v)
                        .collect();
                    assert_eq!(lhs, rhs, "n={n} d={d} a={a} b={b}");
                }
            }
        }
    }
}

#[test]
fn frobenius_reciprocity() {
    // tr(x · res(y)) = tr(x) · y for all basis pairs over all chains e | d | n
    for n in 1..=36u64 {
        let ctx = CyclicGroupCtx::new(n);
        for &d in &ctx.divisors.clone() {
            for &e in &ctx.divisors_of(d) {
                for &k in &ctx.divisors_of(e) {
                    for &l in &ctx.divisors_of(d) {
                        let x = BurnsideElement::basis(&ctx, e, k);
                        let y = BurnsideElement::basis(&ctx, d, l);
                        let lhs = x
                            .multiply(&ctx, &y.restrict(&ctx, e).unwrap())
                            .unwrap()
                            .transfer(&ctx, d)
                            .unwrap();
                        let rhs = x.transfer(&ctx, d).unwrap().multiply(&ctx, &y).unwrap();
                        assert_eq!(lhs, rhs, "n={n} d={d} e={e} k={k} l={l}");
                    }
                }
            }
        }
    }
}

#[test]
fn restriction_and_transfer_are_transitive() {
    for n in 1..=36u64 {
        let ctx = CyclicGroupCtx::new(n);
        for &d in &ctx.divisors.clone() {
            for &f in &ctx.divisors_of(d) {
                for &e in &ctx.divisors_of(f) {
                    for &k in &ctx.divisors_of(d) {
                        let x = BurnsideElement::basis(&ctx, d, k);
                        let two_step =
                            x.restrict(&ctx, f).unwrap().restrict(&ctx, e).unwrap();
                        assert_eq!(two_step, x.restrict(&ctx, e).unwrap());
                    }
                    for &k in &ctx.divisors_of(e) {
                        let x = BurnsideElement::basis(&ctx, e, k);
                        let two_step =
                            x.transfer(&ctx, f).unwrap().transfer(&ctx, d).unwrap();
                        assert_eq!(two_step, x.transfer(&ctx, d).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn rank_is_product_of_exponents_plus_one() {
    for n in 1..=36u64 {
        let ctx = CyclicGroupCtx::new(n);
        let expected: usize = ctx.factorization.iter().map(|&(_, e)| e as usize + 1).product();
        assert_eq!(ctx.rank_full(), expected);
    }
}

#[test]
fn res_kernel_generators_for_prime_power_and_square_free() {
    // For prime-power and square-free n, the kernel of res to C_h is generated
    // by {α_d - d : d | n/h} as an ideal.
    for n in [4u64, 8, 9, 27, 16, 25, 6, 10, 15, 30] {
        let ctx = CyclicGroupCtx::new(n);
        for &h in &ctx.divisors.clone() {
            let pres =
                ideal_presentation(&ctx, BurnsideIdeal { kind: IdealKind::ResKernel, subgroup: h });
            // collect the ideal generated by the claimed generators
            let index = n / h;
            let mut span = exactlin::Mat::zero(0, ctx.rank_full());
            for &d in &ctx.divisors_of(index) {
                if d == 1 {
                    continue;
                }
                let gen = BurnsideElement::alpha(&ctx, n, d)
                    .sub(&BurnsideElement::one(&ctx, n).scale_i64(d as i64));
                for &e in &ctx.divisors_of(n) {
                    let prod =
                        gen.multiply(&ctx, &BurnsideElement::basis(&ctx, n, e)).unwrap();
                    span.push_row(&prod.coords);
                }
            }
            let claimed = exactlin::row_space_basis(&span);
            assert_eq!(claimed.rows, pres.basis.rows, "n={n} h={h}: rank mismatch");
            for i in 0..claimed.rows {
                assert!(
                    exactlin::in_row_space(&pres.basis, &claimed.row(i)),
                    "n={n} h={h}: claimed generator escapes the kernel"
                );
            }
            for i in 0..pres.basis.rows {
                assert!(
                    exactlin::in_row_space(&claimed, &pres.basis.row(i)),
                    "n={n} h={h}: kernel element not generated"
                );
            }
        }
    }
}

#[test]
fn transfer_ideal_is_an_ideal() {
    for n in [12u64, 18, 30, 36] {
        let ctx = CyclicGroupCtx::new(n);
        for &h in &ctx.divisors.clone() {
            let pres =
                ideal_presentation(&ctx, BurnsideIdeal { kind: IdealKind::Transfer, subgroup: h });
            for g in &pres.generators {
                for &e in &ctx.divisors_of(n) {
                    let prod = g.multiply(&ctx, &BurnsideElement::basis(&ctx, n, e)).unwrap();
                    assert!(exactlin::in_row_space(&pres.basis, &prod.coords));
                }
            }
        }
    }
}

fn arb_element(n: u64, d: u64) -> impl Strategy<Value = BurnsideElement> {
    let ctx = CyclicGroupCtx::new(n);
    let len = ctx.divisors_of(d).len();
    proptest::collection::vec(-6i64..=6, len).prop_map(move |v| BurnsideElement {
        group: d,
        coords: v.into_iter().map(BigInt::from).collect(),
    })
}

fn arb_order_and_divisor() -> impl Strategy<Value = (u64, u64)> {
    (1u64..=24).prop_flat_map(|n| {
        let ctx = CyclicGroupCtx::new(n);
        let divs = ctx.divisors;
        (Just(n), proptest::sample::select(divs))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms_hold((n, d) in arb_order_and_divisor(),
                        seed in any::<u64>()) {
        let ctx = CyclicGroupCtx::new(n);
        // derive three elements from the seed deterministically
        let len = ctx.divisors_of(d).len();
        let mut s = seed;
        let mut next = || { s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); (s >> 33) as i64 % 7 - 3 };
        let mk = |coords: Vec<i64>| BurnsideElement { group: d, coords: coords.into_iter().map(BigInt::from).collect() };
        let x = mk((0..len).map(|_| next()).collect());
        let y = mk((0..len).map(|_| next()).collect());
        let z = mk((0..len).map(|_| next()).collect());

        let xy = x.multiply(&ctx, &y).unwrap();
        let yx = y.multiply(&ctx, &x).unwrap();
        prop_assert_eq!(&xy, &yx);
        let assoc_l = xy.multiply(&ctx, &z).unwrap();
        let assoc_r = x.multiply(&ctx, &y.multiply(&ctx, &z).unwrap()).unwrap();
        prop_assert_eq!(assoc_l, assoc_r);
        let dist_l = x.multiply(&ctx, &y.add(&z)).unwrap();
        let dist_r = xy.add(&x.multiply(&ctx, &z).unwrap());
        prop_assert_eq!(dist_l, dist_r);
    }

    #[test]
    fn marks_respect_products((n, d) in arb_order_and_divisor(), seed in any::<u64>()) {
        let ctx = CyclicGroupCtx::new(n);
        let len = ctx.divisors_of(d).len();
        let mut s = seed;
        let mut next = || { s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); (s >> 33) as i64 % 9 - 4 };
        let mk = |coords: Vec<i64>| BurnsideElement { group: d, coords: coords.into_iter().map(BigInt::from).collect() };
        let x = mk((0..len).map(|_| next()).collect());
        let y = mk((0..len).map(|_| next()).collect());
        let lhs = x.multiply(&ctx, &y).unwrap().marks(&ctx);
        let rhs: Vec<BigInt> = x.marks(&ctx).iter().zip(y.marks(&ctx)).map(|(u, v)| u * v).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn restriction_is_a_ring_map(x in arb_element(12, 12), y in arb_element(12, 12)) {
        let ctx = CyclicGroupCtx::new(12);
        for &e in &ctx.divisors_of(12) {
            let lhs = x.multiply(&ctx, &y).unwrap().restrict(&ctx, e).unwrap();
            let rhs = x.restrict(&ctx, e).unwrap()
                .multiply(&ctx, &y.restrict(&ctx, e).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            let one_res = BurnsideElement::one(&ctx, 12).restrict(&ctx, e).unwrap();
            prop_assert_eq!(one_res, BurnsideElement::one(&ctx, e));
        }
    }

    #[test]
    fn marks_recover_elements(x in arb_element(18, 18)) {
        let ctx = CyclicGroupCtx::new(18);
        let m = x.marks(&ctx);
        let back = element_from_marks(&ctx, 18, &m).unwrap();
        // zero marks only for the zero element
        if m.iter().all(|v| v.is_zero()) {
            prop_assert!(x.is_zero());
        }
        prop_assert_eq!(back, x);
    }
}
