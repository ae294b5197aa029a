//! The real representation ring RO(C_n).
//!
//! A virtual representation is written in terms of the trivial line, the sign
//! line σ (n even), and the rotation planes λ^s. Canonical form: exponents are
//! reduced mod n, λ^s is identified with λ^{n-s}, λ^0 contributes two trivial
//! dimensions, and λ^{n/2} = σ + σ so excess sign lines are folded into the
//! n/2 slot leaving the stored σ-count in {0, 1}.

use burnside::CyclicGroupCtx;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ROElement {
    pub ctx: CyclicGroupCtx,
    /// Multiplicity of the trivial one-dimensional summand.
    pub trivial: i64,
    /// Multiplicity of σ after canonicalization: 0 or 1, and 0 for odd n.
    pub sigma: i64,
    /// Multiplicities c_s of λ^s for 1 ≤ s ≤ n/2 (n even) or (n-1)/2 (n odd).
    pub lambda: BTreeMap<u64, i64>,
}

/// Fixed-point dimensions |α^{C_d}|, indexed by the divisors of n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedDimVector {
    pub n: u64,
    pub dims: BTreeMap<u64, i64>,
}

impl FixedDimVector {
    pub fn at(&self, d: u64) -> i64 {
        *self.dims.get(&d).expect("not a divisor")
    }

    pub fn is_zero(&self) -> bool {
        self.dims.values().all(|&v| v == 0)
    }
}

impl fmt::Display for FixedDimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.dims.iter().map(|(d, v)| format!("C{d}: {v}")).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct ROJson {
    n: u64,
    #[serde(default)]
    trivial: i64,
    #[serde(default)]
    sigma: i64,
    #[serde(default)]
    lambda: BTreeMap<u64, i64>,
}

impl ROElement {
    pub fn zero(ctx: &CyclicGroupCtx) -> Self {
        ROElement { ctx: ctx.clone(), trivial: 0, sigma: 0, lambda: BTreeMap::new() }
    }

    /// Build from raw data: `sigma_count` sign lines and arbitrary-exponent
    /// rotation planes. Exponents are reduced into canonical range here.
    pub fn new(
        ctx: &CyclicGroupCtx,
        trivial: i64,
        sigma_count: i64,
        lambda_raw: &[(i64, i64)],
    ) -> Result<Self, String> {
        let n = ctx.n;
        if sigma_count != 0 && n % 2 != 0 {
            return Err(format!("σ does not exist for odd n = {n}"));
        }
        let mut out = Self::zero(ctx);
        out.trivial = trivial;
        let mut sig = sigma_count;
        for &(s_raw, c) in lambda_raw {
            if c == 0 {
                continue;
            }
            let s = (s_raw.rem_euclid(n as i64)) as u64;
            if s == 0 {
                out.trivial += 2 * c;
            } else if n % 2 == 0 && s == n / 2 {
                sig += 2 * c;
            } else {
                let folded = s.min(n - s);
                *out.lambda.entry(folded).or_insert(0) += c;
            }
        }
        if n % 2 == 0 {
            let eps = sig.rem_euclid(2);
            let pairs = (sig - eps) / 2;
            out.sigma = eps;
            if pairs != 0 {
                *out.lambda.entry(n / 2).or_insert(0) += pairs;
            }
        } else {
            debug_assert_eq!(sig, 0);
        }
        out.lambda.retain(|_, c| *c != 0);
        Ok(out)
    }

    pub fn trivial_rep(ctx: &CyclicGroupCtx, count: i64) -> Self {
        ROElement { ctx: ctx.clone(), trivial: count, sigma: 0, lambda: BTreeMap::new() }
    }

    pub fn lambda_power(ctx: &CyclicGroupCtx, s: i64) -> Self {
        Self::new(ctx, 0, 0, &[(s, 1)]).unwrap()
    }

    pub fn sigma_rep(ctx: &CyclicGroupCtx) -> Result<Self, String> {
        Self::new(ctx, 0, 1, &[])
    }

    /// Total number of sign lines counted with the λ^{n/2} folding undone.
    pub fn sigma_total(&self) -> i64 {
        if self.ctx.n % 2 == 0 {
            self.sigma + 2 * self.lambda.get(&(self.ctx.n / 2)).copied().unwrap_or(0)
        } else {
            0
        }
    }

    pub fn coeff(&self, s: u64) -> i64 {
        self.lambda.get(&s).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.trivial == 0 && self.sigma == 0 && self.lambda.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.ctx.n, other.ctx.n);
        let mut raw: Vec<(i64, i64)> = self
            .lambda
            .iter()
            .chain(other.lambda.iter())
            .map(|(&s, &c)| (s as i64, c))
            .collect();
        raw.sort_unstable();
        Self::new(&self.ctx, self.trivial + other.trivial, self.sigma + other.sigma, &raw)
            .unwrap()
    }

    pub fn neg(&self) -> Self {
        let raw: Vec<(i64, i64)> =
            self.lambda.iter().map(|(&s, &c)| (s as i64, -c)).collect();
        Self::new(&self.ctx, -self.trivial, -self.sigma, &raw).unwrap()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: i64) -> Self {
        let raw: Vec<(i64, i64)> =
            self.lambda.iter().map(|(&s, &c)| (s as i64, c * k)).collect();
        Self::new(&self.ctx, self.trivial * k, self.sigma * k, &raw).unwrap()
    }

    /// Real dimension of the virtual representation.
    pub fn dim(&self) -> i64 {
        self.fixed_dims().at(1)
    }

    /// |α^{C_d}| for every divisor d of n.
    pub fn fixed_dims(&self) -> FixedDimVector {
        let n = self.ctx.n;
        let mut dims = BTreeMap::new();
        for &d in &self.ctx.divisors {
            let mut v = self.trivial;
            if n % 2 == 0 && (n / 2) % d == 0 {
                v += self.sigma;
            }
            for (&s, &c) in &self.lambda {
                if s.gcd(&n) % d == 0 {
                    v += 2 * c;
                }
            }
            dims.insert(d, v);
        }
        FixedDimVector { n, dims }
    }

    pub fn in_ro_zero(&self) -> bool {
        self.fixed_dims().is_zero()
    }

    /// Split α = α₀ + α_div with α₀ ∈ RO₀ and α_div supported on the
    /// divisor-indexed summands {1, σ, λ^d : d | n}. The fixed-dimension
    /// system for α_div is unitriangular over the divisor lattice, so the
    /// coefficients are solved top-down.
    pub fn divisor_decompose(&self) -> (ROElement, ROElement) {
        let n = self.ctx.n;
        let v = self.fixed_dims();
        let ell = v.at(n);
        let mut sigma_count = 0i64;
        if n % 2 == 0 {
            sigma_count = v.at(n / 2) - ell;
        }
        // remaining divisor slots, largest first under divisibility
        let mut slots: Vec<u64> = self
            .ctx
            .divisors
            .iter()
            .copied()
            .filter(|&d| d != n && !(n % 2 == 0 && d == n / 2))
            .collect();
        slots.sort_unstable_by(|a, b| b.cmp(a));
        let mut e: BTreeMap<u64, i64> = BTreeMap::new();
        for &d in &slots {
            let mut acc = ell;
            if n % 2 == 0 && (n / 2) % d == 0 {
                acc += sigma_count;
            }
            for (&d2, &c) in &e {
                if d2 % d == 0 {
                    acc += 2 * c;
                }
            }
            let rem = v.at(d) - acc;
            debug_assert_eq!(rem % 2, 0, "divisor system must stay even");
            e.insert(d, rem / 2);
        }
        let raw: Vec<(i64, i64)> = e.iter().map(|(&d, &c)| (d as i64, c)).collect();
        let alpha_div = ROElement::new(&self.ctx, ell, sigma_count, &raw).unwrap();
        let alpha_zero = self.sub(&alpha_div);
        debug_assert!(alpha_zero.in_ro_zero());
        debug_assert_eq!(self, &alpha_zero.add(&alpha_div));
        (alpha_zero, alpha_div)
    }

    /// The τ invariant of an element of RO₀: writing α = Σ_i (λ^{d l_i} − λ^{d k_i})
    /// within each class d = gcd(exponent, n), τ_d = Π k_i l_i^{-1} mod n/d.
    /// The product is independent of the pairing, so it is computed as
    /// (Π negative-exponent units)·(Π positive-exponent units)^{-1}.
    pub fn tau_of(&self) -> Result<TauFunction, String> {
        if !self.in_ro_zero() {
            return Err("τ is defined only on RO₀ (all fixed dimensions zero)".into());
        }
        let n = self.ctx.n;
        let mut vals: BTreeMap<u64, i64> = BTreeMap::new();
        for &d in &self.ctx.divisors {
            let m = n / d;
            if m == 1 {
                vals.insert(d, 1);
                continue;
            }
            let mut num: i64 = 1; // negative-term units k_i
            let mut den: i64 = 1; // positive-term units l_i
            for (&s, &c) in &self.lambda {
                if s.gcd(&n) != d {
                    continue;
                }
                let unit = ((s / d) % m) as i64;
                let pow = |base: i64, e: i64| -> i64 {
                    let mut acc = 1i64;
                    for _ in 0..e {
                        acc = acc * base % m as i64;
                    }
                    acc
                };
                if c > 0 {
                    den = den * pow(unit, c) % m as i64;
                } else {
                    num = num * pow(unit, -c) % m as i64;
                }
            }
            let inv = mod_inverse(den, m as i64)
                .expect("positive-term exponents are units in their class");
            let t = (num * inv).rem_euclid(m as i64);
            vals.insert(d, if t == 0 { m as i64 } else { t });
        }
        Ok(TauFunction { n, vals })
    }

    /// Write α = β − γ with β, γ actual representations of disjoint support.
    pub fn positive_split(&self) -> (ROElement, ROElement) {
        let mut beta = Self::zero(&self.ctx);
        let mut gamma = Self::zero(&self.ctx);
        if self.trivial >= 0 {
            beta.trivial = self.trivial;
        } else {
            gamma.trivial = -self.trivial;
        }
        let mut beta_sigma = 0i64;
        let mut gamma_sigma = 0i64;
        let total_sigma = self.sigma_total();
        if total_sigma >= 0 {
            beta_sigma = total_sigma;
        } else {
            gamma_sigma = -total_sigma;
        }
        let mut beta_raw = Vec::new();
        let mut gamma_raw = Vec::new();
        for (&s, &c) in &self.lambda {
            if self.ctx.n % 2 == 0 && s == self.ctx.n / 2 {
                continue; // accounted into the σ totals above
            }
            if c > 0 {
                beta_raw.push((s as i64, c));
            } else {
                gamma_raw.push((s as i64, -c));
            }
        }
        let beta = ROElement::new(&self.ctx, beta.trivial, beta_sigma, &beta_raw).unwrap();
        let gamma = ROElement::new(&self.ctx, gamma.trivial, gamma_sigma, &gamma_raw).unwrap();
        debug_assert_eq!(self, &beta.sub(&gamma));
        (beta, gamma)
    }

    /// Text form matching the CLI grading syntax, e.g. "3 - 2L1 - L3 + s".
    pub fn display(&self) -> String {
        let mut terms: Vec<(i64, String)> = Vec::new();
        if self.trivial != 0 {
            terms.push((self.trivial, String::new()));
        }
        if self.sigma != 0 {
            terms.push((self.sigma, "s".into()));
        }
        for (&s, &c) in &self.lambda {
            terms.push((c, format!("L{s}")));
        }
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (c, sym)) in terms.iter().enumerate() {
            let mag = c.abs();
            let sign = if *c < 0 { "-" } else { "+" };
            if i == 0 {
                if *c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if sym.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag == 1 {
                out.push_str(sym);
            } else {
                out.push_str(&format!("{mag}{sym}"));
            }
        }
        out
    }

    /// Parse the CLI grading syntax: signed terms that are plain integers
    /// (trivial summands), `s` (σ), or `L<k>` (λ^k), e.g. "3 - 2L1 - L3 + s".
    pub fn parse(ctx: &CyclicGroupCtx, input: &str) -> Result<Self, String> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err("empty grading".into());
        }
        let mut trivial = 0i64;
        let mut sigma = 0i64;
        let mut raw: Vec<(i64, i64)> = Vec::new();
        let mut chars = compact.chars().peekable();
        let mut first = true;
        while chars.peek().is_some() {
            let sign = match chars.peek() {
                Some('+') => {
                    chars.next();
                    1
                }
                Some('-') => {
                    chars.next();
                    -1
                }
                _ if first => 1,
                Some(c) => return Err(format!("expected '+' or '-' before '{c}'")),
                None => unreachable!(),
            };
            first = false;
            let mut digits = String::new();
            while matches!(chars.peek(), Some(c) if c.is_ascii_digit()) {
                digits.push(chars.next().unwrap());
            }
            let coeff: i64 = if digits.is_empty() {
                1
            } else {
                digits.parse().map_err(|_| format!("bad coefficient '{digits}'"))?
            };
            match chars.peek() {
                Some('L') | Some('l') => {
                    chars.next();
                    let mut exp = String::new();
                    while matches!(chars.peek(), Some(c) if c.is_ascii_digit()) {
                        exp.push(chars.next().unwrap());
                    }
                    let s: i64 =
                        exp.parse().map_err(|_| "λ needs an integer exponent".to_string())?;
                    raw.push((s, sign * coeff));
                }
                Some('s') | Some('S') => {
                    chars.next();
                    sigma += sign * coeff;
                }
                _ => {
                    if digits.is_empty() {
                        return Err("dangling sign in grading".into());
                    }
                    trivial += sign * coeff;
                }
            }
        }
        Self::new(ctx, trivial, sigma, &raw)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ROJson {
            n: self.ctx.n,
            trivial: self.trivial,
            sigma: self.sigma,
            lambda: self.lambda.clone(),
        })
        .unwrap()
    }

    pub fn from_json(s: &str) -> Result<Self, String> {
        let parsed: ROJson = serde_json::from_str(s).map_err(|e| e.to_string())?;
        let ctx = CyclicGroupCtx::new(parsed.n);
        let raw: Vec<(i64, i64)> =
            parsed.lambda.iter().map(|(&k, &c)| (k as i64, c)).collect();
        Self::new(&ctx, parsed.trivial, parsed.sigma, &raw)
    }
}

/// Modular inverse of a mod m, when gcd(a, m) = 1.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let a = a.rem_euclid(m);
    let e = i64::extended_gcd(&a, &m);
    if e.gcd != 1 {
        None
    } else {
        Some(e.x.rem_euclid(m))
    }
}

/// A divisor-indexed twist: τ_d for every d | n, with τ_n = 1 by convention.
/// Values are stored as least residues; τ is invertible when gcd(τ_d, n/d)=1
/// for every d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauFunction {
    pub n: u64,
    pub vals: BTreeMap<u64, i64>,
}

impl TauFunction {
    /// The identity twist τ_d = 1.
    pub fn identity(n: u64) -> Self {
        let ctx = CyclicGroupCtx::new(n);
        TauFunction { n, vals: ctx.divisors.iter().map(|&d| (d, 1)).collect() }
    }

    pub fn from_map(n: u64, vals: BTreeMap<u64, i64>) -> Result<Self, String> {
        let ctx = CyclicGroupCtx::new(n);
        let mut out = BTreeMap::new();
        for &d in &ctx.divisors {
            let m = (n / d) as i64;
            let raw = vals.get(&d).copied().unwrap_or(1);
            if d == n {
                out.insert(d, 1);
            } else {
                out.insert(d, raw.rem_euclid(m));
            }
        }
        for (&d, _) in &vals {
            if !ctx.is_divisor(d) {
                return Err(format!("{d} is not a divisor of {n}"));
            }
        }
        Ok(TauFunction { n, vals: out })
    }

    pub fn at(&self, d: u64) -> i64 {
        *self.vals.get(&d).expect("not a divisor")
    }

    pub fn is_invertible(&self) -> bool {
        self.vals.iter().all(|(&d, &v)| {
            let m = (self.n / d) as i64;
            v.rem_euclid(m).gcd(&m) == 1 || m == 1
        })
    }

    /// Pointwise product of twists.
    pub fn multiply(&self, other: &TauFunction) -> TauFunction {
        assert_eq!(self.n, other.n);
        let vals = self
            .vals
            .iter()
            .map(|(&d, &v)| {
                let m = (self.n / d) as i64;
                let w = other.at(d);
                (d, if m == 1 { 1 } else { (v * w).rem_euclid(m) })
            })
            .collect();
        TauFunction { n: self.n, vals }
    }

    /// Equality in Π_d (Z/(n/d))^× / {±1}: τ_d ≡ ±τ'_d mod n/d at every d.
    pub fn equiv(&self, other: &TauFunction) -> bool {
        if self.n != other.n {
            return false;
        }
        self.vals.iter().all(|(&d, &v)| {
            let m = (self.n / d) as i64;
            if m == 1 {
                return true;
            }
            let w = other.at(d);
            (v - w).rem_euclid(m) == 0 || (v + w).rem_euclid(m) == 0
        })
    }

    pub fn display(&self) -> String {
        let parts: Vec<String> =
            self.vals.iter().map(|(d, v)| format!("τ_{d} = {v}")).collect();
        parts.join(", ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: u64) -> CyclicGroupCtx {
        CyclicGroupCtx::new(n)
    }

    #[test]
    fn canonical_folding() {
        let c = ctx(12);
        // λ^7 = λ^5, λ^12 = two trivial dims, λ^6 = 2σ
        let a = ROElement::new(&c, 0, 0, &[(7, 1)]).unwrap();
        assert_eq!(a, ROElement::lambda_power(&c, 5));
        let b = ROElement::new(&c, 0, 0, &[(12, 3)]).unwrap();
        assert_eq!(b.trivial, 6);
        assert!(b.lambda.is_empty());
        let s2 = ROElement::new(&c, 0, 2, &[]).unwrap();
        assert_eq!(s2.sigma, 0);
        assert_eq!(s2.coeff(6), 1);
        let s3 = ROElement::new(&c, 0, -3, &[]).unwrap();
        assert_eq!(s3.sigma, 1);
        assert_eq!(s3.coeff(6), -2);
    }

    #[test]
    fn fixed_dims_examples() {
        let c4 = ctx(4);
        let lam = ROElement::lambda_power(&c4, 1);
        let d = lam.fixed_dims();
        assert_eq!((d.at(1), d.at(2), d.at(4)), (2, 0, 0));

        let c2 = ctx(2);
        let s = ROElement::sigma_rep(&c2).unwrap();
        let d = s.fixed_dims();
        assert_eq!((d.at(1), d.at(2)), (1, 0));

        // 2λ - 2λ^p over C_{p^3}, p = 2: dims (0, -4, 0, 0)
        let c8 = ctx(8);
        let a = ROElement::new(&c8, 0, 0, &[(1, 2), (2, -2)]).unwrap();
        let d = a.fixed_dims();
        assert_eq!((d.at(1), d.at(2), d.at(4), d.at(8)), (0, -4, 0, 0));
    }

    #[test]
    fn ro_zero_membership() {
        let c15 = ctx(15);
        // λ - λ^k for gcd(k, n) = 1
        let a = ROElement::new(&c15, 0, 0, &[(1, 1), (2, -1)]).unwrap();
        assert!(a.in_ro_zero());
        assert!(ROElement::zero(&c15).in_ro_zero());
        // λ - λ^p over C_{pq} is not in RO₀
        let b = ROElement::new(&c15, 0, 0, &[(1, 1), (3, -1)]).unwrap();
        assert!(!b.in_ro_zero());
    }

    #[test]
    fn divisor_decomposition() {
        let c12 = ctx(12);
        // already divisor-graded
        let lam3 = ROElement::lambda_power(&c12, 3);
        let (a0, adiv) = lam3.divisor_decompose();
        assert!(a0.is_zero());
        assert_eq!(adiv, lam3);
        // λ^s with s not dividing n
        let lam5 = ROElement::lambda_power(&c12, 5);
        let (a0, adiv) = lam5.divisor_decompose();
        assert_eq!(adiv, ROElement::lambda_power(&c12, 1));
        assert!(a0.in_ro_zero());
        assert_eq!(a0.add(&adiv), lam5);
        // something involving σ
        let mix = ROElement::parse(&c12, "3 - 2L1 - L3 + s").unwrap();
        let (a0, adiv) = mix.divisor_decompose();
        assert!(a0.in_ro_zero());
        assert_eq!(a0.add(&adiv), mix);
    }

    #[test]
    fn tau_examples() {
        // over C_p: λ - λ² has τ_1 = 2
        let c5 = ctx(5);
        let a = ROElement::new(&c5, 0, 0, &[(1, 1), (2, -1)]).unwrap();
        let t = a.tau_of().unwrap();
        assert_eq!(t.at(1), 2);
        assert_eq!(t.at(5), 1);

        // L1 - L5 over C_12: τ_1 = 5
        let c12 = ctx(12);
        let b = ROElement::parse(&c12, "L1 - L5").unwrap();
        let t = b.tau_of().unwrap();
        assert_eq!(t.at(1), 5);
        for d in [2u64, 3, 4, 6, 12] {
            assert_eq!(t.at(d), 1, "no twist away from the free class, d={d}");
        }

        // λ^{dt} - λ^{ds} gives τ_d = s·t^{-1} mod n/d
        let c36 = ctx(36);
        let g = ROElement::new(&c36, 0, 0, &[(3, 1), (3 * 5, -1)]).unwrap();
        let t = g.tau_of().unwrap();
        assert_eq!(t.at(3), 5);

        // τ of 0 is the identity
        let z = ROElement::zero(&c12);
        assert_eq!(z.tau_of().unwrap(), TauFunction::identity(12));

        // not defined off RO₀
        let bad = ROElement::lambda_power(&c12, 1);
        assert!(bad.tau_of().is_err());
    }

    #[test]
    fn tau_least_positive_and_invertible() {
        let c12 = ctx(12);
        let a = ROElement::parse(&c12, "L1 - L7").unwrap();
        let t = a.tau_of().unwrap();
        assert!(t.is_invertible());
        for (&d, &v) in &t.vals {
            let m = (12 / d) as i64;
            assert!(v >= 1 && (m == 1 || v <= m));
        }
    }

    #[test]
    fn positive_split_minimal() {
        let c12 = ctx(12);
        let a = ROElement::parse(&c12, "2 - L1 + 3L5 - s").unwrap();
        let (b, g) = a.positive_split();
        assert_eq!(b.sub(&g), a);
        assert!(b.trivial >= 0 && g.trivial >= 0);
        assert!(b.lambda.values().all(|&c| c > 0));
        assert!(g.lambda.values().all(|&c| c > 0));
        // disjoint support
        for s in b.lambda.keys() {
            assert!(!g.lambda.contains_key(s));
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        let c12 = ctx(12);
        for text in ["3 - 2L1 - L3 + s", "-4 + L2", "s", "0", "L6", "2L5 - 2L1"] {
            let a = ROElement::parse(&c12, text).unwrap();
            let b = ROElement::parse(&c12, &a.display()).unwrap();
            assert_eq!(a, b, "round trip through '{text}'");
        }
        assert!(ROElement::parse(&c12, "L").is_err());
        assert!(ROElement::parse(&c12, "+").is_err());
        assert!(ROElement::parse(&ctx(5), "s").is_err());
    }

    #[test]
    fn json_round_trip() {
        let c12 = ctx(12);
        let a = ROElement::parse(&c12, "3 - 2L1 - L3 + s").unwrap();
        let j = a.to_json();
        let b = ROElement::from_json(&j).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sigma_total_bookkeeping() {
        let c8 = ctx(8);
        let a = ROElement::new(&c8, 0, 5, &[]).unwrap();
        assert_eq!(a.sigma, 1);
        assert_eq!(a.coeff(4), 2);
        assert_eq!(a.sigma_total(), 5);
    }
}
