use crate::mat::Mat;
use crate::snf::{self, Snf};
use num_bigint::BigInt;
use num_traits::Zero;

/// Finitely generated abelian group presented as Z^ngens / rowspace(rels).
#[derive(Clone, Debug)]
pub struct FgAbGroup {
    pub ngens: usize,
    pub rels: Mat,
    snf: Snf,
}

/// Canonical form: free rank plus invariant factors (each >= 2, ascending
/// divisibility chain). Two presentations give isomorphic groups iff these agree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".into());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl CanonicalForm {
    pub fn zero() -> Self {
        CanonicalForm { free_rank: 0, torsion: vec![] }
    }

    pub fn free(rank: usize) -> Self {
        CanonicalForm { free_rank: rank, torsion: vec![] }
    }

    pub fn cyclic(order: u64) -> Self {
        if order == 0 {
            CanonicalForm::free(1)
        } else if order == 1 {
            CanonicalForm::zero()
        } else {
            CanonicalForm { free_rank: 0, torsion: vec![BigInt::from(order)] }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Total order of the torsion subgroup (1 when torsion-free).
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }
}

impl FgAbGroup {
    pub fn new(ngens: usize, rels: Mat) -> Self {
        assert_eq!(rels.cols, ngens, "relation width must equal generator count");
        let snf = snf::smith(&rels);
        FgAbGroup { ngens, rels, snf }
    }

    pub fn free(ngens: usize) -> Self {
        FgAbGroup::new(ngens, Mat::zero(0, ngens))
    }

    pub fn zero() -> Self {
        FgAbGroup::free(0)
    }

    /// Z/k as a one-generator group.
    pub fn cyclic(k: u64) -> Self {
        FgAbGroup::new(1, Mat::from_rows(&[vec![k as i64]]))
    }

    pub fn canonical(&self) -> CanonicalForm {
        let mut torsion: Vec<BigInt> = self
            .snf
            .diagonal()
            .into_iter()
            .filter(|d| d > &BigInt::from(1))
            .collect();
        torsion.sort();
        CanonicalForm { free_rank: self.ngens - self.snf.rank, torsion }
    }

    /// Canonical coordinates of an element: z = x * q, with entry i read
    /// modulo the i-th diagonal entry (0 for free coordinates).
    pub fn reduce(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.ngens);
        let mut z = self.snf.q.apply_row(x);
        for (i, v) in z.iter_mut().enumerate() {
            if i < self.snf.rank {
                let d = &self.snf.d[(i, i)];
                *v = ((&*v % d) + d) % d;
            }
        }
        z
    }

    pub fn is_zero_element(&self, x: &[BigInt]) -> bool {
        self.reduce(x).iter().all(|v| v.is_zero())
    }

    /// True when the presented group is trivial.
    pub fn is_zero(&self) -> bool {
        self.canonical().is_zero()
    }

    pub fn elements_equal(&self, x: &[BigInt], y: &[BigInt]) -> bool {
        let diff: Vec<BigInt> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        self.is_zero_element(&diff)
    }

    /// The order of the class of x: None means infinite.
    pub fn element_order(&self, x: &[BigInt]) -> Option<BigInt> {
        let z = self.snf.q.apply_row(x);
        let mut ord = BigInt::from(1);
        for (i, v) in z.iter().enumerate() {
            if i < self.snf.rank {
                let d = &self.snf.d[(i, i)];
                let g = num_integer::Integer::gcd(v, d);
                let o = d / g;
                ord = num_integer::Integer::lcm(&ord, &o);
            } else if !v.is_zero() {
                return None;
            }
        }
        Some(ord)
    }

    /// Minimal presentation on canonical generators (free coordinates first,
    /// then invariant factors ascending), with the mutually inverse maps.
    pub fn canonicalized(&self) -> (FgAbGroup, GroupMap, GroupMap) {
        let one = BigInt::from(1);
        // coordinates after the basis change x -> x * q: i-th is Z/d_i for
        // i < rank (dropped when d_i = 1), free for i >= rank
        let mut keep: Vec<usize> = (self.snf.rank..self.ngens).collect();
        let torsion_cols: Vec<usize> =
            (0..self.snf.rank).filter(|&i| self.snf.d[(i, i)] > one).collect();
        keep.extend(torsion_cols.iter().copied());
        let free_rank = self.ngens - self.snf.rank;
        let mut rels = Mat::zero(torsion_cols.len(), keep.len());
        for (k, &i) in torsion_cols.iter().enumerate() {
            rels[(k, free_rank + k)] = self.snf.d[(i, i)].clone();
        }
        let canon = FgAbGroup::new(keep.len(), rels);
        let mut to_mat = Mat::zero(self.ngens, keep.len());
        for (j, &col) in keep.iter().enumerate() {
            for i in 0..self.ngens {
                to_mat[(i, j)] = self.snf.q[(i, col)].clone();
            }
        }
        let mut from_mat = Mat::zero(keep.len(), self.ngens);
        for (j, &col) in keep.iter().enumerate() {
            from_mat.set_row(j, &self.snf.qinv.row(col));
        }
        let to = GroupMap::new(self.clone(), canon.clone(), to_mat)
            .expect("canonical projection is well-defined");
        let from = GroupMap::new(canon.clone(), self.clone(), from_mat)
            .expect("canonical section is well-defined");
        debug_assert!(to.compose(&from).equals_induced(&GroupMap::identity(self.clone())));
        debug_assert!(from.compose(&to).equals_induced(&GroupMap::identity(canon)));
        (from.src.clone(), to, from)
    }

    /// Tensor product of presentations: generators e_i ⊗ f_j indexed by
    /// i * other.ngens + j, relations r ⊗ f_j and e_i ⊗ s.
    pub fn tensor(&self, other: &FgAbGroup) -> FgAbGroup {
        let a = self.ngens;
        let b = other.ngens;
        let left = self.rels.kronecker(&Mat::identity(b));
        let right = Mat::identity(a).kronecker(&other.rels);
        FgAbGroup::new(a * b, left.vstack(&right))
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        FgAbGroup::new(self.ngens + other.ngens, self.rels.direct_sum(&other.rels))
    }
}

/// Homomorphism between presented groups, given on generators by a matrix
/// acting on row vectors. Construction verifies well-definedness: every
/// relator of the source must map into the relation lattice of the target.
#[derive(Clone, Debug)]
pub struct GroupMap {
    pub src: FgAbGroup,
    pub dst: FgAbGroup,
    pub mat: Mat,
}

impl GroupMap {
    pub fn new(src: FgAbGroup, dst: FgAbGroup, mat: Mat) -> Result<Self, String> {
        assert_eq!(mat.rows, src.ngens, "matrix rows must equal source generators");
        assert_eq!(mat.cols, dst.ngens, "matrix cols must equal target generators");
        let image_of_rels = src.rels.mul(&mat);
        for i in 0..image_of_rels.rows {
            if !dst.is_zero_element(&image_of_rels.row(i)) {
                return Err(format!(
                    "relator {i} does not map to zero: not a well-defined homomorphism"
                ));
            }
        }
        Ok(GroupMap { src, dst, mat })
    }

    pub fn zero(src: FgAbGroup, dst: FgAbGroup) -> Self {
        let mat = Mat::zero(src.ngens, dst.ngens);
        GroupMap { src, dst, mat }
    }

    pub fn identity(g: FgAbGroup) -> Self {
        let mat = Mat::identity(g.ngens);
        GroupMap { src: g.clone(), dst: g, mat }
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.mat.apply_row(x)
    }

    pub fn compose(&self, then: &GroupMap) -> GroupMap {
        assert_eq!(self.dst.ngens, then.src.ngens, "composition mismatch");
        GroupMap { src: self.src.clone(), dst: then.dst.clone(), mat: self.mat.mul(&then.mat) }
    }

    pub fn add(&self, other: &GroupMap) -> GroupMap {
        GroupMap { src: self.src.clone(), dst: self.dst.clone(), mat: self.mat.add(&other.mat) }
    }

    pub fn is_zero_map(&self) -> bool {
        (0..self.mat.rows).all(|i| self.dst.is_zero_element(&self.mat.row(i)))
    }

    /// Whether the composite with `then` is the zero map on classes.
    pub fn composes_to_zero(&self, then: &GroupMap) -> bool {
        self.compose(then).is_zero_map()
    }

    pub fn sub(&self, other: &GroupMap) -> GroupMap {
        GroupMap { src: self.src.clone(), dst: self.dst.clone(), mat: self.mat.sub(&other.mat) }
    }

    /// Equality as maps on classes (matrices may differ by relations).
    pub fn equals_induced(&self, other: &GroupMap) -> bool {
        self.mat.rows == other.mat.rows
            && self.mat.cols == other.mat.cols
            && self.sub(other).is_zero_map()
    }

    /// F ⊗ G on tensor-presented groups, matching FgAbGroup::tensor indexing.
    pub fn tensor(&self, other: &GroupMap) -> GroupMap {
        GroupMap {
            src: self.src.tensor(&other.src),
            dst: self.dst.tensor(&other.dst),
            mat: self.mat.kronecker(&other.mat),
        }
    }

    /// Cokernel dst / (im + rels).
    pub fn cokernel(&self) -> FgAbGroup {
        FgAbGroup::new(self.dst.ngens, self.dst.rels.vstack(&self.mat))
    }

    /// Generators of the kernel as a subgroup of the source (rows include the
    /// source relations, harmless for span purposes).
    pub fn kernel_gens(&self) -> Mat {
        snf::preimage_lattice(&self.mat, &self.dst.rels).vstack(&self.src.rels)
    }

    /// Bijective on classes: surjective with isomorphic canonical forms.
    pub fn is_isomorphism(&self) -> bool {
        self.cokernel().canonical().is_zero()
            && self.src.canonical() == self.dst.canonical()
    }

    /// The subquotient ker(self)/im(prior), where prior: B -> src and
    /// self: src -> dst. Passing None for prior gives the full kernel.
    pub fn homology_at_source(&self, prior: Option<&GroupMap>) -> Subquotient {
        let cycle_basis = snf::preimage_lattice(&self.mat, &self.dst.rels);
        let mut boundary = self.src.rels.clone();
        if let Some(f) = prior {
            assert_eq!(f.dst.ngens, self.src.ngens);
            boundary = boundary.vstack(&f.mat);
        }
        Subquotient::new(self.src.ngens, cycle_basis, boundary)
    }
}

/// A subquotient L/B of an ambient Z^n: L is spanned by the rows of `basis`
/// (a genuine basis), B by `boundary_gens` (contained in L).
#[derive(Clone, Debug)]
pub struct Subquotient {
    pub ambient: usize,
    pub basis: Mat,
    pub group: FgAbGroup,
}

impl Subquotient {
    pub fn new(ambient: usize, basis: Mat, boundary_gens: Mat) -> Self {
        assert_eq!(basis.cols, ambient);
        assert_eq!(boundary_gens.cols, ambient);
        let rel = snf::solve_left_many(&basis, &boundary_gens)
            .expect("boundary generators must lie in the cycle lattice");
        let group = FgAbGroup::new(basis.rows, rel);
        Subquotient { ambient, basis, group }
    }

    /// Coordinates of an ambient element that lies in L.
    pub fn coords(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        snf::solve_left(&self.basis, x)
    }

    pub fn class_of(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        self.coords(x).map(|c| self.group.reduce(&c))
    }

    pub fn canonical(&self) -> CanonicalForm {
        self.group.canonical()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> Mat {
        Mat::from_rows(rows)
    }

    #[test]
    fn canonical_form_of_presentation() {
        // Z^3 / <(2,0,0), (0,3,0)> = Z/2 + Z/3 + Z = Z/6 + Z
        let g = FgAbGroup::new(3, m(&[vec![2, 0, 0], vec![0, 3, 0]]));
        let c = g.canonical();
        assert_eq!(c.free_rank, 1);
        assert_eq!(c.torsion, vec![BigInt::from(6)]);
        assert_eq!(c.to_string(), "Z + Z/6");
    }

    #[test]
    fn element_arithmetic_in_quotient() {
        let g = FgAbGroup::cyclic(5);
        assert!(g.is_zero_element(&[BigInt::from(10)]));
        assert!(!g.is_zero_element(&[BigInt::from(3)]));
        assert!(g.elements_equal(&[BigInt::from(7)], &[BigInt::from(2)]));
        assert_eq!(g.element_order(&[BigInt::from(2)]), Some(BigInt::from(5)));
    }

    #[test]
    fn group_map_well_definedness() {
        let z2 = FgAbGroup::cyclic(2);
        let z4 = FgAbGroup::cyclic(4);
        // Z/2 -> Z/4 sending 1 to 2 is fine; sending 1 to 1 is not
        assert!(GroupMap::new(z2.clone(), z4.clone(), m(&[vec![2]])).is_ok());
        assert!(GroupMap::new(z2.clone(), z4.clone(), m(&[vec![1]])).is_err());
    }

    #[test]
    fn homology_of_short_piece() {
        // Z -2-> Z -0-> Z/4: kernel of (x |-> 0 mod 4)? full Z; image = 2Z;
        // take d1: Z -> Z mult by 2, d0: Z -> Z/4 mult by 0 is degenerate.
        // Cleaner: Z -4-> Z -2-> Z/4 has composite zero. H at middle:
        // ker(x |-> 2x mod 4) = 2Z, im = 4Z, so H = 2Z/4Z = Z/2.
        let z = FgAbGroup::free(1);
        let z4 = FgAbGroup::cyclic(4);
        let d1 = GroupMap::new(z.clone(), z.clone(), m(&[vec![4]])).unwrap();
        let d0 = GroupMap::new(z.clone(), z4, m(&[vec![2]])).unwrap();
        assert!(d1.composes_to_zero(&d0));
        let h = d0.homology_at_source(Some(&d1));
        assert_eq!(h.canonical(), CanonicalForm::cyclic(2));
    }

    #[test]
    fn canonicalized_round_trip() {
        let g = FgAbGroup::new(3, m(&[vec![2, 4, 0], vec![0, 6, 0], vec![0, 0, 1]]));
        let (canon, to, from) = g.canonicalized();
        assert_eq!(canon.canonical(), g.canonical());
        assert!(to.compose(&from).equals_induced(&GroupMap::identity(g.clone())));
        assert!(from.compose(&to).equals_induced(&GroupMap::identity(canon.clone())));
        // canonical presentation is minimal: one generator per summand
        assert_eq!(canon.ngens, canon.canonical().free_rank + canon.canonical().torsion.len());
    }

    #[test]
    fn tensor_of_cyclics() {
        // Z/4 ⊗ Z/6 = Z/2, (Z + Z/2) ⊗ Z/4 = Z/4 + Z/2
        let t = FgAbGroup::cyclic(4).tensor(&FgAbGroup::cyclic(6));
        assert_eq!(t.canonical(), CanonicalForm::cyclic(2));
        let g = FgAbGroup::new(2, m(&[vec![0, 2]]));
        let t2 = g.tensor(&FgAbGroup::cyclic(4));
        let c = t2.canonical();
        assert_eq!(c.free_rank, 0);
        assert_eq!(c.torsion, vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn map_tensor_and_iso_checks() {
        let z = FgAbGroup::free(1);
        let two = GroupMap::new(z.clone(), z.clone(), m(&[vec![2]])).unwrap();
        let three = GroupMap::new(z.clone(), z.clone(), m(&[vec![3]])).unwrap();
        let six = two.tensor(&three);
        assert_eq!(six.mat, m(&[vec![6]]));
        assert!(!two.is_isomorphism());
        assert!(GroupMap::identity(FgAbGroup::cyclic(4)).is_isomorphism());
        // Z/2 -> Z/4 by 2 is injective but not surjective
        let incl =
            GroupMap::new(FgAbGroup::cyclic(2), FgAbGroup::cyclic(4), m(&[vec![2]])).unwrap();
        assert!(!incl.is_isomorphism());
        assert_eq!(incl.cokernel().canonical(), CanonicalForm::cyclic(2));
    }

    #[test]
    fn subquotient_class_arithmetic() {
        // L = <(2,0),(0,1)> in Z^2, B = <(4,0)>: L/B = Z/2 + Z
        let sq = Subquotient::new(2, m(&[vec![2, 0], vec![0, 1]]), m(&[vec![4, 0]]));
        let c = sq.canonical();
        assert_eq!(c.free_rank, 1);
        assert_eq!(c.torsion, vec![BigInt::from(2)]);
        assert!(sq.coords(&[BigInt::from(1), BigInt::from(0)]).is_none());
        let cls = sq.class_of(&[BigInt::from(4), BigInt::from(0)]).unwrap();
        assert!(cls.iter().all(|v| v.is_zero()));
    }
}
