use crate::group::{CanonicalForm, FgAbGroup, GroupMap, Subquotient};
use crate::mat::Mat;
use std::collections::BTreeMap;

/// Chain complex of finitely generated abelian groups, indexed by a
/// contiguous range of integer degrees.  d[i] maps groups[i+1] to groups[i].
#[derive(Clone, Debug)]
pub struct IntComplex {
    pub bottom: i64,
    pub groups: Vec<FgAbGroup>,
    pub d: Vec<GroupMap>,
}

impl IntComplex {
    pub fn new(bottom: i64, groups: Vec<FgAbGroup>, d: Vec<GroupMap>) -> Result<Self, String> {
        if !groups.is_empty() && d.len() + 1 != groups.len() {
            return Err(format!(
                "expected {} differentials for {} groups, got {}",
                groups.len() - 1,
                groups.len(),
                d.len()
            ));
        }
        for (i, m) in d.iter().enumerate() {
            if m.src.ngens != groups[i + 1].ngens || m.dst.ngens != groups[i].ngens {
                return Err(format!("differential {i} does not match adjacent groups"));
            }
        }
        for i in 0..d.len().saturating_sub(1) {
            if !d[i + 1].composes_to_zero(&d[i]) {
                return Err(format!("d o d != 0 between degrees {} and {}", i + 2, i));
            }
        }
        Ok(IntComplex { bottom, groups, d })
    }

    pub fn zero() -> Self {
        IntComplex { bottom: 0, groups: vec![], d: vec![] }
    }

    pub fn top(&self) -> i64 {
        self.bottom + self.groups.len() as i64 - 1
    }

    fn index_of(&self, degree: i64) -> Option<usize> {
        if self.groups.is_empty() || degree < self.bottom || degree > self.top() {
            None
        } else {
            Some((degree - self.bottom) as usize)
        }
    }

    pub fn group_at(&self, degree: i64) -> FgAbGroup {
        match self.index_of(degree) {
            Some(i) => self.groups[i].clone(),
            None => FgAbGroup::zero(),
        }
    }

    /// Homology at a degree, with cycle-lattice coordinates retained so classes
    /// can be located and mapped.
    pub fn homology_sq(&self, degree: i64) -> Subquotient {
        let Some(i) = self.index_of(degree) else {
            return Subquotient::new(0, Mat::zero(0, 0), Mat::zero(0, 0));
        };
        let out = if i > 0 {
            self.d[i - 1].clone()
        } else {
            GroupMap::zero(self.groups[i].clone(), FgAbGroup::zero())
        };
        let incoming = if i < self.d.len() { Some(&self.d[i]) } else { None };
        out.homology_at_source(incoming)
    }

    pub fn homology(&self, degree: i64) -> CanonicalForm {
        self.homology_sq(degree).canonical()
    }

    pub fn all_homology(&self) -> BTreeMap<i64, CanonicalForm> {
        let mut out = BTreeMap::new();
        for k in self.bottom..=self.top() {
            let h = self.homology(k);
            if !h.is_zero() {
                out.insert(k, h);
            }
        }
        out
    }
}

/// Degreewise map of chain complexes; commutes with the differentials.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub maps: BTreeMap<i64, GroupMap>,
}

impl ChainMap {
    pub fn new(
        src: &IntComplex,
        dst: &IntComplex,
        maps: BTreeMap<i64, GroupMap>,
    ) -> Result<Self, String> {
        // any degree not present is implicitly the zero map
        for k in src.bottom..=src.top() {
            let src_gens = src.group_at(k).ngens;
            if src_gens == 0 {
                continue;
            }
            if let Some(f) = maps.get(&k) {
                if f.src.ngens != src_gens || f.dst.ngens != dst.group_at(k).ngens {
                    return Err(format!("chain map at degree {k} has wrong shape"));
                }
            }
        }
        // commuting squares: f_{k-1} o d = d' o f_k (maps act on rows, so
        // "d then f" is d.mat * f.mat)
        for k in src.bottom + 1..=src.top() {
            let d_src = &src.d[(k - 1 - src.bottom) as usize];
            let fk = maps.get(&k);
            let fk1 = maps.get(&(k - 1));
            let lhs = match fk1 {
                Some(f) => d_src.mat.mul(&f.mat),
                None => Mat::zero(d_src.mat.rows, dst.group_at(k - 1).ngens),
            };
            let rhs = match (fk, dst.index_of(k)) {
                (Some(f), Some(_)) if k - 1 >= dst.bottom && k - 1 <= dst.top() => {
                    let d_dst = &dst.d[(k - 1 - dst.bottom) as usize];
                    f.mat.mul(&d_dst.mat)
                }
                _ => Mat::zero(src.group_at(k).ngens, dst.group_at(k - 1).ngens),
            };
            let tgt = dst.group_at(k - 1);
            let diff = lhs.sub(&rhs);
            for i in 0..diff.rows {
                if !tgt.is_zero_element(&diff.row(i)) {
                    return Err(format!("square at degree {k} does not commute"));
                }
            }
        }
        Ok(ChainMap { maps })
    }

    /// Induced map on homology at a degree.
    pub fn map_on_homology(
        &self,
        src: &IntComplex,
        dst: &IntComplex,
        degree: i64,
    ) -> Result<GroupMap, String> {
        let hs = src.homology_sq(degree);
        let hd = dst.homology_sq(degree);
        let mut rows = Mat::zero(hs.basis.rows, hd.group.ngens);
        for i in 0..hs.basis.rows {
            let x = hs.basis.row(i);
            let y = match self.maps.get(&degree) {
                Some(f) => f.apply(&x),
                None => vec![num_bigint::BigInt::from(0); hd.ambient],
            };
            let c = hd
                .coords(&y)
                .ok_or_else(|| format!("image of a cycle is not a cycle at degree {degree}"))?;
            rows.set_row(i, &c);
        }
        GroupMap::new(hs.group, hd.group, rows)
    }
}

/// Bicomplex with commuting squares; the totalization inserts the sign
/// (-1)^i on the vertical differential in column i.
#[derive(Clone, Debug, Default)]
pub struct IntBicomplex {
    pub terms: BTreeMap<(i64, i64), FgAbGroup>,
    pub h: BTreeMap<(i64, i64), GroupMap>,
    pub v: BTreeMap<(i64, i64), GroupMap>,
}

impl IntBicomplex {
    pub fn term(&self, i: i64, j: i64) -> FgAbGroup {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(FgAbGroup::zero)
    }

    pub fn validate(&self) -> Result<(), String> {
        for (&(i, j), f) in &self.h {
            if f.src.ngens != self.term(i, j).ngens || f.dst.ngens != self.term(i - 1, j).ngens {
                return Err(format!("horizontal map at ({i},{j}) has wrong shape"));
            }
        }
        for (&(i, j), f) in &self.v {
            if f.src.ngens != self.term(i, j).ngens || f.dst.ngens != self.term(i, j - 1).ngens {
                return Err(format!("vertical map at ({i},{j}) has wrong shape"));
            }
        }
        for (&(i, j), f) in &self.h {
            if let Some(g) = self.h.get(&(i - 1, j)) {
                if !f.composes_to_zero(g) {
                    return Err(format!("h o h != 0 at ({i},{j})"));
                }
            }
        }
        for (&(i, j), f) in &self.v {
            if let Some(g) = self.v.get(&(i, j - 1)) {
                if !f.composes_to_zero(g) {
                    return Err(format!("v o v != 0 at ({i},{j})"));
                }
            }
        }
        // commuting squares
        for (&(i, j), hm) in &self.h {
            let via_h_then_v = match self.v.get(&(i - 1, j)) {
                Some(vm) => hm.mat.mul(&vm.mat),
                None => Mat::zero(self.term(i, j).ngens, self.term(i - 1, j - 1).ngens),
            };
            let via_v_then_h = match (self.v.get(&(i, j)), self.h.get(&(i, j - 1))) {
                (Some(vm), Some(hm2)) => vm.mat.mul(&hm2.mat),
                _ => Mat::zero(self.term(i, j).ngens, self.term(i - 1, j - 1).ngens),
            };
            let tgt = self.term(i - 1, j - 1);
            let diff = via_h_then_v.sub(&via_v_then_h);
            for r in 0..diff.rows {
                if !tgt.is_zero_element(&diff.row(r)) {
                    return Err(format!("square at ({i},{j}) does not commute"));
                }
            }
        }
        Ok(())
    }

    /// Total complex along antidiagonals i + j = t.
    pub fn total(&self) -> Result<IntComplex, String> {
        self.validate()?;
        if self.terms.is_empty() {
            return Ok(IntComplex::zero());
        }
        let degrees: Vec<i64> = self.terms.keys().map(|&(i, j)| i + j).collect();
        let lo = *degrees.iter().min().unwrap();
        let hi = *degrees.iter().max().unwrap();

        // ordered positions per total degree
        let mut layout: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
        for &(i, j) in self.terms.keys() {
            layout.entry(i + j).or_default().push((i, j));
        }
        for positions in layout.values_mut() {
            positions.sort();
        }

        let mut groups: Vec<FgAbGroup> = Vec::new();
        let mut offsets: BTreeMap<i64, BTreeMap<(i64, i64), usize>> = BTreeMap::new();
        for t in lo..=hi {
            let empty = vec![];
            let positions = layout.get(&t).unwrap_or(&empty);
            let mut ngens = 0;
            let mut rels = Mat::zero(0, 0);
            let mut offs = BTreeMap::new();
            for &pos in positions {
                let g = self.term(pos.0, pos.1);
                offs.insert(pos, ngens);
                ngens += g.ngens;
                rels = rels.direct_sum(&g.rels);
            }
            groups.push(FgAbGroup::new(ngens, rels));
            offsets.insert(t, offs);
        }

        let mut diffs: Vec<GroupMap> = Vec::new();
        for t in lo..hi {
            // differential from degree t+1 down to t
            let src_group = &groups[(t + 1 - lo) as usize];
            let dst_group = &groups[(t - lo) as usize];
            let mut mat = Mat::zero(src_group.ngens, dst_group.ngens);
            let src_offs = &offsets[&(t + 1)];
            let dst_offs = &offsets[&t];
            for (&(i, j), &so) in src_offs {
                if let Some(f) = self.h.get(&(i, j)) {
                    if let Some(&to) = dst_offs.get(&(i - 1, j)) {
                        for r in 0..f.mat.rows {
                            for c in 0..f.mat.cols {
                                mat[(so + r, to + c)] = f.mat[(r, c)].clone();
                            }
                        }
                    }
                }
                if let Some(f) = self.v.get(&(i, j)) {
                    if let Some(&to) = dst_offs.get(&(i, j - 1)) {
                        let sign = if i.rem_euclid(2) == 0 { 1 } else { -1 };
                        for r in 0..f.mat.rows {
                            for c in 0..f.mat.cols {
                                mat[(so + r, to + c)] =
                                    f.mat[(r, c)].clone() * num_bigint::BigInt::from(sign);
                            }
                        }
                    }
                }
            }
            diffs.push(GroupMap::new(src_group.clone(), dst_group.clone(), mat)?);
        }
        IntComplex::new(lo, groups, diffs)
    }

    pub fn total_homology(&self) -> Result<BTreeMap<i64, CanonicalForm>, String> {
        Ok(self.total()?.all_homology())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn m(rows: &[Vec<i64>]) -> Mat {
        Mat::from_rows(rows)
    }

    fn free(n: usize) -> FgAbGroup {
        FgAbGroup::free(n)
    }

    #[test]
    fn rejects_nonzero_composite() {
        let d1 = GroupMap::new(free(1), free(1), m(&[vec![2]])).unwrap();
        let d0 = GroupMap::new(free(1), free(1), m(&[vec![3]])).unwrap();
        let c = IntComplex::new(0, vec![free(1), free(1), free(1)], vec![d0, d1]);
        assert!(c.is_err());
    }

    #[test]
    fn circle_homology() {
        // S^1 with two cells: 0 -> Z -0-> Z -> 0
        let d0 = GroupMap::new(free(1), free(1), m(&[vec![0]])).unwrap();
        let c = IntComplex::new(0, vec![free(1), free(1)], vec![d0]).unwrap();
        assert_eq!(c.homology(0), CanonicalForm::free(1));
        assert_eq!(c.homology(1), CanonicalForm::free(1));
        assert_eq!(c.homology(2), CanonicalForm::zero());
    }

    #[test]
    fn rp2_homology() {
        // Z -2-> Z -0-> Z
        let d1 = GroupMap::new(free(1), free(1), m(&[vec![2]])).unwrap();
        let d0 = GroupMap::new(free(1), free(1), m(&[vec![0]])).unwrap();
        let c = IntComplex::new(0, vec![free(1), free(1), free(1)], vec![d0, d1]).unwrap();
        assert_eq!(c.homology(0), CanonicalForm::free(1));
        assert_eq!(c.homology(1), CanonicalForm::cyclic(2));
        assert_eq!(c.homology(2), CanonicalForm::zero());
    }

    #[test]
    fn bicomplex_total_of_tensor_square() {
        // chains(S^1) tensor chains(S^1): torus. H_0 = Z, H_1 = Z^2, H_2 = Z.
        let mut bc = IntBicomplex::default();
        for i in 0..2i64 {
            for j in 0..2i64 {
                bc.terms.insert((i, j), free(1));
            }
        }
        for j in 0..2i64 {
            bc.h.insert((1, j), GroupMap::new(free(1), free(1), m(&[vec![0]])).unwrap());
        }
        for i in 0..2i64 {
            bc.v.insert((i, 1), GroupMap::new(free(1), free(1), m(&[vec![0]])).unwrap());
        }
        let h = bc.total_homology().unwrap();
        assert_eq!(h[&0], CanonicalForm::free(1));
        assert_eq!(h[&1], CanonicalForm::free(2));
        assert_eq!(h[&2], CanonicalForm::free(1));
    }

    #[test]
    fn map_on_homology_degree_two_cover() {
        // degree-2 self map of the circle on H_1
        let d0 = GroupMap::new(free(1), free(1), m(&[vec![0]])).unwrap();
        let c = IntComplex::new(0, vec![free(1), free(1)], vec![d0]).unwrap();
        let mut maps = BTreeMap::new();
        maps.insert(0, GroupMap::new(free(1), free(1), m(&[vec![1]])).unwrap());
        maps.insert(1, GroupMap::new(free(1), free(1), m(&[vec![2]])).unwrap());
        let f = ChainMap::new(&c, &c, maps).unwrap();
        let h1 = f.map_on_homology(&c, &c, 1).unwrap();
        assert_eq!(h1.mat[(0, 0)], BigInt::from(2));
    }
}
