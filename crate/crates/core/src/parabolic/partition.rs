use super::data::{bounded_vectors, cartesian};
use super::numeric::{delta, spread};
use super::QuasiParabolicData;
use crate::algebra::rational::floor_i64;
use crate::{Error, Rational, Result};
use num_traits::Zero;

/// Intersection type of a filtration with the flags: for every point a
/// matrix `I[i][k]` whose row sums are the multiplicities and whose column
/// sums are the block ranks `n_k >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    ranks: Vec<u32>,
    matrices: Vec<Vec<Vec<u32>>>,
}

impl Partition {
    pub fn new(data: &QuasiParabolicData, matrices: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        if matrices.len() != data.num_points() {
            return Err(Error::InvalidData("one matrix per point is required".into()));
        }
        let r = matrices[0].first().map_or(0, Vec::len);
        if r == 0 {
            return Err(Error::InvalidData("a partition needs at least one block".into()));
        }
        let mut ranks: Option<Vec<u32>> = None;
        for (p, (m, point)) in matrices.iter().zip(data.points()).enumerate() {
            if m.len() != point.m() || m.iter().any(|row| row.len() != r) {
                return Err(Error::InvalidData(format!("matrix {p} has the wrong shape")));
            }
            for (row, &mult) in m.iter().zip(point.multiplicities()) {
                if row.iter().sum::<u32>() != mult {
                    return Err(Error::InvalidData(format!("matrix {p} row sums differ from the multiplicities")));
                }
            }
            let cols: Vec<u32> = (0..r).map(|k| m.iter().map(|row| row[k]).sum()).collect();
            match &ranks {
                None => ranks = Some(cols),
                Some(c) if *c != cols => {
                    return Err(Error::InvalidData("column ranks differ between points".into()));
                }
                _ => {}
            }
        }
        let ranks = ranks.unwrap();
        if ranks.contains(&0) {
            return Err(Error::InvalidData("every block needs positive rank".into()));
        }
        Ok(Self { ranks, matrices })
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Block ranks `n_1, ..., n_r`.
    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    pub fn matrices(&self) -> &[Vec<Vec<u32>>] {
        &self.matrices
    }

    pub fn entry(&self, point: usize, row: usize, block: usize) -> u32 {
        self.matrices[point][row][block]
    }

    fn columns(&self, data: &QuasiParabolicData, cols: std::ops::Range<usize>) -> QuasiParabolicData {
        let mults: Vec<Vec<u32>> =
            self.matrices.iter().map(|m| m.iter().map(|row| row[cols.clone()].iter().sum()).collect()).collect();
        data.with_multiplicities(&mults).expect("column sums form valid data")
    }

    /// Block `k` (0-based) as data with the ambient weights.
    pub fn block(&self, data: &QuasiParabolicData, k: usize) -> QuasiParabolicData {
        self.columns(data, k..k + 1)
    }

    /// Sum of the first `j` blocks.
    pub fn prefix(&self, data: &QuasiParabolicData, j: usize) -> QuasiParabolicData {
        self.columns(data, 0..j)
    }

    /// Sum of blocks `j..r`.
    pub fn suffix(&self, data: &QuasiParabolicData, j: usize) -> QuasiParabolicData {
        self.columns(data, j..self.len())
    }

    fn restrict(&self, cols: std::ops::Range<usize>) -> Partition {
        Partition {
            ranks: self.ranks[cols.clone()].to_vec(),
            matrices: self.matrices.iter().map(|m| m.iter().map(|row| row[cols.clone()].to_vec()).collect()).collect(),
        }
    }

    /// The partition of [`Self::prefix`] given by the first `j` columns.
    pub fn induced_prefix(&self, j: usize) -> Partition {
        self.restrict(0..j)
    }

    /// The partition of [`Self::suffix`] given by columns `j..r`.
    pub fn induced_suffix(&self, j: usize) -> Partition {
        self.restrict(j..self.len())
    }

    /// `sum_P sum_(k>l) sum_(i>t) I[i][k] I[t][l]`.
    pub fn sigma(&self) -> i64 {
        self.cross_sum(|i, t| i > t)
    }

    /// `sum_P sum_(k>l) sum_(i<t) I[i][k] I[t][l]`.
    pub fn sigma_prime(&self) -> i64 {
        self.cross_sum(|i, t| i < t)
    }

    fn cross_sum(&self, rows: impl Fn(usize, usize) -> bool) -> i64 {
        let r = self.len();
        let mut s = 0i64;
        for m in &self.matrices {
            for k in 0..r {
                for l in 0..k {
                    for (i, ri) in m.iter().enumerate() {
                        for (t, rt) in m.iter().enumerate() {
                            if rows(i, t) {
                                s += ri[k] as i64 * rt[l] as i64;
                            }
                        }
                    }
                }
            }
        }
        s
    }

    /// Exponent `N` of the Harder-Narasimhan strata: spread minus sigma.
    pub fn n_exp(&self, degrees: &[i64]) -> i64 {
        spread(&self.ranks, degrees) - self.sigma()
    }

    /// Exponent `C` of the parabolic Siegel strata,
    /// `sigma - spread + (g-1) sum_(l<k) n_l n_k`.
    pub fn c_exp(&self, degrees: &[i64], genus: u32) -> i64 {
        self.sigma() - spread(&self.ranks, degrees) + (genus as i64 - 1) * self.pair_product()
    }

    /// `sum_(i<j) n_i n_j`.
    pub fn pair_product(&self) -> i64 {
        let mut s = 0i64;
        for j in 0..self.len() {
            for i in 0..j {
                s += self.ranks[i] as i64 * self.ranks[j] as i64;
            }
        }
        s
    }

    /// `M' = -(n - n_r) d - sigma + (2n - n_1 - n_r)`.
    pub fn m_prime(&self, degree: i64) -> i64 {
        let n: i64 = self.ranks.iter().map(|&x| x as i64).sum();
        let n1 = self.ranks[0] as i64;
        let nr = *self.ranks.last().unwrap() as i64;
        -(n - nr) * degree - self.sigma() + (2 * n - n1 - nr)
    }

    fn floor_terms(&self, data: &QuasiParabolicData, lambda: &Rational) -> Vec<(i64, i64)> {
        let mut out = Vec::with_capacity(self.len().saturating_sub(1));
        let mut prefix_rank = 0i64;
        for k in 0..self.len().saturating_sub(1) {
            prefix_rank += self.ranks[k] as i64;
            let x = lambda * Rational::from_integer(prefix_rank.into()) - self.prefix(data, k + 1).alpha();
            out.push(((self.ranks[k] + self.ranks[k + 1]) as i64, floor_i64(&x)));
        }
        out
    }

    /// `M = sum_k (n_k + n_(k+1)) [N_k lambda - alpha(R_(<=k))]`.
    pub fn m_floor(&self, data: &QuasiParabolicData, lambda: &Rational) -> i64 {
        self.floor_terms(data, lambda).iter().map(|(w, f)| w * f).sum()
    }

    /// `M_g = sum_k (n_k + n_(k+1)) ([N_k lambda - alpha(R_(<=k))] + 1) + (g-1) sum_(i<j) n_i n_j`.
    pub fn m_g(&self, data: &QuasiParabolicData, lambda: &Rational, genus: u32) -> i64 {
        let floors: i64 = self.floor_terms(data, lambda).iter().map(|(w, f)| w * (f + 1)).sum();
        floors + (genus as i64 - 1) * self.pair_product()
    }

    /// `delta_R` of the first `k` blocks, the correction in the additivity of sigma.
    pub fn prefix_delta(&self, data: &QuasiParabolicData, k: usize) -> i64 {
        delta(data, &self.prefix(data, k))
    }
}

/// Compositions of `n` into positive parts, lexicographic.
pub fn compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Non-negative matrices with the given row and column sums, row-major
/// lexicographic.
fn matrices_with_margins(rows: &[u32], cols: &[u32]) -> Vec<Vec<Vec<u32>>> {
    fn rec(rows: &[u32], cols: &[u32], cur: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        match rows.split_first() {
            None => {
                if cols.iter().all(|c| c.is_zero()) {
                    out.push(cur.clone());
                }
            }
            Some((&r0, rest)) => {
                let remaining: u32 = rest.iter().sum();
                for v in bounded_vectors(cols, r0) {
                    let left: Vec<u32> = cols.iter().zip(&v).map(|(c, x)| c - x).collect();
                    if left.iter().sum::<u32>() != remaining {
                        continue;
                    }
                    cur.push(v);
                    rec(rest, &left, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(rows, cols, &mut Vec::new(), &mut out);
    out
}

/// All partitions of every length: compositions of `n(R)` in lexicographic
/// order, then per-point matrices in row-major lexicographic order with the
/// last point varying fastest.
pub fn enumerate_partitions(data: &QuasiParabolicData) -> Vec<Partition> {
    let mut out = Vec::new();
    for comp in compositions(data.rank()) {
        let per_point: Vec<Vec<Vec<Vec<u32>>>> =
            data.points().iter().map(|p| matrices_with_margins(p.multiplicities(), &comp)).collect();
        for mats in cartesian(&per_point) {
            out.push(Partition { ranks: comp.clone(), matrices: mats });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};
    use crate::parabolic::ParabolicPoint;

    fn one_point(m: &[u32]) -> QuasiParabolicData {
        let w = (0..m.len() as i64).map(|i| rat(i, m.len() as i64 + 1)).collect();
        QuasiParabolicData::new(vec![ParabolicPoint::new(w, m.to_vec()).unwrap()]).unwrap()
    }

    #[test]
    fn partition_counts() {
        assert_eq!(enumerate_partitions(&one_point(&[1, 1])).len(), 3);
        assert_eq!(enumerate_partitions(&one_point(&[1, 1, 1])).len(), 13);
        let two = QuasiParabolicData::new(vec![one_point(&[1, 1]).points()[0].clone(); 2]).unwrap();
        assert_eq!(enumerate_partitions(&two).len(), 5);
    }

    #[test]
    fn compositions_are_lexicographic() {
        assert_eq!(compositions(3), vec![vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![3]]);
    }

    fn diag(r: &QuasiParabolicData) -> Partition {
        Partition::new(r, vec![vec![vec![1, 0], vec![0, 1]]]).unwrap()
    }

    fn antidiag(r: &QuasiParabolicData) -> Partition {
        Partition::new(r, vec![vec![vec![0, 1], vec![1, 0]]]).unwrap()
    }

    #[test]
    fn blocks_and_prefixes() {
        let r = one_point(&[1, 1]);
        let i = diag(&r);
        assert_eq!(i.block(&r, 0).multiplicity_matrix(), vec![vec![1, 0]]);
        assert_eq!(i.block(&r, 1).multiplicity_matrix(), vec![vec![0, 1]]);
        assert_eq!(i.prefix(&r, 1).multiplicity_matrix(), vec![vec![1, 0]]);
        assert_eq!(i.suffix(&r, 1).multiplicity_matrix(), vec![vec![0, 1]]);
        let whole = Partition::new(&r, vec![vec![vec![1], vec![1]]]).unwrap();
        assert_eq!(whole.block(&r, 0), r);
    }

    #[test]
    fn sigma_values() {
        let r = one_point(&[1, 1]);
        assert_eq!((diag(&r).sigma(), diag(&r).sigma_prime()), (1, 0));
        assert_eq!((antidiag(&r).sigma(), antidiag(&r).sigma_prime()), (0, 1));
    }

    #[test]
    fn n_exp_values() {
        let r = one_point(&[1, 1]);
        assert_eq!(diag(&r).n_exp(&[1, 0]), 0);
        assert_eq!(antidiag(&r).n_exp(&[1, 0]), 1);
        let whole = Partition::new(&r, vec![vec![vec![1], vec![1]]]).unwrap();
        assert_eq!(whole.n_exp(&[5]), 0);
    }

    #[test]
    fn m_values() {
        let w =
            QuasiParabolicData::new(vec![ParabolicPoint::new(vec![int(0), rat(1, 3)], vec![1, 1]).unwrap()]).unwrap();
        let i = diag(&w);
        assert_eq!(i.m_floor(&w, &rat(1, 2)), 0);
        assert_eq!(i.m_g(&w, &rat(1, 2), 2), 3);
        let whole = Partition::new(&w, vec![vec![vec![1], vec![1]]]).unwrap();
        assert_eq!(whole.m_floor(&w, &rat(1, 2)), 0);
        assert_eq!(whole.m_g(&w, &rat(1, 2), 1), 0);
    }

    #[test]
    fn rejects_bad_margins() {
        let r = one_point(&[1, 1]);
        assert!(Partition::new(&r, vec![vec![vec![1, 0], vec![1, 0]]]).is_err());
        assert!(Partition::new(&r, vec![vec![vec![2, 0], vec![0, 0]]]).is_err());
    }
}
