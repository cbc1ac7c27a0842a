use crate::algebra::rational::format_rational;
use crate::{Error, Rational, Result};
use num_traits::{One, Zero};
use std::fmt;

/// Flag type and weights at one marked point.
///
/// Rows with multiplicity zero are kept: they are how sub-data and blocks
/// remember which weights they avoid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParabolicPoint {
    weights: Vec<Rational>,
    multiplicities: Vec<u32>,
}

impl ParabolicPoint {
    pub fn new(weights: Vec<Rational>, multiplicities: Vec<u32>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidData("a point needs at least one weight".into()));
        }
        if weights.len() != multiplicities.len() {
            return Err(Error::InvalidData(format!(
                "{} weights but {} multiplicities",
                weights.len(),
                multiplicities.len()
            )));
        }
        for w in &weights {
            if *w < Rational::zero() || *w >= Rational::one() {
                return Err(Error::InvalidData(format!("weight {w} outside [0,1)")));
            }
        }
        if weights.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::InvalidData("weights must be strictly increasing".into()));
        }
        Ok(Self { weights, multiplicities })
    }

    /// Complete flag: every multiplicity one.
    pub fn full_flag(weights: Vec<Rational>) -> Result<Self> {
        let m = vec![1; weights.len()];
        Self::new(weights, m)
    }

    pub fn m(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn rank(&self) -> u32 {
        self.multiplicities.iter().sum()
    }

    fn alpha(&self) -> Rational {
        self.weights
            .iter()
            .zip(&self.multiplicities)
            .map(|(w, &m)| w * Rational::from_integer(m.into()))
            .fold(Rational::zero(), |a, b| a + b)
    }

    fn flag_dim(&self) -> i64 {
        let n = self.rank() as i64;
        let sq: i64 = self.multiplicities.iter().map(|&m| (m as i64) * (m as i64)).sum();
        (n * n - sq) / 2
    }
}

/// Multiplicities and weights at every marked point, all of the same rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuasiParabolicData {
    points: Vec<ParabolicPoint>,
}

/// Sub-data share the weights of the data they come from; only the
/// multiplicities shrink.
pub type SubData = QuasiParabolicData;

impl QuasiParabolicData {
    pub fn new(points: Vec<ParabolicPoint>) -> Result<Self> {
        let first = points.first().ok_or_else(|| Error::InvalidData("at least one point is required".into()))?;
        let n = first.rank();
        if n == 0 {
            return Err(Error::InvalidData("rank must be positive".into()));
        }
        if let Some(p) = points.iter().position(|p| p.rank() != n) {
            return Err(Error::InvalidData(format!(
                "point {p} has multiplicity sum {} but point 0 has {n}",
                points[p].rank()
            )));
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[ParabolicPoint] {
        &self.points
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn rank(&self) -> u32 {
        self.points[0].rank()
    }

    /// `sum_P sum_i R_i alpha_i`.
    pub fn alpha(&self) -> Rational {
        self.points.iter().map(ParabolicPoint::alpha).fold(Rational::zero(), |a, b| a + b)
    }

    /// Dimension of the product of partial flag varieties.
    pub fn flag_dim(&self) -> i64 {
        self.points.iter().map(ParabolicPoint::flag_dim).sum()
    }

    /// Complex dimension of the fixed-determinant moduli space.
    pub fn moduli_dim(&self, genus: u32) -> i64 {
        let n = self.rank() as i64;
        self.flag_dim() + (n * n - 1) * (genus as i64 - 1)
    }

    pub fn multiplicity_matrix(&self) -> Vec<Vec<u32>> {
        self.points.iter().map(|p| p.multiplicities.clone()).collect()
    }

    /// Same weights, new multiplicities.
    pub fn with_multiplicities(&self, mults: &[Vec<u32>]) -> Result<Self> {
        if mults.len() != self.points.len() {
            return Err(Error::InvalidData("one multiplicity list per point is required".into()));
        }
        let points = self
            .points
            .iter()
            .zip(mults)
            .map(|(p, m)| ParabolicPoint::new(p.weights.clone(), m.clone()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(points)
    }

    /// `R - L` for a sub-data `L`.
    pub fn complement(&self, sub: &SubData) -> Result<Self> {
        let mults: Vec<Vec<u32>> = self
            .points
            .iter()
            .zip(&sub.points)
            .map(|(p, q)| {
                p.multiplicities
                    .iter()
                    .zip(&q.multiplicities)
                    .map(|(&a, &b)| a.checked_sub(b).ok_or_else(|| Error::InvalidData("not a sub-data".into())))
                    .collect()
            })
            .collect::<Result<_>>()?;
        self.with_multiplicities(&mults)
    }

    /// Drops zero rows, leaving strictly positive multiplicities.
    pub fn normalize_seshadri(&self) -> Self {
        let points = self
            .points
            .iter()
            .map(|p| {
                let (w, m): (Vec<_>, Vec<_>) =
                    p.weights.iter().cloned().zip(p.multiplicities.iter().copied()).filter(|(_, m)| *m > 0).unzip();
                ParabolicPoint { weights: w, multiplicities: m }
            })
            .collect();
        Self { points }
    }

    /// Reinstates zero rows against ambient weight lists, inverting
    /// [`Self::normalize_seshadri`].
    pub fn embed_into(&self, ambient: &[Vec<Rational>]) -> Result<Self> {
        if ambient.len() != self.points.len() {
            return Err(Error::InvalidData("one ambient weight list per point is required".into()));
        }
        let mut points = Vec::with_capacity(ambient.len());
        for (p, amb) in self.points.iter().zip(ambient) {
            let mut mult = vec![0u32; amb.len()];
            for (w, &m) in p.weights.iter().zip(&p.multiplicities) {
                if m == 0 {
                    continue;
                }
                let i = amb
                    .iter()
                    .position(|a| a == w)
                    .ok_or_else(|| Error::InvalidData(format!("weight {w} missing from the ambient family")))?;
                mult[i] += m;
            }
            points.push(ParabolicPoint::new(amb.clone(), mult)?);
        }
        Self::new(points)
    }
}

impl fmt::Display for QuasiParabolicData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            let m: Vec<String> = p.multiplicities.iter().map(u32::to_string).collect();
            let w: Vec<String> = p.weights.iter().map(format_rational).collect();
            write!(f, "({}) at weights ({})", m.join(","), w.join(","))?;
        }
        Ok(())
    }
}

/// Every sub-data `L` with `0 < n(L) < n(R)`, ordered by rank and then
/// lexicographically point by point.
pub fn enumerate_subdata(data: &QuasiParabolicData) -> Vec<SubData> {
    let n = data.rank();
    let mut out = Vec::new();
    for k in 1..n {
        let per_point: Vec<Vec<Vec<u32>>> = data.points.iter().map(|p| bounded_vectors(&p.multiplicities, k)).collect();
        for choice in cartesian(&per_point) {
            out.push(data.with_multiplicities(&choice).expect("sub-data is valid"));
        }
    }
    out
}

/// Vectors `v <= bound` (entrywise) with `sum v = total`, lexicographic.
pub(crate) fn bounded_vectors(bound: &[u32], total: u32) -> Vec<Vec<u32>> {
    fn rec(bound: &[u32], total: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if bound.is_empty() {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest: u32 = bound[1..].iter().sum();
        let lo = total.saturating_sub(rest);
        for x in lo..=bound[0].min(total) {
            cur.push(x);
            rec(&bound[1..], total - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(bound, total, &mut Vec::new(), &mut out);
    out
}

/// Lexicographic Cartesian product, last factor fastest.
pub(crate) fn cartesian<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for list in lists {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for prefix in &out {
            for x in list {
                let mut v = prefix.clone();
                v.push(x.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Genus, degree and quasi-parabolic data.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Instance {
    pub genus: u32,
    pub degree: i64,
    pub data: QuasiParabolicData,
}

impl Instance {
    pub fn new(genus: u32, degree: i64, data: QuasiParabolicData) -> Self {
        Self { genus, degree, data }
    }

    /// Parabolic slope `(d + alpha(R)) / n(R)`.
    pub fn lambda(&self) -> Rational {
        (Rational::from_integer(self.degree.into()) + self.data.alpha())
            / Rational::from_integer(self.data.rank().into())
    }

    pub fn moduli_dim(&self) -> i64 {
        self.data.moduli_dim(self.genus)
    }

    pub fn with_genus(&self, genus: u32) -> Self {
        Self { genus, ..self.clone() }
    }

    pub fn with_degree(&self, degree: i64) -> Self {
        Self { degree, ..self.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn pt(w: &[(i64, i64)], m: &[u32]) -> ParabolicPoint {
        ParabolicPoint::new(w.iter().map(|&(a, b)| rat(a, b)).collect(), m.to_vec()).unwrap()
    }

    #[test]
    fn rank_and_validation() {
        let r = QuasiParabolicData::new(vec![pt(&[(0, 1), (1, 3), (1, 2)], &[1, 1, 1])]).unwrap();
        assert_eq!(r.rank(), 3);
        assert!(QuasiParabolicData::new(vec![pt(&[(0, 1), (1, 2)], &[1, 1]), pt(&[(0, 1), (1, 2)], &[2, 0])]).is_ok());
        assert!(QuasiParabolicData::new(vec![pt(&[(0, 1), (1, 2)], &[1, 1]), pt(&[(0, 1), (1, 2)], &[1, 0])]).is_err());
        assert_eq!(QuasiParabolicData::new(vec![pt(&[(0, 1)], &[2])]).unwrap().rank(), 2);
        assert!(ParabolicPoint::new(vec![rat(1, 2), rat(1, 3)], vec![1, 1]).is_err());
        assert!(ParabolicPoint::new(vec![int(1)], vec![1]).is_err());
    }

    #[test]
    fn alpha_values() {
        let r = QuasiParabolicData::new(vec![pt(&[(0, 1), (1, 8), (1, 4), (1, 2)], &[1, 1, 1, 1])]).unwrap();
        assert_eq!(r.alpha(), rat(7, 8));
        let l = QuasiParabolicData::new(vec![pt(&[(0, 1), (1, 3)], &[1, 0])]).unwrap();
        assert_eq!(l.alpha(), int(0));
    }

    #[test]
    fn seshadri_round_trip() {
        let r = QuasiParabolicData::new(vec![pt(&[(0, 1), (1, 4), (1, 2)], &[1, 0, 1])]).unwrap();
        let s = r.normalize_seshadri();
        assert_eq!(s, QuasiParabolicData::new(vec![pt(&[(0, 1), (1, 2)], &[1, 1])]).unwrap());
        assert_eq!(s.alpha(), r.alpha());
        let ambient = vec![vec![int(0), rat(1, 4), rat(1, 2)]];
        assert_eq!(s.embed_into(&ambient).unwrap(), r);
    }

    #[test]
    fn subdata_counts() {
        let r = QuasiParabolicData::new(vec![pt(&[(0, 1), (1, 3)], &[1, 1])]).unwrap();
        assert_eq!(enumerate_subdata(&r).len(), 2);
        let r2 = QuasiParabolicData::new(vec![pt(&[(0, 1), (1, 3)], &[1, 1]), pt(&[(0, 1), (1, 5)], &[1, 1])]).unwrap();
        assert_eq!(enumerate_subdata(&r2).len(), 4);
        let r3 = QuasiParabolicData::new(vec![pt(&[(0, 1)], &[2])]).unwrap();
        assert_eq!(enumerate_subdata(&r3).len(), 1);
    }

    #[test]
    fn dimensions() {
        let r = QuasiParabolicData::new(vec![pt(&[(0, 1), (1, 3)], &[1, 1])]).unwrap();
        assert_eq!(r.flag_dim(), 1);
        assert_eq!(r.moduli_dim(2), 4);
        let r3 = QuasiParabolicData::new(vec![pt(&[(0, 1), (1, 12), (1, 4)], &[1, 1, 1])]).unwrap();
        assert_eq!(r3.moduli_dim(1), 3);
        let triv = QuasiParabolicData::new(vec![pt(&[(0, 1)], &[3])]).unwrap();
        assert_eq!(triv.moduli_dim(2), 8);
    }
}
