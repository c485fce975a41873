//! Exact rational convex geometry: V-polytopes, nerves and representations.

mod construct;
pub mod lp;
mod nerve;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::GeometryError;
use crate::face::{Face, MAX_LABELS};

pub use construct::{
    augment_two_simplices, product_representation, single_missing_face_representation, wegner_representation,
    wegner_scaffold, AugmentResult, WegnerScaffold, WitnessSource,
};
pub use nerve::{
    hulls_have_common_point, nerve_of_boxes, nerve_of_convex_family, nerve_with_witnesses, verify_nerve_exhaustive,
    verify_representation, ExhaustiveCheck, NerveData,
};

/// Products with at most this many generators are written out in full.
pub const EXPAND_LIMIT: u128 = 4096;

/// Parses `"p"` or `"p/q"` with `q > 0`.
pub fn parse_rational(s: &str) -> Result<BigRational, GeometryError> {
    let bad = || GeometryError::BadRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if !den.is_positive() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalPoint(pub Vec<BigRational>);

impl RationalPoint {
    pub fn origin(dim: usize) -> Self {
        RationalPoint(vec![BigRational::zero(); dim])
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        RationalPoint(coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn concat(&self, other: &RationalPoint) -> RationalPoint {
        RationalPoint(self.0.iter().chain(&other.0).cloned().collect())
    }

    pub fn with_coordinate(&self, c: BigRational) -> RationalPoint {
        let mut v = self.0.clone();
        v.push(c);
        RationalPoint(v)
    }

    pub fn barycenter(points: &[RationalPoint]) -> RationalPoint {
        let dim = points[0].dim();
        let count = BigRational::from_integer(BigInt::from(points.len()));
        let coords = (0..dim).map(|c| points.iter().map(|p| &p.0[c]).sum::<BigRational>() / &count).collect();
        RationalPoint(coords)
    }
}

impl fmt::Debug for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for RationalPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalPoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts: Vec<String> = Vec::deserialize(deserializer)?;
        parts
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()
            .map(RationalPoint)
            .map_err(D::Error::custom)
    }
}

/// Convex hull of a finite point set, possibly stored as a Cartesian product
/// of lower-dimensional point sets. `conv(A) × conv(B) = conv(A × B)`, so a
/// product is the hull of all concatenations of factor generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VPolytope {
    factors: Vec<Vec<RationalPoint>>,
}

impl VPolytope {
    pub fn new(generators: Vec<RationalPoint>) -> Result<Self, GeometryError> {
        Ok(VPolytope { factors: vec![normalize_generators(generators)?] })
    }

    pub fn point(p: RationalPoint) -> Self {
        VPolytope { factors: vec![vec![p]] }
    }

    pub fn product(parts: &[VPolytope]) -> Result<Self, GeometryError> {
        if parts.is_empty() {
            return Err(GeometryError::EmptyInput);
        }
        Ok(VPolytope { factors: parts.iter().flat_map(|p| p.factors.iter().cloned()).collect() })
    }

    pub fn dim(&self) -> usize {
        self.layout().iter().sum()
    }

    /// Dimension of each product factor.
    pub fn layout(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f[0].dim()).collect()
    }

    pub fn factors(&self) -> &[Vec<RationalPoint>] {
        &self.factors
    }

    pub fn is_product(&self) -> bool {
        self.factors.len() > 1
    }

    /// Number of generators once the product is expanded (saturating).
    pub fn generator_count(&self) -> u128 {
        self.factors.iter().fold(1u128, |acc, f| acc.saturating_mul(f.len() as u128))
    }

    /// Expands the product into a plain generator list.
    pub fn generators(&self, limit: u128) -> Result<Vec<RationalPoint>, GeometryError> {
        let count = self.generator_count();
        if count > limit {
            return Err(GeometryError::ResourceLimit { what: "expanded generators", actual: count, limit });
        }
        let mut out = vec![RationalPoint(Vec::new())];
        for factor in &self.factors {
            out = out.iter().flat_map(|p| factor.iter().map(move |g| p.concat(g))).collect();
        }
        Ok(out)
    }

    pub fn flattened(&self, limit: u128) -> Result<VPolytope, GeometryError> {
        if !self.is_product() {
            return Ok(self.clone());
        }
        VPolytope::new(self.generators(limit)?)
    }

    /// Barycenter of the expanded generator set, computed factorwise.
    pub fn barycenter(&self) -> RationalPoint {
        self.factors
            .iter()
            .map(|f| RationalPoint::barycenter(f))
            .fold(RationalPoint(Vec::new()), |acc, p| acc.concat(&p))
    }

    /// A generator: the first point of every factor.
    pub fn some_point(&self) -> RationalPoint {
        self.factors.iter().fold(RationalPoint(Vec::new()), |acc, f| acc.concat(&f[0]))
    }

    /// Exact membership by solving the convex-combination system per factor.
    pub fn contains(&self, p: &RationalPoint) -> bool {
        if p.dim() != self.dim() {
            return false;
        }
        let mut offset = 0;
        for factor in &self.factors {
            let d = factor[0].dim();
            let slice = RationalPoint(p.0[offset..offset + d].to_vec());
            if !nerve::in_hull(factor, &slice) {
                return false;
            }
            offset += d;
        }
        true
    }
}

fn normalize_generators(mut generators: Vec<RationalPoint>) -> Result<Vec<RationalPoint>, GeometryError> {
    let Some(first) = generators.first() else {
        return Err(GeometryError::EmptyInput);
    };
    let dim = first.dim();
    if let Some(bad) = generators.iter().find(|g| g.dim() != dim) {
        return Err(GeometryError::DimensionMismatch { expected: dim, actual: bad.dim() });
    }
    generators.sort();
    generators.dedup();
    Ok(generators)
}

impl Serialize for VPolytope {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Product<'a> {
            product: &'a [Vec<RationalPoint>],
        }
        if !self.is_product() {
            self.factors[0].serialize(serializer)
        } else if self.generator_count() <= EXPAND_LIMIT {
            self.generators(EXPAND_LIMIT).map_err(serde::ser::Error::custom)?.serialize(serializer)
        } else {
            Product { product: &self.factors }.serialize(serializer)
        }
    }
}

impl<'de> Deserialize<'de> for VPolytope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Plain(Vec<RationalPoint>),
            Product { product: Vec<Vec<RationalPoint>> },
        }
        match Raw::deserialize(deserializer)? {
            Raw::Plain(g) => VPolytope::new(g).map_err(D::Error::custom),
            Raw::Product { product } => {
                let parts =
                    product.into_iter().map(VPolytope::new).collect::<Result<Vec<_>, _>>().map_err(D::Error::custom)?;
                VPolytope::product(&parts).map_err(D::Error::custom)
            }
        }
    }
}

/// One polytope (or the empty set, `None`) per vertex label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawRepresentation")]
pub struct Representation {
    pub dim: usize,
    pub sets: BTreeMap<u32, Option<VPolytope>>,
}

#[derive(Deserialize)]
struct RawRepresentation {
    dim: usize,
    sets: BTreeMap<u32, Option<VPolytope>>,
}

impl TryFrom<RawRepresentation> for Representation {
    type Error = GeometryError;

    fn try_from(raw: RawRepresentation) -> Result<Self, Self::Error> {
        Representation::new(raw.dim, raw.sets)
    }
}

impl Representation {
    pub fn new(dim: usize, sets: BTreeMap<u32, Option<VPolytope>>) -> Result<Self, GeometryError> {
        if let Some(&v) = sets.keys().find(|&&v| v >= MAX_LABELS) {
            return Err(crate::error::ComplexError::LabelOutOfRange(v).into());
        }
        for p in sets.values().flatten() {
            if p.dim() != dim {
                return Err(GeometryError::DimensionMismatch { expected: dim, actual: p.dim() });
            }
        }
        Ok(Representation { dim, sets })
    }

    pub fn vertices(&self) -> Face {
        Face::from_labels(self.sets.keys().copied()).expect("labels checked on construction")
    }

    pub fn get(&self, v: u32) -> Option<&VPolytope> {
        self.sets.get(&v).and_then(|p| p.as_ref())
    }

    /// Total number of stored (unexpanded) generators.
    pub fn stored_generators(&self) -> usize {
        self.sets.values().flatten().map(|p| p.factors.iter().map(Vec::len).sum::<usize>()).sum()
    }
}

/// Axis-parallel boxes: per vertex, one closed interval per coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxFamily {
    pub dim: usize,
    pub boxes: BTreeMap<u32, Vec<(BigRational, BigRational)>>,
}

impl BoxFamily {
    pub fn new(dim: usize, boxes: BTreeMap<u32, Vec<(BigRational, BigRational)>>) -> Result<Self, GeometryError> {
        if let Some(&v) = boxes.keys().find(|&&v| v >= MAX_LABELS) {
            return Err(crate::error::ComplexError::LabelOutOfRange(v).into());
        }
        for (v, b) in &boxes {
            if b.len() != dim {
                return Err(GeometryError::DimensionMismatch { expected: dim, actual: b.len() });
            }
            if let Some((lo, hi)) = b.iter().find(|(lo, hi)| lo > hi) {
                return Err(GeometryError::Malformed(format!(
                    "box {v} has interval [{}, {}] with lo > hi",
                    format_rational(lo),
                    format_rational(hi)
                )));
            }
        }
        Ok(BoxFamily { dim, boxes })
    }

    /// Integer intervals, for tests and built-in data.
    pub fn from_integers(dim: usize, boxes: &[(u32, &[(i64, i64)])]) -> Result<Self, GeometryError> {
        let q = |v: i64| BigRational::from_integer(v.into());
        BoxFamily::new(dim, boxes.iter().map(|(v, iv)| (*v, iv.iter().map(|&(a, b)| (q(a), q(b))).collect())).collect())
    }

    pub fn vertices(&self) -> Face {
        Face::from_labels(self.boxes.keys().copied()).expect("labels checked on construction")
    }

    /// Each box as the hull of its corners.
    pub fn to_representation(&self) -> Result<Representation, GeometryError> {
        let mut sets = BTreeMap::new();
        for (&v, intervals) in &self.boxes {
            let parts = intervals
                .iter()
                .map(|(lo, hi)| VPolytope::new(vec![RationalPoint(vec![lo.clone()]), RationalPoint(vec![hi.clone()])]))
                .collect::<Result<Vec<_>, _>>()?;
            let poly = if parts.is_empty() {
                VPolytope::point(RationalPoint(Vec::new()))
            } else {
                VPolytope::product(&parts)?.flattened(EXPAND_LIMIT)?
            };
            sets.insert(v, Some(poly));
        }
        Representation::new(self.dim, sets)
    }
}

impl Serialize for BoxFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out {
            dim: usize,
            boxes: BTreeMap<u32, Vec<[String; 2]>>,
        }
        let boxes = self
            .boxes
            .iter()
            .map(|(v, b)| (*v, b.iter().map(|(lo, hi)| [format_rational(lo), format_rational(hi)]).collect()))
            .collect();
        Out { dim: self.dim, boxes }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BoxFamily {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            dim: usize,
            boxes: BTreeMap<u32, Vec<[String; 2]>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut boxes = BTreeMap::new();
        for (v, b) in raw.boxes {
            let intervals = b
                .iter()
                .map(|[lo, hi]| Ok((parse_rational(lo)?, parse_rational(hi)?)))
                .collect::<Result<Vec<_>, GeometryError>>()
                .map_err(D::Error::custom)?;
            boxes.insert(v, intervals);
        }
        BoxFamily::new(raw.dim, boxes).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("3").unwrap(), q(3, 1));
        assert_eq!(parse_rational("-2/4").unwrap(), q(-1, 2));
        assert_eq!(format_rational(&q(6, 4)), "3/2");
        assert_eq!(format_rational(&q(-4, 2)), "-2");
        for bad in ["1/0", "1/-2", "x", "1/2/3", ""] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn polytope_normalization() {
        let p = VPolytope::new(vec![
            RationalPoint::from_integers(&[1, 0]),
            RationalPoint::from_integers(&[0, 0]),
            RationalPoint::from_integers(&[1, 0]),
        ])
        .unwrap();
        assert_eq!(p.factors()[0].len(), 2);
        assert!(VPolytope::new(vec![]).is_err());
        assert!(
            VPolytope::new(vec![RationalPoint::from_integers(&[1]), RationalPoint::from_integers(&[1, 2])]).is_err()
        );
    }

    #[test]
    fn product_bookkeeping() {
        let seg = VPolytope::new(vec![RationalPoint::from_integers(&[0]), RationalPoint::from_integers(&[1])]).unwrap();
        let tri = VPolytope::new(vec![
            RationalPoint::from_integers(&[0, 0]),
            RationalPoint::from_integers(&[1, 0]),
            RationalPoint::from_integers(&[0, 1]),
        ])
        .unwrap();
        let p = VPolytope::product(&[seg.clone(), tri.clone(), seg]).unwrap();
        assert_eq!(p.dim(), 4);
        assert_eq!(p.layout(), vec![1, 2, 1]);
        assert_eq!(p.generator_count(), 12);
        assert_eq!(p.generators(100).unwrap().len(), 12);
        assert!(p.generators(11).is_err());
        assert_eq!(p.barycenter(), RationalPoint(vec![q(1, 2), q(1, 3), q(1, 3), q(1, 2)]));
        assert!(p.contains(&RationalPoint(vec![q(1, 2), q(1, 2), q(1, 2), q(0, 1)])));
        assert!(!p.contains(&RationalPoint(vec![q(1, 2), q(2, 3), q(1, 2), q(0, 1)])));
    }

    #[test]
    fn representation_json_round_trip() {
        let json = r#"{"dim":2,"sets":{"1":[["0","0"],["1/2","0"]],"2":null}}"#;
        let rep: Representation = serde_json::from_str(json).unwrap();
        assert_eq!(rep.vertices(), Face::from_labels([1, 2]).unwrap());
        assert!(rep.get(2).is_none());
        assert_eq!(serde_json::to_string(&rep).unwrap(), json);
        let bad = r#"{"dim":3,"sets":{"1":[["0","0"]]}}"#;
        assert!(serde_json::from_str::<Representation>(bad).is_err());
    }

    #[test]
    fn large_products_use_the_product_form() {
        let seg = VPolytope::new(vec![RationalPoint::from_integers(&[0]), RationalPoint::from_integers(&[1])]).unwrap();
        let p = VPolytope::product(&vec![seg; 13]).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert!(json.starts_with(r#"{"product":"#));
        let back: VPolytope = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn box_json() {
        let json = r#"{"dim":1,"boxes":{"1":[["0","1"]],"2":[["1/2","2"]]}}"#;
        let b: BoxFamily = serde_json::from_str(json).unwrap();
        assert_eq!(serde_json::to_string(&b).unwrap(), json);
        assert!(serde_json::from_str::<BoxFamily>(r#"{"dim":1,"boxes":{"1":[["2","1"]]}}"#).is_err());
    }
}
