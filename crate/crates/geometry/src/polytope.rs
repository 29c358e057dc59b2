use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hull::{hull2, hull3, Shape};
use crate::rational::{common_denominator, RationalVector};

/// Affine dimension of a hull.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HullKind {
    Point,
    Segment,
    /// Two-dimensional: a full polygon in the plane, or a flat one in space.
    Polygon,
    /// Three-dimensional.
    Solid,
}

impl HullKind {
    pub fn affine_dim(self) -> usize {
        match self {
            HullKind::Point => 0,
            HullKind::Segment => 1,
            HullKind::Polygon => 2,
            HullKind::Solid => 3,
        }
    }
}

/// A facet together with its area vector (outward normal scaled by the
/// facet's (n-1)-volume).
///
/// Lower-dimensional bodies are treated as doubly covered: a flat polygon
/// in space has two facets with opposite normals, a segment in the plane
/// has two edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    /// Primitive integer outward normal.
    pub normal: Vec<BigInt>,
    pub area: RationalVector,
    /// Vertex indices, sorted.
    pub vertices: Vec<usize>,
}

/// An edge of a body in space with the two facets meeting there; a lone
/// segment has no facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub ends: [usize; 2],
    pub facets: Option<[usize; 2]>,
}

/// A convex polytope in the plane or in space, stored by its extreme points.
#[derive(Clone)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<RationalVector>,
    kind: HullKind,
    /// Oriented triangles covering the boundary (both sides for flat bodies).
    triangles: Vec<[usize; 3]>,
    facets: Vec<Facet>,
    edges: Vec<Edge>,
}

fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        v.to_vec()
    } else {
        v.iter().map(|x| x / &g).collect()
    }
}

fn int_cross(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn int_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Convex hull of a finite point set; see [`Polytope::new`].
pub fn convex_hull(points: &[RationalVector]) -> Result<Polytope> {
    Polytope::new(points.to_vec())
}

impl Polytope {
    /// Hull of the given points. All points must share the ambient
    /// dimension, which must be 2 or 3.
    pub fn new(mut points: Vec<RationalVector>) -> Result<Polytope> {
        let dim = points.first().ok_or(Error::Empty)?.dim();
        if !(2..=3).contains(&dim) {
            return Err(Error::UnsupportedDimension(dim));
        }
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: p.dim(),
            });
        }
        points.sort();
        points.dedup();
        let den = common_denominator(&points);
        let ints: Vec<Vec<BigInt>> = points.iter().map(|p| p.scaled_integers(&den)).collect();
        let shape = if dim == 2 { hull2(&ints) } else { hull3(&ints) };

        // Keep only hull vertices, in sorted order, and renumber.
        let used: Vec<usize> = match &shape {
            Shape::Point(p) => vec![*p],
            Shape::Segment(s) => s.to_vec(),
            Shape::Polygon(c) => c.clone(),
            Shape::Solid(t) => t.iter().flatten().copied().collect(),
        };
        let mut keep = used.clone();
        keep.sort_unstable();
        keep.dedup();
        let index: HashMap<usize, usize> = keep.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let vertices: Vec<RationalVector> = keep.iter().map(|&i| points[i].clone()).collect();
        let ints: Vec<Vec<BigInt>> = keep.iter().map(|&i| ints[i].clone()).collect();
        let shape = match shape {
            Shape::Point(p) => Shape::Point(index[&p]),
            Shape::Segment(s) => Shape::Segment(s.map(|v| index[&v])),
            Shape::Polygon(c) => Shape::Polygon(c.iter().map(|v| index[v]).collect()),
            Shape::Solid(t) => Shape::Solid(t.iter().map(|tr| tr.map(|v| index[&v])).collect()),
        };
        Ok(Polytope::assemble(dim, vertices, &ints, &den, shape))
    }

    /// Builds a solid from a triangulated boundary already known to be
    /// strictly convex with every vertex extreme, skipping the hull.
    pub(crate) fn from_convex_mesh(vertices: Vec<RationalVector>, triangles: Vec<[usize; 3]>) -> Polytope {
        let den = common_denominator(&vertices);
        let ints: Vec<Vec<BigInt>> = vertices.iter().map(|p| p.scaled_integers(&den)).collect();
        Polytope::assemble(3, vertices, &ints, &den, Shape::Solid(triangles))
    }

    fn assemble(dim: usize, vertices: Vec<RationalVector>, ints: &[Vec<BigInt>], den: &BigInt, shape: Shape) -> Polytope {
        let area_den = BigInt::from(2) * den.pow(dim as u32 - 1);
        let to_area = |v: &[BigInt]| RationalVector::from_bigints(v, &area_den);
        let mut out = Polytope {
            dim,
            vertices,
            kind: HullKind::Point,
            triangles: Vec::new(),
            facets: Vec::new(),
            edges: Vec::new(),
        };
        match (dim, shape) {
            (_, Shape::Point(_)) => {}
            (2, Shape::Segment([a, b])) => {
                out.kind = HullKind::Segment;
                let e = int_sub(&ints[b], &ints[a]);
                let w = vec![&e[1] * 2, -&e[0] * 2];
                let neg: Vec<BigInt> = w.iter().map(|x| -x).collect();
                for (n, vs) in [(w, vec![a, b]), (neg, vec![a, b])] {
                    out.facets.push(Facet {
                        normal: primitive(&n),
                        area: to_area(&n),
                        vertices: sorted(vs),
                    });
                }
            }
            (2, Shape::Polygon(cycle)) => {
                out.kind = HullKind::Polygon;
                let k = cycle.len();
                for j in 0..k {
                    let (a, b) = (cycle[j], cycle[(j + 1) % k]);
                    let e = int_sub(&ints[b], &ints[a]);
                    // Counterclockwise boundary: outward normal is e turned clockwise.
                    let w = vec![&e[1] * 2, -&e[0] * 2];
                    out.facets.push(Facet {
                        normal: primitive(&w),
                        area: to_area(&w),
                        vertices: sorted(vec![a, b]),
                    });
                }
                for j in 1..k - 1 {
                    out.triangles.push([cycle[0], cycle[j], cycle[j + 1]]);
                }
            }
            (3, Shape::Segment([a, b])) => {
                out.kind = HullKind::Segment;
                out.edges.push(Edge {
                    ends: [a.min(b), a.max(b)],
                    facets: None,
                });
            }
            (3, Shape::Polygon(cycle)) => {
                out.kind = HullKind::Polygon;
                let k = cycle.len();
                let mut twice_area = vec![BigInt::zero(); 3];
                for j in 0..k {
                    let c = int_cross(&ints[cycle[j]], &ints[cycle[(j + 1) % k]]);
                    for (t, x) in twice_area.iter_mut().zip(c) {
                        *t += x;
                    }
                }
                let neg: Vec<BigInt> = twice_area.iter().map(|x| -x).collect();
                let vs = sorted(cycle.clone());
                for n in [&twice_area, &neg] {
                    out.facets.push(Facet {
                        normal: primitive(n),
                        area: to_area(n),
                        vertices: vs.clone(),
                    });
                }
                for j in 1..k - 1 {
                    out.triangles.push([cycle[0], cycle[j], cycle[j + 1]]);
                    out.triangles.push([cycle[0], cycle[j + 1], cycle[j]]);
                }
                for j in 0..k {
                    let (a, b) = (cycle[j], cycle[(j + 1) % k]);
                    out.edges.push(Edge {
                        ends: [a.min(b), a.max(b)],
                        facets: Some([0, 1]),
                    });
                }
            }
            (3, Shape::Solid(triangles)) => {
                out.kind = HullKind::Solid;
                let mut by_normal: BTreeMap<Vec<BigInt>, usize> = BTreeMap::new();
                let mut sums: Vec<Vec<BigInt>> = Vec::new();
                let mut members: Vec<Vec<usize>> = Vec::new();
                let mut facet_of = Vec::with_capacity(triangles.len());
                for t in &triangles {
                    let c = int_cross(&int_sub(&ints[t[1]], &ints[t[0]]), &int_sub(&ints[t[2]], &ints[t[0]]));
                    let key = primitive(&c);
                    let id = *by_normal.entry(key).or_insert_with(|| {
                        sums.push(vec![BigInt::zero(); 3]);
                        members.push(Vec::new());
                        sums.len() - 1
                    });
                    for (s, x) in sums[id].iter_mut().zip(&c) {
                        *s += x;
                    }
                    members[id].extend_from_slice(t);
                    facet_of.push(id);
                }
                // Facet ids in normal order, so the layout is canonical.
                let order: Vec<usize> = by_normal.values().copied().collect();
                let mut rank = vec![0; order.len()];
                for (r, &id) in order.iter().enumerate() {
                    rank[id] = r;
                }
                for (normal, &id) in &by_normal {
                    out.facets.push(Facet {
                        normal: normal.clone(),
                        area: to_area(&sums[id]),
                        vertices: sorted(members[id].clone()),
                    });
                }
                let mut directed: HashMap<(usize, usize), usize> = HashMap::new();
                for (ti, t) in triangles.iter().enumerate() {
                    for k in 0..3 {
                        directed.insert((t[k], t[(k + 1) % 3]), ti);
                    }
                }
                for (ti, t) in triangles.iter().enumerate() {
                    for k in 0..3 {
                        let (a, b) = (t[k], t[(k + 1) % 3]);
                        if a > b {
                            continue;
                        }
                        let other = directed[&(b, a)];
                        let (f, g) = (rank[facet_of[ti]], rank[facet_of[other]]);
                        if f != g {
                            out.edges.push(Edge {
                                ends: [a, b],
                                facets: Some([f, g]),
                            });
                        }
                    }
                }
                out.edges.sort_by_key(|e| e.ends);
                out.triangles = triangles;
            }
            (d, s) => unreachable!("hull shape {s:?} in dimension {d}"),
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The extreme points, sorted.
    pub fn vertices(&self) -> &[RationalVector] {
        &self.vertices
    }

    pub fn kind(&self) -> HullKind {
        self.kind
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.kind.affine_dim() == self.dim
    }

    /// True when the hull is lower-dimensional than the ambient space.
    pub fn is_degenerate(&self) -> bool {
        !self.is_full_dimensional()
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    /// Area vectors of all facets; they sum to zero.
    pub fn area_vectors(&self) -> Vec<RationalVector> {
        self.facets.iter().map(|f| f.area.clone()).collect()
    }

    /// Area vector of the facet with the given primitive normal, if any.
    pub fn area_vector_for(&self, normal: &[BigInt]) -> Option<&RationalVector> {
        self.facets.iter().find(|f| f.normal == normal).map(|f| &f.area)
    }

    /// Exact volume (area in the plane); zero for degenerate bodies.
    pub fn volume(&self) -> BigRational {
        if self.is_degenerate() {
            return BigRational::zero();
        }
        match self.dim {
            2 => {
                // Divergence theorem: area = (1/2) Σ h_f |w_f| with h_f |w_f| = v·w_f.
                let total: BigRational = self.facets.iter().map(|f| self.vertices[f.vertices[0]].dot(&f.area)).sum();
                total / BigRational::from_integer(2.into())
            }
            _ => {
                let total: BigRational = self
                    .triangles
                    .iter()
                    .map(|t| {
                        let [a, b, c] = t.map(|i| &self.vertices[i]);
                        a.dot(&b.cross(c))
                    })
                    .sum();
                total / BigRational::from_integer(6.into())
            }
        }
    }

    /// h(P, u) = max over vertices of u·v.
    pub fn support(&self, u: &RationalVector) -> BigRational {
        assert_eq!(u.dim(), self.dim, "direction dimension");
        self.vertices.iter().map(|v| v.dot(u)).max().expect("non-empty")
    }

    pub fn translate(&self, x: &RationalVector) -> Polytope {
        self.map_vertices(|v| v + x)
    }

    /// t·P; `t` may be negative or zero.
    pub fn scale(&self, t: &BigRational) -> Polytope {
        self.map_vertices(|v| v.scale(t))
    }

    /// Image under the linear map with the given rows.
    pub fn linear_image(&self, rows: &[RationalVector]) -> Polytope {
        assert_eq!(rows.len(), self.dim);
        self.map_vertices(|v| RationalVector(rows.iter().map(|r| r.dot(v)).collect()))
    }

    fn map_vertices(&self, f: impl Fn(&RationalVector) -> RationalVector) -> Polytope {
        Polytope::new(self.vertices.iter().map(f).collect()).expect("non-empty image")
    }

    /// P + Q as the hull of all pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Polytope> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut sums = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                sums.push(a + b);
            }
        }
        Polytope::new(sums)
    }

    /// Unit cube [0,1]^dim.
    pub fn unit_cube(dim: usize) -> Polytope {
        let pts = (0..1usize << dim)
            .map(|mask| RationalVector::from_ints(&(0..dim).map(|k| ((mask >> k) & 1) as i64).collect::<Vec<_>>()))
            .collect();
        Polytope::new(pts).expect("cube")
    }

    /// Cube [-r, r]^dim.
    pub fn centered_cube(dim: usize, r: &BigRational) -> Polytope {
        let two = BigRational::from_integer(2.into());
        Polytope::unit_cube(dim)
            .scale(&(r * &two))
            .translate(&RationalVector(vec![-r.clone(); dim]))
    }

    /// conv{0, e_1, ..., e_dim}.
    pub fn standard_simplex(dim: usize) -> Polytope {
        let mut pts = vec![RationalVector::zero(dim)];
        for k in 0..dim {
            let mut v = RationalVector::zero(dim);
            v.0[k] = BigRational::one();
            pts.push(v);
        }
        Polytope::new(pts).expect("simplex")
    }

    /// Segment from `a` to `b`.
    pub fn segment(a: RationalVector, b: RationalVector) -> Polytope {
        Polytope::new(vec![a, b]).expect("segment")
    }

    /// Is the point inside (boundary included)?
    pub fn contains(&self, p: &RationalVector) -> bool {
        if self.is_degenerate() {
            let with = Polytope::new(self.vertices.iter().cloned().chain([p.clone()]).collect()).expect("non-empty");
            return with.vertices == self.vertices;
        }
        self.facets.iter().all(|f| {
            let v = &self.vertices[f.vertices[0]];
            (p - v).dot(&f.area) <= BigRational::zero()
        })
    }

    /// Is every vertex of `self` inside `other`?
    pub fn is_subset_of(&self, other: &Polytope) -> bool {
        self.vertices.iter().all(|v| other.contains(v))
    }

    pub fn is_origin_symmetric(&self) -> bool {
        let mut neg: Vec<RationalVector> = self.vertices.iter().map(|v| -v).collect();
        neg.sort();
        neg == self.vertices
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v.dedup();
    v
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Polytope) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}

impl Eq for Polytope {}

impl fmt::Debug for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Polytope")
            .field("kind", &self.kind)
            .field("vertices", &self.vertices)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn cube_hull_and_volume() {
        let c = Polytope::unit_cube(3);
        assert_eq!(c.vertices().len(), 8);
        assert_eq!(c.facets().len(), 6);
        assert_eq!(c.edges().len(), 12);
        assert_eq!(c.volume(), rat(1, 1));
        let sum: RationalVector = c.area_vectors().iter().fold(RationalVector::zero(3), |a, b| &a + b);
        assert!(sum.is_zero());
    }

    #[test]
    fn interior_point_dropped() {
        let mut pts: Vec<RationalVector> = Polytope::unit_cube(3).vertices().to_vec();
        pts.push(RationalVector::parse(&["1/2", "1/2", "1/2"]).unwrap());
        assert_eq!(Polytope::new(pts).unwrap(), Polytope::unit_cube(3));
    }

    #[test]
    fn collinear_points_give_a_segment() {
        let p = Polytope::new(vec![
            RationalVector::from_ints(&[0, 0, 0]),
            RationalVector::from_ints(&[1, 1, 1]),
            RationalVector::from_ints(&[2, 2, 2]),
        ])
        .unwrap();
        assert_eq!(p.kind(), HullKind::Segment);
        assert!(p.is_degenerate());
        assert_eq!(p.vertices().len(), 2);
        assert_eq!(p.volume(), rat(0, 1));
    }

    #[test]
    fn simplex_and_square() {
        assert_eq!(Polytope::standard_simplex(3).volume(), rat(1, 6));
        let sq = Polytope::unit_cube(2);
        assert_eq!(sq.volume(), rat(1, 1));
        assert_eq!(sq.facets().len(), 4);
        assert_eq!(Polytope::standard_simplex(2).volume(), rat(1, 2));
    }

    #[test]
    fn flat_square_in_space() {
        let sq = Polytope::new(vec![
            RationalVector::from_ints(&[0, 0, 1]),
            RationalVector::from_ints(&[2, 0, 1]),
            RationalVector::from_ints(&[0, 2, 1]),
            RationalVector::from_ints(&[2, 2, 1]),
        ])
        .unwrap();
        assert_eq!(sq.kind(), HullKind::Polygon);
        assert_eq!(sq.facets().len(), 2);
        assert_eq!(sq.facets()[0].area.norm_squared(), rat(16, 1));
        assert_eq!(sq.edges().len(), 4);
    }

    #[test]
    fn minkowski_sums() {
        let c = Polytope::unit_cube(3);
        let two = c.minkowski_sum(&c).unwrap();
        assert_eq!(two, c.scale(&rat(2, 1)));
        let x = RationalVector::parse(&["1/3", "-2", "5/7"]).unwrap();
        let pt = Polytope::new(vec![x.clone()]).unwrap();
        assert_eq!(c.minkowski_sum(&pt).unwrap(), c.translate(&x));
        let e = |k: usize| {
            let mut v = RationalVector::zero(3);
            v.0[k] = rat(1, 1);
            Polytope::segment(RationalVector::zero(3), v)
        };
        let z = e(0).minkowski_sum(&e(1)).unwrap().minkowski_sum(&e(2)).unwrap();
        assert_eq!(z, c);
    }

    #[test]
    fn support_of_centered_cube() {
        let c = Polytope::centered_cube(3, &rat(1, 1));
        assert_eq!(c.support(&RationalVector::from_ints(&[1, 1, 1])), rat(3, 1));
        assert!(c.is_origin_symmetric());
    }

    #[test]
    fn containment() {
        let c = Polytope::unit_cube(3);
        assert!(c.contains(&RationalVector::parse(&["1/2", "0", "1"]).unwrap()));
        assert!(!c.contains(&RationalVector::parse(&["1/2", "0", "11/10"]).unwrap()));
        let s = Polytope::segment(RationalVector::zero(3), RationalVector::from_ints(&[2, 2, 2]));
        assert!(s.contains(&RationalVector::from_ints(&[1, 1, 1])));
        assert!(!s.contains(&RationalVector::from_ints(&[1, 1, 0])));
    }
}
