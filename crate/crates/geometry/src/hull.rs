//! Exact convex hulls of integer point sets in the plane and in space.
//!
//! Coordinates arrive as `BigInt`s. When every coordinate fits in 39 bits
//! the orientation predicates cannot overflow `i128` (a 3x3 determinant of
//! 40-bit differences stays below 2^126), so the hull runs on `i128`;
//! otherwise it falls back to `BigInt`.

use std::collections::HashMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

pub(crate) trait Exact: Clone + Ord + Signed + Debug {
    fn from_big(x: &BigInt) -> Self;
    fn to_big(&self) -> BigInt;
}

impl Exact for i128 {
    fn from_big(x: &BigInt) -> i128 {
        x.to_i128().expect("coordinate range checked by caller")
    }

    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Exact for BigInt {
    fn from_big(x: &BigInt) -> BigInt {
        x.clone()
    }

    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

fn big3<T: Exact>(a: &P3<T>) -> P3<BigInt> {
    [a[0].to_big(), a[1].to_big(), a[2].to_big()]
}

const I128_COORD_BITS: u64 = 39;

type P3<T> = [T; 3];

fn sub3<T: Exact>(a: &P3<T>, b: &P3<T>) -> P3<T> {
    [a[0].clone() - b[0].clone(), a[1].clone() - b[1].clone(), a[2].clone() - b[2].clone()]
}

fn cross3<T: Exact>(a: &P3<T>, b: &P3<T>) -> P3<T> {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

fn dot3<T: Exact>(a: &P3<T>, b: &P3<T>) -> T {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone() + a[2].clone() * b[2].clone()
}

fn is_zero3<T: Exact>(a: &P3<T>) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Combinatorial result of a hull computation; indices refer to the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Shape {
    Point(usize),
    Segment([usize; 2]),
    /// Planar hull: the extreme points as a cycle.
    Polygon(Vec<usize>),
    /// Full-dimensional hull: outward-oriented triangles on extreme points.
    Solid(Vec<[usize; 3]>),
}

fn fits_i128(points: &[Vec<BigInt>]) -> bool {
    points.iter().flatten().all(|c| c.bits() <= I128_COORD_BITS)
}

/// Hull of distinct points in the plane, as a counterclockwise cycle of
/// extreme points (or a point / segment).
pub(crate) fn hull2(points: &[Vec<BigInt>]) -> Shape {
    if fits_i128(points) {
        hull2_generic(&convert2::<i128>(points))
    } else {
        hull2_generic(&convert2::<BigInt>(points))
    }
}

fn convert2<T: Exact>(points: &[Vec<BigInt>]) -> Vec<[T; 2]> {
    points.iter().map(|p| [T::from_big(&p[0]), T::from_big(&p[1])]).collect()
}

fn orient2<T: Exact>(o: &[T; 2], a: &[T; 2], b: &[T; 2]) -> T {
    (a[0].clone() - o[0].clone()) * (b[1].clone() - o[1].clone())
        - (a[1].clone() - o[1].clone()) * (b[0].clone() - o[0].clone())
}

fn hull2_generic<T: Exact>(pts: &[[T; 2]]) -> Shape {
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| pts[a].cmp(&pts[b]));
    order.dedup_by(|a, b| pts[*a] == pts[*b]);
    if order.len() == 1 {
        return Shape::Point(order[0]);
    }
    let mut chain: Vec<usize> = Vec::with_capacity(2 * order.len());
    for pass in 0..2 {
        let start = chain.len();
        let iter: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(order.iter())
        } else {
            Box::new(order.iter().rev())
        };
        for &i in iter {
            while chain.len() >= start + 2
                && !orient2(&pts[chain[chain.len() - 2]], &pts[chain[chain.len() - 1]], &pts[i]).is_positive()
            {
                chain.pop();
            }
            chain.push(i);
        }
        chain.pop();
    }
    match chain.len() {
        0 | 1 => Shape::Point(order[0]),
        2 => Shape::Segment([chain[0], chain[1]]),
        _ => Shape::Polygon(chain),
    }
}

/// Hull of distinct points in space.
pub(crate) fn hull3(points: &[Vec<BigInt>]) -> Shape {
    if fits_i128(points) {
        hull3_generic(&convert3::<i128>(points))
    } else {
        hull3_generic(&convert3::<BigInt>(points))
    }
}

fn convert3<T: Exact>(points: &[Vec<BigInt>]) -> Vec<P3<T>> {
    points
        .iter()
        .map(|p| [T::from_big(&p[0]), T::from_big(&p[1]), T::from_big(&p[2])])
        .collect()
}

fn argmax<T: Ord>(n: usize, key: impl Fn(usize) -> T) -> usize {
    (0..n).max_by_key(|&i| key(i)).expect("non-empty")
}

enum Span<T> {
    Point(usize),
    Segment([usize; 2]),
    Plane(P3<T>),
    Space([usize; 4]),
}

fn span<T: Exact>(pts: &[P3<T>]) -> Span<T> {
    let n = pts.len();
    let p0 = (0..n).min_by(|&a, &b| pts[a].cmp(&pts[b])).expect("non-empty");
    let p1 = argmax(n, |i| {
        let d = sub3(&pts[i], &pts[p0]);
        dot3(&d, &d)
    });
    if pts[p1] == pts[p0] {
        return Span::Point(p0);
    }
    let e1 = sub3(&pts[p1], &pts[p0]);
    // Squared cross products can exceed i128; compare them as BigInts.
    let p2 = argmax(n, |i| {
        let c = big3(&cross3(&e1, &sub3(&pts[i], &pts[p0])));
        dot3(&c, &c)
    });
    let normal = cross3(&e1, &sub3(&pts[p2], &pts[p0]));
    if is_zero3(&normal) {
        let hi = (0..n).max_by(|&a, &b| pts[a].cmp(&pts[b])).expect("non-empty");
        return Span::Segment([p0, hi]);
    }
    let p3 = argmax(n, |i| dot3(&normal, &sub3(&pts[i], &pts[p0])).abs());
    if dot3(&normal, &sub3(&pts[p3], &pts[p0])).is_zero() {
        return Span::Plane(normal);
    }
    Span::Space([p0, p1, p2, p3])
}

fn hull3_generic<T: Exact>(pts: &[P3<T>]) -> Shape {
    assert!(!pts.is_empty());
    let mut seed = match span(pts) {
        Span::Point(p) => return Shape::Point(p),
        Span::Segment(s) => return Shape::Segment(s),
        Span::Plane(normal) => return planar_hull(pts, &normal),
        Span::Space(seed) => seed,
    };
    let mut active: Vec<usize> = (0..pts.len()).collect();
    let mut local: Vec<P3<T>> = pts.to_vec();
    loop {
        let triangles = quickhull(&local, seed);
        let extreme = extreme_vertices(&local, &triangles);
        let used: std::collections::BTreeSet<usize> = triangles.iter().flatten().copied().collect();
        if extreme.len() == used.len() {
            return Shape::Solid(triangles.into_iter().map(|t| t.map(|v| active[v])).collect());
        }
        // Some hull vertices sit inside an edge or facet: rebuild on the
        // extreme points only.
        active = extreme.iter().map(|&v| active[v]).collect();
        local = extreme.iter().map(|&v| local[v].clone()).collect();
        seed = match span(&local) {
            Span::Space(s) => s,
            _ => unreachable!("extreme points of a solid span space"),
        };
    }
}

fn planar_hull<T: Exact>(pts: &[P3<T>], normal: &P3<T>) -> Shape {
    // Drop the coordinate where the normal is largest; the projection is
    // then injective on the plane.
    let drop = argmax(3, |k| normal[k].abs());
    let keep: Vec<usize> = (0..3).filter(|&k| k != drop).collect();
    let flat: Vec<[T; 2]> = pts.iter().map(|p| [p[keep[0]].clone(), p[keep[1]].clone()]).collect();
    hull2_generic(&flat)
}

struct Face<T> {
    v: [usize; 3],
    normal: P3<T>,
    offset: T,
    nb: [usize; 3],
    alive: bool,
    outside: Vec<usize>,
}

impl<T: Exact> Face<T> {
    fn new(pts: &[P3<T>], v: [usize; 3]) -> Face<T> {
        let normal = cross3(&sub3(&pts[v[1]], &pts[v[0]]), &sub3(&pts[v[2]], &pts[v[0]]));
        let offset = dot3(&normal, &pts[v[0]]);
        Face {
            v,
            normal,
            offset,
            nb: [usize::MAX; 3],
            alive: true,
            outside: Vec::new(),
        }
    }

    fn height(&self, p: &P3<T>) -> T {
        dot3(&self.normal, p) - self.offset.clone()
    }
}

fn link_faces<T>(faces: &mut [Face<T>], ids: &[usize], edges: &mut HashMap<(usize, usize), (usize, usize)>) {
    for &f in ids {
        for k in 0..3 {
            let a = faces[f].v[k];
            let b = faces[f].v[(k + 1) % 3];
            if let Some(&(g, kg)) = edges.get(&(b, a)) {
                faces[f].nb[k] = g;
                faces[g].nb[kg] = f;
            } else {
                edges.insert((a, b), (f, k));
            }
        }
    }
}

fn quickhull<T: Exact>(pts: &[P3<T>], seed: [usize; 4]) -> Vec<[usize; 3]> {
    let [a, b, c, d] = seed;
    let mut faces: Vec<Face<T>> = Vec::new();
    for tri in [[a, b, c], [a, d, b], [b, d, c], [c, d, a]] {
        let opposite = seed.iter().copied().find(|s| !tri.contains(s)).expect("tetrahedron");
        let mut f = Face::new(pts, tri);
        if f.height(&pts[opposite]).is_positive() {
            f = Face::new(pts, [tri[0], tri[2], tri[1]]);
        }
        faces.push(f);
    }
    let mut edges = HashMap::new();
    link_faces(&mut faces, &[0, 1, 2, 3], &mut edges);

    for (i, p) in pts.iter().enumerate() {
        if seed.contains(&i) {
            continue;
        }
        if let Some(f) = (0..4).find(|&f| faces[f].height(p).is_positive()) {
            faces[f].outside.push(i);
        }
    }

    let mut mark: Vec<usize> = Vec::new();
    let mut stamp = 0usize;
    let mut fi = 0;
    while fi < faces.len() {
        if !faces[fi].alive || faces[fi].outside.is_empty() {
            fi += 1;
            continue;
        }
        stamp += 1;
        let apex = *faces[fi]
            .outside
            .iter()
            .max_by_key(|&&q| faces[fi].height(&pts[q]))
            .expect("non-empty");
        let apex_pt = &pts[apex];

        // Visible region by flood fill; record horizon edges with the face
        // beyond them.
        mark.resize(faces.len(), 0);
        let mut visible = vec![fi];
        let mut horizon: Vec<(usize, usize, usize)> = Vec::new();
        mark[fi] = stamp;
        let mut k = 0;
        while k < visible.len() {
            let f = visible[k];
            k += 1;
            for e in 0..3 {
                let g = faces[f].nb[e];
                if mark[g] == stamp {
                    continue;
                }
                if faces[g].height(apex_pt).is_positive() {
                    mark[g] = stamp;
                    visible.push(g);
                } else {
                    horizon.push((faces[f].v[e], faces[f].v[(e + 1) % 3], g));
                }
            }
        }

        let mut orphans: Vec<usize> = Vec::new();
        for &f in &visible {
            faces[f].alive = false;
            orphans.extend(faces[f].outside.drain(..).filter(|&q| q != apex));
        }
        let first = faces.len();
        let mut local_edges: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
        for &(u, w, g) in &horizon {
            let id = faces.len();
            let mut nf = Face::new(pts, [u, w, apex]);
            nf.nb[0] = g;
            let kg = (0..3)
                .find(|&j| faces[g].v[j] == w && faces[g].v[(j + 1) % 3] == u)
                .expect("horizon edge is shared");
            faces[g].nb[kg] = id;
            faces.push(nf);
            local_edges.insert((u, w), (id, 0));
        }
        let new_ids: Vec<usize> = (first..faces.len()).collect();
        for &f in &new_ids {
            for e in 1..3 {
                let x = faces[f].v[e];
                let y = faces[f].v[(e + 1) % 3];
                if let Some(&(g, kg)) = local_edges.get(&(y, x)) {
                    faces[f].nb[e] = g;
                    faces[g].nb[kg] = f;
                } else {
                    local_edges.insert((x, y), (f, e));
                }
            }
        }
        for q in orphans {
            if let Some(&f) = new_ids.iter().find(|&&f| faces[f].height(&pts[q]).is_positive()) {
                faces[f].outside.push(q);
            }
        }
        fi += 1;
    }
    faces.into_iter().filter(|f| f.alive).map(|f| f.v).collect()
}

/// Vertices whose incident triangle normals span space; the others lie in
/// the relative interior of an edge or facet.
fn extreme_vertices<T: Exact>(pts: &[P3<T>], triangles: &[[usize; 3]]) -> Vec<usize> {
    let mut normals: HashMap<usize, Vec<P3<T>>> = HashMap::new();
    for t in triangles {
        let nrm = cross3(&sub3(&pts[t[1]], &pts[t[0]]), &sub3(&pts[t[2]], &pts[t[0]]));
        for &v in t {
            normals.entry(v).or_default().push(nrm.clone());
        }
    }
    let mut out: Vec<usize> = normals
        .into_iter()
        .filter(|(_, ns)| spans_space(ns))
        .map(|(v, _)| v)
        .collect();
    out.sort_unstable();
    out
}

fn spans_space<T: Exact>(ns: &[P3<T>]) -> bool {
    // Products of three normals overflow i128.
    let ns: Vec<P3<BigInt>> = ns.iter().map(big3).collect();
    let first = &ns[0];
    let Some(c) = ns.iter().map(|m| cross3(first, m)).find(|c| !is_zero3(c)) else {
        return false;
    };
    ns.iter().any(|m| !dot3(&c, m).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(raw: &[[i64; 3]]) -> Vec<Vec<BigInt>> {
        raw.iter().map(|p| p.iter().map(|&c| BigInt::from(c)).collect()).collect()
    }

    fn cube() -> Vec<[i64; 3]> {
        let mut v = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    v.push([x, y, z]);
                }
            }
        }
        v
    }

    fn vertex_set(s: &Shape) -> Vec<usize> {
        let mut v: Vec<usize> = match s {
            Shape::Solid(t) => t.iter().flatten().copied().collect(),
            Shape::Polygon(c) => c.clone(),
            Shape::Segment(s) => s.to_vec(),
            Shape::Point(p) => vec![*p],
        };
        v.sort_unstable();
        v.dedup();
        v
    }

    #[test]
    fn cube_with_center_and_face_points() {
        let mut raw: Vec<[i64; 3]> = cube().into_iter().map(|p| p.map(|c| 2 * c)).collect();
        raw.extend([[1, 1, 1], [1, 1, 0], [1, 0, 1], [0, 1, 1], [2, 1, 1], [1, 2, 2], [0, 0, 1]]);
        let s = hull3(&pts(&raw));
        assert_eq!(vertex_set(&s), (0..8).collect::<Vec<_>>());
        let Shape::Solid(t) = s else { panic!() };
        assert_eq!(t.len(), 12);
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(hull3(&pts(&[[1, 2, 3]])), Shape::Point(0));
        let s = hull3(&pts(&[[1, 1, 1], [0, 0, 0], [2, 2, 2], [3, 3, 3]]));
        assert_eq!(s, Shape::Segment([1, 3]));
        let s = hull3(&pts(&[[0, 0, 5], [2, 0, 5], [0, 2, 5], [2, 2, 5], [1, 1, 5], [1, 0, 5]]));
        assert_eq!(vertex_set(&s), vec![0, 1, 2, 3]);
        assert!(matches!(s, Shape::Polygon(_)));
    }

    #[test]
    fn big_coordinates_take_the_bigint_path() {
        let big = 1i64 << 50;
        let raw: Vec<[i64; 3]> = cube().into_iter().map(|p| p.map(|c| c * big)).collect();
        assert!(!fits_i128(&pts(&raw)));
        assert_eq!(vertex_set(&hull3(&pts(&raw))), (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn triangles_are_outward() {
        let raw = [[0, 0, 0], [12, 0, 0], [0, 12, 0], [0, 0, 12], [1, 1, 1]];
        let p = convert3::<i128>(&pts(&raw));
        let Shape::Solid(t) = hull3(&pts(&raw)) else { panic!() };
        assert_eq!(t.len(), 4);
        for tri in t {
            let f = Face::new(&p, tri);
            assert!(f.height(&p[4]).is_negative());
        }
    }

    #[test]
    fn planar_square_cycle() {
        let raw: Vec<Vec<BigInt>> = [[0, 0], [1, 0], [1, 1], [0, 1], [1, 0]]
            .iter()
            .map(|p| p.iter().map(|&c| BigInt::from(c)).collect())
            .collect();
        let Shape::Polygon(c) = hull2(&raw) else { panic!() };
        assert_eq!(c.len(), 4);
    }
}
