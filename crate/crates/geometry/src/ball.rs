//! Polytopal approximations of the unit ball.
//!
//! Level ℓ subdivides the icosahedron ℓ times (20·4^ℓ triangles), projects
//! to the sphere and rounds every vertex towards the origin onto the grid
//! 2^-24 Z³. The hull of the rounded vertices is the inner body; its
//! smallest facet distance `r_lo` (rounded down) gives the outer body
//! inner / r_lo ⊇ B. Subdividing keeps old vertices, so inner bodies are
//! nested across levels.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::polytope::Polytope;
use crate::rational::RationalVector;

/// Grid exponent: vertices lie in 2^-24 Z³.
pub const GRID_BITS: u32 = 24;
const GRID: i64 = 1 << GRID_BITS;
const R_LO_BITS: u32 = 64;

/// Largest supported refinement level.
pub const MAX_LEVEL: u32 = 8;

pub struct BallApprox {
    level: u32,
    /// Vertices scaled by 2^24.
    verts: Vec<[i64; 3]>,
    triangles: Vec<[u32; 3]>,
    /// Twice the facet area vectors, scaled by 2^48.
    normals: Vec<[i128; 3]>,
    neighbors: Vec<Vec<u32>>,
    r_lo: BigRational,
    inner: OnceLock<Polytope>,
    outer: OnceLock<Polytope>,
}

fn icosahedron() -> (Vec<[f64; 3]>, Vec<[u32; 3]>) {
    let t = (1.0 + 5f64.sqrt()) / 2.0;
    let v = vec![
        [-1.0, t, 0.0],
        [1.0, t, 0.0],
        [-1.0, -t, 0.0],
        [1.0, -t, 0.0],
        [0.0, -1.0, t],
        [0.0, 1.0, t],
        [0.0, -1.0, -t],
        [0.0, 1.0, -t],
        [t, 0.0, -1.0],
        [t, 0.0, 1.0],
        [-t, 0.0, -1.0],
        [-t, 0.0, 1.0],
    ];
    let f = vec![
        [0, 11, 5],
        [0, 5, 1],
        [0, 1, 7],
        [0, 7, 10],
        [0, 10, 11],
        [1, 5, 9],
        [5, 11, 4],
        [11, 10, 2],
        [10, 7, 6],
        [7, 1, 8],
        [3, 9, 4],
        [3, 4, 2],
        [3, 2, 6],
        [3, 6, 8],
        [3, 8, 9],
        [4, 9, 5],
        [2, 4, 11],
        [6, 2, 10],
        [8, 6, 7],
        [9, 8, 1],
    ];
    (v.into_iter().map(normalize).collect(), f)
}

fn normalize(p: [f64; 3]) -> [f64; 3] {
    let r = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
    [p[0] / r, p[1] / r, p[2] / r]
}

fn subdivide(verts: &mut Vec<[f64; 3]>, tris: &[[u32; 3]]) -> Vec<[u32; 3]> {
    let mut mid: HashMap<(u32, u32), u32> = HashMap::with_capacity(tris.len() * 3 / 2);
    let mut midpoint = |a: u32, b: u32, verts: &mut Vec<[f64; 3]>| -> u32 {
        let key = (a.min(b), a.max(b));
        *mid.entry(key).or_insert_with(|| {
            let (p, q) = (verts[a as usize], verts[b as usize]);
            verts.push(normalize([p[0] + q[0], p[1] + q[1], p[2] + q[2]]));
            (verts.len() - 1) as u32
        })
    };
    let mut out = Vec::with_capacity(tris.len() * 4);
    for &[a, b, c] in tris {
        let ab = midpoint(a, b, verts);
        let bc = midpoint(b, c, verts);
        let ca = midpoint(c, a, verts);
        out.extend([[a, ab, ca], [b, bc, ab], [c, ca, bc], [ab, bc, ca]]);
    }
    out
}

/// Round towards zero onto the grid, then shrink until |v| <= 1 exactly.
fn round_inward(p: [f64; 3]) -> [i64; 3] {
    let mut v = p.map(|x| (x * GRID as f64).trunc() as i64);
    let r2 = |v: &[i64; 3]| v.iter().map(|&x| i128::from(x) * i128::from(x)).sum::<i128>();
    while r2(&v) > i128::from(GRID) * i128::from(GRID) {
        let k = (0..3).max_by_key(|&k| v[k].abs()).expect("three");
        v[k] -= v[k].signum();
    }
    v
}

fn sub(a: &[i64; 3], b: &[i64; 3]) -> [i128; 3] {
    [0, 1, 2].map(|k| i128::from(a[k]) - i128::from(b[k]))
}

fn cross(a: &[i128; 3], b: &[i128; 3]) -> [i128; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot_i(n: &[i128; 3], v: &[i64; 3]) -> i128 {
    n[0] * i128::from(v[0]) + n[1] * i128::from(v[1]) + n[2] * i128::from(v[2])
}

impl BallApprox {
    /// Builds and checks the level-ℓ approximation.
    pub fn new(level: u32) -> Result<BallApprox> {
        if level > MAX_LEVEL {
            return Err(Error::OutOfRange {
                what: "ball level",
                value: i64::from(level),
            });
        }
        let (mut fverts, mut tris) = icosahedron();
        for _ in 0..level {
            tris = subdivide(&mut fverts, &tris);
        }
        let verts: Vec<[i64; 3]> = fverts.into_iter().map(round_inward).collect();

        let mut normals = Vec::with_capacity(tris.len());
        for t in tris.iter_mut() {
            let [a, b, c] = t.map(|i| &verts[i as usize]);
            let mut n = cross(&sub(b, a), &sub(c, a));
            if dot_i(&n, a) < 0 {
                t.swap(1, 2);
                n = n.map(|x| -x);
            }
            normals.push(n);
        }

        // Strict local convexity at every edge plus the origin strictly
        // inside every facet plane: the mesh bounds a convex body whose
        // vertices are all extreme.
        let mut directed: HashMap<(u32, u32), usize> = HashMap::with_capacity(tris.len() * 3);
        for (ti, t) in tris.iter().enumerate() {
            for k in 0..3 {
                directed.insert((t[k], t[(k + 1) % 3]), ti);
            }
        }
        let mut neighbors: Vec<Vec<u32>> = vec![Vec::with_capacity(6); verts.len()];
        for (ti, t) in tris.iter().enumerate() {
            let a = &verts[t[0] as usize];
            let offset = dot_i(&normals[ti], a);
            if offset <= 0 {
                return Err(Error::Ball(format!("facet {ti} does not face away from the origin")));
            }
            for k in 0..3 {
                let (p, q) = (t[k], t[(k + 1) % 3]);
                neighbors[p as usize].push(q);
                let other = *directed
                    .get(&(q, p))
                    .ok_or_else(|| Error::Ball(format!("edge {p}-{q} is not shared")))?;
                let far = tris[other].iter().find(|&&x| x != p && x != q).expect("triangle");
                if dot_i(&normals[ti], &verts[*far as usize]) >= offset {
                    return Err(Error::Ball(format!("mesh not strictly convex at edge {p}-{q}")));
                }
            }
        }

        // r_lo² <= min over facets of (n·a)² / (|n|² 2^48).
        let mut best: Option<(BigInt, BigInt)> = None;
        for (ti, t) in tris.iter().enumerate() {
            let n = &normals[ti];
            let off = BigInt::from(dot_i(n, &verts[t[0] as usize]));
            let num = &off * &off;
            let den = BigInt::from(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
            best = match best {
                Some((bn, bd)) if &bn * &den <= &num * &bd => Some((bn, bd)),
                _ => Some((num, den)),
            };
        }
        let (num, den) = best.expect("facets");
        let scaled = (num << (2 * R_LO_BITS)) / (den << (2 * GRID_BITS));
        let r_lo = BigRational::new(scaled.sqrt(), BigInt::one() << R_LO_BITS);

        Ok(BallApprox {
            level,
            verts,
            triangles: tris,
            normals,
            neighbors,
            r_lo,
            inner: OnceLock::new(),
            outer: OnceLock::new(),
        })
    }

    /// Process-wide cached approximation.
    pub fn shared(level: u32) -> Result<Arc<BallApprox>> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<BallApprox>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(b) = cache.lock().expect("ball cache poisoned").get(&level) {
            return Ok(b.clone());
        }
        let b = Arc::new(BallApprox::new(level)?);
        Ok(cache
            .lock()
            .expect("ball cache poisoned")
            .entry(level)
            .or_insert(b)
            .clone())
    }

    /// Smallest level with at least `facets` facets.
    pub fn level_for_facets(facets: usize) -> u32 {
        (0..=MAX_LEVEL).find(|&l| 20usize << (2 * l) >= facets).unwrap_or(MAX_LEVEL)
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn facet_count(&self) -> usize {
        self.triangles.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    /// Rational lower bound for the inradius of the inner body, so that
    /// B ⊆ inner / r_lo.
    pub fn r_lo(&self) -> &BigRational {
        &self.r_lo
    }

    /// 1/r_lo - 1: relative gap between the inner and outer bodies.
    pub fn gap(&self) -> BigRational {
        BigRational::one() / &self.r_lo - BigRational::one()
    }

    fn vertex(&self, i: usize) -> RationalVector {
        RationalVector::from_bigints(&self.verts[i].map(BigInt::from), &BigInt::from(GRID))
    }

    /// The inscribed polytope.
    pub fn inner(&self) -> &Polytope {
        self.inner.get_or_init(|| {
            let verts: Vec<RationalVector> = (0..self.verts.len()).map(|i| self.vertex(i)).collect();
            let tris = self.triangles.iter().map(|t| t.map(|x| x as usize)).collect();
            Polytope::from_convex_mesh(verts, tris)
        })
    }

    /// The circumscribed polytope inner / r_lo.
    pub fn outer(&self) -> &Polytope {
        self.outer
            .get_or_init(|| self.inner().scale(&(BigRational::one() / &self.r_lo)))
    }

    /// Twice the facet area vectors in units of 2^-48 (exact integers).
    pub(crate) fn scaled_normals(&self) -> &[[i128; 3]] {
        &self.normals
    }

    /// Index of a vertex maximising u·v, by hill climbing on the mesh.
    fn argmax_i128(&self, u: &[i128; 3]) -> usize {
        let score = |i: usize| dot_i(u, &self.verts[i]);
        let mut cur = (0..12).max_by_key(|&i| score(i)).expect("icosahedron vertices");
        let mut best = score(cur);
        loop {
            let mut moved = false;
            for &nb in &self.neighbors[cur] {
                let s = score(nb as usize);
                if s > best {
                    best = s;
                    cur = nb as usize;
                    moved = true;
                }
            }
            if !moved {
                return cur;
            }
        }
    }

    fn argmax_big(&self, u: &[BigInt]) -> usize {
        let score = |i: usize| -> BigInt { (0..3).map(|k| &u[k] * self.verts[i][k]).sum() };
        let mut cur = (0..12).max_by_key(|&i| score(i)).expect("icosahedron vertices");
        let mut best = score(cur);
        loop {
            let mut moved = false;
            for &nb in &self.neighbors[cur] {
                let s = score(nb as usize);
                if s > best {
                    best = s;
                    cur = nb as usize;
                    moved = true;
                }
            }
            if !moved {
                return cur;
            }
        }
    }

    /// h(inner, u), exact.
    pub fn inner_support(&self, u: &RationalVector) -> BigRational {
        let den = u.common_denominator();
        let ints = u.scaled_integers(&den);
        let idx = if ints.iter().all(|c| c.bits() <= 90) {
            let small = [0, 1, 2].map(|k| ints[k].to_i128().expect("90-bit"));
            self.argmax_i128(&small)
        } else {
            self.argmax_big(&ints)
        };
        self.vertex(idx).dot(u)
    }

    /// h(outer, u), exact.
    pub fn outer_support(&self, u: &RationalVector) -> BigRational {
        self.inner_support(u) / &self.r_lo
    }
}

impl std::fmt::Debug for BallApprox {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BallApprox")
            .field("level", &self.level)
            .field("facets", &self.triangles.len())
            .field("r_lo", &crate::real::rational_to_f64(&self.r_lo))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use num_traits::Zero;

    #[test]
    fn facet_counts_and_gaps() {
        let mut last_gap: Option<BigRational> = None;
        for level in 0..=4 {
            let b = BallApprox::new(level).unwrap();
            assert_eq!(b.facet_count(), 20 << (2 * level));
            assert_eq!(b.vertex_count(), 10 * (1 << (2 * level)) + 2);
            let gap = b.gap();
            assert!(gap > BigRational::zero());
            if let Some(prev) = &last_gap {
                assert!(&gap < prev);
            }
            last_gap = Some(gap);
        }
        assert_eq!(BallApprox::level_for_facets(10_000), 5);
    }

    #[test]
    fn inner_body_is_inside_the_ball_and_matches_a_hull() {
        let b = BallApprox::new(2).unwrap();
        let inner = b.inner();
        assert!(inner.vertices().iter().all(|v| v.norm_squared() <= rat(1, 1)));
        let rebuilt = Polytope::new(inner.vertices().to_vec()).unwrap();
        assert_eq!(rebuilt.vertices().len(), inner.vertices().len());
        assert_eq!(rebuilt.volume(), inner.volume());
        assert_eq!(rebuilt.facets().len(), inner.facets().len());
    }

    #[test]
    fn hill_climbing_finds_the_support() {
        let b = BallApprox::new(3).unwrap();
        let inner = b.inner();
        for u in [[1, 0, 0], [3, -7, 2], [-1, -1, -1], [0, 5, -9], [1234567, 7654321, -1]] {
            let u = RationalVector::from_ints(&u);
            assert_eq!(b.inner_support(&u), inner.support(&u));
        }
    }
}
