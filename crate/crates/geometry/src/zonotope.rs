use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polytope::Polytope;
use crate::rational::{common_denominator, RationalVector};

/// center + Σ [-g/2, g/2] over the generators g.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Zonotope {
    generators: Vec<RationalVector>,
    center: RationalVector,
}

impl Zonotope {
    pub fn new(generators: Vec<RationalVector>, center: RationalVector) -> Result<Zonotope> {
        let dim = center.dim();
        if !(2..=3).contains(&dim) {
            return Err(Error::UnsupportedDimension(dim));
        }
        if let Some(g) = generators.iter().find(|g| g.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: g.dim(),
            });
        }
        Ok(Zonotope { generators, center })
    }

    /// Origin-centred zonotope.
    pub fn centered(generators: Vec<RationalVector>, dim: usize) -> Result<Zonotope> {
        Zonotope::new(generators, RationalVector::zero(dim))
    }

    pub fn dim(&self) -> usize {
        self.center.dim()
    }

    pub fn generators(&self) -> &[RationalVector] {
        &self.generators
    }

    pub fn center(&self) -> &RationalVector {
        &self.center
    }

    pub fn is_origin_symmetric(&self) -> bool {
        self.center.is_zero()
    }

    /// h(Z, u) = c·u + (1/2) Σ |u·g|.
    pub fn support(&self, u: &RationalVector) -> BigRational {
        let half: BigRational = self.generators.iter().map(|g| g.dot(u).abs()).sum();
        self.center.dot(u) + half / BigRational::from_integer(2.into())
    }

    /// Same body with parallel generators combined and zero ones dropped.
    pub fn merged(&self) -> Zonotope {
        let mut by_direction: BTreeMap<Vec<BigInt>, (RationalVector, BigRational)> = BTreeMap::new();
        for g in &self.generators {
            if g.is_zero() {
                continue;
            }
            let den = g.common_denominator();
            let ints = g.scaled_integers(&den);
            let gcd = ints.iter().fold(BigInt::zero(), |a, x| a.gcd(x));
            let mut dir: Vec<BigInt> = ints.iter().map(|x| x / &gcd).collect();
            // g = (gcd / den) · dir; orient dir so its first non-zero entry is positive.
            let mut len = BigRational::new(gcd, den);
            if dir.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
                dir.iter_mut().for_each(|x| *x = -&*x);
                len = -len;
            }
            let unit = RationalVector::from_bigints(&dir, &BigInt::from(1));
            let entry = by_direction.entry(dir).or_insert((unit, BigRational::zero()));
            entry.1 += len.abs();
        }
        Zonotope {
            generators: by_direction.into_values().map(|(d, l)| d.scale(&l)).collect(),
            center: self.center.clone(),
        }
    }

    /// Explicit vertex description by summing segments one at a time.
    pub fn to_polytope(&self) -> Polytope {
        let mut acc = Polytope::new(vec![self.center.clone()]).expect("point");
        let half = BigRational::new(1.into(), 2.into());
        for g in self.merged().generators {
            let h = g.scale(&half);
            let seg = Polytope::segment(-&h, h);
            acc = acc.minkowski_sum(&seg).expect("same dimension");
        }
        acc
    }

    /// Exact volume: Σ |det| over generator triples (pairs in the plane).
    pub fn volume(&self) -> BigRational {
        let gens = self.merged().generators;
        let den = common_denominator(&gens);
        let ints: Vec<Vec<BigInt>> = gens.iter().map(|g| g.scaled_integers(&den)).collect();
        let dim = self.dim();
        let total = if ints.iter().flatten().all(|c| c.bits() <= 40) {
            let small: Vec<[i128; 3]> = ints
                .iter()
                .map(|g| {
                    let mut a = [0i128; 3];
                    for (k, c) in g.iter().enumerate() {
                        a[k] = c.to_i128().expect("40-bit");
                    }
                    a
                })
                .collect();
            det_sum_i128(&small, dim)
        } else {
            det_sum_big(&ints, dim)
        };
        BigRational::new(total, den.pow(dim as u32))
    }

    pub fn translate(&self, x: &RationalVector) -> Zonotope {
        Zonotope {
            generators: self.generators.clone(),
            center: &self.center + x,
        }
    }

    pub fn scale(&self, t: &BigRational) -> Zonotope {
        Zonotope {
            generators: self.generators.iter().map(|g| g.scale(t)).collect(),
            center: self.center.scale(t),
        }
    }

    /// Projection body of the zonotope itself: generators 2 (g_i × g_j) in
    /// space, 2 rot(g_i) in the plane.
    pub fn projection_body(&self) -> Zonotope {
        let gens = self.merged().generators;
        let two = BigRational::from_integer(2.into());
        let out = if self.dim() == 3 {
            let mut out = Vec::with_capacity(gens.len() * gens.len() / 2);
            for i in 0..gens.len() {
                for j in i + 1..gens.len() {
                    out.push(gens[i].cross(&gens[j]).scale(&two));
                }
            }
            out
        } else {
            gens.iter().map(|g| g.rotate90().scale(&two)).collect()
        };
        Zonotope {
            generators: out,
            center: RationalVector::zero(self.dim()),
        }
        .merged()
    }
}

/// Accumulates into i128 and spills into a BigInt when a partial sum
/// would overflow.
pub(crate) struct Accumulator {
    small: i128,
    big: BigInt,
}

impl Accumulator {
    pub(crate) fn new() -> Accumulator {
        Accumulator {
            small: 0,
            big: BigInt::zero(),
        }
    }

    pub(crate) fn add(&mut self, x: i128) {
        match self.small.checked_add(x) {
            Some(s) => self.small = s,
            None => {
                self.big += BigInt::from(self.small);
                self.small = x;
            }
        }
    }

    pub(crate) fn finish(self) -> BigInt {
        self.big + BigInt::from(self.small)
    }
}

fn det_sum_i128(g: &[[i128; 3]], dim: usize) -> BigInt {
    let mut acc = Accumulator::new();
    let n = g.len();
    if dim == 2 {
        for i in 0..n {
            for j in i + 1..n {
                acc.add((g[i][0] * g[j][1] - g[i][1] * g[j][0]).abs());
            }
        }
        return acc.finish();
    }
    for i in 0..n {
        for j in i + 1..n {
            let c = [
                g[i][1] * g[j][2] - g[i][2] * g[j][1],
                g[i][2] * g[j][0] - g[i][0] * g[j][2],
                g[i][0] * g[j][1] - g[i][1] * g[j][0],
            ];
            for k in g.iter().skip(j + 1) {
                acc.add((c[0] * k[0] + c[1] * k[1] + c[2] * k[2]).abs());
            }
        }
    }
    acc.finish()
}

fn det_sum_big(g: &[Vec<BigInt>], dim: usize) -> BigInt {
    let n = g.len();
    let mut total = BigInt::zero();
    for i in 0..n {
        for j in i + 1..n {
            if dim == 2 {
                total += (&g[i][0] * &g[j][1] - &g[i][1] * &g[j][0]).abs();
                continue;
            }
            let c = [
                &g[i][1] * &g[j][2] - &g[i][2] * &g[j][1],
                &g[i][2] * &g[j][0] - &g[i][0] * &g[j][2],
                &g[i][0] * &g[j][1] - &g[i][1] * &g[j][0],
            ];
            for k in g.iter().skip(j + 1) {
                total += (&c[0] * &k[0] + &c[1] * &k[1] + &c[2] * &k[2]).abs();
            }
        }
    }
    total
}

/// Projection body of a full-dimensional polytope: the origin-centred
/// zonotope generated by the facet area vectors.
pub fn projection_body(p: &Polytope) -> Result<Zonotope> {
    if p.is_degenerate() {
        return Err(Error::Degenerate("projection body needs a full-dimensional polytope".into()));
    }
    Zonotope::centered(p.area_vectors(), p.dim())
}
