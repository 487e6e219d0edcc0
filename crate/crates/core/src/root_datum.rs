//! Root datum of `Res_{k/F_p} GL_n`: weights, roots, pairings, the finite
//! Weyl group acting per embedding, the Frobenius twist and `X^0(T)`.
//!
//! A weight is an `f`-indexed family of integer `n`-tuples; the finite Weyl
//! group is a product of symmetric groups permuting coordinates within each
//! embedding. All arithmetic is exact.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Configuration of the root datum: rank `n`, number of embeddings `f`,
/// ramification index `e` and the prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootDatumConfig {
    pub n: usize,
    pub f: usize,
    pub e: i64,
    pub p: i64,
}

fn is_prime(p: i64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl RootDatumConfig {
    pub fn new(n: usize, f: usize, e: i64, p: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Config(format!("n must be >= 2, got {n}")));
        }
        if f < 1 {
            return Err(Error::Config("f must be >= 1".into()));
        }
        if e < 1 {
            return Err(Error::Config(format!("e must be >= 1, got {e}")));
        }
        if !is_prime(p) {
            return Err(Error::Config(format!("p must be prime, got {p}")));
        }
        if p <= n as i64 {
            return Err(Error::Config(format!("p must exceed n, got p={p}, n={n}")));
        }
        Ok(RootDatumConfig { n, f, e, p })
    }
}

/// An element of `X^*(T)^J`, stored as `f` integer `n`-tuples.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub coords: Vec<Vec<i64>>,
}

impl Weight {
    pub fn zero(cfg: &RootDatumConfig) -> Self {
        Weight {
            coords: vec![vec![0; cfg.n]; cfg.f],
        }
    }

    /// `eta0 = (n-1, n-2, ..., 0)` in every embedding.
    pub fn eta0(cfg: &RootDatumConfig) -> Self {
        let row: Vec<i64> = (0..cfg.n).map(|i| (cfg.n - 1 - i) as i64).collect();
        Weight {
            coords: vec![row; cfg.f],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        Weight { coords: rows }
    }

    pub fn add(&self, other: &Weight) -> Weight {
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Weight { coords }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
            .collect();
        Weight { coords }
    }

    pub fn scale(&self, c: i64) -> Weight {
        let coords = self
            .coords
            .iter()
            .map(|a| a.iter().map(|x| c * x).collect())
            .collect();
        Weight { coords }
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }

    /// Coordinate sum within each embedding, the image in `X^*(Z) = Z^J`.
    pub fn coord_sums(&self) -> Vec<i64> {
        self.coords.iter().map(|row| row.iter().sum()).collect()
    }
}

/// An element of the finite Weyl group `W^J`; `perms[j][i]` is the image of
/// `i` (0-based) under the permutation at embedding `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinWeylElt {
    pub perms: Vec<Vec<usize>>,
}

impl FinWeylElt {
    pub fn identity(cfg: &RootDatumConfig) -> Self {
        FinWeylElt {
            perms: vec![(0..cfg.n).collect(); cfg.f],
        }
    }

    /// Longest element, reversing coordinates in every embedding.
    pub fn longest(cfg: &RootDatumConfig) -> Self {
        FinWeylElt {
            perms: vec![(0..cfg.n).map(|i| cfg.n - 1 - i).collect(); cfg.f],
        }
    }

    /// Simple transposition `s_i = (i, i+1)` (1-based index `i` in `1..n`)
    /// applied in every embedding.
    pub fn simple(cfg: &RootDatumConfig, i: usize) -> Self {
        assert!(i >= 1 && i < cfg.n);
        let mut perm: Vec<usize> = (0..cfg.n).collect();
        perm.swap(i - 1, i);
        FinWeylElt {
            perms: vec![perm; cfg.f],
        }
    }

    /// Simple transposition at a single embedding, identity elsewhere.
    pub fn simple_at(cfg: &RootDatumConfig, j: usize, i: usize) -> Self {
        assert!(i >= 1 && i < cfg.n && j < cfg.f);
        let mut perms: Vec<Vec<usize>> = vec![(0..cfg.n).collect(); cfg.f];
        perms[j].swap(i - 1, i);
        FinWeylElt { perms }
    }

    /// Builds an element from 1-based one-line notations, one per embedding.
    pub fn from_one_line(cfg: &RootDatumConfig, lines: &[Vec<usize>]) -> Result<Self> {
        if lines.len() != cfg.f {
            return Err(Error::Config(format!(
                "expected {} permutations, got {}",
                cfg.f,
                lines.len()
            )));
        }
        let mut perms = Vec::with_capacity(cfg.f);
        for line in lines {
            if line.len() != cfg.n {
                return Err(Error::Config("permutation has wrong length".into()));
            }
            let mut seen = vec![false; cfg.n];
            let mut perm = vec![0usize; cfg.n];
            for (i, &v) in line.iter().enumerate() {
                if v < 1 || v > cfg.n || seen[v - 1] {
                    return Err(Error::Config("not a permutation".into()));
                }
                seen[v - 1] = true;
                perm[i] = v - 1;
            }
            perms.push(perm);
        }
        Ok(FinWeylElt { perms })
    }

    pub fn one_line(&self) -> Vec<Vec<usize>> {
        self.perms
            .iter()
            .map(|p| p.iter().map(|&x| x + 1).collect())
            .collect()
    }

    pub fn compose(&self, other: &FinWeylElt) -> FinWeylElt {
        // (self * other)(i) = self(other(i))
        let perms = self
            .perms
            .iter()
            .zip(&other.perms)
            .map(|(a, b)| b.iter().map(|&i| a[i]).collect())
            .collect();
        FinWeylElt { perms }
    }

    pub fn inverse(&self) -> FinWeylElt {
        let perms = self
            .perms
            .iter()
            .map(|p| {
                let mut inv = vec![0usize; p.len()];
                for (i, &v) in p.iter().enumerate() {
                    inv[v] = i;
                }
                inv
            })
            .collect();
        FinWeylElt { perms }
    }

    pub fn is_identity(&self) -> bool {
        self.perms
            .iter()
            .all(|p| p.iter().enumerate().all(|(i, &v)| i == v))
    }

    /// Natural action on weights: `(w(l))_{w(i)} = l_i` per embedding.
    pub fn act(&self, lambda: &Weight) -> Weight {
        let coords = self
            .perms
            .iter()
            .zip(&lambda.coords)
            .map(|(p, row)| {
                let mut out = vec![0i64; row.len()];
                for (i, &v) in p.iter().enumerate() {
                    out[v] = row[i];
                }
                out
            })
            .collect();
        Weight { coords }
    }

    /// Image of a root: `w(e_i - e_k) = e_{w(i)} - e_{w(k)}`.
    pub fn act_root(&self, root: &Root) -> Root {
        let p = &self.perms[root.j];
        let (a, b) = (p[root.i], p[root.k]);
        if a < b {
            Root { j: root.j, i: a, k: b, positive: root.positive }
        } else {
            Root { j: root.j, i: b, k: a, positive: !root.positive }
        }
    }
}

/// A root `±(e_i - e_k)` (`i < k`, 0-based) at embedding `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Root {
    pub j: usize,
    pub i: usize,
    pub k: usize,
    pub positive: bool,
}

impl Root {
    pub fn positive(cfg: &RootDatumConfig, j: usize, i: usize, k: usize) -> Result<Self> {
        if j >= cfg.f || i >= k || k >= cfg.n {
            return Err(Error::IndexOutOfRange(format!("root ({j},{i},{k})")));
        }
        Ok(Root { j, i, k, positive: true })
    }

    /// Height of the underlying positive root `e_i - e_k`.
    pub fn height(&self) -> i64 {
        (self.k - self.i) as i64
    }
}

/// The root datum context. All operations on weights and Weyl elements are
/// methods here so dimensions are checked in one place.
#[derive(Debug, Clone)]
pub struct RootDatum {
    pub cfg: RootDatumConfig,
    positive_roots: Vec<(usize, usize)>,
}

impl RootDatum {
    pub fn new(cfg: RootDatumConfig) -> Self {
        let mut positive_roots = Vec::new();
        for i in 0..cfg.n {
            for k in (i + 1)..cfg.n {
                positive_roots.push((i, k));
            }
        }
        RootDatum { cfg, positive_roots }
    }

    /// Positive roots `(i, k)` with `i < k` of one embedding, in lex order.
    pub fn positive_root_pairs(&self) -> &[(usize, usize)] {
        &self.positive_roots
    }

    /// Iterates over all positive roots of all embeddings.
    pub fn positive_roots(&self) -> impl Iterator<Item = Root> + '_ {
        (0..self.cfg.f).flat_map(move |j| {
            self.positive_roots
                .iter()
                .map(move |&(i, k)| Root { j, i, k, positive: true })
        })
    }

    /// Simple roots `e_i - e_{i+1}` of one embedding, for `i` in `0..n-1`.
    pub fn simple_roots(&self) -> impl Iterator<Item = Root> + '_ {
        (0..self.cfg.f).flat_map(move |j| {
            (0..self.cfg.n - 1).map(move |i| Root { j, i, k: i + 1, positive: true })
        })
    }

    /// `<lambda_j, beta^vee> = lambda_{j,i} - lambda_{j,k}` (sign-adjusted).
    pub fn pair(&self, lambda: &Weight, beta: &Root) -> i64 {
        let row = &lambda.coords[beta.j];
        let v = row[beta.i] - row[beta.k];
        if beta.positive {
            v
        } else {
            -v
        }
    }

    pub fn act_fin(&self, w: &FinWeylElt, lambda: &Weight) -> Weight {
        w.act(lambda)
    }

    /// Frobenius twist `pi(l)_j = l_{j+1 mod f}`; `pi^f = id`.
    pub fn frobenius_twist(&self, lambda: &Weight) -> Weight {
        let f = self.cfg.f;
        let coords = (0..f)
            .map(|j| lambda.coords[(j + 1) % f].clone())
            .collect();
        Weight { coords }
    }

    pub fn frobenius_twist_inv(&self, lambda: &Weight) -> Weight {
        let f = self.cfg.f;
        let coords = (0..f)
            .map(|j| lambda.coords[(j + f - 1) % f].clone())
            .collect();
        Weight { coords }
    }

    pub fn frobenius_twist_fin(&self, w: &FinWeylElt) -> FinWeylElt {
        let f = self.cfg.f;
        let perms = (0..f).map(|j| w.perms[(j + 1) % f].clone()).collect();
        FinWeylElt { perms }
    }

    /// `X^0(T)` membership: all coordinates equal within each embedding.
    pub fn is_x0(&self, lambda: &Weight) -> bool {
        lambda
            .coords
            .iter()
            .all(|row| row.iter().all(|&c| c == row[0]))
    }

    /// Largest pairing of `eta0` with a positive coroot, i.e. `n - 1`.
    pub fn h_eta0(&self) -> i64 {
        (self.cfg.n - 1) as i64
    }

    /// The weight is dominant if all pairings with positive coroots are >= 0.
    pub fn is_dominant_weight(&self, lambda: &Weight) -> bool {
        self.positive_roots()
            .all(|beta| self.pair(lambda, &beta) >= 0)
    }
}
