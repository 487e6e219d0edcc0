//! Alcove membership and classification, the upper-arrow order, the p-dot
//! action, genericity predicates and the canonical decomposition of
//! e-regular elements.

use crate::affine::{AffineElt, Flag, SamplePoint};
use crate::error::{Error, Result};
use crate::root_datum::{FinWeylElt, Root, RootDatum, RootDatumConfig, Weight};
use serde::{Deserialize, Serialize};
use std::collections::{HashSet, VecDeque};

/// The floors `n_beta = floor <w(x), beta^vee>` of an alcove `w(A_0)`,
/// per embedding in the order of `positive_root_pairs`. An alcove lies
/// strictly between consecutive hyperplanes in every root direction, so
/// these integers are independent of the interior sample point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlcoveProfile {
    pub floors: Vec<Vec<i64>>,
}

impl AlcoveProfile {
    pub fn floor(&self, datum: &RootDatum, beta: &Root) -> i64 {
        let idx = datum
            .positive_root_pairs()
            .iter()
            .position(|&(i, k)| i == beta.i && k == beta.k)
            .expect("positive root");
        self.floors[beta.j][idx]
    }

    /// Per-embedding sum of floors; strictly increases along upward
    /// reflection chains.
    pub fn d_sums(&self) -> Vec<i64> {
        self.floors.iter().map(|row| row.iter().sum()).collect()
    }
}

/// Canonical form of an e-regular element: `w2^{-1} w0 t_{nu+(e-1)eta0} w1`
/// with `w1, w2` restricted-dominant and `nu` dominant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularDecomp {
    pub w1: AffineElt,
    pub w2: AffineElt,
    pub nu: Weight,
}

impl RootDatum {
    /// Datum with the same `(n, e, p)` and a single embedding.
    pub fn embedding_datum(&self) -> RootDatum {
        RootDatum::new(RootDatumConfig {
            n: self.cfg.n,
            f: 1,
            e: self.cfg.e,
            p: self.cfg.p,
        })
    }

    /// The embedding-`j` component of an element, as an `f = 1` element.
    pub fn slice_elt(&self, a: &AffineElt, j: usize) -> AffineElt {
        AffineElt {
            nu: Weight::from_rows(vec![a.nu.coords[j].clone()]),
            w: FinWeylElt {
                perms: vec![a.w.perms[j].clone()],
            },
            flag: a.flag,
        }
    }

    /// Assembles a product element from per-embedding components.
    pub fn assemble(&self, parts: &[AffineElt]) -> AffineElt {
        assert_eq!(parts.len(), self.cfg.f);
        AffineElt {
            nu: Weight::from_rows(parts.iter().map(|p| p.nu.coords[0].clone()).collect()),
            w: FinWeylElt {
                perms: parts.iter().map(|p| p.w.perms[0].clone()).collect(),
            },
            flag: parts.first().map(|p| p.flag).unwrap_or(Flag::Plain),
        }
    }

    /// Exact floors of the alcove `a(A_0)` (always in the plain picture).
    pub fn alcove_profile(&self, a: &AffineElt) -> AlcoveProfile {
        let x = SamplePoint::barycenter(self);
        let y = self.act_sample(a, &x);
        let floors = (0..self.cfg.f)
            .map(|j| {
                self.positive_root_pairs()
                    .iter()
                    .map(|&(i, k)| {
                        let (num, den) = y.pair(&Root { j, i, k, positive: true });
                        num.div_euclid(den)
                    })
                    .collect()
            })
            .collect();
        AlcoveProfile { floors }
    }

    /// `a(A_0)` lies in the dominant cone.
    pub fn is_dominant_elt(&self, a: &AffineElt) -> bool {
        self.alcove_profile(a)
            .floors
            .iter()
            .all(|row| row.iter().all(|&n| n >= 0))
    }

    /// `a(A_0)` is restricted: `0 < <x, alpha^vee> < 1` on simple roots.
    pub fn is_restricted_elt(&self, a: &AffineElt) -> bool {
        let prof = self.alcove_profile(a);
        if !prof.floors.iter().all(|row| row.iter().all(|&n| n >= 0)) {
            return false;
        }
        let pairs = self.positive_root_pairs();
        prof.floors.iter().all(|row| {
            pairs
                .iter()
                .zip(row)
                .all(|(&(i, k), &n)| k != i + 1 || n == 0)
        })
    }

    /// p-dot action `w t_nu . l = w(l + eta0 + p nu) - eta0`; in the stored
    /// `t_nu w` form this is `w(l + eta0) + p nu - eta0`.
    pub fn p_dot(&self, a: &AffineElt, lambda: &Weight) -> Weight {
        let eta = Weight::eta0(&self.cfg);
        a.w.act(&lambda.add(&eta))
            .add(&a.nu.scale(self.cfg.p))
            .sub(&eta)
    }

    /// `lambda` lies m-deep in its p-alcove: every pairing of
    /// `lambda + eta0` with a positive coroot is at distance more than `m`
    /// from `pZ`.
    pub fn is_m_deep(&self, lambda: &Weight, m: i64) -> bool {
        let p = self.cfg.p;
        let chi = lambda.add(&Weight::eta0(&self.cfg));
        self.positive_roots().all(|beta| {
            let r = self.pair(&chi, &beta).rem_euclid(p);
            m < r && r < p - m
        })
    }

    /// Largest `m >= 0` such that `lambda` is m-deep in the base p-alcove
    /// `C_0`, or `None` if it does not lie in the open `C_0`.
    pub fn depth_in_c0(&self, lambda: &Weight) -> Option<i64> {
        let p = self.cfg.p;
        let chi = lambda.add(&Weight::eta0(&self.cfg));
        let mut depth = i64::MAX;
        for beta in self.positive_roots() {
            let q = self.pair(&chi, &beta);
            if q <= 0 || q >= p {
                return None;
            }
            depth = depth.min(q.min(p - q) - 1);
        }
        Some(depth)
    }

    /// `lambda` is m-generic iff `lambda - eta0` is m-deep.
    pub fn is_m_generic(&self, lambda: &Weight, m: i64) -> bool {
        self.is_m_deep(&lambda.sub(&Weight::eta0(&self.cfg)), m)
    }

    /// `t_nu w` is m-small if all pairings of the translation part with
    /// coroots are bounded by `m` in absolute value.
    pub fn is_m_small(&self, a: &AffineElt, m: i64) -> bool {
        self.positive_roots()
            .all(|beta| self.pair(&a.nu, &beta).abs() <= m)
    }

    /// The alcove of `a` avoids every e-critical strip
    /// `1 - e < <x, alpha^vee> < e`.
    pub fn is_e_regular(&self, a: &AffineElt, e: i64) -> bool {
        self.alcove_profile(a)
            .floors
            .iter()
            .all(|row| row.iter().all(|&n| n >= e || n <= -e))
    }

    /// Upper-arrow order: `a` is below `b` for the reflection-generated
    /// Jantzen ordering. Elements of different right `W_a`-cosets are
    /// incomparable (returns false).
    pub fn up_le(&self, a: &AffineElt, b: &AffineElt) -> Result<bool> {
        if a.flag != b.flag {
            return Err(Error::FlagMismatch);
        }
        if self.zeta_class(a) != self.zeta_class(b) {
            return Ok(false);
        }
        let single = self.embedding_datum();
        for j in 0..self.cfg.f {
            let aj = single.forget_flag(self.slice_elt(a, j));
            let bj = single.forget_flag(self.slice_elt(b, j));
            if !single.up_le_single(&aj, &bj) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn forget_flag(&self, mut a: AffineElt) -> AffineElt {
        a.flag = Flag::Plain;
        a
    }

    /// Single-embedding upward BFS from `a` towards `b`.
    fn up_le_single(&self, a: &AffineElt, b: &AffineElt) -> bool {
        if a == b {
            return true;
        }
        let d_target = self.alcove_profile(b).d_sums()[0];
        let mut seen: HashSet<(Weight, Vec<usize>)> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert((a.nu.clone(), a.w.perms[0].clone()));
        queue.push_back(a.clone());
        while let Some(cur) = queue.pop_front() {
            for next in self.up_neighbors(&cur, d_target) {
                if &next == b {
                    return true;
                }
                let key = (next.nu.clone(), next.w.perms[0].clone());
                if seen.insert(key) {
                    queue.push_back(next);
                }
            }
        }
        false
    }

    /// All single-reflection upward moves from `cur` whose d-sum stays
    /// within `d_cap` (single embedding).
    pub(crate) fn up_neighbors(&self, cur: &AffineElt, d_cap: i64) -> Vec<AffineElt> {
        let prof = self.alcove_profile(cur);
        let d_cur = prof.d_sums()[0];
        let mut out = Vec::new();
        for (idx, &(i, k)) in self.positive_root_pairs().iter().enumerate() {
            let n_beta = prof.floors[0][idx];
            // reflecting through H_{beta,m} with m > n_beta moves up by
            // 2(m - n_beta) - 1
            let mut m = n_beta + 1;
            while d_cur + 2 * (m - n_beta) - 1 <= d_cap {
                out.push(self.mul_same(&self.affine_reflection(i, k, m), cur));
                m += 1;
            }
        }
        out
    }

    /// All single-reflection downward moves from `cur` with d-sum at least
    /// `d_floor` (single embedding).
    pub(crate) fn down_neighbors(&self, cur: &AffineElt, d_floor: i64) -> Vec<AffineElt> {
        let prof = self.alcove_profile(cur);
        let d_cur = prof.d_sums()[0];
        let mut out = Vec::new();
        for (idx, &(i, k)) in self.positive_root_pairs().iter().enumerate() {
            let n_beta = prof.floors[0][idx];
            let mut m = n_beta;
            while d_cur + 2 * (m - n_beta) - 1 >= d_floor {
                out.push(self.mul_same(&self.affine_reflection(i, k, m), cur));
                m -= 1;
            }
        }
        out
    }

    /// `s_{beta,m} = t_{m beta} s_beta` for the positive root `e_i - e_k`
    /// (single embedding).
    pub(crate) fn affine_reflection(&self, i: usize, k: usize, m: i64) -> AffineElt {
        debug_assert_eq!(self.cfg.f, 1);
        let mut perm: Vec<usize> = (0..self.cfg.n).collect();
        perm.swap(i, k);
        let mut nu = Weight::zero(&self.cfg);
        nu.coords[0][i] = m;
        nu.coords[0][k] = -m;
        AffineElt::from_parts(nu, FinWeylElt { perms: vec![perm] })
    }

    /// Full upward closure of `from` with d-sum capped (single embedding).
    pub(crate) fn up_set_bounded(&self, from: &AffineElt, d_cap: i64) -> Vec<AffineElt> {
        let mut seen: HashSet<(Weight, Vec<usize>)> = HashSet::new();
        let mut queue = VecDeque::new();
        let mut out = Vec::new();
        seen.insert((from.nu.clone(), from.w.perms[0].clone()));
        queue.push_back(from.clone());
        out.push(from.clone());
        while let Some(cur) = queue.pop_front() {
            for next in self.up_neighbors(&cur, d_cap) {
                let key = (next.nu.clone(), next.w.perms[0].clone());
                if seen.insert(key) {
                    out.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        out
    }

    /// Full downward closure of `from` with d-sum bounded below
    /// (single embedding).
    pub(crate) fn down_set_bounded(&self, from: &AffineElt, d_floor: i64) -> Vec<AffineElt> {
        let mut seen: HashSet<(Weight, Vec<usize>)> = HashSet::new();
        let mut queue = VecDeque::new();
        let mut out = Vec::new();
        seen.insert((from.nu.clone(), from.w.perms[0].clone()));
        queue.push_back(from.clone());
        out.push(from.clone());
        while let Some(cur) = queue.pop_front() {
            for next in self.down_neighbors(&cur, d_floor) {
                let key = (next.nu.clone(), next.w.perms[0].clone());
                if seen.insert(key) {
                    out.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        out
    }

    /// Representatives of `W~_1^+` modulo `X^0(T)` for a single embedding,
    /// translation parts normalized to have minimum coordinate zero. The
    /// finite parts run over `W` bijectively.
    pub fn restricted_classes_single(&self) -> Vec<AffineElt> {
        debug_assert_eq!(self.cfg.f, 1);
        let n = self.cfg.n;
        let mut out = Vec::new();
        for perm in permutations(n) {
            for mask in 0..(1u32 << (n - 1)) {
                let mut nu_row = vec![0i64; n];
                for i in (0..n - 1).rev() {
                    let d = ((mask >> i) & 1) as i64;
                    nu_row[i] = nu_row[i + 1] + d;
                }
                let cand = AffineElt::from_parts(
                    Weight::from_rows(vec![nu_row]),
                    FinWeylElt { perms: vec![perm.clone()] },
                );
                if self.is_restricted_elt(&cand) {
                    out.push(cand);
                }
            }
        }
        out
    }

    /// The element of `W~_1^+` with the given finite part, unique up to
    /// `X^0(T)` and returned in normalized form.
    pub fn restricted_lift(&self, w: &FinWeylElt) -> AffineElt {
        let single = self.embedding_datum();
        let classes = single.restricted_classes_single();
        let parts: Vec<AffineElt> = (0..self.cfg.f)
            .map(|j| {
                classes
                    .iter()
                    .find(|c| c.w.perms[0] == w.perms[j])
                    .expect("every finite Weyl element has a restricted lift")
                    .clone()
            })
            .collect();
        self.assemble(&parts)
    }

    /// Representatives of `W~_1^+ / X^0` for the full product group.
    pub fn restricted_classes(&self) -> Vec<AffineElt> {
        let single = self.embedding_datum();
        let classes = single.restricted_classes_single();
        let mut combos: Vec<Vec<AffineElt>> = vec![Vec::new()];
        for _ in 0..self.cfg.f {
            let mut next = Vec::new();
            for combo in &combos {
                for c in &classes {
                    let mut extended = combo.clone();
                    extended.push(c.clone());
                    next.push(extended);
                }
            }
            combos = next;
        }
        combos.into_iter().map(|c| self.assemble(&c)).collect()
    }

    /// Normalizes the translation part modulo `X^0`: subtracts the minimum
    /// coordinate per embedding, returning the normalized element and the
    /// subtracted `X^0`-weight.
    pub fn normalize_x0(&self, a: &AffineElt) -> (AffineElt, Weight) {
        let mins: Vec<i64> = a
            .nu
            .coords
            .iter()
            .map(|row| *row.iter().min().expect("nonempty"))
            .collect();
        let shift = Weight::from_rows(
            mins.iter()
                .map(|&m| vec![m; self.cfg.n])
                .collect(),
        );
        let mut norm = a.clone();
        norm.nu = norm.nu.sub(&shift);
        (norm, shift)
    }

    /// Canonical decomposition `a = w2^{-1} w0 t_{nu+(e-1)eta0} w1` of an
    /// e-regular element, with `w1, w2` restricted and `nu` dominant; the
    /// triple is unique up to `X^0` and returned in normalized form.
    pub fn regular_decompose(&self, a: &AffineElt, e: i64) -> Result<RegularDecomp> {
        if !self.is_e_regular(a, e) {
            return Err(Error::NotRegular { e });
        }
        let single = self.embedding_datum();
        let classes = single.restricted_classes_single();
        let w0 = FinWeylElt::longest(&single.cfg);
        let mut parts1 = Vec::new();
        let mut parts2 = Vec::new();
        let mut nu_rows = Vec::new();
        for j in 0..self.cfg.f {
            let aj = single.forget_flag(self.slice_elt(a, j));
            let mut found = None;
            'search: for w1 in &classes {
                for w2 in &classes {
                    let g = single.mul_same(&single.mul_same(w2, &aj), &single.inv(w1));
                    if g.w != w0 {
                        continue;
                    }
                    // g = w0 t_mu stored as t_{w0(mu)} w0; recover mu
                    let mu = w0.act(&g.nu);
                    let nu_j = Weight::from_rows(vec![mu.coords[0].clone()])
                        .sub(&Weight::eta0(&single.cfg).scale(e - 1));
                    if single.is_dominant_weight(&nu_j) {
                        found = Some((w1.clone(), w2.clone(), nu_j.coords[0].clone()));
                        break 'search;
                    }
                }
            }
            let (w1, w2, nu_j) = found.ok_or(Error::NotRegular { e })?;
            parts1.push(w1);
            parts2.push(w2);
            nu_rows.push(nu_j);
        }
        Ok(RegularDecomp {
            w1: self.assemble(&parts1),
            w2: self.assemble(&parts2),
            nu: Weight::from_rows(nu_rows),
        })
    }

    /// Rebuilds the element of a canonical decomposition.
    pub fn materialize_decomp(&self, rd: &RegularDecomp, e: i64) -> AffineElt {
        let w0 = AffineElt::from_parts(Weight::zero(&self.cfg), FinWeylElt::longest(&self.cfg));
        let mid = AffineElt::translation(
            rd.nu.add(&Weight::eta0(&self.cfg).scale(e - 1)),
        );
        let m = self.mul_same(&w0, &self.mul_same(&mid, &rd.w1));
        self.mul_same(&self.inv(&rd.w2), &m)
    }

    /// `mu` lies in the convex hull of the Weyl orbit of `lambda`.
    pub fn convex_hull_contains(&self, lambda: &Weight, mu: &Weight) -> bool {
        let n = self.cfg.n;
        let single = self.embedding_datum();
        for j in 0..self.cfg.f {
            let lam_j = Weight::from_rows(vec![lambda.coords[j].clone()]);
            let mu_j = Weight::from_rows(vec![mu.coords[j].clone()]);
            for perm in permutations(n) {
                let w = FinWeylElt { perms: vec![perm] };
                let ww0 = w.compose(&FinWeylElt::longest(&single.cfg));
                let v = ww0.inverse().act(&mu_j.sub(&w.act(&lam_j)));
                if !single.is_dominant_weight(&v) {
                    return false;
                }
            }
        }
        true
    }
}

/// All permutations of `{0..n-1}` in a deterministic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn rec(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    rec(0, &mut cur, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::AffineElt;

    fn datum(n: usize, f: usize, e: i64, p: i64) -> RootDatum {
        RootDatum::new(RootDatumConfig::new(n, f, e, p).unwrap())
    }

    fn t(rows: Vec<Vec<i64>>) -> AffineElt {
        AffineElt::translation(Weight::from_rows(rows))
    }

    #[test]
    fn profile_examples() {
        let d = datum(2, 1, 1, 101);
        let id = AffineElt::identity(&d);
        assert_eq!(d.alcove_profile(&id).floors, vec![vec![0]]);
        assert_eq!(d.alcove_profile(&t(vec![vec![1, 0]])).floors, vec![vec![1]]);
        let w0 = AffineElt::from_parts(Weight::zero(&d.cfg), FinWeylElt::longest(&d.cfg));
        assert_eq!(d.alcove_profile(&w0).floors, vec![vec![-1]]);
    }

    #[test]
    fn profile_independent_of_sample_point() {
        let d = datum(3, 1, 1, 101);
        let a = d.mul_same(
            &t(vec![vec![2, 0, -1]]),
            &AffineElt::from_parts(Weight::zero(&d.cfg), FinWeylElt::simple(&d.cfg, 2)),
        );
        let bary = d.act_sample(&a, &SamplePoint::barycenter(&d));
        for i in 1..3 {
            let hw = d.act_sample(&a, &SamplePoint::half_wall(&d, i));
            for (idx, &(p, q)) in d.positive_root_pairs().iter().enumerate() {
                let r = Root { j: 0, i: p, k: q, positive: true };
                let (bn, bd) = bary.pair(&r);
                let (hn, hd) = hw.pair(&r);
                assert_eq!(bn.div_euclid(bd), hn.div_euclid(hd), "root {idx}");
            }
        }
    }

    #[test]
    fn dominant_restricted_examples() {
        let d = datum(2, 1, 1, 101);
        let id = AffineElt::identity(&d);
        assert!(d.is_dominant_elt(&id) && d.is_restricted_elt(&id));
        let te = t(vec![vec![1, 0]]);
        assert!(d.is_dominant_elt(&te) && !d.is_restricted_elt(&te));
        let w0 = AffineElt::from_parts(Weight::zero(&d.cfg), FinWeylElt::longest(&d.cfg));
        assert!(!d.is_dominant_elt(&w0) && !d.is_restricted_elt(&w0));
        // t_{eta0} is dominant but not restricted for n >= 2
        let d3 = datum(3, 1, 1, 101);
        let teta = t(vec![Weight::eta0(&d3.cfg).coords[0].clone()]);
        assert!(d3.is_dominant_elt(&teta) && !d3.is_restricted_elt(&teta));
    }

    #[test]
    fn up_le_examples() {
        let d = datum(2, 1, 1, 101);
        let a = t(vec![vec![1, 0]]);
        assert!(d.up_le(&a, &a).unwrap());
        let id = AffineElt::identity(&d);
        // id up to t_alpha = t_{(1,-1)}
        assert!(d.up_le(&id, &t(vec![vec![1, -1]])).unwrap());
        assert!(!d.up_le(&t(vec![vec![1, -1]]), &id).unwrap());
        // different cosets: false both ways
        assert!(!d.up_le(&id, &a).unwrap());
    }

    #[test]
    fn p_dot_examples() {
        let d = datum(2, 1, 1, 7);
        let lam = Weight::from_rows(vec![vec![3, 1]]);
        let id = AffineElt::identity(&d);
        assert_eq!(d.p_dot(&id, &lam), lam);
        let wh = d.w_h();
        assert_eq!(d.p_dot(&wh, &lam), Weight::from_rows(vec![vec![0, -3]]));
        // t_nu . l = l + p nu
        let tnu = t(vec![vec![2, -1]]);
        assert_eq!(
            d.p_dot(&tnu, &lam),
            lam.add(&Weight::from_rows(vec![vec![14, -7]]))
        );
    }

    #[test]
    fn p_dot_is_an_action() {
        let d = datum(3, 2, 1, 11);
        let a = d.mul_same(
            &t(vec![vec![1, 0, -2], vec![0, 3, 1]]),
            &AffineElt::from_parts(Weight::zero(&d.cfg), FinWeylElt::simple_at(&d.cfg, 0, 2)),
        );
        let b = d.mul_same(
            &t(vec![vec![0, 1, 0], vec![2, 0, 0]]),
            &AffineElt::from_parts(Weight::zero(&d.cfg), FinWeylElt::longest(&d.cfg)),
        );
        let lam = Weight::from_rows(vec![vec![4, 2, 0], vec![1, 5, 3]]);
        assert_eq!(
            d.p_dot(&d.mul_same(&a, &b), &lam),
            d.p_dot(&a, &d.p_dot(&b, &lam))
        );
    }

    #[test]
    fn deepness_examples() {
        let d = datum(2, 1, 1, 7);
        let lam = Weight::from_rows(vec![vec![3, 1]]);
        assert!(d.is_m_deep(&lam, 2));
        assert!(!d.is_m_deep(&lam, 3));
        assert_eq!(d.depth_in_c0(&lam), Some(2));
        // m-generic iff lambda - eta0 is m-deep
        for m in 0..4 {
            assert_eq!(
                d.is_m_generic(&lam, m),
                d.is_m_deep(&lam.sub(&Weight::eta0(&d.cfg)), m)
            );
        }
    }

    #[test]
    fn smallness_examples() {
        let e = 2i64;
        let d = datum(3, 1, e, 101);
        let bound = e * (d.cfg.n as i64 - 1);
        let tv = t(vec![Weight::eta0(&d.cfg).scale(e).coords[0].clone()]);
        assert!(d.is_m_small(&tv, bound));
        assert!(!d.is_m_small(&tv, bound - 1));
    }

    #[test]
    fn regularity_examples() {
        let e = 2i64;
        let d = datum(2, 1, e, 101);
        assert!(d.is_e_regular(&t(vec![vec![e, 0]]), e));
        let id = AffineElt::identity(&d);
        assert!(!d.is_e_regular(&id, 1));
        assert!(d.regular_decompose(&id, 1).is_err());
    }

    #[test]
    fn restricted_classes_count_and_lift() {
        // |W~_1^+ / X^0| = n! per embedding, finite parts bijective with W
        for n in [2usize, 3, 4] {
            let d = datum(n, 1, 1, 101);
            let classes = d.restricted_classes_single();
            let mut fins: Vec<_> = classes.iter().map(|c| c.w.perms[0].clone()).collect();
            fins.sort();
            fins.dedup();
            assert_eq!(classes.len(), fins.len());
            assert_eq!(classes.len(), permutations(n).len());
        }
        let d = datum(2, 1, 1, 101);
        let s = FinWeylElt::simple(&d.cfg, 1);
        let lift = d.restricted_lift(&s);
        assert_eq!(lift, d.omega_rho(0)); // rho = t_{(1,0)} s
    }

    #[test]
    fn w_h_is_restricted() {
        for (n, f) in [(2usize, 1usize), (3, 1), (3, 2), (4, 1)] {
            let d = datum(n, f, 1, 101);
            let wh = d.w_h();
            assert!(d.is_restricted_elt(&wh));
            assert_eq!(wh.w, FinWeylElt::longest(&d.cfg));
        }
    }

    #[test]
    fn regular_decompose_translation_endpoint() {
        // t_{w^{-1}(e eta0)} decomposes with w1 the restricted lift of w,
        // w2 = w_h * w1 and nu = 0
        let e = 2i64;
        let d = datum(3, 1, e, 101);
        for perm in permutations(3) {
            let w = FinWeylElt { perms: vec![perm] };
            let nu = w.inverse().act(&Weight::eta0(&d.cfg).scale(e));
            let a = t(vec![nu.coords[0].clone()]);
            assert!(d.is_e_regular(&a, e));
            let rd = d.regular_decompose(&a, e).unwrap();
            assert_eq!(d.materialize_decomp(&rd, e), a);
            // nu absorbs the X^0 freedom once w1, w2 are normalized
            assert!(d.is_x0(&rd.nu));
            assert_eq!(rd.w1.w, w);
            let (expect_w2, _) = d.normalize_x0(&d.mul_same(&d.w_h(), &rd.w1));
            assert_eq!(rd.w2, expect_w2);
        }
    }

    #[test]
    fn convex_hull_examples() {
        let e = 3i64;
        let d = datum(2, 1, e, 101);
        let lam = Weight::eta0(&d.cfg).scale(e);
        assert!(d.convex_hull_contains(&lam, &lam));
        for k in 0..=e {
            let mu = Weight::from_rows(vec![vec![e - k, k]]);
            assert!(d.convex_hull_contains(&lam, &mu), "k={k}");
        }
        let outside = Weight::from_rows(vec![vec![e + 1, -1]]);
        assert!(!d.convex_hull_contains(&lam, &outside));
    }
}
