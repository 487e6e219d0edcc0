//! The extended affine Weyl group `W~^J = (X^*(T) x| W)^J`.
//!
//! Elements are stored as `t_nu w` pairs. A `dual` flag marks whether
//! length and Bruhat order are taken with respect to the dominant base
//! alcove (`W~`) or the antidominant one (`W~^vee`); storage is identical
//! for both. Alcove positions are computed exactly at rational sample
//! points, so every floor below is exact integer arithmetic.

use crate::error::{Error, Result};
use crate::root_datum::{FinWeylElt, Root, RootDatum, Weight};
use serde::{Deserialize, Serialize};

/// Which base alcove the order structure refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flag {
    /// Dominant base alcove.
    Plain,
    /// Antidominant base alcove (the starred side).
    Dual,
}

/// An element `t_nu w` of the extended affine Weyl group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineElt {
    pub nu: Weight,
    pub w: FinWeylElt,
    pub flag: Flag,
}

/// A point of the apartment with exact rational coordinates
/// (`nums[j][i] / den` at embedding `j`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplePoint {
    pub nums: Vec<Vec<i64>>,
    pub den: i64,
}

impl SamplePoint {
    /// Barycentric interior point `eta0 / n` of the dominant base alcove.
    pub fn barycenter(datum: &RootDatum) -> SamplePoint {
        SamplePoint {
            nums: Weight::eta0(&datum.cfg).coords,
            den: datum.cfg.n as i64,
        }
    }

    /// Image of the barycenter in the antidominant base alcove.
    pub fn antidominant(datum: &RootDatum) -> SamplePoint {
        let w0 = FinWeylElt::longest(&datum.cfg);
        let x = SamplePoint::barycenter(datum);
        SamplePoint {
            nums: w0.act(&Weight::from_rows(x.nums)).coords,
            den: x.den,
        }
    }

    /// Interior point of the base alcove with `<x, alpha_i^vee> = 1/2` at the
    /// given simple root (1-based `i`), all other simple pairings `1/(2(n-1))`.
    pub fn half_wall(datum: &RootDatum, i: usize) -> SamplePoint {
        let n = datum.cfg.n;
        assert!(i >= 1 && i < n);
        let den = if n == 2 { 2 } else { 2 * (n as i64 - 1) };
        // consecutive differences, scaled by den
        let mut diffs = vec![if n == 2 { 0 } else { 1 }; n - 1];
        diffs[i - 1] = den / 2;
        let mut row = vec![0i64; n];
        for k in (0..n - 1).rev() {
            row[k] = row[k + 1] + diffs[k];
        }
        SamplePoint {
            nums: vec![row; datum.cfg.f],
            den,
        }
    }

    /// `<x_j, beta^vee>` as an exact fraction `(num, den)`.
    pub fn pair(&self, beta: &Root) -> (i64, i64) {
        let row = &self.nums[beta.j];
        let v = row[beta.i] - row[beta.k];
        (if beta.positive { v } else { -v }, self.den)
    }
}

impl AffineElt {
    pub fn identity(datum: &RootDatum) -> AffineElt {
        AffineElt {
            nu: Weight::zero(&datum.cfg),
            w: FinWeylElt::identity(&datum.cfg),
            flag: Flag::Plain,
        }
    }

    pub fn translation(nu: Weight) -> AffineElt {
        let f = nu.coords.len();
        let n = nu.coords[0].len();
        AffineElt {
            nu,
            w: FinWeylElt {
                perms: vec![(0..n).collect(); f],
            },
            flag: Flag::Plain,
        }
    }

    pub fn from_parts(nu: Weight, w: FinWeylElt) -> AffineElt {
        AffineElt { nu, w, flag: Flag::Plain }
    }

    pub fn is_translation(&self) -> bool {
        self.w.is_identity()
    }

    /// Affine action on an integral weight: `t_nu w (l) = w(l) + nu`.
    pub fn act(&self, lambda: &Weight) -> Weight {
        self.w.act(lambda).add(&self.nu)
    }

    /// Image of the origin, i.e. the translation part.
    pub fn act_zero(&self) -> Weight {
        self.nu.clone()
    }
}

impl RootDatum {
    /// Group law `(t_nu w)(t_mu u) = t_{nu + w(mu)} (wu)`; the flags must agree.
    pub fn mul(&self, a: &AffineElt, b: &AffineElt) -> Result<AffineElt> {
        if a.flag != b.flag {
            return Err(Error::FlagMismatch);
        }
        Ok(self.mul_same(a, b))
    }

    /// Group law for elements known to carry the same flag.
    pub fn mul_same(&self, a: &AffineElt, b: &AffineElt) -> AffineElt {
        AffineElt {
            nu: a.nu.add(&a.w.act(&b.nu)),
            w: a.w.compose(&b.w),
            flag: a.flag,
        }
    }

    pub fn inv(&self, a: &AffineElt) -> AffineElt {
        let winv = a.w.inverse();
        AffineElt {
            nu: winv.act(&a.nu).neg(),
            w: winv,
            flag: a.flag,
        }
    }

    /// Star involution `(t_nu w)^* = w^{-1} t_nu`, exchanging the two flags.
    pub fn star(&self, a: &AffineElt) -> AffineElt {
        let winv = a.w.inverse();
        AffineElt {
            nu: winv.act(&a.nu),
            w: winv,
            flag: match a.flag {
                Flag::Plain => Flag::Dual,
                Flag::Dual => Flag::Plain,
            },
        }
    }

    /// Builds several standard elements as plain-flag values.
    pub fn identity_elt(&self) -> AffineElt {
        AffineElt::identity(self)
    }

    /// `w~_h = w_0 t_{-eta0}`, an element of `W~_1^+`.
    pub fn w_h(&self) -> AffineElt {
        let w0 = FinWeylElt::longest(&self.cfg);
        let nu = w0.act(&Weight::eta0(&self.cfg)).neg();
        AffineElt::from_parts(nu, w0)
    }

    /// Image of a rational sample point under the affine action.
    pub fn act_sample(&self, a: &AffineElt, x: &SamplePoint) -> SamplePoint {
        let wx = a.w.act(&Weight::from_rows(x.nums.clone()));
        let nums = wx
            .coords
            .iter()
            .zip(&a.nu.coords)
            .map(|(r, nu)| r.iter().zip(nu).map(|(c, v)| c + v * x.den).collect())
            .collect();
        SamplePoint { nums, den: x.den }
    }

    fn base_point(&self, flag: Flag) -> SamplePoint {
        match flag {
            Flag::Plain => SamplePoint::barycenter(self),
            Flag::Dual => SamplePoint::antidominant(self),
        }
    }

    /// Floor `n_beta` of `<a(x), beta^vee>` over the flag's base alcove,
    /// for one positive root.
    fn floor_at(&self, y: &SamplePoint, beta: &Root) -> i64 {
        let (num, den) = y.pair(beta);
        num.div_euclid(den)
    }

    /// All floors of the image alcove `a(C)` where `C` is the flag's base
    /// alcove, indexed per embedding in the order of `positive_root_pairs`.
    pub fn floors(&self, a: &AffineElt) -> Vec<Vec<i64>> {
        let y = self.act_sample(a, &self.base_point(a.flag));
        (0..self.cfg.f)
            .map(|j| {
                self.positive_root_pairs()
                    .iter()
                    .map(|&(i, k)| {
                        self.floor_at(&y, &Root { j, i, k, positive: true })
                    })
                    .collect()
            })
            .collect()
    }

    /// Iwahori-Matsumoto length with respect to the flag's base alcove:
    /// the number of root hyperplanes separating the base alcove from its
    /// image, summed over embeddings.
    pub fn length(&self, a: &AffineElt) -> i64 {
        let base = match a.flag {
            Flag::Plain => 0,
            Flag::Dual => -1,
        };
        self.floors(a)
            .iter()
            .map(|row| row.iter().map(|n| (n - base).abs()).sum::<i64>())
            .sum()
    }

    pub fn length_at(&self, a: &AffineElt, j: usize) -> i64 {
        let base = match a.flag {
            Flag::Plain => 0,
            Flag::Dual => -1,
        };
        self.floors(a)[j].iter().map(|n| (n - base).abs()).sum()
    }

    /// The simple affine reflections of the Coxeter system determined by the
    /// flag, as `(embedding, index)`-labelled elements. Index `0` is the
    /// affine reflection, `1..n-1` the finite simple transpositions.
    pub fn simple_affine_reflection(&self, flag: Flag, j: usize, idx: usize) -> AffineElt {
        let n = self.cfg.n;
        assert!(idx < n && j < self.cfg.f);
        let mut elt = if idx > 0 {
            AffineElt::from_parts(
                Weight::zero(&self.cfg),
                FinWeylElt::simple_at(&self.cfg, j, idx),
            )
        } else {
            // reflection in the wall of the highest root theta = e_1 - e_n
            let mut perms: Vec<Vec<usize>> = vec![(0..n).collect(); self.cfg.f];
            perms[j].swap(0, n - 1);
            let mut nu = Weight::zero(&self.cfg);
            let sign = match flag {
                Flag::Plain => 1,  // s_{theta,1} = t_theta s_theta
                Flag::Dual => -1,  // s_{theta,-1} = t_{-theta} s_theta
            };
            nu.coords[j][0] = sign;
            nu.coords[j][n - 1] = -sign;
            AffineElt::from_parts(nu, FinWeylElt { perms })
        };
        elt.flag = flag;
        elt
    }

    pub fn simple_affine_labels(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 0..self.cfg.f {
            for idx in 0..self.cfg.n {
                out.push((j, idx));
            }
        }
        out
    }

    /// The rotation generator `rho = t_{(1,0,...,0)} (1 2 ... n)` of `Omega`
    /// at one embedding (length 0, stabilizes the base alcove).
    pub fn omega_rho(&self, j: usize) -> AffineElt {
        let n = self.cfg.n;
        let mut perms: Vec<Vec<usize>> = vec![(0..n).collect(); self.cfg.f];
        perms[j] = (0..n).map(|i| (i + 1) % n).collect();
        let mut nu = Weight::zero(&self.cfg);
        nu.coords[j][0] = 1;
        AffineElt::from_parts(nu, FinWeylElt { perms })
    }

    /// `rho^{k_j}` at every embedding, the length-zero representative of the
    /// coset labelled by `k` in `W~ / W_a = Z^J`.
    pub fn omega_power(&self, powers: &[i64]) -> AffineElt {
        let mut out = AffineElt::identity(self);
        for (j, &k) in powers.iter().enumerate() {
            let rho = self.omega_rho(j);
            let step = if k >= 0 { rho } else { self.inv(&rho) };
            for _ in 0..k.abs() {
                out = self.mul_same(&out, &step);
            }
        }
        out
    }

    /// Image in `W~/W_a = X^*(Z) = Z` per embedding: the coordinate sum of
    /// the translation part.
    pub fn zeta_class(&self, a: &AffineElt) -> Vec<i64> {
        a.nu.coord_sums()
    }

    /// Unique decomposition `a = wa_part * omega_part` with `omega_part` the
    /// length-zero element of `a`'s right `W_a`-coset.
    pub fn omega_decompose(&self, a: &AffineElt) -> (AffineElt, AffineElt) {
        let zeta = self.zeta_class(a);
        let mut omega = self.omega_power(&zeta);
        omega.flag = a.flag;
        let wa = self.mul_same(a, &self.inv(&omega));
        (wa, omega)
    }

    /// Left descent: some simple affine reflection `s` with `l(sa) < l(a)`.
    fn left_descent(&self, a: &AffineElt) -> Option<AffineElt> {
        let la = self.length(a);
        for (j, idx) in self.simple_affine_labels() {
            let s = self.simple_affine_reflection(a.flag, j, idx);
            if self.length(&self.mul_same(&s, a)) < la {
                return Some(s);
            }
        }
        None
    }

    /// A reduced word for `a`: simple affine reflections (as `(j, idx)`
    /// labels) whose product times the returned `Omega`-element equals `a`.
    pub fn reduced_word(&self, a: &AffineElt) -> (Vec<(usize, usize)>, AffineElt) {
        let mut word = Vec::new();
        let mut cur = a.clone();
        let mut l = self.length(&cur);
        while l > 0 {
            let mut found = false;
            for (j, idx) in self.simple_affine_labels() {
                let s = self.simple_affine_reflection(a.flag, j, idx);
                let next = self.mul_same(&s, &cur);
                let ln = self.length(&next);
                if ln < l {
                    word.push((j, idx));
                    cur = next;
                    l = ln;
                    found = true;
                    break;
                }
            }
            debug_assert!(found, "positive-length element with no descent");
        }
        (word, cur)
    }

    /// Evaluates a word of simple reflections times an `Omega` part.
    pub fn eval_word(&self, flag: Flag, word: &[(usize, usize)], omega: &AffineElt) -> AffineElt {
        let mut out = omega.clone();
        for &(j, idx) in word.iter().rev() {
            let s = self.simple_affine_reflection(flag, j, idx);
            out = self.mul_same(&s, &out);
        }
        out
    }

    /// Bruhat order on the extended group: elements of different right
    /// `W_a`-cosets are incomparable; within a coset the `W_a` parts are
    /// compared through the lifting property.
    pub fn bruhat_le(&self, a: &AffineElt, b: &AffineElt) -> Result<bool> {
        if a.flag != b.flag {
            return Err(Error::FlagMismatch);
        }
        if self.zeta_class(a) != self.zeta_class(b) {
            return Ok(false);
        }
        let (u, _) = self.omega_decompose(a);
        let (v, _) = self.omega_decompose(b);
        Ok(self.bruhat_le_wa(&u, &v))
    }

    /// Lifting-property recursion inside `W_a^J`: if `s` is a left descent of
    /// `v`, then `u <= v` iff `su <= sv` when `s` descends `u`, else `u <= sv`.
    fn bruhat_le_wa(&self, u: &AffineElt, v: &AffineElt) -> bool {
        let mut u = u.clone();
        let mut v = v.clone();
        let mut lu = self.length(&u);
        let mut lv = self.length(&v);
        loop {
            if lv == 0 {
                return lu == 0;
            }
            if lu > lv {
                return false;
            }
            let s = self
                .left_descent(&v)
                .expect("positive-length element has a descent");
            let sv = self.mul_same(&s, &v);
            let su = self.mul_same(&s, &u);
            let lsu = self.length(&su);
            if lsu < lu {
                u = su;
                lu = lsu;
            }
            v = sv;
            lv -= 1;
        }
    }

    /// Unique factorization `a = w * xplus` with `xplus(A_0)` dominant and
    /// `l(a) = l(w) + l(xplus)`.
    pub fn dominant_rep(&self, a: &AffineElt) -> (FinWeylElt, AffineElt) {
        let y = self.act_sample(a, &self.base_point(a.flag));
        // per embedding, w sends position i to the rank of the i-th largest
        // coordinate; then w^{-1}(y) is strictly decreasing.
        let perms = y
            .nums
            .iter()
            .map(|row| {
                let mut idx: Vec<usize> = (0..row.len()).collect();
                idx.sort_by_key(|&i| std::cmp::Reverse(row[i]));
                // idx[r] = position of rank r; w(idx[r]) = r would sort, we
                // need w with w(r) = idx[r] so that (w^{-1} y)_r = y_{w(r)}.
                idx
            })
            .collect();
        let w = FinWeylElt { perms };
        let mut fin = AffineElt::from_parts(Weight::zero(&self.cfg), w.inverse());
        fin.flag = a.flag;
        let xplus = self.mul_same(&fin, a);
        (w, xplus)
    }
}

/// Text form `t[nu;...]·w(one-line;...)`, whitespace-insensitive on parse.
pub fn elt_to_text(a: &AffineElt) -> String {
    let nu = a
        .nu
        .coords
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(";");
    let w = a
        .w
        .one_line()
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(";");
    format!("t[{nu}]·w({w})")
}

pub fn parse_elt(datum: &RootDatum, text: &str) -> Result<AffineElt> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let rest = cleaned
        .strip_prefix("t[")
        .ok_or_else(|| Error::Parse(format!("expected `t[...]` in `{text}`")))?;
    let close = rest
        .find(']')
        .ok_or_else(|| Error::Parse("missing `]`".into()))?;
    let nu_part = &rest[..close];
    let mut tail = &rest[close + 1..];
    for sep in ["·", "*", "."] {
        if let Some(t) = tail.strip_prefix(sep) {
            tail = t;
            break;
        }
    }
    let w_part = tail
        .strip_prefix("w(")
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected `w(...)` in `{text}`")))?;

    let nu_rows = parse_int_rows(nu_part)?;
    if nu_rows.len() != datum.cfg.f || nu_rows.iter().any(|r| r.len() != datum.cfg.n) {
        return Err(Error::Parse("translation part has wrong shape".into()));
    }
    let w_rows = parse_int_rows(w_part)?;
    let lines: Vec<Vec<usize>> = w_rows
        .iter()
        .map(|r| r.iter().map(|&x| x as usize).collect())
        .collect();
    let w = FinWeylElt::from_one_line(&datum.cfg, &lines)?;
    Ok(AffineElt::from_parts(Weight::from_rows(nu_rows), w))
}

pub fn weight_to_text(w: &Weight) -> String {
    let body = w
        .coords
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(";");
    format!("[{body}]")
}

pub fn parse_weight(datum: &RootDatum, text: &str) -> Result<Weight> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let body = cleaned
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected `[...]` in `{text}`")))?;
    let rows = parse_int_rows(body)?;
    if rows.len() != datum.cfg.f || rows.iter().any(|r| r.len() != datum.cfg.n) {
        return Err(Error::Parse("weight has wrong shape".into()));
    }
    Ok(Weight::from_rows(rows))
}

fn parse_int_rows(body: &str) -> Result<Vec<Vec<i64>>> {
    body.split(';')
        .map(|row| {
            row.split(',')
                .map(|c| {
                    c.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad integer `{c}`")))
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::RootDatumConfig;

    fn datum(n: usize, f: usize) -> RootDatum {
        RootDatum::new(RootDatumConfig::new(n, f, 1, 101).unwrap())
    }

    fn t(d: &RootDatum, rows: Vec<Vec<i64>>) -> AffineElt {
        let _ = d;
        AffineElt::translation(Weight::from_rows(rows))
    }

    #[test]
    fn mul_examples() {
        let d = datum(2, 1);
        let a = t(&d, vec![vec![1, 0]]);
        let b = t(&d, vec![vec![0, 1]]);
        assert_eq!(d.mul(&a, &b).unwrap(), t(&d, vec![vec![1, 1]]));

        // s * t_{(1,0)} = t_{(0,1)} s
        let s = AffineElt::from_parts(Weight::zero(&d.cfg), FinWeylElt::simple(&d.cfg, 1));
        let lhs = d.mul(&s, &a).unwrap();
        let rhs = d.mul(&t(&d, vec![vec![0, 1]]), &s).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverses_and_flags() {
        let d = datum(3, 2);
        let a = d.mul_same(
            &t(&d, vec![vec![2, 0, -1], vec![0, 1, 0]]),
            &AffineElt::from_parts(Weight::zero(&d.cfg), FinWeylElt::simple_at(&d.cfg, 1, 2)),
        );
        let e = d.mul(&a, &d.inv(&a)).unwrap();
        assert!(e.is_translation() && e.nu == Weight::zero(&d.cfg));

        let starred = d.star(&a);
        assert_eq!(starred.flag, Flag::Dual);
        assert!(d.mul(&a, &starred).is_err());
        assert_eq!(d.star(&d.star(&a)), a);
    }

    #[test]
    fn star_of_translation_is_itself() {
        let d = datum(2, 1);
        let a = t(&d, vec![vec![3, -1]]);
        let s = d.star(&a);
        assert_eq!(s.nu, a.nu);
        assert!(s.w.is_identity());
        assert_eq!(s.flag, Flag::Dual);
    }

    #[test]
    fn star_by_definition() {
        // (t_{(1,0)} s)^* = s^{-1} t_{(1,0)}
        let d = datum(2, 1);
        let s = FinWeylElt::simple(&d.cfg, 1);
        let a = AffineElt::from_parts(Weight::from_rows(vec![vec![1, 0]]), s.clone());
        let starred = d.star(&a);
        // s^{-1} t_{(1,0)} = t_{s^{-1}(1,0)} s^{-1} = t_{(0,1)} s
        assert_eq!(starred.nu, Weight::from_rows(vec![vec![0, 1]]));
        assert_eq!(starred.w, s);
    }

    #[test]
    fn length_examples() {
        let d = datum(2, 1);
        assert_eq!(d.length(&t(&d, vec![vec![1, 0]])), 1);
        let cfg_e = RootDatumConfig::new(2, 1, 3, 101).unwrap();
        let de = RootDatum::new(cfg_e);
        for e in 1..5 {
            assert_eq!(de.length(&t(&de, vec![vec![e, 0]])), e);
        }
        assert_eq!(d.length(&d.omega_rho(0)), 0);
        assert_eq!(d.length(&t(&d, vec![vec![0, 1]])), 1);
    }

    #[test]
    fn omega_examples() {
        let d = datum(2, 1);
        let a = t(&d, vec![vec![1, 0]]);
        let (wa, omega) = d.omega_decompose(&a);
        assert_eq!(d.length(&omega), 0);
        assert_eq!(omega, d.omega_rho(0));
        assert_eq!(d.length(&wa), 1);
        assert_eq!(d.mul_same(&wa, &omega), a);

        let id = AffineElt::identity(&d);
        let (wa, omega) = d.omega_decompose(&id);
        assert_eq!(wa, id);
        assert_eq!(omega, id);
    }

    #[test]
    fn omega_part_of_translation_depends_on_coord_sum() {
        let d = datum(2, 1);
        for nu in [vec![2, -1], vec![0, 1], vec![1, 0], vec![-1, 2]] {
            let a = t(&d, vec![nu.clone()]);
            let (_, omega) = d.omega_decompose(&a);
            let expect = d.omega_power(&[nu.iter().sum::<i64>()]);
            assert_eq!(omega, expect);
        }
    }

    #[test]
    fn reduced_word_roundtrip() {
        let d = datum(2, 1);
        let id = AffineElt::identity(&d);
        let (word, omega) = d.reduced_word(&id);
        assert!(word.is_empty() && omega == id);

        let a = t(&d, vec![vec![1, 0]]);
        let (word, omega) = d.reduced_word(&a);
        assert_eq!(word.len(), 1);
        assert_eq!(d.length(&omega), 0);
        assert_eq!(d.eval_word(Flag::Plain, &word, &omega), a);
    }

    #[test]
    fn bruhat_le_examples() {
        let d = datum(2, 1);
        let a = t(&d, vec![vec![1, 0]]);
        assert!(d.bruhat_le(&a, &a).unwrap());
        // Omega generator <= t_{(1,0)} (same coset, length 0 vs 1)
        assert!(d.bruhat_le(&d.omega_rho(0), &a).unwrap());
        // different Omega classes are incomparable
        let b = t(&d, vec![vec![1, 1]]);
        assert!(!d.bruhat_le(&a, &b).unwrap());
        assert!(!d.bruhat_le(&b, &a).unwrap());
    }

    #[test]
    fn dominant_rep_examples() {
        let d = datum(2, 1);
        let a = t(&d, vec![vec![1, 0]]);
        let (w, xplus) = d.dominant_rep(&a);
        assert!(w.is_identity());
        assert_eq!(xplus, a);

        let w0 = FinWeylElt::longest(&d.cfg);
        let b = d.mul_same(&AffineElt::from_parts(Weight::zero(&d.cfg), w0.clone()), &a);
        let (w, xplus) = d.dominant_rep(&b);
        assert_eq!(w, w0);
        assert_eq!(xplus, a);
        assert_eq!(d.length(&b), d.length(&xplus) + 1);
    }

    #[test]
    fn text_roundtrip() {
        let d = datum(3, 2);
        let a = d.mul_same(
            &t(&d, vec![vec![2, 0, -1], vec![0, 1, 0]]),
            &AffineElt::from_parts(Weight::zero(&d.cfg), FinWeylElt::simple_at(&d.cfg, 1, 1)),
        );
        let s = elt_to_text(&a);
        assert_eq!(parse_elt(&d, &s).unwrap(), a);
        assert_eq!(parse_elt(&d, " t [ 2,0,-1 ; 0,1,0 ] * w(1,2,3; 2,1,3) ").unwrap(), a);
    }
}
