//! Brute-force reference implementations used to validate the fast paths:
//! a subword test for the Bruhat order and a gallery-distance length.
//! These are deliberately independent of the lifting recursion and the
//! Iwahori-Matsumoto floor formula.

use crate::affine::AffineElt;
use crate::root_datum::{RootDatum, Weight};
use std::collections::{HashSet, VecDeque};

impl RootDatum {
    /// Subword characterization of the Bruhat order: `a <= b` iff some
    /// subsequence of a fixed reduced word of `b`'s `W_a`-part multiplies to
    /// `a`'s `W_a`-part. Exponential in `l(b)`; for tests only.
    pub fn bruhat_le_subword(&self, a: &AffineElt, b: &AffineElt) -> bool {
        assert_eq!(a.flag, b.flag);
        if self.zeta_class(a) != self.zeta_class(b) {
            return false;
        }
        let (u, _) = self.omega_decompose(a);
        let (v, _) = self.omega_decompose(b);
        self.subword_products(&v).contains(&(u.nu, u.w.perms))
    }

    /// All elements obtainable as subsequence products of one fixed reduced
    /// word of `v`.
    pub fn subword_products(&self, v: &AffineElt) -> HashSet<(Weight, Vec<Vec<usize>>)> {
        let (word, omega) = self.reduced_word(v);
        debug_assert!(self.length(&omega) == 0);
        let mut out = HashSet::new();
        let m = word.len();
        assert!(m <= 24, "subword oracle is exponential; length too large");
        for mask in 0u64..(1u64 << m) {
            let mut cur = omega.clone();
            for (pos, &(j, idx)) in word.iter().enumerate().rev() {
                if mask >> pos & 1 == 1 {
                    let s = self.simple_affine_reflection(v.flag, j, idx);
                    cur = self.mul_same(&s, &cur);
                }
            }
            out.insert((cur.nu, cur.w.perms));
        }
        out
    }

    /// Length as the gallery distance from the base alcove, computed by BFS
    /// over right multiplication by simple affine reflections.
    pub fn length_bfs(&self, a: &AffineElt) -> i64 {
        let target = self.alcove_profile(a);
        let start = {
            let mut id = AffineElt::identity(self);
            id.flag = a.flag;
            id
        };
        if self.alcove_profile(&start) == target {
            return 0;
        }
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.alcove_profile(&start));
        queue.push_back((start, 0i64));
        while let Some((cur, dist)) = queue.pop_front() {
            for (j, idx) in self.simple_affine_labels() {
                let s = self.simple_affine_reflection(cur.flag, j, idx);
                let next = self.mul_same(&cur, &s);
                let prof = self.alcove_profile(&next);
                if prof == target {
                    return dist + 1;
                }
                if seen.insert(prof) {
                    queue.push_back((next, dist + 1));
                }
            }
        }
        unreachable!("alcove graph is connected");
    }

    /// All elements of length at most `cap` in the right `W_a`-coset of the
    /// length-zero element `omega`, by BFS on left multiplication.
    pub fn coset_ball(&self, omega: &AffineElt, cap: usize) -> Vec<AffineElt> {
        debug_assert_eq!(self.length(omega), 0);
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        let mut out = Vec::new();
        seen.insert((omega.nu.clone(), omega.w.perms.clone()));
        out.push(omega.clone());
        queue.push_back((omega.clone(), 0usize));
        while let Some((cur, l)) = queue.pop_front() {
            if l == cap {
                continue;
            }
            for (j, idx) in self.simple_affine_labels() {
                let s = self.simple_affine_reflection(cur.flag, j, idx);
                let next = self.mul_same(&s, &cur);
                if self.length(&next) as usize != l + 1 {
                    continue;
                }
                if seen.insert((next.nu.clone(), next.w.perms.clone())) {
                    out.push(next.clone());
                    queue.push_back((next, l + 1));
                }
            }
        }
        out
    }
}
