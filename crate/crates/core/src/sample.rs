//! Seeded generators of small random rationals, group elements and points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::action::{act_v, pgl2_embed, GroupElement, LiePair};
use crate::linalg::Matrix;
use crate::pvs::VElement;
use crate::rat::{self, Rat};
use crate::wpoint::w_literal;

pub const DEFAULT_SEED: u64 = 20_240_517;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// `p/q` with `|p| <= 3`, `1 <= q <= 3`.
    pub fn rat(&mut self) -> Rat {
        rat::rat(self.rng.gen_range(-3..=3), self.rng.gen_range(1..=3))
    }

    pub fn nonzero_rat(&mut self) -> Rat {
        let p = self.rng.gen_range(1..=3) * if self.rng.gen_bool(0.5) { 1 } else { -1 };
        rat::rat(p, self.rng.gen_range(1..=3))
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn vector(&mut self, n: usize) -> Vec<Rat> {
        (0..n).map(|_| self.rat()).collect()
    }

    pub fn array5(&mut self) -> [Rat; 5] {
        std::array::from_fn(|_| self.rat())
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |_, _| self.rat())
    }

    pub fn traceless(&mut self, n: usize) -> Matrix {
        let mut m = self.matrix(n, n);
        let t = m.trace();
        m[(n - 1, n - 1)] -= t;
        m
    }

    /// Product of random elementary shears and a random nonzero diagonal.
    pub fn invertible(&mut self, n: usize) -> Matrix {
        let diag: Vec<Rat> = (0..n).map(|_| self.nonzero_rat()).collect();
        let mut m = Matrix::diagonal(&diag);
        for _ in 0..2 * n {
            let r = self.rng.gen_range(0..n);
            let mut c = self.rng.gen_range(0..n - 1);
            if c >= r {
                c += 1;
            }
            let shear = &Matrix::identity(n) + &Matrix::from_elementary(n, r, c).scale(&self.rat());
            m = &shear * &m;
        }
        m
    }

    pub fn group_element(&mut self) -> GroupElement {
        GroupElement::new(self.invertible(5), self.invertible(3)).expect("invertible by construction")
    }

    pub fn pgl2(&mut self) -> Matrix {
        self.invertible(2)
    }

    pub fn pgl2_element(&mut self) -> GroupElement {
        pgl2_embed(&self.pgl2()).expect("invertible by construction")
    }

    pub fn v_element(&mut self) -> VElement {
        VElement::from_coords(&self.vector(30)).expect("30 coordinates")
    }

    /// A point `g·w` of the open orbit together with `g`.
    pub fn orbit_point(&mut self) -> (GroupElement, VElement) {
        let g = self.group_element();
        let x = act_v(&g, &w_literal());
        (g, x)
    }

    pub fn lie_pair(&mut self) -> LiePair {
        LiePair {
            x: self.traceless(5),
            y: self.traceless(3),
        }
    }

    /// Integer vector with entries in `[-bound, bound]`.
    pub fn int_vector5(&mut self, bound: i64) -> [i64; 5] {
        std::array::from_fn(|_| self.rng.gen_range(-bound..=bound))
    }
}

impl Default for Sampler {
    fn default() -> Self {
        Self::new(DEFAULT_SEED)
    }
}
