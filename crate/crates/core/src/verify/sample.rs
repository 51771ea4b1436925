use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::numerics::{is_q_power, rational, Rational};

/// Largest denominator of a sampled parameter.
pub const MAX_DENOMINATOR: i64 = 50;

/// One trial's parameters, shared by every identity and shift of that trial.
#[derive(Clone, Debug, PartialEq)]
pub struct Draw {
    pub a: Rational,
    pub c: Rational,
    pub x: Rational,
    pub q: Rational,
    pub t: Rational,
}

/// `Draw` rendered as `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DrawStrings {
    pub a: String,
    pub c: String,
    pub x: String,
    pub q: String,
    pub t: String,
}

impl Draw {
    pub fn strings(&self) -> DrawStrings {
        DrawStrings {
            a: self.a.to_string(),
            c: self.c.to_string(),
            x: self.x.to_string(),
            q: self.q.to_string(),
            t: self.t.to_string(),
        }
    }
}

fn unit_rational(rng: &mut ChaCha8Rng) -> Rational {
    let den = rng.gen_range(2..=MAX_DENOMINATOR);
    let num = rng.gen_range(1..den);
    rational(num, den)
}

fn in_q_lattice(v: &Rational, q: &Rational) -> bool {
    is_q_power(v, q).is_some()
}

/// Parameters of trial `trial` under `seed`.
///
/// Each trial reads its own ChaCha stream, so a trial can be reproduced
/// without replaying the ones before it. Draws with `a`, `c`, `a/c`, `x` or
/// `t` in `q^Z` are rejected.
pub fn draw(seed: u64, trial: u64) -> Draw {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    loop {
        let q = unit_rational(&mut rng);
        let a = unit_rational(&mut rng);
        let c = unit_rational(&mut rng);
        let x = unit_rational(&mut rng);
        let t = unit_rational(&mut rng);
        let ac = a.clone() / &c;
        let bad = [&a, &c, &ac, &x, &t].iter().any(|v| in_q_lattice(v, &q));
        if !bad {
            return Draw { a, c, x, q, t };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_valid() {
        for trial in 0..50 {
            let d = draw(7, trial);
            assert_eq!(d, draw(7, trial));
            for v in [&d.a, &d.c, &d.x, &d.q, &d.t] {
                assert!(*v > 0 && *v < 1);
                assert!(*v.denom() <= MAX_DENOMINATOR);
            }
            assert!(is_q_power(&d.t, &d.q).is_none());
            assert!(is_q_power(&d.x, &d.q).is_none());
        }
        assert_ne!(draw(7, 0), draw(7, 1));
        assert_ne!(draw(7, 0), draw(8, 0));
    }
}
