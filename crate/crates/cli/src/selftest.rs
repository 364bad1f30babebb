//! Seeded randomized self-test: re-runs the library's core identities on
//! a fresh corpus so an installation can check itself quickly.

use rand::Rng;

use thurston_fox::random::{
    random_covector, random_laurent, random_lattice_polytope, random_reduced_word,
    random_ring_elt, random_zero_sum_relator, rng_from_seed,
};
use thurston_fox::{
    newton_polytope, polytope_via_fox, polytope_via_walk, Gen, Presentation, Rank, RingElt, Word,
};

fn check(name: &str, ok: bool) -> bool {
    println!("{} {name}", if ok { "PASS" } else { "FAIL" });
    ok
}

pub fn run(seed: u64) -> bool {
    println!("self-test seed: {seed}");
    let mut rng = rng_from_seed(seed);
    let mut all = true;

    // (w − 1) = w_x(x−1) + w_y(y−1) in the group ring.
    let mut ok = true;
    for _ in 0..200 {
        let len = rng.gen_range(1..=60);
        let w = random_reduced_word(&mut rng, len);
        let lhs = RingElt::from_word(w.clone()).sub(&RingElt::one());
        let x_part = w.fox_derivative(Gen::X).multiply(&RingElt::from_terms(vec![
            (1, Word::single(Gen::X, 1)),
            (-1, Word::empty()),
        ]));
        let y_part = w.fox_derivative(Gen::Y).multiply(&RingElt::from_terms(vec![
            (1, Word::single(Gen::Y, 1)),
            (-1, Word::empty()),
        ]));
        if lhs != x_part.add(&y_part) {
            ok = false;
        }
    }
    all &= check("fox fundamental identity", ok);

    // The walk and Fox constructions agree up to translation.
    let mut ok = true;
    for _ in 0..30 {
        let r = random_zero_sum_relator(&mut rng, 40);
        let p = Presentation::new(r).expect("nonempty");
        let (walk, fox) = (polytope_via_walk(&p), polytope_via_fox(&p));
        match (walk, fox) {
            (Ok(w), Ok(f)) => {
                if !w.translation_equiv(&f.polytope) {
                    ok = false;
                }
            }
            _ => ok = false,
        }
    }
    all &= check("walk/fox agreement", ok);

    // Newton polytopes add over Laurent products.
    let mut ok = true;
    for _ in 0..100 {
        let f = random_laurent(&mut rng, Rank::Two, 4, 5);
        let g = random_laurent(&mut rng, Rank::Two, 4, 5);
        let lhs = newton_polytope(&f.multiply(&g)).expect("nonzero product in a domain");
        let rhs = newton_polytope(&f)
            .unwrap()
            .minkowski_sum(&newton_polytope(&g).unwrap())
            .unwrap();
        if lhs != rhs {
            ok = false;
        }
    }
    all &= check("newton polytope additivity", ok);

    // Sum-then-difference round trip with a fully marked subtrahend.
    let mut ok = true;
    for _ in 0..100 {
        let p = random_lattice_polytope(&mut rng, Rank::Two, 5, 5, false);
        let q = random_lattice_polytope(&mut rng, Rank::Two, 3, 3, true);
        let r = p.minkowski_sum(&q).unwrap();
        match r.minkowski_diff(&q) {
            Ok(Some(back)) => {
                if back.minkowski_sum(&q).unwrap() != r {
                    ok = false;
                }
            }
            _ => ok = false,
        }
    }
    all &= check("minkowski round trip", ok);

    // Thickness is a symmetric homogeneous seminorm.
    let mut ok = true;
    for _ in 0..5 {
        let r = random_zero_sum_relator(&mut rng, 30);
        let p = Presentation::new(r).expect("nonempty");
        let data = polytope_via_fox(&p).expect("fox pipeline");
        for _ in 0..100 {
            let phi = random_covector(&mut rng, Rank::Two, 20);
            let psi = random_covector(&mut rng, Rank::Two, 20);
            let k = rng.gen_range(1..=5i64);
            let th = |c: &thurston_fox::Covector| data.polytope.thickness(c);
            if th(&phi.scale(k)) != th(&phi) * num_rational::Rational64::from_integer(k) {
                ok = false;
            }
            if th(&phi.negate()) != th(&phi) {
                ok = false;
            }
            if th(&phi.add(&psi)) > th(&phi) + th(&psi) {
                ok = false;
            }
        }
    }
    all &= check("seminorm axioms", ok);

    // Ring involution is an involution.
    let mut ok = true;
    for _ in 0..100 {
        let f = random_ring_elt(&mut rng, 5, 8);
        if f.involution().involution() != f {
            ok = false;
        }
    }
    all &= check("involution is involutive", ok);

    all
}
