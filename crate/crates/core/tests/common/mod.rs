#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use legtwist_core::front::Event;
use legtwist_core::twist::{classes_at_max_tb, generate_front, TwistWord};
use legtwist_core::FrontDiagram;

pub fn twist(m: i64, word: &str) -> FrontDiagram {
    generate_front(m, &TwistWord::parse(m, word).unwrap()).unwrap()
}

/// Every maximal front from the canonical words, `m` in `[-12, 12] \ {-1}`.
pub fn canonical_fronts() -> Vec<(i64, TwistWord, FrontDiagram)> {
    let mut out = Vec::new();
    for m in -12..=12i64 {
        if m == -1 {
            continue;
        }
        for nf in classes_at_max_tb(m).unwrap().1 {
            let w = TwistWord::from_normal_form(&nf);
            let f = generate_front(m, &w).unwrap();
            out.push((m, w, f));
        }
    }
    out
}

/// Random event word with at most `max_cusp_pairs` left cusps and
/// `max_crossings` crossings. May be a link.
pub fn random_event_front(
    rng: &mut ChaCha8Rng,
    max_cusp_pairs: usize,
    max_crossings: usize,
) -> FrontDiagram {
    let births = rng.gen_range(1..=max_cusp_pairs);
    let crossings = rng.gen_range(0..=max_crossings);
    let (mut b, mut x, mut k) = (births, crossings, 0usize);
    let mut ev = Vec::new();
    while b > 0 || k > 0 {
        let mut choices = Vec::new();
        if b > 0 && k < 8 {
            choices.push(0);
        }
        if x > 0 && k >= 2 {
            choices.extend([1, 1, 1]);
        }
        if k >= 2 && (b == 0 || x == 0 || rng.gen_bool(0.3)) {
            choices.push(2);
        }
        let e = match choices[rng.gen_range(0..choices.len())] {
            0 => {
                b -= 1;
                Event::birth(rng.gen_range(1..=k + 1))
            }
            1 => {
                x -= 1;
                Event::crossing(rng.gen_range(1..k))
            }
            _ => Event::death(rng.gen_range(1..k)),
        };
        k = e.strands_after(k);
        ev.push(e);
    }
    FrontDiagram::new(ev).expect("built legally")
}

/// Random knot front, by rejection.
pub fn random_knot(
    rng: &mut ChaCha8Rng,
    max_cusp_pairs: usize,
    max_crossings: usize,
) -> FrontDiagram {
    loop {
        let f = random_event_front(rng, max_cusp_pairs, max_crossings);
        if f.is_knot() {
            return f;
        }
    }
}
