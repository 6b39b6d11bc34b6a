use legtwist_core::moves::{
    applicable_moves, apply_move, random_move_walk, random_walk, rotate180, Move, OrientedFront,
    WalkBudget,
};
use legtwist_core::rulings::{count_rulings, ruling_signature};
use legtwist_core::twist::{generate_front, TwistWord};
use legtwist_core::FrontDiagram;

fn twist(m: i64, word: &str) -> FrontDiagram {
    generate_front(m, &TwistWord::parse(m, word).unwrap()).unwrap()
}

fn corpus() -> Vec<FrontDiagram> {
    vec![
        FrontDiagram::unknot(),
        twist(-2, ""),
        twist(-3, "Z+"),
        twist(-4, "Z+ Z-"),
        twist(-4, "S+ Z-"),
        twist(-5, "Z+ S- Z+"),
        twist(-6, "Z+ S- S+ Z-"),
        twist(0, ""),
        twist(1, "X"),
        twist(2, "X X"),
    ]
}

#[test]
fn every_single_move_preserves_invariants() {
    for f in corpus() {
        let o = OrientedFront::new(f.clone()).unwrap();
        let sig = ruling_signature(&f).unwrap();
        let (tb, rot) = (o.tb(), o.rot());
        for mv in o.applicable_moves() {
            let g = o.apply(mv).unwrap();
            assert_eq!(g.front().component_count(), 1, "{f} {mv:?}");
            match mv {
                Move::StabilizePlus { .. } | Move::StabilizeMinus { .. } => {
                    let d = if matches!(mv, Move::StabilizePlus { .. }) {
                        1
                    } else {
                        -1
                    };
                    assert_eq!(g.tb(), tb - 1, "{f} {mv:?}");
                    assert_eq!(g.rot(), rot + d, "{f} {mv:?}");
                    assert_eq!(count_rulings(g.front(), 1).unwrap(), 0, "{f} {mv:?}");
                }
                Move::ReverseOrientation => {
                    assert_eq!(g.rot(), -rot);
                    assert_eq!(g.tb(), tb);
                }
                _ => {
                    assert_eq!(g.tb(), tb, "{f} {mv:?}");
                    assert_eq!(g.rot(), rot, "{f} {mv:?}");
                    assert_eq!(
                        ruling_signature(g.front()).unwrap(),
                        sig,
                        "{f} {mv:?} -> {}",
                        g.front()
                    );
                }
            }
            if let Some(inv) = mv.inverse(&f) {
                assert_eq!(g.apply(inv).unwrap().front(), &f, "{f} {mv:?}");
            }
        }
    }
}

#[test]
fn walks_preserve_invariants() {
    for (k, f) in corpus().into_iter().enumerate() {
        let start = OrientedFront::new(f.clone()).unwrap();
        let sig = ruling_signature(&f).unwrap();
        let (end, trace) = random_walk(&start, 300, k as u64, WalkBudget::around(&f));
        assert_eq!(trace.len(), 300);
        assert_eq!(end.tb(), start.tb());
        assert_eq!(end.rot(), start.rot());
        assert_eq!(
            ruling_signature(end.front()).unwrap(),
            sig,
            "{f} -> {}",
            end.front()
        );
    }
}

#[test]
fn walks_are_deterministic() {
    let f = twist(-4, "Z+ Z-");
    assert_eq!(random_move_walk(&f, 0, 3).unwrap(), f);
    assert_eq!(
        random_move_walk(&f, 50, 9).unwrap(),
        random_move_walk(&f, 50, 9).unwrap()
    );
}

#[test]
fn stabilize_minus_on_k_minus_4() {
    let f = twist(-4, "Z+ Z-");
    let o = OrientedFront::new(f.clone()).unwrap();
    let mv = o
        .applicable_moves()
        .into_iter()
        .find(|m| matches!(m, Move::StabilizeMinus { .. }))
        .unwrap();
    let g = o.apply(mv).unwrap();
    assert_eq!((g.tb(), g.rot()), (0, -1));
    assert_eq!(count_rulings(g.front(), 1).unwrap(), 0);
}

#[test]
fn stabilizations_of_both_signs() {
    let o = OrientedFront::new(twist(-6, "Z+ S- S+ Z-")).unwrap();
    let mv = |o: &OrientedFront, plus: bool| {
        o.applicable_moves()
            .into_iter()
            .find(|m| {
                if plus {
                    matches!(m, Move::StabilizePlus { .. })
                } else {
                    matches!(m, Move::StabilizeMinus { .. })
                }
            })
            .unwrap()
    };
    let p = o.apply(mv(&o, true)).unwrap();
    let pm = p.apply(mv(&p, false)).unwrap();
    assert_eq!(pm.tb(), o.tb() - 2);
    assert_eq!(pm.rot(), o.rot());
    assert_eq!(count_rulings(pm.front(), 1).unwrap(), 0);
}

#[test]
fn rotation_exchanges_z_and_s() {
    for (m, word) in [
        (-4, "Z+ Z-"),
        (-6, "Z+ Z- S+ S-"),
        (-7, "Z+ S- Z+ Z- S+"),
        (-8, "S+ Z- Z+ Z- S+ S-"),
    ] {
        let w = TwistWord::parse(m, word).unwrap();
        let f = generate_front(m, &w).unwrap();
        let r = rotate180(&f);
        let g = generate_front(m, &w.rotate180()).unwrap();
        assert_eq!(
            ruling_signature(&r).unwrap(),
            ruling_signature(&g).unwrap(),
            "{word}"
        );
        assert_eq!(
            ruling_signature(&r).unwrap(),
            ruling_signature(&f).unwrap(),
            "{word}"
        );
        assert_eq!(r.tb().unwrap(), f.tb().unwrap());
        assert_eq!(r.component_count(), 1);
    }
}

#[test]
fn applicable_moves_yield_valid_fronts() {
    let f = twist(-5, "Z+ S- Z+");
    for mv in applicable_moves(&f).unwrap() {
        assert!(apply_move(&f, mv).is_ok(), "{mv:?}");
    }
}
