use pgt::game::*;
use pgt::solvers::pp::*;

fn main() {
    // Reproduce round 1 of the pp oracle test.
    use rand::prelude::*;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x99);
    for round in 0..10 {
        let n = rng.random_range(1..=8usize);
        let g = tiny(&mut rng, n, 8);
        let expected = pgt::oracle::brute_force_solve(&g).unwrap();
        let full = VertexSet::full(n);
        for variant in [PpVariant::Pp, PpVariant::PpPlus, PpVariant::Rr, PpVariant::Dp, PpVariant::RrDp] {
            let s = pp_solve(&g, &full, variant).unwrap();
            if s.winner != expected.winner {
                println!("round {round} {variant:?} WRONG WINNERS\n{g:?}\ngot: {:?}\nexp: {:?}", s.winner, expected.winner);
                return;
            }
            if let Err(e) = pgt::verify::verify(&g, &s) {
                println!("round {round} {variant:?} verify failed: {e}");
                for v in &e.violations { println!("  {v}"); }
                println!("{g:?}");
                println!("solution: {:?}", s);
                return;
            }
        }
    }
}

fn tiny(rng: &mut rand_chacha::ChaCha8Rng, n: usize, max_prio: u32) -> ParityGame {
    use rand::prelude::*;
    let priority = (0..n).map(|_| rng.random_range(0..max_prio.max(1))).collect();
    let owner = (0..n).map(|_| if rng.random_bool(0.5) { Player::Even } else { Player::Odd }).collect();
    let successors = (0..n).map(|_| {
        let deg = rng.random_range(1..=3usize.min(n));
        let mut succ: Vec<usize> = Vec::new();
        for _ in 0..deg { let w = rng.random_range(0..n); if !succ.contains(&w) { succ.push(w); } }
        succ
    }).collect();
    ParityGame::from_parts(priority, owner, successors, vec![None; n]).unwrap()
}
