use pgt::game::*;
use pgt::solvers::qpt::*;
use rand::prelude::*;

fn tiny(rng: &mut rand_chacha::ChaCha8Rng, n: usize, max_prio: u32) -> ParityGame {
    let priority = (0..n).map(|_| rng.random_range(0..max_prio.max(1))).collect();
    let owner = (0..n)
        .map(|_| if rng.random_bool(0.5) { Player::Even } else { Player::Odd })
        .collect();
    let successors = (0..n)
        .map(|_| {
            let deg = rng.random_range(1..=3usize.min(n));
            let mut succ: Vec<usize> = Vec::new();
            for _ in 0..deg {
                let w = rng.random_range(0..n);
                if !succ.contains(&w) {
                    succ.push(w);
                }
            }
            succ
        })
        .collect();
    ParityGame::from_parts(priority, owner, successors, vec![None; n]).unwrap()
}

fn main() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x44);
    let mut bad = 0;
    let rounds: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(400);
    for round in 0..rounds {
        let n = rng.random_range(1..=7usize);
        let g = tiny(&mut rng, n, 7);
        let expected = pgt::oracle::brute_force_solve(&g).unwrap();
        let full = VertexSet::full(n);
        for halt in [false, true] {
            let outcome = std::panic::catch_unwind(|| {
                qpt_solve_with(&g, &full, halt, None).unwrap()
            });
            match outcome {
                Err(_) => {
                    println!("round {round} halt={halt} PANIC\n{g:?}");
                    bad += 1;
                }
                Ok(s) => {
                    if s.winner != expected.winner {
                        println!(
                            "round {round} halt={halt} WRONG\n{g:?}got {:?}\nexp {:?}",
                            s.winner, expected.winner
                        );
                        bad += 1;
                    } else if let Err(e) = pgt::verify::verify(&g, &s) {
                        println!("round {round} halt={halt} verify: {e}\n{g:?}");
                        bad += 1;
                    }
                }
            }
            if bad > 2 {
                return;
            }
        }
    }
    if bad == 0 {
        println!("all ok");
    }
}
