use pgt::game::*;
use pgt::solvers::spm::*;
use rand::prelude::*;

fn tiny(rng: &mut rand_chacha::ChaCha8Rng, n: usize, max_prio: u32) -> ParityGame {
    let priority = (0..n)
        .map(|_| rng.random_range(0..max_prio.max(1)))
        .collect();
    let owner = (0..n)
        .map(|_| {
            if rng.random_bool(0.5) {
                Player::Even
            } else {
                Player::Odd
            }
        })
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
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x11);
    for round in 0..300 {
        let n = rng.random_range(1..=8usize);
        let g = tiny(&mut rng, n, 8);
        let expected = pgt::oracle::brute_force_solve(&g).unwrap();
        let result = std::panic::catch_unwind(|| {
            spm_solve(&g, &VertexSet::full(n), &SpmConfig::default(), None).unwrap()
        });
        match result {
            Err(_) => {
                println!("round {round} PANICKED\n{g:?}");
                // Retry without the halting improvement to isolate it.
                let s = spm_solve(
                    &g,
                    &VertexSet::full(n),
                    &SpmConfig {
                        attractor_halt: false,
                        ..SpmConfig::default()
                    },
                    None,
                )
                .unwrap();
                println!("without halting: {:?} (expected {:?})", s.winner, expected.winner);
                return;
            }
            Ok(s) => {
                if s.winner != expected.winner {
                    println!(
                        "round {round} WRONG\n{g:?}\ngot {:?}\nexp {:?}",
                        s.winner, expected.winner
                    );
                    return;
                }
            }
        }
    }
    println!("all ok");
}
