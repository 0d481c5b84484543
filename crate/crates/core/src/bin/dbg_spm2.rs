use pgt::game::*;
use pgt::solvers::spm::*;

fn main() {
    let g = ParityGame::from_parts(
        vec![4, 2, 4, 4, 0, 0, 1, 0],
        vec![
            Player::Odd,
            Player::Odd,
            Player::Even,
            Player::Even,
            Player::Odd,
            Player::Odd,
            Player::Odd,
            Player::Odd,
        ],
        vec![
            vec![4, 7, 3],
            vec![6, 0, 3],
            vec![1, 6, 2],
            vec![4],
            vec![1, 4],
            vec![5],
            vec![2],
            vec![3, 2, 5],
        ],
        vec![None; 8],
    )
    .unwrap();
    let full = VertexSet::full(8);
    for (name, config) in [
        (
            "halt only (no caps)",
            SpmConfig {
                lower_caps: false,
                attractor_halt: true,
                ..SpmConfig::default()
            },
        ),
        (
            "caps only (no halt)",
            SpmConfig {
                lower_caps: true,
                attractor_halt: false,
                ..SpmConfig::default()
            },
        ),
        ("both", SpmConfig::default()),
    ] {
        let outcome = std::panic::catch_unwind(|| {
            spm_solve(&g, &full, &config, None).unwrap().winner
        });
        match outcome {
            Ok(w) => println!("{name}: ok {w:?}"),
            Err(_) => println!("{name}: PANIC"),
        }
    }
}
