use pgt::game::*;
use pgt::solvers::qpt::*;
use std::cmp::Ordering;

fn main() {
    let g = ParityGame::from_parts(
        vec![6, 0, 5, 3],
        vec![Player::Odd, Player::Even, Player::Odd, Player::Even],
        vec![vec![2, 1], vec![3], vec![1, 3], vec![0, 1]],
        vec![None; 4],
    )
    .unwrap();
    let expected = pgt::oracle::brute_force_solve(&g).unwrap();
    println!("expected: {:?}", expected.winner);

    // Probe the prog/compare surface to replay the trace.
    let even = QptSpace::with_k(Player::Even, 2);
    let odd = QptSpace::with_k(Player::Odd, 2);
    let t = |v: Vec<u32>| QptMeasure::Tuple(v);
    println!(
        "even cmp [6,6] vs [0,6]: {:?}",
        even.compare(&t(vec![6, 6]), &t(vec![0, 6]))
    );
    println!("odd prog(3,[bot,6]): {:?}", odd.prog(&t(vec![BLANK, 6]), 3));
    println!("odd prog(3,[3,6]): {:?}", odd.prog(&t(vec![3, 6]), 3));
    println!("odd prog(5,[3,6]): {:?}", odd.prog(&t(vec![3, 6]), 5));
    println!(
        "odd cmp [3,6] vs [bot,3]: {:?}",
        odd.compare(&t(vec![3, 6]), &t(vec![BLANK, 3]))
    );
    let _ = Ordering::Equal;

    let s = qpt_solve_with(&g, &VertexSet::full(4), false, None);
    println!("{s:?}");
}
