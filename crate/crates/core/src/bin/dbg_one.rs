use pgt::game::*;
fn main() {
    let g = ParityGame::from_parts(
        vec![5, 3, 3, 4, 3],
        vec![Player::Even, Player::Even, Player::Odd, Player::Odd, Player::Odd],
        vec![vec![4], vec![3], vec![0, 1, 2], vec![0, 3, 1], vec![1]],
        vec![None; 5],
    ).unwrap();
    println!("expected: {:?}", pgt::oracle::brute_force_solve(&g).unwrap().winner);
}
