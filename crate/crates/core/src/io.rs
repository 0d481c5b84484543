//! Reading and writing games and solutions in the PGSolver text format.
//!
//! Game grammar, whitespace tolerant, `;` terminated:
//!
//! ```text
//! parity <max-id>;            (optional header)
//! <id> <priority> <owner> <succ>[,<succ>]* ["<label>"];
//! ```
//!
//! Solution format:
//!
//! ```text
//! paritysol <max-id>;
//! <id> <winner> [<strategy-succ>];
//! ```
//!
//! Owner and winner are `0` for player Even and `1` for player Odd. Sparse
//! vertex ids are accepted and compacted to dense 0-based ids; the original
//! ids are kept and used again when writing solutions.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::game::{ParityGame, Player, Priority, Solution, Vertex};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: duplicate vertex id {id}")]
    DuplicateVertex { line: usize, id: usize },
    #[error("line {line}: successor id {id} does not name a vertex")]
    SuccessorOutOfRange { line: usize, id: usize },
    #[error("line {line}: vertex {id} has no successors")]
    NoSuccessors { line: usize, id: usize },
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(usize),
    Word(String),
    Comma,
    Semicolon,
    Quoted(String),
}

struct Lexer<'a> {
    input: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str) -> Self {
        Lexer {
            input,
            pos: 0,
            line: 1,
        }
    }

    fn next_token(&mut self) -> Result<Option<(Token, usize)>, ParseError> {
        let bytes = self.input.as_bytes();
        while self.pos < bytes.len() {
            let c = bytes[self.pos];
            if c == b'\n' {
                self.line += 1;
                self.pos += 1;
            } else if c.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos >= bytes.len() {
            return Ok(None);
        }
        let line = self.line;
        let c = bytes[self.pos];
        match c {
            b',' => {
                self.pos += 1;
                Ok(Some((Token::Comma, line)))
            }
            b';' => {
                self.pos += 1;
                Ok(Some((Token::Semicolon, line)))
            }
            b'"' => {
                let start = self.pos + 1;
                let mut end = start;
                while end < bytes.len() && bytes[end] != b'"' {
                    if bytes[end] == b'\n' {
                        self.line += 1;
                    }
                    end += 1;
                }
                if end >= bytes.len() {
                    return Err(syntax(line, "unterminated label"));
                }
                self.pos = end + 1;
                Ok(Some((
                    Token::Quoted(self.input[start..end].to_string()),
                    line,
                )))
            }
            b'0'..=b'9' => {
                let start = self.pos;
                while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = &self.input[start..self.pos];
                let value: usize = text
                    .parse()
                    .map_err(|_| syntax(line, format!("number too large: {text}")))?;
                Ok(Some((Token::Number(value), line)))
            }
            _ if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < bytes.len()
                    && (bytes[self.pos].is_ascii_alphanumeric() || bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok(Some((
                    Token::Word(self.input[start..self.pos].to_string()),
                    line,
                )))
            }
            _ => Err(syntax(line, format!("unexpected character {:?}", c as char))),
        }
    }
}

fn tokenize(input: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let mut lexer = Lexer::new(input);
    let mut tokens = Vec::new();
    while let Some(tok) = lexer.next_token()? {
        tokens.push(tok);
    }
    Ok(tokens)
}

struct RawVertex {
    id: usize,
    priority: Priority,
    owner: Player,
    successors: Vec<usize>,
    label: Option<String>,
    line: usize,
}

/// Parses a game in PGSolver format. The `parity <max-id>;` header is
/// optional on input.
pub fn parse_pgsolver(input: &str) -> Result<ParityGame, ParseError> {
    let tokens = tokenize(input)?;
    let mut pos = 0;

    // Optional header.
    if let Some((Token::Word(w), line)) = tokens.first().map(|(t, l)| (t.clone(), *l)) {
        if w == "parity" {
            match tokens.get(1) {
                Some((Token::Number(_), _)) => {}
                _ => return Err(syntax(line, "expected max vertex id after 'parity'")),
            }
            match tokens.get(2) {
                Some((Token::Semicolon, _)) => {}
                _ => return Err(syntax(line, "expected ';' after header")),
            }
            pos = 3;
        } else {
            return Err(syntax(line, format!("unexpected keyword '{w}'")));
        }
    }

    let mut raw = Vec::new();
    while pos < tokens.len() {
        let (tok, line) = &tokens[pos];
        let id = match tok {
            Token::Number(id) => *id,
            _ => return Err(syntax(*line, "expected vertex id")),
        };
        pos += 1;
        let priority = match tokens.get(pos) {
            Some((Token::Number(p), _)) => *p as Priority,
            _ => return Err(syntax(*line, "expected priority")),
        };
        pos += 1;
        let owner = match tokens.get(pos) {
            Some((Token::Number(0), _)) => Player::Even,
            Some((Token::Number(1), _)) => Player::Odd,
            _ => return Err(syntax(*line, "expected owner 0 or 1")),
        };
        pos += 1;

        let mut successors = Vec::new();
        loop {
            match tokens.get(pos) {
                Some((Token::Number(s), _)) => {
                    successors.push(*s);
                    pos += 1;
                }
                _ => return Err(syntax(*line, "expected successor id")),
            }
            match tokens.get(pos) {
                Some((Token::Comma, _)) => pos += 1,
                _ => break,
            }
        }

        let label = match tokens.get(pos) {
            Some((Token::Quoted(text), _)) => {
                pos += 1;
                Some(text.clone())
            }
            _ => None,
        };
        match tokens.get(pos) {
            Some((Token::Semicolon, _)) => pos += 1,
            _ => return Err(syntax(*line, "expected ';'")),
        }
        raw.push(RawVertex {
            id,
            priority,
            owner,
            successors,
            label,
            line: *line,
        });
    }

    // Compact sparse ids to dense 0-based ids, in ascending id order.
    let mut ids: Vec<usize> = raw.iter().map(|r| r.id).collect();
    ids.sort_unstable();
    let mut id_map = HashMap::with_capacity(ids.len());
    for (dense, &orig) in ids.iter().enumerate() {
        if id_map.insert(orig, dense).is_some() {
            let line = raw.iter().find(|r| r.id == orig).map_or(0, |r| r.line);
            return Err(ParseError::DuplicateVertex { line, id: orig });
        }
    }

    raw.sort_by_key(|r| r.id);
    let n = raw.len();
    let mut priority = Vec::with_capacity(n);
    let mut owner = Vec::with_capacity(n);
    let mut successors = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for r in &raw {
        if r.successors.is_empty() {
            return Err(ParseError::NoSuccessors {
                line: r.line,
                id: r.id,
            });
        }
        let mut succ = Vec::with_capacity(r.successors.len());
        for &s in &r.successors {
            match id_map.get(&s) {
                Some(&dense) => succ.push(dense),
                None => {
                    return Err(ParseError::SuccessorOutOfRange {
                        line: r.line,
                        id: s,
                    })
                }
            }
        }
        priority.push(r.priority);
        owner.push(r.owner);
        successors.push(succ);
        labels.push(r.label.clone());
    }

    let mut game = ParityGame::from_parts(priority, owner, successors, labels).map_err(|e| {
        syntax(0, format!("inconsistent game: {e}"))
    })?;
    let dense_already = ids.iter().enumerate().all(|(i, &id)| i == id);
    if !dense_already {
        game.set_external_ids(Some(ids));
    }
    Ok(game)
}

/// Writes a game in PGSolver format with dense ids. The header is always
/// emitted, carrying the maximum vertex id.
pub fn write_pgsolver(game: &ParityGame) -> String {
    let n = game.num_vertices();
    let mut out = String::new();
    let max_id = n.saturating_sub(1);
    writeln!(out, "parity {max_id};").unwrap();
    for v in game.vertices() {
        write!(out, "{} {} {} ", v, game.priority(v), game.owner(v).index()).unwrap();
        for (i, w) in game.successors(v).iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write!(out, "{w}").unwrap();
        }
        if let Some(label) = game.label(v) {
            write!(out, " \"{label}\"").unwrap();
        }
        out.push_str(";\n");
    }
    out
}

/// Writes a solution in `paritysol` format, using the game's external ids
/// when the input file was sparse.
pub fn write_solution(game: &ParityGame, solution: &Solution) -> String {
    let n = game.num_vertices();
    let mut out = String::new();
    let max_id = if n == 0 { 0 } else { game.external_id(n - 1) };
    writeln!(out, "paritysol {max_id};").unwrap();
    for v in game.vertices() {
        write!(out, "{} {}", game.external_id(v), solution.winner[v].index()).unwrap();
        if let Some(w) = solution.strategy[v] {
            write!(out, " {}", game.external_id(w)).unwrap();
        }
        out.push_str(";\n");
    }
    out
}

/// Parses a solution in `paritysol` format against a game, mapping external
/// ids back to dense indices.
pub fn parse_solution(game: &ParityGame, input: &str) -> Result<Solution, ParseError> {
    let tokens = tokenize(input)?;
    let mut pos;
    match tokens.first() {
        Some((Token::Word(w), line)) if w == "paritysol" => {
            match tokens.get(1) {
                Some((Token::Number(_), _)) => {}
                _ => return Err(syntax(*line, "expected max vertex id after 'paritysol'")),
            }
            match tokens.get(2) {
                Some((Token::Semicolon, _)) => {}
                _ => return Err(syntax(*line, "expected ';' after header")),
            }
            pos = 3;
        }
        Some((_, line)) => return Err(syntax(*line, "expected 'paritysol' header")),
        None => return Err(syntax(1, "empty solution")),
    }

    let mut reverse: HashMap<usize, Vertex> = HashMap::with_capacity(game.num_vertices());
    for v in game.vertices() {
        reverse.insert(game.external_id(v), v);
    }

    let n = game.num_vertices();
    let mut solution = Solution::new(n);
    let mut seen = vec![false; n];
    while pos < tokens.len() {
        let (tok, line) = &tokens[pos];
        let id = match tok {
            Token::Number(id) => *id,
            _ => return Err(syntax(*line, "expected vertex id")),
        };
        let v = match reverse.get(&id) {
            Some(&v) => v,
            None => return Err(syntax(*line, format!("unknown vertex id {id}"))),
        };
        if seen[v] {
            return Err(ParseError::DuplicateVertex { line: *line, id });
        }
        seen[v] = true;
        pos += 1;
        solution.winner[v] = match tokens.get(pos) {
            Some((Token::Number(0), _)) => Player::Even,
            Some((Token::Number(1), _)) => Player::Odd,
            _ => return Err(syntax(*line, "expected winner 0 or 1")),
        };
        pos += 1;
        if let Some((Token::Number(s), _)) = tokens.get(pos) {
            let w = match reverse.get(s) {
                Some(&w) => w,
                None => {
                    return Err(ParseError::SuccessorOutOfRange {
                        line: *line,
                        id: *s,
                    })
                }
            };
            solution.strategy[v] = Some(w);
            pos += 1;
        }
        match tokens.get(pos) {
            Some((Token::Semicolon, _)) => pos += 1,
            _ => return Err(syntax(*line, "expected ';'")),
        }
    }
    for v in game.vertices() {
        if !seen[v] {
            return Err(syntax(
                0,
                format!("solution misses vertex {}", game.external_id(v)),
            ));
        }
    }
    Ok(solution)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_two_vertex_game_with_header() {
        let g = parse_pgsolver("parity 1;\n0 2 0 1;\n1 1 1 0;").unwrap();
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(g.priority(0), 2);
        assert_eq!(g.owner(0), Player::Even);
        assert_eq!(g.successors(0), &[1]);
        assert_eq!(g.priority(1), 1);
        assert_eq!(g.owner(1), Player::Odd);
        assert_eq!(g.successors(1), &[0]);
        assert_eq!(g.predecessors(0), &[1]);
    }

    #[test]
    fn header_is_optional() {
        let g = parse_pgsolver("0 0 0 0;").unwrap();
        assert_eq!(g.num_vertices(), 1);
        assert_eq!(g.successors(0), &[0]);
    }

    #[test]
    fn writes_single_self_loop() {
        let g = parse_pgsolver("0 0 0 0;").unwrap();
        assert_eq!(write_pgsolver(&g), "parity 0;\n0 0 0 0;\n");
    }

    #[test]
    fn label_round_trips() {
        let text = "parity 1;\n0 3 1 1 \"start here\";\n1 0 0 0,1;\n";
        let g = parse_pgsolver(text).unwrap();
        assert_eq!(g.label(0), Some("start here"));
        assert_eq!(write_pgsolver(&g), text);
    }

    #[test]
    fn rejects_duplicate_vertex() {
        let err = parse_pgsolver("0 0 0 0;\n0 1 1 0;").unwrap_err();
        assert!(matches!(err, ParseError::DuplicateVertex { id: 0, .. }));
    }

    #[test]
    fn rejects_unknown_successor() {
        let err = parse_pgsolver("0 0 0 5;").unwrap_err();
        assert!(matches!(err, ParseError::SuccessorOutOfRange { id: 5, .. }));
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_pgsolver("0 0 0 0;\n1 2 7 1;").unwrap_err();
        match err {
            ParseError::Syntax { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn sparse_ids_are_compacted() {
        let g = parse_pgsolver("2 0 0 9;\n9 1 1 2,9;").unwrap();
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(g.external_id(0), 2);
        assert_eq!(g.external_id(1), 9);
        assert_eq!(g.successors(0), &[1]);
        assert_eq!(g.successors(1), &[0, 1]);
    }

    #[test]
    fn solution_round_trips_with_sparse_ids() {
        let g = parse_pgsolver("2 0 0 9;\n9 1 1 2,9;").unwrap();
        let mut s = Solution::new(2);
        s.winner = vec![Player::Even, Player::Odd];
        s.strategy = vec![None, Some(1)];
        let text = write_solution(&g, &s);
        assert!(text.contains("9 1 9;"));
        let parsed = parse_solution(&g, &text).unwrap();
        assert_eq!(parsed, s);
    }
}
