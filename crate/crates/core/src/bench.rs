//! Benchmark scoring: PAR2 aggregation and cactus plot data.
//!
//! Unfinished runs are charged twice the timeout budget; cactus rows list
//! each solver's solved runtimes in ascending order.

use std::collections::BTreeMap;

/// One (game, solver) measurement.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub game: String,
    /// Game class for grouping, e.g. the generator class.
    pub class: String,
    pub solver: String,
    pub seconds: f64,
    pub timed_out: bool,
    pub crashed: bool,
    pub verified: bool,
}

impl BenchRecord {
    /// PAR2 charge of this record.
    pub fn par2_seconds(&self, timeout_s: f64) -> f64 {
        if self.timed_out || self.crashed {
            2.0 * timeout_s
        } else {
            self.seconds
        }
    }
}

/// One row of the PAR2 table.
#[derive(Clone, Debug, PartialEq)]
pub struct Par2Row {
    pub solver: String,
    pub class: String,
    pub par2_seconds: f64,
    pub timeouts: usize,
}

/// Aggregates PAR2 scores per (solver, class), plus an "all" class per
/// solver. Rows are sorted by (solver, class).
pub fn par2_table(records: &[BenchRecord], timeout_s: f64) -> Vec<Par2Row> {
    let mut groups: BTreeMap<(String, String), (f64, usize)> = BTreeMap::new();
    for r in records {
        for class in [r.class.clone(), "all".to_string()] {
            let entry = groups.entry((r.solver.clone(), class)).or_insert((0.0, 0));
            entry.0 += r.par2_seconds(timeout_s);
            if r.timed_out || r.crashed {
                entry.1 += 1;
            }
        }
    }
    groups
        .into_iter()
        .map(|((solver, class), (par2_seconds, timeouts))| Par2Row {
            solver,
            class,
            par2_seconds,
            timeouts,
        })
        .collect()
}

/// One row of the cactus data: `solver` solved `rank` instances within
/// `seconds` each.
#[derive(Clone, Debug, PartialEq)]
pub struct CactusRow {
    pub solver: String,
    pub rank: usize,
    pub seconds: f64,
}

/// Per-solver ascending runtimes of solved instances, ranked from 1.
pub fn cactus_data(records: &[BenchRecord]) -> Vec<CactusRow> {
    let mut by_solver: BTreeMap<String, Vec<f64>> = BTreeMap::new();
    for r in records {
        if !r.timed_out && !r.crashed {
            by_solver.entry(r.solver.clone()).or_default().push(r.seconds);
        }
    }
    let mut rows = Vec::new();
    for (solver, mut times) in by_solver {
        times.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (i, seconds) in times.into_iter().enumerate() {
            rows.push(CactusRow {
                solver: solver.clone(),
                rank: i + 1,
                seconds,
            });
        }
    }
    rows
}

pub fn par2_csv(rows: &[Par2Row]) -> String {
    let mut out = String::from("solver,class,par2_seconds,timeouts\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{:.3},{}\n",
            r.solver, r.class, r.par2_seconds, r.timeouts
        ));
    }
    out
}

pub fn cactus_csv(rows: &[CactusRow]) -> String {
    let mut out = String::from("solver,rank,seconds\n");
    for r in rows {
        out.push_str(&format!("{},{},{:.3}\n", r.solver, r.rank, r.seconds));
    }
    out
}

pub fn records_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from("game,class,solver,seconds,timed_out,crashed,verified\n");
    for r in records {
        out.push_str(&format!(
            "{},{},{},{:.3},{},{},{}\n",
            r.game, r.class, r.solver, r.seconds, r.timed_out, r.crashed, r.verified
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(solver: &str, class: &str, seconds: f64, timed_out: bool) -> BenchRecord {
        BenchRecord {
            game: format!("g_{seconds}"),
            class: class.into(),
            solver: solver.into(),
            seconds: if timed_out { 900.0 } else { seconds },
            timed_out,
            crashed: false,
            verified: !timed_out,
        }
    }

    #[test]
    fn one_timeout_scores_double_budget() {
        let records = vec![
            record("zlk", "lowdeg", 10.0, false),
            record("zlk", "lowdeg", 0.0, true),
        ];
        let rows = par2_table(&records, 900.0);
        let row = rows.iter().find(|r| r.class == "lowdeg").unwrap();
        assert_eq!(row.par2_seconds, 1810.0);
        assert_eq!(row.timeouts, 1);
    }

    #[test]
    fn all_solved_scores_plain_sum() {
        let records = vec![
            record("pp", "steady", 1.5, false),
            record("pp", "steady", 2.5, false),
        ];
        let rows = par2_table(&records, 900.0);
        assert_eq!(rows[0].par2_seconds, 4.0);
        assert_eq!(rows[0].timeouts, 0);
    }

    #[test]
    fn cactus_rows_are_sorted_and_ranked() {
        let records = vec![
            record("zlk", "a", 3.0, false),
            record("zlk", "a", 1.0, false),
            record("zlk", "a", 0.0, true),
            record("spm", "a", 2.0, false),
        ];
        let rows = cactus_data(&records);
        assert_eq!(
            rows,
            vec![
                CactusRow { solver: "spm".into(), rank: 1, seconds: 2.0 },
                CactusRow { solver: "zlk".into(), rank: 1, seconds: 1.0 },
                CactusRow { solver: "zlk".into(), rank: 2, seconds: 3.0 },
            ]
        );
    }

    #[test]
    fn csv_round_trips() {
        let rows = vec![Par2Row {
            solver: "zlk".into(),
            class: "all".into(),
            par2_seconds: 12.5,
            timeouts: 3,
        }];
        let text = par2_csv(&rows);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("solver,class,par2_seconds,timeouts"));
        let fields: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(fields, vec!["zlk", "all", "12.500", "3"]);
    }
}
