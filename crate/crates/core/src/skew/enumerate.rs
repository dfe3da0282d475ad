//! Exhaustive enumeration of canonical skew diagrams.
//!
//! Translation classes of bounded size alone form an infinite set, because
//! separate components can be placed arbitrarily far apart. The universe is
//! therefore bounded by size and by span (largest minus smallest content).
//! In the canonical frame the span is `r_1 + h - 2`, where `r_1` is the right
//! end of the first row and `h` the number of rows.

use std::collections::HashMap;

use super::SkewDiagram;
use crate::exec::Exec;

/// All canonical skew diagrams with at most `max_size` boxes and span at
/// most `max_span`, including ∅, sorted by size and then by rows.
pub fn universe(max_size: u32, max_span: u32, exec: Exec) -> Vec<SkewDiagram> {
    let max_size = max_size as i32;
    let max_span = max_span as i32;
    let mut starts = Vec::new();
    for r1 in 1..=max_span + 1 {
        for l1 in 0..r1 {
            if r1 - l1 <= max_size {
                starts.push((l1, r1));
            }
        }
    }
    let mut out = exec.flat_map(&starts, |&(l1, r1)| {
        let mut found = Vec::new();
        let mut rows = vec![(l1, r1)];
        let max_rows = max_span + 2 - r1;
        extend(&mut rows, max_size - (r1 - l1), max_rows, &mut found);
        found
    });
    out.push(SkewDiagram::empty());
    out.sort();
    out
}

fn extend(rows: &mut Vec<(i32, i32)>, room: i32, max_rows: i32, found: &mut Vec<SkewDiagram>) {
    let (l, r) = *rows.last().expect("at least one row");
    let nonempty = l < r;
    if nonempty && l == 0 {
        found.push(SkewDiagram::from_rows(rows.clone()).expect("generated rows are canonical"));
    }
    if rows.len() as i32 >= max_rows {
        return;
    }
    // After an empty row at v the next box row must end at or before v.
    let (l_cap, r_cap) = if nonempty { (l, r) } else { (l - 1, l) };
    for l2 in 0..=l_cap {
        for r2 in l2 + 1..=r_cap.min(l2 + room) {
            rows.push((l2, r2));
            extend(rows, room - (r2 - l2), max_rows, found);
            rows.pop();
        }
    }
    if l > 0 {
        rows.push((l, l));
        extend(rows, room, max_rows, found);
        rows.pop();
    }
}

/// Number of diagrams [`universe`] returns, computed by a memoised count that
/// shares no code with the enumeration.
pub fn universe_count(max_size: u32, max_span: u32) -> u64 {
    #[derive(Default)]
    struct Counter {
        memo: HashMap<(i32, i32, bool, i32, i32), u64>,
    }
    impl Counter {
        // Completions after a row (l, r), or after empty rows at v = l when
        // `gap` is set, with `room` boxes and `rows` further rows available.
        fn count(&mut self, l: i32, r: i32, gap: bool, room: i32, rows: i32) -> u64 {
            let key = (l, r, gap, room, rows);
            if let Some(&v) = self.memo.get(&key) {
                return v;
            }
            let mut total = u64::from(!gap && l == 0);
            if rows > 0 {
                let (l_max, r_max) = if gap { (l - 1, l) } else { (l, r) };
                for l2 in 0..=l_max {
                    for r2 in l2 + 1..=r_max {
                        if r2 - l2 <= room {
                            total += self.count(l2, r2, false, room - (r2 - l2), rows - 1);
                        }
                    }
                }
                if l > 0 {
                    total += self.count(l, l, true, room, rows - 1);
                }
            }
            self.memo.insert(key, total);
            total
        }
    }
    let (n, s) = (max_size as i32, max_span as i32);
    let mut counter = Counter::default();
    let mut total = 1;
    for r1 in 1..=s + 1 {
        for l1 in 0..r1 {
            if r1 - l1 <= n {
                total += counter.count(l1, r1, false, n - (r1 - l1), s + 1 - r1);
            }
        }
    }
    total
}
