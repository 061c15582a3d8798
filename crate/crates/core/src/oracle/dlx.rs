//! Exact cover by dancing links with a node budget.
//!
//! Primary items must be covered exactly once, secondary items at most once.
//! The column with the fewest live options is always branched on first.

/// Outcome of a bounded enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exhaustion {
    /// The whole tree was explored, or the visitor stopped the search.
    Complete,
    /// The budget ran out first.
    Budget,
}

pub struct ExactCover {
    primary: usize,
    // node arrays; 0 is the root, 1..=items are headers
    left: Vec<usize>,
    right: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
    column: Vec<usize>,
    row: Vec<usize>,
    size: Vec<usize>,
    rows: usize,
}

impl ExactCover {
    pub fn new(primary: usize, secondary: usize) -> Self {
        let items = primary + secondary;
        let n = items + 1;
        let mut left: Vec<usize> = (0..n).map(|i| if i == 0 { primary } else { i - 1 }).collect();
        let mut right: Vec<usize> = (0..n).map(|i| if i == primary { 0 } else { i + 1 }).collect();
        // secondary headers link only to themselves
        for i in primary + 1..n {
            left[i] = i;
            right[i] = i;
        }
        if primary == 0 {
            left[0] = 0;
            right[0] = 0;
        }
        ExactCover {
            primary,
            left,
            right,
            up: (0..n).collect(),
            down: (0..n).collect(),
            column: (0..n).collect(),
            row: vec![usize::MAX; n],
            size: vec![0; n],
            rows: 0,
        }
    }

    pub fn option_count(&self) -> usize {
        self.rows
    }

    /// Add an option covering the given items (`0..primary+secondary`);
    /// returns its index.
    pub fn add_option(&mut self, items: &[usize]) -> usize {
        let r = self.rows;
        self.rows += 1;
        let mut first = None;
        for &item in items {
            let c = item + 1;
            let node = self.column.len();
            self.column.push(c);
            self.row.push(r);
            self.up.push(self.up[c]);
            self.down.push(c);
            let above = self.up[c];
            self.down[above] = node;
            self.up[c] = node;
            self.size[c] += 1;
            match first {
                None => {
                    self.left.push(node);
                    self.right.push(node);
                    first = Some(node);
                }
                Some(f) => {
                    let last = self.left[f];
                    self.left.push(last);
                    self.right.push(f);
                    self.right[last] = node;
                    self.left[f] = node;
                }
            }
        }
        r
    }

    fn cover(&mut self, c: usize) {
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = r;
        self.left[r] = l;
        let mut i = self.down[c];
        while i != c {
            let mut j = self.right[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = d;
                self.up[d] = u;
                self.size[self.column[j]] -= 1;
                j = self.right[j];
            }
            i = self.down[i];
        }
    }

    fn uncover(&mut self, c: usize) {
        let mut i = self.up[c];
        while i != c {
            let mut j = self.left[i];
            while j != i {
                let col = self.column[j];
                self.size[col] += 1;
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = j;
                self.up[d] = j;
                j = self.left[j];
            }
            i = self.up[i];
        }
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = c;
        self.left[r] = c;
    }

    /// Visit every exact cover; the visitor returns `false` to stop.
    /// Each branching step costs one unit of `budget`.
    pub fn for_each_solution(&mut self, budget: &mut u64, visit: &mut dyn FnMut(&[usize]) -> bool) -> Exhaustion {
        let mut chosen = Vec::new();
        match self.search(budget, &mut chosen, visit) {
            Step::Continue | Step::Stop => Exhaustion::Complete,
            Step::OutOfBudget => Exhaustion::Budget,
        }
    }

    /// The first exact cover in search order, `Ok(None)` when none exists,
    /// `Err(())` when the budget ran out.
    pub fn first_solution(&mut self, budget: &mut u64) -> Result<Option<Vec<usize>>, ()> {
        let mut found = None;
        let status = self.for_each_solution(budget, &mut |rows| {
            found = Some(rows.to_vec());
            false
        });
        match (found, status) {
            (Some(rows), _) => Ok(Some(rows)),
            (None, Exhaustion::Complete) => Ok(None),
            (None, Exhaustion::Budget) => Err(()),
        }
    }

    fn search(&mut self, budget: &mut u64, chosen: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> Step {
        if self.right[0] == 0 {
            return if visit(chosen) { Step::Continue } else { Step::Stop };
        }
        let mut best = self.right[0];
        let mut c = self.right[best];
        while c != 0 && self.size[best] > 0 {
            if self.size[c] < self.size[best] {
                best = c;
            }
            c = self.right[c];
        }
        if self.size[best] == 0 {
            return Step::Continue;
        }
        self.cover(best);
        let mut r = self.down[best];
        let mut outcome = Step::Continue;
        while r != best {
            if *budget == 0 {
                outcome = Step::OutOfBudget;
                break;
            }
            *budget -= 1;
            chosen.push(self.row[r]);
            let mut j = self.right[r];
            while j != r {
                self.cover(self.column[j]);
                j = self.right[j];
            }
            let step = self.search(budget, chosen, visit);
            let mut j = self.left[r];
            while j != r {
                self.uncover(self.column[j]);
                j = self.left[j];
            }
            chosen.pop();
            if step != Step::Continue {
                outcome = step;
                break;
            }
            r = self.down[r];
        }
        self.uncover(best);
        outcome
    }

    pub fn primary_count(&self) -> usize {
        self.primary
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Step {
    Continue,
    Stop,
    OutOfBudget,
}
