//! Embedded conflict-driven clause-learning solver.
//!
//! A single-threaded CDCL core: two-literal watching with blocker
//! literals, first-UIP analysis with recursive clause minimization,
//! exponential VSIDS with a decay ramp, phase saving, LBD-driven restarts
//! with trail-based blocking, and aggressive deletion of learnt clauses
//! keyed on dynamically updated LBD. Behaviour is fully determined by the
//! seed and the budget.

use std::time::Instant;

/// Packed literal: `var * 2 + sign`, variables 0-based internally.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Lit(u32);

impl Lit {
    fn new(var: usize, positive: bool) -> Lit {
        Lit((var as u32) << 1 | (!positive) as u32)
    }

    fn from_dimacs(lit: i32) -> Lit {
        Lit::new(lit.unsigned_abs() as usize - 1, lit > 0)
    }

    fn var(self) -> usize {
        (self.0 >> 1) as usize
    }

    fn positive(self) -> bool {
        self.0 & 1 == 0
    }

    fn negate(self) -> Lit {
        Lit(self.0 ^ 1)
    }

    fn index(self) -> usize {
        self.0 as usize
    }
}

const NO_REASON: u32 = u32::MAX;

#[derive(Debug, Clone, Copy)]
struct Watch {
    cid: u32,
    blocker: Lit,
}

#[derive(Debug, Clone, Copy)]
struct ClauseHeader {
    start: u32,
    len: u32,
    lbd: u32,
    learnt: bool,
    deleted: bool,
    /// set when the clause participated in a recent conflict
    used: bool,
}

#[derive(Debug, Default)]
struct ClauseDb {
    lits: Vec<Lit>,
    headers: Vec<ClauseHeader>,
}

impl ClauseDb {
    fn get(&self, id: u32) -> &[Lit] {
        let h = self.headers[id as usize];
        &self.lits[h.start as usize..(h.start + h.len) as usize]
    }

    fn get_mut(&mut self, id: u32) -> &mut [Lit] {
        let h = self.headers[id as usize];
        &mut self.lits[h.start as usize..(h.start + h.len) as usize]
    }

    fn push(&mut self, lits: &[Lit], learnt: bool, lbd: u32) -> u32 {
        let id = self.headers.len() as u32;
        self.headers.push(ClauseHeader {
            start: self.lits.len() as u32,
            len: lits.len() as u32,
            lbd,
            learnt,
            deleted: false,
            used: false,
        });
        self.lits.extend_from_slice(lits);
        id
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CdclStatus {
    Sat,
    Unsat,
    Unknown,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CdclStats {
    pub decisions: u64,
    pub conflicts: u64,
    pub propagations: u64,
    pub restarts: u64,
}

#[derive(Debug, Clone, Default)]
pub struct Limits {
    pub deadline: Option<Instant>,
    pub max_conflicts: Option<u64>,
}

/// Max-heap over variable activities with position tracking.
struct VarHeap {
    heap: Vec<u32>,
    pos: Vec<i32>,
}

impl VarHeap {
    fn new(n: usize) -> VarHeap {
        VarHeap {
            heap: (0..n as u32).collect(),
            pos: (0..n as i32).collect(),
        }
    }

    fn less(activity: &[f64], a: u32, b: u32) -> bool {
        let (x, y) = (activity[a as usize], activity[b as usize]);
        x > y || (x == y && a < b)
    }

    fn sift_up(&mut self, mut i: usize, activity: &[f64]) {
        while i > 0 {
            let parent = (i - 1) / 2;
            if Self::less(activity, self.heap[i], self.heap[parent]) {
                self.swap(i, parent);
                i = parent;
            } else {
                break;
            }
        }
    }

    fn sift_down(&mut self, mut i: usize, activity: &[f64]) {
        loop {
            let (l, r) = (2 * i + 1, 2 * i + 2);
            let mut best = i;
            if l < self.heap.len() && Self::less(activity, self.heap[l], self.heap[best]) {
                best = l;
            }
            if r < self.heap.len() && Self::less(activity, self.heap[r], self.heap[best]) {
                best = r;
            }
            if best == i {
                break;
            }
            self.swap(i, best);
            i = best;
        }
    }

    fn swap(&mut self, i: usize, j: usize) {
        self.heap.swap(i, j);
        self.pos[self.heap[i] as usize] = i as i32;
        self.pos[self.heap[j] as usize] = j as i32;
    }

    fn pop(&mut self, activity: &[f64]) -> Option<u32> {
        if self.heap.is_empty() {
            return None;
        }
        let top = self.heap[0];
        self.pos[top as usize] = -1;
        let last = self.heap.pop().unwrap();
        if !self.heap.is_empty() {
            self.heap[0] = last;
            self.pos[last as usize] = 0;
            self.sift_down(0, activity);
        }
        Some(top)
    }

    fn insert(&mut self, v: u32, activity: &[f64]) {
        if self.pos[v as usize] >= 0 {
            return;
        }
        self.pos[v as usize] = self.heap.len() as i32;
        self.heap.push(v);
        self.sift_up(self.heap.len() - 1, activity);
    }

    fn bumped(&mut self, v: u32, activity: &[f64]) {
        let p = self.pos[v as usize];
        if p >= 0 {
            self.sift_up(p as usize, activity);
        }
    }
}

/// Exponential moving average in fixed-point arithmetic.
#[derive(Debug, Clone, Copy)]
struct Ema {
    value: f64,
    alpha: f64,
}

impl Ema {
    fn new(alpha: f64) -> Ema {
        Ema { value: 0.0, alpha }
    }

    fn update(&mut self, x: f64) {
        self.value += self.alpha * (x - self.value);
    }
}

pub struct CdclSolver {
    n_vars: usize,
    db: ClauseDb,
    watches: Vec<Vec<Watch>>,
    /// 0 = unset, 1 = true, -1 = false, per variable
    assigns: Vec<i8>,
    level: Vec<u32>,
    reason: Vec<u32>,
    trail: Vec<Lit>,
    trail_lim: Vec<usize>,
    qhead: usize,
    activity: Vec<f64>,
    var_inc: f64,
    heap: VarHeap,
    phase: Vec<bool>,
    seen: Vec<bool>,
    // scratch for analysis and minimization
    to_clear: Vec<u32>,
    min_stack: Vec<Lit>,
    level_marks: Vec<u64>,
    level_stamp: u64,
    ok: bool,
    rng: u64,
    learnt_ids: Vec<u32>,
    reduce_at: u64,
    reduce_count: u64,
    // restart machinery
    lbd_fast: Ema,
    lbd_slow: Ema,
    trail_avg: Ema,
    conflicts_at_restart: u64,
    pub stats: CdclStats,
}

impl CdclSolver {
    pub fn new(n_vars: u32, seed: u64) -> CdclSolver {
        let n = n_vars as usize;
        CdclSolver {
            n_vars: n,
            db: ClauseDb::default(),
            watches: vec![Vec::new(); 2 * n],
            assigns: vec![0; n],
            level: vec![0; n],
            reason: vec![NO_REASON; n],
            trail: Vec::with_capacity(n),
            trail_lim: Vec::new(),
            qhead: 0,
            activity: vec![0.0; n],
            var_inc: 1.0,
            heap: VarHeap::new(n),
            phase: vec![false; n],
            seen: vec![false; n],
            to_clear: Vec::new(),
            min_stack: Vec::new(),
            level_marks: vec![0; n + 1],
            level_stamp: 0,
            ok: true,
            rng: seed.wrapping_mul(2862933555777941757).wrapping_add(3037000493),
            learnt_ids: Vec::new(),
            reduce_at: 2000,
            reduce_count: 0,
            lbd_fast: Ema::new(1.0 / 32.0),
            lbd_slow: Ema::new(1.0 / 4096.0),
            trail_avg: Ema::new(1.0 / 4096.0),
            conflicts_at_restart: 0,
            stats: CdclStats::default(),
        }
    }

    fn next_rand(&mut self) -> u64 {
        self.rng ^= self.rng << 13;
        self.rng ^= self.rng >> 7;
        self.rng ^= self.rng << 17;
        self.rng
    }

    fn value(&self, l: Lit) -> i8 {
        let v = self.assigns[l.var()];
        if l.positive() {
            v
        } else {
            -v
        }
    }

    fn decision_level(&self) -> u32 {
        self.trail_lim.len() as u32
    }

    /// Adds an input clause; returns false once the formula is known unsat.
    pub fn add_clause(&mut self, dimacs: &[i32]) -> bool {
        if !self.ok {
            return false;
        }
        debug_assert_eq!(self.decision_level(), 0);
        let mut lits: Vec<Lit> = Vec::with_capacity(dimacs.len());
        for &raw in dimacs {
            debug_assert!(raw != 0 && raw.unsigned_abs() as usize <= self.n_vars);
            let l = Lit::from_dimacs(raw);
            if self.value(l) == 1 {
                return true; // clause already satisfied at root
            }
            if self.value(l) == -1 {
                continue; // falsified at root, drop the literal
            }
            if lits.contains(&l) {
                continue;
            }
            if lits.contains(&l.negate()) {
                return true; // tautology
            }
            lits.push(l);
        }
        match lits.len() {
            0 => {
                self.ok = false;
                false
            }
            1 => {
                self.enqueue(lits[0], NO_REASON);
                self.ok = self.propagate().is_none();
                self.ok
            }
            _ => {
                let id = self.db.push(&lits, false, 0);
                self.attach(id);
                true
            }
        }
    }

    fn attach(&mut self, id: u32) {
        let c = self.db.get(id);
        let (w0, w1) = (c[0], c[1]);
        self.watches[w0.negate().index()].push(Watch { cid: id, blocker: w1 });
        self.watches[w1.negate().index()].push(Watch { cid: id, blocker: w0 });
    }

    fn enqueue(&mut self, l: Lit, reason: u32) {
        debug_assert_eq!(self.value(l), 0);
        self.assigns[l.var()] = if l.positive() { 1 } else { -1 };
        self.level[l.var()] = self.decision_level();
        self.reason[l.var()] = reason;
        self.phase[l.var()] = l.positive();
        self.trail.push(l);
    }

    /// Propagates the queue; returns a conflicting clause id if any.
    fn propagate(&mut self) -> Option<u32> {
        let mut conflict = None;
        while conflict.is_none() && self.qhead < self.trail.len() {
            let p = self.trail[self.qhead];
            self.qhead += 1;
            self.stats.propagations += 1;
            let widx = p.index();
            let false_lit = p.negate();
            let mut ws = std::mem::take(&mut self.watches[widx]);
            let mut i = 0;
            'watches: while i < ws.len() {
                let Watch { cid, blocker } = ws[i];
                if self.value(blocker) == 1 {
                    i += 1;
                    continue;
                }
                {
                    let c = self.db.get_mut(cid);
                    if c[0] == false_lit {
                        c.swap(0, 1);
                    }
                }
                let c = self.db.get(cid);
                debug_assert_eq!(c[1], false_lit);
                let first = c[0];
                if first != blocker && self.value(first) == 1 {
                    ws[i].blocker = first;
                    i += 1;
                    continue;
                }
                for k in 2..c.len() {
                    if self.value(c[k]) != -1 {
                        let lk = c[k];
                        self.db.get_mut(cid).swap(1, k);
                        self.watches[lk.negate().index()].push(Watch { cid, blocker: first });
                        ws.swap_remove(i);
                        continue 'watches;
                    }
                }
                // no replacement: unit or conflict
                ws[i].blocker = first;
                if self.value(first) == -1 {
                    conflict = Some(cid);
                    self.qhead = self.trail.len();
                    break;
                }
                self.enqueue(first, cid);
                i += 1;
            }
            self.watches[widx] = ws;
        }
        conflict
    }

    fn bump_var(&mut self, v: usize) {
        self.activity[v] += self.var_inc;
        if self.activity[v] > 1e100 {
            for a in &mut self.activity {
                *a *= 1e-100;
            }
            self.var_inc *= 1e-100;
        }
        self.heap.bumped(v as u32, &self.activity);
    }

    fn lbd_of(&mut self, lits: &[Lit]) -> u32 {
        self.level_stamp += 1;
        let mut n = 0;
        for l in lits {
            let lv = self.level[l.var()] as usize;
            if self.level_marks[lv] != self.level_stamp {
                self.level_marks[lv] = self.level_stamp;
                n += 1;
            }
        }
        n
    }

    /// First-UIP analysis. Returns the learnt clause (asserting literal
    /// first, watch partner second) and the backtrack level.
    fn analyze(&mut self, conflict: u32) -> (Vec<Lit>, u32) {
        let mut learnt: Vec<Lit> = vec![Lit(0)]; // slot for the asserting literal
        let mut counter = 0usize;
        let mut p: Option<Lit> = None;
        let mut confl = conflict;
        let mut trail_i = self.trail.len();
        let current = self.decision_level();

        loop {
            // refresh the LBD of learnt reasons that keep showing up
            let h = self.db.headers[confl as usize];
            if h.learnt {
                let new_lbd = self.lbd_of(&self.db.get(confl).to_vec());
                let h = &mut self.db.headers[confl as usize];
                h.used = true;
                if new_lbd < h.lbd {
                    h.lbd = new_lbd;
                }
            }
            let c = self.db.get(confl).to_vec();
            let skip_first = p.is_some() as usize;
            for &q in &c[skip_first..] {
                let v = q.var();
                if !self.seen[v] && self.level[v] > 0 {
                    self.seen[v] = true;
                    self.bump_var(v);
                    if self.level[v] >= current {
                        counter += 1;
                    } else {
                        learnt.push(q);
                    }
                }
            }
            loop {
                trail_i -= 1;
                if self.seen[self.trail[trail_i].var()] {
                    break;
                }
            }
            let lit = self.trail[trail_i];
            self.seen[lit.var()] = false;
            counter -= 1;
            if counter == 0 {
                learnt[0] = lit.negate();
                break;
            }
            p = Some(lit);
            confl = self.reason[lit.var()];
            debug_assert_ne!(confl, NO_REASON);
        }

        // recursive minimization: drop literals implied by the rest
        let abstract_levels = learnt[1..]
            .iter()
            .fold(0u32, |acc, l| acc | 1 << (self.level[l.var()] & 31));
        let mut keep = vec![learnt[0]];
        for &l in &learnt[1..] {
            if self.reason[l.var()] == NO_REASON || !self.lit_redundant(l, abstract_levels) {
                keep.push(l);
            }
        }
        for &l in &learnt[1..] {
            self.seen[l.var()] = false;
        }
        for &v in &self.to_clear {
            self.seen[v as usize] = false;
        }
        self.to_clear.clear();
        let mut learnt = keep;

        // backtrack level: highest level among the non-asserting literals
        let bt = if learnt.len() == 1 {
            0
        } else {
            let mut max_i = 1;
            for i in 2..learnt.len() {
                if self.level[learnt[i].var()] > self.level[learnt[max_i].var()] {
                    max_i = i;
                }
            }
            learnt.swap(1, max_i);
            self.level[learnt[1].var()]
        };
        (learnt, bt)
    }

    /// DFS through reason clauses; a literal is redundant when every path
    /// terminates in seen or root-level literals within the clause's
    /// level signature.
    fn lit_redundant(&mut self, l: Lit, abstract_levels: u32) -> bool {
        self.min_stack.clear();
        self.min_stack.push(l);
        let top = self.to_clear.len();
        while let Some(x) = self.min_stack.pop() {
            let r = self.reason[x.var()];
            debug_assert_ne!(r, NO_REASON);
            let c = self.db.get(r).to_vec();
            for &q in &c[1..] {
                let v = q.var();
                if self.seen[v] || self.level[v] == 0 {
                    continue;
                }
                if self.reason[v] == NO_REASON || (1 << (self.level[v] & 31)) & abstract_levels == 0
                {
                    for &u in &self.to_clear[top..] {
                        self.seen[u as usize] = false;
                    }
                    self.to_clear.truncate(top);
                    return false;
                }
                self.seen[v] = true;
                self.to_clear.push(v as u32);
                self.min_stack.push(q);
            }
        }
        true
    }

    fn backtrack(&mut self, target: u32) {
        while self.decision_level() > target {
            let lim = self.trail_lim.pop().unwrap();
            for i in (lim..self.trail.len()).rev() {
                let v = self.trail[i].var();
                self.assigns[v] = 0;
                self.reason[v] = NO_REASON;
                self.heap.insert(v as u32, &self.activity);
            }
            self.trail.truncate(lim);
        }
        self.qhead = self.trail.len();
    }

    fn pick_branch(&mut self) -> Option<Lit> {
        while let Some(v) = self.heap.pop(&self.activity) {
            if self.assigns[v as usize] == 0 {
                let v = v as usize;
                // rare random polarity; keeps distinct seeds on distinct paths
                let positive = if self.next_rand() % 128 == 0 {
                    self.next_rand() & 1 == 1
                } else {
                    self.phase[v]
                };
                return Some(Lit::new(v, positive));
            }
        }
        None
    }

    fn reduce_db(&mut self) {
        self.reduce_count += 1;
        // rank learnt clauses worst-first; glue clauses and clauses that
        // fired since the last reduction survive
        let mut ranked: Vec<(u32, u32, u32)> = Vec::new();
        for &id in &self.learnt_ids {
            let h = self.db.headers[id as usize];
            if h.deleted {
                continue;
            }
            ranked.push((h.lbd, h.len, id));
        }
        ranked.sort_by(|a, b| b.cmp(a));
        let target = ranked.len() / 2;
        let mut removed = 0usize;
        for &(lbd, _, id) in &ranked {
            if removed >= target {
                break;
            }
            if lbd <= 2 {
                continue;
            }
            let h = self.db.headers[id as usize];
            if h.used {
                self.db.headers[id as usize].used = false;
                continue;
            }
            let c = self.db.get(id);
            let locked = self.value(c[0]) == 1 && self.reason[c[0].var()] == id;
            if locked {
                continue;
            }
            self.db.headers[id as usize].deleted = true;
            removed += 1;
        }
        self.learnt_ids.retain(|&id| !self.db.headers[id as usize].deleted);
        self.rebuild_watches();
        // compact the arena when most of it is dead weight
        if self.db.lits.len() > 100_000 {
            self.compact();
        }
    }

    fn compact(&mut self) {
        let mut live = 0usize;
        for h in &self.db.headers {
            if !h.deleted {
                live += h.len as usize;
            }
        }
        if live * 2 > self.db.lits.len() {
            return;
        }
        let mut new_lits = Vec::with_capacity(live);
        let mut new_headers = Vec::new();
        let mut remap = vec![NO_REASON; self.db.headers.len()];
        for (old_id, h) in self.db.headers.iter().enumerate() {
            if h.deleted {
                continue;
            }
            let new_id = new_headers.len() as u32;
            remap[old_id] = new_id;
            let mut nh = *h;
            nh.start = new_lits.len() as u32;
            new_lits.extend_from_slice(
                &self.db.lits[h.start as usize..(h.start + h.len) as usize],
            );
            new_headers.push(nh);
        }
        for r in &mut self.reason {
            if *r != NO_REASON {
                debug_assert_ne!(remap[*r as usize], NO_REASON);
                *r = remap[*r as usize];
            }
        }
        for ids in &mut self.learnt_ids {
            *ids = remap[*ids as usize];
        }
        self.db.lits = new_lits;
        self.db.headers = new_headers;
        self.rebuild_watches();
    }

    fn rebuild_watches(&mut self) {
        for w in &mut self.watches {
            w.clear();
        }
        for id in 0..self.db.headers.len() as u32 {
            let h = self.db.headers[id as usize];
            if !h.deleted {
                debug_assert!(h.len >= 2);
                self.attach(id);
            }
        }
    }

    pub fn solve(&mut self, limits: &Limits) -> CdclStatus {
        if !self.ok {
            return CdclStatus::Unsat;
        }
        if self.propagate().is_some() {
            self.ok = false;
            return CdclStatus::Unsat;
        }
        loop {
            if let Some(conflict) = self.propagate() {
                self.stats.conflicts += 1;
                if self.decision_level() == 0 {
                    self.ok = false;
                    return CdclStatus::Unsat;
                }
                let (learnt, bt) = self.analyze(conflict);
                self.backtrack(bt);
                let lbd = self.lbd_of(&learnt);
                self.lbd_fast.update(lbd as f64);
                self.lbd_slow.update(lbd as f64);
                self.trail_avg.update(self.trail.len() as f64);
                if learnt.len() == 1 {
                    self.enqueue(learnt[0], NO_REASON);
                } else {
                    let id = self.db.push(&learnt, true, lbd);
                    self.attach(id);
                    self.learnt_ids.push(id);
                    self.enqueue(learnt[0], id);
                }
                // decay ramp: fast forgetting early, stable later
                let decay = if self.stats.conflicts < 10_000 { 0.85 } else { 0.95 };
                self.var_inc /= decay;
                if self.out_of_budget(limits) {
                    self.backtrack(0);
                    return CdclStatus::Unknown;
                }
                if self.stats.conflicts >= self.reduce_at {
                    self.reduce_at += 300 * (self.reduce_count + 1);
                    self.reduce_db();
                }
                if self.should_restart() {
                    self.stats.restarts += 1;
                    self.conflicts_at_restart = self.stats.conflicts;
                    self.backtrack(0);
                }
            } else {
                match self.pick_branch() {
                    None => return CdclStatus::Sat,
                    Some(l) => {
                        self.stats.decisions += 1;
                        self.trail_lim.push(self.trail.len());
                        self.enqueue(l, NO_REASON);
                    }
                }
            }
        }
    }

    fn should_restart(&mut self) -> bool {
        if self.stats.conflicts - self.conflicts_at_restart < 50 {
            return false;
        }
        // block restarts while the assignment is unusually deep: the
        // solver may be closing in on a model
        if (self.trail.len() as f64) > 1.4 * self.trail_avg.value {
            return false;
        }
        self.lbd_fast.value > 1.15 * self.lbd_slow.value
    }

    fn out_of_budget(&self, limits: &Limits) -> bool {
        if let Some(max) = limits.max_conflicts {
            if self.stats.conflicts >= max {
                return true;
            }
        }
        if let Some(deadline) = limits.deadline {
            if self.stats.conflicts % 512 == 0 && Instant::now() >= deadline {
                return true;
            }
        }
        false
    }

    /// Full model as signed DIMACS literals; only valid after `Sat`.
    pub fn model(&self) -> Vec<i32> {
        (0..self.n_vars)
            .map(|v| {
                let val = self.assigns[v];
                debug_assert_ne!(val, 0);
                if val >= 0 {
                    v as i32 + 1
                } else {
                    -(v as i32 + 1)
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve_clauses(n_vars: u32, clauses: &[&[i32]]) -> CdclStatus {
        let mut s = CdclSolver::new(n_vars, 0);
        for c in clauses {
            if !s.add_clause(c) {
                return CdclStatus::Unsat;
            }
        }
        let status = s.solve(&Limits::default());
        if status == CdclStatus::Sat {
            let model = s.model();
            for c in clauses {
                assert!(
                    c.iter().any(|&l| model[(l.unsigned_abs() - 1) as usize] == l),
                    "model does not satisfy {c:?}"
                );
            }
        }
        status
    }

    #[test]
    fn empty_formula_is_sat() {
        assert_eq!(solve_clauses(1, &[]), CdclStatus::Sat);
    }

    #[test]
    fn simple_instances() {
        assert_eq!(solve_clauses(2, &[&[1, 2], &[-1, 2], &[-2]]), CdclStatus::Unsat);
        assert_eq!(solve_clauses(2, &[&[1, 2], &[-1, 2]]), CdclStatus::Sat);
        assert_eq!(
            solve_clauses(3, &[&[1, 2, 3], &[-1, -2], &[-2, -3], &[-1, -3]]),
            CdclStatus::Sat
        );
    }

    #[test]
    fn pigeonhole_4_into_3_is_unsat() {
        // var p_{i,j} = 3*i + j + 1: pigeon i in hole j
        let mut clauses: Vec<Vec<i32>> = Vec::new();
        for i in 0..4 {
            clauses.push((0..3).map(|j| 3 * i + j + 1).collect());
        }
        for j in 0..3 {
            for i1 in 0..4 {
                for i2 in (i1 + 1)..4 {
                    clauses.push(vec![-(3 * i1 + j + 1), -(3 * i2 + j + 1)]);
                }
            }
        }
        let refs: Vec<&[i32]> = clauses.iter().map(|c| c.as_slice()).collect();
        assert_eq!(solve_clauses(12, &refs), CdclStatus::Unsat);
    }

    /// Exhaustive agreement with brute-force truth on random 3-CNF.
    #[test]
    fn agrees_with_brute_force() {
        let mut seed = 0xdeadbeefu64;
        let mut rnd = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for n in 3..=9u32 {
            for round in 0..60 {
                let n_clauses = 2 + (rnd() % (4 * n as u64)) as usize;
                let clauses: Vec<Vec<i32>> = (0..n_clauses)
                    .map(|_| {
                        let mut c: Vec<i32> = Vec::new();
                        for _ in 0..3 {
                            let v = (rnd() % n as u64) as i32 + 1;
                            let l = if rnd() & 1 == 0 { v } else { -v };
                            if !c.contains(&l) {
                                c.push(l);
                            }
                        }
                        c
                    })
                    .collect();
                let brute_sat = (0..(1u64 << n)).any(|m| {
                    clauses.iter().all(|c| {
                        c.iter().any(|&l| {
                            let bit = m >> (l.unsigned_abs() - 1) & 1 == 1;
                            bit == (l > 0)
                        })
                    })
                });
                let refs: Vec<&[i32]> = clauses.iter().map(|c| c.as_slice()).collect();
                let got = solve_clauses(n, &refs);
                assert_eq!(
                    got,
                    if brute_sat { CdclStatus::Sat } else { CdclStatus::Unsat },
                    "n={n} round={round} clauses={clauses:?}"
                );
            }
        }
    }

    #[test]
    fn conflict_budget_reports_unknown() {
        // hard instance: pigeonhole 7 into 6 with a 1-conflict budget
        let mut s = CdclSolver::new(42, 0);
        for i in 0..7 {
            let c: Vec<i32> = (0..6).map(|j| 6 * i + j + 1).collect();
            s.add_clause(&c);
        }
        for j in 0..6 {
            for i1 in 0..7 {
                for i2 in (i1 + 1)..7 {
                    s.add_clause(&[-(6 * i1 + j + 1), -(6 * i2 + j + 1)]);
                }
            }
        }
        let status = s.solve(&Limits {
            deadline: None,
            max_conflicts: Some(1),
        });
        assert_eq!(status, CdclStatus::Unknown);
    }

    #[test]
    fn deep_reduction_keeps_soundness() {
        // solvable instance large enough to trigger several reductions
        let mut clauses: Vec<Vec<i32>> = Vec::new();
        let n = 26u32;
        for i in 1..=(n as i32 - 2) {
            clauses.push(vec![i, i + 1, i + 2]);
            clauses.push(vec![-i, -(i + 1), -(i + 2)]);
        }
        let refs: Vec<&[i32]> = clauses.iter().map(|c| c.as_slice()).collect();
        assert_eq!(solve_clauses(n, &refs), CdclStatus::Sat);
    }
}
