use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use super::torus::{ColoringMatrix, TorusConfig};
use crate::{Error, Result, Shape};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constraint {
    /// `(D, b, a)`-covering on two colors.
    Covering { b: u64, a: u64 },
    /// `(D, B)`-coloring for a fixed matrix.
    Matrix(ColoringMatrix),
    /// Any perfect coloring: counts depend only on the color.
    AnyPerfect,
}

#[derive(Debug, Clone)]
pub struct SearchParams {
    pub shape: Shape,
    pub colors: usize,
    pub width: usize,
    pub height: usize,
    pub constraint: Constraint,
    pub limit: Option<usize>,
    /// Worker threads; 0 or 1 runs serially.
    pub threads: usize,
}

/// Colorings of the torus satisfying the constraint, in lexicographic order of
/// the row-major color sequence, truncated at `limit`.
pub fn search(params: &SearchParams) -> Result<Vec<TorusConfig>> {
    let n = params.colors;
    if n == 0 || n > 256 {
        return Err(Error::InvalidConfig(format!("alphabet size {n} out of range")));
    }
    if params.width == 0 || params.height == 0 {
        return Err(Error::InvalidConfig("torus dimensions must be positive".into()));
    }
    if params.shape.is_empty() {
        return Err(Error::EmptyShape);
    }
    match &params.constraint {
        Constraint::Covering { .. } if n != 2 => return Err(Error::NonBinary(n)),
        Constraint::Matrix(m) => {
            if m.size() != n {
                return Err(Error::InvalidConfig(format!(
                    "matrix is {0}x{0} but the alphabet has {n} colors",
                    m.size()
                )));
            }
            m.check_shape_size(params.shape.len())?;
        }
        _ => {}
    }
    let problem = Problem::new(params);
    if params.limit == Some(0) {
        return Ok(Vec::new());
    }
    let found = if params.threads <= 1 {
        let mut state = State::new(&problem);
        let mut out = Vec::new();
        state.run(0, params.limit, &mut out);
        out
    } else {
        parallel(&problem, params.threads, params.limit)
    };
    found.into_iter().map(|colors| TorusConfig::new(params.width, params.height, n, colors)).collect()
}

struct Problem {
    n: usize,
    cells: usize,
    size: u32,
    /// For each cell `k`, the cells whose windows contain `k` (with repetitions).
    watchers: Vec<Vec<usize>>,
    /// Cells whose windows are fully assigned once cell `k` is.
    completes: Vec<Vec<usize>>,
    /// Fixed count vector per color, `None` entries for AnyPerfect.
    targets: Vec<Option<Vec<u32>>>,
    forbidden: Vec<bool>,
    any_perfect: bool,
}

impl Problem {
    fn new(params: &SearchParams) -> Self {
        let (w, h, n) = (params.width, params.height, params.colors);
        let cells = w * h;
        let probe = TorusConfig::new(w, h, n, vec![0; cells]).expect("validated dimensions");
        let window: Vec<Vec<usize>> = (0..cells).map(|v| probe.window(&params.shape, v).collect()).collect();
        let mut watchers = vec![Vec::new(); cells];
        let mut completes = vec![Vec::new(); cells];
        for (v, win) in window.iter().enumerate() {
            for &k in win {
                watchers[k].push(v);
            }
            let last = win.iter().copied().max().expect("non-empty shape").max(v);
            completes[last].push(v);
        }
        let size = params.shape.len() as u32;
        let mut forbidden = vec![false; n];
        let mut any_perfect = false;
        let targets = match &params.constraint {
            Constraint::Covering { b, a } => [a, b]
                .iter()
                .enumerate()
                .map(|(color, &&ones)| {
                    if ones > u64::from(size) {
                        forbidden[color] = true;
                        None
                    } else {
                        Some(vec![size - ones as u32, ones as u32])
                    }
                })
                .collect(),
            Constraint::Matrix(m) => {
                (0..n).map(|j| Some(m.column(j).into_iter().map(|v| v as u32).collect())).collect()
            }
            Constraint::AnyPerfect => {
                any_perfect = true;
                vec![None; n]
            }
        };
        Problem { n, cells, size, watchers, completes, targets, forbidden, any_perfect }
    }
}

struct State<'p> {
    problem: &'p Problem,
    colors: Vec<u8>,
    /// `counts[v·n + c]`: assigned cells of color `c` in the window of `v`.
    counts: Vec<u32>,
    /// Column profile per color discovered so far (AnyPerfect).
    profile: Vec<Option<Vec<u32>>>,
}

impl<'p> State<'p> {
    fn new(problem: &'p Problem) -> Self {
        State {
            problem,
            colors: vec![0; problem.cells],
            counts: vec![0; problem.cells * problem.n],
            profile: problem.targets.clone(),
        }
    }

    fn target(&self, v: usize) -> Option<&Vec<u32>> {
        self.profile[usize::from(self.colors[v])].as_ref()
    }

    /// Assigns `color` to cell `k` and checks every constraint it touches.
    /// Returns whether the partial assignment is still consistent, together
    /// with the colors whose profile this call fixed (to undo).
    fn assign(&mut self, k: usize, color: u8) -> (bool, Vec<u8>) {
        let p = self.problem;
        let n = p.n;
        let c = usize::from(color);
        self.colors[k] = color;
        for &v in &p.watchers[k] {
            self.counts[v * n + c] += 1;
        }
        let mut fixed = Vec::new();
        if p.forbidden[c] {
            return (false, fixed);
        }
        if let Some(t) = self.target(k) {
            if (0..n).any(|i| self.counts[k * n + i] > t[i]) {
                return (false, fixed);
            }
        }
        for &v in &p.watchers[k] {
            if v < k {
                if let Some(t) = self.target(v) {
                    if self.counts[v * n + c] > t[c] {
                        return (false, fixed);
                    }
                }
            }
        }
        for &v in &p.completes[k] {
            let got = &self.counts[v * n..(v + 1) * n];
            let own = usize::from(self.colors[v]);
            match &self.profile[own] {
                Some(t) => {
                    if got != t.as_slice() {
                        return (false, fixed);
                    }
                }
                None => {
                    debug_assert!(p.any_perfect);
                    debug_assert_eq!(got.iter().sum::<u32>(), p.size);
                    self.profile[own] = Some(got.to_vec());
                    fixed.push(own as u8);
                }
            }
        }
        (true, fixed)
    }

    fn unassign(&mut self, k: usize, fixed: Vec<u8>) {
        let c = usize::from(self.colors[k]);
        for &v in &self.problem.watchers[k] {
            self.counts[v * self.problem.n + c] -= 1;
        }
        for own in fixed {
            self.profile[usize::from(own)] = None;
        }
    }

    /// Depth-first enumeration from cell `k`; returns false once `limit`
    /// results have been collected.
    fn run(&mut self, k: usize, limit: Option<usize>, out: &mut Vec<Vec<u8>>) -> bool {
        if k == self.problem.cells {
            out.push(self.colors.clone());
            return limit.is_none_or(|l| out.len() < l);
        }
        for color in 0..self.problem.n as u16 {
            let color = color as u8;
            let (ok, fixed) = self.assign(k, color);
            let keep_going = !ok || self.run(k + 1, limit, out);
            self.unassign(k, fixed);
            if !keep_going {
                return false;
            }
        }
        true
    }

    /// Assigns a prefix; false at the first inconsistency.
    fn apply_prefix(&mut self, prefix: &[u8]) -> bool {
        for (k, &color) in prefix.iter().enumerate() {
            let (ok, _fixed) = self.assign(k, color);
            if !ok {
                return false;
            }
        }
        true
    }
}

/// Splits on the colors of the first few cells. Prefixes are handed out in
/// lexicographic order and their results concatenated in that order, so the
/// output equals the serial one.
fn parallel(problem: &Problem, threads: usize, limit: Option<usize>) -> Vec<Vec<u8>> {
    let n = problem.n;
    let mut depth = 0;
    let mut count = 1usize;
    while depth < problem.cells && count < threads * 16 {
        depth += 1;
        count = count.saturating_mul(n);
    }
    let prefix_of = |mut idx: usize| {
        let mut prefix = vec![0u8; depth];
        for slot in prefix.iter_mut().rev() {
            *slot = (idx % n) as u8;
            idx /= n;
        }
        prefix
    };
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Vec<Vec<u8>>>>> = Mutex::new(vec![None; count]);
    std::thread::scope(|scope| {
        for _ in 0..threads.min(count) {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                if idx >= count {
                    break;
                }
                let mut state = State::new(problem);
                let mut out = Vec::new();
                if state.apply_prefix(&prefix_of(idx)) {
                    state.run(depth, limit, &mut out);
                }
                results.lock().expect("worker panicked")[idx] = Some(out);
            });
        }
    });
    let mut merged: Vec<Vec<u8>> =
        results.into_inner().expect("worker panicked").into_iter().flatten().flatten().collect();
    if let Some(l) = limit {
        merged.truncate(l);
    }
    merged
}
