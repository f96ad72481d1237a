//! Exact minimum distance and weight distribution by exhaustive enumeration.
//!
//! Messages are enumerated over GF(p)-coordinates of GF(q)^k in modular p-ary
//! Gray order, so consecutive messages differ by one basis vector and each
//! step costs a single row update. Only messages whose highest nonzero symbol
//! equals 1 are visited: scalar multiples share a weight, which divides the
//! work by q - 1.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use thiserror::Error;

use crate::cyclic::{CyclicCode, LinearCode};
use crate::finite_field::Field;

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;
pub const SPECTRUM_LIMIT: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DistanceError {
    #[error("exhaustive search supports fields of at most 256 elements, got {0}")]
    FieldTooLarge(u32),
    #[error("the zero code has no minimum distance")]
    ZeroDimension,
    #[error("weight distribution needs q^k <= {SPECTRUM_LIMIT}, got {q}^{k}")]
    SpectrumTooLarge { q: u32, k: usize },
    #[error("failed to build a worker pool: {0}")]
    Pool(String),
}

/// Anything with a generator matrix.
pub trait Generated {
    fn field(&self) -> &Field;
    fn length(&self) -> usize;
    fn generator_rows(&self) -> Vec<Vec<u32>>;
}

impl Generated for CyclicCode {
    fn field(&self) -> &Field {
        CyclicCode::field(self)
    }
    fn length(&self) -> usize {
        self.n()
    }
    fn generator_rows(&self) -> Vec<Vec<u32>> {
        self.generator_matrix()
    }
}

impl Generated for LinearCode {
    fn field(&self) -> &Field {
        LinearCode::field(self)
    }
    fn length(&self) -> usize {
        LinearCode::length(self)
    }
    fn generator_rows(&self) -> Vec<Vec<u32>> {
        self.basis().to_vec()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Traversal {
    /// Gray-order incremental updates; every weight is computed in full.
    Gray,
    /// Each codeword evaluated from scratch, abandoned once its running weight
    /// exceeds the best weight found so far by any worker.
    Direct,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Maximum number of messages to evaluate.
    pub budget: u64,
    /// Contiguous pieces each leading-symbol block is split into.
    pub chunks: usize,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    pub traversal: Traversal,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_BUDGET, chunks: 64, threads: None, traversal: Traversal::Gray }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinDistance {
    pub d: usize,
    /// False when the budget cut the search short; `d` is then an upper bound.
    pub exact: bool,
    pub witness: Vec<u32>,
    pub messages: u64,
}

/// Number of messages the scalar-quotient search visits: (q^k - 1)/(q - 1).
/// Saturates at `u64::MAX`.
pub fn message_count(q: u32, k: usize) -> u64 {
    (0..k).fold(0u64, |acc, l| acc.saturating_add((q as u64).saturating_pow(l as u32)))
}

struct Kernel {
    n: usize,
    p: u32,
    m: u32,
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    rows: Vec<Vec<u8>>,
    /// Column-major generator, for the direct traversal.
    columns: Vec<Vec<u8>>,
    /// steps[j * m + t] = p^t · row_j: the update when GF(p)-digit (j, t) moves by +1.
    steps: Vec<Vec<u8>>,
}

impl Kernel {
    fn new<C: Generated + ?Sized>(code: &C) -> Result<Self, DistanceError> {
        let field = code.field();
        let q = field.size();
        if q > 256 {
            return Err(DistanceError::FieldTooLarge(q));
        }
        let n = code.length();
        let mut add = vec![0u8; (q * q) as usize];
        let mut mul = vec![0u8; (q * q) as usize];
        for a in field.elements() {
            for b in field.elements() {
                add[(a * q + b) as usize] = field.add(a, b) as u8;
                mul[(a * q + b) as usize] = field.mul(a, b) as u8;
            }
        }
        let rows: Vec<Vec<u8>> =
            code.generator_rows().into_iter().map(|r| r.into_iter().map(|x| x as u8).collect()).collect();
        let columns = (0..n).map(|i| rows.iter().map(|r| r[i]).collect()).collect();
        let p = field.characteristic();
        let m = field.degree();
        let mut steps = Vec::new();
        for row in &rows {
            for t in 0..m {
                let s = p.pow(t);
                steps.push(row.iter().map(|&x| mul[(s * q + x as u32) as usize]).collect());
            }
        }
        Ok(Kernel { n, p, m, q: q as usize, add, mul, rows, columns, steps })
    }

    fn k(&self) -> usize {
        self.rows.len()
    }

    /// Message symbols 0..count decoded from `index` (plain or Gray digits);
    /// the remaining symbols are zero.
    fn symbols(&self, count: usize, index: u64, gray: bool) -> Vec<u8> {
        let digits = count * self.m as usize;
        let p = self.p as u64;
        let mut base = Vec::with_capacity(digits + 1);
        let mut x = index;
        for _ in 0..digits {
            base.push((x % p) as u32);
            x /= p;
        }
        base.push(0);
        let digit = |d: usize| {
            if gray {
                (base[d] + self.p - base[d + 1]) % self.p
            } else {
                base[d]
            }
        };
        let mut msg = vec![0u8; self.k()];
        for (j, sym) in msg.iter_mut().enumerate().take(count) {
            let mut enc = 0;
            for t in (0..self.m as usize).rev() {
                enc = enc * self.p + digit(j * self.m as usize + t);
            }
            *sym = enc as u8;
        }
        msg
    }

    /// Message `index` of the block whose highest nonzero symbol is a 1 at `lead`.
    fn message(&self, lead: usize, index: u64, gray: bool) -> Vec<u8> {
        let mut msg = self.symbols(lead, index, gray);
        msg[lead] = 1;
        msg
    }

    fn encode(&self, msg: &[u8]) -> Vec<u8> {
        let mut c = vec![0u8; self.n];
        for (row, &s) in self.rows.iter().zip(msg) {
            if s == 0 {
                continue;
            }
            for (ci, &r) in c.iter_mut().zip(row) {
                let prod = self.mul[s as usize * self.q + r as usize];
                *ci = self.add[*ci as usize * self.q + prod as usize];
            }
        }
        c
    }

    /// Gray walk over `len` messages from `start`. Returns (best weight, offset).
    fn walk_gray(&self, lead: usize, start: u64, len: u64) -> (usize, u64) {
        let mut c = self.encode(&self.message(lead, start, true));
        let mut best = (c.iter().filter(|&&x| x != 0).count(), 0);
        let p = self.p as u64;
        for s in 1..len {
            let mut idx = start + s - 1;
            let mut d = 0;
            while idx % p == p - 1 {
                idx /= p;
                d += 1;
            }
            let step = &self.steps[d];
            let mut w = 0;
            for (ci, &v) in c.iter_mut().zip(step) {
                let x = self.add[*ci as usize * self.q + v as usize];
                *ci = x;
                w += (x != 0) as usize;
            }
            if w < best.0 {
                best = (w, s);
            }
        }
        best
    }

    fn walk_direct(&self, lead: usize, start: u64, len: u64, shared: &AtomicUsize) -> (usize, u64) {
        let mut best = (usize::MAX, 0);
        for s in 0..len {
            let msg = self.message(lead, start + s, false);
            let bound = shared.load(Ordering::Relaxed).min(best.0);
            let mut w = 0;
            for col in &self.columns {
                let mut acc = 0u8;
                for (&g, &x) in col.iter().zip(&msg) {
                    let prod = self.mul[x as usize * self.q + g as usize];
                    acc = self.add[acc as usize * self.q + prod as usize];
                }
                w += (acc != 0) as usize;
                if w > bound {
                    break;
                }
            }
            if w < best.0 {
                best = (w, s);
                shared.fetch_min(w, Ordering::Relaxed);
            }
        }
        best
    }
}

struct Task {
    lead: usize,
    start: u64,
    len: u64,
}

fn plan(kernel: &Kernel, chunks: usize, budget: u64) -> (Vec<Task>, bool) {
    let mut tasks = Vec::new();
    let mut remaining = budget;
    let mut complete = true;
    for lead in 0..kernel.k() {
        let size = (kernel.p as u64).pow(lead as u32 * kernel.m);
        let pieces = (chunks.max(1) as u64).min(size);
        for c in 0..pieces {
            let start = size * c / pieces;
            let end = size * (c + 1) / pieces;
            let len = (end - start).min(remaining);
            if len < end - start {
                complete = false;
            }
            if len > 0 {
                tasks.push(Task { lead, start, len });
                remaining -= len;
            }
        }
    }
    (tasks, complete)
}

fn with_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, DistanceError> {
    match threads {
        None => Ok(f()),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| DistanceError::Pool(e.to_string())),
    }
}

/// Minimum Hamming weight over the nonzero codewords.
pub fn min_distance_exhaustive<C: Generated + ?Sized>(
    code: &C,
    options: &SearchOptions,
) -> Result<MinDistance, DistanceError> {
    let kernel = Kernel::new(code)?;
    if kernel.k() == 0 {
        return Err(DistanceError::ZeroDimension);
    }
    let (tasks, complete) = plan(&kernel, options.chunks, options.budget);
    let shared = AtomicUsize::new(usize::MAX);
    let results: Vec<(usize, u64)> = with_pool(options.threads, || {
        tasks
            .par_iter()
            .map(|t| match options.traversal {
                Traversal::Gray => kernel.walk_gray(t.lead, t.start, t.len),
                Traversal::Direct => kernel.walk_direct(t.lead, t.start, t.len, &shared),
            })
            .collect()
    })?;
    let (task, &(d, offset)) =
        results.iter().enumerate().min_by_key(|(i, r)| (r.0, *i)).expect("k >= 1 gives at least one task");
    let t = &tasks[task];
    let gray = options.traversal == Traversal::Gray;
    let witness = kernel.encode(&kernel.message(t.lead, t.start + offset, gray));
    debug_assert_eq!(witness.iter().filter(|&&x| x != 0).count(), d);
    Ok(MinDistance {
        d,
        exact: complete,
        witness: witness.into_iter().map(u32::from).collect(),
        messages: tasks.iter().map(|t| t.len).sum(),
    })
}

/// Full weight spectrum: weight -> number of codewords.
pub fn weight_distribution<C: Generated + ?Sized>(
    code: &C,
    threads: Option<usize>,
) -> Result<BTreeMap<usize, u64>, DistanceError> {
    let kernel = Kernel::new(code)?;
    let q = code.field().size();
    let k = kernel.k();
    let total = (q as u64).checked_pow(k as u32).filter(|&t| t <= SPECTRUM_LIMIT);
    let Some(total) = total else {
        return Err(DistanceError::SpectrumTooLarge { q, k });
    };
    let p = kernel.p as u64;
    let pieces = 64u64.min(total);
    let spectra: Vec<Vec<u64>> = with_pool(threads, || {
        (0..pieces)
            .into_par_iter()
            .map(|c| {
                let start = total * c / pieces;
                let end = total * (c + 1) / pieces;
                let mut counts = vec![0u64; kernel.n + 1];
                // Gray state for the full message space (no leading symbol fixed).
                let mut cw = kernel.encode(&kernel.symbols(k, start, true));
                counts[cw.iter().filter(|&&x| x != 0).count()] += 1;
                for idx in start..end - 1 {
                    let mut x = idx;
                    let mut d = 0;
                    while x % p == p - 1 {
                        x /= p;
                        d += 1;
                    }
                    let mut w = 0;
                    for (ci, &v) in cw.iter_mut().zip(&kernel.steps[d]) {
                        let s = kernel.add[*ci as usize * kernel.q + v as usize];
                        *ci = s;
                        w += (s != 0) as usize;
                    }
                    counts[w] += 1;
                }
                counts
            })
            .collect()
    })?;
    let mut out = BTreeMap::new();
    for spectrum in spectra {
        for (w, c) in spectrum.into_iter().enumerate() {
            if c > 0 {
                *out.entry(w).or_insert(0) += c;
            }
        }
    }
    Ok(out)
}
