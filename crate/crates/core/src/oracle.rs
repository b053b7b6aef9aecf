//! Brute-force oracle for `dim D^λ`.
//!
//! The Specht module `S^λ` is realized inside the permutation module on
//! tabloids, spanned by the polytabloids `e_T` of standard tableaux `T`.
//! Declaring tabloids orthonormal gives an invariant symmetric form whose
//! Gram matrix on `{e_T}` has integer entries. For `p`-regular `λ`, its rank
//! over `F_p` is `dim D^λ`, since `D^λ = S^λ / (S^λ ∩ S^λ⊥)`.

use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::partition::Partition;

/// Limits and execution mode for oracle computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest `|λ|` accepted.
    pub size_cap: usize,
    /// Above this many standard tableaux, rank computations stream Gram
    /// rows into an echelon form instead of materializing the matrix.
    pub stream_threshold: usize,
    pub exec: Execution,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            size_cap: 16,
            stream_threshold: 2000,
            exec: Execution::default(),
        }
    }
}

impl OracleConfig {
    fn check_size(&self, lambda: &Partition) -> Result<()> {
        if lambda.size() > self.size_cap {
            return Err(Error::TooLarge {
                size: lambda.size(),
                cap: self.size_cap,
            });
        }
        Ok(())
    }
}

/// A filling of a Young diagram by `1..=n`, increasing along rows and down
/// columns.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct StandardTableau {
    rows: Vec<Vec<u8>>,
}

impl StandardTableau {
    /// Validates shape and strictness.
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            let x = x as usize;
            if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Parse(format!("entries of {rows:?} are not a permutation of 1..={n}")));
            }
        }
        let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| below > above));
        if !rows_ok || !cols_ok {
            return Err(Error::Parse(format!("{rows:?} is not standard")));
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("tableau rows are a partition")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// The tabloid `{T}`.
    pub fn tabloid(&self) -> Tabloid {
        let mut row_of = vec![0u8; self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for &x in row {
                row_of[x as usize - 1] = r as u8;
            }
        }
        Tabloid { row_of }
    }

    fn columns(&self) -> Vec<Vec<u8>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|c| self.rows.iter().filter_map(|r| r.get(c).copied()).collect())
            .collect()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// Standard tableaux of shape `lambda`, ordered lexicographically by their
/// row reading word.
pub fn standard_tableaux(lambda: &Partition, config: &OracleConfig) -> Result<Vec<StandardTableau>> {
    config.check_size(lambda)?;
    fn fill(shape: &[usize], rows: &mut Vec<Vec<u8>>, next: u8, n: u8, out: &mut Vec<StandardTableau>) {
        if next > n {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            let fits = len < shape[r] && (r == 0 || rows[r - 1].len() > len);
            if fits {
                rows[r].push(next);
                fill(shape, rows, next + 1, n, out);
                rows[r].pop();
            }
        }
    }
    let shape = lambda.parts();
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.len()];
    fill(shape, &mut rows, 1, lambda.size() as u8, &mut out);
    out.sort_unstable_by_key(|a| a.rows.concat());
    Ok(out)
}

/// A row-equivalence class of tableaux, stored as the row index of each of
/// `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tabloid {
    row_of: Vec<u8>,
}

impl Tabloid {
    /// Entries of each row, sorted.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let count = self.row_of.iter().map(|&r| r as usize + 1).max().unwrap_or(0);
        let mut rows = vec![Vec::new(); count];
        for (x, &r) in self.row_of.iter().enumerate() {
            rows[r as usize].push(x + 1);
        }
        rows
    }

    pub fn from_rows(rows: &[&[usize]]) -> Self {
        let n = rows.iter().map(|r| r.len()).sum();
        let mut row_of = vec![0u8; n];
        for (r, row) in rows.iter().enumerate() {
            for &x in row.iter() {
                row_of[x - 1] = r as u8;
            }
        }
        Tabloid { row_of }
    }
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.row_of.len() >= 10 { "," } else { "" };
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep))
            .collect();
        write!(f, "{{{}}}", rows.join("|"))
    }
}

/// Integer combination of tabloids, sorted by tabloid, no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TabloidVector {
    terms: Vec<(Tabloid, i64)>,
}

impl TabloidVector {
    fn from_unsorted(mut terms: Vec<(Tabloid, i64)>) -> Self {
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Tabloid, i64)> = Vec::with_capacity(terms.len());
        for (t, c) in terms {
            match merged.last_mut() {
                Some((last, acc)) if *last == t => *acc += c,
                _ => merged.push((t, c)),
            }
        }
        merged.retain(|(_, c)| *c != 0);
        TabloidVector { terms: merged }
    }

    pub fn terms(&self) -> &[(Tabloid, i64)] {
        &self.terms
    }

    pub fn coeff(&self, t: &Tabloid) -> i64 {
        self.terms
            .binary_search_by(|(x, _)| x.cmp(t))
            .map_or(0, |i| self.terms[i].1)
    }

    /// Standard inner product with tabloids orthonormal.
    pub fn dot(&self, other: &TabloidVector) -> i64 {
        let (mut i, mut j, mut acc) = (0, 0, 0i64);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc += self.terms[i].1 * other.terms[j].1;
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }
}

/// Every permutation of `0..k` as an image vector, with its sign.
fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(rest: &mut Vec<usize>, cur: &mut Vec<usize>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if rest.is_empty() {
            out.push((cur.clone(), sign));
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            // Picking the i-th remaining element costs i transpositions.
            rec(rest, cur, if i % 2 == 0 { sign } else { -sign }, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..k).collect(), &mut Vec::new(), 1, &mut out);
    out
}

/// `e_T = Σ_{σ ∈ C_T} sgn(σ) {σT}` over the column stabilizer of `T`.
pub fn polytabloid(t: &StandardTableau) -> TabloidVector {
    let base = t.tabloid();
    let mut terms = vec![(base, 1i64)];
    for column in t.columns() {
        let perms = signed_permutations(column.len());
        let mut next = Vec::with_capacity(terms.len() * perms.len());
        for (tabloid, sign) in &terms {
            for (perm, s) in &perms {
                let mut moved = tabloid.clone();
                // Entry in row r of this column moves to row perm[r].
                for (r, &x) in column.iter().enumerate() {
                    moved.row_of[x as usize - 1] = perm[r] as u8;
                }
                next.push((moved, sign * s));
            }
        }
        terms = next;
    }
    TabloidVector::from_unsorted(terms)
}

/// Gram matrix of the form `<e_S, e_T>` over standard tableaux of one shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GramMatrix {
    shape: Partition,
    entries: Vec<Vec<i64>>,
}

impl GramMatrix {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Simultaneous row and column permutation: new index `i` is old `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> GramMatrix {
        GramMatrix {
            shape: self.shape.clone(),
            entries: order
                .iter()
                .map(|&i| order.iter().map(|&j| self.entries[i][j]).collect())
                .collect(),
        }
    }

    pub fn reduced_mod(&self, p: u64) -> Vec<Vec<u64>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|&x| reduce(x, p)).collect())
            .collect()
    }

    pub fn rank_mod_p(&self, p: u64) -> Result<usize> {
        crate::check_prime(p)?;
        Ok(rank_mod_p(self.reduced_mod(p), p))
    }

    /// Rank over `Q` by fraction-free (Bareiss) elimination.
    pub fn rank_over_rationals(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let (rows, cols) = (a.len(), a.first().map_or(0, Vec::len));
        let mut rank = 0;
        let mut prev = BigInt::from(1);
        for col in 0..cols {
            let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, pivot);
            for r in rank + 1..rows {
                for c in col + 1..cols {
                    let v = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                    a[r][c] = v;
                }
                a[r][col] = BigInt::zero();
            }
            prev = a[rank][col].clone();
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    /// Text dump: a `"d p"` header, then `d` rows of residues mod `p`.
    pub fn dump_mod_p(&self, p: u64) -> String {
        let mut out = format!("{} {}\n", self.dim(), p);
        for row in self.reduced_mod(p) {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(out, "{}", line.join(" ")).unwrap();
        }
        out
    }
}

fn reduce(x: i64, p: u64) -> u64 {
    (x as i128).rem_euclid(p as i128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime.
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Rank over `F_p` by Gaussian elimination, taking the first nonzero entry
/// in each column as pivot. Entries must already be reduced mod `p`.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inv_mod(rows[rank][col], p);
        for x in &mut rows[rank][col..cols] {
            *x = mul_mod(*x, inv, p);
        }
        let (top, below) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below.iter_mut() {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for c in col..cols {
                row[c] = (row[c] + p - mul_mod(factor, pivot_row[c], p)) % p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Row echelon form over `F_p` built one row at a time.
struct StreamingEchelon {
    p: u64,
    pivots: Vec<(usize, Vec<u64>)>,
}

impl StreamingEchelon {
    fn new(p: u64) -> Self {
        StreamingEchelon { p, pivots: Vec::new() }
    }

    fn insert(&mut self, mut row: Vec<u64>) {
        let p = self.p;
        for (col, pivot_row) in &self.pivots {
            let factor = row[*col];
            if factor != 0 {
                for (x, &y) in row.iter_mut().zip(pivot_row) {
                    *x = (*x + p - mul_mod(factor, y, p)) % p;
                }
            }
        }
        if let Some(col) = row.iter().position(|&x| x != 0) {
            let inv = inv_mod(row[col], p);
            row.iter_mut().for_each(|x| *x = mul_mod(*x, inv, p));
            self.pivots.push((col, row));
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn polytabloids(lambda: &Partition, config: &OracleConfig) -> Result<Vec<TabloidVector>> {
    let tableaux = standard_tableaux(lambda, config)?;
    Ok(config.exec.map(&tableaux, polytabloid))
}

/// Exact Gram matrix over the standard polytabloid basis of `S^λ`.
pub fn gram_matrix(lambda: &Partition, config: &OracleConfig) -> Result<GramMatrix> {
    let basis = polytabloids(lambda, config)?;
    let entries = config
        .exec
        .map_range(basis.len(), |i| basis.iter().map(|e| basis[i].dot(e)).collect());
    Ok(GramMatrix {
        shape: lambda.clone(),
        entries,
    })
}

/// Rank over `F_p` of the Gram matrix of `S^λ`; equals `dim D^λ` when `λ` is
/// `p`-regular and is merely the rank of the form otherwise.
pub fn gram_rank_mod_p(lambda: &Partition, p: u64, config: &OracleConfig) -> Result<usize> {
    crate::check_prime(p)?;
    config.check_size(lambda)?;
    if lambda.is_empty() {
        return Ok(1);
    }
    let basis = polytabloids(lambda, config)?;
    if basis.len() <= config.stream_threshold {
        let entries = config.exec.map_range(basis.len(), |i| {
            basis.iter().map(|e| reduce(basis[i].dot(e), p)).collect()
        });
        return Ok(rank_mod_p(entries, p));
    }
    let mut echelon = StreamingEchelon::new(p);
    for row in &basis {
        let residues = config
            .exec
            .map(&basis, |e| reduce(row.dot(e), p));
        echelon.insert(residues);
        if echelon.rank() == basis.len() {
            break;
        }
    }
    Ok(echelon.rank())
}

/// Both sides of the `(n-1, 1)` cross-check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HookFamilyCheck {
    pub expected: usize,
    pub actual: usize,
}

impl HookFamilyCheck {
    pub fn agrees(&self) -> bool {
        self.expected == self.actual
    }
}

/// Compares the Gram rank of `(n-1, 1)` with the dimension of `K / (K ∩ L)`,
/// where `K` is the augmentation kernel of `F_p^n` and `L` the line of
/// constant vectors. That quotient has dimension `rank(K + L) - 1`.
pub fn irreducible_dim_hook_family_check(n: usize, p: u64, config: &OracleConfig) -> Result<HookFamilyCheck> {
    crate::check_prime(p)?;
    if n < 3 {
        return Err(Error::InvalidArgument(format!("hook family check needs n >= 3, got {n}")));
    }
    let mut spanning: Vec<Vec<u64>> = (0..n - 1)
        .map(|i| {
            let mut v = vec![0u64; n];
            v[i] = 1;
            v[n - 1] = p - 1;
            v
        })
        .collect();
    spanning.push(vec![1 % p; n]);
    let expected = rank_mod_p(spanning, p) - 1;
    let lambda = Partition::new(vec![n - 1, 1])?;
    let actual = gram_rank_mod_p(&lambda, p, config)?;
    Ok(HookFamilyCheck { expected, actual })
}
