//! Finite set-theoretic solutions of the Yang-Baxter equation.
//!
//! A solution is a bijection `σ : X×X → X×X` written componentwise as
//! `σ(x,y) = (σ1(x,y), σ2(x,y))` on `X = {0..n-1}`, satisfying the braid
//! relation. Non-degenerate solutions are biracks; a birack whose fixed-point
//! set is the graph of a bijection `s : X → X` is a biquandle.
//!
//! Everything is 0-based internally; file formats and reports use 1-based
//! labels.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Raw lookup tables, not yet verified. Entries are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaTables {
    pub n: usize,
    pub sigma1: Vec<Vec<usize>>,
    pub sigma2: Vec<Vec<usize>>,
}

/// JSON form of a biquandle file: 1-based entries.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BiquandleFile {
    pub n: usize,
    pub sigma1: Vec<Vec<i64>>,
    pub sigma2: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Axiom {
    PairBijection,
    YangBaxter,
    LeftInvertibility,
    RightInvertibility,
    DiagonalBijection,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::PairBijection => "pair bijection",
            Axiom::YangBaxter => "Yang-Baxter equation",
            Axiom::LeftInvertibility => "left invertibility",
            Axiom::RightInvertibility => "right invertibility",
            Axiom::DiagonalBijection => "diagonal bijection",
        };
        f.write_str(s)
    }
}

/// One witnessing tuple for a violated axiom, 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

/// Where an out-of-range entry sits: which table, row, column, value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MalformedEntry {
    pub table: u8,
    pub row: usize,
    pub col: usize,
    pub value: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Classification {
    NotASolution,
    Solution,
    Birack,
    Biquandle,
}

/// Per-axiom outcome of [`verify`], with one witness per failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub malformed: Vec<MalformedEntry>,
    pub failures: Vec<AxiomFailure>,
    pub classification: Classification,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.malformed.is_empty() && self.failures.is_empty()
    }

    fn fails(&self, axiom: Axiom) -> bool {
        self.failures.iter().any(|f| f.axiom == axiom)
    }

    /// Only the diagonal-bijection axiom fails.
    pub fn fails_diagonal_only(&self) -> bool {
        self.malformed.is_empty()
            && !self.failures.is_empty()
            && self.failures.iter().all(|f| f.axiom == Axiom::DiagonalBijection)
    }
}

/// Check every axiom of `tables`, collecting one witness per violation.
pub fn verify(tables: &SigmaTables) -> VerificationReport {
    let n = tables.n;
    let mut report = VerificationReport {
        malformed: Vec::new(),
        failures: Vec::new(),
        classification: Classification::NotASolution,
    };

    for (ti, t) in [&tables.sigma1, &tables.sigma2].iter().enumerate() {
        if t.len() != n || t.iter().any(|row| row.len() != n) {
            report.malformed.push(MalformedEntry { table: ti as u8 + 1, row: t.len(), col: 0, value: 0 });
            return report;
        }
        for x in 0..n {
            for y in 0..n {
                if t[x][y] >= n {
                    report.malformed.push(MalformedEntry {
                        table: ti as u8 + 1,
                        row: x,
                        col: y,
                        value: t[x][y],
                    });
                }
            }
        }
    }
    if !report.malformed.is_empty() {
        return report;
    }

    let s1 = |x: usize, y: usize| tables.sigma1[x][y];
    let s2 = |x: usize, y: usize| tables.sigma2[x][y];

    // pair bijection
    let mut seen = vec![false; n * n];
    'pairs: for x in 0..n {
        for y in 0..n {
            let p = s1(x, y) * n + s2(x, y);
            if seen[p] {
                report.failures.push(AxiomFailure {
                    axiom: Axiom::PairBijection,
                    witness: vec![x, y, s1(x, y), s2(x, y)],
                });
                break 'pairs;
            }
            seen[p] = true;
        }
    }

    // braid relation at every triple; record the first witness only
    'yb: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                // (Id×σ)(σ×Id)(Id×σ)
                let (b1, c1) = (s1(y, z), s2(y, z));
                let (a2, b2) = (s1(x, b1), s2(x, b1));
                let (b3, c3) = (s1(b2, c1), s2(b2, c1));
                let lhs = (a2, b3, c3);
                // (σ×Id)(Id×σ)(σ×Id)
                let (a4, b4) = (s1(x, y), s2(x, y));
                let (b5, c5) = (s1(b4, z), s2(b4, z));
                let (a6, b6) = (s1(a4, b5), s2(a4, b5));
                let rhs = (a6, b6, c5);
                if lhs != rhs {
                    report.failures.push(AxiomFailure {
                        axiom: Axiom::YangBaxter,
                        witness: vec![x, y, z],
                    });
                    break 'yb;
                }
            }
        }
    }

    'left: for x in 0..n {
        let mut hit = vec![usize::MAX; n];
        for y in 0..n {
            let z = s1(x, y);
            if hit[z] != usize::MAX {
                report.failures.push(AxiomFailure {
                    axiom: Axiom::LeftInvertibility,
                    witness: vec![x, hit[z], y],
                });
                break 'left;
            }
            hit[z] = y;
        }
    }

    'right: for y in 0..n {
        let mut hit = vec![usize::MAX; n];
        for x in 0..n {
            let t = s2(x, y);
            if hit[t] != usize::MAX {
                report.failures.push(AxiomFailure {
                    axiom: Axiom::RightInvertibility,
                    witness: vec![hit[t], x, y],
                });
                break 'right;
            }
            hit[t] = x;
        }
    }

    // fixed points must be the graph of a bijection s : X → X
    {
        let mut s_of = vec![Vec::new(); n];
        let mut used = vec![false; n];
        let mut ok = true;
        for x in 0..n {
            for y in 0..n {
                if s1(x, y) == x && s2(x, y) == y {
                    s_of[x].push(y);
                }
            }
        }
        for x in 0..n {
            if s_of[x].len() != 1 {
                report.failures.push(AxiomFailure {
                    axiom: Axiom::DiagonalBijection,
                    witness: vec![x],
                });
                ok = false;
                break;
            }
        }
        if ok {
            for x in 0..n {
                let y = s_of[x][0];
                if used[y] {
                    report.failures.push(AxiomFailure {
                        axiom: Axiom::DiagonalBijection,
                        witness: vec![x, y],
                    });
                    break;
                }
                used[y] = true;
            }
        }
    }

    report.classification = if report.fails(Axiom::PairBijection) || report.fails(Axiom::YangBaxter) {
        Classification::NotASolution
    } else if report.fails(Axiom::LeftInvertibility) || report.fails(Axiom::RightInvertibility) {
        Classification::Solution
    } else if report.fails(Axiom::DiagonalBijection) {
        Classification::Birack
    } else {
        Classification::Biquandle
    };
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BiquandleError {
    Malformed(Vec<MalformedEntry>),
    AxiomFailed(VerificationReport),
    NotAQuandle { axiom: String, witness: Vec<usize> },
    NotAGroup { axiom: String, witness: Vec<usize> },
    NotABijection,
    NotAUnit { value: i64, modulus: usize },
    OrderMismatch { left: usize, right: usize },
    TooLarge { n: usize, max: usize },
    BadName(String),
}

impl fmt::Display for BiquandleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BiquandleError::Malformed(m) => write!(f, "malformed table: {} entries out of range", m.len()),
            BiquandleError::AxiomFailed(r) => {
                let names: Vec<String> = r.failures.iter().map(|x| x.axiom.to_string()).collect();
                write!(f, "axiom failure: {}", names.join(", "))
            }
            BiquandleError::NotAQuandle { axiom, witness } => {
                write!(f, "not a quandle ({axiom} at {witness:?})")
            }
            BiquandleError::NotAGroup { axiom, witness } => {
                write!(f, "not a group ({axiom} at {witness:?})")
            }
            BiquandleError::NotABijection => write!(f, "map is not a bijection"),
            BiquandleError::NotAUnit { value, modulus } => {
                write!(f, "{value} is not a unit mod {modulus}")
            }
            BiquandleError::OrderMismatch { left, right } => {
                write!(f, "order mismatch: {left} vs {right}")
            }
            BiquandleError::TooLarge { n, max } => {
                write!(f, "exhaustive enumeration supports n <= {max}, got {n}")
            }
            BiquandleError::BadName(s) => write!(f, "unknown catalog name: {s}"),
        }
    }
}

impl std::error::Error for BiquandleError {}

/// A verified biquandle. All fields immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteBiquandle {
    n: usize,
    sigma1: Vec<Vec<usize>>,
    sigma2: Vec<Vec<usize>>,
    /// left_inv[x][z] = the unique y with sigma1(x,y) = z
    left_inv: Vec<Vec<usize>>,
    /// right_inv[y][t] = the unique x with sigma2(x,y) = t
    right_inv: Vec<Vec<usize>>,
    /// pair_inv[z*n+t] = the unique (x,y) with sigma(x,y) = (z,t)
    pair_inv: Vec<(usize, usize)>,
    diag: Vec<usize>,
    name: Option<String>,
}

impl FiniteBiquandle {
    pub fn from_tables(tables: SigmaTables, name: Option<String>) -> Result<FiniteBiquandle, BiquandleError> {
        let report = verify(&tables);
        if !report.malformed.is_empty() {
            return Err(BiquandleError::Malformed(report.malformed));
        }
        if report.classification != Classification::Biquandle {
            return Err(BiquandleError::AxiomFailed(report));
        }
        let n = tables.n;
        let mut left_inv = vec![vec![0; n]; n];
        let mut right_inv = vec![vec![0; n]; n];
        let mut pair_inv = vec![(0, 0); n * n];
        let mut diag = vec![0; n];
        for x in 0..n {
            for y in 0..n {
                let (z, t) = (tables.sigma1[x][y], tables.sigma2[x][y]);
                left_inv[x][z] = y;
                right_inv[y][t] = x;
                pair_inv[z * n + t] = (x, y);
                if z == x && t == y {
                    diag[x] = y;
                }
            }
        }
        Ok(FiniteBiquandle {
            n,
            sigma1: tables.sigma1,
            sigma2: tables.sigma2,
            left_inv,
            right_inv,
            pair_inv,
            diag,
            name,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> FiniteBiquandle {
        self.name = Some(name.into());
        self
    }

    pub fn sigma(&self, x: usize, y: usize) -> (usize, usize) {
        (self.sigma1[x][y], self.sigma2[x][y])
    }

    pub fn sigma1(&self, x: usize, y: usize) -> usize {
        self.sigma1[x][y]
    }

    pub fn sigma2(&self, x: usize, y: usize) -> usize {
        self.sigma2[x][y]
    }

    /// Inverse map: the unique `(x,y)` with `σ(x,y) = (z,t)`.
    pub fn sigma_inv(&self, z: usize, t: usize) -> (usize, usize) {
        self.pair_inv[z * self.n + t]
    }

    /// The unique `y` with `σ1(x,y) = z`.
    pub fn left_invert(&self, x: usize, z: usize) -> usize {
        self.left_inv[x][z]
    }

    /// The unique `x` with `σ2(x,y) = t`.
    pub fn right_invert(&self, y: usize, t: usize) -> usize {
        self.right_inv[y][t]
    }

    /// The diagonal bijection `s`, with `σ(x, s(x)) = (x, s(x))`.
    pub fn diagonal_map(&self) -> &[usize] {
        &self.diag
    }

    pub fn tables(&self) -> SigmaTables {
        SigmaTables {
            n: self.n,
            sigma1: self.sigma1.clone(),
            sigma2: self.sigma2.clone(),
        }
    }

    /// The inverse solution: tables of `σ^{-1}`.
    pub fn inverse_solution(&self) -> FiniteBiquandle {
        let n = self.n;
        let mut s1 = vec![vec![0; n]; n];
        let mut s2 = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                let (z, t) = self.sigma(x, y);
                s1[z][t] = x;
                s2[z][t] = y;
            }
        }
        let name = self.name.as_ref().map(|s| format!("{s}*"));
        FiniteBiquandle::from_tables(SigmaTables { n, sigma1: s1, sigma2: s2 }, name)
            .expect("inverse of a biquandle is a biquandle")
    }

    /// Order of `σ` as a permutation of `X×X`.
    pub fn sigma_order(&self) -> usize {
        let n = self.n;
        let mut seen = vec![false; n * n];
        let mut order: usize = 1;
        for start in 0..n * n {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut p = start;
            loop {
                seen[p] = true;
                len += 1;
                let (x, y) = (p / n, p % n);
                let (z, t) = self.sigma(x, y);
                p = z * n + t;
                if p == start {
                    break;
                }
            }
            order = lcm(order, len);
        }
        order
    }

    /// Number of diagonal pairs `(x,x)` fixed by `σ`.
    pub fn diagonal_fixed_points(&self) -> usize {
        (0..self.n).filter(|&x| self.sigma(x, x) == (x, x)).count()
    }

    /// Sorted multiset of `σ`-orbit sizes on pairs; isomorphism invariant.
    fn orbit_profile(&self) -> Vec<usize> {
        let n = self.n;
        let mut seen = vec![false; n * n];
        let mut sizes = Vec::new();
        for start in 0..n * n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            loop {
                seen[p] = true;
                len += 1;
                let (x, y) = (p / n, p % n);
                let (z, t) = self.sigma(x, y);
                p = z * n + t;
                if p == start {
                    break;
                }
            }
            sizes.push(len);
        }
        sizes.sort_unstable();
        sizes
    }

    /// Search for a bijection `φ` with `(φ×φ)∘σ = τ∘(φ×φ)`; exhaustive over
    /// all `n!` bijections, pruned by the σ-orbit profile.
    pub fn is_isomorphic(&self, other: &FiniteBiquandle) -> Result<Option<Vec<usize>>, BiquandleError> {
        if self.n != other.n {
            return Err(BiquandleError::OrderMismatch { left: self.n, right: other.n });
        }
        if self.orbit_profile() != other.orbit_profile() {
            return Ok(None);
        }
        let n = self.n;
        let mut phi: Vec<usize> = (0..n).collect();
        loop {
            if self.morphism_check(other, &phi) {
                return Ok(Some(phi));
            }
            if !next_permutation(&mut phi) {
                return Ok(None);
            }
        }
    }

    /// Is `phi` a solution morphism from `self` to `other`?
    pub fn morphism_check(&self, other: &FiniteBiquandle, phi: &[usize]) -> bool {
        self.morphism_witness(other, phi).is_none()
    }

    /// First pair where `(φ×φ)σ(x,y) ≠ τ(φx,φy)`, if any.
    pub fn morphism_witness(&self, other: &FiniteBiquandle, phi: &[usize]) -> Option<(usize, usize)> {
        for x in 0..self.n {
            for y in 0..self.n {
                let (z, t) = self.sigma(x, y);
                if (phi[z], phi[t]) != other.sigma(phi[x], phi[y]) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// Relabel the elements by a bijection `phi` (conjugate table).
    pub fn relabel(&self, phi: &[usize]) -> FiniteBiquandle {
        let n = self.n;
        let mut s1 = vec![vec![0; n]; n];
        let mut s2 = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                let (z, t) = self.sigma(x, y);
                s1[phi[x]][phi[y]] = phi[z];
                s2[phi[x]][phi[y]] = phi[t];
            }
        }
        FiniteBiquandle::from_tables(SigmaTables { n, sigma1: s1, sigma2: s2 }, self.name.clone())
            .expect("relabelling preserves the axioms")
    }

    /// Lexicographically least table among all relabelings; canonical
    /// representative of the isomorphism class.
    pub fn canonical_form(&self) -> FiniteBiquandle {
        let n = self.n;
        let mut phi: Vec<usize> = (0..n).collect();
        let mut best: Option<(Vec<Vec<usize>>, Vec<Vec<usize>>)> = None;
        loop {
            let cand = self.relabel(&phi);
            let key = (cand.sigma1.clone(), cand.sigma2.clone());
            if best.as_ref().map_or(true, |b| key < *b) {
                best = Some(key);
            }
            if !next_permutation(&mut phi) {
                break;
            }
        }
        let (sigma1, sigma2) = best.unwrap();
        FiniteBiquandle::from_tables(SigmaTables { n, sigma1, sigma2 }, self.name.clone()).unwrap()
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

// ---------------------------------------------------------------------------
// constructions
// ---------------------------------------------------------------------------

fn modp(v: i64, m: usize) -> usize {
    (v.rem_euclid(m as i64)) as usize
}

impl FiniteBiquandle {
    /// The flip `σ(x,y) = (y,x)`.
    pub fn flip(n: usize) -> FiniteBiquandle {
        let sigma1 = (0..n).map(|_| (0..n).collect()).collect();
        let sigma2 = (0..n).map(|x| vec![x; n]).collect();
        FiniteBiquandle::from_tables(SigmaTables { n, sigma1, sigma2 }, Some(format!("flip{n}"))).unwrap()
    }

    /// `σ(x,y) = (μ(y), μ^{-1}(x))` for a bijection `μ`; always involutive.
    pub fn from_bijection(mu: &[usize]) -> Result<FiniteBiquandle, BiquandleError> {
        let n = mu.len();
        let mut inv = vec![usize::MAX; n];
        for (x, &mx) in mu.iter().enumerate() {
            if mx >= n || inv[mx] != usize::MAX {
                return Err(BiquandleError::NotABijection);
            }
            inv[mx] = x;
        }
        let sigma1 = (0..n).map(|_| mu.to_vec()).collect();
        let sigma2 = (0..n).map(|x| vec![inv[x]; n]).collect();
        FiniteBiquandle::from_tables(SigmaTables { n, sigma1, sigma2 }, None)
    }

    /// The antiflip on two elements: `σ(x,y) = (y+1, x-1)` mod 2.
    pub fn antiflip() -> FiniteBiquandle {
        FiniteBiquandle::from_bijection(&[1, 0]).unwrap().with_name("antiflip")
    }

    /// Direct solution of a quandle: `σ(x,y) = (y, x◁y)`; or the inverse
    /// solution `σ(x,y) = (y◁⁻¹x, x)`.
    pub fn from_quandle(op: &[Vec<usize>], inverse: bool) -> Result<FiniteBiquandle, BiquandleError> {
        let n = op.len();
        // validate: entries in range, right translations bijective,
        // self-distributive, idempotent
        for x in 0..n {
            if op[x].len() != n {
                return Err(BiquandleError::NotAQuandle { axiom: "shape".into(), witness: vec![x] });
            }
            for y in 0..n {
                if op[x][y] >= n {
                    return Err(BiquandleError::NotAQuandle {
                        axiom: "entry out of range".into(),
                        witness: vec![x, y],
                    });
                }
            }
        }
        for y in 0..n {
            let mut hit = vec![false; n];
            for x in 0..n {
                if hit[op[x][y]] {
                    return Err(BiquandleError::NotAQuandle {
                        axiom: "right translation not bijective".into(),
                        witness: vec![y],
                    });
                }
                hit[op[x][y]] = true;
            }
        }
        for x in 0..n {
            if op[x][x] != x {
                return Err(BiquandleError::NotAQuandle { axiom: "idempotence".into(), witness: vec![x] });
            }
            for y in 0..n {
                for z in 0..n {
                    if op[op[x][y]][z] != op[op[x][z]][op[y][z]] {
                        return Err(BiquandleError::NotAQuandle {
                            axiom: "self-distributivity".into(),
                            witness: vec![x, y, z],
                        });
                    }
                }
            }
        }
        if !inverse {
            let sigma1 = (0..n).map(|_| (0..n).collect()).collect();
            let sigma2 = op.to_vec();
            FiniteBiquandle::from_tables(SigmaTables { n, sigma1, sigma2 }, None)
        } else {
            // y ◁⁻¹ x: the unique w with w ◁ x = y
            let mut inv_op = vec![vec![0; n]; n];
            for w in 0..n {
                for x in 0..n {
                    inv_op[op[w][x]][x] = w;
                }
            }
            let mut sigma1 = vec![vec![0; n]; n];
            let mut sigma2 = vec![vec![0; n]; n];
            for x in 0..n {
                for y in 0..n {
                    sigma1[x][y] = inv_op[y][x];
                    sigma2[x][y] = x;
                }
            }
            FiniteBiquandle::from_tables(SigmaTables { n, sigma1, sigma2 }, None)
        }
    }

    /// Dihedral quandle table on `Z_n`: `x◁y = 2y - x`.
    pub fn dihedral_quandle(n: usize) -> Vec<Vec<usize>> {
        (0..n)
            .map(|x| (0..n).map(|y| modp(2 * y as i64 - x as i64, n)).collect())
            .collect()
    }

    /// Conjugation quandle on the six 4-cycles of the symmetric group S4,
    /// `x◁y = y⁻¹xy` with left-to-right composition, elements ordered by
    /// their image vectors.
    pub fn four_cycles_quandle() -> Vec<Vec<usize>> {
        let elems: Vec<[usize; 4]> = vec![
            [1, 2, 3, 0],
            [1, 3, 0, 2],
            [2, 0, 3, 1],
            [2, 3, 1, 0],
            [3, 0, 1, 2],
            [3, 2, 0, 1],
        ];
        let invert = |p: &[usize; 4]| {
            let mut q = [0; 4];
            for a in 0..4 {
                q[p[a]] = a;
            }
            q
        };
        let index = |p: &[usize; 4]| elems.iter().position(|e| e == p).expect("closed under conjugation");
        let n = elems.len();
        let mut op = vec![vec![0; n]; n];
        for (xi, x) in elems.iter().enumerate() {
            for (yi, y) in elems.iter().enumerate() {
                let yinv = invert(y);
                let mut z = [0; 4];
                for a in 0..4 {
                    z[a] = y[x[yinv[a]]];
                }
                op[xi][yi] = index(&z);
            }
        }
        op
    }

    /// Wada's solution of a group given by its multiplication table:
    /// `σ(x,y) = (x y^{-1} x^{-1}, x y^2)`.
    pub fn wada(mult: &[Vec<usize>]) -> Result<FiniteBiquandle, BiquandleError> {
        let n = mult.len();
        for x in 0..n {
            if mult[x].len() != n {
                return Err(BiquandleError::NotAGroup { axiom: "shape".into(), witness: vec![x] });
            }
            for y in 0..n {
                if mult[x][y] >= n {
                    return Err(BiquandleError::NotAGroup {
                        axiom: "entry out of range".into(),
                        witness: vec![x, y],
                    });
                }
            }
        }
        // identity
        let mut id = None;
        'find_id: for e in 0..n {
            for x in 0..n {
                if mult[e][x] != x || mult[x][e] != x {
                    continue 'find_id;
                }
            }
            id = Some(e);
            break;
        }
        let id = id.ok_or(BiquandleError::NotAGroup { axiom: "identity".into(), witness: vec![] })?;
        // inverses
        let mut inv = vec![usize::MAX; n];
        for x in 0..n {
            for y in 0..n {
                if mult[x][y] == id && mult[y][x] == id {
                    inv[x] = y;
                }
            }
            if inv[x] == usize::MAX {
                return Err(BiquandleError::NotAGroup { axiom: "inverses".into(), witness: vec![x] });
            }
        }
        // associativity
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if mult[mult[x][y]][z] != mult[x][mult[y][z]] {
                        return Err(BiquandleError::NotAGroup {
                            axiom: "associativity".into(),
                            witness: vec![x, y, z],
                        });
                    }
                }
            }
        }
        let m = |a: usize, b: usize| mult[a][b];
        let mut sigma1 = vec![vec![0; n]; n];
        let mut sigma2 = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                sigma1[x][y] = m(m(x, inv[y]), inv[x]);
                sigma2[x][y] = m(x, m(y, y));
            }
        }
        FiniteBiquandle::from_tables(SigmaTables { n, sigma1, sigma2 }, None)
    }

    /// Multiplication table of the cyclic group `Z_m`.
    pub fn cyclic_group(m: usize) -> Vec<Vec<usize>> {
        (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect()
    }

    /// Wada's solution for `Z_m`: `σ(x,y) = (-y, x+2y)`.
    pub fn wada_cyclic(m: usize) -> FiniteBiquandle {
        FiniteBiquandle::wada(&FiniteBiquandle::cyclic_group(m))
            .unwrap()
            .with_name(format!("wada(Z{m})"))
    }

    /// Alexander switch on `Z_m`: `σ(x,y) = (s·y, t·x + (1-st)·y)`.
    pub fn alexander(m: usize, s: i64, t: i64) -> Result<FiniteBiquandle, BiquandleError> {
        let unit = |v: i64| -> Result<(), BiquandleError> {
            let g = gcd(modp(v, m).max(1), m);
            if modp(v, m) != 0 && g == 1 {
                Ok(())
            } else {
                Err(BiquandleError::NotAUnit { value: v, modulus: m })
            }
        };
        if m == 0 {
            return Err(BiquandleError::NotAUnit { value: s, modulus: m });
        }
        if m > 1 {
            unit(s)?;
            unit(t)?;
        }
        let mut sigma1 = vec![vec![0; m]; m];
        let mut sigma2 = vec![vec![0; m]; m];
        for x in 0..m {
            for y in 0..m {
                sigma1[x][y] = modp(s * y as i64, m);
                sigma2[x][y] = modp(t * x as i64 + (1 - s * t) * y as i64, m);
            }
        }
        FiniteBiquandle::from_tables(SigmaTables { n: m, sigma1, sigma2 }, None)
            .map(|b| b.with_name(format!("alex({m},{s},{t})")))
    }

    /// Exhaustive enumeration of biquandles of order `n` up to isomorphism,
    /// built cell by cell with axiom pruning. `n ≤ 3`.
    pub fn enumerate(n: usize) -> Result<Vec<FiniteBiquandle>, BiquandleError> {
        const MAX: usize = 3;
        if n > MAX {
            return Err(BiquandleError::TooLarge { n, max: MAX });
        }
        if n == 0 {
            return Ok(Vec::new());
        }
        let mut found: Vec<FiniteBiquandle> = Vec::new();
        let mut canon_seen: std::collections::BTreeSet<(Vec<Vec<usize>>, Vec<Vec<usize>>)> =
            std::collections::BTreeSet::new();

        let mut s1 = vec![vec![usize::MAX; n]; n];
        let mut s2 = vec![vec![usize::MAX; n]; n];
        let mut pair_used = vec![false; n * n];
        let mut row_used = vec![vec![false; n]; n]; // sigma1 row x
        let mut col_used = vec![vec![false; n]; n]; // sigma2 column y
        let mut fp_per_x = vec![0usize; n];
        let mut fp_second = vec![false; n];

        struct Ctx<'a> {
            n: usize,
            s1: &'a mut Vec<Vec<usize>>,
            s2: &'a mut Vec<Vec<usize>>,
            pair_used: &'a mut Vec<bool>,
            row_used: &'a mut Vec<Vec<bool>>,
            col_used: &'a mut Vec<Vec<bool>>,
            fp_per_x: &'a mut Vec<usize>,
            fp_second: &'a mut Vec<bool>,
            found: &'a mut Vec<FiniteBiquandle>,
            canon_seen: &'a mut std::collections::BTreeSet<(Vec<Vec<usize>>, Vec<Vec<usize>>)>,
        }

        fn rec(ctx: &mut Ctx, cell: usize) {
            let n = ctx.n;
            if cell == n * n {
                if ctx.fp_per_x.iter().any(|&c| c != 1) {
                    return;
                }
                let tables = SigmaTables { n, sigma1: ctx.s1.clone(), sigma2: ctx.s2.clone() };
                let report = verify(&tables);
                if report.classification != Classification::Biquandle {
                    return;
                }
                let bq = FiniteBiquandle::from_tables(tables, None).unwrap();
                let canon = bq.canonical_form();
                let key = (canon.sigma1.clone(), canon.sigma2.clone());
                if ctx.canon_seen.insert(key) {
                    ctx.found.push(canon);
                }
                return;
            }
            let (x, y) = (cell / n, cell % n);
            for z in 0..n {
                if ctx.row_used[x][z] {
                    continue;
                }
                for t in 0..n {
                    if ctx.col_used[y][t] || ctx.pair_used[z * n + t] {
                        continue;
                    }
                    let is_fp = z == x && t == y;
                    if is_fp && (ctx.fp_per_x[x] == 1 || ctx.fp_second[y]) {
                        continue;
                    }
                    ctx.s1[x][y] = z;
                    ctx.s2[x][y] = t;
                    ctx.row_used[x][z] = true;
                    ctx.col_used[y][t] = true;
                    ctx.pair_used[z * n + t] = true;
                    if is_fp {
                        ctx.fp_per_x[x] += 1;
                        ctx.fp_second[y] = true;
                    }
                    rec(ctx, cell + 1);
                    if is_fp {
                        ctx.fp_per_x[x] -= 1;
                        ctx.fp_second[y] = false;
                    }
                    ctx.pair_used[z * n + t] = false;
                    ctx.col_used[y][t] = false;
                    ctx.row_used[x][z] = false;
                    ctx.s1[x][y] = usize::MAX;
                    ctx.s2[x][y] = usize::MAX;
                }
            }
        }

        let mut ctx = Ctx {
            n,
            s1: &mut s1,
            s2: &mut s2,
            pair_used: &mut pair_used,
            row_used: &mut row_used,
            col_used: &mut col_used,
            fp_per_x: &mut fp_per_x,
            fp_second: &mut fp_second,
            found: &mut found,
            canon_seen: &mut canon_seen,
        };
        rec(&mut ctx, 0);
        found.sort_by(|a, b| (&a.sigma1, &a.sigma2).cmp(&(&b.sigma1, &b.sigma2)));
        Ok(found)
    }
}

// ---------------------------------------------------------------------------
// file format
// ---------------------------------------------------------------------------

impl FiniteBiquandle {
    pub fn to_file(&self) -> BiquandleFile {
        BiquandleFile {
            n: self.n,
            sigma1: self.sigma1.iter().map(|r| r.iter().map(|&v| v as i64 + 1).collect()).collect(),
            sigma2: self.sigma2.iter().map(|r| r.iter().map(|&v| v as i64 + 1).collect()).collect(),
            name: self.name.clone(),
            provenance: None,
        }
    }

    pub fn from_file(file: &BiquandleFile) -> Result<FiniteBiquandle, BiquandleError> {
        let conv = |t: &Vec<Vec<i64>>| -> Vec<Vec<usize>> {
            t.iter()
                .map(|r| r.iter().map(|&v| if v >= 1 { (v - 1) as usize } else { usize::MAX }).collect())
                .collect()
        };
        let tables = SigmaTables { n: file.n, sigma1: conv(&file.sigma1), sigma2: conv(&file.sigma2) };
        FiniteBiquandle::from_tables(tables, file.name.clone())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).unwrap()
    }

    pub fn from_json(text: &str) -> Result<FiniteBiquandle, Box<dyn std::error::Error>> {
        let file: BiquandleFile = serde_json::from_str(text)?;
        Ok(FiniteBiquandle::from_file(&file)?)
    }
}
