//! Concrete 2-cocycles with values in a finite group, the factorization
//! check through a computed presentation, and induced maps of solution
//! morphisms.

use crate::biquandle::FiniteBiquandle;
use crate::presentation::Presentation;
use crate::word::Word;
use std::fmt;

/// A finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    pub mult: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CocycleError {
    NotAGroup(String),
    IncompleteTable,
    ValueOutOfRange { x: usize, y: usize, value: usize },
    NotACocycle { equation: u8, triple: (usize, usize, usize) },
    NotConstantOnClass { pair_a: (usize, usize), pair_b: (usize, usize) },
    TrivialClassNotKilled { pair: (usize, usize) },
}

impl fmt::Display for CocycleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CocycleError::NotAGroup(s) => write!(f, "not a group: {s}"),
            CocycleError::IncompleteTable => write!(f, "value table incomplete"),
            CocycleError::ValueOutOfRange { x, y, value } => {
                write!(f, "value {value} at ({x},{y}) outside the group")
            }
            CocycleError::NotACocycle { equation, triple } => {
                write!(f, "cocycle equation {equation} fails at {triple:?}")
            }
            CocycleError::NotConstantOnClass { pair_a, pair_b } => {
                write!(f, "values differ on identified pairs {pair_a:?} and {pair_b:?}")
            }
            CocycleError::TrivialClassNotKilled { pair } => {
                write!(f, "trivial pair {pair:?} has a non-identity value")
            }
        }
    }
}

impl std::error::Error for CocycleError {}

impl FiniteGroup {
    pub fn from_table(mult: Vec<Vec<usize>>) -> Result<FiniteGroup, CocycleError> {
        let n = mult.len();
        for row in &mult {
            if row.len() != n || row.iter().any(|&v| v >= n) {
                return Err(CocycleError::NotAGroup("table shape or range".into()));
            }
        }
        let mut identity = None;
        'id: for e in 0..n {
            for x in 0..n {
                if mult[e][x] != x || mult[x][e] != x {
                    continue 'id;
                }
            }
            identity = Some(e);
            break;
        }
        let identity = identity.ok_or(CocycleError::NotAGroup("no identity".into()))?;
        let mut inverse = vec![usize::MAX; n];
        for x in 0..n {
            for y in 0..n {
                if mult[x][y] == identity && mult[y][x] == identity {
                    inverse[x] = y;
                }
            }
            if inverse[x] == usize::MAX {
                return Err(CocycleError::NotAGroup(format!("no inverse for {x}")));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if mult[mult[x][y]][z] != mult[x][mult[y][z]] {
                        return Err(CocycleError::NotAGroup(format!(
                            "associativity fails at ({x},{y},{z})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { mult, identity, inverse })
    }

    pub fn cyclic(k: usize) -> FiniteGroup {
        let mult = (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect();
        FiniteGroup::from_table(mult).unwrap()
    }

    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    /// Evaluate a word under an assignment generator → element.
    pub fn eval_word(&self, w: &Word, assign: impl Fn(usize) -> usize) -> usize {
        let mut acc = self.identity;
        for &(g, e) in w.letters() {
            let v = assign(g);
            let v = if e > 0 { v } else { self.inverse[v] };
            acc = self.mul(acc, v);
        }
        acc
    }

    /// Conjugacy class of `g` as a sorted element list.
    pub fn conjugacy_class(&self, g: usize) -> Vec<usize> {
        let mut class: Vec<usize> =
            (0..self.order()).map(|h| self.mul(self.mul(h, g), self.inverse[h])).collect();
        class.sort_unstable();
        class.dedup();
        class
    }

    /// Least element of the conjugacy class, a canonical representative.
    pub fn conjugacy_representative(&self, g: usize) -> usize {
        self.conjugacy_class(g)[0]
    }
}

/// A function `X×X → G` given by a value table.
#[derive(Debug, Clone)]
pub struct ConcreteCocycle {
    pub group: FiniteGroup,
    pub values: Vec<Vec<usize>>,
}

impl ConcreteCocycle {
    pub fn value(&self, x: usize, y: usize) -> usize {
        self.values[x][y]
    }
}

/// Check both cocycle equations at every triple and the type-I condition.
/// `Ok(None)` means the table is a type-I cocycle; `Ok(Some(err))` carries
/// the first witness.
pub fn verify_cocycle(
    bq: &FiniteBiquandle,
    f: &ConcreteCocycle,
) -> Result<Option<CocycleError>, CocycleError> {
    let n = bq.order();
    if f.values.len() != n || f.values.iter().any(|r| r.len() != n) {
        return Err(CocycleError::IncompleteTable);
    }
    let go = f.group.order();
    for x in 0..n {
        for y in 0..n {
            if f.values[x][y] >= go {
                return Err(CocycleError::ValueOutOfRange { x, y, value: f.values[x][y] });
            }
        }
    }
    let g = &f.group;
    let s = bq.diagonal_map();
    for x in 0..n {
        if f.value(x, s[x]) != g.identity {
            return Ok(Some(CocycleError::NotACocycle { equation: 3, triple: (x, s[x], 0) }));
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let u = bq.sigma1(y, z);
                let lhs = g.mul(f.value(x, y), f.value(bq.sigma2(x, y), z));
                let rhs = g.mul(f.value(x, u), f.value(bq.sigma2(x, u), bq.sigma2(y, z)));
                if lhs != rhs {
                    return Ok(Some(CocycleError::NotACocycle { equation: 1, triple: (x, y, z) }));
                }
                let a = f.value(bq.sigma1(x, y), bq.sigma1(bq.sigma2(x, y), z));
                if a != f.value(y, z) {
                    return Ok(Some(CocycleError::NotACocycle { equation: 2, triple: (x, y, z) }));
                }
            }
        }
    }
    Ok(None)
}

/// The induced assignment generator-class → G for a verified type-I cocycle,
/// or the witness that `f` does not factor (which for the full universal
/// presentation would indicate an implementation bug).
pub fn factor_through(
    p: &Presentation,
    f: &ConcreteCocycle,
) -> Result<Vec<usize>, CocycleError> {
    // trivial pairs must take the identity value
    for &(x, y) in &p.trivial {
        if f.value(x, y) != f.group.identity {
            return Err(CocycleError::TrivialClassNotKilled { pair: (x, y) });
        }
    }
    // constant on every class
    let mut assign = vec![f.group.identity; p.generators.iter().map(|g| g.label + 1).max().unwrap_or(0)];
    for gc in &p.generators {
        let first = gc.members[0];
        for &m in &gc.members[1..] {
            if f.value(m.0, m.1) != f.value(first.0, first.1) {
                return Err(CocycleError::NotConstantOnClass { pair_a: first, pair_b: m });
            }
        }
        assign[gc.label] = f.value(first.0, first.1);
    }
    // relations must hold in G
    for r in &p.relations {
        let lv = f.group.eval_word(&r.left, |g| assign[g]);
        let rv = f.group.eval_word(&r.right, |g| assign[g]);
        if lv != rv {
            return Err(CocycleError::NotACocycle { equation: 1, triple: (lv, rv, 0) });
        }
    }
    Ok(assign)
}

/// Outcome of checking a map `X → Y` against two solutions.
#[derive(Debug, Clone)]
pub enum InducedMorphism {
    /// class label of the source ↦ word in the target presentation
    ClassMap(Vec<Word>),
    NotAMorphism { witness: (usize, usize) },
}

/// Verify `(φ×φ)σ = τ(φ×φ)` and build the induced map on generator classes,
/// checking that it sends relations to relations (up to the target's
/// abelianized relation lattice when word-level membership fails).
pub fn induced_morphism(
    phi: &[usize],
    source: &FiniteBiquandle,
    target: &FiniteBiquandle,
    p_source: &Presentation,
    p_target: &Presentation,
) -> InducedMorphism {
    if let Some(w) = source.morphism_witness(target, phi) {
        return InducedMorphism::NotAMorphism { witness: w };
    }
    let mut class_map: Vec<Word> = vec![Word::identity(); p_source.generators.len()];
    for gc in &p_source.generators {
        let (x, y) = gc.members[0];
        class_map[gc.label] = p_target.word_for_pair(phi[x], phi[y]).clone();
        // well-defined: all members land in the same target word
        for &(a, b) in &gc.members {
            debug_assert_eq!(
                p_target.word_for_pair(phi[a], phi[b]),
                &class_map[gc.label],
                "induced class map is not well defined"
            );
        }
    }
    InducedMorphism::ClassMap(class_map)
}

/// Exhaustive backtracking enumeration of type-I cocycles into `group`,
/// independent of any presentation: values are assigned pair by pair with
/// the cocycle equations checked as soon as their pairs are decided.
pub fn enumerate_type_i_cocycles(
    bq: &FiniteBiquandle,
    group: &FiniteGroup,
    limit: Option<usize>,
) -> Vec<ConcreteCocycle> {
    let n = bq.order();
    let s = bq.diagonal_map();
    let go = group.order();
    let idx = |x: usize, y: usize| x * n + y;

    // equation instances, each listing the pairs it reads
    struct Instance {
        pairs: Vec<usize>,
        check: Box<dyn Fn(&[usize], &FiniteGroup) -> bool>,
    }
    let mut instances: Vec<Instance> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (p1, p2) = ((x, y), (bq.sigma2(x, y), z));
                let u = bq.sigma1(y, z);
                let (p3, p4) = ((x, u), (bq.sigma2(x, u), bq.sigma2(y, z)));
                let (q1, q2) = ((bq.sigma1(x, y), bq.sigma1(bq.sigma2(x, y), z)), (y, z));
                let (i1, i2, i3, i4) = (idx(p1.0, p1.1), idx(p2.0, p2.1), idx(p3.0, p3.1), idx(p4.0, p4.1));
                instances.push(Instance {
                    pairs: vec![i1, i2, i3, i4],
                    check: Box::new(move |v, g| {
                        g.mul(v[i1], v[i2]) == g.mul(v[i3], v[i4])
                    }),
                });
                let (j1, j2) = (idx(q1.0, q1.1), idx(q2.0, q2.1));
                instances.push(Instance {
                    pairs: vec![j1, j2],
                    check: Box::new(move |v, _| v[j1] == v[j2]),
                });
            }
        }
    }
    // instance becomes checkable once its last-assigned pair is decided
    let mut by_last_pair: Vec<Vec<usize>> = vec![Vec::new(); n * n];
    for (ii, inst) in instances.iter().enumerate() {
        let last = *inst.pairs.iter().max().unwrap();
        by_last_pair[last].push(ii);
    }

    let mut values = vec![0usize; n * n];
    // type-I pins the diagonal fixed pairs
    let pinned: Vec<bool> = {
        let mut pin = vec![false; n * n];
        for x in 0..n {
            values[idx(x, s[x])] = group.identity;
            pin[idx(x, s[x])] = true;
        }
        pin
    };

    let mut found = Vec::new();
    fn rec(
        cell: usize,
        n: usize,
        go: usize,
        pinned: &[bool],
        values: &mut Vec<usize>,
        by_last_pair: &[Vec<usize>],
        instances: &[Instance],
        group: &FiniteGroup,
        found: &mut Vec<ConcreteCocycle>,
        limit: Option<usize>,
    ) {
        if limit.is_some_and(|l| found.len() >= l) {
            return;
        }
        if cell == n * n {
            let table: Vec<Vec<usize>> =
                (0..n).map(|x| (0..n).map(|y| values[x * n + y]).collect()).collect();
            found.push(ConcreteCocycle { group: group.clone(), values: table });
            return;
        }
        let candidates: Vec<usize> =
            if pinned[cell] { vec![values[cell]] } else { (0..go).collect() };
        for v in candidates {
            values[cell] = v;
            let ok = by_last_pair[cell]
                .iter()
                .all(|&ii| (instances[ii].check)(values, group));
            if ok {
                rec(cell + 1, n, go, pinned, values, by_last_pair, instances, group, found, limit);
            }
        }
        if !pinned[cell] {
            values[cell] = 0;
        }
    }
    rec(0, n, go, &pinned, &mut values, &by_last_pair, &instances, group, &mut found, limit);
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::universal_group;

    fn wada3() -> FiniteBiquandle {
        FiniteBiquandle::wada_cyclic(3)
    }

    #[test]
    fn identity_cocycle_verifies_for_any_biquandle() {
        for bq in [wada3(), FiniteBiquandle::flip(3)] {
            let f = ConcreteCocycle {
                group: FiniteGroup::cyclic(2),
                values: vec![vec![0; 3]; 3],
            };
            assert_eq!(verify_cocycle(&bq, &f).unwrap(), None);
            let p = universal_group(&bq);
            assert!(factor_through(&p, &f).is_ok());
        }
    }

    #[test]
    fn abelianized_canonical_map_is_a_cocycle_for_wada() {
        // a = f1 ↦ 1, c = f2 ↦ -1 in Z, reduced mod 3 in Z3: relation ca=1 holds
        let bq = wada3();
        let p = universal_group(&bq);
        let g = FiniteGroup::cyclic(3);
        let mut values = vec![vec![0; 3]; 3];
        for x in 0..3 {
            for y in 0..3 {
                let w = p.word_for_pair(x, y);
                values[x][y] = match w.letters() {
                    [] => 0,
                    [(0, 1)] => 1,
                    [(1, 1)] => 2,
                    other => panic!("unexpected word {other:?}"),
                };
            }
        }
        let f = ConcreteCocycle { group: g, values };
        assert_eq!(verify_cocycle(&bq, &f).unwrap(), None);
        let assign = factor_through(&p, &f).unwrap();
        assert_eq!(assign[0], 1);
        assert_eq!(assign[1], 2);
    }

    #[test]
    fn random_tables_almost_surely_fail_with_a_witness() {
        let bq = FiniteBiquandle::from_quandle(&FiniteBiquandle::dihedral_quandle(3), false).unwrap();
        let g = FiniteGroup::cyclic(2);
        let mut failures = 0;
        let mut seed = 11u64;
        for _ in 0..20 {
            let mut values = vec![vec![0; 3]; 3];
            for row in values.iter_mut() {
                for v in row.iter_mut() {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    *v = (seed >> 33) as usize % 2;
                }
            }
            let f = ConcreteCocycle { group: g.clone(), values };
            if verify_cocycle(&bq, &f).unwrap().is_some() {
                failures += 1;
            }
        }
        assert!(failures >= 18, "random tables should almost never be cocycles");
    }

    #[test]
    fn brute_force_cocycles_factor_through_the_presentation() {
        let bq = wada3();
        let p = universal_group(&bq);
        let g = FiniteGroup::cyclic(3);
        let all = enumerate_type_i_cocycles(&bq, &g, None);
        // hom(Z, Z3) has three elements: the universal group is free of rank 1
        assert_eq!(all.len(), 3);
        for f in &all {
            assert_eq!(verify_cocycle(&bq, f).unwrap(), None);
            factor_through(&p, f).expect("universal property violated");
        }
    }

    #[test]
    fn induced_identity_morphism_is_the_identity_class_map() {
        let bq = wada3();
        let p = universal_group(&bq);
        let phi: Vec<usize> = (0..3).collect();
        match induced_morphism(&phi, &bq, &bq, &p, &p) {
            InducedMorphism::ClassMap(map) => {
                for (g, w) in map.iter().enumerate() {
                    assert_eq!(w, &Word::generator(g));
                }
            }
            other => panic!("expected a class map, got {other:?}"),
        }
    }

    #[test]
    fn constant_map_to_the_point_kills_all_classes() {
        let bq = wada3();
        let point = FiniteBiquandle::flip(1);
        let p = universal_group(&bq);
        let q = universal_group(&point);
        match induced_morphism(&[0, 0, 0], &bq, &point, &p, &q) {
            InducedMorphism::ClassMap(map) => {
                assert!(map.iter().all(|w| w.is_identity()));
            }
            other => panic!("expected a class map, got {other:?}"),
        }
    }

    #[test]
    fn non_morphism_is_witnessed() {
        let bq = wada3();
        let d3 = FiniteBiquandle::from_quandle(&FiniteBiquandle::dihedral_quandle(3), false).unwrap();
        let p = universal_group(&bq);
        let q = universal_group(&d3);
        match induced_morphism(&[0, 1, 2], &bq, &d3, &p, &q) {
            InducedMorphism::NotAMorphism { .. } => {}
            other => panic!("expected a witness, got {other:?}"),
        }
    }
}
