//! Presentations of the universal non-commutative 2-cocycle group of a
//! biquandle, computed by relation saturation.
//!
//! The group is generated by the pairs of `X×X` subject to three families of
//! relations: the two cocycle equations instantiated at every triple, and
//! triviality of the diagonal fixed-point pairs. The computation keeps a
//! partition of `(X×X) ∪ {1}` (pairs known to be equal in the group, with the
//! class of the adjoined identity symbol listing the trivial pairs) and a set
//! of word equations, alternating a rewrite of all equations through class
//! representatives with a cancellation pass that merges classes, until both
//! stabilize.

use crate::biquandle::FiniteBiquandle;
use crate::partition::Partition;
use crate::snf::{smith_normal_form, AbelianGroup, SmithForm};
use crate::word::Word;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

pub type Pair = (usize, usize);

/// The relation families of a biquandle before any saturation.
#[derive(Debug, Clone)]
pub struct RawRelations {
    /// Pairs identified with the group identity: `(x, s(x))`.
    pub fixed_point_pairs: Vec<Pair>,
    /// Pair identifications `(y,z) ~ (σ1(x,y), σ1(σ2(x,y),z))`, one per triple.
    pub transport_pairs: Vec<(Pair, Pair)>,
    /// Product equations, one per triple:
    /// `(x,y)(σ2(x,y),z) = (x,σ1(y,z))(σ2(x,σ1(y,z)),σ2(y,z))`.
    pub product_equations: Vec<([Pair; 2], [Pair; 2])>,
}

/// All three relation families, in row-major scan order.
pub fn raw_relations(bq: &FiniteBiquandle) -> RawRelations {
    let n = bq.order();
    let s = bq.diagonal_map();
    let fixed_point_pairs = (0..n).map(|x| (x, s[x])).collect();
    let mut transport_pairs = Vec::new();
    let mut product_equations = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (a, b) = bq.sigma(x, y);
                transport_pairs.push(((y, z), (a, bq.sigma1(b, z))));
                let u = bq.sigma1(y, z);
                product_equations.push((
                    [(x, y), (bq.sigma2(x, y), z)],
                    [(x, u), (bq.sigma2(x, u), bq.sigma2(y, z))],
                ));
            }
        }
    }
    RawRelations { fixed_point_pairs, transport_pairs, product_equations }
}

/// Grow `part` by the listed identifications; closure under transitivity is
/// immediate from the union-find representation.
pub fn saturate(part: &mut Partition, pairs: &[(usize, usize)]) {
    for &(a, b) in pairs {
        part.union(a, b);
    }
}

/// One generator class of a presentation: the stable label (0-based; shown
/// as `f{label+1}`) and the member pairs in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorClass {
    pub label: usize,
    pub members: Vec<Pair>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub left: Word,
    pub right: Word,
}

impl Relation {
    pub fn relator(&self) -> Word {
        self.left.concat(&self.right.inverse())
    }

    pub fn display(&self, label: impl Fn(usize) -> String + Copy) -> String {
        format!("{} = {}", self.left.display(label), self.right.display(label))
    }
}

/// A finite presentation of the universal cocycle group (or a quotient),
/// remembering which pair of `X×X` maps to which word.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub order: usize,
    /// Pairs in the class of the identity, row-major.
    pub trivial: Vec<Pair>,
    /// Live generator classes sorted by label.
    pub generators: Vec<GeneratorClass>,
    pub relations: Vec<Relation>,
    /// `pair_word[x*n+y]`: image of the pair in the current generators.
    pair_word: Vec<Word>,
}

fn pair_symbol(n: usize, p: Pair) -> usize {
    1 + p.0 * n + p.1
}

fn symbol_pair(n: usize, s: usize) -> Pair {
    ((s - 1) / n, (s - 1) % n)
}

/// Compute the presentation of the universal cocycle group.
pub fn universal_group(bq: &FiniteBiquandle) -> Presentation {
    saturated_presentation(bq, &[])
}

/// Same computation with extra pairs declared trivial from the start; with a
/// coboundary-derived seed this presents the reduced universal group.
pub fn reduced_universal_group(bq: &FiniteBiquandle, seed: &[Pair]) -> Presentation {
    saturated_presentation(bq, seed)
}

fn saturated_presentation(bq: &FiniteBiquandle, seed: &[Pair]) -> Presentation {
    let n = bq.order();
    let raw = raw_relations(bq);
    let mut part = Partition::new(n * n + 1);
    for &p in &raw.fixed_point_pairs {
        part.union(0, pair_symbol(n, p));
    }
    for &p in seed {
        part.union(0, pair_symbol(n, p));
    }
    for &(a, b) in &raw.transport_pairs {
        part.union(pair_symbol(n, a), pair_symbol(n, b));
    }

    // alternate rewriting and cancellation until stable
    let final_eqs = loop {
        let eqs = rewritten_equations(&raw, n, &mut part);
        let mut changed = false;
        for (l, r) in &eqs {
            match (l.len(), r.len()) {
                (1, 1) => changed |= part.union(l[0], r[0]),
                (1, 0) => changed |= part.union(l[0], 0),
                (0, 1) => changed |= part.union(r[0], 0),
                (2, 1) => {
                    if l[0] == r[0] {
                        changed |= part.union(l[1], 0);
                    } else if l[1] == r[0] {
                        changed |= part.union(l[0], 0);
                    }
                }
                (1, 2) => {
                    if r[0] == l[0] {
                        changed |= part.union(r[1], 0);
                    } else if r[1] == l[0] {
                        changed |= part.union(r[0], 0);
                    }
                }
                (2, 2) => {
                    if l[0] == r[0] {
                        changed |= part.union(l[1], r[1]);
                    }
                    if l[1] == r[1] {
                        changed |= part.union(l[0], r[0]);
                    }
                }
                // products equal to the identity stay as relations
                (2, 0) | (0, 2) | (0, 0) => {}
                _ => unreachable!("equation sides have at most two letters"),
            }
        }
        if !changed {
            break eqs;
        }
    };

    // label the surviving classes
    let classes = part.classes();
    let mut trivial = Vec::new();
    let mut generators: Vec<GeneratorClass> = Vec::new();
    let mut symbol_to_gen: BTreeMap<usize, usize> = BTreeMap::new();
    for class in &classes {
        if class[0] == 0 {
            trivial = class.iter().skip(1).map(|&s| symbol_pair(n, s)).collect();
        } else {
            let label = generators.len();
            symbol_to_gen.insert(class[0], label);
            generators.push(GeneratorClass {
                label,
                members: class.iter().map(|&s| symbol_pair(n, s)).collect(),
            });
        }
    }

    let to_word =
        |side: &Vec<usize>| -> Word { Word::from_letters(side.iter().map(|s| (symbol_to_gen[s], 1))) };
    let relations = final_eqs
        .iter()
        .map(|(l, r)| {
            // show the non-empty side first
            let (mut left, mut right) = (to_word(l), to_word(r));
            if left.is_identity() && !right.is_identity() {
                std::mem::swap(&mut left, &mut right);
            }
            Relation { left, right }
        })
        .collect();

    let mut pair_word = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let rep = part.rep(pair_symbol(n, (x, y)));
            if rep == 0 {
                pair_word.push(Word::identity());
            } else {
                pair_word.push(Word::generator(symbol_to_gen[&rep]));
            }
        }
    }

    Presentation { order: n, trivial, generators, relations, pair_word }
}

/// All product equations rewritten through class representatives, with the
/// identity symbol dropped, trivial equations removed and duplicates (up to
/// side swap and inversion) removed. Output keeps the scan encounter order.
fn rewritten_equations(
    raw: &RawRelations,
    n: usize,
    part: &mut Partition,
) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut out = Vec::new();
    for (lhs, rhs) in &raw.product_equations {
        let side = |part: &mut Partition, ps: &[Pair; 2]| -> Vec<usize> {
            ps.iter().map(|&p| part.rep(pair_symbol(n, p))).filter(|&r| r != 0).collect()
        };
        let l = side(part, lhs);
        let r = side(part, rhs);
        if l == r {
            continue;
        }
        let lw = Word::from_letters(l.iter().map(|&s| (s, 1)));
        let rw = Word::from_letters(r.iter().map(|&s| (s, 1)));
        let key = lw.concat(&rw.inverse()).relator_key();
        if key.is_identity() {
            continue;
        }
        if seen.insert(key) {
            out.push((l, r));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// coboundary candidates
// ---------------------------------------------------------------------------

/// A pair whose generator a coboundary can trivialize: the class of `x`
/// under `x ~ s(x)` differs from the class of `σ2(x,y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GammaCandidate {
    pub class_of_first: usize,
    pub pair: Pair,
    pub class_of_output: usize,
}

/// Scan pairs in row-major order, emitting one candidate per unordered pair
/// of `s`-classes.
pub fn gamma_candidates(bq: &FiniteBiquandle) -> Vec<GammaCandidate> {
    let n = bq.order();
    let s = bq.diagonal_map();
    let mut sclass = Partition::new(n);
    for x in 0..n {
        sclass.union(x, s[x]);
    }
    let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let cx = sclass.rep(x);
            let co = sclass.rep(bq.sigma2(x, y));
            if cx == co {
                continue;
            }
            let key = (cx.min(co), cx.max(co));
            if used.insert(key) {
                out.push(GammaCandidate { class_of_first: cx, pair: (x, y), class_of_output: co });
            }
        }
    }
    out
}

/// Greedy spanning forest over the candidate list, in emission order: the
/// returned pairs admit a coboundary trivializing all of them at once.
pub fn suggest_s0(bq: &FiniteBiquandle) -> Vec<Pair> {
    let n = bq.order();
    let mut forest = Partition::new(n);
    let mut s0 = Vec::new();
    for cand in gamma_candidates(bq) {
        if forest.union(cand.class_of_first, cand.class_of_output) {
            s0.push(cand.pair);
        }
    }
    s0
}

// ---------------------------------------------------------------------------
// Tietze simplification
// ---------------------------------------------------------------------------

/// Rewrite rules extracted from relations of special shapes.
#[derive(Debug, Clone, Default)]
pub struct RewriteRules {
    /// g has finite order k (a relator g^k).
    pub orders: BTreeMap<usize, u64>,
    /// unordered commuting generator pairs
    pub commuting: BTreeSet<(usize, usize)>,
}

impl RewriteRules {
    pub fn commutes(&self, a: usize, b: usize) -> bool {
        a == b || self.commuting.contains(&(a.min(b), a.max(b)))
    }

    /// Collect rules from relators (up to conjugacy, via cyclic reduction);
    /// the flag reports whether every relator fit a recognized family.
    pub fn from_relators<'a>(relators: impl Iterator<Item = &'a Word>) -> (RewriteRules, bool) {
        let mut rules = RewriteRules::default();
        let mut all_recognized = true;
        for w in relators {
            let w = w.cyclic_reduce();
            if let Some((g, k)) = as_power(&w) {
                let e = rules.orders.entry(g).or_insert(k);
                *e = (*e).min(k);
            } else if let Some((a, b)) = as_commutator(&w) {
                rules.commuting.insert((a.min(b), a.max(b)));
            } else if !w.is_identity() {
                all_recognized = false;
            }
        }
        (rules, all_recognized)
    }
}

/// `w = g^k` (k ≥ 1, single generator, uniform sign)?
pub fn as_power(w: &Word) -> Option<(usize, u64)> {
    let ls = w.letters();
    if ls.is_empty() {
        return None;
    }
    let (g, e) = ls[0];
    if ls.iter().all(|&(h, f)| h == g && f == e) {
        Some((g, ls.len() as u64))
    } else {
        None
    }
}

/// `w` is a commutator `a^±1 b^±1 a^∓1 b^∓1` of distinct generators?
pub fn as_commutator(w: &Word) -> Option<(usize, usize)> {
    let ls = w.letters();
    if ls.len() != 4 {
        return None;
    }
    let (a, ea) = ls[0];
    let (b, eb) = ls[1];
    if a != b && ls[2] == (a, -ea) && ls[3] == (b, -eb) {
        Some((a, b))
    } else {
        None
    }
}

/// Fold exponents modulo generator orders and sort commuting runs; a normal
/// form for the recognized rule families.
pub fn rewrite_word(w: &Word, rules: &RewriteRules) -> Word {
    // run-length form (gen, signed exponent)
    let mut runs: Vec<(usize, i64)> = Vec::new();
    for &(g, e) in w.letters() {
        if let Some(last) = runs.last_mut() {
            if last.0 == g {
                last.1 += e as i64;
                if last.1 == 0 {
                    runs.pop();
                }
                continue;
            }
        }
        runs.push((g, e as i64));
    }
    loop {
        let mut changed = false;
        for r in runs.iter_mut() {
            if let Some(&k) = rules.orders.get(&r.0) {
                let m = r.1.rem_euclid(k as i64);
                if m != r.1 {
                    r.1 = m;
                    changed = true;
                }
            }
        }
        runs.retain(|r| r.1 != 0);
        let mut i = 0;
        while i + 1 < runs.len() {
            if runs[i].0 == runs[i + 1].0 {
                runs[i].1 += runs[i + 1].1;
                runs.remove(i + 1);
                if runs[i].1 == 0 {
                    runs.remove(i);
                    i = i.saturating_sub(1);
                }
                changed = true;
            } else {
                i += 1;
            }
        }
        let mut j = 0;
        while j + 1 < runs.len() {
            if runs[j].0 > runs[j + 1].0 && rules.commutes(runs[j].0, runs[j + 1].0) {
                runs.swap(j, j + 1);
                changed = true;
                j = j.saturating_sub(1);
            } else {
                j += 1;
            }
        }
        if !changed {
            break;
        }
    }
    let mut out = Word::identity();
    for (g, e) in runs {
        let sign = if e < 0 { -1 } else { 1 };
        for _ in 0..e.unsigned_abs() {
            out.push((g, sign));
        }
    }
    out
}

impl Presentation {
    /// Image of a pair in the current generator words.
    pub fn word_for_pair(&self, x: usize, y: usize) -> &Word {
        &self.pair_word[x * self.order + y]
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn label_of(&self, gen: usize) -> String {
        format!("f{}", gen + 1)
    }

    pub fn is_trivial_group(&self) -> bool {
        self.generators.is_empty()
    }

    /// Best-effort generator elimination; every step is a Tietze
    /// transformation, so the presented group is unchanged.
    pub fn tietze_simplified(&self, budget: usize) -> Presentation {
        let mut rels: Vec<(Word, Word)> =
            self.relations.iter().map(|r| (r.left.clone(), r.right.clone())).collect();
        let mut pair_word = self.pair_word.clone();
        let mut live: BTreeSet<usize> = self.generators.iter().map(|g| g.label).collect();

        let cleanup = |rels: &mut Vec<(Word, Word)>| {
            let mut seen: BTreeSet<Word> = BTreeSet::new();
            rels.retain(|(l, r)| {
                let key = l.concat(&r.inverse()).relator_key();
                if key.is_identity() {
                    return false;
                }
                seen.insert(key)
            });
        };

        for _pass in 0..budget {
            cleanup(&mut rels);

            // a relator in which some generator occurs exactly once can be
            // solved for that generator
            let mut elim: Option<(usize, usize, Word)> = None;
            'outer: for (ri, (l, r)) in rels.iter().enumerate() {
                let w = l.concat(&r.inverse());
                for (pos, &(g, e)) in w.letters().iter().enumerate() {
                    if w.count_gen(g) == 1 {
                        let prefix = Word::from_letters(w.letters()[..pos].iter().copied());
                        let suffix = Word::from_letters(w.letters()[pos + 1..].iter().copied());
                        // prefix · g^e · suffix = 1
                        let ge = prefix.inverse().concat(&suffix.inverse());
                        let replacement = if e == 1 { ge } else { ge.inverse() };
                        elim = Some((ri, g, replacement));
                        break 'outer;
                    }
                }
            }
            if let Some((ri, g, replacement)) = elim {
                rels.remove(ri);
                for (l, r) in rels.iter_mut() {
                    *l = l.substitute(g, &replacement);
                    *r = r.substitute(g, &replacement);
                }
                for w in pair_word.iter_mut() {
                    *w = w.substitute(g, &replacement);
                }
                live.remove(&g);
                continue;
            }

            // drop relations that the other relations' order/commutation
            // rules already rewrite to the identity
            let mut dropped = false;
            let mut idx = 0;
            while idx < rels.len() {
                let relators: Vec<Word> = rels
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != idx)
                    .map(|(_, (l, r))| l.concat(&r.inverse()))
                    .collect();
                let (rules, _) = RewriteRules::from_relators(relators.iter());
                let w = rels[idx].0.concat(&rels[idx].1.inverse()).cyclic_reduce();
                if rewrite_word(&w, &rules).is_identity() {
                    rels.remove(idx);
                    dropped = true;
                } else {
                    idx += 1;
                }
            }
            if !dropped {
                break;
            }
        }
        cleanup(&mut rels);

        // normalize the display of special shapes
        let relations: Vec<Relation> = rels
            .into_iter()
            .map(|(l, r)| {
                let w = l.concat(&r.inverse());
                if let Some((g, k)) = as_power(&w) {
                    let left = Word::from_letters((0..k).map(|_| (g, 1)));
                    return Relation { left, right: Word::identity() };
                }
                if let Some((a, b)) = as_commutator(&w) {
                    let (a, b) = (a.min(b), a.max(b));
                    return Relation {
                        left: Word::from_letters([(a, 1), (b, 1)]),
                        right: Word::from_letters([(b, 1), (a, 1)]),
                    };
                }
                Relation { left: l, right: r }
            })
            .collect();

        let generators =
            self.generators.iter().filter(|g| live.contains(&g.label)).cloned().collect();
        Presentation {
            order: self.order,
            trivial: self.trivial.clone(),
            generators,
            relations,
            pair_word,
        }
    }

    /// Default simplification budget.
    pub fn tietze_budget(&self) -> usize {
        3 * self.order * self.order + 8
    }

    /// Exponent-sum matrix of the relators over the live generators.
    pub fn relation_matrix(&self) -> Vec<Vec<i64>> {
        let index: BTreeMap<usize, usize> =
            self.generators.iter().enumerate().map(|(i, g)| (g.label, i)).collect();
        self.relations
            .iter()
            .map(|r| r.relator().exponent_vector(self.generators.len(), |g| index[&g]))
            .collect()
    }

    pub fn smith_form(&self) -> SmithForm {
        smith_normal_form(&self.relation_matrix(), self.generators.len())
    }

    /// Invariant factors and free rank of the abelianized group.
    pub fn abelianization(&self) -> AbelianGroup {
        let snf = self.smith_form();
        AbelianGroup { torsion: snf.torsion(), free_rank: snf.free_rank() }
    }

    /// Text form: classes as `label = [pair] = [pair] = ...` (1-based),
    /// the trivial class under `1 =`, then the relations.
    pub fn display_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("generators ({}):\n", self.generators.len()));
        for g in &self.generators {
            let eqs: Vec<String> =
                g.members.iter().map(|&(x, y)| format!("[{},{}]", x + 1, y + 1)).collect();
            out.push_str(&format!("  {} = {}\n", self.label_of(g.label), eqs.join(" = ")));
        }
        let triv: Vec<String> =
            self.trivial.iter().map(|&(x, y)| format!("[{},{}]", x + 1, y + 1)).collect();
        out.push_str(&format!("trivial:\n  1 = {}\n", triv.join(" = ")));
        out.push_str(&format!("relations ({}):\n", self.relations.len()));
        for r in &self.relations {
            out.push_str(&format!("  {}\n", r.display(|g| self.label_of(g))));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let gens: Vec<serde_json::Value> = self
            .generators
            .iter()
            .map(|g| {
                serde_json::json!({
                    "label": self.label_of(g.label),
                    "pairs": g.members.iter().map(|&(x,y)| vec![x+1, y+1]).collect::<Vec<_>>(),
                })
            })
            .collect();
        let rels: Vec<serde_json::Value> = self
            .relations
            .iter()
            .map(|r| {
                let side = |w: &Word| -> Vec<serde_json::Value> {
                    w.letters()
                        .iter()
                        .map(|&(g, e)| serde_json::json!([self.label_of(g), e]))
                        .collect()
                };
                serde_json::json!({"left": side(&r.left), "right": side(&r.right)})
            })
            .collect();
        serde_json::json!({
            "n": self.order,
            "generators": gens,
            "trivial": self.trivial.iter().map(|&(x,y)| vec![x+1, y+1]).collect::<Vec<_>>(),
            "relations": rels,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biquandle::FiniteBiquandle;

    fn wada3() -> FiniteBiquandle {
        FiniteBiquandle::wada_cyclic(3)
    }

    fn dihedral3() -> FiniteBiquandle {
        FiniteBiquandle::from_quandle(&FiniteBiquandle::dihedral_quandle(3), false).unwrap()
    }

    /// the two-element antiflip extended by a fixed element:
    /// `σ(x,y) = (y+x²y, x+y²x)` on Z3
    fn aflip3() -> FiniteBiquandle {
        let m = |v: i64| v.rem_euclid(3) as usize;
        let sigma1 =
            (0..3).map(|x: i64| (0..3).map(|y: i64| m(y + x * x * y)).collect()).collect();
        let sigma2 =
            (0..3).map(|x: i64| (0..3).map(|y: i64| m(x + y * y * x)).collect()).collect();
        FiniteBiquandle::from_tables(crate::biquandle::SigmaTables { n: 3, sigma1, sigma2 }, None)
            .unwrap()
    }

    fn rel_strings(p: &Presentation) -> Vec<String> {
        p.relations.iter().map(|r| r.display(|g| p.label_of(g))).collect()
    }

    fn parse_word(s: &str) -> Word {
        if s.trim() == "1" {
            return Word::identity();
        }
        Word::from_letters(s.split('*').map(|tok| {
            let idx: usize = tok.trim()[1..].parse::<usize>().unwrap();
            (idx - 1, 1i8)
        }))
    }

    fn has_relation(p: &Presentation, s: &str) -> bool {
        let (l, r) = s.split_once(" = ").unwrap();
        let key = parse_word(l).concat(&parse_word(r).inverse()).relator_key();
        p.relations.iter().any(|rel| rel.relator().relator_key() == key)
    }

    #[test]
    fn raw_relation_families_of_wada_z3() {
        let raw = raw_relations(&wada3());
        assert_eq!(raw.fixed_point_pairs, vec![(0, 0), (1, 2), (2, 1)]);
        // transported pairs realize (y,z) ~ (-y,-z)
        for (a, b) in &raw.transport_pairs {
            let m = |v: i64| v.rem_euclid(3) as usize;
            assert_eq!((m(-(a.0 as i64)), m(-(a.1 as i64))), *b);
        }
        assert_eq!(raw.product_equations.len(), 27);
        // the flip transports every pair to itself
        let raw = raw_relations(&FiniteBiquandle::flip(3));
        assert!(raw.transport_pairs.iter().all(|(a, b)| a == b));
    }

    #[test]
    fn quandle_q3_matches_its_closed_form() {
        // -◁0 = (1 2), -◁1 = -◁2 = id gives σ(x,y) = (y, -x - x y²) on Z3
        let op = vec![vec![0, 0, 0], vec![2, 1, 1], vec![1, 2, 2]];
        let b = FiniteBiquandle::from_quandle(&op, false).unwrap();
        let m = |v: i64| v.rem_euclid(3) as usize;
        for x in 0..3i64 {
            for y in 0..3i64 {
                assert_eq!(b.sigma(x as usize, y as usize), (y as usize, m(-x - x * y * y)));
            }
        }
    }

    #[test]
    fn universal_group_of_wada_z3() {
        let p = universal_group(&wada3());
        // generators f1 = [1,2]=[1,3], f2 = [2,2]=[3,3]; five trivial pairs
        assert_eq!(p.generators.len(), 2);
        assert_eq!(p.generators[0].members, vec![(0, 1), (0, 2)]);
        assert_eq!(p.generators[1].members, vec![(1, 1), (2, 2)]);
        assert_eq!(p.trivial, vec![(0, 0), (1, 0), (1, 2), (2, 0), (2, 1)]);
        assert_eq!(rel_strings(&p), vec!["f2*f1 = 1"]);
    }

    #[test]
    fn universal_group_of_dihedral3() {
        let p = universal_group(&dihedral3());
        assert_eq!(p.generators.len(), 6);
        assert_eq!(p.trivial, vec![(0, 0), (1, 1), (2, 2)]);
        assert_eq!(p.relations.len(), 6);
        for expect in
            ["f1*f5 = f2", "f2*f3 = f1", "f3*f6 = f4", "f4*f1 = f3", "f5*f4 = f6", "f6*f2 = f5"]
        {
            assert!(has_relation(&p, expect), "missing {expect}; got {:?}", rel_strings(&p));
        }
    }

    #[test]
    fn universal_group_of_dihedral3_inverse_is_trivial() {
        let p = universal_group(&dihedral3().inverse_solution());
        assert!(p.is_trivial_group());
        assert_eq!(p.trivial.len(), 9);
    }

    #[test]
    fn universal_group_of_flip2_is_free_of_rank_2() {
        let p = universal_group(&FiniteBiquandle::flip(2));
        assert_eq!(p.generators.len(), 2);
        assert!(p.relations.is_empty());
    }

    #[test]
    fn universal_group_of_aflip3_has_one_commutation() {
        let p = universal_group(&aflip3());
        assert_eq!(p.generators.len(), 3);
        assert_eq!(p.generators[0].members, vec![(0, 1), (0, 2)]);
        assert_eq!(p.generators[1].members, vec![(1, 0), (2, 0)]);
        assert_eq!(p.generators[2].members, vec![(1, 1), (2, 2)]);
        assert_eq!(p.relations.len(), 1);
        let w = p.relations[0].relator();
        assert_eq!(as_commutator(&w), Some((1, 2)));
    }

    #[test]
    fn universal_group_of_inverse_wada_z3() {
        let p = universal_group(&wada3().inverse_solution());
        assert_eq!(p.generators.len(), 2);
        assert_eq!(p.generators[0].members, vec![(0, 1), (1, 0), (2, 2)]);
        assert_eq!(p.generators[1].members, vec![(0, 2), (1, 1), (2, 0)]);
        assert_eq!(p.trivial, vec![(0, 0), (1, 2), (2, 1)]);
        assert_eq!(p.relations.len(), 2);
        assert!(has_relation(&p, "f1*f1 = f2"));
        assert!(has_relation(&p, "f2*f2 = f1"));
    }

    #[test]
    fn reduced_group_with_empty_seed_matches_universal() {
        let b = wada3();
        let p = universal_group(&b);
        let q = reduced_universal_group(&b, &[]);
        assert_eq!(p.trivial, q.trivial);
        assert_eq!(p.generators, q.generators);
        assert_eq!(rel_strings(&p), rel_strings(&q));
    }

    #[test]
    fn reduced_dihedral3_with_suggested_seed_is_trivial() {
        let b = dihedral3();
        let s0 = suggest_s0(&b);
        assert_eq!(s0, vec![(0, 1), (0, 2)]);
        let p = reduced_universal_group(&b, &s0);
        assert!(p.is_trivial_group());
        assert_eq!(p.trivial.len(), 9);
    }

    #[test]
    fn reduced_alexander_z4() {
        let b = FiniteBiquandle::alexander(4, -1, 1).unwrap();
        let p = reduced_universal_group(&b, &[(0, 1)]);
        assert_eq!(p.generators.len(), 4);
        assert_eq!(p.generators[0].members, vec![(1, 0), (3, 0)]);
        assert_eq!(p.generators[1].members, vec![(1, 1), (3, 3)]);
        assert_eq!(p.generators[2].members, vec![(1, 2), (3, 2)]);
        assert_eq!(p.generators[3].members, vec![(2, 1), (2, 3)]);
        assert_eq!(p.trivial, vec![(0, 0), (0, 1), (0, 2), (0, 3), (1, 3), (2, 0), (2, 2), (3, 1)]);
        assert_eq!(p.relations.len(), 7);
        // the fourth generator appears in no relation
        for r in &p.relations {
            assert!(r.relator().gens().all(|g| g != 3));
        }
    }

    #[test]
    fn gamma_candidates_of_dihedral3() {
        let cands = gamma_candidates(&dihedral3());
        let tuples: Vec<(usize, Pair, usize)> =
            cands.iter().map(|c| (c.class_of_first, c.pair, c.class_of_output)).collect();
        assert_eq!(tuples, vec![(0, (0, 1), 2), (0, (0, 2), 1), (1, (1, 0), 2)]);
    }

    #[test]
    fn gamma_candidates_of_alexander_z4() {
        let b = FiniteBiquandle::alexander(4, -1, 1).unwrap();
        let cands = gamma_candidates(&b);
        assert_eq!(cands.len(), 1);
        assert_eq!(cands[0].pair, (0, 1));
        assert_eq!((cands[0].class_of_first, cands[0].class_of_output), (0, 2));
    }

    #[test]
    fn gamma_candidates_of_flip_are_empty() {
        assert!(gamma_candidates(&FiniteBiquandle::flip(3)).is_empty());
        assert!(suggest_s0(&FiniteBiquandle::flip(3)).is_empty());
    }

    #[test]
    fn suggested_seed_for_alexander_z8() {
        let b = FiniteBiquandle::alexander(8, -1, 1).unwrap();
        assert_eq!(suggest_s0(&b), vec![(0, 1), (0, 2), (1, 1)]);
    }

    #[test]
    fn tietze_on_dihedral3_reaches_free_rank_2() {
        let p = universal_group(&dihedral3());
        let t = p.tietze_simplified(p.tietze_budget());
        assert_eq!(t.generators.len(), 2);
        assert!(t.relations.is_empty());
        let ab = t.abelianization();
        assert_eq!(ab.free_rank, 2);
        assert!(ab.torsion.is_empty());
    }

    #[test]
    fn tietze_on_wada_z3_reaches_free_rank_1() {
        let p = universal_group(&wada3());
        let t = p.tietze_simplified(p.tietze_budget());
        assert_eq!(t.generators.len(), 1);
        assert!(t.relations.is_empty());
    }

    #[test]
    fn tietze_on_inverse_wada_z3_gives_cyclic_of_order_3() {
        let p = universal_group(&wada3().inverse_solution());
        let t = p.tietze_simplified(p.tietze_budget());
        assert_eq!(t.generators.len(), 1);
        assert_eq!(t.relations.len(), 1);
        let w = t.relations[0].relator();
        assert_eq!(as_power(&w), Some((t.generators[0].label, 3)));
        let ab = t.abelianization();
        assert_eq!(ab.free_rank, 0);
        assert_eq!(ab.torsion.len(), 1);
    }

    #[test]
    fn tietze_preserves_abelianization() {
        for b in [
            wada3(),
            wada3().inverse_solution(),
            dihedral3(),
            aflip3(),
            FiniteBiquandle::alexander(4, -1, 1).unwrap(),
        ] {
            let p = universal_group(&b);
            let t = p.tietze_simplified(p.tietze_budget());
            assert_eq!(p.abelianization(), t.abelianization(), "biquandle {:?}", b.name());
        }
    }

    #[test]
    fn pair_words_follow_substitutions() {
        let b = wada3();
        let p = universal_group(&b);
        assert_eq!(p.word_for_pair(0, 1), p.word_for_pair(0, 2));
        assert!(p.word_for_pair(1, 0).is_identity());
        let t = p.tietze_simplified(p.tietze_budget());
        // every pair word mentions only live generators
        for x in 0..3 {
            for y in 0..3 {
                for g in t.word_for_pair(x, y).gens() {
                    assert!(t.generators.iter().any(|gc| gc.label == g));
                }
            }
        }
    }

    #[test]
    fn extra_saturation_pass_changes_nothing() {
        let b = FiniteBiquandle::alexander(4, -1, 1).unwrap();
        let p = reduced_universal_group(&b, &[(0, 1)]);
        // feeding the final trivial class back reproduces the same output
        let q = reduced_universal_group(&b, &p.trivial);
        assert_eq!(p.trivial, q.trivial);
        assert_eq!(p.generators, q.generators);
        assert_eq!(p.relations.len(), q.relations.len());
    }

    #[test]
    fn rewrite_word_respects_rules() {
        let mut rules = RewriteRules::default();
        rules.orders.insert(0, 4);
        rules.commuting.insert((0, 1));
        // b a^-1 b sorts and folds: a^-1 -> a^3
        let w = Word::from_letters([(1, 1), (0, -1), (1, 1)]);
        let rw = rewrite_word(&w, &rules);
        assert_eq!(rw, Word::from_letters([(0, 1), (0, 1), (0, 1), (1, 1), (1, 1)]));
    }
}

#[cfg(test)]
mod four_cycle_tests {
    use super::*;
    use crate::biquandle::FiniteBiquandle;

    fn s4() -> FiniteBiquandle {
        FiniteBiquandle::from_quandle(&FiniteBiquandle::four_cycles_quandle(), false).unwrap()
    }

    #[test]
    fn candidate_scan_matches_conjugation_structure() {
        let cands = gamma_candidates(&s4());
        let tuples: Vec<(usize, Pair, usize)> =
            cands.iter().map(|c| (c.class_of_first, c.pair, c.class_of_output)).collect();
        assert_eq!(
            tuples,
            vec![
                (0, (0, 1), 3),
                (0, (0, 2), 5),
                (0, (0, 3), 2),
                (0, (0, 5), 1),
                (1, (1, 0), 5),
                (1, (1, 4), 3),
                (1, (1, 5), 4),
                (2, (2, 0), 3),
                (2, (2, 3), 4),
                (2, (2, 4), 5),
                (3, (3, 1), 4),
                (4, (4, 1), 5),
            ]
        );
        assert_eq!(suggest_s0(&s4()), vec![(0, 1), (0, 2), (0, 3), (0, 5), (1, 5)]);
    }

    #[test]
    fn universal_and_reduced_group_sizes() {
        let b = s4();
        let p = universal_group(&b);
        assert_eq!(p.generators.len(), 30);
        assert_eq!(p.relations.len(), 108);
        let s0 = suggest_s0(&b);
        let q = reduced_universal_group(&b, &s0);
        assert_eq!(q.generators.len(), 5);
        assert_eq!(q.relations.len(), 20);
        let t = q.tietze_simplified(q.tietze_budget());
        assert_eq!(t.generators.len(), 1);
        assert_eq!(t.relations.len(), 1);
        assert_eq!(as_power(&t.relations[0].relator()).map(|(_, k)| k), Some(4));
        let ab = t.abelianization();
        assert_eq!(ab.free_rank, 0);
        assert_eq!(ab.torsion, vec![num_bigint::BigInt::from(4)]);
    }
}
