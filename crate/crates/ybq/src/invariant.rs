//! The conjugacy cocycle invariant of an oriented link diagram.
//!
//! For every coloring, each component contributes the ordered product of its
//! crossing weights: the generator class of the incoming colors at a
//! positive crossing, the inverse of the class of the outgoing colors at a
//! negative one. Products are compared up to conjugacy; the invariant is
//! the multiset of per-component tuples over all colorings.

use crate::biquandle::FiniteBiquandle;
use crate::cocycle::{factor_through, CocycleError, ConcreteCocycle};
use crate::coloring::{enumerate_colorings, Coloring};
use crate::diagram::LinkDiagram;
use crate::presentation::{rewrite_word, Presentation, RewriteRules};
use crate::word::Word;
use num_bigint::BigInt;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Cyclic,
    Abelian,
}

/// Which comparison actually ran (cyclic falls back when a relation lies
/// outside the supported rewrite families).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UsedMode {
    Cyclic,
    Abelian,
    AbelianFallback,
    Hom,
}

/// Canonical form of one component's weight word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Value {
    Word(Word),
    Abelian(Vec<BigInt>),
    Class(usize),
}

#[derive(Debug, Clone)]
pub struct InvariantMultiset {
    pub colorings: usize,
    pub entries: BTreeMap<Vec<Value>, usize>,
    pub used_mode: UsedMode,
}

/// Weight word of component `comp` under `coloring`, freely reduced.
pub fn boltzmann_word(
    d: &LinkDiagram,
    coloring: &Coloring,
    p: &Presentation,
    comp: usize,
) -> Word {
    let order = d.underarc_order();
    let mut w = Word::identity();
    for &ci in &order[comp] {
        let c = &d.crossings()[ci];
        if c.sign > 0 {
            let cls = p.word_for_pair(coloring[c.under_in], coloring[c.over_in]);
            w = w.concat(cls);
        } else {
            let cls = p.word_for_pair(coloring[c.under_out], coloring[c.over_out]);
            w = w.concat(&cls.inverse());
        }
    }
    w
}

/// Canonical conjugacy-class representative under the recognized rewrite
/// families: exponents folded by generator orders, commuting runs sorted,
/// cyclically reduced, least rotation.
pub fn cyclic_representative(w: &Word, rules: &RewriteRules) -> Word {
    let mut cur = rewrite_word(w, rules).cyclic_reduce();
    let mut best = cur.clone();
    for _round in 0..4 {
        let mut local = cur.clone();
        let len = cur.len().max(1);
        for k in 0..len {
            let r = rewrite_word(&cur.rotated(k), rules).cyclic_reduce();
            if r < local {
                local = r;
            }
        }
        if local == best {
            break;
        }
        if local < best {
            best = local.clone();
        }
        cur = local;
    }
    best
}

/// The invariant multiset of `d` colored by `bq`, with weights in `p`.
pub fn invariant(
    d: &LinkDiagram,
    bq: &FiniteBiquandle,
    p: &Presentation,
    mode: Mode,
) -> InvariantMultiset {
    let colorings = enumerate_colorings(d, bq);
    let relators: Vec<Word> = p.relations.iter().map(|r| r.relator()).collect();
    let (rules, recognized) = RewriteRules::from_relators(relators.iter());
    let (cyclic, used_mode) = match mode {
        Mode::Cyclic if recognized => (true, UsedMode::Cyclic),
        Mode::Cyclic => (false, UsedMode::AbelianFallback),
        Mode::Abelian => (false, UsedMode::Abelian),
    };
    let snf = p.smith_form();
    let index: BTreeMap<usize, usize> =
        p.generators.iter().enumerate().map(|(i, g)| (g.label, i)).collect();
    let ncomp = d.components().len();
    let mut entries: BTreeMap<Vec<Value>, usize> = BTreeMap::new();
    for col in &colorings {
        let mut tuple = Vec::with_capacity(ncomp);
        for comp in 0..ncomp {
            let w = boltzmann_word(d, col, p, comp);
            let v = if cyclic {
                Value::Word(cyclic_representative(&w, &rules))
            } else {
                let ev: Vec<i64> = w.exponent_vector(p.generators.len(), |g| index[&g]);
                Value::Abelian(snf.canonical_coset(&ev))
            };
            tuple.push(v);
        }
        *entries.entry(tuple).or_insert(0) += 1;
    }
    InvariantMultiset { colorings: colorings.len(), entries, used_mode }
}

/// Invariant evaluated through a concrete cocycle: values are conjugacy
/// classes in the finite target group.
pub fn invariant_hom(
    d: &LinkDiagram,
    bq: &FiniteBiquandle,
    p: &Presentation,
    f: &ConcreteCocycle,
) -> Result<InvariantMultiset, CocycleError> {
    let assign = factor_through(p, f)?;
    let colorings = enumerate_colorings(d, bq);
    let ncomp = d.components().len();
    let mut entries: BTreeMap<Vec<Value>, usize> = BTreeMap::new();
    for col in &colorings {
        let mut tuple = Vec::with_capacity(ncomp);
        for comp in 0..ncomp {
            let w = boltzmann_word(d, col, p, comp);
            let g = f.group.eval_word(&w, |gen| assign[gen]);
            tuple.push(Value::Class(f.group.conjugacy_representative(g)));
        }
        *entries.entry(tuple).or_insert(0) += 1;
    }
    Ok(InvariantMultiset { colorings: colorings.len(), entries, used_mode: UsedMode::Hom })
}

impl Value {
    pub fn is_trivial(&self) -> bool {
        match self {
            Value::Word(w) => w.is_identity(),
            Value::Abelian(v) => v.iter().all(|x| x == &BigInt::from(0)),
            Value::Class(_) => false, // callers compare against the identity's class
        }
    }

    pub fn display(&self, label: impl Fn(usize) -> String) -> String {
        match self {
            Value::Word(w) => w.display(label),
            Value::Abelian(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                format!("({})", parts.join(","))
            }
            Value::Class(c) => format!("cls{c}"),
        }
    }
}

impl InvariantMultiset {
    /// Counts of tuples, every component trivial vs not.
    pub fn trivial_count(&self) -> usize {
        self.entries
            .iter()
            .filter(|(tuple, _)| tuple.iter().all(|v| v.is_trivial()))
            .map(|(_, c)| *c)
            .sum()
    }

    pub fn display(&self, p: &Presentation) -> String {
        let mut out = format!("colorings: {}\n", self.colorings);
        for (tuple, count) in &self.entries {
            let vals: Vec<String> = tuple.iter().map(|v| v.display(|g| p.label_of(g))).collect();
            out.push_str(&format!("  ({}) x {}\n", vals.join(", "), count));
        }
        out
    }

    pub fn to_json(&self, p: &Presentation) -> serde_json::Value {
        let multiset: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|(tuple, count)| {
                let vals: Vec<String> =
                    tuple.iter().map(|v| v.display(|g| p.label_of(g))).collect();
                serde_json::json!({"value": vals, "count": count})
            })
            .collect();
        serde_json::json!({"colorings": self.colorings, "multiset": multiset})
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::build::{braid_closure, rational_link};
    use crate::presentation::{reduced_universal_group, suggest_s0, universal_group};

    fn tuple_counts(m: &InvariantMultiset) -> Vec<(String, usize)> {
        m.entries
            .iter()
            .map(|(t, c)| {
                let s: Vec<String> = t.iter().map(|v| v.display(|g| format!("f{}", g + 1))).collect();
                (s.join(","), *c)
            })
            .collect()
    }

    #[test]
    fn unknot_weight_word_is_empty() {
        let d = LinkDiagram::new(None, vec![vec!["a".into()]], vec![]).unwrap();
        let b = FiniteBiquandle::wada_cyclic(3);
        let p = universal_group(&b);
        let m = invariant(&d, &b, &p, Mode::Cyclic);
        assert_eq!(m.colorings, 3);
        assert_eq!(m.trivial_count(), 3);
    }

    #[test]
    fn constant_quandle_colorings_give_identity() {
        let d = braid_closure(2, &[1, 1, 1], None).unwrap();
        let b = FiniteBiquandle::from_quandle(&FiniteBiquandle::dihedral_quandle(3), false).unwrap();
        let p = universal_group(&b);
        let m = invariant(&d, &b, &p, Mode::Cyclic);
        assert_eq!(m.colorings, 9);
        // constant colorings land on type-I pairs; with the reduced group of
        // the dihedral solution trivial, every value is trivial
        let s0 = suggest_s0(&b);
        let q = reduced_universal_group(&b, &s0);
        let mr = invariant(&d, &b, &q, Mode::Cyclic);
        assert_eq!(mr.trivial_count(), 9);
    }

    #[test]
    fn flip_colored_two_component_links_see_the_linking_number() {
        // Hopf link, both crossings positive: lk = 1, value (i,j)^1
        let s = |v: &str| v.to_string();
        let hopf = LinkDiagram::new(
            Some("hopf".into()),
            vec![vec![s("a1"), s("a2")], vec![s("b1"), s("b2")]],
            vec![
                (1, s("a1"), s("b1"), s("a2"), s("b2")),
                (1, s("b2"), s("a2"), s("b1"), s("a1")),
            ],
        )
        .unwrap();
        let b = FiniteBiquandle::flip(2);
        let p = universal_group(&b);
        let m = invariant(&hopf, &b, &p, Mode::Cyclic);
        assert_eq!(m.colorings, 4);
        // f1 = [1,2], f2 = [2,1]: colorings (0,1) and (1,0) give those letters
        let counts = tuple_counts(&m);
        assert!(counts.contains(&("f1,f2".to_string(), 1)));
        assert!(counts.contains(&("f2,f1".to_string(), 1)));
        assert_eq!(m.trivial_count(), 2);
    }

    #[test]
    fn whitehead_under_flip_sees_zero_linking() {
        let w = rational_link(&[2, 1, 2], Some("whitehead".into())).unwrap();
        let b = FiniteBiquandle::flip(2);
        let p = universal_group(&b);
        let m = invariant(&w, &b, &p, Mode::Cyclic);
        assert_eq!(m.colorings, 4);
        assert_eq!(m.trivial_count(), 4);
    }

    #[test]
    fn conjugate_words_share_a_representative() {
        let rules = RewriteRules::default();
        let uv = Word::from_letters([(0, 1), (1, 1)]);
        let vu = Word::from_letters([(1, 1), (0, 1)]);
        assert_eq!(cyclic_representative(&uv, &rules), cyclic_representative(&vu, &rules));
        let conj = Word::from_letters([(2, 1)]).concat(&uv).concat(&Word::from_letters([(2, -1)]));
        assert_eq!(cyclic_representative(&conj, &rules), cyclic_representative(&uv, &rules));
    }

    #[test]
    fn order_relation_distinguishes_inverse_powers() {
        // in <a : a^4>, a^-1 normalizes to a^3, distinct from a
        let mut rules = RewriteRules::default();
        rules.orders.insert(0, 4);
        let a = Word::generator(0);
        let ainv = a.inverse();
        let ra = cyclic_representative(&a, &rules);
        let ri = cyclic_representative(&ainv, &rules);
        assert_ne!(ra, ri);
        assert_eq!(ri, Word::from_letters([(0, 1), (0, 1), (0, 1)]));
    }

    #[test]
    fn trefoil_with_four_cycle_quandle_distinguishes_its_mirror() {
        let b = FiniteBiquandle::from_quandle(&FiniteBiquandle::four_cycles_quandle(), false).unwrap();
        let s0 = suggest_s0(&b);
        let q0 = reduced_universal_group(&b, &s0);
        let q = q0.tietze_simplified(q0.tietze_budget());
        let d = braid_closure(2, &[1, 1, 1], None).unwrap();
        let m = invariant(&d, &b, &q, Mode::Cyclic);
        let mm = invariant(&d.mirror(), &b, &q, Mode::Cyclic);
        assert_eq!(m.colorings, 30);
        assert_eq!(mm.colorings, 30);
        assert_eq!(m.trivial_count(), 6);
        assert_eq!(mm.trivial_count(), 6);
        assert_ne!(tuple_counts(&m), tuple_counts(&mm), "mirror must differ");
        println!("trefoil: {:?}", tuple_counts(&m));
        println!("mirror:  {:?}", tuple_counts(&mm));
    }
}
