//! Freely reduced words over abstract generator ids.
//!
//! A letter is `(generator, exponent)` with exponent `+1` or `-1`; the empty
//! word is the identity. Words never contain the adjoined identity symbol of
//! a partition — callers drop it before building a word.

use std::fmt;

pub type Letter = (usize, i8);

/// A freely reduced word. Construction through [`Word::from_letters`] or the
/// arithmetic helpers keeps the reduction invariant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn generator(g: usize) -> Word {
        Word(vec![(g, 1)])
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Word {
        let mut w = Word::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Append one letter, cancelling against the current tail.
    pub fn push(&mut self, (g, e): Letter) {
        debug_assert!(e == 1 || e == -1);
        if let Some(&(tg, te)) = self.0.last() {
            if tg == g && te == -e {
                self.0.pop();
                return;
            }
        }
        self.0.push((g, e));
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &l in other.letters() {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::identity();
        for _ in 0..k.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }

    /// Cyclically reduced form: strips matching first/last letters.
    pub fn cyclic_reduce(&self) -> Word {
        let mut v = self.0.clone();
        while v.len() >= 2 {
            let (fg, fe) = v[0];
            let (lg, le) = v[v.len() - 1];
            if fg == lg && fe == -le {
                v.pop();
                v.remove(0);
            } else {
                break;
            }
        }
        Word(v)
    }

    /// Net exponent of each generator, for abelianized computations.
    pub fn exponent_vector(&self, num_gens: usize, gen_index: impl Fn(usize) -> usize) -> Vec<i64> {
        let mut v = vec![0i64; num_gens];
        for &(g, e) in &self.0 {
            v[gen_index(g)] += e as i64;
        }
        v
    }

    /// Occurrences of `g`, ignoring exponent signs.
    pub fn count_gen(&self, g: usize) -> usize {
        self.0.iter().filter(|&&(h, _)| h == g).count()
    }

    pub fn gens(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&(g, _)| g)
    }

    /// Replace every occurrence of `g` by `by` (and `g^-1` by `by^-1`).
    pub fn substitute(&self, g: usize, by: &Word) -> Word {
        let mut w = Word::identity();
        for &(h, e) in &self.0 {
            if h == g {
                let rep = if e == 1 { by.clone() } else { by.inverse() };
                for &l in rep.letters() {
                    w.push(l);
                }
            } else {
                w.push((h, e));
            }
        }
        w
    }

    /// Map generator ids through `f`, keeping exponents.
    pub fn map_gens(&self, f: impl Fn(usize) -> usize) -> Word {
        Word::from_letters(self.0.iter().map(|&(g, e)| (f(g), e)))
    }

    /// Canonical key identifying a relator up to inversion: the
    /// lexicographically smaller of the word and its inverse.
    pub fn relator_key(&self) -> Word {
        let inv = self.inverse();
        if inv < *self {
            inv
        } else {
            self.clone()
        }
    }

    /// Rotate the letter sequence left by `k`.
    pub fn rotated(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        let mut v = Vec::with_capacity(self.0.len());
        v.extend_from_slice(&self.0[k..]);
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    /// Least rotation of the letter sequence (both endpoints on letters).
    pub fn min_rotation(&self) -> Word {
        if self.0.len() <= 1 {
            return self.clone();
        }
        let n = self.0.len();
        let mut best: Option<Vec<Letter>> = None;
        for s in 0..n {
            let mut rot: Vec<Letter> = Vec::with_capacity(n);
            rot.extend_from_slice(&self.0[s..]);
            rot.extend_from_slice(&self.0[..s]);
            // a rotation can expose new cancellations only at the seam; a
            // cyclically reduced input stays reduced under rotation
            if best.as_ref().map_or(true, |b| rot < *b) {
                best = Some(rot);
            }
        }
        Word(best.unwrap())
    }

    /// Render with labels produced by `label` (e.g. `f1*f2^-1`); identity is "1".
    pub fn display(&self, label: impl Fn(usize) -> String) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let (g, e) = self.0[i];
            let mut run = e as i64;
            let mut j = i + 1;
            while j < self.0.len() && self.0[j].0 == g && self.0[j].1 == e {
                run += e as i64;
                j += 1;
            }
            let name = label(g);
            if run == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{}^{}", name, run));
            }
            i = j;
        }
        parts.join("*")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(|g| format!("g{}", g)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn push_cancels_adjacent_inverses() {
        let w = Word::from_letters([(3, 1), (5, 1), (5, -1), (3, -1)]);
        assert!(w.is_identity());
    }

    #[test]
    fn concat_inverse_is_identity() {
        let w = Word::from_letters([(1, 1), (2, -1), (1, 1)]);
        assert!(w.concat(&w.inverse()).is_identity());
    }

    #[test]
    fn cyclic_reduction_strips_conjugation() {
        // a b a^-1 reduces cyclically to b
        let w = Word::from_letters([(0, 1), (1, 1), (0, -1)]);
        assert_eq!(w.cyclic_reduce(), Word::generator(1));
    }

    #[test]
    fn relator_key_identifies_sides_swap() {
        // f1 f3 f2^-1  vs  f2 f3^-1 f1^-1 name the same relation
        let a = Word::from_letters([(1, 1), (3, 1), (2, -1)]);
        let b = a.inverse();
        assert_eq!(a.relator_key(), b.relator_key());
    }

    #[test]
    fn display_groups_runs() {
        let w = Word::from_letters([(0, 1), (0, 1), (1, -1)]);
        assert_eq!(w.display(|g| format!("f{}", g + 1)), "f1^2*f2^-1");
        assert_eq!(Word::identity().display(|_| unreachable!()), "1");
    }
}
