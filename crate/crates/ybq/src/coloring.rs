//! Biquandle colorings of a link diagram.
//!
//! A coloring assigns an element of `X` to every semi-arc so that at a
//! positive crossing `σ(c(under_in), c(over_in)) = (c(over_out),
//! c(under_out))` and at a negative crossing `σ(c(under_out), c(over_out)) =
//! (c(over_in), c(under_in))`. Enumeration backtracks over semi-arcs in
//! component order; fixing both colors on one side of a crossing determines
//! the other side, so constraints propagate immediately.

use crate::biquandle::FiniteBiquandle;
use crate::diagram::LinkDiagram;

/// A full assignment semi-arc → element, indexed by the diagram's arc ids.
pub type Coloring = Vec<usize>;

/// All colorings, in lexicographic order of the assignment vector.
pub fn enumerate_colorings(d: &LinkDiagram, bq: &FiniteBiquandle) -> Vec<Coloring> {
    let arcs = d.num_arcs();
    let mut order: Vec<usize> = Vec::with_capacity(arcs);
    for comp in d.components() {
        order.extend_from_slice(comp);
    }
    let mut colors: Vec<Option<usize>> = vec![None; arcs];
    let mut out = Vec::new();
    assign(d, bq, &order, 0, &mut colors, &mut out);
    out.sort_unstable();
    out
}

fn assign(
    d: &LinkDiagram,
    bq: &FiniteBiquandle,
    order: &[usize],
    pos: usize,
    colors: &mut Vec<Option<usize>>,
    out: &mut Vec<Coloring>,
) {
    let next = (pos..order.len()).find(|&i| colors[order[i]].is_none());
    let Some(i) = next else {
        out.push(colors.iter().map(|c| c.unwrap()).collect());
        return;
    };
    let arc = order[i];
    for v in 0..bq.order() {
        let mut trail: Vec<usize> = Vec::new();
        colors[arc] = Some(v);
        trail.push(arc);
        if propagate(d, bq, colors, &mut trail) {
            assign(d, bq, order, i + 1, colors, out);
        }
        for a in trail {
            colors[a] = None;
        }
    }
}

/// Propagate through crossings until a fixpoint; false on contradiction.
/// Newly assigned arcs are appended to `trail` for backtracking.
fn propagate(
    d: &LinkDiagram,
    bq: &FiniteBiquandle,
    colors: &mut Vec<Option<usize>>,
    trail: &mut Vec<usize>,
) -> bool {
    loop {
        let mut progress = false;
        for c in d.crossings() {
            // orient the role pairs by crossing sign: σ maps `src` to `dst`
            let (src, dst) = if c.sign > 0 {
                ((c.under_in, c.over_in), (c.over_out, c.under_out))
            } else {
                ((c.under_out, c.over_out), (c.over_in, c.under_in))
            };
            let sv = (colors[src.0], colors[src.1]);
            let dv = (colors[dst.0], colors[dst.1]);
            match (sv, dv) {
                ((Some(a), Some(b)), _) => {
                    let (z, t) = bq.sigma(a, b);
                    for (arc, val) in [(dst.0, z), (dst.1, t)] {
                        match colors[arc] {
                            None => {
                                colors[arc] = Some(val);
                                trail.push(arc);
                                progress = true;
                            }
                            Some(cur) if cur != val => return false,
                            _ => {}
                        }
                    }
                }
                (_, (Some(z), Some(t))) => {
                    let (a, b) = bq.sigma_inv(z, t);
                    for (arc, val) in [(src.0, a), (src.1, b)] {
                        match colors[arc] {
                            None => {
                                colors[arc] = Some(val);
                                trail.push(arc);
                                progress = true;
                            }
                            Some(cur) if cur != val => return false,
                            _ => {}
                        }
                    }
                }
                _ => {}
            }
        }
        if !progress {
            return true;
        }
    }
}

/// Does `coloring` satisfy every crossing constraint?
pub fn is_valid_coloring(d: &LinkDiagram, bq: &FiniteBiquandle, coloring: &[usize]) -> bool {
    d.crossings().iter().all(|c| {
        if c.sign > 0 {
            bq.sigma(coloring[c.under_in], coloring[c.over_in])
                == (coloring[c.over_out], coloring[c.under_out])
        } else {
            bq.sigma(coloring[c.under_out], coloring[c.over_out])
                == (coloring[c.over_in], coloring[c.under_in])
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::build::braid_closure;

    fn trefoil() -> LinkDiagram {
        braid_closure(2, &[1, 1, 1], Some("3_1".into())).unwrap()
    }

    #[test]
    fn trefoil_by_wada_z3_has_nine_colorings() {
        let b = FiniteBiquandle::wada_cyclic(3);
        let cols = enumerate_colorings(&trefoil(), &b);
        assert_eq!(cols.len(), 9);
        for c in &cols {
            assert!(is_valid_coloring(&trefoil(), &b, c));
        }
    }

    #[test]
    fn trefoil_by_dihedral_has_nine_and_shifted_bijection_three() {
        let d3 = FiniteBiquandle::from_quandle(&FiniteBiquandle::dihedral_quandle(3), false).unwrap();
        assert_eq!(enumerate_colorings(&trefoil(), &d3).len(), 9);
        let b10 = FiniteBiquandle::from_bijection(&[1, 2, 0]).unwrap();
        assert_eq!(enumerate_colorings(&trefoil(), &b10).len(), 3);
    }

    #[test]
    fn one_element_biquandle_colors_anything_once() {
        let b = FiniteBiquandle::flip(1);
        assert_eq!(enumerate_colorings(&trefoil(), &b).len(), 1);
    }

    #[test]
    fn zero_crossing_unknot_takes_any_color() {
        let d = LinkDiagram::new(None, vec![vec!["a".into()]], vec![]).unwrap();
        let b = FiniteBiquandle::wada_cyclic(3);
        assert_eq!(enumerate_colorings(&d, &b).len(), 3);
    }

    #[test]
    fn figure_eight_fox_colorings_match_its_determinant() {
        // determinant 5: only constant colorings mod 3, 25 colorings mod 5
        let f8 = braid_closure(3, &[1, -2, 1, -2], None).unwrap();
        let d3 = FiniteBiquandle::from_quandle(&FiniteBiquandle::dihedral_quandle(3), false).unwrap();
        let d5 = FiniteBiquandle::from_quandle(&FiniteBiquandle::dihedral_quandle(5), false).unwrap();
        assert_eq!(enumerate_colorings(&f8, &d3).len(), 3);
        assert_eq!(enumerate_colorings(&f8, &d5).len(), 25);
    }

    #[test]
    fn parallel_r2_pair_colors_like_the_unlink()
    {
        let b = FiniteBiquandle::wada_cyclic(3);
        let unlink_ish = braid_closure(2, &[1, -1], None).unwrap();
        assert_eq!(enumerate_colorings(&unlink_ish, &b).len(), 9);
    }

    #[test]
    fn coloring_count_is_stable_under_kinks_and_mirror() {
        let d = trefoil();
        for b in [
            FiniteBiquandle::wada_cyclic(3),
            FiniteBiquandle::from_bijection(&[1, 2, 0]).unwrap(),
            FiniteBiquandle::alexander(4, -1, 1).unwrap(),
        ] {
            let base = enumerate_colorings(&d, &b).len();
            assert_eq!(enumerate_colorings(&d.mirror(), &b).len(), base);
            for sign in [1i8, -1] {
                for uf in [true, false] {
                    let k = d.r1_insert("a1", sign, uf).unwrap();
                    assert_eq!(enumerate_colorings(&k, &b).len(), base, "sign {sign} uf {uf}");
                }
            }
        }
    }
}
