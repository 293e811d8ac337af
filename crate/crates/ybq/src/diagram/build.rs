//! Diagram builders: braid closures and rational-tangle closures.
//!
//! Both builders lay crossings out geometrically, walk the resulting strands
//! to orient every component, and derive each crossing's sign from the
//! travel directions through it, so role assignment never depends on
//! guessing a convention.

use super::{DiagramError, LinkDiagram};
use crate::partition::Partition;

/// Closure of a braid word on `strands` strands. Letter `k` (1-based) is the
/// positive generator crossing strands `k, k+1` with the left strand passing
/// under; `-k` is its inverse. All strands are oriented downward, so positive
/// letters produce positive crossings.
pub fn braid_closure(strands: usize, word: &[i32], name: Option<String>) -> Result<LinkDiagram, DiagramError> {
    assert!(strands >= 1);
    for &e in word {
        let k = e.unsigned_abs() as usize;
        assert!(e != 0 && k < strands, "letter {e} needs a strand position < {strands}");
    }
    let mut next_id = 0usize;
    let mut fresh = || {
        next_id += 1;
        next_id - 1
    };
    let top: Vec<usize> = (0..strands).map(|_| fresh()).collect();
    let mut cur = top.clone();
    // (sign, ui, oi, uo, oo) over provisional ids
    let mut crossings: Vec<(i8, usize, usize, usize, usize)> = Vec::new();
    for &e in word {
        let j = e.unsigned_abs() as usize - 1;
        let nu = fresh(); // new arc at position j
        let nv = fresh(); // new arc at position j+1
        if e > 0 {
            // left strand goes under toward position j+1
            crossings.push((1, cur[j], cur[j + 1], nv, nu));
        } else {
            // left strand goes over
            crossings.push((-1, cur[j + 1], cur[j], nu, nv));
        }
        cur[j] = nu;
        cur[j + 1] = nv;
    }
    // closure identifies the bottom of each position with its top
    let mut ids = Partition::new(next_id);
    for p in 0..strands {
        ids.union(top[p], cur[p]);
    }
    finish(name, next_id, &mut ids, crossings)
}

/// Turn provisional arc ids (merged through `ids`) into a named diagram,
/// deriving components by walking the successor map.
fn finish(
    name: Option<String>,
    num_ids: usize,
    ids: &mut Partition,
    crossings: Vec<(i8, usize, usize, usize, usize)>,
) -> Result<LinkDiagram, DiagramError> {
    // canonical representative per provisional id
    let mut arc_of = vec![usize::MAX; num_ids];
    let mut arc_count = 0usize;
    for i in 0..num_ids {
        let r = ids.rep(i);
        if arc_of[r] == usize::MAX {
            arc_of[r] = arc_count;
            arc_count += 1;
        }
        arc_of[i] = arc_of[r];
    }
    let arc = |i: usize| format!("a{}", arc_of[i] + 1);
    let named: Vec<(i8, String, String, String, String)> = crossings
        .iter()
        .map(|&(s, ui, oi, uo, oo)| (s, arc(ui), arc(oi), arc(uo), arc(oo)))
        .collect();
    // successor walk over arc names
    let mut succ: std::collections::BTreeMap<String, String> = std::collections::BTreeMap::new();
    for (_, ui, oi, uo, oo) in &named {
        succ.insert(ui.clone(), uo.clone());
        succ.insert(oi.clone(), oo.clone());
    }
    let mut components: Vec<Vec<String>> = Vec::new();
    let mut seen: std::collections::BTreeSet<usize> = std::collections::BTreeSet::new();
    for start in 0..arc_count {
        if seen.contains(&start) {
            continue;
        }
        let start_name = format!("a{}", start + 1);
        let mut comp = Vec::new();
        let mut cur = start_name.clone();
        loop {
            let id: usize = cur[1..].parse::<usize>().unwrap() - 1;
            if !seen.insert(id) {
                break;
            }
            comp.push(cur.clone());
            match succ.get(&cur) {
                Some(next) => cur = next.clone(),
                None => break, // free loop
            }
            if cur == start_name {
                break;
            }
        }
        components.push(comp);
    }
    LinkDiagram::new(name, components, named)
}

/// Which diagonal of a tangle crossing carries the over strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum OverDiag {
    NwSe,
    NeSw,
}

#[derive(Debug, Clone, Copy)]
struct TangleCrossing {
    nw: usize,
    ne: usize,
    sw: usize,
    se: usize,
    over: OverDiag,
}

/// A rational tangle under construction: four boundary stubs plus crossings
/// whose slots reference provisional arc ids.
struct Tangle {
    nw: usize,
    ne: usize,
    sw: usize,
    se: usize,
    next_id: usize,
    crossings: Vec<TangleCrossing>,
    unions: Vec<(usize, usize)>,
}

impl Tangle {
    /// The zero tangle: two horizontal strands.
    fn zero() -> Tangle {
        let mut t = Tangle { nw: 0, ne: 1, sw: 2, se: 3, next_id: 4, crossings: Vec::new(), unions: Vec::new() };
        t.unions.push((t.nw, t.ne));
        t.unions.push((t.sw, t.se));
        t
    }

    fn fresh(&mut self) -> usize {
        self.next_id += 1;
        self.next_id - 1
    }

    /// One crossing appended on the right (twisting NE and SE ends).
    fn twist_right(&mut self, over: OverDiag) {
        let ne = self.fresh();
        let se = self.fresh();
        self.crossings.push(TangleCrossing { nw: self.ne, sw: self.se, ne, se, over });
        self.ne = ne;
        self.se = se;
    }

    /// One crossing appended at the bottom (twisting SW and SE ends).
    fn twist_bottom(&mut self, over: OverDiag) {
        let sw = self.fresh();
        let se = self.fresh();
        self.crossings.push(TangleCrossing { nw: self.sw, ne: self.se, sw, se, over });
        self.sw = sw;
        self.se = se;
    }
}

/// Numerator closure of the rational tangle with partial quotients
/// `[a1, a2, ...]`: `a1` twists on the right, then `a2` at the bottom,
/// alternating; over-strands alternate between the twist axes so the result
/// is the standard alternating diagram of the 2-bridge link.
///
/// The sequence is first normalized to odd length (`[.., a] = [.., a-1, 1]`
/// and `[.., a, 1] = [.., a+1]`, same fraction), because the numerator
/// closure of a tangle ending in a bottom-twist region would undo one twist
/// with a kink.
pub fn rational_link(partial_quotients: &[usize], name: Option<String>) -> Result<LinkDiagram, DiagramError> {
    assert!(!partial_quotients.is_empty() && partial_quotients.iter().all(|&a| a > 0));
    let mut seq: Vec<usize> = partial_quotients.to_vec();
    while seq.len() % 2 == 0 {
        let last = *seq.last().unwrap();
        if last == 1 {
            seq.pop();
            *seq.last_mut().unwrap() += 1;
        } else {
            *seq.last_mut().unwrap() = last - 1;
            seq.push(1);
        }
    }
    rational_link_with(&seq, name, OverDiag::NwSe, OverDiag::NwSe)
}

fn rational_link_with(
    seq: &[usize],
    name: Option<String>,
    h_over: OverDiag,
    v_over: OverDiag,
) -> Result<LinkDiagram, DiagramError> {
    let mut t = Tangle::zero();
    for (region, &a) in seq.iter().enumerate() {
        for _ in 0..a {
            if region % 2 == 0 {
                t.twist_right(h_over);
            } else {
                t.twist_bottom(v_over);
            }
        }
    }
    // numerator closure
    t.unions.push((t.nw, t.ne));
    t.unions.push((t.sw, t.se));

    let mut ids = Partition::new(t.next_id);
    for &(a, b) in &t.unions {
        ids.union(a, b);
    }

    // orient components by walking passages; slots NW/SE belong to one
    // passage, NE/SW to the other
    #[derive(Clone, Copy, PartialEq, Eq, Debug)]
    enum Slot {
        Nw,
        Ne,
        Sw,
        Se,
    }
    let slot_dir = |s: Slot| -> (i32, i32) {
        // direction of travel for a strand ENTERING at this slot,
        // in screen coordinates (x right, y down)
        match s {
            Slot::Nw => (1, 1),
            Slot::Se => (-1, -1),
            Slot::Ne => (-1, 1),
            Slot::Sw => (1, -1),
        }
    };
    // where each merged arc attaches: (crossing, slot), at most twice
    let mut ends: std::collections::BTreeMap<usize, Vec<(usize, Slot)>> = std::collections::BTreeMap::new();
    for (ci, c) in t.crossings.iter().enumerate() {
        for (slot, id) in [(Slot::Nw, c.nw), (Slot::Ne, c.ne), (Slot::Sw, c.sw), (Slot::Se, c.se)] {
            ends.entry(ids.rep(id)).or_default().push((ci, slot));
        }
    }
    for (arc, e) in &ends {
        if e.len() != 2 {
            return Err(DiagramError::DanglingArc(format!("t{arc}")));
        }
    }

    // traverse: pick an unvisited arc, walk forward assigning directions
    let mut entry_nwse: Vec<Option<Slot>> = vec![None; t.crossings.len()];
    let mut entry_nesw: Vec<Option<Slot>> = vec![None; t.crossings.len()];
    let mut visited_arc: std::collections::BTreeSet<usize> = std::collections::BTreeSet::new();
    let arcs_sorted: Vec<usize> = ends.keys().copied().collect();
    let mut components_arcs: Vec<Vec<usize>> = Vec::new();
    for &start in &arcs_sorted {
        if visited_arc.contains(&start) {
            continue;
        }
        let mut comp = Vec::new();
        let mut cur = start;
        // enter through the first recorded end
        let (mut ci, mut slot) = ends[&cur][0];
        loop {
            visited_arc.insert(cur);
            comp.push(cur);
            // cross through: exit slot is the diagonal partner
            let exit = match slot {
                Slot::Nw => Slot::Se,
                Slot::Se => Slot::Nw,
                Slot::Ne => Slot::Sw,
                Slot::Sw => Slot::Ne,
            };
            match slot {
                Slot::Nw | Slot::Se => entry_nwse[ci] = Some(slot),
                Slot::Ne | Slot::Sw => entry_nesw[ci] = Some(slot),
            }
            let c = &t.crossings[ci];
            let exit_id = ids.rep(match exit {
                Slot::Nw => c.nw,
                Slot::Ne => c.ne,
                Slot::Sw => c.sw,
                Slot::Se => c.se,
            });
            // find the other end of the exit arc
            let e = &ends[&exit_id];
            let other: Vec<(usize, Slot)> = e.iter().copied().filter(|&(cj, sj)| {
                !(cj == ci && sj == exit)
            }).collect();
            if other.len() != 1 {
                return Err(DiagramError::BadPd("tangle wiring is not a closed diagram".into()));
            }
            cur = exit_id;
            (ci, slot) = other[0];
            if cur == start {
                break;
            }
        }
        components_arcs.push(comp);
    }

    // assemble crossings with roles and signs; arcs renamed densely in
    // traversal order
    let mut rename: std::collections::BTreeMap<usize, String> = std::collections::BTreeMap::new();
    for arcs in &components_arcs {
        for &a in arcs {
            let next = rename.len() + 1;
            rename.entry(a).or_insert_with(|| format!("a{next}"));
        }
    }
    let arc_name = |id: usize| rename[&id].clone();
    let mut named: Vec<(i8, String, String, String, String)> = Vec::new();
    for (ci, c) in t.crossings.iter().enumerate() {
        let nwse_in = entry_nwse[ci].ok_or_else(|| DiagramError::BadPd("unvisited crossing".into()))?;
        let nesw_in = entry_nesw[ci].ok_or_else(|| DiagramError::BadPd("unvisited crossing".into()))?;
        let (nwse_in_id, nwse_out_id) = match nwse_in {
            Slot::Nw => (c.nw, c.se),
            _ => (c.se, c.nw),
        };
        let (nesw_in_id, nesw_out_id) = match nesw_in {
            Slot::Ne => (c.ne, c.sw),
            _ => (c.sw, c.ne),
        };
        let nwse_is_over = c.over == OverDiag::NwSe;
        let (ui, oi, uo, oo) = if nwse_is_over {
            (nesw_in_id, nwse_in_id, nesw_out_id, nwse_out_id)
        } else {
            (nwse_in_id, nesw_in_id, nwse_out_id, nesw_out_id)
        };
        let (udir, odir) = if nwse_is_over {
            (slot_dir(nesw_in), slot_dir(nwse_in))
        } else {
            (slot_dir(nwse_in), slot_dir(nesw_in))
        };
        // positive when cross(under_dir, over_dir) > 0 in y-down coordinates
        let cross = udir.0 * odir.1 - udir.1 * odir.0;
        let sign = if cross > 0 { 1i8 } else { -1i8 };
        named.push((
            sign,
            arc_name(ids.rep(ui)),
            arc_name(ids.rep(oi)),
            arc_name(ids.rep(uo)),
            arc_name(ids.rep(oo)),
        ));
    }
    let components: Vec<Vec<String>> = components_arcs
        .iter()
        .map(|arcs| arcs.iter().map(|&a| arc_name(a)).collect())
        .collect();
    LinkDiagram::new(name, components, named)
}

/// All four handedness combinations, for calibration tests.
pub fn rational_link_all_conventions(
    seq: &[usize],
) -> Vec<((&'static str, &'static str), Result<LinkDiagram, DiagramError>)> {
    let mut seq = seq.to_vec();
    while seq.len() % 2 == 0 {
        let last = *seq.last().unwrap();
        if last == 1 {
            seq.pop();
            *seq.last_mut().unwrap() += 1;
        } else {
            *seq.last_mut().unwrap() = last - 1;
            seq.push(1);
        }
    }
    let combos = [
        (("NwSe", "NwSe"), (OverDiag::NwSe, OverDiag::NwSe)),
        (("NwSe", "NeSw"), (OverDiag::NwSe, OverDiag::NeSw)),
        (("NeSw", "NwSe"), (OverDiag::NeSw, OverDiag::NwSe)),
        (("NeSw", "NeSw"), (OverDiag::NeSw, OverDiag::NeSw)),
    ];
    combos
        .iter()
        .map(|&(names, (h, v))| (names, rational_link_with(&seq, None, h, v)))
        .collect()
}
