//! Oriented link diagrams over named semi-arcs with signed crossings.
//!
//! A crossing records the four semi-arcs by role: the under strand passes
//! `under_in → under_out`, the over strand `over_in → over_out`, both in the
//! orientation of the link. A diagram is a set of crossings together with
//! the components, each an ordered cyclic list of semi-arcs starting at its
//! base point. Semi-arcs not appearing in any crossing form zero-crossing
//! unknot components.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

pub mod build;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub sign: i8,
    pub under_in: usize,
    pub over_in: usize,
    pub under_out: usize,
    pub over_out: usize,
}

impl Crossing {
    /// arcs in role order (ui, oi, uo, oo)
    pub fn arcs(&self) -> [usize; 4] {
        [self.under_in, self.over_in, self.under_out, self.over_out]
    }
}

#[derive(Debug, Clone)]
pub struct LinkDiagram {
    pub name: Option<String>,
    arc_names: Vec<String>,
    components: Vec<Vec<usize>>,
    crossings: Vec<Crossing>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagramError {
    UnknownArc(String),
    DuplicateRole { arc: String, role: &'static str },
    DanglingArc(String),
    InconsistentWalk { component: usize, position: usize },
    ArcNotCovered(String),
    ComponentOutOfRange(usize),
    BadSign(String),
    BadPd(String),
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramError::UnknownArc(a) => write!(f, "unknown semi-arc {a}"),
            DiagramError::DuplicateRole { arc, role } => {
                write!(f, "semi-arc {arc} used twice as an {role}")
            }
            DiagramError::DanglingArc(a) => write!(f, "dangling semi-arc {a}"),
            DiagramError::InconsistentWalk { component, position } => {
                write!(f, "component {component} walk breaks at position {position}")
            }
            DiagramError::ArcNotCovered(a) => write!(f, "semi-arc {a} is in no component"),
            DiagramError::ComponentOutOfRange(i) => write!(f, "component index {i} out of range"),
            DiagramError::BadSign(s) => write!(f, "bad crossing sign {s:?}"),
            DiagramError::BadPd(s) => write!(f, "bad planar-diagram code: {s}"),
        }
    }
}

impl std::error::Error for DiagramError {}

/// JSON schema of a diagram file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiagramFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub components: Vec<Vec<String>>,
    pub crossings: Vec<CrossingFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CrossingFile {
    pub sign: String,
    pub ui: String,
    pub oi: String,
    pub uo: String,
    pub oo: String,
}

impl LinkDiagram {
    /// Build and validate a diagram from named parts.
    pub fn new(
        name: Option<String>,
        components: Vec<Vec<String>>,
        crossings: Vec<(i8, String, String, String, String)>,
    ) -> Result<LinkDiagram, DiagramError> {
        let mut arc_names: Vec<String> = Vec::new();
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        let mut intern = |s: &String, arc_names: &mut Vec<String>| -> usize {
            if let Some(&i) = index.get(s) {
                return i;
            }
            let i = arc_names.len();
            arc_names.push(s.clone());
            index.insert(s.clone(), i);
            i
        };
        let components_ix: Vec<Vec<usize>> = components
            .iter()
            .map(|c| c.iter().map(|a| intern(a, &mut arc_names)).collect())
            .collect();
        let crossings_ix: Vec<Crossing> = crossings
            .iter()
            .map(|(sign, ui, oi, uo, oo)| Crossing {
                sign: *sign,
                under_in: intern(ui, &mut arc_names),
                over_in: intern(oi, &mut arc_names),
                under_out: intern(uo, &mut arc_names),
                over_out: intern(oo, &mut arc_names),
            })
            .collect();
        let d = LinkDiagram { name, arc_names, components: components_ix, crossings: crossings_ix };
        d.validate()?;
        Ok(d)
    }

    pub fn num_arcs(&self) -> usize {
        self.arc_names.len()
    }

    pub fn arc_name(&self, arc: usize) -> &str {
        &self.arc_names[arc]
    }

    pub fn arc_by_name(&self, name: &str) -> Option<usize> {
        self.arc_names.iter().position(|a| a == name)
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Successor map: arc entering a crossing continues as the same strand's
    /// out arc. Arcs in no crossing map to themselves (free loops).
    pub fn successor(&self) -> Vec<usize> {
        let mut succ: Vec<usize> = (0..self.arc_names.len()).collect();
        for c in &self.crossings {
            succ[c.under_in] = c.under_out;
            succ[c.over_in] = c.over_out;
        }
        succ
    }

    /// Component index of every arc.
    pub fn component_of(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.arc_names.len()];
        for (ci, arcs) in self.components.iter().enumerate() {
            for &a in arcs {
                comp[a] = ci;
            }
        }
        comp
    }

    pub fn validate(&self) -> Result<(), DiagramError> {
        let n = self.arc_names.len();
        let mut in_of: Vec<Option<usize>> = vec![None; n];
        let mut out_of: Vec<Option<usize>> = vec![None; n];
        for (ci, c) in self.crossings.iter().enumerate() {
            if c.sign != 1 && c.sign != -1 {
                return Err(DiagramError::BadSign(c.sign.to_string()));
            }
            for (arc, slot) in [(c.under_in, true), (c.over_in, true), (c.under_out, false), (c.over_out, false)]
            {
                let table = if slot { &mut in_of } else { &mut out_of };
                if table[arc].is_some() {
                    return Err(DiagramError::DuplicateRole {
                        arc: self.arc_names[arc].clone(),
                        role: if slot { "input" } else { "output" },
                    });
                }
                table[arc] = Some(ci);
            }
        }
        for a in 0..n {
            if in_of[a].is_some() != out_of[a].is_some() {
                return Err(DiagramError::DanglingArc(self.arc_names[a].clone()));
            }
        }
        // every arc belongs to exactly one component
        let mut covered = vec![false; n];
        for arcs in &self.components {
            for &a in arcs {
                if covered[a] {
                    return Err(DiagramError::DuplicateRole {
                        arc: self.arc_names[a].clone(),
                        role: "component member",
                    });
                }
                covered[a] = true;
            }
        }
        if let Some(a) = (0..n).find(|&a| !covered[a]) {
            return Err(DiagramError::ArcNotCovered(self.arc_names[a].clone()));
        }
        // component walks follow the successor map; zero-crossing components
        // are singletons of free-loop arcs
        let succ = self.successor();
        for (ci, arcs) in self.components.iter().enumerate() {
            if arcs.is_empty() {
                return Err(DiagramError::InconsistentWalk { component: ci, position: 0 });
            }
            if arcs.len() == 1 && in_of[arcs[0]].is_none() {
                continue;
            }
            for (pos, &a) in arcs.iter().enumerate() {
                if in_of[a].is_none() {
                    return Err(DiagramError::InconsistentWalk { component: ci, position: pos });
                }
                let next = arcs[(pos + 1) % arcs.len()];
                if succ[a] != next {
                    return Err(DiagramError::InconsistentWalk { component: ci, position: pos });
                }
            }
        }
        Ok(())
    }

    /// Per component, the crossings whose under-arc lies on it, in traversal
    /// order from the base point.
    pub fn underarc_order(&self) -> Vec<Vec<usize>> {
        let mut under_at: BTreeMap<usize, usize> = BTreeMap::new();
        for (ci, c) in self.crossings.iter().enumerate() {
            under_at.insert(c.under_in, ci);
        }
        self.components
            .iter()
            .map(|arcs| arcs.iter().filter_map(|a| under_at.get(a).copied()).collect())
            .collect()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Half the signed count of crossings between components `i` and `j`.
    pub fn linking_number(&self, i: usize, j: usize) -> Result<i64, DiagramError> {
        let ncomp = self.components.len();
        if i >= ncomp || j >= ncomp {
            return Err(DiagramError::ComponentOutOfRange(i.max(j)));
        }
        if i == j {
            return Err(DiagramError::ComponentOutOfRange(i));
        }
        let comp = self.component_of();
        let mut total: i64 = 0;
        for c in &self.crossings {
            let (cu, co) = (comp[c.under_in], comp[c.over_in]);
            if (cu == i && co == j) || (cu == j && co == i) {
                total += c.sign as i64;
            }
        }
        debug_assert!(total % 2 == 0, "signed inter-component count must be even");
        Ok(total / 2)
    }

    /// Mirror image: over and under exchanged at every crossing, signs
    /// flipped, orientations kept.
    pub fn mirror(&self) -> LinkDiagram {
        let crossings = self
            .crossings
            .iter()
            .map(|c| Crossing {
                sign: -c.sign,
                under_in: c.over_in,
                over_in: c.under_in,
                under_out: c.over_out,
                over_out: c.under_out,
            })
            .collect();
        LinkDiagram {
            name: self.name.as_ref().map(|n| format!("{n}!")),
            arc_names: self.arc_names.clone(),
            components: self.components.clone(),
            crossings,
        }
    }

    /// Insert a kink on `arc`: the strand crosses itself once with the given
    /// sign; `under_first` selects whether the traversal meets the under or
    /// the over passage first.
    pub fn r1_insert(&self, arc: &str, sign: i8, under_first: bool) -> Result<LinkDiagram, DiagramError> {
        let a = self.arc_by_name(arc).ok_or_else(|| DiagramError::UnknownArc(arc.to_string()))?;
        if sign != 1 && sign != -1 {
            return Err(DiagramError::BadSign(sign.to_string()));
        }
        let mut arc_names = self.arc_names.clone();
        let fresh = |arc_names: &mut Vec<String>, base: &str| -> usize {
            let mut k = 0;
            loop {
                let cand = format!("{base}.{k}");
                if !arc_names.contains(&cand) {
                    arc_names.push(cand);
                    return arc_names.len() - 1;
                }
                k += 1;
            }
        };
        let m = fresh(&mut arc_names, arc);
        let mut crossings = self.crossings.clone();
        let mut components = self.components.clone();

        let in_somewhere = crossings.iter().any(|c| c.under_in == a || c.over_in == a);
        let (kink, a2) = if !in_somewhere {
            // free loop: the arc closes onto itself through the kink
            let kink = if under_first {
                Crossing { sign, under_in: a, over_in: m, under_out: m, over_out: a }
            } else {
                Crossing { sign, under_in: m, over_in: a, under_out: a, over_out: m }
            };
            (kink, a)
        } else {
            let a2 = fresh(&mut arc_names, arc);
            // downstream crossing now reads from the continuation arc
            for c in crossings.iter_mut() {
                if c.under_in == a {
                    c.under_in = a2;
                } else if c.over_in == a {
                    c.over_in = a2;
                }
            }
            let kink = if under_first {
                Crossing { sign, under_in: a, over_in: m, under_out: m, over_out: a2 }
            } else {
                Crossing { sign, under_in: m, over_in: a, under_out: a2, over_out: m }
            };
            (kink, a2)
        };
        crossings.push(kink);
        for arcs in components.iter_mut() {
            if let Some(pos) = arcs.iter().position(|&x| x == a) {
                if a2 == a {
                    arcs.insert(pos + 1, m);
                } else {
                    arcs.splice(pos + 1..pos + 1, [m, a2]);
                }
                break;
            }
        }
        let d = LinkDiagram { name: self.name.clone(), arc_names, components, crossings };
        d.validate()?;
        Ok(d)
    }

    /// Rotate the base point of a component forward by `k` arcs.
    pub fn rotate_base_point(&self, component: usize, k: usize) -> LinkDiagram {
        let mut components = self.components.clone();
        let len = components[component].len();
        components[component].rotate_left(k % len);
        LinkDiagram {
            name: self.name.clone(),
            arc_names: self.arc_names.clone(),
            components,
            crossings: self.crossings.clone(),
        }
    }

    // -- files --------------------------------------------------------------

    pub fn to_file(&self) -> DiagramFile {
        DiagramFile {
            name: self.name.clone(),
            components: self
                .components
                .iter()
                .map(|c| c.iter().map(|&a| self.arc_names[a].clone()).collect())
                .collect(),
            crossings: self
                .crossings
                .iter()
                .map(|c| CrossingFile {
                    sign: if c.sign > 0 { "+".into() } else { "-".into() },
                    ui: self.arc_names[c.under_in].clone(),
                    oi: self.arc_names[c.over_in].clone(),
                    uo: self.arc_names[c.under_out].clone(),
                    oo: self.arc_names[c.over_out].clone(),
                })
                .collect(),
            provenance: None,
        }
    }

    pub fn from_file(file: &DiagramFile) -> Result<LinkDiagram, DiagramError> {
        let crossings: Result<Vec<_>, DiagramError> = file
            .crossings
            .iter()
            .map(|c| {
                let sign = match c.sign.as_str() {
                    "+" | "+1" | "1" => 1i8,
                    "-" | "-1" => -1i8,
                    other => return Err(DiagramError::BadSign(other.to_string())),
                };
                Ok((sign, c.ui.clone(), c.oi.clone(), c.uo.clone(), c.oo.clone()))
            })
            .collect();
        LinkDiagram::new(file.name.clone(), file.components.clone(), crossings?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).unwrap()
    }

    pub fn from_json(text: &str) -> Result<LinkDiagram, Box<dyn std::error::Error>> {
        let file: DiagramFile = serde_json::from_str(text)?;
        Ok(LinkDiagram::from_file(&file)?)
    }

    /// Best-effort import of a classical planar-diagram code. Each crossing
    /// `[i,j,k,l]` lists arc labels from the incoming under-arc `i`
    /// counterclockwise; the under strand runs `i → k`. The annotation says
    /// whether the over strand enters at slot `j` (positive here) or at slot
    /// `l` (negative); orientation cannot be inferred from the bare code.
    pub fn from_pd(
        name: Option<String>,
        pd: &[[u32; 4]],
        over_enters_j: &[bool],
    ) -> Result<LinkDiagram, DiagramError> {
        if pd.len() != over_enters_j.len() {
            return Err(DiagramError::BadPd("one orientation flag per crossing required".into()));
        }
        let crossings: Vec<(i8, String, String, String, String)> = pd
            .iter()
            .zip(over_enters_j)
            .map(|(x, &oj)| {
                let s = |v: u32| v.to_string();
                if oj {
                    (1i8, s(x[0]), s(x[1]), s(x[2]), s(x[3]))
                } else {
                    (-1i8, s(x[0]), s(x[3]), s(x[2]), s(x[1]))
                }
            })
            .collect();
        // derive components by walking the successor map
        let mut succ: BTreeMap<String, String> = BTreeMap::new();
        for (_, ui, oi, uo, oo) in &crossings {
            if succ.insert(ui.clone(), uo.clone()).is_some() {
                return Err(DiagramError::BadPd(format!("arc {ui} enters two crossings")));
            }
            if succ.insert(oi.clone(), oo.clone()).is_some() {
                return Err(DiagramError::BadPd(format!("arc {oi} enters two crossings")));
            }
        }
        let mut seen: std::collections::BTreeSet<String> = std::collections::BTreeSet::new();
        let mut components = Vec::new();
        let keys: Vec<String> = {
            let mut k: Vec<u32> = succ
                .keys()
                .map(|s| s.parse::<u32>().map_err(|_| DiagramError::BadPd("non-numeric arc".into())))
                .collect::<Result<_, _>>()?;
            k.sort_unstable();
            k.iter().map(|v| v.to_string()).collect()
        };
        for start in keys {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = Vec::new();
            let mut cur = start.clone();
            loop {
                comp.push(cur.clone());
                seen.insert(cur.clone());
                cur = succ
                    .get(&cur)
                    .cloned()
                    .ok_or_else(|| DiagramError::DanglingArc(cur.clone()))?;
                if cur == start {
                    break;
                }
            }
            components.push(comp);
        }
        LinkDiagram::new(name, components, crossings)
    }
}
