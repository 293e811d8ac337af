//! Regenerates the frozen diagram files under data/diagrams. The output is
//! committed; run only when the builders change.

use std::fmt::Write as _;
use ybq::diagram::build::{braid_closure, rational_link};
use ybq::diagram::LinkDiagram;

fn fingerprint(text: &str) -> u64 {
    // FNV-1a, 64-bit
    let mut h: u64 = 0xcbf29ce484222325;
    for b in text.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

fn main() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data/diagrams");
    std::fs::create_dir_all(&dir).unwrap();
    let mut entries: Vec<(String, LinkDiagram, &str)> = Vec::new();

    let s = |v: &str| v.to_string();
    let unknot = LinkDiagram::new(Some(s("unknot")), vec![vec![s("a1")]], vec![]).unwrap();
    entries.push((s("unknot"), unknot, "zero-crossing unknot"));
    let unlink2 = LinkDiagram::new(
        Some(s("unlink2")),
        vec![vec![s("a1")], vec![s("b1")]],
        vec![],
    )
    .unwrap();
    entries.push((s("unlink2"), unlink2, "two-component zero-crossing unlink"));
    let hopf = LinkDiagram::new(
        Some(s("hopf")),
        vec![vec![s("a1"), s("a2")], vec![s("b1"), s("b2")]],
        vec![
            (1, s("a1"), s("b1"), s("a2"), s("b2")),
            (1, s("b2"), s("a2"), s("b1"), s("a1")),
        ],
    )
    .unwrap();
    entries.push((s("hopf"), hopf, "positive Hopf link, linking number +1"));

    let rational: Vec<(&str, Vec<usize>, &str)> = vec![
        ("3_1", vec![3], "right trefoil, rational 3/1"),
        ("4_1", vec![2, 2], "figure eight, rational 5/2"),
        ("5_1", vec![5], "(2,5) torus knot, rational 5/1"),
        ("5_2", vec![3, 2], "twist knot, rational 7/2"),
        ("6_1", vec![4, 2], "twist knot, rational 9/2"),
        ("6_2", vec![3, 1, 2], "rational 11/3"),
        ("6_3", vec![2, 1, 1, 2], "rational 13/5"),
        ("7_4", vec![3, 1, 3], "rational 15/4"),
        ("whitehead", vec![2, 1, 2], "Whitehead link, rational 8/3"),
    ];
    for (name, pq, prov) in rational {
        let d = rational_link(&pq, Some(name.to_string())).unwrap();
        entries.push((name.to_string(), d, prov));
    }
    entries.push((
        s("borromean"),
        braid_closure(3, &[1, -2, 1, -2, 1, -2], Some(s("borromean"))).unwrap(),
        "Borromean rings, closure of a six-letter alternating braid",
    ));
    entries.push((
        s("3_1_r2"),
        braid_closure(2, &[1, 1, 1, 1, -1], Some(s("3_1_r2"))).unwrap(),
        "right trefoil with one extra cancelling crossing pair",
    ));
    entries.push((
        s("4_1_alt"),
        braid_closure(3, &[1, -2, 1, -2], Some(s("4_1_alt"))).unwrap(),
        "figure eight as a braid closure",
    ));

    let mut sums = String::new();
    for (name, d, prov) in &entries {
        let mut file = d.to_file();
        file.provenance = Some(prov.to_string());
        let text = serde_json::to_string_pretty(&file).unwrap();
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, &text).unwrap();
        writeln!(sums, "{name}\t{:016x}", fingerprint(&text)).unwrap();
        println!("wrote {}", path.display());
    }
    std::fs::write(dir.join("checksums.tsv"), sums).unwrap();

    // derived biquandle tables without closed-form constructions
    let ext = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data/external");
    std::fs::create_dir_all(&ext).unwrap();
    let all3 = ybq::FiniteBiquandle::enumerate(3).unwrap();
    let mut picks: Vec<(String, ybq::FiniteBiquandle, String)> = Vec::new();
    let mut c41: Vec<&ybq::FiniteBiquandle> = Vec::new();
    for b in &all3 {
        let p = ybq::presentation::universal_group(b);
        let sig = (b.sigma_order(), b.diagonal_fixed_points(), p.generators.len());
        match sig {
            (3, 0, 2) => picks.push((
                "BQ3_9".into(),
                b.clone(),
                "derived: unique order-3 class with a three-cycle diagonal and two generator classes".into(),
            )),
            (3, 0, 0) => picks.push((
                "BQ3_9*".into(),
                b.clone(),
                "derived: inverse of the class pinned as BQ3_9".into(),
            )),
            (4, 1, 2) => c41.push(b),
            _ => {}
        }
    }
    assert_eq!(c41.len(), 2);
    // the two order-4 classes are mutual inverses; pin the lexicographically
    // smaller table as the unstarred entry
    picks.push((
        "BQ3_3".into(),
        c41[0].clone(),
        "derived: one of the two mutually inverse order-4 classes with a single diagonal fixed point".into(),
    ));
    picks.push((
        "BQ3_3*".into(),
        c41[1].clone(),
        "derived: inverse of the class pinned as BQ3_3".into(),
    ));
    let mut esums = String::new();
    for (name, b, prov) in &picks {
        let mut file = b.to_file();
        file.name = Some(name.clone());
        file.provenance = Some(prov.clone());
        let text = serde_json::to_string_pretty(&file).unwrap();
        let fname = name.replace('*', "s");
        let path = ext.join(format!("{fname}.json"));
        std::fs::write(&path, &text).unwrap();
        writeln!(esums, "{name}\t{:016x}", fingerprint(&text)).unwrap();
        println!("wrote {}", path.display());
    }
    std::fs::write(ext.join("checksums.tsv"), esums).unwrap();
}
