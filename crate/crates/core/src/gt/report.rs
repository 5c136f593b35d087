//! Report assembly: collapsing classes known to give isomorphic algebras,
//! dual pairing of rows, raw case lists and JSON / markdown export.

use super::{Classifier, DatumClass};
use crate::error::Result;
use crate::group::{isomorphic, parse_spec, GroupTable};
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct RawCase {
    pub f_members: Vec<usize>,
    pub gamma_members: Vec<usize>,
    pub f_type: String,
    pub gamma_type: String,
    pub intersection_order: usize,
}

#[derive(Clone, Debug)]
pub struct MergeRecord {
    pub name: String,
    /// Indices into `all_classes`.
    pub members: Vec<usize>,
    /// true when the listed classes are known to coincide and the report
    /// collapses them; false when they merely share every computed invariant.
    pub asserted: bool,
    pub note: String,
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub group: String,
    /// Post-merge rows, non-trivial classes only, grouped in dual pairs.
    pub classes: Vec<DatumClass>,
    /// Every equivalence class, including trivial ones, before merging.
    pub all_classes: Vec<DatumClass>,
    pub raw_cases: Vec<RawCase>,
    pub merges_applied: Vec<MergeRecord>,
}

struct Matcher {
    f_order: usize,
    gamma_order: usize,
    alpha_trivial: Option<bool>,
    beta_trivial: Option<bool>,
    f_spec: Option<&'static str>,
    gamma_spec: Option<&'static str>,
}

impl Matcher {
    fn orders(f: usize, g: usize) -> Matcher {
        Matcher {
            f_order: f,
            gamma_order: g,
            alpha_trivial: None,
            beta_trivial: None,
            f_spec: None,
            gamma_spec: None,
        }
    }

    fn gamma_iso(f: usize, g: usize, spec: &'static str) -> Matcher {
        Matcher {
            gamma_spec: Some(spec),
            ..Matcher::orders(f, g)
        }
    }

    fn f_iso(f: usize, g: usize, spec: &'static str) -> Matcher {
        Matcher {
            f_spec: Some(spec),
            ..Matcher::orders(f, g)
        }
    }

    fn matches(&self, cl: &mut Classifier, c: &DatumClass) -> Result<bool> {
        if c.rep.f.members.len() != self.f_order || c.rep.gamma.members.len() != self.gamma_order {
            return Ok(false);
        }
        if let Some(t) = self.alpha_trivial {
            if c.rep.alpha_trivial() != t {
                return Ok(false);
            }
        }
        if let Some(t) = self.beta_trivial {
            if c.rep.beta_trivial() != t {
                return Ok(false);
            }
        }
        if let Some(spec) = self.f_spec {
            let want = parse_spec(spec)?.shared();
            let have = cl.ctx(&c.rep.f.members)?.std.clone();
            if !isomorphic(&have, &want) {
                return Ok(false);
            }
        }
        if let Some(spec) = self.gamma_spec {
            let want = parse_spec(spec)?.shared();
            let have = cl.ctx(&c.rep.gamma.members)?.std.clone();
            if !isomorphic(&have, &want) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

struct MergeRule {
    name: &'static str,
    components: Vec<Matcher>,
    /// Index into `components` of the representative shown in the report.
    rep: usize,
    gh_type: Option<&'static str>,
    note: &'static str,
}

struct QuestionRule {
    name: &'static str,
    matchers: Vec<Matcher>,
    note: &'static str,
}

fn group_is(g: &Arc<GroupTable>, spec: &str) -> bool {
    match parse_spec(spec) {
        Ok(t) => t.order == g.order && isomorphic(g, &t.shared()),
        Err(_) => false,
    }
}

fn merge_rules(g: &Arc<GroupTable>) -> Vec<MergeRule> {
    if group_is(g, "S 4") {
        return vec![
            MergeRule {
                name: "I",
                components: vec![
                    Matcher::orders(2, 12),
                    Matcher::orders(8, 3),
                    Matcher::orders(8, 12),
                ],
                rep: 1,
                gh_type: None,
                note: "the three classes give isomorphic algebras; one representative kept",
            },
            MergeRule {
                name: "I*",
                components: vec![
                    Matcher::orders(12, 2),
                    Matcher::orders(3, 8),
                    Matcher::orders(12, 8),
                ],
                rep: 1,
                gh_type: None,
                note: "duals of the components of class I",
            },
            MergeRule {
                name: "II",
                components: vec![Matcher::orders(4, 6), Matcher::orders(4, 24)],
                rep: 1,
                gh_type: Some("D4"),
                note: "the two classes give isomorphic algebras; group-likes form D4",
            },
            MergeRule {
                name: "II*",
                components: vec![Matcher::orders(6, 4), Matcher::orders(24, 4)],
                rep: 1,
                gh_type: None,
                note: "duals of the components of class II",
            },
        ];
    }
    if group_is(g, "G18") {
        return vec![
            MergeRule {
                name: "A18,xi",
                components: vec![
                    Matcher::orders(9, 2),
                    Matcher::gamma_iso(3, 6, "S 3"),
                    Matcher::gamma_iso(3, 6, "C 6"),
                    Matcher::orders(9, 18),
                ],
                rep: 3,
                gh_type: None,
                note: "the four classes give isomorphic self-dual-free algebras; \
                       one representative kept",
            },
            MergeRule {
                name: "A18,xi*",
                components: vec![
                    Matcher::orders(2, 9),
                    Matcher::f_iso(6, 3, "S 3"),
                    Matcher::f_iso(6, 3, "C 6"),
                    Matcher::orders(18, 9),
                ],
                rep: 3,
                gh_type: None,
                note: "duals of the components of A18,xi",
            },
        ];
    }
    if group_is(g, "C 7 : 3 : C 6") {
        return vec![
            MergeRule {
                name: "A7(3,2)",
                components: vec![Matcher::orders(2, 21), Matcher::orders(14, 3)],
                rep: 0,
                gh_type: None,
                note: "the two classes give isomorphic algebras",
            },
            MergeRule {
                name: "A7(2,3)",
                components: vec![Matcher::orders(21, 2), Matcher::orders(3, 14)],
                rep: 1,
                gh_type: None,
                note: "the two classes give isomorphic algebras",
            },
        ];
    }
    Vec::new()
}

fn question_rules(g: &Arc<GroupTable>) -> Vec<QuestionRule> {
    if group_is(g, "C 5 : 2 : C 20") {
        return vec![QuestionRule {
            name: "shared-invariants-20",
            matchers: vec![
                Matcher::orders(4, 25),
                Matcher::orders(20, 5),
                Matcher::orders(100, 25),
            ],
            note: "all computed invariants agree; isomorphism open, classes kept distinct",
        }];
    }
    if group_is(g, "A 4 x C 2") {
        return vec![QuestionRule {
            name: "shared-invariants-8",
            matchers: vec![
                Matcher::orders(2, 12),
                Matcher::orders(8, 3),
                Matcher::orders(4, 6),
                Matcher::orders(4, 24),
                Matcher::orders(8, 12),
            ],
            note: "all computed invariants agree; isomorphism open, classes kept distinct",
        }];
    }
    Vec::new()
}

pub(crate) fn assemble(
    cl: &mut Classifier,
    mut classes: Vec<DatumClass>,
    raw_cases: Vec<RawCase>,
) -> Result<ClassificationReport> {
    // order every class by (intersection order, canonical key) and remap duals
    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by_key(|&i| (classes[i].intersection_order, classes[i].rep.key()));
    let mut newpos = vec![0usize; classes.len()];
    for (new, &old) in order.iter().enumerate() {
        newpos[old] = new;
    }
    let mut all: Vec<DatumClass> = Vec::with_capacity(classes.len());
    for &old in &order {
        let mut c = classes[old].clone();
        c.dual_of = newpos[c.dual_of];
        all.push(c);
    }
    classes.clear();

    let nontrivial: Vec<usize> = (0..all.len()).filter(|&i| !all[i].trivial).collect();

    // merge units over non-trivial classes
    let mut unit_root: Vec<usize> = (0..all.len()).collect();
    let mut unit_info: HashMap<usize, (String, usize, Option<String>)> = HashMap::new();
    let mut merges_applied: Vec<MergeRecord> = Vec::new();
    for rule in merge_rules(&cl.g) {
        let mut comp: Vec<usize> = Vec::new();
        let mut ok = true;
        for m in &rule.components {
            let mut hits = Vec::new();
            for &i in &nontrivial {
                if m.matches(cl, &all[i])? {
                    hits.push(i);
                }
            }
            if hits.len() != 1 {
                ok = false;
                break;
            }
            comp.push(hits[0]);
        }
        if !ok {
            continue;
        }
        let root = *comp.iter().min().unwrap();
        for &i in &comp {
            unit_root[i] = root;
        }
        unit_info.insert(
            root,
            (
                rule.name.to_string(),
                comp[rule.rep],
                rule.gh_type.map(|s| s.to_string()),
            ),
        );
        let mut members = comp.clone();
        members.sort_unstable();
        merges_applied.push(MergeRecord {
            name: rule.name.to_string(),
            members,
            asserted: true,
            note: rule.note.to_string(),
        });
    }
    for rule in question_rules(&cl.g) {
        let mut members = Vec::new();
        for m in &rule.matchers {
            for &i in &nontrivial {
                if m.matches(cl, &all[i])? {
                    members.push(i);
                }
            }
        }
        members.sort_unstable();
        members.dedup();
        if members.len() >= 2 {
            merges_applied.push(MergeRecord {
                name: rule.name.to_string(),
                members,
                asserted: false,
                note: rule.note.to_string(),
            });
        }
    }

    // build post-merge rows grouped in dual pairs
    let mut roots: Vec<usize> = nontrivial.iter().map(|&i| unit_root[i]).collect();
    roots.sort_unstable();
    roots.dedup();
    let members_of = |root: usize| -> Vec<usize> {
        nontrivial
            .iter()
            .copied()
            .filter(|&i| unit_root[i] == root)
            .collect()
    };
    let rep_of = |root: usize| -> usize {
        unit_info.get(&root).map(|(_, r, _)| *r).unwrap_or(root)
    };
    let sort_key = |root: usize| {
        let r = rep_of(root);
        (all[r].intersection_order, all[r].rep.key())
    };
    let mut ordered = roots.clone();
    ordered.sort_by_key(|&r| sort_key(r));
    let mut emitted: HashMap<usize, usize> = HashMap::new();
    let mut rows: Vec<DatumClass> = Vec::new();
    let mut pending_dual: Vec<(usize, usize)> = Vec::new();
    for &root in &ordered {
        if emitted.contains_key(&root) {
            continue;
        }
        let dual_root = unit_root[all[rep_of(root)].dual_of];
        for r in [root, dual_root] {
            if emitted.contains_key(&r) {
                continue;
            }
            let rep = rep_of(r);
            let mut row = all[rep].clone();
            if let Some((name, _, gh)) = unit_info.get(&r) {
                row.name = Some(name.clone());
                if let Some(t) = gh {
                    row.gh_type = Some(t.clone());
                }
            }
            row.merged_from = members_of(r);
            emitted.insert(r, rows.len());
            pending_dual.push((rows.len(), unit_root[all[rep].dual_of]));
            rows.push(row);
        }
    }
    for (i, droot) in pending_dual {
        rows[i].dual_of = emitted[&droot];
    }

    Ok(ClassificationReport {
        group: cl.g.provenance.clone(),
        classes: rows,
        all_classes: all,
        raw_cases,
        merges_applied,
    })
}

fn esc(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn json_opt_str(v: &Option<String>) -> String {
    match v {
        Some(s) => format!("\"{}\"", esc(s)),
        None => "null".to_string(),
    }
}

fn json_usize_list(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", items.join(","))
}

fn json_u64_list(v: &[u64]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", items.join(","))
}

fn class_json(c: &DatumClass, indent: &str) -> String {
    let mut s = String::new();
    s.push_str(&format!("{indent}{{\n"));
    s.push_str(&format!(
        "{indent}  \"F\": {},\n",
        json_usize_list(&c.rep.f.members)
    ));
    s.push_str(&format!(
        "{indent}  \"Gamma\": {},\n",
        json_usize_list(&c.rep.gamma.members)
    ));
    s.push_str(&format!(
        "{indent}  \"abelian_extension\": {},\n",
        c.abelian_extension
    ));
    s.push_str(&format!(
        "{indent}  \"alpha\": {},\n",
        json_u64_list(&c.rep.alpha)
    ));
    s.push_str(&format!(
        "{indent}  \"beta\": {},\n",
        json_u64_list(&c.rep.beta)
    ));
    s.push_str(&format!("{indent}  \"cocommutative\": {},\n", c.cocommutative));
    s.push_str(&format!("{indent}  \"commutative\": {},\n", c.commutative));
    s.push_str(&format!("{indent}  \"dual_of\": {},\n", c.dual_of));
    s.push_str(&format!("{indent}  \"f_type\": \"{}\",\n", esc(&c.f_type)));
    s.push_str(&format!(
        "{indent}  \"gamma_type\": \"{}\",\n",
        esc(&c.gamma_type)
    ));
    s.push_str(&format!("{indent}  \"gh_order\": {},\n", c.gh_order));
    s.push_str(&format!(
        "{indent}  \"gh_type\": {},\n",
        json_opt_str(&c.gh_type)
    ));
    s.push_str(&format!(
        "{indent}  \"intersection_order\": {},\n",
        c.intersection_order
    ));
    s.push_str(&format!(
        "{indent}  \"merged_from\": {},\n",
        json_usize_list(&c.merged_from)
    ));
    s.push_str(&format!("{indent}  \"name\": {},\n", json_opt_str(&c.name)));
    s.push_str(&format!("{indent}  \"orbit_size\": {},\n", c.orbit_size));
    s.push_str(&format!("{indent}  \"trivial\": {},\n", c.trivial));
    s.push_str(&format!(
        "{indent}  \"twist\": {}\n",
        json_opt_str(&c.twist)
    ));
    s.push_str(&format!("{indent}}}"));
    s
}

/// Deterministic JSON rendering of a report; with `include_all` the full
/// pre-merge class list is added under "all_classes".
pub fn export_json(r: &ClassificationReport, include_all: bool) -> String {
    let mut s = String::new();
    s.push_str("{\n");
    s.push_str(&format!("  \"group\": \"{}\",\n", esc(&r.group)));
    s.push_str("  \"classes\": [\n");
    let lines: Vec<String> = r.classes.iter().map(|c| class_json(c, "    ")).collect();
    s.push_str(&lines.join(",\n"));
    if !r.classes.is_empty() {
        s.push('\n');
    }
    s.push_str("  ],\n");
    if include_all {
        s.push_str("  \"all_classes\": [\n");
        let lines: Vec<String> = r
            .all_classes
            .iter()
            .map(|c| class_json(c, "    "))
            .collect();
        s.push_str(&lines.join(",\n"));
        if !r.all_classes.is_empty() {
            s.push('\n');
        }
        s.push_str("  ],\n");
    }
    s.push_str("  \"raw_cases\": [\n");
    let lines: Vec<String> = r
        .raw_cases
        .iter()
        .map(|c| {
            format!(
                "    {{\"F\": {}, \"Gamma\": {}, \"f_type\": \"{}\", \"gamma_type\": \"{}\", \"intersection_order\": {}}}",
                json_usize_list(&c.f_members),
                json_usize_list(&c.gamma_members),
                esc(&c.f_type),
                esc(&c.gamma_type),
                c.intersection_order
            )
        })
        .collect();
    s.push_str(&lines.join(",\n"));
    if !r.raw_cases.is_empty() {
        s.push('\n');
    }
    s.push_str("  ],\n");
    s.push_str("  \"merges_applied\": [\n");
    let lines: Vec<String> = r
        .merges_applied
        .iter()
        .map(|m| {
            format!(
                "    {{\"asserted\": {}, \"members\": {}, \"name\": \"{}\", \"note\": \"{}\"}}",
                m.asserted,
                json_usize_list(&m.members),
                esc(&m.name),
                esc(&m.note)
            )
        })
        .collect();
    s.push_str(&lines.join(",\n"));
    if !r.merges_applied.is_empty() {
        s.push('\n');
    }
    s.push_str("  ]\n}\n");
    s
}

fn class_flag(trivial: bool) -> &'static str {
    if trivial {
        "1"
    } else {
        "!=1"
    }
}

fn markdown_rows(out: &mut String, list: &[DatumClass]) {
    out.push_str("| # | F | alpha | Gamma | beta | G(H) | notes |\n");
    out.push_str("|---|---|-------|-------|------|------|-------|\n");
    for (i, c) in list.iter().enumerate() {
        let gh = match &c.gh_type {
            Some(t) => t.clone(),
            None => format!("order {}", c.gh_order),
        };
        let mut notes: Vec<String> = Vec::new();
        if let Some(n) = &c.name {
            notes.push(n.clone());
        }
        if let Some(t) = &c.twist {
            notes.push(format!("twist:{t}"));
        }
        if c.trivial {
            notes.push("trivial".to_string());
        }
        notes.push(format!("dual of #{}", c.dual_of + 1));
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} |\n",
            i + 1,
            c.f_type,
            class_flag(c.rep.alpha_trivial()),
            c.gamma_type,
            class_flag(c.rep.beta_trivial()),
            gh,
            notes.join(", ")
        ));
    }
}

/// Deterministic markdown rendering of a report.
pub fn export_markdown(r: &ClassificationReport, include_all: bool) -> String {
    let mut s = String::new();
    s.push_str(&format!("# Classification over {}\n\n", r.group));
    s.push_str("## Classes\n\n");
    markdown_rows(&mut s, &r.classes);
    if include_all {
        s.push_str("\n## All classes before merging\n\n");
        markdown_rows(&mut s, &r.all_classes);
    }
    s.push_str("\n## Raw cases\n\n");
    s.push_str("| # | F | Gamma | intersection |\n|---|---|-------|-------------|\n");
    for (i, c) in r.raw_cases.iter().enumerate() {
        s.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            i + 1,
            c.f_type,
            c.gamma_type,
            c.intersection_order
        ));
    }
    if !r.merges_applied.is_empty() {
        s.push_str("\n## Merges\n\n");
        for m in &r.merges_applied {
            let kind = if m.asserted { "merged" } else { "annotation" };
            s.push_str(&format!(
                "- {} ({}): classes {:?}; {}\n",
                m.name, kind, m.members, m.note
            ));
        }
    }
    s
}
