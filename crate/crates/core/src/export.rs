//! Serialized forms of built graphs and sweeps: JSON (`divgraph/1`), DOT,
//! CSV and a plain-text summary. Every writer is deterministic.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde_json::{json, Map, Value};

use crate::error::{capacity, Result};
use crate::graph::{build_d, components, d_connectivity, size_set, ComponentReport, SizeSet, UGraph, Vertex};
use crate::group::Group;
use crate::verify::Budgets;

pub const SCHEMA: &str = "divgraph/1";

/// A built graph together with what it was built from.
pub struct GraphDocument<'a> {
    /// Degree, when the set is the class-size set of S_n or A_n.
    pub n: Option<u32>,
    pub group: Option<Group>,
    pub set: &'a SizeSet,
    pub graph: &'a UGraph,
    pub report: &'a ComponentReport,
}

impl GraphDocument<'_> {
    fn index(&self) -> HashMap<&Vertex, usize> {
        self.graph.vertices().iter().enumerate().map(|(i, v)| (v, i)).collect()
    }

    fn component_indices(&self) -> Vec<Vec<usize>> {
        let index = self.index();
        self.report.components.iter().map(|c| c.iter().map(|v| index[v]).collect()).collect()
    }

    fn origins(&self, v: &Vertex) -> &[String] {
        match v {
            Vertex::Size(x) => self.set.position(x).map_or(&[], |i| &self.set.get(i).origins),
            Vertex::Prime(_) => &[],
        }
    }

    fn title(&self) -> String {
        match (self.group, self.n) {
            (Some(g), Some(n)) => format!("{}({g}_{n})", self.graph.kind()),
            _ => format!("{}(X)", self.graph.kind()),
        }
    }

    pub fn to_json(&self) -> Value {
        let vertices: Vec<Value> = self
            .graph
            .vertices()
            .iter()
            .map(|v| match v {
                Vertex::Prime(p) => json!({"key": p.to_string(), "part": "prime"}),
                Vertex::Size(x) => {
                    let mut obj = Map::new();
                    obj.insert("key".into(), x.to_string().into());
                    obj.insert("part".into(), "size".into());
                    if let Some(i) = self.set.position(x) {
                        let entry = self.set.get(i);
                        let factors: Map<String, Value> =
                            entry.factored.factors().iter().map(|&(p, e)| (p.to_string(), e.into())).collect();
                        obj.insert("factors".into(), Value::Object(factors));
                        obj.insert("origins".into(), entry.origins.clone().into());
                    }
                    Value::Object(obj)
                }
            })
            .collect();
        let index = self.index();
        let edges: Vec<[usize; 2]> = self.graph.edges().map(|(a, b)| [a, b]).collect();
        json!({
            "schema": SCHEMA,
            "n": self.n,
            "group": self.group,
            "kind": self.graph.kind(),
            "null_graph": self.report.null_graph,
            "vertices": vertices,
            "edges": edges,
            "components": self.component_indices(),
            "diameters": self.report.diameters,
            "overall_diameter": self.report.overall_diameter(),
            "isolated": self.report.isolated.iter().map(|v| index[v]).collect::<Vec<_>>(),
        })
    }

    /// Graphviz source; each component is a cluster.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{}\" {{", self.title());
        if self.report.null_graph {
            let _ = writeln!(out, "  label=\"null graph\";");
        }
        let diameters = self.report.diameters.as_deref();
        for (c, members) in self.component_indices().iter().enumerate() {
            let _ = writeln!(out, "  subgraph cluster_{c} {{");
            match diameters {
                Some(d) => {
                    let _ = writeln!(out, "    label=\"component {c}, diameter {}\";", d[c]);
                }
                None => {
                    let _ = writeln!(out, "    label=\"component {c}\";");
                }
            }
            for &v in members {
                let vertex = &self.graph.vertices()[v];
                let mut label = match vertex {
                    Vertex::Prime(p) => format!("p={p}"),
                    Vertex::Size(x) => x.to_string(),
                };
                for o in self.origins(vertex) {
                    label.push_str("\\n");
                    label.push_str(o);
                }
                let shape = if matches!(vertex, Vertex::Prime(_)) { ", shape=box" } else { "" };
                let _ = writeln!(out, "    v{v} [label=\"{label}\"{shape}];");
            }
            let _ = writeln!(out, "  }}");
        }
        for (a, b) in self.graph.edges() {
            let _ = writeln!(out, "  v{a} -- v{b};");
        }
        out.push_str("}\n");
        out
    }

    /// One row per vertex. With `factored`, a `factors` column such as `2^3*3*5`.
    pub fn to_csv(&self, factored: bool) -> String {
        let mut component_of = vec![0usize; self.graph.vertex_count()];
        for (c, members) in self.component_indices().iter().enumerate() {
            for &v in members {
                component_of[v] = c;
            }
        }
        let mut out = String::from("index,key,part,degree,component,origins");
        if factored {
            out.push_str(",factors");
        }
        out.push('\n');
        for (i, v) in self.graph.vertices().iter().enumerate() {
            let part = if matches!(v, Vertex::Prime(_)) { "prime" } else { "size" };
            let origins = self.origins(v).join(";");
            let _ = write!(out, "{i},{v},{part},{},{},{}", self.graph.degree(i), component_of[i], csv_field(&origins));
            if factored {
                let f = match v {
                    Vertex::Size(x) => self.set.position(x).map(|k| factor_string(self.set, k)).unwrap_or_default(),
                    Vertex::Prime(p) => p.to_string(),
                };
                let _ = write!(out, ",{f}");
            }
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.title());
        if self.report.null_graph {
            let _ = writeln!(out, "null graph (no vertices)");
            return out;
        }
        let _ = writeln!(
            out,
            "vertices {}  edges {}  components {}",
            self.graph.vertex_count(),
            self.graph.edge_count(),
            self.report.component_count()
        );
        if let Some(d) = self.report.overall_diameter() {
            let _ = writeln!(out, "diameter {d}");
        }
        for (c, members) in self.report.components.iter().enumerate() {
            let keys: Vec<String> = members.iter().map(Vertex::to_string).collect();
            let diameter = self.report.diameters.as_ref().map(|d| format!(" (diameter {})", d[c])).unwrap_or_default();
            let _ = writeln!(out, "  component {c}{diameter}: {}", keys.join(" "));
        }
        out
    }
}

fn factor_string(set: &SizeSet, i: usize) -> String {
    set.get(i)
        .factored
        .factors()
        .iter()
        .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

/// One line of a degree sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub n: u32,
    pub group: Group,
    pub vertices: usize,
    pub edges: u64,
    pub components: usize,
    pub component_sizes: Vec<usize>,
    /// `None` above the diameter budget.
    pub diameter: Option<u32>,
    pub wall_ms: Option<f64>,
}

pub const SWEEP_HEADER: &str = "n,group,vertices,edges,components,component_sizes,diameter,wall_ms";

impl SweepRow {
    pub fn to_csv_line(&self) -> String {
        let sizes: Vec<String> = self.component_sizes.iter().map(usize::to_string).collect();
        format!(
            "{},{},{},{},{},{},{},{}",
            self.n,
            self.group,
            self.vertices,
            self.edges,
            self.components,
            sizes.join(";"),
            self.diameter.map(|d| d.to_string()).unwrap_or_default(),
            self.wall_ms.map(|t| format!("{t:.3}")).unwrap_or_default()
        )
    }
}

/// Computes one row for `D(G_n)`. Wall time is filled in only when `timings` is set.
pub fn sweep_row(n: u32, group: Group, budgets: &Budgets, timings: bool) -> Result<SweepRow> {
    if n > budgets.max_build_n {
        return Err(capacity(format!("graph construction is capped at n = {}, got n = {n}", budgets.max_build_n)));
    }
    let start = Instant::now();
    let set = size_set(n, group)?;
    let conn = d_connectivity(&set);
    let diameter = if n <= budgets.max_diameter_n { components(&build_d(&set)?).overall_diameter() } else { None };
    let mut sizes: Vec<usize> = conn.members().iter().map(Vec::len).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Ok(SweepRow {
        n,
        group,
        vertices: set.len(),
        edges: conn.edge_count,
        components: conn.component_count(),
        component_sizes: sizes,
        diameter,
        wall_ms: timings.then(|| start.elapsed().as_secs_f64() * 1e3),
    })
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(SWEEP_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.to_csv_line());
        out.push('\n');
    }
    out
}
