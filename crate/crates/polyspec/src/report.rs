//! Machine-readable exports: a small deterministic JSON writer (sorted
//! keys, fixed 12-significant-digit float formatting) plus the concrete
//! report builders. Identical inputs produce byte-identical output, which
//! keeps golden-file tests stable across platforms.

use crate::groups::CharacterTable;
use crate::obstruction::{FixedSetReport, SmallCayleyObstruction, Sylow5Report};
use crate::polytopes::Graph;
use crate::spectra::{BlockSpectrum, SpectrumComparison, SpectrumMultiset};

/// JSON value with deterministic serialization.
#[derive(Clone, Debug)]
pub enum Json {
    Null,
    Bool(bool),
    Int(i64),
    Float(f64),
    Str(String),
    Arr(Vec<Json>),
    Obj(Vec<(String, Json)>),
}

impl Json {
    pub fn obj(fields: Vec<(&str, Json)>) -> Json {
        Json::Obj(fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
    }

    pub fn to_string_pretty(&self) -> String {
        let mut out = String::new();
        self.write(&mut out, 0);
        out.push('\n');
        out
    }

    fn write(&self, out: &mut String, indent: usize) {
        match self {
            Json::Null => out.push_str("null"),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Int(i) => out.push_str(&i.to_string()),
            Json::Float(f) => out.push_str(&format_float(*f)),
            Json::Str(s) => {
                out.push('"');
                for c in s.chars() {
                    match c {
                        '"' => out.push_str("\\\""),
                        '\\' => out.push_str("\\\\"),
                        '\n' => out.push_str("\\n"),
                        c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
                        c => out.push(c),
                    }
                }
                out.push('"');
            }
            Json::Arr(items) => {
                if items.is_empty() {
                    out.push_str("[]");
                    return;
                }
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push('\n');
                    out.push_str(&"  ".repeat(indent + 1));
                    item.write(out, indent + 1);
                }
                out.push('\n');
                out.push_str(&"  ".repeat(indent));
                out.push(']');
            }
            Json::Obj(fields) => {
                if fields.is_empty() {
                    out.push_str("{}");
                    return;
                }
                let mut sorted: Vec<&(String, Json)> = fields.iter().collect();
                sorted.sort_by(|a, b| a.0.cmp(&b.0));
                out.push('{');
                for (i, (k, v)) in sorted.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push('\n');
                    out.push_str(&"  ".repeat(indent + 1));
                    out.push('"');
                    out.push_str(k);
                    out.push_str("\": ");
                    v.write(out, indent + 1);
                }
                out.push('\n');
                out.push_str(&"  ".repeat(indent));
                out.push('}');
            }
        }
    }
}

/// 12 significant digits in scientific notation; −0 normalized.
pub fn format_float(f: f64) -> String {
    assert!(f.is_finite(), "non-finite value in report");
    let f = if f == 0.0 { 0.0 } else { f };
    format!("{f:.11e}")
}

/// Edge-list text export: a header line, then one "u v" pair per line,
/// zero-based and ascending.
pub fn edge_list_text(g: &Graph) -> String {
    let mut out = format!("# vertices={}\n", g.vertex_count());
    for &(a, b) in g.edges() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

pub fn graph_stats_json(g: &Graph) -> Json {
    Json::obj(vec![
        ("graph", Json::Str(g.name().to_string())),
        ("vertices", Json::Int(g.vertex_count() as i64)),
        ("edges", Json::Int(g.edge_count() as i64)),
        (
            "regular_degree",
            g.regular_degree()
                .map_or(Json::Null, |d| Json::Int(d as i64)),
        ),
        (
            "degree_histogram",
            Json::Arr(
                g.degree_histogram()
                    .into_iter()
                    .map(|(d, c)| Json::Arr(vec![Json::Int(d as i64), Json::Int(c as i64)]))
                    .collect(),
            ),
        ),
        ("connected", Json::Bool(g.is_connected())),
    ])
}

pub fn graph_adjacency_json(g: &Graph) -> Json {
    let adjacency: Vec<Json> = (0..g.vertex_count() as u32)
        .map(|v| {
            Json::Arr(
                g.neighbors(v)
                    .iter()
                    .map(|&w| Json::Int(w as i64))
                    .collect(),
            )
        })
        .collect();
    match graph_stats_json(g) {
        Json::Obj(mut fields) => {
            fields.push(("adjacency".to_string(), Json::Arr(adjacency)));
            Json::Obj(fields)
        }
        _ => unreachable!(),
    }
}

/// Character table export: classes with sizes and representative orders,
/// rows as complex pairs.
pub fn character_table_json(group_name: &str, ct: &CharacterTable) -> Json {
    let classes: Vec<Json> = ct
        .class_sizes
        .iter()
        .zip(&ct.class_rep_orders)
        .map(|(&size, &order)| {
            Json::obj(vec![
                ("size", Json::Int(size as i64)),
                ("representative_order", Json::Int(order as i64)),
            ])
        })
        .collect();
    let irreps: Vec<Json> = (0..ct.row_count())
        .map(|r| {
            Json::obj(vec![
                ("degree", Json::Int(ct.degrees[r] as i64)),
                (
                    "values",
                    Json::Arr(
                        ct.values[r]
                            .iter()
                            .map(|v| Json::Arr(vec![Json::Float(v.re), Json::Float(v.im)]))
                            .collect(),
                    ),
                ),
            ])
        })
        .collect();
    Json::obj(vec![
        ("group", Json::Str(group_name.to_string())),
        ("order", Json::Int(ct.group_order as i64)),
        ("class_count", Json::Int(ct.class_count() as i64)),
        ("classes", Json::Arr(classes)),
        ("irreps", Json::Arr(irreps)),
        (
            "row_orthogonality_residual",
            Json::Float(ct.row_orthogonality_residual()),
        ),
        (
            "column_orthogonality_residual",
            Json::Float(ct.column_orthogonality_residual()),
        ),
    ])
}

fn eigenvalues_json(s: &SpectrumMultiset) -> Json {
    Json::Arr(
        s.entries
            .iter()
            .map(|&(v, m)| {
                Json::obj(vec![
                    ("value", Json::Float(v)),
                    ("multiplicity", Json::Int(m as i64)),
                ])
            })
            .collect(),
    )
}

/// Spectrum report. `blocks` adds the per-irrep table of the block method;
/// `comparison` adds the verdict of the dual-method cross-check.
pub fn spectrum_json(
    graph_name: &str,
    method: &str,
    spectrum: &SpectrumMultiset,
    blocks: Option<&BlockSpectrum>,
    comparison: Option<(&SpectrumComparison, usize)>,
) -> Json {
    let mut fields = vec![
        ("graph", Json::Str(graph_name.to_string())),
        ("method", Json::Str(method.to_string())),
        ("dimension", Json::Int(spectrum.dimension() as i64)),
        ("eigenvalues", eigenvalues_json(spectrum)),
        ("zero_multiplicity", Json::Int(spectrum.zero_multiplicity() as i64)),
    ];
    if let Some(bs) = blocks {
        let per_irrep: Vec<Json> = bs
            .blocks
            .iter()
            .map(|b| {
                Json::obj(vec![
                    ("class_count_index", Json::Int(b.row as i64)),
                    ("degree", Json::Int(b.degree as i64)),
                    ("block_dim", Json::Int(b.block_dim as i64)),
                    (
                        "paired_with",
                        b.paired_with.map_or(Json::Null, |p| Json::Int(p as i64)),
                    ),
                    (
                        "eigenvalues",
                        Json::Arr(b.eigenvalues.iter().map(|&v| Json::Float(v)).collect()),
                    ),
                ])
            })
            .collect();
        fields.push(("per_irrep", Json::Arr(per_irrep)));
        fields.push((
            "projector_idempotency_residual",
            Json::Float(bs.idempotency_residual),
        ));
        fields.push((
            "projector_sum_residual",
            Json::Float(bs.projector_sum_residual),
        ));
    }
    if let Some((cmp, padding)) = comparison {
        fields.push((
            "comparison",
            Json::obj(vec![
                ("verdict", Json::Str(if cmp.ok { "pass" } else { "fail" }.into())),
                ("zero_padding", Json::Int(padding as i64)),
                ("max_deviation", Json::Float(cmp.max_deviation)),
                ("detail", Json::Str(cmp.detail.clone())),
            ]),
        ));
    }
    Json::obj(fields)
}

/// CSV export of eigenvalue/multiplicity pairs.
pub fn spectrum_csv(s: &SpectrumMultiset) -> String {
    let mut out = String::from("eigenvalue,multiplicity\n");
    for &(v, m) in &s.entries {
        out.push_str(&format!("{},{m}\n", format_float(v)));
    }
    out
}

pub fn obstruction_json(
    small: &SmallCayleyObstruction,
    sylow: &Sylow5Report,
    order5: &[FixedSetReport],
    g7200_order: usize,
    g14400_order: usize,
) -> Json {
    let classes: Vec<Json> = order5
        .iter()
        .map(|r| {
            Json::obj(vec![
                ("class_index", Json::Int(r.class_index as i64)),
                ("class_size", Json::Int(r.class_size as i64)),
                ("element_order", Json::Int(r.element_order as i64)),
                ("fixed_vertices", Json::Int(r.fixed_vertices as i64)),
                ("fixed_edges_setwise", Json::Int(r.fixed_edges_setwise as i64)),
                (
                    "fixed_edges_pointwise",
                    Json::Int(r.fixed_edges_pointwise as i64),
                ),
                (
                    "neighbor_orbit_profiles",
                    Json::Arr(
                        r.neighbor_profiles
                            .iter()
                            .map(|p| {
                                Json::Arr(p.iter().map(|&s| Json::Int(s as i64)).collect())
                            })
                            .collect(),
                    ),
                ),
            ])
        })
        .collect();
    Json::obj(vec![
        (
            "icosidodecahedron",
            Json::obj(vec![
                ("order30_subgroups", Json::Int(small.order30_count as i64)),
                ("order60_subgroups", Json::Int(small.order60_count as i64)),
                ("order120_subgroups", Json::Int(small.order120_count as i64)),
                ("no_cayley_structure", Json::Bool(small.no_cayley)),
            ]),
        ),
        (
            "sylow5",
            Json::obj(vec![
                ("five_part", Json::Int(sylow.five_part as i64)),
                ("subgroup_order", Json::Int(sylow.subgroup_order as i64)),
                ("abelian", Json::Bool(sylow.abelian)),
                ("exponent_five", Json::Bool(sylow.exponent_five)),
                ("conjugate_count", Json::Int(sylow.conjugate_count as i64)),
                (
                    "all_conjugates_product_form",
                    Json::Bool(sylow.all_conjugates_product_form),
                ),
                (
                    "diagonal_fixes_vertex_one",
                    Json::Bool(sylow.diagonal_fixes_vertex_one),
                ),
            ]),
        ),
        ("order5_classes", Json::Arr(classes)),
        (
            "isometry_orders",
            Json::obj(vec![
                ("orientation_preserving", Json::Int(g7200_order as i64)),
                ("full", Json::Int(g14400_order as i64)),
            ]),
        ),
        (
            "claims",
            Json::obj(vec![
                (
                    "all_profiles_in_1_5",
                    Json::Bool(order5.iter().all(|r| r.profile_sizes_ok())),
                ),
                (
                    "fixed_vertex_implies_fixed_edge",
                    Json::Bool(order5.iter().all(|r| r.fixed_edge_claim_ok())),
                ),
            ]),
        ),
    ])
}
