//! Thin command-line surface over the h4kit library: group tables, orbit
//! polytopes, cell censuses, subgroup branchings, dual polytopes, mesh
//! exports, and the paper-verification harness.
//!
//! Weight coefficients accept the scalar-literal grammar of
//! [`h4kit::GoldenScalar`]: rationals `p/q`, the golden ratio `t`, its
//! conjugate `s`, `r2` = √2, and `+ - * /` with parentheses — so
//! `--weight t,0,0,1` is legal.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use h4kit::branching::branch;
use h4kit::coxeter::SystemName;
use h4kit::dual::{dual_cell_geometry, dual_polytope};
use h4kit::geometry::{export_mesh, hull3, project_shells, MeshFormat};
use h4kit::golden::GoldenScalar as Gs;
use h4kit::orbit::{cell_census, orbit, WeightVector};
use h4kit::qgroups::{build_set, conjugacy_classes, SetName};
use h4kit::quat::Quaternion;
use h4kit::shared;
use h4kit::verify;

#[derive(Parser)]
#[command(
    name = "h4kit",
    about = "Exact constructions around the Coxeter group W(H4): orbits, branchings, duals",
    version
)]
struct Cli {
    /// Number of worker threads (default: all cores).  Outputs are
    /// byte-identical regardless of this setting.
    #[arg(long, global = true)]
    parallel: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SetArg {
    T,
    O,
    I,
}

#[derive(Subcommand)]
enum Command {
    /// Print the conjugacy classes of a binary polyhedral group (Table 1)
    Classes {
        /// Quaternion group: binary tetrahedral (t), octahedral (o), icosahedral (i)
        #[arg(value_enum)]
        set: SetArg,
    },
    /// Print structural tables of a Coxeter system
    Table {
        #[command(subcommand)]
        which: TableCommand,
    },
    /// Generate the orbit polytope of a dominant weight
    Orbit {
        #[arg(long, default_value = "h4")]
        group: String,
        /// Comma-separated coefficients in the scalar-literal grammar, e.g. `t,0,0,1`
        #[arg(long)]
        weight: String,
        /// Write the full vertex list (JSON) here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the cell census of a W(H4) orbit polytope
    Cells {
        #[arg(long)]
        weight: String,
    },
    /// Branch a W(H4) orbit under W(H3), W(A4), or W(A3)
    Branch {
        #[arg(long)]
        weight: String,
        #[arg(long)]
        subgroup: String,
        /// Write the table as JSON here (otherwise printed to stdout)
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Construct the dual of a W(H4) orbit polytope
    Dual {
        #[arg(long)]
        weight: String,
        /// 1-based node whose cell-center orbit is left unscaled
        /// (default: the library's anchor choice)
        #[arg(long)]
        anchor: Option<usize>,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Export the representative dual cell as a mesh (.off or .obj)
        #[arg(long)]
        mesh: Option<PathBuf>,
    },
    /// Export a 3D shell of a branched polytope as a polygon mesh
    Export {
        #[arg(long)]
        weight: String,
        /// Subgroup defining the projection: h3 or a3
        #[arg(long, default_value = "h3")]
        subgroup: String,
        /// Shell index (0-based, in decreasing height)
        #[arg(long)]
        shell: usize,
        /// Mesh format: off or obj
        #[arg(long, default_value = "off")]
        format: String,
        /// Output path
        out: PathBuf,
    },
    /// Replay every numeric claim of the paper and print pass/fail per claim
    VerifyPaper {
        /// Also write a machine-readable report here
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum TableCommand {
    /// Cartan matrix and its exact inverse
    Cartan {
        #[arg(long, default_value = "h4")]
        group: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.parallel {
        if n == 0 {
            eprintln!("error: --parallel must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .expect("rayon pool is configured once, before any parallel work");
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            eprintln!("run `h4kit --help` for usage");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Classes { set } => {
            let name = match set {
                SetArg::T => SetName::T,
                SetArg::O => SetName::O,
                SetArg::I => SetName::I,
            };
            let classes = conjugacy_classes(&build_set(name));
            let rows: Vec<Value> = classes
                .iter()
                .map(|c| {
                    json!({
                        "size": c.members.len(),
                        "element_order": c.element_order,
                        "representative": quat_str(&c.representative),
                    })
                })
                .collect();
            emit(&json!({ "set": format!("{name:?}"), "classes": rows }), None)?;
        }
        Command::Table { which } => match which {
            TableCommand::Cartan { group } => {
                let sys = parse_system(&group)?;
                let s = shared::system(sys);
                let render = |m: &[Vec<Gs>]| -> Vec<Vec<String>> {
                    m.iter()
                        .map(|row| row.iter().map(|e| e.to_string()).collect())
                        .collect()
                };
                emit(
                    &json!({
                        "group": format!("{sys:?}"),
                        "cartan": render(&s.cartan),
                        "cartan_inverse": render(&s.cartan_inv),
                    }),
                    None,
                )?;
            }
        },
        Command::Orbit { group, weight, out } => {
            let sys = parse_system(&group)?;
            let seed = parse_weight(sys, &weight)?;
            let poly = orbit(&seed).map_err(|e| e.to_string())?;
            let mut doc = json!({
                "group": format!("{sys:?}"),
                "weight": weight_strs(&seed),
                "vertex_count": poly.size(),
                "stabilizer_order": poly.stabilizer_order,
            });
            if out.is_some() {
                let verts: Vec<[String; 4]> = poly
                    .vertices
                    .iter()
                    .map(|q| std::array::from_fn(|i| q.0[i].to_string()))
                    .collect();
                doc["vertices"] = serde_json::to_value(verts).unwrap();
            }
            println!(
                "orbit W({sys:?})({}): {} vertices, stabilizer order {}",
                weight_strs(&seed).join(","),
                poly.size(),
                poly.stabilizer_order
            );
            if let Some(path) = out {
                write_json(&doc, &path)?;
            }
        }
        Command::Cells { weight } => {
            let seed = parse_weight(SystemName::H4, &weight)?;
            let census = cell_census(&seed).map_err(|e| e.to_string())?;
            let families: Vec<Value> = census
                .families
                .iter()
                .map(|f| {
                    json!({
                        "deleted_node": f.deleted_node,
                        "subsystem": f.subsystem,
                        "cell": f.label,
                        "cell_vertex_count": f.cell_vertex_count,
                        "cell_count": f.cell_count,
                        "cells_per_vertex": f.cells_per_vertex,
                    })
                })
                .collect();
            emit(
                &json!({
                    "weight": weight_strs(&seed),
                    "vertex_count": census.orbit_size,
                    "total_cells": census.total_cells(),
                    "families": families,
                }),
                None,
            )?;
        }
        Command::Branch { weight, subgroup, json: out } => {
            let seed = parse_weight(SystemName::H4, &weight)?;
            let sub = parse_system(&subgroup)?;
            if !matches!(sub, SystemName::H3 | SystemName::A4 | SystemName::A3) {
                return Err(format!("cannot branch under {sub:?}; use h3, a4, or a3"));
            }
            let table = branch(&seed, sub);
            let terms: Vec<Value> = table
                .terms
                .iter()
                .map(|t| {
                    json!({
                        "weight": t.weight.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "height": t.height.as_ref().map(|h| h.to_string()),
                        "multiplicity": t.multiplicity,
                    })
                })
                .collect();
            let doc = json!({
                "weight": weight_strs(&seed),
                "subgroup": format!("{sub:?}"),
                "term_count": table.terms.len(),
                "total_vertices": table.total_vertices(),
                "terms": terms,
            });
            if out.is_none() {
                for t in &table.terms {
                    let w: Vec<String> = t.weight.iter().map(|c| c.to_string()).collect();
                    let h = t
                        .height
                        .as_ref()
                        .map(|h| format!(" at height {h}"))
                        .unwrap_or_default();
                    let m = if t.multiplicity > 1 {
                        format!(" ×{}", t.multiplicity)
                    } else {
                        String::new()
                    };
                    println!("({}){h}{m}", w.join(","));
                }
                println!(
                    "{} terms, {} vertices total",
                    table.terms.len(),
                    table.total_vertices()
                );
            }
            if let Some(path) = out {
                write_json(&doc, &path)?;
            }
        }
        Command::Dual { weight, anchor, json: out, mesh } => {
            let seed = parse_weight(SystemName::H4, &weight)?;
            // default to the anchor convention of the paper section that
            // treats this seed, when there is one
            let anchor = anchor.or_else(|| verify::paper_anchor(&seed));
            let spec = dual_polytope(&seed, anchor).map_err(|e| e.to_string())?;
            let orbits: Vec<Value> = spec
                .orbits
                .iter()
                .map(|o| {
                    json!({
                        "node": o.node,
                        "cell": o.label,
                        "scale": o.scale.to_string(),
                        "is_anchor": o.is_anchor,
                        "center_count": o.count,
                        "radius": o.radius,
                    })
                })
                .collect();
            let doc = json!({
                "weight": weight_strs(&seed),
                "dual_vertex_count": spec.dual_vertex_count,
                "dual_cell_count": spec.dual_cell_count,
                "orbits": orbits,
            });
            if out.is_none() {
                for o in &spec.orbits {
                    let tag = if o.is_anchor { " (anchor)" } else { "" };
                    println!(
                        "node {} ({}): scale {}{tag}, {} centers, radius {:.6}",
                        o.node, o.label, o.scale, o.count, o.radius
                    );
                }
                println!(
                    "dual polytope: {} vertices, {} cells",
                    spec.dual_vertex_count, spec.dual_cell_count
                );
            }
            if let Some(path) = out {
                write_json(&doc, &path)?;
            }
            if let Some(path) = mesh {
                let format = mesh_format_for(&path)?;
                let points = dual_cell_geometry(&spec);
                let hull = hull3(&points).map_err(|e| e.to_string())?;
                export_mesh(&points, &hull.faces, &path, format).map_err(|e| e.to_string())?;
                println!("wrote representative dual cell to {}", path.display());
            }
        }
        Command::Export { weight, subgroup, shell, format, out } => {
            let seed = parse_weight(SystemName::H4, &weight)?;
            let sub = parse_system(&subgroup)?;
            if !matches!(sub, SystemName::H3 | SystemName::A3) {
                return Err(format!(
                    "shells are 3D projections; use --subgroup h3 or a3, not {sub:?}"
                ));
            }
            let format: MeshFormat = format.parse()?;
            let shells = project_shells(&seed, sub);
            let sh = shells.get(shell).ok_or_else(|| {
                format!("shell index {shell} out of range (0..{})", shells.len())
            })?;
            if sh.points.len() < 4 {
                return Err(format!(
                    "shell {shell} ({}, {} points) is degenerate; pick a shell with ≥ 4 points",
                    sh.label,
                    sh.points.len()
                ));
            }
            let hull = hull3(&sh.points).map_err(|e| e.to_string())?;
            export_mesh(&sh.points, &hull.faces, &out, format).map_err(|e| e.to_string())?;
            println!(
                "wrote shell {shell} ({}, {} vertices, {} faces) to {}",
                sh.label,
                sh.points.len(),
                hull.faces.len(),
                out.display()
            );
        }
        Command::VerifyPaper { json: out } => {
            let checks = verify::run_all();
            print!("{}", verify::render(&checks));
            if let Some(path) = &out {
                let doc = json!({
                    "tolerances": {
                        "radii": verify::RADII_TOL,
                        "congruence": verify::CONGRUENCE_TOL,
                    },
                    "checks": checks,
                });
                write_json(&doc, path)?;
            }
            if !verify::all_passed(&checks) {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_system(s: &str) -> Result<SystemName, String> {
    s.parse()
}

fn parse_weight(sys: SystemName, s: &str) -> Result<WeightVector, String> {
    let coeffs: Vec<Gs> = s
        .split(',')
        .map(|c| c.trim().parse::<Gs>())
        .collect::<Result<_, _>>()
        .map_err(|e| format!("bad weight `{s}`: {e}"))?;
    WeightVector::new(sys, coeffs).map_err(|e| e.to_string())
}

fn weight_strs(seed: &WeightVector) -> Vec<String> {
    seed.coeffs.iter().map(|c| c.to_string()).collect()
}

fn quat_str(q: &Quaternion) -> String {
    format!("[{}, {}, {}, {}]", q.0[0], q.0[1], q.0[2], q.0[3])
}

fn mesh_format_for(path: &std::path::Path) -> Result<MeshFormat, String> {
    match path.extension().and_then(|e| e.to_str()) {
        Some(ext) => ext.parse(),
        None => Err(format!(
            "cannot infer mesh format from `{}`; use a .off or .obj extension",
            path.display()
        )),
    }
}

/// Print a JSON document to stdout, or write it to `path` when given.
/// Rendering is fully deterministic: all structures are emitted in the
/// library's canonical (sorted) order.
fn emit(doc: &Value, path: Option<&std::path::Path>) -> Result<(), String> {
    match path {
        Some(p) => write_json(doc, p),
        None => {
            println!("{}", serde_json::to_string_pretty(doc).unwrap());
            Ok(())
        }
    }
}

fn write_json<T: serde::Serialize>(doc: &T, path: &std::path::Path) -> Result<(), String> {
    let mut bytes = serde_json::to_vec_pretty(doc).unwrap();
    bytes.push(b'\n');
    std::fs::write(path, bytes).map_err(|e| format!("cannot write {}: {e}", path.display()))
}
