//! `polysphere`: catalog, edge solver, cut templates and meshes from the command line.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use polysphere::catalog::{catalog, catalog_lookup, solid_report, SolidReport};
use polysphere::fabrication::{default_color_map, layout_templates, render_svg, seam_budget, SeamReport};
use polysphere::mesh::{build_solid_mesh, export_obj, group_name};
use polysphere::solver::{compare_methods, inscribed_fit_edge, surface_match_edge};
use polysphere::{EdgeSolution, MaterialBudget, MeshScale, SolidRecord, SphereSpec};

#[derive(Parser, Debug)]
#[command(name = "polysphere", version, about = "Geometry of sphere-approximating polyhedra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the Platonic and Archimedean solids.
    Catalog {
        /// Show a single solid.
        #[arg(long)]
        solid: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Solve for the common panel side covering a sphere.
    Solve {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Method::SurfaceMatch)]
        method: Method,
        /// Also write the report into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write SVG cut templates and a seam report.
    Template {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Method::SurfaceMatch)]
        method: Method,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write a Wavefront OBJ mesh of the solid.
    Mesh {
        #[command(flatten)]
        target: Target,
        /// Scale so every edge has this length (cm).
        #[arg(long, value_parser = positive, conflicts_with = "scale_radius")]
        scale_edge: Option<f64>,
        /// Scale so the circumradius is this length (cm); defaults to the sphere radius.
        #[arg(long, value_parser = positive)]
        scale_radius: Option<f64>,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct Target {
    #[arg(long, default_value = "truncated-icosahedron")]
    solid: String,
    /// Sphere radius in cm.
    #[arg(long, value_parser = positive, conflicts_with = "diameter")]
    radius: Option<f64>,
    /// Sphere diameter in cm [default: 25].
    #[arg(long, value_parser = positive)]
    diameter: Option<f64>,
}

impl Target {
    fn sphere(&self) -> Result<SphereSpec> {
        Ok(match (self.radius, self.diameter) {
            (Some(r), _) => SphereSpec::new(r)?,
            (None, Some(d)) => SphereSpec::from_diameter(d)?,
            (None, None) => SphereSpec::from_diameter(25.0)?,
        })
    }

    fn solid(&self) -> Result<&'static SolidRecord> {
        Ok(catalog_lookup(&self.solid)?)
    }
}

#[derive(Args, Debug)]
struct BudgetArgs {
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    balls: u32,
    /// Sheet width, cm.
    #[arg(long = "sheet-w", default_value_t = 100.0, value_parser = positive)]
    sheet_w: f64,
    /// Sheet height, cm.
    #[arg(long = "sheet-h", default_value_t = 70.0, value_parser = positive)]
    sheet_h: f64,
    /// Gap between cut-outs and sheet margin, cm.
    #[arg(long, default_value_t = 0.5, value_parser = non_negative)]
    gap: f64,
    /// Thread available, cm.
    #[arg(long, default_value_t = 5000.0, value_parser = positive)]
    thread: f64,
    #[arg(long, default_value_t = 2000, value_parser = clap::value_parser!(u32).range(1..))]
    pins: u32,
    /// Thread passes per edge.
    #[arg(long, default_value_t = 1.0, value_parser = positive)]
    stitch: f64,
}

impl BudgetArgs {
    fn budget(&self, sphere: SphereSpec) -> MaterialBudget {
        MaterialBudget {
            balls: self.balls,
            sphere_diameter: sphere.diameter(),
            thread_available: self.thread,
            pins_available: self.pins,
            sheet_width: self.sheet_w,
            sheet_height: self.sheet_h,
            gap: self.gap,
            stitch_multiplier: self.stitch,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    SurfaceMatch,
    #[value(alias = "inscribed-fit")]
    Inscribed,
    Compare,
}

fn positive(s: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v > 0.0 => Ok(v),
        Ok(v) => Err(format!("must be a positive length, got {v}")),
        Err(e) => Err(e.to_string()),
    }
}

fn non_negative(s: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v >= 0.0 => Ok(v),
        Ok(v) => Err(format!("must be non-negative, got {v}")),
        Err(e) => Err(e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Catalog { solid, format } => cmd_catalog(solid.as_deref(), format),
        Command::Solve { target, method, out, format } => cmd_solve(&target, method, out.as_deref(), format),
        Command::Template { target, method, budget, out, format } => {
            cmd_template(&target, method, &budget, &out, format)
        }
        Command::Mesh { target, scale_edge, scale_radius, out, format } => {
            cmd_mesh(&target, scale_edge, scale_radius, &out, format)
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

// Drops trailing zeros: 625.000000 -> 625, 156.250000 -> 156.25.
fn trim(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    s.to_string()
}

fn catalog_line(r: &SolidReport) -> String {
    let s = &r.record;
    let ratio = r.roundness_ratio.map(|x| format!("{x:.4}")).unwrap_or_else(|| "-".into());
    format!(
        "{:<28} {:<11} {:>3} {:>4} {:>4}  {:<5} {:>7}  {}",
        s.name,
        s.family.to_string(),
        s.faces,
        s.edges,
        s.vertices,
        if r.euler { "ok" } else { "FAIL" },
        ratio,
        s.inventory
    )
}

fn cmd_catalog(solid: Option<&str>, format: Format) -> Result<()> {
    let reports: Vec<SolidReport> = match solid {
        Some(name) => vec![solid_report(catalog_lookup(name)?)],
        None => catalog().iter().map(solid_report).collect(),
    };
    match format {
        Format::Json if solid.is_some() => print!("{}", to_json(&reports[0])?),
        Format::Json => print!("{}", to_json(&reports)?),
        Format::Text => {
            println!(
                "{:<28} {:<11} {:>3} {:>4} {:>4}  {:<5} {:>7}  faces",
                "solid", "family", "F", "E", "V", "euler", "ratio"
            );
            for r in &reports {
                println!("{}", catalog_line(r));
            }
            for r in &reports {
                if let Some(note) = &r.record.note {
                    println!("note ({}): {note}", r.record.name);
                }
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct SolveReport<'a> {
    sphere: SphereSpec,
    solid: &'a str,
    #[serde(flatten)]
    solution: &'a EdgeSolution,
    side_display: f64,
    side_sq_display: f64,
}

fn solution_text(sphere: SphereSpec, solid: &SolidRecord, sol: &EdgeSolution) -> String {
    let mut out = String::new();
    out += &format!(
        "solid: {}   sphere: r = {} cm (d = {} cm)\n",
        solid.name,
        trim(sphere.radius),
        trim(sphere.diameter())
    );
    out += &format!("method: {}\n", sol.method);
    let r2 = 4.0 * sphere.radius * sphere.radius;
    out += &format!("sphere surface: 4πr² = {}π = {:.6} cm²\n", trim(r2), sol.sphere_surface);
    for (n, area) in &sol.coverage {
        out += &format!(
            "  {:>3} {:<10} {:>12.6} cm²\n",
            solid.inventory.count(*n),
            group_name(*n as usize),
            area
        );
    }
    out += &format!("flat total: {:.6} cm² (flat/sphere {:.6})\n", sol.flat_total, sol.flat_to_sphere_ratio);
    out += &format!("x² ≈ {} cm²   (full precision {:.6} cm²)\n", trim(sol.side_sq_display()), sol.side_sq);
    out += &format!("x  ≈ {:.1} cm   (full precision {:.6} cm)\n", sol.side_display(), sol.side);
    out
}

fn solve_single(sphere: SphereSpec, solid: &SolidRecord, method: Method) -> Result<EdgeSolution> {
    Ok(match method {
        Method::SurfaceMatch => surface_match_edge(sphere, &solid.inventory)?,
        Method::Inscribed => inscribed_fit_edge(sphere, solid)?,
        Method::Compare => bail!("--method compare does not produce a single panel side; use surface-match or inscribed"),
    })
}

fn cmd_solve(target: &Target, method: Method, out: Option<&Path>, format: Format) -> Result<()> {
    let sphere = target.sphere()?;
    let solid = target.solid()?;
    let (text, json) = if method == Method::Compare {
        let cmp = compare_methods(sphere, solid)?;
        let mut text = solution_text(sphere, solid, &cmp.surface_match);
        text += "\n";
        text += &solution_text(sphere, solid, &cmp.inscribed_fit);
        text += &format!(
            "\nside ratio (surface-match / inscribed-fit): {:.6}\nflat-area deficit of inscribed fit: {:.6} cm²\n",
            cmp.side_ratio, cmp.flat_deficit
        );
        (text, to_json(&cmp)?)
    } else {
        let sol = solve_single(sphere, solid, method)?;
        let report = SolveReport {
            sphere,
            solid: &solid.name,
            solution: &sol,
            side_display: sol.side_display(),
            side_sq_display: sol.side_sq_display(),
        };
        (solution_text(sphere, solid, &sol), to_json(&report)?)
    };
    let shown = match format {
        Format::Text => &text,
        Format::Json => &json,
    };
    print!("{shown}");
    if let Some(dir) = out {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let name = match format {
            Format::Text => "solve_report.txt",
            Format::Json => "solve_report.json",
        };
        let path = dir.join(name);
        fs::write(&path, shown).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct SheetFile {
    path: String,
    color: String,
    placements: usize,
    counts: std::collections::BTreeMap<u32, usize>,
}

#[derive(Serialize)]
struct TemplateManifest {
    solid: String,
    side: f64,
    sheets: Vec<SheetFile>,
    seam_report: String,
    seam: SeamReport,
}

fn cmd_template(target: &Target, method: Method, args: &BudgetArgs, out: &Path, format: Format) -> Result<()> {
    let sphere = target.sphere()?;
    let solid = target.solid()?;
    let sol = solve_single(sphere, solid, method)?;
    let budget = args.budget(sphere);
    let colors = default_color_map(&solid.inventory);
    let sheets = layout_templates(&solid.inventory, sol.side, &budget, &colors)?;
    let seam = seam_budget(&solid.inventory, sol.side, &budget)?;

    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    let mut files = Vec::new();
    let mut per_color = std::collections::BTreeMap::new();
    for sheet in &sheets {
        let k = per_color.entry(sheet.color).or_insert(0);
        *k += 1;
        let path = out.join(format!("{}_sheet_{:02}.svg", sheet.color, k));
        fs::write(&path, render_svg(sheet)?).with_context(|| format!("writing {}", path.display()))?;
        let counts = solid.inventory.iter().map(|(n, _)| (n, sheet.count(n))).filter(|(_, c)| *c > 0).collect();
        files.push(SheetFile {
            path: path.display().to_string(),
            color: sheet.color.to_string(),
            placements: sheet.placements.len(),
            counts,
        });
    }
    let seam_path = out.join("seam_report.json");
    fs::write(&seam_path, to_json(&seam)?).with_context(|| format!("writing {}", seam_path.display()))?;

    let manifest = TemplateManifest {
        solid: solid.name.clone(),
        side: sol.side,
        sheets: files,
        seam_report: seam_path.display().to_string(),
        seam,
    };
    match format {
        Format::Json => print!("{}", to_json(&manifest)?),
        Format::Text => {
            println!("{} panels, side {:.4} cm ({}), {} ball(s)", manifest.solid, sol.side, sol.method, budget.balls);
            for f in &manifest.sheets {
                let counts: Vec<String> = f
                    .counts
                    .iter()
                    .map(|(n, c)| format!("{c} {}", group_name(*n as usize)))
                    .collect();
                println!("  {}  [{}] {}", f.path, f.color, counts.join(", "));
            }
            let s = &manifest.seam;
            println!(
                "  {}  thread {:.1} cm of {} cm ({}), {} pins per edge",
                manifest.seam_report,
                s.seam_length,
                trim(s.thread_available),
                if s.thread_ok { "ok" } else { "SHORT" },
                s.pins_per_edge
            );
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct MeshManifest {
    path: String,
    solid: String,
    edge: f64,
    circumradius: f64,
    vertices: usize,
    faces: usize,
    edges: usize,
}

fn cmd_mesh(
    target: &Target,
    scale_edge: Option<f64>,
    scale_radius: Option<f64>,
    out: &Path,
    format: Format,
) -> Result<()> {
    let solid = target.solid()?;
    let scale = match (scale_edge, scale_radius) {
        (Some(x), _) => MeshScale::ByEdge(x),
        (None, Some(r)) => MeshScale::ByCircumradius(r),
        (None, None) => MeshScale::ByCircumradius(target.sphere()?.radius),
    };
    let mesh = build_solid_mesh(solid, scale)?;
    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    let path = out.join(format!("{}.obj", solid.name));
    fs::write(&path, export_obj(&mesh)).with_context(|| format!("writing {}", path.display()))?;
    let manifest = MeshManifest {
        path: path.display().to_string(),
        solid: solid.name.clone(),
        edge: mesh.edge,
        circumradius: mesh.circumradius(),
        vertices: mesh.vertices.len(),
        faces: mesh.faces.len(),
        edges: mesh.edges().len(),
    };
    match format {
        Format::Json => print!("{}", to_json(&manifest)?),
        Format::Text => println!(
            "{}  {}: {} v, {} f, {} edges, edge {:.6} cm, circumradius {:.6} cm",
            manifest.path,
            manifest.solid,
            manifest.vertices,
            manifest.faces,
            manifest.edges,
            manifest.edge,
            manifest.circumradius
        ),
    }
    Ok(())
}
