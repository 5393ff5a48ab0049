//! Command-line front end.
//!
//! Every command builds a [`Report`]: an ordered list of `key: value`
//! fields plus an exit code (0 success or true, 1 negative verdict or
//! pipeline failure, 2 bad input). `--machine` prints exactly those fields,
//! the default output adds a short header and any detail lines.

use std::ffi::OsString;
use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use sha2::{Digest, Sha256};

use crate::chain::betti_numbers;
use crate::cohomology::{pairing_tensor, property_a_witness};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::io::{write_complex, ComplexFile};
use crate::reduction::certify_lower_bound;
use crate::surface::{
    build_nine_vertex_m2, check_closed_surface, classify_surface, covering_type, delta, rho,
    SurfaceClass,
};

#[derive(Debug, Parser)]
#[command(
    name = "covering-type",
    version,
    about = "Mod-2 homology, cup products and vertex bounds for surface-like simplicial complexes"
)]
pub struct Cli {
    /// Print nothing on success; errors still go to stderr.
    #[arg(long, short, global = true)]
    pub quiet: bool,
    /// Print only `key: value` lines.
    #[arg(long, global = true)]
    pub machine: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// f-vector, Euler characteristic and mod-2 Betti numbers.
    Homology { file: PathBuf },
    /// Whether every nonzero class in H^1 cups nontrivially with some class.
    PropertyA { file: PathBuf },
    /// Reduce to a pure 2-complex and certify the vertex lower bound.
    Reduce {
        file: PathBuf,
        /// Surface the complex is homotopy equivalent to (S2, T2, RP2, M_g, N_k).
        #[arg(long)]
        surface: Option<String>,
        /// Where to write the reduced complex.
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Also list every move.
        #[arg(long)]
        trace: bool,
    },
    /// Closed-surface check, classification and vertex bounds.
    Surface { file: PathBuf },
    /// Build the 9-vertex complex with the homotopy type of M_2 from a
    /// 10-vertex genus-2 triangulation.
    ConstructM2 {
        file: PathBuf,
        #[arg(long, short)]
        out: PathBuf,
    },
    /// Vertex bounds from an Euler characteristic or a surface name.
    Bounds(BoundsArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct BoundsArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub chi: Option<i64>,
    #[arg(long)]
    pub surface: Option<String>,
}

/// Outcome of one command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub command: &'static str,
    /// SHA-256 of the input file, when there is one.
    pub input_digest: Option<String>,
    pub fields: Vec<(String, String)>,
    /// Extra lines for human output only.
    pub details: Vec<String>,
    pub exit_code: i32,
    pub error: Option<String>,
}

impl Report {
    fn new(command: &'static str) -> Self {
        Self {
            command,
            input_digest: None,
            fields: Vec::new(),
            details: Vec::new(),
            exit_code: 0,
            error: None,
        }
    }

    fn field(&mut self, key: &str, value: impl Display) {
        self.fields.push((key.to_string(), value.to_string()));
    }

    fn fail(mut self, e: &Error) -> Self {
        self.exit_code = exit_code(e);
        if let Some(stage) = e.stage() {
            self.field("stage", stage);
        }
        self.error = Some(e.to_string());
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn render_machine(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        if let Some(d) = &self.input_digest {
            out.push_str(&format!("input_sha256: {d}\n"));
        }
        for (k, v) in &self.fields {
            out.push_str(&format!("{k}: {v}\n"));
        }
        if let Some(e) = &self.error {
            out.push_str(&format!("error: {}\n", e.replace('\n', " ")));
        }
        out.push_str(&format!("exit: {}\n", self.exit_code));
        out
    }

    pub fn render_human(&self) -> String {
        let width = self.fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in &self.fields {
            out.push_str(&format!("{k:<width$}  {v}\n"));
        }
        for line in &self.details {
            out.push_str(line);
            out.push('\n');
        }
        out
    }
}

/// 2 for problems with the input itself, 1 for everything else.
pub fn exit_code(e: &Error) -> i32 {
    match e.root() {
        Error::Parse { .. } | Error::Io(_) | Error::Malformed(_) | Error::Domain(_) => 2,
        _ => 1,
    }
}

fn tuple<T: Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn load(path: &Path, report: &mut Report) -> Result<(ComplexFile, SimplicialComplex)> {
    let bytes = fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    report.input_digest = Some(hex::encode(Sha256::digest(&bytes)));
    let text = String::from_utf8(bytes)
        .map_err(|e| Error::Io(format!("{}: not UTF-8: {e}", path.display())))?;
    let mut file = ComplexFile::parse(&text)?;
    file.path = Some(path.to_path_buf());
    let k = file.complex();
    Ok((file, k))
}

fn write_output(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn cmd_homology(path: &Path) -> Report {
    let mut r = Report::new("homology");
    let k = match load(path, &mut r) {
        Ok((_, k)) => k,
        Err(e) => return r.fail(&e),
    };
    r.field("f_vector", tuple(&k.f_vector()));
    r.field("euler_characteristic", k.euler_characteristic());
    r.field("betti", tuple(&betti_numbers(&k)));
    r
}

pub fn cmd_property_a(path: &Path) -> Report {
    let mut r = Report::new("property-a");
    let k = match load(path, &mut r) {
        Ok((_, k)) => k,
        Err(e) => return r.fail(&e),
    };
    let t = pairing_tensor(&k);
    let verdict = t.is_regular();
    r.field("b1", t.b1);
    r.field("b2", t.b2);
    r.field("property_a", verdict);
    if let Some(w) = property_a_witness(&k) {
        let edges = k.simplices(1);
        let support: Vec<String> = w.values.ones().map(|i| edges[i].to_string()).collect();
        r.field("witness", support.join(" "));
        r.details
            .push("the witness cocycle cups to zero with every class in H^1".into());
    }
    r.exit_code = if verdict { 0 } else { 1 };
    r
}

/// Flag first; then the class of the complex itself if it is a closed
/// surface; then the Betti numbers when they determine the surface; then a
/// `# surface:` header.
fn resolve_surface(
    flag: Option<&str>,
    file: &ComplexFile,
    k: &SimplicialComplex,
) -> Result<(SurfaceClass, &'static str)> {
    if let Some(name) = flag {
        return Ok((name.parse()?, "flag"));
    }
    if check_closed_surface(k).verdict {
        return Ok((classify_surface(k)?, "complex"));
    }
    let b = betti_numbers(k);
    let surface_like = b.len() >= 3 && b[0] == 1 && b[2] == 1 && b[3..].iter().all(|&x| x == 0);
    if surface_like && b[1] == 0 {
        return Ok((SurfaceClass::orientable(0), "homology"));
    }
    if surface_like && b[1] % 2 == 1 {
        let genus = u32::try_from(b[1]).map_err(|_| Error::Domain("b1 too large".into()))?;
        return Ok((SurfaceClass::non_orientable(genus)?, "homology"));
    }
    if let Some(name) = &file.declared_surface {
        return Ok((name.parse()?, "header"));
    }
    Err(Error::Domain(format!(
        "cannot infer the surface from Betti numbers {}; pass --surface",
        tuple(&b)
    )))
}

pub fn cmd_reduce(path: &Path, surface: Option<&str>, out: Option<&Path>, trace: bool) -> Report {
    let mut r = Report::new("reduce");
    let (file, k) = match load(path, &mut r) {
        Ok(x) => x,
        Err(e) => return r.fail(&e),
    };
    let (class, source) = match resolve_surface(surface, &file, &k) {
        Ok(x) => x,
        Err(e) => return r.fail(&e),
    };
    r.field("surface", class);
    r.field("surface_source", source);
    r.field("input_f_vector", tuple(&k.f_vector()));
    let c = match certify_lower_bound(&k, &class) {
        Ok(c) => c,
        Err(e) => return r.fail(&e),
    };
    let (excisions, collapses, contractions) = c.trace.move_counts();
    let cert = &c.certificate;
    r.field("excisions", excisions);
    r.field("collapses", collapses);
    r.field("contractions", contractions);
    r.field("final_f_vector", tuple(&c.reduced.f_vector()));
    r.field(
        "final_property_a",
        c.trace
            .final_property_a
            .map_or("unknown".into(), |b| b.to_string()),
    );
    r.field("euler_characteristic", cert.euler_characteristic);
    r.field("ineq_3a2_ge_2a1", cert.triangles_cover_edges());
    r.field("ineq_a1_le_pairs", cert.edges_bounded());
    r.field("ineq_euler", cert.euler_bound());
    r.field("rho", cert.rho);
    r.field("vertices", cert.f_vector[0]);
    r.field("certified", cert.holds());
    if trace {
        r.details.extend(
            c.trace
                .steps
                .iter()
                .enumerate()
                .map(|(i, s)| format!("{:>4}  {}  betti={}", i + 1, s.record, tuple(&s.betti))),
        );
    }
    if let Some(out) = out {
        let text = write_complex(&c.reduced, Some(&class.name()));
        if let Err(e) = write_output(out, &text) {
            return r.fail(&e);
        }
        r.field("output", out.display());
    }
    r
}

pub fn cmd_surface(path: &Path) -> Report {
    let mut r = Report::new("surface");
    let k = match load(path, &mut r) {
        Ok((_, k)) => k,
        Err(e) => return r.fail(&e),
    };
    let check = check_closed_surface(&k);
    r.field("pure2", check.pure2);
    r.field(
        "every_edge_in_two_triangles",
        check.every_edge_in_two_triangles,
    );
    r.field("strongly_connected", check.strongly_connected);
    r.field("all_links_single_circles", check.all_links_single_circles);
    r.field("verdict", check.verdict);
    r.field("defects", check.witnesses.len());
    r.details
        .extend(check.witnesses.iter().take(10).map(|w| format!("  {w}")));
    if !check.verdict {
        r.exit_code = 1;
        return r;
    }
    let class = match classify_surface(&k) {
        Ok(c) => c,
        Err(e) => return r.fail(&e),
    };
    r.field("class", class);
    r.field("orientable", class.is_orientable());
    r.field("euler_characteristic", class.euler_characteristic());
    r.field("vertices", k.num_vertices());
    match rho(class.euler_characteristic()) {
        Ok(v) => r.field("rho", v),
        Err(e) => return r.fail(&e),
    }
    r.field("delta", delta(&class));
    r.field("covering_type", covering_type(&class));
    r
}

pub fn cmd_construct_m2(path: &Path, out: &Path) -> Report {
    let mut r = Report::new("construct-m2");
    let k = match load(path, &mut r) {
        Ok((_, k)) => k,
        Err(e) => return r.fail(&e),
    };
    let m = match build_nine_vertex_m2(&k) {
        Ok(m) => m,
        Err(e) => return r.fail(&e),
    };
    let c = &m.complex;
    r.field("v", &m.v);
    r.field("v_prime", &m.v_prime);
    r.field("w", &m.w);
    r.field("w_prime", &m.w_prime);
    r.field("vertices", c.num_vertices());
    r.field("f_vector", tuple(&c.f_vector()));
    r.field("euler_characteristic", c.euler_characteristic());
    r.field("betti", tuple(&betti_numbers(c)));
    r.field("property_a", pairing_tensor(c).is_regular());
    r.field("surface_check", check_closed_surface(c).verdict);
    let header = format!(
        "# 9-vertex complex homotopy equivalent to M_2: {} merged into {}, triangle {{{},{},{}}} added\n",
        m.v_prime, m.v, m.v, m.w, m.w_prime
    );
    let text = header + &write_complex(c, Some("M_2"));
    if let Err(e) = write_output(out, &text) {
        return r.fail(&e);
    }
    r.field("output", out.display());
    r
}

pub fn cmd_bounds(args: &BoundsArgs) -> Report {
    let mut r = Report::new("bounds");
    let result = (|| -> Result<()> {
        if let Some(name) = &args.surface {
            let class: SurfaceClass = name.parse()?;
            r.field("surface", class);
            r.field("euler_characteristic", class.euler_characteristic());
            r.field("rho", rho(class.euler_characteristic())?);
            r.field("delta", delta(&class));
            r.field("covering_type", covering_type(&class));
        } else if let Some(chi) = args.chi {
            let value = rho(chi)?;
            r.field("euler_characteristic", chi);
            r.field("rho", value);
        }
        Ok(())
    })();
    match result {
        Ok(()) => r,
        Err(e) => r.fail(&e),
    }
}

pub fn execute(cli: &Cli) -> Report {
    match &cli.command {
        Command::Homology { file } => cmd_homology(file),
        Command::PropertyA { file } => cmd_property_a(file),
        Command::Reduce {
            file,
            surface,
            out,
            trace,
        } => cmd_reduce(file, surface.as_deref(), out.as_deref(), *trace),
        Command::Surface { file } => cmd_surface(file),
        Command::ConstructM2 { file, out } => cmd_construct_m2(file, out),
        Command::Bounds(args) => cmd_bounds(args),
    }
}

/// Parses arguments, runs the command, prints the report and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let report = execute(&cli);
    if cli.machine {
        print!("{}", report.render_machine());
    } else if !cli.quiet {
        print!("{}", report.render_human());
    }
    if let Some(e) = &report.error {
        if !cli.machine {
            eprintln!("error: {e}");
        }
    }
    report.exit_code
}
