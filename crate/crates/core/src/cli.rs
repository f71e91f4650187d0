//! Command-line frontend. Each subcommand reads at most one text document
//! stream and writes one; see [`run`].

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::generators;
use crate::hypergraph::{blow_up, BlowUp, Hypergraph};
use crate::io::{self as text, CoverDoc, Document, ParseOptions};
use crate::limits::Limits;
use crate::lp::{solve_lp_pair, LpMode};
use crate::oracles;
use crate::rounding::{self, RoundingParams};
use crate::setcover::{greedy_set_cover, SetSystem};
use crate::VertexSet;

#[derive(Debug, Parser)]
#[command(name = "turancover", version, about = "Vertex cover on blown-up hypergraphs")]
pub struct Cli {
    /// Read input from FILE instead of stdin.
    #[arg(long, short, global = true)]
    pub input: Option<PathBuf>,
    /// Write output to FILE instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Resource guard overrides: an integer (LP product) or `lp=,nodes=,enum=` pairs.
    #[arg(long, global = true)]
    pub guard: Option<String>,
    /// Drop repeated edges when parsing instead of failing.
    #[arg(long, global = true)]
    pub dedup: bool,
    /// Let randomized commands default to seed 0.
    #[arg(long, global = true)]
    pub lenient: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate an instance.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Blow up the input hypergraph.
    Blowup {
        #[arg(long)]
        k: usize,
    },
    /// Solve the cover or matching LP of the input.
    Lp {
        #[arg(value_enum)]
        which: LpWhich,
        #[arg(long, default_value = "exact")]
        mode: ModeArg,
    },
    /// Compute a cover of a blow-up.
    Round {
        #[arg(value_enum)]
        algorithm: Algorithm,
        #[command(flatten)]
        rand: RandArgs,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value = "exact")]
        mode: ModeArg,
    },
    /// Exact values by brute force.
    Oracle {
        #[arg(value_enum)]
        what: OracleWhat,
        /// Also print an optimal witness.
        #[arg(long)]
        witness: bool,
    },
    /// Set cover algorithms.
    Setcover {
        #[arg(value_enum)]
        algorithm: SetcoverAlgorithm,
    },
    /// Check a claim about the input.
    Verify {
        #[arg(value_enum)]
        what: VerifyWhat,
        /// Hypergraph to check against, when not in the input stream.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// All t-subsets of n vertices.
    Complete {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
    },
    /// Each t-subset independently with probability p.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        p: f64,
        #[command(flatten)]
        rand: RandArgs,
    },
    /// Combinatorial lines of [3]^n.
    Lines {
        #[arg(long)]
        n: usize,
    },
    /// Set system on k^2 elements that is slow for greedy.
    HardSetcover {
        #[arg(long)]
        k: usize,
    },
    /// Random hypergraph with every copy of the family removed.
    Ffree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        /// File with HG documents; the t-tent when omitted.
        #[arg(long)]
        family: Option<PathBuf>,
        /// Edge probability; n^(-1/rho) when omitted.
        #[arg(long)]
        p: Option<f64>,
        #[command(flatten)]
        rand: RandArgs,
    },
    /// Cloud expansion of the input followed by conflict deletion.
    Simplify {
        #[arg(long)]
        clouds: usize,
        #[arg(long)]
        copies: usize,
        #[command(flatten)]
        rand: RandArgs,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct RandArgs {
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum LpWhich {
    Vc,
    Matching,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Exact,
    Float,
}

impl From<ModeArg> for LpMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Exact => LpMode::Exact,
            ModeArg::Float => LpMode::Float,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Algorithm {
    Ahtp,
    T2,
    Colorcode,
    Threshold,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OracleWhat {
    Tau,
    Nu,
    Taustar,
    Tents,
    Rho,
    Alpha,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SetcoverAlgorithm {
    Greedy,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VerifyWhat {
    Cover,
    Matching,
    Simple,
}

struct Ctx<'a> {
    cli: &'a Cli,
    limits: Limits,
    stdin: &'a mut dyn Read,
}

impl Ctx<'_> {
    fn opts(&self) -> ParseOptions {
        ParseOptions { dedup: self.cli.dedup }
    }

    fn seed(&self, r: RandArgs) -> Result<u64> {
        match (r.seed, self.cli.lenient) {
            (Some(s), _) => Ok(s),
            (None, true) => Ok(0),
            (None, false) => Err(Error::param("randomized commands need --seed (or --lenient for seed 0)")),
        }
    }

    fn read_input(&mut self) -> Result<String> {
        let mut s = String::new();
        match &self.cli.input {
            Some(p) => {
                s = std::fs::read_to_string(p).map_err(|e| Error::param(format!("cannot read {}: {e}", p.display())))?
            }
            None => {
                self.stdin.read_to_string(&mut s).map_err(|e| Error::param(format!("cannot read stdin: {e}")))?;
            }
        }
        Ok(s)
    }

    fn documents(&mut self) -> Result<Vec<Document>> {
        let s = self.read_input()?;
        text::parse_documents(&s, self.opts())
    }

    fn hypergraph_or_blowup(&mut self) -> Result<Document> {
        let docs = self.documents()?;
        docs.into_iter()
            .find(|d| matches!(d, Document::Hyper(_) | Document::BlowUp(_)))
            .ok_or_else(|| Error::parse(1, "input holds no HG document"))
    }

    fn hypergraph(&mut self) -> Result<Hypergraph> {
        Ok(match self.hypergraph_or_blowup()? {
            Document::Hyper(h) => h,
            Document::BlowUp(b) => b.hyper().clone(),
            _ => unreachable!(),
        })
    }
}

fn read_file(p: &PathBuf) -> Result<String> {
    std::fs::read_to_string(p).map_err(|e| Error::param(format!("cannot read {}: {e}", p.display())))
}

/// Blow-up of order `k`: the input itself when it already is one, otherwise
/// the input is taken as the base hypergraph.
fn as_blowup(doc: Document, k_of_t: impl Fn(usize) -> usize) -> Result<BlowUp> {
    match doc {
        Document::BlowUp(b) => {
            let want = k_of_t(b.base_t());
            if b.k() != want {
                return Err(Error::param(format!("input is a {}-blow-up, this command needs k={want}", b.k())));
            }
            Ok(b)
        }
        Document::Hyper(g) => {
            let k = k_of_t(g.t());
            if g.t() < 3 {
                return Err(Error::param(format!("rounding needs t >= 3, got {}", g.t())));
            }
            blow_up(&g, k)
        }
        _ => unreachable!(),
    }
}

fn gen(ctx: &mut Ctx<'_>, g: &GenCommand, out: &mut String) -> Result<()> {
    let lim = ctx.limits;
    let doc = match g {
        GenCommand::Complete { n, t } => text::format_hypergraph(&generators::complete(*n, *t, &lim)?),
        GenCommand::Random { n, t, p, rand } => {
            text::format_hypergraph(&generators::random_hypergraph(*n, *t, *p, ctx.seed(*rand)?, &lim)?)
        }
        GenCommand::Lines { n } => text::format_hypergraph(&generators::combinatorial_lines(*n, &lim)?),
        GenCommand::HardSetcover { k } => text::format_setsystem(&generators::greedy_hard_setsystem(*k)?),
        GenCommand::Ffree { n, t, family, p, rand } => {
            let seed = ctx.seed(*rand)?;
            let family = match family {
                Some(path) => text::parse_documents(&read_file(path)?, ctx.opts())?
                    .into_iter()
                    .map(|d| match d {
                        Document::Hyper(h) => Ok(h),
                        other => Err(Error::parse(1, format!("family file holds a {} document", other.kind()))),
                    })
                    .collect::<Result<Vec<_>>>()?,
                None => vec![generators::tent(*t)?],
            };
            text::format_hypergraph(&generators::f_free_random(*n, *t, &family, *p, seed, &lim)?)
        }
        GenCommand::Simplify { clouds, copies, rand } => {
            let seed = ctx.seed(*rand)?;
            let base = ctx.hypergraph()?;
            text::format_hypergraph(&generators::simplify_reduction(&base, *clouds, *copies, seed)?)
        }
    };
    out.push_str(&doc);
    Ok(())
}

fn round(ctx: &mut Ctx<'_>, algorithm: Algorithm, rand: RandArgs, trials: usize, mode: LpMode, out: &mut String) -> Result<()> {
    let lim = ctx.limits;
    if trials == 0 {
        return Err(Error::param("--trials must be at least 1"));
    }
    let seed = match algorithm {
        Algorithm::Threshold => 0,
        _ => ctx.seed(rand)?,
    };
    let doc = ctx.hypergraph_or_blowup()?;
    match algorithm {
        Algorithm::Threshold => {
            let (h, echo) = match &doc {
                Document::BlowUp(b) => (b.hyper().clone(), text::format_blowup(b)),
                Document::Hyper(h) => (h.clone(), text::format_hypergraph(h)),
                _ => unreachable!(),
            };
            let r = rounding::fallback_threshold_cover(&h, mode, &lim)?;
            out.push_str(&text::format_cover(&r));
            out.push_str(&echo);
        }
        Algorithm::Ahtp | Algorithm::Colorcode => {
            let b = as_blowup(doc, |t| t.saturating_sub(1))?;
            let r = if matches!(algorithm, Algorithm::Ahtp) {
                let params = RoundingParams::new(b.base_t(), seed, trials)?;
                rounding::ahtp_cover_blowup(&b, &params, mode, &lim)?
            } else {
                rounding::color_code_cover(&b, seed)?
            };
            out.push_str(&text::format_cover(&r));
            out.push_str(&text::format_blowup(&b));
        }
        Algorithm::T2 => {
            let b = as_blowup(doc, |_| 2)?;
            let r = rounding::t2_cover_blowup(&b, seed, trials, mode, &lim)?;
            out.push_str(&text::format_cover(&r));
            out.push_str(&text::format_blowup(&b));
        }
    }
    Ok(())
}

fn oracle(ctx: &mut Ctx<'_>, what: OracleWhat, witness: bool, out: &mut String) -> Result<()> {
    use std::fmt::Write as _;
    let lim = ctx.limits;
    let h = ctx.hypergraph()?;
    match what {
        OracleWhat::Tau => {
            let c = oracles::min_vertex_cover(&h, &lim)?;
            writeln!(out, "{}", c.len()).unwrap();
            if witness {
                let ids = c.members().iter().map(|v| format!("{v}\n")).collect::<String>();
                write!(out, "COVER {}\n{ids}", c.len()).unwrap();
            }
        }
        OracleWhat::Nu => {
            let m = oracles::max_matching(&h, &lim)?;
            writeln!(out, "{}", m.len()).unwrap();
            if witness {
                out.push_str(&text::format_matching(&m));
            }
        }
        OracleWhat::Alpha => {
            let s = oracles::max_independent_set(&h, &lim)?;
            writeln!(out, "{}", s.len()).unwrap();
            if witness {
                let ids: Vec<String> = s.members().iter().map(|v| v.to_string()).collect();
                writeln!(out, "INDEPENDENT {}", ids.join(" ")).unwrap();
            }
        }
        OracleWhat::Taustar => {
            let pair = solve_lp_pair(&h, LpMode::Exact, &lim)?;
            writeln!(out, "{}", pair.primal.objective).unwrap();
            if witness {
                out.push_str(&text::format_lp_solution(&pair.primal));
            }
        }
        OracleWhat::Tents => {
            let tents = oracles::find_tents(&h, &lim)?;
            writeln!(out, "TENTS {}", tents.len()).unwrap();
            for t in tents {
                writeln!(out, "{} {} {} {}", t.legs[0], t.legs[1], t.legs[2], t.base).unwrap();
            }
        }
        OracleWhat::Rho => {
            let r = oracles::rho(&h)?;
            writeln!(out, "{}/{}", r.numer(), r.denom()).unwrap();
        }
    }
    Ok(())
}

fn verify(ctx: &mut Ctx<'_>, what: VerifyWhat, graph: &Option<PathBuf>, out: &mut String) -> Result<()> {
    let mut docs = ctx.documents()?;
    if let Some(p) = graph {
        docs.extend(text::parse_documents(&read_file(p)?, ctx.opts())?);
    }
    let hyper = docs.iter().find_map(|d| match d {
        Document::Hyper(h) => Some(h.clone()),
        Document::BlowUp(b) => Some(b.hyper().clone()),
        _ => None,
    });
    let need_hyper = || hyper.clone().ok_or_else(|| Error::param("no HG document to verify against"));
    let failure = match what {
        VerifyWhat::Cover => {
            let h = need_hyper()?;
            let CoverDoc { ids, .. } = docs
                .iter()
                .find_map(|d| match d {
                    Document::Cover(c) => Some(c.clone()),
                    _ => None,
                })
                .ok_or_else(|| Error::param("no COVER document in input"))?;
            match VertexSet::new(ids, h.n()) {
                Err(e) => Some(e.to_string()),
                Ok(c) => h.uncovered_edges(&c).first().map(|e| format!("edge {e} is not covered")),
            }
        }
        VerifyWhat::Matching => {
            let h = need_hyper()?;
            let ids = docs
                .iter()
                .find_map(|d| match d {
                    Document::Matching(m) => Some(m.clone()),
                    _ => None,
                })
                .ok_or_else(|| Error::param("no MATCHING document in input"))?;
            (!h.is_matching(&ids)).then(|| "edges are not pairwise disjoint edge ids".to_string())
        }
        VerifyWhat::Simple => {
            let simple = match docs.first() {
                Some(Document::Hyper(h)) => h.is_simple(),
                Some(Document::BlowUp(b)) => b.hyper().is_simple(),
                Some(Document::Sets(s)) => s.is_simple(),
                _ => return Err(Error::param("verify simple needs an HG or SS document")),
            };
            (!simple).then(|| "two members share at least two elements".to_string())
        }
    };
    match failure {
        None => {
            out.push_str("OK\n");
            Ok(())
        }
        Some(reason) => {
            out.push_str(&format!("FAIL {reason}\n"));
            Err(Error::verify(reason))
        }
    }
}

/// Runs one command. Output is appended to `out` even when an error is
/// returned after a failed verification.
pub fn run(cli: &Cli, stdin: &mut dyn Read, out: &mut String) -> Result<()> {
    let mut limits = Limits::from_env()?;
    if let Some(spec) = &cli.guard {
        limits = limits.with_overrides(spec)?;
    }
    let mut ctx = Ctx { cli, limits, stdin };
    match &cli.command {
        Command::Gen(g) => gen(&mut ctx, g, out),
        Command::Blowup { k } => {
            let g = ctx.hypergraph()?;
            out.push_str(&text::format_blowup(&blow_up(&g, *k)?));
            Ok(())
        }
        Command::Lp { which, mode } => {
            let h = ctx.hypergraph()?;
            let pair = solve_lp_pair(&h, (*mode).into(), &ctx.limits)?;
            let x = match which {
                LpWhich::Vc => pair.primal,
                LpWhich::Matching => pair.dual,
            };
            out.push_str(&text::format_lp_solution(&x));
            Ok(())
        }
        Command::Round { algorithm, rand, trials, mode } => round(&mut ctx, *algorithm, *rand, *trials, (*mode).into(), out),
        Command::Oracle { what, witness } => oracle(&mut ctx, *what, *witness, out),
        Command::Setcover { algorithm: SetcoverAlgorithm::Greedy } => {
            let s = match ctx.documents()?.into_iter().next() {
                Some(Document::Sets(s)) => s,
                Some(Document::Hyper(h)) => edges_as_sets(&h),
                _ => return Err(Error::param("setcover needs an SS or HG document")),
            };
            out.push_str(&text::format_greedy_trace(&greedy_set_cover(&s)?));
            Ok(())
        }
        Command::Verify { what, graph } => verify(&mut ctx, *what, graph, out),
    }
}

/// Parses `args`, runs the command and writes the output; returns the exit code.
pub fn main_with_args<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return 3;
            }
            let _ = write!(stdout, "{e}");
            return 0;
        }
    };
    let mut out = String::new();
    let status = run(&cli, stdin, &mut out);
    let written = match &cli.output {
        Some(p) => std::fs::write(p, &out).map_err(|e| Error::param(format!("cannot write {}: {e}", p.display()))),
        None => stdout.write_all(out.as_bytes()).map_err(|e| Error::param(format!("cannot write stdout: {e}"))),
    };
    match status.and(written) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

/// `SetSystem` view of a hypergraph's edges, for `setcover` on HG input.
fn edges_as_sets(h: &Hypergraph) -> SetSystem {
    SetSystem::from_canonical(h.n(), h.edges().to_vec())
}
