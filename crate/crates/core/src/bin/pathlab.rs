use std::fmt::Write as _;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use pathlab_core::applications::conjectures::{check_bottom_left_sum, check_pair_equidistribution};
use pathlab_core::applications::dyck::{family_count_report, sum_dependence_check, BoundaryFamily};
use pathlab_core::applications::permutations::{exchange_rl_extrema, path_of_perm, perm_stats, Permutation};
use pathlab_core::applications::watermelon::returns_table;
use pathlab_core::enumerate::{enumerate_paths, enumerate_tuples, PathFilter};
use pathlab_core::matroid::{activities, tutte_poly, BasesOracle, LatticePathMatroid, LinearOrder, UniformMatroid};
use pathlab_core::poly::{default_var_names, distribution};
use pathlab_core::swap::swapall;
use pathlab_core::tableau::{flagged_schur, flagged_ssyt_generating_function, psi_inv, psi_trace, tab_of_tuple};
use pathlab_core::triangulation::{catalan_det, degree_distribution_check, degree_sequence, enumerate_k_triangulations};
use pathlab_core::verify::{self, SuiteOutcome};
use pathlab_core::{ContactStats, ContactWord, MultiPoly, Path, PathTuple, Region, Tableau};

#[derive(Parser)]
#[command(name = "pathlab", version, about = "Contact statistics of lattice paths between two boundaries")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct RegionArgs {
    /// Upper boundary as N/E steps.
    #[arg(long = "T", value_name = "STEPS")]
    top: Option<String>,
    /// Lower boundary as N/E steps.
    #[arg(long = "B", value_name = "STEPS")]
    bottom: Option<String>,
    /// Both boundaries as `T=<steps>;B=<steps>`.
    #[arg(long, conflicts_with_all = ["top", "bottom"])]
    region: Option<String>,
}

impl RegionArgs {
    fn get(&self) -> Result<Region> {
        if let Some(r) = &self.region {
            return Region::parse(r).context("--region");
        }
        let top = self.top.as_deref().ok_or_else(|| anyhow!("--T is required (or --region)"))?;
        let bottom = self.bottom.as_deref().ok_or_else(|| anyhow!("--B is required (or --region)"))?;
        let t = Path::parse(top).context("--T")?;
        let b = Path::parse(bottom).context("--B")?;
        Region::new(&t, &b).context("--T/--B")
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the paths (or k-tuples) of a region with their statistics.
    Enumerate {
        #[command(flatten)]
        region: RegionArgs,
        /// Allow south steps.
        #[arg(long)]
        south: bool,
        /// Enumerate k-tuples of nested paths instead.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Generating polynomial of contact statistics over the paths of a region.
    Dist {
        #[command(flatten)]
        region: RegionArgs,
        /// Comma-separated statistics among t, b, l, r, d (number of descents).
        #[arg(long, default_value = "t,b")]
        stats: String,
        #[arg(long)]
        south: bool,
    },
    /// Apply the top/bottom involution to a path.
    Swapall {
        #[command(flatten)]
        region: RegionArgs,
        /// The path, as N/E/S steps.
        #[arg(long)]
        path: String,
    },
    /// Switch the first unmatched t of a contact word to b (or the reverse).
    Switch {
        #[arg(long)]
        word: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Map a k-tuple to a k-flagged semistandard tableau.
    Psi {
        #[command(flatten)]
        region: RegionArgs,
        /// Comma-separated paths, top first.
        #[arg(long)]
        paths: String,
        /// Print every j move.
        #[arg(long)]
        trace: bool,
    },
    /// Map a k-flagged semistandard tableau back to a k-tuple.
    PsiInv {
        #[command(flatten)]
        region: RegionArgs,
        /// Rows separated by `/`, e.g. `112/34/4`.
        #[arg(long)]
        tableau: String,
        #[arg(long)]
        k: u32,
    },
    /// The tableau read directly from a k-tuple, with its violations.
    Tab {
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long)]
        paths: String,
    },
    /// Tutte polynomial from activities under a ground-set order.
    Tutte {
        #[command(flatten)]
        region: RegionArgs,
        /// Use the uniform matroid `r,m` instead of a region.
        #[arg(long, value_name = "R,M")]
        uniform: Option<String>,
        /// `natural`, `reversed`, or `perm:e1,e2,...` from smallest to largest.
        #[arg(long, default_value = "natural")]
        order: String,
    },
    /// Internally and externally active elements of the base of a path.
    Activities {
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long)]
        path: String,
        #[arg(long, default_value = "natural")]
        order: String,
    },
    /// Distribution of h (or v, u) over the k-tuples of a region.
    KtupleDist {
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long)]
        k: usize,
        /// One of h, v, u.
        #[arg(long, default_value = "h")]
        stats: String,
    },
    /// Statistics of a permutation and its lattice path.
    Perm {
        /// One-line notation, e.g. 35681742 or 3,5,6.
        #[arg(long)]
        pi: String,
        /// Also apply the involution exchanging right-to-left minima and maxima.
        #[arg(long)]
        exchange: bool,
    },
    /// Watermelons of length x, deviation y, k paths counted by returns.
    Watermelon {
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: u32,
        #[arg(long)]
        k: usize,
    },
    /// Closed counts for the ballot and slope boundary families.
    CountAb {
        #[arg(long = "case", value_enum)]
        case: FamilyCase,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        /// Extra east steps (ballot family).
        #[arg(long, default_value_t = 0)]
        s: u32,
        /// Slope (slope family).
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Also count paths with i + j = c top and bottom contacts.
        #[arg(long)]
        c: Option<u32>,
    },
    /// Check the three conditions for (t, b) counts depending only on t + b.
    CheckCorIj {
        #[command(flatten)]
        region: RegionArgs,
        /// Sweep all regions with x + y <= MAX instead.
        #[arg(long)]
        max: Option<usize>,
    },
    /// Check the two conjectured characterizations on n x n squares.
    CheckConjectures {
        #[arg(long)]
        n: usize,
    },
    /// Enumerate the k-triangulations of an n-gon.
    Triangulate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Only print counts.
        #[arg(long)]
        count: bool,
    },
    /// Compare degree distributions of k-triangulations with k-fan statistics.
    NicolasCheck {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Run named verification sweeps.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Size bound; with `all`, each suite uses the smaller of this and its default.
        #[arg(long)]
        max: Option<usize>,
        /// List the suites and exit.
        #[arg(long)]
        list: bool,
    },
    /// Flagged Schur polynomial by the Jacobi-Trudi determinant.
    FlaggedSchur {
        /// Comma-separated parts.
        #[arg(long)]
        shape: String,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        nvars: Option<usize>,
        /// Compare with the tableau generating function.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyCase {
    Ballot,
    Slope,
}

/// What a command produced: JSON, its text rendering, and whether it found
/// no counterexample.
struct Report {
    json: Value,
    text: String,
    ok: bool,
}

impl Report {
    fn new(json: Value, text: String) -> Self {
        Report { json, text, ok: true }
    }

    fn with_ok(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn parse_path(s: &str, flag: &str) -> Result<Path> {
    Path::parse(s.trim()).with_context(|| flag.to_string())
}

fn parse_tuple(region: &Region, paths: &str) -> Result<PathTuple> {
    let ps = paths.split(',').map(|p| parse_path(p, "--paths")).collect::<Result<Vec<_>>>()?;
    PathTuple::new(region.clone(), ps).context("--paths")
}

fn parse_list<T: std::str::FromStr>(s: &str, flag: &str) -> Result<Vec<T>>
where
    T::Err: std::fmt::Display,
{
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<T>().map_err(|e| anyhow!("{flag}: {t:?}: {e}")))
        .collect()
}

fn path_json(p: &Path) -> Value {
    json!({ "steps": p.to_step_string(), "heights": p.heights() })
}

fn stats_json(s: &ContactStats) -> Value {
    to_json(s)
}

fn poly_report(p: &MultiPoly) -> Report {
    Report::new(json!({ "polynomial": p.to_string(), "vars": p.vars(), "terms": to_json(p)["terms"] }), p.to_string())
}

fn stat_value(name: &str, s: &ContactStats, p: &Path) -> Result<u32> {
    Ok(match name {
        "t" => s.t,
        "b" => s.b,
        "l" => s.l,
        "r" => s.r,
        "d" => p.descent_set().len() as u32,
        _ => bail!("--stats: unknown statistic {name:?} (expected t, b, l, r, d)"),
    })
}

fn outcome_text(o: &SuiteOutcome) -> String {
    let mut s = format!(
        "{:<14} bound {:<3} checked {:<10} {}",
        o.suite,
        o.bound,
        o.checked,
        if o.passed() { "ok".to_string() } else { format!("FAILED ({} failures)", o.failure_count) }
    );
    for f in &o.failures {
        let _ = write!(s, "\n    {f}");
    }
    s
}

fn run(cmd: Command) -> Result<Report> {
    Ok(match cmd {
        Command::Enumerate { region, south, k } => {
            let r = region.get()?;
            match k {
                None => {
                    let filter = if south { PathFilter::with_south() } else { PathFilter::monotone() };
                    let mut rows = Vec::new();
                    let mut text = String::new();
                    for p in enumerate_paths(&r, &filter) {
                        let s = r.contact_stats(&p)?;
                        let d = p.descent_set();
                        let _ = writeln!(
                            text,
                            "{}  heights {:?}  t={} b={} l={} r={}  descents {:?}",
                            p, p.heights(), s.t, s.b, s.l, s.r, d
                        );
                        rows.push(json!({ "path": path_json(&p), "stats": stats_json(&s), "descents": d }));
                    }
                    let _ = write!(text, "{} paths", rows.len());
                    Report::new(json!({ "region": r.to_string(), "count": rows.len(), "paths": rows }), text)
                }
                Some(k) => {
                    if south {
                        bail!("--south: tuples are always monotone");
                    }
                    let tuples = enumerate_tuples(&r, k);
                    let mut rows = Vec::new();
                    let mut text = String::new();
                    for t in &tuples {
                        let steps: Vec<String> = t.paths().iter().map(Path::to_step_string).collect();
                        let _ = writeln!(text, "{}  h={:?} v={:?} u={:?}", steps.join(","), t.h_stats(), t.v_stats(), t.u_stats());
                        rows.push(json!({ "paths": steps, "h": t.h_stats(), "v": t.v_stats(), "u": t.u_stats() }));
                    }
                    let _ = write!(text, "{} tuples", rows.len());
                    Report::new(json!({ "region": r.to_string(), "k": k, "count": rows.len(), "tuples": rows }), text)
                }
            }
        }
        Command::Dist { region, stats, south } => {
            let r = region.get()?;
            let names: Vec<String> = stats.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
            if names.is_empty() {
                bail!("--stats: no statistics given");
            }
            let filter = if south { PathFilter::with_south() } else { PathFilter::monotone() };
            let mut values = Vec::new();
            for p in enumerate_paths(&r, &filter) {
                let s = r.contact_stats(&p)?;
                values.push(names.iter().map(|n| stat_value(n, &s, &p)).collect::<Result<Vec<u32>>>()?);
            }
            let poly = distribution(values, default_var_names(names.len()), |v| v.clone())?;
            let mut rep = poly_report(&poly);
            rep.json["stats"] = json!(names);
            rep
        }
        Command::Swapall { region, path } => {
            let r = region.get()?;
            let p = parse_path(&path, "--path")?;
            r.check_contains(&p).context("--path")?;
            let q = swapall(&r, &p)?;
            let (s, sq) = (r.contact_stats(&p)?, r.contact_stats(&q)?);
            Report::new(
                json!({ "path": path_json(&p), "image": path_json(&q), "stats": stats_json(&s), "image_stats": stats_json(&sq) }),
                format!("{p} (t={}, b={}) -> {q} (t={}, b={})\nheights {:?} -> {:?}", s.t, s.b, sq.t, sq.b, p.heights(), q.heights()),
            )
        }
        Command::Switch { word, inverse } => {
            let w = ContactWord::parse(&word).context("--word")?;
            let img = if inverse { w.switch_inv()? } else { w.switch()? };
            Report::new(json!({ "word": w.to_string(), "image": img.to_string() }), format!("{w} -> {img}"))
        }
        Command::Psi { region, paths, trace } => {
            let r = region.get()?;
            let t = parse_tuple(&r, &paths)?;
            let (steps, tab) = psi_trace(&t)?;
            let weight = tab.weight(t.k() + r.y() as usize);
            let mut text = String::new();
            if trace {
                for s in &steps {
                    let _ = writeln!(
                        text,
                        "{}  violation at row {} col {} -> moved to row {} col {}",
                        s.before.to_string().replace('\n', "/"),
                        s.violation.0 + 1,
                        s.violation.1 + 1,
                        s.moved_to.0 + 1,
                        s.moved_to.1 + 1
                    );
                }
            }
            let _ = write!(text, "{tab}\nweight {weight:?}");
            let mut js = json!({ "tableau": tab.rows(), "weight": weight, "moves": steps.len() });
            if trace {
                js["steps"] = json!(steps
                    .iter()
                    .map(|s| json!({
                        "before": s.before.rows(),
                        "violation": [s.violation.0 + 1, s.violation.1 + 1],
                        "moved_to": [s.moved_to.0 + 1, s.moved_to.1 + 1],
                    }))
                    .collect::<Vec<_>>());
            }
            Report::new(js, text)
        }
        Command::PsiInv { region, tableau, k } => {
            let r = region.get()?;
            let tab = Tableau::parse(&tableau, k).context("--tableau")?;
            let t = psi_inv(&tab, &r)?;
            let steps: Vec<String> = t.paths().iter().map(Path::to_step_string).collect();
            Report::new(
                json!({ "paths": steps, "h": t.h_stats(), "u": t.u_stats() }),
                format!("{}\nh={:?} u={:?}", steps.join(","), t.h_stats(), t.u_stats()),
            )
        }
        Command::Tab { region, paths } => {
            let r = region.get()?;
            let t = parse_tuple(&r, &paths)?;
            let tab = tab_of_tuple(&t)?;
            let v = tab.violations();
            let one_based = |cs: &[(usize, usize)]| cs.iter().map(|&(a, b)| [a + 1, b + 1]).collect::<Vec<_>>();
            Report::new(
                json!({
                    "tableau": tab.rows(),
                    "semistandard_violations": one_based(&v.semistandard),
                    "path_violations": one_based(&v.path),
                }),
                format!(
                    "{tab}\nsemistandard violations {:?}\npath violations {:?}",
                    one_based(&v.semistandard),
                    one_based(&v.path)
                ),
            )
        }
        Command::Tutte { region, uniform, order } => {
            let oracle: Box<dyn BasesOracle> = match uniform {
                Some(u) => {
                    let v: Vec<usize> = parse_list(&u, "--uniform")?;
                    let [r, m] = v[..] else { bail!("--uniform: expected r,m") };
                    if r > m || m > 63 {
                        bail!("--uniform: need r <= m <= 63");
                    }
                    Box::new(UniformMatroid { r, m })
                }
                None => Box::new(LatticePathMatroid::new(region.get()?)),
            };
            let ord = LinearOrder::parse(&order, oracle.ground_size()).context("--order")?;
            poly_report(&tutte_poly(oracle.as_ref(), &ord)?)
        }
        Command::Activities { region, path, order } => {
            let r = region.get()?;
            let lpm = LatticePathMatroid::new(r);
            let p = parse_path(&path, "--path")?;
            let base = lpm.base_of_path(&p).context("--path")?;
            let ord = LinearOrder::parse(&order, lpm.ground_size()).context("--order")?;
            let a = activities(&lpm, base, &ord)?;
            Report::new(
                json!({ "base": base.elements(), "internal": a.internal, "external": a.external }),
                format!("base {base}\ninternal {:?}\nexternal {:?}", a.internal, a.external),
            )
        }
        Command::KtupleDist { region, k, stats } => {
            let r = region.get()?;
            let tuples = enumerate_tuples(&r, k);
            let stat: fn(&PathTuple) -> Vec<u32> = match stats.as_str() {
                "h" => PathTuple::h_stats,
                "v" => PathTuple::v_stats,
                "u" => PathTuple::u_stats,
                s => bail!("--stats: unknown statistic {s:?} (expected h, v or u)"),
            };
            let len = tuples.first().map_or(0, |t| stat(t).len());
            let poly = distribution(tuples, default_var_names(len), stat)?;
            poly_report(&poly)
        }
        Command::Perm { pi, exchange } => {
            let pi = Permutation::parse(&pi).context("--pi")?;
            let st = perm_stats(&pi);
            let p = path_of_perm(&pi);
            let mut text = format!(
                "{pi}\nrl_min {} rl_max {} 13-2 positions {:?}\npath {p} heights {:?}",
                st.rl_min,
                st.rl_max,
                st.pattern_positions,
                p.heights()
            );
            let mut js = json!({ "permutation": pi.values(), "stats": to_json(&st), "path": path_json(&p) });
            if exchange {
                let img = exchange_rl_extrema(&pi)?;
                let si = perm_stats(&img);
                let _ = write!(text, "\nimage {img}: rl_min {} rl_max {} 13-2 positions {:?}", si.rl_min, si.rl_max, si.pattern_positions);
                js["image"] = json!({ "permutation": img.values(), "stats": to_json(&si) });
            }
            Report::new(js, text)
        }
        Command::Watermelon { x, y, k } => {
            let rows = returns_table(x, y, k)?;
            let ok = rows.iter().all(|r| r.watermelons == r.tuples_with_top_contacts && r.watermelons == r.truncated_families);
            let mut text = String::from("e  watermelons  top-contact tuples  truncated families");
            for r in &rows {
                let _ = write!(text, "\n{:<2} {:<12} {:<19} {}", r.e, r.watermelons, r.tuples_with_top_contacts, r.truncated_families);
            }
            Report::new(json!({ "x": x, "y": y, "k": k, "rows": to_json(&rows), "agree": ok }), text).with_ok(ok)
        }
        Command::CountAb { case, n, r, s, k, c } => {
            let family = match case {
                FamilyCase::Ballot => BoundaryFamily::Ballot { n, r, s },
                FamilyCase::Slope => BoundaryFamily::Slope { n, r, k },
            };
            let rep = family_count_report(family)?;
            let mut ok = rep.formula >= 0 && rep.formula as u128 == rep.enumerated;
            let mut text = format!(
                "region {}\nformula {}\nenumerated {}\nprinted boundaries: {}",
                family.region(),
                rep.formula,
                rep.enumerated,
                rep.printed_enumerated.map_or("no common endpoint".to_string(), |v| v.to_string())
            );
            let mut js = to_json(&rep);
            if let Some(c) = c {
                let formula = family.contact_count(c)?;
                let counts = pathlab_core::applications::dyck::contact_counts(&family.region());
                let direct: Vec<u64> = (0..=c).map(|i| counts.get(&(i, c - i)).copied().unwrap_or(0)).collect();
                ok &= direct.iter().all(|&d| d as i128 == formula);
                let _ = write!(text, "\ncontacts c={c}: formula {formula}, enumerated by (i, c-i) {direct:?}");
                js["contacts"] = json!({ "c": c, "formula": formula, "enumerated": direct });
            }
            Report::new(js, text).with_ok(ok)
        }
        Command::CheckCorIj { region, max } => match max {
            Some(m) => suite_report(vec![verify::check_contact_sum(m)]),
            None => {
                let r = region.get()?;
                let rep = sum_dependence_check(&r);
                Report::new(
                    to_json(&rep),
                    format!(
                        "counts depend only on t+b: {}\nbottom contacts before top contacts: {}\nlast east step of B below first of T: {}",
                        rep.counts_depend_on_sum, rep.bottoms_before_tops, rep.last_bottom_below_first_top
                    ),
                )
                .with_ok(rep.agree())
            }
        },
        Command::CheckConjectures { n } => {
            let a = check_pair_equidistribution(n);
            let b = check_bottom_left_sum(n);
            let ok = a.holds() && b.holds();
            let text = format!(
                "pair equidistribution: {} regions, {} with (b,l)~(b,t), {}\n(b,l) sum dependence: {} regions, {} dependent on the sum, {}",
                a.regions,
                a.symmetric,
                a.counterexample.as_ref().map_or("holds".to_string(), |c| format!("counterexample {}", c.region)),
                b.regions,
                b.symmetric,
                b.counterexample.as_ref().map_or("holds".to_string(), |c| format!("counterexample {}", c.region)),
            );
            Report::new(json!({ "pair_equidistribution": to_json(&a), "bottom_left_sum": to_json(&b) }), text).with_ok(ok)
        }
        Command::Triangulate { n, k, count } => {
            let tris = enumerate_k_triangulations(n, k);
            let det = catalan_det(n, k);
            let mut text = format!("{} {k}-triangulations of the {n}-gon, Catalan determinant {det}", tris.len());
            let mut js = json!({ "n": n, "k": k, "count": tris.len(), "catalan_det": det.to_string() });
            if !count {
                let list: Vec<Value> = tris
                    .iter()
                    .map(|t| json!({ "diagonals": to_json(t.diagonals()), "degrees": degree_sequence(t) }))
                    .collect();
                for t in &tris {
                    let _ = write!(text, "\n{t}  degrees {:?}", degree_sequence(t));
                }
                js["triangulations"] = json!(list);
            }
            Report::new(js, text).with_ok(tris.len() as i128 == det)
        }
        Command::NicolasCheck { n, k } => {
            if n < 2 * k + 1 {
                bail!("--n: need n >= 2k + 1");
            }
            let rep = degree_distribution_check(n, k)?;
            let show = |c: &pathlab_core::triangulation::DistributionComparison| {
                c.counterexample.as_ref().map_or("equal".to_string(), |(v, a, b)| format!("differ at {v:?}: {a} vs {b}"))
            };
            let text = format!(
                "{} triangulations, {} fans\n(d_1..d_k) vs (h_0..h_{{k-1}}): {}\n(d_1..d_{{k+1}}) vs (h_0..h_k): {}\nfull degree sequence vs (h, u): {}\n(d_1..d_{{k+1}}) symmetric: {}",
                rep.triangulations,
                rep.fans,
                show(&rep.first_k_degrees),
                show(&rep.first_k_plus_one_degrees),
                show(&rep.full_sequence),
                rep.window_symmetric
            );
            let ok = rep.holds();
            Report::new(to_json(&rep), text).with_ok(ok)
        }
        Command::Verify { suite, max, list } => {
            if list {
                let mut text = String::new();
                let mut js = Vec::new();
                for s in verify::SUITES {
                    let _ = writeln!(text, "{:<14} default {:<3} ({})  {}", s.name, s.default_bound, s.bound_meaning, s.description);
                    js.push(json!({ "name": s.name, "default_bound": s.default_bound, "bound": s.bound_meaning, "description": s.description }));
                }
                return Ok(Report::new(json!(js), text.trim_end().to_string()));
            }
            let outcomes = if suite == "all" {
                verify::SUITES.iter().map(|s| (s.run)(max.map_or(s.default_bound, |m| m.min(s.default_bound)))).collect()
            } else {
                let s = verify::suite(&suite).ok_or_else(|| anyhow!("--suite: unknown suite {suite:?} (see --list)"))?;
                vec![(s.run)(max.unwrap_or(s.default_bound))]
            };
            suite_report(outcomes)
        }
        Command::FlaggedSchur { shape, k, nvars, check } => {
            let shape: Vec<usize> = parse_list(&shape, "--shape")?;
            if shape.windows(2).any(|w| w[0] < w[1]) {
                bail!("--shape: parts must be weakly decreasing");
            }
            let nvars = nvars.unwrap_or(k as usize + shape.iter().filter(|&&p| p > 0).count());
            let det = flagged_schur(&shape, k, nvars).context("--nvars")?;
            let mut rep = poly_report(&det);
            if check {
                let ok = flagged_ssyt_generating_function(&shape, k, nvars)? == det;
                rep.json["matches_tableaux"] = json!(ok);
                let _ = write!(rep.text, "\nmatches tableau generating function: {ok}");
                rep = rep.with_ok(ok);
            }
            rep
        }
    })
}

fn suite_report(outcomes: Vec<SuiteOutcome>) -> Report {
    let ok = outcomes.iter().all(SuiteOutcome::passed);
    let text = outcomes.iter().map(outcome_text).collect::<Vec<_>>().join("\n");
    Report::new(json!({ "passed": ok, "suites": to_json(&outcomes) }), text).with_ok(ok)
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("PATHLAB_THREADS") {
        let n: usize = v.trim().parse().map_err(|e| anyhow!("PATHLAB_THREADS: {v:?}: {e}"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| run(cli.command));
    match result {
        Ok(rep) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&rep.json).expect("json")),
                Format::Text => println!("{}", rep.text),
            }
            if rep.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
