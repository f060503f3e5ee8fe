//! Command-line front end for `blockcalc`.
//!
//! Each subcommand has an argument struct and a `cmd_*` function returning
//! the text to print, so everything can be driven from tests without a
//! process boundary. [`run`] maps results to exit codes:
//! 0 pass, 1 verification failure, 2 usage error, 3 unsupported configuration.

mod emit;

use std::sync::Arc;

use blockcalc::blocks::{battery, Basis, Block, BlockCalculus};
use blockcalc::coinv::{build_coinvariants, invariant_subalgebra};
use blockcalc::hecke::kl_table;
use blockcalc::soergel::{hom_space, split_idempotents_seeded, SoergelContext, DEFAULT_SEED};
use blockcalc::verify::{run_verify, CheckStatus, Scope, Tamper, VerifyConfig, VerifyReport};
use blockcalc::weyl::{
    classify_weight, dot_action, format_word, parse_word, stabilizer_dot, weyl_group, CartanType, ElemId,
    ParabolicData, Weight, WeylGroup,
};
use blockcalc::{Error, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use emit::{emit, Format, LabelledMatrix, Table};

#[derive(Debug, Parser)]
#[command(name = "blockcalc", version, about = "Exact K-group calculus for integral blocks of category O")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Group order, elements, and dot-orbit/stabiliser data of a weight.
    Weyl(WeylArgs),
    /// Kazhdan–Lusztig polynomials `P_{x,y}` for all `x <= y`.
    Kl(KlArgs),
    /// Coinvariant algebra: Hilbert series, Schubert structure constants, invariants.
    Coinv(CoinvArgs),
    /// Basis-change matrices of a block.
    Block(BlockArgs),
    /// Translation functor between two blocks.
    Translate(TranslateArgs),
    /// Bott–Samelson modules: dimensions, Hom spaces, splittings.
    Soergel(SoergelArgs),
    /// Run the verification battery.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Cartan type such as A2, B2, G2.
    #[arg(long = "type", short = 't')]
    pub cartan_type: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

/// Validated settings shared by every subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub cartan_type: CartanType,
    pub format: Format,
}

impl RunConfig {
    pub fn from_common(c: &Common) -> Result<Self> {
        Ok(RunConfig { cartan_type: c.cartan_type.parse()?, format: c.format })
    }
}

#[derive(Debug, Clone, Args)]
pub struct WeylArgs {
    #[command(flatten)]
    pub common: Common,
    /// Weight whose dot-orbit and stabiliser to report.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct KlArgs {
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoinvShow {
    Hilbert,
    Structure,
    Invariants,
}

#[derive(Debug, Clone, Args)]
pub struct CoinvArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value_t = CoinvShow::Hilbert)]
    pub show: CoinvShow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BlockShow {
    Decomposition,
    ProjectiveMatrix,
    Tilting,
    Simple,
}

#[derive(Debug, Clone, Args)]
pub struct BlockArgs {
    #[command(flatten)]
    pub common: Common,
    /// Integral ρ-dominant weight: integers `a,b,..`, `0`, or `antidominant-fixed`.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, value_enum, default_value_t = BlockShow::Decomposition)]
    pub show: BlockShow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TranslateShow {
    Verma,
    Simple,
}

#[derive(Debug, Clone, Args)]
pub struct TranslateArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, allow_hyphen_values = true)]
    pub from: String,
    #[arg(long, allow_hyphen_values = true)]
    pub to: String,
    #[arg(long, value_enum, default_value_t = TranslateShow::Verma)]
    pub show: TranslateShow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SoergelShow {
    Dims,
    Homs,
    Split,
}

#[derive(Debug, Clone, Args)]
pub struct SoergelArgs {
    #[command(flatten)]
    pub common: Common,
    /// Word in 1-based generators, e.g. `1,2,1`.
    #[arg(long, default_value = "")]
    pub word: String,
    /// Second word for `--show homs` (defaults to `--word`).
    #[arg(long)]
    pub word2: Option<String>,
    #[arg(long, value_enum, default_value_t = SoergelShow::Dims)]
    pub show: SoergelShow,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    /// Inject a known fault: swap-cosets, transposed-reciprocity, wrong-schubert-normalization.
    #[arg(long)]
    pub tamper: Option<String>,
    /// Print the convention battery and the frozen assignment instead.
    #[arg(long)]
    pub conventions: bool,
    /// Comma-separated modules to check (weyl, hecke, coinv, blocks, soergel).
    #[arg(long)]
    pub scope: Option<String>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_) => 2,
        Error::Unsupported(_) => 3,
        Error::Internal(_) | Error::SplittingIncomplete(_) => 1,
    }
}

/// Runs one command; returns standard output text and the exit code.
pub fn run(cli: &Cli) -> (String, i32) {
    let result = match &cli.command {
        Command::Weyl(a) => cmd_weyl(a).map(|s| (s, 0)),
        Command::Kl(a) => cmd_kl(a).map(|s| (s, 0)),
        Command::Coinv(a) => cmd_coinv(a).map(|s| (s, 0)),
        Command::Block(a) => cmd_block(a).map(|s| (s, 0)),
        Command::Translate(a) => cmd_translate(a).map(|s| (s, 0)),
        Command::Soergel(a) => cmd_soergel(a).map(|s| (s, 0)),
        Command::Verify(a) if a.conventions => cmd_conventions(a),
        Command::Verify(a) => cmd_verify(a).and_then(|r| {
            let code = if r.pass { 0 } else { 1 };
            Ok((render_report(&r, a.common.format)?, code))
        }),
    };
    result.unwrap_or_else(|e| (format!("error: {e}\n"), exit_code(&e)))
}

/// Parses a weight: comma-separated integers, `0` for the zero weight, or
/// `antidominant-fixed` for `-ρ`.
pub fn parse_weight(s: &str, g: &WeylGroup) -> Result<Weight> {
    let s = s.trim();
    let r = g.rank();
    if s == "antidominant-fixed" {
        return Ok(Weight::minus_rho(g.datum()));
    }
    if s == "0" {
        return Ok(Weight::zero(r));
    }
    let coords: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Usage(format!("bad weight coordinate {t:?} in {s:?}"))))
        .collect::<Result<_>>()?;
    if coords.len() != r {
        return Err(Error::Usage(format!("weight {s:?} has {} coordinates, rank is {r}", coords.len())));
    }
    Ok(Weight::from_ints(&coords))
}

fn word_of(g: &WeylGroup, w: ElemId) -> String {
    format_word(&g.elem(w).word)
}

fn words(g: &WeylGroup, ids: &[ElemId]) -> Vec<String> {
    ids.iter().map(|&w| word_of(g, w)).collect()
}

/// `"c0+c1*q+c2*q^2"` from dense coefficients.
pub fn format_poly(coeffs: &[i64]) -> String {
    if coeffs.is_empty() {
        return "0".into();
    }
    coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| match k {
            0 => c.to_string(),
            1 => format!("{c}*q"),
            _ => format!("{c}*q^{k}"),
        })
        .collect::<Vec<_>>()
        .join("+")
}

// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct WeylElementRow {
    id: usize,
    word: String,
    length: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    dot_image: Option<Weight>,
}

#[derive(Serialize)]
struct WeightData {
    lambda: Weight,
    integral: bool,
    regular: bool,
    rho_dominant: bool,
    stabilizer: Vec<String>,
    orbit_size: usize,
}

#[derive(Serialize)]
struct WeylOutput {
    cartan_type: String,
    order: usize,
    longest: String,
    poincare: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weight: Option<WeightData>,
    elements: Vec<WeylElementRow>,
}

pub fn cmd_weyl(args: &WeylArgs) -> Result<String> {
    let cfg = RunConfig::from_common(&args.common)?;
    let g = weyl_group(cfg.cartan_type)?;
    let lambda = args.lambda.as_deref().map(|s| parse_weight(s, &g)).transpose()?;
    let weight = match &lambda {
        Some(l) => {
            let class = classify_weight(g.datum(), l)?;
            let stab = stabilizer_dot(&g, l)?;
            Some(WeightData {
                lambda: l.clone(),
                integral: class.integral,
                regular: class.regular,
                rho_dominant: class.rho_dominant,
                stabilizer: words(&g, stab.subgroup()),
                orbit_size: stab.index(),
            })
        }
        None => None,
    };
    let elements = g
        .ids()
        .map(|w| WeylElementRow {
            id: w,
            word: word_of(&g, w),
            length: g.length(w),
            dot_image: lambda.as_ref().map(|l| dot_action(&g, w, l)),
        })
        .collect();
    let out = WeylOutput {
        cartan_type: cfg.cartan_type.to_string(),
        order: g.order(),
        longest: word_of(&g, g.longest()),
        poincare: g.poincare_polynomial(),
        weight,
        elements,
    };
    emit(cfg.format, &out, || {
        let mut header = vec!["id", "word", "length"];
        if lambda.is_some() {
            header.push("dot_image");
        }
        let mut t = Table::new(header)
            .title(format!("type {}: |W| = {}, w0 = {}", out.cartan_type, out.order, out.longest))
            .title(format!("Poincare polynomial: {}", format_poly(&out.poincare).replace('q', "t")));
        if let Some(w) = &out.weight {
            t = t
                .title(format!(
                    "lambda = {}: integral {}, regular {}, rho-dominant {}",
                    w.lambda, w.integral, w.regular, w.rho_dominant
                ))
                .title(format!("stabiliser {{{}}}, orbit size {}", w.stabilizer.join(", "), w.orbit_size));
        }
        for e in &out.elements {
            let mut row = vec![e.id.to_string(), e.word.clone(), e.length.to_string()];
            if let Some(d) = &e.dot_image {
                row.push(d.to_string());
            }
            t.push(row);
        }
        t
    })
}

// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct KlRow {
    x_word: String,
    y_word: String,
    polynomial: String,
    coeffs: Vec<i64>,
}

pub fn cmd_kl(args: &KlArgs) -> Result<String> {
    let cfg = RunConfig::from_common(&args.common)?;
    let g = weyl_group(cfg.cartan_type)?;
    let kl = kl_table(&g);
    let rows: Vec<KlRow> = g
        .ids()
        .flat_map(|y| g.ids().map(move |x| (x, y)))
        .filter(|&(x, y)| g.bruhat_leq(x, y))
        .map(|(x, y)| KlRow {
            x_word: word_of(&g, x),
            y_word: word_of(&g, y),
            polynomial: format_poly(kl.p(x, y)),
            coeffs: kl.p(x, y).to_vec(),
        })
        .collect();
    emit(cfg.format, &rows, || {
        let mut t = Table::new(["x_word", "y_word", "polynomial"]);
        for r in &rows {
            t.push([&r.x_word, &r.y_word, &r.polynomial]);
        }
        t
    })
}

// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct HilbertOutput {
    cartan_type: String,
    dim: usize,
    hilbert: Vec<i64>,
}

#[derive(Serialize)]
struct StructureRow {
    u: String,
    v: String,
    w: String,
    coeff: String,
}

#[derive(Serialize)]
struct InvariantRow {
    generators: Vec<usize>,
    subgroup_order: usize,
    dim: usize,
    hilbert: Vec<i64>,
}

pub fn cmd_coinv(args: &CoinvArgs) -> Result<String> {
    let cfg = RunConfig::from_common(&args.common)?;
    let g = weyl_group(cfg.cartan_type)?;
    let c = build_coinvariants(&g)?;
    match args.show {
        CoinvShow::Hilbert => {
            let out = HilbertOutput { cartan_type: cfg.cartan_type.to_string(), dim: c.dim(), hilbert: c.hilbert_series().coeffs };
            emit(cfg.format, &out, || {
                let mut t = Table::new(["degree", "dim"]).title(format!("dim C = {}", out.dim));
                for (k, d) in out.hilbert.iter().enumerate() {
                    t.push([k as i64, *d]);
                }
                t
            })
        }
        CoinvShow::Structure => {
            let rows: Vec<StructureRow> = c
                .structure_constants()
                .into_iter()
                .map(|(u, v, w, q)| StructureRow { u: word_of(&g, u), v: word_of(&g, v), w: word_of(&g, w), coeff: q.to_string() })
                .collect();
            emit(cfg.format, &rows, || {
                let mut t = Table::new(["u", "v", "w", "coeff"]).title("X_u X_v = sum_w c X_w");
                for r in &rows {
                    t.push([&r.u, &r.v, &r.w, &r.coeff]);
                }
                t
            })
        }
        CoinvShow::Invariants => {
            let r = g.rank();
            let rows: Vec<InvariantRow> = (0..1usize << r)
                .map(|m| {
                    let gens: Vec<usize> = (0..r).filter(|i| m >> i & 1 == 1).collect();
                    let par = ParabolicData::standard(&g, &gens)?;
                    let inv = invariant_subalgebra(&c, &par)?;
                    Ok(InvariantRow {
                        generators: gens.iter().map(|i| i + 1).collect(),
                        subgroup_order: par.size(),
                        dim: inv.dim(),
                        hilbert: inv.hilbert.coeffs,
                    })
                })
                .collect::<Result<_>>()?;
            emit(cfg.format, &rows, || {
                let mut t = Table::new(["generators", "subgroup_order", "dim", "hilbert"]);
                for row in &rows {
                    let gens: Vec<String> = row.generators.iter().map(usize::to_string).collect();
                    let hilb: Vec<String> = row.hilbert.iter().map(i64::to_string).collect();
                    t.push([
                        if gens.is_empty() { "-".to_string() } else { gens.join(" ") },
                        row.subgroup_order.to_string(),
                        row.dim.to_string(),
                        hilb.join(" "),
                    ]);
                }
                t
            })
        }
    }
}

// ---------------------------------------------------------------------------

fn block_matrix(block: &Block, show: BlockShow) -> Result<LabelledMatrix> {
    let g = block.group();
    let idx = words(g, block.index_set());
    let lambda = &block.descriptor().lambda;
    let (basis, title) = match show {
        BlockShow::Decomposition => {
            return Ok(LabelledMatrix::new(
                format!("[M_y : L_w] on the block of {lambda}"),
                ("M", idx.clone()),
                ("L", idx),
                block.decomposition_matrix(),
            ))
        }
        BlockShow::ProjectiveMatrix => (Basis::Projective, "(P_w : M_y)"),
        BlockShow::Tilting => (Basis::Tilting, "(Q_w : M_y)"),
        BlockShow::Simple => (Basis::Simple, "L_w in the Verma basis"),
    };
    let m = block.basis_matrix(basis)?;
    Ok(LabelledMatrix::new(format!("{title} on the block of {lambda}"), ("M", idx.clone()), (basis.symbol(), idx), m))
}

pub fn cmd_block(args: &BlockArgs) -> Result<String> {
    let cfg = RunConfig::from_common(&args.common)?;
    let calc = BlockCalculus::new(cfg.cartan_type)?;
    let lambda = parse_weight(&args.lambda, calc.group())?;
    let block = calc.block(&lambda)?;
    block_matrix(&block, args.show)?.emit(cfg.format)
}

pub fn cmd_translate(args: &TranslateArgs) -> Result<String> {
    let cfg = RunConfig::from_common(&args.common)?;
    let calc = BlockCalculus::new(cfg.cartan_type)?;
    let g = calc.group().clone();
    let src = calc.block(&parse_weight(&args.from, &g)?)?;
    let tgt = calc.block(&parse_weight(&args.to, &g)?)?;
    let src_idx = words(&g, src.index_set());
    let tgt_idx = words(&g, tgt.index_set());
    let (lf, lt) = (&src.descriptor().lambda, &tgt.descriptor().lambda);
    let onto = src.descriptor().stabilizer.is_subgroup_of(&tgt.descriptor().stabilizer);
    let out = match args.show {
        TranslateShow::Verma => {
            let f = if onto { calc.translate_to_wall(&src, &tgt)? } else { calc.translate_from_wall(&src, &tgt)? };
            LabelledMatrix::new(format!("translation {lf} -> {lt} on Verma classes"), ("M", tgt_idx), ("M", src_idx), &f.matrix)
        }
        TranslateShow::Simple => {
            let t = calc.translate_simple(&src, &tgt)?;
            LabelledMatrix::new(format!("translation {lf} -> {lt} on simple classes"), ("L", tgt_idx), ("L", src_idx), &t.matrix())
        }
    };
    out.emit(cfg.format)
}

// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct DimsOutput {
    word: String,
    total_dim: usize,
    graded_dims: Vec<usize>,
    projective_class: String,
}

#[derive(Serialize)]
struct HomsOutput {
    word1: String,
    word2: String,
    /// `(shift, dim)` pairs.
    by_shift: Vec<(i64, usize)>,
    total: usize,
    euler_form: i64,
}

#[derive(Serialize)]
struct SummandRow {
    total_dim: usize,
    graded_dims: Vec<usize>,
}

#[derive(Serialize)]
struct SplitOutput {
    word: String,
    summands: Vec<SummandRow>,
    predicted_dims: Vec<usize>,
}

pub fn cmd_soergel(args: &SoergelArgs) -> Result<String> {
    let cfg = RunConfig::from_common(&args.common)?;
    let calc = Arc::new(BlockCalculus::new(cfg.cartan_type)?);
    let alg = Arc::new(build_coinvariants(calc.group())?);
    let ctx = SoergelContext::new(alg, calc)?;
    let rank = cfg.cartan_type.rank;
    let word = parse_word(&args.word, rank)?;
    let bs = ctx.bott_samelson(&word)?;
    let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    match args.show {
        SoergelShow::Dims => {
            let out = DimsOutput {
                word: format_word(&word),
                total_dim: bs.dim(),
                graded_dims: bs.graded_dims(),
                projective_class: ctx.k_group_projective(&word)?.to_string(),
            };
            emit(cfg.format, &out, || {
                let mut t = Table::new(["degree", "dim"])
                    .title(format!("BS({}): dimension {}", out.word, out.total_dim))
                    .title(format!("K-group: {}", out.projective_class));
                for (k, d) in out.graded_dims.iter().enumerate() {
                    t.push([k, *d]);
                }
                t
            })
        }
        SoergelShow::Homs => {
            let word2 = match &args.word2 {
                Some(w) => parse_word(w, rank)?,
                None => word.clone(),
            };
            let other = ctx.bott_samelson(&word2)?;
            let h = hom_space(&bs, &other)?;
            let mut shifts: Vec<i64> = h.basis.iter().map(|(s, _)| *s).collect();
            shifts.sort_unstable();
            shifts.dedup();
            let out = HomsOutput {
                word1: format_word(&word),
                word2: format_word(&word2),
                by_shift: shifts.iter().map(|&s| (s, h.dim_of_shift(s))).collect(),
                total: h.dim(),
                euler_form: ctx.k_group_hom(&word, &word2)?,
            };
            emit(cfg.format, &out, || {
                let mut t = Table::new(["shift", "dim"])
                    .title(format!("Hom(BS({}), BS({})): dimension {}", out.word1, out.word2, out.total))
                    .title(format!("Euler form on the K-group: {}", out.euler_form));
                for (s, d) in &out.by_shift {
                    t.push([s.to_string(), d.to_string()]);
                }
                t
            })
        }
        SoergelShow::Split => {
            let parts = split_idempotents_seeded(&bs, args.seed)?;
            let mut summands: Vec<SummandRow> =
                parts.iter().map(|p| SummandRow { total_dim: p.dim(), graded_dims: p.graded_dims() }).collect();
            summands.sort_by(|a, b| b.total_dim.cmp(&a.total_dim).then_with(|| a.graded_dims.cmp(&b.graded_dims)));
            let out = SplitOutput { word: format_word(&word), summands, predicted_dims: ctx.predicted_summand_dims(&word)? };
            emit(cfg.format, &out, || {
                let mut t = Table::new(["summand", "total_dim", "graded_dims"])
                    .title(format!("BS({}) splits into {} summands", out.word, out.summands.len()))
                    .title(format!("K-group prediction: {}", join(&out.predicted_dims)));
                for (i, s) in out.summands.iter().enumerate() {
                    t.push([i.to_string(), s.total_dim.to_string(), join(&s.graded_dims)]);
                }
                t
            })
        }
    }
}

// ---------------------------------------------------------------------------

fn verify_config(args: &VerifyArgs) -> Result<VerifyConfig> {
    let cfg = RunConfig::from_common(&args.common)?;
    let tamper = args.tamper.as_deref().map(str::parse::<Tamper>).transpose()?;
    let mut config = VerifyConfig::new(cfg.cartan_type).with_tamper(tamper);
    if let Some(scope) = &args.scope {
        config.scope = scope.split(',').map(|s| s.trim().parse::<Scope>()).collect::<Result<_>>()?;
    }
    config.seed = args.seed;
    Ok(config)
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<VerifyReport> {
    run_verify(&verify_config(args)?)
}

pub fn render_report(report: &VerifyReport, format: Format) -> Result<String> {
    match format {
        Format::Table => Ok(format!("{report}\n")),
        _ => emit(format, report, || {
            let mut t = Table::new(["name", "anchor", "status", "witness"]);
            for c in &report.checks {
                let status = if c.status == CheckStatus::Pass { "pass" } else { "fail" };
                t.push([c.name.as_str(), c.anchor.as_str(), status, c.witness.as_deref().unwrap_or("")]);
            }
            t
        }),
    }
}

/// The convention battery: every candidate with its first failure.
fn cmd_conventions(args: &VerifyArgs) -> Result<(String, i32)> {
    RunConfig::from_common(&args.common)?;
    let report = battery()?;
    let code = if report.selected.is_some() { 0 } else { 1 };
    let table = || {
        let mut t = Table::new(["coset", "sigma", "action", "tilting", "survivor", "result"]);
        for o in &report.outcomes {
            let c = &o.conventions;
            t.push([
                format!("{:?}", c.coset_side),
                format!("{:?}", c.sigma),
                format!("{:?}", c.action_side),
                format!("{:?}", c.tilting_placement),
                format!("{:?}", c.survivor_rule),
                o.failure.clone().unwrap_or_else(|| "pass".into()),
            ]);
        }
        t
    };
    let text = match args.common.format {
        Format::Table => {
            let head = match &report.selected {
                Some(c) => format!("frozen conventions:\n{c}\n\n"),
                None => "no unique passing assignment\n\n".to_string(),
            };
            head + &table().render_table()
        }
        f => emit(f, report, table)?,
    };
    Ok((text, code))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_format() {
        assert_eq!(format_poly(&[1]), "1");
        assert_eq!(format_poly(&[1, 1]), "1+1*q");
        assert_eq!(format_poly(&[1, 0, 2]), "1+0*q+2*q^2");
        assert_eq!(format_poly(&[]), "0");
    }

    #[test]
    fn weight_parsing() {
        let g = weyl_group("A2".parse().unwrap()).unwrap();
        assert_eq!(parse_weight("0", &g).unwrap(), Weight::zero(2));
        assert_eq!(parse_weight("-1,0", &g).unwrap(), Weight::from_ints(&[-1, 0]));
        assert_eq!(parse_weight("antidominant-fixed", &g).unwrap(), Weight::from_ints(&[-1, -1]));
        assert!(matches!(parse_weight("1", &g), Err(Error::Usage(_))));
        assert!(matches!(parse_weight("x,1", &g), Err(Error::Usage(_))));
    }
}
