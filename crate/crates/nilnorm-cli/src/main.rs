//! Command-line front end: classify orbits, print normal forms, bushes and
//! Weyl-class invariants, and run the exact verification engines.
//!
//! Exit codes: 0 success, 1 domain error (bad partition, unknown label,
//! inadmissible algebra), 2 verification failure.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use nilnorm::classical::{self, ClassicalAlgebra, ClassicalSeries, NilpotentType, Partition};
use nilnorm::exceptional::{exceptional_types, BushRole, Catalogue, OrbitRecord};
use nilnorm::liealg::build_algebra;
use nilnorm::matrix_oracle;
use nilnorm::poly::phi_string;
use nilnorm::rootdata::SimpleType;
use nilnorm::weyl;
use nilnorm::Error;

const SCHEMA: &str = "nilnorm.v1";

#[derive(Parser)]
#[command(
    name = "nilnorm",
    version,
    about = "Normal forms, depths, bushes and Weyl-class invariants of nilpotent orbits in simple Lie algebras"
)]
struct Cli {
    /// Emit self-describing JSON records (one per line) instead of text.
    #[arg(long, global = true)]
    structured: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Type (semisimple/nilpotent/mixed), depth and reduced depth.
    Classify {
        /// Classical series (sl, sp, so, optionally with N) or exceptional type (G2..E8).
        algebra: String,
        /// Bala-Carter label for exceptional algebras.
        label: Option<String>,
        /// Partition for classical algebras, e.g. "5,4,4" or "10^2,3,1^5".
        #[arg(long)]
        partition: Option<String>,
    },
    /// The normal form of the orbit.
    #[command(name = "normal-form")]
    NormalForm {
        algebra: String,
        label: Option<String>,
        #[arg(long)]
        partition: Option<String>,
    },
    /// The bush containing the orbit: leader first, then members.
    Bush {
        algebra: String,
        label: Option<String>,
        #[arg(long)]
        partition: Option<String>,
    },
    /// Weyl-class invariants of the orbit's normal form.
    Weyl {
        algebra: String,
        label: Option<String>,
        #[arg(long)]
        partition: Option<String>,
    },
    /// Run the exact verification engine on one orbit (or a classical sweep).
    Verify {
        algebra: String,
        label: Option<String>,
        #[arg(long)]
        partition: Option<String>,
        /// Verify every valid partition with total up to this bound.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Enumerate orbits.
    List {
        algebra: String,
        /// Required for classical series: bound on N.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Look up one exceptional orbit by label or alias.
    Lookup { algebra: String, label: String },
}

enum AlgebraSpec {
    Classical(ClassicalSeries, Option<usize>),
    Exceptional(SimpleType),
}

fn parse_algebra(text: &str) -> Result<AlgebraSpec, Error> {
    let t = text.trim();
    let lower = t.to_ascii_lowercase();
    for series in [
        ClassicalSeries::Sl,
        ClassicalSeries::Sp,
        ClassicalSeries::So,
    ] {
        if let Some(rest) = lower.strip_prefix(series.name()) {
            let rest = rest.trim_start_matches('_');
            if rest.is_empty() {
                return Ok(AlgebraSpec::Classical(series, None));
            }
            let n: usize = rest
                .parse()
                .map_err(|_| Error::InadmissibleType(format!("bad algebra spec `{t}`")))?;
            return Ok(AlgebraSpec::Classical(series, Some(n)));
        }
    }
    let stype = SimpleType::parse(t)?;
    if !exceptional_types().contains(&stype) {
        return Err(Error::InadmissibleType(format!(
            "`{t}`: classical types are addressed as sl/sp/so with a partition; \
             the catalogue covers G2 F4 E6 E7 E8"
        )));
    }
    Ok(AlgebraSpec::Exceptional(stype))
}

/// A resolved classical query.
struct ClassicalQuery {
    algebra: ClassicalAlgebra,
    partition: Partition,
}

fn resolve_classical(
    series: ClassicalSeries,
    n: Option<usize>,
    partition: &Option<String>,
) -> Result<ClassicalQuery, Error> {
    let text = partition
        .as_deref()
        .ok_or_else(|| Error::MalformedPartition("classical queries need --partition".into()))?;
    let p = Partition::parse(text)?;
    let n = n.unwrap_or_else(|| p.total());
    let algebra = ClassicalAlgebra::new(series, n)?;
    classical::validate(&algebra, &p)?;
    Ok(ClassicalQuery {
        algebra,
        partition: p,
    })
}

fn exceptional_type_of(rec: &OrbitRecord) -> NilpotentType {
    if rec.depth % 2 != 0 {
        NilpotentType::Nilpotent
    } else if rec.is_leader() {
        NilpotentType::Semisimple
    } else {
        NilpotentType::Mixed
    }
}

struct Out {
    structured: bool,
}

impl Out {
    fn emit(&self, record: Value, text: String) {
        if self.structured {
            let mut obj = record;
            if let Value::Object(map) = &mut obj {
                map.insert("schema".into(), Value::String(SCHEMA.into()));
            }
            println!("{obj}");
        } else {
            println!("{text}");
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Out {
        structured: cli.structured,
    };
    match run(cli.command, &out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command, out: &Out) -> Result<ExitCode, Error> {
    match command {
        Command::Classify {
            algebra,
            label,
            partition,
        } => match parse_algebra(&algebra)? {
            AlgebraSpec::Classical(series, n) => {
                let q = resolve_classical(series, n, &partition)?;
                let t = classical::classify_type(&q.algebra, &q.partition)?;
                let d = classical::depth(&q.algebra, &q.partition)?;
                let rd = classical::reduced_depth(&q.algebra, &q.partition)?;
                out.emit(
                    json!({
                        "command": "classify",
                        "algebra": q.algebra.to_string(),
                        "partition": q.partition.to_string(),
                        "type": t.to_string(),
                        "depth": d,
                        "reduced_depth": rd,
                    }),
                    format!(
                        "algebra: {}\norbit: {}\ntype: {t}\ndepth: {d}\nreduced depth: {rd}",
                        q.algebra, q.partition
                    ),
                );
                Ok(ExitCode::SUCCESS)
            }
            AlgebraSpec::Exceptional(stype) => {
                let cat = Catalogue::load()?;
                let rec = cat.lookup(stype, &required_label(&label, &partition)?)?;
                let t = exceptional_type_of(rec);
                let rd = if rec.depth % 2 != 0 {
                    rec.depth - 1
                } else {
                    rec.depth
                };
                out.emit(
                    json!({
                        "command": "classify",
                        "algebra": stype.to_string(),
                        "label": rec.label,
                        "type": t.to_string(),
                        "depth": rec.depth,
                        "reduced_depth": rd,
                    }),
                    format!(
                        "algebra: {stype}\norbit: {}\ntype: {t}\ndepth: {}\nreduced depth: {rd}",
                        rec.label, rec.depth
                    ),
                );
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::NormalForm {
            algebra,
            label,
            partition,
        } => match parse_algebra(&algebra)? {
            AlgebraSpec::Classical(series, n) => {
                let q = resolve_classical(series, n, &partition)?;
                let nf = classical::normal_form(&q.algebra, &q.partition)?;
                out.emit(
                    json!({
                        "command": "normal-form",
                        "algebra": q.algebra.to_string(),
                        "partition": q.partition.to_string(),
                        "normal_form": nf.to_string(),
                        "components": nf_components_json(&nf),
                    }),
                    nf.to_string(),
                );
                Ok(ExitCode::SUCCESS)
            }
            AlgebraSpec::Exceptional(stype) => {
                let cat = Catalogue::load()?;
                let rec = cat.lookup(stype, &required_label(&label, &partition)?)?;
                out.emit(
                    json!({
                        "command": "normal-form",
                        "algebra": stype.to_string(),
                        "label": rec.label,
                        "normal_form": rec.normal_form.to_string(),
                        "components": nf_components_json(&rec.normal_form),
                    }),
                    rec.normal_form.to_string(),
                );
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Bush {
            algebra,
            label,
            partition,
        } => match parse_algebra(&algebra)? {
            AlgebraSpec::Classical(series, n) => {
                let q = resolve_classical(series, n, &partition)?;
                let leader = classical::bush_leader(&q.algebra, &q.partition)?;
                let mut rows = vec![leader.clone()];
                for p in classical::orbits(&q.algebra) {
                    if p != leader && classical::bush_leader(&q.algebra, &p) == Ok(leader.clone()) {
                        rows.push(p);
                    }
                }
                let mut text = String::new();
                let mut items = Vec::new();
                for (i, p) in rows.iter().enumerate() {
                    let nf = classical::normal_form(&q.algebra, p)?;
                    let role = if i == 0 { "leader" } else { "member" };
                    text.push_str(&format!("{role}\t{p}\t{nf}\n"));
                    items.push(json!({
                        "role": role,
                        "partition": p.to_string(),
                        "normal_form": nf.to_string(),
                    }));
                }
                out.emit(
                    json!({
                        "command": "bush",
                        "algebra": q.algebra.to_string(),
                        "partition": q.partition.to_string(),
                        "bush": items,
                    }),
                    text.trim_end().to_string(),
                );
                Ok(ExitCode::SUCCESS)
            }
            AlgebraSpec::Exceptional(stype) => {
                let cat = Catalogue::load()?;
                let rows = cat.bush(stype, &required_label(&label, &partition)?)?;
                let mut text = String::new();
                let mut items = Vec::new();
                for (i, rec) in rows.iter().enumerate() {
                    let role = if i == 0 { "leader" } else { "member" };
                    text.push_str(&format!(
                        "{role}\t{}\td={}\t{}\n",
                        rec.label, rec.depth, rec.normal_form
                    ));
                    items.push(json!({
                        "role": role,
                        "label": rec.label,
                        "depth": rec.depth,
                        "normal_form": rec.normal_form.to_string(),
                    }));
                }
                out.emit(
                    json!({
                        "command": "bush",
                        "algebra": stype.to_string(),
                        "bush": items,
                    }),
                    text.trim_end().to_string(),
                );
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Weyl {
            algebra,
            label,
            partition,
        } => match parse_algebra(&algebra)? {
            AlgebraSpec::Classical(series, n) => {
                let q = resolve_classical(series, n, &partition)?;
                let inv = weyl::classical_composite_invariant(&q.algebra, &q.partition)?;
                let nf = classical::normal_form(&q.algebra, &q.partition)?;
                let ambient = inv.ambient_charpoly.as_ref().expect("classical ambient");
                let factors = nilnorm::poly::cyclotomic_factor(ambient)?;
                let text = format!(
                    "normal form: {nf}\norder: {}\ncomponents: {}\nambient charpoly: {}\nambient charpoly coeffs: {:?}\nambient charpoly factors: {}",
                    inv.total_order,
                    components_text(&inv),
                    ambient,
                    ambient.coeffs(),
                    phi_string(&factors),
                );
                out.emit(
                    json!({
                        "command": "weyl",
                        "algebra": q.algebra.to_string(),
                        "partition": q.partition.to_string(),
                        "normal_form": nf.to_string(),
                        "order": inv.total_order,
                        "components": components_json(&inv),
                        "ambient_charpoly_coeffs": ambient.coeffs().to_vec(),
                        "ambient_charpoly_factors": phi_string(&factors),
                    }),
                    text,
                );
                Ok(ExitCode::SUCCESS)
            }
            AlgebraSpec::Exceptional(stype) => {
                let cat = Catalogue::load()?;
                let rec = cat.lookup(stype, &required_label(&label, &partition)?)?;
                let inv = weyl::composite_invariant(&rec.normal_form);
                let text = format!(
                    "normal form: {}\norder: {}\ncomponents: {}",
                    rec.normal_form,
                    inv.total_order,
                    components_text(&inv),
                );
                out.emit(
                    json!({
                        "command": "weyl",
                        "algebra": stype.to_string(),
                        "label": rec.label,
                        "normal_form": rec.normal_form.to_string(),
                        "order": inv.total_order,
                        "components": components_json(&inv),
                    }),
                    text,
                );
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Verify {
            algebra,
            label,
            partition,
            max_n,
        } => match parse_algebra(&algebra)? {
            AlgebraSpec::Classical(series, n) => {
                if let Some(bound) = max_n {
                    return verify_sweep(series, bound, out);
                }
                let q = resolve_classical(series, n, &partition)?;
                let report = matrix_oracle::verify_normal_form(&q.algebra, &q.partition)?;
                let ok = report.all_ok();
                let text = format!(
                    "algebra: {}\npartition: {}\nmembers of algebra: {}\ncomponents commute: {}\njordan type of sum matches: {}\nmax component depth = reduced depth: {}\ncomponent depths match: {}\n{}",
                    q.algebra,
                    q.partition,
                    report.members_of_algebra,
                    report.components_commute,
                    report.jordan_type_matches,
                    report.max_depth_equals_reduced_depth,
                    report.component_depths_match,
                    if ok { "all checks passed" } else { "VERIFICATION FAILED" },
                );
                out.emit(
                    json!({
                        "command": "verify",
                        "algebra": q.algebra.to_string(),
                        "partition": q.partition.to_string(),
                        "members_of_algebra": report.members_of_algebra,
                        "components_commute": report.components_commute,
                        "jordan_type_matches": report.jordan_type_matches,
                        "max_depth_equals_reduced_depth": report.max_depth_equals_reduced_depth,
                        "component_depths_match": report.component_depths_match,
                        "ok": ok,
                    }),
                    text,
                );
                Ok(if ok {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(2)
                })
            }
            AlgebraSpec::Exceptional(stype) => {
                let cat = Catalogue::load()?;
                let rec = cat.lookup(stype, &required_label(&label, &partition)?)?;
                let g = build_algebra(stype)?;
                match g.realize_representative(rec) {
                    Ok(r) => {
                        let ok = r.depth == rec.depth;
                        let text = format!(
                            "algebra: {stype}\norbit: {}\ncatalogue depth: {}\nrecomputed depth: {}\ndynkin labels: {:?}\ndim g_d: {}\n{}",
                            rec.label,
                            rec.depth,
                            r.depth,
                            r.labels,
                            r.decomposition.dim_top(),
                            if ok { "all checks passed" } else { "VERIFICATION FAILED" },
                        );
                        out.emit(
                            json!({
                                "command": "verify",
                                "algebra": stype.to_string(),
                                "label": rec.label,
                                "catalogue_depth": rec.depth,
                                "recomputed_depth": r.depth,
                                "dynkin_labels": r.labels,
                                "dim_top": r.decomposition.dim_top(),
                                "ok": ok,
                            }),
                            text,
                        );
                        Ok(if ok {
                            ExitCode::SUCCESS
                        } else {
                            ExitCode::from(2)
                        })
                    }
                    Err(e) => {
                        eprintln!("verification failed: {e}");
                        Ok(ExitCode::from(2))
                    }
                }
            }
        },
        Command::List { algebra, max_n } => match parse_algebra(&algebra)? {
            AlgebraSpec::Classical(series, n) => {
                let bound = max_n.or(n).ok_or_else(|| {
                    Error::InadmissibleType(
                        "list for a classical series needs --max-n".into(),
                    )
                })?;
                let mut text = String::new();
                let mut items = Vec::new();
                let min = match series {
                    ClassicalSeries::So => 7,
                    _ => 2,
                };
                for total in min..=bound {
                    let Ok(alg) = ClassicalAlgebra::new(series, total) else {
                        continue;
                    };
                    for p in classical::orbits(&alg) {
                        let d = classical::depth(&alg, &p)?;
                        let t = classical::classify_type(&alg, &p)?;
                        let nf = classical::normal_form(&alg, &p)?;
                        text.push_str(&format!("{alg}\t{p}\td={d}\t{t}\t{nf}\n"));
                        items.push(json!({
                            "algebra": alg.to_string(),
                            "partition": p.to_string(),
                            "depth": d,
                            "type": t.to_string(),
                            "normal_form": nf.to_string(),
                        }));
                    }
                }
                out.emit(
                    json!({ "command": "list", "orbits": items }),
                    text.trim_end().to_string(),
                );
                Ok(ExitCode::SUCCESS)
            }
            AlgebraSpec::Exceptional(stype) => {
                let cat = Catalogue::load()?;
                let mut text = String::new();
                let mut items = Vec::new();
                for rec in cat.enumerate(stype) {
                    text.push_str(&format!(
                        "{}\td={}\t{}\t{}\n",
                        rec.label,
                        rec.depth,
                        rec.normal_form,
                        rec.embedding.join(" + ")
                    ));
                    items.push(json!({
                        "label": rec.label,
                        "depth": rec.depth,
                        "normal_form": rec.normal_form.to_string(),
                        "embedding": rec.embedding,
                    }));
                }
                out.emit(
                    json!({
                        "command": "list",
                        "algebra": stype.to_string(),
                        "orbits": items,
                    }),
                    text.trim_end().to_string(),
                );
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Lookup { algebra, label } => match parse_algebra(&algebra)? {
            AlgebraSpec::Classical(..) => Err(Error::InadmissibleType(
                "lookup serves the exceptional catalogue; classical orbits are addressed by partition".into(),
            )),
            AlgebraSpec::Exceptional(stype) => {
                let cat = Catalogue::load()?;
                let rec = cat.lookup(stype, &label)?;
                let aliases = if rec.aliases.is_empty() {
                    "-".to_string()
                } else {
                    rec.aliases.join(", ")
                };
                let bush_role = match &rec.bush_role {
                    BushRole::Leader => "leader".to_string(),
                    BushRole::Member { leader, .. } => format!("member of {leader}"),
                };
                let text = format!(
                    "{stype} {}\ndepth: {}\nnormal form: {}\nembedding: {}\nbush: {bush_role}\naliases: {aliases}",
                    rec.label,
                    rec.depth,
                    rec.normal_form,
                    rec.embedding.join(" + "),
                );
                out.emit(
                    json!({
                        "command": "lookup",
                        "algebra": stype.to_string(),
                        "label": rec.label,
                        "aliases": rec.aliases,
                        "depth": rec.depth,
                        "normal_form": rec.normal_form.to_string(),
                        "printed_normal_form": rec.printed_normal_form,
                        "embedding": rec.embedding,
                        "bush": bush_role,
                    }),
                    text,
                );
                Ok(ExitCode::SUCCESS)
            }
        },
    }
}

fn required_label(label: &Option<String>, partition: &Option<String>) -> Result<String, Error> {
    if partition.is_some() {
        return Err(Error::InadmissibleType(
            "exceptional orbits are addressed by label, not --partition".into(),
        ));
    }
    label
        .clone()
        .ok_or_else(|| Error::InadmissibleType("exceptional queries need an orbit label".into()))
}

fn nf_components_json(nf: &classical::NormalForm) -> Vec<Value> {
    nf.entries()
        .iter()
        .map(|(c, m)| {
            json!({
                "kind": c.to_string(),
                "multiplicity": m,
                "intrinsic_depth": c.intrinsic_depth(),
            })
        })
        .collect()
}

fn components_text(inv: &weyl::WeylClassInvariant) -> String {
    if inv.components.is_empty() {
        return "(none)".into();
    }
    inv.components
        .iter()
        .map(|(c, order, factors)| format!("{c}: order {order}, charpoly {}", phi_string(factors)))
        .collect::<Vec<_>>()
        .join("; ")
}

fn components_json(inv: &weyl::WeylClassInvariant) -> Vec<Value> {
    inv.components
        .iter()
        .map(|(c, order, factors)| {
            json!({
                "kind": c.to_string(),
                "order": order,
                "charpoly_factors": phi_string(factors),
            })
        })
        .collect()
}

fn verify_sweep(series: ClassicalSeries, bound: usize, out: &Out) -> Result<ExitCode, Error> {
    let min = match series {
        ClassicalSeries::So => 7,
        _ => 2,
    };
    let mut total = 0usize;
    let mut failures = Vec::new();
    for n in min..=bound {
        let Ok(algebra) = ClassicalAlgebra::new(series, n) else {
            continue;
        };
        for p in classical::partitions_of(n) {
            if classical::validate(&algebra, &p).is_err() {
                continue;
            }
            let report = matrix_oracle::verify_normal_form(&algebra, &p)?;
            total += 1;
            if !report.all_ok() {
                failures.push(format!("{algebra} {p}"));
            }
        }
    }
    let ok = failures.is_empty();
    out.emit(
        json!({
            "command": "verify",
            "series": series.name(),
            "max_n": bound,
            "verified": total,
            "failures": failures,
            "ok": ok,
        }),
        format!(
            "verified {total} partitions of {} up to N = {bound}\n{}",
            series.name(),
            if ok {
                "all checks passed".to_string()
            } else {
                format!("VERIFICATION FAILED for: {}", failures.join(", "))
            }
        ),
    );
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}
