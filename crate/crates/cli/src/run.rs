use std::fmt::Write as _;
use std::ops::RangeInclusive;

use covering_cycles::census::{hamiltonian_count, Census, CensusConfig};
use covering_cycles::identity::{self, default_order, DCoefficients};
use covering_cycles::oracle::{self, walk_census};
use covering_cycles::{Error, MultiGraph, Result, Sign};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::{Cli, Command, Format, Route, SignArg};

/// Exact products above this many edges are skipped in `verify`; their
/// degree grows like `|E| 2^|E|`.
const EXACT_PRODUCT_MAX_EDGES: usize = 12;

pub struct Output {
    pub text: String,
    pub warnings: Vec<String>,
    /// False when an identity or cross-check that must hold did not.
    pub consistent: bool,
}

struct Report {
    json: Value,
    table: String,
    consistent: bool,
}

pub fn run(cli: &Cli, graph: &MultiGraph) -> Result<Output> {
    let config = CensusConfig {
        subset_limit: cli.subset_limit,
        ..CensusConfig::default()
    };
    let mut warnings = Vec::new();
    let census = Census::new(graph, config)?;
    if census.leaves_pruned() {
        warnings.push(format!(
            "removed {} edge(s) at degree-one vertices; counting the {}-edge core",
            graph.edge_count() - census.edge_count(),
            census.edge_count()
        ));
    }
    let order = cli
        .order
        .unwrap_or_else(|| default_order(census.edge_count()));
    let report = match cli.command {
        Command::Census => census_report(&census, lengths(cli, 1..=order)?)?,
        Command::Euler => euler_report(&census, config, &mut warnings)?,
        Command::Series => {
            series_report(&census, checked_order(&census, order)?, cli.sign, cli.route)?
        }
        Command::Verify => verify_report(&census, checked_order(&census, order)?)?,
        Command::Oracle => oracle_report(&census, lengths(cli, 1..=order.min(8))?, cli.oracle_cap)?,
    };
    let mut text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report.json).expect("serializable"),
        Format::Table => report.table,
    };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    Ok(Output {
        text,
        warnings,
        consistent: report.consistent,
    })
}

fn lengths(cli: &Cli, default: RangeInclusive<usize>) -> Result<RangeInclusive<usize>> {
    let range = cli.length.clone().unwrap_or(default);
    if *range.start() == 0 {
        return Err(Error::ZeroLength);
    }
    Ok(range)
}

fn checked_order(census: &Census, order: usize) -> Result<usize> {
    if order < census.edge_count() || order == 0 {
        return Err(Error::OrderTooSmall {
            order,
            edges: census.edge_count(),
        });
    }
    Ok(order)
}

fn numbered<'a>(values: impl Iterator<Item = (usize, &'a BigInt)>) -> Value {
    let map: Map<String, Value> = values
        .map(|(n, v)| (n.to_string(), Value::String(v.to_string())))
        .collect();
    Value::Object(map)
}

fn census_report(census: &Census, range: RangeInclusive<usize>) -> Result<Report> {
    let table = census.table(*range.end())?;
    let pick = |map: &std::collections::BTreeMap<usize, BigInt>| {
        numbered(map.range(range.clone()).map(|(&n, v)| (n, v)))
    };
    let json = json!({
        "omega": pick(&table.omega),
        "theta": pick(&table.theta),
    });
    let mut text = format!("{:>4}  {:>24}  {:>24}\n", "N", "omega", "theta");
    for n in range.clone() {
        let _ = writeln!(
            text,
            "{n:>4}  {:>24}  {:>24}",
            table.omega[&n], table.theta[&n]
        );
    }
    Ok(Report {
        json,
        table: text,
        consistent: true,
    })
}

fn euler_report(
    census: &Census,
    config: CensusConfig,
    warnings: &mut Vec<String>,
) -> Result<Report> {
    if !census.is_directed() {
        let count = census.euler_count()?;
        return Ok(Report {
            json: json!({ "euler_cycles": count.to_string() }),
            table: format!("euler cycles: {count}\n"),
            consistent: true,
        });
    }
    let report = hamiltonian_count(census.original(), config)?;
    if !report.halved_agrees() {
        warnings.push(format!(
            "directed cycles have no separate reversal; reporting {} Hamiltonian cycle class(es), \
             halved value would be {}",
            report.classes, report.halved
        ));
    }
    let json = json!({
        "hamiltonian_cycles": report.classes.to_string(),
        "marked_hamiltonian_walks": report.marked.to_string(),
        "halved": report.halved.to_string(),
        "halved_agrees": report.halved_agrees(),
    });
    let table = format!(
        "hamiltonian cycles: {}\nmarked walks:       {}\nhalved value:       {}\n",
        report.classes, report.marked, report.halved
    );
    Ok(Report {
        json,
        table,
        consistent: true,
    })
}

fn signs(sel: SignArg) -> Vec<Sign> {
    match sel {
        SignArg::Plus => vec![Sign::Plus],
        SignArg::Minus => vec![Sign::Minus],
        SignArg::Both => Sign::both().to_vec(),
    }
}

fn sign_key(sign: Sign) -> &'static str {
    match sign {
        Sign::Plus => "d_plus",
        Sign::Minus => "d_minus",
    }
}

fn series_report(census: &Census, order: usize, sel: SignArg, route: Route) -> Result<Report> {
    let table = census.table(order)?;
    let h = identity::h_series(&table, order)?;
    let mut json = Map::new();
    json.insert("order".into(), json!(order));
    let route_name = match route {
        Route::Exp => "exp",
        Route::Partition => "partition",
        Route::Determinant => "determinant",
    };
    json.insert("route".into(), json!(route_name));
    let mut columns = Vec::new();
    for sign in signs(sel) {
        let d = match route {
            Route::Exp => identity::d_from_exp(&h, sign)?,
            Route::Partition => identity::d_sequence_from_partitions(&table, order, sign)?,
            Route::Determinant => identity::d_from_determinants(census, order, sign)?,
        };
        json.insert(sign_key(sign).into(), numbered(d.iter()));
        columns.push((sign_key(sign), d));
    }
    Ok(Report {
        json: Value::Object(json),
        table: coefficient_table(&columns),
        consistent: true,
    })
}

fn coefficient_table(columns: &[(&str, DCoefficients)]) -> String {
    let mut text = format!("{:>4}", "i");
    for (name, _) in columns {
        let _ = write!(text, "  {name:>24}");
    }
    text.push('\n');
    let order = columns.first().map_or(0, |(_, d)| d.order());
    for i in 1..=order {
        let _ = write!(text, "{i:>4}");
        for (_, d) in columns {
            let _ = write!(text, "  {:>24}", d.get(i));
        }
        text.push('\n');
    }
    text
}

fn verify_report(census: &Census, order: usize) -> Result<Report> {
    let report = identity::verify(census, order)?;
    let items: Vec<Value> = report
        .items
        .iter()
        .map(|item| {
            json!({
                "item": item.item.to_string(),
                "statement": item.statement,
                "range": [item.first, item.last],
                "passed": item.passed,
                "first_failure": item.first_failure,
                "below_threshold": item.below_threshold,
            })
        })
        .collect();
    let product = (census.edge_count() <= EXACT_PRODUCT_MAX_EDGES)
        .then(|| identity::determinant_product(census).to_string());
    let route_json = |sign: Sign| {
        let r = report.route(sign);
        json!({
            "exp": numbered(r.exp.iter()),
            "partition_agrees": r.exp == r.partition,
            "determinant_agrees": r.exp == r.determinant,
        })
    };
    let json = json!({
        "order": order,
        "edges": report.edge_count,
        "routes_agree": report.routes_agree(),
        "d_plus": route_json(Sign::Plus),
        "d_minus": route_json(Sign::Minus),
        "items": items,
        "theta_product_matches": report.theta_product_matches,
        "euler_cycles": report.euler_count.as_ref().map(|c| c.to_string()),
        "euler_from_d": report.euler_from_d.as_ref().map(|c| c.to_string()),
        "determinant_product": product,
        "passed": report.passed(),
    });

    let mark = |ok: bool| if ok { "pass" } else { "FAIL" };
    let mut text = format!("order {order}, |E| = {}\n", report.edge_count);
    let _ = writeln!(text, "three routes agree: {}", mark(report.routes_agree()));
    for item in &report.items {
        let _ = writeln!(
            text,
            "  {}) {:<46} n in [{}, {}]: {}",
            item.item,
            item.statement,
            item.first,
            item.last,
            mark(item.passed)
        );
    }
    let _ = writeln!(
        text,
        "theta product = e^(-h): {}",
        mark(report.theta_product_matches)
    );
    if let Some(p) = &product {
        let _ = writeln!(text, "determinant product: {p}");
    }
    let columns = [
        ("d_plus", report.plus.exp.clone()),
        ("d_minus", report.minus.exp.clone()),
    ];
    text.push_str(&coefficient_table(&columns));
    Ok(Report {
        json,
        table: text,
        consistent: report.passed(),
    })
}

fn oracle_report(census: &Census, range: RangeInclusive<usize>, cap: u128) -> Result<Report> {
    let g = census.graph();
    let traces = g.cycle_matrix().trace_powers(*range.end());
    let table = census.table(*range.end())?;
    let mut rows = Map::new();
    let mut discrepancies = 0;
    let mut text = format!(
        "{:>4}  {:>14} {:>14}  {:>14} {:>14}  {:>12} {:>12}\n",
        "N", "closed walks", "trace", "covering", "omega", "classes", "theta"
    );
    for n in range {
        let walks = walk_census(g, n, cap)?;
        let closed = BigInt::from(walks.closed);
        let covering = BigInt::from(walks.covering);
        let classes = BigInt::from(walks.nonperiodic_classes());
        let (omega, theta) = (&table.omega[&n], &table.theta[&n]);
        let agree = closed == traces[n - 1] && &covering == omega && &classes == theta;
        if !agree {
            discrepancies += 1;
        }
        rows.insert(
            n.to_string(),
            json!({
                "closed_walks": closed.to_string(),
                "trace": traces[n - 1].to_string(),
                "covering_walks": covering.to_string(),
                "omega": omega.to_string(),
                "classes": classes.to_string(),
                "theta": theta.to_string(),
                "agree": agree,
            }),
        );
        let _ = writeln!(
            text,
            "{n:>4}  {closed:>14} {:>14}  {covering:>14} {omega:>14}  {classes:>12} {theta:>12}{}",
            traces[n - 1],
            if agree { "" } else { "  <- mismatch" }
        );
    }
    let mut json = Map::new();
    json.insert("lengths".into(), Value::Object(rows));
    if g.is_directed() {
        let ham = hamiltonian_count(g, census.config())?;
        let brute = oracle::count_hamiltonian_classes(g, cap).ok();
        if brute.as_ref().is_some_and(|b| *b != ham.classes) {
            discrepancies += 1;
        }
        json.insert(
            "hamiltonian".into(),
            json!({ "census": ham.classes.to_string(), "oracle": brute.map(|b| b.to_string()) }),
        );
    } else {
        let euler = census.euler_count()?;
        let brute = oracle::count_euler_classes(g, cap);
        if let Err(Error::SelfInverseClass(_)) = &brute {
            discrepancies += 1;
        }
        let brute = brute.ok();
        if brute.as_ref().is_some_and(|b| *b != euler) {
            discrepancies += 1;
        }
        json.insert(
            "euler".into(),
            json!({ "census": euler.to_string(), "oracle": brute.map(|b| b.to_string()) }),
        );
    }
    json.insert("discrepancies".into(), json!(discrepancies));
    let _ = writeln!(text, "discrepancies: {discrepancies}");
    Ok(Report {
        json: Value::Object(json),
        table: text,
        consistent: discrepancies == 0,
    })
}
