use std::io::{BufRead, Write};
use std::time::Instant;

use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;

use decision_sort::baselines::{
    comparison_report, instrumented_bubble, instrumented_quick, render_comparison_text,
    BaselineCounters, CostWeights,
};
use decision_sort::cost_model::{
    classify_regime, parallel_estimate, sequential_cost, speedup_table, ParallelEstimate, Regime,
};
use decision_sort::{
    decision_sort_multiset, decision_sort_unique, parallel_decision_sort, IncrementalSorter,
    KeyDomain, OpCounters,
};

use crate::io::{open_input, open_output, parse_key, read_keys, write_keys};
use crate::{
    AnalyzeArgs, BenchArgs, CompareArgs, Failure, Format, ModelArgs, SortArgs, StreamArgs,
};

/// Bubble sort is quadratic; above this size the bench skips it.
const BUBBLE_BENCH_CEILING: usize = 20_000;

pub fn sort(args: SortArgs) -> Result<(), Failure> {
    let keys = read_keys(open_input(args.input.as_ref())?)?;
    let mut out = open_output(args.output.as_deref())?;

    if keys.is_empty() && args.domain.lower.is_none() {
        // Nothing to sort and no domain to scan.
        if args.stats {
            emit_stats(&OpCounters::default())?;
        }
        return out.flush().map_err(Failure::from);
    }

    let domain = resolve_domain(&keys, &args.domain)?;
    let (sorted, counters) = match (&args.workers, args.multiset) {
        (Some(workers), false) => {
            let sorted = parallel_decision_sort(&keys, &domain, workers.resolve())?;
            // Work is partitioned, not duplicated: the totals match the
            // sequential accounting exactly.
            let n = sorted.len() as u64;
            let counters = OpCounters {
                mark_writes: n,
                emit_comparisons: domain.size(),
                emit_writes: n,
                iterations: n + domain.size(),
                swaps: 0,
            };
            (sorted, counters)
        }
        (Some(_), true) => {
            return Err(Failure::usage(
                "--workers requires unique keys and cannot be combined with --multiset",
            ));
        }
        (None, true) => decision_sort_multiset(&keys, &domain)?,
        (None, false) => decision_sort_unique(&keys, &domain)?,
    };

    write_keys(&mut out, &sorted)?;
    out.flush()?;
    if args.stats {
        emit_stats(&counters)?;
    }
    Ok(())
}

fn resolve_domain(keys: &[i64], args: &crate::DomainArgs) -> Result<KeyDomain, Failure> {
    match (args.lower, args.upper) {
        (Some(lower), Some(upper)) => Ok(KeyDomain::from_bounds_with_limit(
            lower,
            upper,
            args.max_domain_bits,
        )?),
        _ => Ok(KeyDomain::infer_with_limit(keys, args.max_domain_bits)?),
    }
}

fn emit_stats(counters: &OpCounters) -> Result<(), Failure> {
    let json = serde_json::to_string(counters).expect("counters always serialize");
    eprintln!("{json}");
    Ok(())
}

pub fn stream(args: StreamArgs) -> Result<(), Failure> {
    let domain = KeyDomain::from_bounds_with_limit(args.lower, args.upper, args.max_domain_bits)?;
    let mut sorter = IncrementalSorter::with_limit(domain, args.max_domain_bits)?;

    let input = open_input(args.input.as_ref())?;
    let mut out = open_output(args.output.as_deref())?;

    let mut batch: Vec<i64> = Vec::new();
    let mut snapshots = 0usize;
    for (number, line) in input.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed == "---" {
            snapshots += 1;
            ingest_and_snapshot(&mut sorter, &batch, snapshots, &mut out)?;
            batch.clear();
        } else {
            batch.push(parse_key(trimmed, number + 1)?);
        }
    }
    if !batch.is_empty() {
        snapshots += 1;
        ingest_and_snapshot(&mut sorter, &batch, snapshots, &mut out)?;
    }
    out.flush().map_err(Failure::from)
}

fn ingest_and_snapshot(
    sorter: &mut IncrementalSorter,
    batch: &[i64],
    index: usize,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    // Flush snapshots already produced before a bad batch aborts the run.
    if let Err(err) = sorter.ingest(batch) {
        out.flush()?;
        return Err(err.into());
    }
    writeln!(out, "# snapshot {index}")?;
    write_keys(out, &sorter.snapshot())?;
    out.flush().map_err(Failure::from)
}

#[derive(Serialize)]
struct AnalysisReport {
    n: u128,
    k: u128,
    exponent_a: f64,
    hit_probability: f64,
    regime: Regime,
    iterations: u128,
    steps: u128,
}

pub fn analyze(args: AnalyzeArgs) -> Result<(), Failure> {
    let regime = classify_regime(args.n, args.k)?;
    let cost = sequential_cost(args.n, args.k);
    let report = AnalysisReport {
        n: args.n,
        k: args.k,
        exponent_a: regime.exponent_a,
        hit_probability: regime.hit_probability,
        regime: regime.regime,
        iterations: cost.iterations,
        steps: cost.steps,
    };
    let mut out = open_output(None)?;
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&report).unwrap())?,
        Format::Text => {
            writeln!(out, "{:<16} {}", "n", report.n)?;
            writeln!(out, "{:<16} {}", "k", report.k)?;
            writeln!(out, "{:<16} {:.6}", "exponent_a", report.exponent_a)?;
            writeln!(
                out,
                "{:<16} {:.6}",
                "hit_probability", report.hit_probability
            )?;
            writeln!(
                out,
                "{:<16} {}",
                "regime",
                format!("{:?}", report.regime).to_uppercase()
            )?;
            writeln!(out, "{:<16} {}", "iterations", report.iterations)?;
            writeln!(out, "{:<16} {}", "steps", report.steps)?;
        }
    }
    out.flush().map_err(Failure::from)
}

pub fn model(args: ModelArgs) -> Result<(), Failure> {
    let mut out = open_output(None)?;
    if let Some(path) = &args.rows {
        let rows = read_model_rows(open_input(Some(path))?)?;
        let table = speedup_table(&rows);
        match args.format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(&table).unwrap())?,
            Format::Text => write!(out, "{}", table.render_text())?,
        }
        return out.flush().map_err(Failure::from);
    }

    let (n, k, p) = (
        args.n.expect("clap enforces presence"),
        args.k.expect("clap enforces presence"),
        args.p.expect("clap enforces presence"),
    );
    let estimate = parallel_estimate(n, k, p)?;
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&estimate).unwrap())?,
        Format::Text => write_estimate_text(&mut out, &estimate)?,
    }
    out.flush().map_err(Failure::from)
}

fn write_estimate_text(out: &mut dyn Write, estimate: &ParallelEstimate) -> Result<(), Failure> {
    writeln!(out, "{:<16} {}", "n", estimate.n)?;
    writeln!(out, "{:<16} {}", "k", estimate.k)?;
    writeln!(out, "{:<16} {}", "p", estimate.p)?;
    writeln!(out, "{:<16} {:.6}", "time", estimate.time)?;
    writeln!(
        out,
        "{:<16} {:.6}",
        "processor_time", estimate.processor_time
    )?;
    writeln!(out, "{:<16} {:.6}", "speedup", estimate.speedup)?;
    writeln!(out, "{:<16} {:.6}", "efficiency", estimate.efficiency)?;
    Ok(())
}

fn read_model_rows(reader: Box<dyn BufRead>) -> Result<Vec<(u128, u128, u64)>, Failure> {
    let mut rows = Vec::new();
    for (number, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(Failure::usage(format!(
                "line {}: expected \"n k p\", got {trimmed:?}",
                number + 1
            )));
        }
        let n = fields[0].parse::<u128>();
        let k = fields[1].parse::<u128>();
        let p = fields[2].parse::<u64>();
        match (n, k, p) {
            (Ok(n), Ok(k), Ok(p)) => rows.push((n, k, p)),
            _ => {
                return Err(Failure::usage(format!(
                    "line {}: expected \"n k p\", got {trimmed:?}",
                    number + 1
                )))
            }
        }
    }
    Ok(rows)
}

pub fn compare(args: CompareArgs) -> Result<(), Failure> {
    let keys = read_keys(open_input(args.input.as_ref())?)?;
    let domain = resolve_domain(&keys, &args.domain)?;
    let weights = CostWeights {
        swap_weight: args.swap_weight,
        ..CostWeights::default()
    };
    let rows = comparison_report(&keys, &domain, &weights)?;
    let mut out = open_output(args.output.as_deref())?;
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&rows).unwrap())?,
        Format::Text => write!(out, "{}", render_comparison_text(&rows))?,
    }
    out.flush().map_err(Failure::from)
}

pub fn bench(args: BenchArgs) -> Result<(), Failure> {
    if args.range_factor < 1.0 {
        return Err(Failure::new(
            7,
            format!(
                "range factor {} cannot place distinct keys: need at least 1.0",
                args.range_factor
            ),
        ));
    }
    let mut out = open_output(args.output.as_deref())?;
    writeln!(out, "n,k,algorithm,wall_time_ns,comparisons,writes,swaps")?;
    for &n in &args.sizes {
        if n == 0 {
            return Err(Failure::usage("sizes must be positive"));
        }
        let k = (args.range_factor * n as f64).round() as usize;
        if k < n {
            return Err(Failure::new(
                7,
                format!("cannot place {n} distinct keys in a domain of {k} slots"),
            ));
        }
        let keys = generate_distinct_keys(n, k, args.seed);
        let domain = KeyDomain::from_bounds(0, k as i64 - 1)?;

        let started = Instant::now();
        let (_, counters) = decision_sort_unique(&keys, &domain)?;
        let elapsed = started.elapsed();
        write_bench_row(
            &mut out,
            n,
            k,
            "decision",
            elapsed.as_nanos(),
            counters.emit_comparisons,
            counters.mark_writes + counters.emit_writes,
            0,
        )?;

        if n <= BUBBLE_BENCH_CEILING {
            let started = Instant::now();
            let (_, counters) = instrumented_bubble(&keys);
            let elapsed = started.elapsed();
            write_baseline_row(&mut out, n, k, "bubble", elapsed.as_nanos(), counters)?;
        }

        let started = Instant::now();
        let (_, counters) = instrumented_quick(&keys);
        let elapsed = started.elapsed();
        write_baseline_row(&mut out, n, k, "quick", elapsed.as_nanos(), counters)?;
    }
    out.flush().map_err(Failure::from)
}

fn generate_distinct_keys(n: usize, k: usize, seed: u64) -> Vec<i64> {
    // Seeded per size so each row is reproducible regardless of which other
    // sizes run alongside it.
    let mut rng = StdRng::seed_from_u64(seed);
    rand::seq::index::sample(&mut rng, k, n)
        .into_iter()
        .map(|index| index as i64)
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn write_bench_row(
    out: &mut dyn Write,
    n: usize,
    k: usize,
    algorithm: &str,
    nanos: u128,
    comparisons: u64,
    writes: u64,
    swaps: u64,
) -> Result<(), Failure> {
    writeln!(
        out,
        "{n},{k},{algorithm},{nanos},{comparisons},{writes},{swaps}"
    )
    .map_err(Failure::from)
}

fn write_baseline_row(
    out: &mut dyn Write,
    n: usize,
    k: usize,
    algorithm: &str,
    nanos: u128,
    counters: BaselineCounters,
) -> Result<(), Failure> {
    write_bench_row(
        out,
        n,
        k,
        algorithm,
        nanos,
        counters.comparisons,
        0,
        counters.swaps,
    )
}
