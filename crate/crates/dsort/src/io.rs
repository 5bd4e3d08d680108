//! Line-oriented input and output plumbing shared by the subcommands.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::Failure;

pub fn open_input(path: Option<&PathBuf>) -> Result<Box<dyn BufRead>, Failure> {
    match path {
        None => Ok(Box::new(BufReader::new(io::stdin()))),
        Some(p) if p.as_os_str() == "-" => Ok(Box::new(BufReader::new(io::stdin()))),
        Some(p) => {
            let file =
                File::open(p).map_err(|err| Failure::usage(format!("{}: {err}", p.display())))?;
            Ok(Box::new(BufReader::new(file)))
        }
    }
}

pub fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    match path {
        None => Ok(Box::new(BufWriter::new(io::stdout()))),
        Some(p) => {
            let file =
                File::create(p).map_err(|err| Failure::usage(format!("{}: {err}", p.display())))?;
            Ok(Box::new(BufWriter::new(file)))
        }
    }
}

/// Parses newline-delimited signed decimal integers, ignoring blank lines.
/// Parse failures report the 1-based line number.
pub fn read_keys(reader: impl BufRead) -> Result<Vec<i64>, Failure> {
    let mut keys = Vec::new();
    for (number, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        keys.push(parse_key(trimmed, number + 1)?);
    }
    Ok(keys)
}

pub fn parse_key(text: &str, line_number: usize) -> Result<i64, Failure> {
    text.parse::<i64>()
        .map_err(|_| Failure::usage(format!("line {line_number}: invalid integer {text:?}")))
}

pub fn write_keys(out: &mut dyn Write, keys: &[i64]) -> Result<(), Failure> {
    for key in keys {
        writeln!(out, "{key}")?;
    }
    Ok(())
}
