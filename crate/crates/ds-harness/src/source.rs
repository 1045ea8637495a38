//! Where campaign graphs come from: internal enumeration, graph6 files,
//! single graph6 strings, or family constructors.

use crate::enumerate::{BitGraph, MAX_DEDUP, MAX_ENUM};
use crate::HarnessError;
use ds_classify::{build_family, FamilySpec};
use ds_graph::{parse_graph6, Graph};
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};

/// A source of graphs for a verification campaign.
#[derive(Clone, Debug)]
pub enum GraphSource {
    /// Every connected labeled graph on n vertices (1 ≤ n ≤ 8).
    Internal { n: usize },
    /// Newline-separated graph6 lines read from a file.
    File { path: PathBuf, skip_bad: bool },
    /// One graph given inline as graph6.
    Single { graph6: String },
    /// One graph built from a family description.
    Family { spec: FamilySpec },
}

/// Resolved work for the campaign runner. Internal enumeration stays as a
/// mask range so workers can split it by prefix without materializing the
/// labeled space; everything else becomes an explicit list.
#[derive(Debug)]
pub(crate) enum WorkSet {
    Graphs(Vec<Graph>),
    Masks { n: usize, dedup: bool },
}

impl GraphSource {
    pub(crate) fn resolve(&self, dedup: bool) -> Result<WorkSet, HarnessError> {
        match self {
            GraphSource::Internal { n } => {
                if *n == 0 || *n > MAX_ENUM {
                    return Err(HarnessError::EnumerationOrder(*n));
                }
                if dedup && *n > MAX_DEDUP {
                    return Err(HarnessError::DedupTooLarge(*n));
                }
                Ok(WorkSet::Masks { n: *n, dedup })
            }
            GraphSource::File { path, skip_bad } => {
                let graphs = load_graph6(path, *skip_bad)?;
                Ok(WorkSet::Graphs(if dedup { dedup_by_canonical(graphs)? } else { graphs }))
            }
            GraphSource::Single { graph6 } => {
                let g = parse_graph6(graph6).map_err(|source| HarnessError::BadLine {
                    line: 1,
                    source,
                })?;
                Ok(WorkSet::Graphs(vec![g]))
            }
            GraphSource::Family { spec } => Ok(WorkSet::Graphs(vec![build_family(spec)?])),
        }
    }

    /// Exactly one connected graph — the contract for DDS targets.
    pub(crate) fn resolve_single(&self) -> Result<Graph, HarnessError> {
        let graphs = match self.resolve(false)? {
            WorkSet::Graphs(v) => v,
            WorkSet::Masks { .. } => {
                return Err(HarnessError::BadTarget(
                    "internal enumeration cannot serve as a target".into(),
                ))
            }
        };
        match <[Graph; 1]>::try_from(graphs) {
            Ok([g]) if g.is_connected() => Ok(g),
            Ok([_]) => Err(HarnessError::BadTarget("the target graph is disconnected".into())),
            Err(v) => Err(HarnessError::BadTarget(format!("{} graphs supplied", v.len()))),
        }
    }

    /// Human-readable description for report parameters.
    pub fn describe(&self) -> String {
        match self {
            GraphSource::Internal { n } => format!("internal n={n}"),
            GraphSource::File { path, skip_bad: false } => format!("file {}", path.display()),
            GraphSource::File { path, skip_bad: true } => {
                format!("file {} (skipping bad lines)", path.display())
            }
            GraphSource::Single { graph6 } => format!("graph6 {graph6}"),
            GraphSource::Family { spec } => format!("family {spec}"),
        }
    }
}

/// Lazily parse a graph6 file, attaching 1-based line numbers. Callers
/// decide whether a bad line aborts the stream or is skipped.
pub fn read_graph6_stream(
    path: &Path,
) -> Result<impl Iterator<Item = Result<(usize, Graph), HarnessError>>, HarnessError> {
    let reader = BufReader::new(File::open(path)?);
    Ok(reader.lines().enumerate().filter_map(|(i, line)| {
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some(Err(HarnessError::Io(e))),
        };
        if line.trim().is_empty() {
            return None;
        }
        Some(
            parse_graph6(line.trim_end())
                .map(|g| (i + 1, g))
                .map_err(|source| HarnessError::BadLine { line: i + 1, source }),
        )
    }))
}

pub fn load_graph6(path: &Path, skip_bad: bool) -> Result<Vec<Graph>, HarnessError> {
    let mut graphs = Vec::new();
    for item in read_graph6_stream(path)? {
        match item {
            Ok((_, g)) => graphs.push(g),
            Err(HarnessError::BadLine { .. }) if skip_bad => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(graphs)
}

fn dedup_by_canonical(graphs: Vec<Graph>) -> Result<Vec<Graph>, HarnessError> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for g in graphs {
        let code = (g.n(), BitGraph::from_graph(&g)?.canonical_code());
        if seen.insert(code) {
            out.push(g);
        }
    }
    Ok(out)
}
