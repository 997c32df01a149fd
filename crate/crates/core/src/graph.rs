//! Edge-list parsing, ccdh files, and corpus directories.
//!
//! Edge lists are whitespace-separated vertex pairs, one per line, with `#`
//! comment lines; anything after the first two tokens (weights, timestamps)
//! is ignored, as are self-loops and repeated pairs, so arbitrary simple or
//! non-simple inputs all land on a simple graph. Vertex ids may be any
//! strings and are relabeled to contiguous integers.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::ccdh::{Ccdh, DegreeHistogram};
use crate::error::{Result, RhError};

/// A simple undirected graph with contiguous vertex ids and sorted
/// adjacency lists. Isolated vertices cannot occur: every vertex comes from
/// an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from (arbitrarily labeled) vertex pairs, dropping
    /// loops and duplicates and relabeling the endpoints that remain.
    pub fn from_edges<I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut ids: HashMap<u64, u32> = HashMap::new();
        let mut pairs = std::collections::HashSet::new();
        for (u, v) in edges {
            if u == v {
                continue;
            }
            let a = next_id(&mut ids, u);
            let b = next_id(&mut ids, v);
            pairs.insert((a.min(b), a.max(b)));
        }
        Self::from_normalized(ids.len(), pairs)
    }

    fn from_normalized(
        provisional: usize,
        pairs: std::collections::HashSet<(u32, u32)>,
    ) -> Result<Self> {
        if pairs.is_empty() {
            return Err(RhError::EmptyGraph);
        }
        // Compact away ids that only ever appeared in dropped loops.
        let mut used = vec![u32::MAX; provisional];
        let mut next = 0u32;
        let mut adj: Vec<Vec<u32>> = Vec::new();
        let mut compact = |raw: u32, adj: &mut Vec<Vec<u32>>| -> u32 {
            if used[raw as usize] == u32::MAX {
                used[raw as usize] = next;
                adj.push(Vec::new());
                next += 1;
            }
            used[raw as usize]
        };
        let mut edge_count = 0;
        for (u, v) in pairs {
            let a = compact(u, &mut adj);
            let b = compact(v, &mut adj);
            adj[a as usize].push(b);
            adj[b as usize].push(a);
            edge_count += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self { adj, edge_count })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.adj.iter().map(|l| l.len() as u64).collect()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let u = u as u32;
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn histogram(&self) -> DegreeHistogram {
        DegreeHistogram::from_degrees(self.degrees()).expect("graph is nonempty")
    }

    pub fn ccdh(&self) -> Ccdh {
        Ccdh::from_histogram(&self.histogram())
    }
}

fn next_id(ids: &mut HashMap<u64, u32>, label: u64) -> u32 {
    let n = ids.len() as u32;
    *ids.entry(label).or_insert(n)
}

/// Parses an edge list in a single streaming pass.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut ids: HashMap<String, u32> = HashMap::new();
    let mut pairs = std::collections::HashSet::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (Some(u), Some(v)) = (tokens.next(), tokens.next()) else {
            return Err(RhError::Parse {
                line: idx + 1,
                msg: "expected two vertex ids".into(),
            });
        };
        if u == v {
            continue;
        }
        let a = intern(&mut ids, u);
        let b = intern(&mut ids, v);
        pairs.insert((a.min(b), a.max(b)));
    }
    Graph::from_normalized(ids.len(), pairs)
}

fn intern(ids: &mut HashMap<String, u32>, label: &str) -> u32 {
    if let Some(&id) = ids.get(label) {
        return id;
    }
    let id = ids.len() as u32;
    ids.insert(label.to_string(), id);
    id
}

pub fn load_edge_list(path: &Path) -> Result<Graph> {
    parse_edge_list(BufReader::new(File::open(path)?))
}

/// Reads a ccdh in the interchange format: one `k<TAB>N(k)` line per degree,
/// `k` ascending from 1 with no gaps, `#` comments ignored.
pub fn read_ccdh<R: BufRead>(reader: R) -> Result<Ccdh> {
    let mut values = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (Some(k), Some(v)) = (tokens.next(), tokens.next()) else {
            return Err(RhError::Parse {
                line: idx + 1,
                msg: "expected `degree<TAB>count`".into(),
            });
        };
        let k: u64 = k.parse().map_err(|_| RhError::Parse {
            line: idx + 1,
            msg: format!("bad degree {k:?}"),
        })?;
        let v: u64 = v.parse().map_err(|_| RhError::Parse {
            line: idx + 1,
            msg: format!("bad count {v:?}"),
        })?;
        if k != values.len() as u64 + 1 {
            return Err(RhError::Format(format!(
                "degrees must run 1..delta without gaps; saw {k} after {}",
                values.len()
            )));
        }
        values.push(v);
    }
    Ccdh::from_values(values)
}

pub fn load_ccdh(path: &Path) -> Result<Ccdh> {
    read_ccdh(BufReader::new(File::open(path)?))
}

pub fn write_ccdh<W: Write>(c: &Ccdh, mut writer: W) -> Result<()> {
    for k in 1..=c.delta() {
        writeln!(writer, "{k}\t{}", c.value(k))?;
    }
    Ok(())
}

pub fn save_ccdh(c: &Ccdh, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_ccdh(c, &mut w)?;
    w.flush()?;
    Ok(())
}

/// Lists the corpus entries of a directory: every `*.txt` / `*.tsv` file,
/// named by file stem, sorted by name.
pub fn list_corpus(dir: &Path) -> Result<Vec<(String, PathBuf)>> {
    let mut out = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
        if path.is_file() && (ext == "txt" || ext == "tsv") {
            let name = path
                .file_stem()
                .and_then(|s| s.to_str())
                .unwrap_or_default()
                .to_string();
            out.push((name, path));
        }
    }
    out.sort();
    Ok(out)
}
