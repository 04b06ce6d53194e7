use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::classify::{classify_instance, ClassificationRecord};
use super::enumerate::EnumerationState;
use super::CensusError;
use crate::graph::{emit_graph6, parse_graph6, Biadjacency, Graph};

/// Scaffolds classified between flushes of the records file.
const CHUNK: usize = 512;

#[derive(Debug, Clone, Default)]
pub struct CensusOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    /// Directory for the scaffold cache and the per-instance records.
    pub cache_dir: Option<PathBuf>,
    /// Reuse records already present in the cache directory.
    pub resume: bool,
    /// Permit sizes beyond the exhaustive limit.
    pub allow_long: bool,
    /// Count only scaffolds in which S is maximal independent in H.
    pub require_s_maximal: bool,
}

/// One line of the census table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub s: usize,
    #[serde(skip)]
    pub t: usize,
    pub total: usize,
    #[serde(rename = "s_roth")]
    pub n_s_roth: usize,
    #[serde(rename = "harmcond")]
    pub n_harmcond: usize,
    #[serde(rename = "m_matrix")]
    pub n_m_matrix: usize,
    #[serde(rename = "inv_positive")]
    pub n_inv_positive: usize,
    /// Scaffolds where S is not maximal independent in H.
    #[serde(skip)]
    pub n_not_s_maximal: usize,
}

impl CensusRow {
    pub fn from_records<'a>(t: usize, s: usize, records: impl IntoIterator<Item = &'a ClassificationRecord>, require_s_maximal: bool) -> Self {
        let mut row = CensusRow { s, t, total: 0, n_s_roth: 0, n_harmcond: 0, n_m_matrix: 0, n_inv_positive: 0, n_not_s_maximal: 0 };
        for r in records {
            if !r.s_maximal {
                row.n_not_s_maximal += 1;
                if require_s_maximal {
                    continue;
                }
            }
            row.total += 1;
            row.n_s_roth += r.s_roth as usize;
            row.n_harmcond += r.harmcond as usize;
            row.n_m_matrix += r.counts_as_m_matrix() as usize;
            row.n_inv_positive += r.inv_positive as usize;
        }
        row
    }

    /// `harmcond ≤ m_matrix ≤ inv_positive ≤ s_roth ≤ total`.
    pub fn is_nested(&self) -> bool {
        self.n_harmcond <= self.n_m_matrix
            && self.n_m_matrix <= self.n_inv_positive
            && self.n_inv_positive <= self.n_s_roth
            && self.n_s_roth <= self.total
    }
}

#[derive(Debug, Clone)]
pub struct CensusOutcome {
    pub row: CensusRow,
    /// Per-scaffold records in enumeration order.
    pub records: Vec<ClassificationRecord>,
    /// Records taken from a previous run.
    pub resumed: usize,
}

pub fn scaffold_cache_name(t: usize, s: usize) -> String {
    format!("bipartite_t{t}_s{s}.g6")
}

pub fn records_file_name(t: usize, s: usize, g: &Graph) -> String {
    // graph6 uses only printable ASCII but may contain path-hostile characters
    let tag: String = emit_graph6(g).bytes().map(|b| format!("{b:02x}")).collect();
    format!("records_t{t}_s{s}_g{tag}.csv")
}

fn scaffold_from_graph(g: &Graph, t: usize, s: usize) -> Result<Biadjacency, CensusError> {
    if g.n() != t + s {
        return Err(CensusError::CacheMismatch(format!("graph on {} vertices, expected {}", g.n(), t + s)));
    }
    let mut b = Biadjacency::zeros(t, s);
    for (u, v) in g.edges() {
        if u >= t || v < t {
            return Err(CensusError::CacheMismatch(format!("edge {{{u},{v}}} is not between the parts")));
        }
        b.set(u, v - t, true);
    }
    Ok(b)
}

/// Enumerates scaffolds, reading and writing `dir/bipartite_t{t}_s{s}.g6`
/// when a directory is given.
pub fn load_or_enumerate(t: usize, s: usize, allow_long: bool, dir: Option<&Path>) -> Result<Vec<Biadjacency>, CensusError> {
    let path = dir.map(|d| d.join(scaffold_cache_name(t, s)));
    if let Some(p) = path.as_ref().filter(|p| p.exists()) {
        let f = BufReader::new(File::open(p)?);
        return f
            .lines()
            .filter(|l| l.as_ref().map_or(true, |l| !l.trim().is_empty()))
            .map(|l| scaffold_from_graph(&parse_graph6(&l?)?, t, s))
            .collect();
    }
    let all = EnumerationState::new(t, s, allow_long)?.collect();
    if let Some(p) = path {
        fs::create_dir_all(p.parent().expect("joined path has a parent"))?;
        let tmp = p.with_extension("g6.partial");
        let mut f = File::create(&tmp)?;
        for b in &all {
            writeln!(f, "{}", emit_graph6(&b.to_graph()))?;
        }
        f.sync_all()?;
        fs::rename(tmp, p)?;
    }
    Ok(all)
}

fn read_records(path: &Path) -> Result<HashMap<String, ClassificationRecord>, CensusError> {
    let mut rdr = csv::Reader::from_path(path)?;
    let mut out = HashMap::new();
    for rec in rdr.deserialize() {
        let rec: ClassificationRecord = match rec {
            Ok(r) => r,
            // a run interrupted mid-write leaves at most one torn final line
            Err(e) if e.is_io_error() => return Err(e.into()),
            Err(_) => continue,
        };
        out.insert(rec.scaffold.clone(), rec);
    }
    Ok(out)
}

/// Classifies `B + G` for every scaffold `B` and aggregates the table row.
pub fn run_census(t: usize, s: usize, g: &Graph, opts: &CensusOptions) -> Result<CensusOutcome, CensusError> {
    if g.n() != t {
        return Err(CensusError::IntraOrder { expected: t, found: g.n() });
    }
    if g.edge_count() == 0 {
        return Err(CensusError::Bipartite);
    }
    let pool = match opts.jobs {
        Some(n) => Some(rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build().map_err(|e| CensusError::Pool(e.to_string()))?),
        None => None,
    };
    let work = || run_inner(t, s, g, opts);
    match pool {
        Some(p) => p.install(work),
        None => work(),
    }
}

fn run_inner(t: usize, s: usize, g: &Graph, opts: &CensusOptions) -> Result<CensusOutcome, CensusError> {
    let dir = opts.cache_dir.as_deref();
    let scaffolds = load_or_enumerate(t, s, opts.allow_long, dir)?;
    let rec_path = dir.map(|d| d.join(records_file_name(t, s, g)));
    let mut known = match rec_path.as_ref().filter(|p| opts.resume && p.exists()) {
        Some(p) => read_records(p)?,
        None => HashMap::new(),
    };
    let keys: Vec<String> = scaffolds.iter().map(|b| emit_graph6(&b.to_graph())).collect();
    let todo: Vec<usize> = (0..scaffolds.len()).filter(|&i| !known.contains_key(&keys[i])).collect();
    let resumed = scaffolds.len() - todo.len();

    let mut writer = match &rec_path {
        Some(p) => {
            let fresh = !(opts.resume && p.exists());
            let file = if fresh { File::create(p)? } else { OpenOptions::new().append(true).open(p)? };
            Some(csv::WriterBuilder::new().has_headers(fresh).from_writer(file))
        }
        None => None,
    };
    for chunk in todo.chunks(CHUNK) {
        let done: Vec<ClassificationRecord> =
            chunk.par_iter().map(|&i| classify_instance(&scaffolds[i], g)).collect::<Result<_, _>>()?;
        if let Some(w) = writer.as_mut() {
            for r in &done {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        for r in done {
            known.insert(r.scaffold.clone(), r);
        }
    }
    let records: Vec<ClassificationRecord> = keys.iter().map(|k| known.remove(k).expect("every scaffold classified")).collect();
    let row = CensusRow::from_records(t, s, &records, opts.require_s_maximal);
    Ok(CensusOutcome { row, records, resumed })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn temp_dir(tag: &str) -> PathBuf {
        let d = std::env::temp_dir().join(format!("rothlab-{tag}-{}", std::process::id()));
        let _ = fs::remove_dir_all(&d);
        d
    }

    #[test]
    fn small_census_is_nested() {
        let out = run_census(3, 4, &Graph::complete(3), &CensusOptions::default()).unwrap();
        assert!(out.row.is_nested());
        assert_eq!(out.row.total, out.records.len());
    }

    #[test]
    fn cache_and_resume_reproduce_the_row() {
        let dir = temp_dir("resume");
        let opts = CensusOptions { cache_dir: Some(dir.clone()), jobs: Some(2), ..Default::default() };
        let first = run_census(3, 5, &Graph::path(3), &opts).unwrap();
        assert!(dir.join(scaffold_cache_name(3, 5)).exists());
        // drop the tail of the records file and resume
        let rec = dir.join(records_file_name(3, 5, &Graph::path(3)));
        let text = fs::read_to_string(&rec).unwrap();
        let keep: Vec<&str> = text.lines().take(10).collect();
        fs::write(&rec, keep.join("\n") + "\n").unwrap();
        let resumed = run_census(3, 5, &Graph::path(3), &CensusOptions { resume: true, ..opts.clone() }).unwrap();
        assert_eq!(resumed.resumed, 9);
        assert_eq!(resumed.row, first.row);
        assert_eq!(resumed.records, first.records);
        fs::remove_dir_all(dir).unwrap();
    }

    #[test]
    fn table_csv_header() {
        let row = CensusRow { s: 5, t: 4, total: 1, n_s_roth: 1, n_harmcond: 0, n_m_matrix: 0, n_inv_positive: 1, n_not_s_maximal: 0 };
        let mut w = csv::Writer::from_writer(vec![]);
        w.serialize(row).unwrap();
        let text = String::from_utf8(w.into_inner().unwrap()).unwrap();
        assert_eq!(text.lines().next().unwrap(), "s,total,s_roth,harmcond,m_matrix,inv_positive");
    }

    #[test]
    fn rejects_bad_g() {
        assert!(matches!(run_census(3, 2, &Graph::complete(4), &CensusOptions::default()), Err(CensusError::IntraOrder { .. })));
        assert!(matches!(run_census(3, 2, &Graph::empty(3), &CensusOptions::default()), Err(CensusError::Bipartite)));
    }
}
