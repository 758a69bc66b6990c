//! Instance and graph sources: TSPLIB files, built-in families, graph text
//! formats and batch manifests.

use std::fs;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use spectral_tsp::graph::{
    bow_tie, complete_bipartite, cycle_graph, dihedral_reflection_cayley, disjoint_cliques, path_graph, Graph,
};
use spectral_tsp::instances::{
    circle_instance, line_instance, random_asymmetric, random_circulant, random_euclidean, random_symmetric,
    two_cluster, uniform_instance,
};
use spectral_tsp::tsplib::{self, TspInstance};
use spectral_tsp::DenseMatrix;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TspFamily {
    #[value(alias = "uniform_instance")]
    Uniform,
    #[value(alias = "circle_instance")]
    Circle,
    #[value(alias = "line_instance")]
    Line,
    /// `2n` cities in two coincident clusters.
    #[value(alias = "two_cluster")]
    TwoCluster,
    #[value(alias = "random_euclidean")]
    RandomEuclidean,
    #[value(alias = "random_symmetric")]
    RandomSymmetric,
    #[value(alias = "random_asymmetric")]
    RandomAsymmetric,
    #[value(alias = "random_circulant")]
    RandomCirculant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFamily {
    #[value(alias = "bow_tie", alias = "bow-tie")]
    Bowtie,
    /// `K_{n,m}`.
    #[value(alias = "complete_bipartite", alias = "complete-bipartite")]
    Bipartite,
    /// Two disjoint copies of `K_n`.
    #[value(alias = "disjoint_cliques", alias = "disjoint-cliques")]
    Cliques,
    #[value(alias = "path_graph")]
    Path,
    #[value(alias = "cycle_graph")]
    Cycle,
    /// Dihedral group of order `2m` with its reflections.
    #[value(alias = "dihedral_reflection_cayley")]
    Dihedral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    /// One `u v` pair per line, 0-based.
    EdgeList,
    /// Rows of whitespace-separated 0/1 entries.
    Adjacency,
}

/// A distance matrix and where it came from.
#[derive(Debug, Clone)]
pub struct LoadedInstance {
    pub source: String,
    pub name: String,
    pub weight_kind: Option<String>,
    pub optimum: Option<u64>,
    pub distances: DenseMatrix,
}

fn require(value: Option<usize>, flag: &str, family: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("family {family} needs --{flag}")))
}

fn family_name<T: ValueEnum>(f: T) -> String {
    f.to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

pub fn tsp_family(family: TspFamily, n: Option<usize>, seed: u64, dim: usize) -> Result<LoadedInstance, CliError> {
    let name = family_name(family);
    let n = require(n, "n", &name)?;
    if n < 2 {
        return Err(CliError::Usage(format!("family {name} needs --n 2 or more")));
    }
    if family == TspFamily::RandomEuclidean && dim == 0 {
        return Err(CliError::Usage("--dim must be at least 1".into()));
    }
    let distances = match family {
        TspFamily::Uniform => uniform_instance(n),
        TspFamily::Circle => circle_instance(n),
        TspFamily::Line => line_instance(n),
        TspFamily::TwoCluster => two_cluster(n),
        TspFamily::RandomEuclidean => random_euclidean(n, dim, seed).1,
        TspFamily::RandomSymmetric => random_symmetric(n, seed),
        TspFamily::RandomAsymmetric => random_asymmetric(n, seed),
        TspFamily::RandomCirculant => random_circulant(n, seed),
    };
    let random = matches!(
        family,
        TspFamily::RandomEuclidean
            | TspFamily::RandomSymmetric
            | TspFamily::RandomAsymmetric
            | TspFamily::RandomCirculant
    );
    let label = if random {
        format!("{name}(n={n}, seed={seed})")
    } else {
        format!("{name}(n={n})")
    };
    Ok(LoadedInstance {
        source: format!("family:{name}"),
        name: label,
        weight_kind: None,
        optimum: None,
        distances,
    })
}

pub fn tsp_file(path: &Path, sidecar: Option<&Path>) -> Result<LoadedInstance, CliError> {
    let inst: TspInstance = tsplib::load_file(path, sidecar).map_err(|e| CliError::Parse(e.to_string()))?;
    Ok(LoadedInstance {
        source: path.display().to_string(),
        name: inst.name,
        weight_kind: Some(inst.weight_kind.to_string()),
        optimum: inst.optimum,
        distances: inst.distances,
    })
}

pub fn graph_family(family: GraphFamily, n: Option<usize>, m: Option<usize>) -> Result<(String, Graph), CliError> {
    let name = family_name(family);
    let graph = match family {
        GraphFamily::Bowtie => Ok(bow_tie()),
        GraphFamily::Bipartite => complete_bipartite(require(n, "n", &name)?, require(m, "m", &name)?),
        GraphFamily::Cliques => disjoint_cliques(require(n, "n", &name)?),
        GraphFamily::Path => path_graph(require(n, "n", &name)?),
        GraphFamily::Cycle => cycle_graph(require(n, "n", &name)?),
        GraphFamily::Dihedral => dihedral_reflection_cayley(require(m, "m", &name)?),
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok((format!("family:{name}"), graph))
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

pub fn parse_edge_list(text: &str, vertices: Option<usize>) -> Result<Graph, CliError> {
    let mut edges = Vec::new();
    for (line, content) in data_lines(text) {
        let fields: Vec<&str> = content.split_whitespace().collect();
        let parsed: Vec<usize> = fields.iter().filter_map(|f| f.parse().ok()).collect();
        if fields.len() != 2 || parsed.len() != 2 {
            return Err(CliError::Parse(format!(
                "line {line}: expected two vertex indices, got {content:?}"
            )));
        }
        edges.push((parsed[0], parsed[1]));
    }
    let implied = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = vertices.unwrap_or(implied);
    Graph::from_edges(n, &edges).map_err(|e| CliError::Parse(e.to_string()))
}

pub fn parse_adjacency(text: &str) -> Result<Graph, CliError> {
    let mut rows = Vec::new();
    for (line, content) in data_lines(text) {
        let row: Result<Vec<f64>, _> = content.split_whitespace().map(str::parse::<f64>).collect();
        rows.push(row.map_err(|_| CliError::Parse(format!("line {line}: non-numeric adjacency entry")))?);
    }
    let a = DenseMatrix::from_rows(&rows).map_err(|e| CliError::Parse(e.to_string()))?;
    Graph::from_adjacency(&a).map_err(|e| CliError::Parse(e.to_string()))
}

pub fn graph_file(path: &Path, format: GraphFormat, vertices: Option<usize>) -> Result<(String, Graph), CliError> {
    let text = read(path)?;
    let graph = match format {
        GraphFormat::EdgeList => parse_edge_list(&text, vertices)?,
        GraphFormat::Adjacency => parse_adjacency(&text)?,
    };
    Ok((path.display().to_string(), graph))
}

pub fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub problem: PathBuf,
    pub sidecar: Option<PathBuf>,
}

/// One `problem_path[,sidecar_path]` per line; `#` starts a comment.
/// Relative paths resolve against the manifest's directory.
pub fn parse_manifest(text: &str, base: &Path) -> Result<Vec<ManifestEntry>, CliError> {
    let resolve = |p: &str| {
        let p = Path::new(p.trim());
        if p.is_absolute() {
            p.to_path_buf()
        } else {
            base.join(p)
        }
    };
    data_lines(text)
        .map(|(line, content)| {
            let mut parts = content.split(',');
            let problem = parts.next().map(str::trim).filter(|p| !p.is_empty());
            let sidecar = parts.next().map(str::trim).filter(|p| !p.is_empty());
            match (problem, parts.next()) {
                (Some(problem), None) => Ok(ManifestEntry {
                    problem: resolve(problem),
                    sidecar: sidecar.map(resolve),
                }),
                _ => Err(CliError::Parse(format!(
                    "manifest line {line}: expected `problem[,sidecar]`"
                ))),
            }
        })
        .collect()
}
