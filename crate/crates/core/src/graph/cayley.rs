use super::{graph_distance_matrix, is_regular, Graph, GraphError};

/// Largest order for which associativity is checked on every triple.
const ASSOCIATIVITY_CHECK_MAX: usize = 64;

/// A finite group given by its multiplication table: `mul(g, h)` is the
/// index of `g ∘ h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    mult: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    pub fn new(mult: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let order = mult.len();
        let bad = |msg: String| Err(GraphError::InvalidGroupTable(msg));
        if order == 0 {
            return bad("empty table".into());
        }
        for (g, row) in mult.iter().enumerate() {
            if row.len() != order {
                return bad(format!("row {g} has {} entries, expected {order}", row.len()));
            }
            if !is_permutation(row.iter().copied(), order) {
                return bad(format!("row {g} is not a permutation"));
            }
        }
        for h in 0..order {
            if !is_permutation(mult.iter().map(|row| row[h]), order) {
                return bad(format!("column {h} is not a permutation"));
            }
        }
        let Some(identity) = (0..order).find(|&e| (0..order).all(|g| mult[e][g] == g && mult[g][e] == g)) else {
            return bad("no identity element".into());
        };
        if order <= ASSOCIATIVITY_CHECK_MAX {
            for a in 0..order {
                for b in 0..order {
                    for c in 0..order {
                        if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                            return bad(format!("({a}∘{b})∘{c} ≠ {a}∘({b}∘{c})"));
                        }
                    }
                }
            }
        }
        // Latin rows guarantee exactly one right inverse; check it is two-sided
        let mut inverse = Vec::with_capacity(order);
        for (g, row) in mult.iter().enumerate() {
            let h = row.iter().position(|&x| x == identity).expect("row is a permutation");
            if mult[h][g] != identity {
                return bad(format!("inverse of {g} is one-sided"));
            }
            inverse.push(h);
        }
        Ok(GroupTable {
            mult,
            identity,
            inverse,
        })
    }

    /// `ℤ_n` under addition, element `k` at index `k`.
    pub fn cyclic(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidSize {
                what: "group order",
                got: 0,
                min: 1,
            });
        }
        GroupTable::new((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect())
    }

    /// The dihedral group of order `2m`. Index `k < m` is the rotation `r^k`;
    /// index `m + k` is the reflection `s r^k`. Uses `r s = s r⁻¹`.
    pub fn dihedral(m: usize) -> Result<Self, GraphError> {
        if m == 0 {
            return Err(GraphError::InvalidSize {
                what: "dihedral parameter",
                got: 0,
                min: 1,
            });
        }
        let split = |x: usize| (x / m, x % m);
        let table = (0..2 * m)
            .map(|x| {
                (0..2 * m)
                    .map(|y| {
                        let ((a, k), (b, l)) = (split(x), split(y));
                        // s^a r^k s^b r^l = s^{a+b} r^{±k + l}
                        let rot = (if b == 0 { k + l } else { m - k + l }) % m;
                        ((a + b) % 2) * m + rot
                    })
                    .collect()
            })
            .collect();
        GroupTable::new(table)
    }

    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mult[g][h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }
}

fn is_permutation(values: impl Iterator<Item = usize>, n: usize) -> bool {
    let mut seen = vec![false; n];
    for v in values {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    seen.iter().all(|&s| s)
}

/// Undirected Cayley graph: `g ∼ h` iff `h ∘ g⁻¹ ∈ S`.
pub fn cayley_graph(table: &GroupTable, connection: &[usize]) -> Result<Graph, GraphError> {
    let order = table.order();
    let mut in_set = vec![false; order];
    for &s in connection {
        if s >= order {
            return Err(GraphError::ElementOutOfRange { element: s, order });
        }
        if s == table.identity() {
            return Err(GraphError::IdentityInConnectionSet);
        }
        in_set[s] = true;
    }
    if let Some(&s) = connection.iter().find(|&&s| !in_set[table.inverse(s)]) {
        return Err(GraphError::NotInverseClosed(s));
    }

    let mut edges = Vec::new();
    for g in 0..order {
        let g_inv = table.inverse(g);
        for h in g + 1..order {
            if in_set[table.mul(h, g_inv)] {
                edges.push((g, h));
            }
        }
    }
    let graph = Graph::from_edges(order, &edges)?;
    debug_assert!(is_regular(&graph));
    if graph.is_connected() {
        debug_assert!(graph_distance_matrix(&graph)
            .map(|d| d.row_sums().windows(2).all(|w| w[0] == w[1]))
            .unwrap_or(false));
    } else {
        log::warn!("connection set does not generate the group; Cayley graph is disconnected");
    }
    Ok(graph)
}

/// Cayley graph of the dihedral group of order `2m` with all `m` reflections
/// as the connection set.
pub fn dihedral_reflection_cayley(m: usize) -> Result<Graph, GraphError> {
    if m < 3 {
        return Err(GraphError::InvalidSize {
            what: "dihedral parameter",
            got: m,
            min: 3,
        });
    }
    let table = GroupTable::dihedral(m)?;
    let reflections: Vec<usize> = (m..2 * m).collect();
    cayley_graph(&table, &reflections)
}
