use serde::{Deserialize, Serialize};

use crate::tables::CatalanTable;
use crate::trees::{direct_tree, opposite_tree, pocket_tree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(index: usize) -> Parity {
        if index.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Factor `1 / (E_from - E_to)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Thread {
    pub from: usize,
    pub to: usize,
}

impl Thread {
    pub fn parity(&self) -> Parity {
        Parity::of(self.from)
    }

    /// Oriented against increasing index order.
    pub fn is_reversed(&self) -> bool {
        self.from > self.to
    }

    pub fn sorted(&self) -> (usize, usize) {
        (self.from.min(self.to), self.from.max(self.to))
    }
}

/// One term of the `N`-point function: a product of two-point factors over
/// the chords and resolvent factors over the threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    /// Unordered pairs stored as `(low, high)`, sorted.
    chords: Vec<(usize, usize)>,
    threads: Vec<Thread>,
    table: CatalanTable,
}

impl Monomial {
    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    pub fn threads(&self) -> &[Thread] {
        &self.threads
    }

    pub fn table(&self) -> &CatalanTable {
        &self.table
    }

    pub fn point_count(&self) -> usize {
        2 * self.chords.len()
    }

    pub fn reversed_thread_count(&self) -> usize {
        self.threads.iter().filter(|t| t.is_reversed()).count()
    }

    pub fn chords_noncrossing(&self) -> bool {
        self.chords
            .iter()
            .all(|&a| self.chords.iter().all(|&b| !crosses(a, b)))
    }

    pub fn threads_avoid_chords(&self) -> bool {
        self.threads
            .iter()
            .all(|t| self.chords.iter().all(|&c| !crosses(t.sorted(), c)))
    }
}

/// Two segments between points on a circle cross iff exactly one endpoint of
/// one lies strictly inside the arc spanned by the other.
pub(crate) fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Reads off the monomial of a table.
///
/// Chords are the side-label pairs of the pocket-tree edges. Around every
/// non-leaf pocket `P_m` the tuple `e^(m)` draws a direct and an opposite
/// thread tree on the even and odd side-label rows: direct on even and
/// opposite on odd at even level, swapped at odd level. A thread between row
/// positions `a < b` becomes `1 / (E_row[a] - E_row[b])`.
pub fn monomial_from_table(table: &CatalanTable) -> Monomial {
    let tree = pocket_tree(&table.length_tuple()).label_sides();
    let mut chords: Vec<(usize, usize)> = tree
        .labeled_edges()
        .expect("labeled above")
        .into_iter()
        .map(|(_, _, s)| (s.down.min(s.up), s.down.max(s.up)))
        .collect();
    chords.sort_unstable();

    let mut threads = Vec::with_capacity(table.length().saturating_sub(1));
    for m in 0..tree.pocket_count() {
        if tree.is_leaf(m) {
            continue;
        }
        let rows = tree
            .pocket_rows(m)
            .expect("non-leaf pocket of a labeled tree");
        let tuple = table.pocket(m);
        let (even_tree, odd_tree) = if tree.level(m).is_multiple_of(2) {
            (direct_tree(tuple), opposite_tree(tuple))
        } else {
            (opposite_tree(tuple), direct_tree(tuple))
        };
        for (row, thread_tree) in [(&rows.even, even_tree), (&rows.odd, odd_tree)] {
            debug_assert_eq!(row.len(), thread_tree.nodes);
            threads.extend(thread_tree.threads.iter().map(|&(a, b)| Thread {
                from: row[a],
                to: row[b],
            }));
        }
    }

    Monomial {
        chords,
        threads,
        table: table.clone(),
    }
}

/// `τ = (-1)^(Σ_{j >= 1} e^(j)_0)`, returned as the exponent.
pub fn tau_exponent(table: &CatalanTable) -> usize {
    table.pockets()[1..].iter().map(|p| p.first()).sum()
}

/// `+1` or `-1`; the sign relative to writing every thread in increasing index order.
pub fn sign_tau(table: &CatalanTable) -> i8 {
    if tau_exponent(table).is_multiple_of(2) {
        1
    } else {
        -1
    }
}
