//! Named reference sets and the golden classification tables.
//!
//! The aliases `C1..C31` are the representatives of the 31 U-equivalence
//! classes of standard 4-sets at `d = 6`; `K, L, G120, G131, G133, G212,
//! G230, G112, G220, G232` are the classical representatives of the 10
//! classes at `d = 4`. Tables 1-10 are the reference orbit listings shipped
//! as CSV golden files under `data/tables/` and recomputed on demand; the
//! computed output must match the golden file row for row.

use crate::classify::{u_class, uc_orbit};
use crate::gpm::{Gpm, GpmSet};
use crate::{Error, Result};

/// Representatives of the 31 classes at `d = 6`, in lexicographic order of
/// the canonical member list.
pub const D6_REPRESENTATIVES: [[(u32, u32); 4]; 31] = [
    [(0, 0), (0, 1), (0, 2), (0, 3)],
    [(0, 0), (0, 1), (0, 2), (0, 4)],
    [(0, 0), (0, 1), (0, 2), (1, 0)],
    [(0, 0), (0, 1), (0, 2), (2, 0)],
    [(0, 0), (0, 1), (0, 2), (2, 1)],
    [(0, 0), (0, 1), (0, 2), (3, 0)],
    [(0, 0), (0, 1), (0, 2), (3, 1)],
    [(0, 0), (0, 1), (0, 3), (0, 4)],
    [(0, 0), (0, 1), (0, 3), (1, 0)],
    [(0, 0), (0, 1), (0, 3), (2, 0)],
    [(0, 0), (0, 1), (0, 3), (2, 1)],
    [(0, 0), (0, 1), (0, 3), (3, 0)],
    [(0, 0), (0, 1), (0, 3), (3, 1)],
    [(0, 0), (0, 1), (0, 3), (5, 0)],
    [(0, 0), (0, 1), (1, 0), (1, 1)],
    [(0, 0), (0, 1), (1, 0), (1, 2)],
    [(0, 0), (0, 1), (1, 0), (1, 3)],
    [(0, 0), (0, 1), (1, 0), (2, 2)],
    [(0, 0), (0, 1), (1, 0), (3, 5)],
    [(0, 0), (0, 1), (1, 0), (4, 4)],
    [(0, 0), (0, 1), (2, 0), (2, 1)],
    [(0, 0), (0, 1), (2, 0), (2, 2)],
    [(0, 0), (0, 1), (2, 0), (2, 5)],
    [(0, 0), (0, 1), (2, 0), (3, 1)],
    [(0, 0), (0, 1), (2, 0), (4, 0)],
    [(0, 0), (0, 1), (3, 0), (3, 1)],
    [(0, 0), (0, 1), (3, 0), (3, 3)],
    [(0, 0), (0, 1), (3, 0), (3, 5)],
    [(0, 0), (0, 2), (0, 4), (2, 0)],
    [(0, 0), (0, 2), (2, 0), (2, 2)],
    [(0, 0), (0, 3), (3, 0), (3, 3)],
];

/// The 10 named representatives at `d = 4`, in their classical naming order.
pub const D4_NAMED: [(&str, [(u32, u32); 4]); 10] = [
    ("K", [(0, 0), (0, 2), (2, 0), (2, 2)]),
    ("L", [(0, 0), (1, 0), (2, 0), (3, 0)]),
    ("G120", [(0, 0), (0, 1), (1, 0), (2, 0)]),
    ("G131", [(0, 0), (0, 1), (1, 0), (3, 1)]),
    ("G133", [(0, 0), (0, 1), (1, 0), (3, 3)]),
    ("G212", [(0, 0), (0, 2), (1, 0), (1, 2)]),
    ("G230", [(0, 0), (0, 2), (1, 0), (3, 0)]),
    ("G112", [(0, 0), (0, 1), (1, 0), (1, 2)]),
    ("G220", [(0, 0), (0, 2), (1, 0), (2, 0)]),
    ("G232", [(0, 0), (0, 2), (1, 0), (3, 2)]),
];

fn build(d: u32, pairs: &[(u32, u32)]) -> GpmSet {
    GpmSet::new(d, pairs.iter().map(|&(s, t)| Gpm::new(s, t)))
        .expect("catalog entries are valid sets")
}

/// Resolve a named alias (`C1..C31`, `K`, `L`, `G120`, ...) to its set.
/// Case-insensitive. Returns the set and its dimension.
pub fn named_set(name: &str) -> Option<GpmSet> {
    let upper = name.trim().to_ascii_uppercase();
    if let Some(num) = upper.strip_prefix('C') {
        if let Ok(k) = num.parse::<usize>() {
            if (1..=31).contains(&k) {
                return Some(build(6, &D6_REPRESENTATIVES[k - 1]));
            }
        }
        return None;
    }
    D4_NAMED
        .iter()
        .find(|(n, _)| *n == upper)
        .map(|(_, pairs)| build(4, pairs))
}

/// All alias names, for diagnostics.
pub fn alias_names() -> Vec<String> {
    let mut names: Vec<String> = (1..=31).map(|k| format!("C{k}")).collect();
    names.extend(D4_NAMED.iter().map(|(n, _)| n.to_string()));
    names
}

/// One reference table: an orbit listing with a shipped golden CSV.
pub struct TableSpec {
    pub id: u8,
    pub title: &'static str,
    golden: &'static str,
}

const TABLES: [TableSpec; 10] = [
    TableSpec {
        id: 1,
        title: "u-class of C1 (d=6, 48 sets)",
        golden: include_str!("../../../data/tables/table01.csv"),
    },
    TableSpec {
        id: 2,
        title: "u-class of C2 (d=6, 48 sets)",
        golden: include_str!("../../../data/tables/table02.csv"),
    },
    TableSpec {
        id: 3,
        title: "uc-orbit of C3 (d=6, 144 sets)",
        golden: include_str!("../../../data/tables/table03.csv"),
    },
    TableSpec {
        id: 4,
        title: "uc-orbit of the first translate of C3 (d=6, 144 sets)",
        golden: include_str!("../../../data/tables/table04.csv"),
    },
    TableSpec {
        id: 5,
        title: "uc-orbit of the second translate of C3 (d=6, 144 sets)",
        golden: include_str!("../../../data/tables/table05.csv"),
    },
    TableSpec {
        id: 6,
        title: "uc-orbit of the third translate of C3 (d=6, 144 sets)",
        golden: include_str!("../../../data/tables/table06.csv"),
    },
    TableSpec {
        id: 7,
        title: "u-class of K (d=4, 1 set)",
        golden: include_str!("../../../data/tables/table07.csv"),
    },
    TableSpec {
        id: 8,
        title: "u-class of L (d=4, 6 sets)",
        golden: include_str!("../../../data/tables/table08.csv"),
    },
    TableSpec {
        id: 9,
        title: "u-class of G120 (d=4, 192 sets)",
        golden: include_str!("../../../data/tables/table09.csv"),
    },
    TableSpec {
        id: 10,
        title: "u-class of G131 (d=4, 48 sets)",
        golden: include_str!("../../../data/tables/table10.csv"),
    },
];

pub fn table_spec(id: u8) -> Result<&'static TableSpec> {
    TABLES
        .iter()
        .find(|t| t.id == id)
        .ok_or(Error::UnknownTable(id))
}

/// Compute a table's content: the full orbit listing in canonical order.
pub fn table_content(id: u8) -> Result<Vec<GpmSet>> {
    let sets = match id {
        1 => u_class(&named_set("C1").unwrap())?,
        2 => u_class(&named_set("C2").unwrap())?,
        3..=6 => {
            let c3 = named_set("C3").unwrap();
            let translates = c3.standardize_all();
            uc_orbit(&translates[id as usize - 3])?
        }
        7 => u_class(&named_set("K").unwrap())?,
        8 => u_class(&named_set("L").unwrap())?,
        9 => u_class(&named_set("G120").unwrap())?,
        10 => u_class(&named_set("G131").unwrap())?,
        _ => return Err(Error::UnknownTable(id)),
    };
    Ok(sets.sets().to_vec())
}

/// Golden rows of a table, parsed from the shipped CSV.
pub fn golden_rows(id: u8) -> Result<Vec<GpmSet>> {
    let spec = table_spec(id)?;
    let d = if id <= 6 { 6 } else { 4 };
    spec.golden
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_csv_row(d, l))
        .collect()
}

/// Serialize a set as a CSV row: members `s:t` joined by `;`.
pub fn to_csv_row(set: &GpmSet) -> String {
    set.members()
        .iter()
        .map(|g| format!("{}:{}", g.s, g.t))
        .collect::<Vec<_>>()
        .join(";")
}

/// Parse a CSV row back into a canonical set.
pub fn parse_csv_row(d: u32, line: &str) -> Result<GpmSet> {
    let members: Vec<Gpm> = line
        .trim()
        .split(';')
        .map(|item| {
            let (s, t) = item
                .split_once(':')
                .ok_or_else(|| Error::MalformedGoldenRow(line.to_string()))?;
            let s: u32 = s
                .trim()
                .parse()
                .map_err(|_| Error::MalformedGoldenRow(line.to_string()))?;
            let t: u32 = t
                .trim()
                .parse()
                .map_err(|_| Error::MalformedGoldenRow(line.to_string()))?;
            Ok(Gpm::new(s, t))
        })
        .collect::<Result<_>>()?;
    GpmSet::new(d, members)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aliases_resolve() {
        let c1 = named_set("C1").unwrap();
        assert_eq!(c1.to_string(), "{(0,0),(0,1),(0,2),(0,3)}");
        assert_eq!(c1.d(), 6);

        let c29 = named_set("C29").unwrap();
        assert_eq!(c29.to_string(), "{(0,0),(0,2),(0,4),(2,0)}");

        let k = named_set("k").unwrap();
        assert_eq!(k.to_string(), "{(0,0),(0,2),(2,0),(2,2)}");
        assert_eq!(k.d(), 4);

        assert!(named_set("C32").is_none());
        assert!(named_set("Q7").is_none());
        assert_eq!(alias_names().len(), 41);
    }

    #[test]
    fn representatives_are_lexicographically_sorted() {
        let sets: Vec<GpmSet> = D6_REPRESENTATIVES
            .iter()
            .map(|pairs| build(6, pairs))
            .collect();
        assert!(sets.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn csv_round_trip() {
        let set = build(6, &[(0, 0), (1, 5), (4, 2), (3, 3)]);
        let row = to_csv_row(&set);
        assert_eq!(row, "0:0;1:5;3:3;4:2");
        assert_eq!(parse_csv_row(6, &row).unwrap(), set);
    }

    #[test]
    fn golden_row_counts() {
        let expect = [48, 48, 144, 144, 144, 144, 1, 6, 192, 48];
        for (i, &n) in expect.iter().enumerate() {
            let id = (i + 1) as u8;
            assert_eq!(golden_rows(id).unwrap().len(), n, "table {id}");
        }
        assert!(matches!(table_spec(11), Err(Error::UnknownTable(11))));
    }
}
