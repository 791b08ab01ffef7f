use crate::error::{Error, Result};

/// A finite group given by a multiplication table on labelled elements.
#[derive(Clone, Debug)]
pub struct Group {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl Group {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Group> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::NotAGroup(format!("table must be {n} x {n}")));
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return Err(Error::NotAGroup("entry outside the element set".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails on ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("`{}` has no inverse", labels[a])))?;
            inverses.push(inv);
        }
        Ok(Group { labels, table, identity, inverses })
    }

    /// Cyclic group `C_n` with elements `1, g, g2, ...`.
    pub fn cyclic(n: usize) -> Group {
        assert!(n >= 1);
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Group::new(labels, table).expect("cyclic table is a group")
    }

    /// Symmetric group `S_3` in cycle notation; `A_3 = {1, (123), (132)}`.
    pub fn s3() -> Group {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
        let labels = ["1", "(12)", "(13)", "(23)", "(123)", "(132)"].iter().map(|s| s.to_string()).collect();
        // (p q)(x) = p(q(x))
        let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).expect("closed");
        let table = perms
            .iter()
            .map(|p| perms.iter().map(|q| index([p[q[0]], p[q[1]], p[q[2]]])).collect())
            .collect();
        Group::new(labels, table).expect("S3 table is a group")
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_is_nonabelian_of_order_six() {
        let g = Group::s3();
        assert_eq!(g.order(), 6);
        let a = g.index_of("(12)").unwrap();
        let b = g.index_of("(13)").unwrap();
        assert_ne!(g.mul(a, b), g.mul(b, a));
        let c = g.index_of("(123)").unwrap();
        assert_eq!(g.inverse(c), g.index_of("(132)").unwrap());
    }

    #[test]
    fn rejects_non_group_table() {
        let labels = vec!["a".to_string(), "b".to_string()];
        let err = Group::new(labels, vec![vec![0, 0], vec![0, 0]]);
        assert!(matches!(err, Err(Error::NotAGroup(_))));
    }
}
