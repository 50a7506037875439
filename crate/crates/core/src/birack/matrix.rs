//! Birack matrices `M = [U|L]` and their plain-text file format.
//!
//! The encoding is asymmetric: `U(i,j) = k` means `x_k = B_1(x_j, x_i)`
//! while `L(i,j) = h` means `x_h = B_2(x_i, x_j)`. Entries are 1-based.
//! The file format is the size `n` on the first line, then `n` lines of
//! `2n` integers (row `i` of U followed by row `i` of L); `#` starts a
//! comment line.

use super::{BirackError, FiniteBirack};
use crate::perm::is_perm_images;

impl FiniteBirack {
    /// Rebuild a birack from its matrix encoding. Rejects out-of-range
    /// entries and any U- or L-column that is not a permutation (the
    /// column maps u_x and l_x are bijections in every birack).
    pub fn from_matrix(u: &[Vec<usize>], l: &[Vec<usize>]) -> Result<FiniteBirack, BirackError> {
        let n = u.len();
        if n == 0 {
            return Err(BirackError::EmptySet);
        }
        if l.len() != n {
            return Err(BirackError::BadShape { n, found: l.len() });
        }
        for (table, name) in [(u, "U"), (l, "L")] {
            for (i, row) in table.iter().enumerate() {
                if row.len() != n {
                    return Err(BirackError::BadShape { n, found: row.len() });
                }
                for (j, &v) in row.iter().enumerate() {
                    if v == 0 || v > n {
                        return Err(BirackError::EntryOutOfRange {
                            table: name,
                            row: i + 1,
                            col: j + 1,
                            value: v,
                            n,
                        });
                    }
                }
            }
            for j in 0..n {
                let col: Vec<usize> = (0..n).map(|i| table[i][j] - 1).collect();
                if !is_perm_images(&col) {
                    return Err(BirackError::ColumnNotPermutation {
                        table: name,
                        col: j + 1,
                    });
                }
            }
        }
        Ok(FiniteBirack::from_fn(n, |x, y| {
            // U(i,j) = B_1(x_j, x_i); L(i,j) = B_2(x_i, x_j)
            (u[y][x] - 1, l[x][y] - 1)
        }))
    }

    /// The matrix encoding `(U, L)` of this birack, 1-based.
    pub fn to_matrix(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let n = self.size();
        let u = (0..n)
            .map(|i| (0..n).map(|j| self.b1(j, i) + 1).collect())
            .collect();
        let l = (0..n)
            .map(|i| (0..n).map(|j| self.b2(i, j) + 1).collect())
            .collect();
        (u, l)
    }

    pub fn from_matrix_file(text: &str) -> Result<FiniteBirack, BirackError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let n: usize = lines
            .next()
            .ok_or_else(|| BirackError::MatrixFile("missing size line".into()))?
            .parse()
            .map_err(|_| BirackError::MatrixFile("size line is not an integer".into()))?;
        if n == 0 {
            return Err(BirackError::EmptySet);
        }
        let mut u = Vec::with_capacity(n);
        let mut l = Vec::with_capacity(n);
        for i in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| BirackError::MatrixFile(format!("missing row {}", i + 1)))?;
            let entries: Vec<usize> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse()
                        .map_err(|_| BirackError::MatrixFile(format!("bad entry `{tok}` in row {}", i + 1)))
                })
                .collect::<Result<_, _>>()?;
            if entries.len() != 2 * n {
                return Err(BirackError::MatrixFile(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    entries.len(),
                    2 * n
                )));
            }
            u.push(entries[..n].to_vec());
            l.push(entries[n..].to_vec());
        }
        FiniteBirack::from_matrix(&u, &l)
    }

    pub fn to_matrix_file(&self) -> String {
        let (u, l) = self.to_matrix();
        let mut out = format!("{}\n", self.size());
        for i in 0..self.size() {
            let row: Vec<String> = u[i].iter().chain(l[i].iter()).map(|v| v.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birack::TsrParams;

    /// The 4x4|4x4 matrix of the involutory (t,s,r)-birack on Z_4 with
    /// s = 2, t = 1, r = 3.
    fn z4_matrix() -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        (
            vec![
                vec![3, 1, 3, 1],
                vec![4, 2, 4, 2],
                vec![1, 3, 1, 3],
                vec![2, 4, 2, 4],
            ],
            vec![
                vec![3, 3, 3, 3],
                vec![2, 2, 2, 2],
                vec![1, 1, 1, 1],
                vec![4, 4, 4, 4],
            ],
        )
    }

    #[test]
    fn z4_birack_matrix_reproduced() {
        let b = FiniteBirack::tsr(&TsrParams::new(4, 1, 2, 3).unwrap());
        assert_eq!(b.to_matrix(), z4_matrix());
        // spot check: U(1,2) = 1 encodes B_1(x_2, x_1) = 2·2 + 1 ≡ 1 mod 4
        let (u, _) = b.to_matrix();
        assert_eq!(u[0][1], 1);
    }

    #[test]
    fn round_trips() {
        let (u, l) = z4_matrix();
        let b = FiniteBirack::from_matrix(&u, &l).unwrap();
        assert_eq!(b.to_matrix(), (u, l));
        assert_eq!(b, FiniteBirack::tsr(&TsrParams::new(4, 1, 2, 3).unwrap()));

        let one = FiniteBirack::from_matrix(&[vec![1]], &[vec![1]]).unwrap();
        assert_eq!(one.to_matrix(), (vec![vec![1]], vec![vec![1]]));

        let reparsed = FiniteBirack::from_matrix_file(&b.to_matrix_file()).unwrap();
        assert_eq!(reparsed, b);
    }

    #[test]
    fn rejects_constant_column() {
        let u = vec![vec![1, 1], vec![1, 2]];
        let l = vec![vec![1, 2], vec![2, 1]];
        assert!(matches!(
            FiniteBirack::from_matrix(&u, &l),
            Err(BirackError::ColumnNotPermutation { table: "U", col: 1 })
        ));
    }

    #[test]
    fn rejects_out_of_range() {
        let u = vec![vec![1, 2], vec![2, 3]];
        let l = vec![vec![1, 1], vec![2, 2]];
        assert!(matches!(
            FiniteBirack::from_matrix(&u, &l),
            Err(BirackError::EntryOutOfRange { .. })
        ));
    }

    #[test]
    fn parses_file_with_comments() {
        let text = "# involutory birack on Z_4\n4\n3 1 3 1 3 3 3 3\n4 2 4 2 2 2 2 2\n1 3 1 3 1 1 1 1\n2 4 2 4 4 4 4 4\n";
        let b = FiniteBirack::from_matrix_file(text).unwrap();
        assert_eq!(b, FiniteBirack::tsr(&TsrParams::new(4, 1, 2, 3).unwrap()));
        assert!(FiniteBirack::from_matrix_file("2\n1 1 1 2\n").is_err());
    }
}
