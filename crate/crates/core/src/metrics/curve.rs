// Copyright 2026 The lexaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// One sentence's reference length and scores.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LengthRecord {
    pub ref_len: usize,
    pub bleu: f64,
    pub chrf: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LengthPoint {
    pub ref_len: usize,
    pub mean_bleu: f64,
    pub mean_chrf: f64,
    pub count: usize,
}

/// Mean sentence scores per reference token length, ascending by length.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct LengthCurve {
    pub points: Vec<LengthPoint>,
}

impl LengthCurve {
    pub fn get(&self, ref_len: usize) -> Option<&LengthPoint> {
        self.points
            .binary_search_by_key(&ref_len, |p| p.ref_len)
            .ok()
            .map(|i| &self.points[i])
    }

    /// CSV with header `ref_len,mean_bleu,mean_chrf,count`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("ref_len,mean_bleu,mean_chrf,count\n");
        for p in &self.points {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                p.ref_len, p.mean_bleu, p.mean_chrf, p.count
            );
        }
        out
    }
}

/// Groups records by reference length and averages each group.
pub fn length_curve(records: &[LengthRecord]) -> LengthCurve {
    let mut groups: BTreeMap<usize, (f64, f64, usize)> = BTreeMap::new();
    for r in records {
        let g = groups.entry(r.ref_len).or_default();
        g.0 += r.bleu;
        g.1 += r.chrf;
        g.2 += 1;
    }
    LengthCurve {
        points: groups
            .into_iter()
            .map(|(ref_len, (b, c, n))| LengthPoint {
                ref_len,
                mean_bleu: b / n as f64,
                mean_chrf: c / n as f64,
                count: n,
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(ref_len: usize, bleu: f64, chrf: f64) -> LengthRecord {
        LengthRecord {
            ref_len,
            bleu,
            chrf,
        }
    }

    #[test]
    fn groups_and_averages() {
        let curve = length_curve(&[rec(5, 10.0, 20.0), rec(5, 30.0, 40.0)]);
        assert_eq!(
            curve.points,
            vec![LengthPoint {
                ref_len: 5,
                mean_bleu: 20.0,
                mean_chrf: 30.0,
                count: 2
            }]
        );
        let single = length_curve(&[rec(3, 1.5, 2.5)]);
        assert_eq!(single.get(3).unwrap().count, 1);
        assert_eq!(single.get(3).unwrap().mean_bleu, 1.5);
        assert!(single.get(4).is_none());
        assert!(length_curve(&[]).points.is_empty());
    }

    #[test]
    fn csv_layout() {
        let curve = length_curve(&[rec(2, 50.0, 60.0), rec(1, 0.0, 10.0)]);
        assert_eq!(
            curve.to_csv(),
            "ref_len,mean_bleu,mean_chrf,count\n1,0,10,1\n2,50,60,1\n"
        );
    }
}
