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

//! Training batches that pair in-domain pseudo-parallel items with
//! out-of-domain parallel items in equal numbers.
//!
//! Pseudo-parallel items are consumed without replacement, so one plan is one
//! pass over the pseudo corpus. Parallel items are drawn with replacement per
//! batch; the parallel corpus is small and recurs across batches.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Batch {
    pub pseudo_indices: Vec<usize>,
    pub parallel_indices: Vec<usize>,
}

impl Batch {
    pub fn len(&self) -> usize {
        self.pseudo_indices.len() + self.parallel_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanHeader {
    pub pseudo_size: usize,
    pub parallel_size: usize,
    pub batch_size: usize,
    pub seed: u64,
    pub pseudo_epoch_complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchPlan {
    pub header: PlanHeader,
    pub batches: Vec<Batch>,
}

/// Plans one pass over the pseudo corpus in batches of `batch_size / 2`
/// pseudo plus as many parallel items. The last batch may be smaller but
/// keeps the halves equal.
pub fn plan_batches(
    pseudo_size: usize,
    parallel_size: usize,
    batch_size: usize,
    seed: u64,
) -> Result<BatchPlan> {
    if batch_size < 2 || !batch_size.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "batch_size must be even and at least 2, got {batch_size}"
        )));
    }
    if pseudo_size == 0 || parallel_size == 0 {
        return Err(Error::InvalidParameter(format!(
            "both corpora must be non-empty (pseudo {pseudo_size}, parallel {parallel_size})"
        )));
    }

    let half = batch_size / 2;
    let mut order: Vec<usize> = (0..pseudo_size).collect();
    order.shuffle(&mut rng::stream(seed, "batching.pseudo", 0));

    let batches = order
        .chunks(half)
        .enumerate()
        .map(|(b, pseudo)| {
            let mut draws = rng::stream(seed, "batching.parallel", b as u64);
            Batch {
                pseudo_indices: pseudo.to_vec(),
                parallel_indices: (0..pseudo.len())
                    .map(|_| draws.random_range(0..parallel_size))
                    .collect(),
            }
        })
        .collect();

    Ok(BatchPlan {
        header: PlanHeader {
            pseudo_size,
            parallel_size,
            batch_size,
            seed,
            pseudo_epoch_complete: true,
        },
        batches,
    })
}
