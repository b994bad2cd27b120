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

//! Plans training batches that are half pseudo-parallel and half real
//! parallel data, covering the pseudo corpus exactly once.
//!
//! ```text
//! cargo run --example batch_plan
//! ```

use lexaug::batching::plan_batches;

fn main() -> lexaug::Result<()> {
    let plan = plan_batches(21, 5, 8, 42)?;
    println!(
        "{} pseudo items, {} parallel items, batch size {} -> {} batches",
        plan.header.pseudo_size,
        plan.header.parallel_size,
        plan.header.batch_size,
        plan.batches.len()
    );
    for (i, b) in plan.batches.iter().enumerate() {
        println!(
            "batch {i}: pseudo {:?} parallel {:?}",
            b.pseudo_indices, b.parallel_indices
        );
    }
    println!(
        "{}",
        serde_json::to_string(&plan.header).expect("header serializes")
    );

    match plan_batches(21, 5, 7, 42) {
        Err(e) => println!("odd batch size rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
