//! Double shuffle relations among convergent multiple zeta values and the
//! dimension bounds they give.
//!
//!     cargo run --example double_shuffle [max_weight]

use rota_mzv::regularization::{dsh_relations, eds_relations, relation_rank, relations_csv};
use rota_mzv::Result;

fn main() -> Result<()> {
    let max: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);

    for r in eds_relations(3).iter().chain(&dsh_relations(4)) {
        println!("{r}");
    }
    for weight in 2..=max.min(8) {
        let (rank, bound) = relation_rank(weight)?;
        println!("weight {weight}: {} relations, rank {rank}, dimension <= {bound}", eds_relations(weight).len());
    }
    print!("{}", relations_csv(&eds_relations(4))?);
    Ok(())
}
