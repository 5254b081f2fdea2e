//! Graphviz DOT export, in residue labels or product-tuple labels.
//!
//! ```bash
//! cargo run --example export_dot > g8.dot && dot -Tpng g8.dot -o g8.png
//! ```

use uclique::{cayley_dot, product_dot, ProductGraphSpec, DOT_VERTEX_CAP};

fn main() {
    // Residue-labeled export of the n = 8 graph (8 nodes, 16 edges) on
    // stdout, ready to pipe into Graphviz.
    print!("{}", cayley_dot(8, DOT_VERTEX_CAP).unwrap());

    // Tuple-labeled export of a product spec goes to stderr here just to
    // keep stdout pipeable; normally you would write it to a file.
    let spec: ProductGraphSpec = "1x2,1x3".parse().unwrap();
    eprintln!("{}", product_dot(&spec, DOT_VERTEX_CAP).unwrap());
}
