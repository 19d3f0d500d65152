//! Emit figure datasets as x,y,series CSV.
//!
//! cargo run --example plot_data -- [coverage-growth|rsa-unsafe-zone|a-graph|gec-growth|residue]

use deltasieve::plot::{plot_data, write_points, Figure, PlotParams};

fn main() -> deltasieve::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "a-graph".into());
    let fig: Figure = name.parse()?;
    let points = plot_data(fig, &PlotParams::for_figure(fig))?;
    write_points(&points, std::io::stdout())
}
