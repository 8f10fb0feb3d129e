//! Asymptotic entanglement and twin-correlation regions in the (T, r)
//! plane, drawn as text. Pass `--csv PATH` to also write the grid and
//! boundary tables.

use twinbath::config::preset;
use twinbath::phase::{boundaries, scan_phase_diagram};
use twinbath::runner::{boundary_path, write_boundary_csv, write_phase_csv};

fn main() -> twinbath::Result<()> {
    let config = preset("fig4")?;
    let grid = config.grid.with_shape("24x40")?;
    let diagram = scan_phase_diagram(
        &grid.temperatures(),
        &grid.squeezings(),
        &config.pair,
        &config.bath,
    )?;

    // rows: temperature (top = hottest); `#` twin and entangled, `+` entangled only
    for i in (0..diagram.t_grid.len()).rev() {
        let row: String = (0..diagram.r_grid.len())
            .map(|j| match diagram.point(i, j) {
                p if p.twin => '#',
                p if p.entangled => '+',
                _ => '.',
            })
            .collect();
        println!("T = {:>5.3} {row}", diagram.t_grid[i]);
    }

    let edges = boundaries(&diagram, &config.pair, &config.bath)?;
    if let Some(edge) = edges.iter().find(|e| e.squeezing >= 2.0) {
        println!(
            "r = {:.3}: entangled below T = {:?}, twin below T = {:?}",
            edge.squeezing, edge.entangled, edge.twin
        );
    }

    let mut args = std::env::args().skip(1);
    if let (Some(flag), Some(path)) = (args.next(), args.next()) {
        if flag == "--csv" {
            let path = std::path::PathBuf::from(path);
            write_phase_csv(&path, &diagram)?;
            write_boundary_csv(&boundary_path(&path), &edges)?;
        }
    }
    Ok(())
}
