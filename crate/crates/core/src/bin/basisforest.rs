use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use basisforest::demo::{self, DofMap, InspectOptions, OccupationPattern, VelocityLayout};
use basisforest::functions::vtk::{write_vtk, VtkField};
use basisforest::{make_discrete_function, subspace_basis, vector_backend, Error, TreePath};

#[derive(Parser)]
#[command(name = "basisforest", version, about = "Inspect function space bases and run small demo solves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Layout {
    /// Velocity indices (0, component, node)
    Fig3,
    /// Velocity indices (0, node, component)
    Fig4,
}

#[derive(Subcommand)]
enum Command {
    /// Print the dimension and index tree of a basis
    Inspect {
        #[arg(long, default_value_t = 1)]
        nx: usize,
        #[arg(long, default_value_t = 1)]
        ny: usize,
        #[arg(long)]
        basis: String,
        #[arg(long)]
        print_index_tree: bool,
        #[arg(long)]
        print_local_indices: bool,
        /// Write the occupation pattern as a plain PBM file
        #[arg(long)]
        pattern: Option<PathBuf>,
    },
    /// Solve -Δu = -4 with u = x² + y² on the boundary
    Poisson {
        #[arg(long, default_value_t = 4)]
        nx: usize,
        #[arg(long, default_value_t = 4)]
        ny: usize,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[arg(long)]
        vtk: Option<PathBuf>,
    },
    /// Solve Stokes flow for the Poiseuille profile with Taylor–Hood elements
    Stokes {
        #[arg(long, default_value_t = 4)]
        nx: usize,
        #[arg(long, default_value_t = 4)]
        ny: usize,
        #[arg(long, value_enum, default_value_t = Layout::Fig4)]
        layout: Layout,
        #[arg(long)]
        pattern: Option<PathBuf>,
        #[arg(long)]
        vtk: Option<PathBuf>,
        /// Largest nx*ny accepted by the dense solver
        #[arg(long, default_value_t = demo::DEFAULT_MAX_CELLS)]
        max_cells: usize,
    },
}

fn write_pattern(pattern: &OccupationPattern, map: &DofMap, path: &PathBuf) -> basisforest::Result<()> {
    pattern.write_pbm(map, &mut BufWriter::new(File::create(path)?))
}

fn run(command: Command) -> basisforest::Result<String> {
    match command {
        Command::Inspect {
            nx,
            ny,
            basis,
            print_index_tree,
            print_local_indices,
            pattern,
        } => {
            let basis = demo::inspect_basis(nx, ny, &basis)?;
            let options = InspectOptions {
                index_tree: print_index_tree,
                local_indices: print_local_indices,
            };
            let mut out = demo::cmd_inspect(&basis, options)?;
            if let Some(path) = pattern {
                let p = OccupationPattern::from_basis(&basis)?;
                write_pattern(&p, &DofMap::new(&basis), &path)?;
                out.push_str(&format!("pattern_nonzeros={}\n", p.nonzeros()));
            }
            Ok(out)
        }
        Command::Poisson { nx, ny, degree, vtk } => {
            let report = demo::cmd_poisson(nx, ny, degree)?;
            if let Some(path) = vtk {
                let solution = demo::solve_poisson(nx, ny, degree, &demo::Manufactured::QUADRATIC)?;
                let f = make_discrete_function(&solution.basis, vector_backend(&solution.coefficients), 1)?;
                let field = VtkField::sample("u", &f)?;
                write_vtk(&mut BufWriter::new(File::create(path)?), solution.basis.mesh(), &[field])?;
            }
            Ok(report.to_string())
        }
        Command::Stokes {
            nx,
            ny,
            layout,
            pattern,
            vtk,
            max_cells,
        } => {
            let layout = match layout {
                Layout::Fig3 => VelocityLayout::Lexicographic,
                Layout::Fig4 => VelocityLayout::Interleaved,
            };
            let mut out = demo::cmd_stokes(nx, ny, layout, max_cells)?.to_string();
            if let Some(path) = pattern {
                let (p, map) = demo::stokes_pattern(nx, ny, layout)?;
                write_pattern(&p, &map, &path)?;
                out.push_str(&format!("pattern_nonzeros={}\n", p.nonzeros()));
            }
            if let Some(path) = vtk {
                let solution = demo::solve_stokes(nx, ny, layout, max_cells)?;
                let basis = &solution.basis;
                let c = vector_backend(&solution.coefficients);
                let velocity = subspace_basis(basis, &TreePath::from([0]))?;
                let pressure = subspace_basis(basis, &TreePath::from([1]))?;
                let fields = [
                    VtkField::sample("velocity", &make_discrete_function(&velocity, c, 2)?)?,
                    VtkField::sample("pressure", &make_discrete_function(&pressure, c, 1)?)?,
                ];
                write_vtk(&mut BufWriter::new(File::create(path)?), basis.mesh(), &fields)?;
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Numerical(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
