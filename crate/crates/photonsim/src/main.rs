// Copyright 2026 The photonsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use photonsim::commands::{self, RunSpec};
use photonsim::CliError;
use photonsim_core::grover::OracleVariant;

/// Exact simulator for linear-optical circuits.
#[derive(Parser)]
#[command(name = "photonsim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct RunArgs {
    /// JSON circuit file.
    #[arg(long)]
    circuit: PathBuf,
    /// Input Fock state, e.g. "|0,1,0,1,0,0>".
    #[arg(long)]
    input: String,
    /// Keep outcomes matching this predicate, e.g. "[4]==1 & [5]==1".
    #[arg(long)]
    postselect: Option<String>,
    /// Drop outcomes with fewer detected photons.
    #[arg(long)]
    min_photons: Option<usize>,
    /// Dual-rail qubits used to label outcomes.
    #[arg(long)]
    qubits: Option<usize>,
    #[arg(long)]
    json: bool,
}

impl RunArgs {
    fn spec(&self) -> RunSpec<'_> {
        RunSpec {
            circuit: &self.circuit,
            input: &self.input,
            postselect: self.postselect.as_deref(),
            min_photons: self.min_photons,
            qubits: self.qubits,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    PerMode,
    Uniform,
}

#[derive(Subcommand)]
enum Command {
    /// Print the compiled unitary.
    Unitary {
        #[arg(long)]
        circuit: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Output amplitudes, or conditioned probabilities with --renormalize.
    Simulate {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        renormalize: bool,
    },
    /// Seeded shot counts from the conditioned distribution.
    Sample {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, default_value_t = 1000)]
        shots: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Two-qubit polarization Grover search.
    Grover {
        /// One of 00, 01, 10, 11.
        #[arg(long)]
        target: String,
        #[arg(long, value_enum, default_value_t = Variant::PerMode)]
        variant: Variant,
        #[arg(long, default_value_t = 0)]
        shots: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

fn dispatch(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Unitary { circuit, json } => commands::unitary(&circuit, json),
        Command::Simulate { run, renormalize } => commands::simulate(&run.spec(), renormalize, run.json),
        Command::Sample { run, shots, seed } => commands::sample_counts(&run.spec(), shots, seed, run.json),
        Command::Grover { target, variant, shots, seed, json } => {
            let variant = match variant {
                Variant::PerMode => OracleVariant::PerMode,
                Variant::Uniform => OracleVariant::UniformPr0,
            };
            commands::grover(&target, variant, shots, seed, json)
        }
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
