use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use zetatree_cli::record::OutputFormat;
use zetatree_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let record = run(&cli);
    let out = record.render(cli.format);
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = if record.exit_code == 2 && cli.format == OutputFormat::Text {
        writeln!(std::io::stderr(), "{out}")
    } else {
        writeln!(std::io::stdout(), "{out}")
    };
    ExitCode::from(record.exit_code as u8)
}
