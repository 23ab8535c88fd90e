use std::process::ExitCode;

use clap::Parser;
use flagheight::rootsys::RootSystem;
use flagheight_cli::args::Cli;
use flagheight_cli::job::parse_group;
use flagheight_cli::render::render;
use flagheight_cli::{numbering_table, run, CliError};

const NUMBERING_DEFAULTS: [&str; 7] = ["A4", "B4", "C4", "D5", "E8", "F4", "G2"];

fn print_numbering(group: Option<&str>) -> Result<(), CliError> {
    let groups: Vec<String> = match group {
        Some(g) => vec![g.to_string()],
        None => NUMBERING_DEFAULTS.iter().map(|s| s.to_string()).collect(),
    };
    for g in groups {
        let rs = RootSystem::new(&parse_group(&g)?)?;
        print!("{}", numbering_table(&rs));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = if cli.print_numbering {
        print_numbering(cli.group.as_deref())
    } else {
        match cli.command {
            None => Err(CliError::Parse("no command given; see --help".into())),
            Some(cmd) => cmd.into_job().and_then(|job| {
                let outcome = run(&job)?;
                for warning in &outcome.warnings {
                    eprintln!("warning: {warning}");
                }
                print!("{}", render(&outcome.document, job.output));
                Ok(())
            }),
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
