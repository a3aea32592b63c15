use std::process::ExitCode;

use clap::Parser;
use iqw_core::IqwError;

mod args;
mod run;

fn threads_from_env() {
    let Ok(v) = std::env::var("IQW_THREADS") else {
        return;
    };
    match v.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
        _ => eprintln!("warning: ignoring IQW_THREADS={v:?}"),
    }
}

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    threads_from_env();
    match run::dispatch(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                IqwError::Parse(_)
                | IqwError::InvalidPartition(_)
                | IqwError::InvalidArgument(_)
                | IqwError::Domain(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
