use std::process::ExitCode;

use clap::Parser;

mod app;
mod golden;
mod render;

use app::{execute, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("warning: {e}");
        }
    }
    // the library reads the limit from the environment on first use
    std::env::set_var("JACK_MAX_WEIGHT", cli.max_weight.to_string());

    let format = cli.output;
    match execute(&cli) {
        Ok(out) => {
            print!("{}", out.render(format));
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprint!("{}", render::error(&e, format));
            ExitCode::from(2)
        }
    }
}
