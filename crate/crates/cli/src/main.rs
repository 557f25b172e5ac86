use clap::Parser;
use symbpow_cli::commands::{execute, Cli};
use symbpow_cli::exit_code;

fn main() {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            std::process::exit(out.status);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code(&e));
        }
    }
}
