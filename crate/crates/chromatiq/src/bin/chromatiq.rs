//! Thin binary wrapper: parse arguments, hand off to the library CLI,
//! map the result to a process exit code.

use clap::Parser;

fn main() {
    let cli = match chromatiq::cli::Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap reserves exit code 2 for usage errors, but here 2 means
            // solver budget exhaustion; usage problems are validation
            // errors and exit 1 (help and --version still exit 0).
            let is_real_error = err.use_stderr();
            let _ = err.print();
            std::process::exit(if is_real_error { 1 } else { 0 });
        }
    };
    let code = chromatiq::cli::run(cli, &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
