fn main() -> std::process::ExitCode {
    tenk_cli::run(std::env::args_os(), &mut std::io::stdout().lock())
}
