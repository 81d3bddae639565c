fn main() -> std::process::ExitCode {
    ballquot::cli::main_from_env()
}
