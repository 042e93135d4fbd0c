fn main() -> std::process::ExitCode {
    cliquecover::cli::main()
}
