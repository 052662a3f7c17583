fn main() -> std::process::ExitCode {
    skein::cli::main()
}
