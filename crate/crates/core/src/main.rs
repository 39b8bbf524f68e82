fn main() {
    std::process::exit(gkm_workbench::cli::main_with(std::env::args_os()));
}
