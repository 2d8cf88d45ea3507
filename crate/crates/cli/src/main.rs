use clap::Parser;

fn main() {
    let cli = cubechaos_cli::Cli::parse();
    std::process::exit(cubechaos_cli::run(cli));
}
