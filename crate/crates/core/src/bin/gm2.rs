use std::process::ExitCode;

fn main() -> ExitCode {
    let r = gm2_height::cli::run_command(std::env::args_os().skip(1));
    if r.exit_code == 0 || r.command.is_empty() && r.error.is_none() {
        print!("{}", r.output);
        if !r.output.ends_with('\n') {
            println!();
        }
    } else if r.command.is_empty() {
        eprintln!("{}", r.output.trim_end());
    } else {
        println!("{}", r.output);
    }
    ExitCode::from(r.exit_code as u8)
}
