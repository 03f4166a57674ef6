//! Driving the command-line front end in-process, as the `gm2` binary does.

use gm2_height::cli::run_command;

fn main() {
    let commands: [&[&str]; 4] = [
        &["height", "--minpoly", "x^2-2"],
        &["--json", "bound", "--kind", "theorem2", "--omega", "16"],
        &["verify", "--kind", "theorem2", "--curve", "x+y-5", "--x", "2", "--y", "3"],
        &["curve-height", "--curve", "x^2-*y"],
    ];
    for argv in commands {
        let r = run_command(argv.iter().copied());
        println!("$ gm2 {}\n{}\n(exit {})\n", argv.join(" "), r.output, r.exit_code);
    }
}
