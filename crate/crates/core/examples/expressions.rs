//! The expression language behind the command-line tool, used as a
//! library: parse, inspect, evaluate, and run whole commands.
//!
//!     cargo run --example expressions

use rota_mzv::cli::{evaluate, parse, run_command};

fn main() {
    let inputs = [
        "sh([1],[2])",
        "st([2],[2]) - sh([2],[2])",
        "I([0])",
        "phi((1,2))",
        "f((1,2))",
        "eta(sh(x0x1, x1))",
        "msh(1/2; [1], [2])",
        "st([1,2 | 1,0], [1 | 1])",
        "2*Px((1)) - sh((0,1), (1))",
        "st(x0x1, x1)",
        "x0x1]",
    ];
    for text in inputs {
        match parse(text) {
            Ok(expr) => match evaluate(&expr) {
                Ok(value) => println!("{expr}  =  {value}   [{}]", value.kind()),
                Err(e) => println!("{expr}  fails: {e}"),
            },
            Err(e) => println!("{text:<28} {e}"),
        }
    }

    for argv in [vec!["zsh", "[1,2]"], vec!["eds", "--weight", "3", "--format", "csv"], vec!["zeta", "3"]] {
        let out = run_command(&argv);
        print!("$ rota-mzv {}\n{}", argv.join(" "), out.stdout);
    }
}
