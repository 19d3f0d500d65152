use std::path::PathBuf;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deltasieve")).args(args).output().expect("spawn deltasieve")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("deltasieve-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn factor_prints_key_values() {
    let o = bin(&["factor", "--n", "3848"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n=3848,p=52,q=74,delta=22,method=zone0\n");
}

#[test]
fn series_row_seven_matches_first_table() {
    let o = bin(&["series", "--delta", "12", "--parity", "odd", "--dials", "0,-1,2,2", "--rows", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 9);
    assert!(text.lines().nth(7).unwrap().starts_with("7,13,25,325,18,18,20,-1,75,76,74,"));
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(bin(&["series", "--delta", "12", "--nope"]).status.code(), Some(2));
    assert_eq!(bin(&["plot-data", "--figure", "pie"]).status.code(), Some(2));
    assert_eq!(bin(&["series", "--delta", "12", "--dials", "1,2,3"]).status.code(), Some(2));
    assert_eq!(bin(&["factor", "--n", "3848", "--delta", "10"]).status.code(), Some(1));
    assert_eq!(bin(&["connect", "--n", "405"]).status.code(), Some(1));
}

#[test]
fn trapdoor_through_key_file() {
    let dir = scratch("trapdoor");
    let key = dir.join("aum.key");
    let key_s = key.to_str().unwrap();
    let o = bin(&["trapdoor-encrypt", "--delta", "137136", "--message", "AUM", "--out", key_s]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        std::fs::read_to_string(&key).unwrap(),
        "delta=137136\nciphertext=168623\nprivate=-5522773392982230560\n"
    );
    let o = bin(&["trapdoor-decrypt", "--key", key_s]);
    assert_eq!(stdout(&o), "message=AUM\n");
    let o = bin(&["trapdoor-decrypt", "--delta", "137136", "--ciphertext", "168623", "--private", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn golden_tables_are_deterministic() {
    let a = scratch("golden-a");
    let b = scratch("golden-b");
    for d in [&a, &b] {
        let o = bin(&["golden-tables", "--dir", d.to_str().unwrap(), "--tables", "1,15,34"]);
        assert_eq!(o.status.code(), Some(0));
    }
    for name in ["table_01.csv", "table_15.csv", "table_34.csv"] {
        assert_eq!(std::fs::read(a.join(name)).unwrap(), std::fs::read(b.join(name)).unwrap());
    }
}

#[test]
fn scalar_and_table_commands() {
    assert_eq!(stdout(&bin(&["first-p", "--delta", "12"])), "delta=12,parity=odd,p=13,id=7\n");
    assert_eq!(stdout(&bin(&["ssv", "--deck", "od4", "--delta", "12"])), "deck=od4,delta=12,value=74,form=D^2/2+2\n");
    let n = stdout(&bin(&["neighbors", "--n", "1643", "--dials", "-1,0,2,2"]));
    assert_eq!(n, "which,lo,hi\nprevious,1347,1491\nnext,1803,1971\n");
    let c = stdout(&bin(&["connect", "--n", "219781"]));
    assert!(c.trim_end().ends_with("n_next=221949"));
    let r = stdout(&bin(&["reflect", "--delta", "22", "--dials", "-1,0,2,2", "--rows", "24"]));
    assert_eq!(r, "x,y,gap,center_start,center_end,span\n4,4,0,10,11,4\n");
    let e = stdout(&bin(&["equilibrium", "--delta", "20", "--length", "3"]));
    assert_eq!(e, "n_sum,od6_delta,constant,df\n99,99,0,\n91,93,-2,2\n75,85,-10,8\n");
    let a = stdout(&bin(&["plot-data", "--figure", "a-graph"]));
    assert!(a.lines().any(|l| l == "2501,99,delta=20"));
    let p = stdout(&bin(&["factor", "--n", "3848", "--pretty"]));
    assert!(p.starts_with("n       3848\n"));
}
