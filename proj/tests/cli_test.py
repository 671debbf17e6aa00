#!/usr/bin/env python3
"""End-to-end checks of the quadsys command line.

Each case runs the binary in a scratch directory, checks exit codes and
values, and validates JSON output against the shipped schemas.
"""

import argparse
import json
import os
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


class Runner:
    def __init__(self, binary, schemas, workdir):
        self.binary = binary
        self.schemas = pathlib.Path(schemas)
        self.workdir = pathlib.Path(workdir)

    def run(self, *args, expect=0, env=None):
        proc = subprocess.run([self.binary, *args], cwd=self.workdir, capture_output=True,
                              text=True, env=env)
        if proc.returncode != expect:
            sys.exit(f"{' '.join(args)}: exit {proc.returncode}, expected {expect}\n"
                     f"stdout:\n{proc.stdout}\nstderr:\n{proc.stderr}")
        return proc

    def json(self, schema, *args):
        doc = json.loads(self.run(*args).stdout)
        self.validate(doc, schema)
        return doc

    def validate(self, doc, schema):
        with open(self.schemas / f"{schema}.schema.json") as f:
            jsonschema.validate(doc, json.load(f))

    def edges_in(self, path):
        lines = (self.workdir / path).read_text().split("\n")
        return sum(1 for line in lines[1:] if line.strip())


def expect(cond, message):
    if not cond:
        sys.exit(message)


def construct_t4(r):
    side = r.json("sidecar", "construct", "t4", "--n", "12", "--out", "t4_12.hg")
    expect(r.edges_in("t4_12.hg") == 81, "T4(12) should have 81 edges")
    expect(side["edges"] == "81", side)
    on_disk = json.loads((r.workdir / "t4_12.json").read_text())
    r.validate(on_disk, "sidecar")
    expect(on_disk == side, "sidecar file differs from stdout")


def construct_sharpness_p3(r):
    side = r.json("sidecar", "construct", "sharpness-p3", "--n", "16", "--q", "2")
    expect(r.edges_in("sharpness-p3_16.hg") == 786, "expected 784 + 2 edges")
    expect(len(side["added_edges"]) == 2, side)


def construct_b4_sidecar(r):
    side = r.json("sidecar", "construct", "b4", "--n", "8", "--out", "b4_8.hg")
    expect(side["a"] == 6, side)
    expect(side["part_ranges"] == [[0, 6], [6, 8]], side)
    expect(side["edges"] == "40", side)


def count_p3_d4(r):
    r.run("construct", "d4", "--n", "16", "--out", "d4_16.hg")
    doc = r.json("count_report", "count", "--pattern", "P3", "--in", "d4_16.hg")
    expect(doc["count"] == "0", doc)
    expect(doc["method"] == "specialized", doc)


def write_k6(r):
    import itertools
    lines = ["6"] + [" ".join(map(str, q)) for q in itertools.combinations(range(6), 4)]
    (r.workdir / "k4_6.hg").write_text("\n".join(lines) + "\n")


def count_c3_k6(r):
    write_k6(r)
    doc = r.json("count_report", "count", "--pattern", "C3", "--in", "k4_6.hg")
    expect(doc["count"] == "15", doc)
    gen = r.json("count_report", "count", "--pattern", "C3", "--in", "k4_6.hg", "--generic")
    expect(gen["count"] == "15" and gen["method"] == "generic", gen)
    # The pattern can also come from a file.
    (r.workdir / "c3.hg").write_text("6\n0 1 2 3\n2 3 4 5\n0 1 4 5\n")
    own = r.json("count_report", "count", "--pattern-file", "c3.hg", "--in", "k4_6.hg")
    expect(own["count"] == "15" and own["pattern"] == "c3", own)


def count_through_edge(r):
    r.run("construct", "sharpness-p3", "--n", "12", "--q", "1", "--out", "s.hg")
    side = json.loads((r.workdir / "s.json").read_text())
    edge = ",".join(map(str, side["added_edges"][0]))
    doc = r.json("count_report", "count-through-edge", "--pattern", "P3", "--in", "s.hg",
                 "--edge", edge)
    total = r.json("count_report", "count", "--pattern", "P3", "--in", "s.hg")
    expect(doc["count"] == total["count"] and doc["count"] != "0", (doc, total))
    r.run("count-through-edge", "--pattern", "P3", "--in", "s.hg", "--edge", "0,1,2,3",
          expect=2)


def cmin_d4_p3(r):
    doc = r.json("min_added", "cmin", "--base", "d4", "--n", "12", "--pattern", "P3")
    expect(doc["c_value"] == "120", doc)
    expect(len(doc["argmin_edges"]) == len(doc["part_profiles"]), doc)
    r.run("construct", "d4", "--n", "12", "--out", "d4_12.hg")
    from_file = r.json("min_added", "cmin", "--in", "d4_12.hg", "--sidecar", "d4_12.json",
                       "--mode", "two_two", "--pattern", "P3", "--threads", "2")
    expect(from_file["c_value"] == "120", from_file)
    expect(from_file["part_profiles"] == doc["part_profiles"], "profiles differ")
    csv = r.run("cmin", "--base", "d4", "--n", "10", "--pattern", "P3", "--format", "csv").stdout
    expect(csv.splitlines()[0].startswith("pattern,host,method,c_value"), csv)


def partition_b4(r):
    doc = r.json("stability", "partition", "--base", "b4", "--n", "14", "--mode", "odd_odd")
    expect(doc["B_size"] == "0" and doc["M_size"] == "0", doc)
    expect(doc["locally_optimal"] is True, doc)
    exact = r.json("stability", "partition", "--base", "b4", "--n", "10", "--mode", "odd_odd",
                   "--exact")
    expect(exact["exhaustive"] is True and exact["B_size"] == "0", exact)
    env_seed = r.json("stability", "partition", "--base", "t4", "--n", "8", "--mode",
                      "transversal4")
    expect(env_seed["seed"] == "20090405", env_seed)
    env = dict(os.environ, QC_SEED="7")
    seeded = json.loads(r.run("partition", "--base", "t4", "--n", "8", "--mode", "transversal4",
                              env=env).stdout)
    expect(seeded["seed"] == "7", seeded)
    flag = json.loads(r.run("--seed", "9", "partition", "--base", "t4", "--n", "8", "--mode",
                            "transversal4", env=env).stdout)
    expect(flag["seed"] == "9", flag)


def turan_c3(r):
    doc = r.json("turan", "turan", "--n", "6", "--pattern", "C3", "--budget-nodes", "1e8",
                 "--witness", "w.hg")
    expect(doc["value"] == "10" and doc["status"] == "exact", doc)
    expect(r.edges_in("w.hg") == 10, "witness size")
    check = r.json("count_report", "count", "--pattern", "C3", "--in", "w.hg")
    expect(check["count"] == "0", check)
    small = r.json("turan", "turan", "--n", "8", "--pattern", "P2", "--budget-nodes", "300")
    expect(small["status"] == "lower_bound", small)


def bad_input_exit_code(r):
    (r.workdir / "bad.hg").write_text("8\n0 1 2 9\n")
    proc = r.run("count", "--pattern", "P2", "--in", "bad.hg", expect=2)
    expect("line 2" in proc.stderr, proc.stderr)
    r.run("count", "--pattern", "P9", "--in", "bad.hg", expect=2)
    r.run("construct", "sharpness-p2", "--n", "12", "--q", "99", expect=2)
    r.run("construct", "b4", "--n", "0", expect=2)
    r.run("turan", "--n", "6", "--pattern", "C3", "--budget-nodes", "lots", expect=2)
    r.run("nonsense", expect=2)
    r.run("verify-all", "--only", "no-such-check", expect=2)


def tamper_fails(r):
    proc = r.run("verify-all", "--only", "edge-counts", "--tamper", expect=2)
    expect("fail" in proc.stdout and "t4(12): formula 81, built 80" in proc.stdout, proc.stdout)
    expect("{0,3,6,9}" in proc.stdout, proc.stdout)


def verify_subset(r):
    r.run("verify-all", "--only", "sharpness-p2,automorphisms", "--csv", "v.csv",
          "--json", "v.json")
    rows = (r.workdir / "v.csv").read_text().splitlines()
    expect(len(rows) == 3, rows)
    expect(all(",pass," in row for row in rows[1:]), rows)
    r.validate(json.loads((r.workdir / "v.json").read_text()), "verify_report")


def verify_deterministic(r):
    outputs = []
    for i in range(2):
        # The suite exits 2 when a check fails; only byte identity matters here.
        proc = subprocess.run([r.binary, "verify-all", "--csv", f"run{i}.csv",
                               "--json", f"run{i}.json"], cwd=r.workdir,
                              capture_output=True, text=True)
        expect(proc.returncode in (0, 2), proc.stderr)
        outputs.append(((r.workdir / f"run{i}.csv").read_bytes(),
                        (r.workdir / f"run{i}.json").read_bytes()))
    expect(outputs[0] == outputs[1], "verify-all reports differ between runs")
    r.validate(json.loads(outputs[0][1]), "verify_report")


CASES = {f.__name__: f for f in [
    construct_t4, construct_sharpness_p3, construct_b4_sidecar, count_p3_d4, count_c3_k6,
    count_through_edge, cmin_d4_p3, partition_b4, turan_c3, bad_input_exit_code, tamper_fails,
    verify_subset, verify_deterministic,
]}


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--bin", required=True)
    parser.add_argument("--schemas", required=True)
    parser.add_argument("--case", required=True, choices=sorted(CASES))
    args = parser.parse_args()
    with tempfile.TemporaryDirectory() as tmp:
        CASES[args.case](Runner(args.bin, args.schemas, tmp))


if __name__ == "__main__":
    main()
