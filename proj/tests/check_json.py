"""Every --json invocation must print a single valid JSON document."""
import json
import subprocess
import sys

cli = sys.argv[1]
cases = [
    ["analyze", "K 3"],
    ["analyze", "C 6"],
    ["build", "K 3", "pi_tilde", "2", "8"],
    ["build", "K 3", "rho", "8"],
    ["build", "K 4", "family", "10"],
    ["check", "3,3,2,2,2", "K 3"],
    ["sigma", "K 3", "7"],
    ["probe", "7,1^7", "K 3", "--f-override", "4"],
    ["dist", "4,4,1^6", "7,1^7"],
]
for args in cases:
    out = subprocess.run([cli, "--json", *args], check=True, capture_output=True, text=True).stdout
    doc = json.loads(out)
    # Round trip: dumping and reloading gives the same document.
    assert json.loads(json.dumps(doc)) == doc, args

report = json.loads(subprocess.run([cli, "--json", "analyze", "K 3"], check=True,
                                   capture_output=True, text=True).stdout)
assert list(report["profile"]) == ["k", "alpha", "nabla", "sigmaTildeI", "sigmaTilde", "iStar", "type", "bH"]
assert list(report["sigma"]) == ["status", "theorem", "witnessSequencePattern", "coverB1B2", "note"]

trace = subprocess.run([cli, "probe", "7,1^7", "K 3", "--f-override", "4", "--trace"], check=True,
                       capture_output=True, text=True).stdout
records = [json.loads(line) for line in trace.splitlines()]
assert records[0]["record"] == "header" and records[-1]["record"] == "verdict"
print("ok")
