"""Execute every CLI example in the README and compare against the shown output.

Examples live in ```console blocks. A line starting with "$ essdim" is a
command; the lines after it, up to the next command or the end of the block,
are its expected stdout. A trailing "# exit N" on the command line sets the
expected exit status (default 0). A line consisting of "..." matches any
remaining output.

usage: check_readme_examples.py ESSDIM_BINARY README_PATH
"""
import re
import shlex
import subprocess
import sys


def examples(text):
    for block in re.findall(r"```console\n(.*?)```", text, flags=re.S):
        current = None
        for line in block.splitlines():
            if line.startswith("$ "):
                if current:
                    yield current
                cmd = line[2:]
                status = 0
                m = re.search(r"\s+#\s*exit\s+(\d+)\s*$", cmd)
                if m:
                    status = int(m.group(1))
                    cmd = cmd[: m.start()]
                current = (cmd, status, [])
            elif current:
                current[2].append(line)
        if current:
            yield current


def matches(expected, actual):
    for i, line in enumerate(expected):
        if line == "...":
            return True
        if i >= len(actual) or actual[i].rstrip() != line.rstrip():
            return False
    return len(actual) == len(expected)


def main():
    binary, readme = sys.argv[1], sys.argv[2]
    with open(readme) as f:
        text = f.read()
    count = failures = 0
    for cmd, status, expected in examples(text):
        argv = shlex.split(cmd)
        if argv[0] != "essdim":
            print(f"FAIL not an essdim command: {cmd}")
            failures += 1
            continue
        count += 1
        r = subprocess.run([binary, *argv[1:]], capture_output=True, text=True)
        actual = r.stdout.splitlines()
        while expected and expected[-1] == "":
            expected = expected[:-1]
        problems = []
        if r.returncode != status:
            problems.append(f"exit {r.returncode}, expected {status}")
        if expected and not matches(expected, actual):
            problems.append("output differs:\n" + "\n".join("    | " + l for l in actual))
        if problems:
            failures += 1
            print(f"FAIL $ {cmd}\n  " + "\n  ".join(problems))
        else:
            print(f"ok   $ {cmd}")
    if count == 0:
        print("FAIL no examples found")
        failures += 1
    print(f"{count} example(s), {failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
