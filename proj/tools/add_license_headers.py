#!/usr/bin/env python3
"""Prepend the Apache-2.0 header to C++ and CMake sources that lack it."""

import pathlib
import sys

HEADER = """Copyright 2026 The besov-euler Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License."""

DIRS = ["include", "src", "tests", "tools"]
STYLES = {".cpp": "//", ".hpp": "//", ".txt": "#", ".py": "#"}


def commented(prefix):
    return "\n".join((prefix + " " + line).rstrip() for line in HEADER.splitlines()) + "\n\n"


def main(root):
    root = pathlib.Path(root)
    paths = [root / "CMakeLists.txt"]
    for d in DIRS:
        paths += sorted(p for p in (root / d).rglob("*") if p.suffix in STYLES)
    changed = 0
    for path in paths:
        if path.suffix == ".txt" and path.name != "CMakeLists.txt":
            continue
        text = path.read_text()
        if "Licensed under the Apache License" in text[:1000]:
            continue
        block = commented(STYLES[path.suffix])
        if text.startswith("#!"):
            first, _, rest = text.partition("\n")
            text = first + "\n" + block + rest
        else:
            text = block + text
        path.write_text(text)
        changed += 1
    print(f"headers added to {changed} files")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else ".")
