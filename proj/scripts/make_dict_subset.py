#!/usr/bin/env python3
"""Builds tests/fixtures/cmudict_subset.dict from a full CMUdict file.

usage: make_dict_subset.py <cmudict.dict>

Accepts either the classic 0.7b layout ("WORD  PH ON" with WORD(1) variants)
or the newer lowercase layout ("word ph on" with word(2) variants). Output is
always the classic layout. Every token found in the fixture poems is kept,
plus a deterministic sample of the rest of the dictionary.
"""
import pathlib
import re
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"
TOKEN = re.compile(r"[a-z0-9']+")
SAMPLE_TARGET = 2000

EXTRA = """
a the upon whisper whispers whispered whispering embrace echo echoes echoing
read hmm merrily happily tenderly beautiful wonderful carefully
i me my mine myself we us our ours ourselves you your yours yourself
yourselves thou thee thy thine thyself she her hers herself he his him himself
they them their theirs themself themselves it its itself day night light
cat mat dog tree river runs green way pray say went ran sat away stay that contract
""".split()


def parse_line(line):
    line = line.split("#", 1)[0].rstrip()
    if not line or line.startswith(";;;"):
        return None
    head, _, phones = line.partition(" ")
    phones = phones.strip()
    if not phones:
        return None
    m = re.fullmatch(r"(.+)\((\d+)\)", head)
    word, idx = (m.group(1), int(m.group(2))) if m else (head, 0)
    return word.lower(), idx, phones


def main():
    src = pathlib.Path(sys.argv[1])
    entries = {}
    for raw in src.read_text(encoding="latin-1").splitlines():
        parsed = parse_line(raw)
        if parsed is None:
            continue
        word, idx, phones = parsed
        entries.setdefault(word, []).append((idx, phones))

    wanted = set(EXTRA)
    for path in list(ROOT.glob("**/*.txt")) + list(ROOT.glob("*.jsonl")):
        text = path.read_text(encoding="utf-8").lower()
        for tok in TOKEN.findall(text):
            wanted.add(tok.strip("'"))
            for part in tok.split("'"):
                wanted.add(part)

    plain = sorted(w for w in entries if re.fullmatch(r"[a-z]{3,9}", w))
    stride = max(1, len(plain) // SAMPLE_TARGET)
    wanted.update(plain[::stride][:SAMPLE_TARGET])

    out = [
        ";;; Subset of the CMU Pronouncing Dictionary, used as a test fixture.",
        ";;; Copyright (C) 1993-2015 Carnegie Mellon University. All rights reserved.",
        ";;; Redistributed under the CMUdict BSD-style license.",
    ]
    for word in sorted(w for w in wanted if w in entries):
        variants = sorted(entries[word])
        for n, (_, phones) in enumerate(variants):
            key = word.upper() if n == 0 else f"{word.upper()}({n})"
            out.append(f"{key}  {phones}")
    (ROOT / "cmudict_subset.dict").write_text("\n".join(out) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
