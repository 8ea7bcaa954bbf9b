#!/usr/bin/env python3
"""Convert a MyThes thesaurus (the .idx/.dat pair used by the open-source
Turkish thesaurus project) into the TSV lexicon format this engine loads:

    word<TAB>syn1,syn2,...

Usage: mythes_to_tsv.py th_tr.dat > thesaurus_tr.tsv

Only the .dat file is needed; the .idx offsets are redundant for a full
export. Meanings are flattened: synonyms from all senses of a headword are
merged into one comma-separated set.
"""

import sys

LOWER_MAP = {"İ": "i", "I": "ı"}


def turkish_lower(s):
    return "".join(LOWER_MAP.get(ch, ch.lower()) for ch in s)


def main(argv):
    if len(argv) != 2:
        print(__doc__, file=sys.stderr)
        return 2
    path = argv[1]

    entries = {}
    with open(path, encoding="utf-8", errors="replace") as f:
        first = f.readline()  # encoding line, e.g. "UTF-8"
        if "\t" in first or "|" not in first:
            # no header; treat the first line as data by reopening
            f.seek(0)
        line = f.readline()
        while line:
            line = line.rstrip("\n")
            if "|" not in line:
                line = f.readline()
                continue
            word, count = line.rsplit("|", 1)
            try:
                meanings = int(count)
            except ValueError:
                line = f.readline()
                continue
            word = turkish_lower(word.strip())
            synonyms = entries.setdefault(word, set())
            for _ in range(meanings):
                sense = f.readline()
                if not sense:
                    break
                parts = sense.rstrip("\n").split("|")
                # parts[0] is the part-of-speech tag, e.g. "(noun)"
                for syn in parts[1:]:
                    syn = turkish_lower(syn.strip())
                    if syn and syn != word:
                        synonyms.add(syn)
            line = f.readline()

    for word in sorted(entries):
        if entries[word]:
            print(f"{word}\t{','.join(sorted(entries[word]))}")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
