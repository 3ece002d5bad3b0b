#!/usr/bin/env python3
# Copyright 2026 The inform Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerate data/lemmas_en.tsv from lemminflect's lemma lookup (lemma_lu.csv.gz).

One lemma per lowercase surface form. When a form has several readings the
first lemma of the first matching part of speech in PRIORITY wins. Identity
mappings are dropped; the lemmatizer treats unknown words as their own lemma.
"""
import argparse
import collections
import csv
import gzip
import sys

PRIORITY = ["verb", "noun", "adj", "adv", "aux"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("lemma_lu", help="path to lemminflect/resources/lemma_lu.csv.gz")
    ap.add_argument("--out", default="data/lemmas_en.tsv")
    args = ap.parse_args()

    readings = collections.defaultdict(dict)
    with gzip.open(args.lemma_lu, "rt", encoding="utf-8") as f:
        for form, pos, lemmas in csv.reader(f):
            if form != form.lower() or not form.isalpha():
                continue
            readings[form][pos] = lemmas.split("/")[0].lower()

    rows = []
    for form in sorted(readings):
        by_pos = readings[form]
        lemma = next((by_pos[p] for p in PRIORITY if p in by_pos), None)
        if lemma is None or lemma == form or not lemma.isalpha():
            continue
        rows.append((form, lemma))

    with open(args.out, "w", encoding="utf-8", newline="\n") as out:
        out.write("# inform English lemma table v1\n")
        out.write("# source: lemminflect 0.2.3 lemma_lu (AGID-derived), POS priority "
                  + ">".join(PRIORITY) + "\n")
        out.write("# form<TAB>lemma, lowercase, identity mappings omitted\n")
        for form, lemma in rows:
            out.write(f"{form}\t{lemma}\n")
    print(f"wrote {len(rows)} entries to {args.out}", file=sys.stderr)


if __name__ == "__main__":
    main()
