#!/usr/bin/env python3
"""Regenerates the headers that embed the default data files.

Run from the repository root after editing data/inventory.tsv or
data/knowledge_base.tsv.
"""
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent
TARGETS = [
    ("data/inventory.tsv", "include/capt/data/default_inventory.hpp", "kDefaultInventoryTsv"),
    ("data/knowledge_base.tsv", "include/capt/data/default_knowledge_base.hpp", "kDefaultKnowledgeBaseTsv"),
]

for src, dst, name in TARGETS:
    src_path = ROOT / src
    if not src_path.exists():
        continue
    body = src_path.read_text(encoding="utf-8")
    # Raw string literals are limited in length by some compilers; split by line.
    lines = body.splitlines(keepends=True)
    chunks = "\n".join('    R"CAPT(' + line.replace("\n", "") + ')CAPT" "\\n"' for line in lines)
    out = (
        "#pragma once\n\n"
        f"// Generated from {src} by tools/embed_data.py. Do not edit.\n\n"
        "#include <string_view>\n\n"
        "namespace capt::data {\n\n"
        f"inline constexpr std::string_view {name} =\n{chunks};\n\n"
        "}  // namespace capt::data\n"
    )
    (ROOT / dst).write_text(out, encoding="utf-8")
    print(f"wrote {dst}")
