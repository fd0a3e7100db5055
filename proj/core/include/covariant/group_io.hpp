#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "covariant/group.hpp"

namespace covariant {

/// Parses a Cayley-table document
///   {"order": n, "table": [[...], ...], "labels": ["e", ...]}
/// with 0-based indices; "labels" is optional. Throws MalformedTable for
/// shape or syntax problems and NotAGroup for axiom violations.
FiniteGroup load_group(std::string_view json_text,
                       AssociativityCheck check = AssociativityCheck::automatic,
                       std::string name = {});

/// Reads and parses a document from disk; the group is named after the file
/// stem. I/O errors surface as MalformedTable naming the path.
FiniteGroup load_group_file(const std::filesystem::path& path,
                            AssociativityCheck check = AssociativityCheck::automatic);

/// Emits the document with keys in the order order, table, labels. The
/// output is byte-stable for a given group.
std::string serialize_group(const FiniteGroup& g);

}  // namespace covariant
