#pragma once

#include <iosfwd>
#include <string>

#include "faber/manifold.hpp"

namespace faber {

/// Canonical text forms. Entry order is the canonical (graded-lex) order of
/// the in-memory containers, floats print as shortest round-trip decimals,
/// so serialize-parse round trips are bit exact.

void write_expansion(std::ostream& os, const SparseFaberExpansion& e);
SparseFaberExpansion read_expansion(std::istream& is);

void write_covering(std::ostream& os, const CoveringCode& code);
CoveringCode read_covering(std::istream& is);

void write_manifold(std::ostream& os, const ManifoldCode& code);
ManifoldCode read_manifold(std::istream& is);

std::string to_string(const SparseFaberExpansion& e);
std::string to_string(const ManifoldCode& code);
SparseFaberExpansion expansion_from_string(const std::string& text);
ManifoldCode manifold_from_string(const std::string& text);

void save_manifold(const std::string& path, const ManifoldCode& code);
ManifoldCode load_manifold(const std::string& path);

} // namespace faber
