#pragma once

#include <optional>
#include <string>

#include "hopfforge/deformation.hpp"

namespace hopfforge {

// Canonical JSON: sorted keys, sparse entries sorted by index tuple, compact,
// one trailing newline. Every reader throws ParseError on malformed input.

// A Hopf algebra document may record how it was built.
struct HopfDocument {
  HopfData A;
  std::string construction;             // "", "bosonization", "presented", "deformed", ...
  std::optional<LiftingData> lifting;   // source lifting data, when any
};

std::string schema_of(const std::string& text);

std::string hopfdata_to_json(const HopfData& A, const std::string& construction = {},
                             const LiftingData* lifting = nullptr);
HopfDocument hopfdata_from_json(const std::string& text);

std::string ydmodule_to_json(const YDModule& M);
YDModule ydmodule_from_json(const std::string& text);

std::string nichols_to_json(const NicholsData& B);
// Rebuilds B from the stored module and checks the stored structure constants.
NicholsData nichols_from_json(const std::string& text);

std::string lifting_to_json(const LiftingData& d);
LiftingData lifting_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace hopfforge
