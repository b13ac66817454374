#pragma once

#include "oscillab/seq/weight_sequence.hpp"

#include <iosfwd>
#include <string>

namespace oscillab::seq {

// CSV with header "n,re,im"; values printed with 17 significant digits.
void write_csv(const WeightSequence& c, std::ostream& out);
WeightSequence read_csv(std::istream& in, const std::string& source);

// Binary: magic "OSCS1", uint64 little-endian count, then (re, im) float64
// little-endian pairs.
inline constexpr char kBinaryMagic[] = "OSCS1";
void write_binary(const WeightSequence& c, std::ostream& out);
WeightSequence read_binary(std::istream& in, const std::string& source);

/// Loads a CSV, OSCS1 or GeneratorSpec JSON file (detected by content), or,
/// when `text` names no file, parses it as an inline generator spec.
WeightSequence load_sequence(const std::string& text);

}  // namespace oscillab::seq
