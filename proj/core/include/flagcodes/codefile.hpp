#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "flagcodes/flag.hpp"
#include "flagcodes/subspace.hpp"

namespace flagcodes {

/// Field line of a code file: GF(p^e), plus the (k, s) of the extension
/// tower for codes built from a spread.
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  std::optional<std::pair<std::size_t, std::size_t>> tower;

  FieldPtr make() const { return make_field(p, e); }
};

/// Text form:
///
///   FLAGCODE v1
///   field p=<p> e=<e> [tower=<k>,<s>]
///   ambient n=<n>
///   type t1,...,tr
///   count <N>
///   flag
///   subspace k=<t1>
///   <t1 rows of n element integers>
///   ...
///
/// Subspace-code files use SUBCODE v1, a single dimension on the type
/// line and no `flag` lines.
std::string serialize_flag_code(const FlagCode& code, const FieldSpec& spec);
std::string serialize_subspace_code(const SubspaceCode& code, const FieldSpec& spec);

struct FlagCodeFile {
  FieldSpec field;
  FlagCode code;
};

struct SubspaceCodeFile {
  FieldSpec field;
  SubspaceCode code;
};

/// Throw ParseError with the 1-based line and column of the first problem.
FlagCodeFile parse_flag_code(const std::string& text);
SubspaceCodeFile parse_subspace_code(const std::string& text);

}  // namespace flagcodes
