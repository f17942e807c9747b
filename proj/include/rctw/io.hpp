#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "rctw/decomposition.hpp"

namespace rctw {

/// Reads "p edge n m" / "e u v" text with 1-indexed vertices and "c" comment
/// lines. Throws ParseError naming the offending line.
Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(const std::string& path);
void write_dimacs(std::ostream& out, const Graph& g);

struct Fingerprint {
  int n = 0;
  int m = 0;
  std::uint64_t edge_hash = 0;  // order-independent sum of mixed edge codes

  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Graph& g);

struct DecompositionDocument {
  Fingerprint graph;
  NiceHTreeDecomposition decomposition;
};

inline constexpr int kDocumentVersion = 1;

/// JSON text; vertices are written 1-indexed.
std::string write_document(const Graph& g, const NiceHTreeDecomposition& d);

/// Throws ParseError on malformed JSON or a schema violation.
DecompositionDocument read_document(std::string_view text);
DecompositionDocument read_document_file(const std::string& path);

/// Throws FingerprintMismatch unless the document was written for g.
void require_fingerprint(const Graph& g, const DecompositionDocument& doc);

}  // namespace rctw
