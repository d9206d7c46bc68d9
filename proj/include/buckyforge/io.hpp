#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "buckyforge/triangulation.hpp"

namespace buckyforge {

// planar_code stream format: the ASCII header ">>planar_code<<" once, then
// per graph one record: vertex count, then for each vertex its clockwise
// neighbor list (1-indexed) terminated by a 0 byte. Values above 255 are
// escaped as 0x00 followed by a little-endian uint16 (needed for primal
// graphs beyond 255 vertices).
void write_planar_code_header(std::ostream& os);
void write_planar_code_record(std::ostream& os, const DualFullerene& g);
void write_planar_code_record(std::ostream& os, const PrimalFullerene& p);

// Reads and checks the stream header; throws MalformedHeader.
void read_planar_code_header(std::istream& is);

// Reads one record as 0-indexed rotation lists. Empty optional at a clean
// end of stream; TruncatedRecord when the stream stops mid-record.
std::optional<std::vector<std::vector<int>>> read_planar_code_record(std::istream& is);

// Human-readable adjacency text: a line with the vertex count, then one
// "v: n1 n2 ..." line per vertex (1-indexed, rotation order).
void write_adjacency_text(std::ostream& os, const DualFullerene& g);
void write_adjacency_text(std::ostream& os, const PrimalFullerene& p);

enum class OutputForm : std::uint8_t { Dual, Primal };
enum class OutputFormat : std::uint8_t { Planar, Text, None };

// One deliverable graph. Generation works in dual form; primal output is
// derived at write time.
struct OutputRecord {
  DualFullerene dual;
};

// Serializes rec in the requested format/form (planar records assume the
// header was written once already). Throws SinkFailure when os fails.
void write_record(std::ostream& os, const OutputRecord& rec, OutputFormat format,
                  OutputForm form);

}  // namespace buckyforge
